//! The Möbius ladder dimension claim is stated for an index n without saying
//! whether n counts vertices or rungs, and the two readings disagree with the
//! antipodal-circulant values on part of the range. This example evaluates
//! both conventions against the exact solver and prints the verdict.
//!
//! Run with: cargo run --example mobius_convention

use cayleydim::mobius_convention_report;

fn main() {
    let report = mobius_convention_report(24, 5).expect("parameters in range");

    println!(
        "{:>5} {:>7} | {:>8} {:>4} {:>6} {:>10} | {:>8} {:>4} {:>6} {:>10}",
        "param", "claim", "N(vert)", "dim", "claim?", "circulant?", "N(rungs)", "dim", "claim?",
        "circulant?"
    );
    for row in &report.rows {
        println!(
            "{:>5} {:>7} | {:>8} {:>4} {:>6} {:>10} | {:>8} {:>4} {:>6} {:>10}",
            row.parameter,
            row.claim.to_string(),
            row.vertices_vertex_count,
            row.vertices_dim.map_or("-".into(), |d| d.to_string()),
            row.vertices_matches_claim,
            row.vertices_matches_circulant,
            row.rungs_vertex_count,
            row.rungs_dim.map_or("-".into(), |d| d.to_string()),
            row.rungs_matches_claim,
            row.rungs_matches_circulant,
        );
    }
    println!("\nverdict: {}", report.verdict);
    println!("(the circulant column checks the solver against the exact n mod 4 values");
    println!(" for Cay(Z_N, {{1, -1, N/2}}) on the graph each convention actually builds)");

    println!("\nas JSON:\n{}", serde_json::to_string_pretty(&report).unwrap());
}
