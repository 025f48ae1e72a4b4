//! Build a Cayley graph from literals, solve it, and print the witness with
//! its full table of metric representations.
//!
//! Run with: cargo run --example cayley_from_group -- Z10 2,8,5
//! (defaults to that instance when no arguments are given)

use cayleydim::{
    all_pairs_distances, build_cayley, is_resolving, metric_dimension, metric::representation,
    twin_classes, AbelianGroup, ConnectionSet, DimensionOutcome,
};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (group_literal, set_literal) = match args.as_slice() {
        [g, s] => (g.as_str(), s.as_str()),
        _ => ("Z10", "2,8,5"),
    };

    let group: AbelianGroup = group_literal.parse().expect("group literal");
    let set = ConnectionSet::parse(&group, set_literal).expect("connection set literal");
    let graph = build_cayley(&group, &set);
    println!(
        "Cay({group}, {{{}}}): {} vertices, {} edges, {}-regular",
        set.format(&group),
        graph.vertex_count(),
        graph.edge_count(),
        set.len()
    );

    let dist = all_pairs_distances(&graph);
    println!("diameter: {:?}", dist.diameter());
    println!("twin classes: {:?}", twin_classes(&graph));

    match metric_dimension(&graph, &dist, 5).expect("connected graph") {
        DimensionOutcome::Exact { dim, witness } => {
            println!("metric dimension: {dim}");
            let labels: Vec<&str> = witness.iter().map(|&v| graph.label(v).unwrap()).collect();
            println!("witness (vertex indices {witness:?}, elements {labels:?})");
            println!("\nmetric representations relative to the witness:");
            for v in 0..graph.vertex_count() {
                println!(
                    "  {:>5} -> {:?}",
                    graph.label(v).unwrap(),
                    representation(&dist, v, &witness)
                );
            }
            let verdict = is_resolving(&graph, &dist, &witness).unwrap();
            assert!(verdict.is_resolving());
        }
        DimensionOutcome::ExceedsCap { cap } => {
            println!("metric dimension exceeds the search cap {cap}");
        }
    }
}
