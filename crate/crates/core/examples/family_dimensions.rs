//! Solve the classical families exactly and line the results up against the
//! closed-form predictions: prisms (two for odd cycles, three for even),
//! hypercubes, and the antipodal circulants Cay(Z_n, {1, -1, n/2}).
//!
//! Run with: cargo run --example family_dimensions

use cayleydim::{
    all_pairs_distances, hypercube, metric_dimension, predict_antipodal_circulant, predict_prism,
    prism, AbelianGroup, ConnectionSet, PredictedValue,
};

fn main() {
    println!("prism P_m x C_n");
    println!("{:>3} {:>3} {:>10} {:>6}", "m", "n", "predicted", "solved");
    for m in 1..=3 {
        for n in 3..=8 {
            let graph = prism(m, n).unwrap();
            let dist = all_pairs_distances(&graph);
            let outcome = metric_dimension(&graph, &dist, 5).unwrap();
            let prediction = predict_prism(m, n);
            println!(
                "{:>3} {:>3} {:>10} {:>6}   {}",
                m,
                n,
                prediction.value.to_string(),
                outcome.dim().unwrap(),
                if prediction.value.admits(&outcome) { "ok" } else { "MISMATCH" },
            );
        }
    }

    println!("\nhypercubes");
    for d in 1..=4 {
        let graph = hypercube(d).unwrap();
        let dist = all_pairs_distances(&graph);
        let outcome = metric_dimension(&graph, &dist, 5).unwrap();
        println!(
            "  Q{d}: {} vertices, dim {}",
            graph.vertex_count(),
            outcome
                .dim()
                .map_or(">5".to_string(), |d| d.to_string())
        );
    }

    println!("\nantipodal circulants Cay(Z_n, {{1, -1, n/2}})");
    println!("{:>4} {:>10} {:>6}", "n", "predicted", "solved");
    for n in (6..=20u64).step_by(2) {
        let group = AbelianGroup::cyclic(n).unwrap();
        let set = ConnectionSet::parse(&group, &format!("1,-1,{}", n / 2)).unwrap();
        let graph = cayleydim::build_cayley(&group, &set);
        let dist = all_pairs_distances(&graph);
        let outcome = metric_dimension(&graph, &dist, 5).unwrap();
        let prediction = predict_antipodal_circulant(n);
        let marker = match &prediction.value {
            PredictedValue::NoClaim => "-",
            value if value.admits(&outcome) => "ok",
            _ => "MISMATCH",
        };
        println!(
            "{:>4} {:>10} {:>6}   {marker}",
            n,
            prediction.value.to_string(),
            outcome.dim().unwrap(),
        );
    }
}
