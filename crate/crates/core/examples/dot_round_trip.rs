//! Export a Cayley graph to DOT and to the adjacency-list format, read both
//! back, and confirm the round trip preserves the graph up to isomorphism
//! (for DOT it is in fact identical, labels included).
//!
//! Run with: cargo run --example dot_round_trip

use cayleydim::{
    build_cayley, from_adjacency_list, from_dot, is_isomorphic, to_adjacency_list, to_dot,
    AbelianGroup, ConnectionSet,
};

fn main() {
    let group: AbelianGroup = "Z10".parse().unwrap();
    let set = ConnectionSet::parse(&group, "2,8,5").unwrap();
    let graph = build_cayley(&group, &set);

    let dot = to_dot(&graph, "pentagonal_prism");
    println!("{dot}");

    let from_dot_again = from_dot(&dot).unwrap();
    assert_eq!(from_dot_again, graph, "DOT round trip is exact");
    println!("DOT round trip: identical graph, labels preserved");

    let adjacency = to_adjacency_list(&graph);
    let from_text = from_adjacency_list(&adjacency).unwrap();
    assert!(is_isomorphic(&graph, &from_text).unwrap());
    println!("adjacency-list round trip: isomorphic (labels are not part of that format)");

    let path = std::env::temp_dir().join("cayleydim_example.dot");
    std::fs::write(&path, &dot).unwrap();
    let reloaded = from_dot(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(is_isomorphic(&graph, &reloaded).unwrap());
    println!("file round trip via {}: isomorphic", path.display());
}
