//! Building homogeneous relations from graphs and 2-structures.
//!
//! Run with `cargo run --example relations_from_graphs`.

use homrel::graph_relations::{connectivity_relation, distance_relation, ConnectivityMode};
use homrel::relation::{from_digraph, from_two_structure, Digraph, HomogeneousRelation, TwoStructure};

fn show(name: &str, h: &HomogeneousRelation) {
    println!("{name}:");
    for x in 0..h.len() {
        println!("  H_{x}: {:?}", h.classes_of(x));
    }
}

fn main() -> Result<(), homrel::error::Error> {
    // the path 0-1-2-3: every vertex sees neighbours and non-neighbours
    let p4 = Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?;
    show("standard relation of P4", &from_digraph(&p4));

    // a tournament keeps in- and out-neighbours apart
    let cycle = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)])?;
    show("standard relation of the 3-cycle tournament", &from_digraph(&cycle));

    // 2-structures: one colour per ordered pair
    let t = TwoStructure::from_fn(4, |u, v| ((u + v) % 3) as u32);
    show("2-structure with colour (u + v) mod 3", &from_two_structure(&t));

    // connectivity: two vertices are alike for s when a path avoiding s
    // joins them
    let bowtie = Digraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    show("vertex connectivity of the bowtie", &connectivity_relation(&bowtie, ConnectivityMode::Vertex)?);
    show(
        "neighbourhood connectivity of the bowtie",
        &connectivity_relation(&bowtie, ConnectivityMode::Neighborhood)?,
    );

    // distance: near (at most k) versus far
    show("distance-2 relation of P4", &distance_relation(&p4, 2)?);
    Ok(())
}
