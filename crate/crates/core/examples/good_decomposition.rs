//! Quadratic decomposition of good relations: x-branches, the forcing
//! graph and the typed tree.
//!
//! Run with `cargo run --example good_decomposition`.

use homrel::good::{decompose_with, x_branch, DecomposeOptions, ForcingGraph};
use homrel::relation::{from_digraph, Digraph};
use homrel::tree::DecompositionTree;

fn print_tree(t: &DecompositionTree) {
    let mut stack = vec![(t.root, 0)];
    while let Some((v, depth)) = stack.pop() {
        let node = &t.nodes[v];
        println!("{}{} {:?}", "  ".repeat(depth), node.kind.name(), node.elements);
        stack.extend(node.children.iter().rev().map(|&c| (c, depth + 1)));
    }
}

fn main() -> Result<(), homrel::error::Error> {
    // P4 on {0,1,2,3} substituted for vertex 0 of a triangle {0,4,5},
    // with 6 a pendant vertex on 5
    let g = Digraph::from_edges(
        7,
        [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (5, 6)],
    )?;
    let h = from_digraph(&g);

    let branch = x_branch(&h, 0)?;
    println!("maximal modules avoiding 0: {:?}", branch.parts);
    let forcing = ForcingGraph::new(&h, 0, &branch.parts);
    for i in 0..forcing.len() {
        let forced: Vec<&Vec<usize>> = forcing.descendants(i).into_iter().map(|j| &branch.parts[j]).collect();
        println!("  part {:?} forces {:?}", branch.parts[i], forced);
    }
    println!("branch of 0: {:?}", branch.modules());

    let mut tree = decompose_with(&h, DecomposeOptions { defensive: true })?;
    tree.canonicalize();
    print_tree(&tree);

    // a transitive tournament decomposes into one linear node
    let t = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    print_tree(&decompose_with(&from_digraph(&t), DecomposeOptions::default())?);
    Ok(())
}
