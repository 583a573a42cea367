//! The strong-module tree from a factoring permutation, in quadratic time.
//!
//! Run with `cargo run --example factoring_permutation`.

use homrel::factperm::{scan_intervals, tournament_factoring_permutation, tree_from_permutation, ScanOptions};
use homrel::gen;
use homrel::relation::{from_digraph, Digraph};

fn main() -> Result<(), homrel::error::Error> {
    // a 3-cycle {0, 1, 2} beaten by 3 and beating 4, with 3 -> 4
    let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4)];
    arcs.extend((0..3).flat_map(|v| [(3, v), (v, 4)]));
    let g = Digraph::from_arcs(5, arcs)?;
    let h = from_digraph(&g);

    let sigma = tournament_factoring_permutation(&g)?;
    println!("factoring permutation: {:?}", sigma.order());
    let scan = scan_intervals(&h, &sigma, ScanOptions { check_invariant: true, validate_modules: true })?;
    println!("module intervals (positions): {:?}", scan.found);
    println!("strong intervals: {:?}", scan.strong);
    println!("difference-set insertions: {}", scan.insertions);

    let tree = tree_from_permutation(&h, &sigma)?;
    println!("strong modules: {:?}", tree.node_sets());

    // larger random tournament
    let g = gen::random_tournament(300, 5);
    let sigma = tournament_factoring_permutation(&g)?;
    let tree = tree_from_permutation(&from_digraph(&g), &sigma)?;
    println!("random tournament on 300 vertices: {} strong modules", tree.len());
    Ok(())
}
