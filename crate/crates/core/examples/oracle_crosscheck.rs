//! Comparing the fast algorithms against exhaustive enumeration.
//!
//! Run with `cargo run --example oracle_crosscheck`.

use homrel::factperm::{tree_from_permutation, FactoringPermutation};
use homrel::relation::from_two_structure;
use homrel::{gen, good, oracle, strong};

fn main() -> Result<(), homrel::error::Error> {
    let mut agreed = 0;
    for seed in 0..200 {
        let h = from_two_structure(&gen::random_two_structure(8, 2, seed));
        let report = oracle::all_modules(&h)?;
        let expected = report.strong_sets();

        let by_enumeration = strong::strong_modules(&h).node_sets();
        let by_decomposition = good::decompose(&h)?.node_sets();
        let sigma = FactoringPermutation::new(report.tree.leaf_order())?;
        let by_permutation = tree_from_permutation(&h, &sigma)?.node_sets();

        if by_enumeration == expected && by_decomposition == expected && by_permutation == expected {
            agreed += 1;
        } else {
            println!("seed {seed}: disagreement");
        }
    }
    println!("{agreed} of 200 random 2-structures agree with the oracle");

    let h = from_two_structure(&gen::random_two_structure(6, 2, 1));
    let report = oracle::all_modules(&h)?;
    println!("modules of one example: {:?}", report.module_sets());
    println!("modules form a lattice: {}", report.lattice_check());
    Ok(())
}
