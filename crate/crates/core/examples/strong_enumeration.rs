//! Strong modules of an arbitrary relation through overlap classes of the
//! Z family.
//!
//! Run with `cargo run --example strong_enumeration`.

use homrel::family::GeneralizedTree;
use homrel::fixtures;
use homrel::gen;
use homrel::strong::{overlap_classes, strong_modules, z_family};

fn print_tree(t: &GeneralizedTree) {
    let mut stack = vec![(t.root, 0)];
    while let Some((v, depth)) = stack.pop() {
        println!("{}{:?}", "  ".repeat(depth), t.nodes[v].elements);
        stack.extend(t.nodes[v].children.iter().rev().map(|&c| (c, depth + 1)));
    }
}

fn main() -> Result<(), homrel::error::Error> {
    let k = fixtures::relation_k();
    let z = z_family(&k)?;
    println!("Z family of relation K: {:?}", z.members);
    for class in overlap_classes(&z) {
        println!("  overlap class {:?}: support {:?}, atoms {:?}", class.members, class.support, class.atoms);
    }
    println!("strong modules of K:");
    print_tree(&strong_modules(&k));

    // random class assignments are usually not good, but their strong
    // modules are still well defined
    let h = gen::random_relation(9, 2, 17);
    let t = strong_modules(&h);
    println!("random relation on 9 elements has {} strong modules:", t.len());
    print_tree(&t);
    Ok(())
}
