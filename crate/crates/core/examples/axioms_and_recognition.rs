//! Axiom checks with counterexamples, and recognition of graph and
//! tournament relations.
//!
//! Run with `cargo run --example axioms_and_recognition`.

use homrel::axioms::{check_axioms, AxiomReport};
use homrel::fixtures;
use homrel::gen;
use homrel::recognize::{recognize_graphic, recognize_tournamental};
use homrel::relation::from_digraph;

fn print_report(name: &str, labels: &[&str], r: &AxiomReport) {
    let names = |v: &[usize]| v.iter().map(|&e| labels[e]).collect::<Vec<_>>().join(",");
    println!("{name}:");
    match r.weakly_graphic {
        None => println!("  weakly graphic"),
        Some(w) => println!("  not weakly graphic, see {}", names(&w)),
    }
    match r.weakly_digraphic {
        None => println!("  weakly digraphic"),
        Some(w) => println!("  not weakly digraphic, see {}", names(&w)),
    }
    match &r.modular_quotient.witness {
        None => println!("  modular quotient"),
        Some(w) => println!(
            "  not modular quotient: {} and {} lie in the module {{{}}} but disagree on ({}, {})",
            labels[w.x],
            labels[w.y],
            names(&w.module),
            labels[w.s],
            labels[w.t]
        ),
    }
    println!("  local congruence {:?}", r.local_congruence);
}

fn main() {
    let k = fixtures::relation_k();
    print_report("relation K", &fixtures::K_LABELS, &check_axioms(&k));
    print_report("relation L", &fixtures::L_LABELS, &check_axioms(&fixtures::relation_l()));

    let g = gen::random_graph(12, 0.4, 3);
    let h = from_digraph(&g);
    let back = recognize_graphic(&h).expect("standard relations of graphs are graphic");
    println!("graph with {} edges recovered with {} edges", g.arc_count() / 2, back.arc_count() / 2);
    println!("same relation: {}", from_digraph(&back) == h);

    let t = from_digraph(&gen::random_tournament(12, 3));
    println!("tournament recognized: {}", recognize_tournamental(&t).is_some());
    println!("K recognized as a graph: {}", recognize_graphic(&k).is_some());
}
