//! Rendering decomposition trees as text and reading them back.
//!
//! Run with `cargo run --example tree_document`.

use homrel::document::{digest, TreeDocument};
use homrel::io::{parse_digraph, write_digraph};
use homrel::relation::from_digraph;
use homrel::{gen, good};

fn main() -> Result<(), homrel::error::Error> {
    let g = gen::random_graph(8, 0.3, 21);
    let text = write_digraph(&g, true);
    println!("input file:\n{text}");

    let g = parse_digraph(&text, true)?;
    let mut tree = good::decompose(&from_digraph(&g))?;
    tree.canonicalize();
    let labels: Vec<String> = "abcdefgh".chars().map(String::from).collect();
    let mut doc = TreeDocument::from_tree(&tree, &labels, "good", &digest(text.as_bytes()));
    doc.timings.push(("decompose".into(), 0.0));

    let rendered = doc.render();
    println!("{rendered}");
    let parsed = TreeDocument::parse(&rendered)?;
    println!("round trip exact: {}", parsed == doc);
    println!("modules by label: {:?}", parsed.module_sets());
    Ok(())
}
