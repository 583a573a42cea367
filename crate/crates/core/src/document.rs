//! Text format for decomposition trees.
//!
//! ```text
//! homrel-tree 1
//! algorithm good
//! input sha256:9f86d0...
//! time-ms decompose 1.250
//! tree
//! linear
//!   leaf a
//!   degenerate
//!     leaf b
//!     leaf c
//!   leaf d
//! ```
//!
//! Each node sits on its own line, indented two spaces per level. Internal
//! nodes are `prime`, `linear`, `degenerate`, or `node` when untyped; leaves
//! are `leaf <label>`. Children of linear nodes appear in their order.
//! `time-ms` lines are optional.

use std::collections::BTreeSet;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::family::GeneralizedTree;
use crate::tree::{DecompositionTree, NodeKind};

pub const HEADER: &str = "homrel-tree 1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocKind {
    Leaf(String),
    Prime,
    Linear,
    Degenerate,
    Untyped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocNode {
    pub kind: DocKind,
    pub children: Vec<DocNode>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeDocument {
    pub algorithm: String,
    pub input_hash: String,
    pub timings: Vec<(String, f64)>,
    pub root: DocNode,
}

/// Hex SHA-256 of some bytes, used for the `input` line.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn label_of(labels: &[String], e: usize) -> String {
    labels.get(e).cloned().unwrap_or_else(|| e.to_string())
}

fn kind_of(kind: NodeKind) -> DocKind {
    match kind {
        NodeKind::Prime => DocKind::Prime,
        NodeKind::Linear => DocKind::Linear,
        NodeKind::Degenerate => DocKind::Degenerate,
        NodeKind::Leaf => DocKind::Untyped,
    }
}

/// Builds document nodes bottom-up from a child-list description.
fn build(
    root: usize,
    children: impl Fn(usize) -> Vec<usize>,
    kind: impl Fn(usize) -> DocKind,
) -> DocNode {
    let mut order = Vec::new();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(children(v));
    }
    let mut done: std::collections::HashMap<usize, DocNode> = std::collections::HashMap::new();
    for &v in order.iter().rev() {
        let ch = children(v).into_iter().map(|c| done.remove(&c).expect("child built first")).collect();
        done.insert(v, DocNode { kind: kind(v), children: ch });
    }
    done.remove(&root).expect("root built")
}

impl TreeDocument {
    pub fn from_tree(tree: &DecompositionTree, labels: &[String], algorithm: &str, input_hash: &str) -> Self {
        let root = build(
            tree.root,
            |v| tree.nodes[v].children.clone(),
            |v| {
                let node = &tree.nodes[v];
                if node.children.is_empty() {
                    DocKind::Leaf(label_of(labels, node.elements[0]))
                } else {
                    kind_of(node.kind)
                }
            },
        );
        TreeDocument { algorithm: algorithm.into(), input_hash: input_hash.into(), timings: Vec::new(), root }
    }

    /// Untyped tree; internal nodes render as `node`.
    pub fn from_generalized(tree: &GeneralizedTree, labels: &[String], algorithm: &str, input_hash: &str) -> Self {
        let root = build(
            tree.root,
            |v| tree.nodes[v].children.clone(),
            |v| {
                let node = &tree.nodes[v];
                if node.children.is_empty() {
                    DocKind::Leaf(label_of(labels, node.elements[0]))
                } else {
                    DocKind::Untyped
                }
            },
        );
        TreeDocument { algorithm: algorithm.into(), input_hash: input_hash.into(), timings: Vec::new(), root }
    }

    pub fn render(&self) -> String {
        let mut out = format!("{HEADER}\nalgorithm {}\ninput sha256:{}\n", self.algorithm, self.input_hash);
        for (name, ms) in &self.timings {
            out.push_str(&format!("time-ms {name} {ms:.3}\n"));
        }
        out.push_str("tree\n");
        let mut stack = vec![(&self.root, 0usize)];
        while let Some((node, depth)) = stack.pop() {
            out.push_str(&"  ".repeat(depth));
            match &node.kind {
                DocKind::Leaf(label) => {
                    out.push_str("leaf ");
                    out.push_str(label);
                }
                DocKind::Prime => out.push_str("prime"),
                DocKind::Linear => out.push_str("linear"),
                DocKind::Degenerate => out.push_str("degenerate"),
                DocKind::Untyped => out.push_str("node"),
            }
            out.push('\n');
            stack.extend(node.children.iter().rev().map(|c| (c, depth + 1)));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.into() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &str| lines.next().ok_or_else(|| err(0, &format!("missing {what}")));

        let (ln, header) = next("header")?;
        if header != HEADER {
            return Err(err(ln, "unknown header"));
        }
        let (ln, alg) = next("algorithm")?;
        let algorithm = alg.strip_prefix("algorithm ").ok_or_else(|| err(ln, "expected `algorithm`"))?.to_string();
        let (ln, input) = next("input")?;
        let input_hash = input.strip_prefix("input sha256:").ok_or_else(|| err(ln, "expected `input sha256:`"))?.to_string();
        let mut timings = Vec::new();
        loop {
            let (ln, line) = next("tree")?;
            if line == "tree" {
                break;
            }
            let rest = line.strip_prefix("time-ms ").ok_or_else(|| err(ln, "expected `time-ms` or `tree`"))?;
            let (name, ms) = rest.rsplit_once(' ').ok_or_else(|| err(ln, "malformed timing"))?;
            let ms: f64 = ms.parse().map_err(|_| err(ln, "malformed timing"))?;
            timings.push((name.to_string(), ms));
        }

        // open nodes along the current path, innermost last
        let mut path: Vec<DocNode> = Vec::new();
        let mut root: Option<DocNode> = None;
        for (ln, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let body = line.trim_start_matches(' ');
            let indent = line.len() - body.len();
            if indent % 2 != 0 {
                return Err(err(ln, "odd indentation"));
            }
            let depth = indent / 2;
            if root.is_some() || depth > path.len() || (depth == 0 && !path.is_empty()) {
                return Err(err(ln, "bad nesting"));
            }
            while path.len() > depth {
                close(&mut path, &mut root);
            }
            if depth > 0 && matches!(path.last().map(|n| &n.kind), Some(DocKind::Leaf(_))) {
                return Err(err(ln, "leaf cannot have children"));
            }
            let kind = match body {
                "prime" => DocKind::Prime,
                "linear" => DocKind::Linear,
                "degenerate" => DocKind::Degenerate,
                "node" => DocKind::Untyped,
                _ => match body.strip_prefix("leaf ") {
                    Some(label) if !label.is_empty() => DocKind::Leaf(label.to_string()),
                    _ => return Err(err(ln, "unknown node line")),
                },
            };
            path.push(DocNode { kind, children: Vec::new() });
        }
        while !path.is_empty() {
            close(&mut path, &mut root);
        }
        let root = root.ok_or_else(|| err(0, "empty tree"))?;
        Ok(TreeDocument { algorithm, input_hash, timings, root })
    }

    /// Label sets of all nodes, each sorted, for order-free comparison.
    pub fn module_sets(&self) -> BTreeSet<Vec<String>> {
        let mut out = BTreeSet::new();
        self.collect(&self.root, &mut out);
        out
    }

    fn collect(&self, node: &DocNode, out: &mut BTreeSet<Vec<String>>) -> Vec<String> {
        let mut labels = match &node.kind {
            DocKind::Leaf(l) => vec![l.clone()],
            _ => node.children.iter().flat_map(|c| self.collect(c, out)).collect(),
        };
        labels.sort();
        out.insert(labels.clone());
        labels
    }
}

fn close(path: &mut Vec<DocNode>, root: &mut Option<DocNode>) {
    let node = path.pop().expect("nonempty path");
    match path.last_mut() {
        Some(parent) => parent.children.push(node),
        None => *root = Some(node),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{from_digraph, Digraph};
    use crate::{good, strong};

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn round_trip() {
        let g = Digraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
        let h = from_digraph(&g);
        let mut tree = good::decompose(&h).unwrap();
        tree.canonicalize();
        let mut doc = TreeDocument::from_tree(&tree, &labels(&["a", "b", "c", "d", "e"]), "good", &digest(b"x"));
        doc.timings.push(("decompose".into(), 0.5));
        let text = doc.render();
        assert!(text.starts_with("homrel-tree 1\nalgorithm good\ninput sha256:2d711642"));
        assert_eq!(TreeDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn untyped_trees_render_as_node() {
        let h = from_digraph(&Digraph::from_edges(3, [(0, 1)]).unwrap());
        let doc = TreeDocument::from_generalized(&strong::strong_modules(&h), &[], "strong-enum", "00");
        let text = doc.render();
        assert!(text.contains("\nnode\n  node\n    leaf 0\n    leaf 1\n  leaf 2\n"));
        let sets = TreeDocument::parse(&text).unwrap().module_sets();
        assert!(sets.contains(&vec!["0".to_string(), "1".to_string()]));
        assert_eq!(sets.len(), 5);
    }

    #[test]
    fn parse_errors() {
        assert!(TreeDocument::parse("").is_err());
        assert!(TreeDocument::parse("homrel-tree 2\n").is_err());
        let base = "homrel-tree 1\nalgorithm good\ninput sha256:00\ntree\n";
        assert!(TreeDocument::parse(base).is_err());
        assert!(TreeDocument::parse(&format!("{base}prime\n   leaf a\n")).is_err());
        assert!(TreeDocument::parse(&format!("{base}leaf a\n  leaf b\n")).is_err());
        assert!(TreeDocument::parse(&format!("{base}leaf a\nleaf b\n")).is_err());
        assert!(TreeDocument::parse(&format!("{base}banana\n")).is_err());
        assert!(TreeDocument::parse(&format!("{base}prime\n    leaf a\n")).is_err());
    }
}
