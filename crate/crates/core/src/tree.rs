//! Typed modular decomposition trees.

use std::collections::{BTreeMap, BTreeSet};

use crate::family::GeneralizedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Leaf,
    /// No union of two or more (but not all) children is a module.
    Prime,
    /// Every union of children is a module.
    Degenerate,
    /// Children are ordered; a union of children is a module iff they are
    /// consecutive.
    Linear,
}

impl NodeKind {
    pub fn name(self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Prime => "prime",
            NodeKind::Degenerate => "degenerate",
            NodeKind::Linear => "linear",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub elements: Vec<usize>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Rooted tree of strong modules. Leaves are singletons, the root is the
/// ground set and the children of a node partition it. Child order only
/// carries meaning under [`NodeKind::Linear`] nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    pub n: usize,
    pub nodes: Vec<DecompNode>,
    pub root: usize,
}

impl DecompositionTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_sets(&self) -> BTreeSet<Vec<usize>> {
        self.nodes.iter().map(|n| n.elements.clone()).collect()
    }

    /// Kind and child count of every node, keyed by element set.
    pub fn kinds(&self) -> BTreeMap<Vec<usize>, (NodeKind, usize)> {
        self.nodes
            .iter()
            .map(|n| (n.elements.clone(), (n.kind, n.children.len())))
            .collect()
    }

    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            let node = &self.nodes[v];
            if node.children.is_empty() {
                out.extend_from_slice(&node.elements);
            }
            stack.extend(node.children.iter().rev());
        }
        out
    }

    /// Sum of squared child counts over all nodes.
    pub fn degree_square_sum(&self) -> usize {
        self.nodes.iter().map(|n| n.children.len() * n.children.len()).sum()
    }

    /// Sorts children by smallest element, except under linear nodes, which
    /// keep their order but are flipped so the first child has the smaller
    /// minimum of the two ends.
    pub fn canonicalize(&mut self) {
        for i in 0..self.nodes.len() {
            let mut ch = std::mem::take(&mut self.nodes[i].children);
            let min = |c: &usize| self.nodes[*c].elements[0];
            if self.nodes[i].kind == NodeKind::Linear {
                if ch.len() > 1 && min(&ch[0]) > min(&ch[ch.len() - 1]) {
                    ch.reverse();
                }
            } else {
                ch.sort_by_key(min);
            }
            self.nodes[i].children = ch;
        }
    }

    /// Children of the node whose element set is `set`, in stored order.
    pub fn children_of(&self, set: &[usize]) -> Option<Vec<Vec<usize>>> {
        let node = self.nodes.iter().find(|n| n.elements == set)?;
        Some(node.children.iter().map(|&c| self.nodes[c].elements.clone()).collect())
    }

    /// Drops the kinds.
    pub fn to_generalized(&self) -> GeneralizedTree {
        GeneralizedTree::from_laminar(self.n, self.nodes.iter().map(|n| n.elements.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> DecompositionTree {
        let leaf = |e| DecompNode { elements: vec![e], kind: NodeKind::Leaf, children: vec![] };
        DecompositionTree {
            n: 3,
            nodes: vec![
                DecompNode { elements: vec![0, 1, 2], kind: NodeKind::Linear, children: vec![3, 1, 2] },
                leaf(0),
                leaf(1),
                leaf(2),
            ],
            root: 0,
        }
    }

    #[test]
    fn canonical_linear_orientation() {
        let mut t = sample();
        t.canonicalize();
        assert_eq!(t.nodes[0].children, vec![2, 1, 3]);
        assert_eq!(t.leaf_order(), vec![1, 0, 2]);
        assert_eq!(t.degree_square_sum(), 9);
        assert_eq!(t.to_generalized().len(), 4);
    }
}
