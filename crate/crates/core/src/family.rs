//! Families of element subsets and the inclusion tree of a laminar family.

use std::collections::BTreeSet;

/// A list of subsets of `0..ground`. Members are sorted element lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub ground: usize,
    pub members: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(ground: usize, members: Vec<Vec<usize>>) -> Self {
        SetFamily { ground, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.members.iter().any(|m| m == set)
    }

    /// Sorts each member and drops repeats, keeping first occurrences.
    pub fn dedup(&mut self) {
        let mut seen = BTreeSet::new();
        self.members.iter_mut().for_each(|m| m.sort_unstable());
        self.members.retain(|m| seen.insert(m.clone()));
    }
}

/// `A` and `B` overlap: they intersect and neither contains the other.
/// Both slices must be sorted.
pub fn overlaps(a: &[usize], b: &[usize]) -> bool {
    let common = intersection_size(a, b);
    common > 0 && common < a.len() && common < b.len()
}

pub fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// A node of an inclusion tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub elements: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Rooted tree of element sets ordered by inclusion: the root is the ground
/// set, leaves are singletons and children of a node are pairwise disjoint.
/// This is the untyped tree of strong members of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedTree {
    pub n: usize,
    pub nodes: Vec<TreeNode>,
    pub root: usize,
}

impl GeneralizedTree {
    /// Orders a laminar family by inclusion. The ground set and all
    /// singletons are added if missing and repeats are dropped. Children are
    /// sorted by smallest element.
    ///
    /// Panics if two sets overlap.
    pub fn from_laminar(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut all: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .filter(|s| !s.is_empty())
            .collect();
        all.push((0..n).collect());
        all.extend((0..n).map(|e| vec![e]));
        // largest first; equal sizes of a laminar family are disjoint
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();

        let mut nodes: Vec<TreeNode> = Vec::with_capacity(all.len());
        // smallest node placed so far that contains each element
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for set in all {
            let id = nodes.len();
            let parent = owner[set[0]];
            if let Some(p) = parent {
                assert!(set.iter().all(|&e| owner[e] == Some(p)), "family is not laminar: {set:?}");
                nodes[p].children.push(id);
            }
            for &e in &set {
                owner[e] = Some(id);
            }
            nodes.push(TreeNode { elements: set, parent, children: Vec::new() });
        }
        for i in 0..nodes.len() {
            let mut ch = std::mem::take(&mut nodes[i].children);
            ch.sort_by_key(|&c| nodes[c].elements[0]);
            nodes[i].children = ch;
        }
        GeneralizedTree { n, nodes, root: 0 }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// All node sets, for order-free comparison.
    pub fn node_sets(&self) -> BTreeSet<Vec<usize>> {
        self.nodes.iter().map(|n| n.elements.clone()).collect()
    }

    /// Leaves in depth-first order.
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
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlap_predicate() {
        assert!(overlaps(&[0, 1], &[1, 2]));
        assert!(!overlaps(&[0, 1], &[0, 1, 2]));
        assert!(!overlaps(&[0, 1], &[2, 3]));
        assert!(!overlaps(&[0, 1], &[0, 1]));
    }

    #[test]
    fn laminar_tree() {
        let t = GeneralizedTree::from_laminar(5, vec![vec![3, 1], vec![0, 1, 3], vec![1, 3]]);
        assert_eq!(t.len(), 1 + 5 + 2);
        assert_eq!(t.nodes[t.root].elements, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.leaf_order(), vec![0, 1, 3, 2, 4]);
        let single = GeneralizedTree::from_laminar(1, Vec::new());
        assert_eq!(single.len(), 1);
    }

    #[test]
    #[should_panic]
    fn overlapping_sets_panic() {
        GeneralizedTree::from_laminar(3, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn dedup_family() {
        let mut f = SetFamily::new(3, vec![vec![1, 0], vec![0, 1], vec![2]]);
        f.dedup();
        assert_eq!(f.members, vec![vec![0, 1], vec![2]]);
    }
}
