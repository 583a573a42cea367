//! Exhaustive ground truth for small relations.
//!
//! Every nonempty subset is tested against the module definition directly;
//! strong modules, the decomposition tree and node kinds are then derived
//! from the complete module list without using any of the fast algorithms.
//! Subsets are `u32` bitmasks, so the ground set is capped at 16 elements.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::relation::HomogeneousRelation;
use crate::tree::{DecompNode, DecompositionTree, NodeKind};

pub const ORACLE_CAP: usize = 16;

/// Nodes with more children than this use a path search instead of trying
/// every child order when looking for a linear order.
const PERMUTATION_LIMIT: usize = 8;

fn to_mask(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &e| m | (1 << e))
}

fn to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|&e| mask & (1 << e) != 0).collect()
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub n: usize,
    /// All nonempty modules, as bitmasks in increasing order.
    pub modules: Vec<u32>,
    /// Modules overlapped by no other module.
    pub strong: Vec<u32>,
    pub tree: DecompositionTree,
    is_mod: Vec<bool>,
    // smallest module containing each pair
    pair_closure: Vec<u32>,
}

/// Enumerates all modules of `h` and derives the strong ones and the tree.
pub fn all_modules(h: &HomogeneousRelation) -> Result<OracleReport> {
    let n = h.len();
    if n > ORACLE_CAP {
        return Err(Error::OracleCap { n, cap: ORACLE_CAP });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("empty relation".into()));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // class_mask[s * n + y]: elements in the same class of H_s as y
    let mut class_mask = vec![0u32; n * n];
    for s in 0..n {
        for y in 0..n {
            if y != s {
                class_mask[s * n + y] = (0..n)
                    .filter(|&z| z != s && h.class(s, z) == h.class(s, y))
                    .fold(0, |m, z| m | (1 << z));
            }
        }
    }
    let mut is_mod = vec![false; 1 << n];
    let mut modules = Vec::new();
    for mask in 1..=full {
        let first = mask.trailing_zeros() as usize;
        let ok = (0..n).all(|s| mask & (1 << s) != 0 || mask & !class_mask[s * n + first] == 0);
        if ok {
            is_mod[mask as usize] = true;
            modules.push(mask);
        }
    }

    let mut pair_closure = vec![full; n * n];
    for &m in &modules {
        if m.count_ones() < 2 {
            continue;
        }
        for a in to_set(m) {
            for b in to_set(m) {
                pair_closure[a * n + b] &= m;
            }
        }
    }
    let strong: Vec<u32> = modules
        .iter()
        .copied()
        .filter(|&a| {
            a.count_ones() == 1
                || a == full
                || to_set(a).into_iter().all(|x| {
                    (0..n).filter(|&y| a & (1 << y) == 0).all(|y| pair_closure[x * n + y] & a == a)
                })
        })
        .collect();

    let mut report = OracleReport {
        n,
        modules,
        strong,
        tree: DecompositionTree { n, nodes: Vec::new(), root: 0 },
        is_mod,
        pair_closure,
    };
    report.tree = report.build_tree();
    Ok(report)
}

impl OracleReport {
    pub fn is_module(&self, set: &[usize]) -> bool {
        set.is_empty() || self.is_mod[to_mask(set) as usize]
    }

    pub fn module_sets(&self) -> Vec<Vec<usize>> {
        self.modules.iter().map(|&m| to_set(m)).collect()
    }

    pub fn strong_sets(&self) -> BTreeSet<Vec<usize>> {
        self.strong.iter().map(|&m| to_set(m)).collect()
    }

    pub fn is_prime(&self) -> bool {
        let full = self.full();
        self.modules.iter().all(|&m| m.count_ones() == 1 || m == full)
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    /// Intersection of all modules containing `s` (`s` nonempty).
    pub fn smallest_module(&self, s: &[usize]) -> Vec<usize> {
        let want = to_mask(s);
        to_set(self.modules.iter().filter(|&&m| m & want == want).fold(self.full(), |acc, &m| acc & m))
    }

    /// Union of all modules containing `x` but not `y`.
    pub fn z(&self, x: usize, y: usize) -> Vec<usize> {
        to_set(
            self.modules
                .iter()
                .filter(|&&m| m & (1 << x) != 0 && m & (1 << y) == 0)
                .fold(0, |acc, &m| acc | m),
        )
    }

    /// Maximal modules avoiding `x`, sorted.
    pub fn maxm(&self, x: usize) -> Vec<Vec<usize>> {
        let parts: BTreeSet<Vec<usize>> = (0..self.n).filter(|&y| y != x).map(|y| self.z(y, x)).collect();
        parts.into_iter().collect()
    }

    /// Whether the modules together with the empty set form a lattice under
    /// inclusion. Cubic in the number of modules.
    pub fn lattice_check(&self) -> bool {
        let mut family = self.modules.clone();
        family.push(0);
        let subset = |a: u32, b: u32| a & !b == 0;
        family.iter().all(|&a| {
            family.iter().all(|&b| {
                let lower: Vec<u32> = family.iter().copied().filter(|&c| subset(c, a & b)).collect();
                let upper: Vec<u32> = family.iter().copied().filter(|&c| subset(a | b, c)).collect();
                let has_greatest = lower.iter().any(|&g| lower.iter().all(|&c| subset(c, g)));
                let has_least = upper.iter().any(|&l| upper.iter().all(|&c| subset(l, c)));
                has_greatest && has_least
            })
        })
    }

    /// Smallest module containing the pair `{a, b}`.
    pub fn pair_closure(&self, a: usize, b: usize) -> Vec<usize> {
        to_set(self.pair_closure[a * self.n + b])
    }

    fn build_tree(&self) -> DecompositionTree {
        let mut strong = self.strong.clone();
        strong.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        let mut nodes: Vec<DecompNode> = Vec::with_capacity(strong.len());
        let mut masks: Vec<u32> = Vec::with_capacity(strong.len());
        for &m in &strong {
            let id = nodes.len();
            // the smallest earlier node containing m is the last one found
            if let Some(p) = (0..id).rev().find(|&p| m & !masks[p] == 0) {
                nodes[p].children.push(id);
            }
            nodes.push(DecompNode { elements: to_set(m), kind: NodeKind::Leaf, children: Vec::new() });
            masks.push(m);
        }
        for i in 0..nodes.len() {
            if nodes[i].children.is_empty() {
                continue;
            }
            let child_masks: Vec<u32> = nodes[i].children.iter().map(|&c| masks[c]).collect();
            let (kind, order) = self.classify(&child_masks);
            let ch = nodes[i].children.clone();
            nodes[i].kind = kind;
            nodes[i].children = order.into_iter().map(|j| ch[j]).collect();
        }
        let mut tree = DecompositionTree { n: self.n, nodes, root: 0 };
        tree.canonicalize();
        tree
    }

    fn union_is_module(&self, children: &[u32], pick: u32) -> bool {
        let m = (0..children.len()).filter(|&j| pick & (1 << j) != 0).fold(0, |acc, j| acc | children[j]);
        self.is_mod[m as usize]
    }

    // Kind of a node from its children, plus the child order to store.
    fn classify(&self, children: &[u32]) -> (NodeKind, Vec<usize>) {
        let k = children.len();
        let identity: Vec<usize> = (0..k).collect();
        if k == 2 {
            return (NodeKind::Degenerate, identity);
        }
        let all: u32 = (1 << k) - 1;
        // unions of at least two children, short of all of them
        let partial: Vec<u32> = (1..all).filter(|p| p.count_ones() >= 2).collect();
        let module_unions: Vec<u32> = partial.iter().copied().filter(|&p| self.union_is_module(children, p)).collect();
        if module_unions.len() == partial.len() {
            return (NodeKind::Degenerate, identity);
        }
        if module_unions.is_empty() {
            return (NodeKind::Prime, identity);
        }
        let fits = |order: &[usize]| {
            let mut intervals = BTreeSet::new();
            for i in 0..k {
                let mut p = 0u32;
                for (len, &c) in order[i..].iter().enumerate() {
                    p |= 1 << c;
                    if len >= 1 && p != all {
                        intervals.insert(p);
                    }
                }
            }
            intervals == module_unions.iter().copied().collect::<BTreeSet<u32>>()
        };
        if k <= PERMUTATION_LIMIT {
            let mut order = identity.clone();
            if permutations_until(&mut order, 0, &fits) {
                return (NodeKind::Linear, order);
            }
        } else if let Some(order) = self.pair_path(children) {
            if fits(&order) {
                return (NodeKind::Linear, order);
            }
        }
        (NodeKind::Prime, identity)
    }

    // Hamiltonian path in the graph of children pairs whose union is a module.
    fn pair_path(&self, children: &[u32]) -> Option<Vec<usize>> {
        let k = children.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).filter(|&j| j != i && self.union_is_module(children, (1 << i) | (1 << j))).collect())
            .collect();
        let start = (0..k).find(|&i| adj[i].len() == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < k {
            let next = *adj[cur].iter().find(|&&j| j != prev)?;
            if order.contains(&next) {
                return None;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

fn permutations_until(order: &mut Vec<usize>, at: usize, fits: &dyn Fn(&[usize]) -> bool) -> bool {
    if at == order.len() {
        return fits(order);
    }
    for i in at..order.len() {
        order.swap(at, i);
        if permutations_until(order, at + 1, fits) {
            return true;
        }
        order.swap(at, i);
    }
    false
}

pub fn oracle_z(h: &HomogeneousRelation, x: usize, y: usize) -> Result<Vec<usize>> {
    Ok(all_modules(h)?.z(x, y))
}

pub fn oracle_maxm(h: &HomogeneousRelation, x: usize) -> Result<Vec<Vec<usize>>> {
    Ok(all_modules(h)?.maxm(x))
}

pub fn oracle_lattice_check(h: &HomogeneousRelation) -> Result<bool> {
    Ok(all_modules(h)?.lattice_check())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, gen, relation::from_digraph, Digraph};

    #[test]
    fn three_element_everything_is_a_module() {
        let r = all_modules(&fixtures::three_element()).unwrap();
        assert_eq!(r.modules.len(), 7);
        assert_eq!(r.z(0, 1), vec![0, 2]);
        assert_eq!(r.strong_sets().len(), 4);
        assert_eq!(r.tree.nodes[r.tree.root].kind, NodeKind::Degenerate);
    }

    #[test]
    fn relation_l_is_prime() {
        let r = all_modules(&fixtures::relation_l()).unwrap();
        assert!(r.is_prime());
        assert_eq!(r.modules.len(), 5 + 1);
        assert_eq!(r.maxm(2), vec![vec![0], vec![1], vec![3], vec![4]]);
    }

    #[test]
    fn relation_k_single_nontrivial_module() {
        let r = all_modules(&fixtures::relation_k()).unwrap();
        let nontrivial: Vec<Vec<usize>> = r.module_sets().into_iter().filter(|m| m.len() > 1 && m.len() < 4).collect();
        assert_eq!(nontrivial, vec![vec![0, 1]]);
    }

    #[test]
    fn cap_is_enforced() {
        let h = crate::HomogeneousRelation::complete(17);
        assert!(matches!(all_modules(&h), Err(Error::OracleCap { n: 17, cap: 16 })));
    }

    #[test]
    fn path_on_four_is_prime_and_transitive_tournament_is_linear() {
        let p4 = Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = all_modules(&from_digraph(&p4)).unwrap();
        assert_eq!(r.tree.nodes[r.tree.root].kind, NodeKind::Prime);
        assert_eq!(r.tree.len(), 5);

        let t = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = all_modules(&from_digraph(&t)).unwrap();
        let root = &r.tree.nodes[r.tree.root];
        assert_eq!(root.kind, NodeKind::Linear);
        assert_eq!(r.tree.leaf_order(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn linear_search_beyond_permutation_limit() {
        let n = 10;
        let arcs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let t = Digraph::from_arcs(n, arcs).unwrap();
        let r = all_modules(&from_digraph(&t)).unwrap();
        assert_eq!(r.tree.nodes[r.tree.root].kind, NodeKind::Linear);
        assert_eq!(r.tree.leaf_order(), (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn lattice_holds_on_random_relations() {
        for seed in 0..20 {
            let h = gen::random_relation(5, 2, seed);
            assert!(oracle_lattice_check(&h).unwrap());
        }
    }
}
