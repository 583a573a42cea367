//! Strong modules of an arbitrary homogeneous relation.
//!
//! `Z(x, y)` is the largest module containing `x` and avoiding `y`; it is the
//! part of the maximal-modules partition at `y` that holds `x`. Every
//! nontrivial strong module is the support or an atom of an overlap class of
//! the family of all `Z(x, y)`, and supports (and atoms that are modules) are
//! always strong, which gives a cubic enumeration.

use crate::error::{invalid, Result};
use crate::family::{GeneralizedTree, SetFamily};
use crate::modules::{is_module, max_modules_within};
use crate::relation::HomogeneousRelation;

/// One connected component of the overlap graph of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapClass {
    /// Indices into the family, increasing.
    pub members: Vec<usize>,
    /// Union of the members, sorted.
    pub support: Vec<usize>,
    /// Maximal subsets of the support overlapping no member. They partition
    /// the support; each is sorted.
    pub atoms: Vec<Vec<usize>>,
}

impl OverlapClass {
    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// All distinct `Z(x, y)`, gathered row by row from the maximal-module
/// partitions. Needs at least two elements.
pub fn z_family(h: &HomogeneousRelation) -> Result<SetFamily> {
    let n = h.len();
    if n < 2 {
        return invalid("need at least 2 elements");
    }
    let ground: Vec<usize> = (0..n).collect();
    let mut family = SetFamily::new(n, Vec::new());
    for y in 0..n {
        family.members.extend(max_modules_within(h, &ground, y, None));
    }
    family.dedup();
    Ok(family)
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// Overlap classes of a family, in order of their first member.
///
/// Intersection sizes are counted through an element-to-members index, so
/// the cost is the sum over elements of the squared number of members
/// containing them.
pub fn overlap_classes(f: &SetFamily) -> Vec<OverlapClass> {
    let m = f.members.len();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); f.ground];
    for (i, member) in f.members.iter().enumerate() {
        for &e in member {
            containing[e].push(i);
        }
    }
    let mut uf = UnionFind::new(m);
    let mut common = vec![0usize; m];
    let mut touched = Vec::new();
    for (a, member) in f.members.iter().enumerate() {
        for &e in member {
            for &b in &containing[e] {
                if common[b] == 0 {
                    touched.push(b);
                }
                common[b] += 1;
            }
        }
        for &b in &touched {
            let c = common[b];
            if b != a && c < member.len() && c < f.members[b].len() {
                uf.union(a, b);
            }
            common[b] = 0;
        }
        touched.clear();
    }

    let mut class_of_root = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        let r = uf.find(i);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of_root[r]].push(i);
    }

    let mut mark = vec![false; f.ground];
    classes
        .into_iter()
        .map(|members| {
            let mut support = Vec::new();
            for &i in &members {
                for &e in &f.members[i] {
                    if !mark[e] {
                        mark[e] = true;
                        support.push(e);
                    }
                }
            }
            support.sort_unstable();
            // elements with the same membership vector form an atom
            let mut atoms = vec![support.clone()];
            for &i in &members {
                support.iter().for_each(|&e| mark[e] = false);
                f.members[i].iter().for_each(|&e| mark[e] = true);
                atoms = atoms
                    .into_iter()
                    .flat_map(|atom| {
                        let (inside, outside): (Vec<usize>, Vec<usize>) = atom.into_iter().partition(|&e| mark[e]);
                        [inside, outside].into_iter().filter(|p| !p.is_empty())
                    })
                    .collect();
            }
            support.iter().for_each(|&e| mark[e] = false);
            atoms.sort();
            OverlapClass { members, support, atoms }
        })
        .collect()
}

/// The generalised decomposition tree: all strong modules ordered by
/// inclusion. Works for any homogeneous relation in cubic time.
pub fn strong_modules(h: &HomogeneousRelation) -> GeneralizedTree {
    let n = h.len();
    if n < 2 {
        return GeneralizedTree::from_laminar(n, Vec::new());
    }
    let family = z_family(h).expect("n >= 2");
    let mut candidates = Vec::new();
    for class in overlap_classes(&family) {
        if !class.is_trivial() {
            candidates.extend(class.atoms.into_iter().filter(|a| is_module(h, a)));
        }
        candidates.push(class.support);
    }
    GeneralizedTree::from_laminar(n, candidates)
}
