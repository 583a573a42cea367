//! Homogeneous relations and the structures they are built from.
//!
//! A homogeneous relation on `0..n` assigns to every element `x` a partition
//! of the remaining elements. It is stored as an `n x n` matrix of class ids:
//! entry `(x, y)` is the class of `y` in the slice `H_x`, and the diagonal is
//! zero. Class ids in each row are canonical (numbered from 1 in order of
//! first appearance), so two equal relations have identical storage.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{invalid, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousRelation {
    n: usize,
    classes: Vec<u32>,
    counts: Vec<u32>,
}

impl HomogeneousRelation {
    /// Builds a relation from a keying function: `y` and `z` share a class
    /// of `H_x` iff `key(x, y) == key(x, z)`.
    pub fn from_keys<K, F>(n: usize, mut key: F) -> Self
    where
        K: Eq + Hash,
        F: FnMut(usize, usize) -> K,
    {
        let mut classes = vec![0u32; n * n];
        let mut counts = vec![0u32; n];
        let mut ids: HashMap<K, u32> = HashMap::new();
        for x in 0..n {
            ids.clear();
            let row = &mut classes[x * n..(x + 1) * n];
            for (y, slot) in row.iter_mut().enumerate() {
                if y == x {
                    continue;
                }
                let next = ids.len() as u32 + 1;
                *slot = *ids.entry(key(x, y)).or_insert(next);
            }
            counts[x] = ids.len() as u32;
        }
        HomogeneousRelation { n, classes, counts }
    }

    /// Builds a relation from a raw row-major matrix of class labels. The
    /// diagonal is ignored and every off-diagonal label must be nonzero.
    pub fn from_matrix(n: usize, raw: &[u32]) -> Result<Self> {
        if raw.len() != n * n {
            return invalid(format!("expected {} entries, got {}", n * n, raw.len()));
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && raw[x * n + y] == 0 {
                    return invalid(format!("entry ({x},{y}) has class 0"));
                }
            }
        }
        Ok(Self::from_keys(n, |x, y| raw[x * n + y]))
    }

    /// Builds a relation from explicit class lists, one list of classes per
    /// element. Each row must partition the other elements.
    pub fn from_class_lists(n: usize, rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        if rows.len() != n {
            return invalid(format!("expected {n} rows, got {}", rows.len()));
        }
        let mut raw = vec![0u32; n * n];
        for (x, row) in rows.iter().enumerate() {
            for (c, class) in row.iter().enumerate() {
                for &y in class {
                    if y >= n || y == x {
                        return invalid(format!("row {x}: bad element {y}"));
                    }
                    if raw[x * n + y] != 0 {
                        return invalid(format!("row {x}: element {y} listed twice"));
                    }
                    raw[x * n + y] = c as u32 + 1;
                }
            }
            if let Some(y) = (0..n).find(|&y| y != x && raw[x * n + y] == 0) {
                return invalid(format!("row {x}: element {y} not covered"));
            }
        }
        Self::from_matrix(n, &raw)
    }

    /// The relation in which every slice has a single class.
    pub fn complete(n: usize) -> Self {
        Self::from_keys(n, |_, _| ())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Class id of `y` in `H_x` (0 when `x == y`).
    #[inline]
    pub fn class(&self, x: usize, y: usize) -> u32 {
        self.classes[x * self.n + y]
    }

    #[inline]
    pub fn row(&self, x: usize) -> &[u32] {
        &self.classes[x * self.n..(x + 1) * self.n]
    }

    /// `H(x|yz)`: `x` does not distinguish `y` from `z`.
    #[inline]
    pub fn holds(&self, x: usize, y: usize, z: usize) -> bool {
        debug_assert!(x != y && x != z);
        self.class(x, y) == self.class(x, z)
    }

    /// Number of classes of `H_x`.
    pub fn congruence_of(&self, x: usize) -> usize {
        self.counts[x] as usize
    }

    /// Maximum congruence over all elements. Needs at least two elements.
    pub fn local_congruence(&self) -> Result<usize> {
        if self.n < 2 {
            return invalid("local congruence needs at least 2 elements");
        }
        Ok((0..self.n).map(|x| self.congruence_of(x)).max().unwrap_or(0))
    }

    /// The classes of `H_x` as sorted element lists, in class-id order.
    pub fn classes_of(&self, x: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.congruence_of(x)];
        for (y, &c) in self.row(x).iter().enumerate() {
            if y != x {
                out[c as usize - 1].push(y);
            }
        }
        out
    }

    /// `H[A]`, reindexed so that `a[i]` becomes element `i`.
    pub fn induced(&self, a: &[usize]) -> Result<Self> {
        if a.is_empty() {
            return invalid("induced relation needs a nonempty subset");
        }
        let mut seen = vec![false; self.n];
        for &e in a {
            if e >= self.n || std::mem::replace(&mut seen[e], true) {
                return invalid(format!("bad or repeated element {e}"));
            }
        }
        Ok(Self::from_keys(a.len(), |i, j| self.class(a[i], a[j])))
    }

    /// Row-major copy of the class matrix.
    pub fn to_matrix(&self) -> Vec<u32> {
        self.classes.clone()
    }
}

impl std::fmt::Debug for HomogeneousRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for x in 0..self.n {
            list.entry(&self.classes_of(x));
        }
        list.finish()
    }
}

/// List representation: explicit classes per element with one class left out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListRelation {
    pub n: usize,
    pub lists: Vec<Vec<Vec<usize>>>,
}

impl ListRelation {
    /// Omits the largest class of each row; ties go to the class holding the
    /// smallest element.
    pub fn from_relation(h: &HomogeneousRelation) -> Self {
        let lists = (0..h.len())
            .map(|x| {
                let mut classes = h.classes_of(x);
                // classes are in first-appearance order, so the first of the
                // largest ones holds the smallest element among them
                let omit = classes
                    .iter()
                    .enumerate()
                    .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
                    .map(|(i, _)| i);
                if let Some(i) = omit {
                    classes.remove(i);
                }
                classes
            })
            .collect();
        ListRelation { n: h.len(), lists }
    }

    pub fn to_relation(&self) -> Result<HomogeneousRelation> {
        let n = self.n;
        if self.lists.len() != n {
            return invalid(format!("expected {n} rows, got {}", self.lists.len()));
        }
        let mut raw = vec![0u32; n * n];
        for (x, row) in self.lists.iter().enumerate() {
            for (c, class) in row.iter().enumerate() {
                for &y in class {
                    if y >= n || y == x || raw[x * n + y] != 0 {
                        return invalid(format!("row {x}: bad or repeated element {y}"));
                    }
                    raw[x * n + y] = c as u32 + 2;
                }
            }
            for y in 0..n {
                if y != x && raw[x * n + y] == 0 {
                    raw[x * n + y] = 1;
                }
            }
        }
        HomogeneousRelation::from_matrix(n, &raw)
    }

    /// Total number of listed elements.
    pub fn size(&self) -> usize {
        self.lists.iter().flatten().map(Vec::len).sum()
    }
}

/// A simple directed graph on `0..n`. Undirected graphs are symmetric digraphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, adj: vec![false; n * n] }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Undirected graph: each edge becomes two opposite arcs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return invalid(format!("arc ({u},{v}) out of range for {} vertices", self.n));
        }
        if u == v {
            return invalid(format!("self-loop on {u}"));
        }
        self.adj[u * self.n + v] = true;
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_arc(u, v)?;
        self.add_arc(v, u)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.has_arc(u, v)).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_arc(u, v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph({}, ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// An edge-coloured complete digraph: every ordered pair of distinct
/// vertices carries a colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStructure {
    n: usize,
    color: Vec<u32>,
}

impl TwoStructure {
    /// Row-major colours; the diagonal is ignored.
    pub fn from_matrix(n: usize, color: Vec<u32>) -> Result<Self> {
        if color.len() != n * n {
            return invalid(format!("expected {} colours, got {}", n * n, color.len()));
        }
        Ok(TwoStructure { n, color })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut color = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    color[u * n + v] = f(u, v);
                }
            }
        }
        TwoStructure { n, color }
    }

    /// Colour `1` on arcs, `0` elsewhere.
    pub fn from_digraph(g: &Digraph) -> Self {
        Self::from_fn(g.len(), |u, v| g.has_arc(u, v) as u32)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> u32 {
        self.color[u * self.n + v]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.color(u, v) == self.color(v, u)))
    }
}

impl From<&Digraph> for HomogeneousRelation {
    /// The standard relation: `H(x|uv)` iff `u` and `v` agree on being in-
    /// and out-neighbours of `x`.
    fn from(g: &Digraph) -> Self {
        HomogeneousRelation::from_keys(g.len(), |x, y| (g.has_arc(x, y), g.has_arc(y, x)))
    }
}

impl From<&TwoStructure> for HomogeneousRelation {
    fn from(t: &TwoStructure) -> Self {
        HomogeneousRelation::from_keys(t.len(), |x, y| (t.color(x, y), t.color(y, x)))
    }
}

pub fn from_digraph(g: &Digraph) -> HomogeneousRelation {
    g.into()
}

pub fn from_two_structure(t: &TwoStructure) -> HomogeneousRelation {
    t.into()
}
