//! Strong modules from a factoring permutation.
//!
//! In a factoring permutation `σ` every strong module is an interval. The
//! sweep below moves a left boundary `i` from right to left and keeps the
//! right-free intervals `I_ij` (no splitter to the right of `σ(j)`) together
//! with their splitter sets, stored as differences: the splitters of the
//! `q`-th kept interval are the union of the first `q` difference sets. An
//! interval is a module exactly when all those sets are empty.

use crate::error::{invalid, Error, Result};
use crate::family::GeneralizedTree;
use crate::modules::is_module;
use crate::relation::{Digraph, HomogeneousRelation};

/// An ordering of `0..n`, listed by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoringPermutation {
    order: Vec<usize>,
}

impl FactoringPermutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &e in &order {
            if e >= n || seen[e] {
                return Err(Error::InvalidPermutation(format!("{order:?} is not a permutation of 0..{n}")));
            }
            seen[e] = true;
        }
        Ok(FactoringPermutation { order })
    }

    pub fn identity(n: usize) -> Self {
        FactoringPermutation { order: (0..n).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `position()[e]` is the index of `e` in the order.
    pub fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &e) in self.order.iter().enumerate() {
            pos[e] = p;
        }
        pos
    }

    /// Whether every node of `tree` occupies consecutive positions.
    pub fn factors(&self, tree: &GeneralizedTree) -> bool {
        let pos = self.position();
        tree.nodes.iter().all(|node| {
            let lo = node.elements.iter().map(|&e| pos[e]).min().unwrap_or(0);
            let hi = node.elements.iter().map(|&e| pos[e]).max().unwrap_or(0);
            hi + 1 - lo == node.elements.len()
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Recompute the splitter sets naively after every step and compare
    /// them with the stored differences. Quartic; for testing.
    pub check_invariant: bool,
    /// Check that every collected interval is a module.
    pub validate_modules: bool,
}

/// Result of the right-to-left sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalScan {
    /// Every interval of positions `(i, j)` that is a module, in
    /// lexicographic order.
    pub found: Vec<(usize, usize)>,
    /// Intervals of `found` overlapped by no other one.
    pub strong: Vec<(usize, usize)>,
    /// Number of element insertions into difference sets, moves included.
    pub insertions: usize,
}

const NONE: usize = usize::MAX;

/// The stack of right-free intervals and their splitter differences. The
/// last entry is the front of the list (the shortest interval).
struct Sweep {
    /// `(j, set id)` pairs.
    rf: Vec<(usize, usize)>,
    sets: Vec<Vec<usize>>,
    set_of: Vec<usize>,
    slot: Vec<usize>,
    insertions: usize,
}

impl Sweep {
    fn new(n: usize) -> Self {
        Sweep { rf: Vec::new(), sets: Vec::new(), set_of: vec![NONE; n], slot: vec![0; n], insertions: 0 }
    }

    fn remove(&mut self, e: usize) {
        let id = self.set_of[e];
        if id == NONE {
            return;
        }
        let at = self.slot[e];
        self.sets[id].swap_remove(at);
        if let Some(&moved) = self.sets[id].get(at) {
            self.slot[moved] = at;
        }
        self.set_of[e] = NONE;
    }

    fn insert(&mut self, id: usize, e: usize) {
        self.set_of[e] = id;
        self.slot[e] = self.sets[id].len();
        self.sets[id].push(e);
        self.insertions += 1;
    }

    fn add_to_front(&mut self, e: usize) {
        let front = self.rf.last().expect("list is nonempty").1;
        if self.set_of[e] != front {
            self.remove(e);
            self.insert(front, e);
        }
    }

    /// Drops the front interval and merges its differences into the next.
    fn pop_front(&mut self) {
        let (_, fst) = self.rf.pop().expect("list is nonempty");
        let snd = self.rf.last().expect("last interval is always right-free").1;
        for e in std::mem::take(&mut self.sets[fst]) {
            self.insert(snd, e);
        }
    }

    fn push_front(&mut self, j: usize) {
        self.sets.push(Vec::new());
        self.rf.push((j, self.sets.len() - 1));
    }
}

/// Runs the sweep and returns the module intervals.
pub fn scan_intervals(h: &HomogeneousRelation, sigma: &FactoringPermutation, opts: ScanOptions) -> Result<IntervalScan> {
    let n = h.len();
    if sigma.len() != n {
        return invalid(format!("permutation has {} elements, relation has {n}", sigma.len()));
    }
    if n == 0 {
        return invalid("empty relation");
    }
    let order = sigma.order();
    let mut sweep = Sweep::new(n);
    let mut found = Vec::new();
    for i in (0..n).rev() {
        let x = order[i];
        sweep.remove(x);
        // splitters of {σ(i), σ(i+1)}: the left ones join the front set,
        // the rightmost one decides which intervals stop being right-free
        let mut r = None;
        if i + 1 < n {
            let y = order[i + 1];
            for (l, &s) in order.iter().enumerate() {
                if l != i && l != i + 1 && !h.holds(s, x, y) {
                    if l < i {
                        sweep.add_to_front(s);
                    } else {
                        r = Some(l);
                    }
                }
            }
        }
        if let Some(r) = r {
            while sweep.rf.last().is_some_and(|&(j, _)| j < r) {
                sweep.pop_front();
            }
        }
        sweep.push_front(i);
        if opts.check_invariant {
            check_invariant(h, order, i, &sweep)?;
        }
        for &(j, id) in sweep.rf.iter().rev() {
            if !sweep.sets[id].is_empty() {
                break;
            }
            found.push((i, j));
        }
    }
    found.sort_unstable();
    if opts.validate_modules {
        for &(i, j) in &found {
            let mut set = order[i..=j].to_vec();
            set.sort_unstable();
            if !is_module(h, &set) {
                return Err(Error::InvalidPermutation(format!("positions {i}..={j} collected but not a module")));
            }
        }
    }
    let strong = drop_overlapped(n, &found);
    Ok(IntervalScan { found, strong, insertions: sweep.insertions })
}

fn check_invariant(h: &HomogeneousRelation, order: &[usize], i: usize, sweep: &Sweep) -> Result<()> {
    let n = order.len();
    let mut union: Vec<usize> = Vec::new();
    for &(j, id) in sweep.rf.iter().rev() {
        union.extend_from_slice(&sweep.sets[id]);
        let mut expected: Vec<usize> = Vec::new();
        for (l, &s) in order.iter().enumerate() {
            if l >= i && l <= j {
                continue;
            }
            let c = h.class(s, order[i]);
            if order[i..=j].iter().any(|&m| h.class(s, m) != c) {
                if l > j {
                    return Err(Error::InvalidPermutation(format!("interval {i}..={j} kept with a right splitter")));
                }
                expected.push(s);
            }
        }
        let mut got = union.clone();
        got.sort_unstable();
        expected.sort_unstable();
        if got != expected {
            return Err(Error::InvalidPermutation(format!(
                "splitters of {i}..={j}: stored {got:?}, actual {expected:?} (n = {n})"
            )));
        }
    }
    Ok(())
}

/// Sparse table answering range maximum queries.
struct RangeMax {
    levels: Vec<Vec<i64>>,
}

impl RangeMax {
    fn new(values: Vec<i64>) -> Self {
        let mut levels = vec![values];
        let mut width = 1;
        while 2 * width <= levels[0].len() {
            let prev = levels.last().expect("nonempty");
            let next: Vec<i64> = (0..prev.len() - width).map(|k| prev[k].max(prev[k + width])).collect();
            levels.push(next);
            width *= 2;
        }
        RangeMax { levels }
    }

    /// Maximum over `lo..hi`; `i64::MIN` for an empty range.
    fn query(&self, lo: usize, hi: usize) -> i64 {
        if lo >= hi {
            return i64::MIN;
        }
        let k = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        self.levels[k][lo].max(self.levels[k][hi - (1 << k)])
    }
}

/// Keeps the intervals that no other interval overlaps. `(i, j)` is
/// overlapped when some interval starts in `i+1..=j` and ends after `j`,
/// or ends in `i..j` and starts before `i`.
fn drop_overlapped(n: usize, intervals: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut max_end = vec![i64::MIN; n];
    let mut neg_min_start = vec![i64::MIN; n];
    for &(i, j) in intervals {
        max_end[i] = max_end[i].max(j as i64);
        neg_min_start[j] = neg_min_start[j].max(-(i as i64));
    }
    let ends = RangeMax::new(max_end);
    let starts = RangeMax::new(neg_min_start);
    intervals
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let neg_start = starts.query(i, j);
            ends.query(i + 1, j + 1) <= j as i64 && (neg_start == i64::MIN || -neg_start >= i as i64)
        })
        .collect()
}

/// The tree of strong modules, given a factoring permutation.
pub fn tree_from_permutation(h: &HomogeneousRelation, sigma: &FactoringPermutation) -> Result<GeneralizedTree> {
    tree_from_permutation_with(h, sigma, ScanOptions::default())
}

pub fn tree_from_permutation_with(
    h: &HomogeneousRelation,
    sigma: &FactoringPermutation,
    opts: ScanOptions,
) -> Result<GeneralizedTree> {
    let scan = scan_intervals(h, sigma, opts)?;
    let order = sigma.order();
    let sets = scan.strong.iter().map(|&(i, j)| order[i..=j].to_vec());
    Ok(GeneralizedTree::from_laminar(h.len(), sets))
}

/// A factoring permutation of a tournament by ordered partition
/// refinement: each element in turn splits its part into its
/// in-neighbours, itself and its out-neighbours.
pub fn tournament_factoring_permutation(g: &Digraph) -> Result<FactoringPermutation> {
    if !g.is_tournament() {
        return invalid("input is not a tournament");
    }
    let n = g.len();
    // parts form a linked list in order; part_of locates every element
    let mut parts: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut next: Vec<usize> = vec![NONE];
    let mut part_of = vec![0usize; n];
    for x in 0..n {
        let p = part_of[x];
        if parts[p].len() == 1 {
            continue;
        }
        let members = std::mem::take(&mut parts[p]);
        let (before, after): (Vec<usize>, Vec<usize>) =
            members.into_iter().filter(|&e| e != x).partition(|&e| g.has_arc(e, x));
        // reuse p for the in-neighbours (possibly empty), then {x}, then out
        let tail = next[p];
        let mut last = p;
        parts[p] = before;
        for piece in [vec![x], after] {
            if piece.is_empty() {
                continue;
            }
            let id = parts.len();
            piece.iter().for_each(|&e| part_of[e] = id);
            parts.push(piece);
            next.push(NONE);
            next[last] = id;
            last = id;
        }
        next[last] = tail;
    }
    let mut order = Vec::with_capacity(n);
    let mut cur = if n == 0 { NONE } else { 0 };
    while cur != NONE {
        order.extend_from_slice(&parts[cur]);
        cur = next[cur];
    }
    FactoringPermutation::new(order)
}
