//! Ordered partition refinement.
//!
//! Elements sit in one array; every part owns a contiguous segment of it and
//! parts are chained in array order. Splitting a part rewrites its segment in
//! place, so the fragments take the old part's position in the chain and a
//! [`Group`] (a span of positions) keeps naming everything that descends from
//! a part, however often it has been split since.

use crate::error::{invalid, Result};
use crate::relation::HomogeneousRelation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartId(usize);

/// A span of positions `[start, end)` in the element array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Group {
    pub start: usize,
    pub end: usize,
}

/// Which parts a pivot may split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Within(Group),
}

/// A part that was split: its handle (kept by the first fragment) and the
/// span it covered before the split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub part: PartId,
    pub span: Group,
}

#[derive(Debug, Clone)]
struct Part {
    start: usize,
    end: usize,
    prev: Option<PartId>,
    next: Option<PartId>,
}

const ABSENT: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct Partition {
    elems: Vec<usize>,
    // element -> position, ABSENT when not in the ground set
    pos: Vec<usize>,
    // position -> part
    owner: Vec<PartId>,
    parts: Vec<Part>,
    first: Option<PartId>,
    count: usize,
    // scratch for bucket sorting, indexed by class id
    bucket_of_class: Vec<u32>,
    scratch: Vec<usize>,
}

impl Partition {
    /// `universe` bounds element values; `parts` lists the initial parts in
    /// order. Parts must be nonempty and pairwise disjoint.
    pub fn new(universe: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let total: usize = parts.iter().map(Vec::len).sum();
        let mut p = Partition {
            elems: Vec::with_capacity(total),
            pos: vec![ABSENT; universe],
            owner: Vec::with_capacity(total),
            parts: Vec::with_capacity(parts.len()),
            first: None,
            count: 0,
            bucket_of_class: vec![0; universe + 1],
            scratch: Vec::new(),
        };
        let mut prev: Option<PartId> = None;
        for part in parts {
            if part.is_empty() {
                return invalid("empty part");
            }
            let id = PartId(p.parts.len());
            let start = p.elems.len();
            for &e in part {
                if e >= universe || p.pos[e] != ABSENT {
                    return invalid(format!("bad or repeated element {e}"));
                }
                p.pos[e] = p.elems.len();
                p.elems.push(e);
                p.owner.push(id);
            }
            p.parts.push(Part { start, end: p.elems.len(), prev, next: None });
            match prev {
                Some(q) => p.parts[q.0].next = Some(id),
                None => p.first = Some(id),
            }
            prev = Some(id);
            p.count += 1;
        }
        Ok(p)
    }

    /// Number of elements in the ground set.
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.count
    }

    /// Concatenation of the parts, in order.
    pub fn order(&self) -> &[usize] {
        &self.elems
    }

    pub fn part_ids(&self) -> impl Iterator<Item = PartId> + '_ {
        std::iter::successors(self.first, move |id| self.parts[id.0].next)
    }

    pub fn elements(&self, id: PartId) -> &[usize] {
        let p = &self.parts[id.0];
        &self.elems[p.start..p.end]
    }

    pub fn span(&self, id: PartId) -> Group {
        let p = &self.parts[id.0];
        Group { start: p.start, end: p.end }
    }

    pub fn part_of(&self, e: usize) -> Option<PartId> {
        match self.pos.get(e) {
            Some(&q) if q != ABSENT => Some(self.owner[q]),
            _ => None,
        }
    }

    /// Parts as element lists, in order.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        self.part_ids().map(|id| self.elements(id).to_vec()).collect()
    }

    /// Number of unordered pairs lying in different parts.
    pub fn q_measure(&self) -> u64 {
        let pairs = |k: usize| (k as u64) * (k as u64).saturating_sub(1) / 2;
        let within: u64 = self.part_ids().map(|id| pairs(self.elements(id).len())).sum();
        pairs(self.len()) - within
    }

    /// Splits every part in `scope`, except the pivot's own part, along the
    /// classes of `H_pivot`. Returns the parts that actually split.
    pub fn refine_by_pivot(&mut self, h: &HomogeneousRelation, pivot: usize, scope: Scope) -> Vec<Split> {
        let own = self.part_of(pivot);
        let (start, end) = match scope {
            Scope::All => (0, self.elems.len()),
            Scope::Within(g) => (g.start, g.end.min(self.elems.len())),
        };
        let mut targets = Vec::new();
        let mut at = start;
        while at < end {
            let id = self.owner[at];
            at = self.parts[id.0].end;
            if Some(id) != own {
                targets.push(id);
            }
        }
        let mut splits = Vec::new();
        for id in targets {
            let span = self.span(id);
            if self.split(h, pivot, id) {
                splits.push(Split { part: id, span });
            }
        }
        splits
    }

    // Bucket-sorts one part by class of H_pivot; the fragments replace it in
    // the chain. Linear in the part size.
    fn split(&mut self, h: &HomogeneousRelation, pivot: usize, id: PartId) -> bool {
        let Part { start, end, .. } = self.parts[id.0];
        let size = end - start;
        if size < 2 {
            return false;
        }
        let row = h.row(pivot);
        let k = h.congruence_of(pivot);
        // bucket index per position; renumber used classes when the part is
        // smaller than the number of classes
        let mut nb = 0usize;
        let mut keys = std::mem::take(&mut self.scratch);
        keys.clear();
        if size < k {
            for &e in &self.elems[start..end] {
                let c = row[e] as usize;
                if self.bucket_of_class[c] == 0 {
                    nb += 1;
                    self.bucket_of_class[c] = nb as u32;
                }
                keys.push(self.bucket_of_class[c] as usize - 1);
            }
            for &e in &self.elems[start..end] {
                self.bucket_of_class[row[e] as usize] = 0;
            }
        } else {
            for &e in &self.elems[start..end] {
                let c = row[e] as usize;
                keys.push(c - 1);
                nb = nb.max(c);
            }
        }
        // counting sort, stable
        let mut counts = vec![0usize; nb + 1];
        for &b in &keys {
            counts[b + 1] += 1;
        }
        let used = counts.iter().filter(|&&c| c > 0).count();
        if used < 2 {
            self.scratch = keys;
            return false;
        }
        for b in 0..nb {
            counts[b + 1] += counts[b];
        }
        let mut sorted = vec![0usize; size];
        let mut next = counts.clone();
        for (i, &b) in keys.iter().enumerate() {
            sorted[next[b]] = self.elems[start + i];
            next[b] += 1;
        }
        self.scratch = keys;
        for (i, &e) in sorted.iter().enumerate() {
            self.elems[start + i] = e;
            self.pos[e] = start + i;
        }
        // chain the fragments in bucket order; the first keeps the handle
        let after = self.parts[id.0].next;
        let mut cur = id;
        let mut first = true;
        for b in 0..nb {
            let (s, e) = (start + counts[b], start + counts[b + 1]);
            if s == e {
                continue;
            }
            if first {
                self.parts[id.0].end = e;
                first = false;
                continue;
            }
            let new = PartId(self.parts.len());
            self.parts.push(Part { start: s, end: e, prev: Some(cur), next: None });
            self.parts[cur.0].next = Some(new);
            for q in s..e {
                self.owner[q] = new;
            }
            self.count += 1;
            cur = new;
        }
        self.parts[cur.0].next = after;
        if let Some(a) = after {
            self.parts[a.0].prev = Some(cur);
        }
        true
    }

    #[cfg(test)]
    fn check(&self) {
        let mut covered = 0;
        let mut prev = None;
        for id in self.part_ids() {
            let p = &self.parts[id.0];
            assert_eq!(p.start, covered);
            assert!(p.end > p.start);
            assert_eq!(p.prev, prev);
            for q in p.start..p.end {
                assert_eq!(self.owner[q], id);
                assert_eq!(self.pos[self.elems[q]], q);
            }
            covered = p.end;
            prev = Some(id);
        }
        assert_eq!(covered, self.elems.len());
    }
}
