//! Splitters, the module predicate and the basic module algorithms:
//! smallest module containing a set, maximal modules avoiding an element,
//! and the primality test.

use std::collections::VecDeque;

use crate::error::{invalid, Result};
use crate::family::SetFamily;
use crate::partition::{Group, Partition, Scope};
use crate::relation::HomogeneousRelation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitterReport {
    pub subset: Vec<usize>,
    pub splitters: Vec<usize>,
    pub count: usize,
}

fn checked_set(h: &HomogeneousRelation, a: &[usize]) -> Result<Vec<usize>> {
    if a.is_empty() {
        return invalid("subset must be nonempty");
    }
    let mut set = a.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&e) = set.last().filter(|&&e| e >= h.len()) {
        return invalid(format!("element {e} out of range"));
    }
    Ok(set)
}

/// Elements outside `a` that distinguish two members of `a`.
pub fn splitters(h: &HomogeneousRelation, a: &[usize]) -> Result<SplitterReport> {
    let subset = checked_set(h, a)?;
    let mut inside = vec![false; h.len()];
    subset.iter().for_each(|&e| inside[e] = true);
    let splitters: Vec<usize> = (0..h.len())
        .filter(|&s| !inside[s] && splits(h, s, &subset))
        .collect();
    Ok(SplitterReport { count: splitters.len(), subset, splitters })
}

#[inline]
fn splits(h: &HomogeneousRelation, s: usize, a: &[usize]) -> bool {
    let c = h.class(s, a[0]);
    a[1..].iter().any(|&m| h.class(s, m) != c)
}

/// Whether no outside element splits `a`. Sets of size at most one are
/// always modules.
pub fn is_module(h: &HomogeneousRelation, a: &[usize]) -> bool {
    if a.len() <= 1 {
        return true;
    }
    let mut inside = vec![false; h.len()];
    for &e in a {
        inside[e] = true;
    }
    (0..h.len()).all(|s| inside[s] || !splits(h, s, a))
}

/// The inclusion-minimal module containing `s`.
///
/// Grows `M` from the smallest element `x` of `s`; every element added as
/// `y` queues the elements `z` with `¬H(z|xy)`, which covers all splitters
/// of the grown set. Runs in `O(n * |result|)`.
pub fn smallest_module(h: &HomogeneousRelation, s: &[usize]) -> Result<Vec<usize>> {
    let s = checked_set(h, s)?;
    let n = h.len();
    let x = s[0];
    // 0 = untouched, 1 = frontier, 2 = in M
    let mut state = vec![0u8; n];
    state[x] = 2;
    let mut frontier: Vec<usize> = s[1..].to_vec();
    frontier.iter().for_each(|&y| state[y] = 1);
    let mut module = vec![x];
    while let Some(y) = frontier.pop() {
        state[y] = 2;
        module.push(y);
        for z in 0..n {
            if state[z] == 0 && !h.holds(z, x, y) {
                state[z] = 1;
                frontier.push(z);
            }
        }
    }
    module.sort_unstable();
    Ok(module)
}

/// The partition of `X \ {x}` into maximal modules that avoid `x`.
///
/// Starts from the classes of `H_x` and refines with pivots drawn from a
/// FIFO queue of active elements. Parts come out in refinement order.
pub fn max_modules_excluding(h: &HomogeneousRelation, x: usize) -> Result<SetFamily> {
    if h.len() < 2 {
        return invalid("need at least 2 elements");
    }
    if x >= h.len() {
        return invalid(format!("element {x} out of range"));
    }
    let ground: Vec<usize> = (0..h.len()).collect();
    Ok(SetFamily::new(h.len(), max_modules_within(h, &ground, x, None)))
}

/// Same as [`max_modules_excluding`] with the initial pivot queue given
/// explicitly. The result does not depend on the pivot order.
pub fn max_modules_with_pivot_order(h: &HomogeneousRelation, x: usize, pivots: &[usize]) -> Result<SetFamily> {
    if h.len() < 2 || x >= h.len() {
        return invalid("need at least 2 elements and x in range");
    }
    let ground: Vec<usize> = (0..h.len()).collect();
    Ok(SetFamily::new(h.len(), max_modules_within(h, &ground, x, Some(pivots))))
}

/// Maximal modules of `H[ground]` avoiding `x`, computed on `h` directly.
/// `ground` must be a module of `h` containing `x`, so outside pivots are
/// never needed. Cost is proportional to the number of separated pairs.
pub(crate) fn max_modules_within(
    h: &HomogeneousRelation,
    ground: &[usize],
    x: usize,
    pivots: Option<&[usize]>,
) -> Vec<Vec<usize>> {
    let n = h.len();
    let row = h.row(x);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); h.congruence_of(x)];
    for &e in ground {
        if e != x {
            classes[row[e] as usize - 1].push(e);
        }
    }
    classes.retain(|c| !c.is_empty());
    let mut part = Partition::new(n, &classes).expect("classes are disjoint");

    let mut queued = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::with_capacity(part.len());
    let seed: Box<dyn Iterator<Item = usize>> = match pivots {
        Some(p) => Box::new(p.iter().chain(ground).copied()),
        None => Box::new(ground.iter().copied()),
    };
    for y in seed {
        if y != x && part.part_of(y).is_some() && !queued[y] {
            queued[y] = true;
            queue.push_back(y);
        }
    }
    // span of the pivot's part when it was last used
    let mut last: Vec<Option<Group>> = vec![None; n];
    while let Some(y) = queue.pop_front() {
        queued[y] = false;
        let scope = last[y].map_or(Scope::All, Scope::Within);
        let splits = part.refine_by_pivot(h, y, scope);
        last[y] = Some(part.span(part.part_of(y).expect("pivot in ground")));
        for s in splits {
            for &e in &part.order()[s.span.start..s.span.end] {
                if !queued[e] {
                    queued[e] = true;
                    queue.push_back(e);
                }
            }
        }
    }
    part.parts()
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            p
        })
        .collect()
}

/// Whether only trivial modules exist.
pub fn is_prime(h: &HomogeneousRelation) -> bool {
    let n = h.len();
    if n <= 2 {
        return true;
    }
    let ground: Vec<usize> = (0..n).collect();
    for x in [0, 1] {
        if max_modules_within(h, &ground, x, None).iter().any(|m| m.len() > 1 && m.len() < n) {
            return false;
        }
    }
    smallest_module(h, &[0, 1]).map(|m| m.len() == n).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, gen};
    use proptest::prelude::*;

    #[test]
    fn splitters_of_ground_set_is_empty() {
        let h = gen::random_relation(6, 3, 4);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(splitters(&h, &all).unwrap().count, 0);
        assert!(splitters(&h, &[]).is_err());
        assert!(splitters(&h, &[6]).is_err());
    }

    #[test]
    fn relation_k_pair_is_module() {
        let k = fixtures::relation_k();
        assert!(splitters(&k, &[0, 1]).unwrap().splitters.is_empty());
        assert!(is_module(&k, &[0, 1]));
        assert_eq!(splitters(&k, &[2, 3]).unwrap().splitters, vec![0]);
    }

    #[test]
    fn trivial_modules() {
        let h = fixtures::relation_l();
        assert!(is_module(&h, &[]));
        assert!(is_module(&h, &[3]));
        assert!(is_module(&h, &[0, 1, 2, 3, 4]));
        assert!(is_module(&fixtures::three_element(), &[0, 1]));
    }

    #[test]
    fn smallest_module_basics() {
        let h = gen::random_relation(7, 2, 11);
        assert_eq!(smallest_module(&h, &[3]).unwrap(), vec![3]);
        assert_eq!(smallest_module(&h, &[0, 1, 2, 3, 4, 5, 6]).unwrap().len(), 7);
        assert!(smallest_module(&h, &[]).is_err());
        let l = fixtures::relation_l();
        for a in 0..5 {
            for b in a + 1..5 {
                assert_eq!(smallest_module(&l, &[a, b]).unwrap(), vec![0, 1, 2, 3, 4]);
            }
        }
    }

    #[test]
    fn max_modules_single_class_relation() {
        let h = HomogeneousRelation::complete(5);
        assert_eq!(max_modules_excluding(&h, 2).unwrap().members, vec![vec![0, 1, 3, 4]]);
        assert!(max_modules_excluding(&HomogeneousRelation::complete(1), 0).is_err());
    }

    #[test]
    fn max_modules_of_k_at_s() {
        let k = fixtures::relation_k();
        let mut parts = max_modules_excluding(&k, 2).unwrap().members;
        parts.sort();
        assert_eq!(parts, vec![vec![0, 1], vec![3]]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(&fixtures::relation_l()));
        assert!(!is_prime(&fixtures::relation_k()));
        assert!(is_prime(&HomogeneousRelation::complete(2)));
        assert!(!is_prime(&fixtures::three_element()));
    }

    proptest! {
        #[test]
        fn pivot_order_does_not_matter(seed in any::<u64>(), n in 2usize..9, rev in any::<bool>()) {
            let h = gen::random_relation(n, 2, seed);
            for x in 0..n {
                let mut order: Vec<usize> = (0..n).collect();
                if rev { order.reverse(); } else { order.rotate_left(seed as usize % n); }
                let mut a = max_modules_excluding(&h, x).unwrap().members;
                let mut b = max_modules_with_pivot_order(&h, x, &order).unwrap().members;
                a.sort();
                b.sort();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn smallest_module_is_a_module(seed in any::<u64>(), n in 2usize..10, picks in prop::collection::vec(0usize..10, 1..4)) {
            let h = gen::random_relation(n, 2, seed);
            let s: Vec<usize> = picks.into_iter().map(|p| p % n).collect();
            let m = smallest_module(&h, &s).unwrap();
            prop_assert!(s.iter().all(|e| m.contains(e)));
            prop_assert!(is_module(&h, &m));
        }
    }
}
