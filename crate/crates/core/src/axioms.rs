//! Axiom checks for homogeneous relations, each returning a counterexample
//! when the axiom fails.
//!
//! * weakly graphic: `H(y|xz) ∧ H(z|xy) ⇒ H(x|yz)`;
//! * weakly digraphic: `H(s|xy) ∧ H(t|xy) ∧ H(y|sx) ∧ H(y|tx) ⇒ H(x|st)`;
//! * modular quotient (good): for every module `M`, `x, y ∈ M` and
//!   `s, t ∉ M`, `H(x|st) ⇔ H(y|st)`.

use crate::modules::smallest_module;
use crate::oracle::{self, ORACLE_CAP};
use crate::relation::HomogeneousRelation;

/// Distinct `(x, y, z)` with `H(y|xz)`, `H(z|xy)` and `¬H(x|yz)`.
pub fn weakly_graphic_counterexample(h: &HomogeneousRelation) -> Option<[usize; 3]> {
    let n = h.len();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if x != y && x != z && !h.holds(x, y, z) && h.holds(y, x, z) && h.holds(z, x, y) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn is_weakly_graphic(h: &HomogeneousRelation) -> bool {
    weakly_graphic_counterexample(h).is_none()
}

/// Distinct `(x, y, s, t)` violating the weakly digraphic implication.
///
/// For each ordered pair `(x, y)` the elements `s` with `H(s|xy)` and
/// `H(y|sx)` must all share one class of `H_x`, which makes the scan cubic.
pub fn weakly_digraphic_counterexample(h: &HomogeneousRelation) -> Option<[usize; 4]> {
    let n = h.len();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let mut first: Option<usize> = None;
            for s in 0..n {
                if s == x || s == y || !h.holds(s, x, y) || !h.holds(y, s, x) {
                    continue;
                }
                match first {
                    None => first = Some(s),
                    Some(t) if !h.holds(x, s, t) => return Some([x, y, t, s]),
                    Some(_) => {}
                }
            }
        }
    }
    None
}

pub fn is_weakly_digraphic(h: &HomogeneousRelation) -> bool {
    weakly_digraphic_counterexample(h).is_none()
}

/// Module `module` with `x, y` inside and `s, t` outside such that exactly
/// one of `H(x|st)` and `H(y|st)` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientWitness {
    pub module: Vec<usize>,
    pub x: usize,
    pub y: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularQuotientReport {
    pub holds: bool,
    /// Whether every module was examined. Above the oracle cap only the
    /// smallest modules containing each pair are checked.
    pub exact: bool,
    pub witness: Option<QuotientWitness>,
}

/// Checks the modular quotient axiom, exactly for relations within the
/// oracle cap and over all `SM({x, y})` otherwise.
pub fn modular_quotient(h: &HomogeneousRelation) -> ModularQuotientReport {
    let n = h.len();
    let (exact, modules): (bool, Vec<Vec<usize>>) = if n <= ORACLE_CAP && n > 0 {
        let report = oracle::all_modules(h).expect("within cap");
        (true, report.module_sets())
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..n {
            for y in x + 1..n {
                seen.insert(smallest_module(h, &[x, y]).expect("valid pair"));
            }
        }
        (false, seen.into_iter().collect())
    };
    let witness = modules.iter().find_map(|m| quotient_violation(h, m));
    ModularQuotientReport { holds: witness.is_none(), exact, witness }
}

pub fn is_modular_quotient(h: &HomogeneousRelation) -> bool {
    modular_quotient(h).holds
}

/// Compares the slice of every member of `module` on the outside elements
/// with the slice of the smallest member.
fn quotient_violation(h: &HomogeneousRelation, module: &[usize]) -> Option<QuotientWitness> {
    let n = h.len();
    if module.len() < 2 || module.len() + 2 > n {
        return None;
    }
    let mut inside = vec![false; n];
    module.iter().for_each(|&e| inside[e] = true);
    let outside: Vec<usize> = (0..n).filter(|&e| !inside[e]).collect();
    let x = module[0];
    let mut forward = vec![0u32; n + 1];
    let mut backward = vec![0u32; n + 1];
    for &y in &module[1..] {
        forward.iter_mut().for_each(|v| *v = 0);
        backward.iter_mut().for_each(|v| *v = 0);
        let same = outside.iter().all(|&s| {
            let (a, b) = (h.class(x, s) as usize, h.class(y, s) as usize);
            let ok = (forward[a] == 0 || forward[a] as usize == b) && (backward[b] == 0 || backward[b] as usize == a);
            forward[a] = b as u32;
            backward[b] = a as u32;
            ok
        });
        if same {
            continue;
        }
        for (i, &s) in outside.iter().enumerate() {
            for &t in &outside[i + 1..] {
                if h.holds(x, s, t) != h.holds(y, s, t) {
                    return Some(QuotientWitness { module: module.to_vec(), x, y, s, t });
                }
            }
        }
    }
    None
}

/// All axiom verdicts for one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub weakly_graphic: Option<[usize; 3]>,
    pub weakly_digraphic: Option<[usize; 4]>,
    pub modular_quotient: ModularQuotientReport,
    /// `None` for fewer than two elements.
    pub local_congruence: Option<usize>,
}

pub fn check_axioms(h: &HomogeneousRelation) -> AxiomReport {
    AxiomReport {
        weakly_graphic: weakly_graphic_counterexample(h),
        weakly_digraphic: weakly_digraphic_counterexample(h),
        modular_quotient: modular_quotient(h),
        local_congruence: h.local_congruence().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::from_digraph;
    use crate::{fixtures, gen};
    use proptest::prelude::*;

    #[test]
    fn relation_k_axioms() {
        let k = fixtures::relation_k();
        assert!(is_weakly_graphic(&k));
        assert!(is_weakly_digraphic(&k));
        let report = modular_quotient(&k);
        assert!(!report.holds && report.exact);
        let w = report.witness.unwrap();
        assert_eq!(w.module, vec![0, 1]);
        assert_eq!((w.x, w.y, w.s, w.t), (0, 1, 2, 3));
        assert_eq!(k.local_congruence().unwrap(), 3);
    }

    #[test]
    fn relation_l_axioms() {
        let l = fixtures::relation_l();
        assert!(is_modular_quotient(&l));
        let [x, y, s, t] = weakly_digraphic_counterexample(&l).unwrap();
        assert!(l.holds(s, x, y) && l.holds(t, x, y) && l.holds(y, s, x) && l.holds(y, t, x));
        assert!(!l.holds(x, s, t));
        assert!(!is_weakly_graphic(&l));
    }

    #[test]
    fn approximate_mode_above_cap() {
        let g = gen::random_graph(20, 0.5, 3);
        let report = modular_quotient(&from_digraph(&g));
        assert!(report.holds && !report.exact);
    }

    proptest! {
        #[test]
        fn graphs_are_weakly_graphic(seed in any::<u64>(), n in 1usize..10) {
            let h = from_digraph(&gen::random_graph(n, 0.5, seed));
            prop_assert!(is_weakly_graphic(&h));
            prop_assert!(is_modular_quotient(&h));
        }

        #[test]
        fn digraphs_are_weakly_digraphic(seed in any::<u64>(), n in 1usize..10) {
            let h = from_digraph(&gen::random_digraph(n, 0.5, seed));
            prop_assert!(is_weakly_digraphic(&h));
            prop_assert!(is_modular_quotient(&h));
        }

        #[test]
        fn graphic_implies_digraphic(seed in any::<u64>(), n in 3usize..8) {
            let h = gen::random_relation(n, 2, seed);
            if is_weakly_graphic(&h) {
                prop_assert!(is_weakly_digraphic(&h));
                if h.local_congruence().unwrap() == 2 {
                    prop_assert!(is_modular_quotient(&h));
                }
            }
        }
    }
}
