//! Recognition of standard relations of undirected graphs and tournaments.
//!
//! A relation is *graphic* when every element has at most two classes and
//! every three-element restriction has 0 or 2 elements with two classes; it
//! is *tournamental* when the count is 1 or 3. These are exactly the
//! standard relations of graphs and of tournaments respectively.

use crate::relation::{from_digraph, Digraph, HomogeneousRelation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Graph,
    Tournament,
}

/// Number of elements of `{a, b, c}` with two classes in the restriction.
fn split_count(h: &HomogeneousRelation, a: usize, b: usize, c: usize) -> usize {
    [!h.holds(a, b, c), !h.holds(b, a, c), !h.holds(c, a, b)].iter().filter(|&&s| s).count()
}

fn passes_triples(h: &HomogeneousRelation, target: Target) -> bool {
    let n = h.len();
    if (0..n).any(|x| h.congruence_of(x) > 2) {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let k = split_count(h, a, b, c);
                let ok = match target {
                    Target::Graph => k == 0 || k == 2,
                    Target::Tournament => k == 1 || k == 3,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the relation is graphic, by the cubic triple test.
pub fn is_graphic(h: &HomogeneousRelation) -> bool {
    passes_triples(h, Target::Graph)
}

/// Whether the relation is tournamental, by the cubic triple test.
pub fn is_tournamental(h: &HomogeneousRelation) -> bool {
    passes_triples(h, Target::Tournament)
}

/// `marked[u][w]`: `w` is a neighbour (graphs) or out-neighbour
/// (tournaments) of `u`. Element 0 takes the class holding 1; every other
/// `u` is placed by the class of `H_u` holding 0.
fn reconstruct(h: &HomogeneousRelation, target: Target) -> Digraph {
    let n = h.len();
    let mut g = Digraph::new(n);
    if n < 2 {
        return g;
    }
    let seed = h.class(0, 1);
    let marked_from_zero: Vec<bool> = (0..n).map(|w| w != 0 && h.class(0, w) == seed).collect();
    for u in 0..n {
        for w in 0..n {
            if u == w {
                continue;
            }
            let marked = if u == 0 {
                marked_from_zero[w]
            } else {
                let with_zero = h.class(u, w) == h.class(u, 0);
                match target {
                    // 0 adjacent to u means the class of 0 is N(u)
                    Target::Graph => with_zero == marked_from_zero[u],
                    // 0 -> u means the class of 0 is the in-neighbourhood
                    Target::Tournament => with_zero != marked_from_zero[u],
                }
            };
            if marked {
                g.add_arc(u, w).expect("distinct vertices in range");
            }
        }
    }
    g
}

fn recognize(h: &HomogeneousRelation, target: Target) -> Option<Digraph> {
    if !passes_triples(h, target) {
        return None;
    }
    let g = reconstruct(h, target);
    let shape_ok = match target {
        Target::Graph => g.is_symmetric(),
        Target::Tournament => g.is_tournament(),
    };
    (shape_ok && from_digraph(&g) == *h).then_some(g)
}

/// An undirected graph (as a symmetric digraph) whose standard relation is
/// `h`, if there is one. The graph or its complement may be returned.
pub fn recognize_graphic(h: &HomogeneousRelation) -> Option<Digraph> {
    recognize(h, Target::Graph)
}

/// A tournament whose standard relation is `h`, if there is one.
pub fn recognize_tournamental(h: &HomogeneousRelation) -> Option<Digraph> {
    recognize(h, Target::Tournament)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, gen};
    use proptest::prelude::*;

    #[test]
    fn five_cycle_round_trip() {
        let c5 = Digraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let h = from_digraph(&c5);
        let g = recognize_graphic(&h).unwrap();
        assert_eq!(from_digraph(&g), h);
        assert_eq!(g.arc_count(), 10);
        assert!(recognize_tournamental(&h).is_none());
    }

    #[test]
    fn relation_k_is_rejected() {
        let k = fixtures::relation_k();
        assert!(recognize_graphic(&k).is_none());
        assert!(recognize_tournamental(&k).is_none());
    }

    #[test]
    fn tiny_relations() {
        assert_eq!(recognize_graphic(&HomogeneousRelation::complete(1)).unwrap().len(), 1);
        let g = recognize_graphic(&HomogeneousRelation::complete(2)).unwrap();
        assert!(g.has_arc(0, 1) && g.has_arc(1, 0));
        let t = recognize_tournamental(&HomogeneousRelation::complete(2)).unwrap();
        assert!(t.has_arc(0, 1) && !t.has_arc(1, 0));
    }

    proptest! {
        #[test]
        fn graphs_round_trip(seed in any::<u64>(), n in 1usize..14, p in 0.0f64..1.0) {
            let h = from_digraph(&gen::random_graph(n, p, seed));
            let g = recognize_graphic(&h).unwrap();
            prop_assert_eq!(from_digraph(&g), h);
        }

        #[test]
        fn tournaments_round_trip(seed in any::<u64>(), n in 1usize..14) {
            let h = from_digraph(&gen::random_tournament(n, seed));
            let t = recognize_tournamental(&h).unwrap();
            prop_assert!(t.is_tournament());
            prop_assert_eq!(from_digraph(&t), h);
        }

        #[test]
        fn graph_relations_fail_tournament_test(seed in any::<u64>(), n in 3usize..10) {
            // graph relations have an even split count on every triple
            let h = from_digraph(&gen::random_graph(n, 0.5, seed));
            prop_assert!(is_graphic(&h));
            prop_assert!(!is_tournamental(&h));
        }
    }
}
