//! Homogeneous relations derived from connectivity and distance in an
//! undirected graph.

use std::collections::VecDeque;

use crate::error::{invalid, Result};
use crate::relation::{Digraph, HomogeneousRelation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityMode {
    /// `H(s|xy)`: `x` and `y` are joined by a path avoiding `s`.
    Vertex,
    /// `H(s|xy)`: `x` and `y` are joined by a path avoiding the closed
    /// neighbourhood of `s`. Neighbours of `s` get singleton classes.
    Neighborhood,
}

fn require_symmetric(g: &Digraph) -> Result<()> {
    if g.is_symmetric() {
        Ok(())
    } else {
        invalid("graph must be undirected (symmetric)")
    }
}

/// Component labels of `g` with the `removed` vertices deleted. Removed
/// vertices get distinct labels of their own.
fn components_without(g: &Digraph, removed: &[bool]) -> Vec<usize> {
    let n = g.len();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        if !removed[start] {
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in g.out_neighbors(u) {
                    if !removed[v] && label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
        }
        next += 1;
    }
    label
}

pub fn connectivity_relation(g: &Digraph, mode: ConnectivityMode) -> Result<HomogeneousRelation> {
    require_symmetric(g)?;
    let n = g.len();
    let labels: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut removed = vec![false; n];
            removed[s] = true;
            if mode == ConnectivityMode::Neighborhood {
                g.out_neighbors(s).for_each(|v| removed[v] = true);
            }
            components_without(g, &removed)
        })
        .collect();
    Ok(HomogeneousRelation::from_keys(n, |s, y| labels[s][y]))
}

/// `H_s` has the two classes "within distance `k` of `s`" and "farther".
pub fn distance_relation(g: &Digraph, k: usize) -> Result<HomogeneousRelation> {
    require_symmetric(g)?;
    if k == 0 {
        return invalid("k must be positive");
    }
    let n = g.len();
    let near: Vec<Vec<bool>> = (0..n).map(|s| within(g, s, k)).collect();
    Ok(HomogeneousRelation::from_keys(n, |s, y| near[s][y]))
}

fn within(g: &Digraph, s: usize, k: usize) -> Vec<bool> {
    let mut dist = vec![usize::MAX; g.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == k {
            continue;
        }
        for v in g.out_neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist.into_iter().map(|d| d <= k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{gen, oracle, relation::from_digraph, strong};

    fn path(n: usize) -> Digraph {
        Digraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn path_vertex_connectivity() {
        let h = connectivity_relation(&path(3), ConnectivityMode::Vertex).unwrap();
        assert!(!h.holds(1, 0, 2));
        assert!(h.holds(0, 1, 2));
    }

    #[test]
    fn complete_graph_is_two_connected() {
        let k4 = Digraph::from_edges(4, (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))).unwrap();
        let h = connectivity_relation(&k4, ConnectivityMode::Vertex).unwrap();
        assert!((0..4).all(|s| h.congruence_of(s) == 1));
    }

    #[test]
    fn neighborhood_mode_uses_singletons() {
        // star with centre 0 and a path 1-2-3 hanging off leaf 1
        let g = Digraph::from_edges(5, [(0, 1), (0, 4), (1, 2), (2, 3)]).unwrap();
        let h = connectivity_relation(&g, ConnectivityMode::Neighborhood).unwrap();
        assert_eq!(h.classes_of(0), vec![vec![1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn distance_on_path() {
        let h = distance_relation(&path(4), 1).unwrap();
        assert_eq!(h.classes_of(0), vec![vec![1], vec![2, 3]]);
        let far = distance_relation(&path(4), 3).unwrap();
        assert!((0..4).all(|s| far.congruence_of(s) == 1));
        assert!(distance_relation(&path(4), 0).is_err());
    }

    #[test]
    fn distance_one_is_standard_relation() {
        for seed in 0..20 {
            let g = gen::random_graph(8, 0.4, seed);
            assert_eq!(distance_relation(&g, 1).unwrap(), from_digraph(&g));
        }
    }

    #[test]
    fn rejects_directed_input() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(connectivity_relation(&g, ConnectivityMode::Vertex).is_err());
        assert!(distance_relation(&g, 1).is_err());
    }

    #[test]
    fn connectivity_strong_modules_match_oracle() {
        for seed in 0..20 {
            let g = gen::random_graph(7, 0.35, seed);
            let h = connectivity_relation(&g, ConnectivityMode::Vertex).unwrap();
            let report = oracle::all_modules(&h).unwrap();
            assert_eq!(strong::strong_modules(&h).node_sets(), report.strong_sets());
        }
    }
}
