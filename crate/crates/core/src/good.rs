//! Quadratic decomposition of good homogeneous relations.
//!
//! A relation is good when the members of any module see every outside pair
//! alike. For such relations the modules containing an element `x` on
//! the x-branch, all strong ones among them, come from the maximal modules avoiding `x`: order them by
//! a topological sort of the forcing graph and take prefix unions. Recursing
//! on every maximal module gives a tree of modules that contains all strong
//! ones (the SMDT); splicing out the weak nodes leaves the decomposition
//! tree.

use crate::axioms;
use crate::error::{invalid, Error, Result};
use crate::modules::{is_module, max_modules_within};
use crate::oracle::ORACLE_CAP;
use crate::relation::HomogeneousRelation;
use crate::tree::{DecompNode, DecompositionTree, NodeKind};

const NONE: usize = usize::MAX;

/// Induced relation on one representative per part (the smallest element),
/// preceded by `anchor` if given. Also returns the representatives.
pub fn quotient_relation(
    h: &HomogeneousRelation,
    parts: &[Vec<usize>],
    anchor: Option<usize>,
) -> Result<(HomogeneousRelation, Vec<usize>)> {
    let mut reps: Vec<usize> = anchor.into_iter().collect();
    for part in parts {
        match part.iter().min() {
            Some(&e) => reps.push(e),
            None => return invalid("empty part"),
        }
    }
    Ok((h.induced(&reps)?, reps))
}

/// Digraph on the representatives of the maximal modules avoiding `x`,
/// with an arc `(e_i, e_j)` when `e_j` splits `x` and `e_i`.
#[derive(Debug, Clone)]
pub struct ForcingGraph {
    pub x: usize,
    pub reps: Vec<usize>,
    arcs: Vec<bool>,
}

impl ForcingGraph {
    pub fn new(h: &HomogeneousRelation, x: usize, parts: &[Vec<usize>]) -> Self {
        let reps: Vec<usize> = parts.iter().map(|p| p.iter().copied().min().expect("nonempty part")).collect();
        let k = reps.len();
        let mut arcs = vec![false; k * k];
        for (i, &ei) in reps.iter().enumerate() {
            for (j, &ej) in reps.iter().enumerate() {
                arcs[i * k + j] = i != j && !h.holds(ej, x, ei);
            }
        }
        ForcingGraph { x, reps, arcs }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs[i * self.len() + j]
    }

    /// Vertices reachable from `i`, `i` included, sorted.
    pub fn descendants(&self, i: usize) -> Vec<usize> {
        let k = self.len();
        let mut seen = vec![false; k];
        seen[i] = true;
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for w in 0..k {
                if !seen[w] && self.has_arc(v, w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..k).filter(|&v| seen[v]).collect()
    }

    /// Strongly connected components, each listed after every component it
    /// reaches (sinks first). Iterative Tarjan.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.len();
        let mut index = vec![NONE; k];
        let mut low = vec![0; k];
        let mut on_stack = vec![false; k];
        let mut stack = Vec::new();
        let mut out = Vec::new();
        let mut counter = 0;
        for root in 0..k {
            if index[root] != NONE {
                continue;
            }
            let mut calls: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&(v, w)) = calls.last() {
                if w < k {
                    calls.last_mut().expect("nonempty").1 += 1;
                    if !self.has_arc(v, w) {
                        continue;
                    }
                    if index[w] == NONE {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        calls.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                calls.pop();
                if let Some(&(p, _)) = calls.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let u = stack.pop().expect("v is on the stack");
                        on_stack[u] = false;
                        comp.push(u);
                        if u == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
        out
    }
}

/// Parts of the maximal-modules partition that are added together when
/// going one step up the x-branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchGroup {
    /// Several parts forming a cycle in the forcing graph: the new strong
    /// module is prime and the parts are its children.
    Component(Vec<usize>),
    /// One part.
    Single(usize),
}

impl BranchGroup {
    pub fn parts(&self) -> Vec<usize> {
        match self {
            BranchGroup::Component(v) => v.clone(),
            BranchGroup::Single(a) => vec![*a],
        }
    }
}

/// The maximal modules avoiding `x`, grouped in branch order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XBranch {
    pub x: usize,
    pub parts: Vec<Vec<usize>>,
    pub groups: Vec<BranchGroup>,
}

impl XBranch {
    /// The branch modules containing `x`, from `{x}` up to the ground set.
    /// Every strong module containing `x` is among them.
    pub fn modules(&self) -> Vec<Vec<usize>> {
        let mut acc = vec![self.x];
        let mut out = vec![acc.clone()];
        for g in &self.groups {
            for i in g.parts() {
                acc.extend_from_slice(&self.parts[i]);
            }
            let mut m = acc.clone();
            m.sort_unstable();
            out.push(m);
        }
        out
    }
}

pub fn x_branch(h: &HomogeneousRelation, x: usize) -> Result<XBranch> {
    if h.len() < 2 || x >= h.len() {
        return invalid("need at least 2 elements and x in range");
    }
    let ground: Vec<usize> = (0..h.len()).collect();
    Ok(x_branch_within(h, &ground, x))
}

fn x_branch_within(h: &HomogeneousRelation, ground: &[usize], x: usize) -> XBranch {
    let parts = max_modules_within(h, ground, x, None);
    let g = ForcingGraph::new(h, x, &parts);
    let groups = g
        .components()
        .into_iter()
        .map(|comp| if comp.len() > 1 { BranchGroup::Component(comp) } else { BranchGroup::Single(comp[0]) })
        .collect();
    XBranch { x, parts, groups }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Leaf,
    Component,
    Single,
}

/// A node of the SMDT. Internal nodes lie on the x-branch of some
/// recursive call: `children[0]` is the next smaller branch module and the
/// remaining children are the subtrees of the parts added at this step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmdtNode {
    pub elements: Vec<usize>,
    pub children: Vec<usize>,
    pub shape: Shape,
}

/// Tree of modules containing every strong module, possibly with weak ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smdt {
    pub n: usize,
    pub nodes: Vec<SmdtNode>,
    pub root: usize,
}

impl Smdt {
    pub fn node_sets(&self) -> std::collections::BTreeSet<Vec<usize>> {
        self.nodes.iter().map(|n| n.elements.clone()).collect()
    }
}

/// Builds the SMDT with an explicit work stack, branching on the smallest
/// element of each module.
pub fn smdt(h: &HomogeneousRelation) -> Result<Smdt> {
    let n = h.len();
    if n == 0 {
        return invalid("empty relation");
    }
    let mut nodes: Vec<SmdtNode> = Vec::new();
    let leaf = |nodes: &mut Vec<SmdtNode>, e: usize| {
        nodes.push(SmdtNode { elements: vec![e], children: Vec::new(), shape: Shape::Leaf });
        nodes.len() - 1
    };
    let mut root = NONE;
    // ground set and the (parent, child slot) it fills
    type Task = (Vec<usize>, Option<(usize, usize)>);
    let mut work: Vec<Task> = vec![((0..n).collect(), None)];
    while let Some((ground, slot)) = work.pop() {
        let id = if ground.len() == 1 {
            leaf(&mut nodes, ground[0])
        } else {
            let x = *ground.iter().min().expect("nonempty");
            let XBranch { parts, groups, .. } = x_branch_within(h, &ground, x);
            let mut parts: Vec<Option<Vec<usize>>> = parts.into_iter().map(Some).collect();
            let mut prev = leaf(&mut nodes, x);
            let mut elements = vec![x];
            for group in groups {
                let shape = match group {
                    BranchGroup::Component(_) => Shape::Component,
                    BranchGroup::Single(_) => Shape::Single,
                };
                let members = group.parts();
                let node = nodes.len();
                let mut children = vec![prev];
                for (s, &i) in members.iter().enumerate() {
                    let part = parts[i].take().expect("each part used once");
                    elements.extend_from_slice(&part);
                    children.push(NONE);
                    work.push((part, Some((node, s + 1))));
                }
                elements.sort_unstable();
                nodes.push(SmdtNode { elements: elements.clone(), children, shape });
                prev = node;
            }
            prev
        };
        match slot {
            None => root = id,
            Some((p, s)) => nodes[p].children[s] = id,
        }
    }
    Ok(Smdt { n, nodes, root })
}

/// Type of the quotient of a node on its children's representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientType {
    Prime,
    /// Representatives (as given) in the order whose intervals are the
    /// modules.
    Linear(Vec<usize>),
    Complete,
}

/// Types a node from the pair modules of its quotient: complete when every
/// pair is a module, linear when they form a Hamiltonian path, prime when
/// there are none. Cubic in the number of representatives.
pub fn type_node(h: &HomogeneousRelation, reps: &[usize]) -> Result<QuotientType> {
    let k = reps.len();
    if k < 2 {
        return invalid("need at least 2 representatives");
    }
    let pair_module = |i: usize, j: usize| {
        (0..k).all(|z| z == i || z == j || h.holds(reps[z], reps[i], reps[j]))
    };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut edges = 0;
    for i in 0..k {
        for j in i + 1..k {
            if pair_module(i, j) {
                adj[i].push(j);
                adj[j].push(i);
                edges += 1;
            }
        }
    }
    if edges == k * (k - 1) / 2 {
        return Ok(QuotientType::Complete);
    }
    if edges == 0 {
        return Ok(QuotientType::Prime);
    }
    let ends: Vec<usize> = (0..k).filter(|&v| adj[v].len() == 1).collect();
    if edges == k - 1 && ends.len() == 2 && adj.iter().all(|a| a.len() <= 2) {
        let mut order = vec![ends[0]];
        let mut prev = NONE;
        let mut cur = ends[0];
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() == k {
            return Ok(QuotientType::Linear(order.into_iter().map(|i| reps[i]).collect()));
        }
    }
    Err(Error::NotGood(format!("quotient on {reps:?} is neither prime, linear nor complete")))
}

struct Finalizer<'a> {
    h: &'a HomogeneousRelation,
    t: &'a Smdt,
    out: Vec<DecompNode>,
    /// Kind and final children of processed SMDT nodes not yet emitted.
    built: Vec<Option<(NodeKind, Vec<usize>)>>,
}

impl Finalizer<'_> {
    /// Emits the node as part of the final tree and returns its id.
    fn emit(&mut self, v: usize) -> usize {
        let (kind, children) = self.built[v].take().expect("processed before use");
        self.out.push(DecompNode { elements: self.t.nodes[v].elements.clone(), kind, children });
        self.out.len() - 1
    }

    fn rep(&self, final_id: usize) -> usize {
        self.out[final_id].elements[0]
    }

    /// For a part subtree rooted at `p` and an element `a` of the sibling
    /// branch module: whether `{a, b}` and `{a, c}` are modules of
    /// `H[{a, b, c}]`, with `b` and `c` in the first and last children.
    fn weak_test(&self, p: usize, a: usize) -> Option<(bool, bool)> {
        let (kind, children) = self.built[p].as_ref()?;
        if *kind == NodeKind::Prime || children.len() < 2 {
            return None;
        }
        let b = self.rep(children[0]);
        let c = self.rep(children[children.len() - 1]);
        let ab = self.h.holds(c, a, b);
        let ac = self.h.holds(b, a, c);
        (ab || ac).then_some((ab, ac))
    }

    fn take_children(&mut self, p: usize) -> Vec<usize> {
        self.built[p].take().expect("processed").1
    }

    fn process(&mut self, v: usize) {
        let node = &self.t.nodes[v];
        if node.shape == Shape::Leaf {
            self.built[v] = Some((NodeKind::Leaf, Vec::new()));
            return;
        }
        let prev = node.children[0];
        let parts: Vec<usize> = node.children[1..].to_vec();
        let result = match node.shape {
            Shape::Component => {
                let mut children = vec![self.emit(prev)];
                for p in parts {
                    children.push(self.emit(p));
                }
                (NodeKind::Prime, children)
            }
            Shape::Single => {
                let q = parts[0];
                let p_test = self.weak_test(prev, self.t.nodes[q].elements[0]);
                let q_test = self.weak_test(q, self.t.nodes[prev].elements[0]);
                // the end of `prev` touching `q` goes last, the end of `q`
                // touching `prev` goes first
                let mut children = match p_test {
                    None => vec![self.emit(prev)],
                    Some((_, ac)) => {
                        let mut ch = self.take_children(prev);
                        if !ac {
                            ch.reverse();
                        }
                        ch
                    }
                };
                match q_test {
                    None => {
                        let id = self.emit(q);
                        children.push(id);
                    }
                    Some((ab, _)) => {
                        let mut ch = self.take_children(q);
                        if !ab {
                            ch.reverse();
                        }
                        children.extend(ch);
                    }
                }
                let complete = |t: Option<(bool, bool)>| t.is_none_or(|(ab, ac)| ab && ac);
                let kind = if complete(p_test) && complete(q_test) { NodeKind::Degenerate } else { NodeKind::Linear };
                (kind, children)
            }
            Shape::Leaf => unreachable!(),
        };
        self.built[v] = Some(result);
    }
}

/// Splices the weak nodes out of an SMDT and types the remaining nodes.
///
/// A node made of the previous branch module `P` and one part `Q` is not
/// prime, so each of `P` and `Q` is either a child or a weak union of
/// children. A side with first and last children holding `b` and `c` is
/// weak iff `{a, b}` or `{a, c}` is a module of `H[{a, b, c}]` for `a` on
/// the other side; the same test orients linear nodes.
pub fn remove_weak_and_finalize(h: &HomogeneousRelation, t: &Smdt) -> DecompositionTree {
    let mut fin = Finalizer { h, t, out: Vec::with_capacity(t.nodes.len()), built: vec![None; t.nodes.len()] };
    // post-order without recursion
    let mut stack = vec![(t.root, false)];
    while let Some((v, expanded)) = stack.pop() {
        if expanded {
            fin.process(v);
        } else {
            stack.push((v, true));
            stack.extend(t.nodes[v].children.iter().map(|&c| (c, false)));
        }
    }
    let root = fin.emit(t.root);
    DecompositionTree { n: t.n, nodes: fin.out, root }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Verify goodness (exactly, within the oracle cap), that every node is
    /// a module and that node kinds agree with the pair-module typing.
    pub defensive: bool,
}

pub fn decompose(h: &HomogeneousRelation) -> Result<DecompositionTree> {
    decompose_with(h, DecomposeOptions::default())
}

pub fn decompose_with(h: &HomogeneousRelation, opts: DecomposeOptions) -> Result<DecompositionTree> {
    if opts.defensive && h.len() <= ORACLE_CAP {
        if let Some(w) = axioms::modular_quotient(h).witness {
            return Err(Error::NotGood(format!(
                "module {:?}: {} and {} disagree on the pair ({}, {})",
                w.module, w.x, w.y, w.s, w.t
            )));
        }
    }
    let t = smdt(h)?;
    if opts.defensive {
        if let Some(node) = t.nodes.iter().find(|node| !is_module(h, &node.elements)) {
            return Err(Error::NotGood(format!("tree node {:?} is not a module", node.elements)));
        }
    }
    let tree = remove_weak_and_finalize(h, &t);
    if opts.defensive {
        verify_kinds(h, &tree)?;
    }
    Ok(tree)
}

fn verify_kinds(h: &HomogeneousRelation, tree: &DecompositionTree) -> Result<()> {
    for node in &tree.nodes {
        if node.children.len() < 3 {
            continue;
        }
        let reps: Vec<usize> = node.children.iter().map(|&c| tree.nodes[c].elements[0]).collect();
        let ok = match (type_node(h, &reps)?, node.kind) {
            (QuotientType::Prime, NodeKind::Prime) | (QuotientType::Complete, NodeKind::Degenerate) => true,
            (QuotientType::Linear(order), NodeKind::Linear) => {
                order == reps || order.iter().rev().eq(reps.iter())
            }
            _ => false,
        };
        if !ok {
            return Err(Error::NotGood(format!("node {:?} typed {} inconsistently", node.elements, node.kind.name())));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{from_digraph, from_two_structure, Digraph};
    use crate::{fixtures, gen, modules, oracle};
    use proptest::prelude::*;

    const DEFENSIVE: DecomposeOptions = DecomposeOptions { defensive: true };

    fn p4() -> HomogeneousRelation {
        from_digraph(&Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap())
    }

    #[test]
    fn single_element() {
        let t = decompose(&HomogeneousRelation::complete(1)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.nodes[t.root].kind, NodeKind::Leaf);
        assert!(decompose(&HomogeneousRelation::complete(0)).is_err());
    }

    #[test]
    fn p4_is_prime() {
        let t = decompose_with(&p4(), DEFENSIVE).unwrap();
        assert_eq!(t.nodes[t.root].kind, NodeKind::Prime);
        assert_eq!(t.len(), 5);
    }

    #[test]
    fn all_subsets_modules_give_one_degenerate_node() {
        for n in 3..7 {
            let t = decompose(&HomogeneousRelation::complete(n)).unwrap();
            assert_eq!(t.nodes[t.root].kind, NodeKind::Degenerate);
            assert_eq!(t.nodes[t.root].children.len(), n);
        }
        let s = smdt(&fixtures::three_element()).unwrap();
        assert!(s.node_sets().contains(&vec![1, 2]));
        let t = remove_weak_and_finalize(&fixtures::three_element(), &s);
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn relation_l_root_has_five_leaves() {
        let t = decompose(&fixtures::relation_l()).unwrap();
        assert_eq!(t.nodes[t.root].children.len(), 5);
        assert_eq!(t.nodes[t.root].kind, NodeKind::Prime);
    }

    #[test]
    fn transitive_tournament_is_linear() {
        let n = 6;
        let g = Digraph::from_arcs(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap();
        let t = decompose_with(&from_digraph(&g), DEFENSIVE).unwrap();
        let root = &t.nodes[t.root];
        assert_eq!(root.kind, NodeKind::Linear);
        let order: Vec<usize> = root.children.iter().map(|&c| t.nodes[c].elements[0]).collect();
        assert!(order == (0..n).collect::<Vec<_>>() || order == (0..n).rev().collect::<Vec<_>>());
    }

    #[test]
    fn quotient_ignores_representatives_on_good_relations() {
        let h = from_digraph(&gen::random_graph(9, 0.5, 5));
        let parts = modules::max_modules_excluding(&h, 0).unwrap().members;
        let (q1, _) = quotient_relation(&h, &parts, Some(0)).unwrap();
        let reps: Vec<usize> = std::iter::once(0).chain(parts.iter().map(|p| *p.last().unwrap())).collect();
        assert_eq!(q1, h.induced(&reps).unwrap());
    }

    #[test]
    fn quotient_depends_on_representatives_for_k() {
        let k = fixtures::relation_k();
        let a = k.induced(&[0, 2, 3]).unwrap();
        let b = k.induced(&[1, 2, 3]).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn type_node_cases() {
        let g = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(type_node(&from_digraph(&g), &[0, 1, 2]).unwrap(), QuotientType::Linear(vec![0, 1, 2]));
        assert_eq!(type_node(&HomogeneousRelation::complete(4), &[0, 1, 2, 3]).unwrap(), QuotientType::Complete);
        assert_eq!(type_node(&p4(), &[0, 1, 2, 3]).unwrap(), QuotientType::Prime);
    }

    #[test]
    fn defensive_mode_rejects_relation_k() {
        assert!(matches!(decompose_with(&fixtures::relation_k(), DEFENSIVE), Err(Error::NotGood(_))));
    }

    #[test]
    fn deep_recursion() {
        // a path-like cograph that nests n levels deep
        let n = 3000;
        let g = Digraph::from_edges(n, (1..n).filter(|v| v % 2 == 1).flat_map(|v| (0..v).map(move |u| (u, v)))).unwrap();
        let t = decompose(&from_digraph(&g)).unwrap();
        assert!(t.nodes.iter().all(|node| node.kind != NodeKind::Prime));
    }

    fn good_relation(kind: u8, n: usize, seed: u64) -> HomogeneousRelation {
        match kind {
            0 => from_digraph(&gen::random_graph(n, 0.5, seed)),
            1 => from_digraph(&gen::random_tournament(n, seed)),
            2 => from_digraph(&gen::random_digraph(n, 0.3, seed)),
            _ => from_two_structure(&gen::random_two_structure(n, 3, seed)),
        }
    }

    proptest! {
        #[test]
        fn branch_is_a_module_chain_through_strong_modules(seed in any::<u64>(), n in 2usize..10, kind in 0u8..4) {
            let h = good_relation(kind, n, seed);
            let report = oracle::all_modules(&h).unwrap();
            for x in 0..n {
                let branch = x_branch(&h, x).unwrap().modules();
                prop_assert_eq!(&branch[0], &vec![x]);
                prop_assert_eq!(branch.last().unwrap().len(), n);
                for w in branch.windows(2) {
                    prop_assert!(w[0].len() < w[1].len() && w[0].iter().all(|e| w[1].contains(e)));
                }
                prop_assert!(branch.iter().all(|m| report.is_module(m)));
                for m in report.strong_sets().into_iter().filter(|m| m.contains(&x)) {
                    prop_assert!(branch.contains(&m));
                }
            }
        }

        #[test]
        fn forcing_graph_reach_is_smallest_module(seed in any::<u64>(), n in 2usize..10, kind in 0u8..4) {
            let h = good_relation(kind, n, seed);
            let parts = modules::max_modules_excluding(&h, 0).unwrap().members;
            let g = ForcingGraph::new(&h, 0, &parts);
            let (q, _) = quotient_relation(&h, &parts, Some(0)).unwrap();
            for i in 0..g.len() {
                let mut expected: Vec<usize> = g.descendants(i).into_iter().map(|v| v + 1).collect();
                expected.insert(0, 0);
                prop_assert_eq!(modules::smallest_module(&q, &[0, i + 1]).unwrap(), expected);
            }
        }

        #[test]
        fn smdt_contains_strong_modules(seed in any::<u64>(), n in 1usize..10, kind in 0u8..4) {
            let h = good_relation(kind, n, seed);
            let s = smdt(&h).unwrap();
            prop_assert!(s.nodes.iter().all(|node| is_module(&h, &node.elements)));
            let sets = s.node_sets();
            for m in oracle::all_modules(&h).unwrap().strong_sets() {
                prop_assert!(sets.contains(&m));
            }
        }

        #[test]
        fn decomposition_matches_oracle(seed in any::<u64>(), n in 1usize..10, kind in 0u8..4) {
            let h = good_relation(kind, n, seed);
            let t = decompose_with(&h, DEFENSIVE).unwrap();
            let report = oracle::all_modules(&h).unwrap();
            prop_assert_eq!(t.node_sets(), report.tree.node_sets());
            let expected = report.tree.kinds();
            for (set, (kind, k)) in t.kinds() {
                if k >= 3 {
                    prop_assert_eq!(Some(&(kind, k)), expected.get(&set));
                }
            }
            prop_assert!(t.degree_square_sum() <= 4 * n * n);
        }
    }
}
