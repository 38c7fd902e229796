//! Switching, cuts, signed subdivision and switching-class bookkeeping.

use crate::error::{Error, Result};
use crate::graph::{
    full_set, CutProfile, Sign, SignatureBits, SignedGraph, SwitchState, VertexSet,
};

/// Multiplies the sign of every edge `uv` by `s[u]·s[v]`.
pub fn switch(g: &SignedGraph, state: &SwitchState) -> Result<SignedGraph> {
    if state.len() != g.n() {
        return Err(Error::Dimension {
            expected: g.n(),
            actual: state.len(),
        });
    }
    let x = state.negated_set();
    SignedGraph::new(
        g.n(),
        g.edges().iter().map(|e| {
            let crosses = (x >> e.u & 1) != (x >> e.v & 1);
            (e.u, e.v, if crosses { e.sign.flip() } else { e.sign })
        }),
    )
}

/// Switches at the cut `[x, xᶜ]`.
pub fn switch_at(g: &SignedGraph, x: VertexSet) -> Result<SignedGraph> {
    switch(g, &SwitchState::from_set(g.n(), x)?)
}

pub fn negative_edge_count(g: &SignedGraph) -> usize {
    g.negative_edge_count()
}

pub fn cut_profile(g: &SignedGraph, x: VertexSet) -> Result<CutProfile> {
    let all = full_set(g.n());
    if x & !all != 0 {
        return Err(Error::InvalidCut(
            "side contains vertices outside the graph".into(),
        ));
    }
    if x == 0 || x == all {
        return Err(Error::InvalidCut(
            "side must be a proper nonempty subset".into(),
        ));
    }
    let mut profile = CutProfile {
        side: x,
        pos: 0,
        neg: 0,
    };
    for e in g.edges() {
        if (x >> e.u & 1) != (x >> e.v & 1) {
            if e.sign.is_negative() {
                profile.neg += 1;
            } else {
                profile.pos += 1;
            }
        }
    }
    Ok(profile)
}

/// Replaces edge `e = uv` by a path `u z v` through a new vertex `z = n`.
///
/// A positive edge becomes two positive edges; a negative edge becomes a
/// positive `uz` and a negative `zv`.
pub fn subdivide_edge(g: &SignedGraph, e: usize) -> Result<SignedGraph> {
    let target = *g.edge(e)?;
    let z = g.n();
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, ed)| (ed.u, ed.v, ed.sign))
        .collect();
    edges.push((target.u, z, Sign::Positive));
    edges.push((z, target.v, target.sign));
    SignedGraph::new(g.n() + 1, edges)
}

/// The depth-first spanning tree from vertex 0 that visits neighbours in
/// ascending order (parallel edges by ascending index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Tree edge leading into each vertex; `None` for the root.
    pub parent_edge: Vec<Option<usize>>,
    /// Vertices in discovery order.
    pub order: Vec<usize>,
    /// `is_tree[e]` for every edge index.
    pub is_tree: Vec<bool>,
}

impl SpanningTree {
    pub fn cotree_edges(&self) -> Vec<usize> {
        (0..self.is_tree.len())
            .filter(|&e| !self.is_tree[e])
            .collect()
    }
}

pub fn canonical_spanning_tree(g: &SignedGraph) -> Result<SpanningTree> {
    let n = g.n();
    let mut parent_edge = vec![None; n];
    let mut is_tree = vec![false; g.m()];
    let mut order = Vec::with_capacity(n);
    if n == 0 {
        return Ok(SpanningTree {
            parent_edge,
            order,
            is_tree,
        });
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    seen[0] = true;
    order.push(0);
    while let Some(top) = stack.last_mut() {
        let (v, cursor) = *top;
        let inc = g.incident(v);
        if cursor == inc.len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let (w, e) = inc[cursor];
        if !seen[w] {
            seen[w] = true;
            parent_edge[w] = Some(e);
            is_tree[e] = true;
            order.push(w);
            stack.push((w, 0));
        }
    }
    if order.len() != n {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree {
        parent_edge,
        order,
        is_tree,
    })
}

/// Sign products along tree paths from the root: `potential[v]` is negative
/// iff the tree path root→v carries an odd number of negative edges.
fn tree_potentials(g: &SignedGraph, tree: &SpanningTree, sig: &SignatureBits) -> Vec<bool> {
    let mut potential = vec![false; g.n()];
    for &v in tree.order.iter().skip(1) {
        let e = tree.parent_edge[v].expect("non-root vertex has a parent edge");
        let parent = g.edges()[e].other(v);
        potential[v] = potential[parent] ^ sig.bit(e);
    }
    potential
}

/// True iff `sigma_a` and `sigma_b` are switching-equivalent signatures of `g`.
pub fn fundamental_cycle_signs(
    g: &SignedGraph,
    sigma_a: &SignatureBits,
    sigma_b: &SignatureBits,
) -> Result<bool> {
    if sigma_a.len() != g.m() || sigma_b.len() != g.m() {
        return Err(Error::GraphMismatch);
    }
    let tree = canonical_spanning_tree(g)?;
    let pa = tree_potentials(g, &tree, sigma_a);
    let pb = tree_potentials(g, &tree, sigma_b);
    Ok(tree.cotree_edges().into_iter().all(|e| {
        let ed = &g.edges()[e];
        let ca = sigma_a.bit(e) ^ pa[ed.u] ^ pa[ed.v];
        let cb = sigma_b.bit(e) ^ pb[ed.u] ^ pb[ed.v];
        ca == cb
    }))
}

/// Switching-equivalent signature with every canonical tree edge positive,
/// plus the state producing it.
pub fn tree_canonical_signature(g: &SignedGraph) -> Result<(SignedGraph, SwitchState)> {
    let tree = canonical_spanning_tree(g)?;
    let potential = tree_potentials(g, &tree, &g.signature());
    let mut negated = 0u64;
    for (v, &p) in potential.iter().enumerate() {
        if p {
            negated |= 1 << v;
        }
    }
    let state = SwitchState::from_set(g.n(), negated)?;
    Ok((switch(g, &state)?, state))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_set;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
    }

    #[test]
    fn switching_negative_triangle_at_vertex_zero() {
        let g = triangle([Sign::Negative; 3]);
        let s = SwitchState::from_values(&[-1, 1, 1]).unwrap();
        let h = switch(&g, &s).unwrap();
        assert_eq!(h.negative_edge_count(), 1);
        assert_eq!(h.sign_between(1, 2), Some(Sign::Negative));
        assert_eq!(switch(&h, &s).unwrap(), g);
    }

    #[test]
    fn switch_length_mismatch() {
        let g = triangle([Sign::Positive; 3]);
        assert!(matches!(
            switch(&g, &SwitchState::identity(2)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn cut_profiles() {
        let g = triangle([Sign::Negative; 3]);
        let p = cut_profile(&g, vertex_set(&[1])).unwrap();
        assert_eq!((p.pos, p.neg), (0, 2));
        let path = SignedGraph::all_positive(2, &[(0, 1)]).unwrap();
        let p = cut_profile(&path, 1).unwrap();
        assert_eq!((p.pos, p.neg), (1, 0));
        assert!(cut_profile(&path, 0).is_err());
        assert!(cut_profile(&path, 0b11).is_err());
    }

    #[test]
    fn subdividing_negative_edge_of_triangle() {
        let g = triangle([Sign::Positive, Sign::Negative, Sign::Positive]);
        let e = g.edge_index(1, 2).unwrap();
        let h = subdivide_edge(&g, e).unwrap();
        assert_eq!((h.n(), h.m()), (4, 4));
        assert_eq!(h.negative_edge_count(), 1);
        assert_eq!(h.degree(3), 2);
        assert!(h.is_simple());
        assert!(subdivide_edge(&g, 3).is_err());
    }

    #[test]
    fn canonical_form_of_negative_triangle() {
        let g = triangle([Sign::Negative; 3]);
        let (c, _) = tree_canonical_signature(&g).unwrap();
        assert_eq!(c.negative_edge_count(), 1);
        let tree = canonical_spanning_tree(&g).unwrap();
        let cot = tree.cotree_edges();
        assert_eq!(cot.len(), 1);
        assert!(c.edges()[cot[0]].sign.is_negative());
    }

    #[test]
    fn canonical_form_of_positive_graph_is_identity() {
        let g = triangle([Sign::Positive; 3]);
        let (c, s) = tree_canonical_signature(&g).unwrap();
        assert_eq!(c, g);
        assert_eq!(s, SwitchState::identity(3));
    }

    #[test]
    fn four_cycle_cycle_signs() {
        let c4 = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let one = SignatureBits::new(0b0001, 4).unwrap();
        let three = SignatureBits::new(0b0111, 4).unwrap();
        let zero = SignatureBits::new(0, 4).unwrap();
        assert!(fundamental_cycle_signs(&c4, &one, &three).unwrap());
        assert!(!fundamental_cycle_signs(&c4, &one, &zero).unwrap());
        let short = SignatureBits::new(0, 3).unwrap();
        assert_eq!(
            fundamental_cycle_signs(&c4, &one, &short),
            Err(Error::GraphMismatch)
        );
    }

    #[test]
    fn dfs_tree_follows_ascending_neighbours() {
        let g = SignedGraph::all_positive(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3)]).unwrap();
        let t = canonical_spanning_tree(&g).unwrap();
        assert_eq!(t.order, vec![0, 1, 2, 3]);
        let disconnected = SignedGraph::all_positive(3, &[(0, 1)]).unwrap();
        assert_eq!(
            canonical_spanning_tree(&disconnected),
            Err(Error::Disconnected)
        );
    }
}
