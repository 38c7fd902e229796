//! Detectors for reducible configurations.

use std::fmt;

use serde::Serialize;

use crate::connectivity::is_two_edge_connected;
use crate::graph::{Sign, SignedGraph};

use Sign::{Negative as N, Positive as P};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    #[serde(rename = "DEGREE2_VERTEX")]
    Degree2Vertex,
    #[serde(rename = "NEG_TRIANGLE")]
    NegTriangle,
    #[serde(rename = "ADJ_TRIANGLES")]
    AdjTriangles,
    #[serde(rename = "TRI_4CYCLE_NEG")]
    Tri4CycleNeg,
    #[serde(rename = "NEG_4CYCLES_SHARED")]
    Neg4CyclesShared,
    #[serde(rename = "TRI_PENTA_SHARED")]
    TriPentaShared,
    #[serde(rename = "H1_SUBGRAPH")]
    H1Subgraph,
    #[serde(rename = "H2_SUBGRAPH")]
    H2Subgraph,
    #[serde(rename = "POS_2EDGECUT")]
    Pos2EdgeCut,
}

impl Rule {
    /// Rules with rewrites, in the order the fixpoint engine tries them.
    pub const PRIORITY: [Rule; 8] = [
        Rule::Degree2Vertex,
        Rule::NegTriangle,
        Rule::AdjTriangles,
        Rule::Tri4CycleNeg,
        Rule::Neg4CyclesShared,
        Rule::TriPentaShared,
        Rule::H1Subgraph,
        Rule::H2Subgraph,
    ];

    pub const ALL: [Rule; 9] = [
        Rule::Degree2Vertex,
        Rule::NegTriangle,
        Rule::AdjTriangles,
        Rule::Tri4CycleNeg,
        Rule::Neg4CyclesShared,
        Rule::TriPentaShared,
        Rule::H1Subgraph,
        Rule::H2Subgraph,
        Rule::Pos2EdgeCut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Degree2Vertex => "DEGREE2_VERTEX",
            Rule::NegTriangle => "NEG_TRIANGLE",
            Rule::AdjTriangles => "ADJ_TRIANGLES",
            Rule::Tri4CycleNeg => "TRI_4CYCLE_NEG",
            Rule::Neg4CyclesShared => "NEG_4CYCLES_SHARED",
            Rule::TriPentaShared => "TRI_PENTA_SHARED",
            Rule::H1Subgraph => "H1_SUBGRAPH",
            Rule::H2Subgraph => "H2_SUBGRAPH",
            Rule::Pos2EdgeCut => "POS_2EDGECUT",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(name))
    }

    /// Labels of the matched vertex tuple, in order.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Rule::Degree2Vertex => &["z", "x", "y"],
            Rule::NegTriangle => &["a", "b", "c"],
            Rule::AdjTriangles => &["a", "b", "c", "d"],
            Rule::Tri4CycleNeg => &["a", "b", "c", "d", "z"],
            Rule::Neg4CyclesShared | Rule::TriPentaShared | Rule::H1Subgraph => {
                &["a", "b", "c", "d", "x", "y"]
            }
            Rule::H2Subgraph => &["b'", "b", "z", "u", "y", "c", "c'", "x"],
            Rule::Pos2EdgeCut => &["v1", "u1", "v2", "u2"],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConfigurationMatch {
    pub rule: Rule,
    /// Matched vertices in the order of [`Rule::labels`].
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A labeled pattern: edges between tuple positions with an optional
/// required sign.
struct Pattern {
    k: usize,
    edges: &'static [(usize, usize, Option<Sign>)],
    induced: bool,
}

const TRIANGLE: Pattern = Pattern {
    k: 3,
    edges: &[(0, 1, None), (0, 2, None), (1, 2, Some(N))],
    induced: false,
};

// a b c d: triangles acd and bcd
const ADJ_TRIANGLES: Pattern = Pattern {
    k: 4,
    edges: &[
        (0, 2, None),
        (0, 3, None),
        (2, 3, None),
        (1, 2, None),
        (1, 3, None),
    ],
    induced: false,
};

// a b c d z: 4-cycle a-b-d-c, triangle c-d-z, negative dz
const TRI_4CYCLE: Pattern = Pattern {
    k: 5,
    edges: &[
        (0, 1, None),
        (1, 3, None),
        (3, 2, None),
        (2, 0, None),
        (2, 4, None),
        (3, 4, Some(N)),
    ],
    induced: true,
};

// a b c d x y: 6-cycle a-x-c-d-y-b-a with negative chord xy
const FOUR_FOUR: Pattern = Pattern {
    k: 6,
    edges: &[
        (0, 4, None),
        (4, 2, None),
        (2, 3, None),
        (3, 5, None),
        (5, 1, None),
        (1, 0, None),
        (4, 5, Some(N)),
    ],
    induced: true,
};

// a b c d x y: 6-cycle a-x-c-y-d-b-a with negative chord xy
const THREE_FIVE: Pattern = Pattern {
    k: 6,
    edges: &[
        (0, 4, None),
        (4, 2, None),
        (2, 5, None),
        (5, 3, None),
        (3, 1, None),
        (1, 0, None),
        (4, 5, Some(N)),
    ],
    induced: true,
};

// a b c d x y
const H1: Pattern = Pattern {
    k: 6,
    edges: &[
        (0, 1, Some(P)),
        (1, 5, Some(P)),
        (5, 3, Some(P)),
        (3, 2, Some(P)),
        (2, 4, Some(P)),
        (4, 0, Some(P)),
        (0, 3, Some(N)),
        (2, 1, Some(N)),
    ],
    induced: false,
};

// b' b z u y c c' x
const H2: Pattern = Pattern {
    k: 8,
    edges: &[
        (0, 1, Some(P)),
        (1, 2, Some(P)),
        (2, 3, Some(P)),
        (3, 4, Some(P)),
        (4, 5, Some(P)),
        (5, 6, Some(P)),
        (3, 7, Some(P)),
        (1, 4, Some(N)),
        (5, 2, Some(N)),
    ],
    induced: false,
};

/// Injective maps of `pat` into the simple graph `g` respecting required
/// signs (and non-edges when induced).
fn embeddings(g: &SignedGraph, pat: &Pattern) -> Vec<Vec<usize>> {
    let k = pat.k;
    let mut adj = vec![vec![None; k]; k];
    for &(i, j, s) in pat.edges {
        adj[i][j] = Some(s);
        adj[j][i] = Some(s);
    }
    // breadth-first search order over the pattern from position 0
    let mut order = vec![0];
    let mut anchor = vec![None; k];
    let mut placed = vec![false; k];
    placed[0] = true;
    let mut head = 0;
    while head < order.len() {
        let i = order[head];
        head += 1;
        for j in 0..k {
            if !placed[j] && adj[i][j].is_some() {
                placed[j] = true;
                anchor[j] = Some(i);
                order.push(j);
            }
        }
    }
    debug_assert_eq!(order.len(), k, "patterns are connected");

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; k];
    let mut used = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        g: &SignedGraph,
        pat: &Pattern,
        adj: &[Vec<Option<Option<Sign>>>],
        order: &[usize],
        anchor: &[Option<usize>],
        map: &mut Vec<usize>,
        used: &mut u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(map.clone());
            return;
        }
        let i = order[depth];
        let candidates: Vec<usize> = match anchor[i] {
            Some(p) => g.neighbors(map[p]).collect(),
            None => (0..g.n()).collect(),
        };
        for w in candidates {
            if *used >> w & 1 == 1 {
                continue;
            }
            let fits = order[..depth].iter().all(|&j| {
                let present = g.sign_between(w, map[j]);
                match (adj[i][j], present) {
                    (Some(None), Some(_)) => true,
                    (Some(Some(s)), Some(t)) => s == t,
                    (Some(_), None) => false,
                    (None, Some(_)) => !pat.induced,
                    (None, None) => true,
                }
            });
            if !fits {
                continue;
            }
            map[i] = w;
            *used |= 1 << w;
            extend(depth + 1, g, pat, adj, order, anchor, map, used, out);
            *used &= !(1 << w);
            map[i] = usize::MAX;
        }
    }

    extend(
        0, g, pat, &adj, &order, &anchor, &mut map, &mut used, &mut out,
    );
    out
}

fn sign(g: &SignedGraph, a: usize, b: usize) -> Sign {
    g.sign_between(a, b).expect("matched edge")
}

fn product(g: &SignedGraph, cycle: &[usize]) -> Sign {
    (0..cycle.len()).fold(P, |acc, i| {
        acc * sign(g, cycle[i], cycle[(i + 1) % cycle.len()])
    })
}

fn edge_ids(g: &SignedGraph, vs: &[usize], pairs: &[(usize, usize)]) -> Vec<usize> {
    pairs
        .iter()
        .map(|&(i, j)| g.edge_index(vs[i], vs[j]).expect("matched edge"))
        .collect()
}

fn pattern_edges(pat: &Pattern) -> Vec<(usize, usize)> {
    pat.edges.iter().map(|&(i, j, _)| (i, j)).collect()
}

fn degree2_matches(g: &SignedGraph) -> Vec<Vec<usize>> {
    (0..g.n())
        .filter(|&z| g.degree(z) == 2)
        .map(|z| {
            let nb: Vec<usize> = g.neighbors(z).collect();
            vec![z, nb[0], nb[1]]
        })
        .collect()
}

fn two_edge_cut_matches(g: &SignedGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if !g.is_connected() {
        return out;
    }
    let m = g.m();
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            let (a, b) = (g.edges()[e1], g.edges()[e2]);
            if a.sign.is_negative() || b.sign.is_negative() {
                continue;
            }
            let rest = SignedGraph::new(
                g.n(),
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != e1 && i != e2)
                    .map(|(_, e)| (e.u, e.v, e.sign)),
            )
            .expect("subgraph of a valid graph");
            let comps = rest.components();
            if comps.len() != 2 {
                continue;
            }
            let side: Vec<bool> = {
                let mut s = vec![false; g.n()];
                for &v in &comps[0] {
                    s[v] = true;
                }
                s
            };
            if side[a.u] == side[a.v] || side[b.u] == side[b.v] {
                continue;
            }
            for h_side in [true, false] {
                let h: Vec<usize> = (0..g.n()).filter(|&v| side[v] == h_side).collect();
                let sub = g.induced_subgraph(&h).expect("vertices in range");
                if !is_two_edge_connected(&sub) {
                    continue;
                }
                let split = |e: crate::graph::Edge| {
                    if side[e.u] == h_side {
                        (e.v, e.u)
                    } else {
                        (e.u, e.v)
                    }
                };
                let (v1, u1) = split(a);
                let (v2, u2) = split(b);
                if v1 == v2 || g.has_edge(v1, v2) {
                    continue;
                }
                let touches_negative = |v: usize| {
                    g.incident(v)
                        .iter()
                        .any(|&(_, e)| g.edges()[e].sign.is_negative())
                };
                if !(touches_negative(v1) || touches_negative(v2)) {
                    continue;
                }
                out.push(if v1 < v2 {
                    vec![v1, u1, v2, u2]
                } else {
                    vec![v2, u2, v1, u1]
                });
            }
        }
    }
    out
}

/// Every match of `rule` in `g`, sorted lexicographically by vertex tuple.
/// Graphs with parallel edges have no matches.
pub fn detect_all(g: &SignedGraph, rule: Rule) -> Vec<ConfigurationMatch> {
    if !g.is_simple() {
        return Vec::new();
    }
    let (mut tuples, pairs): (Vec<Vec<usize>>, Vec<(usize, usize)>) = match rule {
        Rule::Degree2Vertex => (degree2_matches(g), vec![(0, 1), (0, 2)]),
        Rule::NegTriangle => {
            let t = embeddings(g, &TRIANGLE)
                .into_iter()
                .filter(|v| v[1] < v[2] && sign(g, v[0], v[1]) == sign(g, v[0], v[2]))
                .collect();
            (t, pattern_edges(&TRIANGLE))
        }
        Rule::AdjTriangles => {
            let t = embeddings(g, &ADJ_TRIANGLES)
                .into_iter()
                .filter(|v| v[0] < v[1] && v[2] < v[3])
                .collect();
            (t, pattern_edges(&ADJ_TRIANGLES))
        }
        Rule::Tri4CycleNeg => (embeddings(g, &TRI_4CYCLE), pattern_edges(&TRI_4CYCLE)),
        Rule::Neg4CyclesShared => {
            let t = embeddings(g, &FOUR_FOUR)
                .into_iter()
                .filter(|v| {
                    product(g, &[v[0], v[4], v[5], v[1]]) == N
                        && product(g, &[v[2], v[4], v[5], v[3]]) == N
                })
                .collect();
            (t, pattern_edges(&FOUR_FOUR))
        }
        Rule::TriPentaShared => {
            let t = embeddings(g, &THREE_FIVE)
                .into_iter()
                .filter(|v| {
                    product(g, &[v[2], v[4], v[5]]) == N
                        && product(g, &[v[0], v[4], v[5], v[3], v[1]]) == N
                })
                .collect();
            (t, pattern_edges(&THREE_FIVE))
        }
        Rule::H1Subgraph => (embeddings(g, &H1), pattern_edges(&H1)),
        Rule::H2Subgraph => (embeddings(g, &H2), pattern_edges(&H2)),
        Rule::Pos2EdgeCut => (two_edge_cut_matches(g), vec![(0, 1), (2, 3)]),
    };
    tuples.sort();
    tuples.dedup();
    tuples
        .into_iter()
        .map(|vertices| ConfigurationMatch {
            rule,
            edges: edge_ids(g, &vertices, &pairs),
            vertices,
        })
        .collect()
}

/// The first match of `rule` in scan order.
pub fn detect_configuration(g: &SignedGraph, rule: Rule) -> Option<ConfigurationMatch> {
    detect_all(g, rule).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gadget, gamma, GadgetKind};

    #[test]
    fn gamma_three_has_adjacent_triangles() {
        let m = detect_configuration(&gamma(3).unwrap(), Rule::AdjTriangles).unwrap();
        let v = &m.vertices;
        // x2 and x6 around the shared edge x0x1
        assert_eq!(v, &vec![3, 7, 0, 2]);
        assert_eq!(m.edges.len(), 5);
    }

    #[test]
    fn gamma_one_has_negative_triangles() {
        let g = gamma(1).unwrap();
        let all = detect_all(&g, Rule::NegTriangle);
        assert_eq!(all.len(), 4);
        for m in &all {
            let (a, b, c) = (m.vertices[0], m.vertices[1], m.vertices[2]);
            assert_eq!(g.sign_between(b, c), Some(N));
            assert_eq!(g.sign_between(a, b), Some(P));
            assert_eq!(g.sign_between(a, c), Some(P));
        }
    }

    #[test]
    fn positive_hexagon_matches_nothing() {
        let c6 = SignedGraph::all_positive(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
            .unwrap();
        for rule in Rule::ALL {
            if rule == Rule::Degree2Vertex {
                continue;
            }
            assert!(detect_configuration(&c6, rule).is_none(), "{rule}");
        }
    }

    #[test]
    fn drawn_gadget_is_the_h1_pattern() {
        let gd = gadget(GadgetKind::GAMMA1_TWO_SUB).unwrap();
        let m = detect_configuration(&gd.graph, Rule::H1Subgraph).unwrap();
        let x = m.vertices[4];
        let y = m.vertices[5];
        assert_eq!(
            [x, y].iter().filter(|&&v| v == gd.x || v == gd.y).count(),
            2
        );
    }

    #[test]
    fn rule_names_round_trip() {
        for r in Rule::ALL {
            assert_eq!(Rule::from_name(r.name()), Some(r));
            assert!(!r.labels().is_empty());
        }
    }
}
