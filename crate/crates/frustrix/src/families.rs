//! Named signed graphs and extremal families.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

use Sign::{Negative as N, Positive as P};

/// The five exceptional signed graphs, with the drawn signatures.
///
/// Vertex numbering:
/// * 1: `x0..x3 → 0..3` (K₄, negative matching `x1x2`, `x3x0`).
/// * 2: `x0..x4 → 0..4`, where `x4` subdivides `x1x2`.
/// * 3: `x0 → 0`, `y0 → 1`, `x1..x6 → 2..7`.
/// * 4: `x0 → 0`, `y0 → 1`, `z0 → 2`, `x1..x5 → 3..7`.
/// * 5: the cube, outer cycle `u1..u4 → 0..3`, inner cycle `v1..v4 → 4..7`.
pub fn gamma(i: usize) -> Result<SignedGraph> {
    let (n, edges): (usize, Vec<(usize, usize, Sign)>) = match i {
        1 => (
            4,
            vec![
                (2, 3, P),
                (3, 1, P),
                (1, 0, P),
                (2, 0, P),
                (1, 2, N),
                (3, 0, N),
            ],
        ),
        2 => (
            5,
            vec![
                (2, 3, P),
                (3, 1, P),
                (1, 0, P),
                (2, 0, P),
                (2, 4, P),
                (1, 4, N),
                (3, 0, N),
            ],
        ),
        3 => (
            8,
            vec![
                (2, 3, P),
                (3, 4, P),
                (4, 5, P),
                (5, 6, P),
                (2, 7, P),
                (3, 0, P),
                (7, 0, P),
                (4, 1, P),
                (6, 1, P),
                (7, 6, N),
                (2, 0, N),
                (5, 1, N),
            ],
        ),
        4 => (
            8,
            vec![
                (3, 4, P),
                (4, 5, P),
                (6, 7, P),
                (7, 3, P),
                (5, 1, P),
                (6, 1, P),
                (3, 0, P),
                (0, 2, P),
                (2, 1, P),
                (0, 4, N),
                (5, 6, N),
                (7, 2, N),
            ],
        ),
        5 => (
            8,
            vec![
                (0, 1, P),
                (1, 2, P),
                (2, 3, P),
                (4, 5, P),
                (5, 6, P),
                (7, 4, P),
                (0, 4, P),
                (2, 6, P),
                (3, 7, P),
                (3, 0, N),
                (6, 7, N),
                (1, 5, N),
            ],
        ),
        _ => {
            return Err(Error::Construction(format!(
                "exceptional graph index {i} is not in 1..=5"
            )))
        }
    };
    SignedGraph::new(n, edges)
}

/// Building block of the tight family for the n/3 bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// Triangle `a x y` with `ax`, `xy` positive and `ya` negative.
    Triangle,
    /// The first exceptional graph with edges `first` and `second` (canonical
    /// indices of [`gamma`]`(1)`) subdivided by the attachment vertices.
    Gamma1TwoSub { first: usize, second: usize },
}

impl GadgetKind {
    /// The drawn choice: the two positive edges `x0x1` and `x2x3`, leaving
    /// the attachment vertices at distance 2.
    pub const GAMMA1_TWO_SUB: GadgetKind = GadgetKind::Gamma1TwoSub {
        first: 0,
        second: 5,
    };

    /// Parses `t` (triangle) and `g` (drawn two-subdivision).
    pub fn from_code(c: char) -> Option<GadgetKind> {
        match c {
            't' | 'T' => Some(GadgetKind::Triangle),
            'g' | 'G' => Some(GadgetKind::GAMMA1_TWO_SUB),
            _ => None,
        }
    }
}

/// A gadget on local vertices with its two attachment vertices.
pub struct Gadget {
    pub graph: SignedGraph,
    pub x: usize,
    pub y: usize,
}

/// Triangle: `a = 0`, `x = 1`, `y = 2`. Two-subdivision: the four
/// vertices of [`gamma`]`(1)`, then `x = 4`, `y = 5`.
pub fn gadget(kind: GadgetKind) -> Result<Gadget> {
    match kind {
        GadgetKind::Triangle => Ok(Gadget {
            graph: SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, N)])?,
            x: 1,
            y: 2,
        }),
        GadgetKind::Gamma1TwoSub { first, second } => {
            let base = gamma(1)?;
            if first == second || first >= base.m() || second >= base.m() {
                return Err(Error::Construction(format!(
                    "two-subdivision needs two distinct edges of 0..{}, got {first} and {second}",
                    base.m()
                )));
            }
            let mut edges = Vec::new();
            for (i, e) in base.edges().iter().enumerate() {
                let mid = if i == first {
                    4
                } else if i == second {
                    5
                } else {
                    edges.push((e.u, e.v, e.sign));
                    continue;
                };
                edges.push((e.u, mid, P));
                edges.push((mid, e.v, e.sign));
            }
            Ok(Gadget {
                graph: SignedGraph::new(6, edges)?,
                x: 4,
                y: 5,
            })
        }
    }
}

/// Gadgets laid out consecutively, gadget `i` joined to gadget `i−1` by a
/// positive edge `x_i y_{i−1}` (indices modulo the chain length).
pub fn gadget_chain(kinds: &[GadgetKind]) -> Result<SignedGraph> {
    if kinds.len() < 2 {
        return Err(Error::Construction(format!(
            "a gadget chain needs at least 2 gadgets, got {}",
            kinds.len()
        )));
    }
    let gadgets = kinds
        .iter()
        .map(|&k| gadget(k))
        .collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(gadgets.len());
    let mut edges = Vec::new();
    let mut n = 0;
    for gd in &gadgets {
        offsets.push(n);
        edges.extend(gd.graph.edges().iter().map(|e| (e.u + n, e.v + n, e.sign)));
        n += gd.graph.n();
    }
    let t = gadgets.len();
    for i in 0..t {
        let prev = (i + t - 1) % t;
        edges.push((
            offsets[i] + gadgets[i].x,
            offsets[prev] + gadgets[prev].y,
            P,
        ));
    }
    SignedGraph::new(n, edges)
}

/// A tree whose vertices all have degree 1 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CubicTree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Construction(msg));
        if n < 2 {
            return bad(format!("a cubic tree needs at least 2 vertices, got {n}"));
        }
        if edges.len() != n - 1 {
            return bad(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            ));
        }
        let pairs: Vec<(usize, usize, Sign)> = edges.iter().map(|&(u, v)| (u, v, P)).collect();
        let g = SignedGraph::new(n, pairs).map_err(|e| Error::Construction(e.to_string()))?;
        if !g.is_connected() || !g.is_simple() {
            return bad("tree edges do not form a tree".into());
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) != 1 && g.degree(v) != 3) {
            return bad(format!("tree vertex {v} has degree {}", g.degree(v)));
        }
        Ok(CubicTree { n, edges })
    }

    /// `k` internal vertices on a path, padded with leaves; `k = 0` is a
    /// single edge and `k = 1` is the claw.
    pub fn caterpillar(k: usize) -> Self {
        if k == 0 {
            return CubicTree {
                n: 2,
                edges: vec![(0, 1)],
            };
        }
        let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        let mut next = k;
        for i in 0..k {
            let path_degree = usize::from(i > 0) + usize::from(i + 1 < k);
            for _ in path_degree..3 {
                edges.push((i, next));
                next += 1;
            }
        }
        CubicTree { n: next, edges }
    }

    /// A centre joined to three internal vertices, each carrying two leaves.
    pub fn star_of_triangles() -> Self {
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        let mut next = 4;
        for i in 1..=3 {
            edges.push((i, next));
            edges.push((i, next + 1));
            next += 2;
        }
        CubicTree { n: next, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn internal_count(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().filter(|&&d| d == 3).count()
    }
}

/// Every internal tree vertex becomes a triangle with one negative edge and
/// every leaf becomes a copy of the second exceptional graph attached at its
/// degree-2 vertex; tree edges become positive bridges.
///
/// The leaf copy is the 5-cycle `p a b c d` (positive) with negative chords
/// `ac` and `bd`, numbered `p, a, b, c, d` consecutively; `p` is the
/// attachment vertex. Gadgets are laid out in tree-vertex order.
pub fn triangle_tree_extremal(tree: &CubicTree) -> Result<SignedGraph> {
    let t = tree.n;
    let mut nbrs = vec![Vec::new(); t];
    for &(u, v) in &tree.edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for list in &mut nbrs {
        list.sort_unstable();
    }
    let mut base = vec![0usize; t];
    let mut edges = Vec::new();
    let mut n = 0;
    for v in 0..t {
        base[v] = n;
        if nbrs[v].len() == 1 {
            edges.extend([
                (n, n + 1, P),
                (n + 1, n + 2, P),
                (n + 2, n + 3, P),
                (n + 3, n + 4, P),
                (n + 4, n, P),
                (n + 1, n + 3, N),
                (n + 2, n + 4, N),
            ]);
            n += 5;
        } else {
            edges.extend([(n, n + 1, P), (n, n + 2, P), (n + 1, n + 2, N)]);
            n += 3;
        }
    }
    let port = |p: usize, q: usize| -> usize {
        let slot = nbrs[p]
            .iter()
            .position(|&w| w == q)
            .expect("tree neighbour");
        base[p] + slot
    };
    for &(u, v) in &tree.edges {
        edges.push((port(u, v), port(v, u), P));
    }
    SignedGraph::new(n, edges)
}

/// The two unsigned 8-vertex cubic graphs compared against the exceptional
/// ones. First: `a b c d a' b' c' d' → 0..7`; second: `a b c u v w x y → 0..7`.
pub fn w_graphs() -> (SignedGraph, SignedGraph) {
    let w1 = SignedGraph::all_positive(
        8,
        &[
            (0, 1),
            (1, 3),
            (3, 2),
            (2, 0),
            (0, 4),
            (4, 6),
            (6, 2),
            (4, 5),
            (5, 7),
            (7, 6),
            (1, 7),
            (3, 5),
        ],
    )
    .expect("static graph");
    let w2 = SignedGraph::all_positive(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 6),
            (6, 5),
            (5, 7),
            (7, 4),
            (4, 1),
            (3, 7),
            (4, 6),
            (2, 5),
        ],
    )
    .expect("static graph");
    (w1, w2)
}

/// Petersen graph: outer 5-cycle `0..4`, spokes `i` to `i+5`, inner pentagram.
pub fn petersen() -> SignedGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    SignedGraph::all_positive(10, &pairs).expect("static graph")
}

/// Petersen graph with all 15 edges negative.
pub fn petersen_negative() -> SignedGraph {
    petersen().with_uniform_sign(N).expect("simple graph")
}

/// A ring of `k` digons `{2i, 2i+1}` joined by positive edges `(2i+1, 2i+2)`.
pub fn digon_graph(k: usize) -> Result<SignedGraph> {
    if k < 2 {
        return Err(Error::Construction(format!(
            "digon ring needs k ≥ 2, got {k}"
        )));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((2 * i, 2 * i + 1, P));
        edges.push((2 * i, 2 * i + 1, N));
        edges.push((2 * i + 1, (2 * i + 2) % n, P));
    }
    SignedGraph::new(n, edges)
}
