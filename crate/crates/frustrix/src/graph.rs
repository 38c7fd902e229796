//! Signed multigraph model: signs, edges, switch states, cut profiles and
//! signature bitmasks.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count representable by the bitmask-based types.
pub const MAX_VERTICES: usize = 64;
/// Largest edge count representable by [`SignatureBits`].
pub const MAX_EDGES: usize = 128;

/// A set of vertices stored as a bitmask (bit `v` set iff `v` is a member).
pub type VertexSet = u64;

/// Builds a [`VertexSet`] from a list of vertices.
pub fn vertex_set(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

/// Iterates the members of a [`VertexSet`] in ascending order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Mask of the first `n` vertices.
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_negative(negative: bool) -> Sign {
        if negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    /// +1 or -1.
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != rhs.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// Undirected signed multigraph on vertices `0..n`.
///
/// Edges are stored sorted by `(u, v, sign)` with `u < v`; the position of an
/// edge in that order is its canonical index. Between any pair of vertices
/// there is at most one edge, or a digon made of one positive and one
/// negative edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "signed graph vertex count",
                max: MAX_VERTICES,
                actual: n,
            });
        }
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            list.push(Edge {
                u: a.min(b),
                v: a.max(b),
                sign,
            });
        }
        list.sort();
        for pair in list.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidGraph(format!(
                    "parallel edges {}-{} with equal sign",
                    pair[0].u, pair[0].v
                )));
            }
        }
        if list.len() > MAX_EDGES {
            return Err(Error::Capacity {
                what: "signed graph edge count",
                max: MAX_EDGES,
                actual: list.len(),
            });
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph { n, edges, adj }
    }

    /// A graph with every listed edge positive.
    pub fn all_positive(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, v)| (u, v, Sign::Positive)))
    }

    /// A graph with every listed edge negative.
    pub fn all_negative(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, v)| (u, v, Sign::Negative)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&Edge> {
        self.edges.get(index).ok_or(Error::EdgeOutOfRange {
            index,
            m: self.edges.len(),
        })
    }

    /// `(neighbor, edge index)` pairs at `v`, sorted.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v].iter().fold(0, |acc, &(w, _)| acc | (1u64 << w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn is_simple(&self) -> bool {
        self.edges
            .windows(2)
            .all(|p| (p[0].u, p[0].v) != (p[1].u, p[1].v))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Index of the first edge joining `a` and `b`.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    /// Sign of the edge `ab` in a simple neighbourhood.
    pub fn sign_between(&self, a: usize, b: usize) -> Option<Sign> {
        self.edge_index(a, b).map(|e| self.edges[e].sign)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    pub fn signature(&self) -> SignatureBits {
        let mut bits = 0u128;
        for (i, e) in self.edges.iter().enumerate() {
            if e.sign.is_negative() {
                bits |= 1u128 << i;
            }
        }
        SignatureBits {
            bits,
            len: self.edges.len(),
        }
    }

    /// The same underlying graph carrying the signature `sig`.
    pub fn with_signature(&self, sig: &SignatureBits) -> Result<Self> {
        if sig.len != self.edges.len() {
            return Err(Error::GraphMismatch);
        }
        Self::new(
            self.n,
            self.edges
                .iter()
                .enumerate()
                .map(|(i, e)| (e.u, e.v, Sign::from_negative(sig.bit(i)))),
        )
    }

    /// The same underlying graph with every edge carrying `sign`.
    pub fn with_uniform_sign(&self, sign: Sign) -> Result<Self> {
        Self::new(self.n, self.edges.iter().map(|e| (e.u, e.v, sign)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(Error::InvalidGraph(
                    "relabeling is not a permutation".into(),
                ));
            }
            seen |= 1 << p;
        }
        Self::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)),
        )
    }

    pub fn delete_edge(&self, index: usize) -> Result<Self> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            index[v] = i;
        }
        Self::new(
            vertices.len(),
            self.edges
                .iter()
                .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
                .map(|e| (index[e.u], index[e.v], e.sign)),
        )
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::NotSimple)
        }
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        f.write_str("]")
    }
}

/// A ±1 value per vertex; switching at `X` is the state that is −1 exactly on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwitchState {
    n: usize,
    negated: VertexSet,
}

impl SwitchState {
    pub fn identity(n: usize) -> Self {
        SwitchState { n, negated: 0 }
    }

    pub fn from_set(n: usize, negated: VertexSet) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "switch state length",
                max: MAX_VERTICES,
                actual: n,
            });
        }
        if negated & !full_set(n) != 0 {
            return Err(Error::InvalidCut(
                "switch set outside the vertex range".into(),
            ));
        }
        Ok(SwitchState { n, negated })
    }

    pub fn from_values(values: &[i8]) -> Result<Self> {
        let mut negated = 0;
        for (v, &s) in values.iter().enumerate() {
            match s {
                1 => {}
                -1 => negated |= 1u64 << v,
                other => {
                    return Err(Error::InvalidGraph(format!(
                        "switch value {other} at vertex {v} is not ±1"
                    )))
                }
            }
        }
        Self::from_set(values.len(), negated)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn value(&self, v: usize) -> i8 {
        if self.negated >> v & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.n).map(|v| self.value(v)).collect()
    }

    pub fn negated_set(&self) -> VertexSet {
        self.negated
    }

    /// The equivalent state with vertex 0 at +1.
    pub fn normalized(&self) -> Self {
        if self.n > 0 && self.negated & 1 == 1 {
            SwitchState {
                n: self.n,
                negated: !self.negated & full_set(self.n),
            }
        } else {
            *self
        }
    }

    /// Applying `self` then `other` equals applying the composition.
    pub fn compose(&self, other: &SwitchState) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(SwitchState {
            n: self.n,
            negated: self.negated ^ other.negated,
        })
    }
}

/// Boundary statistics of a vertex subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutProfile {
    pub side: VertexSet,
    pub pos: usize,
    pub neg: usize,
}

impl CutProfile {
    pub fn size(&self) -> usize {
        self.pos + self.neg
    }

    pub fn is_unequilibrated(&self) -> bool {
        self.neg > self.pos
    }

    pub fn is_equilibrated(&self) -> bool {
        self.neg == self.pos
    }
}

/// Bit `i` set iff canonical edge `i` is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignatureBits {
    bits: u128,
    len: usize,
}

impl SignatureBits {
    pub fn new(bits: u128, len: usize) -> Result<Self> {
        if len > MAX_EDGES {
            return Err(Error::Capacity {
                what: "signature length",
                max: MAX_EDGES,
                actual: len,
            });
        }
        if len < MAX_EDGES && bits >> len != 0 {
            return Err(Error::Dimension {
                expected: len,
                actual: 128 - bits.leading_zeros() as usize,
            });
        }
        Ok(SignatureBits { bits, len })
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn count_negative(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Zero-padded hexadecimal with `ceil(len / 4)` digits.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4);
        if digits == 0 {
            return String::new();
        }
        format!("{:0width$x}", self.bits, width = digits)
    }

    pub fn from_hex(text: &str, len: usize) -> Result<Self> {
        let digits = len.div_ceil(4);
        let parse_err = |message: String| Error::Parse { line: 0, message };
        if text.len() != digits && !(digits == 0 && text == "0") {
            return Err(parse_err(format!(
                "signature hex has {} digits, expected {digits}",
                text.len()
            )));
        }
        let bits = if text.is_empty() {
            0
        } else {
            u128::from_str_radix(text, 16)
                .map_err(|e| parse_err(format!("bad signature hex {text:?}: {e}")))?
        };
        Self::new(bits, len).map_err(|_| parse_err(format!("signature {text} exceeds {len} edges")))
    }
}

impl fmt::Display for SignatureBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}
