//! Exact frustration index, minimality via unequilibrated cuts, and max-cut.
//!
//! A vertex state `s ∈ {±1}ⁿ` leaves edge `uv` frustrated when
//! `σ(uv)·s(u)·s(v) = −1`; the frustration index is the minimum number of
//! frustrated edges. Vertex 0 is pinned to +1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{full_set, CutProfile, SignatureBits, SignedGraph, SwitchState, VertexSet};
use crate::switching::{cut_profile, switch};

pub const BRUTE_FORCE_MAX_N: usize = 30;
pub const BRANCH_BOUND_MAX_N: usize = 48;
/// Environment variable overriding every solver capacity limit.
pub const CAPACITY_ENV: &str = "FRUSTRIX_MAX_N";

fn limit(default: usize) -> usize {
    std::env::var(CAPACITY_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.clamp(1, 63))
        .unwrap_or(default)
}

fn check_capacity(what: &'static str, n: usize, default: usize) -> Result<()> {
    let max = limit(default);
    if n > max {
        Err(Error::Capacity {
            what,
            max,
            actual: n,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bruteforce,
    BranchBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrustrationResult {
    pub f: usize,
    /// Normalized state (vertex 0 at +1) whose switch yields `f` negative edges.
    pub witness_state: SwitchState,
    pub witness_signature: SignatureBits,
    pub states_explored: u64,
    pub method: Method,
}

/// Compressed adjacency: for vertex `v`, entries `start[v]..start[v+1]` of
/// `(neighbor, edge)`.
struct Csr {
    start: Vec<usize>,
    entries: Vec<(usize, usize)>,
}

impl Csr {
    fn new(g: &SignedGraph) -> Self {
        let mut start = Vec::with_capacity(g.n() + 1);
        let mut entries = Vec::with_capacity(2 * g.m());
        for v in 0..g.n() {
            start.push(entries.len());
            entries.extend_from_slice(g.incident(v));
        }
        start.push(entries.len());
        Csr { start, entries }
    }

    fn around(&self, v: usize) -> &[(usize, usize)] {
        &self.entries[self.start[v]..self.start[v + 1]]
    }
}

fn finish(
    g: &SignedGraph,
    negated: VertexSet,
    explored: u64,
    method: Method,
) -> Result<FrustrationResult> {
    let state = SwitchState::from_set(g.n(), negated)?.normalized();
    let witness = switch(g, &state)?;
    Ok(FrustrationResult {
        f: witness.negative_edge_count(),
        witness_state: state,
        witness_signature: witness.signature(),
        states_explored: explored,
        method,
    })
}

/// Exhaustive search over all `2^(n-1)` states in Gray-code order.
pub fn frustration_bruteforce(g: &SignedGraph) -> Result<FrustrationResult> {
    check_capacity("brute-force solver", g.n(), BRUTE_FORCE_MAX_N)?;
    g.require_connected()?;
    let n = g.n();
    let csr = Csr::new(g);
    let mut frustrated: Vec<bool> = g.edges().iter().map(|e| e.sign.is_negative()).collect();
    // balance[v] = frustrated incident edges − satisfied incident edges
    let mut balance = vec![0i64; n];
    for (e, ed) in g.edges().iter().enumerate() {
        let d = if frustrated[e] { 1 } else { -1 };
        balance[ed.u] += d;
        balance[ed.v] += d;
    }
    let mut count = g.negative_edge_count() as i64;
    let mut best = count;
    let mut best_state = 0u64;
    let mut state = 0u64;
    let total: u64 = if n <= 1 { 1 } else { 1u64 << (n - 1) };
    let mut explored = 1u64;
    for step in 1..total {
        if best == 0 {
            break;
        }
        let v = step.trailing_zeros() as usize + 1;
        count -= balance[v];
        balance[v] = -balance[v];
        for &(w, e) in csr.around(v) {
            frustrated[e] = !frustrated[e];
            balance[w] += if frustrated[e] { 2 } else { -2 };
        }
        state ^= 1u64 << v;
        explored += 1;
        if count < best {
            best = count;
            best_state = state;
        }
    }
    finish(g, best_state, explored, Method::Bruteforce)
}

struct Search<'a> {
    csr: &'a Csr,
    negative: Vec<bool>,
    order: Vec<usize>,
    decided: Vec<bool>,
    // violations at v against decided neighbours if v takes +1 / −1
    if_plus: Vec<usize>,
    if_minus: Vec<usize>,
    cost: usize,
    slack: usize,
    state: u64,
    best: usize,
    best_state: u64,
    explored: u64,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) {
        self.explored += 1;
        if depth == self.order.len() {
            if self.cost < self.best {
                self.best = self.cost;
                self.best_state = self.state;
            }
            return;
        }
        let v = self.order[depth];
        let choices: &[bool] = if depth == 0 {
            &[false]
        } else if self.if_minus[v] < self.if_plus[v] {
            &[true, false]
        } else {
            &[false, true]
        };
        for &minus in choices {
            let own_min = self.if_plus[v].min(self.if_minus[v]);
            let own = if minus {
                self.if_minus[v]
            } else {
                self.if_plus[v]
            };
            self.cost += own;
            self.slack -= own_min;
            self.decided[v] = true;
            if minus {
                self.state |= 1u64 << v;
            }
            for &(w, e) in self.csr.around(v) {
                if self.decided[w] {
                    continue;
                }
                let before = self.if_plus[w].min(self.if_minus[w]);
                // w agrees with v across a positive edge, disagrees across a negative one
                if self.negative[e] != minus {
                    self.if_plus[w] += 1;
                } else {
                    self.if_minus[w] += 1;
                }
                self.slack = self.slack + self.if_plus[w].min(self.if_minus[w]) - before;
            }
            if self.cost + self.slack < self.best {
                self.descend(depth + 1);
            }
            for &(w, e) in self.csr.around(v) {
                if self.decided[w] {
                    continue;
                }
                let before = self.if_plus[w].min(self.if_minus[w]);
                if self.negative[e] != minus {
                    self.if_plus[w] -= 1;
                } else {
                    self.if_minus[w] -= 1;
                }
                self.slack = self.slack + self.if_plus[w].min(self.if_minus[w]) - before;
            }
            self.state &= !(1u64 << v);
            self.decided[v] = false;
            self.slack += own_min;
            self.cost -= own;
        }
    }
}

fn bfs_order(g: &SignedGraph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    if g.n() == 0 {
        return order;
    }
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

/// Depth-first search over vertex states in BFS order with a lower bound
/// made of the decided cost plus, for every undecided vertex, the cheaper of
/// its two costs against already decided neighbours.
pub fn frustration_branch_bound(g: &SignedGraph) -> Result<FrustrationResult> {
    check_capacity("branch-and-bound solver", g.n(), BRANCH_BOUND_MAX_N)?;
    g.require_connected()?;
    let n = g.n();
    if n == 0 {
        return finish(g, 0, 1, Method::BranchBound);
    }
    let csr = Csr::new(g);
    let mut search = Search {
        csr: &csr,
        negative: g.edges().iter().map(|e| e.sign.is_negative()).collect(),
        order: bfs_order(g),
        decided: vec![false; n],
        if_plus: vec![0; n],
        if_minus: vec![0; n],
        cost: 0,
        slack: 0,
        state: 0,
        best: g.negative_edge_count(),
        best_state: 0,
        explored: 0,
    };
    search.descend(0);
    let (best_state, explored) = (search.best_state, search.explored);
    finish(g, best_state, explored, Method::BranchBound)
}

/// Frustration index of a connected graph with the faster exact method.
pub fn frustration_index(g: &SignedGraph) -> Result<usize> {
    Ok(frustration_branch_bound(g)?.f)
}

/// Sum of the frustration indices of the connected components.
pub fn frustration_over_components(g: &SignedGraph) -> Result<usize> {
    let mut total = 0;
    for comp in g.components() {
        total += frustration_index(&g.induced_subgraph(&comp)?)?;
    }
    Ok(total)
}

/// True iff the current signature has exactly `F` negative edges.
pub fn is_minimal_signature(g: &SignedGraph) -> Result<bool> {
    Ok(g.negative_edge_count() == frustration_index(g)?)
}

/// Some cut with more negative than positive boundary edges, if any.
///
/// Scans all sides not containing vertex 0 in Gray-code order, tracking
/// `neg − pos` of the boundary as single vertices change sides.
pub fn find_unequilibrated_cut(g: &SignedGraph) -> Result<Option<CutProfile>> {
    check_capacity("unequilibrated-cut search", g.n(), BRUTE_FORCE_MAX_N)?;
    g.require_connected()?;
    scan_unequilibrated(g)
}

/// As [`find_unequilibrated_cut`] without the connectivity requirement.
pub(crate) fn scan_unequilibrated(g: &SignedGraph) -> Result<Option<CutProfile>> {
    let n = g.n();
    if n < 2 {
        return Ok(None);
    }
    let mut side = 0u64;
    let mut excess: i64 = 0;
    for step in 1..(1u64 << (n - 1)) {
        let v = step.trailing_zeros() as usize + 1;
        let v_was_in = side >> v & 1 == 1;
        for &(w, e) in g.incident(v) {
            let weight = if g.edges()[e].sign.is_negative() {
                1
            } else {
                -1
            };
            let w_in = side >> w & 1 == 1;
            if w_in == v_was_in {
                excess += weight;
            } else {
                excess -= weight;
            }
        }
        side ^= 1u64 << v;
        if excess > 0 {
            return cut_profile(g, side).map(Some);
        }
    }
    Ok(None)
}

/// Maximum number of edges crossing a bipartition, signs ignored.
pub fn max_cut_bruteforce(g: &SignedGraph) -> Result<(usize, VertexSet)> {
    check_capacity("max-cut search", g.n(), BRUTE_FORCE_MAX_N)?;
    let n = g.n();
    if n < 2 {
        return Ok((0, 0));
    }
    let mut side = 0u64;
    let mut size: i64 = 0;
    let mut best = (0usize, 0u64);
    for step in 1..(1u64 << (n - 1)) {
        let v = step.trailing_zeros() as usize + 1;
        for &(w, _) in g.incident(v) {
            if (side >> w & 1) == (side >> v & 1) {
                size += 1;
            } else {
                size -= 1;
            }
        }
        side ^= 1u64 << v;
        if size as usize > best.0 {
            best = (size as usize, side);
        }
    }
    debug_assert!(best.1 & !full_set(n) == 0);
    Ok(best)
}
