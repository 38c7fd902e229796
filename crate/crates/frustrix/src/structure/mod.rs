//! Structural checks on signed subcubic graphs: the X/Y partition, forbidden
//! trees and odd cycles, critical frustration, and reducible configurations.

mod patterns;
mod reduce;

pub use patterns::{detect_all, detect_configuration, ConfigurationMatch, Rule};
pub use reduce::{
    apply_reduction, normalize_to_minimal, reduce_to_fixpoint, Condition, ReductionOutcome,
    ReductionStep, SkippedMatch,
};

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{members, SignedGraph, VertexSet};
use crate::solver::{frustration_index, frustration_over_components};

pub const EQUILIBRATED_CUT_MAX_N: usize = 20;

/// `x`: vertices meeting no negative edge; `y`: the rest.
/// `x_strata[i]` holds the X vertices with `i` neighbours in Y and
/// `y_strata[i]` the Y vertices with `i` neighbours in X.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XYPartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub x_strata: [Vec<usize>; 4],
    pub y_strata: [Vec<usize>; 3],
}

pub fn xy_partition(g: &SignedGraph) -> XYPartition {
    let in_y: Vec<bool> = (0..g.n())
        .map(|v| {
            g.incident(v)
                .iter()
                .any(|&(_, e)| g.edges()[e].sign.is_negative())
        })
        .collect();
    let mut p = XYPartition {
        x: Vec::new(),
        y: Vec::new(),
        x_strata: Default::default(),
        y_strata: Default::default(),
    };
    for v in 0..g.n() {
        // neighbours on the other side, counted with multiplicity
        let across = g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| in_y[w] != in_y[v])
            .count();
        if in_y[v] {
            p.y.push(v);
            p.y_strata[across.min(2)].push(v);
        } else {
            p.x.push(v);
            p.x_strata[across.min(3)].push(v);
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KeyInequality {
    /// `|X₃| + |Y₀|`
    pub lhs: usize,
    /// `|Y₂|`
    pub rhs: usize,
    pub holds: bool,
}

pub fn key_inequality_report(p: &XYPartition) -> KeyInequality {
    let lhs = p.x_strata[3].len() + p.y_strata[0].len();
    let rhs = p.y_strata[2].len();
    KeyInequality {
        lhs,
        rhs,
        holds: lhs <= rhs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Tree,
    OddCycle,
}

/// An induced tree or odd cycle on `2k+1` vertices with too many negative
/// boundary edges for a minimal signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TcWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub k: usize,
    pub negative_boundary: usize,
}

fn classify(g: &SignedGraph, set: VertexSet) -> Option<TcWitness> {
    let s = set.count_ones() as usize;
    if s % 2 == 0 {
        return None;
    }
    let k = s / 2;
    let mut inside = 0;
    let mut negative_boundary = 0;
    let mut inner_degree = vec![0usize; g.n()];
    for e in g.edges() {
        match (set >> e.u & 1 == 1, set >> e.v & 1 == 1) {
            (true, true) => {
                inside += 1;
                inner_degree[e.u] += 1;
                inner_degree[e.v] += 1;
            }
            (false, false) => {}
            _ => negative_boundary += usize::from(e.sign.is_negative()),
        }
    }
    let vertices: Vec<usize> = members(set).collect();
    let kind = if inside + 1 == s && negative_boundary >= k + 2 {
        WitnessKind::Tree
    } else if s >= 3
        && inside == s
        && vertices.iter().all(|&v| inner_degree[v] == 2)
        && negative_boundary > k
    {
        WitnessKind::OddCycle
    } else {
        return None;
    };
    Some(TcWitness {
        kind,
        vertices,
        k,
        negative_boundary,
    })
}

/// The first forbidden induced tree or odd cycle with `k ≤ k_max`, scanning
/// connected vertex sets by size and then by bitmask.
pub fn violates_tc_free(g: &SignedGraph, k_max: usize) -> Option<TcWitness> {
    let max_size = (2 * k_max + 1).min(g.n());
    let mut level: BTreeSet<VertexSet> = (0..g.n()).map(|v| 1u64 << v).collect();
    for size in 1..=max_size {
        if size % 2 == 1 {
            if let Some(w) = level.iter().find_map(|&set| classify(g, set)) {
                return Some(w);
            }
        }
        if size == max_size {
            break;
        }
        let mut next = BTreeSet::new();
        for &set in &level {
            for v in members(set) {
                for w in g.neighbors(v) {
                    if set >> w & 1 == 0 {
                        next.insert(set | 1 << w);
                    }
                }
            }
        }
        level = next;
    }
    None
}

/// True iff `F(g) = k` and deleting any single edge lowers `F`. With
/// `k = 0` this holds only for edgeless graphs, where there is nothing to
/// delete.
pub fn is_critically_frustrated(g: &SignedGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Ok(g.m() == 0);
    }
    if frustration_index(g)? != k {
        return Ok(false);
    }
    for e in 0..g.m() {
        if frustration_over_components(&g.delete_edge(e)?)? >= k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every positive edge `uv` lies in a cut `[S, Sᶜ]` with as many
/// positive as negative edges. Sides containing `u` but not `v` are scanned
/// in Gray-code order.
pub fn every_positive_edge_in_equilibrated_cut(g: &SignedGraph) -> Result<bool> {
    let n = g.n();
    if n > EQUILIBRATED_CUT_MAX_N {
        return Err(Error::Capacity {
            what: "equilibrated-cut search",
            max: EQUILIBRATED_CUT_MAX_N,
            actual: n,
        });
    }
    for edge in g.edges() {
        if edge.sign.is_negative() {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|&w| w != edge.u && w != edge.v).collect();
        let mut side: VertexSet = 1 << edge.u;
        // positive minus negative boundary edges of the current side
        let mut balance: i64 = g
            .incident(edge.u)
            .iter()
            .map(|&(_, e)| g.edges()[e].sign.value() as i64)
            .sum();
        let mut found = balance == 0;
        let mut step = 1u64;
        while !found && step < 1 << free.len() {
            let w = free[step.trailing_zeros() as usize];
            side ^= 1 << w;
            let now_in = side >> w & 1 == 1;
            for &(t, e) in g.incident(w) {
                let s = g.edges()[e].sign.value() as i64;
                // an edge to the same side leaves the cut, otherwise it joins
                let crosses = (side >> t & 1 == 1) != now_in;
                balance += if crosses { s } else { -s };
            }
            found = balance == 0;
            step += 1;
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
