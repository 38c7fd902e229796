//! Rewrites for the reducible configurations and the fixpoint engine.
//!
//! Every rewrite deletes a configuration and reconnects its attachment
//! vertices; the offset is the claimed drop of the frustration index. Rules
//! whose claim depends on the signature require a minimal input signature.

use serde::Serialize;

use super::patterns::{detect_all, ConfigurationMatch, Rule};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchState, VertexSet};
use crate::solver::{frustration_branch_bound, is_minimal_signature};
use crate::switching::{cut_profile, switch, switch_at};

use Sign::{Negative as N, Positive as P};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub matched: ConfigurationMatch,
    /// Which branch of the rewrite was taken.
    pub variant: &'static str,
    pub input: SignedGraph,
    pub output: SignedGraph,
    /// Claimed `F(input) − F(output)`.
    pub offset: usize,
    pub conditions_checked: Vec<Condition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Vx {
    Old(usize),
    New(usize),
}

/// Deletes vertices, adds fresh ones and new edges, and overrides signs of
/// surviving edges. Surviving vertices keep their relative order; fresh
/// vertices follow them.
struct Rewrite<'a> {
    g: &'a SignedGraph,
    removed: VertexSet,
    fresh: usize,
    added: Vec<(Vx, Vx, Sign)>,
    resigned: Vec<(usize, usize, Sign)>,
}

impl<'a> Rewrite<'a> {
    fn new(g: &'a SignedGraph, removed: &[usize]) -> Self {
        Rewrite {
            g,
            removed: removed.iter().fold(0, |acc, &v| acc | 1 << v),
            fresh: 0,
            added: Vec::new(),
            resigned: Vec::new(),
        }
    }

    fn join(mut self, a: Vx, b: Vx, sign: Sign) -> Self {
        self.added.push((a, b, sign));
        self
    }

    fn build(self) -> Result<SignedGraph> {
        let mut index = vec![usize::MAX; self.g.n()];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if self.removed >> v & 1 == 0 {
                *slot = next;
                next += 1;
            }
        }
        let place = |x: Vx| match x {
            Vx::Old(v) => index[v],
            Vx::New(i) => next + i,
        };
        let mut edges = Vec::new();
        for e in self.g.edges() {
            if index[e.u] == usize::MAX || index[e.v] == usize::MAX {
                continue;
            }
            let sign = self
                .resigned
                .iter()
                .find(|&&(a, b, _)| (a, b) == (e.u, e.v) || (b, a) == (e.u, e.v))
                .map_or(e.sign, |&(_, _, s)| s);
            edges.push((index[e.u], index[e.v], sign));
        }
        for &(a, b, s) in &self.added {
            edges.push((place(a), place(b), s));
        }
        SignedGraph::new(next + self.fresh, edges)
    }
}

struct Checks {
    rule: Rule,
    list: Vec<Condition>,
}

impl Checks {
    fn require(&mut self, name: impl Into<String>, passed: bool) -> Result<()> {
        let name = name.into();
        self.list.push(Condition {
            name: name.clone(),
            passed,
        });
        if passed {
            Ok(())
        } else {
            Err(Error::RuleInapplicable {
                rule: self.rule.name(),
                reason: name,
            })
        }
    }

    fn minimal(&mut self, g: &SignedGraph) -> Result<()> {
        let ok = if g.is_connected() {
            is_minimal_signature(g)?
        } else {
            g.components().iter().try_fold(true, |acc, comp| {
                let sub = g.induced_subgraph(comp)?;
                Ok::<bool, Error>(acc && is_minimal_signature(&sub)?)
            })?
        };
        self.require("input signature is minimal", ok)
    }

    /// The unique neighbour of `v` outside `known`, with `v` of degree 3.
    fn third(&mut self, g: &SignedGraph, v: usize, known: &[usize]) -> Result<usize> {
        let others: Vec<usize> = g.neighbors(v).filter(|w| !known.contains(w)).collect();
        self.require(
            format!("vertex {v} has degree 3"),
            g.degree(v) == 3 && others.len() == 1,
        )?;
        Ok(others[0])
    }
}

fn sign(g: &SignedGraph, a: usize, b: usize) -> Sign {
    g.sign_between(a, b).expect("edge of the configuration")
}

/// Negative edges among `pairs`.
fn negatives(g: &SignedGraph, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .copied()
        .filter(|&(a, b)| sign(g, a, b) == N)
        .collect()
}

fn same_pair_set(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    let norm = |s: &[(usize, usize)]| {
        let mut v: Vec<(usize, usize)> = s.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        v.sort_unstable();
        v
    };
    norm(a) == norm(b)
}

use Vx::{New, Old};

fn rewrite_degree2(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (z, x, y) = (v[0], v[1], v[2]);
    ck.require("z has degree 2", g.degree(z) == 2)?;
    if !g.has_edge(x, y) {
        ck.require("neighbours of z are non-adjacent", true)?;
        let s = sign(g, z, x) * sign(g, z, y);
        let out = Rewrite::new(g, &[z]).join(Old(x), Old(y), s).build()?;
        return Ok((out, 0, "suppress"));
    }
    let positive = sign(g, x, y) * sign(g, x, z) * sign(g, y, z) == P;
    for (keep, drop) in [(x, y), (y, x)] {
        if g.degree(drop) == 2 {
            // the triangle hangs from `keep` alone
            ck.require(format!("triangle hangs from vertex {keep}"), true)?;
            let out = Rewrite::new(g, &[drop, z]).build()?;
            return Ok((out, usize::from(!positive), "pendant triangle"));
        }
    }
    if positive {
        ck.require("triangle is positive", true)?;
        for (keep, drop) in [(x, y), (y, x)] {
            let far = ck.third(g, drop, &[keep, z])?;
            if !g.has_edge(keep, far) {
                ck.require(format!("{keep} not adjacent to {far}"), true)?;
                let s = sign(g, keep, drop) * sign(g, drop, far);
                let out = Rewrite::new(g, &[drop, z])
                    .join(Old(keep), Old(far), s)
                    .build()?;
                return Ok((out, 0, "contract positive triangle"));
            }
        }
        ck.require("a triangle side contracts without a parallel edge", false)?;
        unreachable!()
    }
    ck.require("triangle is negative", true)?;
    let xp = ck.third(g, x, &[y, z])?;
    let yp = ck.third(g, y, &[x, z])?;
    if xp == yp || g.has_edge(xp, yp) {
        let out = Rewrite::new(g, &[x, y, z]).build()?;
        return Ok((out, 1, "delete negative triangle"));
    }
    ck.minimal(g)?;
    ck.require(
        "exactly one negative triangle edge",
        negatives(g, &[(x, y), (x, z), (y, z)]).len() == 1,
    )?;
    ck.require(
        "attachment edges positive",
        sign(g, x, xp) == P && sign(g, y, yp) == P,
    )?;
    let out = Rewrite::new(g, &[x, y, z])
        .join(Old(xp), Old(yp), P)
        .build()?;
    Ok((out, 1, "replace negative triangle by positive edge"))
}

fn rewrite_neg_triangle(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (a, b, c) = (v[0], v[1], v[2]);
    ck.minimal(g)?;
    ck.require(
        "bc negative, ab and ac positive",
        sign(g, b, c) == N && sign(g, a, b) == P && sign(g, a, c) == P,
    )?;
    let x = ck.third(g, a, &[b, c])?;
    let y = ck.third(g, b, &[a, c])?;
    let z = ck.third(g, c, &[a, b])?;
    ck.require("third neighbours distinct", x != y && y != z && x != z)?;
    for (far, variant) in [(z, "join x to z"), (y, "join x to y")] {
        if !g.has_edge(x, far) {
            ck.require(format!("{x} not adjacent to {far}"), true)?;
            let out = Rewrite::new(g, &[a, b, c])
                .join(Old(x), Old(far), sign(g, a, x))
                .build()?;
            return Ok((out, 1, variant));
        }
    }
    ck.require("x non-adjacent to y or z", false)?;
    unreachable!()
}

fn rewrite_adj_triangles(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
    ck.minimal(g)?;
    ck.require("a not adjacent to b", !g.has_edge(a, b))?;
    let x = ck.third(g, a, &[c, d])?;
    let y = ck.third(g, b, &[c, d])?;
    ck.require("third neighbours of a and b differ", x != y)?;
    let h = [(a, c), (a, d), (c, d), (b, c), (b, d)];
    let neg = negatives(g, &h);
    let (pi, variant) = if neg.len() <= 1 {
        (g.clone(), "as is")
    } else {
        let side = if same_pair_set(&neg, &[(a, c), (b, d)]) {
            [a, d]
        } else if same_pair_set(&neg, &[(a, d), (b, c)]) {
            [a, c]
        } else {
            ck.require("negative edges form a switchable pair", false)?;
            unreachable!()
        };
        let mask = (1u64 << side[0]) | (1u64 << side[1]);
        ck.require(
            "switching cut is equilibrated",
            cut_profile(g, mask)?.is_equilibrated(),
        )?;
        (switch_at(g, mask)?, "switched")
    };
    let offset = negatives(&pi, &h).len();
    let out = Rewrite::new(&pi, &[b, c, d])
        .join(Old(a), Old(y), sign(&pi, b, y))
        .build()?;
    Ok((out, offset, variant))
}

fn rewrite_tri_4cycle(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (a, b, c, d, z) = (v[0], v[1], v[2], v[3], v[4]);
    ck.minimal(g)?;
    ck.require("dz negative", sign(g, d, z) == N)?;
    let x = ck.third(g, a, &[b, c])?;
    let y = ck.third(g, b, &[a, d])?;
    ck.third(g, z, &[c, d])?;
    let h = [(a, b), (b, d), (c, d), (a, c), (c, z), (d, z)];
    let neg = negatives(g, &h);
    let pi = if neg.len() <= 1 {
        g.clone()
    } else {
        let side = if same_pair_set(&neg, &[(d, z), (a, b)]) {
            [b, d]
        } else if same_pair_set(&neg, &[(d, z), (a, c)]) {
            [c, z]
        } else {
            ck.require("negative edges form a switchable pair", false)?;
            unreachable!()
        };
        let mask = (1u64 << side[0]) | (1u64 << side[1]);
        ck.require(
            "switching cut is equilibrated",
            cut_profile(g, mask)?.is_equilibrated(),
        )?;
        switch_at(g, mask)?
    };
    ck.require(
        "at most one negative edge in the configuration",
        negatives(&pi, &h).len() <= 1,
    )?;
    ck.require("cz positive", sign(&pi, c, z) == P)?;
    if !pi.has_edge(y, z) {
        ck.require(format!("{y} not adjacent to {z}"), true)?;
        let out = Rewrite::new(&pi, &[a, b, d])
            .join(Old(x), Old(c), sign(&pi, x, a))
            .join(Old(y), Old(z), sign(&pi, y, b))
            .build()?;
        return Ok((out, 1, "first replacement"));
    }
    if !pi.has_edge(x, z) {
        ck.require(format!("{x} not adjacent to {z}"), true)?;
        let mut rw = Rewrite::new(&pi, &[a, b, c])
            .join(Old(y), Old(d), sign(&pi, y, b))
            .join(Old(x), Old(z), sign(&pi, x, a));
        rw.resigned.push((d, z, P));
        return Ok((rw.build()?, 1, "second replacement"));
    }
    ck.require("x or y non-adjacent to z", false)?;
    unreachable!()
}

fn rewrite_shared_chord(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (a, b, c, d, x, y) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    ck.minimal(g)?;
    let six = [a, b, c, d, x, y];
    let mut outer = [0usize; 4];
    for (slot, &w) in [a, b, c, d].iter().enumerate() {
        let known: Vec<usize> = six.iter().copied().filter(|&u| u != w).collect();
        outer[slot] = ck.third(g, w, &known)?;
    }
    let [ap, bp, cp, dp] = outer;
    for w in [x, y] {
        ck.require(format!("vertex {w} has degree 3"), g.degree(w) == 3)?;
    }
    let (pairs, variant) = if ap != cp && bp != dp {
        ck.require("first replacement creates no parallel edge", true)?;
        ([(a, ap, c, cp), (b, bp, d, dp)], "first replacement")
    } else if ap != bp && cp != dp {
        ck.require("second replacement creates no parallel edge", true)?;
        ([(a, ap, b, bp), (c, cp, d, dp)], "second replacement")
    } else {
        ck.require("some replacement creates no parallel edge", false)?;
        unreachable!()
    };
    let mut rw = Rewrite::new(g, &six);
    rw.fresh = 2;
    for (i, &(p, pp, q, qp)) in pairs.iter().enumerate() {
        rw = rw
            .join(Old(pp), New(i), sign(g, p, pp))
            .join(Old(qp), New(i), sign(g, q, qp));
    }
    rw = rw.join(New(0), New(1), P);
    Ok((rw.build()?, 1, variant))
}

fn rewrite_h1(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (a, b, c, d, x, y) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    ck.minimal(g)?;
    ck.require("x not adjacent to y", !g.has_edge(x, y))?;
    let out = Rewrite::new(g, &[b, c, d])
        .join(Old(x), Old(y), P)
        .join(Old(a), Old(y), N)
        .build()?;
    Ok((out, 1, "replace by triangle"))
}

fn rewrite_h2(
    g: &SignedGraph,
    v: &[usize],
    ck: &mut Checks,
) -> Result<(SignedGraph, usize, &'static str)> {
    let (bp, b, z, u, y, c, cp, x) = (v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    ck.minimal(g)?;
    ck.require("x differs from b' and c'", x != bp && x != cp)?;
    let out = Rewrite::new(g, &[y, z, b, c])
        .join(Old(u), Old(bp), N)
        .join(Old(u), Old(cp), P)
        .build()?;
    Ok((out, 1, "contract"))
}

/// Applies the rewrite of `m` to `g`, checking the rule's side conditions.
pub fn apply_reduction(g: &SignedGraph, m: &ConfigurationMatch) -> Result<ReductionStep> {
    let mut ck = Checks {
        rule: m.rule,
        list: Vec::new(),
    };
    ck.require(
        "graph is simple and subcubic",
        g.is_simple() && g.is_subcubic(),
    )?;
    let expected = m.rule.labels().len();
    if m.vertices.len() != expected || m.vertices.iter().any(|&v| v >= g.n()) {
        return Err(Error::RuleInapplicable {
            rule: m.rule.name(),
            reason: format!("match needs {expected} vertices of the graph"),
        });
    }
    let v = &m.vertices;
    let (output, offset, variant) = match m.rule {
        Rule::Degree2Vertex => rewrite_degree2(g, v, &mut ck)?,
        Rule::NegTriangle => rewrite_neg_triangle(g, v, &mut ck)?,
        Rule::AdjTriangles => rewrite_adj_triangles(g, v, &mut ck)?,
        Rule::Tri4CycleNeg => rewrite_tri_4cycle(g, v, &mut ck)?,
        Rule::Neg4CyclesShared | Rule::TriPentaShared => rewrite_shared_chord(g, v, &mut ck)?,
        Rule::H1Subgraph => rewrite_h1(g, v, &mut ck)?,
        Rule::H2Subgraph => rewrite_h2(g, v, &mut ck)?,
        Rule::Pos2EdgeCut => {
            return Err(Error::RuleInapplicable {
                rule: m.rule.name(),
                reason: "configuration is reported only; it has no rewrite".into(),
            })
        }
    };
    ck.require("result is simple", output.is_simple())?;
    ck.require(
        "result stays connected",
        output.is_connected() || !g.is_connected(),
    )?;
    Ok(ReductionStep {
        rule: m.rule,
        matched: m.clone(),
        variant,
        input: g.clone(),
        output,
        offset,
        conditions_checked: ck.list,
    })
}

/// A match that was found but whose side conditions failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedMatch {
    pub rule: Rule,
    pub vertices: Vec<usize>,
    pub reason: String,
    /// Index of the step after which the skip happened.
    pub after_step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    /// Switch bringing the input to a minimal signature.
    pub normalizing_state: SwitchState,
    pub normalized: SignedGraph,
    pub final_graph: SignedGraph,
    pub total_offset: usize,
    pub steps: Vec<ReductionStep>,
    pub skipped: Vec<SkippedMatch>,
}

/// Switches a connected graph to a minimal signature.
pub fn normalize_to_minimal(g: &SignedGraph) -> Result<(SignedGraph, SwitchState)> {
    let result = frustration_branch_bound(g)?;
    Ok((switch(g, &result.witness_state)?, result.witness_state))
}

/// Switches to a minimal signature, then applies rewrites in priority order
/// until none applies. Matches failing their side conditions are recorded
/// and passed over.
pub fn reduce_to_fixpoint(g: &SignedGraph) -> Result<ReductionOutcome> {
    g.require_connected()?;
    g.require_simple()?;
    if !g.is_subcubic() {
        return Err(Error::InvalidGraph(
            "reduction needs a subcubic graph".into(),
        ));
    }
    let (normalized, state) = normalize_to_minimal(g)?;
    let mut current = normalized.clone();
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut skipped = Vec::new();
    'outer: loop {
        for rule in Rule::PRIORITY {
            for m in detect_all(&current, rule) {
                match apply_reduction(&current, &m) {
                    Ok(step) => {
                        debug_assert!(step.output.n() < current.n());
                        current = step.output.clone();
                        steps.push(step);
                        continue 'outer;
                    }
                    Err(Error::RuleInapplicable { reason, .. }) => skipped.push(SkippedMatch {
                        rule,
                        vertices: m.vertices.clone(),
                        reason,
                        after_step: steps.len(),
                    }),
                    Err(other) => return Err(other),
                }
            }
        }
        break;
    }
    let total_offset = steps.iter().map(|s| s.offset).sum();
    Ok(ReductionOutcome {
        normalizing_state: state,
        normalized,
        final_graph: current,
        total_offset,
        steps,
        skipped,
    })
}
