//! Enumeration of connected subcubic graphs up to isomorphism, switching
//! classes, and switching isomorphism.

mod canon;

pub use canon::{automorphisms, canonical_form, isomorphisms, CanonicalForm, CANONICAL_MAX_N};

use rayon::prelude::*;

use crate::connectivity::{girth, is_two_edge_connected};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignatureBits, SignedGraph};
use crate::switching::{
    canonical_spanning_tree, fundamental_cycle_signs, tree_canonical_signature,
};

pub const ENUMERATION_MAX_N: usize = 12;
pub const SWITCHING_ISO_MAX_N: usize = 10;
/// Largest cycle-space dimension whose classes are listed explicitly.
pub const CLASS_DIMENSION_MAX: usize = 24;

/// Restrictions on enumerated graphs; connectivity is always required.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filter {
    pub two_edge_connected: bool,
    pub cubic: bool,
    pub girth_min: Option<usize>,
}

impl Filter {
    pub fn connected() -> Self {
        Filter::default()
    }

    pub fn two_edge_connected() -> Self {
        Filter {
            two_edge_connected: true,
            ..Filter::default()
        }
    }

    pub fn cubic() -> Self {
        Filter {
            cubic: true,
            ..Filter::default()
        }
    }

    pub fn accepts(&self, g: &SignedGraph) -> bool {
        (!self.cubic || g.is_cubic())
            && (!self.two_edge_connected || is_two_edge_connected(g))
            && self.girth_min.is_none_or(|k| girth_at_least(g, k))
    }
}

fn girth_at_least(g: &SignedGraph, k: usize) -> bool {
    match girth(g) {
        Ok(c) => c >= k,
        Err(_) => true,
    }
}

/// Distances from `root`, `usize::MAX` when unreachable.
fn distances(g: &SignedGraph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Every connected child obtained by adding one vertex joined to 1–3
/// vertices of degree below 3, subject to the pruning rules of `filter`.
fn children(g: &SignedGraph, target: usize, filter: &Filter) -> Vec<SignedGraph> {
    let n = g.n();
    let open: Vec<usize> = (0..n).filter(|&v| g.degree(v) < 3).collect();
    let dist: Vec<Vec<usize>> = match filter.girth_min {
        Some(_) => (0..n).map(|v| distances(g, v)).collect(),
        None => Vec::new(),
    };
    let mut out = Vec::new();
    let k = open.len();
    for mask in 1u32..(1 << k) {
        if mask.count_ones() > 3 {
            continue;
        }
        let chosen: Vec<usize> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| open[i])
            .collect();
        if let Some(gmin) = filter.girth_min {
            let short = chosen.iter().enumerate().any(|(i, &a)| {
                chosen[i + 1..]
                    .iter()
                    .any(|&b| dist[a][b] != usize::MAX && dist[a][b] + 2 < gmin)
            });
            if short {
                continue;
            }
        }
        let mut edges: Vec<(usize, usize, Sign)> =
            g.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
        edges.extend(chosen.iter().map(|&a| (a, n, Sign::Positive)));
        let child = SignedGraph::new(n + 1, edges).expect("valid extension");
        if filter.cubic {
            let deficiency: usize = (0..=n).map(|v| 3 - child.degree(v)).sum();
            if deficiency > 3 * (target - (n + 1)) {
                continue;
            }
        }
        out.push(child);
    }
    out
}

/// One all-positive representative per isomorphism class of connected
/// simple subcubic graphs on `n` vertices passing `filter`, sorted by
/// certificate.
///
/// Graphs grow one vertex at a time (every connected graph has a vertex
/// whose removal keeps it connected); each level is deduplicated by
/// canonical certificate. Intermediate levels are pruned by the girth bound
/// and, for cubic targets, by the total degree deficiency.
pub fn enumerate_subcubic(n: usize, filter: Filter) -> Result<Vec<SignedGraph>> {
    Ok(enumerate_with_certs(n, filter)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// As [`enumerate_subcubic`], paired with each graph's certificate.
pub fn enumerate_with_certs(n: usize, filter: Filter) -> Result<Vec<(CanonicalForm, SignedGraph)>> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::Capacity {
            what: "subcubic enumeration",
            max: ENUMERATION_MAX_N,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let single = SignedGraph::new(1, [])?;
    let mut level = vec![(canonical_form(&single)?, single)];
    for _ in 1..n {
        let mut next: Vec<(CanonicalForm, SignedGraph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| children(g, n, &filter))
            .map(|g| {
                let form = canonical_form(&g).expect("within canonical capacity");
                let canon = g.relabel(&form.relabeling).expect("permutation");
                (form, canon)
            })
            .collect();
        next.par_sort_unstable_by(|a, b| a.0.cert.cmp(&b.0.cert));
        next.dedup_by(|a, b| a.0.cert == b.0.cert);
        level = next;
    }
    level.retain(|(_, g)| filter.accepts(g));
    Ok(level)
}

/// Keeps graphs whose girth is at least `g_min`; acyclic graphs pass.
pub fn girth_filtered(
    graphs: impl IntoIterator<Item = SignedGraph>,
    g_min: usize,
) -> Vec<SignedGraph> {
    graphs
        .into_iter()
        .filter(|g| girth_at_least(g, g_min))
        .collect()
}

/// One tree-canonical signature per switching class of the connected graph
/// `g` (canonical tree edges positive, cotree edges free), ascending by bits.
/// With `reduce_by_automorphisms`, only the smallest signature of each
/// automorphism orbit of classes is kept.
pub fn enumerate_switching_classes(
    g: &SignedGraph,
    reduce_by_automorphisms: bool,
) -> Result<Vec<SignatureBits>> {
    let tree = canonical_spanning_tree(g)?;
    let cotree = tree.cotree_edges();
    if cotree.len() > CLASS_DIMENSION_MAX {
        return Err(Error::Capacity {
            what: "switching class enumeration (cycle-space dimension)",
            max: CLASS_DIMENSION_MAX,
            actual: cotree.len(),
        });
    }
    let mut classes = Vec::with_capacity(1 << cotree.len());
    for mask in 0u64..(1 << cotree.len()) {
        let mut bits = 0u128;
        for (i, &e) in cotree.iter().enumerate() {
            if mask >> i & 1 == 1 {
                bits |= 1u128 << e;
            }
        }
        let sig = SignatureBits::new(bits, g.m())?;
        // parallel edges must keep opposite signs
        if g.with_signature(&sig).is_ok() {
            classes.push(sig);
        }
    }
    if !reduce_by_automorphisms {
        return Ok(classes);
    }
    let group = automorphisms(g)?;
    let mut kept = Vec::new();
    for sig in classes {
        let signed = g.with_signature(&sig)?;
        let mut smallest = sig;
        for gamma in &group {
            let image = signed.relabel(gamma)?;
            let (canon, _) = tree_canonical_signature(&image)?;
            smallest = smallest.min(canon.signature());
        }
        if smallest == sig {
            kept.push(sig);
        }
    }
    Ok(kept)
}

/// True iff some isomorphism of underlying graphs carries `b` onto a
/// signature switching-equivalent to `a`.
pub fn switching_isomorphic(a: &SignedGraph, b: &SignedGraph) -> Result<bool> {
    for g in [a, b] {
        if g.n() > SWITCHING_ISO_MAX_N {
            return Err(Error::Capacity {
                what: "switching isomorphism",
                max: SWITCHING_ISO_MAX_N,
                actual: g.n(),
            });
        }
        g.require_connected()?;
    }
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    if canonical_form(a)?.cert != canonical_form(b)?.cert {
        return Ok(false);
    }
    let sig_a = a.signature();
    for phi in isomorphisms(a, b)? {
        let mut bits = 0u128;
        for (i, e) in a.edges().iter().enumerate() {
            let sign = b
                .sign_between(phi[e.u], phi[e.v])
                .expect("isomorphism preserves edges");
            if sign.is_negative() {
                bits |= 1u128 << i;
            }
        }
        if fundamental_cycle_signs(a, &sig_a, &SignatureBits::new(bits, a.m())?)? {
            return Ok(true);
        }
    }
    Ok(false)
}
