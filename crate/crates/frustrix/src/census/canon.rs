//! Canonical labeling of small unsigned graphs and isomorphism enumeration.

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub const CANONICAL_MAX_N: usize = 16;

/// Isomorphism-class certificate of the underlying simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub cert: Vec<u8>,
    /// `relabeling[v]` is the canonical label of vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn cert_hex(&self) -> String {
        self.cert.iter().map(|b| format!("{b:02x}")).collect()
    }
}

type Cells = Vec<Vec<usize>>;

struct Labeler {
    n: usize,
    adj: Vec<u32>,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Labeler {
    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let masks: Vec<u32> = cells
                .iter()
                .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        (
                            masks
                                .iter()
                                .map(|m| (self.adj[v] & m).count_ones())
                                .collect(),
                            v,
                        )
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn encode(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | u128::from(self.adj[order[i]] >> order[j] & 1 == 1);
            }
        }
        code
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for v in 0..self.n {
                let (ra, rb) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.encode(&order);
            match &self.best {
                Some((best, best_order)) if code == *best => {
                    // vertex at position i of this leaf maps to position i of the best leaf
                    let mut gamma = vec![0; self.n];
                    for (i, &v) in order.iter().enumerate() {
                        gamma[v] = best_order[i];
                    }
                    self.automorphisms.push(gamma);
                }
                Some((best, _)) if code > *best => {}
                _ => self.best = Some((code, order)),
            }
            return;
        }
        let smallest = cells
            .iter()
            .filter(|c| c.len() > 1)
            .map(Vec::len)
            .min()
            .expect("non-singleton cell");
        let target = cells
            .iter()
            .position(|c| c.len() == smallest)
            .expect("cell exists");
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            tried.push(v);
        }
    }
}

fn adjacency_masks(g: &SignedGraph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbor_set(v) as u32).collect()
}

/// Canonical certificate of the underlying graph (signs and edge
/// multiplicities ignored): refinement to an equitable partition, then
/// backtracking over individualizations with automorphism pruning, keeping
/// the smallest adjacency encoding.
pub fn canonical_form(g: &SignedGraph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::Capacity {
            what: "canonical labeling",
            max: CANONICAL_MAX_N,
            actual: n,
        });
    }
    let mut labeler = Labeler {
        n,
        adj: adjacency_masks(g),
        best: None,
        automorphisms: Vec::new(),
    };
    if n == 0 {
        return Ok(CanonicalForm {
            cert: vec![0],
            relabeling: vec![],
        });
    }
    labeler.search(vec![(0..n).collect()], &mut Vec::new());
    let (code, order) = labeler.best.expect("at least one leaf");
    let mut relabeling = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        relabeling[v] = i;
    }
    let mut cert = Vec::with_capacity(17);
    cert.push(n as u8);
    cert.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalForm { cert, relabeling })
}

/// All isomorphisms from the underlying graph of `a` onto that of `b`, as
/// vertex maps `a → b`. Both graphs must be simple.
pub fn isomorphisms(a: &SignedGraph, b: &SignedGraph) -> Result<Vec<Vec<usize>>> {
    a.require_simple()?;
    b.require_simple()?;
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return Ok(Vec::new());
    }
    let invariant = |g: &SignedGraph, v: usize| {
        let mut around: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
        around.sort_unstable();
        (g.degree(v), around)
    };
    let inv_a: Vec<_> = (0..n).map(|v| invariant(a, v)).collect();
    let inv_b: Vec<_> = (0..n).map(|v| invariant(b, v)).collect();
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(Vec::new());
    }
    // breadth-first order over every component of a
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in a.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let adj_a = adjacency_masks(a);
    let adj_b = adjacency_masks(b);
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        adj_a: &[u32],
        adj_b: &[u32],
        inv_a: &[(usize, Vec<usize>)],
        inv_b: &[(usize, Vec<usize>)],
        map: &mut Vec<usize>,
        used: &mut u32,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(map.clone());
            return;
        }
        let v = order[depth];
        for w in 0..adj_b.len() {
            if *used >> w & 1 == 1 || inv_a[v] != inv_b[w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| (adj_a[v] >> u & 1) == (adj_b[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            extend(depth + 1, order, adj_a, adj_b, inv_a, inv_b, map, used, out);
            *used &= !(1 << w);
            map[v] = usize::MAX;
        }
    }

    extend(
        0, &order, &adj_a, &adj_b, &inv_a, &inv_b, &mut map, &mut used, &mut out,
    );
    Ok(out)
}

pub fn automorphisms(g: &SignedGraph) -> Result<Vec<Vec<usize>>> {
    isomorphisms(g, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> SignedGraph {
        SignedGraph::all_positive(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c4() -> SignedGraph {
        SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn distinguishes_k4_and_c4() {
        assert_ne!(
            canonical_form(&k4()).unwrap().cert,
            canonical_form(&c4()).unwrap().cert
        );
    }

    #[test]
    fn relabeled_paths_share_a_certificate() {
        let p = SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = SignedGraph::all_positive(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let (cp, cq) = (canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert_eq!(cp.cert, cq.cert);
        assert_eq!(
            p.relabel(&cp.relabeling).unwrap(),
            q.relabel(&cq.relabeling).unwrap()
        );
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&k4()).unwrap().len(), 24);
        assert_eq!(automorphisms(&c4()).unwrap().len(), 8);
        assert!(isomorphisms(&k4(), &c4()).unwrap().is_empty());
    }

    #[test]
    fn empty_graph_on_many_vertices_is_fast() {
        let g = SignedGraph::new(12, []).unwrap();
        assert_eq!(canonical_form(&g).unwrap().cert[0], 12);
    }

    #[test]
    fn capacity() {
        let g = SignedGraph::new(17, []).unwrap();
        assert!(canonical_form(&g).unwrap_err().is_capacity());
    }
}
