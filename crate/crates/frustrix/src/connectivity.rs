//! Bridges, blocks and girth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Cut-edges of a connected graph, ascending.
pub fn bridges(g: &SignedGraph) -> Result<Vec<usize>> {
    g.require_connected()?;
    Ok(bridges_unchecked(g))
}

/// Tarjan low-link bridge search over every component.
pub(crate) fn bridges_unchecked(g: &SignedGraph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter it, next incidence to scan)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, entry, ref mut cursor)) = stack.last_mut() {
            let inc = g.incident(v);
            if *cursor < inc.len() {
                let (w, e) = inc[*cursor];
                *cursor += 1;
                if Some(e) == entry {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(entry.expect("child frame has an entry edge"));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_two_edge_connected(g: &SignedGraph) -> bool {
    g.is_connected() && bridges_unchecked(g).is_empty()
}

/// A maximal 2-edge-connected piece left after deleting all bridges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    /// Incident to exactly one bridge.
    pub is_leaf: bool,
}

pub fn block_decomposition(g: &SignedGraph) -> Result<Vec<Block>> {
    let cut = bridges(g)?;
    let mut is_bridge = vec![false; g.m()];
    for &e in &cut {
        is_bridge[e] = true;
    }
    let mut block_of = vec![usize::MAX; g.n()];
    let mut blocks = Vec::new();
    for start in 0..g.n() {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        block_of[start] = id;
        let mut stack = vec![start];
        let mut vertices = Vec::new();
        while let Some(v) = stack.pop() {
            vertices.push(v);
            for &(w, e) in g.incident(v) {
                if !is_bridge[e] && block_of[w] == usize::MAX {
                    block_of[w] = id;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        blocks.push(vertices);
    }
    let mut bridge_count = vec![0usize; blocks.len()];
    for &e in &cut {
        let ed = g.edges()[e];
        bridge_count[block_of[ed.u]] += 1;
        bridge_count[block_of[ed.v]] += 1;
    }
    Ok(blocks
        .into_iter()
        .zip(bridge_count)
        .map(|(vertices, c)| Block {
            vertices,
            is_leaf: c == 1,
        })
        .collect())
}

/// Length of a shortest cycle; a digon counts as a 2-cycle.
pub fn girth(g: &SignedGraph) -> Result<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        via[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &(w, e) in g.incident(u) {
                if e == via[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(Error::NoCycle)
    } else {
        Ok(best)
    }
}
