#![allow(dead_code)]

use frustrix::{Sign, SignedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED_ENV: &str = "FRUSTRIX_SEED";

pub fn rng(stream: u64) -> ChaCha8Rng {
    let seed = std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_f00d);
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A random connected simple subcubic graph on `n` vertices with random
/// signs: a random tree, then random extra edges.
pub fn random_subcubic(rng: &mut impl Rng, n: usize, negative_ratio: f64) -> SignedGraph {
    let mut deg = vec![0usize; n];
    let mut pairs = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&v| deg[v] < 3).collect();
        let p = *open.choose(rng).expect("a tree vertex with spare degree");
        pairs.push((p.min(order[i]), p.max(order[i])));
        deg[p] += 1;
        deg[order[i]] += 1;
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra * 3 {
        if pairs.len() >= n - 1 + extra {
            break;
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let (a, b) = (a.min(b), a.max(b));
        if a == b || deg[a] == 3 || deg[b] == 3 || pairs.contains(&(a, b)) {
            continue;
        }
        pairs.push((a, b));
        deg[a] += 1;
        deg[b] += 1;
    }
    let edges: Vec<(usize, usize, Sign)> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, Sign::from_negative(rng.gen_bool(negative_ratio))))
        .collect();
    SignedGraph::new(n, edges).expect("valid random graph")
}

/// As [`random_subcubic`] with every vertex of degree 3 when possible.
pub fn random_cubic_ish(rng: &mut impl Rng, n: usize) -> SignedGraph {
    let mut best = random_subcubic(rng, n, 0.5);
    for _ in 0..20 {
        let g = random_subcubic(rng, n, 0.5);
        if g.m() > best.m() {
            best = g;
        }
    }
    best
}
