use std::collections::BTreeSet;

use frustrix::census::{
    enumerate_subcubic, enumerate_switching_classes, switching_isomorphic, Filter,
};
use frustrix::SignedGraph;

/// Every permutation of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = 1u32;
    let mut grew = true;
    while grew {
        grew = false;
        for &(a, b) in edges {
            if (seen >> a & 1) != (seen >> b & 1) {
                seen |= 1 << a | 1 << b;
                grew = true;
            }
        }
    }
    seen == (1 << n) - 1
}

/// Smallest edge mask over all relabelings.
fn brute_canonical(n: usize, mask: u32, perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| relabel_mask(n, mask, p))
        .min()
        .unwrap()
}

/// Isomorphism classes of connected simple subcubic graphs on `n` vertices,
/// found by scanning every labeled graph.
fn brute_force_classes(n: usize) -> BTreeSet<u32> {
    let all = pairs(n);
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1 << all.len()) {
        let edges: Vec<(usize, usize)> = all
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mut deg = vec![0; n];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d > 3) || !connected(n, &edges) {
            continue;
        }
        classes.insert(brute_canonical(n, mask, &perms));
    }
    classes
}

fn edge_mask(g: &SignedGraph) -> u32 {
    g.edges()
        .iter()
        .fold(0, |acc, e| acc | 1 << pair_index(g.n(), e.u, e.v))
}

#[test]
fn small_counts_match_a_labeled_scan() {
    for n in 1..=6 {
        let oracle = brute_force_classes(n);
        let perms = permutations(n);
        let found: BTreeSet<u32> = enumerate_subcubic(n, Filter::connected())
            .unwrap()
            .iter()
            .map(|g| brute_canonical(n, edge_mask(g), &perms))
            .collect();
        assert_eq!(found, oracle, "n = {n}");
        assert_eq!(
            enumerate_subcubic(n, Filter::connected()).unwrap().len(),
            oracle.len()
        );
    }
}

#[test]
fn counts_match_published_tables() {
    // connected graphs of maximum degree at most 3
    let subcubic = [1, 1, 2, 6, 10, 29, 64, 194, 531, 1733];
    for (i, &want) in subcubic.iter().enumerate() {
        assert_eq!(
            enumerate_subcubic(i + 1, Filter::connected())
                .unwrap()
                .len(),
            want,
            "n = {}",
            i + 1
        );
    }
    // connected cubic graphs
    for (n, want) in [(4, 1), (6, 2), (8, 5), (10, 19)] {
        assert_eq!(
            enumerate_subcubic(n, Filter::cubic()).unwrap().len(),
            want,
            "cubic n = {n}"
        );
    }
}

#[test]
fn cubic_bridgeless_counts() {
    // the smallest cubic graph with a bridge has 10 vertices
    for (n, want) in [(4, 1), (6, 2), (8, 5), (10, 18)] {
        let filter = Filter {
            cubic: true,
            two_edge_connected: true,
            girth_min: None,
        };
        assert_eq!(
            enumerate_subcubic(n, filter).unwrap().len(),
            want,
            "n = {n}"
        );
    }
}

#[test]
fn girth_filter_drops_short_cycles() {
    let filter = Filter {
        cubic: true,
        girth_min: Some(5),
        ..Filter::default()
    };
    // Petersen graph is the only cubic graph of girth 5 on 10 vertices
    assert_eq!(enumerate_subcubic(10, filter).unwrap().len(), 1);
    assert!(enumerate_subcubic(8, filter).unwrap().is_empty());
}

/// Smallest representative of the class of `sig` under switching and
/// automorphisms of the underlying graph.
fn brute_class_key(g: &SignedGraph, sig: u32, automorphisms: &[Vec<usize>]) -> u32 {
    let n = g.n();
    let index: Vec<usize> = g.edges().iter().map(|e| pair_index(n, e.u, e.v)).collect();
    let position = |a: usize, b: usize| {
        index
            .iter()
            .position(|&i| i == pair_index(n, a, b))
            .unwrap()
    };
    let mut best = u32::MAX;
    for p in automorphisms {
        let mut image = 0u32;
        for (i, e) in g.edges().iter().enumerate() {
            if sig >> i & 1 == 1 {
                image |= 1 << position(p[e.u], p[e.v]);
            }
        }
        for side in 0u32..(1 << n) {
            let mut switched = image;
            for (i, e) in g.edges().iter().enumerate() {
                if (side >> e.u & 1) != (side >> e.v & 1) {
                    switched ^= 1 << i;
                }
            }
            best = best.min(switched);
        }
    }
    best
}

#[test]
fn switching_classes_match_an_orbit_count() {
    for n in 1..=6 {
        let perms = permutations(n);
        for g in enumerate_subcubic(n, Filter::connected()).unwrap() {
            let mask = edge_mask(&g);
            let autos: Vec<Vec<usize>> = perms
                .iter()
                .filter(|p| relabel_mask(n, mask, p) == mask)
                .cloned()
                .collect();
            let orbits: BTreeSet<u32> = (0u32..(1 << g.m()))
                .map(|s| brute_class_key(&g, s, &autos))
                .collect();
            assert_eq!(
                enumerate_switching_classes(&g, true).unwrap().len(),
                orbits.len(),
                "{g:?}"
            );
            let trivial: BTreeSet<u32> = (0u32..(1 << g.m()))
                .map(|s| brute_class_key(&g, s, &[(0..n).collect()]))
                .collect();
            assert_eq!(
                enumerate_switching_classes(&g, false).unwrap().len(),
                trivial.len()
            );
            assert_eq!(trivial.len(), 1 << (g.m() + 1 - n));
        }
    }
}

fn relabel_mask(n: usize, mask: u32, p: &[usize]) -> u32 {
    pairs(n)
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0u32, |acc, (_, &(a, b))| {
            acc | 1 << pair_index(n, p[a], p[b])
        })
}

#[test]
fn listed_classes_are_pairwise_inequivalent() {
    for n in 3..=7 {
        for g in enumerate_subcubic(n, Filter::connected()).unwrap() {
            let signed: Vec<SignedGraph> = enumerate_switching_classes(&g, true)
                .unwrap()
                .iter()
                .map(|s| g.with_signature(s).unwrap())
                .collect();
            for (i, a) in signed.iter().enumerate() {
                for b in &signed[i + 1..] {
                    assert!(!switching_isomorphic(a, b).unwrap());
                }
            }
        }
    }
}
