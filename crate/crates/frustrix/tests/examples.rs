//! Worked examples for each module, checked against hand computation or an
//! independent oracle in this file.

mod common;

use frustrix::census::{enumerate_switching_classes, switching_isomorphic};
use frustrix::connectivity::{block_decomposition, bridges, girth};
use frustrix::families::{
    digon_graph, gadget, gadget_chain, gamma, petersen, petersen_negative, triangle_tree_extremal,
    w_graphs, CubicTree, GadgetKind,
};
use frustrix::solver::{
    find_unequilibrated_cut, frustration_branch_bound, frustration_bruteforce, frustration_index,
    frustration_over_components, is_minimal_signature, max_cut_bruteforce,
};
use frustrix::structure::{
    detect_configuration, every_positive_edge_in_equilibrated_cut, is_critically_frustrated,
    key_inequality_report, violates_tc_free, xy_partition, Rule,
};
use frustrix::switching::{
    cut_profile, fundamental_cycle_signs, negative_edge_count, subdivide_edge, switch,
    tree_canonical_signature,
};
use frustrix::{Error, Sign, SignedGraph, SwitchState};

use Sign::{Negative as N, Positive as P};

fn triangle(signs: [Sign; 3]) -> SignedGraph {
    SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
}

fn cycle(n: usize, negative: &[usize]) -> SignedGraph {
    SignedGraph::new(
        n,
        (0..n).map(|i| (i, (i + 1) % n, Sign::from_negative(negative.contains(&i)))),
    )
    .unwrap()
}

/// Frustration by direct minimization over all vertex states.
fn f_oracle(g: &SignedGraph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .map(|s| {
            g.edges()
                .iter()
                .filter(|e| {
                    let flipped = (s >> e.u & 1) ^ (s >> e.v & 1) == 1;
                    e.sign.is_negative() != flipped
                })
                .count()
        })
        .min()
        .unwrap()
}

#[test]
fn switching_examples() {
    let g1 = gamma(1).unwrap();
    assert_eq!(switch(&g1, &SwitchState::identity(4)).unwrap(), g1);
    let c3 = triangle([N, N, N]);
    let s = switch(&c3, &SwitchState::from_values(&[-1, 1, 1]).unwrap()).unwrap();
    assert_eq!(negative_edge_count(&s), 1);
    // the edge opposite vertex 0
    assert_eq!(s.sign_between(1, 2), Some(N));
    assert!(matches!(
        switch(&c3, &SwitchState::identity(4)),
        Err(Error::Dimension {
            expected: 3,
            actual: 4
        })
    ));
}

#[test]
fn negative_edge_counts() {
    assert_eq!(negative_edge_count(&gamma(1).unwrap()), 2);
    assert_eq!(
        negative_edge_count(&gamma(1).unwrap().with_uniform_sign(P).unwrap()),
        0
    );
    assert_eq!(negative_edge_count(&petersen_negative()), 15);
}

#[test]
fn cut_profiles() {
    let g1 = gamma(1).unwrap();
    for v in 0..4 {
        let c = cut_profile(&g1, 1 << v).unwrap();
        assert_eq!((c.pos, c.neg), (2, 1));
    }
    let c = cut_profile(&triangle([N, N, N]), 1).unwrap();
    assert_eq!((c.pos, c.neg), (0, 2));
    let p2 = SignedGraph::all_positive(2, &[(0, 1)]).unwrap();
    let c = cut_profile(&p2, 1).unwrap();
    assert_eq!((c.pos, c.neg), (1, 0));
    assert!(matches!(cut_profile(&p2, 0), Err(Error::InvalidCut(_))));
    assert!(matches!(cut_profile(&p2, 3), Err(Error::InvalidCut(_))));
}

#[test]
fn subdivision_examples() {
    let c3 = triangle([N, P, P]);
    let c4 = subdivide_edge(&c3, c3.edge_index(0, 1).unwrap()).unwrap();
    assert_eq!((c4.n(), c4.m(), c4.negative_edge_count()), (4, 4, 1));
    assert_eq!(f_oracle(&c4), 1);
    assert!(matches!(
        subdivide_edge(&c3, 3),
        Err(Error::EdgeOutOfRange { .. })
    ));

    // subdividing the two positive edges x0x1 and x2x3 of the first exceptional graph
    let g1 = gamma(1).unwrap();
    let once = subdivide_edge(&g1, g1.edge_index(0, 1).unwrap()).unwrap();
    let twice = subdivide_edge(&once, once.edge_index(2, 3).unwrap()).unwrap();
    let drawn = gadget(GadgetKind::GAMMA1_TWO_SUB).unwrap();
    assert_eq!(twice, drawn.graph);
}

#[test]
fn bridge_examples() {
    let fig = triangle_tree_extremal(&CubicTree::caterpillar(0)).unwrap();
    let b = bridges(&fig).unwrap();
    assert_eq!(b.len(), 1);
    let e = fig.edges()[b[0]];
    assert_eq!(fig.delete_edge(b[0]).unwrap().components().len(), 2);
    assert!(e.u < 5 && e.v >= 5);
    assert!(bridges(&gamma(1).unwrap()).unwrap().is_empty());
    for t in 2..=3 {
        let chain = gadget_chain(&vec![GadgetKind::Triangle; t]).unwrap();
        assert!(bridges(&chain).unwrap().is_empty());
        // no single edge disconnects the chain
        for i in 0..chain.m() {
            assert!(chain.delete_edge(i).unwrap().is_connected());
        }
    }
    let two = SignedGraph::new(4, [(0, 1, P), (2, 3, P)]).unwrap();
    assert_eq!(bridges(&two), Err(Error::Disconnected));
}

#[test]
fn block_examples() {
    let fig = triangle_tree_extremal(&CubicTree::caterpillar(0)).unwrap();
    let blocks = block_decomposition(&fig).unwrap();
    assert_eq!(blocks.len(), 2);
    assert!(blocks.iter().all(|b| b.is_leaf && b.vertices.len() == 5));
    for k in 1..=3 {
        let g = triangle_tree_extremal(&CubicTree::caterpillar(k)).unwrap();
        let blocks = block_decomposition(&g).unwrap();
        assert_eq!(blocks.iter().filter(|b| !b.is_leaf).count(), k);
        assert_eq!(blocks.iter().filter(|b| b.is_leaf).count(), k + 2);
    }
    let k4 = block_decomposition(&gamma(1).unwrap()).unwrap();
    assert_eq!(k4.len(), 1);
    assert!(!k4[0].is_leaf);
}

#[test]
fn cycle_sign_examples() {
    let one = cycle(4, &[0]);
    let three = cycle(4, &[0, 1, 2]);
    let none = cycle(4, &[]);
    assert!(fundamental_cycle_signs(&one, &one.signature(), &three.signature()).unwrap());
    assert!(!fundamental_cycle_signs(&one, &one.signature(), &none.signature()).unwrap());
    let c5 = cycle(5, &[]);
    assert_eq!(
        fundamental_cycle_signs(&one, &one.signature(), &c5.signature()),
        Err(Error::GraphMismatch)
    );
}

#[test]
fn tree_canonical_examples() {
    let (canon, _) = tree_canonical_signature(&triangle([N, N, N])).unwrap();
    assert_eq!(canon.negative_edge_count(), 1);
    let pos = petersen();
    let (canon, state) = tree_canonical_signature(&pos).unwrap();
    assert_eq!(canon, pos);
    assert_eq!(state, SwitchState::identity(10));
}

#[test]
fn girth_examples() {
    assert_eq!(girth(&petersen()).unwrap(), 5);
    assert_eq!(girth(&gamma(5).unwrap()).unwrap(), 4);
    assert_eq!(girth(&gamma(1).unwrap()).unwrap(), 3);
    assert_eq!(girth(&digon_graph(2).unwrap()).unwrap(), 2);
    let path = SignedGraph::all_positive(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(girth(&path), Err(Error::NoCycle));
}

#[test]
fn solver_examples() {
    let k4n = gamma(1).unwrap().with_uniform_sign(N).unwrap();
    let r = frustration_bruteforce(&k4n).unwrap();
    assert_eq!(r.f, 2);
    let witness = k4n.with_signature(&r.witness_signature).unwrap();
    let neg: Vec<_> = witness
        .edges()
        .iter()
        .filter(|e| e.sign.is_negative())
        .collect();
    assert_eq!(neg.len(), 2);
    // a perfect matching
    assert!(
        neg[0].u != neg[1].u
            && neg[0].u != neg[1].v
            && neg[0].v != neg[1].u
            && neg[0].v != neg[1].v
    );
    assert_eq!(r.witness_state.value(0), 1);
    assert_eq!(frustration_bruteforce(&triangle([P, P, P])).unwrap().f, 0);
    assert_eq!(frustration_bruteforce(&petersen_negative()).unwrap().f, 3);
    assert_eq!(frustration_branch_bound(&gamma(3).unwrap()).unwrap().f, 3);
    let chain = gadget_chain(&[GadgetKind::Triangle; 8]).unwrap();
    assert_eq!(chain.n(), 24);
    assert_eq!(frustration_branch_bound(&chain).unwrap().f, 8);
    let two = SignedGraph::new(4, [(0, 1, N), (2, 3, P)]).unwrap();
    assert_eq!(
        frustration_bruteforce(&two).unwrap_err(),
        Error::Disconnected
    );
    assert_eq!(frustration_over_components(&two).unwrap(), 0);
}

#[test]
fn capacity_is_reported() {
    let long =
        SignedGraph::all_positive(31, &(0..30).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
    assert!(frustration_bruteforce(&long).unwrap_err().is_capacity());
    assert!(find_unequilibrated_cut(&long).unwrap_err().is_capacity());
    assert_eq!(frustration_branch_bound(&long).unwrap().f, 0);
}

#[test]
fn minimality_examples() {
    assert!(is_minimal_signature(&gamma(1).unwrap()).unwrap());
    assert!(!is_minimal_signature(&triangle([N, N, N])).unwrap());
    assert!(is_minimal_signature(&petersen()).unwrap());
    let cut = find_unequilibrated_cut(&triangle([N, N, N]))
        .unwrap()
        .unwrap();
    assert_eq!((cut.pos, cut.neg), (0, 2));
    assert_eq!(cut.side.count_ones(), 1);
    assert!(find_unequilibrated_cut(&gamma(1).unwrap())
        .unwrap()
        .is_none());
}

#[test]
fn max_cut_examples() {
    assert_eq!(max_cut_bruteforce(&gamma(1).unwrap()).unwrap().0, 4);
    assert_eq!(max_cut_bruteforce(&cycle(5, &[])).unwrap().0, 4);
    let (size, side) = max_cut_bruteforce(&petersen()).unwrap();
    let counted = petersen()
        .edges()
        .iter()
        .filter(|e| (side >> e.u & 1) != (side >> e.v & 1))
        .count();
    assert_eq!(size, counted);
}

#[test]
fn partition_examples() {
    let p = xy_partition(&triangle([N, P, P]));
    assert_eq!((p.x.clone(), p.y.clone()), (vec![2], vec![0, 1]));
    let all_pos = xy_partition(&petersen());
    assert_eq!(all_pos.x, (0..10).collect::<Vec<_>>());
    let report = key_inequality_report(&all_pos);
    assert_eq!((report.lhs, report.rhs, report.holds), (0, 0, true));
    // every vertex of the first exceptional graph meets one negative edge
    let p1 = xy_partition(&gamma(1).unwrap());
    assert!(p1.x.is_empty() && p1.y_strata[0].len() == 4);
}

#[test]
fn forbidden_structure_examples() {
    let w = violates_tc_free(&triangle([N, N, N]), 2).unwrap();
    assert_eq!((w.k, w.negative_boundary, w.vertices.len()), (0, 2, 1));
    for i in 1..=5 {
        assert!(violates_tc_free(&gamma(i).unwrap(), 2).is_none());
    }
}

#[test]
fn critical_examples() {
    assert!(is_critically_frustrated(&gamma(1).unwrap(), 2).unwrap());
    assert!(is_critically_frustrated(&gamma(2).unwrap(), 2).unwrap());
    assert!(is_critically_frustrated(&gamma(5).unwrap(), 3).unwrap());
    assert!(!is_critically_frustrated(&gamma(1).unwrap(), 3).unwrap());
    assert!(!is_critically_frustrated(&cycle(6, &[]), 0).unwrap());
    assert!(every_positive_edge_in_equilibrated_cut(&gamma(2).unwrap()).unwrap());
    let bridged = SignedGraph::new(
        6,
        [
            (0, 1, P),
            (1, 2, N),
            (0, 2, P),
            (3, 4, P),
            (4, 5, N),
            (3, 5, P),
            (2, 3, P),
        ],
    )
    .unwrap();
    assert!(!every_positive_edge_in_equilibrated_cut(&bridged).unwrap());
}

#[test]
fn detector_examples() {
    assert!(detect_configuration(&gamma(3).unwrap(), Rule::AdjTriangles).is_some());
    let m = detect_configuration(&gamma(1).unwrap(), Rule::NegTriangle).unwrap();
    assert_eq!(m.vertices.len(), 3);
    for rule in Rule::ALL {
        if rule != Rule::Degree2Vertex {
            assert!(
                detect_configuration(&cycle(6, &[]), rule).is_none(),
                "{rule}"
            );
        }
    }
    // a negative 4-cycle next to a triangle with its non-shared edge negative
    let g = SignedGraph::new(
        5,
        [
            (0, 1, P),
            (1, 3, P),
            (3, 2, P),
            (2, 0, P),
            (2, 4, P),
            (3, 4, N),
        ],
    )
    .unwrap();
    let m = detect_configuration(&g, Rule::Tri4CycleNeg).unwrap();
    assert_eq!(g.sign_between(m.vertices[3], m.vertices[4]), Some(N));
}

#[test]
fn family_examples() {
    for t in 2..=8 {
        let g = gadget_chain(&vec![GadgetKind::Triangle; t]).unwrap();
        assert_eq!((g.n(), frustration_index(&g).unwrap()), (3 * t, t));
    }
    let mixed = gadget_chain(&[GadgetKind::Triangle, GadgetKind::GAMMA1_TWO_SUB]).unwrap();
    assert_eq!((mixed.n(), f_oracle(&mixed)), (9, 3));
    assert!(matches!(
        gadget_chain(&[GadgetKind::Triangle]),
        Err(Error::Construction(_))
    ));

    let k0 = triangle_tree_extremal(&CubicTree::caterpillar(0)).unwrap();
    assert_eq!((k0.n(), frustration_index(&k0).unwrap()), (10, 4));
    let k1 = triangle_tree_extremal(&CubicTree::caterpillar(1)).unwrap();
    assert_eq!(
        (
            k1.n(),
            frustration_index(&k1).unwrap(),
            k1.negative_edge_count()
        ),
        (18, 7, 7)
    );
    let star = CubicTree::star_of_triangles();
    assert_eq!(star.internal_count(), 4);
    let g = triangle_tree_extremal(&star).unwrap();
    assert_eq!(
        (g.n(), frustration_index(&g).unwrap()),
        (8 * 4 + 10, 3 * 4 + 4)
    );
    assert!(CubicTree::new(3, vec![(0, 1), (1, 2)]).is_err());

    let d = digon_graph(2).unwrap();
    assert_eq!((d.n(), f_oracle(&d)), (4, 2));
    assert!(matches!(digon_graph(1), Err(Error::Construction(_))));

    let (w1, w2) = w_graphs();
    assert!(w1.is_cubic() && w2.is_cubic());
    assert_eq!(enumerate_switching_classes(&w1, false).unwrap().len(), 32);

    for i in 1..=5 {
        let g = gamma(i).unwrap();
        assert!(3 * f_oracle(&g) > g.n(), "gamma({i})");
        assert!(
            is_minimal_signature(&g).unwrap(),
            "gamma({i}) is drawn with a minimal signature"
        );
    }
    assert!(matches!(gamma(0), Err(Error::Construction(_))));
    assert!(matches!(gamma(6), Err(Error::Construction(_))));
}

#[test]
fn exceptional_graphs_are_distinct() {
    for i in 1..=5 {
        for j in 1..=5 {
            let (a, b) = (gamma(i).unwrap(), gamma(j).unwrap());
            let same = a.n() == b.n() && switching_isomorphic(&a, &b).unwrap();
            assert_eq!(same, i == j, "gamma({i}) vs gamma({j})");
        }
    }
    let k4n = gamma(1).unwrap().with_uniform_sign(N).unwrap();
    assert!(switching_isomorphic(&k4n, &gamma(1).unwrap()).unwrap());
}

#[test]
fn generators_are_deterministic() {
    for i in 1..=5 {
        assert_eq!(gamma(i).unwrap(), gamma(i).unwrap());
    }
    let a = triangle_tree_extremal(&CubicTree::caterpillar(2)).unwrap();
    let b = triangle_tree_extremal(&CubicTree::caterpillar(2)).unwrap();
    assert_eq!(a.edges(), b.edges());
}
