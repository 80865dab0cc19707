mod common;

use common::*;
use iprank::ingest::{CorpusSlice, SliceInstitution};
use iprank::network::{
    build_citation_graph, build_hetero_graph, project_institution_graph, EdgeClass, EdgeList,
};
use iprank::Error;
use proptest::prelude::*;

#[test]
fn toy_heterogeneous_graph() {
    let g = build_hetero_graph(&toy_slice()).unwrap();
    assert_eq!((g.n_papers(), g.n_institutions(), g.node_count()), (3, 4, 7));
    assert_eq!(g.count_edges(EdgeClass::Citation), 2);
    assert_eq!(g.count_edges(EdgeClass::Affiliation), 10);

    let p1 = g.paper_node("P1").unwrap();
    let op = g.transition_operator();
    assert_eq!(g.out_neighbors(p1).len(), 4);
    for &v in g.out_neighbors(p1) {
        assert!((op.probability(p1, v) - 0.25).abs() < 1e-15);
    }
}

#[test]
fn toy_baselines() {
    let slice = toy_slice();
    let cg = build_citation_graph(&slice);
    let named: Vec<_> = cg
        .edges()
        .map(|(u, v)| (cg.paper_ids()[u as usize].as_str(), cg.paper_ids()[v as usize].as_str()))
        .collect();
    assert_eq!(named, [("P1", "P2"), ("P1", "P3")]);

    let ig = project_institution_graph(&slice);
    let mut named: Vec<_> = ig
        .edges()
        .map(|(u, v, w)| (ig.names()[u as usize].clone(), ig.names()[v as usize].clone(), w))
        .collect();
    named.sort();
    let want = [
        ("I1", "I2"),
        ("I1", "I3"),
        ("I1", "I4"),
        ("I2", "I2"),
        ("I2", "I3"),
        ("I2", "I4"),
    ];
    assert_eq!(named.len(), want.len());
    for ((a, b, w), (x, y)) in named.iter().zip(want) {
        assert_eq!((a.as_str(), b.as_str(), *w), (x, y, 1));
    }
}

#[test]
fn single_paper_single_institution() {
    let slice = CorpusSlice {
        window: None,
        paper_ids: vec!["P".into()],
        n_in_window: 1,
        institutions: vec![SliceInstitution { canonical_id: 0, name: "I".into() }],
        citation_edges: vec![],
        affiliation_edges: vec![(0, 0)],
        unresolved_references: 0,
        unresolved_reference_ids: 0,
    };
    let g = build_hetero_graph(&slice).unwrap();
    assert_eq!((g.node_count(), g.edge_count()), (2, 2));
    let op = g.transition_operator();
    assert_eq!(op.probability(0, 1), 1.0);
    assert_eq!(op.probability(1, 0), 1.0);
}

#[test]
fn empty_slice_gives_empty_graph() {
    let c = toy_corpus();
    let slice = c.slice(iprank::ingest::TimeWindow::new(1900, 1901).unwrap());
    let g = build_hetero_graph(&slice).unwrap();
    assert_eq!(g.node_count(), 0);
    assert_eq!(g.edge_count(), 0);
}

#[test]
fn unaffiliated_paper_is_rejected() {
    let mut slice = toy_slice();
    slice.affiliation_edges.retain(|&(p, _)| p != 2);
    assert!(matches!(build_hetero_graph(&slice), Err(Error::UnaffiliatedPaper(_))));
}

#[test]
fn weighted_operator_splits_mass_by_class() {
    let g = build_hetero_graph(&toy_slice()).unwrap();
    let w = iprank::network::ClassWeights { citation: 3.0, affiliation: 1.0 };
    let op = g.transition_operator_weighted(w);
    let p1 = g.paper_node("P1").unwrap();
    let p2 = g.paper_node("P2").unwrap() as u32;
    // Two citations at weight 3, two affiliations at weight 1.
    assert!((op.probability(p1, p2) - 3.0 / 8.0).abs() < 1e-15);
    assert!((op.row_sum(p1) - 1.0).abs() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn structural_invariants(seed in any::<u64>()) {
        let slice = random_slice(&mut rng(seed));
        let g = build_hetero_graph(&slice).unwrap();
        g.check_invariants().unwrap();
        let np = g.n_papers();
        for (u, v, class) in g.edges() {
            let (u, v) = (u as usize, v as usize);
            match class {
                EdgeClass::Citation => prop_assert!(u < np && v < np),
                EdgeClass::Affiliation => {
                    prop_assert!((u < np) != (v < np));
                    prop_assert!(g.out_neighbors(v).contains(&(u as u32)));
                }
            }
        }
        for u in np..g.node_count() {
            prop_assert!(g.out_neighbors(u).iter().all(|&v| (v as usize) < np));
        }
        let op = g.transition_operator();
        prop_assert!(op.dangling().is_empty());
        for u in 0..op.node_count() {
            prop_assert!((op.row_sum(u) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn projection_weight_is_product_of_affiliation_counts(seed in any::<u64>()) {
        let slice = random_slice(&mut rng(seed));
        let by_paper = slice.institutions_by_paper();
        let expected: u64 = slice
            .citation_edges
            .iter()
            .map(|&(p, q)| (by_paper[p as usize].len() * by_paper[q as usize].len()) as u64)
            .sum();
        prop_assert_eq!(project_institution_graph(&slice).total_weight(), expected);
    }

    #[test]
    fn construction_is_deterministic(seed in any::<u64>()) {
        let slice = random_slice(&mut rng(seed));
        let bytes = |s: &CorpusSlice| {
            let mut out = Vec::new();
            build_hetero_graph(s).unwrap().to_edge_list().write_to(&mut out).unwrap();
            out
        };
        prop_assert_eq!(bytes(&slice), bytes(&slice.clone()));
    }

    #[test]
    fn edge_list_round_trips(seed in any::<u64>()) {
        let list = random_edge_list(&mut rng(seed));
        let mut first = Vec::new();
        list.write_to(&mut first).unwrap();
        let back = EdgeList::read_from(first.as_slice()).unwrap();
        let mut second = Vec::new();
        back.write_to(&mut second).unwrap();
        prop_assert_eq!(first, second);
    }
}
