//! Property tests over randomly generated small groups and subgroups.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use cosetlab::{
    analyze, double_cosets, full_count_report, hall_matching_transversal,
    left_right_transversal, verify_complete_bipartite, verify_double_coset_correspondence,
    verify_ratio, verify_tile_uniformity, verify_transversal, AnalysisOptions, CosetGraph,
    Permutation, PermutationGroup,
};

const CAP: usize = 10_000;

fn arb_permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

/// A random group of degree 1..=5 generated by up to two random permutations.
fn arb_group() -> impl Strategy<Value = PermutationGroup> {
    (1usize..=5)
        .prop_flat_map(|degree| proptest::collection::vec(arb_permutation(degree), 0..=2)
            .prop_map(move |gens| PermutationGroup::generate(&gens, degree, CAP).unwrap()))
}

/// A random subgroup: the closure of up to two elements picked from the group.
fn arb_subgroup(group: &PermutationGroup) -> impl Strategy<Value = PermutationGroup> {
    let elements = group.elements().to_vec();
    let degree = group.degree();
    proptest::collection::vec(0..elements.len(), 0..=2).prop_map(move |indices| {
        let gens: Vec<Permutation> = indices.iter().map(|&i| elements[i].clone()).collect();
        PermutationGroup::generate(&gens, degree, CAP).unwrap()
    })
}

fn arb_pair() -> impl Strategy<Value = (PermutationGroup, PermutationGroup)> {
    arb_group().prop_flat_map(|g| {
        let h = arb_subgroup(&g);
        (Just(g), h)
    })
}

fn arb_triple() -> impl Strategy<Value = (PermutationGroup, PermutationGroup, PermutationGroup)> {
    arb_group().prop_flat_map(|g| {
        let h = arb_subgroup(&g);
        let k = arb_subgroup(&g);
        (Just(g), h, k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_lagrange_and_canonical_order((g, h) in arb_pair()) {
        // exhaustive closure check at this scale
        prop_assert!(g.order() <= 200);
        prop_assert!(g.contains(&g.identity()));
        for p in g.elements() {
            prop_assert!(g.contains(&p.inverse()));
            for q in g.elements() {
                prop_assert!(g.contains(&p.compose(q).unwrap()));
            }
        }
        prop_assert!(g.elements().windows(2).all(|w| w[0] < w[1]));

        // Lagrange
        prop_assert!(g.has_subgroup(&h));
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(g.index_of(&h).unwrap() * h.order(), g.order());
    }

    #[test]
    fn cosets_partition_the_group((g, h) in arb_pair()) {
        for cosets in [g.left_cosets(&h).unwrap(), g.right_cosets(&h).unwrap()] {
            prop_assert_eq!(cosets.len(), g.index_of(&h).unwrap());
            let mut seen = BTreeSet::new();
            for coset in &cosets {
                prop_assert_eq!(coset.members().len(), h.order());
                prop_assert_eq!(coset.representative(), &coset.members()[0]);
                for member in coset.members() {
                    prop_assert!(seen.insert(member.clone()), "cosets overlap");
                }
            }
            prop_assert_eq!(seen.len(), g.order());
        }
    }

    #[test]
    fn core_is_the_largest_normal_subgroup_inside((g, h) in arb_pair()) {
        let core = g.core_of(&h).unwrap();
        prop_assert!(h.has_subgroup(&core));
        prop_assert!(g.is_normal(&core).unwrap());
        for gen in g.generators() {
            prop_assert_eq!(core.conjugate_by(gen).unwrap(), core.clone());
        }
    }

    #[test]
    fn quotient_bookkeeping((g, h) in arb_pair()) {
        let n = g.core_of(&h).unwrap();
        let q = g.quotient(&n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert_eq!(q.degree(), g.index_of(&n).unwrap());
        let image = g.image_in_quotient(&n, &h).unwrap();
        prop_assert_eq!(image.order() * n.order(), h.order());
        prop_assert!(q.has_subgroup(&image));
    }

    #[test]
    fn cycle_notation_round_trips((g, _h) in arb_pair()) {
        for p in g.elements() {
            let text = p.to_cycles();
            prop_assert_eq!(&Permutation::parse_cycles(&text, g.degree()).unwrap(), p);
        }
    }

    #[test]
    fn structure_theorems_hold((g, h, k) in arb_triple()) {
        let graph = CosetGraph::build(&g, &h, &k).unwrap();
        prop_assert!(verify_complete_bipartite(&graph).passed);
        prop_assert!(verify_ratio(&graph).passed);
        prop_assert!(verify_tile_uniformity(&graph).passed);

        let dcs = double_cosets(&g, &h, &k).unwrap();
        prop_assert!(verify_double_coset_correspondence(&graph, &dcs).passed);

        let boards = graph.components().unwrap();
        // component/double-coset size multisets agree
        let mut by_components: Vec<usize> = boards.iter().map(|b| b.double_coset_size()).collect();
        let mut by_double_cosets: Vec<usize> = dcs.iter().map(|d| d.len()).collect();
        by_components.sort_unstable();
        by_double_cosets.sort_unstable();
        prop_assert_eq!(by_components, by_double_cosets);

        let mut total = 0;
        for board in &boards {
            prop_assert_eq!(board.s() * h.order(), board.t() * k.order());
            prop_assert_eq!(board.tile_size() * board.t(), h.order());
            prop_assert_eq!(board.tile_size() * board.s(), k.order());
            total += board.s() * h.order();
        }
        prop_assert_eq!(total, g.order());

        // determinism
        prop_assert_eq!(CosetGraph::build(&g, &h, &k).unwrap(), graph);
    }

    #[test]
    fn quotient_preserves_chessboard_shapes((g, h, k) in arb_triple()) {
        let n = g.core_of(&h.intersect(&k).unwrap()).unwrap();
        let q = g.quotient(&n).unwrap();
        let h_image = g.image_in_quotient(&n, &h).unwrap();
        let k_image = g.image_in_quotient(&n, &k).unwrap();

        let shapes = |graph: &CosetGraph| -> Vec<(usize, usize)> {
            let mut shapes: Vec<(usize, usize)> = graph
                .components()
                .unwrap()
                .iter()
                .map(|b| (b.s(), b.t()))
                .collect();
            shapes.sort_unstable();
            shapes
        };
        let original = shapes(&CosetGraph::build(&g, &h, &k).unwrap());
        let reduced = shapes(&CosetGraph::build(&q, &h_image, &k_image).unwrap());
        prop_assert_eq!(original, reduced);
    }

    #[test]
    fn transversals_verify((g, h, k) in arb_triple()) {
        let two_sided = left_right_transversal(&g, &h).unwrap();
        prop_assert_eq!(two_sided.len(), g.index_of(&h).unwrap());
        prop_assert!(verify_transversal(&g, &h, &h, &two_sided).unwrap().passed);

        let matched = hall_matching_transversal(&g, &h).unwrap();
        prop_assert_eq!(matched.len(), two_sided.len());
        prop_assert!(verify_transversal(&g, &h, &h, &matched).unwrap().passed);

        if g.index_of(&h).unwrap() <= g.index_of(&k).unwrap() {
            let (t, extension) = cosetlab::extendable_transversal(&g, &h, &k).unwrap();
            prop_assert!(verify_transversal(&g, &h, &k, &t).unwrap().passed);
            prop_assert_eq!(t.len() + extension.len(), g.index_of(&k).unwrap());
            // elements of T fall into pairwise distinct right cosets of K
            let right = g.right_cosets(&k).unwrap();
            let mut hit = BTreeSet::new();
            for e in t.elements() {
                let j = right.iter().position(|c| c.contains(e)).unwrap();
                prop_assert!(hit.insert(j));
            }
            // T together with the extension is a right transversal
            let mut full: Vec<Permutation> = t.elements().to_vec();
            full.extend(extension);
            let candidate = cosetlab::Transversal::candidate(
                cosetlab::TransversalKind::Right,
                full,
                g.index_of(&k).unwrap(),
                None,
            );
            prop_assert!(verify_transversal(&g, &h, &k, &candidate).unwrap().passed);
        }
    }

    #[test]
    fn counts_agree_and_match_the_graph((g, h, k) in arb_triple()) {
        let graph = CosetGraph::build(&g, &h, &k).unwrap();
        let boards = graph.components().unwrap();
        let left = g.left_cosets(&h).unwrap();

        for coset in &left {
            let x = coset.representative();
            let report = full_count_report(&g, &h, &k, x).unwrap();
            // |gHg⁻¹ ∩ K| divides |H|
            prop_assert_eq!(h.order() % (h.order() / report.m_by_order), 0);

            // M_g equals t of the chessboard containing gH
            let li = left.iter().position(|c| c.contains(x)).unwrap();
            let board = boards
                .iter()
                .find(|b| b.left_indices().contains(&li))
                .unwrap();
            prop_assert_eq!(report.m_direct, board.t());

            // constant across the double coset of g
            for other in double_cosets(&g, &h, &k)
                .unwrap()
                .iter()
                .find(|d| d.contains(x))
                .unwrap()
                .members()
            {
                prop_assert_eq!(
                    full_count_report(&g, &h, &k, other).unwrap().m_direct,
                    report.m_direct
                );
            }
        }
    }

    #[test]
    fn analysis_report_is_consistent((g, h, k) in arb_triple()) {
        let report = analyze(&g, &h, &k, AnalysisOptions { with_transversal: true, with_counts: true }).unwrap();
        prop_assert!(report.all_checks_pass());
        let expected: BTreeMap<String, bool> = [
            "complete_bipartite",
            "double_coset_correspondence",
            "ratio_law",
            "tile_uniformity",
        ]
        .iter()
        .map(|name| (name.to_string(), true))
        .collect();
        prop_assert_eq!(report.checks.clone(), expected);
        let json = serde_json::to_string(&report).unwrap();
        let back: cosetlab::AnalysisReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, report);
    }
}
