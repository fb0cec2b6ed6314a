use proptest::prelude::*;

use quadham::alpha;
use quadham::dual_graph;
use quadham::e4::{classify, dual_has_quad_factor};
use quadham::oracle::{dual_bound, hamilton_lower_bound};
use quadham::planar::PlanarGraph;
use quadham::stein::{cover_to_dual_cycle, cycle_to_cover, DualCycle};
use quadham::tree_pair::{
    build_auxiliary_j, check_bw_closed, enumerate_thm13_covers, extend_cover, greedy_chromatic_independent_set,
    prescribed_side, seed_pair_thm14, thm13_choice_count,
};

fn cut_edges(g: &PlanarGraph, x: &[usize]) -> Vec<usize> {
    let xm = quadham::planar::mask_of(g.vertex_count(), x.iter().copied());
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            xm[a] != xm[b]
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rot1_round_trip(ops in 0usize..15, seed in any::<u64>()) {
        let (g, _, _) = alpha::random_instance(ops, seed);
        let text = g.to_rot1();
        let back = PlanarGraph::from_rot1(&text).unwrap();
        prop_assert_eq!(back.to_rot1(), text);
    }

    #[test]
    fn thm13_covers_are_stein_pairs(ops in 1usize..12, seed in any::<u64>()) {
        let (g, c, _) = alpha::random_instance(ops, seed);
        let (p, corr) = dual_graph(&g).unwrap();
        let j = build_auxiliary_j(&g, &c).unwrap();
        let k = greedy_chromatic_independent_set(&j).unwrap();
        prop_assert!(k.colours_used <= j.max_degree() + 1);
        prop_assert!(4 * k.colours_used <= g.max_degree().pow(2));
        let covers = enumerate_thm13_covers(&g, &c, &k.members).unwrap();
        prop_assert_eq!(covers.len() as u128, thm13_choice_count(&g, &c, &k.members));
        prop_assert!(covers.len() as u128 >= 3u128.pow(k.members.len() as u32));
        prop_assert!(covers.windows(2).all(|w| w[0].0 < w[1].0));
        for (_, cover) in &covers {
            let out = cover_to_dual_cycle(&g, &p, cover, &corr).unwrap();
            // both sides connected exactly when the cut is one cycle
            prop_assert_eq!(cover.is_tree_pair(), matches!(out, DualCycle::Hamilton(_)));
            if let DualCycle::Hamilton(h) = out {
                prop_assert_eq!(h.len(), p.vertex_count());
                let mut ids = cut_edges(&g, &cover.x).into_iter().map(|e| corr.dual_edge(e)).collect::<Vec<_>>();
                ids.sort_unstable();
                prop_assert_eq!(h.edge_ids(&p), ids);
                let back = cycle_to_cover(&g, &p, &h, &corr).unwrap();
                let same = (back.x == cover.x && back.y == cover.y) || (back.x == cover.y && back.y == cover.x);
                prop_assert!(same);
            }
        }
    }

    #[test]
    fn single_target_placement(ops in 1usize..14, seed in any::<u64>(), pick in any::<prop::sample::Index>(), side in 0usize..16) {
        let (g, c, _) = alpha::random_instance(ops, seed);
        let (p, corr) = dual_graph(&g).unwrap();
        let v = pick.index(g.vertex_count());
        let nv = g.rotation(v)[side % g.degree(v)];
        let pair = seed_pair_thm14(&g, &c, &[(v, nv)]).unwrap();
        prop_assert!(check_bw_closed(&g, &c, &pair).is_empty());
        let cover = extend_cover(&g, &c, &pair).unwrap();
        let want = prescribed_side(&c, v, nv);
        for w in g.neighbors(v).filter(|&w| w != nv) {
            prop_assert_eq!(cover.side(w), want);
        }
        prop_assert_ne!(cover.side(v), want);
        let out = cover_to_dual_cycle(&g, &p, &cover, &corr).unwrap();
        let h = out.hamilton().expect("tree pair");
        for w in g.neighbors(v).filter(|&w| w != nv) {
            let (a, b) = p.edge(corr.dual_edge(g.edge_id(v, w).unwrap()));
            prop_assert!(h.contains(a, b));
        }
    }

    #[test]
    fn bound_agrees_across_duality(ops in 0usize..15, seed in any::<u64>()) {
        let (g, _, _) = alpha::random_instance(ops, seed);
        let (p, _) = dual_graph(&g).unwrap();
        prop_assert!((hamilton_lower_bound(&p) - dual_bound(&g)).abs() < 1e-12);
    }

    #[test]
    fn e4_matches_dual_quad_factor(ops in 0usize..10, seed in any::<u64>()) {
        let (g, _, _) = alpha::random_instance(ops, seed);
        prop_assert!(classify(&g).is_e4);
        prop_assert_eq!(dual_has_quad_factor(&g), Some(true));
    }
}
