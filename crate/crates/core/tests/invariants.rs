use mcbq_core::algebra::{endomorphisms, enumerate_mcb, EnumerateOptions};
use mcbq_core::coloring::{brute_force_colorings, BRUTE_FORCE_LIMIT};
use mcbq_core::diagram::{Passage, StrandRole};
use mcbq_core::linear::{rref_mod_p, ColoringMatrix};
use mcbq_core::{
    build_quiver, find_colorings, parse_gauss, quiver_isomorphic, LinkDiagram, McBiquandle, Sign,
};
use proptest::prelude::*;

fn order_three() -> Vec<McBiquandle> {
    enumerate_mcb(
        3,
        EnumerateOptions {
            modulo_isomorphism: true,
            ..Default::default()
        },
    )
    .unwrap()
    .collect()
}

/// Random signed Gauss diagrams on up to two components.
fn diagram(max_crossings: u32) -> impl Strategy<Value = LinkDiagram> {
    (0..=max_crossings)
        .prop_flat_map(|k| {
            let n = 2 * k as usize;
            (
                Just(k),
                prop::collection::vec(any::<bool>(), k as usize),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                0..=n,
                any::<bool>(),
            )
        })
        .prop_map(|(k, signs, order, cut, split)| {
            let mut tokens = Vec::new();
            for id in 1..=k {
                let sign = if signs[id as usize - 1] {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                tokens.push(Passage {
                    crossing: id,
                    role: StrandRole::Over,
                    sign,
                });
                tokens.push(Passage {
                    crossing: id,
                    role: StrandRole::Under,
                    sign,
                });
            }
            let seq: Vec<Passage> = order.into_iter().map(|i| tokens[i]).collect();
            let comps = if split {
                vec![seq[..cut].to_vec(), seq[cut..].to_vec()]
            } else {
                vec![seq]
            };
            LinkDiagram::new(comps).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_round_trip(d in diagram(6)) {
        prop_assert_eq!(parse_gauss(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn classes_ignore_labels_and_start_points(d in diagram(6), shift in 0usize..12, offset in 1u32..50) {
        let comps: Vec<Vec<Passage>> = d
            .components()
            .iter()
            .map(|c| {
                let mut c: Vec<Passage> = c.iter().map(|p| Passage { crossing: p.crossing + offset, ..*p }).collect();
                if !c.is_empty() {
                    let s = shift % c.len();
                    c.rotate_left(s);
                }
                c
            })
            .collect();
        let moved = LinkDiagram::new(comps).unwrap();
        let before: Vec<_> = d.classify().into_iter().map(|(id, c)| (id + offset, c)).collect();
        let after: Vec<_> = moved.classify().into_iter().collect();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn colorings_match_brute_force(d in diagram(3), pick in 0usize..163) {
        let x = &order_three()[pick];
        let fast = find_colorings(x, &d).colorings;
        let slow = brute_force_colorings(x, &d, BRUTE_FORCE_LIMIT).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn counts_survive_rotation(d in diagram(4), shift in 0usize..8, pick in 0usize..163) {
        let x = &order_three()[pick];
        let comps: Vec<Vec<Passage>> = d
            .components()
            .iter()
            .map(|c| {
                let mut c = c.clone();
                if !c.is_empty() {
                    let s = shift % c.len();
                    c.rotate_left(s);
                }
                c
            })
            .collect();
        let moved = LinkDiagram::new(comps).unwrap();
        let s = endomorphisms(x);
        let h1 = find_colorings(x, &d);
        let h2 = find_colorings(x, &moved);
        prop_assert_eq!(h1.len(), h2.len());
        let q1 = build_quiver(x, &h1, &s).unwrap();
        let q2 = build_quiver(x, &h2, &s).unwrap();
        prop_assert!(quiver_isomorphic(&q1, &q2).is_some());
    }

    #[test]
    fn rref_is_idempotent(rows in prop::collection::vec(prop::collection::vec(0u64..5, 5), 1..6)) {
        let m = ColoringMatrix::new(5, 5, rows).unwrap();
        let (r, rank) = rref_mod_p(&m);
        prop_assert!(r.is_row_echelon());
        prop_assert_eq!(rref_mod_p(&r), (r.clone(), rank));
        // kernel size from the reduced matrix equals brute-force kernel enumeration
        let mut kernel = 0;
        for code in 0..5u64.pow(5) {
            let v: Vec<u64> = (0..5).map(|i| (code / 5u64.pow(i)) % 5).collect();
            if m.annihilates(&v) {
                kernel += 1;
            }
        }
        prop_assert_eq!(m.kernel_size().unwrap(), kernel);
    }

    #[test]
    fn polynomial_ignores_vertex_order(d in diagram(3), pick in 0usize..163, seed in any::<u64>()) {
        let x = &order_three()[pick];
        let h = find_colorings(x, &d);
        let q = build_quiver(x, &h, &endomorphisms(x)).unwrap();
        let n = q.vertex_count;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let moved = q.relabel(&perm);
        prop_assert_eq!(moved.indegree_polynomial(), q.indegree_polynomial());
        let found = quiver_isomorphic(&q, &moved);
        prop_assert!(found.is_some());
    }
}
