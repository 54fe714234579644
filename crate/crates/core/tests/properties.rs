use num_bigint::BigInt;
use num_rational::BigRational;
use plcomb::polyhedra::RationalVector;
use plcomb::quivers::{chamber_set_from_quiver, quiver_from_chamber_set, Orientation, PartialQuiver};
use plcomb::rectangles::place_configuration;
use plcomb::regions::{braid_move_map, evaluate};
use plcomb::weyl::legal_moves;
use plcomb::{apply_move, find_move_path, is_reduced, positive_root_order, standard_words, ReducedWord};
use proptest::prelude::*;

/// A reduced word reached from the standard word by `steps` legal moves
/// chosen by `picks`.
fn walk(rank: usize, picks: &[usize]) -> ReducedWord {
    let (mut w, _) = standard_words(rank).unwrap();
    for &p in picks {
        let moves = legal_moves(w.letters());
        w = apply_move(&w, moves[p % moves.len()]).unwrap();
    }
    w
}

fn word_strategy(max_rank: usize) -> impl Strategy<Value = ReducedWord> {
    (2..=max_rank, prop::collection::vec(any::<usize>(), 0..40)).prop_map(|(n, picks)| walk(n, &picks))
}

fn quiver_strategy(max_rank: usize) -> impl Strategy<Value = PartialQuiver> {
    (2..=max_rank)
        .prop_flat_map(|n| (Just(n), 0..n - 1, 1..n))
        .prop_flat_map(|(n, start, len)| {
            let len = len.min(n - 1 - start);
            (Just(n), Just(start), prop::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(n, start, bits)| {
            let mut labels = vec![None; n - 1];
            for (i, b) in bits.into_iter().enumerate() {
                labels[start + i] = Some(if b { Orientation::R } else { Orientation::L });
            }
            PartialQuiver::new(n, labels).unwrap()
        })
}

fn rational(v: &[u32]) -> RationalVector {
    RationalVector(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_keep_words_reduced(w in word_strategy(7)) {
        let check = is_reduced(w.letters(), w.rank()).unwrap();
        prop_assert!(check.is_longest);
        let roots: std::collections::BTreeSet<_> = positive_root_order(&w).into_iter().collect();
        prop_assert_eq!(roots.len(), w.len());
    }

    #[test]
    fn move_paths_connect(a in word_strategy(7), picks in prop::collection::vec(any::<usize>(), 0..40)) {
        let b = walk(a.rank(), &picks);
        let mut cur = a.clone();
        for mv in find_move_path(&a, &b).unwrap() {
            prop_assert!(mv.is_legal(cur.letters()));
            cur = apply_move(&cur, mv).unwrap();
        }
        prop_assert_eq!(cur, b);
    }

    #[test]
    fn braid_map_is_an_involution(a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let q = |v: u32| BigRational::from_integer(BigInt::from(v));
        let [x, y, z] = braid_move_map(&q(a), &q(b), &q(c));
        prop_assert!(x >= q(0) && y >= q(0) && z >= q(0));
        prop_assert_eq!(braid_move_map(&x, &y, &z), [q(a), q(b), q(c)]);
    }

    #[test]
    fn transition_maps_invert(src in word_strategy(5), picks in prop::collection::vec(any::<usize>(), 0..30), seed in prop::collection::vec(0u32..50, 15)) {
        let dst = walk(src.rank(), &picks);
        let x = rational(&seed[..src.len()]);
        let y = evaluate(&src, &dst, &x).unwrap();
        prop_assert_eq!(evaluate(&dst, &src, &y).unwrap(), x);
    }

    #[test]
    fn quivers_round_trip(q in quiver_strategy(16)) {
        let s = chamber_set_from_quiver(&q);
        prop_assert_eq!(quiver_from_chamber_set(&s, q.rank()).unwrap(), q.clone());
        prop_assert_eq!(PartialQuiver::parse(&q.to_string(), Some(q.rank())).unwrap(), q);
    }

    #[test]
    fn root_sets_are_disjoint(q in quiver_strategy(16)) {
        let cfg = place_configuration(&q).unwrap();
        let phi = cfg.phi_plus();
        let distinct: std::collections::BTreeSet<_> = phi.iter().collect();
        prop_assert_eq!(distinct.len(), phi.len());
        prop_assert!(phi.iter().all(|r| r.q <= q.rank()));
    }
}
