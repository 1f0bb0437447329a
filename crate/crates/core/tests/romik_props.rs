use std::cmp::Ordering;

use num_traits::One;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eislag::arith::lattice::m_inverse;
use eislag::arith::{pairing, IntVec3, Mat3Z};
use eislag::oracle::sieve_triples;
use eislag::par::Exec;
use eislag::romik::line::line_step;
use eislag::romik::*;

fn sample_points(n: usize, seed: u64) -> Vec<CirclePointQ> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = enumerate_triples(20_000);
    (0..n).map(|_| all.choose(&mut rng).unwrap().clone()).collect()
}

fn stream() -> impl Strategy<Value = DigitStream> {
    (prop::collection::vec(1u8..=5, 0..5), prop::collection::vec(1u8..=5, 1..5))
        .prop_map(|(pre, per)| DigitStream::from_digits(&pre, &per))
        .prop_filter("irrational", |s| !s.is_terminal())
}

#[test]
fn tree_equals_sieve() {
    let tree = triples_u64(2000, Exec::Sequential);
    let sieve = sieve_triples(2000);
    assert_eq!(tree.len(), sieve.len());
    assert_eq!(tree, sieve);
    assert_eq!(triples_u64(2000, Exec::best()), sieve);
}

#[test]
fn conjugacy_with_line_system() {
    for p in sample_points(1000, 1) {
        let (_, next) = romik_map(&p);
        assert_eq!(stereo_norm(&next), line_step(&stereo_norm(&p)), "{p:?}");
    }
}

#[test]
fn expansions_round_trip_to_boundaries() {
    for p in enumerate_triples(500) {
        let e = expand_rational(&p, 10_000).unwrap();
        for s in std::iter::once(&e.primary).chain(e.alternative.iter()) {
            let (z10, z01) = cylinder_boundaries(s.preperiod());
            assert!(z10 == p || z01 == p, "{p:?} via {s}");
        }
    }
}

#[test]
fn prepending_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pts = sample_points(400, 4);
    for pair in pts.chunks(2) {
        let len = rng.gen_range(1..=6);
        let w = RomikWord::new((0..len).map(|_| rng.gen_range(1..=5)).collect()).unwrap();
        let before = order_points(&pair[0], &pair[1]);
        let after = order_points(&prepend_word(&w, &pair[0]), &prepend_word(&w, &pair[1]));
        let want = if word_sign(&w) == 1 { before } else { before.reverse() };
        assert_eq!(after, want, "w = {w}");
    }
}

fn inverse_product(w: &RomikWord) -> Mat3Z {
    w.digits()
        .iter()
        .rev()
        .fold(Mat3Z::identity(), |acc, &d| acc.mul(m_inverse(d)))
}

#[test]
fn pairing_ratio_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in sample_points(300, 6) {
        let e = expand_rational(&p, 10_000).unwrap();
        let head = e.head();
        let k = rng.gen_range(0..=head.len());
        let w = RomikWord::from_digits(&head.digits()[..k]);
        let pk = (0..k).fold(p.clone(), |q, i| romik_step(&q, w.digits()[i]).unwrap());
        let minv = inverse_product(&w);
        let mut z = || IntVec3::new(rng.gen_range(-50..50), rng.gen_range(-50..50), rng.gen_range(-50..50));
        let (z1, z2) = (z(), z());
        let lhs = pairing(&p.vector(), &z1) * pairing(&pk.vector(), &minv.apply(&z2));
        let rhs = pairing(&p.vector(), &z2) * pairing(&pk.vector(), &minv.apply(&z1));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn swap_inverts_norm() {
    for p in sample_points(500, 8) {
        let t = stereo_norm(&p);
        let u = stereo_norm(&p.swap());
        match (t, u) {
            (ExtNorm::Finite(a), ExtNorm::Finite(b)) if !a.is_zero() && !b.is_zero() => {
                assert!((&a * &b).as_rat().is_some_and(|q| q.is_one()))
            }
            (ExtNorm::Infinity, ExtNorm::Finite(b)) | (ExtNorm::Finite(b), ExtNorm::Infinity) => assert!(b.is_zero()),
            other => panic!("unexpected pair {other:?}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vee_inverts_stream_norm(s in stream()) {
        let a = norm_of_stream(&s).unwrap();
        let b = norm_of_stream(&s.vee()).unwrap();
        match (a, b) {
            (ExtNorm::Finite(x), ExtNorm::Finite(y)) => prop_assert_eq!(&x * &y, eislag::arith::Surd::one()),
            (a, b) => prop_assert!(false, "unexpected infinite norm {a} {b}"),
        }
    }

    #[test]
    fn norm_round_trip(s in stream()) {
        let t = norm_of_stream(&s).unwrap();
        prop_assert_eq!(stream_from_norm(&t, 200).unwrap(), s.clone());
        let p = point_of_stream(&s).unwrap();
        prop_assert!(p.is_on_arc());
        prop_assert_eq!(stereo_norm_exact(&p), t);
    }

    #[test]
    fn reversal_transposes(w in prop::collection::vec(2u8..=4, 1..12)) {
        let w = RomikWord::from_digits(&w);
        let m = word_matrix(&w);
        prop_assert_eq!(word_matrix(&w.reversed()), m.transpose());
        let v = word_matrix(&w.vee());
        prop_assert_eq!((&v.a, &v.b, &v.c, &v.d), (&m.d, &m.c, &m.b, &m.a));
    }

    #[test]
    fn digits_are_consistent(i in 0usize..5000) {
        let all = enumerate_triples(2000);
        let p = &all[i % all.len()];
        for d in digit_of(p) {
            let next = romik_step(p, d).unwrap();
            prop_assert_eq!(prepend_word(&RomikWord::from_digits(&[d]), &next), p.clone());
        }
        prop_assert_eq!(order_points(p, p), Ordering::Equal);
    }
}
