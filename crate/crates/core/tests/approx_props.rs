use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eislag::approx::*;
use eislag::oracle::delta_geometric;
use eislag::par::Exec;
use eislag::romik::*;

fn random_reduced_stream(rng: &mut ChaCha8Rng) -> DigitStream {
    let pre: Vec<u8> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(2..=4)).collect();
    let per: Vec<u8> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(2..=4)).collect();
    DigitStream::from_digits(&pre, &per)
}

#[test]
fn delta_matches_geometric_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let triples = triples_u64(300, Exec::Sequential);
    for _ in 0..50 {
        let s = random_reduced_stream(&mut rng);
        let p = point_of_stream(&s).unwrap();
        for &z in triples.iter().step_by(7) {
            let exact = delta_sq(&p, &CirclePointQ::new(z[0], z[1], z[2]).unwrap()).unwrap();
            let geo = delta_geometric(p.to_f64(), z);
            assert!((exact.to_f64().sqrt() - geo).abs() < 1e-8 * (1.0 + geo), "{s} {z:?}");
        }
    }
}

#[test]
fn scan_is_sorted_and_sequential_matches_parallel() {
    let s = DigitStream::from_digits(&[4], &[2, 3]);
    let seq = best_approx_scan_with(&s, 400, Exec::Sequential).unwrap();
    let par = best_approx_scan_with(&s, 400, Exec::best()).unwrap();
    assert_eq!(seq, par);
    for w in seq.windows(2) {
        assert_ne!(w[0].delta_sq.try_cmp(&w[1].delta_sq).unwrap(), std::cmp::Ordering::Greater);
    }
    assert!(seq.iter().all(|r| r.delta_sq.is_positive() && &r.height == r.approximant.c()));
}

#[test]
fn boundary_optimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let triples = triples_u64(5000, Exec::best());
    for _ in 0..100 {
        let s = random_reduced_stream(&mut rng);
        let mins = minimizers_on(&s, &triples, Exec::best()).unwrap();
        for m in &mins {
            assert!(m.boundary.is_some(), "{s}: minimizer {:?} is interior", m.approximant);
        }
    }
}

#[test]
fn interior_heights_exceed_boundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let inner = enumerate_triples(200);
    for _ in 0..500 {
        let len = rng.gen_range(1..=6);
        let w = RomikWord::new((0..len).map(|_| rng.gen_range(1..=5)).collect()).unwrap();
        let q = &inner[rng.gen_range(2..inner.len())];
        let z = prepend_word(&w, q);
        let (b1, b2) = cylinder_boundaries(&w);
        assert!(z.c() >= b1.c().max(b2.c()), "w = {w}, Z = {z:?}");
    }
}

#[test]
fn perron_consistency_small() {
    for per in [&[2u8][..], &[3], &[2, 3], &[3, 4, 4], &[2, 2, 3, 4]] {
        let s = DigitStream::from_digits(&[], per);
        for k in 1..=8 {
            let t = perron_delta(&s, k).unwrap();
            assert_eq!(t.delta_sq, delta_sq_stream(&s, &t.approximant).unwrap(), "{s} k = {k}");
        }
    }
}

#[test]
fn hurwitz_ceiling() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let triples = triples_u64(10_000, Exec::best());
    for _ in 0..20 {
        let s = random_reduced_stream(&mut rng);
        let best = &minimizers_on(&s, &triples, Exec::best()).unwrap()[0];
        assert!(best.delta_f64() <= 0.55, "{s}: {}", best.delta_f64());
    }
}

#[test]
fn isometry_on_small_windows() {
    let pairs = eisenstein_pairs(20_000, Exec::best());
    for per in [&[3u8][..], &[2], &[2, 2, 3]] {
        let s = DigitStream::from_digits(&[], per);
        let est = delta_liminf_estimate(&s, 20_000).unwrap();
        let ray = pair_scan_on(&RayTarget::from_point(&point_of_stream(&s).unwrap()), &pairs, 20_000, Exec::best())
            .unwrap();
        assert!(!ray.rational_target);
        assert!((est.estimate - ray.estimate).abs() < 1e-5, "{s}: {} vs {}", est.estimate, ray.estimate);
    }
}
