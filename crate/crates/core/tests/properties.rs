mod common;

use common::*;
use rand::Rng;
use rootspace::metric::{multiset_metric, multiset_metric_naive, poly_metric, project, sup_metric};
use rootspace::paths::{connect_in_d, track};
use rootspace::perturbation::{cluster_structure, disk_counts};
use rootspace::rootfinder::{cauchy_bound, roots_of, solve, SolverConfig};
use rootspace::vieta::{expand, symmetric_values};
use rootspace::{permute, Complex64, ComplexTuple, MonicPolynomial, Permutation, RootMultiset};

#[test]
fn metric_axioms_on_random_triples() {
    let mut rng = rng(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let u = multiset(points(&mut rng, n, 3.0));
        let v = multiset(points(&mut rng, n, 3.0));
        let w = multiset(points(&mut rng, n, 3.0));
        let uv = multiset_metric(&u, &v).unwrap().value;
        assert_eq!(uv, multiset_metric(&v, &u).unwrap().value);
        let uw = multiset_metric(&u, &w).unwrap().value;
        let wv = multiset_metric(&w, &v).unwrap().value;
        assert!(uv <= uw + wv + 1e-12);
        assert_eq!(multiset_metric(&u, &u).unwrap().value, 0.0);
        assert_eq!(uv == 0.0, u.sorted() == v.sorted());
    }
}

#[test]
fn zero_distance_iff_same_multiset_with_repeats() {
    let mut rng = rng(12);
    for _ in 0..200 {
        // draw from a tiny pool so that equal multisets occur often
        let pool = points(&mut rng, 3, 1.0);
        let n = rng.gen_range(2..=5);
        let u: Vec<_> = (0..n).map(|_| pool[rng.gen_range(0..3)]).collect();
        let mut v: Vec<_> = (0..n).map(|_| pool[rng.gen_range(0..3)]).collect();
        if rng.gen_bool(0.5) {
            v = u.clone();
            shuffle(&mut rng, &mut v);
        }
        let (u, v) = (multiset(u), multiset(v));
        let d = multiset_metric(&u, &v).unwrap().value;
        assert_eq!(d == 0.0, u.sorted() == v.sorted());
    }
}

#[test]
fn oracle_agrees_and_permutation_realizes_value() {
    let mut rng = rng(13);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let u = multiset(points(&mut rng, n, 10.0));
        let v = multiset(points(&mut rng, n, 10.0));
        let fast = multiset_metric(&u, &v).unwrap();
        let slow = multiset_metric_naive(&u, &v).unwrap();
        assert!((fast.value - slow.value).abs() <= 1e-12);
        let realized = (0..n)
            .map(|j| (u.elems()[j] - v.elems()[fast.permutation.apply(j)]).norm())
            .fold(0.0, f64::max);
        assert_eq!(realized, fast.value);
    }
}

#[test]
fn bottleneck_scales_past_the_oracle() {
    let mut rng = rng(14);
    let n = 200;
    let u = points(&mut rng, n, 1.0);
    let mut v: Vec<_> = u.iter().map(|z| z + in_disk(&mut rng, 1e-3)).collect();
    shuffle(&mut rng, &mut v);
    let m = multiset_metric(&multiset(u), &multiset(v)).unwrap();
    assert!(m.value <= 1e-3);
}

#[test]
fn distance_to_zero_multiset() {
    let mut rng = rng(15);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let v = multiset(points(&mut rng, n, 5.0));
        let o = RootMultiset::zeros(n).unwrap();
        assert_eq!(multiset_metric(&v, &o).unwrap().value, v.max_modulus());
    }
}

#[test]
fn projection_forgets_permutations() {
    let mut rng = rng(16);
    for _ in 0..100 {
        let n = rng.gen_range(2..=8);
        let u = ComplexTuple::new(points(&mut rng, n, 2.0)).unwrap();
        let mut images: Vec<usize> = (0..n).collect();
        shuffle(&mut rng, &mut images);
        let sigma = Permutation::new(images).unwrap();
        let us = permute(&u, &sigma).unwrap();
        assert!(project(&us) == project(&u));
        assert_eq!(multiset_metric(&project(&us), &project(&u)).unwrap().value, 0.0);
        assert!(sup_metric(&us, &u).unwrap() >= 0.0);
    }
}

#[test]
fn vieta_symmetry_and_agreement() {
    let mut rng = rng(21);
    for _ in 0..300 {
        let n = rng.gen_range(2..=10);
        let u = ComplexTuple::new(points(&mut rng, n, 1.0)).unwrap();
        let mut images: Vec<usize> = (0..n).collect();
        shuffle(&mut rng, &mut images);
        let us = permute(&u, &Permutation::new(images).unwrap()).unwrap();

        let a = symmetric_values(&u).to_polynomial();
        let b = symmetric_values(&us).to_polynomial();
        let scale = 1.0 + a.max_coeff_modulus();
        assert!(poly_metric(&a, &b).unwrap() <= 1e-12 * scale);

        let e = expand(&project(&u));
        assert!(poly_metric(&e, &a).unwrap() <= 1e-12 * scale);
    }
}

#[test]
fn vieta_lipschitz_on_bounded_sets() {
    let mut rng = rng(22);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let v = points(&mut rng, n, 2.0);
        let base = expand(&multiset(v.clone()));
        let max_mod = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut prev = f64::INFINITY;
        for h in [1e-3, 1e-6] {
            let moved: Vec<_> = v.iter().map(|z| z + in_disk(&mut rng, h)).collect();
            let d = poly_metric(&base, &expand(&multiset(moved))).unwrap();
            let envelope = n as f64 * (1.0 + max_mod + h).powi(n as i32 - 1) * 2f64.powi(n as i32);
            assert!(d / h <= envelope, "ratio {} > {envelope}", d / h);
            assert!(d <= prev);
            prev = d;
        }
    }
}

#[test]
fn round_trip_through_roots() {
    let mut rng = rng(31);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let v = multiset(separated(&mut rng, n, 1.0, 0.1));
        let back = roots_of(&expand(&v)).unwrap();
        assert!(multiset_metric(&back, &v).unwrap().value <= 1e-8);
    }
}

#[test]
fn residual_round_trip_and_containment() {
    let mut rng = rng(32);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let p = expand(&multiset(separated(&mut rng, n, 1.0, 0.1)));
        let rep = solve(&p, &SolverConfig::default()).unwrap();
        assert!(rep.converged);
        assert!(rep.max_residual <= 1e-12);
        let scale = (1.0 + p.max_coeff_modulus()).powi(n as i32);
        assert!(poly_metric(&expand(&rep.roots), &p).unwrap() <= 1e-8 * scale);
        assert!(rep.roots.max_modulus() < cauchy_bound(&p) + 1e-9);
    }
}

#[test]
fn bounded_image() {
    let mut rng = rng(33);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(0.1..20.0);
        let p = poly(&mut rng, n, m);
        let r = roots_of(&p).unwrap();
        let o = RootMultiset::zeros(n).unwrap();
        assert!(multiset_metric(&r, &o).unwrap().value < 1.0 + m);
    }
}

#[test]
fn multiple_roots_lose_precision_boundedly() {
    let mut rng = rng(34);
    for _ in 0..60 {
        let m = rng.gen_range(2..=4);
        let extra = rng.gen_range(1..=4);
        let c = in_disk(&mut rng, 1.0);
        let mut roots = vec![c; m];
        // keep the simple roots away from the cluster
        while roots.len() < m + extra {
            let z = in_disk(&mut rng, 2.0);
            if roots.iter().all(|w| (z - w).norm() >= 0.3) {
                roots.push(z);
            }
        }
        let truth = multiset(roots);
        let rep = solve(&expand(&truth), &SolverConfig::default()).unwrap();
        assert!(multiset_metric(&rep.roots, &truth).unwrap().value <= 1e-2);
    }
}

#[test]
fn solver_is_bitwise_deterministic() {
    let mut rng = rng(35);
    for _ in 0..20 {
        let p = poly(&mut rng, 7, 2.0);
        let a = solve(&p, &SolverConfig::default()).unwrap();
        let b = solve(&p, &SolverConfig::default()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn disk_counts_match_multiplicities() {
    let mut rng = rng(41);
    for _ in 0..200 {
        let k = rng.gen_range(1..=4);
        let centers = separated(&mut rng, k, 4.0, 1.0);
        let mut v = Vec::new();
        for &c in &centers {
            for _ in 0..rng.gen_range(1..=3) {
                v.push(c);
            }
        }
        if v.len() < 2 {
            v.push(centers[0]);
        }
        let v = multiset(v);
        let s = cluster_structure(&v, 0.0);
        assert_eq!(s.multiplicities.iter().sum::<usize>(), v.len());
        let u = multiset(v.elems().iter().map(|z| z + in_disk(&mut rng, 0.999 * s.eta)).collect());
        assert!(multiset_metric(&v, &u).unwrap().value < s.eta);
        assert_eq!(disk_counts(&v, &u, 0.0).unwrap(), s.multiplicities);
    }
}

#[test]
fn cluster_structure_ignores_storage_order() {
    let mut rng = rng(42);
    for _ in 0..100 {
        let pool = points(&mut rng, 3, 2.0);
        let mut v: Vec<Complex64> = (0..6).map(|_| pool[rng.gen_range(0..3)]).collect();
        let a = cluster_structure(&multiset(v.clone()), 0.0);
        shuffle(&mut rng, &mut v);
        let b = cluster_structure(&multiset(v), 0.0);
        assert_eq!(a, b);
    }
}

#[test]
fn paths_stay_in_distinct_tuples() {
    let mut rng = rng(51);
    for _ in 0..50 {
        let n = rng.gen_range(2..=6);
        let v = ComplexTuple::new(separated(&mut rng, n, 2.0, 1e-3)).unwrap();
        let w = ComplexTuple::new(separated(&mut rng, n, 2.0, 1e-3)).unwrap();
        let path = connect_in_d(&v, &w).unwrap();
        assert_eq!(path.samples.first(), Some(&v));
        assert_eq!(path.samples.last(), Some(&w));
        assert!(path.min_gap() > 0.0);
        assert!(path.largest_step() <= path.max_step);
    }
}

#[test]
fn tracking_endpoints_and_triangle_inequality() {
    let mut rng = rng(61);
    for _ in 0..20 {
        let n = rng.gen_range(2..=6);
        let p = poly(&mut rng, n, 2.0);
        let q = poly(&mut rng, n, 2.0);
        let traj = track(&p, &q, 6).unwrap();
        let first = &traj.root_sets[0];
        let last = traj.root_sets.last().unwrap();
        assert!(multiset_metric(first, &roots_of(&p).unwrap()).unwrap().value <= 1e-9);
        assert!(multiset_metric(last, &roots_of(&q).unwrap()).unwrap().value <= 1e-9);
        for (j, d) in traj.step_dfs.iter().enumerate() {
            let direct = multiset_metric(&traj.root_sets[j], &traj.root_sets[j + 1]).unwrap().value;
            assert_eq!(*d, direct);
        }
        let ends = multiset_metric(first, last).unwrap().value;
        assert!(traj.total_variation() >= ends - 1e-9);
    }
}

#[test]
fn refining_the_grid_does_not_enlarge_steps() {
    let mut rng = rng(62);
    for _ in 0..20 {
        let n = rng.gen_range(2..=5);
        let p = poly(&mut rng, n, 2.0);
        let q = poly(&mut rng, n, 2.0);
        let mut prev = f64::INFINITY;
        for steps in [4, 8, 16, 32] {
            let traj = track(&p, &q, steps).unwrap();
            let max = traj.step_dfs.iter().copied().fold(0.0, f64::max);
            assert!(max <= prev + 1e-9, "steps = {steps}: {max} > {prev}");
            prev = max;
        }
    }
}

#[test]
fn interpolated_polynomials_stay_monic_of_same_degree() {
    let p = MonicPolynomial::from_real(&[1.0, 2.0, 3.0]).unwrap();
    let q = MonicPolynomial::from_real(&[-1.0, 0.0, 0.5]).unwrap();
    for t in [0.0, 0.25, 1.0] {
        assert_eq!(p.interpolate(&q, t).unwrap().degree(), 3);
    }
    assert_eq!(p.interpolate(&q, 0.0).unwrap(), p);
    assert_eq!(p.interpolate(&q, 1.0).unwrap(), q);
}
