#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rootspace::{Complex64, MonicPolynomial, RootMultiset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the closed disk of the given radius.
pub fn in_disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let th = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, th)
}

pub fn points(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<Complex64> {
    (0..n).map(|_| in_disk(rng, radius)).collect()
}

/// `n` points in the disk with pairwise distance at least `sep`
/// (rejection sampling).
pub fn separated(rng: &mut ChaCha8Rng, n: usize, radius: f64, sep: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::with_capacity(n);
    while out.len() < n {
        let z = in_disk(rng, radius);
        if out.iter().all(|w| (z - w).norm() >= sep) {
            out.push(z);
        }
    }
    out
}

pub fn multiset(v: Vec<Complex64>) -> RootMultiset {
    RootMultiset::new(v).unwrap()
}

/// Polynomial with coefficients uniform in the disk.
pub fn poly(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> MonicPolynomial {
    MonicPolynomial::new(points(rng, n, radius)).unwrap()
}

pub fn shuffle<T>(rng: &mut ChaCha8Rng, v: &mut [T]) {
    for i in (1..v.len()).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
}
