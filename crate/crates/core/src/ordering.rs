//! Total orders on the complex plane and the ordered selections they induce.
//!
//! Sorting a multiset by a total order picks one tuple out of every fiber of
//! the projection. For the lexicographic order that choice jumps: the
//! polynomials `z^2 + 1 + 2i/k - 1/k^2` converge to `z^2 + 1` and their root
//! multisets converge in `d_F`, while the sorted root tuples stay at sup
//! distance at least 2 from the sorted roots of the limit.
//! [`discontinuity_witness`] builds that sequence.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metric::{multiset_metric, sup_metric};
use crate::rootfinder::{cauchy_bound, roots_with, SolverConfig};
use crate::types::{lex_cmp, ComplexTuple, MonicPolynomial, RootMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lexicographic,
    ModulusArgument,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lexicographic => "lexicographic",
            OrderKind::ModulusArgument => "modulus_argument",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" | "lexicographic" => Ok(OrderKind::Lexicographic),
            "modarg" | "modulus_argument" => Ok(OrderKind::ModulusArgument),
            other => Err(Error::InvalidArgument(format!("unknown order {other:?}"))),
        }
    }
}

/// `z <= w` iff `re z < re w`, or the real parts agree and `im z <= im w`.
pub fn lex_compare(z: Complex64, w: Complex64) -> Ordering {
    lex_cmp(&z, &w)
}

/// Argument in `(-pi, pi]`, with `arg(0) = 0`.
fn principal_arg(z: Complex64) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        return 0.0;
    }
    let a = z.im.atan2(z.re);
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Orders by modulus, then by argument in `(-pi, pi]`.
///
/// Distinct numbers whose modulus and argument round to the same doubles are
/// separated lexicographically, which keeps the relation antisymmetric.
pub fn mod_arg_compare(z: Complex64, w: Complex64) -> Ordering {
    z.norm()
        .partial_cmp(&w.norm())
        .expect("finite")
        .then_with(|| {
            principal_arg(z)
                .partial_cmp(&principal_arg(w))
                .expect("finite")
        })
        .then_with(|| lex_cmp(&z, &w))
}

pub fn compare(kind: OrderKind, z: Complex64, w: Complex64) -> Ordering {
    match kind {
        OrderKind::Lexicographic => lex_compare(z, w),
        OrderKind::ModulusArgument => mod_arg_compare(z, w),
    }
}

/// The nondecreasing arrangement of `v` under `kind`.
pub fn order_tuple(v: &RootMultiset, kind: OrderKind) -> ComplexTuple {
    let mut entries = v.elems().to_vec();
    entries.sort_by(|&a, &b| compare(kind, a, b));
    ComplexTuple::new(entries).expect("multiset invariants imply tuple invariants")
}

/// A sequence `p_k -> p` whose root multisets converge while their
/// lexicographically ordered root tuples do not.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscontinuityWitness {
    pub limit_poly: MonicPolynomial,
    /// `p_k` for `k = 1..=K`.
    pub sequence_polys: Vec<MonicPolynomial>,
    /// `d_F(Z(p_k), Z(p))`.
    pub df_gaps: Vec<f64>,
    /// `d_inf(L(Z(p_k)), L(Z(p)))` for the lexicographic selection `L`.
    pub ordered_gaps: Vec<f64>,
}

/// Relative size below which a computed root component is treated as zero
/// before ordering.
///
/// The limit roots `+-i` have real part exactly 0, where the lexicographic
/// order breaks ties on the imaginary part. A solver returns real parts of
/// order `1e-17` with an arbitrary sign, which would let rounding decide the
/// order; components this small are flushed to zero first.
pub const CHOP_TOLERANCE: f64 = 1e-12;

fn chop(v: &RootMultiset, scale: f64) -> RootMultiset {
    let cut = CHOP_TOLERANCE * scale;
    let clean = |x: f64| if x.abs() <= cut { 0.0 } else { x };
    RootMultiset::new(
        v.elems()
            .iter()
            .map(|z| Complex64::new(clean(z.re), clean(z.im)))
            .collect(),
    )
    .expect("same size, finite")
}

/// Builds `p_k = z^2 + 1 + 2i/k - 1/k^2` for `k = 1..=K` and the limit
/// `p = z^2 + 1`, then measures both gaps from computed roots.
pub fn discontinuity_witness(k_max: usize) -> Result<DiscontinuityWitness> {
    discontinuity_witness_with(k_max, &SolverConfig::default())
}

pub fn discontinuity_witness_with(k_max: usize, cfg: &SolverConfig) -> Result<DiscontinuityWitness> {
    if k_max < 2 {
        return Err(Error::InvalidArgument("K must be at least 2".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let limit_poly = MonicPolynomial::new(vec![Complex64::new(1.0, 0.0), zero])?;
    let limit_roots = chop(&roots_with(&limit_poly, cfg)?, cauchy_bound(&limit_poly));
    let limit_sorted = order_tuple(&limit_roots, OrderKind::Lexicographic);

    let mut sequence_polys = Vec::with_capacity(k_max);
    let mut df_gaps = Vec::with_capacity(k_max);
    let mut ordered_gaps = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let kf = k as f64;
        let a0 = Complex64::new(1.0 - 1.0 / (kf * kf), 2.0 / kf);
        let p = MonicPolynomial::new(vec![a0, zero])?;
        let roots = chop(&roots_with(&p, cfg)?, cauchy_bound(&p));
        df_gaps.push(multiset_metric(&roots, &limit_roots)?.value);
        ordered_gaps.push(sup_metric(
            &order_tuple(&roots, OrderKind::Lexicographic),
            &limit_sorted,
        )?);
        sequence_polys.push(p);
    }

    Ok(DiscontinuityWitness {
        limit_poly,
        sequence_polys,
        df_gaps,
        ordered_gaps,
    })
}
