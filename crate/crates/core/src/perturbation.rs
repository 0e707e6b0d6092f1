//! Quantitative root-displacement certificates.
//!
//! Two classical bounds compare the roots of monic `f` and `g` of equal
//! degree: Ostrowski's `(2n - 1) eps` and Rahman-Schmeisser's
//! `4 A delta^(1/n)`. [`certify`] evaluates either bound next to the measured
//! `d_F` between the computed root multisets.
//!
//! [`cluster_structure`] and [`disk_counts`] cover the multiplicity
//! statement: if `d_F(V, U) < eta(V)` then every disk of radius `eta(V)`
//! about a distinct element of `V` holds exactly as many elements of `U` as
//! that element's multiplicity in `V`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metric::{multiset_metric, poly_metric};
use crate::rootfinder::{roots_with, SolverConfig};
use crate::types::{MonicPolynomial, RootMultiset};

/// Largest `delta = d_P(f, g)` for which a failing Rahman-Schmeisser check
/// would be reported as meaningful. The bound only holds for small `delta`.
pub const DEFAULT_RS_DELTA_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OstrowskiData {
    pub gamma_cap: f64,
    pub gamma: f64,
    pub epsilon: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RSData {
    pub a_cap: f64,
    pub delta: f64,
    pub bound: f64,
}

impl RSData {
    pub fn within_small_delta(&self, threshold: f64) -> bool {
        self.delta <= threshold
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundName {
    Ostrowski,
    RahmanSchmeisser,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundName::Ostrowski => "ostrowski",
            BoundName::RahmanSchmeisser => "rahman_schmeisser",
        })
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ostrowski" => Ok(BoundName::Ostrowski),
            "rs" | "rahman_schmeisser" => Ok(BoundName::RahmanSchmeisser),
            other => Err(Error::InvalidArgument(format!("unknown bound {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCertificate {
    pub bound_name: BoundName,
    pub bound_value: f64,
    pub measured_df: f64,
    pub holds: bool,
}

/// Distinct elements of a multiset with their multiplicities and the
/// separation radius `eta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterStructure {
    pub centers: Vec<Complex64>,
    pub multiplicities: Vec<usize>,
    pub eta: f64,
}

fn same_degree(f: &MonicPolynomial, g: &MonicPolynomial) -> Result<usize> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    Ok(f.degree())
}

/// Ostrowski's quantities for the pair `(f, g)`.
///
/// The classical statement writes `f = x^n + a_1 x^{n-1} + ... + a_n`, so its
/// `a_nu` is our stored coefficient `a_{n - nu}`.
pub fn ostrowski(f: &MonicPolynomial, g: &MonicPolynomial) -> Result<OstrowskiData> {
    let n = same_degree(f, g)?;
    let (a, b) = (f.coeffs(), g.coeffs());
    let classical = |c: &[Complex64], nu: usize| c[n - nu].norm();

    let gamma_cap = (1..=n)
        .map(|nu| {
            let e = 1.0 / nu as f64;
            classical(a, nu).powf(e).max(classical(b, nu).powf(e))
        })
        .fold(0.0, f64::max);
    let gamma = 2.0 * gamma_cap;
    let sum: f64 = (1..=n)
        .map(|nu| (b[n - nu] - a[n - nu]).norm() * gamma.powi((n - nu) as i32))
        .sum();
    let epsilon = sum.powf(1.0 / n as f64);
    Ok(OstrowskiData {
        gamma_cap,
        gamma,
        epsilon,
        bound: (2 * n - 1) as f64 * epsilon,
    })
}

/// Rahman-Schmeisser quantities with `f` as the reference polynomial.
pub fn rahman_schmeisser(f: &MonicPolynomial, g: &MonicPolynomial) -> Result<RSData> {
    let n = same_degree(f, g)?;
    let a_cap = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(nu, a)| 2.0 * a.norm().powf(1.0 / (n - nu) as f64))
        .fold(1.0, f64::max);
    let delta = poly_metric(f, g)?;
    Ok(RSData {
        a_cap,
        delta,
        bound: 4.0 * a_cap * delta.powf(1.0 / n as f64),
    })
}

/// Evaluates the chosen bound and the measured `d_F(Z(f), Z(g))`.
pub fn certify(f: &MonicPolynomial, g: &MonicPolynomial, which: BoundName) -> Result<BoundCertificate> {
    certify_with(f, g, which, &SolverConfig::default())
}

pub fn certify_with(
    f: &MonicPolynomial,
    g: &MonicPolynomial,
    which: BoundName,
    cfg: &SolverConfig,
) -> Result<BoundCertificate> {
    let bound_value = match which {
        BoundName::Ostrowski => ostrowski(f, g)?.bound,
        BoundName::RahmanSchmeisser => rahman_schmeisser(f, g)?.bound,
    };
    let measured_df = if f == g {
        0.0
    } else {
        multiset_metric(&roots_with(f, cfg)?, &roots_with(g, cfg)?)?.value
    };
    Ok(BoundCertificate {
        bound_name: which,
        bound_value,
        measured_df,
        holds: measured_df <= bound_value,
    })
}

/// Groups the elements of `v` by single linkage at distance `tol`
/// (`tol = 0` merges exactly equal elements only). Each group is represented
/// by its centroid.
///
/// Centers are listed in lexicographic order of each group's smallest
/// element, so the result does not depend on the storage order of `v`.
pub fn cluster_structure(v: &RootMultiset, tol: f64) -> ClusterStructure {
    let elems = v.sorted();
    let n = elems.len();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (elems[i] - elems[j]).norm() <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    // keep the smaller index as root so groups are keyed by
                    // their lexicographically first element
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }

    let mut sums: Vec<(usize, Complex64, usize)> = Vec::new();
    for (i, &z) in elems.iter().enumerate() {
        let root = find(&mut parent, i);
        match sums.iter_mut().find(|(r, _, _)| *r == root) {
            Some((_, sum, count)) => {
                *sum += z;
                *count += 1;
            }
            None => sums.push((root, z, 1)),
        }
    }
    sums.sort_by_key(|(r, _, _)| *r);

    let centers: Vec<Complex64> = sums.iter().map(|&(_, s, m)| s / m as f64).collect();
    let multiplicities = sums.iter().map(|&(_, _, m)| m).collect();
    ClusterStructure {
        eta: separation_radius(&centers),
        centers,
        multiplicities,
    }
}

/// Half the smallest distance between distinct centers; 1 for a single one.
fn separation_radius(centers: &[Complex64]) -> f64 {
    if centers.len() < 2 {
        return 1.0;
    }
    let mut min = f64::INFINITY;
    for (i, a) in centers.iter().enumerate() {
        for b in &centers[i + 1..] {
            min = min.min((a - b).norm());
        }
    }
    0.5 * min
}

/// For each center of `cluster_structure(v, tol)`, the number of elements
/// of `u` inside the open disk of radius `eta` about it.
pub fn disk_counts(v: &RootMultiset, u: &RootMultiset, tol: f64) -> Result<Vec<usize>> {
    if v.len() != u.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: u.len(),
        });
    }
    let s = cluster_structure(v, tol);
    Ok(s.centers
        .iter()
        .map(|&c| u.elems().iter().filter(|&&x| (x - c).norm() < s.eta).count())
        .collect())
}
