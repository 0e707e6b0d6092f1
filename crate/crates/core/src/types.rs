//! Domain types: monic polynomials, root multisets, ordered tuples and
//! permutations.
//!
//! Every public constructor rejects NaN and infinite components, so all
//! downstream metric computations operate on finite values only.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

fn check_finite(values: &[Complex64]) -> Result<()> {
    match values.iter().position(|z| !z.is_finite()) {
        Some(idx) => Err(Error::NonFinite(idx)),
        None => Ok(()),
    }
}

/// Lexicographic comparison on (re, im). Total on finite values.
pub(crate) fn lex_cmp(z: &Complex64, w: &Complex64) -> Ordering {
    z.re.partial_cmp(&w.re)
        .expect("finite")
        .then_with(|| z.im.partial_cmp(&w.im).expect("finite"))
}

/// A monic polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0` of degree `n >= 2`,
/// stored by its non-leading coefficients in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<Complex64>,
}

impl MonicPolynomial {
    /// Builds a polynomial from `(a_0, ..., a_{n-1})`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DegreeTooSmall(coeffs.len()));
        }
        check_finite(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `z^n`, the polynomial whose roots are all zero.
    pub fn monomial(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients `a_0..a_{n-1}`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `max_j |a_j|`, i.e. the distance from `z^n` in the coefficient metric.
    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation of `p(z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Evaluates `p(z)` and `p'(z)` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// Coefficientwise `(1 - t) * self + t * other`; stays monic.
    pub fn interpolate(&self, other: &Self, t: f64) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a * (1.0 - t) + b * t)
            .collect();
        Self::new(coeffs)
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{}", self.degree())?;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if *a == Complex64::new(0.0, 0.0) {
                continue;
            }
            match j {
                0 => write!(f, " + ({a})")?,
                1 => write!(f, " + ({a})z")?,
                _ => write!(f, " + ({a})z^{j}")?,
            }
        }
        Ok(())
    }
}

/// An unordered collection of `n >= 2` complex numbers with multiplicity.
///
/// Storage order is incidental. Equality compares the sorted element lists
/// exactly.
#[derive(Debug, Clone)]
pub struct RootMultiset {
    elems: Vec<Complex64>,
}

impl RootMultiset {
    pub fn new(elems: Vec<Complex64>) -> Result<Self> {
        if elems.len() < 2 {
            return Err(Error::DegreeTooSmall(elems.len()));
        }
        check_finite(&elems)?;
        Ok(Self { elems })
    }

    /// The multiset of `n` zeros.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Elements in storage order. Callers must not attach meaning to it.
    pub fn elems(&self) -> &[Complex64] {
        &self.elems
    }

    /// Elements sorted lexicographically by (re, im).
    pub fn sorted(&self) -> Vec<Complex64> {
        let mut v = self.elems.clone();
        v.sort_by(lex_cmp);
        v
    }

    pub fn max_modulus(&self) -> f64 {
        self.elems.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl PartialEq for RootMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.sorted() == other.sorted()
    }
}

/// An ordered `n`-tuple of complex numbers, `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTuple {
    entries: Vec<Complex64>,
}

impl ComplexTuple {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::DegreeTooSmall(entries.len()));
        }
        check_finite(&entries)?;
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Complex64> {
        self.entries
    }

    /// Smallest distance between two coordinates.
    pub fn min_pairwise_gap(&self) -> f64 {
        let mut gap = f64::INFINITY;
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i + 1..] {
                gap = gap.min((a - b).norm());
            }
        }
        gap
    }

    /// True when all coordinates are pairwise distinct.
    pub fn has_distinct_coords(&self) -> bool {
        self.min_pairwise_gap() > 0.0
    }
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i] = j;
        }
        Self(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn polynomial_rejects_degree_one_and_non_finite() {
        assert!(matches!(
            MonicPolynomial::new(vec![c(1.0, 0.0)]),
            Err(Error::DegreeTooSmall(1))
        ));
        assert!(matches!(
            MonicPolynomial::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)]),
            Err(Error::NonFinite(1))
        ));
        assert!(MonicPolynomial::new(vec![c(f64::INFINITY, 0.0), c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn multiset_rejects_bad_input() {
        assert!(RootMultiset::new(vec![c(0.0, 0.0)]).is_err());
        assert!(RootMultiset::new(vec![c(0.0, f64::NEG_INFINITY), c(0.0, 0.0)]).is_err());
        assert!(ComplexTuple::new(vec![]).is_err());
    }

    #[test]
    fn horner_matches_hand_values() {
        // z^3 - 6z^2 + 11z - 6 at z = 4 is 6; derivative 3*16 - 48 + 11 = 11
        let p = MonicPolynomial::from_real(&[-6.0, 11.0, -6.0]).unwrap();
        let (v, d) = p.eval_with_derivative(c(4.0, 0.0));
        assert_eq!(v, c(6.0, 0.0));
        assert_eq!(d, c(11.0, 0.0));
        assert_eq!(p.eval(c(2.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn multiset_equality_ignores_order() {
        let a = RootMultiset::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        let b = RootMultiset::new(vec![c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let d = RootMultiset::new(vec![c(2.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, d);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 2, 0]).is_ok());
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::NotABijection(3))
        ));
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.inverse().as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn interpolation_stays_monic() {
        let p = MonicPolynomial::from_real(&[1.0, 0.0]).unwrap();
        let q = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
        let mid = p.interpolate(&q, 0.5).unwrap();
        assert_eq!(mid.coeffs(), &[c(0.0, 0.0), c(0.0, 0.0)]);
    }
}
