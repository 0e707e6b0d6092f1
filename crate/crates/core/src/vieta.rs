//! The Vieta map from root multisets to monic polynomials.

use num_complex::Complex64;

use crate::types::{ComplexTuple, MonicPolynomial, RootMultiset};

/// Coefficient functions of a tuple: `psi[k]` is the coefficient `a_k` of
/// `prod_j (z - u_j)`, i.e. `(-1)^(n-k) e_{n-k}(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricValues {
    pub psi: Vec<Complex64>,
}

impl SymmetricValues {
    pub fn to_polynomial(&self) -> MonicPolynomial {
        MonicPolynomial::new(self.psi.clone()).expect("finite symmetric values of an n-tuple")
    }
}

/// `prod_j (z - z_j)` by multiplying in one linear factor at a time.
pub fn expand(v: &RootMultiset) -> MonicPolynomial {
    let n = v.len();
    // full[k] is the coefficient of z^k; full[n] = 1 throughout.
    let mut full = vec![Complex64::new(0.0, 0.0); n + 1];
    full[0] = Complex64::new(1.0, 0.0);
    for (deg, &r) in v.elems().iter().enumerate() {
        // multiply the degree-`deg` product by (z - r)
        full[deg + 1] = full[deg];
        for k in (1..=deg).rev() {
            full[k] = full[k - 1] - r * full[k];
        }
        full[0] = -r * full[0];
    }
    full.truncate(n);
    MonicPolynomial::new(full).expect("finite roots give finite coefficients")
}

/// Elementary symmetric sums of `u` with the Vieta signs attached.
///
/// Accumulates `e_1..e_n` with the recurrence
/// `e_k <- e_k + u_j e_{k-1}` and then sets `psi[n-k] = (-1)^k e_k`, an
/// independent route from [`expand`].
pub fn symmetric_values(u: &ComplexTuple) -> SymmetricValues {
    let n = u.len();
    let mut e = vec![Complex64::new(0.0, 0.0); n + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (j, &x) in u.entries().iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let prev = e[k - 1];
            e[k] += x * prev;
        }
    }
    let psi = (0..n)
        .map(|idx| {
            let k = n - idx;
            if k.is_multiple_of(2) {
                e[k]
            } else {
                -e[k]
            }
        })
        .collect();
    SymmetricValues { psi }
}
