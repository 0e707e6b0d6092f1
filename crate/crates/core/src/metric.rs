//! The three metrics: `d_P` on coefficient vectors, `d_inf` on ordered
//! tuples, and the bottleneck multiset metric `d_F`
//! (min over permutations of the max matched distance).
//!
//! `d_F` is evaluated as a bottleneck assignment: the sorted distinct
//! pairwise distances are binary-searched, and each candidate threshold is
//! tested by a maximum bipartite matching on the edges not exceeding it.
//! [`multiset_metric_naive`] enumerates all `n!` permutations and is kept as
//! the reference oracle.

use std::collections::VecDeque;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{ComplexTuple, MonicPolynomial, Permutation, RootMultiset};

/// Largest `n` accepted by [`multiset_metric_naive`].
pub const ORACLE_SIZE_LIMIT: usize = 8;

/// A permutation realizing the bottleneck matching between two multisets and
/// the resulting `d_F` value.
///
/// `permutation.apply(j)` is the index in `V` matched with `U[j]`, both in
/// storage order.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingResult {
    pub value: f64,
    pub permutation: Permutation,
}

#[inline]
fn dist(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm()
}

fn matched_cost(u: &[Complex64], v: &[Complex64], perm: &[usize]) -> f64 {
    u.iter()
        .zip(perm)
        .map(|(&a, &j)| dist(a, v[j]))
        .fold(0.0, f64::max)
}

/// `d_P(f, g) = max_j |a_j - b_j|`.
pub fn poly_metric(f: &MonicPolynomial, g: &MonicPolynomial) -> Result<f64> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    Ok(f.coeffs()
        .iter()
        .zip(g.coeffs())
        .map(|(&a, &b)| dist(a, b))
        .fold(0.0, f64::max))
}

/// `d_inf(u, v) = max_j |u_j - v_j|`.
pub fn sup_metric(u: &ComplexTuple, v: &ComplexTuple) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.entries()
        .iter()
        .zip(v.entries())
        .map(|(&a, &b)| dist(a, b))
        .fold(0.0, f64::max))
}

/// Bottleneck multiset distance `d_F(U, V)`.
pub fn multiset_metric(u: &RootMultiset, v: &RootMultiset) -> Result<MatchingResult> {
    check_sizes(u, v)?;
    let (a, b) = (u.elems(), v.elems());
    let n = a.len();

    let costs: Vec<f64> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| dist(x, y)))
        .collect();

    // Any perfect matching uses one edge per row and per column, so the
    // answer is at least the largest row/column minimum.
    let mut lower = 0.0f64;
    for i in 0..n {
        let row_min = costs[i * n..(i + 1) * n].iter().copied().fold(f64::INFINITY, f64::min);
        let col_min = (0..n).map(|k| costs[k * n + i]).fold(f64::INFINITY, f64::min);
        lower = lower.max(row_min).max(col_min);
    }

    let mut candidates: Vec<f64> = costs.iter().copied().filter(|&c| c >= lower).collect();
    candidates.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    candidates.dedup();

    // The largest candidate admits the complete bipartite graph.
    let mut matcher = Matcher::new(n);
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    let mut best = matcher
        .perfect_matching(&costs, candidates[hi])
        .expect("complete graph has a perfect matching");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match matcher.perfect_matching(&costs, candidates[mid]) {
            Some(m) => {
                best = m;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }

    let value = matched_cost(a, b, &best);
    debug_assert_eq!(value, candidates[lo]);
    Ok(MatchingResult {
        value,
        permutation: Permutation::new(best).expect("matching is a bijection"),
    })
}

/// Exhaustive `d_F` over all `n!` permutations; `n <= 8`.
pub fn multiset_metric_naive(u: &RootMultiset, v: &RootMultiset) -> Result<MatchingResult> {
    check_sizes(u, v)?;
    let n = u.len();
    if n > ORACLE_SIZE_LIMIT {
        return Err(Error::OracleSizeLimit {
            n,
            limit: ORACLE_SIZE_LIMIT,
        });
    }
    let (a, b) = (u.elems(), v.elems());

    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = perm.clone();
    let mut best_value = matched_cost(a, b, &perm);
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            let value = matched_cost(a, b, &perm);
            if value < best_value {
                best_value = value;
                best.copy_from_slice(&perm);
            }
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }

    Ok(MatchingResult {
        value: best_value,
        permutation: Permutation::new(best).expect("heap permutation"),
    })
}

/// Forgets the order of a tuple.
pub fn project(u: &ComplexTuple) -> RootMultiset {
    RootMultiset::new(u.entries().to_vec()).expect("tuple invariants imply multiset invariants")
}

/// `u_sigma`: entry `j` of the result is `u[sigma(j)]`.
pub fn permute(u: &ComplexTuple, sigma: &Permutation) -> Result<ComplexTuple> {
    if sigma.len() != u.len() {
        return Err(Error::NotABijection(u.len()));
    }
    ComplexTuple::new(
        (0..u.len())
            .map(|j| u.entries()[sigma.apply(j)])
            .collect(),
    )
}

fn check_sizes(u: &RootMultiset, v: &RootMultiset) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(())
}

/// Hopcroft-Karp on the threshold graph `cost[i][j] <= t`.
struct Matcher {
    n: usize,
    match_left: Vec<usize>,
    match_right: Vec<usize>,
    layer: Vec<usize>,
    queue: VecDeque<usize>,
}

const FREE: usize = usize::MAX;

impl Matcher {
    fn new(n: usize) -> Self {
        Self {
            n,
            match_left: vec![FREE; n],
            match_right: vec![FREE; n],
            layer: vec![0; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn perfect_matching(&mut self, costs: &[f64], t: f64) -> Option<Vec<usize>> {
        let n = self.n;
        self.match_left.fill(FREE);
        self.match_right.fill(FREE);
        let mut size = 0;
        while self.bfs(costs, t) {
            for i in 0..n {
                if self.match_left[i] == FREE && self.dfs(costs, t, i) {
                    size += 1;
                }
            }
        }
        (size == n).then(|| self.match_left.clone())
    }

    fn bfs(&mut self, costs: &[f64], t: f64) -> bool {
        let n = self.n;
        self.queue.clear();
        for i in 0..n {
            if self.match_left[i] == FREE {
                self.layer[i] = 0;
                self.queue.push_back(i);
            } else {
                self.layer[i] = FREE;
            }
        }
        let mut found = false;
        while let Some(i) = self.queue.pop_front() {
            for j in 0..n {
                if costs[i * n + j] > t {
                    continue;
                }
                match self.match_right[j] {
                    FREE => found = true,
                    k if self.layer[k] == FREE => {
                        self.layer[k] = self.layer[i] + 1;
                        self.queue.push_back(k);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, costs: &[f64], t: f64, i: usize) -> bool {
        let n = self.n;
        for j in 0..n {
            if costs[i * n + j] > t {
                continue;
            }
            let k = self.match_right[j];
            let ok = k == FREE || (self.layer[k] == self.layer[i] + 1 && self.dfs(costs, t, k));
            if ok {
                self.match_left[i] = j;
                self.match_right[j] = i;
                return true;
            }
        }
        self.layer[i] = FREE;
        false
    }
}
