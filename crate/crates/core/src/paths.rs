//! Paths inside the set of tuples with pairwise-distinct coordinates, and
//! root tracking along straight segments in coefficient space.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::metric::{multiset_metric, poly_metric, sup_metric};
use crate::perturbation::rahman_schmeisser;
use crate::rootfinder::{roots_with, SolverConfig};
use crate::types::{ComplexTuple, MonicPolynomial, Permutation, RootMultiset};

/// A sampled path of tuples. Consecutive samples are joined by straight
/// segments in `C^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TuplePath {
    pub samples: Vec<ComplexTuple>,
    /// Declared upper bound on `d_inf` between consecutive samples.
    pub max_step: f64,
}

impl TuplePath {
    /// Smallest coordinate gap over all samples.
    pub fn min_gap(&self) -> f64 {
        self.samples
            .iter()
            .map(ComplexTuple::min_pairwise_gap)
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest `d_inf` between consecutive samples.
    pub fn largest_step(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| sup_metric(&w[0], &w[1]).expect("equal lengths"))
            .fold(0.0, f64::max)
    }
}

/// Joins `v` to `w` without ever letting two coordinates meet, with the
/// default step budget `(1 + max modulus) / 20`.
pub fn connect_in_d(v: &ComplexTuple, w: &ComplexTuple) -> Result<TuplePath> {
    let scale = 1.0 + v.entries().iter().chain(w.entries()).map(|z| z.norm()).fold(0.0, f64::max);
    connect_in_d_with_step(v, w, scale / 20.0)
}

/// Like [`connect_in_d`] with an explicit bound on consecutive-sample
/// distance.
///
/// When `v` and `w` differ in one coordinate only, that coordinate is moved
/// directly. Otherwise every coordinate is first moved onto an auxiliary
/// tuple `u` on a circle outside all coordinates of `v` and `w`, then from
/// `u` onto `w`, one coordinate at a time. A single-coordinate move follows
/// the straight segment except inside disks of half the current gap around
/// the other coordinates, which it skirts along the boundary circle.
pub fn connect_in_d_with_step(v: &ComplexTuple, w: &ComplexTuple, max_step: f64) -> Result<TuplePath> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    if !(max_step > 0.0 && max_step.is_finite()) {
        return Err(Error::InvalidArgument("max_step must be positive".into()));
    }
    if !v.has_distinct_coords() || !w.has_distinct_coords() {
        return Err(Error::CoordinatesNotDistinct);
    }

    let n = v.len();
    let mut samples = vec![v.clone()];
    if v == w {
        samples.push(w.clone());
        return Ok(TuplePath { samples, max_step });
    }

    let differing: Vec<usize> = (0..n)
        .filter(|&k| v.entries()[k] != w.entries()[k])
        .collect();

    let mut current = v.entries().to_vec();
    if differing.len() == 1 {
        let k = differing[0];
        move_coordinate(&mut current, k, w.entries()[k], max_step, &mut samples);
    } else {
        let radius = 2.0
            * (1.0 + v.entries().iter().chain(w.entries()).map(|z| z.norm()).fold(0.0, f64::max));
        let u: Vec<Complex64> = (0..n)
            .map(|j| Complex64::from_polar(radius, 2.0 * PI * j as f64 / n as f64 + PI / (2.0 * n as f64)))
            .collect();
        for (k, &target) in u.iter().enumerate() {
            move_coordinate(&mut current, k, target, max_step, &mut samples);
        }
        for (k, &target) in w.entries().iter().enumerate() {
            move_coordinate(&mut current, k, target, max_step, &mut samples);
        }
    }

    // waypoints are assigned exactly, so the last sample already equals w
    debug_assert_eq!(samples.last(), Some(w));
    Ok(TuplePath { samples, max_step })
}

fn move_coordinate(
    current: &mut [Complex64],
    k: usize,
    target: Complex64,
    max_step: f64,
    samples: &mut Vec<ComplexTuple>,
) {
    let start = current[k];
    if start == target {
        return;
    }
    let fixed: Vec<Complex64> = current
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, &z)| z)
        .collect();

    let mut gap = f64::INFINITY;
    for (i, a) in fixed.iter().enumerate() {
        gap = gap.min((a - start).norm()).min((a - target).norm());
        for b in &fixed[i + 1..] {
            gap = gap.min((a - b).norm());
        }
    }
    let r = 0.5 * gap;

    // sample slightly finer than the budget to absorb rounding in the points
    let points = avoiding_route(start, target, &fixed, r, 0.99 * max_step);
    let last = points.len() - 1;
    for (idx, z) in points.into_iter().enumerate().skip(1) {
        current[k] = if idx == last { target } else { z };
        samples.push(ComplexTuple::new(current.to_vec()).expect("finite"));
    }
}

/// Points from `a` to `b` (inclusive) staying at distance `>= r` from each
/// obstacle, spaced at most `h` apart. Obstacle disks of radius `r` have
/// disjoint interiors and do not contain `a` or `b`.
fn avoiding_route(a: Complex64, b: Complex64, obstacles: &[Complex64], r: f64, h: f64) -> Vec<Complex64> {
    let d = b - a;
    let len2 = d.norm_sqr();

    // (t_in, t_out, center) for every disk the open segment enters
    let mut crossings: Vec<(f64, f64, Complex64)> = obstacles
        .iter()
        .filter_map(|&f| {
            // |a + t d - f|^2 = r^2
            let m = a - f;
            let half_b = (m.conj() * d).re / len2;
            let c = (m.norm_sqr() - r * r) / len2;
            let disc = half_b * half_b - c;
            if disc <= 0.0 {
                return None;
            }
            let s = disc.sqrt();
            let (t0, t1) = (-half_b - s, -half_b + s);
            (t1 > 0.0 && t0 < 1.0).then_some((t0.max(0.0), t1.min(1.0), f))
        })
        .collect();
    crossings.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite"));

    let mut out = vec![a];
    let mut pos = a;
    for (t0, t1, f) in crossings {
        let entry = a + d * t0;
        push_segment(&mut out, pos, entry, h);
        let exit = a + d * t1;
        push_arc(&mut out, f, r, entry, exit, h);
        pos = exit;
    }
    push_segment(&mut out, pos, b, h);
    out
}

fn push_segment(out: &mut Vec<Complex64>, from: Complex64, to: Complex64, h: f64) {
    let len = (to - from).norm();
    if len == 0.0 {
        return;
    }
    let m = (len / h).ceil().max(1.0) as usize;
    for i in 1..=m {
        out.push(from + (to - from) * (i as f64 / m as f64));
    }
}

/// Walks the circle `|z - center| = r` from `from` to `to` the short way
/// round (counter-clockwise on a tie). Angular steps stay below `pi/4`, so
/// chords keep a positive distance from the center.
fn push_arc(out: &mut Vec<Complex64>, center: Complex64, r: f64, from: Complex64, to: Complex64, h: f64) {
    let th0 = (from - center).arg();
    let mut sweep = (to - center).arg() - th0;
    while sweep <= -PI {
        sweep += 2.0 * PI;
    }
    while sweep > PI {
        sweep -= 2.0 * PI;
    }
    let m = ((r * sweep.abs() / h).ceil())
        .max((sweep.abs() / (PI / 4.0)).ceil())
        .max(1.0) as usize;
    for i in 1..=m {
        let th = th0 + sweep * (i as f64 / m as f64);
        out.push(center + Complex64::from_polar(r, th));
    }
}

/// Roots of `(1 - t) p + t q` at a refined grid of `t`, consecutive root
/// sets linked by their bottleneck matchings.
#[derive(Debug, Clone, PartialEq)]
pub struct RootTrajectory {
    pub ts: Vec<f64>,
    pub root_sets: Vec<RootMultiset>,
    /// `matchings[j].apply(i)` is the index in `root_sets[j + 1]` matched with
    /// element `i` of `root_sets[j]`.
    pub matchings: Vec<Permutation>,
    pub step_dfs: Vec<f64>,
}

impl RootTrajectory {
    /// Follows each root of `root_sets[0]` through the matchings; one curve
    /// per root, one point per `t`.
    pub fn branches(&self) -> Vec<Vec<Complex64>> {
        let n = self.root_sets[0].len();
        (0..n)
            .map(|start| {
                let mut idx = start;
                let mut curve = vec![self.root_sets[0].elems()[idx]];
                for (m, set) in self.matchings.iter().zip(&self.root_sets[1..]) {
                    idx = m.apply(idx);
                    curve.push(set.elems()[idx]);
                }
                curve
            })
            .collect()
    }

    pub fn total_variation(&self) -> f64 {
        self.step_dfs.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackConfig {
    /// Bisection depth limit per initial step.
    pub max_depth: usize,
    pub solver: SolverConfig,
}

impl Default for TrackConfig {
    fn default() -> Self {
        Self {
            max_depth: 20,
            solver: SolverConfig::default(),
        }
    }
}

/// Tracks roots from `p` (`t = 0`) to `q` (`t = 1`) over `steps` uniform
/// steps.
///
/// A step from `t0` to `t1` is accepted when its `d_F` does not exceed
/// `4 A delta^(1/n)` with `A` taken from the polynomial at `t0` and
/// `delta = d_P(p_t0, p_t1)`; otherwise it is bisected.
pub fn track(p: &MonicPolynomial, q: &MonicPolynomial, steps: usize) -> Result<RootTrajectory> {
    track_with(p, q, steps, &TrackConfig::default())
}

pub fn track_with(
    p: &MonicPolynomial,
    q: &MonicPolynomial,
    steps: usize,
    cfg: &TrackConfig,
) -> Result<RootTrajectory> {
    poly_metric(p, q)?;
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be >= 1".into()));
    }

    let start = roots_with(p, &cfg.solver)?;
    if p == q {
        let n = start.len();
        return Ok(RootTrajectory {
            ts: vec![0.0, 1.0],
            root_sets: vec![start.clone(), start],
            matchings: vec![Permutation::identity(n)],
            step_dfs: vec![0.0],
        });
    }

    let mut tracker = Tracker {
        p,
        q,
        cfg,
        traj: RootTrajectory {
            ts: vec![0.0],
            root_sets: vec![start],
            matchings: Vec::new(),
            step_dfs: Vec::new(),
        },
    };
    for j in 1..=steps {
        let t1 = if j == steps { 1.0 } else { j as f64 / steps as f64 };
        tracker.advance(t1, 0)?;
    }
    Ok(tracker.traj)
}

struct Tracker<'a> {
    p: &'a MonicPolynomial,
    q: &'a MonicPolynomial,
    cfg: &'a TrackConfig,
    traj: RootTrajectory,
}

impl Tracker<'_> {
    fn at(&self, t: f64) -> Result<MonicPolynomial> {
        self.p.interpolate(self.q, t)
    }

    /// Extends the trajectory from its current end to `t1`.
    fn advance(&mut self, t1: f64, depth: usize) -> Result<()> {
        let t0 = *self.traj.ts.last().expect("non-empty");
        let p0 = self.at(t0)?;
        let p1 = self.at(t1)?;
        let roots1 = roots_with(&p1, &self.cfg.solver)?;
        let prev = self.traj.root_sets.last().expect("non-empty");
        let m = multiset_metric(prev, &roots1)?;

        let n = p0.degree() as f64;
        let threshold = 4.0 * rahman_schmeisser(&p0, &p1)?.a_cap * poly_metric(&p0, &p1)?.powf(1.0 / n);
        if m.value <= threshold {
            self.traj.ts.push(t1);
            self.traj.root_sets.push(roots1);
            self.traj.matchings.push(m.permutation);
            self.traj.step_dfs.push(m.value);
            return Ok(());
        }
        if depth >= self.cfg.max_depth {
            return Err(Error::DepthLimitExceeded { t0, t1 });
        }
        let mid = 0.5 * (t0 + t1);
        self.advance(mid, depth + 1)?;
        self.advance(t1, depth + 1)
    }
}
