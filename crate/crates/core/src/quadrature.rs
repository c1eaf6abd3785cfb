//! Definite integration with certified error estimates.
//!
//! Two engines behind one entry point: adaptive 15-point Gauss-Kronrod for
//! smooth integrands, and tanh-sinh (double exponential) when an endpoint is
//! flagged as logarithmically singular. Integrands are only ever evaluated
//! on the open interval; endpoints are never requested.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::reduce::{compensated_sum, map_collect};

const PI: f64 = std::f64::consts::PI;

/// Default evaluation budget per integration call.
pub const DEFAULT_MAX_EVALS: u64 = 2_000_000;

/// Hard cap on tanh-sinh refinement levels (step h = 2^-level).
const TANH_SINH_MAX_LEVEL: u32 = 12;

/// Smallest tolerance the engines accept.
pub const MIN_TOL: f64 = 1e-13;

/// Outcome of one integration run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: u64,
}

/// An integrand over (lower, upper) with optional logarithmic endpoint
/// singularities.
pub struct Integrand<F: Fn(f64) -> f64> {
    pub f: F,
    pub lower: f64,
    pub upper: f64,
    pub singular_lower: bool,
    pub singular_upper: bool,
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    pub fn new(lower: f64, upper: f64, f: F) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(Error::domain(format!(
                "integrand requires finite lower < upper, got [{lower}, {upper}]"
            )));
        }
        Ok(Integrand {
            f,
            lower,
            upper,
            singular_lower: false,
            singular_upper: false,
        })
    }

    pub fn singular_lower(mut self) -> Self {
        self.singular_lower = true;
        self
    }

    pub fn singular_upper(mut self) -> Self {
        self.singular_upper = true;
        self
    }
}

fn check_tol(tol: f64) -> Result<f64> {
    if !(tol >= MIN_TOL) {
        return Err(Error::domain(format!(
            "tolerance must be >= {MIN_TOL:e}, got {tol:e}"
        )));
    }
    Ok(tol)
}

/// Integrates `f` over its full interval to absolute tolerance `tol` with
/// the default evaluation budget.
pub fn integrate<F: Fn(f64) -> f64 + Sync>(f: &Integrand<F>, tol: f64) -> Result<QuadResult> {
    integrate_with(f, tol, DEFAULT_MAX_EVALS)
}

/// As [`integrate`] with an explicit evaluation budget.
pub fn integrate_with<F: Fn(f64) -> f64 + Sync>(
    f: &Integrand<F>,
    tol: f64,
    max_evals: u64,
) -> Result<QuadResult> {
    let tol = check_tol(tol)?;
    if f.singular_lower || f.singular_upper {
        tanh_sinh(&f.f, f.lower, f.upper, tol, max_evals)
    } else {
        adaptive_gk15(&f.f, f.lower, f.upper, tol, max_evals)
    }
}

/// Partial integral from `f.lower` to `x` under the same engine contract.
pub fn integrate_to<F: Fn(f64) -> f64 + Sync>(
    f: &Integrand<F>,
    x: f64,
    tol: f64,
) -> Result<QuadResult> {
    integrate_to_with(f, x, tol, DEFAULT_MAX_EVALS)
}

/// As [`integrate_to`] with an explicit evaluation budget.
pub fn integrate_to_with<F: Fn(f64) -> f64 + Sync>(
    f: &Integrand<F>,
    x: f64,
    tol: f64,
    max_evals: u64,
) -> Result<QuadResult> {
    let tol = check_tol(tol)?;
    if !(f.lower..=f.upper).contains(&x) {
        return Err(Error::domain(format!(
            "integrate_to target {x} outside [{}, {}]",
            f.lower, f.upper
        )));
    }
    if x == f.lower {
        return Ok(QuadResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    // the sub-interval keeps a lower singularity; an upper one only if x is
    // the original singular endpoint
    let upper_singular = f.singular_upper && x == f.upper;
    if f.singular_lower || upper_singular {
        tanh_sinh(&f.f, f.lower, x, tol, max_evals)
    } else {
        adaptive_gk15(&f.f, f.lower, x, tol, max_evals)
    }
}

// ---------------------------------------------------------------------------
// tanh-sinh (double exponential)
// ---------------------------------------------------------------------------

/// One abscissa of the rule: distance from the interval endpoint and weight.
#[derive(Clone, Copy)]
struct DeNode {
    /// offset of the node from the nearer endpoint, in [0, half-width)
    delta: f64,
    /// quadrature weight (before multiplication by h and half-width)
    weight: f64,
}

/// Computes the node at u: x = mid + half*tanh(v), v = (pi/2) sinh(u).
/// `delta = half*(1 - tanh v)` is formed from exponentials so that nodes
/// collapse onto the endpoint without cancellation.
fn de_node(u: f64, half: f64) -> DeNode {
    let v = 0.5 * PI * u.sinh();
    let e = (-2.0 * v).exp(); // v >= 0 here
    let delta = half * 2.0 * e / (1.0 + e);
    let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    DeNode {
        delta,
        weight: 0.5 * PI * u.cosh() * sech2,
    }
}

fn tanh_sinh<F: Fn(f64) -> f64 + Sync>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_evals: u64,
) -> Result<QuadResult> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);

    let mut evals: u64 = 0;
    let mut total = 0.0_f64; // h * sum of weighted values at current level
    let mut prev = f64::NAN;
    let mut err = f64::INFINITY;

    for level in 0..=TANH_SINH_MAX_LEVEL {
        let h = 0.5f64.powi(level as i32);
        // level 0 takes every node; later levels only the odd multiples of h
        let (start, step) = if level == 0 { (0u64, 1u64) } else { (1, 2) };

        let mut j_values = Vec::new();
        let mut j = start;
        loop {
            let u = j as f64 * h;
            let node = de_node(u, half);
            if node.delta == 0.0 || node.weight * half < 1e-308 {
                break;
            }
            j_values.push(j);
            j += step;
            if j > 10_000_000 {
                break;
            }
        }

        if evals + 2 * j_values.len() as u64 + 1 > max_evals {
            return Err(Error::QuadNonConvergence {
                err_estimate: err,
                tol,
                evaluations: evals,
            });
        }

        let contributions = map_collect(j_values.len(), |idx| {
            let u = j_values[idx] as f64 * h;
            let node = de_node(u, half);
            if j_values[idx] == 0 {
                node.weight * f(mid)
            } else {
                node.weight * (f(a + node.delta) + f(b - node.delta))
            }
        });
        evals += j_values
            .iter()
            .map(|&j| if j == 0 { 1 } else { 2 })
            .sum::<u64>();

        let new_sum = half * compensated_sum(contributions.into_iter());
        total = if level == 0 {
            h * new_sum
        } else {
            0.5 * total + h * new_sum
        };

        if level >= 2 {
            err = (total - prev).abs();
            if err <= tol {
                return Ok(QuadResult {
                    value: total,
                    err_estimate: err,
                    evaluations: evals,
                });
            }
        }
        prev = total;
    }

    Err(Error::QuadNonConvergence {
        err_estimate: err,
        tol,
        evaluations: evals,
    })
}

// ---------------------------------------------------------------------------
// adaptive Gauss-Kronrod 15
// ---------------------------------------------------------------------------

/// QUADPACK abscissae for the 15-point Kronrod rule on [-1, 1].
#[rustfmt::skip]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// 7-point Gauss weights.
#[rustfmt::skip]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// 15-point Kronrod weights.
#[rustfmt::skip]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 15-point Kronrod value and |K15 - G7| error estimate on [a, b].
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut res_gauss = fc * WG[3];
    let mut res_kronrod = fc * WGK[7];

    for j in 0..3 {
        let jtw = 2 * j + 1;
        let x = half * XGK[jtw];
        let fsum = f(center - x) + f(center + x);
        res_gauss += WG[j] * fsum;
        res_kronrod += WGK[jtw] * fsum;
    }
    for j in 0..4 {
        let jtw = 2 * j;
        let x = half * XGK[jtw];
        let fsum = f(center - x) + f(center + x);
        res_kronrod += WGK[jtw] * fsum;
    }

    (res_kronrod * half, ((res_kronrod - res_gauss) * half).abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then(self.a.total_cmp(&other.a))
    }
}

fn adaptive_gk15<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_evals: u64,
) -> Result<QuadResult> {
    let mut heap = BinaryHeap::new();
    let (v, e) = qk15(f, a, b);
    let mut evals: u64 = 15;
    let mut total_err = e;
    heap.push(Panel {
        a,
        b,
        value: v,
        err: e,
    });

    while total_err > tol {
        if evals + 30 > max_evals {
            return Err(Error::QuadNonConvergence {
                err_estimate: total_err,
                tol,
                evaluations: evals,
            });
        }
        let worst = heap.pop().expect("heap never empty");
        let m = 0.5 * (worst.a + worst.b);
        let (vl, el) = qk15(f, worst.a, m);
        let (vr, er) = qk15(f, m, worst.b);
        evals += 30;
        total_err += el + er - worst.err;
        heap.push(Panel {
            a: worst.a,
            b: m,
            value: vl,
            err: el,
        });
        heap.push(Panel {
            a: m,
            b: worst.b,
            value: vr,
            err: er,
        });
    }

    // deterministic assembly: sum panels in interval order
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = compensated_sum(panels.iter().map(|p| p.value));
    let err = compensated_sum(panels.iter().map(|p| p.err));
    Ok(QuadResult {
        value,
        err_estimate: err,
        evaluations: evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_interval() {
        assert!(Integrand::new(1.0, 0.0, |x: f64| x).is_err());
        assert!(Integrand::new(0.0, f64::INFINITY, |x: f64| x).is_err());
    }

    #[test]
    fn rejects_too_small_tolerance() {
        let f = Integrand::new(0.0, 1.0, |x: f64| x).unwrap();
        assert!(integrate(&f, 1e-14).is_err());
    }

    #[test]
    fn sin_pi_x_over_unit_interval() {
        let f = Integrand::new(0.0, 1.0, |x: f64| (PI * x).sin()).unwrap();
        let r = integrate(&f, 1e-12).unwrap();
        assert!((r.value - 2.0 / PI).abs() < 1e-13, "got {}", r.value);
        assert!(r.evaluations > 0);
    }

    #[test]
    fn log_singularity_integrates_to_minus_one() {
        let f = Integrand::new(0.0, 1.0, |x: f64| x.ln())
            .unwrap()
            .singular_lower();
        let r = integrate(&f, 1e-13).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12, "got {}", r.value);
    }

    #[test]
    fn integrate_to_empty_interval() {
        let f = Integrand::new(0.0, 1.0, |x: f64| x).unwrap();
        let r = integrate_to(&f, 0.0, 1e-10).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.err_estimate, 0.0);
    }

    #[test]
    fn integrate_to_rejects_outside_range() {
        let f = Integrand::new(0.0, 1.0, |x: f64| x).unwrap();
        assert!(integrate_to(&f, 1.5, 1e-10).is_err());
        assert!(integrate_to(&f, -0.1, 1e-10).is_err());
    }

    #[test]
    fn nonconvergence_reports_budget() {
        // need the budget error, so strangle the evaluation allowance
        let f = Integrand::new(0.0, 1.0, |x: f64| (1e4 * x).sin() / (x + 1e-4)).unwrap();
        match integrate_with(&f, 1e-13, 200) {
            Err(Error::QuadNonConvergence { evaluations, .. }) => assert!(evaluations <= 200),
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn kronrod_exact_for_degree_21() {
        // single qk15 panel integrates x^21 on [0,1] to ~1e-15 relative
        let f = Integrand::new(0.0, 1.0, |x: f64| x.powi(21)).unwrap();
        let r = integrate(&f, 1e-13).unwrap();
        let truth = 1.0 / 22.0;
        assert!(
            ((r.value - truth) / truth).abs() < 1e-14,
            "rel err {}",
            ((r.value - truth) / truth).abs()
        );
    }
}
