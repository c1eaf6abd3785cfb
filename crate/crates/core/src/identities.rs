//! The verification registry: one executable check per closed-form result,
//! each pairing an independent analytic evaluation (quadrature, direct
//! summation, or accelerated summation) with the closed form it certifies.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use crate::constants::{CATALAN, EULER_GAMMA, FARHI_ETA, LN_GLAISHER, LN_TWO_PI};
use crate::error::Result;
use crate::fourier::{
    blagouchine_rhs, coeff_a_quad_with, coeff_b_quad_with, eta_fn_closed_with, farhi_rhs,
    kummer_rhs, logcos_series_closed, parseval_closed, partial_sum, shamov_ci_identity_with,
    FourierCoeffs,
};
use crate::quadrature::{integrate_to_with, integrate_with, Integrand, QuadResult};
use crate::reduce::map_collect;
use crate::series::sum_alternating;
use crate::specfun::{digamma, ln_gamma, negapolygamma, stieltjes_gamma1, zeta_prime_neg1};

const PI: f64 = std::f64::consts::PI;
const TWO_PI: f64 = std::f64::consts::TAU;

/// Inner quadrature tolerance; one-hundredth of the loosest identity
/// tolerance it feeds.
const QUAD_TOL: f64 = 1e-11;

fn lng(t: f64) -> f64 {
    ln_gamma(t).expect("argument stays positive")
}

fn psi(t: f64) -> f64 {
    digamma(t).expect("argument stays positive")
}

/// Run-time knobs shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunParams {
    /// Replaces each identity's own tolerance when set.
    pub tolerance_override: Option<f64>,
    /// Term budget handed to the summation engines.
    pub max_terms: u64,
    /// Evaluation budget handed to the quadrature engines.
    pub max_evals: u64,
}

impl Default for RunParams {
    fn default() -> Self {
        RunParams {
            tolerance_override: None,
            max_terms: crate::series::DEFAULT_MAX_TERMS,
            max_evals: crate::quadrature::DEFAULT_MAX_EVALS,
        }
    }
}

/// Value plus the work it took.
#[derive(Debug, Clone, Copy)]
pub struct Eval {
    pub value: f64,
    pub evaluations: u64,
}

impl From<f64> for Eval {
    fn from(value: f64) -> Self {
        Eval {
            value,
            evaluations: 1,
        }
    }
}

impl From<QuadResult> for Eval {
    fn from(q: QuadResult) -> Self {
        Eval {
            value: q.value,
            evaluations: q.evaluations,
        }
    }
}

/// Which engine produces the left-hand side. The right-hand side is the
/// closed form by construction; `ClosedForm` on the left marks the purely
/// algebraic checks that compare two closed arrangements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhsKind {
    Quadrature,
    DirectSum,
    AcceleratedSum,
    ClosedForm,
}

type EvalFn = Box<dyn Fn(f64, &RunParams) -> Result<Eval> + Send + Sync>;

/// One verifiable identity.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// One-line statement of the identity being checked.
    pub statement: &'static str,
    pub lhs_kind: LhsKind,
    pub tolerance: f64,
    /// Evaluation grid; `None` for scalar identities.
    pub grid: Option<Vec<f64>>,
    pub lhs: EvalFn,
    pub rhs: EvalFn,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("lhs_kind", &self.lhs_kind)
            .field("tolerance", &self.tolerance)
            .field("grid_points", &self.grid.as_ref().map(Vec::len))
            .finish()
    }
}

/// Outcome of one identity check. Gridded identities report the worst
/// grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub id: String,
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
    pub evaluations: u64,
    pub elapsed_ms: f64,
    /// Failure note when an evaluator errored instead of producing a value.
    pub error: Option<String>,
}

/// Outcome of a registry run; results ordered lexicographically by id.
#[derive(Debug, Clone)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub all_pass: bool,
    pub config_echo: ConfigEcho,
}

/// The configuration a report was produced under.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigEcho {
    pub selected_ids: Vec<String>,
    pub tolerance_override: Option<f64>,
    pub max_terms: u64,
    pub max_evals: u64,
}

/// Evaluates one identity, never panicking: evaluator errors and panics
/// become failed checks with an error note.
pub fn evaluate(spec: &IdentitySpec, params: &RunParams) -> CheckResult {
    let start = Instant::now();
    let tol = params.tolerance_override.unwrap_or(spec.tolerance);
    let scalar = [f64::NAN];
    let points: &[f64] = spec.grid.as_deref().unwrap_or(&scalar);

    let outcome = catch_unwind(AssertUnwindSafe(|| {
        map_collect(points.len(), |i| {
            let x = if points[i].is_nan() { 0.0 } else { points[i] };
            let l = (spec.lhs)(x, params)?;
            let r = (spec.rhs)(x, params)?;
            Ok::<(f64, f64, u64), crate::error::Error>((
                l.value,
                r.value,
                l.evaluations + r.evaluations,
            ))
        })
    }));

    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut result = CheckResult {
        id: spec.id.to_string(),
        lhs_value: f64::NAN,
        rhs_value: f64::NAN,
        abs_err: f64::NAN,
        rel_err: f64::NAN,
        pass: false,
        evaluations: 0,
        elapsed_ms,
        error: None,
    };

    let per_point = match outcome {
        Ok(v) => v,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            result.error = Some(format!("evaluator panicked: {msg}"));
            return result;
        }
    };

    let mut worst: Option<(f64, f64, f64)> = None;
    for point in per_point {
        match point {
            Ok((l, r, e)) => {
                result.evaluations += e;
                let d = (l - r).abs();
                let rank = if d.is_nan() { f64::INFINITY } else { d };
                let current = worst.map_or(f64::NEG_INFINITY, |(_, _, w)| {
                    if w.is_nan() {
                        f64::INFINITY
                    } else {
                        w
                    }
                });
                if rank > current {
                    worst = Some((l, r, d));
                }
            }
            Err(e) => {
                result.error = Some(e.to_string());
            }
        }
    }
    if let Some((l, r, d)) = worst {
        result.lhs_value = l;
        result.rhs_value = r;
        result.abs_err = d;
        let scale = l.abs().max(r.abs());
        result.rel_err = if scale > 0.0 { d / scale } else { 0.0 };
    }
    result.pass = result.error.is_none() && result.abs_err <= tol;
    result.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    result
}

/// Runs every spec and assembles a deterministic report ordered by id.
pub fn run_all(specs: &[IdentitySpec], params: &RunParams) -> Report {
    let mut results = map_collect(specs.len(), |i| evaluate(&specs[i], params));
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let all_pass = results.iter().all(|r| r.pass);
    Report {
        all_pass,
        config_echo: ConfigEcho {
            selected_ids: specs.iter().map(|s| s.id.to_string()).collect(),
            tolerance_override: params.tolerance_override,
            max_terms: params.max_terms,
            max_evals: params.max_evals,
        },
        results,
    }
}

// ---------------------------------------------------------------------------
// independent left-hand-side engines
// ---------------------------------------------------------------------------

/// Brute-force and Euler-Maclaurin summation routes used as the
/// non-closed-form side of several identities (and as acceptance oracles).
pub mod oracles {
    use super::{PI, TWO_PI};
    use crate::constants::FARHI_ETA;
    use crate::reduce::{compensated_sum, sum_range};
    use crate::series::SumResult;

    fn sincos_2pi(n: u64, x: f64) -> (f64, f64) {
        let m = n as f64 * x;
        let ang = TWO_PI * (m - m.floor());
        ang.sin_cos()
    }

    /// `sum_{n=2}^{N} ln n / n^2 cos(2 pi n x)` with the Abel-Dirichlet
    /// bound on the dropped oscillatory tail.
    pub fn logcos_brute(x: f64, n_terms: u64) -> SumResult {
        let value = sum_range(2, n_terms + 1, |n| {
            let nf = n as f64;
            nf.ln() / (nf * nf) * sincos_2pi(n, x).1
        });
        let w = (n_terms + 1) as f64;
        let tail_bound = w.ln() / (w * w - 1.0) / (PI * x).sin().abs();
        SumResult {
            value,
            tail_bound,
            terms_used: n_terms - 1,
        }
    }

    /// `sum_{n>=2} ln n / n^2` by direct summation with the analytic
    /// Euler-Maclaurin tail (not just a bound), accurate to ~1e-15 at
    /// 1e5 terms.
    pub fn glaisher_log_sum(n_terms: u64) -> f64 {
        let head = sum_range(2, n_terms + 1, |n| {
            let nf = n as f64;
            nf.ln() / (nf * nf)
        });
        let w = (n_terms + 1) as f64;
        let lw = w.ln();
        let integral = (lw + 1.0) / w;
        let half = lw / (2.0 * w * w);
        let fp = (1.0 - 2.0 * lw) / (w * w * w); // f'
        let fppp = (26.0 - 24.0 * lw) / (w * w * w * w * w); // f'''
        head + integral + half - fp / 12.0 + fppp / 720.0
    }

    /// `sum_n ln n / n sin(2 pi n / 3)`: the 3-periodic sine pattern pairs
    /// the surviving residues into `(sqrt 3 / 2) sum_m [ln(3m-2)/(3m-2)
    /// - ln(3m-1)/(3m-1)]`, summed directly with an analytic
    /// Euler-Maclaurin tail.
    pub fn log_sine_sum_third(m_terms: u64) -> f64 {
        let pair = |m: u64| {
            let nu = 3.0 * m as f64 - 2.0;
            nu.ln() / nu - (nu + 1.0).ln() / (nu + 1.0)
        };
        let head = sum_range(1, m_terms + 1, pair);
        let m1 = (m_terms + 1) as f64;
        let integral = {
            let hi = (3.0 * m1 - 1.0).ln();
            let lo = (3.0 * m1 - 2.0).ln();
            (hi * hi - lo * lo) / 6.0
        };
        let w_half = {
            let nu = 3.0 * m1 - 2.0;
            (nu.ln() / nu - (nu + 1.0).ln() / (nu + 1.0)) / 2.0
        };
        let w_prime = {
            let nu = 3.0 * m1 - 2.0;
            3.0 * ((1.0 - nu.ln()) / (nu * nu)
                - (1.0 - (nu + 1.0).ln()) / ((nu + 1.0) * (nu + 1.0)))
        };
        (3.0f64).sqrt() / 2.0 * (head + integral + w_half - w_prime / 12.0)
    }

    /// Coefficient side of the Parseval identity:
    /// `a0^2 + 1/2 sum a_k^2 + 1/2 sum b_k^2` accumulated to `k_max` with
    /// analytic Euler-Maclaurin tails for all three underlying sums.
    pub fn parseval_coefficient_side(k_max: u64) -> f64 {
        let a0 = 0.5 * crate::constants::LN_TWO_PI;
        let ak2 = sum_range(1, k_max + 1, |k| {
            let kf = k as f64;
            1.0 / (4.0 * kf * kf)
        });
        let bk2 = sum_range(1, k_max + 1, |k| {
            let kf = k as f64;
            let b = kf.ln() / (PI * kf) + FARHI_ETA / kf;
            b * b
        });
        let w = (k_max + 1) as f64;
        let lw = w.ln();
        // sum_{k>=w} 1/k^2 = 1/w + 1/(2w^2) + 1/(6w^3) - ...
        let t_inv2 = 1.0 / w + 1.0 / (2.0 * w * w) + 1.0 / (6.0 * w * w * w);
        // sum_{k>=w} ln k/k^2
        let t_ln = (lw + 1.0) / w + lw / (2.0 * w * w) + (2.0 * lw - 1.0) / (12.0 * w * w * w);
        // sum_{k>=w} ln^2 k/k^2
        let t_ln2 = (lw * lw + 2.0 * lw + 2.0) / w + lw * lw / (2.0 * w * w)
            + (lw * lw - lw) / (6.0 * w * w * w);
        let tail_a = 0.25 * t_inv2;
        let tail_b = t_ln2 / (PI * PI)
            + 2.0 * FARHI_ETA / PI * t_ln
            + FARHI_ETA * FARHI_ETA * t_inv2;
        let pieces = [a0 * a0, 0.5 * ak2, 0.5 * bk2, 0.5 * tail_a, 0.5 * tail_b];
        compensated_sum(pieces.into_iter())
    }
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

fn grid_interior() -> Vec<f64> {
    let mut g: Vec<f64> = (1..=33).map(|i| i as f64 / 34.0).collect();
    g.extend_from_slice(&[0.25, 1.0 / 3.0, 0.5, 0.75]);
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

fn grid_with_endpoints() -> Vec<f64> {
    let mut g = grid_interior();
    g.insert(0, 0.0);
    g.push(1.0);
    g
}

/// Reduced grid for the 1e7-term brute-force check.
const GRID_BRUTE: [f64; 9] = [0.1, 0.2, 0.25, 0.3, 1.0 / 3.0, 0.5, 0.7, 0.75, 0.9];

/// Brute-force term count for the log-cosine series check.
const BRUTE_TERMS: u64 = 10_000_000;

fn coeffs_million() -> &'static FourierCoeffs {
    static TABLE: OnceLock<FourierCoeffs> = OnceLock::new();
    TABLE.get_or_init(|| FourierCoeffs::closed_form(1_000_000))
}

fn quad_eval(q: Result<QuadResult>) -> Result<Eval> {
    q.map(Eval::from)
}

/// zeta'(-1, x) extended to x = 0 by its continuous value zeta'(-1, 1).
fn zp_extended(x: f64) -> Result<f64> {
    if x == 0.0 {
        zeta_prime_neg1(1.0)
    } else {
        zeta_prime_neg1(x)
    }
}

/// The alternating series `S = sum_m (-1)^(m+1) ln(2m-1)/(2m-1)`.
fn s_accelerated() -> Result<Eval> {
    let r = sum_alternating(
        |m| {
            let n = 2.0 * m as f64 - 1.0;
            n.ln() / n
        },
        1e-12,
    )?;
    Ok(Eval {
        value: r.value,
        evaluations: r.terms_used,
    })
}

/// Builds the full registry in its canonical order.
pub fn registry() -> Vec<IdentitySpec> {
    let mut specs: Vec<IdentitySpec> = Vec::with_capacity(26);

    specs.push(IdentitySpec {
        id: "L1",
        description: "Farhi constant: sine-weighted log-gamma moment",
        statement: "2 I[0,1] lnG(x) sin(2pi x) dx = (gamma + ln 2pi)/pi",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| 2.0 * lng(t) * (TWO_PI * t).sin())?
                .singular_lower();
            quad_eval(integrate_with(&f, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(FARHI_ETA))),
    });

    specs.push(IdentitySpec {
        id: "T2",
        description: "digamma sin^2 integral over (0,1)",
        statement: "I[0,1] psi(x) sin^2(pi x) dx = -(gamma + ln 2pi)/2",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| {
                let s = (PI * t).sin();
                psi(t) * s * s
            })?;
            quad_eval(integrate_with(&f, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(-(EULER_GAMMA + LN_TWO_PI) / 2.0))),
    });

    specs.push(IdentitySpec {
        id: "T3",
        description: "log-gamma sin(pi x) integral",
        statement: "I[0,1] lnG(x) sin(pi x) dx = (ln pi - ln 2 + 1)/pi",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| lng(t) * (PI * t).sin())?
                .singular_lower();
            quad_eval(integrate_with(&f, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from((PI.ln() - 2.0f64.ln() + 1.0) / PI))),
    });

    specs.push(IdentitySpec {
        id: "T4",
        description: "log-cosine series closed form (brute-force grid)",
        statement: "sum ln n/n^2 cos(2pi n x) = pi^2(x(1-x)-1/6)(gamma+ln 2pi-1) + pi Cl2(2pi x)/2 - 2pi^2 zeta'(-1,x)",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-8,
        grid: Some(GRID_BRUTE.to_vec()),
        lhs: Box::new(|x, p| {
            let n = BRUTE_TERMS.min(p.max_terms);
            let r = oracles::logcos_brute(x, n);
            Ok(Eval {
                value: r.value,
                evaluations: r.terms_used,
            })
        }),
        rhs: Box::new(|x, _| Ok(Eval::from(logcos_series_closed(x)?))),
    });

    specs.push(IdentitySpec {
        id: "R1",
        description: "alternating log sum at the half-period point",
        statement: "sum (-1)^n ln n/n^2 = pi^2/12 (gamma + ln 4pi - 12 ln A)",
        lhs_kind: LhsKind::AcceleratedSum,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, _| {
            let r = sum_alternating(
                |m| {
                    let mf = m as f64;
                    mf.ln() / (mf * mf)
                },
                1e-12,
            )?;
            Ok(Eval {
                value: -r.value,
                evaluations: r.terms_used,
            })
        }),
        rhs: Box::new(|_, _| {
            Ok(Eval::from(
                PI * PI / 12.0 * (EULER_GAMMA + (4.0 * PI).ln() - 12.0 * LN_GLAISHER),
            ))
        }),
    });

    specs.push(IdentitySpec {
        id: "C1",
        description: "reflection of zeta'(-1,x) against Cl2",
        statement: "zeta'(-1,x) - zeta'(-1,1-x) = Cl2(2pi x)/(2pi) on [0,1]",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-10,
        grid: Some(grid_with_endpoints()),
        lhs: Box::new(|x, _| {
            let v = zp_extended(x)? - zp_extended(1.0 - x)?;
            Ok(Eval::from(v))
        }),
        rhs: Box::new(|x, _| Ok(Eval::from(crate::specfun::clausen2(TWO_PI * x) / TWO_PI))),
    });

    specs.push(IdentitySpec {
        id: "R2",
        description: "quarter-point reflection gives Catalan's constant",
        statement: "zeta'(-1,1/4) - zeta'(-1,3/4) = G/(2pi)",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-10,
        grid: None,
        lhs: Box::new(|_, _| {
            Ok(Eval::from(zeta_prime_neg1(0.25)? - zeta_prime_neg1(0.75)?))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(CATALAN / TWO_PI))),
    });

    specs.push(IdentitySpec {
        id: "T5",
        description: "partial sine-moment eta(x): closed form vs quadrature",
        statement: "2 I[0,x] lnG(t) sin(2pi t) dt equals the eta(x) closed form",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: Some(grid_with_endpoints()),
        lhs: Box::new(|x, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| 2.0 * lng(t) * (TWO_PI * t).sin())?
                .singular_lower();
            quad_eval(integrate_to_with(&f, x, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|x, p| Ok(Eval::from(eta_fn_closed_with(x, 1e-11, p.max_terms)?))),
    });

    specs.push(IdentitySpec {
        id: "E12",
        description: "eta(1/2) special value",
        statement: "eta(1/2) = (gamma + ln 2pi + 2 ln pi + 1)/(2pi)",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| 2.0 * lng(t) * (TWO_PI * t).sin())?
                .singular_lower();
            quad_eval(integrate_to_with(&f, 0.5, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| {
            Ok(Eval::from(
                (EULER_GAMMA + LN_TWO_PI + 2.0 * PI.ln() + 1.0) / TWO_PI,
            ))
        }),
    });

    specs.push(IdentitySpec {
        id: "T6",
        description: "endpoint limits of eta(x): monotone approach in envelope",
        statement: "eta(x) -> 0 as x->0+ and eta(x) -> eta as x->1-, within explicit envelopes",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1.0,
        grid: None,
        lhs: Box::new(|_, p| {
            // worst gap/envelope ratio over both endpoint sequences,
            // plus 10 per monotonicity violation
            let seq = [1e-3, 1e-4, 1e-5];
            let slack = 2e-10;
            let mut worst: f64 = 0.0;
            let mut violations = 0u32;

            let mut prev = f64::INFINITY;
            for &x in &seq {
                let gap = eta_fn_closed_with(x, 1e-10, p.max_terms)?.abs();
                let envelope = 4.0 * PI * x * x * (-x.ln() + 1.0);
                worst = worst.max(gap / envelope);
                if gap > prev + slack {
                    violations += 1;
                }
                prev = gap;
            }

            let mut prev = f64::INFINITY;
            for &d in &seq {
                let gap = (eta_fn_closed_with(1.0 - d, 1e-10, p.max_terms)? - FARHI_ETA).abs();
                let envelope = 4.0 * PI * EULER_GAMMA * d * d * d + 5e-10;
                worst = worst.max(gap / envelope);
                if gap > prev + slack {
                    violations += 1;
                }
                prev = gap;
            }

            Ok(Eval {
                value: worst + 10.0 * violations as f64,
                evaluations: 6,
            })
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(0.0))),
    });

    specs.push(IdentitySpec {
        id: "T7",
        description: "partial digamma sin^2 integral vs eta(x)",
        statement: "I[0,x] psi sin^2(pi t) dt = lnG(x) sin^2(pi x) - (pi/2) eta(x)",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: Some({
            let mut g = grid_interior();
            g.push(1.0);
            g
        }),
        lhs: Box::new(|x, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| {
                let s = (PI * t).sin();
                psi(t) * s * s
            })?;
            quad_eval(integrate_to_with(&f, x, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|x, p| {
            let s = (PI * x).sin();
            let lg = if x == 1.0 { 0.0 } else { lng(x) };
            Ok(Eval::from(
                lg * s * s - 0.5 * PI * eta_fn_closed_with(x, 1e-11, p.max_terms)?,
            ))
        }),
    });

    specs.push(IdentitySpec {
        id: "C2",
        description: "half-interval digamma sin^2 integral",
        statement: "I[0,1/2] psi sin^2(pi t) dt = -(gamma + ln 2pi + 1)/4",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| {
                let s = (PI * t).sin();
                psi(t) * s * s
            })?;
            quad_eval(integrate_to_with(&f, 0.5, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(-(EULER_GAMMA + LN_TWO_PI + 1.0) / 4.0))),
    });

    specs.push(IdentitySpec {
        id: "F0",
        description: "mean of ln Gamma over (0,1)",
        statement: "I[0,1] lnG(t) dt = ln(2pi)/2",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            Ok(Eval {
                value: coeff_a_quad_with(0, QUAD_TOL, p.max_evals)?,
                evaluations: 1,
            })
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(0.5 * LN_TWO_PI))),
    });

    specs.push(IdentitySpec {
        id: "FA",
        description: "cosine coefficients by quadrature vs 1/(2k)",
        statement: "2 I[0,1] lnG(t) cos(2pi k t) dt = 1/(2k), k = 1..64",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: Some((1..=64).map(|k| k as f64).collect()),
        lhs: Box::new(|k, p| {
            Ok(Eval {
                value: coeff_a_quad_with(k as usize, QUAD_TOL, p.max_evals)?,
                evaluations: 1,
            })
        }),
        rhs: Box::new(|k, _| Ok(Eval::from(1.0 / (2.0 * k)))),
    });

    specs.push(IdentitySpec {
        id: "FB",
        description: "sine coefficients by quadrature vs ln k/(pi k) + eta/k",
        statement: "2 I[0,1] lnG(t) sin(2pi k t) dt = ln k/(pi k) + eta/k, k = 1..64",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: Some((1..=64).map(|k| k as f64).collect()),
        lhs: Box::new(|k, p| {
            Ok(Eval {
                value: coeff_b_quad_with(k as usize, QUAD_TOL, p.max_evals)?,
                evaluations: 1,
            })
        }),
        rhs: Box::new(|k, _| Ok(Eval::from(k.ln() / (PI * k) + FARHI_ETA / k))),
    });

    specs.push(IdentitySpec {
        id: "FS1",
        description: "pointwise Fourier convergence to ln Gamma",
        statement: "partial sum with 1e6 closed-form coefficients approaches lnG(x)",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 5e-4,
        grid: Some(vec![0.25, 1.0 / 3.0, 0.7]),
        lhs: Box::new(|x, _| {
            let coeffs = coeffs_million();
            Ok(Eval {
                value: partial_sum(x, coeffs.k_max, coeffs)?,
                evaluations: coeffs.k_max as u64,
            })
        }),
        rhs: Box::new(|x, _| Ok(Eval::from(lng(x)))),
    });

    specs.push(IdentitySpec {
        id: "K1",
        description: "two arrangements of the sine-series expansion agree",
        statement: "farhi_rhs(x, s) = kummer_rhs(x, s) for every x and s",
        lhs_kind: LhsKind::ClosedForm,
        tolerance: 1e-13,
        grid: Some(grid_interior()),
        lhs: Box::new(|x, _| Ok(Eval::from(farhi_rhs(x, 0.37)?))),
        rhs: Box::new(|x, _| Ok(Eval::from(kummer_rhs(x, 0.37)?))),
    });

    specs.push(IdentitySpec {
        id: "B1",
        description: "scaled log-sine series vs its closed form",
        statement: "sum ln(bn)/n sin(n phi) closed form at (b,phi) = (1,pi/2), (2,pi/2), (1,2pi/3)",
        lhs_kind: LhsKind::AcceleratedSum,
        tolerance: 1e-9,
        grid: Some(vec![0.0, 1.0, 2.0]),
        lhs: Box::new(|case, p| match case as usize {
            0 => s_accelerated(),
            1 => {
                let leibniz = sum_alternating(|m| 1.0 / (2.0 * m as f64 - 1.0), 1e-12)?;
                let s = s_accelerated()?;
                Ok(Eval {
                    value: 2.0f64.ln() * leibniz.value + s.value,
                    evaluations: leibniz.terms_used + s.evaluations,
                })
            }
            _ => {
                let m = 100_000u64.min(p.max_terms);
                Ok(Eval {
                    value: oracles::log_sine_sum_third(m),
                    evaluations: m,
                })
            }
        }),
        rhs: Box::new(|case, _| {
            let (b, phi) = match case as usize {
                0 => (1.0, 0.5 * PI),
                1 => (2.0, 0.5 * PI),
                _ => (1.0, 2.0 * PI / 3.0),
            };
            Ok(Eval::from(blagouchine_rhs(b, phi)?))
        }),
    });

    specs.push(IdentitySpec {
        id: "ST1",
        description: "difference of quarter-point Stieltjes constants",
        statement: "gamma1(1/4) - gamma1(3/4) = -pi[ln(8pi) + gamma - 2 ln(G(1/4)/G(3/4))]",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-8,
        grid: None,
        lhs: Box::new(|_, _| {
            Ok(Eval::from(
                stieltjes_gamma1(0.25)? - stieltjes_gamma1(0.75)?,
            ))
        }),
        rhs: Box::new(|_, _| {
            let lg = ln_gamma(0.25)? - ln_gamma(0.75)?;
            Ok(Eval::from(-PI * ((8.0 * PI).ln() + EULER_GAMMA - 2.0 * lg)))
        }),
    });

    specs.push(IdentitySpec {
        id: "X3",
        description: "third-point evaluation of the expansion",
        statement: "lnG(1/3) = sqrt3/(6pi)[gamma1(1/3)-gamma1(2/3)] + gamma/6 + (2/3)ln 2pi - ln3/12",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-8,
        grid: None,
        lhs: Box::new(|_, _| {
            let d = stieltjes_gamma1(1.0 / 3.0)? - stieltjes_gamma1(2.0 / 3.0)?;
            Ok(Eval::from(
                3.0f64.sqrt() / (6.0 * PI) * d + EULER_GAMMA / 6.0 + 2.0 / 3.0 * LN_TWO_PI
                    - 3.0f64.ln() / 12.0,
            ))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(ln_gamma(1.0 / 3.0)?))),
    });

    specs.push(IdentitySpec {
        id: "X4",
        description: "quarter-point evaluation of the expansion",
        statement: "lnG(1/4) = ln2/4 + ln(2pi)/2 + [pi eta + (gamma1(1/4)-gamma1(3/4))/pi]/4",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-8,
        grid: None,
        lhs: Box::new(|_, _| {
            let d = stieltjes_gamma1(0.25)? - stieltjes_gamma1(0.75)?;
            Ok(Eval::from(
                2.0f64.ln() / 4.0
                    + 0.5 * LN_TWO_PI
                    + 0.25 * ((EULER_GAMMA + LN_TWO_PI) + d / PI),
            ))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(ln_gamma(0.25)?))),
    });

    specs.push(IdentitySpec {
        id: "N1",
        description: "negapolygamma closed form vs direct quadrature",
        statement: "I[0,x] lnG(t) dt = x(1-x)/2 + (x/2)ln 2pi - zeta'(-1) + zeta'(-1,x)",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-9,
        grid: Some(grid_with_endpoints()),
        lhs: Box::new(|x, p| {
            let f = Integrand::new(0.0, 1.0, lng)?.singular_lower();
            quad_eval(integrate_to_with(&f, x, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|x, _| Ok(Eval::from(negapolygamma(x)?))),
    });

    specs.push(IdentitySpec {
        id: "G2",
        description: "logarithmic zeta sum in Glaisher form",
        statement: "sum ln n/n^2 = pi^2/6 (12 ln A - gamma - ln 2pi)",
        lhs_kind: LhsKind::DirectSum,
        tolerance: 1e-9,
        grid: None,
        lhs: Box::new(|_, p| {
            let n = 100_000u64.min(p.max_terms);
            Ok(Eval {
                value: oracles::glaisher_log_sum(n),
                evaluations: n,
            })
        }),
        rhs: Box::new(|_, _| {
            Ok(Eval::from(
                PI * PI / 6.0 * (12.0 * LN_GLAISHER - EULER_GAMMA - LN_TWO_PI),
            ))
        }),
    });

    specs.push(IdentitySpec {
        id: "P1",
        description: "squared log-gamma integral vs coefficient identity",
        statement: "I[0,1] ln^2 G(t) dt = 2 lnA(gamma+ln 2pi) - gamma^2/12 + pi^2/48 + ln(2pi)/6 (ln 2pi - gamma) + zeta''(2)/(2pi^2)",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-8,
        grid: None,
        lhs: Box::new(|_, p| {
            let f = Integrand::new(0.0, 1.0, |t: f64| {
                let l = lng(t);
                l * l
            })?
            .singular_lower();
            quad_eval(integrate_with(&f, QUAD_TOL, p.max_evals))
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(parseval_closed()))),
    });

    specs.push(IdentitySpec {
        id: "RK",
        description: "halving recurrences of the sine coefficients",
        statement: "b(2k) = b(k)/2 + ln2/(2pi k) and b(2^k) = ((ln2/pi)k + eta)/2^k on closed-form coefficients",
        lhs_kind: LhsKind::ClosedForm,
        tolerance: 1e-13,
        grid: None,
        lhs: Box::new(|_, _| {
            let c = FourierCoeffs::closed_form(1024);
            let mut worst: f64 = 0.0;
            for k in 1..=32usize {
                let kf = k as f64;
                let predicted = 0.5 * c.b(k) + 2.0f64.ln() / (TWO_PI * kf);
                worst = worst.max((c.b(2 * k) - predicted).abs());
            }
            for k in 0..=10u32 {
                let idx = 1usize << k;
                let predicted = ((2.0f64.ln() / PI) * k as f64 + FARHI_ETA) / (1u64 << k) as f64;
                worst = worst.max((c.b(idx) - predicted).abs());
            }
            Ok(Eval {
                value: worst,
                evaluations: 43,
            })
        }),
        rhs: Box::new(|_, _| Ok(Eval::from(0.0))),
    });

    specs.push(IdentitySpec {
        id: "SH1",
        description: "log-singularity model of the sine coefficients",
        statement: "2 I[0,1] sin(2pi k t) ln(1/t) dt = [gamma + ln(2pi k) - Ci(2pi k)]/(pi k), k in {1,4,16,64}",
        lhs_kind: LhsKind::Quadrature,
        tolerance: 1e-10,
        grid: Some(vec![1.0, 4.0, 16.0, 64.0]),
        lhs: Box::new(|k, p| {
            let (quad_side, _) = shamov_ci_identity_with(k as usize, QUAD_TOL, p.max_evals)?;
            Ok(Eval {
                value: quad_side,
                evaluations: 1,
            })
        }),
        rhs: Box::new(|k, p| {
            let (_, closed_side) = shamov_ci_identity_with(k as usize, QUAD_TOL, p.max_evals)?;
            Ok(Eval::from(closed_side))
        }),
    });

    specs
}

/// Looks up registry specs by id, preserving registry order; unknown ids
/// are returned as the error value.
pub fn select<'a>(
    specs: &'a [IdentitySpec],
    ids: &[String],
) -> std::result::Result<Vec<&'a IdentitySpec>, Vec<String>> {
    let unknown: Vec<String> = ids
        .iter()
        .filter(|id| !specs.iter().any(|s| s.id == id.as_str()))
        .cloned()
        .collect();
    if !unknown.is_empty() {
        return Err(unknown);
    }
    Ok(specs
        .iter()
        .filter(|s| ids.iter().any(|id| id == s.id))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_unique_and_complete() {
        let specs = registry();
        assert!(specs.len() >= 24, "got {}", specs.len());
        let mut ids: Vec<&str> = specs.iter().map(|s| s.id).collect();
        assert!(ids.contains(&"L1"));
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len(), "duplicate ids");
    }

    #[test]
    fn independence_audit() {
        // only the two algebraic checks may pit closed form against closed form
        for spec in registry() {
            if spec.lhs_kind == LhsKind::ClosedForm {
                assert!(
                    spec.id == "K1" || spec.id == "RK",
                    "{} declares a closed-form lhs",
                    spec.id
                );
            }
        }
    }

    #[test]
    fn select_rejects_unknown() {
        let specs = registry();
        let err = select(&specs, &["L1".into(), "NOPE".into()]).unwrap_err();
        assert_eq!(err, vec!["NOPE".to_string()]);
        let ok = select(&specs, &["T3".into(), "L1".into()]).unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok[0].id, "L1"); // registry order preserved
    }

    #[test]
    fn forced_failure_is_reported_not_panicked() {
        let spec = IdentitySpec {
            id: "ZZ",
            description: "forced failure",
            statement: "lhs = rhs + 1 never holds",
            lhs_kind: LhsKind::ClosedForm,
            tolerance: 1e-9,
            grid: None,
            lhs: Box::new(|_, _| Ok(Eval::from(2.0))),
            rhs: Box::new(|_, _| Ok(Eval::from(1.0))),
        };
        let r = evaluate(&spec, &RunParams::default());
        assert!(!r.pass);
        assert!((r.abs_err - 1.0).abs() < 1e-15);
        assert!(r.error.is_none());
    }
}
