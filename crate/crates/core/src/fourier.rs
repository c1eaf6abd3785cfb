//! Fourier expansion machinery for ln Gamma on (0, 1): closed-form and
//! quadrature coefficients, partial sums, the eta(x) family, the log-cosine
//! series closed form, and the Parseval value.

use crate::constants::{CATALAN, EULER_GAMMA, FARHI_ETA, LN_TWO_PI};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_with, Integrand, DEFAULT_MAX_EVALS};
use crate::reduce::{compensated_sum, map_collect};
use crate::series::{sum_with_tail_bounded, DEFAULT_MAX_TERMS};
use crate::specfun::{clausen2, cosine_integral, ln_gamma, zeta_dds, zeta_prime_neg1};

const PI: f64 = std::f64::consts::PI;
const TWO_PI: f64 = std::f64::consts::TAU;

/// Direct sin/cos calls are replaced by an angle-addition recurrence inside
/// each block of this many terms; every block boundary re-synchronizes
/// against a direct evaluation to cap phase drift.
const TRIG_RESYNC: usize = 1 << 15;

fn lng(t: f64) -> f64 {
    ln_gamma(t).expect("argument stays inside (0, infinity)")
}

/// `sin(2 pi n x)` and `cos(2 pi n x)` with the angle reduced mod 1 before
/// scaling, so huge `n x` never reaches the trig routines.
fn sincos_2pi(n: u64, x: f64) -> (f64, f64) {
    let m = n as f64 * x;
    let ang = TWO_PI * (m - m.floor());
    ang.sin_cos()
}

/// Fourier coefficients of ln Gamma on (0, 1): `a0 + sum a_k cos(2 pi k x)
/// + sum b_k sin(2 pi k x)`.
#[derive(Debug, Clone)]
pub struct FourierCoeffs {
    pub a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
    pub k_max: usize,
}

impl FourierCoeffs {
    /// Closed-form coefficients: `a0 = ln(2 pi)/2`, `a_k = 1/(2k)`,
    /// `b_k = ln k/(pi k) + eta/k`.
    pub fn closed_form(k_max: usize) -> Self {
        let a = map_collect(k_max, |i| 1.0 / (2.0 * (i + 1) as f64));
        let b = map_collect(k_max, |i| {
            let k = (i + 1) as f64;
            k.ln() / (PI * k) + FARHI_ETA / k
        });
        FourierCoeffs {
            a0: 0.5 * LN_TWO_PI,
            a,
            b,
            k_max,
        }
    }

    /// Cosine coefficient `a_k`, 1-indexed.
    pub fn a(&self, k: usize) -> f64 {
        self.a[k - 1]
    }

    /// Sine coefficient `b_k`, 1-indexed.
    pub fn b(&self, k: usize) -> f64 {
        self.b[k - 1]
    }
}

/// k-th cosine coefficient of ln Gamma by quadrature: `2 int_0^1 ln Gamma(t)
/// cos(2 pi k t) dt` for `k >= 1`, the plain mean for `k = 0`.
pub fn coeff_a_quad(k: usize, tol: f64) -> Result<f64> {
    coeff_a_quad_with(k, tol, DEFAULT_MAX_EVALS)
}

pub fn coeff_a_quad_with(k: usize, tol: f64, max_evals: u64) -> Result<f64> {
    let kf = k as f64;
    let f = Integrand::new(0.0, 1.0, move |t: f64| lng(t) * (TWO_PI * kf * t).cos())?
        .singular_lower();
    let r = integrate_with(&f, tol, max_evals)?;
    Ok(if k == 0 { r.value } else { 2.0 * r.value })
}

/// k-th sine coefficient `eta_k = 2 int_0^1 ln Gamma(t) sin(2 pi k t) dt`
/// by quadrature, `k >= 1`.
pub fn coeff_b_quad(k: usize, tol: f64) -> Result<f64> {
    coeff_b_quad_with(k, tol, DEFAULT_MAX_EVALS)
}

pub fn coeff_b_quad_with(k: usize, tol: f64, max_evals: u64) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("coeff_b_quad requires k >= 1"));
    }
    let kf = k as f64;
    let f = Integrand::new(0.0, 1.0, move |t: f64| lng(t) * (TWO_PI * kf * t).sin())?
        .singular_lower();
    let r = integrate_with(&f, tol, max_evals)?;
    Ok(2.0 * r.value)
}

/// Partial Fourier sum `a0 + sum_{k<=n} a_k cos(2 pi k x) + b_k sin(2 pi k x)`.
pub fn partial_sum(x: f64, n_terms: usize, coeffs: &FourierCoeffs) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!(
            "partial_sum requires 0 < x < 1, got {x}"
        )));
    }
    if n_terms > coeffs.k_max {
        return Err(Error::Index(format!(
            "partial_sum asked for {n_terms} terms but the table holds {}",
            coeffs.k_max
        )));
    }
    let (sd, cd) = (TWO_PI * x).sin_cos();
    let n_blocks = n_terms.div_ceil(TRIG_RESYNC);
    let partials = map_collect(n_blocks, |bi| {
        let k0 = bi * TRIG_RESYNC + 1;
        let k1 = ((bi + 1) * TRIG_RESYNC).min(n_terms);
        let (mut s, mut c) = sincos_2pi(k0 as u64, x);
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        for k in k0..=k1 {
            let term = coeffs.a[k - 1] * c + coeffs.b[k - 1] * s;
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
            let ns = s * cd + c * sd;
            let nc = c * cd - s * sd;
            s = ns;
            c = nc;
        }
        sum + comp
    });
    Ok(coeffs.a0 + compensated_sum(partials.into_iter()))
}

/// Right-hand side of the sine-series expansion of ln Gamma:
/// `ln pi / 2 + pi eta (1/2 - x) - ln sin(pi x) / 2 + series_value / pi`.
///
/// `series_value` must be an externally certified value of
/// `sum ln n / n sin(2 pi n x)`; the conditionally convergent series is
/// never summed here.
pub fn farhi_rhs(x: f64, series_value: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!(
            "farhi_rhs requires 0 < x < 1, got {x}"
        )));
    }
    Ok(0.5 * PI.ln() + PI * FARHI_ETA * (0.5 - x) - 0.5 * (PI * x).sin().ln()
        + series_value / PI)
}

/// The same expansion in its classical arrangement:
/// `ln(pi / sin(pi x)) / 2 + (1/2 - x)(gamma + ln 2pi) + series_value / pi`.
pub fn kummer_rhs(x: f64, series_value: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!(
            "kummer_rhs requires 0 < x < 1, got {x}"
        )));
    }
    Ok(0.5 * (PI / (PI * x).sin()).ln() + (0.5 - x) * (EULER_GAMMA + LN_TWO_PI)
        + series_value / PI)
}

/// Closed form of `sum_n ln(b n)/n sin(n phi)` for `b > 0`, `phi` in (0, 2pi):
/// `pi ln Gamma(phi/2pi) + (pi/2) ln sin(phi/2) - (pi/2) ln pi
///  + ((phi - pi)/2)(gamma + ln(2 pi / b))`.
pub fn blagouchine_rhs(b: f64, phi: f64) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::domain(format!(
            "blagouchine_rhs requires b > 0, got {b}"
        )));
    }
    if !(phi > 0.0 && phi < TWO_PI) {
        return Err(Error::domain(format!(
            "blagouchine_rhs requires 0 < phi < 2 pi, got {phi}"
        )));
    }
    let lg = ln_gamma(phi / TWO_PI)?;
    Ok(PI * lg + 0.5 * PI * (0.5 * phi).sin().ln() - 0.5 * PI * PI.ln()
        + 0.5 * (phi - PI) * (EULER_GAMMA + (TWO_PI / b).ln()))
}

/// eta(x) = 2 int_0^x ln Gamma(t) sin(2 pi t) dt through its closed form:
/// a constants block, a sin^2(theta/2) log block, and two absolutely
/// convergent series, with theta = 2 pi x. Endpoints take their continuous
/// extensions eta(0) = 0 and eta(1) = eta.
pub fn eta_fn_closed(x: f64, tol: f64) -> Result<f64> {
    eta_fn_closed_with(x, tol, DEFAULT_MAX_TERMS)
}

pub fn eta_fn_closed_with(x: f64, tol: f64, max_terms: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "eta_fn_closed requires 0 <= x <= 1, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(FARHI_ETA);
    }
    let theta = TWO_PI * x;
    let sh = (PI * x).sin(); // sin(theta/2)
    let (sin_t, cos_t) = theta.sin_cos();

    let constants_block = FARHI_ETA * (sh * sh + (theta * cos_t - sin_t) / TWO_PI);
    let log_block = sh * sh / TWO_PI * (1.0 + 2.0 * (PI / sh).ln());

    // both series tolerances leave headroom for the 1/pi^2 prefactors
    let tol_series = 3.0 * tol;

    // sum_{n>=2} ln n / (n (n^2 - 1)) sin(n theta)
    let c1 = |n: f64| n.ln() / (n * (n * n - 1.0));
    let s1 = sum_with_tail_bounded(
        2,
        |n| {
            let nf = n as f64;
            c1(nf) * sincos_2pi(n, x).0
        },
        |n| {
            let nf = n as f64;
            let envelope = (2.0 * nf.ln() + 1.0) / (3.0 * nf * nf);
            let dirichlet = c1(nf + 1.0) / sh;
            envelope.min(dirichlet)
        },
        tol_series,
        max_terms,
    )?;

    // sum_{n>=2} ln n / (n^2 - 1) cos(n theta)
    let c2 = |n: f64| n.ln() / (n * n - 1.0);
    let s2 = sum_with_tail_bounded(
        2,
        |n| {
            let nf = n as f64;
            c2(nf) * sincos_2pi(n, x).1
        },
        |n| {
            let nf = n as f64;
            let envelope = 4.0 / 3.0 * (nf.ln() + 1.0) / nf;
            let dirichlet = c2(nf + 1.0) / sh;
            envelope.min(dirichlet)
        },
        tol_series,
        max_terms,
    )?;

    Ok(constants_block + log_block + cos_t / (PI * PI) * s1.value
        - sin_t / (PI * PI) * s2.value)
}

/// Closed form of `sum_{n>=1} ln n / n^2 cos(2 pi n x)` on (0, 1):
/// `pi^2 (x(1-x) - 1/6)(gamma + ln 2pi - 1) + (pi/2) Cl2(2 pi x)
///  - 2 pi^2 zeta'(-1, x)`.
pub fn logcos_series_closed(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!(
            "logcos_series_closed requires 0 < x < 1, got {x}"
        )));
    }
    let zp = zeta_prime_neg1(x)?;
    Ok(PI * PI * (x * (1.0 - x) - 1.0 / 6.0) * (EULER_GAMMA + LN_TWO_PI - 1.0)
        + 0.5 * PI * clausen2(TWO_PI * x)
        - 2.0 * PI * PI * zp)
}

/// `int_0^1 ln^2 Gamma(t) dt` through the coefficient identity:
/// `2 ln A (gamma + ln 2pi) - gamma^2/12 + pi^2/48
///  + (ln 2pi / 6)(ln 2pi - gamma) + zeta''(2)/(2 pi^2)`.
pub fn parseval_closed() -> f64 {
    let zdd2 = zeta_dds(2.0).expect("2 > 1");
    2.0 * crate::constants::LN_GLAISHER * (EULER_GAMMA + LN_TWO_PI)
        - EULER_GAMMA * EULER_GAMMA / 12.0
        + PI * PI / 48.0
        + LN_TWO_PI / 6.0 * (LN_TWO_PI - EULER_GAMMA)
        + zdd2 / (2.0 * PI * PI)
}

/// The large-k model of the sine coefficients: the pair
/// `(2 int_0^1 sin(2 pi k t) ln(1/t) dt, [gamma + ln(2 pi k) - Ci(2 pi k)]/(pi k))`,
/// evaluated by quadrature and by the cosine integral respectively. The two
/// routes are exactly equal; each serves as the other's check.
pub fn shamov_ci_identity(k: usize, tol: f64) -> Result<(f64, f64)> {
    shamov_ci_identity_with(k, tol, DEFAULT_MAX_EVALS)
}

pub fn shamov_ci_identity_with(k: usize, tol: f64, max_evals: u64) -> Result<(f64, f64)> {
    if k == 0 {
        return Err(Error::domain("shamov_ci_identity requires k >= 1"));
    }
    let kf = k as f64;
    let f = Integrand::new(0.0, 1.0, move |t: f64| {
        (TWO_PI * kf * t).sin() * t.recip().ln()
    })?
    .singular_lower();
    let quad_side = 2.0 * integrate_with(&f, tol, max_evals)?.value;
    let ci = cosine_integral(TWO_PI * kf)?;
    let closed_side = (EULER_GAMMA + (TWO_PI * kf).ln() - ci) / (PI * kf);
    Ok((quad_side, closed_side))
}

/// The x = 1/4 reduction target of the log-cosine closed form, used by the
/// verification registry: Cl2(pi/2) = G there.
pub fn catalan_quarter_value() -> f64 {
    CATALAN / TWO_PI
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_coefficients() {
        let c = FourierCoeffs::closed_form(16);
        assert!((c.a0 - 0.5 * LN_TWO_PI).abs() < 1e-15);
        assert_eq!(c.a(1), 0.5);
        assert_eq!(c.a(4), 0.125);
        for k in 1..=16usize {
            let kf = k as f64;
            assert!((c.b(k) - (kf.ln() / (PI * kf) + FARHI_ETA / kf)).abs() < 1e-16);
        }
    }

    #[test]
    fn partial_sum_n0_is_a0() {
        let c = FourierCoeffs::closed_form(4);
        let v = partial_sum(0.3, 0, &c).unwrap();
        assert_eq!(v, c.a0);
    }

    #[test]
    fn partial_sum_rejects_bad_input() {
        let c = FourierCoeffs::closed_form(4);
        assert!(partial_sum(0.0, 2, &c).is_err());
        assert!(partial_sum(1.0, 2, &c).is_err());
        assert!(matches!(partial_sum(0.5, 5, &c), Err(Error::Index(_))));
    }

    #[test]
    fn rhs_forms_domain_checks() {
        assert!(farhi_rhs(0.0, 0.0).is_err());
        assert!(kummer_rhs(1.0, 0.0).is_err());
        assert!(blagouchine_rhs(0.0, 1.0).is_err());
        assert!(blagouchine_rhs(1.0, 0.0).is_err());
        assert!(blagouchine_rhs(1.0, TWO_PI).is_err());
    }

    #[test]
    fn farhi_rhs_at_half_with_zero_series() {
        let v = farhi_rhs(0.5, 0.0).unwrap();
        assert!((v - 0.5 * PI.ln()).abs() < 1e-15);
        let w = kummer_rhs(0.5, 0.0).unwrap();
        assert!((w - 0.5 * PI.ln()).abs() < 1e-15);
    }

    #[test]
    fn eta_fn_closed_endpoints() {
        assert_eq!(eta_fn_closed(0.0, 1e-11).unwrap(), 0.0);
        assert_eq!(eta_fn_closed(1.0, 1e-11).unwrap(), FARHI_ETA);
        assert!(eta_fn_closed(-0.1, 1e-11).is_err());
        assert!(eta_fn_closed(1.1, 1e-11).is_err());
    }

    #[test]
    fn eta_fn_closed_at_half() {
        let v = eta_fn_closed(0.5, 1e-12).unwrap();
        let truth = (EULER_GAMMA + LN_TWO_PI + 2.0 * PI.ln() + 1.0) / TWO_PI;
        assert!((v - truth).abs() < 1e-12, "err {}", (v - truth).abs());
    }

    #[test]
    fn logcos_domain() {
        assert!(logcos_series_closed(0.0).is_err());
        assert!(logcos_series_closed(1.0).is_err());
    }

    #[test]
    fn blagouchine_reduces_to_sine_series_form_at_b1() {
        // with b = 1 and phi = 2 pi x the closed form equals
        // pi * (series value implied by kummer_rhs)
        for &x in &[0.21, 0.5, 0.83] {
            let lhs = blagouchine_rhs(1.0, TWO_PI * x).unwrap();
            let series = PI
                * (lng(x)
                    - 0.5 * (PI / (PI * x).sin()).ln()
                    - (0.5 - x) * (EULER_GAMMA + LN_TWO_PI));
            assert!((lhs - series).abs() < 1e-12, "x={x}");
        }
    }
}
