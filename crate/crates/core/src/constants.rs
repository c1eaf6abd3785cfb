//! Certified numeric constants.
//!
//! Decimal literals carry 17 significant digits, enough to pin the nearest
//! f64. `FARHI_ETA` is the closed form `(gamma + ln 2pi)/pi`; the quadrature
//! route to the same number is exercised by the identity registry, never
//! used as a source of truth here.

/// Euler-Mascheroni constant, limit of `H_n - ln n`.
pub const EULER_GAMMA: f64 = 0.57721566490153286;

/// `ln(2 pi)`.
pub const LN_TWO_PI: f64 = 1.8378770664093455;

/// `ln A`, where `A` is the Glaisher-Kinkelin constant. Tied to the Hurwitz
/// zeta derivative by `zeta'(-1) = 1/12 - ln A`.
pub const LN_GLAISHER: f64 = 0.24875447703378426;

/// Catalan constant `G = sum (-1)^n/(2n+1)^2`.
pub const CATALAN: f64 = 0.91596559417721901;

/// Farhi constant `eta = 2 int_0^1 ln Gamma(x) sin(2 pi x) dx`,
/// equal to `(gamma + ln 2pi)/pi`.
pub const FARHI_ETA: f64 = 0.76874789242686583;

/// `zeta'(-1) = 1/12 - ln A`.
pub const ZETA_PRIME_NEG1: f64 = 1.0 / 12.0 - LN_GLAISHER;

/// Riemann `zeta(3)` (Apery constant), used as a reference value in tests.
pub const ZETA3: f64 = 1.2020569031595943;

/// Scalar constants bundled for callers that want one handle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    pub ln_two_pi: f64,
    pub ln_glaisher: f64,
    pub catalan: f64,
    pub farhi_eta: f64,
    pub pi: f64,
}

/// The one set of constants used throughout the crate.
pub const CONSTANTS: Constants = Constants {
    euler_gamma: EULER_GAMMA,
    ln_two_pi: LN_TWO_PI,
    ln_glaisher: LN_GLAISHER,
    catalan: CATALAN,
    farhi_eta: FARHI_ETA,
    pi: std::f64::consts::PI,
};

/// `zeta(2m)` for `m = 1..=28`, indexed `ZETA_EVEN[m - 1]`.
///
/// Feeds the Clausen-function expansion; beyond `m = 28` the values are 1.0
/// to f64 precision.
pub const ZETA_EVEN: [f64; 28] = [
    1.6449340668482264,
    1.0823232337111382,
    1.0173430619844491,
    1.0040773561979443,
    1.0009945751278181,
    1.0002460865533080,
    1.0000612481350587,
    1.0000152822594087,
    1.0000038172932650,
    1.0000009539620338,
    1.0000002384505027,
    1.0000000596081891,
    1.0000000149015548,
    1.0000000037253340,
    1.0000000009313274,
    1.0000000002328312,
    1.0000000000582077,
    1.0000000000145519,
    1.0000000000036380,
    1.0000000000009095,
    1.0000000000002274,
    1.0000000000000568,
    1.0000000000000142,
    1.0000000000000036,
    1.0000000000000009,
    1.0000000000000002,
    1.0000000000000001,
    1.0000000000000000,
];

/// `B_{2k}/(2k)!` for `k = 1..=12` (Euler-Maclaurin corrections through B24).
pub const BERNOULLI_OVER_FACTORIAL: [f64; 12] = [
    8.3333333333333333e-2,
    -1.3888888888888889e-3,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
];

/// `B_{2k}/((2k)(2k-1))` for `k = 1..=9` (Stirling series for ln Gamma).
pub const STIRLING_COEFFS: [f64; 9] = [
    8.3333333333333333e-2,
    -2.7777777777777778e-3,
    7.9365079365079365e-4,
    -5.9523809523809524e-4,
    8.4175084175084175e-4,
    -1.9175269175269175e-3,
    6.4102564102564103e-3,
    -2.9550653594771242e-2,
    1.7964437236883057e-1,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn farhi_eta_matches_closed_form() {
        // within one ulp of (gamma + ln 2pi)/pi evaluated in f64
        let computed = (EULER_GAMMA + LN_TWO_PI) / std::f64::consts::PI;
        assert!((FARHI_ETA - computed).abs() <= f64::EPSILON);
    }

    #[test]
    fn zeta_even_is_decreasing_to_one() {
        // strictly decreasing until the values collapse onto 1.0 in f64
        for w in ZETA_EVEN.windows(2) {
            assert!(w[0] >= w[1]);
            if w[1] > 1.0 {
                assert!(w[0] > w[1]);
            }
        }
        assert!(*ZETA_EVEN.last().unwrap() >= 1.0);
    }
}
