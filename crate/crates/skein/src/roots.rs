//! Numeric verification, at roots of unity, of the identities that make the
//! cable expansions work.
//!
//! Everything here evaluates at `A = exp(i*pi / (2(r+1)))` for an integer
//! level `r >= 1`, where the quantum integer `[m]` becomes the sine ratio
//! `sin(m*pi/(r+1)) / sin(pi/(r+1))`. The central object is the annular
//! element `omega_r = sum of (-1)^t [t+1] e_t` over `0 <= t < r`, which
//! pairs to zero against every `e_m` with `0 < m <= r` and so behaves like
//! a handle-slide absorber at the root.
//!
//! Each check computes both sides of one identity independently and reports
//! a pass flag plus the numeric residual. Bounded sums are held to an
//! absolute tolerance of `1e-9`; the swap-symmetry and cosh-delta checks
//! compare totals that can grow with `r`, so they use a relative tolerance
//! of `1e-6` with the denominator floored at 1.

use crate::algebra::SkeinElement;
use crate::cable::{expansion_coefficient, torus_knot_jones, CableError};
use crate::laurent::{ComplexValue, LaurentError, LaurentPoly};
use std::f64::consts::PI;

/// Absolute tolerance for bounded root-of-unity sums.
pub const ABSOLUTE_TOLERANCE: f64 = 1e-9;
/// Relative tolerance for the checks whose totals grow with `r`.
pub const RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootsError {
    #[error("level r must be at least 1, got {0}")]
    BadLevel(i64),
    #[error("color must be nonnegative, got {0}")]
    NegativeColor(i64),
    #[error("annihilation needs 0 < m < r, got m={m} at r={r}")]
    AnnihilationRange { m: i64, r: i64 },
    #[error("check needs every color in play at most r: l={l} plus expansion support {support} exceeds r={r}")]
    ColorRange { l: i64, support: i64, r: i64 },
    #[error("slope ({p}, {q}) is neither a torus slope with p >= 1 nor the meridian (0, 1)")]
    UnsupportedSlope { p: i64, q: i64 },
    #[error("r+1 = {0} must be prime here")]
    CompositeOrder(i64),
    #[error("{what} = {value} must not be divisible by r+1 = {order}")]
    DivisibleArgument {
        what: &'static str,
        value: i64,
        order: i64,
    },
    #[error("a parity pair needs an even function first and an odd one second")]
    WrongParity,
    #[error(transparent)]
    Cable(#[from] CableError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// The outcome of one numeric identity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckResult {
    pub pass: bool,
    pub residual: f64,
}

impl CheckResult {
    fn absolute(difference: f64) -> Self {
        CheckResult {
            pass: difference < ABSOLUTE_TOLERANCE,
            residual: difference,
        }
    }

    fn relative(difference: f64, lhs: f64, rhs: f64) -> Self {
        let residual = difference / lhs.abs().max(rhs.abs()).max(1.0);
        CheckResult {
            pass: residual < RELATIVE_TOLERANCE,
            residual,
        }
    }
}

/// Evaluation level: fixes the root `A = exp(i*pi / (2(r+1)))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootContext {
    r: u32,
}

impl RootContext {
    pub fn new(r: i64) -> Result<Self, RootsError> {
        if !(1..=1_000_000).contains(&r) {
            return Err(RootsError::BadLevel(r));
        }
        Ok(RootContext { r: r as u32 })
    }

    pub fn r(&self) -> i64 {
        i64::from(self.r)
    }

    /// The root itself.
    pub fn root(&self) -> ComplexValue {
        ComplexValue::from_polar(1.0, PI / (2.0 * (f64::from(self.r) + 1.0)))
    }

    pub fn eval(&self, poly: &LaurentPoly) -> ComplexValue {
        poly.evaluate_at_root(self.r)
    }

    /// `C = i*pi/(r+1)`, the step of the hyperbolic-cosine sums: at the
    /// root, `A^{2m} = exp(m C)`.
    fn step(&self) -> ComplexValue {
        ComplexValue::new(0.0, PI / (f64::from(self.r) + 1.0))
    }

    fn order(&self) -> i64 {
        self.r() + 1
    }

    fn require_prime_order(&self) -> Result<(), RootsError> {
        if !is_prime(self.order() as u64) {
            return Err(RootsError::CompositeOrder(self.order()));
        }
        Ok(())
    }
}

/// The annihilating annular element at level `r`:
/// `omega_r = sum over 0 <= t < r of (-1)^t [t+1] e_t`.
pub fn omega(r: i64) -> Result<SkeinElement, RootsError> {
    let ctx = RootContext::new(r)?;
    let mut out = SkeinElement::zero();
    for t in 0..ctx.r() {
        let sign = if t % 2 == 1 { -1 } else { 1 };
        out.add_term(t, LaurentPoly::quantum_integer(t + 1).shift_scale(0, &sign.into()));
    }
    Ok(out)
}

/// Checks that the Hopf pairing `<e_m, omega_r>` vanishes at the root,
/// for the colors `0 < m < r` where that annihilation is promised.
pub fn omega_annihilation_check(ctx: &RootContext, m: i64) -> Result<CheckResult, RootsError> {
    if m < 1 || m >= ctx.r() {
        return Err(RootsError::AnnihilationRange { m, r: ctx.r() });
    }
    let pairing = SkeinElement::basis(m).hopf_pair(&omega(ctx.r())?);
    Ok(CheckResult::absolute(ctx.eval(&pairing).norm()))
}

/// Checks the closed-loop normalization of omega:
/// `<omega_r> * (A^2 - A^{-2})^2 = -2(r+1)` at the root, where `<omega_r>`
/// is the closure in the three-sphere. The closure sums r terms of size
/// up to r, so the comparison budget scales with r+1.
pub fn omega_unknot_check(ctx: &RootContext) -> Result<CheckResult, RootsError> {
    let closed = omega(ctx.r())?.close_in_s3();
    let sharpener = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
    let lhs = ctx.eval(&(&closed * &(&sharpener * &sharpener)));
    let rhs = ComplexValue::new(-2.0 * (ctx.r() as f64 + 1.0), 0.0);
    let difference = (lhs - rhs).norm();
    Ok(CheckResult {
        pass: difference < ABSOLUTE_TOLERANCE * (ctx.r() as f64 + 1.0),
        residual: difference,
    })
}

/// Checks the absorption identity behind handle slides: for colors with
/// `l + k <= r`, `<e_l e_k, omega_r> = delta(l, k) <omega_r>` at the root.
pub fn star_check(ctx: &RootContext, l: i64, k: i64) -> Result<CheckResult, RootsError> {
    if l < 0 {
        return Err(RootsError::NegativeColor(l));
    }
    if k < 0 {
        return Err(RootsError::NegativeColor(k));
    }
    if l + k > ctx.r() {
        return Err(RootsError::ColorRange {
            l,
            support: k,
            r: ctx.r(),
        });
    }
    let w = omega(ctx.r())?;
    let lhs = ctx.eval(&(&SkeinElement::basis(l) * &SkeinElement::basis(k)).hopf_pair(&w));
    let rhs = if l == k {
        ctx.eval(&w.close_in_s3())
    } else {
        ComplexValue::new(0.0, 0.0)
    };
    Ok(CheckResult::relative((lhs - rhs).norm(), lhs.norm(), rhs.norm()))
}

/// The coefficient of `e_l` in the `(p, q)` expansion of `e_color` around a
/// core colored `e_core`, extended to the meridian slope `(0, 1)` where the
/// cable degenerates to an encircling: `delta(l, core) * (-1)^color *
/// [(color+1)(core+1)] / [core+1]`.
fn slope_coefficient(
    p: i64,
    q: i64,
    color: i64,
    core: i64,
    l: i64,
) -> Result<LaurentPoly, RootsError> {
    if p >= 1 {
        return Ok(expansion_coefficient(p, q, color, core, l)?);
    }
    if (p, q) != (0, 1) {
        return Err(RootsError::UnsupportedSlope { p, q });
    }
    if color < 0 || core < 0 {
        return Err(RootsError::NegativeColor(color.min(core)));
    }
    if l != core {
        return Ok(LaurentPoly::zero());
    }
    let sign = if color % 2 == 1 { -1 } else { 1 };
    let eigen = LaurentPoly::quantum_integer((color + 1) * (core + 1))
        .divide_exact(&LaurentPoly::quantum_integer(core + 1))?;
    Ok(eigen.shift_scale(0, &sign.into()))
}

/// Largest basis index the `(p, q)` expansion of `e_color` around `e_core`
/// can touch.
fn slope_support(p: i64, color: i64, core: i64) -> i64 {
    if p >= 1 {
        p * color + core
    } else {
        core
    }
}

/// Checks the swap symmetry relating the `(p, q)` and `(q, p)` expansions
/// at the root:
///
/// ```text
/// (-1)^{l+s} g^l(p, q; color, s) <omega_r>
///   = sum over 0 <= t < r, k >= 0 of
///     (-1)^{k+t} g^k(q, p; color, t) [(t+1)(l+1)] [(s+1)(k+1)]
/// ```
///
/// where `g^l` is the coefficient of `e_l` and `s` is the core color. The
/// identity needs every color in play representable at the level, so it
/// requires `l + support <= r` with `support` the largest index of the
/// `(p, q)` expansion.
pub fn swap_symmetry_check(
    ctx: &RootContext,
    p: i64,
    q: i64,
    color: i64,
    core: i64,
    l: i64,
) -> Result<CheckResult, RootsError> {
    if l < 0 {
        return Err(RootsError::NegativeColor(l));
    }
    let support = slope_support(p, color, core);
    if l + support > ctx.r() {
        return Err(RootsError::ColorRange {
            l,
            support,
            r: ctx.r(),
        });
    }
    let omega_closed = ctx.eval(&omega(ctx.r())?.close_in_s3());
    let lhs_sign = if (l + core).rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    let lhs = ctx.eval(&slope_coefficient(p, q, color, core, l)?) * omega_closed * lhs_sign;

    // The swapped expansion lives on the slope (q, p): enumerate the basis
    // indices it can reach for each core color t.
    let swapped_support = |t: i64| -> Vec<i64> {
        let mut indices = std::collections::BTreeSet::new();
        if q >= 1 {
            for j in 0..=color {
                let kk = 2 * j - color;
                for candidate in [q * kk + t, -(t + 2 + q * kk)] {
                    if candidate >= 0 {
                        indices.insert(candidate);
                    }
                }
            }
        } else {
            // (q, p) = (0, 1): the meridian only returns its own core color.
            indices.insert(t);
        }
        indices.into_iter().collect()
    };
    let mut rhs = ComplexValue::new(0.0, 0.0);
    for t in 0..ctx.r() {
        let l_pairing = ctx.eval(&LaurentPoly::quantum_integer((t + 1) * (l + 1)));
        if l_pairing.norm() < 1e-14 {
            continue;
        }
        for k in swapped_support(t) {
            let coeff = ctx.eval(&slope_coefficient(q, p, color, t, k)?);
            if coeff.norm() < 1e-14 {
                continue;
            }
            let sign = if (k + t).rem_euclid(2) == 1 { -1.0 } else { 1.0 };
            let s_pairing = ctx.eval(&LaurentPoly::quantum_integer((core + 1) * (k + 1)));
            rhs += coeff * l_pairing * s_pairing * sign;
        }
    }
    Ok(CheckResult::relative((lhs - rhs).norm(), lhs.norm(), rhs.norm()))
}

/// A function of fixed parity on the integers, built from the shapes the
/// delta-collapse sums actually use.
#[derive(Debug, Clone, PartialEq)]
pub enum ParityFn {
    /// `c_0 + c_1 x^2 + c_2 x^4 + ...` (even).
    EvenPolynomial(Vec<ComplexValue>),
    /// `c_0 x + c_1 x^3 + ...` (odd).
    OddPolynomial(Vec<ComplexValue>),
    /// `exp(a x^2)` (even).
    GaussianExp(ComplexValue),
    /// `sinh(b x)` (odd).
    SinhLinear(ComplexValue),
}

impl ParityFn {
    fn is_even(&self) -> bool {
        matches!(self, ParityFn::EvenPolynomial(_) | ParityFn::GaussianExp(_))
    }

    pub fn eval(&self, x: i64) -> ComplexValue {
        let xf = ComplexValue::new(x as f64, 0.0);
        match self {
            ParityFn::EvenPolynomial(coeffs) => {
                let x2 = xf * xf;
                coeffs
                    .iter()
                    .rev()
                    .fold(ComplexValue::new(0.0, 0.0), |acc, &c| acc * x2 + c)
            }
            ParityFn::OddPolynomial(coeffs) => {
                let x2 = xf * xf;
                xf * coeffs
                    .iter()
                    .rev()
                    .fold(ComplexValue::new(0.0, 0.0), |acc, &c| acc * x2 + c)
            }
            ParityFn::GaussianExp(a) => (a * xf * xf).exp(),
            ParityFn::SinhLinear(b) => (b * xf).sinh(),
        }
    }
}

/// An even function and an odd function, as the collapse identity needs.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityFunctionPair {
    pub even: ParityFn,
    pub odd: ParityFn,
}

impl ParityFunctionPair {
    pub fn new(even: ParityFn, odd: ParityFn) -> Result<Self, RootsError> {
        if !even.is_even() || odd.is_even() {
            return Err(RootsError::WrongParity);
        }
        Ok(ParityFunctionPair { even, odd })
    }
}

/// Checks the delta-collapse identity: for an even `f` and odd `g`,
///
/// ```text
/// sum over k >= 0 of f(k+1) g(k+1) * (delta(k - t - pk') - delta(k + t + 2 + pk'))
///   = f(pk' + t + 1) g(pk' + t + 1)
/// ```
///
/// Both deltas never fire together, and a hit on the second one folds in
/// through the sign of the odd factor.
pub fn delta_collapse_check(
    pair: &ParityFunctionPair,
    t: i64,
    p: i64,
    k_prime: i64,
) -> Result<CheckResult, RootsError> {
    if t < 0 {
        return Err(RootsError::NegativeColor(t));
    }
    if p < 1 {
        return Err(RootsError::Cable(CableError::NonPositiveStrands(p)));
    }
    let bound = t + p * k_prime.abs() + 2;
    let mut lhs = ComplexValue::new(0.0, 0.0);
    for k in 0..=bound {
        let mut weight = 0.0;
        if k - t - p * k_prime == 0 {
            weight += 1.0;
        }
        if k + t + 2 + p * k_prime == 0 {
            weight -= 1.0;
        }
        if weight != 0.0 {
            lhs += pair.even.eval(k + 1) * pair.odd.eval(k + 1) * weight;
        }
    }
    let at = p * k_prime + t + 1;
    let rhs = pair.even.eval(at) * pair.odd.eval(at);
    Ok(CheckResult::absolute((lhs - rhs).norm()))
}

/// Checks the exchange symmetry of the theta-like sums: over
/// `k' = -n, -n+2, ..., n`,
///
/// ```text
/// sum of exp(a1 k'^2 + a2 k') sinh(a3 k' + zeta)
/// ```
///
/// is unchanged when `a2` and `a3` trade places.
pub fn theta_exchange_check(
    a1: ComplexValue,
    a2: ComplexValue,
    a3: ComplexValue,
    zeta: ComplexValue,
    n: i64,
) -> Result<CheckResult, RootsError> {
    if n < 0 {
        return Err(RootsError::NegativeColor(n));
    }
    let sum = |linear: ComplexValue, inner: ComplexValue| -> ComplexValue {
        let mut total = ComplexValue::new(0.0, 0.0);
        for j in 0..=n {
            let k = (2 * j - n) as f64;
            total += (a1 * k * k + linear * k).exp() * (inner * k + zeta).sinh();
        }
        total
    };
    let lhs = sum(a2, a3);
    let rhs = sum(a3, a2);
    Ok(CheckResult::relative((lhs - rhs).norm(), lhs.norm(), rhs.norm()))
}

/// Checks the prime-order cosh sum: when `r+1` is prime and does not divide
/// `eta`,
///
/// ```text
/// sum over 0 <= t < r of cosh((t+1) eta C) = -(1 + cos(eta pi)) / 2
/// ```
///
/// with `C = i*pi/(r+1)`; the right side is `-1` for even `eta` and `0` for
/// odd.
pub fn prime_cosh_sum_check(ctx: &RootContext, eta: i64) -> Result<CheckResult, RootsError> {
    ctx.require_prime_order()?;
    if eta.rem_euclid(ctx.order()) == 0 {
        return Err(RootsError::DivisibleArgument {
            what: "eta",
            value: eta,
            order: ctx.order(),
        });
    }
    let lhs = cosh_sum(ctx, eta);
    let rhs = ComplexValue::new(if eta % 2 == 0 { -1.0 } else { 0.0 }, 0.0);
    Ok(CheckResult::absolute((lhs - rhs).norm()))
}

fn cosh_sum(ctx: &RootContext, x: i64) -> ComplexValue {
    let step = ctx.step();
    let mut total = ComplexValue::new(0.0, 0.0);
    for t in 0..ctx.r() {
        total += (step * ((t + 1) * x) as f64).cosh();
    }
    total
}

/// Checks the delta form of the difference of two prime-order cosh sums:
/// with `x1 = l + s + 2 + q k'` and `x2 = l - s - q k'`,
///
/// ```text
/// sum over t of (cosh((t+1) x1 C) - cosh((t+1) x2 C))
///   = -(r+1) (delta(x2) - delta(x1))
/// ```
///
/// for prime `r+1` dividing neither nonzero argument.
pub fn cosh_delta_check(
    ctx: &RootContext,
    l: i64,
    s: i64,
    q: i64,
    k_prime: i64,
) -> Result<CheckResult, RootsError> {
    ctx.require_prime_order()?;
    let x1 = l + s + 2 + q * k_prime;
    let x2 = l - s - q * k_prime;
    for (what, x) in [("l+s+2+qk'", x1), ("l-s-qk'", x2)] {
        if x != 0 && x.rem_euclid(ctx.order()) == 0 {
            return Err(RootsError::DivisibleArgument {
                what,
                value: x,
                order: ctx.order(),
            });
        }
    }
    let lhs = cosh_sum(ctx, x1) - cosh_sum(ctx, x2);
    let delta = |x: i64| if x == 0 { 1.0 } else { 0.0 };
    let rhs = ComplexValue::new(-(ctx.order() as f64) * (delta(x2) - delta(x1)), 0.0);
    Ok(CheckResult::relative((lhs - rhs).norm(), lhs.norm(), rhs.norm()))
}

/// One row of the growth table: the normalized `(p, q)` torus knot
/// invariant at color `N`, evaluated at its own level `r = N + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthRow {
    pub color: i64,
    pub level: i64,
    pub value: ComplexValue,
}

/// Evaluates the zero-framed torus knot invariant, divided by the unknot
/// value `(-1)^N [N+1]`, at the root of level `r = N + 1`, for each color
/// `N` up to `max_color`. The division is exact in the Laurent ring, so the
/// root evaluation stays accurate even where `[N+1]` itself vanishes at
/// nearby levels.
pub fn evaluate_jones_at_roots(
    p: i64,
    q: i64,
    max_color: i64,
) -> Result<Vec<GrowthRow>, RootsError> {
    if max_color < 0 {
        return Err(RootsError::NegativeColor(max_color));
    }
    let mut rows = Vec::new();
    for color in 0..=max_color {
        let jones = torus_knot_jones(p, q, color, 0)?;
        let sign = if color % 2 == 1 { -1 } else { 1 };
        let unknot = LaurentPoly::quantum_integer(color + 1).shift_scale(0, &sign.into());
        let normalized = jones.divide_exact(&unknot)?;
        let level = color + 1;
        rows.push(GrowthRow {
            color,
            level,
            value: normalized.evaluate_at_root(level as u32),
        });
    }
    Ok(rows)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn ctx(r: i64) -> RootContext {
        RootContext::new(r).unwrap()
    }

    fn q(m: i64) -> LaurentPoly {
        LaurentPoly::quantum_integer(m)
    }

    #[test]
    fn omega_small_forms() {
        assert_eq!(omega(1).unwrap(), SkeinElement::basis(0));
        let mut expected = SkeinElement::zero();
        expected.add_term(0, LaurentPoly::one());
        expected.add_term(1, -&q(2));
        expected.add_term(2, q(3));
        assert_eq!(omega(3).unwrap(), expected);
        assert!(RootContext::new(0).is_err());
    }

    #[test]
    fn omega_annihilates_low_colors() {
        for r in 1..=8 {
            let ctx = ctx(r);
            for m in 1..r {
                let check = omega_annihilation_check(&ctx, m).unwrap();
                assert!(check.pass, "r={r} m={m} residual={}", check.residual);
            }
        }
    }

    #[test]
    fn annihilation_range_is_enforced() {
        for (m, r) in [(2, 2), (0, 3), (5, 3)] {
            assert!(matches!(
                omega_annihilation_check(&ctx(r), m),
                Err(RootsError::AnnihilationRange { .. })
            ));
        }
    }

    #[test]
    fn pairing_is_nonzero_past_the_annihilation_wall() {
        // <e_{2r}, omega_r> evaluates to -sum of [t+1]^2, which is strictly
        // negative: the annihilation genuinely stops.
        for r in 1..=6 {
            let ctx = ctx(r);
            let pairing = SkeinElement::basis(2 * r).hopf_pair(&omega(r).unwrap());
            assert!(ctx.eval(&pairing).norm() > 0.5, "r={r}");
        }
    }

    #[test]
    fn omega_closure_normalization() {
        for r in 1..=12 {
            let check = omega_unknot_check(&ctx(r)).unwrap();
            assert!(check.pass, "r={r} residual={}", check.residual);
        }
        // Spot values: <omega_1> = 1 and <omega_2> = 2 exactly.
        assert_eq!(
            omega(1).unwrap().close_in_s3(),
            LaurentPoly::one()
        );
        let closed_2 = ctx(2).eval(&omega(2).unwrap().close_in_s3());
        assert!((closed_2 - ComplexValue::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn star_identity_inside_its_range() {
        for r in [5, 9] {
            let ctx = ctx(r);
            for l in 0..=r / 2 {
                for k in 0..=(r - l).min(r / 2) {
                    let check = star_check(&ctx, l, k).unwrap();
                    assert!(check.pass, "r={r} l={l} k={k} residual={}", check.residual);
                }
            }
        }
        assert!(matches!(
            star_check(&ctx(9), 5, 5),
            Err(RootsError::ColorRange { .. })
        ));
    }

    #[test]
    fn swap_symmetry_on_torus_slopes() {
        let ctx = ctx(13);
        for (p, qq) in [(2, 3), (3, 2), (2, 5), (1, 0), (0, 1)] {
            for color in 0..=2 {
                for core in 0..=1 {
                    let support = slope_support(p, color, core);
                    for l in 0..=(13 - support) {
                        let check = swap_symmetry_check(&ctx, p, qq, color, core, l).unwrap();
                        assert!(
                            check.pass,
                            "p={p} q={qq} color={color} core={core} l={l} residual={}",
                            check.residual
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn swap_symmetry_guards_its_domain() {
        assert!(matches!(
            swap_symmetry_check(&ctx(5), 2, 3, 2, 0, 3),
            Err(RootsError::ColorRange { .. })
        ));
        assert!(matches!(
            swap_symmetry_check(&ctx(13), 0, 2, 1, 0, 0),
            Err(RootsError::UnsupportedSlope { p: 0, q: 2 })
        ));
    }

    #[test]
    fn delta_collapse_on_polynomials() {
        let pair = ParityFunctionPair::new(
            ParityFn::EvenPolynomial(vec![
                ComplexValue::new(0.0, 0.0),
                ComplexValue::new(1.0, 0.0),
            ]),
            ParityFn::OddPolynomial(vec![
                ComplexValue::new(0.0, 0.0),
                ComplexValue::new(1.0, 0.0),
            ]),
        )
        .unwrap();
        // f = x^2, g = x^3.
        for (t, p, k_prime) in [(2, 3, 1), (2, 3, -1), (1, 3, -2), (0, 1, 0), (3, 2, -3)] {
            let check = delta_collapse_check(&pair, t, p, k_prime).unwrap();
            assert!(
                check.pass,
                "t={t} p={p} k'={k_prime} residual={}",
                check.residual
            );
        }
    }

    #[test]
    fn delta_collapse_on_exponentials() {
        let pair = ParityFunctionPair::new(
            ParityFn::GaussianExp(ComplexValue::new(0.02, 0.03)),
            ParityFn::SinhLinear(ComplexValue::new(-0.01, 0.05)),
        )
        .unwrap();
        for t in 0..=3 {
            for p in 1..=3 {
                for k_prime in -3..=3 {
                    let check = delta_collapse_check(&pair, t, p, k_prime).unwrap();
                    assert!(
                        check.pass,
                        "t={t} p={p} k'={k_prime} residual={}",
                        check.residual
                    );
                }
            }
        }
    }

    #[test]
    fn parity_pairs_reject_mismatched_functions() {
        assert!(matches!(
            ParityFunctionPair::new(
                ParityFn::SinhLinear(ComplexValue::new(1.0, 0.0)),
                ParityFn::GaussianExp(ComplexValue::new(1.0, 0.0)),
            ),
            Err(RootsError::WrongParity)
        ));
    }

    #[test]
    fn theta_exchange_symmetry() {
        let a1 = ComplexValue::new(0.01, 0.07);
        let zeta = ComplexValue::new(0.2, -0.1);
        for n in 0..=8 {
            for (a2, a3) in [
                (ComplexValue::new(0.05, -0.02), ComplexValue::new(-0.03, 0.04)),
                (ComplexValue::new(0.0, 0.09), ComplexValue::new(0.06, 0.0)),
            ] {
                let check = theta_exchange_check(a1, a2, a3, zeta, n).unwrap();
                assert!(check.pass, "n={n} residual={}", check.residual);
            }
        }
    }

    #[test]
    fn prime_cosh_sums() {
        // r = 4: r+1 = 5 is prime; eta = 1 gives 0, eta = 2 gives -1.
        let c4 = ctx(4);
        let odd = prime_cosh_sum_check(&c4, 1).unwrap();
        assert!(odd.pass);
        let lhs_odd = cosh_sum(&c4, 1);
        assert!(lhs_odd.norm() < 1e-12);
        let even = prime_cosh_sum_check(&c4, 2).unwrap();
        assert!(even.pass);
        for r in [1, 2, 4, 6, 10, 12] {
            let ctx = ctx(r);
            for eta in 1..=(2 * r + 1) {
                if eta % (r + 1) == 0 {
                    continue;
                }
                let check = prime_cosh_sum_check(&ctx, eta).unwrap();
                assert!(check.pass, "r={r} eta={eta} residual={}", check.residual);
            }
        }
    }

    #[test]
    fn prime_cosh_guards() {
        assert!(matches!(
            prime_cosh_sum_check(&ctx(5), 1),
            Err(RootsError::CompositeOrder(6))
        ));
        assert!(matches!(
            prime_cosh_sum_check(&ctx(4), 10),
            Err(RootsError::DivisibleArgument { .. })
        ));
    }

    #[test]
    fn cosh_delta_branches() {
        let c4 = ctx(4);
        // x2 = 0: l = s + q k'.
        let hit_second = cosh_delta_check(&c4, 3, 1, 2, 1).unwrap();
        assert!(hit_second.pass, "residual={}", hit_second.residual);
        // x1 = 0: l = 0, s = 0, q k' = -2.
        let hit_first = cosh_delta_check(&c4, 0, 0, 2, -1).unwrap();
        assert!(hit_first.pass, "residual={}", hit_first.residual);
        // Neither: both sums cancel.
        let neither = cosh_delta_check(&c4, 1, 0, 2, 2).unwrap();
        assert!(neither.pass, "residual={}", neither.residual);
        // x1 = 1 + 0 + 2 + 2 = 5 is a nonzero multiple of r+1 = 5.
        assert!(matches!(
            cosh_delta_check(&c4, 1, 0, 2, 1),
            Err(RootsError::DivisibleArgument { .. })
        ));
    }

    #[test]
    fn growth_table_spot_values() {
        let rows = evaluate_jones_at_roots(2, 3, 3).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].level, 1);
        assert!((rows[0].value - ComplexValue::new(1.0, 0.0)).norm() < 1e-12);
        // Color 1 at level 2: the normalized trefoil value is exactly 1.
        assert!((rows[1].value - ComplexValue::new(1.0, 0.0)).norm() < 1e-9);
        // The normalization divides exactly for both torus forms of the
        // same knot.
        let swapped = evaluate_jones_at_roots(3, 2, 3).unwrap();
        for (a, b) in rows.iter().zip(&swapped) {
            assert!((a.value - b.value).norm() < 1e-9);
        }
        // The (1,1) companion is an unknot, so every normalized entry is 1.
        for row in evaluate_jones_at_roots(1, 1, 6).unwrap() {
            assert!((row.value - ComplexValue::new(1.0, 0.0)).norm() < 1e-9, "N={}", row.level);
        }
    }
}
