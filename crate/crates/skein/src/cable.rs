//! Closed-form cable expansions for torus knots in the solid torus, and the
//! colored Jones polynomials they produce.
//!
//! Embed the solid torus in a second solid torus as a neighborhood of the
//! `(p, q)` torus knot (p strands, q meridional wraps, canonical framing
//! `sigma = pq`). Pushing the basis element `e_n`, decorated by a core
//! colored `e_s`, through that embedding lands back in the solid-torus
//! algebra, and the result has a closed form: with `N = n`,
//!
//! ```text
//! T(p, q; s) = (-1)^{qN} * sum over k = -N, -N+2, ..., N of
//!              A^{pq k^2 + 2qk(s+1)} e_{pk + s}
//! ```
//!
//! with negative indices folded by `e_{-1} = 0`, `e_m = -e_{-m-2}`. The
//! same element is computed coefficient by coefficient from a delta-function
//! form driven by the Euclidean splitting `q = floor(q/p) p + beta`; the two
//! must agree, which the tests and the oracle exercise heavily.
//!
//! Closing the expansion in the three-sphere, weighted by any companion
//! knot's colored invariants, evaluates satellites. Torus knots themselves
//! are the unknot-companion case.

use crate::algebra::{framing_phase, SkeinElement};
use crate::laurent::{LaurentError, LaurentPoly};
use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CableError {
    #[error("strand count p must be positive, got {0}")]
    NonPositiveStrands(i64),
    #[error("p and q must be coprime, got p={p}, q={q}")]
    NotCoprime { p: i64, q: i64 },
    #[error("colors must be nonnegative, got {0}")]
    NegativeColor(i64),
    #[error("expansion framing is {found}, but this operation needs the canonical framing {expected}")]
    NonCanonicalFraming { expected: i64, found: i64 },
    #[error("companion table has no entry for color {0}")]
    MissingCompanionColor(i64),
    #[error("iterated cables take a knot companion, so the outer core color must be 0, got {0}")]
    CoreColorNotZero(i64),
    #[error("invalid expansion text: {0}")]
    Parse(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Parameters of one cabling: `p` strands wrapping `q` times, the cable
/// colored `e_color`, the core of the inner torus colored `e_core`, and the
/// framing the expansion currently carries (canonical is `p*q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CableParams {
    pub p: i64,
    pub q: i64,
    pub color: i64,
    pub core_color: i64,
    pub framing: i64,
}

impl CableParams {
    /// Validates `p >= 1`, `gcd(p, q) = 1`, nonnegative colors, and sets the
    /// canonical framing `p*q`.
    pub fn new(p: i64, q: i64, color: i64, core_color: i64) -> Result<Self, CableError> {
        if p < 1 {
            return Err(CableError::NonPositiveStrands(p));
        }
        if p.gcd(&q) != 1 {
            return Err(CableError::NotCoprime { p, q });
        }
        if color < 0 {
            return Err(CableError::NegativeColor(color));
        }
        if core_color < 0 {
            return Err(CableError::NegativeColor(core_color));
        }
        Ok(Self {
            p,
            q,
            color,
            core_color,
            framing: p * q,
        })
    }
}

/// The Euclidean splitting of a torus-knot slope used by the delta-function
/// coefficient form: `epsilon = floor(q/p)`, `beta = q - epsilon*p` in
/// `[0, p)`, and `alpha = p*beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusDecomposition {
    pub epsilon: i64,
    pub beta: i64,
    pub alpha: i64,
}

impl TorusDecomposition {
    pub fn new(p: i64, q: i64) -> Result<Self, CableError> {
        if p < 1 {
            return Err(CableError::NonPositiveStrands(p));
        }
        let epsilon = q.div_euclid(p);
        let beta = q.rem_euclid(p);
        Ok(Self {
            epsilon,
            beta,
            alpha: p * beta,
        })
    }
}

/// A cable expansion: the image of `e_color` (with core colored
/// `e_core_color`) under the `(p, q)`-cabling, as an element of the
/// solid-torus algebra, together with the framing it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableExpansion {
    pub params: CableParams,
    pub element: SkeinElement,
}

/// Expands the `(p, q)` cable of `e_color` with core colored `e_core_color`
/// at the canonical framing `p*q`, using the closed summation form.
pub fn cable_expansion(
    p: i64,
    q: i64,
    color: i64,
    core_color: i64,
) -> Result<CableExpansion, CableError> {
    let params = CableParams::new(p, q, color, core_color)?;
    let n = color;
    let s = core_color;
    let sign = if (q * n).rem_euclid(2) == 1 { -1 } else { 1 };
    let mut element = SkeinElement::zero();
    for j in 0..=n {
        let k = 2 * j - n;
        let exp = p * q * k * k + 2 * q * k * (s + 1);
        element.add_term(p * k + s, LaurentPoly::monomial(exp, sign));
    }
    Ok(CableExpansion { params, element })
}

/// One coefficient of the same expansion, computed independently from the
/// delta-function form: the coefficient of `e_l` in the `(p, q)` cable of
/// `e_color` with core `e_core_color` is
///
/// ```text
/// (-1)^{qN} A^{epsilon(-s^2-2s+l^2+2l)} * sum over k = -N, -N+2, ..., N of
///   A^{alpha k^2 + 2 beta k (s+1)} (delta(l - s - pk) - delta(l + s + 2 + pk))
/// ```
///
/// with `epsilon, beta, alpha` from [`TorusDecomposition`].
pub fn expansion_coefficient(
    p: i64,
    q: i64,
    color: i64,
    core_color: i64,
    l: i64,
) -> Result<LaurentPoly, CableError> {
    let params = CableParams::new(p, q, color, core_color)?;
    if l < 0 {
        return Ok(LaurentPoly::zero());
    }
    let TorusDecomposition { epsilon, beta, alpha } = TorusDecomposition::new(p, q)?;
    let n = params.color;
    let s = params.core_color;
    let sign = if (q * n).rem_euclid(2) == 1 { -1 } else { 1 };
    let prefactor_exp = epsilon * (-s * s - 2 * s + l * l + 2 * l);
    let mut out = LaurentPoly::zero();
    for j in 0..=n {
        let k = 2 * j - n;
        let exp = prefactor_exp + alpha * k * k + 2 * beta * k * (s + 1);
        if l - s - p * k == 0 {
            out = &out + &LaurentPoly::monomial(exp, sign);
        }
        if l + s + 2 + p * k == 0 {
            out = &out - &LaurentPoly::monomial(exp, sign);
        }
    }
    Ok(out)
}

impl CableExpansion {
    /// Adds `b` positive full twists of framing to the cable: a global
    /// factor `(-1)^{b*color} A^{b(color^2 + 2*color)}` (the cable is a
    /// single component colored `e_color`), with the recorded framing
    /// advanced by `b`.
    pub fn adjust_framing(&self, b: i64) -> CableExpansion {
        let phase = framing_phase(b, self.params.color);
        CableExpansion {
            params: CableParams {
                framing: self.params.framing + b,
                ..self.params
            },
            element: self.element.scalar_mul(&phase),
        }
    }

    /// Turns the canonical `(p, q)` expansion into the canonical
    /// `(p, q + p)` expansion by one full twist of the companion torus:
    /// the coefficient of `e_l` picks up `(-1)^{l+s} A^{-s^2-2s+l^2+2l}`.
    pub fn apply_full_twist(&self) -> Result<CableExpansion, CableError> {
        let p = self.params.p;
        let q = self.params.q;
        if self.params.framing != p * q {
            return Err(CableError::NonCanonicalFraming {
                expected: p * q,
                found: self.params.framing,
            });
        }
        let s = self.params.core_color;
        let mut element = SkeinElement::zero();
        for (l, c) in self.element.terms() {
            let sign = if (l + s).rem_euclid(2) == 1 { -1 } else { 1 };
            let phase = LaurentPoly::monomial(-s * s - 2 * s + l * l + 2 * l, sign);
            element.add_term(l, c * &phase);
        }
        let params = CableParams::new(p, q + p, self.params.color, s)?;
        Ok(CableExpansion { params, element })
    }

    /// Evaluates the satellite with this pattern around a companion knot:
    /// substitutes the companion's bracket invariant `J_l` (its table entry
    /// for color `l`, zero framing) for each `e_l` in the expansion. The
    /// result keeps whatever framing the expansion carries.
    ///
    /// With the unknot table `J_l = (-1)^l [l+1]` this is exactly
    /// [`SkeinElement::close_in_s3`].
    pub fn evaluate_satellite(
        &self,
        companion: &BTreeMap<i64, LaurentPoly>,
    ) -> Result<LaurentPoly, CableError> {
        let mut out = LaurentPoly::zero();
        for (l, c) in self.element.terms() {
            let value = companion
                .get(&l)
                .ok_or(CableError::MissingCompanionColor(l))?;
            out = &out + &(c * value);
        }
        Ok(out)
    }
}

/// Text form of an expansion: one header line `p q color core framing`,
/// one line with the element in its canonical text form.
impl fmt::Display for CableExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {} {} {}",
            self.params.p, self.params.q, self.params.color, self.params.core_color, self.params.framing
        )?;
        writeln!(f, "{}", self.element)
    }
}

impl FromStr for CableExpansion {
    type Err = CableError;

    fn from_str(s: &str) -> Result<Self, CableError> {
        let mut lines = s.lines().filter(|line| !line.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CableError::Parse("missing header line".into()))?;
        let fields: Vec<i64> = header
            .split_whitespace()
            .map(|w| {
                w.parse::<i64>()
                    .map_err(|_| CableError::Parse(format!("bad header field `{w}`")))
            })
            .collect::<Result<_, _>>()?;
        let [p, q, color, core_color, framing] = fields[..] else {
            return Err(CableError::Parse(format!(
                "header needs 5 integers `p q color core framing`, got {}",
                fields.len()
            )));
        };
        let element_line = lines
            .next()
            .ok_or_else(|| CableError::Parse("missing element line".into()))?;
        if lines.next().is_some() {
            return Err(CableError::Parse("trailing content after element".into()));
        }
        let element: SkeinElement = element_line
            .parse()
            .map_err(|e: LaurentError| CableError::Parse(e.to_string()))?;
        let mut params = CableParams::new(p, q, color, core_color)?;
        params.framing = framing;
        Ok(CableExpansion { params, element })
    }
}

/// The bracket invariant of the `(p, q)` torus knot colored `e_color`,
/// normalized to the given framing (`0` for the framing-independent value
/// usually quoted): the cable expansion is closed in the three-sphere and
/// the framing is corrected from the blackboard value `p*q` to `framing`.
pub fn torus_knot_jones(
    p: i64,
    q: i64,
    color: i64,
    framing: i64,
) -> Result<LaurentPoly, CableError> {
    let expansion = cable_expansion(p, q, color, 0)?;
    let corrected = expansion.adjust_framing(framing - p * q);
    Ok(corrected.element.close_in_s3())
}

/// Evaluates a twice-iterated cable: the outer `(p, q)` cable (colored
/// `outer.color`) of the inner `(p', q')` cable of the companion whose
/// colored invariants are given by `companion`. All pieces are taken at
/// zero framing, so both expansions are unframed before substitution.
pub fn iterated_cable(
    outer: &CableParams,
    inner_p: i64,
    inner_q: i64,
    companion: &BTreeMap<i64, LaurentPoly>,
) -> Result<LaurentPoly, CableError> {
    if outer.core_color != 0 {
        return Err(CableError::CoreColorNotZero(outer.core_color));
    }
    let outer_expansion =
        cable_expansion(outer.p, outer.q, outer.color, 0)?.adjust_framing(-outer.p * outer.q);
    // The inner cable's colored invariants, one for each color the outer
    // expansion needs.
    let mut inner_table = BTreeMap::new();
    for (l, _) in outer_expansion.element.terms() {
        let inner =
            cable_expansion(inner_p, inner_q, l, 0)?.adjust_framing(-inner_p * inner_q);
        inner_table.insert(l, inner.evaluate_satellite(companion)?);
    }
    outer_expansion.evaluate_satellite(&inner_table)
}

/// The continued-fraction expansion of `q/p` produced by the Euclidean
/// splitting that drives the coefficient form: `q/p = a_0 + 1/(q'/beta)`
/// style terms, recursing on `(beta, p)` until the strand count reaches 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<i64>,
}

/// Computes the expansion terms for the slope `q/p` with `p >= 1`. A
/// common factor drops out of the slope, so the terms always describe the
/// reduced fraction.
pub fn continued_fraction(p: i64, q: i64) -> Result<ContinuedFraction, CableError> {
    if p < 1 {
        return Err(CableError::NonPositiveStrands(p));
    }
    let g = p.gcd(&q);
    let mut terms = Vec::new();
    let (mut p, mut q) = (p / g, q / g);
    loop {
        let TorusDecomposition { epsilon, beta, .. } = TorusDecomposition::new(p, q)?;
        terms.push(epsilon);
        if beta == 0 {
            // Terminates exactly when p = 1 (coprimality keeps beta > 0
            // for p > 1).
            break;
        }
        (p, q) = (beta, p);
    }
    Ok(ContinuedFraction { terms })
}

impl ContinuedFraction {
    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    /// Reconstructs the slope exactly: returns `(p, q)` with `p >= 1`,
    /// `gcd(p, q) = 1`, and `q/p` equal to the continued fraction
    /// `a_0 + 1/(a_1 + 1/(...))`.
    pub fn reconstruct(&self) -> (i64, i64) {
        let mut num: i128 = 1;
        let mut den: i128 = 0;
        for &a in self.terms.iter().rev() {
            // value = a + 1/value, i.e. num/den -> (a*num + den)/num.
            (num, den) = (i128::from(a) * num + den, num);
        }
        (den as i64, num as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SkeinElement;
    use proptest::prelude::*;

    fn q(m: i64) -> LaurentPoly {
        LaurentPoly::quantum_integer(m)
    }

    fn coprime_pairs(max_p: i64, max_abs_q: i64) -> Vec<(i64, i64)> {
        let mut pairs = Vec::new();
        for p in 1..=max_p {
            for q in -max_abs_q..=max_abs_q {
                if p.gcd(&q) == 1 {
                    pairs.push((p, q));
                }
            }
        }
        pairs
    }

    #[test]
    fn params_validate_inputs() {
        assert!(CableParams::new(2, 3, 1, 0).is_ok());
        assert!(matches!(
            CableParams::new(0, 1, 0, 0),
            Err(CableError::NonPositiveStrands(0))
        ));
        assert!(matches!(
            CableParams::new(2, 4, 0, 0),
            Err(CableError::NotCoprime { .. })
        ));
        assert!(matches!(
            CableParams::new(2, 3, -1, 0),
            Err(CableError::NegativeColor(-1))
        ));
        assert_eq!(CableParams::new(2, 3, 1, 0).unwrap().framing, 6);
    }

    #[test]
    fn decomposition_uses_euclidean_splitting() {
        let d = TorusDecomposition::new(3, 7).unwrap();
        assert_eq!((d.epsilon, d.beta, d.alpha), (2, 1, 3));
        // Negative slopes stay in range: beta in [0, p).
        let d = TorusDecomposition::new(3, -7).unwrap();
        assert_eq!((d.epsilon, d.beta, d.alpha), (-3, 2, 6));
        let d = TorusDecomposition::new(1, 5).unwrap();
        assert_eq!((d.epsilon, d.beta, d.alpha), (5, 0, 0));
    }

    #[test]
    fn expansion_of_trefoil_cable() {
        // (2,3) cable of e_1, core color 0: e_0 - A^{12} e_2 at framing 6.
        let expansion = cable_expansion(2, 3, 1, 0).unwrap();
        assert_eq!(expansion.params.framing, 6);
        let mut expected = SkeinElement::zero();
        expected.add_term(0, LaurentPoly::one());
        expected.add_term(2, LaurentPoly::monomial(12, -1));
        assert_eq!(expansion.element, expected);
    }

    #[test]
    fn expansion_folds_negative_indices() {
        // (1,2) cable of e_2: the k = -2 and k = 0 terms fold into each
        // other and cancel, leaving a single e_2 term.
        let expansion = cable_expansion(1, 2, 2, 0).unwrap();
        let mut expected = SkeinElement::zero();
        expected.add_term(2, LaurentPoly::monomial(16, 1));
        assert_eq!(expansion.element, expected);
    }

    #[test]
    fn expansion_of_unknotted_cable_is_framed_basis_element() {
        // (1, q) cable of e_n is e_n with q twists:
        // (-1)^{qn} A^{q(n^2+2n)} e_n.
        for n in 0..=4 {
            for qq in -5..=5 {
                let expansion = cable_expansion(1, qq, n, 0).unwrap();
                assert_eq!(
                    expansion.element,
                    SkeinElement::basis(n).framing_twist(qq),
                    "(1, {qq}) cable of e_{n}"
                );
            }
        }
    }

    #[test]
    fn coefficient_form_matches_closed_form() {
        for (p, qq) in coprime_pairs(4, 5) {
            for color in 0..=3 {
                for core in 0..=2 {
                    let expansion = cable_expansion(p, qq, color, core).unwrap();
                    let top = p * color + core + 2;
                    for l in 0..=top {
                        assert_eq!(
                            expansion_coefficient(p, qq, color, core, l).unwrap(),
                            expansion.element.coeff(l),
                            "p={p} q={qq} color={color} core={core} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn full_twist_matches_direct_expansion() {
        for (p, qq) in coprime_pairs(4, 5) {
            for color in 0..=3 {
                for core in 0..=2 {
                    let twisted = cable_expansion(p, qq, color, core)
                        .unwrap()
                        .apply_full_twist()
                        .unwrap();
                    let direct = cable_expansion(p, qq + p, color, core).unwrap();
                    assert_eq!(twisted, direct, "p={p} q={qq} color={color} core={core}");
                }
            }
        }
    }

    #[test]
    fn full_twist_requires_canonical_framing() {
        let unframed = cable_expansion(2, 3, 1, 0).unwrap().adjust_framing(-6);
        assert!(matches!(
            unframed.apply_full_twist(),
            Err(CableError::NonCanonicalFraming { expected: 6, found: 0 })
        ));
    }

    #[test]
    fn framing_adjustments_compose_and_invert() {
        let expansion = cable_expansion(3, 2, 2, 1).unwrap();
        assert_eq!(expansion.adjust_framing(4).adjust_framing(-4), expansion);
        assert_eq!(
            expansion.adjust_framing(2).adjust_framing(3),
            expansion.adjust_framing(5)
        );
        assert_eq!(expansion.adjust_framing(0), expansion);
    }

    #[test]
    fn satellite_with_unknot_companion_is_closure() {
        let mut unknot = BTreeMap::new();
        for l in 0..=20 {
            let sign = if l % 2 == 1 { -1 } else { 1 };
            unknot.insert(l, q(l + 1).shift_scale(0, &sign.into()));
        }
        for (p, qq) in coprime_pairs(3, 4) {
            for color in 0..=3 {
                let expansion = cable_expansion(p, qq, color, 0).unwrap();
                assert_eq!(
                    expansion.evaluate_satellite(&unknot).unwrap(),
                    expansion.element.close_in_s3()
                );
            }
        }
    }

    #[test]
    fn satellite_requires_all_companion_colors() {
        let expansion = cable_expansion(2, 3, 1, 0).unwrap();
        let table = BTreeMap::from([(0, LaurentPoly::one())]);
        assert!(matches!(
            expansion.evaluate_satellite(&table),
            Err(CableError::MissingCompanionColor(2))
        ));
    }

    #[test]
    fn trefoil_jones_at_color_one() {
        // Framing-zero bracket invariant of the (2,3) torus knot, color 1:
        // A^{-18} - A^{-10} - A^{-6} - A^{-2}; dividing by the unknot value
        // -[2] gives the familiar three-term polynomial.
        let jones = torus_knot_jones(2, 3, 1, 0).unwrap();
        assert_eq!(
            jones,
            LaurentPoly::from_terms([(-18, 1), (-10, -1), (-6, -1), (-2, -1)])
        );
        let reduced = jones.divide_exact(&(-&q(2))).unwrap();
        assert_eq!(
            reduced,
            LaurentPoly::from_terms([(-16, -1), (-12, 1), (-4, 1)])
        );
    }

    #[test]
    fn unknotted_torus_cables_close_to_unknot_values() {
        // (1, q) at framing 0 is the unknot for every q.
        for qq in -4..=4 {
            for color in 0..=4 {
                let jones = torus_knot_jones(1, qq, color, 0).unwrap();
                let sign = if color % 2 == 1 { -1 } else { 1 };
                assert_eq!(jones, q(color + 1).shift_scale(0, &sign.into()));
            }
        }
    }

    #[test]
    fn jones_is_symmetric_in_p_and_q() {
        for (p, qq) in [(2, 3), (3, 2), (2, 5), (5, 2), (3, 4), (4, 3), (3, 5)] {
            for color in 0..=2 {
                assert_eq!(
                    torus_knot_jones(p, qq, color, 0).unwrap(),
                    torus_knot_jones(qq, p, color, 0).unwrap(),
                    "p={p} q={qq} color={color}"
                );
            }
        }
    }

    #[test]
    fn expansion_text_round_trips() {
        let expansion = cable_expansion(2, 3, 1, 0).unwrap();
        let text = expansion.to_string();
        assert_eq!(text, "2 3 1 0 6\n{0: {0:1}, 2: {12:-1}}\n");
        let back: CableExpansion = text.parse().unwrap();
        assert_eq!(back, expansion);
        // Non-canonical framing survives the round trip.
        let unframed = expansion.adjust_framing(-6);
        let back: CableExpansion = unframed.to_string().parse().unwrap();
        assert_eq!(back, unframed);
    }

    #[test]
    fn expansion_text_rejects_malformed_input() {
        assert!("".parse::<CableExpansion>().is_err());
        assert!("2 3 1 0\n{}\n".parse::<CableExpansion>().is_err());
        assert!("2 3 1 0 6\n".parse::<CableExpansion>().is_err());
        assert!("2 4 1 0 8\n{}\n".parse::<CableExpansion>().is_err());
        assert!("2 3 1 0 6\n{}\nextra\n".parse::<CableExpansion>().is_err());
    }

    #[test]
    fn continued_fractions_of_known_slopes() {
        assert_eq!(continued_fraction(1, 5).unwrap().terms(), &[5]);
        assert_eq!(continued_fraction(2, 3).unwrap().terms(), &[1, 2]);
        assert_eq!(continued_fraction(3, 7).unwrap().terms(), &[2, 3]);
        // 7/5 = 1 + 1/(2 + 1/(2)).
        assert_eq!(continued_fraction(5, 7).unwrap().terms(), &[1, 2, 2]);
        assert_eq!(continued_fraction(3, -7).unwrap().terms(), &[-3, 1, 2]);
        // A common factor reduces away: 6/4 = 3/2.
        assert_eq!(continued_fraction(4, 6).unwrap().terms(), &[1, 2]);
    }

    #[test]
    fn iterated_cable_with_trivial_inner_layer() {
        // Inner (1, 0) cable changes nothing, so the iterated value is the
        // plain satellite of the companion.
        let mut unknot = BTreeMap::new();
        for l in 0..=20 {
            let sign = if l % 2 == 1 { -1 } else { 1 };
            unknot.insert(l, q(l + 1).shift_scale(0, &sign.into()));
        }
        let outer = CableParams::new(2, 3, 1, 0).unwrap();
        let direct = torus_knot_jones(2, 3, 1, 0).unwrap();
        assert_eq!(iterated_cable(&outer, 1, 0, &unknot).unwrap(), direct);
    }

    #[test]
    fn iterated_cable_of_unknot_composite() {
        // Outer (2,1) cable of the inner (1,2) cable of the unknot, outer
        // color 1: the whole composite is an unknot, so the zero-framed
        // value is -[2].
        let mut unknot = BTreeMap::new();
        for l in 0..=20 {
            let sign = if l % 2 == 1 { -1 } else { 1 };
            unknot.insert(l, q(l + 1).shift_scale(0, &sign.into()));
        }
        let outer = CableParams::new(2, 1, 1, 0).unwrap();
        let value = iterated_cable(&outer, 1, 2, &unknot).unwrap();
        assert_eq!(value, -&q(2));
    }

    proptest! {
        #[test]
        fn continued_fraction_reconstructs_slope(p in 1i64..40, q in -40i64..40) {
            prop_assume!(p.gcd(&q) == 1);
            let cf = continued_fraction(p, q).unwrap();
            prop_assert_eq!(cf.reconstruct(), (p, q));
        }

        #[test]
        fn expansion_support_is_bounded_and_parity_constrained(
            p in 1i64..5, q in -6i64..6, color in 0i64..4, core in 0i64..3,
        ) {
            prop_assume!(p.gcd(&q) == 1);
            let expansion = cable_expansion(p, q, color, core).unwrap();
            for (l, _) in expansion.element.terms() {
                prop_assert!(l <= p * color + core);
                prop_assert_eq!((l + p * color + core).rem_euclid(2), 0);
            }
        }
    }
}
