//! The Kauffman bracket skein algebra of the solid torus.
//!
//! Elements are finite `Z[A, A^{-1}]`-linear combinations of the basis
//! `e_0, e_1, e_2, ...`, where `e_n` is the n-th Chebyshev-like power of the
//! core curve `z`: `e_0 = 1`, `e_1 = z`, `z * e_n = e_{n-1} + e_{n+1}`.
//! Negative indices fold back into the basis through `e_{-1} = 0` and
//! `e_n = -e_{-n-2}`, which is what makes closed summation formulas with
//! out-of-range indices work uniformly.
//!
//! The module also carries the standard pairings: the bracket of the closure
//! in the three-sphere, the Hopf pairing of two elements placed on the two
//! components of the Hopf link, encircling by an `e_m`-colored meridian, and
//! the framing change `e_n -> (-1)^{bn} A^{b(n^2+2n)} e_n`.

use crate::laurent::{LaurentError, LaurentPoly};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Folds an arbitrary basis index into the honest range: returns
/// `(sign, index)` with `index >= 0` such that `e_n = sign * e_index`,
/// where `sign` is `0` for `n = -1` (the element is zero), `1` for
/// `n >= 0`, and `-1` for `n <= -2` (via `e_n = -e_{-n-2}`).
pub fn reduce_index(n: i64) -> (i8, i64) {
    if n >= 0 {
        (1, n)
    } else if n == -1 {
        (0, 0)
    } else {
        (-1, -n - 2)
    }
}

/// Whether `(l, m, n)` is admissible: all nonnegative, even total, and
/// satisfying the triangle inequalities `|m - n| <= l <= m + n`.
pub fn is_admissible(l: i64, m: i64, n: i64) -> bool {
    l >= 0
        && m >= 0
        && n >= 0
        && (l + m + n) % 2 == 0
        && (m - n).abs() <= l
        && l <= m + n
}

/// An admissible triple of colors; the product `e_m * e_n` is the sum of
/// `e_l` over exactly the `l` making `(l, m, n)` admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibleTriple {
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl AdmissibleTriple {
    /// Validates the triple; `None` when it is not admissible.
    pub fn new(l: i64, m: i64, n: i64) -> Option<Self> {
        is_admissible(l, m, n).then_some(Self { l, m, n })
    }
}

/// The framing-change scalar for one basis element: a `b`-fold positive
/// twist sends `e_n` to `(-1)^{bn} A^{b(n^2 + 2n)} e_n`.
pub fn framing_phase(b: i64, n: i64) -> LaurentPoly {
    let sign = if (b * n).rem_euclid(2) == 1 { -1 } else { 1 };
    LaurentPoly::monomial(b * (n * n + 2 * n), sign)
}

/// An element of the solid-torus skein algebra in the `e_n` basis: a sorted
/// map from basis index (always `>= 0`) to nonzero Laurent coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkeinElement {
    coeffs: BTreeMap<i64, LaurentPoly>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The basis element `e_n`, folded into range for negative `n`.
    pub fn basis(n: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(n, LaurentPoly::one());
        out
    }

    /// Adds `coeff * e_n`, folding negative `n` into the basis.
    pub fn add_term(&mut self, n: i64, coeff: LaurentPoly) {
        let (sign, index) = reduce_index(n);
        if sign == 0 || coeff.is_zero() {
            return;
        }
        let signed = if sign < 0 { -&coeff } else { coeff };
        let entry = self.coeffs.entry(index).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &signed;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `e_n` (zero when absent; negative `n` folds).
    pub fn coeff(&self, n: i64) -> LaurentPoly {
        let (sign, index) = reduce_index(n);
        let c = self.coeffs.get(&index).cloned().unwrap_or_default();
        match sign {
            0 => LaurentPoly::zero(),
            -1 => -&c,
            _ => c,
        }
    }

    /// Iterates `(index, coefficient)` in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    /// The largest basis index present.
    pub fn max_index(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scalar_mul(&self, scalar: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&n, c) in &self.coeffs {
            out.add_term(n, c * scalar);
        }
        out
    }

    /// Applies `b` positive full twists of framing:
    /// `e_n -> (-1)^{bn} A^{b(n^2+2n)} e_n` termwise.
    pub fn framing_twist(&self, b: i64) -> Self {
        let mut out = Self::zero();
        for (&n, c) in &self.coeffs {
            out.add_term(n, c * &framing_phase(b, n));
        }
        out
    }

    /// The Kauffman bracket of the closure in the three-sphere:
    /// `e_n` closes to `(-1)^n [n+1]`.
    pub fn close_in_s3(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&n, c) in &self.coeffs {
            let sign = if n % 2 == 1 { -1 } else { 1 };
            let closed = LaurentPoly::quantum_integer(n + 1).shift_scale(0, &sign.into());
            out = &out + &(c * &closed);
        }
        out
    }

    /// The Hopf pairing: placing `self` and `other` on the two components of
    /// the zero-framed Hopf link gives
    /// `<e_s, e_k> = (-1)^{s+k} [(s+1)(k+1)]`.
    pub fn hopf_pair(&self, other: &Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&s, cs) in &self.coeffs {
            for (&k, ck) in &other.coeffs {
                let sign = if (s + k) % 2 == 1 { -1 } else { 1 };
                let pairing =
                    LaurentPoly::quantum_integer((s + 1) * (k + 1)).shift_scale(0, &sign.into());
                out = &out + &(&(cs * ck) * &pairing);
            }
        }
        out
    }

    /// Converts to an honest polynomial in the core curve `z`.
    pub fn to_z_polynomial(&self) -> ZPolynomial {
        let mut out = ZPolynomial::zero();
        let Some(top) = self.max_index() else {
            return out;
        };
        // Chebyshev-like ladder: e_0 = 1, e_1 = z, e_k = z*e_{k-1} - e_{k-2}.
        let mut prev = ZPolynomial::one();
        let mut cur = ZPolynomial::monomial(1, LaurentPoly::one());
        for n in 0..=top {
            let basis_poly = if n == 0 { &prev } else { &cur };
            let c = self.coeffs.get(&n);
            if let Some(c) = c {
                out = &out + &basis_poly.scalar_mul(c);
            }
            if n >= 1 && n < top {
                let next = &cur.shift_degree(1) - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
        }
        out
    }
}

/// Encircles `a` by a meridian circle colored `e_m`: each basis element is
/// an eigenvector, `e_n -> (-1)^m ([(m+1)(n+1)] / [n+1]) e_n`.
pub fn encircle(m: i64, a: &SkeinElement) -> Result<SkeinElement, LaurentError> {
    let mut out = SkeinElement::zero();
    let sign = BigInt::from(if m % 2 == 1 { -1 } else { 1 });
    for (n, c) in a.terms() {
        let eigen = LaurentPoly::quantum_integer((m + 1) * (n + 1))
            .divide_exact(&LaurentPoly::quantum_integer(n + 1))?
            .shift_scale(0, &sign);
        out.add_term(n, c * &eigen);
    }
    Ok(out)
}

impl Add for &SkeinElement {
    type Output = SkeinElement;

    fn add(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n, c.clone());
        }
        out
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;

    fn sub(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n, -c);
        }
        out
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;

    fn neg(self) -> SkeinElement {
        &SkeinElement::zero() - self
    }
}

/// The algebra product: bilinear extension of
/// `e_m * e_n = sum of e_l over admissible (l, m, n)`,
/// i.e. `l = |m-n|, |m-n|+2, ..., m+n`.
impl Mul for &SkeinElement {
    type Output = SkeinElement;

    fn mul(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = SkeinElement::zero();
        for (m, cm) in self.terms() {
            for (n, cn) in rhs.terms() {
                let c = cm * cn;
                let mut l = (m - n).abs();
                while l <= m + n {
                    out.add_term(l, c.clone());
                    l += 2;
                }
            }
        }
        out
    }
}

/// Canonical text form: `{n: <poly>, ...}` in increasing index order with
/// the Laurent coefficients in their own canonical form; `{}` for zero.
impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (&n, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for SkeinElement {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| LaurentError::Parse("expected {n: {..}, ...}".into()))?
            .trim();
        let mut out = Self::zero();
        let mut rest = body;
        while !rest.is_empty() {
            let (index_text, after) = rest
                .split_once(':')
                .ok_or_else(|| LaurentError::Parse("missing ':' after basis index".into()))?;
            let n: i64 = index_text
                .trim()
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad basis index `{}`", index_text.trim())))?;
            if n < 0 {
                return Err(LaurentError::Parse(format!(
                    "basis index {n} must be nonnegative in the text form"
                )));
            }
            let after = after.trim_start();
            let close = after
                .find('}')
                .ok_or_else(|| LaurentError::Parse("unterminated coefficient".into()))?;
            let coeff: LaurentPoly = after[..=close].parse()?;
            if out.coeffs.contains_key(&n) {
                return Err(LaurentError::Parse(format!("duplicate basis index {n}")));
            }
            out.add_term(n, coeff);
            rest = after[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        Ok(out)
    }
}

/// A polynomial in the core curve `z` with Laurent coefficients: the image
/// of the skein algebra under `e_n ->` its Chebyshev-like polynomial, and
/// the natural output of annular bracket state sums (one `z` per essential
/// loop).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZPolynomial {
    coeffs: BTreeMap<i64, LaurentPoly>,
}

impl ZPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, LaurentPoly::one())
    }

    /// `coeff * z^degree`.
    pub fn monomial(degree: i64, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(degree, coeff);
        out
    }

    /// Adds `coeff * z^degree`; the degree must be nonnegative.
    pub fn add_term(&mut self, degree: i64, coeff: LaurentPoly) {
        assert!(degree >= 0, "z-polynomials have nonnegative degrees");
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The coefficient of `z^degree` (zero when absent).
    pub fn coeff(&self, degree: i64) -> LaurentPoly {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Iterates `(degree, coefficient)` in increasing degree order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn scalar_mul(&self, scalar: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&d, c) in &self.coeffs {
            out.add_term(d, c * scalar);
        }
        out
    }

    /// Multiplies by `z^shift`.
    pub fn shift_degree(&self, shift: i64) -> Self {
        let mut out = Self::zero();
        for (&d, c) in &self.coeffs {
            out.add_term(d + shift, c.clone());
        }
        out
    }

    /// Rewrites in the `e_n` basis by running the ladder
    /// `z * e_n = e_{n-1} + e_{n+1}` upward from `e_0`.
    pub fn to_e_basis(&self) -> SkeinElement {
        let mut out = SkeinElement::zero();
        let Some(top) = self.degree() else {
            return out;
        };
        // cur holds z^j expressed in the e-basis.
        let mut cur: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        cur.insert(0, LaurentPoly::one());
        for j in 0..=top {
            if let Some(c) = self.coeffs.get(&j) {
                for (&n, w) in &cur {
                    out.add_term(n, c * w);
                }
            }
            if j < top {
                let mut next: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
                for (&n, w) in &cur {
                    for m in [n - 1, n + 1] {
                        if m >= 0 {
                            let entry = next.entry(m).or_insert_with(LaurentPoly::zero);
                            *entry = &*entry + w;
                        }
                    }
                }
                cur = next;
            }
        }
        out
    }
}

impl Add for &ZPolynomial {
    type Output = ZPolynomial;

    fn add(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &ZPolynomial {
    type Output = ZPolynomial;

    fn sub(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, -c);
        }
        out
    }
}

impl Mul for &ZPolynomial {
    type Output = ZPolynomial;

    fn mul(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::zero();
        for (da, ca) in self.terms() {
            for (db, cb) in rhs.terms() {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (&d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(m: i64) -> LaurentPoly {
        LaurentPoly::quantum_integer(m)
    }

    fn e(n: i64) -> SkeinElement {
        SkeinElement::basis(n)
    }

    #[test]
    fn index_folding() {
        assert_eq!(reduce_index(3), (1, 3));
        assert_eq!(reduce_index(0), (1, 0));
        assert_eq!(reduce_index(-1), (0, 0));
        assert_eq!(reduce_index(-2), (-1, 0));
        assert_eq!(reduce_index(-5), (-1, 3));
        assert!(e(-1).is_zero());
        assert_eq!(e(-2), &SkeinElement::zero() - &e(0));
        assert_eq!(e(-5), &SkeinElement::zero() - &e(3));
    }

    #[test]
    fn admissible_triples() {
        assert!(is_admissible(2, 1, 1));
        assert!(is_admissible(0, 1, 1));
        assert!(!is_admissible(1, 1, 1));
        assert!(!is_admissible(4, 1, 1));
        assert!(!is_admissible(-2, 1, 1));
        assert_eq!(
            AdmissibleTriple::new(1, 2, 3),
            Some(AdmissibleTriple { l: 1, m: 2, n: 3 })
        );
        assert_eq!(AdmissibleTriple::new(2, 2, 3), None);
    }

    #[test]
    fn products_follow_admissible_range() {
        assert_eq!(&e(1) * &e(1), &e(0) + &e(2));
        assert_eq!(&e(2) * &e(3), &(&e(1) + &e(3)) + &e(5));
        assert_eq!(&e(0) * &e(7), e(7));
    }

    #[test]
    fn product_agrees_with_z_polynomial_multiplication() {
        for m in 0..8 {
            for n in 0..8 {
                let product = &e(m) * &e(n);
                let via_z = &e(m).to_z_polynomial() * &e(n).to_z_polynomial();
                assert_eq!(product.to_z_polynomial(), via_z, "e_{m} * e_{n}");
            }
        }
    }

    #[test]
    fn z_polynomial_forms_of_small_basis_elements() {
        // e_2 = z^2 - 1, e_3 = z^3 - 2z.
        let p2 = e(2).to_z_polynomial();
        assert_eq!(p2.coeff(2), LaurentPoly::one());
        assert_eq!(p2.coeff(0), LaurentPoly::monomial(0, -1));
        let p3 = e(3).to_z_polynomial();
        assert_eq!(p3.coeff(3), LaurentPoly::one());
        assert_eq!(p3.coeff(1), LaurentPoly::monomial(0, -2));
        assert_eq!(p3.coeff(0), LaurentPoly::zero());
    }

    #[test]
    fn basis_conversions_are_inverse() {
        let mut a = SkeinElement::zero();
        a.add_term(0, q(2));
        a.add_term(3, -&q(3));
        a.add_term(6, LaurentPoly::monomial(-4, 7));
        assert_eq!(a.to_z_polynomial().to_e_basis(), a);
    }

    #[test]
    fn framing_twist_small_cases() {
        // e_1 -> -A^3 e_1 under one positive twist.
        assert_eq!(
            e(1).framing_twist(1),
            e(1).scalar_mul(&LaurentPoly::monomial(3, -1))
        );
        // e_2 -> A^8 e_2.
        assert_eq!(
            e(2).framing_twist(1),
            e(2).scalar_mul(&LaurentPoly::monomial(8, 1))
        );
        assert_eq!(framing_phase(0, 5), LaurentPoly::one());
    }

    #[test]
    fn closure_values() {
        // <e_n> = (-1)^n [n+1]; in particular the empty diagram closes to 1
        // and e_1 closes to -[2].
        assert_eq!(e(0).close_in_s3(), LaurentPoly::one());
        assert_eq!(e(1).close_in_s3(), -&q(2));
        assert_eq!(e(2).close_in_s3(), q(3));
    }

    #[test]
    fn hopf_pairing_values() {
        assert_eq!(e(1).hopf_pair(&e(1)), q(4));
        assert_eq!(e(1).hopf_pair(&e(2)), -&q(6));
        assert_eq!(e(0).hopf_pair(&e(5)), e(5).close_in_s3());
        // Symmetry.
        let mut a = SkeinElement::zero();
        a.add_term(1, q(2));
        a.add_term(4, LaurentPoly::monomial(2, -3));
        let mut b = SkeinElement::zero();
        b.add_term(0, LaurentPoly::one());
        b.add_term(3, q(3));
        assert_eq!(a.hopf_pair(&b), b.hopf_pair(&a));
    }

    #[test]
    fn encircling_scales_each_basis_element() {
        // Encircling by e_1: eigenvalue -[2(n+1)]/[n+1] = -(A^{2n+2} + A^{-2n-2}).
        let out = encircle(1, &e(1)).unwrap();
        assert_eq!(
            out,
            e(1).scalar_mul(&LaurentPoly::from_terms([(4, -1), (-4, -1)]))
        );
        // Encircling by e_0 is the identity.
        let mut a = SkeinElement::zero();
        a.add_term(2, q(2));
        a.add_term(5, LaurentPoly::monomial(-1, 4));
        assert_eq!(encircle(0, &a).unwrap(), a);
    }

    #[test]
    fn encircling_divides_exactly_for_a_wide_color_range() {
        // [(m+1)(n+1)] is a multiple of [n+1] as a Laurent polynomial, so
        // the eigenvalue is exact for every pair here and encircling a
        // basis element never fails.
        for m in 0..=20 {
            for n in 0..=20 {
                let eigen = encircle(m, &e(n)).unwrap().coeff(n);
                let sign = if m % 2 == 1 { -1 } else { 1 };
                let target = q((m + 1) * (n + 1)).shift_scale(0, &sign.into());
                assert_eq!(&eigen * &q(n + 1), target, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn text_form_round_trips_by_hand() {
        let mut a = SkeinElement::zero();
        a.add_term(0, LaurentPoly::one());
        a.add_term(2, LaurentPoly::monomial(12, -1));
        assert_eq!(a.to_string(), "{0: {0:1}, 2: {12:-1}}");
        let back: SkeinElement = a.to_string().parse().unwrap();
        assert_eq!(back, a);
        assert_eq!("{}".parse::<SkeinElement>().unwrap(), SkeinElement::zero());
    }

    #[test]
    fn text_form_rejects_malformed_input() {
        assert!("{0: {0:1}".parse::<SkeinElement>().is_err());
        assert!("{-2: {0:1}}".parse::<SkeinElement>().is_err());
        assert!("{0: {0:1}, 0: {0:1}}".parse::<SkeinElement>().is_err());
        assert!("0: {0:1}".parse::<SkeinElement>().is_err());
    }

    fn arb_element() -> impl Strategy<Value = SkeinElement> {
        proptest::collection::btree_map(
            0i64..=6,
            proptest::collection::btree_map(-6i64..=6, -5i64..=5, 0..3),
            0..4,
        )
        .prop_map(|m| {
            let mut out = SkeinElement::zero();
            for (n, terms) in m {
                out.add_term(n, LaurentPoly::from_terms(terms));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_unital(a in arb_element(), b in arb_element()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &SkeinElement::one(), a.clone());
        }

        #[test]
        fn multiplication_matches_z_polynomials(a in arb_element(), b in arb_element()) {
            let lhs = (&a * &b).to_z_polynomial();
            let rhs = &a.to_z_polynomial() * &b.to_z_polynomial();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn framing_twists_compose_and_invert(a in arb_element(), b in -3i64..=3) {
            prop_assert_eq!(a.framing_twist(b).framing_twist(-b), a.clone());
            prop_assert_eq!(a.framing_twist(b).framing_twist(b), a.framing_twist(2 * b));
        }

        #[test]
        fn element_text_round_trips(a in arb_element()) {
            let back: SkeinElement = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn e_and_z_bases_convert_back_and_forth(a in arb_element()) {
            prop_assert_eq!(a.to_z_polynomial().to_e_basis(), a.clone());
        }

        #[test]
        fn hopf_pairing_is_symmetric(a in arb_element(), b in arb_element()) {
            prop_assert_eq!(a.hopf_pair(&b), b.hopf_pair(&a));
        }
    }
}
