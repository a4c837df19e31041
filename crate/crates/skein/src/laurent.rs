//! Sparse Laurent polynomials in one variable `A` over arbitrary-precision
//! integers: the ground ring of every computation in this crate.
//!
//! Coefficients are `BigInt` because cable expansions multiply quantum
//! integers whose coefficients grow quickly. The quantum integer
//! `[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2})` and evaluation at the root
//! `A = exp(i*pi / (2(r+1)))` live here because everything downstream needs
//! them.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Numeric value of a Laurent polynomial evaluated at a root of unity.
pub type ComplexValue = Complex64;

/// Errors from exact division and from parsing the text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not exactly divisible by the divisor")]
    NotDivisible,
    #[error("invalid polynomial text: {0}")]
    Parse(String),
}

/// A Laurent polynomial in `A`, stored as a sorted map from exponent to
/// nonzero coefficient. The zero polynomial is the empty map, so equality
/// is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * A^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut poly = Self::zero();
        poly.insert(exp, coeff.into());
        poly
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut poly = Self::zero();
        for (exp, coeff) in terms {
            poly.insert(exp, coeff.into());
        }
        poly
    }

    /// The quantum integer `[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2})`,
    /// expanded as `A^{2m-2} + A^{2m-6} + ... + A^{2-2m}` for `m > 0`,
    /// with `[0] = 0` and `[-m] = -[m]`.
    pub fn quantum_integer(m: i64) -> Self {
        use std::cmp::Ordering;
        match m.cmp(&0) {
            Ordering::Equal => Self::zero(),
            Ordering::Less => -&Self::quantum_integer(-m),
            Ordering::Greater => {
                Self::from_terms((0..m).map(|j| (2 * m - 2 - 4 * j, 1)))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `A^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert(&mut self, exp: i64, delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += delta;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `coeff * A^exp` in place.
    pub fn shift_scale(&self, exp: i64, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// [`LaurentError::NotDivisible`] when no such Laurent polynomial
    /// exists over the integers.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // A quotient, if it exists, has minimum exponent exactly
        // min(self) - min(divisor); long division from the top cannot dip
        // below that.
        let quot_floor = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let lead_exp = divisor.max_exp().unwrap();
        let lead_coeff = divisor.coeff(lead_exp);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rexp) = rem.max_exp() {
            let qexp = rexp - lead_exp;
            if qexp < quot_floor {
                return Err(LaurentError::NotDivisible);
            }
            let rcoeff = rem.coeff(rexp);
            if (&rcoeff % &lead_coeff) != BigInt::zero() {
                return Err(LaurentError::NotDivisible);
            }
            let qcoeff = &rcoeff / &lead_coeff;
            rem = &rem - &divisor.shift_scale(qexp, &qcoeff);
            quot.insert(qexp, qcoeff);
        }
        Ok(quot)
    }

    /// Evaluates at `A = exp(i*pi / (2(r+1)))`, a primitive `4(r+1)`-th root
    /// of unity. Exponents are reduced modulo `4(r+1)` before any floating
    /// point enters, so huge exponents lose no accuracy.
    pub fn evaluate_at_root(&self, r: u32) -> ComplexValue {
        let period = 4 * (i64::from(r) + 1);
        let step = std::f64::consts::PI / (2.0 * (f64::from(r) + 1.0));
        let mut total = ComplexValue::new(0.0, 0.0);
        for (&exp, coeff) in &self.coeffs {
            let angle = exp.rem_euclid(period) as f64 * step;
            let c = coeff.to_f64().unwrap_or(f64::NAN);
            total += ComplexValue::from_polar(c, angle);
        }
        total
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&exp, coeff) in &rhs.coeffs {
            out.insert(exp, coeff.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&exp, coeff) in &rhs.coeffs {
            out.insert(exp, -coeff);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.insert(ea + eb, ca * cb);
            }
        }
        out
    }
}

/// Canonical text form: `{exp:coeff, ...}` in increasing exponent order,
/// `{}` for zero. Example: `[2]` prints as `{-2:1, 2:1}`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (&exp, coeff)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{exp}:{coeff}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| LaurentError::Parse("expected {exp:coeff, ...}".into()))?;
        let mut poly = Self::zero();
        let body = body.trim();
        if body.is_empty() {
            return Ok(poly);
        }
        for part in body.split(',') {
            let (exp_text, coeff_text) = part
                .split_once(':')
                .ok_or_else(|| LaurentError::Parse(format!("missing ':' in term `{part}`")))?;
            let exp: i64 = exp_text
                .trim()
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad exponent `{}`", exp_text.trim())))?;
            let coeff: BigInt = coeff_text
                .trim()
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad coefficient `{}`", coeff_text.trim())))?;
            if poly.coeffs.contains_key(&exp) {
                return Err(LaurentError::Parse(format!("duplicate exponent {exp}")));
            }
            poly.insert(exp, coeff);
        }
        Ok(poly)
    }
}
