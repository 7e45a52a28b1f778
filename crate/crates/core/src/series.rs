//! Truncated Laurent and power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] stores the finitely many known coefficients of a
//! formal series in one of three variables, from a (possibly negative)
//! minimum exponent up to an explicit, exclusive truncation order. Ring
//! operations propagate the truncation order pessimistically: a result never
//! reports a coefficient that the operands do not determine.
//!
//! Negative exponents are permitted for the `epsilon` variable only; series
//! in `beta` and `z` are plain power series.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The formal variable of a series.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    Epsilon,
    Beta,
    Z,
}

impl Variable {
    /// Only the epsilon variable supports Laurent tails.
    pub fn allows_negative_exponents(self) -> bool {
        matches!(self, Variable::Epsilon)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Variable::Epsilon => "epsilon",
            Variable::Beta => "beta",
            Variable::Z => "z",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Finitely many exact coefficients of a formal series, plus the exclusive
/// exponent bound `order` ("`O(var^order)`").
///
/// Invariants: the coefficient list spans exactly `min_exp..order`, the
/// leading stored coefficient is nonzero (leading zeros are trimmed into a
/// larger `min_exp`), and a series that is zero on its whole window has
/// `min_exp == order` with an empty list.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    var: Variable,
    min_exp: i64,
    order: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Build a series from the coefficients of `var^min_exp ..`; the
    /// truncation order is `min_exp + coeffs.len()`.
    pub fn new(var: Variable, min_exp: i64, coeffs: Vec<Rational>) -> Result<Self> {
        let order = min_exp + coeffs.len() as i64;
        Self::assemble(var, min_exp, order, coeffs)
    }

    fn assemble(var: Variable, mut min_exp: i64, order: i64, mut coeffs: Vec<Rational>) -> Result<Self> {
        debug_assert_eq!(min_exp + coeffs.len() as i64, order);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            coeffs.drain(..lead);
            min_exp += lead as i64;
        }
        if coeffs.is_empty() {
            min_exp = order;
        } else if min_exp < 0 && !var.allows_negative_exponents() {
            return Err(Error::NegativeExponent(var));
        }
        Ok(TruncatedSeries { var, min_exp, order, coeffs })
    }

    /// The zero series, known to vanish below `order`.
    pub fn zero(var: Variable, order: i64) -> Self {
        TruncatedSeries { var, min_exp: order, order, coeffs: Vec::new() }
    }

    pub fn constant(var: Variable, value: Rational, order: i64) -> Self {
        if order <= 0 || value.is_zero() {
            return Self::zero(var, order);
        }
        let mut coeffs = vec![Rational::zero(); order as usize];
        coeffs[0] = value;
        Self::assemble(var, 0, order, coeffs).expect("constant series is valid")
    }

    pub fn one(var: Variable, order: i64) -> Self {
        Self::constant(var, Rational::one(), order)
    }

    /// `value * var^exp`, truncated at `order`.
    pub fn monomial(var: Variable, value: Rational, exp: i64, order: i64) -> Result<Self> {
        if exp >= order || value.is_zero() {
            return Ok(Self::zero(var, order));
        }
        let mut coeffs = vec![Rational::zero(); (order - exp) as usize];
        coeffs[0] = value;
        Self::assemble(var, exp, order, coeffs)
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    /// Lowest exponent with a stored coefficient; equals `order` for a
    /// series that vanishes on its window.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Exclusive upper exponent bound: the series is `O(var^order)` beyond
    /// the stored window.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero_on_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `var^exp`. Exponents below the window are exact
    /// zeros; exponents at or above `order` are not determined.
    ///
    /// Panics when `exp >= order`; use [`Self::try_coeff`] to probe.
    pub fn coeff(&self, exp: i64) -> Rational {
        self.try_coeff(exp)
            .unwrap_or_else(|| panic!("coefficient of {}^{} is beyond O({}^{})", self.var, exp, self.var, self.order))
    }

    pub fn try_coeff(&self, exp: i64) -> Option<Rational> {
        if exp >= self.order {
            return None;
        }
        if exp < self.min_exp {
            return Some(Rational::zero());
        }
        Some(self.coeffs[(exp - self.min_exp) as usize].clone())
    }

    /// Leading (lowest-exponent) nonzero term, if there is one in the window.
    pub fn leading(&self) -> Option<(i64, &Rational)> {
        self.coeffs.first().map(|c| (self.min_exp, c))
    }

    /// Coefficients of the window `min_exp..order` in exponent order.
    pub fn window(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Forget coefficients at or above `new_order`. Information is never
    /// invented: orders can only shrink.
    pub fn truncated_to(&self, new_order: i64) -> Self {
        if new_order >= self.order {
            return self.clone();
        }
        let keep = (new_order - self.min_exp).max(0) as usize;
        let coeffs = self.coeffs[..keep.min(self.coeffs.len())].to_vec();
        Self::assemble(self.var, self.min_exp.min(new_order), new_order, coeffs)
            .expect("truncation preserves validity")
    }

    /// Multiply by `var^shift`.
    pub fn shifted(&self, shift: i64) -> Result<Self> {
        Self::assemble(self.var, self.min_exp + shift, self.order + shift, self.coeffs.clone())
    }

    /// Multiply every coefficient by an exact scalar.
    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var, self.order);
        }
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Self::assemble(self.var, self.min_exp, self.order, coeffs).expect("scaling preserves validity")
    }

    pub fn neg(&self) -> Self {
        self.scaled(&Rational::from_int(-1))
    }

    fn check_var(&self, rhs: &Self) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::VariableMismatch(self.var, rhs.var));
        }
        Ok(())
    }

    /// Sum, truncated at the tighter of the two orders.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let min_exp = self.min_exp.min(rhs.min_exp).min(order);
        let len = (order - min_exp) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let exp = min_exp + k as i64;
            let mut v = self.try_coeff(exp).unwrap_or_else(Rational::zero);
            if let Some(w) = rhs.try_coeff(exp) {
                v += &w;
            }
            *c = v;
        }
        Self::assemble(self.var, min_exp, order, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// Product. The result order is the tightest bound implied by the
    /// operands: `min(a.order + b.min_exp, b.order + a.min_exp)`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let min_exp = self.min_exp + rhs.min_exp;
        let order = (self.order + rhs.min_exp).min(rhs.order + self.min_exp);
        if order <= min_exp {
            return Ok(Self::zero(self.var, order));
        }
        let len = (order - min_exp) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let exp = self.min_exp + i as i64 + rhs.min_exp + j as i64;
                if exp >= order {
                    break;
                }
                coeffs[(exp - min_exp) as usize] += &(a * b);
            }
        }
        Self::assemble(self.var, min_exp, order, coeffs)
    }

    /// Multiplicative inverse of a series whose lowest stored coefficient is
    /// nonzero. For an operand with valuation `v` and order `o` the inverse
    /// has valuation `-v` and order `o - 2v`, so that
    /// `a * a^{-1} = 1 + O(var^{o - v})`.
    pub fn inverse(&self) -> Result<Self> {
        let (v, lead) = match self.leading() {
            Some((v, c)) => (v, c.clone()),
            None => return Err(Error::InvertZeroSeries),
        };
        let len = self.coeffs.len();
        let lead_inv = lead.inverse().expect("leading coefficient is nonzero");
        // unit = self / (lead * var^v), inverted by the standard recurrence
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c * &lead_inv).collect();
        let mut inv = vec![Rational::zero(); len];
        inv[0] = Rational::one();
        for k in 1..len {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let term = &unit[j] * &inv[k - j];
                acc -= &term;
            }
            inv[k] = acc;
        }
        let coeffs: Vec<Rational> = inv.iter().map(|c| c * &lead_inv).collect();
        Self::assemble(self.var, -v, self.order - 2 * v, coeffs)
    }

    /// Exponential of a series with zero constant term and no negative
    /// exponents. Satisfies `exp(a) * exp(-a) = 1 + O(var^order)`.
    pub fn exp(&self) -> Result<Self> {
        if self.is_zero_on_window() {
            return Ok(Self::one(self.var, self.order));
        }
        if self.min_exp <= 0 {
            return Err(Error::ExpPrecondition);
        }
        let mut result = Self::one(self.var, self.order);
        let mut term = Self::one(self.var, self.order);
        let mut k: i64 = 1;
        while (k - 1) * self.min_exp < self.order {
            term = term.mul(self)?.scaled(&Rational::ratio(1, k));
            if term.is_zero_on_window() {
                break;
            }
            result = result.add(&term)?;
            k += 1;
        }
        Ok(result.truncated_to(self.order))
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.min_exp != 0 || !self.coeffs.first().is_some_and(|c| c.is_one()) {
            return Err(Error::LogPrecondition);
        }
        let g = self.sub(&Self::one(self.var, self.order))?;
        if g.is_zero_on_window() {
            return Ok(Self::zero(self.var, self.order));
        }
        let mut result = Self::zero(self.var, self.order);
        let mut power = Self::one(self.var, self.order);
        let mut k: i64 = 1;
        while (k - 1) * g.min_exp() < self.order {
            power = power.mul(&g)?;
            if power.is_zero_on_window() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scaled(&Rational::ratio(sign, k)))?;
            k += 1;
        }
        Ok(result.truncated_to(self.order))
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Result<Self> {
        if exp == 0 {
            return Ok(Self::one(self.var, self.order));
        }
        let mut result = self.clone();
        for _ in 1..exp {
            result = result.mul(self)?;
        }
        Ok(result)
    }

    /// Substitute `var -> factor * new_var`, i.e. rescale the k-th
    /// coefficient by `factor^k`. Defined for power series only.
    pub fn substitute(&self, new_var: Variable, factor: &Rational) -> Result<Self> {
        if self.min_exp < 0 {
            return Err(Error::NegativeExponent(self.var));
        }
        if factor.is_zero() {
            let constant = self.try_coeff(0).unwrap_or_else(Rational::zero);
            return Ok(Self::constant(new_var, constant, self.order));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * &factor.pow((self.min_exp + k as i64) as i32))
            .collect();
        Self::assemble(new_var, self.min_exp, self.order, coeffs)
    }

    /// True when the two series agree exactly on every exponent both
    /// windows determine.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        if self.var != rhs.var {
            return false;
        }
        let hi = self.order.min(rhs.order);
        let lo = self.min_exp.min(rhs.min_exp);
        (lo..hi).all(|k| self.try_coeff(k) == rhs.try_coeff(k))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min_exp + i as i64;
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}*{}", self.var)?,
                _ if mag.is_one() => write!(f, "{}^{}", self.var, exp)?,
                _ => write!(f, "{mag}*{}^{}", self.var, exp)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            var: Variable,
            min_exp: i64,
            order: i64,
            coeffs: Vec<Rational>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.min_exp + repr.coeffs.len() as i64 != repr.order {
            return Err(serde::de::Error::custom("coefficient count must equal order - min_exp"));
        }
        TruncatedSeries::assemble(repr.var, repr.min_exp, repr.order, repr.coeffs)
            .map_err(serde::de::Error::custom)
    }
}

/// `e^{x * var} - 1` truncated at `order`; the lowest term is `x * var`.
///
/// With `q = e^{-var}` this is the expansion of `q^{-x} - 1`.
pub fn exp_minus_one(var: Variable, x: i64, order: i64) -> Result<TruncatedSeries> {
    if x <= 0 {
        return Err(Error::NonPositiveExponent(x));
    }
    exp_scaled_tail(var, Rational::from_int(x), order)
}

/// `1 - e^{-x * var}` truncated at `order`; the lowest term is `x * var`.
///
/// With `q = e^{-var}` this is the expansion of `1 - q^{x}`.
pub fn one_minus_exp_neg(var: Variable, x: i64, order: i64) -> Result<TruncatedSeries> {
    if x <= 0 {
        return Err(Error::NonPositiveExponent(x));
    }
    Ok(exp_scaled_tail(var, Rational::from_int(-x), order)?.neg())
}

/// `e^{scale * var}` truncated at `order`.
pub fn exponential(var: Variable, scale: &Rational, order: i64) -> TruncatedSeries {
    let one = TruncatedSeries::one(var, order);
    match exp_scaled_tail(var, scale.clone(), order) {
        Ok(tail) => one.add(&tail).expect("same variable"),
        Err(_) => one,
    }
}

/// `e^{scale * var} - 1`: coefficients `scale^k / k!` for `k >= 1`.
fn exp_scaled_tail(var: Variable, scale: Rational, order: i64) -> Result<TruncatedSeries> {
    if order <= 1 {
        return Ok(TruncatedSeries::zero(var, order));
    }
    let mut coeffs = Vec::with_capacity((order - 1) as usize);
    let mut term = Rational::one();
    for k in 1..order {
        term = term * &scale;
        term = term.checked_div(&Rational::from_int(k))?;
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(var, 1, coeffs)
}
