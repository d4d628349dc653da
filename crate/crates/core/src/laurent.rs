//! Integer Laurent polynomials in the variable `t`, with exponents stored in
//! quarter-units so that `A = t^{-1/4}` powers are integer exponents too.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Sparse Laurent polynomial over the integers.
///
/// A stored exponent `e` represents `t^{e/4} = A^{-e}`. The zero polynomial
/// is the empty term map and no zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::from(1))
    }

    /// `coeff * t^{e4/4}`.
    pub fn monomial(e4: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e4, coeff);
        }
        Self { terms }
    }

    /// `A^k = t^{-k/4}`.
    pub fn a_power(k: i64) -> Self {
        Self::monomial(-k, BigInt::from(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, e4: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(e4).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&e4);
        }
    }

    pub fn coeff(&self, e4: i64) -> BigInt {
        self.terms.get(&e4).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Minimum stored exponent (quarter-units). `None` for the zero polynomial.
    pub fn min_exp4(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Maximum stored exponent (quarter-units). `None` for the zero polynomial.
    pub fn max_exp4(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `(d_min, d_max, span4)` where the degrees are in `t` (so quarter-unit
    /// exponents divided by 4, returned as reduced fractions `(num, 4)`), and
    /// `span4 = 4 d_max - 4 d_min` is an integer.
    pub fn degree_span(&self) -> Result<(Frac4, Frac4, i64)> {
        let lo = self.min_exp4().ok_or(Error::UndefinedDegree)?;
        let hi = self.max_exp4().ok_or(Error::UndefinedDegree)?;
        Ok((Frac4(lo), Frac4(hi), hi - lo))
    }

    /// Substitution `t -> t^{-1}`: negate every exponent.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * coeff)).collect(),
        }
    }

    /// Multiply by the monomial `coeff * t^{e4/4}`.
    pub fn mul_monomial(&self, e4: i64, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + e4, c * coeff)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.terms.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in self.terms.iter() {
            for (&e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

/// An exponent in quarter-units of `t`, displayed as a reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Frac4(pub i64);

impl Frac4 {
    pub fn numer(&self) -> i64 {
        let g = gcd4(self.0);
        self.0 / g
    }

    pub fn denom(&self) -> i64 {
        4 / gcd4(self.0)
    }
}

fn gcd4(n: i64) -> i64 {
    if n % 4 == 0 {
        4
    } else if n % 2 == 0 {
        2
    } else {
        1
    }
}

impl fmt::Display for Frac4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                use alloc::format;
                if e == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*t^({})", Frac4(e))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn t(e4: i64) -> LaurentPoly {
        LaurentPoly::monomial(e4, BigInt::from(1))
    }

    #[test]
    fn add_cancels() {
        // (t + 1) + (-1) = t
        let p = &t(4) + &LaurentPoly::one();
        let q = -&LaurentPoly::one();
        assert_eq!(&p + &q, t(4));
    }

    #[test]
    fn add_identity() {
        let p = &t(2) + &t(-6);
        assert_eq!(&LaurentPoly::zero() + &p, p);
    }

    #[test]
    fn add_like_terms() {
        let half = t(2); // t^{1/2}
        assert_eq!(&half + &half, LaurentPoly::monomial(2, BigInt::from(2)));
    }

    #[test]
    fn mul_binomial() {
        // (t^{1/2} + t^{-1/2})^2 = t + 2 + t^{-1}
        let p = &t(2) + &t(-2);
        let expected = LaurentPoly::from_terms([
            (4, BigInt::from(1)),
            (0, BigInt::from(2)),
            (-4, BigInt::from(1)),
        ]);
        assert_eq!(p.pow(2), expected);
    }

    #[test]
    fn mul_identity_and_zero() {
        let p = &t(3) + &t(-5);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert_eq!(&p * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn mul_direct_expansion() {
        // (t^{-1/2} - t^{1/2}) * t^{1/2} = 1 - t
        let p = &t(-2) + &(-&t(2));
        let expected = &LaurentPoly::one() + &(-&t(4));
        assert_eq!(&p * &t(2), expected);
    }

    #[test]
    fn degree_span_unknot_n2() {
        // t^{1/2} + t^{-1/2}: degrees (-1/2, 1/2), span4 = 4
        let p = &t(2) + &t(-2);
        let (lo, hi, span) = p.degree_span().unwrap();
        assert_eq!((lo.numer(), lo.denom()), (-1, 2));
        assert_eq!((hi.numer(), hi.denom()), (1, 2));
        assert_eq!(span, 4);
    }

    #[test]
    fn degree_span_constant() {
        let (lo, hi, span) = LaurentPoly::one().degree_span().unwrap();
        assert_eq!((lo.0, hi.0, span), (0, 0, 0));
    }

    #[test]
    fn degree_span_zero_errors() {
        assert_eq!(LaurentPoly::zero().degree_span(), Err(Error::UndefinedDegree));
    }

    #[test]
    fn display_sorted() {
        let p = LaurentPoly::from_terms([
            (4, BigInt::from(-1)),
            (0, BigInt::from(2)),
            (-2, BigInt::from(3)),
        ]);
        assert_eq!(format!("{p}"), "3*t^(-1/2) + 2 + -1*t^(1)");
    }
}
