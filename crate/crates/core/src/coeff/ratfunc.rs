//! Exact rational functions in `t` over ℚ, with valuations at a prime of the
//! ground ring and evaluation maps.

use super::poly::IntPoly;
use super::{GroundRing, Prime, RingKind};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Valuation value: finite order or +∞ (for the zero element).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Valuation {
    pub fn at_least(&self, n: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => *v >= n,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point {0}")]
    Pole(String),
}

/// Reduced fraction of integer polynomials in `t`.
///
/// Canonical form: numerator and denominator coprime over ℚ, joint integer
/// content 1, denominator with positive leading coefficient, zero = 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // the polynomial gcd is primitive, so contents survive; balance them
        let cn = self.num.content();
        let cd = self.den.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            self.num = self.num.div_scalar_exact(&c);
            self.den = self.den.div_scalar_exact(&c);
        }
        if self.den.leading().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc { num: IntPoly::constant(BigInt::from(n)), den: IntPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    /// The parameter `t` (alias `q` over Laurent rings, `nu` over polynomial ones).
    pub fn var() -> Self {
        RatFunc::from_poly(IntPoly::var())
    }

    /// `t^k` for any integer k.
    pub fn var_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(IntPoly::monomial(BigInt::one(), k as usize))
        } else {
            RatFunc::new(IntPoly::one(), IntPoly::monomial(BigInt::one(), (-k) as usize))
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a constant rational.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(BigRational::new_raw(self.num.coeff(0), self.den.coeff(0)).reduced())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self, CoeffError> {
        if k == 0 {
            return Ok(RatFunc::one());
        }
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Order of the ring prime in this element (numerator minus denominator
    /// multiplicity); +∞ for zero.
    pub fn valuation(&self, prime: Prime) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let (mn, md) = match prime {
            Prime::T => (self.num.mult_at_t().unwrap(), self.den.mult_at_t().unwrap()),
            Prime::TMinus1 => {
                (self.num.mult_at_t_minus_1().unwrap(), self.den.mult_at_t_minus_1().unwrap())
            }
        };
        Valuation::Finite(mn as i64 - md as i64)
    }

    /// Membership test `self ∈ prime^n · R` for the given ground ring and n ≥ 0:
    /// the valuation must reach n and the reduced denominator must be a unit.
    pub fn in_prime_power(&self, n: i64, ring: &GroundRing) -> bool {
        if self.is_zero() {
            return true;
        }
        self.valuation(ring.prime).at_least(n) && ring.is_unit_denominator(&self.den)
    }

    /// Membership in the ground ring itself.
    pub fn in_ring(&self, ring: &GroundRing) -> bool {
        self.in_prime_power(0, ring)
    }

    /// Exact division by `prime^n` (n may be negative to multiply).
    pub fn shift_prime(&self, n: i64, prime: Prime) -> Self {
        let p = match prime {
            Prime::T => RatFunc::var(),
            Prime::TMinus1 => &RatFunc::var() - &RatFunc::one(),
        };
        let pn = p.pow(-n).expect("prime is nonzero");
        self * &pn
    }

    pub fn evaluate_at(&self, point: &BigRational) -> Result<BigRational, CoeffError> {
        let dv = self.den.eval(point);
        if dv.is_zero() {
            return Err(CoeffError::Pole(point.to_string()));
        }
        Ok(self.num.eval(point) / dv)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // a denominator prints bare only when it is a single atom (constant
        // or t^k with unit coefficient); otherwise `/` would bind wrongly
        let den_str = format!("{}", self.den);
        let bare = self.den.is_constant() && !self.den.leading().is_negative()
            || (self.den.is_monomial_term() && self.den.leading().is_one());
        if bare {
            write!(f, "({})/{}", self.num, den_str)
        } else {
            write!(f, "({})/({})", self.num, den_str)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl RingKind {
    fn is_unit_den(&self, den: &IntPoly) -> bool {
        match self {
            RingKind::Polynomial => den.is_constant(),
            RingKind::Laurent => den.is_monomial_term(),
        }
    }
}

impl GroundRing {
    pub fn is_unit_denominator(&self, den: &IntPoly) -> bool {
        self.kind.is_unit_den(den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rf;

    #[test]
    fn factor_cancellation() {
        // (t^2-1)/(t-1) = t+1
        let a = rf("(t^2-1)/(t-1)");
        assert_eq!(a, rf("t+1"));
        // (1/(t-1)) * (t-1)^2 = t-1
        let b = &rf("1/(t-1)") * &rf("(t-1)^2");
        assert_eq!(b, rf("t-1"));
    }

    #[test]
    fn valuations() {
        let laurent = GroundRing::laurent();
        let c = rf("(t-1)^2*(t+1)");
        assert_eq!(c.valuation(Prime::TMinus1), Valuation::Finite(2));
        assert_eq!(RatFunc::zero().valuation(Prime::TMinus1), Valuation::Infinite);
        let d = rf("(t^2-2*t+1)/t^3");
        assert_eq!(d.valuation(Prime::TMinus1), Valuation::Finite(2));
        assert!(d.in_prime_power(2, &laurent));
    }

    #[test]
    fn prime_power_membership() {
        let laurent = GroundRing::laurent();
        assert!(rf("(t-1)^2/t").in_prime_power(2, &laurent));
        assert!(!rf("(t-1)/(t+1)").in_prime_power(1, &laurent));
        assert!(!rf("1/(t-1)").in_prime_power(0, &laurent));
        let poly = GroundRing::polynomial(Prime::T);
        assert!(rf("t^2").in_prime_power(2, &poly));
        assert!(!rf("t/(t-1)").in_prime_power(1, &poly));
    }

    #[test]
    fn evaluation() {
        use num_bigint::BigInt;
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            rf("(t^2-1)/(t-1)").evaluate_at(&one).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
        assert!(rf("(t+1)/(t-1)").evaluate_at(&one).is_err());
        assert!(rf("(t-1)^3/2").evaluate_at(&one).unwrap().is_zero());
    }
}
