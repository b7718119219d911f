//! Dense integer-coefficient polynomials in the single parameter `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial over ℤ in `t`, dense, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable `t`.
    pub fn var() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when the polynomial is a single term `c*t^k`.
    pub fn is_monomial_term(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide all coefficients by `d` (must divide exactly).
    pub fn div_scalar_exact(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        self.div_scalar_exact(&c)
    }

    /// Exact division with an integer quotient; panics when inexact.
    /// (Exactness holds when dividing by a gcd factor: Gauss's lemma.)
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().expect("nonzero");
        assert!(nd >= dd, "inexact polynomial division");
        let dl = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(&dl);
            assert!(r.is_zero(), "non-integral quotient");
            quot[k - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * dc;
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    /// Long division over ℚ: returns (quotient, remainder) as rational coeff vectors.
    fn divrem_rational(&self, d: &Self) -> (Vec<BigRational>, Vec<BigRational>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let dd = d.degree().unwrap();
        let dl = BigRational::from_integer(d.leading());
        let n = self.coeffs.len();
        if n == 0 || n - 1 < dd {
            return (vec![], rem);
        }
        let mut quot = vec![BigRational::zero(); n - dd];
        for k in (dd..n).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let q = &c / &dl;
            quot[k - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let delta = &q * BigRational::from_integer(dc.clone());
                rem[k - dd + j] -= delta;
            }
        }
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        (quot, rem)
    }

    /// Primitive gcd over ℚ[t], returned as a primitive integer polynomial
    /// with positive leading coefficient. gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.positive_leading();
        }
        if b.is_zero() {
            return a.positive_leading();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.primitive_part().positive_leading();
            }
            // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let shift = (da - db + 1) as u32;
            let scaled = a.mul_scalar(&b.leading().pow(shift));
            let (_, r) = scaled.divrem_rational(&b);
            let r_int = IntPoly::from_coeffs(
                r.iter()
                    .map(|c| {
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect(),
            );
            a = b;
            b = r_int.primitive_part();
        }
    }

    fn positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Multiplicity of the factor `t` : index of the first nonzero coefficient.
    pub fn mult_at_t(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicity of the factor `t-1`, by repeated synthetic division at 1.
    pub fn mult_at_t_minus_1(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut m = 0usize;
        loop {
            // synthetic division by (t - 1): remainder is p(1)
            let mut acc = BigInt::zero();
            let mut q = vec![BigInt::zero(); p.coeffs.len().saturating_sub(1)];
            for k in (0..p.coeffs.len()).rev() {
                acc = &acc + &p.coeffs[k];
                if k > 0 {
                    q[k - 1] = acc.clone();
                }
            }
            if acc.is_zero() {
                m += 1;
                p = IntPoly::from_coeffs(q);
                if p.is_zero() {
                    // should not happen: finite multiplicity for nonzero p
                    return Some(m);
                }
            } else {
                return Some(m);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !unit_mag {
                    write!(f, "{}*", mag)?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (t^2 - 1) and (t - 1) share (t - 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn multiplicity_at_both_primes() {
        // (t-1)^2 (t+1) = t^3 - t^2 - t + 1
        let q = p(&[1, -1, -1, 1]);
        assert_eq!(q.mult_at_t_minus_1(), Some(2));
        assert_eq!(q.mult_at_t(), Some(0));
        let r = p(&[0, 0, 3]);
        assert_eq!(r.mult_at_t(), Some(2));
    }

    #[test]
    fn display_roundtrip_shape() {
        let q = p(&[1, -2, 1]);
        assert_eq!(q.to_string(), "t^2-2*t+1");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[0, 2]).to_string(), "2*t");
    }
}
