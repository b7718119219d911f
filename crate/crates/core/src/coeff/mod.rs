//! Exact arithmetic in ℚ(t), ground rings ℚ[t] and ℚ[t,t⁻¹], and valuations
//! at a designated prime.

mod parse;
mod poly;
mod ratfunc;

pub use parse::{parse_ratfunc, tokenize, ParseError, Tok};
pub use poly::IntPoly;
pub use ratfunc::{CoeffError, RatFunc, Valuation};

use serde::{Deserialize, Serialize};

/// Admissible primes of the ground rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Prime {
    /// the prime `t` (only in ℚ[t])
    #[serde(rename = "t")]
    T,
    /// the prime `t-1` (in both rings; `q-1` in Laurent notation)
    #[serde(rename = "t-1")]
    TMinus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Polynomial,
    Laurent,
}

/// A one-parameter ground ring with a designated prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundRing {
    pub kind: RingKind,
    pub prime: Prime,
}

impl GroundRing {
    /// ℚ[t, t⁻¹] with prime t−1; `t` is a unit there, so `t` is not admissible.
    pub fn laurent() -> Self {
        GroundRing { kind: RingKind::Laurent, prime: Prime::TMinus1 }
    }

    pub fn polynomial(prime: Prime) -> Self {
        GroundRing { kind: RingKind::Polynomial, prime }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.kind == RingKind::Laurent && self.prime == Prime::T {
            return Err("t is a unit of the Laurent ring, not a prime".into());
        }
        Ok(())
    }

    /// The prime as a rational function.
    pub fn prime_elem(&self) -> RatFunc {
        match self.prime {
            Prime::T => RatFunc::var(),
            Prime::TMinus1 => &RatFunc::var() - &RatFunc::one(),
        }
    }

    /// The specialization point at which the prime vanishes.
    pub fn classical_point(&self) -> num_rational::BigRational {
        use num_bigint::BigInt;
        match self.prime {
            Prime::T => num_rational::BigRational::from_integer(BigInt::from(0)),
            Prime::TMinus1 => num_rational::BigRational::from_integer(BigInt::from(1)),
        }
    }
}

/// Shorthand used heavily by presets and tests: parse a rational function.
pub fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap_or_else(|e| panic!("bad rational function {:?}: {}", s, e))
}
