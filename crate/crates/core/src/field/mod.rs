//! Exact fields carrying a designated primitive eighth root of unity.
//!
//! Two backends implement [`RootOfUnityField`]: prime fields GF(p) with
//! p ≡ 1 (mod 8) ([`PrimeField`]) and the cyclotomic field Q(ζ₈)
//! ([`Cyclotomic8`]). [`Gf2`] implements only [`Field`]; it exists for the
//! characteristic-2 special case, where there is no eighth root of unity to
//! speak of.

mod cyclotomic;
mod gf2;
mod prime;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

pub use cyclotomic::{Cyc8, Cyclotomic8};
pub use gf2::Gf2;
pub use prime::PrimeField;

/// Default modulus for closed-form and oracle sweeps.
pub const DEFAULT_PRIME: u64 = 17;

/// Modulus used for randomized non-singularity sampling.
pub const SAMPLING_PRIME: u64 = 65537;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 has no primitive eighth root of unity")]
    CharacteristicTwo,
    #[error("{p} mod 8 = {rem}; a primitive eighth root of unity needs p ≡ 1 (mod 8)")]
    NoEighthRoot { p: u64, rem: u64 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("cannot reduce {value} modulo {p}: denominator divisible by p")]
    BadReduction { value: String, p: u64 },
    #[error("unrecognized field {0:?}; expected a prime like 17 or `cyclotomic`")]
    Unrecognized(String),
}

/// Arithmetic over an exact field.
///
/// Contexts are cheap to clone and immutable; elements are plain values.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Short human-readable name, e.g. `GF(17)`.
    fn name(&self) -> String;

    /// Draws a uniform element from a fixed finite sample set of this field.
    ///
    /// For finite fields the sample set is the whole field; infinite fields
    /// pick some finite subset. Its size is [`Field::sample_set_size`], the
    /// denominator in the Schwartz–Zippel bound.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn sample_set_size(&self) -> u64;

    /// Enumerates every element, for fields small enough to exhaust.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// A field with a designated primitive eighth root of unity ω.
pub trait RootOfUnityField: Field {
    fn omega(&self) -> Self::Elem;

    /// ω^k with the exponent reduced mod 8; negative exponents allowed.
    fn omega_pow(&self, k: i64) -> Self::Elem {
        self.pow(&self.omega(), k.rem_euclid(8) as u64)
    }
}

/// Which backend to build; parsed from `17`, `65537`, `cyclotomic`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Cyclotomic,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl FieldSpec {
    /// Checks the spec without keeping the context around.
    pub fn validate(self) -> Result<Self, FieldError> {
        if let FieldSpec::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "cyclotomic" | "cyc" | "q(zeta8)" | "qzeta8" => Ok(FieldSpec::Cyclotomic),
            _ => {
                let p = t
                    .strip_prefix("gf(")
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(&t)
                    .parse::<u64>()
                    .map_err(|_| FieldError::Unrecognized(s.to_string()))?;
                FieldSpec::Prime(p).validate()
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Cyclotomic => f.write_str("Q(ζ8)"),
        }
    }
}
