use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

use super::{Cyc8, Field, FieldError, RootOfUnityField};

/// GF(p) for a prime p ≡ 1 (mod 8), elements stored as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    omega: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Builds GF(p) and picks ω as the smallest residue of multiplicative
    /// order exactly 8.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p % 8 != 1 {
            return Err(FieldError::NoEighthRoot { p, rem: p % 8 });
        }
        // p < 2^32 keeps every product inside u64.
        if p >= 1 << 32 {
            return Err(FieldError::Unrecognized(p.to_string()));
        }
        let mut field = PrimeField { p, omega: 0 };
        // x has order exactly 8 iff x^4 = -1.
        field.omega =
            (2..p).find(|&x| field.pow(&x, 4) == p - 1).expect("p ≡ 1 mod 8 guarantees an element of order 8");
        Ok(field)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Image of a Q(ζ₈) element under ζ ↦ ω.
    pub fn reduce_cyclotomic(&self, e: &Cyc8) -> Result<u64, FieldError> {
        let mut acc = 0u64;
        for (k, c) in e.coeffs().iter().enumerate() {
            let term = self.reduce_rational(c)?;
            acc = self.add(&acc, &self.mul(&term, &self.omega_pow(k as i64)));
        }
        Ok(acc)
    }

    fn reduce_rational(&self, q: &BigRational) -> Result<u64, FieldError> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().unwrap();
        let den = q.denom().mod_floor(&p).to_u64().unwrap();
        let inv = self.inv(&den).map_err(|_| FieldError::BadReduction { value: q.to_string(), p: self.p })?;
        debug_assert!(!q.denom().is_negative());
        Ok(self.mul(&num, &inv))
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::InverseOfZero);
        }
        Ok(self.pow(a, self.p - 2))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn sample_set_size(&self) -> u64 {
        self.p
    }

    fn elements(&self) -> Option<Vec<u64>> {
        (self.p <= 1 << 16).then(|| (0..self.p).collect())
    }
}

impl RootOfUnityField for PrimeField {
    fn omega(&self) -> u64 {
        self.omega
    }
}
