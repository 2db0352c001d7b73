use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, FieldError, RootOfUnityField, SAMPLING_PRIME};

/// The cyclotomic field Q(ζ₈) = Q[ζ]/(ζ⁴ + 1), with ω = ζ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cyclotomic8;

/// c₀ + c₁ζ + c₂ζ² + c₃ζ³ with rational coefficients in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyc8 {
    c: [BigRational; 4],
}

impl Cyc8 {
    pub fn new(c: [BigRational; 4]) -> Self {
        Cyc8 { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyc8 { c: c.map(|v| BigRational::from_integer(BigInt::from(v))) }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Galois automorphism ζ ↦ ζ⁵ = −ζ.
    fn conj5(&self) -> Cyc8 {
        let [a, b, c, d] = &self.c;
        Cyc8 { c: [a.clone(), -b, c.clone(), -d] }
    }
}

impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => "",
                1 => "ζ",
                2 => "ζ^2",
                _ => "ζ^3",
            };
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(mono)?;
        }
        Ok(())
    }
}

impl Field for Cyclotomic8 {
    type Elem = Cyc8;

    fn zero(&self) -> Cyc8 {
        Cyc8::from_ints([0; 4])
    }

    fn one(&self) -> Cyc8 {
        Cyc8::from_ints([1, 0, 0, 0])
    }

    fn from_i64(&self, v: i64) -> Cyc8 {
        Cyc8::from_ints([v, 0, 0, 0])
    }

    fn add(&self, a: &Cyc8, b: &Cyc8) -> Cyc8 {
        Cyc8 { c: std::array::from_fn(|k| &a.c[k] + &b.c[k]) }
    }

    fn sub(&self, a: &Cyc8, b: &Cyc8) -> Cyc8 {
        Cyc8 { c: std::array::from_fn(|k| &a.c[k] - &b.c[k]) }
    }

    fn mul(&self, a: &Cyc8, b: &Cyc8) -> Cyc8 {
        let mut out: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                // ζ⁴ = −1
                if i + j < 4 {
                    out[i + j] += t;
                } else {
                    out[i + j - 4] -= t;
                }
            }
        }
        Cyc8 { c: out }
    }

    fn neg(&self, a: &Cyc8) -> Cyc8 {
        Cyc8 { c: std::array::from_fn(|k| -&a.c[k]) }
    }

    fn inv(&self, a: &Cyc8) -> Result<Cyc8, FieldError> {
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        // a·σ₅(a) lies in Q(i) = Q(ζ²); multiply by its conjugate to reach Q.
        let s = a.conj5();
        let b = self.mul(a, &s);
        let [b0, _, b2, _] = &b.c;
        let norm = b0 * b0 + b2 * b2;
        let bconj = Cyc8 { c: [b0.clone(), BigRational::zero(), -b2, BigRational::zero()] };
        let num = self.mul(&s, &bconj);
        Ok(Cyc8 { c: std::array::from_fn(|k| &num.c[k] / &norm) })
    }

    fn is_zero(&self, a: &Cyc8) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        "Q(ζ8)".to_string()
    }

    /// Rational integers 0..65537, matching the sample-set size of the
    /// large prime backend.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Cyc8 {
        self.from_i64(rng.gen_range(0..SAMPLING_PRIME as i64))
    }

    fn sample_set_size(&self) -> u64 {
        SAMPLING_PRIME
    }
}

impl RootOfUnityField for Cyclotomic8 {
    fn omega(&self) -> Cyc8 {
        Cyc8::from_ints([0, 1, 0, 0])
    }
}
