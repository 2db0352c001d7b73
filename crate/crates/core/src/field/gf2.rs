use rand::Rng;

use super::{Field, FieldError};

/// The two-element field. Only used for the trivial representation in
/// characteristic 2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }

    fn one(&self) -> u8 {
        1
    }

    fn from_i64(&self, v: i64) -> u8 {
        (v & 1) as u8
    }

    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }

    fn sub(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }

    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }

    fn neg(&self, a: &u8) -> u8 {
        *a
    }

    fn inv(&self, a: &u8) -> Result<u8, FieldError> {
        match a {
            0 => Err(FieldError::InverseOfZero),
            _ => Ok(1),
        }
    }

    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        2
    }

    fn name(&self) -> String {
        "GF(2)".to_string()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u8 {
        rng.gen_range(0..2)
    }

    fn sample_set_size(&self) -> u64 {
        2
    }

    fn elements(&self) -> Option<Vec<u8>> {
        Some(vec![0, 1])
    }
}
