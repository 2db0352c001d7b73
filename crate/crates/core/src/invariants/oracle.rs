//! Deciding whether a space of forms contains a non-singular element,
//! working only from a basis.
//!
//! det(Σ cᵢBᵢ) is a polynomial of degree n in the coefficients. If it is
//! not identically zero, a uniform draw from a sample set S hits a root with
//! probability at most n/|S| (Schwartz–Zippel). Over GF(65537) with n ≤ 16
//! and 20 draws a false "no" has probability below 10⁻⁶⁰. When every draw
//! is singular and the space is tiny, all combinations are enumerated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::InvariantBasis;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::repspace::RepSpec;

pub const DEFAULT_TRIALS: usize = 20;

/// Spaces with at most this many elements are enumerated when sampling
/// finds nothing (17³, i.e. dimension ≤ 3 over GF(17)).
pub const EXHAUSTIVE_LIMIT: u64 = 17 * 17 * 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NondegMethod {
    ClosedForm,
    Sampled,
    Exhaustive,
}

impl NondegMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            NondegMethod::ClosedForm => "closed_form",
            NondegMethod::Sampled => "sampled",
            NondegMethod::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct NondegReport<F: Field> {
    pub exists: bool,
    /// A full-rank element of the span, when one was found.
    pub witness: Option<Matrix<F>>,
    pub method: NondegMethod,
}

/// Deterministic per-spec RNG so sweeps give the same answers in any order.
pub fn spec_rng(seed: u64, spec: &RepSpec) -> ChaCha8Rng {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for (i, k) in spec.mults.iter().enumerate() {
        h = h.rotate_left(7) ^ (*k as u64).wrapping_add(i as u64).wrapping_mul(0x100_0000_01b3);
    }
    h ^= spec.group as u64;
    ChaCha8Rng::seed_from_u64(h)
}

pub fn nondeg_oracle<F: Field>(basis: &InvariantBasis<F>, rng: &mut ChaCha8Rng, trials: usize) -> NondegReport<F> {
    let f = &basis.field;
    let d = basis.dim();
    // The only form in a zero space is 0, which is degenerate.
    if d == 0 {
        return NondegReport { exists: false, witness: None, method: NondegMethod::Exhaustive };
    }
    for _ in 0..trials {
        let coeffs: Vec<F::Elem> = (0..d).map(|_| f.random(rng)).collect();
        let x = basis.combine(&coeffs);
        if !f.is_zero(&x.determinant().expect("square")) {
            return NondegReport { exists: true, witness: Some(x), method: NondegMethod::Sampled };
        }
    }
    let small = f
        .elements()
        .filter(|els| (els.len() as u64).checked_pow(d as u32).is_some_and(|total| total <= EXHAUSTIVE_LIMIT));
    let Some(elements) = small else {
        return NondegReport { exists: false, witness: None, method: NondegMethod::Sampled };
    };
    let mut idx = vec![0usize; d];
    loop {
        let coeffs: Vec<F::Elem> = idx.iter().map(|&i| elements[i].clone()).collect();
        let x = basis.combine(&coeffs);
        if !f.is_zero(&x.determinant().expect("square")) {
            return NondegReport { exists: true, witness: Some(x), method: NondegMethod::Exhaustive };
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == d {
                return NondegReport { exists: false, witness: None, method: NondegMethod::Exhaustive };
            }
            idx[pos] += 1;
            if idx[pos] < elements.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclotomic8, PrimeField};
    use crate::groups::{GroupId, GroupTable};
    use crate::invariants::solve_invariant_space;
    use crate::irreps::IrrepTable;

    fn basis<F: crate::field::RootOfUnityField>(f: F, id: GroupId, m: &[usize]) -> InvariantBasis<F> {
        let spec = RepSpec::new(id, m.to_vec()).unwrap();
        solve_invariant_space(&spec, &IrrepTable::new(id, f), &GroupTable::build(id)).unwrap()
    }

    #[test]
    fn q8_symplectic_form_is_a_witness() {
        let f = PrimeField::new(17).unwrap();
        let b = basis(f, GroupId::Q8, &[0, 0, 0, 0, 1]);
        let r = nondeg_oracle(&b, &mut spec_rng(1, &b.spec), DEFAULT_TRIALS);
        assert!(r.exists);
        let w = r.witness.unwrap();
        assert!(w.is_nonsingular());
        assert_eq!(*w.get(0, 0), 0);
        assert_eq!(*w.get(0, 1), f.neg(w.get(1, 0)));
    }

    #[test]
    fn z8_rank_one_space_is_degenerate_by_exhaustion() {
        let b = basis(PrimeField::new(17).unwrap(), GroupId::Z8, &[1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(b.dim(), 1);
        let r = nondeg_oracle(&b, &mut spec_rng(1, &b.spec), DEFAULT_TRIALS);
        assert!(!r.exists);
        assert_eq!(r.method, NondegMethod::Exhaustive);
    }

    #[test]
    fn z8_dual_pair_has_antidiagonal_witness() {
        let b = basis(Cyclotomic8, GroupId::Z8, &[0, 0, 1, 1, 0, 0, 0, 0]);
        let r = nondeg_oracle(&b, &mut spec_rng(1, &b.spec), DEFAULT_TRIALS);
        assert!(r.exists);
        assert_eq!(r.method, NondegMethod::Sampled);
        let w = r.witness.unwrap();
        assert!(Cyclotomic8.is_zero(w.get(0, 0)) && Cyclotomic8.is_zero(w.get(1, 1)));
    }

    #[test]
    fn empty_space_is_degenerate() {
        let b = basis(PrimeField::new(65537).unwrap(), GroupId::Z8, &[0, 0, 2, 0, 0, 0, 0, 0]);
        let r = nondeg_oracle(&b, &mut spec_rng(1, &b.spec), DEFAULT_TRIALS);
        assert!(!r.exists && r.witness.is_none());
    }

    #[test]
    fn large_field_without_exhaustion_reports_sampling() {
        let b = basis(PrimeField::new(65537).unwrap(), GroupId::Z8, &[1, 0, 1, 0, 0, 0, 0, 0]);
        let r = nondeg_oracle(&b, &mut spec_rng(1, &b.spec), DEFAULT_TRIALS);
        assert_eq!((r.exists, r.method), (false, NondegMethod::Sampled));
    }

    #[test]
    fn rng_is_deterministic_per_spec() {
        use rand::RngCore;
        let s = RepSpec::new(GroupId::D4, vec![1, 0, 0, 0, 1]).unwrap();
        let t = RepSpec::new(GroupId::D4, vec![0, 1, 0, 0, 1]).unwrap();
        assert_eq!(spec_rng(3, &s).next_u64(), spec_rng(3, &s).next_u64());
        assert_ne!(spec_rng(3, &s).next_u64(), spec_rng(3, &t).next_u64());
        assert_ne!(spec_rng(3, &s).next_u64(), spec_rng(4, &s).next_u64());
    }
}
