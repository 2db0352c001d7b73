//! Spaces of invariant bilinear forms.
//!
//! For a representation with images C_g, the invariant forms are the
//! matrices X with C_gᵗ X C_g = X for every g. Column-stacking turns each
//! condition into ((C_gᵗ ⊗ C_gᵗ) − I)·vec(X) = 0, so the whole space is a
//! single nullspace. Only generator conditions are stacked; invariance under
//! a product follows from invariance under its factors, and the result is
//! re-checked against all eight elements anyway.
//!
//! [`closed`] evaluates the closed-form answers (dimensions, symmetric and
//! skew parts, existence of non-degenerate forms, counts). [`oracle`] decides
//! non-degeneracy directly from a basis, without looking at block
//! conditions, so the two can be compared.

pub mod closed;
pub mod oracle;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, Gf2, RootOfUnityField};
use crate::groups::GroupTable;
use crate::irreps::{DualPairs, IrrepTable};
use crate::linalg::Matrix;
use crate::repspace::{BlockLayout, RepError, RepSpec, Representation};

pub use closed::{
    census, char2_dims, count_nondeg_closed, degenerate_count_closed, dim_closed, nondeg_closed, sym_skew_closed,
    Census, Char2Dims,
};
pub use oracle::{nondeg_oracle, spec_rng, NondegMethod, NondegReport, DEFAULT_TRIALS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("solver output for {spec} is not invariant under element {element}")]
    NotInvariant { spec: RepSpec, element: String },
}

/// Dimensions of an invariant-form space and of its symmetric and
/// skew-symmetric parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceDims {
    pub total: usize,
    pub symmetric: usize,
    pub skew: usize,
}

/// A basis of the invariant-form space of one representation.
#[derive(Debug, Clone)]
pub struct InvariantBasis<F: Field> {
    pub spec: RepSpec,
    pub basis: Vec<Matrix<F>>,
    pub field: F,
}

impl<F: Field> InvariantBasis<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    /// Σ cᵢ Bᵢ.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Matrix<F> {
        combine(&self.field, self.degree(), &self.basis, coeffs)
    }
}

pub(crate) fn combine<F: Field>(field: &F, n: usize, basis: &[Matrix<F>], coeffs: &[F::Elem]) -> Matrix<F> {
    basis.iter().zip(coeffs).fold(Matrix::zeros(field.clone(), n, n), |acc, (b, c)| {
        if field.is_zero(c) {
            acc
        } else {
            acc.add(&b.scale(c)).expect("n × n")
        }
    })
}

/// Basis of {X : CᵗXC = X for every C in `generators`}, read off the
/// echelon-normalized nullspace of the stacked lifted system.
pub fn invariant_forms<F: Field>(field: &F, n: usize, generators: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let id = Matrix::identity(field.clone(), n * n);
    let blocks: Vec<Matrix<F>> = generators
        .iter()
        .map(|c| {
            let ct = c.transpose();
            ct.kron(&ct).sub(&id).expect("n² × n²")
        })
        .collect();
    let system = Matrix::vstack(field.clone(), &blocks).expect("equal widths");
    system
        .rank_nullspace()
        .basis
        .into_iter()
        .map(|v| Matrix::from_vec(field.clone(), n, n, v).expect("length n²"))
        .collect()
}

/// Solves for the invariant forms of `spec` and checks the result against
/// every group element.
pub fn solve_invariant_space<F: RootOfUnityField>(
    spec: &RepSpec,
    table: &IrrepTable<F>,
    group: &GroupTable,
) -> Result<InvariantBasis<F>, InvariantError> {
    let rep = Representation::build(spec, table)?;
    let field = table.field().clone();
    let basis = invariant_forms(&field, spec.degree(), &rep.generator_images);
    for g in 0..group.order() {
        let c = rep.image(g, group);
        let ct = c.transpose();
        for x in &basis {
            if ct.matmul(x).and_then(|m| m.matmul(&c)).ok().as_ref() != Some(x) {
                return Err(InvariantError::NotInvariant { spec: spec.clone(), element: group.element_name(g) });
            }
        }
    }
    Ok(InvariantBasis { spec: spec.clone(), basis, field })
}

/// dim of {X ∈ span(basis) : L(X) = 0} for a linear map L given by its
/// action on matrices.
pub fn constrained_dim<F: Field>(
    field: &F,
    basis: &[Matrix<F>],
    constraint: impl Fn(&Matrix<F>) -> Vec<F::Elem>,
) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(constraint).collect();
    let rows = cols[0].len();
    if rows == 0 {
        return basis.len();
    }
    let mut data = Vec::with_capacity(rows * cols.len());
    for r in 0..rows {
        for c in &cols {
            data.push(c[r].clone());
        }
    }
    let m = Matrix::new(field.clone(), rows, cols.len(), data).expect("rows × dim");
    basis.len() - m.rank()
}

/// Symmetric and skew-symmetric dimensions of span(basis), as kernels of
/// X ↦ X − Xᵗ and X ↦ X + Xᵗ restricted to the span.
pub fn sym_skew_split_bruteforce<F: Field>(field: &F, basis: &[Matrix<F>]) -> SpaceDims {
    let symmetric = constrained_dim(field, basis, |b| b.sub(&b.transpose()).expect("square").vec());
    let skew = constrained_dim(field, basis, |b| b.add(&b.transpose()).expect("square").vec());
    SpaceDims { total: basis.len(), symmetric, skew }
}

/// Brute-force counterpart of [`char2_dims`]: solves the trivial degree-n
/// representation over GF(2) and measures the subspaces directly.
pub fn char2_bruteforce(n: usize) -> Char2Dims {
    let f = Gf2;
    let gens = vec![Matrix::identity(f, n); 2];
    let basis = invariant_forms(&f, n, &gens);
    let asym = |b: &Matrix<Gf2>| b.sub(&b.transpose()).expect("square").vec();
    let diag = |b: &Matrix<Gf2>| (0..n).map(|i| *b.get(i, i)).collect::<Vec<u8>>();
    let off_diag = |b: &Matrix<Gf2>| {
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| *b.get(i, j)).collect()
    };
    Char2Dims {
        total: basis.len(),
        symmetric: constrained_dim(&f, &basis, asym),
        diagonal: constrained_dim(&f, &basis, off_diag),
        alternating: constrained_dim(&f, &basis, |b| {
            let mut v = asym(b);
            v.extend(diag(b));
            v
        }),
    }
}

/// Whether every block (i, j) with (i, j) ∉ A_G vanishes.
pub fn off_pairing_blocks_zero<F: Field>(x: &Matrix<F>, layout: &BlockLayout, pairs: &DualPairs) -> bool {
    let r = layout.irrep_count();
    (1..=r).all(|i| {
        (1..=r).all(|j| {
            pairs.contains(i, j) || {
                let (ri, rj) = (layout.range(i), layout.range(j));
                x.block(ri.start, rj.start, ri.len(), rj.len()).is_zero()
            }
        })
    })
}

/// Whether every non-empty block (i, j) with (i, j) ∈ A_G is square and
/// non-singular.
pub fn pairing_blocks_nonsingular<F: Field>(x: &Matrix<F>, layout: &BlockLayout, pairs: &DualPairs) -> bool {
    pairs.iter().all(|(i, j)| {
        let (ri, rj) = (layout.range(i), layout.range(j));
        if ri.is_empty() && rj.is_empty() {
            return true;
        }
        x.block(ri.start, rj.start, ri.len(), rj.len()).is_nonsingular()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclotomic8, PrimeField};
    use crate::groups::GroupId;

    fn gf17() -> PrimeField {
        PrimeField::new(17).unwrap()
    }

    fn solve(id: GroupId, mults: &[usize]) -> InvariantBasis<PrimeField> {
        let spec = RepSpec::new(id, mults.to_vec()).unwrap();
        solve_invariant_space(&spec, &IrrepTable::new(id, gf17()), &GroupTable::build(id)).unwrap()
    }

    #[test]
    fn q8_two_dimensional_irrep_is_symplectic() {
        let b = solve(GroupId::Q8, &[0, 0, 0, 0, 1]);
        assert_eq!(b.dim(), 1);
        let j = Matrix::from_i64(gf17(), &[&[0, 1], &[-1, 0]]).unwrap();
        let x = &b.basis[0];
        let s = x.get(0, 1);
        assert_eq!(*x, j.scale(s));
        let dims = sym_skew_split_bruteforce(&gf17(), &b.basis);
        assert_eq!(dims, SpaceDims { total: 1, symmetric: 0, skew: 1 });
    }

    #[test]
    fn d4_two_dimensional_irrep_is_orthogonal() {
        let b = solve(GroupId::D4, &[0, 0, 0, 0, 1]);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis[0], Matrix::identity(gf17(), 2).scale(b.basis[0].get(0, 0)));
    }

    #[test]
    fn z8_two_copies_of_rho3_admit_nothing() {
        assert_eq!(solve(GroupId::Z8, &[0, 0, 2, 0, 0, 0, 0, 0]).dim(), 0);
    }

    #[test]
    fn z8_dual_pair_gives_antidiagonal_forms() {
        let b = solve(GroupId::Z8, &[0, 0, 1, 1, 0, 0, 0, 0]);
        assert_eq!(b.dim(), 2);
        let f = gf17();
        let e12 = Matrix::from_i64(f, &[&[0, 1], &[0, 0]]).unwrap();
        let e21 = Matrix::from_i64(f, &[&[0, 0], &[1, 0]]).unwrap();
        assert_eq!(b.basis, vec![e21.clone(), e12.clone()]);
        assert_eq!(sym_skew_split_bruteforce(&f, &[e12, e21]), SpaceDims { total: 2, symmetric: 1, skew: 1 });
    }

    #[test]
    fn split_of_simple_bases() {
        let f = gf17();
        let i2 = Matrix::identity(f, 2);
        assert_eq!(sym_skew_split_bruteforce(&f, &[i2]), SpaceDims { total: 1, symmetric: 1, skew: 0 });
        let j = Matrix::from_i64(f, &[&[0, 1], &[-1, 0]]).unwrap();
        assert_eq!(sym_skew_split_bruteforce(&f, &[j]), SpaceDims { total: 1, symmetric: 0, skew: 1 });
        assert_eq!(sym_skew_split_bruteforce::<PrimeField>(&f, &[]), SpaceDims { total: 0, symmetric: 0, skew: 0 });
    }

    #[test]
    fn consecutive_layout_gives_kron_pattern_on_two_dimensional_block() {
        // k₅ = 2: the (5,5) block is M ⊗ I₂ for D4 and M ⊗ J for Q8.
        let f = gf17();
        let j = Matrix::from_i64(f, &[&[0, 1], &[-1, 0]]).unwrap();
        for (id, unit) in [(GroupId::D4, Matrix::identity(f, 2)), (GroupId::Q8, j)] {
            let b = solve(id, &[0, 0, 0, 0, 2]);
            assert_eq!(b.dim(), 4);
            for x in &b.basis {
                let m = Matrix::from_rows(
                    f,
                    (0..2)
                        .map(|p| (0..2).map(|q| *x.get(2 * p, 2 * q + usize::from(id == GroupId::Q8))).collect())
                        .collect(),
                )
                .unwrap();
                assert_eq!(*x, m.kron(&unit), "{id}");
            }
        }
    }

    #[test]
    fn cyclotomic_solver_agrees_on_small_case() {
        let spec = RepSpec::new(GroupId::Z4xZ2, vec![1, 0, 0, 0, 1, 1, 0, 0]).unwrap();
        let g = GroupTable::build(GroupId::Z4xZ2);
        let b = solve_invariant_space(&spec, &IrrepTable::new(GroupId::Z4xZ2, Cyclotomic8), &g).unwrap();
        assert_eq!(b.dim(), 3);
    }

    #[test]
    fn trivial_representation_over_gf2() {
        for n in 1..=4 {
            let gens = vec![Matrix::identity(Gf2, n); 2];
            assert_eq!(invariant_forms(&Gf2, n, &gens).len(), n * n);
            assert_eq!(char2_bruteforce(n), char2_dims(n));
        }
    }

    #[test]
    fn block_predicates() {
        let f = gf17();
        let spec = RepSpec::new(GroupId::Z8, vec![0, 0, 1, 1, 0, 0, 0, 0]).unwrap();
        let layout = spec.layout();
        let pairs = DualPairs::canonical(GroupId::Z8);
        let anti = Matrix::from_i64(f, &[&[0, 3], &[5, 0]]).unwrap();
        assert!(off_pairing_blocks_zero(&anti, &layout, &pairs));
        assert!(pairing_blocks_nonsingular(&anti, &layout, &pairs));
        let diag = Matrix::identity(f, 2);
        assert!(!off_pairing_blocks_zero(&diag, &layout, &pairs));
        let half = Matrix::from_i64(f, &[&[0, 3], &[0, 0]]).unwrap();
        assert!(!pairing_blocks_nonsingular(&half, &layout, &pairs));

        // k₃ = 1, k₄ = 0: the (3,4) block is 1 × 0, never invertible.
        let spec = RepSpec::new(GroupId::Z8, vec![1, 0, 1, 0, 0, 0, 0, 0]).unwrap();
        let x = Matrix::from_i64(f, &[&[1, 0], &[0, 0]]).unwrap();
        assert!(!pairing_blocks_nonsingular(&x, &spec.layout(), &pairs));
    }
}
