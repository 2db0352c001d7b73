//! Representations as multiplicity vectors: enumeration, counting, and
//! block-diagonal assembly.

use std::fmt;
use std::ops::Range;

use num_integer::binomial;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::RootOfUnityField;
use crate::groups::{GroupId, GroupTable};
use crate::irreps::IrrepTable;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{group} has {expected} irreps but {got} multiplicities were given")]
    WrongLength { group: GroupId, expected: usize, got: usize },
    #[error("representation of degree 0")]
    DegreeZero,
    #[error("irrep table is for {table}, spec is for {spec}")]
    GroupMismatch { table: GroupId, spec: GroupId },
}

/// `k₁ρ₁ ⊕ … ⊕ k_rρ_r` for one of the five groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepSpec {
    pub group: GroupId,
    pub mults: Vec<usize>,
}

impl RepSpec {
    pub fn new(group: GroupId, mults: Vec<usize>) -> Result<Self, RepError> {
        if mults.len() != group.irrep_count() {
            return Err(RepError::WrongLength { group, expected: group.irrep_count(), got: mults.len() });
        }
        Ok(RepSpec { group, mults })
    }

    /// n = Σ dᵢkᵢ.
    pub fn degree(&self) -> usize {
        self.group.degrees().iter().zip(&self.mults).map(|(d, k)| d * k).sum()
    }

    /// k_i for the 1-based irrep index i.
    pub fn k(&self, i: usize) -> usize {
        self.mults[i - 1]
    }

    pub fn layout(&self) -> BlockLayout {
        let mut offsets = Vec::with_capacity(self.mults.len());
        let mut sizes = Vec::with_capacity(self.mults.len());
        let mut at = 0;
        for (d, k) in self.group.degrees().iter().zip(&self.mults) {
            offsets.push(at);
            sizes.push(d * k);
            at += d * k;
        }
        BlockLayout { offsets, sizes }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.mults.iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.group, ks.join(","))
    }
}

/// Where the copies of each irrep sit: all copies of ρ₁ first, then ρ₂, …
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl BlockLayout {
    /// Index range covered by `k_i ρ_i`, 1-based i.
    pub fn range(&self, i: usize) -> Range<usize> {
        self.offsets[i - 1]..self.offsets[i - 1] + self.sizes[i - 1]
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i - 1]
    }

    pub fn irrep_count(&self) -> usize {
        self.sizes.len()
    }
}

/// Every multiplicity vector of degree `n`, in lexicographic order.
pub fn enumerate_specs(group: GroupId, n: usize) -> Vec<RepSpec> {
    fn go(degrees: &[usize], left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match degrees {
            [] => {
                if left == 0 {
                    out.push(prefix.clone());
                }
            }
            [d, rest @ ..] => {
                let max = left / d;
                let (lo, hi) = if rest.is_empty() {
                    if !left.is_multiple_of(*d) {
                        return;
                    }
                    (max, max)
                } else {
                    (0, max)
                };
                for k in lo..=hi {
                    prefix.push(k);
                    go(rest, left - d * k, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(group.degrees(), n, &mut Vec::new(), &mut out);
    out.into_iter().map(|mults| RepSpec { group, mults }).collect()
}

/// Number of degree-n representations up to isomorphism:
/// C(n+7, 7) for the abelian groups, Σ_{s=0}^{⌊n/2⌋} C(n−2s+3, 3) otherwise.
pub fn count_closed(group: GroupId, n: usize) -> u64 {
    let n = n as u64;
    if group.is_abelian() {
        binomial(n + 7, 7)
    } else {
        (0..=n / 2).map(|s| binomial(n - 2 * s + 3, 3)).sum()
    }
}

/// A concrete representation: one `n × n` image per group generator.
#[derive(Debug, Clone)]
pub struct Representation<F: RootOfUnityField> {
    pub spec: RepSpec,
    pub generator_images: Vec<Matrix<F>>,
}

impl<F: RootOfUnityField> Representation<F> {
    /// Assembles `k₁ρ₁ ⊕ … ⊕ k_rρ_r` block-diagonally, copies consecutive.
    pub fn build(spec: &RepSpec, table: &IrrepTable<F>) -> Result<Self, RepError> {
        if table.group != spec.group {
            return Err(RepError::GroupMismatch { table: table.group, spec: spec.group });
        }
        if spec.degree() == 0 {
            return Err(RepError::DegreeZero);
        }
        let gens = spec.group.generator_count();
        let generator_images = (0..gens)
            .map(|g| {
                let blocks: Vec<Matrix<F>> = table
                    .irreps
                    .iter()
                    .zip(&spec.mults)
                    .flat_map(|(irrep, &k)| std::iter::repeat_n(irrep.generator_images[g].clone(), k))
                    .collect();
                Matrix::block_diag(table.field().clone(), &blocks)
            })
            .collect();
        Ok(Representation { spec: spec.clone(), generator_images })
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    /// C_ρ(g) by extending along g's normal-form word.
    pub fn image(&self, g: usize, group: &GroupTable) -> Matrix<F> {
        let field = self.generator_images[0].field().clone();
        group.word(g).into_iter().fold(Matrix::identity(field, self.degree()), |acc, gen| {
            acc.matmul(&self.generator_images[gen]).expect("n × n")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclotomic8, Field, PrimeField, RootOfUnityField};

    fn gf17() -> PrimeField {
        PrimeField::new(17).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(RepSpec::new(GroupId::D4, vec![0, 0, 0, 0, 1]).unwrap().degree(), 2);
        assert_eq!(RepSpec::new(GroupId::Z8, vec![1; 8]).unwrap().degree(), 8);
        assert_eq!(RepSpec::new(GroupId::Q8, vec![1, 0, 0, 1, 2]).unwrap().degree(), 6);
        assert!(matches!(
            RepSpec::new(GroupId::Q8, vec![1, 0, 0]),
            Err(RepError::WrongLength { expected: 5, got: 3, .. })
        ));
    }

    #[test]
    fn small_enumerations() {
        let d4 = enumerate_specs(GroupId::D4, 1);
        assert_eq!(d4.len(), 4);
        assert!(d4.iter().all(|s| s.mults[4] == 0 && s.mults.iter().sum::<usize>() == 1));
        assert_eq!(enumerate_specs(GroupId::Z8, 1).len(), 8);
        for id in GroupId::ALL {
            let zero = enumerate_specs(id, 0);
            assert_eq!(zero.len(), 1);
            assert!(zero[0].mults.iter().all(|&k| k == 0));
        }
        assert_eq!(enumerate_specs(GroupId::Q8, 2).len(), 11);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for id in GroupId::ALL {
            for n in 0..7 {
                let specs = enumerate_specs(id, n);
                assert!(specs.windows(2).all(|w| w[0].mults < w[1].mults), "{id} n={n}");
                assert!(specs.iter().all(|s| s.degree() == n));
            }
        }
    }

    #[test]
    fn closed_counts() {
        assert_eq!(count_closed(GroupId::Z8, 1), 8);
        assert_eq!(count_closed(GroupId::D4, 2), 11);
        assert_eq!(count_closed(GroupId::Q8, 1), 4);
        assert_eq!(count_closed(GroupId::Z4xZ2, 0), 1);
    }

    #[test]
    fn block_diagonal_assembly() {
        let f = gf17();
        let t = IrrepTable::new(GroupId::Z8, f);
        let spec = RepSpec::new(GroupId::Z8, vec![0, 0, 1, 1, 0, 0, 0, 0]).unwrap();
        let rep = Representation::build(&spec, &t).unwrap();
        assert_eq!(rep.generator_images[0], Matrix::diagonal(f, vec![f.omega(), f.omega_pow(7)]));

        let t = IrrepTable::new(GroupId::D4, f);
        let spec = RepSpec::new(GroupId::D4, vec![1, 0, 0, 0, 1]).unwrap();
        let rep = Representation::build(&spec, &t).unwrap();
        assert_eq!(rep.generator_images[1], Matrix::diagonal(f, vec![1, 1, 16]));
        let g = GroupTable::build(GroupId::D4);
        assert!(rep.image(g.identity, &g).is_identity());

        let zero = RepSpec::new(GroupId::D4, vec![0; 5]).unwrap();
        assert_eq!(Representation::build(&zero, &t).unwrap_err(), RepError::DegreeZero);
        let wrong = RepSpec::new(GroupId::Q8, vec![1; 5]).unwrap();
        assert!(matches!(Representation::build(&wrong, &t), Err(RepError::GroupMismatch { .. })));
    }

    #[test]
    fn representations_are_homomorphisms_with_additive_characters() {
        let f = Cyclotomic8;
        for id in GroupId::ALL {
            let g = GroupTable::build(id);
            let t = IrrepTable::new(id, f);
            let chi = t.character_table(&g);
            for n in 1..=4 {
                for spec in enumerate_specs(id, n) {
                    let rep = Representation::build(&spec, &t).unwrap();
                    let imgs: Vec<_> = (0..8).map(|x| rep.image(x, &g)).collect();
                    for (lhs, rhs) in id.relations() {
                        assert_eq!(rep.image(g.eval(&lhs), &g), rep.image(g.eval(&rhs), &g));
                    }
                    for x in 0..8 {
                        for y in 0..8 {
                            assert_eq!(imgs[x].matmul(&imgs[y]).unwrap(), imgs[g.mul(x, y)], "{spec}");
                        }
                        let expect = spec
                            .mults
                            .iter()
                            .enumerate()
                            .fold(f.zero(), |acc, (i, &k)| f.add(&acc, &f.mul(&f.from_i64(k as i64), &chi[i][x])));
                        assert_eq!(imgs[x].trace().unwrap(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn layout_ranges() {
        let spec = RepSpec::new(GroupId::Q8, vec![2, 0, 1, 0, 2]).unwrap();
        let l = spec.layout();
        assert_eq!(l.range(1), 0..2);
        assert_eq!(l.range(2), 2..2);
        assert_eq!(l.range(3), 2..3);
        assert_eq!(l.range(5), 3..7);
    }
}
