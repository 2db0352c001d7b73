//! Irreducible representations of the order-8 groups, their characters and
//! the dual pairing A_G.
//!
//! The generator images are transcribed from the standard tables with
//! entries written as powers of ω (or zero). Indices are 1-based and follow
//! the table's column order, so that a multiplicity vector `(k₁, …, k_r)`
//! means the same thing everywhere in this crate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::field::RootOfUnityField;
use crate::groups::{GroupId, GroupTable};
use crate::linalg::Matrix;

/// One entry of a printed generator image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Entry {
    Zero,
    /// ω^k, exponent kept in 0..8 (so ω⁸ is stored as ω⁰ = 1).
    Omega(u8),
}

impl Entry {
    fn omega(k: u8) -> Self {
        Entry::Omega(k % 8)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Zero => f.write_str("0"),
            Entry::Omega(0) => f.write_str("1"),
            Entry::Omega(4) => f.write_str("-1"),
            Entry::Omega(1) => f.write_str("ω"),
            Entry::Omega(k) => write!(f, "ω^{k}"),
        }
    }
}

/// Field-independent description of one irrep: its degree and one
/// `degree × degree` row-major image per generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepData {
    pub degree: usize,
    pub images: Vec<Vec<Entry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableData {
    pub group: GroupId,
    pub irreps: Vec<IrrepData>,
}

impl TableData {
    /// The printed table for `group`.
    pub fn printed(group: GroupId) -> Self {
        use Entry::Zero;
        let w = Entry::omega;
        let linear = |gens: &[&[u8]]| -> Vec<IrrepData> {
            let r = gens[0].len();
            (0..r).map(|i| IrrepData { degree: 1, images: gens.iter().map(|g| vec![w(g[i])]).collect() }).collect()
        };
        let irreps = match group {
            GroupId::D4 => {
                let mut v = linear(&[&[8, 8, 4, 4], &[8, 4, 4, 8]]);
                v.push(IrrepData {
                    degree: 2,
                    images: vec![vec![Zero, w(4), w(8), Zero], vec![w(8), Zero, Zero, w(4)]],
                });
                v
            }
            GroupId::Q8 => {
                let mut v = linear(&[&[8, 8, 4, 4], &[8, 4, 4, 8]]);
                v.push(IrrepData {
                    degree: 2,
                    images: vec![vec![w(2), Zero, Zero, w(6)], vec![Zero, w(8), w(4), Zero]],
                });
                v
            }
            GroupId::Z8 => linear(&[&[8, 4, 1, 7, 2, 6, 3, 5]]),
            GroupId::Z4xZ2 => linear(&[&[8, 8, 4, 4, 2, 6, 2, 6], &[8, 4, 8, 4, 8, 8, 4, 4]]),
            GroupId::Z2xZ2xZ2 => {
                linear(&[&[8, 4, 8, 8, 8, 4, 4, 4], &[8, 4, 4, 4, 8, 4, 8, 8], &[8, 4, 8, 4, 4, 8, 8, 4]])
            }
        };
        TableData { group, irreps }
    }

    /// Applies a single-entry corruption (negative-control hook).
    pub fn corrupt(&mut self, c: &Corruption) -> Result<(), IrrepError> {
        if c.group != self.group {
            return Err(IrrepError::BadCorruption(format!(
                "table is for {}, corruption targets {}",
                self.group, c.group
            )));
        }
        let irrep = c
            .irrep
            .checked_sub(1)
            .and_then(|i| self.irreps.get_mut(i))
            .ok_or_else(|| IrrepError::BadCorruption(format!("no irrep {}", c.irrep)))?;
        let d = irrep.degree;
        if c.row >= d || c.col >= d {
            return Err(IrrepError::BadCorruption(format!("entry ({}, {}) outside a {d}x{d} image", c.row, c.col)));
        }
        let image = irrep
            .images
            .get_mut(c.generator)
            .ok_or_else(|| IrrepError::BadCorruption(format!("no generator {}", c.generator)))?;
        let e = &mut image[c.row * d + c.col];
        *e = match *e {
            Entry::Zero => Entry::Omega(0),
            Entry::Omega(k) => Entry::omega(k + 1),
        };
        Ok(())
    }

    /// Every single-entry corruption of this table.
    pub fn all_corruptions(&self) -> Vec<Corruption> {
        let mut out = Vec::new();
        for (i, irrep) in self.irreps.iter().enumerate() {
            for g in 0..irrep.images.len() {
                for row in 0..irrep.degree {
                    for col in 0..irrep.degree {
                        out.push(Corruption { group: self.group, irrep: i + 1, generator: g, row, col });
                    }
                }
            }
        }
        out
    }
}

/// Replaces one table entry e by ω·e (or 0 by 1).
///
/// Text form: `group:irrep:generator:row:col`, e.g. `d4:5:a:0:1`, with the
/// irrep 1-based, the generator a letter, row and column 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corruption {
    pub group: GroupId,
    pub irrep: usize,
    pub generator: usize,
    pub row: usize,
    pub col: usize,
}

impl FromStr for Corruption {
    type Err = IrrepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || IrrepError::BadCorruption(format!("cannot parse {s:?}; expected group:irrep:generator:row:col"));
        let parts: Vec<&str> = s.split(':').collect();
        let [g, i, gen, r, c] = parts.as_slice() else {
            return Err(bad());
        };
        let generator = match *gen {
            "a" => 0,
            "b" => 1,
            "c" => 2,
            _ => return Err(bad()),
        };
        Ok(Corruption {
            group: g.parse().map_err(|_| bad())?,
            irrep: i.parse().map_err(|_| bad())?,
            generator,
            row: r.parse().map_err(|_| bad())?,
            col: c.parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = ["a", "b", "c"][self.generator.min(2)];
        write!(f, "{}:{}:{}:{}:{}", self.group.name().to_lowercase(), self.irrep, g, self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrrepError {
    #[error("irrep ρ{0} has no dual in the table")]
    MissingDual(usize),
    #[error("bad corruption: {0}")]
    BadCorruption(String),
}

#[derive(Debug, Clone)]
pub struct Irrep<F: RootOfUnityField> {
    /// 1-based position in the table.
    pub index: usize,
    pub degree: usize,
    pub generator_images: Vec<Matrix<F>>,
}

impl<F: RootOfUnityField> Irrep<F> {
    /// ρ(g), multiplying generator images along g's normal-form word.
    pub fn image(&self, g: usize, group: &GroupTable) -> Matrix<F> {
        let field = self.generator_images[0].field().clone();
        group.word(g).into_iter().fold(Matrix::identity(field, self.degree), |acc, gen| {
            acc.matmul(&self.generator_images[gen]).expect("square images of equal degree")
        })
    }

    pub fn character(&self, g: usize, group: &GroupTable) -> F::Elem {
        self.image(g, group).trace().expect("images are square")
    }
}

#[derive(Debug, Clone)]
pub struct IrrepTable<F: RootOfUnityField> {
    pub group: GroupId,
    pub irreps: Vec<Irrep<F>>,
    field: F,
}

impl<F: RootOfUnityField> IrrepTable<F> {
    pub fn new(group: GroupId, field: F) -> Self {
        Self::from_data(&TableData::printed(group), field)
    }

    /// Instantiates a (possibly altered) table with the field's ω.
    pub fn from_data(data: &TableData, field: F) -> Self {
        let irreps = data
            .irreps
            .iter()
            .enumerate()
            .map(|(i, d)| Irrep {
                index: i + 1,
                degree: d.degree,
                generator_images: d
                    .images
                    .iter()
                    .map(|img| {
                        let entries = img
                            .iter()
                            .map(|e| match e {
                                Entry::Zero => field.zero(),
                                Entry::Omega(k) => field.omega_pow(*k as i64),
                            })
                            .collect();
                        Matrix::new(field.clone(), d.degree, d.degree, entries).expect("image is degree × degree")
                    })
                    .collect(),
            })
            .collect();
        IrrepTable { group: data.group, irreps, field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    /// `[i][g]` = χ_{i+1}(g).
    pub fn character_table(&self, group: &GroupTable) -> Vec<Vec<F::Elem>> {
        self.irreps.iter().map(|r| (0..group.order()).map(|g| r.character(g, group)).collect()).collect()
    }

    /// A_G by character matching: (i, j) ∈ A_G iff χ_j(g) = χ_i(g⁻¹) for all g.
    pub fn dual_pairs(&self, group: &GroupTable) -> Result<DualPairs, IrrepError> {
        let chars = self.character_table(group);
        let mut pairs = BTreeSet::new();
        for (i, chi) in chars.iter().enumerate() {
            let dual: Vec<F::Elem> = (0..group.order()).map(|g| chi[group.inv[g]].clone()).collect();
            let matches: Vec<usize> = chars.iter().enumerate().filter(|(_, c)| **c == dual).map(|(j, _)| j).collect();
            if matches.is_empty() {
                return Err(IrrepError::MissingDual(i + 1));
            }
            for j in matches {
                pairs.insert((i + 1, j + 1));
            }
        }
        Ok(DualPairs { group: self.group, pairs })
    }

    /// Runs every table check and returns what failed.
    pub fn validate(&self, group: &GroupTable) -> ValidationReport {
        let f = &self.field;
        let mut violations = Vec::new();

        for irrep in &self.irreps {
            let images: Vec<Matrix<F>> = (0..group.order()).map(|g| irrep.image(g, group)).collect();
            'pairs: for g in 0..group.order() {
                for h in 0..group.order() {
                    let prod = images[g].matmul(&images[h]).expect("square");
                    if prod != images[group.mul(g, h)] {
                        violations.push(Violation::Homomorphism {
                            irrep: irrep.index,
                            g: group.element_name(g),
                            h: group.element_name(h),
                        });
                        break 'pairs;
                    }
                }
            }
        }

        let dsq: usize = self.degrees().iter().map(|d| d * d).sum();
        if dsq != group.order() {
            violations.push(Violation::DegreeSquares(dsq));
        }

        let chars = self.character_table(group);
        let order = f.from_i64(group.order() as i64);
        for i in 0..chars.len() {
            for j in i..chars.len() {
                let inner = (0..group.order())
                    .fold(f.zero(), |acc, g| f.add(&acc, &f.mul(&chars[i][g], &chars[j][group.inv[g]])));
                if i == j && inner != order {
                    violations.push(Violation::Norm { irrep: i + 1 });
                } else if i != j && !f.is_zero(&inner) {
                    violations.push(Violation::Orthogonality { i: i + 1, j: j + 1 });
                }
            }
        }

        match self.dual_pairs(group) {
            Err(IrrepError::MissingDual(i)) => violations.push(Violation::MissingDual { irrep: i }),
            Err(_) => unreachable!(),
            Ok(pairs) => {
                // Second route to duality: build the contragredient g ↦ ρ(g⁻¹)ᵗ
                // and locate its character in the table.
                for irrep in &self.irreps {
                    let contra: Vec<F::Elem> = (0..group.order())
                        .map(|g| irrep.image(group.inv[g], group).transpose().trace().expect("square"))
                        .collect();
                    let found: BTreeSet<usize> =
                        chars.iter().enumerate().filter(|(_, c)| **c == contra).map(|(j, _)| j + 1).collect();
                    let expected: BTreeSet<usize> =
                        pairs.pairs.iter().filter(|(i, _)| *i == irrep.index).map(|(_, j)| *j).collect();
                    if found != expected {
                        violations.push(Violation::Contragredient { irrep: irrep.index });
                    }
                }
            }
        }

        ValidationReport { group: self.group, field: f.name(), violations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    Homomorphism { irrep: usize, g: String, h: String },
    DegreeSquares(usize),
    Orthogonality { i: usize, j: usize },
    Norm { irrep: usize },
    MissingDual { irrep: usize },
    Contragredient { irrep: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Homomorphism { irrep, g, h } => write!(f, "ρ{irrep}({g})ρ{irrep}({h}) ≠ ρ{irrep}({g}·{h})"),
            Violation::DegreeSquares(s) => write!(f, "sum of squared degrees is {s}, not 8"),
            Violation::Orthogonality { i, j } => write!(f, "characters χ{i} and χ{j} are not orthogonal"),
            Violation::Norm { irrep } => write!(f, "χ{irrep} does not have norm 1"),
            Violation::MissingDual { irrep } => write!(f, "ρ{irrep} has no dual in the table"),
            Violation::Contragredient { irrep } => {
                write!(f, "contragredient of ρ{irrep} disagrees with the character-matched dual")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub group: GroupId,
    pub field: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The set A_G of index pairs (i, j) with ρ_i and ρ_j dual to each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualPairs {
    pub group: GroupId,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl DualPairs {
    /// The pairing as listed alongside the block structure of the invariant
    /// space. [`IrrepTable::dual_pairs`] recomputes it from characters.
    pub fn canonical(group: GroupId) -> Self {
        let list: &[(usize, usize)] = match group {
            GroupId::D4 | GroupId::Q8 => &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5)],
            GroupId::Z2xZ2xZ2 => &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7), (8, 8)],
            GroupId::Z8 => &[(1, 1), (2, 2), (3, 4), (4, 3), (5, 6), (6, 5), (7, 8), (8, 7)],
            GroupId::Z4xZ2 => &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 6), (6, 5), (7, 8), (8, 7)],
        };
        DualPairs { group, pairs: list.iter().copied().collect() }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn dual_of(&self, i: usize) -> Option<usize> {
        self.pairs.iter().find(|(a, _)| *a == i).map(|(_, b)| *b)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}
