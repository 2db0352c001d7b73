//! Invariant bilinear forms for representations of the groups of order 8.
//!
//! Every representation of D4, Q8, Z8, Z4×Z2 or Z2×Z2×Z2 over a field with a
//! primitive eighth root of unity is a direct sum of irreducibles, so it is
//! named by a multiplicity vector. This crate builds those representations
//! over exact fields, computes their spaces of invariant bilinear forms by
//! plain linear algebra, and compares the results with closed formulas for
//! the dimension, the symmetric/skew split, and the existence of a
//! non-degenerate form.
//!
//! ```
//! use octoforms::field::PrimeField;
//! use octoforms::groups::{GroupId, GroupTable};
//! use octoforms::invariants::{dim_closed, solve_invariant_space};
//! use octoforms::irreps::IrrepTable;
//! use octoforms::repspace::RepSpec;
//!
//! let field = PrimeField::new(17)?;
//! let group = GroupTable::build(GroupId::Z8);
//! let table = IrrepTable::new(GroupId::Z8, field);
//! let spec = RepSpec::new(GroupId::Z8, vec![0, 0, 1, 1, 0, 0, 0, 0])?;
//! let forms = solve_invariant_space(&spec, &table, &group)?;
//! assert_eq!(forms.dim(), dim_closed(&spec));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod field;
pub mod groups;
pub mod invariants;
pub mod irreps;
pub mod linalg;
pub mod repspace;
pub mod verify;
