//! Runs the code listings of the guide in `book/src` as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}

#[doc = include_str!("../../../book/src/groups-and-irreps.md")]
pub mod groups_and_irreps {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/invariant-forms.md")]
pub mod invariant_forms {}

#[doc = include_str!("../../../book/src/nondegeneracy.md")]
pub mod nondegeneracy {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
