//! Closed-form answers, evaluated from multiplicity vectors alone.

use num_integer::binomial;
use serde::Serialize;

use super::SpaceDims;
use crate::groups::GroupId;
use crate::irreps::DualPairs;
use crate::repspace::{count_closed, RepSpec};

/// dim = Σ_{(i,j) ∈ A_G} kᵢkⱼ.
pub fn dim_closed(spec: &RepSpec) -> usize {
    DualPairs::canonical(spec.group).iter().map(|(i, j)| spec.k(i) * spec.k(j)).sum()
}

/// Symmetric and skew dimensions.
///
/// Self-dual pairs (i, i) contribute kᵢ(kᵢ±1)/2 and each ordered
/// off-diagonal pair kᵢkⱼ/2 to both parts. The exception is the
/// two-dimensional irrep of Q8, whose invariant form is alternating, so the
/// signs swap for k₅.
pub fn sym_skew_closed(spec: &RepSpec) -> SpaceDims {
    let pairs = DualPairs::canonical(spec.group);
    let symplectic = |i: usize| spec.group == GroupId::Q8 && i == 5;
    let mut sym2 = 0;
    let mut skew2 = 0;
    for (i, j) in pairs.iter() {
        let (ki, kj) = (spec.k(i), spec.k(j));
        if i == j {
            let (plus, minus) = (ki * (ki + 1), ki * ki.saturating_sub(1));
            if symplectic(i) {
                sym2 += minus;
                skew2 += plus;
            } else {
                sym2 += plus;
                skew2 += minus;
            }
        } else {
            sym2 += ki * kj;
            skew2 += ki * kj;
        }
    }
    SpaceDims { total: dim_closed(spec), symmetric: sym2 / 2, skew: skew2 / 2 }
}

/// Whether the representation carries a non-degenerate invariant form:
/// always for D4, Q8 and Z2³; for Z8 iff k₃=k₄, k₅=k₆, k₇=k₈; for Z4×Z2
/// iff k₅=k₆, k₇=k₈.
pub fn nondeg_closed(spec: &RepSpec) -> bool {
    let k = |i| spec.k(i);
    match spec.group {
        GroupId::D4 | GroupId::Q8 | GroupId::Z2xZ2xZ2 => true,
        GroupId::Z8 => k(3) == k(4) && k(5) == k(6) && k(7) == k(8),
        GroupId::Z4xZ2 => k(5) == k(6) && k(7) == k(8),
    }
}

/// Number of degree-n representations carrying a non-degenerate invariant
/// form.
pub fn count_nondeg_closed(group: GroupId, n: usize) -> u64 {
    let n = n as u64;
    let s_range = 0..=n / 2;
    match group {
        GroupId::D4 | GroupId::Q8 => s_range.map(|s| binomial(n - 2 * s + 3, 3)).sum(),
        GroupId::Z8 => s_range.map(|s| binomial(s + 2, 2) * binomial(n - 2 * s + 1, 1)).sum(),
        GroupId::Z4xZ2 => s_range.map(|s| binomial(s + 1, 1) * binomial(n - 2 * s + 3, 3)).sum(),
        GroupId::Z2xZ2xZ2 => binomial(n + 7, 7),
    }
}

/// Number of degree-n representations whose invariant forms are all
/// degenerate, written the way the degenerate census states it.
pub fn degenerate_count_closed(group: GroupId, n: usize) -> u64 {
    let m = n as u64;
    let all = binomial(m + 7, 7);
    match group {
        GroupId::Z4xZ2 => all - (0..=m / 2).map(|s| binomial(s + 1, 1) * binomial(m - 2 * s + 3, 3)).sum::<u64>(),
        GroupId::Z8 => all - (0..=m / 2).map(|s| binomial(s + 2, 2) * binomial(m - 2 * s + 1, 1)).sum::<u64>(),
        GroupId::Q8 | GroupId::D4 | GroupId::Z2xZ2xZ2 => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: u64,
    pub nondegenerate: u64,
    pub degenerate: u64,
}

pub fn census(group: GroupId, n: usize) -> Census {
    let total = count_closed(group, n);
    let nondegenerate = count_nondeg_closed(group, n);
    Census { total, nondegenerate, degenerate: total - nondegenerate }
}

/// Invariant forms of the trivial degree-n representation in
/// characteristic 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Char2Dims {
    pub total: usize,
    pub symmetric: usize,
    pub diagonal: usize,
    /// Symmetric with zero diagonal.
    pub alternating: usize,
}

pub fn char2_dims(n: usize) -> Char2Dims {
    Char2Dims { total: n * n, symmetric: n * (n + 1) / 2, diagonal: n, alternating: n * n.saturating_sub(1) / 2 }
}
