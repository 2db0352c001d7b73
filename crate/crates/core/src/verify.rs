//! Cross-checks brute-force computations against the closed forms.
//!
//! For each group the harness validates the group and irrep tables, then
//! solves every representation up to a degree cap and compares dimension,
//! symmetric/skew split and non-degeneracy with the closed forms, and finally
//! compares the counting formulas with enumeration. Specs are processed in
//! parallel; results come back in enumeration order.

use rayon::prelude::*;
use serde::Serialize;

use crate::field::{Cyclotomic8, FieldError, FieldSpec, PrimeField, RootOfUnityField};
use crate::groups::{GroupId, GroupTable};
use crate::invariants::{
    count_nondeg_closed, degenerate_count_closed, dim_closed, nondeg_closed, nondeg_oracle, off_pairing_blocks_zero,
    pairing_blocks_nonsingular, solve_invariant_space, spec_rng, sym_skew_closed, sym_skew_split_bruteforce,
    InvariantBasis, InvariantError, NondegReport, SpaceDims, DEFAULT_TRIALS,
};
use crate::irreps::{Corruption, DualPairs, IrrepTable, TableData};
use crate::repspace::{count_closed, enumerate_specs, RepSpec};

pub const DEFAULT_SEED: u64 = 0x00c0_ffee;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub field: FieldSpec,
    /// Largest degree solved by brute force.
    pub max_degree: usize,
    /// Largest degree for the counting checks.
    pub count_max: usize,
    pub seed: u64,
    pub trials: usize,
    pub corruption: Option<Corruption>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            field: FieldSpec::default(),
            max_degree: 6,
            count_max: 12,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            corruption: None,
        }
    }
}

/// One brute-force/closed-form disagreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub group: GroupId,
    pub spec: Option<String>,
    pub check: &'static str,
    pub expected: String,
    pub found: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check failed for ", self.check)?;
        match &self.spec {
            Some(s) => write!(f, "{s}")?,
            None => write!(f, "{}", self.group)?,
        }
        write!(f, ": expected {}, found {}", self.expected, self.found)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub group: GroupId,
    pub specs: usize,
    pub sampled: usize,
    pub exhaustive: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub field: String,
    pub max_degree: usize,
    pub groups: Vec<GroupSummary>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(|g| g.mismatches.is_empty())
    }

    pub fn first_counterexample(&self) -> Option<&Mismatch> {
        self.groups.iter().flat_map(|g| &g.mismatches).next()
    }
}

/// Everything computed for one representation.
#[derive(Debug, Clone)]
pub struct SpecAnalysis<F: RootOfUnityField> {
    pub basis: InvariantBasis<F>,
    pub dims: SpaceDims,
    pub nondeg: NondegReport<F>,
}

pub fn analyze_spec<F: RootOfUnityField>(
    spec: &RepSpec,
    table: &IrrepTable<F>,
    group: &GroupTable,
    seed: u64,
    trials: usize,
) -> Result<SpecAnalysis<F>, InvariantError> {
    let basis = solve_invariant_space(spec, table, group)?;
    let dims = sym_skew_split_bruteforce(&basis.field, &basis.basis);
    let nondeg = nondeg_oracle(&basis, &mut spec_rng(seed, spec), trials);
    Ok(SpecAnalysis { basis, dims, nondeg })
}

/// The machine-readable per-representation record printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct FormRecord {
    pub group: String,
    pub mults: Vec<usize>,
    pub degree: usize,
    pub dim: usize,
    pub sym: usize,
    pub skew: usize,
    pub nondegenerate: bool,
    pub method: String,
}

impl FormRecord {
    pub fn from_analysis<F: RootOfUnityField>(a: &SpecAnalysis<F>) -> Self {
        FormRecord {
            group: a.basis.spec.group.to_string(),
            mults: a.basis.spec.mults.clone(),
            degree: a.basis.degree(),
            dim: a.dims.total,
            sym: a.dims.symmetric,
            skew: a.dims.skew,
            nondegenerate: a.nondeg.exists,
            method: a.nondeg.method.as_str().to_string(),
        }
    }
}

pub fn verify(cfg: &VerifyConfig) -> Result<VerifyReport, FieldError> {
    Ok(match cfg.field {
        FieldSpec::Prime(p) => verify_with(PrimeField::new(p)?, cfg),
        FieldSpec::Cyclotomic => verify_with(Cyclotomic8, cfg),
    })
}

pub fn verify_with<F: RootOfUnityField>(field: F, cfg: &VerifyConfig) -> VerifyReport {
    let groups = GroupId::ALL.iter().map(|&g| verify_group(g, &field, cfg)).collect();
    VerifyReport { field: field.name(), max_degree: cfg.max_degree, groups }
}

fn verify_group<F: RootOfUnityField>(id: GroupId, field: &F, cfg: &VerifyConfig) -> GroupSummary {
    let mut mismatches = Vec::new();
    let mut push = |spec: Option<&RepSpec>, check, expected: String, found: String| {
        mismatches.push(Mismatch { group: id, spec: spec.map(ToString::to_string), check, expected, found })
    };

    let group = GroupTable::build(id);
    for v in group.check() {
        push(None, "group_table", "consistent multiplication table".into(), v);
    }

    let mut data = TableData::printed(id);
    if let Some(c) = cfg.corruption.filter(|c| c.group == id) {
        if let Err(e) = data.corrupt(&c) {
            push(None, "corruption", "applicable corruption".into(), e.to_string());
        }
    }
    let table = IrrepTable::from_data(&data, field.clone());
    for v in table.validate(&group).violations {
        push(None, "irrep_table", "valid irrep table".into(), v.to_string());
    }
    let canonical = DualPairs::canonical(id);
    match table.dual_pairs(&group) {
        Ok(p) if p == canonical => {}
        Ok(p) => push(None, "dual_pairs", format!("{:?}", canonical.pairs), format!("{:?}", p.pairs)),
        Err(e) => push(None, "dual_pairs", format!("{:?}", canonical.pairs), e.to_string()),
    }

    let specs: Vec<RepSpec> = (1..=cfg.max_degree).flat_map(|n| enumerate_specs(id, n)).collect();
    let results: Vec<(Vec<Mismatch>, Option<bool>)> =
        specs.par_iter().map(|spec| check_spec(spec, &table, &group, &canonical, cfg)).collect();
    let mut sampled = 0;
    let mut exhaustive = 0;
    for (m, exhausted) in results {
        mismatches.extend(m);
        match exhausted {
            Some(true) => exhaustive += 1,
            Some(false) => sampled += 1,
            None => {}
        }
    }

    for n in 0..=cfg.count_max {
        let all = enumerate_specs(id, n);
        let closed = count_closed(id, n);
        if all.len() as u64 != closed {
            mismatches.push(count_mismatch(id, "count", n, closed, all.len() as u64));
        }
        if n == 0 {
            continue;
        }
        let nondeg = all.iter().filter(|s| nondeg_closed(s)).count() as u64;
        let closed_nondeg = count_nondeg_closed(id, n);
        if nondeg != closed_nondeg {
            mismatches.push(count_mismatch(id, "nondeg_count", n, closed_nondeg, nondeg));
        }
        let degenerate = all.len() as u64 - nondeg;
        if degenerate != degenerate_count_closed(id, n) {
            mismatches.push(count_mismatch(id, "census", n, degenerate_count_closed(id, n), degenerate));
        }
    }

    GroupSummary { group: id, specs: specs.len(), sampled, exhaustive, mismatches }
}

fn count_mismatch(group: GroupId, check: &'static str, n: usize, expected: u64, found: u64) -> Mismatch {
    Mismatch {
        group,
        spec: Some(format!("{group} degree {n}")),
        check,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Returns the mismatches for one spec and whether the oracle exhausted.
fn check_spec<F: RootOfUnityField>(
    spec: &RepSpec,
    table: &IrrepTable<F>,
    group: &GroupTable,
    pairs: &DualPairs,
    cfg: &VerifyConfig,
) -> (Vec<Mismatch>, Option<bool>) {
    let mut out = Vec::new();
    let mut push = |check, expected: String, found: String| {
        out.push(Mismatch { group: spec.group, spec: Some(spec.to_string()), check, expected, found })
    };
    let a = match analyze_spec(spec, table, group, cfg.seed, cfg.trials) {
        Ok(a) => a,
        Err(e) => {
            push("invariance", "forms invariant under all elements".into(), e.to_string());
            return (out, None);
        }
    };
    let closed = sym_skew_closed(spec);
    if a.dims.total != dim_closed(spec) {
        push("dim", dim_closed(spec).to_string(), a.dims.total.to_string());
    }
    if (a.dims.symmetric, a.dims.skew) != (closed.symmetric, closed.skew) {
        push("split", format!("{}+{}", closed.symmetric, closed.skew), format!("{}+{}", a.dims.symmetric, a.dims.skew));
    }
    if a.dims.symmetric + a.dims.skew != a.dims.total {
        push("split_consistency", a.dims.total.to_string(), format!("{}+{}", a.dims.symmetric, a.dims.skew));
    }
    let layout = spec.layout();
    if !a.basis.basis.iter().all(|x| off_pairing_blocks_zero(x, &layout, pairs)) {
        push("block_structure", "zero blocks outside A_G".into(), "nonzero block".into());
    }
    if a.nondeg.exists != nondeg_closed(spec) {
        push("nondeg", nondeg_closed(spec).to_string(), a.nondeg.exists.to_string());
    }
    if let Some(w) = &a.nondeg.witness {
        if !pairing_blocks_nonsingular(w, &layout, pairs) {
            push("block_nonsingularity", "non-singular A_G blocks".into(), format!("witness {w}"));
        }
    }
    let exhausted = matches!(a.nondeg.method, crate::invariants::NondegMethod::Exhaustive);
    (out, Some(exhausted))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let cfg = VerifyConfig { max_degree: 3, count_max: 6, ..Default::default() };
        let r = verify(&cfg).unwrap();
        assert!(r.passed(), "{:?}", r.first_counterexample());
        assert_eq!(r.groups.len(), 5);
        assert_eq!(r.groups[0].specs, 4 + 11 + 24);
    }

    #[test]
    fn corrupted_table_is_reported() {
        let cfg = VerifyConfig {
            max_degree: 2,
            count_max: 2,
            corruption: Some("z8:3:a:0:0".parse().unwrap()),
            ..Default::default()
        };
        let r = verify(&cfg).unwrap();
        assert!(!r.passed());
        let first = r.first_counterexample().unwrap();
        assert_eq!(first.group, GroupId::Z8);
    }

    #[test]
    fn record_fields() {
        let f = PrimeField::new(17).unwrap();
        let g = GroupTable::build(GroupId::Z8);
        let t = IrrepTable::new(GroupId::Z8, f);
        let spec = RepSpec::new(GroupId::Z8, vec![0, 0, 1, 1, 0, 0, 0, 0]).unwrap();
        let rec = FormRecord::from_analysis(&analyze_spec(&spec, &t, &g, DEFAULT_SEED, DEFAULT_TRIALS).unwrap());
        assert_eq!((rec.dim, rec.sym, rec.skew, rec.nondegenerate), (2, 1, 1, true));
        assert_eq!(rec.degree, 2);
    }
}
