//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rayon::prelude::*;

use octoforms::field::{Cyclotomic8, PrimeField, RootOfUnityField, SAMPLING_PRIME};
use octoforms::groups::{GroupId, GroupTable};
use octoforms::invariants::{
    census, char2_bruteforce, char2_dims, count_nondeg_closed, dim_closed, nondeg_closed, nondeg_oracle,
    solve_invariant_space, spec_rng, sym_skew_closed, sym_skew_split_bruteforce, Census, SpaceDims, DEFAULT_TRIALS,
};
use octoforms::irreps::{DualPairs, IrrepTable, TableData};
use octoforms::repspace::{count_closed, enumerate_specs, RepSpec};
use octoforms::verify::DEFAULT_SEED;

const MAX_DEGREE: usize = 6;

type Outcome = Result<String, String>;

/// What the brute-force solver and the sampling oracle report for one spec.
#[derive(Debug, Clone, Copy)]
struct Solved {
    dims: SpaceDims,
    nondeg: bool,
}

type Sweep = BTreeMap<RepSpec, Solved>;

fn all_specs(max: usize) -> Vec<RepSpec> {
    GroupId::ALL.iter().flat_map(|&g| (1..=max).flat_map(move |n| enumerate_specs(g, n))).collect()
}

fn sweep<F: RootOfUnityField>(field: F) -> Result<Sweep, String> {
    let tables: BTreeMap<GroupId, (GroupTable, IrrepTable<F>)> =
        GroupId::ALL.iter().map(|&g| (g, (GroupTable::build(g), IrrepTable::new(g, field.clone())))).collect();
    all_specs(MAX_DEGREE)
        .into_par_iter()
        .map(|spec| {
            let (group, table) = &tables[&spec.group];
            let basis = solve_invariant_space(&spec, table, group).map_err(|e| e.to_string())?;
            let dims = sym_skew_split_bruteforce(&basis.field, &basis.basis);
            let nondeg = nondeg_oracle(&basis, &mut spec_rng(DEFAULT_SEED, &spec), DEFAULT_TRIALS).exists;
            Ok((spec, Solved { dims, nondeg }))
        })
        .collect()
}

fn first_failures(failures: &[String]) -> String {
    let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
    format!("{} failures, first: {}", failures.len(), shown.join("; "))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0usize;
    for g in GroupId::ALL {
        for n in 0..=20 {
            let got = enumerate_specs(g, n).len();
            total += got;
            if got as u64 != count_closed(g, n) {
                failures.push(format!("{g} n={n}: enumerated {got}, closed form {}", count_closed(g, n)));
            }
        }
    }
    for (g, n, want) in [
        (GroupId::D4, 2, 11),
        (GroupId::Q8, 2, 11),
        (GroupId::Z8, 1, 8),
        (GroupId::Z4xZ2, 1, 8),
        (GroupId::Z2xZ2xZ2, 1, 8),
    ] {
        if enumerate_specs(g, n).len() != want {
            failures.push(format!("{g} n={n}: spot value {want} not reproduced"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{total} specs enumerated for 0 ≤ n ≤ 20 in {:.1?}", start.elapsed()))
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_2(sweeps: &[(&str, &Sweep)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, s) in sweeps {
        for (spec, r) in s.iter() {
            checked += 1;
            if r.dims.total != dim_closed(spec) {
                failures.push(format!("{name} {spec}: solver {} vs closed {}", r.dims.total, dim_closed(spec)));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} (field, spec) pairs, degree ≤ {MAX_DEGREE}"))
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_3(sweeps: &[(&str, &Sweep)]) -> Outcome {
    let mut failures = Vec::new();
    for (name, s) in sweeps {
        for (spec, r) in s.iter() {
            let c = sym_skew_closed(spec);
            if r.dims.symmetric + r.dims.skew != r.dims.total {
                failures.push(format!(
                    "{name} {spec}: sym {} + skew {} ≠ total {}",
                    r.dims.symmetric, r.dims.skew, r.dims.total
                ));
            }
            if (r.dims.symmetric, r.dims.skew) != (c.symmetric, c.skew) {
                failures.push(format!(
                    "{name} {spec}: solver split {}+{}, closed {}+{}",
                    r.dims.symmetric, r.dims.skew, c.symmetric, c.skew
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok("solver split equals closed split and sym + skew = total everywhere".into())
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_4(sampling: &Sweep, others: &[(&str, &Sweep)]) -> Outcome {
    let mut failures = Vec::new();
    for (spec, r) in sampling {
        if r.nondeg != nondeg_closed(spec) {
            failures.push(format!(
                "GF({SAMPLING_PRIME}) {spec}: oracle {} vs closed {}",
                r.nondeg,
                nondeg_closed(spec)
            ));
        }
        for (name, s) in others {
            match s.get(spec) {
                Some(o) if o.nondeg == r.nondeg && o.dims.total == r.dims.total => {}
                Some(o) => failures.push(format!(
                    "{spec}: GF({SAMPLING_PRIME}) gives dim {} nondeg {}, {name} gives dim {} nondeg {}",
                    r.dims.total, r.nondeg, o.dims.total, o.nondeg
                )),
                None => failures.push(format!("{spec} missing from the {name} sweep")),
            }
        }
    }
    if failures.is_empty() {
        let yes = sampling.values().filter(|r| r.nondeg).count();
        Ok(format!(
            "{} specs over GF({SAMPLING_PRIME}), seed {DEFAULT_SEED:#x}: {yes} with a non-degenerate form, zero disagreements; same answers over GF(17) and Q(ζ8)",
            sampling.len()
        ))
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for g in GroupId::ALL {
        for n in 1..=12 {
            let filtered = enumerate_specs(g, n).iter().filter(|s| nondeg_closed(s)).count() as u64;
            let c = census(g, n);
            if filtered != count_nondeg_closed(g, n) {
                failures.push(format!("{g} n={n}: filtered {filtered}, closed {}", count_nondeg_closed(g, n)));
            }
            if c.total != count_closed(g, n) || c.degenerate != c.total - filtered {
                failures.push(format!("{g} n={n}: census {c:?} inconsistent with enumeration"));
            }
            let always = matches!(g, GroupId::D4 | GroupId::Q8 | GroupId::Z2xZ2xZ2);
            if always && c.degenerate != 0 {
                failures.push(format!("{g} n={n}: {} degenerate representations", c.degenerate));
            }
        }
    }
    for (g, n, want) in [
        (GroupId::Z8, 2, Census { total: 36, nondegenerate: 6, degenerate: 30 }),
        (GroupId::Z4xZ2, 2, Census { total: 36, nondegenerate: 12, degenerate: 24 }),
    ] {
        if census(g, n) != want {
            failures.push(format!("{g} n={n}: census {:?}, expected {want:?}", census(g, n)));
        }
    }
    if census(GroupId::D4, 5).degenerate != 0 {
        failures.push("D4 n=5 has degenerate representations".into());
    }
    if failures.is_empty() {
        Ok("n ≤ 12 for all groups; Z8 n=2 (36, 6, 30), Z4xZ2 n=2 (36, 12, 24)".into())
    } else {
        Err(first_failures(&failures))
    }
}

fn validate_all<F: RootOfUnityField>(field: F, failures: &mut Vec<String>) {
    for g in GroupId::ALL {
        let group = GroupTable::build(g);
        let report = IrrepTable::from_data(&TableData::printed(g), field.clone()).validate(&group);
        for v in report.violations {
            failures.push(format!("{g} over {}: {v}", report.field));
        }
    }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    validate_all(PrimeField::new(17).map_err(|e| e.to_string())?, &mut failures);
    validate_all(Cyclotomic8, &mut failures);
    let listed: [(GroupId, &[(usize, usize)]); 2] = [
        (GroupId::Z8, &[(1, 1), (2, 2), (3, 4), (4, 3), (5, 6), (6, 5), (7, 8), (8, 7)]),
        (GroupId::Z4xZ2, &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 6), (6, 5), (7, 8), (8, 7)]),
    ];
    for (g, pairs) in listed {
        let table = IrrepTable::new(g, Cyclotomic8);
        match table.dual_pairs(&GroupTable::build(g)) {
            Ok(p) if p.pairs == pairs.iter().copied().collect() && p == DualPairs::canonical(g) => {}
            Ok(p) => failures.push(format!("{g}: computed pairs {:?}", p.pairs)),
            Err(e) => failures.push(format!("{g}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok("five tables valid over GF(17) and Q(ζ8); Z8 and Z4xZ2 pair lists match".into())
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=8 {
        let d = char2_dims(n);
        if (d.total, d.symmetric, d.diagonal, d.alternating) != (n * n, n * (n + 1) / 2, n, n * (n - 1) / 2) {
            failures.push(format!("n={n}: {d:?}"));
        }
        if d.symmetric != d.diagonal + d.alternating {
            failures.push(format!("n={n}: symmetric ≠ diagonal + alternating"));
        }
    }
    for n in 1..=4 {
        let b = char2_bruteforce(n);
        if b.total != n * n {
            failures.push(format!("GF(2) solve n={n}: dimension {}", b.total));
        }
        if b != char2_dims(n) {
            failures.push(format!("GF(2) solve n={n}: {b:?} vs {:?}", char2_dims(n)));
        }
    }
    if failures.is_empty() {
        Ok("closed dims for 1 ≤ n ≤ 8; GF(2) solve gives n² for n ≤ 4".into())
    } else {
        Err(first_failures(&failures))
    }
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_octoforms");
    let corruptions: Vec<_> = GroupId::ALL.iter().flat_map(|&g| TableData::printed(g).all_corruptions()).collect();
    let mut failures = Vec::new();
    for c in &corruptions {
        let out = Command::new(bin)
            .args(["verify", "--max-degree", "2", "--count-max", "2", "--corrupt", &c.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        if out.status.code() != Some(2) {
            failures.push(format!("{c}: exit {:?}", out.status.code()));
        } else if !stdout.lines().any(|l| l.starts_with("counterexample: ")) {
            failures.push(format!("{c}: no counterexample printed"));
        }
    }
    if failures.is_empty() {
        Ok(format!("all {} single-entry corruptions make verify exit 2 with a counterexample", corruptions.len()))
    } else {
        Err(first_failures(&failures))
    }
}

fn main() {
    let timed = |f: &dyn Fn() -> Result<Sweep, String>| {
        let t = Instant::now();
        f().map(|s| (s, t.elapsed()))
    };
    let gf17 = timed(&|| sweep(PrimeField::new(17).map_err(|e| e.to_string())?));
    let cyc = timed(&|| sweep(Cyclotomic8));
    let gf65537 = timed(&|| sweep(PrimeField::new(SAMPLING_PRIME).map_err(|e| e.to_string())?));

    let with_sweeps = |f: &dyn Fn(&Sweep, &Sweep, &Sweep) -> Outcome| match (&gf17, &cyc, &gf65537) {
        (Ok((a, _)), Ok((b, _)), Ok((c, _))) => f(a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => Err(format!("sweep aborted: {e}")),
    };
    let timing = match (&gf17, &cyc) {
        (Ok((_, a)), Ok((_, b))) => format!(" [{:.1?} over GF(17), {:.1?} over Q(ζ8)]", a, b),
        _ => String::new(),
    };

    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "representation counts", criterion_1()),
        (
            2,
            "dimension formula",
            with_sweeps(&|a, b, _| criterion_2(&[("GF(17)", a), ("Q(ζ8)", b)]).map(|s| s + &timing)),
        ),
        (3, "symmetric/skew split", with_sweeps(&|a, b, _| criterion_3(&[("GF(17)", a), ("Q(ζ8)", b)]))),
        (4, "non-degeneracy", with_sweeps(&|a, b, c| criterion_4(c, &[("GF(17)", a), ("Q(ζ8)", b)]))),
        (5, "non-degenerate counts and census", criterion_5()),
        (6, "irrep table validation", criterion_6()),
        (7, "characteristic 2", criterion_7()),
        (8, "corrupted tables are caught", criterion_8()),
    ];

    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS - {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL - {why}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
