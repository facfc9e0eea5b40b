use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;
use srt_core::geometry::{
    hilb_components, hilbert_chow_model, springer_desings, symplectic_reduction, theorem_predicates, ComponentCount,
};
use srt_core::partitions::all_labels;
use srt_core::repthy::{cauchy_check, h0, ks_presentation_check, Bounds, DominantWeight, Embedding};
use srt_core::{GroupKind, GroupType, OrbitLabel};

use crate::checks;
use crate::report::{sort_checks, CheckResult, VerifyReport, SCHEMA_VERSION};
use crate::{CliError, Config};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Dims,
    Factor,
    H0,
    Cauchy,
    Ks,
    Springer,
    Theorems,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["dims", "factor", "h0", "cauchy", "ks", "springer", "theorems", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Factor => "factor",
            Suite::H0 => "h0",
            Suite::Cauchy => "cauchy",
            Suite::Ks => "ks",
            Suite::Springer => "springer",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "dims" => Suite::Dims,
            "factor" => Suite::Factor,
            "h0" => Suite::H0,
            "cauchy" => Suite::Cauchy,
            "ks" => Suite::Ks,
            "springer" => Suite::Springer,
            "theorems" => Suite::Theorems,
            "all" => Suite::All,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite '{other}'; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// The `(n, m)` grid a suite ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub n_max: usize,
    pub m_max: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Self { n_max: 4, m_max: 8 }
    }
}

impl Grid {
    fn pairs(&self, group: GroupKind) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            if group == GroupKind::Symplectic && n % 2 == 1 {
                continue;
            }
            for m in 1..=self.m_max {
                out.push((n, m));
            }
        }
        out
    }

    fn capped(&self, n_max: usize, m_max: usize) -> Grid {
        Grid {
            n_max: self.n_max.min(n_max),
            m_max: self.m_max.min(m_max),
        }
    }
}

type Checks = Result<Vec<CheckResult>, CliError>;

fn over_grid(grid: &Grid, groups: &[GroupKind], f: impl Fn(GroupKind, usize, usize) -> Checks + Sync) -> Checks {
    let cases: Vec<(GroupKind, usize, usize)> = groups
        .iter()
        .flat_map(|&g| grid.pairs(g).into_iter().map(move |(n, m)| (g, n, m)))
        .collect();
    let nested = cases.par_iter().map(|&(g, n, m)| f(g, n, m)).collect::<Result<Vec<_>, _>>()?;
    Ok(nested.into_iter().flatten().collect())
}

const GROUPS: [GroupKind; 2] = [GroupKind::GeneralLinear, GroupKind::Symplectic];

fn dims(grid: &Grid, config: &Config) -> Checks {
    over_grid(grid, &GROUPS, |g, n, m| {
        let mut out = vec![checks::component_count(g, n, m)?, checks::top_dimension(g, n, m, config.seed)?];
        out.extend(checks::tangent_dims(g, n, m, config.seed)?);
        out.extend(checks::component_predicates(g, n, m, config)?);
        Ok(out)
    })
}

fn factor(grid: &Grid, config: &Config) -> Checks {
    over_grid(&grid.capped(3, 6), &GROUPS, |g, n, m| {
        let mut out = checks::quotient_images(g, n, m, config)?;
        if g == GroupKind::GeneralLinear {
            out.extend(checks::factorizations(n, m, config));
        }
        Ok(out)
    })
}

fn h0_suite(grid: &Grid, config: &Config) -> Checks {
    let repthy = config.repthy()?;
    let mut out = Vec::new();
    let weight_bound = config.weight_bound.min(4) as i64;
    let gl_cases: Vec<(usize, usize)> = (1..=grid.n_max.min(4)).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    let oracle: Vec<CheckResult> = gl_cases
        .par_iter()
        .map(|&(n, k)| -> Result<CheckResult, CliError> {
            let name = format!("h0.gt_vs_ct/GL{n}>GL{k}");
            for w in DominantWeight::gl_weights_within(n, weight_bound) {
                if w.size() > weight_bound as usize {
                    continue;
                }
                let gt = repthy.gt_invariant_dim(&w, k)?;
                let ct = repthy.ct_invariant_dim(&w, GroupType::gl(k), Embedding::Leading)?;
                if gt != ct {
                    return Ok(CheckResult::fail(name, json!({ "weight": w, "gt": gt, "ct": ct })));
                }
            }
            Ok(CheckResult::pass(name))
        })
        .collect::<Result<_, _>>()?;
    out.extend(oracle);
    for n in 1..=grid.n_max {
        for m in (2..=grid.m_max).step_by(2) {
            let big_n = (m / 2).min(n) as u64;
            let mut v = vec![0; n];
            v[0] = 1;
            let defining = DominantWeight::gl(v).expect("dominant");
            let got = (
                h0(GroupKind::GeneralLinear, n, m, &defining)?,
                h0(GroupKind::GeneralLinear, n, m, &defining.dual())?,
            );
            out.push(CheckResult::from_bool(format!("h0.defining/gl/n={n}/m={m}"), got == (big_n, big_n), || {
                json!({ "h0(V)": got.0, "h0(V*)": got.1, "N": big_n })
            }));
        }
    }
    // Sp_4 > Sp_2: C^4 = 2 + 2, so Lambda^2 C^4 has 2 invariants, Lambda^2_0 one, S^2 C^4 three
    for (entries, expected) in [(vec![0, 0], 1), (vec![1, 0], 2), (vec![1, 1], 1), (vec![2, 0], 3)] {
        let w = DominantWeight::sp(entries).expect("dominant");
        let got = repthy.ct_invariant_dim(&w, GroupType::sp(1), Embedding::Leading)?;
        out.push(CheckResult::from_bool(format!("h0.sp4_sp2/{w}"), got == expected, || {
            json!({ "expected": expected, "got": got })
        }));
    }
    Ok(out)
}

fn cauchy(config: &Config) -> Checks {
    let bounds = Bounds::default();
    let cases: Vec<(usize, usize)> = (1..=3).flat_map(|n| (1..=3).map(move |m| (n, m))).collect();
    cases
        .par_iter()
        .map(|&(n, m)| {
            let r = cauchy_check(n, m, config.degree_bound, &bounds)?;
            Ok(CheckResult::from_bool(format!("cauchy/n={n}/m={m}"), r.passed, || json!(r)))
        })
        .collect()
}

fn ks(config: &Config) -> Checks {
    let bounds = Bounds::default();
    (1..=3)
        .map(|n| {
            let r = ks_presentation_check(n, config.weight_bound, &bounds)?;
            Ok(CheckResult::from_bool(format!("ks/n={n}"), r.passed, || json!(r)))
        })
        .collect()
}

/// Expected number of Springer desingularizations of a 2-nilpotent orbit closure.
pub fn expected_springer_count(o: &OrbitLabel) -> usize {
    let (m, big_n) = (o.ambient.rank, o.twos());
    match o.ambient.kind {
        GroupKind::GeneralLinear if 2 * big_n == m => 1,
        GroupKind::GeneralLinear => 2,
        GroupKind::Symplectic => usize::from(big_n == m),
        GroupKind::Orthogonal if big_n + 1 == m => 2,
        GroupKind::Orthogonal => usize::from(big_n == m),
    }
}

fn springer() -> Checks {
    let mut out = Vec::new();
    for m in 1..=6 {
        for ambient in [GroupType::gl(m), GroupType::sp(m), GroupType::so(m)] {
            for o in all_labels(ambient).into_iter().filter(|o| o.partition.is_two_bounded()) {
                let models = springer_desings(&o)?;
                let expected = expected_springer_count(&o);
                let dims_ok = models.iter().all(|b| b.total_dim() == o.orbit_dim_formula());
                out.push(CheckResult::from_bool(format!("springer/{o}"), models.len() == expected && dims_ok, || {
                    json!({ "expected": expected, "models": models })
                }));
            }
        }
    }
    Ok(out)
}

fn theorems(grid: &Grid) -> Checks {
    let mut out = Vec::new();
    let mut overlaps = Vec::new();
    for g in [GroupKind::GeneralLinear, GroupKind::Orthogonal, GroupKind::Symplectic] {
        for n in 0..=50 {
            for m in 0..=50 {
                let (a, b) = theorem_predicates(g, n, m);
                if a && b {
                    overlaps.push(json!({ "group": g, "n": n, "m": m }));
                }
            }
        }
    }
    out.push(CheckResult::from_bool("theorems.disjoint", overlaps.is_empty(), || json!(overlaps)));
    let mut mismatches = Vec::new();
    for g in GROUPS {
        for n in 1..=50 {
            if g == GroupKind::Symplectic && n % 2 == 1 {
                continue;
            }
            for m in 1..=50 {
                let q = symplectic_reduction(g, n, m)?;
                let model = hilbert_chow_model(g, n, m)?;
                let dims: Vec<usize> = model.models().iter().map(|b| b.total_dim()).collect();
                if model.is_known() && dims != q.component_dims() {
                    mismatches.push(json!({ "group": g, "n": n, "m": m, "model": dims, "quotient": q.component_dims() }));
                }
            }
        }
    }
    out.push(CheckResult::from_bool("theorems.model_dims", mismatches.is_empty(), || json!(mismatches)));
    out.extend(over_grid(grid, &GROUPS, |g, n, m| {
        let mut v: Vec<CheckResult> = checks::reduction(g, n, m).into_iter().collect();
        v.push(checks::springer_consistency(g, n, m)?);
        Ok(v)
    })?);
    let inventory_ok = (2..=12).all(|m| {
        let gl1 = hilb_components(GroupKind::GeneralLinear, 1, m);
        let dims: Vec<Option<usize>> = gl1.components.iter().map(|c| c.dim).collect();
        gl1.count == ComponentCount::Exactly(2) && dims == vec![Some(2 * m - 2); 2]
    }) && (3..=12).all(|m| hilb_components(GroupKind::Symplectic, 2, m).count == ComponentCount::Irreducible)
        && hilb_components(GroupKind::Symplectic, 2, 2).count == ComponentCount::Exactly(2)
        && (4..=12).all(|m| {
            let h = hilb_components(GroupKind::GeneralLinear, 2, m);
            let dims: Vec<Option<usize>> = h.components.iter().map(|c| c.dim).collect();
            h.count == ComponentCount::AtLeast(2) && dims == vec![Some(4 * m - 8), Some(4 * m - 5)]
        });
    out.push(CheckResult::from_bool("theorems.hilb_inventory", inventory_ok, || json!("inventory mismatch")));
    Ok(out)
}

pub fn cmd_verify(suite: Suite, grid: Grid, config: &Config) -> Result<VerifyReport, CliError> {
    config.validate()?;
    let suites = match suite {
        Suite::All => vec![
            Suite::Dims,
            Suite::Factor,
            Suite::H0,
            Suite::Cauchy,
            Suite::Ks,
            Suite::Springer,
            Suite::Theorems,
        ],
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        let part = match s {
            Suite::Dims => dims(&grid, config)?,
            Suite::Factor => factor(&grid, config)?,
            Suite::H0 => h0_suite(&grid, config)?,
            Suite::Cauchy => cauchy(config)?,
            Suite::Ks => ks(config)?,
            Suite::Springer => springer()?,
            Suite::Theorems => theorems(&grid)?,
            Suite::All => unreachable!(),
        };
        checks.extend(part);
    }
    sort_checks(&mut checks);
    let mut report_config = config.clone();
    report_config.cache_path = None;
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION.to_string(),
        suite: suite.name().to_string(),
        config: report_config,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

pub fn render_text(r: &VerifyReport) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    for c in &r.checks {
        s.push_str(&c.render_line());
    }
    let failed = r.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(s, "{}: {} checks, {} failed (seed {})", r.suite, r.checks.len(), failed, r.config.seed);
    s
}
