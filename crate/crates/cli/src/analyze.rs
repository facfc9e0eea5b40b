use serde_json::json;
use srt_core::geometry::{
    hilb_components, hilbert_chow_model, reduction_consistency, symplectic_reduction, theorem_predicates, verdict,
};
use srt_core::momentmap::zero_fiber_components;
use srt_core::repthy::DominantWeight;
use srt_core::GroupKind;

use crate::checks;
use crate::report::{sort_checks, CheckResult, H0Entry, Input, ReductionReport, SCHEMA_VERSION};
use crate::{CliError, Config};

pub fn validate_input(group: GroupKind, n: usize, m: usize) -> Result<(), CliError> {
    if n == 0 || m == 0 {
        return Err(CliError::Usage(format!("n and m must be at least 1 (got n = {n}, m = {m})")));
    }
    if group == GroupKind::Symplectic && !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!("--group sp needs an even --n (dim V), got {n}")));
    }
    Ok(())
}

/// Weights with `|lambda| <= bound` at which the report tabulates `h0`.
pub fn h0_weights(group: GroupKind, n: usize, bound: usize) -> Vec<DominantWeight> {
    let all = match group {
        GroupKind::GeneralLinear => DominantWeight::gl_weights_within(n, bound as i64),
        GroupKind::Symplectic => DominantWeight::sp_weights_within(n / 2, bound as i64),
        GroupKind::Orthogonal => Vec::new(),
    };
    all.into_iter().filter(|w| w.size() <= bound).collect()
}

/// Full analysis of `mu^-1(0) // G` for one `(G, n, m)`.
pub fn cmd_analyze(group: GroupKind, n: usize, m: usize, config: &Config) -> Result<ReductionReport, CliError> {
    config.validate()?;
    validate_input(group, n, m)?;
    let mut notes = Vec::new();
    let mut verification = Vec::new();
    let mut report_config = config.clone();
    report_config.cache_path = None;

    let v = verdict(group, n, m);
    if group == GroupKind::Orthogonal {
        let (a, b) = theorem_predicates(group, n, m);
        verification.push(CheckResult::from_bool("verdict.disjoint", !(a && b), || json!({ "n": n, "m": m })));
        notes.push("O(V): only the verdict is modeled; zero fiber, quotient and models are deferred".to_string());
        return Ok(ReductionReport {
            schema_version: SCHEMA_VERSION.to_string(),
            input: Input { group, n, m },
            config: report_config,
            zero_fiber: None,
            quotient: None,
            h0_table: Vec::new(),
            model: None,
            reduction: None,
            verdict: v,
            hilb_inventory: hilb_components(group, n, m),
            verification,
            notes,
        });
    }

    let zero_fiber = zero_fiber_components(group, n, m)?;
    let quotient = symplectic_reduction(group, n, m)?;
    let model = hilbert_chow_model(group, n, m)?;

    let repthy = config.repthy()?;
    let weights = h0_weights(group, n, config.weight_bound);
    let bounds = repthy.bounds;
    if config.weight_bound > bounds.max_weight {
        return Err(CliError::ResourceBound(format!(
            "--weight-bound {} exceeds the limit {}",
            config.weight_bound, bounds.max_weight
        )));
    }
    let h0_rank = if group == GroupKind::Symplectic { n / 2 } else { n };
    let tabulate = quotient.h0_available && h0_rank <= bounds.max_rank;
    let mut h0_table = Vec::new();
    if quotient.h0_available && !tabulate {
        notes.push(format!("h0 table omitted: rank {h0_rank} exceeds the limit {}", bounds.max_rank));
    }
    if tabulate {
        for w in &weights {
            h0_table.push(H0Entry {
                weight: w.clone(),
                h0: repthy.h0(group, n, m, w)?,
            });
        }
    } else if !quotient.h0_available {
        notes.push("h0 is not available: this regime is excluded from the classification".to_string());
    }

    verification.push(checks::component_count(group, n, m)?);
    verification.extend(checks::tangent_dims(group, n, m, config.seed)?);
    verification.extend(checks::component_predicates(group, n, m, config)?);
    verification.extend(checks::quotient_images(group, n, m, config)?);
    if group == GroupKind::GeneralLinear {
        verification.extend(checks::factorizations(n, m, config));
        if tabulate {
            verification.push(checks::h0_oracles(n, m, &weights, &repthy)?);
        }
    }
    verification.extend(checks::model_dims(group, n, m)?);
    verification.extend(checks::reduction(group, n, m));
    verification.push(checks::springer_consistency(group, n, m)?);
    sort_checks(&mut verification);
    notes.extend(v.unverified.iter().map(|c| format!("unverified: {c}")));

    Ok(ReductionReport {
        schema_version: SCHEMA_VERSION.to_string(),
        input: Input { group, n, m },
        config: report_config,
        zero_fiber: Some(zero_fiber),
        quotient: Some(quotient),
        h0_table,
        model: Some(model),
        reduction: reduction_consistency(group, n, m).ok(),
        verdict: v,
        hilb_inventory: hilb_components(group, n, m),
        verification,
        notes,
    })
}

/// Human-readable rendering of a report.
pub fn render_text(r: &ReductionReport) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let i = &r.input;
    let _ = writeln!(s, "{} n={} m={}  (seed {})", i.group.short_name(), i.n, i.m, r.config.seed);
    if let Some(zf) = &r.zero_fiber {
        let _ = writeln!(s, "zero fiber: {} component(s)", zf.len());
        for c in zf {
            let _ = writeln!(s, "  {c}");
        }
    }
    if let Some(q) = &r.quotient {
        let comps: Vec<String> = q.components.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "quotient: closure of {} in {} (dim {})", comps.join(" u "), q.ambient, q.dim());
        for st in &q.strata {
            let _ = writeln!(s, "  stratum {} dim {}", st.label, st.dim);
        }
        match &q.singular_locus {
            srt_core::geometry::SingularLocus::Smooth => {
                let _ = writeln!(s, "  smooth");
            }
            srt_core::geometry::SingularLocus::Closure(l) => {
                let _ = writeln!(s, "  singular locus: closure of {l}");
            }
        }
    }
    if !r.h0_table.is_empty() {
        let entries: Vec<String> = r.h0_table.iter().map(|e| format!("{}:{}", e.weight, e.h0)).collect();
        let _ = writeln!(s, "h0: {}", entries.join(" "));
    }
    if let Some(model) = &r.model {
        match model {
            srt_core::geometry::HilbertChowModel::Known(ms) => {
                for b in ms {
                    let _ = writeln!(s, "model: {b} (dim {})", b.total_dim());
                }
            }
            srt_core::geometry::HilbertChowModel::NotKnown => {
                let _ = writeln!(s, "model: not known");
            }
        }
    }
    let v = &r.verdict;
    let springer = v.springer_count.map_or("-".to_string(), |c| c.to_string());
    let _ = writeln!(s, "verdict: {:?} (springer desingularizations: {springer})", v.case);
    for c in &v.citations {
        let _ = writeln!(s, "  because {c}");
    }
    let _ = writeln!(s, "hilbert scheme components: {:?}", r.hilb_inventory.count);
    for c in &r.verification {
        s.push_str(&c.render_line());
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}
