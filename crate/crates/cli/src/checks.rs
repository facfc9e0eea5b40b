//! Individual property checks shared by `analyze` and `verify`.

use serde_json::json;
use srt_core::geometry::{hilbert_chow_model, reduction_consistency, springer_desings, symplectic_reduction, HilbertChowModel};
use srt_core::momentmap::{
    classify_sp_component, factor_two_nilpotent, moment_gl, quadratic_gram, quotient_gl, sample_component,
    sample_generic, so_orbit_tag, sp_moment_zero, sp_quotient, tangent_dim, zero_fiber_components, ZeroFiberPoint,
};
use srt_core::partitions::square_zero_normal_form;
use srt_core::repthy::{CachedRepthy, DominantWeight, Embedding};
use srt_core::rng::{random_invertible, stream};
use srt_core::{ComponentDescriptor, ComponentIndex, ExactMatrix, GroupKind, GroupType};

use crate::{CheckResult, CliError, Config};

fn tag(group: GroupKind, n: usize, m: usize) -> String {
    format!("{}/n={n}/m={m}", group.short_name())
}

fn component_tag(d: &ComponentDescriptor) -> String {
    let idx = match d.index {
        ComponentIndex::Rank(p) => format!("X{p}"),
        ComponentIndex::Tag(t) => format!("X{t:?}"),
        ComponentIndex::Whole => "X".to_string(),
    };
    format!("{}/{idx}", tag(d.group, d.n, d.m))
}

/// `m+1`, `2n-m+1` or `1` components for GL; `1` or `2` for Sp.
pub fn expected_component_count(group: GroupKind, n: usize, m: usize) -> usize {
    match group {
        GroupKind::GeneralLinear if m <= n => m + 1,
        GroupKind::GeneralLinear if m < 2 * n => 2 * n - m + 1,
        GroupKind::Symplectic if m <= n => 2,
        _ => 1,
    }
}

pub fn component_count(group: GroupKind, n: usize, m: usize) -> Result<CheckResult, CliError> {
    let got = zero_fiber_components(group, n, m)?.len();
    let expected = expected_component_count(group, n, m);
    Ok(CheckResult::from_bool(format!("zero_fiber.count/{}", tag(group, n, m)), got == expected, || {
        json!({ "expected": expected, "got": got })
    }))
}

/// Tangent-space certificate at a generic point of every component.
pub fn tangent_dims(group: GroupKind, n: usize, m: usize, seed: u64) -> Result<Vec<CheckResult>, CliError> {
    let mut out = Vec::new();
    for desc in zero_fiber_components(group, n, m)? {
        let name = format!("zero_fiber.tangent/{}", component_tag(&desc));
        let check = match sample_generic(&desc, seed) {
            Ok(_) => CheckResult::pass(name),
            Err(e) => CheckResult::fail(name, json!({ "component": desc, "error": e.to_string() })),
        };
        out.push(check.with_seed(seed));
    }
    Ok(out)
}

fn point_predicates(desc: &ComponentDescriptor, point: &ZeroFiberPoint) -> Result<(), String> {
    match (point, desc.index) {
        (ZeroFiberPoint::Gl(p), ComponentIndex::Rank(rank)) => {
            if !moment_gl(p).is_zero() {
                return Err("u1 u2 != 0".into());
            }
            // im u2 in L in ker u1 for some L of dimension `rank`
            if p.u2.rank() > rank || p.u1.nullity() < rank {
                return Err(format!("rank u2 = {}, dim ker u1 = {}, p = {rank}", p.u2.rank(), p.u1.nullity()));
            }
            Ok(())
        }
        (ZeroFiberPoint::Sp(x), index) => {
            if !sp_moment_zero(x) {
                return Err("w w^t != 0".into());
            }
            if let ComponentIndex::Tag(t) = index {
                match classify_sp_component(x) {
                    Ok(found) if found == t => {}
                    Ok(found) => return Err(format!("classified as {found:?}")),
                    // non-generic points lie on both components
                    Err(srt_core::momentmap::MomentMapError::NonGeneric { .. }) => {}
                    Err(e) => return Err(e.to_string()),
                }
            }
            Ok(())
        }
        _ => Err("point and component disagree on the group".into()),
    }
}

/// Defining predicates of each component at `config.sample_count` seeded samples.
pub fn component_predicates(group: GroupKind, n: usize, m: usize, config: &Config) -> Result<Vec<CheckResult>, CliError> {
    let mut out = Vec::new();
    for desc in zero_fiber_components(group, n, m)? {
        let name = format!("zero_fiber.predicates/{}", component_tag(&desc));
        let mut check = CheckResult::pass(name.clone());
        for i in 0..config.sample_count {
            let seed = config.sample_seed(i);
            let point = sample_component(&desc, seed)?;
            if let Err(reason) = point_predicates(&desc, &point) {
                check = CheckResult::fail(name, json!({ "sample": i, "reason": reason, "point": point })).with_seed(seed);
                break;
            }
        }
        out.push(check.with_seed_if_absent(config.seed));
    }
    Ok(out)
}

trait SeedDefault {
    fn with_seed_if_absent(self, seed: u64) -> Self;
}

impl SeedDefault for CheckResult {
    fn with_seed_if_absent(self, seed: u64) -> Self {
        if self.seed.is_none() {
            self.with_seed(seed)
        } else {
            self
        }
    }
}

/// Images of sampled zero-fiber points lie in the expected orbit closure.
pub fn quotient_images(group: GroupKind, n: usize, m: usize, config: &Config) -> Result<Vec<CheckResult>, CliError> {
    let quotient = symplectic_reduction(group, n, m)?;
    let top = quotient.components[0].twos();
    let mut out = Vec::new();
    for desc in zero_fiber_components(group, n, m)? {
        let name = format!("quotient.image/{}", component_tag(&desc));
        let mut failure = None;
        for i in 0..config.sample_count {
            let seed = config.sample_seed(i);
            let reason = match sample_component(&desc, seed)? {
                ZeroFiberPoint::Gl(p) => {
                    let f = quotient_gl(&p);
                    if !(&f * &f).is_zero() {
                        Some(format!("(u2 u1)^2 != 0: {f}"))
                    } else if f.rank() > top {
                        Some(format!("rank {} > N = {top}", f.rank()))
                    } else {
                        None
                    }
                }
                ZeroFiberPoint::Sp(x) => {
                    let f = sp_quotient(&x);
                    let q = quadratic_gram(m);
                    let tagged = match desc.index {
                        ComponentIndex::Tag(t) => Some(t),
                        _ => None,
                    };
                    if !(&(&f.transpose() * &q) + &(&q * &f)).is_zero() {
                        Some(format!("w^t w not in so(E): {f}"))
                    } else if !(&f * &f).is_zero() {
                        Some(format!("(w^t w)^2 != 0: {f}"))
                    } else if f.rank() > top {
                        Some(format!("rank {} > {top}", f.rank()))
                    } else if let (Some(t), true) = (tagged, f.rank() == m) {
                        (so_orbit_tag(&f) != Some(t)).then(|| format!("image in the wrong orbit, expected {t:?}"))
                    } else {
                        None
                    }
                }
            };
            if let Some(reason) = reason {
                failure = Some((i, seed, reason));
                break;
            }
        }
        out.push(match failure {
            None => CheckResult::pass(name).with_seed(config.seed),
            Some((i, seed, reason)) => CheckResult::fail(name, json!({ "sample": i, "reason": reason })).with_seed(seed),
        });
    }
    Ok(out)
}

/// `factor_two_nilpotent` inverts the quotient map on random conjugates of each `f_l`, `l <= N`.
pub fn factorizations(n: usize, m: usize, config: &Config) -> Vec<CheckResult> {
    let big_n = (m / 2).min(n);
    (0..=big_n)
        .map(|l| {
            let name = format!("quotient.factor/{}/l={l}", tag(GroupKind::GeneralLinear, n, m));
            let normal = square_zero_normal_form(m, l);
            for i in 0..config.sample_count {
                let seed = config.sample_seed(i);
                let mut rng = stream(seed, l as u64);
                let g: ExactMatrix = random_invertible(&mut rng, m);
                let f = &(&g * &normal) * &g.inverse().expect("invertible");
                let ok = match factor_two_nilpotent(&f, n) {
                    Ok(p) => quotient_gl(&p) == f && moment_gl(&p).is_zero(),
                    Err(_) => false,
                };
                if !ok {
                    return CheckResult::fail(name, json!({ "sample": i, "f": f.to_string() })).with_seed(seed);
                }
            }
            CheckResult::pass(name).with_seed(config.seed)
        })
        .collect()
}

pub fn model_dims(group: GroupKind, n: usize, m: usize) -> Result<Option<CheckResult>, CliError> {
    let quotient = symplectic_reduction(group, n, m)?;
    let HilbertChowModel::Known(models) = hilbert_chow_model(group, n, m)? else {
        return Ok(None);
    };
    let dims: Vec<usize> = models.iter().map(|b| b.total_dim()).collect();
    let expected = quotient.component_dims();
    Ok(Some(CheckResult::from_bool(format!("model.dim/{}", tag(group, n, m)), dims == expected, || {
        json!({ "model_dims": dims, "quotient_dims": expected })
    })))
}

pub fn reduction(group: GroupKind, n: usize, m: usize) -> Option<CheckResult> {
    let r = reduction_consistency(group, n, m).ok()?;
    Some(CheckResult::from_bool(format!("reduction.dims/{}", tag(group, n, m)), r.consistent, || json!(r)))
}

pub fn springer_consistency(group: GroupKind, n: usize, m: usize) -> Result<CheckResult, CliError> {
    let quotient = symplectic_reduction(group, n, m)?;
    let counts = quotient
        .components
        .iter()
        .map(|c| springer_desings(c).map(|v| v.len()))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = srt_core::geometry::verdict(group, n, m);
    let ok = counts.iter().all(|&c| Some(c) == verdict.springer_count);
    Ok(CheckResult::from_bool(format!("springer.count/{}", tag(group, n, m)), ok, || {
        json!({ "per_component": counts, "verdict": verdict.springer_count })
    }))
}

/// Gelfand–Tsetlin count and Weyl-integration count agree on the given GL weights.
pub fn h0_oracles(n: usize, m: usize, weights: &[DominantWeight], repthy: &CachedRepthy) -> Result<CheckResult, CliError> {
    let name = format!("h0.oracles/{}", tag(GroupKind::GeneralLinear, n, m));
    if m >= 2 * n || m % 2 == 1 {
        return Ok(CheckResult::pass(name));
    }
    let k = n - m / 2;
    for w in weights {
        if w.size() > repthy.bounds.max_weight || n > repthy.bounds.max_rank {
            continue;
        }
        let gt = repthy.gt_invariant_dim(w, k)?;
        let ct = repthy.ct_invariant_dim(w, GroupType::gl(k), Embedding::Leading)?;
        if gt != ct {
            return Ok(CheckResult::fail(name, json!({ "weight": w, "gt": gt, "ct": ct })));
        }
    }
    Ok(CheckResult::pass(name))
}

/// Tangent certificate at a generic point of the top component equals the closed form.
pub fn top_dimension(group: GroupKind, n: usize, m: usize, seed: u64) -> Result<CheckResult, CliError> {
    let name = format!("zero_fiber.top_dim/{}", tag(group, n, m));
    let closed = match group {
        GroupKind::GeneralLinear => srt_core::momentmap::gl_zero_fiber_dim(n, m),
        _ => srt_core::momentmap::sp_zero_fiber_dim(n, m),
    };
    let top = srt_core::momentmap::top_components(group, n, m)?;
    let check = match sample_generic(&top[0], seed) {
        Ok((point, _)) => {
            let got = tangent_dim(&point)?;
            CheckResult::from_bool(name, got == closed, || json!({ "tangent": got, "closed_form": closed }))
        }
        Err(e) => CheckResult::fail(name, json!({ "closed_form": closed, "error": e.to_string() })),
    };
    Ok(check.with_seed(seed))
}
