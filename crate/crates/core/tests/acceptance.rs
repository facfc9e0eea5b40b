//! Acceptance criteria 1-10, run in order with their time limits.
//! Prints one `PASS`/`FAIL` line per criterion and exits nonzero on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use srt_core::geometry::{
    hilb_components, hilbert_chow_model, reduction_consistency, springer_desings, symplectic_reduction,
    theorem_predicates, verdict, ComponentCount,
};
use srt_core::momentmap::{
    factor_two_nilpotent, moment_gl, quotient_gl, sample_component, sample_generic, tangent_dim,
    top_components, zero_fiber_components, ZeroFiberPoint,
};
use srt_core::partitions::{all_labels, square_zero_normal_form};
use srt_core::repthy::{
    cauchy_check, ct_invariant_dim, gt_invariant_dim, h0, ks_presentation_check, Bounds, Embedding,
};
use srt_core::rng::{random_invertible, stream};
use srt_core::{DominantWeight, ExactMatrix, GroupKind, GroupType, OrbitLabel, VerdictCase};

const GL: GroupKind = GroupKind::GeneralLinear;
const SP: GroupKind = GroupKind::Symplectic;
const O: GroupKind = GroupKind::Orthogonal;

fn gl_top_dim(n: usize, m: usize) -> usize {
    if m >= 2 * n {
        2 * n * m - n * n
    } else if m.is_multiple_of(2) {
        n * m + m * m / 4
    } else {
        n * m + (m * m - 1) / 4
    }
}

fn sp_top_dim(n: usize, m: usize) -> usize {
    if m > n {
        2 * m * n - n * (n + 1) / 2
    } else {
        m * n + m * (m - 1) / 2
    }
}

fn criterion_1() {
    for n in 1..=4 {
        for m in 1..=8 {
            for desc in top_components(GL, n, m).unwrap() {
                let (point, _) = sample_generic(&desc, 1).unwrap();
                assert_eq!(tangent_dim(&point).unwrap(), gl_top_dim(n, m), "gl n={n} m={m} {desc}");
            }
            if n % 2 == 0 {
                for desc in top_components(SP, n, m).unwrap() {
                    let (point, _) = sample_generic(&desc, 1).unwrap();
                    assert_eq!(tangent_dim(&point).unwrap(), sp_top_dim(n, m), "sp n={n} m={m} {desc}");
                }
            }
        }
    }
}

fn component_predicates_hold(point: &ZeroFiberPoint, p: Option<usize>) -> bool {
    match (point, p) {
        (ZeroFiberPoint::Gl(pair), Some(p)) => {
            moment_gl(pair).is_zero() && pair.u2.rank() <= p && pair.u1.nullity() >= p
        }
        (ZeroFiberPoint::Sp(_), None) => point.is_in_zero_fiber(),
        _ => false,
    }
}

fn criterion_2() {
    for n in 1..=4 {
        for m in 1..=8 {
            let comps = zero_fiber_components(GL, n, m).unwrap();
            let expected = if m <= n {
                m + 1
            } else if m < 2 * n {
                2 * n - m + 1
            } else {
                1
            };
            assert_eq!(comps.len(), expected, "gl n={n} m={m}");
            for desc in &comps {
                let srt_core::ComponentIndex::Rank(p) = desc.index else { panic!("gl components are ranked") };
                for seed in 0..25 {
                    let point = sample_component(desc, seed).unwrap();
                    assert!(component_predicates_hold(&point, Some(p)), "{desc} seed {seed}");
                }
            }
            if n % 2 == 0 {
                let comps = zero_fiber_components(SP, n, m).unwrap();
                let expected = if m <= n { 2 } else { 1 };
                assert_eq!(comps.len(), expected, "sp n={n} m={m}");
                for desc in &comps {
                    for seed in 0..25 {
                        let point = sample_component(desc, seed).unwrap();
                        assert!(component_predicates_hold(&point, None), "{desc} seed {seed}");
                        if let (srt_core::ComponentIndex::Tag(t), ZeroFiberPoint::Sp(x)) = (desc.index, &point) {
                            match srt_core::momentmap::classify_sp_component(x) {
                                Ok(found) => assert_eq!(found, t, "{desc} seed {seed}"),
                                Err(srt_core::momentmap::MomentMapError::NonGeneric { .. }) => {}
                                Err(e) => panic!("{desc} seed {seed}: {e}"),
                            }
                        }
                    }
                }
            }
        }
    }
}

fn criterion_3() {
    for n in 1..=3 {
        for m in 1..=6 {
            let big_n = n.min(m / 2);
            let comps = zero_fiber_components(GL, n, m).unwrap();
            for i in 0..100u64 {
                let desc = &comps[i as usize % comps.len()];
                let point = sample_component(desc, 1000 + i).unwrap();
                let f = quotient_gl(point.as_gl().unwrap());
                assert!((&f * &f).is_zero(), "n={n} m={m} sample {i}");
                assert!(f.rank() <= big_n, "n={n} m={m} sample {i}");
            }
            for l in 0..=big_n {
                let normal: ExactMatrix = square_zero_normal_form(m, l);
                for i in 0..100u64 {
                    let mut rng = stream(i, (n * 100 + m * 10 + l) as u64);
                    let g = random_invertible(&mut rng, m);
                    let f = &(&g * &normal) * &g.inverse().unwrap();
                    let pair = factor_two_nilpotent(&f, n).unwrap();
                    assert_eq!(quotient_gl(&pair), f, "n={n} m={m} l={l} sample {i}");
                    assert!(moment_gl(&pair).is_zero(), "n={n} m={m} l={l} sample {i}");
                }
            }
        }
    }
}

fn criterion_4() {
    for m in 1..=8 {
        for big_n in 0..=(m / 2).min(4) {
            let o = OrbitLabel::two_nilpotent(GroupType::gl(m), big_n, None).unwrap();
            assert_eq!(o.orbit_dim_by_centralizer(), 2 * big_n * (m - big_n), "gl_{m} N={big_n}");
            assert_eq!(o.orbit_dim_formula(), 2 * big_n * (m - big_n));
        }
    }
    for m in 1..=5 {
        for o in all_labels(GroupType::so(m)).into_iter().filter(|o| o.partition.is_two_bounded()) {
            let big_n = o.twos();
            let expected = 2 * m * big_n - big_n * (big_n + 1);
            assert_eq!(o.orbit_dim_by_centralizer(), expected, "{o}");
            if big_n == m {
                assert_eq!(expected, m * (m - 1));
            }
        }
        for o in all_labels(GroupType::sp(m)).into_iter().filter(|o| o.partition.is_two_bounded()) {
            let big_n = o.twos();
            assert_eq!(o.orbit_dim_by_centralizer(), 2 * m * big_n + big_n - big_n * big_n, "{o}");
        }
    }
}

fn criterion_5() {
    let bounds = Bounds::default();
    for n in 1..=4 {
        for w in DominantWeight::gl_weights_within(n, 4).into_iter().filter(|w| w.size() <= 4) {
            for k in 0..=n {
                let gt = gt_invariant_dim(&w, k).unwrap();
                let ct = ct_invariant_dim(&w, GroupType::gl(k), Embedding::Leading, &bounds).unwrap();
                assert_eq!(gt, ct, "{w} over GL{k}");
            }
        }
        for m in 1..=8 {
            if m % 2 == 1 && m < 2 * n {
                continue;
            }
            let big_n = n.min(m / 2) as u64;
            let mut e = vec![0; n];
            e[0] = 1;
            let v = DominantWeight::gl(e).unwrap();
            assert_eq!(h0(GL, n, m, &v).unwrap(), big_n, "h0(V) n={n} m={m}");
            assert_eq!(h0(GL, n, m, &v.dual()).unwrap(), big_n, "h0(V*) n={n} m={m}");
        }
    }
    // C^4 = C^2 + 2C: Lambda^2 C^4 = 1 + 2 C^2 + 1 and S^2 C^4 = S^2 C^2 + 2 C^2 + 3
    for (e, expected) in [(vec![0, 0], 1), (vec![1, 0], 2), (vec![1, 1], 1), (vec![2, 0], 3)] {
        let w = DominantWeight::sp(e).unwrap();
        assert_eq!(ct_invariant_dim(&w, GroupType::sp(1), Embedding::Leading, &bounds).unwrap(), expected, "{w}");
    }
}

fn criterion_6() {
    let bounds = Bounds::default();
    for n in 1..=3 {
        for m in 1..=3 {
            let r = cauchy_check(n, m, 4, &bounds).unwrap();
            assert!(r.passed, "cauchy n={n} m''={m}: {r:?}");
        }
        for bound in 1..=4 {
            let r = ks_presentation_check(n, bound, &bounds).unwrap();
            assert!(r.passed && r.bijective && r.multiplicity_ok, "ks n={n} bound={bound}: {r:?}");
        }
    }
}

fn criterion_7() {
    for m in 1..=6 {
        for ambient in [GroupType::gl(m), GroupType::sp(m), GroupType::so(m)] {
            for o in all_labels(ambient).into_iter().filter(|o| o.partition.is_two_bounded()) {
                let big_n = o.twos();
                let expected = match ambient.kind {
                    GroupKind::GeneralLinear if 2 * big_n < m => 2,
                    GroupKind::GeneralLinear => 1,
                    GroupKind::Symplectic if big_n < m => 0,
                    GroupKind::Symplectic => 1,
                    GroupKind::Orthogonal if big_n + 1 == m => 2,
                    GroupKind::Orthogonal if big_n == m => 1,
                    GroupKind::Orthogonal => 0,
                };
                let models = springer_desings(&o).unwrap();
                assert_eq!(models.len(), expected, "{o}");
                for b in &models {
                    assert_eq!(b.total_dim(), o.orbit_dim_by_centralizer(), "{o}: {b}");
                }
            }
        }
    }
}

fn criterion_8() {
    for n in 0..=50 {
        for m in 0..=50 {
            let positive = n > 0 && m > 0;
            let expected = [
                (GL, positive && n + 1 >= m && m % 2 == 0, positive && ((n == 1 && m >= 3) || (n == 2 && m >= 4))),
                (O, positive && n + 1 >= 2 * m, positive && ((n == 1 && m > 1) || (n == 2 && m >= 2))),
                (
                    SP,
                    positive && n % 2 == 0 && m % 2 == 0 && n + 2 >= 2 * m,
                    positive && ((n == 2 && m > 2) || (n == 4 && m >= 4)),
                ),
            ];
            for (g, unique, dominates) in expected {
                assert_eq!(theorem_predicates(g, n, m), (unique, dominates), "{g:?} n={n} m={m}");
                assert!(!(unique && dominates), "{g:?} n={n} m={m}");
                if !positive || (g == SP && n % 2 == 1) {
                    continue;
                }
                let case = verdict(g, n, m).case;
                let want = if unique {
                    VerdictCase::SymplecticUniqueDesing
                } else if dominates {
                    VerdictCase::DesingStrictlyDominates
                } else {
                    VerdictCase::NotCoveredByTheorems
                };
                assert_eq!(case, want, "{g:?} n={n} m={m}");
                if g == O {
                    continue;
                }
                let model = hilbert_chow_model(g, n, m).unwrap();
                if model.is_known() {
                    let dims: Vec<usize> = model.models().iter().map(|b| b.total_dim()).collect();
                    assert_eq!(dims, symplectic_reduction(g, n, m).unwrap().component_dims(), "{g:?} n={n} m={m}");
                }
            }
        }
    }
}

fn criterion_9() {
    let mut covered = 0;
    let mut modeled = 0;
    for g in [GL, SP] {
        for n in 1..=4 {
            if g == SP && n % 2 == 1 {
                continue;
            }
            for m in 1..=8 {
                modeled += usize::from(symplectic_reduction(g, n, m).unwrap().h0_available);
                if let Ok(r) = reduction_consistency(g, n, m) {
                    assert!(r.consistent, "{r:?}");
                    assert_eq!(r.base_dim + r.fiber_dim, r.quotient_dim);
                    covered += 1;
                }
            }
        }
    }
    assert!(covered > 0);
    assert_eq!(covered, modeled, "every regime with a general fiber is covered");
}

fn criterion_10() {
    for m in 2..=30 {
        let h = hilb_components(GL, 1, m);
        assert_eq!(h.count, ComponentCount::Exactly(2), "gl n=1 m={m}");
        assert_eq!(h.components.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![Some(2 * m - 2); 2]);
    }
    for m in 3..=30 {
        assert_eq!(hilb_components(SP, 2, m).count, ComponentCount::Irreducible, "sp n=2 m={m}");
    }
    let h = hilb_components(SP, 2, 2);
    assert_eq!(h.count, ComponentCount::Exactly(2));
    assert_eq!(h.components.len(), 2);
    for m in 4..=30 {
        let h = hilb_components(GL, 2, m);
        let mut dims: Vec<usize> = h.components.iter().filter_map(|c| c.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![4 * m - 8, 4 * m - 5], "gl n=2 m={m}");
    }
}

fn main() {
    let criteria: [(u32, &str, u64, fn()); 10] = [
        (1, "zero-fiber tangent dimensions", 10, criterion_1),
        (2, "zero-fiber component counts and predicates", 10, criterion_2),
        (3, "quotient identification and factorization", 20, criterion_3),
        (4, "2-nilpotent orbit dimensions", 5, criterion_4),
        (5, "Hilbert functions via branching", 60, criterion_5),
        (6, "Cauchy identity and monomial-weight bijection", 60, criterion_6),
        (7, "Springer desingularization counts", 1, criterion_7),
        (8, "verdict clauses, disjointness, model dimensions", 1, criterion_8),
        (9, "reduction principle dimensions", 1, criterion_9),
        (10, "invariant Hilbert scheme inventory", 1, criterion_10),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, what, limit, run) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let timely = elapsed < Duration::from_secs(limit);
        let detail = match &outcome {
            Ok(()) if timely => String::new(),
            Ok(()) => format!(" -- exceeded the {limit} s limit"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!(" -- {msg}")
            }
        };
        let passed = outcome.is_ok() && timely;
        failures += usize::from(!passed);
        println!(
            "{} criterion {id}: {what} ({:.3} s / {limit} s){detail}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
