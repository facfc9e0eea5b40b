use proptest::prelude::*;
use srt_core::partitions::{all_labels, all_partitions, closure_leq, validate_orbit};
use srt_core::{GroupType, OrbitLabel, OrbitTag, Partition};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn dims(ambient: GroupType) -> Vec<(String, usize)> {
    all_labels(ambient).into_iter().map(|o| (o.to_string(), o.orbit_dim())).collect()
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (1..=10).map(|n| all_partitions(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let five: Vec<String> = all_partitions(5).iter().map(|p| p.to_string()).collect();
    assert_eq!(five, ["[5]", "[4,1]", "[3,2]", "[3,1^2]", "[2^2,1]", "[2,1^3]", "[1^5]"]);
}

#[test]
fn so4_orbit_dimensions() {
    let expected = [("so_4 [3,1]", 4), ("so_4 [2^2]^I", 2), ("so_4 [2^2]^II", 2), ("so_4 [1^4]", 0)];
    assert_eq!(dims(GroupType::so(2)), expected.map(|(s, d)| (s.to_string(), d)));
}

#[test]
fn sp6_orbit_dimensions() {
    let expected = [
        ("sp_6 [6]", 18),
        ("sp_6 [4,2]", 16),
        ("sp_6 [4,1^2]", 14),
        ("sp_6 [3^2]", 14),
        ("sp_6 [2^3]", 12),
        ("sp_6 [2^2,1^2]", 10),
        ("sp_6 [2,1^4]", 6),
        ("sp_6 [1^6]", 0),
    ];
    assert_eq!(dims(GroupType::sp(3)), expected.map(|(s, d)| (s.to_string(), d)));
}

#[test]
fn so8_has_two_very_even_pairs() {
    let labels = dims(GroupType::so(4));
    assert_eq!(labels.len(), 12);
    for name in ["so_8 [4^2]^I", "so_8 [4^2]^II"] {
        assert!(labels.contains(&(name.to_string(), 20)));
    }
    for name in ["so_8 [2^4]^I", "so_8 [2^4]^II"] {
        assert!(labels.contains(&(name.to_string(), 12)));
    }
    assert!(labels.contains(&("so_8 [3,2^2,1]".to_string(), 16)));
}

#[test]
fn parity_rules() {
    assert!(validate_orbit(GroupType::sp(2), &p(&[3, 1])).unwrap().is_empty());
    assert!(validate_orbit(GroupType::so(3), &p(&[2, 1, 1, 1, 1])).unwrap().is_empty());
    assert!(validate_orbit(GroupType::so(3), &p(&[2, 1])).is_err());
    assert_eq!(validate_orbit(GroupType::so(3), &p(&[2, 2, 1, 1])).unwrap().len(), 1);
    assert_eq!(validate_orbit(GroupType::so(2), &p(&[2, 2])).unwrap().len(), 2);
    assert_eq!(validate_orbit(GroupType::sp(2), &p(&[2, 1, 1])).unwrap().len(), 1);
}

#[test]
fn two_nilpotent_closure_order_is_by_rank() {
    let gl6 = GroupType::gl(6);
    let labels: Vec<OrbitLabel> = (0..=3).map(|k| OrbitLabel::two_nilpotent(gl6, k, None).unwrap()).collect();
    for a in &labels {
        for b in &labels {
            assert_eq!(closure_leq(a, b).unwrap(), a.twos() <= b.twos());
        }
    }
    let so = GroupType::so(4);
    let one = OrbitLabel::two_nilpotent(so, 4, Some(OrbitTag::I)).unwrap();
    let two = OrbitLabel::two_nilpotent(so, 4, Some(OrbitTag::II)).unwrap();
    assert!(!closure_leq(&one, &two).unwrap());
    let below = OrbitLabel::two_nilpotent(so, 2, None).unwrap();
    assert!(closure_leq(&below, &one).unwrap() && closure_leq(&below, &two).unwrap());
}

proptest! {
    #[test]
    fn closed_form_matches_centralizer(m in 1usize..=6, kind in 0u8..3) {
        let ambient = match kind {
            0 => GroupType::gl(m),
            1 => GroupType::sp(m.min(4)),
            _ => GroupType::so(m.min(4)),
        };
        for o in all_labels(ambient) {
            prop_assert_eq!(o.orbit_dim_formula(), o.orbit_dim_by_centralizer(), "{}", o);
        }
    }

    #[test]
    fn transpose_is_an_involution(n in 1usize..=12, pick in any::<prop::sample::Index>()) {
        let parts = all_partitions(n);
        let q = &parts[pick.index(parts.len())];
        prop_assert_eq!(&q.transpose().transpose(), q);
        prop_assert_eq!(q.transpose().size(), n);
    }
}
