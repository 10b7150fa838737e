use hurwitz_core::arith::{frac, int};
use hurwitz_core::hurwitz::CharacterEngine;
use hurwitz_core::intersection::elsv_genus0;
use hurwitz_core::oracle::{oracle_connected, within_bound};
use hurwitz_core::recursion::{h0_closed, h0_recursion, h1_recursion, h2_recursion};
use hurwitz_core::{branch_point_count, build_table, Method};

#[test]
fn four_routes_agree_in_genus_zero() {
    let engine = CharacterEngine::new();
    for d in 3..=7 {
        let closed = h0_closed(d).unwrap();
        assert_eq!(elsv_genus0(d).unwrap(), closed, "d={d}");
        assert_eq!(h0_recursion(d).unwrap(), closed, "d={d}");
        assert_eq!(engine.connected_hurwitz(0, d).unwrap(), closed, "d={d}");
    }
}

#[test]
fn oracle_matches_character_method_inside_bound() {
    let engine = CharacterEngine::new();
    for d in 1..=4 {
        for g in 0..=4 {
            if branch_point_count(g, d) > 8 {
                continue;
            }
            assert_eq!(oracle_connected(g, d).unwrap(), engine.connected_hurwitz(g, d).unwrap());
        }
    }
}

#[test]
fn degree_five_oracle() {
    // 10^8 tuple space at the edge of the bound; the last factor is implied,
    // so only 10^7 prefixes are walked.
    assert!(within_bound(5, 8));
    assert_eq!(oracle_connected(0, 5).unwrap(), int(8400));
}

#[test]
fn higher_genus_recursions_match_character_method() {
    let engine = CharacterEngine::new();
    for d in 1..=6 {
        assert_eq!(h1_recursion(d).unwrap(), engine.connected_hurwitz(1, d).unwrap());
        assert_eq!(h2_recursion(d).unwrap(), engine.connected_hurwitz(2, d).unwrap());
    }
}

#[test]
fn golden_values() {
    // Independently recomputed from the character sum in plain rationals.
    let engine = CharacterEngine::new();
    let expected = [
        (1, 4, int(5460)),
        (1, 5, int(1189440)),
        (2, 4, int(206640)),
        (2, 5, int(131670000)),
        (2, 7, int(92919587080320)),
        (3, 2, frac(1, 2)),
    ];
    for (g, d, v) in expected {
        assert_eq!(engine.connected_hurwitz(g, d).unwrap(), v, "H_{{{g},{d}}}");
    }
}

#[test]
fn every_method_table_agrees() {
    let mut all = build_table(2, 5, Method::Character).unwrap();
    all.extend(build_table(2, 5, Method::Recursion).unwrap());
    all.extend(build_table(0, 5, Method::ClosedForm).unwrap());
    all.extend(build_table(0, 5, Method::ElsvG0).unwrap());
    all.extend(build_table(1, 3, Method::Oracle).unwrap());
    assert!(all.disagreements().is_empty());
    assert_eq!(all.len(), 15 + 15 + 5 + 5 + 6);
}
