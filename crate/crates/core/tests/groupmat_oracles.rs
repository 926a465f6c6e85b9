//! Commutator words checked against dense numeric arithmetic.

mod common;

use commuting_ci::field::{Field, Rationals};
use commuting_ci::groupmat::*;
use commuting_ci::polyring::Polynomial;
use common::check_evaluation;

#[test]
fn word_matrix_matches_numeric_commutators() {
    for (kind, n, g) in [
        (GroupKind::Unipotent, 3, 1),
        (GroupKind::Unipotent, 4, 1),
        (GroupKind::Unipotent, 5, 1),
        (GroupKind::Unipotent, 4, 2),
        (GroupKind::Borel, 2, 1),
        (GroupKind::Borel, 3, 1),
        (GroupKind::Borel, 2, 2),
    ] {
        check_evaluation(kind, n, g, 50, 0x5eed + n as u64 * 31 + g as u64);
    }
}

#[test]
fn inverse_is_two_sided_up_to_six() {
    for kind in [GroupKind::Unipotent, GroupKind::Borel] {
        for n in 2..=6 {
            let ring = group_ring(Rationals, kind, n, 1).unwrap();
            let rw = UnitRewriter::from_ring(&ring);
            for role in [Role::X, Role::Y] {
                let m = coordinate_matrix(&ring, kind, n, 1, role).unwrap();
                let inv = inverse(&m, kind).unwrap();
                assert!(m.mul(&inv, &rw).unwrap().is_identity(), "{kind}{n} right inverse");
                assert!(inv.mul(&m, &rw).unwrap().is_identity(), "{kind}{n} left inverse");
            }
        }
    }
}

#[test]
fn unipotent_three_by_three_inverse() {
    let ring = group_ring(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
    let x = coordinate_matrix(&ring, GroupKind::Unipotent, 3, 1, Role::X).unwrap();
    let inv = inverse(&x, GroupKind::Unipotent).unwrap();
    let expected = Polynomial::parse(&ring, "x_1_1_2*x_1_2_3 - x_1_1_3").unwrap();
    assert_eq!(inv.get(0, 2), &expected);
    assert_eq!(inv.get(0, 1), &Polynomial::parse(&ring, "-x_1_1_2").unwrap());
}

#[test]
fn copy_two_at_identity_recovers_genus_one() {
    for (kind, n) in [(GroupKind::Unipotent, 4), (GroupKind::Unipotent, 5), (GroupKind::Borel, 3)] {
        let g2 = commutator_word(Rationals, kind, n, 2).unwrap();
        let g1 = commutator_word(Rationals, kind, n, 1).unwrap();
        let assign = identity_assignment(&g2.ring, kind, n, 2);
        let rw = UnitRewriter::from_ring(&g1.ring);
        for gen in &g2.generators {
            let specialized = gen.poly.substitute(&assign).unwrap();
            let moved = rw.reduce(&specialized.transfer(&g1.ring).unwrap());
            let (i, j) = gen.position;
            let expected = g1.generator_at(i, j).cloned().unwrap_or_else(|| Polynomial::zero(&g1.ring));
            assert_eq!(moved, expected, "{kind}{n} position ({i}, {j})");
        }
    }
}

#[test]
fn unipotent_two_is_abelian_in_every_genus() {
    for g in 1..=4 {
        let sys = commutator_word(Rationals, GroupKind::Unipotent, 2, g).unwrap();
        assert!(sys.generators.is_empty());
        assert_eq!(sys.zero_positions, vec![(1, 2)]);
    }
}

#[test]
fn unipotent_five_generator_weights() {
    let sys = commutator_word(Rationals, GroupKind::Unipotent, 5, 1).unwrap();
    let mut ws: Vec<usize> = sys.generators.iter().map(|g| g.position.1 - g.position.0).collect();
    ws.sort();
    assert_eq!(ws, vec![2, 2, 2, 3, 3, 4]);
    for g in &sys.generators {
        assert_eq!(g.poly.weight_of(), commuting_ci::polyring::Weight::Homogeneous((g.position.1 - g.position.0) as u64));
    }
}

#[test]
fn borel_unit_relations() {
    let sys = commutator_word(Rationals, GroupKind::Borel, 3, 2).unwrap();
    assert_eq!(sys.unit_relations.len(), 2 * 2 * 3);
    assert_eq!(sys.generators.len(), 3);
    let field = sys.ring.field();
    for rel in &sys.unit_relations {
        assert_eq!(rel.len(), 2);
        assert!(rel.terms().iter().any(|(m, c)| m.is_one() && *c == field.from_i64(-1)));
    }
}
