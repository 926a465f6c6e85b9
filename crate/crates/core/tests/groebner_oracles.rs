//! Gröbner bases and dimensions against independent oracles.

mod common;

use commuting_ci::field::{Field, PrimeField, Rationals};
use commuting_ci::groebner::*;
use commuting_ci::groupmat::{commutator_word, commutator_word_in, group_ring, GroupKind};
use commuting_ci::polyring::{Monomial, Polynomial, Ring, RingDescriptor, Variable};
use common::brute_force_dim;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn plain_ring<F: Field>(field: F, n: usize) -> Ring<F> {
    RingDescriptor::new(field, (0..n).map(|i| Variable { name: format!("v{i}"), weight: 1 }).collect()).unwrap()
}

/// Fixture ideals: generators and unit relations of the small systems.
fn fixture<F: Field>(field: F, kind: GroupKind, n: usize, seed: u64) -> (Ring<F>, Vec<Polynomial<F>>, usize) {
    let ring = group_ring(field, kind, n, 1).unwrap().reordered(seed);
    let sys = commutator_word_in(&ring, kind, n, 1).unwrap();
    let mut gens = sys.generator_polys();
    gens.extend(sys.unit_relations.iter().cloned());
    let r = gens.len();
    (ring, gens, r)
}

const FIXTURES: [(GroupKind, usize); 5] = [
    (GroupKind::Unipotent, 3),
    (GroupKind::Unipotent, 4),
    (GroupKind::Unipotent, 5),
    (GroupKind::Borel, 2),
    (GroupKind::Borel, 3),
];

#[test]
fn dimension_matches_subset_enumeration_on_random_monomial_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for case in 0..20 {
        let n = rng.gen_range(3..=12);
        let k = rng.gen_range(1..=8);
        let mons: Vec<Monomial> = (0..k)
            .map(|_| {
                let mut e = vec![0u16; n];
                for _ in 0..rng.gen_range(1..=3) {
                    e[rng.gen_range(0..n)] += rng.gen_range(1..=2);
                }
                Monomial::from_exponents(e)
            })
            .collect();
        let ring = plain_ring(Rationals, n);
        let gens: Vec<_> = mons.iter().map(|m| Polynomial::monomial(&ring, m.clone(), ring.field().one())).collect();
        let gb = buchberger(&ring, &gens, &Limits::default()).unwrap();
        let st = gb.krull_dimension();
        assert_eq!(st.dim, Some(brute_force_dim(n, &mons)), "case {case}: {mons:?}");
        assert_eq!(IdealStats::from_leading_monomials(n, &mons).dim, st.dim);
    }
}

#[test]
fn dimension_matches_enumeration_on_small_fixtures() {
    for (kind, n) in [(GroupKind::Unipotent, 3), (GroupKind::Unipotent, 4), (GroupKind::Borel, 2)] {
        let (ring, gens, _) = fixture(Rationals, kind, n, 0);
        let gb = buchberger(&ring, &gens, &Limits::default()).unwrap();
        assert!(ring.nvars() <= 12);
        assert_eq!(gb.krull_dimension().dim, Some(brute_force_dim(ring.nvars(), &gb.leading_monomials())));
    }
}

#[test]
fn every_shipped_basis_closes_under_s_pairs() {
    for (kind, n) in FIXTURES {
        let (ring, gens, _) = fixture(gf(), kind, n, 0);
        let gb = buchberger(&ring, &gens, &Limits::default()).unwrap();
        assert!(gb.verify_s_pairs(), "{kind}{n}");
        let lms = gb.leading_monomials();
        for (a, p) in gb.basis().iter().enumerate() {
            for (b, l) in lms.iter().enumerate() {
                if a != b {
                    assert!(p.terms().iter().all(|(m, _)| !l.divides(m)), "{kind}{n}: basis not reduced");
                }
            }
        }
        for g in &gens {
            assert!(gb.contains(g));
        }
    }
}

#[test]
fn codimension_is_order_independent() {
    for (kind, n) in FIXTURES {
        let codims: Vec<usize> = [0u64, 7, 1234]
            .iter()
            .map(|&seed| {
                let (ring, gens, _) = fixture(gf(), kind, n, seed);
                buchberger(&ring, &gens, &Limits::default()).unwrap().krull_dimension().codim()
            })
            .collect();
        assert!(codims.windows(2).all(|w| w[0] == w[1]), "{kind}{n}: {codims:?}");
    }
}

#[test]
fn modular_leading_ideal_matches_rational() {
    for (kind, n) in FIXTURES {
        let (rq, gq, _) = fixture(Rationals, kind, n, 0);
        let (rp, gp, _) = fixture(gf(), kind, n, 0);
        let bq = buchberger(&rq, &gq, &Limits::default()).unwrap();
        let bp = buchberger(&rp, &gp, &Limits::default()).unwrap();
        assert!(same_leading_ideal(&bq, &bp), "{kind}{n}: unlucky prime or arithmetic divergence");
        // Reducing the rational basis mod p gives the modular basis.
        let reduced: Vec<_> = bq
            .basis()
            .iter()
            .map(|p| p.map_into(&rp, |c| gf().from_rational(c)).unwrap())
            .collect();
        assert_eq!(reduced, bp.basis(), "{kind}{n}");
    }
}

#[test]
fn codimension_never_exceeds_generator_count() {
    for (kind, n) in FIXTURES {
        let (ring, gens, r) = fixture(gf(), kind, n, 0);
        let codim = buchberger(&ring, &gens, &Limits::default()).unwrap().krull_dimension().codim();
        assert!(codim <= r, "{kind}{n}: codim {codim} > {r}");
    }
    let u3g2 = commutator_word(Rationals, GroupKind::Unipotent, 3, 2).unwrap();
    let gb = buchberger(&u3g2.ring, &u3g2.generator_polys(), &Limits::default()).unwrap();
    assert!(gb.krull_dimension().codim() <= u3g2.generators.len());
}

#[test]
fn constructed_members_are_recognized() {
    let sys = commutator_word(Rationals, GroupKind::Unipotent, 4, 1).unwrap();
    let ring = &sys.ring;
    let gens = sys.generator_polys();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let mut q = Polynomial::zero(ring);
        for _ in 0..4 {
            let v = rng.gen_range(0..ring.nvars());
            let c = ring.field().from_i64(rng.gen_range(-9..=9));
            q = q.add(&Polynomial::var(ring, v).scale(&c)).unwrap();
        }
        let member = gens[0].mul(&q).unwrap().add(&gens[1]).unwrap();
        assert!(ideal_membership(&member, &gens, &Limits::default()).unwrap());
    }
    let x12 = Polynomial::var_named(ring, "x_1_1_2").unwrap();
    assert!(!ideal_membership(&x12, &gens, &Limits::default()).unwrap());
    assert!(ideal_membership(&Polynomial::zero(ring), &gens, &Limits::default()).unwrap());
}

#[test]
fn single_relation_is_its_own_basis() {
    let sys = commutator_word(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
    let gb = buchberger(&sys.ring, &sys.generator_polys(), &Limits::default()).unwrap();
    assert_eq!(gb.basis(), &[sys.generators[0].poly.monic()]);
    let st = gb.krull_dimension();
    assert_eq!((st.dim, st.codim()), (Some(5), 1));
}

#[test]
fn zero_ideal_and_maximal_ideal() {
    let ring = plain_ring(Rationals, 6);
    let gb = buchberger(&ring, &[Polynomial::zero(&ring)], &Limits::default()).unwrap();
    assert_eq!((gb.krull_dimension().dim, gb.krull_dimension().codim()), (Some(6), 0));
    let r2 = plain_ring(Rationals, 2);
    let gb = buchberger(&r2, &[Polynomial::var(&r2, 0), Polynomial::var(&r2, 1)], &Limits::default()).unwrap();
    assert_eq!(gb.krull_dimension().dim, Some(0));
}

#[test]
fn timeouts_report_incomplete() {
    let (ring, gens, _) = fixture(gf(), GroupKind::Borel, 3, 0);
    let lim = Limits { degree_cap: 4, ..Limits::default() };
    let err = buchberger(&ring, &gens, &lim).unwrap_err();
    assert!(err.reason.contains("degree"), "{}", err.reason);
}
