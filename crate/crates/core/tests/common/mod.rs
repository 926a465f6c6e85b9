//! Oracles shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use commuting_ci::field::Rationals;
use commuting_ci::groupmat::*;
use commuting_ci::polyring::{Monomial, Ring};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;
pub type Dense = Vec<Vec<Q>>;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

pub fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

/// Inverse of an invertible upper-triangular matrix, column by column via
/// back substitution.
pub fn upper_inverse(a: &Dense) -> Dense {
    let n = a.len();
    let mut inv = vec![vec![Q::zero(); n]; n];
    for col in 0..n {
        for i in (0..n).rev() {
            let rhs = if i == col { Q::one() } else { Q::zero() };
            let s = (i + 1..n).fold(rhs, |acc, k| acc - &a[i][k] * &inv[k][col]);
            inv[i][col] = s / &a[i][i];
        }
    }
    inv
}

/// Random point of the ambient space: small integers, nonzero diagonals,
/// and `d = 1/x` on inverse variables.
fn random_point(ring: &Ring<Rationals>, n: usize, genus: usize, rng: &mut ChaCha8Rng) -> Vec<Q> {
    let mut pt = vec![Q::zero(); ring.nvars()];
    for t in 1..=genus {
        for role in [Role::X, Role::Y] {
            for i in 1..=n {
                for j in i..=n {
                    if let Some(v) = ring.index_of(&entry_name(role, t, i, j)) {
                        let mut val = rng.gen_range(-5..=5);
                        if i == j {
                            while val == 0 {
                                val = rng.gen_range(-5..=5);
                            }
                        }
                        pt[v] = q(val);
                    }
                }
                if let Some(d) = ring.index_of(&inverse_name(role.copy_index(t), i)) {
                    let x = ring.index_of(&entry_name(role, t, i, i)).unwrap();
                    pt[d] = Q::one() / &pt[x];
                }
            }
        }
    }
    pt
}

fn numeric_matrix(ring: &Ring<Rationals>, pt: &[Q], kind: GroupKind, n: usize, t: usize, role: Role) -> Dense {
    let mut m = identity(n);
    for i in 1..=n {
        let first = if kind == GroupKind::Borel { i } else { i + 1 };
        for j in first..=n {
            m[i - 1][j - 1] = pt[ring.index_of(&entry_name(role, t, i, j)).unwrap()].clone();
        }
    }
    m
}

/// Compares the word matrix, evaluated at `points` random points, with
/// the product of commutators of the evaluated matrices computed densely.
pub fn check_evaluation(kind: GroupKind, n: usize, genus: usize, points: usize, seed: u64) {
    let sys = commutator_word(Rationals, kind, n, genus).unwrap();
    let ring = &sys.ring;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let pt = random_point(ring, n, genus, &mut rng);
        let mut word = identity(n);
        for t in 1..=genus {
            let x = numeric_matrix(ring, &pt, kind, n, t, Role::X);
            let y = numeric_matrix(ring, &pt, kind, n, t, Role::Y);
            let comm = matmul(&matmul(&matmul(&x, &y), &upper_inverse(&x)), &upper_inverse(&y));
            word = matmul(&word, &comm);
        }
        if kind == GroupKind::Borel {
            for (i, row) in word.iter_mut().enumerate() {
                row[i] -= Q::one();
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(sys.word_matrix.get(i, j).evaluate(&pt), word[i][j], "{kind}{n} g={genus} entry ({}, {})", i + 1, j + 1);
            }
        }
    }
}

/// Largest variable subset avoiding the support of every monomial, by
/// enumerating all `2^n` subsets.
pub fn brute_force_dim(n: usize, monomials: &[Monomial]) -> usize {
    let supports: Vec<u32> = monomials.iter().map(|m| m.support().fold(0u32, |acc, v| acc | 1 << v)).collect();
    (0u32..1 << n)
        .filter(|&s| supports.iter().all(|&sup| sup & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
