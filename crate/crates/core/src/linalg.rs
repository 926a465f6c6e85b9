//! Exact rank of sparse matrices.
//!
//! Rows are reduced one at a time against a table of pivot rows keyed by
//! leading column. Over prime fields pivot rows are kept monic; over the
//! rationals rows are cleared to primitive integer vectors and combined
//! fraction-free (`a·r - b·p`, then divided by the content).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::Field;

/// Sparse row: strictly increasing column indices, no zero entries.
pub type SparseRow<E> = Vec<(u32, E)>;

/// Rank over an arbitrary field by Gaussian elimination with monic pivots.
pub fn field_rank<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>) -> usize {
    let mut pivots: HashMap<u32, SparseRow<F::Elem>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some(&(lead, _)) = row.first() else { break };
            match pivots.get(&lead) {
                Some(piv) => {
                    let a = row[0].1.clone();
                    row = axpy(field, &row, &a, piv);
                }
                None => {
                    let inv = field.inv(&row[0].1).expect("nonzero entry");
                    for e in row.iter_mut() {
                        e.1 = field.mul(&e.1, &inv);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `row - a·piv`, merged by column.
fn axpy<F: Field>(field: &F, row: &[(u32, F::Elem)], a: &F::Elem, piv: &[(u32, F::Elem)]) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = piv.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, field.neg(&field.mul(a, &piv[j].1))));
            j += 1;
        } else {
            let v = field.sub(&row[i].1, &field.mul(a, &piv[j].1));
            if !field.is_zero(&v) {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a rational matrix by fraction-free elimination on primitive
/// integer rows.
pub fn rational_rank(rows: Vec<SparseRow<BigRational>>) -> usize {
    let mut pivots: HashMap<u32, SparseRow<BigInt>> = HashMap::new();
    for row in rows {
        let mut row = to_primitive_integers(row);
        loop {
            let Some(&(lead, _)) = row.first() else { break };
            match pivots.get(&lead) {
                Some(piv) => {
                    let (a, b) = (&row[0].1, &piv[0].1);
                    let g = a.gcd(b);
                    let (ra, pb) = (b / &g, a / &g);
                    row = integer_combination(&ra, &row, &pb, piv);
                    make_primitive(&mut row);
                }
                None => {
                    if row[0].1.is_negative() {
                        for e in row.iter_mut() {
                            e.1 = -std::mem::take(&mut e.1);
                        }
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn to_primitive_integers(row: SparseRow<BigRational>) -> SparseRow<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
    let mut out: SparseRow<BigInt> = row.into_iter().map(|(c, v)| (c, (v * &lcm).to_integer())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut SparseRow<BigInt>) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// `a·row - b·piv`.
fn integer_combination(a: &BigInt, row: &[(u32, BigInt)], b: &BigInt, piv: &[(u32, BigInt)]) -> SparseRow<BigInt> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = piv.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ci < cj {
            out.push((ci, a * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &piv[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &piv[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn dense_to_sparse<E: Clone>(rows: &[Vec<E>], is_zero: impl Fn(&E) -> bool) -> Vec<SparseRow<E>> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| !is_zero(v)).map(|(c, v)| (c as u32, v.clone())).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]];
        let rows = dense_to_sparse(&m, |v: &BigRational| v.is_zero());
        assert_eq!(rational_rank(rows.clone()), 2);
        assert_eq!(field_rank(&Rationals, rows), 2);
        assert_eq!(rational_rank(vec![]), 0);
    }

    #[test]
    fn rank_drops_mod_p() {
        // det = 7: full rank over Q, rank 1 mod 7.
        let m = vec![vec![q(1), q(3)], vec![q(2), q(13)]];
        let rows = dense_to_sparse(&m, |v: &BigRational| v.is_zero());
        assert_eq!(rational_rank(rows), 2);
        let f = PrimeField::new(7).unwrap();
        let mp: Vec<Vec<u32>> = vec![vec![1, 3], vec![2, 6]];
        assert_eq!(field_rank(&f, dense_to_sparse(&mp, |v| *v == 0)), 1);
    }

    #[test]
    fn fraction_free_matches_field_elimination_on_hilbert_like_matrix() {
        let n = 6;
        let m: Vec<Vec<BigRational>> =
            (0..n).map(|i| (0..n).map(|j| BigRational::new(1.into(), ((i + j + 1) as i64).into())).collect()).collect();
        let rows = dense_to_sparse(&m, |v: &BigRational| v.is_zero());
        assert_eq!(rational_rank(rows.clone()), n);
        assert_eq!(field_rank(&Rationals, rows), n);
    }
}
