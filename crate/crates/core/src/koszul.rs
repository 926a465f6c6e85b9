//! Koszul complexes over positively weighted rings, computed one graded
//! slice at a time.
//!
//! The chain module `C_i` is free on the exterior monomials `t_S` with
//! `|S| = i`; its weight-`w` slice has basis `m·t_S` with `m` a monomial
//! of weight `w - Σ_{s∈S} w_s`. The differential is
//! `d(m·t_S) = Σ_k (-1)^k f_{s_k} m·t_{S∖s_k}` for `S = {s_0 < s_1 < …}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::groupmat::{CommutatorSystem, GroupKind};
use crate::linalg::SparseRow;
use crate::polyring::{Monomial, Polynomial, Ring, Weight};

/// Slice size above which `homology_slice` gives up.
pub const DEFAULT_SLICE_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct KoszulComplex<F: Field> {
    ring: Ring<F>,
    generators: Vec<(Polynomial<F>, u32)>,
    exterior_factors: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceStatus {
    Complete,
    Incomplete,
}

/// One `(i, w)` slice: `chain_dims[k]` is `dim C_k` at weight `w` for
/// every homological degree `k`, and `h_dim` is `dim H_i` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulSliceReport {
    pub i: usize,
    pub w: u32,
    pub chain_dims: Vec<usize>,
    pub h_dim: Option<usize>,
    pub status: SliceStatus,
}

impl<F: Field> KoszulComplex<F> {
    /// Complex on `(f_i, w_i)`. Nonzero `f_i` must be homogeneous of
    /// weight `w_i`; zero generators are allowed with any weight `≥ 1`.
    pub fn new(ring: &Ring<F>, generators: Vec<(Polynomial<F>, u32)>) -> Result<Self> {
        if !ring.is_positively_weighted() {
            return Err(Error::NotPositivelyWeighted("Koszul slices need every variable weight ≥ 1".into()));
        }
        for (k, (f, w)) in generators.iter().enumerate() {
            if !f.same_ring(&Polynomial::zero(ring)) {
                return Err(Error::RingMismatch);
            }
            if *w == 0 {
                return Err(Error::Config(format!("generator {k} has weight 0")));
            }
            match f.weight_of() {
                Weight::Bottom => {}
                Weight::Homogeneous(fw) if fw == *w as u64 => {}
                other => return Err(Error::Config(format!("generator {k} is not homogeneous of weight {w}: {other:?}"))),
            }
        }
        Ok(Self { ring: ring.clone(), generators, exterior_factors: 0 })
    }

    /// Complex on the nonzero entries of a unipotent commutator word, each
    /// of weight `j - i`. The identically vanishing subdiagonal is recorded
    /// as the exterior factor count rather than added as zero generators.
    pub fn from_system(sys: &CommutatorSystem<F>) -> Result<Self> {
        if sys.kind == GroupKind::Borel {
            return Err(Error::NotPositivelyWeighted(
                "Borel rings carry weight-0 diagonal and inverse variables".into(),
            ));
        }
        let gens = sys.generators.iter().map(|g| (g.poly.clone(), (g.position.1 - g.position.0) as u32)).collect();
        let mut k = Self::new(&sys.ring, gens)?;
        k.exterior_factors = sys.kind.exterior_factor_count(sys.n);
        Ok(k)
    }

    /// Appends `count` zero generators of weight `weight`.
    pub fn with_zero_generators(&self, count: usize, weight: u32) -> Self {
        let mut k = self.clone();
        k.generators.extend((0..count).map(|_| (Polynomial::zero(&self.ring), weight)));
        k
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[(Polynomial<F>, u32)] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of degree-1 exterior generators split off by the vanishing
    /// entries (`n - 1` for `U_n`).
    pub fn exterior_factors(&self) -> usize {
        self.exterior_factors
    }

    /// `dim C_k` at weight `w` for `k = 0..=len`, by counting.
    pub fn chain_dims(&self, w: u32) -> Vec<usize> {
        let w = w as usize;
        let mono = monomial_counts(self.ring.weights(), w);
        // subsets[k][s]: k-subsets of generators with weight sum s.
        let r = self.generators.len();
        let mut subsets = vec![vec![0usize; w + 1]; r + 1];
        subsets[0][0] = 1;
        for (_, gw) in &self.generators {
            let gw = *gw as usize;
            for k in (1..=r).rev() {
                for s in (gw..=w).rev() {
                    subsets[k][s] = subsets[k][s].saturating_add(subsets[k - 1][s - gw]);
                }
            }
        }
        subsets
            .iter()
            .map(|row| (0..=w).fold(0usize, |acc, s| acc.saturating_add(row[s].saturating_mul(mono[w - s]))))
            .collect()
    }

    fn slice_basis(&self, i: usize, w: u32, table: &mut MonomialTable) -> SliceBasis {
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut offset = 0;
        for subset in subsets_of_size(self.generators.len(), i) {
            let ws: u32 = subset.iter().map(|&s| self.generators[s].1).sum();
            if ws > w {
                continue;
            }
            let mw = w - ws;
            let len = table.of_weight(mw).len();
            index.insert(subset.clone(), blocks.len());
            blocks.push(Block { subset, offset, mweight: mw });
            offset += len;
        }
        SliceBasis { blocks, index, dim: offset }
    }

    /// Matrix of `d: C_i → C_{i-1}` at weight `w`, one row per basis
    /// element of the source slice. `i` must be at least 1.
    fn differential_rows(&self, i: usize, w: u32, table: &mut MonomialTable) -> Vec<SparseRow<F::Elem>> {
        let field = self.ring.field();
        let source = self.slice_basis(i, w, table);
        let target = self.slice_basis(i - 1, w, table);
        let mut rows = Vec::with_capacity(source.dim);
        for block in &source.blocks {
            let faces: Vec<(usize, &Block, bool)> = (0..i)
                .map(|k| {
                    let mut face = block.subset.clone();
                    let s = face.remove(k);
                    (s, &target.blocks[target.index[&face]], k % 2 == 1)
                })
                .collect();
            for m in table.of_weight(block.mweight).to_vec() {
                let mut row: SparseRow<F::Elem> = Vec::new();
                for &(s, tb, negate) in &faces {
                    for (mono, c) in self.generators[s].0.terms() {
                        let col = tb.offset + table.index(tb.mweight, &m.mul(mono));
                        row.push((col as u32, if negate { field.neg(c) } else { c.clone() }));
                    }
                }
                row.sort_unstable_by_key(|e| e.0);
                rows.push(row);
            }
        }
        rows
    }

    /// `dim H_i` at weight `w`, or an incomplete report when one of the
    /// three slices involved exceeds `cap`.
    pub fn homology_slice(&self, i: usize, w: u32, cap: usize) -> KoszulSliceReport {
        let chain_dims = self.chain_dims(w);
        let r = self.generators.len();
        let dim_at = |k: usize| chain_dims.get(k).copied().unwrap_or(0);
        let involved = [i.checked_sub(1).map(dim_at).unwrap_or(0), dim_at(i), dim_at(i + 1)];
        if i > r || involved.iter().any(|&d| d > cap) {
            let complete = i > r;
            return KoszulSliceReport {
                i,
                w,
                chain_dims,
                h_dim: complete.then_some(0),
                status: if complete { SliceStatus::Complete } else { SliceStatus::Incomplete },
            };
        }
        let field = self.ring.field();
        let (rank_out, rank_in) = rayon::join(
            || {
                if i == 0 || dim_at(i) == 0 {
                    return 0;
                }
                let mut table = MonomialTable::new(&self.ring);
                field.sparse_rank(self.differential_rows(i, w, &mut table))
            },
            || {
                if i + 1 > r || dim_at(i + 1) == 0 {
                    return 0;
                }
                let mut table = MonomialTable::new(&self.ring);
                field.sparse_rank(self.differential_rows(i + 1, w, &mut table))
            },
        );
        KoszulSliceReport {
            i,
            w,
            h_dim: Some(dim_at(i) - rank_out - rank_in),
            chain_dims,
            status: SliceStatus::Complete,
        }
    }

    /// Checks that `d ∘ d: C_{i+1} → C_{i-1}` vanishes at weight `w`.
    pub fn check_d_squared(&self, i: usize, w: u32) -> bool {
        if i == 0 || i + 1 > self.generators.len() {
            return true;
        }
        let field = self.ring.field();
        let mut table = MonomialTable::new(&self.ring);
        let outer = self.differential_rows(i + 1, w, &mut table);
        let inner = self.differential_rows(i, w, &mut table);
        outer.iter().all(|row| {
            let mut acc: HashMap<u32, F::Elem> = HashMap::new();
            for (c, a) in row {
                for (c2, b) in &inner[*c as usize] {
                    let e = acc.entry(*c2).or_insert_with(|| field.zero());
                    *e = field.add(e, &field.mul(a, b));
                }
            }
            acc.values().all(|v| field.is_zero(v))
        })
    }

    /// Scans `H_i` for weights `0..=max_weight` and returns every slice.
    pub fn scan(&self, i: usize, max_weight: u32, cap: usize) -> Vec<KoszulSliceReport> {
        (0..=max_weight).map(|w| self.homology_slice(i, w, cap)).collect()
    }
}

/// Compares slice dimensions of `K` extended by `zeros` zero generators of
/// weight 1 against the tensor product with an exterior algebra:
/// `dim H_i^w(ext) = Σ_k C(zeros, k) · dim H_{i-k}^{w-k}(K)`.
pub fn kunneth_zero_check<F: Field>(k: &KoszulComplex<F>, zeros: usize, max_weight: u32, cap: usize) -> Result<bool> {
    if zeros == 0 {
        return Ok(true);
    }
    let ext = k.with_zero_generators(zeros, 1);
    let base_dim = |i: usize, w: u32| -> Result<usize> {
        let rep = k.homology_slice(i, w, cap);
        rep.h_dim.ok_or_else(|| Error::Incomplete(format!("slice H_{i} at weight {w} exceeds cap {cap}")))
    };
    for w in 0..=max_weight {
        for i in 0..=ext.len() {
            let rep = ext.homology_slice(i, w, cap);
            let lhs = rep.h_dim.ok_or_else(|| Error::Incomplete(format!("slice H_{i} at weight {w} exceeds cap {cap}")))?;
            let mut rhs = 0;
            for j in 0..=zeros.min(i).min(w as usize) {
                rhs += binomial(zeros, j) * base_dim(i - j, w - j as u32)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monomials of weight `w` outside the leading-term ideal of `gb`; equals
/// `dim H_0` at weight `w` of the Koszul complex on the ideal's generators.
pub fn standard_monomial_count<F: Field>(gb: &GroebnerBasis<F>, w: u32) -> usize {
    let lms = gb.leading_monomials();
    monomials_of_weight(gb.ring().weights(), w).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count()
}

/// All monomials of weight `w` under positive variable weights.
pub fn monomials_of_weight(weights: &[u32], w: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], v: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        let wv = weights[v];
        let mut e = 0;
        loop {
            exps[v] = e as u16;
            go(weights, v + 1, left - e * wv, exps, out);
            if wv == 0 || (e + 1) * wv > left {
                break;
            }
            e += 1;
        }
        exps[v] = 0;
    }
    assert!(weights.iter().all(|&x| x > 0), "weights must be positive");
    let mut out = Vec::new();
    go(weights, 0, w, &mut vec![0; weights.len()], &mut out);
    out
}

fn monomial_counts(weights: &[u32], w: usize) -> Vec<usize> {
    let mut count = vec![0usize; w + 1];
    count[0] = 1;
    for &wv in weights {
        let wv = wv as usize;
        for s in wv..=w {
            count[s] = count[s].saturating_add(count[s - wv]);
        }
    }
    count
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            if n - s < k - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

struct Block {
    subset: Vec<usize>,
    offset: usize,
    mweight: u32,
}

struct SliceBasis {
    blocks: Vec<Block>,
    index: HashMap<Vec<usize>, usize>,
    dim: usize,
}

/// Monomials of each weight, sorted descending in the ring order so that
/// column order follows leading terms.
struct MonomialTable {
    weights: Vec<u32>,
    order: crate::polyring::MonomialOrder,
    by_weight: HashMap<u32, (Vec<Monomial>, HashMap<Monomial, usize>)>,
}

impl MonomialTable {
    fn new<F: Field>(ring: &Ring<F>) -> Self {
        Self { weights: ring.weights().to_vec(), order: ring.order().clone(), by_weight: HashMap::new() }
    }

    fn ensure(&mut self, w: u32) -> &(Vec<Monomial>, HashMap<Monomial, usize>) {
        let (weights, order) = (&self.weights, &self.order);
        self.by_weight.entry(w).or_insert_with(|| {
            let mut ms = monomials_of_weight(weights, w);
            ms.sort_by(|a, b| order.cmp(b, a));
            let idx = ms.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
            (ms, idx)
        })
    }

    fn of_weight(&mut self, w: u32) -> &[Monomial] {
        &self.ensure(w).0
    }

    fn index(&mut self, w: u32, m: &Monomial) -> usize {
        self.ensure(w).1[m]
    }
}
