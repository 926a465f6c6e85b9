//! Buchberger's algorithm with the Gebauer–Möller pair criteria, normal
//! forms, ideal membership, and dimension of quotients read off the
//! leading-term ideal.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::polyring::{Monomial, Polynomial, Ring};

pub const DEFAULT_DEGREE_CAP: u32 = 30;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(3600);

/// Resource limits for a single basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest standard degree of an S-pair lcm that may be processed.
    pub degree_cap: u32,
    pub timeout: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Self { degree_cap: DEFAULT_DEGREE_CAP, timeout: DEFAULT_TIMEOUT }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GroebnerStats {
    pub pairs: u64,
    pub zero_reductions: u64,
    pub max_degree: u32,
    pub seconds: f64,
}

/// A computation stopped by its [`Limits`]. Never a verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct Incomplete {
    pub reason: String,
    pub stats: GroebnerStats,
}

impl std::fmt::Display for Incomplete {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} after {} pairs", self.reason, self.stats.pairs)
    }
}

impl From<Incomplete> for crate::Error {
    fn from(i: Incomplete) -> Self {
        crate::Error::Incomplete(i.to_string())
    }
}

/// Reduced Gröbner basis under the ring's monomial order. Elements are
/// monic and sorted by leading monomial, ascending.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    basis: Vec<Polynomial<F>>,
    pub stats: GroebnerStats,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|p| p.leading_monomial().cloned()).collect()
    }

    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        normal_form(p, &self.basis)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn krull_dimension(&self) -> IdealStats {
        IdealStats::from_leading_monomials(self.ring.nvars(), &self.leading_monomials())
    }

    /// One polynomial per line, in basis order.
    pub fn dump(&self) -> String {
        self.basis.iter().map(|p| format!("{p}\n")).collect()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let b = &self.basis;
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| normal_form(&s_polynomial(&b[i], &b[j]), b).is_zero()))
    }
}

/// Dimension data of `k[x_1..x_N] / I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealStats {
    pub nvars: usize,
    /// Krull dimension of the quotient; `None` for the unit ideal (empty
    /// quotient).
    pub dim: Option<usize>,
}

impl IdealStats {
    /// `d` is the largest size of a variable set `S` such that no leading
    /// monomial is supported inside `S`; equivalently `N` minus the
    /// smallest set of variables meeting every leading support.
    pub fn from_leading_monomials(nvars: usize, lms: &[Monomial]) -> Self {
        if lms.iter().any(|m| m.is_one()) {
            return Self { nvars, dim: None };
        }
        let supports: Vec<Vec<usize>> = lms.iter().map(|m| m.support().collect()).collect();
        let cover = minimum_hitting_set(nvars, &supports);
        Self { nvars, dim: Some(nvars - cover) }
    }

    /// `N - d`; the unit ideal has codimension `N + 1` by convention
    /// (it exceeds every generator-count bound that could matter).
    pub fn codim(&self) -> usize {
        match self.dim {
            Some(d) => self.nvars - d,
            None => self.nvars + 1,
        }
    }
}

/// Size of a smallest set of variables intersecting every support.
fn minimum_hitting_set(nvars: usize, supports: &[Vec<usize>]) -> usize {
    let words = nvars.div_ceil(64).max(1);
    let to_bits = |s: &Vec<usize>| {
        let mut b = vec![0u64; words];
        for &v in s {
            b[v / 64] |= 1 << (v % 64);
        }
        b
    };
    let mut sets: Vec<Vec<u64>> = supports.iter().map(to_bits).collect();
    // Keep only inclusion-minimal supports.
    sets.sort_by_key(|b| b.iter().map(|w| w.count_ones()).sum::<u32>());
    sets.dedup();
    let mut minimal: Vec<Vec<u64>> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|m| m.iter().zip(&s).all(|(a, b)| a & !b == 0)) {
            minimal.push(s);
        }
    }
    let mut best = nvars;
    let mut chosen = vec![0u64; words];
    hitting_search(&minimal, &mut chosen, 0, &mut best);
    best
}

fn hitting_search(sets: &[Vec<u64>], chosen: &mut Vec<u64>, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let unhit: Vec<&Vec<u64>> = sets.iter().filter(|s| s.iter().zip(chosen.iter()).all(|(a, c)| a & c == 0)).collect();
    let Some(pick) = unhit.iter().min_by_key(|s| s.iter().map(|w| w.count_ones()).sum::<u32>()) else {
        *best = size;
        return;
    };
    // Pairwise-disjoint unhit sets each need their own variable.
    let mut disjoint: Vec<&Vec<u64>> = Vec::new();
    for s in &unhit {
        if disjoint.iter().all(|d| d.iter().zip(s.iter()).all(|(a, b)| a & b == 0)) {
            disjoint.push(s);
        }
    }
    if size + disjoint.len() >= *best {
        return;
    }
    for (w, &word) in pick.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let b = bits.trailing_zeros();
            bits &= bits - 1;
            chosen[w] |= 1 << b;
            hitting_search(sets, chosen, size + 1, best);
            chosen[w] &= !(1 << b);
        }
    }
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Polynomial::zero(f.ring());
    };
    let lcm = lf.lcm(lg);
    let cf = field.inv(f.leading_coefficient().expect("nonzero")).expect("nonzero");
    let cg = field.inv(g.leading_coefficient().expect("nonzero")).expect("nonzero");
    let a = f.mul_term(&lf.quotient_of(&lcm), &cf);
    a.sub_mul_term(&cg, &lg.quotient_of(&lcm), g)
}

struct Divisor<'a, F: Field> {
    poly: &'a Polynomial<F>,
    lm: &'a Monomial,
    mask: u64,
    inv_lc: F::Elem,
}

fn divisors<F: Field>(divs: &[Polynomial<F>]) -> Vec<Divisor<'_, F>> {
    divs.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let lm = g.leading_monomial().expect("nonzero");
            Divisor { poly: g, lm, mask: lm.support_mask(), inv_lc: g.field().inv(g.leading_coefficient().expect("nonzero")).expect("nonzero") }
        })
        .collect()
}

fn reduce_with<F: Field>(p: &Polynomial<F>, divs: &[Divisor<'_, F>], full: bool) -> Polynomial<F> {
    let field = p.field();
    let ring = p.ring().clone();
    let mut rest = p.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
    loop {
        let Some((lm, lc)) = rest.terms().first().cloned() else { break };
        let mask = lm.support_mask();
        let found = divs.iter().find(|d| d.mask & !mask == 0 && d.lm.divides(&lm));
        match found {
            Some(d) => {
                let coeff = field.mul(&lc, &d.inv_lc);
                rest = rest.sub_mul_term(&coeff, &d.lm.quotient_of(&lm), d.poly);
            }
            None => {
                if !full {
                    break;
                }
                let mut terms = rest.into_terms();
                let head = terms.remove(0);
                remainder.push(head);
                rest = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    if remainder.is_empty() {
        return rest;
    }
    remainder.extend(rest.into_terms());
    Polynomial::from_sorted_terms(&ring, remainder)
}

/// Remainder of multivariate division by `divs`, tried in list order. No
/// term of the result is divisible by a leading monomial of `divs`.
pub fn normal_form<F: Field>(p: &Polynomial<F>, divs: &[Polynomial<F>]) -> Polynomial<F> {
    reduce_with(p, &divisors(divs), true)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<F: Field> {
    polys: Vec<Polynomial<F>>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn active_divisors(&self) -> Vec<Polynomial<F>> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p.clone()).collect()
    }

    /// Gebauer–Möller update with a new monic element `h`.
    fn insert(&mut self, h: Polynomial<F>) {
        let hl = h.leading_monomial().expect("nonzero").clone();
        let k = self.polys.len();
        let order = h.ring().order().clone();

        let mut candidates: Vec<Pair> = (0..k)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: k, lcm: self.lms[g].lcm(&hl) })
            .collect();
        // Chain criterion among the new pairs.
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lms[p.i].is_coprime(&hl);
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // Product criterion.
        kept.retain(|p| !self.lms[p.i].is_coprime(&hl));
        // Chain criterion on old pairs.
        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm) && lms[p.i].lcm(&hl) != p.lcm && lms[p.j].lcm(&hl) != p.lcm)
        });
        self.pairs.extend(kept);
        for g in 0..k {
            if self.active[g] && hl.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.lms.push(hl);
        self.active.push(true);
        let _ = order;
    }

    /// Normal strategy: smallest lcm under the monomial order (degree first).
    fn pop_pair(&mut self, ring: &Ring<F>) -> Option<Pair> {
        let order = ring.order();
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order.cmp(&pa.lcm, &pb.lcm).then(pa.j.cmp(&pb.j)).then(pa.i.cmp(&pb.i))
        })?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Zero generators
/// are dropped. Stops with [`Incomplete`] when a pair exceeds the degree
/// cap or the timeout elapses.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], limits: &Limits) -> Result<GroebnerBasis<F>, Incomplete> {
    let start = Instant::now();
    let mut stats = GroebnerStats::default();
    let mut state = State { polys: Vec::new(), lms: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut input: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    input.sort_by(|a, b| ring.order().cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    for g in input {
        let divs = state.active_divisors();
        let h = normal_form(&g, &divs);
        if h.is_zero() {
            continue;
        }
        stats.max_degree = stats.max_degree.max(h.degree());
        state.insert(h.monic());
    }

    while let Some(pair) = state.pop_pair(ring) {
        if start.elapsed() > limits.timeout {
            stats.seconds = start.elapsed().as_secs_f64();
            return Err(Incomplete { reason: format!("timeout of {}s exceeded", limits.timeout.as_secs()), stats });
        }
        if pair.lcm.degree() > limits.degree_cap {
            stats.seconds = start.elapsed().as_secs_f64();
            return Err(Incomplete { reason: format!("degree cap {} exceeded", limits.degree_cap), stats });
        }
        stats.pairs += 1;
        stats.max_degree = stats.max_degree.max(pair.lcm.degree());
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j]);
        let divs = state.active_divisors();
        let h = normal_form(&s, &divs);
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        state.insert(h.monic());
    }

    let basis = interreduce(state.active_divisors(), ring);
    stats.seconds = start.elapsed().as_secs_f64();
    Ok(GroebnerBasis { ring: ring.clone(), basis, stats })
}

/// Removes redundant elements, tail-reduces the rest and sorts ascending.
fn interreduce<F: Field>(mut polys: Vec<Polynomial<F>>, ring: &Ring<F>) -> Vec<Polynomial<F>> {
    let order = ring.order();
    polys.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F>> =
            minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p.clone()).collect();
        let p = &minimal[k];
        let head = Polynomial::from_terms(ring, [p.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_terms(ring, p.terms()[1..].to_vec());
        let reduced = head.add(&normal_form(&tail, &others)).expect("same ring");
        out.push(reduced.monic());
    }
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    debug_assert!(out.windows(2).all(|w| order.cmp(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap()) == Ordering::Less));
    out
}

/// `true` iff `p` lies in the ideal generated by `gens`.
pub fn ideal_membership<F: Field>(p: &Polynomial<F>, gens: &[Polynomial<F>], limits: &Limits) -> Result<bool, Incomplete> {
    if p.is_zero() {
        return Ok(true);
    }
    let gb = buchberger(p.ring(), gens, limits)?;
    Ok(gb.contains(p))
}

/// Compares leading-term ideals of two bases of the same ideal computed in
/// rings that share variable names (typically over `Q` and over `GF(p)`).
/// A mismatch marks the prime as unlucky for this ideal.
pub fn same_leading_ideal<F: Field, G: Field>(a: &GroebnerBasis<F>, b: &GroebnerBasis<G>) -> bool {
    let rename = |gb_ring: &[crate::polyring::Variable], m: &Monomial| -> Vec<(String, u16)> {
        let mut v: Vec<(String, u16)> =
            m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (gb_ring[i].name.clone(), e)).collect();
        v.sort();
        v
    };
    let mut la: Vec<_> = a.leading_monomials().iter().map(|m| rename(a.ring.variables(), m)).collect();
    let mut lb: Vec<_> = b.leading_monomials().iter().map(|m| rename(b.ring.variables(), m)).collect();
    la.sort();
    lb.sort();
    la == lb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::polyring::{RingDescriptor, Variable};

    fn ring(names: &[&str]) -> Ring<Rationals> {
        RingDescriptor::new(Rationals, names.iter().map(|n| Variable { name: n.to_string(), weight: 1 }).collect()).unwrap()
    }

    fn p(r: &Ring<Rationals>, s: &str) -> Polynomial<Rationals> {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn self_reduction_is_zero() {
        let r = ring(&["x", "y"]);
        let g = p(&r, "x^2*y - 3*y + 1");
        assert!(normal_form(&g, std::slice::from_ref(&g)).is_zero());
        assert!(normal_form(&p(&r, "x^2"), &[p(&r, "x")]).is_zero());
    }

    #[test]
    fn division_remainder_has_no_reducible_terms() {
        let r = ring(&["x", "y"]);
        let divs = [p(&r, "x*y - 1"), p(&r, "y^2 - 1")];
        let rem = normal_form(&p(&r, "x^2*y + x*y^2 + y^2"), &divs);
        for (m, _) in rem.terms() {
            for d in &divs {
                assert!(!d.leading_monomial().unwrap().divides(m));
            }
        }
        // Textbook example (Cox–Little–O'Shea 2.3): remainder x + y + 1.
        assert_eq!(rem, p(&r, "x + y + 1"));
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(&["a", "b", "c", "d"]);
        let g = p(&r, "2*a*d - 2*b*c");
        let gb = buchberger(&r, std::slice::from_ref(&g), &Limits::default()).unwrap();
        assert_eq!(gb.basis(), &[g.monic()]);
    }

    #[test]
    fn linear_generators() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x"), p(&r, "y"), Polynomial::zero(&r)], &Limits::default()).unwrap();
        assert_eq!(gb.basis().len(), 2);
        let st = gb.krull_dimension();
        assert_eq!(st.dim, Some(0));
        assert_eq!(st.codim(), 2);
    }

    #[test]
    fn zero_ideal_has_full_dimension() {
        let r = ring(&["a", "b", "c", "d", "e", "f"]);
        let gb = buchberger(&r, &[], &Limits::default()).unwrap();
        assert_eq!(gb.krull_dimension().dim, Some(6));
        assert_eq!(gb.krull_dimension().codim(), 0);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens = [p(&r, "x*z - y^2"), p(&r, "y*w - z^2"), p(&r, "x*w - y*z")];
        let gb = buchberger(&r, &gens, &Limits::default()).unwrap();
        assert!(gb.verify_s_pairs());
        assert_eq!(gb.krull_dimension().dim, Some(2));
        // Three quadrics but codimension 2: not a complete intersection.
        assert_eq!(gb.krull_dimension().codim(), 2);
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x*y - 1"), p(&r, "x")], &Limits::default()).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.krull_dimension().dim, None);
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y", "z"]);
        let g1 = p(&r, "x*y - z");
        let g2 = p(&r, "y^2 - x");
        let q = p(&r, "3*x*z + y - 7");
        let member = g1.mul(&q).unwrap().add(&g2).unwrap();
        assert!(ideal_membership(&member, &[g1.clone(), g2.clone()], &Limits::default()).unwrap());
        assert!(!ideal_membership(&p(&r, "x"), &[g1, g2], &Limits::default()).unwrap());
        assert!(ideal_membership(&Polynomial::zero(&r), &[], &Limits::default()).unwrap());
    }

    #[test]
    fn degree_cap_reports_incomplete() {
        let r = ring(&["x", "y", "z"]);
        let gens = [p(&r, "x^2*y - z^3"), p(&r, "x*y^2 - z^3")];
        let lim = Limits { degree_cap: 3, ..Limits::default() };
        let err = buchberger(&r, &gens, &lim).unwrap_err();
        assert!(err.reason.contains("degree cap"));
    }

    #[test]
    fn modular_leading_ideal_matches() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens = [p(&r, "x*z - y^2"), p(&r, "y*w - z^2"), p(&r, "x*w - y*z")];
        let gq = buchberger(&r, &gens, &Limits::default()).unwrap();
        let rp = r.with_field(PrimeField::new(32003).unwrap());
        let gp: Vec<_> = gens.iter().map(|g| g.map_into(&rp, |c| rp.field().from_rational(c)).unwrap()).collect();
        let gbp = buchberger(&rp, &gp, &Limits::default()).unwrap();
        assert!(same_leading_ideal(&gq, &gbp));
    }

    #[test]
    fn hitting_set_small() {
        // Supports {0,1}, {1,2}, {2,3}: cover {1,2} has size 2.
        assert_eq!(minimum_hitting_set(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]), 2);
        assert_eq!(minimum_hitting_set(3, &[]), 0);
        assert_eq!(minimum_hitting_set(3, &[vec![0], vec![1], vec![2]]), 3);
    }
}
