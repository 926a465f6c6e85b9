use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::field::Field;

/// Internal weight of a polynomial under the ring's variable weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// The zero polynomial; sits below every weight.
    Bottom,
    Homogeneous(u64),
    NotHomogeneous,
}

/// Sparse polynomial in canonical form: terms strictly descending under the
/// ring's monomial order, no zero coefficients, no repeated monomials.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Self { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Self { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring<F>, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn var(ring: &Ring<F>, index: usize) -> Self {
        Self { ring: ring.clone(), terms: vec![(Monomial::variable(ring.nvars(), index), ring.field().one())] }
    }

    pub fn var_named(ring: &Ring<F>, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Self { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and
    /// dropping zeros.
    pub fn from_terms(ring: &Ring<F>, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { ring: ring.clone(), terms }
    }

    /// Trusts the caller that `terms` are already canonical.
    pub(crate) fn from_sorted_terms(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Self { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest standard degree among the terms; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &F::Elem| if negate { field.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), conv(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { field.sub(&a.1, &b.1) } else { field.add(&a.1, &b.1) };
                    if !field.is_zero(&c) {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        Self { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Self { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect() }
    }

    /// `c · m · self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(&large.mul_term(m, c), false);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `self − c · m · g`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        self.merge(&g.mul_term(m, c), true)
    }

    /// Normalizes the leading coefficient to one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn weight_of(&self) -> Weight {
        let weights = self.ring.weights();
        let mut it = self.terms.iter().map(|(m, _)| m.weight(weights));
        match it.next() {
            None => Weight::Bottom,
            Some(w) => {
                if it.all(|v| v == w) {
                    Weight::Homogeneous(w)
                } else {
                    Weight::NotHomogeneous
                }
            }
        }
    }

    /// Simultaneous substitution. Variables missing from `assignment` map
    /// to themselves.
    pub fn substitute(&self, assignment: &HashMap<usize, Polynomial<F>>) -> Result<Self> {
        for q in assignment.values() {
            self.check_ring(q)?;
        }
        let nvars = self.ring.nvars();
        let mut pow_cache: HashMap<(usize, u16), Polynomial<F>> = HashMap::new();
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut kept = vec![0u16; nvars];
            let mut factor = Self::constant(&self.ring, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match assignment.get(&v) {
                    None => kept[v] = e,
                    Some(q) => {
                        let p = pow_cache.entry((v, e)).or_insert_with(|| q.pow(e as u32));
                        factor = factor.mul(p)?;
                    }
                }
            }
            if factor.is_zero() {
                continue;
            }
            let kept = Monomial::from_exponents(kept);
            acc = acc.merge(&factor.mul_term(&kept, &self.field().one()), false);
        }
        Ok(acc)
    }

    /// Substitution keyed by variable name.
    pub fn substitute_named(&self, assignment: &[(&str, Polynomial<F>)]) -> Result<Self> {
        let mut map = HashMap::new();
        for (name, q) in assignment {
            let i = self.ring.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
            map.insert(i, q.clone());
        }
        self.substitute(&map)
    }

    /// Applies `f` to every monomial and re-normalizes.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Evaluates at a point given as one field element per variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = field.mul(&t, &point[v]);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, matching variables by name
    /// and mapping coefficients with `coeff`. Fails if a variable that
    /// occurs is absent from `target` or a coefficient has no image.
    pub fn map_into<G: Field>(
        &self,
        target: &Ring<G>,
        mut coeff: impl FnMut(&F::Elem) -> Option<G::Elem>,
    ) -> Result<Polynomial<G>> {
        let map: Vec<Option<usize>> = self.ring.variables().iter().map(|v| target.index_of(&v.name)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.nvars()];
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[v].ok_or(Error::RingMismatch)?] += e;
                }
            }
            let c = coeff(c).ok_or_else(|| Error::Parse(format!("coefficient {} has no image", self.field().render(c))))?;
            terms.push((Monomial::from_exponents(exps), c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Same polynomial in a ring with the same field but possibly another
    /// order or variable superset.
    pub fn transfer(&self, target: &Ring<F>) -> Result<Self> {
        self.map_into(target, |c| Some(c.clone()))
    }

    /// Re-sorts the terms and checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        let field = self.field();
        let order = self.ring.order();
        self.terms.iter().all(|(m, c)| !field.is_zero(c) && m.nvars() == self.ring.nvars())
            && self.terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }
}
