use std::cmp::Ordering;

/// Dense exponent vector, one slot per ring variable, with its standard
/// degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars].into_boxed_slice(), degree: 0 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps: exps.into_boxed_slice(), degree }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self { exps: exps.into_boxed_slice(), degree: 1 }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Internal weight `Σ e_v · w_v`.
    pub fn weight(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Box<[u16]> = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bitmask of the support, folded modulo 64. Used to reject
    /// divisibility quickly: if `a | b` then `mask(a) & !mask(b) == 0`.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | 1 << (i % 64))
    }
}

/// Graded reverse lexicographic order on standard total degree, under a
/// variable ranking. Rank 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    by_rank: Vec<usize>,
}

impl MonomialOrder {
    /// Variables ranked in their registration order.
    pub fn grevlex(nvars: usize) -> Self {
        Self { by_rank: (0..nvars).collect() }
    }

    /// `by_rank[k]` is the variable index holding rank `k`. Must be a
    /// permutation of `0..nvars`.
    pub fn grevlex_permuted(by_rank: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; by_rank.len()];
        for &v in &by_rank {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Self { by_rank })
    }

    pub fn ranking(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn is_identity(&self) -> bool {
        self.by_rank.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree.cmp(&b.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for &v in self.by_rank.iter().rev() {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_textbook_cases() {
        let ord = MonomialOrder::grevlex(3);
        // x > y > z; degree first, then smallest exponent in the last variable wins.
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[2, 0, 0])), Ordering::Equal);
    }

    #[test]
    fn permuted_order_reverses_ranking() {
        let ord = MonomialOrder::grevlex_permuted(vec![2, 1, 0]).unwrap();
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
        assert!(MonomialOrder::grevlex_permuted(vec![0, 0, 1]).is_none());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
        assert_eq!(a.support_mask() & !b.support_mask(), 0);
    }
}
