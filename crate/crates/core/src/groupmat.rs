//! Coordinate matrices of the unipotent group `U_n` and the Borel group
//! `B_n`, their inverses, and the generator sequence of the product of
//! commutators `[X_1,Y_1]⋯[X_g,Y_g]`.
//!
//! Variables are `x_t_i_j` / `y_t_i_j` for the entries of `X_t` / `Y_t`
//! and, for Borel groups, `d_c_i` for the inverse of the `i`-th diagonal
//! entry of copy `c` (copy `2t-1` is `X_t`, copy `2t` is `Y_t`). The
//! relations `d_c_i * x_t_i_i - 1` are applied as the rewrite
//! `d_c_i * x_t_i_i -> 1` after every product, so fractions never appear.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{Monomial, Polynomial, Ring, RingDescriptor, Variable, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "un")]
    Unipotent,
    #[serde(rename = "bn")]
    Borel,
}

impl GroupKind {
    pub fn short_name(self) -> &'static str {
        match self {
            GroupKind::Unipotent => "un",
            GroupKind::Borel => "bn",
        }
    }

    /// Number of entries that vanish identically in the word matrix: the
    /// subdiagonal for `U_n`, the diagonal for `B_n`.
    pub fn exterior_factor_count(self, n: usize) -> usize {
        match self {
            GroupKind::Unipotent => n - 1,
            GroupKind::Borel => n,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "un" | "u" | "unipotent" => Ok(GroupKind::Unipotent),
            "bn" | "b" | "borel" => Ok(GroupKind::Borel),
            _ => Err(Error::Config(format!("unknown group {s:?}, expected un or bn"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    X,
    Y,
}

impl Role {
    fn prefix(self) -> &'static str {
        match self {
            Role::X => "x",
            Role::Y => "y",
        }
    }

    /// Copy index in `1..=2g`.
    pub fn copy_index(self, t: usize) -> usize {
        match self {
            Role::X => 2 * t - 1,
            Role::Y => 2 * t,
        }
    }
}

pub fn entry_name(role: Role, t: usize, i: usize, j: usize) -> String {
    format!("{}_{t}_{i}_{j}", role.prefix())
}

pub fn inverse_name(copy: usize, i: usize) -> String {
    format!("d_{copy}_{i}")
}

/// Ring of `G^{2g}`: blocks `X_1, Y_1, X_2, …` in row-major entry order,
/// each Borel block followed by its inverse variables.
pub fn group_ring<F: Field>(field: F, kind: GroupKind, n: usize, genus: usize) -> Result<Ring<F>> {
    if n < 2 {
        return Err(Error::Config(format!("matrix size must be at least 2, got {n}")));
    }
    if genus < 1 {
        return Err(Error::Config("genus must be at least 1".into()));
    }
    let mut vars = Vec::new();
    for t in 1..=genus {
        for role in [Role::X, Role::Y] {
            for i in 1..=n {
                let first = if kind == GroupKind::Borel { i } else { i + 1 };
                for j in first..=n {
                    vars.push(Variable { name: entry_name(role, t, i, j), weight: (j - i) as u32 });
                }
            }
            if kind == GroupKind::Borel {
                for i in 1..=n {
                    vars.push(Variable { name: inverse_name(role.copy_index(t), i), weight: 0 });
                }
            }
        }
    }
    RingDescriptor::new(field, vars)
}

/// Pairs `(diagonal variable, inverse variable)` and the rewrite
/// `d * x -> 1` they induce on monomials.
#[derive(Clone, Debug, Default)]
pub struct UnitRewriter {
    pairs: Vec<(usize, usize)>,
}

impl UnitRewriter {
    /// Collects every `x_t_i_i`/`y_t_i_i` whose inverse variable exists in
    /// `ring`.
    pub fn from_ring<F: Field>(ring: &Ring<F>) -> Self {
        let mut pairs = Vec::new();
        for (idx, v) in ring.variables().iter().enumerate() {
            if let Some((role, t, i, j)) = parse_entry_name(&v.name) {
                if i == j {
                    if let Some(d) = ring.index_of(&inverse_name(role.copy_index(t), i)) {
                        pairs.push((idx, d));
                    }
                }
            }
        }
        Self { pairs }
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn inverse_of(&self, var: usize) -> Option<usize> {
        self.pairs.iter().find(|(x, _)| *x == var).map(|(_, d)| *d)
    }

    fn rewrite_monomial(&self, m: &Monomial) -> Monomial {
        let mut exps = m.exponents().to_vec();
        for &(x, d) in &self.pairs {
            let k = exps[x].min(exps[d]);
            exps[x] -= k;
            exps[d] -= k;
        }
        Monomial::from_exponents(exps)
    }

    pub fn reduce<F: Field>(&self, p: &Polynomial<F>) -> Polynomial<F> {
        if self.pairs.is_empty() {
            return p.clone();
        }
        p.map_monomials(|m| self.rewrite_monomial(m))
    }

    /// The relations `d * x - 1`.
    pub fn relations<F: Field>(&self, ring: &Ring<F>) -> Vec<Polynomial<F>> {
        self.pairs
            .iter()
            .map(|&(x, d)| {
                Polynomial::var(ring, d)
                    .mul(&Polynomial::var(ring, x))
                    .expect("same ring")
                    .sub(&Polynomial::one(ring))
                    .expect("same ring")
            })
            .collect()
    }
}

fn parse_entry_name(name: &str) -> Option<(Role, usize, usize, usize)> {
    let mut parts = name.split('_');
    let role = match parts.next()? {
        "x" => Role::X,
        "y" => Role::Y,
        _ => return None,
    };
    let t = parts.next()?.parse().ok()?;
    let i = parts.next()?.parse().ok()?;
    let j = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((role, t, i, j))
}

/// Square matrix of polynomials over one ring.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<F: Field> {
    n: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect()).collect();
        f.debug_struct("PolyMatrix").field("n", &self.n).field("rows", &rows).finish()
    }
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial<F>) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, entries }
    }

    pub fn identity(ring: &Ring<F>, n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring<F> {
        self.entries[0].ring()
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.n + j]
    }

    pub fn map(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self, rewriter: &UnitRewriter) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape(format!("cannot multiply {0}x{0} by {1}x{1}", self.n, other.n)));
        }
        let n = self.n;
        let ring = self.ring().clone();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Polynomial::zero(&ring);
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                out.push(rewriter.reduce(&acc));
            }
        }
        Ok(Self { n, entries: out })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Self { n: self.n, entries })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }
}

/// Generic element of `U_n` or `B_n` in the variables of copy `t` and the
/// given role, inside `ring` (built by [`group_ring`]).
pub fn coordinate_matrix<F: Field>(ring: &Ring<F>, kind: GroupKind, n: usize, t: usize, role: Role) -> Result<PolyMatrix<F>> {
    if n < 2 {
        return Err(Error::Config(format!("matrix size must be at least 2, got {n}")));
    }
    let lookup = |i: usize, j: usize| {
        Polynomial::var_named(ring, &entry_name(role, t, i + 1, j + 1))
            .map_err(|_| Error::Config(format!("ring lacks {}", entry_name(role, t, i + 1, j + 1))))
    };
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(match (kind, i.cmp(&j)) {
                (_, std::cmp::Ordering::Greater) => Polynomial::zero(ring),
                (GroupKind::Unipotent, std::cmp::Ordering::Equal) => Polynomial::one(ring),
                _ => lookup(i, j)?,
            });
        }
    }
    Ok(PolyMatrix { n, entries })
}

/// Two-sided inverse of a coordinate-shaped matrix.
///
/// Unipotent: with `M = I + N`, `M^{-1} = Σ_k (-N)^k`. Borel: with
/// `M = D + U` and `D^{-1}` given by inverse variables,
/// `M^{-1} = Σ_k (-D^{-1}U)^k · D^{-1}`, reduced by the unit rewrite.
pub fn inverse<F: Field>(m: &PolyMatrix<F>, kind: GroupKind) -> Result<PolyMatrix<F>> {
    let n = m.size();
    let ring = m.ring().clone();
    if !m.is_upper_triangular() {
        return Err(Error::Shape("matrix is not upper triangular".into()));
    }
    let rewriter = UnitRewriter::from_ring(&ring);
    let (step, tail) = match kind {
        GroupKind::Unipotent => {
            if !(0..n).all(|i| m.get(i, i).is_one()) {
                return Err(Error::Shape("unipotent matrix needs a unit diagonal".into()));
            }
            let neg_nil = PolyMatrix::from_fn(n, |i, j| if i == j { Polynomial::zero(&ring) } else { m.get(i, j).neg() });
            (neg_nil, PolyMatrix::identity(&ring, n))
        }
        GroupKind::Borel => {
            let mut dinv = Vec::with_capacity(n);
            for i in 0..n {
                let diag = m.get(i, i);
                let var = match diag.terms() {
                    [(mono, c)] if diag.field().is_one(c) && mono.degree() == 1 => mono.support().next().expect("degree one"),
                    _ => return Err(Error::Shape(format!("diagonal entry {} is not a coordinate variable", diag))),
                };
                let d = rewriter
                    .inverse_of(var)
                    .ok_or_else(|| Error::Shape(format!("no inverse variable registered for {}", ring.name(var))))?;
                dinv.push(Polynomial::var(&ring, d));
            }
            let neg_k = PolyMatrix::from_fn(n, |i, j| {
                if i < j {
                    rewriter.reduce(&dinv[i].mul(m.get(i, j)).expect("same ring").neg())
                } else {
                    Polynomial::zero(&ring)
                }
            });
            let dmat = PolyMatrix::from_fn(n, |i, j| if i == j { dinv[i].clone() } else { Polynomial::zero(&ring) });
            (neg_k, dmat)
        }
    };
    // Σ_{k<n} step^k, then multiply by tail.
    let mut power = PolyMatrix::identity(&ring, n);
    let mut sum = PolyMatrix::identity(&ring, n);
    for _ in 1..n {
        power = power.mul(&step, &rewriter)?;
        sum = PolyMatrix::from_fn(n, |i, j| sum.get(i, j).add(power.get(i, j)).expect("same ring"));
    }
    sum.mul(&tail, &rewriter)
}

#[derive(Clone, Debug)]
pub struct Generator<F: Field> {
    /// One-based matrix position.
    pub position: (usize, usize),
    pub poly: Polynomial<F>,
}

/// Entries of the commutator word organised as a Koszul generator
/// sequence.
#[derive(Clone, Debug)]
pub struct CommutatorSystem<F: Field> {
    pub kind: GroupKind,
    pub n: usize,
    pub genus: usize,
    pub ring: Ring<F>,
    /// `[X_1,Y_1]⋯[X_g,Y_g]` for `U_n`, that product minus `I` for `B_n`.
    pub word_matrix: PolyMatrix<F>,
    /// Row-major over `i + 1 < j` (`U_n`) or `i < j` (`B_n`).
    pub generators: Vec<Generator<F>>,
    /// `d_c_i * x_c_i_i - 1` for every diagonal variable; empty for `U_n`.
    pub unit_relations: Vec<Polynomial<F>>,
    /// One-based upper-triangular positions whose entry vanished.
    pub zero_positions: Vec<(usize, usize)>,
}

impl<F: Field> CommutatorSystem<F> {
    pub fn generator_polys(&self) -> Vec<Polynomial<F>> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn generator_at(&self, i: usize, j: usize) -> Option<&Polynomial<F>> {
        self.generators.iter().find(|g| g.position == (i, j)).map(|g| &g.poly)
    }

    /// `f[i][j]: <poly>` lines in generator order.
    pub fn dump_lines(&self) -> Vec<String> {
        self.generators.iter().map(|g| format!("f[{}][{}]: {}", g.position.0, g.position.1, g.poly)).collect()
    }
}

/// Builds `2g` coordinate matrices, multiplies the commutators and checks
/// the vanishing pattern and homogeneity of the result.
pub fn commutator_word<F: Field>(field: F, kind: GroupKind, n: usize, genus: usize) -> Result<CommutatorSystem<F>> {
    let ring = group_ring(field, kind, n, genus)?;
    commutator_word_in(&ring, kind, n, genus)
}

/// Same as [`commutator_word`] inside an existing ring (for instance one
/// with a permuted monomial order).
pub fn commutator_word_in<F: Field>(ring: &Ring<F>, kind: GroupKind, n: usize, genus: usize) -> Result<CommutatorSystem<F>> {
    let rewriter = UnitRewriter::from_ring(ring);
    let mut word = PolyMatrix::identity(ring, n);
    for t in 1..=genus {
        let x = coordinate_matrix(ring, kind, n, t, Role::X)?;
        let y = coordinate_matrix(ring, kind, n, t, Role::Y)?;
        let xi = inverse(&x, kind)?;
        let yi = inverse(&y, kind)?;
        let comm = x.mul(&y, &rewriter)?.mul(&xi, &rewriter)?.mul(&yi, &rewriter)?;
        word = word.mul(&comm, &rewriter)?;
    }
    let word_matrix = match kind {
        GroupKind::Unipotent => word,
        GroupKind::Borel => word.sub(&PolyMatrix::identity(ring, n))?,
    };

    let mut generators = Vec::new();
    let mut zero_positions = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let entry = word_matrix.get(i, j);
            let (pi, pj) = (i + 1, j + 1);
            let fail = |why: &str| Err(Error::VanishingPattern(pi, pj, format!("{why}: {entry}")));
            if j < i {
                if !entry.is_zero() {
                    return fail("entry below the diagonal must vanish");
                }
                continue;
            }
            match kind {
                GroupKind::Unipotent if i == j => {
                    if !entry.is_one() {
                        return fail("diagonal of a unipotent word must be 1");
                    }
                    continue;
                }
                GroupKind::Unipotent if j == i + 1 => {
                    if !entry.is_zero() {
                        return fail("subdiagonal entry must vanish");
                    }
                }
                GroupKind::Borel if i == j => {
                    if !entry.is_zero() {
                        return fail("diagonal entry of word - I must vanish");
                    }
                }
                _ => {
                    match entry.weight_of() {
                        Weight::Homogeneous(w) if w == (j - i) as u64 => {}
                        Weight::Bottom => {}
                        _ => return fail("entry is not homogeneous of weight j - i"),
                    }
                    generators.push(Generator { position: (pi, pj), poly: entry.clone() });
                }
            }
            if entry.is_zero() {
                zero_positions.push((pi, pj));
            }
        }
    }
    let unit_relations = rewriter.relations(ring);
    Ok(CommutatorSystem { kind, n, genus, ring: ring.clone(), word_matrix, generators, unit_relations, zero_positions })
}

/// Assigns the copy-`t` variables of `X_t` and `Y_t` their identity-matrix
/// values (entries 0, diagonals and inverses 1).
pub fn identity_assignment<F: Field>(ring: &Ring<F>, kind: GroupKind, n: usize, t: usize) -> HashMap<usize, Polynomial<F>> {
    let mut map = HashMap::new();
    for role in [Role::X, Role::Y] {
        for i in 1..=n {
            let first = if kind == GroupKind::Borel { i } else { i + 1 };
            for j in first..=n {
                if let Some(v) = ring.index_of(&entry_name(role, t, i, j)) {
                    let val = if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) };
                    map.insert(v, val);
                }
            }
            if let Some(d) = ring.index_of(&inverse_name(role.copy_index(t), i)) {
                map.insert(d, Polynomial::one(ring));
            }
        }
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn parse(ring: &Ring<Rationals>, s: &str) -> Polynomial<Rationals> {
        Polynomial::parse(ring, s).unwrap()
    }

    #[test]
    fn ring_layout_and_weights() {
        let r = group_ring(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
        let names: Vec<_> = r.variables().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, ["x_1_1_2", "x_1_1_3", "x_1_2_3", "y_1_1_2", "y_1_1_3", "y_1_2_3"]);
        assert_eq!(r.weights(), &[1, 2, 1, 1, 2, 1]);
        let b = group_ring(Rationals, GroupKind::Borel, 2, 1).unwrap();
        let names: Vec<_> = b.variables().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, ["x_1_1_1", "x_1_1_2", "x_1_2_2", "d_1_1", "d_1_2", "y_1_1_1", "y_1_1_2", "y_1_2_2", "d_2_1", "d_2_2"]);
        assert!(group_ring(Rationals, GroupKind::Unipotent, 1, 1).is_err());
    }

    #[test]
    fn u2_matrix_is_smallest_case() {
        let r = group_ring(Rationals, GroupKind::Unipotent, 2, 1).unwrap();
        let x = coordinate_matrix(&r, GroupKind::Unipotent, 2, 1, Role::X).unwrap();
        assert!(x.get(0, 0).is_one() && x.get(1, 1).is_one() && x.get(1, 0).is_zero());
        assert_eq!(x.get(0, 1).to_string(), "x_1_1_2");
    }

    #[test]
    fn u3_inverse_has_antipode_entry() {
        let r = group_ring(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
        let x = coordinate_matrix(&r, GroupKind::Unipotent, 3, 1, Role::X).unwrap();
        let xi = inverse(&x, GroupKind::Unipotent).unwrap();
        assert_eq!(*xi.get(0, 2), parse(&r, "x_1_1_2*x_1_2_3 - x_1_1_3"));
        let rw = UnitRewriter::default();
        assert!(x.mul(&xi, &rw).unwrap().is_identity());
        assert!(xi.mul(&x, &rw).unwrap().is_identity());
        assert!(inverse(&PolyMatrix::identity(&r, 3), GroupKind::Unipotent).unwrap().is_identity());
    }

    #[test]
    fn b2_inverse_uses_inverse_variables() {
        let r = group_ring(Rationals, GroupKind::Borel, 2, 1).unwrap();
        let x = coordinate_matrix(&r, GroupKind::Borel, 2, 1, Role::X).unwrap();
        let xi = inverse(&x, GroupKind::Borel).unwrap();
        assert_eq!(*xi.get(0, 1), parse(&r, "-x_1_1_2*d_1_1*d_1_2"));
        let rw = UnitRewriter::from_ring(&r);
        assert!(x.mul(&xi, &rw).unwrap().is_identity());
        assert!(xi.mul(&x, &rw).unwrap().is_identity());
    }

    #[test]
    fn shape_violations() {
        let r = group_ring(Rationals, GroupKind::Unipotent, 2, 1).unwrap();
        let x = coordinate_matrix(&r, GroupKind::Unipotent, 2, 1, Role::X).unwrap();
        // A unipotent ring has no inverse variables for Borel-shaped input.
        let bad = PolyMatrix::from_fn(2, |i, j| if i == j { x.get(0, 1).clone() } else { Polynomial::zero(&r) });
        assert!(matches!(inverse(&bad, GroupKind::Borel), Err(Error::Shape(_))));
        assert!(matches!(inverse(&bad, GroupKind::Unipotent), Err(Error::Shape(_))));
        let lower = PolyMatrix::from_fn(2, |i, j| if i > j { Polynomial::one(&r) } else { Polynomial::one(&r) });
        assert!(matches!(inverse(&lower, GroupKind::Unipotent), Err(Error::Shape(_))));
    }

    #[test]
    fn u3_generator_is_the_classical_relation() {
        let sys = commutator_word(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
        assert_eq!(sys.generators.len(), 1);
        assert_eq!(sys.generators[0].position, (1, 3));
        assert_eq!(sys.generators[0].poly, parse(&sys.ring, "x_1_1_2*y_1_2_3 - y_1_1_2*x_1_2_3"));
        assert_eq!(sys.zero_positions, vec![(1, 2), (2, 3)]);
        assert!(sys.unit_relations.is_empty());
    }

    #[test]
    fn u2_is_abelian_for_every_genus() {
        for g in 1..=4 {
            let sys = commutator_word(Rationals, GroupKind::Unipotent, 2, g).unwrap();
            assert!(sys.generators.is_empty());
            assert_eq!(sys.zero_positions, vec![(1, 2)]);
        }
    }

    #[test]
    fn u5_generator_weights() {
        let sys = commutator_word(Rationals, GroupKind::Unipotent, 5, 1).unwrap();
        let weights: Vec<_> = sys.generators.iter().map(|g| g.poly.weight_of()).collect();
        let expected: Vec<_> = [2, 2, 2, 3, 3, 4].iter().map(|&w| Weight::Homogeneous(w)).collect();
        // Row-major order: (1,3),(1,4),(1,5),(2,4),(2,5),(3,5).
        let mut sorted = weights.clone();
        sorted.sort_by_key(|w| match w {
            Weight::Homogeneous(v) => *v,
            _ => u64::MAX,
        });
        assert_eq!(sorted, expected);
        let positions: Vec<_> = sys.generators.iter().map(|g| g.position).collect();
        assert_eq!(positions, [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]);
    }

    #[test]
    fn borel_system_counts() {
        let sys = commutator_word(Rationals, GroupKind::Borel, 3, 1).unwrap();
        assert_eq!(sys.generators.len(), 3);
        assert_eq!(sys.unit_relations.len(), 6);
        assert_eq!(sys.ring.nvars(), 18);
        for i in 1..=3 {
            assert!(sys.zero_positions.contains(&(i, i)));
        }
    }

    #[test]
    fn dump_format() {
        let sys = commutator_word(Rationals, GroupKind::Unipotent, 3, 1).unwrap();
        assert_eq!(sys.dump_lines(), vec!["f[1][3]: -x_1_2_3*y_1_1_2 + x_1_1_2*y_1_2_3".to_string()]);
    }
}
