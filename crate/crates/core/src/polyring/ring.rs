use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::monomial::MonomialOrder;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

/// Variables with internal weights, a coefficient field and the active
/// monomial order. Shared between polynomials through [`Ring`].
#[derive(Debug)]
pub struct RingDescriptor<F: Field> {
    field: F,
    vars: Vec<Variable>,
    weights: Vec<u32>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

pub type Ring<F> = Arc<RingDescriptor<F>>;

impl<F: Field> PartialEq for RingDescriptor<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> RingDescriptor<F> {
    pub fn new(field: F, vars: Vec<Variable>) -> Result<Ring<F>> {
        let order = MonomialOrder::grevlex(vars.len());
        Self::with_order(field, vars, order)
    }

    pub fn with_order(field: F, vars: Vec<Variable>, order: MonomialOrder) -> Result<Ring<F>> {
        if order.ranking().len() != vars.len() {
            return Err(Error::Config("monomial order does not match variable count".into()));
        }
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(&v.name) {
                return Err(Error::Config(format!("invalid variable name {:?}", v.name)));
            }
            if index.insert(v.name.clone(), i).is_some() {
                return Err(Error::Config(format!("duplicate variable {:?}", v.name)));
            }
        }
        let weights = vars.iter().map(|v| v.weight).collect();
        Ok(Arc::new(Self { field, vars, weights, index, order }))
    }

    /// Same variables and field, variables re-ranked by a seeded shuffle.
    /// Seed 0 keeps the registration order.
    pub fn reordered(&self, seed: u64) -> Ring<F> {
        let mut by_rank: Vec<usize> = (0..self.vars.len()).collect();
        if seed != 0 {
            by_rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let order = MonomialOrder::grevlex_permuted(by_rank).expect("shuffle is a permutation");
        Self::with_order(self.field.clone(), self.vars.clone(), order).expect("validated variables")
    }

    /// Same variables and order over another field.
    pub fn with_field<G: Field>(&self, field: G) -> Ring<G> {
        RingDescriptor::with_order(field, self.vars.clone(), self.order.clone()).expect("validated variables")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.vars[var].name
    }

    pub fn is_positively_weighted(&self) -> bool {
        self.weights.iter().all(|&w| w >= 1)
    }
}
