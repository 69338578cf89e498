//! Polynomial rings: field, number of variables, grading weights, order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernel::field::Field;
use crate::kernel::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// A graded polynomial ring `k[x_0, ..., x_{N-1}]`.
///
/// Variables carry positive integer weights (all 1 for the standard grading);
/// weighted grading is what lets graph ideals of multihomogeneous
/// parameterizations stay homogeneous.
#[derive(Clone)]
pub struct Ring<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    weights: Vec<u32>,
    names: Vec<String>,
}

pub type RingRef<F> = Arc<Ring<F>>;

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.order == other.order
            && self.weights == other.weights
            && self.field == other.field
    }
}

impl<F: Field> fmt::Debug for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({} vars over {}, {:?}", self.nvars, self.field.spec(), self.order)?;
        if !self.is_standard_graded() {
            write!(f, ", weights {:?}", self.weights)?;
        }
        write!(f, ")")
    }
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, nvars: usize, order: MonomialOrder) -> Result<RingRef<F>> {
        Self::with_weights(field, vec![1; nvars], order)
    }

    pub fn with_weights(field: F, weights: Vec<u32>, order: MonomialOrder) -> Result<RingRef<F>> {
        let nvars = weights.len();
        if nvars == 0 {
            return Err(Error::OutOfRange("a ring needs at least one variable".into()));
        }
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables { got: nvars, max: MAX_VARS });
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("variable weights must be positive".into()));
        }
        if let MonomialOrder::BlockElimination(k) = order {
            if k == 0 || k >= nvars {
                return Err(Error::OutOfRange(format!(
                    "elimination block {k} must be in 1..{nvars}"
                )));
            }
        }
        let names = (0..nvars).map(|i| format!("z{i}")).collect();
        Ok(Arc::new(Ring { field, nvars, order, weights, names }))
    }

    /// Same ring with custom variable names.
    pub fn renamed(&self, names: Vec<String>) -> Result<RingRef<F>> {
        if names.len() != self.nvars {
            return Err(Error::InvalidArgument("wrong number of variable names".into()));
        }
        let mut r = self.clone();
        r.names = names;
        Ok(Arc::new(r))
    }

    /// Same variables and weights, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        let r = Self::with_weights(self.field.clone(), self.weights.clone(), order)?;
        r.renamed(self.names.clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        assert!(exps.len() <= self.nvars, "exponent vector longer than the ring");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        let deg = exps.iter().zip(&self.weights).map(|(&x, &w)| x as u32 * w).sum();
        Monomial::from_parts(e, deg)
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Monomial::from_parts(e, self.weights[i])
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, self.nvars, &self.weights)
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        for (i, x) in e.iter_mut().enumerate().take(self.nvars) {
            *x = a.exp(i).max(b.exp(i));
        }
        self.monomial(&e[..self.nvars])
    }

    pub fn gcd(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        for (i, x) in e.iter_mut().enumerate().take(self.nvars) {
            *x = a.exp(i).min(b.exp(i));
        }
        self.monomial(&e[..self.nvars])
    }

    /// All monomials of (weighted) degree `d`, sorted ascending in the ring
    /// order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.nvars];
        self.fill_monomials(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(a, b));
        out
    }

    fn fill_monomials(&self, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == self.nvars {
            let w = self.weights[i];
            if left.is_multiple_of(w) {
                cur[i] = (left / w) as u16;
                out.push(self.monomial(cur));
                cur[i] = 0;
            }
            return;
        }
        let w = self.weights[i];
        let mut e = 0;
        while e * w <= left {
            cur[i] = e as u16;
            self.fill_monomials(i + 1, left - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
