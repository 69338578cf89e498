//! Sparse multivariate polynomials with terms kept sorted by the ring order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernel::field::Field;
use crate::kernel::monomial::Monomial;
use crate::kernel::ring::RingRef;

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// A polynomial; terms are strictly decreasing in the ring order and no
/// stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

pub(crate) fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial_term(ring, ring.monomial(&[]), c)
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        Self::monomial_term(ring, ring.var_monomial(i), ring.field().one())
    }

    pub fn monomial_term(ring: &RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// and drops zeros.
    pub fn from_terms(ring: &RingRef<F>, mut terms: Vec<Term<F>>) -> Self {
        let f = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !f.is_zero(&t.1));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of a given monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .binary_search_by(|t| self.ring.cmp(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.field().zero())
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.ring.field().inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, None))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let minus = self.ring.field().neg(&self.ring.field().one());
        Ok(self.merge(other, Some((&Monomial::one(), &minus))))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    /// `self + c*m*other` by a single merge pass. `None` means `c = 1, m = 1`.
    fn merge(&self, other: &Self, factor: Option<(&Monomial, &F::Elem)>) -> Self {
        let f = self.ring.field();
        let ring = &self.ring;
        let scaled = |t: &Term<F>| -> Term<F> {
            match factor {
                None => t.clone(),
                Some((m, c)) => (t.0.mul(m), f.mul(&t.1, c)),
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let b = scaled(&other.terms[j]);
            match ring.cmp(&self.terms[i].0, &b.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&self.terms[i].1, &b.1);
                    if !f.is_zero(&s) {
                        out.push((b.0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(scaled));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// `self - c*m*other`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let negc = self.ring.field().neg(c);
        self.merge(other, Some((m, &negc)))
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(big, Some((m, c)));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let f = self.ring.field();
        let n = self.ring.nvars();
        assert_eq!(point.len(), n, "point has wrong dimension");
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    v = f.mul(&v, x);
                }
            }
            acc = f.add(&acc, &v);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let f = self.ring.field();
        let xi = self.ring.var_monomial(i);
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exp(i) > 0)
            .map(|(m, c)| (m.div(&xi).unwrap(), f.mul(c, &f.from_i64(m.exp(i) as i64))))
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism `x_i -> images[i]` into the ring of the images.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Polynomial<F>>> = images.iter().map(|p| vec![Self::one(target), p.clone()]).collect();
        let mut acc = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw.last().unwrap().product(&pw[1]);
                    pw.push(next);
                }
                t = t.product(&pw[e]);
            }
            acc = acc.merge(&t, None);
        }
        acc
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `map[i]`.
    pub fn rename_vars(&self, target: &RingRef<F>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &j) in map.iter().enumerate() {
                    e[j] += m.exp(i);
                }
                (target.monomial(&e), c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Same polynomial in a ring with the same variables but another order
    /// or weights.
    pub fn reorder(&self, target: &RingRef<F>) -> Self {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.rename_vars(target, &map)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(fmt, "0");
        }
        let f = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match f.negative_part(c) {
                Some(a) => (true, a),
                None => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    write!(fmt, "-")?;
                }
            } else {
                write!(fmt, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = self.ring.format_monomial(m);
            if m.is_one() {
                write!(fmt, "{}", f.format(&mag))?;
            } else if f.is_one(&mag) {
                write!(fmt, "{mono}")?;
            } else {
                write!(fmt, "{}*{}", f.format(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{PrimeField, Rationals};
    use crate::kernel::monomial::MonomialOrder;
    use crate::kernel::ring::Ring;

    fn ring3() -> RingRef<PrimeField> {
        Ring::new(PrimeField::default(), 3, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring3();
        let (x0, x1) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let prod = &(&x0 + &x1) * &(&x0 - &x1);
        let expected = &(&x0 * &x0) - &(&x1 * &x1);
        assert_eq!(prod, expected);
        assert!(prod.is_homogeneous());
        assert_eq!(prod.degree(), Some(2));
    }

    #[test]
    fn times_zero() {
        let r = ring3();
        let x0 = Polynomial::var(&r, 0);
        assert!((&x0 * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn binomial_coefficient_by_repeated_multiplication() {
        let r = Ring::new(Rationals, 2, MonomialOrder::Grevlex).unwrap();
        let s = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        let cube = &(&s * &s) * &s;
        assert_eq!(cube.coeff(&r.monomial(&[1, 2])), Rationals.from_i64(3));
        assert_eq!(cube.pow(1), cube);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring3(), 0);
        let other = Ring::new(PrimeField::default(), 4, MonomialOrder::Grevlex).unwrap();
        let b = Polynomial::var(&other, 0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn display_and_signs() {
        let r = ring3();
        let p = &(&Polynomial::var(&r, 0) * &Polynomial::var(&r, 2)) - &Polynomial::var(&r, 1).pow(2);
        assert_eq!(p.to_string(), "-z1^2 + z0*z2");
    }

    #[test]
    fn substitution_and_evaluation() {
        let r = ring3();
        let f = PrimeField::default();
        let p = &Polynomial::var(&r, 0) * &Polynomial::var(&r, 1);
        // x0 -> x1 + x2, x1 -> x1
        let images = vec![
            &Polynomial::var(&r, 1) + &Polynomial::var(&r, 2),
            Polynomial::var(&r, 1),
            Polynomial::var(&r, 2),
        ];
        let q = p.substitute(&r, &images);
        assert_eq!(q.evaluate(&[0, 2, 3]), f.from_i64(10));
        assert_eq!(p.derivative(0), Polynomial::var(&r, 1));
    }
}
