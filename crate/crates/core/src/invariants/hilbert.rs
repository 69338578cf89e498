//! Hilbert series numerators, Hilbert functions and Hilbert polynomials,
//! computed from the leading-term ideal.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::kernel::field::Field;
use crate::kernel::monomial::{Monomial, MAX_VARS};

/// Hilbert data of `S/I` for a standard-graded `S` with `N` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    /// Coefficients of the K-polynomial: the Hilbert series is
    /// `numerator(z) / (1 - z)^N`.
    pub numerator: Vec<i64>,
    pub nvars: usize,
    /// Krull dimension of `S/I`.
    pub dimension: usize,
    pub degree: i64,
    /// Coefficients of the Hilbert polynomial in `m`, lowest first; empty
    /// when the Krull dimension is 0.
    pub hilbert_polynomial: Vec<BigRational>,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        let mut numerator = numerator;
        trim(&mut numerator);
        let mut reduced = numerator.clone();
        let mut cancelled = 0;
        while !reduced.is_empty() && reduced.iter().sum::<i64>() == 0 {
            reduced = divide_one_minus_z(&reduced);
            cancelled += 1;
        }
        let dimension = nvars - cancelled;
        let degree = reduced.iter().sum();
        let mut h = HilbertData { numerator, nvars, dimension, degree, hilbert_polynomial: Vec::new() };
        h.hilbert_polynomial = h.interpolate();
        h
    }

    /// Projective dimension of the scheme (`-1` when empty).
    pub fn projective_dimension(&self) -> i64 {
        self.dimension as i64 - 1
    }

    /// Codimension in the ambient projective space.
    pub fn codimension(&self) -> usize {
        self.nvars - self.dimension
    }

    /// `dim_k (S/I)_m`.
    pub fn hilbert_function(&self, m: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| m - (*i as i64) >= 0)
            .map(|(i, &c)| c as i128 * binomial(m - i as i64 + n - 1, n - 1))
            .sum::<i128>() as i64
    }

    pub fn hilbert_polynomial_at(&self, m: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(m));
        self.hilbert_polynomial
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Newton forward differences of the Hilbert function, started at a
    /// degree past which it agrees with the Hilbert polynomial.
    fn interpolate(&self) -> Vec<BigRational> {
        let k = self.dimension;
        if k == 0 {
            return Vec::new();
        }
        let start = self.numerator.len().saturating_sub(1) as i64;
        let mut diffs: Vec<BigRational> = (0..k as i64)
            .map(|j| BigRational::from_integer(BigInt::from(self.hilbert_function(start + j))))
            .collect();
        for level in 1..k {
            for j in (level..k).rev() {
                diffs[j] = &diffs[j] - &diffs[j - 1];
            }
        }
        // Σ_j Δ^j · C(m - start, j), expanded in powers of m
        let mut out = vec![BigRational::zero(); k];
        let mut basis = vec![BigRational::one()];
        for (j, d) in diffs.iter().enumerate() {
            if j > 0 {
                // basis *= (m - start - (j-1)) / j
                let shift = BigRational::from_integer(BigInt::from(-(start + j as i64 - 1)));
                let jr = BigRational::from_integer(BigInt::from(j as i64));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (i, b) in basis.iter().enumerate() {
                    next[i + 1] += b / &jr;
                    next[i] += b * &shift / &jr;
                }
                basis = next;
            }
            for (i, b) in basis.iter().enumerate() {
                out[i] += b * d;
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn divide_one_minus_z(p: &[i64]) -> Vec<i64> {
    // p = (1 - z) q  ⇒  q_i = Σ_{j ≤ i} p_j
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    q
}

pub(crate) fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Hilbert data of `S/I` from a Groebner basis of `I`.
pub fn hilbert_data<F: Field>(gb: &GroebnerBasis<F>) -> Result<HilbertData> {
    if gb.is_unit() {
        return Err(Error::EmptyScheme);
    }
    if !gb.ring().is_standard_graded() {
        return Err(Error::Unsupported("Hilbert series of weighted rings".into()));
    }
    let n = gb.ring().nvars();
    let numerator = monomial_numerator(&gb.leading_monomials(), n);
    Ok(HilbertData::from_numerator(numerator, n))
}

/// K-polynomial of `S/M` for the monomial ideal `M` generated by `gens`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens: Vec<Exps> = gens.iter().map(|m| Exps::of(m, nvars)).collect();
    let mut memo = HashMap::new();
    let mut k = numerator_rec(minimalize(gens), &mut memo);
    trim(&mut k);
    k
}

/// Plain exponent vectors; hashing and ordering are all the recursion needs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Exps(Vec<u16>);

impl Exps {
    fn of(m: &Monomial, n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        Exps(m.exps(n).to_vec())
    }

    fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn divides(&self, other: &Exps) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn coprime(&self, other: &Exps) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn mul_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `K(M) = K(M + (x^k)) + z^k K(M : x^k)` with `x` the variable occurring in
/// the most generators and `k` its least positive exponent; pairwise
/// coprime generators give a product of `1 - z^{deg}` factors.
fn numerator_rec(gens: Vec<Exps>, memo: &mut HashMap<Vec<Exps>, Vec<i64>>) -> Vec<i64> {
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() + 1];
            f[0] = 1;
            f[g.degree()] -= 1;
            mul_poly(&acc, &f)
        });
    }
    if let Some(k) = memo.get(&gens) {
        return k.clone();
    }
    let n = gens[0].0.len();
    let var = (0..n)
        .max_by_key(|&i| (gens.iter().filter(|g| g.0[i] > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    let k = gens.iter().filter(|g| g.0[var] > 0).map(|g| g.0[var]).min().unwrap();

    let mut pivot = Exps(vec![0; n]);
    pivot.0[var] = k;
    let mut plus: Vec<Exps> = gens.iter().filter(|g| g.0[var] < k).cloned().collect();
    plus.push(pivot);
    let colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h.0[var] = h.0[var].saturating_sub(k);
            h
        })
        .collect();

    let a = numerator_rec(minimalize(plus), memo);
    let b = numerator_rec(minimalize(colon), memo);
    let mut out = vec![0; a.len().max(b.len() + k as usize)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + k as usize] += c;
    }
    memo.insert(gens, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::kernel::{MonomialOrder, Polynomial, PrimeField, Ring};

    fn twisted_cubic() -> GroebnerBasis<PrimeField> {
        let r = Ring::new(PrimeField::default(), 4, MonomialOrder::Grevlex).unwrap();
        let z: Vec<_> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let minor = |a: usize, b: usize| &(&z[a] * &z[b + 1]) - &(&z[b] * &z[a + 1]);
        Ideal::new(&r, vec![minor(0, 1), minor(0, 2), minor(1, 2)]).unwrap().groebner()
    }

    #[test]
    fn twisted_cubic_hilbert_data() {
        let h = hilbert_data(&twisted_cubic()).unwrap();
        assert_eq!(h.numerator, vec![1, 0, -3, 2]);
        assert_eq!((h.dimension, h.degree), (2, 3));
        assert_eq!(h.hilbert_function(2), 7);
        // 3m + 1
        assert_eq!(h.hilbert_polynomial_at(0), BigRational::one());
        assert_eq!(h.hilbert_polynomial_at(5), BigRational::from_integer(16.into()));
    }

    #[test]
    fn hilbert_function_matches_polynomial_in_high_degree() {
        let h = hilbert_data(&twisted_cubic()).unwrap();
        for m in 0..10 {
            assert_eq!(BigRational::from_integer(h.hilbert_function(m).into()), h.hilbert_polynomial_at(m));
        }
    }

    #[test]
    fn pivot_recursion_against_brute_force_count() {
        // M = (x0^2, x0 x1, x1^3) in 3 variables: count standard monomials
        let n = 3;
        let mk = |e: [u16; 3]| {
            let mut a = [0u16; MAX_VARS];
            a[..3].copy_from_slice(&e);
            Monomial::from_parts(a, e.iter().map(|&x| x as u32).sum())
        };
        let gens = vec![mk([2, 0, 0]), mk([1, 1, 0]), mk([0, 3, 0])];
        let h = HilbertData::from_numerator(monomial_numerator(&gens, n), n);
        for d in 0..8u16 {
            let mut count = 0;
            for a in 0..=d {
                for b in 0..=d - a {
                    let c = [a, b, d - a - b];
                    if !gens.iter().any(|g| (0..3).all(|i| g.exp(i) <= c[i])) {
                        count += 1;
                    }
                }
            }
            assert_eq!(h.hilbert_function(d as i64), count, "degree {d}");
        }
        assert_eq!((h.dimension, h.degree), (1, 4));
    }

    #[test]
    fn unit_ideal_is_empty() {
        let r = Ring::new(PrimeField::default(), 2, MonomialOrder::Grevlex).unwrap();
        let gb = Ideal::new(&r, vec![Polynomial::one(&r)]).unwrap().groebner();
        assert_eq!(hilbert_data(&gb), Err(Error::EmptyScheme));
    }
}
