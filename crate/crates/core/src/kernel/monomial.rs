//! Fixed-width exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard limit on the number of ring variables.
pub const MAX_VARS: usize = 32;

/// Exponent vector with a cached (weighted) degree and a support bitmask.
///
/// The cached degree is only meaningful relative to the weights of the ring
/// that built the monomial; arithmetic between monomials of one ring keeps it
/// consistent because weighted degree is additive.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    mask: u32,
}

impl Monomial {
    pub(crate) fn from_parts(exps: [u16; MAX_VARS], deg: u32) -> Self {
        let mut mask = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        Monomial { exps, deg, mask }
    }

    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
            mask: 0,
        }
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    /// Weighted degree in the owning ring.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Plain sum of exponents.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn support(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    /// `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= *o;
        }
        Some(Monomial::from_parts(exps, self.deg - other.deg))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Monomial orders. Block elimination orders compare the first `k` variables
/// by weighted degree and then reverse-lexicographically, and only then the
/// remaining block in the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    BlockElimination(usize),
}


#[inline]
fn revlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        let (x, y) = (a.exps[i], b.exps[i]);
        if x != y {
            // a smaller exponent on the last differing variable is larger
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares two monomials of a ring with `nvars` variables and the given
    /// weights.
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial, nvars: usize, weights: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| revlex(a, b, 0, nvars)),
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::BlockElimination(k) => {
                let block = |m: &Monomial| -> u32 {
                    (0..k).map(|i| weights[i] * m.exps[i] as u32).sum()
                };
                block(a)
                    .cmp(&block(b))
                    .then_with(|| revlex(a, b, 0, k))
                    .then_with(|| a.deg.cmp(&b.deg))
                    .then_with(|| revlex(a, b, k, nvars))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        let mut exps = [0; MAX_VARS];
        exps[..e.len()].copy_from_slice(e);
        let deg = e.iter().map(|&x| x as u32).sum();
        Monomial::from_parts(exps, deg)
    }

    #[test]
    fn grevlex_by_hand() {
        // x0*x2 = (1,0,1) vs x1^2 = (0,2,0): equal degree, last exponent of
        // x1^2 is smaller, so x1^2 is the larger monomial.
        let w = [1; 3];
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.compare(&mono(&[0, 2, 0]), &mono(&[1, 0, 1]), 3, &w), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 0, 1]), &mono(&[1, 0, 1]), 3, &w), Ordering::Equal);
    }

    #[test]
    fn lex_ignores_degree() {
        let w = [1; 2];
        assert_eq!(
            MonomialOrder::Lex.compare(&mono(&[1, 0]), &mono(&[0, 5]), 2, &w),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let w = [1; 3];
        let o = MonomialOrder::BlockElimination(1);
        // anything containing x0 beats a pure x1,x2 monomial of higher degree
        assert_eq!(o.compare(&mono(&[1, 0, 0]), &mono(&[0, 4, 3]), 3, &w), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[0, 1, 1]), &mono(&[0, 0, 2]), 3, &w), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_division() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[2, 3, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        let q = b.div(&a).unwrap();
        assert_eq!(q.exps(3), &[1, 1, 1]);
        assert_eq!(q.degree(), 3);
        assert_eq!(q.mul(&a), b);
    }
}
