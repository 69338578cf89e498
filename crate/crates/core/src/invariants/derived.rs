//! Invariants read off a Betti table and Hilbert data: projective
//! dimension, depth, regularity, Green-Lazarsfeld index, ACM property and
//! sectional genus.

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{restrict_linear, GroebnerBasis};
use crate::kernel::field::Field;

use super::betti::BettiTable;
use super::hilbert::{hilbert_data, HilbertData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    /// Projective dimension of `S/I` as an `S`-module.
    pub pd: usize,
    /// `N − pd`.
    pub depth: usize,
    /// Last nonzero row of the Betti table.
    pub reg: usize,
    /// `None` stands for an infinite index (no entries below row 1).
    pub gl_index: Option<usize>,
    /// Dimension of the projective scheme.
    pub dim: i64,
    pub codim: usize,
    pub degree: i64,
    /// Depth equals Krull dimension.
    pub acm: bool,
}

pub fn derived_invariants(t: &BettiTable, h: &HilbertData) -> Result<DerivedInvariants> {
    if !t.is_complete() {
        return Err(Error::IncompleteTable);
    }
    let pd = t.pd();
    let depth = t.nvars() - pd;
    Ok(DerivedInvariants {
        pd,
        depth,
        reg: t.reg(),
        gl_index: t.gl_index(),
        dim: h.projective_dimension(),
        codim: h.codimension(),
        degree: h.degree,
        acm: depth == h.dimension,
    })
}

/// Arithmetic genus `1 − P(0)` of a general curve section, `P` its Hilbert
/// polynomial. The section is cut by `dim − 1` random linear forms drawn
/// from `seed`; a cut is accepted when it is a curve of the original degree,
/// with up to five draws.
pub fn sectional_genus<F: Field>(gb: &GroebnerBasis<F>, seed: u64) -> Result<i64> {
    let h = hilbert_data(gb)?;
    let n = h.projective_dimension();
    if n < 1 {
        return Err(Error::OutOfRange("sectional genus needs a positive-dimensional scheme".into()));
    }
    let cuts = (n - 1) as usize;
    let curve = if cuts == 0 {
        h
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = gb.ring().nvars() - cuts;
        let field = gb.ring().field();
        let mut found = None;
        for _ in 0..5 {
            let forms: Vec<Vec<F::Elem>> = (0..cuts).map(|_| (0..r).map(|_| field.random(&mut rng)).collect()).collect();
            let cut = restrict_linear(&gb.to_ideal(), &forms)?.groebner();
            if cut.is_unit() {
                continue;
            }
            let hc = hilbert_data(&cut)?;
            if hc.dimension == 2 && hc.degree == h.degree {
                found = Some(hc);
                break;
            }
        }
        found.ok_or(Error::Degenerate { what: "curve section".into(), seed })?
    };
    let p0 = curve.hilbert_polynomial_at(0);
    if !p0.is_integer() {
        return Err(Error::Degenerate { what: "non-integral Hilbert polynomial".into(), seed });
    }
    Ok(1 - p0.to_integer().to_i64().expect("small genus"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::invariants::betti_table;
    use crate::kernel::{MonomialOrder, Polynomial, PrimeField, Ring};

    #[test]
    fn twisted_cubic_is_acm_with_infinite_index() {
        let r = Ring::new(PrimeField::default(), 4, MonomialOrder::Grevlex).unwrap();
        let z: Vec<_> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let minor = |a: usize, b: usize| &(&z[a] * &z[b + 1]) - &(&z[b] * &z[a + 1]);
        let gb = Ideal::new(&r, vec![minor(0, 1), minor(0, 2), minor(1, 2)]).unwrap().groebner();
        let t = betti_table(&gb, None, None).unwrap();
        let d = derived_invariants(&t, &hilbert_data(&gb).unwrap()).unwrap();
        assert_eq!((d.pd, d.depth, d.reg, d.gl_index, d.acm), (2, 2, 1, None, true));
        assert_eq!(sectional_genus(&gb, 1).unwrap(), 0);
    }

    #[test]
    fn plane_cubic_has_genus_one() {
        let r = Ring::new(PrimeField::default(), 3, MonomialOrder::Grevlex).unwrap();
        let f = &(&Polynomial::var(&r, 0).pow(3) + &Polynomial::var(&r, 1).pow(3)) + &Polynomial::var(&r, 2).pow(3);
        let gb = Ideal::new(&r, vec![f]).unwrap().groebner();
        assert_eq!(sectional_genus(&gb, 3).unwrap(), 1);
    }

    #[test]
    fn incomplete_table_rejected() {
        let t = BettiTable::from_entries(3, [((0, 0), 1)], 1, false);
        let h = HilbertData::from_numerator(vec![1], 3);
        assert_eq!(derived_invariants(&t, &h), Err(Error::IncompleteTable));
    }
}
