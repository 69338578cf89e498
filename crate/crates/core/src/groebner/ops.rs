//! Elimination, intersection, quotients, saturation and implicitization.

use crate::error::{Error, Result};
use crate::kernel::field::Field;
use crate::kernel::monomial::MonomialOrder;
use crate::kernel::poly::{same_ring, Polynomial};
use crate::kernel::ring::{Ring, RingRef};

use super::basis::{GroebnerBasis, Ideal};

/// `I ∩ k[x_k, ..., x_{N-1}]`, computed under a fresh block order. The
/// result lives in a ring on the remaining variables (weights and names
/// carried over, weighted grevlex order).
pub fn eliminate<F: Field>(ideal: &Ideal<F>, k: usize) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("cannot eliminate {k} of {n} variables")));
    }
    let elim_ring = ring.with_order(MonomialOrder::BlockElimination(k))?;
    let moved: Vec<_> = ideal.generators().iter().map(|g| g.reorder(&elim_ring)).collect();
    let gb = Ideal::new_unchecked(&elim_ring, moved).groebner();

    let rest = Ring::with_weights(ring.field().clone(), ring.weights()[k..].to_vec(), MonomialOrder::Grevlex)?
        .renamed(ring.names()[k..].to_vec())?;
    let block_mask: u32 = (1u32 << k) - 1;
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    let gens = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.support() & block_mask == 0))
        .map(|g| g.rename_vars(&rest, &map))
        .collect();
    Ok(Ideal::new_unchecked(&rest, gens))
}

/// `I ∩ J` via `t·I + (h − t)·J` in `k[t, x, h]`: eliminating `t` and
/// setting `h = 1` leaves the intersection, and the ideal stays homogeneous
/// throughout.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    if !same_ring(ring, j.ring()) {
        return Err(Error::RingMismatch("intersection across rings".into()));
    }
    if i.generators().is_empty() || j.generators().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.nvars();
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    weights.push(1);
    let big = Ring::with_weights(ring.field().clone(), weights, MonomialOrder::BlockElimination(1))?;
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let h = Polynomial::var(&big, n + 1);
    let h_minus_t = &h - &t;
    let mut gens: Vec<Polynomial<F>> = i.generators().iter().map(|g| &t * &g.rename_vars(&big, &shift)).collect();
    gens.extend(j.generators().iter().map(|g| &h_minus_t * &g.rename_vars(&big, &shift)));
    let gb = Ideal::new_unchecked(&big, gens).groebner();

    let out = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (ring.monomial(&m.exps(n + 1)[1..]), c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ok(Ideal::new_unchecked(ring, out))
}

/// Exact quotient `g / f`, or `None` if `f` does not divide `g`.
pub(crate) fn divide_exact<F: Field>(g: &Polynomial<F>, f: &Polynomial<F>) -> Option<Polynomial<F>> {
    let field = g.ring().field();
    let lt = *f.leading_monomial()?;
    let lc_inv = field.inv(f.leading_coeff()?).ok()?;
    let mut rem = g.clone();
    let mut q = Vec::new();
    while let Some((m, c)) = rem.terms().first().cloned() {
        let u = m.div(&lt)?;
        let coef = field.mul(&c, &lc_inv);
        rem = rem.sub_mul_term(&coef, &u, f);
        q.push((u, coef));
    }
    Some(Polynomial::from_terms(g.ring(), q))
}

/// `I : f = (I ∩ (f)) / f`.
pub fn quotient<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    if f.is_zero() {
        return Ok(Ideal::new_unchecked(ring, vec![Polynomial::one(ring)]));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("{f}")));
    }
    let both = intersect(i, &Ideal::new_unchecked(ring, vec![f.clone()]))?;
    let gens = both
        .generators()
        .iter()
        .map(|g| divide_exact(g, f).expect("generators of I ∩ (f) are multiples of f"))
        .collect();
    Ok(Ideal::new_unchecked(ring, gens))
}

/// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
pub fn quotient_ideal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let q = quotient(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::new_unchecked(ring, vec![Polynomial::one(ring)])))
}

/// `I : J^∞` by iterating `I ← I : J` until the ideal stops growing. The
/// result is generated by its reduced Groebner basis.
pub fn saturate<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch("saturation across rings".into()));
    }
    let mut gb = i.groebner();
    loop {
        if gb.is_unit() {
            return Ok(gb.to_ideal());
        }
        let next = quotient_ideal(&gb.to_ideal(), j)?;
        if gb.contains_ideal(&next)? {
            return Ok(gb.to_ideal());
        }
        gb = next.groebner();
    }
}

/// Saturation by the ideal of all variables.
pub fn saturate_irrelevant<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    saturate(i, &Ideal::irrelevant(i.ring()))
}

/// A rational map given by forms on a product of weighted projective
/// spaces, optionally restricted to the zero locus of `constraints`.
///
/// Auxiliary variable `i` has multidegree `multidegrees[i]` (one entry per
/// grading block). All components must share one multidegree; constraints
/// must each be multihomogeneous.
#[derive(Clone, Debug)]
pub struct Parameterization<F: Field> {
    pub aux: RingRef<F>,
    pub multidegrees: Vec<Vec<u32>>,
    pub components: Vec<Polynomial<F>>,
    pub constraints: Vec<Polynomial<F>>,
}

impl<F: Field> Parameterization<F> {
    /// Multidegree of a multihomogeneous polynomial, or an error naming it.
    fn multidegree_of(&self, p: &Polynomial<F>) -> Result<Vec<u32>> {
        let blocks = self.multidegrees[0].len();
        let mut found: Option<Vec<u32>> = None;
        for (m, _) in p.terms() {
            let mut d = vec![0u32; blocks];
            for (i, md) in self.multidegrees.iter().enumerate() {
                for (b, &w) in md.iter().enumerate() {
                    d[b] += w * m.exp(i) as u32;
                }
            }
            match &found {
                None => found = Some(d),
                Some(prev) if *prev != d => {
                    return Err(Error::InvalidArgument(format!("{p} is not multihomogeneous")));
                }
                _ => {}
            }
        }
        found.ok_or_else(|| Error::InvalidArgument("zero component in parameterization".into()))
    }

    fn validate(&self) -> Result<Vec<u32>> {
        let k = self.aux.nvars();
        if self.multidegrees.len() != k || self.multidegrees.iter().any(|m| m.len() != self.multidegrees[0].len()) {
            return Err(Error::InvalidArgument("one multidegree of common length per auxiliary variable".into()));
        }
        if self.multidegrees.iter().any(|m| m.iter().sum::<u32>() == 0) {
            return Err(Error::InvalidArgument("auxiliary variables need positive total degree".into()));
        }
        if self.components.is_empty() {
            return Err(Error::InvalidArgument("empty parameterization".into()));
        }
        let totals: Vec<u32> = self.multidegrees.iter().map(|m| m.iter().sum()).collect();
        if self.aux.weights() != &totals[..] {
            return Err(Error::InvalidArgument("auxiliary ring weights must equal total multidegrees".into()));
        }
        let first = self.multidegree_of(&self.components[0])?;
        for c in &self.components[1..] {
            if self.multidegree_of(c)? != first {
                return Err(Error::InvalidArgument(format!("component {c} has inconsistent multidegree")));
            }
        }
        for c in &self.constraints {
            self.multidegree_of(c)?;
        }
        Ok(first)
    }
}

/// Ideal of the closure of the image of `param` in the projective space of
/// `target`, which must have one variable per component.
///
/// Builds the graph ideal `z_i − p_i` (plus constraints) in a ring whose
/// target variables are weighted by the component degree, eliminates the
/// auxiliary block and, when constraints are present, saturates by the
/// irrelevant ideal of `target`. Without constraints the elimination ideal
/// is the kernel of a map into a domain and is already prime.
pub fn implicitize<F: Field>(param: &Parameterization<F>, target: &RingRef<F>) -> Result<Ideal<F>> {
    let md = param.validate()?;
    let k = param.aux.nvars();
    let m = param.components.len();
    if target.nvars() != m {
        return Err(Error::InvalidArgument(format!(
            "target has {} variables for {m} components",
            target.nvars()
        )));
    }
    if k + m > crate::kernel::MAX_VARS {
        return Err(Error::TooManyVariables { got: k + m, max: crate::kernel::MAX_VARS });
    }
    let deg: u32 = md.iter().sum();
    let mut weights = param.aux.weights().to_vec();
    weights.extend(std::iter::repeat_n(deg, m));
    let big = Ring::with_weights(target.field().clone(), weights, MonomialOrder::BlockElimination(k))?;
    let aux_map: Vec<usize> = (0..k).collect();
    let mut gens: Vec<Polynomial<F>> = param
        .components
        .iter()
        .enumerate()
        .map(|(i, p)| &Polynomial::var(&big, k + i) - &p.rename_vars(&big, &aux_map))
        .collect();
    gens.extend(param.constraints.iter().map(|c| c.rename_vars(&big, &aux_map)));
    let elim = eliminate(&Ideal::new_unchecked(&big, gens), k)?;
    let ident: Vec<usize> = (0..m).collect();
    let gens = elim.generators().iter().map(|g| g.rename_vars(target, &ident)).collect();
    let ideal = Ideal::new(target, gens)?;
    if param.constraints.is_empty() {
        Ok(ideal)
    } else {
        saturate_irrelevant(&ideal)
    }
}

/// Restricts to the linear subspace `x_{r+j} = Σ_{i<r} forms[j][i]·x_i`
/// (`r = N − forms.len()`): the image of `I` in the coordinate ring of the
/// first `r` variables, i.e. `I` plus the linear forms `x_{r+j} − Σ ...`.
pub fn restrict_linear<F: Field>(ideal: &Ideal<F>, forms: &[Vec<F::Elem>]) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let k = forms.len();
    if !ring.is_standard_graded() {
        return Err(Error::Unsupported("linear sections of weighted rings".into()));
    }
    if k >= n {
        return Err(Error::OutOfRange(format!("cannot cut {n} variables by {k} linear forms")));
    }
    let r = n - k;
    if forms.iter().any(|f| f.len() != r) {
        return Err(Error::InvalidArgument(format!("each linear form needs {r} coefficients")));
    }
    let small = Ring::new(ring.field().clone(), r, MonomialOrder::Grevlex)?.renamed(ring.names()[..r].to_vec())?;
    let mut images: Vec<Polynomial<F>> = (0..r).map(|i| Polynomial::var(&small, i)).collect();
    for f in forms {
        let terms = f
            .iter()
            .enumerate()
            .map(|(i, c)| (small.var_monomial(i), c.clone()))
            .collect();
        images.push(Polynomial::from_terms(&small, terms));
    }
    let gens = ideal.generators().iter().map(|g| g.substitute(&small, &images)).collect();
    Ok(Ideal::new_unchecked(&small, gens))
}

/// Whether two ideals of one ring are equal.
pub fn same_ideal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    let (ga, gb): (GroebnerBasis<F>, GroebnerBasis<F>) = (a.groebner(), b.groebner());
    Ok(ga.contains_ideal(b)? && gb.contains_ideal(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::PrimeField;

    type P = Polynomial<PrimeField>;

    fn ring(n: usize) -> RingRef<PrimeField> {
        Ring::new(PrimeField::default(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn v(r: &RingRef<PrimeField>, i: usize) -> P {
        Polynomial::var(r, i)
    }

    fn id(r: &RingRef<PrimeField>, g: Vec<P>) -> Ideal<PrimeField> {
        Ideal::new(r, g).unwrap()
    }

    fn twisted_cubic(r: &RingRef<PrimeField>) -> Ideal<PrimeField> {
        let z: Vec<P> = (0..4).map(|i| v(r, i)).collect();
        let minor = |a: usize, b: usize| &(&z[a] * &z[b + 1]) - &(&z[b] * &z[a + 1]);
        id(r, vec![minor(0, 1), minor(0, 2), minor(1, 2)])
    }

    fn binary_forms(d: u32) -> Parameterization<PrimeField> {
        let aux = Ring::new(PrimeField::default(), 2, MonomialOrder::Grevlex).unwrap();
        let comps = (0..=d)
            .map(|i| Polynomial::monomial_term(&aux, aux.monomial(&[(d - i) as u16, i as u16]), 1))
            .collect();
        Parameterization { aux, multidegrees: vec![vec![1], vec![1]], components: comps, constraints: vec![] }
    }

    #[test]
    fn intersection_of_coordinate_hyperplanes() {
        let r = ring(2);
        let i = intersect(&id(&r, vec![v(&r, 0)]), &id(&r, vec![v(&r, 1)])).unwrap();
        assert_eq!(i.generators(), &[&v(&r, 0) * &v(&r, 1)]);
    }

    #[test]
    fn self_intersection() {
        let r = ring(4);
        let tc = twisted_cubic(&r);
        assert!(same_ideal(&intersect(&tc, &tc).unwrap(), &tc).unwrap());
    }

    #[test]
    fn quotient_by_variable() {
        let r = ring(2);
        let q = quotient(&id(&r, vec![&v(&r, 0) * &v(&r, 1)]), &v(&r, 0)).unwrap();
        assert!(same_ideal(&q, &id(&r, vec![v(&r, 1)])).unwrap());
    }

    #[test]
    fn saturation_strips_variable_power() {
        let r = ring(2);
        let i = id(&r, vec![&v(&r, 0).pow(2) * &v(&r, 1)]);
        let s = saturate(&i, &id(&r, vec![v(&r, 0)])).unwrap();
        assert!(same_ideal(&s, &id(&r, vec![v(&r, 1)])).unwrap());
    }

    #[test]
    fn saturated_prime_unchanged() {
        let r = ring(4);
        let tc = twisted_cubic(&r);
        assert!(same_ideal(&saturate_irrelevant(&tc).unwrap(), &tc).unwrap());
    }

    #[test]
    fn eliminating_a_linear_relation() {
        let r = ring(2);
        let e = eliminate(&id(&r, vec![&v(&r, 0) - &v(&r, 1)]), 1).unwrap();
        assert!(e.generators().is_empty());
    }

    #[test]
    fn conic_from_veronese() {
        let r = ring(3);
        let i = implicitize(&binary_forms(2), &r).unwrap();
        let conic = &(&v(&r, 0) * &v(&r, 2)) - &v(&r, 1).pow(2);
        assert!(same_ideal(&i, &id(&r, vec![conic])).unwrap());
    }

    #[test]
    fn twisted_cubic_from_parameterization() {
        let r = ring(4);
        let i = implicitize(&binary_forms(3), &r).unwrap();
        assert!(same_ideal(&i, &twisted_cubic(&r)).unwrap());
        // eliminated generators lie in the original ideal after re-embedding
        let gb = twisted_cubic(&r).groebner();
        assert!(gb.contains_ideal(&i).unwrap());
    }

    #[test]
    fn inconsistent_multidegree_rejected() {
        let mut p = binary_forms(2);
        p.components[1] = Polynomial::var(&p.aux, 0);
        assert!(matches!(implicitize(&p, &ring(3)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn exact_division() {
        let r = ring(2);
        let f = &v(&r, 0) + &v(&r, 1);
        let g = &f * &(&v(&r, 0) - &v(&r, 1));
        assert_eq!(divide_exact(&g, &f).unwrap(), &v(&r, 0) - &v(&r, 1));
        assert!(divide_exact(&v(&r, 0), &f).is_none());
    }
}
