//! Homogeneous ideals, reduced Groebner bases (Buchberger with the normal
//! selection strategy and Gebauer-Moeller pair pruning) and normal forms.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::kernel::field::Field;
use crate::kernel::monomial::Monomial;
use crate::kernel::poly::{same_ring, Polynomial, Term};
use crate::kernel::ring::RingRef;

/// An ideal given by homogeneous generators.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    /// Checks that generators live in `ring` and are homogeneous; zero
    /// generators are dropped.
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch(format!("generator {i} belongs to another ring")));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("generator {i}: {g}")));
            }
        }
        Ok(Self::new_unchecked(ring, gens))
    }

    pub(crate) fn new_unchecked(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &RingRef<F>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn groebner(&self) -> GroebnerBasis<F> {
        buchberger(self)
    }

    /// Same generators, moved into an equal ring (for instance one carrying
    /// different variable names).
    pub fn in_ring(&self, ring: &RingRef<F>) -> Result<Self> {
        if **ring != *self.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, ring)));
        }
        let gens = self.gens.iter().map(|g| g.reorder(ring)).collect();
        Ok(Ideal { ring: ring.clone(), gens })
    }

    /// Largest generator degree.
    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }
}

/// A reduced Groebner basis: monic elements sorted by ascending leading
/// monomial, no leading monomial divides another and tails are reduced.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.elements == other.elements
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().unwrap()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new_unchecked(&self.ring, self.elements.clone())
    }

    /// Remainder of `f` on division by the basis: no term is divisible by a
    /// leading monomial.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("normal form across rings".into()));
        }
        let lts = self.leading_monomials();
        Ok(reduce_full(f.clone(), &self.elements, &lts))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every generator of `other` lies in this ideal, i.e.
    /// `other` is a subset of this ideal.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        if !same_ring(other.ring(), &self.ring) {
            return Err(Error::RingMismatch("containment across rings".into()));
        }
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether a monomial is standard (not divisible by any leading term).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }
}

/// `I ⊆ J`, decided by reducing the generators of `I` modulo a basis of `J`.
pub fn ideal_subset<F: Field>(i: &Ideal<F>, j: &GroebnerBasis<F>) -> Result<bool> {
    j.contains_ideal(i)
}

/// Whether two ideals coincide.
pub fn ideal_equal<F: Field>(a: &GroebnerBasis<F>, b: &GroebnerBasis<F>) -> Result<bool> {
    Ok(a.contains_ideal(&b.to_ideal())? && b.contains_ideal(&a.to_ideal())?)
}

fn find_reducer(m: &Monomial, lts: &[Monomial], active: Option<&[bool]>) -> Option<usize> {
    lts.iter()
        .enumerate()
        .find(|(i, lt)| active.is_none_or(|a| a[*i]) && lt.divides(m))
        .map(|(i, _)| i)
}

/// Full reduction against monic `basis` with leading monomials `lts`.
pub(crate) fn reduce_full<F: Field>(f: Polynomial<F>, basis: &[Polynomial<F>], lts: &[Monomial]) -> Polynomial<F> {
    reduce_with(f, basis, lts, None)
}

fn reduce_with<F: Field>(
    f: Polynomial<F>,
    basis: &[Polynomial<F>],
    lts: &[Monomial],
    active: Option<&[bool]>,
) -> Polynomial<F> {
    let ring = f.ring().clone();
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut p = f;
    while let Some((m, c)) = p.terms().first().cloned() {
        match find_reducer(&m, lts, active) {
            Some(i) => {
                let q = m.div(&lts[i]).unwrap();
                p = p.sub_mul_term(&c, &q, &basis[i]);
            }
            None => {
                rem.push((m, c));
                let rest = p.into_terms().split_off(1);
                p = Polynomial::from_sorted(&ring, rest);
            }
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<F: Field> {
    ring: RingRef<F>,
    basis: Vec<Polynomial<F>>,
    lts: Vec<Monomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> Engine<F> {
    fn add(&mut self, h: Polynomial<F>, sugar: u32) {
        let h = h.make_monic();
        let lt_h = *h.leading_monomial().unwrap();
        let t = self.basis.len();
        let ring = self.ring.clone();

        // Gebauer-Moeller: candidate pairs (g, h) with g active
        let cands: Vec<usize> = (0..t).filter(|&g| self.active[g]).collect();
        let lcms: Vec<Monomial> = cands.iter().map(|&g| ring.lcm(&self.lts[g], &lt_h)).collect();
        let mut kept: Vec<usize> = Vec::new(); // positions into cands
        for a in 0..cands.len() {
            let g1 = cands[a];
            if self.lts[g1].is_coprime(&lt_h) {
                kept.push(a);
                continue;
            }
            let l1 = &lcms[a];
            let dominated = (a + 1..cands.len()).any(|b| lcms[b].divides(l1)) || kept.iter().any(|&b| lcms[b].divides(l1));
            if !dominated {
                kept.push(a);
            }
        }
        // drop old pairs made redundant by h
        let lts = &self.lts;
        self.pairs.retain(|p| {
            !(lt_h.divides(&p.lcm)
                && ring.lcm(&lts[p.i], &lt_h) != p.lcm
                && ring.lcm(&lts[p.j], &lt_h) != p.lcm)
        });
        for a in kept {
            let g = cands[a];
            if self.lts[g].is_coprime(&lt_h) {
                continue;
            }
            let l = lcms[a];
            let s1 = self.sugar[g] + l.degree() - self.lts[g].degree();
            let s2 = sugar + l.degree() - lt_h.degree();
            self.pairs.push(Pair { i: g, j: t, lcm: l, sugar: s1.max(s2) });
        }
        for g in 0..t {
            if self.active[g] && lt_h.divides(&self.lts[g]) {
                self.active[g] = false;
            }
        }
        self.basis.push(h);
        self.lts.push(lt_h);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = &self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Polynomial<F> {
        let f = self.ring.field();
        let ui = p.lcm.div(&self.lts[p.i]).unwrap();
        let uj = p.lcm.div(&self.lts[p.j]).unwrap();
        self.basis[p.i].mul_term(&ui, &f.one()).sub_mul_term(&f.one(), &uj, &self.basis[p.j])
    }

    fn reduce(&self, f: Polynomial<F>) -> Polynomial<F> {
        reduce_with(f, &self.basis, &self.lts, Some(&self.active))
    }
}

/// Reduced Groebner basis of the ideal under its ring's monomial order.
///
/// Generators enter in order of degree (stable in their input order), and
/// S-pairs are processed by ascending sugar degree with ties broken by the
/// lcm and then by basis index, so the output is deterministic.
pub fn buchberger<F: Field>(ideal: &Ideal<F>) -> GroebnerBasis<F> {
    let ring = ideal.ring().clone();
    let mut pending: Vec<(u32, usize, Polynomial<F>)> = ideal
        .generators()
        .iter()
        .enumerate()
        .map(|(k, g)| (g.degree().unwrap(), k, g.clone()))
        .collect();
    pending.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));

    let mut eng = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        lts: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    loop {
        let pair_sugar = eng.pairs.iter().map(|p| p.sugar).min();
        let take_gen = match (pending.last(), pair_sugar) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(g), Some(s)) => g.0 <= s,
        };
        let (candidate, sugar) = if take_gen {
            let (d, _, g) = pending.pop().unwrap();
            (g, d)
        } else {
            let p = eng.next_pair().unwrap();
            (eng.spoly(&p), p.sugar)
        };
        let h = eng.reduce(candidate);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::one(&ring)] };
        }
        eng.add(h, sugar);
    }
    interreduce(&ring, eng.basis.into_iter().zip(eng.active).filter(|(_, a)| *a).map(|(g, _)| g).collect())
}

fn interreduce<F: Field>(ring: &RingRef<F>, mut elems: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    elems.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let lts: Vec<Monomial> = elems.iter().map(|g| *g.leading_monomial().unwrap()).collect();
    let mut out = Vec::with_capacity(elems.len());
    for k in 0..elems.len() {
        let g = &elems[k];
        let head = Polynomial::from_sorted(ring, vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, g.terms()[1..].to_vec());
        let mut active = vec![true; elems.len()];
        active[k] = false;
        let tail = reduce_with(tail, &elems, &lts, Some(&active));
        out.push(&head + &tail);
    }
    debug_assert!(out.windows(2).all(|w| ring
        .cmp(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
        == Ordering::Less));
    GroebnerBasis { ring: ring.clone(), elements: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::PrimeField;
    use crate::kernel::monomial::MonomialOrder;
    use crate::kernel::ring::Ring;

    type P = Polynomial<PrimeField>;

    fn ring(n: usize) -> RingRef<PrimeField> {
        Ring::new(PrimeField::default(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn v(r: &RingRef<PrimeField>, i: usize) -> P {
        Polynomial::var(r, i)
    }

    fn twisted_cubic(r: &RingRef<PrimeField>) -> Ideal<PrimeField> {
        let z: Vec<P> = (0..4).map(|i| v(r, i)).collect();
        let minor = |a: usize, b: usize| &(&z[a] * &z[b + 1]) - &(&z[b] * &z[a + 1]);
        Ideal::new(r, vec![minor(0, 1), minor(0, 2), minor(1, 2)]).unwrap()
    }

    #[test]
    fn single_conic_is_a_basis() {
        let r = ring(3);
        let g = &(&v(&r, 0) * &v(&r, 2)) - &v(&r, 1).pow(2);
        let gb = Ideal::new(&r, vec![g.clone()]).unwrap().groebner();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0], (-&g).make_monic());
    }

    #[test]
    fn twisted_cubic_minors_form_a_basis() {
        let r = ring(4);
        let gb = twisted_cubic(&r).groebner();
        assert_eq!(gb.elements().len(), 3);
        assert!(gb.elements().iter().all(|g| g.degree() == Some(2)));
        let x1sq = v(&r, 1).pow(2);
        let nf = gb.normal_form(&x1sq).unwrap();
        // x1^2 - x0*x2 is a minor, so the remainder is x0*x2 in one step
        assert_eq!(nf, &v(&r, 0) * &v(&r, 2));
    }

    #[test]
    fn linear_generators_reduce() {
        let r = ring(2);
        let gb = Ideal::new(&r, vec![v(&r, 0), &v(&r, 0) + &v(&r, 1)]).unwrap().groebner();
        let mut expected = [v(&r, 1), v(&r, 0)];
        expected.sort_by(|a, b| r.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        assert_eq!(gb.elements(), &expected[..]);
    }

    #[test]
    fn normal_form_of_members_and_one() {
        let r = ring(4);
        let i = twisted_cubic(&r);
        let gb = i.groebner();
        for g in i.generators() {
            assert!(gb.normal_form(g).unwrap().is_zero());
        }
        assert_eq!(gb.normal_form(&Polynomial::one(&r)).unwrap(), Polynomial::one(&r));
    }

    #[test]
    fn containment_direction() {
        let r = ring(2);
        let x0 = Ideal::new(&r, vec![v(&r, 0)]).unwrap();
        let x1 = Ideal::new(&r, vec![v(&r, 1)]).unwrap();
        assert!(!ideal_subset(&x0, &x1.groebner()).unwrap());
        assert!(ideal_subset(&x0, &x0.groebner()).unwrap());
    }

    #[test]
    fn non_homogeneous_generator_rejected() {
        let r = ring(2);
        let bad = &v(&r, 0) + &Polynomial::one(&r);
        assert!(matches!(Ideal::new(&r, vec![bad]), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn idempotent_on_own_output() {
        let r = ring(4);
        let gb = twisted_cubic(&r).groebner();
        assert_eq!(gb.to_ideal().groebner(), gb);
    }
}
