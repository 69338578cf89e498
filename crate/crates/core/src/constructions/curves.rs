//! Parameterized constructions: projected scrolls of almost minimal degree,
//! curves in prescribed classes on surface scrolls, elliptic normal curves
//! and complete intersections of quadrics.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{implicitize, Ideal, Parameterization};
use crate::invariants::hilbert_data;
use crate::kernel::field::Field;
use crate::kernel::monomial::MonomialOrder;
use crate::kernel::poly::Polynomial;
use crate::kernel::ring::{Ring, RingRef};

use super::scrolls::standard_ring;
use super::Construction;

/// Auxiliary ring with named variables of the given multidegrees.
fn aux_ring<F: Field>(field: &F, names: &[&str], multidegrees: &[Vec<u32>]) -> Result<RingRef<F>> {
    let weights = multidegrees.iter().map(|m| m.iter().sum()).collect();
    Ring::with_weights(field.clone(), weights, MonomialOrder::Grevlex)?.renamed(names.iter().map(|s| s.to_string()).collect())
}

/// `Σ c · x^e` over the given (coefficient, exponent) pairs.
fn poly<F: Field>(ring: &RingRef<F>, terms: &[(i64, Vec<u16>)]) -> Polynomial<F> {
    let f = ring.field();
    Polynomial::from_terms(ring, terms.iter().map(|(c, e)| (ring.monomial(e), f.from_i64(*c))).collect())
}

fn mono<F: Field>(ring: &RingRef<F>, e: Vec<u16>) -> Polynomial<F> {
    poly(ring, &[(1, e)])
}

fn build<F: Field>(name: String, param: Parameterization<F>) -> Result<Construction<F>> {
    let field = param.aux.field().clone();
    let target = standard_ring(&field, param.components.len())?;
    let ideal = implicitize(&param, &target)?;
    Ok(Construction::new(name, ideal).with_param(param))
}

fn check_e(e: u32, min: u32) -> Result<()> {
    if e < min {
        return Err(Error::OutOfRange(format!("codimension {e} is below {min}")));
    }
    Ok(())
}

/// The monomial curve `[s^{e+2} : s^{e+1}t : s^{e-1}t^3 : ... : t^{e+2}]`
/// in `P^{e+1}`: an isomorphic projection of the rational normal curve of
/// degree `e+2`, lying on `S(1, e−1)`.
pub fn projected_monomial_curve<F: Field>(field: &F, e: u32) -> Result<Construction<F>> {
    check_e(e, 3)?;
    let md = vec![vec![1], vec![1]];
    let aux = aux_ring(field, &["s", "t"], &md)?;
    let d = e + 2;
    let comps = (0..=d)
        .filter(|&j| j != 2)
        .map(|j| mono(&aux, vec![(d - j) as u16, j as u16]))
        .collect();
    build(
        format!("almost-minimal-curve(e={e})"),
        Parameterization { aux, multidegrees: md, components: comps, constraints: vec![] },
    )
}

/// The surface `[sx : tx : s^{e+1}y : s^{e-1}t^2 y : ... : t^{e+1}y]` in
/// `P^{e+2}`, lying on `S(0, 1, e−1)`.
pub fn projected_scroll_surface<F: Field>(field: &F, e: u32) -> Result<Construction<F>> {
    check_e(e, 3)?;
    let md = vec![vec![1, 0], vec![1, 0], vec![e, 1], vec![0, 1]];
    let aux = aux_ring(field, &["s", "t", "x", "y"], &md)?;
    let mut comps = vec![mono(&aux, vec![1, 0, 1, 0]), mono(&aux, vec![0, 1, 1, 0])];
    let d = (e + 1) as u16;
    comps.extend((0..=d).filter(|&j| j != 1).map(|j| mono(&aux, vec![d - j, j, 0, 1])));
    build(
        format!("almost-minimal-surface(e={e})"),
        Parameterization { aux, multidegrees: md, components: comps, constraints: vec![] },
    )
}

/// The threefold `[sx : tx : s^2 y : t^2 y : s^{e-1}z : ... : t^{e-1}z]` in
/// `P^{e+3}`, lying on `S(0, 0, 1, e−1)`.
pub fn projected_scroll_threefold<F: Field>(field: &F, e: u32) -> Result<Construction<F>> {
    check_e(e, 3)?;
    let md = vec![vec![1, 0], vec![1, 0], vec![e - 2, 1], vec![e - 3, 1], vec![0, 1]];
    let aux = aux_ring(field, &["s", "t", "x", "y", "z"], &md)?;
    let mut comps = vec![
        mono(&aux, vec![1, 0, 1, 0, 0]),
        mono(&aux, vec![0, 1, 1, 0, 0]),
        mono(&aux, vec![2, 0, 0, 1, 0]),
        mono(&aux, vec![0, 2, 0, 1, 0]),
    ];
    let d = (e - 1) as u16;
    comps.extend((0..=d).map(|j| mono(&aux, vec![d - j, j, 0, 0, 1])));
    build(
        format!("almost-minimal-threefold(e={e})"),
        Parameterization { aux, multidegrees: md, components: comps, constraints: vec![] },
    )
}

/// The fourfold `[sx : tx : sy − tz : ty : sz : s^{e-1}w : ... : t^{e-1}w]`
/// in `P^{e+4}`, lying on `S(0, 0, 0, 1, e−1)`.
pub fn projected_scroll_fourfold<F: Field>(field: &F, e: u32) -> Result<Construction<F>> {
    check_e(e, 3)?;
    let md = vec![vec![1, 0], vec![1, 0], vec![e - 2, 1], vec![e - 2, 1], vec![e - 2, 1], vec![0, 1]];
    let aux = aux_ring(field, &["s", "t", "x", "y", "z", "w"], &md)?;
    let mut comps = vec![
        mono(&aux, vec![1, 0, 1, 0, 0, 0]),
        mono(&aux, vec![0, 1, 1, 0, 0, 0]),
        poly(&aux, &[(1, vec![1, 0, 0, 1, 0, 0]), (-1, vec![0, 1, 0, 0, 1, 0])]),
        mono(&aux, vec![0, 1, 0, 1, 0, 0]),
        mono(&aux, vec![1, 0, 0, 0, 1, 0]),
    ];
    let d = (e - 1) as u16;
    comps.extend((0..=d).map(|j| mono(&aux, vec![d - j, j, 0, 0, 0, 1])));
    build(
        format!("almost-minimal-fourfold(e={e})"),
        Parameterization { aux, multidegrees: md, components: comps, constraints: vec![] },
    )
}

/// Image of the Fermat cubic `x^3 + y^3 + z^3 = 0` under the complete
/// linear system of degree-`m` forms, `3m = e + 2`: an elliptic normal
/// curve of degree `e + 2` in `P^{e+1}`. The degree-`m` monomials not
/// divisible by `z^3` form a basis of that linear system.
pub fn elliptic_normal_curve<F: Field>(field: &F, e: u32) -> Result<Construction<F>> {
    if e < 4 || e % 3 != 1 {
        return Err(Error::Unsupported(format!(
            "elliptic normal curves are built for codimension 1 mod 3 and at least 4, not {e}"
        )));
    }
    let m = e.div_ceil(3);
    let md = vec![vec![1]; 3];
    let aux = aux_ring(field, &["x", "y", "z"], &md)?;
    let comps = aux
        .monomials_of_degree(m)
        .into_iter()
        .rev()
        .filter(|mm| mm.exp(2) < 3)
        .map(|mm| Polynomial::monomial_term(&aux, mm, field.one()))
        .collect();
    let cubic = poly(&aux, &[(1, vec![3, 0, 0]), (1, vec![0, 3, 0]), (1, vec![0, 0, 3])]);
    build(
        format!("elliptic(e={e})"),
        Parameterization { aux, multidegrees: md, components: comps, constraints: vec![cubic] },
    )
}

/// A curve in the class `αH + kF` on the smooth surface scroll `S(a, b)`:
/// the scroll parameterization restricted to `G = Σ_j A_j(s,t) u^{α−j} v^j`
/// with random binary forms `A_j` of degree `(α−j)a + jb + k` (forms of
/// negative degree are zero). The result must have degree `α(a+b) + k`;
/// up to five draws are tried.
pub fn curve_on_scroll<F: Field>(field: &F, a: u32, b: u32, alpha: u32, k: i64, seed: u64) -> Result<Construction<F>> {
    if a < 1 || a > b {
        return Err(Error::OutOfRange(format!("need 1 ≤ a ≤ b, got a={a}, b={b}")));
    }
    if alpha == 0 {
        return Err(Error::OutOfRange("alpha must be positive".into()));
    }
    let degrees: Vec<i64> = (0..=alpha as i64)
        .map(|j| (alpha as i64 - j) * a as i64 + j * b as i64 + k)
        .collect();
    if degrees.iter().all(|&d| d < 0) {
        return Err(Error::InvalidArgument(format!("the class {alpha}H+{k}F on S({a},{b}) has no sections")));
    }
    let expected = alpha as i64 * (a + b) as i64 + k;
    if expected <= 0 {
        return Err(Error::InvalidArgument(format!("class {alpha}H+{k}F has degree {expected}")));
    }
    let md = vec![vec![1, 0], vec![1, 0], vec![b - a, 1], vec![0, 1]];
    let aux = aux_ring(field, &["s", "t", "u", "v"], &md)?;
    let mut comps = Vec::new();
    for (blk, deg) in [(2usize, a), (3usize, b)] {
        for j in 0..=deg {
            let mut e = vec![(deg - j) as u16, j as u16, 0, 0];
            e[blk] = 1;
            comps.push(mono(&aux, e));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let mut terms = Vec::new();
        for (j, &d) in degrees.iter().enumerate() {
            if d < 0 {
                continue;
            }
            for i in 0..=d {
                let e = vec![(d - i) as u16, i as u16, (alpha as usize - j) as u16, j as u16];
                terms.push((aux.monomial(&e), field.random(&mut rng)));
            }
        }
        let g = Polynomial::from_terms(&aux, terms);
        if g.is_zero() {
            continue;
        }
        let param = Parameterization {
            aux: aux.clone(),
            multidegrees: md.clone(),
            components: comps.clone(),
            constraints: vec![g],
        };
        let c = build(format!("curve({alpha}H{k:+}F on S({a},{b}))"), param)?;
        let gb = c.ideal.groebner();
        if gb.is_unit() {
            continue;
        }
        let h = hilbert_data(&gb)?;
        if h.dimension == 2 && h.degree == expected {
            return Ok(c.with_seed(seed));
        }
    }
    Err(Error::Degenerate { what: format!("curve of class {alpha}H{k:+}F on S({a},{b})"), seed })
}

/// `count` random quadrics in `n` variables with no `x_0^2` term, so that
/// `[1:0:...:0]` lies on their common zero locus. Up to five draws are tried
/// until the quadrics cut out a scheme of codimension `count`.
pub fn complete_intersection_quadrics<F: Field>(field: &F, n: usize, count: usize, seed: u64) -> Result<Construction<F>> {
    if count == 0 || count >= n {
        return Err(Error::OutOfRange(format!("{count} quadrics in {n} variables")));
    }
    let ring = standard_ring(field, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mons: Vec<_> = ring.monomials_of_degree(2).into_iter().filter(|m| m.exp(0) < 2).collect();
    for _ in 0..5 {
        let gens: Vec<Polynomial<F>> = (0..count)
            .map(|_| Polynomial::from_terms(&ring, mons.iter().map(|m| (*m, field.random(&mut rng))).collect()))
            .collect();
        let ideal = Ideal::new(&ring, gens)?;
        let gb = ideal.groebner();
        if gb.is_unit() {
            continue;
        }
        let h = hilbert_data(&gb)?;
        if h.codimension() == count && h.degree == 1 << count {
            let mut point = vec![field.zero(); n];
            point[0] = field.one();
            let mut c = Construction::new(format!("CI({count} quadrics in P^{})", n - 1), ideal).with_seed(seed);
            c.points.push(point);
            return Ok(c);
        }
    }
    Err(Error::Degenerate { what: "complete intersection of quadrics".into(), seed })
}
