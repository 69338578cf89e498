//! Linear sections, Artinian reductions and inner projections.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{eliminate, restrict_linear, saturate_irrelevant, Ideal};
use crate::invariants::hilbert_data;
use crate::kernel::field::{Field, FieldSpec};
use crate::kernel::matrix::Matrix;
use crate::kernel::poly::Polynomial;

use super::scrolls::standard_ring;
use super::Construction;

fn random_forms<F: Field>(field: &F, k: usize, r: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<F::Elem>> {
    (0..k).map(|_| (0..r).map(|_| field.random(rng)).collect()).collect()
}

/// Intersection with `k` general hyperplanes, as a saturated ideal in the
/// coordinate ring of the cutting linear space. A draw is accepted when the
/// dimension drops by exactly `k` and the degree is unchanged.
pub fn geometric_linear_section<F: Field>(c: &Construction<F>, k: usize, seed: u64) -> Result<Construction<F>> {
    let gb = c.groebner();
    let h = hilbert_data(&gb)?;
    if k == 0 || k as i64 > h.projective_dimension() {
        return Err(Error::OutOfRange(format!(
            "cannot cut a {}-dimensional scheme by {k} hyperplanes",
            h.projective_dimension()
        )));
    }
    let field = c.ideal.ring().field();
    let n = c.ideal.ring().nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let forms = random_forms(field, k, n - k, &mut rng);
        let cut = saturate_irrelevant(&restrict_linear(&gb.to_ideal(), &forms)?)?;
        let cgb = cut.groebner();
        if cgb.is_unit() {
            continue;
        }
        let hc = hilbert_data(&cgb)?;
        if hc.dimension + k == h.dimension && hc.degree == h.degree {
            let name = format!("section({},{k})", c.name);
            return Ok(Construction::new(name, cgb.to_ideal()).with_seed(seed));
        }
    }
    Err(Error::Degenerate { what: format!("linear section of {}", c.name), seed })
}

/// `S/(I, ℓ_1, ..., ℓ_k)` presented in `N − k` variables, without
/// saturation.
#[derive(Clone, Debug)]
pub struct ArtinianQuotient<F: Field> {
    pub ideal: Ideal<F>,
    /// The forms were a regular sequence on `S/I`, so Betti tables agree.
    pub regular: bool,
}

/// Quotient by `k` random linear forms. Regularity of the sequence is
/// decided exactly: it holds iff the K-polynomial is unchanged. Up to five
/// draws are tried; if none is regular the last one is returned flagged.
pub fn artinian_quotient<F: Field>(ideal: &Ideal<F>, k: usize, seed: u64) -> Result<ArtinianQuotient<F>> {
    let n = ideal.ring().nvars();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("cannot cut {n} variables by {k} forms")));
    }
    let gb = ideal.groebner();
    let h = hilbert_data(&gb)?;
    let field = ideal.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..5 {
        let forms = random_forms(field, k, n - k, &mut rng);
        let cut = restrict_linear(&gb.to_ideal(), &forms)?.groebner();
        let regular = !cut.is_unit() && hilbert_data(&cut)?.numerator == h.numerator;
        let q = ArtinianQuotient { ideal: cut.to_ideal(), regular };
        if regular {
            return Ok(q);
        }
        last = Some(q);
    }
    Ok(last.unwrap())
}

fn vanishes_on<F: Field>(ideal: &Ideal<F>, p: &[F::Elem]) -> bool {
    let f = ideal.ring().field();
    ideal.generators().iter().all(|g| f.is_zero(&g.evaluate(p)))
}

/// Image of the projection from `point ∈ X`: coordinates are changed so
/// that the point becomes `[1:0:...:0]`, the first variable is eliminated
/// and the result saturated.
pub fn inner_projection<F: Field>(ideal: &Ideal<F>, point: &[F::Elem]) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::InvalidArgument(format!("point has {} coordinates, ring has {n}", point.len())));
    }
    let Some(pivot) = point.iter().position(|c| !field.is_zero(c)) else {
        return Err(Error::InvalidArgument("the zero vector is not a point".into()));
    };
    if !vanishes_on(ideal, point) {
        return Err(Error::NotOnScheme);
    }
    // x = A y with first column of A the point and the remaining columns
    // the unit vectors other than e_pivot
    let others: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| {
            let mut terms = vec![(ring.var_monomial(0), point[i].clone())];
            if let Some(j) = others.iter().position(|&o| o == i) {
                terms.push((ring.var_monomial(j + 1), field.one()));
            }
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    let moved = ideal.generators().iter().map(|g| g.substitute(ring, &images)).collect();
    let elim = eliminate(&Ideal::new(ring, moved)?, 1)?;
    let target = standard_ring(field, n - 1)?;
    let map: Vec<usize> = (0..n - 1).collect();
    let gens = elim.generators().iter().map(|g| g.rename_vars(&target, &map)).collect();
    saturate_irrelevant(&Ideal::new(&target, gens)?)
}

/// Whether the Jacobian of the generators at `p` has rank equal to the
/// codimension.
fn is_smooth_at<F: Field>(ideal: &Ideal<F>, codim: usize, p: &[F::Elem]) -> bool {
    let n = ideal.ring().nvars();
    let rows = ideal
        .generators()
        .iter()
        .map(|g| (0..n).map(|i| g.derivative(i).evaluate(p)).collect())
        .collect();
    Matrix::from_rows(ideal.ring().field(), rows).rank() == codim
}

/// Roots in the prime field of a univariate polynomial given by its
/// coefficient-evaluation closure, by exhaustive search.
fn prime_field_roots<F: Field>(field: &F, eval: impl Fn(&F::Elem) -> F::Elem) -> Result<Vec<F::Elem>> {
    let FieldSpec::Prime(p) = field.spec() else {
        return Err(Error::Unsupported("point sampling on constrained parameterizations over Q".into()));
    };
    Ok((0..p as i64).map(|i| field.from_i64(i)).filter(|x| field.is_zero(&eval(x))).collect())
}

/// A smooth point of the construction: from its parameterization when it
/// has one (solving a single constraint for the last auxiliary variable),
/// otherwise among its known points.
pub fn sample_smooth_point<F: Field>(c: &Construction<F>, seed: u64) -> Result<Vec<F::Elem>> {
    let gb = c.groebner();
    let codim = hilbert_data(&gb)?.codimension();
    let field = c.ideal.ring().field();
    let accept = |p: &[F::Elem]| {
        p.iter().any(|x| !field.is_zero(x)) && vanishes_on(&c.ideal, p) && is_smooth_at(&c.ideal, codim, p)
    };
    if let Some(param) = &c.param {
        if param.constraints.len() > 1 {
            return Err(Error::Unsupported("sampling with several constraints".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = param.aux.nvars();
        for _ in 0..20 {
            let mut vals: Vec<F::Elem> = (0..k).map(|_| field.random(&mut rng)).collect();
            if let Some(g) = param.constraints.first() {
                let roots = prime_field_roots(field, |x| {
                    let mut v = vals.clone();
                    v[k - 1] = x.clone();
                    g.evaluate(&v)
                })?;
                let Some(r) = roots.first() else { continue };
                vals[k - 1] = r.clone();
            }
            let p: Vec<F::Elem> = param.components.iter().map(|f| f.evaluate(&vals)).collect();
            if accept(&p) {
                return Ok(p);
            }
        }
    } else if let Some(p) = c.points.iter().find(|p| accept(p)) {
        return Ok(p.clone());
    }
    Err(Error::Degenerate { what: format!("smooth point on {}", c.name), seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{rational_normal_curve, scroll, ScrollSpec};
    use crate::groebner::same_ideal;
    use crate::kernel::PrimeField;

    #[test]
    fn projecting_rnc_lowers_degree() {
        let f = PrimeField::default();
        let c = rational_normal_curve(&f, 4).unwrap();
        let p = sample_smooth_point(&c, 5).unwrap();
        let proj = inner_projection(&c.ideal, &p).unwrap();
        let h = hilbert_data(&proj.groebner()).unwrap();
        assert_eq!((h.nvars, h.projective_dimension(), h.degree), (4, 1, 3));
    }

    #[test]
    fn point_off_scheme_rejected() {
        let f = PrimeField::default();
        let c = rational_normal_curve(&f, 3).unwrap();
        let p = vec![1, 1, 0, 0];
        assert_eq!(inner_projection(&c.ideal, &p).unwrap_err(), Error::NotOnScheme);
    }

    #[test]
    fn twisted_cubic_section_is_three_points() {
        let f = PrimeField::default();
        let c = rational_normal_curve(&f, 3).unwrap();
        let s = geometric_linear_section(&c, 1, 2).unwrap();
        let h = hilbert_data(&s.groebner()).unwrap();
        assert_eq!((h.nvars, h.dimension, h.degree), (3, 1, 3));
    }

    #[test]
    fn artinian_reduction_of_acm_scroll_is_regular() {
        let f = PrimeField::default();
        let c = scroll(&f, &ScrollSpec::new(vec![1, 2]).unwrap()).unwrap();
        let q = artinian_quotient(&c.ideal, 3, 9).unwrap();
        assert!(q.regular);
        let again = artinian_quotient(&c.ideal, 3, 9).unwrap();
        assert!(same_ideal(&q.ideal, &again.ideal).unwrap());
    }
}
