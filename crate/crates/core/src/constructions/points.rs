//! Finite point sets: general points and points on the rational normal
//! curve, with their vanishing ideals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{intersect, Ideal};
use crate::kernel::field::Field;
use crate::kernel::matrix::Matrix;
use crate::kernel::poly::Polynomial;
use crate::kernel::ring::RingRef;

use super::scrolls::standard_ring;
use super::Construction;

/// Points of `P^e` by their coordinate vectors.
#[derive(Clone, Debug)]
pub struct PointConfig<F: Field> {
    pub field: F,
    pub points: Vec<Vec<F::Elem>>,
    pub seed: u64,
}

impl<F: Field> PointConfig<F> {
    /// Every set of at most `e + 1` of the points is linearly independent.
    pub fn in_general_position(&self) -> bool {
        let Some(dim) = self.points.first().map(|p| p.len()) else {
            return true;
        };
        let k = dim.min(self.points.len());
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let rows = idx.iter().map(|&i| self.points[i].clone()).collect();
            if Matrix::from_rows(&self.field, rows).rank() < k {
                return false;
            }
            // next k-subset in lexicographic order
            let n = self.points.len();
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                return true;
            };
            idx[pos] += 1;
            for i in pos + 1..k {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }

    /// Vanishing ideal of the reduced point set, by balanced pairwise
    /// intersection of the point ideals.
    pub fn ideal(&self) -> Result<Ideal<F>> {
        let n = self.points.first().map(|p| p.len()).ok_or(Error::InvalidArgument("no points".into()))?;
        let ring = standard_ring(&self.field, n)?;
        let mut layer: Vec<Ideal<F>> = self.points.iter().map(|p| point_ideal(&ring, p)).collect::<Result<_>>()?;
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len().div_ceil(2));
            for pair in layer.chunks(2) {
                next.push(match pair {
                    [a, b] => intersect(a, b)?.groebner().to_ideal(),
                    [a] => a.clone(),
                    _ => unreachable!(),
                });
            }
            layer = next;
        }
        Ok(layer.pop().unwrap())
    }
}

/// Linear forms vanishing at a point: a basis of the kernel of the point
/// viewed as a row vector.
fn point_ideal<F: Field>(ring: &RingRef<F>, p: &[F::Elem]) -> Result<Ideal<F>> {
    let field = ring.field();
    let (_, kernel) = Matrix::from_rows(field, vec![p.to_vec()]).rank_and_kernel();
    let gens = kernel
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(ring, v.into_iter().enumerate().map(|(i, c)| (ring.var_monomial(i), c)).collect())
        })
        .collect();
    Ideal::new(ring, gens)
}

fn sample<F: Field>(
    field: &F,
    e: usize,
    d: usize,
    seed: u64,
    what: &str,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Vec<F::Elem>,
) -> Result<PointConfig<F>> {
    if e < 1 || d < e + 1 {
        return Err(Error::OutOfRange(format!("{d} points in P^{e}: need d ≥ e + 1")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let points = (0..d).map(|_| draw(&mut rng)).collect();
        let cfg = PointConfig { field: field.clone(), points, seed };
        if cfg.in_general_position() {
            return Ok(cfg);
        }
    }
    Err(Error::Degenerate { what: what.into(), seed })
}

fn finish<F: Field>(name: String, cfg: PointConfig<F>) -> Result<Construction<F>> {
    let ideal = cfg.ideal()?;
    let mut c = Construction::new(name, ideal).with_seed(cfg.seed);
    c.points = cfg.points;
    Ok(c)
}

/// `d` random points of `P^e` in general position.
pub fn general_points<F: Field>(field: &F, e: usize, d: usize, seed: u64) -> Result<Construction<F>> {
    let cfg = sample(field, e, d, seed, "general points", |rng| (0..=e).map(|_| field.random(rng)).collect())?;
    finish(format!("points({e},{d})"), cfg)
}

/// `d` points `[1 : t : ... : t^e]` of the rational normal curve for random
/// distinct parameters `t`.
pub fn points_on_rnc<F: Field>(field: &F, e: usize, d: usize, seed: u64) -> Result<Construction<F>> {
    let cfg = sample(field, e, d, seed, "points on the rational normal curve", |rng| {
        let t = field.random(rng);
        let mut p = vec![field.one()];
        for i in 0..e {
            p.push(field.mul(&p[i], &t));
        }
        p
    })?;
    finish(format!("rnc-points({e},{d})"), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::hilbert_data;
    use crate::kernel::PrimeField;

    #[test]
    fn six_points_in_p3() {
        let f = PrimeField::default();
        let c = general_points(&f, 3, 6, 7).unwrap();
        let h = hilbert_data(&c.groebner()).unwrap();
        assert_eq!((h.dimension, h.degree), (1, 6));
        for p in &c.points {
            assert!(c.ideal.generators().iter().all(|g| f.is_zero(&g.evaluate(p))));
        }
    }

    #[test]
    fn dependent_points_detected() {
        let f = PrimeField::default();
        let pts = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]];
        let cfg = PointConfig { field: f, points: pts, seed: 0 };
        assert!(!cfg.in_general_position());
    }

    #[test]
    fn too_few_points_rejected() {
        let f = PrimeField::default();
        assert!(general_points(&f, 3, 3, 1).is_err());
    }
}
