//! Rational normal scrolls, rational normal curves and cones.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, Parameterization};
use crate::kernel::field::Field;
use crate::kernel::monomial::MonomialOrder;
use crate::kernel::poly::Polynomial;
use crate::kernel::ring::{Ring, RingRef};

use super::Construction;

/// Numerical type `a_0 ≤ ... ≤ a_n` of a rational normal scroll; zero
/// entries are cone vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ScrollSpec {
    blocks: Vec<u32>,
}

impl ScrollSpec {
    pub fn new(mut blocks: Vec<u32>) -> Result<Self> {
        blocks.sort_unstable();
        if blocks.iter().all(|&a| a == 0) {
            return Err(Error::InvalidArgument("a scroll needs a positive block".into()));
        }
        Ok(ScrollSpec { blocks })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn degree(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// Dimension of the scroll as a projective variety: one per block.
    pub fn dim(&self) -> usize {
        self.blocks.len()
    }

    pub fn codim(&self) -> u32 {
        self.degree() - 1
    }

    pub fn nvars(&self) -> usize {
        self.degree() as usize + self.blocks.len()
    }

    /// Blocks in coordinate order: the smallest positive block first, then
    /// the vertex coordinates, then the other positive blocks.
    fn layout(&self) -> Vec<u32> {
        let first = self.blocks.iter().position(|&a| a > 0).unwrap();
        let mut out = vec![self.blocks[first]];
        out.extend(self.blocks.iter().filter(|&&a| a == 0));
        out.extend(&self.blocks[first + 1..]);
        out
    }

    /// Coordinate ranges of each block in coordinate order.
    fn ranges(&self) -> Vec<(u32, std::ops::Range<usize>)> {
        let mut start = 0;
        self.layout()
            .into_iter()
            .map(|a| {
                let r = start..start + a as usize + 1;
                start = r.end;
                (a, r)
            })
            .collect()
    }
}

impl fmt::Display for ScrollSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|a| a.to_string()).collect();
        write!(f, "S({})", parts.join(","))
    }
}

/// Divisor class on a scroll: `αH + βF`, or `mR` on a scroll whose
/// second-largest block is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DivisorClass {
    HF { alpha: i64, beta: i64 },
    R { m: i64 },
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DivisorClass::HF { alpha, beta } if beta < 0 => write!(f, "{alpha}H-{}F", -beta),
            DivisorClass::HF { alpha, beta } => write!(f, "{alpha}H+{beta}F"),
            DivisorClass::R { m } => write!(f, "{m}R"),
        }
    }
}

pub(crate) fn standard_ring<F: Field>(field: &F, n: usize) -> Result<RingRef<F>> {
    Ring::new(field.clone(), n, MonomialOrder::Grevlex)
}

/// `x·y − z·w` on variables of `ring`.
pub(crate) fn minor<F: Field>(ring: &RingRef<F>, a: usize, b: usize, c: usize, d: usize) -> Polynomial<F> {
    let v = |i| Polynomial::var(ring, i);
    &(&v(a) * &v(d)) - &(&v(b) * &v(c))
}

/// 2×2 minors of a two-row matrix given by (top, bottom) variable indices.
pub(crate) fn two_by_two_minors<F: Field>(ring: &RingRef<F>, cols: &[(usize, usize)]) -> Vec<Polynomial<F>> {
    let mut out = Vec::new();
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let ((a, c), (b, d)) = (cols[i], cols[j]);
            out.push(minor(ring, a, b, c, d));
        }
    }
    out
}

/// Binary-form parameterization of the scroll: coordinates
/// `s^{a-j} t^j u_i` for each block, with `u_i` of multidegree
/// `(max − a_i, 1)`.
pub(crate) fn scroll_parameterization<F: Field>(field: &F, spec: &ScrollSpec) -> Result<Parameterization<F>> {
    let layout = spec.layout();
    let amax = *spec.blocks.last().unwrap();
    let mut multidegrees = vec![vec![1, 0], vec![1, 0]];
    multidegrees.extend(layout.iter().map(|&a| vec![amax - a, 1]));
    let weights = multidegrees.iter().map(|m| m.iter().sum()).collect();
    let mut names = vec!["s".to_string(), "t".to_string()];
    names.extend((0..layout.len()).map(|i| format!("u{i}")));
    let aux = Ring::with_weights(field.clone(), weights, MonomialOrder::Grevlex)?.renamed(names)?;
    let mut components = Vec::new();
    for (i, &a) in layout.iter().enumerate() {
        for j in 0..=a {
            let mut e = vec![0u16; 2 + layout.len()];
            e[0] = (a - j) as u16;
            e[1] = j as u16;
            e[2 + i] = 1;
            components.push(Polynomial::monomial_term(&aux, aux.monomial(&e), field.one()));
        }
    }
    Ok(Parameterization { aux, multidegrees, components, constraints: Vec::new() })
}

/// The scroll as the rank-one locus of its two-row matrix.
pub fn scroll<F: Field>(field: &F, spec: &ScrollSpec) -> Result<Construction<F>> {
    let ring = standard_ring(field, spec.nvars())?;
    let mut cols = Vec::new();
    for (_, r) in spec.ranges() {
        for i in r.start..r.end - 1 {
            cols.push((i, i + 1));
        }
    }
    let ideal = Ideal::new(&ring, two_by_two_minors(&ring, &cols))?;
    Ok(Construction::new(spec.to_string(), ideal).with_param(scroll_parameterization(field, spec)?))
}

/// Rational normal curve of degree `d` in `P^d`.
pub fn rational_normal_curve<F: Field>(field: &F, d: u32) -> Result<Construction<F>> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("rational normal curve of degree {d}")));
    }
    let mut c = scroll(field, &ScrollSpec::new(vec![d])?)?;
    c.name = format!("RNC({d})");
    Ok(c)
}

/// The linear space spanned by the smallest positive block and the vertex:
/// the join of the section `S(a_min)` with the vertex of the scroll.
pub fn scroll_line_section<F: Field>(field: &F, spec: &ScrollSpec) -> Result<Construction<F>> {
    let ring = standard_ring(field, spec.nvars())?;
    let ranges = spec.ranges();
    let gens = ranges
        .iter()
        .skip(1)
        .filter(|(a, _)| *a > 0)
        .flat_map(|(_, r)| r.clone())
        .map(|i| Polynomial::var(&ring, i))
        .collect();
    Ok(Construction::new(format!("section S({}) of {spec}", ranges[0].0), Ideal::new(&ring, gens)?))
}

/// Cone with a `(k−1)`-dimensional vertex: the same generators in `k` more
/// variables. Known points carry over with zero vertex coordinates.
pub fn cone<F: Field>(c: &Construction<F>, k: usize) -> Result<Construction<F>> {
    if k == 0 {
        return Err(Error::OutOfRange("cone needs at least one new variable".into()));
    }
    let old = c.ideal.ring();
    let n = old.nvars();
    let ring = standard_ring(old.field(), n + k)?;
    let map: Vec<usize> = (0..n).collect();
    let gens = c.ideal.generators().iter().map(|g| g.rename_vars(&ring, &map)).collect();
    let mut out = Construction::new(format!("cone({},{k})", c.name), Ideal::new(&ring, gens)?);
    out.points = c
        .points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.extend(std::iter::repeat_n(old.field().zero(), k));
            q
        })
        .collect();
    out.seed = c.seed;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{implicitize, same_ideal};
    use crate::kernel::PrimeField;

    #[test]
    fn quadric_surface() {
        let f = PrimeField::default();
        let c = scroll(&f, &ScrollSpec::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(c.ideal.generators(), &[minor(c.ideal.ring(), 0, 2, 1, 3)]);
    }

    #[test]
    fn vertex_layout_matches_matrix() {
        // S(0,1,2): matrix [[z0, z3, z4], [z1, z4, z5]], vertex z2
        let f = PrimeField::default();
        let spec = ScrollSpec::new(vec![2, 0, 1]).unwrap();
        assert_eq!(spec.to_string(), "S(0,1,2)");
        assert_eq!((spec.dim(), spec.codim(), spec.nvars()), (3, 2, 6));
        let c = scroll(&f, &spec).unwrap();
        let r = c.ideal.ring();
        let expected = two_by_two_minors(r, &[(0, 1), (3, 4), (4, 5)]);
        let want = Ideal::new(r, expected).unwrap();
        assert!(same_ideal(&c.ideal, &want).unwrap());
        assert!(c.ideal.generators().iter().all(|g| g.terms().iter().all(|(m, _)| m.exp(2) == 0)));
    }

    #[test]
    fn parameterization_recovers_minors() {
        let f = PrimeField::default();
        let spec = ScrollSpec::new(vec![1, 2]).unwrap();
        let c = scroll(&f, &spec).unwrap();
        let i = implicitize(c.param.as_ref().unwrap(), c.ideal.ring()).unwrap();
        assert!(same_ideal(&i, &c.ideal).unwrap());
    }

    #[test]
    fn divisor_class_display() {
        assert_eq!(DivisorClass::HF { alpha: 2, beta: -1 }.to_string(), "2H-1F");
        assert_eq!(DivisorClass::HF { alpha: 1, beta: 2 }.to_string(), "1H+2F");
        assert_eq!(DivisorClass::R { m: 6 }.to_string(), "6R");
    }

    #[test]
    fn all_zero_blocks_rejected() {
        assert!(ScrollSpec::new(vec![0, 0]).is_err());
    }
}
