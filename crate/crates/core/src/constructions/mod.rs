//! Constructors for the projective schemes the toolkit studies: rational
//! normal scrolls, projected scrolls of almost minimal degree, curves on
//! surface scrolls, elliptic normal curves, point sets, cones, linear
//! sections and inner projections.

mod curves;
mod points;
mod scrolls;
mod sections;

use crate::groebner::{GroebnerBasis, Ideal, Parameterization};
use crate::kernel::field::Field;

pub use curves::{
    complete_intersection_quadrics, curve_on_scroll, elliptic_normal_curve, projected_monomial_curve,
    projected_scroll_fourfold, projected_scroll_surface, projected_scroll_threefold,
};
pub use points::{general_points, points_on_rnc, PointConfig};
pub use scrolls::{cone, rational_normal_curve, scroll, scroll_line_section, DivisorClass, ScrollSpec};
pub use sections::{
    artinian_quotient, geometric_linear_section, inner_projection, sample_smooth_point, ArtinianQuotient,
};

/// A constructed scheme: its saturated ideal plus whatever is known about
/// how to find points on it.
#[derive(Clone, Debug)]
pub struct Construction<F: Field> {
    /// Short descriptor such as `S(1,3)` or `points(4,8)`.
    pub name: String,
    pub ideal: Ideal<F>,
    /// A dominant parameterization, when one is known.
    pub param: Option<Parameterization<F>>,
    /// Explicit points known to lie on the scheme.
    pub points: Vec<Vec<F::Elem>>,
    pub seed: Option<u64>,
}

impl<F: Field> Construction<F> {
    /// A bare construction with no parameterization or known points.
    pub fn new(name: impl Into<String>, ideal: Ideal<F>) -> Self {
        Construction { name: name.into(), ideal, param: None, points: Vec::new(), seed: None }
    }

    pub(crate) fn with_param(mut self, param: Parameterization<F>) -> Self {
        self.param = Some(param);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn groebner(&self) -> GroebnerBasis<F> {
        self.ideal.groebner()
    }
}
