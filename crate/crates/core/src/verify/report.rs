//! Per-instance invariant summaries and check outcomes.

use std::fmt;

use serde::Serialize;

use crate::constructions::Construction;
use crate::error::Result;
use crate::invariants::{betti_table, derived_invariants, hilbert_data, sectional_genus, BettiTable};
use crate::kernel::field::Field;

/// Coarse classification by degree, depth and Green-Lazarsfeld index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Degree `e + 1`.
    MinimalDegree,
    /// ACM of degree `e + 2`.
    DelPezzo,
    /// Degree `e + 2`, depth equal to the dimension and `a = 0`.
    AlmostMinimalMaxDepth,
    /// ACM of degree `e + 3`.
    AcmDegreeCodimPlusThree,
    Other,
}

impl Classification {
    /// `gl_index` uses `None` for an infinite index.
    pub fn classify(codim: usize, degree: i64, dim: i64, depth: usize, acm: bool, gl_index: Option<usize>) -> Self {
        let e = codim as i64;
        if degree == e + 1 {
            Classification::MinimalDegree
        } else if degree == e + 2 && acm {
            Classification::DelPezzo
        } else if degree == e + 2 && depth as i64 == dim && gl_index == Some(0) {
            Classification::AlmostMinimalMaxDepth
        } else if degree == e + 3 && acm {
            Classification::AcmDegreeCodimPlusThree
        } else {
            Classification::Other
        }
    }

    /// Excluded from the quadratic-strand bound.
    pub fn is_exceptional(self) -> bool {
        matches!(self, Classification::MinimalDegree | Classification::DelPezzo)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::MinimalDegree => "minimal-degree",
            Classification::DelPezzo => "del-pezzo",
            Classification::AlmostMinimalMaxDepth => "almost-minimal-max-depth",
            Classification::AcmDegreeCodimPlusThree => "acm-degree-e+3",
            Classification::Other => "other",
        })
    }
}

/// Everything the checks need to know about one projective scheme.
#[derive(Clone, Debug, Serialize)]
pub struct VarietyReport {
    pub name: String,
    pub seed: u64,
    pub nvars: usize,
    /// Projective dimension `n`.
    pub dim: i64,
    /// Codimension `e`.
    pub codim: usize,
    pub degree: i64,
    pub depth: usize,
    pub acm: bool,
    /// Only for positive-dimensional schemes.
    pub sectional_genus: Option<i64>,
    pub gl_index: Option<usize>,
    #[serde(skip)]
    pub betti: BettiTable,
    /// K-polynomial numerator of the Hilbert series.
    pub numerator: Vec<i64>,
    pub classification: Classification,
    /// Whether the scheme is known to be a variety (reduced and irreducible).
    pub integral: bool,
}

impl VarietyReport {
    pub fn compute<F: Field>(c: &Construction<F>, seed: u64, integral: bool) -> Result<Self> {
        let gb = c.groebner();
        let h = hilbert_data(&gb)?;
        let betti = betti_table(&gb, None, None)?;
        let inv = derived_invariants(&betti, &h)?;
        let sectional_genus = if inv.dim >= 1 { Some(sectional_genus(&gb, seed)?) } else { None };
        Ok(VarietyReport {
            name: c.name.clone(),
            seed,
            nvars: betti.nvars(),
            dim: inv.dim,
            codim: inv.codim,
            degree: inv.degree,
            depth: inv.depth,
            acm: inv.acm,
            sectional_genus,
            gl_index: inv.gl_index,
            classification: Classification::classify(inv.codim, inv.degree, inv.dim, inv.depth, inv.acm, inv.gl_index),
            betti,
            numerator: h.numerator,
            integral,
        })
    }

    /// `β_{p,1}` for `1 ≤ p ≤ len`.
    pub fn strand(&self, len: usize) -> Vec<u64> {
        self.betti.strand(1, len)
    }
}

/// Outcome of one check on one instance. `pass` holds exactly when the
/// expected relation holds and no error occurred.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub seed: u64,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckResult {
    pub fn outcome(
        check: &str,
        instance: &str,
        seed: u64,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) -> Self {
        CheckResult {
            check: check.into(),
            instance: instance.into(),
            seed,
            expected: expected.into(),
            actual: actual.into(),
            pass,
            error: None,
        }
    }

    pub fn failed(check: &str, instance: &str, seed: u64, error: impl fmt::Display) -> Self {
        CheckResult {
            check: check.into(),
            instance: instance.into(),
            seed,
            expected: String::new(),
            actual: String::new(),
            pass: false,
            error: Some(error.to_string()),
        }
    }

    /// Turns a computation that may fail into a result.
    pub fn from_result(check: &str, instance: &str, seed: u64, r: Result<CheckResult>) -> Self {
        r.unwrap_or_else(|e| CheckResult::failed(check, instance, seed, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_branches() {
        use Classification::*;
        assert_eq!(Classification::classify(3, 4, 1, 2, true, None), MinimalDegree);
        assert_eq!(Classification::classify(4, 6, 1, 2, true, Some(3)), DelPezzo);
        assert_eq!(Classification::classify(4, 6, 1, 1, false, Some(0)), AlmostMinimalMaxDepth);
        assert_eq!(Classification::classify(4, 6, 2, 1, false, Some(0)), Other);
        assert_eq!(Classification::classify(3, 6, 0, 1, true, Some(1)), AcmDegreeCodimPlusThree);
        assert!(DelPezzo.is_exceptional() && !Other.is_exceptional());
    }
}
