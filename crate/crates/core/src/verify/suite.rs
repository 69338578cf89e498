//! Batch runs of the checks over a generated corpus.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    complete_intersection_quadrics, curve_on_scroll, elliptic_normal_curve, general_points, points_on_rnc,
    projected_monomial_curve, projected_scroll_fourfold, projected_scroll_surface, projected_scroll_threefold,
    rational_normal_curve, scroll, Construction, DivisorClass, ScrollSpec,
};
use crate::error::{Error, Result};
use crate::kernel::PrimeField;

use super::checks::*;
use super::divisor::{divisor_class_check, genus_two_check, genus_two_host};
use super::report::{CheckResult, VarietyReport};

/// Families of checks selectable in a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckGroup {
    /// Quadratic-strand upper bound and Koszul vanishing beyond the codimension.
    Bound,
    /// Agreement of the three characterizations of the extremal case.
    Extremal,
    /// Class `H + 2F` of almost minimal degree schemes on their scrolls.
    DivisorClass,
    /// Genus-two curves of class `2H + (3−e)F`.
    GenusTwo,
    /// `β_{e−1,1} ∈ {0, e−1}`.
    Dichotomy,
    InnerProjection,
    Lefschetz,
    BrokenDivisor,
    /// Closed-form tables, the quadric count, Hilbert consistency and
    /// `N_{2,p}` for general points.
    Tables,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 9] = [
        CheckGroup::Bound,
        CheckGroup::Extremal,
        CheckGroup::DivisorClass,
        CheckGroup::GenusTwo,
        CheckGroup::Dichotomy,
        CheckGroup::InnerProjection,
        CheckGroup::Lefschetz,
        CheckGroup::BrokenDivisor,
        CheckGroup::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Bound => "bound",
            CheckGroup::Extremal => "extremal",
            CheckGroup::DivisorClass => "divisor-class",
            CheckGroup::GenusTwo => "genus-two",
            CheckGroup::Dichotomy => "dichotomy",
            CheckGroup::InnerProjection => "inner-projection",
            CheckGroup::Lefschetz => "lefschetz",
            CheckGroup::BrokenDivisor => "broken-divisor",
            CheckGroup::Tables => "tables",
        }
    }

    /// Smallest codimension the group is defined for.
    fn min_codim(self) -> usize {
        match self {
            CheckGroup::Bound | CheckGroup::Dichotomy | CheckGroup::Lefschetz | CheckGroup::Tables => 2,
            _ => 3,
        }
    }

    /// Whether the group consumes the shared corpus reports.
    fn uses_corpus(self) -> bool {
        !matches!(self, CheckGroup::GenusTwo | CheckGroup::BrokenDivisor)
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub e_min: usize,
    pub e_max: usize,
    pub seed: u64,
    pub groups: Vec<CheckGroup>,
}

/// A check outcome with the time spent on it. Timing is the only field not
/// determined by the configuration.
#[derive(Clone, Debug)]
pub struct SuiteItem {
    pub result: CheckResult,
    pub elapsed: Duration,
}

/// Recipe for one corpus member of codimension `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusEntry {
    Scroll(Vec<u32>),
    RationalNormalCurve(u32),
    /// Almost minimal degree scheme of the given dimension (1 to 4) on
    /// `S(0,...,0,1,e−1)`.
    AlmostMinimal { dim: u32, e: u32 },
    Elliptic(u32),
    GeneralPoints { e: usize, d: usize },
    PointsOnRnc { e: usize, d: usize },
    CurveOnScroll { a: u32, b: u32, alpha: u32, k: i64 },
    QuadricIntersection,
}

impl CorpusEntry {
    pub fn build(&self, field: &PrimeField, seed: u64) -> Result<Construction<PrimeField>> {
        match *self {
            CorpusEntry::Scroll(ref blocks) => scroll(field, &ScrollSpec::new(blocks.clone())?),
            CorpusEntry::RationalNormalCurve(d) => rational_normal_curve(field, d),
            CorpusEntry::AlmostMinimal { dim, e } => match dim {
                1 => projected_monomial_curve(field, e),
                2 => projected_scroll_surface(field, e),
                3 => projected_scroll_threefold(field, e),
                4 => projected_scroll_fourfold(field, e),
                _ => Err(Error::Unsupported(format!("almost minimal scheme of dimension {dim}"))),
            },
            CorpusEntry::Elliptic(e) => elliptic_normal_curve(field, e),
            CorpusEntry::GeneralPoints { e, d } => general_points(field, e, d, seed),
            CorpusEntry::PointsOnRnc { e, d } => points_on_rnc(field, e, d, seed),
            CorpusEntry::CurveOnScroll { a, b, alpha, k } => curve_on_scroll(field, a, b, alpha, k, seed),
            CorpusEntry::QuadricIntersection => complete_intersection_quadrics(field, 6, 3, seed),
        }
    }

    /// Point sets are reducible; everything else in the corpus is a variety.
    pub fn integral(&self) -> bool {
        !matches!(self, CorpusEntry::GeneralPoints { .. } | CorpusEntry::PointsOnRnc { .. })
    }

    /// The scroll the entry is known to lie on as a divisor of class
    /// `H + 2F`, if any.
    fn host_scroll(&self) -> Option<ScrollSpec> {
        match *self {
            CorpusEntry::AlmostMinimal { dim, e } => {
                let mut blocks = vec![0; dim as usize - 1];
                blocks.extend([1, e - 1]);
                ScrollSpec::new(blocks).ok()
            }
            CorpusEntry::CurveOnScroll { a, b, alpha: 1, k: 2 } => ScrollSpec::new(vec![a, b]).ok(),
            _ => None,
        }
    }

    fn projection_target(&self) -> bool {
        matches!(
            self,
            CorpusEntry::Scroll(_)
                | CorpusEntry::RationalNormalCurve(_)
                | CorpusEntry::AlmostMinimal { dim: 1, .. }
                | CorpusEntry::QuadricIntersection
        )
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusEntry::Scroll(blocks) => {
                let mut b = blocks.clone();
                b.sort_unstable();
                let parts: Vec<String> = b.iter().map(u32::to_string).collect();
                write!(f, "S({})", parts.join(","))
            }
            CorpusEntry::RationalNormalCurve(d) => write!(f, "RNC({d})"),
            CorpusEntry::AlmostMinimal { dim, e } => {
                let kind = ["curve", "surface", "threefold", "fourfold"].get(*dim as usize - 1).unwrap_or(&"scheme");
                write!(f, "almost-minimal-{kind}(e={e})")
            }
            CorpusEntry::Elliptic(e) => write!(f, "elliptic(e={e})"),
            CorpusEntry::GeneralPoints { e, d } => write!(f, "points({e},{d})"),
            CorpusEntry::PointsOnRnc { e, d } => write!(f, "rnc-points({e},{d})"),
            CorpusEntry::CurveOnScroll { a, b, alpha, k } => write!(f, "curve({alpha}H{k:+}F on S({a},{b}))"),
            CorpusEntry::QuadricIntersection => write!(f, "CI(3 quadrics in P^5)"),
        }
    }
}

/// Corpus of codimension `e`: scrolls, the rational normal curve, almost
/// minimal degree schemes of dimensions 1 to 4, the elliptic normal curve
/// when it is built, general points and points on the rational normal curve
/// of degrees `e+1` to `e+5`, curves of classes `H+2F` and `2H+(3−e)F` on
/// surface scrolls, and the complete intersection of three quadrics in `P^5`.
pub fn corpus(e: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    if e < 2 {
        return out;
    }
    let eu = e as u32;
    out.push(CorpusEntry::Scroll(vec![1, eu]));
    out.push(CorpusEntry::Scroll(vec![0, 1, eu]));
    out.push(CorpusEntry::Scroll(vec![1, 1, eu - 1]));
    if e >= 3 {
        out.push(CorpusEntry::Scroll(vec![2, eu - 1]));
    }
    out.push(CorpusEntry::RationalNormalCurve(eu + 1));
    if e >= 3 {
        out.extend((1..=4).map(|dim| CorpusEntry::AlmostMinimal { dim, e: eu }));
        out.push(CorpusEntry::CurveOnScroll { a: 1, b: eu - 1, alpha: 1, k: 2 });
        let (a, b) = genus_two_host(eu);
        out.push(CorpusEntry::CurveOnScroll { a, b, alpha: 2, k: 3 - eu as i64 });
    }
    if e >= 4 {
        out.push(CorpusEntry::CurveOnScroll { a: 2, b: eu - 2, alpha: 1, k: 2 });
    }
    if e >= 4 && e % 3 == 1 {
        out.push(CorpusEntry::Elliptic(eu));
    }
    for d in e + 1..=e + 5 {
        out.push(CorpusEntry::GeneralPoints { e, d });
        out.push(CorpusEntry::PointsOnRnc { e, d });
    }
    if e == 3 {
        out.push(CorpusEntry::QuadricIntersection);
    }
    out
}

struct Member {
    entry: CorpusEntry,
    built: Result<(Construction<PrimeField>, VarietyReport)>,
}

fn timed(f: impl FnOnce() -> Vec<CheckResult>) -> Vec<SuiteItem> {
    let start = Instant::now();
    let results = f();
    let elapsed = start.elapsed() / results.len().max(1) as u32;
    results.into_iter().map(|result| SuiteItem { result, elapsed }).collect()
}

fn member_checks(group: CheckGroup, m: &Member, seed: u64) -> Vec<CheckResult> {
    let name = m.entry.to_string();
    let (c, r) = match &m.built {
        Ok(built) => built,
        Err(err) => return vec![CheckResult::failed(group.name(), &name, seed, err)],
    };
    match group {
        CheckGroup::Bound if !r.classification.is_exceptional() => {
            vec![bound_check(r), koszul_vanishing_check(r)]
        }
        CheckGroup::Bound => vec![koszul_vanishing_check(r)],
        CheckGroup::Extremal => vec![extremal_check(r)],
        CheckGroup::Dichotomy if !r.classification.is_exceptional() => vec![dichotomy_check(r)],
        CheckGroup::Tables => {
            let mut out = vec![hilbert_consistency_check(r), quadric_count_check(r)];
            out.extend(known_table_check(r));
            out
        }
        CheckGroup::Lefschetz if r.dim >= 1 => vec![lefschetz_check(c, r, seed)],
        CheckGroup::InnerProjection if m.entry.projection_target() => vec![inner_projection_check(c, r, seed)],
        CheckGroup::DivisorClass => match m.entry.host_scroll() {
            Some(y) => vec![divisor_class_check(c, &y, DivisorClass::HF { alpha: 1, beta: 2 }, seed)],
            None => vec![],
        },
        _ => vec![],
    }
}

/// Runs the selected groups for every codimension in the range. Items are
/// independent and computed in parallel; the output is sorted by
/// `(check, instance)`. Failures of single instances are recorded and the
/// run continues.
pub fn run_suite(config: &SuiteConfig) -> Vec<SuiteItem> {
    let field = PrimeField::default();
    let seed = config.seed;
    let mut groups = config.groups.clone();
    groups.sort_unstable();
    groups.dedup();
    let mut items = Vec::new();
    for e in config.e_min..=config.e_max {
        let active: Vec<CheckGroup> = groups.iter().copied().filter(|g| e >= g.min_codim()).collect();
        for g in groups.iter().filter(|_| e < 2) {
            let err = Error::OutOfRange(format!("precondition: e >= {}, got {e}", g.min_codim()));
            items.push(SuiteItem { result: CheckResult::failed(g.name(), &format!("e={e}"), seed, err), elapsed: Duration::ZERO });
        }
        let members: Vec<Member> = if active.iter().any(|g| g.uses_corpus()) {
            corpus(e)
                .into_par_iter()
                .map(|entry| {
                    let built = entry.build(&field, seed).and_then(|c| {
                        let r = VarietyReport::compute(&c, seed, entry.integral())?;
                        Ok((c, r))
                    });
                    Member { entry, built }
                })
                .collect()
        } else {
            Vec::new()
        };
        let per_member: Vec<SuiteItem> = active
            .iter()
            .filter(|g| g.uses_corpus())
            .flat_map(|&g| members.iter().map(move |m| (g, m)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|(g, m)| timed(|| member_checks(g, m, seed)))
            .collect();
        items.extend(per_member);
        for &g in &active {
            match g {
                CheckGroup::GenusTwo => items.extend(timed(|| vec![genus_two_check(&field, e as u32, seed)])),
                CheckGroup::BrokenDivisor => items.extend(timed(|| vec![broken_divisor_check(&field, e, seed)])),
                CheckGroup::Tables => {
                    let ps: Vec<usize> = (1..=e.saturating_sub(2)).collect();
                    items.extend(
                        ps.into_par_iter()
                            .flat_map_iter(|p| timed(|| vec![points_property_check(&field, e, p, seed)]))
                            .collect::<Vec<_>>(),
                    );
                }
                _ => {}
            }
        }
    }
    items.sort_by(|a, b| (&a.result.check, &a.result.instance).cmp(&(&b.result.check, &b.result.instance)));
    items
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_group_list_gives_empty_report() {
        let cfg = SuiteConfig { e_min: 3, e_max: 5, seed: 1, groups: vec![] };
        assert!(run_suite(&cfg).is_empty());
    }

    #[test]
    fn too_small_codimension_is_recorded() {
        let cfg = SuiteConfig { e_min: 1, e_max: 1, seed: 1, groups: vec![CheckGroup::Bound] };
        let items = run_suite(&cfg);
        assert_eq!(items.len(), 1);
        assert!(!items[0].result.pass && items[0].result.error.is_some());
    }

    #[test]
    fn corpus_names_match_constructions() {
        let f = PrimeField::default();
        for entry in corpus(3) {
            let c = entry.build(&f, 1).unwrap();
            assert_eq!(c.name, entry.to_string());
        }
    }
}
