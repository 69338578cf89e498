//! Predicates on quadratic strands and Betti tables.

use num_integer::binomial;

use crate::constructions::{
    curve_on_scroll, general_points, geometric_linear_section, inner_projection, sample_smooth_point,
    scroll_line_section, Construction, ScrollSpec,
};
use crate::error::{Error, Result};
use crate::groebner::intersect;
use crate::invariants::{betti_table, BettiTable};
use crate::kernel::field::Field;

use super::report::{CheckResult, Classification, VarietyReport};

fn choose(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// `β_{p,1}` of a variety of minimal degree and codimension `e`.
pub fn minimal_degree_strand(e: usize, p: usize) -> u64 {
    p as u64 * choose(e + 1, p + 1)
}

/// `β_{p,1}` of a del Pezzo variety of codimension `e`, for `1 ≤ p ≤ e − 1`.
pub fn del_pezzo_strand(e: usize, p: usize) -> u64 {
    minimal_degree_strand(e, p) - choose(e, p - 1)
}

/// Upper bound for `β_{p,1}` when the scheme is neither of minimal degree
/// nor del Pezzo: `p·C(e+1,p+1) − 2·C(e,p−1)` below `e`, zero from `e` on.
pub fn quadratic_bound(e: usize, p: usize) -> u64 {
    if p == 0 || p >= e {
        0
    } else {
        minimal_degree_strand(e, p) - 2 * choose(e, p - 1)
    }
}

fn list(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn precondition(check: &str, r: &VarietyReport, what: &str) -> CheckResult {
    CheckResult::failed(check, &r.name, r.seed, Error::InvalidArgument(format!("precondition: {what}")))
}

/// `β_{p,1} ≤ quadratic_bound(e, p)` for every `p ≥ 1`.
pub fn bound_check(r: &VarietyReport) -> CheckResult {
    const CHECK: &str = "bound";
    let e = r.codim;
    if r.classification.is_exceptional() || e < 2 {
        return precondition(CHECK, r, "codimension at least 2, neither minimal degree nor del Pezzo");
    }
    let strand = r.strand(r.nvars);
    let bounds: Vec<u64> = (1..=r.nvars).map(|p| quadratic_bound(e, p)).collect();
    let pass = strand.iter().zip(&bounds).all(|(b, m)| b <= m);
    CheckResult::outcome(
        CHECK,
        &r.name,
        r.seed,
        format!("<= {} then 0", list(&bounds[..e - 1])),
        list(&strand[..e.min(strand.len())]),
        pass,
    )
}

/// Three conditions must agree: the classification is extremal; equality in
/// the bound at some `p` of the witness range (`p = 1` for `e = 3`,
/// `2 ≤ p ≤ e − 2` otherwise); equality at every `1 ≤ p ≤ e − 1`.
pub fn extremal_check(r: &VarietyReport) -> CheckResult {
    const CHECK: &str = "extremal";
    let e = r.codim;
    if e < 3 {
        return precondition(CHECK, r, "codimension at least 3");
    }
    let eq = |p: usize| r.betti.get(p, 1) == quadratic_bound(e, p);
    let by_class = matches!(
        r.classification,
        Classification::AlmostMinimalMaxDepth | Classification::AcmDegreeCodimPlusThree
    );
    let witness = if e == 3 { 1..=1 } else { 2..=e - 2 };
    let some_p = witness.into_iter().any(eq);
    let all_p = (1..e).all(eq);
    let pass = by_class == some_p && some_p == all_p;
    CheckResult::outcome(
        CHECK,
        &r.name,
        r.seed,
        "classification, witness equality and full equality agree",
        format!("class={} ({}), witness={some_p}, all={all_p}", by_class, r.classification),
        pass,
    )
}

/// `β_{e−1,1} ∈ {0, e − 1}`.
pub fn dichotomy_check(r: &VarietyReport) -> CheckResult {
    const CHECK: &str = "dichotomy";
    let e = r.codim;
    if r.classification.is_exceptional() || e < 2 {
        return precondition(CHECK, r, "codimension at least 2, neither minimal degree nor del Pezzo");
    }
    let b = r.betti.get(e - 1, 1);
    CheckResult::outcome(CHECK, &r.name, r.seed, format!("0 or {}", e - 1), b.to_string(), b == 0 || b == e as u64 - 1)
}

/// `β_{p,1} = 0` for `p > e`, and `β_{e,1} ≠ 0` only in minimal degree.
pub fn koszul_vanishing_check(r: &VarietyReport) -> CheckResult {
    let e = r.codim;
    let beyond: u64 = (e + 1..=r.nvars).map(|p| r.betti.get(p, 1)).sum();
    let last = r.betti.get(e, 1);
    let pass = beyond == 0 && (last == 0 || r.classification == Classification::MinimalDegree);
    CheckResult::outcome(
        "koszul-vanishing",
        &r.name,
        r.seed,
        "beta_{p,1} = 0 for p > e; beta_{e,1} != 0 only in minimal degree",
        format!("sum beyond e = {beyond}, beta_(e,1) = {last}, class = {}", r.classification),
        pass,
    )
}

/// Closed-form tables: minimal degree schemes have the linear strand
/// `p·C(e+1,p+1)` and nothing else; del Pezzo schemes have
/// `p·C(e+1,p+1) − C(e,p−1)` below `e` and `β_{e,2} = 1`. Other classes
/// have no closed form here.
pub fn known_table_check(r: &VarietyReport) -> Option<CheckResult> {
    const CHECK: &str = "known-table";
    let e = r.codim;
    match r.classification {
        Classification::MinimalDegree => {
            let want: Vec<u64> = (1..=e).map(|p| minimal_degree_strand(e, p)).collect();
            let got = r.strand(e);
            let pass = got == want && r.betti.reg() == 1;
            Some(CheckResult::outcome(
                CHECK,
                &r.name,
                r.seed,
                format!("{} in one row", list(&want)),
                format!("{} with regularity {}", list(&got), r.betti.reg()),
                pass,
            ))
        }
        Classification::DelPezzo if e >= 2 => {
            let want: Vec<u64> = (1..e).map(|p| del_pezzo_strand(e, p)).collect();
            let got = r.strand(e - 1);
            let top = r.betti.get(e, 2);
            Some(CheckResult::outcome(
                CHECK,
                &r.name,
                r.seed,
                format!("{} and beta_(e,2) = 1", list(&want)),
                format!("{} and beta_(e,2) = {top}", list(&got)),
                got == want && top == 1,
            ))
        }
        _ => None,
    }
}

/// `β_{1,1} = C(e+1,2) − 2` exactly when either `d = e + 2` with depth
/// equal to the dimension, or `d = e + 3` and the scheme is ACM.
pub fn quadric_count_check(r: &VarietyReport) -> CheckResult {
    const CHECK: &str = "quadric-count";
    let e = r.codim;
    if e < 3 {
        return precondition(CHECK, r, "codimension at least 3");
    }
    let hit = r.betti.get(1, 1) == choose(e + 1, 2) - 2;
    let d = r.degree;
    let shape = (d == e as i64 + 2 && r.depth as i64 == r.dim) || (d == e as i64 + 3 && r.acm);
    CheckResult::outcome(
        CHECK,
        &r.name,
        r.seed,
        format!("beta_(1,1) = {} iff degree/depth condition", choose(e + 1, 2) - 2),
        format!("beta_(1,1) = {}, condition = {shape}", r.betti.get(1, 1)),
        hit == shape,
    )
}

/// The alternating sum of the Betti table equals the K-polynomial.
pub fn hilbert_consistency_check(r: &VarietyReport) -> CheckResult {
    let mut numerator = r.numerator.clone();
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    let sum = r.betti.alternating_sum();
    CheckResult::outcome(
        "hilbert-consistency",
        &r.name,
        r.seed,
        format!("{numerator:?}"),
        format!("{sum:?}"),
        sum == numerator,
    )
}

/// `2e + 1 − p` general points of `P^e` satisfy `N_{2,p}`.
pub fn points_property_check<F: Field>(field: &F, e: usize, p: usize, seed: u64) -> CheckResult {
    const CHECK: &str = "points-n2p";
    let instance = format!("points({e},{})", 2 * e + 1 - p.min(2 * e));
    let run = || -> Result<CheckResult> {
        if p == 0 || p > 2 * e - 1 {
            return Err(Error::OutOfRange(format!("p = {p} for e = {e}")));
        }
        let c = general_points(field, e, 2 * e + 1 - p, seed)?;
        let t = betti_table(&c.groebner(), None, None)?;
        let a = t.gl_index();
        let shown = a.map_or("inf".to_string(), |a| a.to_string());
        Ok(CheckResult::outcome(CHECK, &instance, seed, format!("a >= {p}"), format!("a = {shown}"), a.is_none_or(|a| a >= p)))
    };
    CheckResult::from_result(CHECK, &instance, seed, run())
}

fn same_entries(a: &BettiTable, b: &BettiTable) -> bool {
    a.entries().eq(b.entries())
}

/// `β_{p,1}(X) ≤ β_{p,1}(Y)` for a general hyperplane section `Y`, with the
/// whole table preserved when `depth X ≥ 2`.
pub fn lefschetz_check<F: Field>(c: &Construction<F>, r: &VarietyReport, seed: u64) -> CheckResult {
    const CHECK: &str = "lefschetz";
    let run = || -> Result<CheckResult> {
        if r.dim < 1 {
            return Err(Error::InvalidArgument("precondition: positive dimension".into()));
        }
        let y = geometric_linear_section(c, 1, seed)?;
        let ty = betti_table(&y.groebner(), None, None)?;
        let sx = r.strand(r.nvars);
        let sy = ty.strand(1, r.nvars);
        let below = sx.iter().zip(&sy).all(|(a, b)| a <= b);
        let preserved = same_entries(&r.betti, &ty);
        let pass = below && (r.depth < 2 || preserved);
        let expected = if r.depth >= 2 { "equal tables" } else { "strand of X <= strand of section" };
        let actual = format!("X {} section {} tables equal: {preserved}", list(&sx), list(&sy));
        Ok(CheckResult::outcome(CHECK, &r.name, seed, expected, actual, pass))
    };
    CheckResult::from_result(CHECK, &r.name, seed, run())
}

/// Projection from a smooth point `q ∈ X`: for all `p ≥ 1`,
/// `β_{p,1}(X) ≤ β_{p,1}(X_q) + β_{p−1,1}(X_q) + C(e,p)`, with equality for
/// `1 ≤ p ≤ a(X)`; whenever equality holds at some `1 ≤ p ≤ e`, also
/// `β_{1,1}(X) = β_{1,1}(X_q) + e`.
pub fn inner_projection_check<F: Field>(c: &Construction<F>, r: &VarietyReport, seed: u64) -> CheckResult {
    const CHECK: &str = "inner-projection";
    let run = || -> Result<CheckResult> {
        if r.dim < 1 {
            return Err(Error::InvalidArgument("precondition: positive dimension".into()));
        }
        let e = r.codim;
        let q = sample_smooth_point(c, seed)?;
        let xq = inner_projection(&c.ideal, &q)?;
        let tq = betti_table(&xq.groebner(), None, None)?;
        let rhs: Vec<u64> =
            (1..=r.nvars).map(|p| tq.get(p, 1) + tq.get(p - 1, 1) + choose(e, p)).collect();
        let lhs = r.strand(r.nvars);
        let inequality = lhs.iter().zip(&rhs).all(|(a, b)| a <= b);
        let top = r.gl_index.unwrap_or(e).min(e);
        let forced = (1..=top).all(|p| lhs[p - 1] == rhs[p - 1]);
        let some_eq = (1..=e).any(|p| lhs[p - 1] == rhs[p - 1]);
        let first = r.betti.get(1, 1) == tq.get(1, 1) + e as u64;
        let pass = inequality && forced && (!some_eq || first);
        let expected = format!("lhs <= rhs, equality for p <= {top}, beta_(1,1)(X_q) + e when equality occurs");
        let actual = format!(
            "lhs {} rhs {} beta_(1,1): {} vs {}",
            list(&lhs[..e]),
            list(&rhs[..e]),
            r.betti.get(1, 1),
            tq.get(1, 1) + e as u64
        );
        Ok(CheckResult::outcome(CHECK, &r.name, seed, expected, actual, pass))
    };
    CheckResult::from_result(CHECK, &r.name, seed, run())
}

/// The union `Z` of the curve of class `H + 2F` on `S(1, e−1)` and the
/// plane spanned by its line section and vertex line has the quadratic
/// strand of ACM schemes of degree `e + 3`, as realized by `e + 3` general
/// points.
pub fn broken_divisor_check<F: Field>(field: &F, e: usize, seed: u64) -> CheckResult {
    const CHECK: &str = "broken-divisor";
    let instance = format!("curve(1H+2F on S(1,{})) + line section", e.saturating_sub(1));
    let run = || -> Result<CheckResult> {
        if e < 3 {
            return Err(Error::OutOfRange(format!("precondition: e >= 3, got {e}")));
        }
        let spec = ScrollSpec::new(vec![1, e as u32 - 1])?;
        let x = curve_on_scroll(field, 1, e as u32 - 1, 1, 2, seed)?;
        let d = scroll_line_section(field, &spec)?;
        let z = intersect(&x.ideal, &d.ideal)?.groebner();
        let tz = betti_table(&z, None, None)?;
        let reference = general_points(field, e, e + 3, seed)?;
        let tr = betti_table(&reference.groebner(), None, None)?;
        let got = tz.strand(1, e - 1);
        let want = tr.strand(1, e - 1);
        Ok(CheckResult::outcome(CHECK, &instance, seed, list(&want), list(&got), got == want))
    };
    CheckResult::from_result(CHECK, &instance, seed, run())
}
