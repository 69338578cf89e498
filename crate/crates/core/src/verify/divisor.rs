//! Divisor classes of schemes lying on rational normal scrolls, read off
//! from degree and sectional genus.
//!
//! On a smooth surface scroll of degree `e` with `H² = e`, `H·F = 1`,
//! `F² = 0` and `K = −2H + (e−2)F`, a curve of class `αH + βF` has degree
//! `αe + β` and arithmetic genus given by adjunction. Substituting
//! `β = d − αe` leaves `eα² − (2d+e−2)α + (2d+2π−2) = 0`.

use crate::constructions::{curve_on_scroll, scroll, Construction, DivisorClass, ScrollSpec};
use crate::error::{Error, Result};
use crate::groebner::ideal_subset;
use crate::invariants::{hilbert_data, sectional_genus};
use crate::kernel::field::Field;

use super::report::CheckResult;

/// Integer solutions `α ≥ 1` of the adjunction quadratic, smallest first.
fn class_from_degree_genus(e: i64, d: i64, genus: i64) -> Result<DivisorClass> {
    let (a, b, c) = (e as i128, -(2 * d + e - 2) as i128, (2 * d + 2 * genus - 2) as i128);
    (1..=d.max(1) as i128)
        .find(|&alpha| a * alpha * alpha + b * alpha + c == 0)
        .map(|alpha| DivisorClass::HF { alpha: alpha as i64, beta: d - alpha as i64 * e })
        .ok_or(Error::NoIntegerSolution { degree: d, genus })
}

/// Class of the scheme `X` on the scroll `Y`, which must contain it. When
/// `Y` is a cone over a rational normal curve (second-largest block zero)
/// the class group is generated by the ruling `R` and the class is `d·R`.
pub fn infer_divisor_class<F: Field>(x: &Construction<F>, y: &ScrollSpec, seed: u64) -> Result<DivisorClass> {
    let field = x.ideal.ring().field();
    let sy = scroll(field, y)?;
    if sy.ideal.ring().nvars() != x.ideal.ring().nvars() {
        return Err(Error::ContainmentFailed(format!("{y} and {} live in different spaces", x.name)));
    }
    let gb = x.groebner();
    if !ideal_subset(&sy.ideal, &gb)? {
        return Err(Error::ContainmentFailed(format!("{} does not lie on {y}", x.name)));
    }
    let h = hilbert_data(&gb)?;
    if h.projective_dimension() as usize + 1 != y.dim() {
        return Err(Error::InvalidArgument(format!("{} is not a divisor on {y}", x.name)));
    }
    let blocks = y.blocks();
    if blocks[blocks.len() - 2] == 0 {
        return Ok(DivisorClass::R { m: h.degree });
    }
    let genus = sectional_genus(&gb, seed)?;
    class_from_degree_genus(y.degree() as i64, h.degree, genus)
}

/// Containment in `Y` plus the expected class.
pub fn divisor_class_check<F: Field>(
    x: &Construction<F>,
    y: &ScrollSpec,
    expected: DivisorClass,
    seed: u64,
) -> CheckResult {
    const CHECK: &str = "divisor-class";
    let instance = format!("{} on {y}", x.name);
    match infer_divisor_class(x, y, seed) {
        Ok(got) => CheckResult::outcome(CHECK, &instance, seed, expected.to_string(), got.to_string(), got == expected),
        Err(err) => CheckResult::failed(CHECK, &instance, seed, err),
    }
}

/// The balanced surface scroll of degree `e` hosting genus-two curves in
/// the class `2H + (3−e)F`.
pub fn genus_two_host(e: u32) -> (u32, u32) {
    (e / 2, e - e / 2)
}

/// A curve of class `2H + (3−e)F` on the balanced scroll of degree `e`: the
/// class is recovered, and the curve is ACM of degree `e + 3` and genus 2.
pub fn genus_two_check<F: Field>(field: &F, e: u32, seed: u64) -> CheckResult {
    const CHECK: &str = "genus-two";
    let (a, b) = genus_two_host(e);
    let k = 3 - e as i64;
    let instance = format!("curve(2H{k:+}F on S({a},{b}))");
    let run = || -> Result<CheckResult> {
        if e < 3 {
            return Err(Error::OutOfRange(format!("precondition: e >= 3, got {e}")));
        }
        let c = curve_on_scroll(field, a, b, 2, k, seed)?;
        let y = ScrollSpec::new(vec![a, b])?;
        let class = infer_divisor_class(&c, &y, seed)?;
        let gb = c.groebner();
        let h = hilbert_data(&gb)?;
        let genus = sectional_genus(&gb, seed)?;
        let acm = crate::invariants::betti_table(&gb, None, None)?.pd() == h.codimension();
        let want = DivisorClass::HF { alpha: 2, beta: k };
        let pass = class == want && acm && h.degree == e as i64 + 3 && genus == 2;
        Ok(CheckResult::outcome(
            CHECK,
            &instance,
            seed,
            format!("{want}, ACM, degree {}, genus 2", e + 3),
            format!("{class}, ACM {acm}, degree {}, genus {genus}", h.degree),
            pass,
        ))
    };
    CheckResult::from_result(CHECK, &instance, seed, run())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjunction_roots() {
        // degree e+2 rational curves are H+2F
        for e in 3..8 {
            assert_eq!(class_from_degree_genus(e, e + 2, 0).unwrap(), DivisorClass::HF { alpha: 1, beta: 2 });
        }
        // degree e+3 genus two curves are 2H+(3−e)F
        for e in 3..8 {
            assert_eq!(class_from_degree_genus(e, e + 3, 2).unwrap(), DivisorClass::HF { alpha: 2, beta: 3 - e });
        }
        assert_eq!(
            class_from_degree_genus(3, 5, 5).unwrap_err(),
            Error::NoIntegerSolution { degree: 5, genus: 5 }
        );
    }
}
