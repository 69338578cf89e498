//! Property tests for polynomial arithmetic, Groebner normal forms and
//! Betti tables of random homogeneous ideals.

mod common;

use proptest::prelude::*;
use syzygy::groebner::Ideal;
use syzygy::invariants::{betti_table, hilbert_data};
use syzygy::kernel::{MonomialOrder, Polynomial, PrimeField, Ring, RingRef};

const N: usize = 3;

fn ring(order: MonomialOrder) -> RingRef<PrimeField> {
    Ring::new(PrimeField::default(), N, order).unwrap()
}

fn poly(r: &RingRef<PrimeField>, terms: &[([u16; N], u32)]) -> Polynomial<PrimeField> {
    Polynomial::from_terms(r, terms.iter().map(|(e, c)| (r.monomial(e), *c)).collect())
}

fn any_terms() -> impl Strategy<Value = Vec<([u16; N], u32)>> {
    prop::collection::vec((prop::array::uniform3(0u16..4), 1u32..32003), 0..6)
}

/// Terms of a form of degree `d`.
fn form_terms(d: u16) -> impl Strategy<Value = Vec<([u16; N], u32)>> {
    prop::collection::vec((0..=d, 0..=d, 1u32..32003), 1..5).prop_map(move |ts| {
        ts.into_iter().filter(|(a, b, _)| a + b <= d).map(|(a, b, c)| ([a, b, d - a - b], c)).collect()
    })
}

fn ideal_of_forms(max_deg: u16) -> impl Strategy<Value = Vec<Vec<([u16; N], u32)>>> {
    prop::collection::vec((1..=max_deg).prop_flat_map(form_terms), 1..4)
}

fn build_ideal(r: &RingRef<PrimeField>, forms: &[Vec<([u16; N], u32)>]) -> Option<Ideal<PrimeField>> {
    let gens: Vec<_> = forms.iter().map(|t| poly(r, t)).filter(|f| !f.is_zero()).collect();
    (!gens.is_empty()).then(|| Ideal::new(r, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_is_a_commutative_ring(f in any_terms(), g in any_terms(), h in any_terms()) {
        let r = ring(MonomialOrder::Grevlex);
        let (f, g, h) = (poly(&r, &f), poly(&r, &g), poly(&r, &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn normal_forms_are_canonical(forms in ideal_of_forms(3), f in any_terms(), lex in any::<bool>()) {
        let r = ring(if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex });
        let Some(ideal) = build_ideal(&r, &forms) else { return Ok(()) };
        let gb = ideal.groebner();
        let f = poly(&r, &f);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)).unwrap());
        for g in ideal.generators() {
            prop_assert!(gb.contains(&(&f * g)).unwrap());
        }
        for t in nf.terms() {
            prop_assert!(gb.is_standard(&t.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn betti_tables_match_resolutions(forms in ideal_of_forms(2)) {
        let r = ring(MonomialOrder::Grevlex);
        let Some(ideal) = build_ideal(&r, &forms) else { return Ok(()) };
        let gb = ideal.groebner();
        prop_assume!(!gb.is_unit());
        let t = betti_table(&gb, None, None).unwrap();
        let ours: Vec<_> = t.entries().collect();
        prop_assert_eq!(ours, common::resolution_oracle(&ideal, 6));
        let mut num = hilbert_data(&gb).unwrap().numerator;
        while num.last() == Some(&0) {
            num.pop();
        }
        prop_assert_eq!(t.alternating_sum(), num);
    }
}
