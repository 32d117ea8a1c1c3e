//! Randomized checks of ring laws, specialization homomorphisms, operator
//! identities and oracle invariance.

use proptest::prelude::*;

use unilink::braid::{markov_moves, BraidWord, LinkData};
use unilink::oracles::{alexander, jones_tl};
use unilink::ring::localized::eval_cyclo_poly;
use unilink::ring::{
    d4, divides, exact_div, Coeff, Cyclo, from_json, habiro_generator, parse_laurent, quantum_int, to_json, LaurentPoly, Monomial,
    Var,
};
use unilink::specialize::{psi_ado, psi_jones, psi_universal};
use unilink::unify::{eq_in_quotient, habiro_reduce};
use unilink::verma::{a_gamma, BraidAction, StateVector};

const VARS: [Var; 5] = [Var::D, Var::Y, Var::X(1), Var::X(2), Var::U(1)];

fn term(y_free: bool) -> impl Strategy<Value = (Vec<i32>, i128)> {
    (prop::collection::vec(-3i32..=3, VARS.len()), -5i128..=5).prop_map(move |(mut e, c)| {
        if y_free {
            e[1] = 0;
        } else {
            e[1] = e[1].abs();
        }
        (e, c)
    })
}

fn build(terms: Vec<(Vec<i32>, i128)>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (e, c) in terms {
        p.add_term(Monomial::from_pairs(VARS.iter().copied().zip(e)), c);
    }
    p
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(term(false), 0..5).prop_map(build)
}

fn y_free_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(term(true), 0..5).prop_map(build)
}

fn braid(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    let gens: Vec<i32> = (1..n as i32).flat_map(|k| [k, -k]).collect();
    prop::collection::vec(prop::sample::select(gens), 0..=len).prop_map(move |w| BraidWord::new(n, w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn cyclotomic_arithmetic_matches_complex_evaluation(
        m in prop::sample::select(vec![4u32, 8, 12, 16, 20]),
        a in prop::collection::vec(-4i128..=4, 0..8),
        b in prop::collection::vec(-4i128..=4, 0..8),
    ) {
        let (x, y) = (Cyclo::from_int_coeffs(m, &a), Cyclo::from_int_coeffs(m, &b));
        let (xc, yc) = (x.to_complex(), y.to_complex());
        let close = |u: (f64, f64), v: (f64, f64)| (u.0 - v.0).abs() < 1e-9 && (u.1 - v.1).abs() < 1e-9;
        prop_assert!(close(x.times(&y).to_complex(), (xc.0 * yc.0 - xc.1 * yc.1, xc.0 * yc.1 + xc.1 * yc.0)));
        prop_assert!(close(x.plus(&y).to_complex(), (xc.0 + yc.0, xc.1 + yc.1)));
        if let Some(inv) = y.inverse() {
            prop_assert!(close(inv.times(&y).to_complex(), (1.0, 0.0)));
        }
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(parse_laurent(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(from_json::<i128>(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(exact_div(&a.mul(&b), &b), Some(a));
    }

    #[test]
    fn specializations_are_homomorphisms(a in poly(), b in poly(), m in 2usize..=4) {
        let psi = psi_ado(m).unwrap();
        prop_assert_eq!(psi.apply(&a.mul(&b)).unwrap(), psi.apply(&a).unwrap().mul(&psi.apply(&b).unwrap()));
        prop_assert_eq!(psi.apply(&a.add(&b)).unwrap(), psi.apply(&a).unwrap().add(&psi.apply(&b).unwrap()));
        let j = psi_jones(&[m, 2]).unwrap();
        prop_assert_eq!(j.apply(&a.mul(&b)).unwrap(), j.apply(&a).unwrap().mul(&j.apply(&b).unwrap()));
        let (ua, ub) = (psi_universal(m, &a).unwrap(), psi_universal(m, &b).unwrap());
        prop_assert_eq!(psi_universal(m, &a.mul(&b)).unwrap(), ua.mul(&ub));
        prop_assert_eq!(psi_universal(m, &a.add(&b)).unwrap(), ua.add(&ub));
    }

    #[test]
    fn ado_and_universal_agree_without_y(a in y_free_poly(), m in 2usize..=4, l1 in 0.05f64..0.95, l2 in 0.05f64..0.95) {
        let lambdas = [l1 * 7.0, l2 * 7.0];
        let ado = eval_cyclo_poly(&psi_ado(m).unwrap().apply(&a).unwrap(), m as u32, &lambdas);
        let uni = psi_universal(m, &a).unwrap().eval(&lambdas);
        prop_assert!((ado.0 - uni.0).abs() < 1e-9 && (ado.1 - uni.1).abs() < 1e-9, "{:?} vs {:?}", ado, uni);
    }

    #[test]
    fn habiro_reduction_is_a_normal_form(a in poly(), b in poly(), n in 2usize..=4) {
        let g = habiro_generator(n as u32);
        let ra = habiro_reduce(&a, n).unwrap();
        prop_assert_eq!(habiro_reduce(&ra, n).unwrap(), ra.clone());
        prop_assert!(divides(&g, &a.sub(&ra)));
        prop_assert_eq!(habiro_reduce(&a.add(&g.mul(&b)), n).unwrap(), ra.clone());
        let rb = habiro_reduce(&b, n).unwrap();
        prop_assert_eq!(habiro_reduce(&a.add(&b), n).unwrap(), ra.add(&rb));
    }

    #[test]
    fn quotient_levels_nest(a in y_free_poly(), n in 2usize..=4) {
        let p = a.mul(&habiro_generator(n as u32));
        prop_assert!(psi_ado(n).unwrap().apply(&a.mul(&quantum_int(n as u32, &d4()))).unwrap().is_zero());
        for k in 2..=n {
            prop_assert!(eq_in_quotient(&p, &LaurentPoly::zero(), k).unwrap());
        }
        prop_assert!(eq_in_quotient(&habiro_reduce(&p, n).unwrap(), &LaurentPoly::zero(), n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn braid_action_respects_relations(
        w in braid(3, 3),
        state in prop::collection::vec(0u16..3, 3),
        colours in prop::collection::vec(1u16..=3, 3),
    ) {
        let mut act = BraidAction::generic();
        let v = StateVector::basis(state);
        let b = |l: &[i32]| BraidWord::new(3, l.to_vec()).unwrap();
        let lhs = act.apply(&w.compose(&b(&[1, 2, 1])), &colours, &v);
        let rhs = act.apply(&w.compose(&b(&[2, 1, 2])), &colours, &v);
        prop_assert_eq!(lhs, rhs);
        let round = act.apply(&w.compose(&w.inverse()), &colours, &v);
        prop_assert_eq!(round, v);
    }

    #[test]
    fn truncated_action_respects_relations_at_jones_colours(
        state in prop::collection::vec(0u16..2, 3),
        caps in prop::collection::vec(2usize..=3, 3),
    ) {
        let mut act = BraidAction::truncated(caps.clone());
        let psi = psi_jones(&caps).unwrap();
        let v = StateVector::basis(state);
        let b = |l: &[i32]| BraidWord::new(3, l.to_vec()).unwrap();
        let lhs = act.apply(&b(&[1, -2, 1]), &[1, 2, 3], &v);
        let rhs = act.apply(&b(&[1, -2, 1]).compose(&b(&[2, 1, 2])).compose(&b(&[-1, -2, -1])), &[1, 2, 3], &v);
        let diff = lhs.add(&rhs.scale(&LaurentPoly::constant(-1)));
        for (_, c) in diff.iter() {
            prop_assert!(psi.apply(c).unwrap().is_zero());
        }
    }

    #[test]
    fn oracles_are_markov_invariant(w in braid(3, 6)) {
        for mv in markov_moves(&w) {
            prop_assert_eq!(alexander(&mv.braid), alexander(&w));
            prop_assert_eq!(jones_tl(&mv.braid), jones_tl(&w));
        }
    }

    #[test]
    fn knot_invariant_is_conjugation_invariant(w in braid(3, 4)) {
        let link = LinkData::from_braid(&w);
        prop_assume!(link.components == 1);
        let base = a_gamma(&w, 2, &link).unwrap();
        for mv in markov_moves(&w).into_iter().filter(|m| m.braid.strands() == 3) {
            let moved = a_gamma(&mv.braid, 2, &LinkData::from_braid(&mv.braid)).unwrap();
            prop_assert!(eq_in_quotient(&moved, &base, 2).unwrap(), "{}", mv.description);
        }
    }
}
