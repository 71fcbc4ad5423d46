//! Property tests for the algebra layer: ordering admissibility, normal
//! forms, S-polynomial cancellation, and ring axioms against a naive
//! term-by-term multiplication oracle.

use dyngb::{reduce, s_polynomial, Coeff, Polynomial, Term, TermOrdering, TieBreak};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_term(nvars: usize, max_exp: u32) -> impl Strategy<Value = Term> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Term::new)
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..=3, nvars)), 1..6).prop_map(
        move |terms| {
            Polynomial::from_int_terms(nvars, terms.into_iter().map(|(c, e)| (c, e)))
        },
    )
}

fn arb_ordering(nvars: usize) -> impl Strategy<Value = TermOrdering> {
    prop_oneof![
        Just(TermOrdering::lex()),
        Just(TermOrdering::grevlex()),
        prop::collection::vec(1i64..=6, nvars).prop_map(TermOrdering::weighted),
        prop::collection::vec(1i64..=6, nvars)
            .prop_map(|w| TermOrdering::weighted_with(w, TieBreak::Lex)),
    ]
}

proptest! {
    // Compatibility with divisibility: t | u and t != u implies t < u.
    #[test]
    fn admissible_divisibility(
        o in arb_ordering(4),
        t in arb_term(4, 3),
        extra in arb_term(4, 3),
    ) {
        let u = t.mul(&extra);
        if t != u {
            prop_assert_eq!(o.compare(&t, &u), std::cmp::Ordering::Less);
        }
    }

    // Compatibility with multiplication: t < u implies t*v < u*v.
    #[test]
    fn admissible_multiplication(
        o in arb_ordering(4),
        t in arb_term(4, 3),
        u in arb_term(4, 3),
        v in arb_term(4, 3),
    ) {
        let cmp = o.compare(&t, &u);
        prop_assert_eq!(o.compare(&t.mul(&v), &u.mul(&v)), cmp);
    }

    // The remainder is a normal form: no term is divisible by any lead.
    #[test]
    fn reduce_is_a_normal_form(
        o in arb_ordering(3),
        p in arb_poly(3),
        g1 in arb_poly(3),
        g2 in arb_poly(3),
    ) {
        let basis = vec![g1, g2];
        let r = reduce(&o, &p, &basis);
        for t in r.support() {
            for g in &basis {
                if let Some((lt, _)) = g.leading_term(&o) {
                    prop_assert!(!lt.divides(t), "term {} reducible by {}", t, lt);
                }
            }
        }
    }

    // p - reduce(p, G) lies in the ideal: re-reducing the difference by
    // the same basis gives zero.
    #[test]
    fn reduce_difference_in_span(
        o in arb_ordering(3),
        p in arb_poly(3),
        g1 in arb_poly(3),
    ) {
        let basis = vec![g1];
        let r = reduce(&o, &p, &basis);
        let diff = p.sub(&r);
        prop_assert!(reduce(&o, &diff, &basis).is_zero());
    }

    // Leading terms of the two S-polynomial halves cancel.
    #[test]
    fn spoly_cancels_the_lcm(
        o in arb_ordering(3),
        f in arb_poly(3),
        g in arb_poly(3),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let s = s_polynomial(&o, &f, &g);
        let lcm = f
            .leading_term(&o)
            .unwrap()
            .0
            .lcm(g.leading_term(&o).unwrap().0);
        if let Some((lt, _)) = s.leading_term(&o) {
            prop_assert_eq!(o.compare(lt, &lcm), std::cmp::Ordering::Less);
        }
    }

    // Multiplication distributes and associates, checked against a naive
    // coefficient-accumulation oracle.
    #[test]
    fn ring_axioms(
        a in arb_poly(3),
        b in arb_poly(3),
        c in arb_poly(3),
    ) {
        prop_assert_eq!(a.mul(&b), naive_mul(&a, &b));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }
}

/// Independent multiplication: accumulate coefficient products term by
/// term into a map, no reuse of Polynomial::mul.
fn naive_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut acc: std::collections::BTreeMap<Term, Coeff> = Default::default();
    for (ta, ca) in a.iter() {
        for (tb, cb) in b.iter() {
            let t = ta.mul(tb);
            let entry = acc.entry(t).or_insert_with(Coeff::zero);
            *entry += ca * cb;
        }
    }
    Polynomial::from_terms(a.nvars(), acc.into_iter().map(|(t, c)| (c, t)))
}
