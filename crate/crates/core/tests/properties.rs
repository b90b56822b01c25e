//! Property tests for the algebraic invariants of the core types.

use eigenscheme::eigen::{
    eigenscheme_ideal, jordan_matrix, transport, EigenvalueBlocks, JordanSpec,
};
use eigenscheme::groebner::{buchberger, ideal_equal, intersect, member, reduce};
use eigenscheme::matrix::QMatrix;
use eigenscheme::oracle::jordan_type_oracle;
use eigenscheme::poly::Polynomial;
use eigenscheme::rat::{rat_int, Rat};
use eigenscheme::ring::{Monomial, MonomialOrder, Ring};
use eigenscheme::Ideal;
use proptest::prelude::*;

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Ring>();
    assert_send_sync::<Monomial>();
    assert_send_sync::<Polynomial>();
    assert_send_sync::<Ideal>();
    assert_send_sync::<QMatrix>();
    assert_send_sync::<JordanSpec>();
    assert_send_sync::<eigenscheme::GroebnerBasis>();
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(Monomial::from_exps)
}

fn any_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::elimination(1)),
    ]
}

fn small_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
    let n = ring.num_vars();
    prop::collection::vec((-4i64..=4, prop::collection::vec(0u32..3, n)), 1..4).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &ring,
                terms
                    .into_iter()
                    .map(|(c, e)| (rat_int(c), Monomial::from_exps(e)))
                    .collect(),
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_is_multiplicative(u in monomial(4), v in monomial(4), w in monomial(4), ord in any_order()) {
        let uv = ord.cmp_mono(&u, &v);
        let uw_vw = ord.cmp_mono(&u.mul(&w), &v.mul(&w));
        prop_assert_eq!(uv, uw_vw);
    }

    #[test]
    fn one_is_minimal(u in monomial(4), ord in any_order()) {
        let one = Monomial::one(4);
        prop_assert_ne!(ord.cmp_mono(&u, &one), std::cmp::Ordering::Less);
    }

    #[test]
    fn construction_routes_agree(
        terms in prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..4, 3)), 0..8),
        seed in any::<u64>(),
    ) {
        let ring = Ring::new(3);
        let raw: Vec<(Rat, Monomial)> = terms
            .iter()
            .map(|(c, e)| (rat_int(*c), Monomial::from_exps(e.clone())))
            .collect();
        let a = Polynomial::from_terms(&ring, raw.clone());
        // a shuffled, split construction route
        let mut shuffled = raw;
        let mut state = seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let mid = shuffled.len() / 2;
        let b = Polynomial::from_terms(&ring, shuffled[..mid].to_vec())
            .checked_add(&Polynomial::from_terms(&ring, shuffled[mid..].to_vec()))
            .unwrap();
        prop_assert_eq!(a.terms(), b.terms());
    }

    #[test]
    fn reduce_idempotent(
        f in small_poly(Ring::new(3)),
        g1 in small_poly(Ring::new(3)),
        g2 in small_poly(Ring::new(3)),
    ) {
        let basis = vec![g1, g2];
        let ord = MonomialOrder::Grevlex;
        let once = reduce(&f, &basis, &ord).unwrap();
        let twice = reduce(&once, &basis, &ord).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn printer_parser_round_trip(f in small_poly(Ring::new(3))) {
        let ring = Ring::new(3);
        let text = f.to_string();
        let back = eigenscheme::parse::parse_polynomial(&ring, &text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reduce_postcondition(
        f in small_poly(Ring::new(3)),
        g1 in small_poly(Ring::new(3)),
        g2 in small_poly(Ring::new(3)),
    ) {
        let ring = Ring::new(3);
        let basis: Vec<Polynomial> = [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
        let ord = MonomialOrder::Grevlex;
        let nf = reduce(&f, &basis, &ord).unwrap();
        // no term of the normal form is divisible by a leading monomial
        for t in nf.terms() {
            for g in &basis {
                let lt = g.leading_term(&ord).unwrap();
                prop_assert!(!lt.monomial.divides(&t.monomial));
            }
        }
        // f − nf lies in the ideal generated by the basis
        if !basis.is_empty() {
            let diff = &f - &nf;
            let ideal = Ideal::new(&ring, basis).unwrap();
            prop_assert!(member(&diff, &ideal).unwrap());
        }
    }

    #[test]
    fn intersection_is_symmetric(
        g1 in small_poly(Ring::new(2)),
        g2 in small_poly(Ring::new(2)),
        g3 in small_poly(Ring::new(2)),
    ) {
        let ring = Ring::new(2);
        let a = Ideal::new(&ring, vec![g1, g2]).unwrap();
        let b = Ideal::new(&ring, vec![g3]).unwrap();
        let ab = intersect(&a, &b).unwrap();
        let ba = intersect(&b, &a).unwrap();
        prop_assert!(ideal_equal(&ab, &ba).unwrap());
    }

    #[test]
    fn buchberger_generates_the_same_ideal(
        g1 in small_poly(Ring::new(3)),
        g2 in small_poly(Ring::new(3)),
    ) {
        let ring = Ring::new(3);
        let i = Ideal::new(&ring, vec![g1, g2]).unwrap();
        let gb = buchberger(&i, &MonomialOrder::Grevlex).unwrap();
        let j = gb.to_ideal(&ring);
        prop_assert!(ideal_equal(&i, &j).unwrap());
        // every generator reduces to zero against the basis
        for g in i.generators() {
            prop_assert!(member(g, &j).unwrap());
        }
    }

    #[test]
    fn intersection_containments(
        g1 in small_poly(Ring::new(2)),
        g2 in small_poly(Ring::new(2)),
    ) {
        let ring = Ring::new(2);
        let a = Ideal::new(&ring, vec![g1.clone()]).unwrap();
        let b = Ideal::new(&ring, vec![g2.clone()]).unwrap();
        let c = intersect(&a, &b).unwrap();
        for g in c.generators() {
            prop_assert!(member(g, &a).unwrap());
            prop_assert!(member(g, &b).unwrap());
        }
        // I·J ⊆ I ∩ J
        if !g1.is_zero() && !g2.is_zero() {
            let prod = &g1 * &g2;
            prop_assert!(member(&prod, &c).unwrap());
        }
    }

    #[test]
    fn eigenscheme_invariant_under_scalar_shift(
        entries in prop::collection::vec(-4i64..=4, 9),
        c in -5i64..=5,
    ) {
        let a = QMatrix::from_rows(
            entries.chunks(3).map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect(),
        ).unwrap();
        let shifted = a.shift(&rat_int(c)).unwrap();
        let ia = eigenscheme_ideal(&a).unwrap();
        let ib = eigenscheme_ideal(&shifted).unwrap();
        prop_assert!(ideal_equal(&ia, &ib).unwrap());
    }

    #[test]
    fn transport_composes(
        entries_c in prop::collection::vec(-3i64..=3, 9),
        entries_d in prop::collection::vec(-3i64..=3, 9),
    ) {
        let c = QMatrix::from_rows(
            entries_c.chunks(3).map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect(),
        ).unwrap();
        let d = QMatrix::from_rows(
            entries_d.chunks(3).map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect(),
        ).unwrap();
        prop_assume!(c.rank() == 3 && d.rank() == 3);
        let a = QMatrix::from_int_rows(&[&[2, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let i = eigenscheme_ideal(&a).unwrap();
        let lhs = transport(&transport(&i, &c).unwrap(), &d).unwrap();
        let rhs = transport(&i, &c.mul(&d).unwrap()).unwrap();
        prop_assert!(ideal_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn substitution_inverse_round_trip(
        entries in prop::collection::vec(-3i64..=3, 9),
        f in small_poly(Ring::new(3)),
    ) {
        let c = QMatrix::from_rows(
            entries.chunks(3).map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect(),
        ).unwrap();
        prop_assume!(c.rank() == 3);
        let ring = Ring::new(3);
        let images_of = |m: &QMatrix| -> Vec<Polynomial> {
            (0..3)
                .map(|i| {
                    let mut acc = Polynomial::zero(&ring);
                    for j in 0..3 {
                        acc = acc.checked_add(&Polynomial::var(&ring, j).scale(m.get(i, j))).unwrap();
                    }
                    acc
                })
                .collect()
        };
        let inv = c.inverse().unwrap();
        let back = f
            .substitute(&images_of(&c)).unwrap()
            .substitute(&images_of(&inv)).unwrap();
        prop_assert_eq!(back, f);
    }
}

fn arb_spec(max_size: usize) -> impl Strategy<Value = JordanSpec> {
    // up to 3 eigenvalues with structured blocks, total dimension bounded
    prop::collection::vec(
        (
            prop::collection::vec((1usize..=4, 1usize..=3), 1..=2),
            -6i64..=6,
        ),
        1..=3,
    )
    .prop_filter_map("valid spec", move |mut raw| {
        // canonical eigenvalue order (ascending), matching the oracle output
        raw.sort_by_key(|(_, lam)| *lam);
        let mut eigenvalues = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for (blocks, lam) in raw {
            if !seen.insert(lam) {
                return None;
            }
            let mut sizes: Vec<(usize, usize)> = blocks;
            sizes.sort_by_key(|&(size, _)| std::cmp::Reverse(size));
            sizes.dedup_by_key(|b| b.0);
            total += sizes.iter().map(|(r, k)| r * k).sum::<usize>();
            eigenvalues.push(EigenvalueBlocks::new(rat_int(lam), sizes));
        }
        if total > max_size {
            return None;
        }
        JordanSpec::new(eigenvalues).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jordan_oracle_round_trip(spec in arb_spec(8)) {
        let j = jordan_matrix(&spec);
        prop_assert_eq!(jordan_type_oracle(&j).unwrap(), spec);
    }

    #[test]
    fn eigenvectors_annihilate_the_ideal(spec in arb_spec(6)) {
        let j = jordan_matrix(&spec);
        let ideal = eigenscheme_ideal(&j).unwrap();
        for (_, basis) in eigenscheme::oracle::eigenspaces(&j).unwrap() {
            for v in basis {
                for g in ideal.generators() {
                    prop_assert_eq!(g.eval(&v).unwrap(), rat_int(0));
                }
            }
        }
    }
}
