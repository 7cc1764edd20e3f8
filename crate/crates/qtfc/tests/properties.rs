//! Randomized property tests for the exact-arithmetic foundations and the
//! combinatorial generating functions.

use proptest::prelude::*;
use proptest::strategy::ValueTree;

use qtfc::catalan::{dyck_area_genfun, dyck_count, fuss_catalan, dihedral_qt};
use qtfc::field::{rat, Coeff};
use qtfc::groups::{GroupSpec, NamedFamily};
use qtfc::linalg::Echelon;
use qtfc::poly::Monomial;
use qtfc::qt::{q_binomial, q_bracket, qt_bracket, QTPoly, Specialization};
use qtfc::Cyclotomic;

fn rational() -> impl Strategy<Value = qtfc::Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// A random element of `Q(zeta_k)` with small coefficients.
fn cyclotomic(k: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0i64..k as i64, rational()), 0..4)
        .prop_map(move |terms| Cyclotomic::from_exponents(k, &terms))
}

fn qt_poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((0u32..6, 0u32..6, -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = QTPoly::zero();
        for (q, t, c) in terms {
            p.add_term(q, t, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // --- cyclotomic field axioms -----------------------------------------

    #[test]
    fn cyclotomic_mul_distributes(
        k in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
    ) {
        // Deterministic inner sampling keeps the strategy k-dependent.
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        for _ in 0..8 {
            let a = cyclotomic(k).new_tree(&mut runner).unwrap().current();
            let b = cyclotomic(k).new_tree(&mut runner).unwrap().current();
            let c = cyclotomic(k).new_tree(&mut runner).unwrap().current();
            let lhs = (a.clone() + b.clone()) * c.clone();
            let rhs = a.clone() * c.clone() + b.clone() * c.clone();
            prop_assert_eq!(lhs, rhs);
            // Multiplicative inverse.
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a.clone() * ai, Cyclotomic::from_rational_at(k, rat(1, 1)));
            }
            // Conjugation is a ring homomorphism.
            prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        }
    }

    #[test]
    fn roots_of_unity_have_the_right_order(k in 1u32..=12, e in 0i64..24) {
        let z = Cyclotomic::root(k, e);
        let mut pow = Cyclotomic::from_rational_at(k, rat(1, 1));
        for _ in 0..k {
            pow = pow * z.clone();
        }
        prop_assert_eq!(pow, Cyclotomic::from_rational_at(k, rat(1, 1)));
    }

    // --- q,t-polynomials ---------------------------------------------------

    #[test]
    fn qt_swap_is_an_involution(p in qt_poly()) {
        prop_assert_eq!(p.swap_qt().swap_qt(), p);
    }

    #[test]
    fn qt_mul_commutes_with_evaluation(p in qt_poly(), r in qt_poly()) {
        let prod = p.mul(&r);
        prop_assert_eq!(prod.eval_one(), p.eval_one() * r.eval_one());
        prop_assert_eq!(
            prod.specialize(Specialization::TOne),
            p.specialize(Specialization::TOne).mul(&r.specialize(Specialization::TOne))
        );
        prop_assert_eq!(prod.swap_qt(), p.swap_qt().mul(&r.swap_qt()));
    }

    #[test]
    fn brackets_evaluate_to_n(n in 0u32..40) {
        prop_assert_eq!(qt_bracket(n).eval_one(), n as i64);
        prop_assert_eq!(q_bracket(n).eval_one(), n as i64);
        prop_assert!(qt_bracket(n).is_symmetric());
    }

    #[test]
    fn q_binomial_symmetry(n in 0u32..12, k in 0u32..12) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
        let mut binom = 1i64;
        for i in 0..k as i64 {
            binom = binom * (n as i64 - i) / (i + 1);
        }
        prop_assert_eq!(q_binomial(n, k).eval_one(), binom);
    }

    #[test]
    fn laurent_division_inverts_multiplication(p in qt_poly(), r in qt_poly()) {
        let p1 = p.specialize(Specialization::TOne);
        let r1 = r.specialize(Specialization::TOne);
        prop_assume!(!r1.is_zero());
        let quot = p1.mul(&r1).div_exact(&r1).unwrap();
        prop_assert_eq!(quot, p1);
    }

    // --- monomials ----------------------------------------------------------

    #[test]
    fn monomial_mul_div_roundtrip(
        xa in prop::collection::vec(0u16..5, 3),
        ya in prop::collection::vec(0u16..5, 3),
        xb in prop::collection::vec(0u16..5, 3),
        yb in prop::collection::vec(0u16..5, 3),
    ) {
        let a = Monomial { xexp: xa, yexp: ya };
        let b = Monomial { xexp: xb, yexp: yb };
        let ab = a.mul(&b);
        prop_assert_eq!(ab.div(&b), Some(a.clone()));
        let (da, db) = (a.bidegree(), b.bidegree());
        prop_assert_eq!(ab.bidegree(), (da.0 + db.0, da.1 + db.1));
        prop_assert_eq!(a.swap_xy().swap_xy(), a);
    }

    // --- exact linear algebra -----------------------------------------------

    #[test]
    fn echelon_rank_is_stable_under_row_operations(
        rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..5),
        c1 in -3i64..=3,
        c2 in -3i64..=3,
    ) {
        let rows: Vec<Vec<qtfc::Rational>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
            .collect();
        let mut ech: Echelon<qtfc::Rational> = Echelon::new(4);
        for r in &rows {
            ech.insert(r.clone());
        }
        let rank = ech.rank();
        prop_assert!(rank <= 4 && rank <= rows.len());
        // A linear combination of inserted rows never increases the rank.
        let mut combo = vec![rat(0, 1); 4];
        for (i, r) in rows.iter().enumerate() {
            let c = if i % 2 == 0 { rat(c1, 1) } else { rat(c2, 1) };
            for (slot, x) in combo.iter_mut().zip(r) {
                *slot += &c * x;
            }
        }
        prop_assert!(ech.contains(&combo));
        ech.insert(combo);
        prop_assert_eq!(ech.rank(), rank);
    }

    // --- combinatorics --------------------------------------------------------

    #[test]
    fn dyck_area_genfun_counts_paths(n in 1u32..6, m in 1u32..4) {
        prop_assert_eq!(dyck_area_genfun(n, m).eval_one(), dyck_count(n, m));
    }

    #[test]
    fn dihedral_closed_form_counts(k in 2u32..10, m in 1u32..5) {
        let spec = GroupSpec::build(NamedFamily::parse(&format!("I2({})", k)).unwrap()).unwrap();
        let poly = dihedral_qt(k, m);
        prop_assert_eq!(poly.eval_one(), fuss_catalan(&spec, m).unwrap());
        prop_assert!(poly.is_symmetric());
    }
}
