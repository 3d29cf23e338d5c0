//! Property tests for the normal-ordered Weyl algebra: associativity,
//! filtration subadditivity, the grading identity against the weighted Euler
//! field, and the Fourier transform being an algebra map.

use proptest::prelude::*;
use tamecert_core::exact::{rat, rat_int, Rat};
use tamecert_core::weyl::{euler_field, WeightVector, WeylElement};

fn arb_monomial(dim: usize) -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Rat)> {
    (
        prop::collection::vec(0u32..=4, dim),
        prop::collection::vec(0u32..=4, dim),
        (-6i64..=6, 1i64..=3),
    )
        .prop_map(|(a, b, (p, q))| (a, b, rat(p, q)))
}

fn arb_element(dim: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(arb_monomial(dim), 1..=5).prop_map(move |terms| {
        let mut el = WeylElement::zero(dim);
        for (a, b, c) in terms {
            el = el
                .add(&WeylElement::monomial(dim, a, b, c))
                .expect("same dim");
        }
        el
    })
}

fn arb_weights(dim: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(1i64..=3, dim)
        .prop_map(|w| WeightVector::from_integers(&w).expect("positive"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(
        (a, b, c) in (1usize..=3).prop_flat_map(|d| (arb_element(d), arb_element(d), arb_element(d)))
    ) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn v_degree_subadditive(
        (a, b, w) in (1usize..=3).prop_flat_map(|d| (arb_element(d), arb_element(d), arb_weights(d)))
    ) {
        let prod = a.multiply(&b).unwrap();
        if let (Some(da), Some(db), Some(dp)) =
            (a.v_degree(&w), b.v_degree(&w), prod.v_degree(&w))
        {
            prop_assert!(dp <= da + db);
        }
    }

    #[test]
    fn v_degree_additive_on_monomials(
        (m1, m2, w) in (1usize..=3).prop_flat_map(|d| (arb_monomial(d), arb_monomial(d), arb_weights(d)))
    ) {
        let d = w.dim();
        let a = WeylElement::monomial(d, m1.0, m1.1, rat_int(1));
        let b = WeylElement::monomial(d, m2.0, m2.1, rat_int(1));
        let prod = a.multiply(&b).unwrap();
        // The top contraction term never cancels for monomials.
        prop_assert_eq!(
            prod.v_degree(&w).unwrap(),
            a.v_degree(&w).unwrap() + b.v_degree(&w).unwrap()
        );
    }

    #[test]
    fn grading_identity(
        (m, w) in (1usize..=3).prop_flat_map(|d| (arb_monomial(d), arb_weights(d)))
    ) {
        // [m, eta] = v_degree(m) * m for a monomial m and integer weights.
        let d = w.dim();
        let el = WeylElement::monomial(d, m.0, m.1, m.2);
        let eta = euler_field(&w);
        let lhs = el.commutator(&eta).unwrap();
        let deg = el
            .v_degree(&w)
            .unwrap_or_else(|| rat_int(0));
        prop_assert_eq!(lhs, el.scale(&deg));
    }

    #[test]
    fn fourier_is_algebra_map(
        (a, b) in (1usize..=3).prop_flat_map(|d| (arb_element(d), arb_element(d)))
    ) {
        let lhs = a.multiply(&b).unwrap().fourier();
        let rhs = a.fourier().multiply(&b.fourier()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fourier_double_is_antipode(a in (1usize..=3).prop_flat_map(arb_element)) {
        // Double transform = pullback by v -> -v.
        let twice = a.fourier().fourier();
        let mut antipode = WeylElement::zero(a.dim());
        for ((alpha, beta), c) in a.terms() {
            let parity = (alpha.iter().sum::<u32>() + beta.iter().sum::<u32>()) % 2;
            let coeff = if parity == 1 { -c.clone() } else { c.clone() };
            antipode = antipode
                .add(&WeylElement::monomial(a.dim(), alpha.clone(), beta.clone(), coeff))
                .unwrap();
        }
        prop_assert_eq!(twice, antipode);
    }

    #[test]
    fn fourier_swaps_monomial_exponents(m in (1usize..=3).prop_flat_map(arb_monomial)) {
        let d = m.0.len();
        let el = WeylElement::monomial(d, m.0.clone(), m.1.clone(), rat_int(1));
        let image = el.fourier();
        // The image contains the swapped monomial with coefficient +-1 and
        // all other terms have componentwise smaller exponents.
        let lead = image.coeff(&m.1, &m.0);
        prop_assert!(lead == rat_int(1) || lead == rat_int(-1));
        for ((a, b), _) in image.terms() {
            prop_assert!(a.iter().zip(&m.1).all(|(x, y)| x <= y));
            prop_assert!(b.iter().zip(&m.0).all(|(x, y)| x <= y));
        }
    }

    #[test]
    fn parse_round_trips_rendering(a in (1usize..=3).prop_flat_map(arb_element)) {
        let txt = a.to_text(0);
        let parsed = WeylElement::parse(&txt, a.dim(), 0).unwrap();
        prop_assert_eq!(parsed, a);
    }
}
