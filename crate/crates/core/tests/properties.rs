mod common;

use common::*;
use lie_psi::charlib::VirtualRep;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn adams_operations_compose((label, x) in small_virtual_rep()) {
        psi_functorial(label, &x)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exterior_power_dimensions((label, x) in small_virtual_rep()) {
        lambda_dimension(label, &x)?;
    }

    #[test]
    fn reduction_mod_i_squared_is_multiplicative_a2(x in fund_poly(2), y in fund_poly(2)) {
        s_reduce_product("A2", &x, &y)?;
    }

    #[test]
    fn reduction_mod_i_squared_is_multiplicative_g2(x in fund_poly(2), y in fund_poly(2)) {
        s_reduce_product("G2", &x, &y)?;
    }

    #[test]
    fn adams_is_additive((label, x) in small_virtual_rep(), (_, y) in small_virtual_rep()) {
        // Only meaningful when both reps belong to the same group.
        prop_assume!(x.terms.keys().next().map(Vec::len) == y.terms.keys().next().map(Vec::len));
        let g = group(label);
        prop_assume!(y.terms.keys().all(|w| g.rs.check_len(w).is_ok()));
        let sum = g.adams(2, &x.add(&y)).unwrap();
        prop_assert_eq!(sum, g.adams(2, &x).unwrap().add(&g.adams(2, &y).unwrap()));
    }
}

#[test]
fn freudenthal_totals_match_weyl_dimensions() {
    for label in ["G2", "F4", "D5", "D6", "E6"] {
        freudenthal_vs_weyl(label).unwrap();
    }
}

#[test]
fn adams_matrices_multiply() {
    for label in ["F4", "E6"] {
        adams_product(label).unwrap();
    }
}

#[test]
fn g2_exterior_square() {
    g2_lambda_two().unwrap();
}

#[test]
fn negative_multiplicity_lambda_is_inverse_series() {
    let g = group("A2");
    let x = VirtualRep::irrep(vec![1, 0]);
    let minus = x.scale(&(-1).into());
    let a = g.lambda_series(4, &x).unwrap();
    let b = g.lambda_series(4, &minus).unwrap();
    for n in 1..=4 {
        let mut acc = VirtualRep::zero();
        for i in 0..=n {
            acc = acc.add(&g.tensor(&a[i], &b[n - i]).unwrap());
        }
        assert!(acc.is_zero(), "coefficient {n} of lambda_t(x) lambda_t(-x)");
    }
}
