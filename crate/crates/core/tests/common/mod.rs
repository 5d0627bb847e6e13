//! Helpers shared by the integration tests: memoised groups, random inputs and the
//! property checks that both the proptest suite and the acceptance run exercise.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use lie_psi::charlib::{Group, VirtualRep};
use lie_psi::lambda_ring::{adams_matrix_on_v, s_reduce, FundPoly, Route};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// One `Group` per label for the whole test binary, so character memos are shared across cases.
pub fn group(label: &str) -> &'static Group {
    static GROUPS: OnceLock<Mutex<HashMap<String, &'static Group>>> = OnceLock::new();
    let mut map = GROUPS.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap();
    map.entry(label.to_string())
        .or_insert_with(|| Box::leak(Box::new(Group::parse(label).unwrap().with_cache(None))))
}

/// `n (n - 1) ... (n - k + 1) / k!` for any integer `n`.
pub fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= n - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Small groups used for random virtual representations, with the largest entry allowed in a
/// highest weight.
pub const SMALL_GROUPS: [(&str, i64); 3] = [("A1", 3), ("A2", 2), ("G2", 1)];

/// A group label together with a virtual representation of that group: up to three
/// irreducible summands with multiplicities in `-2..=2`.
pub fn small_virtual_rep() -> impl Strategy<Value = (&'static str, VirtualRep)> {
    (0..SMALL_GROUPS.len()).prop_flat_map(|gi| {
        let (label, top) = SMALL_GROUPS[gi];
        let rank = group(label).rank();
        prop::collection::vec((prop::collection::vec(0..=top, rank), -2i64..=2), 1..=3).prop_map(move |terms| {
            let mut x = VirtualRep::zero();
            for (w, m) in terms {
                x.add_irrep(w, &BigInt::from(m));
            }
            (label, x)
        })
    })
}

/// A polynomial in the fundamental generators of a semisimple group of the given rank.
pub fn fund_poly(rank: usize) -> impl Strategy<Value = FundPoly> {
    prop::collection::vec((prop::collection::vec(0i64..=2, rank), -3i64..=3), 0..=4).prop_map(move |terms| {
        let mut p = FundPoly::constant(rank, BigInt::zero());
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    })
}

pub fn fundamental_dims(g: &Group) -> Vec<BigInt> {
    (0..g.rank()).map(|i| g.weyl_dim(&g.rs.fundamental_weight(i)).unwrap()).collect()
}

/// `psi^k psi^l x = psi^(kl) x` for the pairs `(2, 3)`, `(3, 2)` and `(2, 2)`.
pub fn psi_functorial(label: &str, x: &VirtualRep) -> Result<(), TestCaseError> {
    let g = group(label);
    for (k, l) in [(2i64, 3i64), (3, 2), (2, 2)] {
        let lhs = g.adams(k, &g.adams(l, x).unwrap()).unwrap();
        let rhs = g.adams(k * l, x).unwrap();
        prop_assert_eq!(lhs, rhs, "psi^{} psi^{} on {} of {}", k, l, x, label);
    }
    Ok(())
}

/// `dim lambda^k x = binomial(dim x, k)` for `k <= 3`.
pub fn lambda_dimension(label: &str, x: &VirtualRep) -> Result<(), TestCaseError> {
    let g = group(label);
    let n = g.dim(x);
    let series = g.lambda_series(3, x).unwrap();
    for (k, lk) in series.iter().enumerate() {
        prop_assert_eq!(g.dim(lk), binomial(&n, k), "lambda^{} of {} in {}", k, x, label);
    }
    Ok(())
}

/// Reduction modulo `I^2` is multiplicative: the augmentation multiplies and the linear part
/// follows the Leibniz rule `[xy] = eps(y) [x] + eps(x) [y]` on the augmentation ideal.
pub fn s_reduce_product(label: &str, x: &FundPoly, y: &FundPoly) -> Result<(), TestCaseError> {
    let g = group(label);
    let dims = fundamental_dims(g);
    let (sx, sy, sxy) = (s_reduce(x, &dims), s_reduce(y, &dims), s_reduce(&x.mul(y), &dims));
    let (ex, ey) = (sx.epsilon(&dims), sy.epsilon(&dims));
    prop_assert_eq!(sxy.epsilon(&dims), &ex * &ey);
    let expect: Vec<BigInt> = sx.linear.iter().zip(&sy.linear).map(|(a, b)| &ey * a + &ex * b).collect();
    prop_assert_eq!(&sxy.linear, &expect);
    // The augmentation agrees with the Weyl dimension of the evaluated representation.
    prop_assert_eq!(sxy.epsilon(&dims), g.dim(&x.mul(y).evaluate(g).unwrap()));
    Ok(())
}

/// For every fundamental representation, the Freudenthal weight system (orbit-expanded) has
/// total multiplicity equal to the Weyl dimension.
pub fn freudenthal_vs_weyl(label: &str) -> Result<String, String> {
    let g = group(label);
    let mut dims = Vec::new();
    for i in 0..g.rank() {
        let w = g.rs.fundamental_weight(i);
        let weyl = g.weyl_dim(&w).map_err(|e| e.to_string())?;
        let total: BigInt = g.full_character(&w).map_err(|e| e.to_string())?.iter().map(|(_, m)| m).sum();
        if total != weyl {
            return Err(format!("{label} w{}: Freudenthal total {total}, Weyl {weyl}", i + 1));
        }
        dims.push(weyl.to_string());
    }
    Ok(format!("{label} [{}]", dims.join(", ")))
}

/// `M2 M3 = M6` for the Adams matrices on `V(G)`, and the recursive and index routes agree.
pub fn adams_product(label: &str) -> Result<String, String> {
    let g = group(label);
    let mut by_route = Vec::new();
    for route in [Route::Recursive, Route::Index] {
        let m = |k| adams_matrix_on_v(g, k, route).map_err(|e| e.to_string());
        let (m2, m3, m6) = (m(2)?, m(3)?, m(6)?);
        if m2.mul(&m3) != m6 {
            return Err(format!("{label} {route:?}: M2 M3 != M6"));
        }
        by_route.push(m2);
    }
    if by_route[0] != by_route[1] {
        return Err(format!("{label}: recursive and index routes give different M2"));
    }
    Ok(format!("{label} {}x{}", by_route[0].rows, by_route[0].cols))
}

/// `lambda^2 v = v + a` for the 7-dimensional representation `v` and adjoint `a` of `G2`,
/// checked against the exterior square of the weight list.
pub fn g2_lambda_two() -> Result<String, String> {
    let g = group("G2");
    let v = VirtualRep::irrep(vec![1, 0]);
    let mut expect = v.clone();
    expect.add_irrep(vec![0, 1], &BigInt::one());
    let l2 = g.lambda_k(2, &v).map_err(|e| e.to_string())?;
    let chi = g.character(&v).map_err(|e| e.to_string())?;
    let direct = g
        .decompose(&lie_psi::charlib::exterior_power_weights(&chi, 2))
        .map_err(|e| e.to_string())?;
    if l2 != expect || direct != expect {
        return Err(format!("lambda^2 v = {l2}, weight-list oracle {direct}, expected {expect}"));
    }
    if g.dim(&VirtualRep::irrep(vec![0, 1])) != BigInt::from(14) {
        return Err("(0, 1) is not the adjoint".into());
    }
    Ok(format!("lambda^2 v = {l2} (dim 21)"))
}
