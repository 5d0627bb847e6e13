//! Rational homotopy of homogeneous spaces from the maps `V(K) -> V(G)`, sphere bundles, and
//! the invariants of rationally elliptic spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::branching::{induced_v_matrix, weight_kernel_dims, Pair, RestrictionMap, WeightBlock};
use crate::error::{Error, Result};
use crate::lambda_ring::TypeOf;
use crate::linalg::{poly_div_exact, q, Q};

/// Dimensions of `pi_n (x) Q`, keyed by `n`; zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: BTreeMap<u32, usize>,
}

impl GradedDims {
    pub fn from_degrees(degrees: &[u32]) -> GradedDims {
        let mut g = GradedDims::default();
        for &d in degrees {
            g.add(d, 1);
        }
        g
    }

    pub fn get(&self, n: u32) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn add(&mut self, n: u32, k: usize) {
        if k > 0 {
            *self.dims.entry(n).or_default() += k;
        }
    }

    fn remove(&mut self, n: u32) -> Result<()> {
        match self.dims.get_mut(&n) {
            Some(k) if *k > 1 => *k -= 1,
            Some(_) => {
                self.dims.remove(&n);
            }
            None => return Err(Error::Inconsistent(format!("no class in degree {n} to remove"))),
        }
        Ok(())
    }

    /// Degrees listed with multiplicity.
    pub fn degrees(&self) -> Vec<u32> {
        self.dims.iter().flat_map(|(&n, &k)| std::iter::repeat(n).take(k)).collect()
    }
}

impl fmt::Display for GradedDims {
    /// `Q at 2 8 17 23`, with `Q^k` blocks written as `17^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.dims.iter().map(|(n, k)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") }).collect();
        write!(f, "Q at {}", parts.join(" "))
    }
}

fn weight_counts(t: &TypeOf) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for r in t.weights() {
        *m.entry(r).or_default() += 1;
    }
    m
}

/// Splices the four-term sequences `0 -> pi_2r(G/K) -> pi_2r-1(K) -> pi_2r-1(G) -> pi_2r-1(G/K) -> 0`,
/// with the middle map at weight `r` dual to `V(G)_r -> V(K)_r`.
pub fn homotopy_of_quotient(type_k: &TypeOf, type_g: &TypeOf, blocks: &[WeightBlock]) -> Result<GradedDims> {
    let ck = weight_counts(type_k);
    let cg = weight_counts(type_g);
    let mut out = GradedDims::default();
    let mut seen = Vec::new();
    for b in blocks {
        let tk = ck.get(&b.weight).copied().unwrap_or(0);
        let tg = cg.get(&b.weight).copied().unwrap_or(0);
        if tk != b.target_dim || tg != b.source_dim || b.rank > tk.min(tg) {
            return Err(Error::Inconsistent(format!("weight {} does not match the types", b.weight)));
        }
        if b.dual_kernel + b.rank != tk || b.dual_cokernel + b.rank != tg {
            return Err(Error::Inconsistent(format!("four-term sequence at weight {} is not exact", b.weight)));
        }
        out.add(2 * b.weight as u32, b.dual_kernel);
        out.add(2 * b.weight as u32 - 1, b.dual_cokernel);
        seen.push(b.weight);
    }
    for r in ck.keys().chain(cg.keys()) {
        if !seen.contains(r) {
            return Err(Error::Inconsistent(format!("no data for weight {r}")));
        }
    }
    Ok(out)
}

/// The connecting map `pi_{k+1}(B) -> pi_k(S^k)` of a bundle `S^k -> N -> B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectingMap {
    /// Decide from the dimensions; an undetermined case is an error.
    Auto,
    /// The fibre class survives in `N`.
    Zero,
    /// The fibre class dies in `N`.
    Surjective,
}

impl FromStr for ConnectingMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConnectingMap> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(ConnectingMap::Auto),
            "zero" => Ok(ConnectingMap::Zero),
            "surjective" => Ok(ConnectingMap::Surjective),
            _ => Err(Error::Unknown { kind: "connecting map", name: s.to_string() }),
        }
    }
}

/// Rational homotopy of the base of a bundle `S^k -> N -> B` with `k` odd, from that of `N`.
/// Away from degrees `k` and `k + 1` the groups agree. When `pi_k(N) = 0` the fibre class must
/// die, so `B` gains a class in degree `k + 1`; otherwise the answer depends on the bundle.
pub fn sphere_bundle_correction(fiber_dim: u32, total: &GradedDims, mode: ConnectingMap) -> Result<GradedDims> {
    if fiber_dim % 2 == 0 {
        return Err(Error::Inconsistent(format!("fibre S^{fiber_dim} is not an odd sphere")));
    }
    let surjective = match mode {
        ConnectingMap::Surjective => true,
        ConnectingMap::Zero => false,
        ConnectingMap::Auto => {
            if total.get(fiber_dim) == 0 {
                true
            } else {
                return Err(Error::Ambiguous(format!(
                    "pi_{fiber_dim} of the total space is nonzero; the connecting map is not forced"
                )));
            }
        }
    };
    let mut base = total.clone();
    if surjective {
        base.add(fiber_dim + 1, 1);
    } else {
        base.remove(fiber_dim)?;
    }
    Ok(base)
}

/// Invariants of a rationally elliptic space with positive Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticProfile {
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
    /// Coefficients of the Poincare polynomial, constant term first.
    pub poincare: Vec<BigInt>,
    pub euler: BigInt,
}

impl EllipticProfile {
    pub fn top_degree(&self) -> usize {
        self.poincare.len() - 1
    }

    pub fn total_dim(&self) -> BigInt {
        self.poincare.iter().sum()
    }

    /// `(1 - t^a)(1 - t^b).../((1 - t^c)...)` as text.
    pub fn formula(&self) -> String {
        let num: Vec<String> = self.odd.iter().map(|d| format!("(1-t^{})", d + 1)).collect();
        let den: Vec<String> = self.even.iter().map(|d| format!("(1-t^{d})")).collect();
        format!("{}/({})", num.join(""), den.join(""))
    }
}

fn one_minus_t(d: usize) -> Vec<Q> {
    let mut p = vec![Q::zero(); d + 1];
    p[0] = Q::one();
    p[d] = q(-1);
    p
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `P(t) = prod (1 - t^{odd_i + 1}) / prod (1 - t^{even_i})`, by exact division, and
/// `chi = prod (odd_i + 1) / prod even_i` from the degrees alone.
pub fn elliptic_profile(dims: &GradedDims) -> Result<EllipticProfile> {
    let degs = dims.degrees();
    let even: Vec<u32> = degs.iter().copied().filter(|d| d % 2 == 0).collect();
    let odd: Vec<u32> = degs.iter().copied().filter(|d| d % 2 == 1).collect();
    if even.len() != odd.len() {
        return Err(Error::Inconsistent(format!(
            "{} even and {} odd homotopy classes; Euler characteristic of homotopy is not zero",
            even.len(),
            odd.len()
        )));
    }
    let mut num = vec![Q::one()];
    for &d in &odd {
        num = poly_mul(&num, &one_minus_t(d as usize + 1));
    }
    let mut p = num;
    for &d in &even {
        p = poly_div_exact(&p, &one_minus_t(d as usize))
            .ok_or_else(|| Error::InexactDivision(format!("(1-t^{d}) does not divide the numerator")))?;
    }
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let poincare: Vec<BigInt> = p
        .iter()
        .map(|c| {
            if c.is_integer() && !c.is_negative() {
                Ok(c.to_integer())
            } else {
                Err(Error::Inconsistent(format!("Poincare coefficient {c} is not a natural number")))
            }
        })
        .collect::<Result<_>>()?;
    let chi = odd.iter().map(|&d| q(d as i64 + 1)).product::<Q>() / even.iter().map(|&d| q(d as i64)).product::<Q>();
    if !chi.is_integer() {
        return Err(Error::NonIntegral(format!("Euler characteristic {chi}")));
    }
    let euler = chi.to_integer();
    let expanded: BigInt = poincare.iter().sum();
    if expanded != euler {
        return Err(Error::Inconsistent(format!("P(1) = {expanded} but the degree formula gives {euler}")));
    }
    Ok(EllipticProfile { even, odd, poincare, euler })
}

/// Homogeneous spaces with known homotopy computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// `E6 / Spin(10)`.
    N5,
    /// `E7 / Spin(12)`.
    N6,
    /// `E6 / (Spin(10) x_C4 U(1))`.
    R5,
    /// `E7 / (Spin(12) x_C2 Sp(1))`.
    R6,
    /// `E8 / HSpin(16)`.
    R7,
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Space> {
        match s.to_ascii_uppercase().as_str() {
            "N5" => Ok(Space::N5),
            "N6" => Ok(Space::N6),
            "R5" => Ok(Space::R5),
            "R6" => Ok(Space::R6),
            "R7" => Ok(Space::R7),
            _ => Err(Error::Unknown { kind: "space", name: s.to_string() }),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Space {
    pub const ALL: [Space; 5] = [Space::N5, Space::N6, Space::R5, Space::R6, Space::R7];

    /// Needs the E7 or E8 cyclic matrix.
    pub fn is_long(self) -> bool {
        !matches!(self, Space::N5 | Space::R5)
    }

    /// Manifold dimension.
    pub fn dimension(self) -> u32 {
        match self {
            Space::N5 => 33,
            Space::N6 => 67,
            Space::R5 => 32,
            Space::R6 => 64,
            Space::R7 => 128,
        }
    }
}

/// The homotopy of `G/K` for an equal-rank restriction.
pub fn quotient_homotopy(m: &RestrictionMap) -> Result<GradedDims> {
    let j = induced_v_matrix(m)?;
    let blocks = weight_kernel_dims(m, &j)?;
    let tg = crate::lambda_ring::type_of(&m.source, crate::lambda_ring::Route::default_for(&m.source))?;
    let tk = crate::lambda_ring::type_of(&m.target, crate::lambda_ring::Route::default_for(&m.target))?;
    homotopy_of_quotient(&tk, &tg, &blocks)
}

/// Rational homotopy of a space, following the spin-group quotient and then the sphere bundle
/// `N -> R` for `R5` and `R6`.
pub fn space_homotopy(space: Space) -> Result<GradedDims> {
    space_homotopy_with(space, ConnectingMap::Auto)
}

/// As [`space_homotopy`], with the connecting map of the sphere bundle chosen explicitly.
pub fn space_homotopy_with(space: Space, connecting: ConnectingMap) -> Result<GradedDims> {
    match space {
        Space::N5 => quotient_homotopy(&RestrictionMap::for_pair(Pair::Spin10E6)?),
        Space::N6 => quotient_homotopy(&RestrictionMap::for_pair(Pair::Spin12E7)?),
        Space::R5 => sphere_bundle_correction(1, &space_homotopy(Space::N5)?, connecting),
        Space::R6 => sphere_bundle_correction(3, &space_homotopy(Space::N6)?, connecting),
        Space::R7 => quotient_homotopy(&RestrictionMap::for_pair(Pair::Spin16E8)?),
    }
}

/// The same groups computed directly from the full isotropy group, without the sphere bundle.
pub fn space_homotopy_direct(space: Space) -> Result<GradedDims> {
    match space {
        Space::R5 => quotient_homotopy(&RestrictionMap::spin10_u1_e6()?),
        Space::R6 => quotient_homotopy(&RestrictionMap::spin12_sp1_e7()?),
        _ => space_homotopy(space),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_quotient_is_contractible() {
        let m = RestrictionMap::identity("B3").unwrap();
        assert_eq!(quotient_homotopy(&m).unwrap(), GradedDims::default());
    }

    #[test]
    fn n5_and_r5() {
        let n5 = space_homotopy(Space::N5).unwrap();
        assert_eq!(n5, GradedDims::from_degrees(&[8, 17, 23]));
        let r5 = space_homotopy(Space::R5).unwrap();
        assert_eq!(r5, GradedDims::from_degrees(&[2, 8, 17, 23]));
        assert_eq!(space_homotopy_direct(Space::R5).unwrap(), r5);
        assert_eq!(r5.to_string(), "Q at 2 8 17 23");
    }

    #[test]
    fn sphere_bundle_modes() {
        let x = GradedDims::from_degrees(&[2, 3]);
        let mut with_circle = x.clone();
        with_circle.add(1, 1);
        assert_eq!(sphere_bundle_correction(1, &with_circle, ConnectingMap::Zero).unwrap(), x);
        assert!(sphere_bundle_correction(1, &with_circle, ConnectingMap::Auto).is_err());
        let s3 = GradedDims::from_degrees(&[3]);
        assert_eq!(sphere_bundle_correction(3, &s3, ConnectingMap::Zero).unwrap(), GradedDims::default());
        assert!(sphere_bundle_correction(2, &s3, ConnectingMap::Zero).is_err());
    }

    #[test]
    fn two_sphere_profile() {
        let p = elliptic_profile(&GradedDims::from_degrees(&[2, 3])).unwrap();
        assert_eq!(p.poincare, vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        assert_eq!(p.euler, BigInt::from(2));
    }

    #[test]
    fn r5_profile() {
        let p = elliptic_profile(&GradedDims::from_degrees(&[2, 8, 17, 23])).unwrap();
        assert_eq!(p.euler, BigInt::from(27));
        assert_eq!(p.top_degree(), 32);
        assert_eq!(p.formula(), "(1-t^18)(1-t^24)/((1-t^2)(1-t^8))");
    }

    #[test]
    fn unbalanced_or_non_polynomial_inputs_rejected() {
        assert!(elliptic_profile(&GradedDims::from_degrees(&[2, 3, 5])).is_err());
        assert!(elliptic_profile(&GradedDims::from_degrees(&[4, 5])).is_err());
    }

    #[test]
    fn inconsistent_blocks_rejected() {
        let tk = TypeOf { entries: vec![3] };
        let tg = TypeOf { entries: vec![3] };
        let bad = WeightBlock { weight: 2, source_dim: 1, target_dim: 1, rank: 0, dual_kernel: 0, dual_cokernel: 0 };
        assert!(homotopy_of_quotient(&tk, &tg, &[bad]).is_err());
    }
}
