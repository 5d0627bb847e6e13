//! Chern characters of bundles over `B(Spin(2n) x H)` through the splitting principle, and
//! their reduction to Pontryagin classes, the Euler class and the classes of `H`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gpoly::{Generator, Gens, GradedPoly};
use crate::linalg::{q, qz, Q};


/// Extra factor next to the spin group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Aux {
    None,
    /// `U(1)` with root `t`; `c1 = t`.
    U1,
    /// `Sp(1)` with roots `s, -s`; `c2 = -s^2`.
    Sp1,
}

/// One weight of a representation of `Spin(2n) x H`: coordinates in half-root units (so
/// `e^{sum w_i y_i}` with `y_i = x_i / 2`), the charge on `H`, and a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfWeight {
    pub coords: Vec<i64>,
    pub charge: i64,
    pub mult: i64,
}

pub type WeightList = Vec<HalfWeight>;

/// Weights of the vector representation `rho_2n`.
pub fn vector_weights(n: usize) -> WeightList {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [2, -2] {
            let mut c = vec![0; n];
            c[i] = s;
            out.push(HalfWeight { coords: c, charge: 0, mult: 1 });
        }
    }
    out
}

/// Weights of `lambda^2 rho_2n`.
pub fn lambda2_vector_weights(n: usize) -> WeightList {
    let mut out = vec![HalfWeight { coords: vec![0; n], charge: 0, mult: n as i64 }];
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut c = vec![0; n];
                c[i] = a;
                c[j] = b;
                out.push(HalfWeight { coords: c, charge: 0, mult: 1 });
            }
        }
    }
    out
}

/// Weights of the half-spin representation: `(+-1/2, ...)` with an even number of minus signs
/// for `sign = +1` and an odd number for `sign = -1`.
pub fn spinor_weights(n: usize, sign: i64) -> WeightList {
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let minus = mask.count_ones() as i64;
        if (minus % 2 == 0) != (sign > 0) {
            continue;
        }
        let coords = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        out.push(HalfWeight { coords, charge: 0, mult: 1 });
    }
    out
}

/// Weights of the standard representation of the extra factor (`xi` or `zeta`).
pub fn aux_standard(n: usize, aux: Aux) -> WeightList {
    match aux {
        Aux::None => vec![HalfWeight { coords: vec![0; n], charge: 0, mult: 1 }],
        Aux::U1 => vec![HalfWeight { coords: vec![0; n], charge: 1, mult: 1 }],
        Aux::Sp1 => vec![
            HalfWeight { coords: vec![0; n], charge: 1, mult: 1 },
            HalfWeight { coords: vec![0; n], charge: -1, mult: 1 },
        ],
    }
}

/// `xi^k` as a weight list.
pub fn charge_power(n: usize, k: i64) -> WeightList {
    vec![HalfWeight { coords: vec![0; n], charge: k, mult: 1 }]
}

/// Weights of a tensor product.
pub fn tensor_weights(a: &WeightList, b: &WeightList) -> WeightList {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(HalfWeight {
                coords: x.coords.iter().zip(&y.coords).map(|(p, q)| p + q).collect(),
                charge: x.charge + y.charge,
                mult: x.mult * y.mult,
            });
        }
    }
    out
}

/// Weights of a direct sum.
pub fn sum_weights(parts: &[WeightList]) -> WeightList {
    parts.concat()
}

/// A truncated power series in the half-root variables `y_1..y_n` and the extra root, invariant
/// under even signed permutations of the `y_i`. Stored by representatives: the key `(g, a)`,
/// `g` non-increasing, carries the coefficient of `y^g s^a`; every permuted monomial has
/// the same coefficient, with sign `(-1)^{sum of flipped exponents}` under sign changes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    pub n: usize,
    pub aux: Aux,
    /// Largest cohomological degree kept; `y_i` and `s` have degree 2.
    pub max_degree: u32,
    pub coeffs: BTreeMap<(Vec<u32>, u32), Q>,
}

/// Non-increasing sequences of length `n` with the given sum.
fn partitions(total: u32, n: usize, max_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=max_part.min(total)).rev() {
        if first * (n as u32) < total {
            break;
        }
        for mut rest in partitions(total - first, n - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, b| a * b)
}

impl SymPoly {
    /// `ch` of the representation with the given weights, through cohomological degree `max_degree`.
    pub fn from_weights(n: usize, aux: Aux, weights: &WeightList, max_degree: u32) -> SymPoly {
        let half = max_degree / 2;
        let mut coeffs = BTreeMap::new();
        for total in 0..=half {
            for a in 0..=total {
                if aux == Aux::None && a > 0 {
                    continue;
                }
                for g in partitions(total - a, n, total - a) {
                    let mut sum = BigInt::zero();
                    for w in weights {
                        let mut t = BigInt::from(w.mult) * BigInt::from(w.charge).pow(a);
                        for (c, &k) in w.coords.iter().zip(&g) {
                            if k > 0 {
                                t *= BigInt::from(*c).pow(k);
                            }
                        }
                        sum += t;
                    }
                    if sum.is_zero() {
                        continue;
                    }
                    let den = g.iter().map(|&k| factorial(k)).product::<BigInt>() * factorial(a);
                    coeffs.insert((g, a), Q::new(sum, den));
                }
            }
        }
        SymPoly { n, aux, max_degree, coeffs }
    }

    /// Coefficient of `y^g s^a` for any exponent vector `g`.
    pub fn coefficient(&self, g: &[u32], a: u32) -> Q {
        let mut sorted = g.to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        self.coeffs.get(&(sorted, a)).cloned().unwrap_or_else(Q::zero)
    }

    /// Homogeneous part of cohomological degree `d`.
    pub fn degree_part(&self, d: u32) -> SymPoly {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((g, a), _)| 2 * (g.iter().sum::<u32>() + a) == d)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        SymPoly { n: self.n, aux: self.aux, max_degree: self.max_degree, coeffs }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.max_degree = self.max_degree.min(other.max_degree);
        out.coeffs.retain(|(g, a), _| 2 * (g.iter().sum::<u32>() + a) <= out.max_degree);
        for (k, v) in &other.coeffs {
            if 2 * (k.0.iter().sum::<u32>() + k.1) > out.max_degree {
                continue;
            }
            let e = out.coeffs.entry(k.clone()).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                out.coeffs.remove(k);
            }
        }
        out
    }
}

/// `sum_i (e^{x_i} + e^{-x_i})`, the Chern character of the complexified vector bundle.
pub fn ch_vector(n: usize, max_degree: u32) -> SymPoly {
    SymPoly::from_weights(n, Aux::None, &vector_weights(n), max_degree)
}

/// Chern character of `lambda^2 rho_2n`.
pub fn ch_lambda2_vector(n: usize, max_degree: u32) -> SymPoly {
    SymPoly::from_weights(n, Aux::None, &lambda2_vector_weights(n), max_degree)
}

/// Chern character of the half-spin representation of the given sign.
pub fn ch_spinor(n: usize, sign: i64, max_degree: u32) -> SymPoly {
    SymPoly::from_weights(n, Aux::None, &spinor_weights(n, sign), max_degree)
}

/// Generators `p_1..p_{n-1}, e` of `H^*(BSpin(2n); Q)`, then the class of the extra factor.
pub fn pe_gens(n: usize, aux: Aux) -> Gens {
    let mut v: Vec<Generator> = (1..n).map(|i| Generator { name: format!("p{i}"), degree: 4 * i as u32 }).collect();
    v.push(Generator { name: "e".into(), degree: 2 * n as u32 });
    match aux {
        Aux::None => {}
        Aux::U1 => v.push(Generator { name: "c1".into(), degree: 2 }),
        Aux::Sp1 => v.push(Generator { name: "c2".into(), degree: 4 }),
    }
    std::sync::Arc::new(v)
}

/// A polynomial in `p_1..p_{n-1}, e` and the extra class; `p_n = e^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PEPoly {
    pub n: usize,
    pub aux: Aux,
    pub poly: GradedPoly,
}

/// Number of 0-1 matrices with the given row and column sums, i.e. the coefficient of
/// `z^cols` in `prod_j e_{rows_j}(z)`.
struct ZeroOneCounter {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl ZeroOneCounter {
    fn new() -> Self {
        ZeroOneCounter { memo: HashMap::new() }
    }

    fn count(&mut self, rows: &[u32], cols: &[u32]) -> BigInt {
        let mut r: Vec<u32> = rows.iter().copied().filter(|&x| x > 0).collect();
        r.sort_unstable();
        let c: Vec<u32> = cols.iter().copied().filter(|&x| x > 0).collect();
        if r.iter().sum::<u32>() != c.iter().sum::<u32>() {
            return BigInt::zero();
        }
        self.count_sorted(r, &c)
    }

    fn count_sorted(&mut self, rows: Vec<u32>, cols: &[u32]) -> BigInt {
        if cols.is_empty() {
            return if rows.iter().all(|&x| x == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let key = (cols.to_vec(), rows.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let need = cols[0] as usize;
        // Group rows by remaining sum and choose how many of each group the column uses.
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &x in rows.iter().filter(|&&x| x > 0) {
            match groups.last_mut() {
                Some((v, k)) if *v == x => *k += 1,
                _ => groups.push((x, 1)),
            }
        }
        let mut total = BigInt::zero();
        let mut choice = vec![0usize; groups.len()];
        self.choose(&groups, 0, need, &mut choice, &cols[1..], &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    fn choose(
        &mut self,
        groups: &[(u32, usize)],
        i: usize,
        left: usize,
        choice: &mut Vec<usize>,
        rest_cols: &[u32],
        total: &mut BigInt,
    ) {
        if i == groups.len() {
            if left > 0 {
                return;
            }
            let mut ways = BigInt::one();
            let mut next = Vec::new();
            for (g, &k) in groups.iter().zip(choice.iter()) {
                ways *= binom(g.1, k);
                next.extend(std::iter::repeat(g.0 - 1).take(k));
                next.extend(std::iter::repeat(g.0).take(g.1 - k));
            }
            next.sort_unstable();
            *total += ways * self.count_sorted(next, rest_cols);
            return;
        }
        for k in 0..=groups[i].1.min(left) {
            choice[i] = k;
            self.choose(groups, i + 1, left - k, choice, rest_cols, total);
        }
        choice[i] = 0;
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for t in 0..k {
        r = r * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    r
}

fn conjugate(mu: &[u32]) -> Vec<u32> {
    let max = mu.iter().copied().max().unwrap_or(0);
    (1..=max).map(|j| mu.iter().filter(|&&m| m >= j).count() as u32).collect()
}

/// A symmetric polynomial in `z_1..z_n` (monomial-symmetric coefficients, keys non-increasing
/// with trailing zeros) as a polynomial in the elementary symmetric functions; the result
/// maps exponent vectors of `(e_1, ..., e_n)` to coefficients.
fn monomial_to_elementary(
    n: usize,
    mut f: BTreeMap<Vec<u32>, Q>,
    counter: &mut ZeroOneCounter,
) -> Result<BTreeMap<Vec<u32>, Q>> {
    let mut out = BTreeMap::new();
    while let Some((mu, c)) = f.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        if mu.iter().filter(|&&x| x > 0).count() > n {
            return Err(Error::NotInvariant(format!("monomial with more than {n} variables")));
        }
        // e_{mu'} = prod_i e_i^{mu_i - mu_{i+1}} has leading monomial z^mu.
        let mut ex = vec![0u32; n];
        for i in 0..n {
            let next = if i + 1 < n { mu[i + 1] } else { 0 };
            ex[i] = mu[i] - next;
        }
        let rows = conjugate(&mu);
        let degree: u32 = mu.iter().sum();
        for nu in partitions(degree, n, degree) {
            if nu > mu {
                continue;
            }
            let k = counter.count(&rows, &nu);
            if k.is_zero() {
                continue;
            }
            let e = f.entry(nu.clone()).or_insert_with(Q::zero);
            *e -= &c * qz(&k);
            if e.is_zero() {
                f.remove(&nu);
            }
        }
        if f.contains_key(&mu) {
            return Err(Error::Inconsistent("leading coefficient of an elementary product is not 1".into()));
        }
        *out.entry(ex).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, v: &mut Q| !v.is_zero());
    Ok(out)
}

/// Rewrites an invariant series in `p_1..p_{n-1}, e` and the class of the extra factor.
/// Fails when a coefficient breaks the symmetry under even signed permutations (or under
/// `s -> -s` for `Sp(1)`).
pub fn to_pe(s: &SymPoly) -> Result<PEPoly> {
    let n = s.n;
    let gens = pe_gens(n, s.aux);
    let e_idx = n - 1;
    let aux_idx = n;
    // (aux power, Euler power) -> symmetric polynomial in z = x^2.
    let mut parts: BTreeMap<(u32, u32), BTreeMap<Vec<u32>, Q>> = BTreeMap::new();
    for ((g, a), c) in &s.coeffs {
        let even = g.iter().all(|k| k % 2 == 0);
        let odd = g.iter().all(|k| k % 2 == 1);
        if !(even || odd) {
            return Err(Error::NotInvariant(format!("coefficient of y^{g:?} s^{a} is {c}")));
        }
        // y_i = x_i / 2
        let xc = c / Q::from_integer(BigInt::one() << g.iter().sum::<u32>() as usize);
        let mut coeff = xc;
        let aux_pow = match s.aux {
            Aux::None => 0,
            Aux::U1 => *a,
            Aux::Sp1 => {
                if a % 2 == 1 {
                    return Err(Error::NotInvariant(format!("odd power s^{a} in an Sp(1) character")));
                }
                if (a / 2) % 2 == 1 {
                    coeff = -coeff;
                }
                a / 2
            }
        };
        let (mu, euler) = if odd { (g.iter().map(|k| (k - 1) / 2).collect(), 1) } else { (g.iter().map(|k| k / 2).collect(), 0) };
        parts.entry((aux_pow, euler)).or_default().insert(mu, coeff);
    }
    let mut counter = ZeroOneCounter::new();
    let mut poly = GradedPoly::zero(&gens);
    for ((aux_pow, euler), f) in parts {
        for (ex, c) in monomial_to_elementary(n, f, &mut counter)? {
            let mut key = vec![0u32; gens.len()];
            key[..n - 1].copy_from_slice(&ex[..n - 1]);
            key[e_idx] = 2 * ex[n - 1] + euler;
            if s.aux != Aux::None {
                key[aux_idx] = aux_pow;
            }
            poly.add_term(key, c);
        }
    }
    Ok(PEPoly { n, aux: s.aux, poly })
}

/// Substitutes `p_i -> e_i(x^2)`, `e -> x_1...x_n` and the extra class back, giving the series
/// in half-root variables truncated at `max_degree`.
pub fn from_pe(pe: &PEPoly, max_degree: u32) -> Result<SymPoly> {
    let n = pe.n;
    let mut counter = ZeroOneCounter::new();
    let mut coeffs: BTreeMap<(Vec<u32>, u32), Q> = BTreeMap::new();
    for (ex, c) in &pe.poly.terms {
        if pe.poly.monomial_degree(ex) > max_degree {
            continue;
        }
        let mut rows: Vec<u32> = Vec::new();
        for (i, &k) in ex[..n - 1].iter().enumerate() {
            rows.extend(std::iter::repeat(i as u32 + 1).take(k as usize));
        }
        let epow = ex[n - 1];
        rows.extend(std::iter::repeat(n as u32).take((epow / 2) as usize));
        let euler = epow % 2;
        let (aux_exp, coeff) = match pe.aux {
            Aux::None => (0, c.clone()),
            Aux::U1 => (ex[n], c.clone()),
            // c2 = -s^2
            Aux::Sp1 => (2 * ex[n], if ex[n] % 2 == 1 { -c.clone() } else { c.clone() }),
        };
        let zdeg: u32 = rows.iter().sum();
        for nu in partitions(zdeg, n, zdeg) {
            let k = counter.count(&rows, &nu);
            if k.is_zero() {
                continue;
            }
            let g: Vec<u32> = nu.iter().map(|m| 2 * m + euler).collect();
            let scale = Q::from_integer(BigInt::one() << g.iter().sum::<u32>() as usize);
            let v = &coeff * qz(&k) * scale;
            let e = coeffs.entry((g, aux_exp)).or_insert_with(Q::zero);
            *e += v;
        }
    }
    coeffs.retain(|_, v| !v.is_zero());
    Ok(SymPoly { n, aux: pe.aux, max_degree, coeffs })
}

impl PEPoly {
    pub fn degree_part(&self, d: u32) -> PEPoly {
        PEPoly { n: self.n, aux: self.aux, poly: self.poly.homogeneous_part(d) }
    }

    /// Product, truncated at `max_degree`.
    pub fn mul_truncated(&self, other: &PEPoly, max_degree: u32) -> PEPoly {
        PEPoly { n: self.n, aux: self.aux, poly: self.poly.mul_truncated(&other.poly, max_degree) }
    }

    pub fn coefficient_of(&self, text_monomial: &str) -> Result<Q> {
        let m = GradedPoly::parse(&self.poly.gens, text_monomial)?;
        let (e, _) = m.terms.iter().next().ok_or_else(|| Error::Inconsistent("empty monomial".into()))?;
        Ok(self.poly.coefficient(e))
    }
}

/// Degree-0 value, the rank of the bundle.
pub fn rank_of(s: &SymPoly) -> Q {
    s.coeffs.get(&(vec![0; s.n], 0)).cloned().unwrap_or_else(|| q(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;
    use crate::linalg::q_frac;

    #[test]
    fn vector_bundle_low_degrees() {
        let s = ch_vector(8, 8);
        assert_eq!(rank_of(&s), q(16));
        assert!(s.degree_part(2).coeffs.is_empty());
        let pe = to_pe(&s).unwrap();
        assert_eq!(pe.coefficient_of("p1").unwrap(), q(1));
    }

    #[test]
    fn sums_of_squares_and_euler_class() {
        // sum x_i^2 = 4 sum y_i^2
        let n = 3;
        let mut c = BTreeMap::new();
        c.insert((vec![2, 0, 0], 0), q(4));
        let s = SymPoly { n, aux: Aux::None, max_degree: 4, coeffs: c };
        assert_eq!(to_pe(&s).unwrap().poly.to_string(), "p1");
        let mut c = BTreeMap::new();
        c.insert((vec![1, 1, 1], 0), q(8));
        let s = SymPoly { n, aux: Aux::None, max_degree: 6, coeffs: c };
        assert_eq!(to_pe(&s).unwrap().poly.to_string(), "e");
    }

    #[test]
    fn mixed_parity_rejected() {
        let mut c = BTreeMap::new();
        c.insert((vec![2, 1, 0], 0), q(1));
        let s = SymPoly { n: 3, aux: Aux::None, max_degree: 6, coeffs: c };
        assert!(to_pe(&s).is_err());
    }

    #[test]
    fn spinor_sum_has_no_euler_term() {
        let sum = ch_spinor(4, 1, 12).add(&ch_spinor(4, -1, 12));
        let pe = to_pe(&sum).unwrap();
        assert!(pe.poly.terms.keys().all(|k| k[3] % 2 == 0));
        let diff = to_pe(&ch_spinor(4, 1, 8)).unwrap().poly.sub(&to_pe(&ch_spinor(4, -1, 8)).unwrap().poly);
        assert_eq!(diff.homogeneous_part(8).to_string(), "e");
    }

    #[test]
    fn lambda2_low_terms() {
        let pe = to_pe(&ch_lambda2_vector(8, 8)).unwrap();
        assert_eq!(pe.coefficient_of("p1").unwrap(), q(14));
        assert_eq!(pe.coefficient_of("p1^2").unwrap(), q_frac(7, 6));
        assert_eq!(pe.coefficient_of("p2").unwrap(), q_frac(-4, 3));
    }

    fn published(text: &str) -> GradedPoly {
        GradedPoly::parse(&pe_gens(8, Aux::None), text).unwrap()
    }

    #[test]
    fn half_spin_16_matches_published_expansion() {
        let pe = to_pe(&ch_spinor(8, 1, 16)).unwrap();
        assert_eq!(pe.poly, published(golden::CH_DELTA16_PLUS));
    }

    #[test]
    fn lambda2_16_matches_published_expansion() {
        let pe = to_pe(&ch_lambda2_vector(8, 16)).unwrap();
        assert_eq!(pe.poly, published(golden::CH_LAMBDA2_RHO16));
    }

    #[test]
    fn e8_adjoint_degree_16_modulo_p1() {
        let w = ch_lambda2_vector(8, 16).add(&ch_spinor(8, 1, 16));
        let top = to_pe(&w).unwrap().poly.homogeneous_part(16);
        let mut reduced = GradedPoly::zero(&top.gens);
        for (e, c) in &top.terms {
            if e[0] == 0 {
                reduced.add_term(e.clone(), c.clone());
            }
        }
        assert_eq!(reduced, published(golden::CH8_E8_MOD_P1));
    }

    #[test]
    fn round_trip_through_pontryagin_classes() {
        for (n, s) in [(5, ch_spinor(5, -1, 14)), (6, ch_lambda2_vector(6, 14)), (4, ch_vector(4, 14))] {
            let pe = to_pe(&s).unwrap();
            assert_eq!(from_pe(&pe, 14).unwrap(), s, "n = {n}");
        }
    }

    fn eval_q(p: &GradedPoly, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &p.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    proptest::proptest! {
        #[test]
        fn reduction_agrees_with_pointwise_evaluation(
            xs in proptest::collection::vec(-3i64..=3, 5),
            which in 0usize..3,
            degree in 0u32..=7,
        ) {
            let n = 5;
            let weights = match which {
                0 => vector_weights(n),
                1 => lambda2_vector_weights(n),
                _ => spinor_weights(n, -1),
            };
            let s = SymPoly::from_weights(n, Aux::None, &weights, 14);
            let pe = to_pe(&s).unwrap().poly.homogeneous_part(2 * degree);
            let x: Vec<Q> = xs.iter().map(|&v| q(v)).collect();
            let z: Vec<Q> = x.iter().map(|v| v * v).collect();
            let mut point = Vec::new();
            for i in 1..n {
                // e_i(z) by expanding prod (1 + z_j t)
                let mut el = vec![q(1)];
                for zj in &z {
                    let mut next = el.clone();
                    next.push(q(0));
                    for k in 1..next.len() {
                        next[k] += &el[k - 1] * zj;
                    }
                    el = next;
                }
                point.push(el[i].clone());
            }
            point.push(x.iter().product());
            // sum over weights of (w . x / 2)^d / d!
            let mut direct = Q::zero();
            for w in &weights {
                let dot: Q = w.coords.iter().zip(&x).map(|(c, v)| q(*c) * v).sum::<Q>() / q(2);
                direct += q(w.mult) * num_traits::pow(dot, degree as usize) / qz(&factorial(degree));
            }
            proptest::prop_assert_eq!(eval_q(&pe, &point), direct);
        }
    }

    #[test]
    fn zero_one_counts() {
        let mut c = ZeroOneCounter::new();
        // e_1^2 = m_2 + 2 m_11
        assert_eq!(c.count(&[1, 1], &[2]), BigInt::one());
        assert_eq!(c.count(&[1, 1], &[1, 1]), BigInt::from(2));
        // e_2 e_1 = m_21 + 3 m_111
        assert_eq!(c.count(&[2, 1], &[1, 1, 1]), BigInt::from(3));
        assert_eq!(c.count(&[2, 1], &[3]), BigInt::zero());
    }
}
