use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::fundpoly::{s_reduce, v_class, FundPolyBuilder, VVector};
use super::index::IndexEngine;
use super::vclass::VEngine;
use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::{q, qz, to_integer, Q, QMatrix};

/// How classes in `V(G)` are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// Decompose in `R(G)`, write as a polynomial in the fundamentals, reduce modulo `I^2`.
    Polynomial,
    /// Adams operations in `R(G)` followed by the linear recursion of [`VEngine`].
    Recursive,
    /// Fitted invariant functionals of [`IndexEngine`].
    Index,
}

impl Route {
    /// A route whose cost is reasonable for `g`: the recursive engine needs the weight systems
    /// of the fundamental representations, which is prohibitive for E7 and E8.
    pub fn default_for(g: &Group) -> Route {
        let max_dim = (0..g.rank())
            .filter(|&i| !g.rs.is_torus[i])
            .map(|i| g.weyl_dim_unchecked(&g.rs.fundamental_weight(i)))
            .max()
            .unwrap_or_default();
        if max_dim <= BigInt::from(10_000) {
            Route::Recursive
        } else {
            Route::Index
        }
    }
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= n - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// `v(lambda^j u)` from `v(psi^i u)`, `i = 1..j`. In `S(G)` products of augmentation-ideal
/// elements vanish, so `lambda_t(u) = (1 + t)^eps (1 + sum_i (-1)^{i+1} psi^i(u - eps) t^i / i)`.
pub fn lambda_column_from_adams(eps: &BigInt, psi: &[VVector], j: usize) -> VVector {
    let n = psi.first().map_or(0, |v| v.len());
    let mut out = vec![Q::zero(); n];
    for i in 1..=j {
        let c = qz(&binomial(eps, j - i)) / q(i as i64) * if i % 2 == 1 { q(1) } else { q(-1) };
        for (o, x) in out.iter_mut().zip(&psi[i - 1]) {
            *o += &c * x;
        }
    }
    out
}

/// Matrix whose columns are `v(lambda^j u)`, `j = 1..rank`, with its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicMatrix {
    pub columns: Vec<Vec<BigInt>>,
    pub det: BigInt,
}

impl CyclicMatrix {
    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_columns(&self.columns.iter().map(|c| c.iter().map(qz).collect()).collect::<Vec<_>>())
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        let n = self.columns.first().map_or(0, |c| c.len());
        (0..n).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect()
    }
}

fn adams_columns(g: &Group, u: &VirtualRep, count: usize, route: Route) -> Result<Vec<VVector>> {
    match route {
        Route::Index => {
            let idx = IndexEngine::new(g)?;
            let vu = idx.v_of(u);
            Ok((1..=count as i64).map(|i| idx.adams_matrix(i).mul_vec(&vu)).collect())
        }
        _ => {
            let mut eng = VEngine::new(g);
            (1..=count as i64).map(|i| Ok(eng.of(&g.adams(i, u)?)?.iter().map(qz).collect())).collect()
        }
    }
}

/// Columns `v(lambda^j u)` for `j = 1..count` by the chosen route.
pub fn lambda_columns(g: &Group, u: &VirtualRep, count: usize, route: Route) -> Result<Vec<VVector>> {
    match route {
        Route::Polynomial => {
            let series = g.lambda_series(count, u)?;
            let dims = generator_dims(g);
            let mut builder = FundPolyBuilder::new(g);
            series[1..].iter().map(|x| Ok(v_class(&s_reduce(&builder.convert(x)?, &dims)))).collect()
        }
        _ => {
            let psi = adams_columns(g, u, count, route)?;
            let eps = g.dim(u);
            Ok((1..=count).map(|j| lambda_column_from_adams(&eps, &psi, j)).collect())
        }
    }
}

pub(crate) fn generator_dims(g: &Group) -> Vec<BigInt> {
    (0..g.rank()).map(|i| g.weyl_dim_unchecked(&g.rs.fundamental_weight(i))).collect()
}

/// The matrix of `v(lambda^j u)`; a nonzero determinant certifies that `u` generates
/// `V(G) (x) Q` as a module over the Adams operations.
pub fn cyclic_matrix(g: &Group, u: &VirtualRep, route: Route) -> Result<CyclicMatrix> {
    let l = g.rank();
    let cols = lambda_columns(g, u, l, route)?;
    let columns: Vec<Vec<BigInt>> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| c.iter().map(|x| to_integer(x, &format!("column {}", j + 1))).collect())
        .collect::<Result<_>>()?;
    let m = QMatrix::from_columns(&cols);
    let det = to_integer(&m.det(), "determinant")?;
    Ok(CyclicMatrix { columns, det })
}

/// Matrix of `psi^k` on `V(G) (x) Q` in the basis of fundamental generators.
pub fn adams_matrix_on_v(g: &Group, k: i64, route: Route) -> Result<QMatrix> {
    if k < 1 {
        return Err(Error::BadOperationIndex(k));
    }
    match route {
        Route::Polynomial => {
            let dims = generator_dims(g);
            let mut builder = FundPolyBuilder::new(g);
            let cols: Vec<VVector> = (0..g.rank())
                .map(|j| {
                    let x = g.adams(k, &g.fundamental(j))?;
                    Ok(v_class(&s_reduce(&builder.convert(&x)?, &dims)))
                })
                .collect::<Result<_>>()?;
            Ok(QMatrix::from_columns(&cols))
        }
        Route::Recursive => VEngine::new(g).adams_matrix(k),
        Route::Index => Ok(IndexEngine::new(g)?.adams_matrix(k)),
    }
}

/// The type `(2 r_1 - 1, ..., 2 r_l - 1)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOf {
    pub entries: Vec<i64>,
}

impl TypeOf {
    /// The weights `r_i`.
    pub fn weights(&self) -> Vec<i64> {
        self.entries.iter().map(|e| (e + 1) / 2).collect()
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl fmt::Display for TypeOf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Divides a monic polynomial by `t - c` when `c` is a root.
fn deflate(p: &[Q], c: &Q) -> Option<Vec<Q>> {
    let n = p.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (1..=n).rev() {
        carry = &p[i] + &carry * c;
        out[i - 1] = carry.clone();
    }
    if (&p[0] + &carry * c).is_zero() {
        Some(out)
    } else {
        None
    }
}

/// Reads the type off the characteristic polynomial of `psi^2`, whose roots must all be of
/// the form `2^r` with `1 <= r <= max_r`.
pub fn type_from_adams_matrix(m2: &QMatrix, max_r: usize) -> Result<TypeOf> {
    let mut p = m2.charpoly();
    let mut rs = Vec::new();
    let mut root = Q::one();
    for r in 1..=max_r {
        root *= q(2);
        while p.len() > 1 {
            match deflate(&p, &root) {
                Some(d) => {
                    p = d;
                    rs.push(r as i64);
                }
                None => break,
            }
        }
        if p.len() == 1 {
            break;
        }
    }
    if p.len() > 1 {
        let shown: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        return Err(Error::UnexpectedEigenvalue(shown.join(", ")));
    }
    let mut entries: Vec<i64> = rs.iter().map(|r| 2 * r - 1).collect();
    entries.sort();
    Ok(TypeOf { entries })
}

/// Type of `G` from the eigenvalues of `psi^2` on `V(G) (x) Q`. A quotient annotation is
/// ignored: a finite covering does not change the rational type.
pub fn type_of(g: &Group, route: Route) -> Result<TypeOf> {
    let m2 = adams_matrix_on_v(g, 2, route)?;
    let t = type_from_adams_matrix(&m2, g.rs.dim_group())?;
    if t.total() != g.rs.dim_group() as i64 {
        return Err(Error::Inconsistent(format!("type {t} does not sum to dim G = {}", g.rs.dim_group())));
    }
    Ok(t)
}

/// Rational model of `K^*(G)`: an exterior algebra on odd generators `x_i`, each an
/// eigenvector of `phi^k` with eigenvalue `k^{r_i}`. On a monomial in `m` generators the
/// operation (`psi^k` for even `m`, `phi^k` for odd `m`) multiplies by
/// `k^{floor(m/2)} prod k^{r_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorModel {
    pub weights: Vec<i64>,
}

/// Element of the exterior algebra: monomials indexed by bit masks of generators.
pub type ExtElement = BTreeMap<u64, Q>;

impl ExteriorModel {
    pub fn generators(&self) -> usize {
        self.weights.len()
    }

    pub fn generator(&self, i: usize) -> ExtElement {
        BTreeMap::from([(1u64 << i, Q::one())])
    }

    fn factor(&self, k: i64, mask: u64) -> Q {
        let m = mask.count_ones() as usize;
        let mut e = (m / 2) as i64;
        for (i, r) in self.weights.iter().enumerate() {
            if mask >> i & 1 == 1 {
                e += r;
            }
        }
        qz(&num_traits::pow(BigInt::from(k), e as usize))
    }

    /// `psi^k` on even parts and `phi^k` on odd parts.
    pub fn op(&self, k: i64, x: &ExtElement) -> ExtElement {
        x.iter().map(|(m, c)| (*m, c * self.factor(k, *m))).collect()
    }

    pub fn mul(&self, x: &ExtElement, y: &ExtElement) -> ExtElement {
        let mut out: ExtElement = BTreeMap::new();
        for (a, c) in x {
            for (b, d) in y {
                if a & b != 0 {
                    continue;
                }
                // Sign of merging: count pairs (i in a, j in b) with i > j.
                let mut swaps = 0u32;
                for j in 0..64 {
                    if b >> j & 1 == 1 {
                        swaps += (a >> (j + 1)).count_ones();
                    }
                }
                let s = if swaps % 2 == 0 { q(1) } else { q(-1) };
                let e = out.entry(a | b).or_insert_with(Q::zero);
                *e += c * d * s;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn random_homogeneous(&self, rng: &mut ChaCha8Rng, odd: bool) -> ExtElement {
        let n = self.generators();
        let mut x = BTreeMap::new();
        for _ in 0..4 {
            let mask: u64 = rng.gen_range(0..(1u64 << n));
            if (mask.count_ones() % 2 == 1) == odd {
                *x.entry(mask).or_insert_with(Q::zero) += q(rng.gen_range(-5..=5));
            }
        }
        x.retain(|_, c: &mut Q| !c.is_zero());
        x
    }

    /// Checks the axioms of a `Z/2`-graded Psi-ring on random homogeneous samples:
    /// `psi^k(xy) = psi^k x psi^k y` (even x, y), `phi^k(xy) = psi^k(x) phi^k(y)` (x even,
    /// y odd), `psi^k(xy) = k phi^k(x) phi^k(y)` (x, y odd), and `op^k op^l = op^{kl}`.
    pub fn check_axioms(&self, samples: usize, seed: u64) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fail = |what: &str| Err(Error::Inconsistent(format!("exterior model violates {what}")));
        for _ in 0..samples {
            let k: i64 = rng.gen_range(2..=5);
            let l: i64 = rng.gen_range(2..=5);
            let e1 = self.random_homogeneous(&mut rng, false);
            let e2 = self.random_homogeneous(&mut rng, false);
            let o1 = self.random_homogeneous(&mut rng, true);
            let o2 = self.random_homogeneous(&mut rng, true);
            if self.op(k, &self.mul(&e1, &e2)) != self.mul(&self.op(k, &e1), &self.op(k, &e2)) {
                return fail("multiplicativity on even parts");
            }
            if self.op(k, &self.mul(&e1, &o1)) != self.mul(&self.op(k, &e1), &self.op(k, &o1)) {
                return fail("phi^k(xy) = psi^k(x) phi^k(y)");
            }
            let lhs = self.op(k, &self.mul(&o1, &o2));
            let rhs: ExtElement =
                self.mul(&self.op(k, &o1), &self.op(k, &o2)).into_iter().map(|(m, c)| (m, c * q(k))).collect();
            if lhs != rhs {
                return fail("psi^k(xy) = k phi^k(x) phi^k(y)");
            }
            if self.op(k, &self.op(l, &o1)) != self.op(k * l, &o1) || self.op(k, &self.op(l, &e1)) != self.op(k * l, &e1) {
                return fail("composition");
            }
        }
        Ok(())
    }
}

/// Exterior model of `K^*(G) (x) Q` with generator weights read off the type.
pub fn exterior_model(g: &Group, route: Route) -> Result<ExteriorModel> {
    let t = type_of(g, route)?;
    Ok(ExteriorModel { weights: t.weights() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_cyclic_by_three_routes() {
        let g = Group::parse("F4").unwrap();
        let u = g.fundamental(3);
        let expect = vec![
            vec![0, 0, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>(),
            vec![1, 0, 1, 0].into_iter().map(BigInt::from).collect(),
            vec![26, 1, 0, 51].into_iter().map(BigInt::from).collect(),
            vec![377, -1, 52, -52].into_iter().map(BigInt::from).collect(),
        ];
        for route in [Route::Polynomial, Route::Recursive, Route::Index] {
            let c = cyclic_matrix(&g, &u, route).unwrap();
            assert_eq!(c.columns, expect, "{route:?}");
            assert_eq!(c.det, BigInt::from(351));
        }
    }

    #[test]
    fn su2_type_and_model() {
        let g = Group::parse("A1").unwrap();
        let t = type_of(&g, Route::Recursive).unwrap();
        assert_eq!(t.entries, vec![3]);
        let m = exterior_model(&g, Route::Recursive).unwrap();
        assert_eq!(m.weights, vec![2]);
        m.check_axioms(20, 1).unwrap();
    }

    #[test]
    fn deflation_rejects_other_roots() {
        let m = QMatrix::from_i64(&[vec![3]]);
        assert!(matches!(type_from_adams_matrix(&m, 10), Err(Error::UnexpectedEigenvalue(_))));
    }
}
