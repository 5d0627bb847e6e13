//! Image of `V(G) (x) Q` in the indecomposables of the invariant polynomial ring.
//!
//! Write the degree-`d` part of the Chern character of `V_lambda` modulo products of
//! lower-degree invariants. The Weyl character formula shows that this class has the form
//! `phi_f(V_lambda) = dim(lambda) * (f(lambda + rho) - f(rho))` for a Weyl-invariant
//! polynomial `f` of degree `d`. The polynomials `f` are not written down in closed form.
//! They are fitted inside the span of products of orbit power sums
//! `P_{O,k}(x) = sum_{nu in O} (nu, x)^k`, subject to the requirement that `phi_f` kills
//! `I^2`. For a probe `a` with known weights and any dominant `b`, that requirement reads
//!
//! `sum_{nu} m_a(nu) D(nu + b + rho) f(nu + b + rho) = dim(a) dim(b) (f(a + rho) + f(b + rho) - f(rho))`
//!
//! where `D` is the Weyl dimension polynomial (Brauer–Klimyk with the folding absorbed by
//! the invariance of `f` and the skew-invariance of `D`). The solution space in degree `d`
//! must have the dimension of the degree-`d` primitives; this is asserted. Adams operations
//! act on the resulting coordinates by `k^d`.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use parking_lot::RwLock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::{q, qz, Q, QMatrix};
use crate::rootdata::{GroupSpec, RootSystem, Series, Weight};

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn to_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((x % &p) + &p) % &p;
    r.to_u64().unwrap()
}

/// Products of power sums `prod P_{o,k}`, stored as `(orbit, k)` pairs.
type Monomial = Vec<(usize, usize)>;

struct Factor {
    group: Group,
    coords: Range<usize>,
    orbits: Vec<Vec<Weight>>,
    /// Orbits available to extend the spanning set, smallest first.
    spare: Vec<Vec<Weight>>,
    rho_den: BigInt,
    kmax: usize,
    power_sums: RwLock<HashMap<Weight, Arc<Vec<Vec<BigInt>>>>>,
}

impl Factor {
    fn new(series: Series, rank: usize, coords: Range<usize>) -> Result<Factor> {
        let group = Group::new(&GroupSpec::simple(series, rank)?)?;
        let mut orbits: Vec<Vec<Weight>> =
            (0..rank).map(|i| group.rs.weyl_orbit(&group.rs.fundamental_weight(i))).collect::<Result<_>>()?;
        orbits.sort_by_key(|o| o.len());
        orbits.retain(|o| o.len() <= 20000);
        let first = orbits.remove(0);
        let rho = group.rs.weyl_vector.clone();
        let rho_den = (0..group.rs.num_positive_roots()).map(|k| BigInt::from(group.rs.coroot_pairing(&rho, k))).product();
        let kmax = group.rs.degrees().into_iter().max().unwrap_or(2);
        Ok(Factor {
            group,
            coords,
            orbits: vec![first],
            spare: orbits,
            rho_den,
            kmax,
            power_sums: RwLock::new(HashMap::new()),
        })
    }

    /// Weyl dimension polynomial at `mu`, times `prod <rho, alpha^vee>`.
    fn dnum(&self, mu: &[i64]) -> BigInt {
        let rs = &self.group.rs;
        let mut p = BigInt::one();
        for k in 0..rs.num_positive_roots() {
            let c = rs.coroot_pairing(mu, k);
            if c == 0 {
                return BigInt::zero();
            }
            p *= c;
        }
        p
    }

    fn dim(&self, lambda: &[i64]) -> BigInt {
        let shifted: Weight = lambda.iter().zip(&self.group.rs.weyl_vector).map(|(a, b)| a + b).collect();
        self.dnum(&shifted) / &self.rho_den
    }

    /// `P_{o,k}(x)` for all orbits `o` and `k <= kmax`, exactly.
    fn sums(&self, x: &[i64]) -> Arc<Vec<Vec<BigInt>>> {
        if let Some(s) = self.power_sums.read().get(x) {
            return s.clone();
        }
        let rs = &self.group.rs;
        let table: Vec<Vec<BigInt>> = self
            .orbits
            .iter()
            .map(|orbit| {
                let mut out = vec![BigInt::zero(); self.kmax + 1];
                for nu in orbit {
                    let p = BigInt::from(rs.inner_scaled(nu, x));
                    if p.is_zero() {
                        continue;
                    }
                    let mut pw = p.clone();
                    for slot in out.iter_mut().skip(2) {
                        pw *= &p;
                        *slot += &pw;
                    }
                }
                out
            })
            .collect();
        let t = Arc::new(table);
        self.power_sums.write().insert(x.to_vec(), t.clone());
        t
    }

    fn eval(&self, m: &Monomial, x: &[i64]) -> BigInt {
        let s = self.sums(x);
        m.iter().fold(BigInt::one(), |acc, &(o, k)| acc * &s[o][k])
    }

    fn eval_mod(&self, m: &Monomial, table: &[Vec<u64>]) -> u64 {
        m.iter().fold(1u64, |acc, &(o, k)| mulmod(acc, table[o][k]))
    }

    fn sums_mod(&self, x: &[i64]) -> Vec<Vec<u64>> {
        let rs = &self.group.rs;
        self.orbits
            .iter()
            .map(|orbit| {
                let mut out = vec![0u64; self.kmax + 1];
                for nu in orbit {
                    let p = to_mod(&BigInt::from(rs.inner_scaled(nu, x)));
                    let mut pw = p;
                    for slot in out.iter_mut().skip(2) {
                        pw = mulmod(pw, p);
                        *slot = (*slot + pw) % PRIME;
                    }
                }
                out
            })
            .collect()
    }
}

/// Dimension of the degree-`d` part of a polynomial ring with generators of the given degrees.
fn hilbert_coefficient(degrees: &[usize], d: usize) -> usize {
    let mut c = vec![0usize; d + 1];
    c[0] = 1;
    for &g in degrees {
        for n in g..=d {
            c[n] += c[n - g];
        }
    }
    c[d]
}

/// Greedy rank selection modulo a prime; returns the indices of independent rows.
fn independent_rows(rows: &[Vec<u64>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        for (pc, b) in &basis {
            let f = v[*pc];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| *x != 0) {
            let inv = modpow(v[pc], PRIME - 2);
            for x in v.iter_mut() {
                *x = mulmod(*x, inv);
            }
            for (_, b) in basis.iter_mut() {
                let f = b[pc];
                if f != 0 {
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                    }
                }
            }
            basis.push((pc, v));
            chosen.push(idx);
        }
    }
    chosen
}

fn modpow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

/// One fitted functional: either a power-sum combination on a simple factor or a torus
/// coordinate.
#[derive(Clone, Debug)]
enum Kind {
    Factor { factor: usize, basis: Vec<Monomial>, coeffs: Vec<Q> },
    Torus { coord: usize },
}

#[derive(Clone, Debug)]
struct Functional {
    degree: usize,
    kind: Kind,
}

/// Coordinates on `V(G) (x) Q` that diagonalise every Adams operation.
pub struct IndexEngine {
    rs: RootSystem,
    factors: Vec<Factor>,
    functionals: Vec<Functional>,
    b: QMatrix,
    b_inv: QMatrix,
}

impl IndexEngine {
    pub fn new(g: &Group) -> Result<IndexEngine> {
        let rs = g.rs.clone();
        let mut factors = Vec::new();
        let mut functionals = Vec::new();
        for (f, range) in rs.spec.factors.iter().zip(rs.factor_ranges.clone()) {
            if f.series == Series::Torus {
                for coord in range {
                    functionals.push(Functional { degree: 1, kind: Kind::Torus { coord } });
                }
                continue;
            }
            let idx = factors.len();
            factors.push(Factor::new(f.series, f.rank, range)?);
            let fac = factors.last_mut().unwrap();
            for (degree, coeffs, basis) in fit_factor(fac)? {
                functionals.push(Functional { degree, kind: Kind::Factor { factor: idx, basis, coeffs } });
            }
        }
        let mut engine = IndexEngine { rs, factors, functionals, b: QMatrix::zeros(0, 0), b_inv: QMatrix::zeros(0, 0) };
        let rank = engine.rs.rank;
        if engine.functionals.len() != rank {
            return Err(Error::Inconsistent(format!(
                "found {} primitive functionals for rank {rank}",
                engine.functionals.len()
            )));
        }
        let cols: Vec<Vec<Q>> = (0..rank).map(|k| engine.phi(&engine.rs.fundamental_weight(k))).collect();
        engine.b = QMatrix::from_columns(&cols);
        engine.b_inv = engine.b.inverse().map_err(|_| Error::Singular("primitive functionals are dependent".into()))?;
        Ok(engine)
    }

    /// Degrees of the fitted functionals, in the order of the coordinates.
    pub fn degrees(&self) -> Vec<usize> {
        self.functionals.iter().map(|f| f.degree).collect()
    }

    fn full_dim(&self, lambda: &[i64]) -> BigInt {
        self.factors.iter().map(|f| f.dim(&lambda[f.coords.clone()])).product()
    }

    fn value(&self, func: &Functional, lambda: &[i64]) -> Q {
        match &func.kind {
            Kind::Torus { coord } => qz(&self.full_dim(lambda)) * q(lambda[*coord]),
            Kind::Factor { factor, basis, coeffs } => {
                let fac = &self.factors[*factor];
                let local: Weight = lambda[fac.coords.clone()].to_vec();
                let shifted: Weight = local.iter().zip(&fac.group.rs.weyl_vector).map(|(a, b)| a + b).collect();
                let rho = &fac.group.rs.weyl_vector;
                let mut diff = Q::zero();
                for (m, c) in basis.iter().zip(coeffs) {
                    diff += c * qz(&(fac.eval(m, &shifted) - fac.eval(m, rho)));
                }
                qz(&self.full_dim(lambda)) * diff
            }
        }
    }

    /// Values of all functionals on `V_lambda`.
    pub fn phi(&self, lambda: &[i64]) -> Vec<Q> {
        self.functionals.iter().map(|f| self.value(f, lambda)).collect()
    }

    /// `v(V_lambda)` in the generator basis.
    pub fn v_irrep(&self, lambda: &[i64]) -> Vec<Q> {
        self.b_inv.mul_vec(&self.phi(lambda))
    }

    pub fn v_of(&self, x: &VirtualRep) -> Vec<Q> {
        let mut acc = vec![Q::zero(); self.rs.rank];
        for (w, c) in &x.terms {
            for (a, b) in acc.iter_mut().zip(self.v_irrep(w)) {
                *a += b * qz(c);
            }
        }
        acc
    }

    /// Matrix of `psi^k` on `V(G) (x) Q` in the generator basis.
    pub fn adams_matrix(&self, k: i64) -> QMatrix {
        let n = self.rs.rank;
        let mut d = QMatrix::zeros(n, n);
        for (i, f) in self.functionals.iter().enumerate() {
            d[(i, i)] = qz(&num_traits::pow(BigInt::from(k), f.degree));
        }
        self.b_inv.mul(&d).mul(&self.b)
    }
}

type Fitted = (usize, Vec<Q>, Vec<Monomial>);

fn fit_factor(fac: &mut Factor) -> Result<Vec<Fitted>> {
    let degrees = fac.group.rs.degrees();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e5f);
    let rank = fac.group.rank();
    let probe_points: Vec<Weight> =
        (0..64).map(|_| (0..rank).map(|_| rng.gen_range(-40..=40)).collect()).collect();
    let probe = fac.group.fundamental(
        (0..rank).min_by_key(|&i| (fac.group.weyl_dim_unchecked(&fac.group.rs.fundamental_weight(i)), i)).unwrap(),
    );
    let a = probe.terms.keys().next().unwrap().clone();
    let a_char = fac.group.full_character(&a)?;
    let dim_a = fac.dim(&a);
    let rho = fac.group.rs.weyl_vector.clone();
    let mut bs: Vec<Weight> = small_dominant_weights(rank, 3);
    bs.retain(|b| b.iter().any(|x| *x != 0));

    let mut out = Vec::new();
    let mut dmax = *degrees.iter().max().unwrap();
    let mut d = 2;
    while d <= dmax {
        let expected = hilbert_coefficient(&degrees, d);
        let primitives = degrees.iter().filter(|&&x| x == d).count();
        if expected == 0 {
            d += 1;
            continue;
        }
        let basis = loop {
            let tables: Vec<Vec<Vec<u64>>> = probe_points.iter().map(|x| fac.sums_mod(x)).collect();
            let mut parts: Vec<(usize, usize)> = Vec::new();
            for o in 0..fac.orbits.len() {
                for k in 2..=d.min(fac.kmax) {
                    if tables.iter().any(|t| t[o][k] != 0) {
                        parts.push((o, k));
                    }
                }
            }
            let mut cands: Vec<Monomial> = monomials(d, &parts);
            cands.sort_by_key(|m| m.len());
            let columns: Vec<Vec<u64>> =
                cands.iter().map(|m| tables.iter().map(|t| fac.eval_mod(m, t)).collect()).collect();
            let chosen = independent_rows(&columns);
            if chosen.len() >= expected {
                if chosen.len() > expected {
                    return Err(Error::Inconsistent(format!("invariants of degree {d} exceed the expected count")));
                }
                break chosen.into_iter().map(|i| cands[i].clone()).collect::<Vec<_>>();
            }
            if fac.spare.is_empty() {
                return Err(Error::Singular(format!("orbit power sums do not span invariants of degree {d}")));
            }
            fac.orbits.push(fac.spare.remove(0));
            fac.power_sums.write().clear();
        };
        let fac_ref: &Factor = fac;
        let rows: Vec<Vec<Q>> = bs
            .par_iter()
            .map(|b| {
                let dim_b = fac_ref.dim(b);
                let br: Weight = b.iter().zip(&rho).map(|(x, r)| x + r).collect();
                let ar: Weight = a.iter().zip(&rho).map(|(x, r)| x + r).collect();
                let scale = &dim_a * &dim_b * &fac_ref.rho_den;
                basis
                    .iter()
                    .map(|m| {
                        let mut lhs = BigInt::zero();
                        let mut p = vec![0i64; rank];
                        for (nu, mult) in a_char.iter() {
                            for i in 0..rank {
                                p[i] = nu[i] + br[i];
                            }
                            let dn = fac_ref.dnum(&p);
                            if !dn.is_zero() {
                                lhs += mult * dn * fac_ref.eval(m, &p);
                            }
                        }
                        let rhs = &scale * (fac_ref.eval(m, &ar) + fac_ref.eval(m, &br) - fac_ref.eval(m, &rho));
                        qz(&(lhs - rhs))
                    })
                    .collect()
            })
            .collect();
        let system = QMatrix::from_rows(rows);
        let null = system.nullspace();
        if null.len() != primitives {
            return Err(Error::Inconsistent(format!(
                "degree {d}: constraint nullity {} but {primitives} primitive invariants expected",
                null.len()
            )));
        }
        for coeffs in null {
            out.push((d, coeffs, basis.clone()));
        }
        d += 1;
        if out.len() == rank {
            dmax = d - 1;
        }
    }
    Ok(out)
}

/// Multisets of `(orbit, k)` parts whose `k` sum to `d`.
fn monomials(d: usize, parts: &[(usize, usize)]) -> Vec<Monomial> {
    fn go(rest: usize, start: usize, parts: &[(usize, usize)], cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..parts.len() {
            if parts[i].1 <= rest {
                cur.push(parts[i]);
                go(rest - parts[i].1, i, parts, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, 0, parts, &mut Vec::new(), &mut out);
    out
}

/// Dominant weights with coordinate sum at most `n`, in order of increasing sum.
fn small_dominant_weights(rank: usize, n: i64) -> Vec<Weight> {
    let mut out = vec![vec![0i64; rank]];
    let mut frontier = vec![vec![0i64; rank]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            let start = w.iter().rposition(|x| *x > 0).unwrap_or(0);
            for i in start..rank {
                let mut v = w.clone();
                v[i] += 1;
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_ring::VEngine;

    #[test]
    fn matches_recursive_engine() {
        for label in ["A1", "A2", "G2", "B3", "C3", "D4", "F4", "A1xT1", "D5xT1"] {
            let g = Group::parse(label).unwrap();
            let idx = IndexEngine::new(&g).unwrap();
            let mut rec = VEngine::new(&g);
            let rank = g.rank();
            for w in small_dominant_weights(rank, 2) {
                let expect: Vec<Q> = rec.irrep(&w).unwrap().iter().map(qz).collect();
                assert_eq!(idx.v_irrep(&w), expect, "{label} {w:?}");
            }
        }
    }

    #[test]
    fn degrees_found() {
        let g = Group::parse("D4").unwrap();
        let mut d = IndexEngine::new(&g).unwrap().degrees();
        d.sort();
        assert_eq!(d, vec![2, 4, 4, 6]);
    }

    #[test]
    fn hilbert_counts() {
        assert_eq!(hilbert_coefficient(&[2, 6, 8, 12], 12), 5);
        assert_eq!(small_dominant_weights(2, 1).len(), 3);
    }
}
