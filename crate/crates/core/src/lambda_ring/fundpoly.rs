use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::{qz, Q};
use crate::rootdata::Weight;

/// Polynomial in the fundamental generators `w_1, ..., w_l`. Torus coordinates are Laurent
/// variables, so their exponents may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FundPoly {
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl FundPoly {
    pub fn constant(rank: usize, c: BigInt) -> FundPoly {
        let mut p = FundPoly::default();
        p.add_term(vec![0; rank], c);
        p
    }

    pub fn generator(rank: usize, i: usize) -> FundPoly {
        let mut e = vec![0; rank];
        e[i] = 1;
        let mut p = FundPoly::default();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &FundPoly) -> FundPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FundPoly) -> FundPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> FundPoly {
        let mut out = FundPoly::default();
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &FundPoly) -> FundPoly {
        let mut out = FundPoly::default();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }

    /// Multiplies every monomial by `w^shift`.
    pub fn shift(&self, shift: &[i64]) -> FundPoly {
        FundPoly {
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone())).collect(),
        }
    }

    /// Evaluates in the representation ring: each `w_i` becomes the `i`-th fundamental
    /// representation.
    pub fn evaluate(&self, g: &Group) -> Result<VirtualRep> {
        let rank = g.rank();
        let mut out = VirtualRep::zero();
        for (e, c) in &self.terms {
            let mut torus = vec![0i64; rank];
            let mut acc = g.one();
            for (i, &k) in e.iter().enumerate() {
                if g.rs.is_torus[i] {
                    torus[i] = k;
                    continue;
                }
                if k < 0 {
                    return Err(Error::NotSimplyConnected(g.label().to_string()));
                }
                for _ in 0..k {
                    acc = g.tensor(&acc, &g.fundamental(i))?;
                }
            }
            for (w, m) in &acc.terms {
                let shifted: Weight = w.iter().zip(&torus).map(|(a, b)| a + b).collect();
                out.add_irrep(shifted, &(m * c));
            }
        }
        Ok(out)
    }

    /// Augmentation, given the dimensions of the generators.
    pub fn epsilon(&self, gen_dims: &[BigInt]) -> BigInt {
        self.terms.iter().map(|(e, c)| c * monomial_dim(e, gen_dims)).sum()
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&mono.join(""));
            }
        }
        out
    }
}

impl fmt::Display for FundPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.terms.keys().next().map_or(0, |e| e.len());
        let names: Vec<String> = (1..=rank).map(|i| format!("w{i}")).collect();
        write!(f, "{}", self.format_with(&names))
    }
}

fn monomial_dim(e: &[i64], gen_dims: &[BigInt]) -> BigInt {
    let mut d = BigInt::one();
    for (k, g) in e.iter().zip(gen_dims) {
        if *k > 0 {
            d *= num_traits::pow(g.clone(), *k as usize);
        } else if *k < 0 {
            // Only one-dimensional (torus) generators may carry negative exponents.
            assert!(g.is_one(), "negative exponent on a generator of dimension {g}");
        }
    }
    d
}

/// Image in `S(G) = R(G)/I^2`: a constant plus integer multiples of the generator classes `[w_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SClass {
    pub constant: BigInt,
    pub linear: Vec<BigInt>,
}

impl SClass {
    pub fn epsilon(&self, gen_dims: &[BigInt]) -> BigInt {
        &self.constant + self.linear.iter().zip(gen_dims).map(|(a, d)| a * d).sum::<BigInt>()
    }
}

/// Reduction modulo `I^2`. A monomial `m = prod w_i^{e_i}` reduces by iterating
/// `[xy] = eps_y [x] + eps_x [y] - eps_x eps_y`, which gives
/// `[m] = sum_i e_i (eps_m / eps_i) [w_i] - (deg m - 1) eps_m`.
pub fn s_reduce(p: &FundPoly, gen_dims: &[BigInt]) -> SClass {
    let rank = gen_dims.len();
    let mut constant = BigInt::zero();
    let mut linear = vec![BigInt::zero(); rank];
    for (e, c) in &p.terms {
        let eps = monomial_dim(e, gen_dims);
        let deg: i64 = e.iter().sum();
        if deg == 0 && e.iter().all(|k| *k == 0) {
            constant += c;
            continue;
        }
        for (i, &k) in e.iter().enumerate() {
            if k != 0 {
                linear[i] += c * BigInt::from(k) * (&eps / &gen_dims[i]);
            }
        }
        constant -= c * BigInt::from(deg - 1) * &eps;
    }
    SClass { constant, linear }
}

/// Element of `V(G) (x) Q` in the basis of generator classes.
pub type VVector = Vec<Q>;

/// Drops the constant of an `S(G)` class.
pub fn v_class(s: &SClass) -> VVector {
    s.linear.iter().map(qz).collect()
}

/// Memoised conversion of virtual representations into polynomials in the fundamental
/// generators. `V_lambda = V_{lambda - omega_j} w_j - (other constituents of that product)`,
/// where every other constituent is strictly lower than `lambda`.
pub struct FundPolyBuilder<'g> {
    g: &'g Group,
    memo: HashMap<Weight, FundPoly>,
}

impl<'g> FundPolyBuilder<'g> {
    pub fn new(g: &'g Group) -> Self {
        FundPolyBuilder { g, memo: HashMap::new() }
    }

    fn pick_generator(&self, lambda: &[i64]) -> Option<usize> {
        self.g
            .rs
            .semisimple_coords()
            .iter()
            .copied()
            .filter(|&i| lambda[i] > 0)
            .min_by_key(|&i| (self.g.weyl_dim_unchecked(&self.g.rs.fundamental_weight(i)), i))
    }

    /// Constituents of `V_{lambda - omega_j} (x) V_{omega_j}` other than `V_lambda`.
    fn lower_terms(&self, lambda: &[i64], j: usize) -> Result<(Weight, VirtualRep)> {
        let mut base = lambda.to_vec();
        base[j] -= 1;
        let prod = self.g.tensor(&VirtualRep::irrep(base.clone()), &self.g.fundamental(j))?;
        let mut rest = prod;
        rest.add_irrep(lambda.to_vec(), &BigInt::from(-1));
        Ok((base, rest))
    }

    pub fn irrep(&mut self, lambda: &[i64]) -> Result<FundPoly> {
        let rank = self.g.rank();
        let mut torus = vec![0i64; rank];
        let mut ss = lambda.to_vec();
        for i in 0..rank {
            if self.g.rs.is_torus[i] {
                torus[i] = lambda[i];
                ss[i] = 0;
            }
        }
        let mut stack = vec![ss.clone()];
        let mut pending: HashMap<Weight, (usize, Weight, VirtualRep)> = HashMap::new();
        while let Some(top) = stack.last().cloned() {
            if self.memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            let Some(j) = self.pick_generator(&top) else {
                self.memo.insert(top.clone(), FundPoly::constant(rank, BigInt::one()));
                stack.pop();
                continue;
            };
            if !pending.contains_key(&top) {
                let (base, rest) = self.lower_terms(&top, j)?;
                pending.insert(top.clone(), (j, base, rest));
            }
            let (j, base, rest) = &pending[&top];
            let missing: Vec<Weight> =
                std::iter::once(base).chain(rest.terms.keys()).filter(|w| !self.memo.contains_key(*w)).cloned().collect();
            if missing.is_empty() {
                let mut p = self.memo[base].mul(&FundPoly::generator(rank, *j));
                for (w, c) in &rest.terms {
                    p = p.sub(&self.memo[w].scale(c));
                }
                self.memo.insert(top.clone(), p);
                pending.remove(&top);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        Ok(self.memo[&ss].shift(&torus))
    }

    pub fn convert(&mut self, x: &VirtualRep) -> Result<FundPoly> {
        let mut out = FundPoly::default();
        for (w, c) in &x.terms {
            out = out.add(&self.irrep(w)?.scale(c));
        }
        Ok(out)
    }
}

/// Expresses a virtual representation of a simply connected group (times a torus) as a
/// polynomial in the fundamental representations.
pub fn to_fund_poly(g: &Group, x: &VirtualRep) -> Result<FundPoly> {
    if !g.rs.spec.is_simply_connected_times_torus() {
        return Err(Error::NotSimplyConnected(g.rs.spec.to_string()));
    }
    FundPolyBuilder::new(g).convert(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn su2_adjoint() {
        let g = Group::parse("A1").unwrap();
        let p = to_fund_poly(&g, &VirtualRep::irrep(vec![2])).unwrap();
        let mut expect = FundPoly::default();
        expect.add_term(vec![2], b(1));
        expect.add_term(vec![0], b(-1));
        assert_eq!(p, expect);
        assert_eq!(p.evaluate(&g).unwrap(), VirtualRep::irrep(vec![2]));
    }

    #[test]
    fn fundamentals_are_generators() {
        let g = Group::parse("G2").unwrap();
        assert_eq!(to_fund_poly(&g, &g.fundamental(1)).unwrap(), FundPoly::generator(2, 1));
    }

    #[test]
    fn torus_factor() {
        let g = Group::parse("A1xT1").unwrap();
        let p = to_fund_poly(&g, &VirtualRep::irrep(vec![1, -3])).unwrap();
        let mut expect = FundPoly::default();
        expect.add_term(vec![1, -3], b(1));
        assert_eq!(p, expect);
        assert_eq!(p.evaluate(&g).unwrap(), VirtualRep::irrep(vec![1, -3]));
    }

    #[test]
    fn reduction_of_constants_and_products() {
        let dims = vec![b(26), b(52)];
        assert_eq!(s_reduce(&FundPoly::constant(2, b(7)), &dims), SClass { constant: b(7), linear: vec![b(0), b(0)] });
        let mut p = FundPoly::default();
        p.add_term(vec![1, 1], b(1));
        assert_eq!(s_reduce(&p, &dims), SClass { constant: b(-1352), linear: vec![b(52), b(26)] });
    }
}
