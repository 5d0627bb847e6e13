//! Polynomials with rational coefficients over named, graded generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};

/// A named generator and its cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

pub type Gens = Arc<Vec<Generator>>;

pub fn gens(list: &[(&str, u32)]) -> Gens {
    Arc::new(list.iter().map(|(n, d)| Generator { name: n.to_string(), degree: *d }).collect())
}

/// A polynomial in the generators `gens`; keys are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    pub gens: Gens,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl GradedPoly {
    pub fn zero(gens: &Gens) -> GradedPoly {
        GradedPoly { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(gens: &Gens, c: Q) -> GradedPoly {
        let mut p = GradedPoly::zero(gens);
        p.add_term(vec![0; gens.len()], c);
        p
    }

    pub fn var(gens: &Gens, i: usize) -> GradedPoly {
        let mut e = vec![0; gens.len()];
        e[i] = 1;
        let mut p = GradedPoly::zero(gens);
        p.add_term(e, Q::one());
        p
    }

    pub fn var_named(gens: &Gens, name: &str) -> Result<GradedPoly> {
        let i = index_of(gens, name)?;
        Ok(GradedPoly::var(gens, i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(self.gens.iter()).map(|(e, g)| e * g.degree).sum()
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        debug_assert_eq!(self.gens, other.gens);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero(&self.gens);
        }
        GradedPoly { gens: self.gens.clone(), terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with terms of degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &GradedPoly, max_degree: u32) -> GradedPoly {
        let mut out = GradedPoly::zero(&self.gens);
        for (a, c) in &self.terms {
            let da = self.monomial_degree(a);
            for (b, d) in &other.terms {
                if da + self.monomial_degree(b) > max_degree {
                    continue;
                }
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> GradedPoly {
        let mut acc = GradedPoly::constant(&self.gens, Q::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn homogeneous_part(&self, d: u32) -> GradedPoly {
        GradedPoly {
            gens: self.gens.clone(),
            terms: self.terms.iter().filter(|(e, _)| self.monomial_degree(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| self.monomial_degree(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Whether generator `i` occurs.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// Writes `self = c * x_i + rest` when `x_i` occurs only linearly with a constant
    /// coefficient.
    pub fn split_linear(&self, i: usize) -> Option<(Q, GradedPoly)> {
        let mut c = Q::zero();
        let mut rest = GradedPoly::zero(&self.gens);
        for (e, v) in &self.terms {
            match e[i] {
                0 => rest.add_term(e.clone(), v.clone()),
                1 if e.iter().enumerate().all(|(j, &k)| j == i || k == 0) => c += v,
                _ => return None,
            }
        }
        (!c.is_zero()).then_some((c, rest))
    }

    /// Ring map sending generator `i` to `images[i]`, all over a common target.
    pub fn substitute(&self, images: &[GradedPoly]) -> GradedPoly {
        assert_eq!(images.len(), self.gens.len());
        let target = images.first().map(|p| p.gens.clone()).unwrap_or_else(|| self.gens.clone());
        let mut powers: HashMap<(usize, u32), GradedPoly> = HashMap::new();
        let mut out = GradedPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut acc = GradedPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = powers.entry((i, k)).or_insert_with(|| images[i].pow(k));
                acc = acc.mul(pw);
            }
            out = out.add(&acc);
        }
        out
    }

    /// The same polynomial over a larger generator list containing every current name.
    pub fn embed(&self, target: &Gens) -> Result<GradedPoly> {
        let map: Vec<usize> = self.gens.iter().map(|g| index_of(target, &g.name)).collect::<Result<_>>()?;
        let mut out = GradedPoly::zero(target);
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// The same polynomial over a generator list containing every generator it involves.
    pub fn embed_subset(&self, target: &Gens) -> Result<GradedPoly> {
        let mut out = GradedPoly::zero(target);
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    f[index_of(target, &self.gens[i].name)?] += k;
                }
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// Coefficient of the first term in display order.
    pub fn leading_coefficient(&self) -> Option<&Q> {
        self.terms.values().next_back()
    }

    /// Positive multiple with coprime integer coefficients, and the multiplier used.
    pub fn primitive(&self) -> (GradedPoly, Q) {
        if self.is_zero() {
            return (self.clone(), Q::one());
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let factor = BigRational::new(lcm, g.abs());
        (self.scale(&factor), factor)
    }

    /// Integer coefficients, if all are integral.
    pub fn integer_terms(&self) -> Option<BTreeMap<Vec<u32>, BigInt>> {
        self.terms.iter().map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer()))).collect()
    }

    /// Parses text such as `-39936 a2^9 + 1728 a2^5 a8 + 1/2 e`. Monomials are
    /// space-separated generator names with optional `^k`.
    pub fn parse(gens: &Gens, text: &str) -> Result<GradedPoly> {
        let bad = |what: &str| Error::Inconsistent(format!("cannot parse polynomial: {what}"));
        let mut out = GradedPoly::zero(gens);
        let cleaned = text.replace('-', " - ").replace('+', " + ");
        let mut sign = 1i64;
        let mut coeff: Option<Q> = None;
        let mut exps = vec![0u32; gens.len()];
        let mut any = false;
        let flush = |out: &mut GradedPoly, sign: i64, coeff: &mut Option<Q>, exps: &mut Vec<u32>, any: &mut bool| {
            if *any {
                let c = coeff.take().unwrap_or_else(Q::one) * q(sign);
                out.add_term(std::mem::replace(exps, vec![0; exps.len()]), c);
                *any = false;
            }
        };
        for tok in cleaned.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(&mut out, sign, &mut coeff, &mut exps, &mut any);
                    sign = if tok == "-" { -1 } else { 1 };
                }
                _ if tok.starts_with(|c: char| c.is_ascii_digit()) => {
                    let c: Q = match tok.split_once('/') {
                        Some((n, d)) => Q::new(n.parse().map_err(|_| bad(tok))?, d.parse().map_err(|_| bad(tok))?),
                        None => Q::from_integer(tok.parse().map_err(|_| bad(tok))?),
                    };
                    coeff = Some(coeff.unwrap_or_else(Q::one) * c);
                    any = true;
                }
                _ => {
                    let (name, k) = match tok.split_once('^') {
                        Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad(tok))?),
                        None => (tok, 1),
                    };
                    exps[index_of(gens, name)?] += k;
                    any = true;
                }
            }
        }
        flush(&mut out, sign, &mut coeff, &mut exps, &mut any);
        Ok(out)
    }

    /// Value modulo a prime at the given point.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return None;
            }
            let inv = den.modpow(&(&pb - 2u32), &pb);
            let mut t = c.numer().mod_floor(&pb) * inv % &pb;
            for (x, &k) in point.iter().zip(e) {
                t = t * BigInt::from(*x).modpow(&BigInt::from(k), &pb) % &pb;
            }
            acc = (acc + t) % &pb;
        }
        u64::try_from(acc).ok()
    }
}

pub fn index_of(gens: &Gens, name: &str) -> Result<usize> {
    gens.iter().position(|g| g.name == name).ok_or_else(|| Error::Unknown { kind: "generator", name: name.to_string() })
}

/// Monomials of degree `d` in generators of the given degrees.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(degrees: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = degrees[i];
        let max = if g == 0 { 0 } else { left / g };
        for k in (0..=max).rev() {
            cur.push(k);
            rec(degrees, i + 1, left - k * g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for GradedPoly {
    /// Terms in decreasing lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .zip(self.gens.iter())
                .filter(|(k, _)| **k > 0)
                .map(|(k, g)| if *k == 1 { g.name.clone() } else { format!("{}^{}", g.name, k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join(" "))?;
            } else {
                write!(f, "{} {}", a, mono.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;

    fn ab() -> Gens {
        gens(&[("a2", 2), ("a8", 8)])
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = ab();
        let text = "-39936 a2^9 + 1728 a2^5 a8 + a2 a8^2";
        let p = GradedPoly::parse(&g, text).unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(p.homogeneous_degree(), Some(18));
        let r = GradedPoly::parse(&g, "1/2 a2 - 3/4").unwrap();
        assert_eq!(r.coefficient(&[1, 0]), q_frac(1, 2));
        assert_eq!(r.coefficient(&[0, 0]), q_frac(-3, 4));
        assert!(GradedPoly::parse(&g, "p12").is_err());
    }

    #[test]
    fn primitive_and_linear_split() {
        let g = ab();
        let p = GradedPoly::parse(&g, "1/6 a2^4 - 1/4 a8").unwrap();
        let (prim, f) = p.primitive();
        assert_eq!(prim.to_string(), "2 a2^4 - 3 a8");
        assert_eq!(f, q(12));
        let (c, rest) = p.split_linear(1).unwrap();
        assert_eq!(c, q_frac(-1, 4));
        assert_eq!(rest.to_string(), "1/6 a2^4");
        assert!(GradedPoly::parse(&g, "a8^2").unwrap().split_linear(1).is_none());
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let g = ab();
        let x = GradedPoly::parse(&g, "a2^2 + a8").unwrap();
        let y = GradedPoly::parse(&g, "a2 - 2 a8").unwrap();
        let images = vec![GradedPoly::parse(&g, "3 a2").unwrap(), GradedPoly::parse(&g, "a2^4 + a8").unwrap()];
        assert_eq!(x.mul(&y).substitute(&images), x.substitute(&images).mul(&y.substitute(&images)));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(&[2, 8], 16).len(), 3);
        assert_eq!(monomials_of_degree(&[4, 8, 12], 12).len(), 3);
    }
}
