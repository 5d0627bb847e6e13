//! Root systems and Weyl-group primitives in Bourbaki numbering.
//!
//! Weights are integer vectors in the basis of fundamental weights. Torus factors add one
//! coordinate each and no roots.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, Q, QMatrix};

pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
    Torus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub series: Series,
    pub rank: usize,
}

impl Factor {
    pub fn new(series: Series, rank: usize) -> Result<Factor> {
        let f = Factor { series, rank };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.series {
            Series::A | Series::Torus => self.rank >= 1,
            Series::B | Series::C | Series::D => self.rank >= 2,
            Series::G2 => self.rank == 2,
            Series::F4 => self.rank == 4,
            Series::E6 => self.rank == 6,
            Series::E7 => self.rank == 7,
            Series::E8 => self.rank == 8,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(self.to_string()))
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::A => write!(f, "A{}", self.rank),
            Series::B => write!(f, "B{}", self.rank),
            Series::C => write!(f, "C{}", self.rank),
            Series::D => write!(f, "D{}", self.rank),
            Series::G2 => write!(f, "G2"),
            Series::F4 => write!(f, "F4"),
            Series::E6 => write!(f, "E6"),
            Series::E7 => write!(f, "E7"),
            Series::E8 => write!(f, "E8"),
            Series::Torus => write!(f, "T{}", self.rank),
        }
    }
}

/// A compact group given as a product of simple simply connected factors and tori.
/// A quotient annotation (such as the half-spin identification) is carried as metadata.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
    pub quotient: Option<String>,
}

impl GroupSpec {
    pub fn simple(series: Series, rank: usize) -> Result<GroupSpec> {
        Ok(GroupSpec { factors: vec![Factor::new(series, rank)?], quotient: None })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn is_simply_connected_times_torus(&self) -> bool {
        self.quotient.is_none()
    }

    /// Canonical product label, e.g. `D5xT1`.
    pub fn label(&self) -> String {
        self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("x")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        if let Some(qt) = &self.quotient {
            write!(f, "/{qt}")?;
        }
        Ok(())
    }
}

fn parse_factor(token: &str) -> Option<(Factor, Option<String>)> {
    let t: String = token.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect::<String>().to_lowercase();
    let split = t.find(|c: char| c.is_ascii_digit())?;
    let (name, digits) = t.split_at(split);
    let n: usize = digits.parse().ok()?;
    let f = |series, rank| Some((Factor { series, rank }, None));
    match name {
        "a" => f(Series::A, n),
        "b" => f(Series::B, n),
        "c" => f(Series::C, n),
        "d" => f(Series::D, n),
        "t" => f(Series::Torus, n),
        "g" if n == 2 => f(Series::G2, 2),
        "f" if n == 4 => f(Series::F4, 4),
        "e" if (6..=8).contains(&n) => f(
            match n {
                6 => Series::E6,
                7 => Series::E7,
                _ => Series::E8,
            },
            n,
        ),
        "su" if n >= 2 => f(Series::A, n - 1),
        "u" if n == 1 => f(Series::Torus, 1),
        "sp" if n == 1 => f(Series::A, 1),
        "sp" => f(Series::C, n),
        "spin" if n >= 5 && n % 2 == 1 => f(Series::B, (n - 1) / 2),
        "spin" if n >= 4 && n % 2 == 0 => f(Series::D, n / 2),
        "hspin" if n >= 8 && n % 4 == 0 => {
            Some((Factor { series: Series::D, rank: n / 2 }, Some("half-spin".to_string())))
        }
        _ => None,
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses labels such as `E8`, `D6xA1`, `D5xT1`, `Spin10`, `SU2`, `HSpin16`
    /// (case-insensitive, `x` separates factors, `Tn` is a rank-n torus).
    fn from_str(s: &str) -> Result<GroupSpec> {
        let bad = || Error::InvalidGroup(s.to_string());
        let mut factors = Vec::new();
        let mut quotient = None;
        for token in s.split(['x', 'X']) {
            let (f, qt) = parse_factor(token).ok_or_else(bad)?;
            f.validate().map_err(|_| bad())?;
            factors.push(f);
            if qt.is_some() {
                quotient = qt;
            }
        }
        if factors.is_empty() {
            return Err(bad());
        }
        Ok(GroupSpec { factors, quotient })
    }
}

/// Symmetric bilinear form on the simple roots of one simple factor, integer-scaled.
fn simple_form(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n]; n];
    let chain = |s: &mut Vec<Vec<i64>>, a: usize, b: usize, v: i64| {
        s[a][b] = v;
        s[b][a] = v;
    };
    match series {
        Series::A => {
            for i in 0..n {
                s[i][i] = 2;
                if i + 1 < n {
                    chain(&mut s, i, i + 1, -1);
                }
            }
        }
        Series::B => {
            for i in 0..n {
                s[i][i] = 2;
                if i + 1 < n {
                    chain(&mut s, i, i + 1, -1);
                }
            }
            s[n - 1][n - 1] = 1;
        }
        Series::C => {
            for i in 0..n {
                s[i][i] = 2;
                if i + 2 < n {
                    chain(&mut s, i, i + 1, -1);
                }
            }
            s[n - 1][n - 1] = 4;
            chain(&mut s, n - 2, n - 1, -2);
        }
        Series::D => {
            for i in 0..n {
                s[i][i] = 2;
                if i + 2 < n {
                    chain(&mut s, i, i + 1, -1);
                }
            }
            if n >= 3 {
                chain(&mut s, n - 3, n - 1, -1);
            }
        }
        Series::G2 => {
            s = vec![vec![2, -3], vec![-3, 6]];
        }
        Series::F4 => {
            s = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
        }
        Series::E6 | Series::E7 | Series::E8 => {
            for i in 0..n {
                s[i][i] = 2;
            }
            // Bourbaki: 1-3-4-5-6-7-8 chain with 2 attached to 4.
            chain(&mut s, 0, 2, -1);
            chain(&mut s, 1, 3, -1);
            for i in 2..n - 1 {
                chain(&mut s, i, i + 1, -1);
            }
        }
        Series::Torus => {}
    }
    s
}

/// Cartan data, positive roots and the invariant form for one compact group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub spec: GroupSpec,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`; row `i` is `alpha_i` in fundamental coordinates.
    /// Rows and columns of torus coordinates are zero.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetric form on simple roots (integer scale per factor).
    pub simple_form: Vec<Vec<i64>>,
    pub is_torus: Vec<bool>,
    pub factor_ranges: Vec<Range<usize>>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Weight>,
    /// The same roots in simple-root coordinates.
    pub positive_roots_simple: Vec<Vec<i64>>,
    /// Coroots of the positive roots in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    pub weyl_vector: Weight,
    /// `(omega_i, omega_j) = form_num[i][j] / form_den`.
    form_num: Vec<Vec<i64>>,
    form_den: i64,
    semisimple: Vec<usize>,
}

impl RootSystem {
    pub fn build(spec: &GroupSpec) -> Result<RootSystem> {
        for f in &spec.factors {
            f.validate()?;
        }
        let rank = spec.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut sform = vec![vec![0i64; rank]; rank];
        let mut is_torus = vec![false; rank];
        let mut factor_ranges = Vec::new();
        let mut positive_roots_simple = Vec::new();
        let mut fund_form_q: Vec<Vec<Q>> = vec![vec![q(0); rank]; rank];
        let mut off = 0;
        for f in &spec.factors {
            let n = f.rank;
            factor_ranges.push(off..off + n);
            if f.series == Series::Torus {
                for i in 0..n {
                    is_torus[off + i] = true;
                    fund_form_q[off + i][off + i] = q(1);
                }
                off += n;
                continue;
            }
            let s = simple_form(f.series, n);
            let c: Vec<Vec<i64>> =
                (0..n).map(|i| (0..n).map(|j| 2 * s[i][j] / s[j][j]).collect()).collect();
            for i in 0..n {
                for j in 0..n {
                    cartan[off + i][off + j] = c[i][j];
                    sform[off + i][off + j] = s[i][j];
                }
            }
            // (omega_i, omega_j) = (C^{-1})_{ij} (alpha_j, alpha_j) / 2.
            let cinv = QMatrix::from_i64(&c).inverse()?;
            for i in 0..n {
                for j in 0..n {
                    fund_form_q[off + i][off + j] = &cinv[(i, j)] * q(s[j][j]) / q(2);
                }
            }
            for r in factor_positive_roots(&c) {
                let mut full = vec![0i64; rank];
                full[off..off + n].copy_from_slice(&r);
                positive_roots_simple.push(full);
            }
            off += n;
        }
        positive_roots_simple.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let positive_roots: Vec<Weight> = positive_roots_simple
            .iter()
            .map(|r| {
                let mut w = vec![0i64; rank];
                for (j, &c) in r.iter().enumerate() {
                    if c != 0 {
                        for k in 0..rank {
                            w[k] += c * cartan[j][k];
                        }
                    }
                }
                w
            })
            .collect();
        let coroots = positive_roots_simple
            .iter()
            .map(|r| {
                let norm: i64 =
                    (0..rank).flat_map(|i| (0..rank).map(move |j| (i, j))).map(|(i, j)| r[i] * r[j] * sform[i][j]).sum();
                r.iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let num = c * sform[i][i];
                        debug_assert_eq!(num % norm, 0);
                        num / norm
                    })
                    .collect()
            })
            .collect();
        let form_den = fund_form_q.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let form_den_i: i64 = i64::try_from(form_den.clone()).expect("form denominator fits in i64");
        let form_num = fund_form_q
            .iter()
            .map(|row| row.iter().map(|x| i64::try_from((x * Q::from_integer(form_den.clone())).to_integer()).unwrap()).collect())
            .collect();
        let weyl_vector = is_torus.iter().map(|&t| if t { 0 } else { 1 }).collect();
        let semisimple = (0..rank).filter(|&i| !is_torus[i]).collect();
        Ok(RootSystem {
            spec: spec.clone(),
            rank,
            cartan,
            simple_form: sform,
            is_torus,
            factor_ranges,
            positive_roots,
            positive_roots_simple,
            coroots,
            weyl_vector,
            form_num,
            form_den: form_den_i,
            semisimple,
        })
    }

    pub fn parse(label: &str) -> Result<RootSystem> {
        RootSystem::build(&label.parse()?)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the group: rank plus the number of roots.
    pub fn dim_group(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    /// Coordinates that carry a simple root (i.e. not torus coordinates).
    pub fn semisimple_coords(&self) -> &[usize] {
        &self.semisimple
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.cartan[i].clone()
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank];
        w[i] = 1;
        w
    }

    pub fn check_len(&self, w: &[i64]) -> Result<()> {
        if w.len() == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, got: w.len() })
        }
    }

    /// Integer-scaled invariant form: `(a, b) * form_scale()`.
    pub fn inner_scaled(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s: i128 = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.form_num[i];
            let mut t: i128 = 0;
            for (j, &bj) in b.iter().enumerate() {
                t += row[j] as i128 * bj as i128;
            }
            s += ai as i128 * t;
        }
        s
    }

    pub fn form_scale(&self) -> i64 {
        self.form_den
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        Q::new(self.inner_scaled(a, b).into(), self.form_den.into())
    }

    /// Gram matrix of the invariant form on fundamental weights, scaled by `form_scale()`.
    pub fn fundamental_gram_scaled(&self) -> &[Vec<i64>] {
        &self.form_num
    }

    /// `<mu, beta^vee>` for the `k`-th positive root.
    pub fn coroot_pairing(&self, mu: &[i64], k: usize) -> i64 {
        self.coroots[k].iter().zip(mu).map(|(c, m)| c * m).sum()
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        self.semisimple.iter().all(|&i| w[i] >= 0)
    }

    pub fn is_regular_dominant(&self, w: &[i64]) -> bool {
        self.semisimple.iter().all(|&i| w[i] > 0)
    }

    /// Folds `w` into the dominant chamber in place; returns the determinant of the folding word.
    pub fn fold_in_place(&self, w: &mut [i64]) -> i32 {
        let mut sign = 1;
        loop {
            let Some(&i) = self.semisimple.iter().find(|&&i| w[i] < 0) else { return sign };
            let c = w[i];
            for (x, a) in w.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
            sign = -sign;
        }
    }

    /// The dominant Weyl conjugate of `w` and the sign of the folding element.
    pub fn dominant_representative(&self, w: &[i64]) -> (Weight, i32) {
        let mut v = w.to_vec();
        let s = self.fold_in_place(&mut v);
        (v, s)
    }

    /// The dot action fold: returns `(dom(w + rho) - rho, sign)` with sign `0` when `w + rho`
    /// lies on a wall.
    pub fn dominant_rho_shifted(&self, w: &[i64]) -> (Weight, i32) {
        let mut v: Weight = w.iter().zip(&self.weyl_vector).map(|(a, r)| a + r).collect();
        let s = self.fold_in_place(&mut v);
        if !self.is_regular_dominant(&v) {
            return (v.iter().zip(&self.weyl_vector).map(|(a, r)| a - r).collect(), 0);
        }
        (v.iter().zip(&self.weyl_vector).map(|(a, r)| a - r).collect(), s)
    }

    /// The Weyl orbit of a dominant weight, without duplicates.
    pub fn weyl_orbit(&self, dominant: &[i64]) -> Result<Vec<Weight>> {
        self.check_len(dominant)?;
        if !self.is_dominant(dominant) {
            return Err(Error::NotDominant(dominant.to_vec()));
        }
        let mut out = vec![dominant.to_vec()];
        let mut level = vec![dominant.to_vec()];
        while !level.is_empty() {
            let mut seen: HashSet<Weight> = HashSet::new();
            let mut next = Vec::new();
            for mu in &level {
                for &i in &self.semisimple {
                    if mu[i] > 0 {
                        let c = mu[i];
                        let nu: Weight = mu.iter().zip(&self.cartan[i]).map(|(x, a)| x - c * a).collect();
                        if seen.insert(nu.clone()) {
                            next.push(nu);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        Ok(out)
    }

    /// Exponents of the semisimple part, from the partition of positive roots by height.
    pub fn exponents(&self) -> Vec<usize> {
        exponents_from_roots(self.positive_roots_simple.iter(), self.semisimple.len())
    }

    /// Degrees of the basic Weyl-invariant polynomials (exponents plus one).
    pub fn degrees(&self) -> Vec<usize> {
        self.exponents().into_iter().map(|m| m + 1).collect()
    }

    pub fn weyl_group_order(&self) -> BigInt {
        self.degrees().into_iter().fold(BigInt::one(), |acc, d| acc * BigInt::from(d))
    }

    /// Size of the orbit of a dominant weight, `|W| / |W_J|` with `J` the stabiliser coordinates.
    pub fn orbit_size(&self, dominant: &[i64]) -> BigInt {
        let stab: Vec<usize> = self.semisimple.iter().copied().filter(|&i| dominant[i] == 0).collect();
        let sub = self
            .positive_roots_simple
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || stab.contains(&i)));
        let stab_order = exponents_from_roots(sub, stab.len())
            .into_iter()
            .fold(BigInt::one(), |acc, m| acc * BigInt::from(m + 1));
        self.weyl_group_order() / stab_order
    }

    /// Height of a root given in simple-root coordinates.
    pub fn height(root_simple: &[i64]) -> i64 {
        root_simple.iter().sum()
    }
}

fn exponents_from_roots<'a>(roots: impl Iterator<Item = &'a Vec<i64>>, rank: usize) -> Vec<usize> {
    let mut count_by_height: Vec<usize> = vec![0];
    for r in roots {
        let h = r.iter().sum::<i64>() as usize;
        if count_by_height.len() <= h {
            count_by_height.resize(h + 1, 0);
        }
        count_by_height[h] += 1;
    }
    count_by_height.push(0);
    let mut exps = Vec::new();
    for m in 1..count_by_height.len() - 1 {
        let k = count_by_height[m] - count_by_height[m + 1];
        exps.extend(std::iter::repeat(m).take(k));
    }
    debug_assert_eq!(exps.len(), rank);
    exps
}

/// Positive roots of one simple factor in simple-root coordinates, generated height by height
/// with root strings.
fn factor_positive_roots(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &level {
        all.insert(r.clone());
    }
    while !level.is_empty() {
        out.extend(level.iter().cloned());
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * c[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (g, n) in [("E8", 120), ("E7", 63), ("E6", 36), ("F4", 24), ("G2", 6), ("D5", 20), ("B4", 16), ("C3", 9), ("A4", 10)] {
            assert_eq!(rs(g).num_positive_roots(), n, "{g}");
        }
    }

    #[test]
    fn group_dimensions() {
        for (g, d) in [("E8", 248), ("E7", 133), ("E6", 78), ("F4", 52), ("G2", 14), ("D8", 120), ("D6xA1", 69)] {
            assert_eq!(rs(g).dim_group(), d, "{g}");
        }
    }

    #[test]
    fn products_and_tori() {
        let r = rs("A1xT1");
        assert_eq!(r.rank, 2);
        assert_eq!(r.num_positive_roots(), 1);
        assert_eq!(r.weyl_vector, vec![1, 0]);
        assert!("D1".parse::<GroupSpec>().is_err());
        assert!("E9".parse::<GroupSpec>().is_err());
        assert_eq!("spin10".parse::<GroupSpec>().unwrap().label(), "D5");
        assert_eq!("Spin(9)".parse::<GroupSpec>().unwrap().label(), "B4");
        assert_eq!("SU2".parse::<GroupSpec>().unwrap().label(), "A1");
        assert!("HSpin16".parse::<GroupSpec>().unwrap().quotient.is_some());
    }

    #[test]
    fn cartan_conventions() {
        let f4 = rs("F4");
        assert_eq!(f4.cartan[1][2], -2);
        assert_eq!(f4.cartan[2][1], -1);
        let g2 = rs("G2");
        assert_eq!(g2.cartan[0][1], -1);
        assert_eq!(g2.cartan[1][0], -3);
        let e8 = rs("E8");
        assert_eq!(e8.cartan[1][3], -1);
        assert_eq!(e8.cartan[0][2], -1);
        // Highest root of E8 is the eighth fundamental weight.
        assert_eq!(e8.positive_roots.last().unwrap(), &vec![0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn folding() {
        let a1 = rs("A1");
        assert_eq!(a1.dominant_representative(&[-2]), (vec![2], -1));
        assert_eq!(a1.dominant_representative(&[3]), (vec![3], 1));
        let a2 = rs("A2");
        // -rho + (1,-2) + rho lies on a wall.
        assert_eq!(a2.dominant_rho_shifted(&[0, -1]).1, 0);
    }

    #[test]
    fn orbits() {
        assert_eq!(rs("A1").weyl_orbit(&[2]).unwrap().len(), 2);
        assert_eq!(rs("D4").weyl_orbit(&[1, 0, 0, 0]).unwrap().len(), 8);
        let e8 = rs("E8");
        assert_eq!(e8.weyl_orbit(&[0, 0, 0, 0, 0, 0, 0, 1]).unwrap().len(), 240);
        assert_eq!(e8.orbit_size(&[0, 0, 0, 0, 0, 0, 0, 1]), BigInt::from(240));
        assert_eq!(e8.weyl_group_order(), BigInt::from(696729600u64));
        assert!(e8.weyl_orbit(&[0, 0, 0, 0, 0, 0, 0, -1]).is_err());
    }

    #[test]
    fn degrees_of_exceptional_groups() {
        assert_eq!(rs("E8").degrees(), vec![2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(rs("F4").degrees(), vec![2, 6, 8, 12]);
        assert_eq!(rs("D4").degrees(), vec![2, 4, 4, 6]);
    }

    #[test]
    fn invariant_form() {
        let a1 = rs("A1");
        // (omega, omega) = 1/2 for SU(2) with roots of squared length 2.
        assert_eq!(a1.inner(&[1], &[1]), crate::linalg::q_frac(1, 2));
        let e8 = rs("E8");
        let theta = vec![0, 0, 0, 0, 0, 0, 0, 1];
        assert_eq!(e8.inner(&theta, &theta), q(2));
    }
}
