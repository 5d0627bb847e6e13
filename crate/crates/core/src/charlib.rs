//! Characters of irreducible representations and arithmetic on virtual representations.
//!
//! Dominant characters come from Freudenthal's recursion. Products use the Brauer–Klimyk
//! rule: only one factor is expanded into its full weight system, and every shifted weight is
//! folded back into the dominant chamber under the dot action.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;
use rayon::prelude::*;

use crate::cache::{CacheEntry, CharCache};
use crate::error::{Error, Result};
use crate::rootdata::{GroupSpec, RootSystem, Weight};

/// Multiplicities of the dominant weights of one irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    pub highest: Weight,
    /// Dominant weights in non-decreasing depth below the highest weight.
    pub weights: Vec<(Weight, BigInt)>,
}

/// A virtual character: weights with arbitrary-precision multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Weight, BigInt>,
}

impl WeightMultiset {
    pub fn add_weight(&mut self, w: Weight, m: &BigInt) {
        add_term(&mut self.entries, w, m);
    }

    /// Total signed multiplicity, i.e. the virtual dimension.
    pub fn dim(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// Every weight scaled by `k`: the character of the `k`-th Adams operation.
    pub fn scaled(&self, k: i64) -> WeightMultiset {
        let mut out = WeightMultiset::default();
        for (w, m) in &self.entries {
            out.add_weight(w.iter().map(|x| x * k).collect(), m);
        }
        out
    }

    /// Pointwise product of characters (convolution of weights).
    pub fn product(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::default();
        for (a, m) in &self.entries {
            for (b, n) in &other.entries {
                out.add_weight(a.iter().zip(b).map(|(x, y)| x + y).collect(), &(m * n));
            }
        }
        out
    }
}

fn add_term(map: &mut BTreeMap<Weight, BigInt>, w: Weight, m: &BigInt) {
    if m.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(m.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += m;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A virtual representation: dominant highest weights with integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct VirtualRep {
    pub terms: BTreeMap<Weight, BigInt>,
}

impl VirtualRep {
    pub fn zero() -> VirtualRep {
        VirtualRep::default()
    }

    pub fn irrep(highest: Weight) -> VirtualRep {
        let mut v = VirtualRep::default();
        v.terms.insert(highest, BigInt::one());
        v
    }

    pub fn trivial(rank: usize, n: i64) -> VirtualRep {
        let mut v = VirtualRep::default();
        add_term(&mut v.terms, vec![0; rank], &BigInt::from(n));
        v
    }

    pub fn add_irrep(&mut self, w: Weight, m: &BigInt) {
        add_term(&mut self.terms, w, m);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VirtualRep) -> VirtualRep {
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_irrep(w.clone(), m);
        }
        out
    }

    pub fn sub(&self, other: &VirtualRep) -> VirtualRep {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> VirtualRep {
        let mut out = VirtualRep::default();
        for (w, m) in &self.terms {
            out.add_irrep(w.clone(), &(m * c));
        }
        out
    }

    /// Multiplicity of the trivial representation.
    pub fn trivial_part(&self, rank: usize) -> BigInt {
        self.terms.get(&vec![0; rank]).cloned().unwrap_or_default()
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, m) in self.terms.iter().rev() {
            let coords = w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let sign = match (first, m.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let abs = m.abs();
            if abs.is_one() {
                write!(f, "{sign}V({coords})")?;
            } else {
                write!(f, "{sign}{abs} V({coords})")?;
            }
            first = false;
        }
        Ok(())
    }
}

type FullChar = Arc<Vec<(Weight, BigInt)>>;

/// A compact group together with memoised character data.
pub struct Group {
    pub rs: RootSystem,
    label: String,
    dominant: RwLock<HashMap<Weight, Arc<DominantCharacter>>>,
    full: RwLock<HashMap<Weight, FullChar>>,
    adams_memo: RwLock<HashMap<(i64, Weight), Arc<VirtualRep>>>,
    cache: Option<CharCache>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("label", &self.label).finish()
    }
}

impl Group {
    pub fn new(spec: &GroupSpec) -> Result<Group> {
        let rs = RootSystem::build(spec)?;
        Ok(Group {
            label: spec.label(),
            rs,
            dominant: RwLock::new(HashMap::new()),
            full: RwLock::new(HashMap::new()),
            adams_memo: RwLock::new(HashMap::new()),
            cache: CharCache::process_default(),
        })
    }

    pub fn parse(label: &str) -> Result<Group> {
        Group::new(&label.parse()?)
    }

    pub fn with_cache(mut self, cache: Option<CharCache>) -> Group {
        self.cache = cache;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn fundamental(&self, i: usize) -> VirtualRep {
        VirtualRep::irrep(self.rs.fundamental_weight(i))
    }

    pub fn one(&self) -> VirtualRep {
        VirtualRep::trivial(self.rank(), 1)
    }

    fn check_dominant(&self, w: &[i64]) -> Result<()> {
        self.rs.check_len(w)?;
        if !self.rs.is_dominant(w) {
            return Err(Error::NotDominant(w.to_vec()));
        }
        Ok(())
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<BigInt> {
        self.check_dominant(lambda)?;
        Ok(self.weyl_dim_unchecked(lambda))
    }

    pub(crate) fn weyl_dim_unchecked(&self, lambda: &[i64]) -> BigInt {
        let rho = &self.rs.weyl_vector;
        let shifted: Weight = lambda.iter().zip(rho).map(|(a, b)| a + b).collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 0..self.rs.num_positive_roots() {
            num *= self.rs.coroot_pairing(&shifted, k);
            den *= self.rs.coroot_pairing(rho, k);
        }
        num / den
    }

    /// Virtual dimension of a virtual representation.
    pub fn dim(&self, x: &VirtualRep) -> BigInt {
        x.terms.iter().map(|(w, m)| m * self.weyl_dim_unchecked(w)).sum()
    }

    /// Dominant weights of `V_lambda` with their multiplicities.
    pub fn dominant_character(&self, lambda: &[i64]) -> Result<Arc<DominantCharacter>> {
        self.check_dominant(lambda)?;
        if let Some(c) = self.dominant.read().get(lambda) {
            return Ok(c.clone());
        }
        let ch = match self.cache.as_ref().map(|c| c.load(&self.label, lambda)).transpose()?.flatten() {
            Some(entry) => DominantCharacter { highest: lambda.to_vec(), weights: entry.payload },
            None => {
                let ch = self.freudenthal(lambda);
                if let Some(cache) = &self.cache {
                    cache.store(&CacheEntry {
                        group: self.label.clone(),
                        highest: lambda.to_vec(),
                        payload: ch.weights.clone(),
                    })?;
                }
                ch
            }
        };
        let ch = Arc::new(ch);
        self.dominant.write().entry(lambda.to_vec()).or_insert_with(|| ch.clone());
        Ok(ch)
    }

    fn freudenthal(&self, lambda: &[i64]) -> DominantCharacter {
        let rs = &self.rs;
        let heights: Vec<i64> = rs.positive_roots_simple.iter().map(|r| RootSystem::height(r)).collect();
        let mut depth: HashMap<Weight, i64> = HashMap::new();
        depth.insert(lambda.to_vec(), 0);
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            let d = depth[&mu];
            for (alpha, h) in rs.positive_roots.iter().zip(&heights) {
                let nu: Weight = mu.iter().zip(alpha).map(|(a, b)| a - b).collect();
                if rs.is_dominant(&nu) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), d + h);
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(i64, Weight)> = depth.iter().map(|(w, d)| (*d, w.clone())).collect();
        order.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

        let rho = &rs.weyl_vector;
        let shift = |w: &[i64]| -> Weight { w.iter().zip(rho).map(|(a, b)| a + b).collect() };
        let lr = shift(lambda);
        let top = rs.inner_scaled(&lr, &lr);
        let mut mult: HashMap<Weight, BigInt> = HashMap::new();
        mult.insert(lambda.to_vec(), BigInt::one());
        let mut out = vec![(lambda.to_vec(), BigInt::one())];
        for (_, mu) in order.iter().skip(1) {
            let mut num: BigInt = BigInt::zero();
            for alpha in &rs.positive_roots {
                let mut w: Weight = mu.clone();
                loop {
                    for (x, a) in w.iter_mut().zip(alpha) {
                        *x += a;
                    }
                    let (d, _) = rs.dominant_representative(&w);
                    let Some(m) = mult.get(&d) else { break };
                    num += m * BigInt::from(rs.inner_scaled(&w, alpha));
                }
            }
            let mr = shift(mu);
            let den = BigInt::from(top - rs.inner_scaled(&mr, &mr));
            let (m, r) = (num * BigInt::from(2)).div_rem(&den);
            debug_assert!(r.is_zero(), "Freudenthal recursion produced a fraction");
            mult.insert(mu.clone(), m.clone());
            out.push((mu.clone(), m));
        }
        DominantCharacter { highest: lambda.to_vec(), weights: out }
    }

    /// All weights of `V_lambda` (orbit-expanded) with multiplicities.
    pub fn full_character(&self, lambda: &[i64]) -> Result<FullChar> {
        if let Some(c) = self.full.read().get(lambda) {
            return Ok(c.clone());
        }
        let dom = self.dominant_character(lambda)?;
        let parts: Vec<Vec<(Weight, BigInt)>> = dom
            .weights
            .par_iter()
            .map(|(w, m)| self.rs.weyl_orbit(w).unwrap().into_iter().map(|v| (v, m.clone())).collect())
            .collect();
        let all: FullChar = Arc::new(parts.into_iter().flatten().collect());
        self.full.write().entry(lambda.to_vec()).or_insert_with(|| all.clone());
        Ok(all)
    }

    /// Character of a virtual representation.
    pub fn character(&self, x: &VirtualRep) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::default();
        for (lambda, c) in &x.terms {
            for (w, m) in self.full_character(lambda)?.iter() {
                out.add_weight(w.clone(), &(m * c));
            }
        }
        Ok(out)
    }

    fn check_invariant(&self, chi: &WeightMultiset) -> Result<()> {
        for (w, m) in &chi.entries {
            self.rs.check_len(w)?;
            for &i in self.rs.semisimple_coords() {
                if w[i] == 0 {
                    continue;
                }
                let r: Weight = w.iter().zip(&self.rs.cartan[i]).map(|(x, a)| x - w[i] * a).collect();
                if chi.entries.get(&r) != Some(m) {
                    return Err(Error::NotWeylInvariant(w.clone()));
                }
            }
        }
        Ok(())
    }

    fn height2(&self, w: &[i64]) -> i64 {
        (0..self.rs.num_positive_roots()).map(|k| self.rs.coroot_pairing(w, k)).sum()
    }

    /// Decomposition into irreducibles by iterated subtraction of maximal dominant weights.
    pub fn decompose(&self, chi: &WeightMultiset) -> Result<VirtualRep> {
        self.check_invariant(chi)?;
        let mut rest: BTreeMap<Weight, BigInt> =
            chi.entries.iter().filter(|(w, _)| self.rs.is_dominant(w)).map(|(w, m)| (w.clone(), m.clone())).collect();
        let mut out = VirtualRep::default();
        while !rest.is_empty() {
            let top = rest.keys().max_by_key(|w| (self.height2(w), (*w).clone())).unwrap().clone();
            let c = rest[&top].clone();
            out.add_irrep(top.clone(), &c);
            for (w, m) in &self.dominant_character(&top)?.weights {
                add_term(&mut rest, w.clone(), &(-(m * &c)));
            }
        }
        Ok(out)
    }

    /// Decomposition by the Weyl reflection formula: each weight contributes
    /// `sign * V_{dom(w + rho) - rho}`. Used as an independent check of `decompose`.
    pub fn decompose_by_reflection(&self, chi: &WeightMultiset) -> Result<VirtualRep> {
        let mut out = VirtualRep::default();
        for (w, m) in &chi.entries {
            self.rs.check_len(w)?;
            let (d, s) = self.rs.dominant_rho_shifted(w);
            if s != 0 {
                out.add_irrep(d, &(m * s));
            }
        }
        Ok(out)
    }

    /// `chi * y` for a character `chi` given by its weights (Brauer–Klimyk).
    pub fn mul_character(&self, chi: &[(Weight, BigInt)], y: &VirtualRep) -> VirtualRep {
        let parts: Vec<BTreeMap<Weight, BigInt>> = y
            .terms
            .par_iter()
            .map(|(mu, c)| {
                let mut acc = BTreeMap::new();
                let mut w = vec![0i64; mu.len()];
                for (nu, m) in chi {
                    for (i, x) in w.iter_mut().enumerate() {
                        *x = nu[i] + mu[i];
                    }
                    let (d, s) = self.rs.dominant_rho_shifted(&w);
                    if s != 0 {
                        add_term(&mut acc, d, &(m * c * s));
                    }
                }
                acc
            })
            .collect();
        let mut out = VirtualRep::default();
        for p in parts {
            for (w, m) in p {
                out.add_irrep(w, &m);
            }
        }
        out
    }

    pub fn tensor(&self, a: &VirtualRep, b: &VirtualRep) -> Result<VirtualRep> {
        for w in a.terms.keys().chain(b.terms.keys()) {
            self.check_dominant(w)?;
        }
        let size = |x: &VirtualRep| -> BigInt { x.terms.iter().map(|(w, m)| m.abs() * self.weyl_dim_unchecked(w)).sum() };
        let (small, big) = if size(a) <= size(b) { (a, b) } else { (b, a) };
        let chi: Vec<(Weight, BigInt)> = self.character(small)?.entries.into_iter().collect();
        Ok(self.mul_character(&chi, big))
    }

    /// `psi^k` of an irreducible, memoised.
    fn adams_irrep(&self, k: i64, lambda: &[i64]) -> Result<Arc<VirtualRep>> {
        let key = (k, lambda.to_vec());
        if let Some(v) = self.adams_memo.read().get(&key) {
            return Ok(v.clone());
        }
        let mut out = VirtualRep::default();
        for (w, m) in self.full_character(lambda)?.iter() {
            let scaled: Weight = w.iter().map(|x| x * k).collect();
            let (d, s) = self.rs.dominant_rho_shifted(&scaled);
            if s != 0 {
                out.add_irrep(d, &(m * s));
            }
        }
        let out = Arc::new(out);
        self.adams_memo.write().insert(key, out.clone());
        Ok(out)
    }

    /// Adams operation `psi^k`.
    pub fn adams(&self, k: i64, x: &VirtualRep) -> Result<VirtualRep> {
        if k < 1 {
            return Err(Error::BadOperationIndex(k));
        }
        if k == 1 {
            return Ok(x.clone());
        }
        let mut out = VirtualRep::default();
        for (lambda, c) in &x.terms {
            self.check_dominant(lambda)?;
            for (w, m) in &self.adams_irrep(k, lambda)?.terms {
                out.add_irrep(w.clone(), &(m * c));
            }
        }
        Ok(out)
    }

    /// `[lambda^0 x, ..., lambda^k x]` by Newton's identity
    /// `j lambda^j = sum_{i=1}^{j} (-1)^{i-1} psi^i(x) lambda^{j-i}(x)`.
    pub fn lambda_newton(&self, k: usize, x: &VirtualRep) -> Result<Vec<VirtualRep>> {
        let chi = self.character(x)?;
        let mut out = vec![self.one()];
        for j in 1..=k {
            let mut acc = VirtualRep::default();
            for i in 1..=j {
                let scaled: Vec<(Weight, BigInt)> = chi.scaled(i as i64).entries.into_iter().collect();
                let term = self.mul_character(&scaled, &out[j - i]);
                let sign = if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
                acc = acc.add(&term.scale(&sign));
            }
            let jj = BigInt::from(j);
            let mut q = VirtualRep::default();
            for (w, m) in acc.terms {
                let (d, r) = m.div_rem(&jj);
                if !r.is_zero() {
                    return Err(Error::NonIntegral(format!("lambda^{j} multiplicity {m}/{j}")));
                }
                q.add_irrep(w, &d);
            }
            out.push(q);
        }
        Ok(out)
    }

    fn series_mul(&self, a: &[VirtualRep], b: &[VirtualRep], k: usize) -> Result<Vec<VirtualRep>> {
        let mut out = vec![VirtualRep::default(); k + 1];
        for i in 0..=k {
            for j in 0..=k - i {
                if a[i].is_zero() || b[j].is_zero() {
                    continue;
                }
                let p = self.tensor(&a[i], &b[j])?;
                out[i + j] = out[i + j].add(&p);
            }
        }
        Ok(out)
    }

    fn series_inverse(&self, a: &[VirtualRep], k: usize) -> Result<Vec<VirtualRep>> {
        // a[0] is the trivial representation, so the inverse has integer coefficients.
        let mut inv = vec![self.one()];
        for n in 1..=k {
            let mut acc = VirtualRep::default();
            for i in 1..=n {
                if !a[i].is_zero() {
                    acc = acc.add(&self.tensor(&a[i], &inv[n - i])?);
                }
            }
            inv.push(acc.scale(&BigInt::from(-1)));
        }
        Ok(inv)
    }

    /// `[lambda^0 x, ..., lambda^k x]`. Sums are split into irreducible pieces and recombined
    /// with `lambda_t(x + y) = lambda_t(x) lambda_t(y)`; each piece uses Newton's identity.
    pub fn lambda_series(&self, k: usize, x: &VirtualRep) -> Result<Vec<VirtualRep>> {
        if x.terms.len() <= 1 && x.terms.values().all(|c| c.is_one()) {
            return self.lambda_newton(k, x);
        }
        let mut total: Vec<VirtualRep> = std::iter::once(self.one()).chain((0..k).map(|_| VirtualRep::default())).collect();
        for (lambda, c) in &x.terms {
            let piece = self.lambda_newton(k, &VirtualRep::irrep(lambda.clone()))?;
            let factor = if c.is_negative() { self.series_inverse(&piece, k)? } else { piece };
            let n: u64 = c.abs().try_into().map_err(|_| Error::Inconsistent("multiplicity too large".into()))?;
            for _ in 0..n {
                total = self.series_mul(&total, &factor, k)?;
            }
        }
        Ok(total)
    }

    /// Exterior power `lambda^k x`.
    pub fn lambda_k(&self, k: i64, x: &VirtualRep) -> Result<VirtualRep> {
        if k < 1 {
            return Err(Error::BadOperationIndex(k));
        }
        Ok(self.lambda_series(k as usize, x)?.pop().unwrap())
    }
}

/// Weights of `lambda^k` of a representation computed directly from its weight list by
/// elementary symmetric functions. Exponential in `k`; intended as a test oracle.
pub fn exterior_power_weights(chi: &WeightMultiset, k: usize) -> WeightMultiset {
    let mut flat: Vec<Weight> = Vec::new();
    for (w, m) in &chi.entries {
        let n: usize = m.try_into().expect("actual representation expected");
        flat.extend(std::iter::repeat(w.clone()).take(n));
    }
    let rank = flat.first().map_or(0, |w| w.len());
    // e_j as weight multisets, built one weight at a time.
    let mut e: Vec<BTreeMap<Weight, BigInt>> = vec![BTreeMap::new(); k + 1];
    e[0].insert(vec![0; rank], BigInt::one());
    for w in &flat {
        for j in (1..=k).rev() {
            let prev: Vec<(Weight, BigInt)> = e[j - 1].iter().map(|(a, m)| (a.clone(), m.clone())).collect();
            for (a, m) in prev {
                add_term(&mut e[j], a.iter().zip(w).map(|(x, y)| x + y).collect(), &m);
            }
        }
    }
    WeightMultiset { entries: e.swap_remove(k) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Group {
        Group::parse(s).unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn f4_fundamental_dimensions() {
        let f4 = g("F4");
        let dims: Vec<BigInt> = (0..4).map(|i| f4.weyl_dim(&f4.rs.fundamental_weight(i)).unwrap()).collect();
        assert_eq!(dims, vec![b(52), b(1274), b(273), b(26)]);
        assert_eq!(f4.weyl_dim(&[0, 0, 0, 0]).unwrap(), b(1));
        assert!(f4.weyl_dim(&[0, -1, 0, 0]).is_err());
    }

    #[test]
    fn e8_adjoint_dimension() {
        let e8 = g("E8");
        assert_eq!(e8.weyl_dim(&[0, 0, 0, 0, 0, 0, 0, 1]).unwrap(), b(248));
        assert_eq!(e8.weyl_dim(&[1, 0, 0, 0, 0, 0, 0, 0]).unwrap(), b(3875));
    }

    #[test]
    fn small_dominant_characters() {
        let a1 = g("A1");
        assert_eq!(a1.dominant_character(&[2]).unwrap().weights, vec![(vec![2], b(1)), (vec![0], b(1))]);
        let g2 = g("G2");
        assert_eq!(g2.dominant_character(&[1, 0]).unwrap().weights, vec![(vec![1, 0], b(1)), (vec![0, 0], b(1))]);
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = g("A1");
        let two = VirtualRep::irrep(vec![1]);
        let p = a1.tensor(&two, &two).unwrap();
        let mut expect = VirtualRep::irrep(vec![2]);
        expect.add_irrep(vec![0], &b(1));
        assert_eq!(p, expect);
        let chi = a1.character(&two).unwrap().product(&a1.character(&two).unwrap());
        assert_eq!(a1.decompose(&chi).unwrap(), expect);
        assert_eq!(a1.decompose_by_reflection(&chi).unwrap(), expect);
    }

    #[test]
    fn adams_on_su2() {
        let a1 = g("A1");
        let psi2 = a1.adams(2, &VirtualRep::irrep(vec![1])).unwrap();
        let mut expect = VirtualRep::irrep(vec![2]);
        expect.add_irrep(vec![0], &b(-1));
        assert_eq!(psi2, expect);
        assert!(a1.adams(0, &psi2).is_err());
    }

    #[test]
    fn g2_lambda_two() {
        let g2 = g("G2");
        let v = VirtualRep::irrep(vec![1, 0]);
        let l2 = g2.lambda_k(2, &v).unwrap();
        let mut expect = VirtualRep::irrep(vec![1, 0]);
        expect.add_irrep(vec![0, 1], &b(1));
        assert_eq!(l2, expect);
    }

    #[test]
    fn non_invariant_rejected() {
        let a1 = g("A1");
        let mut chi = WeightMultiset::default();
        chi.add_weight(vec![1], &b(1));
        assert!(matches!(a1.decompose(&chi), Err(Error::NotWeylInvariant(_))));
    }

    #[test]
    fn trivial_exterior_powers() {
        let a2 = g("A2");
        let five = VirtualRep::trivial(2, 5);
        assert_eq!(a2.lambda_k(2, &five).unwrap(), VirtualRep::trivial(2, 10));
        assert_eq!(a2.lambda_k(5, &five).unwrap(), VirtualRep::trivial(2, 1));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CharCache::new(dir.path()).unwrap();
        let first = g("F4").with_cache(Some(cache.clone()));
        let a = first.dominant_character(&[1, 0, 0, 0]).unwrap();
        let second = g("F4").with_cache(Some(cache));
        let b2 = second.dominant_character(&[1, 0, 0, 0]).unwrap();
        assert_eq!(a, b2);
    }
}
