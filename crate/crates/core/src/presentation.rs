//! Presentations of `H^*(G/K; Q)` as a polynomial ring modulo the images of `ch_q(h^* w)`,
//! their comparison with published relations, and Hilbert-series certification.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::charclass::{
    aux_standard, charge_power, lambda2_vector_weights, pe_gens, spinor_weights, sum_weights, tensor_weights, to_pe,
    vector_weights, Aux, SymPoly, WeightList,
};
use crate::error::{Error, Result};
use crate::golden::{self, PublishedRelation};
use crate::gpoly::{index_of, monomials_of_degree, Generator, Gens, GradedPoly};
use crate::homotopy::{elliptic_profile, EllipticProfile, GradedDims, Space};
use crate::linalg::{q, rank_mod_p, QMatrix, Q, Z};

/// The prime used for modular ranks.
pub const MODULUS: u64 = (1 << 61) - 1;

/// `Q[gens] / (relations)` together with the images of the classes of `BK`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub gens: Gens,
    pub relations: Vec<GradedPoly>,
    /// Image of every generator of `H^*(BK; Q)` in `Q[gens]`.
    pub images: Vec<(String, GradedPoly)>,
}

impl Presentation {
    pub fn image(&self, name: &str) -> Option<&GradedPoly> {
        self.images.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations.iter().map(|r| r.homogeneous_degree().unwrap_or(0)).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
        let labels: Vec<String> = self.relation_degrees().iter().map(|d| format!("r{d}")).collect();
        writeln!(f, "Q[{}] / ({})", names.join(", "), labels.join(", "))?;
        for (l, r) in labels.iter().zip(&self.relations) {
            writeln!(f, "{l} = {r}")?;
        }
        Ok(())
    }
}

/// Input for the substitution pipeline.
pub struct PipelineInput {
    pub n: usize,
    pub aux: Aux,
    pub weights: WeightList,
    /// `(class of BK, name of the generator it becomes)`.
    pub pinned: Vec<(&'static str, String)>,
    /// Highest cohomological degree examined.
    pub max_degree: u32,
}

/// Data for the three Rosenfeld planes.
pub fn rosenfeld_input(space: Space) -> Result<PipelineInput> {
    let pin = |v: &[(&'static str, &str)]| v.iter().map(|(a, b)| (*a, b.to_string())).collect();
    Ok(match space {
        Space::R5 => {
            let n = 5;
            // c1 of the restricted bundle must vanish: charges -4, 2, -1.
            let weights = sum_weights(&[
                charge_power(n, -4),
                tensor_weights(&vector_weights(n), &charge_power(n, 2)),
                tensor_weights(&spinor_weights(n, -1), &charge_power(n, -1)),
            ]);
            PipelineInput { n, aux: Aux::U1, weights, pinned: pin(&[("c1", "a2"), ("p2", "a8")]), max_degree: 32 }
        }
        Space::R6 => {
            let n = 6;
            let weights =
                sum_weights(&[tensor_weights(&vector_weights(n), &aux_standard(n, Aux::Sp1)), spinor_weights(n, 1)]);
            PipelineInput {
                n,
                aux: Aux::Sp1,
                weights,
                pinned: pin(&[("p1", "a4"), ("p2", "a8"), ("p3", "a12")]),
                max_degree: 64,
            }
        }
        Space::R7 => {
            let n = 8;
            let weights = sum_weights(&[lambda2_vector_weights(n), spinor_weights(n, 1)]);
            PipelineInput {
                n,
                aux: Aux::None,
                weights,
                pinned: pin(&[("p2", "a8"), ("p3", "a12"), ("p4", "a16"), ("p5", "a20")]),
                max_degree: 64,
            }
        }
        other => {
            return Err(Error::Unknown { kind: "Rosenfeld plane", name: other.to_string() });
        }
    })
}

/// Runs the pipeline: substitutes the current images into each `ch_q`, solves for a
/// class that appears linearly in its own degree, and otherwise keeps the result as a
/// relation when it is not already in the ideal.
pub fn presentation_from_pipeline(input: &PipelineInput) -> Result<Presentation> {
    let pe = pe_gens(input.n, input.aux);
    let a_gens: Gens = Arc::new(
        input
            .pinned
            .iter()
            .map(|(cls, name)| Ok(Generator { name: name.clone(), degree: pe[index_of(&pe, cls)?].degree }))
            .collect::<Result<Vec<_>>>()?,
    );
    let dependent: Vec<usize> =
        (0..pe.len()).filter(|&i| !input.pinned.iter().any(|(c, _)| pe[i].name == *c)).collect();
    let mut mixed_list: Vec<Generator> = a_gens.to_vec();
    mixed_list.extend(dependent.iter().map(|&i| pe[i].clone()));
    let mixed: Gens = Arc::new(mixed_list);
    let mixed_index = |i: usize| a_gens.len() + dependent.iter().position(|&d| d == i).unwrap_or(0);

    let mut theta: Vec<GradedPoly> = (0..pe.len())
        .map(|i| match input.pinned.iter().position(|(c, _)| pe[i].name == *c) {
            Some(k) => GradedPoly::var(&mixed, k),
            None => GradedPoly::var(&mixed, mixed_index(i)),
        })
        .collect();
    let mut unresolved: Vec<usize> = dependent.clone();

    let ch = to_pe(&SymPoly::from_weights(input.n, input.aux, &input.weights, input.max_degree))?;
    let mut relations: Vec<GradedPoly> = Vec::new();
    for degree in (2..=input.max_degree).step_by(2) {
        let x = ch.poly.homogeneous_part(degree).substitute(&theta);
        if x.is_zero() {
            continue;
        }
        let solvable = unresolved.iter().position(|&i| pe[i].degree == degree && x.involves(mixed_index(i)));
        if let Some(pos) = solvable {
            let i = unresolved[pos];
            let (c, rest) = x.split_linear(mixed_index(i)).ok_or_else(|| {
                Error::Inconsistent(format!("{} does not occur linearly in degree {degree}", pe[i].name))
            })?;
            unresolved.remove(pos);
            if unresolved.iter().any(|&j| rest.involves(mixed_index(j))) {
                return Err(Error::Inconsistent(format!("solving for {} needs unresolved classes", pe[i].name)));
            }
            let value = rest.scale(&(-Q::one() / c));
            let value_mixed = value.clone();
            theta = theta
                .iter()
                .map(|t| {
                    let mut images: Vec<GradedPoly> = (0..mixed.len()).map(|k| GradedPoly::var(&mixed, k)).collect();
                    images[mixed_index(i)] = value_mixed.clone();
                    t.substitute(&images)
                })
                .collect();
            continue;
        }
        if let Some(&j) = unresolved.iter().find(|&&j| x.involves(mixed_index(j))) {
            return Err(Error::Inconsistent(format!(
                "degree {degree} involves {} before it is determined",
                pe[j].name
            )));
        }
        let x = x.embed_subset(&a_gens)?;
        if !in_ideal(&x, &relations)? {
            relations.push(normalize(&x));
        }
    }
    if let Some(&j) = unresolved.first() {
        return Err(Error::Inconsistent(format!("{} is never determined", pe[j].name)));
    }
    let images = (0..pe.len())
        .map(|i| Ok((pe[i].name.clone(), theta[i].embed_subset(&a_gens)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Presentation { gens: a_gens, relations, images })
}

/// Presentation of `H^*(R; Q)` for one of the Rosenfeld planes.
pub fn rosenfeld_presentation(space: Space) -> Result<Presentation> {
    presentation_from_pipeline(&rosenfeld_input(space)?)
}

/// Primitive integer multiple whose first term in display order is positive.
pub fn normalize(p: &GradedPoly) -> GradedPoly {
    let (prim, _) = p.primitive();
    match prim.leading_coefficient() {
        Some(c) if c.is_negative() => prim.scale(&q(-1)),
        _ => prim,
    }
}

/// Coefficient vectors of `m * r` for every relation `r` and monomial `m` completing degree `d`.
fn multiples_in_degree(relations: &[GradedPoly], gens: &Gens, d: u32) -> (Vec<Vec<u32>>, Vec<Vec<Q>>) {
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree).collect();
    let basis = monomials_of_degree(&degrees, d);
    let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for r in relations {
        let Some(rd) = r.homogeneous_degree() else { continue };
        if rd > d {
            continue;
        }
        for m in monomials_of_degree(&degrees, d - rd) {
            let mut row = vec![Q::zero(); basis.len()];
            for (e, c) in &r.terms {
                let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[&prod]] += c;
            }
            rows.push(row);
        }
    }
    (basis, rows)
}

/// Whether a homogeneous polynomial lies in the ideal generated by homogeneous relations.
pub fn in_ideal(x: &GradedPoly, relations: &[GradedPoly]) -> Result<bool> {
    let Some(d) = x.homogeneous_degree() else {
        return Err(Error::Inconsistent("ideal membership needs a homogeneous polynomial".into()));
    };
    if x.is_zero() {
        return Ok(true);
    }
    let (basis, rows) = multiples_in_degree(relations, &x.gens, d);
    if rows.is_empty() {
        return Ok(false);
    }
    let target: Vec<Q> = basis.iter().map(|m| x.coefficient(m)).collect();
    Ok(QMatrix::from_columns(&rows).solve(&target).is_some())
}

/// How the dimension of each graded piece of the quotient is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Ranks over `F_p` for the prime [`MODULUS`]; the quotient over `Q` is at most as large.
    Modular,
    /// Exact rational ranks.
    Exact,
}

/// Outcome of comparing a quotient ring with an elliptic Poincare polynomial.
#[derive(Clone, Debug)]
pub struct HilbertReport {
    pub expected: Vec<BigInt>,
    /// Dimension of the quotient in each degree `0..=checked_through`.
    pub computed: Vec<usize>,
    pub checked_through: u32,
    pub mode: RankMode,
    pub certified: bool,
    pub first_mismatch: Option<u32>,
}

impl HilbertReport {
    pub fn total_dim(&self) -> usize {
        self.computed.iter().sum()
    }
}

/// Dimension of the quotient in degree `d`.
fn quotient_dim(relations: &[GradedPoly], gens: &Gens, d: u32, mode: RankMode) -> Result<usize> {
    let (basis, rows) = multiples_in_degree(relations, gens, d);
    if rows.is_empty() {
        return Ok(basis.len());
    }
    let rank = match mode {
        RankMode::Exact => QMatrix::from_rows(rows).rank(),
        RankMode::Modular => {
            let ints: Vec<Vec<Z>> = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|c| {
                            if c.is_integer() {
                                Ok(c.to_integer())
                            } else {
                                Err(Error::NonIntegral(format!("relation coefficient {c}")))
                            }
                        })
                        .collect::<Result<Vec<Z>>>()
                })
                .collect::<Result<_>>()?;
            rank_mod_p(&ints, MODULUS)
        }
    };
    Ok(basis.len() - rank)
}

/// Compares `Q[gens]/(relations)` with the Poincare polynomial of `profile` in every degree
/// up to the top degree plus the largest generator degree.
///
/// A modular rank is at most the rational rank, so modular dimensions bound the rational
/// ones from above. Vanishing in the window above the top degree forces vanishing in every
/// higher degree, since each higher monomial is divisible by one in the window. A quotient of
/// `Q[x_1..x_k]` by `k` homogeneous relations that is finite-dimensional is a complete
/// intersection, so its series is the complete-intersection series of the relation degrees.
/// Certification asks that series to equal `profile` and every computed dimension to match.
pub fn hilbert_check(p: &Presentation, profile: &EllipticProfile, mode: RankMode) -> Result<HilbertReport> {
    let relations: Vec<GradedPoly> = p.relations.iter().map(normalize).collect();
    let gen_degrees: Vec<u32> = p.gens.iter().map(|g| g.degree).collect();
    let rel_degrees = p.relation_degrees();
    let series_agrees = complete_intersection_profile(&gen_degrees, &rel_degrees)
        .map(|ci| ci.poincare == profile.poincare)
        .unwrap_or(false);
    let top = profile.top_degree() as u32;
    let through = top + gen_degrees.iter().copied().max().unwrap_or(0);
    let mut computed = Vec::new();
    let mut first_mismatch = None;
    for d in 0..=through {
        let dim = quotient_dim(&relations, &p.gens, d, mode)?;
        let want = profile.poincare.get(d as usize).cloned().unwrap_or_else(BigInt::zero);
        if BigInt::from(dim) != want && first_mismatch.is_none() {
            first_mismatch = Some(d);
        }
        computed.push(dim);
    }
    Ok(HilbertReport {
        expected: profile.poincare.clone(),
        computed,
        checked_through: through,
        mode,
        certified: series_agrees && first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Elliptic profile of a complete intersection with the given generator and relation degrees.
pub fn complete_intersection_profile(gen_degrees: &[u32], rel_degrees: &[u32]) -> Result<EllipticProfile> {
    let mut dims = GradedDims::default();
    for &d in gen_degrees {
        dims.add(d, 1);
    }
    for &d in rel_degrees {
        dims.add(d - 1, 1);
    }
    elliptic_profile(&dims)
}

/// `H^*(Gr_k(C^n); Q)` with generators `a_{2i} = ch_i` of the tautological bundle.
pub fn grassmannian_presentation(k: usize, n: usize) -> Result<Presentation> {
    if k == 0 || k > n {
        return Err(Error::Inconsistent(format!("no Grassmannian of {k}-planes in C^{n}")));
    }
    let gens: Gens = Arc::new((1..=k).map(|i| Generator { name: format!("a{}", 2 * i), degree: 2 * i as u32 }).collect());
    let mut fact = Q::one();
    let mut pa = Vec::new();
    for i in 1..=k {
        fact *= q(i as i64);
        pa.push(GradedPoly::var(&gens, i - 1).scale(&fact));
    }
    let pa = extend_power_sums(&pa, k, n, &gens);
    let pb_low: Vec<GradedPoly> = pa.iter().take(n - k).map(|p| p.scale(&q(-1))).collect();
    let pb = extend_power_sums(&pb_low, n - k, n, &gens);
    let mut relations = Vec::new();
    for i in n - k + 1..=n {
        relations.push(normalize(&pa[i - 1].add(&pb[i - 1])));
    }
    let images = (1..=k).map(|i| (format!("ch{i}"), GradedPoly::var(&gens, i - 1))).collect();
    Ok(Presentation { gens, relations, images })
}

/// Power sums `P_1..P_n` of `rank` variables from `P_1..P_m`, using Newton's identities to
/// pass through the elementary symmetric functions, which vanish above `rank`.
fn extend_power_sums(known: &[GradedPoly], rank: usize, n: usize, gens: &Gens) -> Vec<GradedPoly> {
    let mut p: Vec<GradedPoly> = known.to_vec();
    let mut e = vec![GradedPoly::constant(gens, Q::one())];
    for j in 1..=n {
        if j > p.len() {
            // P_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i P_{j-i} + (-1)^{j-1} j e_j
            let mut acc = GradedPoly::zero(gens);
            for i in 1..j {
                let t = e[i].mul(&p[j - i - 1]);
                acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
            }
            if j <= rank {
                let t = e[j].scale(&q(j as i64));
                acc = if j % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
            }
            p.push(acc);
        }
        if e.len() <= j {
            // j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} P_i
            let ej = if j > rank {
                GradedPoly::zero(gens)
            } else {
                let mut acc = GradedPoly::zero(gens);
                for i in 1..=j {
                    let t = e[j - i].mul(&p[i - 1]);
                    acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
                }
                acc.scale(&(Q::one() / q(j as i64)))
            };
            e.push(ej);
        }
    }
    p
}

/// Comparison of one computed relation with its published form.
#[derive(Clone, Debug)]
pub struct RelationComparison {
    pub label: String,
    pub computed: GradedPoly,
    pub status: RelationStatus,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    /// Equal to the printed relation up to a nonzero scalar.
    Exact { factor: Q },
    /// Equal up to a scalar once the listed misprints are corrected.
    AfterCorrection { factor: Q },
    /// Equal up to a scalar modulo the earlier relations.
    ModuloEarlier { factor: Q },
    Mismatch,
}

impl RelationStatus {
    pub fn is_match(&self) -> bool {
        !matches!(self, RelationStatus::Mismatch)
    }
}

/// Comparison of a presentation with the published one.
#[derive(Clone, Debug)]
pub struct DiscrepancyReport {
    pub space: Space,
    pub relations: Vec<RelationComparison>,
    pub images: Vec<(String, bool)>,
}

impl DiscrepancyReport {
    pub fn all_match(&self) -> bool {
        self.relations.iter().all(|r| r.status.is_match()) && self.images.iter().all(|(_, ok)| *ok)
    }

    /// Whether every relation matches exactly, with no misprint correction.
    pub fn all_exact(&self) -> bool {
        self.relations.iter().all(|r| matches!(r.status, RelationStatus::Exact { .. }))
    }
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relations {
            let status = match &r.status {
                RelationStatus::Exact { factor } => format!("matches printed (factor {factor})"),
                RelationStatus::AfterCorrection { factor } => format!("matches after correction (factor {factor})"),
                RelationStatus::ModuloEarlier { factor } => format!("matches modulo earlier relations (factor {factor})"),
                RelationStatus::Mismatch => "DOES NOT MATCH".to_string(),
            };
            writeln!(f, "{} ({}): {status}", r.label, self.space)?;
            for n in &r.notes {
                writeln!(f, "  note: {n}")?;
            }
            if !matches!(r.status, RelationStatus::Exact { .. }) {
                writeln!(f, "  computed: {}", r.computed)?;
            }
        }
        for (name, ok) in &self.images {
            writeln!(f, "image of {name}: {}", if *ok { "matches printed" } else { "DOES NOT MATCH" })?;
        }
        Ok(())
    }
}

/// Splits printed text into signed terms.
fn printed_terms(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for tok in text.replace('-', " - ").replace('+', " + ").split_whitespace() {
        if (tok == "+" || tok == "-") && !cur.trim().is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        cur.push_str(tok);
        cur.push(' ');
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

/// Scalar `c` with `computed == c * printed`, if one exists.
fn proportional(computed: &GradedPoly, printed: &GradedPoly) -> Option<Q> {
    let (e, c) = printed.terms.iter().next()?;
    let factor = computed.coefficient(e) / c;
    (!factor.is_zero() && computed.sub(&printed.scale(&factor)).is_zero()).then_some(factor)
}

fn compare_relation(computed: &GradedPoly, earlier: &[GradedPoly], published: &PublishedRelation) -> Result<RelationComparison> {
    let gens = &computed.gens;
    let mut notes = Vec::new();
    for term in printed_terms(published.printed) {
        match GradedPoly::parse(gens, &term) {
            Err(_) => notes.push(format!("printed term `{term}` uses a symbol that is not a generator")),
            Ok(t) if t.homogeneous_degree() != Some(published.degree) => notes.push(format!(
                "printed term `{term}` has degree {}, not {}",
                t.homogeneous_degree().unwrap_or(0),
                published.degree
            )),
            Ok(_) => {}
        }
    }
    let mut corrected = published.printed.to_string();
    for (from, to) in published.corrections {
        corrected = corrected.replace(from, to);
        notes.push(format!("read `{from}` as `{to}`"));
    }
    let status = match GradedPoly::parse(gens, published.printed).ok().and_then(|p| proportional(computed, &p)) {
        Some(factor) => RelationStatus::Exact { factor },
        None => {
            let fixed = GradedPoly::parse(gens, &corrected)?;
            match proportional(computed, &fixed) {
                Some(factor) if !published.corrections.is_empty() => RelationStatus::AfterCorrection { factor },
                _ => {
                    let (e, c) = fixed.terms.iter().next().ok_or_else(|| Error::Inconsistent("empty relation".into()))?;
                    let factor = computed.coefficient(e) / c;
                    let diff = computed.sub(&fixed.scale(&factor));
                    if !factor.is_zero() && in_ideal(&diff, earlier)? {
                        RelationStatus::ModuloEarlier { factor }
                    } else {
                        for (e, c) in &computed.terms {
                            let want = fixed.coefficient(e) * &factor;
                            if *c != want {
                                let mono = GradedPoly { gens: gens.clone(), terms: [(e.clone(), Q::one())].into() };
                                notes.push(format!("coefficient of {mono}: computed {c}, printed (scaled) {want}"));
                            }
                        }
                        RelationStatus::Mismatch
                    }
                }
            }
        }
    };
    Ok(RelationComparison { label: published.label.to_string(), computed: computed.clone(), status, notes })
}

/// Published relations and image formulas for a Rosenfeld plane.
pub fn published_relations(space: Space) -> &'static [PublishedRelation] {
    match space {
        Space::R5 => golden::R5_RELATIONS,
        Space::R6 => golden::R6_RELATIONS,
        Space::R7 => golden::R7_RELATIONS,
        _ => &[],
    }
}

fn published_images(space: Space) -> Vec<(&'static str, &'static str)> {
    match space {
        Space::R6 => vec![("c2", "1/2 a4")],
        Space::R7 => vec![("e", golden::PHI_E_R7), ("p6", golden::PHI_P6_R7), ("p7", golden::PHI_P7_R7)],
        _ => vec![],
    }
}

/// Compares a computed presentation with the published relations and image formulas.
pub fn discrepancy_report(space: Space, p: &Presentation) -> Result<DiscrepancyReport> {
    let published = published_relations(space);
    if published.len() != p.relations.len() {
        return Err(Error::Inconsistent(format!(
            "{} relations computed, {} published",
            p.relations.len(),
            published.len()
        )));
    }
    let mut relations = Vec::new();
    for (i, (r, pubr)) in p.relations.iter().zip(published).enumerate() {
        relations.push(compare_relation(r, &p.relations[..i], pubr)?);
    }
    let mut images = Vec::new();
    for (name, text) in published_images(space) {
        let want = GradedPoly::parse(&p.gens, text)?;
        images.push((format!("{name}"), p.image(name) == Some(&want)));
    }
    Ok(DiscrepancyReport { space, relations, images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gpoly::gens;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn projective_line_and_plane() {
        let p = grassmannian_presentation(1, 3).unwrap();
        assert_eq!(p.relation_degrees(), vec![6]);
        let profile = complete_intersection_profile(&[2], &[6]).unwrap();
        let rep = hilbert_check(&p, &profile, RankMode::Exact).unwrap();
        assert!(rep.certified);
        assert_eq!(rep.total_dim(), 3);
    }

    #[test]
    fn grassmannian_dimensions_small() {
        for n in 2..=5 {
            for k in 1..=n / 2 {
                let p = grassmannian_presentation(k, n).unwrap();
                let gd: Vec<u32> = p.gens.iter().map(|g| g.degree).collect();
                let profile = complete_intersection_profile(&gd, &p.relation_degrees()).unwrap();
                let rep = hilbert_check(&p, &profile, RankMode::Exact).unwrap();
                assert!(rep.certified, "Gr({k},{n})");
                assert_eq!(rep.total_dim(), binomial(n, k));
            }
        }
    }

    #[test]
    fn dropping_a_relation_is_not_certified() {
        let g = gens(&[("x", 2)]);
        let p = Presentation { gens: g.clone(), relations: vec![], images: vec![] };
        let profile = complete_intersection_profile(&[2], &[6]).unwrap();
        assert!(!hilbert_check(&p, &profile, RankMode::Modular).unwrap().certified);
    }

    #[test]
    fn ideal_membership() {
        let g = gens(&[("x", 2), ("y", 4)]);
        let r = GradedPoly::parse(&g, "x^2 - y").unwrap();
        assert!(in_ideal(&GradedPoly::parse(&g, "x^4 - x^2 y").unwrap(), std::slice::from_ref(&r)).unwrap());
        assert!(!in_ideal(&GradedPoly::parse(&g, "x^4").unwrap(), &[r]).unwrap());
    }

    #[test]
    fn printed_term_splitting() {
        assert_eq!(printed_terms("-3 a^2 + b - 1/2 c"), vec!["- 3 a^2", "+ b", "- 1/2 c"]);
    }
}
