//! Restriction from a group to an equal-rank subgroup, and the induced maps on `V(-) (x) Q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::lambda_ring::{
    adams_matrix_on_v, cyclic_matrix, lambda_columns, s_reduce, type_from_adams_matrix, v_class, FundPoly, Route,
};
use crate::lambda_ring::generator_dims;
use crate::linalg::{Q, QMatrix};

/// The three embeddings of spin groups in exceptional groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pair {
    Spin10E6,
    Spin12E7,
    Spin16E8,
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pair> {
        match s.to_ascii_lowercase().as_str() {
            "spin10-e6" => Ok(Pair::Spin10E6),
            "spin12-e7" => Ok(Pair::Spin12E7),
            "spin16-e8" => Ok(Pair::Spin16E8),
            _ => Err(Error::Unknown { kind: "pair", name: s.to_string() }),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::Spin10E6 => "spin10-e6",
            Pair::Spin12E7 => "spin12-e7",
            Pair::Spin16E8 => "spin16-e8",
        })
    }
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::Spin10E6, Pair::Spin12E7, Pair::Spin16E8];

    /// E7 and E8 need the large cyclic matrices.
    pub fn is_long(self) -> bool {
        self != Pair::Spin10E6
    }
}

/// How the generators of the source restrict.
#[derive(Clone, Debug)]
pub enum GeneratorImages {
    /// The image of every fundamental generator.
    Explicit(Vec<FundPoly>),
    /// Only the image of one generator `u`; the induced map on `V` is recovered from the
    /// lambda powers of `u`, which span `V(G) (x) Q`.
    LambdaGenerator { generator: usize, image: FundPoly },
}

/// A restriction homomorphism `R(G) -> R(K)`.
#[derive(Debug)]
pub struct RestrictionMap {
    pub source: Group,
    pub target: Group,
    pub images: GeneratorImages,
    /// Display order of the source generators (matrix columns).
    pub column_order: Vec<usize>,
    /// Display order of the target generators (matrix rows).
    pub row_order: Vec<usize>,
    pub column_names: Vec<String>,
    pub row_names: Vec<String>,
}

/// Builds a polynomial from `(coefficient, [(generator, exponent)])` terms.
fn poly(rank: usize, terms: &[(i64, &[(usize, i64)])]) -> FundPoly {
    let mut p = FundPoly::default();
    for (c, mono) in terms {
        let mut e = vec![0; rank];
        for &(i, k) in *mono {
            e[i] += k;
        }
        p.add_term(e, BigInt::from(*c));
    }
    p
}

/// Spin(10) generators in Bourbaki order: `v1, v2, v3`, then `delta-` and `delta+`.
const V1: usize = 0;
const V2: usize = 1;
const V3: usize = 2;
const DM: usize = 3;
const DP: usize = 4;

fn spin_names(n: usize, labels: &[(usize, &str)]) -> Vec<String> {
    (0..n)
        .map(|i| labels.iter().find(|(j, _)| *j == i).map_or(format!("w{}", i + 1), |(_, s)| s.to_string()))
        .collect()
}

fn d5_names() -> Vec<String> {
    spin_names(5, &[(V1, "v1"), (V2, "v2"), (V3, "v3"), (DM, "d-"), (DP, "d+")])
}

fn e6_names() -> Vec<String> {
    ["rho1", "a", "L2rho1", "L3rho1", "L2rho2", "rho2"].iter().map(|s| s.to_string()).collect()
}

/// Display order `a, rho1, rho2, L2 rho1, L2 rho2, L3 rho1` of the E6 generators.
const E6_COLUMNS: [usize; 6] = [1, 0, 5, 2, 4, 3];

/// Images of the six E6 fundamentals in `R(Spin(10))`.
fn e6_explicit_images() -> Vec<FundPoly> {
    let r = 5;
    vec![
        poly(r, &[(1, &[(V1, 1)]), (1, &[(DM, 1)]), (1, &[])]),
        poly(r, &[(1, &[(V2, 1)]), (1, &[(DP, 1)]), (1, &[(DM, 1)]), (1, &[])]),
        poly(r, &[(1, &[(V1, 1)]), (1, &[(V2, 1)]), (1, &[(V3, 1)]), (1, &[(DM, 1)]), (1, &[(V1, 1), (DM, 1)])]),
        poly(
            r,
            &[
                (1, &[(V2, 1)]),
                (2, &[(V3, 1)]),
                (1, &[(V2, 1), (DP, 1)]),
                (1, &[(V2, 1), (DM, 1)]),
                (1, &[(V1, 1), (V3, 1)]),
            ],
        ),
        poly(r, &[(1, &[(V1, 1)]), (1, &[(V2, 1)]), (1, &[(V3, 1)]), (1, &[(DP, 1)]), (1, &[(V1, 1), (DP, 1)])]),
        poly(r, &[(1, &[(V1, 1)]), (1, &[(DP, 1)]), (1, &[])]),
    ]
}

/// Substitutes numbers for some generators and deletes their coordinates. Used to pass from
/// `Spin(n) x Sp(1)` or `Spin(n) x U(1)` to the bare spin factor, where the extra factor's
/// characters are evaluated at their dimension.
pub fn specialize(p: &FundPoly, values: &BTreeMap<usize, i64>) -> Result<FundPoly> {
    let mut out = FundPoly::default();
    for (e, c) in &p.terms {
        let mut coeff = c.clone();
        let mut kept = Vec::with_capacity(e.len() - values.len());
        for (i, &k) in e.iter().enumerate() {
            match values.get(&i) {
                Some(&v) => {
                    if k < 0 && v.abs() != 1 {
                        return Err(Error::NonIntegral(format!("negative power of generator {}", i + 1)));
                    }
                    // For v = 1 or -1, v^k = v^|k|.
                    coeff *= BigInt::from(v).pow(k.unsigned_abs() as u32);
                }
                None => kept.push(k),
            }
        }
        out.add_term(kept, coeff);
    }
    Ok(out)
}

/// Ring substitution `w_i -> images[i]`.
fn substitute(p: &FundPoly, images: &[FundPoly], target_rank: usize) -> Result<FundPoly> {
    let mut out = FundPoly::default();
    for (e, c) in &p.terms {
        let mut acc = FundPoly::constant(target_rank, c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k < 0 {
                return Err(Error::NotSimplyConnected(format!("negative power of generator {}", i + 1)));
            }
            for _ in 0..k {
                acc = acc.mul(&images[i]);
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

impl RestrictionMap {
    /// The embedding of one of the three pairs, with the data available for it: all six
    /// generator images for E6, the image of the minimal representation for E7 and E8.
    pub fn for_pair(pair: Pair) -> Result<RestrictionMap> {
        match pair {
            Pair::Spin10E6 => Ok(RestrictionMap {
                source: Group::parse("E6")?,
                target: Group::parse("D5")?,
                images: GeneratorImages::Explicit(e6_explicit_images()),
                column_order: E6_COLUMNS.to_vec(),
                row_order: (0..5).collect(),
                column_names: e6_names(),
                row_names: d5_names(),
            }),
            Pair::Spin12E7 => {
                // h*(w7) = rho12 (x) zeta + delta+ over Spin(12) x Sp(1); zeta -> 2 on Spin(12).
                let over_product = poly(7, &[(1, &[(0, 1), (6, 1)]), (1, &[(5, 1)])]);
                let image = specialize(&over_product, &BTreeMap::from([(6, 2)]))?;
                Ok(RestrictionMap {
                    source: Group::parse("E7")?,
                    target: Group::parse("D6")?,
                    images: GeneratorImages::LambdaGenerator { generator: 6, image },
                    column_order: (0..7).collect(),
                    row_order: (0..6).collect(),
                    column_names: (1..=7).map(|i| format!("w{i}")).collect(),
                    row_names: spin_names(6, &[(0, "v1"), (1, "v2"), (2, "v3"), (3, "v4"), (4, "d-"), (5, "d+")]),
                })
            }
            Pair::Spin16E8 => {
                // h*(w8) = lambda^2 rho16 + delta+.
                let image = poly(8, &[(1, &[(1, 1)]), (1, &[(7, 1)])]);
                Ok(RestrictionMap {
                    source: Group::parse("E8")?,
                    target: Group::parse("D8")?,
                    images: GeneratorImages::LambdaGenerator { generator: 7, image },
                    column_order: (0..8).collect(),
                    row_order: (0..8).collect(),
                    column_names: (1..=8).map(|i| format!("w{i}")).collect(),
                    row_names: spin_names(
                        8,
                        &[(0, "v1"), (1, "v2"), (2, "v3"), (3, "v4"), (4, "v5"), (5, "v6"), (6, "d-"), (7, "d+")],
                    ),
                })
            }
        }
    }

    /// Spin(10) in E6 described only by the image `v1 + delta- + 1` of `rho1`; an independent
    /// route to the same induced matrix.
    pub fn spin10_e6_from_generator() -> Result<RestrictionMap> {
        let mut m = RestrictionMap::for_pair(Pair::Spin10E6)?;
        m.images = GeneratorImages::LambdaGenerator { generator: 0, image: e6_explicit_images().swap_remove(0) };
        Ok(m)
    }

    /// `Spin(10) x U(1) -> E6`, with `rho1 -> xi^-4 + rho10 xi^2 + delta- xi^-1`.
    pub fn spin10_u1_e6() -> Result<RestrictionMap> {
        let image = poly(6, &[(1, &[(5, -4)]), (1, &[(V1, 1), (5, 2)]), (1, &[(DM, 1), (5, -1)])]);
        let mut rows = d5_names();
        rows.push("xi".into());
        Ok(RestrictionMap {
            source: Group::parse("E6")?,
            target: Group::parse("D5xT1")?,
            images: GeneratorImages::LambdaGenerator { generator: 0, image },
            column_order: E6_COLUMNS.to_vec(),
            row_order: (0..6).collect(),
            column_names: e6_names(),
            row_names: rows,
        })
    }

    /// `Spin(12) x Sp(1) -> E7`, with `w7 -> rho12 (x) zeta + delta+`.
    pub fn spin12_sp1_e7() -> Result<RestrictionMap> {
        let image = poly(7, &[(1, &[(0, 1), (6, 1)]), (1, &[(5, 1)])]);
        Ok(RestrictionMap {
            source: Group::parse("E7")?,
            target: Group::parse("D6xA1")?,
            images: GeneratorImages::LambdaGenerator { generator: 6, image },
            column_order: (0..7).collect(),
            row_order: (0..7).collect(),
            column_names: (1..=7).map(|i| format!("w{i}")).collect(),
            row_names: spin_names(7, &[(0, "v1"), (1, "v2"), (2, "v3"), (3, "v4"), (4, "d-"), (5, "d+"), (6, "zeta")]),
        })
    }

    /// The identity of `G`.
    pub fn identity(label: &str) -> Result<RestrictionMap> {
        let source = Group::parse(label)?;
        let target = Group::parse(label)?;
        let l = source.rank();
        let names: Vec<String> = (1..=l).map(|i| format!("w{i}")).collect();
        Ok(RestrictionMap {
            images: GeneratorImages::Explicit((0..l).map(|i| FundPoly::generator(l, i)).collect()),
            source,
            target,
            column_order: (0..l).collect(),
            row_order: (0..l).collect(),
            column_names: names.clone(),
            row_names: names,
        })
    }

    /// The image of the Lambda generator, or of `w_i` when all images are known.
    pub fn generator_image(&self, i: usize) -> Option<&FundPoly> {
        match &self.images {
            GeneratorImages::Explicit(v) => v.get(i),
            GeneratorImages::LambdaGenerator { generator, image } => (*generator == i).then_some(image),
        }
    }

    /// Checks that each known image has the dimension of the representation it replaces.
    pub fn check_dimensions(&self) -> Result<()> {
        let src = generator_dims(&self.source);
        let dst = generator_dims(&self.target);
        for i in 0..self.source.rank() {
            if let Some(img) = self.generator_image(i) {
                if img.epsilon(&dst) != src[i] {
                    return Err(Error::Inconsistent(format!(
                        "image of w{} has dimension {}, expected {}",
                        i + 1,
                        img.epsilon(&dst),
                        src[i]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Restriction of a polynomial in the source generators. With only a Lambda generator known,
/// polynomials in that generator alone can be restricted.
pub fn restrict(p: &FundPoly, m: &RestrictionMap) -> Result<FundPoly> {
    let l = m.source.rank();
    let k = m.target.rank();
    match &m.images {
        GeneratorImages::Explicit(images) => substitute(p, images, k),
        GeneratorImages::LambdaGenerator { generator, image } => {
            let mut images = Vec::with_capacity(l);
            for i in 0..l {
                if i == *generator {
                    images.push(image.clone());
                } else if p.terms.keys().any(|e| e[i] != 0) {
                    return Err(Error::Inconsistent(format!(
                        "image of w{} is not available; only w{} has a known image",
                        i + 1,
                        generator + 1
                    )));
                } else {
                    images.push(FundPoly::default());
                }
            }
            substitute(p, &images, k)
        }
    }
}

/// Matrix of `V(G) (x) Q -> V(K) (x) Q` in the fundamental bases, rows indexed by the target.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedVMap {
    pub matrix: QMatrix,
    pub row_names: Vec<String>,
    pub column_names: Vec<String>,
}

impl InducedVMap {
    /// The matrix with rows and columns in display order.
    pub fn displayed(&self, row_order: &[usize], column_order: &[usize]) -> InducedVMap {
        let rows = row_order
            .iter()
            .map(|&i| column_order.iter().map(|&j| self.matrix[(i, j)].clone()).collect())
            .collect();
        InducedVMap {
            matrix: QMatrix::from_rows(rows),
            row_names: row_order.iter().map(|&i| self.row_names[i].clone()).collect(),
            column_names: column_order.iter().map(|&j| self.column_names[j].clone()).collect(),
        }
    }
}

/// The induced map with routes chosen per group.
pub fn induced_v_matrix(m: &RestrictionMap) -> Result<InducedVMap> {
    induced_v_matrix_with(m, Route::default_for(&m.source), Route::default_for(&m.target))
}

/// The induced map. Explicit images are reduced directly. Otherwise, for the Lambda generator
/// `u`, `J C = [v(lambda^j h*(u))]` where `C` is the cyclic matrix of `u`, so
/// `J = [v(lambda^j h*(u))] C^-1`.
pub fn induced_v_matrix_with(m: &RestrictionMap, source_route: Route, target_route: Route) -> Result<InducedVMap> {
    m.check_dimensions()?;
    let dims = generator_dims(&m.target);
    let matrix = match &m.images {
        GeneratorImages::Explicit(images) => {
            let cols: Vec<Vec<Q>> = images.iter().map(|p| v_class(&s_reduce(p, &dims))).collect();
            QMatrix::from_columns(&cols)
        }
        GeneratorImages::LambdaGenerator { generator, image } => {
            let l = m.source.rank();
            let u = m.source.fundamental(*generator);
            let c = cyclic_matrix(&m.source, &u, source_route)?;
            let hu: VirtualRep = image.evaluate(&m.target)?;
            let jl = QMatrix::from_columns(&lambda_columns(&m.target, &hu, l, target_route)?);
            let inv = c.to_qmatrix().inverse().map_err(|_| Error::Singular("cyclic matrix".into()))?;
            jl.mul(&inv)
        }
    };
    Ok(InducedVMap { matrix, row_names: m.row_names.clone(), column_names: m.column_names.clone() })
}

/// `(rank, nullity, nullity of the transpose)`.
pub fn rank_nullity(m: &InducedVMap) -> (usize, usize, usize) {
    let r = m.matrix.rank();
    (r, m.matrix.cols - r, m.matrix.rows - r)
}

/// Dimensions attached to one Adams weight `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBlock {
    pub weight: i64,
    /// Multiplicity of `2^r` as an eigenvalue of `psi^2` on `V(G)`.
    pub source_dim: usize,
    /// The same on `V(K)`.
    pub target_dim: usize,
    pub rank: usize,
    /// Kernel of the dual map `V*(K)_r -> V*(G)_r`.
    pub dual_kernel: usize,
    /// Cokernel of the dual map.
    pub dual_cokernel: usize,
}

/// Splits the induced map into `psi^2` eigenspaces, checking that it commutes with `psi^2`.
pub fn weight_kernel_dims(m: &RestrictionMap, j: &InducedVMap) -> Result<Vec<WeightBlock>> {
    let mg = adams_matrix_on_v(&m.source, 2, Route::default_for(&m.source))?;
    let mk = adams_matrix_on_v(&m.target, 2, Route::default_for(&m.target))?;
    weight_blocks(&mg, &mk, &j.matrix, m.source.rs.dim_group().max(m.target.rs.dim_group()))
}

/// Eigenspace bookkeeping for `J : V_G -> V_K` intertwining `mg` and `mk`.
pub fn weight_blocks(mg: &QMatrix, mk: &QMatrix, j: &QMatrix, max_r: usize) -> Result<Vec<WeightBlock>> {
    if mk.mul(j) != j.mul(mg) {
        return Err(Error::Inconsistent("induced map does not commute with psi^2".into()));
    }
    let tg = type_from_adams_matrix(mg, max_r)?;
    let tk = type_from_adams_matrix(mk, max_r)?;
    let mut weights: Vec<i64> = tg.weights().into_iter().chain(tk.weights()).collect();
    weights.sort();
    weights.dedup();
    let mut out = Vec::new();
    for r in weights {
        let eig = Q::from_integer(BigInt::one() << r as usize);
        let eg = mg.sub(&QMatrix::identity(mg.rows).scale(&eig)).nullspace();
        let ek = mk.sub(&QMatrix::identity(mk.rows).scale(&eig)).nullspace();
        let rank = if eg.is_empty() {
            0
        } else {
            let images: Vec<Vec<Q>> = eg.iter().map(|v| j.mul_vec(v)).collect();
            QMatrix::from_columns(&images).rank()
        };
        // Eigenvalues of psi^2 are semisimple, so the eigenspaces exhaust the multiplicities.
        let sd = tg.weights().iter().filter(|&&x| x == r).count();
        let td = tk.weights().iter().filter(|&&x| x == r).count();
        if eg.len() != sd || ek.len() != td {
            return Err(Error::Inconsistent(format!("psi^2 is not diagonalizable at weight {r}")));
        }
        out.push(WeightBlock {
            weight: r,
            source_dim: sd,
            target_dim: td,
            rank,
            dual_kernel: td - rank,
            dual_cokernel: sd - rank,
        });
    }
    Ok(out)
}

/// Total dimension of the kernel of the dual map.
pub fn total_dual_kernel(blocks: &[WeightBlock]) -> usize {
    blocks.iter().map(|b| b.dual_kernel).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn printed_e6() -> QMatrix {
        QMatrix::from_i64(&[
            vec![0, 1, 1, 17, 17, 120],
            vec![1, 0, 0, 1, 1, 33],
            vec![0, 0, 0, 1, 1, 12],
            vec![1, 1, 0, 11, 0, 45],
            vec![1, 0, 1, 0, 11, 45],
        ])
    }

    #[test]
    fn e6_explicit_images_give_printed_matrix() {
        let m = RestrictionMap::for_pair(Pair::Spin10E6).unwrap();
        let j = induced_v_matrix(&m).unwrap();
        let shown = j.displayed(&m.row_order, &m.column_order);
        assert_eq!(shown.matrix, printed_e6());
        assert_eq!(rank_nullity(&shown), (4, 2, 1));
    }

    #[test]
    fn e6_generator_route_agrees_with_explicit_images() {
        let explicit = induced_v_matrix(&RestrictionMap::for_pair(Pair::Spin10E6).unwrap()).unwrap();
        let m = RestrictionMap::spin10_e6_from_generator().unwrap();
        assert_eq!(induced_v_matrix(&m).unwrap().matrix, explicit.matrix);
    }

    #[test]
    fn e6_weight_blocks() {
        let m = RestrictionMap::for_pair(Pair::Spin10E6).unwrap();
        let j = induced_v_matrix(&m).unwrap();
        let blocks = weight_kernel_dims(&m, &j).unwrap();
        assert_eq!(total_dual_kernel(&blocks), 1);
        let at4 = blocks.iter().find(|b| b.weight == 4).unwrap();
        assert_eq!((at4.target_dim, at4.source_dim, at4.dual_kernel), (1, 0, 1));
    }

    #[test]
    fn identity_has_no_kernel() {
        let m = RestrictionMap::identity("G2").unwrap();
        let j = induced_v_matrix(&m).unwrap();
        assert_eq!(j.matrix, QMatrix::identity(2));
        let blocks = weight_kernel_dims(&m, &j).unwrap();
        assert!(blocks.iter().all(|b| b.dual_kernel == 0 && b.dual_cokernel == 0));
    }

    #[test]
    fn restriction_preserves_augmentation() {
        let m = RestrictionMap::for_pair(Pair::Spin10E6).unwrap();
        let sd = generator_dims(&m.source);
        let td = generator_dims(&m.target);
        // rho1^2 * a - 3 L2rho1
        let p = poly(6, &[(1, &[(0, 2), (1, 1)]), (-3, &[(2, 1)])]);
        let r = restrict(&p, &m).unwrap();
        assert_eq!(r.epsilon(&td), p.epsilon(&sd));
        let one = FundPoly::constant(6, BigInt::one());
        assert_eq!(restrict(&one, &m).unwrap(), FundPoly::constant(5, BigInt::one()));
    }

    #[test]
    fn generator_only_restriction_rejects_other_generators() {
        let m = RestrictionMap::spin10_e6_from_generator().unwrap();
        assert!(restrict(&FundPoly::generator(6, 1), &m).is_err());
        let sq = FundPoly::generator(6, 0).mul(&FundPoly::generator(6, 0));
        assert_eq!(restrict(&sq, &m).unwrap().epsilon(&generator_dims(&m.target)), BigInt::from(729));
    }

    #[test]
    fn specialization_evaluates_dropped_factor() {
        let p = poly(3, &[(1, &[(0, 1), (2, 1)]), (5, &[(2, -2)])]);
        let s = specialize(&p, &BTreeMap::from([(2, 1)])).unwrap();
        assert_eq!(s, poly(2, &[(1, &[(0, 1)]), (5, &[])]));
        assert!(specialize(&p, &BTreeMap::from([(2, 2)])).is_err());
    }

    #[test]
    fn rank_of_zero_matrix() {
        let z = InducedVMap { matrix: QMatrix::zeros(2, 3), row_names: vec![], column_names: vec![] };
        assert_eq!(rank_nullity(&z), (0, 3, 2));
        assert_eq!(z.matrix[(0, 0)], q(0));
    }
}
