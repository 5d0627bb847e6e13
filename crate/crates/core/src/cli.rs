//! Command-line front end.
//!
//! Grammar: `lie-psi <command> <args> [--format text|json] [--cache-dir PATH]
//! [--max-degree N] [--allow-long] [--verify]`. Big integers and rationals appear in JSON
//! as decimal strings.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::branching::{induced_v_matrix, rank_nullity, weight_kernel_dims, Pair, RestrictionMap};
use crate::cache::CharCache;
use crate::charclass::{
    lambda2_vector_weights, pe_gens, spinor_weights, sum_weights, to_pe, vector_weights, Aux, SymPoly, WeightList,
};
use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::gpoly::{Generator, Gens, GradedPoly};
use crate::homotopy::{elliptic_profile, space_homotopy, space_homotopy_with, ConnectingMap, Space};
use crate::lambda_ring::{cyclic_matrix, type_of, Route};
use crate::linalg::Q;
use crate::presentation::{
    complete_intersection_profile, discrepancy_report, grassmannian_presentation, hilbert_check, presentation_from_pipeline,
    rosenfeld_input, Presentation, RankMode,
};
use crate::rootdata::{GroupSpec, Series};
use crate::verify::{self, Check, Status, Suite};

#[derive(Parser, Debug)]
#[command(name = "lie-psi", version, about = "Exact lambda-ring, Adams-operation and cohomology computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for persisted character tables (overrides LIE_PSI_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Highest cohomological degree for `chern` and `present`.
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    /// Permit the E7 and E8 computations.
    #[arg(long, global = true)]
    pub allow_long: bool,
    /// Compare with the published tables and exit nonzero on a mismatch.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Type of a group, e.g. `type E8`.
    Type { group: String },
    /// Cyclic matrix of `lambda^j u` in V(G), e.g. `cyclic F4 w4`.
    Cyclic {
        group: String,
        /// `wN` (Bourbaki numbering), `adjoint`, `std` or `minimal`.
        rep: Option<String>,
    },
    /// Induced map on V for spin10-e6, spin12-e7 or spin16-e8.
    Restrict { pair: String },
    /// Rational homotopy of N5, N6, R5, R6 or R7.
    Homotopy {
        space: String,
        /// Connecting map of the sphere bundle over R5/R6: auto, zero or surjective.
        #[arg(long, default_value = "auto")]
        connecting: String,
    },
    /// Poincare polynomial, Euler characteristic and top degree.
    Poincare { space: String },
    /// Chern character in Pontryagin and Euler classes, e.g. `chern delta16+` or `chern lambda2rho16,delta16+`.
    Chern { bundle: String },
    /// Presentation of the rational cohomology of R5, R6, R7 or `gr<k>,<n>`.
    Present { space: String },
    /// Run a suite of comparisons with the published tables.
    Verify { suite: Option<String> },
}

/// Rendered result and whether every requested comparison passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(dir) = &cli.cache_dir {
        CharCache::install(Some(CharCache::new(dir)?));
    }
    match &cli.command {
        Command::Type { group } => cmd_type(cli, group),
        Command::Cyclic { group, rep } => cmd_cyclic(cli, group, rep.as_deref()),
        Command::Restrict { pair } => cmd_restrict(cli, pair.parse()?),
        Command::Homotopy { space, connecting } => cmd_homotopy(cli, space.parse()?, connecting.parse()?),
        Command::Poincare { space } => cmd_poincare(cli, space.parse()?),
        Command::Chern { bundle } => cmd_chern(cli, bundle),
        Command::Present { space } => cmd_present(cli, space),
        Command::Verify { suite } => cmd_verify(cli, suite.as_deref().unwrap_or("all").parse()?),
    }
}

fn is_long_group(label: &str) -> bool {
    matches!(label.to_ascii_uppercase().as_str(), "E7" | "E8")
}

fn gate(cli: &Cli, long: bool, what: &str) -> Result<()> {
    if long && !cli.allow_long {
        return Err(Error::LongGated(what.to_string()));
    }
    if long {
        eprintln!("{what}: long computation started");
    }
    Ok(())
}

fn finish(cli: &Cli, text: String, value: Value, checks: Vec<Check>) -> Outcome {
    let ok = checks.iter().all(|c| c.status != Status::Fail);
    match cli.format {
        Format::Text => {
            let mut t = text;
            for c in &checks {
                let _ = writeln!(t, "{c}");
            }
            Outcome { text: t, ok }
        }
        Format::Json => {
            let mut v = value;
            if cli.verify || !checks.is_empty() {
                v["verify"] = json!(checks
                    .iter()
                    .map(|c| json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}))
                    .collect::<Vec<_>>());
            }
            let text = serde_json::to_string_pretty(&v).unwrap_or_default() + "\n";
            Outcome { text, ok }
        }
    }
}

fn no_published(name: &str) -> Check {
    Check { name: name.to_string(), status: Status::Skip, detail: "no published value".into() }
}

fn cmd_type(cli: &Cli, label: &str) -> Result<Outcome> {
    gate(cli, is_long_group(label), &format!("type {label}"))?;
    let g = Group::parse(label)?;
    let t = type_of(&g, Route::default_for(&g))?;
    let mut checks = Vec::new();
    if cli.verify {
        checks.push(verify::check_type(label, &g, &t).unwrap_or_else(|| no_published(&format!("type {label}"))));
    }
    let text = format!("{t}\n");
    let value = json!({"group": label, "type": t.entries});
    Ok(finish(cli, text, value, checks))
}

/// The representation named by `rep` for a simple group.
pub fn parse_rep(group_label: &str, g: &Group, rep: &str) -> Result<(String, VirtualRep)> {
    let unknown = || Error::Unknown { kind: "representation", name: rep.to_string() };
    let lower = rep.to_ascii_lowercase();
    if let Some(k) = lower.strip_prefix('w') {
        let i: usize = k.parse().map_err(|_| unknown())?;
        if i == 0 || i > g.rank() {
            return Err(unknown());
        }
        return Ok((format!("w{i}"), g.fundamental(i - 1)));
    }
    let spec: GroupSpec = group_label.parse()?;
    if spec.factors.len() != 1 {
        return Err(Error::InvalidGroup(format!("{group_label}: named representations need a simple group")));
    }
    let f = &spec.factors[0];
    let n = f.rank;
    let mut w = vec![0i64; n];
    match (lower.as_str(), f.series) {
        ("std" | "minimal", Series::F4) => w[3] = 1,
        ("std" | "minimal", Series::E7) => w[6] = 1,
        ("std" | "minimal", Series::E8) => w[7] = 1,
        ("std" | "minimal", _) => w[0] = 1,
        ("adjoint", Series::A) if n == 1 => w[0] = 2,
        ("adjoint", Series::A) => {
            w[0] = 1;
            w[n - 1] = 1;
        }
        ("adjoint", Series::B | Series::D) => w[1] = 1,
        ("adjoint", Series::C) => w[0] = 2,
        ("adjoint", Series::G2) => w[1] = 1,
        ("adjoint", Series::F4) => w[0] = 1,
        ("adjoint", Series::E6) => w[1] = 1,
        ("adjoint", Series::E7) => w[0] = 1,
        ("adjoint", Series::E8) => w[7] = 1,
        _ => return Err(unknown()),
    }
    Ok((lower, VirtualRep::irrep(w)))
}

pub fn bigint_rows_json(rows: &[Vec<BigInt>]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// Inverse of [`bigint_rows_json`] and of the matrix fields written by `restrict`.
pub fn rows_from_json(v: &Value) -> Result<Vec<Vec<Q>>> {
    let bad = || Error::Inconsistent("malformed matrix in JSON".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_str().and_then(|s| s.parse::<Q>().ok()).ok_or_else(bad))
                .collect()
        })
        .collect()
}

fn render_rows<T: ToString>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "[ {} ]", line.join(" "));
    }
    out
}

fn cmd_cyclic(cli: &Cli, label: &str, rep: Option<&str>) -> Result<Outcome> {
    gate(cli, is_long_group(label), &format!("cyclic {label}"))?;
    let g = Group::parse(label)?;
    let (rep_name, u) = parse_rep(label, &g, rep.unwrap_or("minimal"))?;
    let c = cyclic_matrix(&g, &u, Route::default_for(&g))?;
    let mut checks = Vec::new();
    if cli.verify {
        let standard = verify::published_cyclic_generator(label).map(|i| g.fundamental(i)) == Some(u.clone());
        match verify::check_cyclic(label, &c) {
            Some(ch) if standard => checks.push(ch),
            _ => checks.push(no_published(&format!("cyclic {label} {rep_name}"))),
        }
    }
    let rows = c.rows();
    let text = format!("{}det = {}\n", render_rows(&rows), c.det);
    let value = json!({"group": label, "generator": rep_name, "rows": bigint_rows_json(&rows), "det": c.det.to_string()});
    Ok(finish(cli, text, value, checks))
}

fn q_rows_json(rows: &[Vec<Q>]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn cmd_restrict(cli: &Cli, pair: Pair) -> Result<Outcome> {
    gate(cli, pair.is_long(), &format!("restrict {pair}"))?;
    let m = RestrictionMap::for_pair(pair)?;
    let j = induced_v_matrix(&m)?;
    let shown = j.displayed(&m.row_order, &m.column_order);
    let (rank, nullity, tnull) = rank_nullity(&shown);
    let blocks = weight_kernel_dims(&m, &j)?;
    let rows = shown.matrix.to_rows();
    let mut text = format!("columns: {}\nrows: {}\n", shown.column_names.join(" "), shown.row_names.join(" "));
    text.push_str(&render_rows(&rows));
    let _ = writeln!(text, "rank {rank}, nullity {nullity}, transpose nullity {tnull}");
    for b in &blocks {
        let _ = writeln!(
            text,
            "weight {}: source {}, target {}, rank {}, kernel of dual {}, cokernel of dual {}",
            b.weight, b.source_dim, b.target_dim, b.rank, b.dual_kernel, b.dual_cokernel
        );
    }
    let mut checks = Vec::new();
    if cli.verify {
        checks.push(verify::check_restriction(pair, &shown));
    }
    let value = json!({
        "pair": pair.to_string(),
        "columns": shown.column_names,
        "rows_names": shown.row_names,
        "matrix": q_rows_json(&rows),
        "rank": rank,
        "nullity": nullity,
        "transpose_nullity": tnull,
        "weights": blocks.iter().map(|b| json!({
            "weight": b.weight, "source_dim": b.source_dim, "target_dim": b.target_dim,
            "rank": b.rank, "dual_kernel": b.dual_kernel, "dual_cokernel": b.dual_cokernel,
        })).collect::<Vec<_>>(),
    });
    Ok(finish(cli, text, value, checks))
}

fn cmd_homotopy(cli: &Cli, space: Space, connecting: ConnectingMap) -> Result<Outcome> {
    gate(cli, space.is_long(), &format!("homotopy {space}"))?;
    let d = space_homotopy_with(space, connecting)?;
    let mut checks = Vec::new();
    if cli.verify {
        checks.push(verify::check_homotopy(space, &d));
    }
    let degrees: Vec<Value> =
        d.dims.iter().map(|(deg, k)| json!({"degree": deg, "rank": k})).collect();
    Ok(finish(cli, format!("{d}\n"), json!({"space": space.to_string(), "homotopy": degrees}), checks))
}

fn cmd_poincare(cli: &Cli, space: Space) -> Result<Outcome> {
    gate(cli, space.is_long(), &format!("poincare {space}"))?;
    let p = elliptic_profile(&space_homotopy(space)?)?;
    let coeffs: Vec<String> = p.poincare.iter().map(|c| c.to_string()).collect();
    let text = format!(
        "P = {}\ncoefficients: {}\nchi = {}\ntop degree = {}\n",
        p.formula(),
        coeffs.join(" "),
        p.euler,
        p.top_degree()
    );
    let mut checks = Vec::new();
    if cli.verify {
        checks.push(verify::check_profile(space, &p).unwrap_or_else(|| no_published(&format!("poincare {space}"))));
    }
    let value = json!({
        "space": space.to_string(), "formula": p.formula(), "coefficients": coeffs,
        "euler": p.euler.to_string(), "top_degree": p.top_degree(),
    });
    Ok(finish(cli, text, value, checks))
}

/// Parses a bundle description into `(rank n, extra factor, weights)`.
pub fn parse_bundle(spec: &str) -> Result<(usize, Aux, WeightList)> {
    if let Ok(space) = spec.parse::<Space>() {
        let input = rosenfeld_input(space)?;
        return Ok((input.n, input.aux, input.weights));
    }
    let unknown = || Error::Unknown { kind: "bundle", name: spec.to_string() };
    let mut n = None;
    let mut parts = Vec::new();
    for term in spec.split(',').map(str::trim) {
        let t = term.to_ascii_lowercase();
        let (m, w) = if let Some(d) = t.strip_prefix("lambda2rho") {
            let m = d.parse::<usize>().map_err(|_| unknown())? / 2;
            (m, lambda2_vector_weights(m))
        } else if let Some(d) = t.strip_prefix("rho") {
            let m = d.parse::<usize>().map_err(|_| unknown())? / 2;
            (m, vector_weights(m))
        } else if let Some(d) = t.strip_prefix("delta") {
            let (digits, sign) = match d.chars().last() {
                Some('+') => (&d[..d.len() - 1], 1),
                Some('-') => (&d[..d.len() - 1], -1),
                _ => return Err(unknown()),
            };
            let m = digits.parse::<usize>().map_err(|_| unknown())? / 2;
            (m, spinor_weights(m, sign))
        } else {
            return Err(unknown());
        };
        if m < 2 || n.is_some_and(|k| k != m) {
            return Err(unknown());
        }
        n = Some(m);
        parts.push(w);
    }
    Ok((n.ok_or_else(unknown)?, Aux::None, sum_weights(&parts)))
}

fn poly_json(p: &GradedPoly) -> Value {
    json!({
        "generators": p.gens.iter().map(|g| json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
        "text": p.to_string(),
        "terms": p.terms.iter().rev().map(|(e, c)| json!({"coefficient": c.to_string(), "exponents": e})).collect::<Vec<_>>(),
    })
}

/// Inverse of the polynomial encoding used in JSON output.
pub fn poly_from_json(v: &Value) -> Result<GradedPoly> {
    let bad = || Error::Inconsistent("malformed polynomial in JSON".into());
    let gens: Gens = std::sync::Arc::new(
        v["generators"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|g| {
                Ok(Generator {
                    name: g["name"].as_str().ok_or_else(bad)?.to_string(),
                    degree: g["degree"].as_u64().ok_or_else(bad)? as u32,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    );
    let mut p = GradedPoly::zero(&gens);
    for t in v["terms"].as_array().ok_or_else(bad)? {
        let c: Q = t["coefficient"].as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let e: Vec<u32> = t["exponents"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().map(|k| k as u32).ok_or_else(bad))
            .collect::<Result<_>>()?;
        if e.len() != gens.len() {
            return Err(bad());
        }
        p.add_term(e, c);
    }
    Ok(p)
}

fn cmd_chern(cli: &Cli, bundle: &str) -> Result<Outcome> {
    let max = cli.max_degree.unwrap_or(16);
    let (n, aux, weights) = parse_bundle(bundle)?;
    let s = SymPoly::from_weights(n, aux, &weights, max);
    let pe = to_pe(&s)?;
    let mut text = String::new();
    let mut parts = Vec::new();
    for d in (0..=max).step_by(2) {
        let part = pe.poly.homogeneous_part(d);
        if part.is_zero() {
            continue;
        }
        let _ = writeln!(text, "ch_{} = {part}", d / 2);
        parts.push(json!({"degree": d, "poly": poly_json(&part)}));
    }
    let mut checks = Vec::new();
    if cli.verify {
        checks.push(verify::check_chern(bundle, &pe.poly).unwrap_or_else(|| no_published(&format!("chern {bundle}"))));
    }
    let gens = pe_gens(n, aux);
    let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    let value = json!({"bundle": bundle, "generators": names, "max_degree": max, "components": parts});
    Ok(finish(cli, text, value, checks))
}

fn parse_grassmannian(s: &str) -> Option<(usize, usize)> {
    let t = s.to_ascii_lowercase().replace(['(', ')', ' '], "");
    let (k, n) = t.strip_prefix("gr")?.split_once(',')?;
    Some((k.parse().ok()?, n.parse().ok()?))
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.gens.iter().map(|g| json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|r| json!({
            "label": format!("r{}", r.homogeneous_degree().unwrap_or(0)),
            "poly": poly_json(r),
        })).collect::<Vec<_>>(),
        "images": p.images.iter().map(|(n, i)| json!({"class": n, "poly": poly_json(i)})).collect::<Vec<_>>(),
    })
}

fn cmd_present(cli: &Cli, space: &str) -> Result<Outcome> {
    let (p, rosenfeld) = if let Some((k, n)) = parse_grassmannian(space) {
        (grassmannian_presentation(k, n)?, None)
    } else {
        let s: Space = space.parse()?;
        if matches!(s, Space::N5 | Space::N6) {
            return Err(Error::Inconsistent(format!(
                "{s} has rank smaller than its ambient group, so its cohomology is not a quotient of H*(BK); \
                 use `homotopy {s}`"
            )));
        }
        let mut input = rosenfeld_input(s)?;
        if let Some(d) = cli.max_degree {
            input.max_degree = d;
        }
        (presentation_from_pipeline(&input)?, Some(s))
    };
    let mut text = p.to_string();
    for (name, img) in &p.images {
        let _ = writeln!(text, "{name} -> {img}");
    }
    let mut checks = Vec::new();
    if cli.verify {
        let gd: Vec<u32> = p.gens.iter().map(|g| g.degree).collect();
        let mut profile = complete_intersection_profile(&gd, &p.relation_degrees())?;
        if let Some(s) = rosenfeld {
            let report = discrepancy_report(s, &p)?;
            text.push_str(&report.to_string());
            checks.push(verify::check_presentation(s, &p));
            if let Some(pp) = verify::published_profile(s) {
                profile.poincare = verify::published_poincare(pp)?;
            }
        }
        let h = hilbert_check(&p, &profile, RankMode::Modular)?;
        checks.push(Check {
            name: format!("hilbert {space}"),
            status: if h.certified { Status::Pass } else { Status::Fail },
            detail: format!("quotient dimension {} through degree {}", h.total_dim(), h.checked_through),
        });
    }
    Ok(finish(cli, text, presentation_json(&p), checks))
}

fn cmd_verify(cli: &Cli, suite: Suite) -> Result<Outcome> {
    let checks = verify::run_suite(suite, cli.allow_long);
    let value = json!({"suite": format!("{suite:?}").to_lowercase()});
    Ok(finish(cli, String::new(), value, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let mut v = vec!["lie-psi"];
        v.extend_from_slice(args);
        run(&Cli::try_parse_from(v).unwrap())
    }

    #[test]
    fn type_su2() {
        assert_eq!(run_args(&["type", "SU2"]).unwrap().text, "3\n");
    }

    #[test]
    fn long_groups_are_gated() {
        assert!(matches!(run_args(&["cyclic", "E8", "adjoint"]), Err(Error::LongGated(_))));
    }

    #[test]
    fn bundle_grammar() {
        let (n, _, w) = parse_bundle("lambda2rho16,delta16+").unwrap();
        assert_eq!((n, w.iter().map(|x| x.mult).sum::<i64>()), (8, 248));
        assert!(parse_bundle("rho10,delta12+").is_err());
        assert!(parse_bundle("delta16").is_err());
    }

    #[test]
    fn grassmannian_names() {
        assert_eq!(parse_grassmannian("Gr(2,5)"), Some((2, 5)));
        assert_eq!(parse_grassmannian("gr1,3"), Some((1, 3)));
    }

    #[test]
    fn present_json_round_trips() {
        let out = run_args(&["present", "R5", "--format", "json"]).unwrap();
        let v: Value = serde_json::from_str(&out.text).unwrap();
        let p = crate::presentation::rosenfeld_presentation(Space::R5).unwrap();
        for (r, j) in p.relations.iter().zip(v["relations"].as_array().unwrap()) {
            assert_eq!(&poly_from_json(&j["poly"]).unwrap(), r);
        }
    }
}
