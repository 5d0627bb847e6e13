//! Cohomology ring of a Rosenfeld plane from Chern character relations, certified against its
//! elliptic Poincare polynomial and compared with the printed relations.
//! Run: cargo run --release --example presentation -- R6

use lie_psi::homotopy::{elliptic_profile, space_homotopy, Space};
use lie_psi::presentation::{discrepancy_report, hilbert_check, rosenfeld_presentation, RankMode};

fn main() -> lie_psi::Result<()> {
    let space: Space = std::env::args().nth(1).unwrap_or_else(|| "R5".into()).parse()?;
    let p = rosenfeld_presentation(space)?;
    println!("{p}");
    let profile = elliptic_profile(&space_homotopy(space)?)?;
    let h = hilbert_check(&p, &profile, RankMode::Modular)?;
    println!("certified: {} (total dimension {} through degree {})", h.certified, h.total_dim(), h.checked_through);
    print!("{}", discrepancy_report(space, &p)?);
    Ok(())
}
