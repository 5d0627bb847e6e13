//! Poincare polynomial and Euler characteristic of an elliptic space with positive Euler
//! characteristic, read off its rational homotopy.
//! Run: cargo run --release --example poincare

use num_traits::Zero;

use lie_psi::homotopy::{elliptic_profile, space_homotopy, Space};

fn main() -> lie_psi::Result<()> {
    let p = elliptic_profile(&space_homotopy(Space::R5)?)?;
    println!("P(t) = {}", p.formula());
    println!("chi = {}, top degree {}", p.euler, p.top_degree());
    let coeffs: Vec<String> = p.poincare.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| format!("{c} t^{d}")).collect();
    println!("{}", coeffs.join(" + "));
    Ok(())
}
