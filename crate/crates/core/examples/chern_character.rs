//! Chern characters of spinor and exterior-square bundles in Pontryagin and Euler classes.
//! Run: cargo run --release --example chern_character

use lie_psi::charclass::{ch_lambda2_vector, ch_spinor, to_pe};

fn main() -> lie_psi::Result<()> {
    for (name, s) in [("delta16+", ch_spinor(8, 1, 16)), ("lambda2 rho16", ch_lambda2_vector(8, 16))] {
        let pe = to_pe(&s)?;
        println!("ch({name}):");
        for d in (0..=16).step_by(4) {
            println!("  degree {d:>2}: {}", pe.poly.homogeneous_part(d));
        }
    }
    Ok(())
}
