//! Rational homotopy of homogeneous spaces from the four-term exact sequences.
//! Run: cargo run --release --example homotopy -- R5 N5

use lie_psi::homotopy::{space_homotopy, Space};

fn main() -> lie_psi::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spaces: Vec<Space> = if args.is_empty() {
        vec![Space::N5, Space::R5]
    } else {
        args.iter().map(|s| s.parse()).collect::<lie_psi::Result<_>>()?
    };
    for space in spaces {
        let d = space_homotopy(space)?;
        let degrees: Vec<String> = d.degrees().iter().map(|n| n.to_string()).collect();
        println!("{space} (dimension {}): pi_n (x) Q nonzero for n = {}", space.dimension(), degrees.join(", "));
    }
    Ok(())
}
