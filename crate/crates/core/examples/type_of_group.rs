//! Rational type of a compact Lie group from the Adams operation psi^2 on V(G).
//! Run: cargo run --release --example type_of_group -- E6 Spin12

use lie_psi::charlib::Group;
use lie_psi::lambda_ring::{type_of, Route};

fn main() -> lie_psi::Result<()> {
    let labels: Vec<String> = std::env::args().skip(1).collect();
    let labels = if labels.is_empty() { vec!["G2".into(), "F4".into(), "E6".into()] } else { labels };
    for label in labels {
        let g = Group::parse(&label)?;
        let t = type_of(&g, Route::default_for(&g))?;
        println!("{label}: type {t} (sum {}, dim {})", t.total(), g.rs.dim_group());
    }
    Ok(())
}
