//! Complex Grassmannians as a check of the presentation machinery: k generators, k relations,
//! total dimension binomial(n, k).
//! Run: cargo run --release --example grassmannian -- 2 5

use lie_psi::presentation::{complete_intersection_profile, grassmannian_presentation, hilbert_check, RankMode};

fn main() -> lie_psi::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, n) = match args[..] {
        [k, n] => (k, n),
        _ => (2, 5),
    };
    let p = grassmannian_presentation(k, n)?;
    println!("{p}");
    let gd: Vec<u32> = p.gens.iter().map(|g| g.degree).collect();
    let profile = complete_intersection_profile(&gd, &p.relation_degrees())?;
    let h = hilbert_check(&p, &profile, RankMode::Exact)?;
    println!("Gr({k},{n}): certified {}, dimensions {:?}", h.certified, h.computed);
    Ok(())
}
