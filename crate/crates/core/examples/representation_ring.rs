//! Tensor products, Adams operations and exterior powers in R(G2).
//! Run: cargo run --example representation_ring

use lie_psi::charlib::{Group, VirtualRep};

fn main() -> lie_psi::Result<()> {
    let g2 = Group::parse("G2")?;
    let v = g2.fundamental(0);
    let a = g2.fundamental(1);
    println!("dim v = {}, dim a = {}", g2.dim(&v), g2.dim(&a));
    println!("v (x) v = {}", g2.tensor(&v, &v)?);
    println!("psi^2 v = {}", g2.adams(2, &v)?);
    println!("psi^3 v = {}", g2.adams(3, &v)?);
    for k in 1..=3 {
        println!("lambda^{k} v = {}", g2.lambda_k(k, &v)?);
    }
    // Virtual representations are allowed: lambda_t(-v) is the inverse series of lambda_t(v).
    let minus_v = VirtualRep::zero().sub(&v);
    println!("lambda^2 (-v) = {}", g2.lambda_k(2, &minus_v)?);
    Ok(())
}
