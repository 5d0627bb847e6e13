//! The cyclic matrix of a Lambda-ring generator of V(F4), computed by all three routes.
//! Run: cargo run --release --example cyclic_matrix

use lie_psi::charlib::Group;
use lie_psi::lambda_ring::{cyclic_matrix, Route};

fn main() -> lie_psi::Result<()> {
    let f4 = Group::parse("F4")?;
    let u = f4.fundamental(3);
    for route in [Route::Polynomial, Route::Recursive, Route::Index] {
        let c = cyclic_matrix(&f4, &u, route)?;
        println!("{route:?}: det {}", c.det);
        for row in c.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
            println!("  {}", cells.join(" "));
        }
    }
    Ok(())
}
