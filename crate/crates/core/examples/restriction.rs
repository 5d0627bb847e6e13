//! The map V(E6) -> V(Spin(10)) induced by restriction, its rank and its psi^2 weight blocks.
//! Run: cargo run --release --example restriction

use lie_psi::branching::{induced_v_matrix, rank_nullity, weight_kernel_dims, Pair, RestrictionMap};

fn main() -> lie_psi::Result<()> {
    let m = RestrictionMap::for_pair(Pair::Spin10E6)?;
    let j = induced_v_matrix(&m)?.displayed(&m.row_order, &m.column_order);
    println!("columns: {}", j.column_names.join(" "));
    for (i, name) in j.row_names.iter().enumerate() {
        let row: Vec<String> = (0..j.matrix.cols).map(|c| format!("{:>4}", j.matrix[(i, c)])).collect();
        println!("{name:>8} {}", row.join(" "));
    }
    let (rank, nullity, co) = rank_nullity(&j);
    println!("rank {rank}, nullity {nullity}, transpose nullity {co}");
    for b in weight_kernel_dims(&m, &induced_v_matrix(&m)?)? {
        println!("weight {}: dual kernel {}, dual cokernel {}", b.weight, b.dual_kernel, b.dual_cokernel);
    }
    Ok(())
}
