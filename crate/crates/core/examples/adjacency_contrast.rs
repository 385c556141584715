//! `K2 ∘ O6`: the Laplacian walk gets arbitrarily close to transfer between
//! the centres, the adjacency walk (where `1 + 4m = 25` is a square) stays well
//! below on a long time grid.
//!
//!     cargo run --release --example adjacency_contrast

use coronawalk::experiments::fig3_with;

fn main() -> coronawalk::Result<()> {
    let (s, _) = fig3_with(6, 0.999)?;
    println!(
        "Laplacian best fidelity {:.9} at t = {}π",
        s.laplacian_best_fidelity, s.laplacian.best.t_over_pi
    );
    println!(
        "adjacency max fidelity  {:.9} at t = {} over {} points on [0, {}]",
        s.adjacency_max_fidelity, s.adjacency_argmax_t, s.adjacency_grid_points, s.adjacency_t_max
    );
    println!("adjacency eigenvalues {:?}", s.adjacency_eigenvalues);
    Ok(())
}
