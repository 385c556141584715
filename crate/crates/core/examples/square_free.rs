//! Integer side of the corona eigenvalues: `Δ² = (m + λ - 1)² + 4m` is never
//! a square for integers `m, λ >= 1`, and its square-free part.
//!
//!     cargo run --example square_free

use coronawalk::numtheory::{
    corona_delta_sq, is_perfect_square, squarefree_split, support_gcd_and_valuation,
};

fn main() -> coronawalk::Result<()> {
    let squares = (1..=500u64)
        .flat_map(|m| (1..=500u64).map(move |l| corona_delta_sq(l, m)))
        .filter(|&n| is_perfect_square(n))
        .count();
    println!("perfect squares among Δ² for 1 <= m, λ <= 500: {squares}");
    for (lambda, m) in [(2, 1), (2, 6), (2, 3), (4, 1), (6, 1)] {
        let n = corona_delta_sq(lambda, m);
        let s = squarefree_split(n)?;
        println!("λ = {lambda}, m = {m}: Δ² = {n} = {}² · {}", s.s, s.c);
    }
    for support in [vec![0, 2, 4, 6], vec![0, 4, 8], vec![0, 1, 3]] {
        let (g, r) = support_gcd_and_valuation(&support)?;
        println!("support {support:?}: gcd {g}, 2-adic valuation {r}");
    }
    Ok(())
}
