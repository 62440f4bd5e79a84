//! Rational nullspaces with a prime-field rank cross-check.
//!
//! cargo run --example exact_linear_algebra

use bioct::liealg::solve_nullspace;
use bioct::rational::Rational;

fn main() {
    // x0 + x1 + x2 = 0, x0 - x3/2 = 0
    let q = |n, d| Rational::new(n, d);
    let rows = vec![
        vec![(0, q(1, 1)), (1, q(1, 1)), (2, q(1, 1))],
        vec![(0, q(1, 1)), (3, q(-1, 2))],
    ];
    let (basis, cert) = solve_nullspace(4, rows);
    println!("{cert:?}");
    for v in basis {
        println!(
            "{:?}",
            v.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }
}
