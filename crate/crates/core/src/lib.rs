//! Exact arithmetic for the bioctonions `C ⊗ O` and their split relatives,
//! the Veronese description of the complexified Cayley plane, cubic Jordan
//! algebras of 3×3 Hermitian matrices, and the real forms of F4 and E6 that
//! act on them.
//!
//! Everything is computed over the rationals (or `Q(i)`); dimensions of Lie
//! algebras are nullspace ranks with a prime-field cross-check, and Killing
//! signatures come from exact congruence diagonalization.
//!
//! Start with the `examples/` directory; the `bioct` binary wraps the same
//! checks as subcommands.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bioctonion;
pub mod cli;
pub mod identities;
pub mod jordan;
pub mod liealg;
pub mod linalg;
pub mod random;
pub mod rational;
pub mod veronese;
