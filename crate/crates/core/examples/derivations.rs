//! Derivation algebras as exact nullspaces, with closure and Killing form.
//!
//! cargo run --release --example derivations

use bioct::algebra::AlgebraName;
use bioct::jordan::Metric;
use bioct::liealg::{
    derivation_basis, killing_character, lie_structure, FiniteAlgebra, JordanCarrier,
};

fn main() {
    let mut g2 = derivation_basis(&FiniteAlgebra::composition(AlgebraName::O));
    let s = lie_structure(&g2).unwrap();
    println!(
        "der O: dim {}, Jacobi holds {}",
        s.dim,
        s.jacobi_violation().is_none()
    );
    let k = killing_character(&mut g2, 1e-8).unwrap();
    println!(
        "  signature {:?}, chi {:?}, {:?}",
        k.signature, k.character, k.label
    );

    for (a, m) in [
        (AlgebraName::O, Metric::DEFINITE),
        (AlgebraName::Os, Metric::DEFINITE),
        (AlgebraName::O, Metric::LORENTZIAN),
    ] {
        let j = JordanCarrier::new(a, m);
        let mut b = derivation_basis(&j.algebra);
        let k = killing_character(&mut b, 1e-8).unwrap();
        println!(
            "der {}: dim {}, ranks agree {}, chi {:?}, {:?}",
            j.label,
            b.dim(),
            b.ranks_agree(),
            k.character,
            k.label
        );
    }
}
