//! The complex norm of C⊗O composes; the real norm does not, and zero divisors
//! are exactly the elements with N(b) = 0.
//!
//! cargo run --example bioctonion_norms

use bioct::bioctonion::{composition_check, NormKind, TensorAlgebra, TensorElement};
use bioct::jordan::fmt_element;
use bioct::random::RandomStream;

fn main() {
    let alg = TensorAlgebra::BIOCTONIONS;
    for kind in [NormKind::ComplexN, NormKind::RealSq] {
        let r = composition_check(alg, kind, 500, 0);
        println!("{kind:?}: composes on 500 pairs = {}", r.passed);
    }

    let p = TensorElement::one_plus_unit(alg, 1, 1);
    let m = TensorElement::one_plus_unit(alg, 1, -1);
    println!("b = {}, N(b) = {:?}", fmt_element(&p), p.complex_norm());
    println!("b b' = {}", fmt_element(&p.mul(&m)));
    println!(
        "||b b'||^2 = {}, ||b||^2 ||b'||^2 = {}",
        p.mul(&m).real_norm_sq(),
        p.real_norm_sq() * m.real_norm_sq()
    );

    let w = p.zero_divisor_witness().unwrap().expect("N(b) = 0");
    println!("annihilator of b: {}", fmt_element(&w));
    assert!(p.mul(&w).is_zero() && p.inverse().is_none());

    let mut rng = RandomStream::new(3);
    let b = TensorElement::random(alg, &mut rng);
    let inv = b.inverse().expect("random elements are invertible");
    assert_eq!(b.mul(&inv), TensorElement::one(alg));
    println!("random b is invertible with N(b) = {:?}", b.complex_norm());
}
