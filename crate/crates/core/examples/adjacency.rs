//! Zero divisors break the plane axioms: two distinct points of the
//! complexified plane lie on more than one common line.
//!
//! cargo run --example adjacency

use bioct::bioctonion::{TensorAlgebra, TensorElement};
use bioct::jordan::fmt_element;
use bioct::veronese::{adjacency_demo, singularity};

fn main() {
    let alg = TensorAlgebra::BIOCTONIONS;
    let d = adjacency_demo(alg).unwrap();
    println!(
        "annihilator a = {}",
        fmt_element(&TensorElement::from_doc(d.annihilator.clone()).unwrap())
    );
    for s in &d.slopes {
        println!(
            "common line [{}, 0]",
            fmt_element(&TensorElement::from_doc(s.clone()).unwrap())
        );
    }
    println!(
        "distinct points {}, distinct lines {}, all incident {}",
        d.points_distinct, d.lines_distinct, d.all_incident
    );

    let v = TensorElement::one_plus_unit(alg, 1, 1);
    let w = singularity(&v, &TensorElement::zero(alg)).unwrap();
    println!(
        "singularity of ({}, 0): {:?}",
        fmt_element(&v),
        w.as_ref().map(fmt_element)
    );
}
