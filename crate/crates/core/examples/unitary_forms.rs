//! Real forms of E6 as operators on J3(O) or J3(Os) tensored with C or Cs.
//!
//! cargo run --release --example unitary_forms

use bioct::algebra::AlgebraName;
use bioct::jordan::Metric;
use bioct::liealg::{
    killing_character, norm_preserving_basis, reduced_structure_basis, unitary_real_form,
    JordanCarrier, UnitaryProblem,
};

fn main() {
    let o = JordanCarrier::new(AlgebraName::O, Metric::DEFINITE);
    let os = JordanCarrier::new(AlgebraName::Os, Metric::DEFINITE);
    let bases = [
        ("str0 J3(O)", reduced_structure_basis(&o)),
        ("str0 J3(Os)", reduced_structure_basis(&os)),
        (
            "norm J3(O)",
            norm_preserving_basis(&o.label, &o.cubic_tensor()),
        ),
        (
            "unitary J3(O)",
            unitary_real_form(&UnitaryProblem::from_carrier(&o, false)),
        ),
        (
            "unitary J3(O), twisted",
            unitary_real_form(&UnitaryProblem::from_carrier(&o, true)),
        ),
        (
            "unitary J3(Os)",
            unitary_real_form(&UnitaryProblem::from_carrier(&os, false)),
        ),
    ];
    for (name, mut b) in bases {
        let k = killing_character(&mut b, 1e-8).unwrap();
        println!(
            "{name:<24} dim {:>2}  signature {:?}  chi {:?}  {}",
            b.dim(),
            k.signature,
            k.character,
            k.label.unwrap_or_default()
        );
    }
}
