//! Alternativity, Moufang and composition on every Cayley–Dickson table,
//! plus an explicit non-associative triple in O.
//!
//! cargo run --example octonion_identities

use bioct::algebra::{AlgElement, AlgebraName};
use bioct::identities::{associativity_witness, identity_suite, AlgebraElement};
use bioct::random::RandomStream;

fn main() {
    for name in AlgebraName::ALL {
        let mut rng = RandomStream::derive(7, name.as_str());
        let norm = |x: &AlgElement| x.norm_form();
        let report = identity_suite(|| AlgElement::random(name, &mut rng), 100, Some(&norm));
        let failed: Vec<_> = report
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.formula)
            .collect();
        println!(
            "{name:>2}: {} identities on 100 triples, failures {failed:?}",
            report.outcomes.len()
        );
    }

    let e = |k| AlgElement::unit(AlgebraName::O, k);
    let mut rng = RandomStream::new(1);
    let (x, y, z) = associativity_witness(|| AlgElement::random(AlgebraName::O, &mut rng), 50)
        .expect("O is not associative");
    let lhs = x.product(&y).product(&z);
    let rhs = x.product(&y.product(&z));
    println!(
        "random triple: (xy)z - x(yz) has {} nonzero coordinates",
        lhs.sub(&rhs)
            .unwrap()
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    );

    // basis units already disagree
    let (a, b, c) = (e(1), e(2), e(4));
    println!(
        "(e1 e2) e4 = {:?}",
        a.product(&b)
            .product(&c)
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "e1 (e2 e4) = {:?}",
        a.product(&b.product(&c))
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
}
