//! Derivation, structure and unitary algebras: dimensions, closure and
//! Killing characters.

#![allow(clippy::needless_range_loop)]

use bioct::algebra::AlgebraName;
use bioct::bioctonion::TensorAlgebra;
use bioct::jordan::Metric;
use bioct::liealg::solve::{complex_derivation_dimension, in_span};
use bioct::liealg::{
    complex_structure, derivation_basis, killing_character, lie_structure, linear_derivation_basis,
    matrix_model_dimension, norm_preserving_basis, reduced_structure_basis, unitary_real_form,
    FiniteAlgebra, JordanCarrier, LieError, MatrixModel, Operator, OperatorBasis, UnitaryProblem,
};
use bioct::random::RandomStream;
use bioct::rational::Rational;

const TOL: f64 = 1e-8;

fn character(mut b: OperatorBasis) -> (usize, Option<i64>) {
    let k = killing_character(&mut b, TOL).unwrap();
    assert!(
        b.ranks_agree(),
        "{}: rational and mod-p ranks differ",
        b.label
    );
    assert!(
        k.float_agrees,
        "{}: float signature {:?} vs {:?}",
        b.label, k.float_signature, k.signature
    );
    (b.dim(), k.character)
}

/// Random unit upper-triangular matrix and its inverse.
fn shear(n: usize, seed: u64) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut rng = RandomStream::new(seed);
    let mut p = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        p[i][i] = Rational::one();
        for j in (i + 1)..n {
            if rng.index(4) == 0 {
                p[i][j] = rng.rational();
            }
        }
    }
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for c in 0..n {
        for i in (0..n).rev() {
            let mut s = if i == c {
                Rational::one()
            } else {
                Rational::zero()
            };
            for j in (i + 1)..n {
                s -= &p[i][j] * &inv[j][c];
            }
            inv[i][c] = s;
        }
    }
    (p, inv)
}

#[test]
fn derivations_of_composition_algebras() {
    let der = |a| character(derivation_basis(&FiniteAlgebra::composition(a)));
    assert_eq!(der(AlgebraName::R), (0, Some(0)));
    assert_eq!(der(AlgebraName::C).0, 0);
    assert_eq!(der(AlgebraName::H), (3, Some(-3)));
    assert_eq!(der(AlgebraName::O), (14, Some(-14)));
    assert_eq!(der(AlgebraName::Os), (14, Some(2)));
}

#[test]
fn structure_constants_satisfy_jacobi() {
    let g2 = derivation_basis(&FiniteAlgebra::composition(AlgebraName::O));
    assert!(lie_structure(&g2).unwrap().jacobi_violation().is_none());
    let j = JordanCarrier::new(AlgebraName::C, Metric::DEFINITE);
    let s = lie_structure(&reduced_structure_basis(&j)).unwrap();
    assert_eq!(s.dim, 16);
    assert!(s.jacobi_violation().is_none());
}

#[test]
fn truncated_basis_is_not_closed() {
    let g2 = derivation_basis(&FiniteAlgebra::composition(AlgebraName::O));
    let err = lie_structure(&g2.without(0)).unwrap_err();
    assert!(matches!(err, LieError::NotClosed { .. }), "{err}");

    let mut ops = g2.ops.clone();
    ops.push(g2.ops[3].scale(&Rational::new(-2, 3)));
    let dup = OperatorBasis::new("dependent", g2.carrier_dim, ops);
    assert_eq!(lie_structure(&dup).unwrap_err(), LieError::Dependent(14));
}

#[test]
fn diagonal_operators_are_abelian() {
    let n = 4;
    let ops = (0..n)
        .map(|k| {
            let mut d = vec![vec![Rational::zero(); n]; n];
            d[k][k] = Rational::from_int(k as i64 + 1);
            Operator::from_dense(&d)
        })
        .collect();
    let mut b = OperatorBasis::new("diagonal", n, ops);
    let s = lie_structure(&b).unwrap();
    assert!(s.is_abelian());
    let k = killing_character(&mut b, TOL).unwrap();
    assert_eq!((k.degenerate, k.character), (4, None));
}

#[test]
fn classical_jordan_carriers() {
    for (a, der, chi) in [
        (AlgebraName::R, 3, -3),
        (AlgebraName::C, 8, -8),
        (AlgebraName::H, 21, -21),
    ] {
        let j = JordanCarrier::new(a, Metric::DEFINITE);
        assert_eq!(
            character(derivation_basis(&j.algebra)),
            (der, Some(chi)),
            "der J3({a})"
        );
        assert_eq!(
            reduced_structure_basis(&j).dim(),
            der + j.algebra.dim - 1,
            "str0 J3({a})"
        );
    }
}

#[test]
fn derivations_kill_the_unit_and_preserve_the_trace_form() {
    for (a, m) in [
        (AlgebraName::Os, Metric::DEFINITE),
        (AlgebraName::O, Metric::LORENTZIAN),
    ] {
        let j = JordanCarrier::new(a, m);
        let b = derivation_basis(&j.algebra);
        assert_eq!(b.dim(), 52);
        let mut one = vec![Rational::zero(); j.algebra.dim];
        one[..3].iter_mut().for_each(|x| *x = Rational::one());
        let g = Operator::from_dense(&j.trace_form_gram());
        for d in &b.ops {
            assert!(d.apply(&one).iter().all(Rational::is_zero));
            assert!(d.transpose().mul(&g).add(&g.mul(d)).is_zero());
        }
    }
}

#[test]
fn f4_forms() {
    let der = |a, m| character(derivation_basis(&JordanCarrier::new(a, m).algebra));
    assert_eq!(der(AlgebraName::O, Metric::DEFINITE), (52, Some(-52)));
    assert_eq!(der(AlgebraName::Os, Metric::DEFINITE), (52, Some(4)));
    assert_eq!(der(AlgebraName::O, Metric::LORENTZIAN), (52, Some(-20)));
    let j = JordanCarrier::new(AlgebraName::O, Metric::DEFINITE);
    assert_eq!(complex_derivation_dimension(&j.algebra).nullity(), 52);
}

#[test]
fn e6_forms() {
    let o = JordanCarrier::new(AlgebraName::O, Metric::DEFINITE);
    let os = JordanCarrier::new(AlgebraName::Os, Metric::DEFINITE);
    assert_eq!(character(reduced_structure_basis(&o)), (78, Some(-26)));
    assert_eq!(character(reduced_structure_basis(&os)), (78, Some(6)));
    assert_eq!(
        character(unitary_real_form(&UnitaryProblem::from_carrier(&o, false))),
        (78, Some(-78))
    );
    assert_eq!(
        character(unitary_real_form(&UnitaryProblem::from_carrier(&o, true))),
        (78, Some(-14))
    );
    assert_eq!(
        character(unitary_real_form(&UnitaryProblem::from_carrier(&os, false))),
        (78, Some(2))
    );
}

#[test]
fn norm_preservers_span_the_reduced_structure_algebra() {
    let o = JordanCarrier::new(AlgebraName::O, Metric::DEFINITE);
    let str0 = reduced_structure_basis(&o);
    let norm = norm_preserving_basis(&o.label, &o.cubic_tensor());
    assert_eq!(norm.dim(), str0.dim());
    assert!(norm.ops.iter().all(|x| in_span(&str0.ops, x)));
}

#[test]
fn unitary_dimension_is_basis_independent() {
    for (a, dim) in [(AlgebraName::C, 16), (AlgebraName::O, 78)] {
        let j = JordanCarrier::new(a, Metric::DEFINITE);
        let problem = UnitaryProblem::from_carrier(&j, false);
        let (p, _) = shear(j.algebra.dim, 17);
        assert_eq!(unitary_real_form(&problem).dim(), dim);
        assert_eq!(unitary_real_form(&problem.change_basis(&p)).dim(), dim);
    }
}

#[test]
fn derivation_dimension_is_basis_independent() {
    let alg = FiniteAlgebra::composition(AlgebraName::Os);
    let (p, inv) = shear(alg.dim, 3);
    let moved = alg.change_basis(&p, &inv);
    assert_eq!(character(derivation_basis(&moved)), (14, Some(2)));
}

#[test]
fn derivations_of_the_bioctonions() {
    let co = FiniteAlgebra::tensor(TensorAlgebra::BIOCTONIONS);
    assert_eq!(derivation_basis(&co).dim(), 28);
    let c_linear = linear_derivation_basis(&co, &complex_structure(TensorAlgebra::BIOCTONIONS));
    assert_eq!(c_linear.dim(), 28);
}

#[test]
fn matrix_models() {
    let dim = |m, a| matrix_model_dimension(m, a).nullity();
    assert_eq!(dim(MatrixModel::A3, TensorAlgebra::OCTONIONS), 64);
    assert_eq!(dim(MatrixModel::SA3, TensorAlgebra::OCTONIONS), 38);
    assert_eq!(dim(MatrixModel::SA3, TensorAlgebra::BIOCTONIONS), 64);
}
