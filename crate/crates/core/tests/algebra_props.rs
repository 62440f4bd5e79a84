//! Properties of the composition tables and of the scalar extensions.

use bioct::algebra::{standard_table, zero_divisor_search, AlgElement, AlgebraName};
use bioct::bioctonion::{ConjugationKind, NormKind, Scalar, TensorAlgebra, TensorElement};
use bioct::identities::identity_suite;
use bioct::random::RandomStream;
use bioct::rational::Rational;
use proptest::prelude::*;

fn table() -> impl Strategy<Value = AlgebraName> {
    prop::sample::select(AlgebraName::ALL.to_vec())
}

fn tensor() -> impl Strategy<Value = TensorAlgebra> {
    prop::sample::select(TensorAlgebra::all())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn unit_law_and_conjugation(name in table(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let x = AlgElement::random(name, &mut rng);
        let y = AlgElement::random(name, &mut rng);
        let one = AlgElement::unit(name, 0);
        prop_assert_eq!(one.mul(&x).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&one).unwrap(), x.clone());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.mul(&y).unwrap().conj(), y.conj().mul(&x.conj()).unwrap());
    }

    #[test]
    fn norm_is_multiplicative(name in table(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let x = AlgElement::random(name, &mut rng);
        let y = AlgElement::random(name, &mut rng);
        prop_assert_eq!(x.mul(&y).unwrap().norm_form(), x.norm_form() * y.norm_form());
        // x conj(x) is the scalar N(x)
        prop_assert_eq!(x.mul(&x.conj()).unwrap(), AlgElement::scalar(name, x.norm_form()));
    }

    #[test]
    fn polarization(name in table(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let x = AlgElement::random(name, &mut rng);
        let y = AlgElement::random(name, &mut rng);
        let two = Rational::from_int(2);
        let lhs = x.add(&y).unwrap().norm_form() - x.norm_form() - y.norm_form();
        prop_assert_eq!(lhs, two * x.bilinear_inner(&y).unwrap());
    }

    #[test]
    fn identities_hold_in_tables(name in table(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let norm = |x: &AlgElement| x.norm_form();
        let r = identity_suite(|| AlgElement::random(name, &mut rng), 4, Some(&norm));
        prop_assert!(r.all_passed(), "{:?}", r.outcomes.iter().find(|o| !o.passed));
    }

    #[test]
    fn octonions_have_no_zero_divisors(seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let x = AlgElement::random(AlgebraName::O, &mut rng);
        let y = AlgElement::random(AlgebraName::O, &mut rng);
        prop_assume!(!x.is_zero() && !y.is_zero());
        prop_assert!(!x.mul(&y).unwrap().is_zero());
    }

    #[test]
    fn identities_hold_in_tensor_algebras(alg in tensor(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let norm = |x: &TensorElement| x.complex_norm();
        let r = identity_suite(|| TensorElement::random(alg, &mut rng), 3, Some(&norm));
        prop_assert!(r.all_passed(), "{:?}", r.outcomes.iter().find(|o| !o.passed));
    }

    #[test]
    fn octonionic_conjugation_is_central(alg in tensor(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let b = TensorElement::random(alg, &mut rng);
        let p = b.mul(&b.conjugate(ConjugationKind::Octonionic));
        prop_assert_eq!(p, TensorElement::scalar(alg, b.complex_norm()));
    }

    #[test]
    fn full_conjugation_has_real_norm_diagonal(alg in tensor(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let b = TensorElement::random(alg, &mut rng);
        let c = b.conjugate(ConjugationKind::Full);
        prop_assert_eq!(c.conjugate(ConjugationKind::Full), b.clone());
        prop_assert_eq!(b.mul(&c).scalar_part().re.clone(), b.real_norm_sq());
        prop_assert_eq!(b.norm(NormKind::RealSq).re, b.real_norm_sq());
    }

    #[test]
    fn conjugations_are_anti_automorphisms(alg in tensor(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let a = TensorElement::random(alg, &mut rng);
        let b = TensorElement::random(alg, &mut rng);
        for k in [ConjugationKind::Octonionic, ConjugationKind::Full] {
            prop_assert_eq!(a.mul(&b).conjugate(k), b.conjugate(k).mul(&a.conjugate(k)));
        }
    }

    #[test]
    fn invertible_iff_norm_nonzero(seed in any::<u64>(), singular in any::<bool>()) {
        let alg = TensorAlgebra::BIOCTONIONS;
        let mut rng = RandomStream::new(seed);
        let mut b = TensorElement::random(alg, &mut rng);
        if singular {
            b = b.mul(&TensorElement::one_plus_unit(alg, 1, 1));
        }
        let n = b.complex_norm();
        prop_assert_eq!(b.inverse().is_some(), !n.is_zero());
        match b.zero_divisor_witness().unwrap() {
            Some(c) => { prop_assert!(n.is_zero()); prop_assert!(!c.is_zero() && b.mul(&c).is_zero()); }
            None => prop_assert!(!n.is_zero()),
        }
    }

    #[test]
    fn real_norm_composes_on_pure_octonions(seed in any::<u64>()) {
        let alg = TensorAlgebra::BIOCTONIONS;
        let mut rng = RandomStream::new(seed);
        let a = TensorElement::random_real(alg, &mut rng);
        let b = TensorElement::random_real(alg, &mut rng);
        prop_assert_eq!(a.mul(&b).real_norm_sq(), a.real_norm_sq() * b.real_norm_sq());
    }
}

#[test]
fn split_tables_have_zero_divisors() {
    for name in [AlgebraName::Cs, AlgebraName::Hs, AlgebraName::Os] {
        let (x, y) = zero_divisor_search(name).expect("split algebra");
        assert!(!x.is_zero() && !y.is_zero() && x.mul(&y).unwrap().is_zero());
    }
    assert!(zero_divisor_search(AlgebraName::O).is_none());
}

#[test]
fn norm_signatures() {
    assert_eq!(standard_table(AlgebraName::O).norm_signature(), (8, 0));
    assert_eq!(standard_table(AlgebraName::Os).norm_signature(), (4, 4));
}

#[test]
fn complex_norm_of_the_canonical_pair() {
    let alg = TensorAlgebra::BIOCTONIONS;
    let p = TensorElement::one_plus_unit(alg, 1, 1);
    let m = TensorElement::one_plus_unit(alg, 1, -1);
    assert_eq!(p.complex_norm(), Scalar::zero(alg.scalar));
    assert!(p.mul(&m).is_zero());
    assert_eq!(p.real_norm_sq() * m.real_norm_sq(), Rational::from_int(4));
}
