//! Cubic norm, adjoint and rank of 3×3 Hermitian matrices.

use bioct::bioctonion::{Scalar, ScalarRing, TensorAlgebra, TensorElement};
use bioct::jordan::{ntri, trace_form, ConjKind, HermMatrix3, Metric};
use bioct::random::RandomStream;
use bioct::rational::Rational;
use bioct::veronese::{affine_vector, canonical_rep, generic_point, AffineCase, PlaneKind};
use proptest::prelude::*;

fn algebra() -> impl Strategy<Value = TensorAlgebra> {
    prop::sample::select(TensorAlgebra::all())
}

fn metric() -> impl Strategy<Value = Metric> {
    prop::sample::select(vec![Metric::DEFINITE, Metric::LORENTZIAN])
}

fn scalar(alg: TensorAlgebra, rng: &mut RandomStream) -> Scalar {
    let im = if alg.scalar == ScalarRing::RealR {
        Rational::zero()
    } else {
        rng.rational()
    };
    Scalar::new(alg.scalar, rng.nonzero_rational(), im).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn homogeneity(alg in algebra(), m in metric(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let a = HermMatrix3::random(alg, ConjKind::Octonionic, m, &mut rng);
        let s = scalar(alg, &mut rng);
        let s2 = s.mul(&s);
        prop_assert_eq!(a.scale(&s).det().unwrap(), s2.mul(&s).mul(&a.det().unwrap()));
        prop_assert_eq!(a.scale(&s).sharp().unwrap(), a.sharp().unwrap().scale(&s2));
    }

    #[test]
    fn hamilton_cayley(alg in algebra(), m in metric(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let a = HermMatrix3::random(alg, ConjKind::Octonionic, m, &mut rng);
        prop_assert!(a.hamilton_cayley_residual().unwrap().is_zero());
    }

    #[test]
    fn trace_of_sharp(alg in algebra(), m in metric(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let a = HermMatrix3::random(alg, ConjKind::Octonionic, m, &mut rng);
        let t = a.trace().unwrap();
        let t2 = a.square().trace().unwrap();
        let half = Rational::new(1, 2);
        prop_assert_eq!(a.sharp().unwrap().trace().unwrap(), t.mul(&t).sub(&t2).scale(&half));
    }

    #[test]
    fn cubic_form_polarizes_to_det(alg in algebra(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let a = HermMatrix3::random(alg, ConjKind::Octonionic, Metric::DEFINITE, &mut rng);
        let b = HermMatrix3::random(alg, ConjKind::Octonionic, Metric::DEFINITE, &mut rng);
        let c = HermMatrix3::random(alg, ConjKind::Octonionic, Metric::DEFINITE, &mut rng);
        prop_assert_eq!(ntri(&a, &a, &a).unwrap(), a.det().unwrap());
        prop_assert_eq!(ntri(&a, &b, &c).unwrap(), ntri(&c, &a, &b).unwrap());
        prop_assert_eq!(ntri(&a, &b, &c).unwrap(), ntri(&b, &a, &c).unwrap());
        prop_assert_eq!(trace_form(&a, &b).unwrap(), trace_form(&b, &a).unwrap());
    }

    #[test]
    fn veronese_images_are_rank_one_idempotents_up_to_trace(seed in any::<u64>()) {
        let alg = TensorAlgebra::BIOCTONIONS;
        let mut rng = RandomStream::new(seed);
        let x = TensorElement::random(alg, &mut rng);
        let y = TensorElement::random(alg, &mut rng);
        let v = affine_vector(PlaneKind::COMPLEXIFIED_CAYLEY, &AffineCase::Point(x, y)).unwrap();
        let a = HermMatrix3::from_veronese(&v);
        prop_assert!(a.sharp().unwrap().is_zero());
        prop_assert!(a.det().unwrap().is_zero());
        prop_assert_eq!(a.rank().unwrap(), 1);
        let t = a.trace().unwrap();
        prop_assume!(!t.is_zero());
        let e = a.scale(&t.inverse().unwrap());
        prop_assert_eq!(e.square(), e);
    }

    #[test]
    fn real_veronese_images_use_the_full_conjugation(seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let v = canonical_rep(&generic_point(PlaneKind::ROSENFELD, &mut rng).unwrap()).unwrap();
        let a = HermMatrix3::from_veronese(&v);
        prop_assert_eq!(a.conj(), ConjKind::Full);
        prop_assert!(a.rank().is_err());
        let w = canonical_rep(&generic_point(PlaneKind::ROSENFELD, &mut rng).unwrap()).unwrap();
        prop_assert_eq!(v == w, a == HermMatrix3::from_veronese(&w));
    }
}

#[test]
fn frame_idempotents() {
    let alg = TensorAlgebra::BIOCTONIONS;
    let e: Vec<_> = (0..3)
        .map(|i| HermMatrix3::frame_idempotent(alg, ConjKind::Octonionic, Metric::DEFINITE, i))
        .collect();
    let sum = e[0].add(&e[1]).unwrap().add(&e[2]).unwrap();
    assert_eq!(
        sum,
        HermMatrix3::identity(alg, ConjKind::Octonionic, Metric::DEFINITE)
    );
    for i in 0..3 {
        assert_eq!(e[i].square(), e[i]);
        assert_eq!(e[i].rank().unwrap(), 1);
        for j in (i + 1)..3 {
            assert!(e[i].jordan_mul(&e[j]).unwrap().is_zero());
        }
    }
}

#[test]
fn ranks_of_diagonal_matrices() {
    let alg = TensorAlgebra::OCTONIONS;
    let d = |a, b, c| {
        let s = |n| Scalar::from_ints(ScalarRing::RealR, n, 0);
        HermMatrix3::diagonal(
            alg,
            ConjKind::Octonionic,
            Metric::DEFINITE,
            [s(a), s(b), s(c)],
        )
    };
    assert_eq!(d(0, 0, 0).rank().unwrap(), 0);
    assert_eq!(d(2, 0, 0).rank().unwrap(), 1);
    assert_eq!(d(2, 3, 0).rank().unwrap(), 2);
    assert_eq!(d(2, 3, -1).rank().unwrap(), 3);
}

#[test]
fn trace_form_is_positive_on_octonions() {
    let mut rng = RandomStream::new(4);
    for _ in 0..50 {
        let a = HermMatrix3::random(
            TensorAlgebra::OCTONIONS,
            ConjKind::Octonionic,
            Metric::DEFINITE,
            &mut rng,
        );
        let t = trace_form(&a, &a).unwrap();
        assert!(a.is_zero() || t.re.signum() > 0);
    }
}
