//! Hermitian 3×3 matrices over C⊗O: Veronese vectors are exactly the
//! rank-one matrices, and every matrix satisfies its cubic equation.
//!
//! cargo run --example jordan_rank

use bioct::bioctonion::TensorAlgebra;
use bioct::bioctonion::TensorElement;
use bioct::jordan::{ConjKind, HermMatrix3, Metric};
use bioct::random::RandomStream;
use bioct::veronese::{affine_vector, AffineCase, PlaneKind};

fn main() {
    let alg = TensorAlgebra::BIOCTONIONS;
    let mut rng = RandomStream::new(5);
    let x = TensorElement::random(alg, &mut rng);
    let y = TensorElement::random(alg, &mut rng);
    let v = affine_vector(PlaneKind::COMPLEXIFIED_CAYLEY, &AffineCase::Point(x, y)).unwrap();
    let a = HermMatrix3::from_veronese(&v);
    println!("{}", a.pretty());
    println!(
        "sharp = 0: {}, det = {:?}, rank {}",
        a.sharp().unwrap().is_zero(),
        a.det().unwrap(),
        a.rank().unwrap()
    );

    let m = HermMatrix3::random(alg, ConjKind::Octonionic, Metric::DEFINITE, &mut rng);
    println!(
        "random matrix: rank {}, Hamilton-Cayley residual zero: {}",
        m.rank().unwrap(),
        m.hamilton_cayley_residual().unwrap().is_zero()
    );

    let full = HermMatrix3::random(alg, ConjKind::Full, Metric::DEFINITE, &mut rng);
    println!("with full conjugation: {:?}", full.rank());
}
