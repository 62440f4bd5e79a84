//! Points and lines of the complexified Cayley plane: affine embedding,
//! incidence of (x, sx+t) with [s,t], and the polarity.
//!
//! cargo run --example veronese_incidence

use bioct::bioctonion::{TensorAlgebra, TensorElement};
use bioct::random::RandomStream;
use bioct::veronese::{
    affine_embed, incident, is_veronese, line_embed, polar_map, AffineCase, LineCase, PlaneKind,
    PolarObject, Polarity,
};

fn main() {
    let kind = PlaneKind::COMPLEXIFIED_CAYLEY;
    let alg = TensorAlgebra::BIOCTONIONS;
    let mut rng = RandomStream::new(11);
    let mut r = || TensorElement::random(alg, &mut rng);
    let (x, s, t) = (r(), r(), r());
    let y = s.mul(&x).add(&t);

    let p = affine_embed(kind, &AffineCase::Point(x.clone(), y)).unwrap();
    let l = line_embed(kind, &LineCase::Slope(s.clone(), t)).unwrap();
    println!("(x, sx+t) is Veronese: {}", is_veronese(p.rep()));
    println!("(x, sx+t) on [s,t]: {}", incident(&p, &l).unwrap());

    let q = affine_embed(kind, &AffineCase::SlopePoint(s)).unwrap();
    println!("(s) on [s,t]: {}", incident(&q, &l).unwrap());
    let inf = affine_embed(kind, &AffineCase::Infinity).unwrap();
    println!("(inf) on [s,t]: {}", incident(&inf, &l).unwrap());

    for pol in [Polarity::Elliptic, Polarity::Hyperbolic] {
        let obj = PolarObject::Point(p.clone());
        let back = polar_map(&polar_map(&obj, pol).unwrap(), pol).unwrap();
        println!(
            "{pol:?} polarity is involutive at the point: {}",
            back == obj
        );
    }
}
