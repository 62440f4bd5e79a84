//! Dimension of the Veronese variety from the Jacobian rank of its
//! defining equations at generic points.
//!
//! cargo run --example tangent_dimension

use bioct::veronese::{tangent_survey, PlaneKind};

fn main() {
    for kind in [PlaneKind::COMPLEXIFIED_CAYLEY, PlaneKind::ROSENFELD] {
        let s = tangent_survey(kind, 10, 0).unwrap();
        let r = &s.report;
        println!(
            "{kind}: ambient {}, rank {} (constant over {} points: {}), dim H {}, plane dimension {}",
            r.ambient,
            r.rank,
            s.ranks.len(),
            s.constant,
            r.dim_h,
            r.dim_plane
        );
    }
}
