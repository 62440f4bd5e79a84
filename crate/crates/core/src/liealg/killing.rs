//! Structure constants, closure certificates and Killing signatures.

use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::{
    exact_inertia, float_inertia, min_abs_eigen_ratio, Inertia, SpanError, SpanSolver,
};
use crate::rational::Rational;

use super::operator::Operator;
use super::solve::OperatorBasis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("operator {0} of the basis is linearly dependent on the others")]
    Dependent(usize),
    #[error("[x_{a}, x_{b}] is not in the span of the basis")]
    NotClosed { a: usize, b: usize },
}

/// Structure constants as adjoint matrices: `[x_a, x_l] = Σ_k ad[a][k][l] x_k`.
#[derive(Clone, Debug)]
pub struct LieStructure {
    pub dim: usize,
    pub ad: Vec<Vec<Vec<Rational>>>,
}

impl LieStructure {
    /// `c_{ab}^k`.
    pub fn constant(&self, a: usize, b: usize, k: usize) -> &Rational {
        &self.ad[a][k][b]
    }

    pub fn is_abelian(&self) -> bool {
        self.ad.iter().flatten().flatten().all(Rational::is_zero)
    }

    /// Largest number of nonzero terms left after summing the Jacobi identity;
    /// returns the first failing `(a, b, c, k)` if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.dim;
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).flat_map(move |b| ((b + 1)..n).map(move |c| (a, b, c))))
            .collect();
        triples.into_par_iter().find_map_any(|(a, b, c)| {
            // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
            (0..n).find_map(|k| {
                let mut s = Rational::zero();
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for m in 0..n {
                        let yz = self.constant(y, z, m);
                        if !yz.is_zero() {
                            s += yz * self.constant(x, m, k);
                        }
                    }
                }
                (!s.is_zero()).then_some((a, b, c, k))
            })
        })
    }

    /// `K_ab = tr(ad_a ad_b)`.
    pub fn killing_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let rows: Vec<Vec<Rational>> = (0..n)
            .into_par_iter()
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if b < a {
                            return Rational::zero();
                        }
                        let mut s = Rational::zero();
                        for k in 0..n {
                            for l in 0..n {
                                let x = &self.ad[a][k][l];
                                if !x.is_zero() {
                                    let y = &self.ad[b][l][k];
                                    if !y.is_zero() {
                                        s += x * y;
                                    }
                                }
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if b >= a {
                            rows[a][b].clone()
                        } else {
                            rows[b][a].clone()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Expresses every commutator in the basis and verifies it exactly.
///
/// Coordinates are read from pivot entries and then checked by rebuilding the
/// commutator from them, so a non-closed pair is always detected.
pub fn lie_structure(basis: &OperatorBasis) -> Result<LieStructure, LieError> {
    let dim = basis.dim();
    let n = basis.carrier_dim;
    let vectors: Vec<_> = basis.ops.iter().map(Operator::to_vector).collect();
    let solver = SpanSolver::new(2 * n * n, &vectors).map_err(|e| match e {
        SpanError::Dependent(k) => LieError::Dependent(k),
        SpanError::NotInSpan => unreachable!(),
    })?;
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|a| ((a + 1)..dim).map(move |b| (a, b)))
        .collect();
    let coords: Vec<Vec<Rational>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let c = basis.ops[a].commutator(&basis.ops[b]);
            let x = solver.coordinates_at_pivots(&c.to_vector());
            let mut rebuilt = Operator::zero(n);
            for (k, v) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                rebuilt = rebuilt.axpy(v, &basis.ops[k]);
            }
            if rebuilt == c {
                Ok(x)
            } else {
                Err(LieError::NotClosed { a, b })
            }
        })
        .collect::<Result<_, _>>()?;
    let mut ad = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
    for (&(a, b), x) in pairs.iter().zip(&coords) {
        for (k, v) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            ad[a][k][b] = v.clone();
            ad[b][k][a] = -v;
        }
    }
    Ok(LieStructure { dim, ad })
}

/// Known real forms by `(dim, χ)`.
pub fn real_form_label(dim: usize, character: i64) -> Option<&'static str> {
    Some(match (dim, character) {
        (0, 0) => "0",
        (3, -3) => "A1 (su2)",
        (8, -8) => "A2(-8) (su3)",
        (14, -14) => "G2(-14)",
        (14, 2) => "G2(2)",
        (21, -21) => "C3(-21) (sp3)",
        (52, -52) => "F4(-52)",
        (52, 4) => "F4(4)",
        (52, -20) => "F4(-20)",
        (78, -78) => "E6(-78)",
        (78, -26) => "E6(-26)",
        (78, -14) => "E6(-14)",
        (78, 2) => "E6(2)",
        (78, 6) => "E6(6)",
        _ => return None,
    })
}

/// Killing-form data of a closed operator basis.
#[derive(Clone, Debug, Serialize)]
pub struct KillingReport {
    pub dim: usize,
    /// `(p, q)`: positive and negative eigenvalue counts.
    pub signature: (usize, usize),
    pub degenerate: usize,
    /// `p − q`, only when the form is nondegenerate.
    pub character: Option<i64>,
    pub label: Option<String>,
    pub float_signature: (usize, usize),
    pub float_agrees: bool,
    /// Smallest `|λ| / max|λ|` of the float path (margin against the tolerance).
    pub min_eigen_ratio: f64,
    pub tolerance: f64,
}

impl KillingReport {
    pub fn from_structure(s: &LieStructure, tolerance: f64) -> Self {
        let k = s.killing_matrix();
        let kf: Vec<Vec<f64>> = k
            .iter()
            .map(|r| r.iter().map(Rational::to_f64).collect())
            .collect();
        let (exact, (float, ratio)) = rayon::join(
            || exact_inertia(&k),
            || (float_inertia(&kf, tolerance), min_abs_eigen_ratio(&kf)),
        );
        KillingReport::from_inertias(s.dim, exact, float, ratio, tolerance)
    }

    fn from_inertias(
        dim: usize,
        exact: Inertia,
        float: Inertia,
        ratio: f64,
        tolerance: f64,
    ) -> Self {
        let character = (exact.zero == 0).then(|| exact.positive as i64 - exact.negative as i64);
        KillingReport {
            dim,
            signature: (exact.positive, exact.negative),
            degenerate: exact.zero,
            character,
            label: character
                .and_then(|c| real_form_label(dim, c))
                .map(str::to_string),
            float_signature: (float.positive, float.negative),
            float_agrees: exact == float,
            min_eigen_ratio: ratio,
            tolerance,
        }
    }
}

/// Closure plus Killing report; marks the basis closed on success.
pub fn killing_character(
    basis: &mut OperatorBasis,
    tolerance: f64,
) -> Result<KillingReport, LieError> {
    let s = lie_structure(basis)?;
    basis.closed = true;
    Ok(KillingReport::from_structure(&s, tolerance))
}
