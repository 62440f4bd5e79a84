//! Linear systems whose solution spaces are the Lie algebras of interest.
//!
//! Every system is solved exactly over Q, and its rank is recomputed over
//! F_p (p = 2^61 − 1). The two ranks must agree.

use rayon::prelude::*;
use serde::Serialize;

use crate::bioctonion::{ConjugationKind, TensorAlgebra, TensorElement};
use crate::linalg::{row_mod_p, sparse_from_terms, Echelon, Fp, Gaussian, SparseRow};
use crate::rational::Rational;

use super::carrier::{CubicTensor, FiniteAlgebra, JordanCarrier};
use super::operator::Operator;

/// Size and rank data for one exact solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveCertificate {
    pub unknowns: usize,
    pub equations: usize,
    pub rank_rational: usize,
    pub rank_mod_p: usize,
}

impl SolveCertificate {
    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank_rational
    }

    pub fn agrees(&self) -> bool {
        self.rank_rational == self.rank_mod_p
    }
}

/// A list of operators on a common carrier.
#[derive(Clone, Debug)]
pub struct OperatorBasis {
    pub label: String,
    pub carrier_dim: usize,
    pub ops: Vec<Operator>,
    /// Set once [`super::killing::lie_structure`] has verified closure.
    pub closed: bool,
    pub certificates: Vec<SolveCertificate>,
}

impl OperatorBasis {
    pub fn new(label: impl Into<String>, carrier_dim: usize, ops: Vec<Operator>) -> Self {
        OperatorBasis {
            label: label.into(),
            carrier_dim,
            ops,
            closed: false,
            certificates: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    /// True when every certificate's rational and modular ranks agree.
    pub fn ranks_agree(&self) -> bool {
        self.certificates.iter().all(SolveCertificate::agrees)
    }

    /// Drops operator `k` (used to build non-closed bases in tests).
    pub fn without(&self, k: usize) -> Self {
        let mut ops = self.ops.clone();
        ops.remove(k);
        OperatorBasis {
            label: format!("{} minus #{k}", self.label),
            ops,
            closed: false,
            ..self.clone()
        }
    }
}

/// Exact nullspace with a modular rank cross-check run in parallel.
pub fn solve_nullspace(
    unknowns: usize,
    rows: Vec<SparseRow<Rational>>,
) -> (Vec<Vec<Rational>>, SolveCertificate) {
    let equations = rows.len();
    let (echelon, rank_mod_p) = rayon::join(
        || {
            let mut e = Echelon::new(unknowns);
            for r in &rows {
                e.insert(r.clone());
            }
            e
        },
        || {
            let mut e: Echelon<Fp> = Echelon::new(unknowns);
            for r in &rows {
                e.insert(row_mod_p(r).expect("denominators are small"));
            }
            e.rank()
        },
    );
    let cert = SolveCertificate {
        unknowns,
        equations,
        rank_rational: echelon.rank(),
        rank_mod_p,
    };
    (echelon.nullspace(), cert)
}

/// Rows of `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)`; unknown `D_{k,m}` sits at `k·n + m`.
pub fn derivation_rows(alg: &FiniteAlgebra) -> Vec<SparseRow<Rational>> {
    let n = alg.dim;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| !alg.commutative || i <= j)
        .collect();
    pairs
        .into_par_iter()
        .flat_map_iter(|(i, j)| {
            let mut terms: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
            for (m, c) in alg.product(i, j) {
                for (l, t) in terms.iter_mut().enumerate() {
                    t.push((l * n + m, c.clone()));
                }
            }
            for k in 0..n {
                for (l, c) in alg.product(k, j) {
                    terms[*l].push((k * n + i, -c));
                }
                for (l, c) in alg.product(i, k) {
                    terms[*l].push((k * n + j, -c));
                }
            }
            terms
                .into_iter()
                .map(sparse_from_terms)
                .filter(|r| !r.is_empty())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Rows of `XJ − JX = 0` for a fixed operator `J`.
pub fn commuting_rows(j: &Operator) -> Vec<SparseRow<Rational>> {
    let n = j.dim();
    let jd = j.to_dense();
    (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| {
            // (XJ)_{rc} = Σ_k X_{rk} J_{kc};  (JX)_{rc} = Σ_k J_{rk} X_{kc}
            let terms =
                (0..n).flat_map(|k| [(r * n + k, jd[k][c].clone()), (k * n + c, -&jd[r][k])]);
            sparse_from_terms(terms)
        })
        .filter(|r| !r.is_empty())
        .collect()
}

fn operators_from(n: usize, sols: &[Vec<Rational>]) -> Vec<Operator> {
    sols.par_iter()
        .map(|v| Operator::from_vector(n, v))
        .collect()
}

/// All R-linear derivations of `alg`.
pub fn derivation_basis(alg: &FiniteAlgebra) -> OperatorBasis {
    let n = alg.dim;
    let (sols, cert) = solve_nullspace(n * n, derivation_rows(alg));
    let mut b = OperatorBasis::new(format!("der({})", alg.name), n, operators_from(n, &sols));
    b.certificates.push(cert);
    b
}

/// Derivations commuting with a complex structure `j` (C-linear derivations).
pub fn linear_derivation_basis(alg: &FiniteAlgebra, j: &Operator) -> OperatorBasis {
    let n = alg.dim;
    let mut rows = derivation_rows(alg);
    rows.extend(commuting_rows(j));
    let (sols, cert) = solve_nullspace(n * n, rows);
    let mut b = OperatorBasis::new(format!("der_C({})", alg.name), n, operators_from(n, &sols));
    b.certificates.push(cert);
    b
}

/// Multiplication by `i` on `K ⊗ A` in real coordinates.
pub fn complex_structure(alg: TensorAlgebra) -> Operator {
    let i = TensorElement::scalar(alg, crate::bioctonion::Scalar::unit(alg.scalar));
    Operator::from_dense(&i.left_mul_matrix())
}

/// Complex dimension of the C-linear derivations of `alg ⊗ C`, solved over
/// the Gaussian rationals.
pub fn complex_derivation_dimension(alg: &FiniteAlgebra) -> SolveCertificate {
    let n = alg.dim;
    let rows = derivation_rows(alg);
    let equations = rows.len();
    let (rank_g, rank_p) = rayon::join(
        || {
            let mut e: Echelon<Gaussian> = Echelon::new(n * n);
            for r in &rows {
                e.insert(
                    r.iter()
                        .map(|(c, v)| (*c, Gaussian::real(v.clone())))
                        .collect(),
                );
            }
            e.rank()
        },
        || {
            crate::linalg::rank_of(
                n * n,
                rows.iter()
                    .map(|r| row_mod_p(r).expect("small denominators")),
            )
        },
    );
    SolveCertificate {
        unknowns: n * n,
        equations,
        rank_rational: rank_g,
        rank_mod_p: rank_p,
    }
}

/// `der(J) ∪ {L_a : a traceless}`.
pub fn reduced_structure_basis(j: &JordanCarrier) -> OperatorBasis {
    let der = derivation_basis(&j.algebra);
    let mut ops = der.ops;
    ops.extend(j.traceless_basis().iter().map(|a| j.algebra.left_mult(a)));
    let mut b = OperatorBasis::new(format!("str0({})", j.label), j.dim(), ops);
    b.certificates = der.certificates;
    b
}

/// Rows of `N(Xa,b,c) + N(a,Xb,c) + N(a,b,Xc) = 0` over sorted basis triples,
/// with the unknown `X_{k,m}` at `offset + k·n + m`.
pub fn cubic_invariance_rows(t: &CubicTensor, offset: usize) -> Vec<SparseRow<Rational>> {
    let n = t.dim;
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (a..n).flat_map(move |b| (b..n).map(move |c| (a, b, c))))
        .collect();
    triples
        .into_par_iter()
        .map(|(a, b, c)| {
            let mut terms = Vec::new();
            for (slot, (p, q)) in [(a, (b, c)), (b, (a, c)), (c, (a, b))] {
                for (k, v) in t.pair(p, q) {
                    terms.push((offset + k * n + slot, v.clone()));
                }
            }
            sparse_from_terms(terms)
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// The Lie algebra of the cubic norm, from the invariance equations alone.
pub fn norm_preserving_basis(label: &str, t: &CubicTensor) -> OperatorBasis {
    let n = t.dim;
    let (sols, cert) = solve_nullspace(n * n, cubic_invariance_rows(t, 0));
    let mut b = OperatorBasis::new(format!("str0_N({label})"), n, operators_from(n, &sols));
    b.certificates.push(cert);
    b
}

/// Rows of `XᵀH + HX = 0` (`sign = 1`) or `HX − XᵀH = 0` (`sign = −1`).
fn form_rows(h: &[Vec<Rational>], sign: i64) -> Vec<SparseRow<Rational>> {
    let n = h.len();
    let s = Rational::from_int(sign);
    (0..n)
        .flat_map(|p| (p..n).map(move |q| (p, q)))
        .filter(|(p, q)| sign == 1 || p < q)
        .map(|(p, q)| {
            // (XᵀH)_{pq} = Σ_k X_{kp} H_{kq};  (HX)_{pq} = Σ_k H_{pk} X_{kq}
            let terms =
                (0..n).flat_map(|k| [(k * n + p, &s * &h[k][q]), (k * n + q, h[p][k].clone())]);
            sparse_from_terms(terms)
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// Input of a unitary solve: a cubic norm and a real symmetric Gram matrix `H`
/// whose sesquilinear extension `h(x, y) = x̄ᵀ H y` is preserved.
#[derive(Clone, Debug)]
pub struct UnitaryProblem {
    pub label: String,
    pub tensor: CubicTensor,
    pub h: Vec<Vec<Rational>>,
}

impl UnitaryProblem {
    /// `h` from the trace form of `carrier`, optionally twisted by `σ_η`.
    pub fn from_carrier(carrier: &JordanCarrier, twist: bool) -> Self {
        let mut h = carrier.trace_form_gram();
        if twist {
            let s = carrier.eta_twist();
            for row in h.iter_mut() {
                for (c, v) in row.iter_mut().enumerate() {
                    if s[c] < 0 {
                        *v = -&*v;
                    }
                }
            }
        }
        let label = format!(
            "{} with {} h",
            carrier.label,
            if twist { "(+,+,-)" } else { "trace-form" }
        );
        UnitaryProblem {
            label,
            tensor: carrier.cubic_tensor(),
            h,
        }
    }

    /// The same problem in the basis `f_k = Σ_i P[i][k] e_i`.
    pub fn change_basis(&self, p: &[Vec<Rational>]) -> Self {
        let n = self.h.len();
        let hp: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| (0..n).map(|j| &self.h[i][j] * &p[j][k]).sum())
                    .collect()
            })
            .collect();
        let h = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).map(|i| &p[i][a] * &hp[i][b]).sum())
                    .collect()
            })
            .collect();
        UnitaryProblem {
            label: format!("{} (rebased)", self.label),
            tensor: self.tensor.change_basis(p),
            h,
        }
    }
}

/// C-linear `X = A + iB` on `C^n` preserving the cubic norm and anti-Hermitian
/// for `h`. The conditions split into a real system for `A` and one for `B`.
pub fn unitary_real_form(problem: &UnitaryProblem) -> OperatorBasis {
    let n = problem.h.len();
    let norm_rows = cubic_invariance_rows(&problem.tensor, 0);
    let system = |sign: i64| {
        let mut rows = norm_rows.clone();
        rows.extend(form_rows(&problem.h, sign));
        solve_nullspace(n * n, rows)
    };
    let ((sa, ca), (sb, cb)) = rayon::join(|| system(1), || system(-1));
    let mut ops = operators_from(n, &sa);
    ops.extend(operators_from(n, &sb).into_iter().map(|b| b.times_i()));
    let mut basis = OperatorBasis::new(format!("u({})", problem.label), n, ops);
    basis.certificates = vec![ca, cb];
    basis
}

/// The two 3×3 matrix models whose parameters are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatrixModel {
    /// Traceless matrices.
    A3,
    /// Traceless, anti-Hermitian for the full conjugation.
    SA3,
}

impl std::fmt::Display for MatrixModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixModel::A3 => "a3",
            MatrixModel::SA3 => "sa3",
        })
    }
}

/// Number of free real parameters of the model over `alg`, as the nullity of
/// its constraint equations on the `9·dim` real entries.
pub fn matrix_model_dimension(model: MatrixModel, alg: TensorAlgebra) -> SolveCertificate {
    let d = alg.real_dim();
    let at = |i: usize, j: usize, k: usize| (3 * i + j) * d + k;
    let mut rows: Vec<SparseRow<Rational>> = Vec::new();
    // trace: Σ_i x_ii = 0
    for k in 0..d {
        rows.push(sparse_from_terms(
            (0..3).map(|i| (at(i, i, k), Rational::one())),
        ));
    }
    if model == MatrixModel::SA3 {
        let conj: Vec<Vec<Rational>> = (0..d)
            .map(|k| {
                let mut e = vec![Rational::zero(); d];
                e[k] = Rational::one();
                TensorElement::from_real_coords(alg, &e)
                    .expect("basis")
                    .conjugate(ConjugationKind::Full)
                    .real_coords()
            })
            .collect();
        // x_ji + σ(x_ij) = 0 for i ≤ j
        for i in 0..3 {
            for j in i..3 {
                for r in 0..d {
                    let mut terms = vec![(at(j, i, r), Rational::one())];
                    terms.extend((0..d).map(|k| (at(i, j, k), conj[k][r].clone())));
                    rows.push(sparse_from_terms(terms));
                }
            }
        }
    }
    let (_, cert) = solve_nullspace(9 * d, rows);
    cert
}

/// Standard `dim so(n) = n(n−1)/2`.
pub fn so_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// True if `x` is in the Q-span of `basis` (both as operators).
pub fn in_span(basis: &[Operator], x: &Operator) -> bool {
    let Some(first) = basis.first() else {
        return x.is_zero();
    };
    let n = first.dim();
    let mut e = Echelon::new(2 * n * n);
    for b in basis {
        e.insert(b.to_vector());
    }
    e.contains(x.to_vector())
}
