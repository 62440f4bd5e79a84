//! 3×3 matrices Hermitian for a conjugation `σ` and a diagonal metric `η`.
//!
//! Layout: `x₁₂ = b₃`, `x₂₃ = b₁`, `x₃₁ = b₂`, and the mirrored entries are
//! `x_ji = η_i η_j σ(x_ij)`. Diagonal entries satisfy `σ(d) = d`; they are
//! scalars when `σ` is central and general self-adjoint elements otherwise.
//!
//! Products of entries are always binary (`(AB)_ij = Σ_k x_ik y_kj`), so the
//! lack of associativity never has to be resolved inside a matrix product.

use serde::{Deserialize, Serialize};

use crate::bioctonion::{
    BioctonionError, ConjugationKind, Scalar, ScalarRing, TensorAlgebra, TensorElement,
    TensorElementDoc,
};
use crate::random::RandomStream;
use crate::rational::Rational;
use crate::veronese::{Variant, VeroneseTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjKind {
    Octonionic,
    Full,
}

impl ConjKind {
    pub fn conjugation(self) -> ConjugationKind {
        match self {
            ConjKind::Octonionic => ConjugationKind::Octonionic,
            ConjKind::Full => ConjugationKind::Full,
        }
    }

    /// `b σ(b)` is a scalar for every `b`.
    pub fn is_central(self, alg: TensorAlgebra) -> bool {
        self == ConjKind::Octonionic || alg.scalar == ScalarRing::RealR
    }
}

/// Diagonal signs `η`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Metric(pub [i8; 3]);

impl Metric {
    pub const DEFINITE: Metric = Metric([1, 1, 1]);
    pub const LORENTZIAN: Metric = Metric([1, 1, -1]);

    pub fn new(signs: [i8; 3]) -> Result<Self, JordanError> {
        if signs.iter().all(|s| *s == 1 || *s == -1) {
            Ok(Metric(signs))
        } else {
            Err(JordanError::BadMetric(signs))
        }
    }

    pub fn sign(&self, i: usize, j: usize) -> i64 {
        (self.0[i] * self.0[j]) as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JordanError {
    #[error("matrices live on different carriers")]
    CarrierMismatch,
    #[error("{0} is undefined for the non-central full conjugation")]
    NonCentral(&'static str),
    #[error("matrix is not Hermitian at entry ({0},{1})")]
    NotHermitian(usize, usize),
    #[error("metric entries must be ±1, got {0:?}")]
    BadMetric([i8; 3]),
    #[error(transparent)]
    Algebra(#[from] BioctonionError),
}

/// Position of `b_ν` (0-based ν) in the upper pattern: `b₁ ↦ (1,2)`, `b₂ ↦ (2,0)`, `b₃ ↦ (0,1)`.
const B_POS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HermMatrix3 {
    alg: TensorAlgebra,
    conj: ConjKind,
    metric: Metric,
    diag: [TensorElement; 3],
    b: [TensorElement; 3],
}

impl std::fmt::Debug for HermMatrix3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Herm[{} {:?} {:?}](diag {:?}, b {:?})",
            self.alg, self.conj, self.metric.0, self.diag, self.b
        )
    }
}

impl HermMatrix3 {
    pub fn new(
        alg: TensorAlgebra,
        conj: ConjKind,
        metric: Metric,
        diag: [TensorElement; 3],
        b: [TensorElement; 3],
    ) -> Result<Self, JordanError> {
        for x in diag.iter().chain(&b) {
            if x.algebra() != alg {
                return Err(BioctonionError::AlgebraMismatch(x.algebra(), alg).into());
            }
        }
        for (i, d) in diag.iter().enumerate() {
            if d.conjugate(conj.conjugation()) != *d {
                return Err(JordanError::NotHermitian(i, i));
            }
        }
        Ok(HermMatrix3 {
            alg,
            conj,
            metric,
            diag,
            b,
        })
    }

    /// Scalar diagonal `λ` and off-diagonal `b`.
    pub fn from_parts(
        alg: TensorAlgebra,
        conj: ConjKind,
        metric: Metric,
        lambda: [Scalar; 3],
        b: [TensorElement; 3],
    ) -> Result<Self, JordanError> {
        HermMatrix3::new(
            alg,
            conj,
            metric,
            lambda.map(|l| TensorElement::scalar(alg, l)),
            b,
        )
    }

    pub fn zero(alg: TensorAlgebra, conj: ConjKind, metric: Metric) -> Self {
        let z = TensorElement::zero(alg);
        HermMatrix3 {
            alg,
            conj,
            metric,
            diag: [z.clone(), z.clone(), z.clone()],
            b: [z.clone(), z.clone(), z],
        }
    }

    pub fn diagonal(alg: TensorAlgebra, conj: ConjKind, metric: Metric, d: [Scalar; 3]) -> Self {
        let mut m = HermMatrix3::zero(alg, conj, metric);
        m.diag = d.map(|s| TensorElement::scalar(alg, s));
        m
    }

    pub fn identity(alg: TensorAlgebra, conj: ConjKind, metric: Metric) -> Self {
        let one = Scalar::one(alg.scalar);
        HermMatrix3::diagonal(alg, conj, metric, [one.clone(), one.clone(), one])
    }

    /// `diag(e_i)`: the i-th primitive idempotent of the standard frame.
    pub fn frame_idempotent(alg: TensorAlgebra, conj: ConjKind, metric: Metric, i: usize) -> Self {
        let mut d = [
            Scalar::zero(alg.scalar),
            Scalar::zero(alg.scalar),
            Scalar::zero(alg.scalar),
        ];
        d[i] = Scalar::one(alg.scalar);
        HermMatrix3::diagonal(alg, conj, metric, d)
    }

    pub fn random(
        alg: TensorAlgebra,
        conj: ConjKind,
        metric: Metric,
        rng: &mut RandomStream,
    ) -> Self {
        let c = conj.conjugation();
        let half = Rational::new(1, 2);
        let diag = std::array::from_fn(|_| {
            if conj.is_central(alg) {
                TensorElement::scalar(alg, TensorElement::random(alg, rng).coord(0).clone())
            } else {
                let d = TensorElement::random(alg, rng);
                d.add(&d.conjugate(c)).scale_rational(&half)
            }
        });
        let b = std::array::from_fn(|_| TensorElement::random(alg, rng));
        HermMatrix3 {
            alg,
            conj,
            metric,
            diag,
            b,
        }
    }

    /// `A_ω`: octonionic conjugation for the complex variant, full for the real one.
    pub fn from_veronese(v: &VeroneseTriple) -> Self {
        let conj = match v.kind.variant {
            Variant::ComplexHermitian => ConjKind::Octonionic,
            Variant::RealHermitian => ConjKind::Full,
        };
        HermMatrix3::from_parts(
            v.kind.algebra,
            conj,
            Metric::DEFINITE,
            v.lambda.clone(),
            v.b.clone(),
        )
        .expect("scalar diagonal is self-adjoint")
    }

    pub fn algebra(&self) -> TensorAlgebra {
        self.alg
    }

    pub fn conj(&self) -> ConjKind {
        self.conj
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn diag(&self) -> &[TensorElement; 3] {
        &self.diag
    }

    pub fn b(&self) -> &[TensorElement; 3] {
        &self.b
    }

    pub fn is_central(&self) -> bool {
        self.conj.is_central(self.alg)
    }

    fn require_central(&self, op: &'static str) -> Result<(), JordanError> {
        if self.is_central() {
            Ok(())
        } else {
            Err(JordanError::NonCentral(op))
        }
    }

    /// Scalar diagonal entry; meaningful for central conjugations.
    pub fn lambda(&self, i: usize) -> &Scalar {
        self.diag[i].coord(0)
    }

    pub fn entry(&self, i: usize, j: usize) -> TensorElement {
        if i == j {
            return self.diag[i].clone();
        }
        for (nu, &(p, q)) in B_POS.iter().enumerate() {
            if (i, j) == (p, q) {
                return self.b[nu].clone();
            }
            if (i, j) == (q, p) {
                let s = self.b[nu].conjugate(self.conj.conjugation());
                return if self.metric.sign(p, q) > 0 {
                    s
                } else {
                    s.neg()
                };
            }
        }
        unreachable!("indices below 3")
    }

    pub fn full(&self) -> [[TensorElement; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    /// Reads a full matrix back, checking Hermiticity of every entry.
    pub fn from_full(
        alg: TensorAlgebra,
        conj: ConjKind,
        metric: Metric,
        m: &[[TensorElement; 3]; 3],
    ) -> Result<Self, JordanError> {
        let diag = std::array::from_fn(|i| m[i][i].clone());
        let b = std::array::from_fn(|nu| {
            let (p, q) = B_POS[nu];
            m[p][q].clone()
        });
        let h = HermMatrix3::new(alg, conj, metric, diag, b)?;
        for i in 0..3 {
            for j in 0..3 {
                if h.entry(i, j) != m[i][j] {
                    return Err(JordanError::NotHermitian(i, j));
                }
            }
        }
        Ok(h)
    }

    fn check(&self, o: &Self) -> Result<(), JordanError> {
        if self.alg != o.alg || self.conj != o.conj || self.metric != o.metric {
            Err(JordanError::CarrierMismatch)
        } else {
            Ok(())
        }
    }

    fn map2(
        &self,
        o: &Self,
        f: impl Fn(&TensorElement, &TensorElement) -> TensorElement,
    ) -> Result<Self, JordanError> {
        self.check(o)?;
        Ok(HermMatrix3 {
            alg: self.alg,
            conj: self.conj,
            metric: self.metric,
            diag: std::array::from_fn(|i| f(&self.diag[i], &o.diag[i])),
            b: std::array::from_fn(|i| f(&self.b[i], &o.b[i])),
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self, JordanError> {
        self.map2(o, TensorElement::add)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, JordanError> {
        self.map2(o, TensorElement::sub)
    }

    /// Multiplication by a scalar that commutes with `σ` up to its own conjugate;
    /// only real scalars preserve Hermiticity for the full conjugation.
    pub fn scale(&self, a: &Scalar) -> Self {
        HermMatrix3 {
            alg: self.alg,
            conj: self.conj,
            metric: self.metric,
            diag: self.diag.clone().map(|d| d.scale(a)),
            b: self.b.clone().map(|x| x.scale(a)),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Scalar::real(self.alg.scalar, r.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().chain(&self.b).all(TensorElement::is_zero)
    }

    /// The ordinary matrix product, entry by entry, as a full matrix.
    pub fn matrix_product(&self, o: &Self) -> [[TensorElement; 3]; 3] {
        let a = self.full();
        let b = o.full();
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(TensorElement::zero(self.alg), |acc, k| {
                    acc.add(&a[i][k].mul(&b[k][j]))
                })
            })
        })
    }

    /// `A∘B = ½(AB + BA)`.
    pub fn jordan_mul(&self, o: &Self) -> Result<Self, JordanError> {
        self.check(o)?;
        let ab = self.matrix_product(o);
        let ba = o.matrix_product(self);
        let half = Rational::new(1, 2);
        let m: [[TensorElement; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| ab[i][j].add(&ba[i][j]).scale_rational(&half))
        });
        HermMatrix3::from_full(self.alg, self.conj, self.metric, &m)
    }

    pub fn square(&self) -> Self {
        self.jordan_mul(self).expect("same carrier")
    }

    /// Sum of the diagonal as an algebra element (scalar for central `σ`).
    pub fn trace_element(&self) -> TensorElement {
        self.diag[0].add(&self.diag[1]).add(&self.diag[2])
    }

    pub fn trace(&self) -> Result<Scalar, JordanError> {
        self.require_central("trace")?;
        Ok(self.trace_element().coord(0).clone())
    }

    /// `x₁₁x₂₂x₃₃ − x₁₁(x₂₃x₃₂) − x₂₂(x₃₁x₁₃) − x₃₃(x₁₂x₂₁) + t((x₁₂x₂₃)x₃₁)`
    /// with `t(a) = a + σ(a)`. For the definite metric this is
    /// `λ₁λ₂λ₃ − λ₁N(b₁) − λ₂N(b₂) − λ₃N(b₃) + 2Re((b₃b₁)b₂)`.
    pub fn det(&self) -> Result<Scalar, JordanError> {
        self.require_central("det")?;
        let x = self.full();
        let l: [Scalar; 3] = std::array::from_fn(|i| self.lambda(i).clone());
        let pair = |i: usize, j: usize| x[i][j].mul(&x[j][i]).coord(0).clone();
        let cyc = x[0][1].mul(&x[1][2]).mul(&x[2][0]);
        let t = cyc.add(&cyc.conjugate(self.conj.conjugation()));
        Ok(l[0]
            .mul(&l[1])
            .mul(&l[2])
            .sub(&l[0].mul(&pair(1, 2)))
            .sub(&l[1].mul(&pair(2, 0)))
            .sub(&l[2].mul(&pair(0, 1)))
            .add(t.coord(0)))
    }

    /// `(A♯)_ii = x_jj x_kk − x_jk x_kj`, `(A♯)_ij = x_ik x_kj − x_kk x_ij`.
    pub fn sharp(&self) -> Result<Self, JordanError> {
        self.require_central("sharp")?;
        let x = self.full();
        let m: [[TensorElement; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    let (p, q) = ((i + 1) % 3, (i + 2) % 3);
                    x[p][p].mul(&x[q][q]).sub(&x[p][q].mul(&x[q][p]))
                } else {
                    let k = 3 - i - j;
                    x[i][k].mul(&x[k][j]).sub(&x[k][k].mul(&x[i][j]))
                }
            })
        });
        HermMatrix3::from_full(self.alg, self.conj, self.metric, &m)
    }

    /// `A∘A² − tr(A)A² + ½(tr(A)² − tr(A²))A − det(A)I`.
    pub fn hamilton_cayley_residual(&self) -> Result<Self, JordanError> {
        self.require_central("Hamilton-Cayley")?;
        let a2 = self.square();
        let a3 = self.jordan_mul(&a2)?;
        let t = self.trace()?;
        let t2 = a2.trace()?;
        let half = Rational::new(1, 2);
        let c2 = t.mul(&t).sub(&t2).scale(&half);
        let id = HermMatrix3::identity(self.alg, self.conj, self.metric);
        a3.sub(&a2.scale(&t))?
            .add(&self.scale(&c2))?
            .sub(&id.scale(&self.det()?))
    }

    /// 0 iff `A = 0`, 1 iff `A♯ = 0`, 2 iff `det A = 0`, else 3.
    pub fn rank(&self) -> Result<u8, JordanError> {
        self.require_central("rank")?;
        if self.is_zero() {
            Ok(0)
        } else if self.sharp()?.is_zero() {
            Ok(1)
        } else if self.det()?.is_zero() {
            Ok(2)
        } else {
            Ok(3)
        }
    }
}

/// `T(A,B) = tr(A∘B)`.
pub fn trace_form(a: &HermMatrix3, b: &HermMatrix3) -> Result<Scalar, JordanError> {
    a.jordan_mul(b)?.trace()
}

/// Full polarization of the determinant: `Ntri(A,A,A) = det A`.
pub fn ntri(a: &HermMatrix3, b: &HermMatrix3, c: &HermMatrix3) -> Result<Scalar, JordanError> {
    let ab = a.add(b)?;
    let ac = a.add(c)?;
    let bc = b.add(c)?;
    let abc = ab.add(c)?;
    let s = abc
        .det()?
        .sub(&ab.det()?)
        .sub(&ac.det()?)
        .sub(&bc.det()?)
        .add(&a.det()?)
        .add(&b.det()?)
        .add(&c.det()?);
    Ok(s.scale(&Rational::new(1, 6)))
}

/// Outcome of [`centrality_check`].
#[derive(Debug, Clone, Serialize)]
pub struct CentralityReport {
    pub algebra: String,
    pub conj: ConjKind,
    pub samples: usize,
    pub central: bool,
    /// `b` with `b σ(b)` not scalar.
    pub witness: Option<TensorElementDoc>,
    pub witness_product: Option<TensorElementDoc>,
    /// `(A²∘B)∘A = A²∘(B∘A)` on sampled Hermitian matrices.
    pub jordan_identity_holds: bool,
    pub jordan_identity_checked: usize,
    /// Sampled `A ≠ 0` with `A² = 0` (a failure of formal reality), if found.
    pub nilpotent_found: bool,
}

/// Reports whether `b σ(b)` is always scalar and samples the Jordan identity
/// on the corresponding Hermitian space.
pub fn centrality_check(
    alg: TensorAlgebra,
    conj: ConjKind,
    samples: usize,
    seed: u64,
) -> CentralityReport {
    assert!(samples > 0, "centrality check needs at least one sample");
    let mut rng = RandomStream::derive(seed, "centrality");
    let c = conj.conjugation();
    let mut candidates = Vec::new();
    if alg.scalar != ScalarRing::RealR {
        candidates.push(TensorElement::one_plus_unit(alg, 1, 1));
    }
    candidates.extend((0..samples).map(|_| TensorElement::random(alg, &mut rng)));
    let witness = candidates
        .into_iter()
        .find(|b| !b.mul(&b.conjugate(c)).is_scalar());
    let witness_product = witness.as_ref().map(|b| b.mul(&b.conjugate(c)).to_doc());

    let metric = Metric::DEFINITE;
    let checks = samples.min(50);
    let mut holds = true;
    let mut nilpotent = false;
    for _ in 0..checks {
        let a = HermMatrix3::random(alg, conj, metric, &mut rng);
        let b = HermMatrix3::random(alg, conj, metric, &mut rng);
        let a2 = a.square();
        let lhs = a2.jordan_mul(&b).and_then(|x| x.jordan_mul(&a));
        let rhs = b.jordan_mul(&a).and_then(|x| a2.jordan_mul(&x));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            _ => holds = false,
        }
        nilpotent |= !a.is_zero() && a2.is_zero();
    }
    CentralityReport {
        algebra: alg.label(),
        conj,
        samples,
        central: witness.is_none(),
        witness: witness.map(|b| b.to_doc()),
        witness_product,
        jordan_identity_holds: holds,
        jordan_identity_checked: checks,
        nilpotent_found: nilpotent,
    }
}

/// JSON document for a Hermitian matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermMatrixDoc {
    pub conj: ConjKind,
    pub metric: [i8; 3],
    pub diag: Vec<TensorElementDoc>,
    pub b: Vec<TensorElementDoc>,
}

impl HermMatrix3 {
    pub fn to_doc(&self) -> HermMatrixDoc {
        HermMatrixDoc {
            conj: self.conj,
            metric: self.metric.0,
            diag: self.diag.iter().map(TensorElement::to_doc).collect(),
            b: self.b.iter().map(TensorElement::to_doc).collect(),
        }
    }

    pub fn from_doc(doc: HermMatrixDoc) -> Result<Self, JordanError> {
        let metric = Metric::new(doc.metric)?;
        let to3 = |v: Vec<TensorElementDoc>| -> Result<[TensorElement; 3], JordanError> {
            let n = v.len();
            let els: Vec<TensorElement> = v
                .into_iter()
                .map(TensorElement::from_doc)
                .collect::<Result<_, _>>()?;
            els.try_into().map_err(|_| {
                BioctonionError::WrongLength {
                    expected: 3,
                    got: n,
                }
                .into()
            })
        };
        let diag = to3(doc.diag)?;
        let b = to3(doc.b)?;
        let alg = diag[0].algebra();
        HermMatrix3::new(alg, doc.conj, metric, diag, b)
    }

    /// The 3×3 layout with `σ` written as `'`.
    pub fn pretty(&self) -> String {
        let names = [
            ["d1", "b3", "b2'"],
            ["b3'", "d2", "b1"],
            ["b2", "b1'", "d3"],
        ];
        let mut out = String::new();
        for (i, row) in names.iter().enumerate() {
            let cells: Vec<String> = (0..3)
                .map(|j| format!("{:>4} = {}", row[j], fmt_element(&self.entry(i, j))))
                .collect();
            out.push_str(&cells.join("  |  "));
            out.push('\n');
        }
        out
    }
}

/// Compact `a + b e1 + ...` rendering with complex coefficients in parentheses.
pub fn fmt_element(x: &TensorElement) -> String {
    let mut terms = Vec::new();
    for (k, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coef = if c.im.is_zero() {
            c.re.to_string()
        } else {
            let u = if x.algebra().scalar == ScalarRing::SplitCs {
                "j"
            } else {
                "i"
            };
            let sign = if c.im.signum() < 0 { "-" } else { "+" };
            format!("({}{sign}{}{u})", c.re, c.im.abs())
        };
        terms.push(if k == 0 { coef } else { format!("{coef}e{k}") });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
