//! Veronese vectors over the bioctonions and the two planes they define.
//!
//! A triple `(b₁,b₂,b₃; λ₁,λ₂,λ₃)` is Veronese when
//! `λ₁ b₁' = b₂b₃`, `λ₂ b₂' = b₃b₁`, `λ₃ b₃' = b₁b₂` and
//! `n(b₁) = λ₂λ₃`, `n(b₂) = λ₃λ₁`, `n(b₃) = λ₁λ₂`, where `'` and `n` are the
//! octonionic conjugation and complex norm for [`Variant::ComplexHermitian`]
//! and the full conjugation and real norm for [`Variant::RealHermitian`].
//!
//! The bilinear form `β` pairs the octonion slots through the polar form of
//! the norm, `⟨a,b⟩ = n(a+b) − n(a) − n(b)`, which is the Jordan trace form
//! on the associated Hermitian matrices. With this normalization the affine
//! point `(x, sx+t)` lies on the line `[s,t]` identically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bioctonion::{
    BioctonionError, ConjugationKind, InnerKind, Scalar, ScalarRing, TensorAlgebra, TensorElement,
    TensorElementDoc,
};
use crate::linalg::{sparse_from_dense, Echelon, Gaussian, SparseRow};
use crate::random::RandomStream;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Complex rays, octonionic conjugation, complex norm.
    ComplexHermitian,
    /// Real rays, full conjugation, real norm.
    RealHermitian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneKind {
    pub variant: Variant,
    pub algebra: TensorAlgebra,
}

impl PlaneKind {
    pub const COMPLEXIFIED_CAYLEY: PlaneKind = PlaneKind {
        variant: Variant::ComplexHermitian,
        algebra: TensorAlgebra::BIOCTONIONS,
    };
    pub const ROSENFELD: PlaneKind = PlaneKind {
        variant: Variant::RealHermitian,
        algebra: TensorAlgebra::BIOCTONIONS,
    };

    pub fn new(variant: Variant, algebra: TensorAlgebra) -> Self {
        PlaneKind { variant, algebra }
    }

    pub fn conjugation(&self) -> ConjugationKind {
        match self.variant {
            Variant::ComplexHermitian => ConjugationKind::Octonionic,
            Variant::RealHermitian => ConjugationKind::Full,
        }
    }

    /// The norm `n` as a scalar-ring value (real for the Hermitian variant).
    pub fn norm(&self, b: &TensorElement) -> Scalar {
        match self.variant {
            Variant::ComplexHermitian => b.complex_norm(),
            Variant::RealHermitian => Scalar::real(self.algebra.scalar, b.real_norm_sq()),
        }
    }

    /// Polar form of the norm: `n(a+b) − n(a) − n(b)`.
    pub fn polar(&self, a: &TensorElement, b: &TensorElement) -> Scalar {
        let two = Rational::from_int(2);
        match self.variant {
            Variant::ComplexHermitian => a
                .inner(b, InnerKind::OctonionicBilinear)
                .expect("same algebra")
                .scale(&two),
            Variant::RealHermitian => {
                let h = a
                    .inner(b, InnerKind::HermitianSesquilinear)
                    .expect("same algebra");
                Scalar::real(self.algebra.scalar, h.re * two)
            }
        }
    }

    pub fn zero_scalar(&self) -> Scalar {
        Scalar::zero(self.algebra.scalar)
    }

    pub fn one_scalar(&self) -> Scalar {
        Scalar::one(self.algebra.scalar)
    }

    fn scalar_of(&self, r: i64) -> Scalar {
        Scalar::real(self.algebra.scalar, Rational::from_int(r))
    }
}

impl fmt::Display for PlaneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            Variant::ComplexHermitian => "complex",
            Variant::RealHermitian => "real",
        };
        write!(f, "{v}/{}", self.algebra)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VeroneseError {
    #[error("plane kinds differ ({0} vs {1})")]
    KindMismatch(PlaneKind, PlaneKind),
    #[error("unsupported for {kind}: {reason}")]
    Unsupported {
        kind: PlaneKind,
        reason: &'static str,
    },
    #[error("the zero vector does not define a point")]
    ZeroVector,
    #[error("the triple does not satisfy the Veronese conditions")]
    NotVeronese,
    #[error("real rays require real λ and real scaling factors")]
    ComplexScalarInRealPlane,
    #[error("no coordinate of the triple is invertible in the scalar ring")]
    NotCanonicalizable,
    #[error("polarity mismatch")]
    PolarityMismatch,
    #[error("tangent rank varies across generic samples: {0:?}")]
    NonGeneric(Vec<usize>),
    #[error(transparent)]
    Algebra(#[from] BioctonionError),
}

const AFFINE_REASON: &str =
    "the real norm is not multiplicative, so the affine chart is not Veronese";

/// `(b₁,b₂,b₃; λ₁,λ₂,λ₃)` together with its plane kind.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VeroneseTriple {
    pub kind: PlaneKind,
    pub b: [TensorElement; 3],
    pub lambda: [Scalar; 3],
}

impl fmt::Debug for VeroneseTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]({:?}, {:?}, {:?}; {:?}, {:?}, {:?})",
            self.kind,
            self.b[0],
            self.b[1],
            self.b[2],
            self.lambda[0],
            self.lambda[1],
            self.lambda[2]
        )
    }
}

impl VeroneseTriple {
    pub fn new(
        kind: PlaneKind,
        b: [TensorElement; 3],
        lambda: [Scalar; 3],
    ) -> Result<Self, VeroneseError> {
        for x in &b {
            if x.algebra() != kind.algebra {
                return Err(BioctonionError::AlgebraMismatch(x.algebra(), kind.algebra).into());
            }
        }
        for l in &lambda {
            if l.ring != kind.algebra.scalar {
                return Err(BioctonionError::RingMismatch(kind.algebra.scalar, l.ring).into());
            }
            if kind.variant == Variant::RealHermitian && !l.is_real() {
                return Err(VeroneseError::ComplexScalarInRealPlane);
            }
        }
        Ok(VeroneseTriple { kind, b, lambda })
    }

    pub fn zero(kind: PlaneKind) -> Self {
        let z = TensorElement::zero(kind.algebra);
        VeroneseTriple {
            kind,
            b: [z.clone(), z.clone(), z],
            lambda: [kind.zero_scalar(), kind.zero_scalar(), kind.zero_scalar()],
        }
    }

    /// Triple with zero octonion slots and integer `λ`.
    pub fn from_lambdas(kind: PlaneKind, l: [i64; 3]) -> Self {
        let mut v = VeroneseTriple::zero(kind);
        v.lambda = l.map(|x| kind.scalar_of(x));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(TensorElement::is_zero) && self.lambda.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, mu: &Scalar) -> Result<Self, VeroneseError> {
        if self.kind.variant == Variant::RealHermitian && !mu.is_real() {
            return Err(VeroneseError::ComplexScalarInRealPlane);
        }
        Ok(VeroneseTriple {
            kind: self.kind,
            b: self.b.clone().map(|x| x.scale(mu)),
            lambda: self.lambda.clone().map(|l| l.mul(mu)),
        })
    }

    fn add(&self, o: &Self) -> Self {
        VeroneseTriple {
            kind: self.kind,
            b: [
                self.b[0].add(&o.b[0]),
                self.b[1].add(&o.b[1]),
                self.b[2].add(&o.b[2]),
            ],
            lambda: [
                self.lambda[0].add(&o.lambda[0]),
                self.lambda[1].add(&o.lambda[1]),
                self.lambda[2].add(&o.lambda[2]),
            ],
        }
    }

    /// The residuals of the six conditions: three octonion-valued, three scalar.
    pub fn residuals(&self) -> ([TensorElement; 3], [Scalar; 3]) {
        let k = self.kind;
        let c = k.conjugation();
        let b = &self.b;
        let l = &self.lambda;
        let r1 = std::array::from_fn(|nu| {
            let (p, q) = ((nu + 1) % 3, (nu + 2) % 3);
            b[nu].conjugate(c).scale(&l[nu]).sub(&b[p].mul(&b[q]))
        });
        let r2 = std::array::from_fn(|nu| {
            let (p, q) = ((nu + 1) % 3, (nu + 2) % 3);
            k.norm(&b[nu]).sub(&l[p].mul(&l[q]))
        });
        (r1, r2)
    }

    /// Scalar coordinates in the fixed scan order `λ₁,λ₂,λ₃`, then the
    /// coefficients of `b₁,b₂,b₃` in unit order.
    fn scan(&self) -> impl Iterator<Item = &Scalar> {
        self.lambda
            .iter()
            .chain(self.b.iter().flat_map(|x| x.coords().iter()))
    }
}

/// Checks all six conditions exactly.
pub fn is_veronese(v: &VeroneseTriple) -> bool {
    let (r1, r2) = v.residuals();
    r1.iter().all(TensorElement::is_zero) && r2.iter().all(Scalar::is_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Elliptic,
    /// Flips the sign of the third summand.
    Hyperbolic,
}

/// `β(v,w) = Σ_ν (⟨b_ν, b'_ν⟩ + λ_ν λ'_ν)`, with the third summand negated for
/// the hyperbolic polarity.
pub fn pairing(
    v: &VeroneseTriple,
    w: &VeroneseTriple,
    polarity: Polarity,
) -> Result<Scalar, VeroneseError> {
    if v.kind != w.kind {
        return Err(VeroneseError::KindMismatch(v.kind, w.kind));
    }
    let k = v.kind;
    let mut acc = k.zero_scalar();
    for nu in 0..3 {
        let term = k
            .polar(&v.b[nu], &w.b[nu])
            .add(&v.lambda[nu].mul(&w.lambda[nu]));
        acc = if nu == 2 && polarity == Polarity::Hyperbolic {
            acc.sub(&term)
        } else {
            acc.add(&term)
        };
    }
    Ok(acc)
}

/// Scales `v` so that its first nonzero coordinate in scan order is 1.
///
/// Over the real variant the scan runs through real and imaginary parts; over
/// `Cs` the first invertible coordinate is used.
pub fn canonical_rep(v: &VeroneseTriple) -> Result<VeroneseTriple, VeroneseError> {
    if v.is_zero() {
        return Err(VeroneseError::ZeroVector);
    }
    let ring = v.kind.algebra.scalar;
    let mu = match v.kind.variant {
        Variant::RealHermitian => {
            let first = v
                .scan()
                .flat_map(|s| [&s.re, &s.im])
                .find(|r| !r.is_zero())
                .expect("nonzero triple");
            Scalar::real(ring, first.recip().expect("nonzero"))
        }
        Variant::ComplexHermitian => v
            .scan()
            .find_map(Scalar::inverse)
            .ok_or(VeroneseError::NotCanonicalizable)?,
    };
    v.scale(&mu)
}

/// A point: the ray of a nonzero Veronese vector, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    rep: VeroneseTriple,
}

impl ProjectivePoint {
    pub fn new(v: &VeroneseTriple) -> Result<Self, VeroneseError> {
        if v.is_zero() {
            return Err(VeroneseError::ZeroVector);
        }
        if !is_veronese(v) {
            return Err(VeroneseError::NotVeronese);
        }
        Ok(ProjectivePoint {
            rep: canonical_rep(v)?,
        })
    }

    pub fn rep(&self) -> &VeroneseTriple {
        &self.rep
    }

    pub fn kind(&self) -> PlaneKind {
        self.rep.kind
    }
}

/// A line `ω^⊥`, stored through its (canonical) polar point `ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    polar: VeroneseTriple,
    pub polarity: Polarity,
}

impl Line {
    pub fn new(polar: &VeroneseTriple, polarity: Polarity) -> Result<Self, VeroneseError> {
        Ok(Line {
            polar: ProjectivePoint::new(polar)?.rep,
            polarity,
        })
    }

    pub fn polar(&self) -> &VeroneseTriple {
        &self.polar
    }

    /// Membership of an arbitrary vector in `ω^⊥`.
    pub fn contains_vector(&self, v: &VeroneseTriple) -> Result<bool, VeroneseError> {
        Ok(pairing(v, &self.polar, self.polarity)?.is_zero())
    }
}

#[derive(Debug, Clone)]
pub enum AffineCase {
    Point(TensorElement, TensorElement),
    /// The point at infinity `(x)` of lines with slope `x`.
    SlopePoint(TensorElement),
    Infinity,
}

#[derive(Debug, Clone)]
pub enum LineCase {
    /// `[s,t] = {(x, sx+t)}`.
    Slope(TensorElement, TensorElement),
    /// `[c] = {c} × K⊗O`.
    Vertical(TensorElement),
    Infinity,
}

fn require_affine(kind: PlaneKind) -> Result<(), VeroneseError> {
    if kind.variant == Variant::RealHermitian {
        return Err(VeroneseError::Unsupported {
            kind,
            reason: AFFINE_REASON,
        });
    }
    Ok(())
}

/// The raw Veronese vector of an affine (or ideal) point.
pub fn affine_vector(kind: PlaneKind, case: &AffineCase) -> Result<VeroneseTriple, VeroneseError> {
    require_affine(kind)?;
    let z = TensorElement::zero(kind.algebra);
    let oc = ConjugationKind::Octonionic;
    let v = match case {
        AffineCase::Point(x, y) => VeroneseTriple::new(
            kind,
            [x.clone(), y.conjugate(oc), y.try_mul(&x.conjugate(oc))?],
            [kind.norm(y), kind.norm(x), kind.one_scalar()],
        )?,
        AffineCase::SlopePoint(x) => VeroneseTriple::new(
            kind,
            [z.clone(), z, x.clone()],
            [kind.norm(x), kind.one_scalar(), kind.zero_scalar()],
        )?,
        AffineCase::Infinity => VeroneseTriple::from_lambdas(kind, [1, 0, 0]),
    };
    Ok(v)
}

/// `(x,y) ↦ (x, y*, yx*; N(y), N(x), 1)`, `(x) ↦ (0,0,x; N(x),1,0)`, `(∞) ↦ (0,0,0;1,0,0)`.
pub fn affine_embed(kind: PlaneKind, case: &AffineCase) -> Result<ProjectivePoint, VeroneseError> {
    ProjectivePoint::new(&affine_vector(kind, case)?)
}

/// The polar vector of an affine (or ideal) line.
pub fn line_vector(kind: PlaneKind, case: &LineCase) -> Result<VeroneseTriple, VeroneseError> {
    require_affine(kind)?;
    let z = TensorElement::zero(kind.algebra);
    let oc = ConjugationKind::Octonionic;
    let v = match case {
        LineCase::Slope(s, t) => VeroneseTriple::new(
            kind,
            [s.conjugate(oc).try_mul(t)?, t.conjugate(oc).neg(), s.neg()],
            [kind.one_scalar(), kind.norm(s), kind.norm(t)],
        )?,
        LineCase::Vertical(c) => VeroneseTriple::new(
            kind,
            [c.neg(), z.clone(), z],
            [kind.zero_scalar(), kind.one_scalar(), kind.norm(c)],
        )?,
        LineCase::Infinity => VeroneseTriple::from_lambdas(kind, [0, 0, 1]),
    };
    Ok(v)
}

/// `[s,t] ↦ (s*t, −t*, −s; 1, N(s), N(t))^⊥`, `[c] ↦ (−c,0,0; 0,1,N(c))^⊥`, `[∞] ↦ (0,0,0;0,0,1)^⊥`.
pub fn line_embed(kind: PlaneKind, case: &LineCase) -> Result<Line, VeroneseError> {
    Line::new(&line_vector(kind, case)?, Polarity::Elliptic)
}

pub fn incident(p: &ProjectivePoint, l: &Line) -> Result<bool, VeroneseError> {
    l.contains_vector(&p.rep)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarObject {
    Point(ProjectivePoint),
    Line(Line),
}

/// `π(ω) = ω^⊥` and `π(ω^⊥) = ω`.
pub fn polar_map(x: &PolarObject, polarity: Polarity) -> Result<PolarObject, VeroneseError> {
    match x {
        PolarObject::Point(p) => Ok(PolarObject::Line(Line {
            polar: p.rep.clone(),
            polarity,
        })),
        PolarObject::Line(l) => {
            if l.polarity != polarity {
                return Err(VeroneseError::PolarityMismatch);
            }
            Ok(PolarObject::Point(ProjectivePoint {
                rep: l.polar.clone(),
            }))
        }
    }
}

/// Right-multiplication matrix `a ↦ a v` on real coordinates.
fn right_mul_rows(v: &TensorElement) -> Vec<Vec<Rational>> {
    let alg = v.algebra();
    let n = alg.real_dim();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            TensorElement::from_real_coords(alg, &e)
                .expect("basis")
                .mul(v)
                .real_coords()
        })
        .collect();
    (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect()
}

/// A nonzero `a` with `a v₁ = a v₂ = 0`, if any.
///
/// The conjugates `v₁*`, `v₂*` are tried first; otherwise the common left
/// annihilator is computed as an exact nullspace.
pub fn singularity(
    v1: &TensorElement,
    v2: &TensorElement,
) -> Result<Option<TensorElement>, VeroneseError> {
    let alg = v1.algebra();
    if v2.algebra() != alg {
        return Err(BioctonionError::AlgebraMismatch(alg, v2.algebra()).into());
    }
    let annihilates =
        |a: &TensorElement| !a.is_zero() && a.mul(v1).is_zero() && a.mul(v2).is_zero();
    for v in [v1, v2] {
        let c = v.conjugate(ConjugationKind::Octonionic);
        if annihilates(&c) {
            return Ok(Some(c));
        }
    }
    let n = alg.real_dim();
    let mut ech = Echelon::<Rational>::new(n);
    for m in [right_mul_rows(v1), right_mul_rows(v2)] {
        for row in m {
            ech.insert(sparse_from_dense(&row));
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .next()
        .map(|a| TensorElement::from_real_coords(alg, &a).expect("right length")))
}

#[derive(Debug, Clone, Serialize)]
pub struct AdjacencyDemo {
    pub point_a: (TensorElementDoc, TensorElementDoc),
    pub point_b: (TensorElementDoc, TensorElementDoc),
    pub annihilator: TensorElementDoc,
    pub slopes: Vec<TensorElementDoc>,
    pub points_distinct: bool,
    pub lines_distinct: bool,
    pub all_incident: bool,
}

impl AdjacencyDemo {
    pub fn passed(&self) -> bool {
        self.points_distinct && self.lines_distinct && self.all_incident && self.slopes.len() >= 2
    }
}

/// Two affine points `(0,0)` and `(v,0)` separated by the singular vector
/// `(v,0)`, `v = 1 + i e₁`, and three distinct lines `[k·a, 0]` through both,
/// where `a v = 0`.
pub fn adjacency_demo(alg: TensorAlgebra) -> Result<AdjacencyDemo, VeroneseError> {
    if alg.scalar == ScalarRing::RealR {
        return Err(VeroneseError::Unsupported {
            kind: PlaneKind::new(Variant::ComplexHermitian, alg),
            reason: "a real scalar ring gives a division algebra without adjacent points",
        });
    }
    let kind = PlaneKind::new(Variant::ComplexHermitian, alg);
    let zero = TensorElement::zero(alg);
    let v = TensorElement::one_plus_unit(alg, 1, 1);
    let a = singularity(&v, &zero)?.expect("v is isotropic");
    let p = affine_embed(kind, &AffineCase::Point(zero.clone(), zero.clone()))?;
    let q = affine_embed(kind, &AffineCase::Point(v.clone(), zero.clone()))?;
    let slopes: Vec<TensorElement> = (0..3)
        .map(|k| a.scale_rational(&Rational::from_int(k)))
        .collect();
    let lines = slopes
        .iter()
        .map(|s| line_embed(kind, &LineCase::Slope(s.clone(), zero.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all_incident = true;
    for l in &lines {
        all_incident &= incident(&p, l)? && incident(&q, l)?;
    }
    let lines_distinct =
        (0..lines.len()).all(|i| (i + 1..lines.len()).all(|j| lines[i] != lines[j]));
    Ok(AdjacencyDemo {
        point_a: (zero.to_doc(), zero.to_doc()),
        point_b: (v.to_doc(), zero.to_doc()),
        annihilator: a.to_doc(),
        slopes: slopes.iter().map(TensorElement::to_doc).collect(),
        points_distinct: p != q,
        lines_distinct,
        all_incident,
    })
}

/// Output of the Jacobian computation at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub kind: PlaneKind,
    /// Dimension of the ambient space over the ray field.
    pub ambient: usize,
    pub rank: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
    pub dim_plane: usize,
}

impl TangentReport {
    fn new(kind: PlaneKind, ambient: usize, rank: usize) -> Self {
        let dim_h = ambient - rank;
        TangentReport {
            kind,
            ambient,
            rank,
            dim_h,
            dim_plane: dim_h.saturating_sub(1),
        }
    }
}

/// Complex coordinates `(b₁, b₂, b₃, λ)`, 8+8+8+3 entries.
fn complex_coords(v: &VeroneseTriple) -> Vec<Scalar> {
    v.b.iter()
        .flat_map(|x| x.coords().iter().cloned())
        .chain(v.lambda.iter().cloned())
        .collect()
}

fn from_complex_coords(kind: PlaneKind, c: &[Scalar]) -> VeroneseTriple {
    let d = kind.algebra.table().dim;
    let b = std::array::from_fn(|nu| {
        TensorElement::new(kind.algebra, c[nu * d..(nu + 1) * d].to_vec()).expect("length")
    });
    let lambda = std::array::from_fn(|nu| c[3 * d + nu].clone());
    VeroneseTriple { kind, b, lambda }
}

/// Real coordinates `(b₁, b₂, b₃, λ)`, 16+16+16+3 entries.
fn real_coords(v: &VeroneseTriple) -> Vec<Rational> {
    v.b.iter()
        .flat_map(|x| x.real_coords())
        .chain(v.lambda.iter().map(|l| l.re.clone()))
        .collect()
}

fn from_real_coords(kind: PlaneKind, c: &[Rational]) -> VeroneseTriple {
    let d = kind.algebra.real_dim();
    let b = std::array::from_fn(|nu| {
        TensorElement::from_real_coords(kind.algebra, &c[nu * d..(nu + 1) * d]).expect("length")
    });
    let lambda = std::array::from_fn(|nu| Scalar::real(kind.algebra.scalar, c[3 * d + nu].clone()));
    VeroneseTriple { kind, b, lambda }
}

/// The defining map `F`, flattened in the coordinates matching the variant.
fn residual_vector_complex(v: &VeroneseTriple) -> Vec<Scalar> {
    let (r1, r2) = v.residuals();
    r1.iter()
        .flat_map(|x| x.coords().iter().cloned())
        .chain(r2)
        .collect()
}

fn residual_vector_real(v: &VeroneseTriple) -> Vec<Rational> {
    let (r1, r2) = v.residuals();
    r1.iter()
        .flat_map(|x| x.real_coords())
        .chain(r2.into_iter().map(|s| s.re))
        .collect()
}

/// Exact rank of the Jacobian of the six conditions at `v`.
///
/// `F` is homogeneous quadratic, so `DF_v(e) = F(v+e) − F(v) − F(e)` exactly.
/// The complex variant works over `Q(i)` in 27 complex coordinates; the real
/// variant over `Q` in 51 real coordinates.
pub fn tangent_rank(v: &VeroneseTriple) -> Result<TangentReport, VeroneseError> {
    if v.is_zero() {
        return Err(VeroneseError::ZeroVector);
    }
    if !is_veronese(v) {
        return Err(VeroneseError::NotVeronese);
    }
    let kind = v.kind;
    match kind.variant {
        Variant::ComplexHermitian => {
            if kind.algebra.scalar != ScalarRing::ComplexC {
                return Err(VeroneseError::Unsupported {
                    kind,
                    reason: "the complex Jacobian is computed over C only",
                });
            }
            let base = complex_coords(v);
            let n = base.len();
            let f_v = residual_vector_complex(v);
            let mut ech = Echelon::<Gaussian>::new(n);
            for j in 0..n {
                let mut e = vec![kind.zero_scalar(); n];
                e[j] = kind.one_scalar();
                let ev = from_complex_coords(kind, &e);
                let f_sum = residual_vector_complex(&v.add(&ev));
                let f_e = residual_vector_complex(&ev);
                let col: Vec<Gaussian> = (0..n)
                    .map(|i| {
                        let d = f_sum[i].sub(&f_v[i]).sub(&f_e[i]);
                        Gaussian::new(d.re, d.im)
                    })
                    .collect();
                ech.insert(sparse_from_dense(&col));
            }
            Ok(TangentReport::new(kind, n, ech.rank()))
        }
        Variant::RealHermitian => {
            let base = real_coords(v);
            let n = base.len();
            let f_v = residual_vector_real(v);
            let mut ech = Echelon::<Rational>::new(n);
            for j in 0..n {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let ev = from_real_coords(kind, &e);
                let f_sum = residual_vector_real(&v.add(&ev));
                let f_e = residual_vector_real(&ev);
                let col: SparseRow<Rational> = sparse_from_dense(
                    &(0..n)
                        .map(|i| &f_sum[i] - &f_v[i] - &f_e[i])
                        .collect::<Vec<_>>(),
                );
                ech.insert(col);
            }
            Ok(TangentReport::new(kind, n, ech.rank()))
        }
    }
}

/// A generic Veronese vector of the given kind.
///
/// Complex variant: the affine image of a random pair. Real variant: a
/// real-octonion point `(x, y*, yx*; N(y), N(x), 1)` with each `b_ν` rotated
/// by a unit complex phase `u_ν`, `u₁u₂u₃ = 1`. The phases are rational
/// points `((1−t²) + 2ti)/(1+t²)` of the unit circle.
pub fn generic_point(
    kind: PlaneKind,
    rng: &mut RandomStream,
) -> Result<VeroneseTriple, VeroneseError> {
    match kind.variant {
        Variant::ComplexHermitian => {
            let x = TensorElement::random(kind.algebra, rng);
            let y = TensorElement::random(kind.algebra, rng);
            affine_vector(kind, &AffineCase::Point(x, y))
        }
        Variant::RealHermitian => {
            if kind.algebra.scalar != ScalarRing::ComplexC {
                return Err(VeroneseError::Unsupported {
                    kind,
                    reason: "generic real points are generated over C only",
                });
            }
            let complex = PlaneKind::new(Variant::ComplexHermitian, kind.algebra);
            let x = TensorElement::random_real(kind.algebra, rng);
            let y = TensorElement::random_real(kind.algebra, rng);
            let base = affine_vector(complex, &AffineCase::Point(x, y))?;
            let u1 = unit_phase(rng.nonzero_rational());
            let u2 = unit_phase(rng.nonzero_rational());
            let u3 = u1.mul(&u2).conj();
            let u = [u1, u2, u3];
            let b = std::array::from_fn(|nu| base.b[nu].scale(&u[nu]));
            let v = VeroneseTriple::new(kind, b, base.lambda.clone())?;
            debug_assert!(is_veronese(&v));
            Ok(v)
        }
    }
}

fn unit_phase(t: Rational) -> Scalar {
    let one = Rational::one();
    let d = (&one + &t * &t).recip().expect("positive");
    Scalar::new(
        ScalarRing::ComplexC,
        (&one - &t * &t) * &d,
        Rational::from_int(2) * &t * &d,
    )
    .expect("complex")
}

/// Tangent ranks at `samples` independently seeded generic points.
#[derive(Debug, Clone, Serialize)]
pub struct TangentSurvey {
    pub kind: PlaneKind,
    pub ranks: Vec<usize>,
    pub constant: bool,
    pub report: TangentReport,
}

pub fn tangent_survey(
    kind: PlaneKind,
    samples: usize,
    seed: u64,
) -> Result<TangentSurvey, VeroneseError> {
    assert!(samples > 0, "survey needs at least one sample");
    let mut ranks = Vec::with_capacity(samples);
    let mut first = None;
    for i in 0..samples {
        let mut rng = RandomStream::derive(seed.wrapping_add(i as u64), "tangent");
        let v = generic_point(kind, &mut rng)?;
        let r = tangent_rank(&v)?;
        ranks.push(r.rank);
        first.get_or_insert(r);
    }
    let constant = ranks.windows(2).all(|w| w[0] == w[1]);
    Ok(TangentSurvey {
        kind,
        constant,
        ranks,
        report: first.expect("at least one sample"),
    })
}

/// JSON form: `{"kind":"complex","b":[...],"lambda":[...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDoc {
    pub kind: String,
    pub b: Vec<TensorElementDoc>,
    pub lambda: Vec<LambdaDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaDoc {
    Pair(Rational, Rational),
    Real(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleDocError {
    #[error("kind must be \"complex\" or \"real\", got {0:?}")]
    Kind(String),
    #[error("expected 3 entries in {0}, got {1}")]
    Arity(&'static str, usize),
    #[error(transparent)]
    Veronese(#[from] VeroneseError),
    #[error(transparent)]
    Algebra(#[from] BioctonionError),
}

impl VeroneseTriple {
    pub fn to_doc(&self) -> TripleDoc {
        let real = self.kind.variant == Variant::RealHermitian;
        TripleDoc {
            kind: if real { "real" } else { "complex" }.to_string(),
            b: self.b.iter().map(TensorElement::to_doc).collect(),
            lambda: self
                .lambda
                .iter()
                .map(|l| {
                    if real {
                        LambdaDoc::Real(l.re.clone())
                    } else {
                        LambdaDoc::Pair(l.re.clone(), l.im.clone())
                    }
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: TripleDoc) -> Result<Self, TripleDocError> {
        let variant = match doc.kind.as_str() {
            "complex" => Variant::ComplexHermitian,
            "real" => Variant::RealHermitian,
            _ => return Err(TripleDocError::Kind(doc.kind)),
        };
        if doc.b.len() != 3 {
            return Err(TripleDocError::Arity("b", doc.b.len()));
        }
        if doc.lambda.len() != 3 {
            return Err(TripleDocError::Arity("lambda", doc.lambda.len()));
        }
        let b: Vec<TensorElement> = doc
            .b
            .into_iter()
            .map(TensorElement::from_doc)
            .collect::<Result<_, _>>()?;
        let alg = b[0].algebra();
        let lambda: Vec<Scalar> = doc
            .lambda
            .into_iter()
            .map(|l| match l {
                LambdaDoc::Pair(re, im) => Scalar::new(alg.scalar, re, im),
                LambdaDoc::Real(re) => Ok(Scalar::real(alg.scalar, re)),
            })
            .collect::<Result<_, _>>()?;
        let b: [TensorElement; 3] = b.try_into().expect("length checked");
        let lambda: [Scalar; 3] = lambda.try_into().expect("length checked");
        Ok(VeroneseTriple::new(
            PlaneKind::new(variant, alg),
            b,
            lambda,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CK: PlaneKind = PlaneKind::COMPLEXIFIED_CAYLEY;
    const RK: PlaneKind = PlaneKind::ROSENFELD;
    const CO: TensorAlgebra = TensorAlgebra::BIOCTONIONS;

    fn isotropic_triple(kind: PlaneKind) -> VeroneseTriple {
        let mut v = VeroneseTriple::zero(kind);
        v.b[0] = TensorElement::one_plus_unit(CO, 1, 1);
        v
    }

    #[test]
    fn infinity_is_veronese_in_both_kinds() {
        for k in [CK, RK] {
            assert!(is_veronese(&VeroneseTriple::from_lambdas(k, [1, 0, 0])));
        }
    }

    #[test]
    fn isotropic_triple_separates_the_kinds() {
        assert!(is_veronese(&isotropic_triple(CK)));
        assert!(!is_veronese(&isotropic_triple(RK)));
    }

    #[test]
    fn affine_embedding_special_values() {
        let z = TensorElement::zero(CO);
        let p = affine_embed(CK, &AffineCase::Point(z.clone(), z.clone())).unwrap();
        assert_eq!(p.rep(), &VeroneseTriple::from_lambdas(CK, [0, 0, 1]));
        let inf = affine_embed(CK, &AffineCase::Infinity).unwrap();
        assert_eq!(inf.rep(), &VeroneseTriple::from_lambdas(CK, [1, 0, 0]));
        assert!(matches!(
            affine_embed(RK, &AffineCase::Infinity),
            Err(VeroneseError::Unsupported { .. })
        ));
    }

    #[test]
    fn affine_points_are_veronese() {
        let mut rng = RandomStream::new(10);
        for _ in 0..100 {
            let x = TensorElement::random(CO, &mut rng);
            let y = TensorElement::random(CO, &mut rng);
            assert!(is_veronese(
                &affine_vector(CK, &AffineCase::Point(x.clone(), y)).unwrap()
            ));
            assert!(is_veronese(
                &affine_vector(CK, &AffineCase::SlopePoint(x)).unwrap()
            ));
        }
    }

    #[test]
    fn line_embedding_special_values() {
        let z = TensorElement::zero(CO);
        assert_eq!(
            line_embed(CK, &LineCase::Infinity).unwrap().polar(),
            &VeroneseTriple::from_lambdas(CK, [0, 0, 1])
        );
        assert_eq!(
            line_embed(CK, &LineCase::Vertical(z.clone()))
                .unwrap()
                .polar(),
            &VeroneseTriple::from_lambdas(CK, [0, 1, 0])
        );
        assert_eq!(
            line_embed(CK, &LineCase::Slope(z.clone(), z))
                .unwrap()
                .polar(),
            &VeroneseTriple::from_lambdas(CK, [1, 0, 0])
        );
    }

    #[test]
    fn pairing_examples() {
        let inf = VeroneseTriple::from_lambdas(CK, [1, 0, 0]);
        let top = VeroneseTriple::from_lambdas(CK, [0, 0, 1]);
        assert!(pairing(&inf, &top, Polarity::Elliptic).unwrap().is_zero());
        assert_eq!(
            pairing(&inf, &inf, Polarity::Elliptic).unwrap(),
            Scalar::one(ScalarRing::ComplexC)
        );
        assert_eq!(
            pairing(&top, &top, Polarity::Hyperbolic).unwrap(),
            Scalar::from_ints(ScalarRing::ComplexC, -1, 0)
        );
        assert!(matches!(
            pairing(
                &inf,
                &VeroneseTriple::from_lambdas(RK, [1, 0, 0]),
                Polarity::Elliptic
            ),
            Err(VeroneseError::KindMismatch(..))
        ));
        let p = affine_embed(CK, &AffineCase::Infinity).unwrap();
        assert!(incident(&p, &line_embed(CK, &LineCase::Infinity).unwrap()).unwrap());
    }

    #[test]
    fn incidence_identity() {
        let mut rng = RandomStream::new(11);
        for _ in 0..60 {
            let x = TensorElement::random(CO, &mut rng);
            let s = TensorElement::random(CO, &mut rng);
            let t = TensorElement::random(CO, &mut rng);
            let y = s.mul(&x).add(&t);
            let p = affine_embed(CK, &AffineCase::Point(x.clone(), y.clone())).unwrap();
            let l = line_embed(CK, &LineCase::Slope(s.clone(), t.clone())).unwrap();
            assert!(incident(&p, &l).unwrap());
            let off = y.add(&TensorElement::one(CO));
            let q = affine_embed(CK, &AffineCase::Point(x.clone(), off)).unwrap();
            assert!(!incident(&q, &l).unwrap());
            let vertical = line_embed(CK, &LineCase::Vertical(x.clone())).unwrap();
            assert!(incident(&p, &vertical).unwrap());
            let slope_pt = affine_embed(CK, &AffineCase::SlopePoint(s.clone())).unwrap();
            assert!(incident(&slope_pt, &l).unwrap());
        }
    }

    #[test]
    fn canonical_rep_examples() {
        let v = VeroneseTriple::from_lambdas(CK, [2, 0, 0]);
        assert_eq!(
            canonical_rep(&v).unwrap(),
            VeroneseTriple::from_lambdas(CK, [1, 0, 0])
        );
        let v = VeroneseTriple::from_lambdas(RK, [0, 0, 5]);
        assert_eq!(
            canonical_rep(&v).unwrap(),
            VeroneseTriple::from_lambdas(RK, [0, 0, 1])
        );
        assert_eq!(
            canonical_rep(&VeroneseTriple::zero(CK)),
            Err(VeroneseError::ZeroVector)
        );
        let iso = canonical_rep(
            &isotropic_triple(CK)
                .scale(&Scalar::from_ints(ScalarRing::ComplexC, 3, 4))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(iso, isotropic_triple(CK));
    }

    #[test]
    fn polar_map_is_involutive() {
        let mut rng = RandomStream::new(12);
        for _ in 0..20 {
            let x = TensorElement::random(CO, &mut rng);
            let y = TensorElement::random(CO, &mut rng);
            let p = PolarObject::Point(affine_embed(CK, &AffineCase::Point(x, y)).unwrap());
            for pol in [Polarity::Elliptic, Polarity::Hyperbolic] {
                let l = polar_map(&p, pol).unwrap();
                assert!(matches!(l, PolarObject::Line(_)));
                assert_eq!(polar_map(&l, pol).unwrap(), p);
            }
        }
    }

    #[test]
    fn singularity_examples() {
        let v = TensorElement::one_plus_unit(CO, 1, 1);
        let a = singularity(&v, &TensorElement::zero(CO)).unwrap().unwrap();
        assert_eq!(a, TensorElement::one_plus_unit(CO, 1, -1));
        assert!(
            singularity(&TensorElement::one(CO), &TensorElement::basis_unit(CO, 2))
                .unwrap()
                .is_none()
        );
        // two isotropic elements whose conjugates fail: the nullspace path
        let w = TensorElement::one_plus_unit(CO, 2, 1);
        if let Some(a) = singularity(&v, &w).unwrap() {
            assert!(a.mul(&v).is_zero() && a.mul(&w).is_zero() && !a.is_zero());
        }
    }

    #[test]
    fn adjacency() {
        let d = adjacency_demo(CO).unwrap();
        assert!(d.passed(), "{d:?}");
    }

    #[test]
    fn complex_tangent_rank() {
        let mut rng = RandomStream::new(13);
        let v = generic_point(CK, &mut rng).unwrap();
        let r = tangent_rank(&v).unwrap();
        assert_eq!((r.ambient, r.rank, r.dim_h, r.dim_plane), (27, 10, 17, 16));
        assert_eq!(
            tangent_rank(&VeroneseTriple::zero(CK)),
            Err(VeroneseError::ZeroVector)
        );
    }

    #[test]
    fn real_generic_points_are_veronese() {
        let mut rng = RandomStream::new(14);
        for _ in 0..20 {
            let v = generic_point(RK, &mut rng).unwrap();
            assert!(is_veronese(&v));
            assert!(v.lambda.iter().all(|l| !l.is_zero()) || v.b.iter().any(|b| b.is_zero()));
            assert!(is_veronese(
                &v.scale(&Scalar::from_ints(ScalarRing::ComplexC, -3, 0))
                    .unwrap()
            ));
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = RandomStream::new(15);
        let v = generic_point(CK, &mut rng).unwrap();
        let s = serde_json::to_string(&v.to_doc()).unwrap();
        assert!(s.starts_with("{\"kind\":\"complex\",\"b\":["));
        assert_eq!(
            VeroneseTriple::from_doc(serde_json::from_str(&s).unwrap()).unwrap(),
            v
        );
        let w = generic_point(RK, &mut rng).unwrap();
        let s = serde_json::to_string(&w.to_doc()).unwrap();
        assert_eq!(
            VeroneseTriple::from_doc(serde_json::from_str(&s).unwrap()).unwrap(),
            w
        );
        let bad = s.replace("\"real\"", "\"quaternionic\"");
        assert!(VeroneseTriple::from_doc(serde_json::from_str(&bad).unwrap()).is_err());
    }
}
