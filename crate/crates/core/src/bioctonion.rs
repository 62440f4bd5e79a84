//! Tensor algebras `K ⊗ O` and `K ⊗ Os` for `K ∈ {R, C, Cs}`.
//!
//! An element is stored in its complex decomposition `b = Σ z^α e_α` with
//! `z^α = x^α + i y^α`; the real view `(x^α, y^α)` is available through
//! [`TensorElement::real_coords`]. The scalar unit commutes with the octonion
//! units, so products are computed from the octonion table with scalar-ring
//! coefficients.
//!
//! Two involutions are provided. The octonionic one negates the imaginary
//! units only and is central (`b b* ∈ K·1`); the full one additionally
//! conjugates every scalar coefficient and is not central.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{standard_table, AlgElement, AlgebraError, AlgebraName, CompositionTable};
use crate::identities::{AlgebraElement, MulLike};
use crate::random::RandomStream;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum ScalarRing {
    #[serde(rename = "R")]
    RealR,
    #[serde(rename = "C")]
    ComplexC,
    #[serde(rename = "Cs")]
    SplitCs,
}

impl ScalarRing {
    /// The value of `i²` (0 marks the real ring, where `im` stays zero).
    pub fn unit_square(self) -> i64 {
        match self {
            ScalarRing::RealR => 0,
            ScalarRing::ComplexC => -1,
            ScalarRing::SplitCs => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ScalarRing::RealR => "R",
            ScalarRing::ComplexC => "C",
            ScalarRing::SplitCs => "Cs",
        }
    }
}

impl FromStr for ScalarRing {
    type Err = BioctonionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(ScalarRing::RealR),
            "C" | "c" => Ok(ScalarRing::ComplexC),
            "Cs" | "cs" | "CS" => Ok(ScalarRing::SplitCs),
            _ => Err(BioctonionError::UnknownScalarRing(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BioctonionError {
    #[error("operands live in different tensor algebras ({0} vs {1})")]
    AlgebraMismatch(TensorAlgebra, TensorAlgebra),
    #[error("scalar ring mismatch ({0:?} vs {1:?})")]
    RingMismatch(ScalarRing, ScalarRing),
    #[error("the zero element has no zero-divisor witness")]
    ZeroElement,
    #[error("unknown scalar ring {0:?}")]
    UnknownScalarRing(String),
    #[error("octonion factor must be O or Os, got {0}")]
    NotAnOctonionTable(AlgebraName),
    #[error("real scalar ring requires zero imaginary parts")]
    ImaginaryInRealRing,
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An element `re + im·u` of a scalar ring, with `u² = ring.unit_square()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub ring: ScalarRing,
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(ring: ScalarRing, re: Rational, im: Rational) -> Result<Self, BioctonionError> {
        if ring == ScalarRing::RealR && !im.is_zero() {
            return Err(BioctonionError::ImaginaryInRealRing);
        }
        Ok(Scalar { ring, re, im })
    }

    pub fn real(ring: ScalarRing, re: Rational) -> Self {
        Scalar {
            ring,
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero(ring: ScalarRing) -> Self {
        Scalar::real(ring, Rational::zero())
    }

    pub fn one(ring: ScalarRing) -> Self {
        Scalar::real(ring, Rational::one())
    }

    /// The imaginary (or split) unit; panics for the real ring.
    pub fn unit(ring: ScalarRing) -> Self {
        assert!(
            ring != ScalarRing::RealR,
            "the real ring has no imaginary unit"
        );
        Scalar {
            ring,
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_ints(ring: ScalarRing, re: i64, im: i64) -> Self {
        Scalar::new(ring, Rational::from_int(re), Rational::from_int(im)).expect("valid scalar")
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn check(&self, o: &Scalar) {
        assert_eq!(self.ring, o.ring, "scalar ring mismatch");
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        self.check(o);
        Scalar {
            ring: self.ring,
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.check(o);
        Scalar {
            ring: self.ring,
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        self.check(o);
        let s = self.ring.unit_square();
        let mut re = &self.re * &o.re;
        if s != 0 {
            let t = &self.im * &o.im;
            if s < 0 {
                re -= t;
            } else {
                re += t;
            }
        }
        let im = if s == 0 {
            Rational::zero()
        } else {
            &self.re * &o.im + &self.im * &o.re
        };
        Scalar {
            ring: self.ring,
            re,
            im,
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            ring: self.ring,
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar {
            ring: self.ring,
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// `u ↦ -u`: complex conjugation for C, the split involution for Cs.
    pub fn conj(&self) -> Scalar {
        Scalar {
            ring: self.ring,
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `z · conj(z)`, a rational (indefinite for Cs).
    pub fn modulus_sq(&self) -> Rational {
        let s = self.ring.unit_square();
        &self.re * &self.re - Rational::from_int(s) * (&self.im * &self.im)
    }

    pub fn inverse(&self) -> Option<Scalar> {
        let m = self.modulus_sq().recip()?;
        Some(self.conj().scale(&m))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring {
            ScalarRing::RealR => write!(f, "{}", self.re),
            ScalarRing::ComplexC => write!(f, "({} + {}i)", self.re, self.im),
            ScalarRing::SplitCs => write!(f, "({} + {}j)", self.re, self.im),
        }
    }
}

impl MulLike for Scalar {
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// `K ⊗ O` or `K ⊗ Os`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorAlgebra {
    pub scalar: ScalarRing,
    pub oct: AlgebraName,
}

impl TensorAlgebra {
    pub fn new(scalar: ScalarRing, oct: AlgebraName) -> Result<Self, BioctonionError> {
        if !matches!(oct, AlgebraName::O | AlgebraName::Os) {
            return Err(BioctonionError::NotAnOctonionTable(oct));
        }
        Ok(TensorAlgebra { scalar, oct })
    }

    /// Any composition table as the second factor; used for the small
    /// Jordan carriers `J₃(R)`, `J₃(C)`, `J₃(H)`.
    pub fn with_table(scalar: ScalarRing, oct: AlgebraName) -> Self {
        TensorAlgebra { scalar, oct }
    }

    pub const BIOCTONIONS: TensorAlgebra = TensorAlgebra {
        scalar: ScalarRing::ComplexC,
        oct: AlgebraName::O,
    };
    pub const BIOCTONIONS_SPLIT: TensorAlgebra = TensorAlgebra {
        scalar: ScalarRing::ComplexC,
        oct: AlgebraName::Os,
    };
    pub const OCTONIONS: TensorAlgebra = TensorAlgebra {
        scalar: ScalarRing::RealR,
        oct: AlgebraName::O,
    };
    pub const SPLIT_OCTONIONS: TensorAlgebra = TensorAlgebra {
        scalar: ScalarRing::RealR,
        oct: AlgebraName::Os,
    };

    pub fn all() -> Vec<TensorAlgebra> {
        let mut out = Vec::new();
        for scalar in [ScalarRing::RealR, ScalarRing::ComplexC, ScalarRing::SplitCs] {
            for oct in [AlgebraName::O, AlgebraName::Os] {
                out.push(TensorAlgebra { scalar, oct });
            }
        }
        out
    }

    pub fn table(&self) -> &'static CompositionTable {
        standard_table(self.oct)
    }

    /// Real dimension: the table dimension, doubled for a non-real scalar ring.
    pub fn real_dim(&self) -> usize {
        let d = self.table().dim;
        if self.scalar == ScalarRing::RealR {
            d
        } else {
            2 * d
        }
    }

    pub fn label(&self) -> String {
        match self.scalar {
            ScalarRing::RealR => self.oct.to_string(),
            s => format!("{}x{}", s.as_str(), self.oct),
        }
    }
}

impl fmt::Display for TensorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for TensorAlgebra {
    type Err = BioctonionError;
    /// Accepts `O`, `Os`, `CxO`, `CxOs`, `CsxO`, `CsxOs` (case-insensitive `x`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let (scalar, oct) = match lower.split_once('x') {
            Some((k, o)) => (k.parse::<ScalarRing>()?, o),
            None => (ScalarRing::RealR, lower.as_str()),
        };
        let oct = match oct {
            "o" => AlgebraName::O,
            "os" => AlgebraName::Os,
            _ => {
                return Err(BioctonionError::Algebra(AlgebraError::UnknownAlgebra(
                    s.to_string(),
                )))
            }
        };
        TensorAlgebra::new(scalar, oct)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjugationKind {
    /// Negates the octonion units only.
    Octonionic,
    /// Octonionic conjugation composed with conjugation of the scalars.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormKind {
    /// `N(b) = b b*`, scalar-ring valued.
    ComplexN,
    /// `‖b‖²`, the scalar part of `b b̄*`, rational valued.
    RealSq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InnerKind {
    OctonionicBilinear,
    HermitianSesquilinear,
}

/// An element `Σ z^α e_α` of a [`TensorAlgebra`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    alg: TensorAlgebra,
    z: Vec<Scalar>,
}

impl TensorElement {
    pub fn new(alg: TensorAlgebra, z: Vec<Scalar>) -> Result<Self, BioctonionError> {
        let dim = alg.table().dim;
        if z.len() != dim {
            return Err(BioctonionError::WrongLength {
                expected: dim,
                got: z.len(),
            });
        }
        if let Some(s) = z.iter().find(|s| s.ring != alg.scalar) {
            return Err(BioctonionError::RingMismatch(alg.scalar, s.ring));
        }
        Ok(TensorElement { alg, z })
    }

    pub fn zero(alg: TensorAlgebra) -> Self {
        TensorElement {
            alg,
            z: vec![Scalar::zero(alg.scalar); alg.table().dim],
        }
    }

    pub fn one(alg: TensorAlgebra) -> Self {
        TensorElement::scalar(alg, Scalar::one(alg.scalar))
    }

    pub fn scalar(alg: TensorAlgebra, s: Scalar) -> Self {
        let mut e = TensorElement::zero(alg);
        e.z[0] = s;
        e
    }

    /// `c · e_k` with a scalar-ring coefficient.
    pub fn unit(alg: TensorAlgebra, k: usize, c: Scalar) -> Self {
        let mut e = TensorElement::zero(alg);
        e.z[k] = c;
        e
    }

    pub fn basis_unit(alg: TensorAlgebra, k: usize) -> Self {
        TensorElement::unit(alg, k, Scalar::one(alg.scalar))
    }

    /// `1 + u·e_k` with `u` the imaginary unit of the scalar ring.
    pub fn one_plus_unit(alg: TensorAlgebra, k: usize, sign: i64) -> Self {
        let mut e = TensorElement::one(alg);
        e.z[k] = Scalar::unit(alg.scalar).scale(&Rational::from_int(sign));
        e
    }

    pub fn from_octonion(alg: TensorAlgebra, x: &AlgElement) -> Result<Self, BioctonionError> {
        if x.name() != alg.oct {
            return Err(BioctonionError::Algebra(AlgebraError::TableMismatch(
                x.name(),
                alg.oct,
            )));
        }
        Ok(TensorElement {
            alg,
            z: x.coeffs()
                .iter()
                .map(|c| Scalar::real(alg.scalar, c.clone()))
                .collect(),
        })
    }

    /// Builds `Σ (x^α + u y^α) e_α`.
    pub fn from_parts(
        alg: TensorAlgebra,
        x: &[Rational],
        y: &[Rational],
    ) -> Result<Self, BioctonionError> {
        let z = x
            .iter()
            .zip(y)
            .map(|(a, b)| Scalar::new(alg.scalar, a.clone(), b.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        TensorElement::new(alg, z)
    }

    pub fn random(alg: TensorAlgebra, rng: &mut RandomStream) -> Self {
        let dim = alg.table().dim;
        let z = (0..dim)
            .map(|_| {
                let re = rng.rational();
                let im = if alg.scalar == ScalarRing::RealR {
                    Rational::zero()
                } else {
                    rng.rational()
                };
                Scalar {
                    ring: alg.scalar,
                    re,
                    im,
                }
            })
            .collect();
        TensorElement { alg, z }
    }

    /// Random element with all imaginary parts zero.
    pub fn random_real(alg: TensorAlgebra, rng: &mut RandomStream) -> Self {
        let z = (0..alg.table().dim)
            .map(|_| Scalar::real(alg.scalar, rng.rational()))
            .collect();
        TensorElement { alg, z }
    }

    pub fn algebra(&self) -> TensorAlgebra {
        self.alg
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.z
    }

    pub fn coord(&self, k: usize) -> &Scalar {
        &self.z[k]
    }

    /// The `R^16` view `(x^0..x^7, y^0..y^7)` (just `x` for a real ring).
    pub fn real_coords(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.z.iter().map(|s| s.re.clone()).collect();
        if self.alg.scalar != ScalarRing::RealR {
            out.extend(self.z.iter().map(|s| s.im.clone()));
        }
        out
    }

    pub fn from_real_coords(alg: TensorAlgebra, v: &[Rational]) -> Result<Self, BioctonionError> {
        let dim = alg.table().dim;
        if v.len() != alg.real_dim() {
            return Err(BioctonionError::WrongLength {
                expected: alg.real_dim(),
                got: v.len(),
            });
        }
        if alg.scalar == ScalarRing::RealR {
            return TensorElement::new(
                alg,
                v.iter()
                    .map(|r| Scalar::real(alg.scalar, r.clone()))
                    .collect(),
            );
        }
        TensorElement::from_parts(alg, &v[..dim], &v[dim..])
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(Scalar::is_zero)
    }

    fn check(&self, o: &Self) -> Result<(), BioctonionError> {
        if self.alg != o.alg {
            Err(BioctonionError::AlgebraMismatch(self.alg, o.alg))
        } else {
            Ok(())
        }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, BioctonionError> {
        self.check(o)?;
        let t = self.alg.table();
        let mut out = vec![Scalar::zero(self.alg.scalar); t.dim];
        for (i, a) in self.z.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.z.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = t.product(i, j);
                let v = a.mul(b);
                out[p.index] = if p.sign > 0 {
                    out[p.index].add(&v)
                } else {
                    out[p.index].sub(&v)
                };
            }
        }
        Ok(TensorElement {
            alg: self.alg,
            z: out,
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, BioctonionError> {
        self.check(o)?;
        Ok(TensorElement {
            alg: self.alg,
            z: self.z.iter().zip(&o.z).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, BioctonionError> {
        self.check(o)?;
        Ok(TensorElement {
            alg: self.alg,
            z: self.z.iter().zip(&o.z).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    /// Panicking product for use inside a single algebra.
    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("same tensor algebra")
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("same tensor algebra")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("same tensor algebra")
    }

    pub fn neg(&self) -> Self {
        TensorElement {
            alg: self.alg,
            z: self.z.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        TensorElement {
            alg: self.alg,
            z: self.z.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        TensorElement {
            alg: self.alg,
            z: self.z.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn conjugate(&self, kind: ConjugationKind) -> Self {
        let z = self
            .z
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let c = if kind == ConjugationKind::Full {
                    c.conj()
                } else {
                    c.clone()
                };
                if k == 0 {
                    c
                } else {
                    c.neg()
                }
            })
            .collect();
        TensorElement { alg: self.alg, z }
    }

    /// The `e_0` coefficient.
    pub fn scalar_part(&self) -> &Scalar {
        &self.z[0]
    }

    /// True when the element is a scalar multiple of the unit.
    pub fn is_scalar(&self) -> bool {
        self.z[1..].iter().all(Scalar::is_zero)
    }

    /// `Σ n_α (z^α)²` with `n_α` the diagonal of the octonion norm form.
    pub fn complex_norm(&self) -> Scalar {
        let diag = self.alg.table().norm_diagonal();
        self.z
            .iter()
            .zip(diag)
            .fold(Scalar::zero(self.alg.scalar), |acc, (c, n)| {
                let sq = c.mul(c);
                if n > 0 {
                    acc.add(&sq)
                } else {
                    acc.sub(&sq)
                }
            })
    }

    /// `Σ n_α |z^α|²`.
    pub fn real_norm_sq(&self) -> Rational {
        let diag = self.alg.table().norm_diagonal();
        self.z
            .iter()
            .zip(diag)
            .map(|(c, n)| c.modulus_sq() * Rational::from_int(n as i64))
            .sum()
    }

    pub fn norm(&self, kind: NormKind) -> Scalar {
        match kind {
            NormKind::ComplexN => self.complex_norm(),
            NormKind::RealSq => Scalar::real(self.alg.scalar, self.real_norm_sq()),
        }
    }

    pub fn inner(&self, o: &Self, kind: InnerKind) -> Result<Scalar, BioctonionError> {
        self.check(o)?;
        let diag = self.alg.table().norm_diagonal();
        Ok(self.z.iter().zip(&o.z).zip(diag).fold(
            Scalar::zero(self.alg.scalar),
            |acc, ((a, b), n)| {
                let a = if kind == InnerKind::HermitianSesquilinear {
                    a.conj()
                } else {
                    a.clone()
                };
                let p = a.mul(b);
                if n > 0 {
                    acc.add(&p)
                } else {
                    acc.sub(&p)
                }
            },
        ))
    }

    /// `b* / N(b)` when `N(b)` is invertible in the scalar ring.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.complex_norm().inverse()?;
        Some(self.conjugate(ConjugationKind::Octonionic).scale(&n))
    }

    /// Matrix of left multiplication `c ↦ b c` on the real coordinates.
    pub fn left_mul_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.alg.real_dim();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|k| {
                let mut e = vec![Rational::zero(); n];
                e[k] = Rational::one();
                let u = TensorElement::from_real_coords(self.alg, &e).expect("basis vector");
                self.mul(&u).real_coords()
            })
            .collect();
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
            .collect()
    }

    /// `b ↦ c` with `b c = 0`, `c ≠ 0`, whenever `N(b) = 0`.
    ///
    /// The witness is always the octonionic conjugate, since `b b* = N(b)`.
    pub fn zero_divisor_witness(&self) -> Result<Option<TensorElement>, BioctonionError> {
        if self.is_zero() {
            return Err(BioctonionError::ZeroElement);
        }
        if self.complex_norm().is_zero() {
            Ok(Some(self.conjugate(ConjugationKind::Octonionic)))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.alg, self.z)
    }
}

impl AlgebraElement for TensorElement {
    fn product(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn is_zero(&self) -> bool {
        TensorElement::is_zero(self)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("serializable")
    }
}

/// JSON document: `{"scalar":"C","oct":"O","z":[["1","0"],...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorElementDoc {
    pub scalar: ScalarRing,
    pub oct: AlgebraName,
    pub z: Vec<(Rational, Rational)>,
}

impl TensorElement {
    pub fn to_doc(&self) -> TensorElementDoc {
        TensorElementDoc {
            scalar: self.alg.scalar,
            oct: self.alg.oct,
            z: self
                .z
                .iter()
                .map(|s| (s.re.clone(), s.im.clone()))
                .collect(),
        }
    }

    pub fn from_doc(doc: TensorElementDoc) -> Result<Self, BioctonionError> {
        let alg = TensorAlgebra::new(doc.scalar, doc.oct)?;
        let z = doc
            .z
            .into_iter()
            .map(|(re, im)| Scalar::new(alg.scalar, re, im))
            .collect::<Result<Vec<_>, _>>()?;
        TensorElement::new(alg, z)
    }
}

/// Evaluation of `lhs = ‖ab‖` vs `rhs = ‖a‖‖b‖` (in the chosen norm) at one pair.
#[derive(Debug, Clone, Serialize)]
pub struct CompositionWitness {
    pub a: TensorElementDoc,
    pub b: TensorElementDoc,
    pub norm_of_product: (Rational, Rational),
    pub product_of_norms: (Rational, Rational),
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionReport {
    pub algebra: String,
    pub norm: NormKind,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub counterexample: Option<CompositionWitness>,
    /// The pair `1 ± u e_1`, evaluated for every algebra with a non-real scalar ring.
    pub canonical_pair: Option<CompositionWitness>,
}

fn witness(a: &TensorElement, b: &TensorElement, kind: NormKind) -> (bool, CompositionWitness) {
    let lhs = a.mul(b).norm(kind);
    let rhs = a.norm(kind).mul(&b.norm(kind));
    (
        lhs == rhs,
        CompositionWitness {
            a: a.to_doc(),
            b: b.to_doc(),
            norm_of_product: (lhs.re, lhs.im),
            product_of_norms: (rhs.re, rhs.im),
        },
    )
}

/// Tests `‖ab‖ = ‖a‖‖b‖` on seeded random pairs.
pub fn composition_check(
    alg: TensorAlgebra,
    kind: NormKind,
    samples: usize,
    seed: u64,
) -> CompositionReport {
    assert!(samples > 0, "composition check needs at least one sample");
    let mut rng = RandomStream::derive(seed, "composition");
    let mut counterexample = None;
    for _ in 0..samples {
        let a = TensorElement::random(alg, &mut rng);
        let b = TensorElement::random(alg, &mut rng);
        let (ok, w) = witness(&a, &b, kind);
        if !ok {
            counterexample = Some(w);
            break;
        }
    }
    let canonical_pair = (alg.scalar != ScalarRing::RealR).then(|| {
        let a = TensorElement::one_plus_unit(alg, 1, 1);
        let b = TensorElement::one_plus_unit(alg, 1, -1);
        witness(&a, &b, kind).1
    });
    CompositionReport {
        algebra: alg.label(),
        norm: kind,
        samples,
        seed,
        passed: counterexample.is_none(),
        counterexample,
        canonical_pair,
    }
}

/// First sampled element whose product with its full conjugate is not a scalar.
pub fn full_conjugation_noncentral_witness(
    alg: TensorAlgebra,
    samples: usize,
    seed: u64,
) -> Option<TensorElement> {
    let mut rng = RandomStream::derive(seed, "noncentral");
    let canonical =
        (alg.scalar != ScalarRing::RealR).then(|| TensorElement::one_plus_unit(alg, 1, 1));
    canonical
        .into_iter()
        .chain((0..samples).map(|_| TensorElement::random(alg, &mut rng)))
        .find(|b| !b.mul(&b.conjugate(ConjugationKind::Full)).is_scalar())
}
