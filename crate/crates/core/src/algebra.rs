//! Real composition algebras presented by structure constants.
//!
//! Every table is produced by iterated Cayley–Dickson doubling
//! `(a, b)(c, d) = (ac + γ d̄b, da + bc̄)` with conjugation `(a, b)̄ = (ā, -b)`.
//! The division series uses γ = -1 at every step; the split series switches
//! the last step to γ = +1, so in `Hs` and `Os` the units of the doubled half
//! square to +1.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::identities::AlgebraElement;
use crate::random::RandomStream;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum AlgebraName {
    R,
    C,
    Cs,
    H,
    Hs,
    O,
    Os,
}

impl AlgebraName {
    pub const ALL: [AlgebraName; 7] = [
        AlgebraName::R,
        AlgebraName::C,
        AlgebraName::Cs,
        AlgebraName::H,
        AlgebraName::Hs,
        AlgebraName::O,
        AlgebraName::Os,
    ];

    /// Cayley–Dickson parameters, innermost doubling first.
    pub fn doubling_parameters(self) -> &'static [i8] {
        match self {
            AlgebraName::R => &[],
            AlgebraName::C => &[-1],
            AlgebraName::Cs => &[1],
            AlgebraName::H => &[-1, -1],
            AlgebraName::Hs => &[-1, 1],
            AlgebraName::O => &[-1, -1, -1],
            AlgebraName::Os => &[-1, -1, 1],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraName::R => "R",
            AlgebraName::C => "C",
            AlgebraName::Cs => "Cs",
            AlgebraName::H => "H",
            AlgebraName::Hs => "Hs",
            AlgebraName::O => "O",
            AlgebraName::Os => "Os",
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| AlgebraError::UnknownAlgebra(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("operands belong to different algebras ({0} vs {1})")]
    TableMismatch(AlgebraName, AlgebraName),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// Signed unit product `e_i e_j = sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitProduct {
    pub sign: i8,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionTable {
    pub name: AlgebraName,
    pub dim: usize,
    /// `products[i * dim + j]` is `e_i e_j`.
    products: Vec<UnitProduct>,
    /// `e_k^2` for every k (entry 0 is the unit, +1).
    pub unit_squares: Vec<i8>,
    pub doubling: Vec<i8>,
}

fn cd_mul(a: &[i64], b: &[i64], gammas: &[i8]) -> Vec<i64> {
    let n = a.len();
    if n == 1 {
        return vec![a[0] * b[0]];
    }
    let h = n / 2;
    let (g, inner) = gammas.split_last().expect("gamma for each doubling");
    let (a1, a2) = a.split_at(h);
    let (b1, b2) = b.split_at(h);
    let conj = |x: &[i64]| -> Vec<i64> {
        x.iter()
            .enumerate()
            .map(|(i, v)| if i == 0 { *v } else { -v })
            .collect()
    };
    let ac = cd_mul(a1, b1, inner);
    let db = cd_mul(&conj(b2), a2, inner);
    let da = cd_mul(b2, a1, inner);
    let bc = cd_mul(a2, &conj(b1), inner);
    let mut out = Vec::with_capacity(n);
    out.extend(ac.iter().zip(&db).map(|(x, y)| x + *g as i64 * y));
    out.extend(da.iter().zip(&bc).map(|(x, y)| x + y));
    out
}

impl CompositionTable {
    fn build(name: AlgebraName) -> Self {
        let doubling = name.doubling_parameters().to_vec();
        let dim = 1usize << doubling.len();
        let unit = |i: usize| -> Vec<i64> { (0..dim).map(|k| (k == i) as i64).collect() };
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = cd_mul(&unit(i), &unit(j), &doubling);
                let (index, v) = p
                    .iter()
                    .enumerate()
                    .find(|(_, v)| **v != 0)
                    .expect("unit product is nonzero");
                debug_assert!(p.iter().filter(|v| **v != 0).count() == 1);
                products.push(UnitProduct {
                    sign: *v as i8,
                    index,
                });
            }
        }
        let unit_squares = (0..dim).map(|k| products[k * dim + k].sign).collect();
        CompositionTable {
            name,
            dim,
            products,
            unit_squares,
            doubling,
        }
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> UnitProduct {
        self.products[i * self.dim + j]
    }

    /// Diagonal of the norm form in the unit basis: N(e_0) = 1, N(e_k) = -e_k².
    pub fn norm_diagonal(&self) -> Vec<i8> {
        self.unit_squares
            .iter()
            .enumerate()
            .map(|(k, s)| if k == 0 { 1 } else { -s })
            .collect()
    }

    /// (positive, negative) counts of the norm form.
    pub fn norm_signature(&self) -> (usize, usize) {
        let d = self.norm_diagonal();
        (
            d.iter().filter(|s| **s > 0).count(),
            d.iter().filter(|s| **s < 0).count(),
        )
    }

    /// Indices `k >= 1` with `e_k^2 = +1`.
    pub fn split_units(&self) -> Vec<usize> {
        (1..self.dim)
            .filter(|k| self.unit_squares[*k] > 0)
            .collect()
    }
}

/// The shared, lazily built table for `name`.
pub fn standard_table(name: AlgebraName) -> &'static CompositionTable {
    static TABLES: OnceLock<Vec<CompositionTable>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        AlgebraName::ALL
            .iter()
            .map(|n| CompositionTable::build(*n))
            .collect()
    });
    &tables[AlgebraName::ALL
        .iter()
        .position(|n| *n == name)
        .expect("listed")]
}

/// An element of a composition algebra with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement {
    table: &'static CompositionTable,
    coeffs: Vec<Rational>,
}

impl AlgElement {
    pub fn new(name: AlgebraName, coeffs: Vec<Rational>) -> Result<Self, AlgebraError> {
        let table = standard_table(name);
        if coeffs.len() != table.dim {
            return Err(AlgebraError::WrongLength {
                expected: table.dim,
                got: coeffs.len(),
            });
        }
        Ok(AlgElement { table, coeffs })
    }

    pub fn zero(name: AlgebraName) -> Self {
        let table = standard_table(name);
        AlgElement {
            table,
            coeffs: vec![Rational::zero(); table.dim],
        }
    }

    pub fn unit(name: AlgebraName, k: usize) -> Self {
        let mut e = AlgElement::zero(name);
        e.coeffs[k] = Rational::one();
        e
    }

    pub fn scalar(name: AlgebraName, r: Rational) -> Self {
        let mut e = AlgElement::zero(name);
        e.coeffs[0] = r;
        e
    }

    pub fn random(name: AlgebraName, rng: &mut RandomStream) -> Self {
        let table = standard_table(name);
        AlgElement {
            table,
            coeffs: rng.rationals(table.dim),
        }
    }

    pub fn table(&self) -> &'static CompositionTable {
        self.table
    }

    pub fn name(&self) -> AlgebraName {
        self.table.name
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.table.name != other.table.name {
            Err(AlgebraError::TableMismatch(
                self.table.name,
                other.table.name,
            ))
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let t = self.table;
        let mut out = vec![Rational::zero(); t.dim];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = t.product(i, j);
                let v = x * y;
                if p.sign > 0 {
                    out[p.index] += v;
                } else {
                    out[p.index] -= v;
                }
            }
        }
        Ok(AlgElement {
            table: t,
            coeffs: out,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(AlgElement {
            table: self.table,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(AlgElement {
            table: self.table,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        AlgElement {
            table: self.table,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Negates every non-unit coordinate.
    pub fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { c.clone() } else { -c })
            .collect();
        AlgElement {
            table: self.table,
            coeffs,
        }
    }

    /// Scalar part of `x · conj(x)`.
    pub fn norm_form(&self) -> Rational {
        self.mul(&self.conj()).expect("same table").coeffs[0].clone()
    }

    /// Polarization of the norm form: `(N(x+y) - N(x) - N(y)) / 2`.
    pub fn bilinear_inner(&self, other: &Self) -> Result<Rational, AlgebraError> {
        let s = self.add(other)?;
        Ok((s.norm_form() - self.norm_form() - other.norm_form()) / Rational::from_int(2))
    }

    /// `conj(x) / N(x)` when the norm is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_form().recip()?;
        Some(self.conj().scale(&n))
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.table.name)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl AlgebraElement for AlgElement {
    fn product(&self, other: &Self) -> Self {
        self.mul(other)
            .expect("identity checks run inside one algebra")
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("same algebra")
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other).expect("same algebra")
    }
    fn is_zero(&self) -> bool {
        AlgElement::is_zero(self)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("serializable")
    }
}

/// JSON document for an [`AlgElement`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgElementDoc {
    pub table: AlgebraName,
    pub coeffs: Vec<Rational>,
}

impl AlgElement {
    pub fn to_doc(&self) -> AlgElementDoc {
        AlgElementDoc {
            table: self.table.name,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_doc(doc: AlgElementDoc) -> Result<Self, AlgebraError> {
        AlgElement::new(doc.table, doc.coeffs)
    }
}

/// Searches sums and differences of two units for a pair with product zero.
pub fn zero_divisor_search(name: AlgebraName) -> Option<(AlgElement, AlgElement)> {
    let dim = standard_table(name).dim;
    let mut candidates = Vec::new();
    for a in 0..dim {
        for b in (a + 1)..dim {
            for s in [1, -1] {
                let mut c = vec![Rational::zero(); dim];
                c[a] = Rational::one();
                c[b] = Rational::from_int(s);
                candidates.push(AlgElement::new(name, c).expect("dimension matches"));
            }
        }
    }
    for x in &candidates {
        for y in &candidates {
            if x.mul(y).expect("same table").is_zero() {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}
