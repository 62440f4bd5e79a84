//! Exact linear algebra over generic fields.
//!
//! The workhorse is [`Echelon`], an incremental sparse row-echelon form used
//! for rank and nullspace computations. Rows are inserted one at a time and
//! reduced only on their leading entry, which keeps fill-in low for the very
//! sparse constraint systems produced by derivation and invariance equations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::rational::Rational;

/// Minimal field interface used by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
}

/// The Mersenne prime 2^61 - 1 used for modular cross-checks.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Element of the prime field F_p with p = 2^61 - 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % MERSENNE_61)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce128(x: u128) -> u64 {
        let p = MERSENNE_61 as u128;
        let folded = (x & p) + (x >> 61);
        let folded = (folded & p) + (folded >> 61);
        let r = folded as u64;
        if r >= MERSENNE_61 {
            r - MERSENNE_61
        } else {
            r
        }
    }

    fn from_bigint(n: &BigInt) -> Fp {
        let m = BigInt::from(MERSENNE_61);
        let r = n.mod_floor(&m);
        Fp(r.to_u64().expect("reduced residue fits u64"))
    }

    /// Image of a rational under Z_(p) -> F_p; `None` when p divides the denominator.
    pub fn from_rational(r: &Rational) -> Option<Fp> {
        let (n, d) = match r.as_small() {
            Some((n, d)) => (Fp::from_i64(n), Fp::from_i64(d)),
            None => (Fp::from_bigint(&r.numer()), Fp::from_bigint(&r.denom())),
        };
        if d.0 == 0 {
            None
        } else {
            Some(n.mul(&d.inv()))
        }
    }

    fn from_i64(v: i64) -> Fp {
        if v >= 0 {
            Fp::new(v as u64)
        } else {
            Fp::new(v.unsigned_abs()).neg()
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= MERSENNE_61 { s - MERSENNE_61 } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            Fp(self.0 - other.0)
        } else {
            Fp(self.0 + MERSENNE_61 - other.0)
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Fp::reduce128(self.0 as u128 * other.0 as u128))
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(MERSENNE_61 - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(MERSENNE_61 - 2)
    }
}

/// Gaussian rationals Q(i), the exact stand-in for C.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian {
            re,
            im: Rational::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl Field for Gaussian {
    fn zero() -> Self {
        Gaussian::default()
    }
    fn one() -> Self {
        Gaussian::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Gaussian {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Gaussian {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        Gaussian {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        let n = n.recip().expect("inverse of zero");
        Gaussian {
            re: &self.re * &n,
            im: -(&self.im * &n),
        }
    }
}

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Builds a sparse row from unsorted `(column, value)` terms, summing duplicates.
pub fn sparse_from_terms<F: Field>(terms: impl IntoIterator<Item = (usize, F)>) -> SparseRow<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (c, v) in terms {
        if v.is_zero() {
            continue;
        }
        match acc.get_mut(&c) {
            Some(e) => *e = e.add(&v),
            None => {
                acc.insert(c, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn sparse_from_dense<F: Field>(dense: &[F]) -> SparseRow<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

pub fn sparse_to_dense<F: Field>(row: &[(usize, F)], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

/// `a + f * b` for sparse rows.
pub fn sparse_axpy<F: Field>(a: &[(usize, F)], f: &F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = f.mul(&b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.add(&f.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale<F: Field>(a: &[(usize, F)], f: &F) -> SparseRow<F> {
    if f.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(c, v)| (*c, v.mul(f))).collect()
}

/// Incremental sparse row-echelon form.
///
/// Every stored row has leading entry 1 at its pivot column and no entries
/// to the left of it. Rows are not back-reduced.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// Reduces `row` by leading entries; returns the remainder (empty if dependent).
    fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = sparse_axpy(&row, &v.neg(), p),
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some((c, lead)) => {
                let c = *c;
                let scaled = if lead == &F::one() {
                    row
                } else {
                    sparse_scale(&row, &lead.inv())
                };
                self.pivots.insert(c, scaled);
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect()
    }

    /// Nullspace basis: one vector per free column, equal to 1 there and 0 at
    /// every other free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![F::zero(); self.ncols];
                x[f] = F::one();
                for (p, row) in self.pivots.iter().rev() {
                    let mut s = F::zero();
                    for (c, v) in row.iter().skip(1) {
                        if !x[*c].is_zero() {
                            s = s.add(&v.mul(&x[*c]));
                        }
                    }
                    x[*p] = s.neg();
                }
                x
            })
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank_of<F: Field>(ncols: usize, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense matrix given as rows.
pub fn dense_rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    rank_of(ncols, rows.iter().map(|r| sparse_from_dense(r)))
}

/// Maps a rational sparse row into F_p; `None` if a denominator vanishes mod p.
pub fn row_mod_p(row: &[(usize, Rational)]) -> Option<SparseRow<Fp>> {
    let mut out = Vec::with_capacity(row.len());
    for (c, v) in row {
        let m = Fp::from_rational(v)?;
        if !m.is_zero() {
            out.push((*c, m));
        }
    }
    Some(out)
}

/// Coordinates of vectors with respect to a fixed, linearly independent basis.
#[derive(Clone, Debug)]
pub struct SpanSolver<F: Field> {
    dim: usize,
    nbasis: usize,
    /// pivot column -> (reduced row, combination of original basis vectors)
    rows: BTreeMap<usize, (SparseRow<F>, SparseRow<F>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpanError {
    #[error("basis vector {0} is linearly dependent on the previous ones")]
    Dependent(usize),
    #[error("vector is not in the span")]
    NotInSpan,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(dim: usize, basis: &[SparseRow<F>]) -> Result<Self, SpanError> {
        let mut s = SpanSolver {
            dim,
            nbasis: basis.len(),
            rows: BTreeMap::new(),
        };
        for (k, b) in basis.iter().enumerate() {
            let (rem, comb) = s.reduce_full(b.clone());
            let Some((c, lead)) = rem.first().cloned() else {
                return Err(SpanError::Dependent(k));
            };
            // new row = (b - sum comb_i r_i) / lead, in original-basis terms
            let mut total = sparse_scale(&comb, &F::one().neg());
            total = sparse_axpy(&total, &F::one(), &[(k, F::one())]);
            let inv = lead.inv();
            let row = sparse_scale(&rem, &inv);
            let total = sparse_scale(&total, &inv);
            // keep the form fully reduced: clear column c from earlier rows
            for (r, t) in s.rows.values_mut() {
                if let Some(pos) = r.iter().position(|(cc, _)| *cc == c) {
                    let f = r[pos].1.neg();
                    *r = sparse_axpy(r, &f, &row);
                    *t = sparse_axpy(t, &f, &total);
                }
            }
            s.rows.insert(c, (row, total));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against all rows; returns (remainder, combination in original basis).
    fn reduce_full(&self, v: SparseRow<F>) -> (SparseRow<F>, SparseRow<F>) {
        let mut rem = v;
        let mut comb: SparseRow<F> = Vec::new();
        // Rows are fully reduced, so each pivot coefficient can be read off once.
        let coeffs: Vec<(usize, F)> = rem
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, a) in coeffs {
            let (r, t) = &self.rows[&c];
            rem = sparse_axpy(&rem, &a.neg(), r);
            comb = sparse_axpy(&comb, &a, t);
        }
        (rem, comb)
    }

    /// Coefficients (dense, one per basis vector) of `v`, or `NotInSpan`.
    pub fn coordinates(&self, v: SparseRow<F>) -> Result<Vec<F>, SpanError> {
        let (rem, comb) = self.reduce_full(v);
        if !rem.is_empty() {
            return Err(SpanError::NotInSpan);
        }
        Ok(sparse_to_dense(&comb, self.nbasis))
    }

    /// Coefficients of `v` read from its pivot entries alone.
    ///
    /// Only meaningful when `v` lies in the span; callers must verify by
    /// reconstruction. Much cheaper than [`SpanSolver::coordinates`] for long
    /// vectors.
    pub fn coordinates_at_pivots(&self, v: &[(usize, F)]) -> Vec<F> {
        let mut out = vec![F::zero(); self.nbasis];
        for (c, x) in v {
            if let Some((_, t)) = self.rows.get(c) {
                for (k, w) in t {
                    out[*k] = out[*k].add(&x.mul(w));
                }
            }
        }
        out
    }
}

/// Inertia of a symmetric form: (positive, negative, zero) counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Exact inertia of a symmetric rational matrix by congruence diagonalization.
pub fn exact_inertia(matrix: &[Vec<Rational>]) -> Inertia {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        let diag = (k..n).find(|&i| !a[i][i].is_zero());
        let pivot = match diag {
            Some(i) => i,
            None => {
                // All remaining diagonal entries vanish: find an off-diagonal
                // entry and add row/col j to row/col i, making a[i][i] = 2 a[i][j].
                let off = (k..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else { break };
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += &v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += &v;
                }
                i
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let d = a[k][k].clone();
        if d.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        let dinv = d.recip().expect("nonzero pivot");
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &dinv;
            for c in k..n {
                let v = &f * &a[k][c];
                a[i][c] -= &v;
            }
        }
        // symmetric update of columns
        for i in (k + 1)..n {
            a[k][i] = Rational::zero();
            a[i][k] = Rational::zero();
        }
        k += 1;
    }
    Inertia {
        positive: pos,
        negative: neg,
        zero: n - pos - neg,
    }
}

/// Inertia of a symmetric matrix from its eigenvalues; eigenvalues with
/// `|λ| <= tol * max|λ|` count as zero.
pub fn float_inertia(matrix: &[Vec<f64>], tol: f64) -> Inertia {
    let n = matrix.len();
    if n == 0 {
        return Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
    }
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| matrix[i][j]);
    let eig = nalgebra::SymmetricEigen::new(m);
    let scale = eig.eigenvalues.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let cut = tol * scale.max(f64::MIN_POSITIVE);
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for v in eig.eigenvalues.iter() {
        if *v > cut {
            out.positive += 1;
        } else if *v < -cut {
            out.negative += 1;
        } else {
            out.zero += 1;
        }
    }
    out
}

/// Smallest relative eigenvalue gap from zero, used to report float-path margins.
pub fn min_abs_eigen_ratio(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    if n == 0 {
        return 0.0;
    }
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| matrix[i][j]);
    let eig = nalgebra::SymmetricEigen::new(m);
    let scale = eig.eigenvalues.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let min = eig
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |a, v| a.min(v.abs()));
    if scale == 0.0 {
        0.0
    } else {
        min / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn fp_arithmetic() {
        let a = Fp::new(MERSENNE_61 - 1);
        assert_eq!(a.add(&Fp::one()), Fp::zero());
        assert_eq!(a.mul(&a), Fp::one());
        let x = Fp::new(123456789);
        assert_eq!(x.mul(&x.inv()), Fp::one());
        let half = Fp::from_rational(&Rational::new(1, 2)).unwrap();
        assert_eq!(half.add(&half), Fp::one());
        let neg = Fp::from_rational(&Rational::new(-3, 1)).unwrap();
        assert_eq!(neg.add(&Fp::new(3)), Fp::zero());
    }

    #[test]
    fn gaussian_inverse() {
        let z = Gaussian::new(q(3), q(-4));
        assert_eq!(z.mul(&z.inv()), Gaussian::one());
    }

    #[test]
    fn echelon_rank_and_nullspace() {
        // x + y + z = 0, 2x + 2y + 2z = 0, y - z = 0 over Q
        let rows = vec![
            vec![(0, q(1)), (1, q(1)), (2, q(1))],
            vec![(0, q(2)), (1, q(2)), (2, q(2))],
            vec![(1, q(1)), (2, q(-1))],
        ];
        let mut e = Echelon::new(3);
        let added: Vec<bool> = rows.iter().cloned().map(|r| e.insert(r)).collect();
        assert_eq!(added, vec![true, false, true]);
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns, vec![vec![q(-2), q(1), q(1)]]);
        for r in &rows {
            let dot: Rational = r.iter().map(|(c, v)| v * &ns[0][*c]).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_solver_coordinates() {
        let basis = vec![vec![(0, q(1)), (1, q(1))], vec![(1, q(1)), (2, q(2))]];
        let s = SpanSolver::new(3, &basis).unwrap();
        // 3*b0 - 2*b1 = (3, 1, -4)
        let v = vec![(0, q(3)), (1, q(1)), (2, q(-4))];
        assert_eq!(s.coordinates(v).unwrap(), vec![q(3), q(-2)]);
        assert_eq!(s.coordinates(vec![(2, q(1))]), Err(SpanError::NotInSpan));
        let dep = vec![vec![(0, q(1))], vec![(0, q(2))]];
        assert_eq!(
            SpanSolver::new(1, &dep).err(),
            Some(SpanError::Dependent(1))
        );
    }

    #[test]
    fn inertia_exact_and_float_agree() {
        // hyperbolic plane plus a negative square: zero diagonal exercises the off-diagonal branch
        let m = vec![
            vec![q(0), q(1), q(0), q(0)],
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(0), q(-3), q(0)],
            vec![q(0), q(0), q(0), q(0)],
        ];
        let e = exact_inertia(&m);
        assert_eq!(
            e,
            Inertia {
                positive: 1,
                negative: 2,
                zero: 1
            }
        );
        let f: Vec<Vec<f64>> = m
            .iter()
            .map(|r| r.iter().map(|v| v.to_f64()).collect())
            .collect();
        assert_eq!(float_inertia(&f, 1e-8), e);
    }

    #[test]
    fn modular_rank_matches_rational() {
        let rows: Vec<SparseRow<Rational>> = vec![
            vec![(0, Rational::new(1, 2)), (3, q(1))],
            vec![(1, q(1)), (3, q(-1))],
            vec![(0, q(1)), (1, q(2)), (3, q(1))],
        ];
        let rows: Vec<_> = rows.into_iter().map(sparse_from_terms).collect();
        let r_q = rank_of(4, rows.clone());
        let r_p = rank_of(4, rows.iter().map(|r| row_mod_p(r).unwrap()));
        assert_eq!(r_q, r_p);
        assert_eq!(r_q, 3);
    }
}
