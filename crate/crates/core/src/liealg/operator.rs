//! Sparse rational operators `X = Re X + i Im X` on `R^n` (or `C^n`).
//!
//! Real operators have `Im X = 0`. The vectorization used for spans puts
//! entry `(r, c)` of the real part at `r·n + c` and of the imaginary part at
//! `n² + r·n + c`.

use crate::linalg::{sparse_axpy, sparse_from_dense, sparse_scale, Field, SparseRow};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    n: usize,
    re: Vec<SparseRow<Rational>>,
    im: Vec<SparseRow<Rational>>,
}

fn zero_rows(n: usize) -> Vec<SparseRow<Rational>> {
    vec![Vec::new(); n]
}

fn rows_mul(
    n: usize,
    a: &[SparseRow<Rational>],
    b: &[SparseRow<Rational>],
) -> Vec<SparseRow<Rational>> {
    a.iter()
        .map(|row| {
            let mut acc = vec![Rational::zero(); n];
            let mut touched = false;
            for (k, v) in row {
                for (c, w) in &b[*k] {
                    acc[*c] += v * w;
                    touched = true;
                }
            }
            if touched {
                sparse_from_dense(&acc)
            } else {
                Vec::new()
            }
        })
        .collect()
}

fn rows_combine(
    a: &[SparseRow<Rational>],
    f: &Rational,
    b: &[SparseRow<Rational>],
) -> Vec<SparseRow<Rational>> {
    a.iter().zip(b).map(|(x, y)| sparse_axpy(x, f, y)).collect()
}

impl Operator {
    pub fn zero(n: usize) -> Self {
        Operator {
            n,
            re: zero_rows(n),
            im: zero_rows(n),
        }
    }

    pub fn identity(n: usize) -> Self {
        let re = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        Operator {
            n,
            re,
            im: zero_rows(n),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let n = rows.len();
        Operator {
            n,
            re: rows.iter().map(|r| sparse_from_dense(r)).collect(),
            im: zero_rows(n),
        }
    }

    /// Operator whose `j`-th column is `cols[j]`.
    pub fn from_columns(n: usize, cols: &[Vec<Rational>]) -> Self {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
            .collect();
        Operator::from_dense(&rows)
    }

    /// Inverse of [`Operator::to_vector`]; accepts length `n²` (real) or `2n²`.
    pub fn from_vector(n: usize, v: &[Rational]) -> Self {
        let nn = n * n;
        let re = (0..n)
            .map(|r| sparse_from_dense(&v[r * n..(r + 1) * n]))
            .collect();
        let im = if v.len() > nn {
            (0..n)
                .map(|r| sparse_from_dense(&v[nn + r * n..nn + (r + 1) * n]))
                .collect()
        } else {
            zero_rows(n)
        };
        Operator { n, re, im }
    }

    pub fn from_parts(re: Operator, im: Operator) -> Self {
        assert_eq!(re.n, im.n);
        assert!(re.is_real() && im.is_real());
        Operator {
            n: re.n,
            re: re.re,
            im: im.re,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_real(&self) -> bool {
        self.im.iter().all(Vec::is_empty)
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().chain(&self.im).all(Vec::is_empty)
    }

    pub fn real_part(&self) -> Operator {
        Operator {
            n: self.n,
            re: self.re.clone(),
            im: zero_rows(self.n),
        }
    }

    pub fn imag_part(&self) -> Operator {
        Operator {
            n: self.n,
            re: self.im.clone(),
            im: zero_rows(self.n),
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> (Rational, Rational) {
        let get = |rows: &[SparseRow<Rational>]| {
            rows[r]
                .iter()
                .find(|(k, _)| *k == c)
                .map_or_else(Rational::zero, |(_, v)| v.clone())
        };
        (get(&self.re), get(&self.im))
    }

    /// Sparse vectorization of length `2n²`.
    pub fn to_vector(&self) -> SparseRow<Rational> {
        let nn = self.n * self.n;
        let mut out = Vec::new();
        for (off, rows) in [(0, &self.re), (nn, &self.im)] {
            for (r, row) in rows.iter().enumerate() {
                out.extend(row.iter().map(|(c, v)| (off + r * self.n + c, v.clone())));
            }
        }
        out
    }

    /// Dense real matrix (real part only).
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.re
            .iter()
            .map(|row| crate::linalg::sparse_to_dense(row, self.n))
            .collect()
    }

    pub fn mul(&self, o: &Operator) -> Operator {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let rr = rows_mul(n, &self.re, &o.re);
        if self.is_real() && o.is_real() {
            return Operator {
                n,
                re: rr,
                im: zero_rows(n),
            };
        }
        let ii = rows_mul(n, &self.im, &o.im);
        let ri = rows_mul(n, &self.re, &o.im);
        let ir = rows_mul(n, &self.im, &o.re);
        let minus = Rational::from_int(-1);
        Operator {
            n,
            re: rows_combine(&rr, &minus, &ii),
            im: rows_combine(&ri, &Rational::one(), &ir),
        }
    }

    pub fn add(&self, o: &Operator) -> Operator {
        self.axpy(&Rational::one(), o)
    }

    pub fn sub(&self, o: &Operator) -> Operator {
        self.axpy(&Rational::from_int(-1), o)
    }

    /// `self + f·o`.
    pub fn axpy(&self, f: &Rational, o: &Operator) -> Operator {
        Operator {
            n: self.n,
            re: rows_combine(&self.re, f, &o.re),
            im: rows_combine(&self.im, f, &o.im),
        }
    }

    pub fn scale(&self, f: &Rational) -> Operator {
        Operator {
            n: self.n,
            re: self.re.iter().map(|r| sparse_scale(r, f)).collect(),
            im: self.im.iter().map(|r| sparse_scale(r, f)).collect(),
        }
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Operator {
        Operator {
            n: self.n,
            re: self
                .im
                .iter()
                .map(|r| sparse_scale(r, &Rational::from_int(-1)))
                .collect(),
            im: self.re.clone(),
        }
    }

    pub fn commutator(&self, o: &Operator) -> Operator {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Operator {
        let t = |rows: &[SparseRow<Rational>]| {
            let mut out = zero_rows(self.n);
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in row {
                    out[*c].push((r, v.clone()));
                }
            }
            out
        };
        Operator {
            n: self.n,
            re: t(&self.re),
            im: t(&self.im),
        }
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert!(self.is_real(), "apply is defined for real operators");
        self.re
            .iter()
            .map(|row| row.iter().map(|(c, v)| v * &x[*c]).sum())
            .collect()
    }

    /// `Re tr(self · o)` (the real trace form of the realification, halved).
    pub fn trace_of_product(&self, o: &Operator) -> Rational {
        let mut s = Rational::zero();
        for r in 0..self.n {
            for (k, v) in &self.re[r] {
                if let Some((_, w)) = o.re[*k].iter().find(|(c, _)| *c == r) {
                    s += v * w;
                }
            }
            for (k, v) in &self.im[r] {
                if let Some((_, w)) = o.im[*k].iter().find(|(c, _)| *c == r) {
                    s -= v * w;
                }
            }
        }
        s
    }

    pub fn nnz(&self) -> usize {
        self.re.iter().chain(&self.im).map(Vec::len).sum()
    }
}

/// Maps a rational row into another field through `f`.
pub fn map_row<F: Field>(row: &[(usize, Rational)], f: impl Fn(&Rational) -> F) -> SparseRow<F> {
    row.iter()
        .map(|(c, v)| (*c, f(v)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn complex_multiplication() {
        let a = Operator::from_dense(&[vec![q(1), q(2)], vec![q(0), q(1)]]);
        let b = Operator::from_dense(&[vec![q(0), q(1)], vec![q(1), q(0)]]);
        let z = Operator::from_parts(a.clone(), b.clone());
        // (A + iB)(A − iB) = A² + B² + i(BA − AB)
        let zc = Operator::from_parts(a.clone(), b.scale(&q(-1)));
        let p = z.mul(&zc);
        assert_eq!(p.real_part(), a.mul(&a).add(&b.mul(&b)));
        assert_eq!(p.imag_part(), b.mul(&a).sub(&a.mul(&b)));
        assert_eq!(z.times_i().times_i(), z.scale(&q(-1)));
    }

    #[test]
    fn vector_round_trip() {
        let a = Operator::from_dense(&[vec![q(1), q(2)], vec![q(3), q(4)]]);
        let z = Operator::from_parts(a.clone(), a.transpose());
        assert_eq!(
            Operator::from_vector(2, &crate::linalg::sparse_to_dense(&z.to_vector(), 8)),
            z
        );
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.apply(&[q(1), q(1)]), vec![q(3), q(7)]);
        assert_eq!(a.trace_of_product(&Operator::identity(2)), q(5));
    }
}
