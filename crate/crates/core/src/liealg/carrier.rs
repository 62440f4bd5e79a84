//! Finite-dimensional real algebras given by structure constants, and the
//! Jordan carriers `J₃(A)` with their trace form and cubic norm.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{standard_table, AlgebraName};
use crate::bioctonion::{Scalar, ScalarRing, TensorAlgebra, TensorElement};
use crate::jordan::{ntri, ConjKind, HermMatrix3, Metric};
use crate::linalg::{sparse_from_dense, SparseRow};
use crate::rational::Rational;

use super::operator::Operator;

/// A bilinear product on `R^dim`, stored as `e_i e_j` for every basis pair.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub name: String,
    pub dim: usize,
    products: Vec<SparseRow<Rational>>,
    pub commutative: bool,
}

impl FiniteAlgebra {
    pub fn from_products(
        name: impl Into<String>,
        dim: usize,
        f: impl Fn(usize, usize) -> Vec<Rational> + Sync,
    ) -> Self {
        let products: Vec<SparseRow<Rational>> = (0..dim * dim)
            .into_par_iter()
            .map(|k| sparse_from_dense(&f(k / dim, k % dim)))
            .collect();
        let commutative =
            (0..dim).all(|i| (0..dim).all(|j| products[i * dim + j] == products[j * dim + i]));
        FiniteAlgebra {
            name: name.into(),
            dim,
            products,
            commutative,
        }
    }

    /// A composition algebra from its unit table.
    pub fn composition(name: AlgebraName) -> Self {
        let t = standard_table(name);
        FiniteAlgebra::from_products(name.to_string(), t.dim, |i, j| {
            let p = t.product(i, j);
            let mut v = vec![Rational::zero(); t.dim];
            v[p.index] = Rational::from_int(p.sign as i64);
            v
        })
    }

    /// `K ⊗ A` as a real algebra of dimension `real_dim`.
    pub fn tensor(alg: TensorAlgebra) -> Self {
        let n = alg.real_dim();
        let basis = |k: usize| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            TensorElement::from_real_coords(alg, &e).expect("basis vector")
        };
        FiniteAlgebra::from_products(alg.label(), n, |i, j| basis(i).mul(&basis(j)).real_coords())
    }

    /// `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &SparseRow<Rational> {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// The same algebra written in the basis `f_k = Σ_i P[i][k] e_i`.
    pub fn change_basis(&self, p: &[Vec<Rational>], p_inv: &[Vec<Rational>]) -> Self {
        let n = self.dim;
        let col = |k: usize| (0..n).map(|i| p[i][k].clone()).collect::<Vec<_>>();
        FiniteAlgebra::from_products(format!("{} (rebased)", self.name), n, |a, b| {
            let prod = self.mul(&col(a), &col(b));
            (0..n)
                .map(|r| (0..n).map(|c| &p_inv[r][c] * &prod[c]).sum())
                .collect()
        })
    }

    /// Left multiplication `x ↦ a x`.
    pub fn left_mult(&self, a: &[Rational]) -> Operator {
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                self.mul(a, &e)
            })
            .collect();
        Operator::from_columns(n, &cols)
    }
}

/// Symmetric trilinear form stored by sorted index triples, with a pair index
/// for building invariance equations.
#[derive(Clone, Debug, Default)]
pub struct CubicTensor {
    pub dim: usize,
    values: HashMap<(usize, usize, usize), Rational>,
    /// `(b, c)` sorted ↦ all `(k, N(e_k, e_b, e_c))` with nonzero value.
    by_pair: HashMap<(usize, usize), Vec<(usize, Rational)>>,
}

fn sort3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let mut v = [a, b, c];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

impl CubicTensor {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Rational + Sync) -> Self {
        let triples: Vec<(usize, usize, usize)> = (0..dim)
            .flat_map(|a| (a..dim).flat_map(move |b| (b..dim).map(move |c| (a, b, c))))
            .collect();
        let vals: Vec<((usize, usize, usize), Rational)> = triples
            .into_par_iter()
            .map(|(a, b, c)| ((a, b, c), f(a, b, c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let mut values = HashMap::new();
        let mut by_pair: HashMap<(usize, usize), Vec<(usize, Rational)>> = HashMap::new();
        for ((a, b, c), v) in vals {
            let mut seen = Vec::with_capacity(3);
            for (k, p, q) in [(a, b, c), (b, a, c), (c, a, b)] {
                if !seen.contains(&(k, p, q)) {
                    seen.push((k, p, q));
                    by_pair.entry((p, q)).or_default().push((k, v.clone()));
                }
            }
            values.insert((a, b, c), v);
        }
        for list in by_pair.values_mut() {
            list.sort_by_key(|(k, _)| *k);
        }
        CubicTensor {
            dim,
            values,
            by_pair,
        }
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Rational {
        self.values
            .get(&sort3(a, b, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `k ↦ N(e_k, e_b, e_c)` (nonzero entries only).
    pub fn pair(&self, b: usize, c: usize) -> &[(usize, Rational)] {
        let key = if b <= c { (b, c) } else { (c, b) };
        self.by_pair.get(&key).map_or(&[], |v| v.as_slice())
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.len()
    }

    /// `N'(a,b,c) = N(Pe_a, Pe_b, Pe_c)` for the basis `f_k = Σ_i P[i][k] e_i`.
    pub fn change_basis(&self, p: &[Vec<Rational>]) -> Self {
        let n = self.dim;
        let entries: Vec<((usize, usize, usize), Rational)> =
            self.values.iter().map(|(k, v)| (*k, v.clone())).collect();
        CubicTensor::from_fn(n, |a, b, c| {
            let mut s = Rational::zero();
            for ((i, j, k), v) in &entries {
                // sum over the distinct permutations of (i, j, k)
                let mut perms = vec![
                    (*i, *j, *k),
                    (*i, *k, *j),
                    (*j, *i, *k),
                    (*j, *k, *i),
                    (*k, *i, *j),
                    (*k, *j, *i),
                ];
                perms.sort_unstable();
                perms.dedup();
                for (x, y, z) in perms {
                    let w = &p[x][a] * &p[y][b] * &p[z][c];
                    if !w.is_zero() {
                        s += &w * v;
                    }
                }
            }
            s
        })
    }
}

/// `J₃(A)` with metric `η` over a real composition algebra `A`, in the basis
/// `E₁, E₂, E₃`, then the units of `b₁`, `b₂`, `b₃`.
#[derive(Clone, Debug)]
pub struct JordanCarrier {
    pub algebra: FiniteAlgebra,
    pub coords: TensorAlgebra,
    pub metric: Metric,
    pub label: String,
}

impl JordanCarrier {
    pub fn new(oct: AlgebraName, metric: Metric) -> Self {
        let coords = TensorAlgebra::with_table(ScalarRing::RealR, oct);
        let label = if metric == Metric::DEFINITE {
            format!("J3({oct})")
        } else {
            format!("J(2,1)({oct})")
        };
        let proto = JordanCarrier {
            algebra: FiniteAlgebra {
                name: String::new(),
                dim: 0,
                products: Vec::new(),
                commutative: true,
            },
            coords,
            metric,
            label: label.clone(),
        };
        let n = proto.dim();
        let basis: Vec<HermMatrix3> = (0..n).map(|k| proto.basis_element(k)).collect();
        let algebra = FiniteAlgebra::from_products(label.clone(), n, |i, j| {
            proto.coordinates(&basis[i].jordan_mul(&basis[j]).expect("same carrier"))
        });
        JordanCarrier { algebra, ..proto }
    }

    /// `3 + 3 dim A`.
    pub fn dim(&self) -> usize {
        3 + 3 * self.coords.table().dim
    }

    fn d(&self) -> usize {
        self.coords.table().dim
    }

    fn basis_element(&self, k: usize) -> HermMatrix3 {
        let mut v = vec![Rational::zero(); self.dim()];
        v[k] = Rational::one();
        self.element(&v)
    }

    pub fn element(&self, v: &[Rational]) -> HermMatrix3 {
        let alg = self.coords;
        let d = self.d();
        let lambda = std::array::from_fn(|i| Scalar::real(ScalarRing::RealR, v[i].clone()));
        let b = std::array::from_fn(|nu| {
            TensorElement::from_real_coords(alg, &v[3 + nu * d..3 + (nu + 1) * d]).expect("length")
        });
        HermMatrix3::from_parts(alg, ConjKind::Octonionic, self.metric, lambda, b)
            .expect("scalar diagonal")
    }

    pub fn coordinates(&self, m: &HermMatrix3) -> Vec<Rational> {
        let mut out: Vec<Rational> = (0..3).map(|i| m.lambda(i).re.clone()).collect();
        for b in m.b() {
            out.extend(b.real_coords());
        }
        out
    }

    /// Gram matrix of `T(x,y) = tr(x∘y)`.
    pub fn trace_form_gram(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let basis: Vec<HermMatrix3> = (0..n).map(|k| self.basis_element(k)).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        crate::jordan::trace_form(&basis[i], &basis[j])
                            .expect("central")
                            .re
                    })
                    .collect()
            })
            .collect()
    }

    /// Signs of `σ_η`: conjugation by `diag(1,1,−1)` negates the `b₁`, `b₂` coordinates.
    pub fn eta_twist(&self) -> Vec<i64> {
        let d = self.d();
        (0..self.dim())
            .map(|k| if (3..3 + 2 * d).contains(&k) { -1 } else { 1 })
            .collect()
    }

    /// `tr(e_k)`.
    pub fn trace_coefficients(&self) -> Vec<Rational> {
        (0..self.dim())
            .map(|k| {
                if k < 3 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    /// The polarized determinant on basis triples.
    pub fn cubic_tensor(&self) -> CubicTensor {
        let n = self.dim();
        let basis: Vec<HermMatrix3> = (0..n).map(|k| self.basis_element(k)).collect();
        CubicTensor::from_fn(n, |a, b, c| {
            ntri(&basis[a], &basis[b], &basis[c]).expect("central").re
        })
    }

    /// Traceless basis: `E₁ − E₂`, `E₂ − E₃`, and the off-diagonal units.
    pub fn traceless_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let unit = |k: usize, s: i64| {
            let mut v = vec![Rational::zero(); n];
            v[k] = Rational::from_int(s);
            v
        };
        let mut out = Vec::new();
        for i in 0..2 {
            let mut v = unit(i, 1);
            v[i + 1] = Rational::from_int(-1);
            out.push(v);
        }
        out.extend((3..n).map(|k| unit(k, 1)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_carrier() {
        let o = FiniteAlgebra::composition(AlgebraName::O);
        assert_eq!(o.dim, 8);
        assert!(!o.commutative);
        assert_eq!(o.product(0, 5), &vec![(5, Rational::one())]);
        let co = FiniteAlgebra::tensor(TensorAlgebra::BIOCTONIONS);
        assert_eq!(co.dim, 16);
    }

    #[test]
    fn jordan_carrier_basics() {
        let j = JordanCarrier::new(AlgebraName::O, Metric::DEFINITE);
        assert_eq!(j.dim(), 27);
        assert!(j.algebra.commutative);
        // E1∘E1 = E1, E1∘E2 = 0
        assert_eq!(j.algebra.product(0, 0), &vec![(0, Rational::one())]);
        assert!(j.algebra.product(0, 1).is_empty());
        let g = j.trace_form_gram();
        assert_eq!(g[0][0], Rational::one());
        assert_eq!(g[5][5], Rational::from_int(2));
        let t = j.cubic_tensor();
        assert_eq!(t.get(0, 1, 2), Rational::new(1, 6));
        assert_eq!(t.get(2, 1, 0), Rational::new(1, 6));
    }

    #[test]
    fn cubic_tensor_pairs_are_consistent() {
        let j = JordanCarrier::new(AlgebraName::H, Metric::DEFINITE);
        let t = j.cubic_tensor();
        for b in 0..j.dim() {
            for c in 0..j.dim() {
                for (k, v) in t.pair(b, c) {
                    assert_eq!(&t.get(*k, b, c), v);
                }
                let count = (0..j.dim()).filter(|k| !t.get(*k, b, c).is_zero()).count();
                assert_eq!(count, t.pair(b, c).len());
            }
        }
    }
}
