//! Exact linear-algebra characteristic polynomials, independent of any
//! combinatorial formula.
//!
//! [`charpoly_exact`] runs Faddeev–LeVerrier over the integers (every division
//! by the step index is exact). [`charpoly_interpolated`] reaches the same
//! polynomial by another route: fraction-free Bareiss determinants of
//! `tI - M` at `t = 0..=p`, then Newton forward-difference interpolation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Pseudograph;
use crate::poly::IntPolynomial;

/// Dense square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from rows; panics unless square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        ExactMatrix {
            dim,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self[(i, j)].to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| &self[(i, i)]).sum()
    }

    fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `t * I - self`
    fn shifted_negation(&self, t: &BigInt) -> ExactMatrix {
        let mut out = self.clone();
        for v in out.entries.iter_mut() {
            *v = -&*v;
        }
        for i in 0..self.dim {
            out[(i, i)] += t;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.dim + j]
    }
}

/// Adjacency matrix with a 1 on the diagonal for every looped vertex.
pub fn adjacency_matrix(g: &Pseudograph) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m[(u, v)] = BigInt::one();
        m[(v, u)] = BigInt::one();
    }
    for v in g.loop_set().iter() {
        m[(v, v)] = BigInt::one();
    }
    m
}

/// `det(xI - m)` by Faddeev–LeVerrier.
pub fn charpoly_exact(m: &ExactMatrix) -> IntPolynomial {
    let n = m.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut mk = ExactMatrix::zeros(n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let tr = m.mul(&mk).trace();
        let (q, r) = num_integer::Integer::div_rem(&tr, &BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier trace not divisible by {k}");
        coeffs[n - k] = -q;
    }
    IntPolynomial::new(coeffs)
}

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
pub fn determinant_exact(m: &ExactMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.entries.swap(k * n + j, swap * n + j);
            }
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `det(xI - m)` via determinants at `t = 0..=p` and forward differences.
pub fn charpoly_interpolated(m: &ExactMatrix) -> IntPolynomial {
    let n = m.dim();
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|t| determinant_exact(&m.shifted_negation(&BigInt::from(t))))
        .collect();
    // In place: diffs[k] becomes Δ^k f(0).
    for k in 1..=n {
        for i in (k..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }
    // f(t) = Σ_k (Δ^k f(0) / k!) · t(t-1)...(t-k+1); the quotients are integers.
    let mut result = IntPolynomial::zero();
    let mut falling = IntPolynomial::one();
    let mut factorial = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            falling = falling * IntPolynomial::from_i64s(&[-(k as i64 - 1), 1]);
        }
        debug_assert!((d % &factorial).is_zero());
        result += &falling.scale(&(d / &factorial));
    }
    result
}

/// Characteristic polynomial of a pseudograph through the Faddeev–LeVerrier route.
pub fn charpoly_of_graph(g: &Pseudograph) -> IntPolynomial {
    charpoly_exact(&adjacency_matrix(g))
}

/// Determinant of the loop-diagonal adjacency matrix.
pub fn determinant_of_graph(g: &Pseudograph) -> BigInt {
    determinant_exact(&adjacency_matrix(g))
}
