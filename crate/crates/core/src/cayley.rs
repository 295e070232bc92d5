//! Unitary addition Cayley graphs and their anti-circulant companions.
//!
//! `G_n` has the ring `Z_n` as vertex set, vertex `t` labeled `t`, and joins
//! `i != j` whenever `i + j` is a unit mod `n`. The anti-circulant graph
//! `X(A_n)` has the same edges plus a loop at `t` whenever `2t` is a unit,
//! which only happens for odd `n`.
//!
//! The spectrum of `A_n` is governed by the unit sums
//! `λ_r = Σ_{j ∈ U(n)} w^(rj)`, `w = e^(2πi/n)`. These are Ramanujan sums and
//! therefore integers; [`lambda_r`] computes them exactly as
//! `μ(n/g) φ(n) / φ(n/g)` with `g = gcd(r, n)`, and [`lambda_r_numeric`]
//! evaluates the defining sum in floating point for cross-checking.

use num_complex::Complex64;
use num_integer::Integer;

use crate::deletion::CharpolyEngine;
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Pseudograph, VertexSet};
use crate::poly::IntPolynomial;

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument {
            what: "modulus n",
            requirement: "n >= 1",
            value: n,
        })
    } else {
        Ok(())
    }
}

/// `U(n) = { j in 0..n : gcd(j, n) = 1 }`. For `n = 1` this is `{0}`.
pub fn units(n: usize) -> Result<VertexSet> {
    require_positive(n)?;
    Ok((0..n).filter(|j| j.gcd(&n) == 1).collect())
}

/// Euler's totient.
pub fn totient(n: usize) -> Result<usize> {
    require_positive(n)?;
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    Ok(result)
}

/// Möbius function; `n >= 1`.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// First row of an anti-circulant 0/1 matrix: entry `(i, j)` is `a[(i + j) mod n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiCirculantSpec {
    first_row: Vec<bool>,
}

impl AntiCirculantSpec {
    pub fn new(first_row: Vec<bool>) -> Result<Self> {
        require_positive(first_row.len())?;
        Ok(AntiCirculantSpec { first_row })
    }

    /// `a_j = 1` exactly for the units `j` of `Z_n`.
    pub fn units_row(n: usize) -> Result<Self> {
        require_positive(n)?;
        Self::new((0..n).map(|j| j.gcd(&n) == 1).collect())
    }

    pub fn n(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[bool] {
        &self.first_row
    }

    /// Entry `(i, j)`, zero-indexed.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.first_row[(i + j) % self.n()]
    }

    /// Graph whose adjacency matrix is this matrix; diagonal ones become loops.
    pub fn graph(&self) -> Pseudograph {
        let n = self.n();
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            if self.entry(i, i) {
                b.add_loop(i).expect("each diagonal entry is visited once");
            }
            for j in i + 1..n {
                if self.entry(i, j) {
                    b.add_edge(i, j).expect("each pair is visited once");
                }
            }
        }
        b.build()
    }

    /// `p_n(w^r) = Σ_j a_j w^(rj)` in floating point.
    pub fn row_polynomial_at_root(&self, r: usize) -> Complex64 {
        let n = self.n() as f64;
        self.first_row
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(j, _)| {
                let angle = 2.0 * std::f64::consts::PI * ((r * j) % self.n()) as f64 / n;
                Complex64::from_polar(1.0, angle)
            })
            .sum()
    }
}

/// `G_n`: edge `{i, j}`, `i != j`, iff `(i + j) mod n` is a unit. No loops.
pub fn build_unitary_cayley(n: usize) -> Result<Pseudograph> {
    Ok(build_anticirculant_graph(n)?.without_loops())
}

/// `X(A_n)` for the unit first row: the edges of `G_n` plus a loop at every
/// `t` with `gcd(2t, n) = 1`.
pub fn build_anticirculant_graph(n: usize) -> Result<Pseudograph> {
    Ok(AntiCirculantSpec::units_row(n)?.graph())
}

fn check_r(n: usize, r: usize) -> Result<()> {
    require_positive(n)?;
    if r > n / 2 {
        return Err(Error::InvalidArgument {
            what: "eigenvalue index r",
            requirement: "r <= floor(n/2)",
            value: r,
        });
    }
    Ok(())
}

/// Exact `λ_r` for `0 <= r <= n/2`, as a Ramanujan sum.
pub fn lambda_r(n: usize, r: usize) -> Result<i64> {
    check_r(n, r)?;
    let g = r.gcd(&n); // gcd(0, n) = n
    let m = n / g;
    let phi_n = totient(n)? as i64;
    let phi_m = totient(m)? as i64;
    Ok(mobius(m) * (phi_n / phi_m))
}

/// `λ_r` from the defining root-of-unity sum, in floating point.
pub fn lambda_r_numeric(n: usize, r: usize) -> Result<Complex64> {
    check_r(n, r)?;
    Ok(AntiCirculantSpec::units_row(n)?.row_polynomial_at_root(r))
}

fn x_squared_minus(c: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[-(c * c), 0, 1])
}

// ∏_{r=1}^{⌊(n-1)/2⌋} (x^2 - |λ_r|^2)
fn paired_factor(n: usize) -> Result<IntPolynomial> {
    (1..=(n - 1) / 2)
        .map(|r| lambda_r(n, r).map(x_squared_minus))
        .product()
}

/// `φ(X(A_n))`: `(x^2 - φ(n)^2) ∏ (x^2 - |λ_r|^2)` for even `n`,
/// `(x - φ(n)) ∏ (x^2 - |λ_r|^2)` for odd `n`.
pub fn charpoly_anticirculant(n: usize) -> Result<IntPolynomial> {
    let phi = totient(n)? as i64;
    let head = if n.is_multiple_of(2) {
        x_squared_minus(phi)
    } else {
        IntPolynomial::from_i64s(&[-phi, 1])
    };
    Ok(head * paired_factor(n)?)
}

/// `φ(G_n)` for even `n`, where `G_n` coincides with `X(A_n)`.
pub fn charpoly_cayley_even(n: usize) -> Result<IntPolynomial> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidArgument {
            what: "even-case modulus n",
            requirement: "even n >= 2",
            value: n,
        });
    }
    charpoly_anticirculant(n)
}

/// `φ(G_n)` for odd `n`:
/// `(x - φ(n)) ∏ (x^2 - λ_r^2) + Σ_{i ∈ U(n)} φ(X(A_n) - {l_j : j ∈ U(n), j < i} - i)`,
/// units taken in increasing order. The inner polynomials come from `engine`.
pub fn charpoly_cayley_odd(n: usize, engine: &CharpolyEngine) -> Result<IntPolynomial> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument {
            what: "odd-case modulus n",
            requirement: "odd n >= 1",
            value: n,
        });
    }
    let x_an = build_anticirculant_graph(n)?;
    let mut total = charpoly_anticirculant(n)?;
    let mut peeled = VertexSet::new();
    for i in units(n)?.iter() {
        let partial = x_an.delete_loops(&peeled)?;
        total += &engine.phi_without(&partial, &[i].into());
        peeled.insert(i);
    }
    Ok(total)
}

/// Exact `φ(G_n)` for any `n >= 1`, dispatching on parity.
pub fn charpoly_cayley(n: usize, engine: &CharpolyEngine) -> Result<IntPolynomial> {
    require_positive(n)?;
    if n.is_multiple_of(2) {
        charpoly_cayley_even(n)
    } else {
        charpoly_cayley_odd(n, engine)
    }
}

/// Eigenvalue data of `A_n` for the unit first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyEigenReport {
    pub n: usize,
    pub lambda_0: i64,
    /// Present iff `n` is even.
    pub lambda_half: Option<i64>,
    /// `|λ_r|` for `r = 1..=⌊(n-1)/2⌋`.
    pub paired_magnitudes: Vec<u64>,
}

impl CayleyEigenReport {
    /// `λ_0`, `λ_{n/2}` when present, then `±|λ_r|`; sorted ascending, `n` entries.
    pub fn eigenvalues(&self) -> Vec<i64> {
        let mut out = vec![self.lambda_0];
        out.extend(self.lambda_half);
        for &m in &self.paired_magnitudes {
            out.push(m as i64);
            out.push(-(m as i64));
        }
        out.sort_unstable();
        out
    }

    /// Eigenvalues of `G_n` itself for even `n`: `±φ(n)` and `±|λ_r|`.
    /// For odd `n` the loops shift the spectrum and this is `None`.
    pub fn cayley_eigenvalues(&self) -> Option<Vec<i64>> {
        self.lambda_half.map(|_| self.eigenvalues())
    }
}

pub fn spectrum_report(n: usize) -> Result<CayleyEigenReport> {
    let lambda_0 = lambda_r(n, 0)?;
    let lambda_half = if n.is_multiple_of(2) {
        Some(lambda_r(n, n / 2)?)
    } else {
        None
    };
    let paired_magnitudes = (1..=(n - 1) / 2)
        .map(|r| lambda_r(n, r).map(|l| l.unsigned_abs()))
        .collect::<Result<_>>()?;
    Ok(CayleyEigenReport {
        n,
        lambda_0,
        lambda_half,
        paired_magnitudes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deletion::LeafMethod;
    use crate::oracle::charpoly_of_graph;
    use crate::sachs::charpoly_sachs;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn units_and_totient() {
        assert_eq!(units(4).unwrap(), VertexSet::from([1, 3]));
        assert_eq!(totient(4).unwrap(), 2);
        assert_eq!(units(1).unwrap(), VertexSet::from([0]));
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(units(5).unwrap(), VertexSet::from([1, 2, 3, 4]));
        assert!(units(0).is_err());
        for n in 1..200 {
            assert_eq!(totient(n).unwrap(), units(n).unwrap().len());
        }
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(mobius(i + 1), mu, "mu({})", i + 1);
        }
    }

    #[test]
    fn cayley_graphs() {
        assert_eq!(
            build_unitary_cayley(4).unwrap(),
            Pseudograph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[]).unwrap()
        );
        assert_eq!(
            build_unitary_cayley(3).unwrap(),
            Pseudograph::new(3, &[(0, 1), (0, 2)], &[]).unwrap()
        );
        assert_eq!(build_unitary_cayley(2).unwrap(), Pseudograph::complete(2));
        assert_eq!(build_unitary_cayley(1).unwrap(), Pseudograph::empty(1));
    }

    #[test]
    fn anticirculant_graphs() {
        let x3 = build_anticirculant_graph(3).unwrap();
        assert_eq!(x3, Pseudograph::new(3, &[(0, 1), (0, 2)], &[1, 2]).unwrap());
        assert_eq!(
            build_anticirculant_graph(4).unwrap(),
            build_unitary_cayley(4).unwrap()
        );
        assert_eq!(
            build_anticirculant_graph(1).unwrap(),
            Pseudograph::new(1, &[], &[0]).unwrap()
        );
        for n in (2..=30).step_by(2) {
            assert_eq!(build_anticirculant_graph(n).unwrap().loop_count(), 0);
        }
        for n in (1..=29).step_by(2) {
            assert_eq!(
                build_anticirculant_graph(n).unwrap().loop_set(),
                units(n).unwrap()
            );
        }
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_r(5, 0).unwrap(), 4);
        assert_eq!(lambda_r(5, 1).unwrap(), -1);
        assert_eq!(lambda_r(4, 2).unwrap(), -2);
        assert_eq!(lambda_r(4, 1).unwrap(), 0);
        assert_eq!(lambda_r(1, 0).unwrap(), 1);
        assert!(lambda_r(5, 3).is_err());
        for n in 1..60 {
            for r in 0..=n / 2 {
                let z = lambda_r_numeric(n, r).unwrap();
                assert!((z.re - lambda_r(n, r).unwrap() as f64).abs() < 1e-9);
                assert!(z.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn anticirculant_charpolys() {
        assert_eq!(charpoly_anticirculant(3).unwrap(), poly(&[2, -1, -2, 1]));
        assert_eq!(charpoly_anticirculant(4).unwrap(), poly(&[0, 0, -4, 0, 1]));
        assert_eq!(charpoly_anticirculant(1).unwrap(), poly(&[-1, 1]));
        for n in 1..=10 {
            let x = build_anticirculant_graph(n).unwrap();
            assert_eq!(
                charpoly_anticirculant(n).unwrap(),
                charpoly_sachs(&x),
                "n = {n}"
            );
        }
    }

    #[test]
    fn even_cayley() {
        assert_eq!(charpoly_cayley_even(4).unwrap(), poly(&[0, 0, -4, 0, 1]));
        assert_eq!(charpoly_cayley_even(2).unwrap(), poly(&[-1, 0, 1]));
        assert_eq!(
            charpoly_cayley_even(6).unwrap(),
            charpoly_of_graph(&build_unitary_cayley(6).unwrap())
        );
        assert!(charpoly_cayley_even(5).is_err());
        assert!(charpoly_cayley_even(0).is_err());
    }

    #[test]
    fn odd_cayley() {
        let engine = CharpolyEngine::new(LeafMethod::Sachs);
        assert_eq!(
            charpoly_cayley_odd(3, &engine).unwrap(),
            poly(&[0, -2, 0, 1])
        );
        assert_eq!(charpoly_cayley_odd(1, &engine).unwrap(), poly(&[0, 1]));
        assert_eq!(
            charpoly_cayley_odd(5, &engine).unwrap(),
            charpoly_of_graph(&build_unitary_cayley(5).unwrap())
        );
        assert!(charpoly_cayley_odd(4, &engine).is_err());
    }

    #[test]
    fn spectra() {
        let r4 = spectrum_report(4).unwrap();
        assert_eq!(
            (r4.lambda_0, r4.lambda_half, r4.paired_magnitudes.clone()),
            (2, Some(-2), vec![0])
        );
        assert_eq!(r4.eigenvalues(), vec![-2, 0, 0, 2]);
        let r5 = spectrum_report(5).unwrap();
        assert_eq!(
            (r5.lambda_0, r5.lambda_half, r5.paired_magnitudes.clone()),
            (4, None, vec![1, 1])
        );
        assert!(r5.cayley_eigenvalues().is_none());
        let r2 = spectrum_report(2).unwrap();
        assert_eq!((r2.lambda_0, r2.lambda_half), (1, Some(-1)));
        assert!(r2.paired_magnitudes.is_empty());
    }
}
