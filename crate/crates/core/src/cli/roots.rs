//! Numeric real roots of integer polynomials.
//!
//! Method: exact square-free decomposition (Yun) over the rationals, then for
//! each square-free factor an exact Sturm sequence and bisection at dyadic
//! points starting from a power-of-two Cauchy bound. Integer roots inside the
//! bound are hit exactly by the dyadic midpoints. Only the final root values
//! are converted to `f64`; each is then checked by its residual against the
//! original polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::IntPolynomial;

/// A real root and its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("found {found} real roots counting multiplicity, polynomial has degree {degree}")]
    NotAllReal { found: usize, degree: usize },
    #[error("bisection did not isolate a root after {0} steps")]
    NoConvergence(usize),
    #[error("residual {residual:e} at {root} exceeds bound {bound:e}")]
    Residual {
        root: f64,
        residual: f64,
        bound: f64,
    },
}

const MAX_BISECTIONS: usize = 400;
const ISOLATION_WIDTH: f64 = 1e-13;

type Rat = BigRational;

// Rational polynomial, constant first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<Rat>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        RatPoly(
            p.coefficients()
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
        .trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(lead) => RatPoly(self.0.into_iter().map(|c| c / &lead).collect()),
            None => self,
        }
    }

    fn derivative(&self) -> Self {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn sub(&self, other: &RatPoly) -> RatPoly {
        let len = self.0.len().max(other.0.len());
        let zero = Rat::zero();
        RatPoly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
        .trim()
    }

    fn neg(&self) -> RatPoly {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }

    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        let mut quot = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / &lead;
            if !factor.is_zero() {
                for (i, c) in divisor.0.iter().enumerate() {
                    rem[top - dd + i] -= &factor * c;
                }
            }
            quot[top - dd] = factor;
            rem.pop();
        }
        (RatPoly(quot).trim(), RatPoly(rem).trim())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

// Yun's algorithm: returns (square-free factor, multiplicity) pairs.
fn square_free_factors(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a = f.gcd(&df);
    let mut b = f.div_rem(&a).0;
    let c = df.div_rem(&a).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        if !a.is_constant() {
            out.push((a, i));
        }
        d = c.sub(&next_b.derivative());
        b = next_b;
        i += 1;
    }
    out
}

struct Sturm(Vec<RatPoly>);

impl Sturm {
    fn new(f: &RatPoly) -> Self {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].degree().is_none() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.degree().is_none() {
                break;
            }
            seq.push(r.neg());
        }
        Sturm(seq)
    }

    fn variations(&self, x: &Rat) -> usize {
        let signs: Vec<i8> = self
            .0
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    // distinct roots in (a, b]
    fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn power_of_two_bound(f: &RatPoly) -> Rat {
    let d = f.degree().expect("non-constant");
    let lead = f.0[d].abs();
    let max_ratio = f.0[..d]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rat::zero(), |m, r| if r > m { r } else { m });
    let bound = Rat::one() + max_ratio;
    let mut pow = Rat::one();
    while pow <= bound {
        pow *= Rat::from_integer(BigInt::from(2));
    }
    pow
}

fn isolate(f: &RatPoly) -> Result<Vec<f64>, RootError> {
    let sturm = Sturm::new(f);
    let bound = power_of_two_bound(f);
    let two = Rat::from_integer(BigInt::from(2));
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, 0usize)];
    while let Some((a, b, depth)) = stack.pop() {
        let n = sturm.count(&a, &b);
        if n == 0 {
            continue;
        }
        if depth > MAX_BISECTIONS {
            return Err(RootError::NoConvergence(depth));
        }
        let width = (&b - &a).to_f64().unwrap_or(f64::INFINITY);
        if n == 1 && f.sign_at(&b) == 0 {
            roots.push(b.to_f64().unwrap_or(f64::NAN));
            continue;
        }
        if n == 1 && width < ISOLATION_WIDTH {
            roots.push(((&a + &b) / &two).to_f64().unwrap_or(f64::NAN));
            continue;
        }
        let mid = (&a + &b) / &two;
        stack.push((mid.clone(), b, depth + 1));
        stack.push((a, mid, depth + 1));
    }
    Ok(roots)
}

/// All real roots of `p` with multiplicities, ascending. Fails unless every
/// root is real and each passes `|p(r)| <= tolerance * Σ |c_i| max(1, |r|)^i`.
pub fn real_roots(p: &IntPolynomial, tolerance: f64) -> Result<Vec<Root>, RootError> {
    let f = RatPoly::from_int(p);
    let degree = f.degree().unwrap_or(0);
    let mut roots = Vec::new();
    for (factor, multiplicity) in square_free_factors(&f) {
        for value in isolate(&factor.monic())? {
            roots.push(Root {
                value,
                multiplicity,
            });
        }
    }
    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    let found: usize = roots.iter().map(|r| r.multiplicity).sum();
    if found != degree {
        return Err(RootError::NotAllReal { found, degree });
    }
    for r in &roots {
        let residual = p.eval_f64(r.value).abs();
        let scale: f64 = p
            .coefficients()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.to_f64().unwrap_or(f64::INFINITY).abs() * r.value.abs().max(1.0).powi(i as i32)
            })
            .sum();
        let bound = tolerance * scale;
        if residual > bound {
            return Err(RootError::Residual {
                root: r.value,
                residual,
                bound,
            });
        }
    }
    Ok(roots)
}
