//! Dense univariate polynomials over the rationals.
//!
//! Support type for characteristic polynomials and Sylvester-matrix
//! resultants. Coefficients are stored ascending with no trailing zeros.

use crate::error::{Error, Result};
use crate::rat::Rat;
use num::traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    /// The monomial `t`.
    pub fn x() -> UniPoly {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> UniPoly {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * Rat::from_integer(((k + 1) as i64).into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if div.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let d = div.degree().unwrap();
        let lc = div.leading_coeff();
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = rem.leading_coeff() / lc.clone();
            let shift = rd - d;
            quo[shift] = factor.clone();
            // rem -= factor * t^shift * div
            let mut coeffs = rem.coeffs;
            for (k, c) in div.coeffs.iter().enumerate() {
                coeffs[k + shift] -= &factor * c;
            }
            rem = UniPoly::from_coeffs(coeffs);
        }
        Ok((UniPoly::from_coeffs(quo), rem))
    }

    /// Exact division; errors if the remainder is non-zero.
    pub fn exact_div(&self, div: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(div)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistency("inexact polynomial division".into()))
        }
    }

    /// Removes a root exactly: division by `(t - root)`.
    pub fn deflate_root(&self, root: &Rat) -> Result<UniPoly> {
        let div = UniPoly::from_coeffs(vec![-root.clone(), Rat::one()]);
        self.exact_div(&div)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match k {
                0 => abs.to_string(),
                1 if abs.is_one() => var.to_string(),
                1 => format!("{abs}*{var}"),
                _ if abs.is_one() => format!("{var}^{k}"),
                _ => format!("{abs}*{var}^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Determinant of a square matrix over the univariate polynomial ring by
/// fraction-free (Bareiss) elimination; every division is exact in the
/// polynomial ring.
pub fn det_bareiss(mut m: Vec<Vec<UniPoly>>) -> Result<UniPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension("Bareiss needs a square matrix".into()));
    }
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(UniPoly::zero());
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}
