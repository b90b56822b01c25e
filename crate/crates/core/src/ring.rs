//! Polynomial rings, monomials, and monomial orders.
//!
//! Variables are ranked by index: `x1 > x2 > ... > xn`. Modules that index
//! variables by richer data (Jordan block coordinates, say) keep a bijection
//! onto this flat ranking.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct RingInner {
    names: Vec<String>,
}

/// An ambient polynomial ring over the rationals: a variable count plus
/// display names. Cheap to clone.
///
/// Equality compares variable counts only; names are display metadata.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    /// Ring in `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Ring {
        Ring(Arc::new(RingInner {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }))
    }

    pub fn with_names(names: Vec<String>) -> Ring {
        Ring(Arc::new(RingInner { names }))
    }

    pub fn num_vars(&self) -> usize {
        self.0.names.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars() == other.num_vars()
    }
}
impl Eq for Ring {}

/// A power product, stored as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * k).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// A total multiplicative order on monomials of a fixed ring, with `1`
/// minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher total degree wins; on a degree
    /// tie the monomial with the smaller exponent on the last variable where
    /// they differ wins.
    Grevlex,
    /// Plain lexicographic on the variable ranking.
    Lex,
    /// Block order: the first `split` variables are compared under `left`;
    /// only on a tie do the remaining variables decide under `right`. With
    /// the auxiliary variable placed in the first block this is an
    /// elimination order for it.
    Block {
        split: usize,
        left: Box<MonomialOrder>,
        right: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for the first `split` variables (grevlex in both
    /// blocks).
    pub fn elimination(split: usize) -> MonomialOrder {
        MonomialOrder::Block {
            split,
            left: Box::new(MonomialOrder::Grevlex),
            right: Box::new(MonomialOrder::Grevlex),
        }
    }

    /// Compares two monomials, checking that their lengths agree.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.exps.len() != b.exps.len() {
            return Err(Error::Dimension(format!(
                "monomials of lengths {} and {}",
                a.exps.len(),
                b.exps.len()
            )));
        }
        Ok(self.cmp_slices(&a.exps, &b.exps))
    }

    /// Comparison for monomials known to live in the same ring.
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        self.cmp_slices(&a.exps, &b.exps)
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        // smaller exponent on the least variable wins
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split, left, right } => {
                let s = (*split).min(a.len());
                match left.cmp_slices(&a[..s], &b[..s]) {
                    Ordering::Equal => right.cmp_slices(&a[s..], &b[s..]),
                    ord => ord,
                }
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split, .. } => write!(f, "block({split})"),
        }
    }
}
