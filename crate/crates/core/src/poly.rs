//! Multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored strictly descending under grevlex, which makes the
//! representation canonical: two construction routes for the same polynomial
//! produce identical term lists. Operations that work under a different
//! monomial order re-sort on the fly.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::{Monomial, MonomialOrder, Ring};
use num::traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rat,
    pub monomial: Monomial,
}

/// A polynomial over the rationals in a fixed ring.
///
/// Invariants: no zero coefficients, no duplicate monomials, terms strictly
/// descending under grevlex. The zero polynomial has an empty term list.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rat) -> Polynomial {
        Polynomial::from_terms(ring, vec![(c, Monomial::one(ring.num_vars()))])
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, Rat::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            vec![(Rat::one(), Monomial::var(ring.num_vars(), i))],
        )
    }

    /// Builds a polynomial from raw terms: merges duplicates, drops zeros,
    /// sorts canonically.
    pub fn from_terms(ring: &Ring, terms: Vec<(Rat, Monomial)>) -> Polynomial {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, monomial)| {
                debug_assert_eq!(monomial.num_vars(), ring.num_vars());
                Term { coeff, monomial }
            })
            .collect();
        let ord = MonomialOrder::Grevlex;
        terms.sort_by(|a, b| ord.cmp_mono(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = t0.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let ord = MonomialOrder::Grevlex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match ord.cmp_mono(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: c * &t.coeff,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, c: &Rat, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: c * &t.coeff,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for t in &other.terms {
            acc = acc.checked_add(&self.mul_term(&t.coeff, &t.monomial))?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`. All images
    /// must live in one common ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::Dimension(format!(
                "substitution needs {} images, got {}",
                self.ring.num_vars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => return Err(Error::InvalidArgument("empty substitution".into())),
        };
        for p in images {
            if p.ring() != &target {
                return Err(Error::RingMismatch);
            }
        }
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.monomial.exps().iter().enumerate() {
                if e > 0 {
                    prod = prod.checked_mul(&images[i].pow(e))?;
                }
            }
            acc = acc.checked_add(&prod)?;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::Dimension("evaluation point length".into()));
        }
        let mut acc = Rat::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.monomial.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Leading term under `ord` (max scan; grevlex hits the stored head).
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<&Term> {
        if *ord == MonomialOrder::Grevlex {
            return self.terms.first();
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp_mono(&a.monomial, &b.monomial))
    }

    /// Terms sorted strictly descending under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<Term> {
        let mut ts = self.terms.clone();
        if *ord != MonomialOrder::Grevlex {
            ts.sort_by(|a, b| ord.cmp_mono(&b.monomial, &a.monomial));
        }
        ts
    }

    /// Leading-coefficient-1 rescaling.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some(lt) => {
                let inv = Rat::one() / lt.coeff.clone();
                self.scale(&inv)
            }
        }
    }

    /// Re-embeds into `target` with variable `i` mapped to `i + offset`.
    pub fn shift_vars(&self, target: &Ring, offset: usize) -> Polynomial {
        let n = target.num_vars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u32; n];
                for (i, &e) in t.monomial.exps().iter().enumerate() {
                    exps[i + offset] = e;
                }
                (t.coeff.clone(), Monomial::from_exps(exps))
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Inverse of [`Polynomial::shift_vars`]: drops the first `offset` variables, which
    /// must not occur.
    pub fn unshift_vars(&self, target: &Ring, offset: usize) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let exps = t.monomial.exps();
                if exps[..offset].iter().any(|&e| e != 0) {
                    return Err(Error::InvalidArgument(
                        "polynomial involves an eliminated variable".into(),
                    ));
                }
                Ok((t.coeff.clone(), Monomial::from_exps(exps[offset..].to_vec())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn to_string_with_order(&self, ord: &MonomialOrder) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            return "0".into();
        }
        for (k, t) in self.sorted_terms(ord).iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_monomial(&self.ring, &t.monomial);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&abs.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

fn fmt_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_order(&MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
