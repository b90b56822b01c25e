//! Hilbert functions by staircase counting, closed-form comparison,
//! dimension/degree extraction, and Jordan-type reconstruction from
//! component invariants.

use crate::decomposition::ComponentReport;
use crate::eigen::{BlockShape, EigenvalueBlocks, JordanSpec};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, EngineConfig};
use crate::ideal::Ideal;
use crate::rat::Rat;
use crate::ring::{Monomial, MonomialOrder};
use std::collections::BTreeMap;

/// Exact values `H(0), H(1), ..., H(t_max)` of a Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSample {
    pub values: Vec<u64>,
}

impl HilbertSample {
    pub fn t_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Counts monomials of degree `t` in `n` variables outside the monomial
/// ideal generated by `gens`.
fn count_standard(n: usize, t: u32, gens: &[Monomial]) -> u64 {
    // generators of degree > t cannot divide a degree-t monomial
    let live: Vec<&Monomial> = gens.iter().filter(|g| g.degree() <= t).collect();
    let mut exps = vec![0u32; n];
    fn walk(exps: &mut Vec<u32>, var: usize, remaining: u32, live: &[&Monomial]) -> u64 {
        let n = exps.len();
        if var + 1 == n {
            exps[var] = remaining;
            let standard = !live.iter().any(|g| {
                g.exps().iter().zip(exps.iter()).all(|(a, b)| a <= b)
            });
            exps[var] = 0;
            return u64::from(standard);
        }
        let mut acc = 0u64;
        for e in 0..=remaining {
            exps[var] = e;
            // prune: a generator supported on the assigned prefix kills the
            // whole subtree
            let dead = live.iter().any(|g| {
                g.exps()[..=var]
                    .iter()
                    .zip(exps[..=var].iter())
                    .all(|(a, b)| a <= b)
                    && g.exps()[var + 1..].iter().all(|&a| a == 0)
            });
            if !dead {
                acc += walk(exps, var + 1, remaining - e, live);
            }
            exps[var] = 0;
        }
        acc
    }
    if n == 0 {
        return u64::from(t == 0 && live.is_empty());
    }
    walk(&mut exps, 0, t, &live)
}

/// Hilbert function of `R/I` by counting standard monomials of the grevlex
/// initial ideal, degree by degree. Requires homogeneous generators.
pub fn hilbert_function(ideal: &Ideal, t_max: usize) -> Result<HilbertSample> {
    hilbert_function_with(ideal, t_max, &EngineConfig::default())
}

pub fn hilbert_function_with(
    ideal: &Ideal,
    t_max: usize,
    cfg: &EngineConfig,
) -> Result<HilbertSample> {
    for g in ideal.generators() {
        if !g.is_homogeneous() {
            return Err(Error::Validation(format!(
                "non-homogeneous generator {g}"
            )));
        }
    }
    let gb = buchberger_with(ideal, &MonomialOrder::Grevlex, cfg)?;
    let initial: Vec<Monomial> = gb
        .elements()
        .iter()
        .map(|p| {
            p.leading_term(&MonomialOrder::Grevlex)
                .expect("basis elements are non-zero")
                .monomial
                .clone()
        })
        .collect();
    let n = ideal.ring().num_vars();
    if initial.iter().any(|m| m.is_one()) {
        // unit ideal: quotient is zero in every degree
        return Ok(HilbertSample {
            values: vec![0; t_max + 1],
        });
    }
    let values = (0..=t_max as u32)
        .map(|t| count_standard(n, t, &initial))
        .collect();
    Ok(HilbertSample { values })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial fits u64 at this scale")
}

/// The closed-form Hilbert polynomial of the `j`-th component:
/// `r_j · C(t + k_1+...+k_j − 1, t)`. Valid for `t ≥ 1`; at `t = 0` the
/// staircase count is 1 while this formula may exceed 1.
pub fn closed_form(shape: &[BlockShape], j: usize, t: usize) -> Result<u64> {
    if j == 0 || j > shape.len() {
        return Err(Error::InvalidArgument(format!(
            "component index {j} out of range"
        )));
    }
    let ksum: usize = shape[..j].iter().map(|b| b.multiplicity).sum();
    let rj = shape[j - 1].size as u64;
    let t = t as u64;
    Ok(rj * binom(t + ksum as u64 - 1, t))
}

/// Extracts (dimension, degree) from a sample by finite differences on the
/// tail `t ≥ 1`: dimension is the degree of the eventual polynomial and the
/// scheme degree is its leading coefficient times `dimension!` — the
/// constant the difference pyramid stabilizes to.
///
/// A candidate dimension `d` is accepted when the last `d + 2` points (one
/// more when available) lie on a single degree-`d` polynomial.
pub fn dim_degree(sample: &HilbertSample) -> Result<(usize, u64)> {
    if sample.values.len() < 3 {
        return Err(Error::InsufficientSample("need t_max ≥ 2".into()));
    }
    let tail: Vec<i128> = sample.values[1..].iter().map(|&v| v as i128).collect();
    if tail.iter().all(|&v| v == 0) {
        return Err(Error::Validation(
            "empty scheme: Hilbert function vanishes for t ≥ 1".into(),
        ));
    }
    let m = tail.len();
    for d in 0..m.saturating_sub(1) {
        let w = (d + 3).min(m);
        let mut level: Vec<i128> = tail[m - w..].to_vec();
        for _ in 0..d {
            level = level.windows(2).map(|p| p[1] - p[0]).collect();
        }
        let top: Vec<i128> = level.windows(2).map(|p| p[1] - p[0]).collect();
        if top.iter().all(|&v| v == 0) {
            let c = *level.last().expect("window is non-empty");
            if c > 0 {
                return Ok((d, c as u64));
            }
        }
    }
    Err(Error::InsufficientSample(format!(
        "differences not stable by t_max = {}",
        sample.t_max()
    )))
}

/// Staircase measurement with the sample length raised automatically (8,
/// then 12, then 16) until the finite differences stabilize.
pub fn measured_dim_degree(ideal: &Ideal, cfg: &EngineConfig) -> Result<(usize, u64)> {
    let mut last_err = None;
    for t_max in [8usize, 12, 16] {
        let sample = hilbert_function_with(ideal, t_max, cfg)?;
        match dim_degree(&sample) {
            Ok(res) => return Ok(res),
            Err(e @ Error::InsufficientSample(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::InsufficientSample("t_max cap reached".into())))
}

/// Rebuilds the Jordan type from component (dimension, degree) data: within
/// one eigenvalue the degrees are the block sizes `r_j` and the dimensions
/// determine multiplicities through `k_1 + ... + k_j = dimension_j + 1`.
pub fn reconstruct_jordan(reports: &[ComponentReport]) -> Result<JordanSpec> {
    if reports.is_empty() {
        return Err(Error::Inconsistency("no components to reconstruct from".into()));
    }
    let mut by_lambda: BTreeMap<Rat, Vec<(usize, usize)>> = BTreeMap::new();
    for rep in reports {
        by_lambda
            .entry(rep.lambda.clone())
            .or_default()
            .push((rep.degree, rep.dimension));
    }
    let mut eigenvalues = Vec::new();
    for (lambda, mut data) in by_lambda {
        // descending block size
        data.sort_by_key(|&(degree, _)| std::cmp::Reverse(degree));
        let mut blocks = Vec::new();
        let mut prev_dim: Option<usize> = None;
        for (degree, dim) in data {
            if degree == 0 {
                return Err(Error::Inconsistency("component of degree zero".into()));
            }
            let k = match prev_dim {
                None => dim + 1,
                Some(p) => {
                    if dim <= p {
                        return Err(Error::Inconsistency(
                            "component dimensions not strictly increasing".into(),
                        ));
                    }
                    dim - p
                }
            };
            blocks.push((degree, k));
            prev_dim = Some(dim);
        }
        eigenvalues.push(EigenvalueBlocks::new(lambda, blocks));
    }
    JordanSpec::new(eigenvalues)
}
