//! Index combinatorics for Jordan matrices with a single eigenvalue.
//!
//! Variables of the ambient ring are indexed by triples `(i1, i2, i3)`:
//! `i1` picks the block size class, `i2` the copy within the class, `i3`
//! the row inside the block. The total order ranks a triple higher when its
//! components are lexicographically *smaller*, so enumerating triples in
//! natural ascending order walks the variables from highest to lowest rank.
//! That walk is exactly the flat variable order `x1 > x2 > ...`, and it
//! matches the row order of the Jordan matrix itself.

use crate::eigen::BlockShape;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::ring::{Monomial, Ring};
use std::cmp::Ordering;

/// 1-based triple `(i1, i2, i3)` indexing one variable/row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LambdaIndex {
    pub i1: usize,
    pub i2: usize,
    pub i3: usize,
}

impl LambdaIndex {
    pub fn new(i1: usize, i2: usize, i3: usize) -> LambdaIndex {
        LambdaIndex { i1, i2, i3 }
    }

    fn key(&self) -> (usize, usize, usize) {
        (self.i1, self.i2, self.i3)
    }
}

impl PartialOrd for LambdaIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LambdaIndex {
    /// `(i1,i2,i3) > (j1,j2,j3)` iff `i1<j1`, or `i1=j1 ∧ i2<j2`, or
    /// `i1=j1 ∧ i2=j2 ∧ i3<j3`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key()).reverse()
    }
}

/// All triples in descending rank (= ascending flat variable index).
pub fn lambda_set(shape: &[BlockShape]) -> Vec<LambdaIndex> {
    let mut out = Vec::new();
    for (c, b) in shape.iter().enumerate() {
        for i2 in 1..=b.multiplicity {
            for i3 in 1..=b.size {
                out.push(LambdaIndex::new(c + 1, i2, i3));
            }
        }
    }
    out
}

pub fn total_dimension(shape: &[BlockShape]) -> usize {
    shape.iter().map(|b| b.size * b.multiplicity).sum()
}

/// Flat variable index of a triple (0-based).
pub fn flat_index(shape: &[BlockShape], idx: LambdaIndex) -> usize {
    let mut offset = 0usize;
    for b in &shape[..idx.i1 - 1] {
        offset += b.size * b.multiplicity;
    }
    offset + (idx.i2 - 1) * shape[idx.i1 - 1].size + (idx.i3 - 1)
}

pub fn block_size(shape: &[BlockShape], i1: usize) -> usize {
    shape[i1 - 1].size
}

/// Successor inside the block: `(i1, i2, i3+1)` when it exists.
pub fn idx_plus(shape: &[BlockShape], i: LambdaIndex) -> Option<LambdaIndex> {
    (i.i3 < block_size(shape, i.i1)).then(|| LambdaIndex::new(i.i1, i.i2, i.i3 + 1))
}

/// Predecessor inside the block: `(i1, i2, i3−1)` when it exists.
pub fn idx_minus(i: LambdaIndex) -> Option<LambdaIndex> {
    (i.i3 >= 2).then(|| LambdaIndex::new(i.i1, i.i2, i.i3 - 1))
}

/// Top row of the block: `(i1, i2, 1)`.
pub fn idx_star(i: LambdaIndex) -> LambdaIndex {
    LambdaIndex::new(i.i1, i.i2, 1)
}

/// Companion of `idx_star` for binomial rewriting: `(j1, j2, i3+j3)`.
pub fn pair_star(i: LambdaIndex, j: LambdaIndex) -> LambdaIndex {
    LambdaIndex::new(j.i1, j.i2, i.i3 + j.i3)
}

/// Classes of index pairs `(i, j)` with `i > j`, mirroring which rows of
/// the Jordan matrix are interior (carry a superdiagonal 1) or final.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaClass {
    /// Both rows interior, `i3 + j3 ≥ r_{j1} + 1`.
    Gamma1,
    /// Both rows interior, `i3 + j3 ≤ r_{j1}`.
    Gamma2,
    /// `j` is a final row.
    Gamma3,
    /// `i` is a final row.
    Gamma4,
    /// Both rows final: the minor vanishes identically.
    Zero,
}

/// Classifies a pair `i > j`.
pub fn gamma_classify(shape: &[BlockShape], i: LambdaIndex, j: LambdaIndex) -> Result<GammaClass> {
    if i <= j {
        return Err(Error::InvalidArgument(
            "gamma classification needs i > j in the index order".into(),
        ));
    }
    let ri = block_size(shape, i.i1);
    let rj = block_size(shape, j.i1);
    let interior_i = i.i3 < ri;
    let interior_j = j.i3 < rj;
    Ok(match (interior_i, interior_j) {
        (true, true) => {
            if i.i3 + j.i3 > rj {
                GammaClass::Gamma1
            } else {
                GammaClass::Gamma2
            }
        }
        (true, false) => GammaClass::Gamma3,
        (false, true) => GammaClass::Gamma4,
        (false, false) => GammaClass::Zero,
    })
}

fn var_mono(shape: &[BlockShape], n: usize, a: LambdaIndex, b: LambdaIndex) -> Monomial {
    let mut exps = vec![0u32; n];
    exps[flat_index(shape, a)] += 1;
    exps[flat_index(shape, b)] += 1;
    Monomial::from_exps(exps)
}

/// The `(i, j)`-minor of `(J_λ x | x)` together with its class:
/// `x(i⁺)x(j) − x(i)x(j⁺)` on Γ1 ∪ Γ2, `x(i⁺)x(j)` on Γ3, `−x(i)x(j⁺)` on
/// Γ4, and 0 otherwise. The value does not depend on λ.
pub fn gamma_minor(
    shape: &[BlockShape],
    ring: &Ring,
    i: LambdaIndex,
    j: LambdaIndex,
) -> Result<(GammaClass, Polynomial)> {
    let class = gamma_classify(shape, i, j)?;
    let n = ring.num_vars();
    let one = Rat::from_integer(1.into());
    let poly = match class {
        GammaClass::Gamma1 | GammaClass::Gamma2 => {
            let ip = idx_plus(shape, i).expect("interior row");
            let jp = idx_plus(shape, j).expect("interior row");
            Polynomial::from_terms(
                ring,
                vec![
                    (one.clone(), var_mono(shape, n, ip, j)),
                    (-one, var_mono(shape, n, i, jp)),
                ],
            )
        }
        GammaClass::Gamma3 => {
            let ip = idx_plus(shape, i).expect("interior row");
            Polynomial::from_terms(ring, vec![(one, var_mono(shape, n, ip, j))])
        }
        GammaClass::Gamma4 => {
            let jp = idx_plus(shape, j).expect("interior row");
            Polynomial::from_terms(ring, vec![(-one, var_mono(shape, n, i, jp))])
        }
        GammaClass::Zero => Polynomial::zero(ring),
    };
    Ok((class, poly))
}

/// All pairs `(i, j)` with `i > j`, i.e. `i` earlier in `lambda_set` order.
pub fn gamma_pairs(shape: &[BlockShape]) -> Vec<(LambdaIndex, LambdaIndex)> {
    let lam = lambda_set(shape);
    let mut out = Vec::new();
    for a in 0..lam.len() {
        for b in a + 1..lam.len() {
            out.push((lam[a], lam[b]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(data: &[(usize, usize)]) -> Vec<BlockShape> {
        data.iter().map(|&(r, k)| BlockShape::new(r, k)).collect()
    }

    #[test]
    fn order_is_reverse_lex_on_triples() {
        let a = LambdaIndex::new(1, 1, 1);
        let b = LambdaIndex::new(1, 1, 2);
        let c = LambdaIndex::new(2, 1, 1);
        assert!(a > b);
        assert!(b > c);
    }

    #[test]
    fn flat_index_matches_enumeration() {
        let s = shape(&[(4, 1), (3, 1), (2, 1)]);
        let lam = lambda_set(&s);
        assert_eq!(lam.len(), 9);
        for (k, idx) in lam.iter().enumerate() {
            assert_eq!(flat_index(&s, *idx), k);
        }
        // descending variable rank along the enumeration
        for w in lam.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(flat_index(&s, LambdaIndex::new(3, 1, 1)), 7);
    }

    #[test]
    fn gamma_classification_examples() {
        let s = shape(&[(4, 1), (3, 1), (2, 1)]);
        // i3 + j3 = 5 ≥ r2 + 1 = 4
        assert_eq!(
            gamma_classify(&s, LambdaIndex::new(1, 1, 3), LambdaIndex::new(2, 1, 2)).unwrap(),
            GammaClass::Gamma1
        );
        // both final rows
        assert_eq!(
            gamma_classify(&s, LambdaIndex::new(1, 1, 4), LambdaIndex::new(2, 1, 3)).unwrap(),
            GammaClass::Zero
        );
        // 1 + 1 ≤ 3
        assert_eq!(
            gamma_classify(&s, LambdaIndex::new(1, 1, 1), LambdaIndex::new(2, 1, 1)).unwrap(),
            GammaClass::Gamma2
        );
        assert!(
            gamma_classify(&s, LambdaIndex::new(2, 1, 1), LambdaIndex::new(1, 1, 1)).is_err()
        );
    }
}
