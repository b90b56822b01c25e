//! Eigenscheme ideals, Jordan matrices, and similarity transport.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::QMatrix;
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::ring::Ring;
use num::traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// One run of equal-size Jordan blocks: `multiplicity` copies of size
/// `size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockShape {
    pub size: usize,
    pub multiplicity: usize,
}

impl BlockShape {
    pub fn new(size: usize, multiplicity: usize) -> BlockShape {
        BlockShape { size, multiplicity }
    }
}

/// All Jordan data attached to one eigenvalue: block sizes strictly
/// decreasing, each with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueBlocks {
    pub lambda: Rat,
    pub blocks: Vec<BlockShape>,
}

impl EigenvalueBlocks {
    pub fn new(lambda: Rat, blocks: Vec<(usize, usize)>) -> EigenvalueBlocks {
        EigenvalueBlocks {
            lambda,
            blocks: blocks
                .into_iter()
                .map(|(r, k)| BlockShape::new(r, k))
                .collect(),
        }
    }

    /// Dimension contributed by this eigenvalue: Σ k_j · r_j.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.size * b.multiplicity).sum()
    }
}

/// A Jordan matrix up to block permutation: pairwise distinct eigenvalues,
/// each carrying strictly decreasing block sizes with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSpec {
    eigenvalues: Vec<EigenvalueBlocks>,
}

impl JordanSpec {
    pub fn new(eigenvalues: Vec<EigenvalueBlocks>) -> Result<JordanSpec> {
        if eigenvalues.is_empty() {
            return Err(Error::Validation("spec needs at least one eigenvalue".into()));
        }
        let mut seen = BTreeSet::new();
        for eb in &eigenvalues {
            if !seen.insert(eb.lambda.clone()) {
                return Err(Error::Validation(format!(
                    "duplicate eigenvalue {}",
                    eb.lambda
                )));
            }
            if eb.blocks.is_empty() {
                return Err(Error::Validation("eigenvalue without blocks".into()));
            }
            for w in eb.blocks.windows(2) {
                if w[0].size <= w[1].size {
                    return Err(Error::Validation(
                        "block sizes must be strictly decreasing".into(),
                    ));
                }
            }
            if eb.blocks.iter().any(|b| b.size == 0 || b.multiplicity == 0) {
                return Err(Error::Validation("zero block size or multiplicity".into()));
            }
        }
        Ok(JordanSpec { eigenvalues })
    }

    /// Single-eigenvalue convenience constructor.
    pub fn single(lambda: Rat, blocks: Vec<(usize, usize)>) -> Result<JordanSpec> {
        JordanSpec::new(vec![EigenvalueBlocks::new(lambda, blocks)])
    }

    pub fn eigenvalues(&self) -> &[EigenvalueBlocks] {
        &self.eigenvalues
    }

    pub fn total_size(&self) -> usize {
        self.eigenvalues.iter().map(|eb| eb.dimension()).sum()
    }
}

impl fmt::Display for JordanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|eb| {
                let blocks: Vec<String> = eb
                    .blocks
                    .iter()
                    .map(|b| format!("({},{})", b.size, b.multiplicity))
                    .collect();
                format!("{}:[{}]", eb.lambda, blocks.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// The single Jordan block `J_{λ,r}`: λ on the diagonal, 1 on the
/// superdiagonal.
pub fn jordan_block(lambda: &Rat, r: usize) -> QMatrix {
    let mut m = QMatrix::zeros(r, r);
    for i in 0..r {
        *m.get_mut(i, i) = lambda.clone();
        if i + 1 < r {
            *m.get_mut(i, i + 1) = Rat::from_integer(1.into());
        }
    }
    m
}

/// Block-diagonal Jordan matrix in spec order: eigenvalues as listed, sizes
/// descending within an eigenvalue, each size repeated `multiplicity` times.
pub fn jordan_matrix(spec: &JordanSpec) -> QMatrix {
    let mut m = QMatrix::zeros(0, 0);
    for eb in spec.eigenvalues() {
        for b in &eb.blocks {
            for _ in 0..b.multiplicity {
                m = m.direct_sum(&jordan_block(&eb.lambda, b.size));
            }
        }
    }
    m
}

/// The natural ring of an `r × r` eigenscheme problem.
pub fn eigenscheme_ring(r: usize) -> Ring {
    Ring::new(r)
}

/// The eigenscheme ideal `I_A`: all 2×2 minors `(Ax)_i·x_j − (Ax)_j·x_i`
/// for `i < j`, zero minors dropped.
pub fn eigenscheme_ideal(a: &QMatrix) -> Result<Ideal> {
    if !a.is_square() {
        return Err(Error::Dimension("eigenscheme of a non-square matrix".into()));
    }
    let r = a.rows();
    let ring = eigenscheme_ring(r);
    let ax: Vec<Polynomial> = (0..r)
        .map(|i| {
            let mut acc = Polynomial::zero(&ring);
            for j in 0..r {
                if !a.get(i, j).is_zero() {
                    acc = &acc + &Polynomial::var(&ring, j).scale(a.get(i, j));
                }
            }
            acc
        })
        .collect();
    let mut minors = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let xi = Polynomial::var(&ring, i);
            let xj = Polynomial::var(&ring, j);
            let minor = &(&ax[i] * &xj) - &(&ax[j] * &xi);
            minors.push(minor);
        }
    }
    Ideal::new(&ring, minors)
}

/// Transports an ideal along a similarity.
///
/// Convention (frozen by tests): substituting `x ↦ Cx` into the generators,
/// so that `transport(eigenscheme_ideal(B), C) = eigenscheme_ideal(A)`
/// whenever `A = C⁻¹·B·C`. Composition reads
/// `transport(transport(I, C), D) = transport(I, C·D)`.
pub fn transport(ideal: &Ideal, c: &QMatrix) -> Result<Ideal> {
    if !c.is_square() || c.rows() != ideal.ring().num_vars() {
        return Err(Error::Dimension(
            "transport needs a square matrix of the ring's size".into(),
        ));
    }
    // invertibility gate
    if c.rank() < c.rows() {
        return Err(Error::InvalidArgument("transport by a singular matrix".into()));
    }
    let ring = ideal.ring();
    let images: Vec<Polynomial> = (0..c.rows())
        .map(|i| {
            let mut acc = Polynomial::zero(ring);
            for j in 0..c.cols() {
                if !c.get(i, j).is_zero() {
                    acc = &acc + &Polynomial::var(ring, j).scale(c.get(i, j));
                }
            }
            acc
        })
        .collect();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::rat::{rat, rat_int};

    #[test]
    fn spec_validation() {
        assert!(JordanSpec::single(rat_int(0), vec![(3, 1), (2, 2)]).is_ok());
        assert!(JordanSpec::single(rat_int(0), vec![(2, 1), (2, 1)]).is_err());
        assert!(JordanSpec::single(rat_int(0), vec![(1, 0)]).is_err());
        assert!(JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(1), vec![(1, 1)]),
            EigenvalueBlocks::new(rat_int(1), vec![(2, 1)]),
        ])
        .is_err());
    }

    #[test]
    fn jordan_matrix_shapes() {
        let spec = JordanSpec::single(rat_int(5), vec![(1, 3)]).unwrap();
        assert_eq!(jordan_matrix(&spec), QMatrix::identity(3).scale(&rat_int(5)));

        let spec = JordanSpec::single(rat_int(0), vec![(2, 1)]).unwrap();
        assert_eq!(jordan_matrix(&spec), QMatrix::from_int_rows(&[&[0, 1], &[0, 0]]));

        let spec = JordanSpec::single(rat(1, 2), vec![(4, 1), (3, 1), (2, 1)]).unwrap();
        let m = jordan_matrix(&spec);
        assert_eq!(m.rows(), 9);
        assert_eq!(*m.get(0, 1), rat_int(1));
        assert_eq!(*m.get(3, 4), rat_int(0)); // block boundary
        assert_eq!(*m.get(4, 5), rat_int(1));
        assert_eq!(*m.get(6, 7), rat_int(0));
    }

    #[test]
    fn eigenscheme_of_identity_is_zero() {
        let i = eigenscheme_ideal(&QMatrix::identity(3)).unwrap();
        assert!(i.is_zero_ideal());
    }

    #[test]
    fn eigenscheme_of_nilpotent_two_block() {
        let j = jordan_matrix(&JordanSpec::single(rat_int(0), vec![(2, 1)]).unwrap());
        let i = eigenscheme_ideal(&j).unwrap();
        let ring = eigenscheme_ring(2);
        let x2sq = crate::parse::parse_polynomial(&ring, "x2^2").unwrap();
        assert_eq!(i.generators(), &[x2sq]);
    }

    #[test]
    fn eigenscheme_generated_in_degree_two() {
        let a = QMatrix::from_int_rows(&[&[2, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let i = eigenscheme_ideal(&a).unwrap();
        assert!(!i.is_zero_ideal());
        for g in i.generators() {
            assert_eq!(g.degree(), Some(2));
            assert!(g.is_homogeneous());
        }
    }

    #[test]
    fn transport_by_identity() {
        let a = QMatrix::from_int_rows(&[&[4, 0, 1], &[2, 3, 2], &[1, 0, 4]]);
        let i = eigenscheme_ideal(&a).unwrap();
        let t = transport(&i, &QMatrix::identity(3)).unwrap();
        assert!(ideal_equal(&i, &t).unwrap());
    }

    #[test]
    fn transport_matches_similarity() {
        // A = C⁻¹ J C with J = diag(1,1,2)
        let j = jordan_matrix(
            &JordanSpec::new(vec![
                EigenvalueBlocks::new(rat_int(1), vec![(1, 2)]),
                EigenvalueBlocks::new(rat_int(2), vec![(1, 1)]),
            ])
            .unwrap(),
        );
        let c = QMatrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        let a = c.inverse().unwrap().mul(&j).unwrap().mul(&c).unwrap();
        let lhs = transport(&eigenscheme_ideal(&j).unwrap(), &c).unwrap();
        let rhs = eigenscheme_ideal(&a).unwrap();
        assert!(ideal_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn transport_rejects_singular() {
        let i = eigenscheme_ideal(&QMatrix::identity(2)).unwrap();
        let singular = QMatrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(transport(&i, &singular).is_err());
        let zero = Ideal::zero(&eigenscheme_ring(2));
        let c = QMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(transport(&zero, &c).unwrap().is_zero_ideal());
    }
}
