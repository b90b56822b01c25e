//! Closed-form structure of eigenscheme ideals of Jordan matrices: the
//! binomial generating sets, the reduced Gröbner basis, the primary
//! components with their radicals and dimension/degree data, cellularity
//! witnesses, the direct-sum splitting matrix, and the full multi-eigenvalue
//! decomposition. Everything here is produced combinatorially; the generic
//! engine in [`crate::groebner`] is the independent cross-check.

use crate::eigen::{eigenscheme_ideal, BlockShape, JordanSpec};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, ideal_equal_with, intersect_with, member_of_basis, reduce_basis,
    EngineConfig,
};
use crate::ideal::{GroebnerBasis, Ideal};
use crate::lambda::{
    flat_index, gamma_minor, gamma_pairs, idx_plus, idx_star, lambda_set, pair_star, GammaClass,
    LambdaIndex,
};
use crate::matrix::QMatrix;
use crate::oracle;
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::ring::{MonomialOrder, Ring};
use num::traits::Zero;

/// Ambient ring for a single-eigenvalue shape.
pub fn single_ring(shape: &[BlockShape]) -> Ring {
    Ring::new(crate::lambda::total_dimension(shape))
}

/// The ideal `I_λ` of a single-eigenvalue Jordan matrix, generated by the
/// non-zero minors. Independent of the eigenvalue.
pub fn single_eigenvalue_ideal(shape: &[BlockShape]) -> Ideal {
    let ring = single_ring(shape);
    let mut gens = Vec::new();
    for (i, j) in gamma_pairs(shape) {
        let (_, minor) = gamma_minor(shape, &ring, i, j).expect("i > j by construction");
        if !minor.is_zero() {
            gens.push(minor);
        }
    }
    Ideal::new(&ring, gens).expect("same ring")
}

/// The minimal (not reduced) Gröbner set `H`: minors on Γ1 ∪ Γ2 as
/// binomials, plus the pure monomials from Γ3 and Γ4.
pub fn basis_h(shape: &[BlockShape]) -> Vec<Polynomial> {
    let ring = single_ring(shape);
    let mut out = Vec::new();
    for (i, j) in gamma_pairs(shape) {
        let (class, minor) = gamma_minor(shape, &ring, i, j).expect("i > j by construction");
        match class {
            GammaClass::Gamma1 | GammaClass::Gamma2 | GammaClass::Gamma3 => out.push(minor),
            GammaClass::Gamma4 => out.push(minor.neg()), // drop the sign
            GammaClass::Zero => {}
        }
    }
    out
}

fn quadratic_mono(ring: &Ring, shape: &[BlockShape], a: LambdaIndex, b: LambdaIndex) -> Polynomial {
    let n = ring.num_vars();
    let mut exps = vec![0u32; n];
    exps[flat_index(shape, a)] += 1;
    exps[flat_index(shape, b)] += 1;
    Polynomial::from_terms(
        ring,
        vec![(Rat::from_integer(1.into()), crate::ring::Monomial::from_exps(exps))],
    )
}

/// The reduced grevlex Gröbner basis `G` of `I_λ`:
/// `x(i⁺)x(j)` over Γ1 ∪ Γ3 and `x(i⁺)x(j) − x(i*)x(j*)` over Γ2.
pub fn basis_g(shape: &[BlockShape]) -> GroebnerBasis {
    let ring = single_ring(shape);
    let mut elements = Vec::new();
    for (i, j) in gamma_pairs(shape) {
        match gamma_minor(shape, &ring, i, j)
            .expect("i > j by construction")
            .0
        {
            GammaClass::Gamma1 | GammaClass::Gamma3 => {
                let ip = idx_plus(shape, i).expect("interior row");
                elements.push(quadratic_mono(&ring, shape, ip, j));
            }
            GammaClass::Gamma2 => {
                let ip = idx_plus(shape, i).expect("interior row");
                let lead = quadratic_mono(&ring, shape, ip, j);
                let tail = quadratic_mono(&ring, shape, idx_star(i), pair_star(i, j));
                elements.push(&lead - &tail);
            }
            _ => {}
        }
    }
    let ord = MonomialOrder::Grevlex;
    elements.sort_by(|a, b| {
        ord.cmp_mono(
            &a.leading_term(&ord).unwrap().monomial,
            &b.leading_term(&ord).unwrap().monomial,
        )
    });
    GroebnerBasis::from_parts(ord, elements, true)
}

fn num_classes(shape: &[BlockShape]) -> usize {
    shape.len()
}

fn check_component_index(shape: &[BlockShape], j: usize) -> Result<()> {
    if j == 0 || j > num_classes(shape) {
        return Err(Error::InvalidArgument(format!(
            "component index {j} out of range 1..={}",
            num_classes(shape)
        )));
    }
    Ok(())
}

/// The sets `Λ_{j,1}` (rows past `r_j` in the first `j` classes) and
/// `Λ_{j,2}` (everything in later classes).
pub fn lambda_j_sets(
    shape: &[BlockShape],
    j: usize,
) -> Result<(Vec<LambdaIndex>, Vec<LambdaIndex>)> {
    check_component_index(shape, j)?;
    let rj = shape[j - 1].size;
    let mut j1 = Vec::new();
    let mut j2 = Vec::new();
    for idx in lambda_set(shape) {
        if idx.i1 <= j {
            if idx.i3 > rj {
                j1.push(idx);
            }
        } else {
            j2.push(idx);
        }
    }
    Ok((j1, j2))
}

/// `Θ_j`: the top rows of the first `j` classes — the non-zerodivisor
/// variables of the `j`-th component.
pub fn theta(shape: &[BlockShape], j: usize) -> Result<Vec<LambdaIndex>> {
    check_component_index(shape, j)?;
    Ok(lambda_set(shape)
        .into_iter()
        .filter(|idx| idx.i1 <= j && idx.i3 == 1)
        .collect())
}

fn vars_ideal(ring: &Ring, shape: &[BlockShape], idxs: &[LambdaIndex]) -> Vec<Polynomial> {
    idxs.iter()
        .map(|&i| Polynomial::var(ring, flat_index(shape, i)))
        .collect()
}

/// Generators of `q_{λ,j} = I_λ + I_j` in raw form (minors plus variables).
pub fn component_ideal_raw(shape: &[BlockShape], j: usize) -> Result<Ideal> {
    let ring = single_ring(shape);
    let (j1, j2) = lambda_j_sets(shape, j)?;
    let mut gens = single_eigenvalue_ideal(shape).generators().to_vec();
    gens.extend(vars_ideal(&ring, shape, &j1));
    gens.extend(vars_ideal(&ring, shape, &j2));
    Ideal::new(&ring, gens)
}

/// Gröbner basis `G ∪ G'_j` of the component `q_{λ,j}`, auto-reduced to the
/// canonical reduced form.
pub fn component_gb(shape: &[BlockShape], j: usize) -> Result<GroebnerBasis> {
    let ring = single_ring(shape);
    let (j1, j2) = lambda_j_sets(shape, j)?;
    let mut gens = basis_g(shape).elements().to_vec();
    gens.extend(vars_ideal(&ring, shape, &j1));
    gens.extend(vars_ideal(&ring, shape, &j2));
    Ok(reduce_basis(&gens, &ring, &MonomialOrder::Grevlex))
}

/// The radical `h_j = ⟨x(i) | i ∈ Λ \ Θ_j⟩` of the `j`-th component.
pub fn radical_single(shape: &[BlockShape], j: usize) -> Result<Ideal> {
    let ring = single_ring(shape);
    let th = theta(shape, j)?;
    let gens: Vec<Polynomial> = lambda_set(shape)
        .into_iter()
        .filter(|i| !th.contains(i))
        .map(|i| Polynomial::var(&ring, flat_index(shape, i)))
        .collect();
    Ideal::new(&ring, gens)
}

/// One primary component together with its invariants.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub lambda: Rat,
    pub j: usize,
    pub generators: Ideal,
    pub radical: Ideal,
    pub dimension: usize,
    pub degree: usize,
    /// `(r_j, k_1 + ... + k_j)`: the data behind the Hilbert polynomial
    /// `r_j · C(t + k_1+...+k_j − 1, t)`.
    pub hilbert_coeffs: (usize, usize),
}

/// The primary components of `I_λ` for a single eigenvalue, with closed-form
/// dimension (`k_1+…+k_j − 1`) and degree (`r_j`).
pub fn components_single(lambda: &Rat, shape: &[BlockShape]) -> Result<Vec<ComponentReport>> {
    let ring = single_ring(shape);
    let mut out = Vec::new();
    let mut ksum = 0usize;
    for (c, b) in shape.iter().enumerate() {
        let j = c + 1;
        ksum += b.multiplicity;
        let gb = component_gb(shape, j)?;
        out.push(ComponentReport {
            lambda: lambda.clone(),
            j,
            generators: gb.to_ideal(&ring),
            radical: radical_single(shape, j)?,
            dimension: ksum - 1,
            degree: b.size,
            hilbert_coeffs: (b.size, ksum),
        });
    }
    Ok(out)
}

/// Cellularity datum per variable: either a non-zerodivisor modulo the
/// component or nilpotent with its minimal measured exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableWitness {
    NonZeroDivisor,
    Nilpotent { exponent: u32 },
}

/// Classifies every variable modulo `q_{λ,j}`. Variables indexed by `Θ_j`
/// are non-zerodivisors; the rest are nilpotent, with the exponent found by
/// incremental membership search (capped at `2·r_1`) rather than trusted
/// from any closed-form candidate.
pub fn cellular_witnesses(shape: &[BlockShape], j: usize) -> Result<Vec<VariableWitness>> {
    let ring = single_ring(shape);
    let gb = component_gb(shape, j)?;
    let th = theta(shape, j)?;
    let cap = 2 * shape[0].size as u32;
    let mut out = Vec::new();
    for idx in lambda_set(shape) {
        if th.contains(&idx) {
            out.push(VariableWitness::NonZeroDivisor);
            continue;
        }
        let x = Polynomial::var(&ring, flat_index(shape, idx));
        let mut found = None;
        let mut power = x.clone();
        for e in 1..=cap {
            if member_of_basis(&power, &gb)? {
                found = Some(e);
                break;
            }
            power = &power * &x;
        }
        match found {
            Some(exponent) => out.push(VariableWitness::Nilpotent { exponent }),
            None => {
                return Err(Error::Inconsistency(format!(
                    "variable {} not nilpotent up to exponent {cap} in component {j}",
                    ring.var_name(flat_index(shape, idx))
                )))
            }
        }
    }
    Ok(out)
}

/// The splitting matrix for a direct sum `A ⊕ B`: rows and columns indexed
/// by `(α, β)` pairs in descending order, the row for `(α, β)` holding the
/// coordinates of `A[α,:]x·y_β − B[β,:]y·x_α` in the monomial basis
/// `x_i y_j`.
pub fn phi_matrix(a: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::Dimension("phi matrix needs square blocks".into()));
    }
    let r = a.rows();
    let s = b.rows();
    let n = r * s;
    let mut phi = QMatrix::zeros(n, n);
    for alpha in 0..r {
        for beta in 0..s {
            let row = alpha * s + beta;
            for i in 0..r {
                for j in 0..s {
                    let col = i * s + j;
                    let v = if (alpha, beta) == (i, j) {
                        a.get(alpha, alpha) - b.get(beta, beta)
                    } else if i == alpha {
                        -b.get(beta, j).clone()
                    } else if j == beta {
                        a.get(alpha, i).clone()
                    } else {
                        continue;
                    };
                    *phi.get_mut(row, col) = v;
                }
            }
        }
    }
    Ok(phi)
}

/// Does the eigenscheme ideal of `A ⊕ B` split as
/// `⟨L_A, y⟩ ∩ ⟨L_B, x⟩`? Exactly when the splitting matrix has full rank.
pub fn splits(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    let phi = phi_matrix(a, b)?;
    Ok(phi.rank() == phi.rows())
}

/// Ambient ring of a multi-eigenvalue spec: the variable blocks of the
/// eigenvalues in spec order, flattened.
pub fn general_ring(spec: &JordanSpec) -> Ring {
    Ring::new(spec.total_size())
}

/// Irredundant primary decomposition of the eigenscheme ideal of a Jordan
/// matrix: component `(i, j)` is the `j`-th single-eigenvalue component of
/// eigenvalue `i`, lifted into its variable block, plus the variables of
/// every other block.
pub fn decompose_general(spec: &JordanSpec) -> Result<Vec<ComponentReport>> {
    let ring = general_ring(spec);
    let n = ring.num_vars();
    let mut out = Vec::new();
    let mut offset = 0usize;
    for eb in spec.eigenvalues() {
        let dim = eb.dimension();
        let outside: Vec<Polynomial> = (0..n)
            .filter(|&v| v < offset || v >= offset + dim)
            .map(|v| Polynomial::var(&ring, v))
            .collect();
        for report in components_single(&eb.lambda, &eb.blocks)? {
            let mut gens: Vec<Polynomial> = report
                .generators
                .generators()
                .iter()
                .map(|g| g.shift_vars(&ring, offset))
                .collect();
            gens.extend(outside.iter().cloned());
            let canonical = reduce_basis(&gens, &ring, &MonomialOrder::Grevlex);

            let mut rad: Vec<Polynomial> = report
                .radical
                .generators()
                .iter()
                .map(|g| g.shift_vars(&ring, offset))
                .collect();
            rad.extend(outside.iter().cloned());

            out.push(ComponentReport {
                lambda: report.lambda,
                j: report.j,
                generators: canonical.to_ideal(&ring),
                radical: Ideal::new(&ring, rad)?,
                dimension: report.dimension,
                degree: report.degree,
                hilbert_coeffs: report.hilbert_coeffs,
            });
        }
        offset += dim;
    }
    Ok(out)
}

/// Decides diagonalizability through the ideal route: `A` is diagonalizable
/// iff `I_A` is radical, and the radical candidate is the intersection of
/// the linear ideals of the eigenspaces found by the classical oracle.
///
/// Requires the characteristic polynomial to split over the rationals.
pub fn diagonalizable_via_ideal(a: &QMatrix) -> Result<bool> {
    diagonalizable_via_ideal_with(a, &EngineConfig::default())
}

pub fn diagonalizable_via_ideal_with(a: &QMatrix, cfg: &EngineConfig) -> Result<bool> {
    let ia = eigenscheme_ideal(a)?;
    let ring = ia.ring().clone();
    let spaces = oracle::eigenspaces(a)?;
    let mut candidate: Option<Ideal> = None;
    for (_, basis) in &spaces {
        let linear = eigenspace_linear_ideal(&ring, basis, a.rows())?;
        candidate = Some(match candidate {
            None => linear,
            Some(prev) => intersect_with(&prev, &linear, cfg)?,
        });
    }
    let candidate = candidate.ok_or_else(|| {
        Error::UnsupportedField("matrix has no rational eigenvalues".into())
    })?;
    ideal_equal_with(&ia, &candidate, cfg)
}

/// Linear forms vanishing on the span of `basis` (the annihilator).
pub fn eigenspace_linear_ideal(ring: &Ring, basis: &[Vec<Rat>], dim: usize) -> Result<Ideal> {
    let rows: Vec<Vec<Rat>> = basis.to_vec();
    let m = QMatrix::from_rows(rows)?;
    let gens: Vec<Polynomial> = if basis.is_empty() {
        (0..dim).map(|i| Polynomial::var(ring, i)).collect()
    } else {
        m.kernel_basis()
            .into_iter()
            .map(|coeffs| {
                let mut acc = Polynomial::zero(ring);
                for (i, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc = &acc + &Polynomial::var(ring, i).scale(c);
                    }
                }
                acc
            })
            .collect()
    };
    Ideal::new(ring, gens)
}

/// Sanity handle used by tests: the eigenscheme ideal of the Jordan matrix
/// of a spec, which the decomposition must intersect down to.
pub fn jordan_ideal(spec: &JordanSpec) -> Ideal {
    eigenscheme_ideal(&crate::eigen::jordan_matrix(spec)).expect("jordan matrices are square")
}

/// Engine cross-check of the full decomposition identity
/// `∩ components = I_J`, returning the computed intersection.
pub fn intersection_of_components(
    reports: &[ComponentReport],
    ring: &Ring,
    cfg: &EngineConfig,
) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for rep in reports {
        acc = Some(match acc {
            None => rep.generators.clone(),
            Some(prev) => intersect_with(&prev, &rep.generators, cfg)?,
        });
    }
    let acc = acc.ok_or_else(|| Error::InvalidArgument("no components given".into()))?;
    // canonicalize for comparisons
    let gb = buchberger_with(&acc, &MonomialOrder::Grevlex, cfg)?;
    Ok(gb.to_ideal(ring))
}
