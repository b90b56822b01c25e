//! Classical exact linear algebra used as an independent oracle:
//! characteristic polynomials, rational spectra, rank-sequence Jordan types,
//! eigenspace and generalized-eigenspace bases, Jordan basis assembly, and
//! the pencil-discriminant degree experiment.

use crate::eigen::{jordan_matrix, EigenvalueBlocks, JordanSpec};
use crate::error::{Error, Result};
use crate::matrix::{EchelonSet, QMatrix};
use crate::rat::Rat;
use crate::unipoly::{det_bareiss, UniPoly};
use num::bigint::Sign;
use num::traits::{One, Signed, Zero};
use num::{BigInt, Integer};
use std::collections::BTreeMap;

/// Monic characteristic polynomial `det(tI − A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub poly: UniPoly,
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence (exact
/// over the rationals).
pub fn char_poly(a: &QMatrix) -> Result<CharPoly> {
    if !a.is_square() {
        return Err(Error::Dimension(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let r = a.rows();
    let mut coeffs = vec![Rat::zero(); r + 1];
    coeffs[r] = Rat::one();
    let mut m = a.clone();
    for k in 1..=r {
        let c = -(m.trace()? / Rat::from_integer((k as i64).into()));
        coeffs[r - k] = c.clone();
        if k < r {
            m = a.mul(&m.shift(&c)?)?;
        }
    }
    Ok(CharPoly {
        poly: UniPoly::from_coeffs(coeffs),
    })
}

// ---- integer factoring support for rational root candidates

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num::integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5] {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let mut d = m;
        // small trial division first, rho for the hard cofactors
        let mut found = false;
        let mut t = 7u64;
        while t * t <= d && t < 100_000 {
            if d.is_multiple_of(t) {
                stack.push(t);
                stack.push(d / t);
                found = true;
                break;
            }
            t += 2;
        }
        if !found {
            d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![];
    }
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk = pk.saturating_mul(p);
            divs.extend(base.iter().map(|d| d.saturating_mul(pk)));
        }
    }
    divs.sort_unstable();
    divs.dedup();
    divs
}

fn bigint_to_u64_abs(n: &BigInt, what: &str) -> Result<u64> {
    let (_, digits) = n.to_u64_digits();
    match (n.sign(), digits.len()) {
        (Sign::NoSign, _) => Ok(0),
        (_, 0) => Ok(0),
        (_, 1) => Ok(digits[0]),
        _ => Err(Error::UnsupportedField(format!(
            "{what} too large for rational root search"
        ))),
    }
}

/// All rational eigenvalues with algebraic multiplicities, sorted
/// ascending. Errors when the characteristic polynomial does not split over
/// the rationals, naming the remaining irreducible factor.
pub fn rational_spectrum(a: &QMatrix) -> Result<Vec<(Rat, usize)>> {
    let cp = char_poly(a)?;
    rational_roots_monic(&cp.poly)
}

fn rational_roots_monic(p: &UniPoly) -> Result<Vec<(Rat, usize)>> {
    let mut out: BTreeMap<Rat, usize> = BTreeMap::new();
    let mut rem = p.clone();
    // deflate zero roots
    while !rem.is_zero() && rem.coeff(0).is_zero() && rem.degree() > Some(0) {
        rem = UniPoly::from_coeffs(rem.coeffs()[1..].to_vec());
        *out.entry(Rat::zero()).or_insert(0) += 1;
    }
    if rem.degree() > Some(0) {
        // clear denominators: D·rem has integer coefficients
        let mut den = BigInt::one();
        for c in rem.coeffs() {
            den = den.lcm(c.denom());
        }
        let int_coeffs: Vec<BigInt> = rem
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let constant = bigint_to_u64_abs(&int_coeffs[0].abs(), "constant term")?;
        let leading = bigint_to_u64_abs(int_coeffs.last().unwrap(), "leading denominator")?;
        let nums = divisors(constant);
        let dens = divisors(leading);
        'candidates: for &num in &nums {
            for &den in &dens {
                if num::integer::gcd(num, den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rat::new(
                        BigInt::from(sign) * BigInt::from(num),
                        BigInt::from(den),
                    );
                    while rem.degree() > Some(0) && rem.eval(&cand).is_zero() {
                        rem = rem.deflate_root(&cand)?;
                        *out.entry(cand.clone()).or_insert(0) += 1;
                    }
                    if rem.degree() == Some(0) {
                        break 'candidates;
                    }
                }
            }
        }
    }
    if rem.degree() > Some(0) {
        return Err(Error::UnsupportedField(format!(
            "characteristic polynomial does not split over the rationals; \
             remaining factor {rem}"
        )));
    }
    Ok(out.into_iter().collect())
}

/// Ranks of `(A − λI)^k` for `k = 0..=r`.
pub fn rank_profile(a: &QMatrix, lambda: &Rat) -> Result<Vec<usize>> {
    if !a.is_square() {
        return Err(Error::Dimension("rank profile of a non-square matrix".into()));
    }
    let n = a.shift(&-lambda.clone())?;
    let mut out = Vec::with_capacity(a.rows() + 1);
    let mut power = QMatrix::identity(a.rows());
    for _ in 0..=a.rows() {
        out.push(power.rank());
        power = power.mul(&n)?;
    }
    Ok(out)
}

/// Jordan type from rank sequences: the number of blocks of size ≥ k for an
/// eigenvalue is `rank((A−λI)^{k−1}) − rank((A−λI)^k)`.
pub fn jordan_type_oracle(a: &QMatrix) -> Result<JordanSpec> {
    let spectrum = rational_spectrum(a)?;
    let mut eigenvalues = Vec::new();
    for (lambda, mult) in spectrum {
        let ranks = rank_profile(a, &lambda)?;
        let mut blocks = Vec::new();
        let r = a.rows();
        for k in 1..=r {
            let at_least_k = ranks[k - 1] - ranks[k];
            let at_least_k1 = if k < r { ranks[k] - ranks[k + 1] } else { 0 };
            let exactly_k = at_least_k - at_least_k1;
            if exactly_k > 0 {
                blocks.push((k, exactly_k));
            }
        }
        blocks.sort_by_key(|&(size, _)| std::cmp::Reverse(size));
        let total: usize = blocks.iter().map(|(r, k)| r * k).sum();
        if total != mult {
            return Err(Error::Inconsistency(format!(
                "rank profile of {lambda} sums to {total}, expected {mult}"
            )));
        }
        eigenvalues.push(EigenvalueBlocks::new(lambda, blocks));
    }
    JordanSpec::new(eigenvalues)
}

/// Exact kernel bases of `A − λI` for each rational eigenvalue.
pub fn eigenspaces(a: &QMatrix) -> Result<Vec<(Rat, Vec<Vec<Rat>>)>> {
    let spectrum = rational_spectrum(a)?;
    spectrum
        .into_iter()
        .map(|(lambda, _)| {
            let n = a.shift(&-lambda.clone())?;
            Ok((lambda, n.kernel_basis()))
        })
        .collect()
}

/// Exact kernel bases of `(A − λI)^r`; the dimension equals the algebraic
/// multiplicity.
pub fn generalized_eigenspaces(a: &QMatrix) -> Result<Vec<(Rat, Vec<Vec<Rat>>)>> {
    let spectrum = rational_spectrum(a)?;
    spectrum
        .into_iter()
        .map(|(lambda, _)| {
            let n = a.shift(&-lambda.clone())?.pow(a.rows())?;
            Ok((lambda, n.kernel_basis()))
        })
        .collect()
}

/// Classical diagonalizability: geometric multiplicities sum to the size.
pub fn diagonalizable_oracle(a: &QMatrix) -> Result<bool> {
    let spaces = eigenspaces(a)?;
    let geom: usize = spaces.iter().map(|(_, b)| b.len()).sum();
    Ok(geom == a.rows())
}

/// Jordan basis: returns `(P, spec)` with `A·P = P·J(spec)` exactly.
/// Columns are grouped like [`jordan_matrix`]: eigenvalues ascending, block
/// sizes descending, chains consecutive, each chain ordered so the
/// eigenvector comes first.
pub fn jordan_basis(a: &QMatrix) -> Result<(QMatrix, JordanSpec)> {
    let spectrum = rational_spectrum(a)?;
    let r = a.rows();
    let mut eigenvalues = Vec::new();
    let mut columns: Vec<Vec<Rat>> = Vec::new();
    for (lambda, mult) in spectrum {
        let n = a.shift(&-lambda.clone())?;
        // kernels of N^0, N^1, ... until the dimension stabilizes at mult
        let mut kernels: Vec<Vec<Vec<Rat>>> = vec![Vec::new()];
        let mut power = QMatrix::identity(r);
        loop {
            power = power.mul(&n)?;
            let k = power.kernel_basis();
            let dim = k.len();
            kernels.push(k);
            if dim == mult {
                break;
            }
        }
        let s = kernels.len() - 1;
        // chains top-down: at height k the new chain tops extend
        // K_{k−1} + N·(vectors carried from height k+1) inside K_k
        let mut chains_by_height: BTreeMap<usize, Vec<Vec<Vec<Rat>>>> = BTreeMap::new();
        let mut carried: Vec<Vec<Rat>> = Vec::new();
        for k in (1..=s).rev() {
            let mut ech = EchelonSet::new(r);
            for v in &kernels[k - 1] {
                ech.try_insert(v);
            }
            for v in &carried {
                ech.try_insert(v);
            }
            let mut tops = Vec::new();
            for v in &kernels[k] {
                if ech.try_insert(v) {
                    tops.push(v.clone());
                }
            }
            for top in &tops {
                let mut chain = vec![top.clone()];
                let mut cur = top.clone();
                for _ in 1..k {
                    cur = n.mul_vec(&cur)?;
                    chain.push(cur.clone());
                }
                chain.reverse(); // eigenvector first
                chains_by_height.entry(k).or_default().push(chain);
            }
            carried = carried
                .iter()
                .chain(&tops)
                .map(|v| n.mul_vec(v))
                .collect::<Result<Vec<_>>>()?;
        }
        let mut blocks = Vec::new();
        for (&height, chains) in chains_by_height.iter().rev() {
            blocks.push((height, chains.len()));
            for chain in chains {
                columns.extend(chain.iter().cloned());
            }
        }
        eigenvalues.push(EigenvalueBlocks::new(lambda, blocks));
    }
    let spec = JordanSpec::new(eigenvalues)?;
    let mut p = QMatrix::zeros(r, r);
    for (c, col) in columns.iter().enumerate() {
        for (row, v) in col.iter().enumerate() {
            *p.get_mut(row, c) = v.clone();
        }
    }
    debug_assert_eq!(
        a.mul(&p).unwrap(),
        p.mul(&jordan_matrix(&spec)).unwrap(),
        "jordan basis equation"
    );
    Ok((p, spec))
}

// ---- pencil discriminant experiment

/// SplitMix64: state advances by 0x9E3779B97F4A7C15 and the output mixes
/// with xor-shift-multiply constants 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB. Fixed here so experiments are bit-reproducible
/// across platforms.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `lo..=hi` by reduction.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// Random integer matrix with entries in `lo..=hi`.
pub fn random_int_matrix(rng: &mut SplitMix64, r: usize, lo: i64, hi: i64) -> QMatrix {
    let mut m = QMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            *m.get_mut(i, j) = Rat::from_integer(rng.int_in(lo, hi).into());
        }
    }
    m
}

/// Characteristic polynomial of a matrix over ℚ[s], returned as the list of
/// `t^k` coefficients (ascending, monic).
fn char_poly_pencil(m: &[Vec<UniPoly>]) -> Vec<UniPoly> {
    let r = m.len();
    let mut coeffs = vec![UniPoly::zero(); r + 1];
    coeffs[r] = UniPoly::one();
    let trace = |mm: &[Vec<UniPoly>]| -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, row) in mm.iter().enumerate() {
            acc = acc.add(&row[i]);
        }
        acc
    };
    let mat_mul = |a: &[Vec<UniPoly>], b: &[Vec<UniPoly>]| -> Vec<Vec<UniPoly>> {
        let mut out = vec![vec![UniPoly::zero(); r]; r];
        for i in 0..r {
            for k in 0..r {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..r {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
        out
    };
    let mut mk: Vec<Vec<UniPoly>> = m.to_vec();
    for k in 1..=r {
        let inv_k = Rat::new(BigInt::one(), BigInt::from(k as i64));
        let c = trace(&mk).scale(&-inv_k);
        coeffs[r - k] = c.clone();
        if k < r {
            let mut shifted = mk.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = row[i].add(&c);
            }
            mk = mat_mul(m, &shifted);
        }
    }
    coeffs
}

/// Resultant of `p` and its `t`-derivative via the Sylvester matrix over
/// ℚ[s], evaluated by fraction-free elimination.
fn discriminant_resultant(p: &[UniPoly]) -> Result<UniPoly> {
    let r = p.len() - 1; // degree in t
    let dp: Vec<UniPoly> = (1..=r)
        .map(|k| p[k].scale(&Rat::from_integer((k as i64).into())))
        .collect();
    let n = 2 * r - 1;
    let mut syl = vec![vec![UniPoly::zero(); n]; n];
    // r−1 shifted rows of p (descending coefficients), then r rows of p'
    for i in 0..r - 1 {
        for (k, c) in p.iter().rev().enumerate() {
            syl[i][i + k] = c.clone();
        }
    }
    for i in 0..r {
        for (k, c) in dp.iter().rev().enumerate() {
            syl[r - 1 + i][i + k] = c.clone();
        }
    }
    det_bareiss(syl)
}

/// Degree in `s` of the discriminant of the characteristic polynomial of
/// `B + s·C`, with `B`, `C` drawn from the seed with entries in `−9..=9`.
/// Generic pencils return `r(r−1)`; a vanishing discriminant is reported as
/// a degenerate sample so the caller can reseed.
pub fn discriminant_degree_experiment(r: usize, seed: u64) -> Result<usize> {
    if r < 2 {
        return Err(Error::InvalidArgument("pencil experiment needs r ≥ 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let b = random_int_matrix(&mut rng, r, -9, 9);
    let c = random_int_matrix(&mut rng, r, -9, 9);
    discriminant_degree_of_pencil(&b, &c)
}

/// The same experiment on a caller-provided pencil.
pub fn discriminant_degree_of_pencil(b: &QMatrix, c: &QMatrix) -> Result<usize> {
    if !b.is_square() || b.rows() != c.rows() || !c.is_square() {
        return Err(Error::Dimension("pencil needs equal square matrices".into()));
    }
    let r = b.rows();
    let pencil: Vec<Vec<UniPoly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    UniPoly::from_coeffs(vec![b.get(i, j).clone(), c.get(i, j).clone()])
                })
                .collect()
        })
        .collect();
    let p = char_poly_pencil(&pencil);
    let disc = discriminant_resultant(&p)?;
    if disc.is_zero() {
        return Err(Error::DegenerateSample(
            "pencil discriminant vanishes identically; pick another seed".into(),
        ));
    }
    Ok(disc.degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn char_poly_of_upper_triangular_matrix() {
        // (t−2)(t−1)^2 = t^3 − 4t^2 + 5t − 2
        let a = QMatrix::from_int_rows(&[&[2, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let cp = char_poly(&a).unwrap();
        assert_eq!(
            cp.poly.coeffs(),
            &[rat_int(-2), rat_int(5), rat_int(-4), rat_int(1)]
        );
        let spec = rational_spectrum(&a).unwrap();
        assert_eq!(spec, vec![(rat_int(1), 2), (rat_int(2), 1)]);
    }

    #[test]
    fn char_poly_identity() {
        let cp = char_poly(&QMatrix::identity(3)).unwrap();
        assert_eq!(
            cp.poly.coeffs(),
            &[rat_int(-1), rat_int(3), rat_int(-3), rat_int(1)]
        );
    }

    #[test]
    fn irrational_spectrum_is_an_error() {
        let a = QMatrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        match rational_spectrum(&a) {
            Err(Error::UnsupportedField(msg)) => assert!(msg.contains("t^2 + 1"), "{msg}"),
            other => panic!("expected unsupported field, got {other:?}"),
        }
    }

    #[test]
    fn rational_eigenvalues_with_denominators() {
        let a = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat_int(0)],
            vec![rat_int(0), rat(-3, 4)],
        ])
        .unwrap();
        let spec = rational_spectrum(&a).unwrap();
        assert_eq!(spec, vec![(rat(-3, 4), 1), (rat(1, 2), 1)]);
    }

    #[test]
    fn rank_profile_is_monotone_and_stabilizes() {
        let spec = JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(1), vec![(3, 1), (1, 1)]),
            EigenvalueBlocks::new(rat_int(2), vec![(2, 1)]),
        ])
        .unwrap();
        let j = jordan_matrix(&spec);
        let r = j.rows();
        for (lambda, mult) in rational_spectrum(&j).unwrap() {
            let ranks = rank_profile(&j, &lambda).unwrap();
            assert_eq!(ranks[0], r);
            assert!(ranks.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(*ranks.last().unwrap(), r - mult);
        }
    }

    #[test]
    fn jordan_type_of_upper_triangular_matrix() {
        let a = QMatrix::from_int_rows(&[&[2, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let spec = jordan_type_oracle(&a).unwrap();
        let expect = JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(1), vec![(2, 1)]),
            EigenvalueBlocks::new(rat_int(2), vec![(1, 1)]),
        ])
        .unwrap();
        assert_eq!(spec, expect);
    }

    #[test]
    fn jordan_type_round_trip() {
        let spec = JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(0), vec![(3, 1), (1, 2)]),
            EigenvalueBlocks::new(rat_int(2), vec![(2, 2)]),
        ])
        .unwrap();
        let j = jordan_matrix(&spec);
        assert_eq!(jordan_type_oracle(&j).unwrap(), spec);
    }

    #[test]
    fn eigenspace_dimensions() {
        let a = QMatrix::from_int_rows(&[&[4, 0, 1], &[2, 3, 2], &[1, 0, 4]]);
        let spaces = eigenspaces(&a).unwrap();
        let dims: Vec<(Rat, usize)> = spaces
            .iter()
            .map(|(l, b)| (l.clone(), b.len()))
            .collect();
        assert_eq!(dims, vec![(rat_int(3), 2), (rat_int(5), 1)]);
        assert!(diagonalizable_oracle(&a).unwrap());
        let b = QMatrix::from_int_rows(&[&[2, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        assert!(!diagonalizable_oracle(&b).unwrap());
    }

    #[test]
    fn generalized_eigenspaces_have_algebraic_dimension() {
        let spec = JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(1), vec![(2, 1)]),
            EigenvalueBlocks::new(rat_int(5), vec![(1, 1)]),
        ])
        .unwrap();
        let j = jordan_matrix(&spec);
        let spaces = generalized_eigenspaces(&j).unwrap();
        assert_eq!(spaces[0].1.len(), 2);
        assert_eq!(spaces[1].1.len(), 1);
    }

    #[test]
    fn jordan_basis_equation_holds() {
        let spec = JordanSpec::new(vec![
            EigenvalueBlocks::new(rat_int(1), vec![(2, 1), (1, 1)]),
            EigenvalueBlocks::new(rat_int(3), vec![(2, 1)]),
        ])
        .unwrap();
        let j = jordan_matrix(&spec);
        let c = QMatrix::from_int_rows(&[
            &[1, 0, 1, 0, 0],
            &[1, 1, 0, 0, 1],
            &[0, 1, 1, 0, 0],
            &[2, 0, 0, 1, 0],
            &[0, 0, 1, 1, 1],
        ]);
        let a = c.inverse().unwrap().mul(&j).unwrap().mul(&c).unwrap();
        let (p, spec2) = jordan_basis(&a).unwrap();
        assert_eq!(spec2, spec);
        assert_eq!(
            a.mul(&p).unwrap(),
            p.mul(&jordan_matrix(&spec2)).unwrap()
        );
        assert_eq!(p.rank(), 5);
    }

    #[test]
    fn splitmix_is_reproducible() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(42);
        let vals: Vec<i64> = (0..6).map(|_| c.int_in(-9, 9)).collect();
        assert!(vals.iter().all(|v| (-9..=9).contains(v)));
    }

    #[test]
    fn discriminant_degree_small_cases() {
        assert_eq!(discriminant_degree_experiment(2, 1).unwrap(), 2);
        assert_eq!(discriminant_degree_experiment(3, 1).unwrap(), 6);
    }

    #[test]
    fn degenerate_pencil_is_reported() {
        let id = QMatrix::identity(3);
        assert!(matches!(
            discriminant_degree_of_pencil(&id, &id),
            Err(Error::DegenerateSample(_))
        ));
    }
}
