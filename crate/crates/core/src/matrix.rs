//! Exact rational matrices and the elementary linear algebra the oracle
//! needs: reduced row echelon form, rank, kernels, inverses, determinants.

use crate::error::{Error, Result};
use crate::rat::{parse_rat, Rat};
use num::traits::{One, Zero};
use std::fmt;

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<QMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix addition shape".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension("matrix product shape".into()));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.get(k, c);
                    *out.get_mut(r, c) += add;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::Dimension("matrix-vector shape".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn pow(&self, k: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `A + c·I`.
    pub fn shift(&self, c: &Rat) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("shift of a non-square matrix".into()));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            *out.get_mut(i, i) += c;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(Rat::zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Block-diagonal concatenation. Either side may be 0×0.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(r, c) = self.get(r, c).clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                *out.get_mut(self.rows + r, self.cols + c) = other.get(r, c).clone();
            }
        }
        out
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pivot_row) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pivot_row);
            let inv = Rat::one() / m.get(lead, col).clone();
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : Av = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = -r.get(*row, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.get_mut(r, c) = self.get(r, c).clone();
            }
            *aug.get_mut(r, n + r) = Rat::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        let mut out = QMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                *out.get_mut(r, c) = red.get(r, n + c).clone();
            }
        }
        Ok(out)
    }

    /// Determinant via exact Gaussian elimination.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col) / &pivot;
                    m.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rat) {
        for col in 0..self.cols {
            *self.get_mut(r, col) *= c;
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &Rat) {
        for col in 0..self.cols {
            let v = self.get(source, col) * factor;
            *self.get_mut(target, col) -= v;
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// Plain-text matrix format: first line `rows cols`, then the entries as
/// `p/q` rationals separated by whitespace.
pub fn parse_matrix_text(s: &str) -> Result<QMatrix> {
    let mut tokens = s.split_whitespace();
    let rows: usize = tokens
        .next()
        .ok_or_else(|| Error::Parse("missing row count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad row count: {e}")))?;
    let cols: usize = tokens
        .next()
        .ok_or_else(|| Error::Parse("missing column count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad column count: {e}")))?;
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse("too few matrix entries".into()))?;
        entries.push(parse_rat(tok)?);
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing tokens after matrix entries".into()));
    }
    Ok(QMatrix {
        rows,
        cols,
        entries,
    })
}

pub fn format_matrix_text(m: &QMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Incremental echelon structure for rank and span queries over ℚ.
pub struct EchelonSet {
    dim: usize,
    rows: Vec<Vec<Rat>>, // each normalized so the leading entry is 1
}

impl EchelonSet {
    pub fn new(dim: usize) -> EchelonSet {
        EchelonSet {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &factor * b;
                }
            }
        }
        v
    }

    /// Inserts `v` if it is independent of the current span; reports whether
    /// it was inserted.
    pub fn try_insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut red = self.reduce(v);
        match red.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(lead) => {
                let inv = Rat::one() / red[lead].clone();
                for a in red.iter_mut() {
                    *a *= &inv;
                }
                self.rows.push(red);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Row-space equality of two vector families.
pub fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>], dim: usize) -> bool {
    let mut ea = EchelonSet::new(dim);
    for v in a {
        ea.try_insert(v);
    }
    let mut eb = EchelonSet::new(dim);
    for v in b {
        eb.try_insert(v);
    }
    ea.rank() == eb.rank() && a.iter().all(|v| eb.contains(v)) && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn rank_and_kernel() {
        let m = QMatrix::from_int_rows(&[&[1, 0, 1], &[2, 0, 2], &[1, 0, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(2));
        let singular = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn determinant() {
        let m = QMatrix::from_int_rows(&[&[6, -9, 4, 0], &[4, -6, 0, 4], &[-1, 0, 10, -9], &[0, -1, 4, -2]]);
        assert_eq!(m.det().unwrap(), rat_int(16));
        assert_eq!(QMatrix::zeros(3, 3).det().unwrap(), rat_int(0));
    }

    #[test]
    fn direct_sum_with_empty() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let empty = QMatrix::zeros(0, 0);
        assert_eq!(m.direct_sum(&empty), m);
        assert_eq!(empty.direct_sum(&m), m);
        let zero1 = QMatrix::zeros(1, 1);
        assert_eq!(zero1.direct_sum(&zero1), QMatrix::zeros(2, 2));
    }

    #[test]
    fn text_format_round_trip() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat_int(-3)],
            vec![rat_int(0), rat(7, 5)],
        ])
        .unwrap();
        let s = format_matrix_text(&m);
        assert_eq!(parse_matrix_text(&s).unwrap(), m);
        assert!(parse_matrix_text("2 2 1 2 3").is_err());
    }

    #[test]
    fn echelon_set_spans() {
        let mut e = EchelonSet::new(3);
        assert!(e.try_insert(&[rat_int(1), rat_int(1), rat_int(0)]));
        assert!(e.try_insert(&[rat_int(0), rat_int(1), rat_int(1)]));
        assert!(!e.try_insert(&[rat_int(1), rat_int(2), rat_int(1)]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[rat_int(2), rat_int(3), rat_int(1)]));
        assert!(!e.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
    }
}
