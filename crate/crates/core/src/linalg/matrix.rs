use std::fmt;

use num_traits::{One, Zero};

use super::rational::{display_rational, Rational};
use crate::error::{Error, Result};

/// Sparse rational matrix stored row by row.
///
/// Each row holds `(column, value)` pairs sorted by column; no stored value
/// is zero. Optional row/column labels are opaque basis tags and take no
/// part in equality.
#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, value: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !value.is_zero() {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, value.clone()));
            }
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            if !v.is_zero() {
                m.data[i].push((i, v.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            data[r].push((c, v));
        }
        for row in &mut data {
            normalize_row(row);
        }
        Matrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn from_dense(entries: &[Vec<Rational>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let data = entries
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Matrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    /// Convenience for tests and examples: small integer entries.
    pub fn from_i64(entries: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = entries
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        Self::from_dense(&dense)
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let triplets = columns.iter().enumerate().flat_map(|(j, col)| {
            assert_eq!(col.len(), rows);
            col.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v.clone()))
        });
        Self::from_triplets(rows, columns.len(), triplets)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != self.rows || col_labels.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "labels {}x{} for a {}x{} matrix",
                row_labels.len(),
                col_labels.len(),
                self.rows,
                self.cols
            )));
        }
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
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

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.triplets() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        if factor.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v * factor)).collect())
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &Matrix, factor: &Rational) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in matrix addition"
        );
        if factor.is_zero() {
            return self.clone();
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b, factor))
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add_scaled(other, &-Rational::one())
    }

    /// `self − value·Id`.
    pub fn shift_diagonal(&self, value: &Rational) -> Matrix {
        assert!(self.is_square(), "shift_diagonal on a non-square matrix");
        self.sub(&Matrix::scalar(self.rows, value))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in matrix product ({}x{} · {}x{})",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut scratch: Vec<Option<Rational>> = vec![None; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let prod = a * b;
                    match &mut scratch[*j] {
                        Some(acc) => *acc += prod,
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                if let Some(v) = scratch[j].take() {
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
            }
            touched.clear();
            data.push(out);
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
            row_labels: self.row_labels.clone(),
            col_labels: other.col_labels.clone(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        self.data
            .iter()
            .map(|row| row.iter().map(|(j, a)| a * &v[*j]).sum())
            .collect()
    }

    /// Kronecker product; index `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for a_row in &self.data {
            for b_row in &other.data {
                let mut out = Vec::with_capacity(a_row.len() * b_row.len());
                for (j, a) in a_row {
                    for (l, b) in b_row {
                        out.push((j * other.cols + l, a * b));
                    }
                }
                data.push(out);
            }
        }
        Matrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    /// Concatenates matrices with equal row counts side by side.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for (i, row) in b.data.iter().enumerate() {
                data[i].extend(row.iter().map(|(j, v)| (j + offset, v.clone())));
            }
            offset += b.cols;
        }
        Matrix {
            rows,
            cols: offset,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix {
            rows: data.len(),
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    /// Assembles an `r×c` grid of equally sized blocks, row-major.
    pub fn from_blocks(grid: &[Vec<Matrix>]) -> Matrix {
        let block_rows = grid.len();
        let block_cols = grid.first().map_or(0, Vec::len);
        let (h, w) = grid
            .first()
            .and_then(|r| r.first())
            .map_or((0, 0), |b| (b.rows, b.cols));
        let mut triplets = Vec::new();
        for (bi, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), block_cols, "ragged block grid");
            for (bj, block) in row.iter().enumerate() {
                assert_eq!((block.rows, block.cols), (h, w), "unequal block sizes");
                for (i, j, v) in block.triplets() {
                    triplets.push((bi * h + i, bj * w + j, v.clone()));
                }
            }
        }
        Matrix::from_triplets(block_rows * h, block_cols * w, triplets)
    }

    /// Extracts the block `(bi, bj)` of size `h×w`.
    pub fn block(&self, bi: usize, bj: usize, h: usize, w: usize) -> Matrix {
        let rows: Vec<usize> = (bi * h..(bi + 1) * h).collect();
        let cols: Vec<usize> = (bj * w..(bj + 1) * w).collect();
        self.submatrix(&rows, &cols)
    }

    /// Restriction to the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (p, &c) in cols.iter().enumerate() {
            col_pos[c] = p;
        }
        let data = rows
            .iter()
            .map(|&r| {
                let mut out: Vec<(usize, Rational)> = self.data[r]
                    .iter()
                    .filter(|(j, _)| col_pos[*j] != usize::MAX)
                    .map(|(j, v)| (col_pos[*j], v.clone()))
                    .collect();
                out.sort_by_key(|(j, _)| *j);
                out
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }
}

fn normalize_row(row: &mut Vec<(usize, Rational)>) {
    row.sort_by_key(|(j, _)| *j);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (j, v) in row.drain(..) {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

fn merge_rows(
    a: &[(usize, Rational)],
    b: &[(usize, Rational)],
    factor: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let take_a = k >= b.len() || (i < a.len() && a[i].0 < b[k].0);
        let take_b = i >= a.len() || (k < b.len() && b[k].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[k].0, &b[k].1 * factor));
            k += 1;
        } else {
            let v = &a[i].1 + &b[k].1 * factor;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense = self.to_dense();
        let cells: Vec<Vec<String>> = dense
            .iter()
            .map(|r| r.iter().map(display_rational).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_i64(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), Matrix::from_i64(&[&[1, 0], &[2, 1]]));
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = Matrix::from_i64(&[&[1, -1]]);
        let b = Matrix::from_i64(&[&[1], &[1]]);
        let p = a.mul(&b);
        assert!(p.is_zero());
        assert_eq!(p.nnz(), 0);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn kron_matches_block_layout() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let id = Matrix::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.get(0, 2), int(2));
        assert_eq!(k.get(3, 1), int(3));
        assert_eq!(k.block(1, 1, 2, 2), Matrix::scalar(2, &int(4)));
    }

    #[test]
    fn labels_must_match_shape() {
        let m = Matrix::zeros(2, 3);
        assert!(m.clone().with_labels(vec!["a".into()], vec![]).is_err());
        let m = m
            .with_labels(vec!["r0".into(), "r1".into()], vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        assert_eq!(m.row_labels().unwrap()[1], "r1");
        assert_eq!(m, Matrix::zeros(2, 3));
    }

    #[test]
    fn blocks_round_trip() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let z = Matrix::zeros(2, 2);
        let big = Matrix::from_blocks(&[vec![a.clone(), z.clone()], vec![z, a.clone()]]);
        assert_eq!(big.block(1, 1, 2, 2), a);
        assert_eq!(big.trace(), int(10));
    }
}
