//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Entries are stored as reduced residues in `[0, p)`. Every routine is exact;
//! there is no floating point anywhere below this module.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A prime field `F_p`, fixed per computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::GF2
    }
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse in F_{}", self.p);
        // Fermat: a^(p-2)
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn scalar(self, v: i64) -> FieldScalar {
        FieldScalar {
            value: self.reduce(v),
            field: self,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A single element of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    field: PrimeField,
}

impl FieldScalar {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FieldScalar> {
        (self.value != 0).then(|| FieldScalar {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> Self {
        FieldScalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `F_p`. `0 x n` and `n x 0` shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&v| field.reduce(v)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix from reduced column vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v % field.p;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v % self.field.p;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                axpy(f, out_row, a, rhs_row);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, rhs.rows
            )));
        }
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.data[r * cols.len() + j] = self.data[r * self.cols + c];
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let width = cols.len();
        let mut data = Vec::with_capacity(rows.len() * width);
        for r in rows.clone() {
            data.extend_from_slice(&self.data[r * self.cols + cols.start..r * self.cols + cols.end]);
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: width,
            data,
        }
    }

    /// Independent columns spanning the column space (the pivot columns, in order).
    pub fn column_space_basis(&self) -> Matrix {
        let mut work = self.clone();
        let pivots: Vec<usize> = work
            .eliminate(self.cols, false)
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        self.select_columns(&pivots)
    }

    /// Rank over `F_p` by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(self.cols, false).len()
    }

    /// Columns spanning `ker self`, one per free column of the reduced row echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let mut work = self.clone();
        let pivots = work.eliminate(self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.data[fc * free.len() + j] = 1;
            for &(r, pc) in &pivots {
                let v = work.data[r * work.cols + fc];
                k.data[pc * free.len() + j] = f.neg(v);
            }
        }
        k
    }

    /// Coefficients `c` with `self * c = v`, or `None` when `v` is not in the column span.
    ///
    /// Requires independent columns for the coefficients to be unique; with
    /// dependent columns some valid `c` is still returned.
    pub fn solve_in_span(&self, v: &[u32]) -> Option<Vec<u32>> {
        let rhs = Matrix::from_columns(self.field, self.rows, &[v.to_vec()]);
        self.solve_columns(&rhs).map(|c| c.column(0))
    }

    /// Column-wise solve of `self * X = rhs`; `None` if any column of `rhs` is out of span.
    pub fn solve_columns(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let mut aug = self.hstack(rhs).ok()?;
        let pivots = aug.eliminate(n, true);
        let rank = pivots.len();
        for r in rank..aug.rows {
            if aug.row(r)[n..].iter().any(|&v| v != 0) {
                return None;
            }
        }
        let mut x = Matrix::zeros(self.field, n, rhs.cols);
        for &(r, c) in &pivots {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = aug.data[r * aug.cols + n + j];
            }
        }
        Some(x)
    }

    /// Row reduction restricted to pivots in the first `pivot_limit` columns.
    ///
    /// Returns `(row, column)` pivot positions; pivot rows occupy `0..rank`.
    /// When `full` is set the result is in reduced row echelon form with unit pivots.
    fn eliminate(&mut self, pivot_limit: usize, full: bool) -> Vec<(usize, usize)> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..pivot_limit.min(cols) {
            if next == self.rows {
                break;
            }
            let Some(pr) = (next..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            self.swap_rows(pr, next);
            let inv = f.inv(self.data[next * cols + c]);
            if inv != 1 {
                for v in &mut self.data[next * cols..(next + 1) * cols] {
                    *v = f.mul(*v, inv);
                }
            }
            let start = if full { 0 } else { next + 1 };
            for r in start..self.rows {
                if r == next {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                let (pivot_row, target) = if r < next {
                    let (lo, hi) = self.data.split_at_mut(next * cols);
                    (&hi[..cols], &mut lo[r * cols..(r + 1) * cols])
                } else {
                    let (lo, hi) = self.data.split_at_mut(r * cols);
                    (&lo[next * cols..(next + 1) * cols], &mut hi[..cols])
                };
                axpy(f, &mut target[c..], f.neg(factor), &pivot_row[c..]);
            }
            pivots.push((next, c));
            next += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = self.data.split_at_mut(a.max(b) * cols);
        lo[a.min(b) * cols..(a.min(b) + 1) * cols].swap_with_slice(&mut hi[..cols]);
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(())
    }
}

/// `target += scale * source`
#[inline]
fn axpy(f: PrimeField, target: &mut [u32], scale: u32, source: &[u32]) {
    if f.p == 2 {
        if scale == 1 {
            for (t, &s) in target.iter_mut().zip(source) {
                *t ^= s;
            }
        }
        return;
    }
    let p = f.p as u64;
    let scale = scale as u64;
    for (t, &s) in target.iter_mut().zip(source) {
        if s != 0 {
            *t = ((*t as u64 + scale * s as u64) % p) as u32;
        }
    }
}

/// The quotient `span(Z) / span(B)` with a chosen basis of class representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    dimension: usize,
    representatives: Matrix,
    /// `[basis of span(B) | representatives]`, independent columns.
    frame: Matrix,
    boundary_rank: usize,
}

impl Quotient {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Columns of `Z` chosen as representatives of a quotient basis.
    pub fn representatives(&self) -> &Matrix {
        &self.representatives
    }

    /// Class coordinates of `v`; `None` if `v` is outside `span(Z)`.
    pub fn project(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.frame.solve_in_span(v)?;
        Some(c[self.boundary_rank..].to_vec())
    }

    /// Column-wise `project`.
    pub fn project_columns(&self, vs: &Matrix) -> Option<Matrix> {
        let c = self.frame.solve_columns(vs)?;
        let rows: Vec<usize> = (self.boundary_rank..self.frame.cols()).collect();
        Some(c.select_rows(&rows))
    }
}

/// Quotient of `span(Z)` by `span(B)`; requires `span(B) ⊆ span(Z)`.
///
/// Representatives are the columns of `Z` that are pivots of the reduced form
/// of `[B | Z]`, so the choice is deterministic in column order.
pub fn quotient_map(z: &Matrix, b: &Matrix) -> Result<Quotient> {
    if z.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "quotient of {}-vectors by {}-vectors",
            z.rows(),
            b.rows()
        )));
    }
    let joint = b.hstack(z)?;
    let mut work = joint.clone();
    let pivots = work.eliminate(joint.cols(), false);
    let b_cols: Vec<usize> = pivots
        .iter()
        .map(|&(_, c)| c)
        .filter(|&c| c < b.cols())
        .collect();
    let z_cols: Vec<usize> = pivots
        .iter()
        .map(|&(_, c)| c)
        .filter(|&c| c >= b.cols())
        .collect();
    if pivots.len() != z.rank() {
        return Err(Error::Precondition(
            "quotient requires span(B) inside span(Z)".into(),
        ));
    }
    let mut frame_cols = b_cols.clone();
    frame_cols.extend(&z_cols);
    let rep_cols: Vec<usize> = z_cols.iter().map(|c| c - b.cols()).collect();
    Ok(Quotient {
        dimension: z_cols.len(),
        representatives: z.select_columns(&rep_cols),
        frame: joint.select_columns(&frame_cols),
        boundary_rank: b_cols.len(),
    })
}
