//! Dense matrices over R, C or H with exact quaternion entries.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::quaternion::{Quaternion, ScalarField};
use super::ExactLinError;

/// A dense `rows × cols` matrix whose entries all lie in `field`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: ScalarField,
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

impl ExactMatrix {
    pub fn zeros(field: ScalarField, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, entries: vec![Quaternion::zero(); rows * cols] }
    }

    pub fn identity(field: ScalarField, n: usize) -> Self {
        let mut m = ExactMatrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Quaternion::one();
        }
        m
    }

    /// Builds a matrix from row vectors.
    ///
    /// Fails with `ShapeMismatch` on ragged rows and `FieldViolation` when an entry
    /// lies outside `field`.
    pub fn from_rows(field: ScalarField, rows: Vec<Vec<Quaternion>>) -> Result<Self, ExactLinError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactLinError::ShapeMismatch { op: "from_rows", left: (r, c), right: (1, row.len()) });
            }
            for x in row {
                if !field.contains(&x) {
                    return Err(ExactLinError::FieldViolation { field, value: x.to_string() });
                }
                entries.push(x);
            }
        }
        Ok(ExactMatrix { field, rows: r, cols: c, entries })
    }

    /// Builds a matrix of integers over `field`.
    pub fn from_int_rows(field: ScalarField, rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| Quaternion::from_int(x)).collect()).collect();
        ExactMatrix::from_rows(field, rows).expect("integer rows are valid in every field")
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(field: ScalarField, diag: &[Quaternion]) -> Self {
        let n = diag.len();
        let mut m = ExactMatrix::zeros(field, n, n);
        for (i, x) in diag.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn field(&self) -> ScalarField {
        self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Quaternion {
        &self.entries[r * self.cols + c]
    }

    /// Sets one entry.
    ///
    /// # Panics
    /// Panics when the index is out of range or `x` lies outside the matrix field.
    pub fn set(&mut self, r: usize, c: usize, x: Quaternion) {
        assert!(self.field.contains(&x), "entry {x} is not in field {}", self.field);
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.entries[r * self.cols + c] = x;
    }

    /// Returns a copy of the matrix re-tagged with a larger field.
    pub fn widen(&self, field: ScalarField) -> Self {
        let field = self.field.join(field);
        ExactMatrix { field, ..self.clone() }
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Quaternion] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// The rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Quaternion>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Quaternion::is_zero)
    }

    /// Whether every entry is an integer (real with denominator 1).
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.components().iter().all(|c| c.is_integer()))
    }

    /// σ(M)ᵗ: the transpose with every entry conjugated. Over R this is the transpose.
    pub fn sigma_transpose(&self) -> Self {
        let mut m = ExactMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.entries[c * self.rows + r] = self.get(r, c).conj();
            }
        }
        m
    }

    /// Multiplies every entry on the left by the scalar `s`.
    pub fn scale(&self, s: &Quaternion) -> Self {
        let field = self.field.join(field_of(s));
        let entries = self.entries.iter().map(|x| s * x).collect();
        ExactMatrix { field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn try_mul(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactLinError> {
        if self.cols != o.rows {
            return Err(ExactLinError::ShapeMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (o.rows, o.cols),
            });
        }
        let mut out = ExactMatrix::zeros(self.field.join(o.field), self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * o.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        o: &ExactMatrix,
        op: &'static str,
        f: impl Fn(&Quaternion, &Quaternion) -> Quaternion,
    ) -> Result<ExactMatrix, ExactLinError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(ExactLinError::ShapeMismatch { op, left: (self.rows, self.cols), right: (o.rows, o.cols) });
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect();
        Ok(ExactMatrix { field: self.field.join(o.field), rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_add(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactLinError> {
        self.zip_with(o, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactLinError> {
        self.zip_with(o, "sub", |a, b| a - b)
    }

    /// The commutator `[self, o] = self·o − o·self`.
    pub fn commutator(&self, o: &ExactMatrix) -> Result<ExactMatrix, ExactLinError> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: usize) -> Result<ExactMatrix, ExactLinError> {
        if !self.is_square() {
            return Err(ExactLinError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = ExactMatrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Block-diagonal sum of square or rectangular blocks, all widened to a common field.
    pub fn block_diagonal(field: ScalarField, blocks: &[ExactMatrix]) -> ExactMatrix {
        let field = blocks.iter().fold(field, |f, b| f.join(b.field));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = ExactMatrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.entries[(r0 + r) * cols + c0 + c] = b.get(r, c).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

fn field_of(x: &Quaternion) -> ScalarField {
    if x.is_real() {
        ScalarField::R
    } else if x.is_complex() {
        ScalarField::C
    } else {
        ScalarField::H
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    /// # Panics
    /// Panics on a shape mismatch; use [`ExactMatrix::try_mul`] to handle it.
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_mul(o).expect("matrix product shape mismatch")
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    /// # Panics
    /// Panics on a shape mismatch; use [`ExactMatrix::try_add`] to handle it.
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_add(o).expect("matrix sum shape mismatch")
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    /// # Panics
    /// Panics on a shape mismatch; use [`ExactMatrix::try_sub`] to handle it.
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        self.try_sub(o).expect("matrix difference shape mismatch")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
