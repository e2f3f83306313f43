//! Dense exact linear algebra: matrices, canonical subspaces, quotient maps,
//! and exhaustive subspace enumeration over small prime fields.
//!
//! A subspace is identified with the unique reduced-row-echelon basis of its
//! coefficient space, so equality of subspaces is entry-wise equality of
//! basis matrices.

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::Result;

/// Dense matrix with a single shared field for every entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors, validating shape and field.
    pub fn from_rows(rows_in: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Result<Matrix> {
        for r in &rows_in {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            for s in r {
                if s.field() != field {
                    return Err(Error::FieldMismatch(format!("{} vs {}", s.field(), field)));
                }
            }
        }
        Ok(Matrix {
            rows: rows_in.len(),
            cols,
            field,
            entries: rows_in.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "matrix entry field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Matrix product; panics on shape or field mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field, "matrix product field mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a.mul(other.get(t, c));
                    let cur = out.get(r, c).add(&add);
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product; panics on shape mismatch.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix apply shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc = acc.add(&self.get(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.neg();
        }
        out
    }

    /// Reduced row-echelon form with zero rows pruned. Row space preserved.
    pub fn rref(&self) -> Matrix {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row_vec(r)).collect();
        rref_in_place(&mut rows, self.cols);
        Matrix::from_rows(rows, self.cols, self.field).expect("rref keeps shape")
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Gauss-Jordan on [self | I].
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row_vec(r);
                for c in 0..n {
                    row.push(if c == r { self.field.one() } else { self.field.zero() });
                }
                row
            })
            .collect();
        rref_in_place(&mut rows, 2 * n);
        if rows.len() < n {
            return None;
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, item) in row.iter().enumerate().take(n) {
                let want_one = r == c;
                if (want_one && !item.is_one()) || (!want_one && !item.is_zero()) {
                    return None;
                }
            }
        }
        let inv_rows: Vec<Vec<Scalar>> = rows.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(Matrix::from_rows(inv_rows, n, self.field).unwrap())
    }
}

/// Gauss-Jordan elimination to reduced row-echelon form; prunes zero rows.
fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, cols: usize) {
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col]
            .inverse()
            .expect("pivot is nonzero");
        for c in col..cols {
            rows[pivot_row][c] = rows[pivot_row][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..cols {
                let sub = rows[pivot_row][c].mul(&factor);
                rows[r][c] = rows[r][c].sub(&sub);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

/// A subspace of the coefficient space, held in canonical RREF basis form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim, field),
        }
    }

    pub fn full(ambient_dim: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim, field),
        }
    }

    /// Canonical span of a list of coefficient vectors.
    pub fn span(vectors: &[Vec<Scalar>], ambient_dim: usize, field: FieldSpec) -> Result<Subspace> {
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim, field)?;
        Ok(Subspace {
            ambient_dim,
            basis: m.rref(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Pivot column of each basis row.
    fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient_dim)
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .expect("no zero rows in a canonical basis")
            })
            .collect()
    }

    /// Residual of `v` after eliminating pivot coordinates against the basis.
    /// The residual is zero exactly when `v` is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector/subspace dimension mismatch");
        let mut w = v.to_vec();
        for (r, &p) in self.pivots().iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.ambient_dim {
                let sub = self.basis.get(r, c).mul(&factor);
                w[c] = w[c].sub(&sub);
            }
        }
        w
    }

    pub fn member(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.compat(other)?;
        Ok((0..other.dim()).all(|r| self.member(other.basis.row(r))))
    }

    fn compat(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    /// Canonical sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compat(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(&rows, self.ambient_dim, self.field())
    }

    /// Key for the canonical enumeration order: dimension, then the flattened
    /// basis entries.
    pub fn order_key(&self) -> (usize, Vec<Scalar>) {
        (self.dim(), self.basis.entries().to_vec())
    }
}

/// Coordinates on a complement of a subspace: representatives extend the
/// subspace basis to a full basis, and `project` is linear with kernel
/// exactly the subspace.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    subspace: Subspace,
    rep_cols: Vec<usize>,
}

impl QuotientMap {
    pub fn new(ambient_dim: usize, subspace: &Subspace) -> Result<QuotientMap> {
        if subspace.ambient_dim() != ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "quotient ambient {} vs subspace ambient {}",
                ambient_dim,
                subspace.ambient_dim()
            )));
        }
        let pivots = subspace.pivots();
        let rep_cols = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
        Ok(QuotientMap {
            subspace: subspace.clone(),
            rep_cols,
        })
    }

    pub fn quotient_dim(&self) -> usize {
        self.rep_cols.len()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Standard basis vectors at the non-pivot columns.
    pub fn representatives(&self) -> Vec<Vec<Scalar>> {
        let n = self.subspace.ambient_dim();
        let field = self.subspace.field();
        self.rep_cols
            .iter()
            .map(|&c| {
                let mut v = vec![field.zero(); n];
                v[c] = field.one();
                v
            })
            .collect()
    }

    /// Quotient coordinates of `v`.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let w = self.subspace.reduce(v);
        self.rep_cols.iter().map(|&c| w[c].clone()).collect()
    }

    /// The ambient representative of quotient coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.rep_cols.len());
        let n = self.subspace.ambient_dim();
        let field = self.subspace.field();
        let mut v = vec![field.zero(); n];
        for (k, &c) in self.rep_cols.iter().enumerate() {
            v[c] = coords[k].clone();
        }
        v
    }
}

const ENUM_MAX_DIM: usize = 4;
const ENUM_PRIMES: [u32; 3] = [2, 3, 5];

/// Every subspace of F_p^n exactly once, ordered by dimension and then
/// lexicographically on the canonical basis matrix. Bounded to n <= 4 and
/// p in {2, 3, 5}.
pub fn enumerate_subspaces(ambient_dim: usize, field: FieldSpec) -> Result<Vec<Subspace>> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::BoundsExceeded(
            "subspace enumeration requires a prime field".into(),
        ));
    };
    if ambient_dim > ENUM_MAX_DIM || !ENUM_PRIMES.contains(&p) {
        return Err(Error::BoundsExceeded(format!(
            "subspace enumeration is capped at dim {ENUM_MAX_DIM} over F_p with p in {ENUM_PRIMES:?}; got dim {ambient_dim} over {field}"
        )));
    }
    let mut out = Vec::new();
    for k in 0..=ambient_dim {
        let mut layer = Vec::new();
        for pivots in combinations(ambient_dim, k) {
            // Free slots of an RREF matrix with the given pivot columns:
            // row t, non-pivot column c > pivots[t].
            let mut free: Vec<(usize, usize)> = Vec::new();
            for (t, &pt) in pivots.iter().enumerate() {
                for c in pt + 1..ambient_dim {
                    if !pivots.contains(&c) {
                        free.push((t, c));
                    }
                }
            }
            let mut values = vec![0u32; free.len()];
            loop {
                let mut m = Matrix::zeros(k, ambient_dim, field);
                for (t, &pt) in pivots.iter().enumerate() {
                    m.set(t, pt, field.one());
                }
                for (slot, &(t, c)) in free.iter().enumerate() {
                    m.set(t, c, field.from_i64(values[slot] as i64));
                }
                layer.push(Subspace {
                    ambient_dim,
                    basis: m,
                });
                // odometer
                let mut carry = true;
                for v in values.iter_mut().rev() {
                    *v += 1;
                    if *v < p {
                        carry = false;
                        break;
                    }
                    *v = 0;
                }
                if carry {
                    break;
                }
            }
        }
        layer.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        out.extend(layer);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return vec![];
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
