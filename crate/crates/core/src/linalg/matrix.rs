//! Dense row-major matrices over a finite field and exact elimination.

use std::fmt;

use super::field::{Elem, FieldRef};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The nonzero rows of the reduced form, one per pivot.
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: &FieldRef, n: usize, c: Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(field: &FieldRef, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::Malformed(format!(
                "{bad} is not an element of {field:?}"
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: &FieldRef, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(field, rows.len(), cols, rows.concat())
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
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

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == (r == c) as Elem))
    }

    /// `Some(c)` when the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<Elem> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(0);
        }
        let c = self.get(0, 0);
        (0..self.rows)
            .all(|r| (0..self.cols).all(|k| self.get(r, k) == if r == k { c } else { 0 }))
            .then_some(c)
    }

    pub fn trace(&self) -> Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix {
            data,
            ..self.clone_shape()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix shapes agree")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other).expect("matrix shapes agree");
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Elem, other: &Matrix) {
        self.check_same_shape(other).expect("matrix shapes agree");
        self.field.axpy(&mut self.data, c, &other.data);
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let mut m = self.clone();
        m.field.clone().scale_slice(&mut m.data, c);
        m
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for r in 0..self.rows {
            let dst = &mut out.data[r * oc..(r + 1) * oc];
            for (k, &a) in self.row(r).iter().enumerate() {
                if a != 0 {
                    f.axpy(dst, a, &other.data[k * oc..(k + 1) * oc]);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix shapes agree")
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// `v M` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (r, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluate a polynomial at a square matrix (Horner).
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(&self.field, n, n);
        for &c in p.0.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Rows `range` as a new matrix.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            m.row_mut(i).copy_from_slice(self.row(r));
        }
        m
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(&self.field, rows, cols);
        for r in 0..rows {
            m.row_mut(r)
                .copy_from_slice(&self.row(r0 + r)[c0..c0 + cols]);
        }
        m
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            m.row_mut(self.rows + r)[self.cols..].copy_from_slice(other.row(r));
        }
        m
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn echelon(&self) -> Echelon {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            if pr != rank {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, rank * m.cols + k);
                }
            }
            let inv = f.inv(m.get(rank, c));
            f.scale_slice(m.row_mut(rank), inv);
            let pivot_row = m.row(rank).to_vec();
            for r in 0..m.rows {
                if r != rank {
                    let x = m.get(r, c);
                    if x != 0 {
                        f.axpy(m.row_mut(r), f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        Echelon { rows: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : M x = 0}`, returned as the rows of a matrix, in the
    /// order of the free columns of the reduced echelon form.
    pub fn nullspace(&self) -> Matrix {
        let e = self.echelon();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.set(i, fc, 1);
            for (r, &pc) in e.pivots.iter().enumerate() {
                basis.set(i, pc, f.neg(e.rows.get(r, fc)));
            }
        }
        basis
    }

    /// Basis of `{y : y M = 0}` as rows.
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().nullspace()
    }

    /// Some solution of `M x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.set(r, self.cols, b[r]);
        }
        let e = aug.echelon();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in e.pivots.iter().enumerate() {
            x[pc] = e.rows.get(r, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, 1);
        }
        let e = aug.echelon();
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(e.rows.submatrix(0, n, n, n))
    }

    /// Characteristic polynomial `det(xI - M)`, via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = (c + 1..n).find(|&r| h.get(r, c) != 0) else {
                continue;
            };
            if pr != c + 1 {
                // Similarity by a transposition: swap rows and columns.
                for k in 0..n {
                    h.data.swap(pr * n + k, (c + 1) * n + k);
                }
                for k in 0..n {
                    h.data.swap(k * n + pr, k * n + c + 1);
                }
            }
            let inv = f.inv(h.get(c + 1, c));
            for r in c + 2..n {
                let t = f.mul(h.get(r, c), inv);
                if t == 0 {
                    continue;
                }
                // row_r -= t row_{c+1}; col_{c+1} += t col_r
                let src = h.row(c + 1).to_vec();
                f.axpy(h.row_mut(r), f.neg(t), &src);
                for k in 0..n {
                    let v = f.add(h.get(k, c + 1), f.mul(t, h.get(k, r)));
                    h.set(k, c + 1, v);
                }
            }
        }
        // p_0 = 1; p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_{i,m} Π h_{j,j-1} p_{i-1}
        let mut ps: Vec<Poly> = vec![Poly::one()];
        for m in 0..n {
            let mut pm = Poly::x()
                .sub(&f, &Poly(vec![h.get(m, m)]))
                .mul(&f, &ps[m]);
            let mut prod = 1;
            for i in (0..m).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                if prod == 0 {
                    break;
                }
                let c = f.mul(prod, h.get(i, m));
                if c != 0 {
                    pm = pm.sub(&f, &ps[i].mul(&f, &Poly(vec![c])));
                }
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }
}

/// Basis of `{X : X·A_i = B_i·X for all i}`, where `A_i` act on a space of
/// dimension `d1` and `B_i` on one of dimension `d2`; each `X` is `d2 × d1`.
pub fn intertwiner_space(a: &[Matrix], b: &[Matrix]) -> Result<Vec<Matrix>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} generators against {}",
            a.len(),
            b.len()
        )));
    }
    let (Some(a0), Some(b0)) = (a.first(), b.first()) else {
        return Err(Error::DimensionMismatch(
            "intertwiner space needs at least one generator".into(),
        ));
    };
    let field = a0.field().clone();
    let (d1, d2) = (a0.rows(), b0.rows());
    if a.iter().any(|m| m.rows() != d1 || m.cols() != d1)
        || b.iter().any(|m| m.rows() != d2 || m.cols() != d2)
    {
        return Err(Error::DimensionMismatch("non-square generators".into()));
    }
    let f = &field;
    let unknowns = d1 * d2;
    // Unknown X[r][k] has index r*d1 + k. Equation (i, r, c):
    // Σ_k X[r][k] A_i[k][c] - Σ_k B_i[r][k] X[k][c] = 0.
    // Solve incrementally: keep the current solution space and cut it down
    // by one generator at a time, which keeps the systems small.
    let mut space = Matrix::identity(&field, unknowns);
    for (ai, bi) in a.iter().zip(b) {
        if space.rows() == 0 {
            break;
        }
        let mut eqs = Matrix::zeros(f, d2 * d1, unknowns);
        for r in 0..d2 {
            for c in 0..d1 {
                let row = eqs.row_mut(r * d1 + c);
                for k in 0..d1 {
                    let v = ai.get(k, c);
                    if v != 0 {
                        row[r * d1 + k] = f.add(row[r * d1 + k], v);
                    }
                }
                for k in 0..d2 {
                    let v = bi.get(r, k);
                    if v != 0 {
                        row[k * d1 + c] = f.sub(row[k * d1 + c], v);
                    }
                }
            }
        }
        // Restrict to the current space: coordinates y with x = y·space.
        let restricted = eqs.mul(&space.transpose());
        let ker = restricted.nullspace();
        space = ker.mul(&space).echelon().rows;
    }
    Ok((0..space.rows())
        .map(|i| Matrix::from_vec(&field, d2, d1, space.row(i).to_vec()).unwrap())
        .collect())
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
