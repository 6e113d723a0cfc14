//! Dense exact linear algebra over a [`Field`].
//!
//! Every routine here is deterministic: row reduction scans columns left to
//! right and takes the first nonzero entry (in row order) as pivot. Kernel,
//! image and quotient bases are derived from that reduction, so the bases
//! used downstream for cohomology classes are reproducible.

use crate::coeff::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense row-major matrix of canonical scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, data })
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar], field: &Field) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length {} for {} columns", v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                    if field.is_zero(a) || field.is_zero(b) {
                        acc
                    } else {
                        field.add(&acc, &field.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in addition");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in subtraction");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar, field: &Field) -> Matrix {
        let data = self.data.iter().map(|a| field.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; column index of `self ⊗ other` is `j * other.cols + l`.
    pub fn kron(&self, other: &Matrix, field: &Field) -> Matrix {
        let mut out = Matrix::zeros(field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if field.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !field.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Add `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix, field: &Field) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block does not fit");
        for i in 0..block.rows {
            for j in 0..block.cols {
                let b = block.get(i, j);
                if !field.is_zero(b) {
                    let idx = (r0 + i) * self.cols + c0 + j;
                    self.data[idx] = field.add(&self.data[idx], b);
                }
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    pub fn rref(&self, field: &Field) -> Rref {
        rref(self, field)
    }

    pub fn rank(&self, field: &Field) -> usize {
        rref(self, field).rank
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(field, n));
        let r = rref(&aug, field);
        if r.pivots.len() < n || r.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.reduced.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Result of reduced row echelon reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Matrix, field: &Field) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !field.is_zero(a.get(i, col))) else {
            continue;
        };
        if p != row {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, row * a.cols + j);
            }
        }
        let inv = field.inv(a.get(row, col)).expect("pivot is nonzero");
        for j in col..a.cols {
            let idx = row * a.cols + j;
            a.data[idx] = field.mul(&a.data[idx], &inv);
        }
        for i in 0..a.rows {
            if i == row {
                continue;
            }
            let factor = a.get(i, col).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in col..a.cols {
                let pivot_entry = &a.data[row * a.cols + j];
                if field.is_zero(pivot_entry) {
                    continue;
                }
                let delta = field.mul(&factor, pivot_entry);
                let idx = i * a.cols + j;
                a.data[idx] = field.sub(&a.data[idx], &delta);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { reduced: a, rank: pivots.len(), pivots }
}

/// A subspace of `F^ambient_dim` given by linearly independent basis columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Wrap independent columns. Callers promise independence; use
    /// [`Subspace::span`] for arbitrary generators.
    pub fn from_basis(field: &Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::from_columns(field, ambient_dim, vectors) }
    }

    /// The span of arbitrary generators, with the pivot generators as basis.
    pub fn span(field: &Field, ambient_dim: usize, generators: &[Vec<Scalar>]) -> Subspace {
        let m = Matrix::from_columns(field, ambient_dim, generators);
        image_basis(&m, field)
    }

    pub fn zero(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::zeros(field, ambient_dim, 0) }
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::identity(field, ambient_dim) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Scalar], field: &Field) -> bool {
        matches!(solve(&self.basis, v, field), Ok(Some(_)))
    }

    /// Exact containment of another subspace, checked by solving.
    pub fn contains_subspace(&self, other: &Subspace, field: &Field) -> bool {
        other.ambient_dim == self.ambient_dim
            && other.vectors().iter().all(|v| self.contains(v, field))
    }
}

/// Kernel basis: one vector per free column, in column order, with a 1 in
/// the free position and the negated reduced entries in the pivot positions.
pub fn kernel_basis(m: &Matrix, field: &Field) -> Subspace {
    let r = rref(m, field);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Scalar>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = field.neg(r.reduced.get(row, f));
            }
            v
        })
        .collect();
    Subspace::from_basis(field, n, &vectors)
}

/// Image basis: the pivot columns of `m` itself.
pub fn image_basis(m: &Matrix, field: &Field) -> Subspace {
    let r = rref(m, field);
    let vectors: Vec<Vec<Scalar>> = r.pivots.iter().map(|&p| m.column(p)).collect();
    Subspace::from_basis(field, m.rows, &vectors)
}

/// Solve `m x = b`. Returns the particular solution with every free variable
/// set to zero, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar], field: &Field) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows
        )));
    }
    let rhs = Matrix { rows: m.rows, cols: 1, data: b.to_vec() };
    let r = rref(&m.hstack(&rhs), field);
    if r.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); m.cols];
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.reduced.get(row, m.cols).clone();
    }
    Ok(Some(x))
}

/// A quotient `ambient / sub` with a chosen basis of representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    field: Field,
    sub_dim: usize,
    representatives: Vec<Vec<Scalar>>,
    /// Columns `[sub basis | representatives]`.
    combined: Matrix,
    /// Left inverse of `combined`.
    left_inverse: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.representatives
    }

    pub fn ambient_space_dim(&self) -> usize {
        self.combined.rows
    }

    /// Coordinates in the representative basis of the class of `v`.
    /// `v` must lie in the ambient subspace.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let coords = self.left_inverse.apply(v, &self.field);
        coords[self.sub_dim..].to_vec()
    }

    /// Like [`Quotient::project`], but first checks that `v` lies in the ambient subspace.
    pub fn try_project(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.combined.rows {
            return Err(Error::Shape(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.combined.rows
            )));
        }
        let coords = self.left_inverse.apply(v, &self.field);
        if self.combined.apply(&coords, &self.field) != v {
            return Err(Error::NotContained);
        }
        Ok(coords[self.sub_dim..].to_vec())
    }

    /// Whether `v` (in the ambient subspace) represents the zero class.
    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.project(v).iter().all(|c| self.field.is_zero(c))
    }
}

/// Quotient of `ambient` by `sub`, choosing representatives by extending the
/// basis of `sub` through the basis of `ambient` in order.
pub fn quotient(ambient: &Subspace, sub: &Subspace, field: &Field) -> Result<Quotient> {
    if ambient.ambient_dim != sub.ambient_dim {
        return Err(Error::Shape(format!(
            "subspaces of F^{} and F^{}",
            ambient.ambient_dim, sub.ambient_dim
        )));
    }
    if !ambient.contains_subspace(sub, field) {
        return Err(Error::NotContained);
    }
    let k = sub.dim();
    let candidates = sub.basis.hstack(&ambient.basis);
    let r = rref(&candidates, field);
    let representatives: Vec<Vec<Scalar>> = r
        .pivots
        .iter()
        .filter(|&&p| p >= k)
        .map(|&p| candidates.column(p))
        .collect();
    let mut columns = sub.vectors();
    columns.extend(representatives.iter().cloned());
    let n = ambient.ambient_dim;
    let combined = Matrix::from_columns(field, n, &columns);
    let width = columns.len();
    let reduced = rref(&combined.hstack(&Matrix::identity(field, n)), field);
    let mut left_inverse = Matrix::zeros(field, width, n);
    for i in 0..width {
        for j in 0..n {
            left_inverse.set(i, j, reduced.reduced.get(i, width + j).clone());
        }
    }
    Ok(Quotient { field: field.clone(), sub_dim: k, representatives, combined, left_inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> Field {
        Field::prime(7, 3, 2).unwrap()
    }

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect(),
            cols,
        )
        .unwrap()
    }

    fn v(field: &Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let f = f7();
        let z = Matrix::zeros(&f, 2, 3);
        let r = rref(&z, &f);
        assert_eq!((r.rank, r.pivots.len()), (0, 0));
        let id = Matrix::identity(&f, 3);
        let r = rref(&id, &f);
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
        let r = rref(&m(&f, &[&[2, 4], &[1, 2]]), &f);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_and_image_examples() {
        let f = f7();
        let a = m(&f, &[&[2, 1]]);
        assert_eq!(kernel_basis(&a, &f).dim(), 1);
        assert_eq!(image_basis(&a, &f).dim(), 1);
        assert_eq!(kernel_basis(&Matrix::identity(&f, 3), &f).dim(), 0);
        let z = Matrix::zeros(&f, 2, 4);
        assert_eq!(kernel_basis(&z, &f).dim(), 4);
        assert_eq!(image_basis(&z, &f).dim(), 0);
    }

    #[test]
    fn empty_matrices() {
        let f = f7();
        let a = Matrix::zeros(&f, 0, 3);
        assert_eq!(kernel_basis(&a, &f).dim(), 3);
        assert_eq!(image_basis(&a, &f).dim(), 0);
        let b = Matrix::zeros(&f, 3, 0);
        assert_eq!(kernel_basis(&b, &f).dim(), 0);
        assert_eq!(b.rank(&f), 0);
        assert_eq!(solve(&b, &v(&f, &[0, 0, 0]), &f).unwrap(), Some(vec![]));
        assert_eq!(solve(&b, &v(&f, &[0, 1, 0]), &f).unwrap(), None);
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        let b = v(&f, &[3, 1, 4]);
        assert_eq!(solve(&Matrix::identity(&f, 3), &b, &f).unwrap(), Some(b.clone()));
        assert_eq!(solve(&m(&f, &[&[2, 1]]), &v(&f, &[3]), &f).unwrap(), Some(v(&f, &[5, 0])));
        assert_eq!(solve(&Matrix::zeros(&f, 1, 2), &v(&f, &[1]), &f).unwrap(), None);
        assert!(solve(&Matrix::zeros(&f, 1, 2), &v(&f, &[1, 1]), &f).is_err());
    }

    #[test]
    fn quotient_examples() {
        let f = f7();
        let amb = Subspace::full(&f, 2);
        let sub = Subspace::from_basis(&f, 2, &[v(&f, &[1, 0])]);
        let q = quotient(&amb, &sub, &f).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.representatives(), &[v(&f, &[0, 1])]);
        assert_eq!(q.project(&v(&f, &[5, 3])), v(&f, &[3]));
        assert_eq!(quotient(&amb, &amb, &f).unwrap().dim(), 0);
        let q0 = quotient(&amb, &Subspace::zero(&f, 2), &f).unwrap();
        assert_eq!(q0.dim(), 2);
        assert_eq!(q0.representatives(), &[v(&f, &[1, 0]), v(&f, &[0, 1])]);
    }

    #[test]
    fn quotient_requires_containment() {
        let f = f7();
        let amb = Subspace::from_basis(&f, 2, &[v(&f, &[1, 0])]);
        let sub = Subspace::from_basis(&f, 2, &[v(&f, &[0, 1])]);
        assert_eq!(quotient(&amb, &sub, &f), Err(Error::NotContained));
        let q = quotient(&amb, &Subspace::zero(&f, 2), &f).unwrap();
        assert_eq!(q.try_project(&v(&f, &[0, 1])), Err(Error::NotContained));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f7();
        let a = m(&f, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&inv, &f), Matrix::identity(&f, 2));
        assert!(m(&f, &[&[2, 4], &[1, 2]]).inverse(&f).is_none());
    }

    #[test]
    fn cyclotomic_rank() {
        let f = Field::cyclotomic(3).unwrap();
        let q = f.q().clone();
        let q2 = f.mul(&q, &q);
        // rows (1, q) and (q, q^2) are dependent
        let a = Matrix::from_rows(vec![vec![f.one(), q.clone()], vec![q, q2]], 2).unwrap();
        assert_eq!(a.rank(&f), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c))
        })
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(7, 3, 2).unwrap()),
            Just(Field::prime(11, 5, 3).unwrap()),
            Just(Field::cyclotomic(3).unwrap()),
            Just(Field::cyclotomic(4).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn rank_nullity((r, c, xs) in arb_matrix(), field in arb_field(), twist in 0i64..3) {
            let data: Vec<Scalar> = xs.iter().enumerate().map(|(i, &x)| {
                let s = field.from_i64(x);
                if i % 2 == 0 { field.mul(&s, &field.q_pow(twist)) } else { s }
            }).collect();
            let a = Matrix::new(r, c, data).unwrap();
            let rank = a.rank(&field);
            let ker = kernel_basis(&a, &field);
            prop_assert_eq!(rank + ker.dim(), c);
            for k in ker.vectors() {
                prop_assert!(a.apply(&k, &field).iter().all(|x| field.is_zero(x)));
            }
            prop_assert_eq!(image_basis(&a, &field).dim(), rank);
        }

        #[test]
        fn solve_is_exact((r, c, xs) in arb_matrix(), ys in proptest::collection::vec(-3i64..4, 5)) {
            let field = Field::prime(7, 3, 2).unwrap();
            let a = Matrix::new(r, c, xs.iter().map(|&x| field.from_i64(x)).collect()).unwrap();
            let b: Vec<Scalar> = ys[..r].iter().map(|&y| field.from_i64(y)).collect();
            let image = image_basis(&a, &field);
            match solve(&a, &b, &field).unwrap() {
                Some(x) => prop_assert_eq!(a.apply(&x, &field), b),
                None => prop_assert!(!image.contains(&b, &field)),
            }
        }

        #[test]
        fn projection_of_representatives_is_identity((r, c, xs) in arb_matrix()) {
            let field = Field::prime(11, 5, 3).unwrap();
            let a = Matrix::new(r, c, xs.iter().map(|&x| field.from_i64(x)).collect()).unwrap();
            let amb = Subspace::full(&field, r);
            let sub = image_basis(&a, &field);
            let q = quotient(&amb, &sub, &field).unwrap();
            prop_assert_eq!(q.dim() + sub.dim(), r);
            for (i, rep) in q.representatives().iter().enumerate() {
                let coords = q.project(rep);
                for (j, x) in coords.iter().enumerate() {
                    prop_assert_eq!(x.clone(), field.from_i64((i == j) as i64));
                }
            }
            for s in sub.vectors() {
                prop_assert!(q.is_zero_class(&s));
            }
        }
    }
}
