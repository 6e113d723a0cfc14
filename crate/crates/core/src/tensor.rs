//! Tensor product of N-complexes with the q-twisted differential
//! `d(x ⊗ y) = dx ⊗ y + q^r x ⊗ dy` for `x` of degree `r`.
//!
//! Basis convention for `(C0 ⊗ C1)^n`: the blocks `C0^r ⊗ C1^s` with
//! `r + s = n` in increasing `r`, and inside a block the basis vector
//! `e_i ⊗ f_j` sits at position `i * dim C1^s + j`.

use std::collections::BTreeMap;

use crate::coeff::{q_binomial_triangle, Field, Scalar};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::ncomplex::{GradedDims, NComplex};

/// Block offsets of a tensor product of two graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    left: GradedDims,
    right: GradedDims,
    dims: GradedDims,
    offsets: BTreeMap<(i64, i64), usize>,
}

impl TensorLayout {
    pub fn new(left: &GradedDims, right: &GradedDims) -> TensorLayout {
        let mut by_degree: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &r in left.keys() {
            for &s in right.keys() {
                by_degree.entry(r + s).or_default().push((r, s));
            }
        }
        let mut dims = GradedDims::new();
        let mut offsets = BTreeMap::new();
        for (n, mut blocks) in by_degree {
            blocks.sort();
            let mut off = 0;
            for (r, s) in blocks {
                offsets.insert((r, s), off);
                off += left[&r] * right[&s];
            }
            dims.insert(n, off);
        }
        TensorLayout { left: left.clone(), right: right.clone(), dims, offsets }
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    /// Offset of the block `left^r ⊗ right^s` inside degree `r + s`.
    pub fn offset(&self, r: i64, s: i64) -> Option<usize> {
        self.offsets.get(&(r, s)).copied()
    }

    /// Position of `e_i ⊗ f_j` (with `e_i ∈ left^r`, `f_j ∈ right^s`) in degree `r + s`.
    pub fn index(&self, r: i64, i: usize, s: i64, j: usize) -> usize {
        self.offsets[&(r, s)] + i * self.right[&s] + j
    }

    /// Add `c · (x0 ⊗ x1)` into `out`, a vector of degree `r + s`.
    pub fn accumulate(
        &self,
        field: &Field,
        out: &mut [Scalar],
        c: &Scalar,
        r: i64,
        x0: &[Scalar],
        s: i64,
        x1: &[Scalar],
    ) {
        if x0.is_empty() || x1.is_empty() || field.is_zero(c) {
            return;
        }
        let off = self.offsets[&(r, s)];
        let w = x1.len();
        for (i, a) in x0.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            let ca = field.mul(c, a);
            for (j, b) in x1.iter().enumerate() {
                if !field.is_zero(b) {
                    let idx = off + i * w + j;
                    out[idx] = field.add(&out[idx], &field.mul(&ca, b));
                }
            }
        }
    }
}

fn check_pair(c0: &NComplex, c1: &NComplex) -> Result<Field> {
    if c0.order() != c1.order() {
        return Err(Error::OrderMismatch(c0.order(), c1.order()));
    }
    if c0.field() != c1.field() {
        return Err(Error::FieldMismatch);
    }
    c0.field().validate_assumption_a().into_result()?;
    for (side, c) in [("left", c0), ("right", c1)] {
        if let Some(n) = c.validate().failing_degrees.first() {
            return Err(Error::InvalidComplex(format!("{side} factor has d^N != 0 at degree {n}")));
        }
    }
    Ok(c0.field().clone())
}

/// The tensor product `C0 ⊗ C1`.
pub fn tensor(c0: &NComplex, c1: &NComplex) -> Result<NComplex> {
    let field = check_pair(c0, c1)?;
    let layout = TensorLayout::new(c0.dims(), c1.dims());
    let mut d = BTreeMap::new();
    for (&n, &dim) in layout.dims() {
        let mut m = Matrix::zeros(&field, layout.dim(n + 1), dim);
        for (&r, &a) in c0.dims() {
            let s = n - r;
            let b = c1.dim(s);
            if b == 0 {
                continue;
            }
            let col = layout.offset(r, s).expect("block exists");
            if let Some(row) = layout.offset(r + 1, s) {
                let block = c0.diff(r).kron(&Matrix::identity(&field, b), &field);
                m.add_block(row, col, &block, &field);
            }
            if let Some(row) = layout.offset(r, s + 1) {
                // twist by the degree of the left factor, not the total degree
                let block = Matrix::identity(&field, a).kron(&c1.diff(s), &field).scale(&field.q_pow(r), &field);
                m.add_block(row, col, &block, &field);
            }
        }
        d.insert(n, m);
    }
    NComplex::new(&field, layout.dims().clone(), d)
}

/// Evaluate `Σ_p q^{n(k-p)} [k choose p]_q d^p(x0) ⊗ d^{k-p}(x1)` for
/// `x0 ∈ C0^n`, `x1 ∈ C1^s`, as a vector of `(C0 ⊗ C1)^{n+s+k}`.
pub fn d_power_expansion(
    c0: &NComplex,
    c1: &NComplex,
    k: usize,
    n: i64,
    x0: &[Scalar],
    s: i64,
    x1: &[Scalar],
) -> Result<Vec<Scalar>> {
    let field = check_pair(c0, c1)?;
    let big_n = c0.order();
    if k > big_n {
        return Err(Error::IndexOutOfRange(format!("k = {k} exceeds N = {big_n}")));
    }
    if x0.len() != c0.dim(n) || x1.len() != c1.dim(s) {
        return Err(Error::Shape(format!(
            "elements of length {}, {} in degrees {n}, {s} of dimensions {}, {}",
            x0.len(),
            x1.len(),
            c0.dim(n),
            c1.dim(s)
        )));
    }
    let layout = TensorLayout::new(c0.dims(), c1.dims());
    let total = n + s + k as i64;
    let mut out = vec![field.zero(); layout.dim(total)];
    let binomials = q_binomial_triangle(&field, k).swap_remove(k);
    for (p, binom) in binomials.iter().enumerate() {
        let left = c0.apply_d_power(n, p, x0);
        let right = c1.apply_d_power(s, k - p, x1);
        let coeff = field.mul(&field.q_pow(n * (k - p) as i64), binom);
        let r = n + p as i64;
        let t = s + (k - p) as i64;
        if layout.offset(r, t).is_some() {
            layout.accumulate(&field, &mut out, &coeff, r, &left, t, &right);
        }
    }
    Ok(out)
}

/// Compare the differentials of `(C0 ⊗ C1) ⊗ C2` and `C0 ⊗ (C1 ⊗ C2)` under
/// the identification `(x ⊗ y) ⊗ z = x ⊗ (y ⊗ z)` of basis vectors.
pub fn tensor_associator_check(c0: &NComplex, c1: &NComplex, c2: &NComplex) -> Result<bool> {
    let field = check_pair(c0, c1)?;
    check_pair(c1, c2)?;
    let c01 = tensor(c0, c1)?;
    let c12 = tensor(c1, c2)?;
    let left = tensor(&c01, c2)?;
    let right = tensor(c0, &c12)?;
    if left.dims() != right.dims() {
        return Ok(false);
    }
    let l01 = TensorLayout::new(c0.dims(), c1.dims());
    let l12 = TensorLayout::new(c1.dims(), c2.dims());
    let outer_left = TensorLayout::new(c01.dims(), c2.dims());
    let outer_right = TensorLayout::new(c0.dims(), c12.dims());

    // perm[n][left index] = right index
    let mut perm: BTreeMap<i64, Vec<usize>> =
        left.dims().iter().map(|(&n, &d)| (n, vec![usize::MAX; d])).collect();
    for (&r, &a) in c0.dims() {
        for (&s, &b) in c1.dims() {
            for (&t, &c) in c2.dims() {
                let entry = perm.get_mut(&(r + s + t)).expect("degree present");
                for i in 0..a {
                    for j in 0..b {
                        for k in 0..c {
                            let li = outer_left.index(r + s, l01.index(r, i, s, j), t, k);
                            let ri = outer_right.index(r, i, s + t, l12.index(s, j, t, k));
                            entry[li] = ri;
                        }
                    }
                }
            }
        }
    }
    let permute = |n: i64, v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); v.len()];
        for (li, x) in v.iter().enumerate() {
            out[perm[&n][li]] = x.clone();
        }
        out
    };
    for (&n, &dim) in left.dims() {
        let dl = left.diff(n);
        let dr = right.diff(n);
        for col in 0..dim {
            let mut e = vec![field.zero(); dim];
            e[col] = field.one();
            let via_left = permute(n + 1, &dl.apply(&e, &field));
            let via_right = dr.apply(&permute(n, &e), &field);
            if via_left != via_right {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
