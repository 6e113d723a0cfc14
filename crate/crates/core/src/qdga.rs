//! Graded algebras given by structure constants, N-differentials on them,
//! and the graded q-differential algebra conditions.
//!
//! A [`GradedAlgebra`] is stored up to a degree window `D`: bases of
//! `A^0 .. A^D` and the product `A^i ⊗ A^j → A^{i+j}` for `i + j <= D`.
//! Anything landing above `D` is unknown, so no check ever asserts a
//! relation there.
//!
//! Algebras may also carry a secondary nonnegative weight per basis vector
//! (the polynomial degree in `A ⊗ ℚ[x]`) with its own window. Products whose
//! weight exceeds that window are truncated and likewise excluded from every
//! check.

use std::collections::BTreeMap;

use crate::coeff::{q_int, validate_assumption_a, AssumptionReport, Field, Scalar};
use crate::error::{Error, Result};
use crate::exactla::Matrix;

/// Per-basis-vector weights with a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub per_degree: Vec<Vec<u32>>,
    pub window: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    window: usize,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    unit: Vec<Scalar>,
    mu: BTreeMap<(usize, usize), Matrix>,
    weights: Option<Weights>,
}

/// A basis vector: `(degree, index)`.
pub type BasisElement = (usize, usize);

impl GradedAlgebra {
    /// Assemble an algebra; `mu[(i, j)]` must be `dims[i+j] x dims[i]*dims[j]`
    /// for every `i + j <= window`. Missing labels default to `e{n}_{k}`.
    pub fn new(
        field: &Field,
        dims: Vec<usize>,
        unit: Vec<Scalar>,
        mu: BTreeMap<(usize, usize), Matrix>,
        labels: Option<Vec<Vec<String>>>,
        weights: Option<Weights>,
    ) -> Result<GradedAlgebra> {
        if dims.is_empty() {
            return Err(Error::Shape("an algebra needs at least degree 0".into()));
        }
        let window = dims.len() - 1;
        if unit.len() != dims[0] {
            return Err(Error::Shape(format!("unit has {} coordinates, A^0 has dimension {}", unit.len(), dims[0])));
        }
        let mut full = BTreeMap::new();
        for i in 0..=window {
            for j in 0..=window - i {
                let expected = (dims[i + j], dims[i] * dims[j]);
                let m = match mu.get(&(i, j)) {
                    Some(m) if m.shape() == expected => m.clone(),
                    Some(m) => {
                        return Err(Error::Shape(format!(
                            "mu({i},{j}) is {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            expected.0,
                            expected.1
                        )))
                    }
                    None if expected.0 == 0 || expected.1 == 0 => Matrix::zeros(field, expected.0, expected.1),
                    None => return Err(Error::Shape(format!("missing mu({i},{j})"))),
                };
                full.insert((i, j), m);
            }
        }
        if let Some(extra) = mu.keys().find(|(i, j)| i + j > window) {
            return Err(Error::Shape(format!("mu{extra:?} lies beyond the window {window}")));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != dims.len() || l.iter().zip(&dims).any(|(v, &d)| v.len() != d) {
                    return Err(Error::Shape("labels do not match dimensions".into()));
                }
                l
            }
            None => dims
                .iter()
                .enumerate()
                .map(|(n, &d)| (0..d).map(|k| format!("e{n}_{k}")).collect())
                .collect(),
        };
        if let Some(w) = &weights {
            if w.per_degree.len() != dims.len() || w.per_degree.iter().zip(&dims).any(|(v, &d)| v.len() != d) {
                return Err(Error::Shape("weights do not match dimensions".into()));
            }
        }
        Ok(GradedAlgebra { field: field.clone(), window, dims, labels, unit, mu: full, weights })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The degree window `D`.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn label(&self, x: BasisElement) -> &str {
        &self.labels[x.0][x.1]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[&(i, j)]
    }

    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.mu
    }

    pub fn weights(&self) -> Option<&Weights> {
        self.weights.as_ref()
    }

    pub fn weight(&self, x: BasisElement) -> u32 {
        self.weights.as_ref().map_or(0, |w| w.per_degree[x.0][x.1])
    }

    /// Whether a product of basis vectors of total weight `w` is inside the window.
    pub fn weight_in_window(&self, w: u32) -> bool {
        self.weights.as_ref().is_none_or(|ws| w <= ws.window)
    }

    /// Product of `x ∈ A^i` and `y ∈ A^j`, for `i + j <= D`.
    pub fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mu = self.mu(i, j);
        let mut out = vec![f.zero(); mu.rows()];
        for (a, xa) in x.iter().enumerate().filter(|(_, s)| !f.is_zero(s)) {
            for (b, yb) in y.iter().enumerate().filter(|(_, s)| !f.is_zero(s)) {
                let col = a * y.len() + b;
                let coeff = f.mul(xa, yb);
                for (r, slot) in out.iter_mut().enumerate() {
                    let e = mu.get(r, col);
                    if !f.is_zero(e) {
                        *slot = f.add(slot, &f.mul(&coeff, e));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, x: BasisElement) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dims[x.0]];
        v[x.1] = self.field.one();
        v
    }

    /// Replace one structure constant (used to test that checks detect corruption).
    pub fn set_structure_constant(&mut self, i: usize, j: usize, row: usize, col: usize, v: Scalar) {
        self.mu.get_mut(&(i, j)).expect("product in window").set(row, col, v);
    }

    pub fn set_unit(&mut self, unit: Vec<Scalar>) {
        assert_eq!(unit.len(), self.dims[0]);
        self.unit = unit;
    }
}

/// First failure found by [`check_graded_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraFailure {
    LeftUnit(BasisElement),
    RightUnit(BasisElement),
    Associativity(BasisElement, BasisElement, BasisElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub first_failure: Option<AlgebraFailure>,
    pub triples_checked: usize,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Check the unit laws on every basis vector and associativity on every
/// basis triple with `i + j + k <= D` (and total weight in its window).
pub fn check_graded_algebra(a: &GradedAlgebra) -> AlgebraReport {
    let d = a.window;
    for n in 0..=d {
        for idx in 0..a.dims[n] {
            let x = a.basis_vector((n, idx));
            if a.multiply(0, &a.unit, n, &x) != x {
                return AlgebraReport { first_failure: Some(AlgebraFailure::LeftUnit((n, idx))), triples_checked: 0 };
            }
            if a.multiply(n, &x, 0, &a.unit) != x {
                return AlgebraReport { first_failure: Some(AlgebraFailure::RightUnit((n, idx))), triples_checked: 0 };
            }
        }
    }
    let mut checked = 0;
    for i in 0..=d {
        for j in 0..=d - i {
            for k in 0..=d - i - j {
                for ia in 0..a.dims[i] {
                    for jb in 0..a.dims[j] {
                        for kc in 0..a.dims[k] {
                            let (x, y, z) = ((i, ia), (j, jb), (k, kc));
                            if !a.weight_in_window(a.weight(x) + a.weight(y) + a.weight(z)) {
                                continue;
                            }
                            let (xv, yv, zv) = (a.basis_vector(x), a.basis_vector(y), a.basis_vector(z));
                            let left = a.multiply(i + j, &a.multiply(i, &xv, j, &yv), k, &zv);
                            let right = a.multiply(i, &xv, j + k, &a.multiply(j, &yv, k, &zv));
                            checked += 1;
                            if left != right {
                                return AlgebraReport {
                                    first_failure: Some(AlgebraFailure::Associativity(x, y, z)),
                                    triples_checked: checked,
                                };
                            }
                        }
                    }
                }
            }
        }
    }
    AlgebraReport { first_failure: None, triples_checked: checked }
}

/// A graded algebra with a degree-one endomorphism `d`, stored for degrees
/// `0..D` (`d_n: A^n → A^{n+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qdga {
    algebra: GradedAlgebra,
    d: Vec<Matrix>,
}

impl Qdga {
    pub fn new(algebra: GradedAlgebra, d: Vec<Matrix>) -> Result<Qdga> {
        if d.len() != algebra.window {
            return Err(Error::Shape(format!(
                "expected {} differential matrices (degrees 0..{}), got {}",
                algebra.window,
                algebra.window,
                d.len()
            )));
        }
        for (n, m) in d.iter().enumerate() {
            if m.shape() != (algebra.dims[n + 1], algebra.dims[n]) {
                return Err(Error::Shape(format!(
                    "d at degree {n} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    algebra.dims[n + 1],
                    algebra.dims[n]
                )));
            }
        }
        Ok(Qdga { algebra, d })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn algebra_mut(&mut self) -> &mut GradedAlgebra {
        &mut self.algebra
    }

    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    /// N.
    pub fn order(&self) -> usize {
        self.algebra.field.order()
    }

    pub fn window(&self) -> usize {
        self.algebra.window
    }

    pub fn diff(&self, n: usize) -> &Matrix {
        &self.d[n]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.d
    }

    pub fn set_diff_entry(&mut self, n: usize, row: usize, col: usize, v: Scalar) {
        self.d[n].set(row, col, v);
    }

}

/// `d(xy) - d(x)y - q^n x d(y)` failing to vanish on a basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub x: BasisElement,
    pub y: BasisElement,
    /// `d(xy)`.
    pub lhs: Vec<Scalar>,
    /// `d(x)y + q^n x d(y)`.
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizReport {
    pub pairs_checked: usize,
    pub violations: Vec<LeibnizViolation>,
}

impl LeibnizReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// What the Leibniz scan needs from an algebra with differential. Dense
/// [`Qdga`]s implement it through their structure constants; larger
/// examples can multiply structurally instead.
pub trait DifferentialAlgebra {
    fn field(&self) -> &Field;
    /// The degree window `D`.
    fn window(&self) -> usize;
    fn dim(&self, n: usize) -> usize;
    fn weight(&self, x: BasisElement) -> u32;
    fn weight_in_window(&self, w: u32) -> bool;
    /// Product of `x ∈ A^i` and `y ∈ A^j`, for `i + j <= D`.
    fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vec<Scalar>;
    /// `d` applied to `x ∈ A^n`, `n < D`.
    fn apply_d(&self, n: usize, x: &[Scalar]) -> Vec<Scalar>;

    fn basis_vector(&self, x: BasisElement) -> Vec<Scalar> {
        let f = self.field();
        let mut v = vec![f.zero(); self.dim(x.0)];
        v[x.1] = f.one();
        v
    }
}

impl DifferentialAlgebra for Qdga {
    fn field(&self) -> &Field {
        &self.algebra.field
    }

    fn window(&self) -> usize {
        self.algebra.window
    }

    fn dim(&self, n: usize) -> usize {
        self.algebra.dim(n)
    }

    fn weight(&self, x: BasisElement) -> u32 {
        self.algebra.weight(x)
    }

    fn weight_in_window(&self, w: u32) -> bool {
        self.algebra.weight_in_window(w)
    }

    fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.multiply(i, x, j, y)
    }

    fn apply_d(&self, n: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.d[n].apply(x, &self.algebra.field)
    }
}

/// Compare `d(xy)` with `d(x)y + q^{deg x} x d(y)` for basis vectors `x, y`
/// with `deg x + deg y + 1 <= D`. Returns `None` when the pair passes or is
/// outside the window.
pub fn leibniz_defect<A>(a: &A, twist: &Scalar, x: BasisElement, y: BasisElement) -> Option<LeibnizViolation>
where
    A: DifferentialAlgebra + ?Sized,
{
    let f = a.field();
    let (n, s) = (x.0, y.0);
    if n + s + 1 > a.window() || !a.weight_in_window(a.weight(x) + a.weight(y)) {
        return None;
    }
    let (xv, yv) = (a.basis_vector(x), a.basis_vector(y));
    let lhs = a.apply_d(n + s, &a.multiply(n, &xv, s, &yv));
    let first = a.multiply(n + 1, &a.apply_d(n, &xv), s, &yv);
    let second = a.multiply(n, &xv, s + 1, &a.apply_d(s, &yv));
    let qn = f.pow(twist, n as u64);
    let rhs: Vec<Scalar> = first.iter().zip(&second).map(|(u, v)| f.add(u, &f.mul(&qn, v))).collect();
    if lhs == rhs {
        None
    } else {
        Some(LeibnizViolation { x, y, lhs, rhs })
    }
}

/// Scan basis pairs in order of (deg x, deg y, index x, index y) using
/// `twist` in place of `q`. `keep` filters pairs; `limit` stops the scan
/// after that many violations.
pub fn scan_leibniz<A, F>(a: &A, twist: &Scalar, mut keep: F, limit: Option<usize>) -> LeibnizReport
where
    A: DifferentialAlgebra + ?Sized,
    F: FnMut(BasisElement, BasisElement) -> bool,
{
    let mut report = LeibnizReport { pairs_checked: 0, violations: Vec::new() };
    let window = a.window();
    for n in 0..window {
        for s in 0..window - n {
            for xi in 0..a.dim(n) {
                for yi in 0..a.dim(s) {
                    let (x, y) = ((n, xi), (s, yi));
                    if !keep(x, y) || !a.weight_in_window(a.weight(x) + a.weight(y)) {
                        continue;
                    }
                    report.pairs_checked += 1;
                    if let Some(v) = leibniz_defect(a, twist, x, y) {
                        report.violations.push(v);
                        if limit.is_some_and(|l| report.violations.len() >= l) {
                            return report;
                        }
                    }
                }
            }
        }
    }
    report
}

/// The twisted Leibniz rule `d(xy) = d(x)y + q^n x d(y)` on every basis pair
/// in the window.
pub fn check_twisted_leibniz(q: &Qdga) -> LeibnizReport {
    scan_leibniz(q, q.field().q(), |_, _| true, None)
}

/// Degrees `n` with `n + N <= D` where `d^N: A^n → A^{n+N}` is not zero.
pub fn nilpotency_failures(q: &Qdga) -> Vec<usize> {
    nilpotency_failures_of(q.field(), &q.algebra.dims, &q.d, q.order())
}

/// Same as [`nilpotency_failures`] for bare per-degree matrices
/// `d[n]: A^n → A^{n+1}`.
pub fn nilpotency_failures_of(field: &Field, dims: &[usize], d: &[Matrix], big_n: usize) -> Vec<usize> {
    (0..dims.len())
        .filter(|&n| n + big_n <= d.len())
        .filter(|&n| {
            let mut acc = Matrix::identity(field, dims[n]);
            for m in &d[n..n + big_n] {
                acc = m.mul(&acc, field);
            }
            !acc.is_zero(field)
        })
        .collect()
}

/// Conjunction of every condition for a graded q-differential algebra.
#[derive(Clone, Debug)]
pub struct QdgaVerdict {
    pub assumption: AssumptionReport,
    pub algebra: AlgebraReport,
    pub nilpotency_failures: Vec<usize>,
    pub leibniz: LeibnizReport,
}

impl QdgaVerdict {
    pub fn passed(&self) -> bool {
        self.assumption.passed && self.algebra.passed() && self.nilpotency_failures.is_empty() && self.leibniz.passed()
    }
}

pub fn check_qdga(q: &Qdga) -> QdgaVerdict {
    QdgaVerdict {
        assumption: validate_assumption_a(q.field()),
        algebra: check_graded_algebra(&q.algebra),
        nilpotency_failures: nilpotency_failures(q),
        leibniz: check_twisted_leibniz(q),
    }
}

/// `K[θ]` truncated at degree `D` with `d(θ^a) = [a]_q θ^{a+1}`.
///
/// The field's `q` is used as is; callers wanting Assumption (A) enforced
/// should use [`qpoly_example`].
pub fn qpoly_unchecked(field: &Field, window: usize) -> Qdga {
    let dims = vec![1; window + 1];
    let one = || Matrix::identity(field, 1);
    let mut mu = BTreeMap::new();
    for i in 0..=window {
        for j in 0..=window - i {
            mu.insert((i, j), one());
        }
    }
    let labels = (0..=window)
        .map(|a| {
            vec![match a {
                0 => "1".to_string(),
                1 => "θ".to_string(),
                _ => format!("θ^{a}"),
            }]
        })
        .collect();
    let algebra = GradedAlgebra::new(field, dims, vec![field.one()], mu, Some(labels), None)
        .expect("consistent shapes");
    let d = (0..window)
        .map(|a| Matrix::new(1, 1, vec![q_int(field, a)]).expect("1x1"))
        .collect();
    Qdga::new(algebra, d).expect("consistent shapes")
}

/// The q-polynomial example; requires Assumption (A) and `D >= N`.
pub fn qpoly_example(field: &Field, window: usize) -> Result<Qdga> {
    validate_assumption_a(field).into_result()?;
    if window < field.order() {
        return Err(Error::IndexOutOfRange(format!("window {window} is below N = {}", field.order())));
    }
    Ok(qpoly_unchecked(field, window))
}

/// `A^0 = K`, nothing above, `d = 0`: the unit object.
pub fn ground_field_algebra(field: &Field, window: usize) -> Qdga {
    let mut dims = vec![0; window + 1];
    dims[0] = 1;
    let mut mu = BTreeMap::new();
    mu.insert((0, 0), Matrix::identity(field, 1));
    let algebra = GradedAlgebra::new(field, dims.clone(), vec![field.one()], mu, None, None).expect("shapes");
    let d = (0..window).map(|n| Matrix::zeros(field, dims[n + 1], dims[n])).collect();
    Qdga::new(algebra, d).expect("shapes")
}

/// Result of [`twisted_tensor`] with the checks it is expected to pass or fail.
#[derive(Clone, Debug)]
pub struct TwistedTensor {
    pub qdga: Qdga,
    pub nilpotency_failures: Vec<usize>,
    pub leibniz: LeibnizReport,
}

/// `A ⊗ B` with product `(a⊗b)(a'⊗b') = q^{|b||a'|} aa' ⊗ bb'` and
/// differential `d(a⊗b) = da⊗b + q^{|a|} a⊗db`, on the window
/// `min(D_A, D_B)`.
pub fn twisted_tensor(q1: &Qdga, q2: &Qdga) -> Result<TwistedTensor> {
    let f = q1.field();
    if f != q2.field() {
        return Err(Error::FieldMismatch);
    }
    let (a, b) = (&q1.algebra, &q2.algebra);
    if a.weights.is_some() || b.weights.is_some() {
        return Err(Error::Unsupported("twisted tensor of weighted algebras".into()));
    }
    let window = a.window.min(b.window);
    // block offsets: offsets[n][i] = start of A^i ⊗ B^{n-i} inside degree n
    let mut offsets = vec![vec![0usize; window + 1]; window + 1];
    let mut dims = vec![0usize; window + 1];
    let mut labels = vec![Vec::new(); window + 1];
    for n in 0..=window {
        for i in 0..=n {
            offsets[n][i] = dims[n];
            dims[n] += a.dims[i] * b.dims[n - i];
            for x in 0..a.dims[i] {
                for y in 0..b.dims[n - i] {
                    labels[n].push(format!("{}⊗{}", a.labels[i][x], b.labels[n - i][y]));
                }
            }
        }
    }
    let index = |n: usize, i: usize, x: usize, y: usize| offsets[n][i] + x * b.dims[n - i] + y;

    let mut unit = vec![f.zero(); dims[0]];
    for (x, ux) in a.unit.iter().enumerate() {
        for (y, uy) in b.unit.iter().enumerate() {
            unit[index(0, 0, x, y)] = f.mul(ux, uy);
        }
    }

    let mut mu = BTreeMap::new();
    for n1 in 0..=window {
        for n2 in 0..=window - n1 {
            let mut m = Matrix::zeros(f, dims[n1 + n2], dims[n1] * dims[n2]);
            for i1 in 0..=n1 {
                let j1 = n1 - i1;
                for i2 in 0..=n2 {
                    let j2 = n2 - i2;
                    let sign = f.q_pow((j1 * i2) as i64);
                    let pa = a.mu(i1, i2);
                    let pb = b.mu(j1, j2);
                    for x1 in 0..a.dims[i1] {
                        for y1 in 0..b.dims[j1] {
                            for x2 in 0..a.dims[i2] {
                                for y2 in 0..b.dims[j2] {
                                    let col = index(n1, i1, x1, y1) * dims[n2] + index(n2, i2, x2, y2);
                                    let ca = x1 * a.dims[i2] + x2;
                                    let cb = y1 * b.dims[j2] + y2;
                                    for r in 0..a.dims[i1 + i2] {
                                        let u = pa.get(r, ca);
                                        if f.is_zero(u) {
                                            continue;
                                        }
                                        for s in 0..b.dims[j1 + j2] {
                                            let v = pb.get(s, cb);
                                            if f.is_zero(v) {
                                                continue;
                                            }
                                            let row = index(n1 + n2, i1 + i2, r, s);
                                            let val = f.mul(&sign, &f.mul(u, v));
                                            m.set(row, col, f.add(m.get(row, col), &val));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            mu.insert((n1, n2), m);
        }
    }

    let mut d = Vec::with_capacity(window);
    for n in 0..window {
        let mut m = Matrix::zeros(f, dims[n + 1], dims[n]);
        for i in 0..=n {
            let j = n - i;
            let (da, db) = (q1.diff(i), q2.diff(j));
            let twist = f.q_pow(i as i64);
            for x in 0..a.dims[i] {
                for y in 0..b.dims[j] {
                    let col = index(n, i, x, y);
                    for r in 0..a.dims[i + 1] {
                        let u = da.get(r, x);
                        if !f.is_zero(u) {
                            let row = index(n + 1, i + 1, r, y);
                            m.set(row, col, f.add(m.get(row, col), u));
                        }
                    }
                    for s in 0..b.dims[j + 1] {
                        let v = db.get(s, y);
                        if !f.is_zero(v) {
                            let row = index(n + 1, i, x, s);
                            m.set(row, col, f.add(m.get(row, col), &f.mul(&twist, v)));
                        }
                    }
                }
            }
        }
        d.push(m);
    }
    let algebra = GradedAlgebra::new(f, dims, unit, mu, Some(labels), None)?;
    let qdga = Qdga::new(algebra, d)?;
    Ok(TwistedTensor {
        nilpotency_failures: nilpotency_failures(&qdga),
        leibniz: check_twisted_leibniz(&qdga),
        qdga,
    })
}
