//! N-complexes, their homomorphisms and amplitude cohomology.
//!
//! An [`NComplex`] is a finitely supported graded vector space with a degree
//! one endomorphism `d` such that `d^N = 0`. Degrees are cochain degrees
//! (`d` raises degree) and may be negative. Outside the stored support every
//! module is zero, so every "for all degrees" check only needs to look at the
//! window `[lo - N, hi + N]`.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::{Field, Scalar};
use crate::error::{Error, Result};
use crate::exactla::{image_basis, kernel_basis, quotient, Matrix, Quotient, Subspace};

/// Graded dimensions; degrees absent from the map have dimension zero.
pub type GradedDims = BTreeMap<i64, usize>;

fn dim_of(dims: &GradedDims, n: i64) -> usize {
    dims.get(&n).copied().unwrap_or(0)
}

fn strip_zero_dims(dims: GradedDims) -> GradedDims {
    dims.into_iter().filter(|&(_, d)| d > 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NComplex {
    field: Field,
    dims: GradedDims,
    /// `d[n]: C^n -> C^{n+1}` for every `n` with `dims(n) > 0`.
    d: BTreeMap<i64, Matrix>,
}

impl NComplex {
    /// Assemble a complex from graded dimensions and differentials.
    ///
    /// Every degree with nonzero dimension needs a differential of shape
    /// `dims(n+1) x dims(n)`, except that maps into a zero module may be
    /// omitted. Matrices with no columns are ignored. `N` is taken from the
    /// field.
    pub fn new(field: &Field, dims: GradedDims, d: BTreeMap<i64, Matrix>) -> Result<NComplex> {
        let dims = strip_zero_dims(dims);
        for (&n, m) in &d {
            let expected = (dim_of(&dims, n + 1), dim_of(&dims, n));
            if m.shape() != expected && !(expected.1 == 0 && m.cols() == 0) {
                return Err(Error::Shape(format!(
                    "differential at degree {n} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        let mut out = BTreeMap::new();
        for (&n, &dn) in &dims {
            let target = dim_of(&dims, n + 1);
            let m = match d.get(&n) {
                Some(m) => m.clone(),
                None if target == 0 => Matrix::zeros(field, 0, dn),
                None => {
                    return Err(Error::Shape(format!(
                        "missing differential at degree {n} ({target}x{dn})"
                    )))
                }
            };
            out.insert(n, m);
        }
        Ok(NComplex { field: field.clone(), dims, d: out })
    }

    pub fn zero(field: &Field) -> NComplex {
        NComplex { field: field.clone(), dims: BTreeMap::new(), d: BTreeMap::new() }
    }

    /// One-dimensional modules in degrees `start..start+len` with identity
    /// differentials between them. It is an N-complex iff `len <= N`.
    pub fn staircase(field: &Field, start: i64, len: usize) -> NComplex {
        let dims: GradedDims = (0..len as i64).map(|i| (start + i, 1)).collect();
        let d = (0..len as i64)
            .map(|i| {
                let rows = usize::from(i + 1 < len as i64);
                let m = if rows == 1 { Matrix::identity(field, 1) } else { Matrix::zeros(field, 0, 1) };
                (start + i, m)
            })
            .collect();
        NComplex::new(field, dims, d).expect("staircase shapes are consistent")
    }

    /// Zero differential on the given dimensions.
    pub fn with_zero_differential(field: &Field, dims: GradedDims) -> NComplex {
        let dims = strip_zero_dims(dims);
        let d = dims
            .iter()
            .map(|(&n, &dn)| (n, Matrix::zeros(field, dim_of(&dims, n + 1), dn)))
            .collect();
        NComplex { field: field.clone(), dims, d }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// N.
    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn dim(&self, n: i64) -> usize {
        dim_of(&self.dims, n)
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// `(lo, hi)` of the nonzero degrees, `None` for the zero complex.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.dims.keys().next()?, *self.dims.keys().next_back()?))
    }

    /// Degrees `lo - N ..= hi + N`; empty for the zero complex.
    pub fn window(&self) -> Vec<i64> {
        match self.support() {
            Some((lo, hi)) => {
                let n = self.order() as i64;
                (lo - n..=hi + n).collect()
            }
            None => Vec::new(),
        }
    }

    /// The differential `C^n -> C^{n+1}`.
    pub fn diff(&self, n: i64) -> Matrix {
        match self.d.get(&n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(n + 1), self.dim(n)),
        }
    }

    pub fn differentials(&self) -> &BTreeMap<i64, Matrix> {
        &self.d
    }

    /// The composite `d^k: C^n -> C^{n+k}`; `k = 0` is the identity.
    pub fn d_power(&self, n: i64, k: usize) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.dim(n));
        for i in 0..k as i64 {
            acc = self.diff(n + i).mul(&acc, &self.field);
        }
        acc
    }

    /// Apply `d^k` to a vector of `C^n`.
    pub fn apply_d_power(&self, n: i64, k: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = v.to_vec();
        for i in 0..k as i64 {
            acc = self.diff(n + i).apply(&acc, &self.field);
        }
        acc
    }

    pub fn validate(&self) -> ComplexReport {
        validate_ncomplex(self)
    }
}

/// Result of [`validate_ncomplex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    /// Degrees `n` at which `d^N: C^n -> C^{n+N}` is not zero.
    pub failing_degrees: Vec<i64>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failing_degrees.is_empty()
    }
}

/// Check `d^N = 0` in every degree. Shapes are already enforced by
/// [`NComplex::new`].
pub fn validate_ncomplex(c: &NComplex) -> ComplexReport {
    let n = c.order();
    let failing_degrees = c
        .dims
        .keys()
        .copied()
        .filter(|&deg| !c.d_power(deg, n).is_zero(&c.field))
        .collect();
    ComplexReport { failing_degrees }
}

/// A linear map between graded spaces raising degree by `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    field: Field,
    shift: i64,
    source: GradedDims,
    target: GradedDims,
    /// `mats[n]: source^n -> target^{n+shift}`; only nonzero components are
    /// stored, so equal maps compare equal.
    mats: BTreeMap<i64, Matrix>,
}

impl GradedMap {
    pub fn new(
        field: &Field,
        shift: i64,
        source: GradedDims,
        target: GradedDims,
        mats: BTreeMap<i64, Matrix>,
    ) -> Result<GradedMap> {
        let source = strip_zero_dims(source);
        let target = strip_zero_dims(target);
        let mut kept = BTreeMap::new();
        for (n, m) in mats {
            let expected = (dim_of(&target, n + shift), dim_of(&source, n));
            if m.shape() != expected {
                return Err(Error::Shape(format!(
                    "map at degree {n} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
            if expected.0 > 0 && expected.1 > 0 && !m.is_zero(field) {
                kept.insert(n, m);
            }
        }
        Ok(GradedMap { field: field.clone(), shift, source, target, mats: kept })
    }

    pub fn identity(c: &NComplex) -> GradedMap {
        let mats = c.dims.iter().map(|(&n, &d)| (n, Matrix::identity(&c.field, d))).collect();
        GradedMap { field: c.field.clone(), shift: 0, source: c.dims.clone(), target: c.dims.clone(), mats }
    }

    pub fn zero(field: &Field, shift: i64, source: GradedDims, target: GradedDims) -> GradedMap {
        GradedMap {
            field: field.clone(),
            shift,
            source: strip_zero_dims(source),
            target: strip_zero_dims(target),
            mats: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn source_dims(&self) -> &GradedDims {
        &self.source
    }

    pub fn target_dims(&self) -> &GradedDims {
        &self.target
    }

    /// The component `source^n -> target^{n+shift}`.
    pub fn mat(&self, n: i64) -> Matrix {
        match self.mats.get(&n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, dim_of(&self.target, n + self.shift), dim_of(&self.source, n)),
        }
    }

    /// Nonzero components.
    pub fn components(&self) -> &BTreeMap<i64, Matrix> {
        &self.mats
    }

    pub fn apply(&self, n: i64, v: &[Scalar]) -> Vec<Scalar> {
        self.mat(n).apply(v, &self.field)
    }

    pub fn is_zero(&self) -> bool {
        self.mats.values().all(|m| m.is_zero(&self.field))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.target != other.source {
            return Err(Error::Shape("maps are not composable".into()));
        }
        let mats = self
            .mats
            .iter()
            .map(|(&n, m)| (n, other.mat(n + self.shift).mul(m, &self.field)))
            .collect();
        GradedMap::new(&self.field, self.shift + other.shift, self.source.clone(), other.target.clone(), mats)
    }
}

/// The first degree where `f ∘ d ≠ d' ∘ f`, if any.
pub fn homomorphism_defect(f: &GradedMap, c: &NComplex, c2: &NComplex) -> Result<Option<i64>> {
    if f.shift != 0 {
        return Err(Error::Shape(format!("homomorphisms have degree 0, got shift {}", f.shift)));
    }
    if f.source != c.dims || f.target != c2.dims {
        return Err(Error::Shape("map dimensions do not match the complexes".into()));
    }
    if c.field != c2.field {
        return Err(Error::FieldMismatch);
    }
    let degrees: BTreeSet<i64> = c.dims.keys().copied().collect();
    for n in degrees {
        let lhs = f.mat(n + 1).mul(&c.diff(n), &c.field);
        let rhs = c2.diff(n).mul(&f.mat(n), &c.field);
        if lhs != rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

pub fn is_homomorphism(f: &GradedMap, c: &NComplex, c2: &NComplex) -> Result<bool> {
    Ok(homomorphism_defect(f, c, c2)?.is_none())
}

/// A basis of the space of homomorphisms `C → C'`, found as the kernel of
/// the linear system `f_{n+1} d_n - d'_n f_n = 0`.
pub fn homomorphism_basis(c: &NComplex, c2: &NComplex) -> Result<Vec<GradedMap>> {
    if c.field != c2.field {
        return Err(Error::FieldMismatch);
    }
    let field = &c.field;
    // unknowns: entries of f_n for degrees where both sides are nonzero
    let mut offsets: BTreeMap<i64, usize> = BTreeMap::new();
    let mut count = 0;
    for (&n, &a) in &c.dims {
        let b = c2.dim(n);
        if b > 0 {
            offsets.insert(n, count);
            count += a * b;
        }
    }
    let var = |n: i64, i: usize, j: usize| offsets.get(&n).map(|o| o + i * c.dim(n) + j);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &n in c.dims.keys() {
        let d = c.diff(n);
        let d2 = c2.diff(n);
        for i in 0..c2.dim(n + 1) {
            for j in 0..c.dim(n) {
                let mut row = vec![field.zero(); count];
                for l in 0..c.dim(n + 1) {
                    if let Some(v) = var(n + 1, i, l) {
                        row[v] = field.add(&row[v], d.get(l, j));
                    }
                }
                for l in 0..c2.dim(n) {
                    if let Some(v) = var(n, l, j) {
                        row[v] = field.sub(&row[v], d2.get(i, l));
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows, count)?;
    let kernel = kernel_basis(&system, field);
    kernel
        .vectors()
        .into_iter()
        .map(|v| {
            let mats = offsets
                .iter()
                .map(|(&n, &o)| {
                    let (rows, cols) = (c2.dim(n), c.dim(n));
                    (n, Matrix::new(rows, cols, v[o..o + rows * cols].to_vec()).expect("block size"))
                })
                .collect();
            GradedMap::new(field, 0, c.dims.clone(), c2.dims.clone(), mats)
        })
        .collect()
}

/// `H^n_(k)(C) = ker(d^k on C^n) / d^{N-k}(C^{n-N+k})` with its chosen bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpace {
    pub degree: i64,
    pub kernel: Subspace,
    pub image: Subspace,
    pub quotient: Quotient,
}

/// Amplitude cohomology `H_(k)(C)` in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplitudeCohomology {
    field: Field,
    k: usize,
    /// Spaces for the degrees where `C^n ≠ 0`.
    spaces: BTreeMap<i64, CohomologySpace>,
}

impl AmplitudeCohomology {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self, n: i64) -> usize {
        self.spaces.get(&n).map_or(0, |s| s.quotient.dim())
    }

    /// Graded dimensions, with zero degrees dropped.
    pub fn dims(&self) -> GradedDims {
        self.spaces
            .iter()
            .map(|(&n, s)| (n, s.quotient.dim()))
            .filter(|&(_, d)| d > 0)
            .collect()
    }

    pub fn space(&self, n: i64) -> Option<&CohomologySpace> {
        self.spaces.get(&n)
    }

    pub fn spaces(&self) -> &BTreeMap<i64, CohomologySpace> {
        &self.spaces
    }

    pub fn representatives(&self, n: i64) -> &[Vec<Scalar>] {
        self.spaces.get(&n).map_or(&[], |s| s.quotient.representatives())
    }

    /// Class coordinates of a cocycle `v ∈ ker d^k ⊆ C^n`.
    pub fn project(&self, n: i64, v: &[Scalar]) -> Vec<Scalar> {
        match self.spaces.get(&n) {
            Some(s) => s.quotient.project(v),
            None => Vec::new(),
        }
    }

    /// Checked projection: fails when `v` is not a `d^k`-cocycle.
    pub fn try_project(&self, n: i64, v: &[Scalar]) -> Result<Vec<Scalar>> {
        match self.spaces.get(&n) {
            Some(s) => s.quotient.try_project(v),
            None if v.is_empty() => Ok(Vec::new()),
            None => Err(Error::Shape(format!("degree {n} is zero but got a vector of length {}", v.len()))),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

/// Amplitude cohomology `H_(k)` for `1 <= k <= N-1`.
pub fn amplitude_cohomology(c: &NComplex, k: usize) -> Result<AmplitudeCohomology> {
    let big_n = c.order();
    if k == 0 || k >= big_n {
        return Err(Error::IndexOutOfRange(format!("k = {k} outside 1..={}", big_n - 1)));
    }
    let field = &c.field;
    let mut spaces = BTreeMap::new();
    for &n in c.dims.keys() {
        let kernel = kernel_basis(&c.d_power(n, k), field);
        let back = (big_n - k) as i64;
        let image = image_basis(&c.d_power(n - back, big_n - k), field);
        let q = quotient(&kernel, &image, field)?;
        spaces.insert(n, CohomologySpace { degree: n, kernel, image, quotient: q });
    }
    Ok(AmplitudeCohomology { field: field.clone(), k, spaces })
}

/// `H_(k)` for every `k` in `1..N`, indexed by `k - 1`.
pub fn cohomology_table(c: &NComplex) -> Result<Vec<AmplitudeCohomology>> {
    (1..c.order()).map(|k| amplitude_cohomology(c, k)).collect()
}

/// The matrix of a map between cohomology spaces, given the image in the
/// target complex of each representative of the source.
///
/// `image_of(n, rep)` must return a vector of `C'^{n+shift}` lying in the
/// cocycles of the target cohomology.
pub fn induced_map<F>(
    source: &AmplitudeCohomology,
    target: &AmplitudeCohomology,
    shift: i64,
    mut image_of: F,
) -> Result<GradedMap>
where
    F: FnMut(i64, &[Scalar]) -> Result<Vec<Scalar>>,
{
    let field = &source.field;
    let mut mats = BTreeMap::new();
    for (&n, space) in &source.spaces {
        let reps = space.quotient.representatives();
        if reps.is_empty() {
            continue;
        }
        let rows = target.dim(n + shift);
        let mut columns = Vec::with_capacity(reps.len());
        for rep in reps {
            let img = image_of(n, rep)?;
            columns.push(target.try_project(n + shift, &img)?);
        }
        mats.insert(n, Matrix::from_columns(field, rows, &columns));
    }
    GradedMap::new(field, shift, source.dims(), target.dims(), mats)
}

/// The map `[x] ↦ [f(x)]` on `H_(k)`.
pub fn induced_on_cohomology(f: &GradedMap, c: &NComplex, c2: &NComplex, k: usize) -> Result<GradedMap> {
    if let Some(n) = homomorphism_defect(f, c, c2)? {
        return Err(Error::NotHomomorphism(n));
    }
    let h = amplitude_cohomology(c, k)?;
    let h2 = amplitude_cohomology(c2, k)?;
    induced_between(f, &h, &h2)
}

/// Like [`induced_on_cohomology`] with precomputed cohomology and no
/// homomorphism check.
pub fn induced_between(f: &GradedMap, h: &AmplitudeCohomology, h2: &AmplitudeCohomology) -> Result<GradedMap> {
    induced_map(h, h2, f.shift, |n, rep| Ok(f.apply(n, rep)))
}

/// `C1 ⊕ C2` with its canonical inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub complex: NComplex,
    pub inclusions: [GradedMap; 2],
    pub projections: [GradedMap; 2],
}

pub fn direct_sum(c1: &NComplex, c2: &NComplex) -> Result<DirectSum> {
    if c1.field != c2.field {
        return Err(Error::FieldMismatch);
    }
    let field = &c1.field;
    let degrees: BTreeSet<i64> = c1.dims.keys().chain(c2.dims.keys()).copied().collect();
    let dims: GradedDims = degrees.iter().map(|&n| (n, c1.dim(n) + c2.dim(n))).collect();
    let mut d = BTreeMap::new();
    for &n in &degrees {
        let mut m = Matrix::zeros(field, c1.dim(n + 1) + c2.dim(n + 1), c1.dim(n) + c2.dim(n));
        m.add_block(0, 0, &c1.diff(n), field);
        m.add_block(c1.dim(n + 1), c1.dim(n), &c2.diff(n), field);
        d.insert(n, m);
    }
    let complex = NComplex::new(field, dims.clone(), d)?;
    let mut inc = [BTreeMap::new(), BTreeMap::new()];
    let mut proj = [BTreeMap::new(), BTreeMap::new()];
    for &n in &degrees {
        let (a, b) = (c1.dim(n), c2.dim(n));
        let mut i1 = Matrix::zeros(field, a + b, a);
        i1.add_block(0, 0, &Matrix::identity(field, a), field);
        let mut i2 = Matrix::zeros(field, a + b, b);
        i2.add_block(a, 0, &Matrix::identity(field, b), field);
        proj[0].insert(n, i1.transpose());
        proj[1].insert(n, i2.transpose());
        inc[0].insert(n, i1);
        inc[1].insert(n, i2);
    }
    let [inc0, inc1] = inc;
    let [proj0, proj1] = proj;
    Ok(DirectSum {
        inclusions: [
            GradedMap::new(field, 0, c1.dims.clone(), dims.clone(), inc0)?,
            GradedMap::new(field, 0, c2.dims.clone(), dims.clone(), inc1)?,
        ],
        projections: [
            GradedMap::new(field, 0, dims.clone(), c1.dims.clone(), proj0)?,
            GradedMap::new(field, 0, dims, c2.dims.clone(), proj1)?,
        ],
        complex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7, 3, 2).unwrap()
    }

    /// (0, K, K) in degrees 1, 2 with d = id: the top of the staircase S(3).
    fn truncated(field: &Field) -> NComplex {
        NComplex::staircase(field, 1, 2)
    }

    fn dims_of(h: &AmplitudeCohomology, degrees: std::ops::RangeInclusive<i64>) -> Vec<usize> {
        degrees.map(|n| h.dim(n)).collect()
    }

    #[test]
    fn staircase_validation() {
        let f = f7();
        let s = NComplex::staircase(&f, 0, 3);
        assert!(s.validate().passed());
        let f2 = Field::prime(7, 2, 6).unwrap();
        let s2 = NComplex::staircase(&f2, 0, 3);
        assert_eq!(s2.validate().failing_degrees, vec![0]);
        assert!(NComplex::zero(&f).validate().passed());
    }

    #[test]
    fn shape_errors() {
        let f = f7();
        let dims: GradedDims = [(0, 1), (1, 2)].into_iter().collect();
        let d = [(0, Matrix::identity(&f, 1))].into_iter().collect();
        assert!(matches!(NComplex::new(&f, dims.clone(), d), Err(Error::Shape(_))));
        assert!(matches!(NComplex::new(&f, dims, BTreeMap::new()), Err(Error::Shape(_))));
    }

    #[test]
    fn d_power_examples() {
        let f = f7();
        let s = NComplex::staircase(&f, 0, 3);
        assert_eq!(s.d_power(0, 2), Matrix::identity(&f, 1));
        assert_eq!(s.d_power(1, 0), Matrix::identity(&f, 1));
        let d3 = s.d_power(0, 3);
        assert_eq!(d3.shape(), (0, 1));
        assert!(d3.is_zero(&f));
    }

    #[test]
    fn cohomology_of_zero_differential() {
        let f = f7();
        let dims: GradedDims = [(-1, 2), (0, 1), (3, 3)].into_iter().collect();
        let c = NComplex::with_zero_differential(&f, dims.clone());
        for k in 1..3 {
            assert_eq!(amplitude_cohomology(&c, k).unwrap().dims(), dims);
        }
    }

    #[test]
    fn staircase_is_acyclic() {
        let f = f7();
        let s = NComplex::staircase(&f, 0, 3);
        for h in cohomology_table(&s).unwrap() {
            assert!(h.dims().is_empty());
        }
    }

    #[test]
    fn truncated_staircase_cohomology() {
        let f = f7();
        let c = truncated(&f);
        let h1 = amplitude_cohomology(&c, 1).unwrap();
        let h2 = amplitude_cohomology(&c, 2).unwrap();
        assert_eq!(dims_of(&h1, 0..=3), vec![0, 0, 1, 0]);
        assert_eq!(dims_of(&h2, 0..=3), vec![0, 1, 0, 0]);
        assert!(amplitude_cohomology(&c, 3).is_err());
        assert!(amplitude_cohomology(&c, 0).is_err());
    }

    #[test]
    fn homomorphism_examples() {
        let f = f7();
        let s = NComplex::staircase(&f, 0, 3);
        assert!(is_homomorphism(&GradedMap::identity(&s), &s, &s).unwrap());
        let zero = GradedMap::zero(&f, 0, s.dims().clone(), s.dims().clone());
        assert!(is_homomorphism(&zero, &s, &s).unwrap());
        let mats = [(0, 1), (1, 0), (2, 1)]
            .into_iter()
            .map(|(n, x)| (n, Matrix::new(1, 1, vec![f.from_i64(x)]).unwrap()))
            .collect();
        let g = GradedMap::new(&f, 0, s.dims().clone(), s.dims().clone(), mats).unwrap();
        assert_eq!(homomorphism_defect(&g, &s, &s).unwrap(), Some(0));
        assert!(matches!(induced_on_cohomology(&g, &s, &s, 1), Err(Error::NotHomomorphism(0))));
    }

    #[test]
    fn induced_identity_and_zero() {
        let f = f7();
        let c = truncated(&f);
        let id = induced_on_cohomology(&GradedMap::identity(&c), &c, &c, 1).unwrap();
        assert_eq!(id.mat(2), Matrix::identity(&f, 1));
        let zero = GradedMap::zero(&f, 0, c.dims().clone(), c.dims().clone());
        assert!(induced_on_cohomology(&zero, &c, &c, 2).unwrap().is_zero());
    }

    #[test]
    fn inclusion_into_staircase_induces_zero() {
        let f = f7();
        let c = truncated(&f);
        let s = NComplex::staircase(&f, 0, 3);
        let mats = [(1, Matrix::identity(&f, 1)), (2, Matrix::identity(&f, 1))].into_iter().collect();
        let inc = GradedMap::new(&f, 0, c.dims().clone(), s.dims().clone(), mats).unwrap();
        assert!(is_homomorphism(&inc, &c, &s).unwrap());
        let ind = induced_on_cohomology(&inc, &c, &s, 2).unwrap();
        assert_eq!(ind.mat(1).shape(), (0, 1));
    }

    #[test]
    fn homomorphisms_of_staircase() {
        let f = f7();
        let s = NComplex::staircase(&f, 0, 3);
        // endomorphisms of an indecomposable staircase are scalars
        let basis = homomorphism_basis(&s, &s).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(is_homomorphism(&basis[0], &s, &s).unwrap());
        let c = NComplex::staircase(&f, 1, 2);
        // maps S(3) -> (0,K,K) must vanish in degree 1 and hence in degree 2
        assert!(homomorphism_basis(&s, &c).unwrap().is_empty());
        // (0,K,K) -> S(3): the inclusion
        assert_eq!(homomorphism_basis(&c, &s).unwrap().len(), 1);
    }

    #[test]
    fn direct_sum_dims_and_cohomology() {
        let f = f7();
        let a = NComplex::with_zero_differential(&f, [(0, 1), (1, 1)].into_iter().collect());
        let b = NComplex::with_zero_differential(&f, [(1, 2)].into_iter().collect());
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.complex.dims(), &[(0, 1), (1, 3)].into_iter().collect::<GradedDims>());
        let z = direct_sum(&a, &NComplex::zero(&f)).unwrap();
        assert_eq!(z.complex, a);
        let c1 = truncated(&f);
        let c2 = NComplex::staircase(&f, -1, 2);
        let sum = direct_sum(&c1, &c2).unwrap();
        for k in 1..3 {
            let hs = amplitude_cohomology(&sum.complex, k).unwrap();
            let h1 = amplitude_cohomology(&c1, k).unwrap();
            let h2 = amplitude_cohomology(&c2, k).unwrap();
            for n in -4..6 {
                assert_eq!(hs.dim(n), h1.dim(n) + h2.dim(n));
            }
        }
        for (i, p) in sum.inclusions.iter().zip(&sum.projections) {
            let comp = i.then(p).unwrap();
            for m in comp.components().values() {
                assert_eq!(*m, Matrix::identity(&f, m.rows()));
            }
        }
    }
}
