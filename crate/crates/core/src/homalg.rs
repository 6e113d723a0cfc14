//! Maps between amplitude cohomologies and the two families of exact
//! hexagons.
//!
//! For one complex, the induced inclusions `[i]^ℓ: H_(m) → H_(m+ℓ)` and the
//! induced differentials `[d]^m: H_(k) → H_(k-m)` fit into the hexagon
//!
//! ```text
//! H_(m) → H_(ℓ+m) → H_(ℓ) → H_(N-m) → H_(N-ℓ-m) → H_(N-ℓ) → H_(m)
//! ```
//!
//! with arrows `[i]^ℓ, [d]^m, [i]^{N-ℓ-m}, [d]^ℓ, [i]^m, [d]^{N-ℓ-m}`.
//!
//! For a short exact sequence `0 → C1 → C2 → C3 → 0`, the maps `α_*`, `β_*`
//! and the connecting maps `∂` give
//!
//! ```text
//! H_(n)(C1) → H_(n)(C2) → H_(n)(C3) → H_(N-n)(C1) → H_(N-n)(C2) → H_(N-n)(C3) → H_(n)(C1)
//! ```
//!
//! The connecting map `∂: H_(k)(C3) → H_(N-k)(C1)` raises degree by `k`.

use std::collections::BTreeSet;

use crate::coeff::{Field, Scalar};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, solve, Matrix};
use crate::ncomplex::{
    amplitude_cohomology, cohomology_table, homomorphism_defect, induced_between, induced_map,
    AmplitudeCohomology, GradedDims, GradedMap, NComplex,
};

fn check_inclusion_indices(big_n: usize, m: usize, l: usize) -> Result<()> {
    if m == 0 || m + l >= big_n {
        return Err(Error::IndexOutOfRange(format!(
            "[i]^{l}: H_({m}) -> H_({}) needs 1 <= m and m + l <= {}",
            m + l,
            big_n - 1
        )));
    }
    Ok(())
}

fn check_d_indices(big_n: usize, k: usize, m: usize) -> Result<()> {
    if m == 0 || k >= big_n || m >= k {
        return Err(Error::IndexOutOfRange(format!(
            "[d]^{m}: H_({k}) -> H_(k-m) needs 1 <= m < k <= {}",
            big_n - 1
        )));
    }
    Ok(())
}

/// `[i]^ℓ` between precomputed `H_(m)` and `H_(m+ℓ)` of the same complex.
pub fn inclusion_between(h_m: &AmplitudeCohomology, h_ml: &AmplitudeCohomology) -> Result<GradedMap> {
    induced_map(h_m, h_ml, 0, |_, rep| Ok(rep.to_vec()))
}

/// `[d]^m` between precomputed `H_(k)` and `H_(k-m)` of `c`.
pub fn d_between(
    c: &NComplex,
    h_k: &AmplitudeCohomology,
    h_km: &AmplitudeCohomology,
    m: usize,
) -> Result<GradedMap> {
    induced_map(h_k, h_km, m as i64, |n, rep| Ok(c.apply_d_power(n, m, rep)))
}

/// The map `[i]^ℓ: H_(m) → H_(m+ℓ)` induced by `ker d^m ⊆ ker d^{m+ℓ}`.
pub fn induced_inclusion(c: &NComplex, m: usize, l: usize) -> Result<GradedMap> {
    check_inclusion_indices(c.order(), m, l)?;
    let h_m = amplitude_cohomology(c, m)?;
    let h_ml = amplitude_cohomology(c, m + l)?;
    inclusion_between(&h_m, &h_ml)
}

/// The map `[d]^m: H_(k) → H_(k-m)`, `[x] ↦ [d^m x]`, of degree `m`.
pub fn induced_d(c: &NComplex, k: usize, m: usize) -> Result<GradedMap> {
    check_d_indices(c.order(), k, m)?;
    let h_k = amplitude_cohomology(c, k)?;
    let h_km = amplitude_cohomology(c, k - m)?;
    d_between(c, &h_k, &h_km, m)
}

/// Exactness data of one hexagon node in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeStatus {
    pub degree: i64,
    pub dim: usize,
    pub composite_zero: bool,
    /// Dimension of the kernel of the outgoing map.
    pub kernel_dim: usize,
    /// Dimension of the image of the incoming map.
    pub image_dim: usize,
}

impl NodeStatus {
    pub fn exact(&self) -> bool {
        self.composite_zero && self.kernel_dim == self.image_dim
    }
}

#[derive(Clone, Debug)]
pub struct HexagonNode {
    pub label: String,
    pub dims: GradedDims,
    pub statuses: Vec<NodeStatus>,
}

impl HexagonNode {
    pub fn exact(&self) -> bool {
        self.statuses.iter().all(NodeStatus::exact)
    }

    pub fn failing_degrees(&self) -> Vec<i64> {
        self.statuses.iter().filter(|s| !s.exact()).map(|s| s.degree).collect()
    }
}

/// Six nodes and the six maps leaving them, in cyclic order.
#[derive(Clone, Debug)]
pub struct HexagonReport {
    pub nodes: Vec<HexagonNode>,
    /// `maps[i]` goes from node `i` to node `i + 1 (mod 6)`.
    pub maps: Vec<(String, GradedMap)>,
}

impl HexagonReport {
    pub fn exact(&self) -> bool {
        self.nodes.iter().all(HexagonNode::exact)
    }
}

/// Check exactness of a cyclic sequence of graded maps at every node and in
/// every degree of `window`.
pub fn check_cycle(
    field: &Field,
    labels: &[String],
    maps: Vec<(String, GradedMap)>,
    window: &[i64],
) -> HexagonReport {
    let len = maps.len();
    let mut nodes = Vec::with_capacity(len);
    for j in 0..len {
        let outgoing = &maps[j].1;
        let incoming = &maps[(j + len - 1) % len].1;
        let dims = outgoing.source_dims().clone();
        let statuses = window
            .iter()
            .map(|&n| {
                let out = outgoing.mat(n);
                let inc = incoming.mat(n - incoming.shift());
                let composite_zero = out.mul(&inc, field).is_zero(field);
                let dim = out.cols();
                NodeStatus {
                    degree: n,
                    dim,
                    composite_zero,
                    kernel_dim: dim - out.rank(field),
                    image_dim: inc.rank(field),
                }
            })
            .collect();
        nodes.push(HexagonNode { label: labels[j].clone(), dims, statuses });
    }
    HexagonReport { nodes, maps }
}

/// Build and check the hexagon for `(ℓ, m)` with `ℓ, m >= 1`, `ℓ + m <= N-1`.
pub fn internal_hexagon(c: &NComplex, l: usize, m: usize) -> Result<HexagonReport> {
    let big_n = c.order();
    if l == 0 || m == 0 || l + m >= big_n {
        return Err(Error::IndexOutOfRange(format!(
            "hexagon needs l, m >= 1 and l + m <= {}, got ({l}, {m})",
            big_n - 1
        )));
    }
    let table = cohomology_table(c)?;
    internal_hexagon_with(c, &table, l, m)
}

/// [`internal_hexagon`] with a precomputed [`cohomology_table`].
pub fn internal_hexagon_with(
    c: &NComplex,
    table: &[AmplitudeCohomology],
    l: usize,
    m: usize,
) -> Result<HexagonReport> {
    let big_n = c.order();
    let h = |k: usize| &table[k - 1];
    let r = big_n - l - m;
    let node_ks = [m, l + m, l, big_n - m, r, big_n - l];
    let maps = vec![
        (format!("[i]^{l}"), inclusion_between(h(m), h(l + m))?),
        (format!("[d]^{m}"), d_between(c, h(l + m), h(l), m)?),
        (format!("[i]^{r}"), inclusion_between(h(l), h(big_n - m))?),
        (format!("[d]^{l}"), d_between(c, h(big_n - m), h(r), l)?),
        (format!("[i]^{m}"), inclusion_between(h(r), h(big_n - l))?),
        (format!("[d]^{r}"), d_between(c, h(big_n - l), h(m), r)?),
    ];
    let labels: Vec<String> = node_ks.iter().map(|k| format!("H_({k})")).collect();
    Ok(check_cycle(c.field(), &labels, maps, &c.window()))
}

/// `0 → C1 →α C2 →β C3 → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSequence {
    pub c1: NComplex,
    pub c2: NComplex,
    pub c3: NComplex,
    pub alpha: GradedMap,
    pub beta: GradedMap,
}

impl ShortExactSequence {
    pub fn field(&self) -> &Field {
        self.c2.field()
    }

    pub fn order(&self) -> usize {
        self.c2.order()
    }

    /// Union of the windows of the three complexes.
    pub fn window(&self) -> Vec<i64> {
        let all: BTreeSet<i64> = [&self.c1, &self.c2, &self.c3]
            .iter()
            .flat_map(|c| c.window())
            .collect();
        all.into_iter().collect()
    }

    /// The split sequence `0 → A → A ⊕ B → B → 0`.
    pub fn split(a: &NComplex, b: &NComplex) -> Result<ShortExactSequence> {
        let sum = crate::ncomplex::direct_sum(a, b)?;
        let [alpha, _] = sum.inclusions;
        let [_, beta] = sum.projections;
        Ok(ShortExactSequence { c1: a.clone(), c2: sum.complex, c3: b.clone(), alpha, beta })
    }

    /// `0 → top → S → bottom → 0` for the staircase `S` with `len` terms
    /// starting at degree 0, cut so that `top` holds degrees `cut..len`.
    pub fn staircase_quotient(field: &Field, len: usize, cut: usize) -> Result<ShortExactSequence> {
        if cut > len {
            return Err(Error::IndexOutOfRange(format!("cut {cut} beyond length {len}")));
        }
        let c2 = NComplex::staircase(field, 0, len);
        let c1 = NComplex::staircase(field, cut as i64, len - cut);
        let c3 = NComplex::staircase(field, 0, cut);
        let one = || Matrix::identity(field, 1);
        let alpha = GradedMap::new(
            field,
            0,
            c1.dims().clone(),
            c2.dims().clone(),
            (cut..len).map(|n| (n as i64, one())).collect(),
        )?;
        let beta = GradedMap::new(
            field,
            0,
            c2.dims().clone(),
            c3.dims().clone(),
            (0..cut).map(|n| (n as i64, one())).collect(),
        )?;
        Ok(ShortExactSequence { c1, c2, c3, alpha, beta })
    }
}

/// Failures found by [`validate_ses`]; empty when the sequence is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SesReport {
    pub failures: Vec<String>,
}

impl SesReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_ses(s: &ShortExactSequence) -> SesReport {
    let mut failures = Vec::new();
    if s.c1.field() != s.c2.field() || s.c2.field() != s.c3.field() {
        failures.push("complexes have different coefficient fields".to_string());
        return SesReport { failures };
    }
    let field = s.field();
    for (name, f, src, tgt) in [("alpha", &s.alpha, &s.c1, &s.c2), ("beta", &s.beta, &s.c2, &s.c3)] {
        match homomorphism_defect(f, src, tgt) {
            Ok(None) => {}
            Ok(Some(n)) => failures.push(format!("{name} does not commute with d at degree {n}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if !failures.is_empty() {
        return SesReport { failures };
    }
    let degrees: BTreeSet<i64> = [&s.c1, &s.c2, &s.c3].iter().flat_map(|c| c.dims().keys().copied()).collect();
    for n in degrees {
        let a = s.alpha.mat(n);
        let b = s.beta.mat(n);
        if a.rank(field) != s.c1.dim(n) {
            failures.push(format!("alpha is not injective at degree {n}"));
        }
        if b.rank(field) != s.c3.dim(n) {
            failures.push(format!("beta is not surjective at degree {n}"));
        }
        if !b.mul(&a, field).is_zero(field) {
            failures.push(format!("image of alpha is not inside kernel of beta at degree {n}"));
        }
        let ker = kernel_basis(&b, field);
        if ker.vectors().iter().any(|v| !matches!(solve(&a, v, field), Ok(Some(_)))) {
            failures.push(format!("kernel of beta is not inside image of alpha at degree {n}"));
        }
    }
    SesReport { failures }
}

/// The connecting map `∂: H_(k)(C3) → H_(N-k)(C1)` with its cohomology data.
#[derive(Clone, Debug)]
pub struct Connecting<'a> {
    ses: &'a ShortExactSequence,
    k: usize,
    pub source: AmplitudeCohomology,
    pub target: AmplitudeCohomology,
}

impl<'a> Connecting<'a> {
    pub fn new(ses: &'a ShortExactSequence, k: usize) -> Result<Connecting<'a>> {
        let report = validate_ses(ses);
        if !report.passed() {
            return Err(Error::InvalidSes(report.failures.join("; ")));
        }
        let big_n = ses.order();
        if k == 0 || k >= big_n {
            return Err(Error::IndexOutOfRange(format!("k = {k} outside 1..={}", big_n - 1)));
        }
        Ok(Connecting {
            ses,
            k,
            source: amplitude_cohomology(&ses.c3, k)?,
            target: amplitude_cohomology(&ses.c1, big_n - k)?,
        })
    }

    /// Zig-zag: lift `x3 ∈ C3^n` (with `d^k x3 = 0`) to `x2 + shift`, apply
    /// `d^k`, and pull back along `α`. `shift` must lie in `ker β` and is
    /// added to the deterministic lift.
    pub fn lift(&self, n: i64, x3: &[Scalar], shift: Option<&[Scalar]>) -> Result<Vec<Scalar>> {
        let s = self.ses;
        let field = s.field();
        let k = self.k;
        let beta = s.beta.mat(n);
        let mut x2 = solve(&beta, x3, field)?
            .ok_or_else(|| Error::InvalidSes(format!("beta does not reach the class at degree {n}")))?;
        if let Some(extra) = shift {
            if beta.apply(extra, field).iter().any(|v| !field.is_zero(v)) {
                return Err(Error::NotContained);
            }
            x2 = x2.iter().zip(extra).map(|(a, b)| field.add(a, b)).collect();
        }
        let y = s.c2.apply_d_power(n, k, &x2);
        let x1 = solve(&s.alpha.mat(n + k as i64), &y, field)?.ok_or_else(|| {
            Error::InvalidSes(format!("d^{k} of the lift leaves the image of alpha at degree {}", n + k as i64))
        })?;
        let back = s.c1.apply_d_power(n + k as i64, s.order() - k, &x1);
        if back.iter().any(|v| !field.is_zero(v)) {
            return Err(Error::InvalidSes("pulled-back element is not a cocycle".into()));
        }
        Ok(x1)
    }

    /// Class in `H_(N-k)^{n+k}(C1)` of the zig-zag image of `x3`.
    pub fn class_of(&self, n: i64, x3: &[Scalar], shift: Option<&[Scalar]>) -> Result<Vec<Scalar>> {
        let x1 = self.lift(n, x3, shift)?;
        self.target.try_project(n + self.k as i64, &x1)
    }

    pub fn matrix(&self) -> Result<GradedMap> {
        induced_map(&self.source, &self.target, self.k as i64, |n, rep| self.lift(n, rep, None))
    }
}

/// `∂: H_(k)(C3) → H_(N-k)(C1)`, of degree `k`.
pub fn connecting(s: &ShortExactSequence, k: usize) -> Result<GradedMap> {
    Connecting::new(s, k)?.matrix()
}

/// Build and check the hexagon of a short exact sequence for `1 <= n <= N-1`.
pub fn snake_hexagon(s: &ShortExactSequence, n: usize) -> Result<HexagonReport> {
    let big_n = s.order();
    if n == 0 || n >= big_n {
        return Err(Error::IndexOutOfRange(format!("n = {n} outside 1..={}", big_n - 1)));
    }
    let m = big_n - n;
    let d_n = Connecting::new(s, n)?;
    let d_m = Connecting::new(s, m)?;
    let h1n = amplitude_cohomology(&s.c1, n)?;
    let h2n = amplitude_cohomology(&s.c2, n)?;
    let h1m = amplitude_cohomology(&s.c1, m)?;
    let h2m = amplitude_cohomology(&s.c2, m)?;
    let maps = vec![
        ("alpha_*".to_string(), induced_between(&s.alpha, &h1n, &h2n)?),
        ("beta_*".to_string(), induced_between(&s.beta, &h2n, &d_n.source)?),
        (format!("del_{n}"), d_n.matrix()?),
        ("alpha_*".to_string(), induced_between(&s.alpha, &h1m, &h2m)?),
        ("beta_*".to_string(), induced_between(&s.beta, &h2m, &d_m.source)?),
        (format!("del_{m}"), d_m.matrix()?),
    ];
    let labels = vec![
        format!("H_({n})(C1)"),
        format!("H_({n})(C2)"),
        format!("H_({n})(C3)"),
        format!("H_({m})(C1)"),
        format!("H_({m})(C2)"),
        format!("H_({m})(C3)"),
    ];
    Ok(check_cycle(s.field(), &labels, maps, &s.window()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7, 3, 2).unwrap()
    }

    fn staircase_sequence(field: &Field) -> ShortExactSequence {
        ShortExactSequence::staircase_quotient(field, 3, 1).unwrap()
    }

    #[test]
    fn inclusion_examples() {
        let f = f7();
        let c = NComplex::staircase(&f, 1, 2);
        let i = induced_inclusion(&c, 1, 1).unwrap();
        assert_eq!(i.mat(2).shape(), (0, 1));
        let id = induced_inclusion(&c, 2, 0).unwrap();
        assert_eq!(id.mat(1), Matrix::identity(&f, 1));
        let z = NComplex::with_zero_differential(&f, [(0, 2), (1, 1)].into_iter().collect());
        let i = induced_inclusion(&z, 1, 1).unwrap();
        assert_eq!(i.mat(0), Matrix::identity(&f, 2));
        assert_eq!(i.mat(1), Matrix::identity(&f, 1));
        assert!(induced_inclusion(&c, 1, 2).is_err());
        assert!(induced_inclusion(&c, 0, 1).is_err());
    }

    #[test]
    fn induced_d_examples() {
        let f = f7();
        let z = NComplex::with_zero_differential(&f, [(0, 2), (1, 1)].into_iter().collect());
        assert!(induced_d(&z, 2, 1).unwrap().is_zero());
        let s = NComplex::staircase(&f, 0, 3);
        let ds = induced_d(&s, 2, 1).unwrap();
        assert!(ds.components().is_empty());
        let c = NComplex::staircase(&f, 1, 2);
        let dc = induced_d(&c, 2, 1).unwrap();
        assert_eq!(dc.shift(), 1);
        assert_eq!(dc.mat(1), Matrix::identity(&f, 1));
        assert!(induced_d(&c, 2, 2).is_err());
        assert!(induced_d(&c, 3, 1).is_err());
    }

    #[test]
    fn hexagons_on_hand_examples() {
        let f = f7();
        let zero = NComplex::zero(&f);
        assert!(internal_hexagon(&zero, 1, 1).unwrap().exact());
        let c = NComplex::staircase(&f, 1, 2);
        let report = internal_hexagon(&c, 1, 1).unwrap();
        assert!(report.exact());
        let labels: Vec<&str> = report.nodes.iter().map(|n| n.label.as_str()).collect();
        assert_eq!(labels, ["H_(1)", "H_(2)", "H_(1)", "H_(2)", "H_(1)", "H_(2)"]);
        assert!(internal_hexagon(&c, 1, 2).is_err());
    }

    #[test]
    fn ses_validation() {
        let f = f7();
        let a = NComplex::staircase(&f, 0, 2);
        let b = NComplex::with_zero_differential(&f, [(1, 1)].into_iter().collect());
        assert!(validate_ses(&ShortExactSequence::split(&a, &b).unwrap()).passed());
        let s = staircase_sequence(&f);
        assert!(validate_ses(&s).passed());
        let mut broken = s.clone();
        broken.beta = GradedMap::zero(&f, 0, s.c2.dims().clone(), s.c3.dims().clone());
        let report = validate_ses(&broken);
        assert!(!report.passed());
        assert_eq!(report.failures[0], "beta is not surjective at degree 0");
    }

    #[test]
    fn connecting_on_staircase_sequence() {
        let f = f7();
        let s = staircase_sequence(&f);
        let d1 = connecting(&s, 1).unwrap();
        assert_eq!(d1.shift(), 1);
        assert_eq!(d1.mat(0), Matrix::identity(&f, 1));
        let d2 = connecting(&s, 2).unwrap();
        assert_eq!(d2.shift(), 2);
        assert_eq!(d2.mat(0), Matrix::identity(&f, 1));
        assert!(connecting(&s, 3).is_err());
    }

    #[test]
    fn connecting_vanishes_on_split_sequence() {
        let f = f7();
        let a = NComplex::staircase(&f, 1, 2);
        let b = NComplex::staircase(&f, 0, 1);
        let s = ShortExactSequence::split(&a, &b).unwrap();
        for k in 1..3 {
            assert!(connecting(&s, k).unwrap().is_zero());
            assert!(snake_hexagon(&s, k).unwrap().exact());
        }
    }

    #[test]
    fn snake_on_staircase_sequence() {
        let f = f7();
        let s = staircase_sequence(&f);
        for n in 1..3 {
            let report = snake_hexagon(&s, n).unwrap();
            assert!(report.exact());
        }
    }
}
