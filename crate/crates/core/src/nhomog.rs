//! The N-homogeneous algebra on `n` generators with fully symmetrized
//! degree-N relations, its polynomial-coefficient extension `A ⊗ K[x]`, and
//! the N-differential `d(a⊗f) = (-1)^{deg a} Σ_λ aθ^λ ⊗ ∂_λ f`.
//!
//! Words of length `m` over the generators are indexed by their base-`n`
//! value, which is also their lexicographic rank. In each degree the ideal
//! is eliminated with columns taken in descending lexicographic order, so the
//! surviving words (the basis) are the lexicographically smallest ones.

use std::collections::{BTreeMap, HashMap};

use crate::coeff::{Field, Scalar};
use crate::error::{Error, Result};
use crate::exactla::{rref, Matrix};
use crate::qdga::{
    nilpotency_failures_of, scan_leibniz, BasisElement, DifferentialAlgebra, GradedAlgebra, LeibnizViolation, Qdga,
    Weights,
};

/// `Σ_{p∈S_N} θ^{λ_{p(1)}}⋯θ^{λ_{p(N)}}` for one multiset `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Sorted generator indices.
    pub multiset: Vec<usize>,
    /// `(word index, coefficient)` over degree-N words, ascending.
    pub terms: Vec<(usize, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NHomPresentation {
    pub n: usize,
    pub big_n: usize,
    pub relations: Vec<Relation>,
}

fn word_of(index: usize, n: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    let mut k = index;
    for slot in w.iter_mut().rev() {
        *slot = k % n;
        k /= n;
    }
    w
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// One relation per multiset of size `N`, in lexicographic order of the
/// sorted multisets.
pub fn presentation(n: usize, big_n: usize) -> NHomPresentation {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for index in 0..n.pow(big_n as u32) {
        let mut key = word_of(index, n, big_n);
        key.sort_unstable();
        groups.entry(key).or_default().push(index);
    }
    let relations = groups
        .into_iter()
        .map(|(multiset, words)| {
            let mut counts = vec![0usize; n];
            for &l in &multiset {
                counts[l] += 1;
            }
            let coeff: u64 = counts.iter().map(|&c| factorial(c)).product();
            Relation { multiset, terms: words.into_iter().map(|w| (w, coeff)).collect() }
        })
        .collect();
    NHomPresentation { n, big_n, relations }
}

/// The quotient algebra up to degree `D_A` with its normal forms.
#[derive(Clone, Debug)]
pub struct NHomogeneous {
    presentation: NHomPresentation,
    /// Surviving word indices per degree, ascending.
    survivors: Vec<Vec<usize>>,
    /// Normal form of every word, per degree, over the survivors.
    normal_forms: Vec<Vec<Vec<Scalar>>>,
    algebra: GradedAlgebra,
}

fn generator_label(n: usize, l: usize) -> String {
    if n == 1 {
        "θ".to_string()
    } else {
        format!("θ{}", l + 1)
    }
}

fn word_label(n: usize, word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    if n == 1 {
        return if word.len() == 1 { "θ".to_string() } else { format!("θ^{}", word.len()) };
    }
    word.iter().map(|&l| generator_label(n, l)).collect()
}

/// Build the N-homogeneous algebra on `n` generators through degree `D_A`.
pub fn build_n_homogeneous(field: &Field, n: usize, big_n: usize, window: usize) -> Result<NHomogeneous> {
    if n == 0 || big_n < 2 {
        return Err(Error::IndexOutOfRange(format!("need n >= 1 and N >= 2, got n = {n}, N = {big_n}")));
    }
    if window < big_n {
        return Err(Error::IndexOutOfRange(format!("window {window} is below N = {big_n}")));
    }
    let p = field.characteristic();
    if p != 0 && p <= big_n as u64 {
        return Err(Error::Characteristic { p, n: big_n });
    }
    let pres = presentation(n, big_n);
    let mut survivors = Vec::with_capacity(window + 1);
    let mut normal_forms: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(window + 1);
    for m in 0..=window {
        let words = n.pow(m as u32);
        if m < big_n {
            survivors.push((0..words).collect::<Vec<_>>());
            normal_forms.push(
                (0..words)
                    .map(|w| {
                        let mut v = vec![field.zero(); words];
                        v[w] = field.one();
                        v
                    })
                    .collect(),
            );
            continue;
        }
        // generators u·r·v of the ideal, columns in descending word order
        let outer = m - big_n;
        let mut rows = Vec::new();
        for a in 0..=outer {
            let b = outer - a;
            let tail = n.pow(b as u32);
            let mid = n.pow((big_n + b) as u32);
            for u in 0..n.pow(a as u32) {
                for v in 0..tail {
                    for r in &pres.relations {
                        let mut row = vec![field.zero(); words];
                        for &(w, c) in &r.terms {
                            let index = u * mid + w * tail + v;
                            row[words - 1 - index] = field.from_i64(c as i64);
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let gens = Matrix::from_rows(rows, words)?;
        let reduced = rref(&gens, field);
        let pivot_rows: HashMap<usize, usize> = reduced.pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let alive: Vec<usize> = (0..words).filter(|w| !pivot_rows.contains_key(&(words - 1 - w))).collect();
        let position: HashMap<usize, usize> = alive.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let nf = (0..words)
            .map(|w| {
                let mut v = vec![field.zero(); alive.len()];
                match pivot_rows.get(&(words - 1 - w)) {
                    None => v[position[&w]] = field.one(),
                    Some(&row) => {
                        for (&s, &pos) in &position {
                            let e = reduced.reduced.get(row, words - 1 - s);
                            if !field.is_zero(e) {
                                v[pos] = field.neg(e);
                            }
                        }
                    }
                }
                v
            })
            .collect();
        survivors.push(alive);
        normal_forms.push(nf);
    }

    let dims: Vec<usize> = survivors.iter().map(Vec::len).collect();
    let mut mu = BTreeMap::new();
    for i in 0..=window {
        for j in 0..=window - i {
            let shift = n.pow(j as u32);
            let mut m = Matrix::zeros(field, dims[i + j], dims[i] * dims[j]);
            for (a, &u) in survivors[i].iter().enumerate() {
                for (b, &v) in survivors[j].iter().enumerate() {
                    for (r, e) in normal_forms[i + j][u * shift + v].iter().enumerate() {
                        if !field.is_zero(e) {
                            m.set(r, a * dims[j] + b, e.clone());
                        }
                    }
                }
            }
            mu.insert((i, j), m);
        }
    }
    let labels = survivors
        .iter()
        .enumerate()
        .map(|(m, ws)| ws.iter().map(|&w| word_label(n, &word_of(w, n, m))).collect())
        .collect();
    let algebra = GradedAlgebra::new(field, dims, vec![field.one()], mu, Some(labels), None)?;
    Ok(NHomogeneous { presentation: pres, survivors, normal_forms, algebra })
}

impl NHomogeneous {
    pub fn presentation(&self) -> &NHomPresentation {
        &self.presentation
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        self.algebra.dims()
    }

    pub fn n(&self) -> usize {
        self.presentation.n
    }

    pub fn order(&self) -> usize {
        self.presentation.big_n
    }

    /// Surviving words of degree `m` as generator sequences.
    pub fn basis_words(&self, m: usize) -> Vec<Vec<usize>> {
        self.survivors[m].iter().map(|&w| word_of(w, self.n(), m)).collect()
    }

    /// Coordinates of an arbitrary word over the surviving words.
    pub fn normal_form(&self, word: &[usize]) -> Vec<Scalar> {
        let index = word.iter().fold(0, |acc, &l| acc * self.n() + l);
        self.normal_forms[word.len()][index].clone()
    }
}

/// Exponent vectors of total degree `k` in `n` variables, lexicographically
/// descending.
fn monomials_of_degree(n: usize, k: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in monomials_of_degree(n - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn monomial_label(exps: &[u32]) -> String {
    let single = exps.len() == 1;
    let parts: String = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(l, &e)| {
            let var = if single { "t".to_string() } else { format!("x{}", l + 1) };
            if e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts
    }
}

/// `A ⊗ K[x^1..x^n]` with algebra degrees up to `D_A` and polynomial degree
/// up to `D_P`. The basis of degree `m` is `word ⊗ monomial`, indexed
/// `word_position * monomial_count + monomial_position`; monomials are sorted
/// by total degree, then lexicographically descending.
#[derive(Clone, Debug)]
pub struct PolynomialExtension {
    base: NHomogeneous,
    poly_window: u32,
    monomials: Vec<Vec<u32>>,
    monomial_degree: Vec<u32>,
    /// Index of the product of two monomials, if inside the window.
    monomial_product: Vec<Vec<Option<usize>>>,
    dims: Vec<usize>,
    d: Vec<Matrix>,
}

/// Build `A(ℝⁿ)` with polynomial coefficients. `field.order()` must be `N`.
pub fn build_a_rn(field: &Field, n: usize, big_n: usize, alg_window: usize, poly_window: u32) -> Result<PolynomialExtension> {
    if field.order() != big_n {
        return Err(Error::OrderMismatch(field.order(), big_n));
    }
    let base = build_n_homogeneous(field, n, big_n, alg_window)?;
    let monomials: Vec<Vec<u32>> = (0..=poly_window).flat_map(|k| monomials_of_degree(n, k)).collect();
    let index: HashMap<&[u32], usize> = monomials.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let monomial_degree: Vec<u32> = monomials.iter().map(|e| e.iter().sum()).collect();
    let monomial_product = monomials
        .iter()
        .map(|a| {
            monomials
                .iter()
                .map(|b| {
                    let c: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    index.get(c.as_slice()).copied()
                })
                .collect()
        })
        .collect();
    let count = monomials.len();
    let dims: Vec<usize> = base.dims().iter().map(|&d| d * count).collect();

    let mut d = Vec::with_capacity(alg_window);
    for m in 0..alg_window {
        let sign = if m % 2 == 0 { field.one() } else { field.from_i64(-1) };
        let theta = base.algebra.mu(m, 1);
        let mut mat = Matrix::zeros(field, dims[m + 1], dims[m]);
        for w in 0..base.dims()[m] {
            for (k, exps) in monomials.iter().enumerate() {
                let col = w * count + k;
                for l in 0..n {
                    if exps[l] == 0 {
                        continue;
                    }
                    let mut lowered = exps.clone();
                    lowered[l] -= 1;
                    let target = index[lowered.as_slice()];
                    let factor = field.mul(&sign, &field.from_i64(exps[l] as i64));
                    for r in 0..base.dims()[m + 1] {
                        let e = theta.get(r, w * n + l);
                        if field.is_zero(e) {
                            continue;
                        }
                        let row = r * count + target;
                        let v = field.add(mat.get(row, col), &field.mul(&factor, e));
                        mat.set(row, col, v);
                    }
                }
            }
        }
        d.push(mat);
    }
    Ok(PolynomialExtension { base, poly_window, monomials, monomial_degree, monomial_product, dims, d })
}

impl PolynomialExtension {
    pub fn base(&self) -> &NHomogeneous {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn poly_window(&self) -> u32 {
        self.poly_window
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.d
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    /// Basis element `word ⊗ x^exps`, if both are basis vectors in range.
    pub fn element(&self, word: &[usize], exps: &[u32]) -> Option<BasisElement> {
        let m = word.len();
        let n = self.base.n();
        let index = word.iter().fold(0, |acc, &l| acc * n + l);
        let w = self.base.survivors.get(m)?.iter().position(|&s| s == index)?;
        let k = self.monomials.iter().position(|e| e == exps)?;
        Some((m, w * self.monomials.len() + k))
    }

    pub fn label(&self, x: BasisElement) -> String {
        let count = self.monomials.len();
        format!(
            "{}⊗{}",
            self.base.algebra.label((x.0, x.1 / count)),
            monomial_label(&self.monomials[x.1 % count])
        )
    }

    /// Dense structure constants and differential, consumable by the
    /// generic checks and the algebra file format.
    pub fn to_qdga(&self) -> Result<Qdga> {
        let field = self.field();
        let count = self.monomials.len();
        let window = self.window();
        let mut mu = BTreeMap::new();
        for i in 0..=window {
            for j in 0..=window - i {
                let mut m = Matrix::zeros(field, self.dims[i + j], self.dims[i] * self.dims[j]);
                for x in 0..self.dims[i] {
                    for y in 0..self.dims[j] {
                        if !self.weight_in_window(self.weight((i, x)) + self.weight((j, y))) {
                            continue;
                        }
                        let v = self.multiply(i, &self.basis_vector((i, x)), j, &self.basis_vector((j, y)));
                        for (r, e) in v.into_iter().enumerate() {
                            if !field.is_zero(&e) {
                                m.set(r, x * self.dims[j] + y, e);
                            }
                        }
                    }
                }
                mu.insert((i, j), m);
            }
        }
        let labels = (0..=window).map(|m| (0..self.dims[m]).map(|x| self.label((m, x))).collect()).collect();
        let weights = Weights {
            per_degree: self
                .dims
                .iter()
                .map(|&dm| (0..dm).map(|x| self.monomial_degree[x % count]).collect())
                .collect(),
            window: self.poly_window,
        };
        let mut unit = vec![field.zero(); self.dims[0]];
        unit[0] = field.one();
        let algebra = GradedAlgebra::new(field, self.dims.clone(), unit, mu, Some(labels), Some(weights))?;
        Qdga::new(algebra, self.d.clone())
    }
}

impl DifferentialAlgebra for PolynomialExtension {
    fn field(&self) -> &Field {
        self.base.algebra.field()
    }

    fn window(&self) -> usize {
        self.base.algebra.window()
    }

    fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    fn weight(&self, x: BasisElement) -> u32 {
        self.monomial_degree[x.1 % self.monomials.len()]
    }

    fn weight_in_window(&self, w: u32) -> bool {
        w <= self.poly_window
    }

    fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let count = self.monomials.len();
        let mu = self.base.algebra.mu(i, j);
        let dj = self.base.dims()[j];
        let mut out = vec![f.zero(); self.dims[i + j]];
        for (xi, xc) in x.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            for (yi, yc) in y.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let Some(k) = self.monomial_product[xi % count][yi % count] else { continue };
                let col = (xi / count) * dj + yi / count;
                let coeff = f.mul(xc, yc);
                for r in 0..mu.rows() {
                    let e = mu.get(r, col);
                    if !f.is_zero(e) {
                        let slot = &mut out[r * count + k];
                        *slot = f.add(slot, &f.mul(&coeff, e));
                    }
                }
            }
        }
        out
    }

    fn apply_d(&self, n: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.d[n].apply(x, self.field())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub big_n: usize,
    pub elements_checked: usize,
    pub failing_degrees: Vec<usize>,
}

impl NilpotencyReport {
    pub fn passed(&self) -> bool {
        self.failing_degrees.is_empty()
    }
}

/// `d^N = 0` on every basis element `a⊗f` with `deg a + N <= D_A`.
pub fn check_dn_zero(a: &PolynomialExtension) -> NilpotencyReport {
    let big_n = a.order();
    let window = a.window();
    NilpotencyReport {
        big_n,
        elements_checked: (0..=window).filter(|m| m + big_n <= window).map(|m| a.dims[m]).sum(),
        failing_degrees: nilpotency_failures_of(a.field(), &a.dims, &a.d, big_n),
    }
}

/// First basis pair violating `d(xy) = d(x)y + q^{deg x} x d(y)` with
/// `twist` as `q`, scanning in order of (deg x, deg y, index x, index y).
/// With `degree_zero_only` both factors are restricted to algebra degree 0.
pub fn find_leibniz_counterexample(
    a: &PolynomialExtension,
    twist: &Scalar,
    degree_zero_only: bool,
) -> Option<LeibnizViolation> {
    scan_leibniz(a, twist, |x, y| !degree_zero_only || (x.0 == 0 && y.0 == 0), Some(1))
        .violations
        .into_iter()
        .next()
}

/// `q^j` for every `j` in `1..N` coprime to `N`: all primitive N-th roots
/// of unity when `q` is one.
pub fn primitive_powers(field: &Field) -> Vec<(usize, Scalar)> {
    let big_n = field.order();
    (1..big_n)
        .filter(|&j| num_integer::gcd(j, big_n) == 1)
        .map(|j| (j, field.pow(field.q(), j as u64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdga::{check_graded_algebra, check_twisted_leibniz, nilpotency_failures};

    #[test]
    fn relation_coefficients_sum_to_factorial() {
        let pres = presentation(3, 3);
        assert_eq!(pres.relations.len(), 10);
        for r in &pres.relations {
            assert_eq!(r.terms.iter().map(|t| t.1).sum::<u64>(), 6);
        }
        let pres = presentation(1, 3);
        assert_eq!(pres.relations, vec![Relation { multiset: vec![0, 0, 0], terms: vec![(0, 6)] }]);
    }

    #[test]
    fn dimensions() {
        let f = Field::cyclotomic(3).unwrap();
        assert_eq!(build_n_homogeneous(&f, 1, 3, 3).unwrap().dims(), &[1, 1, 1, 0]);
        assert_eq!(build_n_homogeneous(&f, 2, 3, 3).unwrap().dims(), &[1, 2, 4, 4]);
        let a = build_n_homogeneous(&f, 3, 4, 4).unwrap();
        assert_eq!(&a.dims()[..4], &[1, 3, 9, 27]);
        assert_eq!(a.dims()[4], 81 - 15);
    }

    #[test]
    fn dimensions_do_not_depend_on_the_field() {
        let cyc = Field::cyclotomic(3).unwrap();
        let fp = Field::prime_with_root(1_000_003, 3).unwrap();
        for n in 1..=3 {
            let a = build_n_homogeneous(&cyc, n, 3, 5).unwrap();
            let b = build_n_homogeneous(&fp, n, 3, 5).unwrap();
            assert_eq!(a.dims(), b.dims());
            assert_eq!(a.basis_words(4), b.basis_words(4));
        }
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let f = Field::prime(3, 2, 2).unwrap();
        assert!(matches!(build_n_homogeneous(&f, 2, 3, 3), Err(Error::Characteristic { p: 3, n: 3 })));
    }

    #[test]
    fn quotient_is_associative_with_lex_smallest_basis() {
        let f = Field::cyclotomic(3).unwrap();
        let a = build_n_homogeneous(&f, 2, 3, 5).unwrap();
        assert!(check_graded_algebra(a.algebra()).passed());
        // θ2θ2θ2 = 0 and θ2θ1θ1 = -θ1θ1θ2 - θ1θ2θ1 survive as relations
        let words = a.basis_words(3);
        assert_eq!(words, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert!(a.normal_form(&[1, 1, 1]).iter().all(|e| f.is_zero(e)));
        assert_eq!(a.normal_form(&[1, 0, 0]), vec![f.from_i64(-1), f.from_i64(-1), f.zero(), f.zero()]);
    }

    #[test]
    fn differential_examples() {
        let f = Field::cyclotomic(2).unwrap();
        let f3 = Field::cyclotomic(3).unwrap();
        for field in [f, f3] {
            let a = build_a_rn(&field, 2, field.order(), 3, 3).unwrap();
            let one_x1 = a.element(&[], &[1, 0]).unwrap();
            let th1 = a.element(&[0], &[0, 0]).unwrap();
            assert_eq!(a.apply_d(0, &a.basis_vector(one_x1)), a.basis_vector(th1));
            let one_x1sq = a.element(&[], &[2, 0]).unwrap();
            let th1_x1 = a.element(&[0], &[1, 0]).unwrap();
            let two: Vec<Scalar> = a.basis_vector(th1_x1).iter().map(|e| field.mul(e, &field.from_i64(2))).collect();
            assert_eq!(a.apply_d(0, &a.basis_vector(one_x1sq)), two);
            // d(θ1⊗x1) = -(θ1)^2⊗1
            let sq = a.multiply(1, &a.basis_vector(th1), 1, &a.basis_vector(th1));
            let neg: Vec<Scalar> = sq.iter().map(|e| field.neg(e)).collect();
            assert_eq!(a.apply_d(1, &a.basis_vector(th1_x1)), neg);
        }
    }

    #[test]
    fn d_to_the_n_vanishes() {
        for (n, big_n, da, dp) in [(1, 3, 4, 4), (2, 3, 4, 3), (2, 4, 5, 4)] {
            let f = Field::cyclotomic(big_n).unwrap();
            let a = build_a_rn(&f, n, big_n, da, dp).unwrap();
            let report = check_dn_zero(&a);
            assert!(report.passed(), "{n} {big_n}");
            assert!(report.elements_checked > 0);
        }
    }

    #[test]
    fn leibniz_fails_for_every_primitive_root() {
        let f = Field::cyclotomic(3).unwrap();
        let a = build_a_rn(&f, 1, 3, 3, 3).unwrap();
        for (_, q) in primitive_powers(&f) {
            let w = find_leibniz_counterexample(&a, &q, false).expect("witness");
            assert_eq!((a.label(w.x), a.label(w.y)), ("1⊗t".to_string(), "θ⊗1".to_string()));
            assert!(find_leibniz_counterexample(&a, &q, true).is_none());
        }
    }

    #[test]
    fn theta_times_t_violates() {
        let f = Field::cyclotomic(3).unwrap();
        let a = build_a_rn(&f, 1, 3, 3, 2).unwrap();
        let x = a.element(&[0], &[0]).unwrap();
        let y = a.element(&[], &[1]).unwrap();
        let v = crate::qdga::leibniz_defect(&a, f.q(), x, y).expect("violation");
        let th2 = a.element(&[0, 0], &[0]).unwrap();
        let mut lhs = vec![f.zero(); a.dim(2)];
        lhs[th2.1] = f.from_i64(-1);
        let mut rhs = vec![f.zero(); a.dim(2)];
        rhs[th2.1] = f.q().clone();
        assert_eq!((v.lhs, v.rhs), (lhs, rhs));
    }

    #[test]
    fn exterior_case_is_a_dga() {
        let f = Field::cyclotomic(2).unwrap();
        let a = build_a_rn(&f, 2, 2, 3, 3).unwrap();
        assert_eq!(a.base().dims(), &[1, 2, 1, 0]);
        assert!(find_leibniz_counterexample(&a, f.q(), false).is_none());
    }

    #[test]
    fn dense_form_agrees() {
        let f = Field::cyclotomic(3).unwrap();
        let a = build_a_rn(&f, 1, 3, 3, 3).unwrap();
        let q = a.to_qdga().unwrap();
        assert!(check_graded_algebra(q.algebra()).passed());
        assert!(nilpotency_failures(&q).is_empty());
        let report = check_twisted_leibniz(&q);
        assert_eq!(report.violations[0], find_leibniz_counterexample(&a, f.q(), false).unwrap());
    }
}
