//! Seeded random instances for property checks and the self-test.
//!
//! Random N-complexes are direct sums of staircases of length at most `N`
//! (the indecomposable N-complexes over a field), conjugated by random
//! invertible matrices in every degree. This reaches every N-complex up to
//! isomorphism without having to solve `d^N = 0` directly.

use std::collections::BTreeMap;

use rand::Rng;

use crate::coeff::{Field, Scalar};
use crate::error::Result;
use crate::exactla::Matrix;
use crate::homalg::ShortExactSequence;
use crate::ncomplex::{homomorphism_basis, GradedDims, GradedMap, NComplex};

/// Size limits for [`random_complex`].
#[derive(Clone, Copy, Debug)]
pub struct ComplexShape {
    /// Maximum number of consecutive degrees in the support.
    pub max_support: usize,
    /// Maximum dimension per degree.
    pub max_dim: usize,
    /// Lowest degree is drawn from `-lo_spread..=lo_spread`.
    pub lo_spread: i64,
}

impl Default for ComplexShape {
    fn default() -> Self {
        ComplexShape { max_support: 5, max_dim: 3, lo_spread: 2 }
    }
}

pub fn random_scalar<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Scalar {
    match field.modulus() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => {
            let coeffs = (0..field.degree())
                .map(|_| num_rational::BigRational::from_integer(rng.gen_range(-2i64..=2).into()))
                .collect();
            field.from_coefficients(coeffs).expect("cyclotomic coefficients")
        }
    }
}

pub fn random_vector<R: Rng + ?Sized>(field: &Field, len: usize, rng: &mut R) -> Vec<Scalar> {
    (0..len).map(|_| random_scalar(field, rng)).collect()
}

pub fn random_matrix<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::new(rows, cols, random_vector(field, rows * cols, rng)).expect("sizes agree")
}

/// A random invertible matrix and its inverse.
pub fn random_invertible<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> (Matrix, Matrix) {
    loop {
        let m = random_matrix(field, n, n, rng);
        if let Some(inv) = m.inverse(field) {
            return (m, inv);
        }
    }
}

/// Staircase segments `(start, len)`.
type Segments = Vec<(i64, usize)>;

fn random_segments<R: Rng + ?Sized>(big_n: usize, shape: ComplexShape, rng: &mut R) -> Segments {
    let lo = rng.gen_range(-shape.lo_spread..=shape.lo_spread);
    let support = rng.gen_range(1..=shape.max_support);
    let mut dims = vec![0usize; support];
    let mut segments = Vec::new();
    let attempts = rng.gen_range(1..=2 * support + 2);
    for _ in 0..attempts {
        let start = rng.gen_range(0..support);
        let len = rng.gen_range(1..=big_n.min(support - start));
        if dims[start..start + len].iter().all(|&d| d < shape.max_dim) {
            for d in &mut dims[start..start + len] {
                *d += 1;
            }
            segments.push((lo + start as i64, len));
        }
    }
    segments
}

/// Direct sum of staircases, basis ordered by segment within each degree.
fn sum_of_staircases(field: &Field, segments: &[(i64, usize)]) -> (NComplex, BTreeMap<(usize, i64), usize>) {
    let mut dims = GradedDims::new();
    // position of segment `s` in degree `n`
    let mut slot = BTreeMap::new();
    for (s, &(start, len)) in segments.iter().enumerate() {
        for n in start..start + len as i64 {
            let e = dims.entry(n).or_insert(0);
            slot.insert((s, n), *e);
            *e += 1;
        }
    }
    let mut d: BTreeMap<i64, Matrix> = dims
        .iter()
        .map(|(&n, &dn)| (n, Matrix::zeros(field, dims.get(&(n + 1)).copied().unwrap_or(0), dn)))
        .collect();
    for (s, &(start, len)) in segments.iter().enumerate() {
        for n in start..start + len as i64 - 1 {
            let m = d.get_mut(&n).expect("degree present");
            m.set(slot[&(s, n + 1)], slot[&(s, n)], field.one());
        }
    }
    (NComplex::new(field, dims, d).expect("consistent shapes"), slot)
}

/// Per-degree invertible matrices `P_n` with inverses.
type BasisChange = BTreeMap<i64, (Matrix, Matrix)>;

fn random_basis_change<R: Rng + ?Sized>(field: &Field, dims: &GradedDims, rng: &mut R) -> BasisChange {
    dims.iter().map(|(&n, &d)| (n, random_invertible(field, d, rng))).collect()
}

/// `P_{n+1} d_n P_n^{-1}`.
fn conjugate(c: &NComplex, change: &BasisChange) -> NComplex {
    let field = c.field();
    let d = c
        .dims()
        .keys()
        .map(|&n| {
            let mut m = c.diff(n).mul(&change[&n].1, field);
            if let Some((p, _)) = change.get(&(n + 1)) {
                m = p.mul(&m, field);
            }
            (n, m)
        })
        .collect();
    NComplex::new(field, c.dims().clone(), d).expect("conjugation keeps shapes")
}

/// `Q_n f_n P_n^{-1}` for a degree-0 map `f: C → C'` under changes `P` on
/// `C` and `Q` on `C'`.
fn conjugate_map(f: &GradedMap, source: &BasisChange, target: &BasisChange) -> GradedMap {
    let field = f.field();
    let mats = f
        .components()
        .iter()
        .map(|(&n, m)| (n, target[&n].0.mul(&m.mul(&source[&n].1, field), field)))
        .collect();
    GradedMap::new(field, 0, f.source_dims().clone(), f.target_dims().clone(), mats).expect("shapes kept")
}

/// A random validated N-complex within `shape`.
pub fn random_complex<R: Rng + ?Sized>(field: &Field, shape: ComplexShape, rng: &mut R) -> NComplex {
    let segments = random_segments(field.order(), shape, rng);
    let (c, _) = sum_of_staircases(field, &segments);
    let change = random_basis_change(field, c.dims(), rng);
    conjugate(&c, &change)
}

/// A random linear combination of a basis of `Hom(C, C')`.
pub fn random_homomorphism<R: Rng + ?Sized>(c: &NComplex, c2: &NComplex, rng: &mut R) -> Result<GradedMap> {
    let field = c.field();
    let basis = homomorphism_basis(c, c2)?;
    let mut mats: BTreeMap<i64, Matrix> = BTreeMap::new();
    for b in &basis {
        let coeff = random_scalar(field, rng);
        for (&n, m) in b.components() {
            let term = m.scale(&coeff, field);
            mats.entry(n)
                .and_modify(|acc| *acc = acc.add(&term, field))
                .or_insert(term);
        }
    }
    GradedMap::new(field, 0, c.dims().clone(), c2.dims().clone(), mats)
}

/// A non-split sequence `0 → tails → S → heads → 0`, where `S` is a random
/// sum of staircases, every staircase is cut at a random point, and all
/// three complexes are conjugated by random basis changes.
pub fn random_staircase_ses<R: Rng + ?Sized>(field: &Field, shape: ComplexShape, rng: &mut R) -> ShortExactSequence {
    let segments = random_segments(field.order(), shape, rng);
    let cuts: Vec<usize> = segments.iter().map(|&(_, len)| rng.gen_range(0..=len)).collect();
    let tails: Vec<(i64, usize)> = segments
        .iter()
        .zip(&cuts)
        .filter(|(&(_, len), &cut)| cut < len)
        .map(|(&(start, len), &cut)| (start + cut as i64, len - cut))
        .collect();
    let heads: Vec<(i64, usize)> = segments
        .iter()
        .zip(&cuts)
        .filter(|(_, &cut)| cut > 0)
        .map(|(&(start, _), &cut)| (start, cut))
        .collect();
    let (c2, slot2) = sum_of_staircases(field, &segments);
    let (c1, slot1) = sum_of_staircases(field, &tails);
    let (c3, slot3) = sum_of_staircases(field, &heads);
    let mut alpha: BTreeMap<i64, Matrix> = c1
        .dims()
        .iter()
        .map(|(&n, &d)| (n, Matrix::zeros(field, c2.dim(n), d)))
        .collect();
    let mut beta: BTreeMap<i64, Matrix> = c2
        .dims()
        .iter()
        .map(|(&n, &d)| (n, Matrix::zeros(field, c3.dim(n), d)))
        .collect();
    let (mut t, mut h) = (0, 0);
    for (s, (&(start, len), &cut)) in segments.iter().zip(&cuts).enumerate() {
        if cut < len {
            for n in start + cut as i64..start + len as i64 {
                alpha.get_mut(&n).unwrap().set(slot2[&(s, n)], slot1[&(t, n)], field.one());
            }
            t += 1;
        }
        if cut > 0 {
            for n in start..start + cut as i64 {
                beta.get_mut(&n).unwrap().set(slot3[&(h, n)], slot2[&(s, n)], field.one());
            }
            h += 1;
        }
    }
    let alpha = GradedMap::new(field, 0, c1.dims().clone(), c2.dims().clone(), alpha).expect("shapes");
    let beta = GradedMap::new(field, 0, c2.dims().clone(), c3.dims().clone(), beta).expect("shapes");
    let p1 = random_basis_change(field, c1.dims(), rng);
    let p2 = random_basis_change(field, c2.dims(), rng);
    let p3 = random_basis_change(field, c3.dims(), rng);
    ShortExactSequence {
        alpha: conjugate_map(&alpha, &p1, &p2),
        beta: conjugate_map(&beta, &p2, &p3),
        c1: conjugate(&c1, &p1),
        c2: conjugate(&c2, &p2),
        c3: conjugate(&c3, &p3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::validate_ses;
    use crate::ncomplex::is_homomorphism;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_complexes_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, n) in [(7u64, 3usize), (5, 4), (11, 5), (3, 2)] {
            let field = Field::prime_with_root(p, n).unwrap();
            for _ in 0..40 {
                let c = random_complex(&field, ComplexShape::default(), &mut rng);
                assert!(c.validate().passed());
                let (lo, hi) = c.support().unwrap();
                assert!(hi - lo < 5);
                assert!(c.dims().values().all(|&d| d <= 3));
            }
        }
    }

    #[test]
    fn random_homomorphisms_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let field = Field::prime(7, 3, 2).unwrap();
        for _ in 0..20 {
            let a = random_complex(&field, ComplexShape::default(), &mut rng);
            let b = random_complex(&field, ComplexShape::default(), &mut rng);
            let f = random_homomorphism(&a, &b, &mut rng).unwrap();
            assert!(is_homomorphism(&f, &a, &b).unwrap());
        }
    }

    #[test]
    fn random_staircase_sequences_are_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let field = Field::prime(5, 4, 2).unwrap();
        for _ in 0..30 {
            let s = random_staircase_ses(&field, ComplexShape::default(), &mut rng);
            assert!(validate_ses(&s).passed(), "{:?}", validate_ses(&s));
        }
    }

    #[test]
    fn cyclotomic_complexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let field = Field::cyclotomic(3).unwrap();
        let c = random_complex(&field, ComplexShape { max_support: 3, max_dim: 2, lo_spread: 0 }, &mut rng);
        assert!(c.validate().passed());
    }
}
