//! Seeded randomized property checks, run in parallel with ordered results.

use ncx_core::gen::{random_complex, random_homomorphism, random_staircase_ses, random_vector, ComplexShape};
use ncx_core::homalg::{internal_hexagon_with, snake_hexagon};
use ncx_core::ncomplex::{cohomology_table, induced_on_cohomology, GradedMap};
use ncx_core::qdga::{check_qdga, qpoly_example};
use ncx_core::tensor::{d_power_expansion, tensor, TensorLayout};
use ncx_core::{Field, Matrix, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::report::Report;

/// Modulus with roots of unity of every order 2..=6.
const P: u64 = 61;

type Trial = fn(&mut ChaCha8Rng) -> Result<Option<String>>;

fn field_for(rng: &mut ChaCha8Rng, orders: std::ops::RangeInclusive<usize>) -> Field {
    let n = rng.gen_range(orders);
    Field::prime_with_root(P, n).expect("61 - 1 is divisible by 2..=6")
}

fn tensor_nilpotency(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let f = field_for(rng, 2..=5);
    let a = random_complex(&f, ComplexShape::default(), rng);
    let b = random_complex(&f, ComplexShape::default(), rng);
    let t = tensor(&a, &b)?;
    let r = t.validate();
    Ok((!r.passed()).then(|| format!("N = {}: d^N != 0 at {:?}", f.order(), r.failing_degrees)))
}

fn expansion(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let f = field_for(rng, 2..=5);
    let a = random_complex(&f, ComplexShape::default(), rng);
    let b = random_complex(&f, ComplexShape::default(), rng);
    let t = tensor(&a, &b)?;
    let layout = TensorLayout::new(a.dims(), b.dims());
    let degrees_a: Vec<i64> = a.dims().keys().copied().collect();
    let degrees_b: Vec<i64> = b.dims().keys().copied().collect();
    if degrees_a.is_empty() || degrees_b.is_empty() {
        return Ok(None);
    }
    for k in 0..=f.order() {
        let n = degrees_a[rng.gen_range(0..degrees_a.len())];
        let s = degrees_b[rng.gen_range(0..degrees_b.len())];
        let x0 = random_vector(&f, a.dim(n), rng);
        let x1 = random_vector(&f, b.dim(s), rng);
        let mut v = vec![f.zero(); layout.dim(n + s)];
        layout.accumulate(&f, &mut v, &f.one(), n, &x0, s, &x1);
        if t.apply_d_power(n + s, k, &v) != d_power_expansion(&a, &b, k, n, &x0, s, &x1)? {
            return Ok(Some(format!("N = {}, k = {k}, degrees ({n}, {s})", f.order())));
        }
    }
    Ok(None)
}

fn internal_hexagons(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let f = field_for(rng, 3..=5);
    let c = random_complex(&f, ComplexShape::default(), rng);
    let table = cohomology_table(&c)?;
    let big_n = f.order();
    for l in 1..big_n - 1 {
        for m in 1..big_n - l {
            if !internal_hexagon_with(&c, &table, l, m)?.exact() {
                return Ok(Some(format!("N = {big_n}, (l, m) = ({l}, {m})")));
            }
        }
    }
    Ok(None)
}

fn snake_hexagons(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let f = field_for(rng, 2..=5);
    let s = random_staircase_ses(&f, ComplexShape::default(), rng);
    for n in 1..f.order() {
        if !snake_hexagon(&s, n)?.exact() {
            return Ok(Some(format!("N = {}, n = {n}", f.order())));
        }
    }
    Ok(None)
}

fn functoriality(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let f = field_for(rng, 2..=5);
    let shape = ComplexShape::default();
    let (a, b, c) = (random_complex(&f, shape, rng), random_complex(&f, shape, rng), random_complex(&f, shape, rng));
    let g1 = random_homomorphism(&a, &b, rng)?;
    let g2 = random_homomorphism(&b, &c, rng)?;
    let composite = g1.then(&g2)?;
    for k in 1..f.order() {
        let id = induced_on_cohomology(&GradedMap::identity(&a), &a, &a, k)?;
        let h = ncx_core::ncomplex::amplitude_cohomology(&a, k)?;
        let expected = GradedMap::new(
            &f,
            0,
            h.dims(),
            h.dims(),
            h.dims().iter().map(|(&n, &d)| (n, Matrix::identity(&f, d))).collect(),
        )?;
        if id != expected {
            return Ok(Some(format!("identity, k = {k}")));
        }
        let lhs = induced_on_cohomology(&composite, &a, &c, k)?;
        let rhs = induced_on_cohomology(&g1, &a, &b, k)?.then(&induced_on_cohomology(&g2, &b, &c, k)?)?;
        if lhs != rhs {
            return Ok(Some(format!("composition, k = {k}")));
        }
    }
    Ok(None)
}

fn qpoly(rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let n = rng.gen_range(2..=6);
    let f = if rng.gen_bool(0.5) { Field::cyclotomic(n)? } else { Field::prime_with_root(P, n)? };
    let q = qpoly_example(&f, 2 * n)?;
    Ok((!check_qdga(&q).passed()).then(|| f.describe()))
}

const PROPERTIES: [(&str, Trial); 6] = [
    ("tensor product satisfies d^N = 0", tensor_nilpotency),
    ("d^k expansion matches the assembled differential", expansion),
    ("internal hexagons are exact", internal_hexagons),
    ("snake hexagons are exact", snake_hexagons),
    ("induced maps respect identity and composition", functoriality),
    ("q-polynomial algebras are q-differential algebras", qpoly),
];

fn trial_seed(seed: u64, property: usize, trial: usize) -> u64 {
    seed ^ ((property as u64) << 32 | trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn run(report: &mut Report, seed: u64, trials: usize) {
    report.line(format!("seed: {seed}, trials per property: {trials}"));
    let jobs: Vec<(usize, usize)> = (0..PROPERTIES.len()).flat_map(|p| (0..trials).map(move |t| (p, t))).collect();
    let outcomes: Vec<Option<String>> = jobs
        .par_iter()
        .map(|&(p, t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, p, t));
            match (PROPERTIES[p].1)(&mut rng) {
                Ok(None) => None,
                Ok(Some(msg)) => Some(format!("trial {t}: {msg}")),
                Err(e) => Some(format!("trial {t}: error: {e}")),
            }
        })
        .collect();
    let mut summary = serde_json::Map::new();
    for (p, (name, _)) in PROPERTIES.iter().enumerate() {
        let failures: Vec<String> = outcomes[p * trials..(p + 1) * trials].iter().flatten().cloned().collect();
        summary.insert(name.to_string(), json!({"trials": trials, "failures": failures.len()}));
        report.check(format!("{name} ({trials} trials)"), failures.is_empty(), failures);
    }
    report.data("seed", json!(seed));
    report.data("properties", serde_json::Value::Object(summary));
}
