//! Coefficient fields carrying a distinguished root of unity, and the
//! q-combinatorics built on top of them.
//!
//! Two kinds of field are supported: prime fields F_p with a chosen residue
//! `q`, and cyclotomic fields ℚ(ζ_N) = ℚ[x]/Φ_N where `q` is the class of
//! `x^j` for some exponent `j` (by default `j = 1`). All arithmetic is exact
//! and every [`Scalar`] is kept in a canonical form, so equality is plain
//! structural equality.

pub mod cyclotomic;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of a [`Field`].
///
/// Prime-field residues are reduced into `[0, p)`. Cyclotomic elements are
/// coefficient vectors of length φ(N) over ℚ in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Cyc(Vec<BigRational>),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => {
                if c.iter().skip(1).all(Zero::is_zero) {
                    let c0 = c.first().cloned().unwrap_or_else(BigRational::zero);
                    return f.write_str(&cyclotomic::rational_to_string(&c0));
                }
                // polynomial in ζ, constant term first: "1+ζ", "-1/2ζ^2"
                let mut out = String::new();
                for (k, a) in c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    let mag = cyclotomic::rational_to_string(&a.abs());
                    out.push_str(match (a.is_negative(), out.is_empty()) {
                        (true, _) => "-",
                        (false, false) => "+",
                        (false, true) => "",
                    });
                    match k {
                        0 => out.push_str(&mag),
                        _ => {
                            if mag != "1" {
                                out.push_str(&mag);
                            }
                            out.push('ζ');
                            if k > 1 {
                                out.push_str(&format!("^{k}"));
                            }
                        }
                    }
                }
                f.write_str(&out)
            }
        }
    }
}

/// How to build a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// F_p with the residue `q` as distinguished element.
    Prime { p: u64, n: usize, q: u64 },
    /// ℚ(ζ_N) with `q = ζ^q_power`.
    Cyclotomic { n: usize, q_power: usize },
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Prime { p: u64 },
    Cyclotomic { modulus: Vec<BigInt>, q_power: usize },
}

#[derive(Debug)]
struct Inner {
    kind: Kind,
    order: usize,
    q: Scalar,
}

/// A coefficient field together with `N` and the distinguished element `q`.
///
/// Cloning is cheap; the context is shared behind an `Arc`.
#[derive(Clone, Debug)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.order == other.0.order
                && self.0.q == other.0.q)
    }
}

impl Eq for Field {}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Build a field from its description.
///
/// Construction only checks well-formedness (prime modulus, residue range,
/// `N >= 2`). Whether `q` satisfies Assumption (A) is reported separately by
/// [`Field::validate_assumption_a`].
pub fn make_field(spec: &FieldSpec) -> Result<Field> {
    match *spec {
        FieldSpec::Prime { p, n, q } => Field::prime(p, n, q),
        FieldSpec::Cyclotomic { n, q_power } => Field::cyclotomic_with_power(n, q_power),
    }
}

impl Field {
    pub fn prime(p: u64, n: usize, q: u64) -> Result<Field> {
        if n < 2 {
            return Err(Error::OrderTooSmall(n));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if q >= p {
            return Err(Error::RootOutOfRange { q, p });
        }
        Ok(Field(Arc::new(Inner {
            kind: Kind::Prime { p },
            order: n,
            q: Scalar::Fp(q),
        })))
    }

    /// F_p with the smallest residue of multiplicative order exactly `n`.
    pub fn prime_with_root(p: u64, n: usize) -> Result<Field> {
        let probe = Field::prime(p, n, 0)?;
        let q = (1..p)
            .find(|&c| probe.multiplicative_order(&Scalar::Fp(c), n) == Some(n))
            .ok_or_else(|| {
                Error::AssumptionA(format!("F_{p} has no element of order {n}"))
            })?;
        Field::prime(p, n, q)
    }

    pub fn cyclotomic(n: usize) -> Result<Field> {
        Field::cyclotomic_with_power(n, 1)
    }

    pub fn cyclotomic_with_power(n: usize, q_power: usize) -> Result<Field> {
        if n < 2 {
            return Err(Error::OrderTooSmall(n));
        }
        let modulus = cyclotomic::cyclotomic_polynomial(n);
        let deg = modulus.len() - 1;
        let q_power = q_power % n;
        let mut x = vec![BigRational::zero(); q_power + 1];
        x[q_power] = BigRational::one();
        let q = Scalar::Cyc(cyclotomic::reduce(x, &modulus));
        debug_assert!(deg >= 1);
        Ok(Field(Arc::new(Inner {
            kind: Kind::Cyclotomic { modulus, q_power },
            order: n,
            q,
        })))
    }

    /// The same field with a different distinguished element.
    pub fn with_q(&self, q: Scalar) -> Field {
        let kind = match &self.0.kind {
            Kind::Prime { p } => Kind::Prime { p: *p },
            Kind::Cyclotomic { modulus, .. } => {
                // q_power no longer describes q; record it as unknown (N).
                Kind::Cyclotomic { modulus: modulus.clone(), q_power: self.0.order }
            }
        };
        Field(Arc::new(Inner { kind, order: self.0.order, q }))
    }

    /// N.
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn q(&self) -> &Scalar {
        &self.0.q
    }

    /// The prime modulus, or `None` for the cyclotomic (characteristic 0) kind.
    pub fn modulus(&self) -> Option<u64> {
        match self.0.kind {
            Kind::Prime { p } => Some(p),
            Kind::Cyclotomic { .. } => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_cyclotomic(&self) -> bool {
        matches!(self.0.kind, Kind::Cyclotomic { .. })
    }

    /// Exponent `j` with `q = ζ^j` in cyclotomic mode.
    pub fn q_power(&self) -> Option<usize> {
        match self.0.kind {
            Kind::Cyclotomic { q_power, .. } if q_power < self.0.order => Some(q_power),
            _ => None,
        }
    }

    /// φ(N) in cyclotomic mode, 1 for prime fields.
    pub fn degree(&self) -> usize {
        match &self.0.kind {
            Kind::Prime { .. } => 1,
            Kind::Cyclotomic { modulus, .. } => modulus.len() - 1,
        }
    }

    pub fn describe(&self) -> String {
        match &self.0.kind {
            Kind::Prime { p } => format!("F_{p}, N={}, q={}", self.0.order, self.0.q),
            Kind::Cyclotomic { q_power, .. } => {
                if *q_power < self.0.order {
                    format!("Q(zeta_{0}), N={0}, q=zeta^{1}", self.0.order, q_power)
                } else {
                    format!("Q(zeta_{0}), N={0}, q={1}", self.0.order, self.0.q)
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.0.kind {
            Kind::Prime { .. } => Scalar::Fp(0),
            Kind::Cyclotomic { modulus, .. } => {
                Scalar::Cyc(vec![BigRational::zero(); modulus.len() - 1])
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match &self.0.kind {
            Kind::Prime { p } => Scalar::Fp((v as i128).rem_euclid(*p as i128) as u64),
            Kind::Cyclotomic { modulus, .. } => {
                let mut c = vec![BigRational::zero(); modulus.len() - 1];
                c[0] = BigRational::from_integer(BigInt::from(v));
                Scalar::Cyc(c)
            }
        }
    }

    /// Embed a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match &self.0.kind {
            Kind::Prime { p } => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let m = ((x % &pb) + &pb) % &pb;
                    u64::try_from(m).expect("residue fits in u64")
                };
                let num = Scalar::Fp(reduce(r.numer()));
                let den = Scalar::Fp(reduce(r.denom()));
                let inv = self.inv(&den).ok_or(Error::DivisionByZero)?;
                Ok(self.mul(&num, &inv))
            }
            Kind::Cyclotomic { modulus, .. } => {
                let mut c = vec![BigRational::zero(); modulus.len() - 1];
                c[0] = r.clone();
                Ok(Scalar::Cyc(c))
            }
        }
    }

    /// Build a cyclotomic element from its coefficients on 1, ζ, ζ², ...
    /// Longer vectors are reduced modulo Φ_N.
    pub fn from_coefficients(&self, coeffs: Vec<BigRational>) -> Result<Scalar> {
        match &self.0.kind {
            Kind::Prime { .. } => match coeffs.as_slice() {
                [c] => self.from_rational(c),
                _ => Err(Error::Schema(
                    "prime-field scalars have exactly one component".into(),
                )),
            },
            Kind::Cyclotomic { modulus, .. } => Ok(Scalar::Cyc(cyclotomic::reduce(coeffs, modulus))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(r) => *r == 0,
            Scalar::Cyc(c) => c.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.0.kind, a, b) {
            (Kind::Prime { p }, Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Kind::Cyclotomic { .. }, Scalar::Cyc(x), Scalar::Cyc(y)) => {
                Scalar::Cyc(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            _ => panic!("scalar does not belong to field {}", self.describe()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&self.0.kind, a) {
            (Kind::Prime { p }, Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Kind::Cyclotomic { .. }, Scalar::Cyc(x)) => Scalar::Cyc(x.iter().map(|u| -u).collect()),
            _ => panic!("scalar does not belong to field {}", self.describe()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.0.kind, a, b) {
            (Kind::Prime { p }, Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Kind::Cyclotomic { modulus, .. }, Scalar::Cyc(x), Scalar::Cyc(y)) => {
                if x.iter().skip(1).all(Zero::is_zero) {
                    return Scalar::Cyc(y.iter().map(|v| &x[0] * v).collect());
                }
                if y.iter().skip(1).all(Zero::is_zero) {
                    return Scalar::Cyc(x.iter().map(|u| u * &y[0]).collect());
                }
                Scalar::Cyc(cyclotomic::reduce(cyclotomic::mul(x, y), modulus))
            }
            _ => panic!("scalar does not belong to field {}", self.describe()),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (&self.0.kind, a) {
            (Kind::Prime { p }, Scalar::Fp(x)) => Some(self.pow(&Scalar::Fp(*x), p - 2)),
            (Kind::Cyclotomic { modulus, .. }, Scalar::Cyc(x)) => {
                cyclotomic::inverse(x, modulus).map(Scalar::Cyc)
            }
            _ => panic!("scalar does not belong to field {}", self.describe()),
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `q^e` for any integer exponent. Negative exponents need `q` invertible.
    pub fn q_pow(&self, e: i64) -> Scalar {
        if e >= 0 {
            self.pow(self.q(), e as u64)
        } else {
            let inv = self.inv(self.q()).expect("q is not invertible");
            self.pow(&inv, e.unsigned_abs())
        }
    }

    /// Smallest `m` in `1..=limit` with `a^m = 1`.
    pub fn multiplicative_order(&self, a: &Scalar, limit: usize) -> Option<usize> {
        let one = self.one();
        let mut acc = a.clone();
        for m in 1..=limit {
            if acc == one {
                return Some(m);
            }
            acc = self.mul(&acc, a);
        }
        None
    }

    pub fn validate_assumption_a(&self) -> AssumptionReport {
        validate_assumption_a(self)
    }
}

/// Outcome of checking Assumption (A): `[N]_q = 0` and `[n]_q` invertible
/// for `1 <= n <= N-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionReport {
    pub order: usize,
    pub q: Scalar,
    /// The value `[N]_q`.
    pub q_int_order: Scalar,
    /// `(n, [n]_q, invertible)` for `1 <= n <= N-1`.
    pub invertible: Vec<(usize, Scalar, bool)>,
    pub passed: bool,
}

impl AssumptionReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.passed {
            if !is_zero_scalar(&self.q_int_order) {
                out.push(format!("[{}]_q = {} is not zero", self.order, self.q_int_order));
            }
            for (n, v, ok) in &self.invertible {
                if !ok {
                    out.push(format!("[{n}]_q = {v} is not invertible"));
                }
            }
        }
        out
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::AssumptionA(self.failures().join("; ")))
        }
    }
}

fn is_zero_scalar(s: &Scalar) -> bool {
    match s {
        Scalar::Fp(r) => *r == 0,
        Scalar::Cyc(c) => c.iter().all(Zero::is_zero),
    }
}

pub fn validate_assumption_a(field: &Field) -> AssumptionReport {
    let n = field.order();
    let q_int_order = q_int(field, n);
    let invertible: Vec<(usize, Scalar, bool)> = (1..n)
        .map(|k| {
            let v = q_int(field, k);
            let ok = !field.is_zero(&v);
            (k, v, ok)
        })
        .collect();
    let passed = field.is_zero(&q_int_order) && invertible.iter().all(|(_, _, ok)| *ok);
    AssumptionReport {
        order: n,
        q: field.q().clone(),
        q_int_order,
        invertible,
        passed,
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn q_int(field: &Field, n: usize) -> Scalar {
    let q = field.q();
    let mut acc = field.zero();
    let mut power = field.one();
    for _ in 0..n {
        acc = field.add(&acc, &power);
        power = field.mul(&power, q);
    }
    acc
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(field: &Field, n: usize) -> Scalar {
    (1..=n).fold(field.one(), |acc, k| field.mul(&acc, &q_int(field, k)))
}

/// Rows `0..=n` of the q-binomial triangle, built with the recurrence
/// `[n,m] + q^(m+1) [n,m+1] = [n+1,m+1]` and unit boundary entries.
///
/// Row 0 is the single entry `[0,0] = 1`.
pub fn q_binomial_triangle(field: &Field, n: usize) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = vec![vec![field.one()]];
    if n == 0 {
        return rows;
    }
    rows.push(vec![field.one(), field.one()]);
    let q_powers: Vec<Scalar> = (0..=n as i64).map(|e| field.q_pow(e)).collect();
    for top in 1..n {
        let prev = &rows[top];
        let mut row = Vec::with_capacity(top + 2);
        row.push(field.one());
        for m in 0..top {
            row.push(field.add(&prev[m], &field.mul(&q_powers[m + 1], &prev[m + 1])));
        }
        row.push(field.one());
        rows.push(row);
    }
    rows
}

/// The q-binomial coefficient `[n choose m]_q`.
pub fn q_binomial(field: &Field, n: usize, m: usize) -> Result<Scalar> {
    if m > n {
        return Err(Error::IndexOutOfRange(format!("q_binomial: m = {m} > n = {n}")));
    }
    Ok(q_binomial_triangle(field, n).swap_remove(n).swap_remove(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7, 3, 2).unwrap()
    }

    #[test]
    fn cyclotomic_display() {
        let f = Field::cyclotomic(5).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let show = |c: Vec<BigRational>| f.from_coefficients(c).unwrap().to_string();
        assert_eq!(show(vec![r(1, 1), r(1, 1), r(0, 1), r(0, 1)]), "1+ζ");
        assert_eq!(show(vec![r(0, 1), r(0, 1), r(-1, 2), r(0, 1)]), "-1/2ζ^2");
        assert_eq!(show(vec![r(-3, 1), r(0, 1), r(0, 1), r(2, 1)]), "-3+2ζ^3");
        assert_eq!(show(vec![r(0, 1); 4]), "0");
        assert_eq!(f.q().to_string(), "ζ");
    }

    #[test]
    fn prime_field_construction() {
        let f = f7();
        assert_eq!(f.pow(f.q(), 3), f.one());
        assert!(f.validate_assumption_a().passed);
        assert_eq!(Field::prime(8, 3, 2), Err(Error::NotPrime(8)));
        assert_eq!(Field::prime(7, 3, 7), Err(Error::RootOutOfRange { q: 7, p: 7 }));
        assert_eq!(Field::prime(7, 1, 2), Err(Error::OrderTooSmall(1)));
    }

    #[test]
    fn order_four_root_fails_at_validation() {
        let f = Field::prime(5, 3, 2).unwrap();
        let report = f.validate_assumption_a();
        assert!(!report.passed);
        assert_eq!(report.q_int_order, Scalar::Fp(2));
        assert_eq!(f.multiplicative_order(f.q(), 5), Some(4));
        assert!(report.into_result().is_err());
    }

    #[test]
    fn cyclotomic_two_is_rationals_with_minus_one() {
        let f = Field::cyclotomic(2).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(*f.q(), f.from_i64(-1));
        assert!(f.validate_assumption_a().passed);
    }

    #[test]
    fn prime_n_with_q_one() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let f = Field::prime(p, p as usize, 1).unwrap();
            let report = f.validate_assumption_a();
            assert!(report.passed, "p = {p}");
            for (n, v, _) in &report.invertible {
                assert_eq!(*v, Scalar::Fp(*n as u64));
            }
        }
    }

    #[test]
    fn q_integers() {
        let f = f7();
        assert_eq!(q_int(&f, 0), f.zero());
        assert_eq!(q_int(&f, 1), f.one());
        assert_eq!(q_int(&f, 2), Scalar::Fp(3));
        assert_eq!(q_int(&f, 3), Scalar::Fp(0));
        let c = Field::cyclotomic(3).unwrap();
        assert!(c.is_zero(&q_int(&c, 3)));
    }

    #[test]
    fn q_factorials() {
        let f = f7();
        assert_eq!(q_factorial(&f, 1), f.one());
        assert_eq!(q_factorial(&f, 2), Scalar::Fp(3));
        assert_eq!(q_factorial(&f, 3), Scalar::Fp(0));
    }

    #[test]
    fn q_binomials() {
        let f = f7();
        assert_eq!(q_binomial(&f, 2, 1).unwrap(), Scalar::Fp(3));
        assert_eq!(q_binomial(&f, 5, 0).unwrap(), f.one());
        assert_eq!(q_binomial(&f, 5, 5).unwrap(), f.one());
        assert!(q_binomial(&f, 2, 3).is_err());
        let c = Field::cyclotomic(3).unwrap();
        assert!(c.is_zero(&q_binomial(&c, 3, 1).unwrap()));
        assert!(c.is_zero(&q_binomial(&c, 3, 2).unwrap()));
    }

    #[test]
    fn cyclotomic_inverse_roundtrip() {
        let f = Field::cyclotomic(5).unwrap();
        let a = f.add(&f.q_pow(2), &f.from_i64(3));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert_eq!(f.mul(f.q(), &f.q_pow(-1)), f.one());
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn prime_field_from_rational() {
        let f = f7();
        let r = cyclotomic::parse_rational("2/5").unwrap();
        // 5^{-1} = 3 mod 7, so 2/5 = 6
        assert_eq!(f.from_rational(&r).unwrap(), Scalar::Fp(6));
        let bad = cyclotomic::parse_rational("1/7").unwrap();
        assert_eq!(f.from_rational(&bad), Err(Error::DivisionByZero));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(998_244_353));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn smallest_root_search() {
        let f = Field::prime_with_root(7, 3).unwrap();
        assert_eq!(*f.q(), Scalar::Fp(2));
        assert!(Field::prime_with_root(7, 4).is_err());
    }
}
