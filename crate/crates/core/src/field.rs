//! Exact scalar arithmetic over the ground field: arbitrary-precision
//! rationals and prime fields F_p with p < 2^31.
//!
//! Scalars are self-describing: every value carries its field, and mixing
//! fields in the internal operators is a programming error (they panic).
//! The checked entry points ([`Scalar::arith`], [`Scalar::parse`]) return
//! errors instead and are the boundary used by parsers and the CLI.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// The scalar field: Q or F_p for a prime 2 <= p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composites and out-of-range moduli.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if p < 2 || p >= (1 << 31) || !is_prime_u32(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Modular { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Modular { value: 1 % *p, modulus: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let p64 = *p as i64;
                let r = ((v % p64) + p64) % p64;
                Scalar::Modular { value: r as u32, modulus: *p }
            }
        }
    }

    /// All residues of F_p in order; used by exhaustive sweeps.
    /// Panics over Q.
    pub fn elements(&self) -> Vec<Scalar> {
        match self {
            FieldSpec::Rationals => panic!("cannot enumerate the rationals"),
            FieldSpec::PrimeField(p) => (0..*p)
                .map(|v| Scalar::Modular { value: v, modulus: *p })
                .collect(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// Deterministic Miller-Rabin; bases {2, 3, 5, 7} decide primality below 3.2e9.
fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u32, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = mod_pow(a, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n64);
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A binary scalar operation, for the checked arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element in canonical form: a reduced fraction over Q, or a
/// residue 0 <= value < p over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, modulus } => *value == 1 % *modulus,
        }
    }

    fn same_field(&self, other: &Scalar) -> bool {
        self.field() == other.field()
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        assert!(self.same_field(other), "scalar field mismatch in add");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        assert!(self.same_field(other), "scalar field mismatch in mul");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Checked binary arithmetic over matching fields.
    pub fn arith(a: &Scalar, b: &Scalar, op: ScalarOp) -> Result<Scalar> {
        if !a.same_field(b) {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                a.field(),
                b.field()
            )));
        }
        match op {
            ScalarOp::Add => Ok(a.add(b)),
            ScalarOp::Sub => Ok(a.sub(b)),
            ScalarOp::Mul => Ok(a.mul(b)),
            ScalarOp::Div => a.div(b),
        }
    }

    /// Parses `-?[0-9]+(/[1-9][0-9]*)?` into a canonical scalar of `field`.
    ///
    /// Over F_p a fraction means modular division, which fails with
    /// `DivisionByZero` when the denominator reduces to 0 mod p.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let num_body = num_str.strip_prefix('-').unwrap_or(num_str);
        if num_body.is_empty() || !num_body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseError(format!("bad scalar literal {text:?}")));
        }
        if let Some(d) = den_str {
            let ok = !d.is_empty()
                && d.bytes().all(|b| b.is_ascii_digit())
                && !d.starts_with('0');
            if !ok {
                return Err(Error::ParseError(format!("bad denominator in {text:?}")));
            }
        }
        let num = BigInt::from_str(num_str)
            .map_err(|e| Error::ParseError(format!("{text:?}: {e}")))?;
        let den = match den_str {
            Some(d) => BigInt::from_str(d).map_err(|e| Error::ParseError(format!("{text:?}: {e}")))?,
            None => BigInt::one(),
        };
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(p);
                let to_residue = |x: &BigInt| -> u32 {
                    let mut r = x % &pb;
                    if r.is_negative() {
                        r += &pb;
                    }
                    u32::try_from(r).expect("residue fits in u32")
                };
                let n = Scalar::Modular { value: to_residue(&num), modulus: p };
                let d = Scalar::Modular { value: to_residue(&den), modulus: p };
                n.div(&d)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

// Total order used only for canonical sorting (subspace enumeration order,
// deterministic report merges); compares the field tag first so mixed-field
// values never compare as equal.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Modular { value: a, modulus: pa }, Scalar::Modular { value: b, modulus: pb }) => {
                pa.cmp(pb).then(a.cmp(b))
            }
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn fraction_addition_is_exact() {
        let a = q("1/2");
        let b = q("1/3");
        assert_eq!(Scalar::arith(&a, &b, ScalarOp::Add).unwrap(), q("5/6"));
    }

    #[test]
    fn modular_multiplication_reduces() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(Scalar::arith(&a, &b, ScalarOp::Mul).unwrap(), f5.from_i64(2));
    }

    #[test]
    fn self_subtraction_vanishes_for_random_values() {
        // 200 deterministic pseudo-random values over Q and over F_7.
        let f7 = FieldSpec::prime(7).unwrap();
        let mut state = 0x12345678u64;
        for _ in 0..200 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = (state >> 16) as i64 % 10_000 - 5_000;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let d = ((state >> 16) as i64 % 999).abs() + 1;
            let a = Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)));
            assert!(Scalar::arith(&a, &a, ScalarOp::Sub).unwrap().is_zero());
            let m = f7.from_i64(n);
            assert!(Scalar::arith(&m, &m, ScalarOp::Sub).unwrap().is_zero());
        }
    }

    #[test]
    fn parse_reduces_rationals() {
        assert_eq!(q("-4/6"), q("-2/3"));
        assert_eq!(q("-4/6").to_string(), "-2/3");
    }

    #[test]
    fn parse_reduces_mod_p() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse("9", f7).unwrap(), f7.from_i64(2));
    }

    #[test]
    fn parse_rejects_bad_literals() {
        for bad in ["", "-", "1/0", "1/01", "a", "1.5", "1/-2", "--3", "3/"] {
            assert!(Scalar::parse(bad, FieldSpec::Rationals).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn modular_fraction_with_denominator_divisible_by_p_fails() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse("3/14", f7), Err(Error::DivisionByZero));
    }

    #[test]
    fn format_parse_round_trip_corpus() {
        // An enumerated corpus of literals; format(parse(s)) must be the
        // canonical form of s and parse again to the same value.
        let f5 = FieldSpec::prime(5).unwrap();
        let mut corpus: Vec<String> = Vec::new();
        for n in -9i64..=9 {
            corpus.push(format!("{n}"));
            for d in [1i64, 2, 3, 4, 6, 7] {
                corpus.push(format!("{n}/{d}"));
            }
        }
        corpus.extend(["123456789123456789/987654321".into(), "0/7".into()]);
        assert!(corpus.len() >= 100);
        for s in &corpus {
            for field in [FieldSpec::Rationals, f5] {
                let v = Scalar::parse(s, field).unwrap();
                let printed = v.to_string();
                assert_eq!(Scalar::parse(&printed, field).unwrap(), v, "{s} over {field}");
                // canonical form is a fixed point of parse-then-format
                assert_eq!(Scalar::parse(&printed, field).unwrap().to_string(), printed);
            }
        }
    }

    #[test]
    fn field_laws_exhaustive_over_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        let elems = f5.elements();
        for a in &elems {
            for b in &elems {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in &elems {
                    assert_eq!(a.add(&b.add(c)), a.add(b).add(c));
                    assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
                if !b.is_zero() {
                    assert_eq!(b.mul(&b.inverse().unwrap()), f5.one());
                }
            }
        }
    }

    #[test]
    fn field_laws_random_rationals() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = (state >> 20) as i64 % 200 - 100;
            let d = (state >> 5) as i64 % 40 + 1;
            Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
        };
        for _ in 0..500 {
            let (a, b, c) = (next(), next(), next());
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.add(&b.add(&c)), a.add(&b).add(&c));
            assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                assert!(a.mul(&a.inverse().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn primality_check_rejects_composites() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(2147483629).is_ok()); // largest prime < 2^31
        for bad in [0u32, 1, 4, 6, 9, 15, 21, 25, 91, 561, 1_000_000] {
            assert!(FieldSpec::prime(bad).is_err(), "{bad}");
        }
        assert!(FieldSpec::prime(u32::MAX).is_err()); // >= 2^31
    }

    #[test]
    fn mixed_field_arith_is_rejected() {
        let f5 = FieldSpec::prime(5).unwrap();
        let res = Scalar::arith(&q("1"), &f5.one(), ScalarOp::Add);
        assert!(matches!(res, Err(Error::FieldMismatch(_))));
    }
}
