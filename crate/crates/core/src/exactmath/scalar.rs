//! Exact scalars: rationals, real quadratic field elements a + b√d, and
//! arbitrary-precision floats.
//!
//! All formula data is carried in [`ExactScalar`]. Arithmetic between two
//! quadratic values with different `d` is an error, never a silent coercion;
//! rationals promote freely into either quadratic fields or floats.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigfloat::BigF;
use crate::error::MathError;

/// A number that is exactly a rational, an element of Q(√d), or a binary
/// float of recorded precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    /// a + b√d with d square-free, d ≥ 2 and b ≠ 0 (b = 0 canonicalizes to
    /// `Rational`).
    Quadratic { d: u64, a: BigRational, b: BigRational },
    Big(BigF),
}

pub use ExactScalar as Scalar;

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        ExactScalar::Rational(BigRational::from(BigInt::from(v)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        ExactScalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }

    /// (a + b√d)/1 with the canonical b = 0 downgrade.
    pub fn quadratic(d: u64, a: BigRational, b: BigRational) -> Result<Self, MathError> {
        if !is_square_free(d) {
            return Err(MathError::InvalidScalar(format!(
                "d = {d} is not a square-free integer >= 2"
            )));
        }
        if b.is_zero() {
            Ok(ExactScalar::Rational(a))
        } else {
            Ok(ExactScalar::Quadratic { d, a, b })
        }
    }

    /// b√d as a scalar, for small integer arguments.
    pub fn sqrt_term(d: u64, b_num: i64, b_den: i64) -> Self {
        Self::quadratic(
            d,
            BigRational::zero(),
            BigRational::new(BigInt::from(b_num), BigInt::from(b_den)),
        )
        .expect("square-free d")
    }

    pub fn big(v: BigF) -> Self {
        ExactScalar::Big(v)
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ExactScalar::Big(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Quadratic { .. } => false, // b != 0, irrational
            ExactScalar::Big(v) => v.is_zero(),
        }
    }

    /// The quadratic field this value lives in, if any.
    pub fn quad_d(&self) -> Option<u64> {
        match self {
            ExactScalar::Quadratic { d, .. } => Some(*d),
            _ => None,
        }
    }

    /// Exact sign: -1, 0, or +1.
    pub fn sign(&self) -> i8 {
        match self {
            ExactScalar::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            ExactScalar::Quadratic { d, a, b } => {
                // sign of a + b√d with b != 0
                let sa = if a.is_zero() {
                    0
                } else if a.is_positive() {
                    1
                } else {
                    -1
                };
                let sb = if b.is_positive() { 1i8 } else { -1 };
                if sa == 0 || sa == sb {
                    return sb;
                }
                // opposite signs: compare a^2 with d b^2
                let a2 = a * a;
                let db2 = b * b * BigRational::from(BigInt::from(*d));
                match a2.cmp(&db2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("√d rational for square-free d"),
                }
            }
            ExactScalar::Big(v) => {
                if v.is_zero() {
                    0
                } else if v.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    fn promote(
        lhs: &ExactScalar,
        rhs: &ExactScalar,
    ) -> Result<(ExactScalar, ExactScalar), MathError> {
        use ExactScalar::*;
        match (lhs, rhs) {
            (Quadratic { d: d1, .. }, Quadratic { d: d2, .. }) if d1 != d2 => {
                Err(MathError::MixedQuadraticFields(*d1, *d2))
            }
            (Quadratic { d, .. }, Rational(r)) => Ok((
                lhs.clone(),
                Quadratic { d: *d, a: r.clone(), b: BigRational::zero() },
            )),
            (Rational(r), Quadratic { d, .. }) => Ok((
                Quadratic { d: *d, a: r.clone(), b: BigRational::zero() },
                rhs.clone(),
            )),
            (Big(v), x) if x.is_exact() => {
                Ok((lhs.clone(), Big(x.to_bigf(v.prec()))))
            }
            (x, Big(v)) if x.is_exact() => {
                Ok((Big(x.to_bigf(v.prec())), rhs.clone()))
            }
            _ => Ok((lhs.clone(), rhs.clone())),
        }
    }

    fn canon(d: u64, a: BigRational, b: BigRational) -> ExactScalar {
        if b.is_zero() {
            ExactScalar::Rational(a)
        } else {
            ExactScalar::Quadratic { d, a, b }
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MathError> {
        use ExactScalar::*;
        let (x, y) = Self::promote(self, rhs)?;
        Ok(match (x, y) {
            (Rational(p), Rational(q)) => Rational(p + q),
            (Quadratic { d, a, b }, Quadratic { a: a2, b: b2, .. }) => {
                Self::canon(d, a + a2, b + b2)
            }
            (Big(u), Big(v)) => Big(u.add(&v)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, MathError> {
        self.checked_add(&rhs.neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MathError> {
        use ExactScalar::*;
        let (x, y) = Self::promote(self, rhs)?;
        Ok(match (x, y) {
            (Rational(p), Rational(q)) => Rational(p * q),
            (Quadratic { d, a, b }, Quadratic { a: a2, b: b2, .. }) => {
                let dd = BigRational::from(BigInt::from(d));
                Self::canon(d, &a * &a2 + &dd * &b * &b2, &a * &b2 + &b * &a2)
            }
            (Big(u), Big(v)) => Big(u.mul(&v)),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, MathError> {
        use ExactScalar::*;
        if rhs.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let (x, y) = Self::promote(self, rhs)?;
        Ok(match (x, y) {
            (Rational(p), Rational(q)) => Rational(p / q),
            (Quadratic { d, a, b }, Quadratic { a: a2, b: b2, .. }) => {
                // multiply by the conjugate of the divisor
                let dd = BigRational::from(BigInt::from(d));
                let norm = &a2 * &a2 - &dd * &b2 * &b2;
                debug_assert!(!norm.is_zero());
                let na = (&a * &a2 - &dd * &b * &b2) / &norm;
                let nb = (&b * &a2 - &a * &b2) / &norm;
                Self::canon(d, na, nb)
            }
            (Big(u), Big(v)) => Big(u.div(&v)),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Self {
        use ExactScalar::*;
        match self {
            Rational(r) => Rational(-r),
            Quadratic { d, a, b } => Quadratic { d: *d, a: -a, b: -b },
            Big(v) => Big(v.neg()),
        }
    }

    pub fn pow(&self, n: usize) -> Result<Self, MathError> {
        let mut acc = ExactScalar::one();
        for _ in 0..n {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn to_bigf(&self, prec: usize) -> BigF {
        match self {
            ExactScalar::Rational(r) => BigF::from_ratio(r, prec),
            ExactScalar::Quadratic { d, a, b } => {
                let fa = BigF::from_ratio(a, prec + 32);
                let fb = BigF::from_ratio(b, prec + 32);
                let sd = BigF::from_i64(*d as i64, prec + 32).sqrt();
                fa.add(&fb.mul(&sd))
            }
            ExactScalar::Big(v) => {
                let mut w = v.clone();
                if w.prec() < prec {
                    w = w.add(&BigF::zero(prec));
                }
                w
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => r.to_f64().expect("rational to f64"),
            ExactScalar::Quadratic { d, a, b } => {
                a.to_f64().unwrap() + b.to_f64().unwrap() * (*d as f64).sqrt()
            }
            ExactScalar::Big(v) => v.to_f64(),
        }
    }

    /// Exact rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Deterministic total order used for canonical point ordering. Orders by
    /// variant first, then structurally; it is not a numeric order across
    /// variants.
    pub fn canonical_cmp(&self, rhs: &Self) -> Ordering {
        use ExactScalar::*;
        fn rank(s: &ExactScalar) -> u8 {
            match s {
                Rational(_) => 0,
                Quadratic { .. } => 1,
                Big(_) => 2,
            }
        }
        match (self, rhs) {
            (Rational(p), Rational(q)) => p.cmp(q),
            (Quadratic { d, a, b }, Quadratic { d: d2, a: a2, b: b2 }) => d
                .cmp(d2)
                .then_with(|| a.cmp(a2))
                .then_with(|| b.cmp(b2)),
            (Big(u), Big(v)) => u.cmp(v),
            _ => rank(self).cmp(&rank(rhs)),
        }
    }

    /// "p/q", "p/q+r/s*sqrt(d)", or a decimal string for floats.
    pub fn to_schema_string(&self) -> String {
        match self {
            ExactScalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            ExactScalar::Quadratic { d, a, b } => {
                let sb = if b.is_negative() { '-' } else { '+' };
                let babs = b.abs();
                format!(
                    "{}/{}{}{}/{}*sqrt({})",
                    a.numer(),
                    a.denom(),
                    sb,
                    babs.numer(),
                    babs.denom(),
                    d
                )
            }
            ExactScalar::Big(v) => v.to_decimal_string(),
        }
    }

    /// Parses the exact forms accepted by the schema: integers, "p/q",
    /// decimal literals (converted exactly), and "p/q±r/s*sqrt(d)".
    pub fn parse_exact(s: &str) -> Result<Self, MathError> {
        let s = s.trim();
        if let Some(idx) = s.find("sqrt(") {
            let d: u64 = s[idx + 5..]
                .strip_suffix(')')
                .ok_or_else(|| MathError::Parse(format!("unterminated sqrt in {s:?}")))?
                .parse()
                .map_err(|_| MathError::Parse(format!("bad radicand in {s:?}")))?;
            let head = s[..idx]
                .strip_suffix('*')
                .ok_or_else(|| MathError::Parse(format!("expected '*sqrt(d)' in {s:?}")))?;
            // split head into rational part and coefficient at the last +/-
            // that is not a leading sign
            let bytes = head.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-')
                    && bytes[i - 1] != b'/'
                    && bytes[i - 1] != b'+'
                    && bytes[i - 1] != b'-'
                {
                    split = Some(i);
                    break;
                }
            }
            let (a_str, b_str) = match split {
                Some(i) => (&head[..i], &head[i..]),
                None => ("0", head),
            };
            let a = parse_rational(a_str)?;
            let b_str = b_str.strip_prefix('+').unwrap_or(b_str);
            let b = parse_rational(b_str)?;
            Self::quadratic(d, a, b)
        } else {
            Ok(ExactScalar::Rational(parse_rational(s)?))
        }
    }

    /// Parses any schema string, producing a float scalar for non-exact
    /// forms.
    pub fn parse_float(s: &str, prec: usize) -> Result<Self, MathError> {
        if s.contains("sqrt(") || s.contains('/') {
            let v = Self::parse_exact(s)?;
            Ok(ExactScalar::Big(v.to_bigf(prec)))
        } else {
            BigF::parse_decimal(s, prec)
                .map(ExactScalar::Big)
                .map_err(MathError::Parse)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, MathError> {
    let s = s.trim();
    let bad = |m: &str| MathError::Parse(format!("{m}: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(p, q))
    } else if let Some((int_part, frac_part)) = s.split_once('.') {
        // exact decimal
        let neg = int_part.trim_start().starts_with('-');
        let ip: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad("bad decimal"))?
        };
        if frac_part.is_empty() {
            return Ok(BigRational::from(ip));
        }
        let fp: BigInt = frac_part.parse().map_err(|_| bad("bad decimal"))?;
        if fp.is_negative() {
            return Err(bad("bad decimal"));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigRational::new(fp, scale);
        let whole = BigRational::from(ip);
        Ok(if neg { whole - frac } else { whole + frac })
    } else {
        let p: BigInt = s.parse().map_err(|_| bad("bad integer"))?;
        Ok(BigRational::from(p))
    }
}

macro_rules! panic_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}
panic_op!(Add, add, checked_add);
panic_op!(Sub, sub, checked_sub);
panic_op!(Mul, mul, checked_mul);
panic_op!(Div, div, checked_div);

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_schema_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: u64, a: (i64, i64), b: (i64, i64)) -> ExactScalar {
        ExactScalar::quadratic(
            d,
            BigRational::new(BigInt::from(a.0), BigInt::from(a.1)),
            BigRational::new(BigInt::from(b.0), BigInt::from(b.1)),
        )
        .unwrap()
    }

    #[test]
    fn quadratic_arithmetic() {
        // (1 + √5)(1 - √5) = -4
        let x = q(5, (1, 1), (1, 1));
        let y = q(5, (1, 1), (-1, 1));
        assert_eq!(x.checked_mul(&y).unwrap(), ExactScalar::from_int(-4));
        // golden ratio: φ² = φ + 1
        let phi = q(5, (1, 2), (1, 2));
        let lhs = phi.checked_mul(&phi).unwrap();
        let rhs = phi.checked_add(&ExactScalar::one()).unwrap();
        assert_eq!(lhs, rhs);
        // inverse round trip
        let inv = ExactScalar::one().checked_div(&phi).unwrap();
        assert_eq!(phi.checked_mul(&inv).unwrap(), ExactScalar::one());
    }

    #[test]
    fn mixed_fields_rejected() {
        let x = q(5, (0, 1), (1, 1));
        let y = q(14, (0, 1), (1, 1));
        assert!(matches!(
            x.checked_add(&y),
            Err(MathError::MixedQuadraticFields(5, 14))
        ));
        // but rationals promote
        assert!(x.checked_add(&ExactScalar::ratio(1, 2)).is_ok());
    }

    #[test]
    fn non_square_free_rejected() {
        assert!(ExactScalar::quadratic(
            12,
            BigRational::zero(),
            BigRational::one()
        )
        .is_err());
    }

    #[test]
    fn quadratic_sign() {
        // 3 - 2√2 > 0 because 9 > 8
        assert_eq!(q(2, (3, 1), (-2, 1)).sign(), 1);
        // 2 - 2√2 < 0
        assert_eq!(q(2, (2, 1), (-2, 1)).sign(), -1);
        // -3 + 2√2 < 0
        assert_eq!(q(2, (-3, 1), (2, 1)).sign(), -1);
        assert_eq!(ExactScalar::zero().sign(), 0);
    }

    #[test]
    fn schema_round_trip() {
        for s in [
            ExactScalar::ratio(-7, 3),
            q(5, (1, 10), (-1, 10)),
            q(14, (161, 1344), (17, 1344)),
            ExactScalar::zero(),
        ] {
            let txt = s.to_schema_string();
            assert_eq!(ExactScalar::parse_exact(&txt).unwrap(), s, "{txt}");
        }
        // decimal strings parse exactly
        assert_eq!(
            ExactScalar::parse_exact("0.25").unwrap(),
            ExactScalar::ratio(1, 4)
        );
        assert_eq!(
            ExactScalar::parse_exact("-1.5").unwrap(),
            ExactScalar::ratio(-3, 2)
        );
    }

    #[test]
    fn bigf_promotion() {
        let x = ExactScalar::big(BigF::from_f64(0.5, 128));
        let y = ExactScalar::ratio(1, 2);
        let s = x.checked_sub(&y).unwrap();
        assert!(s.is_zero());
    }
}
