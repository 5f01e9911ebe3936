//! Arbitrary-precision binary floats.
//!
//! Thin wrapper over `astro-float` that fixes the rounding mode, keeps a
//! thread-local constants cache for trig/π, and guarantees values are finite
//! (NaN/Inf from any operation is a bug and panics immediately).

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

/// Minimum precision accepted anywhere, in bits.
pub const MIN_PRECISION: usize = 64;

/// Default working precision, in bits.
pub const DEFAULT_PRECISION: usize = 256;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// A finite arbitrary-precision binary float.
#[derive(Clone, Debug)]
pub struct BigF(BigFloat);

impl BigF {
    fn wrap(v: BigFloat) -> Self {
        assert!(!v.is_nan() && !v.is_inf(), "non-finite bigfloat result");
        BigF(v)
    }

    pub fn zero(prec: usize) -> Self {
        BigF(BigFloat::new(prec))
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        BigF(BigFloat::from_i64(v, prec))
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        assert!(v.is_finite());
        BigF(BigFloat::from_f64(v, prec))
    }

    /// Exact conversion; the result carries at least `bits(v)` of precision.
    pub fn from_bigint(v: &BigInt, prec: usize) -> Self {
        if v.is_zero() {
            return Self::zero(prec);
        }
        let digits = v.magnitude().to_u64_digits();
        let e = (digits.len() * 64) as astro_float::Exponent;
        let sign = if v.is_negative() { Sign::Neg } else { Sign::Pos };
        let mut f = BigFloat::from_words(&digits, sign, e);
        if f.mantissa_max_bit_len().unwrap_or(0) < prec {
            f.set_precision(prec, RM).expect("set_precision");
        }
        Self::wrap(f)
    }

    /// Rounds `v` to `prec` bits.
    pub fn from_ratio(v: &BigRational, prec: usize) -> Self {
        let n = Self::from_bigint(v.numer(), prec + 64);
        let d = Self::from_bigint(v.denom(), prec + 64);
        Self::wrap(n.0.div(&d.0, prec, RM))
    }

    pub fn pi(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)))
    }

    pub fn prec(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(MIN_PRECISION)
    }

    fn join(&self, rhs: &Self) -> usize {
        self.prec().max(rhs.prec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Self::wrap(self.0.add(&rhs.0, p, RM))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Self::wrap(self.0.sub(&rhs.0, p, RM))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        Self::wrap(self.0.mul(&rhs.0, p, RM))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "bigfloat division by zero");
        let p = self.join(rhs);
        Self::wrap(self.0.div(&rhs.0, p, RM))
    }

    pub fn neg(&self) -> Self {
        BigF(self.0.neg())
    }

    pub fn abs(&self) -> Self {
        let mut v = self.0.clone();
        v.set_sign(Sign::Pos);
        BigF(v)
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.0.powi(n, self.prec(), RM))
    }

    /// Square root. Arguments that are negative by a rounding hair are
    /// treated as zero; anything clearly negative panics.
    pub fn sqrt(&self) -> Self {
        if self.0.is_negative() {
            let mag = self.to_f64().abs();
            assert!(mag < 1e-30, "sqrt of negative value {mag}");
            return Self::zero(self.prec());
        }
        Self::wrap(self.0.sqrt(self.prec(), RM))
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.0.sin(self.prec(), RM, cc)))
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.0.cos(self.prec(), RM, cc)))
    }

    /// Inverse cosine; the argument is clamped to [-1, 1] to absorb rounding.
    pub fn acos(&self) -> Self {
        let p = self.prec();
        let one = BigFloat::from_i8(1, p);
        let m_one = BigFloat::from_i8(-1, p);
        let v = self.0.clamp(&m_one, &one);
        Self::wrap(with_consts(|cc| v.acos(p, RM, cc)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn cmp(&self, rhs: &Self) -> Ordering {
        match self.0.cmp(&rhs.0) {
            Some(c) if c < 0 => Ordering::Less,
            Some(c) if c > 0 => Ordering::Greater,
            Some(_) => Ordering::Equal,
            None => unreachable!("NaN in comparison"),
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let (words, _n, sign, e, _) = self.0.as_raw_parts().expect("finite value");
        let top = *words.last().unwrap() as f64;
        let next = if words.len() >= 2 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        // top word holds the leading bit, so frac is in [2^63, 2^64)
        let frac = top + next / 2f64.powi(64);
        let mut v = frac * 2f64.powi(e - 64);
        if sign == Sign::Neg {
            v = -v;
        }
        v
    }

    pub fn parse_decimal(s: &str, prec: usize) -> Result<Self, String> {
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, prec, RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(format!("invalid decimal number: {s:?}"));
        }
        Ok(BigF(v))
    }

    /// Decimal string that parses back to the same value at equal precision.
    pub fn to_decimal_string(&self) -> String {
        with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).expect("format")
    }

    /// 2^-k as a convenient tolerance constructor.
    pub fn pow2_neg(k: usize, prec: usize) -> Self {
        let mut v = BigFloat::from_i8(1, prec);
        v.set_exponent(1 - k as astro_float::Exponent);
        BigF(v)
    }
}

impl PartialEq for BigF {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for BigF {}

impl PartialOrd for BigF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for BigF {
    fn cmp(&self, other: &Self) -> Ordering {
        BigF::cmp(self, other)
    }
}

impl std::hash::Hash for BigF {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        if self.0.is_zero() {
            0u8.hash(state);
            return;
        }
        let (words, _n, sign, e, _) = self.0.as_raw_parts().expect("finite");
        (sign == Sign::Neg).hash(state);
        e.hash(state);
        // skip trailing zero words so equal values at different precisions
        // hash alike
        let start = words.iter().position(|w| *w != 0).unwrap_or(words.len());
        words[start..].hash(state);
    }
}

impl fmt::Display for BigF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}
