//! Dense univariate polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bigfloat::BigF;

/// Coefficients in ascending order; the leading coefficient is nonzero
/// except for the zero polynomial `[]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            RatPoly(vec![c])
        }
    }

    pub fn x() -> Self {
        RatPoly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    fn trim(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        RatPoly(v)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            v[i] += c;
        }
        Self::trim(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::trim(v)
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); k];
        v.extend(self.0.iter().cloned());
        RatPoly(v)
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        RatPoly(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Linear functional Σ c_k m_k against a moment sequence: the integral
    /// of the polynomial when `m` holds the monomial moments.
    pub fn integrate_against(&self, m: &[BigRational]) -> BigRational {
        assert!(m.len() > self.degree() || self.is_zero(), "not enough moments");
        self.0
            .iter()
            .zip(m)
            .map(|(c, mk)| c * mk)
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Clears denominators: returns integer coefficients of a scalar
    /// multiple with the same roots, plus the bit size of the largest one.
    pub fn to_integer_scaled(&self) -> (Vec<BigInt>, u64) {
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
            .collect();
        let bits = ints.iter().map(|c| c.abs().bits()).max().unwrap_or(0);
        (ints, bits)
    }
}

/// Integer-coefficient evaluation ladder for fast sign-accurate Horner at
/// bigfloat points.
pub struct FloatPoly {
    pub coeffs: Vec<BigF>,
}

impl FloatPoly {
    /// Converts exactly; `prec` must be at least the coefficient bit size
    /// for the conversion to be lossless.
    pub fn from_integers(ints: &[BigInt], prec: usize) -> Self {
        FloatPoly {
            coeffs: ints.iter().map(|c| BigF::from_bigint(c, prec)).collect(),
        }
    }

    pub fn eval(&self, x: &BigF) -> BigF {
        let mut acc = BigF::zero(x.prec());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn poly_algebra() {
        // (1 + x)(1 - x) = 1 - x^2
        let p = RatPoly(vec![r(1, 1), r(1, 1)]);
        let q = RatPoly(vec![r(1, 1), r(-1, 1)]);
        let prod = p.mul(&q);
        assert_eq!(prod, RatPoly(vec![r(1, 1), r(0, 1), r(-1, 1)]));
        assert_eq!(prod.eval_rational(&r(2, 1)), r(-3, 1));
        assert_eq!(prod.derivative(), RatPoly(vec![r(0, 1), r(-2, 1)]));
    }

    #[test]
    fn integer_scaling_preserves_roots() {
        let p = RatPoly(vec![r(-1, 6), r(1, 4), r(1, 3)]);
        let (ints, _) = p.to_integer_scaled();
        // 12 * p = -2 + 3x + 4x^2
        assert_eq!(
            ints,
            vec![BigInt::from(-2), BigInt::from(3), BigInt::from(4)]
        );
    }
}
