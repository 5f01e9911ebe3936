//! Jacobi polynomials with exact rational coefficients, and moment-driven
//! orthogonalization for arbitrary interval measures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::binomial;
use super::polynomial::RatPoly;
use crate::error::MathError;

/// An orthogonal polynomial for a Jacobi weight (1-x)^a (1+x)^b, normalized
/// so that P(1) = binomial(t + a, t).
#[derive(Clone, Debug)]
pub struct OrthoPoly {
    pub a: i64,
    pub b: i64,
    pub degree: usize,
    pub poly: RatPoly,
}

impl OrthoPoly {
    pub fn leading_coefficient(&self) -> BigRational {
        self.poly.leading()
    }
}

fn ri(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// P^{(a,b)}_t by the three-term recurrence.
pub fn jacobi_poly(a: i64, b: i64, t: usize) -> Result<OrthoPoly, MathError> {
    if a <= -1 || b <= -1 {
        return Err(MathError::InvalidArgument(format!(
            "jacobi parameters must exceed -1, got ({a}, {b})"
        )));
    }
    let ladder = jacobi_ladder(a, b, t);
    Ok(OrthoPoly { a, b, degree: t, poly: ladder[t].clone() })
}

/// P^{(a,b)}_0 .. P^{(a,b)}_t.
pub fn jacobi_ladder(a: i64, b: i64, t: usize) -> Vec<RatPoly> {
    let mut polys = Vec::with_capacity(t + 1);
    polys.push(RatPoly(vec![BigRational::one()]));
    if t == 0 {
        return polys;
    }
    // P_1 = ((a+b+2)x + (a-b)) / 2
    polys.push(RatPoly(vec![ri(a - b) / ri(2), ri(a + b + 2) / ri(2)]));
    for n in 2..=t as i64 {
        let s = a + b;
        let c0 = ri(2 * n) * ri(n + s) * ri(2 * n + s - 2);
        let c1 = ri(2 * n + s - 1) * ri(2 * n + s) * ri(2 * n + s - 2);
        let c2 = ri(2 * n + s - 1) * ri(a * a - b * b);
        let c3 = ri(2) * ri(n + a - 1) * ri(n + b - 1) * ri(2 * n + s);
        let prev = &polys[n as usize - 1];
        let prev2 = &polys[n as usize - 2];
        let term = prev
            .shift(1)
            .scale(&c1)
            .add(&prev.scale(&c2))
            .sub(&prev2.scale(&c3));
        polys.push(term.scale(&(BigRational::one() / c0)));
    }
    polys
}

/// Normalized monomial moments of the Jacobi weight (1-x)^a (1+x)^b on
/// [-1, 1]: count values m_0 = 1, m_1, ...
pub fn jacobi_interval_moments(a: i64, b: i64, count: usize) -> Vec<BigRational> {
    assert!(a >= 0 && b >= 0, "integer jacobi parameters >= 0");
    // raw_k = ∫ x^k (1-x)^a (1+x)^b dx; substitute x = 1 - 2u:
    // raw_k = 2^{a+b+1} Σ_j C(k,j) (-2)^j B(a+j+1, b+1)
    let beta = |p: i64, q: i64| -> BigRational {
        // B(p, q) = (p-1)!(q-1)!/(p+q-1)! for positive integers
        let mut num = BigInt::one();
        for i in 1..p {
            num *= i;
        }
        let mut num2 = BigInt::one();
        for i in 1..q {
            num2 *= i;
        }
        let mut den = BigInt::one();
        for i in 1..(p + q) {
            den *= i;
        }
        BigRational::new(num * num2, den)
    };
    let raw = |k: usize| -> BigRational {
        let mut acc = BigRational::zero();
        let mut sign = BigRational::one();
        for j in 0..=k {
            let c = BigRational::from(BigInt::from(binomial(k as u64, j as u64)))
                * BigRational::from(BigInt::from(2).pow(j as u32));
            acc += &sign * c * beta(a + j as i64 + 1, b + 1);
            sign = -sign;
        }
        acc
    };
    let total = raw(0);
    (0..count).map(|k| raw(k) / &total).collect()
}

/// Monic orthogonal polynomials p_0..p_t for a measure given by its
/// normalized moments, via the Stieltjes three-term recurrence. Also returns
/// the exact squared norms ⟨p_k, p_k⟩.
pub fn stieltjes_monic(
    moments: &[BigRational],
    t: usize,
) -> Result<(Vec<RatPoly>, Vec<BigRational>), MathError> {
    assert!(moments.len() >= 2 * t + 1, "need 2t+1 moments");
    let inner = |p: &RatPoly, q: &RatPoly| -> BigRational {
        p.mul(q).integrate_against(moments)
    };
    let mut polys: Vec<RatPoly> = vec![RatPoly(vec![BigRational::one()])];
    let mut norms: Vec<BigRational> = vec![moments[0].clone()];
    for k in 0..t {
        let pk = &polys[k];
        let nk = &norms[k];
        if nk.is_zero() {
            return Err(MathError::DegenerateMoments(k));
        }
        let alpha = inner(&pk.shift(1), pk) / nk;
        let mut next = pk.shift(1).sub(&pk.scale(&alpha));
        if k > 0 {
            let beta = nk / &norms[k - 1];
            next = next.sub(&polys[k - 1].scale(&beta));
        }
        let nn = inner(&next, &next);
        if nn.is_zero() && k + 1 <= t {
            return Err(MathError::DegenerateMoments(k + 1));
        }
        norms.push(nn);
        polys.push(next);
    }
    Ok((polys, norms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn legendre_degree_1_is_x() {
        let p = jacobi_poly(0, 0, 1).unwrap();
        assert_eq!(p.poly, RatPoly(vec![r(0, 1), r(1, 1)]));
    }

    #[test]
    fn jacobi_1_0_degree_1() {
        // (3x+1)/2, zero at -1/3
        let p = jacobi_poly(1, 0, 1).unwrap();
        assert_eq!(p.poly, RatPoly(vec![r(1, 2), r(3, 2)]));
        assert!(p.poly.eval_rational(&r(-1, 3)).is_zero());
    }

    #[test]
    fn value_at_one_is_binomial() {
        for (a, t) in [(2i64, 3usize), (4, 5), (7, 2), (1, 8)] {
            let p = jacobi_poly(a, 0, t).unwrap();
            let v = p.poly.eval_rational(&BigRational::one());
            assert_eq!(
                v,
                BigRational::from(BigInt::from(binomial(t as u64 + a as u64, t as u64) as i64))
            );
        }
    }

    #[test]
    fn orthogonality_under_jacobi_weight() {
        for (a, b) in [(0i64, 0i64), (1, 0), (3, 0), (2, 1)] {
            let tmax = 6;
            let polys = jacobi_ladder(a, b, tmax);
            let moments = jacobi_interval_moments(a, b, 2 * tmax + 1);
            for s in 0..tmax {
                for t in (s + 1)..=tmax {
                    let ip = polys[s].mul(&polys[t]).integrate_against(&moments);
                    assert!(ip.is_zero(), "({a},{b}) degrees {s},{t} not orthogonal");
                }
            }
        }
    }

    #[test]
    fn stieltjes_matches_jacobi_up_to_scale() {
        let (a, b) = (2i64, 0i64);
        let moments = jacobi_interval_moments(a, b, 13);
        let (monic, norms) = stieltjes_monic(&moments, 6).unwrap();
        let jac = jacobi_ladder(a, b, 6);
        for t in 0..=6 {
            let lead = jac[t].leading();
            assert_eq!(jac[t].scale(&(BigRational::one() / lead)), monic[t]);
            assert!(!norms[t].is_zero());
        }
    }

    #[test]
    fn legendre_moments() {
        let m = jacobi_interval_moments(0, 0, 6);
        assert_eq!(m[0], r(1, 1));
        assert_eq!(m[1], r(0, 1));
        assert_eq!(m[2], r(1, 3));
        assert_eq!(m[3], r(0, 1));
        assert_eq!(m[4], r(1, 5));
    }
}
