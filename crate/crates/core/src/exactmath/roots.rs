//! Real-zero extraction for ladders of orthogonal polynomials.
//!
//! Zeros of consecutive orthogonal polynomials strictly interlace, so the
//! zeros of degree k bracket those of degree k+1. Each zero is refined by
//! bisection followed by safeguarded Newton steps, evaluating the
//! denominator-cleared integer polynomial at guarded precision.

use super::bigfloat::BigF;
use super::orthopoly::jacobi_ladder;
use super::polynomial::{FloatPoly, RatPoly};
use crate::error::MathError;

struct PreparedPoly {
    f: FloatPoly,
    df: FloatPoly,
}

fn prepare(p: &RatPoly, work_prec: usize) -> PreparedPoly {
    let (ints, _) = p.to_integer_scaled();
    let d_ints: Vec<num_bigint::BigInt> = {
        let rp = RatPoly(
            ints.iter()
                .map(|c| num_rational::BigRational::from(c.clone()))
                .collect(),
        );
        rp.derivative().to_integer_scaled().0
    };
    PreparedPoly {
        f: FloatPoly::from_integers(&ints, work_prec),
        df: FloatPoly::from_integers(&d_ints, work_prec),
    }
}

fn work_precision(ladder: &[RatPoly], target: usize) -> usize {
    let coeff_bits = ladder
        .iter()
        .map(|p| p.to_integer_scaled().1)
        .max()
        .unwrap_or(0) as usize;
    target + coeff_bits + 96
}

fn sign_of(v: &BigF) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// One zero of `p` in (lo, hi), where the signs at the ends differ.
fn refine(
    p: &PreparedPoly,
    mut lo: BigF,
    mut hi: BigF,
    target_bits: usize,
    index: usize,
) -> Result<BigF, MathError> {
    let mut slo = sign_of(&p.f.eval(&lo));
    let shi = sign_of(&p.f.eval(&hi));
    if slo == 0 {
        return Ok(lo);
    }
    if shi == 0 {
        return Ok(hi);
    }
    if slo == shi {
        return Err(MathError::ConvergenceFailure(index));
    }
    let tol = BigF::pow2_neg(target_bits + 8, lo.prec());
    let two = BigF::from_i64(2, lo.prec());

    // coarse bisection to secure Newton's basin
    for _ in 0..40 {
        if hi.sub(&lo) < tol {
            break;
        }
        let mid = lo.add(&hi).div(&two);
        let sm = sign_of(&p.f.eval(&mid));
        if sm == 0 {
            return Ok(mid);
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
        let _ = slo; // slo unchanged by construction
    }

    // safeguarded Newton
    let mut x = lo.add(&hi).div(&two);
    for _ in 0..10_000 {
        if hi.sub(&lo) < tol {
            return Ok(lo.add(&hi).div(&two));
        }
        let fx = p.f.eval(&x);
        let sx = sign_of(&fx);
        if sx == 0 {
            return Ok(x);
        }
        if sx == slo {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        let dfx = p.df.eval(&x);
        let mut next = if dfx.is_zero() {
            lo.add(&hi).div(&two)
        } else {
            let step = fx.div(&dfx);
            let cand = x.sub(&step);
            if cand <= lo || cand >= hi {
                lo.add(&hi).div(&two)
            } else {
                if step.abs() < tol {
                    return Ok(cand);
                }
                cand
            }
        };
        std::mem::swap(&mut x, &mut next);
    }
    Err(MathError::ConvergenceFailure(index))
}

/// Zeros of the last polynomial of an interlacing ladder, strictly
/// increasing, each within 2^-(target_bits - 8). The ladder entries must be
/// the orthogonal polynomials of one interval measure on [-1, 1], degree 0
/// upward.
pub fn ladder_zeros(ladder: &[RatPoly], target_bits: usize) -> Result<Vec<BigF>, MathError> {
    let t = ladder.len() - 1;
    let wp = work_precision(ladder, target_bits);
    let lo_end = BigF::from_i64(-1, wp);
    let hi_end = BigF::from_i64(1, wp);
    let mut zeros: Vec<BigF> = Vec::new();
    for k in 1..=t {
        let p = prepare(&ladder[k], wp);
        let mut next = Vec::with_capacity(k);
        for i in 0..k {
            let lo = if i == 0 { lo_end.clone() } else { zeros[i - 1].clone() };
            let hi = if i == k - 1 { hi_end.clone() } else { zeros[i].clone() };
            next.push(refine(&p, lo, hi, target_bits, i)?);
        }
        zeros = next;
    }
    Ok(zeros)
}

/// Only the highest zero of each ladder element, returning the one for the
/// last. Cheaper than [`ladder_zeros`] for large degree.
pub fn ladder_top_zero(ladder: &[RatPoly], target_bits: usize) -> Result<BigF, MathError> {
    let t = ladder.len() - 1;
    assert!(t >= 1);
    let wp = work_precision(ladder, target_bits);
    let hi_end = BigF::from_i64(1, wp);
    let mut top = BigF::from_i64(-1, wp);
    for k in 1..=t {
        let p = prepare(&ladder[k], wp);
        top = refine(&p, top, hi_end.clone(), target_bits, k)?;
    }
    Ok(top)
}

/// All zeros of the Jacobi polynomial P^{(a,b)}_t, each correct to
/// 2^-(precision_bits - 8).
pub fn jacobi_zeros(
    a: i64,
    b: i64,
    t: usize,
    precision_bits: usize,
) -> Result<Vec<BigF>, MathError> {
    if t < 1 {
        return Err(MathError::InvalidArgument("t >= 1 required".into()));
    }
    if a <= -1 || b <= -1 {
        return Err(MathError::InvalidArgument("jacobi parameters".into()));
    }
    ladder_zeros(&jacobi_ladder(a, b, t), precision_bits)
}

/// The highest zero of P^{(a,b)}_t.
pub fn jacobi_top_zero(
    a: i64,
    b: i64,
    t: usize,
    precision_bits: usize,
) -> Result<BigF, MathError> {
    if t < 1 {
        return Err(MathError::InvalidArgument("t >= 1 required".into()));
    }
    ladder_top_zero(&jacobi_ladder(a, b, t), precision_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &BigF, want: f64, tol: f64) -> bool {
        (x.to_f64() - want).abs() < tol
    }

    #[test]
    fn legendre_2_zeros() {
        let z = jacobi_zeros(0, 0, 2, 256).unwrap();
        let w = 1.0 / 3f64.sqrt();
        assert_eq!(z.len(), 2);
        assert!(close(&z[0], -w, 1e-15));
        assert!(close(&z[1], w, 1e-15));
    }

    #[test]
    fn jacobi_1_0_linear_zero() {
        let z = jacobi_zeros(1, 0, 1, 256).unwrap();
        assert_eq!(z.len(), 1);
        assert!(close(&z[0], -1.0 / 3.0, 1e-30));
    }

    #[test]
    fn legendre_3_zeros() {
        let z = jacobi_zeros(0, 0, 3, 256).unwrap();
        let w = (3f64 / 5.0).sqrt();
        assert!(close(&z[0], -w, 1e-15));
        assert!(z[1].is_zero() || z[1].abs().to_f64() < 1e-70);
        assert!(close(&z[2], w, 1e-15));
    }

    #[test]
    fn zeros_interlace() {
        for (a, b) in [(0i64, 0i64), (4, 0), (2, 1)] {
            let mut prev = jacobi_zeros(a, b, 1, 128).unwrap();
            for t in 2..=9 {
                let cur = jacobi_zeros(a, b, t, 128).unwrap();
                for i in 0..prev.len() {
                    assert!(cur[i] < prev[i] && prev[i] < cur[i + 1], "interlacing ({a},{b}) t={t}");
                }
                prev = cur;
            }
        }
    }

    #[test]
    fn top_zero_agrees_with_full_ladder() {
        let z = jacobi_zeros(3, 0, 8, 192).unwrap();
        let top = jacobi_top_zero(3, 0, 8, 192).unwrap();
        assert!(z[7].sub(&top).abs() < BigF::pow2_neg(150, 192));
    }

    #[test]
    fn high_precision_residual() {
        // evaluate P back at the computed zero: should vanish to ~precision
        let t = 12;
        let ladder = jacobi_ladder(2, 0, t);
        let zeros = ladder_zeros(&ladder, 256).unwrap();
        let (ints, _) = ladder[t].to_integer_scaled();
        let fp = FloatPoly::from_integers(&ints, 512);
        for z in &zeros {
            let v = fp.eval(z);
            // |P'| near the zero is of coefficient scale, so the residual
            // reflects the zero accuracy
            let scale = BigF::from_bigint(
                ints.iter().max_by_key(|c| num_traits::Signed::abs(*c).bits()).unwrap(),
                512,
            );
            assert!(v.abs().div(&scale.abs()) < BigF::pow2_neg(200, 512));
        }
    }
}
