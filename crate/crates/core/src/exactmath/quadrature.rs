//! One-dimensional Gaussian, Gauss-Radau, and Gauss-Lobatto quadrature for
//! interval measures given by exact moment sequences.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bigfloat::BigF;
use super::orthopoly::{jacobi_interval_moments, stieltjes_monic};
use super::polynomial::{FloatPoly, RatPoly};
use super::roots::ladder_zeros;
use crate::error::MathError;

/// A normalized measure on [-1, 1] described by its monomial moments.
#[derive(Clone, Debug)]
pub struct IntervalMeasure {
    /// m\[k\] = ∫ x^k dμ, with m\[0\] = 1.
    pub moments: Vec<BigRational>,
    /// Jacobi parameters when the measure is (1-x)^a (1+x)^b, for reporting.
    pub jacobi: Option<(i64, i64)>,
}

impl IntervalMeasure {
    pub fn jacobi(a: i64, b: i64, moment_count: usize) -> Self {
        IntervalMeasure {
            moments: jacobi_interval_moments(a, b, moment_count),
            jacobi: Some((a, b)),
        }
    }

    pub fn uniform(moment_count: usize) -> Self {
        Self::jacobi(0, 0, moment_count)
    }

    pub fn from_moments(moments: Vec<BigRational>) -> Result<Self, MathError> {
        if moments.is_empty() || !moments[0].is_one() {
            return Err(MathError::InvalidArgument(
                "moment sequence must start with m_0 = 1".into(),
            ));
        }
        Ok(IntervalMeasure { moments, jacobi: None })
    }

    pub fn moment(&self, k: usize) -> &BigRational {
        &self.moments[k]
    }

    /// Measure with density multiplied by (1+x), un-normalized.
    fn tilt_up(&self, count: usize) -> Vec<BigRational> {
        (0..count)
            .map(|k| &self.moments[k] + &self.moments[k + 1])
            .collect()
    }

    /// Density multiplied by (1 - x^2), un-normalized.
    fn tilt_both(&self, count: usize) -> Vec<BigRational> {
        (0..count)
            .map(|k| &self.moments[k] - &self.moments[k + 2])
            .collect()
    }
}

/// Nodes and weights of a quadrature rule, with its guaranteed exactness
/// degree.
#[derive(Clone, Debug)]
pub struct Quadrature1d {
    pub nodes: Vec<BigF>,
    pub weights: Vec<BigF>,
    pub exact_degree: u64,
    pub precision_bits: usize,
}

pub enum EndpointRule {
    Lobatto,
    Radau,
}

/// Gaussian t-point quadrature: exact for degree 2t-1, nodes are the zeros
/// of the t-th orthogonal polynomial, weights from the Christoffel formula
/// w_k = -A_{t+1} ||p_t||^2 / (A_t p_t'(x_k) p_{t+1}(x_k)) with monic p.
pub fn gauss_quadrature(
    measure: &IntervalMeasure,
    t: usize,
    precision_bits: usize,
) -> Result<Quadrature1d, MathError> {
    if t == 0 {
        return Err(MathError::InvalidArgument("t >= 1 required".into()));
    }
    if measure.moments.len() < 2 * t + 3 {
        return Err(MathError::InvalidArgument(format!(
            "need {} moments, have {}",
            2 * t + 3,
            measure.moments.len()
        )));
    }
    let (monic, norms) = stieltjes_monic(&measure.moments, t + 1)?;
    let nodes = ladder_zeros(&monic[..=t], precision_bits + 32)?;
    let wp = nodes[0].prec();
    let dpt = prepared(&monic[t].derivative(), wp);
    let pt1 = prepared(&monic[t + 1], wp);
    let norm_t = BigF::from_ratio(&norms[t], wp);
    let mut weights = Vec::with_capacity(t);
    for x in &nodes {
        let w = norm_t.div(&dpt.eval(x).mul(&pt1.eval(x))).neg();
        if !w.is_zero() && w.is_negative() {
            return Err(MathError::ConvergenceFailure(weights.len()));
        }
        weights.push(w);
    }
    Ok(Quadrature1d {
        nodes,
        weights,
        exact_degree: 2 * t as u64 - 1,
        precision_bits,
    })
}

/// Gauss-Lobatto (both endpoints, t odd, (t+3)/2 points) or Gauss-Radau
/// (left endpoint, t even, (t+2)/2 points) rule exact to degree t.
pub fn lobatto_radau_quadrature(
    measure: &IntervalMeasure,
    t: u64,
    kind: EndpointRule,
    precision_bits: usize,
) -> Result<Quadrature1d, MathError> {
    let (fixed, interior_count): (Vec<i64>, usize) = match kind {
        EndpointRule::Lobatto => {
            if t % 2 == 0 {
                return Err(MathError::InvalidArgument(
                    "lobatto requires odd degree t".into(),
                ));
            }
            (vec![-1, 1], (t as usize + 3) / 2 - 2)
        }
        EndpointRule::Radau => {
            if t % 2 != 0 {
                return Err(MathError::InvalidArgument(
                    "radau requires even degree t".into(),
                ));
            }
            (vec![-1], (t as usize + 2) / 2 - 1)
        }
    };
    let n_points = fixed.len() + interior_count;
    if measure.moments.len() < 2 * n_points + 3 {
        return Err(MathError::InvalidArgument("not enough moments".into()));
    }
    let tilted = match kind {
        EndpointRule::Lobatto => measure.tilt_both(2 * interior_count + 3),
        EndpointRule::Radau => measure.tilt_up(2 * interior_count + 3),
    };
    // normalize the tilted sequence so stieltjes sees m_0 = 1
    let scale = tilted[0].clone();
    let tilted: Vec<BigRational> = tilted.into_iter().map(|m| m / &scale).collect();
    let interior = if interior_count > 0 {
        let (monic, _) = stieltjes_monic(&tilted, interior_count)?;
        ladder_zeros(&monic[..=interior_count], precision_bits + 32)?
    } else {
        Vec::new()
    };
    let wp = interior
        .first()
        .map(|z| z.prec())
        .unwrap_or(precision_bits + 64);
    let mut nodes: Vec<BigF> = Vec::with_capacity(n_points);
    if fixed.contains(&-1) {
        nodes.push(BigF::from_i64(-1, wp));
    }
    nodes.extend(interior.iter().cloned());
    if fixed.contains(&1) {
        nodes.push(BigF::from_i64(1, wp));
    }
    let weights = solve_vandermonde(&nodes, &measure.moments, wp)?;
    for w in &weights {
        if !w.is_zero() && w.is_negative() {
            return Err(MathError::ConvergenceFailure(0));
        }
    }
    Ok(Quadrature1d {
        nodes,
        weights,
        exact_degree: t,
        precision_bits,
    })
}

fn prepared(p: &RatPoly, prec: usize) -> FloatPoly {
    FloatPoly {
        coeffs: p.0.iter().map(|c| BigF::from_ratio(c, prec)).collect(),
    }
}

/// Solves V w = m for weights, where V_{k,j} = x_j^k.
fn solve_vandermonde(
    nodes: &[BigF],
    moments: &[BigRational],
    prec: usize,
) -> Result<Vec<BigF>, MathError> {
    let n = nodes.len();
    let mut a = vec![vec![BigF::zero(prec); n + 1]; n];
    for (k, row) in a.iter_mut().enumerate() {
        for (j, x) in nodes.iter().enumerate() {
            row[j] = x.powi(k);
        }
        row[n] = BigF::from_ratio(&moments[k], prec);
    }
    // gaussian elimination with partial pivoting
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()))
            .unwrap();
        if a[piv][col].is_zero() {
            return Err(MathError::DegenerateMoments(col));
        }
        a.swap(col, piv);
        for row in (col + 1)..n {
            let f = a[row][col].div(&a[col][col]);
            for k in col..=n {
                a[row][k] = a[row][k].sub(&f.mul(&a[col][k]));
            }
        }
    }
    let mut w = vec![BigF::zero(prec); n];
    for row in (0..n).rev() {
        let mut acc = a[row][n].clone();
        for k in (row + 1)..n {
            acc = acc.sub(&a[row][k].mul(&w[k]));
        }
        w[row] = acc.div(&a[row][row]);
    }
    Ok(w)
}

fn normalize_precision(q: Quadrature1d) -> Quadrature1d {
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn check_exactness(q: &Quadrature1d, measure: &IntervalMeasure, tol_bits: usize) {
        let prec = q.nodes.first().map(|n| n.prec()).unwrap_or(128);
        let tol = BigF::pow2_neg(tol_bits, prec);
        for k in 0..=q.exact_degree as usize {
            let mut acc = BigF::zero(prec);
            for (x, w) in q.nodes.iter().zip(&q.weights) {
                acc = acc.add(&w.mul(&x.powi(k)));
            }
            let want = BigF::from_ratio(measure.moment(k), prec);
            assert!(
                acc.sub(&want).abs() < tol,
                "degree {k} moment off: {} vs {}",
                acc.to_f64(),
                want.to_f64()
            );
        }
    }

    #[test]
    fn gauss_1_point_uniform() {
        let m = IntervalMeasure::uniform(8);
        let q = gauss_quadrature(&m, 1, 256).unwrap();
        assert_eq!(q.nodes.len(), 1);
        assert!(q.nodes[0].abs().to_f64() < 1e-70);
        assert!((q.weights[0].to_f64() - 1.0).abs() < 1e-70);
    }

    #[test]
    fn gauss_2_point_uniform() {
        // the four moment equations give nodes ±1/√3 and weights 1/2
        let m = IntervalMeasure::uniform(10);
        let q = gauss_quadrature(&m, 2, 256).unwrap();
        let w = 1.0 / 3f64.sqrt();
        assert!((q.nodes[0].to_f64() + w).abs() < 1e-15);
        assert!((q.nodes[1].to_f64() - w).abs() < 1e-15);
        assert!((q.weights[0].to_f64() - 0.5).abs() < 1e-30);
        assert!((q.weights[1].to_f64() - 0.5).abs() < 1e-30);
        check_exactness(&q, &m, 128);
    }

    #[test]
    fn gauss_exactness_various_measures() {
        for (a, b) in [(0i64, 0i64), (3, 0), (5, 0), (2, 2)] {
            for t in 1..=8usize {
                let m = IntervalMeasure::jacobi(a, b, 2 * t + 4);
                let q = gauss_quadrature(&m, t, 256).unwrap();
                check_exactness(&q, &m, 120);
                assert!(q.weights.iter().all(|w| !w.is_negative()));
            }
        }
    }

    #[test]
    fn simpson_is_lobatto_t3() {
        let m = IntervalMeasure::uniform(16);
        let q = lobatto_radau_quadrature(&m, 3, EndpointRule::Lobatto, 256).unwrap();
        assert_eq!(q.nodes.len(), 3);
        assert!((q.nodes[0].to_f64() + 1.0).abs() < 1e-70);
        assert!(q.nodes[1].abs().to_f64() < 1e-60);
        assert!((q.nodes[2].to_f64() - 1.0).abs() < 1e-70);
        // weights 1/6, 2/3, 1/6
        assert!((q.weights[0].to_f64() - 1.0 / 6.0).abs() < 1e-30);
        assert!((q.weights[1].to_f64() - 2.0 / 3.0).abs() < 1e-30);
        assert!((q.weights[2].to_f64() - 1.0 / 6.0).abs() < 1e-30);
        check_exactness(&q, &m, 128);
    }

    #[test]
    fn lobatto_t5_has_4_points_at_pm_inv_sqrt5() {
        let m = IntervalMeasure::uniform(16);
        let q = lobatto_radau_quadrature(&m, 5, EndpointRule::Lobatto, 256).unwrap();
        assert_eq!(q.nodes.len(), 4);
        let z = 1.0 / 5f64.sqrt();
        assert!((q.nodes[1].to_f64() + z).abs() < 1e-15);
        assert!((q.nodes[2].to_f64() - z).abs() < 1e-15);
        check_exactness(&q, &m, 128);
        // degree 6 must fail: x^6 moment is 1/7
        let prec = q.nodes[0].prec();
        let mut acc = BigF::zero(prec);
        for (x, w) in q.nodes.iter().zip(&q.weights) {
            acc = acc.add(&w.mul(&x.powi(6)));
        }
        let want = BigF::from_ratio(&r(1, 7), prec);
        assert!(acc.sub(&want).abs().to_f64() > 1e-4);
    }

    #[test]
    fn radau_t2_two_points() {
        let m = IntervalMeasure::uniform(16);
        let q = lobatto_radau_quadrature(&m, 2, EndpointRule::Radau, 256).unwrap();
        assert_eq!(q.nodes.len(), 2);
        assert!((q.nodes[0].to_f64() + 1.0).abs() < 1e-70);
        check_exactness(&q, &m, 128);
    }

    #[test]
    fn radau_t4_on_tilted_measure() {
        let m = IntervalMeasure::jacobi(1, 0, 20);
        let q = lobatto_radau_quadrature(&m, 4, EndpointRule::Radau, 256).unwrap();
        assert_eq!(q.nodes.len(), 3);
        check_exactness(&q, &m, 120);
    }

    #[test]
    fn tabulated_moments_accepted() {
        // uniform measure entered as raw tabulated moments
        let moments: Vec<BigRational> = (0..12)
            .map(|k| {
                if k % 2 == 0 {
                    r(1, k as i64 + 1)
                } else {
                    r(0, 1)
                }
            })
            .collect();
        let m = IntervalMeasure::from_moments(moments).unwrap();
        let q = gauss_quadrature(&m, 3, 192).unwrap();
        check_exactness(&q, &m, 90);
    }

    #[test]
    fn degenerate_moments_rejected() {
        // a one-atom measure: moments of δ_0 are 1, 0, 0, ...
        let mut moments = vec![r(0, 1); 9];
        moments[0] = r(1, 1);
        let m = IntervalMeasure::from_moments(moments).unwrap();
        assert!(matches!(
            gauss_quadrature(&m, 2, 128),
            Err(MathError::DegenerateMoments(_))
        ));
    }
}
