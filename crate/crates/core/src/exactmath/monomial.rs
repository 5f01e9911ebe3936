//! Exponent multi-indices for monomials and Fourier characters.

use serde::{Deserialize, Serialize};

/// A monomial exponent vector, or a Fourier index on a torus (entries may
/// then be negative; the degree is the ℓ1 norm).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Total degree: ℓ1 norm, which for monomials is the entry sum.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    pub fn is_monomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|&e| e % 2 == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

/// Optional filter for [`enumerate_monomials`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityFilter {
    AllEven,
}

/// All exponent vectors with `dim` non-negative entries of total degree at
/// most `max_degree`, in lexicographic order. The unfiltered count is
/// binomial(dim + max_degree, dim).
pub fn enumerate_monomials(
    dim: usize,
    max_degree: u64,
    parity: Option<ParityFilter>,
) -> Vec<ExponentVector> {
    assert!(dim >= 1);
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    rec_monomials(&mut out, &mut cur, 0, max_degree, parity);
    out
}

fn rec_monomials(
    out: &mut Vec<ExponentVector>,
    cur: &mut Vec<i64>,
    pos: usize,
    budget: u64,
    parity: Option<ParityFilter>,
) {
    if pos == cur.len() {
        out.push(ExponentVector(cur.clone()));
        return;
    }
    let step = match parity {
        Some(ParityFilter::AllEven) => 2,
        None => 1,
    };
    let mut e = 0u64;
    while e <= budget {
        cur[pos] = e as i64;
        rec_monomials(out, cur, pos + 1, budget - e, parity);
        e += step;
    }
    cur[pos] = 0;
}

/// All exponent vectors of total degree exactly `degree`.
pub fn monomials_of_degree(dim: usize, degree: u64, parity: Option<ParityFilter>) -> Vec<ExponentVector> {
    enumerate_monomials(dim, degree, parity)
        .into_iter()
        .filter(|m| m.degree() == degree)
        .collect()
}

/// All Fourier indices k in Z^dim with ℓ1 norm at most `max_norm`.
pub fn enumerate_fourier(dim: usize, max_norm: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    rec_fourier(&mut out, &mut cur, 0, max_norm);
    out
}

/// Fourier indices of ℓ1 norm exactly `norm`.
pub fn fourier_of_norm(dim: usize, norm: u64) -> Vec<ExponentVector> {
    enumerate_fourier(dim, norm)
        .into_iter()
        .filter(|k| k.degree() == norm)
        .collect()
}

fn rec_fourier(out: &mut Vec<ExponentVector>, cur: &mut Vec<i64>, pos: usize, budget: u64) {
    if pos == cur.len() {
        out.push(ExponentVector(cur.clone()));
        return;
    }
    for e in -(budget as i64)..=(budget as i64) {
        cur[pos] = e;
        rec_fourier(out, cur, pos + 1, budget - e.unsigned_abs());
    }
    cur[pos] = 0;
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
