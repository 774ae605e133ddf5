//! Interpolant matrices `A^(k)` and `Ã^(k)`, the transition matrix `M_k`,
//! Hasse-derivative jet matrices and osculating spaces.
//!
//! Rows of all these matrices are indexed by multi-indices in degree order
//! and, within a degree, lexicographically descending: `(2,0), (1,1), (0,2)`.
//! The first `1 + m` rows (degrees 0 and 1) are the configuration itself.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::elimination::{rank, rowspan_equal, rref};
use crate::exact::matrix::Matrix;
use crate::toric::{rat_pow, Configuration, TorusPoint};
use crate::{Int, IntMatrix, Rat, RatMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Multi-indices of length `m` and degree exactly `deg`, lexicographically
/// descending.
fn indices_of_degree(m: usize, deg: u32) -> Vec<MultiIndex> {
    fn rec(m: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == m {
            prefix.push(deg);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=deg).rev() {
            prefix.push(first);
            rec(m, deg - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if deg == 0 {
            out.push(MultiIndex(vec![]));
        }
        return out;
    }
    rec(m, deg, &mut Vec::new(), &mut out);
    out
}

/// Extension indices: `2 <= |i| <= k`.
pub fn multi_indices(m: usize, k: usize) -> Vec<MultiIndex> {
    (2..=k as u32)
        .flat_map(|deg| indices_of_degree(m, deg))
        .collect()
}

/// All indices with `|i| <= k`; `binom(m + k, k)` of them.
pub fn all_multi_indices(m: usize, k: usize) -> Vec<MultiIndex> {
    (0..=k as u32)
        .flat_map(|deg| indices_of_degree(m, deg))
        .collect()
}

/// `binom(a, i)` for any integer `a`: the falling factorial over `i!`.
pub fn binomial(a: &Int, i: u32) -> Int {
    let mut num = Int::one();
    let mut den = Int::one();
    for j in 0..i {
        num *= a - Int::from(j);
        den *= Int::from(j + 1);
    }
    num / den
}

/// Exponent rows of an all-ones-first matrix.
fn exponent_block(b: &IntMatrix) -> Result<IntMatrix> {
    if b.nrows() == 0 || !b.row(0).iter().all(One::is_one) {
        return Err(Error::NotNormalized);
    }
    Ok(b.select_rows(&(1..b.nrows()).collect::<Vec<_>>()))
}

fn check_order(k: usize) -> Result<()> {
    if k < 1 {
        Err(Error::InvalidOrder(k))
    } else {
        Ok(())
    }
}

fn extension(a: &Configuration, k: usize, entry: impl Fn(&Int, u32) -> Int) -> Result<IntMatrix> {
    check_order(k)?;
    let exps = a.exponent_rows()?;
    let mut rows = a.matrix().to_rows();
    for i in multi_indices(exps.nrows(), k) {
        rows.push(
            (0..exps.ncols())
                .map(|j| {
                    i.entries()
                        .iter()
                        .enumerate()
                        .fold(Int::one(), |acc, (r, &e)| acc * entry(exps.get(r, j), e))
                })
                .collect(),
        );
    }
    Matrix::from_rows(rows)
}

/// `A^(k)`: `A` above the rows `binom(a_j, i)` for `2 <= |i| <= k`.
/// The exponent count `m` is the number of rows below the all-ones row.
pub fn build_ak(a: &Configuration, k: usize) -> Result<IntMatrix> {
    let exps = a.exponent_rows()?;
    for r in 0..exps.nrows() {
        for c in 0..exps.ncols() {
            if exps.get(r, c).is_negative() {
                return Err(Error::NegativeExponent {
                    row: r + 1,
                    col: c,
                    value: exps.get(r, c).to_string(),
                });
            }
        }
    }
    extension(a, k, binomial)
}

/// `Ã^(k)`: `A` above the rows `a_j^i` for `2 <= |i| <= k`.
pub fn build_ak_tilde(a: &Configuration, k: usize) -> Result<IntMatrix> {
    extension(a, k, |x, e| num_traits::pow(x.clone(), e as usize))
}

/// Stirling numbers of the second kind `S(n, 0..=n)`.
fn stirling2_row(n: u32) -> Vec<Int> {
    let mut row = vec![Int::one()];
    for i in 1..=n {
        let mut next = vec![Int::zero(); i as usize + 1];
        for (q, s) in row.iter().enumerate() {
            next[q] += Int::from(q) * s;
            next[q + 1] += s;
        }
        next[0] = Int::zero();
        row = next;
    }
    row
}

/// `M_k` with `Ã^(k) = M_k A^(k)`, indexed by all multi-indices `|i| <= k`.
/// Entry `(i, q)` is `prod_r S(i_r, q_r) q_r!`, from
/// `a^p = sum_q S(p, q) q! binom(a, q)`.
pub fn transition_matrix(m: usize, k: usize) -> Result<IntMatrix> {
    check_order(k)?;
    let idx = all_multi_indices(m, k);
    let stirling: Vec<Vec<Int>> = (0..=k as u32).map(stirling2_row).collect();
    let n = idx.len();
    let mut data = Vec::with_capacity(n * n);
    for i in &idx {
        for q in &idx {
            let mut v = Int::one();
            for (&ir, &qr) in i.entries().iter().zip(q.entries()) {
                if qr > ir {
                    v = Int::zero();
                    break;
                }
                v *= &stirling[ir as usize][qr as usize] * factorial(qr);
            }
            data.push(v);
        }
    }
    Matrix::from_vec(n, n, data)
}

/// `prod_{2 <= |i| <= k} i_1! ... i_m!`.
pub fn transition_determinant(m: usize, k: usize) -> Int {
    multi_indices(m, k)
        .iter()
        .flat_map(|i| i.entries().to_vec())
        .fold(Int::one(), |acc, e| acc * factorial(e))
}

/// Jet matrix of Hasse derivatives of a monomial parameterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMatrix {
    pub order: usize,
    pub point: TorusPoint,
    pub indices: Vec<MultiIndex>,
    pub entries: RatMatrix,
}

/// Row `i`, column `j`: `prod_r binom(b_rj, i_r) t_r^(b_rj - i_r)`.
/// `b` must have an all-ones first row; negative exponents are allowed.
pub fn jet_matrix(b: &IntMatrix, k: usize, t: &TorusPoint) -> Result<JetMatrix> {
    let exps = exponent_block(b)?;
    let m = exps.nrows();
    if t.dim() != m {
        return Err(Error::DimensionMismatch(format!(
            "torus point has {} coordinates, need {m}",
            t.dim()
        )));
    }
    let indices = all_multi_indices(m, k);
    let cols = exps.ncols();
    let mut data = Vec::with_capacity(indices.len() * cols);
    for i in &indices {
        for j in 0..cols {
            let mut v = Rat::one();
            for (r, &ir) in i.entries().iter().enumerate() {
                let e = exps.get(r, j);
                let c = binomial(e, ir);
                if c.is_zero() {
                    v = Rat::zero();
                    break;
                }
                v *= Rat::from_integer(c) * rat_pow(&t.coords()[r], &(e - Int::from(ir)))?;
            }
            data.push(v);
        }
    }
    Ok(JetMatrix {
        order: k,
        point: t.clone(),
        entries: Matrix::from_vec(indices.len(), cols, data)?,
        indices,
    })
}

/// Reduced row-echelon basis of the `k`-th osculating space at `t`.
pub fn osculating_space(a: &Configuration, k: usize, t: &TorusPoint) -> Result<RatMatrix> {
    let jet = jet_matrix(a.matrix(), k, t)?;
    Ok(rref(&jet.entries).0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolantReport {
    /// Rows of `A` are rows of `A^(k)`, so `X_A` lies in `X_{A^(k)}`.
    pub contains: bool,
    /// Tangent space of `X_{A^(k)}` at the image of `(t, 1, ..., 1)` equals
    /// the `k`-th osculating space of `X_A` at `t`.
    pub tangent_equals_osculating: bool,
    pub osculating_dim: usize,
    pub interpolant_matrix: IntMatrix,
}

impl InterpolantReport {
    pub fn holds(&self) -> bool {
        self.contains && self.tangent_equals_osculating
    }
}

pub fn verify_interpolant(
    a: &Configuration,
    k: usize,
    t: &TorusPoint,
) -> Result<InterpolantReport> {
    let ak = build_ak(a, k)?;
    let rows_of_ak = ak.to_rows();
    let contains = a.matrix().to_rows().iter().all(|r| rows_of_ak.contains(r));
    let extra = ak.nrows() - a.matrix().nrows();
    let tangent = jet_matrix(&ak, 1, &t.extended(extra))?;
    let osculating = jet_matrix(a.matrix(), k, t)?;
    Ok(InterpolantReport {
        contains,
        tangent_equals_osculating: rowspan_equal(&tangent.entries, &osculating.entries)?,
        osculating_dim: rank(&osculating.entries),
        interpolant_matrix: ak,
    })
}

/// Whether `X_A = X_B`, decided by row spans.
pub fn tangent_determines(a: &Configuration, b: &Configuration) -> Result<bool> {
    if a.d() != b.d() {
        return Err(Error::DimensionMismatch(format!(
            "configurations live in P^{} and P^{}",
            a.d(),
            b.d()
        )));
    }
    rowspan_equal(&a.matrix().to_rational(), &b.matrix().to_rational())
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> Int {
    (1..=n).fold(Int::one(), |acc, j| acc * Int::from(j))
}

/// Row-span identity under torus translation: scaling column `j` of
/// `A^(k)` by `t^{a_j}`. Returns the scaled matrix.
pub fn torus_translate(ak: &IntMatrix, a: &Configuration, t: &TorusPoint) -> Result<RatMatrix> {
    let exps = a.exponent_rows()?;
    let mut scales = Vec::with_capacity(exps.ncols());
    for j in 0..exps.ncols() {
        let mut s = Rat::one();
        for r in 0..exps.nrows() {
            s *= rat_pow(&t.coords()[r], exps.get(r, j))?;
        }
        scales.push(s);
    }
    let (rows, cols) = ak.shape();
    let data = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .map(|(i, j)| Rat::from_integer(ak.get(i, j).clone()) * &scales[j])
        .collect();
    Matrix::from_vec(rows, cols, data)
}
