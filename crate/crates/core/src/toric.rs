//! Lattice configurations defining equivariantly embedded projective toric
//! varieties.
//!
//! A configuration is an integer matrix whose rational row span contains the
//! all-ones vector. Row operations over the rationals do not change the
//! variety, so most operations only look at the row span; the monomial map
//! additionally needs the first row to be literally all ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::elimination::{
    determinant, maximal_minors, rank, rowspan_contains, rowspan_equal,
};
use crate::exact::lattice::{hermite_normal_form, kernel_lattice};
use crate::exact::matrix::Matrix;
use crate::polygon::{convex_hull, LatticePoint};
use crate::{Int, IntMatrix, Rat, RatMatrix};

/// A validated configuration `A` with `m = rank(A) - 1` and `d = cols(A) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    matrix: IntMatrix,
    m: usize,
    d: usize,
    ones_first_row: bool,
}

impl Configuration {
    /// Checks that `matrix` has rank at least 2 and that `(1, ..., 1)` lies
    /// in its rational row span. The matrix is stored unchanged; redundant
    /// rows are allowed.
    pub fn validate(matrix: IntMatrix) -> Result<Self> {
        let r = rank(&matrix);
        if r < 2 {
            return Err(Error::RankDeficient {
                rank: r,
                required: 2,
            });
        }
        let cols = matrix.ncols();
        let ones = Matrix::from_vec(1, cols, vec![Rat::one(); cols])?;
        if !rowspan_contains(&matrix.to_rational(), &ones)? {
            return Err(Error::OnesNotInRowSpan);
        }
        let ones_first_row = matrix.row(0).iter().all(One::is_one);
        Ok(Self {
            matrix,
            m: r - 1,
            d: cols - 1,
            ones_first_row,
        })
    }

    /// `A_{l,d}`: rows `(1, ..., 1)` and `(l_0, ..., l_d)` with
    /// `0 = l_0 < l_1 < ... < l_d`.
    pub fn curve(ell: &[i64]) -> Result<Self> {
        check_exponent_sequence(ell)?;
        let ones = vec![Int::one(); ell.len()];
        let exps = ell.iter().map(|&l| Int::from(l)).collect();
        Self::validate(Matrix::from_rows(vec![ones, exps])?)
    }

    /// The rational normal curve of degree `d`.
    pub fn rational_normal_curve(d: usize) -> Result<Self> {
        let ell: Vec<i64> = (0..=d as i64).collect();
        Self::curve(&ell)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Torus dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Ambient projective dimension.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn has_ones_first_row(&self) -> bool {
        self.ones_first_row
    }

    /// Rows below the homogenizing row, read as exponent vectors.
    pub fn exponent_rows(&self) -> Result<IntMatrix> {
        if !self.ones_first_row {
            return Err(Error::NotNormalized);
        }
        let rows: Vec<usize> = (1..self.matrix.nrows()).collect();
        Ok(self.matrix.select_rows(&rows))
    }

    /// Rewrites the configuration over the saturated row lattice
    /// `rowspan_Q(A) ∩ Z^{d+1}` with `(1, ..., 1)` as first row and zeros in
    /// the first column below it. When the rows of `A` already form a basis
    /// of that lattice the change of basis is unimodular.
    pub fn normalize(&self) -> Result<Self> {
        let cols = self.matrix.ncols();
        let kernel = kernel_lattice(&self.matrix);
        let saturated = if kernel.is_empty() {
            IntMatrix::identity(cols)
        } else {
            kernel_lattice(kernel.vectors()).vectors().clone()
        };
        let r = saturated.nrows();

        let coeffs = solve_in_hermite_basis(&saturated, &vec![Int::one(); cols])
            .ok_or(Error::OnesNotInRowSpan)?;
        let first_row_unimodular = complete_to_unimodular(&coeffs)?;
        let mut rebased = first_row_unimodular.mul(&saturated)?;
        for i in 1..r {
            let lead = rebased.get(i, 0).clone();
            rebased.add_row_multiple(i, 0, &-lead);
        }
        let rest = rebased.select_rows(&(1..r).collect::<Vec<_>>());
        let rest = hermite_normal_form(&rest).form;
        let ones = Matrix::from_vec(1, cols, vec![Int::one(); cols])?;
        Self::validate(ones.vstack(&rest)?)
    }

    /// Monomial map `t -> (t^{a_0} : ... : t^{a_d})`; needs an all-ones
    /// first row. Negative exponents are fine since `t` is in the torus.
    pub fn monomial_eval(&self, t: &TorusPoint) -> Result<Vec<Rat>> {
        let exps = self.exponent_rows()?;
        if t.dim() != exps.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "torus point has {} coordinates, configuration has {} exponent rows",
                t.dim(),
                exps.nrows()
            )));
        }
        (0..=self.d)
            .map(|j| {
                let mut v = Rat::one();
                for (r, tr) in t.coords().iter().enumerate() {
                    v *= rat_pow(tr, exps.get(r, j))?;
                }
                Ok(v)
            })
            .collect()
    }

    /// Degree of `X_A` as the normalized volume of the configuration with
    /// respect to the lattice its points generate. Only `m <= 2`.
    ///
    /// Computed as the sum of `|det|` over a fan triangulation of the hull
    /// (columns of a row basis of `A`), divided by the gcd of the maximal
    /// minors of that row basis. Both are unchanged by rational row
    /// operations, so no normalization is needed first.
    pub fn degree(&self) -> Result<Int> {
        if self.m > 2 {
            return Err(Error::Unsupported(format!(
                "degree via normalized volume needs m <= 2, got m = {}",
                self.m
            )));
        }
        let basis = self
            .matrix
            .select_rows(&independent_rows(&self.matrix, None));
        let lattice_det = maximal_minors(&basis)
            .into_iter()
            .fold(Int::zero(), |g, x| g.gcd(&x));
        let chart = self.affine_chart();
        let simplices: Vec<Vec<usize>> = if self.m == 1 {
            let coord = |j: usize| chart.get(0, j).clone();
            let lo = (0..=self.d).min_by_key(|&j| coord(j)).expect("nonempty");
            let hi = (0..=self.d).max_by_key(|&j| coord(j)).expect("nonempty");
            vec![vec![lo, hi]]
        } else {
            let points: Vec<LatticePoint> = (0..=self.d)
                .map(|j| LatticePoint::new(chart.get(0, j).clone(), chart.get(1, j).clone()))
                .collect();
            let hull = convex_hull(&points)?;
            let idx: Vec<usize> = hull
                .vertices()
                .iter()
                .map(|v| {
                    points
                        .iter()
                        .position(|p| p == v)
                        .expect("hull vertex is an input point")
                })
                .collect();
            (1..idx.len() - 1)
                .map(|i| vec![idx[0], idx[i], idx[i + 1]])
                .collect()
        };
        let mut total = Int::zero();
        for s in simplices {
            total += determinant(&basis.select_columns(&s))?.abs();
        }
        Ok(total / lattice_det)
    }

    /// Integer affine coordinates for the columns: `m` rows of `A` that,
    /// together with the all-ones vector, span the row space.
    fn affine_chart(&self) -> IntMatrix {
        let cols = self.matrix.ncols();
        let ones = Matrix::from_vec(1, cols, vec![Int::one(); cols]).expect("shape");
        let rows = independent_rows(&self.matrix, Some(&ones));
        self.matrix.select_rows(&rows)
    }

    /// `X_A = X_B`, decided by equality of rational row spans.
    pub fn affine_equivalent(&self, other: &Self) -> Result<bool> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(format!(
                "configurations in P^{} and P^{}",
                self.d, other.d
            )));
        }
        rowspan_equal(&self.matrix.to_rational(), &other.matrix.to_rational())
    }
}

/// Greedy selection of rows that are independent, optionally modulo `seed`.
fn independent_rows(m: &IntMatrix, seed: Option<&IntMatrix>) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut acc = seed
        .cloned()
        .unwrap_or_else(|| Matrix::from_vec(0, m.ncols(), vec![]).expect("shape"));
    let mut current = rank(&acc);
    for r in 0..m.nrows() {
        let trial = acc.vstack(&m.select_rows(&[r])).expect("same width");
        let next = rank(&trial);
        if next > current {
            chosen.push(r);
            acc = trial;
            current = next;
        }
    }
    chosen
}

/// Coefficients `c` with `c * basis = target` for a basis in Hermite form.
fn solve_in_hermite_basis(basis: &IntMatrix, target: &[Int]) -> Option<Vec<Int>> {
    let mut coeffs = Vec::with_capacity(basis.nrows());
    let mut residual = target.to_vec();
    for i in 0..basis.nrows() {
        let pivot_col = (0..basis.ncols()).find(|&c| !basis.get(i, c).is_zero())?;
        let (q, r) = residual[pivot_col].div_rem(basis.get(i, pivot_col));
        if !r.is_zero() {
            return None;
        }
        for (c, res) in residual.iter_mut().enumerate() {
            *res -= &q * basis.get(i, c);
        }
        coeffs.push(q);
    }
    residual.iter().all(Zero::is_zero).then_some(coeffs)
}

/// A unimodular matrix whose first row is the primitive vector `c`.
fn complete_to_unimodular(c: &[Int]) -> Result<IntMatrix> {
    let n = c.len();
    let column = Matrix::from_vec(n, 1, c.to_vec())?;
    let h = hermite_normal_form(&column);
    // h.transform * c^T = e_1, so the first column of its inverse is c^T.
    if !h.form.get(0, 0).is_one() {
        return Err(Error::Inconsistent(
            "coefficient vector is not primitive".into(),
        ));
    }
    let inv = invert_unimodular(&h.transform)?;
    Ok(inv.transpose())
}

fn invert_unimodular(u: &IntMatrix) -> Result<IntMatrix> {
    let n = u.nrows();
    let mut aug_rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Rat> = u
            .row(i)
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
        aug_rows.push(row);
    }
    let aug: RatMatrix = Matrix::from_rows(aug_rows)?;
    let (reduced, pivots) = crate::exact::elimination::rref(&aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Inconsistent("matrix is not invertible".into()));
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = reduced.get(i, n + j);
            if !v.is_integer() {
                return Err(Error::Inconsistent("matrix is not unimodular".into()));
            }
            out.push(v.to_integer());
        }
    }
    Matrix::from_vec(n, n, out)
}

/// A rational point of the torus: all coordinates nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    coords: Vec<Rat>,
}

impl TorusPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if let Some(i) = coords.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate(i));
        }
        Ok(Self { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    /// The identity `(1, ..., 1)`.
    pub fn identity(dim: usize) -> Self {
        Self {
            coords: vec![Rat::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Appends coordinates equal to one.
    pub fn extended(&self, extra: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.extend(std::iter::repeat_n(Rat::one(), extra));
        Self { coords }
    }

    /// Parses `2,3` or `1/2,-3`.
    pub fn parse(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|s| {
                let s = s.trim();
                s.parse::<BigRational>()
                    .map_err(|_| Error::Parse(format!("bad rational coordinate `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

impl std::fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `base^e` for an integer exponent of any sign.
pub(crate) fn rat_pow(base: &Rat, e: &BigInt) -> Result<Rat> {
    let e = e
        .to_i32()
        .ok_or_else(|| Error::Unsupported(format!("exponent {e} too large")))?;
    Ok(base.pow(e))
}

pub(crate) fn check_exponent_sequence(ell: &[i64]) -> Result<()> {
    let ok = ell.first() == Some(&0) && ell.windows(2).all(|w| w[0] < w[1]);
    if !ok || ell.len() < 2 {
        return Err(Error::NotStrictlyIncreasing(format!("{ell:?}")));
    }
    Ok(())
}
