//! Integer normal forms and lattices.

use num_traits::One;

use super::elimination::rank;
use super::matrix::Matrix;
use super::scalar::IntegerRing;
use crate::error::{Error, Result};

/// Row-style Hermite normal form: `transform * input = form`.
///
/// `form` is in row echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows at the bottom. `transform`
/// is unimodular.
#[derive(Clone, Debug)]
pub struct Hermite<I> {
    pub form: Matrix<I>,
    pub transform: Matrix<I>,
    pub pivots: Vec<usize>,
}

impl<I> Hermite<I> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form<I: IntegerRing>(m: &Matrix<I>) -> Hermite<I> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut u = Matrix::<I>::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            let b = a.get(i, c).clone();
            if b.is_zero() {
                continue;
            }
            let p = a.get(r, c).clone();
            let (g, x, y) = I::xgcd(&p, &b);
            let (pg, bg) = (p / g.clone(), b / g);
            // [x y; -b/g p/g] has determinant one.
            combine_rows(&mut a, r, i, &x, &y, &-bg.clone(), &pg);
            combine_rows(&mut u, r, i, &x, &y, &-bg, &pg);
        }
        if a.get(r, c).is_zero() {
            continue;
        }
        if a.get(r, c).is_negative() {
            a.negate_row(r);
            u.negate_row(r);
        }
        let pivot = a.get(r, c).clone();
        for i in 0..r {
            let q = a.get(i, c).div_floor(&pivot);
            if !q.is_zero() {
                a.add_row_multiple(i, r, &-q.clone());
                u.add_row_multiple(i, r, &-q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hermite {
        form: a,
        transform: u,
        pivots,
    }
}

/// Replaces rows `(i, j)` by `(x*ri + y*rj, z*ri + w*rj)`.
fn combine_rows<I: IntegerRing>(m: &mut Matrix<I>, i: usize, j: usize, x: &I, y: &I, z: &I, w: &I) {
    for c in 0..m.ncols() {
        let (ri, rj) = (m.get(i, c).clone(), m.get(j, c).clone());
        *m.get_mut(i, c) = x.clone() * ri.clone() + y.clone() * rj.clone();
        *m.get_mut(j, c) = z.clone() * ri + w.clone() * rj;
    }
}

/// Smith normal form `left * input * right = diag`.
///
/// Diagonal entries are nonnegative and each divides the next; `left` and
/// `right` are unimodular.
#[derive(Clone, Debug)]
pub struct Smith<I> {
    pub left: Matrix<I>,
    pub diag: Matrix<I>,
    pub right: Matrix<I>,
}

impl<I: IntegerRing> Smith<I> {
    /// Nonzero elementary divisors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<I> {
        let n = self.diag.nrows().min(self.diag.ncols());
        (0..n)
            .map(|i| self.diag.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_form<I: IntegerRing>(m: &Matrix<I>) -> Smith<I> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut left = Matrix::<I>::identity(rows);
    let mut right = Matrix::<I>::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = a.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_smith(a, left, right);
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a.get(i, t).div_floor(&pivot);
                a.add_row_multiple(i, t, &-q.clone());
                left.add_row_multiple(i, t, &-q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = a.get(t, j).div_floor(&pivot);
                a.add_col_multiple(j, t, &-q.clone());
                right.add_col_multiple(j, t, &-q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    a.add_row_multiple(t, i, &I::one());
                    left.add_row_multiple(t, i, &I::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    finish_smith(a, left, right)
}

fn finish_smith<I: IntegerRing>(
    mut a: Matrix<I>,
    mut left: Matrix<I>,
    right: Matrix<I>,
) -> Smith<I> {
    for t in 0..a.nrows().min(a.ncols()) {
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    Smith {
        left,
        diag: a,
        right,
    }
}

/// A lattice given by linearly independent integer row vectors.
///
/// Bases produced by [`kernel_lattice`] are saturated and canonical (Hermite
/// normal form), so two such lattices are equal iff the structs are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis<I> {
    ambient_dim: usize,
    vectors: Matrix<I>,
}

impl<I: IntegerRing> LatticeBasis<I> {
    /// Wraps independent row vectors.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<I>>) -> Result<Self> {
        let m = if vectors.is_empty() {
            Matrix::from_vec(0, ambient_dim, vec![])?
        } else {
            Matrix::from_rows(vectors)?
        };
        Self::from_matrix(m).and_then(|b| {
            if b.ambient_dim != ambient_dim {
                Err(Error::DimensionMismatch(format!(
                    "vectors of length {} in ambient dimension {ambient_dim}",
                    b.ambient_dim
                )))
            } else {
                Ok(b)
            }
        })
    }

    pub fn from_matrix(vectors: Matrix<I>) -> Result<Self> {
        if rank(&vectors) != vectors.nrows() {
            return Err(Error::Precondition(
                "lattice basis vectors must be linearly independent".into(),
            ));
        }
        Ok(Self {
            ambient_dim: vectors.ncols(),
            vectors,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.nrows() == 0
    }

    pub fn vectors(&self) -> &Matrix<I> {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[I] {
        self.vectors.row(i)
    }

    /// Hermite normal form of the basis; equal lattices give equal results.
    pub fn canonical(&self) -> Self {
        let h = hermite_normal_form(&self.vectors);
        let n = h.rank();
        Self {
            ambient_dim: self.ambient_dim,
            vectors: h.form.select_rows(&(0..n).collect::<Vec<_>>()),
        }
    }

    pub fn same_lattice(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.canonical() == other.canonical()
    }

    /// Membership test: `v` is an integer combination of the basis.
    pub fn contains(&self, v: &[I]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let row = Matrix::from_vec(1, self.ambient_dim, v.to_vec()).expect("length checked");
        let stacked = self.vectors.vstack(&row).expect("same width");
        let h = hermite_normal_form(&stacked);
        h.rank() == self.rank() && {
            let n = h.rank();
            h.form.select_rows(&(0..n).collect::<Vec<_>>()) == self.canonical().vectors
        }
    }

    pub fn is_sublattice_of(&self, other: &Self) -> bool {
        self.vectors.row_iter().all(|v| other.contains(v))
    }

    /// Whether the lattice equals its rational span intersected with `Z^n`.
    pub fn is_saturated(&self) -> bool {
        smith_form(&self.vectors)
            .invariant_factors()
            .iter()
            .all(One::is_one)
    }
}

/// Saturated basis of `{v in Z^cols : m v = 0}`, in Hermite normal form.
pub fn kernel_lattice<I: IntegerRing>(m: &Matrix<I>) -> LatticeBasis<I> {
    let h = hermite_normal_form(&m.transpose());
    let r = h.rank();
    let rows: Vec<usize> = (r..m.ncols()).collect();
    let basis = LatticeBasis {
        ambient_dim: m.ncols(),
        vectors: h.transform.select_rows(&rows),
    };
    basis.canonical()
}

/// Index of a sublattice of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex<I> {
    Finite(I),
    Infinite,
}

/// `[Z^n : L]`, the product of the elementary divisors when `L` has full rank.
pub fn lattice_index<I: IntegerRing>(sub: &LatticeBasis<I>) -> LatticeIndex<I> {
    if sub.rank() < sub.ambient_dim() {
        return LatticeIndex::Infinite;
    }
    let product = smith_form(sub.vectors())
        .invariant_factors()
        .into_iter()
        .fold(I::one(), |acc, x| acc * x);
    LatticeIndex::Finite(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn lattice(n: usize, rows: &[&[i64]]) -> LatticeBasis<BigInt> {
        LatticeBasis::new(
            n,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn hnf_transform_reproduces_form() {
        let m = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let h = hermite_normal_form(&m);
        assert_eq!(h.transform.mul(&m).unwrap(), h.form);
        assert_eq!(h.rank(), 3);
        for (r, &c) in h.pivots.iter().enumerate() {
            let p = h.form.get(r, c).clone();
            assert!(p > BigInt::zero());
            for i in 0..r {
                let v = h.form.get(i, c);
                assert!(*v >= BigInt::zero() && *v < p);
            }
        }
    }

    #[test]
    fn kernel_of_twisted_cubic() {
        let a1 = int(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let k = kernel_lattice(&a1);
        assert_eq!(k.rank(), 2);
        assert!(k.same_lattice(&lattice(4, &[&[1, -2, 1, 0], &[0, 1, -2, 1]])));
        assert!(k.contains(&[1, -1, -1, 1].map(BigInt::from)));
        assert!(!k.contains(&[-1, 1, 0, 0].map(BigInt::from)));
        assert!(k.is_saturated());
    }

    #[test]
    fn kernel_of_cubic_hypersurface_config() {
        // A_3^(2): rows 1, i, binom(i, 2).
        let m = int(&[&[1, 1, 1, 1], &[0, 1, 2, 3], &[0, 0, 1, 3]]);
        let k = kernel_lattice(&m);
        assert!(k.same_lattice(&lattice(4, &[&[-1, 3, -3, 1]])));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = kernel_lattice(&Matrix::<BigInt>::identity(3));
        assert!(k.is_empty());
        assert_eq!(k.ambient_dim(), 3);
    }

    #[test]
    fn kernel_is_saturated_even_for_divisible_rows() {
        // 2x + 4y = 0 has kernel generated by (2, -1), not (4, -2).
        let k = kernel_lattice(&int(&[&[2, 4]]));
        assert!(k.same_lattice(&lattice(2, &[&[2, -1]])));
    }

    #[test]
    fn smith_divisibility_and_transforms() {
        let m = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_form(&m);
        assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diag);
        let f = s.invariant_factors();
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn smith_rectangular() {
        let m = int(&[&[1, 1], &[2, 4]]).transpose();
        let s = smith_form(&int(&[&[4, 6, 8]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
        assert_eq!(
            smith_form(&m).invariant_factors(),
            vec![BigInt::from(1), BigInt::from(2)]
        );
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            lattice_index(&lattice(2, &[&[1, 1], &[2, 4]])),
            LatticeIndex::Finite(BigInt::from(2))
        );
        assert_eq!(
            lattice_index(&lattice(2, &[&[1, 0], &[0, 1]])),
            LatticeIndex::Finite(BigInt::from(1))
        );
        assert_eq!(
            lattice_index(&lattice(2, &[&[2, 0]])),
            LatticeIndex::Infinite
        );
    }

    #[test]
    fn dependent_vectors_are_rejected() {
        assert!(LatticeBasis::new(
            2,
            vec![
                vec![BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(2), BigInt::from(4)]
            ]
        )
        .is_err());
    }

    #[test]
    fn generic_over_i64() {
        let m: Matrix<i64> = Matrix::from_rows(vec![vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        let k = kernel_lattice(&m);
        assert_eq!(k.vectors().to_rows(), vec![vec![1, -2, 1]]);
    }
}
