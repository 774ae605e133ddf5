//! Fraction-free elimination, reduced row echelon forms and minors.

use itertools::Itertools;

use super::matrix::Matrix;
use super::scalar::{Field, Ring};
use crate::error::{Error, Result};

/// Result of one-step fraction-free (Bareiss) elimination.
///
/// Every entry of `matrix` is, up to sign, a minor of the input, so integer
/// inputs stay integral and entries grow at most like the largest minor.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
    pub row_swaps: usize,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Bareiss elimination over any exact integral domain.
pub fn bareiss<T: Ring>(m: &Matrix<T>) -> Echelon<T> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut row_swaps = 0;
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            row_swaps += 1;
        }
        let pivot = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            for j in c + 1..cols {
                let v = (pivot.clone() * a.get(i, j).clone() - lead.clone() * a.get(r, j).clone())
                    / prev.clone();
                *a.get_mut(i, j) = v;
            }
            *a.get_mut(i, c) = T::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon {
        matrix: a,
        pivots,
        row_swaps,
    }
}

/// Rank over the field of fractions.
pub fn rank<T: Ring>(m: &Matrix<T>) -> usize {
    bareiss(m).rank()
}

pub fn determinant<T: Ring>(m: &Matrix<T>) -> Result<T> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {rows}x{cols} matrix"
        )));
    }
    if rows == 0 {
        return Ok(T::one());
    }
    let e = bareiss(m);
    if e.rank() < rows {
        return Ok(T::zero());
    }
    let d = e.matrix.get(rows - 1, rows - 1).clone();
    Ok(if e.row_swaps % 2 == 1 { -d } else { d })
}

/// Reduced row echelon form with leading ones; zero rows are dropped, so the
/// result is the canonical basis of the row span.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = F::one() / a.get(r, c).clone();
        for j in c..cols {
            let v = a.get(r, j).clone() * inv.clone();
            *a.get_mut(r, j) = v;
        }
        for i in 0..rows {
            if i != r {
                let factor = -a.get(i, c).clone();
                a.add_row_multiple(i, r, &factor);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let basis = a.select_rows(&(0..r).collect::<Vec<_>>());
    (basis, pivots)
}

/// Whether two matrices have the same row span over the field.
pub fn rowspan_equal<F: Field>(m: &Matrix<F>, n: &Matrix<F>) -> Result<bool> {
    if m.ncols() != n.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "row spans in dimension {} and {}",
            m.ncols(),
            n.ncols()
        )));
    }
    Ok(rref(m).0 == rref(n).0)
}

/// Whether every row of `m` lies in the row span of `n`.
pub fn rowspan_contains<F: Field>(n: &Matrix<F>, m: &Matrix<F>) -> Result<bool> {
    let stacked = n.vstack(m)?;
    Ok(rank(&stacked) == rank(n))
}

/// All maximal minors, column subsets in lexicographic order.
pub fn maximal_minors<T: Ring>(m: &Matrix<T>) -> Vec<T> {
    let (rows, cols) = m.shape();
    if rows > cols {
        let t = m.transpose();
        return maximal_minors(&t);
    }
    (0..cols)
        .combinations(rows)
        .map(|subset| determinant(&m.select_columns(&subset)).expect("square by construction"))
        .collect()
}

/// Nonnegativity of all maximal minors. Requires `rows <= cols`.
pub fn is_positroid<T: Ring>(m: &Matrix<T>) -> Result<bool> {
    if m.nrows() > m.ncols() {
        return Err(Error::Precondition(format!(
            "positroid check needs rows <= cols, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(maximal_minors(m).iter().all(|x| !x.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Ratio};

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rat(rows: &[&[i64]]) -> Matrix<BigRational> {
        int(rows).to_rational()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&rat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])), 2);
        assert_eq!(rank(&rat(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])), 0);
        assert_eq!(
            rank(&int(&[&[1, 1, 1, 1], &[0, 1, 2, 3], &[1, 2, 3, 4]])),
            2
        );
    }

    #[test]
    fn rank_is_generic_over_machine_integers() {
        let m: Matrix<i64> = Matrix::from_rows(vec![vec![2, 4], vec![1, 2]]).unwrap();
        assert_eq!(rank(&m), 1);
        let q: Matrix<Ratio<i64>> = m.to_rational();
        assert_eq!(rref(&q).0.nrows(), 1);
    }

    #[test]
    fn determinant_with_swaps() {
        assert_eq!(
            determinant(&int(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&int(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            determinant(&int(&[&[1, 2], &[2, 4]])).unwrap(),
            BigInt::from(0)
        );
        assert!(determinant(&int(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn rowspan_examples() {
        let a1 = rat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let a2 = rat(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let a1_k2 = rat(&[&[1, 1, 1, 1], &[0, 1, 2, 3], &[0, 0, 1, 3]]);
        assert!(rowspan_equal(&a1, &a2).unwrap());
        assert!(!rowspan_equal(&a1, &a1_k2).unwrap());
        assert!(rowspan_contains(&a1_k2, &a1).unwrap());
        assert!(rowspan_equal(&a1, &rat(&[&[1, 2]])).is_err());
    }

    #[test]
    fn minors_in_lex_order() {
        let m = int(&[&[1, 1, 1], &[0, 1, 2]]);
        let minors: Vec<i64> = maximal_minors(&m)
            .into_iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(minors, vec![1, 2, 1]);
        assert!(is_positroid(&m).unwrap());
        assert!(!is_positroid(&int(&[&[1, 0], &[0, -1]])).unwrap());
        assert!(is_positroid(&int(&[&[1], &[2]])).is_err());
    }
}
