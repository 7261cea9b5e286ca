//! Exact linear algebra: fraction-free integer rank and rational
//! Gauss–Jordan elimination.

use num::{BigInt, BigRational, One, Zero};

/// One fraction-free elimination step `(a*b - c*d) / prev`.
trait FractionFree: Sized + Clone {
    fn is_zero(&self) -> bool;
    fn step(a: &Self, b: &Self, c: &Self, d: &Self, prev: &Self) -> Option<Self>;
}

impl FractionFree for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn step(a: &Self, b: &Self, c: &Self, d: &Self, prev: &Self) -> Option<Self> {
        let num = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(num % prev, 0);
        Some(num / prev)
    }
}

impl FractionFree for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn step(a: &Self, b: &Self, c: &Self, d: &Self, prev: &Self) -> Option<Self> {
        Some((a * b - c * d) / prev)
    }
}

/// Bareiss elimination to echelon form; `None` on overflow.
fn bareiss_rank<T: FractionFree>(mut a: Vec<Vec<T>>, one: T) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = one;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                row[j] = T::step(&prow[col], &row[j], &lead, &prow[j], &prev)?;
            }
            row[col] = T::step(&prow[col], &row[col], &lead, &prow[col], &prev)?;
        }
        prev = prow[col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank of an integer matrix over the rationals.
///
/// Runs fraction-free elimination in `i128` and redoes the work with
/// arbitrary-precision integers if an intermediate minor overflows.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(rank) = bareiss_rank(small, 1i128) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(big, BigInt::one()).expect("bigint elimination cannot overflow")
}

/// A dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(data: Vec<Vec<BigRational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix { rows, cols, data }
    }

    pub fn from_integers(data: &[Vec<i64>]) -> Self {
        Self::new(
            data.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i]
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (RationalMatrix::new_shaped(self.rows, self.cols, a), pivots)
    }

    fn new_shaped(rows: usize, cols: usize, data: Vec<Vec<BigRational>>) -> Self {
        RationalMatrix { rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut a = self.data.clone();
        let n = self.rows;
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            let (top, bottom) = a.split_at_mut(c + 1);
            let pivot_row = &top[c];
            for row in bottom.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let factor = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
        }
        det
    }

    /// A basis of `{x : A x = 0}`; each vector has a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.data[i][f].clone();
                }
                v
            })
            .collect()
    }
}

/// `sum_i a_i b_i`.
pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize_leading(v: &mut [BigRational]) -> bool {
    let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return false;
    };
    for x in v.iter_mut() {
        *x = &*x / &lead;
    }
    true
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
    v.iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}
