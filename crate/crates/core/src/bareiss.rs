//! Fraction-free (Bareiss) elimination over an integral domain.
//!
//! Over Q the elimination kernel clears denominators and works on integer
//! rows, which keeps every intermediate value an honest minor of the input
//! instead of an ever-growing fraction. The same one-step-division routine
//! runs over any [`Domain`] with exact division, which is how resultants of
//! polynomial matrices are computed in [`crate::poly`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An integral domain with exact division, the minimum contract Bareiss
/// elimination needs. Divisions performed by the algorithm are always exact;
/// `exact_div` may panic otherwise.
pub trait Domain: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Domain for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(Zero::is_zero(&r), "inexact division in fraction-free elimination");
        q
    }
}

/// Forward fraction-free elimination, in place. Returns the pivot columns.
/// After the call the matrix is in row echelon form with all entries still
/// in the domain.
pub fn bareiss_echelon<D: Domain>(rows: &mut [Vec<D>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut prev: Option<D> = None;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot = rows[r][c].clone();
        for i in r + 1..nrows {
            let lead = rows[i][c].clone();
            for j in c + 1..ncols {
                let num = rows[i][j].mul(&pivot).sub(&lead.mul(&rows[r][j]));
                rows[i][j] = match &prev {
                    None => num,
                    Some(q) => num.exact_div(q),
                };
            }
            rows[i][c] = D::zero();
        }
        prev = Some(pivot);
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant of a square matrix by forward Bareiss elimination: the last
/// pivot, adjusted for row swaps.
pub fn bareiss_det<D: Domain>(mut rows: Vec<Vec<D>>) -> D {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    if n == 0 {
        panic!("determinant of an empty matrix is not defined here");
    }
    let mut prev: Option<D> = None;
    let mut negate = false;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return D::zero();
        };
        if pr != c {
            rows.swap(c, pr);
            negate = !negate;
        }
        let pivot = rows[c][c].clone();
        for i in c + 1..n {
            let lead = rows[i][c].clone();
            for j in c + 1..n {
                let num = rows[i][j].mul(&pivot).sub(&lead.mul(&rows[c][j]));
                rows[i][j] = match &prev {
                    None => num,
                    Some(q) => num.exact_div(q),
                };
            }
            rows[i][c] = D::zero();
        }
        prev = Some(pivot);
    }
    let det = rows[n - 1][n - 1].clone();
    if negate {
        D::zero().sub(&det)
    } else {
        det
    }
}

/// Reduced row echelon form over Q: clear denominators, run the integer
/// Bareiss forward pass, then finish with exact rational back-substitution
/// on the (small) pivot block.
pub fn rational_rref_rows(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();

    let mut int_rows: Vec<Vec<BigInt>> = Vec::with_capacity(nrows);
    for row in rows.iter() {
        let mut lcm = BigInt::one();
        for v in row {
            lcm = lcm.lcm(v.denom());
        }
        let mut int_row: Vec<BigInt> = row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
        // Divide out the content to keep minors small.
        let mut content = <BigInt as Zero>::zero();
        for v in &int_row {
            content = content.gcd(v);
        }
        if content > BigInt::one() {
            for v in &mut int_row {
                *v = &*v / &content;
            }
        }
        int_rows.push(int_row);
    }

    let pivots = bareiss_echelon(&mut int_rows);

    for (i, row) in rows.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = BigRational::from_integer(int_rows[i][j].clone());
        }
    }
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = rows[r][c].clone();
        for j in c..ncols {
            rows[r][j] = &rows[r][j] / &inv;
        }
        for i in 0..r {
            if Zero::is_zero(&rows[i][c]) {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in c..ncols {
                let t = &factor * &rows[r][j];
                rows[i][j] = &rows[i][j] - &t;
            }
        }
    }
    pivots
}
