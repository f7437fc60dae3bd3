//! Exact integer matrices and Smith normal form.
//!
//! Entries are arbitrary-precision integers so that no homology
//! computation can silently overflow, no matter how long the input
//! words are.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set_i64(i, i, 1);
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("ragged rows".into()));
        }
        let mut m = IntegerMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                m.set_i64(i, j, e);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn set_i64(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, BigInt::from(v));
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    self.get(i, j).is_one()
                } else {
                    self.get(i, j).is_zero()
                }
            })
        })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Trace as `i64`; all matrices in this crate are small enough.
    pub fn trace_i64(&self) -> i64 {
        i64::try_from(self.trace()).expect("matrix trace exceeds i64")
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -self.get(i, k).clone();
            self.set(i, k, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let v = -self.get(k, j).clone();
            self.set(k, j, v);
        }
    }

    /// row_i += q * row_j
    fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(i, k) + q * self.get(j, k);
            self.set(i, k, v);
        }
    }

    /// col_i += q * col_j
    fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.rows {
            let v = self.get(k, i) + q * self.get(k, j);
            self.set(k, i, v);
        }
    }
}

impl std::fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Result of a Smith normal form computation: `d = u * m * v` with `u`,
/// `v` unimodular and `d` diagonal with each diagonal entry dividing the
/// next. `u_inv` is maintained alongside `u` so that cokernel generators
/// can be pulled back to the original basis without a separate matrix
/// inversion.
pub struct SmithNormalForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
}

impl SmithNormalForm {
    /// The diagonal of `d` (length `min(rows, cols)`), including zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Compute the Smith normal form of `m` over the integers.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut u_inv = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    // Tracked elementary operations. Row ops update u on the left and
    // u_inv with the inverse op on the right; column ops update v on the
    // right.
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            a.swap_rows($i, $j);
            u.swap_rows($i, $j);
            u_inv.swap_cols($i, $j);
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            a.swap_cols($i, $j);
            v.swap_cols($i, $j);
        }};
    }
    macro_rules! row_add {
        // row_i += q * row_j
        ($i:expr, $j:expr, $q:expr) => {{
            let q: BigInt = $q;
            a.add_row_multiple($i, $j, &q);
            u.add_row_multiple($i, $j, &q);
            u_inv.add_col_multiple($j, $i, &(-q));
        }};
    }
    macro_rules! col_add {
        // col_i += q * col_j
        ($i:expr, $j:expr, $q:expr) => {{
            let q: BigInt = $q;
            a.add_col_multiple($i, $j, &q);
            v.add_col_multiple($i, $j, &q);
        }};
    }

    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // Smallest nonzero entry of the trailing submatrix becomes
            // the pivot; truncated division then strictly shrinks
            // remainders, so this loop terminates.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a.get(i, j).is_zero()
                        && pivot
                            .is_none_or(|(pi, pj)| a.get(i, j).abs() < a.get(pi, pj).abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            row_swap!(t, pi);
            col_swap!(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = -(a.get(i, t) / a.get(t, t));
                    row_add!(i, t, q);
                    if !a.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = -(a.get(t, j) / a.get(t, t));
                    col_add!(j, t, q);
                    if !a.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest
            // of the submatrix by the pivot.
            let mut fix: Option<usize> = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(a.get(i, j) % a.get(t, t)).is_zero() {
                        fix = Some(i);
                        break 'scan;
                    }
                }
            }
            match fix {
                Some(i) => {
                    row_add!(t, i, BigInt::one());
                }
                None => break,
            }
        }
    }

    for t in 0..steps {
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }

    SmithNormalForm { d: a, u, v, u_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_of(rows: &[Vec<i64>]) -> SmithNormalForm {
        smith_normal_form(&IntegerMatrix::from_rows_i64(rows).unwrap())
    }

    fn check_reconstruction(m: &IntegerMatrix, s: &SmithNormalForm) {
        let umv = s.u.mul(m).unwrap().mul(&s.v).unwrap();
        assert_eq!(umv, s.d, "d != u*m*v");
        assert!(s.u.mul(&s.u_inv).unwrap().is_identity(), "u_inv is wrong");
    }

    #[test]
    fn snf_diagonal_divisibility() {
        let m = IntegerMatrix::from_rows_i64(&[vec![2, 4], vec![6, 8]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        check_reconstruction(&m, &s);
    }

    #[test]
    fn snf_handles_zero_and_rectangular() {
        let m = IntegerMatrix::zero(3, 2);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![BigInt::zero(), BigInt::zero()]);
        check_reconstruction(&m, &s);

        let m = IntegerMatrix::from_rows_i64(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let s = smith_normal_form(&m);
        // gcd of entries is 1; 2x2 minors are -3, -6, -3 with gcd 3.
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
        check_reconstruction(&m, &s);
    }

    #[test]
    fn snf_negative_entries() {
        let m = IntegerMatrix::from_rows_i64(&[vec![-2, 0], vec![0, -2]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(2)]);
        check_reconstruction(&m, &s);
    }

    #[test]
    fn snf_known_torsion() {
        // Presentation matrix of Z/2 + Z/6 in a scrambled basis.
        let m = snf_of(&[vec![2, 2], vec![2, 8]]);
        assert_eq!(m.diagonal(), vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn multiplication_shapes() {
        let a = IntegerMatrix::identity(2);
        let b = IntegerMatrix::zero(3, 2);
        assert!(a.mul(&b).is_err());
        assert!(b.mul(&a).is_ok());
    }
}
