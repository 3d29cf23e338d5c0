//! Exact rational arithmetic and dense linear algebra kernels.
//!
//! Everything here works over arbitrary-precision rationals: structure
//! constant products and characteristic polynomial coefficients overflow
//! 64-bit integers already at rank 4, and the sign tests downstream
//! (discriminant vanishing, root bounds) must be exact.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar used throughout the crate.
///
/// `num::BigRational` keeps values reduced with a positive denominator,
/// which matches the canonical form we rely on for printing and hashing.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as `p` or `p/q` (q > 1).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

/// Dense matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() && !self.get(i, j).is_zero() {
                    out[i] = &out[i] + self.get(i, j) * x;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = &*e * c;
        }
        out
    }

    pub fn trace(&self) -> Rat {
        let n = self.rows.min(self.cols);
        let mut t = Rat::zero();
        for i in 0..n {
            t = t + self.get(i, i);
        }
        t
    }

    /// Coefficients `c_0..c_n` of `det(t*I - M) = t^n + c_{n-1} t^{n-1} + ... + c_0`,
    /// computed by the Faddeev–LeVerrier recursion. Exact; the returned vector has
    /// length `n + 1` with `c_n = 1`.
    pub fn char_poly(&self) -> Result<Vec<Rat>, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = QMatrix::identity(n);
        for k in 1..=n {
            let nk = self.mul(&m).expect("square product");
            let c = -(nk.trace() / rat_int(k as i64));
            coeffs[n - k] = c.clone();
            m = nk;
            for i in 0..n {
                let cur = m.get(i, i) + &c;
                m.set(i, i, cur);
            }
        }
        Ok(coeffs)
    }

    /// Exact basis of the null space `{v : Mv = 0}`.
    ///
    /// Gauss–Jordan with first-nonzero pivoting so the basis is reproducible
    /// across runs; vectors are indexed by the free columns in ascending order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut prow = 0usize;
        for col in 0..m.cols {
            let Some(r) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if r != prow {
                for j in 0..m.cols {
                    let a = m.get(prow, j).clone();
                    let b = m.get(r, j).clone();
                    m.set(prow, j, b);
                    m.set(r, j, a);
                }
            }
            let inv = m.get(prow, col).clone();
            for j in col..m.cols {
                let v = m.get(prow, j) / &inv;
                m.set(prow, j, v);
            }
            for r2 in 0..m.rows {
                if r2 != prow && !m.get(r2, col).is_zero() {
                    let f = m.get(r2, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r2, j) - &f * m.get(prow, j);
                        m.set(r2, j, v);
                    }
                }
            }
            pivot_cols.push(col);
            prow += 1;
            if prow == m.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); m.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Rank, obtained as a byproduct of the same elimination as [`Self::kernel_basis`].
    pub fn rank(&self) -> usize {
        self.cols - self.kernel_basis().len()
    }
}

/// Evaluates a polynomial with coefficients `c_0..c_n` (`c_k` multiplying `t^k`) at `t`.
pub fn eval_poly(coeffs: &[Rat], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// Determinant via fraction-free Bareiss elimination.
///
/// Kept separate from the kernel/char-poly path so the two can check each
/// other on randomized inputs.
pub fn det_bareiss(m: &QMatrix) -> Result<Rat, LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rat::one());
    }
    // Clear denominators so the Bareiss recurrence stays in integers.
    let mut scale = BigInt::one();
    for i in 0..n {
        let mut row_lcm = BigInt::one();
        for j in 0..n {
            row_lcm = num::integer::lcm(row_lcm, m.get(i, j).denom().clone());
        }
        scale *= &row_lcm;
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row_lcm = BigInt::one();
            for j in 0..n {
                row_lcm = num::integer::lcm(row_lcm, m.get(i, j).denom().clone());
            }
            (0..n)
                .map(|j| m.get(i, j).numer() * (&row_lcm / m.get(i, j).denom()))
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Rat::zero());
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(Rat::new(sign * a[n - 1][n - 1].clone(), scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn char_poly_identity_2x2() {
        // (t-1)^2 = t^2 - 2t + 1
        let c = m(&[&[1, 0], &[0, 1]]).char_poly().unwrap();
        assert_eq!(c, vec![rat_int(1), rat_int(-2), rat_int(1)]);
    }

    #[test]
    fn char_poly_zero_3x3() {
        let c = m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).char_poly().unwrap();
        assert_eq!(c, vec![rat_int(0), rat_int(0), rat_int(0), rat_int(1)]);
    }

    #[test]
    fn char_poly_ad_h_sl2() {
        // diag(2, 0, -2): t(t-2)(t+2) = t^3 - 4t
        let c = m(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]).char_poly().unwrap();
        assert_eq!(c, vec![rat_int(0), rat_int(-4), rat_int(0), rat_int(1)]);
    }

    #[test]
    fn char_poly_rejects_non_square() {
        assert!(matches!(
            m(&[&[1, 2, 3], &[4, 5, 6]]).char_poly(),
            Err(LinAlgError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(m(&[&[1, 0], &[0, 1]]).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_zero_is_standard_basis() {
        let basis = m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { rat_int(1) } else { rat_int(0) });
            }
        }
    }

    #[test]
    fn kernel_ad_e_sl2() {
        // ad(e) in basis (e, h, f): e -> 0, h -> -2e, f -> h
        let ad_e = m(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]);
        let basis = ad_e.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn bareiss_det_matches_char_poly_constant_term() {
        // det(M) = (-1)^n c_0
        let a = m(&[&[2, 1, 0], &[1, 3, -1], &[0, 5, 7]]);
        let c = a.char_poly().unwrap();
        let det = det_bareiss(&a).unwrap();
        assert_eq!(det, -c[0].clone());
    }

    #[test]
    fn rational_formatting_round_trips() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/2").map(|r| format_rat(&r)).unwrap(), "2");
        assert!(parse_rat("1/0").is_none());
    }
}
