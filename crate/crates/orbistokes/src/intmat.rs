//! Small exact integer matrices.
//!
//! Euler matrices, Stokes matrices and lattice Gram forms are all square
//! integer matrices of rank at most ~10, and every structural claim about
//! them (unimodularity, triangularity, Coxeter polynomial) must be exact.
//! Determinants and characteristic polynomials therefore run over
//! big integers / big rationals, never floats.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat { n, rows: vec![vec![0; n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMat { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.rows[j][i] = self.rows[i][j];
            }
        }
        t
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.n, other.n);
        let mut r = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                r.rows[i][j] += other.rows[i][j];
            }
        }
        r
    }

    pub fn neg(&self) -> IntMat {
        let mut r = self.clone();
        for row in &mut r.rows {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        r
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.n, other.n);
        let mut r = Self::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.rows[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..self.n {
                    r.rows[i][j] = r.rows[i][j]
                        .checked_add(a.checked_mul(other.rows[k][j]).expect("intmat mul overflow"))
                        .expect("intmat mul overflow");
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_upper_triangular_unit_diagonal(&self) -> bool {
        for i in 0..self.n {
            if self.rows[i][i] != 1 {
                return false;
            }
            for j in 0..i {
                if self.rows[i][j] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.rows[i][j] != self.rows[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant (fraction-free over big rationals).
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                return BigInt::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pv = m[col][col].clone();
            det *= pv.clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &pv;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        assert!(det.is_integer(), "integer matrix determinant must be integral");
        det.to_integer()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(p, rank);
            let pv = m[rank][col].clone();
            for r in 0..n {
                if r == rank || m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &pv;
                for c in col..n {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse of an upper triangular matrix with unit diagonal.
    /// Such inverses are again integral upper triangular.
    pub fn inverse_unitriangular(&self) -> IntMat {
        assert!(
            self.is_upper_triangular_unit_diagonal(),
            "inverse_unitriangular on a matrix that is not unit upper triangular"
        );
        let n = self.n;
        let mut inv = Self::identity(n);
        // back substitution, column by column of the inverse
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc: i64 = 0;
                for k in i + 1..=j {
                    acc = acc
                        .checked_add(
                            self.rows[i][k]
                                .checked_mul(inv.rows[k][j])
                                .expect("unitriangular inverse overflow"),
                        )
                        .expect("unitriangular inverse overflow");
                }
                inv.rows[i][j] = -acc;
            }
        }
        inv
    }

    /// Characteristic polynomial coefficients of `self`, exact, by
    /// Faddeev–LeVerrier. Returned lowest degree first:
    /// `p(x) = c[0] + c[1] x + ... + c[n] x^n` with `c[n] = 1`.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.n;
        let a: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| {
            let mut r = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if x[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let add = &x[i][k] * &y[k][j];
                        r[i][j] = &r[i][j] + &add;
                    }
                }
            }
            r
        };
        let trace = |x: &Vec<Vec<BigRational>>| {
            let mut t = BigRational::zero();
            for i in 0..n {
                t = &t + &x[i][i];
            }
            t
        };
        // p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = vec![vec![BigRational::zero(); n]; n]; // M_0 = 0
        let mut c_prev = BigRational::one();
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            for i in 0..n {
                m[i][i] = &m[i][i] + &c_prev;
            }
            m = mul(&a, &m);
            let c = -(trace(&m) / BigRational::from_integer(BigInt::from(k as i64)));
            coeffs[n - k] = c.clone();
            c_prev = c;
        }
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "char poly of an integer matrix must be integral");
                c.to_integer()
            })
            .collect()
    }

    /// Maximum absolute entry.
    pub fn max_abs(&self) -> i64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|v| v.abs())
            .max()
            .unwrap_or(0)
    }

    /// Plain aligned text rendering (one bracketed row per line).
    pub fn to_aligned_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            out.push('[');
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{v:>width$}"));
            }
            out.push_str("]\n");
        }
        out
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_aligned_text())
    }
}

/// Render a characteristic polynomial (lowest degree first) as text in `x`.
pub fn poly_to_string(coeffs: &[BigInt]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match k {
            0 => format!("{mag}"),
            1 => {
                if mag.is_one() {
                    "x".to_string()
                } else {
                    format!("{mag}*x")
                }
            }
            _ => {
                if mag.is_one() {
                    format!("x^{k}")
                } else {
                    format!("{mag}*x^{k}")
                }
            }
        };
        if terms.is_empty() {
            terms.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            terms.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" ")
    }
}
