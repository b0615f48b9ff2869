//! Exact rational matrices and the elimination kernel behind every rank,
//! kernel and solve in the crate.
//!
//! Elimination runs fraction-free (Bareiss) on an integer copy of the
//! matrix: each row is first cleared of denominators, then every update
//! `a[i][j] <- (p * a[i][j] - a[i][c] * a[r][j]) / prev` divides exactly.
//! Rational arithmetic only reappears in back substitution.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: exact rationals over arbitrary-precision integers.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| c * x).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: c,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix literal")
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: "matrix column length",
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Matrix product; errors on inner-dimension mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: add_vec(&self.entries, &other.entries),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: sub_vec(&self.entries, &other.entries),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: scale_vec(c, &self.entries),
        }
    }

    /// `[self; other]`, stacking rows.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical stack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row echelon form produced by fraction-free elimination.
///
/// Rows `0..rank` are the nonzero echelon rows (integer entries); `pivots[k]`
/// is the pivot column of row `k`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect()
        })
        .collect()
}

/// Bareiss elimination with row pivoting and column skipping.
pub fn echelon(m: &RatMatrix) -> Echelon {
    let mut a = integer_rows(m);
    let nrows = a.len();
    let ncols = m.cols;
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // smallest nonzero pivot keeps the integers a little tamer
        let Some(p) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs())
        else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division not exact");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        cols: ncols,
        rows: a,
        pivots,
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    echelon(m).rank()
}

/// Back substitution on an echelon form: returns x with `E x = rhs`
/// (restricted to the echelon rows), free variables taken from `free_values`.
fn back_substitute(
    e: &Echelon,
    rhs: &[Rational],
    free_values: &[(usize, Rational)],
) -> Vec<Rational> {
    let mut x = zero_vec(e.cols);
    for (j, v) in free_values {
        x[*j] = v.clone();
    }
    for k in (0..e.rank()).rev() {
        let pc = e.pivots[k];
        let row = &e.rows[k];
        let mut acc = rhs[k].clone();
        for j in pc + 1..e.cols {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Rational::from_integer(row[pc].clone());
    }
    x
}

fn free_columns(e: &Echelon) -> Vec<usize> {
    let mut is_pivot = vec![false; e.cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..e.cols).filter(|&j| !is_pivot[j]).collect()
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|x| Rational::from_integer(x * &sign / &g))
        .collect()
}

/// Basis of the right null space, one vector per free column (that column
/// set to 1, the other free columns to 0), each scaled to a primitive integer
/// vector.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let e = echelon(m);
    let zeros = zero_vec(e.rank());
    free_columns(&e)
        .into_iter()
        .map(|f| primitive(&back_substitute(&e, &zeros, &[(f, Rational::one())])))
        .collect()
}

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// One particular solution (free variables set to zero).
    Particular(Vec<Rational>),
    Inconsistent,
}

impl Solution {
    pub fn into_option(self) -> Option<Vec<Rational>> {
        match self {
            Solution::Particular(x) => Some(x),
            Solution::Inconsistent => None,
        }
    }
}

/// Solves `m x = b`.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Solution> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            context: "solve right-hand side",
            expected: m.rows,
            found: b.len(),
        });
    }
    let mut aug = RatMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let e = echelon(&aug);
    if e.pivots.last() == Some(&m.cols) {
        return Ok(Solution::Inconsistent);
    }
    // split the augmented echelon back into coefficient part and rhs
    let rhs: Vec<Rational> = e
        .rows
        .iter()
        .map(|row| Rational::from_integer(row[m.cols].clone()))
        .collect();
    let coeff = Echelon {
        cols: m.cols,
        rows: e.rows.iter().map(|r| r[..m.cols].to_vec()).collect(),
        pivots: e.pivots.clone(),
    };
    Ok(Solution::Particular(back_substitute(&coeff, &rhs, &[])))
}

/// A particular solution together with a basis of the homogeneous solutions.
pub type AffineSolution = (Vec<Rational>, Vec<Vec<Rational>>);

/// Solves and also returns the homogeneous solution basis, i.e. the full
/// affine solution set `x + span(kernel)`.
pub fn solve_affine(
    m: &RatMatrix,
    b: &[Rational],
) -> Result<Option<AffineSolution>> {
    Ok(match solve(m, b)? {
        Solution::Particular(x) => Some((x, kernel_basis(m))),
        Solution::Inconsistent => None,
    })
}

/// Rank of the column span of `vectors` (each of the same length).
pub fn span_rank(len: usize, vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&RatMatrix::from_columns(len, vectors).expect("ragged vectors"))
}
