//! Exact rational scalars, vectors and matrices.
//!
//! This is the arithmetic substrate for the whole crate: arbitrary-precision
//! rationals (`num`'s `BigRational`), fixed-length coordinate vectors, and
//! dense row-major matrices with exact rank/nullspace computations. Rank is
//! computed by fraction-free (integer-pivot) Gaussian elimination to keep
//! intermediate entries from exploding; nullspace bases use plain rational
//! Gauss–Jordan, which is fine at the sizes we handle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Text form is `p/q`, or just `p` when the denominator is 1.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Parse the `p/q` (or plain `p`) text syntax used by all file formats.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("invalid rational {s:?}: {e}"),
    })
}

/// A fixed-length vector of rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        RatVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot of unequal lengths");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len());
        RatVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len());
        RatVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    /// Concatenate two coordinate vectors.
    pub fn concat(&self, other: &RatVector) -> RatVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        RatVector(v)
    }

    /// Keep only the listed coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> RatVector {
        RatVector(coords.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Scale to a primitive integer vector (content 1). The zero vector is
    /// returned unchanged. The sign of the leading nonzero entry is kept.
    pub fn to_primitive_integer(&self) -> Vec<Int> {
        let lcm = self
            .0
            .iter()
            .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<Int> = self.0.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        let content = ints
            .iter()
            .fold(Int::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.iter().map(|x| x / &content).collect()
        }
    }
}

impl std::ops::Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl std::fmt::Debug for RatVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(
                "matrix rows of unequal length".into(),
            ));
        }
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            data.extend(r.0);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Exact rank over the rationals, by fraction-free (Bareiss) elimination
    /// on the integer matrix obtained from clearing denominators row-wise.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Int>> = (0..self.rows).map(|r| clear_row(self.row(r))).collect();
        integer_rank(&mut m, self.cols)
    }

    /// Dimension of the right-nullspace: `cols - rank`. Callers that need
    /// the left-nullspace transpose first.
    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right-nullspace `{x : Mx = 0}`, via rational
    /// Gauss–Jordan. The basis vectors correspond to the free columns.
    pub fn nullspace_basis(&self) -> Vec<RatVector> {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for j in c..self.cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        m[i][j] = &m[i][j] - &f * &m[r][j];
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (pi, &pc) in pivot_cols.iter().enumerate() {
                x[pc] = -m[pi][free].clone();
            }
            basis.push(RatVector(x));
        }
        basis
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &RatVector) -> RatVector {
        assert_eq!(self.cols, x.len());
        RatVector(
            (0..self.rows)
                .map(|r| {
                    self.row(r)
                        .iter()
                        .zip(x.iter())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }
}

/// Clear denominators of one row, returning an integer row that spans the
/// same line (row scaling does not change rank).
fn clear_row(row: &[Rational]) -> Vec<Int> {
    let lcm = row.iter().fold(Int::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

/// Fraction-free Gaussian elimination on an integer matrix; returns the rank.
/// Divisions by the previous pivot are exact by Sylvester's identity, also
/// when structurally zero columns are skipped.
fn integer_rank(m: &mut [Vec<Int>], cols: usize) -> usize {
    let rows = m.len();
    let mut prev = Int::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = Int::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Dimension of the affine hull of a point set. A single point has affine
/// dimension 0.
pub fn affine_dim(points: &[RatVector]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::Degenerate("affine_dim of an empty point set".into()));
    };
    if points.iter().any(|p| p.len() != first.len()) {
        return Err(Error::DimensionMismatch(
            "points of unequal ambient dimension".into(),
        ));
    }
    let mut diffs: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| clear_row(p.sub(first).as_slice()))
        .collect();
    Ok(integer_rank(&mut diffs, first.len()))
}

/// Indices of an independent column subset realizing the full rank of the
/// difference matrix of `points` (pivot columns of a row-echelon pass).
/// Projecting the points onto these coordinates is an affine isomorphism of
/// the affine hull.
pub fn independent_coordinates(points: &[RatVector]) -> Result<Vec<usize>> {
    let Some(first) = points.first() else {
        return Err(Error::Degenerate("empty point set".into()));
    };
    let cols = first.len();
    let mut m: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| clear_row(p.sub(first).as_slice()))
        .collect();
    let rows = m.len();
    let mut prev = Int::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = Int::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}
