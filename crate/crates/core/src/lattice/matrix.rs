use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntVector;
use crate::error::{Error, Result};

/// Dense integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    /// Builds a matrix from rows; all rows must share one length.
    pub fn new(rows: Vec<IntVector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, IntVector::dim);
        Self::with_cols(rows, ncols)
    }

    /// Like [`IntMatrix::new`] but keeps the column count for matrices without rows.
    pub fn with_cols(rows: Vec<IntVector>, ncols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, got: r.dim() });
        }
        Ok(IntMatrix { rows, ncols })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| IntVector::from(*r)).collect()).expect("ragged rows")
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix { rows: (0..n).map(|i| IntVector::unit(n, i)).collect(), ncols: n }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { rows: vec![IntVector::zero(ncols); nrows], ncols }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVector], nrows: usize) -> Result<Self> {
        Ok(Self::with_cols(cols.to_vec(), nrows)?.transpose())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector::new(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix {
            rows: (0..self.ncols).map(|j| self.column(j)).collect(),
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols, got: other.nrows() });
        }
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| IntVector::new(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Ok(IntMatrix { rows, ncols: other.ncols })
    }

    /// `self * v` with `v` as a column vector.
    pub fn apply(&self, v: &IntVector) -> IntVector {
        assert_eq!(self.ncols, v.dim(), "matrix/vector dimension mismatch");
        IntVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.nrows(), cols: self.ncols });
        }
        let n = self.nrows();
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn rank(&self) -> usize {
        rref(&self.to_rational(), self.ncols).1.len()
    }

    /// Integer basis of `{x : self * x = 0}`, each vector primitive.
    pub fn kernel(&self) -> Vec<IntVector> {
        let (r, pivots) = rref(&self.to_rational(), self.ncols);
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.ncols];
                x[f] = BigRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -r[row][f].clone();
                }
                clear_denominators(&x)
            })
            .collect()
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        let n = self.nrows();
        let aug: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                    .collect()
            })
            .collect();
        let (r, _) = rref(&aug, n);
        let rows = r
            .into_iter()
            .map(|row| {
                IntVector::new(row[n..].iter().map(|q| {
                    debug_assert!(q.is_integer());
                    q.to_integer()
                }).collect())
            })
            .collect();
        Ok(IntMatrix { rows, ncols: n })
    }

    fn to_rational(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of vectors of common dimension `dim`.
pub fn rank_of(vectors: &[IntVector], dim: usize) -> usize {
    IntMatrix::with_cols(vectors.to_vec(), dim).map(|m| m.rank()).unwrap_or(0)
}

/// Dual basis `q_1..q_n` with `<p_i, q_j> = delta_ij` for a unimodular basis.
pub fn dual_basis(basis: &[IntVector]) -> Result<Vec<IntVector>> {
    let m = IntMatrix::new(basis.to_vec())?;
    let inv = m.inverse_unimodular()?;
    Ok((0..inv.ncols()).map(|j| inv.column(j)).collect())
}

/// Reduced row echelon form over Q; returns the reduced rows (zero rows dropped)
/// and the pivot column of each.
pub(crate) fn rref(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let v = &a[r][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub(crate) fn clear_denominators(x: &[BigRational]) -> IntVector {
    let l = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let v = IntVector::new(x.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect());
    v.primitive().unwrap_or(v)
}
