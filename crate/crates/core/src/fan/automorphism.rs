use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Fan;
use crate::error::{Error, Result};
use crate::lattice::{rank_of, rref, IntMatrix, IntVector};

/// A unimodular linear map of `N`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeAutomorphism(IntMatrix);

impl LatticeAutomorphism {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let det = matrix.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(LatticeAutomorphism(matrix))
    }

    pub fn identity(dim: usize) -> Self {
        LatticeAutomorphism(IntMatrix::identity(dim))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn apply(&self, p: &IntVector) -> IntVector {
        self.0.apply(p)
    }

    pub fn inverse(&self) -> LatticeAutomorphism {
        LatticeAutomorphism(self.0.inverse_unimodular().expect("unimodular"))
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &LatticeAutomorphism) -> LatticeAutomorphism {
        LatticeAutomorphism(self.0.mul(&first.0).expect("matching dims"))
    }

    /// The induced map on `M`, chosen so that pairings are preserved:
    /// `<g p, g*(e)> = <p, e>`, i.e. `g*(e) = (g^-1)^T e`.
    pub fn transport_dual(&self, e: &IntVector) -> IntVector {
        self.inverse().0.transpose().apply(e)
    }
}

/// Searches for a lattice automorphism carrying fan `a` onto fan `b`.
///
/// A maximal linearly independent set of rays of `a` is sent to every ordered
/// tuple of rays of `b`; each candidate map is solved exactly and kept when
/// it is integral, unimodular and maps rays and maximal cones onto `b`'s.
pub fn find_isomorphism(a: &Fan, b: &Fan) -> Option<LatticeAutomorphism> {
    let n = a.dim();
    if n != b.dim() || a.rays().len() != b.rays().len() || a.max_cones().len() != b.max_cones().len() {
        return None;
    }
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..a.rays().len() {
        let mut trial: Vec<IntVector> = basis.iter().map(|&j| a.ray(j).clone()).collect();
        trial.push(a.ray(i).clone());
        if rank_of(&trial, n) == trial.len() {
            basis.push(i);
        }
    }
    if basis.len() != n {
        return None;
    }
    let source = IntMatrix::from_columns(&basis.iter().map(|&i| a.ray(i).clone()).collect::<Vec<_>>(), n).ok()?;
    let source_inv = rational_inverse(&source)?;
    for images in (0..b.rays().len()).permutations(n) {
        let target =
            IntMatrix::from_columns(&images.iter().map(|&i| b.ray(i).clone()).collect::<Vec<_>>(), n).ok()?;
        let Some(m) = integral_product(&target, &source_inv) else { continue };
        let Ok(g) = LatticeAutomorphism::new(m) else { continue };
        if a.ray_map_onto(b, |p| g.apply(p)).is_some() {
            return Some(g);
        }
    }
    None
}

fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = m.nrows();
    let aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();
    let (r, pivots) = rref(&aug, n);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn integral_product(a: &IntMatrix, b: &[Vec<BigRational>]) -> Option<IntMatrix> {
    let n = a.nrows();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..b[0].len() {
            let s = (0..a.ncols()).fold(BigRational::zero(), |acc, k| {
                acc + BigRational::from_integer(a.get(i, k).clone()) * &b[k][j]
            });
            if !s.is_integer() {
                return None;
            }
            row.push(s.to_integer());
        }
        rows.push(IntVector::new(row));
    }
    IntMatrix::new(rows).ok()
}
