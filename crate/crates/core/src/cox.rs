//! Cox ring grading and explicit additive actions in Cox coordinates.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::additive::CompleteCollection;
use crate::demazure::derivation;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{hermite_normal_form, smith_normal_form, IntMatrix, IntVector};
use crate::poly::render_monomial;

/// One variable per ray, graded by the free part of the class group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxPresentation {
    num_vars: usize,
    class_rank: usize,
    degrees: Vec<IntVector>,
    torsion: Vec<BigInt>,
}

impl CoxPresentation {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Rank of the free part of the class group, `m - n`.
    pub fn class_rank(&self) -> usize {
        self.class_rank
    }

    /// Degree of each Cox variable in `Z^(m-n)`, in ray order.
    pub fn degrees(&self) -> &[IntVector] {
        &self.degrees
    }

    pub fn degree_of_var(&self, i: usize) -> &IntVector {
        &self.degrees[i]
    }

    /// Invariant factors of the class group greater than one.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The `(m-n) x m` matrix whose columns are the degrees.
    pub fn degree_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.degrees, self.class_rank).expect("degrees share one length")
    }

    /// Degree of the monomial with the given exponents.
    pub fn monomial_degree(&self, exponents: &[BigUint]) -> IntVector {
        let mut total = IntVector::zero(self.class_rank);
        for (e, d) in exponents.iter().zip(&self.degrees) {
            total = &total + &(d * &BigInt::from(e.clone()));
        }
        total
    }
}

/// The class group `Z^m / im(N^* -> Z^m)` via the Smith form of the ray
/// matrix. The free part's basis is normalized so that the degree matrix is
/// in Hermite normal form, which makes the output independent of pivoting.
pub fn cox_presentation(fan: &Fan) -> Result<CoxPresentation> {
    let n = fan.dim();
    let m = fan.rays().len();
    let rays = IntMatrix::with_cols(fan.rays().to_vec(), n)?;
    let snf = smith_normal_form(&rays);
    let factors = snf.invariant_factors();
    if factors.len() < n {
        return Err(Error::RaysDoNotSpan);
    }
    let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
    let free = IntMatrix::with_cols(snf.u.rows()[n..].to_vec(), m)?;
    let canonical = hermite_normal_form(&free);
    let degrees = (0..m).map(|j| canonical.column(j)).collect();
    Ok(CoxPresentation { num_vars: m, class_rank: m - n, degrees, torsion })
}

/// `x_t -> x_t + s_k * monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaActionRule {
    pub target: usize,
    /// 1-based index of the parameter `s_k`.
    pub parameter: usize,
    /// Exponents of all Cox variables; the target's entry is zero.
    pub exponents: Vec<BigUint>,
}

impl fmt::Display for GaActionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.target + 1;
        let m = render_monomial(&self.exponents);
        if m.is_empty() {
            write!(f, "x{x} -> x{x} + s{}", self.parameter)
        } else {
            write!(f, "x{x} -> x{x} + s{}*{m}", self.parameter)
        }
    }
}

/// The additive action of a complete collection, one rule per root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaActionFormula {
    pub rules: Vec<GaActionRule>,
}

impl GaActionFormula {
    pub fn rendered(&self) -> Vec<String> {
        self.rules.iter().map(ToString::to_string).collect()
    }
}

pub fn action_formulas(c: &CompleteCollection) -> GaActionFormula {
    let rules = c
        .roots()
        .iter()
        .enumerate()
        .map(|(k, root)| {
            let d = derivation(root);
            GaActionRule { target: d.target(), parameter: k + 1, exponents: d.exponents().to_vec() }
        })
        .collect();
    GaActionFormula { rules }
}

/// Whether every rule is homogeneous: the monomial has the target's degree.
pub fn degree_zero_check(p: &CoxPresentation, f: &GaActionFormula) -> Result<bool> {
    if !p.is_free() {
        return Err(Error::TorsionClassGroup(p.torsion.iter().map(ToString::to_string).collect()));
    }
    Ok(f.rules.iter().all(|r| {
        r.exponents.len() == p.num_vars
            && r.exponents[r.target].is_zero()
            && p.monomial_degree(&r.exponents) == *p.degree_of_var(r.target)
    }))
}
