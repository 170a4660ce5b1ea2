//! Integer points of rational polyhedra by Fourier-Motzkin projection.
//!
//! The system is projected onto `x_1..x_k` for every `k`; the projections
//! give exact rational bounds for `x_k` once `x_1..x_{k-1}` are fixed, and a
//! recursive descent walks the integer points in lexicographic order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntVector;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `<normal, x> >= rhs`
    Ge,
    /// `<normal, x> = rhs`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub normal: IntVector,
    pub relation: Relation,
    pub rhs: BigInt,
}

impl Constraint {
    pub fn ge(normal: IntVector, rhs: impl Into<BigInt>) -> Self {
        Constraint { normal, relation: Relation::Ge, rhs: rhs.into() }
    }

    pub fn eq(normal: IntVector, rhs: impl Into<BigInt>) -> Self {
        Constraint { normal, relation: Relation::Eq, rhs: rhs.into() }
    }

    pub fn holds(&self, x: &IntVector) -> bool {
        let v = self.normal.dot(x);
        match self.relation {
            Relation::Ge => v >= self.rhs,
            Relation::Eq => v == self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticePoints {
    /// All integer points, lexicographically sorted.
    Points(Vec<IntVector>),
    Unbounded,
}

impl LatticePoints {
    pub fn points(&self) -> Option<&[IntVector]> {
        match self {
            LatticePoints::Points(p) => Some(p),
            LatticePoints::Unbounded => None,
        }
    }
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        InequalitySystem { dim, constraints: Vec::new() }
    }

    pub fn from_constraints(dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        let mut sys = Self::new(dim);
        for c in constraints {
            sys.push(c)?;
        }
        Ok(sys)
    }

    pub fn push(&mut self, c: Constraint) -> Result<()> {
        if c.normal.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: c.normal.dim() });
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    fn halfspaces(&self) -> Vec<Half> {
        let mut out = Vec::new();
        for c in &self.constraints {
            let h = Half { a: c.normal.coords().to_vec(), b: c.rhs.clone() };
            if c.relation == Relation::Eq {
                out.push(h.negated());
            }
            out.push(h);
        }
        out
    }

    /// Whether the system has a rational solution.
    pub fn is_feasible(&self) -> bool {
        feasible(self.halfspaces(), self.dim)
    }

    /// Whether the polyhedron, if nonempty, is bounded: its recession cone
    /// (same normals, zero right-hand sides) must be `{0}`.
    pub fn recession_cone_is_trivial(&self) -> bool {
        let homogeneous: Vec<Half> = self
            .halfspaces()
            .into_iter()
            .map(|h| Half { a: h.a, b: BigInt::zero() })
            .collect();
        for i in 0..self.dim {
            for s in [1i32, -1] {
                let mut sys = homogeneous.clone();
                let mut a = vec![BigInt::zero(); self.dim];
                a[i] = BigInt::from(s);
                sys.push(Half { a, b: BigInt::one() });
                if feasible(sys, self.dim) {
                    return false;
                }
            }
        }
        true
    }

    /// Every integer point in lexicographic order, or `Unbounded`.
    pub fn lattice_points(&self) -> LatticePoints {
        let levels = projections(self.halfspaces(), self.dim);
        if !levels[0].iter().all(Half::constant_holds) {
            return LatticePoints::Points(Vec::new());
        }
        if !self.recession_cone_is_trivial() {
            return LatticePoints::Unbounded;
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.dim);
        if !descend(&levels, &mut prefix, &mut out) {
            return LatticePoints::Unbounded;
        }
        debug_assert!(out.iter().all(|p| self.contains(p)));
        LatticePoints::Points(out)
    }
}

/// `<a, x> >= b`
#[derive(Clone, Debug, PartialEq, Eq)]
struct Half {
    a: Vec<BigInt>,
    b: BigInt,
}

impl Half {
    fn negated(&self) -> Half {
        Half { a: self.a.iter().map(|x| -x).collect(), b: -&self.b }
    }

    fn constant_holds(&self) -> bool {
        debug_assert!(self.a.iter().all(Zero::is_zero));
        self.b <= BigInt::zero()
    }

    /// Divides by the gcd of all coefficients; the rational solution set is unchanged.
    fn normalized(mut self) -> Half {
        let g = self.a.iter().fold(self.b.abs(), |g, x| g.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in self.a.iter_mut() {
                *x /= &g;
            }
            self.b /= &g;
        }
        self
    }
}

/// Deduplicates by normal, keeping the strongest right-hand side.
fn simplify(hs: Vec<Half>, dim: usize) -> Vec<Half> {
    let mut best: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    let mut trivial_ok = true;
    for h in hs.into_iter().map(Half::normalized) {
        if h.a.iter().all(Zero::is_zero) {
            trivial_ok &= h.constant_holds();
            continue;
        }
        best.entry(h.a)
            .and_modify(|b| {
                if h.b > *b {
                    *b = h.b.clone();
                }
            })
            .or_insert(h.b);
    }
    let mut out: Vec<Half> = best.into_iter().map(|(a, b)| Half { a, b }).collect();
    if !trivial_ok {
        out.push(Half { a: vec![BigInt::zero(); dim], b: BigInt::one() });
    }
    out
}

/// Eliminates variable `k` from a system in which variables `> k` are already gone.
fn eliminate(hs: &[Half], k: usize, dim: usize) -> Vec<Half> {
    let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for h in hs {
        if h.a[k].is_positive() {
            pos.push(h);
        } else if h.a[k].is_negative() {
            neg.push(h);
        } else {
            rest.push(h.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            // (-n_k) * p + p_k * n has zero k-th coefficient; both multipliers positive.
            let cp = -&n.a[k];
            let cn = &p.a[k];
            let a = p.a.iter().zip(&n.a).map(|(x, y)| &cp * x + cn * y).collect();
            let b = &cp * &p.b + cn * &n.b;
            rest.push(Half { a, b });
        }
    }
    simplify(rest, dim)
}

/// `levels[k]` constrains only `x_0..x_{k-1}`; `levels[dim]` is the input.
fn projections(hs: Vec<Half>, dim: usize) -> Vec<Vec<Half>> {
    let mut levels = vec![Vec::new(); dim + 1];
    levels[dim] = simplify(hs, dim);
    for k in (0..dim).rev() {
        levels[k] = eliminate(&levels[k + 1], k, dim);
    }
    levels
}

fn feasible(hs: Vec<Half>, dim: usize) -> bool {
    projections(hs, dim)[0].iter().all(Half::constant_holds)
}

/// Returns false if some coordinate lacks a bound (only possible for unbounded input).
fn descend(levels: &[Vec<Half>], prefix: &mut Vec<BigInt>, out: &mut Vec<IntVector>) -> bool {
    let k = prefix.len();
    if k + 1 == levels.len() {
        out.push(IntVector::new(prefix.clone()));
        return true;
    }
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for h in &levels[k + 1] {
        let c = &h.a[k];
        // c * x_k >= b - sum_{i<k} a_i x_i
        let r = prefix.iter().zip(&h.a).fold(h.b.clone(), |acc, (x, a)| acc - a * x);
        if c.is_zero() {
            if r.is_positive() {
                return true;
            }
        } else if c.is_positive() {
            let bound = r.div_ceil(c);
            if lo.as_ref().is_none_or(|l| bound > *l) {
                lo = Some(bound);
            }
        } else {
            let bound = r.div_floor(c);
            if hi.as_ref().is_none_or(|u| bound < *u) {
                hi = Some(bound);
            }
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return false;
    };
    let mut x = lo;
    while x <= hi {
        prefix.push(x.clone());
        let ok = descend(levels, prefix, out);
        prefix.pop();
        if !ok {
            return false;
        }
        x += 1;
    }
    true
}
