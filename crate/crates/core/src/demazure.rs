//! Demazure roots of a fan and the homogeneous derivations they define.
//!
//! A root with distinguished ray `rho` is a vector `e` of `M` with
//! `<p_rho, e> = -1`, `<p_rho', e> >= 0` for every other ray, and such that
//! whenever `e` vanishes on a cone `sigma` of the fan, the cone generated by
//! `sigma` and `rho` is again in the fan. The second condition is always
//! checked explicitly, even for complete fans where it follows from the first.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{Constraint, InequalitySystem, IntVector, LatticePoints};
use crate::poly::{render_monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DemazureRoot {
    e: IntVector,
    ray: usize,
    pairings: Vec<BigInt>,
}

impl DemazureRoot {
    /// Checks both root conditions.
    pub fn new(fan: &Fan, ray: usize, e: IntVector) -> Result<Self> {
        check_ray(fan, ray)?;
        if e.dim() != fan.dim() {
            return Err(Error::DimensionMismatch { expected: fan.dim(), got: e.dim() });
        }
        if !is_root(fan, ray, &e) {
            return Err(Error::NotARoot { ray, vector: e.to_string() });
        }
        Ok(Self::unchecked(fan, ray, e))
    }

    fn unchecked(fan: &Fan, ray: usize, e: IntVector) -> Self {
        let pairings = fan.rays().iter().map(|p| p.dot(&e)).collect();
        DemazureRoot { e, ray, pairings }
    }

    pub fn e(&self) -> &IntVector {
        &self.e
    }

    /// Index of the distinguished ray.
    pub fn ray(&self) -> usize {
        self.ray
    }

    /// `<p_rho, e>` for every ray `rho`, in ray order.
    pub fn pairings(&self) -> &[BigInt] {
        &self.pairings
    }

    pub fn pairing(&self, ray: usize) -> &BigInt {
        &self.pairings[ray]
    }
}

impl fmt::Display for DemazureRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ray, self.e)
    }
}

/// Roots with one distinguished ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsForRay {
    Finite(Vec<DemazureRoot>),
    Infinite,
    /// The set is infinite; these are the roots of sup-norm at most `bound`.
    Truncated { bound: BigInt, roots: Vec<DemazureRoot> },
}

impl RootsForRay {
    pub fn listed(&self) -> &[DemazureRoot] {
        match self {
            RootsForRay::Finite(r) | RootsForRay::Truncated { roots: r, .. } => r,
            RootsForRay::Infinite => &[],
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RootsForRay::Finite(_))
    }
}

/// Roots of a fan grouped by distinguished ray, in ray order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    per_ray: Vec<RootsForRay>,
}

impl RootSet {
    pub fn per_ray(&self) -> &[RootsForRay] {
        &self.per_ray
    }

    pub fn is_finite(&self) -> bool {
        self.per_ray.iter().all(RootsForRay::is_finite)
    }

    /// Every listed root, grouped by ray and sorted within each group.
    pub fn roots(&self) -> impl Iterator<Item = &DemazureRoot> {
        self.per_ray.iter().flat_map(RootsForRay::listed)
    }

    pub fn len(&self) -> usize {
        self.roots().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_ray(fan: &Fan, ray: usize) -> Result<()> {
    if ray >= fan.rays().len() {
        return Err(Error::BadParams(format!("ray index {ray} out of range ({} rays)", fan.rays().len())));
    }
    Ok(())
}

/// The system `<p_ray, e> = -1`, `<p_other, e> >= 0`.
pub fn condition_one_system(fan: &Fan, ray: usize) -> InequalitySystem {
    let constraints = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, p)| if i == ray { Constraint::eq(p.clone(), -1) } else { Constraint::ge(p.clone(), 0) })
        .collect();
    InequalitySystem::from_constraints(fan.dim(), constraints).expect("fan rays share the fan dimension")
}

pub fn satisfies_condition_one(fan: &Fan, ray: usize, e: &IntVector) -> bool {
    condition_one_system(fan, ray).contains(e)
}

pub fn satisfies_condition_two(fan: &Fan, ray: usize, e: &IntVector) -> bool {
    fan.faces().iter().all(|sigma| {
        if !sigma.rays().iter().all(|&r| fan.ray(r).dot(e).is_zero()) {
            return true;
        }
        let mut extended = sigma.rays().to_vec();
        if !extended.contains(&ray) {
            extended.push(ray);
        }
        fan.generates_face(&extended)
    })
}

pub fn is_root(fan: &Fan, ray: usize, e: &IntVector) -> bool {
    ray < fan.rays().len() && satisfies_condition_one(fan, ray, e) && satisfies_condition_two(fan, ray, e)
}

/// Roots with distinguished ray `ray`. Unbounded root polyhedra yield
/// `Infinite`, or `Truncated` when a sup-norm `bound` is supplied.
pub fn roots_for_ray(fan: &Fan, ray: usize, bound: Option<&BigInt>) -> Result<RootsForRay> {
    check_ray(fan, ray)?;
    if let Some(b) = bound {
        if !b.is_positive() {
            return Err(Error::BadParams(format!("bound must be positive, got {b}")));
        }
    }
    let sys = condition_one_system(fan, ray);
    let keep = |points: Vec<IntVector>| -> Vec<DemazureRoot> {
        points
            .into_iter()
            .filter(|e| satisfies_condition_two(fan, ray, e))
            .map(|e| DemazureRoot::unchecked(fan, ray, e))
            .collect()
    };
    match sys.lattice_points() {
        LatticePoints::Points(p) => Ok(RootsForRay::Finite(keep(p))),
        LatticePoints::Unbounded => match bound {
            None => Ok(RootsForRay::Infinite),
            Some(b) => {
                let mut boxed = sys;
                for i in 0..fan.dim() {
                    let u = IntVector::unit(fan.dim(), i);
                    boxed.push(Constraint::ge(u.clone(), -b))?;
                    boxed.push(Constraint::ge(-u, -b))?;
                }
                let points = boxed.lattice_points().points().expect("boxed system is bounded").to_vec();
                Ok(RootsForRay::Truncated { bound: b.clone(), roots: keep(points) })
            }
        },
    }
}

pub fn all_roots(fan: &Fan, bound: Option<&BigInt>) -> Result<RootSet> {
    let per_ray = (0..fan.rays().len()).map(|r| roots_for_ray(fan, r, bound)).collect::<Result<_>>()?;
    Ok(RootSet { per_ray })
}

/// Whether the derivations of two roots commute: same distinguished ray, or
/// each root vanishes on the other's distinguished ray.
pub fn commute(a: &DemazureRoot, b: &DemazureRoot) -> bool {
    a.ray == b.ray || (b.pairing(a.ray).is_zero() && a.pairing(b.ray).is_zero())
}

/// `prod_{rho' != rho} x_rho'^{<p_rho', e>} d/dx_rho` on the Cox ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxDerivation {
    target: usize,
    exponents: Vec<BigUint>,
}

impl CoxDerivation {
    pub fn target(&self) -> usize {
        self.target
    }

    /// Exponent of every Cox variable in the coefficient monomial; the
    /// target's own entry is zero.
    pub fn exponents(&self) -> &[BigUint] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn monomial(&self) -> String {
        render_monomial(&self.exponents)
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.partial(self.target).mul_monomial(&self.exponents)
    }
}

impl fmt::Display for CoxDerivation {
    /// `x1^2*x2 d/dx4`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.monomial();
        if m.is_empty() {
            write!(f, "d/dx{}", self.target + 1)
        } else {
            write!(f, "{m} d/dx{}", self.target + 1)
        }
    }
}

pub fn derivation(root: &DemazureRoot) -> CoxDerivation {
    let exponents = root
        .pairings
        .iter()
        .enumerate()
        .map(|(i, c)| if i == root.ray { BigUint::zero() } else { c.to_biguint().expect("nonnegative pairing") })
        .collect();
    CoxDerivation { target: root.ray, exponents }
}

/// Independent commutation test: expands `D_a D_b x_j` and `D_b D_a x_j`
/// symbolically for every Cox variable.
pub fn bracket_oracle(a: &CoxDerivation, b: &CoxDerivation) -> bool {
    let m = a.num_vars();
    (0..m).all(|j| {
        let x = Polynomial::variable(m, j);
        a.apply(&b.apply(&x)) == b.apply(&a.apply(&x))
    })
}

/// A pair `(facet, cone)` of cones of the fan, by ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConePair {
    pub facet: Vec<usize>,
    pub cone: Vec<usize>,
    pub facet_dim: usize,
    pub cone_dim: usize,
}

/// Pairs `(sigma1, sigma2)` with `e <= 0` on `sigma2`, `e` not identically
/// zero there, and `sigma1` the facet of `sigma2` cut out by `<., e> = 0`.
pub fn he_connected_pairs(fan: &Fan, root: &DemazureRoot) -> Vec<ConePair> {
    let mut out = Vec::new();
    for sigma in fan.faces() {
        let vals: Vec<&BigInt> = sigma.rays().iter().map(|&r| root.pairing(r)).collect();
        if vals.iter().any(|v| v.is_positive()) || vals.iter().all(|v| v.is_zero()) {
            continue;
        }
        let facet: Vec<usize> =
            sigma.rays().iter().copied().filter(|&r| root.pairing(r).is_zero()).collect();
        let Some(face) = fan.find_face(&facet) else { continue };
        if face.dim() + 1 == sigma.dim() {
            out.push(ConePair { facet, cone: sigma.rays().to_vec(), facet_dim: face.dim(), cone_dim: sigma.dim() });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::builtin;

    fn root(fan: &Fan, ray: usize, e: [i64; 2]) -> DemazureRoot {
        DemazureRoot::new(fan, ray, e.into()).unwrap()
    }

    #[test]
    fn hirzebruch_bottom_ray() {
        for d in 1..=4 {
            let f = builtin::hirzebruch(d).unwrap();
            let RootsForRay::Finite(r) = roots_for_ray(&f, 3, None).unwrap() else { panic!() };
            let es: Vec<IntVector> = r.iter().map(|x| x.e().clone()).collect();
            let expected: Vec<IntVector> = (0..=d).map(|k| IntVector::from([k, 1])).collect();
            assert_eq!(es, expected);
        }
    }

    #[test]
    fn affine_plane_is_infinite() {
        let f = builtin::affine_space(2).unwrap();
        assert_eq!(roots_for_ray(&f, 0, None).unwrap(), RootsForRay::Infinite);
        let RootsForRay::Truncated { roots, .. } = roots_for_ray(&f, 0, Some(&BigInt::from(2))).unwrap() else {
            panic!()
        };
        let es: Vec<String> = roots.iter().map(|r| r.e().to_string()).collect();
        assert_eq!(es, vec!["(-1,0)", "(-1,1)", "(-1,2)"]);
    }

    #[test]
    fn projective_plane_first_ray() {
        let f = builtin::projective_space(2).unwrap();
        let r = roots_for_ray(&f, 0, None).unwrap();
        let es: Vec<IntVector> = r.listed().iter().map(|x| x.e().clone()).collect();
        assert_eq!(es, vec![IntVector::from([-1, 0]), IntVector::from([-1, 1])]);
        assert_eq!(all_roots(&f, None).unwrap().len(), 6);
    }

    #[test]
    fn product_of_lines() {
        let f = builtin::product_p1(2).unwrap();
        let all = all_roots(&f, None).unwrap();
        let listed: Vec<String> = all.roots().map(|r| r.to_string()).collect();
        assert_eq!(listed, vec!["0:(-1,0)", "1:(1,0)", "2:(0,-1)", "3:(0,1)"]);
    }

    #[test]
    fn commutation_examples() {
        let d = 3;
        let f = builtin::hirzebruch(d).unwrap();
        let a = root(&f, 2, [1, 0]);
        let b = root(&f, 3, [d, 1]);
        let c = root(&f, 3, [1, 1]);
        let neg = root(&f, 0, [-1, 0]);
        assert!(commute(&a, &b));
        assert!(commute(&b, &c));
        assert!(!commute(&a, &neg));
        for (x, y) in [(&a, &b), (&b, &c), (&a, &neg), (&a, &a)] {
            assert_eq!(commute(x, y), bracket_oracle(&derivation(x), &derivation(y)));
        }
    }

    #[test]
    fn derivation_rendering() {
        let f = builtin::hirzebruch(3).unwrap();
        assert_eq!(derivation(&root(&f, 3, [1, 1])).to_string(), "x1*x2*x3^2 d/dx4");
        assert_eq!(derivation(&root(&f, 3, [0, 1])).to_string(), "x2*x3^3 d/dx4");
        assert_eq!(derivation(&root(&f, 2, [1, 0])).to_string(), "x1 d/dx3");
        let p2 = builtin::projective_space(2).unwrap();
        assert_eq!(derivation(&root(&p2, 0, [-1, 0])).to_string(), "x3 d/dx1");
        let k2 = builtin::affine_space(2).unwrap();
        assert_eq!(derivation(&root(&k2, 0, [-1, 0])).to_string(), "d/dx1");
        assert_eq!(derivation(&root(&k2, 0, [-1, 4])).to_string(), "x2^4 d/dx1");
    }

    #[test]
    fn rejects_non_roots() {
        let f = builtin::projective_space(2).unwrap();
        assert!(matches!(DemazureRoot::new(&f, 0, [-1, 2].into()), Err(Error::NotARoot { .. })));
        assert!(DemazureRoot::new(&f, 7, [-1, 0].into()).is_err());
    }

    #[test]
    fn condition_two_matters_for_incomplete_fans() {
        // P^2 with the cone {(0,1),(-1,-1)} removed
        let f = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[0, 2]]).unwrap();
        // e = (0,-1): -1 on ray 1, 1 on ray 2, 0 on ray 0; cone {0} + ray 1 = {0,1} is in the fan
        assert!(is_root(&f, 1, &[0, -1].into()));
        // e = (1,-1): condition one holds for ray 1 but e vanishes on ray 2 and {1,2} is missing
        assert!(satisfies_condition_one(&f, 1, &[1, -1].into()));
        assert!(!satisfies_condition_two(&f, 1, &[1, -1].into()));
    }

    #[test]
    fn orbit_pairs() {
        let p1 = builtin::projective_space(1).unwrap();
        let r = DemazureRoot::new(&p1, 0, [-1].into()).unwrap();
        let pairs = he_connected_pairs(&p1, &r);
        assert_eq!(pairs.len(), 1);
        assert_eq!((pairs[0].facet.clone(), pairs[0].cone.clone()), (vec![], vec![0]));

        let p2 = builtin::projective_space(2).unwrap();
        let pairs = he_connected_pairs(&p2, &root(&p2, 0, [-1, 0]));
        let got: Vec<_> = pairs.iter().map(|p| (p.facet.clone(), p.cone.clone())).collect();
        assert_eq!(got, vec![(vec![], vec![0]), (vec![1], vec![0, 1])]);

        let f1 = builtin::hirzebruch(1).unwrap();
        let pairs = he_connected_pairs(&f1, &root(&f1, 3, [0, 1]));
        let got: Vec<_> = pairs.iter().map(|p| (p.facet.clone(), p.cone.clone())).collect();
        assert_eq!(got, vec![(vec![], vec![3]), (vec![0], vec![0, 3])]);
        assert!(pairs.iter().all(|p| p.cone_dim == p.facet_dim + 1));
    }
}
