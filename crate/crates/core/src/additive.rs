//! Complete collections of Demazure roots and the existence of normalized
//! additive actions.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Signed;

use crate::demazure::{all_roots, commute, DemazureRoot, RootsForRay};
use crate::error::{Error, Result};
use crate::fan::{Fan, LatticeAutomorphism};
use crate::lattice::{dual_basis, rank_of, IntMatrix, IntVector};

/// `n` roots `e_1..e_n` with distinguished rays `p_1..p_n` such that
/// `<p_i, e_j> = -delta_ij`. Roots are sorted by distinguished ray index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteCollection {
    roots: Vec<DemazureRoot>,
    rays: Vec<usize>,
    basis: IntMatrix,
}

impl CompleteCollection {
    /// Builds and checks a collection from roots in any order.
    pub fn new(fan: &Fan, mut roots: Vec<DemazureRoot>) -> Result<Self> {
        roots.sort_by_key(|r| r.ray());
        let rays: Vec<usize> = roots.iter().map(|r| r.ray()).collect();
        let n = fan.dim();
        if roots.len() != n {
            return Err(Error::BadParams(format!("a complete collection needs {n} roots, got {}", roots.len())));
        }
        if rays.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParams(format!("distinguished rays repeat: {rays:?}")));
        }
        for r in &roots {
            DemazureRoot::new(fan, r.ray(), r.e().clone())?;
        }
        let basis = IntMatrix::with_cols(rays.iter().map(|&i| fan.ray(i).clone()).collect(), n)?;
        let c = CompleteCollection { roots, rays, basis };
        if !c.pairing_matrix().rows().iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| *x == BigInt::from(if i == j { -1 } else { 0 }))
        }) {
            return Err(Error::BadParams("roots do not pair to minus the identity".into()));
        }
        Ok(c)
    }

    pub fn roots(&self) -> &[DemazureRoot] {
        &self.roots
    }

    pub fn distinguished_rays(&self) -> &[usize] {
        &self.rays
    }

    /// Rows are the distinguished primitive vectors `p_1..p_n`.
    pub fn basis_matrix(&self) -> &IntMatrix {
        &self.basis
    }

    /// Entry `(i, j)` is `<p_i, e_j>`.
    pub fn pairing_matrix(&self) -> IntMatrix {
        let rows = self
            .basis
            .rows()
            .iter()
            .map(|p| IntVector::new(self.roots.iter().map(|r| p.dot(r.e())).collect()))
            .collect();
        IntMatrix::with_cols(rows, self.roots.len()).expect("square")
    }

    /// Coordinates of `v` in the basis `p_1..p_n`, namely `-<v, e_i>`.
    pub fn basis_coordinates(&self, v: &IntVector) -> IntVector {
        IntVector::new(self.roots.iter().map(|r| -v.dot(r.e())).collect())
    }
}

/// All complete collections, ordered by their distinguished ray tuples.
pub fn complete_collections(fan: &Fan) -> Vec<CompleteCollection> {
    let n = fan.dim();
    let mut out = Vec::new();
    for rays in (0..fan.rays().len()).combinations(n) {
        let basis: Vec<IntVector> = rays.iter().map(|&i| fan.ray(i).clone()).collect();
        let Ok(q) = dual_basis(&basis) else { continue };
        let roots: Option<Vec<DemazureRoot>> =
            rays.iter().zip(q).map(|(&r, qi)| DemazureRoot::new(fan, r, -qi).ok()).collect();
        if let Some(roots) = roots {
            out.push(CompleteCollection::new(fan, roots).expect("dual basis pairs correctly"));
        }
    }
    out
}

/// Which statement an [`AdditiveVerdict`] answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// The fan is complete, so a normalized additive action exists iff any
    /// additive action exists.
    AnyAdditiveAction,
    /// The fan is not complete; the verdict only concerns actions normalized
    /// by the acting torus.
    NormalizedOnly,
}

impl Reading {
    pub fn as_str(self) -> &'static str {
        match self {
            Reading::AnyAdditiveAction => "any_additive_action",
            Reading::NormalizedOnly => "normalized_only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveVerdict {
    pub admits: bool,
    /// The first complete collection, when one exists.
    pub witness: Option<CompleteCollection>,
    pub reading: Reading,
}

pub fn admits_additive(fan: &Fan) -> AdditiveVerdict {
    let witness = complete_collections(fan).into_iter().next();
    let reading = if fan.is_complete() { Reading::AnyAdditiveAction } else { Reading::NormalizedOnly };
    AdditiveVerdict { admits: witness.is_some(), witness, reading }
}

/// Whether `n` linearly independent rays occur as distinguished rays of
/// roots. Infinite root sets are an error unless a `bound` truncates them.
pub fn condition4_distinguished_span(fan: &Fan, bound: Option<&BigInt>) -> Result<bool> {
    let roots = all_roots(fan, bound)?;
    let mut distinguished = Vec::new();
    for (ray, set) in roots.per_ray().iter().enumerate() {
        if matches!(set, RootsForRay::Infinite) {
            return Err(Error::InfiniteRoots { ray });
        }
        if !set.listed().is_empty() {
            distinguished.push(fan.ray(ray).clone());
        }
    }
    Ok(rank_of(&distinguished, fan.dim()) == fan.dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem3ConReport {
    pub complete_collection_exists: bool,
    pub distinguished_span: bool,
}

impl Theorem3ConReport {
    pub fn agree(&self) -> bool {
        self.complete_collection_exists == self.distinguished_span
    }
}

/// Both combinatorial criteria for an additive action on a complete fan.
pub fn theorem3con_report(fan: &Fan) -> Result<Theorem3ConReport> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    Ok(Theorem3ConReport {
        complete_collection_exists: !complete_collections(fan).is_empty(),
        distinguished_span: condition4_distinguished_span(fan, None)?,
    })
}

/// A fan automorphism `gamma` whose dual carries one collection's roots onto
/// another's. `ray_bijection` lists `(ray, gamma(ray))` for the first
/// collection's distinguished rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub automorphism: LatticeAutomorphism,
    pub ray_bijection: Vec<(usize, usize)>,
}

impl EquivalenceWitness {
    pub fn verify(&self, fan: &Fan, c1: &CompleteCollection, c2: &CompleteCollection) -> Result<bool> {
        if !fan.is_fan_automorphism(&self.automorphism)? {
            return Ok(false);
        }
        let image: BTreeSet<IntVector> = c1.roots().iter().map(|r| self.automorphism.transport_dual(r.e())).collect();
        let target: BTreeSet<IntVector> = c2.roots().iter().map(|r| r.e().clone()).collect();
        Ok(image == target)
    }
}

/// Searches bijections between the distinguished rays; `None` if no
/// candidate verifies.
pub fn try_equivalence(fan: &Fan, c1: &CompleteCollection, c2: &CompleteCollection) -> Option<EquivalenceWitness> {
    let n = fan.dim();
    let source_inv = c1.basis_matrix().transpose().inverse_unimodular().ok()?;
    for perm in (0..n).permutations(n) {
        let images: Vec<IntVector> = perm.iter().map(|&j| c2.basis_matrix().row(j).clone()).collect();
        let target = IntMatrix::from_columns(&images, n).ok()?;
        let Ok(g) = LatticeAutomorphism::new(target.mul(&source_inv).ok()?) else { continue };
        let ray_bijection = perm.iter().enumerate().map(|(i, &j)| (c1.rays[i], c2.rays[j])).collect();
        let w = EquivalenceWitness { automorphism: g, ray_bijection };
        if w.verify(fan, c1, c2).unwrap_or(false) {
            return Some(w);
        }
    }
    None
}

/// Like [`try_equivalence`], but a missing witness is an error: on valid
/// collections of the same fan one always exists.
pub fn find_equivalence(fan: &Fan, c1: &CompleteCollection, c2: &CompleteCollection) -> Result<EquivalenceWitness> {
    try_equivalence(fan, c1, c2).ok_or(Error::NoWitness)
}

/// Collections grouped up to equivalence. Each member after the first comes
/// with a witness carrying the class representative onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub representative: usize,
    pub members: Vec<(usize, Option<EquivalenceWitness>)>,
}

pub fn equivalence_classes(fan: &Fan, collections: &[CompleteCollection]) -> Vec<EquivalenceClass> {
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    'next: for (i, c) in collections.iter().enumerate() {
        for class in &mut classes {
            if let Some(w) = try_equivalence(fan, &collections[class.representative], c) {
                class.members.push((i, Some(w)));
                continue 'next;
            }
        }
        classes.push(EquivalenceClass { representative: i, members: vec![(i, None)] });
    }
    classes
}

/// Every pair of roots in the collection commutes.
pub fn pairwise_commuting(c: &CompleteCollection) -> bool {
    c.roots().iter().tuple_combinations().all(|(a, b)| commute(a, b))
}

/// Every ray outside the basis has non-positive basis coordinates.
pub fn outside_rays_nonpositive(fan: &Fan, c: &CompleteCollection) -> bool {
    (0..fan.rays().len())
        .filter(|i| !c.distinguished_rays().contains(i))
        .all(|i| c.basis_coordinates(fan.ray(i)).iter().all(|x| !x.is_positive()))
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::fan::builtin;

    fn es(c: &CompleteCollection) -> Vec<String> {
        c.roots().iter().map(|r| r.e().to_string()).collect()
    }

    #[test]
    fn hirzebruch_collections() {
        for d in 1..=5 {
            let f = builtin::hirzebruch(d).unwrap();
            let cs = complete_collections(&f);
            assert_eq!(cs.len(), 2);
            assert_eq!(es(&cs[0]), vec!["(-1,0)".to_string(), "(0,1)".into()]);
            assert_eq!(cs[0].distinguished_rays(), &[0, 3]);
            assert_eq!(es(&cs[1]), vec!["(1,0)".to_string(), format!("({d},1)")]);
            assert_eq!(cs[1].distinguished_rays(), &[2, 3]);
            let w = find_equivalence(&f, &cs[0], &cs[1]).unwrap();
            assert_eq!(w.automorphism.matrix(), &IntMatrix::from_i64(&[&[-1, 0], &[d, 1]]));
            assert_eq!(w.ray_bijection, vec![(0, 2), (3, 3)]);
            assert!(w.verify(&f, &cs[0], &cs[1]).unwrap());
        }
    }

    #[test]
    fn projective_plane_collections() {
        let f = builtin::projective_space(2).unwrap();
        let cs = complete_collections(&f);
        let rays: Vec<&[usize]> = cs.iter().map(|c| c.distinguished_rays()).collect();
        assert_eq!(rays, vec![&[0, 1][..], &[0, 2], &[1, 2]]);
        assert_eq!(es(&cs[1]), vec!["(-1,1)".to_string(), "(0,1)".into()]);
        let w = find_equivalence(&f, &cs[0], &cs[1]).unwrap();
        assert_eq!(w.automorphism.matrix(), &IntMatrix::from_i64(&[&[1, -1], &[0, -1]]));
        let classes = equivalence_classes(&f, &cs);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 3);
    }

    #[test]
    fn witnesses_compose() {
        let f = builtin::projective_space(2).unwrap();
        let cs = complete_collections(&f);
        let ab = find_equivalence(&f, &cs[0], &cs[1]).unwrap();
        let bc = find_equivalence(&f, &cs[1], &cs[2]).unwrap();
        let ac = EquivalenceWitness { automorphism: bc.automorphism.compose(&ab.automorphism), ray_bijection: vec![] };
        assert!(ac.verify(&f, &cs[0], &cs[2]).unwrap());
    }

    #[test]
    fn p235_has_nothing() {
        let f = builtin::p235_model();
        assert!(complete_collections(&f).is_empty());
        let v = admits_additive(&f);
        assert!(!v.admits && v.witness.is_none());
        assert_eq!(v.reading, Reading::AnyAdditiveAction);
        assert_eq!(
            theorem3con_report(&f).unwrap(),
            Theorem3ConReport { complete_collection_exists: false, distinguished_span: false }
        );
    }

    #[test]
    fn span_condition() {
        assert!(condition4_distinguished_span(&builtin::projective_space(2).unwrap(), None).unwrap());
        assert!(condition4_distinguished_span(&builtin::product_p1(2).unwrap(), None).unwrap());
        let k2 = builtin::affine_space(2).unwrap();
        assert_eq!(condition4_distinguished_span(&k2, None), Err(Error::InfiniteRoots { ray: 0 }));
        assert!(condition4_distinguished_span(&k2, Some(&BigInt::from(1))).unwrap());
        assert_eq!(theorem3con_report(&k2), Err(Error::NotComplete));
    }

    #[test]
    fn non_complete_reading() {
        let v = admits_additive(&builtin::affine_space(2).unwrap());
        assert!(v.admits);
        assert_eq!(v.reading, Reading::NormalizedOnly);
        assert!(!admits_additive(&builtin::torsion_cone()).admits);
    }

    #[test]
    fn structural_invariants() {
        for (name, f) in builtin::bundled() {
            for c in complete_collections(&f) {
                assert!(pairwise_commuting(&c), "{name}");
                assert!(outside_rays_nonpositive(&f, &c), "{name}");
                assert!(c.basis_matrix().determinant().unwrap().abs() == BigInt::from(1));
                assert!(c.pairing_matrix().rows().iter().flat_map(|r| r.iter()).all(|x| !x.is_positive()));
                assert!(c.pairing_matrix().rows().iter().enumerate().all(|(i, r)| !r[i].is_zero()));
            }
        }
    }

    #[test]
    fn rejects_bad_collections() {
        let f = builtin::projective_space(2).unwrap();
        let a = DemazureRoot::new(&f, 0, [-1, 0].into()).unwrap();
        let b = DemazureRoot::new(&f, 0, [-1, 1].into()).unwrap();
        assert!(CompleteCollection::new(&f, vec![a.clone(), b]).is_err());
        let c = DemazureRoot::new(&f, 1, [1, -1].into()).unwrap();
        // <p_0, (1,-1)> = 1, so the pairing matrix is not minus the identity
        assert!(CompleteCollection::new(&f, vec![a, c]).is_err());
    }
}
