use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rank_of, IntMatrix, IntVector};

/// H-description of a polyhedral cone: `<h, x> >= 0` for every inequality
/// and `<q, x> = 0` for every equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDescription {
    pub inequalities: Vec<IntVector>,
    pub equations: Vec<IntVector>,
}

impl DualDescription {
    pub fn contains(&self, v: &IntVector) -> bool {
        self.equations.iter().all(|q| q.dot(v).is_zero())
            && self.inequalities.iter().all(|h| !h.dot(v).is_negative())
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self, ambient: usize) -> usize {
        ambient - rank_of(&self.equations, ambient)
    }
}

/// Facet normals and span equations of the cone generated by `generators`.
///
/// Facets are found by scanning every `(r-1)`-subset of generators, `r` being
/// the dimension of the span: the unique normal inside the span that vanishes
/// on the subset is a facet normal iff it has constant sign on all generators.
pub fn cone_dual_description(generators: &[IntVector], dim: usize) -> Result<DualDescription> {
    if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
    }
    if generators.iter().any(IntVector::is_zero) {
        return Err(Error::ZeroVector);
    }
    let equations = IntMatrix::with_cols(generators.to_vec(), dim)?.kernel();
    let r = dim - equations.len();
    if r == 0 {
        return Ok(DualDescription { inequalities: Vec::new(), equations });
    }

    let mut facets = BTreeSet::new();
    for subset in generators.iter().combinations(r - 1) {
        let rows: Vec<IntVector> = subset.into_iter().cloned().chain(equations.iter().cloned()).collect();
        let kernel = IntMatrix::with_cols(rows, dim)?.kernel();
        let [normal] = kernel.as_slice() else { continue };
        let (mut pos, mut neg) = (false, false);
        for g in generators {
            let s = normal.dot(g);
            pos |= s.is_positive();
            neg |= s.is_negative();
        }
        match (pos, neg) {
            (true, false) => {
                facets.insert(normal.clone());
            }
            (false, true) => {
                facets.insert(-normal);
            }
            _ => {}
        }
    }
    let inequalities: Vec<IntVector> = facets.into_iter().collect();

    let all: Vec<IntVector> = inequalities.iter().chain(&equations).cloned().collect();
    if rank_of(&all, dim) < dim {
        return Err(Error::NotStronglyConvex);
    }
    Ok(DualDescription { inequalities, equations })
}

/// Indices of generators spanning extreme rays of a pointed cone.
/// Among parallel generators only the first is kept.
pub fn minimal_generators(generators: &[IntVector], dual: &DualDescription, dim: usize) -> Vec<usize> {
    let r = dual.span_dim(dim);
    let mut seen: Vec<IntVector> = Vec::new();
    let mut out = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        let tight: Vec<IntVector> = dual
            .inequalities
            .iter()
            .filter(|h| h.dot(g).is_zero())
            .cloned()
            .chain(dual.equations.iter().cloned())
            .collect();
        // the face cut out by the tight facets must be a ray
        if rank_of(&tight, dim) + 1 != dim || r == 0 {
            continue;
        }
        let p = g.primitive().expect("nonzero generator");
        if !seen.contains(&p) {
            seen.push(p);
            out.push(i);
        }
    }
    out
}

/// Primitive generators of the extreme rays of a pointed cone given in
/// H-description, found by scanning subsets of inequalities that together
/// with the equations cut out a line.
pub fn extreme_rays(dual: &DualDescription, dim: usize) -> Vec<IntVector> {
    let rank_eq = rank_of(&dual.equations, dim);
    if rank_eq >= dim {
        return Vec::new();
    }
    let k = dim - 1 - rank_eq;
    let mut out = BTreeSet::new();
    for subset in dual.inequalities.iter().combinations(k) {
        let rows: Vec<IntVector> = subset.into_iter().cloned().chain(dual.equations.iter().cloned()).collect();
        let kernel = IntMatrix::with_cols(rows, dim).expect("uniform dims").kernel();
        let [y] = kernel.as_slice() else { continue };
        let vals: Vec<_> = dual.inequalities.iter().map(|h| h.dot(y)).collect();
        let pos = vals.iter().any(Signed::is_positive);
        let neg = vals.iter().any(Signed::is_negative);
        match (pos, neg) {
            (true, false) => {
                out.insert(y.clone());
            }
            (false, true) => {
                out.insert(-y);
            }
            // mixed signs: not in the cone; all zero: part of a lineality space
            _ => {}
        }
    }
    out.into_iter().collect()
}
