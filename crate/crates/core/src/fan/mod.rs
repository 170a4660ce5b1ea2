//! Rational polyhedral fans in `N = Z^n`.

mod automorphism;
pub mod builtin;
mod cone;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

pub use automorphism::{find_isomorphism, LatticeAutomorphism};
pub use cone::{cone_dual_description, extreme_rays, minimal_generators, DualDescription};

use crate::error::{Error, Result};
use crate::lattice::IntVector;

/// A cone of a fan, referring to the fan's rays by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rays: Vec<usize>,
    dim: usize,
    dual: DualDescription,
}

impl Cone {
    /// Sorted ray indices; after validation these are exactly the extreme rays.
    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dual(&self) -> &DualDescription {
        &self.dual
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.dual.contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }
}

/// Something wrong with fan input data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ZeroDimension,
    RayDimension { ray: usize, got: usize },
    ZeroRay { ray: usize },
    RayNotPrimitive { ray: usize },
    DuplicateRay { first: usize, second: usize },
    EmptyCone { cone: usize },
    RayIndexOutOfRange { cone: usize, index: usize },
    RepeatedIndex { cone: usize, index: usize },
    NotStronglyConvex { cone: usize },
    RedundantRay { cone: usize, ray: usize },
    RayInsideCone { cone: usize, ray: usize },
    DuplicateCone { first: usize, second: usize },
    NotMaximal { cone: usize, containing: usize },
    UnusedRay { ray: usize },
    IntersectionNotFace { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            ZeroDimension => write!(f, "fan dimension must be positive"),
            RayDimension { ray, got } => write!(f, "ray {ray} has dimension {got}"),
            ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            RayNotPrimitive { ray } => write!(f, "ray {ray} not primitive"),
            DuplicateRay { first, second } => write!(f, "rays {first} and {second} coincide"),
            EmptyCone { cone } => write!(f, "cone {cone} has no rays"),
            RayIndexOutOfRange { cone, index } => write!(f, "cone {cone} refers to missing ray {index}"),
            RepeatedIndex { cone, index } => write!(f, "cone {cone} lists ray {index} twice"),
            NotStronglyConvex { cone } => write!(f, "cone {cone} not strongly convex"),
            RedundantRay { cone, ray } => write!(f, "ray {ray} is not an extreme ray of cone {cone}"),
            RayInsideCone { cone, ray } => write!(f, "ray {ray} lies in cone {cone} but is not listed"),
            DuplicateCone { first, second } => write!(f, "cones {first} and {second} coincide"),
            NotMaximal { cone, containing } => write!(f, "cone {cone} is a face of cone {containing}"),
            UnusedRay { ray } => write!(f, "ray {ray} is in no cone"),
            IntersectionNotFace { first, second } => {
                write!(f, "intersection of cones {first} and {second} not a face")
            }
        }
    }
}

/// Raw fan data as read from or written to JSON:
/// `{"dim": n, "rays": [[...], ...], "max_cones": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanData {
    pub dim: usize,
    pub rays: Vec<IntVector>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanData {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self.dim, &self.rays, &self.max_cones)
    }
}

/// A validated fan.
#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<IntVector>,
    max_cones: Vec<Cone>,
    faces: Vec<Cone>,
    face_index: BTreeMap<Vec<usize>, usize>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.max_cones == other.max_cones
    }
}

impl Eq for Fan {}

impl Fan {
    pub fn new(dim: usize, rays: Vec<IntVector>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        let violations = validate(dim, &rays, &max_cones);
        if !violations.is_empty() {
            return Err(Error::InvalidFan(violations));
        }
        let mut memo = BTreeMap::new();
        let mut maximal = Vec::new();
        for idx in &max_cones {
            let mut idx = idx.clone();
            idx.sort_unstable();
            maximal.push(collect_faces(&rays, &idx, dim, &mut memo));
        }
        let mut faces: Vec<Cone> = memo.into_values().collect();
        faces.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
        let face_index = faces.iter().enumerate().map(|(i, c)| (c.rays.clone(), i)).collect();
        Ok(Fan { dim, rays, max_cones: maximal, faces, face_index })
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64(dim: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Fan> {
        Fan::new(
            dim,
            rays.iter().map(|r| IntVector::from(*r)).collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    pub fn from_data(data: FanData) -> Result<Fan> {
        Fan::new(data.dim, data.rays, data.max_cones)
    }

    pub fn to_data(&self) -> FanData {
        FanData {
            dim: self.dim,
            rays: self.rays.clone(),
            max_cones: self.max_cones.iter().map(|c| c.rays.clone()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &IntVector {
        &self.rays[i]
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// Every face of every maximal cone, including the zero cone, ordered by
    /// dimension and then ray indices.
    pub fn faces(&self) -> &[Cone] {
        &self.faces
    }

    /// Looks up a cone of the fan by its (unsorted) ray indices.
    pub fn find_face(&self, rays: &[usize]) -> Option<&Cone> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        self.face_index.get(&key).map(|&i| &self.faces[i])
    }

    pub fn ray_index(&self, v: &IntVector) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }

    /// Whether the cone generated by the given rays is a cone of the fan.
    pub fn generates_face(&self, rays: &[usize]) -> bool {
        let gens: Vec<IntVector> = rays.iter().map(|&i| self.rays[i].clone()).collect();
        let Ok(dual) = cone_dual_description(&gens, self.dim) else {
            return false;
        };
        let minimal: Vec<usize> = minimal_generators(&gens, &dual, self.dim).into_iter().map(|k| rays[k]).collect();
        self.find_face(&minimal).is_some()
    }

    pub fn covers(&self, v: &IntVector) -> bool {
        self.max_cones.iter().any(|c| c.contains(v))
    }

    /// Completeness by the ridge criterion: every maximal cone is
    /// full-dimensional, every codimension-one face of a maximal cone lies in
    /// exactly two maximal cones, and the adjacency graph is connected.
    pub fn is_complete(&self) -> bool {
        let n = self.dim;
        if self.max_cones.iter().any(|c| c.dim != n) {
            return false;
        }
        let mut ridges: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
        for ridge in self.faces.iter().filter(|f| f.dim + 1 == n) {
            for (i, c) in self.max_cones.iter().enumerate() {
                if ridge.rays.iter().all(|r| c.rays.binary_search(r).is_ok()) {
                    ridges.entry(&ridge.rays).or_default().push(i);
                }
            }
        }
        if ridges.values().any(|cs| cs.len() != 2) {
            return false;
        }
        let mut adjacency = vec![Vec::new(); self.max_cones.len()];
        for cs in ridges.values() {
            adjacency[cs[0]].push(cs[1]);
            adjacency[cs[1]].push(cs[0]);
        }
        let mut seen = vec![false; self.max_cones.len()];
        let mut stack = vec![0];
        while let Some(c) = stack.pop() {
            if std::mem::replace(&mut seen[c], true) {
                continue;
            }
            stack.extend(adjacency[c].iter().copied());
        }
        seen.iter().all(|&s| s)
    }

    /// Randomized completeness evidence: `samples` random nonzero integer
    /// directions must each lie in some maximal cone.
    pub fn covers_random_directions<R: Rng>(&self, rng: &mut R, samples: usize) -> bool {
        (0..samples).all(|_| {
            let v = loop {
                let v = IntVector::from((0..self.dim).map(|_| rng.gen_range(-1000..=1000)).collect::<Vec<i64>>());
                if !v.is_zero() {
                    break v;
                }
            };
            self.covers(&v)
        })
    }

    /// The image fan under `g`; ray and cone order are preserved.
    pub fn apply_automorphism(&self, g: &LatticeAutomorphism) -> Result<Fan> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: g.dim() });
        }
        Fan::new(
            self.dim,
            self.rays.iter().map(|p| g.apply(p)).collect(),
            self.max_cones.iter().map(|c| c.rays.clone()).collect(),
        )
    }

    /// Where `g` sends each ray, if it permutes the rays and maps maximal
    /// cones onto maximal cones.
    pub fn automorphism_ray_map(&self, g: &LatticeAutomorphism) -> Result<Option<Vec<usize>>> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: g.dim() });
        }
        Ok(self.ray_map_onto(self, |p| g.apply(p)))
    }

    pub fn is_fan_automorphism(&self, g: &LatticeAutomorphism) -> Result<bool> {
        Ok(self.automorphism_ray_map(g)?.is_some())
    }

    /// Set equality of rays and maximal cones (orders may differ).
    pub fn same_as(&self, other: &Fan) -> bool {
        self.dim == other.dim && self.ray_map_onto(other, Clone::clone).is_some()
    }

    fn ray_map_onto(&self, target: &Fan, map: impl Fn(&IntVector) -> IntVector) -> Option<Vec<usize>> {
        if self.rays.len() != target.rays.len() || self.max_cones.len() != target.max_cones.len() {
            return None;
        }
        let index: HashMap<&IntVector, usize> = target.rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let perm: Vec<usize> = self.rays.iter().map(|p| index.get(&map(p)).copied()).collect::<Option<_>>()?;
        let targets: BTreeSet<&[usize]> = target.max_cones.iter().map(|c| c.rays.as_slice()).collect();
        let ok = self.max_cones.iter().all(|c| {
            let mut img: Vec<usize> = c.rays.iter().map(|&r| perm[r]).collect();
            img.sort_unstable();
            targets.contains(img.as_slice())
        });
        ok.then_some(perm)
    }
}

fn collect_faces(rays: &[IntVector], idx: &[usize], dim: usize, memo: &mut BTreeMap<Vec<usize>, Cone>) -> Cone {
    if let Some(c) = memo.get(idx) {
        return c.clone();
    }
    let gens: Vec<IntVector> = idx.iter().map(|&i| rays[i].clone()).collect();
    let dual = cone_dual_description(&gens, dim).expect("validated cone");
    let cone = Cone { rays: idx.to_vec(), dim: dual.span_dim(dim), dual };
    memo.insert(idx.to_vec(), cone.clone());
    for h in &cone.dual.inequalities {
        let facet: Vec<usize> = idx.iter().copied().filter(|&i| h.dot(&rays[i]).is_zero()).collect();
        collect_faces(rays, &facet, dim, memo);
    }
    cone
}

/// Every violation of the fan axioms found in the data; empty means valid.
pub fn validate(dim: usize, rays: &[IntVector], max_cones: &[Vec<usize>]) -> Vec<Violation> {
    let mut out = Vec::new();
    if dim == 0 {
        out.push(Violation::ZeroDimension);
        return out;
    }
    for (i, r) in rays.iter().enumerate() {
        if r.dim() != dim {
            out.push(Violation::RayDimension { ray: i, got: r.dim() });
        } else if r.is_zero() {
            out.push(Violation::ZeroRay { ray: i });
        } else if !r.is_primitive() {
            out.push(Violation::RayNotPrimitive { ray: i });
        }
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                out.push(Violation::DuplicateRay { first: i, second: j });
            }
        }
    }
    for (c, idx) in max_cones.iter().enumerate() {
        if idx.is_empty() {
            out.push(Violation::EmptyCone { cone: c });
        }
        let mut seen = BTreeSet::new();
        for &i in idx {
            if i >= rays.len() {
                out.push(Violation::RayIndexOutOfRange { cone: c, index: i });
            } else if !seen.insert(i) {
                out.push(Violation::RepeatedIndex { cone: c, index: i });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    let sorted: Vec<Vec<usize>> = max_cones
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    let mut duals = Vec::new();
    for (c, idx) in sorted.iter().enumerate() {
        let gens: Vec<IntVector> = idx.iter().map(|&i| rays[i].clone()).collect();
        match cone_dual_description(&gens, dim) {
            Err(_) => {
                out.push(Violation::NotStronglyConvex { cone: c });
                duals.push(None);
            }
            Ok(d) => {
                let minimal = minimal_generators(&gens, &d, dim);
                for (k, &i) in idx.iter().enumerate() {
                    if !minimal.contains(&k) {
                        out.push(Violation::RedundantRay { cone: c, ray: i });
                    }
                }
                for (i, r) in rays.iter().enumerate() {
                    if idx.binary_search(&i).is_err() && d.contains(r) {
                        out.push(Violation::RayInsideCone { cone: c, ray: i });
                    }
                }
                duals.push(Some(d));
            }
        }
    }
    for i in 0..sorted.len() {
        for j in 0..sorted.len() {
            if i < j && sorted[i] == sorted[j] {
                out.push(Violation::DuplicateCone { first: i, second: j });
            } else if i != j && sorted[i] != sorted[j] && sorted[i].iter().all(|r| sorted[j].binary_search(r).is_ok()) {
                out.push(Violation::NotMaximal { cone: i, containing: j });
            }
        }
    }
    let used: BTreeSet<usize> = sorted.iter().flatten().copied().collect();
    for i in 0..rays.len() {
        if !used.contains(&i) {
            out.push(Violation::UnusedRay { ray: i });
        }
    }
    if !out.is_empty() {
        return out;
    }

    // pairwise intersections must be faces of both cones
    let mut memo = BTreeMap::new();
    for idx in &sorted {
        collect_faces(rays, idx, dim, &mut memo);
    }
    let index: HashMap<&IntVector, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let is_face_of = |face: &[usize], cone: &[usize]| {
        memo.contains_key(face) && face.iter().all(|r| cone.binary_search(r).is_ok())
    };
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let (a, b) = (duals[i].as_ref().unwrap(), duals[j].as_ref().unwrap());
            let meet = DualDescription {
                inequalities: a.inequalities.iter().chain(&b.inequalities).cloned().collect(),
                equations: a.equations.iter().chain(&b.equations).cloned().collect(),
            };
            let generators: Option<Vec<usize>> =
                extreme_rays(&meet, dim).iter().map(|r| index.get(r).copied()).collect();
            let ok = generators.is_some_and(|mut g| {
                g.sort_unstable();
                is_face_of(&g, &sorted[i]) && is_face_of(&g, &sorted[j])
            });
            if !ok {
                out.push(Violation::IntersectionNotFace { first: i, second: j });
            }
        }
    }
    out
}
