//! Full-dimensional lattice polytopes in `M = Z^n`, the rectangle criterion
//! and normal fans.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::additive::admits_additive;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{rank_of, IntMatrix, IntVector};

/// `<normal, x> <= rhs` with `normal` the primitive outer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetInequality {
    pub normal: IntVector,
    pub rhs: BigInt,
}

impl FacetInequality {
    pub fn is_tight(&self, x: &IntVector) -> bool {
        self.normal.dot(x) == self.rhs
    }

    pub fn holds(&self, x: &IntVector) -> bool {
        self.normal.dot(x) <= self.rhs
    }
}

/// A full-dimensional polytope given by its vertices, kept in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<FacetInequality>,
}

/// Facets of the convex hull of `points`, by scanning affinely independent
/// `n`-subsets. Fails when the points do not span `Q^n` affinely.
fn hull_facets(dim: usize, points: &[IntVector]) -> Result<Vec<FacetInequality>> {
    if points.is_empty() {
        return Err(Error::DegeneratePolytope);
    }
    let diffs: Vec<IntVector> = points.iter().map(|p| p - &points[0]).collect();
    if rank_of(&diffs, dim) < dim {
        return Err(Error::DegeneratePolytope);
    }
    let mut found = BTreeMap::new();
    for subset in points.iter().combinations(dim) {
        let rows: Vec<IntVector> = subset[1..].iter().map(|p| *p - subset[0]).collect();
        let kernel = IntMatrix::with_cols(rows, dim)?.kernel();
        let [normal] = kernel.as_slice() else { continue };
        let rhs = normal.dot(subset[0]);
        let values: Vec<BigInt> = points.iter().map(|p| normal.dot(p)).collect();
        let (normal, rhs) = if values.iter().all(|v| *v <= rhs) {
            (normal.clone(), rhs)
        } else if values.iter().all(|v| *v >= rhs) {
            (-normal, -rhs)
        } else {
            continue;
        };
        found.insert(normal, rhs);
    }
    Ok(found.into_iter().map(|(normal, rhs)| FacetInequality { normal, rhs }).collect())
}

fn is_vertex(dim: usize, facets: &[FacetInequality], p: &IntVector) -> bool {
    let tight: Vec<IntVector> = facets.iter().filter(|f| f.is_tight(p)).map(|f| f.normal.clone()).collect();
    rank_of(&tight, dim) == dim
}

impl LatticePolytope {
    /// Rejects duplicates, points that are not vertices of the hull, and
    /// lower-dimensional input.
    pub fn new(dim: usize, vertices: Vec<IntVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DegeneratePolytope);
        }
        if let Some(v) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
        }
        let mut sorted = vertices;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPolytope(format!("vertex {} listed twice", w[0])));
        }
        let facets = hull_facets(dim, &sorted)?;
        if let Some(p) = sorted.iter().find(|p| !is_vertex(dim, &facets, p)) {
            return Err(Error::InvalidPolytope(format!("{p} is not a vertex of the hull")));
        }
        Ok(LatticePolytope { dim, vertices: sorted, facets })
    }

    /// Convex hull of arbitrary lattice points.
    pub fn hull(dim: usize, points: Vec<IntVector>) -> Result<Self> {
        if let Some(v) = points.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
        }
        let mut pts = points;
        pts.sort();
        pts.dedup();
        let facets = hull_facets(dim, &pts)?;
        let vertices = pts.into_iter().filter(|p| is_vertex(dim, &facets, p)).collect();
        LatticePolytope::new(dim, vertices)
    }

    pub fn from_i64(dim: usize, vertices: &[&[i64]]) -> Result<Self> {
        LatticePolytope::new(dim, vertices.iter().map(|v| IntVector::from(*v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    /// Facet inequalities ordered lexicographically by outer normal.
    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        self.facets.iter().all(|f| f.holds(x))
    }

    /// Indices of the facets through vertex `v`.
    fn facets_at(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| self.facets[f].is_tight(&self.vertices[v])).collect()
    }

    /// Primitive directions of the edges leaving vertex `v`, paired with the
    /// facets through `v` that contain each edge.
    fn edges_at(&self, v: usize) -> Vec<(IntVector, Vec<usize>)> {
        let at_v = self.facets_at(v);
        let mut out = Vec::new();
        for w in 0..self.vertices.len() {
            if w == v {
                continue;
            }
            let common: Vec<usize> =
                at_v.iter().copied().filter(|&f| self.facets[f].is_tight(&self.vertices[w])).collect();
            let normals: Vec<IntVector> = common.iter().map(|&f| self.facets[f].normal.clone()).collect();
            if rank_of(&normals, self.dim) == self.dim - 1 {
                let dir = (&self.vertices[w] - &self.vertices[v]).primitive().expect("distinct vertices");
                out.push((dir, common));
            }
        }
        out
    }

    /// The vertex whose edge directions form a lattice basis on which every
    /// facet away from the vertex is nonnegative; the first such vertex.
    pub fn inscribed_in_rectangle(&self) -> Option<RectangleWitness> {
        (0..self.vertices.len()).find_map(|v| self.rectangle_at(v))
    }

    fn rectangle_at(&self, v: usize) -> Option<RectangleWitness> {
        let n = self.dim;
        let at_v = self.facets_at(v);
        let edges = self.edges_at(v);
        if edges.len() != n || at_v.len() != n {
            return None;
        }
        // e_i is the edge leaving facet i, facets taken in normal order
        let basis: Vec<IntVector> = at_v
            .iter()
            .map(|f| edges.iter().find(|(_, common)| !common.contains(f)).map(|(d, _)| d.clone()))
            .collect::<Option<_>>()?;
        if !IntMatrix::new(basis.clone()).ok()?.determinant().ok()?.abs().is_one() {
            return None;
        }
        let away_ok = (0..self.facets.len())
            .filter(|f| !at_v.contains(f))
            .all(|f| basis.iter().all(|e| !self.facets[f].normal.dot(e).is_negative()));
        away_ok.then(|| RectangleWitness { vertex: self.vertices[v].clone(), edge_basis: basis })
    }

    /// Rays are the inner facet normals in facet order; each vertex gives the
    /// maximal cone spanned by the normals of its facets.
    pub fn normal_fan(&self) -> Fan {
        let rays = self.facets.iter().map(|f| -&f.normal).collect();
        let cones = (0..self.vertices.len()).map(|v| self.facets_at(v)).collect();
        Fan::new(self.dim, rays, cones).expect("normal fans are valid")
    }

    /// `k * P`. The normal fan does not change, and for `k >= n - 1` the
    /// result is very ample.
    pub fn scale(&self, k: &BigInt) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::BadParams(format!("scale factor must be positive, got {k}")));
        }
        let vertices = self.vertices.iter().map(|v| v * k).collect();
        let facets = self.facets.iter().map(|f| FacetInequality { normal: f.normal.clone(), rhs: &f.rhs * k }).collect();
        Ok(LatticePolytope { dim: self.dim, vertices, facets })
    }

    pub fn to_data(&self) -> PolytopeData {
        PolytopeData { dim: self.dim, vertices: self.vertices.clone() }
    }

    pub fn from_data(data: PolytopeData) -> Result<Self> {
        LatticePolytope::new(data.dim, data.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleWitness {
    pub vertex: IntVector,
    /// Primitive edge directions at `vertex`, ordered like the facets
    /// through it.
    pub edge_basis: Vec<IntVector>,
}

pub fn facets(p: &LatticePolytope) -> &[FacetInequality] {
    p.facets()
}

pub fn inscribed_in_rectangle(p: &LatticePolytope) -> Option<RectangleWitness> {
    p.inscribed_in_rectangle()
}

pub fn normal_fan(p: &LatticePolytope) -> Fan {
    p.normal_fan()
}

pub fn scale(p: &LatticePolytope, k: &BigInt) -> Result<LatticePolytope> {
    p.scale(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolytopeTheoremReport {
    pub inscribed: bool,
    pub fan_admits: bool,
}

/// Both sides of the polytope criterion; they must agree.
pub fn check_polytope_theorem(p: &LatticePolytope) -> PolytopeTheoremReport {
    PolytopeTheoremReport {
        inscribed: p.inscribed_in_rectangle().is_some(),
        fan_admits: admits_additive(&p.normal_fan()).admits,
    }
}

/// Polytope JSON: `{"dim": n, "vertices": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeData {
    pub dim: usize,
    pub vertices: Vec<IntVector>,
}

impl PolytopeData {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub mod builtin {
    //! Standard polytopes.

    use itertools::Itertools;
    use num_bigint::BigInt;

    use super::LatticePolytope;
    use crate::error::{Error, Result};
    use crate::lattice::IntVector;

    /// `[0, d]`.
    pub fn segment(d: i64) -> Result<LatticePolytope> {
        if d < 1 {
            return Err(Error::BadParams(format!("segment length must be positive, got {d}")));
        }
        LatticePolytope::from_i64(1, &[&[0], &[d]])
    }

    /// `[0, 1]^n`.
    pub fn cube(n: usize) -> Result<LatticePolytope> {
        if n == 0 {
            return Err(Error::BadParams("cube needs n >= 1".into()));
        }
        let vertices = (0..n).map(|_| [0i64, 1]).multi_cartesian_product().map(IntVector::from).collect();
        LatticePolytope::new(n, vertices)
    }

    /// `conv{0, d e_1, .., d e_n}`.
    pub fn simplex(n: usize, d: i64) -> Result<LatticePolytope> {
        if n == 0 || d < 1 {
            return Err(Error::BadParams(format!("simplex needs n >= 1 and d >= 1, got n = {n}, d = {d}")));
        }
        let mut vertices = vec![IntVector::zero(n)];
        vertices.extend((0..n).map(|i| &IntVector::unit(n, i) * &BigInt::from(d)));
        LatticePolytope::new(n, vertices)
    }

    /// The polytope of the Hirzebruch surface `F_1` with lattice points
    /// `1, a, a^2, b, ab, a^2 b, b^2, a b^2, b^3`.
    pub fn trapezoid() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[0, 0], &[2, 0], &[2, 1], &[0, 3]]).expect("valid")
    }

    /// `conv{(0,0), (1,2), (2,1)}`: every vertex cone has index 3.
    pub fn triangle() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[0, 0], &[1, 2], &[2, 1]]).expect("valid")
    }

    /// `segment d`, `cube n`, `simplex n d`, `trapezoid`, `triangle`.
    pub fn by_name(name: &str, params: &[BigInt]) -> Result<LatticePolytope> {
        let small: Vec<i64> = params
            .iter()
            .map(|p| i64::try_from(p).map_err(|_| Error::BadParams(format!("parameter {p} out of range"))))
            .collect::<Result<_>>()?;
        let dim = |x: i64| usize::try_from(x).map_err(|_| Error::BadParams(format!("dimension {x} must be positive")));
        match (name, small.as_slice()) {
            ("segment", [d]) => segment(*d),
            ("cube", [n]) => cube(dim(*n)?),
            ("simplex", [n, d]) => simplex(dim(*n)?, *d),
            ("trapezoid", []) => Ok(trapezoid()),
            ("triangle", []) => Ok(triangle()),
            _ => Err(Error::BadParams(format!("unknown polytope generator {name:?} with {} parameters", small.len()))),
        }
    }

    pub fn is_polytope_generator(name: &str) -> bool {
        matches!(name, "segment" | "cube" | "simplex" | "trapezoid" | "triangle")
    }

    /// Named polytopes used across the test suites.
    pub fn bundled() -> Vec<(String, LatticePolytope)> {
        let mut out = Vec::new();
        for d in 1..=4 {
            out.push((format!("[0,{d}]"), segment(d).unwrap()));
        }
        for n in 2..=3 {
            out.push((format!("[0,1]^{n}"), cube(n).unwrap()));
        }
        for n in 1..=3 {
            for d in 1..=3 {
                out.push((format!("{d}*simplex_{n}"), simplex(n, d).unwrap()));
            }
        }
        out.push(("trapezoid".into(), trapezoid()));
        out.push(("triangle".into(), triangle()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{builtin as fans, find_isomorphism};

    fn ineqs(p: &LatticePolytope) -> Vec<String> {
        p.facets().iter().map(|f| format!("{}<={}", f.normal, f.rhs)).collect()
    }

    #[test]
    fn segment_facets() {
        let p = builtin::segment(3).unwrap();
        assert_eq!(ineqs(&p), vec!["(-1)<=0", "(1)<=3"]);
        let w = p.inscribed_in_rectangle().unwrap();
        assert_eq!((w.vertex, w.edge_basis), (IntVector::from([0]), vec![IntVector::from([1])]));
        assert!(p.normal_fan().same_as(&fans::projective_space(1).unwrap()));
    }

    #[test]
    fn trapezoid_facets_and_witness() {
        let p = builtin::trapezoid();
        assert_eq!(ineqs(&p), vec!["(-1,0)<=0", "(0,-1)<=0", "(1,0)<=2", "(1,1)<=3"]);
        let w = p.inscribed_in_rectangle().unwrap();
        assert_eq!(w.vertex, IntVector::from([0, 0]));
        assert_eq!(w.edge_basis, vec![IntVector::from([1, 0]), IntVector::from([0, 1])]);
        let fan = p.normal_fan();
        assert_eq!(fan.rays(), &[[1, 0].into(), [0, 1].into(), [-1, 0].into(), [-1, -1].into()]);
        assert!(fan.is_complete());
        assert!(find_isomorphism(&fan, &fans::hirzebruch(1).unwrap()).is_some());
    }

    #[test]
    fn triangle_is_not_inscribed() {
        let p = builtin::triangle();
        assert!(p.inscribed_in_rectangle().is_none());
        assert_eq!(check_polytope_theorem(&p), PolytopeTheoremReport { inscribed: false, fan_admits: false });
        let fan = p.normal_fan();
        assert_eq!(fan.rays(), &[[2, -1].into(), [-1, 2].into(), [-1, -1].into()]);
    }

    #[test]
    fn square_and_simplex() {
        let sq = builtin::cube(2).unwrap();
        assert_eq!(sq.facets().len(), 4);
        assert!(sq.normal_fan().same_as(&fans::product_p1(2).unwrap()));
        let s = builtin::simplex(3, 2).unwrap();
        assert!(find_isomorphism(&s.normal_fan(), &fans::projective_space(3).unwrap()).is_some());
        assert_eq!(check_polytope_theorem(&s), PolytopeTheoremReport { inscribed: true, fan_admits: true });
        assert_eq!(s.inscribed_in_rectangle().unwrap().vertex, IntVector::zero(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(LatticePolytope::from_i64(2, &[&[0, 0], &[1, 1], &[2, 2]]), Err(Error::DegeneratePolytope)));
        assert!(matches!(
            LatticePolytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 0]]),
            Err(Error::InvalidPolytope(_))
        ));
        assert!(matches!(
            LatticePolytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]),
            Err(Error::InvalidPolytope(_))
        ));
        assert!(matches!(LatticePolytope::from_i64(1, &[&[0], &[0], &[1]]), Err(Error::InvalidPolytope(_))));
        assert!(PolytopeData::from_json(r#"{"dim":1,"vertices":[[0],[2]],"x":1}"#).is_err());
    }

    #[test]
    fn hull_drops_inner_points() {
        let p = LatticePolytope::hull(2, vec![[0, 0].into(), [1, 1].into(), [2, 0].into(), [0, 2].into(), [1, 0].into()])
            .unwrap();
        assert_eq!(p.vertices(), &[[0, 0].into(), [0, 2].into(), [2, 0].into()]);
    }

    #[test]
    fn scaling_keeps_the_fan() {
        let p = builtin::trapezoid();
        let q = p.scale(&BigInt::from(3)).unwrap();
        assert_eq!(q, LatticePolytope::new(2, q.vertices().to_vec()).unwrap());
        assert_eq!(q.normal_fan(), p.normal_fan());
        assert_eq!(builtin::segment(1).unwrap().scale(&BigInt::from(3)).unwrap(), builtin::segment(3).unwrap());
        assert!(p.scale(&BigInt::from(0)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = builtin::trapezoid();
        let s = p.to_data().to_json();
        assert_eq!(s, r#"{"dim":2,"vertices":[[0,0],[0,3],[2,0],[2,1]]}"#);
        assert_eq!(LatticePolytope::from_data(PolytopeData::from_json(&s).unwrap()).unwrap(), p);
    }

    #[test]
    fn bundled_polytopes_agree_with_their_fans() {
        for (name, p) in builtin::bundled() {
            let r = check_polytope_theorem(&p);
            assert_eq!(r.inscribed, r.fan_admits, "{name}");
            assert!(p.normal_fan().is_complete(), "{name}");
        }
    }

    #[test]
    fn non_simple_vertex() {
        // square pyramid: the apex lies on four facets
        let p = LatticePolytope::from_i64(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]]).unwrap();
        assert_eq!(p.facets().len(), 5);
        assert!(p.normal_fan().is_complete());
        let r = check_polytope_theorem(&p);
        assert_eq!(r.inscribed, r.fan_admits);
    }
}
