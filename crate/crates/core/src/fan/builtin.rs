//! Standard fans used as fixtures and by the `gen` command.

use itertools::Itertools;
use num_bigint::BigInt;

use super::Fan;
use crate::error::{Error, Result};
use crate::lattice::IntVector;

/// `P^n`: rays `e_1..e_n, -(e_1+..+e_n)`; every `n` of them span a maximal cone.
pub fn projective_space(n: usize) -> Result<Fan> {
    if n == 0 {
        return Err(Error::BadParams("projective space needs n >= 1".into()));
    }
    let mut rays: Vec<IntVector> = (0..n).map(|i| IntVector::unit(n, i)).collect();
    rays.push(IntVector::from(vec![-1; n]));
    let cones = (0..=n).combinations(n).collect();
    Fan::new(n, rays, cones)
}

/// `(P^1)^n` with rays ordered `e_1, -e_1, e_2, -e_2, ...`.
pub fn product_p1(n: usize) -> Result<Fan> {
    if n == 0 {
        return Err(Error::BadParams("product of P^1 needs n >= 1".into()));
    }
    let rays = (0..n).flat_map(|i| [IntVector::unit(n, i), -IntVector::unit(n, i)]).collect();
    let cones = (0..n).map(|i| [2 * i, 2 * i + 1]).multi_cartesian_product().collect();
    Fan::new(n, rays, cones)
}

/// Hirzebruch surface `F_d`: rays `(1,0), (0,1), (-1,d), (0,-1)`.
pub fn hirzebruch(d: i64) -> Result<Fan> {
    if d < 1 {
        return Err(Error::BadParams(format!("Hirzebruch surface needs d >= 1, got {d}")));
    }
    Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, d], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])
}

/// Weighted projective space `P(1, d_1, .., d_n)`: rays `e_1..e_n` and
/// `(-d_1, .., -d_n)`. The last ray is only primitive when the weights are
/// coprime, so other weight vectors are rejected.
pub fn wps_one(weights: &[i64]) -> Result<Fan> {
    let n = weights.len();
    if n == 0 || weights.iter().any(|&d| d < 1) {
        return Err(Error::BadParams(format!("weights must be positive, got {weights:?}")));
    }
    let last = IntVector::from(weights.iter().map(|d| -d).collect::<Vec<_>>());
    if !last.is_primitive() {
        return Err(Error::BadParams(format!(
            "weights {weights:?} share a common factor, so {last} is not a primitive ray"
        )));
    }
    let mut rays: Vec<IntVector> = (0..n).map(|i| IntVector::unit(n, i)).collect();
    rays.push(last);
    let cones = (0..=n).combinations(n).collect();
    Fan::new(n, rays, cones)
}

/// Affine space `K^n`: the positive orthant and its faces.
pub fn affine_space(n: usize) -> Result<Fan> {
    if n == 0 {
        return Err(Error::BadParams("affine space needs n >= 1".into()));
    }
    Fan::new(n, (0..n).map(|i| IntVector::unit(n, i)).collect(), vec![(0..n).collect()])
}

/// A complete fan of `P(2,3,5)` with rays `(1,0), (1,5), (-1,-3)`.
pub fn p235_model() -> Fan {
    Fan::from_i64(2, &[&[1, 0], &[1, 5], &[-1, -3]], &[&[0, 1], &[1, 2], &[2, 0]]).expect("valid")
}

/// The cone over `(1,1), (1,-1)`: an affine toric surface with class group `Z/2`.
pub fn torsion_cone() -> Fan {
    Fan::from_i64(2, &[&[1, 1], &[1, -1]], &[&[0, 1]]).expect("valid")
}

/// Builds a fan from a generator name and integer parameters:
/// `pn n`, `p1n n`, `hirzebruch d`, `wps1 d_1 .. d_n`, `affine n`, `p235`, `torsion`.
pub fn by_name(name: &str, params: &[BigInt]) -> Result<Fan> {
    let small: Vec<i64> = params
        .iter()
        .map(|p| i64::try_from(p).map_err(|_| Error::BadParams(format!("parameter {p} out of range"))))
        .collect::<Result<_>>()?;
    let one = |what: &str| -> Result<i64> {
        match small.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::BadParams(format!("{what} takes exactly one parameter"))),
        }
    };
    let dim = |x: i64| usize::try_from(x).map_err(|_| Error::BadParams(format!("dimension {x} must be positive")));
    match name {
        "pn" | "projective" => projective_space(dim(one(name)?)?),
        "p1n" | "product_p1" => product_p1(dim(one(name)?)?),
        "hirzebruch" | "fd" => hirzebruch(one(name)?),
        "wps1" | "wps_one" => wps_one(&small),
        "affine" => affine_space(dim(one(name)?)?),
        "p235" if small.is_empty() => Ok(p235_model()),
        "torsion" if small.is_empty() => Ok(torsion_cone()),
        _ => Err(Error::BadParams(format!("unknown fan generator {name:?} with {} parameters", small.len()))),
    }
}

/// Named complete fans used across the test suites.
pub fn bundled_complete() -> Vec<(String, Fan)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("P^{n}"), projective_space(n).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("(P^1)^{n}"), product_p1(n).unwrap()));
    }
    for d in 1..=5 {
        out.push((format!("F_{d}"), hirzebruch(d).unwrap()));
    }
    for w in [&[2, 3][..], &[1, 2, 3], &[2, 3, 5]] {
        out.push((format!("P(1,{})", w.iter().join(",")), wps_one(w).unwrap()));
    }
    out.push(("P(2,3,5)".into(), p235_model()));
    out
}

/// Bundled complete fans plus a few non-complete ones.
pub fn bundled() -> Vec<(String, Fan)> {
    let mut out = bundled_complete();
    out.push(("K^2".into(), affine_space(2).unwrap()));
    out.push(("K^3".into(), affine_space(3).unwrap()));
    out.push(("torsion cone".into(), torsion_cone()));
    out.push((
        "P^2 minus a cone".into(),
        Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2]]).unwrap(),
    ));
    out
}
