//! Random complete 2D fans and lattice polygons for property tests.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;

use crate::fan::Fan;
use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

/// 0 for directions in the upper half plane (angle in `[0, pi)`), 1 otherwise.
fn half(v: &IntVector) -> u8 {
    if v[1].is_positive() || (v[1] == BigInt::from(0) && v[0].is_positive()) {
        0
    } else {
        1
    }
}

fn cross(a: &IntVector, b: &IntVector) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Exact counterclockwise angle order of nonzero planar vectors.
pub fn angle_cmp(a: &IntVector, b: &IntVector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| BigInt::from(0).cmp(&cross(a, b)))
}

/// One attempt: `k` random primitive vectors with coordinates in
/// `[-radius, radius]`, sorted by angle, consecutive pairs as maximal cones.
/// `None` when the sample is not a valid complete fan.
pub fn try_complete_fan_2d<R: Rng>(rng: &mut R, k: usize, radius: i64) -> Option<Fan> {
    let mut rays: Vec<IntVector> = Vec::new();
    while rays.len() < k {
        let v = IntVector::from([rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius)]);
        let Ok(p) = v.primitive() else { continue };
        if !rays.contains(&p) {
            rays.push(p);
        }
    }
    rays.sort_by(angle_cmp);
    let cones = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
    let fan = Fan::new(2, rays, cones).ok()?;
    fan.is_complete().then_some(fan)
}

/// A valid complete 2D fan with between 3 and 8 rays.
pub fn random_complete_fan_2d<R: Rng>(rng: &mut R) -> Fan {
    loop {
        let k = rng.gen_range(3..=8);
        if let Some(f) = try_complete_fan_2d(rng, k, 6) {
            return f;
        }
    }
}

/// Hull of 3 to 7 random points of `[0,6]^2`, resampled until it is
/// two-dimensional.
pub fn random_lattice_polygon<R: Rng>(rng: &mut R) -> LatticePolytope {
    loop {
        let k = rng.gen_range(3..=7);
        let points = (0..k).map(|_| IntVector::from([rng.gen_range(0..=6), rng.gen_range(0..=6)])).collect();
        if let Ok(p) = LatticePolytope::hull(2, points) {
            return p;
        }
    }
}
