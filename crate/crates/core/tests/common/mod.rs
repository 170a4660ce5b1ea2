//! Independent oracles shared by the integration tests. They deliberately
//! avoid the library's enumeration and normal-form code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use toric_additive::fan::Fan;
use toric_additive::lattice::{IntMatrix, IntVector};

/// Ray index sets of all cones of the fan.
pub fn cone_ray_sets(fan: &Fan) -> BTreeSet<Vec<usize>> {
    fan.faces().iter().map(|c| c.rays().to_vec()).collect()
}

/// Root test straight from the definition: pairings, then for every cone on
/// which `e` vanishes, the ray set with `ray` added must be a cone.
pub fn is_root_by_definition(fan: &Fan, ray: usize, e: &IntVector) -> bool {
    let pair = |i: usize| fan.ray(i).dot(e);
    if pair(ray) != BigInt::from(-1) {
        return false;
    }
    if (0..fan.rays().len()).any(|i| i != ray && pair(i) < BigInt::zero()) {
        return false;
    }
    let cones = cone_ray_sets(fan);
    cones.iter().filter(|s| s.iter().all(|&i| pair(i).is_zero())).all(|s| {
        let mut t = s.clone();
        t.push(ray);
        t.sort_unstable();
        t.dedup();
        cones.contains(&t)
    })
}

/// Every root `(ray, e)` with `|e_i| <= bound`, by scanning the box.
pub fn brute_force_roots(fan: &Fan, bound: i64) -> BTreeSet<(usize, IntVector)> {
    let n = fan.dim();
    let mut out = BTreeSet::new();
    for coords in (0..n).map(|_| -bound..=bound).multi_cartesian_product() {
        let e = IntVector::from(coords);
        for ray in 0..fan.rays().len() {
            if is_root_by_definition(fan, ray, &e) {
                out.insert((ray, e.clone()));
            }
        }
    }
    out
}

/// Complete collections from a root list: `n` roots with distinct rays and
/// pairing matrix `-I`. Returned as sorted `(ray, e)` lists.
pub fn brute_force_collections(fan: &Fan, roots: &BTreeSet<(usize, IntVector)>) -> BTreeSet<Vec<(usize, IntVector)>> {
    let n = fan.dim();
    let roots: Vec<&(usize, IntVector)> = roots.iter().collect();
    let mut out = BTreeSet::new();
    for combo in roots.iter().combinations(n) {
        let rays: BTreeSet<usize> = combo.iter().map(|r| r.0).collect();
        if rays.len() != n {
            continue;
        }
        let ok = combo.iter().all(|(ri, _)| {
            combo.iter().all(|(rj, ej)| {
                let want = if ri == rj { -1 } else { 0 };
                fan.ray(*ri).dot(ej) == BigInt::from(want)
            })
        });
        if ok {
            let mut c: Vec<(usize, IntVector)> = combo.iter().map(|r| (**r).clone()).collect();
            c.sort();
            out.insert(c);
        }
    }
    out
}

/// Determinant by cofactor expansion.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinantal divisors `D_k = gcd of k x k minors`; the invariant factors
/// are `D_k / D_(k-1)`.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let (r, c) = (m.nrows(), m.ncols());
    let mut divisors = vec![BigInt::one()];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in (0..r).combinations(k) {
            for cols in (0..c).combinations(k) {
                let sub: Vec<Vec<BigInt>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// `x1^a*x2^b ...` from small exponents, exponent 1 omitted, 0 dropped.
pub fn monomial(exps: &[u32]) -> String {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
        .join("*")
}
