//! Affine space has infinitely many roots; a bound truncates the listing.
//!
//!     cargo run --example affine_roots -- 3

use num_bigint::BigInt;
use toric_additive::additive::condition4_distinguished_span;
use toric_additive::demazure::{roots_for_ray, RootsForRay};
use toric_additive::fan::builtin;

fn main() {
    let bound: BigInt = std::env::args().nth(1).map(|s| s.parse().expect("integer bound")).unwrap_or(BigInt::from(2));
    let fan = builtin::affine_space(2).unwrap();
    for ray in 0..fan.rays().len() {
        assert_eq!(roots_for_ray(&fan, ray, None).unwrap(), RootsForRay::Infinite);
        let listed = roots_for_ray(&fan, ray, Some(&bound)).unwrap();
        let roots: Vec<String> = listed.listed().iter().map(|r| r.e().to_string()).collect();
        println!("ray {ray}: infinite; up to {bound}: {}", roots.join(" "));
    }
    println!("span without a bound: {:?}", condition4_distinguished_span(&fan, None));
}
