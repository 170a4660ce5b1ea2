//! Demazure roots of a Hirzebruch surface and their derivations.
//!
//!     cargo run --example hirzebruch_roots -- 3

use toric_additive::demazure::{all_roots, derivation};
use toric_additive::fan::builtin;

fn main() {
    let d: i64 = std::env::args().nth(1).map(|s| s.parse().expect("integer d")).unwrap_or(3);
    let fan = builtin::hirzebruch(d).expect("d >= 1");
    println!("F_{d} rays: {:?}", fan.rays());
    let roots = all_roots(&fan, None).unwrap();
    for root in roots.roots() {
        println!("  ray {} e = {:<8} {}", root.ray(), root.e().to_string(), derivation(root));
    }
    println!("{} roots", roots.len());
}
