//! Cone pairs connected by the orbits of a root subgroup.
//!
//!     cargo run --example orbit_pairs

use toric_additive::demazure::{all_roots, he_connected_pairs};
use toric_additive::fan::builtin;

fn main() {
    let fan = builtin::hirzebruch(1).unwrap();
    for root in all_roots(&fan, None).unwrap().roots() {
        let pairs: Vec<String> =
            he_connected_pairs(&fan, root).iter().map(|p| format!("{:?} < {:?}", p.facet, p.cone)).collect();
        println!("{root:>10}: {}", pairs.join(", "));
    }
}
