//! Both additive-action criteria on random complete fans and polygons.
//!
//!     cargo run --release --example random_theorem_check -- 500

use rand::rngs::StdRng;
use rand::SeedableRng;
use toric_additive::additive::theorem3con_report;
use toric_additive::polytope::check_polytope_theorem;
use toric_additive::random::{random_complete_fan_2d, random_lattice_polygon};

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("sample count")).unwrap_or(200);
    let mut rng = StdRng::seed_from_u64(2024);
    let mut admits = 0;
    for _ in 0..n {
        let f = random_complete_fan_2d(&mut rng);
        let r = theorem3con_report(&f).unwrap();
        assert!(r.agree(), "disagreement on {}", f.to_data().to_json());
        admits += usize::from(r.complete_collection_exists);
    }
    println!("fans: {admits}/{n} admit an additive action, criteria agree on all");
    let mut inscribed = 0;
    for _ in 0..n {
        let p = random_lattice_polygon(&mut rng);
        let r = check_polytope_theorem(&p);
        assert_eq!(r.inscribed, r.fan_admits, "disagreement on {:?}", p.vertices());
        inscribed += usize::from(r.inscribed);
    }
    println!("polygons: {inscribed}/{n} inscribed in a rectangle, criteria agree on all");
}
