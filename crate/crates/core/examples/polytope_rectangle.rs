//! The rectangle criterion against the normal fan's complete collections.
//!
//!     cargo run --example polytope_rectangle

use toric_additive::polytope::{builtin, check_polytope_theorem};

fn main() {
    for (name, p) in builtin::bundled() {
        let r = check_polytope_theorem(&p);
        print!("{name:>14}: inscribed {:<5} normal fan admits {:<5}", r.inscribed, r.fan_admits);
        if let Some(w) = p.inscribed_in_rectangle() {
            print!(" at {} with edges {:?}", w.vertex, w.edge_basis);
        }
        println!();
    }
    let t = builtin::trapezoid();
    for f in t.facets() {
        println!("trapezoid facet {} . x <= {}", f.normal, f.rhs);
    }
    println!("normal fan: {}", t.normal_fan().to_data().to_json());
}
