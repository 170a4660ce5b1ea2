//! Class group grading of the Cox ring.
//!
//!     cargo run --example cox_ring

use toric_additive::cox::cox_presentation;
use toric_additive::fan::builtin;

fn main() {
    for (name, fan) in builtin::bundled() {
        let p = cox_presentation(&fan).unwrap();
        let degrees: Vec<String> = p.degrees().iter().map(ToString::to_string).collect();
        print!("{name:>16}: Z^{} degrees {}", p.class_rank(), degrees.join(" "));
        if !p.is_free() {
            print!("  torsion {:?}", p.torsion());
        }
        println!();
    }
}
