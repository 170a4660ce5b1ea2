//! Complete collections and the automorphisms relating them.
//!
//!     cargo run --example collections

use toric_additive::additive::{complete_collections, equivalence_classes, find_equivalence};
use toric_additive::fan::{builtin, Fan};

fn show(name: &str, fan: &Fan) {
    let cs = complete_collections(fan);
    println!("{name}: {} complete collections", cs.len());
    for (i, c) in cs.iter().enumerate() {
        let roots: Vec<String> = c.roots().iter().map(ToString::to_string).collect();
        println!("  [{i}] {}", roots.join("  "));
    }
    if cs.len() > 1 {
        let w = find_equivalence(fan, &cs[0], &cs[1]).unwrap();
        println!("  [0] -> [1] via {:?}, rays {:?}", w.automorphism.matrix().rows(), w.ray_bijection);
    }
    println!("  {} equivalence class(es)", equivalence_classes(fan, &cs).len());
}

fn main() {
    show("P^2", &builtin::projective_space(2).unwrap());
    show("F_2", &builtin::hirzebruch(2).unwrap());
    show("(P^1)^2", &builtin::product_p1(2).unwrap());
    show("P(2,3,5)", &builtin::p235_model());
}
