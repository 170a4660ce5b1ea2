//! Additive actions on weighted projective spaces in Cox coordinates.
//!
//!     cargo run --example weighted_projective -- 1 2 3

use toric_additive::additive::admits_additive;
use toric_additive::cox::{action_formulas, cox_presentation, degree_zero_check};
use toric_additive::fan::builtin;

fn main() {
    let mut weights: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer weight")).collect();
    if weights.is_empty() {
        weights = vec![2, 3];
    }
    let fan = match builtin::wps_one(&weights) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let verdict = admits_additive(&fan);
    let c = verdict.witness.expect("weighted projective spaces always admit one");
    let formula = action_formulas(&c);
    for rule in formula.rendered() {
        println!("{rule}");
    }
    let p = cox_presentation(&fan).unwrap();
    println!("homogeneous: {}", degree_zero_check(&p, &formula).unwrap());
}
