//! Exact lattice algebra: normal forms and lattice points of polyhedra.
//!
//!     cargo run --example lattice_tools

use toric_additive::lattice::{hermite_normal_form, smith_normal_form, Constraint, InequalitySystem, IntMatrix, IntVector};

fn main() {
    let rays = IntMatrix::from_i64(&[&[1, 1], &[1, -1]]);
    let s = smith_normal_form(&rays);
    println!("invariant factors of {:?}: {:?}", rays.rows(), s.invariant_factors());

    let degrees = IntMatrix::from_i64(&[&[2, 1, 2, 5], &[1, 1, 1, 3]]);
    println!("Hermite form of {:?}: {:?}", degrees.rows(), hermite_normal_form(&degrees).rows());

    // the roots of P^2 with distinguished ray (1,0)
    let sys = InequalitySystem::from_constraints(
        2,
        vec![
            Constraint::eq(IntVector::from([1, 0]), -1),
            Constraint::ge(IntVector::from([0, 1]), 0),
            Constraint::ge(IntVector::from([-1, -1]), 0),
        ],
    )
    .unwrap();
    println!("lattice points: {:?}", sys.lattice_points());
}
