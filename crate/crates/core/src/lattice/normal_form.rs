//! Smith and Hermite normal forms over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntMatrix, IntVector};

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }
}

type Grid = Vec<Vec<BigInt>>;

fn to_grid(m: &IntMatrix) -> Grid {
    m.rows().iter().map(|r| r.coords().to_vec()).collect()
}

fn from_grid(g: Grid, ncols: usize) -> IntMatrix {
    IntMatrix::with_cols(g.into_iter().map(IntVector::new).collect(), ncols).expect("rectangular")
}

fn grid_identity(n: usize) -> Grid {
    to_grid(&IntMatrix::identity(n))
}

/// row_dst -= q * row_src
fn row_axpy(g: &mut Grid, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..g[dst].len() {
        let v = &g[src][j] * q;
        g[dst][j] -= v;
    }
}

/// col_dst -= q * col_src
fn col_axpy(g: &mut Grid, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in g.iter_mut() {
        let v = &row[src] * q;
        row[dst] -= v;
    }
}

fn swap_cols(g: &mut Grid, a: usize, b: usize) {
    for row in g.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = to_grid(m);
    let mut u = grid_identity(r);
    let mut v = grid_identity(c);

    'outer: for t in 0..r.min(c) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break 'outer;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..c {
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    SmithForm { u: from_grid(u, r), d: from_grid(a, c), v: from_grid(v, c) }
}

/// Row-style Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`. Zero rows sink to the bottom. Two matrices
/// have the same form iff they differ by a unimodular left factor.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = to_grid(m);
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        loop {
            let best = (row..r).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| a[i][col].abs());
            let Some(p) = best else { break };
            a.swap(row, p);
            let mut done = true;
            for i in row + 1..r {
                let q = a[i][col].div_floor(&a[row][col]);
                row_axpy(&mut a, i, row, &q);
                done &= a[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            for x in a[row].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..row {
            let q = a[i][col].div_floor(&a[row][col]);
            row_axpy(&mut a, i, row, &q);
        }
        row += 1;
    }
    from_grid(a, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.determinant().unwrap().abs() == BigInt::from(1));
        assert!(s.v.determinant().unwrap().abs() == BigInt::from(1));
        s
    }

    #[test]
    fn smith_examples() {
        assert_eq!(check(&IntMatrix::identity(2)).d, IntMatrix::identity(2));
        let s = check(&IntMatrix::from_i64(&[&[1, 1], &[1, -1]]));
        assert_eq!(s.d, IntMatrix::from_i64(&[&[1, 0], &[0, 2]]));
        // diag(2,3) is not in normal form: 2 does not divide 3
        let s = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn smith_rectangular() {
        let m = IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[-1, 2], &[0, -1]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(check(&IntMatrix::zeros(2, 3)).invariant_factors(), Vec::<BigInt>::new());
    }

    #[test]
    fn hermite_is_left_invariant() {
        let g = IntMatrix::from_i64(&[&[1, 0, 1, 2], &[0, 1, 0, 1]]);
        assert_eq!(hermite_normal_form(&g), g);
        let w = IntMatrix::from_i64(&[&[2, 1], &[-1, 0]]);
        assert_eq!(hermite_normal_form(&w.mul(&g).unwrap()), g);
        let neg = IntMatrix::from_i64(&[&[-2, -3, -1]]);
        assert_eq!(hermite_normal_form(&neg), IntMatrix::from_i64(&[&[2, 3, 1]]));
    }
}
