use crate::scalar::Scalar;

use super::Matrix;

/// Reduces `rows` in place to reduced row-echelon form and returns the pivot
/// columns. Zero rows are dropped. Any nonzero entry is a valid pivot, so over
/// `RationalFunction` this is generic-parameter elimination.
pub fn rref_rows<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot is invertible");
        for v in rows[r].iter_mut().skip(c) {
            if !v.is_zero() {
                *v = v.clone() * inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut rows: Vec<Vec<S>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    rref_rows(&mut rows).len()
}

/// Basis of the right null space `{x : m·x = 0}`, one vector per free column.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let n = m.cols();
    let mut rows: Vec<Vec<S>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let pivots = rref_rows(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![S::zero(); n];
            x[f] = S::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    x[p] = -row[f].clone();
                }
            }
            x
        })
        .collect()
}

/// Solves `a·X = b` for `X`, returning `None` when some column of `b` is not
/// in the column space of `a` or when `a` has dependent columns.
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Option<Matrix<S>> {
    assert_eq!(a.rows(), b.rows(), "row mismatch in solve");
    let n = a.cols();
    let mut rows: Vec<Vec<S>> = (0..a.rows())
        .map(|r| a.row(r).iter().chain(b.row(r)).cloned().collect())
        .collect();
    let pivots = rref_rows(&mut rows);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    let mut x = Matrix::zeros(n, b.cols());
    for (k, row) in rows.iter().enumerate() {
        for c in 0..b.cols() {
            x.set(k, c, row[n + c].clone());
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussianRational, RationalFunction};
    use num_traits::Zero;

    fn g(k: i64) -> GaussianRational {
        GaussianRational::from_int(k)
    }

    #[test]
    fn duplicate_rows_collapse() {
        let mut rows = vec![vec![g(1), g(0), g(2)], vec![g(1), g(0), g(2)]];
        assert_eq!(rref_rows(&mut rows), vec![0]);
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = Matrix::from_rows(&[vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let a = Matrix::from_rows(&[vec![g(2), g(0)], vec![g(0), g(3)], vec![g(1), g(1)]]);
        let b = Matrix::from_rows(&[vec![g(4)], vec![g(3)], vec![g(3)]]);
        assert_eq!(solve(&a, &b).unwrap(), Matrix::from_rows(&[vec![g(2)], vec![g(1)]]));
        let bad = Matrix::from_rows(&[vec![g(4)], vec![g(3)], vec![g(0)]]);
        assert!(solve(&a, &bad).is_none());
    }

    #[test]
    fn symbolic_rank_is_generic() {
        let e = RationalFunction::e();
        let l = RationalFunction::lambda();
        let m = Matrix::from_rows(&[vec![e.clone(), l.clone()], vec![l.clone(), l.clone()]]);
        assert_eq!(rank(&m), 2);
        let m = Matrix::from_rows(&[vec![e.clone(), l.clone()], vec![&e * &e, &e * &l]]);
        assert_eq!(rank(&m), 1);
    }
}
