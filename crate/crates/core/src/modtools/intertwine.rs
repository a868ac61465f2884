use crate::graded::{GeneratorId, MatrixRep};
use crate::linalg::{nullspace, Matrix};
use crate::scalar::Scalar;
use crate::{GaussianRational, RationalFunction};

use super::ToolError;

/// Basis of the degree-preserving maps `T: A → B` with `T·X_g = X'_g·T` for
/// every generator.
pub fn intertwiner_space<S: Scalar>(a: &MatrixRep<S>, b: &MatrixRep<S>) -> Vec<Matrix<S>> {
    let (na, nb) = (a.dim(), b.dim());
    // unknowns T[i][j] with deg_b(i) == deg_a(j)
    let unknowns: Vec<(usize, usize)> = (0..nb)
        .flat_map(|i| (0..na).map(move |j| (i, j)))
        .filter(|&(i, j)| b.basis_degrees()[i] == a.basis_degrees()[j])
        .collect();
    let index = |i: usize, j: usize| unknowns.iter().position(|&u| u == (i, j));
    let mut rows: Vec<Vec<S>> = Vec::new();
    for g in GeneratorId::ALL {
        let (xa, xb) = (a.mat(g), b.mat(g));
        // (T·Xa − Xb·T)[i][j] = Σ_k T[i][k]·Xa[k][j] − Σ_k Xb[i][k]·T[k][j]
        for i in 0..nb {
            for j in 0..na {
                let mut row = vec![S::zero(); unknowns.len()];
                for k in 0..na {
                    let c = xa.get(k, j);
                    if let (false, Some(u)) = (c.is_zero(), index(i, k)) {
                        row[u] = row[u].clone() + c.clone();
                    }
                }
                for k in 0..nb {
                    let c = xb.get(i, k);
                    if let (false, Some(u)) = (c.is_zero(), index(k, j)) {
                        row[u] = row[u].clone() - c.clone();
                    }
                }
                if !row.iter().all(S::is_zero) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, unknowns.len())
    } else {
        Matrix::from_rows(&rows)
    };
    nullspace(&system)
        .into_iter()
        .map(|x| {
            let mut t = Matrix::zeros(nb, na);
            for (val, &(i, j)) in x.into_iter().zip(&unknowns) {
                t.set(i, j, val);
            }
            t
        })
        .collect()
}

/// Intertwiner dimension after specializing both representations.
pub fn intertwiner_dim(
    a: &MatrixRep<RationalFunction>,
    b: &MatrixRep<RationalFunction>,
    e0: &GaussianRational,
    l0: &GaussianRational,
) -> Result<usize, ToolError> {
    let a = a.specialize(e0, l0)?;
    let b = b.specialize(e0, l0)?;
    Ok(intertwiner_space(&a, &b).len())
}
