use crate::scalar::Scalar;

use super::rref::rref_rows;

/// A subspace of `S^n` held as its unique reduced row-echelon basis, rows
/// ordered by pivot column.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut rows: Vec<Vec<S>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        let pivots = rref_rows(&mut rows);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon pivots; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(S::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds vectors, returning how many of them enlarged the space.
    pub fn extend(&mut self, vectors: impl IntoIterator<Item = Vec<S>>) -> usize {
        let before = self.dim();
        let fresh: Vec<Vec<S>> = vectors
            .into_iter()
            .map(|v| self.reduce(&v))
            .filter(|v| !v.iter().all(S::is_zero))
            .collect();
        if fresh.is_empty() {
            return 0;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.extend(fresh);
        self.pivots = rref_rows(&mut rows);
        self.basis = rows;
        self.dim() - before
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussianRational, RationalFunction};

    fn g(k: i64) -> GaussianRational {
        GaussianRational::from_int(k)
    }

    #[test]
    fn echelon_basis_is_canonical() {
        let a = Subspace::span(3, vec![vec![g(1), g(1), g(0)], vec![g(0), g(1), g(1)]]);
        let b = Subspace::span(3, vec![vec![g(1), g(2), g(1)], vec![g(1), g(0), g(-1)]]);
        assert_eq!(a, b);
        assert!(a.contains(&[g(2), g(3), g(1)]));
        assert!(!a.contains(&[g(0), g(0), g(1)]));
    }

    #[test]
    fn extend_counts_new_directions() {
        let mut s = Subspace::span(3, vec![vec![g(1), g(0), g(0)]]);
        assert_eq!(s.extend(vec![vec![g(2), g(0), g(0)], vec![g(0), g(0), g(5)]]), 1);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 2]);
    }

    #[test]
    fn vanishing_on_locus_after_specialization() {
        let f = &RationalFunction::lambda() - &(&RationalFunction::e() * &RationalFunction::e());
        let v: Vec<GaussianRational> = vec![f.specialize(&g(1), &g(1)).unwrap(), g(0)];
        assert_eq!(Subspace::span(2, vec![v]).dim(), 0);
        assert_eq!(Subspace::span(2, vec![vec![f, RationalFunction::from_int(0)]]).dim(), 1);
    }
}
