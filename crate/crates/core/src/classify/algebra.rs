use num_traits::Zero;

use crate::error::Error;
use crate::lie_engine::LieSpan;
use crate::linalg::{self, Matrix, Vector};
use crate::weyl_core::Rational;

/// Lie algebra given by structure constants: `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<Vector>>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Self {
        StructureConstants {
            dim,
            c: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
        }
    }

    /// From the nonzero brackets `[e_i, e_j] = sum c_k e_k` with `i < j` or `i > j`;
    /// antisymmetry fills the rest.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let mut s = StructureConstants::abelian(dim);
        for &(i, j, terms) in brackets {
            for &(k, v) in terms {
                s.c[i][j][k] += Rational::from_integer(v.into());
                s.c[j][i][k] -= Rational::from_integer(v.into());
            }
        }
        s
    }

    /// Adds `v e_k` to `[e_i, e_j]` (and `-v e_k` to `[e_j, e_i]`).
    pub fn with_bracket(mut self, i: usize, j: usize, k: usize, v: i64) -> Self {
        self.c[i][j][k] += Rational::from_integer(v.into());
        self.c[j][i][k] -= Rational::from_integer(v.into());
        self
    }

    /// Structure constants of a closed span in its stored basis.
    pub fn from_span(span: &LieSpan) -> Result<Self, Error> {
        let n = span.dim();
        let mut s = StructureConstants::abelian(n);
        let b = span.basis();
        for i in 0..n {
            for j in i + 1..n {
                let v = span
                    .coordinates(&b[i].bracket(&b[j]))
                    .ok_or_else(|| Error::NotClosed(format!("[b{i}, b{j}] leaves the span")))?;
                for k in 0..n {
                    s.c[j][i][k] = -v[k].clone();
                }
                s.c[i][j] = v;
            }
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::from_integer(1.into());
        v
    }

    /// Matrix of `ad_x`; column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(x, &self.unit(j))).collect();
        linalg::transpose(&cols)
    }

    /// Largest violation-free check of the Jacobi identity on basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical basis of `[A, B]` for subspaces given by spanning rows.
    pub fn bracket_space(&self, a: &[Vector], b: &[Vector]) -> Matrix {
        let mut rows = Vec::new();
        for x in a {
            for y in b {
                let v = self.bracket(x, y);
                if v.iter().any(|c| !c.is_zero()) {
                    rows.push(v);
                }
            }
        }
        linalg::row_space(&rows)
    }

    pub fn full(&self) -> Matrix {
        linalg::identity(self.dim)
    }

    /// `D^0 = g, D^{l+1} = [D^l, D^l]`, stopped once the dimension repeats.
    pub fn derived_series(&self) -> Vec<Matrix> {
        series(self.full(), |d| self.bracket_space(d, d))
    }

    /// `n_0 = g, n_{l+1} = [g, n_l]`, stopped once the dimension repeats.
    pub fn lower_central_series(&self) -> Vec<Matrix> {
        let g = self.full();
        series(g.clone(), |n| self.bracket_space(&g, n))
    }

    /// Kernel of `x -> ad_x`.
    pub fn center(&self) -> Matrix {
        // x in center iff sum_i x_i c[i][j][k] = 0 for all j, k
        let n = self.dim;
        let rows: Matrix = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.c[i][j][k].clone()).collect())
            .collect();
        linalg::kernel(&rows, n)
    }

    /// `B_ij = tr(ad_i ad_j)`.
    pub fn killing_gram(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(&self.unit(i))).collect();
        let mut g = linalg::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = linalg::trace(&linalg::mat_mul(&ads[i], &ads[j]));
                g[j][i] = t.clone();
                g[i][j] = t;
            }
        }
        g
    }

    /// Structure constants of the subalgebra spanned by `rows` (assumed closed).
    pub fn restrict(&self, rows: &[Vector]) -> Option<StructureConstants> {
        let m = rows.len();
        let mut s = StructureConstants::abelian(m);
        for i in 0..m {
            for j in 0..m {
                let v = self.bracket(&rows[i], &rows[j]);
                s.c[i][j] = linalg::solve_combination(rows, &v)?;
            }
        }
        Some(s)
    }

    /// Structure constants after the change of basis `e'_i = sum_k p[i][k] e_k`.
    pub fn transformed(&self, p: &Matrix) -> Option<StructureConstants> {
        self.restrict(p)
    }
}

fn series(start: Matrix, mut next: impl FnMut(&Matrix) -> Matrix) -> Vec<Matrix> {
    let mut out = vec![start];
    loop {
        let last = out.last().unwrap();
        let n = next(last);
        if n.len() == last.len() {
            if !last.is_empty() {
                out.push(n);
            }
            return out;
        }
        out.push(n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_series() {
        let h = StructureConstants::from_brackets(3, &[(0, 1, &[(2, 1)])]);
        let dims: Vec<usize> = h.lower_central_series().iter().map(|m| m.len()).collect();
        assert_eq!(dims, vec![3, 1, 0]);
        assert_eq!(h.center().len(), 1);
        assert!(h.satisfies_jacobi());
    }

    #[test]
    fn sl2_is_perfect() {
        let s = StructureConstants::from_brackets(3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])]);
        let dims: Vec<usize> = s.derived_series().iter().map(|m| m.len()).collect();
        assert_eq!(dims, vec![3, 3]);
        assert_eq!(linalg::signature(&s.killing_gram()), (2, 1, 0));
    }
}
