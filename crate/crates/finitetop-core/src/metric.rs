//! Finite metric spaces as distance matrices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Point ids with a symmetric nonnegative distance matrix, zero on the
/// diagonal and positive off it. The triangle inequality is only
/// checked when asked for. Comparisons are exact on the stored entries;
/// a tolerance applies only to the symmetry check on load.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    ids: Vec<String>,
    dist: Vec<f64>,
}

impl FiniteMetricSpace {
    pub fn new<S: AsRef<str>>(ids: &[S], dist: &[Vec<f64>]) -> Result<Self> {
        Self::with_options(ids, dist, 0.0, false)
    }

    /// `sym_tol` loosens the symmetry check (the matrix is then
    /// symmetrized by averaging); `check_triangle` additionally
    /// enforces the triangle inequality.
    pub fn with_options<S: AsRef<str>>(
        ids: &[S],
        dist: &[Vec<f64>],
        sym_tol: f64,
        check_triangle: bool,
    ) -> Result<Self> {
        let n = ids.len();
        if n == 0 {
            return Err(Error::domain("metric space must have at least one point"));
        }
        let names: Vec<String> = ids.iter().map(|s| s.as_ref().to_string()).collect();
        {
            let mut sorted = names.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::domain("duplicate point id"));
            }
        }
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::domain(format!("distance matrix must be {n}x{n}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let d = dist[i][j];
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::domain(format!(
                        "distance entry ({i},{j}) must be finite and nonnegative"
                    )));
                }
                let gap = d - dist[j][i];
                if gap > sym_tol || gap < -sym_tol {
                    return Err(Error::domain(format!(
                        "asymmetric matrix at entries ({i},{j})/({j},{i})"
                    )));
                }
                if i == j && d != 0.0 {
                    return Err(Error::domain(format!("nonzero diagonal at ({i},{i})")));
                }
                if i != j && d == 0.0 && dist[j][i] == 0.0 {
                    return Err(Error::domain(format!(
                        "distinct points {i} and {j} at distance zero"
                    )));
                }
                flat.push((d + dist[j][i]) / 2.0);
            }
        }
        if check_triangle {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if flat[i * n + j] > flat[i * n + k] + flat[k * n + j] {
                            return Err(Error::domain(format!(
                                "triangle inequality fails on ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(FiniteMetricSpace { ids: names, dist: flat })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    #[inline]
    pub fn dist_idx(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.ids.len() + j]
    }

    /// Largest pairwise distance within a point-index subset.
    pub fn diameter_of(&self, subset: &[usize]) -> f64 {
        let mut d = 0.0;
        for (a, &i) in subset.iter().enumerate() {
            for &j in &subset[a + 1..] {
                let v = self.dist_idx(i, j);
                if v > d {
                    d = v;
                }
            }
        }
        d
    }

    pub fn diameter(&self) -> f64 {
        let all: Vec<usize> = (0..self.len()).collect();
        self.diameter_of(&all)
    }

    pub fn min_positive_distance(&self) -> Option<f64> {
        let mut best: Option<f64> = None;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let d = self.dist_idx(i, j);
                if best.is_none_or(|b| d < b) {
                    best = Some(d);
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let ids = ["a", "b"];
        assert!(FiniteMetricSpace::new(&ids, &[vec![0.0, 1.0], vec![1.0, 0.0]]).is_ok());
        assert!(FiniteMetricSpace::new(&ids, &[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(FiniteMetricSpace::new(&ids, &[vec![0.5, 1.0], vec![1.0, 0.0]]).is_err());
        assert!(FiniteMetricSpace::new(&ids, &[vec![0.0, 0.0], vec![0.0, 0.0]]).is_err());
        assert!(FiniteMetricSpace::new(&ids, &[vec![0.0, -1.0], vec![-1.0, 0.0]]).is_err());
    }

    #[test]
    fn triangle_flag() {
        let ids = ["a", "b", "c"];
        let bad = [
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ];
        assert!(FiniteMetricSpace::new(&ids, &bad).is_ok());
        assert!(FiniteMetricSpace::with_options(&ids, &bad, 0.0, true).is_err());
    }

    #[test]
    fn diameter() {
        let ids = ["a", "b", "c"];
        let m = FiniteMetricSpace::new(
            &ids,
            &[
                vec![0.0, 1.0, 2.0],
                vec![1.0, 0.0, 1.0],
                vec![2.0, 1.0, 0.0],
            ],
        )
        .unwrap();
        assert_eq!(m.diameter(), 2.0);
        assert_eq!(m.diameter_of(&[0, 1]), 1.0);
        assert_eq!(m.min_positive_distance(), Some(1.0));
    }
}
