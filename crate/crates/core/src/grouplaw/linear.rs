//! Square linear systems over a prime field.

use crate::field::FieldElement;

/// A `g x g` system `matrix * x = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Vec<Vec<FieldElement>>,
    rhs: Vec<FieldElement>,
}

impl LinearSystem {
    /// Panics unless `matrix` is square with one row per `rhs` entry.
    pub fn new(matrix: Vec<Vec<FieldElement>>, rhs: Vec<FieldElement>) -> Self {
        let n = rhs.len();
        assert!(n > 0, "empty system");
        assert_eq!(matrix.len(), n, "row count");
        assert!(
            matrix.iter().all(|row| row.len() == n),
            "matrix must be square"
        );
        LinearSystem { matrix, rhs }
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    pub fn matrix(&self) -> &[Vec<FieldElement>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[FieldElement] {
        &self.rhs
    }

    /// Gauss-Jordan elimination on the augmented matrix. On a singular
    /// matrix the error carries its rank.
    pub fn solve(&self) -> Result<Vec<FieldElement>, usize> {
        let n = self.dim();
        let mut aug: Vec<Vec<FieldElement>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, &b)| {
                let mut r = row.clone();
                r.push(b);
                r
            })
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, piv);
            let inv = aug[rank][col].inv().expect("pivot is nonzero");
            for c in col..=n {
                aug[rank][c] *= inv;
            }
            for r in 0..n {
                if r == rank || aug[r][col].is_zero() {
                    continue;
                }
                let factor = aug[r][col];
                for c in col..=n {
                    let sub = factor * aug[rank][c];
                    aug[r][c] -= sub;
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(rank);
        }
        Ok(aug.into_iter().map(|row| row[n]).collect())
    }

    pub fn rank(&self) -> usize {
        match self.solve() {
            Ok(_) => self.dim(),
            Err(rank) => rank,
        }
    }

    pub fn determinant(&self) -> FieldElement {
        determinant(self.matrix.clone())
    }

    /// `(det M, [det M_1, ..., det M_n])` where `M_j` has column `j`
    /// replaced by the right-hand side.
    pub fn cramer(&self) -> (FieldElement, Vec<FieldElement>) {
        let n = self.dim();
        let minors = (0..n)
            .map(|j| {
                let mut m = self.matrix.clone();
                for (row, &b) in m.iter_mut().zip(&self.rhs) {
                    row[j] = b;
                }
                determinant(m)
            })
            .collect();
        (self.determinant(), minors)
    }
}

fn determinant(mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let modulus = m[0][0].modulus();
    let mut det = modulus.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return modulus.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        let inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = m[r][col] * inv;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = factor * m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
