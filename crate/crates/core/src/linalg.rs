use std::fmt;

use crate::error::{structural, Result};
use crate::rational::Rational;

/// Dense rectangular matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Tasks exposed through [`exact_linear_algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinAlgTask {
    Rref,
    Rank,
    KernelBasis,
    Det,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinAlgResult {
    Rref(QMatrix),
    Rank(usize),
    KernelBasis(Vec<Vec<Rational>>),
    Det(Rational),
}

pub fn exact_linear_algebra(m: &QMatrix, task: LinAlgTask) -> Result<LinAlgResult> {
    Ok(match task {
        LinAlgTask::Rref => LinAlgResult::Rref(m.rref().0),
        LinAlgTask::Rank => LinAlgResult::Rank(m.rank()),
        LinAlgTask::KernelBasis => LinAlgResult::KernelBasis(m.kernel_basis()),
        LinAlgTask::Det => LinAlgResult::Det(m.det()?),
    })
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(structural(format!("row of length {} in a matrix with {} columns", r.len(), cols)));
            }
            data.extend(r);
        }
        Ok(QMatrix { rows: nrows, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        QMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = &factor * &m[(r, j)];
                        m[(i, j)] -= &delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Nonzero rows of the rref: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> QMatrix {
        let (m, piv) = self.rref();
        QMatrix { rows: piv.len(), cols: m.cols, data: m.data[..piv.len() * m.cols].to_vec() }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (m, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = -&m[(r, f)];
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(structural(format!("determinant of a non-square {}x{} matrix", self.rows, self.cols)));
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].recip();
            for i in c + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let factor = &m[(i, c)] * &inv;
                    for j in c..m.cols {
                        let delta = &factor * &m[(c, j)];
                        m[(i, j)] -= &delta;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Some solution `x` of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(structural("right-hand side length does not match row count"));
        }
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (m, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = m[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}
