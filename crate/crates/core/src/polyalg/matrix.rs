use alloc::vec::Vec;

use super::poly::MultiPoly;
use super::PolyError;

/// Largest matrix accepted by [`det_poly_matrix`].
pub const DEFAULT_DET_BOUND: usize = 12;

/// Square matrix of polynomials over a common variable count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    n: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize, nvars: usize) -> Self {
        PolyMatrix {
            n,
            nvars,
            entries: (0..n * n).map(|_| MultiPoly::zero(nvars)).collect(),
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zero(n, nvars);
        for i in 0..n {
            m.set(i, i, MultiPoly::one(nvars));
        }
        m
    }

    /// Builds from row-major entries; all must share `nvars`.
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self, PolyError> {
        let n = rows.len();
        let nvars = rows
            .first()
            .and_then(|r| r.first())
            .map(MultiPoly::nvars)
            .unwrap_or(0);
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(PolyError::NotSquare);
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(PolyError::VariableMismatch {
                        left: nvars,
                        right: p.nvars(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { n, nvars, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.n + j] = p;
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        PolyMatrix {
            n: self.n,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n, self.nvars);
        for i in 0..n {
            for j in 0..n {
                let mut acc = MultiPoly::zero(self.nvars);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn without(&self, i: usize, j: usize) -> Result<PolyMatrix, PolyError> {
        if i >= self.n || j >= self.n {
            return Err(PolyError::IndexOutOfRange {
                row: i,
                col: j,
                size: self.n,
            });
        }
        let mut entries = Vec::with_capacity((self.n - 1) * (self.n - 1));
        for r in (0..self.n).filter(|&r| r != i) {
            for c in (0..self.n).filter(|&c| c != j) {
                entries.push(self.get(r, c).clone());
            }
        }
        Ok(PolyMatrix {
            n: self.n - 1,
            nvars: self.nvars,
            entries,
        })
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.entries.iter().map(|p| p.eval(x)).collect()
    }
}

/// Exact determinant with the default size bound.
pub fn det_poly_matrix(m: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    det_with_bound(m, DEFAULT_DET_BOUND)
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn det_with_bound(m: &PolyMatrix, bound: usize) -> Result<MultiPoly, PolyError> {
    let n = m.n;
    if n > bound {
        return Err(PolyError::SizeBound { size: n, bound });
    }
    if n == 0 {
        return Ok(MultiPoly::one(m.nvars));
    }
    let mut a: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = MultiPoly::one(m.nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(m.nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Determinant of `m` with row `i` and column `j` deleted (0-based).
pub fn minor(m: &PolyMatrix, i: usize, j: usize) -> Result<MultiPoly, PolyError> {
    det_poly_matrix(&m.without(i, j)?)
}
