//! Matrices of polynomials and exact determinants.
//!
//! Determinants use cofactor expansion for size <= 3 and fraction-free
//! Bareiss elimination above that, staying inside the polynomial ring the
//! whole way (every division in Bareiss is exact).

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, nvars: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "matrix wants {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.nvars() != nvars {
                return Err(Error::VarMismatch(e.nvars(), nvars));
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            nvars,
            entries,
        })
    }

    /// Matrix whose columns are the given fields (all sharing one variable
    /// set); rows run over components.
    pub fn from_columns(fields: &[&crate::field::VectorField]) -> Result<Self> {
        let first = fields
            .first()
            .ok_or_else(|| Error::Dimension("need at least one column".into()))?;
        let rows = first.dim();
        let nvars = first.nvars();
        for f in fields {
            if f.dim() != rows {
                return Err(Error::Dimension(format!(
                    "column heights differ: {} vs {}",
                    f.dim(),
                    rows
                )));
            }
            if f.nvars() != nvars {
                return Err(Error::VarMismatch(f.nvars(), nvars));
            }
        }
        let mut entries = Vec::with_capacity(rows * fields.len());
        for i in 0..rows {
            for f in fields {
                entries.push(f.component(i).clone());
            }
        }
        PolyMatrix::new(rows, fields.len(), nvars, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    /// Submatrix picked by row and column index lists (ascending order is
    /// the caller's convention for minors).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            rows: row_idx.len(),
            cols: col_idx.len(),
            nvars: self.nvars,
            entries,
        }
    }

    /// Matrix-vector product with a field (columns count must match the
    /// field's component count).
    pub fn apply(&self, v: &crate::field::VectorField) -> Result<crate::field::VectorField> {
        if v.dim() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector has {} components",
                self.cols,
                v.dim()
            )));
        }
        let mut components = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = MultiPoly::zero(self.nvars);
            for j in 0..self.cols {
                acc = acc.add(&self.entry(i, j).mul(v.component(j))?)?;
            }
            components.push(acc);
        }
        crate::field::VectorField::new(self.nvars, components)
    }

    pub fn trace(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = MultiPoly::zero(self.nvars);
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i))?;
        }
        Ok(acc)
    }

    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        match n {
            0 => Ok(MultiPoly::one(self.nvars)),
            1..=3 => Ok(self.det_cofactor()),
            _ => Ok(self.det_bareiss()),
        }
    }

    fn det_cofactor(&self) -> MultiPoly {
        let n = self.rows;
        match n {
            1 => self.entry(0, 0).clone(),
            2 => {
                let ad = self.entry(0, 0).mul(self.entry(1, 1)).unwrap();
                let bc = self.entry(0, 1).mul(self.entry(1, 0)).unwrap();
                ad.sub(&bc).unwrap()
            }
            _ => {
                let mut acc = MultiPoly::zero(self.nvars);
                let rest: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let minor = self.submatrix(&rest, &cols).det_cofactor();
                    let term = self.entry(0, j).mul(&minor).unwrap();
                    if j % 2 == 0 {
                        acc = acc.add(&term).unwrap();
                    } else {
                        acc = acc.sub(&term).unwrap();
                    }
                }
                acc
            }
        }
    }

    /// Fraction-free elimination; the division at each step is exact in the
    /// polynomial ring. Column pivoting only swaps rows, tracking the sign.
    fn det_bareiss(&self) -> MultiPoly {
        let n = self.rows;
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = MultiPoly::one(self.nvars);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = !sign;
                    }
                    None => return MultiPoly::zero(self.nvars),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[k][k]
                        .mul(&m[i][j])
                        .unwrap()
                        .sub(&m[i][k].mul(&m[k][j]).unwrap())
                        .unwrap();
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign {
            det.neg()
        } else {
            det
        }
    }
}
