//! Polynomial vector fields and polynomial maps.
//!
//! A [`VectorField`] is an ordered list of components over a shared
//! variable set. With component count equal to the variable count it is a
//! vector field on K^n; with a different component count it serves as a
//! polynomial map K^n -> K^r (written `Phi` throughout).

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    nvars: usize,
    components: Vec<MultiPoly>,
}

impl VectorField {
    pub fn new(nvars: usize, components: Vec<MultiPoly>) -> Result<Self> {
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::VarMismatch(c.nvars(), nvars));
            }
        }
        Ok(VectorField { nvars, components })
    }

    pub fn zero(nvars: usize, dim: usize) -> Self {
        VectorField {
            nvars,
            components: vec![MultiPoly::zero(nvars); dim],
        }
    }

    /// The identity map x -> x.
    pub fn identity(nvars: usize) -> Self {
        let components = (0..nvars)
            .map(|i| MultiPoly::var(nvars, i).unwrap())
            .collect();
        VectorField { nvars, components }
    }

    /// The linear field x -> Mx for a square rational matrix given by rows.
    pub fn linear(matrix: &[Vec<Rational>]) -> Result<Self> {
        let n = matrix.len();
        let mut components = Vec::with_capacity(n);
        for row in matrix {
            if row.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            let mut c = MultiPoly::zero(n);
            for (j, a) in row.iter().enumerate() {
                c = c.add(&MultiPoly::var(n, j)?.scale(a))?;
            }
            components.push(c);
        }
        Ok(VectorField {
            nvars: n,
            components,
        })
    }

    /// The diagonal linear field x -> diag(weights) x.
    pub fn diagonal(weights: &[Rational]) -> Self {
        let n = weights.len();
        let components = (0..n)
            .map(|i| MultiPoly::var(n, i).unwrap().scale(&weights[i]))
            .collect();
        VectorField {
            nvars: n,
            components,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Codomain dimension (number of components).
    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_square(&self) -> bool {
        self.dim() == self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn component(&self, i: usize) -> &MultiPoly {
        &self.components[i]
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn into_components(self) -> Vec<MultiPoly> {
        self.components
    }

    pub fn total_degree(&self) -> i64 {
        self.components
            .iter()
            .map(|c| c.total_degree())
            .max()
            .unwrap_or(-1)
    }

    pub fn lowest_degree(&self) -> i64 {
        self.components
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.lowest_degree())
            .min()
            .unwrap_or(-1)
    }

    fn zip_with(
        &self,
        other: &VectorField,
        op: impl Fn(&MultiPoly, &MultiPoly) -> Result<MultiPoly>,
    ) -> Result<VectorField> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!(
                "component counts differ: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            nvars: self.nvars,
            components,
        })
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            nvars: self.nvars,
            components: self.components.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            nvars: self.nvars,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Componentwise scalar-function multiple `psi * f`.
    pub fn scale_poly(&self, psi: &MultiPoly) -> Result<VectorField> {
        let components = self
            .components
            .iter()
            .map(|c| c.mul(psi))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            nvars: self.nvars,
            components,
        })
    }

    /// Jacobian matrix: entry (i, j) = d component_i / d x_{j+1}.
    pub fn jacobian(&self) -> PolyMatrix {
        let rows = self.dim();
        let cols = self.nvars;
        let mut entries = Vec::with_capacity(rows * cols);
        for c in &self.components {
            for j in 0..cols {
                entries.push(c.partial(j).unwrap());
            }
        }
        PolyMatrix::new(rows, cols, self.nvars, entries).unwrap()
    }

    /// Composition `self(inner(x))`; `inner`'s codomain must match `self`'s
    /// domain.
    pub fn compose(&self, inner: &VectorField) -> Result<VectorField> {
        if inner.dim() != self.nvars {
            return Err(Error::Dimension(format!(
                "composition needs inner codomain {} to match outer domain, got {}",
                self.nvars,
                inner.dim()
            )));
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&inner.components))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            nvars: inner.nvars,
            components,
        })
    }

    /// Exact evaluation of the map at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    pub fn homogeneous_part(&self, d: u32) -> VectorField {
        VectorField {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .map(|c| c.homogeneous_part(d))
                .collect(),
        }
    }

    pub fn truncate_at(&self, d: u32) -> VectorField {
        VectorField {
            nvars: self.nvars,
            components: self.components.iter().map(|c| c.truncate_at(d)).collect(),
        }
    }

    /// Reinterprets the field in a larger variable set.
    pub fn pad_to(&self, nvars: usize) -> VectorField {
        VectorField {
            nvars,
            components: self.components.iter().map(|c| c.pad_to(nvars)).collect(),
        }
    }

    /// If every component is homogeneous linear, returns the matrix M with
    /// f(x) = Mx (rows over columns).
    pub fn as_linear_matrix(&self) -> Option<Vec<Vec<Rational>>> {
        let mut rows = Vec::with_capacity(self.dim());
        for c in &self.components {
            if !c.is_zero() && (c.total_degree() != 1 || c.lowest_degree() != 1) {
                return None;
            }
            let mut row = Vec::with_capacity(self.nvars);
            for j in 0..self.nvars {
                let mono = crate::poly::Monomial::var(self.nvars, j);
                row.push(c.coeff(&mono));
            }
            rows.push(row);
        }
        Some(rows)
    }

    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        self.render_with(&names)
    }

    pub fn render_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| c.render_with(names))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// True when the map is exactly x -> x.
pub fn is_identity_map(f: &VectorField) -> bool {
    f.is_square() && *f == VectorField::identity(f.nvars())
}
