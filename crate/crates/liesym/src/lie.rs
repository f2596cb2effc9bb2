//! Lie derivative, Lie bracket, divergence, truncated Lie series, and the
//! solution-preserving criterion.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::poly::{MultiPoly, Rational};

/// Lie derivative X_f(phi) = sum_i (d phi / d x_i) f_i.
pub fn lie_derivative(f: &VectorField, phi: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() != phi.nvars() {
        return Err(Error::VarMismatch(f.nvars(), phi.nvars()));
    }
    if !f.is_square() {
        return Err(Error::Dimension(format!(
            "Lie derivative needs a vector field on K^n, got {} components in {} variables",
            f.dim(),
            f.nvars()
        )));
    }
    let mut acc = MultiPoly::zero(phi.nvars());
    for i in 0..f.nvars() {
        acc = acc.add(&phi.partial(i)?.mul(f.component(i))?)?;
    }
    Ok(acc)
}

/// Lie bracket [f, g] = Dg f - Df g.
pub fn lie_bracket(f: &VectorField, g: &VectorField) -> Result<VectorField> {
    if f.nvars() != g.nvars() {
        return Err(Error::VarMismatch(f.nvars(), g.nvars()));
    }
    if !f.is_square() || !g.is_square() {
        return Err(Error::Dimension(
            "Lie bracket needs square vector fields".into(),
        ));
    }
    let dg_f = g.jacobian().apply(f)?;
    let df_g = f.jacobian().apply(g)?;
    dg_f.sub(&df_g)
}

/// div f = tr Df.
pub fn divergence(f: &VectorField) -> Result<MultiPoly> {
    if !f.is_square() {
        return Err(Error::Dimension("divergence needs a square field".into()));
    }
    f.jacobian().trace()
}

/// Outcome of the solution-preserving check; the full residual map
/// D Phi . f - g o Phi is kept for debugging failed identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPreserving {
    pub holds: bool,
    pub residual: VectorField,
}

/// Checks D Phi(x) f(x) = g(Phi(x)) exactly.
pub fn check_solution_preserving(
    phi: &VectorField,
    f: &VectorField,
    g: &VectorField,
) -> Result<SolutionPreserving> {
    if phi.nvars() != f.nvars() {
        return Err(Error::VarMismatch(phi.nvars(), f.nvars()));
    }
    if !f.is_square() {
        return Err(Error::Dimension("f must be a vector field on K^n".into()));
    }
    if g.nvars() != phi.dim() || !g.is_square() {
        return Err(Error::Dimension(format!(
            "g must be a vector field on K^{} (the codomain of Phi)",
            phi.dim()
        )));
    }
    let lhs = phi.jacobian().apply(f)?;
    let rhs = g.compose(phi)?;
    let residual = lhs.sub(&rhs)?;
    Ok(SolutionPreserving {
        holds: residual.is_zero(),
        residual,
    })
}

/// Truncated series in one formal parameter with polynomial-valued
/// coefficients; entry k already carries the 1/k! factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    pub parameter: char,
    pub coefficients: Vec<T>,
}

impl<T> TruncatedSeries<T> {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }
}

fn inverse_factorials(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut fact = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            fact *= BigInt::from(k as u64);
        }
        out.push(Rational::new(BigInt::one(), fact.clone()));
    }
    out
}

/// Partial sums of exp(t X_f)(phi): coefficient k is X_f^k(phi) / k!.
pub fn lie_series_transport(
    f: &VectorField,
    phi: &MultiPoly,
    order: usize,
) -> Result<TruncatedSeries<MultiPoly>> {
    let inv = inverse_factorials(order);
    let mut coefficients = Vec::with_capacity(order + 1);
    let mut current = phi.clone();
    for k in 0..=order {
        coefficients.push(current.scale(&inv[k]));
        if k < order {
            current = lie_derivative(f, &current)?;
        }
    }
    Ok(TruncatedSeries {
        parameter: 't',
        coefficients,
    })
}

/// Partial sums of exp(s ad h)(f): coefficient k is (ad h)^k(f) / k!.
pub fn adjoint_series(
    h: &VectorField,
    f: &VectorField,
    order: usize,
) -> Result<TruncatedSeries<VectorField>> {
    let inv = inverse_factorials(order);
    let mut coefficients = Vec::with_capacity(order + 1);
    let mut current = f.clone();
    for k in 0..=order {
        coefficients.push(current.scale(&inv[k]));
        if k < order {
            current = lie_bracket(h, &current)?;
        }
    }
    Ok(TruncatedSeries {
        parameter: 's',
        coefficients,
    })
}
