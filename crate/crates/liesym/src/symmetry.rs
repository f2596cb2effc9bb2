//! Verification and degree-bounded discovery of infinitesimal symmetries,
//! orbital symmetries, linear-map symmetries, and point symmetries of
//! second-order equations.
//!
//! Discovery is exact linear algebra over the coefficient space up to the
//! stated degree bound; completeness beyond the bound is never claimed.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::lie::lie_bracket;
use crate::linalg::RatMatrix;
use crate::poly::{MultiPoly, Rational};
use crate::solve;

/// Result of a commutation check, keeping the full bracket residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketCheck {
    pub commutes: bool,
    pub residual: VectorField,
}

/// h is an infinitesimal symmetry of f iff [h, f] = 0.
pub fn check_symmetry(h: &VectorField, f: &VectorField) -> Result<BracketCheck> {
    let residual = lie_bracket(h, f)?;
    Ok(BracketCheck {
        commutes: residual.is_zero(),
        residual,
    })
}

/// Certificate for an orbital symmetry: [h, f] = cofactor * f exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofactorCertificate {
    pub cofactor: MultiPoly,
    /// [h, f] - cofactor * f; zero whenever the certificate was produced by
    /// a successful solve.
    pub residual: VectorField,
}

/// Default cofactor degree bound: any exact solution of `[h,f] = lambda f`
/// satisfies `deg lambda <= deg [h,f] - (lowest degree of f)` term by term.
pub fn default_cofactor_bound(h: &VectorField, f: &VectorField) -> Result<u32> {
    let bracket = lie_bracket(h, f)?;
    let low = f.lowest_degree();
    Ok(u32::try_from((bracket.total_degree() - low).max(0)).unwrap())
}

/// Finds polynomial lambda with deg <= bound and [h, f] = lambda f, if one
/// exists within the bound.
pub fn check_orbital_symmetry(
    h: &VectorField,
    f: &VectorField,
    cofactor_degree_bound: Option<u32>,
) -> Result<Option<CofactorCertificate>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("f"));
    }
    let bound = match cofactor_degree_bound {
        Some(b) => b,
        None => default_cofactor_bound(h, f)?,
    };
    let bracket = lie_bracket(h, f)?;
    let monos = solve::monomials_up_to(f.nvars(), bound);
    let columns: Vec<Vec<MultiPoly>> = monos
        .iter()
        .map(|m| {
            let mp = MultiPoly::monomial(f.nvars(), &m.0, Rational::from_integer(1.into()))
                .unwrap();
            f.scale_poly(&mp).unwrap().into_components()
        })
        .collect();
    let Some(coeffs) = solve::solve_stacked(&columns, bracket.components()) else {
        return Ok(None);
    };
    let cofactor = solve::decode_poly(f.nvars(), &monos, &coeffs);
    let residual = bracket.sub(&f.scale_poly(&cofactor)?)?;
    debug_assert!(residual.is_zero());
    Ok(Some(CofactorCertificate { cofactor, residual }))
}

/// A linearly independent set of fields satisfying a linear defining
/// condition exactly, in reduced echelon convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldBasis {
    pub degree_bound: u32,
    pub basis: Vec<VectorField>,
}

impl FieldBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of { h : deg h <= bound, [h, f] = 0 }.
pub fn centralizer_basis(f: &VectorField, degree_bound: u32) -> Result<FieldBasis> {
    if !f.is_square() {
        return Err(Error::Dimension("centralizer needs a square field".into()));
    }
    let n = f.nvars();
    let coords = solve::field_coords(n, n, degree_bound);
    let columns: Vec<Vec<MultiPoly>> = coords
        .iter()
        .map(|(m, j)| {
            let unit = solve::unit_field(n, n, m, *j);
            lie_bracket(&unit, f).unwrap().into_components()
        })
        .collect();
    let basis = solve::nullspace_stacked(&columns)
        .into_iter()
        .map(|v| solve::decode_field(n, n, &coords, &v))
        .collect();
    Ok(FieldBasis {
        degree_bound,
        basis,
    })
}

/// Basis of the joint solution space of [h, f] = lambda f with deg h and
/// deg lambda bounded, projected to (h, lambda) pairs.
pub fn normalizer_basis(
    f: &VectorField,
    degree_bound: u32,
    cofactor_degree_bound: u32,
) -> Result<Vec<(VectorField, MultiPoly)>> {
    if !f.is_square() {
        return Err(Error::Dimension("normalizer needs a square field".into()));
    }
    let n = f.nvars();
    let h_coords = solve::field_coords(n, n, degree_bound);
    let l_monos = solve::monomials_up_to(n, cofactor_degree_bound);
    let mut columns: Vec<Vec<MultiPoly>> = Vec::with_capacity(h_coords.len() + l_monos.len());
    for (m, j) in &h_coords {
        let unit = solve::unit_field(n, n, m, *j);
        columns.push(lie_bracket(&unit, f)?.into_components());
    }
    for m in &l_monos {
        let mp = MultiPoly::monomial(n, &m.0, Rational::from_integer((-1).into()))?;
        columns.push(f.scale_poly(&mp)?.into_components());
    }
    let pairs = solve::nullspace_stacked(&columns)
        .into_iter()
        .map(|v| {
            let h = solve::decode_field(n, n, &h_coords, &v[..h_coords.len()]);
            let lambda = solve::decode_poly(n, &l_monos, &v[h_coords.len()..]);
            (h, lambda)
        })
        .collect();
    Ok(pairs)
}

/// T defines a linear-map symmetry of f iff f(Tx) = T f(x); T must be
/// invertible.
pub fn check_linear_symmetry(t: &[Vec<Rational>], f: &VectorField) -> Result<bool> {
    let n = f.nvars();
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!(
            "matrix must be {n}x{n} to act on f"
        )));
    }
    if !f.is_square() {
        return Err(Error::Dimension(
            "linear symmetry check needs a square field".into(),
        ));
    }
    let tm = RatMatrix::from_rows(t.to_vec());
    if tm.determinant().is_zero() {
        return Err(Error::Singular);
    }
    let t_field = VectorField::linear(t)?;
    let f_of_tx = f.compose(&t_field)?;
    let mut t_of_f = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = MultiPoly::zero(n);
        for j in 0..n {
            acc = acc.add(&f.component(j).scale(&t[i][j]))?;
        }
        t_of_f.push(acc);
    }
    let t_of_f = VectorField::new(n, t_of_f)?;
    Ok(f_of_tx == t_of_f)
}

/// Prolongation of a field g on K^n to phase space K^2n:
/// (x, y) -> (g(x), Dg(x) y).
pub fn prolong(g: &VectorField) -> Result<VectorField> {
    if !g.is_square() {
        return Err(Error::Dimension("prolongation needs a square field".into()));
    }
    let n = g.nvars();
    let two_n = 2 * n;
    let mut comps = Vec::with_capacity(two_n);
    for c in g.components() {
        comps.push(c.pad_to(two_n));
    }
    for i in 0..n {
        let mut acc = MultiPoly::zero(two_n);
        for j in 0..n {
            let dg = g.component(i).partial(j)?.pad_to(two_n);
            let yj = MultiPoly::var(two_n, n + j)?;
            acc = acc.add(&dg.mul(&yj)?)?;
        }
        comps.push(acc);
    }
    VectorField::new(two_n, comps)
}

/// Residual of the second-order point-symmetry identity
/// D^2 g(x)(y,y) + Dg(x) h(x,y) - D_1 h(x,y) g(x) - D_2 h(x,y) Dg(x) y,
/// a field with n components in the 2n variables (x, y).
fn second_order_residual(g: &VectorField, h: &VectorField) -> Result<VectorField> {
    let n = g.nvars();
    let two_n = 2 * n;
    if !g.is_square() {
        return Err(Error::Dimension("g must be a field on K^n".into()));
    }
    if h.nvars() != two_n || h.dim() != n {
        return Err(Error::Dimension(format!(
            "h must have {n} components in {two_n} variables (x, y)"
        )));
    }
    // Dg(x) y as a field in (x, y)
    let mut dg_y = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = MultiPoly::zero(two_n);
        for j in 0..n {
            let dg = g.component(i).partial(j)?.pad_to(two_n);
            acc = acc.add(&dg.mul(&MultiPoly::var(two_n, n + j)?)?)?;
        }
        dg_y.push(acc);
    }
    let mut residual = Vec::with_capacity(n);
    for i in 0..n {
        // D^2 g_i(x)(y, y)
        let mut d2g = MultiPoly::zero(two_n);
        for j in 0..n {
            for k in 0..n {
                let second = g.component(i).partial(j)?.partial(k)?;
                if second.is_zero() {
                    continue;
                }
                let yj = MultiPoly::var(two_n, n + j)?;
                let yk = MultiPoly::var(two_n, n + k)?;
                d2g = d2g.add(&second.pad_to(two_n).mul(&yj)?.mul(&yk)?)?;
            }
        }
        // Dg_i(x) h(x, y)
        let mut dg_h = MultiPoly::zero(two_n);
        for j in 0..n {
            let dg = g.component(i).partial(j)?.pad_to(two_n);
            dg_h = dg_h.add(&dg.mul(h.component(j))?)?;
        }
        // D_1 h_i(x, y) g(x)
        let mut d1h_g = MultiPoly::zero(two_n);
        for j in 0..n {
            d1h_g = d1h_g.add(&h.component(i).partial(j)?.mul(&g.component(j).pad_to(two_n))?)?;
        }
        // D_2 h_i(x, y) Dg(x) y
        let mut d2h_dgy = MultiPoly::zero(two_n);
        for j in 0..n {
            d2h_dgy = d2h_dgy.add(&h.component(i).partial(n + j)?.mul(&dg_y[j])?)?;
        }
        residual.push(d2g.add(&dg_h)?.sub(&d1h_g)?.sub(&d2h_dgy)?);
    }
    VectorField::new(two_n, residual)
}

/// Result of the second-order point-symmetry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondOrderCheck {
    pub holds: bool,
    pub residual: VectorField,
}

/// Checks whether g generates point symmetries of the second-order
/// equation x'' = h(x, x').
pub fn check_second_order_symmetry(g: &VectorField, h: &VectorField) -> Result<SecondOrderCheck> {
    let residual = second_order_residual(g, h)?;
    Ok(SecondOrderCheck {
        holds: residual.is_zero(),
        residual,
    })
}

/// Basis (echelon convention) of polynomial g with deg <= bound solving the
/// second-order point-symmetry condition for x'' = h(x, x').
pub fn second_order_symmetry_basis(h: &VectorField, degree_bound: u32) -> Result<FieldBasis> {
    let n = h.dim();
    if h.nvars() != 2 * n {
        return Err(Error::Dimension(format!(
            "h must have {} components in {} variables (x, y)",
            n,
            2 * n
        )));
    }
    let coords = solve::field_coords(n, n, degree_bound);
    let columns: Vec<Vec<MultiPoly>> = coords
        .iter()
        .map(|(m, j)| {
            let unit = solve::unit_field(n, n, m, *j);
            second_order_residual(&unit, h).map(VectorField::into_components)
        })
        .collect::<Result<_>>()?;
    let basis = solve::nullspace_stacked(&columns)
        .into_iter()
        .map(|v| solve::decode_field(n, n, &coords, &v))
        .collect();
    Ok(FieldBasis {
        degree_bound,
        basis,
    })
}
