//! Coefficient-space plumbing for the degree-bounded linear solves used by
//! symmetry discovery, cofactor certificates, and reduction.
//!
//! Conventions pinned here keep every discovery output deterministic:
//! coordinates run over monomials in descending graded-lex order (the
//! printing order), then over components in ascending order; solution
//! spaces are returned as reduced-echelon bases; particular solutions set
//! all free variables to zero.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::field::VectorField;
use crate::linalg::RatMatrix;
use crate::poly::{Monomial, MultiPoly, Rational};

/// All monomials in `nvars` variables of total degree exactly `d`,
/// descending graded-lex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(&mut out, &mut current, 0, d);
    out
}

/// All monomials of total degree <= `bound`, descending graded-lex.
pub fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in (0..=bound).rev() {
        out.extend(monomials_of_degree(nvars, d));
    }
    out
}

/// Coordinate list for polynomial vector fields of degree <= `bound` with
/// `dim` components: monomial-major (descending), component-minor.
pub fn field_coords(nvars: usize, dim: usize, bound: u32) -> Vec<(Monomial, usize)> {
    let mut out = Vec::new();
    for m in monomials_up_to(nvars, bound) {
        for j in 0..dim {
            out.push((m.clone(), j));
        }
    }
    out
}

/// The unit field x^m e_j for a coordinate.
pub fn unit_field(nvars: usize, dim: usize, m: &Monomial, j: usize) -> VectorField {
    let mut comps = vec![MultiPoly::zero(nvars); dim];
    comps[j] = MultiPoly::monomial(nvars, &m.0, Rational::from_integer(1.into())).unwrap();
    VectorField::new(nvars, comps).unwrap()
}

/// Encodes a field on the given coordinates; returns `None` if the field
/// has support outside them.
pub fn encode_field(f: &VectorField, coords: &[(Monomial, usize)]) -> Option<Vec<Rational>> {
    let mut want: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
    for (k, (m, j)) in coords.iter().enumerate() {
        want.insert((m.clone(), *j), k);
    }
    let mut v = vec![Rational::from_integer(0.into()); coords.len()];
    for (j, c) in f.components().iter().enumerate() {
        for (m, a) in c.terms() {
            let k = want.get(&(m.clone(), j))?;
            v[*k] = a.clone();
        }
    }
    Some(v)
}

/// Builds the field with the given coefficients on the given coordinates.
pub fn decode_field(
    nvars: usize,
    dim: usize,
    coords: &[(Monomial, usize)],
    v: &[Rational],
) -> VectorField {
    let mut comps = vec![MultiPoly::zero(nvars); dim];
    for ((m, j), c) in coords.iter().zip(v) {
        comps[*j].add_term(m.clone(), c.clone());
    }
    VectorField::new(nvars, comps).unwrap()
}

/// Builds the scalar polynomial with the given coefficients on a monomial
/// coordinate list.
pub fn decode_poly(nvars: usize, coords: &[Monomial], v: &[Rational]) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for (m, c) in coords.iter().zip(v) {
        p.add_term(m.clone(), c.clone());
    }
    p
}

/// Coefficient vector of a polynomial on a monomial coordinate list;
/// `None` if the polynomial has support outside it.
pub fn encode_poly(p: &MultiPoly, coords: &[Monomial]) -> Option<Vec<Rational>> {
    let mut v = vec![Rational::from_integer(0.into()); coords.len()];
    for (m, c) in p.terms() {
        let k = coords.iter().position(|x| x == m)?;
        v[k] = c.clone();
    }
    Some(v)
}

/// Row index space for stacking polynomial equations: every monomial that
/// occurs in any slot of any column or the target gets a row.
fn occurring_rows(stacks: &[Vec<MultiPoly>]) -> Vec<(usize, Monomial)> {
    let mut set: std::collections::BTreeSet<(usize, Monomial)> = Default::default();
    for stack in stacks {
        for (slot, p) in stack.iter().enumerate() {
            for (m, _) in p.terms() {
                set.insert((slot, m.clone()));
            }
        }
    }
    set.into_iter().collect()
}

fn coefficient_matrix(columns: &[Vec<MultiPoly>], rows: &[(usize, Monomial)]) -> RatMatrix {
    let mut m = RatMatrix::zero(rows.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, (slot, mono)) in rows.iter().enumerate() {
            let c = col[*slot].coeff(mono);
            if !c.is_zero() {
                m.set(i, j, c);
            }
        }
    }
    m
}

/// Solves `sum_k c_k columns[k] = target`, where each column and the target
/// are stacks of polynomials (one slot per vector-equation component).
/// Returns the free-variables-zero particular solution, or `None`.
pub fn solve_stacked(columns: &[Vec<MultiPoly>], target: &[MultiPoly]) -> Option<Vec<Rational>> {
    let mut all: Vec<Vec<MultiPoly>> = columns.to_vec();
    all.push(target.to_vec());
    let rows = occurring_rows(&all);
    let a = coefficient_matrix(columns, &rows);
    let b: Vec<Rational> = rows
        .iter()
        .map(|(slot, mono)| target[*slot].coeff(mono))
        .collect();
    a.solve(&b)
}

/// Nullspace of the linear map c -> sum_k c_k columns `k`, as a reduced
/// echelon basis of coefficient vectors (RREF rows of the raw kernel).
pub fn nullspace_stacked(columns: &[Vec<MultiPoly>]) -> Vec<Vec<Rational>> {
    let rows = occurring_rows(columns);
    let a = coefficient_matrix(columns, &rows);
    let kernel = a.nullspace();
    if kernel.is_empty() {
        return kernel;
    }
    RatMatrix::from_rows(kernel).row_space_basis()
}
