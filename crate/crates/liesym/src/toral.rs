//! Invariant theory of diagonal (toral) linear actions: monomial weights,
//! bounded generator enumeration, binomial relations, weight
//! decompositions, and centralizer monomials.
//!
//! Generator computation is bounded enumeration plus an irreducibility
//! filter; completeness beyond the stated degree bound is not claimed and
//! the CLI always reports the bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::linalg::{primitive_integer_vector, RatMatrix};
use crate::poly::{Monomial, MultiPoly, Rational};
use crate::solve;

/// A diagonal linear action x -> diag(weights) x. Rational weights are
/// rescaled internally to coprime integers (positive scaling preserves the
/// sign pattern and the weight-zero lattice).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalAction {
    weights: Vec<Rational>,
    scaled: Vec<BigInt>,
}

impl DiagonalAction {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Dimension("weight vector must be nonempty".into()));
        }
        let scaled = primitive_integer_weights(&weights);
        Ok(DiagonalAction { weights, scaled })
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Coprime integer rescaling of the weights (same signs, same lattice).
    pub fn scaled_weights(&self) -> &[BigInt] {
        &self.scaled
    }

    /// The linear vector field x -> diag(weights) x.
    pub fn field(&self) -> VectorField {
        VectorField::diagonal(&self.weights)
    }

    /// Function weight of a monomial: sum_i m_i lambda_i; with a component
    /// index j, the vector-field weight sum_i m_i lambda_i - lambda_j.
    pub fn weight(&self, m: &Monomial, target_component: Option<usize>) -> Result<Rational> {
        if m.nvars() != self.nvars() {
            return Err(Error::VarMismatch(m.nvars(), self.nvars()));
        }
        let mut w = Rational::zero();
        for (e, lam) in m.0.iter().zip(&self.weights) {
            w += lam * Rational::from_integer(BigInt::from(*e));
        }
        if let Some(j) = target_component {
            if j >= self.nvars() {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    nvars: self.nvars(),
                });
            }
            w -= &self.weights[j];
        }
        Ok(w)
    }

    /// Same weight over the coprime integer rescaling (used for lattice
    /// work; zero sets agree with the rational weight).
    fn scaled_weight(&self, m: &Monomial) -> BigInt {
        m.0.iter()
            .zip(&self.scaled)
            .map(|(e, lam)| lam * BigInt::from(*e))
            .sum()
    }
}

fn primitive_integer_weights(weights: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for w in weights {
        lcm = lcm.lcm(w.denom());
    }
    let ints: Vec<BigInt> = weights
        .iter()
        .map(|w| (w * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return ints;
    }
    ints.iter().map(|x| x / &gcd).collect()
}

/// Monomials up to a degree bound together with their exact weights, in
/// descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMonomialSet {
    pub degree_bound: u32,
    pub monomials: Vec<(Monomial, Rational)>,
}

/// Tabulates every monomial of degree <= bound with its weight under the
/// action.
pub fn weighted_monomials(action: &DiagonalAction, degree_bound: u32) -> WeightedMonomialSet {
    let monomials = solve::monomials_up_to(action.nvars(), degree_bound)
        .into_iter()
        .map(|m| {
            let w = action.weight(&m, None).unwrap();
            (m, w)
        })
        .collect();
    WeightedMonomialSet {
        degree_bound,
        monomials,
    }
}

/// All weight-zero monomials of degree 1..=bound that are not products of
/// two smaller weight-zero monomials, in descending graded-lex order per
/// degree slice (ties at equal degree broken by graded-lex).
pub fn invariant_monomial_generators(action: &DiagonalAction, degree_bound: u32) -> Vec<Monomial> {
    let n = action.nvars();
    let mut invariants: Vec<Monomial> = Vec::new();
    for d in 1..=degree_bound {
        for m in solve::monomials_of_degree(n, d) {
            if action.scaled_weight(&m).is_zero() {
                invariants.push(m);
            }
        }
    }
    // weight is additive, so m is reducible iff some smaller weight-zero
    // monomial strictly divides it
    let mut generators: Vec<Monomial> = Vec::new();
    for m in &invariants {
        let reducible = invariants
            .iter()
            .any(|a| a.degree() < m.degree() && a.divides(m));
        if !reducible {
            generators.push(m.clone());
        }
    }
    generators
}

/// Decides exactly whether no nonzero monomial has weight zero: true iff
/// all weights are nonzero and share one sign.
pub fn invariant_algebra_is_trivial(action: &DiagonalAction) -> bool {
    let w = action.scaled_weights();
    w.iter().all(|x| x.is_positive()) || w.iter().all(|x| x.is_negative())
}

/// Primitive basis of the integer kernel of the exponent matrix whose
/// columns are the generators; each vector (a_1..a_r) encodes the binomial
/// relation prod phi_i^{a_i+} = prod phi_i^{a_i-}.
pub fn monomial_relations(generators: &[Monomial]) -> Result<Vec<Vec<BigInt>>> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Dimension("need at least one generator".into()))?;
    let n = first.nvars();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<Rational> = generators
            .iter()
            .map(|g| {
                if g.nvars() != n {
                    Err(Error::VarMismatch(g.nvars(), n))
                } else {
                    Ok(Rational::from_integer(BigInt::from(g.0[i])))
                }
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let kernel = RatMatrix::from_rows(rows).nullspace();
    Ok(kernel
        .iter()
        .map(|v| primitive_integer_vector(v))
        .collect())
}

/// Splits p into weight components p_chi with X_B(p_chi) = chi p_chi;
/// the components sum back to p exactly.
pub fn weight_decompose(
    action: &DiagonalAction,
    p: &MultiPoly,
) -> Result<BTreeMap<Rational, MultiPoly>> {
    if p.nvars() != action.nvars() {
        return Err(Error::VarMismatch(p.nvars(), action.nvars()));
    }
    let mut out: BTreeMap<Rational, MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let chi = action.weight(m, None)?;
        out.entry(chi)
            .or_insert_with(|| MultiPoly::zero(p.nvars()))
            .add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// All monomial vector fields x^m e_j of degree <= bound that commute with
/// the action, i.e. weight(m) = lambda_j. Returned as (monomial, component)
/// pairs, descending graded-lex then component order.
pub fn centralizer_monomials(
    action: &DiagonalAction,
    degree_bound: u32,
) -> Vec<(Monomial, usize)> {
    let n = action.nvars();
    let mut out = Vec::new();
    for m in solve::monomials_up_to(n, degree_bound) {
        let w = action.scaled_weight(&m);
        for (j, lam) in action.scaled_weights().iter().enumerate() {
            if w == *lam {
                out.push((m.clone(), j));
            }
        }
    }
    out
}

/// Multi-parameter torus support: generators invariant under several
/// diagonal actions at once (weight-zero for every row).
pub fn invariant_monomial_generators_multi(
    actions: &[DiagonalAction],
    degree_bound: u32,
) -> Result<Vec<Monomial>> {
    let first = actions
        .first()
        .ok_or_else(|| Error::Dimension("need at least one action".into()))?;
    let n = first.nvars();
    for a in actions {
        if a.nvars() != n {
            return Err(Error::VarMismatch(a.nvars(), n));
        }
    }
    let mut invariants: Vec<Monomial> = Vec::new();
    for d in 1..=degree_bound {
        for m in solve::monomials_of_degree(n, d) {
            if actions.iter().all(|a| a.scaled_weight(&m).is_zero()) {
                invariants.push(m);
            }
        }
    }
    let mut generators = Vec::new();
    for m in &invariants {
        let reducible = invariants
            .iter()
            .any(|a| a.degree() < m.degree() && a.divides(m));
        if !reducible {
            generators.push(m.clone());
        }
    }
    Ok(generators)
}
