//! Degree-by-degree normalization of vector fields with diagonal rational
//! linear part.
//!
//! At each degree r the homological equation [A, h_r] = f_r - f*_r is
//! solved monomial-wise: a nonresonant term a x^m e_j is removed through
//! the generator coefficient a / (sum_i m_i lambda_i - lambda_j), resonant
//! terms stay in the normal form. The generator is supported away from the
//! resonant monomials (the kernel of ad A), and after each degree the
//! whole field is re-expanded through Phi_r = id + h_r by exact truncated
//! composition before the next degree is processed.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::lie::lie_bracket;
use crate::poly::{Monomial, MultiPoly, Rational};
use crate::solve;
use crate::toral::DiagonalAction;

/// Output of a truncated normalization run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub truncation_degree: u32,
    /// Normal form through the truncation degree; linear part unchanged.
    pub normal_form: VectorField,
    /// Homogeneous generators h_2 .. h_N (index 0 is degree 2).
    pub generators: Vec<VectorField>,
    /// Composed transformation Phi = Phi_2 o ... o Phi_N, truncated;
    /// identity plus higher-order terms, solution-preserving from the
    /// normal form to the input modulo degree N+1.
    pub transformation: VectorField,
    /// All resonant monomial fields (m, j) with 2 <= deg m <= N for the
    /// semisimple part of the linear term.
    pub resonant_monomials: Vec<(Monomial, usize)>,
}

/// All x^m e_j of the given degree with sum_i m_i lambda_i - lambda_j = 0.
pub fn resonant_monomials(action: &DiagonalAction, degree: u32) -> Vec<(Monomial, usize)> {
    let n = action.nvars();
    let mut out = Vec::new();
    for m in solve::monomials_of_degree(n, degree) {
        for j in 0..n {
            if action.weight(&m, Some(j)).unwrap().is_zero() {
                out.push((m.clone(), j));
            }
        }
    }
    out
}

/// Extracts the diagonal of the linear part; errors on a constant term or
/// any off-diagonal linear entry.
fn diagonal_linear_part(f: &VectorField) -> Result<Vec<Rational>> {
    if !f.is_square() {
        return Err(Error::Dimension("normal form needs a square field".into()));
    }
    let n = f.nvars();
    let mut lambda = Vec::with_capacity(n);
    for (i, c) in f.components().iter().enumerate() {
        if !c.constant_term().is_zero() {
            return Err(Error::precondition(
                "normal form needs f(0) = 0 (constant term present)",
            ));
        }
        for j in 0..n {
            let coeff = c.coeff(&Monomial::var(n, j));
            if i != j && !coeff.is_zero() {
                return Err(Error::precondition(
                    "normal form needs a diagonal linear part; conjugate first",
                ));
            }
            if i == j {
                lambda.push(coeff);
            }
        }
    }
    Ok(lambda)
}

/// Truncated composition outer(inner(x)), all terms above `degree` dropped.
fn compose_truncated(outer: &VectorField, inner: &VectorField, degree: u32) -> Result<VectorField> {
    Ok(outer.compose(inner)?.truncate_at(degree))
}

/// Solves (I + Dh) g = target mod degree N+1 for g, where h is homogeneous
/// of degree >= 2. Fixed-point iteration g <- target - Dh g gains at least
/// one degree of agreement per step.
fn conjugate_through(
    current: &VectorField,
    h: &VectorField,
    degree: u32,
) -> Result<VectorField> {
    let phi = VectorField::identity(current.nvars()).add(h)?;
    let target = compose_truncated(current, &phi, degree)?;
    let dh = h.jacobian();
    let mut g = target.clone();
    loop {
        let next = target.sub(&dh.apply(&g)?.truncate_at(degree))?;
        if next == g {
            return Ok(next);
        }
        g = next;
    }
}

/// Runs the normalization through degree `truncation_degree` (>= 2 to do
/// anything; lower values return the truncated input unchanged).
pub fn normal_form(f: &VectorField, truncation_degree: u32) -> Result<NormalFormResult> {
    let lambda = diagonal_linear_part(f)?;
    let action = DiagonalAction::new(lambda)?;
    let n = f.nvars();
    let n_trunc = truncation_degree;
    let mut current = f.truncate_at(n_trunc);
    let mut generators = Vec::new();
    let mut transformation = VectorField::identity(n);
    for r in 2..=n_trunc {
        let slice = current.homogeneous_part(r);
        let mut h_r = VectorField::zero(n, n);
        for (j, comp) in slice.components().iter().enumerate() {
            for (m, a) in comp.terms() {
                let w = action.weight(m, Some(j))?;
                if !w.is_zero() {
                    let coeff = a / &w;
                    let mut comps = h_r.into_components();
                    comps[j].add_term(m.clone(), coeff);
                    h_r = VectorField::new(n, comps)?;
                }
            }
        }
        if !h_r.is_zero() {
            current = conjugate_through(&current, &h_r, n_trunc)?;
            let phi_r = VectorField::identity(n).add(&h_r)?;
            transformation = compose_truncated(&transformation, &phi_r, n_trunc)?;
        }
        generators.push(h_r);
    }
    let mut resonant = Vec::new();
    for r in 2..=n_trunc {
        resonant.extend(resonant_monomials(&action, r));
    }
    Ok(NormalFormResult {
        truncation_degree: n_trunc,
        normal_form: current,
        generators,
        transformation,
        resonant_monomials: resonant,
    })
}

/// Per-degree verification report for a normalization result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormVerification {
    pub ok: bool,
    /// Degrees 2..N at which [A_s, f*_r] fails to vanish.
    pub bracket_failures: Vec<u32>,
    /// Lowest degree <= N at which D Phi . f* - f o Phi has a term.
    pub conjugacy_failure_degree: Option<u32>,
}

/// Checks (i) [A_s, f*_r] = 0 for every 2 <= r <= N and (ii) the conjugacy
/// identity D Phi(x) f*(x) = f(Phi(x)) modulo degree N+1.
pub fn verify_normal_form(
    result: &NormalFormResult,
    f: &VectorField,
) -> Result<NormalFormVerification> {
    let lambda = diagonal_linear_part(&result.normal_form)?;
    let a_s = VectorField::diagonal(&lambda);
    let n_trunc = result.truncation_degree;
    let mut bracket_failures = Vec::new();
    for r in 2..=n_trunc {
        let fr = result.normal_form.homogeneous_part(r);
        if !lie_bracket(&a_s, &fr)?.is_zero() {
            bracket_failures.push(r);
        }
    }
    let lhs = result
        .transformation
        .jacobian()
        .apply(&result.normal_form)?;
    let rhs = f.compose(&result.transformation)?;
    let residual = lhs.sub(&rhs)?.truncate_at(n_trunc);
    let conjugacy_failure_degree = if residual.is_zero() {
        None
    } else {
        Some(u32::try_from(residual.lowest_degree()).unwrap())
    };
    Ok(NormalFormVerification {
        ok: bracket_failures.is_empty() && conjugacy_failure_degree.is_none(),
        bracket_failures,
        conjugacy_failure_degree,
    })
}

/// Truncated first-integral inheritance: if X_{f*}(phi) has no terms of
/// degree <= N (the truncated first-integral hypothesis), then the
/// degree <= N part of phi must be a first integral of the semisimple
/// linear part. Errors when the hypothesis fails.
pub fn truncated_first_integral_inheritance_check(
    fstar: &VectorField,
    phi: &MultiPoly,
    degree: u32,
) -> Result<bool> {
    let lambda = diagonal_linear_part(fstar)?;
    let derivative = crate::lie::lie_derivative(fstar, phi)?;
    if !derivative.truncate_at(degree).is_zero() {
        return Err(Error::precondition(
            "phi is not a first integral of f* through the stated degree",
        ));
    }
    let a_s = VectorField::diagonal(&lambda);
    let low = phi.truncate_at(degree);
    Ok(crate::lie::lie_derivative(&a_s, &low)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::check_solution_preserving;
    use crate::poly::{rat, rat_frac};

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in terms {
            out.add_term(Monomial(e.to_vec()), rat(*c));
        }
        out
    }

    fn vf(nvars: usize, comps: &[&[(&[u32], i64)]]) -> VectorField {
        VectorField::new(nvars, comps.iter().map(|t| poly(nvars, t)).collect()).unwrap()
    }

    fn action(w: &[i64]) -> DiagonalAction {
        DiagonalAction::new(w.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn resonant_sets() {
        let a = action(&[1, 2]);
        assert_eq!(
            resonant_monomials(&a, 2),
            vec![(Monomial(vec![2, 0]), 1)]
        );
        assert!(resonant_monomials(&action(&[1, 3]), 2).is_empty());
        let a = action(&[1, -1]);
        let got = resonant_monomials(&a, 3);
        assert_eq!(
            got,
            vec![(Monomial(vec![2, 1]), 0), (Monomial(vec![1, 2]), 1)]
        );
    }

    #[test]
    fn removes_nonresonant_quadratic() {
        // f = (x1 + x2^2, 2 x2): the x2^2 e1 term has weight 2*2 - 1 = 3,
        // so h2 = (x2^2 / 3, 0) and Phi = (x1 + x2^2/3, x2).
        let f = vf(2, &[&[(&[1, 0], 1), (&[0, 2], 1)], &[(&[0, 1], 2)]]);
        let r = normal_form(&f, 2).unwrap();
        assert_eq!(r.normal_form, vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2)]]));
        assert_eq!(r.generators.len(), 1);
        let mut h2c = MultiPoly::zero(2);
        h2c.add_term(Monomial(vec![0, 2]), rat_frac(1, 3));
        assert_eq!(r.generators[0].component(0), &h2c);
        assert!(r.generators[0].component(1).is_zero());
        let mut phi1 = MultiPoly::var(2, 0).unwrap();
        phi1.add_term(Monomial(vec![0, 2]), rat_frac(1, 3));
        assert_eq!(r.transformation.component(0), &phi1);
        assert_eq!(r.transformation.component(1), &MultiPoly::var(2, 1).unwrap());
        // conjugacy happens to be exact here, not just truncated
        assert!(
            check_solution_preserving(&r.transformation, &r.normal_form, &f)
                .unwrap()
                .holds
        );
        assert!(verify_normal_form(&r, &f).unwrap().ok);
    }

    #[test]
    fn resonant_field_is_untouched() {
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2), (&[2, 0], 1)]]);
        for n in [2u32, 3, 4] {
            let r = normal_form(&f, n).unwrap();
            assert_eq!(r.normal_form, f);
            assert!(r.generators.iter().all(|h| h.is_zero()));
            assert_eq!(r.transformation, VectorField::identity(2));
            assert!(verify_normal_form(&r, &f).unwrap().ok);
        }
    }

    #[test]
    fn linear_diagonal_is_fixed_point() {
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], -1)]]);
        let r = normal_form(&f, 3).unwrap();
        assert_eq!(r.normal_form, f);
        assert_eq!(r.transformation, VectorField::identity(2));
    }

    #[test]
    fn preconditions_rejected() {
        // constant term
        let f = vf(2, &[&[(&[0, 0], 1), (&[1, 0], 1)], &[(&[0, 1], 1)]]);
        assert!(normal_form(&f, 2).is_err());
        // off-diagonal linear part
        let f = vf(2, &[&[(&[0, 1], 1)], &[(&[1, 0], 1)]]);
        assert!(normal_form(&f, 2).is_err());
    }

    #[test]
    fn corrupted_generator_fails_verification() {
        let f = vf(2, &[&[(&[1, 0], 1), (&[0, 2], 1)], &[(&[0, 1], 2)]]);
        let mut r = normal_form(&f, 2).unwrap();
        // corrupt the transformation consistently with a wrong h2
        let mut bad = MultiPoly::var(2, 0).unwrap();
        bad.add_term(Monomial(vec![0, 2]), rat(1));
        r.transformation = VectorField::new(2, vec![bad, MultiPoly::var(2, 1).unwrap()]).unwrap();
        let v = verify_normal_form(&r, &f).unwrap();
        assert!(!v.ok);
        assert_eq!(v.conjugacy_failure_degree, Some(2));
    }

    #[test]
    fn idempotent_on_own_output() {
        let f = vf(
            2,
            &[
                &[(&[1, 0], 1), (&[0, 2], 1), (&[1, 1], -2)],
                &[(&[0, 1], 2), (&[2, 0], 3), (&[0, 3], 1)],
            ],
        );
        let r = normal_form(&f, 4).unwrap();
        let again = normal_form(&r.normal_form, 4).unwrap();
        assert_eq!(again.normal_form, r.normal_form);
        assert!(again.generators.iter().all(|h| h.is_zero()));
        assert_eq!(again.transformation, VectorField::identity(2));
    }

    #[test]
    fn homological_identity_per_degree() {
        // [A, h_r] equals the removed part of f_r at the step where h_r was
        // produced; check on the first step where current = f.
        let f = vf(
            2,
            &[
                &[(&[1, 0], 1), (&[0, 2], 5)],
                &[(&[0, 1], 2), (&[1, 1], 7)],
            ],
        );
        let r = normal_form(&f, 2).unwrap();
        let a = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2)]]);
        let h2 = &r.generators[0];
        let lhs = lie_bracket(&a, h2).unwrap();
        let removed = f
            .homogeneous_part(2)
            .sub(&r.normal_form.homogeneous_part(2))
            .unwrap();
        assert_eq!(lhs, removed);
    }

    #[test]
    fn normal_form_terms_are_resonant() {
        let f = vf(
            3,
            &[
                &[(&[1, 0, 0], 1), (&[0, 1, 1], 2), (&[0, 0, 2], 1)],
                &[(&[0, 1, 0], -1), (&[1, 0, 1], 3)],
                &[(&[0, 0, 1], 2), (&[2, 0, 0], 1), (&[0, 2, 0], -4)],
            ],
        );
        let r = normal_form(&f, 4).unwrap();
        assert!(verify_normal_form(&r, &f).unwrap().ok);
        for d in 2..=4u32 {
            let slice = r.normal_form.homogeneous_part(d);
            for (j, comp) in slice.components().iter().enumerate() {
                for (m, _) in comp.terms() {
                    assert!(
                        r.resonant_monomials.contains(&(m.clone(), j)),
                        "nonresonant term {m:?} e{j} left in normal form"
                    );
                }
            }
        }
    }

    #[test]
    fn one_variable_linearization_matches_geometric_series() {
        // x' = x + x^2 is linearized exactly by Phi(y) = y/(1-y); the
        // truncated transformation must be the geometric partial sum
        let f = vf(1, &[&[(&[1], 1), (&[2], 1)]]);
        for n in 2..=6u32 {
            let r = normal_form(&f, n).unwrap();
            assert_eq!(r.normal_form, vf(1, &[&[(&[1], 1)]]));
            let mut geometric = MultiPoly::zero(1);
            for k in 1..=n {
                geometric.add_term(Monomial(vec![k]), rat(1));
            }
            assert_eq!(r.transformation.component(0), &geometric);
            assert!(verify_normal_form(&r, &f).unwrap().ok);
        }
    }

    #[test]
    fn first_integral_inheritance() {
        // f* = (x1 + 2 x1^2 x2, -x2 + 3 x1 x2^2) is in normal form for
        // A = diag(1, -1); X_{f*}(x1 x2) = 5 (x1 x2)^2 has no terms of
        // degree <= 3, and x1 x2 is a first integral of A_s.
        let fstar = vf(
            2,
            &[&[(&[1, 0], 1), (&[2, 1], 2)], &[(&[0, 1], -1), (&[1, 2], 3)]],
        );
        let phi = poly(2, &[(&[1, 1], 1)]);
        assert!(truncated_first_integral_inheritance_check(&fstar, &phi, 3).unwrap());
        // constants pass trivially
        let c = MultiPoly::constant(2, rat(9));
        assert!(truncated_first_integral_inheritance_check(&fstar, &c, 3).unwrap());
        // exact first integral of a linear field passes at any degree
        let a = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], -1)]]);
        assert!(truncated_first_integral_inheritance_check(&a, &phi, 6).unwrap());
        // hypothesis violation is an error, not a false
        assert!(truncated_first_integral_inheritance_check(&fstar, &phi, 4).is_err());
    }
}
