//! Invariant-set detection and certification: semi-invariants with
//! cofactors, first integrals, the joint invariance criterion, minor
//! families, integrating factors, Jacobi multipliers, Jacobian rank
//! strata, and reduction by invariants.
//!
//! Divisibility and ideal-membership questions are answered by bounded
//! linear solves; every bound used is surfaced in the outputs.


use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::lie::{divergence, lie_derivative};
use crate::linalg::RatMatrix;
use crate::matrix::PolyMatrix;
use crate::poly::{MultiPoly, Rational};
use crate::solve;

/// First-integral check; constants are flagged, not rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstIntegralReport {
    pub holds: bool,
    /// X_f(phi), kept for diagnostics.
    pub derivative: MultiPoly,
    /// Set when the input was constant (excluded by the definition of a
    /// first integral, but harmless).
    pub constant_input: bool,
}

pub fn first_integral_check(f: &VectorField, phi: &MultiPoly) -> Result<FirstIntegralReport> {
    let derivative = lie_derivative(f, phi)?;
    Ok(FirstIntegralReport {
        holds: derivative.is_zero(),
        derivative,
        constant_input: phi.is_constant(),
    })
}

/// Certificate X_f(psi) = mu psi; `valid` records whether the identity
/// holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiInvariantCertificate {
    pub polynomial: MultiPoly,
    pub cofactor: MultiPoly,
    pub valid: bool,
}

/// Solves X_f(psi) = mu psi for mu with
/// deg mu <= deg X_f(psi) - lowest degree of psi.
pub fn semi_invariant_cofactor(
    f: &VectorField,
    psi: &MultiPoly,
) -> Result<SemiInvariantCertificate> {
    if psi.is_zero() {
        return Err(Error::ZeroInput("psi"));
    }
    let derivative = lie_derivative(f, psi)?;
    if derivative.is_zero() {
        return Ok(SemiInvariantCertificate {
            polynomial: psi.clone(),
            cofactor: MultiPoly::zero(psi.nvars()),
            valid: true,
        });
    }
    let bound = u32::try_from((derivative.total_degree() - psi.lowest_degree()).max(0)).unwrap();
    let monos = solve::monomials_up_to(psi.nvars(), bound);
    let columns: Vec<Vec<MultiPoly>> = monos
        .iter()
        .map(|m| {
            let mp = MultiPoly::monomial(psi.nvars(), &m.0, Rational::from_integer(1.into()))
                .unwrap();
            Ok(vec![mp.mul(psi)?])
        })
        .collect::<Result<_>>()?;
    match solve::solve_stacked(&columns, &[derivative]) {
        Some(coeffs) => Ok(SemiInvariantCertificate {
            polynomial: psi.clone(),
            cofactor: solve::decode_poly(psi.nvars(), &monos, &coeffs),
            valid: true,
        }),
        None => Ok(SemiInvariantCertificate {
            polynomial: psi.clone(),
            cofactor: MultiPoly::zero(psi.nvars()),
            valid: false,
        }),
    }
}

/// Joint invariance criterion: X_f(phi_i) = sum_j mu_ij phi_j with all
/// deg mu_ij <= bound. The cofactor matrix is returned on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyCheck {
    pub holds: bool,
    pub cofactors: Option<Vec<Vec<MultiPoly>>>,
    pub mu_degree_bound: u32,
}

pub fn invariant_variety_check(
    f: &VectorField,
    phis: &[MultiPoly],
    mu_degree_bound: u32,
) -> Result<VarietyCheck> {
    if phis.is_empty() {
        return Err(Error::Dimension("need at least one polynomial".into()));
    }
    let n = f.nvars();
    let monos = solve::monomials_up_to(n, mu_degree_bound);
    // columns: for j ascending, coefficients of mu_ij over monos (descending)
    let mut columns = Vec::with_capacity(phis.len() * monos.len());
    for phi in phis {
        for m in &monos {
            let mp = MultiPoly::monomial(n, &m.0, Rational::from_integer(1.into()))?;
            columns.push(vec![mp.mul(phi)?]);
        }
    }
    let mut cofactors = Vec::with_capacity(phis.len());
    for phi in phis {
        let target = lie_derivative(f, phi)?;
        let Some(coeffs) = solve::solve_stacked(&columns, &[target]) else {
            return Ok(VarietyCheck {
                holds: false,
                cofactors: None,
                mu_degree_bound,
            });
        };
        let mut row = Vec::with_capacity(phis.len());
        for j in 0..phis.len() {
            let chunk = &coeffs[j * monos.len()..(j + 1) * monos.len()];
            row.push(solve::decode_poly(n, &monos, chunk));
        }
        cofactors.push(row);
    }
    Ok(VarietyCheck {
        holds: true,
        cofactors: Some(cofactors),
        mu_degree_bound,
    })
}

/// One minor of a field matrix: ascending row indices, columns in the
/// caller's field order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorEntry {
    pub row_set: Vec<usize>,
    pub col_set: Vec<usize>,
    pub value: MultiPoly,
}

/// All size x size minors of a matrix, indexed by (row subset, column
/// subset) in lexicographic order, rows ascending within each subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorFamily {
    pub matrix_rows: usize,
    pub matrix_cols: usize,
    pub size: usize,
    pub minors: Vec<MinorEntry>,
}

impl MinorFamily {
    pub fn values(&self) -> impl Iterator<Item = &MultiPoly> {
        self.minors.iter().map(|m| &m.value)
    }

    pub fn all_zero(&self) -> bool {
        self.minors.iter().all(|m| m.value.is_zero())
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn minor_family(matrix: &PolyMatrix, size: usize) -> Result<MinorFamily> {
    if size == 0 || size > matrix.rows().min(matrix.cols()) {
        return Err(Error::Dimension(format!(
            "minor size {size} out of range for a {}x{} matrix",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let mut minors = Vec::new();
    for rows in combinations(matrix.rows(), size) {
        for cols in combinations(matrix.cols(), size) {
            let value = matrix.submatrix(&rows, &cols).determinant()?;
            minors.push(MinorEntry {
                row_set: rows.clone(),
                col_set: cols,
                value,
            });
        }
    }
    Ok(MinorFamily {
        matrix_rows: matrix.rows(),
        matrix_cols: matrix.cols(),
        size,
        minors,
    })
}

/// All size x size minors of the n x k matrix whose columns are the given
/// fields.
pub fn minors(fields: &[&VectorField], size: usize) -> Result<MinorFamily> {
    let matrix = PolyMatrix::from_columns(fields)?;
    minor_family(&matrix, size)
}

fn determinant_certificate(
    f: &VectorField,
    columns: &[&VectorField],
) -> Result<SemiInvariantCertificate> {
    let phi = PolyMatrix::from_columns(columns)?.determinant()?;
    if phi.is_zero() {
        return Err(Error::ZeroInput("det(f, h_1, .., h_{n-1})"));
    }
    let mu = divergence(f)?;
    let lhs = lie_derivative(f, &phi)?;
    let rhs = mu.mul(&phi)?;
    Ok(SemiInvariantCertificate {
        polynomial: phi,
        cofactor: mu,
        valid: lhs == rhs,
    })
}

/// Planar integrating-factor construction: phi = det(f, h) with the
/// certificate X_f(phi) = div f * phi; 1/phi is then an integrating
/// factor. Checked, never assumed.
pub fn integrating_factor(f: &VectorField, h: &VectorField) -> Result<SemiInvariantCertificate> {
    if f.nvars() != 2 || !f.is_square() || h.nvars() != 2 || !h.is_square() {
        return Err(Error::Dimension(
            "integrating factors need two planar fields".into(),
        ));
    }
    determinant_certificate(f, &[f, h])
}

/// n-dimensional generalization: phi = det(f, h_1, .., h_{n-1}); 1/phi is
/// a Jacobi multiplier when the certificate holds.
pub fn jacobi_multiplier(
    f: &VectorField,
    hs: &[&VectorField],
) -> Result<SemiInvariantCertificate> {
    let n = f.nvars();
    if !f.is_square() {
        return Err(Error::Dimension("f must be square".into()));
    }
    if hs.len() + 1 != n {
        return Err(Error::Dimension(format!(
            "need exactly {} auxiliary fields in dimension {}",
            n - 1,
            n
        )));
    }
    let mut columns = Vec::with_capacity(n);
    columns.push(f);
    columns.extend_from_slice(hs);
    determinant_certificate(f, &columns)
}

/// All (s+1) x (s+1) minors of the Jacobian of a polynomial map; their
/// common zero set is the rank <= s stratum. With s equal to the smaller
/// Jacobian dimension the family is empty (the stratum is everything).
pub fn jacobian_rank_minors(phi: &VectorField, s: usize) -> Result<MinorFamily> {
    let jac = phi.jacobian();
    let min_dim = jac.rows().min(jac.cols());
    if s > min_dim {
        return Err(Error::Dimension(format!(
            "rank threshold {s} exceeds the Jacobian dimension {min_dim}"
        )));
    }
    if s == min_dim {
        return Ok(MinorFamily {
            matrix_rows: jac.rows(),
            matrix_cols: jac.cols(),
            size: s + 1,
            minors: Vec::new(),
        });
    }
    minor_family(&jac, s + 1)
}

/// Exact rank of D Phi at a rational point.
pub fn jacobian_rank_at(phi: &VectorField, point: &[Rational]) -> Result<usize> {
    let jac = phi.jacobian();
    let mut rows = Vec::with_capacity(jac.rows());
    for i in 0..jac.rows() {
        let mut row = Vec::with_capacity(jac.cols());
        for j in 0..jac.cols() {
            row.push(jac.entry(i, j).evaluate(point)?);
        }
        rows.push(row);
    }
    Ok(RatMatrix::from_rows(rows).rank())
}

/// Reduction by invariants: finds polynomials gamma_i in r new variables,
/// deg <= bound, with X_f(phi_i) = gamma_i(phi_1, .., phi_r) exactly;
/// returns the reduced field g = (gamma_1, .., gamma_r) on K^r, or `None`
/// when some row is not solvable within the bound.
pub fn reduce_by_invariants(
    f: &VectorField,
    phis: &[MultiPoly],
    target_degree_bound: u32,
) -> Result<Option<VectorField>> {
    if phis.is_empty() {
        return Err(Error::Dimension("need at least one invariant".into()));
    }
    let n = f.nvars();
    for phi in phis {
        if phi.nvars() != n {
            return Err(Error::VarMismatch(phi.nvars(), n));
        }
    }
    let r = phis.len();
    let monos = solve::monomials_up_to(r, target_degree_bound);
    // columns: the n-variable polynomial phi^m for each target monomial m
    let mut powers: Vec<Vec<MultiPoly>> = phis
        .iter()
        .map(|p| vec![MultiPoly::one(n), p.clone()])
        .collect();
    let power = |j: usize, e: u32, powers: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
        while powers[j].len() <= e as usize {
            let next = powers[j].last().unwrap().mul(&phis[j]).unwrap();
            powers[j].push(next);
        }
        powers[j][e as usize].clone()
    };
    let mut columns = Vec::with_capacity(monos.len());
    for m in &monos {
        let mut prod = MultiPoly::one(n);
        for (j, &e) in m.0.iter().enumerate() {
            if e > 0 {
                prod = prod.mul(&power(j, e, &mut powers))?;
            }
        }
        columns.push(vec![prod]);
    }
    let mut components = Vec::with_capacity(r);
    for phi in phis {
        let target = lie_derivative(f, phi)?;
        match solve::solve_stacked(&columns, &[target]) {
            Some(coeffs) => components.push(solve::decode_poly(r, &monos, &coeffs)),
            None => return Ok(None),
        }
    }
    Ok(Some(VectorField::new(r, components)?))
}

#[cfg(test)]
mod tests {
    use crate::lie::check_solution_preserving;
    use super::*;
    use crate::poly::{rat, Monomial};

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

    fn cone_field() -> VectorField {
        vf(
            3,
            &[
                &[(&[2, 0, 0], 1), (&[0, 1, 1], -1)],
                &[(&[1, 1, 0], 2)],
                &[(&[1, 0, 1], 2)],
            ],
        )
    }

    fn cone_h1() -> VectorField {
        vf(
            3,
            &[
                &[(&[1, 0, 0], 1)],
                &[(&[0, 1, 0], 3)],
                &[(&[0, 0, 1], -1)],
            ],
        )
    }

    fn cone_h2() -> VectorField {
        vf(
            3,
            &[
                &[(&[1, 1, 0], 1)],
                &[(&[0, 2, 0], 1)],
                &[(&[2, 0, 0], -1)],
            ],
        )
    }

    #[test]
    fn first_integrals() {
        // central-force angular momentum
        let f = vf(
            4,
            &[
                &[(&[0, 0, 1, 0], 1)],
                &[(&[0, 0, 0, 1], 1)],
                &[(&[3, 0, 0, 0], 1), (&[1, 2, 0, 0], 1)],
                &[(&[2, 1, 0, 0], 1), (&[0, 3, 0, 0], 1)],
            ],
        );
        let phi4 = poly(4, &[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]);
        let r = first_integral_check(&f, &phi4).unwrap();
        assert!(r.holds && !r.constant_input);
        // hyperbolic product
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], -1)]]);
        assert!(first_integral_check(&f, &poly(2, &[(&[1, 1], 1)]))
            .unwrap()
            .holds);
        // X_f(x1 x2) = 2 x1 x2 for the full scaling: not a first integral
        let f = VectorField::identity(2);
        let r = first_integral_check(&f, &poly(2, &[(&[1, 1], 1)])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.derivative, poly(2, &[(&[1, 1], 2)]));
        // constants are flagged
        let r = first_integral_check(&f, &MultiPoly::constant(2, rat(3))).unwrap();
        assert!(r.holds && r.constant_input);
    }

    #[test]
    fn cofactor_of_invariant_cone() {
        let f = cone_field();
        let psi = poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]);
        let cert = semi_invariant_cofactor(&f, &psi).unwrap();
        assert!(cert.valid);
        assert_eq!(cert.cofactor, poly(3, &[(&[1, 0, 0], 2)]));
    }

    #[test]
    fn cofactor_of_first_integral_is_zero() {
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], -1)]]);
        let cert = semi_invariant_cofactor(&f, &poly(2, &[(&[1, 1], 1)])).unwrap();
        assert!(cert.valid);
        assert!(cert.cofactor.is_zero());
    }

    #[test]
    fn cofactor_constant_case() {
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2)]]);
        let cert = semi_invariant_cofactor(&f, &poly(2, &[(&[1, 1], 1)])).unwrap();
        assert!(cert.valid);
        assert_eq!(cert.cofactor, MultiPoly::constant(2, rat(3)));
    }

    #[test]
    fn cofactor_rejects_zero_and_reports_failure() {
        let f = VectorField::identity(2);
        assert!(semi_invariant_cofactor(&f, &MultiPoly::zero(2)).is_err());
        // x1 - 1 is not semi-invariant for the scaling field
        let cert = semi_invariant_cofactor(&f, &poly(2, &[(&[1, 0], 1), (&[0, 0], -1)])).unwrap();
        assert!(!cert.valid);
    }

    #[test]
    fn variety_check_coordinate_axes() {
        let f = vf(2, &[&[(&[2, 0], 1), (&[0, 2], -1)], &[(&[1, 1], 2)]]);
        let phis = [poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])];
        let r = invariant_variety_check(&f, &phis, 1).unwrap();
        assert!(r.holds);
        let mu = r.cofactors.unwrap();
        assert_eq!(mu[0][0], poly(2, &[(&[1, 0], 1)]));
        assert_eq!(mu[0][1], poly(2, &[(&[0, 1], -1)]));
        assert_eq!(mu[1][0], poly(2, &[(&[0, 1], 2)]));
        assert!(mu[1][1].is_zero());
        // the identity X_f(phi_i) = sum_j mu_ij phi_j holds exactly
        for (i, phi) in phis.iter().enumerate() {
            let mut rhs = MultiPoly::zero(2);
            for (j, p) in phis.iter().enumerate() {
                rhs = rhs.add(&mu[i][j].mul(p).unwrap()).unwrap();
            }
            assert_eq!(lie_derivative(&f, phi).unwrap(), rhs);
        }
    }

    #[test]
    fn variety_check_translate_fails() {
        let f = VectorField::identity(2);
        let shifted = [poly(2, &[(&[1, 0], 1), (&[0, 0], -1)])];
        for bound in 0..=3 {
            assert!(!invariant_variety_check(&f, &shifted, bound).unwrap().holds);
        }
    }

    #[test]
    fn variety_check_single_matches_cofactor() {
        let f = cone_field();
        let psi = poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]);
        let r = invariant_variety_check(&f, &[psi.clone()], 1).unwrap();
        assert!(r.holds);
        let cert = semi_invariant_cofactor(&f, &psi).unwrap();
        assert_eq!(r.cofactors.unwrap()[0][0], cert.cofactor);
    }

    #[test]
    fn planar_minor_golden() {
        let f = cone_field();
        let h1 = cone_h1();
        let fam = minors(&[&f, &h1], 2).unwrap();
        assert_eq!(fam.minors.len(), 3);
        // rows {1,2}: (x1^2 - 3 x2 x3) x2
        assert_eq!(
            fam.minors[0].value,
            poly(3, &[(&[2, 1, 0], 1), (&[0, 2, 1], -3)])
        );
        // rows {1,3}: (-3 x1^2 + x2 x3) x3
        assert_eq!(
            fam.minors[1].value,
            poly(3, &[(&[2, 0, 1], -3), (&[0, 1, 2], 1)])
        );
        // rows {2,3}: -8 x1 x2 x3
        assert_eq!(fam.minors[2].value, poly(3, &[(&[1, 1, 1], -8)]));
    }

    #[test]
    fn triple_minor_golden() {
        let fam = minors(&[&cone_field(), &cone_h1(), &cone_h2()], 3).unwrap();
        assert_eq!(fam.minors.len(), 1);
        // -x2 (x1^2 + x2 x3)^2
        let expect = poly(
            3,
            &[(&[4, 1, 0], -1), (&[2, 2, 1], -2), (&[0, 3, 2], -1)],
        );
        assert_eq!(fam.minors[0].value, expect);
    }

    #[test]
    fn size_one_minors_are_components() {
        let f = cone_field();
        let fam = minors(&[&f], 1).unwrap();
        assert_eq!(fam.minors.len(), 3);
        for (i, m) in fam.minors.iter().enumerate() {
            assert_eq!(&m.value, f.component(i));
        }
        assert!(minors(&[&f], 4).is_err());
    }

    #[test]
    fn integrating_factor_golden() {
        // f = (x1, 2 x2), h = (x1, x2): phi = -x1 x2, mu = 3
        let f = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2)]]);
        let h = VectorField::identity(2);
        let cert = integrating_factor(&f, &h).unwrap();
        assert!(cert.valid);
        assert_eq!(cert.polynomial, poly(2, &[(&[1, 1], -1)]));
        assert_eq!(cert.cofactor, MultiPoly::constant(2, rat(3)));
        // f = (x1^2 - x2^2, 2 x1 x2), h = (x1, x2):
        // phi = -(x1^2 x2 + x2^3), mu = 4 x1
        let f = vf(2, &[&[(&[2, 0], 1), (&[0, 2], -1)], &[(&[1, 1], 2)]]);
        let cert = integrating_factor(&f, &h).unwrap();
        assert!(cert.valid);
        assert_eq!(cert.polynomial, poly(2, &[(&[2, 1], -1), (&[0, 3], -1)]));
        assert_eq!(cert.cofactor, poly(2, &[(&[1, 0], 4)]));
        // proportional fields have zero determinant
        assert!(matches!(
            integrating_factor(&f, &f),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn jacobi_multiplier_golden() {
        let f = cone_field();
        let h1 = cone_h1();
        let h2 = cone_h2();
        let cert = jacobi_multiplier(&f, &[&h1, &h2]).unwrap();
        assert!(cert.valid, "X_f(det) = div f * det must hold here");
        assert_eq!(
            cert.polynomial,
            poly(3, &[(&[4, 1, 0], -1), (&[2, 2, 1], -2), (&[0, 3, 2], -1)])
        );
        assert_eq!(cert.cofactor, poly(3, &[(&[1, 0, 0], 6)]));
        // duplicated auxiliary field: zero determinant
        assert!(matches!(
            jacobi_multiplier(&f, &[&h1, &h1]),
            Err(Error::ZeroInput(_))
        ));
        // wrong auxiliary count in dimension 3
        assert!(matches!(
            jacobi_multiplier(&f, &[&h1]),
            Err(Error::Dimension(_))
        ));
        // planar case agrees with integrating_factor
        let fp = vf(2, &[&[(&[1, 0], 1)], &[(&[0, 1], 2)]]);
        let hp = VectorField::identity(2);
        assert_eq!(
            jacobi_multiplier(&fp, &[&hp]).unwrap(),
            integrating_factor(&fp, &hp).unwrap()
        );
    }

    fn monomial_map() -> VectorField {
        vf(
            4,
            &[
                &[(&[1, 1, 0, 0], 1)],
                &[(&[0, 0, 1, 1], 1)],
                &[(&[3, 0, 0, 2], 1)],
                &[(&[0, 3, 2, 0], 1)],
            ],
        )
    }

    #[test]
    fn rank_minors_of_monomial_map() {
        let phi = monomial_map();
        // all 4x4 minors vanish identically: rank <= 3 everywhere
        let fam = jacobian_rank_minors(&phi, 3).unwrap();
        assert_eq!(fam.minors.len(), 1);
        assert!(fam.all_zero());
        // identity map: single full minor 1
        let fam = jacobian_rank_minors(&VectorField::identity(3), 2).unwrap();
        assert_eq!(fam.minors.len(), 1);
        assert_eq!(fam.minors[0].value, MultiPoly::one(3));
        // s equal to the dimension yields the empty family
        assert!(jacobian_rank_minors(&phi, 4).unwrap().minors.is_empty());
        assert!(jacobian_rank_minors(&phi, 5).is_err());
    }

    #[test]
    fn rank_evaluations_of_monomial_map() {
        let phi = monomial_map();
        let cases: [(&[i64; 4], usize); 4] = [
            (&[1, 1, 1, 1], 3),
            (&[0, 1, 0, 1], 2),
            (&[0, 0, 1, 1], 1),
            (&[0, 0, 0, 0], 0),
        ];
        for (pt, want) in cases {
            let point: Vec<Rational> = pt.iter().map(|&x| rat(x)).collect();
            assert_eq!(jacobian_rank_at(&phi, &point).unwrap(), want, "at {pt:?}");
        }
    }

    #[test]
    fn reduce_monomial_invariant() {
        // f = C0 x + phi C1 x, C0 = diag(1,-1), C1 = diag(2,3),
        // phi = x1 x2: reduction through phi gives g = 5 w^2.
        let f = vf(
            2,
            &[&[(&[1, 0], 1), (&[2, 1], 2)], &[(&[0, 1], -1), (&[1, 2], 3)]],
        );
        let phi = poly(2, &[(&[1, 1], 1)]);
        let g = reduce_by_invariants(&f, &[phi.clone()], 2).unwrap().unwrap();
        assert_eq!(g.component(0), &poly(1, &[(&[2], 5)]));
        let map = VectorField::new(2, vec![phi]).unwrap();
        assert!(check_solution_preserving(&map, &f, &g).unwrap().holds);
    }

    #[test]
    fn reduce_central_force() {
        let f = vf(
            4,
            &[
                &[(&[0, 0, 1, 0], 1)],
                &[(&[0, 0, 0, 1], 1)],
                &[(&[3, 0, 0, 0], 1), (&[1, 2, 0, 0], 1)],
                &[(&[2, 1, 0, 0], 1), (&[0, 3, 0, 0], 1)],
            ],
        );
        let phis = [
            poly(4, &[(&[2, 0, 0, 0], 1), (&[0, 2, 0, 0], 1)]),
            poly(4, &[(&[0, 0, 2, 0], 1), (&[0, 0, 0, 2], 1)]),
            poly(4, &[(&[1, 0, 1, 0], 1), (&[0, 1, 0, 1], 1)]),
            poly(4, &[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]),
        ];
        let g = reduce_by_invariants(&f, &phis, 2).unwrap().unwrap();
        assert_eq!(g.component(0), &poly(4, &[(&[0, 0, 1, 0], 2)]));
        assert_eq!(g.component(1), &poly(4, &[(&[1, 0, 1, 0], 2)]));
        assert_eq!(
            g.component(2),
            &poly(4, &[(&[0, 1, 0, 0], 1), (&[2, 0, 0, 0], 1)])
        );
        assert!(g.component(3).is_zero());
        let map = VectorField::new(4, phis.to_vec()).unwrap();
        assert!(check_solution_preserving(&map, &f, &g).unwrap().holds);
    }

    #[test]
    fn reduce_by_coordinates_returns_f() {
        let f = vf(2, &[&[(&[2, 0], 1), (&[0, 2], -1)], &[(&[1, 1], 2)]]);
        let phis = [poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])];
        let g = reduce_by_invariants(&f, &phis, 2).unwrap().unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn reduce_fails_outside_bound() {
        // X_f(x1 x2) = 5 (x1 x2)^2 cannot be expressed with deg <= 1
        let f = vf(
            2,
            &[&[(&[1, 0], 1), (&[2, 1], 2)], &[(&[0, 1], -1), (&[1, 2], 3)]],
        );
        let phi = poly(2, &[(&[1, 1], 1)]);
        assert!(reduce_by_invariants(&f, &[phi], 1).unwrap().is_none());
    }
}
