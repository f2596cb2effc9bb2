//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order (total degree first, then lexicographic with
//! variable 1 highest). No zero coefficient is ever stored, so structural
//! equality is canonical-form equality. Printing iterates terms in
//! descending order, which gives the stable text form used by the CLI and
//! the golden tests.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar: arbitrary-precision rational. `BigRational` keeps
/// gcd(|num|, den) = 1 with den > 0, which is exactly the canonical form
/// required here.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, omitting `/q` when q = 1.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent vector of one monomial; entry i is the exponent of variable i+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise quotient; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Appends zero exponents up to `nvars` variables.
    pub fn pad_to(&self, nvars: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        Monomial(e)
    }

    fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        parts.join("*")
    }
}

/// Graded lex: degree first, ties broken lexicographically with variable 1
/// highest (a larger exponent on an earlier variable wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// named variables x1..xn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable x_{index+1} as a polynomial (0-based index).
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::IndexOutOfRange { index, nvars });
        }
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), Rational::one());
        Ok(p)
    }

    pub fn monomial(nvars: usize, exponents: &[u32], coeff: Rational) -> Result<Self> {
        if exponents.len() != nvars {
            return Err(Error::VarMismatch(exponents.len(), nvars));
        }
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents.to_vec()), coeff);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Smallest total degree among nonzero terms; -1 for the zero polynomial.
    pub fn lowest_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .min()
            .unwrap_or(-1)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Leading term under graded lex (largest monomial).
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self).expect("same variable set");
        }
        out
    }

    /// Exact partial derivative with respect to variable `index` (0-based).
    pub fn partial(&self, index: usize) -> Result<MultiPoly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[index] = e - 1;
            out.add_term(me, c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::PointLength(point.len(), self.nvars));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitutes `args[i]` for variable i. All `args` must share a common
    /// variable count, which becomes the variable count of the result.
    pub fn substitute(&self, args: &[MultiPoly]) -> Result<MultiPoly> {
        if args.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "substitution needs {} arguments, got {}",
                self.nvars,
                args.len()
            )));
        }
        let out_vars = match args.first() {
            Some(a) => a.nvars,
            None => return Ok(MultiPoly::constant(0, self.constant_term())),
        };
        for a in args {
            if a.nvars != out_vars {
                return Err(Error::VarMismatch(a.nvars, out_vars));
            }
        }
        // Cache powers of each argument as needed.
        let mut powers: Vec<Vec<MultiPoly>> =
            args.iter().map(|a| vec![MultiPoly::one(out_vars), a.clone()]).collect();
        let pow = |i: usize, e: u32, powers: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap().mul(&args[i]).unwrap();
                powers[i].push(next);
            }
            powers[i][e as usize].clone()
        };
        let mut out = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&pow(i, e, &mut powers))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Drops all terms of total degree greater than `d`.
    pub fn truncate_at(&self, d: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() <= d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Reinterprets the polynomial in a larger variable set (new variables
    /// get exponent zero).
    pub fn pad_to(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.pad_to(nvars), c.clone());
        }
        out
    }

    /// Restriction to the first `k` variables; `None` if any later variable
    /// actually occurs.
    pub fn project_prefix(&self, k: usize) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero(k);
        for (m, c) in &self.terms {
            if m.0[k..].iter().any(|&e| e != 0) {
                return None;
            }
            out.terms.insert(Monomial(m.0[..k].to_vec()), c.clone());
        }
        Some(out)
    }

    /// Exact division: `self / divisor` when the division leaves no
    /// remainder, else `None`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero(self.nvars));
        }
        let (dm, dc) = divisor.leading().unwrap();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&lm) {
                return None;
            }
            let qm = lm.div(&dm);
            let qc = lc / dc.clone();
            quot.add_term(qm.clone(), qc.clone());
            let t = MultiPoly::monomial(self.nvars, &qm.0, qc).unwrap();
            rem = rem.sub(&t.mul(divisor).unwrap()).unwrap();
        }
        Some(quot)
    }

    /// Canonical text with default variable names x1..xn.
    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        self.render_with(&names)
    }

    /// Canonical text: terms in descending graded-lex order, normalized
    /// sign form (`-x1^2*x2 - x2^3`), coefficients `p/q`, explicit `*`/`^`.
    pub fn render_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = m.render(names);
            if mono.is_empty() {
                out.push_str(&render_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&render_rational(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in terms {
            out.add_term(Monomial(e.to_vec()), rat(*c));
        }
        out
    }

    #[test]
    fn difference_of_squares() {
        let x1 = MultiPoly::var(2, 0).unwrap();
        let x2 = MultiPoly::var(2, 1).unwrap();
        let lhs = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        let expect = p(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let q = p(3, &[(&[1, 2, 0], 5), (&[0, 0, 1], -2)]);
        assert!(q.mul(&MultiPoly::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn product_combination_matches_planar_example() {
        // (x1^2 - x2^2)*x2 - 2*x1*x2*x1 = -x1^2*x2 - x2^3
        let f1 = p(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let f2 = p(2, &[(&[1, 1], 2)]);
        let x1 = MultiPoly::var(2, 0).unwrap();
        let x2 = MultiPoly::var(2, 1).unwrap();
        let got = f1.mul(&x2).unwrap().sub(&f2.mul(&x1).unwrap()).unwrap();
        assert_eq!(got, p(2, &[(&[2, 1], -1), (&[0, 3], -1)]));
        assert_eq!(got.render(), "-x1^2*x2 - x2^3");
    }

    #[test]
    fn var_mismatch_rejected() {
        let a = MultiPoly::one(2);
        let b = MultiPoly::one(3);
        assert!(matches!(a.add(&b), Err(Error::VarMismatch(2, 3))));
    }

    #[test]
    fn partial_power_rule() {
        // d/dx1 (x1^2 x2) = 2 x1 x2
        let q = p(2, &[(&[2, 1], 1)]);
        assert_eq!(q.partial(0).unwrap(), p(2, &[(&[1, 1], 2)]));
        // d/dx2 of a constant is 0
        assert!(MultiPoly::constant(2, rat(7)).partial(1).unwrap().is_zero());
        // d/dx1 (x1^3 x4^2) = 3 x1^2 x4^2
        let q = p(4, &[(&[3, 0, 0, 2], 1)]);
        assert_eq!(q.partial(0).unwrap(), p(4, &[(&[2, 0, 0, 2], 3)]));
    }

    #[test]
    fn partial_out_of_range() {
        let q = MultiPoly::one(2);
        assert!(matches!(
            q.partial(5),
            Err(Error::IndexOutOfRange { index: 5, nvars: 2 })
        ));
    }

    #[test]
    fn partials_commute() {
        let q = p(3, &[(&[2, 1, 0], 3), (&[1, 1, 1], -5), (&[0, 0, 3], 2)]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    q.partial(i).unwrap().partial(j).unwrap(),
                    q.partial(j).unwrap().partial(i).unwrap()
                );
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        // (x1^2 + x2 x3) at (1, 1, -1) = 0
        let q = p(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]);
        assert_eq!(q.evaluate(&[rat(1), rat(1), rat(-1)]).unwrap(), rat(0));
        // any p at 0 = constant term
        let q = p(2, &[(&[1, 1], 4), (&[0, 0], 9)]);
        assert_eq!(q.evaluate(&[rat(0), rat(0)]).unwrap(), rat(9));
        // x1 x2 at (2, 1/2) = 1
        let q = p(2, &[(&[1, 1], 1)]);
        assert_eq!(q.evaluate(&[rat(2), rat_frac(1, 2)]).unwrap(), rat(1));
        assert!(q.evaluate(&[rat(1)]).is_err());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(MultiPoly::zero(2).total_degree(), -1);
        assert_eq!(MultiPoly::one(2).total_degree(), 0);
        assert_eq!(p(2, &[(&[2, 1], 1), (&[1, 0], 1)]).total_degree(), 3);
        assert_eq!(p(2, &[(&[2, 1], 1), (&[1, 0], 1)]).lowest_degree(), 1);
    }

    #[test]
    fn graded_lex_ordering() {
        // x1^2 > x1 x2 > x2^2 > x1 > x2 > 1
        let order = [
            Monomial(vec![2, 0]),
            Monomial(vec![1, 1]),
            Monomial(vec![0, 2]),
            Monomial(vec![1, 0]),
            Monomial(vec![0, 1]),
            Monomial(vec![0, 0]),
        ];
        for w in order.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn render_forms() {
        assert_eq!(MultiPoly::zero(2).render(), "0");
        assert_eq!(p(2, &[(&[2, 0], 1), (&[0, 2], -1)]).render(), "x1^2 - x2^2");
        assert_eq!(p(2, &[(&[1, 1], 2)]).render(), "2*x1*x2");
        let mut q = p(2, &[(&[1, 0], 5)]);
        q.add_term(Monomial(vec![0, 0]), rat_frac(1, 3));
        q = q.scale(&rat_frac(1, 2));
        assert_eq!(q.render(), "5/2*x1 + 1/6");
        assert_eq!(MultiPoly::constant(1, rat(-4)).render(), "-4");
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = p(2, &[(&[2, 0], 1), (&[0, 1], 3), (&[0, 0], -1)]);
        let b = p(2, &[(&[1, 1], 2), (&[1, 0], -1), (&[0, 0], 5)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let off = prod.add(&MultiPoly::one(2)).unwrap();
        assert!(off.div_exact(&a).is_none());
    }

    #[test]
    fn substitute_composes() {
        // w^2 at w = x1 x2 gives x1^2 x2^2
        let sq = p(1, &[(&[2], 1)]);
        let phi = p(2, &[(&[1, 1], 1)]);
        assert_eq!(sq.substitute(&[phi]).unwrap(), p(2, &[(&[2, 2], 1)]));
    }
}
