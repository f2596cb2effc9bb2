//! Command dispatch shared by the `liesym` binary and the C ABI.
//!
//! Exit-code convention: 0 for success (and passed checks), 1 for a
//! well-formed negative result (failed check, no certificate within the
//! bound), 2 for usage, parse, and precondition errors.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::invariant::{self, MinorFamily};
use crate::lie;
use crate::normalform;
use crate::parse::{parse_weight_list, SystemFile};
use crate::poly::{render_rational, Monomial, MultiPoly, Rational};
use crate::report::Report;
use crate::symmetry;
use crate::toral::{self, DiagonalAction};

#[derive(Debug, Parser)]
#[command(
    name = "liesym",
    about = "Exact symmetry analysis of polynomial differential equations",
    version
)]
pub struct Cli {
    /// System file with vars/field/poly/weights blocks; '-' reads stdin.
    #[arg(short = 's', long, global = true)]
    pub system: Option<String>,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lie bracket [F, G].
    Bracket { f: String, g: String },
    /// Lie derivative X_F(P).
    Lieder { f: String, p: String },
    /// Check [H, F] = 0.
    Symcheck { h: String, f: String },
    /// Find lambda with [H, F] = lambda F.
    Orbsym {
        h: String,
        f: String,
        #[arg(long = "cofactor-deg")]
        cofactor_deg: Option<u32>,
    },
    /// Basis of fields commuting with F, degree-bounded.
    Centralizer {
        f: String,
        #[arg(long = "max-deg")]
        max_deg: u32,
    },
    /// Basis of (H, lambda) with [H, F] = lambda F, degree-bounded.
    Normalizer {
        f: String,
        #[arg(long = "max-deg")]
        max_deg: u32,
        #[arg(long = "cofactor-deg")]
        cofactor_deg: u32,
    },
    /// Check f(Tx) = T f(x) for a linear map T (a field with linear components).
    Linsym { t: String, f: String },
    /// Second-order point-symmetry check for x'' = H(x, x').
    Secord { g: String, h: String },
    /// Invariant monomial generators of a diagonal action, degree-bounded.
    ToralGens {
        weights: String,
        #[arg(long = "max-deg")]
        max_deg: u32,
    },
    /// Decide whether the invariant algebra is trivial.
    ToralTrivial { weights: String },
    /// Binomial relations among the bounded invariant generators.
    Relations {
        weights: String,
        #[arg(long = "max-deg")]
        max_deg: u32,
    },
    /// Split P into weight components under a diagonal action.
    WeightSplit { weights: String, p: String },
    /// Monomial fields commuting with a diagonal action, degree-bounded.
    ToralCentralizer {
        weights: String,
        #[arg(long = "max-deg")]
        max_deg: u32,
    },
    /// Poincare-Dulac normalization through the given degree.
    Normalform {
        f: String,
        #[arg(long)]
        deg: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Resonant monomial fields of a diagonal action at one degree.
    Resonances {
        weights: String,
        #[arg(long)]
        deg: u32,
    },
    /// First-integral check X_F(P) = 0.
    Firstint { f: String, p: String },
    /// Semi-invariant cofactor solve X_F(P) = mu P.
    Semiinv { f: String, p: String },
    /// Joint invariance criterion for a list of polynomials.
    Invcheck {
        f: String,
        #[arg(num_args = 1..)]
        polys: Vec<String>,
        #[arg(long = "mu-deg")]
        mu_deg: u32,
    },
    /// Minors of the matrix with the given fields as columns.
    Minors {
        #[arg(num_args = 1..)]
        fields: Vec<String>,
        #[arg(long)]
        size: usize,
    },
    /// Integrating-factor construction det(F, H) in the plane.
    Intfactor { f: String, h: String },
    /// Jacobi-multiplier construction det(F, H1, .., H_{n-1}).
    Jacobimult {
        f: String,
        #[arg(num_args = 1..)]
        hs: Vec<String>,
    },
    /// Rank-stratum minors of the Jacobian of a polynomial map.
    Rankstrata {
        phi: String,
        #[arg(long = "s")]
        s: usize,
    },
    /// Reduction by invariants: X_F(PHI_i) = g_i(PHI), degree-bounded.
    Reduce {
        f: String,
        #[arg(num_args = 1..)]
        phis: Vec<String>,
        #[arg(long = "target-deg")]
        target_deg: u32,
    },
}

/// Parses a bare subcommand line (no binary name, no global flags); the C
/// ABI drives dispatch through this.
pub fn parse_command_line(tokens: &[&str]) -> std::result::Result<Command, clap::Error> {
    #[derive(Parser)]
    #[command(name = "liesym", no_binary_name = true)]
    struct CommandLine {
        #[command(subcommand)]
        command: Command,
    }
    CommandLine::try_parse_from(tokens).map(|c| c.command)
}

struct Ctx<'a> {
    system: Option<&'a SystemFile>,
}

impl<'a> Ctx<'a> {
    fn system(&self) -> Result<&'a SystemFile> {
        self.system.ok_or_else(|| {
            Error::precondition("this command needs a system file (--system <path> or '-')")
        })
    }

    fn field(&self, name: &str) -> Result<&'a VectorField> {
        let sys = self.system()?;
        sys.field(name)
            .ok_or_else(|| Error::precondition(format!("no field named '{name}' in the system")))
    }

    fn poly(&self, name: &str) -> Result<&'a MultiPoly> {
        let sys = self.system()?;
        sys.poly(name)
            .ok_or_else(|| Error::precondition(format!("no poly named '{name}' in the system")))
    }

    fn weights(&self, arg: &str) -> Result<Vec<Rational>> {
        if let Some(sys) = self.system {
            if let Some(w) = sys.action(arg) {
                return Ok(w.to_vec());
            }
        }
        parse_weight_list(arg).ok_or_else(|| {
            Error::precondition(format!(
                "'{arg}' is neither a declared weights entry nor an inline rational list"
            ))
        })
    }

    fn names(&self, nvars: usize) -> Vec<String> {
        match self.system {
            Some(sys) if sys.vars.len() == nvars => sys.vars.clone(),
            _ => (1..=nvars).map(|i| format!("x{i}")).collect(),
        }
    }

    fn render_poly(&self, p: &MultiPoly) -> String {
        p.render_with(&self.names(p.nvars()))
    }

    fn render_field(&self, f: &VectorField) -> String {
        f.render_with(&self.names(f.nvars()))
    }
}

fn weights_string(w: &[Rational]) -> String {
    w.iter().map(render_rational).collect::<Vec<_>>().join(",")
}

fn monomial_string(m: &Monomial, names: &[String]) -> String {
    MultiPoly::monomial(m.nvars(), &m.0, Rational::from_integer(1.into()))
        .unwrap()
        .render_with(names)
}

fn monomial_field_string(m: &Monomial, j: usize, names: &[String]) -> String {
    format!("{} e{}", monomial_string(m, names), j + 1)
}

fn minor_family_json(fam: &MinorFamily, render: impl Fn(&MultiPoly) -> String) -> Value {
    let entries: Vec<Value> = fam
        .minors
        .iter()
        .map(|m| {
            json!({
                "rows": m.row_set.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "cols": m.col_set.iter().map(|j| j + 1).collect::<Vec<_>>(),
                "value": render(&m.value),
            })
        })
        .collect();
    Value::Array(entries)
}

/// Executes one command against an optional system, producing the report.
pub fn run(command: &Command, system: Option<&SystemFile>) -> Result<Report> {
    let ctx = Ctx { system };
    match command {
        Command::Bracket { f, g } => {
            let fv = ctx.field(f)?;
            let gv = ctx.field(g)?;
            let bracket = lie::lie_bracket(fv, gv)?;
            let mut r = Report::new("bracket");
            r.input(f.clone(), ctx.render_field(fv));
            r.input(g.clone(), ctx.render_field(gv));
            r.output("bracket", ctx.render_field(&bracket));
            Ok(r)
        }
        Command::Lieder { f, p } => {
            let fv = ctx.field(f)?;
            let pv = ctx.poly(p)?;
            let d = lie::lie_derivative(fv, pv)?;
            let mut r = Report::new("lieder");
            r.input(f.clone(), ctx.render_field(fv));
            r.input(p.clone(), ctx.render_poly(pv));
            r.output("derivative", ctx.render_poly(&d));
            Ok(r)
        }
        Command::Symcheck { h, f } => {
            let hv = ctx.field(h)?;
            let fv = ctx.field(f)?;
            let check = symmetry::check_symmetry(hv, fv)?;
            let mut r = Report::new("symcheck");
            r.input(h.clone(), ctx.render_field(hv));
            r.input(f.clone(), ctx.render_field(fv));
            r.output("commutes", check.commutes);
            r.certificate("residual", ctx.render_field(&check.residual));
            r.valid = check.commutes;
            Ok(r)
        }
        Command::Orbsym { h, f, cofactor_deg } => {
            let hv = ctx.field(h)?;
            let fv = ctx.field(f)?;
            let bound = match cofactor_deg {
                Some(b) => *b,
                None => symmetry::default_cofactor_bound(hv, fv)?,
            };
            let cert = symmetry::check_orbital_symmetry(hv, fv, Some(bound))?;
            let mut r = Report::new("orbsym");
            r.input(h.clone(), ctx.render_field(hv));
            r.input(f.clone(), ctx.render_field(fv));
            r.bound("cofactor-deg", bound);
            match cert {
                Some(c) => {
                    r.output("lambda", ctx.render_poly(&c.cofactor));
                    r.certificate("residual", ctx.render_field(&c.residual));
                    r.valid = true;
                }
                None => {
                    r.output("lambda", Value::Null);
                    r.certificate(
                        "note",
                        "no polynomial cofactor exists within the degree bound",
                    );
                    r.valid = false;
                }
            }
            Ok(r)
        }
        Command::Centralizer { f, max_deg } => {
            let fv = ctx.field(f)?;
            let basis = symmetry::centralizer_basis(fv, *max_deg)?;
            let mut r = Report::new("centralizer");
            r.input(f.clone(), ctx.render_field(fv));
            r.bound("max-deg", *max_deg);
            r.output("dimension", basis.dim());
            r.output(
                "basis",
                Value::Array(
                    basis
                        .basis
                        .iter()
                        .map(|b| Value::String(ctx.render_field(b)))
                        .collect(),
                ),
            );
            Ok(r)
        }
        Command::Normalizer {
            f,
            max_deg,
            cofactor_deg,
        } => {
            let fv = ctx.field(f)?;
            let pairs = symmetry::normalizer_basis(fv, *max_deg, *cofactor_deg)?;
            let mut r = Report::new("normalizer");
            r.input(f.clone(), ctx.render_field(fv));
            r.bound("max-deg", *max_deg);
            r.bound("cofactor-deg", *cofactor_deg);
            r.output("dimension", pairs.len());
            r.output(
                "basis",
                Value::Array(
                    pairs
                        .iter()
                        .map(|(h, l)| {
                            json!({
                                "h": ctx.render_field(h),
                                "lambda": ctx.render_poly(l),
                            })
                        })
                        .collect(),
                ),
            );
            Ok(r)
        }
        Command::Linsym { t, f } => {
            let tv = ctx.field(t)?;
            let fv = ctx.field(f)?;
            let matrix = tv.as_linear_matrix().ok_or_else(|| {
                Error::precondition(format!("'{t}' must have homogeneous linear components"))
            })?;
            let holds = symmetry::check_linear_symmetry(&matrix, fv)?;
            let mut r = Report::new("linsym");
            r.input(t.clone(), ctx.render_field(tv));
            r.input(f.clone(), ctx.render_field(fv));
            r.output("equivariant", holds);
            r.valid = holds;
            Ok(r)
        }
        Command::Secord { g, h } => {
            let gv2n = ctx.field(g)?;
            let hv = ctx.field(h)?;
            let two_n = hv.nvars();
            if two_n % 2 != 0 {
                return Err(Error::precondition(
                    "second-order systems need an even variable count (x then y)",
                ));
            }
            let n = two_n / 2;
            if gv2n.dim() != n {
                return Err(Error::precondition(format!(
                    "'{g}' must have {n} components (a field on the x-variables)"
                )));
            }
            let mut comps = Vec::with_capacity(n);
            for c in gv2n.components() {
                comps.push(c.project_prefix(n).ok_or_else(|| {
                    Error::precondition(format!("'{g}' must not involve the velocity variables"))
                })?);
            }
            let gv = VectorField::new(n, comps)?;
            let check = symmetry::check_second_order_symmetry(&gv, hv)?;
            let mut r = Report::new("secord");
            r.input(g.clone(), ctx.render_field(gv2n));
            r.input(h.clone(), ctx.render_field(hv));
            r.output("symmetry", check.holds);
            r.certificate("residual", ctx.render_field(&check.residual));
            r.valid = check.holds;
            Ok(r)
        }
        Command::ToralGens { weights, max_deg } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            let gens = toral::invariant_monomial_generators(&action, *max_deg);
            let names = ctx.names(action.nvars());
            let mut r = Report::new("toral-gens");
            r.input("weights", weights_string(&w));
            r.bound("max-deg", *max_deg);
            r.output("count", gens.len());
            r.output(
                "generators",
                Value::Array(
                    gens.iter()
                        .map(|m| Value::String(monomial_string(m, &names)))
                        .collect(),
                ),
            );
            Ok(r)
        }
        Command::ToralTrivial { weights } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            let trivial = toral::invariant_algebra_is_trivial(&action);
            let mut r = Report::new("toral-trivial");
            r.input("weights", weights_string(&w));
            r.output("trivial", trivial);
            r.valid = trivial;
            Ok(r)
        }
        Command::Relations { weights, max_deg } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            let gens = toral::invariant_monomial_generators(&action, *max_deg);
            let names = ctx.names(action.nvars());
            let mut r = Report::new("relations");
            r.input("weights", weights_string(&w));
            r.bound("max-deg", *max_deg);
            r.output(
                "generators",
                Value::Array(
                    gens.iter()
                        .map(|m| Value::String(monomial_string(m, &names)))
                        .collect(),
                ),
            );
            if gens.is_empty() {
                r.output("relations", Value::Array(vec![]));
                return Ok(r);
            }
            let rels = toral::monomial_relations(&gens)?;
            let rel_values: Vec<Value> = rels
                .iter()
                .map(|v| {
                    json!({
                        "vector": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "equation": relation_equation(v),
                    })
                })
                .collect();
            r.output("relations", Value::Array(rel_values));
            Ok(r)
        }
        Command::WeightSplit { weights, p } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            let pv = ctx.poly(p)?;
            let parts = toral::weight_decompose(&action, pv)?;
            let mut r = Report::new("weight-split");
            r.input("weights", weights_string(&w));
            r.input(p.clone(), ctx.render_poly(pv));
            let mut obj = serde_json::Map::new();
            for (chi, part) in &parts {
                obj.insert(render_rational(chi), Value::String(ctx.render_poly(part)));
            }
            r.output("components", Value::Object(obj));
            Ok(r)
        }
        Command::ToralCentralizer { weights, max_deg } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            let monos = toral::centralizer_monomials(&action, *max_deg);
            let names = ctx.names(action.nvars());
            let mut r = Report::new("toral-centralizer");
            r.input("weights", weights_string(&w));
            r.bound("max-deg", *max_deg);
            r.output("count", monos.len());
            r.output(
                "monomial_fields",
                Value::Array(
                    monos
                        .iter()
                        .map(|(m, j)| Value::String(monomial_field_string(m, *j, &names)))
                        .collect(),
                ),
            );
            Ok(r)
        }
        Command::Normalform { f, deg, verify } => {
            let fv = ctx.field(f)?;
            let res = normalform::normal_form(fv, *deg)?;
            let names = ctx.names(fv.nvars());
            let mut r = Report::new("normalform");
            r.input(f.clone(), ctx.render_field(fv));
            r.bound("deg", *deg);
            r.output("normal_form", ctx.render_field(&res.normal_form));
            r.output("transformation", ctx.render_field(&res.transformation));
            r.output(
                "generators",
                Value::Array(
                    res.generators
                        .iter()
                        .enumerate()
                        .map(|(i, h)| {
                            json!({
                                "degree": i + 2,
                                "h": ctx.render_field(h),
                            })
                        })
                        .collect(),
                ),
            );
            r.output(
                "resonant_monomials",
                Value::Array(
                    res.resonant_monomials
                        .iter()
                        .map(|(m, j)| Value::String(monomial_field_string(m, *j, &names)))
                        .collect(),
                ),
            );
            if *verify {
                let v = normalform::verify_normal_form(&res, fv)?;
                r.certificate("verified", v.ok);
                r.certificate(
                    "bracket_failures",
                    Value::Array(v.bracket_failures.iter().map(|d| json!(d)).collect()),
                );
                r.certificate(
                    "conjugacy_failure_degree",
                    match v.conjugacy_failure_degree {
                        Some(d) => json!(d),
                        None => Value::Null,
                    },
                );
                r.valid = v.ok;
            }
            Ok(r)
        }
        Command::Resonances { weights, deg } => {
            let w = ctx.weights(weights)?;
            let action = DiagonalAction::new(w.clone())?;
            if *deg < 2 {
                return Err(Error::precondition("resonance degree must be at least 2"));
            }
            let monos = normalform::resonant_monomials(&action, *deg);
            let names = ctx.names(action.nvars());
            let mut r = Report::new("resonances");
            r.input("weights", weights_string(&w));
            r.bound("deg", *deg);
            r.output("count", monos.len());
            r.output(
                "resonant_monomials",
                Value::Array(
                    monos
                        .iter()
                        .map(|(m, j)| Value::String(monomial_field_string(m, *j, &names)))
                        .collect(),
                ),
            );
            Ok(r)
        }
        Command::Firstint { f, p } => {
            let fv = ctx.field(f)?;
            let pv = ctx.poly(p)?;
            let check = invariant::first_integral_check(fv, pv)?;
            let mut r = Report::new("firstint");
            r.input(f.clone(), ctx.render_field(fv));
            r.input(p.clone(), ctx.render_poly(pv));
            r.output("first_integral", check.holds);
            r.certificate("derivative", ctx.render_poly(&check.derivative));
            if check.constant_input {
                r.certificate("warning", "input is constant (excluded by definition)");
            }
            r.valid = check.holds;
            Ok(r)
        }
        Command::Semiinv { f, p } => {
            let fv = ctx.field(f)?;
            let pv = ctx.poly(p)?;
            let cert = invariant::semi_invariant_cofactor(fv, pv)?;
            let mut r = Report::new("semiinv");
            r.input(f.clone(), ctx.render_field(fv));
            r.input(p.clone(), ctx.render_poly(pv));
            let bound = (lie::lie_derivative(fv, pv)?.total_degree() - pv.lowest_degree()).max(0);
            r.bound("mu-deg", bound);
            r.output("semi_invariant", cert.valid);
            r.output("mu", ctx.render_poly(&cert.cofactor));
            if pv.is_constant() {
                r.certificate("warning", "input is constant (excluded by definition)");
            }
            r.valid = cert.valid;
            Ok(r)
        }
        Command::Invcheck { f, polys, mu_deg } => {
            let fv = ctx.field(f)?;
            let phis: Vec<MultiPoly> = polys
                .iter()
                .map(|p| ctx.poly(p).cloned())
                .collect::<Result<_>>()?;
            let check = invariant::invariant_variety_check(fv, &phis, *mu_deg)?;
            let mut r = Report::new("invcheck");
            r.input(f.clone(), ctx.render_field(fv));
            for (name, p) in polys.iter().zip(&phis) {
                r.input(name.clone(), ctx.render_poly(p));
            }
            r.bound("mu-deg", *mu_deg);
            r.output("invariant", check.holds);
            if let Some(mu) = &check.cofactors {
                r.certificate(
                    "cofactor_matrix",
                    Value::Array(
                        mu.iter()
                            .map(|row| {
                                Value::Array(
                                    row.iter()
                                        .map(|m| Value::String(ctx.render_poly(m)))
                                        .collect(),
                                )
                            })
                            .collect(),
                    ),
                );
            }
            r.valid = check.holds;
            Ok(r)
        }
        Command::Minors { fields, size } => {
            let fvs: Vec<&VectorField> = fields
                .iter()
                .map(|n| ctx.field(n))
                .collect::<Result<_>>()?;
            let fam = invariant::minors(&fvs, *size)?;
            let mut r = Report::new("minors");
            for (name, fv) in fields.iter().zip(&fvs) {
                r.input(name.clone(), ctx.render_field(fv));
            }
            r.bound("size", *size);
            r.output("minors", minor_family_json(&fam, |p| ctx.render_poly(p)));
            Ok(r)
        }
        Command::Intfactor { f, h } => {
            let fv = ctx.field(f)?;
            let hv = ctx.field(h)?;
            let cert = invariant::integrating_factor(fv, hv)?;
            let mut r = Report::new("intfactor");
            r.input(f.clone(), ctx.render_field(fv));
            r.input(h.clone(), ctx.render_field(hv));
            r.output("phi", ctx.render_poly(&cert.polynomial));
            r.certificate("mu", ctx.render_poly(&cert.cofactor));
            r.certificate("identity_holds", cert.valid);
            r.valid = cert.valid;
            Ok(r)
        }
        Command::Jacobimult { f, hs } => {
            let fv = ctx.field(f)?;
            let hvs: Vec<&VectorField> = hs.iter().map(|n| ctx.field(n)).collect::<Result<_>>()?;
            let cert = invariant::jacobi_multiplier(fv, &hvs)?;
            let mut r = Report::new("jacobimult");
            r.input(f.clone(), ctx.render_field(fv));
            for (name, hv) in hs.iter().zip(&hvs) {
                r.input(name.clone(), ctx.render_field(hv));
            }
            r.output("phi", ctx.render_poly(&cert.polynomial));
            r.certificate("mu", ctx.render_poly(&cert.cofactor));
            r.certificate("identity_holds", cert.valid);
            r.valid = cert.valid;
            Ok(r)
        }
        Command::Rankstrata { phi, s } => {
            let pv = ctx.field(phi)?;
            let fam = invariant::jacobian_rank_minors(pv, *s)?;
            let mut r = Report::new("rankstrata");
            r.input(phi.clone(), ctx.render_field(pv));
            r.bound("s", *s);
            r.output("all_zero", fam.all_zero());
            r.output("minors", minor_family_json(&fam, |p| ctx.render_poly(p)));
            Ok(r)
        }
        Command::Reduce {
            f,
            phis,
            target_deg,
        } => {
            let fv = ctx.field(f)?;
            let phi_polys: Vec<MultiPoly> = phis
                .iter()
                .map(|p| ctx.poly(p).cloned())
                .collect::<Result<_>>()?;
            let reduced = invariant::reduce_by_invariants(fv, &phi_polys, *target_deg)?;
            let mut r = Report::new("reduce");
            r.input(f.clone(), ctx.render_field(fv));
            for (name, p) in phis.iter().zip(&phi_polys) {
                r.input(name.clone(), ctx.render_poly(p));
            }
            r.bound("target-deg", *target_deg);
            match reduced {
                Some(g) => {
                    // reduced field lives in fresh variables w1..wr
                    let names: Vec<String> = (1..=g.nvars()).map(|i| format!("w{i}")).collect();
                    r.output("reduced", g.render_with(&names));
                    let map = VectorField::new(fv.nvars(), phi_polys)?;
                    let check = lie::check_solution_preserving(&map, fv, &g)?;
                    r.certificate("solution_preserving", check.holds);
                    r.valid = true;
                }
                None => {
                    r.output("reduced", Value::Null);
                    r.certificate(
                        "note",
                        "no polynomial reduction exists within the degree bound",
                    );
                    r.valid = false;
                }
            }
            Ok(r)
        }
    }
}

/// Renders a kernel vector as the binomial identity it encodes, with
/// generators named g1..gr.
fn relation_equation(vector: &[num_bigint::BigInt]) -> String {
    use num_traits::Signed;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (i, a) in vector.iter().enumerate() {
        if a.is_positive() {
            lhs.push(power_string(i, a.magnitude().to_string()));
        } else if a.is_negative() {
            rhs.push(power_string(i, a.magnitude().to_string()));
        }
    }
    let side = |parts: Vec<String>| {
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    };
    format!("{} = {}", side(lhs), side(rhs))
}

fn power_string(index: usize, magnitude: String) -> String {
    if magnitude == "1" {
        format!("g{}", index + 1)
    } else {
        format!("g{}^{}", index + 1, magnitude)
    }
}
