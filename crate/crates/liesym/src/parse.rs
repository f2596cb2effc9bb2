//! Text front end: expression parser and the system-file format.
//!
//! A system file declares one variable list and named entries:
//!
//! ```text
//! vars: x1 x2
//! field f:
//! x1^2 - x2^2
//! 2*x1*x2
//! poly p:
//! -x2*(x1^2 + x2*x2)^2
//! weights B: 1,-1
//! ```
//!
//! Expressions are built from integers, rationals `p/q`, declared
//! variables, `+ - * ^ ( )`; `^` binds tightest, unary minus is allowed,
//! and there is no implicit multiplication (`2x1` is a syntax error).
//! `vars`, `field`, `poly` and `weights` are keywords and cannot be used
//! as variable or entry names. All reported positions are 1-based.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ParseError;
use crate::field::VectorField;
use crate::poly::{MultiPoly, Rational};

const KEYWORDS: [&str; 4] = ["vars", "field", "poly", "weights"];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Rat(BigInt, BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Colon,
    Comma,
    Eol,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Rat(p, q) => format!("rational {p}/{q}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Colon => "':'".into(),
            Tok::Comma => "','".into(),
            Tok::Eol => "end of line".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex_line(line: &str, line_no: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == ' ' || c == '\t' || c == '\r' {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => {
                i += 1;
                Tok::Plus
            }
            '-' => {
                i += 1;
                Tok::Minus
            }
            '*' => {
                i += 1;
                Tok::Star
            }
            '^' => {
                i += 1;
                Tok::Caret
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            ':' => {
                i += 1;
                Tok::Colon
            }
            ',' => {
                i += 1;
                Tok::Comma
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: String = chars[start..i].iter().collect();
                let numer = BigInt::from_str(&numer).unwrap();
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(ParseError::new(
                            line_no,
                            i + 1,
                            &["digits (denominator)"],
                            if i < chars.len() {
                                format!("'{}'", chars[i])
                            } else {
                                "end of line".into()
                            },
                        ));
                    }
                    let denom: String = chars[dstart..i].iter().collect();
                    let denom = BigInt::from_str(&denom).unwrap();
                    if denom.is_zero() {
                        return Err(ParseError::new(
                            line_no,
                            dstart + 1,
                            &["nonzero denominator"],
                            "0",
                        ));
                    }
                    Tok::Rat(numer, denom)
                } else {
                    Tok::Int(numer)
                }
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    &["'+'", "'-'", "'*'", "'^'", "'('", "')'", "number", "variable"],
                    format!("'{other}'"),
                ));
            }
        };
        out.push(Spanned {
            tok,
            line: line_no,
            col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eol,
        line: line_no,
        col: chars.len() + 1,
    });
    Ok(out)
}

struct ExprParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    vars: &'a [String],
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::new(t.line, t.col, expected, t.tok.describe())
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?).unwrap();
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?).unwrap();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = acc.mul(&self.factor()?).unwrap();
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let Tok::Int(ref n) = t.tok else {
                return Err(ParseError::new(
                    t.line,
                    t.col,
                    &["nonnegative integer exponent"],
                    t.tok.describe(),
                ));
            };
            let Ok(e) = u32::try_from(n.clone()) else {
                return Err(ParseError::new(
                    t.line,
                    t.col,
                    &["exponent fitting in 32 bits"],
                    n.to_string(),
                ));
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let nvars = self.vars.len();
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(ref n) => {
                self.bump();
                Ok(MultiPoly::constant(
                    nvars,
                    Rational::from_integer(n.clone()),
                ))
            }
            Tok::Rat(ref p, ref q) => {
                self.bump();
                Ok(MultiPoly::constant(
                    nvars,
                    Rational::new(p.clone(), q.clone()),
                ))
            }
            Tok::Ident(ref name) => {
                let Some(idx) = self.vars.iter().position(|v| v == name) else {
                    return Err(ParseError::new(
                        t.line,
                        t.col,
                        &["declared variable"],
                        format!("undeclared variable '{name}'"),
                    ));
                };
                self.bump();
                Ok(MultiPoly::var(nvars, idx).unwrap())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.err(&["')'", "'+'", "'-'", "'*'", "'^'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.err(&["number", "rational", "variable", "'('", "'-'"])),
        }
    }
}

/// Parses a single expression over the given variables.
pub fn parse_expression(text: &str, vars: &[String]) -> Result<MultiPoly, ParseError> {
    parse_expression_at(text, vars, 1)
}

fn parse_expression_at(
    text: &str,
    vars: &[String],
    line_no: usize,
) -> Result<MultiPoly, ParseError> {
    let toks = lex_line(text, line_no)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eol {
        return Err(p.err(&["'+'", "'-'", "'*'", "end of line"]));
    }
    Ok(e)
}

/// Inline rational like `-3/2`; used for CLI weight lists.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let s = text.trim();
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (num_str, den_str) = match rest.split_once('/') {
        Some((a, b)) => (a, b),
        None => (rest, "1"),
    };
    if num_str.is_empty()
        || den_str.is_empty()
        || !num_str.bytes().all(|b| b.is_ascii_digit())
        || !den_str.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let num = BigInt::from_str(num_str).ok()?;
    let den = BigInt::from_str(den_str).ok()?;
    if den.is_zero() {
        return None;
    }
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

/// Comma-separated rational list like `2,-2,3,-3`.
pub fn parse_weight_list(text: &str) -> Option<Vec<Rational>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.is_empty() || parts.iter().any(|p| p.trim().is_empty()) {
        return None;
    }
    parts.iter().map(|p| parse_rational(p)).collect()
}

/// A parsed system file: a shared variable list plus named entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemFile {
    pub vars: Vec<String>,
    pub fields: Vec<(String, VectorField)>,
    pub polys: Vec<(String, MultiPoly)>,
    pub actions: Vec<(String, Vec<Rational>)>,
}

impl SystemFile {
    pub fn empty(vars: Vec<String>) -> Self {
        SystemFile {
            vars,
            fields: Vec::new(),
            polys: Vec::new(),
            actions: Vec::new(),
        }
    }

    pub fn field(&self, name: &str) -> Option<&VectorField> {
        self.fields.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn poly(&self, name: &str) -> Option<&MultiPoly> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn action(&self, name: &str) -> Option<&[Rational]> {
        self.actions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w.as_slice())
    }

    /// Canonical text form; `parse_system` of the output reproduces the
    /// same system.
    pub fn render(&self) -> String {
        let mut out = format!("vars: {}\n", self.vars.join(" "));
        for (name, f) in &self.fields {
            out.push_str(&format!("field {name}:\n"));
            for c in f.components() {
                out.push_str(&c.render_with(&self.vars));
                out.push('\n');
            }
        }
        for (name, p) in &self.polys {
            out.push_str(&format!("poly {name}:\n"));
            out.push_str(&p.render_with(&self.vars));
            out.push('\n');
        }
        for (name, w) in &self.actions {
            let ws: Vec<String> = w.iter().map(crate::poly::render_rational).collect();
            out.push_str(&format!("weights {name}: {}\n", ws.join(",")));
        }
        out
    }
}

fn header_keyword(toks: &[Spanned]) -> Option<&str> {
    match toks.first().map(|t| &t.tok) {
        Some(Tok::Ident(s)) if KEYWORDS.contains(&s.as_str()) => Some(s.as_str()),
        _ => None,
    }
}

fn expect_colon(toks: &[Spanned], at: usize) -> Result<(), ParseError> {
    match toks.get(at) {
        Some(s) if s.tok == Tok::Colon => Ok(()),
        Some(s) => Err(ParseError::new(s.line, s.col, &["':'"], s.tok.describe())),
        None => unreachable!("Eol token always present"),
    }
}

fn entry_name(toks: &[Spanned], kind: &str) -> Result<String, ParseError> {
    match toks.get(1) {
        Some(Spanned {
            tok: Tok::Ident(name),
            line,
            col,
        }) => {
            if KEYWORDS.contains(&name.as_str()) {
                Err(ParseError::new(
                    *line,
                    *col,
                    &["entry name (not a keyword)"],
                    format!("'{name}'"),
                ))
            } else {
                Ok(name.clone())
            }
        }
        Some(s) => Err(ParseError::new(
            s.line,
            s.col,
            &[&format!("{kind} name")],
            s.tok.describe(),
        )),
        None => unreachable!(),
    }
}

/// Parses a system file. Errors carry line/column and the expected-token
/// set; undeclared variables and duplicate names are positioned errors.
pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut lexed: Vec<Option<Vec<Spanned>>> = Vec::with_capacity(lines.len());
    for (i, l) in lines.iter().enumerate() {
        if l.trim().is_empty() {
            lexed.push(None);
        } else {
            lexed.push(Some(lex_line(l, i + 1)?));
        }
    }
    let mut idx = 0;
    let skip_blank = |idx: &mut usize, lexed: &Vec<Option<Vec<Spanned>>>| {
        while *idx < lexed.len() && lexed[*idx].is_none() {
            *idx += 1;
        }
    };
    skip_blank(&mut idx, &lexed);
    if idx == lexed.len() {
        return Err(ParseError::new(1, 1, &["'vars:'"], "end of input"));
    }
    // vars line
    let toks = lexed[idx].as_ref().unwrap();
    match header_keyword(toks) {
        Some("vars") => {}
        _ => {
            let t = &toks[0];
            return Err(ParseError::new(t.line, t.col, &["'vars'"], t.tok.describe()));
        }
    }
    expect_colon(toks, 1)?;
    let mut vars: Vec<String> = Vec::new();
    for s in &toks[2..] {
        match &s.tok {
            Tok::Ident(name) => {
                if KEYWORDS.contains(&name.as_str()) {
                    return Err(ParseError::new(
                        s.line,
                        s.col,
                        &["variable name (not a keyword)"],
                        format!("'{name}'"),
                    ));
                }
                if vars.contains(name) {
                    return Err(ParseError::new(
                        s.line,
                        s.col,
                        &["fresh variable name"],
                        format!("duplicate variable '{name}'"),
                    ));
                }
                vars.push(name.clone());
            }
            Tok::Eol => break,
            _ => {
                return Err(ParseError::new(
                    s.line,
                    s.col,
                    &["variable name"],
                    s.tok.describe(),
                ))
            }
        }
    }
    if vars.is_empty() {
        let t = toks.last().unwrap();
        return Err(ParseError::new(
            t.line,
            t.col,
            &["at least one variable name"],
            "end of line",
        ));
    }
    idx += 1;

    let mut system = SystemFile::empty(vars);
    let mut names: Vec<String> = system.vars.clone();
    let check_fresh = |name: &str, line: usize, col: usize, names: &mut Vec<String>| {
        if names.iter().any(|n| n == name) {
            Err(ParseError::new(
                line,
                col,
                &["fresh entry name"],
                format!("duplicate name '{name}'"),
            ))
        } else {
            names.push(name.to_string());
            Ok(())
        }
    };

    loop {
        skip_blank(&mut idx, &lexed);
        if idx == lexed.len() {
            break;
        }
        let toks = lexed[idx].as_ref().unwrap();
        let Some(kind) = header_keyword(toks) else {
            let t = &toks[0];
            return Err(ParseError::new(
                t.line,
                t.col,
                &["'field'", "'poly'", "'weights'"],
                t.tok.describe(),
            ));
        };
        match kind {
            "vars" => {
                let t = &toks[0];
                return Err(ParseError::new(
                    t.line,
                    t.col,
                    &["'field'", "'poly'", "'weights'"],
                    "second 'vars' line",
                ));
            }
            "field" => {
                let name = entry_name(toks, "field")?;
                let (nl, nc) = (toks[1].line, toks[1].col);
                check_fresh(&name, nl, nc, &mut names)?;
                expect_colon(toks, 2)?;
                idx += 1;
                let mut components = Vec::new();
                loop {
                    skip_blank(&mut idx, &lexed);
                    if idx == lexed.len() {
                        break;
                    }
                    let lt = lexed[idx].as_ref().unwrap();
                    if header_keyword(lt).is_some() {
                        break;
                    }
                    let mut p = ExprParser {
                        toks: lt,
                        pos: 0,
                        vars: &system.vars,
                    };
                    let e = p.expr()?;
                    if p.peek().tok != Tok::Eol {
                        return Err(p.err(&["'+'", "'-'", "'*'", "end of line"]));
                    }
                    components.push(e);
                    idx += 1;
                }
                if components.is_empty() {
                    let t = toks.last().unwrap();
                    return Err(ParseError::new(
                        t.line + 1,
                        1,
                        &["component expression"],
                        "no components",
                    ));
                }
                system
                    .fields
                    .push((name, VectorField::new(system.vars.len(), components).unwrap()));
            }
            "poly" => {
                let name = entry_name(toks, "poly")?;
                let (nl, nc) = (toks[1].line, toks[1].col);
                check_fresh(&name, nl, nc, &mut names)?;
                expect_colon(toks, 2)?;
                idx += 1;
                skip_blank(&mut idx, &lexed);
                if idx == lexed.len() || header_keyword(lexed[idx].as_ref().unwrap()).is_some() {
                    return Err(ParseError::new(
                        toks[0].line + 1,
                        1,
                        &["polynomial expression"],
                        "no expression",
                    ));
                }
                let lt = lexed[idx].as_ref().unwrap();
                let mut p = ExprParser {
                    toks: lt,
                    pos: 0,
                    vars: &system.vars,
                };
                let e = p.expr()?;
                if p.peek().tok != Tok::Eol {
                    return Err(p.err(&["'+'", "'-'", "'*'", "end of line"]));
                }
                system.polys.push((name, e));
                idx += 1;
            }
            "weights" => {
                let name = entry_name(toks, "weights")?;
                let (nl, nc) = (toks[1].line, toks[1].col);
                check_fresh(&name, nl, nc, &mut names)?;
                expect_colon(toks, 2)?;
                let weights = parse_weight_tokens(&toks[3..])?;
                system.actions.push((name, weights));
                idx += 1;
            }
            _ => unreachable!(),
        }
    }
    Ok(system)
}

/// `[-]q (',' [-]q)*` followed by end of line.
fn parse_weight_tokens(toks: &[Spanned]) -> Result<Vec<Rational>, ParseError> {
    let mut weights = Vec::new();
    let mut i = 0;
    loop {
        let mut negative = false;
        if let Some(s) = toks.get(i) {
            if s.tok == Tok::Minus {
                negative = true;
                i += 1;
            }
        }
        let s = &toks[i.min(toks.len() - 1)];
        let value = match &s.tok {
            Tok::Int(n) => Rational::from_integer(n.clone()),
            Tok::Rat(p, q) => Rational::new(p.clone(), q.clone()),
            _ => {
                return Err(ParseError::new(
                    s.line,
                    s.col,
                    &["rational weight"],
                    s.tok.describe(),
                ))
            }
        };
        weights.push(if negative { -value } else { value });
        i += 1;
        let s = &toks[i.min(toks.len() - 1)];
        match s.tok {
            Tok::Comma => i += 1,
            Tok::Eol => return Ok(weights),
            _ => {
                return Err(ParseError::new(
                    s.line,
                    s.col,
                    &["','", "end of line"],
                    s.tok.describe(),
                ))
            }
        }
    }
}
