//! Small exact-rational expression language used for parameterized
//! multiplication tables, automorphism-matrix templates, and action formulas:
//! numbers, named parameters, + - * / ^ with parentheses, plus a linear-combo
//! layer over basis symbols e⟨k⟩ and matrix units D⟨i⟩⟨j⟩.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

pub type Bindings = BTreeMap<String, Scalar>;

pub fn bindings(pairs: &[(&str, Scalar)]) -> Bindings {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        Expr::parse_at(text, 1)
    }

    /// Parse with a declared source line for error reporting.
    pub fn parse_at(text: &str, line: usize) -> Result<Expr> {
        let tokens = tokenize(text, line)?;
        let mut p = Parser { tokens, pos: 0, line, end_col: text.chars().count() + 1 };
        let e = p.expression()?;
        p.expect_end()?;
        Ok(e)
    }

    pub fn eval(&self, env: &Bindings) -> Result<Scalar> {
        match self {
            Expr::Num(c) => Ok(c.clone()),
            Expr::Var(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnboundParameter(name.clone())),
            Expr::Add(a, b) => Ok(a.eval(env)? + b.eval(env)?),
            Expr::Sub(a, b) => Ok(a.eval(env)? - b.eval(env)?),
            Expr::Mul(a, b) => Ok(a.eval(env)? * b.eval(env)?),
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero(self.to_string()));
                }
                Ok(a.eval(env)? / d)
            }
            Expr::Neg(a) => Ok(-a.eval(env)?),
            Expr::Pow(a, k) => {
                let base = a.eval(env)?;
                let mut acc = scalar::one();
                for _ in 0..*k {
                    acc *= &base;
                }
                Ok(acc)
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Neg(a) => a.collect_vars(out),
            Expr::Pow(a, _) => a.collect_vars(out),
        }
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expr::Num(c) => write!(f, "{}", scalar::display(c)),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Pow(a, k) => write!(f, "({a}^{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Num(Scalar),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub struct Spanned {
    pub token: Token,
    pub col: usize,
}

pub fn tokenize(text: &str, line: usize) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                out.push(Spanned { token: Token::Plus, col });
                i += 1;
            }
            '-' => {
                out.push(Spanned { token: Token::Minus, col });
                i += 1;
            }
            '*' => {
                out.push(Spanned { token: Token::Star, col });
                i += 1;
            }
            '/' => {
                out.push(Spanned { token: Token::Slash, col });
                i += 1;
            }
            '^' => {
                out.push(Spanned { token: Token::Caret, col });
                i += 1;
            }
            '(' => {
                out.push(Spanned { token: Token::LParen, col });
                i += 1;
            }
            ')' => {
                out.push(Spanned { token: Token::RParen, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = scalar::parse_rational(&digits).map_err(|_| Error::Syntax {
                    line,
                    col,
                    msg: format!("bad number '{digits}'"),
                })?;
                out.push(Spanned { token: Token::Num(value), col });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Spanned { token: Token::Ident(name), col });
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|s| s.token.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, col: self.col(), msg: msg.into() }
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.err("trailing input after expression"))
        }
    }

    fn expression(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Num(k)) if k.is_integer() && !scalar::is_negative(&k) => {
                    let exp = format!("{}", k.numer())
                        .parse::<u32>()
                        .map_err(|_| self.err("exponent too large"))?;
                    base = Expr::Pow(Box::new(base), exp);
                }
                _ => return Err(self.err("expected a nonnegative integer exponent after '^'")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Token::Num(c)) => Ok(Expr::Num(c)),
            Some(Token::Ident(v)) => Ok(Expr::Var(v)),
            Some(Token::LParen) => {
                let inner = self.expression()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.err("expected a number, name, or '('"))
            }
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Symbols a linear combination may range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    /// e⟨k⟩ with 1 ≤ k ≤ dim, mapping to coordinate k−1.
    Basis,
    /// D⟨i⟩⟨j⟩ with single digits, mapping to flat coordinate (i−1)·n + (j−1).
    Delta,
}

/// One parsed term of a linear combination: coefficient expression times the
/// symbol at a flat coordinate index.
#[derive(Debug, Clone)]
pub struct ComboTerm {
    pub coeff: Expr,
    pub index: usize,
}

fn classify_symbol(name: &str, kind: SymbolKind, dim: usize) -> Option<Result<usize>> {
    match kind {
        SymbolKind::Basis => {
            let rest = name.strip_prefix('e')?;
            let k: usize = rest.parse().ok()?;
            Some(if k >= 1 && k <= dim {
                Ok(k - 1)
            } else {
                Err(Error::IndexOutOfRange { index: k, dim })
            })
        }
        SymbolKind::Delta => {
            let rest = name.strip_prefix('D')?;
            if rest.len() != 2 || !rest.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            let i = rest[0..1].parse::<usize>().ok()?;
            let j = rest[1..2].parse::<usize>().ok()?;
            Some(if (1..=dim).contains(&i) && (1..=dim).contains(&j) {
                Ok((i - 1) * dim + (j - 1))
            } else {
                Err(Error::IndexOutOfRange { index: i.max(j), dim })
            })
        }
    }
}

/// Parse a linear combination like "(2-lambda) e4 + e3" or
/// "2 D23 - 2 D32 + D41": signed terms, each a product of coefficient
/// factors (numbers, parameters, parenthesized expressions) ending in one
/// symbol. "0" denotes the empty combination.
pub fn parse_combo(text: &str, dim: usize, kind: SymbolKind, line: usize) -> Result<Vec<ComboTerm>> {
    let tokens = tokenize(text, line)?;
    let mut p = ComboParser {
        inner: Parser { tokens, pos: 0, line, end_col: text.chars().count() + 1 },
        dim,
        kind,
    };
    p.combo()
}

struct ComboParser {
    inner: Parser,
    dim: usize,
    kind: SymbolKind,
}

impl ComboParser {
    fn combo(&mut self) -> Result<Vec<ComboTerm>> {
        // Lone zero: empty combination.
        if self.inner.tokens.len() == 1 {
            if let Token::Num(c) = &self.inner.tokens[0].token {
                if c.is_zero() {
                    return Ok(Vec::new());
                }
            }
        }
        let mut out = Vec::new();
        let mut negate = false;
        if matches!(self.inner.peek(), Some(Token::Minus)) {
            self.inner.bump();
            negate = true;
        }
        loop {
            let term = self.signed_term(negate)?;
            out.push(term);
            match self.inner.peek() {
                Some(Token::Plus) => {
                    self.inner.bump();
                    negate = false;
                }
                Some(Token::Minus) => {
                    self.inner.bump();
                    negate = true;
                }
                None => return Ok(out),
                Some(_) => return Err(self.inner.err("expected '+', '-', or end of combination")),
            }
        }
    }

    fn signed_term(&mut self, negate: bool) -> Result<ComboTerm> {
        let mut factors: Vec<Expr> = Vec::new();
        loop {
            match self.inner.peek() {
                Some(Token::Num(_)) => {
                    let Some(Token::Num(c)) = self.inner.bump() else { unreachable!() };
                    // Allow a literal rational written as a/b.
                    if matches!(self.inner.peek(), Some(Token::Slash)) {
                        self.inner.bump();
                        match self.inner.bump() {
                            Some(Token::Num(d)) if !d.is_zero() => {
                                factors.push(Expr::Num(c / d));
                            }
                            _ => return Err(self.inner.err("expected a nonzero denominator")),
                        }
                    } else {
                        factors.push(Expr::Num(c));
                    }
                }
                Some(Token::LParen) => {
                    self.inner.bump();
                    let e = self.inner.expression()?;
                    match self.inner.bump() {
                        Some(Token::RParen) => factors.push(e),
                        _ => return Err(self.inner.err("expected ')'")),
                    }
                }
                Some(Token::Ident(name)) => {
                    match classify_symbol(name, self.kind, self.dim) {
                        Some(index) => {
                            let index = index?;
                            self.inner.bump();
                            let mut coeff = factors
                                .into_iter()
                                .reduce(|a, b| Expr::Mul(Box::new(a), Box::new(b)))
                                .unwrap_or(Expr::Num(scalar::one()));
                            if negate {
                                coeff = Expr::Neg(Box::new(coeff));
                            }
                            return Ok(ComboTerm { coeff, index });
                        }
                        None => {
                            let Some(Token::Ident(name)) = self.inner.bump() else {
                                unreachable!()
                            };
                            factors.push(Expr::Var(name));
                        }
                    }
                }
                _ => return Err(self.inner.err("expected a coefficient or basis symbol")),
            }
        }
    }
}

/// Evaluate parsed combo terms into a dense coordinate vector of length
/// `len`, summing repeated symbols.
pub fn eval_combo(terms: &[ComboTerm], len: usize, env: &Bindings) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); len];
    for term in terms {
        out[term.index] += term.coeff.eval(env)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn arithmetic_and_precedence() {
        let e = Expr::parse("1 + 2*3^2 - 4/8").unwrap();
        assert_eq!(e.eval(&Bindings::new()).unwrap(), frac(37, 2));
        let e = Expr::parse("-(2 - 5)^3").unwrap();
        assert_eq!(e.eval(&Bindings::new()).unwrap(), int(27));
        let e = Expr::parse("2^2^3").unwrap(); // left-associated: (2^2)^3
        assert_eq!(e.eval(&Bindings::new()).unwrap(), int(64));
    }

    #[test]
    fn variables_and_errors() {
        let env = bindings(&[("lambda", int(3)), ("x", frac(1, 2))]);
        let e = Expr::parse("x^2 * (2 - lambda)").unwrap();
        assert_eq!(e.eval(&env).unwrap(), frac(-1, 4));
        assert!(matches!(
            Expr::parse("mu + 1").unwrap().eval(&env),
            Err(Error::UnboundParameter(name)) if name == "mu"
        ));
        assert!(matches!(
            Expr::parse("1 / (x - x)").unwrap().eval(&env),
            Err(Error::DivisionByZero(_))
        ));
        assert_eq!(
            Expr::parse("x^2").unwrap().vars().into_iter().collect::<Vec<_>>(),
            vec!["x".to_string()]
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = Expr::parse_at("1 + $", 7).unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 7, col: 5, .. }));
        let err = Expr::parse("2 *").unwrap_err();
        assert!(matches!(err, Error::Syntax { col: 4, .. }));
        let err = Expr::parse("(1 + 2").unwrap_err();
        assert!(matches!(err, Error::Syntax { .. }));
        let err = Expr::parse("x^y").unwrap_err();
        assert!(matches!(err, Error::Syntax { .. }));
    }

    #[test]
    fn basis_combos() {
        let terms = parse_combo("(2-lambda) e4", 4, SymbolKind::Basis, 1).unwrap();
        let env = bindings(&[("lambda", int(0))]);
        let v = eval_combo(&terms, 4, &env).unwrap();
        assert_eq!(v, vec![int(0), int(0), int(0), int(2)]);
        let terms = parse_combo("lambda e3 + e4", 4, SymbolKind::Basis, 1).unwrap();
        let v = eval_combo(&terms, 4, &bindings(&[("lambda", int(5))])).unwrap();
        assert_eq!(v, vec![int(0), int(0), int(5), int(1)]);
        let v = eval_combo(
            &parse_combo("-e2 + 1/2 e1", 2, SymbolKind::Basis, 1).unwrap(),
            2,
            &Bindings::new(),
        )
        .unwrap();
        assert_eq!(v, vec![frac(1, 2), int(-1)]);
        assert!(parse_combo("0", 3, SymbolKind::Basis, 1).unwrap().is_empty());
    }

    #[test]
    fn delta_combos() {
        let terms = parse_combo("2 D23 - 2 D32 + D41", 4, SymbolKind::Delta, 1).unwrap();
        let v = eval_combo(&terms, 16, &Bindings::new()).unwrap();
        assert_eq!(v[1 * 4 + 2], int(2));
        assert_eq!(v[2 * 4 + 1], int(-2));
        assert_eq!(v[3 * 4 + 0], int(1));
        // Parameters multiply symbols: λ(2−μ) style coefficients.
        let terms = parse_combo("lambda (2 - mu) D13", 3, SymbolKind::Delta, 1).unwrap();
        let env = bindings(&[("lambda", int(2)), ("mu", int(-1))]);
        let v = eval_combo(&terms, 9, &env).unwrap();
        assert_eq!(v[0 * 3 + 2], int(6));
    }

    #[test]
    fn combo_index_bounds() {
        assert!(matches!(
            parse_combo("e5", 4, SymbolKind::Basis, 1),
            Err(Error::IndexOutOfRange { index: 5, dim: 4 })
        ));
        assert!(matches!(
            parse_combo("D15", 4, SymbolKind::Delta, 1),
            Err(Error::IndexOutOfRange { index: 5, dim: 4 })
        ));
    }
}
