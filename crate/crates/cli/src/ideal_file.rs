//! Plain-text ideal files.
//!
//! ```text
//! # label: twisted cubic
//! ring 4 over 32003
//! order grevlex
//! z0*z2 - z1^2
//! z1*z3 - z2^2
//! z0*z3 - z1*z2
//! ```
//!
//! The first non-comment line declares the number of variables and the
//! field (`Q` or a prime). Optional `order grevlex|lex` and `vars a,b,c`
//! lines follow, then one homogeneous generator per line. Comment lines of
//! the form `# key: value` are kept as metadata.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use syzygy::groebner::Ideal;
use syzygy::kernel::{Field, FieldSpec, MonomialOrder, Polynomial, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("generator {index} (line {line}) is not homogeneous: {text}")]
    NotHomogeneous { index: usize, line: usize, text: String },
    #[error(transparent)]
    Algebra(#[from] syzygy::Error),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Header, variable names, metadata and raw generator lines of an ideal
/// file. Generators are parsed once a field is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub field: FieldSpec,
    pub nvars: usize,
    pub order: MonomialOrder,
    pub names: Vec<String>,
    pub metadata: Vec<(String, String)>,
    /// `(line number, text)`.
    pub generators: Vec<(usize, String)>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_field(word: &str, line: usize, column: usize) -> Result<FieldSpec, ParseError> {
    let spec = if word == "Q" {
        FieldSpec::Rationals
    } else {
        let p: u32 = word.parse().map_err(|_| syntax(line, column, format!("expected Q or a prime, found `{word}`")))?;
        FieldSpec::Prime(p)
    };
    spec.validate().map_err(|e| syntax(line, column, e.to_string()))?;
    Ok(spec)
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(FieldSpec, usize)> = None;
        let mut order = MonomialOrder::Grevlex;
        let mut names: Option<Vec<String>> = None;
        let mut metadata = Vec::new();
        let mut generators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            let indent = raw.len() - raw.trim_start().len() + 1;
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some((k, v)) = comment.split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
                continue;
            }
            let words: Vec<&str> = trimmed.split_whitespace().collect();
            if header.is_none() {
                if words.len() != 4 || words[0] != "ring" || words[2] != "over" {
                    return Err(syntax(line, indent, "expected `ring <N> over <Q | prime>`"));
                }
                let n: usize = words[1]
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| syntax(line, indent + 5, format!("invalid variable count `{}`", words[1])))?;
                let col = indent + raw.trim_start().find(words[3]).unwrap_or(0);
                header = Some((parse_field(words[3], line, col)?, n));
                continue;
            }
            if generators.is_empty() && words[0] == "order" {
                order = match words.get(1).copied() {
                    Some("grevlex") if words.len() == 2 => MonomialOrder::Grevlex,
                    Some("lex") if words.len() == 2 => MonomialOrder::Lex,
                    _ => return Err(syntax(line, indent, "expected `order grevlex` or `order lex`")),
                };
                continue;
            }
            if generators.is_empty() && words[0] == "vars" {
                let list = trimmed["vars".len()..].trim();
                let parsed: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
                let mut seen = HashSet::new();
                for v in &parsed {
                    if !is_identifier(v) {
                        return Err(syntax(line, indent, format!("invalid variable name `{v}`")));
                    }
                    if !seen.insert(v.clone()) {
                        return Err(syntax(line, indent, format!("duplicate variable name `{v}`")));
                    }
                }
                names = Some(parsed);
                continue;
            }
            generators.push((line, raw.trim_end().to_string()));
        }
        let (field, nvars) = header.ok_or_else(|| syntax(1, 1, "missing `ring` line"))?;
        let names = names.unwrap_or_else(|| (0..nvars).map(|i| format!("z{i}")).collect());
        if names.len() != nvars {
            return Err(syntax(1, 1, format!("{} variable names for {nvars} variables", names.len())));
        }
        Ok(IdealFile { field, nvars, order, names, metadata, generators })
    }

    pub fn ring<F: Field>(&self, field: &F) -> Result<RingRef<F>, ParseError> {
        Ok(Ring::new(field.clone(), self.nvars, self.order)?.renamed(self.names.clone())?)
    }

    /// Parses the generators over `field`, which may differ from the field
    /// named in the header.
    pub fn ideal<F: Field>(&self, field: &F) -> Result<Ideal<F>, ParseError> {
        let ring = self.ring(field)?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (index, (line, text)) in self.generators.iter().enumerate() {
            let g = parse_polynomial(&ring, text, *line)?;
            if !g.is_homogeneous() {
                return Err(ParseError::NotHomogeneous { index: index + 1, line: *line, text: text.trim().to_string() });
            }
            gens.push(g);
        }
        Ok(Ideal::new(&ring, gens)?)
    }

    pub fn metadata(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// Renders an ideal with metadata in the format [`IdealFile::parse`] reads.
pub fn render<F: Field>(ideal: &Ideal<F>, metadata: &[(String, String)]) -> String {
    let ring = ideal.ring();
    let mut s = String::new();
    for (k, v) in metadata {
        let _ = writeln!(s, "# {k}: {v}");
    }
    let _ = writeln!(s, "ring {} over {}", ring.nvars(), ring.field().spec());
    let order = match ring.order() {
        MonomialOrder::Lex => "lex",
        _ => "grevlex",
    };
    let _ = writeln!(s, "order {order}");
    let default: Vec<String> = (0..ring.nvars()).map(|i| format!("z{i}")).collect();
    if ring.names() != default.as_slice() {
        let _ = writeln!(s, "vars {}", ring.names().join(","));
    }
    for g in ideal.generators() {
        let _ = writeln!(s, "{g}");
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str, line: usize) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Token::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*^/()".contains(c) {
            out.push((Token::Sym(c), col));
            i += 1;
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    tokens: Vec<(Token, usize)>,
    pos: usize,
    line: usize,
    end: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        syntax(self.line, self.column(), message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<F>, ParseError> {
        if self.eat('-') {
            let f = self.ring.field();
            return Ok(self.unary()?.scale(&f.neg(&f.one())));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                let e = u32::try_from(&n).ok().filter(|&e| e <= u16::MAX as u32).ok_or_else(|| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        let field = self.ring.field();
        match self.peek().cloned() {
            Some(Token::Int(num)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Token::Int(d)) => {
                            den = d;
                            self.pos += 1;
                        }
                        _ => return Err(self.error("expected an integer denominator")),
                    }
                }
                let c = field.from_ratio(&num, &den).map_err(|_| self.error("denominator vanishes in the field"))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Token::Ident(name)) => {
                let i = self
                    .ring
                    .names()
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.error(format!("unknown variable `{name}`")))?;
                self.pos += 1;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(Token::Sym(c)) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of line")),
        }
    }
}

/// Parses one polynomial; `line` is used in error positions.
pub fn parse_polynomial<F: Field>(ring: &RingRef<F>, text: &str, line: usize) -> Result<Polynomial<F>, ParseError> {
    let tokens = tokenize(text, line)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { ring, tokens, pos: 0, line, end };
    let poly = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzygy::kernel::{PrimeField, Rationals};

    const CUBIC: &str = "ring 4 over 32003\nz0*z2-z1^2\nz1*z3-z2^2\nz0*z3-z1*z2\n";

    #[test]
    fn twisted_cubic_parses() {
        let f = IdealFile::parse(CUBIC).unwrap();
        assert_eq!((f.nvars, f.field, f.generators.len()), (4, FieldSpec::Prime(32003), 3));
        let i = f.ideal(&PrimeField::default()).unwrap();
        assert_eq!(i.generators().len(), 3);
    }

    #[test]
    fn non_homogeneous_generator_is_named() {
        // default names are z0, z1, ...; anything else is unknown
        let f = IdealFile::parse("ring 3 over Q\nx0+1").unwrap().ideal(&Rationals).unwrap_err();
        assert_eq!(f, syntax(2, 1, "unknown variable `x0`"));
        let f = IdealFile::parse("ring 3 over Q\nz0+1").unwrap();
        let err = f.ideal(&Rationals).unwrap_err();
        assert_eq!(err, ParseError::NotHomogeneous { index: 1, line: 2, text: "z0+1".into() });
    }

    #[test]
    fn fraction_over_prime_field_is_modular_inverse() {
        let f = IdealFile::parse("ring 2 over 7\n1/2*z0 - z1").unwrap();
        let i = f.ideal(&PrimeField::new(7).unwrap()).unwrap();
        // 2·4 = 1 mod 7
        assert_eq!(i.generators()[0].terms()[0].1, 4);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = IdealFile::parse("ring 2 over 7\nz0 * (z1 + z0").unwrap().ideal(&PrimeField::new(7).unwrap());
        assert_eq!(err.unwrap_err(), syntax(2, 14, "expected `)`"));
        let err = IdealFile::parse("ring 2 over 8\nz0").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, column: 13, .. }), "{err}");
        let err = IdealFile::parse("ring 2 over 7\nz0*z1 $").unwrap().ideal(&PrimeField::new(7).unwrap());
        assert_eq!(err.unwrap_err(), syntax(2, 7, "unexpected character `$`"));
    }

    #[test]
    fn declared_names_and_order() {
        let text = "# label: conic\nring 3 over Q\norder lex\nvars x,y,w\nx*w - y^2\n";
        let f = IdealFile::parse(text).unwrap();
        assert_eq!(f.order, MonomialOrder::Lex);
        assert_eq!(f.metadata("label"), Some("conic"));
        let i = f.ideal(&Rationals).unwrap();
        let again = IdealFile::parse(&render(&i, &f.metadata)).unwrap();
        assert_eq!(again, IdealFile { generators: vec![(5, i.generators()[0].to_string())], ..f });
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(IdealFile::parse("ring 2 over Q\nvars a,a\n").is_err());
    }
}
