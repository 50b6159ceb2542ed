//! Text format for rings, polynomials, labels and presentations.
//!
//! ```text
//! vars = [x, y];
//! weights = [2, 3];
//! ideal = [y^2 - x^3];
//! assume_domain = true;
//! generators = [d1(x), d1(y)];
//! degrees = [2, 3];
//! relations = [[-3*x^2, 2*y]];
//! ```
//!
//! `#` starts a comment running to the end of the line.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;
use crate::label::GeneratorLabel;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::PolyRing;
use crate::presentation::Presentation;
use crate::ring::RingSpec;
use crate::{Poly, Rational, Vector};

type PResult<T> = std::result::Result<T, ParseError>;

const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> PResult<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digit run")),
                line: l0,
                col: c0,
            });
            continue;
        }
        let tok = match c {
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            other => {
                return Err(ParseError::new(l0, c0, format!("unexpected character `{other}`")));
            }
        };
        out.push(Token { tok, line: l0, col: c0 });
        i += 1;
        col += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> PResult<Parser> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::new(t.line, t.col, msg)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        if t.tok == Tok::Caret && self.pos > 0 && self.toks[self.pos - 1].tok == Tok::Caret {
            let prev = &self.toks[self.pos - 1];
            return Self::error_at(prev, "unexpected `^^`");
        }
        Self::error_at(t, format!("expected {expected}, found {}", t.tok.describe()))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn expect_eof(&self) -> PResult<()> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Token)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump()))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    /// `[ item, item, ... ]`, trailing comma allowed.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Parser) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect(Tok::LBrack)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrack) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(&Tok::Comma) {
                if self.eat(&Tok::RBrack) {
                    return Ok(out);
                }
                continue;
            }
            if self.eat(&Tok::RBrack) {
                return Ok(out);
            }
            return Err(self.unexpected("`,` or `]`"));
        }
    }

    fn signed_int(&mut self) -> PResult<(BigInt, Token)> {
        let start = self.peek().clone();
        let neg = self.eat(&Tok::Minus);
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = if neg { -n.clone() } else { n.clone() };
                self.bump();
                Ok((n, start))
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self, ring: &Arc<PolyRing>) -> PResult<Poly> {
        let mut acc = self.term(ring)?;
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.term(ring)?;
                acc = &acc + &t;
            } else if self.eat(&Tok::Minus) {
                let t = self.term(ring)?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self, ring: &Arc<PolyRing>) -> PResult<Poly> {
        let mut acc = self.unary(ring)?;
        while self.peek().tok == Tok::Star {
            let star = self.bump();
            let rhs = self.unary(ring)?;
            acc = acc
                .checked_mul(&rhs)
                .map_err(|e| Self::error_at(&star, e.to_string()))?;
        }
        Ok(acc)
    }

    fn unary(&mut self, ring: &Arc<PolyRing>) -> PResult<Poly> {
        if self.eat(&Tok::Minus) {
            let p = self.unary(ring)?;
            return Ok(-&p);
        }
        if self.eat(&Tok::Plus) {
            return self.unary(ring);
        }
        self.power(ring)
    }

    // power := atom ('^' int)?
    fn power(&mut self, ring: &Arc<PolyRing>) -> PResult<Poly> {
        let base = self.atom(ring)?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let e = match &self.peek().tok {
            Tok::Int(n) => n.clone(),
            _ => return Err(self.unexpected("an exponent")),
        };
        let etok = self.bump();
        let e = e
            .to_u32()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| Self::error_at(&etok, format!("exponent exceeds {MAX_EXPONENT}")))?;
        let mut acc = Poly::one(ring);
        for _ in 0..e {
            acc = acc
                .checked_mul(&base)
                .map_err(|err| Self::error_at(&caret, err.to_string()))?;
        }
        if self.peek().tok == Tok::Caret {
            return Err(Self::error_at(self.peek(), "chained `^` needs parentheses"));
        }
        Ok(acc)
    }

    // atom := int ('/' int)? | ident | '(' expr ')'
    fn atom(&mut self, ring: &Arc<PolyRing>) -> PResult<Poly> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                let num = n.clone();
                self.bump();
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let dt = self.peek().clone();
                    let den = match &dt.tok {
                        Tok::Int(d) => d.clone(),
                        _ => return Err(self.unexpected("a denominator")),
                    };
                    self.bump();
                    if den.is_zero() {
                        return Err(Self::error_at(&dt, "division by zero"));
                    }
                    return Ok(Poly::constant(ring, Rational::new(num, den)));
                }
                Ok(Poly::constant(ring, Rational::from_integer(num)))
            }
            Tok::Ident(name) => {
                let idx = ring
                    .index_of(name)
                    .ok_or_else(|| Self::error_at(&t, format!("unknown variable `{name}`")))?;
                self.bump();
                Ok(Poly::var(ring, idx))
            }
            Tok::LParen => {
                self.bump();
                let p = self.expr(ring)?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }

    fn monomial(&mut self, ring: &Arc<PolyRing>) -> PResult<Monomial> {
        let start = self.peek().clone();
        let p = self.expr(ring)?;
        match p.terms() {
            [(m, c)] if c.is_one() => Ok(m.clone()),
            _ => Err(Self::error_at(&start, format!("`{p}` is not a monomial"))),
        }
    }

    fn label(&mut self, ring: &RingSpec) -> PResult<GeneratorLabel> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                let n = n.to_string();
                self.bump();
                Ok(GeneratorLabel::plain(n))
            }
            Tok::Ident(name) => {
                let name = name.clone();
                self.bump();
                let order_of = |prefix: char| -> Option<u32> {
                    let rest = name.strip_prefix(prefix)?;
                    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
                        return None;
                    }
                    rest.parse().ok()
                };
                if self.peek().tok == Tok::LParen {
                    if let Some(q) = order_of('d') {
                        if q == 0 {
                            return Err(Self::error_at(&t, "order must be at least 1"));
                        }
                        self.bump();
                        let mtok = self.peek().clone();
                        let m = self.monomial(ring.poly_ring())?;
                        if m.is_one() {
                            return Err(Self::error_at(&mtok, "d of a constant is not a generator"));
                        }
                        self.expect(Tok::RParen)?;
                        return Ok(GeneratorLabel::delta(ring, q, &m));
                    }
                    if name == "s" {
                        self.bump();
                        let a = self.label(ring)?;
                        self.expect(Tok::Comma)?;
                        let b = self.label(ring)?;
                        self.expect(Tok::RParen)?;
                        return Ok(GeneratorLabel::sym(a, b));
                    }
                    return Err(Self::error_at(&t, format!("unknown label constructor `{name}`")));
                }
                if self.peek().tok == Tok::LBrack {
                    if let Some(q) = order_of('D') {
                        if q == 0 {
                            return Err(Self::error_at(&t, "order must be at least 1"));
                        }
                        self.bump();
                        let inner = self.label(ring)?;
                        self.expect(Tok::RBrack)?;
                        self.expect(Tok::LParen)?;
                        let m = self.monomial(ring.poly_ring())?;
                        self.expect(Tok::RParen)?;
                        return Ok(GeneratorLabel::jet(ring, q, inner, &m));
                    }
                    return Err(Self::error_at(&t, format!("unknown label constructor `{name}`")));
                }
                Ok(GeneratorLabel::plain(name))
            }
            _ => Err(self.unexpected("a generator label")),
        }
    }
}

/// Ring statements plus, for presentation files, generators and relations.
struct Document {
    ring: RingSpec,
    generators: Option<Vec<GeneratorLabel>>,
    degrees: Option<(Vec<i64>, Token)>,
    relations: Option<(Vec<Vec<Poly>>, Token)>,
    end: Token,
}

fn parse_document(text: &str, allow_presentation: bool) -> PResult<Document> {
    let mut p = Parser::new(text)?;
    let mut vars: Option<(Vec<String>, Arc<PolyRing>)> = None;
    let mut weights: Option<(Vec<u32>, Token)> = None;
    let mut ideal: Option<Vec<Poly>> = None;
    let mut domain: Option<bool> = None;
    let mut ring: Option<RingSpec> = None;
    let mut generators = None;
    let mut degrees = None;
    let mut relations = None;

    loop {
        if p.peek().tok == Tok::Eof {
            break;
        }
        let (key, ktok) = p.ident("a statement keyword")?;
        p.expect(Tok::Eq)?;
        let dup = || Parser::error_at(&ktok, format!("duplicate `{key}` statement"));
        if vars.is_none() && key != "vars" {
            return Err(Parser::error_at(&ktok, "the first statement must be `vars = [...]`"));
        }
        let is_ring_key = matches!(key.as_str(), "vars" | "weights" | "ideal" | "assume_domain");
        if is_ring_key && ring.is_some() {
            return Err(Parser::error_at(
                &ktok,
                format!("`{key}` must come before the presentation statements"),
            ));
        }
        match key.as_str() {
            "vars" => {
                if vars.is_some() {
                    return Err(dup());
                }
                let mut names: Vec<String> = Vec::new();
                let toks = p.list(|p| p.ident("a variable name"))?;
                for (name, t) in toks {
                    if names.contains(&name) {
                        return Err(Parser::error_at(&t, format!("duplicate variable `{name}`")));
                    }
                    names.push(name);
                }
                if names.len() > 63 {
                    return Err(Parser::error_at(&ktok, "at most 63 variables are supported"));
                }
                let tmp = PolyRing::new(names.clone(), MonomialOrder::DegRevLex);
                vars = Some((names, tmp));
            }
            "weights" => {
                if weights.is_some() {
                    return Err(dup());
                }
                let ws = p.list(|p| {
                    let (n, t) = p.signed_int()?;
                    if !n.is_positive() {
                        return Err(Parser::error_at(&t, format!("weight {n} is not positive")));
                    }
                    n.to_u32()
                        .ok_or_else(|| Parser::error_at(&t, format!("weight {n} is too large")))
                })?;
                weights = Some((ws, ktok.clone()));
            }
            "ideal" => {
                if ideal.is_some() {
                    return Err(dup());
                }
                let tmp = vars.as_ref().unwrap().1.clone();
                ideal = Some(p.list(|p| p.expr(&tmp))?);
            }
            "assume_domain" => {
                if domain.is_some() {
                    return Err(dup());
                }
                let (v, t) = p.ident("`true` or `false`")?;
                domain = Some(match v.as_str() {
                    "true" => true,
                    "false" => false,
                    _ => return Err(Parser::error_at(&t, "expected `true` or `false`")),
                });
            }
            "generators" | "degrees" | "relations" if allow_presentation => {
                if ring.is_none() {
                    ring = Some(build_ring(&vars, &weights, &ideal, domain)?);
                }
                let r = ring.as_ref().unwrap();
                match key.as_str() {
                    "generators" => {
                        if generators.is_some() {
                            return Err(dup());
                        }
                        generators = Some(p.list(|p| p.label(r))?);
                    }
                    "degrees" => {
                        if degrees.is_some() {
                            return Err(dup());
                        }
                        let ds = p.list(|p| {
                            let (n, t) = p.signed_int()?;
                            n.to_i64()
                                .ok_or_else(|| Parser::error_at(&t, "degree out of range"))
                        })?;
                        degrees = Some((ds, ktok.clone()));
                    }
                    _ => {
                        if relations.is_some() {
                            return Err(dup());
                        }
                        let pr = r.poly_ring().clone();
                        let rows = p.list(|p| p.list(|p| p.expr(&pr)))?;
                        relations = Some((rows, ktok.clone()));
                    }
                }
            }
            _ => return Err(Parser::error_at(&ktok, format!("unknown statement `{key}`"))),
        }
        p.expect(Tok::Semi)?;
    }
    let end = p.peek().clone();
    if vars.is_none() {
        return Err(Parser::error_at(&end, "missing `vars = [...]` statement"));
    }
    let ring = match ring {
        Some(r) => r,
        None => build_ring(&vars, &weights, &ideal, domain)?,
    };
    Ok(Document {
        ring,
        generators,
        degrees,
        relations,
        end,
    })
}

fn build_ring(
    vars: &Option<(Vec<String>, Arc<PolyRing>)>,
    weights: &Option<(Vec<u32>, Token)>,
    ideal: &Option<Vec<Poly>>,
    domain: Option<bool>,
) -> PResult<RingSpec> {
    let (names, _) = vars.as_ref().expect("vars checked first");
    if let Some((ws, t)) = weights {
        if ws.len() != names.len() {
            return Err(Parser::error_at(
                t,
                format!("{} weights given for {} variables", ws.len(), names.len()),
            ));
        }
    }
    RingSpec::new(
        names.clone(),
        weights.as_ref().map(|(w, _)| w.clone()),
        ideal.clone().unwrap_or_default(),
        domain.unwrap_or(false),
    )
    .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Parses a ring file.
pub fn parse_ringspec(text: &str) -> PResult<RingSpec> {
    Ok(parse_document(text, false)?.ring)
}

/// Parses a polynomial over the variables of `ring`.
pub fn parse_poly(text: &str, ring: &RingSpec) -> PResult<Poly> {
    parse_poly_in(text, ring.poly_ring())
}

pub fn parse_poly_in(text: &str, ring: &Arc<PolyRing>) -> PResult<Poly> {
    let mut p = Parser::new(text)?;
    let out = p.expr(ring)?;
    p.expect_eof()?;
    Ok(out)
}

/// Parses a comma-separated list of monomials, e.g. `x^2, y^2, x*y`.
pub fn parse_monomial_list(text: &str, ring: &RingSpec) -> PResult<Vec<Monomial>> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    loop {
        out.push(p.monomial(ring.poly_ring())?);
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.expect_eof()?;
    Ok(out)
}

pub fn parse_label(text: &str, ring: &RingSpec) -> PResult<GeneratorLabel> {
    let mut p = Parser::new(text)?;
    let out = p.label(ring)?;
    p.expect_eof()?;
    Ok(out)
}

/// Parses a presentation file: ring statements followed by `generators`,
/// optional `degrees` and `relations`.
pub fn parse_presentation(text: &str) -> PResult<Presentation> {
    let doc = parse_document(text, true)?;
    let gens = doc.generators.unwrap_or_default();
    let n = gens.len();
    let degrees = match doc.degrees {
        Some((ds, t)) => {
            if ds.len() != n {
                return Err(Parser::error_at(
                    &t,
                    format!("{} degrees given for {n} generators", ds.len()),
                ));
            }
            Some(ds)
        }
        None => None,
    };
    let (rows, rtok) = doc.relations.unwrap_or((Vec::new(), doc.end.clone()));
    let mut vectors = Vec::with_capacity(rows.len());
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(Parser::error_at(
                &rtok,
                format!("relation {} has {} entries for {n} generators", i + 1, row.len()),
            ));
        }
        vectors.push(Vector::new(row));
    }
    Presentation::new(doc.ring, gens, degrees, vectors)
        .map_err(|e| Parser::error_at(&rtok, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> RingSpec {
        parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
    }

    #[test]
    fn ring_examples() {
        let r = parse_ringspec("vars=[x,y]; ideal=[y^2 - x^3];").unwrap();
        assert_eq!(r.ideal().len(), 1);
        assert!(!r.assume_domain());
        let p = parse_ringspec("vars=[x,y]; ideal=[];").unwrap();
        assert!(p.ideal().is_empty());
        assert_eq!(p.krull_dimension(), 2);
    }

    #[test]
    fn double_caret_is_a_syntax_error() {
        let e = parse_ringspec("vars=[x]; ideal=[x^^2];").unwrap_err();
        assert_eq!((e.line, e.column), (1, 19));
        assert!(e.message.contains("^^"), "{e}");
    }

    #[test]
    fn ring_errors() {
        let e = parse_ringspec("vars=[x,y];\nideal=[z];").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        assert!(e.message.contains("unknown variable"));
        let e = parse_ringspec("vars=[x,x]; ideal=[];").unwrap_err();
        assert!(e.message.contains("duplicate variable"));
        let e = parse_ringspec("vars=[x,y]; weights=[1,0]; ideal=[];").unwrap_err();
        assert!(e.message.contains("not positive"));
        let e = parse_ringspec("vars=[x,y]; weights=[1,-2]; ideal=[];").unwrap_err();
        assert!(e.message.contains("not positive"));
        assert!(parse_ringspec("ideal=[x];").is_err());
        assert!(parse_ringspec("").is_err());
        assert!(parse_ringspec("vars=[x]; generators=[d1(x)];").is_err());
    }

    #[test]
    fn polynomials() {
        let r = cusp();
        assert_eq!(parse_poly("2*y", &r).unwrap().to_string(), "2*y");
        let f = parse_poly("y^2-x^3", &r).unwrap();
        assert_eq!(&f, &r.ideal()[0]);
        assert_eq!(parse_poly("1/2*x*y", &r).unwrap().to_string(), "1/2*x*y");
        assert_eq!(parse_poly("(x+y)^2 - 2*x*y", &r).unwrap().to_string(), "y^2 + x^2");
        assert_eq!(parse_poly(" - - x ", &r).unwrap().to_string(), "x");
        assert_eq!(parse_poly("0", &r).unwrap().to_string(), "0");
        assert!(parse_poly("2x", &r).is_err());
        assert!(parse_poly("1/0", &r).is_err());
        assert!(parse_poly("x^y", &r).is_err());
        assert!(parse_poly("x^2^2", &r).is_err());
    }

    #[test]
    fn labels_round_trip() {
        let r = cusp();
        for text in ["d2(x^2)", "d1(x*y)", "D1[d1(x)](x*y)", "s(d1(x),d1(y))", "D2[1](1)", "g_1"] {
            let l = parse_label(text, &r).unwrap();
            assert_eq!(l.to_string(), text);
        }
        assert_eq!(
            parse_label("s(d1(y), d1(x))", &r).unwrap(),
            parse_label("s(d1(x),d1(y))", &r).unwrap()
        );
        assert_eq!(parse_label("d1(y*x)", &r).unwrap().to_string(), "d1(x*y)");
        assert!(parse_label("d0(x)", &r).is_err());
        assert!(parse_label("d1(2*x)", &r).is_err());
        assert!(parse_label("d1(1)", &r).is_err());
        assert!(parse_label("q(x)", &r).is_err());
    }

    #[test]
    fn monomial_lists() {
        let r = cusp();
        let ms = parse_monomial_list("x^2,y^2,x*y,x,y", &r).unwrap();
        assert_eq!(ms.len(), 5);
        assert_eq!(ms[2], Monomial::from_exponents(&[1, 1]));
    }

    #[test]
    fn comments_and_lines() {
        let r = parse_ringspec("# cusp\nvars = [x, y];  # plane\nideal = [y^2 - x^3];\n").unwrap();
        assert_eq!(r.nvars(), 2);
    }
}
