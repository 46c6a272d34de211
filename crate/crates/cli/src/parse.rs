//! Text formats: ideals (`x^3, x^2*y, y^2`) and edge-sequence data (`i j a b` lines).

use std::collections::BTreeSet;
use std::fmt;

use cmtrace::{AmbientRing, EdgeSequenceData, Monomial, MonomialIdeal};

/// A syntax or validation error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Lexer {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        let mut chars = Vec::new();
        for (l, line) in src.lines().enumerate() {
            for (c, ch) in line.chars().enumerate() {
                chars.push((l + 1, c + 1, ch));
            }
            chars.push((l + 1, line.chars().count() + 1, '\n'));
        }
        Lexer { chars, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].2.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.2)
    }

    fn here(&self) -> (usize, usize) {
        match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => self.chars.last().map_or((1, 1), |&(l, c, _)| (l, c + 1)),
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.here();
        ParseError { line, column, message: message.into() }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(&(_, _, ch)) = self.chars.get(self.pos) {
            if !f(ch) {
                break;
            }
            s.push(ch);
            self.pos += 1;
        }
        s
    }
}

enum Term {
    Zero,
    Monomial(Vec<(String, u32, (usize, usize))>),
}

fn parse_monomial(lx: &mut Lexer) -> Result<Term, ParseError> {
    let mut factors = Vec::new();
    loop {
        let Some(ch) = lx.peek() else {
            return Err(lx.err("expected a variable or monomial, found end of input"));
        };
        let at = lx.here();
        if ch.is_ascii_digit() {
            let digits = lx.take_while(|c| c.is_ascii_digit());
            match digits.as_str() {
                "1" => {}
                "0" if factors.is_empty() && !matches!(lx.peek(), Some('*')) => return Ok(Term::Zero),
                _ => {
                    return Err(ParseError {
                        line: at.0,
                        column: at.1,
                        message: format!("coefficient `{digits}` is not allowed; monomials are monic"),
                    })
                }
            }
        } else if ch.is_alphabetic() {
            let name = lx.take_while(|c| c.is_alphanumeric() || c == '_');
            let mut exp = 1;
            if lx.eat('^') {
                let at_exp = lx.here();
                if lx.peek() == Some('-') {
                    return Err(lx.err("negative exponent"));
                }
                let digits = lx.take_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return Err(lx.err("expected an exponent after `^`"));
                }
                exp = digits.parse().map_err(|_| ParseError {
                    line: at_exp.0,
                    column: at_exp.1,
                    message: format!("exponent `{digits}` is too large"),
                })?;
            }
            factors.push((name, exp, at));
        } else {
            return Err(lx.err(format!("unexpected character `{ch}`")));
        }
        if !lx.eat('*') {
            return Ok(Term::Monomial(factors));
        }
    }
}

/// Parses a comma-separated list of monomials, optionally wrapped in
/// parentheses. Without `vars` the variables are collected in order of first
/// appearance; with `vars` unknown names are rejected. `0` denotes the zero
/// ideal and `1` the unit ideal.
pub fn parse_ideal(text: &str, vars: Option<&AmbientRing>) -> Result<MonomialIdeal, ParseError> {
    let mut lx = Lexer::new(text);
    let paren = lx.eat('(');
    let mut terms = Vec::new();
    loop {
        terms.push(parse_monomial(&mut lx)?);
        if !lx.eat(',') {
            break;
        }
    }
    if paren && !lx.eat(')') {
        return Err(lx.err("expected `)`"));
    }
    if let Some(ch) = lx.peek() {
        return Err(lx.err(format!("unexpected `{ch}` after the ideal")));
    }

    let mut names: Vec<String> = vars.map(|r| r.names().to_vec()).unwrap_or_default();
    let mut monos: Vec<Vec<(usize, u32)>> = Vec::new();
    for term in &terms {
        let Term::Monomial(factors) = term else { continue };
        let mut m = Vec::new();
        for (name, exp, (line, column)) in factors {
            let idx = match names.iter().position(|n| n == name) {
                Some(i) => i,
                None if vars.is_some() => {
                    return Err(ParseError {
                        line: *line,
                        column: *column,
                        message: format!("unknown variable `{name}`"),
                    })
                }
                None => {
                    names.push(name.clone());
                    names.len() - 1
                }
            };
            m.push((idx, *exp));
        }
        monos.push(m);
    }
    if names.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "no variables appear; declare them with --vars".into() });
    }
    let ring =
        AmbientRing::new(names.clone()).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })?;
    let n = ring.len();
    let gens = monos
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for (i, k) in factors {
                e[i] = e[i].saturating_add(k);
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(&ring, gens).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
}

/// Parses a comma-separated variable list such as `x,y,z`.
pub fn parse_vars(text: &str) -> Result<AmbientRing, ParseError> {
    let names: Vec<&str> = text.split(',').map(str::trim).collect();
    for (k, n) in names.iter().enumerate() {
        let mut chars = n.chars();
        let ok = chars.next().is_some_and(char::is_alphabetic) && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(ParseError { line: 1, column: k + 1, message: format!("invalid variable name `{n}`") });
        }
    }
    AmbientRing::new(names).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
}

/// Parses edge-sequence data, one edge per line as `i j a b` with 1-based
/// vertex indices. Blank lines and `#` comments are ignored. Vertices are
/// `x1..xn` with `n` the largest index used, unless `vars` names them.
pub fn parse_graph_spec(text: &str, vars: Option<&AmbientRing>) -> Result<EdgeSequenceData, ParseError> {
    let mut edges = Vec::new();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let mut seen = BTreeSet::new();
    let mut max_vertex = 0;
    for (l, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let err = |column: usize, message: String| ParseError { line: l + 1, column, message };
        let mut fields = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            col += line[col..].find(tok).unwrap_or(0);
            fields.push((col + 1, tok));
            col += tok.len();
        }
        if fields.len() != 4 {
            return Err(err(1, format!("expected `i j a b`, found {} fields", fields.len())));
        }
        let mut vals = [0i64; 4];
        for (k, &(column, tok)) in fields.iter().enumerate() {
            vals[k] = tok.parse().map_err(|_| err(column, format!("`{tok}` is not an integer")))?;
        }
        let [i, j, ai, bi] = vals;
        for (k, v) in vals.iter().enumerate() {
            if *v <= 0 {
                let what = ["vertex index", "vertex index", "a", "b"][k];
                return Err(err(fields[k].0, format!("{what} must be positive, got {v}")));
            }
        }
        if i == j {
            return Err(err(fields[1].0, format!("loop at vertex {i}")));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(err(fields[0].0, format!("duplicate edge {{{i}, {j}}}")));
        }
        let too_big = |column: usize| err(column, "value out of range".into());
        let (iu, ju) = (
            usize::try_from(i - 1).map_err(|_| too_big(fields[0].0))?,
            usize::try_from(j - 1).map_err(|_| too_big(fields[1].0))?,
        );
        max_vertex = max_vertex.max(iu + 1).max(ju + 1);
        edges.push((iu, ju));
        a.push(u32::try_from(ai).map_err(|_| too_big(fields[2].0))?);
        b.push(u32::try_from(bi).map_err(|_| too_big(fields[3].0))?);
    }
    if edges.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "no edges given".into() });
    }
    let ring = match vars {
        Some(r) if r.len() < max_vertex => {
            return Err(ParseError {
                line: 1,
                column: 1,
                message: format!("{} variables declared but vertex {max_vertex} is used", r.len()),
            })
        }
        Some(r) => r.clone(),
        None => AmbientRing::indexed("x", max_vertex).map_err(|e| ParseError {
            line: 1,
            column: 1,
            message: e.to_string(),
        })?,
    };
    EdgeSequenceData::new(ring, edges, a, b).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(i: &MonomialIdeal) -> Vec<String> {
        i.generator_strings()
    }

    #[test]
    fn ideal_examples() {
        let i = parse_ideal("x^3, x^2*y, y^2", None).unwrap();
        assert_eq!(i.ring().names(), &["x", "y"]);
        assert_eq!(gens(&i), ["y^2", "x^3", "x^2*y"]);
        let e = parse_ideal("x1*x3, x1*x4, x2*x4", None).unwrap();
        assert_eq!(e.ring().names(), &["x1", "x3", "x4", "x2"]);
        assert_eq!(e.num_gens(), 3);
        assert_eq!(gens(&parse_ideal("x^2, x^2", None).unwrap()), ["x^2"]);
    }

    #[test]
    fn parens_whitespace_and_special_ideals() {
        let r = parse_vars("x,y").unwrap();
        assert_eq!(parse_ideal(" ( x ^ 2 ,\n y ) ", None).unwrap(), parse_ideal("x^2,y", None).unwrap());
        assert!(parse_ideal("0", Some(&r)).unwrap().is_zero());
        assert!(parse_ideal("(1)", Some(&r)).unwrap().is_unit());
        assert!(parse_ideal("x, 1", Some(&r)).unwrap().is_unit());
        assert!(parse_ideal("0", None).is_err());
        assert_eq!(gens(&parse_ideal("x*x*y^0", None).unwrap()), ["x^2"]);
    }

    #[test]
    fn round_trip_under_declared_variables() {
        let r = parse_vars("x1,x2,x3,x4").unwrap();
        let i = parse_ideal("x1*x3, x1*x4, x2*x4", Some(&r)).unwrap();
        assert_eq!(parse_ideal(&i.to_string(), Some(&r)).unwrap(), i);
    }

    #[test]
    fn ideal_errors_carry_positions() {
        let e = parse_ideal("x^2,\n y^-1", None).unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        assert!(e.message.contains("negative"));
        let r = parse_vars("x,y").unwrap();
        let e = parse_ideal("x, z^2", Some(&r)).unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(e.message.contains("unknown variable"));
        assert!(parse_ideal("x,", None).is_err());
        assert!(parse_ideal("(x, y", None).is_err());
        assert!(parse_ideal("2*x", None).is_err());
        assert!(parse_ideal("x y", None).is_err());
        assert!(parse_vars("x,1y").is_err());
    }

    #[test]
    fn graph_spec_examples() {
        let d = parse_graph_spec("1 2 1 1\n2 3 1 1", None).unwrap();
        assert_eq!(d.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(d.graph().vertices().names(), &["x1", "x2", "x3"]);
        let d = parse_graph_spec("1 2 2 1", None).unwrap();
        assert_eq!((d.a(), d.b()), (&[2][..], &[1][..]));
        let e = parse_graph_spec("1 2 1 1\n1 2 2 2", None).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("duplicate"));
        assert!(parse_graph_spec("2 1 1 1\n1 2 1 1", None).is_err());
        let e = parse_graph_spec("# comment\n1 2 0 1", None).unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert!(parse_graph_spec("1 2 1", None).is_err());
        assert!(parse_graph_spec("", None).is_err());
    }
}
