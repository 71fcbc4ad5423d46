//! Text format for polynomial systems.
//!
//! ```text
//! # a comment
//! vars: x y
//! x^2 + y^2 - 4
//! x*y - 1
//! 1/2*x - 1
//! ```
//!
//! The first non-comment line declares the variables; every following
//! line is one polynomial. A monomial is a coefficient (integer or a/b)
//! and variable powers; `*` and `^1` are optional.

use std::fmt;

use dyngb::{Coeff, Polynomial, Term};
use num_bigint::BigInt;
use num_traits::{One, Signed};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub polynomials: Vec<Polynomial>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut variables: Option<Vec<String>> = None;
    let mut polynomials = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        match &variables {
            None => {
                let trimmed = line.trim_start();
                let offset = line.len() - trimmed.len();
                let Some(rest) = trimmed.strip_prefix("vars:") else {
                    return err(line_no, offset + 1, "expected a `vars:` declaration first");
                };
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return err(line_no, offset + 6, "no variables declared");
                }
                for (i, a) in names.iter().enumerate() {
                    if names[..i].contains(a) {
                        return err(line_no, offset + 6, format!("duplicate variable {}", a));
                    }
                }
                variables = Some(names);
            }
            Some(vars) => {
                polynomials.push(parse_polynomial(line, vars, line_no)?);
            }
        }
    }
    let Some(variables) = variables else {
        return err(1, 1, "empty system: no `vars:` line");
    };
    if polynomials.is_empty() {
        return err(1, 1, "empty system: no polynomials");
    }
    Ok(SystemFile {
        variables,
        polynomials,
    })
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn identifier(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start || self.bytes[start].is_ascii_digit() {
            self.pos = start;
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).ok()
    }
}

fn parse_polynomial(
    line: &str,
    vars: &[String],
    line_no: usize,
) -> Result<Polynomial, ParseError> {
    let n = vars.len();
    let mut cur = Cursor {
        bytes: line.as_bytes(),
        pos: 0,
        line: line_no,
    };
    let mut poly = Polynomial::zero(n);
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        // sign
        let mut negative = false;
        match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
            }
            Some(b'-') => {
                negative = true;
                cur.pos += 1;
            }
            _ if first => {}
            _ => return err(cur.line, cur.col(), "expected `+` or `-` between monomials"),
        }
        first = false;
        let (coeff, term) = parse_monomial(&mut cur, vars)?;
        let coeff = if negative { -coeff } else { coeff };
        poly.add_monomial(&coeff, &term);
    }
    if first {
        return err(line_no, 1, "empty polynomial line");
    }
    Ok(poly)
}

fn parse_monomial(cur: &mut Cursor, vars: &[String]) -> Result<(Coeff, Term), ParseError> {
    let n = vars.len();
    cur.skip_ws();
    let mut coeff = Coeff::one();
    let mut exps = vec![0u32; n];
    let mut saw_factor = false;

    if cur.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
        let start_col = cur.col();
        let numer = cur
            .number()
            .ok_or(())
            .or_else(|_| err(cur.line, start_col, "malformed number"))?;
        let denom = if cur.peek() == Some(b'/') {
            cur.pos += 1;
            let dcol = cur.col();
            let d = cur
                .number()
                .ok_or(())
                .or_else(|_| err(cur.line, dcol, "malformed denominator"))?;
            if d == BigInt::from(0) {
                return err(cur.line, dcol, "zero denominator");
            }
            d
        } else {
            BigInt::one()
        };
        coeff = Coeff::new(numer, denom);
        saw_factor = true;
    }

    loop {
        cur.skip_ws();
        let mut consumed_star = false;
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
            cur.skip_ws();
            consumed_star = true;
        }
        let name_col = cur.col();
        let Some(name) = cur.identifier() else {
            if consumed_star {
                return err(cur.line, cur.col(), "expected a variable after `*`");
            }
            break;
        };
        let Some(idx) = vars.iter().position(|v| v == name) else {
            return err(cur.line, name_col, format!("unknown variable {}", name));
        };
        let mut exp = 1u32;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            let ecol = cur.col();
            let e = cur
                .number()
                .ok_or(())
                .or_else(|_| err(cur.line, ecol, "malformed exponent"))?;
            exp = match e.to_string().parse() {
                Ok(v) => v,
                Err(_) => return err(cur.line, ecol, "exponent out of range"),
            };
        }
        exps[idx] += exp;
        saw_factor = true;
    }

    if !saw_factor {
        return err(cur.line, cur.col(), "expected a monomial");
    }
    Ok((coeff, Term::new(exps)))
}

/// Renders in the same grammar `parse_system` reads.
pub fn render_system(sf: &SystemFile) -> String {
    let mut out = String::new();
    out.push_str("vars:");
    for v in &sf.variables {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for p in &sf.polynomials {
        out.push_str(&render_polynomial(p, &sf.variables));
        out.push('\n');
    }
    out
}

pub fn render_polynomial(p: &Polynomial, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (t, c)) in p.iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || t.is_one() {
            if a.denom().is_one() {
                factors.push(a.numer().to_string());
            } else {
                factors.push(format!("{}/{}", a.numer(), a.denom()));
            }
        }
        for (idx, &e) in t.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[idx].clone()),
                _ => factors.push(format!("{}^{}", vars[idx], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(nvars, terms.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    #[test]
    fn parses_the_circle_hyperbola_system() {
        let sf = parse_system("vars: x y\nx^2 + y^2 - 4\nx*y - 1\n").unwrap();
        assert_eq!(sf.variables, vec!["x", "y"]);
        assert_eq!(
            sf.polynomials,
            vec![
                p(2, &[(1, &[2, 0]), (1, &[0, 2]), (-4, &[0, 0])]),
                p(2, &[(1, &[1, 1]), (-1, &[0, 0])]),
            ]
        );
    }

    #[test]
    fn parses_rational_coefficients() {
        let sf = parse_system("vars: x\n1/2*x - 1\n").unwrap();
        let expected = Polynomial::from_terms(
            1,
            vec![
                (Coeff::new(1.into(), 2.into()), Term::new(vec![1])),
                (Coeff::new((-1).into(), 1.into()), Term::new(vec![0])),
            ],
        );
        assert_eq!(sf.polynomials, vec![expected]);
    }

    #[test]
    fn reports_unknown_variables_with_position() {
        let e = parse_system("vars: x\nz + 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.col, 1);
        assert!(e.message.contains("unknown variable z"));
    }

    #[test]
    fn reports_malformed_exponent() {
        let e = parse_system("vars: x\nx^ + 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("exponent"));
    }

    #[test]
    fn rejects_empty_systems() {
        assert!(parse_system("").is_err());
        assert!(parse_system("vars: x\n").is_err());
        assert!(parse_system("# only a comment\n").is_err());
    }

    #[test]
    fn implicit_multiplication_and_comments() {
        let sf = parse_system("# heading\nvars: x y\n2x^2y - 3 # trailing\n").unwrap();
        assert_eq!(sf.polynomials, vec![p(2, &[(2, &[2, 1]), (-3, &[0, 0])])]);
    }

    #[test]
    fn round_trips() {
        let sf = SystemFile {
            variables: vec!["x".into(), "y".into()],
            polynomials: vec![
                p(2, &[(1, &[2, 0]), (-3, &[1, 1]), (5, &[0, 0])]),
                Polynomial::from_terms(
                    2,
                    vec![(Coeff::new(7.into(), 3.into()), Term::new(vec![0, 2]))],
                ),
            ],
        };
        let text = render_system(&sf);
        assert_eq!(parse_system(&text).unwrap(), sf);
    }
}
