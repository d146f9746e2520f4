//! Parser for the textual polynomial format emitted by `Display`:
//! terms separated by `+`/`-`, factors joined with `*`, powers with `^`,
//! e.g. `x1^2*y3 - 2*z1`. Round-trips exactly with `to_string`.

use super::{Coeff, Monomial, Polynomial, Ring, RingError};

#[derive(Debug, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(u64),
    Name(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>, RingError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| RingError::Parse("integer overflow".into()))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            other => {
                return Err(RingError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial, RingError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(RingError::Parse("empty input".into()));
    }
    let mut pairs: Vec<(Monomial, Coeff)> = Vec::new();
    let mut pos = 0usize;
    let mut sign_negative = false;
    // optional leading sign
    if tokens[pos] == Token::Minus {
        sign_negative = true;
        pos += 1;
    } else if tokens[pos] == Token::Plus {
        pos += 1;
    }
    loop {
        let (term, next) = parse_term(ring, &tokens, pos, sign_negative)?;
        pairs.push(term);
        pos = next;
        if pos == tokens.len() {
            break;
        }
        match tokens[pos] {
            Token::Plus => {
                sign_negative = false;
            }
            Token::Minus => {
                sign_negative = true;
            }
            _ => {
                return Err(RingError::Parse(format!(
                    "expected `+` or `-` between terms at token {pos}"
                )));
            }
        }
        pos += 1;
    }
    Ok(Polynomial::from_terms(ring, pairs))
}

fn parse_term(
    ring: &Ring,
    tokens: &[Token],
    mut pos: usize,
    negative: bool,
) -> Result<((Monomial, Coeff), usize), RingError> {
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u32; ring.num_vars()];
    loop {
        match tokens.get(pos) {
            Some(Token::Int(v)) => {
                let mut c = field.from_i64(i64::try_from(*v).map_err(|_| {
                    RingError::Parse("coefficient too large".into())
                })?);
                pos += 1;
                // optional rational a/b
                if tokens.get(pos) == Some(&Token::Slash) {
                    if let Some(Token::Int(d)) = tokens.get(pos + 1) {
                        let den = field.from_i64(i64::try_from(*d).map_err(|_| {
                            RingError::Parse("denominator too large".into())
                        })?);
                        c = field.div(&c, &den)?;
                        pos += 2;
                    } else {
                        return Err(RingError::Parse("expected denominator after `/`".into()));
                    }
                }
                coeff = field.mul(&coeff, &c);
            }
            Some(Token::Name(name)) => {
                let idx = ring.var_index(name)?;
                pos += 1;
                let mut e: u32 = 1;
                if tokens.get(pos) == Some(&Token::Caret) {
                    match tokens.get(pos + 1) {
                        Some(Token::Int(v)) => {
                            e = u32::try_from(*v)
                                .map_err(|_| RingError::Parse("exponent too large".into()))?;
                            pos += 2;
                        }
                        _ => {
                            return Err(RingError::Parse("expected exponent after `^`".into()));
                        }
                    }
                }
                exps[idx] += e;
            }
            _ => {
                return Err(RingError::Parse(format!(
                    "expected coefficient or variable at token {pos}"
                )));
            }
        }
        if tokens.get(pos) == Some(&Token::Star) {
            pos += 1;
            continue;
        }
        break;
    }
    if negative {
        coeff = field.neg(&coeff);
    }
    Ok(((Monomial::from_exps(exps), coeff), pos))
}

#[cfg(test)]
mod tests {
    use crate::ring::{CoefficientField, MonomialOrder, Ring};

    fn ring() -> Ring {
        Ring::new(
            vec!["x1", "y3", "z1"],
            MonomialOrder::Grevlex,
            CoefficientField::rationals(),
        )
        .unwrap()
    }

    #[test]
    fn documented_example() {
        let r = ring();
        let f = r.parse("x1^2*y3 - 2*z1").unwrap();
        assert_eq!(f.to_string(), "x1^2*y3 - 2*z1");
    }

    #[test]
    fn round_trip_assorted() {
        let r = ring();
        for s in [
            "0",
            "7",
            "-x1",
            "x1 + y3 + z1",
            "3*x1^4 - 1/2*y3*z1 + 1",
            "x1*y3*z1",
        ] {
            let f = r.parse(s).unwrap();
            assert_eq!(r.parse(&f.to_string()).unwrap(), f, "round trip of `{s}`");
        }
    }

    #[test]
    fn round_trip_prime_field() {
        let r = Ring::new(
            vec!["x1", "y3"],
            MonomialOrder::Grevlex,
            CoefficientField::prime(7).unwrap(),
        )
        .unwrap();
        let f = r.parse("5*x1 + 6*y3").unwrap();
        // 5 prints as -2, 6 as -1 under the symmetric representative
        let printed = f.to_string();
        assert_eq!(r.parse(&printed).unwrap(), f);
    }

    #[test]
    fn rejects_unknown_variable() {
        assert!(ring().parse("w + 1").is_err());
    }
}
