//! Text grammar for polynomials in `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 't' | '(' expr ')'
//! ```

use num_traits::Zero;

use super::poly::RatPoly;
use super::rat::{Int, Rat};
use super::ExactError;

pub fn parse_poly(input: &str) -> Result<RatPoly, ExactError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Semicolon-separated list, e.g. `"(t-1)*(t-2);-(t-3)"`.
pub fn parse_poly_list(input: &str) -> Result<Vec<RatPoly>, ExactError> {
    input.split(';').map(parse_poly).collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>, ExactError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            't' => Tok::Var,
            d if d.is_ascii_digit() => {
                let (n, next) = read_int(&chars, i);
                i = next;
                // A rational literal `p/q` binds tighter than any operator.
                let mut j = i;
                while j < chars.len() && chars[j].is_whitespace() {
                    j += 1;
                }
                let value = if j < chars.len() && chars[j] == '/' {
                    let mut k = j + 1;
                    while k < chars.len() && chars[k].is_whitespace() {
                        k += 1;
                    }
                    if k >= chars.len() || !chars[k].is_ascii_digit() {
                        return Err(ExactError::Parse {
                            pos: k,
                            msg: "expected denominator".into(),
                        });
                    }
                    let (d, next) = read_int(&chars, k);
                    if d.is_zero() {
                        return Err(ExactError::Parse {
                            pos: k,
                            msg: "zero denominator".into(),
                        });
                    }
                    i = next;
                    Rat::new(n, d)
                } else {
                    Rat::from_integer(n)
                };
                out.push((Tok::Num(value), start));
                continue;
            }
            other => {
                return Err(ExactError::Parse {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

fn read_int(chars: &[char], mut i: usize) -> (Int, usize) {
    let start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    let s: String = chars[start..i].iter().collect();
    (s.parse().expect("digits"), i)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn error(&self, msg: &str) -> ExactError {
        let pos = self
            .tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(usize::MAX);
        ExactError::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<RatPoly, ExactError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly, ExactError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatPoly, ExactError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatPoly, ExactError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) if e.is_integer() => {
                    self.pos += 1;
                    let k: u32 = e
                        .to_integer()
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    if k > 4096 {
                        return Err(self.error("exponent too large"));
                    }
                    Ok(base.pow(k))
                }
                _ => Err(self.error("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatPoly, ExactError> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(RatPoly::constant(r))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(RatPoly::t())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a number, 't' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, rat};

    #[test]
    fn parses_grammar() {
        let p = parse_poly("(t-1)*(t-2)*(t^2+1)").unwrap();
        assert_eq!(p, RatPoly::from_ints(&[2, -3, 3, -3, 1]));
        assert_eq!(parse_poly("-t^2").unwrap(), RatPoly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("7/2").unwrap(), RatPoly::constant(frac(7, 2)));
        assert_eq!(parse_poly("3/2*t").unwrap(), RatPoly::new(vec![rat(0), frac(3, 2)]));
        assert_eq!(parse_poly(" - 3 ").unwrap(), RatPoly::constant(rat(-3)));
        assert_eq!(parse_poly("(t)^0").unwrap(), RatPoly::one());
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "t+", "2t", "(t-1", "t^-1", "x", "1/0", "t^t"] {
            assert!(parse_poly(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["-1/2*t^3 + t - 7", "t^6 - 1", "0", "3/4"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn lists() {
        let v = parse_poly_list("(t-1)*(t-2);-(t-3)").unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[1], RatPoly::from_ints(&[3, -1]));
    }
}
