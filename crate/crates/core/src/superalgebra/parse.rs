//! Text form of polynomials: `terms joined by + / -`, each term a `*`-separated
//! product of rational literals (`p` or `p/q`) and generators with optional
//! `^k` exponents. Odd factors may come in any order; reordering contributes
//! its sign and a repeated odd factor kills the term.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::context::{Var, VariableContext};
use super::monomial::{sort_odd_sequence, SuperMonomial};
use super::poly::SuperPolynomial;
use super::Rational;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}

struct Term {
    coef: Rational,
    exps: Vec<u32>,
    odd: Vec<usize>,
    vanishes: bool,
}

fn parse_factor(cur: &mut Cursor<'_>, ctx: &VariableContext, term: &mut Term) -> Result<()> {
    cur.skip_ws();
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = cur.integer()?;
            let den = if cur.eat('/') {
                let d = cur.integer()?;
                if d.is_zero() {
                    return cur.err("zero denominator");
                }
                d
            } else {
                BigInt::one()
            };
            term.coef *= Rational::new(num, den);
        }
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            let start = cur.pos;
            let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            let var = match ctx.lookup(name) {
                Some(v) => v,
                None => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown variable `{name}`"),
                    })
                }
            };
            let k: u32 = if cur.eat('^') {
                let k = cur.integer()?;
                match u32::try_from(k) {
                    Ok(k) => k,
                    Err(_) => return cur.err("exponent too large"),
                }
            } else {
                1
            };
            match var {
                Var::Even(i) => term.exps[i] += k,
                Var::Odd(j) => match k {
                    0 => {}
                    1 => term.odd.push(j),
                    _ => term.vanishes = true,
                },
            }
        }
        Some(c) => return cur.err(format!("unexpected `{c}`")),
        None => return cur.err("unexpected end of input"),
    }
    Ok(())
}

pub(crate) fn parse_polynomial(ctx: &VariableContext, text: &str) -> Result<SuperPolynomial> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut out = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let mut term = Term {
            coef: Rational::one(),
            exps: vec![0; ctx.num_even()],
            odd: Vec::new(),
            vanishes: false,
        };
        parse_factor(&mut cur, ctx, &mut term)?;
        while cur.eat('*') {
            parse_factor(&mut cur, ctx, &mut term)?;
        }
        if !term.vanishes {
            if let Some((mask, flip)) = sort_odd_sequence(&term.odd) {
                let mut c = term.coef;
                if negative ^ flip {
                    c = -c;
                }
                out.push((SuperMonomial::new(term.exps, mask), c));
            }
        }
        cur.skip_ws();
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else if cur.peek().is_none() {
            break;
        } else {
            return cur.err("expected `+`, `-` or end of input");
        }
    }
    Ok(SuperPolynomial::from_terms(ctx, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        "even z w; odd t1 t2 t3".parse().unwrap()
    }

    #[test]
    fn rationals_are_exact() {
        let c = ctx();
        let p = SuperPolynomial::parse(&c, "1/3*z + 1/6*z").unwrap();
        assert_eq!(p, SuperPolynomial::parse(&c, "1/2*z").unwrap());
        let q = SuperPolynomial::parse(&c, "2/4").unwrap();
        assert_eq!(q.constant_term(), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn odd_reordering_and_vanishing() {
        let c = ctx();
        let a = SuperPolynomial::parse(&c, "t3*t1*t2").unwrap();
        let b = SuperPolynomial::parse(&c, "t1*t2*t3").unwrap();
        assert_eq!(a, b);
        let d = SuperPolynomial::parse(&c, "t2*t1*t3").unwrap();
        assert_eq!(d, -b);
        assert!(SuperPolynomial::parse(&c, "t1*z*t1").unwrap().is_zero());
        assert!(SuperPolynomial::parse(&c, "t1^2").unwrap().is_zero());
        assert_eq!(
            SuperPolynomial::parse(&c, "t1^0*z^0").unwrap(),
            SuperPolynomial::one(&c)
        );
    }

    #[test]
    fn coefficient_may_appear_anywhere() {
        let c = ctx();
        assert_eq!(
            SuperPolynomial::parse(&c, "z*3*w^2").unwrap(),
            SuperPolynomial::parse(&c, "3*z*w^2").unwrap()
        );
        assert_eq!(
            SuperPolynomial::parse(&c, " - z -  2*w +t1").unwrap().to_string(),
            "-1*z - 2*w + 1*t1"
        );
    }

    #[test]
    fn errors_carry_position() {
        let c = ctx();
        assert_eq!(
            SuperPolynomial::parse(&c, "z + q").unwrap_err(),
            Error::Parse {
                pos: 4,
                msg: "unknown variable `q`".into()
            }
        );
        assert!(SuperPolynomial::parse(&c, "z +").is_err());
        assert!(SuperPolynomial::parse(&c, "1/0").is_err());
        assert!(SuperPolynomial::parse(&c, "0.5*z").is_err());
        assert!(SuperPolynomial::parse(&c, "z w").is_err());
        assert!(SuperPolynomial::parse(&c, "").is_err());
    }
}
