//! Text grammars for groups, fields, group elements and series.
//!
//! Groups: `Z`, `Q`, `1`, `lex(G1,...,Gn)`. Fields: `Q box G1 box ...`.
//! Elements: `-3`, `1/2`, `(1,-2)`. Series are arithmetic expressions in
//! `x` with `+ - * / ^`, parentheses and `O(x^e)`; whitespace is ignored.

use hahn_core::series::{series_add, series_inv, series_mul, series_neg, series_pow, series_sub};
use hahn_core::{FieldDescriptor, GroupDescriptor, GroupElement, Rational, Series};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{ParseError, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits = self.src[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.src[self.pos..self.pos + digits].parse().expect("ascii digits");
        self.pos += digits;
        Ok(n)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat('-');
        let n = self.natural()?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if !self.eat('/') {
            return Ok(Rational::from_integer(num));
        }
        let at = self.pos;
        let den = self.natural()?;
        if den.is_zero() {
            return Err(ParseError::new(at, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}

pub fn parse_group(text: &str) -> Result<GroupDescriptor, ParseError> {
    let mut c = Cursor::new(text);
    let g = group(&mut c)?;
    c.finish()?;
    Ok(g)
}

fn group(c: &mut Cursor<'_>) -> Result<GroupDescriptor, ParseError> {
    if c.eat_word("lex") {
        c.expect('(')?;
        let mut parts = vec![group(c)?];
        while c.eat(',') {
            parts.push(group(c)?);
        }
        c.expect(')')?;
        return Ok(GroupDescriptor::LexSum(parts));
    }
    if c.eat('Z') {
        Ok(GroupDescriptor::Integers)
    } else if c.eat('Q') {
        Ok(GroupDescriptor::Rationals)
    } else if c.eat('1') {
        Ok(GroupDescriptor::Trivial)
    } else {
        Err(c.error("expected a group: Z, Q, 1 or lex(...)"))
    }
}

/// `Q`, `Q box Z`, `Q box lex(Z,Z) box Q`, ...
pub fn parse_field(text: &str) -> Result<FieldDescriptor, ParseError> {
    let mut c = Cursor::new(text);
    if !c.eat('Q') {
        return Err(c.error("field must start with the base field Q"));
    }
    let mut chain = Vec::new();
    while c.eat_word("box") {
        chain.push(group(&mut c)?);
    }
    c.finish()?;
    FieldDescriptor::new(chain).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn parse_element(text: &str, g: &GroupDescriptor) -> Result<GroupElement, ParseError> {
    let mut c = Cursor::new(text);
    let e = element(&mut c, g)?;
    c.finish()?;
    Ok(e)
}

fn element(c: &mut Cursor<'_>, g: &GroupDescriptor) -> Result<GroupElement, ParseError> {
    match g {
        GroupDescriptor::Integers => Ok(GroupElement::Int(c.integer()?)),
        GroupDescriptor::Rationals => Ok(GroupElement::Rat(c.rational()?)),
        GroupDescriptor::Trivial => {
            let at = c.pos;
            if c.integer()?.is_zero() {
                Ok(GroupElement::Identity)
            } else {
                Err(ParseError::new(at, "the trivial group has only 0"))
            }
        }
        GroupDescriptor::LexSum(parts) => {
            c.expect('(')?;
            let mut coords = Vec::with_capacity(parts.len());
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    c.expect(',')?;
                }
                coords.push(element(c, p)?);
            }
            c.expect(')')?;
            Ok(GroupElement::Tuple(coords))
        }
    }
}

/// Exponent after `x^`: scalars may be parenthesized, tuples always are.
fn exponent(c: &mut Cursor<'_>, g: &GroupDescriptor) -> Result<GroupElement, ParseError> {
    if matches!(g, GroupDescriptor::LexSum(_)) || c.peek() != Some('(') {
        return element(c, g);
    }
    c.expect('(')?;
    let e = element(c, g)?;
    c.expect(')')?;
    Ok(e)
}

/// Parses a series over `group`; `depth` is passed to every inversion.
pub fn parse_series(text: &str, group: &GroupDescriptor, depth: usize) -> Result<Series> {
    let mut p = SeriesParser {
        c: Cursor::new(text),
        group,
        depth,
    };
    let s = p.expr()?;
    p.c.finish()?;
    Ok(s)
}

/// Parses over the level group of `field`, the single-variable view.
pub fn parse_series_in(text: &str, field: &FieldDescriptor, depth: usize) -> Result<Series> {
    parse_series(text, &hahn_core::levels::level_group(field), depth)
}

struct SeriesParser<'a> {
    c: Cursor<'a>,
    group: &'a GroupDescriptor,
    depth: usize,
}

impl SeriesParser<'_> {
    fn expr(&mut self) -> Result<Series> {
        let mut acc = self.term()?;
        loop {
            if self.c.eat('+') {
                acc = series_add(&acc, &self.term()?)?;
            } else if self.c.eat('-') {
                acc = series_sub(&acc, &self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Series> {
        let mut acc = self.unary()?;
        loop {
            if self.c.eat('*') {
                acc = series_mul(&acc, &self.unary()?)?;
            } else if self.c.eat('/') {
                self.c.skip_ws();
                let at = self.c.pos;
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(ParseError::new(at, "division by zero").into());
                }
                acc = series_mul(&acc, &series_inv(&d, self.depth)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Series> {
        if self.c.eat('-') {
            return Ok(series_neg(&self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Series> {
        if self.c.peek() == Some('x') {
            self.c.pos += 1;
            return Ok(Series::power_of_x(self.group, self.x_exponent()?)?);
        }
        let base = self.atom()?;
        if !self.c.eat('^') {
            return Ok(base);
        }
        self.c.skip_ws();
        let at = self.c.pos;
        let n = self.c.integer()?;
        let k: u32 = n
            .abs()
            .try_into()
            .map_err(|_| ParseError::new(at, "exponent too large"))?;
        if n.is_negative() {
            if base.is_zero() {
                return Err(ParseError::new(at, "division by zero").into());
            }
            Ok(series_pow(&series_inv(&base, self.depth)?, k)?)
        } else {
            Ok(series_pow(&base, k)?)
        }
    }

    /// The exponent of a bare `x`, which is `1` in `Z` and `Q`.
    fn x_exponent(&mut self) -> Result<GroupElement> {
        if self.c.eat('^') {
            return Ok(exponent(&mut self.c, self.group)?);
        }
        match self.group {
            GroupDescriptor::Integers => Ok(GroupElement::int(1)),
            GroupDescriptor::Rationals => Ok(GroupElement::rat(1, 1)),
            g => Err(self.c.error(format!("x needs an explicit exponent in {g}")).into()),
        }
    }

    fn atom(&mut self) -> Result<Series> {
        if self.c.eat('(') {
            let s = self.expr()?;
            self.c.expect(')')?;
            return Ok(s);
        }
        if self.c.eat('O') {
            self.c.expect('(')?;
            if !self.c.eat('x') {
                return Err(self.c.error("expected 'x'").into());
            }
            let e = self.x_exponent()?;
            self.c.expect(')')?;
            return Ok(Series::unknown_below(self.group, e)?);
        }
        match self.c.peek() {
            Some(d) if d.is_ascii_digit() => {
                let n = self.c.natural()?;
                Ok(Series::constant(self.group, Rational::from_integer(n)))
            }
            Some(ch) => Err(self.c.error(format!("unexpected '{ch}'")).into()),
            None => Err(self.c.error("unexpected end of input").into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use hahn_core::series::series_sign;
    use hahn_core::Sign;

    fn lex_zz() -> GroupDescriptor {
        GroupDescriptor::LexSum(vec![GroupDescriptor::Integers, GroupDescriptor::Integers])
    }

    #[test]
    fn groups_and_fields() {
        assert_eq!(
            parse_group("lex( Z, lex(Q,1) )").unwrap().to_string(),
            "lex(Z,lex(Q,1))"
        );
        assert!(parse_group("z").is_err());
        assert!(parse_group("lex()").is_err());
        let f = parse_field("Q box lex(Z,Z)").unwrap();
        assert_eq!(f.chain, vec![lex_zz()]);
        assert_eq!(parse_field("Q").unwrap().chain, vec![]);
        assert_eq!(parse_field("Q box Z box Z").unwrap().chain.len(), 2);
        assert_eq!(parse_field("Q box").unwrap_err().pos, 5);
    }

    #[test]
    fn elements() {
        assert_eq!(
            parse_element("(1,-2)", &lex_zz()).unwrap(),
            GroupElement::tuple(vec![GroupElement::int(1), GroupElement::int(-2)])
        );
        assert_eq!(
            parse_element("-3/6", &GroupDescriptor::Rationals).unwrap(),
            GroupElement::rat(-1, 2)
        );
        assert!(parse_element("1/2", &GroupDescriptor::Integers).is_err());
        assert!(parse_element("1/0", &GroupDescriptor::Rationals).is_err());
    }

    #[test]
    fn series_literals() {
        let z = GroupDescriptor::Integers;
        let s = parse_series("3*x^2-5*x+1", &z, 8).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "3*x^2 - 5*x + 1");
        let t = parse_series("x^(0,1)-x^(1,0)", &lex_zz(), 8).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(series_sign(&t).unwrap(), Sign::Positive);
        let q = parse_series("3*x^2 - 5*x^(1/2) + 1 + O(x^-3)", &GroupDescriptor::Rationals, 8).unwrap();
        assert_eq!(q.to_string(), "3*x^2 - 5*x^(1/2) + 1 + O(x^-3)");
        assert_eq!(parse_series("(x+1)^2", &z, 8).unwrap().to_string(), "x^2 + 2*x + 1");
        assert_eq!(
            parse_series("1/(1-x^-1)", &z, 3).unwrap().to_string(),
            "1 + x^-1 + x^-2 + x^-3 + O(x^-4)"
        );
        assert_eq!(parse_series("x^-1 / 2", &z, 3).unwrap().to_string(), "1/2*x^-1");
    }

    #[test]
    fn series_errors() {
        let z = GroupDescriptor::Integers;
        match parse_series("1/0*x", &z, 8) {
            Err(Error::Parse(e)) => assert_eq!(e.pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_series("3*", &z, 8), Err(Error::Parse(_))));
        assert!(matches!(parse_series("x + y", &z, 8), Err(Error::Parse(_))));
        assert!(matches!(parse_series("x", &lex_zz(), 8), Err(Error::Parse(_))));
        assert!(matches!(parse_series("1/O(x^0)", &z, 8), Err(Error::Domain(_))));
    }
}
