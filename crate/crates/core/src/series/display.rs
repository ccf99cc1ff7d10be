//! Text rendering, e.g. `3*x^2 - 5*x^(1/2) + 1 + O(x^-3)`.
//!
//! Nested coefficients are parenthesized and use the next variable name.

use core::fmt;

use num_traits::{One, Signed};

use super::{Coefficient, Series, Truncation};
use crate::groups::GroupElement;

const DEFAULT_VARS: [&str; 6] = ["x", "y", "z", "w", "v", "u"];

pub struct SeriesDisplay<'a> {
    series: &'a Series,
    vars: &'a [&'a str],
}

impl Series {
    /// Renders with `vars[0]` for this series and `vars[k]` for the
    /// coefficient series nested `k` levels deep.
    pub fn display_with<'a>(&'a self, vars: &'a [&'a str]) -> SeriesDisplay<'a> {
        SeriesDisplay { series: self, vars }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display_with(&DEFAULT_VARS), f)
    }
}

fn is_unit_exponent(e: &GroupElement) -> bool {
    match e {
        GroupElement::Int(v) => v.is_one(),
        GroupElement::Rat(v) => v.is_one(),
        _ => false,
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: &GroupElement) -> fmt::Result {
    if is_unit_exponent(e) {
        return f.write_str(var);
    }
    match e {
        GroupElement::Rat(q) if !q.is_integer() => write!(f, "{var}^({q})"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (var, rest) = match self.vars.split_first() {
            Some((v, rest)) if !rest.is_empty() => (*v, rest),
            Some((v, _)) => (*v, self.vars),
            None => ("x", &DEFAULT_VARS[1..]),
        };
        let s = self.series;
        if s.terms().is_empty() && s.is_exact() {
            return f.write_str("0");
        }
        for (i, t) in s.terms().iter().enumerate() {
            let unit_power = !t.exponent.is_zero();
            match &t.coefficient {
                Coefficient::Rational(q) => {
                    let negative = q.is_negative();
                    match (i, negative) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    let mag = q.abs();
                    if !unit_power {
                        write!(f, "{mag}")?;
                        continue;
                    }
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                }
                Coefficient::Series(inner) => {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({})", inner.display_with(rest))?;
                    if !unit_power {
                        continue;
                    }
                    f.write_str("*")?;
                }
            }
            write_power(f, var, &t.exponent)?;
        }
        if let Truncation::Below(b) = s.truncation() {
            if !s.terms().is_empty() {
                f.write_str(" + ")?;
            }
            f.write_str("O(")?;
            write_power(f, var, b)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}
