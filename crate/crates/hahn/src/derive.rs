//! Derivatives by infinitesimal evaluation: `f'(c)` is the coefficient of
//! `x^-1` in `f(c + x^-1)`.

use hahn_core::series::{series_add, series_inv, series_pow, series_scale};
use hahn_core::{GroupDescriptor, GroupElement, Rational, Series, Truncation};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// `f` must be an exact series over `Z` with rational coefficients, a
/// Laurent polynomial in `x`.
pub fn derivative_at(f: &Series, c: &Rational, depth: usize) -> Result<Rational> {
    let z = GroupDescriptor::Integers;
    if f.group() != &z {
        return Err(Error::Usage(format!(
            "derive works over Z exponents, not {}",
            f.group()
        )));
    }
    let terms = f.rational_terms().ok_or(hahn_core::Error::NotExact)?;
    let point = series_add(
        &Series::constant(&z, c.clone()),
        &Series::power_of_x(&z, GroupElement::int(-1))?,
    )?;
    let mut value = Series::zero(&z);
    for (e, a) in terms {
        let GroupElement::Int(k) = e else {
            unreachable!("exponents of a series over Z")
        };
        let n: u32 = k
            .abs()
            .try_into()
            .map_err(|_| Error::Usage(format!("exponent {k} too large")))?;
        let base = if k.is_negative() {
            series_inv(&point, depth.max(2))?
        } else {
            point.clone()
        };
        value = series_add(&value, &series_scale(&series_pow(&base, n)?, &a))?;
    }
    let minus_one = GroupElement::int(-1);
    if let Some(t) = value.leading_term() {
        if t.exponent > GroupElement::int(0) {
            return Err(Error::Undefined(format!("f is not finite at {c}")));
        }
    }
    if let Truncation::Below(b) = value.truncation() {
        if *b >= minus_one {
            return Err(Error::Undefined(String::from("inversion depth too small")));
        }
    }
    Ok(match value.coefficient_at(&minus_one) {
        Some(coef) => coef.as_rational().cloned().unwrap_or_else(Rational::zero),
        None => Rational::from_integer(BigInt::zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_series;

    fn d(f: &str, c: i64) -> Rational {
        let f = parse_series(f, &GroupDescriptor::Integers, 8).unwrap();
        derivative_at(&f, &Rational::from_integer(c.into()), 8).unwrap()
    }

    #[test]
    fn polynomials() {
        assert_eq!(d("x^3", 2), Rational::from_integer(12.into()));
        assert_eq!(d("3*x^2-5*x+1", 1), Rational::from_integer(1.into()));
        assert_eq!(d("7", 4), Rational::zero());
    }

    #[test]
    fn laurent_terms() {
        // d/dx x^-2 = -2/x^3
        assert_eq!(d("x^-2", 2), Rational::new((-1).into(), 4.into()));
        let f = parse_series("x^-1", &GroupDescriptor::Integers, 8).unwrap();
        assert!(matches!(
            derivative_at(&f, &Rational::zero(), 8),
            Err(Error::Undefined(_))
        ));
    }
}
