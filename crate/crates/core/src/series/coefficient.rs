use alloc::boxed::Box;

use num_traits::{Signed, Zero};

use super::{series_add, series_inv, series_mul, series_neg, series_scale, series_sign, Series, Sign};
use crate::error::{Error, Result};
use crate::Rational;

/// A coefficient of a series: an exact rational, or a series over another
/// exponent group (an element of `(Q ⊠ G) ⊠ H`).
///
/// A rational coefficient next to nested ones stands for the constant
/// series with that value; mixed arithmetic promotes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Rational(Rational),
    Series(Box<Series>),
}

impl From<Rational> for Coefficient {
    fn from(q: Rational) -> Self {
        Coefficient::Rational(q)
    }
}

impl From<Series> for Coefficient {
    fn from(s: Series) -> Self {
        Coefficient::Series(Box::new(s))
    }
}

impl From<i64> for Coefficient {
    fn from(v: i64) -> Self {
        Coefficient::Rational(Rational::from_integer(v.into()))
    }
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_zero(),
            Coefficient::Series(s) => s.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coefficient::Rational(q) => Some(q),
            Coefficient::Series(_) => None,
        }
    }

    pub fn as_series(&self) -> Option<&Series> {
        match self {
            Coefficient::Series(s) => Some(s),
            Coefficient::Rational(_) => None,
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(q) => Coefficient::Rational(-q),
            Coefficient::Series(s) => series_neg(s).into(),
        }
    }

    pub fn add(&self, other: &Coefficient) -> Result<Coefficient> {
        Ok(match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Series(a), Coefficient::Series(b)) => series_add(a, b)?.into(),
            (Coefficient::Rational(q), Coefficient::Series(s)) | (Coefficient::Series(s), Coefficient::Rational(q)) => {
                series_add(s, &Series::constant(s.group(), q.clone()))?.into()
            }
        })
    }

    pub fn mul(&self, other: &Coefficient) -> Result<Coefficient> {
        Ok(match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Series(a), Coefficient::Series(b)) => series_mul(a, b)?.into(),
            (Coefficient::Rational(q), Coefficient::Series(s)) | (Coefficient::Series(s), Coefficient::Rational(q)) => {
                series_scale(s, q).into()
            }
        })
    }

    pub fn scale(&self, q: &Rational) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a * q),
            Coefficient::Series(s) => series_scale(s, q).into(),
        }
    }

    pub fn sign(&self) -> Result<Sign> {
        match self {
            Coefficient::Rational(q) => Ok(if q.is_positive() {
                Sign::Positive
            } else if q.is_negative() {
                Sign::Negative
            } else {
                Sign::Zero
            }),
            Coefficient::Series(s) => series_sign(s),
        }
    }

    /// Multiplicative inverse; nested series are inverted to `depth`.
    pub fn inverse(&self, depth: usize) -> Result<Coefficient> {
        match self {
            Coefficient::Rational(q) if q.is_zero() => Err(Error::NonInvertibleCoefficient),
            Coefficient::Rational(q) => Ok(Coefficient::Rational(q.recip())),
            Coefficient::Series(s) => series_inv(s, depth).map(Coefficient::from).map_err(|e| match e {
                Error::ZeroOrUnknownLeading => Error::NonInvertibleCoefficient,
                other => other,
            }),
        }
    }

    /// The innermost leading rational: the coefficient that decides the sign.
    pub fn leading_rational(&self) -> Option<&Rational> {
        match self {
            Coefficient::Rational(q) => Some(q),
            Coefficient::Series(s) => s.leading_term()?.coefficient.leading_rational(),
        }
    }
}
