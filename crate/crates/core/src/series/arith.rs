use alloc::collections::BTreeMap;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::{accumulate, Coefficient, Series, Sign, Term, Truncation};
use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::Rational;

fn same_group(s: &Series, t: &Series) -> Result<()> {
    if s.group == t.group {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// Leading exponent and coefficient.
pub fn leading(s: &Series) -> Result<(GroupElement, Coefficient)> {
    s.leading_term()
        .map(|t| (t.exponent.clone(), t.coefficient.clone()))
        .ok_or(Error::ZeroOrUnknownLeading)
}

pub fn series_neg(s: &Series) -> Series {
    Series {
        group: s.group.clone(),
        terms: s
            .terms
            .iter()
            .map(|t| Term {
                exponent: t.exponent.clone(),
                coefficient: t.coefficient.neg(),
            })
            .collect(),
        truncation: s.truncation.clone(),
    }
}

pub fn series_scale(s: &Series, q: &Rational) -> Series {
    if num_traits::Zero::is_zero(q) {
        return Series {
            terms: alloc::vec::Vec::new(),
            ..s.clone()
        };
    }
    Series {
        group: s.group.clone(),
        terms: s
            .terms
            .iter()
            .map(|t| Term {
                exponent: t.exponent.clone(),
                coefficient: t.coefficient.scale(q),
            })
            .collect(),
        truncation: s.truncation.clone(),
    }
}

/// Termwise sum. The result keeps the less informative truncation.
pub fn series_add(s: &Series, t: &Series) -> Result<Series> {
    same_group(s, t)?;
    let mut map: BTreeMap<GroupElement, Coefficient> = BTreeMap::new();
    for term in s.terms.iter().chain(&t.terms) {
        accumulate(&mut map, term.exponent.clone(), term.coefficient.clone())?;
    }
    Ok(Series::from_map(
        s.group.clone(),
        map,
        s.truncation.looser(&t.truncation),
    ))
}

pub fn series_sub(s: &Series, t: &Series) -> Result<Series> {
    series_add(s, &series_neg(t))
}

/// Multiplies by `x^e`.
pub fn shift(s: &Series, e: &GroupElement) -> Result<Series> {
    if !s.group.contains(e) {
        return Err(Error::GroupMismatch);
    }
    let terms = s
        .terms
        .iter()
        .map(|t| {
            Ok(Term {
                exponent: t.exponent.try_add(e)?,
                coefficient: t.coefficient.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let truncation = match &s.truncation {
        Truncation::Exact => Truncation::Exact,
        Truncation::Below(b) => Truncation::Below(b.try_add(e)?),
    };
    Ok(Series {
        group: s.group.clone(),
        terms,
        truncation,
    })
}

/// Truncation contract of a product.
///
/// The unknown tail of a truncated factor lies at or below its bound, so
/// after multiplying by the other factor it lies at or below
/// `bound + leading exponent of the other factor`.
fn product_truncation(s: &Series, t: &Series) -> Result<Truncation> {
    let tail = |a: &Series, b: &Series| -> Result<Option<GroupElement>> {
        match &a.truncation {
            Truncation::Exact => Ok(None),
            Truncation::Below(bound) => {
                let lead = &b.leading_term().ok_or(Error::UnknownLeading)?.exponent;
                Ok(Some(bound.try_add(lead)?))
            }
        }
    };
    let bound = match (tail(s, t)?, tail(t, s)?) {
        (None, None) => return Ok(Truncation::Exact),
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) => a.max(b),
    };
    Ok(Truncation::Below(bound))
}

pub fn series_mul(s: &Series, t: &Series) -> Result<Series> {
    same_group(s, t)?;
    if s.is_zero() || t.is_zero() {
        return Ok(Series::zero(&s.group));
    }
    if s.terms.is_empty() || t.terms.is_empty() {
        return Err(Error::UnknownLeading);
    }
    let truncation = product_truncation(s, t)?;
    let bound = truncation.bound();
    let mut map: BTreeMap<GroupElement, Coefficient> = BTreeMap::new();
    for a in &s.terms {
        for b in &t.terms {
            let e = a.exponent.try_add(&b.exponent)?;
            // t is sorted decreasing, so the rest of this row is below the bound too
            if bound.is_some_and(|bd| &e <= bd) {
                break;
            }
            accumulate(&mut map, e, a.coefficient.mul(&b.coefficient)?)?;
        }
    }
    Ok(Series::from_map(s.group.clone(), map, truncation))
}

/// `s^n` for `n ≥ 0`.
pub fn series_pow(s: &Series, n: u32) -> Result<Series> {
    let mut acc = Series::one(&s.group);
    let mut base = s.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = series_mul(&acc, &base)?;
        }
        n >>= 1;
        if n > 0 {
            base = series_mul(&base, &base)?;
        }
    }
    Ok(acc)
}

/// Multiplicative inverse by the geometric series.
///
/// Writing `s = c·x^L·(1 + u)` where every exponent of `u` is negative, the
/// result is `c⁻¹·x^{-L}·Σ_{k=0}^{depth} (-u)^k`, truncated below
/// `-L + (depth + 1)·lead(u)` (and below the image of `s`'s own bound when
/// `s` is truncated). Exact when `u = 0` and `s` is exact.
pub fn series_inv(s: &Series, depth: usize) -> Result<Series> {
    let lead = s.leading_term().ok_or(Error::ZeroOrUnknownLeading)?;
    let neg_lead = lead.exponent.neg();
    let c_inv = lead.coefficient.inverse(depth)?;

    // -u = -(s - c·x^L)·c⁻¹·x^{-L}
    let mut neg_u = BTreeMap::new();
    for t in &s.terms[1..] {
        let e = t.exponent.try_add(&neg_lead)?;
        accumulate(&mut neg_u, e, t.coefficient.mul(&c_inv)?.neg())?;
    }
    let u_bound = match &s.truncation {
        Truncation::Exact => None,
        Truncation::Below(b) => Some(b.try_add(&neg_lead)?),
    };
    let neg_u = Series::from_map(s.group.clone(), neg_u, Truncation::Exact);

    let geometric_bound = neg_u
        .leading_term()
        .map(|t| t.exponent.times(&BigInt::from(depth as u64 + 1)));
    let rel_bound = match (geometric_bound, u_bound) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(a),
        (Some(a), Some(b)) => Some(a.max(b)),
    };

    let mut sum: BTreeMap<GroupElement, Coefficient> = BTreeMap::new();
    sum.insert(s.group.zero(), Coefficient::from(1));
    if let Some(bound) = &rel_bound {
        let mut power = Series::one(&s.group);
        for _ in 0..depth {
            power = series_mul(&power, &neg_u)?;
            // -u only lowers exponents, so terms at or below the bound never
            // feed back above it
            power.terms.retain(|t| &t.exponent > bound);
            if power.terms.is_empty() {
                break;
            }
            for t in &power.terms {
                accumulate(&mut sum, t.exponent.clone(), t.coefficient.clone())?;
            }
        }
    }
    let mut map = BTreeMap::new();
    for (e, c) in sum {
        accumulate(&mut map, e.try_add(&neg_lead)?, c.mul(&c_inv)?)?;
    }
    let truncation = match rel_bound {
        None => Truncation::Exact,
        Some(b) => Truncation::Below(b.try_add(&neg_lead)?),
    };
    Ok(Series::from_map(s.group.clone(), map, truncation))
}

/// Drops every term at or below `bound` and records the contract.
pub fn truncate(s: &Series, bound: &GroupElement) -> Result<Series> {
    if !s.group.contains(bound) {
        return Err(Error::GroupMismatch);
    }
    let truncation = s.truncation.looser(&Truncation::Below(bound.clone()));
    let b = truncation.bound().unwrap();
    let terms = s.terms.iter().filter(|t| &t.exponent > b).cloned().collect();
    Ok(Series {
        group: s.group.clone(),
        terms,
        truncation,
    })
}

/// Sign of the leading coefficient, recursing into nested coefficients.
pub fn series_sign(s: &Series) -> Result<Sign> {
    match s.leading_term() {
        Some(t) => t.coefficient.sign(),
        None if s.is_exact() => Ok(Sign::Zero),
        None => Err(Error::IndeterminateSign),
    }
}

pub fn series_abs(s: &Series) -> Result<Series> {
    Ok(match series_sign(s)? {
        Sign::Negative => series_neg(s),
        _ => s.clone(),
    })
}

/// Order comparison via the sign of `s - t`.
pub fn series_cmp(s: &Series, t: &Series) -> Result<Ordering> {
    let d = series_sub(s, t)?;
    match series_sign(&d) {
        Ok(Sign::Negative) => Ok(Ordering::Less),
        Ok(Sign::Zero) => Ok(Ordering::Equal),
        Ok(Sign::Positive) => Ok(Ordering::Greater),
        Err(Error::IndeterminateSign) => Err(Error::IndeterminateComparison),
        Err(e) => Err(e),
    }
}
