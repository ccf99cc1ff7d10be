use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Coefficient, Series, Truncation};
use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupElement};

/// A raw `(p, a)` pair: exponents in arbitrary order with one coefficient
/// each, zeros allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePresentation {
    pub exponents: Vec<GroupElement>,
    pub coefficients: Vec<Coefficient>,
}

impl SimplePresentation {
    pub fn new(exponents: Vec<GroupElement>, coefficients: Vec<Coefficient>) -> Result<Self> {
        if exponents.len() != coefficients.len() {
            return Err(Error::LengthMismatch);
        }
        Ok(SimplePresentation {
            exponents,
            coefficients,
        })
    }
}

/// A finite exponent list is simple iff it is injective; its image is
/// finite and therefore right-well-ordered.
pub fn validate_simple(p: &[GroupElement]) -> bool {
    let mut seen = BTreeSet::new();
    p.iter().all(|e| seen.insert(e))
}

/// Position of the largest exponent carrying a nonzero coefficient, or 0
/// when every coefficient is zero.
pub fn index_of(pres: &SimplePresentation) -> Result<usize> {
    if pres.exponents.len() != pres.coefficients.len() {
        return Err(Error::LengthMismatch);
    }
    if !validate_simple(&pres.exponents) {
        return Err(Error::NotSimple);
    }
    let mut best: Option<usize> = None;
    for (i, (e, c)) in pres.exponents.iter().zip(&pres.coefficients).enumerate() {
        if c.is_zero() {
            continue;
        }
        match best {
            Some(b) if e.try_cmp(&pres.exponents[b])?.is_le() => {}
            _ => best = Some(i),
        }
    }
    Ok(best.unwrap_or(0))
}

/// Canonical exact series of a presentation.
pub fn from_presentation(pres: &SimplePresentation, group: &GroupDescriptor) -> Result<Series> {
    if pres.exponents.len() != pres.coefficients.len() {
        return Err(Error::LengthMismatch);
    }
    if !validate_simple(&pres.exponents) {
        return Err(Error::NotSimple);
    }
    Series::from_terms(
        group,
        pres.exponents.iter().cloned().zip(pres.coefficients.iter().cloned()),
        Truncation::Exact,
    )
}
