//! The box product `F ⊠ G`: generalized power series over an ordered
//! exponent group.
//!
//! A [`Series`] stores finitely many nonzero terms sorted by strictly
//! decreasing exponent, plus a [`Truncation`] contract. `Exact` means the
//! stored terms are the whole element. `Below(e)` means every term with
//! exponent `> e` is present and correct while nothing is claimed at or
//! below `e`.
//!
//! The decreasing enumeration of exponents is the canonical simple map, so
//! the sign of a series is the sign of its first coefficient. Raw
//! `(exponents, coefficients)` pairs in arbitrary order are handled by
//! [`SimplePresentation`] and [`index_of`].

mod arith;
mod coefficient;
mod display;
mod flatten;
mod functor;
mod presentation;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupElement};
use crate::Rational;

pub use arith::{
    leading, series_abs, series_add, series_cmp, series_inv, series_mul, series_neg, series_pow, series_scale,
    series_sign, series_sub, shift, truncate,
};
pub use coefficient::Coefficient;
pub use display::SeriesDisplay;
pub use flatten::{flatten, flatten_last, unflatten, unflatten_into};
pub use functor::{box_map, CoefficientMap};
pub use presentation::{from_presentation, index_of, validate_simple, SimplePresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl core::fmt::Display for Sign {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Sign::Negative => "Negative",
            Sign::Zero => "Zero",
            Sign::Positive => "Positive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truncation {
    Exact,
    /// Known for every exponent strictly greater than the bound.
    Below(GroupElement),
}

impl Truncation {
    pub fn bound(&self) -> Option<&GroupElement> {
        match self {
            Truncation::Exact => None,
            Truncation::Below(b) => Some(b),
        }
    }

    /// The less informative of two contracts.
    pub(crate) fn looser(&self, other: &Truncation) -> Truncation {
        match (self, other) {
            (Truncation::Exact, t) | (t, Truncation::Exact) => t.clone(),
            (Truncation::Below(a), Truncation::Below(b)) => Truncation::Below(a.max(b).clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exponent: GroupElement,
    pub coefficient: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    group: GroupDescriptor,
    terms: Vec<Term>,
    truncation: Truncation,
}

impl Series {
    pub fn zero(group: &GroupDescriptor) -> Self {
        Series {
            group: group.clone(),
            terms: Vec::new(),
            truncation: Truncation::Exact,
        }
    }

    pub fn one(group: &GroupDescriptor) -> Self {
        Series::constant(group, Rational::from_integer(1.into()))
    }

    pub fn constant(group: &GroupDescriptor, c: Rational) -> Self {
        Series::from_map(
            group.clone(),
            BTreeMap::from([(group.zero(), Coefficient::Rational(c))]),
            Truncation::Exact,
        )
    }

    pub fn monomial(
        group: &GroupDescriptor,
        exponent: GroupElement,
        coefficient: impl Into<Coefficient>,
    ) -> Result<Self> {
        Series::from_terms(group, [(exponent, coefficient.into())], Truncation::Exact)
    }

    /// `x^e` with coefficient one.
    pub fn power_of_x(group: &GroupDescriptor, exponent: GroupElement) -> Result<Self> {
        Series::monomial(group, exponent, Rational::from_integer(1.into()))
    }

    /// Truncated zero: nothing is known at or below `bound`.
    pub fn unknown_below(group: &GroupDescriptor, bound: GroupElement) -> Result<Self> {
        Series::from_terms(group, [], Truncation::Below(bound))
    }

    /// Builds a canonical series from terms in any order. Repeated exponents
    /// are summed; zero coefficients and terms at or below the truncation
    /// bound are dropped.
    pub fn from_terms(
        group: &GroupDescriptor,
        terms: impl IntoIterator<Item = (GroupElement, Coefficient)>,
        truncation: Truncation,
    ) -> Result<Self> {
        group.validate()?;
        if let Truncation::Below(b) = &truncation {
            if !group.contains(b) {
                return Err(Error::GroupMismatch);
            }
        }
        let mut map: BTreeMap<GroupElement, Coefficient> = BTreeMap::new();
        for (e, c) in terms {
            if !group.contains(&e) {
                return Err(Error::GroupMismatch);
            }
            accumulate(&mut map, e, c)?;
        }
        Ok(Series::from_map(group.clone(), map, truncation))
    }

    /// Canonicalizes a map whose keys are already known to lie in `group`.
    pub(crate) fn from_map(
        group: GroupDescriptor,
        map: BTreeMap<GroupElement, Coefficient>,
        truncation: Truncation,
    ) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(e, c)| !c.is_zero() && truncation.bound().is_none_or(|b| e > b))
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        Series {
            group,
            terms,
            truncation,
        }
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    /// Stored terms, largest exponent first.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn truncation(&self) -> &Truncation {
        &self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.truncation == Truncation::Exact
    }

    /// Exact zero. A truncated series without terms is not zero, only unknown.
    pub fn is_zero(&self) -> bool {
        self.is_exact() && self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Coefficient stored at `e`, if any.
    pub fn coefficient_at(&self, e: &GroupElement) -> Option<&Coefficient> {
        self.terms.iter().find(|t| &t.exponent == e).map(|t| &t.coefficient)
    }

    pub fn sign(&self) -> Result<Sign> {
        series_sign(self)
    }

    /// First `n` stored terms as an exact series.
    pub fn prefix(&self, n: usize) -> Series {
        Series {
            group: self.group.clone(),
            terms: self.terms.iter().take(n).cloned().collect(),
            truncation: Truncation::Exact,
        }
    }

    /// Whether every coefficient (recursively) is a rational.
    pub fn has_rational_coefficients(&self) -> bool {
        self.terms
            .iter()
            .all(|t| matches!(t.coefficient, Coefficient::Rational(_)))
    }

    /// Raw `(exponent, rational)` pairs of an exact series with rational
    /// coefficients; `None` otherwise.
    pub fn rational_terms(&self) -> Option<Vec<(GroupElement, Rational)>> {
        if !self.is_exact() {
            return None;
        }
        self.terms
            .iter()
            .map(|t| t.coefficient.as_rational().map(|q| (t.exponent.clone(), q.clone())))
            .collect()
    }

    /// The exponent group of nested coefficients, if any term carries one.
    pub fn coefficient_group(&self) -> Option<&GroupDescriptor> {
        self.terms.iter().find_map(|t| match &t.coefficient {
            Coefficient::Series(s) => Some(s.group()),
            Coefficient::Rational(_) => None,
        })
    }
}

pub(crate) fn accumulate(map: &mut BTreeMap<GroupElement, Coefficient>, e: GroupElement, c: Coefficient) -> Result<()> {
    use alloc::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().add(&c)?;
            *o.get_mut() = sum;
        }
    }
    Ok(())
}

impl PartialOrd for Series {
    /// `None` when the groups differ or the comparison is indeterminate.
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        series_cmp(self, other).ok()
    }
}
