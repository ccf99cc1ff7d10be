use alloc::boxed::Box;

use super::{Coefficient, Series, Truncation};
use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupMorphism};

/// An order-preserving field morphism acting on coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientMap {
    Identity,
    /// `Q → Q ⊠ G`, rationals to constant series.
    EmbedConstants(GroupDescriptor),
    /// `f ⊠ g` acting on nested series coefficients.
    Boxed(Box<CoefficientMap>, GroupMorphism),
    /// `outer ∘ inner`.
    Compose(Box<CoefficientMap>, Box<CoefficientMap>),
}

impl CoefficientMap {
    pub fn compose(&self, inner: &CoefficientMap) -> CoefficientMap {
        CoefficientMap::Compose(Box::new(self.clone()), Box::new(inner.clone()))
    }

    pub fn apply(&self, c: &Coefficient) -> Result<Coefficient> {
        match (self, c) {
            (CoefficientMap::Identity, c) => Ok(c.clone()),
            (CoefficientMap::EmbedConstants(g), Coefficient::Rational(q)) => Ok(Series::constant(g, q.clone()).into()),
            (CoefficientMap::EmbedConstants(_), Coefficient::Series(_)) => Err(Error::InvalidMorphism(
                "constant embedding expects a rational coefficient",
            )),
            (CoefficientMap::Boxed(f, g), Coefficient::Series(s)) => Ok(box_map(f, g, s)?.into()),
            // a rational next to nested coefficients is a constant, fixed by g
            (CoefficientMap::Boxed(f, _), c @ Coefficient::Rational(_)) => f.apply(c),
            (CoefficientMap::Compose(outer, inner), c) => outer.apply(&inner.apply(c)?),
        }
    }
}

/// `(f ⊠ g)(Σ aᵢ x^{eᵢ}) = Σ f(aᵢ) x^{g(eᵢ)}`.
pub fn box_map(field_map: &CoefficientMap, group_map: &GroupMorphism, s: &Series) -> Result<Series> {
    if &group_map.source() != s.group() {
        return Err(Error::GroupMismatch);
    }
    let terms = s
        .terms()
        .iter()
        .map(|t| Ok((group_map.apply(&t.exponent)?, field_map.apply(&t.coefficient)?)))
        .collect::<Result<alloc::vec::Vec<_>>>()?;
    let truncation = match s.truncation() {
        Truncation::Exact => Truncation::Exact,
        Truncation::Below(b) => Truncation::Below(group_map.apply(b)?),
    };
    Series::from_terms(&group_map.target(), terms, truncation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupDescriptor::*, GroupElement};
    use crate::series::Sign;

    fn z(terms: &[(i64, i64)]) -> Series {
        Series::from_terms(
            &Integers,
            terms.iter().map(|&(e, c)| (GroupElement::int(e), Coefficient::from(c))),
            Truncation::Exact,
        )
        .unwrap()
    }

    #[test]
    fn identity_is_noop() {
        let s = z(&[(3, 2), (0, -1)]);
        assert_eq!(
            box_map(&CoefficientMap::Identity, &GroupMorphism::identity(&Integers), &s).unwrap(),
            s
        );
    }

    #[test]
    fn inclusion() {
        let r = box_map(&CoefficientMap::Identity, &GroupMorphism::IntToRat, &z(&[(3, 2)])).unwrap();
        assert_eq!(r.group(), &Rationals);
        assert_eq!(r.terms()[0].exponent, GroupElement::rat(3, 1));
        assert_eq!(r.terms()[0].coefficient, Coefficient::from(2));
    }

    #[test]
    fn embedding_keeps_sign() {
        let s = z(&[(1, -3), (0, 5)]);
        let f = CoefficientMap::EmbedConstants(Rationals);
        let r = box_map(&f, &GroupMorphism::identity(&Integers), &s).unwrap();
        assert!(r.terms().iter().all(|t| t.coefficient.as_series().is_some()));
        assert_eq!(r.sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn source_mismatch() {
        assert_eq!(
            box_map(
                &CoefficientMap::Identity,
                &GroupMorphism::ScaleRat(crate::Rational::from_integer(1.into())),
                &z(&[(1, 1)])
            ),
            Err(Error::GroupMismatch)
        );
    }

    #[test]
    fn truncation_bound_is_mapped() {
        let s = Series::from_terms(
            &Integers,
            [(GroupElement::int(2), Coefficient::from(1))],
            Truncation::Below(GroupElement::int(-1)),
        )
        .unwrap();
        let g = GroupMorphism::scale_int(3.into()).unwrap();
        let r = box_map(&CoefficientMap::Identity, &g, &s).unwrap();
        assert_eq!(r.truncation(), &Truncation::Below(GroupElement::int(-3)));
        assert_eq!(r.terms()[0].exponent, GroupElement::int(6));
    }
}
