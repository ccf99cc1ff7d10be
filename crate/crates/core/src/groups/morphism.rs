use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{GroupDescriptor, GroupElement};
use crate::error::{Error, Result};
use crate::Rational;

/// A strictly order-preserving homomorphism between structured groups,
/// given by a named structural rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupMorphism {
    Identity(GroupDescriptor),
    /// The inclusion `Z → Q`.
    IntToRat,
    /// `n ↦ k·n` on `Z`, `k > 0`.
    ScaleInt(BigInt),
    /// `q ↦ k·q` on `Q`, `k > 0`.
    ScaleRat(Rational),
    /// Componentwise action on a lex sum.
    Lex(Vec<GroupMorphism>),
    /// `outer ∘ inner`.
    Compose(Box<GroupMorphism>, Box<GroupMorphism>),
}

impl GroupMorphism {
    pub fn identity(g: &GroupDescriptor) -> Self {
        GroupMorphism::Identity(g.clone())
    }

    pub fn scale_int(k: BigInt) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidMorphism("scale factor must be positive"));
        }
        Ok(GroupMorphism::ScaleInt(k))
    }

    pub fn scale_rat(k: Rational) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidMorphism("scale factor must be positive"));
        }
        Ok(GroupMorphism::ScaleRat(k))
    }

    /// `self ∘ inner`; the target of `inner` must be the source of `self`.
    pub fn compose(&self, inner: &GroupMorphism) -> Result<Self> {
        if inner.target() != self.source() {
            return Err(Error::DescriptorMismatch);
        }
        Ok(GroupMorphism::Compose(Box::new(self.clone()), Box::new(inner.clone())))
    }

    pub fn source(&self) -> GroupDescriptor {
        match self {
            GroupMorphism::Identity(g) => g.clone(),
            GroupMorphism::IntToRat | GroupMorphism::ScaleInt(_) => GroupDescriptor::Integers,
            GroupMorphism::ScaleRat(_) => GroupDescriptor::Rationals,
            GroupMorphism::Lex(ms) => GroupDescriptor::LexSum(ms.iter().map(|m| m.source()).collect()),
            GroupMorphism::Compose(_, inner) => inner.source(),
        }
    }

    pub fn target(&self) -> GroupDescriptor {
        match self {
            GroupMorphism::Identity(g) => g.clone(),
            GroupMorphism::IntToRat | GroupMorphism::ScaleRat(_) => GroupDescriptor::Rationals,
            GroupMorphism::ScaleInt(_) => GroupDescriptor::Integers,
            GroupMorphism::Lex(ms) => GroupDescriptor::LexSum(ms.iter().map(|m| m.target()).collect()),
            GroupMorphism::Compose(outer, _) => outer.target(),
        }
    }

    pub fn apply(&self, e: &GroupElement) -> Result<GroupElement> {
        match (self, e) {
            (GroupMorphism::Identity(g), e) => {
                g.check(e)?;
                Ok(e.clone())
            }
            (GroupMorphism::IntToRat, GroupElement::Int(n)) => Ok(GroupElement::Rat(Rational::from_integer(n.clone()))),
            (GroupMorphism::ScaleInt(k), GroupElement::Int(n)) => Ok(GroupElement::Int(k * n)),
            (GroupMorphism::ScaleRat(k), GroupElement::Rat(q)) => Ok(GroupElement::Rat(k * q)),
            (GroupMorphism::Lex(ms), GroupElement::Tuple(xs)) => {
                if ms.len() != xs.len() {
                    return Err(Error::ArityMismatch {
                        expected: ms.len(),
                        found: xs.len(),
                    });
                }
                Ok(GroupElement::Tuple(
                    ms.iter().zip(xs).map(|(m, x)| m.apply(x)).collect::<Result<_>>()?,
                ))
            }
            (GroupMorphism::Compose(outer, inner), e) => outer.apply(&inner.apply(e)?),
            _ => Err(Error::DescriptorMismatch),
        }
    }
}

/// `⊞(I, f)`: the componentwise morphism of lex sums.
pub fn box_sum_map(morphisms: Vec<GroupMorphism>) -> Result<GroupMorphism> {
    if morphisms.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(GroupMorphism::Lex(morphisms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use GroupDescriptor::*;

    fn t(a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement::tuple([a, b])
    }

    #[test]
    fn identity_map() {
        let m = box_sum_map(vec![
            GroupMorphism::identity(&Integers),
            GroupMorphism::identity(&Integers),
        ])
        .unwrap();
        let x = t(GroupElement::int(3), GroupElement::int(-1));
        assert_eq!(m.apply(&x).unwrap(), x);
    }

    #[test]
    fn inclusion_map() {
        let m = box_sum_map(vec![GroupMorphism::IntToRat, GroupMorphism::identity(&Integers)]).unwrap();
        let x = t(GroupElement::int(2), GroupElement::int(5));
        assert_eq!(m.apply(&x).unwrap(), t(GroupElement::rat(2, 1), GroupElement::int(5)));
        assert_eq!(m.target(), LexSum(vec![Rationals, Integers]));
    }

    #[test]
    fn errors() {
        let m = box_sum_map(vec![GroupMorphism::IntToRat]).unwrap();
        assert_eq!(
            m.apply(&t(GroupElement::int(1), GroupElement::int(1))),
            Err(Error::ArityMismatch { expected: 1, found: 2 })
        );
        assert_eq!(
            GroupMorphism::IntToRat.apply(&GroupElement::rat(1, 2)),
            Err(Error::DescriptorMismatch)
        );
        assert!(GroupMorphism::scale_int(BigInt::from(0)).is_err());
        assert!(GroupMorphism::IntToRat.compose(&GroupMorphism::IntToRat).is_err());
        assert_eq!(box_sum_map(vec![]), Err(Error::EmptyList));
    }

    #[test]
    fn composition() {
        let g = GroupMorphism::scale_int(BigInt::from(3)).unwrap();
        let f = GroupMorphism::IntToRat;
        let h = f.compose(&g).unwrap();
        assert_eq!(h.source(), Integers);
        assert_eq!(h.target(), Rationals);
        assert_eq!(h.apply(&GroupElement::int(2)).unwrap(), GroupElement::rat(6, 1));
    }
}
