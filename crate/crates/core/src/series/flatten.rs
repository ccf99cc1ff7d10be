//! The identification `x^{(a, b)} ↦ y^a z^b` realizing
//! `F ⊠ (G ⊞ H) ≅ (F ⊠ G) ⊠ H`.
//!
//! Terms are grouped by the dominant coordinate `b`; each group becomes a
//! coefficient series in `y`. Because `b` dominates the lex order, the
//! leading term of the flattened series carries the original leading term
//! inside its coefficient, so signs agree.
//!
//! On exact series the two maps are mutually inverse. A truncated input
//! `Below((a₀, b₀))` flattens to `Below(b₀)`; the partially known slice at
//! `b₀` is dropped since a `z`-level contract cannot describe it.

use alloc::collections::BTreeMap;

use super::{accumulate, Coefficient, Series, Truncation};
use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupElement};

/// Flattens a series over `lex(G, H)`.
pub fn flatten(s: &Series) -> Result<Series> {
    match s.group() {
        GroupDescriptor::LexSum(cs) if cs.len() == 2 => flatten_last(s),
        _ => Err(Error::NotLexSumGroup),
    }
}

/// Flattens along the last coordinate of `lex(G₀, …, Gₙ₋₁)`, `n ≥ 2`:
/// the result lives over `Gₙ₋₁` with coefficients over the head group
/// (`G₀` when `n = 2`, `lex(G₀, …, Gₙ₋₂)` otherwise).
pub fn flatten_last(s: &Series) -> Result<Series> {
    let (head, last) = s.group().split_last().ok_or(Error::NotLexSumGroup)?;
    let mut slices: BTreeMap<GroupElement, BTreeMap<GroupElement, Coefficient>> = BTreeMap::new();
    for t in s.terms() {
        let (h, l) = t.exponent.split_last().ok_or(Error::DescriptorMismatch)?;
        accumulate(slices.entry(l).or_default(), h, t.coefficient.clone())?;
    }
    let truncation = match s.truncation() {
        Truncation::Exact => Truncation::Exact,
        Truncation::Below(b) => Truncation::Below(b.split_last().ok_or(Error::DescriptorMismatch)?.1),
    };
    let outer = slices
        .into_iter()
        .map(|(l, inner)| {
            (
                l,
                Coefficient::from(Series::from_map(head.clone(), inner, Truncation::Exact)),
            )
        })
        .collect();
    Ok(Series::from_map(last, outer, truncation))
}

/// Inverse of [`flatten`]: `t` lives over `H` with coefficients over `inner`.
pub fn unflatten(t: &Series, inner: &GroupDescriptor) -> Result<Series> {
    let target = GroupDescriptor::LexSum(alloc::vec![inner.clone(), t.group().clone()]);
    unflatten_into(t, &target)
}

/// Inverse of [`flatten_last`] for the given lex target group.
///
/// The outer series must be exact. A truncated coefficient at `z^b` with
/// bound `a₀` turns into the bound `(a₀, b)` of the result.
pub fn unflatten_into(t: &Series, target: &GroupDescriptor) -> Result<Series> {
    let (head, last) = target.split_last().ok_or(Error::NotLexSumGroup)?;
    let arity = match target {
        GroupDescriptor::LexSum(cs) => cs.len(),
        _ => unreachable!(),
    };
    if t.group() != &last {
        return Err(Error::GroupMismatch);
    }
    if !t.is_exact() {
        return Err(Error::NotExact);
    }
    let mut terms = alloc::vec::Vec::new();
    let mut bound: Option<GroupElement> = None;
    for term in t.terms() {
        let inner = match &term.coefficient {
            Coefficient::Series(s) => (**s).clone(),
            Coefficient::Rational(q) => Series::constant(&head, q.clone()),
        };
        if inner.group() != &head {
            return Err(Error::GroupMismatch);
        }
        if let Truncation::Below(b) = inner.truncation() {
            let joined = GroupElement::join_last(b.clone(), term.exponent.clone(), arity)?;
            // terms are visited from the top, so the first truncated slice wins
            bound.get_or_insert(joined);
        }
        for it in inner.terms() {
            let e = GroupElement::join_last(it.exponent.clone(), term.exponent.clone(), arity)?;
            terms.push((e, it.coefficient.clone()));
        }
    }
    let truncation = bound.map_or(Truncation::Exact, Truncation::Below);
    Series::from_terms(target, terms, truncation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupDescriptor::*;
    use crate::series::{series_sign, Sign};
    use alloc::vec;

    fn zz() -> GroupDescriptor {
        LexSum(vec![Integers, Integers])
    }

    fn t2(a: i64, b: i64) -> GroupElement {
        GroupElement::tuple([GroupElement::int(a), GroupElement::int(b)])
    }

    fn lexz(terms: &[((i64, i64), i64)]) -> Series {
        Series::from_terms(
            &zz(),
            terms.iter().map(|&((a, b), c)| (t2(a, b), Coefficient::from(c))),
            Truncation::Exact,
        )
        .unwrap()
    }

    #[test]
    fn identification_example() {
        let s = lexz(&[((1, 0), 1), ((0, 1), 1)]);
        let f = flatten(&s).unwrap();
        assert_eq!(f.group(), &Integers);
        assert_eq!(f.len(), 2);
        let lead = &f.terms()[0];
        assert_eq!(lead.exponent, GroupElement::int(1));
        assert_eq!(
            lead.coefficient,
            Coefficient::from(Series::power_of_x(&Integers, GroupElement::int(0)).unwrap())
        );
        let low = &f.terms()[1];
        assert_eq!(low.exponent, GroupElement::int(0));
        assert_eq!(
            low.coefficient,
            Coefficient::from(Series::power_of_x(&Integers, GroupElement::int(1)).unwrap())
        );
        assert_eq!(unflatten(&f, &Integers).unwrap(), s);
    }

    #[test]
    fn zero_and_errors() {
        let z = Series::zero(&zz());
        let f = flatten(&z).unwrap();
        assert!(f.is_zero());
        assert_eq!(unflatten(&f, &Integers).unwrap(), z);
        assert_eq!(flatten(&Series::zero(&Integers)), Err(Error::NotLexSumGroup));
        let three = LexSum(vec![Integers, Integers, Integers]);
        assert_eq!(flatten(&Series::zero(&three)), Err(Error::NotLexSumGroup));
    }

    #[test]
    fn sign_survives() {
        let s = lexz(&[((5, 0), 100), ((-7, 1), -1), ((3, -2), 4)]);
        assert_eq!(series_sign(&s).unwrap(), Sign::Negative);
        assert_eq!(series_sign(&flatten(&s).unwrap()).unwrap(), Sign::Negative);
    }

    #[test]
    fn three_component_round_trip() {
        let g = LexSum(vec![Integers, Rationals, Integers]);
        let e =
            |a, (n, d), c| GroupElement::tuple([GroupElement::int(a), GroupElement::rat(n, d), GroupElement::int(c)]);
        let s = Series::from_terms(
            &g,
            [
                (e(1, (1, 2), 0), Coefficient::from(3)),
                (e(0, (0, 1), 1), Coefficient::from(-1)),
                (e(2, (1, 2), 0), Coefficient::from(1)),
            ],
            Truncation::Exact,
        )
        .unwrap();
        let f = flatten_last(&s).unwrap();
        assert_eq!(f.group(), &Integers);
        assert_eq!(f.coefficient_group(), Some(&LexSum(vec![Integers, Rationals])));
        assert_eq!(unflatten_into(&f, &g).unwrap(), s);
    }

    #[test]
    fn truncated_inputs() {
        let s = Series::from_terms(
            &zz(),
            [
                (t2(0, 2), Coefficient::from(1)),
                (t2(5, 0), Coefficient::from(1)),
                (t2(3, 0), Coefficient::from(2)),
            ],
            Truncation::Below(t2(1, 0)),
        )
        .unwrap();
        let f = flatten(&s).unwrap();
        // the slice at z^0 is only partially known and is dropped
        assert_eq!(f.truncation(), &Truncation::Below(GroupElement::int(0)));
        assert_eq!(f.len(), 1);
        assert_eq!(unflatten(&f, &Integers), Err(Error::NotExact));

        let inner = Series::from_terms(
            &Integers,
            [(GroupElement::int(4), Coefficient::from(1))],
            Truncation::Below(GroupElement::int(2)),
        )
        .unwrap();
        let outer = Series::from_terms(
            &Integers,
            [
                (GroupElement::int(1), Coefficient::from(inner)),
                (GroupElement::int(0), Coefficient::from(7)),
            ],
            Truncation::Exact,
        )
        .unwrap();
        let u = unflatten(&outer, &Integers).unwrap();
        assert_eq!(u.truncation(), &Truncation::Below(t2(2, 1)));
        assert_eq!(u.terms().len(), 1);
    }
}
