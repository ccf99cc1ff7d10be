#![allow(dead_code)]

use hahn_core::series::{series_neg, series_sign};
use hahn_core::{Coefficient, GroupDescriptor, GroupElement, Rational, Series, Sign, Truncation};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn z() -> GroupDescriptor {
    GroupDescriptor::Integers
}

pub fn q() -> GroupDescriptor {
    GroupDescriptor::Rationals
}

pub fn lex(parts: Vec<GroupDescriptor>) -> GroupDescriptor {
    GroupDescriptor::LexSum(parts)
}

pub fn groups() -> impl Strategy<Value = GroupDescriptor> {
    prop_oneof![
        Just(z()),
        Just(q()),
        Just(lex(vec![z(), z()])),
        Just(lex(vec![q(), z()]))
    ]
}

pub fn exponent(g: &GroupDescriptor) -> BoxedStrategy<GroupElement> {
    match g {
        GroupDescriptor::Integers => (-3i64..=3).prop_map(GroupElement::int).boxed(),
        GroupDescriptor::Rationals => (-6i64..=6, 1i64..=4).prop_map(|(p, q)| GroupElement::rat(p, q)).boxed(),
        GroupDescriptor::Trivial => Just(GroupElement::Identity).boxed(),
        GroupDescriptor::LexSum(parts) => {
            let parts: Vec<_> = parts.iter().map(exponent).collect();
            parts.prop_map(GroupElement::Tuple).boxed()
        }
    }
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn series_in(g: GroupDescriptor, max_terms: usize) -> BoxedStrategy<Series> {
    prop::collection::vec((exponent(&g), coefficient()), 0..=max_terms)
        .prop_map(move |terms| {
            Series::from_terms(
                &g,
                terms.into_iter().map(|(e, c)| (e, Coefficient::from(c))),
                Truncation::Exact,
            )
            .unwrap()
        })
        .boxed()
}

pub fn nonzero_in(g: GroupDescriptor, max_terms: usize) -> BoxedStrategy<Series> {
    series_in(g, max_terms).prop_filter("nonzero", |s| !s.is_zero()).boxed()
}

pub fn positive_in(g: GroupDescriptor, max_terms: usize) -> BoxedStrategy<Series> {
    nonzero_in(g, max_terms)
        .prop_map(|s| {
            if series_sign(&s).unwrap() == Sign::Negative {
                series_neg(&s)
            } else {
                s
            }
        })
        .boxed()
}

/// A group together with `n` series over it.
pub fn series_tuple(n: usize, max_terms: usize) -> impl Strategy<Value = (GroupDescriptor, Vec<Series>)> {
    groups().prop_flat_map(move |g| {
        let strat: Vec<_> = (0..n).map(|_| series_in(g.clone(), max_terms)).collect();
        (Just(g), strat)
    })
}
