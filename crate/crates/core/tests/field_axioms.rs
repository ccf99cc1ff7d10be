mod common;

use common::*;
use hahn_core::oracle::{naive_add, naive_cmp, naive_inverse_solve, naive_mul, NaivePoly};
use hahn_core::series::{series_add, series_cmp, series_inv, series_mul, series_neg, series_sign, series_sub};
use hahn_core::{Series, Sign, Truncation};
use proptest::prelude::*;
use std::cmp::Ordering;

fn naive(s: &Series) -> NaivePoly {
    NaivePoly::new(s.group().clone(), s.rational_terms().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_laws((g, v) in series_tuple(3, 6)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(series_add(a, b).unwrap(), series_add(b, a).unwrap());
        prop_assert_eq!(series_mul(a, b).unwrap(), series_mul(b, a).unwrap());
        prop_assert_eq!(
            series_add(&series_add(a, b).unwrap(), c).unwrap(),
            series_add(a, &series_add(b, c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            series_mul(&series_mul(a, b).unwrap(), c).unwrap(),
            series_mul(a, &series_mul(b, c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            series_mul(a, &series_add(b, c).unwrap()).unwrap(),
            series_add(&series_mul(a, b).unwrap(), &series_mul(a, c).unwrap()).unwrap()
        );
        prop_assert!(series_add(a, &series_neg(a)).unwrap().is_zero());
        prop_assert_eq!(&series_mul(a, &Series::one(&g)).unwrap(), a);
        prop_assert_eq!(&series_add(a, &Series::zero(&g)).unwrap(), a);
    }

    #[test]
    fn agrees_with_naive_oracle((_g, v) in series_tuple(2, 6)) {
        let (a, b) = (&v[0], &v[1]);
        let (na, nb) = (naive(a), naive(b));
        prop_assert_eq!(series_add(a, b).unwrap().rational_terms().unwrap(), naive_add(&na, &nb).unwrap().collect());
        prop_assert_eq!(series_mul(a, b).unwrap().rational_terms().unwrap(), naive_mul(&na, &nb).unwrap().collect());
        prop_assert_eq!(series_cmp(a, b).unwrap(), naive_cmp(&na, &nb).unwrap());
    }

    #[test]
    fn order_laws((_g, v) in series_tuple(3, 5)) {
        let (s, t, u) = (&v[0], &v[1], &v[2]);
        let lt = series_cmp(s, t).unwrap() == Ordering::Less;
        let eq = s == t;
        let gt = series_cmp(s, t).unwrap() == Ordering::Greater;
        prop_assert_eq!(u8::from(lt) + u8::from(eq) + u8::from(gt), 1);
        prop_assert_eq!(series_cmp(&series_add(s, u).unwrap(), &series_add(t, u).unwrap()).unwrap(), series_cmp(s, t).unwrap());
        if series_sign(s).unwrap() == Sign::Positive && series_sign(t).unwrap() == Sign::Positive {
            prop_assert_eq!(series_sign(&series_add(s, t).unwrap()).unwrap(), Sign::Positive);
            prop_assert_eq!(series_sign(&series_mul(s, t).unwrap()).unwrap(), Sign::Positive);
        }
        prop_assert_eq!(series_sign(&series_sub(s, t).unwrap()).unwrap() == Sign::Positive, gt);
    }

    #[test]
    fn inverse_matches_long_division(s in groups().prop_flat_map(|g| nonzero_in(g, 5))) {
        let inv = series_inv(&s, 8).unwrap();
        let prod = series_mul(&s, &inv).unwrap();
        let bound = prod.truncation().bound().cloned();
        let one = Series::one(s.group());
        let above: Vec<_> = prod.terms().iter().filter(|t| bound.as_ref().is_none_or(|b| &t.exponent > b)).collect();
        prop_assert_eq!(above.len(), 1);
        prop_assert_eq!(above[0], &one.terms()[0]);

        let oracle = naive_inverse_solve(&naive(&s), inv.len()).unwrap();
        let kept: Vec<_> = oracle.terms.iter()
            .filter(|(e, _)| inv.truncation().bound().is_none_or(|b| e > b))
            .cloned()
            .collect();
        let mine: Vec<_> = inv.terms().iter().map(|t| (t.exponent.clone(), t.coefficient.as_rational().unwrap().clone())).collect();
        prop_assert_eq!(mine, kept);
        if s.len() == 1 {
            prop_assert_eq!(inv.truncation(), &Truncation::Exact);
        }
    }
}
