use hahn::parse::{parse_element, parse_group, parse_series};
use hahn::sample::Sampler;
use hahn_core::series::series_add;
use hahn_core::{GroupDescriptor, Series};
use proptest::prelude::*;

fn groups() -> impl Strategy<Value = GroupDescriptor> {
    use GroupDescriptor::*;
    prop_oneof![
        Just(Integers),
        Just(Rationals),
        Just(LexSum(vec![Integers, Integers])),
        Just(LexSum(vec![Rationals, Integers])),
        Just(LexSum(vec![Integers, Trivial, LexSum(vec![Rationals, Integers])])),
    ]
}

proptest! {
    #[test]
    fn series_text_round_trips(g in groups(), seed in any::<u64>(), truncated in any::<bool>()) {
        let mut rng = Sampler::new(seed);
        let mut s = rng.series(&g, 6);
        if truncated {
            s = series_add(&s, &Series::unknown_below(&g, rng.exponent(&g)).unwrap()).unwrap();
        }
        let text = s.to_string();
        prop_assert_eq!(parse_series(&text, &g, 8).unwrap(), s);
        // whitespace is insignificant
        prop_assert_eq!(parse_series(&text.replace(' ', ""), &g, 8).unwrap(), parse_series(&text, &g, 8).unwrap());
    }

    #[test]
    fn element_and_group_text_round_trips(g in groups(), seed in any::<u64>()) {
        prop_assert_eq!(parse_group(&g.to_string()).unwrap(), g.clone());
        let e = Sampler::new(seed).exponent(&g);
        prop_assert_eq!(parse_element(&e.to_string(), &g).unwrap(), e);
    }
}
