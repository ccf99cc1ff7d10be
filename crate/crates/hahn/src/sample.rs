//! Seeded random series for checks and benchmarks.

use hahn_core::beta::BetaSample;
use hahn_core::oracle::NaivePoly;
use hahn_core::series::{series_add, series_mul, series_neg, series_sign};
use hahn_core::{Coefficient, GroupDescriptor, GroupElement, Rational, Series, Sign, Truncation};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p/q` with `p ∈ [-20, 20] \ {0}`, `q ∈ [1, 10]`.
    pub fn coefficient(&mut self) -> Rational {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-20..=20);
        }
        Rational::new(BigInt::from(p), BigInt::from(self.rng.gen_range(1..=10)))
    }

    /// A small exponent: `[-3, 3]` in `Z`, `p/q` with `|p| ≤ 6`, `q ≤ 4` in `Q`.
    pub fn exponent(&mut self, g: &GroupDescriptor) -> GroupElement {
        match g {
            GroupDescriptor::Integers => GroupElement::int(self.rng.gen_range(-3..=3)),
            GroupDescriptor::Rationals => GroupElement::rat(self.rng.gen_range(-6..=6), self.rng.gen_range(1..=4)),
            GroupDescriptor::Trivial => GroupElement::Identity,
            GroupDescriptor::LexSum(parts) => GroupElement::Tuple(parts.iter().map(|p| self.exponent(p)).collect()),
        }
    }

    /// Up to `max_terms` terms; duplicates merge, so fewer may survive.
    pub fn series(&mut self, g: &GroupDescriptor, max_terms: usize) -> Series {
        let n = self.rng.gen_range(0..=max_terms);
        let terms: Vec<(GroupElement, Coefficient)> = (0..n)
            .map(|_| (self.exponent(g), Coefficient::from(self.coefficient())))
            .collect();
        Series::from_terms(g, terms, Truncation::Exact).expect("sampled exponents lie in the group")
    }

    /// Exactly `n` terms with distinct exponents; `g` must have at least `n`
    /// sampled exponents.
    pub fn series_with_len(&mut self, g: &GroupDescriptor, n: usize) -> Series {
        let mut exps: Vec<GroupElement> = Vec::with_capacity(n);
        while exps.len() < n {
            let e = self.exponent(g);
            if !exps.contains(&e) {
                exps.push(e);
            }
        }
        let terms: Vec<_> = exps
            .into_iter()
            .map(|e| (e, Coefficient::from(self.coefficient())))
            .collect();
        Series::from_terms(g, terms, Truncation::Exact).expect("sampled exponents lie in the group")
    }

    pub fn nonzero_series(&mut self, g: &GroupDescriptor, max_terms: usize) -> Series {
        loop {
            let s = self.series(g, max_terms.max(1));
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn positive_series(&mut self, g: &GroupDescriptor, max_terms: usize) -> Series {
        let s = self.nonzero_series(g, max_terms);
        match series_sign(&s).expect("exact series") {
            Sign::Negative => series_neg(&s),
            _ => s,
        }
    }

    /// A rational in `(-1, 1)`.
    pub fn unit_fraction(&mut self) -> Rational {
        let d: i64 = self.rng.gen_range(2..=20);
        Rational::new(BigInt::from(self.rng.gen_range(-(d - 1)..d)), BigInt::from(d))
    }

    /// `(x, r, y, s, z)` tuples; most put `z` inside `β(x, r)` and `y` near
    /// `z` so the intersection axiom is exercised.
    pub fn beta_sample(&mut self, g: &GroupDescriptor, max_terms: usize) -> BetaSample {
        let x = self.series(g, max_terms);
        let r = self.positive_series(g, max_terms.min(2));
        let s = self.positive_series(g, max_terms.min(2));
        let (y, z) = if self.rng.gen_bool(0.75) {
            let z = self.near(&x, &r);
            (self.near(&z, &s), z)
        } else {
            (self.series(g, max_terms), self.series(g, max_terms))
        };
        BetaSample { x, r, y, s, z }
    }

    /// `c + r·q` for a random `q ∈ (-1, 1)`.
    fn near(&mut self, c: &Series, r: &Series) -> Series {
        let q = Series::constant(r.group(), self.unit_fraction());
        series_add(c, &series_mul(r, &q).expect("exact")).expect("same group")
    }
}

/// The oracle's view of an exact series with rational coefficients.
pub fn to_naive(s: &Series) -> Option<NaivePoly> {
    Some(NaivePoly::new(s.group().clone(), s.rational_terms()?))
}
