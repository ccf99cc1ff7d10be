//! Balls, swing values and level sets of the order topology.
//!
//! `β(x, r) = {y : |x - y| < r}` for positive `r`. Swing values are the
//! halvings `r/2^n`; the level set `L(x, r)` collects every `y` whose
//! distance from `x` sits in a strictly smaller level class than `r`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::levels::level_class;
use crate::series::{series_abs, series_add, series_cmp, series_mul, series_scale, series_sign, series_sub};
use crate::{Rational, Series, Sign};

fn require_positive(r: &Series) -> Result<()> {
    match series_sign(r) {
        Ok(Sign::Positive) => Ok(()),
        Ok(_) => Err(Error::NonPositiveInput),
        Err(_) => Err(Error::IndeterminateComparison),
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

pub fn ball_member(x: &Series, r: &Series, y: &Series) -> Result<bool> {
    require_positive(r)?;
    let d = series_abs(&series_sub(x, y)?).map_err(|_| Error::IndeterminateComparison)?;
    Ok(series_cmp(&d, r)? == Ordering::Less)
}

/// `r/2`: any `y` within `r/2` of `x` has `β(x, r/2) ⊆ β(y, r)`.
pub fn swing_value(r: &Series) -> Result<Series> {
    require_positive(r)?;
    Ok(series_scale(r, &half()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwingSequence {
    radii: Vec<Series>,
}

impl SwingSequence {
    /// `r, r/2, …, r/2^(n-1)`.
    pub fn radii(&self) -> &[Series] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }
}

pub fn swing_sequence(r: &Series, n: usize) -> Result<SwingSequence> {
    require_positive(r)?;
    let mut radii = Vec::with_capacity(n);
    let mut cur = r.clone();
    for _ in 0..n {
        let next = series_scale(&cur, &half());
        radii.push(cur);
        cur = next;
    }
    Ok(SwingSequence { radii })
}

/// `y ∈ L(x, r)`: either `y = x` or `[|x - y|] < [r]`.
///
/// This equals membership in every ball `β(x, r/2^n)` taken together with
/// all `β(x, r·x^-δ)`; [`crate::oracle::swing_sweep_member`] checks the
/// halvings up to a finite depth.
pub fn level_set_member(x: &Series, r: &Series, y: &Series) -> Result<bool> {
    require_positive(r)?;
    let d = series_sub(x, y)?;
    if d.is_zero() {
        return Ok(true);
    }
    let d = series_abs(&d).map_err(|_| Error::IndeterminateComparison)?;
    Ok(level_class(&d)?.try_cmp(&level_class(r)?)? == Ordering::Less)
}

/// Whether `L(x, a)` and `L(x, b)` agree for every `x` in `samples`, probing
/// every sample pair and the points `x ± a`, `x ± b`.
pub fn level_set_equiv(a: &Series, b: &Series, samples: &[Series]) -> Result<bool> {
    require_positive(a)?;
    require_positive(b)?;
    for x in samples {
        let mut probes: Vec<Series> = samples.to_vec();
        for r in [a, b] {
            probes.push(series_add(x, r)?);
            probes.push(series_sub(x, r)?);
        }
        for y in &probes {
            if level_set_member(x, a, y)? != level_set_member(x, b, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One sampled configuration `(x, r, y, s, z)` of centres, radii and a
/// test point.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaSample {
    pub x: Series,
    pub r: Series,
    pub y: Series,
    pub s: Series,
    pub z: Series,
}

impl BetaSample {
    fn inputs(&self) -> Vec<Series> {
        alloc::vec![
            self.x.clone(),
            self.r.clone(),
            self.y.clone(),
            self.s.clone(),
            self.z.clone()
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomFailure {
    pub inputs: Vec<Series>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub axiom: u8,
    pub samples_run: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Multipliers `q` with `|q| < 1`: rational fractions plus `±(1 - x^-δ)`,
/// which sit infinitesimally close to the rim.
fn probe_multipliers(sample: &Series) -> Result<Vec<Series>> {
    let g = sample.group();
    let mut out = Vec::new();
    for (n, d) in [(0, 1), (1, 2), (-1, 2), (99, 100), (-99, 100)] {
        out.push(Series::constant(g, Rational::new(BigInt::from(n), BigInt::from(d))));
    }
    for delta in g.positive_samples() {
        let eps = Series::power_of_x(g, delta.neg())?;
        let rim = series_sub(&Series::one(g), &eps)?;
        out.push(crate::series::series_neg(&rim));
        out.push(rim);
    }
    Ok(out)
}

fn ball_points(centre: &Series, radius: &Series, probes: &[Series]) -> Result<Vec<Series>> {
    probes
        .iter()
        .map(|q| series_add(centre, &series_mul(radius, q)?))
        .collect()
}

/// Default witness radius for the intersection axiom:
/// half of `min(r - |x - z|, s - |y - z|)`.
pub fn intersection_radius(c: &BetaSample) -> Result<Series> {
    let gap = |centre: &Series, radius: &Series| -> Result<Series> {
        series_sub(radius, &series_abs(&series_sub(centre, &c.z)?)?)
    };
    let a = gap(&c.x, &c.r)?;
    let b = gap(&c.y, &c.s)?;
    let m = if series_cmp(&a, &b)? == Ordering::Less { a } else { b };
    Ok(series_scale(&m, &half()))
}

/// Sampled check of the three ball axioms:
///
/// 1. `x ∈ β(x, r)`;
/// 2. `z ∈ β(x, r) ∩ β(y, s)` implies some `β(z, t)` lies in the intersection;
/// 3. `y ∈ β(x, r/2)` implies `β(x, r/2) ⊆ β(y, r)`.
pub fn beta_axioms_check(config: &[BetaSample]) -> Result<Vec<AxiomReport>> {
    beta_axioms_check_with(config, &intersection_radius)
}

pub fn beta_axioms_check_with(
    config: &[BetaSample],
    t_rule: &dyn Fn(&BetaSample) -> Result<Series>,
) -> Result<Vec<AxiomReport>> {
    for c in config {
        require_positive(&c.r)?;
        require_positive(&c.s)?;
    }
    let mut reports: Vec<AxiomReport> = (1..=3)
        .map(|axiom| AxiomReport {
            axiom,
            samples_run: config.len(),
            failures: Vec::new(),
        })
        .collect();
    let fail = |c: &BetaSample, extra: Option<&Series>, reason: String| {
        let mut inputs = c.inputs();
        inputs.extend(extra.cloned());
        AxiomFailure { inputs, reason }
    };

    for c in config {
        let probes = probe_multipliers(&c.r)?;

        for (centre, radius) in [(&c.x, &c.r), (&c.y, &c.s)] {
            if !ball_member(centre, radius, centre)? {
                reports[0]
                    .failures
                    .push(fail(c, None, format!("{} not in its own ball", centre)));
            }
        }

        if ball_member(&c.x, &c.r, &c.z)? && ball_member(&c.y, &c.s, &c.z)? {
            let t = t_rule(c)?;
            if series_sign(&t)? != Sign::Positive {
                reports[1]
                    .failures
                    .push(fail(c, Some(&t), String::from("witness radius not positive")));
            } else {
                for w in ball_points(&c.z, &t, &probes)? {
                    if !ball_member(&c.z, &t, &w)? {
                        continue;
                    }
                    if !(ball_member(&c.x, &c.r, &w)? && ball_member(&c.y, &c.s, &w)?) {
                        reports[1]
                            .failures
                            .push(fail(c, Some(&w), format!("point escapes intersection at t = {}", t)));
                        break;
                    }
                }
            }
        }

        let sv = swing_value(&c.r)?;
        let points = ball_points(&c.x, &sv, &probes)?;
        let mut centres: Vec<&Series> = alloc::vec![&c.y, &c.z];
        centres.extend(points.iter());
        'centres: for y in centres {
            if !ball_member(&c.x, &sv, y)? {
                continue;
            }
            for w in &points {
                if ball_member(&c.x, &sv, w)? && !ball_member(y, &c.r, w)? {
                    reports[2]
                        .failures
                        .push(fail(c, Some(w), format!("swing ball escapes around {}", y)));
                    break 'centres;
                }
            }
        }
    }
    Ok(reports)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CauchyEntry {
    pub prefix: usize,
    /// Leading exponent of the tail `s - s_prefix`; `None` once the tail is zero.
    pub tail_level: Option<GroupElement>,
    /// The tail lies inside `β(0, x^(e + δ))` for every sampled `δ > 0`,
    /// `e` the exponent of the first omitted term.
    pub within_radius: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CauchyReport {
    pub entries: Vec<CauchyEntry>,
    /// Tail levels strictly decrease along increasing prefixes.
    pub monotone: bool,
}

impl CauchyReport {
    pub fn passed(&self) -> bool {
        self.monotone && self.entries.iter().all(|e| e.within_radius)
    }
}

/// Partial sums of an exact series converge in the order topology.
///
/// Prefix lengths beyond the series length are clamped.
pub fn partial_sum_cauchy_check(s: &Series, prefix_lengths: &[usize]) -> Result<CauchyReport> {
    if !s.is_exact() {
        return Err(Error::NotExact);
    }
    if s.len() < 2 {
        return Err(Error::TooFewTerms);
    }
    let g = s.group();
    let mut lengths: Vec<usize> = prefix_lengths.iter().map(|&m| m.min(s.len())).collect();
    lengths.sort_unstable();
    lengths.dedup();

    let mut entries = Vec::with_capacity(lengths.len());
    for m in lengths {
        let tail = series_sub(s, &s.prefix(m))?;
        let (tail_level, within_radius) = match s.terms().get(m) {
            None => (None, tail.is_zero()),
            Some(next) => {
                let level = tail.leading_term().map(|t| t.exponent.clone());
                let abs = series_abs(&tail)?;
                let mut within = level.as_ref() == Some(&next.exponent);
                for delta in g.positive_samples() {
                    let radius = Series::power_of_x(g, next.exponent.try_add(&delta)?)?;
                    within &= series_cmp(&abs, &radius)? == Ordering::Less;
                }
                (level, within)
            }
        };
        entries.push(CauchyEntry {
            prefix: m,
            tail_level,
            within_radius,
        });
    }
    let monotone = entries.windows(2).all(|w| match (&w[0].tail_level, &w[1].tail_level) {
        (Some(a), Some(b)) => b < a,
        (Some(_), None) => true,
        _ => false,
    });
    Ok(CauchyReport { entries, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupDescriptor;
    use alloc::vec;

    fn zz() -> GroupDescriptor {
        GroupDescriptor::Integers
    }

    fn poly(terms: &[(i64, i64)]) -> Series {
        Series::from_terms(
            &zz(),
            terms
                .iter()
                .map(|&(e, c)| (GroupElement::int(e), Rational::from_integer(c.into()).into())),
            crate::Truncation::Exact,
        )
        .unwrap()
    }

    fn q(n: i64, d: i64) -> Series {
        Series::constant(&zz(), Rational::new(n.into(), d.into()))
    }

    #[test]
    fn balls() {
        let zero = Series::zero(&zz());
        let one = poly(&[(0, 1)]);
        assert!(ball_member(&zero, &one, &poly(&[(-1, 1)])).unwrap());
        assert!(!ball_member(&zero, &one, &one).unwrap());
        assert!(ball_member(&zero, &one, &q(-1, 2)).unwrap());
        assert!(!ball_member(&zero, &poly(&[(-1, 1)]), &q(1, 1000)).unwrap());
        assert_eq!(ball_member(&zero, &zero, &one), Err(Error::NonPositiveInput));
        assert_eq!(
            ball_member(&zero, &poly(&[(0, -1)]), &one),
            Err(Error::NonPositiveInput)
        );
    }

    #[test]
    fn swing() {
        let r = poly(&[(1, 1)]);
        assert_eq!(
            swing_value(&r).unwrap(),
            Series::from_terms(
                &zz(),
                [(GroupElement::int(1), Rational::new(1.into(), 2.into()).into())],
                crate::Truncation::Exact,
            )
            .unwrap()
        );
        let one = poly(&[(0, 1)]);
        assert_eq!(
            swing_sequence(&one, 3).unwrap().radii(),
            &[one.clone(), q(1, 2), q(1, 4)]
        );
        assert_eq!(
            swing_sequence(&poly(&[(-1, 2)]), 2).unwrap().radii(),
            &[poly(&[(-1, 2)]), poly(&[(-1, 1)])]
        );
        assert_eq!(swing_sequence(&one, 1).unwrap().radii(), &[one.clone()]);
        let seq = swing_sequence(&r, 4).unwrap();
        assert_eq!(seq.len(), 4);
        assert_eq!(seq.radii()[3], series_scale(&r, &Rational::new(1.into(), 8.into())));
    }

    #[test]
    fn level_sets() {
        let zero = Series::zero(&zz());
        let one = poly(&[(0, 1)]);
        assert!(level_set_member(&zero, &one, &poly(&[(-1, 5)])).unwrap());
        assert!(!level_set_member(&zero, &one, &q(1, 2)).unwrap());
        assert!(level_set_member(&one, &one, &one).unwrap());
        let samples = vec![zero.clone(), one.clone(), poly(&[(-1, 1)]), poly(&[(2, 1), (0, 3)])];
        assert!(level_set_equiv(&one, &q(1, 1000), &samples).unwrap());
        assert!(!level_set_equiv(&one, &poly(&[(-1, 1)]), &samples).unwrap());
        assert!(level_set_equiv(&one, &q(3, 1), &samples).unwrap());
        assert!(!level_set_equiv(&one, &poly(&[(1, 1)]), &samples).unwrap());
        assert!(level_set_equiv(&samples[3], &samples[3], &samples).unwrap());
    }

    #[test]
    fn axioms() {
        let c = BetaSample {
            x: Series::zero(&zz()),
            r: poly(&[(0, 1)]),
            y: q(1, 2),
            s: q(1, 1),
            z: q(1, 4),
        };
        let reports = beta_axioms_check(std::slice::from_ref(&c)).unwrap();
        assert!(reports.iter().all(AxiomReport::passed), "{:?}", reports);

        let too_big = |c: &BetaSample| Ok(c.r.clone());
        let reports = beta_axioms_check_with(std::slice::from_ref(&c), &too_big).unwrap();
        assert!(!reports[1].passed());

        let bad = BetaSample {
            r: Series::zero(&zz()),
            ..c
        };
        assert_eq!(beta_axioms_check(&[bad]), Err(Error::NonPositiveInput));
    }

    #[test]
    fn cauchy() {
        let s = poly(&[(2, 1), (0, 1), (-1, 1)]);
        let rep = partial_sum_cauchy_check(&s, &[1, 2]).unwrap();
        assert_eq!(rep.entries[0].tail_level, Some(GroupElement::int(0)));
        assert_eq!(rep.entries[1].tail_level, Some(GroupElement::int(-1)));
        assert!(rep.passed());
        let rep = partial_sum_cauchy_check(&s, &[5, 1, 3]).unwrap();
        assert_eq!(rep.entries.len(), 2);
        assert!(rep.passed());
        assert_eq!(
            partial_sum_cauchy_check(&poly(&[(0, 1)]), &[1]),
            Err(Error::TooFewTerms)
        );
        let t = Series::unknown_below(&zz(), GroupElement::int(0)).unwrap();
        assert_eq!(partial_sum_cauchy_check(&t, &[1]), Err(Error::NotExact));
    }
}
