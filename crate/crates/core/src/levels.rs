//! Level equivalence, the level group `𝓛(F)`, generator sets, class groups
//! and decomposition reports for fields of the form `Q ⊠ G₁ ⊠ … ⊠ Gₙ`.
//!
//! Two positive elements are level-equivalent when each is bounded by an
//! integer multiple of the other. Over a box field with Archimedean base
//! this happens exactly when their leading exponents agree, so `𝓛(F)` is
//! computed structurally from the exponent chain instead of as a quotient
//! of `F^{>0}`: `𝓛(Q) = 1` and `𝓛(F ⊠ G) ≅ 𝓛(F) ⊞ G`. [`level_class`] is
//! the element-level witness of that isomorphism.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::groups::{box_sum, group_classes, ClassId, GroupDescriptor, GroupElement};
use crate::series::{flatten_last, series_add, series_mul, series_sign, unflatten_into, Coefficient, Series, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    /// Exact rationals, standing in for the reals.
    Rationals,
}

/// `base ⊠ G₁ ⊠ … ⊠ Gₙ`; the empty chain is the Archimedean base itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    pub base: BaseField,
    pub chain: Vec<GroupDescriptor>,
}

impl FieldDescriptor {
    pub fn new(chain: Vec<GroupDescriptor>) -> Result<Self> {
        chain.iter().try_for_each(|g| g.validate())?;
        Ok(FieldDescriptor {
            base: BaseField::Rationals,
            chain,
        })
    }

    pub fn rationals() -> Self {
        FieldDescriptor {
            base: BaseField::Rationals,
            chain: Vec::new(),
        }
    }

    fn prefix(&self, n: usize) -> FieldDescriptor {
        FieldDescriptor {
            base: self.base,
            chain: self.chain[..n].to_vec(),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")?;
        for g in &self.chain {
            write!(f, " box {g}")?;
        }
        Ok(())
    }
}

/// An element `[x]` of the level group, represented by the leading
/// exponent of `x`. For series with nested coefficients the exponent is the
/// tuple `(inner class, outer exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelClass {
    group: GroupDescriptor,
    exponent: GroupElement,
}

impl LevelClass {
    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn exponent(&self) -> &GroupElement {
        &self.exponent
    }

    /// `[x] + [y] = [x·y]`.
    pub fn add(&self, other: &LevelClass) -> Result<LevelClass> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(LevelClass {
            group: self.group.clone(),
            exponent: self.exponent.try_add(&other.exponent)?,
        })
    }

    pub fn try_cmp(&self, other: &LevelClass) -> Result<Ordering> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        self.exponent.try_cmp(&other.exponent)
    }
}

impl PartialOrd for LevelClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl fmt::Display for LevelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exponent)
    }
}

/// Level group of the values of `s` as seen through its nesting.
fn nested_level_group(s: &Series) -> GroupDescriptor {
    match s.terms().iter().find_map(|t| t.coefficient.as_series()) {
        Some(inner) => GroupDescriptor::LexSum(alloc::vec![nested_level_group(inner), s.group().clone()]),
        None => s.group().clone(),
    }
}

fn leading_level(s: &Series) -> Result<(GroupDescriptor, GroupElement)> {
    let lead = s.leading_term().ok_or(if s.is_zero() {
        Error::NonPositiveInput
    } else {
        Error::IndeterminateSign
    })?;
    match &lead.coefficient {
        Coefficient::Series(inner) => {
            let (ig, ie) = leading_level(inner)?;
            Ok((
                GroupDescriptor::LexSum(alloc::vec![ig, s.group().clone()]),
                GroupElement::Tuple(alloc::vec![ie, lead.exponent.clone()]),
            ))
        }
        Coefficient::Rational(_) => match s.terms().iter().find_map(|t| t.coefficient.as_series()) {
            // a rational among nested coefficients is a constant of the inner field
            Some(inner) => {
                let ig = nested_level_group(inner);
                let zero = ig.zero();
                Ok((
                    GroupDescriptor::LexSum(alloc::vec![ig, s.group().clone()]),
                    GroupElement::Tuple(alloc::vec![zero, lead.exponent.clone()]),
                ))
            }
            None => Ok((s.group().clone(), lead.exponent.clone())),
        },
    }
}

fn require_positive(x: &Series) -> Result<()> {
    match series_sign(x)? {
        Sign::Positive => Ok(()),
        _ => Err(Error::NonPositiveInput),
    }
}

pub fn level_class(x: &Series) -> Result<LevelClass> {
    require_positive(x)?;
    let (group, exponent) = leading_level(x)?;
    Ok(LevelClass { group, exponent })
}

/// Level equivalence of two positive elements: equal leading exponents.
///
/// This is the exact relation, with no bound on the integer multipliers;
/// [`crate::oracle::bounded_mn_search`] is the brute-force counterpart.
pub fn level_equiv(a: &Series, b: &Series) -> Result<bool> {
    let ca = level_class(a)?;
    let cb = level_class(b)?;
    Ok(ca == cb)
}

/// `𝓛(F)`: trivial for the base field, `G` for a one-entry chain, and
/// `lex(G₁, …, Gₙ)` for longer chains.
pub fn level_group(f: &FieldDescriptor) -> GroupDescriptor {
    match f.chain.len() {
        0 => GroupDescriptor::Trivial,
        1 => f.chain[0].clone(),
        _ => GroupDescriptor::LexSum(f.chain.clone()),
    }
}

/// `gen(F)`, smallest class first.
pub fn generator_set(f: &FieldDescriptor) -> Result<Vec<ClassId>> {
    group_classes(&level_group(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::Infinite => f.write_str("infinite"),
        }
    }
}

pub fn degree(f: &FieldDescriptor) -> Result<Degree> {
    Ok(Degree::Finite(generator_set(f)?.len()))
}

/// A subgroup of `𝓛(F)` spanned by the leaf coordinates up to `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorGroup {
    /// The level group it sits in.
    pub ambient: GroupDescriptor,
    /// Same shape as `ambient` with the excluded leaves replaced by `1`.
    pub descriptor: GroupDescriptor,
    /// Highest leaf index allowed to be nonzero; `None` for the zero subgroup.
    pub top: Option<usize>,
}

impl GeneratorGroup {
    pub fn contains(&self, e: &GroupElement) -> bool {
        self.ambient.contains(e)
            && e.leaves()
                .iter()
                .enumerate()
                .all(|(i, l)| self.top.is_some_and(|t| i <= t) || l.is_zero())
    }
}

fn mask_leaves(g: &GroupDescriptor, keep: &dyn Fn(usize) -> bool, next: &mut usize) -> GroupDescriptor {
    match g {
        GroupDescriptor::LexSum(cs) => GroupDescriptor::LexSum(cs.iter().map(|c| mask_leaves(c, keep, next)).collect()),
        leaf => {
            let i = *next;
            *next += 1;
            if keep(i) {
                leaf.clone()
            } else {
                GroupDescriptor::Trivial
            }
        }
    }
}

fn known_class(f: &FieldDescriptor, c: ClassId) -> Result<GroupDescriptor> {
    if !generator_set(f)?.contains(&c) {
        return Err(Error::UnknownClass(c));
    }
    Ok(level_group(f))
}

/// `G^{[x]}`: generated by every class at or below `c`.
pub fn upper_group(f: &FieldDescriptor, c: ClassId) -> Result<GeneratorGroup> {
    let ambient = known_class(f, c)?;
    let descriptor = mask_leaves(&ambient, &|i| i <= c.0, &mut 0);
    Ok(GeneratorGroup {
        ambient,
        descriptor,
        top: Some(c.0),
    })
}

/// `G_{[x]}`: generated by every class strictly below `c`.
pub fn lower_group(f: &FieldDescriptor, c: ClassId) -> Result<GeneratorGroup> {
    let ambient = known_class(f, c)?;
    let descriptor = mask_leaves(&ambient, &|i| i < c.0, &mut 0);
    Ok(GeneratorGroup {
        ambient,
        descriptor,
        top: c.0.checked_sub(1),
    })
}

/// `𝒢[x] = G^{[x]} / G_{[x]}`: the leaf component at the class coordinate.
pub fn class_group(f: &FieldDescriptor, c: ClassId) -> Result<GroupDescriptor> {
    let ambient = known_class(f, c)?;
    Ok(ambient.leaves()[c.0].clone())
}

/// The constants: the base field with an empty chain.
pub fn arch_subfield(f: &FieldDescriptor) -> FieldDescriptor {
    FieldDescriptor {
        base: f.base,
        chain: Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub arch_subfield: FieldDescriptor,
    pub level_group: GroupDescriptor,
    pub generator_set: Vec<ClassId>,
    /// One entry per element of `generator_set`, in the same order.
    pub class_groups: Vec<GroupDescriptor>,
    pub degree: Degree,
}

impl DecompositionReport {
    /// `⊞(gen(F), 𝒢)` agrees with `𝓛(F)` up to normalization.
    pub fn is_consistent(&self) -> bool {
        let summed = match box_sum(self.class_groups.clone()) {
            Ok(g) => g.normalized(),
            Err(_) => GroupDescriptor::Trivial,
        };
        summed == self.level_group.normalized()
            && self.degree == Degree::Finite(self.generator_set.len())
            && self
                .class_groups
                .iter()
                .all(|g| group_classes(g).is_ok_and(|c| c.len() <= 1))
    }
}

pub fn decompose(f: &FieldDescriptor) -> Result<DecompositionReport> {
    let generator_set = generator_set(f)?;
    let class_groups = generator_set
        .iter()
        .map(|&c| class_group(f, c))
        .collect::<Result<_>>()?;
    let degree = degree(f)?;
    if degree == Degree::Infinite {
        return Err(Error::InfiniteDegree);
    }
    Ok(DecompositionReport {
        arch_subfield: arch_subfield(f),
        level_group: level_group(f),
        generator_set,
        class_groups,
        degree,
    })
}

fn map_coefficients(s: &Series, f: &dyn Fn(&Series) -> Result<Series>) -> Result<Series> {
    let terms = s
        .terms()
        .iter()
        .map(|t| {
            let c = match &t.coefficient {
                Coefficient::Series(inner) => Coefficient::from(f(inner)?),
                c => c.clone(),
            };
            Ok((t.exponent.clone(), c))
        })
        .collect::<Result<Vec<_>>>()?;
    Series::from_terms(s.group(), terms, s.truncation().clone())
}

/// From the single lex view over `𝓛(F)` to the iterated view
/// `(…((Q ⊠ G₁) ⊠ G₂) …) ⊠ Gₙ`.
pub fn to_chain_view(s: &Series, f: &FieldDescriptor) -> Result<Series> {
    if s.group() != &level_group(f) {
        return Err(Error::GroupMismatch);
    }
    let n = f.chain.len();
    if n <= 1 {
        return Ok(s.clone());
    }
    let head = f.prefix(n - 1);
    map_coefficients(&flatten_last(s)?, &|c| to_chain_view(c, &head))
}

pub fn from_chain_view(t: &Series, f: &FieldDescriptor) -> Result<Series> {
    let n = f.chain.len();
    if n <= 1 {
        return Ok(t.clone());
    }
    let head = f.prefix(n - 1);
    let t = map_coefficients(t, &|c| from_chain_view(c, &head))?;
    unflatten_into(&t, &level_group(f))
}

/// Checks that the chain view is an order-preserving ring isomorphism on
/// the samples: round trip, sums and products of neighbouring samples, and
/// signs.
pub fn flatten_chain_check(f: &FieldDescriptor, samples: &[Series]) -> Result<bool> {
    flatten_chain_check_with(f, samples, &to_chain_view, &from_chain_view)
}

type ViewFn<'a> = &'a dyn Fn(&Series, &FieldDescriptor) -> Result<Series>;

/// [`flatten_chain_check`] with the two maps supplied by the caller.
pub fn flatten_chain_check_with(
    f: &FieldDescriptor,
    samples: &[Series],
    to_view: ViewFn<'_>,
    from_view: ViewFn<'_>,
) -> Result<bool> {
    if f.chain.len() < 2 {
        return Err(Error::NotLexSumGroup);
    }
    let views = samples.iter().map(|s| to_view(s, f)).collect::<Result<Vec<_>>>()?;
    for (s, v) in samples.iter().zip(&views) {
        if &from_view(v, f)? != s || series_sign(s)? != series_sign(v)? {
            return Ok(false);
        }
    }
    let n = samples.len();
    for i in 0..n {
        let j = (i + 1) % n;
        let (s, t) = (&samples[i], &samples[j]);
        if to_view(&series_add(s, t)?, f)? != series_add(&views[i], &views[j])? {
            return Ok(false);
        }
        if to_view(&series_mul(s, t)?, f)? != series_mul(&views[i], &views[j])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One-line summary used by text renderers.
pub fn describe_classes(report: &DecompositionReport) -> Vec<String> {
    report
        .generator_set
        .iter()
        .zip(&report.class_groups)
        .map(|(c, g)| alloc::format!("{c}: {g}"))
        .collect()
}
