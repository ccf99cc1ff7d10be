//! Structured ordered abelian groups.
//!
//! A [`GroupDescriptor`] is one of `Z`, `Q`, the trivial group `1`, or a
//! lexicographic sum `lex(G₀, …, Gₙ₋₁)` over the index set `0..n`. In a lex
//! sum the coordinate with the LARGEST index dominates: a tuple is positive
//! when its highest-index nonzero coordinate is positive.
//!
//! Nested lex sums are kept as written. [`GroupDescriptor::flattened`]
//! produces the single-tuple view over the leaves when it is needed.

mod morphism;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub use morphism::{box_sum_map, GroupMorphism};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Integers,
    Rationals,
    Trivial,
    /// Lexicographic sum over `0..n`, index `n - 1` dominant. Must be non-empty.
    LexSum(Vec<GroupDescriptor>),
}

/// An element of a structured group. The shape of the value determines the
/// group it belongs to, so no descriptor is stored alongside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Int(BigInt),
    Rat(Rational),
    /// The only element of the trivial group.
    Identity,
    Tuple(Vec<GroupElement>),
}

/// An Archimedean class of a structured group, identified by the index of
/// the leaf coordinate that dominates its elements (leaves counted left to
/// right after flattening nested lex sums).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(pub usize);

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArchimedeanEquivalence {
    Equivalent,
    Inequivalent,
}

impl GroupDescriptor {
    /// Checked constructor for a lex sum.
    pub fn lex(components: Vec<GroupDescriptor>) -> Result<Self> {
        box_sum(components)
    }

    /// Rejects empty lex sums anywhere in the tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupDescriptor::LexSum(cs) if cs.is_empty() => Err(Error::UnsupportedGroup),
            GroupDescriptor::LexSum(cs) => cs.iter().try_for_each(|c| c.validate()),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> GroupElement {
        match self {
            GroupDescriptor::Integers => GroupElement::Int(BigInt::zero()),
            GroupDescriptor::Rationals => GroupElement::Rat(Rational::zero()),
            GroupDescriptor::Trivial => GroupElement::Identity,
            GroupDescriptor::LexSum(cs) => GroupElement::Tuple(cs.iter().map(|c| c.zero()).collect()),
        }
    }

    /// Whether `e` has the shape of an element of this group.
    pub fn contains(&self, e: &GroupElement) -> bool {
        match (self, e) {
            (GroupDescriptor::Integers, GroupElement::Int(_)) => true,
            (GroupDescriptor::Rationals, GroupElement::Rat(_)) => true,
            (GroupDescriptor::Trivial, GroupElement::Identity) => true,
            (GroupDescriptor::LexSum(cs), GroupElement::Tuple(xs)) => {
                cs.len() == xs.len() && cs.iter().zip(xs).all(|(c, x)| c.contains(x))
            }
            _ => false,
        }
    }

    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            GroupDescriptor::Trivial => true,
            GroupDescriptor::LexSum(cs) => cs.iter().all(|c| c.is_trivial()),
            _ => false,
        }
    }

    /// Leaf components in index order, nested lex sums expanded.
    pub fn leaves(&self) -> Vec<&GroupDescriptor> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves<'a>(&'a self, out: &mut Vec<&'a GroupDescriptor>) {
        match self {
            GroupDescriptor::LexSum(cs) => cs.iter().for_each(|c| c.push_leaves(out)),
            leaf => out.push(leaf),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            GroupDescriptor::LexSum(cs) => cs.iter().map(|c| c.leaf_count()).sum(),
            _ => 1,
        }
    }

    /// Single-level lex sum over the leaves; non-lex groups are returned as is.
    pub fn flattened(&self) -> GroupDescriptor {
        match self {
            GroupDescriptor::LexSum(_) => GroupDescriptor::LexSum(self.leaves().into_iter().cloned().collect()),
            g => g.clone(),
        }
    }

    /// Normal form used to compare descriptors up to the obvious
    /// isomorphisms: leaves flattened, trivial leaves dropped, a lex sum of
    /// one component unwrapped, and an empty result mapped to `Trivial`.
    pub fn normalized(&self) -> GroupDescriptor {
        let mut leaves: Vec<GroupDescriptor> = self.leaves().into_iter().filter(|l| !l.is_trivial()).cloned().collect();
        match leaves.len() {
            0 => GroupDescriptor::Trivial,
            1 => leaves.pop().unwrap(),
            _ => GroupDescriptor::LexSum(leaves),
        }
    }

    /// Regroups `lex(G₀, …, Gₙ₋₁)` with `n ≥ 2` as the pair
    /// `(head, Gₙ₋₁)` where `head` is `G₀` for `n = 2` and
    /// `lex(G₀, …, Gₙ₋₂)` otherwise.
    pub fn split_last(&self) -> Option<(GroupDescriptor, GroupDescriptor)> {
        match self {
            GroupDescriptor::LexSum(cs) if cs.len() >= 2 => {
                let (last, init) = cs.split_last().unwrap();
                let head = if init.len() == 1 {
                    init[0].clone()
                } else {
                    GroupDescriptor::LexSum(init.to_vec())
                };
                Some((head, last.clone()))
            }
            _ => None,
        }
    }

    /// A few small positive elements: the unit of each nontrivial leaf
    /// embedded at its coordinate, plus `1/1000` for rational leaves.
    pub fn positive_samples(&self) -> Vec<GroupElement> {
        match self {
            GroupDescriptor::Integers => alloc::vec![GroupElement::Int(BigInt::one())],
            GroupDescriptor::Rationals => alloc::vec![
                GroupElement::Rat(Rational::one()),
                GroupElement::Rat(Rational::new(BigInt::one(), BigInt::from(1000))),
            ],
            GroupDescriptor::Trivial => Vec::new(),
            GroupDescriptor::LexSum(cs) => {
                let mut out = Vec::new();
                for (i, c) in cs.iter().enumerate() {
                    for p in c.positive_samples() {
                        let mut coords: Vec<GroupElement> = cs.iter().map(|c| c.zero()).collect();
                        coords[i] = p;
                        out.push(GroupElement::Tuple(coords));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Integers => f.write_str("Z"),
            GroupDescriptor::Rationals => f.write_str("Q"),
            GroupDescriptor::Trivial => f.write_str("1"),
            GroupDescriptor::LexSum(cs) => {
                f.write_str("lex(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl GroupElement {
    pub fn int(v: i64) -> Self {
        GroupElement::Int(BigInt::from(v))
    }

    pub fn rat(numer: i64, denom: i64) -> Self {
        GroupElement::Rat(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn tuple(xs: impl IntoIterator<Item = GroupElement>) -> Self {
        GroupElement::Tuple(xs.into_iter().collect())
    }

    /// The group this element belongs to.
    pub fn descriptor(&self) -> GroupDescriptor {
        match self {
            GroupElement::Int(_) => GroupDescriptor::Integers,
            GroupElement::Rat(_) => GroupDescriptor::Rationals,
            GroupElement::Identity => GroupDescriptor::Trivial,
            GroupElement::Tuple(xs) => GroupDescriptor::LexSum(xs.iter().map(|x| x.descriptor()).collect()),
        }
    }

    pub fn same_group(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Int(_), GroupElement::Int(_))
            | (GroupElement::Rat(_), GroupElement::Rat(_))
            | (GroupElement::Identity, GroupElement::Identity) => true,
            (GroupElement::Tuple(a), GroupElement::Tuple(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_group(y))
            }
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupElement::Int(v) => v.is_zero(),
            GroupElement::Rat(v) => v.is_zero(),
            GroupElement::Identity => true,
            GroupElement::Tuple(xs) => xs.iter().all(|x| x.is_zero()),
        }
    }

    /// Sign relative to the identity.
    pub fn signum(&self) -> Ordering {
        match self {
            GroupElement::Int(v) => v.cmp(&BigInt::zero()),
            GroupElement::Rat(v) => {
                if v.is_positive() {
                    Ordering::Greater
                } else if v.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Equal
                }
            }
            GroupElement::Identity => Ordering::Equal,
            GroupElement::Tuple(xs) => xs
                .iter()
                .rev()
                .map(|x| x.signum())
                .find(|s| *s != Ordering::Equal)
                .unwrap_or(Ordering::Equal),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn try_add(&self, other: &GroupElement) -> Result<GroupElement> {
        Ok(match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) => GroupElement::Int(a + b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => GroupElement::Rat(a + b),
            (GroupElement::Identity, GroupElement::Identity) => GroupElement::Identity,
            (GroupElement::Tuple(a), GroupElement::Tuple(b)) if a.len() == b.len() => {
                GroupElement::Tuple(a.iter().zip(b).map(|(x, y)| x.try_add(y)).collect::<Result<_>>()?)
            }
            _ => return Err(Error::DescriptorMismatch),
        })
    }

    pub fn neg(&self) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(-a),
            GroupElement::Rat(a) => GroupElement::Rat(-a),
            GroupElement::Identity => GroupElement::Identity,
            GroupElement::Tuple(xs) => GroupElement::Tuple(xs.iter().map(|x| x.neg()).collect()),
        }
    }

    pub fn try_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.try_add(&other.neg())
    }

    /// `n · self` for an integer `n`.
    pub fn times(&self, n: &BigInt) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(a * n),
            GroupElement::Rat(a) => GroupElement::Rat(a * Rational::from_integer(n.clone())),
            GroupElement::Identity => GroupElement::Identity,
            GroupElement::Tuple(xs) => GroupElement::Tuple(xs.iter().map(|x| x.times(n)).collect()),
        }
    }

    /// Group order comparison; fails when the elements are from different groups.
    pub fn try_cmp(&self, other: &GroupElement) -> Result<Ordering> {
        if self.same_group(other) {
            Ok(self.cmp(other))
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    /// Leaf coordinates in index order, nested tuples expanded.
    pub fn leaves(&self) -> Vec<&GroupElement> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves<'a>(&'a self, out: &mut Vec<&'a GroupElement>) {
        match self {
            GroupElement::Tuple(xs) => xs.iter().for_each(|x| x.push_leaves(out)),
            leaf => out.push(leaf),
        }
    }

    pub fn flattened(&self) -> GroupElement {
        match self {
            GroupElement::Tuple(_) => GroupElement::Tuple(self.leaves().into_iter().cloned().collect()),
            e => e.clone(),
        }
    }

    /// Archimedean class of a nonzero element: its highest nonzero leaf.
    pub fn dominant_class(&self) -> Option<ClassId> {
        self.leaves().iter().rposition(|l| !l.is_zero()).map(ClassId)
    }

    /// Inverse of [`GroupDescriptor::split_last`] at the element level.
    pub fn split_last(&self) -> Option<(GroupElement, GroupElement)> {
        match self {
            GroupElement::Tuple(xs) if xs.len() >= 2 => {
                let (last, init) = xs.split_last().unwrap();
                let head = if init.len() == 1 {
                    init[0].clone()
                } else {
                    GroupElement::Tuple(init.to_vec())
                };
                Some((head, last.clone()))
            }
            _ => None,
        }
    }

    /// Reassembles `(head, last)` into a tuple with `arity` components.
    pub fn join_last(head: GroupElement, last: GroupElement, arity: usize) -> Result<GroupElement> {
        if arity == 2 {
            return Ok(GroupElement::Tuple(alloc::vec![head, last]));
        }
        match head {
            GroupElement::Tuple(mut xs) if xs.len() + 1 == arity => {
                xs.push(last);
                Ok(GroupElement::Tuple(xs))
            }
            _ => Err(Error::DescriptorMismatch),
        }
    }
}

/// Total order: the group order between elements of the same group.
/// Elements of different groups are ordered by shape, which only serves to
/// make the type usable as a map key.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(e: &GroupElement) -> u8 {
            match e {
                GroupElement::Int(_) => 0,
                GroupElement::Rat(_) => 1,
                GroupElement::Identity => 2,
                GroupElement::Tuple(_) => 3,
            }
        }
        match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) => a.cmp(b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => a.cmp(b),
            (GroupElement::Identity, GroupElement::Identity) => Ordering::Equal,
            (GroupElement::Tuple(a), GroupElement::Tuple(b)) => a.len().cmp(&b.len()).then_with(|| {
                a.iter()
                    .rev()
                    .zip(b.iter().rev())
                    .map(|(x, y)| x.cmp(y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            }),
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Int(v) => write!(f, "{v}"),
            GroupElement::Rat(v) => write!(f, "{v}"),
            GroupElement::Identity => f.write_str("0"),
            GroupElement::Tuple(xs) => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub fn group_add(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.try_add(b)
}

pub fn group_cmp(a: &GroupElement, b: &GroupElement) -> Result<Ordering> {
    a.try_cmp(b)
}

/// `⊞` over the finite index set `0..n`.
pub fn box_sum(components: Vec<GroupDescriptor>) -> Result<GroupDescriptor> {
    if components.is_empty() {
        return Err(Error::EmptyList);
    }
    let g = GroupDescriptor::LexSum(components);
    g.validate()?;
    Ok(g)
}

/// Archimedean equivalence of two positive elements, decided by comparing
/// dominant coordinates. Exact for every structured group.
pub fn group_archimedean_equiv(a: &GroupElement, b: &GroupElement) -> Result<ArchimedeanEquivalence> {
    if !a.same_group(b) {
        return Err(Error::DescriptorMismatch);
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::NonPositiveInput);
    }
    Ok(if a.dominant_class() == b.dominant_class() {
        ArchimedeanEquivalence::Equivalent
    } else {
        ArchimedeanEquivalence::Inequivalent
    })
}

/// The Archimedean classes of `G^{>0}`, smallest first. Each nontrivial
/// leaf contributes one class; trivial leaves contribute none.
pub fn group_classes(g: &GroupDescriptor) -> Result<Vec<ClassId>> {
    g.validate()?;
    Ok(g.leaves()
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_trivial())
        .map(|(i, _)| ClassId(i))
        .collect())
}
