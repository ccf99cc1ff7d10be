//! Slow reference implementations for cross-checking.
//!
//! Nothing here touches [`crate::series`]: polynomials are unsorted lists
//! of `(exponent, rational)` pairs with duplicates allowed, and every
//! question is answered by first collecting like terms. Only exact data is
//! handled.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupElement};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaivePoly {
    pub group: GroupDescriptor,
    pub terms: Vec<(GroupElement, Rational)>,
}

impl NaivePoly {
    pub fn new(group: GroupDescriptor, terms: Vec<(GroupElement, Rational)>) -> Self {
        NaivePoly { group, terms }
    }

    pub fn zero(group: &GroupDescriptor) -> Self {
        NaivePoly::new(group.clone(), Vec::new())
    }

    pub fn constant(group: &GroupDescriptor, c: Rational) -> Self {
        NaivePoly::new(group.clone(), alloc::vec![(group.zero(), c)])
    }

    pub fn scaled(&self, c: &Rational) -> NaivePoly {
        NaivePoly::new(
            self.group.clone(),
            self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        )
    }

    pub fn negated(&self) -> NaivePoly {
        self.scaled(&-Rational::one())
    }

    /// Like terms summed, zeros removed, largest exponent first.
    pub fn collect(&self) -> Vec<(GroupElement, Rational)> {
        let mut sorted = self.terms.clone();
        sorted.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(GroupElement, Rational)> = Vec::with_capacity(sorted.len());
        for (e, a) in sorted {
            match out.last_mut() {
                Some((f, b)) if *f == e => *b += a,
                _ => out.push((e, a)),
            }
        }
        out.retain(|(_, a)| !a.is_zero());
        out
    }

    /// Largest exponent with a nonzero net coefficient.
    pub fn leading(&self) -> Option<(GroupElement, Rational)> {
        let collected = self.collect();
        let mut best: Option<&(GroupElement, Rational)> = None;
        for t in &collected {
            if best.is_none_or(|b| t.0 > b.0) {
                best = Some(t);
            }
        }
        best.cloned()
    }

    pub fn sign(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some((_, a)) if a.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

fn same_group(p: &NaivePoly, q: &NaivePoly) -> Result<()> {
    if p.group == q.group {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

pub fn naive_add(p: &NaivePoly, q: &NaivePoly) -> Result<NaivePoly> {
    same_group(p, q)?;
    let mut terms = p.terms.clone();
    terms.extend(q.terms.iter().cloned());
    Ok(NaivePoly::new(p.group.clone(), terms))
}

pub fn naive_sub(p: &NaivePoly, q: &NaivePoly) -> Result<NaivePoly> {
    naive_add(p, &q.negated())
}

/// Schoolbook convolution.
pub fn naive_mul(p: &NaivePoly, q: &NaivePoly) -> Result<NaivePoly> {
    same_group(p, q)?;
    let mut terms = Vec::with_capacity(p.terms.len() * q.terms.len());
    for (e, a) in &p.terms {
        for (f, b) in &q.terms {
            terms.push((e.try_add(f)?, a * b));
        }
    }
    Ok(NaivePoly::new(p.group.clone(), terms))
}

pub fn naive_cmp(p: &NaivePoly, q: &NaivePoly) -> Result<Ordering> {
    Ok(naive_sub(p, q)?.sign())
}

/// The first `depth + 1` terms of `1/p`, largest exponent first, obtained by
/// long division: each new quotient term cancels the leading term of the
/// running remainder of `1 - p·q`.
pub fn naive_inverse_solve(p: &NaivePoly, depth: usize) -> Result<NaivePoly> {
    let (e0, c0) = p.leading().ok_or(Error::ZeroLeading)?;
    let neg_e0 = e0.neg();
    let mut quotient = Vec::new();
    let mut remainder = NaivePoly::constant(&p.group, Rational::one());
    for _ in 0..=depth {
        // the remainder is kept collected, so its first term leads
        let Some((er, cr)) = remainder.terms.first().cloned() else {
            break;
        };
        let term = (er.try_add(&neg_e0)?, cr / &c0);
        let step = naive_mul(&NaivePoly::new(p.group.clone(), alloc::vec![term.clone()]), p)?;
        remainder = NaivePoly::new(p.group.clone(), naive_sub(&remainder, &step)?.collect());
        quotient.push(term);
    }
    Ok(NaivePoly::new(p.group.clone(), quotient))
}

/// Smallest `k ≤ bound` with `k·a > b` and `a < k·b`, reported as `(k, k)`.
///
/// Both conditions are monotone in `k`, so the search bisects `1..=bound`.
pub fn bounded_mn_search(a: &NaivePoly, b: &NaivePoly, bound: u64) -> Result<Option<(u64, u64)>> {
    if a.sign() != Ordering::Greater || b.sign() != Ordering::Greater {
        return Err(Error::NonPositiveInput);
    }
    let holds = |k: u64| -> Result<bool> {
        let k = Rational::from_integer(BigInt::from(k));
        Ok(naive_cmp(&a.scaled(&k), b)? == Ordering::Greater && naive_cmp(a, &b.scaled(&k))? == Ordering::Less)
    };
    if bound == 0 || !holds(bound)? {
        return Ok(None);
    }
    let (mut lo, mut hi) = (1, bound);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if holds(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some((lo, lo)))
}

/// Linear search for `k ≤ bound` with `k·a > b` and `a < k·b` inside a group.
pub fn bounded_group_search(a: &GroupElement, b: &GroupElement, bound: u64) -> Result<Option<(u64, u64)>> {
    if !a.same_group(b) {
        return Err(Error::DescriptorMismatch);
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::NonPositiveInput);
    }
    for k in 1..=bound {
        let kb = BigInt::from(k);
        if a.times(&kb) > *b && *a < b.times(&kb) {
            return Ok(Some((k, k)));
        }
    }
    Ok(None)
}

/// Whether `y` lies in every ball `β(x, r/2^i)` for `i < depth`.
pub fn swing_sweep_member(x: &NaivePoly, r: &NaivePoly, y: &NaivePoly, depth: usize) -> Result<bool> {
    if r.sign() != Ordering::Greater {
        return Err(Error::NonPositiveInput);
    }
    let mut d = naive_sub(x, y)?;
    if d.sign() == Ordering::Less {
        d = d.negated();
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut radius = r.clone();
    for _ in 0..depth {
        if naive_cmp(&d, &radius)? != Ordering::Less {
            return Ok(false);
        }
        radius = radius.scaled(&half);
    }
    Ok(true)
}
