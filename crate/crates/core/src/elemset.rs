//! Dense bitsets over a ring carrier.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A ring element, as a dense 0-based index into the carrier of its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subset of a carrier `{0, .., universe - 1}`.
///
/// Ordering is by cardinality first, then lexicographic on the sorted
/// element indices, which is the canonical order used for ideal lattices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
    universe: u32,
}

impl ElemSet {
    pub fn empty(universe: u32) -> Self {
        ElemSet {
            words: vec![0; (universe as usize).div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: u32) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(Elem(i));
        }
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(universe: u32, elems: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> u32 {
        self.universe
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        let i = e.index();
        i < self.universe as usize && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    /// Inserts `e`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        let i = e.index();
        assert!(i < self.universe as usize, "element {i} outside carrier");
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, e: Elem) {
        let i = e.index();
        if i < self.universe as usize {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(Elem(wi as u32 * 64 + bit))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &ElemSet, op: impl Fn(u64, u64) -> u64) -> ElemSet {
        assert_eq!(self.universe, other.universe, "sets over different carriers");
        ElemSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
            universe: self.universe,
        }
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = ElemSet::empty(130);
        assert!(s.insert(Elem(0)));
        assert!(s.insert(Elem(129)));
        assert!(!s.insert(Elem(129)));
        assert!(s.contains(Elem(129)));
        assert!(!s.contains(Elem(64)));
        assert_eq!(s.to_vec(), vec![Elem(0), Elem(129)]);
        s.remove(Elem(0));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = ElemSet::from_elems(10, [Elem(0), Elem(9)]);
        let b = ElemSet::from_elems(10, [Elem(0), Elem(3), Elem(6)]);
        let c = ElemSet::from_elems(10, [Elem(0), Elem(5)]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(xs in proptest::collection::vec(0u32..200, 0..60),
                                        ys in proptest::collection::vec(0u32..200, 0..60)) {
            use std::collections::BTreeSet;
            let a = ElemSet::from_elems(200, xs.iter().map(|&x| Elem(x)));
            let b = ElemSet::from_elems(200, ys.iter().map(|&x| Elem(x)));
            let sa: BTreeSet<u32> = xs.iter().copied().collect();
            let sb: BTreeSet<u32> = ys.iter().copied().collect();
            let got: Vec<u32> = a.union(&b).iter().map(|e| e.0).collect();
            prop_assert_eq!(got, sa.union(&sb).copied().collect::<Vec<_>>());
            let got: Vec<u32> = a.intersection(&b).iter().map(|e| e.0).collect();
            prop_assert_eq!(got, sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
            prop_assert_eq!(a.len(), sa.len());
        }
    }
}
