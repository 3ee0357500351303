//! Subsets and set families on a small ground set, encoded at the bit level.
//!
//! A subset of an `n`-element ground set is an `n`-bit mask (element `i` is in
//! the set iff bit `i` is set). A family of subsets is a bit-vector of length
//! `2^n` indexed by mask value, so membership tests are O(1) and whole-family
//! scans are cache-friendly. Families consist of non-empty sets: the bit for
//! the empty mask is always clear.
//!
//! The module provides the three predicates the rest of the crate is built
//! on: *upfamily* (closed under supersets), *linked* (every two members
//! intersect) and *maximal linked* (a linked upfamily contained in no larger
//! one). Maximal linked families are exactly the self-dual monotone set
//! predicates: for every `A`, exactly one of `A`, `X∖A` is a member.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on ground-set size for family operations (bit-vectors of 2^n).
pub const MAX_GROUND: usize = 12;
/// Hard cap on ground-set size for enumeration of maximal linked families.
pub const MAX_ENUM_GROUND: usize = 7;

/// A finite ground set of `n` labelled points, `1 ≤ n ≤ 12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge { n, max: MAX_GROUND });
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<Self> {
        let mut ground = Self::new(n)?;
        if labels.len() != n {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels, got {}",
                n,
                labels.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            for b in labels.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::InvalidLabels(format!("duplicate label {a:?}")));
                }
            }
        }
        ground.labels = Some(labels);
        Ok(ground)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask with all `n` bits set.
    pub fn universe(&self) -> SubsetMask {
        SubsetMask(((1u64 << self.n) - 1) as u32)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }
}

/// A subset of the ground set, element `i` ↔ bit `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_elements(elements: &[usize]) -> Self {
        let mut bits = 0u32;
        for &e in elements {
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> element & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & (((1u64 << n) - 1) as u32))
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Compact rendering: `023` for {0,2,3} on small unlabelled grounds,
    /// `{a,c}` when labels are present or elements exceed one digit.
    pub fn display(self, ground: &GroundSet) -> String {
        if ground.labels.is_none() && ground.n <= 10 {
            self.elements().map(|e| e.to_string()).collect()
        } else {
            let inner: Vec<String> = self.elements().map(|e| ground.label(e)).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

fn words_for(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

/// A family of non-empty subsets, stored as a bit-vector over mask values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: usize,
    words: Vec<u64>,
}

impl Family {
    pub fn empty(ground: &GroundSet) -> Self {
        Family {
            n: ground.n,
            words: vec![0; words_for(ground.n)],
        }
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        Family { n, words }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        let m = mask.0 as usize;
        self.words[m / 64] >> (m % 64) & 1 == 1
    }

    pub fn insert(&mut self, mask: SubsetMask) -> Result<()> {
        if mask.is_empty() {
            return Err(Error::EmptyBaseSet);
        }
        self.check_mask(mask)?;
        let m = mask.0 as usize;
        self.words[m / 64] |= 1 << (m % 64);
        Ok(())
    }

    fn check_mask(&self, mask: SubsetMask) -> Result<()> {
        if (mask.0 as u64) >= (1u64 << self.n) {
            return Err(Error::MaskOutOfRange {
                mask: mask.0,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterate member masks in ascending numeric order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0u32..(1u32 << self.n)).map(SubsetMask).filter(|&m| self.contains(m))
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// The upfamily generated by `base`: all supersets of some base set.
    pub fn up_closure(base: &[SubsetMask], ground: &GroundSet) -> Result<Self> {
        let mut fam = Family::empty(ground);
        for &b in base {
            if b.is_empty() {
                return Err(Error::EmptyBaseSet);
            }
            fam.check_mask(b)?;
        }
        for m in 0u32..(1u32 << ground.n) {
            let mask = SubsetMask(m);
            if base.iter().any(|&b| b.is_subset_of(mask)) {
                fam.insert(mask)?;
            }
        }
        Ok(fam)
    }

    pub fn is_upward_closed(&self) -> bool {
        let full = ((1u64 << self.n) - 1) as u32;
        for m in self.members() {
            let mut rest = full & !m.0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !self.contains(SubsetMask(m.0 | bit)) {
                    return false;
                }
                rest &= rest - 1;
            }
        }
        true
    }

    /// Every two members intersect.
    pub fn is_linked(&self) -> bool {
        let members: Vec<SubsetMask> = if self.is_upward_closed() {
            match self.minimal_sets() {
                Ok(m) => m,
                Err(_) => self.members().collect(),
            }
        } else {
            self.members().collect()
        };
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Exactly one of `A`, `X∖A` is a member, for every `A`.
    pub fn is_self_dual(&self) -> bool {
        for m in 0u32..(1u32 << self.n) {
            let a = SubsetMask(m);
            if self.contains(a) == self.contains(a.complement(self.n)) {
                return false;
            }
        }
        true
    }

    /// Fast maximality test: upward closed, linked, and covering (for every
    /// `A` at least one of `A`, `X∖A` is a member). Together with linkedness
    /// the covering condition is exactly self-duality.
    pub fn is_maximal_linked(&self) -> bool {
        if self.contains(SubsetMask::EMPTY) {
            return false;
        }
        if !self.is_upward_closed() || !self.is_linked() {
            return false;
        }
        for m in 0u32..(1u32 << self.n) {
            let a = SubsetMask(m);
            if !self.contains(a) && !self.contains(a.complement(self.n)) {
                return false;
            }
        }
        true
    }

    /// Definitional maximality test: a linked upfamily to which no non-member
    /// can be added without breaking linkedness. Slow; used as an oracle
    /// against [`Family::is_maximal_linked`].
    pub fn is_maximal_linked_definitional(&self) -> bool {
        if self.contains(SubsetMask::EMPTY) || !self.is_upward_closed() || !self.is_linked() {
            return false;
        }
        let minimal = match self.minimal_sets() {
            Ok(m) => m,
            Err(_) => return false,
        };
        for m in 1u32..(1u32 << self.n) {
            let candidate = SubsetMask(m);
            if self.contains(candidate) {
                continue;
            }
            // Adding `candidate` keeps the family linked iff it meets every
            // member; maximality requires that no candidate does.
            if minimal.iter().all(|&a| a.intersects(candidate)) {
                return false;
            }
        }
        true
    }

    /// Inclusion-minimal members, sorted ascending by (cardinality, mask).
    pub fn minimal_sets(&self) -> Result<Vec<SubsetMask>> {
        if !self.is_upward_closed() {
            return Err(Error::NotUpwardClosed);
        }
        let mut mins: Vec<SubsetMask> = Vec::new();
        for m in self.members() {
            let mut is_min = true;
            let mut rest = m.0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if self.contains(SubsetMask(m.0 & !bit)) {
                    is_min = false;
                    break;
                }
                rest &= rest - 1;
            }
            if is_min {
                mins.push(m);
            }
        }
        mins.sort_by_key(|m| (m.len(), m.0));
        Ok(mins)
    }
}

/// A maximal linked upfamily, stored as its membership bit-vector plus the
/// sorted list of inclusion-minimal members.
#[derive(Debug, Clone)]
pub struct MaxLinkedFamily {
    family: Family,
    minimal: Vec<SubsetMask>,
}

impl PartialEq for MaxLinkedFamily {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for MaxLinkedFamily {}

impl std::hash::Hash for MaxLinkedFamily {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.family.hash(state);
    }
}

impl PartialOrd for MaxLinkedFamily {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaxLinkedFamily {
    /// Canonical order: ascending numeric value of the membership bit-vector.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.family
            .n
            .cmp(&other.family.n)
            .then_with(|| {
                let a = self.family.words.iter().rev();
                let b = other.family.words.iter().rev();
                a.cmp(b)
            })
    }
}

impl MaxLinkedFamily {
    /// Assemble from parts already known to satisfy the invariants
    /// (enumeration constructs families valid by construction).
    pub(crate) fn from_validated_parts(family: Family, minimal: Vec<SubsetMask>) -> Self {
        MaxLinkedFamily { family, minimal }
    }

    /// Validate a family as maximal linked and canonicalize it.
    pub fn try_from_family(family: Family) -> Result<Self> {
        if !family.is_maximal_linked() {
            return Err(Error::NotMaximal);
        }
        let minimal = family.minimal_sets()?;
        Ok(MaxLinkedFamily { family, minimal })
    }

    /// Up-close `base` and validate the result as maximal linked.
    pub fn from_base(base: &[SubsetMask], ground: &GroundSet) -> Result<Self> {
        Self::try_from_family(Family::up_closure(base, ground)?)
    }

    /// The principal ultrafilter ⟨{x}⟩: all sets containing `x`.
    pub fn principal(x: usize, ground: &GroundSet) -> Result<Self> {
        if x >= ground.n {
            return Err(Error::MaskOutOfRange {
                mask: 1 << x,
                n: ground.n,
            });
        }
        Self::from_base(&[SubsetMask(1 << x)], ground)
    }

    pub fn n(&self) -> usize {
        self.family.n
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.family.contains(mask)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn minimal_sets(&self) -> &[SubsetMask] {
        &self.minimal
    }

    /// True iff the family is ⟨{x}⟩ for some point `x`, in which case that
    /// point is returned.
    pub fn principal_point(&self) -> Option<usize> {
        if self.minimal.len() == 1 && self.minimal[0].len() == 1 {
            Some(self.minimal[0].0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Membership bit-vector words, least-significant word first.
    pub fn words(&self) -> &[u64] {
        self.family.words()
    }

    /// Generator-list rendering in the ⟨..⟩ notation.
    pub fn display(&self, ground: &GroundSet) -> String {
        let gens: Vec<String> = self.minimal.iter().map(|m| m.display(ground)).collect();
        format!("⟨{}⟩", gens.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn masks(sets: &[&[usize]]) -> Vec<SubsetMask> {
        sets.iter().map(|s| SubsetMask::from_elements(s)).collect()
    }

    #[test]
    fn ground_set_bounds() {
        assert!(matches!(GroundSet::new(0), Err(Error::EmptyGroundSet)));
        assert!(matches!(
            GroundSet::new(13),
            Err(Error::GroundTooLarge { .. })
        ));
        assert_eq!(ground(12).universe().bits(), 0xfff);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = GroundSet::with_labels(2, vec!["a".into(), "a".into()]);
        assert!(matches!(err, Err(Error::InvalidLabels(_))));
    }

    #[test]
    fn up_closure_of_pairs_on_three_points() {
        // ⟨{0,1},{0,2},{1,2}⟩ = all subsets of size ≥ 2.
        let g = ground(3);
        let fam = Family::up_closure(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), &g).unwrap();
        let expect: Vec<u32> = (0u32..8).filter(|m| m.count_ones() >= 2).collect();
        let got: Vec<u32> = fam.members().map(|m| m.0).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn up_closure_principal() {
        let g = ground(3);
        let fam = Family::up_closure(&masks(&[&[0]]), &g).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(fam.members().all(|m| m.contains(0)));
    }

    #[test]
    fn up_closure_two_disjoint_pairs() {
        // Brute-force oracle: supersets of {0,1} or {2,3} among the 16 masks.
        let g = ground(4);
        let fam = Family::up_closure(&masks(&[&[0, 1], &[2, 3]]), &g).unwrap();
        let brute = (0u32..16)
            .filter(|&m| (m & 0b0011) == 0b0011 || (m & 0b1100) == 0b1100)
            .count();
        assert_eq!(brute, 7);
        assert_eq!(fam.len(), brute);
    }

    #[test]
    fn up_closure_rejects_empty_base() {
        let g = ground(3);
        assert!(matches!(
            Family::up_closure(&[SubsetMask::EMPTY], &g),
            Err(Error::EmptyBaseSet)
        ));
        assert!(matches!(
            Family::up_closure(&[SubsetMask(0b1000)], &g),
            Err(Error::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn up_closure_idempotent() {
        let g = ground(4);
        let fam = Family::up_closure(&masks(&[&[0, 1], &[1, 2], &[3]]), &g).unwrap();
        let again = Family::up_closure(&fam.minimal_sets().unwrap(), &g).unwrap();
        assert_eq!(fam, again);
    }

    #[test]
    fn linkedness() {
        let g3 = ground(3);
        let tri = Family::up_closure(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), &g3).unwrap();
        assert!(tri.is_linked());

        let g2 = ground(2);
        let disj = Family::up_closure(&masks(&[&[0], &[1]]), &g2).unwrap();
        assert!(!disj.is_linked());

        let g4 = ground(4);
        let pairs = Family::up_closure(&masks(&[&[0, 1], &[2, 3]]), &g4).unwrap();
        assert!(!pairs.is_linked());
    }

    #[test]
    fn maximal_linked_cases() {
        let g = ground(3);
        let tri = Family::up_closure(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), &g).unwrap();
        assert!(tri.is_maximal_linked());

        let principal = Family::up_closure(&masks(&[&[0]]), &g).unwrap();
        assert!(principal.is_maximal_linked());

        // ⟨{0,1}⟩ can still be extended (e.g. by {0,2}).
        let single = Family::up_closure(&masks(&[&[0, 1]]), &g).unwrap();
        assert!(!single.is_maximal_linked());
        assert!(!single.is_maximal_linked_definitional());
    }

    #[test]
    fn minimal_sets_roundtrip_and_order() {
        let g = ground(3);
        let tri = Family::up_closure(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), &g).unwrap();
        assert_eq!(
            tri.minimal_sets().unwrap(),
            masks(&[&[0, 1], &[0, 2], &[1, 2]])
        );

        let principal = Family::up_closure(&masks(&[&[0]]), &g).unwrap();
        assert_eq!(principal.minimal_sets().unwrap(), masks(&[&[0]]));

        // All sets of size ≥ 3 on five points: ten 3-element minimal sets.
        let g5 = ground(5);
        let mut base = Vec::new();
        for m in 0u32..32 {
            if m.count_ones() == 3 {
                base.push(SubsetMask(m));
            }
        }
        let zfam = Family::up_closure(&base, &g5).unwrap();
        let mins = zfam.minimal_sets().unwrap();
        assert_eq!(mins.len(), 10);
        assert!(mins.iter().all(|m| m.len() == 3));
    }

    #[test]
    fn minimal_sets_requires_upward_closure() {
        let g = ground(3);
        let mut fam = Family::empty(&g);
        fam.insert(SubsetMask(0b011)).unwrap();
        assert!(matches!(fam.minimal_sets(), Err(Error::NotUpwardClosed)));
    }

    #[test]
    fn fast_maximality_agrees_with_definition_exhaustively() {
        // All upward-closed linked families on up to 4 points.
        for n in 1..=4usize {
            let g = ground(n);
            let total = 1u64 << (1 << n);
            for code in 0..total {
                if code & 1 == 1 {
                    continue; // contains the empty set
                }
                let mut fam = Family::empty(&g);
                for m in 1u32..(1 << n) {
                    if code >> m & 1 == 1 {
                        fam.insert(SubsetMask(m)).unwrap();
                    }
                }
                if !fam.is_upward_closed() || !fam.is_linked() {
                    continue;
                }
                assert_eq!(
                    fam.is_maximal_linked(),
                    fam.is_maximal_linked_definitional(),
                    "disagreement on n={n} code={code:#x}"
                );
            }
        }
    }

    #[test]
    fn principal_families_maximal_up_to_seven() {
        for n in 1..=7usize {
            let g = ground(n);
            for x in 0..n {
                let p = MaxLinkedFamily::principal(x, &g).unwrap();
                assert!(p.family().is_maximal_linked());
                assert_eq!(p.principal_point(), Some(x));
            }
        }
    }

    #[test]
    fn display_notation() {
        let g = ground(5);
        let fam = MaxLinkedFamily::from_base(&masks(&[&[0, 2], &[0, 3], &[2, 3]]), &g).unwrap();
        assert_eq!(fam.display(&g), "⟨02,03,23⟩");
    }

    proptest! {
        #[test]
        fn self_duality_of_validated_families(seed in 0u64..5000) {
            // Pseudo-random base sets on 5 points; whenever the up-closure
            // happens to be maximal linked, it must be exactly self-dual.
            let g = ground(5);
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            let mut base = Vec::new();
            for _ in 0..3 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let m = ((state >> 33) as u32 % 31) + 1;
                base.push(SubsetMask(m));
            }
            let fam = Family::up_closure(&base, &g).unwrap();
            if fam.is_maximal_linked() {
                prop_assert!(fam.is_self_dual());
                for m in 0u32..32 {
                    let a = SubsetMask(m);
                    prop_assert!(fam.contains(a) ^ fam.contains(a.complement(5)));
                }
            }
        }

        #[test]
        fn up_closure_of_minimal_sets_is_identity(seed in 0u64..5000) {
            let g = ground(6);
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(7);
            let mut base = Vec::new();
            for _ in 0..4 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let m = ((state >> 33) as u32 % 63) + 1;
                base.push(SubsetMask(m));
            }
            let fam = Family::up_closure(&base, &g).unwrap();
            let mins = fam.minimal_sets().unwrap();
            let again = Family::up_closure(&mins, &g).unwrap();
            prop_assert_eq!(fam, again);
        }
    }
}
