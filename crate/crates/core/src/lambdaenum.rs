//! Enumeration and counting of maximal linked families.
//!
//! A maximal linked family on `n` points is the same thing as a self-dual
//! monotone assignment over the `2^n` subset masks: for every complement pair
//! `{A, X∖A}` exactly one side is a member, and membership is closed under
//! supersets. The search therefore branches over complement pairs. Deciding
//! `A` *in* forces every superset of `A` in and (by duality) every subset of
//! `X∖A` out; a single `u128` per side holds the whole assignment for
//! `n ≤ 7`, so propagation is two ORs and a conflict test.
//!
//! Counts for `n = 1..7` are 1, 2, 4, 12, 81, 2646, 1422564.

use crate::error::{Error, Result};
use crate::setfam::{Family, GroundSet, MaxLinkedFamily, SubsetMask, MAX_ENUM_GROUND};
use rayon::prelude::*;
use std::fs;
use std::path::Path;

/// Branch depth at which the search tree is split into independent subtasks.
pub const DEFAULT_SPLIT_DEPTH: usize = 8;

const CACHE_MAGIC: &[u8; 4] = b"LMLF";
const CACHE_VERSION: u16 = 1;

/// Precomputed closure tables for one ground size.
struct SearchTables {
    full: u32,
    /// Pair representatives in decision order: sorted by (cardinality of the
    /// smaller side, numeric value of that side). Small sets constrain most.
    reps: Vec<u32>,
    /// `sup[m]`: bitset over masks of all supersets of `m` (including `m`).
    sup: Vec<u128>,
    /// `sub[m]`: bitset over masks of all subsets of `m` (including `m`).
    sub: Vec<u128>,
}

impl SearchTables {
    fn new(n: usize) -> Self {
        let size = 1usize << n;
        let full = (size - 1) as u32;
        let mut sup = vec![0u128; size];
        let mut sub = vec![0u128; size];
        for m in (0..size).rev() {
            let mut acc = 1u128 << m;
            for i in 0..n {
                if m >> i & 1 == 0 {
                    acc |= sup[m | 1 << i];
                }
            }
            sup[m] = acc;
        }
        for m in 0..size {
            let mut acc = 1u128 << m;
            for i in 0..n {
                if m >> i & 1 == 1 {
                    acc |= sub[m & !(1 << i)];
                }
            }
            sub[m] = acc;
        }
        let mut reps: Vec<u32> = Vec::new();
        for m in 1..size as u32 {
            let c = full ^ m;
            let (rep_side, other) = if (m.count_ones(), m) <= (c.count_ones(), c) {
                (m, c)
            } else {
                (c, m)
            };
            if rep_side == m && other != m {
                reps.push(m);
            }
        }
        reps.sort_by_key(|&m| (m.count_ones(), m));
        SearchTables { full, reps, sup, sub }
    }

    fn initial(&self) -> (u128, u128) {
        // The full set is always in, the empty set always out.
        (1u128 << self.full, 1u128)
    }

    /// Decide that side `s` of a pair is a member. Returns the propagated
    /// state, or None on contradiction.
    fn decide(&self, in_bits: u128, out_bits: u128, s: u32) -> Option<(u128, u128)> {
        let ni = in_bits | self.sup[s as usize];
        let no = out_bits | self.sub[(self.full ^ s) as usize];
        if ni & no == 0 {
            Some((ni, no))
        } else {
            None
        }
    }

    fn count_from(&self, mut idx: usize, in_bits: u128, out_bits: u128) -> u64 {
        let decided = in_bits | out_bits;
        while idx < self.reps.len() {
            let r = self.reps[idx];
            if decided >> r & 1 == 1 {
                idx += 1;
                continue;
            }
            let mut total = 0;
            for s in [r, self.full ^ r] {
                if let Some((ni, no)) = self.decide(in_bits, out_bits, s) {
                    total += self.count_from(idx + 1, ni, no);
                }
            }
            return total;
        }
        1
    }

    fn collect_from(&self, mut idx: usize, in_bits: u128, out_bits: u128, out: &mut Vec<u128>) {
        let decided = in_bits | out_bits;
        while idx < self.reps.len() {
            let r = self.reps[idx];
            if decided >> r & 1 == 1 {
                idx += 1;
                continue;
            }
            for s in [r, self.full ^ r] {
                if let Some((ni, no)) = self.decide(in_bits, out_bits, s) {
                    self.collect_from(idx + 1, ni, no, out);
                }
            }
            return;
        }
        out.push(in_bits);
    }

    /// States after the first `depth` branch decisions, in deterministic
    /// order. Fully decided assignments are returned as-is.
    fn prefix_states(&self, depth: usize) -> Vec<(usize, u128, u128)> {
        let mut states = Vec::new();
        let (i0, o0) = self.initial();
        self.prefix_rec(0, i0, o0, depth, &mut states);
        states
    }

    fn prefix_rec(
        &self,
        mut idx: usize,
        in_bits: u128,
        out_bits: u128,
        depth: usize,
        states: &mut Vec<(usize, u128, u128)>,
    ) {
        if depth == 0 {
            states.push((idx, in_bits, out_bits));
            return;
        }
        let decided = in_bits | out_bits;
        while idx < self.reps.len() {
            let r = self.reps[idx];
            if decided >> r & 1 == 1 {
                idx += 1;
                continue;
            }
            for s in [r, self.full ^ r] {
                if let Some((ni, no)) = self.decide(in_bits, out_bits, s) {
                    self.prefix_rec(idx + 1, ni, no, depth - 1, states);
                }
            }
            return;
        }
        states.push((idx, in_bits, out_bits));
    }
}

fn check_enum_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_ENUM_GROUND {
        return Err(Error::GroundTooLarge {
            n,
            max: MAX_ENUM_GROUND,
        });
    }
    Ok(())
}

/// λ(n) without materializing the families. The result does not depend on
/// the worker count; subtasks are merged by plain summation.
pub fn count_lambda(n: usize, workers: usize) -> Result<u64> {
    count_lambda_split(n, workers, DEFAULT_SPLIT_DEPTH)
}

/// As [`count_lambda`], with an explicit tree-splitting depth.
pub fn count_lambda_split(n: usize, workers: usize, split_depth: usize) -> Result<u64> {
    check_enum_size(n)?;
    let tables = SearchTables::new(n);
    let workers = workers.max(1);
    if workers == 1 {
        let (i0, o0) = tables.initial();
        return Ok(tables.count_from(0, i0, o0));
    }
    let states = tables.prefix_states(split_depth);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidTable(format!("thread pool: {e}")))?;
    let total = pool.install(|| {
        states
            .par_iter()
            .map(|&(idx, i, o)| tables.count_from(idx, i, o))
            .sum()
    });
    Ok(total)
}

/// Membership bit-vectors of all maximal linked families on `n` points,
/// sorted ascending. Bit `m` of a vector is the membership of mask `m`.
pub fn enumerate_lambda_bits(n: usize) -> Result<Vec<u128>> {
    check_enum_size(n)?;
    let tables = SearchTables::new(n);
    let mut bits = Vec::new();
    let (i0, o0) = tables.initial();
    tables.collect_from(0, i0, o0, &mut bits);
    bits.sort_unstable();
    Ok(bits)
}

/// Materialize one family from its membership bit-vector (bit `m` ↔ mask `m`).
pub fn family_from_bits(n: usize, bits: u128) -> MaxLinkedFamily {
    let words = if n == 7 {
        vec![bits as u64, (bits >> 64) as u64]
    } else {
        vec![bits as u64]
    };
    let family = Family::from_words(n, words);
    let mut minimal: Vec<SubsetMask> = Vec::new();
    for m in 1u32..(1u32 << n) {
        if bits >> m & 1 == 0 {
            continue;
        }
        let mut is_min = true;
        let mut rest = m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if bits >> (m & !bit) & 1 == 1 {
                is_min = false;
                break;
            }
            rest &= rest - 1;
        }
        if is_min {
            minimal.push(SubsetMask(m));
        }
    }
    minimal.sort_by_key(|m| (m.len(), m.0));
    MaxLinkedFamily::from_validated_parts(family, minimal)
}

/// Every maximal linked family on the ground set, exactly once, in canonical
/// (ascending bit-vector) order.
pub fn enumerate_lambda(ground: &GroundSet) -> Result<Vec<MaxLinkedFamily>> {
    let n = ground.n();
    let bits = enumerate_lambda_bits(n)?;
    let families: Vec<MaxLinkedFamily> =
        bits.into_iter().map(|b| family_from_bits(n, b)).collect();
    if n <= 5 {
        for fam in &families {
            debug_assert!(fam.family().is_maximal_linked());
            if !fam.family().is_maximal_linked() {
                return Err(Error::NotMaximal);
            }
        }
    }
    Ok(families)
}

/// The enumerated families for one ground size, in canonical order, ready to
/// be persisted.
pub struct LambdaCache {
    n: usize,
    bits: Vec<u128>,
}

impl LambdaCache {
    pub fn build(n: usize) -> Result<Self> {
        Ok(LambdaCache {
            n,
            bits: enumerate_lambda_bits(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn families(&self) -> Vec<MaxLinkedFamily> {
        self.bits
            .iter()
            .map(|&b| family_from_bits(self.n, b))
            .collect()
    }

    fn family_bytes(&self) -> usize {
        (1usize << self.n).div_ceil(8)
    }

    fn payload(&self) -> Vec<u8> {
        let fb = self.family_bytes();
        let mut payload = Vec::with_capacity(self.bits.len() * fb);
        for &b in &self.bits {
            payload.extend_from_slice(&b.to_le_bytes()[..fb]);
        }
        payload
    }

    /// FNV-1a 64 checksum over the membership payload.
    pub fn checksum(&self) -> u64 {
        fnv1a(&self.payload())
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Cache file layout (little-endian): magic `LMLF`, format version `u16`,
/// ground size `u8`, family count `u64`, the membership bit-vectors
/// (`ceil(2^n/8)` bytes each, mask order), and an FNV-1a 64 checksum of the
/// payload.
pub fn save_cache(cache: &LambdaCache, path: &Path) -> Result<()> {
    let payload = cache.payload();
    let mut data = Vec::with_capacity(15 + payload.len() + 8);
    data.extend_from_slice(CACHE_MAGIC);
    data.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    data.push(cache.n as u8);
    data.extend_from_slice(&(cache.bits.len() as u64).to_le_bytes());
    data.extend_from_slice(&payload);
    data.extend_from_slice(&fnv1a(&payload).to_le_bytes());
    fs::write(path, data)?;
    Ok(())
}

pub fn load_cache(path: &Path) -> Result<LambdaCache> {
    let data = fs::read(path)?;
    let corrupt = |what: &str| Error::CorruptCache(format!("{}: {what}", path.display()));
    if data.len() < 23 {
        return Err(corrupt("file shorter than header"));
    }
    if &data[..4] != CACHE_MAGIC {
        return Err(corrupt("bad magic"));
    }
    let version = u16::from_le_bytes([data[4], data[5]]);
    if version != CACHE_VERSION {
        return Err(corrupt("unsupported format version"));
    }
    let n = data[6] as usize;
    if n == 0 || n > MAX_ENUM_GROUND {
        return Err(corrupt("ground size out of range"));
    }
    let count = u64::from_le_bytes(data[7..15].try_into().unwrap()) as usize;
    let fb = (1usize << n).div_ceil(8);
    let expected = 15 + count * fb + 8;
    if data.len() != expected {
        return Err(corrupt("length does not match recorded family count"));
    }
    let payload = &data[15..15 + count * fb];
    let stored = u64::from_le_bytes(data[expected - 8..].try_into().unwrap());
    if fnv1a(payload) != stored {
        return Err(corrupt("checksum mismatch"));
    }
    let mut bits = Vec::with_capacity(count);
    for chunk in payload.chunks_exact(fb) {
        let mut buf = [0u8; 16];
        buf[..fb].copy_from_slice(chunk);
        bits.push(u128::from_le_bytes(buf));
    }
    if !bits.windows(2).all(|w| w[0] < w[1]) {
        return Err(corrupt("families not in strict canonical order"));
    }
    let cache = LambdaCache { n, bits };
    if n <= 5 {
        for fam in cache.families() {
            if !fam.family().is_maximal_linked() {
                return Err(corrupt("entry is not a maximal linked family"));
            }
        }
    }
    Ok(cache)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Published counts for n = 1..7.
    pub(crate) const KNOWN_COUNTS: [u64; 7] = [1, 2, 4, 12, 81, 2646, 1_422_564];

    /// Independent oracle: scan every assignment of the `2^n` mask bits and
    /// keep the self-dual monotone ones. Shares nothing with the search.
    fn brute_force_bits(n: usize) -> Vec<u128> {
        let size = 1usize << n;
        let full = size - 1;
        let mut found = Vec::new();
        for code in 0u64..(1u64 << size) {
            if code & 1 == 1 {
                continue; // empty set is a member
            }
            let mut ok = true;
            for m in 0..size {
                if code >> m & 1 == code >> (full ^ m) & 1 {
                    ok = false; // not self-dual
                    break;
                }
            }
            if !ok {
                continue;
            }
            'mono: for m in 0..size {
                if code >> m & 1 == 0 {
                    continue;
                }
                for i in 0..n {
                    if m >> i & 1 == 0 && code >> (m | 1 << i) & 1 == 0 {
                        ok = false;
                        break 'mono;
                    }
                }
            }
            if ok {
                found.push(code as u128);
            }
        }
        found
    }

    #[test]
    fn counts_match_published_values_small() {
        for n in 1..=5usize {
            assert_eq!(count_lambda(n, 1).unwrap(), KNOWN_COUNTS[n - 1], "n={n}");
        }
    }

    #[test]
    fn count_n6() {
        assert_eq!(count_lambda(6, 1).unwrap(), 2646);
    }

    #[test]
    fn enumeration_matches_brute_force_up_to_four() {
        for n in 1..=4usize {
            let brute = brute_force_bits(n);
            let enumerated = enumerate_lambda_bits(n).unwrap();
            assert_eq!(enumerated, brute, "n={n}");
        }
    }

    #[test]
    fn count_independent_of_workers_and_split() {
        for workers in [1, 2, 4] {
            assert_eq!(count_lambda(5, workers).unwrap(), 81);
            assert_eq!(count_lambda_split(6, workers, 3).unwrap(), 2646);
        }
        assert_eq!(count_lambda_split(4, 3, 0).unwrap(), 12);
        assert_eq!(count_lambda_split(1, 2, 8).unwrap(), 1);
    }

    #[test]
    fn enumerated_families_are_valid_and_sorted() {
        for n in 1..=5usize {
            let g = GroundSet::new(n).unwrap();
            let fams = enumerate_lambda(&g).unwrap();
            assert_eq!(fams.len() as u64, KNOWN_COUNTS[n - 1]);
            for fam in &fams {
                assert!(fam.family().is_maximal_linked());
                assert!(fam.family().is_self_dual());
            }
            assert!(fams.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn sampled_families_valid_for_n6_and_n7() {
        for n in [6usize, 7] {
            let bits = enumerate_lambda_bits(n).unwrap();
            assert_eq!(bits.len() as u64, KNOWN_COUNTS[n - 1]);
            let mut state = 0x1234_5678_9abc_def0u64;
            for k in 0..300usize {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let idx = if k < 2 {
                    // include both ends of the canonical order
                    (k * (bits.len() - 1)).min(bits.len() - 1)
                } else {
                    (state >> 33) as usize % bits.len()
                };
                let fam = family_from_bits(n, bits[idx]);
                let f = fam.family();
                assert!(f.is_upward_closed());
                assert!(f.is_linked());
                assert!(f.is_self_dual());
                assert!(f.is_maximal_linked());
            }
        }
    }

    #[test]
    fn size_caps_are_checked() {
        assert!(matches!(
            count_lambda(8, 1),
            Err(Error::GroundTooLarge { .. })
        ));
        assert!(matches!(count_lambda(0, 1), Err(Error::EmptyGroundSet)));
    }

    #[test]
    fn cache_roundtrip_n5() {
        let dir = std::env::temp_dir().join("superext-cache-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("lambda5.mlf");
        let cache = LambdaCache::build(5).unwrap();
        assert_eq!(cache.len(), 81);
        save_cache(&cache, &path).unwrap();
        let loaded = load_cache(&path).unwrap();
        assert_eq!(loaded.n(), 5);
        assert_eq!(loaded.bits, cache.bits);
        assert_eq!(loaded.checksum(), cache.checksum());
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn cache_detects_truncation_and_corruption() {
        let dir = std::env::temp_dir().join("superext-cache-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("lambda4.mlf");
        let cache = LambdaCache::build(4).unwrap();
        save_cache(&cache, &path).unwrap();

        let raw = fs::read(&path).unwrap();
        let truncated = &raw[..raw.len() - 5];
        let tpath = dir.join("trunc.mlf");
        fs::write(&tpath, truncated).unwrap();
        assert!(matches!(load_cache(&tpath), Err(Error::CorruptCache(_))));

        let mut flipped = raw.clone();
        flipped[20] ^= 0xff;
        let fpath = dir.join("flip.mlf");
        fs::write(&fpath, &flipped).unwrap();
        assert!(matches!(load_cache(&fpath), Err(Error::CorruptCache(_))));

        for p in [&path, &tpath, &fpath] {
            let _ = fs::remove_file(p);
        }
    }

    #[test]
    fn loaded_n4_families_are_maximal_linked() {
        let dir = std::env::temp_dir().join("superext-cache-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("lambda4b.mlf");
        save_cache(&LambdaCache::build(4).unwrap(), &path).unwrap();
        let loaded = load_cache(&path).unwrap();
        let fams = loaded.families();
        assert_eq!(fams.len(), 12);
        assert!(fams.iter().all(|f| f.family().is_maximal_linked()));
        fs::remove_file(&path).unwrap();
    }
}
