//! Cyclic covers: every position of `x` lies in a window that is a
//! rotation of the prefix `u = x[1..k']`.
//!
//! Windows are matched against the rotations of `u` in `O(log k')` each.
//! Every distinct rotation of `u` is fingerprinted with a rolling hash;
//! a window whose fingerprint matches a rotation `c_δ(u)` is then
//! confirmed exactly with two LCE queries, one for `u[δ..k']` and one for
//! `u[1..δ-1]`. Fingerprint collisions can therefore cost time but never
//! correctness.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::text::Text;

/// 1-based inclusive interval, serialised as `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        Interval { start, end }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: usize) -> bool {
        self.start <= p && p <= self.end
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.start, self.end].serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub cover_len: usize,
    #[serde(serialize_with = "lossy_str")]
    pub cover_string: Vec<u8>,
    /// 1-based starts of windows that are rotations of the cover string.
    pub occurrences: Vec<usize>,
    /// Maximal uncovered intervals.
    pub gaps: Vec<Interval>,
    pub is_cover: bool,
}

fn lossy_str<S: Serializer>(b: &[u8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&String::from_utf8_lossy(b))
}

pub fn k_cyclic_cover_report(x: &Text, k: usize) -> Result<CoverReport> {
    Error::check_range("k'", k, 1, x.len())?;
    Ok(CoverMatcher::new(x).report(k))
}

pub fn is_k_cyclic_coverable(x: &Text, k: usize) -> Result<bool> {
    Error::check_range("k'", k, 1, x.len())?;
    Ok(CoverMatcher::new(x).is_cover(k))
}

/// Proper cyclic cover lengths (`k' < n`), ascending.
pub fn all_cyclic_covers(x: &Text) -> Vec<usize> {
    let matcher = CoverMatcher::new(x);
    (1..x.len()).filter(|&k| matcher.is_cover(k)).collect()
}

pub fn smallest_cyclic_cover(x: &Text) -> Option<usize> {
    let matcher = CoverMatcher::new(x);
    (1..x.len()).find(|&k| matcher.is_cover(k))
}

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x0a3c_5f17_29e4_b6d3 % MOD;

fn mul_mod(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let r = (p as u64 & MOD) + (p >> 61) as u64;
    if r >= MOD {
        r - MOD
    } else {
        r
    }
}

fn add_mod(a: u64, b: u64) -> u64 {
    let r = a + b;
    if r >= MOD {
        r - MOD
    } else {
        r
    }
}

/// Window matcher shared across all cover lengths of one text.
pub(crate) struct CoverMatcher<'a> {
    x: &'a [u8],
    lce: LceIndex,
    prefix: Vec<u64>,
    powers: Vec<u64>,
}

/// Fingerprints of the distinct rotations of `x[0..k)`, sorted.
struct RotationTable {
    k: usize,
    entries: Vec<(u64, u32)>,
}

impl<'a> CoverMatcher<'a> {
    pub(crate) fn new(x: &'a Text) -> Self {
        let n = x.len();
        let mut prefix = Vec::with_capacity(n + 1);
        let mut powers = Vec::with_capacity(n + 1);
        prefix.push(0);
        powers.push(1);
        for (i, &c) in x.iter().enumerate() {
            prefix.push(add_mod(mul_mod(prefix[i], BASE), c as u64 + 1));
            powers.push(mul_mod(powers[i], BASE));
        }
        CoverMatcher {
            x,
            lce: LceIndex::build(x).expect("text is non-empty"),
            prefix,
            powers,
        }
    }

    fn hash(&self, a: usize, b: usize) -> u64 {
        let sub = mul_mod(self.prefix[a], self.powers[b - a]);
        add_mod(self.prefix[b], MOD - sub)
    }

    fn root_len(&self, k: usize) -> usize {
        crate::period::divisors(k)
            .into_iter()
            .find(|&p| p == k || self.lce.lce0(0, p) >= k - p)
            .unwrap_or(k)
    }

    fn table(&self, k: usize) -> RotationTable {
        let root = self.root_len(k);
        let mut entries: Vec<(u64, u32)> = (0..root)
            .map(|d| {
                let h = add_mod(mul_mod(self.hash(d, k), self.powers[d]), self.hash(0, d));
                (h, d as u32)
            })
            .collect();
        entries.sort_unstable();
        RotationTable { k, entries }
    }

    /// Whether `x[i..i+k)` is a rotation of `x[0..k)`; 0-based `i`.
    fn matches(&self, table: &RotationTable, i: usize) -> bool {
        let k = table.k;
        if i == 0 {
            return true;
        }
        let h = self.hash(i, i + k);
        let from = table.entries.partition_point(|e| e.0 < h);
        table.entries[from..]
            .iter()
            .take_while(|e| e.0 == h)
            .any(|&(_, d)| {
                let d = d as usize;
                self.lce.lce0(i, d) >= k - d && (d == 0 || self.lce.lce0(i + k - d, 0) >= d)
            })
    }

    pub(crate) fn is_cover(&self, k: usize) -> bool {
        let n = self.x.len();
        if k == n {
            return true;
        }
        let table = self.table(k);
        // only the last window covers position n
        if !self.matches(&table, n - k) {
            return false;
        }
        let mut reach = k;
        for i in 1..=n - k {
            if reach >= n {
                break;
            }
            if i > reach {
                return false;
            }
            if self.matches(&table, i) {
                reach = i + k;
            }
        }
        reach >= n
    }

    pub(crate) fn report(&self, k: usize) -> CoverReport {
        let n = self.x.len();
        let table = self.table(k);
        let occurrences: Vec<usize> = (0..=n - k)
            .filter(|&i| self.matches(&table, i))
            .map(|i| i + 1)
            .collect();
        let mut gaps = Vec::new();
        let mut covered_to = 0;
        for &s in &occurrences {
            if s > covered_to + 1 {
                gaps.push(Interval::new(covered_to + 1, s - 1));
            }
            covered_to = covered_to.max(s + k - 1);
        }
        if covered_to < n {
            gaps.push(Interval::new(covered_to + 1, n));
        }
        CoverReport {
            cover_len: k,
            cover_string: self.x[..k].to_vec(),
            occurrences,
            is_cover: gaps.is_empty(),
            gaps,
        }
    }
}
