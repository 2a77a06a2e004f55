//! Maximal local cyclic periodicity.
//!
//! A factor is cyclic periodic when it splits into at least two blocks of
//! equal length that are rotations of one another. A run is a cyclic
//! periodic occurrence not contained in any longer one.
//!
//! For each block length `k` every pair of adjacent windows
//! `(x[i..i+k), x[i+k..i+2k))` is tested for conjugacy, and maximal chains
//! of conjugate windows along each residue class modulo `k` become
//! candidates. The pair test short-circuits on identical windows (one LCE
//! query) and on differing letter counts (maintained while sliding), and
//! falls back to comparing least rotations otherwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::period::{divisors, is_k_cyclic_slice};
use crate::text::{check_interval, cyclic_eq, least_rotation_offset, Text};

/// A block length together with the number of blocks it yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub block_len: usize,
    pub block_count: usize,
}

/// A maximal cyclic periodic factor `x[start..end]` (1-based, inclusive).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    /// Every block length decomposing this interval into ≥ 2 conjugate
    /// blocks, ascending.
    pub witnesses: Vec<Witness>,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn interval(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    pub fn contains(&self, other: &Run) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

/// Smallest `k` splitting `x[start..end]` into at least two conjugate
/// blocks.
pub fn is_cyclic_periodic_substring(x: &Text, start: usize, end: usize) -> Result<Option<usize>> {
    check_interval(start, end, x.len())?;
    let y = &x[start - 1..end];
    let len = y.len();
    Ok(divisors(len)
        .into_iter()
        .take_while(|&k| k < len)
        .find(|&k| is_k_cyclic_slice(y, k)))
}

/// All containment-maximal cyclic periodic factors, sorted by start.
pub fn maximal_cyclic_runs(x: &Text) -> Vec<Run> {
    let scanner = ChainScanner::new(x);
    let mut candidates = Vec::new();
    for k in 1..=x.len() / 2 {
        candidates.extend(scanner.chains(k));
    }
    containment_maximal(candidates)
}

/// Maximal chains of at least two adjacent conjugate blocks of length `k`.
pub fn maximal_k_cyclic_runs(x: &Text, k: usize) -> Result<Vec<Run>> {
    Error::check_range("k", k, 1, x.len() / 2)?;
    Ok(containment_maximal(ChainScanner::new(x).chains(k)))
}

/// `(start0, end0_exclusive, k, blocks)`
type Chain = (u32, u32, u32, u32);

/// Letter counts of one window minus those of the next.
struct LetterBalance {
    diff: [i32; 256],
    nonzero: usize,
}

impl Default for LetterBalance {
    fn default() -> Self {
        LetterBalance {
            diff: [0; 256],
            nonzero: 0,
        }
    }
}

impl LetterBalance {
    fn bump(&mut self, c: u8, delta: i32) {
        let slot = &mut self.diff[c as usize];
        let before = *slot != 0;
        *slot += delta;
        match (before, *slot != 0) {
            (false, true) => self.nonzero += 1,
            (true, false) => self.nonzero -= 1,
            _ => {}
        }
    }

    fn is_even(&self) -> bool {
        self.nonzero == 0
    }
}

struct ChainScanner<'a> {
    x: &'a [u8],
    lce: LceIndex,
}

impl<'a> ChainScanner<'a> {
    fn new(x: &'a Text) -> Self {
        ChainScanner {
            x,
            lce: LceIndex::build(x).expect("text is non-empty"),
        }
    }

    /// `conj[i]` is set when `x[i..i+k)` and `x[i+k..i+2k)` are rotations
    /// of each other.
    fn adjacent_conjugacy(&self, k: usize) -> Vec<bool> {
        let x = self.x;
        let n = x.len();
        if n < 2 * k {
            return Vec::new();
        }
        let pairs = n - 2 * k + 1;
        let mut balance = LetterBalance::default();
        for t in 0..k {
            balance.bump(x[t], 1);
            balance.bump(x[k + t], -1);
        }

        const UNSET: u32 = u32::MAX;
        let mut offsets = vec![UNSET; n - k + 1];
        let mut offset_of = |i: usize| {
            if offsets[i] == UNSET {
                offsets[i] = least_rotation_offset(&x[i..i + k]) as u32;
            }
            offsets[i] as usize
        };

        let mut conj = Vec::with_capacity(pairs);
        for i in 0..pairs {
            if i > 0 {
                balance.bump(x[i - 1], -1);
                balance.bump(x[i - 1 + k], 2);
                balance.bump(x[i - 1 + 2 * k], -1);
            }
            let ok = self.lce.lce0(i, i + k) >= k
                || (balance.is_even() && {
                    let (a, b) = (offset_of(i), offset_of(i + k));
                    cyclic_eq(&x[i..i + k], a, &x[i + k..i + 2 * k], b)
                });
            conj.push(ok);
        }
        conj
    }

    fn chains(&self, k: usize) -> Vec<Chain> {
        let conj = self.adjacent_conjugacy(k);
        let mut out = Vec::new();
        for r in 0..k.min(conj.len()) {
            let mut start = None;
            let mut last = 0;
            let mut i = r;
            loop {
                let linked = i < conj.len() && conj[i];
                if linked {
                    start.get_or_insert(i);
                    last = i;
                } else if let Some(s) = start.take() {
                    let blocks = (last - s) / k + 2;
                    out.push((s as u32, (last + 2 * k) as u32, k as u32, blocks as u32));
                }
                if i >= conj.len() {
                    break;
                }
                i += k;
            }
        }
        out
    }
}

fn containment_maximal(mut chains: Vec<Chain>) -> Vec<Run> {
    // start ascending, end descending: anything containing an interval
    // sorts before it
    chains.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
    let witness = |k: u32, t: u32| Witness {
        block_len: k as usize,
        block_count: t as usize,
    };
    let mut runs = Vec::new();
    let mut reach = 0u32;
    let mut chains = chains.into_iter().peekable();
    while let Some((s, e, k, t)) = chains.next() {
        let mut witnesses = vec![witness(k, t)];
        while let Some(&(_, _, k2, t2)) = chains.peek().filter(|c| c.0 == s && c.1 == e) {
            witnesses.push(witness(k2, t2));
            chains.next();
        }
        if e > reach {
            reach = e;
            runs.push(Run {
                start: s as usize + 1,
                end: e as usize,
                witnesses,
            });
        }
    }
    runs
}
