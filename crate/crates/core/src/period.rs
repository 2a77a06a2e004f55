//! k-cyclic periodicity: `x = u_1 u_2 … u_l` with every block of length `k`
//! a rotation of the first one.
//!
//! Blocks are compared through their least rotations, so a single `k`
//! costs `O(n)` and never more than `O(k)` per block.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{
    cyclic_eq, least_rotation_offset, primitive_root_len, rotate, shift_between, RotationShift,
    Text,
};

/// Witness of a k-cyclic decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicDecomposition {
    pub block_len: usize,
    pub block_count: usize,
    /// `shifts[i]` rotates the first block onto block `i + 1`.
    pub shifts: Vec<RotationShift>,
}

impl CyclicDecomposition {
    pub fn blocks<'a>(&self, x: &'a [u8]) -> impl Iterator<Item = &'a [u8]> {
        x.chunks(self.block_len).take(self.block_count)
    }

    /// Rebuilds the decomposed string from its first block and the shifts.
    pub fn reconstruct(&self, x: &[u8]) -> Vec<u8> {
        let first = &x[..self.block_len];
        self.shifts
            .iter()
            .flat_map(|&s| rotate(first, s).expect("shift within block"))
            .collect()
    }
}

/// A `(k, l)` pair with `k * l = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CyclicPeriod {
    pub block_len: usize,
    pub block_count: usize,
}

impl From<CyclicPeriod> for (usize, usize) {
    fn from(p: CyclicPeriod) -> Self {
        (p.block_len, p.block_count)
    }
}

/// `A[i]` is the block count of the shortest cyclic period of `x[1..i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CyclicPeriodArray(Vec<usize>);

impl CyclicPeriodArray {
    /// `A[i]`, 1-based.
    pub fn get(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

pub fn k_cyclic_decompose(x: &Text, k: usize) -> Result<Option<CyclicDecomposition>> {
    Error::check_range("k", k, 1, x.len())?;
    Ok(decompose_slice(x, k))
}

pub fn is_k_cyclic_periodic(x: &Text, k: usize) -> Result<bool> {
    Error::check_range("k", k, 1, x.len())?;
    Ok(is_k_cyclic_slice(x, k))
}

/// Every `(k, l)` for which `x` is k-cyclic periodic, ascending in `k`.
/// The trivial `(n, 1)` is always last.
pub fn all_cyclic_periods(x: &Text) -> Vec<CyclicPeriod> {
    let n = x.len();
    divisors(n)
        .into_iter()
        .filter(|&k| is_k_cyclic_slice(x, k))
        .map(|k| CyclicPeriod {
            block_len: k,
            block_count: n / k,
        })
        .collect()
}

pub fn smallest_cyclic_period(x: &Text) -> CyclicPeriod {
    let n = x.len();
    let k = divisors(n)
        .into_iter()
        .find(|&k| is_k_cyclic_slice(x, k))
        .unwrap_or(n);
    CyclicPeriod {
        block_len: k,
        block_count: n / k,
    }
}

/// Computed prefix by prefix, trying divisors of `i` in ascending order.
pub fn cyclic_period_array(x: &Text) -> CyclicPeriodArray {
    let n = x.len();
    let divs = divisor_sieve(n);
    let a = (1..=n)
        .map(|i| {
            let prefix = &x[..i];
            let k = divs[i]
                .iter()
                .copied()
                .find(|&k| is_k_cyclic_slice(prefix, k))
                .unwrap_or(i);
            i / k
        })
        .collect();
    CyclicPeriodArray(a)
}

pub(crate) fn decompose_slice(x: &[u8], k: usize) -> Option<CyclicDecomposition> {
    let n = x.len();
    if k == 0 || k > n || !n.is_multiple_of(k) {
        return None;
    }
    let first = &x[..k];
    let first_off = least_rotation_offset(first);
    let mut root_len = None;
    let mut shifts = Vec::with_capacity(n / k);
    for block in x.chunks_exact(k) {
        if block == first {
            shifts.push(RotationShift::IDENTITY);
            continue;
        }
        let off = least_rotation_offset(block);
        if !cyclic_eq(first, first_off, block, off) {
            return None;
        }
        let root = *root_len.get_or_insert_with(|| primitive_root_len(first));
        shifts.push(shift_between(first_off, off, k, root));
    }
    Some(CyclicDecomposition {
        block_len: k,
        block_count: n / k,
        shifts,
    })
}

pub(crate) fn is_k_cyclic_slice(x: &[u8], k: usize) -> bool {
    let n = x.len();
    if k == 0 || k > n || !n.is_multiple_of(k) {
        return false;
    }
    let first = &x[..k];
    let mut first_off = None;
    x.chunks_exact(k).skip(1).all(|block| {
        block == first || {
            let fo = *first_off.get_or_insert_with(|| least_rotation_offset(first));
            cyclic_eq(first, fo, block, least_rotation_offset(block))
        }
    })
}

/// Divisors of `n` in ascending order, by trial division up to `sqrt(n)`.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `divs[i]` lists the divisors of `i` ascending, for `i` in `0..=n`.
fn divisor_sieve(n: usize) -> Vec<Vec<usize>> {
    let mut divs = vec![Vec::new(); n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            divs[m].push(d);
        }
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Text {
        Text::try_from(s).unwrap()
    }

    fn pairs(v: Vec<CyclicPeriod>) -> Vec<(usize, usize)> {
        v.into_iter().map(Into::into).collect()
    }

    #[test]
    fn decompose_example_one() {
        let x = text("aaabaabaabaabaaa");
        let d = k_cyclic_decompose(&x, 4).unwrap().unwrap();
        assert_eq!(d.block_count, 4);
        let blocks: Vec<&[u8]> = d.blocks(&x).collect();
        assert_eq!(blocks, [&b"aaab"[..], b"aaba", b"abaa", b"baaa"]);
        let shifts: Vec<usize> = d.shifts.iter().map(|s| s.get()).collect();
        assert_eq!(shifts, [1, 2, 3, 4]);
        assert_eq!(d.reconstruct(&x), x.as_bytes());
    }

    #[test]
    fn decompose_edge_cases() {
        let x = text("aababa");
        let whole = k_cyclic_decompose(&x, 6).unwrap().unwrap();
        assert_eq!(
            (whole.block_count, whole.shifts.clone()),
            (1, vec![RotationShift::IDENTITY])
        );
        let d = k_cyclic_decompose(&x, 3).unwrap().unwrap();
        assert_eq!(d.block_count, 2);
        assert_eq!(d.reconstruct(&x), b"aababa");
        assert_eq!(k_cyclic_decompose(&x, 2).unwrap(), None);
        assert_eq!(k_cyclic_decompose(&x, 4).unwrap(), None);
        assert!(k_cyclic_decompose(&x, 0).is_err());
        assert!(k_cyclic_decompose(&x, 7).is_err());
    }

    #[test]
    fn shifts_are_smallest_for_periodic_blocks() {
        // blocks abab, baba: δ = 2 and δ = 4 both work
        let x = text("ababbaba");
        let d = k_cyclic_decompose(&x, 4).unwrap().unwrap();
        assert_eq!(
            d.shifts,
            [RotationShift::IDENTITY, RotationShift::new(2).unwrap()]
        );
    }

    #[test]
    fn predicate_examples() {
        assert!(is_k_cyclic_periodic(&text("aaabaabaabaabaaa"), 4).unwrap());
        assert!(!is_k_cyclic_periodic(&text("aaabaabaabaabaaa"), 3).unwrap());
        assert!(is_k_cyclic_periodic(&text("aaaa"), 1).unwrap());
        assert!(!is_k_cyclic_periodic(&text("ab"), 1).unwrap());
    }

    #[test]
    fn all_periods_examples() {
        assert_eq!(
            pairs(all_cyclic_periods(&text("aaabaabaabaabaaa"))),
            [(4, 4), (8, 2), (16, 1)]
        );
        assert_eq!(
            pairs(all_cyclic_periods(&text("aaaa"))),
            [(1, 4), (2, 2), (4, 1)]
        );
        assert_eq!(pairs(all_cyclic_periods(&text("abc"))), [(3, 1)]);
    }

    #[test]
    fn smallest_period_examples() {
        assert_eq!(
            smallest_cyclic_period(&text("aaabaabaabaabaaa")).block_len,
            4
        );
        assert_eq!(
            <(usize, usize)>::from(smallest_cyclic_period(&text("abc"))),
            (3, 1)
        );
        assert_eq!(
            <(usize, usize)>::from(smallest_cyclic_period(&text("aaaa"))),
            (1, 4)
        );
    }

    #[test]
    fn period_array_examples() {
        assert_eq!(
            cyclic_period_array(&text("aababa")).as_slice(),
            [1, 2, 1, 1, 1, 2]
        );
        assert_eq!(cyclic_period_array(&text("aaa")).as_slice(), [1, 2, 3]);
        assert_eq!(cyclic_period_array(&text("abab")).as_slice(), [1, 1, 1, 2]);
        let a = cyclic_period_array(&text("abab"));
        assert_eq!(a.get(4), Some(2));
        assert_eq!(a.get(0), None);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(16), [1, 2, 4, 8, 16]);
        assert_eq!(divisors(36), [1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(1_000_000).len(), 49);
        let sieve = divisor_sieve(40);
        for (m, divs) in sieve.iter().enumerate().skip(1) {
            assert_eq!(divs, &divisors(m));
        }
    }
}
