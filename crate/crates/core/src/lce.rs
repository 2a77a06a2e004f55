//! Constant-time longest-common-extension queries.
//!
//! The index is a suffix array (prefix doubling with radix passes), its
//! LCP array (Kasai) and a sparse table for range minima over the LCP
//! array. Build is `O(n log n)`, queries are `O(1)`.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct LceIndex {
    text: Vec<u8>,
    /// rank[i] = position of suffix i in the suffix array
    rank: Vec<u32>,
    /// sparse[j][r] = min(lcp[r .. r + 2^j])
    sparse: Vec<Vec<u32>>,
}

impl LceIndex {
    pub fn build(x: &[u8]) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyText);
        }
        assert!(
            x.len() < u32::MAX as usize,
            "text too long for a 32-bit index"
        );
        let sa = suffix_array(x);
        let mut rank = vec![0u32; x.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = lcp_array(x, &sa, &rank);
        Ok(LceIndex {
            text: x.to_vec(),
            rank,
            sparse: sparse_table(lcp),
        })
    }

    /// Index over the reverse of `x`; its queries are `lce_reverse`.
    pub fn build_reversed(x: &[u8]) -> Result<Self> {
        let rev: Vec<u8> = x.iter().rev().copied().collect();
        Self::build(&rev)
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    /// Largest `l` with `x[i..i+l-1] = x[j..j+l-1]`, 1-based positions.
    pub fn lce(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.len();
        Error::check_range("i", i, 1, n)?;
        Error::check_range("j", j, 1, n)?;
        Ok(self.lce0(i - 1, j - 1))
    }

    /// 0-based variant used on hot paths; positions must be `< n`.
    #[inline]
    pub(crate) fn lce0(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.text.len() - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        self.range_min(lo, hi) as usize
    }

    fn range_min(&self, lo: usize, hi: usize) -> u32 {
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.sparse[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}

/// `lce` evaluated on an index built over `x^R` (see
/// [`LceIndex::build_reversed`]); positions refer to the reversed text.
pub fn lce_reverse(idx_r: &LceIndex, i: usize, j: usize) -> Result<usize> {
    idx_r.lce(i, j)
}

/// Forward and backward extensions over one text.
#[derive(Debug, Clone)]
pub struct TwoWayLce {
    forward: LceIndex,
    backward: LceIndex,
}

impl TwoWayLce {
    pub fn build(x: &[u8]) -> Result<Self> {
        Ok(TwoWayLce {
            forward: LceIndex::build(x)?,
            backward: LceIndex::build_reversed(x)?,
        })
    }

    pub fn forward(&self) -> &LceIndex {
        &self.forward
    }

    pub fn backward(&self) -> &LceIndex {
        &self.backward
    }

    /// Longest common suffix of `x[1..i]` and `x[1..j]`.
    pub fn lcs(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.forward.len();
        Error::check_range("i", i, 1, n)?;
        Error::check_range("j", j, 1, n)?;
        Ok(self.backward.lce0(n - i, n - j))
    }
}

fn suffix_array(s: &[u8]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = Vec::with_capacity(n);
    let mut rank: Vec<u32> = s.iter().map(|&c| c as u32).collect();
    let mut classes = 256usize;
    let mut buckets = vec![0usize; classes.max(n) + 1];

    // first pass: sort by the leading symbol
    for &c in s {
        buckets[c as usize + 1] += 1;
    }
    for c in 1..=256 {
        buckets[c] += buckets[c - 1];
    }
    sa.resize(n, 0);
    for (i, &c) in s.iter().enumerate() {
        sa[buckets[c as usize]] = i as u32;
        buckets[c as usize] += 1;
    }

    let mut second = vec![0u32; n];
    let mut next_rank = vec![0u32; n];
    let mut k = 1usize;
    loop {
        // order by the rank of the half starting k symbols later; suffixes
        // shorter than k sort first
        let mut w = 0;
        for i in n.saturating_sub(k)..n {
            second[w] = i as u32;
            w += 1;
        }
        for &p in &sa {
            if p as usize >= k {
                second[w] = p - k as u32;
                w += 1;
            }
        }

        // stable counting sort on the leading half
        buckets[..=classes].iter_mut().for_each(|b| *b = 0);
        for &r in &rank {
            buckets[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            buckets[c] += buckets[c - 1];
        }
        for &p in &second {
            let r = rank[p as usize] as usize;
            sa[buckets[r]] = p;
            buckets[r] += 1;
        }

        let key2 = |i: usize| if i + k < n { rank[i + k] + 1 } else { 0 };
        next_rank[sa[0] as usize] = 0;
        for r in 1..n {
            let (a, b) = (sa[r - 1] as usize, sa[r] as usize);
            let same = rank[a] == rank[b] && key2(a) == key2(b);
            next_rank[b] = next_rank[a] + u32::from(!same);
        }
        std::mem::swap(&mut rank, &mut next_rank);
        classes = rank[sa[n - 1] as usize] as usize + 1;
        if classes == n || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

fn lcp_array(s: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

fn sparse_table(base: Vec<u32>) -> Vec<Vec<u32>> {
    let n = base.len();
    let mut table = vec![base];
    let mut width = 1;
    while 2 * width <= n {
        let prev = table.last().unwrap();
        let row: Vec<u32> = (0..=n - 2 * width)
            .map(|r| prev[r].min(prev[r + width]))
            .collect();
        table.push(row);
        width *= 2;
    }
    table
}
