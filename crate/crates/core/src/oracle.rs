//! Brute-force reference implementations.
//!
//! Nothing here calls into the fast modules; only the [`Text`] type and
//! the error type are shared. Costs are polynomial and unbounded, so keep
//! inputs small.

use crate::error::{Error, Result};
use crate::text::Text;

/// Tries every rotation explicitly.
pub fn naive_is_rotation(u: &[u8], v: &[u8]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let n = u.len();
    // v = u[d..] u[..d]
    (0..n).any(|d| u[d..] == v[..n - d] && u[..d] == v[n - d..])
}

/// Least rotation by enumerating all of them; returns the 1-based shift.
pub fn naive_canonical_rotation(u: &[u8]) -> Result<(Vec<u8>, usize)> {
    if u.is_empty() {
        return Err(Error::EmptyText);
    }
    let mut best: Option<(Vec<u8>, usize)> = None;
    for d in 0..u.len() {
        let r: Vec<u8> = u[d..].iter().chain(&u[..d]).copied().collect();
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, d + 1));
        }
    }
    Ok(best.unwrap())
}

fn blocks_pairwise_conjugate(y: &[u8], k: usize) -> bool {
    let blocks: Vec<&[u8]> = y.chunks(k).collect();
    blocks
        .iter()
        .all(|a| blocks.iter().all(|b| naive_is_rotation(a, b)))
}

pub fn naive_k_cyclic(x: &Text, k: usize) -> Result<bool> {
    let n = x.len();
    if k < 1 || k > n {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            min: 1,
            max: n,
        });
    }
    Ok(n.is_multiple_of(k) && blocks_pairwise_conjugate(x, k))
}

pub fn naive_all_cyclic_periods(x: &Text) -> Vec<(usize, usize)> {
    let n = x.len();
    (1..=n)
        .filter(|&k| naive_k_cyclic(x, k).unwrap())
        .map(|k| (k, n / k))
        .collect()
}

pub fn naive_cyclic_period_array(x: &Text) -> Vec<usize> {
    (1..=x.len())
        .map(|i| {
            let prefix = &x[..i];
            let k = (1..=i)
                .find(|&k| i % k == 0 && blocks_pairwise_conjugate(prefix, k))
                .unwrap();
            i / k
        })
        .collect()
}

/// Character-by-character scan, 1-based positions.
pub fn naive_lce(x: &Text, i: usize, j: usize) -> Result<usize> {
    let n = x.len();
    for (name, v) in [("i", i), ("j", j)] {
        if v < 1 || v > n {
            return Err(Error::OutOfRange {
                name,
                value: v,
                min: 1,
                max: n,
            });
        }
    }
    let mut l = 0;
    while i + l <= n && j + l <= n && x[i - 1 + l] == x[j - 1 + l] {
        l += 1;
    }
    Ok(l)
}

/// Occurrence starts (1-based) of rotations of `x[1..k]` and a
/// position-by-position coverage mask.
pub fn naive_cover_windows(x: &Text, k: usize) -> (Vec<usize>, Vec<bool>) {
    let n = x.len();
    let u = &x[..k];
    let mut covered = vec![false; n];
    let mut occurrences = Vec::new();
    for i in 0..=n - k {
        if naive_is_rotation(&x[i..i + k], u) {
            occurrences.push(i + 1);
            covered[i..i + k].iter_mut().for_each(|c| *c = true);
        }
    }
    (occurrences, covered)
}

/// Proper cyclic cover lengths, by marking covered positions.
pub fn naive_covers(x: &Text) -> Vec<usize> {
    (1..x.len())
        .filter(|&k| naive_cover_windows(x, k).1.iter().all(|&c| c))
        .collect()
}

/// Smallest `k` splitting `x[start..end]` into ≥ 2 pairwise-conjugate
/// blocks.
pub fn naive_cyclic_substring_witness(x: &Text, start: usize, end: usize) -> Option<usize> {
    let y = &x[start - 1..end];
    let len = y.len();
    (1..len).find(|&k| len.is_multiple_of(k) && blocks_pairwise_conjugate(y, k))
}

/// Containment-maximal cyclic periodic intervals, 1-based, sorted.
pub fn naive_maximal_runs(x: &Text) -> Vec<(usize, usize)> {
    let n = x.len();
    let mut periodic = Vec::new();
    for s in 1..=n {
        for e in s + 1..=n {
            if naive_cyclic_substring_witness(x, s, e).is_some() {
                periodic.push((s, e));
            }
        }
    }
    periodic
        .iter()
        .copied()
        .filter(|&(s, e)| {
            !periodic
                .iter()
                .any(|&(s2, e2)| (s2, e2) != (s, e) && s2 <= s && e <= e2)
        })
        .collect()
}

/// Containment-maximal intervals made of ≥ 2 pairwise-conjugate blocks of
/// length exactly `k`.
pub fn naive_maximal_k_runs(x: &Text, k: usize) -> Vec<(usize, usize)> {
    let n = x.len();
    let mut periodic = Vec::new();
    for s in 1..=n {
        let mut e = s - 1 + 2 * k;
        while k > 0 && e <= n {
            if blocks_pairwise_conjugate(&x[s - 1..e], k) {
                periodic.push((s, e));
            }
            e += k;
        }
    }
    periodic
        .iter()
        .copied()
        .filter(|&(s, e)| {
            !periodic
                .iter()
                .any(|&(s2, e2)| (s2, e2) != (s, e) && s2 <= s && e <= e2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Text {
        Text::try_from(s).unwrap()
    }

    #[test]
    fn rotation_examples() {
        assert!(naive_is_rotation(b"ababc", b"bcaba"));
        assert!(!naive_is_rotation(b"a", b"b"));
        assert!(naive_is_rotation(b"aaab", b"baaa"));
        assert!(!naive_is_rotation(b"ab", b"abc"));
        assert_eq!(
            naive_canonical_rotation(b"baaa").unwrap(),
            (b"aaab".to_vec(), 2)
        );
    }

    #[test]
    fn k_cyclic_examples() {
        assert!(naive_k_cyclic(&text("aaabaabaabaabaaa"), 4).unwrap());
        assert!(!naive_k_cyclic(&text("ab"), 1).unwrap());
        assert!(naive_k_cyclic(&text("aababa"), 3).unwrap());
        assert!(naive_k_cyclic(&text("ab"), 3).is_err());
        assert_eq!(
            naive_all_cyclic_periods(&text("aaabaabaabaabaaa")),
            [(4, 4), (8, 2), (16, 1)]
        );
        assert_eq!(
            naive_cyclic_period_array(&text("aababa")),
            [1, 2, 1, 1, 1, 2]
        );
    }

    #[test]
    fn lce_examples() {
        let x = text("aababa");
        assert_eq!(naive_lce(&x, 1, 2).unwrap(), 1);
        assert_eq!(naive_lce(&x, 1, 1).unwrap(), 6);
        assert_eq!(naive_lce(&x, 2, 4).unwrap(), 3);
        assert!(naive_lce(&x, 7, 1).is_err());
    }

    #[test]
    fn cover_examples() {
        assert_eq!(naive_covers(&text("ababbaba")), [2, 4, 5, 7]);
        assert_eq!(naive_covers(&text("aa")), [1]);
        assert!(naive_covers(&text("abc")).is_empty());
    }

    #[test]
    fn run_examples() {
        assert!(naive_maximal_runs(&text("aaaabababaaa")).contains(&(3, 11)));
        assert_eq!(naive_maximal_runs(&text("aaaa")), [(1, 4)]);
        assert_eq!(naive_maximal_runs(&text("abab")), [(1, 4)]);
        assert!(naive_maximal_runs(&text("abcd")).is_empty());
        assert_eq!(naive_maximal_k_runs(&text("aaaabababaaa"), 3), [(3, 11)]);
        assert_eq!(naive_maximal_k_runs(&text("aababa"), 3), [(1, 6)]);
    }
}
