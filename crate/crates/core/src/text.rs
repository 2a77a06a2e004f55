//! Byte strings, rotations and conjugacy.
//!
//! Positions exposed to callers are 1-based and inclusive, so `x[i..j]`
//! in the docs below means the symbols `i` through `j` of `x`. Internally
//! everything works on 0-based slices.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable, non-empty byte string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Text(Vec<u8>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(Text(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Result<u8> {
        Error::check_range("i", i, 1, self.len())?;
        Ok(self.0[i - 1])
    }

    /// The factor `x[i..j]`, 1-based inclusive.
    pub fn substring(&self, i: usize, j: usize) -> Result<&[u8]> {
        check_interval(i, j, self.len())?;
        Ok(&self.0[i - 1..j])
    }

    pub fn reversed(&self) -> Text {
        Text(self.0.iter().rev().copied().collect())
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        self.0.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn is_unary(&self) -> bool {
        self.0.iter().all(|&c| c == self.0[0])
    }
}

pub(crate) fn check_interval(start: usize, end: usize, len: usize) -> Result<()> {
    if start < 1 || start > end || end > len {
        Err(Error::InvalidInterval { start, end, len })
    } else {
        Ok(())
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl TryFrom<&str> for Text {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Text::new(s.as_bytes())
    }
}

impl TryFrom<&[u8]> for Text {
    type Error = Error;

    fn try_from(s: &[u8]) -> Result<Self> {
        Text::new(s)
    }
}

impl FromStr for Text {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Text::new(s.as_bytes())
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.0))
    }
}

/// A rotation amount `δ ≥ 1`; `c_δ(u) = u[δ..k] u[1..δ-1]`, so `δ = 1` is
/// the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct RotationShift(usize);

impl RotationShift {
    pub const IDENTITY: RotationShift = RotationShift(1);

    pub fn new(delta: usize) -> Result<Self> {
        if delta == 0 {
            return Err(Error::OutOfRange {
                name: "shift",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(RotationShift(delta))
    }

    /// Shift that moves the symbol at 0-based `offset` to the front.
    pub(crate) fn from_offset(offset: usize) -> Self {
        RotationShift(offset + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub(crate) fn offset(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for RotationShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `c_δ(u)`: `u[δ..|u|]` followed by `u[1..δ-1]`.
pub fn rotate(u: &[u8], shift: RotationShift) -> Result<Vec<u8>> {
    if u.is_empty() {
        return Err(Error::EmptyText);
    }
    Error::check_range("shift", shift.get(), 1, u.len())?;
    Ok(rotated(u, shift.offset()))
}

pub(crate) fn rotated(u: &[u8], offset: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(u.len());
    out.extend_from_slice(&u[offset..]);
    out.extend_from_slice(&u[..offset]);
    out
}

/// 0-based start of the lexicographically least rotation of `u`; the
/// smallest such start when several rotations tie. Linear time.
///
/// Two candidate starts `i < j` are compared symbol by symbol; on a
/// mismatch after `k` equal symbols every start in `[loser, loser + k]`
/// is dominated and skipped.
pub fn least_rotation_offset(u: &[u8]) -> usize {
    let n = u.len();
    if n <= 1 {
        return 0;
    }
    let at = |p: usize| if p < n { u[p] } else { u[p - n] };
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (at(i + k), at(j + k));
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Least rotation of `u` and the smallest shift producing it.
pub fn canonical_rotation(u: &[u8]) -> Result<(Vec<u8>, RotationShift)> {
    if u.is_empty() {
        return Err(Error::EmptyText);
    }
    let offset = least_rotation_offset(u);
    Ok((rotated(u, offset), RotationShift::from_offset(offset)))
}

/// Whether `v = c_δ(u)` for some `δ`.
pub fn is_rotation(u: &[u8], v: &[u8]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() || u == v {
        return true;
    }
    cyclic_eq(u, least_rotation_offset(u), v, least_rotation_offset(v))
}

/// Compares `a` read cyclically from `a_off` with `b` read cyclically from
/// `b_off`, without materialising either rotation.
pub(crate) fn cyclic_eq(a: &[u8], a_off: usize, b: &[u8], b_off: usize) -> bool {
    a.len() == b.len()
        && a[a_off..]
            .iter()
            .chain(&a[..a_off])
            .eq(b[b_off..].iter().chain(&b[..b_off]))
}

/// Length of the primitive root of `u`: the smallest `p` dividing `|u|`
/// with `u = w^(|u|/p)`.
pub(crate) fn primitive_root_len(u: &[u8]) -> usize {
    let n = u.len();
    if n == 0 {
        return 0;
    }
    // border array
    let mut fail = vec![0usize; n];
    let mut b = 0;
    for i in 1..n {
        while b > 0 && u[i] != u[b] {
            b = fail[b - 1];
        }
        if u[i] == u[b] {
            b += 1;
        }
        fail[i] = b;
    }
    let period = n - fail[n - 1];
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

/// Given `block = c_δ(u)` certified through matching canonical offsets,
/// the smallest such `δ`.
pub(crate) fn shift_between(
    u_offset: usize,
    block_offset: usize,
    len: usize,
    root_len: usize,
) -> RotationShift {
    let raw = (u_offset + len - block_offset) % len;
    RotationShift::from_offset(raw % root_len)
}
