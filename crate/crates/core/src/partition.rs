//! Partitions and their 0/1 border sequences.
//!
//! A partition's extended South-East boundary is walked from the vertical ray
//! up to the horizontal ray; an up step is written `0` and a right step `1`.
//! The resulting doubly infinite word is all `0` far left and all `1` far
//! right, so only a finite window is stored. The median gap sits between
//! positions `0` and `1`: the `i`-th digit after the gap has position `i`,
//! the digit just before it has position `0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] {
                return Err(Error::NotDecreasing {
                    index: i,
                    value: parts[i],
                    previous: parts[i - 1],
                });
            }
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The partition `(part^count)`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            Self::empty()
        } else {
            Partition(vec![part; count])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Multiplies every part by `k`.
    pub fn scaled(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Reorders all parts of the given partitions into one partition.
    pub fn direct_sum<'a, I: IntoIterator<Item = &'a Partition>>(parts: I) -> Partition {
        Partition::from_unsorted(
            parts
                .into_iter()
                .flat_map(|p| p.0.iter().copied())
                .collect(),
        )
    }

    /// Multiplicity `m_j` of each part value `j`, as `(j, m_j)` pairs in decreasing `j`.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn encode(&self) -> BorderSequence {
        BorderSequence::encode(self)
    }

    /// Transpose computed by reversing and complementing the border sequence.
    pub fn conjugate(&self) -> Partition {
        self.encode().conjugate().decode()
    }

    /// Transpose computed from column lengths.
    pub fn conjugate_by_columns(&self) -> Partition {
        let width = self.part(0);
        let cols = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(cols)
    }

    pub fn frobenius(&self) -> FrobeniusCoordinates {
        self.encode().frobenius()
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let arm = self.0[i] - j as u32 - 1;
        let leg = self.0[i + 1..]
            .iter()
            .take_while(|&&p| p > j as u32)
            .count() as u32;
        arm + leg + 1
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `4,4,3,2`. The empty partition is `∅`,
    /// `-` or an empty string.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts)
    }
}

/// Parses comma-separated nonnegative integers (a weak composition).
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::InvalidPartition(format!(
                    "entry at index {i} ({tok:?}) is not a nonnegative integer"
                )));
            }
            tok.parse::<u32>()
                .map_err(|e| Error::InvalidPartition(format!("entry at index {i} ({tok:?}): {e}")))
        })
        .collect()
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with largest part at most `max_part` and at most `max_len` parts.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(n: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// The finite window of a border sequence plus the median bookkeeping.
///
/// The window runs from the first `1` to the last `0`; the empty partition
/// has an empty window. `median_offset` counts window digits before the gap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderSequence {
    window: Vec<bool>,
    median_offset: usize,
}

impl BorderSequence {
    pub fn empty() -> Self {
        BorderSequence {
            window: Vec::new(),
            median_offset: 0,
        }
    }

    pub fn encode(p: &Partition) -> Self {
        let len = p.len();
        if len == 0 {
            return Self::empty();
        }
        // Row i (1-based) ends at the zero in position λ_i - i + 1.
        let lo = 1 - len as i64;
        let hi = p.part(0) as i64;
        let mut window = vec![true; (hi - lo + 1) as usize];
        for (i, &part) in p.parts().iter().enumerate() {
            let pos = part as i64 - i as i64;
            window[(pos - lo) as usize] = false;
        }
        BorderSequence {
            window,
            median_offset: len,
        }
    }

    /// Builds a sequence from explicit digits before and after the median.
    /// Digits beyond the given ones are implicitly `0` on the left and `1`
    /// on the right.
    pub fn from_digits(before: &[bool], after: &[bool]) -> Result<Self> {
        let lo = 1 - before.len() as i64;
        let hi = after.len() as i64;
        let digits: Vec<bool> = before.iter().chain(after).copied().collect();
        Self::from_fn(lo, hi, |p| digits[(p - lo) as usize])
    }

    /// Builds a sequence whose digit at position `p` is `digit(p)` for
    /// `lo <= p <= hi`, `0` below `lo` and `1` above `hi`.
    pub(crate) fn from_fn(lo: i64, hi: i64, digit: impl Fn(i64) -> bool) -> Result<Self> {
        let mut ones_before = 0i64;
        let mut zeros_after = 0i64;
        let mut first_one = None;
        let mut last_zero = None;
        for p in lo..=hi {
            let d = digit(p);
            if d {
                if p <= 0 {
                    ones_before += 1;
                }
                first_one.get_or_insert(p);
            } else {
                if p >= 1 {
                    zeros_after += 1;
                }
                last_zero = Some(p);
            }
        }
        if ones_before != zeros_after {
            return Err(Error::InvalidSequence(format!(
                "median condition fails: {ones_before} ones precede the median but {zeros_after} zeros follow it"
            )));
        }
        match (first_one, last_zero) {
            (Some(a), Some(b)) if a < b => {
                let window = (a..=b).map(&digit).collect();
                let median_offset = (1 - a).max(0) as usize;
                Ok(BorderSequence {
                    window,
                    median_offset,
                })
            }
            _ => Ok(Self::empty()),
        }
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    pub fn median_offset(&self) -> usize {
        self.median_offset
    }

    /// Position of the first window digit (meaningless for the empty window).
    pub fn start(&self) -> i64 {
        1 - self.median_offset as i64
    }

    /// Position of the last window digit.
    pub fn end(&self) -> i64 {
        self.start() + self.window.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// Digit at an arbitrary position (`true` is a `1`).
    pub fn digit(&self, pos: i64) -> bool {
        if self.window.is_empty() {
            return pos >= 1;
        }
        if pos < self.start() {
            false
        } else if pos > self.end() {
            true
        } else {
            self.window[(pos - self.start()) as usize]
        }
    }

    /// Positions of the zeros after the first `1`, left to right. These are
    /// the zeros of the nonempty rows, the last row first.
    pub fn zero_positions(&self) -> Vec<i64> {
        let start = self.start();
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &d)| !d)
            .map(|(i, _)| start + i as i64)
            .collect()
    }

    /// Row lengths: the `i`-th zero from the right contributes the number of
    /// ones to its left.
    pub fn decode(&self) -> Partition {
        let mut ones = 0u32;
        let mut rows = Vec::new();
        for &d in &self.window {
            if d {
                ones += 1;
            } else {
                rows.push(ones);
            }
        }
        rows.reverse();
        Partition::from_vec_unchecked(rows)
    }

    /// Number of pairs `i < j` with a `1` at `i` and a `0` at `j`.
    pub fn inversions(&self) -> u64 {
        let mut ones = 0u64;
        let mut inv = 0u64;
        for &d in &self.window {
            if d {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    /// Reverse the window and complement every digit.
    pub fn conjugate(&self) -> BorderSequence {
        BorderSequence {
            window: self.window.iter().rev().map(|d| !d).collect(),
            median_offset: self.window.len() - self.median_offset,
        }
    }

    pub fn frobenius(&self) -> FrobeniusCoordinates {
        let start = self.start();
        let mut alphas = Vec::new();
        let mut betas = Vec::new();
        for (i, &d) in self.window.iter().enumerate() {
            let pos = start + i as i64;
            if !d && pos >= 1 {
                alphas.push((pos - 1) as u32);
            } else if d && pos <= 0 {
                betas.push((-pos) as u32);
            }
        }
        alphas.reverse();
        FrobeniusCoordinates { alphas, betas }
    }

    /// Swaps the digits at two positions, re-canonicalizing the window.
    pub(crate) fn swapped(&self, a: i64, b: i64) -> BorderSequence {
        let (lo, hi) = if self.window.is_empty() {
            (a.min(b).min(0), a.max(b).max(1))
        } else {
            (self.start().min(a).min(b), self.end().max(a).max(b))
        };
        let (da, db) = (self.digit(a), self.digit(b));
        Self::from_fn(lo, hi, |p| {
            if p == a {
                db
            } else if p == b {
                da
            } else {
                self.digit(p)
            }
        })
        .expect("swap of a 1 and a later 0 preserves the median")
    }

    /// Renders `half_width` digits on each side of the median.
    pub fn render_span(&self, half_width: usize) -> String {
        let mut s = String::from("…");
        let h = half_width as i64;
        for p in (1 - h)..=h {
            if p == 1 {
                s.push('|');
            }
            s.push(if self.digit(p) { '1' } else { '0' });
        }
        if h == 0 {
            s.push('|');
        }
        s.push('…');
        s
    }

    /// Renders a span symmetric about the median, wide enough to show the
    /// whole window and at least two digits per side.
    pub fn render(&self) -> String {
        let before = self.median_offset;
        let after = self.window.len() - self.median_offset;
        self.render_span(before.max(after).max(2))
    }
}

impl fmt::Display for BorderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BorderSequence {
    type Err = Error;

    /// Parses `…bits|bits…`; the ellipses (`…` or `...`) are optional.
    fn from_str(s: &str) -> Result<Self> {
        let mut t = s.trim();
        for ell in ["…", "..."] {
            t = t.strip_prefix(ell).unwrap_or(t);
            t = t.strip_suffix(ell).unwrap_or(t);
        }
        let mut halves = t.split('|');
        let (before, after) = match (halves.next(), halves.next(), halves.next()) {
            (Some(b), Some(a), None) => (b, a),
            _ => {
                return Err(Error::InvalidSequence(format!(
                    "{s:?} must contain exactly one median bar '|'"
                )))
            }
        };
        let bits = |part: &str| -> Result<Vec<bool>> {
            part.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::InvalidSequence(format!(
                        "unexpected character {other:?}"
                    ))),
                })
                .collect()
        };
        Self::from_digits(&bits(before)?, &bits(after)?)
    }
}

/// Frobenius coordinates `(α | β)`, 0-based so that `(1) = (0 | 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoordinates {
    pub alphas: Vec<u32>,
    pub betas: Vec<u32>,
}

impl FrobeniusCoordinates {
    /// Side of the Durfee square.
    pub fn rank(&self) -> usize {
        self.alphas.len()
    }
}

impl fmt::Display for FrobeniusCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} | {})", join(&self.alphas), join(&self.betas))
    }
}
