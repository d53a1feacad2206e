//! k-quotients, k-cores and the reconstruction of a partition from both.
//!
//! Residue class `i` (1-based) of a border sequence consists of positions
//! `i, i ± k, i ± 2k, …`; inside the class the digit at position `i + k(s-1)`
//! sits at sub-position `s`, so the inherited median again falls between
//! sub-positions `0` and `1`.

use crate::error::{Error, Result};
use crate::partition::{BorderSequence, Partition};

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    Ok(())
}

/// Class (1-based) and sub-position of a position.
pub(crate) fn class_of(pos: i64, k: usize) -> (usize, i64) {
    let k = k as i64;
    let class = (pos - 1).rem_euclid(k) + 1;
    (class as usize, (pos - class).div_euclid(k) + 1)
}

pub(crate) fn position_of(class: usize, sub: i64, k: usize) -> i64 {
    class as i64 + k as i64 * (sub - 1)
}

/// Sub-position range wide enough for every class to cover the window of `s`.
fn sub_range(s: &BorderSequence, k: usize) -> (i64, i64) {
    if s.is_empty() {
        return (0, 1);
    }
    let (_, lo) = class_of(s.start(), k);
    let (_, hi) = class_of(s.end(), k);
    (lo - 1, hi + 1)
}

/// Decodes any finite digit list padded by `0`s on the left and `1`s on the right.
pub(crate) fn partition_from_digits(digits: impl IntoIterator<Item = bool>) -> Partition {
    let mut ones = 0u32;
    let mut rows = Vec::new();
    for d in digits {
        if d {
            ones += 1;
        } else if ones > 0 {
            rows.push(ones);
        }
    }
    rows.reverse();
    Partition::from_vec_unchecked(rows)
}

/// Core, quotient and the intrinsic-median offsets of every residue class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientDecomposition {
    pub k: usize,
    pub core: Partition,
    pub components: Vec<Partition>,
    /// How far right of the inherited median each class's own median lies.
    pub median_shifts: Vec<i64>,
}

impl QuotientDecomposition {
    pub fn new(p: &Partition, k: usize) -> Result<Self> {
        check_k(k)?;
        let s = p.encode();
        let mut components = Vec::with_capacity(k);
        let mut median_shifts = Vec::with_capacity(k);
        let (lo, hi) = sub_range(&s, k);
        for class in 1..=k {
            let digits: Vec<(i64, bool)> = (lo..=hi)
                .map(|sub| (sub, s.digit(position_of(class, sub, k))))
                .collect();
            let ones_before = digits.iter().filter(|&&(sub, d)| d && sub <= 0).count() as i64;
            let zeros_after = digits.iter().filter(|&&(sub, d)| !d && sub >= 1).count() as i64;
            components.push(partition_from_digits(digits.iter().map(|&(_, d)| d)));
            median_shifts.push(zeros_after - ones_before);
        }
        let core = core_from_shifts(&median_shifts, k);
        Ok(QuotientDecomposition {
            k,
            core,
            components,
            median_shifts,
        })
    }

    pub fn reconstruct(&self) -> Partition {
        assemble(&self.components, &self.median_shifts, self.k)
    }
}

/// The k-core whose classes have their medians at the given offsets.
fn core_from_shifts(shifts: &[i64], k: usize) -> Partition {
    let lo_shift = shifts.iter().copied().min().unwrap_or(0);
    let hi_shift = shifts.iter().copied().max().unwrap_or(0);
    let kk = k as i64;
    let lo = kk * (lo_shift - 1) - kk;
    let hi = kk * (hi_shift + 1) + kk;
    BorderSequence::from_fn(lo, hi, |pos| {
        let (class, sub) = class_of(pos, k);
        sub > shifts[class - 1]
    })
    .expect("median offsets of a partition sum to zero")
    .decode()
}

/// Interleaves the component sequences, each placed with its own median at
/// the given offset from the common one.
fn assemble(components: &[Partition], shifts: &[i64], k: usize) -> Partition {
    let seqs: Vec<BorderSequence> = components.iter().map(Partition::encode).collect();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (i, seq) in seqs.iter().enumerate() {
        let (a, b) = if seq.is_empty() {
            (0, 1)
        } else {
            (seq.start(), seq.end())
        };
        lo = lo.min(position_of(i + 1, a + shifts[i], k));
        hi = hi.max(position_of(i + 1, b + shifts[i], k));
    }
    let kk = k as i64;
    BorderSequence::from_fn(lo - kk, hi + kk, |pos| {
        let (class, sub) = class_of(pos, k);
        seqs[class - 1].digit(sub - shifts[class - 1])
    })
    .expect("median offsets of a partition sum to zero")
    .decode()
}

/// The k components, ordered by the residue of their positions after the median.
pub fn k_quotient(p: &Partition, k: usize) -> Result<Vec<Partition>> {
    Ok(QuotientDecomposition::new(p, k)?.components)
}

/// Squeezes every residue class's zeros to the left.
pub fn k_core(p: &Partition, k: usize) -> Result<Partition> {
    check_k(k)?;
    let s = p.encode();
    let (lo, hi) = sub_range(&s, k);
    let ranges: Vec<(i64, i64, i64)> = (1..=k)
        .map(|class| {
            let zeros = (lo..=hi)
                .filter(|&sub| !s.digit(position_of(class, sub, k)))
                .count() as i64;
            (lo, hi, lo + zeros)
        })
        .collect();
    let lo = (1..=k)
        .map(|c| position_of(c, ranges[c - 1].0, k))
        .min()
        .unwrap();
    let hi = (1..=k)
        .map(|c| position_of(c, ranges[c - 1].1, k))
        .max()
        .unwrap();
    let squeezed = BorderSequence::from_fn(lo, hi, |pos| {
        let (class, sub) = class_of(pos, k);
        sub >= ranges[class - 1].2
    })
    .expect("squeezing within residue classes keeps the median");
    Ok(squeezed.decode())
}

/// Empty-core criterion: every residue class's own median coincides with
/// the inherited one.
pub fn has_empty_core(p: &Partition, k: usize) -> Result<bool> {
    check_k(k)?;
    let s = p.encode();
    let mut ones_before = vec![0i64; k];
    let mut zeros_after = vec![0i64; k];
    if !s.is_empty() {
        for pos in s.start()..=s.end() {
            let (class, _) = class_of(pos, k);
            match (s.digit(pos), pos <= 0) {
                (true, true) => ones_before[class - 1] += 1,
                (false, false) => zeros_after[class - 1] += 1,
                _ => {}
            }
        }
    }
    Ok(ones_before == zeros_after)
}

/// The unique partition with the given k-core and k-quotient.
pub fn reconstruct(core: &Partition, components: &[Partition], k: usize) -> Result<Partition> {
    check_k(k)?;
    if components.len() != k {
        return Err(Error::InvalidInput(format!(
            "expected {k} quotient components, got {}",
            components.len()
        )));
    }
    let d = QuotientDecomposition::new(core, k)?;
    if let Some(i) = d.components.iter().position(|c| !c.is_empty()) {
        return Err(Error::InvalidCore(format!(
            "{core} is not a {k}-core: quotient component {} is {}",
            i + 1,
            d.components[i]
        )));
    }
    Ok(assemble(components, &d.median_shifts, k))
}
