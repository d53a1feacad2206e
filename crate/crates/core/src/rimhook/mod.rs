//! Rim hooks as digit swaps on border sequences.
//!
//! Removing a rim hook of length `L` swaps a `1` at position `a` with a `0`
//! at position `a + L`; the hook's height is the number of zeros strictly
//! between them. The median never moves, so positions stay comparable along
//! a whole peeling.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{BorderSequence, Partition};
use crate::quotient::{check_k, class_of, has_empty_core, position_of};

mod omega;
mod tableau;

pub use omega::{omega_decompose, omega_fiber_size, omega_image_space, type_splits};
pub use tableau::{enumerate_rht, tableau_height, zero_permutation, RimHookTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookRemoval {
    pub one_pos: i64,
    pub zero_pos: i64,
    pub height: u32,
}

impl HookRemoval {
    /// Validates a removal on `s` and records its height.
    pub fn on(s: &BorderSequence, one_pos: i64, zero_pos: i64) -> Result<Self> {
        if one_pos >= zero_pos {
            return Err(Error::InvalidRemoval(format!(
                "the 1 (at {one_pos}) must precede the 0 (at {zero_pos})"
            )));
        }
        if !s.digit(one_pos) || s.digit(zero_pos) {
            return Err(Error::InvalidRemoval(format!(
                "need a 1 at {one_pos} and a 0 at {zero_pos} in {s}"
            )));
        }
        let height = (one_pos + 1..zero_pos).filter(|&p| !s.digit(p)).count() as u32;
        Ok(HookRemoval {
            one_pos,
            zero_pos,
            height,
        })
    }

    pub fn length(&self) -> u32 {
        (self.zero_pos - self.one_pos) as u32
    }
}

/// Swaps the two digits of `r`, returning the smaller shape's sequence and
/// the hook height.
pub fn remove_hook(s: &BorderSequence, r: &HookRemoval) -> Result<(BorderSequence, u32)> {
    let checked = HookRemoval::on(s, r.one_pos, r.zero_pos)?;
    Ok((s.swapped(r.one_pos, r.zero_pos), checked.height))
}

/// Every removable hook of the given length, by increasing `one_pos`.
pub fn hook_removals(s: &BorderSequence, length: u32) -> Vec<HookRemoval> {
    if s.is_empty() || length == 0 {
        return Vec::new();
    }
    let len = length as i64;
    (s.start()..=s.end() - len)
        .filter(|&a| s.digit(a) && !s.digit(a + len))
        .map(|a| HookRemoval::on(s, a, a + len).expect("digits checked"))
        .collect()
}

/// Applies removals in order.
pub fn apply_removals(s: &BorderSequence, removals: &[HookRemoval]) -> Result<BorderSequence> {
    removals.iter().try_fold(s.clone(), |cur, r| {
        remove_hook(&cur, r).map(|(next, _)| next)
    })
}

/// A permutation in one-line notation on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(Error::InvalidInput(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[w] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| w == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] - 1;
                len += 1;
            }
            cycles.push(len);
        }
        Partition::from_unsorted(cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { " " } else { "" };
        let s: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

/// Labels the zeros of `shape` after its first `1` by `1, 2, …` from left
/// to right, applies the removals and reads the labels left to right.
pub fn zero_word(shape: &Partition, removals: &[HookRemoval]) -> Result<Permutation> {
    let mut seq = shape.encode();
    let mut labels: BTreeMap<i64, usize> = seq
        .zero_positions()
        .into_iter()
        .enumerate()
        .map(|(i, pos)| (pos, i + 1))
        .collect();
    for r in removals {
        let (next, _) = remove_hook(&seq, r)?;
        let label = labels
            .remove(&r.zero_pos)
            .expect("a removable zero always lies after the first 1");
        labels.insert(r.one_pos, label);
        seq = next;
    }
    Ok(Permutation(labels.into_values().collect()))
}

/// The zero permutation of any rectangular-type peeling of `p` by k-hooks,
/// obtained by squeezing the labelled zeros left inside each residue class.
pub fn lambda_permutation(p: &Partition, k: usize) -> Result<Permutation> {
    check_k(k)?;
    if !has_empty_core(p, k)? {
        return Err(Error::Precondition(format!("{p} has a nonempty {k}-core")));
    }
    let zeros = p.encode().zero_positions();
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &pos) in zeros.iter().enumerate() {
        by_class[class_of(pos, k).0 - 1].push(i + 1);
    }
    let mut settled: BTreeMap<i64, usize> = BTreeMap::new();
    for (c, labels) in by_class.iter().enumerate() {
        let n = labels.len() as i64;
        for (j, &label) in labels.iter().enumerate() {
            settled.insert(position_of(c + 1, 1 - n + j as i64, k), label);
        }
    }
    Ok(Permutation(settled.into_values().collect()))
}

/// `sign(π_λ)` for a shape with empty k-core.
pub fn lambda_sign(p: &Partition, k: usize) -> Result<i32> {
    Ok(lambda_permutation(p, k)?.sign())
}

/// A long hook of length `k·t` rewritten as `t` successive k-hooks with the
/// same final sequence, together with the height of the corresponding
/// length-`t` hook inside its residue class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitHook {
    pub short: Vec<HookRemoval>,
    pub class_height: u32,
}

pub fn split_long_hook(s: &BorderSequence, r: &HookRemoval, k: usize) -> Result<SplitHook> {
    check_k(k)?;
    let r = HookRemoval::on(s, r.one_pos, r.zero_pos)?;
    if r.length() % k as u32 != 0 {
        return Err(Error::InvalidRemoval(format!(
            "hook length {} is not divisible by {k}",
            r.length()
        )));
    }
    let (class, start) = class_of(r.one_pos, k);
    let (_, end) = class_of(r.zero_pos, k);
    let interior: Vec<i64> = (start + 1..end)
        .filter(|&sub| !s.digit(position_of(class, sub, k)))
        .collect();
    // The zero at each stop slides left onto the previous stop.
    let mut stops = vec![start];
    stops.extend(&interior);
    stops.push(end);
    let mut short = Vec::with_capacity((end - start) as usize);
    let mut cur = s.clone();
    for w in stops.windows(2) {
        let (target, from) = (w[0], w[1]);
        for sub in (target + 1..=from).rev() {
            let step = HookRemoval::on(
                &cur,
                position_of(class, sub - 1, k),
                position_of(class, sub, k),
            )?;
            cur = cur.swapped(step.one_pos, step.zero_pos);
            short.push(step);
        }
    }
    Ok(SplitHook {
        short,
        class_height: interior.len() as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn remove_hook_fixtures() {
        let s = p("4,4,3,2").encode();
        let r = HookRemoval::on(&s, -3, 1).unwrap();
        let (after, h) = remove_hook(&s, &r).unwrap();
        assert_eq!(h, 1);
        assert_eq!(after.render_span(6), "…000101|110011…");
        assert_eq!(after.decode(), p("4,4,1"));

        let s = p("1").encode();
        let rs = hook_removals(&s, 1);
        assert_eq!(rs.len(), 1);
        let (after, h) = remove_hook(&s, &rs[0]).unwrap();
        assert_eq!((after.decode(), h), (Partition::empty(), 0));

        let s = p("2,2").encode();
        let vertical: Vec<_> = hook_removals(&s, 2)
            .into_iter()
            .filter(|r| r.height == 1)
            .collect();
        assert_eq!(vertical.len(), 1);
        let (after, h) = remove_hook(&s, &vertical[0]).unwrap();
        assert_eq!((after.decode(), h), (p("1,1"), 1));
    }

    #[test]
    fn remove_hook_rejects_wrong_digits() {
        let s = p("2,2").encode();
        let bogus = HookRemoval {
            one_pos: 1,
            zero_pos: 3,
            height: 0,
        };
        assert!(matches!(
            remove_hook(&s, &bogus),
            Err(Error::InvalidRemoval(_))
        ));
    }

    #[test]
    fn lambda_sign_fixtures() {
        assert_eq!(lambda_sign(&p("2,2"), 2).unwrap(), 1);
        assert_eq!(lambda_sign(&p("3,1"), 2).unwrap(), -1);
        assert_eq!(lambda_permutation(&p("3,1"), 2).unwrap().word(), &[2, 1]);
        for n in 1..=8u32 {
            for k in 2..=n as usize {
                if (n as usize).is_multiple_of(k) {
                    assert_eq!(lambda_sign(&Partition::row(n), k).unwrap(), 1);
                }
            }
        }
        assert!(matches!(
            lambda_sign(&p("1"), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn split_paper_example() {
        let shape = p("3,3,2,2");
        let s = shape.encode();
        assert_eq!(s.render_span(4), "…1100|1001…");
        let long = HookRemoval::on(&s, -3, 3).unwrap();
        let split = split_long_hook(&s, &long, 2).unwrap();
        assert_eq!(split.short.len(), 3);
        assert_eq!(split.class_height, 1);
        let w_long = zero_word(&shape, &[long]).unwrap();
        let w_short = zero_word(&shape, &split.short).unwrap();
        assert_eq!(w_long.word(), &[4, 1, 2, 3]);
        assert_eq!(w_short.word(), &[1, 4, 2, 3]);
        let diff = w_long.inverse().compose(&w_short);
        assert_eq!(diff.cycle_type(), p("2,1,1"));
        assert_eq!(
            apply_removals(&s, &[long]).unwrap(),
            apply_removals(&s, &split.short).unwrap()
        );
    }

    #[test]
    fn split_trivial_and_small() {
        let s = p("2").encode();
        let r = hook_removals(&s, 2)[0];
        let split = split_long_hook(&s, &r, 2).unwrap();
        assert_eq!(split.short, vec![r]);

        let s = p("3,1").encode();
        let r = hook_removals(&s, 4)[0];
        let split = split_long_hook(&s, &r, 2).unwrap();
        assert_eq!(split.short.len(), 2);
        assert!(split.short.iter().all(|h| h.length() == 2));
        assert_eq!(
            apply_removals(&s, &split.short).unwrap(),
            BorderSequence::empty()
        );
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(w.inversions(), 2);
        assert_eq!(w.sign(), 1);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.cycle_type(), p("3"));
        assert!(Permutation::new(vec![1, 1]).is_err());
    }
}
