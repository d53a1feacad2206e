use crate::error::{Error, Result};
use crate::partition::{BorderSequence, Partition};

use super::{hook_removals, zero_word, HookRemoval, Permutation};

/// A rim hook tableau stored as its chain `∅ = λ⁰ ⊆ … ⊆ λʳ = shape`.
///
/// `hooks[i]` is the removal taking `chain[i + 1]` to `chain[i]` (entry
/// `i + 1`), or `None` for an empty hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RimHookTableau {
    shape: Partition,
    kind: Vec<u32>,
    chain: Vec<Partition>,
    hooks: Vec<Option<HookRemoval>>,
}

impl RimHookTableau {
    /// Builds a tableau from its removals listed by entry; they are applied
    /// from the largest entry down.
    pub fn from_removals(
        shape: Partition,
        kind: Vec<u32>,
        removals: Vec<Option<(i64, i64)>>,
    ) -> Result<Self> {
        if removals.len() != kind.len() {
            return Err(Error::InvalidType(format!(
                "{} removals for a type with {} entries",
                removals.len(),
                kind.len()
            )));
        }
        let mut seq = shape.encode();
        let mut chain = vec![shape.clone()];
        let mut hooks = vec![None; kind.len()];
        for entry in (0..kind.len()).rev() {
            match removals[entry] {
                None if kind[entry] == 0 => {}
                Some((a, b)) if b - a == kind[entry] as i64 => {
                    let r = HookRemoval::on(&seq, a, b)?;
                    seq = seq.swapped(a, b);
                    hooks[entry] = Some(r);
                }
                other => {
                    return Err(Error::InvalidRemoval(format!(
                        "entry {} expects a hook of length {}, got {other:?}",
                        entry + 1,
                        kind[entry]
                    )))
                }
            }
            chain.push(seq.decode());
        }
        if !seq.is_empty() {
            return Err(Error::InvalidRemoval(format!(
                "peeling stops at {} instead of ∅",
                seq.decode()
            )));
        }
        chain.reverse();
        Ok(RimHookTableau {
            shape,
            kind,
            chain,
            hooks,
        })
    }

    /// Reads a tableau from its rows of entries; the type counts each entry
    /// `1..=max`.
    pub fn from_filling(rows: &[Vec<u32>]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidInput(
                "tableau entries must be positive".into(),
            ));
        }
        let mut kind = vec![0u32; max as usize];
        for &e in rows.iter().flatten() {
            kind[e as usize - 1] += 1;
        }
        let mut removals = Vec::with_capacity(kind.len());
        for entry in 1..=max {
            let outer = sub_shape(rows, entry)?;
            let inner = sub_shape(rows, entry - 1)?;
            removals.push(diff_as_removal(&outer, &inner)?);
        }
        Self::from_removals(shape, kind, removals)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The type (a weak composition).
    pub fn kind(&self) -> &[u32] {
        &self.kind
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn hooks(&self) -> &[Option<HookRemoval>] {
        &self.hooks
    }

    /// Removals in peeling order, empty hooks skipped.
    pub fn peeling(&self) -> Vec<HookRemoval> {
        self.hooks.iter().rev().flatten().copied().collect()
    }

    pub fn height(&self) -> u32 {
        self.hooks.iter().flatten().map(|h| h.height).sum()
    }

    pub fn zero_permutation(&self) -> Permutation {
        zero_word(&self.shape, &self.peeling()).expect("tableau removals are valid")
    }

    /// Rows of entries.
    pub fn filling(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self
            .shape
            .parts()
            .iter()
            .map(|&len| vec![0; len as usize])
            .collect();
        for entry in 1..self.chain.len() {
            let (inner, outer) = (&self.chain[entry - 1], &self.chain[entry]);
            for (r, row) in rows.iter_mut().enumerate() {
                for cell in row
                    .iter_mut()
                    .take(outer.part(r) as usize)
                    .skip(inner.part(r) as usize)
                {
                    *cell = entry as u32;
                }
            }
        }
        rows
    }
}

fn sub_shape(rows: &[Vec<u32>], bound: u32) -> Result<Partition> {
    let mut parts = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let len = row.iter().take_while(|&&e| e <= bound).count();
        if row[len..].iter().any(|&e| e <= bound) || row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(format!(
                "row {} is not weakly increasing",
                r + 1
            )));
        }
        parts.push(len as u32);
    }
    Partition::new(parts)
        .map_err(|_| Error::InvalidInput(format!("entries ≤ {bound} do not form a diagram")))
}

/// Recognises `outer / inner` as a single digit swap, i.e. a rim hook.
fn diff_as_removal(outer: &Partition, inner: &Partition) -> Result<Option<(i64, i64)>> {
    if outer == inner {
        return Ok(None);
    }
    let (a, b) = (outer.encode(), inner.encode());
    let lo = [&a, &b]
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.start())
        .min()
        .unwrap_or(0);
    let hi = [&a, &b]
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.end())
        .max()
        .unwrap_or(1);
    let diffs: Vec<i64> = (lo..=hi).filter(|&p| a.digit(p) != b.digit(p)).collect();
    match diffs.as_slice() {
        &[x, y] if a.digit(x) && !a.digit(y) => Ok(Some((x, y))),
        _ => Err(Error::InvalidInput(format!(
            "{outer} / {inner} is not a rim hook"
        ))),
    }
}

fn check_type(shape: &Partition, kind: &[u32]) -> Result<()> {
    let total: u64 = kind.iter().map(|&x| x as u64).sum();
    if total != shape.size() {
        return Err(Error::InvalidType(format!(
            "type sums to {total} but the shape {shape} has size {}",
            shape.size()
        )));
    }
    Ok(())
}

/// All rim hook tableaux of the given shape and weak-composition type.
///
/// Peeling starts at the largest entry; at each step hooks are tried by
/// increasing position of their `1`.
pub fn enumerate_rht(shape: &Partition, kind: &[u32]) -> Result<Vec<RimHookTableau>> {
    check_type(shape, kind)?;
    let mut out = Vec::new();
    let mut picks = vec![None; kind.len()];
    peel(
        shape,
        kind,
        &shape.encode(),
        kind.len(),
        &mut picks,
        &mut out,
    );
    Ok(out)
}

fn peel(
    shape: &Partition,
    kind: &[u32],
    seq: &BorderSequence,
    entries_left: usize,
    picks: &mut Vec<Option<(i64, i64)>>,
    out: &mut Vec<RimHookTableau>,
) {
    if entries_left == 0 {
        if seq.is_empty() {
            out.push(
                RimHookTableau::from_removals(shape.clone(), kind.to_vec(), picks.clone())
                    .expect("enumerated removals are valid"),
            );
        }
        return;
    }
    let entry = entries_left - 1;
    let len = kind[entry];
    if len == 0 {
        picks[entry] = None;
        peel(shape, kind, seq, entry, picks, out);
        return;
    }
    for r in hook_removals(seq, len) {
        picks[entry] = Some((r.one_pos, r.zero_pos));
        peel(
            shape,
            kind,
            &seq.swapped(r.one_pos, r.zero_pos),
            entry,
            picks,
            out,
        );
    }
    picks[entry] = None;
}

pub fn tableau_height(t: &RimHookTableau) -> u32 {
    t.height()
}

pub fn zero_permutation(t: &RimHookTableau) -> Permutation {
    t.zero_permutation()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn paper_tableau() -> RimHookTableau {
        RimHookTableau::from_filling(&[vec![1, 1, 4], vec![3, 4, 4], vec![3]]).unwrap()
    }

    #[test]
    fn paper_tableau_is_enumerated() {
        let t = paper_tableau();
        assert_eq!(t.shape(), &p("3,3,1"));
        assert_eq!(t.kind(), &[2, 0, 2, 3]);
        let all = enumerate_rht(&p("3,3,1"), &[2, 0, 2, 3]).unwrap();
        assert!(all.contains(&t));
        assert_eq!(t.filling(), vec![vec![1, 1, 4], vec![3, 4, 4], vec![3]]);
    }

    #[test]
    fn paper_tableau_height_and_word() {
        let t = paper_tableau();
        assert_eq!(tableau_height(&t), 2);
        assert_eq!(zero_permutation(&t).word(), &[3, 1, 2]);
    }

    #[test]
    fn empty_and_small_enumerations() {
        let all = enumerate_rht(&Partition::empty(), &[]).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].chain(), &[Partition::empty()]);

        let all = enumerate_rht(&p("2,2"), &[2, 2]).unwrap();
        assert_eq!(all.len(), 2);
        let mut heights: Vec<u32> = all.iter().map(|t| t.height()).collect();
        heights.sort();
        assert_eq!(heights, vec![0, 2]);
        let fillings: Vec<_> = all.iter().map(|t| t.filling()).collect();
        assert!(fillings.contains(&vec![vec![1, 1], vec![2, 2]]));
        assert!(fillings.contains(&vec![vec![1, 2], vec![1, 2]]));
    }

    #[test]
    fn unique_domino_tableau_of_3_1() {
        let all = enumerate_rht(&p("3,1"), &[2, 2]).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].zero_permutation().word(), &[2, 1]);
    }

    #[test]
    fn standard_tableaux_have_identity_word() {
        let all = enumerate_rht(&p("3,2,1"), &[1; 6]).unwrap();
        assert_eq!(all.len(), 16);
        for t in &all {
            assert_eq!(t.height(), 0);
            assert!(t.zero_permutation().is_identity());
        }
    }

    #[test]
    fn type_size_mismatch() {
        assert!(matches!(
            enumerate_rht(&p("2,1"), &[2]),
            Err(Error::InvalidType(_))
        ));
    }

    #[test]
    fn bad_fillings_rejected() {
        assert!(RimHookTableau::from_filling(&[vec![1, 2], vec![1, 2], vec![1]]).is_ok());
        assert!(RimHookTableau::from_filling(&[vec![2, 1]]).is_err());
        assert!(RimHookTableau::from_filling(&[vec![1, 2], vec![1]]).is_ok());
        // Entry 2 occupies two disconnected cells.
        assert!(RimHookTableau::from_filling(&[vec![1, 2], vec![2, 3]]).is_err());
        assert!(RimHookTableau::from_filling(&[vec![2, 2, 1]]).is_err());
        assert!(RimHookTableau::from_filling(&[vec![1, 1], vec![1, 1]]).is_err());
    }
}
