//! The map sending a rim hook tableau with k-divisible hooks to the tuple of
//! tableaux it induces on the residue classes of its border sequence.

use num_bigint::BigUint;
use num_traits::One;

use crate::characters::z_value;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quotient::{check_k, class_of, has_empty_core, k_quotient};

use super::tableau::enumerate_rht;
use super::RimHookTableau;

/// Splits a k-divisible tableau into its k quotient tableaux.
pub fn omega_decompose(t: &RimHookTableau, k: usize) -> Result<Vec<RimHookTableau>> {
    check_k(k)?;
    let shape = t.shape();
    if !has_empty_core(shape, k)? {
        return Err(Error::InvalidInput(format!(
            "{shape} has a nonempty {k}-core"
        )));
    }
    let kind = t.kind();
    if kind.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!(
            "type {kind:?} is not a partition"
        )));
    }
    if let Some(bad) = kind.iter().find(|&&x| !(x as usize).is_multiple_of(k)) {
        return Err(Error::InvalidInput(format!(
            "hook length {bad} is not divisible by {k}"
        )));
    }
    let shapes = k_quotient(shape, k)?;
    let mut kinds: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut removals: Vec<Vec<Option<(i64, i64)>>> = vec![Vec::new(); k];
    for hook in t.hooks().iter().flatten() {
        let (class, one_sub) = class_of(hook.one_pos, k);
        let (_, zero_sub) = class_of(hook.zero_pos, k);
        kinds[class - 1].push(hook.length() / k as u32);
        removals[class - 1].push(Some((one_sub, zero_sub)));
    }
    shapes
        .into_iter()
        .zip(kinds)
        .zip(removals)
        .map(|((shape, kind), rs)| RimHookTableau::from_removals(shape, kind, rs))
        .collect()
}

/// Number of tableaux of type `kμ` sharing one image under the split map:
/// `z_μ / (z_{μ₁} ⋯ z_{μ_k})`.
pub fn omega_fiber_size(mu: &Partition, mus: &[Partition]) -> Result<BigUint> {
    let sum = Partition::direct_sum(mus);
    if &sum != mu {
        return Err(Error::InvalidInput(format!(
            "the parts of the components add up to {sum}, not {mu}"
        )));
    }
    let denom = mus
        .iter()
        .map(z_value)
        .fold(BigUint::one(), |acc, z| acc * z);
    Ok(z_value(mu) / denom)
}

/// Every way of distributing the parts of `mu` over components of the
/// given sizes, each component kept weakly decreasing.
pub fn type_splits(mu: &Partition, sizes: &[u64]) -> Vec<Vec<Partition>> {
    fn rec(
        mult: &[(u32, usize)],
        room: &mut Vec<u64>,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let Some((&(value, count), rest)) = mult.split_first() else {
            if room.iter().all(|&r| r == 0) {
                out.push(
                    cur.iter()
                        .map(|c| Partition::from_vec_unchecked(c.clone()))
                        .collect(),
                );
            }
            return;
        };
        distribute(value, count, 0, rest, room, cur, out);
    }

    fn distribute(
        value: u32,
        left: usize,
        slot: usize,
        rest: &[(u32, usize)],
        room: &mut Vec<u64>,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if slot + 1 == room.len() {
            let need = left as u64 * value as u64;
            if need <= room[slot] {
                room[slot] -= need;
                cur[slot].extend(std::iter::repeat_n(value, left));
                rec(rest, room, cur, out);
                let keep = cur[slot].len() - left;
                cur[slot].truncate(keep);
                room[slot] += need;
            }
            return;
        }
        let max_here = (room[slot] / value as u64).min(left as u64) as usize;
        for here in (0..=max_here).rev() {
            let need = here as u64 * value as u64;
            room[slot] -= need;
            cur[slot].extend(std::iter::repeat_n(value, here));
            distribute(value, left - here, slot + 1, rest, room, cur, out);
            let keep = cur[slot].len() - here;
            cur[slot].truncate(keep);
            room[slot] += need;
        }
    }

    let mut out = Vec::new();
    if sizes.is_empty() {
        if mu.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    let mut room = sizes.to_vec();
    let mut cur = vec![Vec::new(); sizes.len()];
    rec(&mu.multiplicities(), &mut room, &mut cur, &mut out);
    out
}

/// The full codomain of the split map for shape `λ` and type `kμ`: every
/// tuple of tableaux over the quotient shapes whose types split `μ`.
pub fn omega_image_space(
    shape: &Partition,
    k: usize,
    mu: &Partition,
) -> Result<Vec<Vec<RimHookTableau>>> {
    let shapes = k_quotient(shape, k)?;
    let sizes: Vec<u64> = shapes.iter().map(Partition::size).collect();
    let mut out = Vec::new();
    for split in type_splits(mu, &sizes) {
        let factors: Vec<Vec<RimHookTableau>> = shapes
            .iter()
            .zip(&split)
            .map(|(s, m)| enumerate_rht(s, m.parts()))
            .collect::<Result<_>>()?;
        let mut tuples: Vec<Vec<RimHookTableau>> = vec![Vec::new()];
        for factor in &factors {
            tuples = tuples
                .into_iter()
                .flat_map(|prefix| {
                    factor.iter().map(move |t| {
                        let mut next = prefix.clone();
                        next.push(t.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(tuples);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn decompose_2_2_row_pair() {
        let all = enumerate_rht(&p("2,2"), &[2, 2]).unwrap();
        let rows = all.iter().find(|t| t.height() == 0).unwrap();
        let parts = omega_decompose(rows, 2).unwrap();
        assert_eq!(parts.len(), 2);
        for c in &parts {
            assert_eq!(c.shape(), &p("1"));
            assert_eq!(c.kind(), &[1]);
        }
    }

    #[test]
    fn decompose_empty() {
        let t = &enumerate_rht(&Partition::empty(), &[]).unwrap()[0];
        let parts = omega_decompose(t, 3).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts
            .iter()
            .all(|c| c.shape().is_empty() && c.kind().is_empty()));
    }

    #[test]
    fn decompose_3_1_single_hook() {
        let t = &enumerate_rht(&p("3,1"), &[4]).unwrap()[0];
        let parts = omega_decompose(t, 2).unwrap();
        assert_eq!(parts[0].shape(), &p("2"));
        assert_eq!(parts[0].kind(), &[2]);
        assert!(parts[1].shape().is_empty());
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let t = &enumerate_rht(&p("2,1"), &[2, 1]).unwrap()[0];
        assert!(omega_decompose(t, 3).is_err());
        let t = &enumerate_rht(&p("2,2"), &[2, 2]).unwrap()[0];
        assert!(omega_decompose(t, 3).is_err());
        let t = &enumerate_rht(&p("3,3"), &[2, 4]).unwrap()[0];
        assert!(matches!(omega_decompose(t, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn fiber_sizes() {
        assert_eq!(
            omega_fiber_size(&p("1,1"), &[p("1"), p("1")]).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            omega_fiber_size(&p("3,2,2"), &[p(""), p("3,2,2")]).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            omega_fiber_size(&p("2,1,1"), &[p("2,1"), p("1")]).unwrap(),
            BigUint::from(2u32)
        );
        assert!(omega_fiber_size(&p("2,1"), &[p("2"), p("2")]).is_err());
    }

    #[test]
    fn splits() {
        let s = type_splits(&p("2,1,1"), &[3, 1]);
        assert_eq!(s, vec![vec![p("2,1"), p("1")]]);
        let s = type_splits(&p("1,1"), &[1, 1]);
        assert_eq!(s.len(), 1);
        assert_eq!(type_splits(&p("2"), &[1, 1]).len(), 0);
        assert_eq!(type_splits(&p("2,1,1"), &[2, 2]).len(), 2);
    }
}
