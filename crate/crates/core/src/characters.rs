//! Exact symmetric group characters.
//!
//! `χ^λ_μ` is evaluated by the Murnaghan-Nakayama recursion, always peeling
//! a hook for the largest remaining cycle, with a memo keyed on the pair
//! (remaining shape, remaining cycle type). For cycle types whose parts are
//! all divisible by `k`, the k-quotient reduction evaluates the character
//! through characters of the (much smaller) quotient shapes.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quotient::{check_k, QuotientDecomposition};
use crate::rimhook::{lambda_sign, type_splits};

/// Cycle type of a conjugacy class.
pub type CycleType = Partition;

/// Exact character value.
pub type CharacterValue = BigInt;

/// Centralizer order `z_μ = Π m_j! · j^{m_j}`; `z_∅ = 1`.
pub fn z_value(mu: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in mu.multiplicities() {
        for i in 1..=mult {
            z *= BigUint::from(i) * BigUint::from(part);
        }
    }
    z
}

fn check_sizes(lambda: &Partition, expected: u64, what: &str) -> Result<()> {
    if lambda.size() != expected {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but {what} has size {expected}",
            lambda.size()
        )));
    }
    Ok(())
}

type MemoKey = (Vec<u32>, Vec<u32>);

/// Memoized Murnaghan-Nakayama evaluator, shareable across threads.
///
/// With a cap set, the memo is cleared whenever it would exceed the cap.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: RwLock<HashMap<MemoKey, BigInt>>,
    cap: Option<usize>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        MnEvaluator {
            memo: RwLock::default(),
            cap: Some(cap),
        }
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn clear(&self) {
        self.memo.write().unwrap().clear();
    }

    /// `χ^λ_μ`.
    pub fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<CharacterValue> {
        check_sizes(lambda, mu.size(), "μ")?;
        Ok(self.eval(lambda.parts(), mu.parts()))
    }

    fn eval(&self, lambda: &[u32], mu: &[u32]) -> BigInt {
        let Some((&m, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            // One cycle left: λ must itself be a hook.
            return match hook_shape_leg(lambda) {
                Some(leg) if leg % 2 == 0 => BigInt::one(),
                Some(_) => -BigInt::one(),
                None => BigInt::zero(),
            };
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, height) in remove_hooks_fast(lambda, m) {
            let v = self.eval(&smaller, rest);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        let mut memo = self.memo.write().unwrap();
        if self.cap.is_some_and(|cap| memo.len() >= cap) {
            memo.clear();
        }
        memo.insert(key, total.clone());
        total
    }

    /// `χ^λ_{kμ}` through the k-quotient of `λ`.
    pub fn littlewood_reduce(
        &self,
        lambda: &Partition,
        k: usize,
        mu: &CycleType,
    ) -> Result<CharacterValue> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        check_sizes(lambda, mu.size() * k as u64, &format!("{k}μ"))?;
        if k == 1 {
            return self.character(lambda, mu);
        }
        let d = QuotientDecomposition::new(lambda, k)?;
        if !d.core.is_empty() {
            return Ok(BigInt::zero());
        }
        let sign = lambda_sign(lambda, k)?;
        let sizes: Vec<u64> = d.components.iter().map(Partition::size).collect();
        let z_mu = z_value(mu);
        let mut total = BigInt::zero();
        for split in type_splits(mu, &sizes) {
            let mut term = BigInt::one();
            let mut denom = BigUint::one();
            for (shape, part) in d.components.iter().zip(&split) {
                term *= self.eval(shape.parts(), part.parts());
                if term.is_zero() {
                    break;
                }
                denom *= z_value(part);
            }
            if !term.is_zero() {
                total += term * BigInt::from(&z_mu / denom);
            }
        }
        Ok(if sign < 0 { -total } else { total })
    }
}

/// Leg length if `λ` is a hook shape `(a, 1^b)`, else `None`. The empty
/// shape is not a hook.
fn hook_shape_leg(lambda: &[u32]) -> Option<usize> {
    match lambda.split_first() {
        Some((_, tail)) if tail.iter().all(|&p| p == 1) => Some(tail.len()),
        _ => None,
    }
}

/// All `(λ minus a hook of length m, height)`, via the zero positions
/// `λ_i - i + 1` of the border sequence.
fn remove_hooks_fast(lambda: &[u32], m: u32) -> Vec<(Vec<u32>, u32)> {
    let len = lambda.len() as i64;
    let zeros: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 - i as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..zeros.len() {
        let target = zeros[i] - m as i64;
        if target <= -len || zeros[i + 1..].contains(&target) {
            continue;
        }
        let passed = zeros[i + 1..].iter().filter(|&&z| z > target).count();
        let mut next = zeros.clone();
        next.remove(i);
        next.insert(i + passed, target);
        let mut parts: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(j, &z)| (z + j as i64) as u32)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((parts, passed as u32));
    }
    out
}

fn shared() -> &'static MnEvaluator {
    static SHARED: OnceLock<MnEvaluator> = OnceLock::new();
    SHARED.get_or_init(MnEvaluator::new)
}

/// `χ^λ_μ` by the Murnaghan-Nakayama rule, using a process-wide memo.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<CharacterValue> {
    shared().character(lambda, mu)
}

/// `χ^λ_{kμ}` via the k-quotient, using a process-wide memo.
pub fn littlewood_reduce(lambda: &Partition, k: usize, mu: &CycleType) -> Result<CharacterValue> {
    shared().littlewood_reduce(lambda, k, mu)
}

/// `χ^λ_{(k^p)}` as `sign(π_λ)` times the number of k-ribbon tableaux.
pub fn char_rectangular(lambda: &Partition, k: usize) -> Result<CharacterValue> {
    check_k(k)?;
    if !lambda.size().is_multiple_of(k as u64) {
        return Err(Error::SizeMismatch(format!(
            "{k} does not divide |λ| = {}",
            lambda.size()
        )));
    }
    if !QuotientDecomposition::new(lambda, k)?.core.is_empty() {
        return Ok(BigInt::zero());
    }
    let count = count_ribbon_tableaux(lambda, k as u32);
    let count = BigInt::from(count);
    Ok(if lambda_sign(lambda, k)? < 0 {
        -count
    } else {
        count
    })
}

/// Number of ways to peel `λ` down to `∅` by hooks of length `k`.
pub fn count_ribbon_tableaux(lambda: &Partition, k: u32) -> BigUint {
    fn rec(lambda: &[u32], k: u32, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if lambda.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(lambda) {
            return v.clone();
        }
        let total = remove_hooks_fast(lambda, k)
            .into_iter()
            .map(|(smaller, _)| rec(&smaller, k, memo))
            .fold(BigUint::zero(), |a, b| a + b);
        memo.insert(lambda.to_vec(), total.clone());
        total
    }
    if k == 0 {
        return if lambda.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    rec(lambda.parts(), k, &mut HashMap::new())
}

/// `χ^λ(id)`, the number of standard Young tableaux, by the hook-length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for i in 2..=lambda.size() {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            den *= BigUint::from(lambda.hook_length(i, j));
        }
    }
    num / den
}
