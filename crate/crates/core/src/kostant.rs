//! Kostant's coefficients `ε(Λ̄)` for `SU(k)` and the expansion
//!
//! ```text
//! φ(x)^{k²-1} = Σ_Λ̄ ε(Λ̄) · dim V_Λ̄ · x^{c(Λ̄)}
//! ```
//!
//! `ε` is computed three ways that share no code path: from residues of the
//! shifted staircase, from the k-quotient and the squeezed zero permutation,
//! and from raw Murnaghan-Nakayama values summed over k-divisible classes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::{mn_character, z_value};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::quotient::{check_k, QuotientDecomposition};
use crate::rimhook::lambda_sign;
use crate::series::PowerSeries;

/// An `SU(k)` dominant weight `Λ̄ = (λ₁ - λ_k, …, λ_{k-1} - λ_k)`, stored as a
/// weakly decreasing `(k-1)`-tuple with `Λ̄_k = 0` implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    k: usize,
    coords: Vec<u32>,
}

impl DominantWeight {
    pub fn new(k: usize, coords: Vec<u32>) -> Result<Self> {
        check_k(k)?;
        if coords.len() != k - 1 {
            return Err(Error::InvalidInput(format!(
                "an SU({k}) weight has {} coordinates, got {}",
                k - 1,
                coords.len()
            )));
        }
        if let Some(i) = (1..coords.len()).find(|&i| coords[i] > coords[i - 1]) {
            return Err(Error::NotDecreasing {
                index: i,
                value: coords[i],
                previous: coords[i - 1],
            });
        }
        Ok(DominantWeight { k, coords })
    }

    /// Reads `Λ̄` off a partition with at most `k` parts.
    pub fn from_partition(lambda: &Partition, k: usize) -> Result<Self> {
        check_k(k)?;
        if lambda.len() > k {
            return Err(Error::InvalidInput(format!(
                "{lambda} has more than {k} parts"
            )));
        }
        let last = lambda.part(k - 1);
        Ok(DominantWeight {
            k,
            coords: (0..k - 1).map(|i| lambda.part(i) - last).collect(),
        })
    }

    pub fn trivial(k: usize) -> Result<Self> {
        Self::new(k, vec![0; k.saturating_sub(1)])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// The minimal partition representative `(Λ̄₁, …, Λ̄_{k-1}, 0)`.
    pub fn representative(&self) -> Partition {
        Partition::from_vec_unchecked(self.coords.iter().copied().filter(|&c| c > 0).collect())
    }

    /// `u_i = λ_i + k - i` for `i = 1..=k`.
    fn staircase(&self) -> Vec<i64> {
        let k = self.k as i64;
        (0..self.k)
            .map(|i| self.coords.get(i).copied().unwrap_or(0) as i64 + k - 1 - i as i64)
            .collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn sign_to_sort_descending(values: &[i64]) -> i32 {
    let mut ascents = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] < values[j] {
                ascents += 1;
            }
        }
    }
    if ascents % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ε(Λ̄)` from residues: zero unless `λ_i + k - i` hit every residue mod
/// `k`, otherwise the sign of the permutation carrying the residues of
/// `λ_i - p̄ + k - i` onto `(k - 1, …, 1, 0)`.
pub fn epsilon_closed(w: &DominantWeight) -> i32 {
    let k = w.k as i64;
    let u = w.staircase();
    let mut seen = vec![false; w.k];
    for &x in &u {
        let r = x.rem_euclid(k) as usize;
        if seen[r] {
            return 0;
        }
        seen[r] = true;
    }
    let total: i64 = w.coords.iter().map(|&c| c as i64).sum();
    debug_assert_eq!(total % k, 0, "distinct residues force k | Σλ_i");
    let p_bar = total / k;
    let residues: Vec<i64> = u.iter().map(|&x| (x - p_bar).rem_euclid(k)).collect();
    sign_to_sort_descending(&residues)
}

fn parity_sign(exp: u64) -> i32 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_representative(lambda: &Partition, k: usize) -> Result<()> {
    check_k(k)?;
    if lambda.len() > k {
        return Err(Error::InvalidInput(format!(
            "{lambda} has more than {k} parts"
        )));
    }
    Ok(())
}

/// `ε` for the weight represented by `λ` (at most `k` parts): zero unless
/// the k-core is empty and every quotient component has at most one row,
/// otherwise `(-1)^{(k-1)p} sign(π_λ)` with `p = |λ|/k`.
pub fn epsilon_theorem(lambda: &Partition, k: usize) -> Result<i32> {
    check_representative(lambda, k)?;
    if !lambda.size().is_multiple_of(k as u64) {
        return Ok(0);
    }
    let d = QuotientDecomposition::new(lambda, k)?;
    if !d.core.is_empty() || d.components.iter().any(|c| c.len() >= 2) {
        return Ok(0);
    }
    let p = lambda.size() / k as u64;
    Ok(parity_sign((k as u64 - 1) * p) * lambda_sign(lambda, k)?)
}

/// `ε` as `(-1)^{(k-1)p} Σ_{μ ⊢ p} χ^λ_{kμ} / z_μ`, summed in exact rationals.
pub fn epsilon_bruteforce(lambda: &Partition, k: usize) -> Result<BigInt> {
    check_representative(lambda, k)?;
    if !lambda.size().is_multiple_of(k as u64) {
        return Ok(BigInt::zero());
    }
    let p = lambda.size() / k as u64;
    let mut sum = BigRational::zero();
    for mu in partitions_of(p as u32) {
        let chi = mn_character(lambda, &mu.scaled(k as u32))?;
        sum += BigRational::new(chi, BigInt::from(z_value(&mu)));
    }
    if !sum.is_integer() {
        return Err(Error::CrossCheck(format!(
            "class sum for {lambda}, k={k} is {sum}, not an integer"
        )));
    }
    let eps = sum.to_integer();
    Ok(if parity_sign((k as u64 - 1) * p) < 0 {
        -eps
    } else {
        eps
    })
}

/// Weyl's dimension formula `Π_{i<j} (u_i - u_j)/(j - i)`.
pub fn weyl_dim(w: &DominantWeight) -> BigUint {
    let u = w.staircase();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            num *= BigUint::from((u[i] - u[j]) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    num / den
}

/// `12(k Σu² - (Σu)²)`, i.e. `12k` times the squared length of `Λ̄ + ρ`.
fn scaled_norm(u: &[i64]) -> i128 {
    let k = u.len() as i128;
    let s: i128 = u.iter().map(|&x| x as i128).sum();
    let q: i128 = u.iter().map(|&x| (x as i128) * (x as i128)).sum();
    12 * (k * q - s * s)
}

/// `c(Λ̄) = (Λ̄+ρ, Λ̄+ρ) - (ρ, ρ)`, normalised so that the exponents match the
/// `φ`-power: `[Σu_i² - (Σu_i)²/k - k(k²-1)/12] / (2k)`.
pub fn c_exponent(w: &DominantWeight) -> Ratio<i64> {
    let k = w.k as i128;
    let num = scaled_norm(&w.staircase()) - k * k * (k * k - 1);
    let den = 24 * k * k;
    Ratio::new(num as i64, den as i64)
}

/// All dominant weights with `c(Λ̄) ≤ order`, in lexicographic order.
pub fn enumerate_weights(k: usize, order: usize) -> Result<Vec<DominantWeight>> {
    check_k(k)?;
    let kk = k as i128;
    let n = order as i128;
    // Σ(u_i - ū)² ≥ u₁²/2 because u_k = 0; this bounds λ₁.
    let radicand = (4 * kk * n + kk * kk * (kk * kk - 1) / 6) as f64;
    let top = radicand.sqrt().ceil() as u32 + k as u32;
    let limit = kk * kk * (24 * n + kk * kk - 1);

    let mut out = Vec::new();
    let mut coords = Vec::with_capacity(k - 1);
    descend(k, top, limit, &mut coords, &mut out);
    Ok(out)
}

/// Squared deviation of the chosen staircase entries together with `u_k = 0`
/// about their own mean never exceeds the full one; scaled like `limit`.
fn partial_bound_exceeds(k: usize, coords: &[u32], limit: i128) -> bool {
    let mut u: Vec<i64> = coords
        .iter()
        .enumerate()
        .map(|(i, &c)| c as i64 + k as i64 - 1 - i as i64)
        .collect();
    u.push(0);
    let m = u.len() as i128;
    let s: i128 = u.iter().map(|&x| x as i128).sum();
    let q: i128 = u.iter().map(|&x| (x as i128) * (x as i128)).sum();
    // SS_partial = (m q - s²)/m; compare with limit/(12k).
    12 * (k as i128) * (m * q - s * s) > limit * m
}

fn descend(k: usize, cap: u32, limit: i128, coords: &mut Vec<u32>, out: &mut Vec<DominantWeight>) {
    if coords.len() == k - 1 {
        let w = DominantWeight {
            k,
            coords: coords.clone(),
        };
        if scaled_norm(&w.staircase()) <= limit {
            out.push(w);
        }
        return;
    }
    for v in 0..=cap {
        coords.push(v);
        if !partial_bound_exceeds(k, coords, limit) {
            descend(k, v, limit, coords, out);
        }
        coords.pop();
    }
}

/// One nonzero summand `ε · dim · x^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantTerm {
    pub weight: DominantWeight,
    pub epsilon: i32,
    pub dim: BigUint,
    pub exponent: u64,
}

impl KostantTerm {
    pub fn coefficient(&self) -> BigInt {
        let d = BigInt::from(self.dim.clone());
        if self.epsilon < 0 {
            -d
        } else {
            d
        }
    }
}

/// Nonzero terms with exponent at most `order`, sorted by exponent and then
/// by weight. Terms are computed in parallel.
pub fn term_table(k: usize, order: usize) -> Result<Vec<KostantTerm>> {
    let weights = enumerate_weights(k, order)?;
    let mut terms: Vec<KostantTerm> = weights
        .into_par_iter()
        .filter_map(|weight| {
            let epsilon = epsilon_closed(&weight);
            if epsilon == 0 {
                return None;
            }
            let c = c_exponent(&weight);
            Some(if c.is_integer() && !c.is_negative() {
                Ok(KostantTerm {
                    dim: weyl_dim(&weight),
                    exponent: c.to_integer().to_u64().expect("nonnegative"),
                    weight,
                    epsilon,
                })
            } else {
                Err(Error::CrossCheck(format!(
                    "weight {weight} has ε ≠ 0 but exponent {c}"
                )))
            })
        })
        .collect::<Result<_>>()?;
    terms.retain(|t| t.exponent as usize <= order);
    terms.sort_by(|a, b| {
        a.exponent
            .cmp(&b.exponent)
            .then_with(|| a.weight.cmp(&b.weight))
    });
    Ok(terms)
}

/// `Σ ε(Λ̄) dim V_Λ̄ x^{c(Λ̄)}` truncated at `order`.
pub fn kostant_series(k: usize, order: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::zero(order);
    for t in term_table(k, order)? {
        s.add_term(t.exponent as usize, &t.coefficient());
    }
    Ok(s)
}

/// `φ(x)^{k²-1}` expanded directly.
pub fn direct_series(k: usize, order: usize) -> Result<PowerSeries> {
    check_k(k)?;
    crate::series::phi(order).power((k * k - 1) as u32)
}
