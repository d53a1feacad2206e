//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rimhook::{
    enumerate_rht, epsilon_bruteforce, epsilon_closed, epsilon_theorem, has_empty_core, k_core,
    k_quotient, kostant_series, lambda_sign, littlewood_reduce, mn_character, omega_decompose,
    omega_fiber_size, omega_image_space, partitions_bounded, partitions_of, phi, phi_by_product,
    reconstruct, split_long_hook, z_value, zero_word, DominantWeight, HookRemoval, MnEvaluator,
    Partition, PowerSeries, RimHookTableau,
};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> std::result::Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:.2?}, limit {limit:?}")
    })
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Schoolbook product, independent of `PowerSeries::multiply`.
fn naive_power(base: &PowerSeries, d: u32) -> Vec<BigInt> {
    let n = base.order();
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for _ in 0..d {
        let mut next = vec![BigInt::zero(); n + 1];
        for i in 0..=n {
            if acc[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                next[i + j] += &acc[i] * base.coeff(j);
            }
        }
        acc = next;
    }
    acc
}

fn jacobi() -> Check {
    let start = Instant::now();
    let lhs = kostant_series(2, 60).map_err(|e| e.to_string())?;
    let rhs = phi(60).power(3).map_err(|e| e.to_string())?;
    within(start.elapsed(), Duration::from_secs(5), "k=2, N=60")?;
    ensure(lhs == rhs, || "weight sum differs from φ³".into())?;
    ensure(
        rhs.coeffs() == naive_power(&phi_by_product(60), 3).as_slice(),
        || "φ³ differs from the schoolbook cube of the product expansion".into(),
    )?;
    let triangular: BTreeMap<usize, i64> = (0..12)
        .map(|n| {
            (
                n * (n + 1) / 2,
                if n % 2 == 0 { 1 } else { -1 } * (2 * n as i64 + 1),
            )
        })
        .collect();
    for i in 0..=60 {
        let want = triangular.get(&i).copied().unwrap_or(0);
        ensure(lhs.coeff(i) == &BigInt::from(want), || {
            format!("coefficient of x^{i} is {}", lhs.coeff(i))
        })?;
    }
    Ok(format!("61 coefficients exact, {:.2?}", start.elapsed()))
}

fn higher_powers() -> Check {
    let start = Instant::now();
    for (k, n) in [(3usize, 40usize), (4, 30), (5, 20)] {
        let lhs = kostant_series(k, n).map_err(|e| e.to_string())?;
        let rhs = phi(n)
            .power((k * k - 1) as u32)
            .map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            format!("k={k} N={n}: weight sum differs from φ^{}", k * k - 1)
        })?;
        ensure(
            rhs.coeffs() == naive_power(&phi_by_product(n), (k * k - 1) as u32).as_slice(),
            || format!("k={k} N={n}: φ-power differs from the schoolbook product"),
        )?;
    }
    // Δ = x φ²⁴, so τ(n) is the coefficient of x^{n-1}.
    let delta = kostant_series(5, 20).map_err(|e| e.to_string())?;
    ensure(delta.coeff(1) == &BigInt::from(-24), || {
        format!("τ(2) = {}", delta.coeff(1))
    })?;
    ensure(delta.coeff(2) == &BigInt::from(252), || {
        format!("τ(3) = {}", delta.coeff(2))
    })?;
    within(start.elapsed(), Duration::from_secs(60), "k=3,4,5")?;
    Ok(format!(
        "(3,40) (4,30) (5,20) exact, τ(2)=-24, τ(3)=252, {:.2?}",
        start.elapsed()
    ))
}

fn epsilon_agreement() -> Check {
    let mut checked = 0;
    let mut nonzero = 0;
    for k in 2..=4usize {
        for kp in (0..=12u32).step_by(k) {
            for lambda in partitions_bounded(kp, kp, k) {
                let w = DominantWeight::from_partition(&lambda, k).map_err(|e| e.to_string())?;
                let closed = epsilon_closed(&w);
                let theorem = epsilon_theorem(&lambda, k).map_err(|e| e.to_string())?;
                let brute = epsilon_bruteforce(&lambda, k).map_err(|e| e.to_string())?;
                ensure(
                    BigInt::from(closed) == brute
                        && closed == theorem
                        && (-1..=1).contains(&closed),
                    || {
                        format!(
                            "λ={lambda} k={k}: closed {closed}, theorem {theorem}, brute {brute}"
                        )
                    },
                )?;
                checked += 1;
                nonzero += (closed != 0) as usize;
            }
        }
    }
    Ok(format!("{checked} weights, {nonzero} nonzero"))
}

fn littlewood() -> Check {
    let mut checked = 0;
    for k in 2..=3usize {
        for pp in 0..=4u32 {
            for lambda in partitions_of(k as u32 * pp) {
                for mu in partitions_of(pp) {
                    let direct =
                        mn_character(&lambda, &mu.scaled(k as u32)).map_err(|e| e.to_string())?;
                    let reduced = littlewood_reduce(&lambda, k, &mu).map_err(|e| e.to_string())?;
                    ensure(direct == reduced, || {
                        format!("λ={lambda} k={k} μ={mu}: MN {direct}, reduction {reduced}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} character values"))
}

fn height_parity() -> Check {
    let mut checked = 0;
    for n in 0..=8u32 {
        for shape in partitions_of(n) {
            for kind in partitions_of(n) {
                for t in enumerate_rht(&shape, kind.parts()).map_err(|e| e.to_string())? {
                    let w = t.zero_permutation();
                    let parity = if t.height() % 2 == 0 { 1 } else { -1 };
                    ensure(w.sign() == parity, || {
                        format!(
                            "shape {shape} type {kind}: sign {} height {}",
                            w.sign(),
                            t.height()
                        )
                    })?;
                    if kind.parts().iter().all(|&x| x == 1) {
                        ensure(w.is_identity(), || {
                            format!("standard tableau of {shape} has word {w}")
                        })?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn sign_decomposition() -> Check {
    let mut tableaux = 0;
    let mut fibers = 0;
    for k in 2..=3usize {
        for n in (0..=10u32).step_by(k) {
            for shape in partitions_of(n) {
                if !has_empty_core(&shape, k).map_err(|e| e.to_string())? {
                    continue;
                }
                let sign_lambda = lambda_sign(&shape, k).map_err(|e| e.to_string())?;
                for mu in partitions_of(n / k as u32) {
                    let kmu = mu.scaled(k as u32);
                    let mut image: BTreeMap<Vec<RimHookTableau>, usize> = BTreeMap::new();
                    for t in enumerate_rht(&shape, kmu.parts()).map_err(|e| e.to_string())? {
                        let parts = omega_decompose(&t, k).map_err(|e| e.to_string())?;
                        let product: i32 =
                            parts.iter().map(|c| c.zero_permutation().sign()).product();
                        ensure(t.zero_permutation().sign() == sign_lambda * product, || {
                            format!("shape {shape} k={k} type {kmu}: sign mismatch")
                        })?;
                        *image.entry(parts).or_default() += 1;
                        tableaux += 1;
                    }
                    let space: BTreeSet<Vec<RimHookTableau>> = omega_image_space(&shape, k, &mu)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .collect();
                    let hit: BTreeSet<Vec<RimHookTableau>> = image.keys().cloned().collect();
                    ensure(hit == space, || {
                        format!("shape {shape} k={k} μ={mu}: ω is not onto")
                    })?;
                    for (tuple, count) in &image {
                        let mus: Vec<Partition> = tuple
                            .iter()
                            .map(|c| Partition::new(c.kind().to_vec()).unwrap())
                            .collect();
                        let expected = omega_fiber_size(&mu, &mus).map_err(|e| e.to_string())?;
                        ensure(expected == (*count).into(), || {
                            format!("shape {shape} k={k} μ={mu}: fiber of size {count}, expected {expected}")
                        })?;
                        fibers += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{tableaux} tableaux, {fibers} fibers"))
}

/// Removes k-hooks one at a time until none is left.
fn greedy_core(lambda: &Partition, k: usize) -> Partition {
    let mut s = lambda.encode();
    loop {
        if s.is_empty() {
            return Partition::empty();
        }
        let found = (s.start()..=s.end()).find(|&a| s.digit(a) && !s.digit(a + k as i64));
        match found {
            Some(a) => {
                let r = HookRemoval::on(&s, a, a + k as i64).unwrap();
                s = rimhook::remove_hook(&s, &r).unwrap().0;
            }
            None => return s.decode(),
        }
    }
}

fn core_quotient() -> Check {
    let mut checked = 0;
    for k in 2..=4usize {
        for n in 0..=12u32 {
            for lambda in partitions_of(n) {
                let core = k_core(&lambda, k).map_err(|e| e.to_string())?;
                let quot = k_quotient(&lambda, k).map_err(|e| e.to_string())?;
                ensure(core == greedy_core(&lambda, k), || {
                    format!("λ={lambda} k={k}: core {core}")
                })?;
                let back = reconstruct(&core, &quot, k).map_err(|e| e.to_string())?;
                ensure(back == lambda, || {
                    format!("λ={lambda} k={k}: rebuilt as {back}")
                })?;
                let qsize: u64 = quot.iter().map(Partition::size).sum();
                ensure(lambda.size() == core.size() + k as u64 * qsize, || {
                    format!("λ={lambda} k={k}: size identity fails")
                })?;
                let empty = has_empty_core(&lambda, k).map_err(|e| e.to_string())?;
                ensure(empty == core.is_empty(), || {
                    format!("λ={lambda} k={k}: empty-core criterion")
                })?;
                ensure(!empty || lambda.size() % k as u64 == 0, || {
                    format!("λ={lambda} k={k}: k ∤ |λ|")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, k) pairs"))
}

fn orthogonality() -> Check {
    let mut checked = 0;
    for n in 0..=8u32 {
        let classes = partitions_of(n);
        for lambda in partitions_of(n) {
            let mut sum = BigRational::zero();
            for mu in &classes {
                let chi = mn_character(&lambda, mu).map_err(|e| e.to_string())?;
                sum += BigRational::new(chi, BigInt::from(z_value(mu)));
            }
            let expected = if lambda.len() <= 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            ensure(sum == expected, || format!("λ={lambda}: Σ χ/z = {sum}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} characters"))
}

fn paper_fixtures() -> Check {
    let lambda = p("4,4,3,2");
    let s = lambda.encode();
    ensure(s.render_span(6) == "…001101|010011…", || {
        format!("s(4,4,3,2) = {}", s.render_span(6))
    })?;
    let classes: Vec<String> = (1..=3i64)
        .map(|c| {
            let digit = |sub: i64| if s.digit(c + 3 * (sub - 1)) { '1' } else { '0' };
            format!("{}{}|{}{}", digit(-1), digit(0), digit(1), digit(2))
        })
        .collect();
    ensure(classes == ["01|00", "00|11", "11|01"], || {
        format!("class subsequences {classes:?}")
    })?;
    let quot = k_quotient(&lambda, 3).map_err(|e| e.to_string())?;
    ensure(quot == [p("1,1"), Partition::empty(), p("2")], || {
        format!("quot₃ = {quot:?}")
    })?;

    let t = RimHookTableau::from_filling(&[vec![1, 1, 4], vec![3, 4, 4], vec![3]])
        .map_err(|e| e.to_string())?;
    ensure(t.shape() == &p("3,3,1") && t.kind() == [2, 0, 2, 3], || {
        "tableau shape/type".into()
    })?;
    ensure(t.zero_permutation().word() == [3, 1, 2], || {
        format!("π_T = {}", t.zero_permutation())
    })?;

    let shape = p("3,3,2,2");
    let s = shape.encode();
    let long = HookRemoval::on(&s, -3, 3).map_err(|e| e.to_string())?;
    let split = split_long_hook(&s, &long, 2).map_err(|e| e.to_string())?;
    let w_long = zero_word(&shape, &[long]).map_err(|e| e.to_string())?;
    let w_short = zero_word(&shape, &split.short).map_err(|e| e.to_string())?;
    ensure(
        w_long.word() == [4, 1, 2, 3] && w_short.word() == [1, 4, 2, 3],
        || format!("split words {w_long} and {w_short}"),
    )?;
    let diff = w_long.inverse().compose(&w_short);
    ensure(diff.cycle_type() == p("2,1,1"), || {
        format!("words differ by {}", diff.cycle_type())
    })?;
    Ok("…001101|010011…, ((1,1),∅,(2)), 312, 4123 vs 1423".into())
}

/// Random shape of size 40 with empty 2-core, from a random 2-quotient.
fn random_shape(rng: &mut ChaCha8Rng) -> Partition {
    let left = rng.gen_range(0..=20u32);
    let a = partitions_of(left).choose(rng).unwrap().clone();
    let b = partitions_of(20 - left).choose(rng).unwrap().clone();
    reconstruct(&Partition::empty(), &[a, b], 2).unwrap()
}

fn performance() -> Check {
    let seed = 0x5eed_2024u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda = random_shape(&mut rng);
    let unit = Partition::rectangle(1, 20);
    let start = Instant::now();
    let reduced = MnEvaluator::new()
        .littlewood_reduce(&lambda, 2, &unit)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1), "quotient reduction")?;
    let direct = MnEvaluator::new()
        .character(&lambda, &Partition::rectangle(2, 20))
        .map_err(|e| e.to_string())?;
    ensure(reduced == direct, || {
        format!("λ={lambda}: reduction {reduced}, MN {direct}")
    })?;
    Ok(format!(
        "seed {seed:#x}, λ={lambda}, χ={reduced}, {elapsed:.2?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Jacobi identity", jacobi),
        ("higher powers", higher_powers),
        ("epsilon three-way agreement", epsilon_agreement),
        ("quotient reduction of characters", littlewood),
        ("sign/height parity", height_parity),
        ("sign decomposition and fiber law", sign_decomposition),
        ("core/quotient bijection", core_quotient),
        ("orthogonality", orthogonality),
        ("worked examples", paper_fixtures),
        ("performance smoke", performance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
