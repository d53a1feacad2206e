//! Truncated power series with exact integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Orders at or above this multiply output coefficients in parallel.
const PARALLEL_ORDER: usize = 64;

/// `Σ_{n ≤ order} c_n x^n`, everything past `order` discarded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Coefficients `c_0 … c_N`; an empty list is treated as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        PowerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Adds `c·x^n`; terms beyond the order are dropped.
    pub fn add_term(&mut self, n: usize, c: &BigInt) {
        if let Some(slot) = self.coeffs.get_mut(n) {
            *slot += c;
        }
    }

    /// Cauchy product, truncated.
    pub fn multiply(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.order() != other.order() {
            return Err(Error::InvalidInput(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        let (a, b) = (&self.coeffs, &other.coeffs);
        let coeff = |n: usize| -> BigInt {
            (0..=n)
                .filter(|&i| !a[i].is_zero() && !b[n - i].is_zero())
                .map(|i| &a[i] * &b[n - i])
                .sum()
        };
        let n = self.order();
        let coeffs = if n >= PARALLEL_ORDER {
            (0..=n).into_par_iter().map(coeff).collect()
        } else {
            (0..=n).map(coeff).collect()
        };
        Ok(PowerSeries { coeffs })
    }

    /// `self^d` by repeated squaring.
    pub fn power(&self, d: u32) -> Result<PowerSeries> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "exponent must be at least 1".into(),
            ));
        }
        let mut base = self.clone();
        let mut acc: Option<PowerSeries> = None;
        let mut e = d;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.multiply(&base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.multiply(&base)?;
        }
        Ok(acc.expect("d >= 1"))
    }

    /// Nonzero terms as `(exponent, decimal coefficient)` pairs.
    pub fn terms(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (n, c.to_string()))
            .collect()
    }

    /// `c0 + c1*x + c2*x^2 + …` with zero terms omitted.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_mag = n == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match n {
                0 => {}
                1 if show_mag => out.push_str("*x"),
                1 => out.push('x'),
                _ if show_mag => out.push_str(&format!("*x^{n}")),
                _ => out.push_str(&format!("x^{n}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `Π (1 - x^n)` truncated at `order`, from the pentagonal-number expansion
/// `Σ_j (-1)^j x^{j(3j-1)/2}` over all integers `j`.
pub fn phi(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    s.coeffs[0] = BigInt::one();
    for j in 1usize.. {
        let sign = if j % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let lower = j * (3 * j - 1) / 2;
        if lower > order {
            break;
        }
        s.coeffs[lower] += &sign;
        let upper = j * (3 * j + 1) / 2;
        if upper <= order {
            s.coeffs[upper] += &sign;
        }
    }
    s
}

/// `Π (1 - x^n)` for `n ≤ order`, multiplied out factor by factor.
pub fn phi_by_product(order: usize) -> PowerSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for n in 1..=order {
        for i in (n..=order).rev() {
            let prev = c[i - n].clone();
            c[i] -= prev;
        }
    }
    PowerSeries { coeffs: c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_fixtures() {
        assert_eq!(phi(7), PowerSeries::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(phi(0), PowerSeries::one(0));
        assert_eq!(phi(12).coeff(12), &BigInt::from(-1));
        assert_eq!(phi(7).render(), "1 - x - x^2 + x^5 + x^7");
    }

    #[test]
    fn phi_matches_product() {
        assert_eq!(phi(200), phi_by_product(200));
        for n in 0..30 {
            assert_eq!(phi(n), phi_by_product(n));
        }
    }

    #[test]
    fn multiply_fixtures() {
        let a = PowerSeries::from_i64s(&[3, -2, 7]);
        assert_eq!(a.multiply(&PowerSeries::one(2)).unwrap(), a);
        let m = PowerSeries::from_i64s(&[1, -1, 0])
            .multiply(&PowerSeries::from_i64s(&[1, 1, 0]))
            .unwrap();
        assert_eq!(m, PowerSeries::from_i64s(&[1, 0, -1]));
        assert_eq!(
            phi(7).multiply(&phi(7)).unwrap().coeff(2),
            &BigInt::from(-1)
        );
        assert!(a.multiply(&PowerSeries::one(3)).is_err());
    }

    #[test]
    fn power_fixtures() {
        assert_eq!(
            phi(10).power(3).unwrap(),
            PowerSeries::from_i64s(&[1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9])
        );
        assert_eq!(phi(5).power(1).unwrap(), phi(5));
        assert_eq!(phi(3).power(24).unwrap().coeff(1), &BigInt::from(-24));
        assert!(phi(3).power(0).is_err());
    }

    #[test]
    fn power_matches_repeated_multiply() {
        for n in [0, 1, 7, 30] {
            let f = phi(n);
            let mut acc = f.clone();
            for d in 1..=8 {
                assert_eq!(f.power(d).unwrap(), acc, "N={n} d={d}");
                acc = acc.multiply(&f).unwrap();
            }
        }
    }

    #[test]
    fn parallel_multiply_matches_serial() {
        let a = phi(100).power(2).unwrap();
        let b = phi_by_product(100);
        let par = a.multiply(&b).unwrap();
        let mut serial = vec![BigInt::zero(); 101];
        for i in 0..=100 {
            for j in 0..=100 - i {
                serial[i + j] += a.coeff(i) * b.coeff(j);
            }
        }
        assert_eq!(par.coeffs(), serial.as_slice());
    }

    #[test]
    fn rendering() {
        assert_eq!(PowerSeries::zero(3).render(), "0");
        assert_eq!(
            PowerSeries::from_i64s(&[-1, 2, -1]).render(),
            "-1 + 2*x - x^2"
        );
        assert_eq!(
            phi(10).power(3).unwrap().render(),
            "1 - 3*x + 5*x^3 - 7*x^6 + 9*x^10"
        );
        assert_eq!(
            phi(3).terms(),
            vec![
                (0, "1".to_string()),
                (1, "-1".to_string()),
                (2, "-1".to_string())
            ]
        );
    }

    fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(-50i64..50, order + 1).prop_map(|c| PowerSeries::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn multiply_commutes_and_associates(a in series(8), b in series(8), c in series(8)) {
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
