//! Multiplicative number theory: factorization, divisors, the Moebius and
//! Euler totient functions, and Ramanujan sums.
//!
//! Ramanujan sums are available two ways: exactly through Kluyver's divisor
//! formula `c_n(m) = sum_{d | gcd(m, n)} mu(n/d) d` ([`ramanujan_sum`]) and
//! as a literal floating point sum over primitive roots of unity
//! ([`ramanujan_sum_direct`]). The second exists to check the first.

use std::f64::consts::TAU;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigUint,
    /// `(prime, exponent)` pairs, primes strictly increasing.
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize + 1).product()
    }

    /// Exponent of each prime of `self` in `m`, capped at the exponent in
    /// `self`. This is the factorization of `gcd(m, self)` in the prime
    /// basis of `self`; `m = 0` gives the exponents of `self` itself.
    fn gcd_exponents(&self, m: &BigUint) -> Vec<u32> {
        if m.is_zero() {
            return self.factors.iter().map(|&(_, e)| e).collect();
        }
        let mut g = m.gcd(&self.value);
        self.factors
            .iter()
            .map(|(p, e)| {
                let mut k = 0;
                while k < *e && (&g % p).is_zero() {
                    g /= p;
                    k += 1;
                }
                k
            })
            .collect()
    }

    /// Kluyver's sum `sum_{d | g} mu(value / d) d` where `g | value` is
    /// given by its exponents in the prime basis of `self`.
    fn kluyver(&self, g_exps: &[u32]) -> BigInt {
        // mu(value/d) vanishes unless every prime's exponent in d is e or e-1,
        // so only those divisors contribute.
        let mut total = BigInt::zero();
        let primes = self.factors.len();
        let mut choice = vec![0u32; primes];
        'outer: loop {
            let mut term = BigInt::one();
            let mut sign_negative = false;
            let mut admissible = true;
            for (i, (p, e)) in self.factors.iter().enumerate() {
                let f = e - choice[i];
                if f > g_exps[i] {
                    admissible = false;
                    break;
                }
                if choice[i] == 1 {
                    sign_negative = !sign_negative;
                }
                term *= BigInt::from(p.pow(f));
            }
            if admissible {
                if sign_negative {
                    total -= term;
                } else {
                    total += term;
                }
            }
            for c in choice.iter_mut() {
                if *c == 0 {
                    *c = 1;
                    continue 'outer;
                }
                *c = 0;
            }
            break;
        }
        total
    }
}

fn factor_u64(mut n: u64) -> Vec<(BigUint, u32)> {
    let mut factors = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(p), e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        factors.push((BigUint::from(n), 1));
    }
    factors
}

fn factor_big(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut factors = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        if let Some(small) = n.to_u64() {
            let mut rest = factor_u64(small);
            factors.append(&mut rest);
            return factors;
        }
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    factors
}

/// Prime factorization by trial division.
pub fn factor(n: impl Into<BigUint>) -> Result<FactoredInteger> {
    let value = n.into();
    if value.is_zero() {
        return Err(Error::NonPositive { what: "n" });
    }
    let factors = match value.to_u64() {
        Some(small) => factor_u64(small),
        None => factor_big(&value),
    };
    Ok(FactoredInteger { value, factors })
}

/// All positive divisors in increasing order.
pub fn divisors(n: &FactoredInteger) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in n.factors() {
        let len = out.len();
        let mut power = BigUint::one();
        for _ in 0..*e {
            power *= p;
            for i in 0..len {
                let d = &out[i] * &power;
                out.push(d);
            }
        }
    }
    out.sort();
    out
}

pub fn moebius(n: impl Into<BigUint>) -> Result<i8> {
    Ok(moebius_of(&factor(n)?))
}

pub fn moebius_of(n: &FactoredInteger) -> i8 {
    if !n.is_square_free() {
        0
    } else if n.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient via the Moebius divisor sum `sum_{d | n} mu(n/d) d`.
pub fn totient(n: impl Into<BigUint>) -> Result<BigUint> {
    let f = factor(n)?;
    Ok(totient_of(&f))
}

pub fn totient_of(n: &FactoredInteger) -> BigUint {
    let all: Vec<u32> = n.factors().iter().map(|&(_, e)| e).collect();
    n.kluyver(&all)
        .to_biguint()
        .expect("totient is positive")
}

/// Euler's totient via `prod p^(e-1) (p - 1)`.
pub fn totient_product(n: &FactoredInteger) -> BigUint {
    n.factors()
        .iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1u32))
        .product()
}

/// Ramanujan sum `c_n(m)` by Kluyver's formula. `m` is reduced modulo `n`
/// first; `gcd(0, n)` is `n`.
pub fn ramanujan_sum(n: impl Into<BigUint>, m: impl Into<BigInt>) -> Result<BigInt> {
    let f = factor(n)?;
    Ok(ramanujan_sum_of(&f, &m.into()))
}

/// [`ramanujan_sum`] with `n` already factored.
pub fn ramanujan_sum_of(n: &FactoredInteger, m: &BigInt) -> BigInt {
    let modulus = BigInt::from(n.value().clone());
    let reduced = m
        .mod_floor(&modulus)
        .to_biguint()
        .expect("mod_floor is nonnegative");
    n.kluyver(&n.gcd_exponents(&reduced))
}

/// Ramanujan sum evaluated literally as `sum_{gcd(j, n) = 1} e(j m / n)` in
/// floating point. Fails if the imaginary part exceeds `1e-9 n`.
pub fn ramanujan_sum_direct(n: u64, m: i64) -> Result<f64> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    let m_red = (m as i128).rem_euclid(n as i128) as u128;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for j in 1..=n {
        if j.gcd(&n) != 1 {
            continue;
        }
        let t = (j as u128 * m_red % n as u128) as f64;
        let (s, c) = (TAU * t / n as f64).sin_cos();
        re += c;
        im += s;
    }
    if im.abs() > 1e-9 * n as f64 {
        return Err(Error::ImaginaryResidue { imaginary: im });
    }
    Ok(re)
}

/// `gcd` of a list of integers and `n`, as a nonnegative integer.
pub fn gcd_with_modulus(values: &[BigInt], n: &BigUint) -> BigUint {
    values.iter().fold(n.clone(), |acc, a| acc.gcd(a.magnitude()))
}

/// `a mod n` in `[0, n)`.
pub(crate) fn reduce(a: &BigInt, n: &BigUint) -> BigUint {
    let r = a.magnitude() % n;
    if a.is_negative() && !r.is_zero() {
        n - r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factor(n)
            .unwrap()
            .factors()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    fn divs(n: u64) -> Vec<u64> {
        divisors(&factor(n).unwrap())
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect()
    }

    fn c(n: u64, m: i64) -> i64 {
        ramanujan_sum(n, m).unwrap().to_i64().unwrap()
    }

    #[test]
    fn factor_examples() {
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(12), vec![(2, 2), (3, 1)]);
        assert_eq!(fac(97), vec![(97, 1)]);
        assert_eq!(fac(1_000_000_007 * 3), vec![(3, 1), (1_000_000_007, 1)]);
        assert!(matches!(factor(0u32), Err(Error::NonPositive { .. })));
    }

    #[test]
    fn factor_beyond_u64() {
        let n = BigUint::from(u64::MAX) * 6u32;
        let f = factor(n.clone()).unwrap();
        let prod: BigUint = f.factors().iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(prod, n);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divs(1), vec![1]);
        assert_eq!(divs(6), vec![1, 2, 3, 6]);
        assert_eq!(divs(8), vec![1, 2, 4, 8]);
        assert_eq!(divs(360).len(), factor(360u32).unwrap().divisor_count());
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1u32).unwrap(), 1);
        assert_eq!(moebius(4u32).unwrap(), 0);
        assert_eq!(moebius(6u32).unwrap(), 1);
        assert_eq!(moebius(30u32).unwrap(), -1);
        assert!(moebius(0u32).is_err());
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1u32).unwrap(), BigUint::from(1u32));
        assert_eq!(totient(6u32).unwrap(), BigUint::from(2u32));
        assert_eq!(totient(5u32).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn totient_routes_agree() {
        for n in 1u32..=10_000 {
            let f = factor(n).unwrap();
            assert_eq!(totient_of(&f), totient_product(&f), "n = {n}");
        }
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(c(5, 0), 4);
        assert_eq!(c(5, 1), -1);
        assert_eq!(c(6, 2), -1);
        assert_eq!(c(6, 3), -2);
        assert_eq!(c(1, 7), 1);
    }

    #[test]
    fn ramanujan_direct_examples() {
        assert!((ramanujan_sum_direct(6, 2).unwrap() + 1.0).abs() < 1e-9);
        assert!((ramanujan_sum_direct(1, 7).unwrap() - 1.0).abs() < 1e-12);
        assert!((ramanujan_sum_direct(8, 0).unwrap() - 4.0).abs() < 1e-12);
        assert!(ramanujan_sum_direct(0, 1).is_err());
    }

    #[test]
    fn ramanujan_negative_and_large_m() {
        assert_eq!(c(12, -5), c(12, 5));
        assert_eq!(c(12, 1_000_003), c(12, 1_000_003 % 12));
    }

    #[test]
    fn reduce_negative() {
        let n = BigUint::from(7u32);
        assert_eq!(reduce(&BigInt::from(-1), &n), BigUint::from(6u32));
        assert_eq!(reduce(&BigInt::from(-14), &n), BigUint::zero());
        assert_eq!(reduce(&BigInt::from(15), &n), BigUint::one());
    }
}
