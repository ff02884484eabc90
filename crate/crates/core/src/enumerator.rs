//! Weight enumerators and code sizes.
//!
//! Exact routes:
//! * [`weight_enumerator`]: the group-ring fold for any BLCC, switching to a
//!   meet-in-the-middle subset-sum enumeration when the modulus exceeds `2^k`.
//! * [`vt_weight_enumerator_closed`], [`vt_weight_count`], [`vt_size`],
//!   [`vt_q_size`]: Ramanujan-sum closed forms for VT codes.
//! * [`lehmer_count`]: solutions over `Z_n^k`.
//! * [`svt_sizes`]: even/odd split of a Levenshtein enumerator.
//!
//! Floating point routes evaluate the character sums literally and report
//! how far they land from an integer: [`weight_enumerator_charsum_float`],
//! [`size_cosine_float`], [`size_upper_bound`], [`svt_sizes_charsum_float`].

use std::f64::consts::{PI, TAU};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, reduce};
use crate::codes::{CodeSpec, Family, ParityCodeSpec};
use crate::exec::map_range;
use crate::polyring::{residue_product, sparse_fold, IntPolynomial};
use crate::{Error, Result, FLOAT_TOLERANCE};

/// Largest modulus handled by the dense residue fold.
pub const DENSE_SLOT_LIMIT: usize = 1 << 24;

/// Largest tuple length handled by the meet-in-the-middle enumeration.
pub const SPARSE_K_LIMIT: usize = 36;

/// Largest modulus accepted by the floating point `m`-loops.
pub const FLOAT_MODULUS_LIMIT: u64 = 1 << 24;

/// Values of `m` summed sequentially per work item in the float paths.
/// Fixed so the summation order, and hence the result, does not depend on
/// the number of threads.
const M_CHUNK: u64 = 64;

/// Coefficients `N_0, ..., N_k` of `W_C(z) = sum_t N_t z^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    /// `counts` must have length `k + 1`.
    pub fn new(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "weight enumerator needs k + 1 >= 1 counts");
        WeightEnumerator { counts }
    }

    pub fn empty(k: usize) -> Self {
        WeightEnumerator {
            counts: vec![BigUint::zero(); k + 1],
        }
    }

    /// Reads an exact polynomial as an enumerator of length-`k` words.
    pub fn from_polynomial(poly: &IntPolynomial, k: usize) -> Result<Self> {
        if poly.degree().is_some_and(|d| d > k) {
            return Err(Error::InvalidCount);
        }
        let counts = (0..=k)
            .map(|t| poly.coeff(t).to_biguint().ok_or(Error::InvalidCount))
            .collect::<Result<_>>()?;
        Ok(WeightEnumerator { counts })
    }

    pub fn k(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `N_t`, zero past `k`.
    pub fn count(&self, t: usize) -> BigUint {
        self.counts.get(t).cloned().unwrap_or_default()
    }

    /// `W_C(1)`.
    pub fn size(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.counts.iter().cloned().map(BigInt::from).collect())
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.to_polynomial().eval(z)
    }

    /// Homogeneous form `sum_t N_t x^t y^(k - t)`.
    pub fn homogeneous(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let k = self.k();
        self.counts
            .iter()
            .enumerate()
            .map(|(t, n)| BigInt::from(n.clone()) * x.pow(t as u32) * y.pow((k - t) as u32))
            .sum()
    }

    /// Keeps only the weights congruent to `parity` mod 2.
    pub fn filter_parity(&self, parity: u32) -> Self {
        let counts = self
            .counts
            .iter()
            .enumerate()
            .map(|(t, n)| {
                if t as u32 % 2 == parity % 2 {
                    n.clone()
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        WeightEnumerator { counts }
    }
}

fn fits_dense(spec: &CodeSpec) -> Option<usize> {
    let n = spec.modulus().to_usize()?;
    if n > DENSE_SLOT_LIMIT {
        return None;
    }
    let k = spec.k();
    // Work estimate min(n, 2^k): beyond 2^k slots most of the array is empty.
    if k < 64 && (n as u64) > (1u64 << k) && k <= SPARSE_K_LIMIT {
        return None;
    }
    Some(n)
}

/// Exact weight enumerator of a BLCC.
pub fn weight_enumerator(spec: &CodeSpec) -> Result<WeightEnumerator> {
    let k = spec.k();
    let w = if let Some(n) = fits_dense(spec) {
        let b = spec.residue().to_usize().expect("residue below modulus");
        let slot = residue_product(spec.coefficients(), n)?.into_slot(b);
        WeightEnumerator::from_polynomial(&slot, k)?
    } else if k <= SPARSE_K_LIMIT {
        subset_sum_enumerator(spec)
    } else {
        return Err(Error::CapExceeded {
            what: format!("k = {k} with modulus {}", spec.modulus()),
            cap: format!("k <= {SPARSE_K_LIMIT} or modulus <= {DENSE_SLOT_LIMIT}"),
        });
    };
    if spec.family() == Family::Vt && cfg!(debug_assertions) {
        let b = spec.residue().clone();
        debug_assert_eq!(
            vt_weight_enumerator_closed(k, b).as_ref(),
            Ok(&w),
            "VT closed form disagrees with the residue fold"
        );
    }
    Ok(w)
}

/// Splits the coefficients in halves, tabulates the reachable residues of
/// each half and joins them on `left + right = b (mod n)`.
fn subset_sum_enumerator(spec: &CodeSpec) -> WeightEnumerator {
    let k = spec.k();
    let n = spec.modulus();
    let (lo, hi) = spec.coefficients().split_at(k / 2);
    let left = sparse_fold(lo, n);
    let right = sparse_fold(hi, n);
    let mut counts = vec![0u128; k + 1];
    for (r, lc) in &left {
        let target = (spec.residue() + n - r) % n;
        if let Some(rc) = right.get(&target) {
            for (i, a) in lc.iter().enumerate().filter(|(_, a)| **a != 0) {
                for (j, b) in rc.iter().enumerate() {
                    counts[i + j] += a * b;
                }
            }
        }
    }
    WeightEnumerator::new(counts.into_iter().map(BigUint::from).collect())
}

/// `W_C(1)`, the number of codewords.
pub fn size(spec: &CodeSpec) -> Result<BigUint> {
    Ok(weight_enumerator(spec)?.size())
}

fn float_modulus(spec: &CodeSpec) -> Result<u64> {
    spec.modulus()
        .to_u64()
        .filter(|&n| n <= FLOAT_MODULUS_LIMIT)
        .ok_or_else(|| Error::ModulusTooLarge(spec.modulus().to_string()))
}

/// `a_j mod m` for every coefficient, as machine integers.
fn reduced_coeffs(spec: &CodeSpec, m: u64) -> Vec<u64> {
    let m = BigUint::from(m);
    spec.coefficients()
        .iter()
        .map(|a| reduce(a, &m).to_u64().expect("below u64 modulus"))
        .collect()
}

/// `exp(2 pi i t / n)` for `0 <= t < n`.
fn unit(t: u64, n: u64) -> Complex64 {
    let (s, c) = (TAU * t as f64 / n as f64).sin_cos();
    Complex64::new(c, s)
}

/// Sums `term(m)` for `m = 1..=n` in fixed-size chunks, chunks combined in
/// order.
fn sum_over_m<T, F>(n: u64, zero: T, term: F) -> T
where
    T: Clone + Send + Sync + std::ops::AddAssign,
    F: Fn(u64) -> T + Sync + Send,
{
    let chunks = n.div_ceil(M_CHUNK) as usize;
    let partials = map_range(chunks, |c| {
        let start = c as u64 * M_CHUNK + 1;
        let end = (start + M_CHUNK - 1).min(n);
        let mut acc = zero.clone();
        for m in start..=end {
            acc += term(m);
        }
        acc
    });
    let mut total = zero;
    for p in partials {
        total += p;
    }
    total
}

#[derive(Clone)]
struct ComplexVec(Vec<Complex64>);

impl std::ops::AddAssign for ComplexVec {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

/// Rounds a complex value expected to be a nonnegative integer.
fn round_count(raw: Complex64) -> (BigUint, f64) {
    let r = raw.re.round();
    let dev = (raw.re - r).hypot(raw.im);
    if r < 0.0 {
        return (BigUint::zero(), dev.max(raw.re.abs()));
    }
    (BigUint::from(r as u128), dev)
}

/// The character-sum formula
/// `W_C(z) = (1/n) sum_{m=1}^{n} e(-bm/n) prod_j (1 + z e(a_j m / n))`
/// evaluated coefficient-wise in floating point, rounded. Also returns the
/// largest distance of a raw coefficient from its rounded value.
pub fn weight_enumerator_charsum_float(spec: &CodeSpec) -> Result<(WeightEnumerator, f64)> {
    let n = float_modulus(spec)?;
    let k = spec.k();
    let a = reduced_coeffs(spec, n);
    let b = spec.residue().to_u64().expect("residue below modulus");

    let ComplexVec(total) = sum_over_m(n, ComplexVec(vec![Complex64::zero(); k + 1]), |m| {
        let mut poly = vec![Complex64::zero(); k + 1];
        poly[0] = Complex64::one();
        for (j, &aj) in a.iter().enumerate() {
            let w = unit((aj as u128 * m as u128 % n as u128) as u64, n);
            for d in (0..=j).rev() {
                let carry = poly[d] * w;
                poly[d + 1] += carry;
            }
        }
        let phase = unit(((n - b % n) as u128 * m as u128 % n as u128) as u64, n);
        ComplexVec(poly.into_iter().map(|c| c * phase).collect())
    });

    let mut max_dev = 0.0f64;
    let counts = total
        .into_iter()
        .map(|c| {
            let (v, dev) = round_count(c / n as f64);
            max_dev = max_dev.max(dev);
            v
        })
        .collect();
    if max_dev > FLOAT_TOLERANCE {
        return Err(Error::IntegralityFailure { deviation: max_dev });
    }
    Ok((WeightEnumerator::new(counts), max_dev))
}

/// Twice `eta = -b + (1/2) sum a_j`, reduced mod `2n`. `e(eta m / n)` is then
/// `exp(i pi (two_eta m mod 2n) / n)`.
fn two_eta(spec: &CodeSpec, n: u64) -> u64 {
    let sum: BigInt = spec.coefficients().iter().sum();
    let twice = sum - BigInt::from(spec.residue().clone()) * 2;
    reduce(&twice, &BigUint::from(2 * n))
        .to_u64()
        .expect("below 2n")
}

/// `(cos(pi t / n), sin(pi t / n))` for `t = a m mod 2n`.
fn half_angle(a: u64, m: u64, n: u64) -> (f64, f64) {
    let t = a as u128 * m as u128 % (2 * n as u128);
    let (s, c) = (PI * t as f64 / n as f64).sin_cos();
    (c, s)
}

fn eta_phase(two_eta: u64, m: u64, n: u64) -> Complex64 {
    let t = two_eta as u128 * m as u128 % (2 * n as u128);
    let (s, c) = (PI * t as f64 / n as f64).sin_cos();
    Complex64::new(c, s)
}

fn pow2(k: usize) -> f64 {
    2f64.powi(k as i32)
}

/// Code size from the cosine form
/// `(2^k / n) sum_m e(eta m / n) prod_j cos(pi a_j m / n)`, rounded.
/// Fails if the raw value is farther than `1e-6 max(1, |value|)` from a
/// nonnegative integer.
pub fn size_cosine_float(spec: &CodeSpec) -> Result<(BigUint, f64)> {
    let n = float_modulus(spec)?;
    let a = reduced_coeffs(spec, 2 * n);
    let eta = two_eta(spec, n);
    let total = sum_over_m(n, Complex64::zero(), |m| {
        let prod: f64 = a.iter().map(|&aj| half_angle(aj, m, n).0).product();
        eta_phase(eta, m, n) * prod
    });
    let raw = total * (pow2(spec.k()) / n as f64);
    let (v, dev) = round_count(raw);
    if dev > FLOAT_TOLERANCE * raw.norm().max(1.0) {
        return Err(Error::IntegralityFailure { deviation: dev });
    }
    Ok((v, dev))
}

/// `(2^k / n) sum_m prod_j |cos(pi a_j m / n)|`, an upper bound on the size.
pub fn size_upper_bound(spec: &CodeSpec) -> Result<f64> {
    let n = float_modulus(spec)?;
    let a = reduced_coeffs(spec, 2 * n);
    let total = sum_over_m(n, 0.0f64, |m| {
        a.iter()
            .map(|&aj| half_angle(aj, m, n).0.abs())
            .product::<f64>()
    });
    Ok(total * pow2(spec.k()) / n as f64)
}

/// Number of solutions of `sum a_i x_i = b (mod n)` over `Z_n^k`:
/// `l n^(k-1)` if `l = gcd(a_1, ..., a_k, n)` divides `b`, else zero.
pub fn lehmer_count(coeffs: &[BigInt], n: &BigUint, b: &BigInt) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::NonPositive { what: "n" });
    }
    let ell = arith::gcd_with_modulus(coeffs, n);
    if !(b.magnitude() % &ell).is_zero() {
        return Ok(BigUint::zero());
    }
    match coeffs.len() {
        // No unknowns: the empty tuple solves it iff n | b, and then l = n.
        0 => Ok(BigUint::one()),
        k => Ok(ell * n.pow(k as u32 - 1)),
    }
}

fn check_vt_args(n: usize, b: &BigUint) -> Result<()> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    if *b > BigUint::from(n) {
        return Err(Error::ResidueOutOfRange {
            residue: b.to_string(),
            modulus: (n + 1).to_string(),
        });
    }
    Ok(())
}

/// `(d, c_d(b))` for every divisor `d` of `modulus`, in increasing `d`.
fn ramanujan_table(modulus: usize, b: &BigUint) -> Vec<(usize, BigInt)> {
    let fac = arith::factor(modulus).expect("modulus >= 2");
    let divs: Vec<usize> = arith::divisors(&fac)
        .iter()
        .map(|d| d.to_usize().expect("divisor of usize"))
        .collect();
    let b = BigInt::from(b.clone());
    let sums = map_range(divs.len(), |i| {
        let fd = arith::factor(divs[i]).expect("positive divisor");
        arith::ramanujan_sum_of(&fd, &b)
    });
    divs.into_iter().zip(sums).collect()
}

fn div_exact(num: BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonExactDivision)
    }
}

fn to_count(v: BigInt) -> Result<BigUint> {
    v.to_biguint().ok_or(Error::InvalidCount)
}

/// Weight enumerator of `VT_b(n)` from the Ramanujan-sum closed form
/// `W(z) = (1 / ((z+1)(n+1))) sum_{d | n+1} c_d(b) (1 - (-z)^d)^((n+1)/d)`.
pub fn vt_weight_enumerator_closed(n: usize, b: impl Into<BigUint>) -> Result<WeightEnumerator> {
    let b = b.into();
    check_vt_args(n, &b)?;
    let modulus = n + 1;
    let mut sum = vec![BigInt::zero(); modulus + 1];
    for (d, c) in ramanujan_table(modulus, &b) {
        if c.is_zero() {
            continue;
        }
        // (1 - (-z)^d)^e = sum_j C(e, j) (-1)^(j + dj) z^(dj)
        let e = modulus / d;
        for j in 0..=e {
            let mut term = BigInt::from(binomial(BigUint::from(e), BigUint::from(j))) * &c;
            if (j + d * j) % 2 == 1 {
                term = -term;
            }
            sum[d * j] += term;
        }
    }
    let w = IntPolynomial::new(sum)
        .div_exact_scalar(&BigInt::from(modulus))?
        .div_exact(&IntPolynomial::from_i64s(&[1, 1]))?;
    WeightEnumerator::from_polynomial(&w, n)
}

/// `N_t(VT_b(n)) = ((-1)^t / (n+1)) sum_{d | n+1} (-1)^floor(t/d) c_d(b) C((n+1)/d - 1, floor(t/d))`.
pub fn vt_weight_count(n: usize, b: impl Into<BigUint>, t: usize) -> Result<BigUint> {
    let b = b.into();
    check_vt_args(n, &b)?;
    if t > n {
        return Ok(BigUint::zero());
    }
    let modulus = n + 1;
    let mut sum = BigInt::zero();
    for (d, c) in ramanujan_table(modulus, &b) {
        let q = t / d;
        let mut term = BigInt::from(binomial(BigUint::from(modulus / d - 1), BigUint::from(q))) * c;
        if q % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    if t % 2 == 1 {
        sum = -sum;
    }
    to_count(div_exact(sum, &BigInt::from(modulus))?)
}

/// `|VT_b(n)| = (1 / (2(n+1))) sum_{d | n+1, d odd} c_d(b) 2^((n+1)/d)`.
pub fn vt_size(n: usize, b: impl Into<BigUint>) -> Result<BigUint> {
    vt_q_size(n, b, 2u32)
}

/// Size of the `q`-ary VT code:
/// `(1 / (q(n+1))) sum_{d | n+1, gcd(d, q) = 1} c_d(b) q^((n+1)/d)`.
pub fn vt_q_size(n: usize, b: impl Into<BigUint>, q: impl Into<BigUint>) -> Result<BigUint> {
    let b = b.into();
    let q = q.into();
    check_vt_args(n, &b)?;
    if q.is_zero() {
        return Err(Error::NonPositive { what: "q" });
    }
    let modulus = n + 1;
    let q_int = BigInt::from(q.clone());
    let mut sum = BigInt::zero();
    for (d, c) in ramanujan_table(modulus, &b) {
        if !BigUint::from(d).gcd(&q).is_one() {
            continue;
        }
        sum += c * q_int.pow((modulus / d) as u32);
    }
    to_count(div_exact(sum, &(q_int * modulus))?)
}

/// `(even, odd)` sizes of a parity-split code, from the exact enumerator of
/// its base: `(W(1) +- W(-1)) / 2`.
pub fn svt_sizes(spec: &ParityCodeSpec) -> Result<(BigUint, BigUint)> {
    let w = weight_enumerator(spec.base())?;
    let at_one = w.eval(&BigInt::one());
    let at_minus_one = w.eval(&BigInt::from(-1));
    let two = BigInt::from(2);
    let even = div_exact(&at_one + &at_minus_one, &two)?;
    let odd = div_exact(at_one - at_minus_one, &two)?;
    Ok((to_count(even)?, to_count(odd)?))
}

/// Size of the code selected by the spec's parity.
pub fn svt_size(spec: &ParityCodeSpec) -> Result<BigUint> {
    let (even, odd) = svt_sizes(spec)?;
    Ok(if spec.parity() == 0 { even } else { odd })
}

/// Enumerator of the parity-restricted code.
pub fn svt_weight_enumerator(spec: &ParityCodeSpec) -> Result<WeightEnumerator> {
    Ok(weight_enumerator(spec.base())?.filter_parity(spec.parity()))
}

/// `(even, odd, deviation)` from the cosine/sine product form
/// `(2^(k-1) / n) sum_m e(eta m / n) (A +- (-1)^k B)` with
/// `A = prod cos(pi a_j m / n)` and `B = prod i sin(pi a_j m / n)`.
pub fn svt_sizes_charsum_float(spec: &ParityCodeSpec) -> Result<(BigUint, BigUint, f64)> {
    let base = spec.base();
    let n = float_modulus(base)?;
    let k = base.k();
    let a = reduced_coeffs(base, 2 * n);
    let eta = two_eta(base, n);
    // i^k
    let i_pow = match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };

    #[derive(Clone)]
    struct Pair(Complex64, Complex64);
    impl std::ops::AddAssign for Pair {
        fn add_assign(&mut self, rhs: Self) {
            self.0 += rhs.0;
            self.1 += rhs.1;
        }
    }

    let Pair(even_sum, odd_sum) = sum_over_m(n, Pair(Complex64::zero(), Complex64::zero()), |m| {
        let (mut cos_prod, mut sin_prod) = (1.0f64, 1.0f64);
        for &aj in &a {
            let (c, s) = half_angle(aj, m, n);
            cos_prod *= c;
            sin_prod *= s;
        }
        let a_term = Complex64::new(cos_prod, 0.0);
        let b_term = i_pow * sin_prod * sign;
        let phase = eta_phase(eta, m, n);
        Pair(phase * (a_term + b_term), phase * (a_term - b_term))
    });

    let scale = if k == 0 { 0.5 } else { pow2(k - 1) } / n as f64;
    let (even, dev_e) = round_count(even_sum * scale);
    let (odd, dev_o) = round_count(odd_sum * scale);
    let dev = dev_e.max(dev_o);
    if dev > FLOAT_TOLERANCE {
        return Err(Error::IntegralityFailure { deviation: dev });
    }
    Ok((even, odd, dev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{make_helberg, make_levenshtein, make_svt, make_vt};

    fn counts(v: &[u64]) -> WeightEnumerator {
        WeightEnumerator::new(v.iter().map(|&x| BigUint::from(x)).collect())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn weight_enumerator_examples() {
        assert_eq!(
            weight_enumerator(&make_vt(4, 0u32).unwrap()).unwrap(),
            counts(&[1, 0, 2, 0, 1])
        );
        let trivial = CodeSpec::new(ints(&[5, -3, 7]), 1u32, 0u32).unwrap();
        assert_eq!(weight_enumerator(&trivial).unwrap(), counts(&[1, 3, 3, 1]));
        assert_eq!(
            weight_enumerator(&make_helberg(3, 2, 0u32).unwrap()).unwrap(),
            counts(&[1, 0, 0, 1])
        );
    }

    #[test]
    fn empty_code_is_all_zero() {
        // 2x = 1 (mod 4) has no solutions.
        let spec = CodeSpec::new(ints(&[2, 2]), 4u32, 1u32).unwrap();
        assert_eq!(weight_enumerator(&spec).unwrap(), WeightEnumerator::empty(2));
        assert_eq!(size(&spec).unwrap(), BigUint::zero());
    }

    #[test]
    fn size_examples() {
        assert_eq!(size(&make_vt(4, 0u32).unwrap()).unwrap(), u(4));
        assert_eq!(size(&make_vt(6, 0u32).unwrap()).unwrap(), u(10));
        let spec = CodeSpec::new(ints(&[1, 2]), 3u32, 0u32).unwrap();
        assert_eq!(size(&spec).unwrap(), u(2));
    }

    #[test]
    fn charsum_float_examples() {
        let (w, dev) = weight_enumerator_charsum_float(&make_vt(4, 0u32).unwrap()).unwrap();
        assert_eq!(w, counts(&[1, 0, 2, 0, 1]));
        assert!(dev < 1e-9);

        let lev = make_levenshtein(6, 7u32, 3u32).unwrap();
        let (w, dev) = weight_enumerator_charsum_float(&lev).unwrap();
        assert_eq!(w, weight_enumerator(&lev).unwrap());
        assert!(dev < 1e-6);

        let trivial = CodeSpec::new(ints(&[4, 9, 1]), 1u32, 0u32).unwrap();
        let (w, dev) = weight_enumerator_charsum_float(&trivial).unwrap();
        assert_eq!(w, counts(&[1, 3, 3, 1]));
        assert_eq!(dev, 0.0);
    }

    #[test]
    fn float_paths_reject_huge_modulus() {
        let spec = make_helberg(40, 2, 0u32).unwrap();
        assert!(matches!(
            weight_enumerator_charsum_float(&spec),
            Err(Error::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn cosine_size_examples() {
        let (s, dev) = size_cosine_float(&make_vt(4, 0u32).unwrap()).unwrap();
        assert_eq!(s, u(4));
        assert!(dev < 1e-9);

        // gcd(2, 4, 6) = 2 does not divide 3.
        let none = CodeSpec::new(ints(&[2, 4]), 6u32, 3u32).unwrap();
        assert_eq!(size_cosine_float(&none).unwrap().0, BigUint::zero());

        let one = CodeSpec::new(ints(&[1]), 2u32, 1u32).unwrap();
        assert_eq!(size_cosine_float(&one).unwrap().0, u(1));

        // odd sum of coefficients: eta is a half-integer
        let odd = CodeSpec::new(ints(&[1, 2, 4]), 7u32, 3u32).unwrap();
        assert_eq!(size_cosine_float(&odd).unwrap().0, size(&odd).unwrap());
    }

    #[test]
    fn upper_bound_examples() {
        assert!(size_upper_bound(&make_vt(4, 0u32).unwrap()).unwrap() >= 4.0 - 1e-6);
        let trivial = CodeSpec::new(ints(&[3, 1, 4, 1]), 1u32, 0u32).unwrap();
        assert_eq!(size_upper_bound(&trivial).unwrap(), 16.0);
        let lev = make_levenshtein(5, 6u32, 0u32).unwrap();
        let exact = size(&lev).unwrap().to_f64().unwrap();
        assert!(size_upper_bound(&lev).unwrap() >= exact - 1e-6);
    }

    #[test]
    fn lehmer_examples() {
        let n = u(6);
        assert_eq!(lehmer_count(&ints(&[2, 4]), &n, &BigInt::from(2)).unwrap(), u(12));
        assert_eq!(lehmer_count(&ints(&[2, 4]), &n, &BigInt::from(1)).unwrap(), u(0));
        assert_eq!(lehmer_count(&ints(&[1]), &u(5), &BigInt::from(3)).unwrap(), u(1));
        assert_eq!(lehmer_count(&[], &u(5), &BigInt::from(0)).unwrap(), u(1));
        assert_eq!(lehmer_count(&[], &u(5), &BigInt::from(2)).unwrap(), u(0));
        assert!(lehmer_count(&[], &u(0), &BigInt::from(0)).is_err());
    }

    #[test]
    fn vt_closed_examples() {
        assert_eq!(vt_weight_enumerator_closed(4, 0u32).unwrap(), counts(&[1, 0, 2, 0, 1]));
        assert_eq!(vt_weight_enumerator_closed(1, 0u32).unwrap(), counts(&[1, 0]));
        assert_eq!(vt_weight_enumerator_closed(2, 1u32).unwrap(), counts(&[0, 1, 0]));
        assert!(vt_weight_enumerator_closed(2, 3u32).is_err());
        assert!(vt_weight_enumerator_closed(0, 0u32).is_err());
    }

    #[test]
    fn vt_count_examples() {
        assert_eq!(vt_weight_count(4, 0u32, 2).unwrap(), u(2));
        assert_eq!(vt_weight_count(4, 0u32, 1).unwrap(), u(0));
        for n in 1..=12 {
            for b in 0..=n as u32 {
                let expected = u((b == 0) as u64);
                assert_eq!(vt_weight_count(n, b, 0).unwrap(), expected);
            }
        }
        assert_eq!(vt_weight_count(4, 0u32, 9).unwrap(), u(0));
    }

    #[test]
    fn vt_size_examples() {
        assert_eq!(vt_size(4, 0u32).unwrap(), u(4));
        assert_eq!(vt_size(6, 0u32).unwrap(), u(10));
        assert_eq!(vt_size(4, 1u32).unwrap(), u(3));
    }

    #[test]
    fn vt_q_size_examples() {
        assert_eq!(vt_q_size(4, 0u32, 2u32).unwrap(), u(4));
        assert_eq!(vt_q_size(2, 0u32, 3u32).unwrap(), u(3));
        for n in 1..=10 {
            assert_eq!(vt_q_size(n, 0u32, 1u32).unwrap(), u(1));
            assert_eq!(vt_q_size(n, 1u32, 1u32).unwrap(), u(0));
        }
        assert!(vt_q_size(3, 0u32, 0u32).is_err());
    }

    #[test]
    fn svt_examples() {
        let s = make_svt(4, 5u32, 0u32, 0).unwrap();
        assert_eq!(svt_sizes(&s).unwrap(), (u(4), u(0)));
        let s = make_svt(4, 5u32, 1u32, 0).unwrap();
        assert_eq!(svt_sizes(&s).unwrap(), (u(1), u(2)));
        assert_eq!(svt_size(&make_svt(4, 5u32, 1u32, 1).unwrap()).unwrap(), u(2));
        assert_eq!(
            svt_weight_enumerator(&make_svt(4, 5u32, 1u32, 1).unwrap()).unwrap(),
            counts(&[0, 1, 0, 1, 0])
        );
    }

    #[test]
    fn svt_empty_base() {
        // weights in {0,1}^2 with 2s_1 + 2s_2 = 1 (mod 4): none
        let base = CodeSpec::new(ints(&[2, 2]), 4u32, 1u32).unwrap();
        let spec = ParityCodeSpec::new(base, 0).unwrap();
        assert_eq!(svt_sizes(&spec).unwrap(), (u(0), u(0)));
    }

    #[test]
    fn svt_float_examples() {
        let (e, o, dev) = svt_sizes_charsum_float(&make_svt(4, 5u32, 0u32, 0).unwrap()).unwrap();
        assert_eq!((e, o), (u(4), u(0)));
        assert!(dev < 1e-9);
        let (e, o, _) = svt_sizes_charsum_float(&make_svt(4, 5u32, 1u32, 1).unwrap()).unwrap();
        assert_eq!((e, o), (u(1), u(2)));
    }

    #[test]
    fn homogeneous_examples() {
        let w = counts(&[1, 0, 2, 0, 1]);
        let one = BigInt::one();
        let zero = BigInt::zero();
        assert_eq!(w.homogeneous(&one, &one), BigInt::from(4));
        let w = counts(&[3, 1, 4, 1, 5]);
        assert_eq!(w.homogeneous(&zero, &one), BigInt::from(3));
        assert_eq!(w.homogeneous(&one, &zero), BigInt::from(5));
        // x = 2, y = 1 is W(2)
        assert_eq!(w.homogeneous(&BigInt::from(2), &one), w.eval(&BigInt::from(2)));
    }

    #[test]
    fn large_helberg_uses_subset_sums() {
        // modulus v_35 for s = 2 is beyond the dense limit.
        let spec = make_helberg(34, 2, 0u32).unwrap();
        assert!(spec.modulus() > &BigUint::from(DENSE_SLOT_LIMIT));
        let w = weight_enumerator(&spec).unwrap();
        assert_eq!(w.count(0), u(1));
        // Helberg codes with s = 2 correct two deletions; their size must be
        // well below 2^34 / 4.
        assert!(w.size() < u(1 << 32));
        assert_eq!(w.size(), w.counts().iter().sum::<BigUint>());
    }

    #[test]
    fn sparse_and_dense_paths_agree() {
        // n = 50 > 2^4: sparse path; compare against every residue through
        // the dense fold directly.
        let coeffs = ints(&[3, 17, -8, 25]);
        let dense = residue_product(&coeffs, 50).unwrap();
        for b in 0..50u32 {
            let spec = CodeSpec::new(coeffs.clone(), 50u32, b).unwrap();
            assert!(fits_dense(&spec).is_none());
            let via_sparse = weight_enumerator(&spec).unwrap();
            let via_dense = WeightEnumerator::from_polynomial(dense.slot(b as usize), 4).unwrap();
            assert_eq!(via_sparse, via_dense, "b = {b}");
        }
    }

    #[test]
    fn oversized_spec_is_refused() {
        let spec = make_helberg(SPARSE_K_LIMIT + 20, 3, 0u32).unwrap();
        assert!(matches!(weight_enumerator(&spec), Err(Error::CapExceeded { .. })));
    }
}
