//! Exhaustive ground truth. Everything here enumerates tuples one by one and
//! tests the congruence directly; nothing is shared with the formula paths
//! beyond the code descriptors themselves.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::reduce;
use crate::codes::{CodeSpec, ParityCodeSpec};
use crate::enumerator::WeightEnumerator;
use crate::exec::map_range;
use crate::{Error, Result};

/// Largest tuple length enumerated over `{0,1}^k`.
pub const BINARY_K_CAP: usize = 30;

/// Largest number of tuples enumerated over `Z_n^k` or `Z_q^k`.
pub const TUPLE_CAP: u64 = 10_000_000;

/// Largest word length accepted by [`check_single_deletion`].
pub const DELETION_K_CAP: usize = 16;

const CHUNK_BITS: u32 = 12;

/// A materialized binary code. Bit `i` of a word is the symbol at position
/// `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    k: usize,
    words: Vec<u64>,
}

impl Codebook {
    pub fn new(k: usize, mut words: Vec<u64>) -> Result<Self> {
        if k > 63 {
            return Err(cap_error(format!("word length {k}"), 63));
        }
        if let Some(w) = words.iter().find(|&&w| w >> k != 0) {
            return Err(Error::InvalidCodebook(format!("word {w:#b} longer than {k} bits")));
        }
        words.sort_unstable();
        let len = words.len();
        words.dedup();
        if words.len() != len {
            return Err(Error::InvalidCodebook("duplicate words".into()));
        }
        Ok(Codebook { k, words })
    }

    /// All codewords of `spec`, by exhaustive search.
    pub fn from_spec(spec: &CodeSpec) -> Result<Self> {
        let k = spec.k();
        check_binary_cap(k)?;
        let test = congruence_test(spec);
        let words = (0..1u64 << k).filter(|&w| test(w)).collect();
        Ok(Codebook { k, words })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn cap_error(what: String, cap: impl ToString) -> Error {
    Error::CapExceeded {
        what,
        cap: cap.to_string(),
    }
}

fn check_binary_cap(k: usize) -> Result<()> {
    if k > BINARY_K_CAP {
        return Err(cap_error(format!("2^{k} binary tuples"), format!("2^{BINARY_K_CAP}")));
    }
    Ok(())
}

/// Predicate `sum_i a_i w_i = b (mod n)` on bit-packed words, evaluated from
/// scratch for each word.
fn congruence_test(spec: &CodeSpec) -> impl Fn(u64) -> bool + '_ {
    move |w| {
        let sum: BigInt = spec
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(i, _)| w >> i & 1 == 1)
            .map(|(_, a)| a)
            .sum();
        reduce(&sum, spec.modulus()) == *spec.residue()
    }
}

/// Weight enumerator by walking all `2^k` tuples in lexicographic order
/// (as binary counters) with incremental congruence sums.
pub fn brute_weight_enumerator(spec: &CodeSpec) -> Result<WeightEnumerator> {
    let k = spec.k();
    check_binary_cap(k)?;
    let counts = match spec.modulus().to_u64() {
        Some(n) => {
            let residues: Vec<u64> = spec
                .coefficients()
                .iter()
                .map(|a| reduce(a, spec.modulus()).to_u64().expect("below u64 modulus"))
                .collect();
            let b = spec.residue().to_u64().expect("residue below modulus");
            tally_u64(&residues, n, b)
        }
        None => {
            let test = congruence_test(spec);
            let mut counts = vec![0u64; k + 1];
            for w in 0..1u64 << k {
                if test(w) {
                    counts[w.count_ones() as usize] += 1;
                }
            }
            counts
        }
    };
    Ok(WeightEnumerator::new(counts.into_iter().map(BigUint::from).collect()))
}

fn tally_u64(residues: &[u64], n: u64, b: u64) -> Vec<u64> {
    let k = residues.len();
    let n128 = n as u128;
    // prefix[t] = r_0 + ... + r_{t-1} mod n
    let mut prefix = vec![0u128; k + 1];
    for (t, &r) in residues.iter().enumerate() {
        prefix[t + 1] = (prefix[t] + r as u128) % n128;
    }
    let total = 1u64 << k;
    let chunk = 1u64 << CHUNK_BITS.min(k as u32);
    let chunks = (total / chunk) as usize;
    let partials = map_range(chunks, |c| {
        let start = c as u64 * chunk;
        let mut sum = residues
            .iter()
            .enumerate()
            .filter(|(i, _)| start >> i & 1 == 1)
            .fold(0u128, |s, (_, &r)| (s + r as u128) % n128);
        let mut counts = vec![0u64; k + 1];
        let mut w = start;
        loop {
            if sum == b as u128 {
                counts[w.count_ones() as usize] += 1;
            }
            if w + 1 == start + chunk {
                break;
            }
            // w -> w + 1 clears the t trailing ones and sets bit t.
            let t = w.trailing_ones() as usize;
            sum = (sum + residues[t] as u128 + n128 - prefix[t]) % n128;
            w += 1;
        }
        counts
    });
    partials.into_iter().fold(vec![0u64; k + 1], |mut acc, p| {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
        acc
    })
}

/// `(even, odd)` sizes of a parity-split code from its materialized base.
pub fn brute_parity_sizes(spec: &ParityCodeSpec) -> Result<(BigUint, BigUint)> {
    let book = Codebook::from_spec(spec.base())?;
    let odd = book.words().iter().filter(|w| w.count_ones() % 2 == 1).count();
    Ok((BigUint::from(book.len() - odd), BigUint::from(odd)))
}

fn checked_tuple_count(base: u64, k: usize) -> Result<u64> {
    let count = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(base).filter(|&c| c <= TUPLE_CAP));
    count.ok_or_else(|| cap_error(format!("{base}^{k} tuples"), TUPLE_CAP))
}

/// Counts `x` in `Z_alphabet^k` with `sum a_i x_i = b (mod n)` by an
/// odometer walk.
fn odometer_count(coeffs: &[BigInt], n: &BigUint, b: &BigInt, alphabet: u64) -> Result<BigUint> {
    let k = coeffs.len();
    checked_tuple_count(alphabet, k)?;
    let n64 = n
        .to_u64()
        .ok_or_else(|| Error::ModulusTooLarge(n.to_string()))?;
    if n64 == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    let n128 = n64 as u128;
    let residues: Vec<u128> = coeffs
        .iter()
        .map(|a| reduce(a, n).to_u64().expect("below u64 modulus") as u128)
        .collect();
    let target = reduce(b, n).to_u64().expect("below u64 modulus") as u128;
    if alphabet == 0 {
        return Ok(BigUint::zero());
    }
    let mut digits = vec![0u64; k];
    let mut sum = 0u128;
    let mut count = 0u64;
    loop {
        if sum == target {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(BigUint::from(count));
            }
            if digits[i] + 1 < alphabet {
                digits[i] += 1;
                sum = (sum + residues[i]) % n128;
                break;
            }
            // wrap digit i back to zero
            let back = residues[i] * (alphabet as u128 - 1) % n128;
            sum = (sum + n128 - back) % n128;
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Solutions over `Z_n^k`, exhaustively.
pub fn brute_count_zn(coeffs: &[BigInt], n: u64, b: &BigInt) -> Result<BigUint> {
    odometer_count(coeffs, &BigUint::from(n), b, n)
}

/// Solutions over `Z_q^k` of the congruence modulo `n`, exhaustively.
pub fn brute_count_qary(coeffs: &[BigInt], n: &BigUint, b: &BigInt, q: u64) -> Result<BigUint> {
    odometer_count(coeffs, n, b, q)
}

/// Words obtained from `word` (length `k`) by deleting one symbol.
pub fn deletion_ball(word: u64, k: usize) -> Vec<u64> {
    let mut ball: Vec<u64> = (0..k)
        .map(|i| {
            let low = word & ((1u64 << i) - 1);
            let high = (word >> (i + 1)) << i;
            low | high
        })
        .collect();
    ball.sort_unstable();
    ball.dedup();
    ball
}

/// True iff the single-deletion balls of distinct codewords are pairwise
/// disjoint.
pub fn check_single_deletion(book: &Codebook) -> Result<bool> {
    let k = book.k();
    if k > DELETION_K_CAP {
        return Err(cap_error(format!("word length {k}"), DELETION_K_CAP));
    }
    let mut owner: HashMap<u64, u64> = HashMap::new();
    for &w in book.words() {
        for s in deletion_ball(w, k) {
            if let Some(&prev) = owner.get(&s) {
                if prev != w {
                    return Ok(false);
                }
            }
            owner.insert(s, w);
        }
    }
    Ok(true)
}

/// Bounds for [`random_specs`].
#[derive(Debug, Clone, Copy)]
pub struct RandomSpecLimits {
    pub max_k: usize,
    pub max_modulus: u64,
    pub max_abs_coeff: i64,
}

impl Default for RandomSpecLimits {
    fn default() -> Self {
        RandomSpecLimits {
            max_k: 14,
            max_modulus: 100,
            max_abs_coeff: 100,
        }
    }
}

/// Reproducible random BLCC instances: `k` in `1..=max_k`, modulus in
/// `1..=max_modulus`, coefficients in `[-max_abs_coeff, max_abs_coeff]`,
/// residue uniform below the modulus.
pub fn random_specs(count: usize, seed: u64, limits: RandomSpecLimits) -> Vec<CodeSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=limits.max_k);
            let n = rng.gen_range(1..=limits.max_modulus);
            let coeffs = (0..k)
                .map(|_| BigInt::from(rng.gen_range(-limits.max_abs_coeff..=limits.max_abs_coeff)))
                .collect();
            let b = rng.gen_range(0..n);
            CodeSpec::new(coeffs, n, b).expect("residue below modulus")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{make_levenshtein, make_svt, make_vt};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn counts(v: &[u64]) -> WeightEnumerator {
        WeightEnumerator::new(v.iter().map(|&x| BigUint::from(x)).collect())
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn brute_enumerator_examples() {
        let vt = make_vt(4, 0u32).unwrap();
        assert_eq!(brute_weight_enumerator(&vt).unwrap(), counts(&[1, 0, 2, 0, 1]));
        let book = Codebook::from_spec(&vt).unwrap();
        // 0000, 1001, 0110, 1111 with bit i = position i + 1
        assert_eq!(book.words(), &[0b0000, 0b0110, 0b1001, 0b1111]);

        let trivial = CodeSpec::new(ints(&[7, 8, 9]), 1u32, 0u32).unwrap();
        assert_eq!(brute_weight_enumerator(&trivial).unwrap(), counts(&[1, 3, 3, 1]));

        let big = CodeSpec::new(vec![BigInt::from(1); 31], 2u32, 0u32).unwrap();
        assert!(matches!(brute_weight_enumerator(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn incremental_walk_matches_scratch_evaluation() {
        let spec = CodeSpec::new(ints(&[-17, 4, 99, 23, -5, 60, 8, 1, 1, -100, 42, 3, 77, 9]), 97u32, 13u32)
            .unwrap();
        let scratch = Codebook::from_spec(&spec).unwrap();
        let mut expected = vec![0u64; 15];
        for w in scratch.words() {
            expected[w.count_ones() as usize] += 1;
        }
        assert_eq!(brute_weight_enumerator(&spec).unwrap(), counts(&expected));
    }

    #[test]
    fn huge_modulus_path() {
        let n: BigUint = BigUint::from(u64::MAX) * 3u32;
        let a = BigInt::from(n.clone()) - 1; // = -1 mod n
        let spec = CodeSpec::new(vec![a, BigInt::from(1)], n, 0u32).unwrap();
        // -c_1 + c_2 = 0: {00, 11}
        assert_eq!(brute_weight_enumerator(&spec).unwrap(), counts(&[1, 0, 1]));
    }

    #[test]
    fn zn_examples() {
        assert_eq!(brute_count_zn(&ints(&[2, 4]), 6, &BigInt::from(2)).unwrap(), u(12));
        assert_eq!(brute_count_zn(&ints(&[1]), 5, &BigInt::from(3)).unwrap(), u(1));
        assert_eq!(brute_count_zn(&ints(&[2, 4]), 6, &BigInt::from(1)).unwrap(), u(0));
        assert!(brute_count_zn(&ints(&[1; 8]), 10, &BigInt::from(0)).is_err());
    }

    #[test]
    fn qary_examples() {
        let vt2 = ints(&[1, 2]);
        let three = u(3);
        assert_eq!(brute_count_qary(&vt2, &three, &BigInt::from(0), 3).unwrap(), u(3));

        let vt = make_vt(5, 2u32).unwrap();
        let binary = brute_weight_enumerator(&vt).unwrap().size();
        assert_eq!(
            brute_count_qary(vt.coefficients(), vt.modulus(), &BigInt::from(2), 2).unwrap(),
            binary
        );

        assert_eq!(brute_count_qary(&vt2, &three, &BigInt::from(0), 1).unwrap(), u(1));
        assert_eq!(brute_count_qary(&vt2, &three, &BigInt::from(1), 1).unwrap(), u(0));
    }

    #[test]
    fn deletion_ball_shape() {
        // positions 1..4 = 0,1,1,0; deleting each gives 110, 010, 010, 011
        // (packed with position 1 in bit 0: 0b011, 0b010, 0b010, 0b110)
        let ball = deletion_ball(0b0110, 4);
        assert_eq!(ball, vec![0b010, 0b011, 0b110]);
        assert_eq!(deletion_ball(0b1111, 4), vec![0b111]);
    }

    #[test]
    fn single_deletion_examples() {
        let vt8 = Codebook::from_spec(&make_vt(8, 0u32).unwrap()).unwrap();
        assert!(check_single_deletion(&vt8).unwrap());

        let bad = Codebook::new(2, vec![0b00, 0b10]).unwrap();
        assert!(!check_single_deletion(&bad).unwrap());

        let single = Codebook::new(5, vec![0b10110]).unwrap();
        assert!(check_single_deletion(&single).unwrap());

        let wide = Codebook::new(17, vec![0]).unwrap();
        assert!(check_single_deletion(&wide).is_err());
    }

    #[test]
    fn codebook_rejects_bad_words() {
        assert!(Codebook::new(2, vec![0b100]).is_err());
        assert!(Codebook::new(2, vec![1, 1]).is_err());
    }

    #[test]
    fn short_levenshtein_modulus_fails_deletion_check() {
        // n < k + 1 breaks the guarantee; L_0(4, 2) contains 0000 and 1000?
        // 1*1 = 1 != 0 (mod 2); use 0000 and 0100 -> 2 = 0 (mod 2).
        let book = Codebook::from_spec(&make_levenshtein(4, 2u32, 0u32).unwrap()).unwrap();
        assert!(!check_single_deletion(&book).unwrap());
    }

    #[test]
    fn parity_sizes_examples() {
        assert_eq!(brute_parity_sizes(&make_svt(4, 5u32, 1u32, 0).unwrap()).unwrap(), (u(1), u(2)));
    }

    #[test]
    fn random_specs_are_reproducible() {
        let a = random_specs(20, 7, RandomSpecLimits::default());
        let b = random_specs(20, 7, RandomSpecLimits::default());
        assert_eq!(a, b);
        assert_ne!(a, random_specs(20, 8, RandomSpecLimits::default()));
        for s in &a {
            assert!((1..=14).contains(&s.k()));
            assert!(s.modulus() <= &u(100));
        }
    }
}
