//! Code descriptors. Every family is normalized to a BLCC instance
//! `(a_1..a_k, n, b)`; the shifted VT code adds a weight-parity constraint.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Which construction produced a [`CodeSpec`]. Carried for reporting and so
/// VT instances can be routed to their closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    Vt,
    Levenshtein,
    Helberg { s: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Generic => write!(f, "blcc"),
            Family::Vt => write!(f, "vt"),
            Family::Levenshtein => write!(f, "levenshtein"),
            Family::Helberg { s } => write!(f, "helberg(s={s})"),
        }
    }
}

/// All binary `k`-tuples `c` with `sum a_i c_i = b (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    coefficients: Vec<BigInt>,
    modulus: BigUint,
    residue: BigUint,
    family: Family,
}

impl CodeSpec {
    /// A generic BLCC. Requires `modulus >= 1` and `0 <= residue < modulus`.
    pub fn new(
        coefficients: Vec<BigInt>,
        modulus: impl Into<BigUint>,
        residue: impl Into<BigUint>,
    ) -> Result<Self> {
        Self::with_family(coefficients, modulus.into(), residue.into(), Family::Generic)
    }

    fn with_family(
        coefficients: Vec<BigInt>,
        modulus: BigUint,
        residue: BigUint,
        family: Family,
    ) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::NonPositive { what: "modulus" });
        }
        if residue >= modulus {
            return Err(Error::ResidueOutOfRange {
                residue: residue.to_string(),
                modulus: modulus.to_string(),
            });
        }
        Ok(CodeSpec {
            coefficients,
            modulus,
            residue,
            family,
        })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Tuple length.
    pub fn k(&self) -> usize {
        self.coefficients.len()
    }

    /// Same coefficients and modulus, different residue.
    pub fn with_residue(&self, residue: impl Into<BigUint>) -> Result<Self> {
        Self::with_family(
            self.coefficients.clone(),
            self.modulus.clone(),
            residue.into(),
            self.family,
        )
    }
}

fn positive(value: usize, what: &'static str) -> Result<()> {
    if value == 0 {
        Err(Error::NonPositive { what })
    } else {
        Ok(())
    }
}

fn one_to(k: usize) -> Vec<BigInt> {
    (1..=k).map(BigInt::from).collect()
}

/// Varshamov-Tenengolts code `VT_b(n)`: `sum i s_i = b (mod n + 1)`.
pub fn make_vt(n: usize, b: impl Into<BigUint>) -> Result<CodeSpec> {
    positive(n, "n")?;
    CodeSpec::with_family(one_to(n), BigUint::from(n) + 1u32, b.into(), Family::Vt)
}

/// Levenshtein code `L_b(k, n)`: `sum i s_i = b (mod n)` over `k`-tuples.
pub fn make_levenshtein(k: usize, n: impl Into<BigUint>, b: impl Into<BigUint>) -> Result<CodeSpec> {
    positive(k, "k")?;
    CodeSpec::with_family(one_to(k), n.into(), b.into(), Family::Levenshtein)
}

/// Helberg multipliers `v_1, ..., v_{k+1}` with `v_i = 1 + sum_{j=1}^{s} v_{i-j}`
/// and `v_i = 0` for `i <= 0`.
pub fn helberg_multipliers(k: usize, s: u32) -> Vec<BigUint> {
    let s = s as usize;
    let mut v: Vec<BigUint> = Vec::with_capacity(k + 1);
    // Running sum of the last s entries.
    let mut window = BigUint::zero();
    for i in 0..=k {
        let next = &window + BigUint::one();
        window += &next;
        if i >= s {
            window -= &v[i - s];
        }
        v.push(next);
    }
    v
}

/// Helberg code `H_b(k, s)`: coefficients `v_1..v_k`, modulus `v_{k+1}`.
pub fn make_helberg(k: usize, s: u32, b: impl Into<BigUint>) -> Result<CodeSpec> {
    positive(k, "k")?;
    positive(s as usize, "s")?;
    let mut v = helberg_multipliers(k, s);
    let modulus = v.pop().expect("k + 1 multipliers");
    let coeffs = v.into_iter().map(BigInt::from).collect();
    CodeSpec::with_family(coeffs, modulus, b.into(), Family::Helberg { s })
}

/// A BLCC restricted to codewords whose Hamming weight is `parity mod 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityCodeSpec {
    base: CodeSpec,
    parity: u32,
}

impl ParityCodeSpec {
    pub fn new(base: CodeSpec, parity: u32) -> Result<Self> {
        if parity > 1 {
            return Err(Error::InvalidParity(parity));
        }
        Ok(ParityCodeSpec { base, parity })
    }

    pub fn base(&self) -> &CodeSpec {
        &self.base
    }

    pub fn parity(&self) -> u32 {
        self.parity
    }
}

/// Shifted VT code `SVT_{b,r}(k, n)`: the Levenshtein code `L_b(k, n)`
/// intersected with Hamming weight `r mod 2`.
pub fn make_svt(
    k: usize,
    n: impl Into<BigUint>,
    b: impl Into<BigUint>,
    r: u32,
) -> Result<ParityCodeSpec> {
    ParityCodeSpec::new(make_levenshtein(k, n, b)?, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn nat(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn vt_examples() {
        let c = make_vt(4, 0u32).unwrap();
        assert_eq!(c.coefficients(), ints(&[1, 2, 3, 4]).as_slice());
        assert_eq!(c.modulus(), &BigUint::from(5u32));
        assert_eq!(c.residue(), &BigUint::zero());
        assert_eq!(c.family(), Family::Vt);

        let c = make_vt(1, 1u32).unwrap();
        assert_eq!(c.coefficients(), ints(&[1]).as_slice());
        assert_eq!(c.modulus(), &BigUint::from(2u32));

        assert!(matches!(
            make_vt(4, 5u32),
            Err(Error::ResidueOutOfRange { .. })
        ));
        assert!(make_vt(0, 0u32).is_err());
    }

    #[test]
    fn levenshtein_examples() {
        let l = make_levenshtein(4, 5u32, 0u32).unwrap();
        let v = make_vt(4, 0u32).unwrap();
        assert_eq!(l.coefficients(), v.coefficients());
        assert_eq!(l.modulus(), v.modulus());
        assert_eq!(l.residue(), v.residue());

        let l = make_levenshtein(3, 7u32, 2u32).unwrap();
        assert_eq!(l.coefficients(), ints(&[1, 2, 3]).as_slice());
        assert_eq!(l.residue(), &BigUint::from(2u32));

        let l = make_levenshtein(2, 1u32, 0u32).unwrap();
        assert_eq!(l.modulus(), &BigUint::one());

        assert!(make_levenshtein(2, 0u32, 0u32).is_err());
        assert!(make_levenshtein(2, 3u32, 3u32).is_err());
    }

    #[test]
    fn helberg_examples() {
        let h = make_helberg(4, 1, 0u32).unwrap();
        assert_eq!(h.coefficients(), ints(&[1, 2, 3, 4]).as_slice());
        assert_eq!(h.modulus(), &BigUint::from(5u32));

        let h = make_helberg(3, 2, 0u32).unwrap();
        assert_eq!(h.coefficients(), ints(&[1, 2, 4]).as_slice());
        assert_eq!(h.modulus(), &BigUint::from(7u32));

        let h = make_helberg(1, 3, 0u32).unwrap();
        assert_eq!(h.coefficients(), ints(&[1]).as_slice());
        assert_eq!(h.modulus(), &BigUint::from(2u32));

        assert!(make_helberg(3, 2, 7u32).is_err());
        assert!(make_helberg(3, 0, 0u32).is_err());
    }

    #[test]
    fn helberg_recurrence_values() {
        // s = 2: v_i = 1 + v_{i-1} + v_{i-2}
        assert_eq!(helberg_multipliers(6, 2), nat(&[1, 2, 4, 7, 12, 20, 33]));
        // s = 3
        assert_eq!(helberg_multipliers(6, 3), nat(&[1, 2, 4, 8, 15, 28, 52]));
    }

    #[test]
    fn helberg_s1_is_vt() {
        for k in 1..=20 {
            for b in 0..=k as u32 {
                let h = make_helberg(k, 1, b).unwrap();
                let v = make_vt(k, b).unwrap();
                assert_eq!(h.coefficients(), v.coefficients());
                assert_eq!(h.modulus(), v.modulus());
                assert_eq!(h.residue(), v.residue());
            }
        }
    }

    #[test]
    fn helberg_multipliers_increase() {
        for s in 1..=6 {
            let v = helberg_multipliers(60, s);
            assert!(v.windows(2).all(|w| w[0] < w[1]), "s = {s}");
        }
    }

    #[test]
    fn vt_coefficients_are_one_to_n() {
        for n in 1..=30 {
            assert_eq!(make_vt(n, 0u32).unwrap().coefficients(), one_to(n).as_slice());
        }
    }

    #[test]
    fn svt_examples() {
        let s = make_svt(4, 5u32, 0u32, 0).unwrap();
        assert_eq!(s.base(), &make_levenshtein(4, 5u32, 0u32).unwrap());
        assert_eq!(s.parity(), 0);
        assert_eq!(make_svt(4, 5u32, 0u32, 1).unwrap().parity(), 1);

        let s = make_svt(3, 4u32, 1u32, 0).unwrap();
        assert_eq!(s.base().coefficients(), ints(&[1, 2, 3]).as_slice());
        assert_eq!(s.base().modulus(), &BigUint::from(4u32));
        assert_eq!(s.base().residue(), &BigUint::one());

        assert_eq!(make_svt(3, 4u32, 1u32, 2), Err(Error::InvalidParity(2)));
        assert!(make_svt(3, 4u32, 4u32, 0).is_err());
    }

    #[test]
    fn generic_allows_empty_tuple() {
        let c = CodeSpec::new(vec![], 5u32, 0u32).unwrap();
        assert_eq!(c.k(), 0);
        assert_eq!(c.family(), Family::Generic);
    }
}
