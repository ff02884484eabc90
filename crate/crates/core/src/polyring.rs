//! Exact integer polynomials in `z` and the residue-indexed fold.
//!
//! The weight enumerator of a BLCC is a character-sum average of
//! `prod_j (1 + z e(a_j m / n))`. Replacing `e(1/n)` by the formal generator
//! `x` of the group ring `Z[z][Z_n]` turns that product into an element
//! `sum_r P_r(z) x^r`, and extracting the coefficient of `x^b` is exactly
//! the Fourier inversion performed by the average. [`residue_product`]
//! computes all `P_r` with integer arithmetic only.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::reduce;
use crate::exec::for_each_chunk_mut;
use crate::{Error, Result};

/// Dense polynomial with arbitrary precision integer coefficients; index is
/// the degree. The highest stored coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c z^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides every coefficient by `c`, failing unless all divisions are
    /// exact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NonExactDivision);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Long division over `Z`. Fails if any quotient coefficient would be
    /// fractional or the remainder is nonzero.
    pub fn div_exact(&self, den: &IntPolynomial) -> Result<Self> {
        let Some(dd) = den.degree() else {
            return Err(Error::NonExactDivision);
        };
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(Error::NonExactDivision);
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::new(quot))
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers with zero terms omitted, e.g. `1 + 2z^2 + z^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Polynomials `P_0, ..., P_{n-1}` where `P_r` is the generating polynomial
/// (by Hamming weight) of the binary tuples whose weighted sum is `r mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePolynomial {
    slots: Vec<IntPolynomial>,
}

impl ResiduePolynomial {
    pub fn modulus(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[IntPolynomial] {
        &self.slots
    }

    pub fn slot(&self, residue: usize) -> &IntPolynomial {
        &self.slots[residue]
    }

    pub fn into_slot(mut self, residue: usize) -> IntPolynomial {
        self.slots.swap_remove(residue)
    }

    /// Sum of all coefficients over all slots; `2^k` after `k` fold steps.
    pub fn total(&self) -> BigInt {
        let one = BigInt::one();
        self.slots.iter().map(|p| p.eval(&one)).sum()
    }
}

trait Count: Clone + Zero + One + Send + Sync + for<'a> AddAssign<&'a Self> + Into<BigInt> {}

impl Count for u128 {}
impl Count for BigUint {}

/// The group-ring fold. Starting from `1` in slot 0, each shift `a` maps
/// `slot[r] <- slot[r] + z slot[(r - a) mod n]`.
fn fold<T: Count>(shifts: &[usize], n: usize) -> Vec<IntPolynomial> {
    let stride = shifts.len() + 1;
    let mut cur = vec![T::zero(); n * stride];
    cur[0] = T::one();
    let mut next = cur.clone();
    for (j, &a) in shifts.iter().enumerate() {
        let prev = &cur;
        for_each_chunk_mut(&mut next, stride, |r, row| {
            let src = (r + n - a) % n;
            row.clone_from_slice(&prev[r * stride..(r + 1) * stride]);
            let src_row = &prev[src * stride..src * stride + j + 1];
            for (d, c) in src_row.iter().enumerate() {
                row[d + 1] += c;
            }
        });
        std::mem::swap(&mut cur, &mut next);
    }
    cur.chunks(stride)
        .map(|row| IntPolynomial::new(row.iter().cloned().map(Into::into).collect()))
        .collect()
}

/// Folds every coefficient into the residue-indexed product modulo
/// `modulus`. Slot `b` of the result is the weight enumerator of the BLCC
/// with residue `b`.
pub fn residue_product(coeffs: &[BigInt], modulus: usize) -> Result<ResiduePolynomial> {
    if modulus == 0 {
        return Err(Error::NonPositive { what: "modulus" });
    }
    let n = BigUint::from(modulus);
    let shifts: Vec<usize> = coeffs
        .iter()
        .map(|a| reduce(a, &n).to_usize().expect("residue below usize modulus"))
        .collect();
    // Counts never exceed 2^k.
    let slots = if shifts.len() < 128 {
        fold::<u128>(&shifts, modulus)
    } else {
        fold::<BigUint>(&shifts, modulus)
    };
    Ok(ResiduePolynomial { slots })
}

/// Sparse variant of the fold: only reachable residues are stored, keyed by
/// their value mod `modulus`. Each entry is a weight-indexed count vector
/// of length `coeffs.len() + 1`. Used when the modulus is too large for a
/// dense slot array; the number of keys is at most `2^k`.
pub(crate) fn sparse_fold(coeffs: &[BigInt], modulus: &BigUint) -> HashMap<BigUint, Vec<u128>> {
    let width = coeffs.len() + 1;
    let mut table: HashMap<BigUint, Vec<u128>> = HashMap::new();
    let mut unit = vec![0u128; width];
    unit[0] = 1;
    table.insert(BigUint::zero(), unit);
    for (j, a) in coeffs.iter().enumerate() {
        let a = reduce(a, modulus);
        let mut next = table.clone();
        for (r, counts) in &table {
            let target = (r + &a) % modulus;
            let entry = next.entry(target).or_insert_with(|| vec![0u128; width]);
            for d in 0..=j {
                entry[d + 1] += counts[d];
            }
        }
        table = next;
    }
    table
}
