//! Exact arithmetic in `R[zeta_p]` for `R` one of `Z`, `Z[w]`, `Z[i]`.
//!
//! Elements are coefficient vectors over `1, zeta, ..., zeta^(p-2)`; the
//! relation `zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))` is applied eagerly so
//! equal elements have equal vectors.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::integers::is_odd_prime;

/// Coefficient ring of a cyclotomic element.
pub trait BaseRing: Copy + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    const NAME: &'static str;

    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_from_int(n: i64) -> Self;
    fn ring_add(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_mul(&self, o: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_conj(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn to_complex(&self) -> Complex64;
    /// `e^(2 pi i j / k)` when it lies in the ring.
    fn root_of_unity(k: u64, j: u64) -> Option<Self>;
}

/// `(k', j')` with `j'/k' = j/k` in lowest terms.
pub(crate) fn reduce_root(k: u64, j: u64) -> (u64, u64) {
    let j = j % k;
    let g = crate::integers::gcd(j, k);
    (k / g, j / g)
}

fn ck(v: Option<i64>) -> i64 {
    v.expect("integer coefficient overflow")
}

impl BaseRing for i64 {
    const NAME: &'static str = "Z";

    fn ring_zero() -> Self {
        0
    }
    fn ring_one() -> Self {
        1
    }
    fn ring_from_int(n: i64) -> Self {
        n
    }
    fn ring_add(&self, o: &Self) -> Self {
        ck(self.checked_add(*o))
    }
    fn ring_sub(&self, o: &Self) -> Self {
        ck(self.checked_sub(*o))
    }
    fn ring_mul(&self, o: &Self) -> Self {
        ck(self.checked_mul(*o))
    }
    fn ring_neg(&self) -> Self {
        ck(self.checked_neg())
    }
    fn ring_conj(&self) -> Self {
        *self
    }
    fn ring_is_zero(&self) -> bool {
        *self == 0
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self as f64, 0.0)
    }
    fn root_of_unity(k: u64, j: u64) -> Option<Self> {
        match reduce_root(k, j) {
            (1, _) => Some(1),
            (2, _) => Some(-1),
            _ => None,
        }
    }
}

impl BaseRing for EisensteinInt {
    const NAME: &'static str = "Z[w]";

    fn ring_zero() -> Self {
        Self::ZERO
    }
    fn ring_one() -> Self {
        Self::ONE
    }
    fn ring_from_int(n: i64) -> Self {
        Self::from_int(n)
    }
    fn ring_add(&self, o: &Self) -> Self {
        *self + *o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn ring_neg(&self) -> Self {
        -*self
    }
    fn ring_conj(&self) -> Self {
        self.conj()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn to_complex(&self) -> Complex64 {
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        Complex64::new(self.a as f64, 0.0) + w * self.b as f64
    }
    fn root_of_unity(k: u64, j: u64) -> Option<Self> {
        let (k, j) = reduce_root(k, j);
        if 6 % k != 0 {
            return None;
        }
        // zeta_6^m for m = 0..5
        const SIXTH: [EisensteinInt; 6] = [
            EisensteinInt::new(1, 0),
            EisensteinInt::new(1, 1),
            EisensteinInt::new(0, 1),
            EisensteinInt::new(-1, 0),
            EisensteinInt::new(-1, -1),
            EisensteinInt::new(0, -1),
        ];
        Some(SIXTH[(j * (6 / k)) as usize])
    }
}

impl BaseRing for GaussianInt {
    const NAME: &'static str = "Z[i]";

    fn ring_zero() -> Self {
        Self::ZERO
    }
    fn ring_one() -> Self {
        Self::ONE
    }
    fn ring_from_int(n: i64) -> Self {
        Self::from_int(n)
    }
    fn ring_add(&self, o: &Self) -> Self {
        *self + *o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn ring_neg(&self) -> Self {
        -*self
    }
    fn ring_conj(&self) -> Self {
        self.conj()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.a as f64, self.b as f64)
    }
    fn root_of_unity(k: u64, j: u64) -> Option<Self> {
        let (k, j) = reduce_root(k, j);
        if 4 % k != 0 {
            return None;
        }
        Some(Self::units()[(j * (4 / k)) as usize])
    }
}

/// `sum_j coeffs[j] * zeta_p^j`, canonical over `1, ..., zeta^(p-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElt<R> {
    p: u64,
    coeffs: Vec<R>,
}

impl<R: BaseRing> CyclotomicElt<R> {
    fn check_p(p: u64) -> Result<()> {
        if is_odd_prime(p) {
            Ok(())
        } else {
            Err(Error::domain(format!("cyclotomic modulus {p} is not an odd prime")))
        }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::check_p(p)?;
        Ok(Self { p, coeffs: vec![R::ring_zero(); (p - 1) as usize] })
    }

    pub fn constant(p: u64, c: R) -> Result<Self> {
        let mut z = Self::zero(p)?;
        z.coeffs[0] = c;
        Ok(z)
    }

    /// `c * zeta^j`.
    pub fn monomial(p: u64, c: R, j: u64) -> Result<Self> {
        Self::check_p(p)?;
        let mut full = vec![R::ring_zero(); p as usize];
        full[(j % p) as usize] = c;
        Ok(Self::from_full(p, full))
    }

    pub fn zeta(p: u64, j: u64) -> Result<Self> {
        Self::monomial(p, R::ring_one(), j)
    }

    /// Builds from `p` coefficients indexed by exponents `0..p`.
    pub(crate) fn from_full(p: u64, mut full: Vec<R>) -> Self {
        debug_assert_eq!(full.len(), p as usize);
        let top = full.pop().expect("p >= 3");
        if !top.ring_is_zero() {
            for c in full.iter_mut() {
                *c = c.ring_sub(&top);
            }
        }
        Self { p, coeffs: full }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::ring_is_zero)
    }

    /// The base-ring value if the element is constant.
    pub fn as_constant(&self) -> Option<R> {
        self.coeffs[1..].iter().all(R::ring_is_zero).then_some(self.coeffs[0])
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.p == o.p {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "elements of {}[zeta_{}] and {}[zeta_{}]",
                R::NAME,
                self.p,
                R::NAME,
                o.p
            )))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.ring_add(b)).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.ring_sub(b)).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(R::ring_neg).collect() }
    }

    pub fn scalar(&self, c: &R) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|a| a.ring_mul(c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let p = self.p as usize;
        let mut full = vec![R::ring_zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.ring_is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                full[k] = full[k].ring_add(&a.ring_mul(b));
            }
        }
        Ok(Self::from_full(self.p, full))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.p, R::ring_one()).expect("valid modulus");
        for _ in 0..e {
            acc = acc.mul(self).expect("same modulus");
        }
        acc
    }

    /// Complex conjugation: `zeta -> zeta^(-1)` and conjugation on coefficients.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut full = vec![R::ring_zero(); p];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[(p - j) % p] = c.ring_conj();
        }
        Self::from_full(self.p, full)
    }

    /// Numerical value under `zeta_p = e^(2 pi i / p)`.
    pub fn to_complex(&self) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.to_complex() * Complex64::from_polar(1.0, TAU * j as f64 / self.p as f64))
            .sum()
    }
}

impl<R: BaseRing> fmt::Display for CyclotomicElt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.ring_is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
