//! Dense polynomials over a prime field `F_p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::integers::{mod_inv, mul_mod};

/// A polynomial over `F_p`, coefficients ascending by degree with no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    /// Builds a polynomial from ascending coefficients, reducing them mod `p`.
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = i64>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i64) as u64)
            .collect();
        Self::from_reduced(p, coeffs)
    }

    /// Coefficients must already lie in `[0, p)`.
    pub(crate) fn from_reduced(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::from_reduced(p, vec![1 % p])
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: u64, c: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c % p;
        Self::from_reduced(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "polynomials over F_{} and F_{}",
                self.p, other.p
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect();
        Ok(Self::from_reduced(p, coeffs))
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        Self::from_reduced(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect();
        Self::from_reduced(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Ok(Self::from_reduced(p, out))
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let inv_lead = mod_inv(divisor.leading() as i128, p).ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv_lead, p);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = mul_mod(c, d, p);
                r[k + j] = (r[k + j] + p - t) % p;
            }
        }
        r.truncate(dd);
        Ok((Self::from_reduced(p, q), Self::from_reduced(p, r)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to a monic polynomial; the zero polynomial stays zero.
    pub fn make_monic(&self) -> Self {
        match mod_inv(self.leading() as i128, self.p) {
            Some(inv) if !self.is_zero() => self.scale(inv),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.p).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.p);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `x^(p^k) - x` as an explicit polynomial.
    pub fn frobenius_minus_x(p: u64, k: u32) -> Result<Self> {
        let degree = p
            .checked_pow(k)
            .and_then(|d| usize::try_from(d).ok())
            .ok_or(Error::Overflow("x^(p^k) - x"))?;
        Self::monomial(p, 1, degree).sub(&Self::x(p))
    }

    /// Monic polynomial of degree `n` whose lower coefficients are the base-`p`
    /// digits of `index` (least significant digit is the constant term).
    pub(crate) fn monic_from_index(p: u64, n: usize, mut index: u64) -> Self {
        let mut coeffs = vec![0u64; n + 1];
        for c in coeffs.iter_mut().take(n) {
            *c = index % p;
            index /= p;
        }
        coeffs[n] = 1;
        Self::from_reduced(p, coeffs)
    }

    /// True if the polynomial vanishes somewhere on `F_p`.
    pub fn has_root(&self) -> bool {
        (0..self.p).any(|x| self.eval(x) == 0)
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[i64]) -> PolyFp {
        PolyFp::new(p, c.iter().copied())
    }

    #[test]
    fn multiplication_over_f2() {
        // (x^2 + x + 1)(x + 1) = x^3 + 2x^2 + 2x + 1 = x^3 + 1 over F_2
        let f = poly(2, &[1, 1, 1]);
        let g = poly(2, &[1, 1]);
        assert_eq!(f.mul(&g).unwrap(), poly(2, &[1, 0, 0, 1]));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = poly(5, &[-1, 0, 1]);
        let g = poly(5, &[-1, 1]);
        assert_eq!(f.gcd(&g).unwrap(), poly(5, &[-1, 1]));
        // scaling does not change the monic gcd
        assert_eq!(f.scale(3).gcd(&g.scale(2)).unwrap(), poly(5, &[4, 1]));
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = poly(3, &[0, 0, 0, 1]).divmod(&poly(3, &[0, 1])).unwrap();
        assert_eq!(q, poly(3, &[0, 0, 1]));
        assert!(r.is_zero());
        let f = poly(7, &[3, 1, 4, 1, 5]);
        let g = poly(7, &[2, 6, 5]);
        let (q, r) = f.divmod(&g).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
    }

    #[test]
    fn errors() {
        assert_eq!(
            poly(3, &[1, 1]).divmod(&PolyFp::zero(3)),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            poly(3, &[1]).add(&poly(5, &[1])),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn canonical_form() {
        let f = poly(5, &[5, 10, 0]);
        assert!(f.is_zero());
        assert_eq!(f.degree(), None);
        assert_eq!(poly(5, &[-1, 7]).coeffs(), &[4, 2]);
        assert_eq!(poly(2, &[1, 1, 1]).to_string(), "x^2 + x + 1");
        assert_eq!(poly(5, &[3, 0, 2]).to_string(), "2*x^2 + 3");
    }

    #[test]
    fn monic_index_order() {
        assert_eq!(PolyFp::monic_from_index(3, 2, 0), poly(3, &[0, 0, 1]));
        assert_eq!(PolyFp::monic_from_index(3, 2, 1), poly(3, &[1, 0, 1]));
        assert_eq!(PolyFp::monic_from_index(3, 2, 3), poly(3, &[0, 1, 1]));
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = poly(5, &[2, 0, 1, 1]);
        let f = poly(5, &[1, 3, 4]);
        let mut acc = PolyFp::one(5);
        for e in 0..30u128 {
            assert_eq!(f.pow_mod(e, &m).unwrap(), acc);
            acc = acc.mul(&f).unwrap().rem(&m).unwrap();
        }
    }
}
