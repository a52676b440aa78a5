//! The Eisenstein integers `Z[w]`, `w = (-1 + sqrt(-3)) / 2`.
//!
//! Elements are stored in the basis `{1, w}`; products are rewritten with
//! `w^2 = -1 - w` so `w^2` never appears in stored data. Coordinates are
//! `i64`; every ring operation is checked and panics on overflow instead of
//! wrapping. Norms and quotients are computed in `i128`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::integers::{self, is_prime, isqrt, mod_inv, mul_mod, pow_mod_u64, rem};
use crate::literal::{self, ParseLiteralError};

/// `a + b*w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("Eisenstein integer coordinate overflow")
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("Eisenstein integer"))
}

/// Nearest integer to `num / den` (`den > 0`), ties toward negative infinity.
pub(crate) fn round_half_down(num: i128, den: i128) -> i128 {
    -((den - 2 * num).div_euclid(2 * den))
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);
    /// `w^2 = -1 - w`.
    pub const OMEGA_SQ: Self = Self::new(-1, -1);
    /// The ramified prime `1 - w`.
    pub const ONE_MINUS_OMEGA: Self = Self::new(1, -1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { a: n, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    /// Complex conjugate: `conj(w) = w^2`, so `conj(a + b*w) = (a - b) - b*w`.
    pub fn conj(&self) -> Self {
        Self::new(checked(self.a.checked_sub(self.b)), checked(self.b.checked_neg()))
    }

    /// `N(a + b*w) = a^2 - ab + b^2`.
    pub fn norm(&self) -> u128 {
        let (a, b) = (self.a as i128, self.b as i128);
        (a * a - a * b + b * b) as u128
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        let bd = b.checked_mul(d)?;
        let re = a.checked_mul(c)?.checked_sub(bd)?;
        let im = a.checked_mul(d)?.checked_add(b.checked_mul(c)?)?.checked_sub(bd)?;
        Some(Self::new(re, im))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::ONE;
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// The six units in the order `1, -1, w, -w, w^2, -w^2`.
    pub fn units() -> [Self; 6] {
        [
            Self::ONE,
            -Self::ONE,
            Self::OMEGA,
            -Self::OMEGA,
            Self::OMEGA_SQ,
            -Self::OMEGA_SQ,
        ]
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// `u * self` for each unit `u`, in [`units`](Self::units) order.
    pub fn associates(&self) -> [Self; 6] {
        Self::units().map(|u| u * *self)
    }

    /// Euclidean division: `self = q * divisor + r` with `N(r) < N(divisor)`.
    ///
    /// `q` rounds each `{1, w}` coordinate of the exact quotient to the nearest
    /// integer, ties toward negative infinity.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm() as i128;
        let (a, b) = (self.a as i128, self.b as i128);
        let (c, d) = ((divisor.a - divisor.b) as i128, -(divisor.b as i128));
        // self * conj(divisor) = x + y*w
        let x = a * c - b * d;
        let y = a * d + b * c - b * d;
        let q = (round_half_down(x, n), round_half_down(y, n));
        let (e, f) = (divisor.a as i128, divisor.b as i128);
        let r_a = a - (q.0 * e - q.1 * f);
        let r_b = b - (q.0 * f + q.1 * e - q.1 * f);
        Ok((
            Self::new(narrow(q.0)?, narrow(q.1)?),
            Self::new(narrow(r_a)?, narrow(r_b)?),
        ))
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let n = self.norm() as i128;
        let (a, b) = (other.a as i128, other.b as i128);
        let (c, d) = ((self.a - self.b) as i128, -(self.b as i128));
        let x = a * c - b * d;
        let y = a * d + b * c - b * d;
        x % n == 0 && y % n == 0
    }

    /// `a = 2 (mod 3)` and `b = 0 (mod 3)`, i.e. `self = 2 (mod 3)`.
    pub fn is_primary(&self) -> bool {
        self.a.rem_euclid(3) == 2 && self.b.rem_euclid(3) == 0
    }

    /// The unique primary associate together with the unit `u` such that
    /// `primary = u * self`. Defined exactly when `3` does not divide `N(self)`.
    pub fn primary_associate(&self) -> Result<(Self, Self)> {
        if self.norm() % 3 == 0 {
            return Err(Error::domain(format!(
                "{self} has norm divisible by 3 and no primary associate"
            )));
        }
        let mut found = None;
        for u in Self::units() {
            let candidate = u * *self;
            if candidate.is_primary() {
                if found.is_some() {
                    return Err(Error::Internal(format!("{self} has two primary associates")));
                }
                found = Some((u, candidate));
            }
        }
        found.ok_or_else(|| Error::Internal(format!("{self} has no primary associate")))
    }

    /// Canonical associate: `1` for units, the primary associate when one
    /// exists, otherwise the associate with `a > b >= 0`.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        if self.is_unit() {
            return Self::ONE;
        }
        if let Ok((_, primary)) = self.primary_associate() {
            return primary;
        }
        self.associates()
            .into_iter()
            .find(|z| z.b >= 0 && z.a > z.b)
            .expect("one associate lies in the sector a > b >= 0")
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(checked(self.a.checked_add(o.a)), checked(self.b.checked_add(o.b)))
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(checked(self.a.checked_sub(o.a)), checked(self.b.checked_sub(o.b)))
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(checked(self.a.checked_neg()), checked(self.b.checked_neg()))
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o)
            .expect("Eisenstein integer coordinate overflow")
    }
}

impl From<i64> for EisensteinInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        literal::format_quadratic(f, self.a, self.b, 'w')
    }
}

impl FromStr for EisensteinInt {
    type Err = ParseLiteralError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        literal::parse_quadratic(s, b'w').map(|(a, b)| Self::new(a, b))
    }
}

/// Greatest common divisor, normalized as in [`EisensteinInt::normalized`].
pub fn eis_gcd(alpha: &EisensteinInt, beta: &EisensteinInt) -> Result<EisensteinInt> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    let (mut x, mut y) = (*alpha, *beta);
    while !y.is_zero() {
        let (_, r) = x.divmod(&y)?;
        x = y;
        y = r;
    }
    Ok(x.normalized())
}

/// How a rational prime decomposes in `Z[w]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClassification {
    /// `3 = unit * pi^2` with `pi = 1 - w`.
    Ramified { unit: EisensteinInt, pi: EisensteinInt },
    /// `q = 2 (mod 3)` stays prime.
    Inert { q: u64 },
    /// `p = 1 (mod 3)` is `pi * conj(pi)` with both factors primary.
    Split { pi: EisensteinInt, pi_conj: EisensteinInt },
}

/// Classifies a rational prime. Split primes are factored as
/// `gcd(p, s - (1 + 2w))` with `s^2 = -3 (mod p)`, using `sqrt(-3) = 1 + 2w`.
pub fn classify_prime(p: u64) -> Result<PrimeClassification> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p == 3 {
        return Ok(PrimeClassification::Ramified {
            unit: -EisensteinInt::OMEGA_SQ,
            pi: EisensteinInt::ONE_MINUS_OMEGA,
        });
    }
    if p % 3 == 2 {
        return Ok(PrimeClassification::Inert { q: p });
    }
    let s = integers::sqrt_mod(-3, p)?
        .ok_or_else(|| Error::Internal(format!("-3 is not a square mod {p}")))?;
    let p_elt = EisensteinInt::from_int(narrow(p as i128)?);
    let candidate = EisensteinInt::new(narrow(s as i128 - 1)?, -2);
    let pi = eis_gcd(&p_elt, &candidate)?;
    if pi.norm() != p as u128 || !pi.is_primary() {
        return Err(Error::Internal(format!("splitting {p} produced {pi}")));
    }
    Ok(PrimeClassification::Split {
        pi,
        pi_conj: pi.conj(),
    })
}

/// If `n = q^2` for a prime `q`, returns `q`.
fn prime_square_root(n: u128) -> Option<u64> {
    let n = u64::try_from(n).ok()?;
    let q = isqrt(n);
    (q * q == n && is_prime(q)).then_some(q)
}

/// True iff `alpha` is a prime of `Z[w]`: its norm is a rational prime, or it
/// is an associate of an inert rational prime `q = 2 (mod 3)`.
pub fn is_prime_elem(alpha: &EisensteinInt) -> Result<bool> {
    if alpha.is_zero() || alpha.is_unit() {
        return Err(Error::domain(format!("{alpha} is zero or a unit")));
    }
    let n = alpha.norm();
    if u64::try_from(n).is_ok_and(is_prime) {
        return Ok(true);
    }
    Ok(match prime_square_root(n) {
        Some(q) if q % 3 == 2 => alpha.a % q as i64 == 0 && alpha.b % q as i64 == 0,
        _ => false,
    })
}

/// Canonical residue of an element modulo a prime `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidueRep {
    /// `N(pi) = p`: every class contains a rational integer in `[0, p)`.
    Split { p: u64, value: u64 },
    /// `pi` associate to an inert `q`: classes `a + b*w` with `a, b` in `[0, q)`.
    Inert { q: u64, a: u64, b: u64 },
    /// `pi` associate to `1 - w`: classes `0, 1, 2`.
    Ramified { value: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ResidueKind {
    Split { p: u64, omega: u64 },
    Inert { q: u64 },
    Ramified,
}

/// The residue field `Z[w]/(pi)` for a prime `pi`, with `N(pi)` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EisResidueField {
    modulus: EisensteinInt,
    kind: ResidueKind,
}

impl EisResidueField {
    pub fn new(pi: &EisensteinInt) -> Result<Self> {
        if pi.is_zero() || pi.is_unit() || !is_prime_elem(pi)? {
            return Err(Error::domain(format!("{pi} is not a prime element")));
        }
        let n = pi.norm();
        let kind = if n == 3 {
            ResidueKind::Ramified
        } else if let Ok(p) = u64::try_from(n).map_err(drop).and_then(|n| {
            if is_prime(n) {
                Ok(n)
            } else {
                Err(())
            }
        }) {
            // c + d*w = 0 (mod pi) gives w = -c/d; p cannot divide d.
            let d_inv = mod_inv(pi.b as i128, p)
                .ok_or_else(|| Error::Internal(format!("{pi}: w-coordinate not invertible")))?;
            let omega = mul_mod(rem(-(pi.a as i128), p), d_inv, p);
            ResidueKind::Split { p, omega }
        } else {
            let q = prime_square_root(n)
                .ok_or_else(|| Error::Internal(format!("{pi}: unexpected norm {n}")))?;
            ResidueKind::Inert { q }
        };
        Ok(Self { modulus: *pi, kind })
    }

    pub fn modulus(&self) -> EisensteinInt {
        self.modulus
    }

    /// Number of residue classes, `N(pi)`.
    pub fn order(&self) -> u64 {
        match self.kind {
            ResidueKind::Split { p, .. } => p,
            ResidueKind::Inert { q } => q * q,
            ResidueKind::Ramified => 3,
        }
    }

    /// The residue of `w` when `N(pi)` is prime.
    pub fn omega_residue(&self) -> Option<u64> {
        match self.kind {
            ResidueKind::Split { omega, .. } => Some(omega),
            _ => None,
        }
    }

    pub fn reduce(&self, alpha: &EisensteinInt) -> ResidueRep {
        let (a, b) = (alpha.a as i128, alpha.b as i128);
        match self.kind {
            ResidueKind::Split { p, omega } => ResidueRep::Split {
                p,
                value: (rem(a, p) + mul_mod(rem(b, p), omega, p)) % p,
            },
            ResidueKind::Inert { q } => ResidueRep::Inert {
                q,
                a: rem(a, q),
                b: rem(b, q),
            },
            ResidueKind::Ramified => ResidueRep::Ramified { value: rem(a + b, 3) },
        }
    }

    /// The canonical representative of a residue class, as an element.
    pub fn lift(&self, r: &ResidueRep) -> EisensteinInt {
        match *r {
            ResidueRep::Split { value, .. } | ResidueRep::Ramified { value } => {
                EisensteinInt::from_int(value as i64)
            }
            ResidueRep::Inert { a, b, .. } => EisensteinInt::new(a as i64, b as i64),
        }
    }

    pub fn zero(&self) -> ResidueRep {
        self.reduce(&EisensteinInt::ZERO)
    }

    pub fn one(&self) -> ResidueRep {
        self.reduce(&EisensteinInt::ONE)
    }

    pub fn is_zero(&self, r: &ResidueRep) -> bool {
        *r == self.zero()
    }

    pub fn mul(&self, x: &ResidueRep, y: &ResidueRep) -> ResidueRep {
        match (*x, *y) {
            (ResidueRep::Split { p, value: u }, ResidueRep::Split { value: v, .. }) => {
                ResidueRep::Split { p, value: mul_mod(u, v, p) }
            }
            (ResidueRep::Inert { q, a, b }, ResidueRep::Inert { a: c, b: d, .. }) => {
                // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
                let bd = mul_mod(b, d, q);
                ResidueRep::Inert {
                    q,
                    a: (mul_mod(a, c, q) + q - bd) % q,
                    b: (mul_mod(a, d, q) + mul_mod(b, c, q) + q - bd) % q,
                }
            }
            (ResidueRep::Ramified { value: u }, ResidueRep::Ramified { value: v }) => {
                ResidueRep::Ramified { value: u * v % 3 }
            }
            _ => panic!("residues from different fields"),
        }
    }

    pub fn add(&self, x: &ResidueRep, y: &ResidueRep) -> ResidueRep {
        match (*x, *y) {
            (ResidueRep::Split { p, value: u }, ResidueRep::Split { value: v, .. }) => {
                ResidueRep::Split { p, value: (u + v) % p }
            }
            (ResidueRep::Inert { q, a, b }, ResidueRep::Inert { a: c, b: d, .. }) => {
                ResidueRep::Inert { q, a: (a + c) % q, b: (b + d) % q }
            }
            (ResidueRep::Ramified { value: u }, ResidueRep::Ramified { value: v }) => {
                ResidueRep::Ramified { value: (u + v) % 3 }
            }
            _ => panic!("residues from different fields"),
        }
    }

    pub fn pow(&self, x: &ResidueRep, mut e: u64) -> ResidueRep {
        if let ResidueRep::Split { p, value } = *x {
            return ResidueRep::Split { p, value: pow_mod_u64(value, e, p) };
        }
        let mut acc = self.one();
        let mut base = *x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Every residue class, in canonical order.
    pub fn elements(&self) -> Vec<ResidueRep> {
        match self.kind {
            ResidueKind::Split { p, .. } => {
                (0..p).map(|value| ResidueRep::Split { p, value }).collect()
            }
            ResidueKind::Inert { q } => (0..q)
                .flat_map(|a| (0..q).map(move |b| ResidueRep::Inert { q, a, b }))
                .collect(),
            ResidueKind::Ramified => (0..3).map(|value| ResidueRep::Ramified { value }).collect(),
        }
    }
}

pub fn residue_reduce(alpha: &EisensteinInt, pi: &EisensteinInt) -> Result<ResidueRep> {
    Ok(EisResidueField::new(pi)?.reduce(alpha))
}

pub fn residue_field_order(pi: &EisensteinInt) -> Result<u64> {
    Ok(EisResidueField::new(pi)?.order())
}
