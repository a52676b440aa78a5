//! The Gaussian integers `Z[i]` and the biquadratic residue character.
//!
//! Primary means `a` odd, `b` even and `a + b = 1 (mod 4)`, which is the
//! congruence `pi = 1 (mod (1+i)^3)`. Every element of odd norm has exactly one
//! primary associate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eisenstein::round_half_down;
use crate::error::{Error, Operand, Precondition, Result};
use crate::integers::{self, is_prime, isqrt, mod_inv, mul_mod, pow_mod_u64, rem};
use crate::literal::{self, ParseLiteralError};

/// `a + b*i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    pub a: i64,
    pub b: i64,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("Gaussian integer coordinate overflow")
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("Gaussian integer"))
}

impl GaussianInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const I: Self = Self::new(0, 1);
    /// The ramified prime `1 + i`.
    pub const ONE_PLUS_I: Self = Self::new(1, 1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { a: n, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a, checked(self.b.checked_neg()))
    }

    pub fn norm(&self) -> u128 {
        let (a, b) = (self.a as i128, self.b as i128);
        (a * a + b * b) as u128
    }

    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        let re = self.a.checked_mul(o.a)?.checked_sub(self.b.checked_mul(o.b)?)?;
        let im = self.a.checked_mul(o.b)?.checked_add(self.b.checked_mul(o.a)?)?;
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

    /// `1, i, -1, -i`, so that `units()[j] = i^j`.
    pub fn units() -> [Self; 4] {
        [Self::ONE, Self::I, -Self::ONE, -Self::I]
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn associates(&self) -> [Self; 4] {
        Self::units().map(|u| u * *self)
    }

    /// Euclidean division with `N(r) < N(divisor)`; quotient coordinates are
    /// rounded to nearest, ties toward negative infinity.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm() as i128;
        let (a, b) = (self.a as i128, self.b as i128);
        let (c, d) = (divisor.a as i128, divisor.b as i128);
        let x = a * c + b * d;
        let y = b * c - a * d;
        let (qa, qb) = (round_half_down(x, n), round_half_down(y, n));
        let ra = a - (qa * c - qb * d);
        let rb = b - (qa * d + qb * c);
        Ok((
            Self::new(narrow(qa)?, narrow(qb)?),
            Self::new(narrow(ra)?, narrow(rb)?),
        ))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let n = self.norm() as i128;
        let (a, b) = (other.a as i128, other.b as i128);
        let (c, d) = (self.a as i128, self.b as i128);
        (a * c + b * d) % n == 0 && (b * c - a * d) % n == 0
    }

    pub fn is_primary(&self) -> bool {
        self.a.rem_euclid(2) == 1 && self.b.rem_euclid(2) == 0 && (self.a as i128 + self.b as i128).rem_euclid(4) == 1
    }

    /// `(u, primary)` with `primary = u * self`; needs odd norm.
    pub fn primary_associate(&self) -> Result<(Self, Self)> {
        if self.norm() % 2 == 0 {
            return Err(Error::domain(format!(
                "{self} has even norm and no primary associate"
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

    /// `1` for units, the primary associate for odd norm, otherwise the
    /// associate with `a > 0, b >= 0`.
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
            .find(|z| z.a > 0 && z.b >= 0)
            .expect("one associate lies in the quadrant a > 0, b >= 0")
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(checked(self.a.checked_add(o.a)), checked(self.b.checked_add(o.b)))
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(checked(self.a.checked_sub(o.a)), checked(self.b.checked_sub(o.b)))
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(checked(self.a.checked_neg()), checked(self.b.checked_neg()))
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o).expect("Gaussian integer coordinate overflow")
    }
}

impl From<i64> for GaussianInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        literal::format_quadratic(f, self.a, self.b, 'i')
    }
}

impl FromStr for GaussianInt {
    type Err = ParseLiteralError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        literal::parse_quadratic(s, b'i').map(|(a, b)| Self::new(a, b))
    }
}

pub fn gauss_gcd(alpha: &GaussianInt, beta: &GaussianInt) -> Result<GaussianInt> {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianPrimeClass {
    /// `2 = unit * (1+i)^2`.
    Ramified { unit: GaussianInt, pi: GaussianInt },
    /// `q = 3 (mod 4)`.
    Inert { q: u64 },
    /// `p = 1 (mod 4)`, both factors primary.
    Split { pi: GaussianInt, pi_conj: GaussianInt },
}

/// Splits `p = 1 (mod 4)` as `gcd(p, s + i)` with `s^2 = -1 (mod p)`.
pub fn classify_gaussian_prime(p: u64) -> Result<GaussianPrimeClass> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(GaussianPrimeClass::Ramified {
            unit: -GaussianInt::I,
            pi: GaussianInt::ONE_PLUS_I,
        });
    }
    if p % 4 == 3 {
        return Ok(GaussianPrimeClass::Inert { q: p });
    }
    let s = integers::sqrt_mod(-1, p)?
        .ok_or_else(|| Error::Internal(format!("-1 is not a square mod {p}")))?;
    let pi = gauss_gcd(&GaussianInt::from_int(narrow(p as i128)?), &GaussianInt::new(narrow(s as i128)?, 1))?;
    if pi.norm() != p as u128 || !pi.is_primary() {
        return Err(Error::Internal(format!("splitting {p} produced {pi}")));
    }
    Ok(GaussianPrimeClass::Split { pi, pi_conj: pi.conj() })
}

fn prime_square_root(n: u128) -> Option<u64> {
    let n = u64::try_from(n).ok()?;
    let q = isqrt(n);
    (q * q == n && is_prime(q)).then_some(q)
}

/// True iff the norm is a rational prime or `alpha` is associate to an inert
/// rational prime `q = 3 (mod 4)`.
pub fn is_gaussian_prime(alpha: &GaussianInt) -> Result<bool> {
    if alpha.is_zero() || alpha.is_unit() {
        return Err(Error::domain(format!("{alpha} is zero or a unit")));
    }
    let n = alpha.norm();
    if u64::try_from(n).is_ok_and(is_prime) {
        return Ok(true);
    }
    Ok(match prime_square_root(n) {
        Some(q) if q % 4 == 3 => alpha.a % q as i64 == 0 && alpha.b % q as i64 == 0,
        _ => false,
    })
}

/// Canonical residue modulo a Gaussian prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaussResidue {
    /// Prime norm `p`: a rational integer in `[0, p)`.
    Split { p: u64, value: u64 },
    /// Inert `q`: `a + b*i`, `a, b` in `[0, q)`.
    Inert { q: u64, a: u64, b: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Includes `1 + i` with `p = 2`.
    Split { p: u64, i: u64 },
    Inert { q: u64 },
}

/// `Z[i]/(pi)` for a Gaussian prime `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussResidueField {
    modulus: GaussianInt,
    kind: Kind,
}

impl GaussResidueField {
    pub fn new(pi: &GaussianInt) -> Result<Self> {
        if pi.is_zero() || pi.is_unit() || !is_gaussian_prime(pi)? {
            return Err(Error::domain(format!("{pi} is not a Gaussian prime")));
        }
        let n = pi.norm();
        let kind = match u64::try_from(n) {
            Ok(p) if is_prime(p) => {
                // c + d*i = 0 (mod pi) gives i = -c/d
                let d_inv = mod_inv(pi.b as i128, p)
                    .ok_or_else(|| Error::Internal(format!("{pi}: i-coordinate not invertible")))?;
                Kind::Split { p, i: mul_mod(rem(-(pi.a as i128), p), d_inv, p) }
            }
            _ => Kind::Inert {
                q: prime_square_root(n)
                    .ok_or_else(|| Error::Internal(format!("{pi}: unexpected norm {n}")))?,
            },
        };
        Ok(Self { modulus: *pi, kind })
    }

    pub fn modulus(&self) -> GaussianInt {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        match self.kind {
            Kind::Split { p, .. } => p,
            Kind::Inert { q } => q * q,
        }
    }

    /// The residue of `i` when the norm is prime.
    pub fn i_residue(&self) -> Option<u64> {
        match self.kind {
            Kind::Split { i, .. } => Some(i),
            Kind::Inert { .. } => None,
        }
    }

    pub fn reduce(&self, alpha: &GaussianInt) -> GaussResidue {
        let (a, b) = (alpha.a as i128, alpha.b as i128);
        match self.kind {
            Kind::Split { p, i } => GaussResidue::Split {
                p,
                value: (rem(a, p) + mul_mod(rem(b, p), i, p)) % p,
            },
            Kind::Inert { q } => GaussResidue::Inert { q, a: rem(a, q), b: rem(b, q) },
        }
    }

    pub fn lift(&self, r: &GaussResidue) -> GaussianInt {
        match *r {
            GaussResidue::Split { value, .. } => GaussianInt::from_int(value as i64),
            GaussResidue::Inert { a, b, .. } => GaussianInt::new(a as i64, b as i64),
        }
    }

    pub fn one(&self) -> GaussResidue {
        self.reduce(&GaussianInt::ONE)
    }

    pub fn is_zero(&self, r: &GaussResidue) -> bool {
        *r == self.reduce(&GaussianInt::ZERO)
    }

    pub fn mul(&self, x: &GaussResidue, y: &GaussResidue) -> GaussResidue {
        match (*x, *y) {
            (GaussResidue::Split { p, value: u }, GaussResidue::Split { value: v, .. }) => {
                GaussResidue::Split { p, value: mul_mod(u, v, p) }
            }
            (GaussResidue::Inert { q, a, b }, GaussResidue::Inert { a: c, b: d, .. }) => {
                GaussResidue::Inert {
                    q,
                    a: (mul_mod(a, c, q) + q - mul_mod(b, d, q)) % q,
                    b: (mul_mod(a, d, q) + mul_mod(b, c, q)) % q,
                }
            }
            _ => panic!("residues from different fields"),
        }
    }

    pub fn pow(&self, x: &GaussResidue, mut e: u64) -> GaussResidue {
        if let GaussResidue::Split { p, value } = *x {
            return GaussResidue::Split { p, value: pow_mod_u64(value, e, p) };
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

    pub fn elements(&self) -> Vec<GaussResidue> {
        match self.kind {
            Kind::Split { p, .. } => (0..p).map(|value| GaussResidue::Split { p, value }).collect(),
            Kind::Inert { q } => (0..q)
                .flat_map(|a| (0..q).map(move |b| GaussResidue::Inert { q, a, b }))
                .collect(),
        }
    }
}

/// `0` or `i^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuarticValue {
    Zero,
    One,
    I,
    MinusOne,
    MinusI,
}

impl QuarticValue {
    pub fn from_exponent(j: u32) -> Self {
        [Self::One, Self::I, Self::MinusOne, Self::MinusI][(j % 4) as usize]
    }

    /// `j` with `self = i^j`, or `None` for zero.
    pub fn exponent(&self) -> Option<u32> {
        match self {
            Self::Zero => None,
            Self::One => Some(0),
            Self::I => Some(1),
            Self::MinusOne => Some(2),
            Self::MinusI => Some(3),
        }
    }

    pub fn conj(&self) -> Self {
        self.exponent().map_or(Self::Zero, |j| Self::from_exponent(4 - j))
    }

    pub fn to_gaussian(&self) -> GaussianInt {
        self.exponent().map_or(GaussianInt::ZERO, |j| GaussianInt::units()[j as usize])
    }

    pub fn sign(positive: bool) -> Self {
        if positive {
            Self::One
        } else {
            Self::MinusOne
        }
    }
}

impl Mul for QuarticValue {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        match (self.exponent(), o.exponent()) {
            (Some(j), Some(k)) => Self::from_exponent(j + k),
            _ => Self::Zero,
        }
    }
}

impl fmt::Display for QuarticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::I => "i",
            Self::MinusOne => "-1",
            Self::MinusI => "-i",
        })
    }
}

/// Precomputed data for `chi_pi`: the residue field and the residues of `i^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticCharCtx {
    field: GaussResidueField,
    exponent: u64,
    unit_residues: [GaussResidue; 4],
}

impl QuarticCharCtx {
    pub fn new(pi: &GaussianInt) -> Result<Self> {
        let field = GaussResidueField::new(pi)?;
        if field.order() == 2 {
            return Err(Error::domain("the biquadratic character needs N(pi) != 2"));
        }
        Ok(Self {
            field,
            exponent: (field.order() - 1) / 4,
            unit_residues: GaussianInt::units().map(|u| field.reduce(&u)),
        })
    }

    pub fn pi(&self) -> GaussianInt {
        self.field.modulus()
    }

    pub fn norm(&self) -> u64 {
        self.field.order()
    }

    pub fn field(&self) -> &GaussResidueField {
        &self.field
    }

    /// `alpha^((N pi - 1)/4)` matched against `1, i, -1, -i`; exactly one
    /// candidate may match.
    pub fn eval(&self, alpha: &GaussianInt) -> Result<QuarticValue> {
        let r = self.field.reduce(alpha);
        if self.field.is_zero(&r) {
            return Ok(QuarticValue::Zero);
        }
        let power = self.field.pow(&r, self.exponent);
        let mut hits = (0..4u32).filter(|&j| self.unit_residues[j as usize] == power);
        match (hits.next(), hits.next()) {
            (Some(j), None) => Ok(QuarticValue::from_exponent(j)),
            (None, _) => Err(Error::Internal(format!(
                "{alpha}^{} is not a fourth root of unity mod {}",
                self.exponent,
                self.pi()
            ))),
            (Some(_), Some(_)) => Err(Error::Internal(format!(
                "two units congruent mod {}",
                self.pi()
            ))),
        }
    }
}

pub fn biquadratic_char(pi: &GaussianInt, alpha: &GaussianInt) -> Result<QuarticValue> {
    QuarticCharCtx::new(pi)?.eval(alpha)
}

/// Both characters of a pair of primary primes and the sign
/// `(-1)^(((N lambda - 1)/4) * ((N pi - 1)/4))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquadraticReciprocity {
    pub chi_pi_lambda: QuarticValue,
    pub chi_lambda_pi: QuarticValue,
    pub sign: QuarticValue,
}

impl BiquadraticReciprocity {
    /// `chi_pi(lambda) = sign * chi_lambda(pi)`, the law for primary primes.
    pub fn law_holds(&self) -> bool {
        self.chi_pi_lambda == self.sign * self.chi_lambda_pi
    }

    /// `chi_pi(lambda) * chi_lambda(pi) = sign`. Only true when the characters
    /// are real; kept as a diagnostic.
    pub fn product_form_holds(&self) -> bool {
        self.chi_pi_lambda * self.chi_lambda_pi == self.sign
    }
}

fn reciprocity_operand(z: &GaussianInt, which: Operand) -> Result<()> {
    if z.is_zero() || z.is_unit() || !is_gaussian_prime(z)? {
        return Err(Precondition::NotPrime(which).into());
    }
    if z.norm() % 2 == 0 {
        return Err(Precondition::EvenNorm(which).into());
    }
    if !z.is_primary() {
        return Err(Precondition::NotPrimary(which).into());
    }
    Ok(())
}

pub fn biquadratic_reciprocity(pi: &GaussianInt, lam: &GaussianInt) -> Result<BiquadraticReciprocity> {
    reciprocity_operand(pi, Operand::First)?;
    reciprocity_operand(lam, Operand::Second)?;
    if pi.norm() == lam.norm() {
        return Err(if pi == lam { Precondition::NotCoprime } else { Precondition::EqualNorms }.into());
    }
    biquadratic_reciprocity_with(&QuarticCharCtx::new(pi)?, &QuarticCharCtx::new(lam)?)
}

/// Reciprocity for prevalidated contexts.
pub(crate) fn biquadratic_reciprocity_with(
    c1: &QuarticCharCtx,
    c2: &QuarticCharCtx,
) -> Result<BiquadraticReciprocity> {
    let (np, nl) = ((c1.norm() - 1) / 4, (c2.norm() - 1) / 4);
    Ok(BiquadraticReciprocity {
        chi_pi_lambda: c1.eval(&c2.pi())?,
        chi_lambda_pi: c2.eval(&c1.pi())?,
        sign: QuarticValue::sign(np % 2 == 0 || nl % 2 == 0),
    })
}

/// True iff the biquadratic reciprocity law holds for the pair.
pub fn check_biquadratic_reciprocity(pi: &GaussianInt, lam: &GaussianInt) -> Result<bool> {
    Ok(biquadratic_reciprocity(pi, lam)?.law_holds())
}

/// Primary Gaussian primes of norm at most `max_norm` (odd norms only),
/// ordered by norm then coordinates. Inert primes appear as `-q`.
pub fn primary_primes_up_to(max_norm: u64) -> Result<Vec<GaussianInt>> {
    let mut out = Vec::new();
    for p in integers::primes_up_to(max_norm) {
        match classify_gaussian_prime(p)? {
            GaussianPrimeClass::Split { pi, pi_conj } => out.extend([pi, pi_conj]),
            GaussianPrimeClass::Inert { q } if q.checked_mul(q).is_some_and(|n| n <= max_norm) => {
                out.push(GaussianInt::from_int(-(q as i64)));
            }
            _ => {}
        }
    }
    out.sort_by_key(|z| (z.norm(), *z));
    Ok(out)
}
