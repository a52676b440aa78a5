//! The cubic residue character of `Z[w]` and the cubic reciprocity law.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::characters::{gauss_sum_in, jacobi_in, MultChar};
use crate::cyclotomic::CyclotomicElt;
use crate::eisenstein::{
    classify_prime, is_prime_elem, EisResidueField, EisensteinInt, PrimeClassification, ResidueRep,
};
use crate::error::{Error, Operand, Precondition, Result};
use crate::integers::{self, is_prime, isqrt, pow_mod_u64};

/// Largest `p` for which `g(chi)^3` is expanded in `Z[w][zeta_p]`.
pub const CYCLOTOMIC_GUARD: u64 = 500;

/// `0`, `1`, `w` or `w^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CubicValue {
    Zero,
    One,
    Omega,
    OmegaSq,
}

impl CubicValue {
    pub fn from_exponent(m: u64) -> Self {
        [Self::One, Self::Omega, Self::OmegaSq][(m % 3) as usize]
    }

    pub fn exponent(&self) -> Option<u64> {
        match self {
            Self::Zero => None,
            Self::One => Some(0),
            Self::Omega => Some(1),
            Self::OmegaSq => Some(2),
        }
    }

    pub fn conj(&self) -> Self {
        self.exponent().map_or(Self::Zero, |m| Self::from_exponent(3 - m))
    }

    pub fn to_eisenstein(&self) -> EisensteinInt {
        match self {
            Self::Zero => EisensteinInt::ZERO,
            Self::One => EisensteinInt::ONE,
            Self::Omega => EisensteinInt::OMEGA,
            Self::OmegaSq => EisensteinInt::OMEGA_SQ,
        }
    }
}

impl Mul for CubicValue {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        match (self.exponent(), o.exponent()) {
            (Some(m), Some(n)) => Self::from_exponent(m + n),
            _ => Self::Zero,
        }
    }
}

impl fmt::Display for CubicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::Omega => "w",
            Self::OmegaSq => "w^2",
        })
    }
}

/// `chi_pi` for a prime `pi` with `N(pi) != 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicCharCtx {
    field: EisResidueField,
    exponent: u64,
    /// Residues of `1, w, w^2`.
    unit_residues: [ResidueRep; 3],
}

impl CubicCharCtx {
    pub fn new(pi: &EisensteinInt) -> Result<Self> {
        let field = EisResidueField::new(pi)?;
        let norm = field.order();
        if norm == 3 {
            return Err(Error::domain("the cubic character needs N(pi) != 3"));
        }
        let units = [EisensteinInt::ONE, EisensteinInt::OMEGA, EisensteinInt::OMEGA_SQ];
        Ok(Self {
            field,
            exponent: (norm - 1) / 3,
            unit_residues: units.map(|u| field.reduce(&u)),
        })
    }

    pub fn pi(&self) -> EisensteinInt {
        self.field.modulus()
    }

    pub fn norm(&self) -> u64 {
        self.field.order()
    }

    /// `(N(pi) - 1) / 3`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn field(&self) -> &EisResidueField {
        &self.field
    }

    /// The unit `u` in `1, w, w^2` with `alpha^((N pi - 1)/3) = u (mod pi)`.
    pub fn eval(&self, alpha: &EisensteinInt) -> Result<CubicValue> {
        self.eval_residue(&self.field.reduce(alpha))
    }

    pub fn eval_residue(&self, r: &ResidueRep) -> Result<CubicValue> {
        if self.field.is_zero(r) {
            return Ok(CubicValue::Zero);
        }
        let power = self.field.pow(r, self.exponent);
        let mut hits = (0..3u64).filter(|&m| self.unit_residues[m as usize] == power);
        match (hits.next(), hits.next()) {
            (Some(m), None) => Ok(CubicValue::from_exponent(m)),
            (None, _) => Err(Error::Internal(format!(
                "power {power:?} is not a cube root of unity mod {}",
                self.pi()
            ))),
            (Some(_), Some(_)) => Err(Error::Internal(format!(
                "two cube roots of unity congruent mod {}",
                self.pi()
            ))),
        }
    }
}

pub fn cubic_char(ctx: &CubicCharCtx, alpha: &EisensteinInt) -> Result<CubicValue> {
    ctx.eval(alpha)
}

pub fn is_cubic_residue(ctx: &CubicCharCtx, alpha: &EisensteinInt) -> Result<bool> {
    match ctx.eval(alpha)? {
        CubicValue::Zero => Err(Error::domain(format!("{} divides {alpha}", ctx.pi()))),
        v => Ok(v == CubicValue::One),
    }
}

/// `chi_pi1(pi2)` and `chi_pi2(pi1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicReciprocity {
    pub chi_1_of_2: CubicValue,
    pub chi_2_of_1: CubicValue,
}

impl CubicReciprocity {
    pub fn holds(&self) -> bool {
        self.chi_1_of_2 == self.chi_2_of_1
    }
}

fn reciprocity_operand(z: &EisensteinInt, which: Operand) -> Result<()> {
    if z.is_zero() || z.is_unit() || !is_prime_elem(z)? {
        return Err(Precondition::NotPrime(which).into());
    }
    if z.norm() == 3 {
        return Err(Precondition::RamifiedNorm(which).into());
    }
    if !z.is_primary() {
        return Err(Precondition::NotPrimary(which).into());
    }
    Ok(())
}

pub fn cubic_reciprocity(pi1: &EisensteinInt, pi2: &EisensteinInt) -> Result<CubicReciprocity> {
    reciprocity_operand(pi1, Operand::First)?;
    reciprocity_operand(pi2, Operand::Second)?;
    if pi1.norm() == pi2.norm() {
        return Err(Precondition::EqualNorms.into());
    }
    cubic_reciprocity_with(&CubicCharCtx::new(pi1)?, &CubicCharCtx::new(pi2)?)
}

/// Reciprocity for prevalidated contexts.
pub(crate) fn cubic_reciprocity_with(c1: &CubicCharCtx, c2: &CubicCharCtx) -> Result<CubicReciprocity> {
    Ok(CubicReciprocity {
        chi_1_of_2: c1.eval(&c2.pi())?,
        chi_2_of_1: c2.eval(&c1.pi())?,
    })
}

pub fn check_cubic_reciprocity(pi1: &EisensteinInt, pi2: &EisensteinInt) -> Result<bool> {
    Ok(cubic_reciprocity(pi1, pi2)?.holds())
}

/// `chi_pi(w) = w^((N pi - 1)/3)`, read off from `N(pi) mod 9`.
pub fn supplement_omega(ctx: &CubicCharCtx) -> CubicValue {
    match ctx.norm() % 9 {
        1 => CubicValue::One,
        4 => CubicValue::Omega,
        7 => CubicValue::OmegaSq,
        r => unreachable!("norm = 1 (mod 3) but {r} (mod 9)"),
    }
}

/// `chi_pi(1 - w) = w^(2m)` where `pi = a + b w` is primary and `a = 3m - 1`.
pub fn supplement_one_minus_omega(ctx: &CubicCharCtx) -> Result<CubicValue> {
    let pi = ctx.pi();
    if !pi.is_primary() {
        return Err(Error::domain(format!("{pi} is not primary")));
    }
    let m = (pi.a as i128 + 1) / 3;
    Ok(CubicValue::from_exponent((2 * m).rem_euclid(3) as u64))
}

/// Both supplements compared with direct evaluation.
pub fn supplements_agree(ctx: &CubicCharCtx) -> Result<bool> {
    Ok(supplement_omega(ctx) == ctx.eval(&EisensteinInt::OMEGA)?
        && supplement_one_minus_omega(ctx)? == ctx.eval(&EisensteinInt::ONE_MINUS_OMEGA)?)
}

fn split_prime(p: u64) -> Result<EisensteinInt> {
    match classify_prime(p)? {
        PrimeClassification::Split { pi, .. } => Ok(pi),
        _ => Err(Error::domain(format!("{p} is not a prime = 1 (mod 3)"))),
    }
}

/// The cubic character of `F_p` agreeing with `chi_pi` on rational integers,
/// for `pi` primary of prime norm `p`.
pub fn matched_cubic_character(pi: &EisensteinInt) -> Result<MultChar> {
    let ctx = CubicCharCtx::new(pi)?;
    let p = ctx.norm();
    if !is_prime(p) {
        return Err(Error::domain(format!("{pi} does not have prime norm")));
    }
    let g = integers::primitive_root(p)?;
    let m = ctx
        .eval(&EisensteinInt::from_int(g as i64))?
        .exponent()
        .ok_or_else(|| Error::Internal("generator is divisible by pi".into()))?;
    MultChar::with_exponent(p, m * (p - 1) / 3)
}

/// Outcome of the `J(chi, chi) = pi` check for one split prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiPiReport {
    pub p: u64,
    /// Primary prime above `p` from the splitting algorithm.
    pub pi: EisensteinInt,
    /// `J(chi, chi)` for the character matched to `chi_pi`.
    pub jacobi: EisensteinInt,
    pub is_primary: bool,
    pub norm_is_p: bool,
    /// `J(chi, chi) = pi` under the matched orientation.
    pub equals_pi: bool,
    /// `J` for the character `lambda^((p-1)/3)` lies in `{pi, conj(pi)}`.
    pub default_char_in_pair: bool,
}

impl JacobiPiReport {
    pub fn ok(&self) -> bool {
        self.is_primary && self.norm_is_p && self.equals_pi && self.default_char_in_pair
    }
}

pub fn jacobi_eq_pi_check(p: u64) -> Result<JacobiPiReport> {
    let pi = split_prime(p)?;
    let chi = matched_cubic_character(&pi)?;
    let jacobi: EisensteinInt = jacobi_in(&chi, &chi)?;
    let default = crate::characters::char_make(p, 3)?;
    let j_default: EisensteinInt = jacobi_in(&default, &default)?;
    Ok(JacobiPiReport {
        p,
        pi,
        jacobi,
        is_primary: jacobi.is_primary(),
        norm_is_p: jacobi.norm() == p as u128,
        equals_pi: jacobi == pi,
        default_char_in_pair: j_default == pi || j_default == pi.conj(),
    })
}

/// `g(chi)^3 = p * pi` in `Z[w][zeta_p]` for the character matched to `chi_pi`.
pub fn cubic_gauss_cube_check(p: u64) -> Result<bool> {
    if p > CYCLOTOMIC_GUARD {
        return Err(Error::resource(format!(
            "p = {p} exceeds the cyclotomic guard {CYCLOTOMIC_GUARD}"
        )));
    }
    let pi = split_prime(p)?;
    let chi = matched_cubic_character(&pi)?;
    let g = gauss_sum_in::<EisensteinInt>(&chi, 1)?;
    let j: EisensteinInt = jacobi_in(&chi, &chi)?;
    let p_elt = EisensteinInt::from_int(p as i64);
    let cube = g.pow(3);
    Ok(cube == CyclotomicElt::constant(p, p_elt * j)? && cube == CyclotomicElt::constant(p, p_elt * pi)?)
}

/// A cube root of `n` mod `q` for a prime `q = 2 (mod 3)`: `n^((2q-1)/3)`.
pub fn all_cubes_mod_q(q: u64, n: i64) -> Result<u64> {
    if !is_prime(q) || q % 3 != 2 {
        return Err(Error::domain(format!("{q} is not a prime = 2 (mod 3)")));
    }
    let r = n.rem_euclid(q as i64) as u64;
    if r == 0 {
        return Err(Error::domain(format!("{q} divides {n}")));
    }
    Ok(pow_mod_u64(r, (2 * q - 1) / 3, q))
}

/// Whether `p = C^2 + 27 D^2` has a solution; `rep` has the smallest `D`, then
/// the smallest `C >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCubic {
    pub solvable: bool,
    pub rep: Option<(u64, u64)>,
}

pub fn two_as_cubic_residue(p: u64) -> Result<TwoCubic> {
    if !is_prime(p) || p % 3 != 1 {
        return Err(Error::domain(format!("{p} is not a prime = 1 (mod 3)")));
    }
    let rep = (0..=isqrt(p / 27)).find_map(|d| {
        let rest = p - 27 * d * d;
        let c = isqrt(rest);
        (c * c == rest).then_some((c, d))
    });
    Ok(TwoCubic { solvable: rep.is_some(), rep })
}

/// `2` is a cube mod `pi` iff `pi = 1 (mod 2)`, i.e. `a` odd and `b` even.
pub fn pi_mod_two_criterion(pi: &EisensteinInt) -> Result<bool> {
    reciprocity_operand(pi, Operand::First)?;
    Ok(pi.a.rem_euclid(2) == 1 && pi.b.rem_euclid(2) == 0)
}

/// `1^k + 2^k + ... + (p-1)^k mod p`.
pub fn sum_powers_check(p: u64, k: u64) -> Result<u64> {
    if !is_prime(p) || k == 0 {
        return Err(Error::domain("sum_powers_check needs a prime p and k >= 1"));
    }
    Ok((1..p).fold(0, |acc, x| (acc + pow_mod_u64(x, k, p)) % p))
}

/// Primary primes with norm in `(3, max_norm]`: both primes above each
/// `p = 1 (mod 3)` and the inert `q` with `q^2 <= max_norm`, ordered by norm.
pub fn primary_primes_up_to(max_norm: u64) -> Result<Vec<EisensteinInt>> {
    let mut out = Vec::new();
    for p in integers::primes_up_to(max_norm) {
        match classify_prime(p)? {
            PrimeClassification::Split { pi, pi_conj } => out.extend([pi, pi_conj]),
            PrimeClassification::Inert { q } if q.checked_mul(q).is_some_and(|n| n <= max_norm) => {
                out.push(EisensteinInt::from_int(q as i64));
            }
            _ => {}
        }
    }
    out.sort_by_key(|z| (z.norm(), *z));
    Ok(out)
}
