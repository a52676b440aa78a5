//! Multiplicative characters of `F_p^*`, Gauss sums and Jacobi sums.
//!
//! With `g` the smallest primitive root mod `p` and `lambda(g) = zeta_(p-1)`,
//! every character is `lambda^e`, stored as the exponent `e` together with a
//! shared discrete-log table. Exact sums are formed in `R[zeta_p]` with `R`
//! the smallest of `Z`, `Z[w]`, `Z[i]` holding the character values, so only
//! orders 1, 2, 3, 4 and 6 have exact Gauss and Jacobi sums.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::cyclotomic::{reduce_root, BaseRing, CyclotomicElt};
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::integers::{divisors, gcd, is_odd_prime, lcm, mul_mod, primitive_root};

/// Tolerance of the floating-point cross-check.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// The symbolic root of unity `zeta_k^j`.
#[derive(Debug, Clone, Copy)]
pub struct RootOfUnity {
    order: u64,
    index: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, index: u64) -> Self {
        assert!(order > 0, "root of unity of order 0");
        Self { order, index: index % order }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// `(k, j)` with `gcd(j, k) = 1`; `k` is the exact order.
    pub fn reduced(&self) -> (u64, u64) {
        reduce_root(self.order, self.index)
    }

    pub fn is_one(&self) -> bool {
        self.index == 0
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = lcm(self.order, o.order);
        Self::new(n, self.index * (n / self.order) + o.index * (n / o.order))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.order, self.order - self.index)
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(self.order, mul_mod(self.index, e % self.order, self.order))
    }

    pub fn embed<R: BaseRing>(&self) -> Result<R> {
        R::root_of_unity(self.order, self.index).ok_or_else(|| {
            Error::domain(format!(
                "a root of unity of order {} does not lie in {}",
                self.reduced().0,
                R::NAME
            ))
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(1.0, TAU * self.index as f64 / self.order as f64)
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, o: &Self) -> bool {
        self.reduced() == o.reduced()
    }
}

impl Eq for RootOfUnity {}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            (1, _) => f.write_str("1"),
            (k, j) => write!(f, "zeta_{k}^{j}"),
        }
    }
}

/// `chi(t)`: zero or a root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Zero,
    Root(RootOfUnity),
}

impl CharValue {
    pub fn embed<R: BaseRing>(&self) -> Result<R> {
        match self {
            CharValue::Zero => Ok(R::ring_zero()),
            CharValue::Root(z) => z.embed(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root(z) => z.to_complex(),
        }
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharValue::Zero => f.write_str("0"),
            CharValue::Root(z) => z.fmt(f),
        }
    }
}

/// `dlog[t] = l` with `g^l = t (mod p)`, for `1 <= t < p`.
#[derive(Debug, PartialEq, Eq)]
struct DlogTable {
    p: u64,
    g: u64,
    dlog: Vec<u64>,
}

impl DlogTable {
    fn new(p: u64) -> Result<Arc<Self>> {
        if !is_odd_prime(p) {
            return Err(Error::domain(format!("{p} is not an odd prime")));
        }
        let g = primitive_root(p)?;
        let mut dlog = vec![0u64; p as usize];
        let mut x = 1u64;
        for l in 0..p - 1 {
            dlog[x as usize] = l;
            x = mul_mod(x, g, p);
        }
        Ok(Arc::new(Self { p, g, dlog }))
    }
}

/// The character `lambda^e` of `F_p^*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultChar {
    table: Arc<DlogTable>,
    e: u64,
}

impl MultChar {
    /// `lambda^e` for any exponent `e`.
    pub fn with_exponent(p: u64, e: u64) -> Result<Self> {
        let table = DlogTable::new(p)?;
        Ok(Self { e: e % (p - 1), table })
    }

    pub fn p(&self) -> u64 {
        self.table.p
    }

    /// The fixed generator of `F_p^*`.
    pub fn generator(&self) -> u64 {
        self.table.g
    }

    pub fn exponent(&self) -> u64 {
        self.e
    }

    pub fn order(&self) -> u64 {
        let n = self.p() - 1;
        n / gcd(self.e, n)
    }

    pub fn is_trivial(&self) -> bool {
        self.e == 0
    }

    /// `chi(t)`, with `chi(0) = 0` unless `chi` is trivial (`epsilon(0) = 1`).
    pub fn eval(&self, t: i64) -> CharValue {
        let p = self.p();
        let t = t.rem_euclid(p as i64) as u64;
        if t == 0 {
            return if self.is_trivial() {
                CharValue::Root(RootOfUnity::one())
            } else {
                CharValue::Zero
            };
        }
        let n = p - 1;
        let l = self.table.dlog[t as usize];
        CharValue::Root(RootOfUnity::new(n, mul_mod(l, self.e, n)))
    }

    pub fn value_in<R: BaseRing>(&self, t: i64) -> Result<R> {
        self.eval(t).embed()
    }

    fn same_modulus(&self, o: &Self) -> Result<()> {
        if self.p() == o.p() {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "characters mod {} and mod {}",
                self.p(),
                o.p()
            )))
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_modulus(o)?;
        Ok(Self { table: Arc::clone(&self.table), e: (self.e + o.e) % (self.p() - 1) })
    }

    /// `chi^(-1)`, which equals the conjugate character.
    pub fn inverse(&self) -> Self {
        let n = self.p() - 1;
        Self { table: Arc::clone(&self.table), e: (n - self.e) % n }
    }

    pub fn pow(&self, k: u64) -> Self {
        let n = self.p() - 1;
        Self { table: Arc::clone(&self.table), e: mul_mod(self.e, k % n, n) }
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda^{} mod {} (order {})", self.e, self.p(), self.order())
    }
}

/// The character of exact order `k`, `lambda^((p-1)/k)`; `k = 1` gives epsilon.
pub fn char_make(p: u64, k: u64) -> Result<MultChar> {
    if !is_odd_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    if k == 0 || (p - 1) % k != 0 {
        return Err(Error::domain(format!("{k} does not divide {}", p - 1)));
    }
    MultChar::with_exponent(p, (p - 1) / k)
}

pub fn char_eval(chi: &MultChar, t: i64) -> CharValue {
    chi.eval(t)
}

/// All `p - 1` characters, by exponent.
pub fn all_characters(p: u64) -> Result<Vec<MultChar>> {
    let table = DlogTable::new(p)?;
    Ok((0..p - 1)
        .map(|e| MultChar { table: Arc::clone(&table), e })
        .collect())
}

/// Characters whose order is 1, 2, 3, 4 or 6.
pub fn supported_characters(p: u64) -> Result<Vec<MultChar>> {
    Ok(all_characters(p)?
        .into_iter()
        .filter(|c| ring_for_order(c.order()).is_ok())
        .collect())
}

/// Coefficients of the `n`-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Exact quotient by a monic integer polynomial.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut r = num.to_vec();
    let mut q = vec![0i64; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            r[k + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0), "division was not exact");
    q
}

/// `sum_j counts[j] * zeta_n^j` as an integer, computed by reducing modulo
/// `Phi_n`; an error if the sum is not rational.
pub fn exact_root_sum(n: u64, counts: &[i64]) -> Result<i64> {
    let phi = cyclotomic_polynomial(n);
    let dd = phi.len() - 1;
    let mut r = counts.to_vec();
    for k in (dd..r.len()).rev() {
        let c = r[k];
        if c != 0 {
            for (j, &d) in phi.iter().enumerate() {
                r[k - dd + j] -= c * d;
            }
        }
    }
    r.truncate(dd.max(1));
    if r[1..].iter().any(|&c| c != 0) {
        return Err(Error::Internal(format!("root sum mod Phi_{n} is not rational")));
    }
    Ok(r[0])
}

/// `sum_{t in F_p} chi(t)`: `p` for epsilon, otherwise `0`.
pub fn char_sum_over_field(chi: &MultChar) -> Result<i64> {
    let n = chi.order();
    let mut counts = vec![0i64; n as usize];
    for t in 0..chi.p() as i64 {
        if let CharValue::Root(z) = chi.eval(t) {
            let (k, j) = z.reduced();
            counts[(j * (n / k)) as usize] += 1;
        }
    }
    exact_root_sum(n, &counts)
}

/// `sum_chi chi(a)` over all characters: `p - 1` if `a = 1`, else `0`.
pub fn sum_over_characters(p: u64, a: i64) -> Result<i64> {
    let n = p - 1;
    let mut counts = vec![0i64; n as usize];
    for chi in all_characters(p)? {
        if let CharValue::Root(z) = chi.eval(a) {
            let (k, j) = z.reduced();
            counts[(j * (n / k)) as usize] += 1;
        }
    }
    exact_root_sum(n, &counts)
}

/// Which exact coefficient ring holds roots of unity of a given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    Int,
    Eisenstein,
    Gaussian,
}

pub fn ring_for_order(order: u64) -> Result<Ring> {
    match order {
        1 | 2 => Ok(Ring::Int),
        3 | 6 => Ok(Ring::Eisenstein),
        4 => Ok(Ring::Gaussian),
        k => Err(Error::domain(format!(
            "character order {k} has no exact representation (supported: 1, 2, 3, 4, 6)"
        ))),
    }
}

macro_rules! in_ring {
    ($order:expr, $f:ident ( $($arg:expr),* )) => {
        match ring_for_order($order)? {
            Ring::Int => $f::<i64>($($arg),*),
            Ring::Eisenstein => $f::<EisensteinInt>($($arg),*),
            Ring::Gaussian => $f::<GaussianInt>($($arg),*),
        }
    };
}

/// An exact element of `Z`, `Z[w]` or `Z[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingValue {
    Int(i64),
    Eisenstein(EisensteinInt),
    Gaussian(GaussianInt),
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(n) => n.fmt(f),
            RingValue::Eisenstein(z) => z.fmt(f),
            RingValue::Gaussian(z) => z.fmt(f),
        }
    }
}

/// An exact Gauss sum in the ring chosen by the character order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaussSum {
    Int(CyclotomicElt<i64>),
    Eisenstein(CyclotomicElt<EisensteinInt>),
    Gaussian(CyclotomicElt<GaussianInt>),
}

impl GaussSum {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            GaussSum::Int(z) => z.to_complex(),
            GaussSum::Eisenstein(z) => z.to_complex(),
            GaussSum::Gaussian(z) => z.to_complex(),
        }
    }
}

impl fmt::Display for GaussSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaussSum::Int(z) => z.fmt(f),
            GaussSum::Eisenstein(z) => z.fmt(f),
            GaussSum::Gaussian(z) => z.fmt(f),
        }
    }
}

/// `g_a(chi) = sum_t chi(t) zeta_p^(a t)` over `R`.
pub fn gauss_sum_in<R: BaseRing>(chi: &MultChar, a: i64) -> Result<CyclotomicElt<R>> {
    let p = chi.p();
    let a = a.rem_euclid(p as i64) as u64;
    let mut full = vec![R::ring_zero(); p as usize];
    for t in 0..p {
        let v: R = chi.value_in(t as i64)?;
        let k = (mul_mod(a, t, p)) as usize;
        full[k] = full[k].ring_add(&v);
    }
    Ok(CyclotomicElt::from_full(p, full))
}

pub fn gauss_sum(chi: &MultChar, a: i64) -> Result<GaussSum> {
    Ok(match ring_for_order(chi.order())? {
        Ring::Int => GaussSum::Int(gauss_sum_in(chi, a)?),
        Ring::Eisenstein => GaussSum::Eisenstein(gauss_sum_in(chi, a)?),
        Ring::Gaussian => GaussSum::Gaussian(gauss_sum_in(chi, a)?),
    })
}

/// `J(chi, lam) = sum_{a + b = 1} chi(a) lam(b)` over `R`.
pub fn jacobi_in<R: BaseRing>(chi: &MultChar, lam: &MultChar) -> Result<R> {
    chi.same_modulus(lam)?;
    let p = chi.p() as i64;
    let mut acc = R::ring_zero();
    for a in 0..p {
        let x: R = chi.value_in(a)?;
        if x.ring_is_zero() {
            continue;
        }
        let y: R = lam.value_in(1 - a)?;
        acc = acc.ring_add(&x.ring_mul(&y));
    }
    Ok(acc)
}

fn joint_order(chars: &[&MultChar]) -> u64 {
    chars.iter().fold(1, |acc, c| lcm(acc, c.order()))
}

pub fn jacobi_sum(chi: &MultChar, lam: &MultChar) -> Result<RingValue> {
    chi.same_modulus(lam)?;
    Ok(match ring_for_order(joint_order(&[chi, lam]))? {
        Ring::Int => RingValue::Int(jacobi_in(chi, lam)?),
        Ring::Eisenstein => RingValue::Eisenstein(jacobi_in(chi, lam)?),
        Ring::Gaussian => RingValue::Gaussian(jacobi_in(chi, lam)?),
    })
}

fn nontrivial(chi: &MultChar) -> Result<()> {
    if chi.is_trivial() {
        Err(Error::domain("the identity needs a nontrivial character"))
    } else {
        Ok(())
    }
}

fn magnitude_in<R: BaseRing>(chi: &MultChar) -> Result<bool> {
    let g = gauss_sum_in::<R>(chi, 1)?;
    Ok(g.mul(&g.conj())?.as_constant() == Some(R::ring_from_int(chi.p() as i64)))
}

/// `g(chi) * conj(g(chi)) = p`.
pub fn gauss_magnitude_check(chi: &MultChar) -> Result<bool> {
    nontrivial(chi)?;
    in_ring!(chi.order(), magnitude_in(chi))
}

fn conj_product_in<R: BaseRing>(chi: &MultChar) -> Result<bool> {
    let lhs = gauss_sum_in::<R>(chi, 1)?.mul(&gauss_sum_in::<R>(&chi.inverse(), 1)?)?;
    let rhs = chi.value_in::<R>(-1)?.ring_mul(&R::ring_from_int(chi.p() as i64));
    Ok(lhs.as_constant() == Some(rhs))
}

/// `g(chi) * g(conj chi) = chi(-1) * p`.
pub fn gauss_conj_product_check(chi: &MultChar) -> Result<bool> {
    nontrivial(chi)?;
    in_ring!(chi.order(), conj_product_in(chi))
}

fn jacobi_table_in<R: BaseRing>(chi: &MultChar) -> Result<bool> {
    let eps = chi.pow(0);
    let p = R::ring_from_int(chi.p() as i64);
    let minus_chi_m1 = chi.value_in::<R>(-1)?.ring_neg();
    Ok(jacobi_in::<R>(&eps, &eps)? == p
        && jacobi_in::<R>(&eps, chi)?.ring_is_zero()
        && jacobi_in::<R>(chi, &eps)?.ring_is_zero()
        && jacobi_in::<R>(chi, &chi.inverse())? == minus_chi_m1)
}

/// `J(e, e) = p`, `J(e, chi) = J(chi, e) = 0`, `J(chi, chi^-1) = -chi(-1)`.
pub fn jacobi_table_check(chi: &MultChar) -> Result<bool> {
    nontrivial(chi)?;
    in_ring!(chi.order(), jacobi_table_in(chi))
}

fn relation_in<R: BaseRing>(chi: &MultChar, lam: &MultChar) -> Result<bool> {
    let lhs = gauss_sum_in::<R>(chi, 1)?.mul(&gauss_sum_in::<R>(lam, 1)?)?;
    let rhs = gauss_sum_in::<R>(&chi.mul(lam)?, 1)?.scalar(&jacobi_in::<R>(chi, lam)?);
    Ok(lhs == rhs)
}

/// `g(chi) g(lam) = J(chi, lam) g(chi lam)` for `chi`, `lam`, `chi lam` nontrivial.
pub fn gauss_jacobi_relation_check(chi: &MultChar, lam: &MultChar) -> Result<bool> {
    chi.same_modulus(lam)?;
    nontrivial(chi)?;
    nontrivial(lam)?;
    let prod = chi.mul(lam)?;
    if prod.is_trivial() {
        return Err(Error::domain("the product character is trivial"));
    }
    in_ring!(joint_order(&[chi, lam]), relation_in(chi, lam))
}

fn power_formula_in<R: BaseRing>(chi: &MultChar) -> Result<bool> {
    let n = chi.order();
    let g = gauss_sum_in::<R>(chi, 1)?;
    let mut rhs = chi.value_in::<R>(-1)?.ring_mul(&R::ring_from_int(chi.p() as i64));
    for j in 1..=n - 2 {
        rhs = rhs.ring_mul(&jacobi_in::<R>(chi, &chi.pow(j))?);
    }
    Ok(g.pow(n as u32).as_constant() == Some(rhs))
}

/// `g(chi)^n = chi(-1) p J(chi, chi) J(chi, chi^2) ... J(chi, chi^(n-2))` for
/// `chi` of order `n` in `{3, 4, 6}`.
pub fn gauss_power_formula_check(chi: &MultChar) -> Result<bool> {
    if chi.order() <= 2 {
        return Err(Error::domain("the power formula needs order n > 2"));
    }
    in_ring!(chi.order(), power_formula_in(chi))
}

fn twist_in<R: BaseRing>(chi: &MultChar, a: i64) -> Result<bool> {
    let lhs = gauss_sum_in::<R>(chi, a)?;
    let rhs = gauss_sum_in::<R>(chi, 1)?.scalar(&chi.value_in::<R>(a)?.ring_conj());
    Ok(lhs == rhs)
}

/// `g_a(chi) = conj(chi(a)) g_1(chi)` for `a != 0`, `chi` nontrivial.
pub fn gauss_twist_check(chi: &MultChar, a: i64) -> Result<bool> {
    nontrivial(chi)?;
    if a.rem_euclid(chi.p() as i64) == 0 {
        return Err(Error::domain("the twist identity needs a != 0 mod p"));
    }
    in_ring!(chi.order(), twist_in(chi, a))
}

/// `sum_{t in F_p} zeta_p^(a t)`.
pub fn zeta_sum(p: u64, a: i64) -> Result<CyclotomicElt<i64>> {
    let mut acc = CyclotomicElt::<i64>::zero(p)?;
    for t in 0..p as i64 {
        acc = acc.add(&CyclotomicElt::zeta(p, (a * t).rem_euclid(p as i64) as u64)?)?;
    }
    Ok(acc)
}

/// `sum_t zeta^(t(x - y)) = p * delta(x, y)`.
pub fn kronecker_delta_check(p: u64, x: i64, y: i64) -> Result<bool> {
    let delta = i64::from((x - y).rem_euclid(p as i64) == 0);
    Ok(zeta_sum(p, x - y)?.as_constant() == Some(p as i64 * delta))
}

/// Floating-point Gauss sum straight from the definition.
pub fn gauss_sum_complex(chi: &MultChar, a: i64) -> Complex64 {
    let p = chi.p() as i64;
    (0..p)
        .map(|t| {
            chi.eval(t).to_complex()
                * Complex64::from_polar(1.0, TAU * (a * t).rem_euclid(p) as f64 / p as f64)
        })
        .sum()
}

/// Compares the exact Gauss sum with the floating-point one within
/// [`FLOAT_TOLERANCE`].
pub fn gauss_sum_float_check(chi: &MultChar, a: i64) -> Result<bool> {
    let exact = gauss_sum(chi, a)?.to_complex();
    Ok((exact - gauss_sum_complex(chi, a)).norm() < FLOAT_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integers::{legendre, primes_up_to};

    fn odd_primes(limit: u64) -> Vec<u64> {
        primes_up_to(limit).into_iter().filter(|&p| p > 2).collect()
    }

    #[test]
    fn quadratic_character_is_legendre() {
        for p in odd_primes(200) {
            let chi = char_make(p, 2).unwrap();
            for a in 0..p as i64 {
                let v: i64 = chi.value_in(a).unwrap();
                assert_eq!(v, legendre(a, p).unwrap() as i64, "({a}/{p})");
            }
        }
        let chi = char_make(7, 2).unwrap();
        assert_eq!(chi.value_in::<i64>(3).unwrap(), -1);
    }

    #[test]
    fn char_make_examples() {
        let eps = char_make(7, 1).unwrap();
        assert!(eps.is_trivial());
        assert!((0..7).all(|t| eps.eval(t) == CharValue::Root(RootOfUnity::one())));
        let cubic = char_make(7, 3).unwrap();
        let CharValue::Root(z) = cubic.eval(cubic.generator() as i64) else { panic!() };
        assert!(!z.is_one() && z.pow(3).is_one());
        assert_eq!(cubic.generator(), 3);
        assert!(char_make(7, 4).is_err());
        assert!(char_make(9, 2).is_err());
        assert_eq!(cubic.eval(0), CharValue::Zero);
        assert_eq!(cubic.eval(1), CharValue::Root(RootOfUnity::one()));
    }

    #[test]
    fn characters_are_multiplicative_with_exact_order() {
        for p in odd_primes(100) {
            for k in [1u64, 2, 3, 4, 6].into_iter().filter(|k| (p - 1) % k == 0) {
                let chi = char_make(p, k).unwrap();
                assert_eq!(chi.order(), k);
                let values: Vec<CharValue> = (0..p as i64).map(|t| chi.eval(t)).collect();
                let mut orders = std::collections::BTreeSet::new();
                for a in 1..p {
                    let CharValue::Root(x) = values[a as usize] else { panic!() };
                    orders.insert(x.reduced().0);
                    assert_eq!(x.conj(), match chi.eval(crate::integers::mod_inv(a as i128, p).unwrap() as i64) {
                        CharValue::Root(y) => y,
                        CharValue::Zero => panic!(),
                    });
                    for b in 1..p {
                        let CharValue::Root(y) = values[b as usize] else { panic!() };
                        assert_eq!(values[(a * b % p) as usize], CharValue::Root(x.mul(&y)));
                    }
                }
                assert_eq!(*orders.iter().max().unwrap(), k);
            }
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).iter().filter(|&&c| c == -2).count(), 2);
    }

    #[test]
    fn orthogonality_sums() {
        assert_eq!(char_sum_over_field(&char_make(7, 1).unwrap()).unwrap(), 7);
        assert_eq!(char_sum_over_field(&char_make(7, 2).unwrap()).unwrap(), 0);
        assert_eq!(char_sum_over_field(&char_make(7, 3).unwrap()).unwrap(), 0);
        assert_eq!(sum_over_characters(7, 3).unwrap(), 0);
        assert_eq!(sum_over_characters(7, 1).unwrap(), 6);
        assert_eq!(sum_over_characters(5, 2).unwrap(), 0);
        for p in odd_primes(60) {
            for chi in all_characters(p).unwrap() {
                let expected = if chi.is_trivial() { p as i64 } else { 0 };
                assert_eq!(char_sum_over_field(&chi).unwrap(), expected);
            }
            for a in 1..p as i64 {
                let expected = if a == 1 { p as i64 - 1 } else { 0 };
                assert_eq!(sum_over_characters(p, a).unwrap(), expected);
            }
        }
    }

    #[test]
    fn gauss_sum_examples() {
        let eps = char_make(7, 1).unwrap();
        assert_eq!(gauss_sum(&eps, 3).unwrap(), GaussSum::Int(CyclotomicElt::zero(7).unwrap()));
        assert_eq!(
            gauss_sum(&eps, 0).unwrap(),
            GaussSum::Int(CyclotomicElt::constant(7, 7).unwrap())
        );
        let chi = char_make(5, 2).unwrap();
        let g = gauss_sum_in::<i64>(&chi, 1).unwrap();
        assert_eq!(g.mul(&g).unwrap().as_constant(), Some(5));
        let chi = char_make(7, 2).unwrap();
        let g = gauss_sum_in::<i64>(&chi, 1).unwrap();
        assert_eq!(g.mul(&g).unwrap().as_constant(), Some(-7));
        assert!(gauss_sum(&char_make(11, 5).unwrap(), 1).is_err());
    }

    #[test]
    fn identity_examples() {
        assert!(gauss_magnitude_check(&char_make(7, 2).unwrap()).unwrap());
        assert!(gauss_magnitude_check(&char_make(7, 3).unwrap()).unwrap());
        assert!(gauss_magnitude_check(&char_make(13, 4).unwrap()).unwrap());
        assert!(gauss_magnitude_check(&char_make(7, 1).unwrap()).is_err());

        let (quad, cubic) = (char_make(7, 2).unwrap(), char_make(7, 3).unwrap());
        assert!(gauss_jacobi_relation_check(&cubic, &cubic).unwrap());
        assert!(gauss_jacobi_relation_check(&quad, &cubic).unwrap());
        let q5 = char_make(5, 2).unwrap();
        assert!(gauss_jacobi_relation_check(&q5, &q5).is_err());

        assert!(gauss_power_formula_check(&cubic).unwrap());
        assert!(gauss_power_formula_check(&char_make(13, 4).unwrap()).unwrap());
        assert!(gauss_power_formula_check(&char_make(7, 6).unwrap()).unwrap());
        assert!(gauss_power_formula_check(&quad).is_err());
    }

    #[test]
    fn jacobi_examples() {
        let eps = char_make(7, 1).unwrap();
        let cubic = char_make(7, 3).unwrap();
        assert_eq!(jacobi_sum(&eps, &eps).unwrap(), RingValue::Int(7));
        assert_eq!(jacobi_sum(&eps, &cubic).unwrap(), RingValue::Eisenstein(EisensteinInt::ZERO));
        assert_eq!(
            jacobi_sum(&cubic, &cubic.inverse()).unwrap(),
            RingValue::Eisenstein(EisensteinInt::from_int(-1))
        );
        let quartic = char_make(13, 4).unwrap();
        // chi(-1) = -1 for a quartic character mod 13 since 13 = 5 (mod 8)
        assert_eq!(
            jacobi_sum(&quartic, &quartic.inverse()).unwrap(),
            RingValue::Gaussian(GaussianInt::from_int(1))
        );
        let RingValue::Eisenstein(j) = jacobi_sum(&cubic, &cubic).unwrap() else { panic!() };
        assert_eq!(j.norm(), 7);
        assert!(j.is_primary());
    }

    #[test]
    fn identity_sweep_small_primes() {
        for p in odd_primes(50) {
            let chars = supported_characters(p).unwrap();
            for chi in chars.iter().filter(|c| !c.is_trivial()) {
                assert!(gauss_magnitude_check(chi).unwrap(), "{chi}");
                assert!(gauss_conj_product_check(chi).unwrap(), "{chi}");
                assert!(jacobi_table_check(chi).unwrap(), "{chi}");
                for a in 1..p as i64 {
                    assert!(gauss_twist_check(chi, a).unwrap(), "{chi} a={a}");
                }
                if chi.order() > 2 {
                    assert!(gauss_power_formula_check(chi).unwrap(), "{chi}");
                }
                assert!(gauss_sum_float_check(chi, 1).unwrap());
            }
            for a in -(p as i64)..2 * p as i64 {
                assert!(kronecker_delta_check(p, a, 0).unwrap());
            }
        }
    }

    #[test]
    fn float_oracle_handles_any_order() {
        let chi = char_make(11, 5).unwrap();
        let g = gauss_sum_complex(&chi, 1);
        assert!((g.norm_sqr() - 11.0).abs() < 1e-9);
    }
}
