//! Rational-integer utilities: the Möbius function and inversion, Euler's
//! totient, linear congruences, modular exponentiation, Legendre symbols and
//! modular square roots.
//!
//! Residues are always reported as least nonnegative representatives.
//! Intermediate products go through `u128`, so nothing here can wrap.

use crate::error::{Error, Result};

/// Least nonnegative residue of `a` modulo `m`.
pub fn rem(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if a <= u32::MAX as u64 && b <= u32::MAX as u64 {
        a * b % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: i128, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (g, x, _) = ext_gcd(rem(a, m) as i128, m as i128);
    (g == 1).then(|| rem(x, m))
}

/// `base^exp mod m`, least nonnegative.
///
/// Panics if `m == 0`.
pub fn mod_pow(base: i64, exp: u64, m: u64) -> u64 {
    assert!(m >= 1, "mod_pow: modulus must be positive");
    pow_mod_u64(rem(base as i128, m), exp, m)
}

pub(crate) fn pow_mod_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).map_or(true, |sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// All primes `<= n`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("mobius is undefined at 0"));
    }
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// `sum_{d | n} mu(d)`.
pub fn mobius_summatory(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::domain("mobius_summatory is undefined at 0"));
    }
    divisors(n).into_iter().map(mobius).sum()
}

/// Recovers `f(n)` from its divisor sum `F(n) = sum_{d | n} f(d)`:
/// returns `sum_{d | n} mu(d) F(n / d)`.
pub fn mobius_invert<F>(big_f: F, n: u64) -> Result<i128>
where
    F: Fn(u64) -> i128,
{
    if n == 0 {
        return Err(Error::domain("mobius_invert needs n >= 1"));
    }
    let mut acc: i128 = 0;
    for d in divisors(n) {
        let term = (mobius(d)? as i128)
            .checked_mul(big_f(n / d))
            .ok_or(Error::Overflow("mobius_invert"))?;
        acc = acc.checked_add(term).ok_or(Error::Overflow("mobius_invert"))?;
    }
    Ok(acc)
}

pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("totient needs n >= 1"));
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Multiplicative order of `a` modulo `m`, or `None` when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: i64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let a = rem(a as i128, m);
    if gcd(a, m) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let phi = totient(m).ok()?;
    let mut order = phi;
    for r in prime_divisors(phi) {
        while order % r == 0 && pow_mod_u64(a, order / r, m) == 1 {
            order /= r;
        }
    }
    Some(order)
}

/// Smallest generator of `(Z/pZ)*` for a prime `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(1);
    }
    let rs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| rs.iter().all(|&r| pow_mod_u64(g, (p - 1) / r, p) != 1))
        .ok_or_else(|| Error::Internal(format!("no primitive root mod {p}")))
}

/// Solution set of `a*x = b (mod m)`: when solvable it is exactly
/// `{base + j*step : 0 <= j < count}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceSolutionSet {
    pub solvable: bool,
    pub base: u64,
    pub step: u64,
    pub count: u64,
}

impl CongruenceSolutionSet {
    pub fn solutions(&self) -> impl Iterator<Item = u64> + '_ {
        let n = if self.solvable { self.count } else { 0 };
        (0..n).map(move |j| self.base + j * self.step)
    }
}

pub fn solve_linear_congruence(a: i64, b: i64, m: u64) -> Result<CongruenceSolutionSet> {
    if m == 0 {
        return Err(Error::domain("congruence modulus must be >= 1"));
    }
    let a_r = rem(a as i128, m);
    let b_r = rem(b as i128, m);
    let d = gcd(a_r, m);
    // gcd(0, m) = m: every x solves 0*x = 0.
    if b_r % d != 0 {
        return Ok(CongruenceSolutionSet {
            solvable: false,
            base: 0,
            step: 0,
            count: 0,
        });
    }
    let step = m / d;
    let inv = mod_inv((a_r / d) as i128, step).unwrap_or(0);
    let base = mul_mod((b_r / d) % step, inv, step);
    Ok(CongruenceSolutionSet {
        solvable: true,
        base,
        step,
        count: d,
    })
}

fn require_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not an odd prime")))
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    require_odd_prime(p)?;
    Ok(euler_criterion(rem(a as i128, p), p))
}

pub(crate) fn euler_criterion(a: u64, p: u64) -> i8 {
    match pow_mod_u64(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// `(t/p)` for every `t` in `0..p`, found by marking the squares.
pub fn legendre_table(p: u64) -> Result<Vec<i8>> {
    require_odd_prime(p)?;
    let mut table = vec![-1i8; p as usize];
    table[0] = 0;
    let mut sq = 0u64;
    for s in 1..=(p - 1) / 2 {
        // (s)^2 = (s-1)^2 + 2s - 1
        sq = (sq + 2 * s - 1) % p;
        table[sq as usize] = 1;
    }
    Ok(table)
}

fn sign_power(e: u64) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Outcome of one quadratic-reciprocity instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticReciprocity {
    pub p_over_q: i8,
    pub q_over_p: i8,
    pub law: bool,
    /// `(-1/r) = (-1)^((r-1)/2)` for both `r = p` and `r = q`.
    pub first_supplement: bool,
    /// `(2/r) = (-1)^((r^2-1)/8)` for both `r = p` and `r = q`.
    pub second_supplement: bool,
}

impl QuadraticReciprocity {
    pub fn all_hold(&self) -> bool {
        self.law && self.first_supplement && self.second_supplement
    }
}

pub fn quadratic_reciprocity(p: u64, q: u64) -> Result<QuadraticReciprocity> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return Err(Error::domain("quadratic reciprocity needs distinct primes"));
    }
    let p_over_q = legendre(p as i64, q)?;
    let q_over_p = legendre(q as i64, p)?;
    let law = p_over_q * q_over_p == sign_power(((p - 1) / 2) * ((q - 1) / 2));
    let minus_one = |r: u64| legendre(-1, r).map(|s| s == sign_power((r - 1) / 2));
    let two = |r: u64| {
        let e = ((r as u128 * r as u128 - 1) / 8) as u64;
        legendre(2, r).map(|s| s == sign_power(e))
    };
    Ok(QuadraticReciprocity {
        p_over_q,
        q_over_p,
        law,
        first_supplement: minus_one(p)? && minus_one(q)?,
        second_supplement: two(p)? && two(q)?,
    })
}

/// Checks `(p/q)(q/p) = (-1)^((p-1)/2 * (q-1)/2)`, and also both supplements
/// for `p` and `q` when `with_supplements` is set.
pub fn check_quadratic_reciprocity(p: u64, q: u64, with_supplements: bool) -> Result<bool> {
    let r = quadratic_reciprocity(p, q)?;
    Ok(if with_supplements { r.all_hold() } else { r.law })
}

/// Square root of `a` modulo an odd prime `p` by Tonelli-Shanks.
///
/// Returns the smaller of the two roots, or `None` for a non-residue. The
/// auxiliary non-residue is the least one, so results are reproducible.
pub fn sqrt_mod(a: i64, p: u64) -> Result<Option<u64>> {
    require_odd_prime(p)?;
    let a = rem(a as i128, p);
    if a == 0 {
        return Ok(Some(0));
    }
    if euler_criterion(a, p) != 1 {
        return Ok(None);
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| euler_criterion(z, p) == -1)
        .ok_or_else(|| Error::Internal(format!("no non-residue mod {p}")))?;
    let mut m = s;
    let mut c = pow_mod_u64(z, q, p);
    let mut t = pow_mod_u64(a, q, p);
    let mut r = pow_mod_u64(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 1;
        let mut t2 = mul_mod(t, t, p);
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod_u64(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(Some(r.min(p - r)))
}
