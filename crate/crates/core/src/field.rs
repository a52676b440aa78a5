//! Finite fields `F_p` and `F_{p^n} = F_p[x]/(f)`.
//!
//! Irreducibility is decided with the divisibility criterion
//! `f | x^(p^d) - x` plus `gcd(f, x^(p^e) - x) = 1` for the maximal proper
//! divisors `e` of `d = deg f`. Extension fields use the lexicographically
//! smallest monic irreducible of the requested degree, so element
//! representations are reproducible.
//!
//! Anything that walks every element or every candidate polynomial is bounded
//! by [`ENUMERATION_GUARD`] and fails with [`Error::Resource`] past it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::integers::{
    self, gcd, is_odd_prime, is_prime, legendre, legendre_table, mul_mod, multiplicative_order,
    pow_mod_u64, prime_divisors, solve_linear_congruence,
};
use crate::poly::PolyFp;

/// Upper bound on enumerated candidates (`p^n` polynomial tuples or field
/// elements).
pub const ENUMERATION_GUARD: u64 = 1_000_000;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

fn checked_power(p: u64, n: u32) -> Result<u128> {
    (p as u128).checked_pow(n).ok_or(Error::Overflow("p^n"))
}

fn guarded_power(p: u64, n: u32, guard: u64) -> Result<u64> {
    match checked_power(p, n) {
        Ok(v) if v <= guard as u128 => Ok(v as u64),
        _ => Err(Error::resource(format!(
            "{p}^{n} exceeds the enumeration guard {guard}"
        ))),
    }
}

/// `x^(p^k) mod f` for `k = 0..=d`, by repeated `p`-th powering.
fn frobenius_orbit_of_x(f: &PolyFp, d: usize) -> Result<Vec<PolyFp>> {
    let p = f.modulus();
    let mut orbit = Vec::with_capacity(d + 1);
    orbit.push(PolyFp::x(p).rem(f)?);
    for k in 0..d {
        let next = orbit[k].pow_mod(p as u128, f)?;
        orbit.push(next);
    }
    Ok(orbit)
}

pub fn is_irreducible(f: &PolyFp) -> Result<bool> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::domain("irreducibility of a constant polynomial")),
    };
    let f = f.make_monic();
    let orbit = frobenius_orbit_of_x(&f, d)?;
    let x = &orbit[0];
    if orbit[d] != *x {
        return Ok(false);
    }
    for r in prime_divisors(d as u64) {
        let e = d / r as usize;
        let g = f.gcd(&orbit[e].sub(x)?)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of monic irreducibles of degree `n` over `F_p`, from
/// `n * N_n = sum_{d | n} mu(n/d) p^d`.
pub fn count_irreducibles(p: u64, n: u32) -> Result<u128> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::domain("degree must be >= 1"));
    }
    let overflow = std::cell::Cell::new(false);
    let total = integers::mobius_invert(
        |d| match (p as i128).checked_pow(d as u32) {
            Some(v) => v,
            None => {
                overflow.set(true);
                0
            }
        },
        n as u64,
    )?;
    if overflow.get() {
        return Err(Error::Overflow("count_irreducibles"));
    }
    if total % n as i128 != 0 || total <= 0 {
        return Err(Error::Internal(format!(
            "irreducible count for p={p}, n={n} is not a positive integer"
        )));
    }
    Ok((total / n as i128) as u128)
}

pub fn enumerate_irreducibles(p: u64, n: u32) -> Result<Vec<PolyFp>> {
    enumerate_irreducibles_with_guard(p, n, ENUMERATION_GUARD)
}

/// All monic irreducibles of degree `n`, in lexicographic order of the
/// coefficient tuple read from `x^(n-1)` down to the constant term.
pub fn enumerate_irreducibles_with_guard(p: u64, n: u32, guard: u64) -> Result<Vec<PolyFp>> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::domain("degree must be >= 1"));
    }
    let candidates = guarded_power(p, n, guard)?;
    // sieve: a reducible monic of degree n has a monic irreducible factor of
    // degree k <= n/2; mark every such product by its index
    let n = n as usize;
    let mut reducible = vec![false; candidates as usize];
    let mut prod = vec![0u64; n + 1];
    for k in 1..=n / 2 {
        let rest = n - k;
        let cofactors = guarded_power(p, rest as u32, guard)?;
        for f in enumerate_irreducibles_with_guard(p, k as u32, guard)? {
            let fc = f.coeffs();
            for gi in 0..cofactors {
                let g = PolyFp::monic_from_index(p, rest, gi);
                prod.fill(0);
                for (i, &a) in fc.iter().enumerate() {
                    for (j, &b) in g.coeffs().iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let index = prod[..n].iter().rev().fold(0u64, |acc, &c| acc * p + c);
                reducible[index as usize] = true;
            }
        }
    }
    Ok((0..candidates)
        .filter(|&i| !reducible[i as usize])
        .map(|i| PolyFp::monic_from_index(p, n, i))
        .collect())
}

/// Checks that `x^(p^n) - x` is the product of every monic irreducible whose
/// degree divides `n`.
pub fn verify_xq_factorization(p: u64, n: u32) -> Result<bool> {
    require_prime(p)?;
    guarded_power(p, n, ENUMERATION_GUARD)?;
    let mut product = PolyFp::one(p);
    for d in integers::divisors(n as u64) {
        for f in enumerate_irreducibles(p, d as u32)? {
            product = product.mul(&f)?;
        }
    }
    Ok(product == PolyFp::frobenius_minus_x(p, n)?)
}

/// Minimal field interface shared by prime fields and extension fields.
pub trait FieldArith {
    type Elt: Clone + PartialEq + fmt::Debug;

    fn characteristic(&self) -> u64;
    fn order(&self) -> u128;
    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn from_int(&self, n: i64) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    /// Some generator of the multiplicative group.
    fn generator(&self) -> Result<Self::Elt>;

    /// `sum_t signs[t] * base^t` with every sign in `{-1, 0, 1}`.
    fn signed_power_sum(&self, base: &Self::Elt, signs: &[i8]) -> Self::Elt {
        let mut acc = self.zero();
        let mut power = self.one();
        for &s in signs {
            match s {
                1 => acc = self.add(&acc, &power),
                -1 => acc = self.sub(&acc, &power),
                _ => {}
            }
            power = self.mul(&power, base);
        }
        acc
    }

    fn pow(&self, a: &Self::Elt, mut e: u128) -> Self::Elt {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// `Z/qZ` with plain `u64` residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        require_prime(q)?;
        Ok(Self { q })
    }
}

impl FieldArith for PrimeField {
    type Elt = u64;

    fn characteristic(&self) -> u64 {
        self.q
    }
    fn order(&self) -> u128 {
        self.q as u128
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.q
    }
    fn from_int(&self, n: i64) -> u64 {
        integers::rem(n as i128, self.q)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.q { s - self.q } else { s }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b { a - b } else { a + self.q - b }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.q)
    }
    fn generator(&self) -> Result<u64> {
        integers::primitive_root(self.q)
    }
    fn signed_power_sum(&self, base: &u64, signs: &[i8]) -> u64 {
        let q = self.q;
        if q > u32::MAX as u64 || signs.len() as u64 > u32::MAX as u64 {
            let mut acc = 0;
            let mut power = 1 % q;
            for &s in signs {
                match s {
                    1 => acc = self.add(&acc, &power),
                    -1 => acc = self.sub(&acc, &power),
                    _ => {}
                }
                power = mul_mod(power, *base, q);
            }
            return acc;
        }
        // two interleaved chains stepping by base^2; sums stay below 2^64
        let step = base * base % q;
        let (mut even, mut odd) = (1 % q, *base % q);
        let (mut pos, mut neg) = (0u64, 0u64);
        let mut pairs = signs.chunks_exact(2);
        for c in &mut pairs {
            pos += even * u64::from(c[0] == 1) + odd * u64::from(c[1] == 1);
            neg += even * u64::from(c[0] == -1) + odd * u64::from(c[1] == -1);
            even = even * step % q;
            odd = odd * step % q;
        }
        if let [s] = pairs.remainder() {
            pos += even * u64::from(*s == 1);
            neg += even * u64::from(*s == -1);
        }
        (pos % q + q - neg % q) % q
    }

    fn pow(&self, a: &u64, e: u128) -> u64 {
        if *a == 0 {
            return if e == 0 { self.one() } else { 0 };
        }
        pow_mod_u64(*a, (e % (self.q as u128 - 1)) as u64, self.q)
    }
}

/// `F_{p^n}` presented as `F_p[x]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    n: u32,
    modulus: PolyFp,
    order: u128,
}

/// An element of an [`ExtField`]: its reduced representative of degree `< n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtFieldElt {
    rep: PolyFp,
}

impl ExtFieldElt {
    pub fn rep(&self) -> &PolyFp {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl fmt::Display for ExtFieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// Builds `F_{p^n}` using the lexicographically smallest monic irreducible of
/// degree `n` (for `n = 1` that is `x`).
pub fn ext_make(p: u64, n: u32) -> Result<ExtField> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::domain("extension degree must be >= 1"));
    }
    checked_power(p, n)?;
    // Irreducibles have density about 1/n, so the scan ends quickly.
    let mut index = 0u64;
    loop {
        let f = PolyFp::monic_from_index(p, n as usize, index);
        if is_irreducible(&f)? {
            return ExtField::with_modulus(f);
        }
        index = index
            .checked_add(1)
            .ok_or(Error::Overflow("irreducible search"))?;
    }
}

impl ExtField {
    /// Uses a caller-supplied monic irreducible modulus.
    pub fn with_modulus(modulus: PolyFp) -> Result<Self> {
        let p = modulus.modulus();
        require_prime(p)?;
        if !modulus.is_monic() {
            return Err(Error::domain("field modulus must be monic"));
        }
        if !is_irreducible(&modulus)? {
            return Err(Error::domain(format!("{modulus} is reducible over F_{p}")));
        }
        let n = modulus.degree().unwrap_or(0) as u32;
        Ok(Self {
            p,
            n,
            order: checked_power(p, n)?,
            modulus,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &PolyFp {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    fn guarded_order(&self) -> Result<u64> {
        if self.order <= ENUMERATION_GUARD as u128 {
            Ok(self.order as u64)
        } else {
            Err(Error::resource(format!(
                "field of order {} exceeds the enumeration guard {}",
                self.order, ENUMERATION_GUARD
            )))
        }
    }

    pub fn element(&self, poly: &PolyFp) -> Result<ExtFieldElt> {
        if poly.modulus() != self.p {
            return Err(Error::Mismatch(format!(
                "polynomial over F_{} in a field of characteristic {}",
                poly.modulus(),
                self.p
            )));
        }
        Ok(ExtFieldElt {
            rep: poly.rem(&self.modulus)?,
        })
    }

    /// The class of `x`, a root of the modulus.
    pub fn alpha(&self) -> ExtFieldElt {
        self.reduce_vec(vec![0, 1])
    }

    fn reduce_vec(&self, mut c: Vec<u64>) -> ExtFieldElt {
        let p = self.p;
        let n = self.n as usize;
        let m = self.modulus.coeffs();
        // modulus is monic: x^n = -(m_0 + ... + m_{n-1} x^{n-1})
        for k in (n..c.len()).rev() {
            let top = c[k];
            if top == 0 {
                continue;
            }
            c[k] = 0;
            for j in 0..n {
                let t = mul_mod(top, m[j], p);
                c[k - n + j] = (c[k - n + j] + p - t) % p;
            }
        }
        c.truncate(n);
        ExtFieldElt {
            rep: PolyFp::from_reduced(p, c),
        }
    }

    /// Element whose coefficient tuple is the base-`p` expansion of `index`.
    /// Indices enumerate the field in lexicographic element order.
    pub fn element_from_index(&self, mut index: u64) -> ExtFieldElt {
        let mut c = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            c.push(index % self.p);
            index /= self.p;
        }
        ExtFieldElt {
            rep: PolyFp::from_reduced(self.p, c),
        }
    }

    pub fn index_of(&self, a: &ExtFieldElt) -> u64 {
        a.rep
            .coeffs()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c)
    }

    /// Every element in lexicographic order (guarded).
    pub fn elements(&self) -> Result<impl Iterator<Item = ExtFieldElt> + '_> {
        let q = self.guarded_order()?;
        Ok((0..q).map(move |i| self.element_from_index(i)))
    }

    pub fn neg(&self, a: &ExtFieldElt) -> ExtFieldElt {
        ExtFieldElt { rep: a.rep.neg() }
    }

    pub fn inv(&self, a: &ExtFieldElt) -> Result<ExtFieldElt> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldArith::pow(self, a, self.order - 2))
    }

    /// `a^(p^k)` by `k` successive Frobenius steps.
    pub fn frobenius(&self, a: &ExtFieldElt, k: u32) -> ExtFieldElt {
        let mut out = a.clone();
        for _ in 0..k {
            out = FieldArith::pow(self, &out, self.p as u128);
        }
        out
    }

    pub fn multiplicative_order(&self, a: &ExtFieldElt) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        let m = u64::try_from(self.order - 1).map_err(|_| Error::Overflow("field order"))?;
        let mut order = m;
        for r in prime_divisors(m) {
            while order % r == 0 && FieldArith::pow(self, a, (order / r) as u128) == self.one() {
                order /= r;
            }
        }
        Ok(order)
    }
}

impl FieldArith for ExtField {
    type Elt = ExtFieldElt;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u128 {
        self.order
    }
    fn zero(&self) -> ExtFieldElt {
        ExtFieldElt {
            rep: PolyFp::zero(self.p),
        }
    }
    fn one(&self) -> ExtFieldElt {
        ExtFieldElt {
            rep: PolyFp::one(self.p),
        }
    }
    fn from_int(&self, n: i64) -> ExtFieldElt {
        ExtFieldElt {
            rep: PolyFp::new(self.p, [n]),
        }
    }
    fn add(&self, a: &ExtFieldElt, b: &ExtFieldElt) -> ExtFieldElt {
        ExtFieldElt {
            rep: a.rep.add(&b.rep).expect("elements of one field"),
        }
    }
    fn sub(&self, a: &ExtFieldElt, b: &ExtFieldElt) -> ExtFieldElt {
        ExtFieldElt {
            rep: a.rep.sub(&b.rep).expect("elements of one field"),
        }
    }
    fn mul(&self, a: &ExtFieldElt, b: &ExtFieldElt) -> ExtFieldElt {
        let (x, y) = (a.rep.coeffs(), b.rep.coeffs());
        if x.is_empty() || y.is_empty() {
            return self.zero();
        }
        let p = self.p;
        let mut c = vec![0u64; x.len() + y.len() - 1];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(u, v, p)) % p;
            }
        }
        self.reduce_vec(c)
    }
    fn generator(&self) -> Result<ExtFieldElt> {
        find_generator(self)
    }
}

/// First element, in lexicographic order, whose multiplicative order is
/// `q - 1`.
pub fn find_generator(field: &ExtField) -> Result<ExtFieldElt> {
    let q = field.guarded_order()?;
    let m = q - 1;
    let rs = prime_divisors(m);
    let one = field.one();
    for index in 1..q {
        let a = field.element_from_index(index);
        if rs
            .iter()
            .all(|&r| FieldArith::pow(field, &a, (m / r) as u128) != one)
        {
            return Ok(a);
        }
    }
    Err(Error::Internal(format!(
        "no generator found in a field of order {q}"
    )))
}

/// For each `d | q - 1`, how many elements have multiplicative order exactly `d`.
pub fn order_census(field: &ExtField) -> Result<BTreeMap<u64, u64>> {
    let q = field.guarded_order()?;
    let mut census: BTreeMap<u64, u64> = integers::divisors(q - 1)
        .into_iter()
        .map(|d| (d, 0))
        .collect();
    for index in 1..q {
        let order = field.multiplicative_order(&field.element_from_index(index))?;
        *census.entry(order).or_default() += 1;
    }
    Ok(census)
}

/// Every `x` with `x^n = alpha`, sorted in element order.
///
/// Writes `alpha = g^k` for the generator `g` and solves `n*j = k (mod q-1)`.
/// The result is nonempty exactly when `alpha^((q-1)/d) = 1` with
/// `d = gcd(n, q-1)`, and then it has `d` elements.
pub fn nth_power_solve(field: &ExtField, alpha: &ExtFieldElt, n: u64) -> Result<Vec<ExtFieldElt>> {
    if alpha.is_zero() {
        return Err(Error::domain("n-th roots are taken in the multiplicative group"));
    }
    if n == 0 {
        return Err(Error::domain("exponent must be >= 1"));
    }
    let q = field.guarded_order()?;
    let m = q - 1;
    let g = find_generator(field)?;
    let one = field.one();

    let mut k = 0u64;
    let mut power = one.clone();
    while power != *alpha {
        power = field.mul(&power, &g);
        k += 1;
        if k == m {
            return Err(Error::Internal("discrete logarithm not found".into()));
        }
    }

    let d = gcd(n % m, m);
    let criterion = FieldArith::pow(field, alpha, (m / d) as u128) == one;
    let n_red = i64::try_from(n % m).map_err(|_| Error::Overflow("nth_power_solve"))?;
    let set = solve_linear_congruence(n_red, k as i64, m)?;
    if set.solvable != criterion || (set.solvable && set.count != d) {
        return Err(Error::Internal(format!(
            "n-th power criterion disagrees with the congruence solver (n={n}, q={q})"
        )));
    }
    let mut roots: Vec<ExtFieldElt> = set
        .solutions()
        .map(|j| FieldArith::pow(field, &g, j as u128))
        .collect();
    roots.sort_by_key(|r| field.index_of(r));
    Ok(roots)
}

/// True iff `alpha` lies in the subfield of order `p^d`, i.e. `alpha^(p^d) = alpha`.
pub fn subfield_member(field: &ExtField, alpha: &ExtFieldElt, d: u32) -> Result<bool> {
    if d == 0 || field.n % d != 0 {
        return Err(Error::domain(format!(
            "{d} does not divide the extension degree {}",
            field.n
        )));
    }
    Ok(field.frobenius(alpha, d) == *alpha)
}

/// Result of the finite-field quadratic Gauss sum checks for one `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HausnerReport {
    pub p: u64,
    pub q: u64,
    /// Multiplicative order of `q` mod `p`; the sum lives in `F_{q^n}`.
    pub n: u32,
    /// `tau^2 = (-1)^((p-1)/2) * p`.
    pub tau_sq_ok: bool,
    /// `tau^q = (q/p) * tau`.
    pub tau_q_ok: bool,
    /// `(p*/q)` read off from whether `tau` is fixed by Frobenius agrees with
    /// both `legendre(p*, q)` and `legendre(q, p)`.
    pub qr_consistent: bool,
}

impl HausnerReport {
    pub fn all_ok(&self) -> bool {
        self.tau_sq_ok && self.tau_q_ok && self.qr_consistent
    }
}

/// Builds `F_{q^n}` with `n = ord_p(q)`, takes `lambda = gamma^((q^n-1)/p)` for
/// a generator `gamma`, forms `tau = sum_t (t/p) lambda^t` and checks it.
pub fn hausner_check(p: u64, q: u64) -> Result<HausnerReport> {
    if !is_odd_prime(p) || !is_odd_prime(q) || p == q {
        return Err(Error::domain("hausner_check needs distinct odd primes"));
    }
    let n = multiplicative_order(q as i64, p)
        .ok_or_else(|| Error::Internal(format!("{q} is not invertible mod {p}")))?;
    let n = u32::try_from(n).map_err(|_| Error::Overflow("ord_p(q)"))?;
    guarded_power(q, n, ENUMERATION_GUARD)?;
    if n == 1 {
        let field = PrimeField::new(q)?;
        let gamma = field.generator()?;
        hausner_in(&field, &gamma, p, n, &legendre_table(p)?)
    } else {
        let field = ext_make(q, n)?;
        let gamma = field.generator()?;
        hausner_in(&field, &gamma, p, n, &legendre_table(p)?)
    }
}

/// The checks inside a given field; `symbols` is `legendre_table(p)`.
pub(crate) fn hausner_in<F: FieldArith>(
    field: &F,
    gamma: &F::Elt,
    p: u64,
    n: u32,
    symbols: &[i8],
) -> Result<HausnerReport> {
    let q = field.characteristic();
    let order = field.order();
    if (order - 1) % p as u128 != 0 {
        return Err(Error::domain(format!("{p} does not divide {order} - 1")));
    }
    let lambda = field.pow(gamma, (order - 1) / p as u128);

    let tau = field.signed_power_sum(&lambda, symbols);

    let p_star = if (p - 1) / 2 % 2 == 0 {
        p as i64
    } else {
        -(p as i64)
    };
    let tau_sq_ok = field.mul(&tau, &tau) == field.from_int(p_star);

    let q_over_p = legendre(q as i64, p)?;
    let tau_q = field.pow(&tau, q as u128);
    let expected = if q_over_p == 1 {
        tau.clone()
    } else {
        field.sub(&field.zero(), &tau)
    };
    let tau_q_ok = tau_q == expected;

    let derived = if tau_q == tau { 1 } else { -1 };
    let p_star_over_q = legendre(p_star, q)?;
    let qr_consistent = derived == p_star_over_q && derived == q_over_p;

    Ok(HausnerReport {
        p,
        q,
        n,
        tau_sq_ok,
        tau_q_ok,
        qr_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_signed_sum_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2u64, 3, 7, 101, 65_537, 999_983] {
            let f = PrimeField::new(q).unwrap();
            for len in [0usize, 1, 2, 5, 64, 301] {
                let signs: Vec<i8> = (0..len).map(|_| rng.gen_range(-1..=1)).collect();
                let base = rng.gen_range(0..q);
                let mut naive = 0i128;
                let mut power = 1i128;
                for &s in &signs {
                    naive += s as i128 * power;
                    power = power * base as i128 % q as i128;
                }
                assert_eq!(f.signed_power_sum(&base, &signs), naive.rem_euclid(q as i128) as u64);
            }
        }
    }

    fn poly(p: u64, c: &[i64]) -> PolyFp {
        PolyFp::new(p, c.iter().copied())
    }

    /// Irreducibility oracle: no monic factor of degree 1..=deg/2.
    fn brute_irreducible(f: &PolyFp) -> bool {
        let p = f.modulus();
        let d = f.degree().unwrap();
        for k in 1..=d / 2 {
            for index in 0..p.pow(k as u32) {
                let g = PolyFp::monic_from_index(p, k, index);
                if f.rem(&g).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn prime_powers_up_to(limit: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for p in integers::primes_up_to(limit) {
            let mut n = 1;
            while (p as u128).pow(n) <= limit as u128 {
                out.push((p, n));
                n += 1;
            }
        }
        out
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&poly(2, &[1, 1, 1])).unwrap());
        assert!(!is_irreducible(&poly(2, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(3, &[1, 0, 1])).unwrap());
        assert!(matches!(is_irreducible(&poly(3, &[2])), Err(Error::Domain(_))));
        assert!(is_irreducible(&poly(5, &[3, 2])).unwrap());
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for (p, max_n) in [(2u64, 7u32), (3, 4), (5, 3), (7, 3)] {
            for n in 1..=max_n {
                for index in 0..p.pow(n) {
                    let f = PolyFp::monic_from_index(p, n as usize, index);
                    assert_eq!(is_irreducible(&f).unwrap(), brute_irreducible(&f), "{f} over F_{p}");
                }
            }
        }
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(count_irreducibles(2, 1).unwrap(), 2);
        assert_eq!(count_irreducibles(2, 2).unwrap(), 1);
        assert_eq!(count_irreducibles(3, 2).unwrap(), 3);
        assert_eq!(count_irreducibles(2, 3).unwrap(), 2);
        assert!(count_irreducibles(4, 2).is_err());
        for p in integers::primes_up_to(50) {
            for n in 1..=4u32 {
                if (p as u128).pow(n) > ENUMERATION_GUARD as u128 {
                    continue;
                }
                let listed = enumerate_irreducibles(p, n).unwrap();
                assert_eq!(listed.len() as u128, count_irreducibles(p, n).unwrap());
                assert!(!listed.is_empty());
            }
        }
    }

    #[test]
    fn sieve_agrees_with_irreducibility_test() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=4u32 {
                let by_test: Vec<PolyFp> = (0..p.pow(n))
                    .map(|i| PolyFp::monic_from_index(p, n as usize, i))
                    .filter(|f| is_irreducible(f).unwrap())
                    .collect();
                assert_eq!(enumerate_irreducibles(p, n).unwrap(), by_test, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_irreducibles(2, 2).unwrap(), vec![poly(2, &[1, 1, 1])]);
        assert_eq!(
            enumerate_irreducibles(2, 3).unwrap(),
            vec![poly(2, &[1, 1, 0, 1]), poly(2, &[1, 0, 1, 1])]
        );
        assert_eq!(
            enumerate_irreducibles(3, 1).unwrap(),
            vec![poly(3, &[0, 1]), poly(3, &[1, 1]), poly(3, &[2, 1])]
        );
        assert!(matches!(
            enumerate_irreducibles_with_guard(2, 11, 1000),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn xq_factorization() {
        assert!(verify_xq_factorization(2, 2).unwrap());
        assert!(verify_xq_factorization(3, 1).unwrap());
        assert!(verify_xq_factorization(2, 3).unwrap());
        for p in integers::primes_up_to(50) {
            for n in 1..=4u32 {
                if (p as u128).pow(n) <= 2500 {
                    assert!(verify_xq_factorization(p, n).unwrap(), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn ext_make_moduli() {
        assert_eq!(*ext_make(2, 2).unwrap().modulus(), poly(2, &[1, 1, 1]));
        assert_eq!(*ext_make(7, 1).unwrap().modulus(), poly(7, &[0, 1]));
        assert_eq!(*ext_make(3, 2).unwrap().modulus(), poly(3, &[1, 0, 1]));
        assert_eq!(ext_make(3, 4).unwrap().order(), 81);
    }

    #[test]
    fn f4_arithmetic() {
        let f = ext_make(2, 2).unwrap();
        let a = f.alpha();
        assert_eq!(f.mul(&a, &a), f.add(&a, &f.one()));
        assert_eq!(f.add(&a, &a), f.zero());
        assert_eq!(f.pow(&a, 3), f.one());
        for x in f.elements().unwrap().skip(1) {
            assert_eq!(f.pow(&x, 3), f.one());
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn generators() {
        let f7 = ext_make(7, 1).unwrap();
        assert_eq!(find_generator(&f7).unwrap(), f7.from_int(3));
        let f4 = ext_make(2, 2).unwrap();
        assert_eq!(find_generator(&f4).unwrap(), f4.alpha());
        let f2 = ext_make(2, 1).unwrap();
        assert_eq!(find_generator(&f2).unwrap(), f2.one());
        for p in integers::primes_up_to(200) {
            let f = ext_make(p, 1).unwrap();
            let g = find_generator(&f).unwrap();
            assert_eq!(f.index_of(&g), integers::primitive_root(p).unwrap());
        }
    }

    #[test]
    fn census_examples() {
        let census = |p, n| order_census(&ext_make(p, n).unwrap()).unwrap();
        assert_eq!(census(7, 1), BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert_eq!(census(2, 2), BTreeMap::from([(1, 1), (3, 2)]));
        assert_eq!(census(2, 1), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn roots_of_unity_count() {
        for (p, n) in prime_powers_up_to(1000) {
            let f = ext_make(p, n).unwrap();
            let q = f.order() as u64;
            let elements: Vec<_> = f.elements().unwrap().collect();
            for d in integers::divisors(q - 1) {
                let roots = elements.iter().filter(|x| f.pow(x, d as u128) == f.one()).count();
                assert_eq!(roots as u64, d, "q={q} d={d}");
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, n) in prime_powers_up_to(1000) {
            let f = ext_make(p, n).unwrap();
            let q = f.order() as u64;
            for _ in 0..20 {
                let a = f.element_from_index(rng.gen_range(0..q));
                let b = f.element_from_index(rng.gen_range(0..q));
                for d in 0..=n {
                    assert_eq!(
                        f.frobenius(&f.add(&a, &b), d),
                        f.add(&f.frobenius(&a, d), &f.frobenius(&b, d))
                    );
                }
            }
        }
    }

    #[test]
    fn nth_power_examples() {
        let f7 = ext_make(7, 1).unwrap();
        let roots = nth_power_solve(&f7, &f7.one(), 3).unwrap();
        assert_eq!(roots, vec![f7.from_int(1), f7.from_int(2), f7.from_int(4)]);
        assert!(nth_power_solve(&f7, &f7.from_int(3), 2).unwrap().is_empty());
        assert_eq!(f7.pow(&f7.from_int(3), 3), f7.from_int(6));
        assert_eq!(nth_power_solve(&f7, &f7.one(), 1).unwrap(), vec![f7.one()]);
        assert!(matches!(
            nth_power_solve(&f7, &f7.zero(), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nth_power_matches_enumeration() {
        for (p, n) in prime_powers_up_to(200) {
            let f = ext_make(p, n).unwrap();
            let q = f.order() as u64;
            let elements: Vec<_> = f.elements().unwrap().collect();
            for alpha in elements.iter().skip(1) {
                for e in 1..=12u64 {
                    let want: Vec<_> = elements
                        .iter()
                        .filter(|x| f.pow(x, e as u128) == *alpha)
                        .cloned()
                        .collect();
                    let got = nth_power_solve(&f, alpha, e).unwrap();
                    assert_eq!(got, want);
                    if !got.is_empty() {
                        assert_eq!(got.len() as u64, gcd(e, q - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn subfields() {
        let f4 = ext_make(2, 2).unwrap();
        assert!(!subfield_member(&f4, &f4.alpha(), 1).unwrap());
        assert!(subfield_member(&f4, &f4.one(), 1).unwrap());
        let f16 = ext_make(2, 4).unwrap();
        for x in f16.elements().unwrap() {
            assert!(subfield_member(&f16, &x, 4).unwrap());
        }
        // exactly p^d elements are fixed
        for d in [1, 2, 4] {
            let fixed = f16
                .elements()
                .unwrap()
                .filter(|x| subfield_member(&f16, x, d).unwrap())
                .count();
            assert_eq!(fixed, 1 << d);
        }
        assert!(subfield_member(&f16, &f16.alpha(), 3).is_err());
    }

    #[test]
    fn hausner_examples() {
        for (p, q, n) in [(3, 5, 2), (5, 3, 4), (3, 7, 1)] {
            let r = hausner_check(p, q).unwrap();
            assert_eq!(r.n, n);
            assert!(r.tau_sq_ok && r.tau_q_ok && r.qr_consistent, "{r:?}");
        }
        assert!(hausner_check(3, 3).is_err());
        assert!(hausner_check(2, 3).is_err());
        // ord_97(3) = 48, far beyond the guard
        assert!(matches!(hausner_check(97, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn hausner_extension_path_agrees_with_prime_path() {
        // n = 1 cases computed through the polynomial presentation as well
        for (p, q) in [(3u64, 7u64), (5, 11), (7, 29), (3, 13)] {
            let ext = ext_make(q, 1).unwrap();
            let g = ext.generator().unwrap();
            let r = hausner_in(&ext, &g, p, 1, &legendre_table(p).unwrap()).unwrap();
            assert_eq!(r, hausner_check(p, q).unwrap());
        }
    }
}
