//! Batch verification over ranges of inputs.
//!
//! Every sweep enumerates its cases in a fixed order, checks them on a rayon
//! pool and merges the outcomes in that order, so the report does not depend
//! on the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::characters::{
    gauss_conj_product_check, gauss_jacobi_relation_check, gauss_magnitude_check,
    gauss_power_formula_check, gauss_sum_float_check, gauss_twist_check, jacobi_table_check,
    kronecker_delta_check, ring_for_order, supported_characters, MultChar,
};
use crate::cubic::{
    self, cubic_gauss_cube_check, cubic_reciprocity_with, jacobi_eq_pi_check, pi_mod_two_criterion,
    supplements_agree, two_as_cubic_residue, CubicCharCtx, CubicValue,
};
use crate::eisenstein::{classify_prime, is_prime_elem, EisResidueField, EisensteinInt, PrimeClassification};
use crate::field::{
    count_irreducibles, enumerate_irreducibles, ext_make, hausner_in, nth_power_solve,
    order_census, verify_xq_factorization, ExtField, FieldArith, PrimeField, ENUMERATION_GUARD,
};
use crate::gaussian::{
    self, biquadratic_reciprocity_with, is_gaussian_prime, GaussResidueField, GaussianInt,
    QuarticCharCtx,
};
use crate::integers::{
    factorize, gcd, is_prime, legendre_table, multiplicative_order, prime_divisors, primes_up_to,
    quadratic_reciprocity, totient,
};
use crate::{Error, Result};

/// The families of identities a sweep can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Quadratic,
    Hausner,
    FieldStructure,
    NthPower,
    GaussIdentities,
    CubicCore,
    Cubic,
    CubicTwo,
    Biquadratic,
    Structural,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::Quadratic,
        Law::Hausner,
        Law::FieldStructure,
        Law::NthPower,
        Law::GaussIdentities,
        Law::CubicCore,
        Law::Cubic,
        Law::CubicTwo,
        Law::Biquadratic,
        Law::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Quadratic => "quadratic",
            Law::Hausner => "hausner",
            Law::FieldStructure => "field-structure",
            Law::NthPower => "nth-power",
            Law::GaussIdentities => "gauss-identities",
            Law::CubicCore => "cubic-core",
            Law::Cubic => "cubic",
            Law::CubicTwo => "cubic-two",
            Law::Biquadratic => "biquadratic",
            Law::Structural => "structural",
        }
    }

    /// Largest accepted bound; larger requests are refused as resource errors.
    pub fn max_bound(self) -> u64 {
        match self {
            Law::Quadratic => 20_000,
            Law::Hausner => ENUMERATION_GUARD,
            Law::FieldStructure => 20_000,
            Law::NthPower => 2_000,
            Law::GaussIdentities | Law::CubicCore => cubic::CYCLOTOMIC_GUARD,
            Law::Cubic | Law::Biquadratic => 100_000,
            Law::CubicTwo => 200_000,
            Law::Structural => 2_000,
        }
    }

    /// Bound used when the caller gives none.
    pub fn default_bound(self) -> u64 {
        match self {
            Law::Quadratic => 1_000,
            Law::Hausner => 1_000_000,
            Law::FieldStructure => 1_000,
            Law::NthPower => 200,
            Law::GaussIdentities | Law::CubicCore => 50,
            Law::Cubic | Law::Biquadratic | Law::CubicTwo => 10_000,
            Law::Structural => 200,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown law '{s}'")))
    }
}

/// One failing case: its inputs, enough to replay it, and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub case: Vec<String>,
    pub detail: String,
}

fn as_string<S: Serializer>(n: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub law: Law,
    #[serde(serialize_with = "as_string")]
    pub bound: u64,
    #[serde(serialize_with = "as_string")]
    pub cases_checked: u64,
    pub failures: Vec<SweepFailure>,
    #[serde(serialize_with = "as_string")]
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    /// Seed for the randomized parts.
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { jobs: None, seed: 0 }
    }
}

/// Runs one sweep on a dedicated pool.
pub fn run(law: Law, bound: u64, opts: SweepOptions) -> Result<SweepReport> {
    if bound > law.max_bound() {
        return Err(Error::resource(format!(
            "bound {bound} for {law} exceeds the limit {}",
            law.max_bound()
        )));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let tally = pool.install(|| match law {
        Law::Quadratic => quadratic(bound),
        Law::Hausner => hausner(bound),
        Law::FieldStructure => field_structure(bound),
        Law::NthPower => nth_power(bound),
        Law::GaussIdentities => gauss_identities(bound),
        Law::CubicCore => cubic_core(bound),
        Law::Cubic => cubic_law(bound, opts.seed),
        Law::CubicTwo => cubic_two(bound),
        Law::Biquadratic => biquadratic(bound, opts.seed),
        Law::Structural => structural(bound, opts.seed),
    })?;
    Ok(SweepReport {
        law,
        bound,
        cases_checked: tally.cases,
        failures: tally.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failures: Vec<SweepFailure>,
}

impl Tally {
    /// Counts one case. Resource errors abort the sweep; any other error is a
    /// failure of that case.
    fn record(&mut self, case: impl FnOnce() -> Vec<String>, outcome: Result<Option<String>>) -> Result<()> {
        self.cases += 1;
        let detail = match outcome {
            Ok(None) => return Ok(()),
            Ok(Some(d)) => d,
            Err(e @ Error::Resource(_)) => return Err(e),
            Err(e) => format!("error: {e}"),
        };
        self.failures.push(SweepFailure { case: case(), detail });
        Ok(())
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// Runs `f` on every item in parallel and merges in item order.
fn fan_out<C: Sync>(items: &[C], f: impl Fn(&C) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    let parts: Vec<Result<Tally>> = items.par_iter().map(f).collect();
    let mut total = Tally::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// `None` when every named check passed, else the names of the failing ones.
fn failed(checks: &[(&str, bool)]) -> Option<String> {
    let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    (!bad.is_empty()).then(|| bad.join(", "))
}

fn strs<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn odd_primes(bound: u64) -> Vec<u64> {
    primes_up_to(bound).into_iter().filter(|&p| p > 2).collect()
}

/// Prime powers `p^n <= bound`, ascending, as `(p, n)`.
fn prime_powers(bound: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u64, u32)> = Vec::new();
    for p in primes_up_to(bound) {
        let (mut q, mut n) = (p, 1);
        while q <= bound {
            out.push((q, p, n));
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
            n += 1;
        }
    }
    out.sort_unstable();
    out.into_iter().map(|(_, p, n)| (p, n)).collect()
}

// ---------------------------------------------------------------- quadratic

fn quadratic(bound: u64) -> Result<Tally> {
    let primes = odd_primes(bound);
    fan_out(&primes, |&p| {
        let mut t = Tally::default();
        for &q in primes.iter().filter(|&&q| q != p) {
            let outcome = quadratic_reciprocity(p, q).map(|r| {
                failed(&[
                    ("law", r.law),
                    ("first supplement", r.first_supplement),
                    ("second supplement", r.second_supplement),
                ])
            });
            t.record(|| strs(&[p, q]), outcome)?;
        }
        Ok(t)
    })
}

// ---------------------------------------------------------------- hausner

/// `(p, [(q, n)])` for odd primes `p != q` with `q^n <= bound`, `n = ord_p(q)`,
/// sorted by `p` then `q`.
fn hausner_cases(bound: u64) -> Vec<(u64, Vec<(u64, u32)>)> {
    let mut by_p: BTreeMap<u64, Vec<(u64, u32)>> = BTreeMap::new();
    for q in odd_primes(bound) {
        let (mut qn, mut n) = (q, 1u32);
        while qn <= bound {
            for p in prime_divisors(qn - 1) {
                if p != 2 && p != q && multiplicative_order(q as i64, p) == Some(n as u64) {
                    by_p.entry(p).or_default().push((q, n));
                }
            }
            qn *= q;
            n += 1;
        }
    }
    by_p.into_iter()
        .map(|(p, mut qs)| {
            qs.sort_unstable();
            (p, qs)
        })
        .collect()
}

fn hausner(bound: u64) -> Result<Tally> {
    let groups = hausner_cases(bound);
    fan_out(&groups, |(p, qs)| {
        let p = *p;
        let symbols = legendre_table(p)?;
        let mut t = Tally::default();
        for &(q, n) in qs {
            let report = if n == 1 {
                PrimeField::new(q).and_then(|f| {
                    let g = f.generator()?;
                    hausner_in(&f, &g, p, n, &symbols)
                })
            } else {
                ext_make(q, n).and_then(|f| {
                    let g = f.generator()?;
                    hausner_in(&f, &g, p, n, &symbols)
                })
            };
            let outcome = report.map(|r| {
                failed(&[
                    ("tau^2 = p*", r.tau_sq_ok),
                    ("tau^q = (q/p) tau", r.tau_q_ok),
                    ("(p*/q) = (q/p)", r.qr_consistent),
                ])
            });
            t.record(|| strs(&[p, q, n as u64]), outcome)?;
        }
        Ok(t)
    })
}

// ---------------------------------------------------------------- field structure

/// Irreducible counts for `p in {2,3,5}, n <= 6` and for `p <= 50, n <= 4`
/// with `p^n <= bound`; `x^(p^n) - x` factorization for `p in {2,3}, n <= 4`;
/// the order census of every field of order `<= bound`.
fn field_structure(bound: u64) -> Result<Tally> {
    let mut counting: Vec<(u64, u32)> = [2u64, 3, 5]
        .into_iter()
        .flat_map(|p| (1..=6).map(move |n| (p, n)))
        .collect();
    for p in primes_up_to(50) {
        for n in 1..=4u32 {
            if p.checked_pow(n).is_some_and(|q| q <= bound) && !counting.contains(&(p, n)) {
                counting.push((p, n));
            }
        }
    }
    counting.sort_unstable();

    let mut total = fan_out(&counting, |&(p, n)| {
        let mut t = Tally::default();
        let outcome = count_irreducibles(p, n).and_then(|c| {
            let listed = enumerate_irreducibles(p, n)?;
            let all_irreducible = listed.iter().all(|f| f.degree() == Some(n as usize));
            Ok(failed(&[
                ("count = enumeration", c == listed.len() as u128),
                ("degrees", all_irreducible),
            ]))
        });
        t.record(|| strs(&["irreducibles".to_string(), p.to_string(), n.to_string()]), outcome)?;
        Ok(t)
    })?;

    let xq: Vec<(u64, u32)> = [2u64, 3]
        .into_iter()
        .flat_map(|p| (1..=4).map(move |n| (p, n)))
        .collect();
    total.merge(fan_out(&xq, |&(p, n)| {
        let mut t = Tally::default();
        let outcome = verify_xq_factorization(p, n).map(|ok| failed(&[("product = x^q - x", ok)]));
        t.record(|| strs(&["xq".to_string(), p.to_string(), n.to_string()]), outcome)?;
        Ok(t)
    })?);

    total.merge(fan_out(&prime_powers(bound), |&(p, n)| {
        let mut t = Tally::default();
        let outcome = census_matches_totient(p, n);
        t.record(|| strs(&["census".to_string(), p.to_string(), n.to_string()]), outcome)?;
        Ok(t)
    })?);
    Ok(total)
}

fn census_matches_totient(p: u64, n: u32) -> Result<Option<String>> {
    let field = ext_make(p, n)?;
    let census = order_census(&field)?;
    for (&d, &count) in &census {
        let phi = totient(d)?;
        if count != phi {
            return Ok(Some(format!("{count} elements of order {d}, expected {phi}")));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------- n-th powers

/// Every field of order `<= bound`, every `n <= 12`, every nonzero `alpha`:
/// the solver against a table of all `x^n`.
fn nth_power(bound: u64) -> Result<Tally> {
    let mut cases: Vec<(u64, u32, u64)> = Vec::new();
    for (p, n) in prime_powers(bound) {
        for e in 1..=12 {
            cases.push((p, n, e));
        }
    }
    fan_out(&cases, |&(p, deg, e)| {
        let mut t = Tally::default();
        let outcome = ext_make(p, deg).and_then(|f| nth_power_case(&f, e));
        t.record(|| strs(&[p, deg as u64, e]), outcome)?;
        Ok(t)
    })
}

fn nth_power_case(field: &ExtField, e: u64) -> Result<Option<String>> {
    let q = field.order() as u64;
    let mut roots_of: Vec<Vec<u64>> = vec![Vec::new(); q as usize];
    for x in 1..q {
        let y = FieldArith::pow(field, &field.element_from_index(x), e as u128);
        roots_of[field.index_of(&y) as usize].push(x);
    }
    let d = gcd(e, q - 1);
    let one = field.one();
    for a in 1..q {
        let alpha = field.element_from_index(a);
        let expected = &roots_of[a as usize];
        let got: Vec<u64> = nth_power_solve(field, &alpha, e)?
            .iter()
            .map(|r| field.index_of(r))
            .collect();
        if got != *expected {
            return Ok(Some(format!("alpha = {alpha}: solver {got:?}, enumeration {expected:?}")));
        }
        if !expected.is_empty() && expected.len() as u64 != d {
            return Ok(Some(format!("alpha = {alpha}: {} roots, gcd is {d}", expected.len())));
        }
        let criterion = FieldArith::pow(field, &alpha, ((q - 1) / d) as u128) == one;
        if criterion == expected.is_empty() {
            return Ok(Some(format!("alpha = {alpha}: criterion disagrees with enumeration")));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------- Gauss and Jacobi sums

fn gauss_identities(bound: u64) -> Result<Tally> {
    let primes = odd_primes(bound);
    fan_out(&primes, |&p| {
        let mut t = Tally::default();
        let chars: Vec<MultChar> = supported_characters(p)?
            .into_iter()
            .filter(|c| !c.is_trivial())
            .collect();
        for chi in &chars {
            let case = || strs(&[p, chi.exponent(), chi.order()]);
            t.record(case, single_char_identities(chi))?;
        }
        for chi in &chars {
            for lam in &chars {
                let Ok(prod) = chi.mul(lam) else { continue };
                if prod.is_trivial() || ring_for_order(crate::integers::lcm(chi.order(), lam.order())).is_err() {
                    continue;
                }
                let outcome = gauss_jacobi_relation_check(chi, lam)
                    .map(|ok| failed(&[("g(chi) g(lam) = J(chi, lam) g(chi lam)", ok)]));
                t.record(|| strs(&[p, chi.exponent(), lam.exponent()]), outcome)?;
            }
        }
        let mut kron = Vec::new();
        for x in 0..p as i64 {
            for y in 0..p as i64 {
                if !kronecker_delta_check(p, x, y)? {
                    kron.push(format!("({x}, {y})"));
                }
            }
        }
        t.record(
            || strs(&[p.to_string(), "kronecker".to_string()]),
            Ok((!kron.is_empty()).then(|| format!("delta fails at {}", kron.join(" ")))),
        )?;
        Ok(t)
    })
}

fn single_char_identities(chi: &MultChar) -> Result<Option<String>> {
    let p = chi.p() as i64;
    let mut twist = true;
    for a in 1..p {
        twist &= gauss_twist_check(chi, a)?;
    }
    let power = chi.order() <= 2 || gauss_power_formula_check(chi)?;
    Ok(failed(&[
        ("|g|^2 = p", gauss_magnitude_check(chi)?),
        ("g(chi) g(conj chi) = chi(-1) p", gauss_conj_product_check(chi)?),
        ("Jacobi table", jacobi_table_check(chi)?),
        ("g^n product formula", power),
        ("g_a = conj(chi(a)) g_1", twist),
        ("float cross-check", gauss_sum_float_check(chi, 1)?),
    ]))
}

// ---------------------------------------------------------------- cubic

fn cubic_core(bound: u64) -> Result<Tally> {
    let primes: Vec<u64> = primes_up_to(bound).into_iter().filter(|p| p % 3 == 1).collect();
    fan_out(&primes, |&p| {
        let mut t = Tally::default();
        let outcome = jacobi_eq_pi_check(p).and_then(|r| {
            Ok(failed(&[
                ("J primary", r.is_primary),
                ("N(J) = p", r.norm_is_p),
                ("J = pi", r.equals_pi),
                ("default J in {pi, conj pi}", r.default_char_in_pair),
                ("g^3 = p pi", cubic_gauss_cube_check(p)?),
            ]))
        });
        t.record(|| strs(&[p]), outcome)?;
        Ok(t)
    })
}

fn item_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

const RANDOM_SAMPLES: usize = 16;

/// Per-prime checks for the cubic sweep.
fn cubic_prime_case(ctx: &CubicCharCtx, index: usize, seed: u64) -> Result<Option<String>> {
    let pi = ctx.pi();
    let unique = pi.associates().iter().filter(|z| z.is_primary()).count() == 1;
    let mut rng = item_rng(seed, index);
    let mut multiplicative = true;
    let mut squares = true;
    let mut conjugation = true;
    let conj_ctx = if pi.b != 0 && ctx.norm() <= 1_000 {
        Some(CubicCharCtx::new(&pi.conj())?)
    } else {
        None
    };
    for _ in 0..RANDOM_SAMPLES {
        let x = EisensteinInt::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let y = EisensteinInt::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let (cx, cy) = (ctx.eval(&x)?, ctx.eval(&y)?);
        multiplicative &= ctx.eval(&(x * y))? == cx * cy;
        squares &= ctx.eval(&(x * x))? == cx * cx;
        if let Some(cc) = &conj_ctx {
            conjugation &= cc.eval(&x.conj())? == cx.conj();
        }
    }
    Ok(failed(&[
        ("prime", is_prime_elem(&pi)?),
        ("primary", pi.is_primary()),
        ("unique primary associate", unique),
        ("supplements", supplements_agree(ctx)?),
        ("multiplicativity", multiplicative),
        ("chi(x)^2 = chi(x^2)", squares),
        ("conj chi_pi(x) = chi_conj(pi)(conj x)", conjugation),
    ]))
}

/// Primary primes of norm `<= max_norm`, pairs ordered by `(N1, N2)`.
fn cubic_law(max_norm: u64, seed: u64) -> Result<Tally> {
    let primes = cubic::primary_primes_up_to(max_norm)?;
    let ctxs = primes.iter().map(CubicCharCtx::new).collect::<Result<Vec<_>>>()?;
    let indices: Vec<usize> = (0..ctxs.len()).collect();
    let mut total = fan_out(&indices, |&i| {
        let mut t = Tally::default();
        t.record(|| vec![ctxs[i].pi().to_string()], cubic_prime_case(&ctxs[i], i, seed))?;
        Ok(t)
    })?;
    total.merge(fan_out(&indices, |&i| {
        let mut t = Tally::default();
        let c1 = &ctxs[i];
        for c2 in ctxs[i + 1..].iter().filter(|c| c.norm() != c1.norm()) {
            let outcome = cubic_reciprocity_with(c1, c2).map(|r| {
                (!r.holds()).then(|| format!("chi_1(pi_2) = {}, chi_2(pi_1) = {}", r.chi_1_of_2, r.chi_2_of_1))
            });
            t.record(|| vec![c1.pi().to_string(), c2.pi().to_string()], outcome)?;
        }
        Ok(t)
    })?);
    Ok(total)
}

fn cubic_two(bound: u64) -> Result<Tally> {
    let primes: Vec<u64> = primes_up_to(bound).into_iter().filter(|p| p % 3 == 1).collect();
    fan_out(&primes, |&p| {
        let mut t = Tally::default();
        t.record(|| strs(&[p]), cubic_two_case(p))?;
        Ok(t)
    })
}

fn cubic_two_case(p: u64) -> Result<Option<String>> {
    let form = two_as_cubic_residue(p)?;
    let rep_ok = form.rep.map_or(true, |(c, d)| c * c + 27 * d * d == p);
    let by_search = (1..p).any(|x| crate::integers::mul_mod(crate::integers::mul_mod(x, x, p), x, p) == 2 % p);
    let pi = match classify_prime(p)? {
        PrimeClassification::Split { pi, .. } => pi,
        other => return Err(Error::Internal(format!("{p} = 1 (mod 3) classified as {other:?}"))),
    };
    let by_char = CubicCharCtx::new(&pi)?.eval(&EisensteinInt::from_int(2))? == CubicValue::One;
    let by_pi = pi_mod_two_criterion(&pi)?;
    Ok(failed(&[
        ("representation", rep_ok),
        ("C^2 + 27 D^2 <=> cube search", form.solvable == by_search),
        ("cube search <=> chi_pi(2) = 1", by_search == by_char),
        ("chi_pi(2) = 1 <=> pi = 1 (mod 2)", by_char == by_pi),
    ]))
}

// ---------------------------------------------------------------- biquadratic

fn quartic_prime_case(ctx: &QuarticCharCtx, index: usize, seed: u64) -> Result<Option<String>> {
    let pi = ctx.pi();
    let unique = pi.associates().iter().filter(|z| z.is_primary()).count() == 1;
    let mut rng = item_rng(seed, index);
    let mut multiplicative = true;
    for _ in 0..RANDOM_SAMPLES {
        let x = GaussianInt::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let y = GaussianInt::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        multiplicative &= ctx.eval(&(x * y))? == ctx.eval(&x)? * ctx.eval(&y)?;
    }
    Ok(failed(&[
        ("prime", is_gaussian_prime(&pi)?),
        ("primary", pi.is_primary()),
        ("unique primary associate", unique),
        ("multiplicativity", multiplicative),
    ]))
}

fn biquadratic(max_norm: u64, seed: u64) -> Result<Tally> {
    let primes = gaussian::primary_primes_up_to(max_norm)?;
    let ctxs = primes.iter().map(QuarticCharCtx::new).collect::<Result<Vec<_>>>()?;
    let indices: Vec<usize> = (0..ctxs.len()).collect();
    let mut total = fan_out(&indices, |&i| {
        let mut t = Tally::default();
        t.record(|| vec![ctxs[i].pi().to_string()], quartic_prime_case(&ctxs[i], i, seed))?;
        Ok(t)
    })?;
    total.merge(fan_out(&indices, |&i| {
        let mut t = Tally::default();
        let c1 = &ctxs[i];
        for c2 in ctxs[i + 1..].iter().filter(|c| c.norm() != c1.norm()) {
            let outcome = biquadratic_reciprocity_with(c1, c2).map(|r| {
                (!r.law_holds()).then(|| {
                    format!(
                        "chi_pi(lam) = {}, chi_lam(pi) = {}, sign = {}",
                        r.chi_pi_lambda, r.chi_lambda_pi, r.sign
                    )
                })
            });
            t.record(|| vec![c1.pi().to_string(), c2.pi().to_string()], outcome)?;
        }
        Ok(t)
    })?);
    Ok(total)
}

// ---------------------------------------------------------------- structural

const STRUCTURAL_SAMPLES: usize = 20_000;
const SMALL: i64 = 6;

/// Division contract and norm multiplicativity (random with the seed plus all
/// pairs with coordinates in `[-6, 6]`), unique primary associates and residue
/// field cardinality for every prime of norm `<= bound`.
fn structural(bound: u64, seed: u64) -> Result<Tally> {
    let mut total = Tally::default();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(i64, i64, i64, i64)> = (0..STRUCTURAL_SAMPLES)
        .map(|_| {
            let mut c = || rng.gen_range(-1_000_000..=1_000_000);
            (c(), c(), c(), c())
        })
        .collect();
    for a in -SMALL..=SMALL {
        for b in -SMALL..=SMALL {
            for c in -SMALL..=SMALL {
                for d in -SMALL..=SMALL {
                    pairs.push((a, b, c, d));
                }
            }
        }
    }
    total.merge(fan_out(&pairs, |&(a, b, c, d)| {
        let mut t = Tally::default();
        let case = || strs(&[a, b, c, d]);
        t.record(case, division_case_eis(EisensteinInt::new(a, b), EisensteinInt::new(c, d)))?;
        t.record(case, division_case_gauss(GaussianInt::new(a, b), GaussianInt::new(c, d)))?;
        Ok(t)
    })?);

    let r = isqrt_i(bound);
    let mut coords = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            coords.push((a, b));
        }
    }
    total.merge(fan_out(&coords, |&(a, b)| {
        let mut t = Tally::default();
        let z = EisensteinInt::new(a, b);
        if z.norm() > 1 && z.norm() <= bound as u128 && is_prime_elem(&z)? {
            t.record(|| vec![format!("eis {z}")], eis_prime_case(&z))?;
        }
        let z = GaussianInt::new(a, b);
        if z.norm() > 1 && z.norm() <= bound as u128 && is_gaussian_prime(&z)? {
            t.record(|| vec![format!("gauss {z}")], gauss_prime_case(&z))?;
        }
        Ok(t)
    })?);
    Ok(total)
}

fn isqrt_i(n: u64) -> i64 {
    // the Eisenstein norm is at least b^2 * 3/4, so coordinates reach 2 sqrt(n / 3)
    crate::integers::isqrt(n.saturating_mul(4) / 3) as i64 + 1
}

fn division_case_eis(x: EisensteinInt, y: EisensteinInt) -> Result<Option<String>> {
    let norm_mult = (x * y).norm() == x.norm() * y.norm();
    if y.is_zero() {
        return Ok(failed(&[
            ("norm multiplicative", norm_mult),
            ("division by zero rejected", matches!(x.divmod(&y), Err(Error::DivisionByZero))),
        ]));
    }
    let (q, r) = x.divmod(&y)?;
    Ok(failed(&[
        ("norm multiplicative", norm_mult),
        ("x = q y + r", q * y + r == x),
        ("N(r) < N(y)", r.norm() < y.norm()),
    ]))
}

fn division_case_gauss(x: GaussianInt, y: GaussianInt) -> Result<Option<String>> {
    let norm_mult = (x * y).norm() == x.norm() * y.norm();
    if y.is_zero() {
        return Ok(failed(&[
            ("norm multiplicative", norm_mult),
            ("division by zero rejected", matches!(x.divmod(&y), Err(Error::DivisionByZero))),
        ]));
    }
    let (q, r) = x.divmod(&y)?;
    Ok(failed(&[
        ("norm multiplicative", norm_mult),
        ("x = q y + r", q * y + r == x),
        ("N(r) < N(y)", r.norm() < y.norm()),
    ]))
}

fn eis_prime_case(pi: &EisensteinInt) -> Result<Option<String>> {
    let norm = pi.norm() as u64;
    let primaries = pi.associates().iter().filter(|z| z.is_primary()).count();
    let unique = if norm % 3 == 0 { primaries == 0 } else { primaries == 1 };
    let field = EisResidueField::new(pi)?;
    let elements = field.elements();
    let mut seen = std::collections::HashSet::new();
    let span = norm as i64;
    for a in 0..span {
        for b in 0..span {
            seen.insert(field.reduce(&EisensteinInt::new(a, b)));
        }
    }
    let listed: std::collections::HashSet<_> = elements.iter().copied().collect();
    Ok(failed(&[
        ("primary associates", unique),
        ("order = N(pi)", field.order() == norm),
        ("|elements| = N(pi)", elements.len() as u64 == norm && listed.len() == elements.len()),
        ("reduction onto elements", seen == listed),
        ("prime norm or square of a prime", is_prime(norm) || factorize(norm).len() == 1),
    ]))
}

fn gauss_prime_case(pi: &GaussianInt) -> Result<Option<String>> {
    let norm = pi.norm() as u64;
    let primaries = pi.associates().iter().filter(|z| z.is_primary()).count();
    let unique = if norm % 2 == 0 { primaries == 0 } else { primaries == 1 };
    let field = GaussResidueField::new(pi)?;
    let elements = field.elements();
    let mut seen = std::collections::HashSet::new();
    let span = norm as i64;
    for a in 0..span {
        for b in 0..span {
            seen.insert(field.reduce(&GaussianInt::new(a, b)));
        }
    }
    let listed: std::collections::HashSet<_> = elements.iter().copied().collect();
    Ok(failed(&[
        ("primary associates", unique),
        ("order = N(pi)", field.order() == norm),
        ("|elements| = N(pi)", elements.len() as u64 == norm && listed.len() == elements.len()),
        ("reduction onto elements", seen == listed),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(law: Law, bound: u64) -> SweepReport {
        run(law, bound, SweepOptions { jobs: Some(2), seed: 7 }).unwrap()
    }

    #[test]
    fn small_sweeps_pass() {
        for (law, bound) in [
            (Law::Quadratic, 100),
            (Law::Hausner, 2_000),
            (Law::FieldStructure, 60),
            (Law::NthPower, 30),
            (Law::GaussIdentities, 14),
            (Law::CubicCore, 20),
            (Law::Cubic, 300),
            (Law::CubicTwo, 500),
            (Law::Biquadratic, 300),
            (Law::Structural, 40),
        ] {
            let r = quick(law, bound);
            assert!(r.passed(), "{law}: {:?}", r.failures);
            assert!(r.cases_checked > 0, "{law}");
        }
    }

    #[test]
    fn jobs_do_not_change_content() {
        let strip = |mut r: SweepReport| {
            r.elapsed_ms = 0;
            r
        };
        for law in [Law::Cubic, Law::Quadratic] {
            let a = run(law, 200, SweepOptions { jobs: Some(1), seed: 3 }).unwrap();
            let b = run(law, 200, SweepOptions { jobs: Some(3), seed: 3 }).unwrap();
            assert_eq!(strip(a), strip(b));
        }
    }

    #[test]
    fn hausner_case_list() {
        let groups = hausner_cases(50);
        let flat: Vec<(u64, u64, u32)> = groups
            .iter()
            .flat_map(|(p, qs)| qs.iter().map(move |&(q, n)| (*p, q, n)))
            .collect();
        // brute force over all odd prime pairs
        let mut brute = Vec::new();
        for p in odd_primes(50) {
            for q in odd_primes(50) {
                if p == q {
                    continue;
                }
                let n = multiplicative_order(q as i64, p).unwrap() as u32;
                if q.checked_pow(n).is_some_and(|v| v <= 50) {
                    brute.push((p, q, n));
                }
            }
        }
        brute.sort_unstable();
        assert_eq!(flat, brute);
    }

    #[test]
    fn bounds_and_names() {
        assert!(matches!(
            run(Law::GaussIdentities, 10_000, SweepOptions::default()),
            Err(Error::Resource(_))
        ));
        for law in Law::ALL {
            assert_eq!(law.name().parse::<Law>().unwrap(), law);
        }
        let r = quick(Law::Quadratic, 2);
        assert_eq!(r.cases_checked, 0);
        assert!(r.passed());
    }
}
