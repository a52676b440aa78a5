//! Full-scale acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use reciprocity::characters::{gauss_sum, MultChar};
use reciprocity::cubic::{pi_mod_two_criterion, CubicCharCtx, CubicValue};
use reciprocity::eisenstein::{classify_prime, EisensteinInt, PrimeClassification};
use reciprocity::field::{
    count_irreducibles, enumerate_irreducibles, ext_make, nth_power_solve, order_census,
    verify_xq_factorization, FieldArith,
};
use reciprocity::gaussian::{self, biquadratic_reciprocity, QuarticValue};
use reciprocity::integers::{check_quadratic_reciprocity, legendre};
use reciprocity::sweep::{run, Law, SweepOptions, SweepReport};

const SEED: u64 = 20_240_601;

fn opts() -> SweepOptions {
    SweepOptions { jobs: None, seed: SEED }
}

// ---- independent helpers, deliberately naive

fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn naive_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| naive_is_prime(n)).collect()
}

fn naive_gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { naive_gcd(b, a % b) }
}

fn naive_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| naive_gcd(k, n) == 1).count() as u64
}

fn naive_mobius(n: u64) -> i64 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn naive_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * (a % p) % p;
        k += 1;
    }
    k
}

fn smallest_primitive_root(p: u64) -> u64 {
    (2..p).find(|&g| naive_order(g, p) == p - 1).unwrap_or(1)
}

/// `(a/p)` from the set of nonzero squares.
fn square_symbol(squares: &HashSet<u64>, a: i64, p: u64) -> i64 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        0
    } else if squares.contains(&r) {
        1
    } else {
        -1
    }
}

fn prime_powers(bound: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for p in naive_primes(2, bound) {
        let (mut q, mut n) = (p, 1);
        while q <= bound {
            out.push((p, n, q));
            q *= p;
            n += 1;
        }
    }
    out
}

// ---- criteria

struct Outcome {
    ok: bool,
    note: String,
}

fn from_report(r: &SweepReport) -> Outcome {
    let mut note = format!("{} cases, {} failures", r.cases_checked, r.failures.len());
    if let Some(f) = r.failures.first() {
        note.push_str(&format!("; first: {:?} {}", f.case, f.detail));
    }
    Outcome { ok: r.passed() && r.cases_checked > 0, note }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome { ok: a.ok && b.ok, note: format!("{}; {}", a.note, b.note) }
}

fn check(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn quadratic_reciprocity_criterion() -> Outcome {
    let primes = naive_primes(3, 1000);
    let mut bad = Vec::new();
    for &p in &primes {
        let squares: HashSet<u64> = (1..p).map(|x| x * x % p).collect();
        if square_symbol(&squares, -1, p) != if p % 4 == 1 { 1 } else { -1 }
            || square_symbol(&squares, 2, p) != if p % 8 == 1 || p % 8 == 7 { 1 } else { -1 }
        {
            bad.push((p, 0));
        }
        for &q in &primes {
            if p == q {
                continue;
            }
            let lib = legendre(q as i64, p).unwrap() as i64;
            let oracle = square_symbol(&squares, q as i64, p);
            if lib != oracle || !check_quadratic_reciprocity(p, q, true).unwrap() {
                bad.push((p, q));
            }
        }
    }
    // the law itself from the oracle symbols
    for &p in &primes {
        let sp: HashSet<u64> = (1..p).map(|x| x * x % p).collect();
        for &q in primes.iter().filter(|&&q| q > p) {
            let sq: HashSet<u64> = (1..q).map(|x| x * x % q).collect();
            let lhs = square_symbol(&sp, q as i64, p) * square_symbol(&sq, p as i64, q);
            let rhs = if (p - 1) / 2 * ((q - 1) / 2) % 2 == 0 { 1 } else { -1 };
            if lhs != rhs {
                bad.push((p, q));
            }
        }
    }
    both(
        check(bad.is_empty(), format!("oracle mismatches {bad:?}")),
        from_report(&run(Law::Quadratic, 1000, opts()).unwrap()),
    )
}

fn hausner_criterion() -> Outcome {
    let r = run(Law::Hausner, 1_000_000, opts()).unwrap();
    // pair count from an independent enumeration
    let expected = 197_998;
    both(
        from_report(&r),
        check(r.cases_checked == expected, format!("expected {expected} pairs")),
    )
}

fn irreducible_criterion() -> Outcome {
    let mut bad = Vec::new();
    for p in [2u64, 3, 5] {
        for n in 1..=6u32 {
            let gauss: i64 = (1..=n as u64)
                .filter(|d| n as u64 % d == 0)
                .map(|d| naive_mobius(n as u64 / d) * (p as i64).pow(d as u32))
                .sum::<i64>()
                / n as i64;
            let count = count_irreducibles(p, n).unwrap();
            let listed = enumerate_irreducibles(p, n).unwrap().len() as u128;
            if count != listed || count != gauss as u128 {
                bad.push(format!("count {p}^{n}"));
            }
        }
    }
    for p in [2u64, 3] {
        for n in 1..=4 {
            if !verify_xq_factorization(p, n).unwrap() {
                bad.push(format!("x^q - x for {p}^{n}"));
            }
        }
    }
    check(bad.is_empty(), format!("18 counts, 8 factorizations; bad {bad:?}"))
}

fn census_criterion() -> Outcome {
    let mut fields: Vec<(u64, u32, u64)> = naive_primes(2, 500).into_iter().map(|p| (p, 1, p)).collect();
    fields.extend(prime_powers(1000).into_iter().filter(|&(_, n, _)| n > 1));
    let mut bad = Vec::new();
    for &(p, n, q) in &fields {
        let census = order_census(&ext_make(p, n).unwrap()).unwrap();
        let expected: BTreeMap<u64, u64> = (1..q)
            .filter(|d| (q - 1) % d == 0)
            .map(|d| (d, naive_phi(d)))
            .collect();
        if census != expected {
            bad.push(q);
        }
    }
    check(bad.is_empty(), format!("{} fields; bad orders {bad:?}", fields.len()))
}

fn nth_power_criterion() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0u64;
    for (p, deg, q) in prime_powers(200) {
        let field = ext_make(p, deg).unwrap();
        let elements: Vec<_> = (1..q).map(|i| field.element_from_index(i)).collect();
        for n in 1..=12u64 {
            let d = naive_gcd(n, q - 1) as usize;
            let powers: Vec<_> = elements.iter().map(|x| FieldArith::pow(&field, x, n as u128)).collect();
            for alpha in &elements {
                checked += 1;
                let mut expected: Vec<u64> = elements
                    .iter()
                    .zip(&powers)
                    .filter(|(_, y)| *y == alpha)
                    .map(|(x, _)| field.index_of(x))
                    .collect();
                expected.sort_unstable();
                let got: Vec<u64> = nth_power_solve(&field, alpha, n)
                    .unwrap()
                    .iter()
                    .map(|r| field.index_of(r))
                    .collect();
                if got != expected || !(expected.is_empty() || expected.len() == d) {
                    bad.push((q, n, field.index_of(alpha)));
                }
            }
        }
    }
    both(
        check(bad.is_empty(), format!("{checked} (field, n, alpha) triples; bad {:?}", &bad[..bad.len().min(5)])),
        from_report(&run(Law::NthPower, 200, opts()).unwrap()),
    )
}

/// Gauss sums from scratch in floating point, compared with the exact ones.
fn gauss_criterion() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in naive_primes(3, 50) {
        let g = smallest_primitive_root(p);
        let mut dlog = vec![0u64; p as usize];
        let mut x = 1;
        for j in 0..p - 1 {
            dlog[x as usize] = j;
            x = x * g % p;
        }
        for k in [2u64, 3, 4, 6].into_iter().filter(|k| (p - 1) % k == 0) {
            for m in (1..k).filter(|&m| naive_gcd(m, k) == 1) {
                let e = m * (p - 1) / k;
                let oracle: Complex64 = (1..p)
                    .map(|t| {
                        let angle = std::f64::consts::TAU
                            * ((e * dlog[t as usize]) as f64 / (p - 1) as f64 + t as f64 / p as f64);
                        Complex64::from_polar(1.0, angle)
                    })
                    .sum();
                let chi = MultChar::with_exponent(p, e).unwrap();
                let exact = gauss_sum(&chi, 1).unwrap().to_complex();
                count += 1;
                if (exact - oracle).norm() > 1e-9 || (oracle.norm_sqr() - p as f64).abs() > 1e-9 {
                    bad.push((p, e));
                }
            }
        }
    }
    both(
        from_report(&run(Law::GaussIdentities, 50, opts()).unwrap()),
        check(bad.is_empty(), format!("{count} sums against a float oracle; bad {bad:?}")),
    )
}

fn cubic_core_criterion() -> Outcome {
    from_report(&run(Law::CubicCore, 50, opts()).unwrap())
}

fn sweep_pair_count(norms: &[u64]) -> u64 {
    let mut pairs = 0;
    for (i, a) in norms.iter().enumerate() {
        pairs += norms[i + 1..].iter().filter(|b| *b != a).count() as u64;
    }
    norms.len() as u64 + pairs
}

fn cubic_criterion() -> Outcome {
    let r = run(Law::Cubic, 10_000, opts()).unwrap();
    let mut norms: Vec<u64> = Vec::new();
    for p in naive_primes(2, 10_000) {
        if p % 3 == 1 {
            norms.extend([p, p]);
        } else if p % 3 == 2 && p <= 100 {
            norms.push(p * p);
        }
    }
    norms.sort_unstable();
    let expected = sweep_pair_count(&norms);
    both(from_report(&r), check(r.cases_checked == expected, format!("expected {expected} cases")))
}

fn cubic_two_criterion() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in naive_primes(7, 10_000).into_iter().filter(|p| p % 3 == 1) {
        count += 1;
        let form = (0..).take_while(|d| 27 * d * d <= p).any(|d: u64| {
            let rest = p - 27 * d * d;
            (0..=rest).take_while(|c| c * c <= rest).any(|c| c * c == rest)
        });
        let cube = (1..p).any(|x| x * x % p * x % p == 2);
        let PrimeClassification::Split { pi, .. } = classify_prime(p).unwrap() else {
            bad.push(p);
            continue;
        };
        let chi = CubicCharCtx::new(&pi).unwrap().eval(&EisensteinInt::from_int(2)).unwrap() == CubicValue::One;
        let crit = pi_mod_two_criterion(&pi).unwrap();
        if !(form == cube && cube == chi && chi == crit) {
            bad.push(p);
        }
    }
    both(
        check(bad.is_empty(), format!("{count} primes by brute search; bad {bad:?}")),
        from_report(&run(Law::CubicTwo, 10_000, opts()).unwrap()),
    )
}

fn biquadratic_criterion() -> Outcome {
    let r = run(Law::Biquadratic, 10_000, opts()).unwrap();
    let mut norms: Vec<u64> = Vec::new();
    for p in naive_primes(3, 10_000) {
        if p % 4 == 1 {
            norms.extend([p, p]);
        } else if p * p <= 10_000 {
            norms.push(p * p);
        }
    }
    norms.sort_unstable();
    let expected = sweep_pair_count(&norms);
    let primaries = gaussian::primary_primes_up_to(10_000).unwrap();
    let convention = primaries
        .iter()
        .all(|z| z.a.rem_euclid(2) == 1 && z.b.rem_euclid(2) == 0 && (z.a + z.b).rem_euclid(4) == 1);
    // The product form chi_pi(lam) chi_lam(pi) = sign equals the law times
    // chi_lam(pi)^2, so it must fail exactly when chi_lam(pi) = +-i.
    let (mut pairs, mut product_fails, mut unexplained) = (0u64, 0u64, 0u64);
    for (i, pi) in primaries.iter().enumerate() {
        for lam in primaries[i + 1..].iter().filter(|l| l.norm() != pi.norm()) {
            let r = biquadratic_reciprocity(pi, lam).unwrap();
            pairs += 1;
            let real = matches!(r.chi_lambda_pi, QuarticValue::One | QuarticValue::MinusOne);
            product_fails += u64::from(!r.product_form_holds());
            unexplained += u64::from(!r.law_holds() || r.product_form_holds() != real);
        }
    }
    both(
        from_report(&r),
        check(
            r.cases_checked == expected && convention && unexplained == 0,
            format!(
                "expected {expected} cases, convention a odd, b even, a+b = 1 (mod 4); \
                 product form fails on {product_fails} of {pairs} pairs, all with chi = +-i"
            ),
        ),
    )
}

fn structural_criterion() -> Outcome {
    let r = run(Law::Structural, 200, opts()).unwrap();
    // every nonunit with coordinates in [-8, 8] and norm prime to 3 (resp. odd)
    // has exactly one primary associate
    let mut bad = 0;
    for a in -8i64..=8 {
        for b in -8i64..=8 {
            let e = EisensteinInt::new(a, b);
            if e.norm() > 1 && e.norm() % 3 != 0 && e.associates().iter().filter(|z| z.is_primary()).count() != 1 {
                bad += 1;
            }
            let g = gaussian::GaussianInt::new(a, b);
            if g.norm() > 1 && g.norm() % 2 == 1 && g.associates().iter().filter(|z| z.is_primary()).count() != 1 {
                bad += 1;
            }
        }
    }
    both(from_report(&r), check(bad == 0, format!("{bad} small elements without a unique primary associate")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("quadratic reciprocity and supplements, odd primes <= 1000", quadratic_reciprocity_criterion),
        ("finite-field Gauss sum checks, q^ord_p(q) <= 10^6", hausner_criterion),
        ("irreducible counts and x^q - x factorization", irreducible_criterion),
        ("order census = phi(d), primes <= 500 and orders <= 1000", census_criterion),
        ("n-th power solver vs enumeration, orders <= 200, n <= 12", nth_power_criterion),
        ("Gauss and Jacobi sum identities, p <= 50", gauss_criterion),
        ("J(chi, chi) = pi and g^3 = p pi, p <= 50", cubic_core_criterion),
        ("cubic reciprocity and supplements, norms <= 10^4", cubic_criterion),
        ("cubic character of 2, p <= 10^4", cubic_two_criterion),
        ("biquadratic reciprocity, norms <= 10^4", biquadratic_criterion),
        ("structural properties of Z[w] and Z[i]", structural_criterion),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_millis();
        all &= out.ok;
        println!(
            "{} {:>2} {name} [{ms} ms] {}",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            out.note
        );
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
