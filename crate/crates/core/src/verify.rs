//! Verification suites: each runs a family of exact identities and reports
//! one line per check, stopping at the first failure.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carlitz::{carlitz_d, carlitz_functional_check, monic_product, MAX_MONIC_N};
use crate::curve::{enumerate, AElem, DegreeBasis, EnumMode, KElem};
use crate::drinfeld::{derive_generators, rho_coefficient_table, rho_recursive};
use crate::ekpoly::{
    basis_convert, basis_invert, big_d, bracket_w, division_check_with, ek_bruteforce,
    main_theorem_table, s_sym_direct, s_sym_recursive, t_coeffs, DkMode, EkChain, MAX_BRUTE_K,
};
use crate::error::{Error, Result};
use crate::series::{compose_scaled, exp_coeffs, log_coeffs, scale_series, QSeries, SeriesKind, Symbols};

/// Seed for every random draw made by the suites.
pub const SEED: u64 = 0x5eed_d21f;

/// Accepted range for `max_k`.
pub const MIN_K: usize = 2;
pub const MAX_VERIFY_K: usize = 12;

/// Caps for the exhaustive parts of the suites.
pub const MAX_RHO_TABLE_DEG: usize = 8;
pub const MAX_EK_ORACLE_K: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Commute,
    Series,
    Division,
    Main,
    Symbols,
    Carlitz,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Commute,
        Suite::Series,
        Suite::Division,
        Suite::Main,
        Suite::Symbols,
        Suite::Carlitz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "ALL",
            Suite::Commute => "COMMUTE",
            Suite::Series => "SERIES",
            Suite::Division => "DIVISION",
            Suite::Main => "MAIN",
            Suite::Symbols => "SYMBOLS",
            Suite::Carlitz => "CARLITZ",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == upper)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown suite {s:?}"),
            })
    }
}

/// Lines produced by a suite run, and the first failure if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Lines = Vec<String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

pub fn run_suite(suite: Suite, max_k: usize) -> Result<Report> {
    if !(MIN_K..=MAX_VERIFY_K).contains(&max_k) {
        return Err(Error::Budget {
            what: "verify max_k",
            got: max_k,
            max: MAX_VERIFY_K,
        });
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut report = Report::default();
    for s in suites {
        let mut lines = Vec::new();
        let outcome = match s {
            Suite::Commute => commute(max_k, &mut lines),
            Suite::Series => series(max_k, &mut lines),
            Suite::Division => division(max_k, &mut lines),
            Suite::Main => main(max_k, &mut lines),
            Suite::Symbols => symbols(max_k, &mut lines),
            Suite::Carlitz => carlitz(max_k, &mut lines),
            Suite::All => unreachable!(),
        };
        report.lines.extend(lines.into_iter().map(|l| format!("[{s}] {l}")));
        if let Err(e) = outcome {
            let msg = format!("[{s}] FAIL: {e}");
            report.lines.push(msg.clone());
            report.failure = Some(msg);
            break;
        }
        report.lines.push(format!("[{s}] PASS"));
    }
    Ok(report)
}

/// A uniformly random element of `A_{<deg+1}`.
pub fn random_a(rng: &mut impl Rng, deg: usize) -> AElem {
    let basis = DegreeBasis::below(deg + 1);
    let mask = if basis.dim() >= 64 { u64::MAX } else { (1u64 << basis.dim()) - 1 };
    basis.combination(rng.gen::<u64>() & mask)
}

/// A random nonzero element of `A_{<deg+1}` outside `F_2`.
pub fn random_nonconstant_a(rng: &mut impl Rng, deg: usize) -> AElem {
    loop {
        let a = random_a(rng, deg);
        if !a.is_constant() {
            return a;
        }
    }
}

fn commute(max_k: usize, lines: &mut Lines) -> Result<()> {
    let gens = derive_generators()?;
    lines.push(format!("rho_y derived: {}", gens.rho_y));
    ensure(gens.commute(), || "rho_x rho_y != rho_y rho_x".into())?;
    lines.push("rho_x rho_y = rho_y rho_x OK".into());

    let deg = max_k.min(MAX_RHO_TABLE_DEG);
    let table = rho_coefficient_table(deg)?;
    lines.push(format!(
        "rho_a three ways over A_<{}: {} elements OK",
        deg + 1,
        table.len()
    ));
    Ok(())
}

fn series_identity_check(name: &str, s: &QSeries, order: usize) -> Result<()> {
    let id = QSeries::identity(order);
    for i in 0..=order {
        ensure(s.coeff(i) == id.coeff(i), || {
            format!("{name}: coefficient of z^{} is {}, expected {}", 1u64 << i, s.coeff(i), id.coeff(i))
        })?;
    }
    Ok(())
}

fn series(max_k: usize, lines: &mut Lines) -> Result<()> {
    let order = max_k;
    let exp = exp_coeffs(order);
    let log = log_coeffs(order);
    let one = KElem::one();
    series_identity_check("exp(log(z))", &compose_scaled(&exp, &one, &log, order)?, order)?;
    series_identity_check("log(exp(z))", &compose_scaled(&log, &one, &exp, order)?, order)?;
    lines.push(format!("exp(log z) = log(exp z) = z to z^(2^{order}) OK"));

    for a in ["x", "y", "x+y", "x*y"] {
        let a: AElem = a.parse()?;
        let rho_a = rho_recursive(&a)?;
        let lhs = exp.scale_argument(&KElem::from(a.clone()));
        let rhs = exp.apply_twisted(&rho_a);
        for i in 0..=order {
            ensure(lhs.coeff(i) == rhs.coeff(i), || {
                format!(
                    "a = {a}, coefficient of z^{}: e(az) has {}, rho_a(e(z)) has {}",
                    1u64 << i,
                    lhs.coeff(i),
                    rhs.coeff(i)
                )
            })?;
        }
        lines.push(format!("e({a} z) = rho_({a})(e(z)) OK"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..20 {
        let c0 = KElem::from(random_nonconstant_a(&mut rng, 8));
        scale_series(SeriesKind::Exp, &c0, order)?;
        scale_series(SeriesKind::Log, &c0, order)?;
    }
    lines.push("log(z, b0) = b0 log(z) and e(z, a0) = e(a0 z) for 20 random a0, b0 OK".into());
    Ok(())
}

fn division(max_k: usize, lines: &mut Lines) -> Result<()> {
    let chain = EkChain::new(max_k)?;
    let ek_max = max_k.min(MAX_EK_ORACLE_K);
    for k in 1..=ek_max {
        let brute = ek_bruteforce(k)?;
        let rec = if k == 1 { crate::ekpoly::ek_recursive(1)? } else { chain.e(k) };
        ensure(brute == rec, || format!("k = {k}: brute-force e_k = {brute}, recursion gives {rec}"))?;
        for a in enumerate(k, EnumMode::Below)? {
            let v = rec.eval(&KElem::from(a.clone()));
            ensure(v.is_zero(), || format!("k = {k}: e_k({a}) = {v}, expected 0"))?;
        }
        if k >= 2 {
            let dk = KElem::from(chain.big_d(k).clone());
            for a in enumerate(k, EnumMode::Exact)? {
                let v = rec.eval(&KElem::from(a.clone()));
                ensure(v == dk, || format!("k = {k}: e_k({a}) = {v}, expected D_k = {dk}"))?;
            }
        }
    }
    lines.push(format!(
        "e_k brute force = recursion, vanishing on A_<k, constant D_k on A_k for k <= {ek_max} OK"
    ));

    let d_max = max_k.min(MAX_BRUTE_K);
    for k in 2..=d_max {
        let brute = big_d(k, DkMode::Brute)?;
        let eval = chain.big_d(k);
        ensure(&brute == eval, || format!("k = {k}: D_k brute = {brute}, e_k(t_k) = {eval}"))?;
    }
    lines.push(format!("D_k eval = brute for 2 <= k <= {d_max} OK"));

    let symbols = Symbols::new(max_k)?;
    for k in 2..=max_k {
        division_check_with(&symbols, &chain, k)?;
        lines.push(format!("k = {k}: p_k = e_k^2/d_k + C e_k, C = 1/D_k + D_k/d_k OK"));
    }
    Ok(())
}

fn main(max_k: usize, lines: &mut Lines) -> Result<()> {
    for row in main_theorem_table(max_k)? {
        lines.push(format!("k = {}: d_k OK / ell_k OK", row.k));
    }
    Ok(())
}

fn symbols(max_k: usize, lines: &mut Lines) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let w = |rng: &mut ChaCha8Rng| KElem::from(random_a(rng, 20));
    for _ in 0..100 {
        let (v, k, j) = (w(&mut rng), rng.gen_range(0..=6u32), rng.gen_range(0..=6u32));
        let (l, r) = (bracket_w(k, &v).frobenius(j), bracket_w(k, &v.frobenius(j)));
        ensure(l == r, || format!("[{k}]_w^(2^{j}) = {l} != [{k}]_(w^(2^{j})) = {r}, w = {v}"))?;
    }
    lines.push("[k]_w^(2^j) = [k]_(w^(2^j)) OK".into());
    for _ in 0..100 {
        let (v, k) = (w(&mut rng), rng.gen_range(0..=6u32));
        let (l, r) = (bracket_w(1, &bracket_w(k, &v)), bracket_w(k, &bracket_w(1, &v)));
        ensure(l == r, || format!("[1]_([{k}]_w) = {l} != [{k}]_([1]_w) = {r}, w = {v}"))?;
    }
    lines.push("[1]_([k]_w) = [k]_([1]_w) OK".into());
    for _ in 0..100 {
        let (v1, v2, k) = (w(&mut rng), w(&mut rng), rng.gen_range(0..=6u32));
        let (l, r) = (bracket_w(k, &(&v1 + &v2)), &bracket_w(k, &v1) + &bracket_w(k, &v2));
        ensure(l == r, || format!("[{k}]_(w1+w2) = {l} != {r}, w1 = {v1}, w2 = {v2}"))?;
    }
    lines.push("[k]_(w1+w2) = [k]_w1 + [k]_w2 OK".into());
    for _ in 0..100 {
        let (v, k) = (w(&mut rng), rng.gen_range(0..=5u32));
        let (l, r) = (bracket_w(k + 1, &v), &bracket_w(k, &v).square() + &bracket_w(1, &v));
        ensure(l == r, || format!("[{}]_w = {l} != [{k}]_w^2 + [1]_w = {r}, w = {v}", k + 1))?;
    }
    lines.push("[k+1]_w = [k]_w^2 + [1]_w OK".into());
    for _ in 0..100 {
        let (v, k) = (w(&mut rng), rng.gen_range(0..=6u32));
        let one = bracket_w(1, &v);
        let sum = (0..k).fold(KElem::zero(), |acc, i| &acc + &one.frobenius(i));
        let l = bracket_w(k, &v);
        ensure(l == sum, || format!("[{k}]_w = {l} != sum of [1]_w^(2^i) = {sum}, w = {v}"))?;
    }
    lines.push("[k]_w = sum_(i<k) [1]_w^(2^i) OK".into());

    for n in 0..=6usize {
        let values: Vec<KElem> = (0..=n).map(|_| w(&mut rng)).collect();
        let (head, next) = (&values[..n], &values[n]);
        for r in 0..=n + 2 {
            let direct = s_sym_direct(r, &values)?;
            let mut stepped = s_sym_direct(r, head)?.square();
            if r > 0 {
                stepped += &(next * &s_sym_direct(r - 1, head)?);
            }
            ensure(direct == stepped, || {
                format!("S_({},{r}): direct = {direct}, S_(n,r)^2 + x_(n+1) S_(n,r-1) = {stepped}", n + 1)
            })?;
            let rec = s_sym_recursive(r, &values);
            ensure(direct == rec, || format!("S_({},{r}): direct = {direct}, recursion = {rec}", n + 1))?;
        }
    }
    lines.push("S_(n+1,r) = S_(n,r)^2 + x_(n+1) S_(n,r-1) for n <= 6 OK".into());

    let chain = EkChain::new(max_k)?;
    for k in 2..=max_k {
        let t = t_coeffs(k)?;
        let b = chain.e(k);
        ensure(basis_convert(&t) == b, || format!("k = {k}: T_k does not convert to B_k"))?;
        ensure(basis_invert(&b)? == t, || format!("k = {k}: B_k does not convert back to T_k"))?;
        ensure(t.coeff(k - 2).is_one() && b.coeff(k - 1).is_one(), || {
            format!("k = {k}: B_(k,k-1) = {}, T_(k,k-2) = {}", b.coeff(k - 1), t.coeff(k - 2))
        })?;
        let product = (2..k).fold(AElem::one(), |acc, j| &acc * chain.big_d(j));
        let product = KElem::from(product);
        ensure(t.coeff(0) == product && b.coeff(0) == product, || {
            format!("k = {k}: T_(k,0) = {}, B_(k,0) = {}, D_(k-1)...D_2 = {product}", t.coeff(0), b.coeff(0))
        })?;
        let expected_deg: usize = (2..k).map(|j| j << (j - 1)).sum();
        let got = chain.b(k)[0].deg();
        ensure(got == Some(expected_deg), || {
            format!("k = {k}: deg B_(k,0) = {got:?}, expected {expected_deg}")
        })?;
        lines.push(format!("k = {k}: T_(k,i) = S_(k-2,k-2-i)(D_2..D_(k-1)), B_(k,0) = T_(k,0) = D_(k-1)...D_2 OK"));
    }
    Ok(())
}

fn carlitz(max_k: usize, lines: &mut Lines) -> Result<()> {
    for n in 0..=MAX_MONIC_N {
        let d = carlitz_d(n);
        let m = monic_product(n)?;
        ensure(d == m, || {
            format!("n = {n}: d_n = {} but the monic product is {}", d.display_in('t'), m.display_in('t'))
        })?;
        ensure(d.deg() == Some(n << n), || format!("n = {n}: deg d_n = {:?}", d.deg()))?;
    }
    lines.push(format!("d_n = [n] d_(n-1)^2 = closed product = monic product for n <= {MAX_MONIC_N} OK"));
    lines.extend(carlitz_functional_check(max_k.max(8))?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("Symbols".parse::<Suite>().unwrap(), Suite::Symbols);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::EACH {
            let report = run_suite(suite, 4).unwrap();
            assert!(report.passed(), "{:?}", report.lines);
        }
        assert!(run_suite(Suite::Main, 1).is_err());
        assert!(run_suite(Suite::Main, 13).is_err());
    }

    #[test]
    fn random_elements_respect_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(random_a(&mut rng, 20).deg().unwrap_or(0) <= 20);
            assert!(!random_nonconstant_a(&mut rng, 5).is_constant());
        }
    }
}
