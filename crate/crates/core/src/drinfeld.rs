//! The Drinfeld module `ρ: A -> K{τ}` determined by
//! `ρ_x = x + (x^2 + x)τ + τ^2` and `ρ_y = y + (y^2 + y)τ + x(y^2 + y)τ^2 + τ^3`.

use rayon::prelude::*;

use crate::curve::{bracket_x, enumerate, AElem, EnumMode, KElem};
use crate::error::{Error, Result};
use crate::f2poly::BinaryPoly;
use crate::series::Symbols;
use crate::twisted::TwistedPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldGenerators {
    pub rho_x: TwistedPoly,
    pub rho_y: TwistedPoly,
}

impl DrinfeldGenerators {
    /// The generators with their known coefficients.
    pub fn standard() -> Self {
        let y1 = &(&AElem::y() * &AElem::y()) + &AElem::y();
        Self {
            rho_x: rho_x(),
            rho_y: TwistedPoly::from_a_coeffs([AElem::y(), y1.clone(), &AElem::x() * &y1, AElem::one()]),
        }
    }

    pub fn commute(&self) -> bool {
        &self.rho_x * &self.rho_y == &self.rho_y * &self.rho_x
    }
}

/// `ρ_x` with the normalization `x_1 = x^2 + x`.
pub fn rho_x() -> TwistedPoly {
    TwistedPoly::from_a_coeffs([AElem::x(), bracket_x(1), AElem::one()])
}

/// Solves for `ρ_y = y + y_1 τ + y_2 τ^2 + τ^3` from `ρ_x ρ_y = ρ_y ρ_x`.
///
/// With `y_1 ... y_{k-1}` known and `y_k` set to zero, the `τ^k` coefficient
/// of the commutator equals `y_k · [k]_x`, so each unknown is one exact
/// division in `A`.
pub fn derive_generators() -> Result<DrinfeldGenerators> {
    let rx = rho_x();
    let mut coeffs = vec![AElem::y(), AElem::zero(), AElem::zero(), AElem::one()];
    for k in 1..3 {
        let trial = TwistedPoly::from_a_coeffs(coeffs.iter().cloned());
        let commutator = &(&rx * &trial) + &(&trial * &rx);
        let c = commutator
            .coeff(k)
            .to_a()
            .ok_or_else(|| Error::Inconsistent(format!("commutator coefficient {k} is not in A")))?;
        let solved = c.exact_div_x(&bracket_x(k as u32).f)?.ok_or_else(|| {
            Error::Inconsistent(format!("[{k}]_x does not divide the degree-{k} commutator term {c}"))
        })?;
        coeffs[k] = solved;
    }
    let gens = DrinfeldGenerators {
        rho_x: rx,
        rho_y: TwistedPoly::from_a_coeffs(coeffs),
    };
    if !gens.commute() {
        return Err(Error::Inconsistent("derived generators do not commute".into()));
    }
    Ok(gens)
}

/// `ρ_a` from commuting with `ρ_x`: `ρ_{a,0} = a`, `ρ_{a,1} = a^2 + a` and
/// for `k >= 2`
///
/// `[k]_x ρ_{a,k} = [1]_x^(2^(k-1)) ρ_{a,k-1} + ρ_{a,k-2} + [1]_x ρ_{a,k-1}^2 + ρ_{a,k-2}^4`.
pub fn rho_recursive(a: &AElem) -> Result<TwistedPoly> {
    if a.is_constant() {
        return Ok(TwistedPoly::from_a_coeffs([a.clone()]));
    }
    let deg = a.deg().expect("nonconstant");
    let one_x = bracket_x(1);
    let mut coeffs = vec![a.clone(), &a.square() + a];
    let mut one_x_pow = one_x.clone();
    for k in 2..=deg + 1 {
        one_x_pow = one_x_pow.square();
        let (prev, prev2) = (&coeffs[k - 1], &coeffs[k - 2]);
        let mut num = &one_x_pow * prev;
        num += prev2;
        num += &(&one_x * &prev.square());
        num += &prev2.frobenius(2);
        let bracket = bracket_x(k as u32).f;
        let c = num.exact_div_x(&bracket)?.ok_or_else(|| {
            Error::Inconsistent(format!("rho_{{{a},{k}}} is not in A: [{k}]_x does not divide {num}"))
        })?;
        coeffs.push(c);
    }
    if !coeffs[deg].is_one() {
        return Err(Error::Inconsistent(format!(
            "rho_{a} has leading coefficient {} at tau^{deg}",
            coeffs[deg]
        )));
    }
    if !coeffs[deg + 1].is_zero() {
        return Err(Error::Inconsistent(format!("rho_{a} does not stop at tau^{deg}")));
    }
    coeffs.pop();
    Ok(TwistedPoly::from_a_coeffs(coeffs))
}

/// `ρ_a = f(ρ_x) + g(ρ_x)·ρ_y` for `a = f(x) + g(x)·y`, by Horner's rule.
pub fn rho_compose(a: &AElem) -> TwistedPoly {
    let gens = DrinfeldGenerators::standard();
    let horner = |p: &BinaryPoly| {
        let mut acc = TwistedPoly::zero();
        for e in (0..=p.deg().unwrap_or(0)).rev() {
            acc = &acc * &gens.rho_x;
            if p.coeff(e) {
                acc = &acc + &TwistedPoly::one();
            }
        }
        acc
    };
    let mut out = horner(&a.f);
    if !a.g.is_zero() {
        out = &out + &(&horner(&a.g) * &gens.rho_y);
    }
    out
}

/// `ρ_a` via the route that needs nothing but commutation with `ρ_x`.
pub fn rho(a: &AElem) -> Result<TwistedPoly> {
    rho_recursive(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoEntry {
    pub a: AElem,
    /// `ρ_{a,0}, ..., ρ_{a,max_deg}`, zero-padded past `deg(a)`.
    pub coeffs: Vec<AElem>,
}

/// Checks that all three routes to `ρ_a` agree for one element, given the
/// symbols `p_0 ... p_K`; returns the padded coefficients.
pub fn rho_three_ways(a: &AElem, symbols: &Symbols) -> Result<Vec<AElem>> {
    let order = symbols.p.len() - 1;
    let fail = |k: usize, what: &str| Error::Verification(format!("a = {a}, k = {k}: {what}"));

    let rec = rho_recursive(a)?;
    let comp = rho_compose(a);
    let deg = a.deg().unwrap_or(0);
    if rec.coeffs().len() > order + 1 {
        return Err(Error::Domain(format!("deg({a}) exceeds the symbol order {order}")));
    }
    let series = symbols.evaluate(a);
    let mut out = Vec::with_capacity(order + 1);
    for (k, pk) in series.iter().enumerate() {
        let r = rec.coeff(k);
        let c = comp.coeff(k);
        if r != c {
            return Err(fail(k, &format!("recursion gives {r}, composition gives {c}")));
        }
        if r != *pk {
            return Err(fail(k, &format!("recursion gives {r}, p_k(a) gives {pk}")));
        }
        let ra = r
            .to_a()
            .ok_or_else(|| fail(k, &format!("coefficient {r} is not in A")))?;
        if !a.is_zero() && k == deg && !ra.is_one() {
            return Err(fail(k, "leading coefficient is not 1"));
        }
        if k > deg && !ra.is_zero() {
            return Err(fail(k, "nonzero coefficient above deg(a)"));
        }
        out.push(ra);
    }
    Ok(out)
}

/// `ρ_a` for every `a ∈ A_{<max_deg+1}`, each checked three ways: the
/// commutation recursion, composition of the generators, and `p_k(a)`.
pub fn rho_coefficient_table(max_deg: usize) -> Result<Vec<RhoEntry>> {
    if max_deg < 2 {
        return Err(Error::Domain(format!("max_deg must be at least 2, got {max_deg}")));
    }
    let symbols = Symbols::new(max_deg)?;
    enumerate(max_deg + 1, EnumMode::Below)?
        .into_par_iter()
        .map(|a| {
            let coeffs = rho_three_ways(&a, &symbols)?;
            Ok(RhoEntry { a, coeffs })
        })
        .collect()
}

/// `ρ_a` coefficients as elements of `K`, zero-padded to `order`.
pub fn padded(p: &TwistedPoly, order: usize) -> Vec<KElem> {
    (0..=order).map(|k| p.coeff(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::Degree;

    fn a(s: &str) -> AElem {
        s.parse().unwrap()
    }

    fn tp(cs: &[&str]) -> TwistedPoly {
        TwistedPoly::from_a_coeffs(cs.iter().map(|s| a(s)))
    }

    #[test]
    fn derived_generators() {
        let g = derive_generators().unwrap();
        assert_eq!(g.rho_y.coeff(1), KElem::from(a("y^2+y")));
        assert_eq!(g.rho_y.coeff(2), KElem::from(a("x*(y^2+y)")));
        assert_eq!(g, DrinfeldGenerators::standard());
        assert!(g.commute());
    }

    #[test]
    fn recursion_on_generators() {
        assert_eq!(rho_recursive(&AElem::x()).unwrap(), tp(&["x", "x^2+x", "1"]));
        assert_eq!(
            rho_recursive(&AElem::y()).unwrap(),
            tp(&["y", "y^2+y", "x*(y^2+y)", "1"])
        );
        assert_eq!(rho_recursive(&AElem::one()).unwrap(), TwistedPoly::one());
        assert!(rho_recursive(&AElem::zero()).unwrap().is_zero());
    }

    #[test]
    fn composition_route() {
        let x2 = rho_compose(&a("x^2"));
        assert_eq!(x2, &rho_x() * &rho_x());
        assert_eq!(x2.tau_degree(), Degree::Finite(4));
        assert!(x2.leading().unwrap().is_one());
        assert_eq!(
            rho_compose(&a("x+y")),
            tp(&["x+y", "x^2+x+y^2+y", "1+x*(y^2+y)", "1"])
        );
        let g = DrinfeldGenerators::standard();
        assert_eq!(rho_compose(&a("x*y")), &g.rho_x * &g.rho_y);
        assert_eq!(rho_compose(&a("x*y")), &g.rho_y * &g.rho_x);
    }

    #[test]
    fn routes_agree_on_small_elements() {
        let table = rho_coefficient_table(3).unwrap();
        assert_eq!(table.len(), 8);
        for entry in &table {
            if let Some(d) = entry.a.deg() {
                assert!(entry.coeffs[d].is_one());
                assert!(entry.coeffs[d + 1..].iter().all(AElem::is_zero));
            }
        }
    }
}
