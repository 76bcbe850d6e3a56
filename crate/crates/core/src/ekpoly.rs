//! The additive polynomials `e_k(w) = Π_{a ∈ A_{<k}} (w + a)`, the products
//! `D_k = e_k(t_k)`, their coefficients in the `w` basis (`B_{k,i}`) and the
//! `[1]_w` basis (`T_{k,i}`), the twisted symmetric sums `S_{n,r}`, and the
//! identities tying `d_k`, `ℓ_k` and `D_k` together.
//!
//! Additive polynomials are stored by 2-power exponent index: `e_k` has
//! `2^(k-1)` roots but only `k` coefficients.

use std::fmt;

use rayon::prelude::*;

use crate::curve::{enumerate, t_elem, AElem, EnumMode, KElem};
use crate::error::{Error, Result};
use crate::series::{d_seq, ell_seq, Symbols};

/// Largest `k` for which the literal products are expanded.
pub const MAX_BRUTE_K: usize = 10;

/// Largest `k` accepted by the recursive routines.
pub const MAX_K: usize = 16;

/// `Σ c_i w^(2^i)`; trailing zero coefficients are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AddPoly {
    coeffs: Vec<KElem>,
}

impl AddPoly {
    pub fn new(mut coeffs: Vec<KElem>) -> Self {
        while coeffs.last().is_some_and(KElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_a_coeffs(coeffs: impl IntoIterator<Item = AElem>) -> Self {
        Self::new(coeffs.into_iter().map(KElem::from).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The polynomial `w`.
    pub fn identity() -> Self {
        Self::new(vec![KElem::one()])
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> KElem {
        self.coeffs.get(i).cloned().unwrap_or_else(KElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients as elements of `A`, if all are integral.
    pub fn a_coeffs(&self) -> Option<Vec<AElem>> {
        self.coeffs.iter().map(KElem::to_a).collect()
    }

    pub fn eval(&self, w: &KElem) -> KElem {
        let mut acc = KElem::zero();
        let mut wp = w.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                wp = wp.square();
            }
            if !c.is_zero() {
                acc += &(c * &wp);
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &KElem) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `P(w)^2`, itself additive: `Σ c_i^2 w^(2^(i+1))`.
    pub fn square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![KElem::zero()];
        coeffs.extend(self.coeffs.iter().map(KElem::square));
        Self::new(coeffs)
    }
}

impl fmt::Display for AddPoly {
    /// Descending, `(c)*w^(2^i)` with the exponent written out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})*w")?,
                _ => write!(f, "({c})*w^{}", 1u64 << i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AddPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AddPoly({self})")
    }
}

/// `Σ c_i [1]_w^(2^i)` with `[1]_w = w^2 + w`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OneBasisPoly {
    coeffs: Vec<KElem>,
}

impl OneBasisPoly {
    pub fn new(mut coeffs: Vec<KElem>) -> Self {
        while coeffs.last().is_some_and(KElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> KElem {
        self.coeffs.get(i).cloned().unwrap_or_else(KElem::zero)
    }
}

/// `B_i = T_i + T_{i-1}`, since `[1]_w^(2^i) = w^(2^(i+1)) + w^(2^i)`.
pub fn basis_convert(p: &OneBasisPoly) -> AddPoly {
    let n = p.coeffs.len();
    AddPoly::new(
        (0..=n)
            .map(|i| {
                let lo = if i > 0 { p.coeff(i - 1) } else { KElem::zero() };
                &p.coeff(i) + &lo
            })
            .collect(),
    )
}

/// Inverse of [`basis_convert`]. Only polynomials vanishing at `w = 1`
/// (coefficient sum zero) lie in the span of the `[1]_w^(2^i)`.
pub fn basis_invert(p: &AddPoly) -> Result<OneBasisPoly> {
    let mut t: Vec<KElem> = Vec::with_capacity(p.coeffs.len());
    let mut prev = KElem::zero();
    for c in p.coeffs.iter().take(p.coeffs.len().saturating_sub(1)) {
        prev = c + &prev;
        t.push(prev.clone());
    }
    let out = OneBasisPoly::new(t);
    if basis_convert(&out) != *p {
        return Err(Error::Domain(
            "polynomial is not a combination of [1]_w^(2^i)".into(),
        ));
    }
    Ok(out)
}

/// `[k]_w = w^(2^k) + w`.
pub fn bracket_w(k: u32, w: &KElem) -> KElem {
    &w.frobenius(k) + w
}

/// Expands `Π_{a ∈ A_{<k}} (w + a)` as a dense polynomial in `w` and reads
/// off the coefficients of the 2-power exponents.
pub fn ek_bruteforce(k: usize) -> Result<AddPoly> {
    if k == 0 {
        return Err(Error::Domain("e_0 is not defined".into()));
    }
    if k > MAX_BRUTE_K {
        return Err(Error::Budget {
            what: "brute-force e_k degree",
            got: k,
            max: MAX_BRUTE_K,
        });
    }
    let roots = enumerate(k, EnumMode::Below)?;
    // dense[i] is the coefficient of w^i
    let mut dense = vec![AElem::one()];
    for a in &roots {
        let mut next = vec![AElem::zero(); dense.len() + 1];
        for (i, c) in dense.iter().enumerate() {
            next[i + 1] += c;
            if !a.is_zero() {
                next[i] += &(c * a);
            }
        }
        dense = next;
    }
    let mut coeffs = Vec::new();
    for (i, c) in dense.iter().enumerate() {
        if i.is_power_of_two() {
            coeffs.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::Inconsistent(format!(
                "e_{k} has a nonzero coefficient at the non-additive exponent {i}"
            )));
        }
    }
    Ok(AddPoly::from_a_coeffs(coeffs))
}

/// `B_{k,i}` and `D_k` for `2 <= k <= kmax`, via `e_k = e_{k-1}^2 + D_{k-1} e_{k-1}`.
#[derive(Clone, Debug)]
pub struct EkChain {
    b: Vec<Vec<AElem>>,
    d: Vec<AElem>,
}

impl EkChain {
    pub fn new(kmax: usize) -> Result<Self> {
        if kmax < 2 {
            return Err(Error::Domain(format!("the e_k chain starts at k = 2, got {kmax}")));
        }
        if kmax > MAX_K {
            return Err(Error::Budget {
                what: "k",
                got: kmax,
                max: MAX_K,
            });
        }
        let mut b: Vec<Vec<AElem>> = vec![Vec::new(), vec![AElem::one()]];
        let mut d: Vec<AElem> = vec![AElem::zero(), AElem::zero()];
        b.push(vec![AElem::one(), AElem::one()]);
        d.push(eval_a(&b[2], &t_elem(2)?));
        for k in 3..=kmax {
            let prev = &b[k - 1];
            let dk1 = &d[k - 1];
            let coeffs: Vec<AElem> = (0..k)
                .map(|i| {
                    let mut c = prev.get(i).map(|p| dk1 * p).unwrap_or_default();
                    if i > 0 {
                        c += &prev[i - 1].square();
                    }
                    c
                })
                .collect();
            d.push(eval_a(&coeffs, &t_elem(k)?));
            b.push(coeffs);
        }
        Ok(Self { b, d })
    }

    pub fn kmax(&self) -> usize {
        self.b.len() - 1
    }

    /// `B_{k,0}, ..., B_{k,k-1}`.
    pub fn b(&self, k: usize) -> &[AElem] {
        &self.b[k]
    }

    /// `D_k` for `k >= 2`.
    pub fn big_d(&self, k: usize) -> &AElem {
        assert!(k >= 2, "D_k starts at k = 2");
        &self.d[k]
    }

    /// `D_2, ..., D_{k}`.
    pub fn big_d_range(&self, k: usize) -> Vec<KElem> {
        (2..=k).map(|j| KElem::from(self.d[j].clone())).collect()
    }

    pub fn e(&self, k: usize) -> AddPoly {
        AddPoly::from_a_coeffs(self.b[k].iter().cloned())
    }
}

fn eval_a(coeffs: &[AElem], w: &AElem) -> AElem {
    let mut acc = AElem::zero();
    let mut wp = w.clone();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            wp = wp.square();
        }
        acc += &(c * &wp);
    }
    acc
}

/// `e_k` from the recursion seeded with `e_2 = w^2 + w`; `e_1 = w`.
pub fn ek_recursive(k: usize) -> Result<AddPoly> {
    match k {
        0 => Err(Error::Domain("e_0 is not defined".into())),
        1 => Ok(AddPoly::identity()),
        _ => Ok(EkChain::new(k)?.e(k)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DkMode {
    /// `e_k(t_k)`.
    Eval,
    /// The literal product over `A_k`.
    Brute,
}

/// `D_k = e_k(t_k) = Π_{a ∈ A_k} a`.
pub fn big_d(k: usize, mode: DkMode) -> Result<AElem> {
    if k < 2 {
        return Err(Error::Domain(format!("D_k is defined for k >= 2, got k = {k}")));
    }
    match mode {
        DkMode::Eval => Ok(EkChain::new(k)?.big_d(k).clone()),
        DkMode::Brute => {
            if k > MAX_BRUTE_K {
                return Err(Error::Budget {
                    what: "brute-force D_k degree",
                    got: k,
                    max: MAX_BRUTE_K,
                });
            }
            Ok(enumerate(k, EnumMode::Exact)?
                .into_par_iter()
                .reduce(AElem::one, |a, b| &a * &b))
        }
    }
}

/// `B_{k,0}, ..., B_{k,k-1}`, the coefficients of `e_k` in the `w` basis.
pub fn b_coeffs(k: usize) -> Result<Vec<AElem>> {
    if k < 2 {
        return Err(Error::Domain(format!("B_k is computed for k >= 2, got k = {k}")));
    }
    Ok(EkChain::new(k)?.b(k).to_vec())
}

/// Largest `n` for which `S_{n,r}` is enumerated term by term.
pub const MAX_SYM_N: usize = 20;

/// `S_{n,r}` summed term by term over `n >= i_1 > ... > i_r >= 1` of
/// `Π_j x_{i_j}^(2^(n-j+1-i_j))`.
pub fn s_sym_direct(r: usize, values: &[KElem]) -> Result<KElem> {
    let n = values.len();
    if n > MAX_SYM_N {
        return Err(Error::Budget {
            what: "S_{n,r} length",
            got: n,
            max: MAX_SYM_N,
        });
    }
    if r > n {
        return Ok(KElem::zero());
    }
    let mut total = KElem::zero();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let mut term = KElem::one();
        // indices in decreasing order: i_1 > i_2 > ... (1-based)
        for (j0, i) in (1..=n).rev().filter(|i| (mask >> (i - 1)) & 1 == 1).enumerate() {
            let j = j0 + 1;
            let exp = n + 1 - j - i;
            term = &term * &values[i - 1].frobenius(exp as u32);
        }
        total += &term;
    }
    Ok(total)
}

/// `S_{n,r}` through `S_{m+1,s} = S_{m,s}^2 + x_{m+1} S_{m,s-1}`.
pub fn s_sym_recursive(r: usize, values: &[KElem]) -> KElem {
    let n = values.len();
    if r > n {
        return KElem::zero();
    }
    // row[s] = S_{m,s} for the current m
    let mut row = vec![KElem::zero(); r + 1];
    row[0] = KElem::one();
    for (m, v) in values.iter().enumerate() {
        let mut next = vec![KElem::zero(); r + 1];
        for s in 0..=r.min(m + 1) {
            let mut c = row[s].square();
            if s > 0 {
                c += &(v * &row[s - 1]);
            }
            next[s] = c;
        }
        row = next;
    }
    row[r].clone()
}

/// `S_{n,r}(values)` with `n = values.len()`, computed both ways.
pub fn s_sym(n: usize, r: usize, values: &[KElem]) -> Result<KElem> {
    if values.len() != n {
        return Err(Error::Domain(format!(
            "S_{{{n},{r}}} takes {n} values, got {}",
            values.len()
        )));
    }
    let direct = s_sym_direct(r, values)?;
    let recursive = s_sym_recursive(r, values);
    if direct != recursive {
        return Err(Error::Inconsistent(format!(
            "S_{{{n},{r}}}: direct sum {direct} != recursion {recursive}"
        )));
    }
    Ok(direct)
}

/// `T_{k,i} = S_{k-2,k-2-i}(D_2, ..., D_{k-1})` from a prebuilt chain.
pub fn t_coeffs_from(chain: &EkChain, k: usize) -> Result<OneBasisPoly> {
    let ds = chain.big_d_range(k - 1);
    let n = k - 2;
    let t = (0..=n)
        .map(|i| s_sym(n, n - i, &ds))
        .collect::<Result<Vec<_>>>()?;
    Ok(OneBasisPoly::new(t))
}

/// `T_{k,0}, ..., T_{k,k-2}`, checked against `e_k` and against
/// `T_{k,i} = T_{k-1,i-1}^2 + D_{k-1} T_{k-1,i}`.
pub fn t_coeffs(k: usize) -> Result<OneBasisPoly> {
    if k < 2 {
        return Err(Error::Domain(format!("T_k is defined for k >= 2, got k = {k}")));
    }
    let chain = EkChain::new(k)?;
    let t = t_coeffs_from(&chain, k)?;
    if basis_convert(&t) != chain.e(k) {
        return Err(Error::Inconsistent(format!(
            "T_{k} does not convert to the coefficients of e_{k}"
        )));
    }
    if k >= 3 {
        let prev = t_coeffs_from(&chain, k - 1)?;
        let dk1 = KElem::from(chain.big_d(k - 1).clone());
        let stepped = OneBasisPoly::new(
            (0..=k - 2)
                .map(|i| {
                    let mut c = &dk1 * &prev.coeff(i);
                    if i > 0 {
                        c += &prev.coeff(i - 1).square();
                    }
                    c
                })
                .collect(),
        );
        if stepped != t {
            return Err(Error::Inconsistent(format!(
                "T_{k} disagrees with the step from T_{}",
                k - 1
            )));
        }
    }
    Ok(t)
}

/// `R_k(w) = p_k(w) / e_k(w) = e_k(w)/d_k + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionCheck {
    pub k: usize,
    /// The additive part `e_k / d_k` of the quotient.
    pub quotient_additive: AddPoly,
    /// `C = 1/d_{k-1} + B_{k,k-2}^2 / d_k`.
    pub c: KElem,
    /// `1/D_k + D_k/d_k`, which must equal `c`.
    pub c_from_evaluation: KElem,
}

/// Checks `p_k = e_k^2/d_k + C e_k` coefficientwise using shared tables.
pub fn division_check_with(symbols: &Symbols, chain: &EkChain, k: usize) -> Result<DivisionCheck> {
    let dk = &symbols.d[k];
    let inv_dk = dk.inv()?;
    let bk = chain.b(k);
    let big_dk = KElem::from(chain.big_d(k).clone());
    let c = &symbols.d[k - 1].inv()? + &(&KElem::from(bk[k - 2].square()) * &inv_dk);
    let c_eval = &big_dk.inv()? + &(&big_dk * &inv_dk);
    if c != c_eval {
        return Err(Error::Verification(format!(
            "k = {k}: C from the quotient ({c}) != 1/D_k + D_k/d_k ({c_eval})"
        )));
    }
    let ek = chain.e(k);
    let rhs = ek.square().scale(&inv_dk).add(&ek.scale(&c));
    let pk = &symbols.p[k];
    for i in 0..=k {
        let (l, r) = (pk.coeff(i), rhs.coeff(i));
        if l != r {
            return Err(Error::Verification(format!(
                "k = {k}, coefficient of w^{}: p_k has {l}, e_k^2/d_k + C e_k has {r}",
                1u64 << i
            )));
        }
    }
    Ok(DivisionCheck {
        k,
        quotient_additive: ek.scale(&inv_dk),
        c,
        c_from_evaluation: c_eval,
    })
}

pub fn division_theorem_check(k: usize) -> Result<DivisionCheck> {
    if k < 2 {
        return Err(Error::Domain(format!("the division identity needs k >= 2, got {k}")));
    }
    let symbols = Symbols::new(k)?;
    let chain = EkChain::new(k)?;
    division_check_with(&symbols, &chain, k)
}

/// One row of the table relating `d_k`, `ℓ_k` and `D_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainRow {
    pub k: usize,
    pub d: KElem,
    pub ell: KElem,
    pub big_d: AElem,
}

/// Rebuilds `d_k` and `ℓ_k` from `D_2, ..., D_k` alone:
///
/// - `d_2 = D_2`
/// - `d_k = D_k d_{k-1} / (d_{k-1} + D_k) · (1 + D_k + D_{k-1}^2 + ... + D_2^(2^(k-2)))`
/// - `ℓ_k = D_k d_k / ((d_k + D_k^2) · D_{k-1} ··· D_2)`
///
/// and checks both against the coefficient recursions, and the multiplier
/// against `B_{k+1,k-1}`.
pub fn main_theorem_table(kmax: usize) -> Result<Vec<MainRow>> {
    if kmax < 2 {
        return Err(Error::Domain(format!("the table starts at k = 2, got {kmax}")));
    }
    let chain = EkChain::new(kmax + 1)?;
    let d_rec = d_seq(kmax)?;
    let ell_rec = ell_seq(kmax)?;
    let big: Vec<KElem> = (0..=kmax)
        .map(|k| {
            if k >= 2 {
                KElem::from(chain.big_d(k).clone())
            } else {
                KElem::zero()
            }
        })
        .collect();

    let mut rows = Vec::with_capacity(kmax - 1);
    let mut d_prev = KElem::zero();
    let mut d_product = KElem::one(); // D_2 ··· D_{k-1}
    for k in 2..=kmax {
        // 1 + D_k + D_{k-1}^2 + ... + D_2^(2^(k-2))
        let mut multiplier = KElem::one();
        for (j, dj) in big.iter().enumerate().take(k + 1).skip(2) {
            multiplier += &dj.frobenius((k - j) as u32);
        }
        let b_entry = KElem::from(chain.b(k + 1)[k - 1].clone());
        if multiplier != b_entry {
            return Err(Error::Verification(format!(
                "k = {k}: multiplier {multiplier} != B_{{{},{}}} = {b_entry}",
                k + 1,
                k - 1
            )));
        }

        let d = if k == 2 {
            big[2].clone()
        } else {
            let num = &(&big[k] * &d_prev) * &multiplier;
            num.checked_div(&(&d_prev + &big[k]))?
        };
        if d != d_rec[k] {
            return Err(Error::Verification(format!(
                "k = {k}: d_k from D values is {d}, recursion gives {}",
                d_rec[k]
            )));
        }

        let ell = (&big[k] * &d).checked_div(&(&(&d + &big[k].square()) * &d_product))?;
        if ell != ell_rec[k] {
            return Err(Error::Verification(format!(
                "k = {k}: ell_k from D values is {ell}, recursion gives {}",
                ell_rec[k]
            )));
        }

        rows.push(MainRow {
            k,
            d: d.clone(),
            ell,
            big_d: chain.big_d(k).clone(),
        });
        d_product = &d_product * &big[k];
        d_prev = d;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> KElem {
        s.parse().unwrap()
    }

    fn a(s: &str) -> AElem {
        s.parse().unwrap()
    }

    fn add(cs: &[&str]) -> AddPoly {
        AddPoly::new(cs.iter().map(|s| k(s)).collect())
    }

    #[test]
    fn brackets_in_w() {
        let w = k("x*y+x");
        assert_eq!(bracket_w(1, &w), &w.square() + &w);
        assert_eq!(bracket_w(2, &KElem::x()), k("x^4+x"));
        let b1 = bracket_w(1, &KElem::x());
        assert_eq!(bracket_w(2, &KElem::x()), &b1.square() + &b1);
        assert!(bracket_w(0, &w).is_zero());
    }

    #[test]
    fn brute_force_products() {
        assert_eq!(ek_bruteforce(1).unwrap(), add(&["1"]));
        assert_eq!(ek_bruteforce(2).unwrap(), add(&["1", "1"]));
        assert_eq!(ek_bruteforce(3).unwrap(), add(&["x^2+x", "x^2+x+1", "1"]));
        assert!(matches!(ek_bruteforce(11), Err(Error::Budget { .. })));
        assert!(ek_bruteforce(0).is_err());
    }

    #[test]
    fn recursive_products() {
        assert_eq!(ek_recursive(2).unwrap(), add(&["1", "1"]));
        assert_eq!(ek_recursive(3).unwrap(), add(&["x^2+x", "x^2+x+1", "1"]));
        for kk in 1..=7 {
            assert_eq!(ek_recursive(kk).unwrap(), ek_bruteforce(kk).unwrap(), "k = {kk}");
        }
    }

    #[test]
    fn products_of_degree_k_elements() {
        assert_eq!(big_d(2, DkMode::Eval).unwrap(), a("x^2+x"));
        assert_eq!(big_d(3, DkMode::Eval).unwrap(), a("x^6+x^5+x^4+x^3+x^2+x+1"));
        assert_eq!(big_d(3, DkMode::Brute).unwrap(), a("x^6+x^5+x^4+x^3+x^2+x+1"));
        for kk in 2..=7 {
            assert_eq!(big_d(kk, DkMode::Eval).unwrap(), big_d(kk, DkMode::Brute).unwrap());
        }
        assert!(big_d(1, DkMode::Eval).is_err());
        assert!(matches!(big_d(11, DkMode::Brute), Err(Error::Budget { .. })));
    }

    #[test]
    fn w_basis_coefficients() {
        assert_eq!(b_coeffs(3).unwrap(), vec![a("x^2+x"), a("x^2+x+1"), AElem::one()]);
        let chain = EkChain::new(8).unwrap();
        for kk in 2..=8 {
            let b = chain.b(kk);
            assert_eq!(b[kk - 1], AElem::one());
            let prod = (2..kk).fold(AElem::one(), |acc, j| &acc * chain.big_d(j));
            assert_eq!(b[0], prod);
        }
    }

    #[test]
    fn symmetric_sums() {
        let v: Vec<KElem> = ["x", "y+1", "x^2*y", "1/(x+1)"].iter().map(|s| k(s)).collect();
        assert_eq!(s_sym(4, 0, &v).unwrap(), KElem::one());
        let s1 = (0..4).fold(KElem::zero(), |acc, i| &acc + &v[i].frobenius((3 - i) as u32));
        assert_eq!(s_sym(4, 1, &v).unwrap(), s1);
        assert_eq!(s_sym(2, 2, &v[..2]).unwrap(), &v[0] * &v[1]);
        assert!(s_sym(4, 5, &v).unwrap().is_zero());
        assert!(s_sym(3, 1, &v).is_err());
    }

    #[test]
    fn one_basis_coefficients() {
        let t3 = t_coeffs(3).unwrap();
        assert_eq!(t3.coeffs(), &[k("x^2+x"), KElem::one()]);
        for kk in 2..=7 {
            let t = t_coeffs(kk).unwrap();
            assert_eq!(t.coeff(kk - 2), KElem::one());
            assert_eq!(t.coeff(0), KElem::from(b_coeffs(kk).unwrap()[0].clone()));
        }
    }

    #[test]
    fn basis_conversion() {
        let t0 = k("x*y");
        assert_eq!(
            basis_convert(&OneBasisPoly::new(vec![t0.clone()])),
            AddPoly::new(vec![t0.clone(), t0])
        );
        let t3 = OneBasisPoly::new(vec![k("x^2+x"), KElem::one()]);
        assert_eq!(basis_convert(&t3), add(&["x^2+x", "x^2+x+1", "1"]));
        assert_eq!(basis_invert(&basis_convert(&t3)).unwrap(), t3);
        assert!(basis_invert(&add(&["1"])).is_err());
    }

    #[test]
    fn division_identity_small_k() {
        let check = division_theorem_check(2).unwrap();
        assert_eq!(check.c, k("(x^2+x+1)/(x^2+x)"));
        assert_eq!(check.c, check.c_from_evaluation);
        let p2 = Symbols::new(2).unwrap().p[2].clone();
        assert_eq!(p2, add(&["(x^2+x+1)/(x^2+x)", "1", "1/(x^2+x)"]));
        for kk in 3..=6 {
            division_theorem_check(kk).unwrap();
        }
    }

    #[test]
    fn main_theorem_small_table() {
        let rows = main_theorem_table(4).unwrap();
        assert_eq!(rows[0].d, k("x^2+x"));
        assert_eq!(rows[0].ell, k("(x^2+x)/(x^2+x+1)"));
        assert_eq!(rows[0].big_d, a("x^2+x"));
        assert_eq!(rows[1].d, k("(x^8+x)*(x^2+x)/(x^2+x+1)"));
        assert_eq!(rows.len(), 3);
    }

    #[test]
    fn constant_value_on_degree_k_elements() {
        let chain = EkChain::new(6).unwrap();
        for kk in 2..=6 {
            let e = chain.e(kk);
            let dk = KElem::from(chain.big_d(kk).clone());
            for x in enumerate(kk, EnumMode::Exact).unwrap() {
                assert_eq!(e.eval(&KElem::from(x)), dk);
            }
        }
    }
}
