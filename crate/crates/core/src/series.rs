//! Truncated additive series `Σ c_i z^(2^i)`: the exponential and logarithm
//! of the Drinfeld module, their composition, and the symbols `p_k`.
//!
//! Every routine takes an explicit truncation order. Coefficients grow
//! doubly exponentially, so nothing is computed lazily.

use crate::curve::{bracket_x, AElem, KElem};
use crate::ekpoly::AddPoly;
use crate::error::{Error, Result};
use crate::twisted::TwistedPoly;

/// `c_0 z + c_1 z^2 + c_2 z^4 + ... + c_K z^(2^K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<KElem>,
}

impl QSeries {
    pub fn new(coeffs: Vec<KElem>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the z coefficient");
        Self { coeffs }
    }

    /// The series `z`, truncated at `order`.
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![KElem::zero(); order + 1];
        coeffs[0] = KElem::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &KElem {
        &self.coeffs[i]
    }

    /// Index of the last retained coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Value of the truncated series at `z`.
    pub fn eval(&self, z: &KElem) -> KElem {
        AddPoly::new(self.coeffs.clone()).eval(z)
    }

    /// `c · s(z)`, coefficientwise.
    pub fn scale(&self, c: &KElem) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `s(c·z)`: the coefficient of `z^(2^i)` picks up `c^(2^i)`.
    pub fn scale_argument(&self, c: &KElem) -> Self {
        let mut cp = c.clone();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if i > 0 {
                    cp = cp.square();
                }
                x * &cp
            })
            .collect();
        Self::new(coeffs)
    }

    /// `p(s(z))` truncated at the order of `s`.
    pub fn apply_twisted(&self, p: &TwistedPoly) -> Self {
        let order = self.order();
        let mut out = vec![KElem::zero(); order + 1];
        let mut twisted = self.coeffs.clone();
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            if i > 0 {
                for t in twisted.iter_mut() {
                    *t = t.square();
                }
            }
            if c.is_zero() {
                continue;
            }
            for (j, t) in twisted.iter().enumerate().take(order + 1 - i) {
                out[i + j] += &(c * t);
            }
        }
        Self::new(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Exp,
    Log,
}

fn bracket(j: usize) -> KElem {
    KElem::from(bracket_x(j as u32))
}

/// Divides by `[j]_x`, which is nonzero for `j >= 1`.
fn over_bracket(num: KElem, j: usize) -> KElem {
    num.checked_div(&bracket(j)).expect("[j]_x is nonzero for j >= 1")
}

/// Exponential coefficients from `a_0`: `a_1 = a_0^2` and
/// `a_j = ([1]_x a_{j-1}^2 + a_{j-2}^4) / [j]_x`.
pub fn exp_coeffs_from(a0: &KElem, order: usize) -> QSeries {
    let one_x = bracket(1);
    let mut a = vec![a0.clone()];
    if order >= 1 {
        a.push(a0.square());
    }
    for j in 2..=order {
        let num = &(&one_x * &a[j - 1].square()) + &a[j - 2].frobenius(2);
        a.push(over_bracket(num, j));
    }
    QSeries::new(a)
}

/// Logarithm coefficients from `b_0`: `b_1 = b_0` and
/// `b_j = ([1]_x^(2^(j-1)) b_{j-1} + b_{j-2}) / [j]_x`.
pub fn log_coeffs_from(b0: &KElem, order: usize) -> QSeries {
    let mut b = vec![b0.clone()];
    if order >= 1 {
        b.push(b0.clone());
    }
    let mut one_x_pow = bracket(1);
    for j in 2..=order {
        one_x_pow = one_x_pow.square();
        let num = &(&one_x_pow * &b[j - 1]) + &b[j - 2];
        b.push(over_bracket(num, j));
    }
    QSeries::new(b)
}

/// Normalized exponential coefficients `a_j = 1/d_j`.
pub fn exp_coeffs(order: usize) -> QSeries {
    exp_coeffs_from(&KElem::one(), order)
}

/// Normalized logarithm coefficients `b_j = 1/ℓ_j`.
pub fn log_coeffs(order: usize) -> QSeries {
    log_coeffs_from(&KElem::one(), order)
}

/// `d_0 = d_1 = 1`, `d_j = [j]_x d_{j-1}^2 d_{j-2}^4 / ([1]_x d_{j-2}^4 + d_{j-1}^2)`,
/// each checked against the exponential coefficient `a_j`.
pub fn d_seq(order: usize) -> Result<Vec<KElem>> {
    let one_x = bracket(1);
    let mut d = vec![KElem::one()];
    if order >= 1 {
        d.push(KElem::one());
    }
    for j in 2..=order {
        let sq = d[j - 1].square();
        let quad = d[j - 2].frobenius(2);
        let num = &(&bracket(j) * &sq) * &quad;
        let den = &(&one_x * &quad) + &sq;
        d.push(num.checked_div(&den)?);
    }
    let a = exp_coeffs(order);
    for (j, (dj, aj)) in d.iter().zip(a.coeffs()).enumerate() {
        if !(dj * aj).is_one() {
            return Err(Error::Inconsistent(format!("d_{j} * a_{j} != 1")));
        }
    }
    Ok(d)
}

/// `ℓ_0 = ℓ_1 = 1`, `ℓ_j = [j]_x ℓ_{j-1} ℓ_{j-2} / ([1]_x^(2^(j-1)) ℓ_{j-2} + ℓ_{j-1})`,
/// each checked against the logarithm coefficient `b_j`.
pub fn ell_seq(order: usize) -> Result<Vec<KElem>> {
    let mut l = vec![KElem::one()];
    if order >= 1 {
        l.push(KElem::one());
    }
    let mut one_x_pow = bracket(1);
    for j in 2..=order {
        one_x_pow = one_x_pow.square();
        let num = &(&bracket(j) * &l[j - 1]) * &l[j - 2];
        let den = &(&one_x_pow * &l[j - 2]) + &l[j - 1];
        l.push(num.checked_div(&den)?);
    }
    let b = log_coeffs(order);
    for (j, (lj, bj)) in l.iter().zip(b.coeffs()).enumerate() {
        if !(lj * bj).is_one() {
            return Err(Error::Inconsistent(format!("ell_{j} * b_{j} != 1")));
        }
    }
    Ok(l)
}

/// The series with initial coefficient `c0`, obtained by rerunning the
/// recursion, and checked against the rescaling it must equal: the
/// logarithm recursion is linear, so `log(z, c0) = c0·log(z)`; the
/// exponential recursion has weight `2^j` in its `j`-th term, so
/// `e(z, c0) = e(c0·z)`.
pub fn scale_series(kind: SeriesKind, c0: &KElem, order: usize) -> Result<QSeries> {
    if c0.is_zero() {
        return Err(Error::Domain("initial coefficient must be nonzero".into()));
    }
    let (rerun, expected) = match kind {
        SeriesKind::Exp => (
            exp_coeffs_from(c0, order),
            exp_coeffs(order).scale_argument(c0),
        ),
        SeriesKind::Log => (log_coeffs_from(c0, order), log_coeffs(order).scale(c0)),
    };
    if rerun != expected {
        return Err(Error::Inconsistent(format!(
            "{kind:?} series rerun from {c0} disagrees with the rescaled normalized series"
        )));
    }
    Ok(rerun)
}

/// Whether `s(z, c0) = c0 · s(z)` holds at `z` for the truncated series.
pub fn scales_linearly(kind: SeriesKind, c0: &KElem, z: &KElem, order: usize) -> bool {
    let (scaled, normalized) = match kind {
        SeriesKind::Exp => (exp_coeffs_from(c0, order), exp_coeffs(order)),
        SeriesKind::Log => (log_coeffs_from(c0, order), log_coeffs(order)),
    };
    scaled.eval(z) == c0 * &normalized.eval(z)
}

/// Coefficients of `outer(a · inner(z))` up to `z^(2^order)`:
/// `Σ_{j<=k} outer_j · a^(2^j) · inner_{k-j}^(2^j)`.
pub fn compose_scaled(outer: &QSeries, a: &KElem, inner: &QSeries, order: usize) -> Result<QSeries> {
    if outer.order() < order || inner.order() < order {
        return Err(Error::Domain(format!(
            "composition to order {order} needs both series to that order"
        )));
    }
    let mut out = vec![KElem::zero(); order + 1];
    // row j holds inner_i^(2^j)
    let mut twisted: Vec<KElem> = inner.coeffs()[..=order].to_vec();
    let mut ap = a.clone();
    for j in 0..=order {
        if j > 0 {
            for t in twisted.iter_mut() {
                *t = t.square();
            }
            ap = ap.square();
        }
        let lead = outer.coeff(j) * &ap;
        if lead.is_zero() {
            continue;
        }
        for (k, slot) in out.iter_mut().enumerate().skip(j) {
            *slot += &(&lead * &twisted[k - j]);
        }
    }
    Ok(QSeries::new(out))
}

/// The symbol `p_k(w) = Σ_{j<=k} w^(2^j) / (d_j ℓ_{k-j}^(2^j))`.
pub fn pk_symbol(k: usize, d: &[KElem], ell: &[KElem]) -> Result<AddPoly> {
    if d.len() <= k || ell.len() <= k {
        return Err(Error::Domain(format!("p_{k} needs d and ell up to index {k}")));
    }
    let coeffs = (0..=k)
        .map(|j| (&d[j] * &ell[k - j].frobenius(j as u32)).inv())
        .collect::<Result<Vec<_>>>()?;
    Ok(AddPoly::new(coeffs))
}

/// `d_j`, `ℓ_j` and the symbols `p_0 ... p_K` for a fixed order `K`.
#[derive(Clone, Debug)]
pub struct Symbols {
    pub d: Vec<KElem>,
    pub ell: Vec<KElem>,
    pub p: Vec<AddPoly>,
}

impl Symbols {
    pub fn new(order: usize) -> Result<Self> {
        let d = d_seq(order)?;
        let ell = ell_seq(order)?;
        let p = (0..=order)
            .map(|k| pk_symbol(k, &d, &ell))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { d, ell, p })
    }

    /// `(p_0(a), ..., p_K(a))`.
    pub fn evaluate(&self, a: &AElem) -> Vec<KElem> {
        let a = KElem::from(a.clone());
        self.p.iter().map(|p| p.eval(&a)).collect()
    }
}
