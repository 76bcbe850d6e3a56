//! Twisted polynomials `Σ c_i τ^i` over `K`, with `τ·c = c^2·τ`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::curve::{AElem, KElem};
use crate::f2poly::Degree;

/// A twisted polynomial; trailing zero coefficients are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistedPoly {
    coeffs: Vec<KElem>,
}

impl TwistedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(KElem::one())
    }

    /// `τ`.
    pub fn tau() -> Self {
        Self::monomial(KElem::one(), 1)
    }

    pub fn constant(c: KElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·τ^i`.
    pub fn monomial(c: KElem, i: usize) -> Self {
        let mut coeffs = vec![KElem::zero(); i + 1];
        coeffs[i] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<KElem>) -> Self {
        while coeffs.last().is_some_and(KElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_a_coeffs(coeffs: impl IntoIterator<Item = AElem>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(KElem::from).collect())
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<KElem> {
        self.coeffs
    }

    /// Coefficient of `τ^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> KElem {
        self.coeffs.get(i).cloned().unwrap_or_else(KElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn tau_degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&KElem> {
        self.coeffs.last()
    }

    /// Coefficients as elements of `A`, if every one of them is integral.
    pub fn a_coeffs(&self) -> Option<Vec<AElem>> {
        self.coeffs.iter().map(KElem::to_a).collect()
    }

    /// `Σ c_i · z^(2^i)`.
    pub fn apply(&self, z: &KElem) -> KElem {
        let mut acc = KElem::zero();
        let mut zp = z.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                zp = zp.square();
            }
            if !c.is_zero() {
                acc += &(c * &zp);
            }
        }
        acc
    }

    /// `self^2` as a twisted product (not the Frobenius of the coefficients).
    pub fn square(&self) -> Self {
        self * self
    }

    /// Applies the Frobenius to every coefficient: the conjugate `τ^n·p·τ^{-n}`.
    pub fn frobenius_coeffs(&self, n: u32) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.frobenius(n)).collect())
    }
}

impl Add<&TwistedPoly> for &TwistedPoly {
    type Output = TwistedPoly;

    fn add(self, rhs: &TwistedPoly) -> TwistedPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        TwistedPoly::from_coeffs(coeffs)
    }
}

impl Add for TwistedPoly {
    type Output = TwistedPoly;

    fn add(self, rhs: TwistedPoly) -> TwistedPoly {
        &self + &rhs
    }
}

impl Mul<&TwistedPoly> for &TwistedPoly {
    type Output = TwistedPoly;

    /// `(c·τ^i)(d·τ^j) = c·d^(2^i)·τ^(i+j)`.
    fn mul(self, rhs: &TwistedPoly) -> TwistedPoly {
        if self.is_zero() || rhs.is_zero() {
            return TwistedPoly::zero();
        }
        let mut out = vec![KElem::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        let mut twisted_rhs = rhs.coeffs.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for d in twisted_rhs.iter_mut() {
                    *d = d.square();
                }
            }
            if c.is_zero() {
                continue;
            }
            for (j, d) in twisted_rhs.iter().enumerate() {
                if !d.is_zero() {
                    out[i + j] += &(c * d);
                }
            }
        }
        TwistedPoly::from_coeffs(out)
    }
}

impl Mul for TwistedPoly {
    type Output = TwistedPoly;

    fn mul(self, rhs: TwistedPoly) -> TwistedPoly {
        &self * &rhs
    }
}

impl fmt::Display for TwistedPoly {
    /// `(c0) + (c1)*t + (c2)*t^2`, zero terms omitted, `τ` printed as `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> KElem {
        s.parse().unwrap()
    }

    fn tp(cs: &[&str]) -> TwistedPoly {
        TwistedPoly::from_coeffs(cs.iter().map(|s| k(s)).collect())
    }

    #[test]
    fn commutation_rule() {
        let c = k("x*y+1");
        assert_eq!(
            &TwistedPoly::tau() * &TwistedPoly::constant(c.clone()),
            TwistedPoly::monomial(c.square(), 1)
        );
        let (a, b) = (k("x+y"), k("1/x"));
        assert_eq!(
            &TwistedPoly::monomial(a.clone(), 1) * &TwistedPoly::monomial(b.clone(), 1),
            TwistedPoly::monomial(&a * &b.square(), 2)
        );
    }

    #[test]
    fn addition() {
        let p = tp(&["x", "x^2+x", "1"]);
        assert!((&p + &p).is_zero());
        assert_eq!(&p + &TwistedPoly::zero(), p);
        let q = tp(&["y", "y^2+y", "x*(y^2+y)", "1"]);
        assert_eq!(
            &p + &q,
            tp(&["x+y", "x^2+x+y^2+y", "1+x*(y^2+y)", "1"])
        );
    }

    #[test]
    fn application() {
        let rho_x = tp(&["x", "x^2+x", "1"]);
        assert_eq!(rho_x.apply(&KElem::one()), k("x^2+1"));
        let c = k("y/x");
        let z = k("x^3+y");
        assert_eq!(TwistedPoly::constant(c.clone()).apply(&z), &c * &z);
        assert!(rho_x.apply(&KElem::zero()).is_zero());
    }

    #[test]
    fn rendering() {
        let p = tp(&["x", "0", "1"]);
        assert_eq!(p.to_string(), "(x) + (1)*t^2");
        assert_eq!(p.tau_degree(), Degree::Finite(2));
        assert_eq!(TwistedPoly::zero().tau_degree(), Degree::NegInf);
    }
}
