//! The coordinate ring `A = F2[x,y]/(y^2 + y = x^3 + x + 1)` and its
//! fraction field `K`.
//!
//! An element of `A` is stored as `f(x) + g(x)·y`. Elements of `K` keep the
//! numerator in `A` and the denominator in `F2[x]`: inverting through the
//! norm `N(f + g·y) = f^2 + f·g + g^2·(x^3 + x + 1)` always clears `y` from
//! the denominator, so reduction only ever needs gcds in `F2[x]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use crate::error::{Error, Result};
use crate::f2poly::{BinaryPoly, Degree};
use crate::parse::{self, Parseable};

/// `x^3 + x + 1`, the value of `y^2 + y`.
pub fn curve_constant() -> BinaryPoly {
    BinaryPoly::from_word(0b1011)
}

/// An element `f + g·y` of `A`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AElem {
    pub f: BinaryPoly,
    pub g: BinaryPoly,
}

impl AElem {
    pub fn new(f: BinaryPoly, g: BinaryPoly) -> Self {
        Self { f, g }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_x_poly(BinaryPoly::one())
    }

    pub fn x() -> Self {
        Self::from_x_poly(BinaryPoly::monomial(1))
    }

    pub fn y() -> Self {
        Self::new(BinaryPoly::zero(), BinaryPoly::one())
    }

    pub fn from_x_poly(f: BinaryPoly) -> Self {
        Self::new(f, BinaryPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.f.is_one() && self.g.is_zero()
    }

    /// True for 0 and 1.
    pub fn is_constant(&self) -> bool {
        self.g.is_zero() && self.f.deg().is_none_or(|d| d == 0)
    }

    /// `deg(f + g·y) = max(2 deg f, 3 + 2 deg g)`. The two candidates have
    /// opposite parity, so they never cancel.
    pub fn degree(&self) -> Degree {
        self.f
            .degree()
            .scale_shift(2, 0)
            .max(self.g.degree().scale_shift(2, 3))
    }

    /// Degree as a number; `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    /// The image of `y -> y + 1`.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.f + &self.g, self.g.clone())
    }

    /// `N(f + g·y) = (f + g·y)(f + g + g·y) = f^2 + f·g + g^2·(x^3 + x + 1)`.
    pub fn norm(&self) -> BinaryPoly {
        let mut n = self.f.square();
        n += &(&self.f * &self.g);
        n += &(&self.g.square() * &curve_constant());
        n
    }

    /// `(f + g·y)^2 = (f^2 + g^2·(x^3 + x + 1)) + g^2·y`.
    pub fn square(&self) -> Self {
        let g2 = self.g.square();
        Self::new(&self.f.square() + &(&g2 * &curve_constant()), g2)
    }

    /// `self^(2^n)`.
    pub fn frobenius(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.square();
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn scale_x(&self, c: &BinaryPoly) -> Self {
        Self::new(&self.f * c, &self.g * c)
    }

    /// `gcd(f, g)`.
    fn content(&self) -> Result<BinaryPoly> {
        self.f.gcd(&self.g)
    }

    /// Exact quotient by `c ∈ F2[x]`, if it divides both components.
    pub fn exact_div_x(&self, c: &BinaryPoly) -> Result<Option<Self>> {
        match (self.f.exact_div(c)?, self.g.exact_div(c)?) {
            (Some(f), Some(g)) => Ok(Some(Self::new(f, g))),
            _ => Ok(None),
        }
    }

    /// Exact quotient in `A`, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &AElem) -> Result<Option<Self>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm();
        (self * &divisor.conjugate()).exact_div_x(&n)
    }
}

impl Add<&AElem> for &AElem {
    type Output = AElem;

    fn add(self, rhs: &AElem) -> AElem {
        AElem::new(&self.f + &rhs.f, &self.g + &rhs.g)
    }
}

impl Add for AElem {
    type Output = AElem;

    fn add(mut self, rhs: AElem) -> AElem {
        self += &rhs;
        self
    }
}

impl AddAssign<&AElem> for AElem {
    fn add_assign(&mut self, rhs: &AElem) {
        self.f += &rhs.f;
        self.g += &rhs.g;
    }
}

impl Sub<&AElem> for &AElem {
    type Output = AElem;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &AElem) -> AElem {
        self + rhs
    }
}

impl Mul<&AElem> for &AElem {
    type Output = AElem;

    /// `y^2` is replaced by `y + x^3 + x + 1`; three polynomial products.
    fn mul(self, rhs: &AElem) -> AElem {
        if self.g.is_zero() {
            return rhs.scale_x(&self.f);
        }
        if rhs.g.is_zero() {
            return self.scale_x(&rhs.f);
        }
        let ff = &self.f * &rhs.f;
        let gg = &self.g * &rhs.g;
        let mut cross = &(&self.f + &self.g) * &(&rhs.f + &rhs.g);
        cross += &ff;
        let f = &ff + &(&gg * &curve_constant());
        AElem::new(f, cross)
    }
}

impl Mul for AElem {
    type Output = AElem;

    fn mul(self, rhs: AElem) -> AElem {
        &self * &rhs
    }
}

impl fmt::Display for AElem {
    /// Monomials `x^i` (degree `2i`) and `x^i·y` (degree `2i + 3`) in
    /// descending degree; no two share a degree.
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return fm.write_str("0");
        }
        let mut terms: Vec<(usize, String)> = Vec::with_capacity(self.f.count_terms() + self.g.count_terms());
        terms.extend(self.f.exponents().map(|i| {
            let s = match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            (2 * i, s)
        }));
        terms.extend(self.g.exponents().map(|i| {
            let s = match i {
                0 => "y".to_string(),
                1 => "x*y".to_string(),
                _ => format!("x^{i}*y"),
            };
            (2 * i + 3, s)
        }));
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut first = true;
        for (_, t) in terms {
            if !first {
                fm.write_str("+")?;
            }
            first = false;
            fm.write_str(&t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AElem({self})")
    }
}

impl std::str::FromStr for AElem {
    type Err = Error;

    /// Accepts any `y`-power; powers `>= 2` are reduced through the curve
    /// equation. Division is rejected unless it is exact in `A`.
    fn from_str(s: &str) -> Result<Self> {
        let k: KElem = s.parse()?;
        k.to_a()
            .ok_or_else(|| Error::Domain(format!("'{s}' is not an element of A")))
    }
}

/// An element `(f + g·y) / h` of `K` in lowest terms.
///
/// `h` is nonzero and `gcd(f, g, h) = 1`; over F2 this representation is
/// unique, so derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElem {
    num: AElem,
    den: BinaryPoly,
}

impl KElem {
    /// Builds and reduces `num / den`.
    pub fn new(num: AElem, den: BinaryPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: AElem, den: BinaryPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = num
            .content()
            .and_then(|c| c.gcd(&den))
            .expect("denominator is nonzero");
        if g.is_one() {
            return Self { num, den };
        }
        let num = num
            .exact_div_x(&g)
            .expect("gcd is nonzero")
            .expect("gcd divides the numerator");
        let den = den.exact_div(&g).expect("gcd is nonzero").expect("gcd divides the denominator");
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self::from(AElem::zero())
    }

    pub fn one() -> Self {
        Self::from(AElem::one())
    }

    pub fn x() -> Self {
        Self::from(AElem::x())
    }

    pub fn y() -> Self {
        Self::from(AElem::y())
    }

    pub fn numerator(&self) -> &AElem {
        &self.num
    }

    pub fn denominator(&self) -> &BinaryPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element lies in `A`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_a(&self) -> Option<AElem> {
        self.is_integral().then(|| self.num.clone())
    }

    /// Inverse via the norm: `h / (f + g·y) = h·(f + g + g·y) / N(f + g·y)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num.norm();
        Ok(Self::reduced(self.num.conjugate().scale_x(&self.den), n))
    }

    pub fn checked_div(&self, rhs: &KElem) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Squaring keeps lowest terms: a prime dividing `g^2` and `h^2` would
    /// divide `f^2 + g^2·c`, hence `f`.
    pub fn square(&self) -> Self {
        Self {
            num: self.num.square(),
            den: self.den.square(),
        }
    }

    /// `self^(2^n)`.
    pub fn frobenius(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.square();
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn mul_a(&self, a: &AElem) -> Self {
        Self::reduced(&self.num * a, self.den.clone())
    }
}

impl From<AElem> for KElem {
    fn from(num: AElem) -> Self {
        Self {
            num,
            den: BinaryPoly::one(),
        }
    }
}

impl From<BinaryPoly> for KElem {
    fn from(f: BinaryPoly) -> Self {
        Self::from(AElem::from_x_poly(f))
    }
}

impl Add<&KElem> for &KElem {
    type Output = KElem;

    fn add(self, rhs: &KElem) -> KElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return KElem::reduced(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return KElem::reduced(&self.num.scale_x(&rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return KElem::reduced(&self.num + &rhs.num.scale_x(&self.den), self.den.clone());
        }
        let g = self.den.gcd(&rhs.den).expect("denominators are nonzero");
        let s = self.den.exact_div(&g).unwrap().unwrap();
        let t = rhs.den.exact_div(&g).unwrap().unwrap();
        let num = &self.num.scale_x(&t) + &rhs.num.scale_x(&s);
        KElem::reduced(num, &s * &rhs.den)
    }
}

impl Add for KElem {
    type Output = KElem;

    fn add(self, rhs: KElem) -> KElem {
        &self + &rhs
    }
}

impl AddAssign<&KElem> for KElem {
    fn add_assign(&mut self, rhs: &KElem) {
        *self = &*self + rhs;
    }
}

impl Sub<&KElem> for &KElem {
    type Output = KElem;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &KElem) -> KElem {
        self + rhs
    }
}

impl Mul<&KElem> for &KElem {
    type Output = KElem;

    /// Cross-cancels before multiplying so the reduction gcds stay small.
    fn mul(self, rhs: &KElem) -> KElem {
        if self.is_zero() || rhs.is_zero() {
            return KElem::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return KElem::from(&self.num * &rhs.num);
        }
        let (a, h2) = cancel(&self.num, &rhs.den);
        let (b, h1) = cancel(&rhs.num, &self.den);
        KElem::reduced(&a * &b, &h1 * &h2)
    }
}

impl Mul for KElem {
    type Output = KElem;

    fn mul(self, rhs: KElem) -> KElem {
        &self * &rhs
    }
}

/// Divides `num` and `den` by the common content they share.
fn cancel(num: &AElem, den: &BinaryPoly) -> (AElem, BinaryPoly) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let g = num.content().and_then(|c| c.gcd(den)).expect("den is nonzero");
    if g.is_one() {
        return (num.clone(), den.clone());
    }
    (
        num.exact_div_x(&g).unwrap().unwrap(),
        den.exact_div(&g).unwrap().unwrap(),
    )
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt(f);
        }
        let num = self.num.to_string();
        let den = self.den.to_string();
        let wrap = |s: String| if s.contains('+') { format!("({s})") } else { s };
        write!(f, "{}/{}", wrap(num), wrap(den))
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KElem({self})")
    }
}

impl std::str::FromStr for KElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse::<KElem>(s)
    }
}

impl Parseable for KElem {
    fn from_parity(odd: bool) -> Self {
        if odd {
            KElem::one()
        } else {
            KElem::zero()
        }
    }

    fn variable(name: char) -> Option<Self> {
        match name {
            'x' => Some(KElem::x()),
            'y' => Some(KElem::y()),
            _ => None,
        }
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn pow(&self, exp: u64) -> Self {
        KElem::pow(self, exp)
    }
}

/// `[j]_x = x^(2^j) + x`.
pub fn bracket_x(j: u32) -> AElem {
    AElem::from_x_poly(&BinaryPoly::monomial(1usize << j) + &BinaryPoly::monomial(1))
}

/// The degree-`k` basis element: `x^(k/2)` for even `k`, `y·x^((k-3)/2)` for odd `k`.
pub fn t_elem(k: usize) -> Result<AElem> {
    if k < 2 {
        return Err(Error::Domain(format!("t_k is defined for k >= 2, got k = {k}")));
    }
    Ok(if k.is_multiple_of(2) {
        AElem::from_x_poly(BinaryPoly::monomial(k / 2))
    } else {
        AElem::new(BinaryPoly::zero(), BinaryPoly::monomial((k - 3) / 2))
    })
}

/// The basis `(1, t_2, ..., t_{k-1})` of `A_{<k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    elems: Vec<AElem>,
}

impl DegreeBasis {
    pub fn below(k: usize) -> Self {
        let mut elems = Vec::new();
        if k >= 2 {
            elems.push(AElem::one());
        }
        elems.extend((2..k).map(|j| t_elem(j).expect("j >= 2")));
        Self { elems }
    }

    pub fn elems(&self) -> &[AElem] {
        &self.elems
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    /// Combination selected by the bits of `mask`, bit `i` for basis entry `i`.
    pub fn combination(&self, mask: u64) -> AElem {
        let mut f = Vec::new();
        let mut g = Vec::new();
        for (i, e) in self.elems.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                // basis entries are single monomials
                f.extend(e.f.exponents());
                g.extend(e.g.exponents());
            }
        }
        AElem::new(BinaryPoly::from_exponents(&f), BinaryPoly::from_exponents(&g))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumMode {
    /// `A_{<k}`: every element of degree below `k`, including 0.
    Below,
    /// `A_k`: every element of degree exactly `k`.
    Exact,
}

/// Largest `k` accepted by [`enumerate`]; `2^(k-1)` elements are produced.
pub const MAX_ENUMERATE: usize = 24;

/// Elements of `A_{<k}` or `A_k`, ordered lexicographically in the basis
/// coordinates with the highest basis element most significant.
pub fn enumerate(k: usize, mode: EnumMode) -> Result<Vec<AElem>> {
    if k > MAX_ENUMERATE {
        return Err(Error::Budget {
            what: "enumeration degree",
            got: k,
            max: MAX_ENUMERATE,
        });
    }
    match mode {
        EnumMode::Below => {
            let basis = DegreeBasis::below(k);
            Ok((0..1u64 << basis.dim()).map(|m| basis.combination(m)).collect())
        }
        EnumMode::Exact => {
            if k < 2 {
                return Ok(Vec::new());
            }
            let lead = t_elem(k)?;
            Ok(enumerate(k, EnumMode::Below)?
                .iter()
                .map(|a| &lead + a)
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> AElem {
        s.parse().unwrap()
    }

    fn k(s: &str) -> KElem {
        s.parse().unwrap()
    }

    #[test]
    fn ring_products() {
        assert_eq!(&AElem::y() * &AElem::y(), a("x^3+x+1+y"));
        assert_eq!(&AElem::y() * &a("y+1"), a("x^3+x+1"));
        assert_eq!(&AElem::x() * &AElem::y(), AElem::new(BinaryPoly::zero(), BinaryPoly::monomial(1)));
    }

    #[test]
    fn degrees() {
        assert_eq!(AElem::x().degree(), Degree::Finite(2));
        assert_eq!(AElem::y().degree(), Degree::Finite(3));
        assert_eq!(AElem::one().degree(), Degree::Finite(0));
        assert_eq!(AElem::zero().degree(), Degree::NegInf);
        assert_eq!(a("x^2+y").degree(), Degree::Finite(4));
    }

    #[test]
    fn inverses() {
        assert_eq!(KElem::y().inv().unwrap(), k("(y+1)/(x^3+x+1)"));
        assert_eq!(KElem::one().inv().unwrap(), KElem::one());
        assert_eq!(KElem::x().inv().unwrap().to_string(), "1/x");
        assert_eq!(KElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_arithmetic() {
        let sum = &k("1/(x^2+x)") + &KElem::one();
        assert_eq!(sum.to_string(), "(x^2+x+1)/(x^2+x)");
        assert_eq!(&KElem::y() * &KElem::y().inv().unwrap(), KElem::one());
        assert_eq!(&k("y/x") * &KElem::x(), KElem::y());
        assert_eq!(KElem::one().checked_div(&KElem::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_powers() {
        assert_eq!(KElem::y().frobenius(1), k("x^3+x+1+y"));
        assert_eq!(k("x*y+1").frobenius(0), k("x*y+1"));
        assert_eq!(KElem::x().frobenius(2), k("x^4"));
        let z = k("(x*y+x)/(x^5+1)");
        assert_eq!(z.frobenius(3), z.pow(8));
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_x(1), a("x^2+x"));
        assert_eq!(bracket_x(0), AElem::zero());
        assert_eq!(bracket_x(2), a("x^4+x"));
    }

    #[test]
    fn basis_elements() {
        assert_eq!(t_elem(2).unwrap(), AElem::x());
        assert_eq!(t_elem(3).unwrap(), AElem::y());
        assert_eq!(t_elem(4).unwrap(), a("x^2"));
        assert_eq!(t_elem(5).unwrap(), a("x*y"));
        assert!(matches!(t_elem(1), Err(Error::Domain(_))));
        for j in 2..40 {
            assert_eq!(t_elem(j).unwrap().deg(), Some(j));
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate(2, EnumMode::Below).unwrap(), vec![AElem::zero(), AElem::one()]);
        assert_eq!(
            enumerate(3, EnumMode::Exact).unwrap(),
            vec![a("y"), a("y+1"), a("y+x"), a("y+x+1")]
        );
        assert!(enumerate(1, EnumMode::Exact).unwrap().is_empty());
        assert_eq!(enumerate(0, EnumMode::Below).unwrap(), vec![AElem::zero()]);
        assert_eq!(enumerate(1, EnumMode::Below).unwrap(), vec![AElem::zero()]);
        for kk in 2..10 {
            let below = enumerate(kk, EnumMode::Below).unwrap();
            let exact = enumerate(kk, EnumMode::Exact).unwrap();
            assert_eq!(below.len(), 1 << (kk - 1));
            assert_eq!(exact.len(), 1 << (kk - 1));
            assert!(below.iter().all(|e| e.degree() < Degree::Finite(kk)));
            assert!(exact.iter().all(|e| e.deg() == Some(kk)));
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(a("x^3+x*y+1").to_string(), "x^3+x*y+1");
        assert_eq!(a("y^2+y").to_string(), "x^3+x+1");
        assert_eq!(k("(x^2+x)/(x^2+x+1)").to_string(), "(x^2+x)/(x^2+x+1)");
        assert_eq!(k("1/y").to_string(), "(y+1)/(x^3+x+1)");
        assert!("x/y".parse::<AElem>().is_err());
        assert!("z".parse::<KElem>().is_err());
        assert!("1/0".parse::<KElem>().is_err());
    }

    #[test]
    fn exact_division_in_a() {
        let p = &a("x*y+x^2+1") * &a("y+x+1");
        assert_eq!(p.exact_div(&a("y+x+1")).unwrap(), Some(a("x*y+x^2+1")));
        assert_eq!(a("y").exact_div(&AElem::x()).unwrap(), None);
    }
}
