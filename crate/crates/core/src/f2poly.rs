//! Univariate polynomials over F2, bit-packed into 64-bit words.
//!
//! Bit `i` of the packed sequence is the coefficient of the `i`-th power.
//! The word vector never carries a trailing zero word, so structural
//! equality is polynomial equality and the zero polynomial is the empty
//! vector.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use crate::error::{Error, Result};
use crate::parse::{self, Parseable};

/// Degree of a polynomial; the zero polynomial has degree [`Degree::NegInf`].
///
/// Variant order makes `NegInf` compare below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `c * self + offset`, with `NegInf` absorbing.
    pub fn scale_shift(self, c: usize, offset: usize) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(c * d + offset),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryPoly {
    words: Vec<u64>,
}

impl BinaryPoly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The monomial of the given power.
    pub fn monomial(power: usize) -> Self {
        let mut words = vec![0u64; power / 64 + 1];
        words[power / 64] = 1u64 << (power % 64);
        Self { words }
    }

    /// Builds a polynomial from the low-to-high bits of a word.
    pub fn from_word(w: u64) -> Self {
        Self::from_words(vec![w])
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    /// Sum of monomials; repeated exponents cancel.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut words = Vec::new();
        for &e in exps {
            if words.len() <= e / 64 {
                words.resize(e / 64 + 1, 0);
            }
            words[e / 64] ^= 1u64 << (e % 64);
        }
        Self::from_words(words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Degree {
        match self.deg() {
            Some(d) => Degree::Finite(d),
            None => Degree::NegInf,
        }
    }

    /// Finite degree, `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| 64 * i + b)
        })
    }

    pub fn count_terms(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn shl(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (n / 64, n % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs != 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Self::from_words(out)
    }

    pub fn square(&self) -> Self {
        let mut out = Vec::with_capacity(2 * self.words.len());
        for &w in &self.words {
            out.push(spread(w as u32));
            out.push(spread((w >> 32) as u32));
        }
        Self::from_words(out)
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

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.deg().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        let mut q: Vec<u64> = Vec::new();
        while let Some(dr) = top_bit(&r) {
            if dr < db {
                break;
            }
            let s = dr - db;
            if q.is_empty() {
                q = vec![0; s / 64 + 1];
            }
            q[s / 64] ^= 1u64 << (s % 64);
            xor_shifted(&mut r, &divisor.words, s);
            trim(&mut r);
        }
        Ok((Self::from_words(q), Self::from_words(r)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let db = divisor.deg().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        reduce_in_place(&mut r, &divisor.words, db);
        Ok(Self::from_words(r))
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divrem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd (every nonzero polynomial over F2 is monic).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.words.clone(), other.words.clone());
        loop {
            if b.is_empty() {
                return Ok(Self::from_words(a));
            }
            if a.is_empty() {
                return Ok(Self::from_words(b));
            }
            let (da, db) = (top_bit(&a).unwrap(), top_bit(&b).unwrap());
            if da >= db {
                reduce_in_place(&mut a, &b, db);
            } else {
                reduce_in_place(&mut b, &a, da);
            }
        }
    }

    pub fn display_in(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }

    /// Parses a polynomial written in the given variable.
    pub fn parse_in(s: &str, var: char) -> Result<Self> {
        match var {
            'x' => parse::parse::<InVar<'x'>>(s).map(|p| p.0),
            't' => parse::parse::<InVar<'t'>>(s).map(|p| p.0),
            'w' => parse::parse::<InVar<'w'>>(s).map(|p| p.0),
            _ => Err(Error::Domain(format!("unsupported variable '{var}'"))),
        }
    }
}

fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

fn top_bit(words: &[u64]) -> Option<usize> {
    let top = *words.last()?;
    Some(64 * (words.len() - 1) + 63 - top.leading_zeros() as usize)
}

fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

/// `dst ^= src << shift`; `dst` must already be long enough.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    if bs == 0 {
        for (d, s) in dst[ws..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (i, &s) in src.iter().enumerate() {
            dst[i + ws] ^= s << bs;
            if let Some(d) = dst.get_mut(i + ws + 1) {
                *d ^= s >> (64 - bs);
            }
        }
    }
}

/// Reduces `r` modulo the polynomial `m` of degree `dm` in place.
fn reduce_in_place(r: &mut Vec<u64>, m: &[u64], dm: usize) {
    trim(r);
    while let Some(dr) = top_bit(r) {
        if dr < dm {
            break;
        }
        xor_shifted(r, m, dr - dm);
        trim(r);
    }
}

/// Product of packed polynomials, four bits of `a` at a time.
fn mul_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let lb = b.len() + 1;
    let mut table = vec![0u64; 16 * lb];
    for bit in 0..4 {
        let row = 1usize << bit;
        for (j, &w) in b.iter().enumerate() {
            table[row * lb + j] ^= w << bit;
            if bit != 0 {
                table[row * lb + j + 1] ^= w >> (64 - bit);
            }
        }
    }
    for u in 3..16usize {
        if u.is_power_of_two() {
            continue;
        }
        let low = u & u.wrapping_neg();
        let (hi, lo) = (u ^ low, low);
        for j in 0..lb {
            table[u * lb + j] = table[hi * lb + j] ^ table[lo * lb + j];
        }
    }

    let mut r = vec![0u64; a.len() + b.len() + 1];
    for s in (0..16).rev() {
        for (i, &aw) in a.iter().enumerate() {
            let nib = ((aw >> (4 * s)) & 15) as usize;
            if nib != 0 {
                let row = &table[nib * lb..(nib + 1) * lb];
                for (d, t) in r[i..i + lb].iter_mut().zip(row) {
                    *d ^= t;
                }
            }
        }
        if s != 0 {
            let mut carry = 0u64;
            for w in r.iter_mut() {
                let next = *w >> 60;
                *w = (*w << 4) | carry;
                carry = next;
            }
        }
    }
    r
}

impl Add<&BinaryPoly> for &BinaryPoly {
    type Output = BinaryPoly;

    fn add(self, rhs: &BinaryPoly) -> BinaryPoly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (d, s) in words.iter_mut().zip(&short.words) {
            *d ^= s;
        }
        BinaryPoly::from_words(words)
    }
}

impl Add for BinaryPoly {
    type Output = BinaryPoly;

    fn add(mut self, rhs: BinaryPoly) -> BinaryPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BinaryPoly> for BinaryPoly {
    fn add_assign(&mut self, rhs: &BinaryPoly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (d, s) in self.words.iter_mut().zip(&rhs.words) {
            *d ^= s;
        }
        trim(&mut self.words);
    }
}

impl Sub<&BinaryPoly> for &BinaryPoly {
    type Output = BinaryPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &BinaryPoly) -> BinaryPoly {
        self + rhs
    }
}

impl Mul<&BinaryPoly> for &BinaryPoly {
    type Output = BinaryPoly;

    fn mul(self, rhs: &BinaryPoly) -> BinaryPoly {
        if self.words.len() > rhs.words.len() {
            BinaryPoly::from_words(mul_words(rhs.words(), self.words()))
        } else {
            BinaryPoly::from_words(mul_words(self.words(), rhs.words()))
        }
    }
}

impl Mul for BinaryPoly {
    type Output = BinaryPoly;

    fn mul(self, rhs: BinaryPoly) -> BinaryPoly {
        &self * &rhs
    }
}

impl PartialOrd for BinaryPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for BinaryPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a BinaryPoly,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in self.poly.exponents().rev() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match e {
                0 => f.write_str("1")?,
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in('x').fmt(f)
    }
}

impl fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPoly({self})")
    }
}

impl std::str::FromStr for BinaryPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_in(s, 'x')
    }
}

#[derive(Clone)]
struct InVar<const V: char>(BinaryPoly);

impl<const V: char> Parseable for InVar<V> {
    fn from_parity(odd: bool) -> Self {
        InVar(if odd { BinaryPoly::one() } else { BinaryPoly::zero() })
    }

    fn variable(name: char) -> Option<Self> {
        (name == V).then(|| InVar(BinaryPoly::monomial(1)))
    }

    fn add(&self, other: &Self) -> Self {
        InVar(&self.0 + &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        InVar(&self.0 * &other.0)
    }

    fn div(&self, other: &Self) -> Result<Self> {
        match self.0.exact_div(&other.0)? {
            Some(q) => Ok(InVar(q)),
            None => Err(Error::Domain("inexact polynomial division".into())),
        }
    }

    fn pow(&self, exp: u64) -> Self {
        InVar(self.0.pow(exp))
    }
}
