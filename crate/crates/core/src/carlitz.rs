//! The Carlitz module `C_t = t + τ` over `F_2[t]`, where every quantity has
//! a closed form. Polynomials here are `BinaryPoly` read in the variable `t`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2poly::BinaryPoly;

/// Largest `n` for the literal product over monic polynomials.
pub const MAX_MONIC_N: usize = 6;

/// `[n] = t^(2^n) + t`.
pub fn carlitz_bracket(n: u32) -> BinaryPoly {
    &BinaryPoly::monomial(1usize << n) + &BinaryPoly::monomial(1)
}

/// `d_n` by `d_n = [n] d_{n-1}^2`, checked against `[n][n-1]^2 ··· [1]^(2^(n-1))`.
pub fn carlitz_d(n: usize) -> BinaryPoly {
    let mut rec = BinaryPoly::one();
    for i in 1..=n {
        rec = &carlitz_bracket(i as u32) * &rec.square();
    }
    let closed = (1..=n).fold(BinaryPoly::one(), |acc, i| {
        &acc * &carlitz_bracket(i as u32).frobenius((n - i) as u32)
    });
    assert_eq!(rec, closed, "d_{n}: recursion and closed product differ");
    rec
}

/// `ℓ_n = [n][n-1] ··· [1]`.
pub fn carlitz_ell(n: usize) -> BinaryPoly {
    (1..=n).fold(BinaryPoly::one(), |acc, i| &acc * &carlitz_bracket(i as u32))
}

/// The product of all `2^n` monic polynomials of degree `n`.
pub fn monic_product(n: usize) -> Result<BinaryPoly> {
    if n > MAX_MONIC_N {
        return Err(Error::Budget {
            what: "monic product degree",
            got: n,
            max: MAX_MONIC_N,
        });
    }
    let top = 1u64 << n;
    Ok((0..top)
        .into_par_iter()
        .map(|low| BinaryPoly::from_word(top | low))
        .reduce(BinaryPoly::one, |a, b| &a * &b))
}

/// Checks `[i] · (1/d_i) = (1/d_{i-1})^2` for `1 <= i <= K`, i.e.
/// `[i] d_{i-1}^2 = d_i`, the coefficient form of `e(tz) = t e(z) + e(z)^2`.
pub fn carlitz_functional_check(kmax: usize) -> Result<Vec<String>> {
    if kmax < 1 {
        return Err(Error::Domain("the functional check needs K >= 1".into()));
    }
    let mut lines = vec!["C_t read as t + tau, so e(tz) = t e(z) + e(z)^2".to_string()];
    let mut d_prev = BinaryPoly::one();
    for i in 1..=kmax {
        let d = carlitz_d(i);
        let lhs = &carlitz_bracket(i as u32) * &d_prev.square();
        if lhs != d {
            return Err(Error::Verification(format!(
                "i = {i}: [i] d_(i-1)^2 = {} but d_i = {}",
                lhs.display_in('t'),
                d.display_in('t')
            )));
        }
        lines.push(format!("[{i}] a_{i} = a_{}^2 OK", i - 1));
        d_prev = d;
    }
    Ok(lines)
}
