//! Polynomials over the integers: the minimal-polynomial inputs of the prime
//! scans and the characteristic polynomials coming out of the Hecke pipeline.
//!
//! Coefficients are arbitrary-precision, constant term first. Two input
//! syntaxes are accepted: a bare coefficient list `"c0,c1,...,cn"` and a
//! human form `"x^5-x-1"` (single variable x, integer coefficients). Anything
//! else is a parse error, never a guess.

use crate::ffpoly::modpoly::ModPolynomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

/// An integer polynomial, constant term first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPolynomial::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants. Check [`Self::is_zero`] first where the zero
    /// polynomial could reach.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact quotient by a monic divisor; panics if the division leaves a
    /// remainder (callers use this only where exactness is a theorem).
    pub fn div_exact_monic(&self, divisor: &Self) -> Self {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree();
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        assert!(self.degree() >= d, "quotient must be exact");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - d + 1];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate().take(d) {
                let delta = &q * b;
                rem[i - d + j] -= delta;
            }
            quot[i - d] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
        IntPolynomial::new(quot)
    }

    /// Coefficientwise reduction mod a prime; errors when the leading
    /// coefficient dies (callers treat that prime as ramified/skipped).
    pub fn reduce_mod_p(&self, p: u64) -> Result<ModPolynomial> {
        if self.is_zero() {
            return Ok(ModPolynomial::zero(p));
        }
        let pb = BigInt::from(p);
        if self.leading().mod_floor(&pb).is_zero() {
            return Err(Error::LeadingCoefficientVanishes { p });
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
            .collect();
        Ok(ModPolynomial::new(p, coeffs))
    }

    /// Parses either a coefficient list `"c0,c1,...,cn"` or the human form
    /// `"x^5-x-1"`.
    pub fn parse(input: &str) -> Result<Self> {
        let input = input.trim();
        if input.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if input.contains(',') {
            Self::parse_coeff_list(input)
        } else if input.contains('x') {
            Self::parse_human(input)
        } else {
            // A lone integer constant.
            let c = BigInt::from_str(input)
                .map_err(|_| Error::Parse(format!("not an integer constant: {input:?}")))?;
            Ok(IntPolynomial::new(vec![c]))
        }
    }

    fn parse_coeff_list(input: &str) -> Result<Self> {
        let coeffs: Result<Vec<BigInt>> = input
            .split(',')
            .map(|tok| {
                BigInt::from_str(tok.trim())
                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))
            })
            .collect();
        Ok(IntPolynomial::new(coeffs?))
    }

    fn parse_human(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: Vec<(BigInt, usize)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            // Leading sign(s) of this term.
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if pos > 0 => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' at offset {pos} of {compact:?}"
                    )))
                }
                _ => {}
            }
            if pos >= bytes.len() {
                return Err(Error::Parse(format!("dangling sign in {compact:?}")));
            }
            // Optional integer coefficient.
            let digit_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef = if pos > digit_start {
                sign * BigInt::from_str(&compact[digit_start..pos]).unwrap()
            } else {
                sign
            };
            // Optional '*', then optional x with optional ^exponent.
            let mut exponent = 0usize;
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                if pos >= bytes.len() || bytes[pos] != b'x' {
                    return Err(Error::Parse(format!("'*' not followed by x in {compact:?}")));
                }
            }
            if pos < bytes.len() && bytes[pos] == b'x' {
                pos += 1;
                exponent = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let exp_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == exp_start {
                        return Err(Error::Parse(format!("missing exponent in {compact:?}")));
                    }
                    exponent = compact[exp_start..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("exponent too large in {compact:?}")))?;
                }
            } else if pos == digit_start {
                // Neither digits nor x: an unexpected character.
                return Err(Error::Parse(format!(
                    "unexpected character {:?} in {compact:?}",
                    compact[pos..].chars().next().unwrap()
                )));
            }
            if exponent > 10_000 {
                return Err(Error::Parse(format!("exponent {exponent} out of range")));
            }
            terms.push((coef, exponent));
        }
        let mut coeffs = vec![BigInt::zero(); terms.iter().map(|&(_, e)| e + 1).max().unwrap_or(1)];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form, highest degree first: `x^5-x-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coef = e == 0 || !magnitude.is_one();
            if show_coef {
                write!(f, "{magnitude}")?;
            }
            if e >= 1 {
                if show_coef {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if e >= 2 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
