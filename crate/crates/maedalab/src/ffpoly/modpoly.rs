//! Dense polynomial arithmetic over F_p for word-sized primes p, with the
//! distinct-degree factorization that reads off Frobenius cycle types.
//!
//! Primes may occupy the full 64 bits; products go through 128-bit
//! intermediates. Polynomials are coefficient vectors, constant term first,
//! with no trailing zeros (the zero polynomial is the empty vector).
//!
//! Distinct-degree factorization never splits factors of equal degree: for
//! the residue-degree statistics only the multiset of factor degrees matters,
//! and `gcd(f, x^(p^i) - x)` collects the degree-i part deterministically —
//! no Cantor–Zassenhaus randomness anywhere in the pipeline.

use crate::{Error, Result};

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < p <= 2^64 - 1: avoid the overflowing a + b.
    if a >= p - b {
        a - (p - b)
    } else {
        a + b
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_scalar(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` mod prime `p` via Fermat.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod_scalar(a, p - 2, p)
}

/// A polynomial over F_p, constant term first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPolynomial {
    pub p: u64,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    /// Builds from arbitrary residues, normalizing mod p and trimming.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPolynomial { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPolynomial::new(p, vec![1])
    }

    /// The monomial x.
    pub fn x(p: u64) -> Self {
        ModPolynomial::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants. Check [`Self::is_zero`] first where the zero
    /// polynomial could reach.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, self.p), c, self.p);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| add_mod(self.coeff(i), other.coeff(i), self.p))
            .collect();
        ModPolynomial::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| sub_mod(self.coeff(i), other.coeff(i), self.p))
            .collect();
        ModPolynomial::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect();
        ModPolynomial::new(self.p, coeffs)
    }

    /// Schoolbook product; the oracle that [`Self::mul_reduce`] is tested
    /// against.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPolynomial::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        ModPolynomial::new(p, out)
    }

    /// Remainder of `self` by `divisor` (any nonzero divisor).
    pub fn rem(&self, divisor: &Self) -> Self {
        debug_assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let d = divisor.degree();
        if self.is_zero() || self.degree() < d {
            return self.clone();
        }
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        for i in (d..rem.len()).rev() {
            let q = mul_mod(rem[i], lead_inv, p);
            if q == 0 {
                continue;
            }
            rem[i] = 0;
            for (j, &b) in divisor.coeffs.iter().enumerate().take(d) {
                let idx = i - d + j;
                rem[idx] = sub_mod(rem[idx], mul_mod(q, b, p), p);
            }
        }
        rem.truncate(d);
        ModPolynomial::new(p, rem)
    }

    /// Exact quotient `self / divisor`; asserts the remainder is zero.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let d = divisor.degree();
        if self.is_zero() {
            return ModPolynomial::zero(p);
        }
        assert!(self.degree() >= d, "quotient must be exact");
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.degree() - d + 1];
        for i in (d..rem.len()).rev() {
            let q = mul_mod(rem[i], lead_inv, p);
            quot[i - d] = q;
            if q == 0 {
                continue;
            }
            rem[i] = 0;
            for (j, &b) in divisor.coeffs.iter().enumerate().take(d) {
                let idx = i - d + j;
                rem[idx] = sub_mod(rem[idx], mul_mod(q, b, p), p);
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "division must be exact");
        ModPolynomial::new(p, quot)
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = inv_mod(a.leading(), self.p);
        a.scale(lead_inv)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPolynomial::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % self.p, self.p))
            .collect();
        ModPolynomial::new(self.p, coeffs)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == 0
    }

    /// `(self * other) mod f` in one pass: Horner over the coefficients of
    /// `self`, reducing by the monic `f` after every shift. Distinct from the
    /// schoolbook-multiply-then-divide route it is tested against.
    pub fn mul_reduce(&self, other: &Self, f: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        debug_assert_eq!(self.p, f.p);
        assert!(f.is_monic() && f.degree() >= 1, "modulus must be monic, degree >= 1");
        let p = self.p;
        let n = f.degree();
        if self.is_zero() || other.is_zero() {
            return ModPolynomial::zero(p);
        }
        let other = if other.degree() >= n { other.rem(f) } else { other.clone() };
        if other.is_zero() {
            return ModPolynomial::zero(p);
        }
        let mut acc = vec![0u64; n];
        for &a in self.coeffs.iter().rev() {
            // acc <- acc * x  (mod f): shift up, fold the overflow back in.
            let carry = acc[n - 1];
            for j in (1..n).rev() {
                acc[j] = acc[j - 1];
            }
            acc[0] = 0;
            if carry != 0 {
                for (j, &fc) in f.coeffs.iter().enumerate().take(n) {
                    acc[j] = sub_mod(acc[j], mul_mod(carry, fc, p), p);
                }
            }
            // acc <- acc + a * other.
            if a != 0 {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    acc[j] = add_mod(acc[j], mul_mod(a, b, p), p);
                }
            }
        }
        ModPolynomial::new(p, acc)
    }

    /// `self^exp mod f` by square-and-multiply over [`Self::mul_reduce`].
    pub fn pow_mod(&self, exp: u64, f: &Self) -> Self {
        assert!(f.is_monic() && f.degree() >= 1, "modulus must be monic, degree >= 1");
        let mut result = ModPolynomial::one(self.p).rem(f);
        let mut base = self.rem(f);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_reduce(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_reduce(&base, f);
            }
        }
        result
    }
}

/// Degrees of the irreducible factors of a squarefree monic `g`, as sorted
/// `(degree, count)` pairs. Factors themselves are never materialized.
pub fn distinct_degree_profile(g: &ModPolynomial) -> Result<Vec<(u32, u32)>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if g.degree() < 1 {
        return Err(Error::Precondition("distinct-degree profile needs degree >= 1".into()));
    }
    if !g.is_squarefree() {
        return Err(Error::NotSquarefree { p: g.p });
    }

    let p = g.p;
    let x = ModPolynomial::x(p);
    let mut f_star = g.clone();
    let mut h = x.rem(&f_star);
    let mut profile: Vec<(u32, u32)> = Vec::new();
    let mut i = 1u32;
    // A factor of degree i can survive only while deg f* >= 2i; whatever is
    // left after the loop is a single irreducible factor.
    while 2 * (i as usize) <= f_star.degree() {
        h = h.pow_mod(p, &f_star);
        let g_i = f_star.gcd(&h.sub(&x));
        if g_i.degree() >= 1 {
            debug_assert_eq!(g_i.degree() % i as usize, 0);
            profile.push((i, (g_i.degree() / i as usize) as u32));
            f_star = f_star.div_exact(&g_i);
            if f_star.degree() >= 1 {
                h = h.rem(&f_star);
            }
        }
        i += 1;
    }
    if f_star.degree() >= 1 {
        profile.push((f_star.degree() as u32, 1));
        profile.sort_unstable();
    }
    Ok(profile)
}
