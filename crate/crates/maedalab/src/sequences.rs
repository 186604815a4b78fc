//! The sequences `a(i)`, `b(i,j)` attached to a cycle length `d`, rational
//! enclosures of their limit `1 - exp(-1/d)`, and the convergence machinery
//! for inclusion-exclusion recursions.
//!
//! For a fixed integer `d >= 1` define recursively
//!
//! ```text
//! a(0) = 0,   b(i,j) = (1 - a(i-j)) / (j! d^j),   a(i) = sum_{k=1..i} b(i,k),
//! ```
//!
//! which closes to the alternating partial sum
//!
//! ```text
//! a(i) = sum_{j=1..i} (-1)^(j+1) / (j! d^j)  ->  1 - exp(-1/d),
//! ```
//!
//! with tail at most `2 / ((i+1)! d^(i+1))`. Because the series alternates
//! with strictly decreasing terms, consecutive partial sums bracket the limit,
//! which is how `exp(-1/d)` is enclosed here without ever trusting a float.
//!
//! The inclusion-exclusion step `c' = c + a - (1+delta) a c` tracks the
//! proportion of group elements hit by at least one of two projections; the
//! map is affine in `c` for fixed `delta` and affine in `delta` for fixed `c`,
//! so on a rectangle `[c_lo, c_hi] x [-D, D]` its range is spanned by the four
//! corner values. That corner rule is what [`include_exclude_step`] evaluates,
//! keeping every bound an exact rational.

use crate::rational::{rat_int, ratio_to_f64, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The sequences `a(0..=i_max)` and the triangular table `b(i,j)` for a fixed
/// cycle length `d`, filled by the defining mutual recursion.
#[derive(Debug, Clone)]
pub struct MaedaSequence {
    /// Cycle length.
    pub d: u32,
    /// `a[i]` is `a(i)`; index 0 holds `a(0) = 0`.
    pub a: Vec<Rational>,
    /// `b[i-1][j-1]` is `b(i,j)` for `1 <= j <= i <= i_max`.
    pub b: Vec<Vec<Rational>>,
}

impl MaedaSequence {
    /// `a(i)` as an exact rational.
    pub fn a(&self, i: usize) -> &Rational {
        &self.a[i]
    }

    /// `b(i,j)` for `1 <= j <= i`.
    pub fn b(&self, i: usize, j: usize) -> &Rational {
        &self.b[i - 1][j - 1]
    }

    /// Largest index filled.
    pub fn i_max(&self) -> usize {
        self.a.len() - 1
    }

    /// Non-guaranteed float mirror of `a(i)`.
    pub fn a_float(&self, i: usize) -> f64 {
        ratio_to_f64(&self.a[i])
    }
}

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    /// Interval `[lo, hi]`; requires `lo <= hi`.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "interval endpoints out of order: lo={lo} > hi={hi}"
            )));
        }
        Ok(RationalInterval { lo, hi })
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// `hi - lo`.
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Whether `x` lies in the interval (endpoints included).
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `self` is contained in `other`.
    pub fn subset_of(&self, other: &RationalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Non-guaranteed float mirrors of the endpoints.
    pub fn to_f64s(&self) -> (f64, f64) {
        (ratio_to_f64(&self.lo), ratio_to_f64(&self.hi))
    }
}

/// Trace of an inclusion-exclusion style iteration.
///
/// `terms[0]` is the starting value; `terms[n]` for `n >= 1` is the iterate
/// produced from `terms[n-1]` by the recursion driven by `a_terms[n-1]` (and
/// `delta_terms[n-1]` when deltas are present). For the fixed-`gamma`
/// recursion the exact residuals `r_n = 1 - gamma * b_n` are recorded too.
#[derive(Debug, Clone)]
pub struct ConvergenceTrace {
    pub terms: Vec<Rational>,
    pub a_terms: Vec<Rational>,
    pub delta_terms: Option<Vec<Rational>>,
    pub residuals: Option<Vec<Rational>>,
}

/// Fills `a` and `b` by the defining mutual recursion.
pub fn a_recursive(d: u32, i_max: usize) -> Result<MaedaSequence> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    let mut a: Vec<Rational> = Vec::with_capacity(i_max + 1);
    a.push(Rational::zero());
    let mut b: Vec<Vec<Rational>> = Vec::with_capacity(i_max);
    // 1 / (j! d^j), extended one term per row.
    let mut weight = Vec::with_capacity(i_max + 1);
    weight.push(Rational::one()); // j = 0 placeholder
    for i in 1..=i_max {
        let prev = weight.last().unwrap().clone();
        weight.push(prev / rat_int(i as i64 * d as i64));
        let mut row = Vec::with_capacity(i);
        let mut sum = Rational::zero();
        for j in 1..=i {
            let bij = &weight[j] * (rat_int(1) - &a[i - j]);
            sum += &bij;
            row.push(bij);
        }
        a.push(sum);
        b.push(row);
    }
    Ok(MaedaSequence { d, a, b })
}

/// Closed form `a(i) = sum_{j=1..i} (-1)^(j+1) / (j! d^j)`.
pub fn a_closed(d: u32, i: usize) -> Rational {
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for j in 1..=i {
        term /= rat_int(j as i64 * d as i64);
        if j % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    sum
}

/// Non-guaranteed float mirror of [`a_closed`].
pub fn a_closed_f64(d: u32, i: usize) -> f64 {
    ratio_to_f64(&a_closed(d, i))
}

/// Rational bracket around `1 - exp(-1/d)` from consecutive partial sums of
/// the alternating series; width is exactly
/// `1 / ((precision_terms+1)! d^(precision_terms+1))`.
pub fn limit_enclosure(d: u32, precision_terms: usize) -> Result<RationalInterval> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    if precision_terms < 1 {
        return Err(Error::InvalidParameter("precision_terms must be >= 1".into()));
    }
    let s0 = a_closed(d, precision_terms);
    let s1 = a_closed(d, precision_terms + 1);
    if s0 <= s1 {
        RationalInterval::new(s0, s1)
    } else {
        RationalInterval::new(s1, s0)
    }
}

/// Non-guaranteed float mirror of the limit `1 - exp(-1/d)`.
pub fn limit_f64(d: u32) -> f64 {
    1.0 - (-1.0 / d as f64).exp()
}

/// Tail estimate `2 / ((i+1)! d^(i+1))`, an upper bound for
/// `|a(i) - (1 - exp(-1/d))|`.
pub fn tail_bound(d: u32, i: usize) -> Rational {
    let mut denom = BigInt::one();
    for j in 1..=(i as u64 + 1) {
        denom *= BigInt::from(j * d as u64);
    }
    Rational::new(BigInt::from(2), denom)
}

/// Rational upper bound for the inclusion-exclusion perturbation:
///
/// ```text
/// |delta| <= 1/(n-1) * 2 / (1 - exp(-1/d) - 2/((1+ceil(n/d))! d^(1+ceil(n/d))))
/// ```
///
/// with `1 - exp(-1/d)` replaced by the lower endpoint of its enclosure, so
/// the returned value dominates the true bound.
pub fn delta_bound(d: u32, n: u32, enclosure_terms: usize) -> Result<Rational> {
    let floor = 5.max(2 * d);
    if n < floor {
        return Err(Error::Precondition(format!(
            "delta bound requires n >= max(5, 2d) = {floor}, got n = {n}"
        )));
    }
    let enclosure = limit_enclosure(d, enclosure_terms)?;
    let m = (n as usize).div_ceil(d as usize); // ceil(n/d)
    let tail = {
        // 2 / ((1+m)! d^(1+m))
        let mut denom = BigInt::one();
        for j in 1..=(m as u64 + 1) {
            denom *= BigInt::from(j * d as u64);
        }
        Rational::new(BigInt::from(2), denom)
    };
    let denominator = enclosure.lo() - &tail;
    if denominator <= Rational::zero() {
        return Err(Error::NonpositiveDenominator);
    }
    Ok(rat_int(2) / (rat_int(n as i64 - 1) * denominator))
}

/// Non-guaranteed float mirror of [`delta_bound`].
pub fn delta_bound_f64(d: u32, n: u32, enclosure_terms: usize) -> Result<f64> {
    Ok(ratio_to_f64(&delta_bound(d, n, enclosure_terms)?))
}

/// Exact image of `(c, delta) -> c + a - (1+delta) a c` over
/// `c in c_prev`, `|delta| <= delta_abs_bound`, intersected with `[0, 1]`.
///
/// The map is affine in `c` for fixed `delta` and affine in `delta` for fixed
/// `c`, so its extrema over the rectangle sit at the four corners.
///
/// The arithmetic runs over a shared denominator without intermediate
/// reduction; endpoints of the result may be unreduced (they still compare
/// and print as exact rationals).
pub fn include_exclude_step(
    c_prev: &RationalInterval,
    a: &Rational,
    delta_abs_bound: &Rational,
) -> Result<RationalInterval> {
    if a < &Rational::zero() || a > &Rational::one() {
        return Err(Error::Precondition(format!("a must lie in [0,1], got {a}")));
    }
    if c_prev.lo() < &Rational::zero() || c_prev.hi() > &Rational::one() {
        return Err(Error::Precondition("c_prev must be contained in [0,1]".into()));
    }
    if delta_abs_bound < &Rational::zero() {
        return Err(Error::Precondition("delta_abs_bound must be >= 0".into()));
    }
    Ok(include_exclude_corners(c_prev, a, delta_abs_bound).0)
}

/// Corner evaluation of the inclusion-exclusion step.
///
/// Returns the clamped interval together with the unclamped corner width,
/// which the tower recursion checks against its growth envelope.
pub(crate) fn include_exclude_corners(
    c_prev: &RationalInterval,
    a: &Rational,
    delta_abs_bound: &Rational,
) -> (RationalInterval, Rational) {
    // Common positive denominator D for both endpoints of c_prev.
    let (lo_n, hi_n, den) = common_denominator(c_prev);
    let (pa, qa) = (a.numer().clone(), a.denom().clone());
    let (pd, qd) = (delta_abs_bound.numer().clone(), delta_abs_bound.denom().clone());
    debug_assert!(qa.is_positive() && qd.is_positive() && !pd.is_negative());

    // New denominator D' = D * qa * qd; numerator of one corner:
    //   c*qa*qd + pa*D*qd - pa*c*qd - s*pd*pa*c,  s in {-1, +1}.
    let new_den = &den * &qa * &qd;
    let a_term = &pa * &den * &qd;
    let mut corners: Vec<BigInt> = Vec::with_capacity(4);
    for c in [&lo_n, &hi_n] {
        let base = c * &qa * &qd + &a_term - &pa * c * &qd;
        let wiggle = &pd * &pa * c;
        corners.push(&base - &wiggle);
        corners.push(base + wiggle);
    }
    let min = corners.iter().min().unwrap().clone();
    let max = corners.iter().max().unwrap().clone();
    let corner_width = Rational::new_raw(&max - &min, new_den.clone());

    // Intersect with [0, 1].
    let lo = min.max(BigInt::zero());
    let hi = max.min(new_den.clone());
    let interval = RationalInterval {
        lo: Rational::new_raw(lo, new_den.clone()),
        hi: Rational::new_raw(hi, new_den),
    };
    (interval, corner_width)
}

/// Brings both endpoints to one positive denominator.
fn common_denominator(interval: &RationalInterval) -> (BigInt, BigInt, BigInt) {
    let (ln, ld) = (interval.lo.numer(), interval.lo.denom());
    let (hn, hd) = (interval.hi.numer(), interval.hi.denom());
    if ld == hd {
        (ln.clone(), hn.clone(), ld.clone())
    } else {
        (ln * hd, hn * ld, ld * hd)
    }
}

/// Iterates `b_n = b_{n-1} + a_n - gamma * b_{n-1} * a_n` and records the
/// residuals `r_n = 1 - gamma * b_n`, asserting the exact product identity
/// `r_n = (1 - gamma b_0) * prod_{i<=n} (1 - gamma a_i)` at every step.
pub fn converge_part_a(
    b0: &Rational,
    gamma: &Rational,
    a_terms: &[Rational],
) -> Result<ConvergenceTrace> {
    if gamma <= &Rational::zero() {
        return Err(Error::Precondition("gamma must be > 0".into()));
    }
    let gamma_inv = rat_int(1) / gamma;
    for a in a_terms {
        if a < &Rational::zero() {
            return Err(Error::Precondition(format!("a_n must be >= 0, got {a}")));
        }
        if a >= &gamma_inv {
            return Err(Error::Precondition(format!(
                "a_n must be < 1/gamma = {gamma_inv}, got {a}"
            )));
        }
    }
    let mut terms = Vec::with_capacity(a_terms.len() + 1);
    let mut residuals = Vec::with_capacity(a_terms.len() + 1);
    let mut b = b0.clone();
    let mut product = rat_int(1) - gamma * &b;
    terms.push(b.clone());
    residuals.push(product.clone());
    for a in a_terms {
        b = &b + a - gamma * &b * a;
        product *= rat_int(1) - gamma * a;
        let residual = rat_int(1) - gamma * &b;
        assert_eq!(residual, product, "residual product identity must hold exactly");
        terms.push(b.clone());
        residuals.push(residual);
    }
    Ok(ConvergenceTrace {
        terms,
        a_terms: a_terms.to_vec(),
        delta_terms: None,
        residuals: Some(residuals),
    })
}

/// Iterates the inclusion-exclusion sequence
/// `c_n = c_{n-1} + a_n - (1 + delta_n) c_{n-1} a_n`.
pub fn converge_part_b(
    c0: &Rational,
    a_terms: &[Rational],
    delta_terms: &[Rational],
) -> Result<ConvergenceTrace> {
    if a_terms.len() != delta_terms.len() {
        return Err(Error::InvalidParameter(format!(
            "a_terms and delta_terms lengths differ: {} vs {}",
            a_terms.len(),
            delta_terms.len()
        )));
    }
    for a in a_terms {
        if a < &Rational::zero() {
            return Err(Error::Precondition(format!("a_n must be >= 0, got {a}")));
        }
    }
    let mut terms = Vec::with_capacity(a_terms.len() + 1);
    let mut c = c0.clone();
    terms.push(c.clone());
    for (a, delta) in a_terms.iter().zip(delta_terms) {
        c = &c + a - (rat_int(1) + delta) * &c * a;
        terms.push(c.clone());
    }
    Ok(ConvergenceTrace {
        terms,
        a_terms: a_terms.to_vec(),
        delta_terms: Some(delta_terms.to_vec()),
        residuals: None,
    })
}
