//! Exact combinatorics of d-cycles in the symmetric group S_n.
//!
//! For `n >= 2d` the proportion of elements of S_n containing at least one
//! d-cycle is `a(i)` with `i = floor(n/d)`:
//!
//! ```text
//! #A_n(d)   = n! a(i)                 elements with at least one d-cycle,
//! #B_n(d,j) = n! b(i,j)               elements with exactly j d-cycles,
//! ```
//!
//! with `a`, `b` the sequences from [`crate::sequences`]. Two further counts
//! control the signed discrepancy `|#A_n^+(d) - #A_n^-(d)|` between even and
//! odd elements of `A_n(d)`:
//!
//! ```text
//! n! (2n-d-1)/(n(n-1)) (1 - a(i-1))   members of B_n(d,1) whose d-cycle
//!                                     contains the point 1 or the point 2,
//! n! 1/(n(n-1)) (1 - a(i-2))          members of B_n(d,2) with 1 in one
//!                                     d-cycle and 2 in the other,
//! ```
//!
//! and the discrepancy is at most their sum, which in turn is at most
//! `n! * 2/(n-1)`. Everything here is exact big-integer arithmetic; the
//! formulas are cross-checked against an exhaustive enumeration oracle
//! (`n <= 10`) and a seeded Monte Carlo sampler for larger `n`.

use crate::rational::{factorial, rat_int, Rational};
use crate::sequences::a_closed;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde_json::json;

/// Maximal degree for the exhaustive enumeration oracle (10! = 3.6M elements).
pub const BRUTE_FORCE_MAX_N: u32 = 10;

/// A permutation of {1, …, n}, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images; rejects non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidParameter(format!(
                    "images {images:?} are not a bijection of {{1,…,{n}}}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// Cycle lengths (non-increasing) and sign of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    pub lengths: Vec<usize>,
    pub n: usize,
    /// `(-1)^(n - number of cycles)`, so +1 for even permutations.
    pub sign: i32,
}

/// Orbit sizes of `p` on {1, …, n}, sorted non-increasing, with the sign.
pub fn cycle_type(p: &Permutation) -> CycleType {
    let n = p.n();
    let mut visited = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        loop {
            visited[cur] = true;
            len += 1;
            cur = p.images[cur] - 1;
            if cur == start {
                break;
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let sign = if (n - lengths.len()) % 2 == 0 { 1 } else { -1 };
    CycleType { lengths, n, sign }
}

/// Exact census of S_n by d-cycle content, produced by [`census_bruteforce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCycleCensus {
    pub n: u32,
    pub d: u32,
    /// n!
    pub total: BigUint,
    /// #A_n(d): at least one d-cycle.
    pub at_least_one: BigUint,
    /// #B_n(d,j) for j = 1..=floor(n/d) (index j-1).
    pub exactly_j: Vec<BigUint>,
    /// #A_n^+(d): members of A_n(d) of positive sign.
    pub plus: BigUint,
    /// #A_n^-(d): members of A_n(d) of negative sign.
    pub minus: BigUint,
    /// Members of B_n(d,1) whose unique d-cycle contains 1 or 2.
    pub special_b1: BigUint,
    /// Members of B_n(d,2) with 1 in one d-cycle and 2 in the other.
    pub special_b2: BigUint,
}

impl DCycleCensus {
    /// JSON object with all counts as decimal strings (they outgrow 64 bits
    /// once formulas take over from enumeration).
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "d": self.d,
            "total": self.total.to_string(),
            "at_least_one": self.at_least_one.to_string(),
            "exactly_j": self.exactly_j.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "plus": self.plus.to_string(),
            "minus": self.minus.to_string(),
            "special_b1": self.special_b1.to_string(),
            "special_b2": self.special_b2.to_string(),
        })
    }
}

/// Exhaustive census of S_n by iterating all n! permutations.
///
/// Unlike the closed formulas this oracle answers for every `1 <= d <= n`,
/// including the `d > n/2` range the lemma-based counts do not cover.
pub fn census_bruteforce(n: u32, d: u32) -> Result<DCycleCensus> {
    if n < 1 || n > BRUTE_FORCE_MAX_N {
        return Err(Error::DegreeOutOfRange { n, max: BRUTE_FORCE_MAX_N });
    }
    if d < 1 || d > n {
        return Err(Error::InvalidCycleLength { n, d });
    }
    let n = n as usize;
    let d = d as usize;
    let jmax = n / d;

    let mut total = 0u64;
    let mut at_least_one = 0u64;
    let mut exactly = vec![0u64; jmax + 1];
    let mut plus = 0u64;
    let mut minus = 0u64;
    let mut special_b1 = 0u64;
    let mut special_b2 = 0u64;

    let mut tally = |images: &[usize]| {
        let stats = classify(images, d);
        total += 1;
        if stats.j >= 1 {
            at_least_one += 1;
            exactly[stats.j] += 1;
            if stats.sign > 0 {
                plus += 1;
            } else {
                minus += 1;
            }
        }
        if stats.j == 1 && (stats.one_in_dcycle || stats.two_in_dcycle) {
            special_b1 += 1;
        }
        if stats.j == 2 && stats.one_in_dcycle && stats.two_in_dcycle && !stats.same_dcycle {
            special_b2 += 1;
        }
    };

    // Heap's algorithm, iterative form.
    let mut a: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    tally(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            tally(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    debug_assert_eq!(BigUint::from(total), factorial(n as u64));

    Ok(DCycleCensus {
        n: n as u32,
        d: d as u32,
        total: BigUint::from(total),
        at_least_one: BigUint::from(at_least_one),
        exactly_j: exactly[1..].iter().map(|&c| BigUint::from(c)).collect(),
        plus: BigUint::from(plus),
        minus: BigUint::from(minus),
        special_b1: BigUint::from(special_b1),
        special_b2: BigUint::from(special_b2),
    })
}

struct DCycleStats {
    /// Number of cycles of length exactly d.
    j: usize,
    sign: i32,
    /// Point 1 lies in some d-cycle.
    one_in_dcycle: bool,
    /// Point 2 lies in some d-cycle.
    two_in_dcycle: bool,
    /// Points 1 and 2 lie in the same d-cycle.
    same_dcycle: bool,
}

fn classify(images: &[usize], d: usize) -> DCycleStats {
    let n = images.len();
    let mut visited = [false; BRUTE_FORCE_MAX_N as usize];
    let mut n_cycles = 0;
    let mut stats = DCycleStats {
        j: 0,
        sign: 1,
        one_in_dcycle: false,
        two_in_dcycle: false,
        same_dcycle: false,
    };
    for start in 0..n {
        if visited[start] {
            continue;
        }
        n_cycles += 1;
        let mut len = 0;
        let mut has1 = false;
        let mut has2 = false;
        let mut cur = start;
        loop {
            visited[cur] = true;
            len += 1;
            has1 |= cur == 0;
            has2 |= cur == 1;
            cur = images[cur] - 1;
            if cur == start {
                break;
            }
        }
        if len == d {
            stats.j += 1;
            stats.one_in_dcycle |= has1;
            stats.two_in_dcycle |= has2;
            stats.same_dcycle |= has1 && has2;
        }
    }
    stats.sign = if (n - n_cycles) % 2 == 0 { 1 } else { -1 };
    stats
}

fn require_range(n: u32, d: u32) -> Result<usize> {
    if d < 1 {
        return Err(Error::InvalidCycleLength { n, d });
    }
    if n < 2 * d {
        return Err(Error::Precondition(format!(
            "formula counts need n >= 2d, got n = {n}, d = {d}"
        )));
    }
    Ok((n / d) as usize)
}

/// Clears `n! * q` to an integer, asserting exactness.
fn clear_factorial(n: u32, q: &Rational) -> BigUint {
    let scaled = Rational::from_integer(BigInt::from(factorial(n as u64))) * q;
    assert!(scaled.is_integer(), "count formula must clear to an integer");
    let int = scaled.to_integer();
    assert!(!int.is_negative(), "counts are nonnegative");
    int.to_biguint().unwrap()
}

/// `#A_n(d) = n! a(floor(n/d))` — elements with at least one d-cycle.
pub fn count_at_least_one(n: u32, d: u32) -> Result<BigUint> {
    let i = require_range(n, d)?;
    Ok(clear_factorial(n, &a_closed(d, i)))
}

/// `#B_n(d,j) = n! b(floor(n/d), j)` — elements with exactly j d-cycles.
pub fn count_exactly_j(n: u32, d: u32, j: u32) -> Result<BigUint> {
    let i = require_range(n, d)?;
    if j < 1 || j as usize > i {
        return Err(Error::Precondition(format!(
            "j must satisfy 1 <= j <= floor(n/d) = {i}, got j = {j}"
        )));
    }
    // b(i,j) = (1 - a(i-j)) / (j! d^j)
    let j = j as usize;
    let mut weight_den = BigInt::one();
    for t in 1..=(j as u64) {
        weight_den *= BigInt::from(t * d as u64);
    }
    let bij = (rat_int(1) - a_closed(d, i - j)) / Rational::from_integer(weight_den);
    Ok(clear_factorial(n, &bij))
}

fn special_b1_rational(n: u32, d: u32, i: usize) -> Rational {
    let nn = n as i64;
    let front = crate::rational::rat(2 * nn - d as i64 - 1, nn * (nn - 1));
    front * (rat_int(1) - a_closed(d, i - 1))
}

fn special_b2_rational(n: u32, d: u32, i: usize) -> Rational {
    let nn = n as i64;
    crate::rational::rat(1, nn * (nn - 1)) * (rat_int(1) - a_closed(d, i - 2))
}

/// `n! (2n-d-1)/(n(n-1)) (1 - a(i-1))` — members of B_n(d,1) whose unique
/// d-cycle contains the point 1 or the point 2.
pub fn count_special_b1(n: u32, d: u32) -> Result<BigUint> {
    let i = require_range(n, d)?;
    Ok(clear_factorial(n, &special_b1_rational(n, d, i)))
}

/// `n! 1/(n(n-1)) (1 - a(i-2))` — members of B_n(d,2) with 1 in one d-cycle
/// and 2 in the other.
pub fn count_special_b2(n: u32, d: u32) -> Result<BigUint> {
    let i = require_range(n, d)?;
    Ok(clear_factorial(n, &special_b2_rational(n, d, i)))
}

/// Upper bound for `|#A_n^+(d) - #A_n^-(d)|`: the sum of the two special
/// counts, as an exact rational. Always at most `n! * 2/(n-1)`.
pub fn signed_discrepancy_bound(n: u32, d: u32) -> Result<Rational> {
    let i = require_range(n, d)?;
    let per_element = special_b1_rational(n, d, i) + special_b2_rational(n, d, i);
    let bound = Rational::from_integer(BigInt::from(factorial(n as u64))) * &per_element;
    let cap = Rational::from_integer(BigInt::from(factorial(n as u64)))
        * crate::rational::rat(2, n as i64 - 1);
    assert!(bound <= cap, "discrepancy bound must respect the 2/(n-1) cap");
    Ok(bound)
}

/// Sample proportion with its standard error `sqrt(p(1-p)/N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProportionEstimate {
    pub hits: u64,
    pub proportion: f64,
    pub std_error: f64,
}

impl ProportionEstimate {
    fn from_counts(hits: u64, samples: u64) -> Self {
        let p = hits as f64 / samples as f64;
        ProportionEstimate {
            hits,
            proportion: p,
            std_error: (p * (1.0 - p) / samples as f64).sqrt(),
        }
    }
}

/// Monte Carlo census over uniform random permutations; a cross-check of the
/// exact counts at degrees where enumeration is out of reach.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloCensus {
    pub n: u32,
    pub d: u32,
    pub samples: u64,
    pub seed: u64,
    pub at_least_one: ProportionEstimate,
    /// Estimates for B_n(d,j), j = 1..=floor(n/d) (index j-1).
    pub exactly_j: Vec<ProportionEstimate>,
}

/// Samples uniform permutations from a seeded deterministic generator and
/// tallies d-cycle content. Bit-for-bit reproducible for fixed (seed, samples).
pub fn monte_carlo_census(n: u32, d: u32, samples: u64, seed: u64) -> Result<MonteCarloCensus> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if d < 1 || d > n {
        return Err(Error::InvalidCycleLength { n, d });
    }
    if samples < 1 {
        return Err(Error::InvalidParameter("samples must be >= 1".into()));
    }
    let n = n as usize;
    let d = d as usize;
    let jmax = n / d;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut images: Vec<usize> = (1..=n).collect();
    let mut at_least_one = 0u64;
    let mut exactly = vec![0u64; jmax + 1];
    for _ in 0..samples {
        // Fisher-Yates from a fixed initial array keeps the draw uniform and
        // the stream of random indices reproducible.
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        let j = count_d_cycles(&images, d);
        if j >= 1 {
            at_least_one += 1;
            exactly[j] += 1;
        }
    }
    Ok(MonteCarloCensus {
        n: n as u32,
        d: d as u32,
        samples,
        seed,
        at_least_one: ProportionEstimate::from_counts(at_least_one, samples),
        exactly_j: (1..=jmax)
            .map(|j| ProportionEstimate::from_counts(exactly[j], samples))
            .collect(),
    })
}

fn count_d_cycles(images: &[usize], d: usize) -> usize {
    let n = images.len();
    let mut visited = vec![false; n];
    let mut j = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        loop {
            visited[cur] = true;
            len += 1;
            cur = images[cur] - 1;
            if cur == start {
                break;
            }
        }
        if len == d {
            j += 1;
        }
    }
    j
}

/// Float mirror of the predicted proportion `a(floor(n/d))`; not guaranteed.
pub fn predicted_proportion_f64(n: u32, d: u32) -> f64 {
    crate::rational::ratio_to_f64(&a_closed(d, (n / d) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::ToPrimitive;

    fn census_u64(c: &DCycleCensus) -> (u64, Vec<u64>, u64, u64, u64, u64) {
        (
            c.at_least_one.to_u64().unwrap(),
            c.exactly_j.iter().map(|x| x.to_u64().unwrap()).collect(),
            c.plus.to_u64().unwrap(),
            c.minus.to_u64().unwrap(),
            c.special_b1.to_u64().unwrap(),
            c.special_b2.to_u64().unwrap(),
        )
    }

    #[test]
    fn cycle_type_examples() {
        let id = Permutation::identity(4);
        let t = cycle_type(&id);
        assert_eq!(t.lengths, vec![1, 1, 1, 1]);
        assert_eq!(t.sign, 1);

        let swap = Permutation::new(vec![2, 1, 3]).unwrap();
        let t = cycle_type(&swap);
        assert_eq!(t.lengths, vec![2, 1]);
        assert_eq!(t.sign, -1);

        let p = Permutation::new(vec![2, 3, 1, 5, 4]).unwrap();
        let t = cycle_type(&p);
        assert_eq!(t.lengths, vec![3, 2]);
        assert_eq!(t.sign, -1);
    }

    #[test]
    fn permutation_rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![4, 1, 2]).is_err());
    }

    #[test]
    fn sign_matches_inversion_parity() {
        // Exhaust S_4: sign from cycle count equals (-1)^inversions.
        for c in census_all_s4() {
            let p = Permutation::new(c.clone()).unwrap();
            let mut inversions = 0;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if c[i] > c[j] {
                        inversions += 1;
                    }
                }
            }
            let expected = if inversions % 2 == 0 { 1 } else { -1 };
            assert_eq!(cycle_type(&p).sign, expected, "images {c:?}");
        }
    }

    fn census_all_s4() -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let v = vec![a, b, c, d];
                        let mut sorted = v.clone();
                        sorted.sort_unstable();
                        if sorted == vec![1, 2, 3, 4] {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn bruteforce_s4_d2() {
        let c = census_bruteforce(4, 2).unwrap();
        let (alo, ej, plus, minus, b1, b2) = census_u64(&c);
        assert_eq!(alo, 9);
        assert_eq!(ej, vec![6, 3]);
        assert_eq!(plus, 3);
        assert_eq!(minus, 6);
        assert_eq!(b1, 5);
        assert_eq!(b2, 2);
        assert_eq!(c.total.to_u64().unwrap(), 24);
    }

    #[test]
    fn bruteforce_boundaries() {
        let c = census_bruteforce(1, 1).unwrap();
        assert_eq!(c.at_least_one.to_u64().unwrap(), 1);

        // The two 3-cycles in S_3 are even.
        let c = census_bruteforce(3, 3).unwrap();
        assert_eq!(c.at_least_one.to_u64().unwrap(), 2);
        assert_eq!(c.plus.to_u64().unwrap(), 2);
        assert_eq!(c.minus.to_u64().unwrap(), 0);

        assert!(census_bruteforce(11, 2).is_err());
        assert!(census_bruteforce(0, 1).is_err());
        assert!(census_bruteforce(4, 5).is_err());
        assert!(census_bruteforce(4, 0).is_err());
    }

    #[test]
    fn census_internal_consistency() {
        for n in 1..=7u32 {
            for d in 1..=n {
                let c = census_bruteforce(n, d).unwrap();
                let sum: BigUint = c.exactly_j.iter().sum();
                assert_eq!(sum, c.at_least_one, "n={n} d={d}");
                assert_eq!(&c.plus + &c.minus, c.at_least_one, "n={n} d={d}");
                assert!(c.at_least_one <= c.total);
            }
        }
    }

    #[test]
    fn formula_counts() {
        assert_eq!(count_at_least_one(4, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_at_least_one(5, 2).unwrap(), BigUint::from(45u32));
        assert_eq!(count_at_least_one(2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_exactly_j(4, 2, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(count_exactly_j(4, 2, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(count_exactly_j(6, 3, 2).unwrap(), BigUint::from(40u32));
        assert_eq!(count_special_b1(4, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(count_special_b1(5, 2).unwrap(), BigUint::from(21u32));
        assert_eq!(count_special_b1(6, 3).unwrap(), BigUint::from(128u32));
        assert_eq!(count_special_b2(4, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(count_special_b2(5, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(count_special_b2(6, 2).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn formula_preconditions() {
        assert_eq!(count_at_least_one(3, 2).unwrap_err().code(), "precondition-violation");
        assert_eq!(count_exactly_j(4, 2, 3).unwrap_err().code(), "precondition-violation");
        assert_eq!(count_exactly_j(4, 2, 0).unwrap_err().code(), "precondition-violation");
        assert_eq!(count_at_least_one(4, 0).unwrap_err().code(), "invalid-d");
    }

    #[test]
    fn discrepancy_bound_values() {
        assert_eq!(signed_discrepancy_bound(5, 2).unwrap(), rat(27, 1));
        assert_eq!(signed_discrepancy_bound(4, 2).unwrap(), rat(7, 1));

        let c = census_bruteforce(5, 2).unwrap();
        assert_eq!(c.plus.to_u64().unwrap(), 15);
        assert_eq!(c.minus.to_u64().unwrap(), 30);
        // |15 - 30| = 15 <= 27 <= 120 * 2/4 = 60.
        assert!(rat(15, 1) <= rat(27, 1));
        assert!(rat(27, 1) <= rat(60, 1));
    }

    #[test]
    fn formula_matches_enumeration_spot() {
        // Full sweep lives in the acceptance suite; pin two mid-size cases.
        for (n, d) in [(6u32, 2u32), (7, 3)] {
            let c = census_bruteforce(n, d).unwrap();
            assert_eq!(count_at_least_one(n, d).unwrap(), c.at_least_one, "n={n} d={d}");
            for j in 1..=(n / d) {
                assert_eq!(
                    count_exactly_j(n, d, j).unwrap(),
                    c.exactly_j[(j - 1) as usize],
                    "n={n} d={d} j={j}"
                );
            }
            assert_eq!(count_special_b1(n, d).unwrap(), c.special_b1);
            assert_eq!(count_special_b2(n, d).unwrap(), c.special_b2);
        }
    }

    #[test]
    fn census_json_uses_decimal_strings() {
        let c = census_bruteforce(4, 2).unwrap();
        let v = c.to_json();
        assert_eq!(v["at_least_one"], "9");
        assert_eq!(v["exactly_j"][0], "6");
        assert_eq!(v["total"], "24");
    }

    #[test]
    fn monte_carlo_small_case() {
        let mc = monte_carlo_census(4, 2, 100_000, 7).unwrap();
        // Exact proportion is 9/24 = 0.375; the fixed seed makes this stable.
        assert!((mc.at_least_one.proportion - 0.375).abs() < 0.01);
        assert!(mc.at_least_one.std_error > 0.0);
    }

    #[test]
    fn monte_carlo_large_degree() {
        let mc = monte_carlo_census(100, 2, 20_000, 42).unwrap();
        let predicted = predicted_proportion_f64(100, 2); // about 1 - e^(-1/2)
        assert!((predicted - 0.3934693).abs() < 1e-6);
        assert!((mc.at_least_one.proportion - predicted).abs() < 3.0 * mc.at_least_one.std_error + 0.005);
    }

    #[test]
    fn monte_carlo_trivial_and_deterministic() {
        let mc = monte_carlo_census(1, 1, 50, 3).unwrap();
        assert_eq!(mc.at_least_one.proportion, 1.0);

        let again = monte_carlo_census(4, 2, 10_000, 99).unwrap();
        let twice = monte_carlo_census(4, 2, 10_000, 99).unwrap();
        assert_eq!(again, twice);
    }
}
