//! Density of primes with a residue-degree-d prime in at least one field of
//! a growing tower of S_N-extensions.
//!
//! For a tower with symmetric Galois groups of degrees `N_1 < N_2 < …`, the
//! proportion of primes hit by at least one of the first n fields follows the
//! inclusion-exclusion recursion
//!
//! ```text
//! c_0 = 0,   c_n = c_{n-1} + a_n - (1 + delta_n) a_n c_{n-1},
//! a_n = a(floor(N_n / d)),   |delta_n| <= delta_bound(d, N_n),
//! ```
//!
//! which tends to 1. Two evaluations are kept side by side: a `point`
//! sequence with every `delta_n = 0`, and a `guaranteed` interval sequence
//! that absorbs the worst-case `delta_n` at every step through exact corner
//! arithmetic. The point sequence satisfies the residual product identity
//! `1 - c_n = prod (1 - a_i)` exactly, which is asserted at every step.
//!
//! The degree sequences of interest come from dimensions of spaces of
//! level-1 cusp forms: `d_k = dim S_k(1)`, scanned over even weights `k <= B`
//! and thinned to the strictly increasing record subsequence. Conditional on
//! Maeda's conjecture those are degrees of coefficient fields with full
//! symmetric Galois group, and the final guaranteed lower endpoint is an
//! explicit density lower bound depending on `B`.
//!
//! Implementation note: interval endpoints and the point value are carried
//! over a single shared denominator per step and never reduced mid-run; one
//! normalization happens when a report is extracted. This keeps the long
//! towers (hundreds of steps, denominators of ~10^5 digits) away from
//! repeated gcd work while every comparison stays exact.

use crate::rational::{ratio_to_f64, Rational};
use crate::sequences::{a_closed, delta_bound, include_exclude_corners, RationalInterval};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

/// Target groups of the main theorem: PSL₂ for even d, PGL₂ for odd d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupLabel {
    Psl2,
    Pgl2,
}

impl std::fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupLabel::Psl2 => write!(f, "PSL2"),
            GroupLabel::Pgl2 => write!(f, "PGL2"),
        }
    }
}

/// Even residue degrees land in PSL₂, odd ones in PGL₂.
pub fn target_group_label(d: u32) -> GroupLabel {
    if d % 2 == 0 {
        GroupLabel::Psl2
    } else {
        GroupLabel::Pgl2
    }
}

/// dim S_k(1) for level-1 cusp forms of weight k.
pub fn dim_cusp_level1(k: u32) -> u32 {
    if k % 2 == 1 || k < 4 {
        return 0;
    }
    if k % 12 == 2 {
        k / 12 - 1
    } else {
        k / 12
    }
}

/// A tower of symmetric-group extension degrees for a fixed target degree d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    pub d: u32,
    /// Strictly increasing, each at least max(5, 2d).
    pub degrees: Vec<u32>,
}

impl TowerSpec {
    pub fn new(d: u32, degrees: Vec<u32>) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter("d must be >= 1".into()));
        }
        let floor = 5.max(2 * d);
        for (idx, &n) in degrees.iter().enumerate() {
            if n < floor {
                return Err(Error::InvalidParameter(format!(
                    "tower degree {n} is below the floor max(5, 2d) = {floor}"
                )));
            }
            if idx > 0 && degrees[idx - 1] >= n {
                return Err(Error::InvalidParameter(format!(
                    "tower degrees must increase strictly, got {} then {n}",
                    degrees[idx - 1]
                )));
            }
        }
        Ok(TowerSpec { d, degrees })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Point and guaranteed-interval evaluations of the tower recursion.
///
/// Index 0 is the seed `c_0 = 0`; index n corresponds to `degrees[n-1]`.
/// `point[n]` and the endpoints of `guaranteed[n]` share one (unreduced)
/// denominator, so containment checks are plain integer comparisons.
#[derive(Debug, Clone)]
pub struct TowerDensity {
    /// c_n with delta = 0 at every step.
    pub point: Vec<Rational>,
    /// c_n with |delta_i| <= delta_bounds[i-1] absorbed at every step.
    pub guaranteed: Vec<RationalInterval>,
    /// Exact residuals 1 - point[n] = prod_{i<=n} (1 - a_i).
    pub residuals: Vec<Rational>,
    /// a_i = a(floor(N_i / d)), one per tower degree.
    pub a_terms: Vec<Rational>,
    /// The |delta_i| bounds used by the guaranteed sequence.
    pub delta_bounds: Vec<Rational>,
}

/// Runs the recursion over a tower, tracking the point value and the
/// guaranteed interval together.
pub fn tower_density(tower: &TowerSpec, enclosure_terms: usize) -> Result<TowerDensity> {
    let d = tower.d;
    let mut a_terms = Vec::with_capacity(tower.len());
    let mut delta_bounds = Vec::with_capacity(tower.len());
    for &n in &tower.degrees {
        a_terms.push(a_closed(d, (n / d) as usize));
        delta_bounds.push(delta_bound(d, n, enclosure_terms)?);
    }

    // Point chain p/y and residual chain r/y over the product denominator
    // y = prod(a_i denominators); the identity p + r = y is exact.
    let mut p = BigInt::zero();
    let mut r = BigInt::one();
    let mut y = BigInt::one();
    // Interval chain and the point shadow p_d over the interval denominator.
    let mut interval = RationalInterval::point(Rational::zero());
    let mut p_d = BigInt::zero();

    let mut point = vec![Rational::zero()];
    let mut residuals = vec![Rational::one()];
    let mut guaranteed = vec![interval.clone()];

    for (a, db) in a_terms.iter().zip(&delta_bounds) {
        let (xa, ya) = (a.numer(), a.denom());
        let (xd, yd) = (db.numer(), db.denom());
        let den_prev = interval.lo().denom().clone();
        let hi_prev = interval.hi().numer().clone();
        let width_prev = interval.hi().numer() - interval.lo().numer();

        // One inclusion-exclusion corner step for the interval.
        let (next, corner_width) = include_exclude_corners(&interval, a, db);

        // Growth envelope: the pre-clamp corner width never exceeds
        // width_prev + 2 a delta hi_prev. Same denominator on both sides.
        let envelope = &width_prev * ya * yd + BigInt::from(2) * xa * xd * &hi_prev;
        assert!(
            corner_width.numer() <= &envelope,
            "corner width must respect the growth envelope"
        );

        // Point shadow over the same denominator: p' = p + a (1 - p).
        p_d = yd * (&p_d * ya + xa * (&den_prev - &p_d));
        let new_den = next.lo().denom();
        debug_assert_eq!(new_den, &(&den_prev * ya * yd));
        assert!(
            next.lo().numer() <= &p_d && &p_d <= next.hi().numer(),
            "point value must stay inside the guaranteed interval"
        );

        // Clean point and residual chains; p + r = y is the exact residual
        // product identity.
        p = &p * ya + xa * (&y - &p);
        r *= ya - xa;
        y *= ya;
        assert_eq!(&p + &r, y, "residual product identity must hold exactly");

        point.push(Rational::new_raw(p_d.clone(), new_den.clone()));
        residuals.push(Rational::new_raw(r.clone(), y.clone()));
        guaranteed.push(next.clone());
        interval = next;
    }

    // The two point representations are one rational: p_d / D == p / y.
    assert_eq!(
        &p_d * &y,
        &p * interval.lo().denom(),
        "point chains over both denominators must agree"
    );

    Ok(TowerDensity {
        point,
        residuals,
        guaranteed,
        a_terms,
        delta_bounds,
    })
}

/// Even weights k <= b whose d_k sets a new record subject to the
/// max(5, 2d) floor, paired with those dimensions.
fn record_weights(d: u32, b: u32) -> (Vec<u32>, Vec<u32>) {
    let floor = 5.max(2 * d);
    let mut weights = Vec::new();
    let mut degrees = Vec::new();
    let mut best = 0u32;
    let mut k = 4;
    while k <= b {
        let dk = dim_cusp_level1(k);
        if dk >= floor && dk > best {
            weights.push(k);
            degrees.push(dk);
            best = dk;
        }
        k += 2;
    }
    (weights, degrees)
}

/// Builds the strictly increasing tower of record dimensions d_k over even
/// weights k <= b.
pub fn build_maeda_tower(d: u32, b: u32) -> Result<TowerSpec> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    let (_, degrees) = record_weights(d, b);
    if degrees.is_empty() {
        return Err(Error::EmptyTower {
            weight_bound: b,
            min_degree: 5.max(2 * d),
        });
    }
    TowerSpec::new(d, degrees)
}

/// Explicit density lower bound from weights up to B, with its point mirror.
#[derive(Debug, Clone)]
pub struct EffectiveBoundReport {
    pub d: u32,
    pub weight_bound: u32,
    pub enclosure_terms: usize,
    /// The even weights whose d_k enter the tower.
    pub weights_used: Vec<u32>,
    pub tower: TowerSpec,
    /// Final guaranteed interval lower endpoint (reduced).
    pub lower_bound: Rational,
    /// Final point value with all deltas zero (reduced).
    pub point_estimate: Rational,
}

/// Builds the record tower for (d, B), runs the recursion, and reports the
/// final guaranteed lower endpoint alongside the delta-free point estimate.
pub fn effective_lower_bound(d: u32, b: u32, enclosure_terms: usize) -> Result<EffectiveBoundReport> {
    let (weights, degrees) = record_weights(d, b);
    if degrees.is_empty() {
        return Err(Error::EmptyTower {
            weight_bound: b,
            min_degree: 5.max(2 * d),
        });
    }
    let tower = TowerSpec::new(d, degrees)?;
    let density = tower_density(&tower, enclosure_terms)?;
    let lower_bound = density.guaranteed.last().unwrap().lo().reduced();
    let point_estimate = {
        let last = density.point.last().unwrap();
        last.reduced()
    };
    assert!(lower_bound <= point_estimate, "interval must contain the point value");
    assert!(point_estimate <= Rational::one());
    assert!(!lower_bound.numer().is_negative());
    Ok(EffectiveBoundReport {
        d,
        weight_bound: b,
        enclosure_terms,
        weights_used: weights,
        tower,
        lower_bound,
        point_estimate,
    })
}

impl EffectiveBoundReport {
    /// JSON form: exact rationals as decimal-string {num, den} pairs plus
    /// float mirrors (the floats are conveniences, not guarantees).
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d,
            "weight_bound": self.weight_bound,
            "enclosure_terms": self.enclosure_terms,
            "group": target_group_label(self.d).to_string(),
            "weights_used": self.weights_used,
            "degrees": self.tower.degrees,
            "lower_bound": {
                "num": self.lower_bound.numer().to_string(),
                "den": self.lower_bound.denom().to_string(),
                "float": ratio_to_f64(&self.lower_bound),
            },
            "point_estimate": {
                "num": self.point_estimate.numer().to_string(),
                "den": self.point_estimate.denom().to_string(),
                "float": ratio_to_f64(&self.point_estimate),
            },
        })
    }
}
