//! Frobenius statistics through finite-field factorization.
//!
//! Let f ∈ ℤ[x] be monic irreducible of degree n, M = ℚ[x]/(f), and L the
//! splitting field with G = Gal(L/ℚ) ⊆ Sₙ. For every prime p whose reduction
//! f mod p is squarefree, Dedekind's theorem says the degrees of the
//! irreducible factors of f mod p are precisely the residue degrees of the
//! primes of M above p, and this multiset is the cycle type of the Frobenius
//! class at p acting on the roots. Chebotarev's density theorem turns class
//! proportions into prime densities, so when G = Sₙ the density of primes
//! whose factorization shows at least one degree-d factor equals the d-cycle
//! proportion a(⌊n/d⌋) from the census recursion.
//!
//! The pipeline is deterministic end to end: distinct-degree factorization
//! needs no randomized splitting (cycle types only need factor degrees), and
//! parallel prime scans merge per-segment tallies in ascending order.

pub mod intpoly;
pub mod modpoly;
pub mod sieve;

pub use intpoly::IntPolynomial;
pub use modpoly::{distinct_degree_profile, ModPolynomial};
pub use sieve::{scan_primes_segmented, simple_sieve};

use crate::rational::{ratio_to_f64, Rational};
use crate::sequences::a_closed;
use crate::{Error, Result};
use num_bigint::BigInt;
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Largest admissible prime bound for scans: past 2³² the "desk scale"
/// framing stops applying and memory for row output becomes the constraint.
pub const PRIME_LIMIT_CAP: u64 = 1 << 32;

/// Budget for the certification pass a scan runs before predicting a density.
/// Witness primes for the classic test polynomials all sit far below this.
const SCAN_CERTIFY_BUDGET: u64 = 10_000;

/// Factorization shape of f mod p: the multiset of irreducible factor
/// degrees, or the ramified marker when the reduction is not squarefree.
///
/// For unramified p this is simultaneously the residue-degree multiset of the
/// primes above p and the cycle type of the Frobenius class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueDegreeProfile {
    /// The prime that was reduced mod.
    pub p: u64,
    /// (degree, multiplicity) pairs in ascending degree order; empty when
    /// ramified.
    pub degrees: Vec<(u32, u32)>,
    /// True when f mod p is not squarefree (p divides the discriminant).
    pub ramified: bool,
}

impl ResidueDegreeProfile {
    /// The degrees with multiplicity, largest first: {(1,1),(2,1)} → [2, 1].
    pub fn expanded(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(deg, count) in &self.degrees {
            for _ in 0..count {
                out.push(deg);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Expanded degrees joined by '-', e.g. "2-1-1"; empty for ramified p.
    pub fn profile_string(&self) -> String {
        self.expanded()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }

    /// Whether some irreducible factor has degree exactly `d`.
    pub fn contains_degree(&self, d: u32) -> bool {
        self.degrees.iter().any(|&(deg, count)| deg == d && count > 0)
    }
}

fn require_scan_poly(f: &IntPolynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() < 1 {
        return Err(Error::Precondition("polynomial must be nonconstant".into()));
    }
    Ok(())
}

/// Residue degrees of the primes of ℚ[x]/(f) above p, read off from the
/// factorization of f mod p.
///
/// Preconditions: f monic irreducible over the rationals, p prime. A
/// non-squarefree reduction is reported as `ramified = true` — ramification
/// is data here, not an error.
pub fn residue_degrees(f: &IntPolynomial, p: u64) -> Result<ResidueDegreeProfile> {
    require_scan_poly(f)?;
    // Monic f keeps its degree mod every prime, so reduction cannot fail.
    let g = f.reduce_mod_p(p)?;
    match distinct_degree_profile(&g) {
        Ok(degrees) => Ok(ResidueDegreeProfile { p, degrees, ramified: false }),
        Err(Error::NotSquarefree { .. }) => Ok(ResidueDegreeProfile {
            p,
            degrees: Vec::new(),
            ramified: true,
        }),
        Err(e) => Err(e),
    }
}

/// Outcome of an Sₙ-certification pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// All witnesses found: the Galois group is provably the full symmetric
    /// group.
    CertifiedSn,
    /// Budget exhausted before every witness appeared. Not a disproof.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CertifiedSn => write!(f, "certified_Sn"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Evidence that Gal(f) is the full symmetric group, assembled from
/// factorization patterns at small primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub poly: IntPolynomial,
    /// Degree of the polynomial (the n of the claimed Sₙ).
    pub n: u32,
    /// Every distinct unramified factorization pattern seen, largest degree
    /// first within each pattern.
    pub observed_patterns: BTreeSet<Vec<u32>>,
    /// Criterion name → first prime witnessing it. Keys: "irreducible",
    /// "n_minus_one_cycle", "transposition".
    pub witnesses: BTreeMap<String, u64>,
    pub verdict: Verdict,
}

impl GaloisCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "poly": self.poly.to_string(),
            "n": self.n,
            "verdict": self.verdict.to_string(),
            "witnesses": self.witnesses,
            "observed_patterns": self.observed_patterns.iter().collect::<Vec<_>>(),
        })
    }
}

/// Tries to certify Gal(f) ≅ Sₙ from factorization patterns at primes up to
/// `prime_budget`.
///
/// Three witnesses are sought: (i) a prime with f mod p irreducible —
/// profile {(n,1)} — which proves f irreducible over ℚ and the group
/// transitive; (ii) an (n−1)-cycle — profile {(n−1,1),(1,1)} — whose
/// presence in a transitive group forces 2-transitivity, hence primitivity;
/// (iii) a transposition, recognized as a profile with exactly one even
/// degree, namely a single 2, all other degrees odd: raising that Frobenius
/// element to the odd part of its order kills the odd cycles and leaves a
/// transposition. Primitive plus a transposition is all of Sₙ by Jordan's
/// criterion. For n = 2 the criteria collapse: an irreducible reduction is
/// itself the transposition and suffices alone.
///
/// Precondition: f monic and squarefree over the rationals, deg f ≥ 2.
/// `Inconclusive` is a valid outcome, not an error — some groups (and some
/// budgets) simply never produce the witnesses.
pub fn certify_symmetric_group(f: &IntPolynomial, prime_budget: u64) -> Result<GaloisCertificate> {
    require_scan_poly(f)?;
    if f.degree() < 2 {
        return Err(Error::Precondition(
            "certification needs degree at least 2".into(),
        ));
    }
    let n = f.degree() as u32;
    let mut observed_patterns = BTreeSet::new();
    let mut witnesses: BTreeMap<String, u64> = BTreeMap::new();

    let certified = |w: &BTreeMap<String, u64>| {
        if n == 2 {
            w.contains_key("transposition")
        } else {
            w.len() == 3
        }
    };

    for p in simple_sieve(prime_budget) {
        let profile = residue_degrees(f, p)?;
        if profile.ramified {
            continue;
        }
        let pattern = profile.expanded();

        if pattern == [n] {
            witnesses.entry("irreducible".into()).or_insert(p);
        }
        if n >= 2 && pattern == [n - 1, 1] {
            witnesses.entry("n_minus_one_cycle".into()).or_insert(p);
        }
        let twos = pattern.iter().filter(|&&d| d == 2).count();
        if twos == 1 && pattern.iter().all(|&d| d == 2 || d % 2 == 1) {
            witnesses.entry("transposition".into()).or_insert(p);
        }
        observed_patterns.insert(pattern);

        if certified(&witnesses) {
            break;
        }
    }

    let verdict = if certified(&witnesses) {
        Verdict::CertifiedSn
    } else {
        Verdict::Inconclusive
    };
    Ok(GaloisCertificate {
        poly: f.clone(),
        n,
        observed_patterns,
        witnesses,
        verdict,
    })
}

/// One empirical Chebotarev experiment: among primes p ≤ prime_limit with
/// squarefree reduction, how often does f mod p show a degree-d factor?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityExperiment {
    pub poly: IntPolynomial,
    pub d: u32,
    pub prime_limit: u64,
    /// Primes with squarefree reduction.
    pub unramified_count: u64,
    /// Unramified primes whose profile contains degree d.
    pub hit_count: u64,
    /// Primes skipped because the reduction was not squarefree.
    pub ramified_skipped: u64,
    /// hit_count / unramified_count, exactly.
    pub estimate: Rational,
    /// a(⌊n/d⌋) when the certification pass proved Gal(f) ≅ Sₙ; absent
    /// otherwise (no prediction without a group).
    pub predicted: Option<Rational>,
    /// The certificate the scan ran before predicting.
    pub certificate: GaloisCertificate,
}

impl DensityExperiment {
    pub fn estimate_f64(&self) -> f64 {
        ratio_to_f64(&self.estimate)
    }

    /// Summary object; exact rationals ride as decimal num/den strings with
    /// float mirrors, and `predicted_*` is null when certification failed.
    pub fn summary_json(&self) -> serde_json::Value {
        let (pred_num, pred_den, pred_float) = match &self.predicted {
            Some(r) => (
                json!(r.numer().to_string()),
                json!(r.denom().to_string()),
                json!(ratio_to_f64(r)),
            ),
            None => (json!(null), json!(null), json!(null)),
        };
        json!({
            "poly": self.poly.to_string(),
            "d": self.d,
            "prime_limit": self.prime_limit,
            "unramified_count": self.unramified_count,
            "hit_count": self.hit_count,
            "ramified_skipped": self.ramified_skipped,
            "estimate": self.estimate_f64(),
            "estimate_num": self.estimate.numer().to_string(),
            "estimate_den": self.estimate.denom().to_string(),
            "predicted": pred_float,
            "predicted_num": pred_num,
            "predicted_den": pred_den,
            "certificate_verdict": self.certificate.verdict.to_string(),
        })
    }
}

/// One prime's line in a scan: the CSV row (p, ramified, profile, hit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub p: u64,
    pub ramified: bool,
    /// Expanded profile string like "2-1-1"; empty for ramified p.
    pub profile: String,
    pub hit: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct SegmentTally {
    unramified: u64,
    hits: u64,
    skipped: u64,
}

fn classify_prime(f: &IntPolynomial, d: u32, p: u64) -> ScanRow {
    let profile = residue_degrees(f, p).expect("inputs validated before scanning");
    ScanRow {
        p,
        ramified: profile.ramified,
        hit: profile.contains_degree(d),
        profile: profile.profile_string(),
    }
}

fn tally_row(tally: &mut SegmentTally, row: &ScanRow) {
    if row.ramified {
        tally.skipped += 1;
    } else {
        tally.unramified += 1;
        if row.hit {
            tally.hits += 1;
        }
    }
}

fn validate_scan_params(f: &IntPolynomial, d: u32, prime_limit: u64) -> Result<()> {
    require_scan_poly(f)?;
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    if (f.degree() as u32) < d {
        return Err(Error::Precondition(format!(
            "degree {} is below the target cycle length {d}",
            f.degree()
        )));
    }
    if !(100..=PRIME_LIMIT_CAP).contains(&prime_limit) {
        return Err(Error::InvalidParameter(format!(
            "prime_limit must lie in [100, {PRIME_LIMIT_CAP}]"
        )));
    }
    Ok(())
}

fn assemble_experiment(
    f: &IntPolynomial,
    d: u32,
    prime_limit: u64,
    tally: SegmentTally,
    certificate: GaloisCertificate,
) -> DensityExperiment {
    let estimate = if tally.unramified == 0 {
        Rational::new(BigInt::from(0), BigInt::from(1))
    } else {
        Rational::new(BigInt::from(tally.hits), BigInt::from(tally.unramified))
    };
    let predicted = (certificate.verdict == Verdict::CertifiedSn)
        .then(|| a_closed(d, f.degree() / d as usize));
    DensityExperiment {
        poly: f.clone(),
        d,
        prime_limit,
        unramified_count: tally.unramified,
        hit_count: tally.hits,
        ramified_skipped: tally.skipped,
        estimate,
        predicted,
        certificate,
    }
}

/// Scans every prime p ≤ prime_limit and estimates the density of primes
/// whose factorization profile contains degree d.
///
/// Runs a certification pass first (budget min(prime_limit, 10⁴)) so the
/// experiment can carry the Chebotarev prediction a(⌊n/d⌋) when the group is
/// provably Sₙ. Preconditions: f monic irreducible, 1 ≤ d ≤ deg f,
/// 100 ≤ prime_limit ≤ 2³². The result is identical for any worker count.
pub fn chebotarev_scan(
    f: &IntPolynomial,
    d: u32,
    prime_limit: u64,
    workers: usize,
) -> Result<DensityExperiment> {
    validate_scan_params(f, d, prime_limit)?;
    let certificate = certify_symmetric_group(f, prime_limit.min(SCAN_CERTIFY_BUDGET))?;
    let tallies = scan_primes_segmented(prime_limit, workers, |primes| {
        let mut tally = SegmentTally::default();
        for &p in primes {
            tally_row(&mut tally, &classify_prime(f, d, p));
        }
        tally
    });
    let total = tallies.into_iter().fold(SegmentTally::default(), |a, b| SegmentTally {
        unramified: a.unramified + b.unramified,
        hits: a.hits + b.hits,
        skipped: a.skipped + b.skipped,
    });
    Ok(assemble_experiment(f, d, prime_limit, total, certificate))
}

/// Like [`chebotarev_scan`], additionally returning one row per prime in
/// ascending order — the CSV payload. Keep `prime_limit` modest here; rows
/// are materialized in memory.
pub fn chebotarev_scan_rows(
    f: &IntPolynomial,
    d: u32,
    prime_limit: u64,
    workers: usize,
) -> Result<(DensityExperiment, Vec<ScanRow>)> {
    validate_scan_params(f, d, prime_limit)?;
    let certificate = certify_symmetric_group(f, prime_limit.min(SCAN_CERTIFY_BUDGET))?;
    let segments = scan_primes_segmented(prime_limit, workers, |primes| {
        primes.iter().map(|&p| classify_prime(f, d, p)).collect::<Vec<_>>()
    });
    let mut tally = SegmentTally::default();
    let mut rows = Vec::new();
    for segment in segments {
        for row in segment {
            tally_row(&mut tally, &row);
            rows.push(row);
        }
    }
    Ok((assemble_experiment(f, d, prime_limit, tally, certificate), rows))
}

/// Empirical distribution of factorization profiles — the observable shadow
/// of the Chebotarev class distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileDensityTable {
    pub poly: IntPolynomial,
    pub prime_limit: u64,
    /// Expanded pattern (largest degree first) → number of unramified primes
    /// exhibiting it.
    pub counts: BTreeMap<Vec<u32>, u64>,
    pub unramified_count: u64,
    pub ramified_skipped: u64,
}

impl ProfileDensityTable {
    /// Exact frequencies; they sum to 1 because the patterns partition the
    /// counted primes.
    pub fn frequencies(&self) -> BTreeMap<Vec<u32>, Rational> {
        self.counts
            .iter()
            .map(|(pattern, &count)| {
                (
                    pattern.clone(),
                    Rational::new(BigInt::from(count), BigInt::from(self.unramified_count)),
                )
            })
            .collect()
    }

    /// Float frequency of one pattern; 0 when never observed.
    pub fn frequency_f64(&self, pattern: &[u32]) -> f64 {
        match self.counts.get(pattern) {
            Some(&count) if self.unramified_count > 0 => {
                count as f64 / self.unramified_count as f64
            }
            _ => 0.0,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = self
            .counts
            .iter()
            .map(|(pattern, &count)| {
                let profile = pattern
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join("-");
                json!({
                    "profile": profile,
                    "count": count,
                    "freq_num": count.to_string(),
                    "freq_den": self.unramified_count.to_string(),
                    "frequency": self.frequency_f64(pattern),
                })
            })
            .collect();
        json!({
            "poly": self.poly.to_string(),
            "prime_limit": self.prime_limit,
            "unramified_count": self.unramified_count,
            "ramified_skipped": self.ramified_skipped,
            "classes": classes,
        })
    }
}

/// Tallies the factorization profile of f mod p over all unramified
/// p ≤ prime_limit. Preconditions as for [`chebotarev_scan`] minus d.
pub fn profile_density_table(
    f: &IntPolynomial,
    prime_limit: u64,
    workers: usize,
) -> Result<ProfileDensityTable> {
    require_scan_poly(f)?;
    if !(100..=PRIME_LIMIT_CAP).contains(&prime_limit) {
        return Err(Error::InvalidParameter(format!(
            "prime_limit must lie in [100, {PRIME_LIMIT_CAP}]"
        )));
    }
    let segments = scan_primes_segmented(prime_limit, workers, |primes| {
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut skipped = 0u64;
        for &p in primes {
            let profile = residue_degrees(f, p).expect("inputs validated before scanning");
            if profile.ramified {
                skipped += 1;
            } else {
                *counts.entry(profile.expanded()).or_insert(0) += 1;
            }
        }
        (counts, skipped)
    });
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut ramified_skipped = 0u64;
    for (segment_counts, skipped) in segments {
        ramified_skipped += skipped;
        for (pattern, count) in segment_counts {
            *counts.entry(pattern).or_insert(0) += count;
        }
    }
    let unramified_count = counts.values().sum();
    Ok(ProfileDensityTable {
        poly: f.clone(),
        prime_limit,
        counts,
        unramified_count,
        ramified_skipped,
    })
}
