//! Hecke characteristic polynomials for level-1 cusp forms.
//!
//! The space S_k(1) of weight-k level-1 cusp forms has dimension
//! d_k = ⌊k/12⌋ − [k ≡ 2 (mod 12)] for even k ≥ 4. Maeda's conjecture
//! asserts that the characteristic polynomial of the Hecke operator T₂ on
//! S_k(1) is irreducible with full symmetric Galois group S_{d_k}; its truth
//! makes the coefficient field ℚ(aₙ(f)) of any eigenform a single degree-d_k
//! field, which is exactly the hypothesis under which the density model's
//! tower applies to the fields generated by eigenforms.
//!
//! Everything here is exact integer arithmetic: q-expansions of E₄, E₆ and
//! Δ = (E₄³ − E₆²)/1728, the echelonized Victor Miller basis
//! fᵢ = qⁱ + O(q^(d_k+1)) built from Δ-power monomials, the T₂ matrix read
//! off via aₙ(T₂f) = a₂ₙ(f) + 2^(k−1)·a_{n/2}(f), and a fraction-free
//! (Bareiss) determinant of xI − M over ℤ[x], whose exact divisions are
//! asserted rather than trusted.

use crate::density_model::dim_cusp_level1;
use crate::ffpoly::{certify_symmetric_group, GaloisCertificate, IntPolynomial, Verdict};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;
use std::fmt;

/// A truncated q-expansion a₀ + a₁q + … + a_prec·q^prec of a level-1 form of
/// the given weight, with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    weight: u32,
    coeffs: Vec<BigInt>,
}

impl QExpansion {
    /// Builds an expansion from coefficients a₀..a_prec (length prec + 1).
    pub fn new(weight: u32, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "an expansion carries at least a₀");
        QExpansion { weight, coeffs }
    }

    /// The constant expansion 1 (weight 0, the empty product of generators).
    pub fn one(prec: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); prec + 1];
        coeffs[0] = BigInt::one();
        QExpansion { weight: 0, coeffs }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Truncation order: coefficients a₀..a_prec are meaningful.
    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of qⁿ; n must be within precision.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Sum of equal-weight expansions, truncated to the shorter precision.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.weight, other.weight, "addition needs equal weights");
        let prec = self.prec().min(other.prec());
        QExpansion {
            weight: self.weight,
            coeffs: (0..=prec).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.weight, other.weight, "subtraction needs equal weights");
        let prec = self.prec().min(other.prec());
        QExpansion {
            weight: self.weight,
            coeffs: (0..=prec).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect(),
        }
    }

    /// Product of expansions (weights add), truncated to the shorter
    /// precision.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        let mut coeffs = vec![BigInt::zero(); prec + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QExpansion { weight: self.weight + other.weight, coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QExpansion {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact coefficientwise division; panics if any division leaves a
    /// remainder (used only where exactness is a theorem, e.g. Δ's 1728).
    fn div_exact_scalar(&self, c: &BigInt) -> Self {
        QExpansion {
            weight: self.weight,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = (a / c, a % c);
                    assert!(r.is_zero(), "coefficient division must be exact");
                    q
                })
                .collect(),
        }
    }
}

/// Normalized Eisenstein series E₄ = 1 + 240Σσ₃(n)qⁿ or
/// E₆ = 1 − 504Σσ₅(n)qⁿ to the given precision, by a divisor-sum sieve.
pub fn eisenstein(weight: u32, prec: usize) -> Result<QExpansion> {
    let (power, factor): (u32, i64) = match weight {
        4 => (3, 240),
        6 => (5, -504),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "eisenstein generator weight must be 4 or 6, got {weight}"
            )))
        }
    };
    if prec < 1 {
        return Err(Error::InvalidParameter("precision must be at least 1".into()));
    }
    // sigma[n] = σ_power(n), accumulated divisor by divisor.
    let mut sigma = vec![BigInt::zero(); prec + 1];
    for d in 1..=prec {
        let dp = BigInt::from(d).pow(power);
        for multiple in (d..=prec).step_by(d) {
            sigma[multiple] += &dp;
        }
    }
    let factor = BigInt::from(factor);
    let mut coeffs = vec![BigInt::one()];
    coeffs.extend(sigma.into_iter().skip(1).map(|s| s * &factor));
    Ok(QExpansion::new(weight, coeffs))
}

/// The discriminant cusp form Δ = (E₄³ − E₆²)/1728, the normalized generator
/// of S₁₂(1).
pub fn delta_form(prec: usize) -> Result<QExpansion> {
    if prec < 1 {
        return Err(Error::InvalidParameter("precision must be at least 1".into()));
    }
    let e4 = eisenstein(4, prec)?;
    let e6 = eisenstein(6, prec)?;
    let delta = e4.mul(&e4).mul(&e4).sub(&e6.mul(&e6)).div_exact_scalar(&BigInt::from(1728));
    assert_eq!(delta.weight(), 12);
    assert!(delta.coeff(0).is_zero(), "Δ is a cusp form");
    assert!(delta.coeff(1).is_one(), "Δ is normalized");
    Ok(delta)
}

/// Splits k ≥ 4 even as k = 12n + e with e ∈ {0, 4, 6, 8, 10, 14}; then
/// n = d_k and E_e exists as a monomial in E₄, E₆.
fn weight_split(k: u32) -> (u32, u32) {
    let mut e = k % 12;
    if e == 2 {
        e += 12;
    }
    ((k - e) / 12, e)
}

/// The weight-e Eisenstein factor E_e for e ∈ {0, 4, 6, 8, 10, 14}, using
/// E₈ = E₄², E₁₀ = E₄E₆, E₁₄ = E₄²E₆ (each space is one-dimensional).
fn eisenstein_factor(e: u32, prec: usize) -> Result<QExpansion> {
    let e4 = eisenstein(4, prec)?;
    let e6 = eisenstein(6, prec)?;
    Ok(match e {
        0 => QExpansion::one(prec),
        4 => e4,
        6 => e6,
        8 => e4.mul(&e4),
        10 => e4.mul(&e6),
        14 => e4.mul(&e4).mul(&e6),
        _ => unreachable!("weight_split yields e in {{0,4,6,8,10,14}}"),
    })
}

/// The echelonized integral basis f₁..f_{d_k} of S_k(1) with
/// fᵢ = qⁱ + O(q^(d_k+1)): Victor Miller's construction from the monomials
/// Δ^j·E₆^(2(n−j))·E_e followed by integer back-substitution.
///
/// Preconditions: k ≥ 12 even, prec ≥ 2d_k + 2 (enough to read off T₂).
/// Returns d_k expansions — the empty sequence when d_k = 0 (k = 14).
pub fn victor_miller_basis(k: u32, prec: usize) -> Result<Vec<QExpansion>> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::Precondition(format!(
            "cusp-form basis needs even weight k >= 12, got {k}"
        )));
    }
    let (n, e) = weight_split(k);
    debug_assert_eq!(n, dim_cusp_level1(k));
    let needed = 2 * (n as usize) + 2;
    if prec < needed {
        return Err(Error::PrecisionTooSmall { prec, needed });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let n = n as usize;

    let delta = delta_form(prec)?;
    let e6 = eisenstein(6, prec)?;
    let e6sq = e6.mul(&e6);
    let e_factor = eisenstein_factor(e, prec)?;

    // Power ladders: delta_pow[j] = Δ^j, e6sq_pow[m] = E₆^(2m).
    let mut delta_pow = vec![QExpansion::one(prec)];
    let mut e6sq_pow = vec![QExpansion::one(prec)];
    for j in 1..=n {
        delta_pow.push(delta_pow[j - 1].mul(&delta));
        e6sq_pow.push(e6sq_pow[j - 1].mul(&e6sq));
    }

    // Monomial f_j = Δ^j·E₆^(2(n−j))·E_e starts q^j + …, so the j-th row
    // already has zeros below its pivot; clearing above-pivot columns is
    // plain integer back-substitution against the already-final rows.
    let mut forms: Vec<QExpansion> = (1..=n)
        .map(|j| delta_pow[j].mul(&e6sq_pow[n - j]).mul(&e_factor))
        .collect();
    for i in (0..n - 1).rev() {
        for m in (i + 1)..n {
            let c = forms[i].coeff(m + 1).clone();
            if !c.is_zero() {
                forms[i] = forms[i].sub(&forms[m].scale(&c));
            }
        }
    }
    for (i, f) in forms.iter().enumerate() {
        assert_eq!(f.weight(), k);
        assert!(f.coeff(0).is_zero(), "cusp form");
        for j in 1..=n {
            let expected = if i + 1 == j { BigInt::one() } else { BigInt::zero() };
            assert_eq!(*f.coeff(j), expected, "echelon property at ({i}, {j})");
        }
    }
    Ok(forms)
}

/// Characteristic polynomial of T₂ acting on S_k(1): monic, degree d_k,
/// integer coefficients constant-term-first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCharPoly {
    pub k: u32,
    pub dk: u32,
    /// Coefficients c₀..c_{dk} of c₀ + c₁x + … + x^dk.
    pub coeffs: Vec<BigInt>,
}

impl HeckeCharPoly {
    pub fn as_int_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "dk": self.dk,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for HeckeCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int_polynomial())
    }
}

/// Determinant of xI − M by fraction-free (Bareiss) elimination over ℤ[x].
///
/// At stage r the pivot entry is the characteristic polynomial of the leading
/// (r+1)×(r+1) minor — monic, hence never zero — so no pivoting is required
/// and every division (by the previous pivot, also monic) is exact.
fn charpoly_bareiss(m: &[Vec<BigInt>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut a: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPolynomial::new(vec![-m[i][j].clone(), BigInt::one()])
                    } else {
                        IntPolynomial::new(vec![-m[i][j].clone()])
                    }
                })
                .collect()
        })
        .collect();
    let mut prev_pivot = IntPolynomial::one();
    for r in 0..n - 1 {
        let pivot = a[r][r].clone();
        assert!(pivot.is_monic(), "Bareiss pivot is a charpoly, hence monic");
        for i in r + 1..n {
            for j in r + 1..n {
                let num = pivot.mul(&a[i][j]).sub(&a[i][r].mul(&a[r][j]));
                a[i][j] = num.div_exact_monic(&prev_pivot);
            }
        }
        prev_pivot = pivot;
    }
    a[n - 1][n - 1].clone()
}

/// Characteristic polynomial of T₂ on S_k(1) at an explicit q-expansion
/// precision (minimum 2d_k + 2). Any admissible precision yields the same
/// polynomial; the default entry point [`t2_charpoly`] uses 4d_k + 4.
pub fn t2_charpoly_at_precision(k: u32, prec: usize) -> Result<HeckeCharPoly> {
    let basis = victor_miller_basis(k, prec)?;
    let d = basis.len();
    let two_pow = BigInt::one() << (k - 1);

    // M[i][j] = a_i(T₂ f_j) for 1 ≤ i, j ≤ d: the echelon property makes the
    // first d coefficients of T₂ f_j its coordinates in the basis.
    let matrix: Vec<Vec<BigInt>> = (1..=d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut entry = basis[j].coeff(2 * i).clone();
                    if i % 2 == 0 {
                        entry += &two_pow * basis[j].coeff(i / 2);
                    }
                    entry
                })
                .collect()
        })
        .collect();

    let charpoly = charpoly_bareiss(&matrix);
    assert_eq!(charpoly.degree(), d, "characteristic polynomial has degree d_k");
    assert!(charpoly.is_monic());
    Ok(HeckeCharPoly {
        k,
        dk: d as u32,
        coeffs: charpoly.coeffs().to_vec(),
    })
}

/// Characteristic polynomial of T₂ on S_k(1); k ≥ 12 even.
pub fn t2_charpoly(k: u32) -> Result<HeckeCharPoly> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::Precondition(format!(
            "Hecke charpoly needs even weight k >= 12, got {k}"
        )));
    }
    let d = dim_cusp_level1(k) as usize;
    t2_charpoly_at_precision(k, 4 * d + 4)
}

/// How one weight's T₂ charpoly bears on Maeda's conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvidenceVerdict {
    /// Irreducibility witnessed and symmetric group certified (or the
    /// degree is ≤ 1, where both hold trivially).
    Consistent,
    /// Witness budget exhausted; not a counterexample.
    Inconclusive,
}

impl fmt::Display for EvidenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvidenceVerdict::Consistent => write!(f, "consistent"),
            EvidenceVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// The evidence bundle for one weight: charpoly, irreducibility witness, and
/// the S_{d_k} certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaedaEvidence {
    pub k: u32,
    pub dk: u32,
    pub charpoly: HeckeCharPoly,
    /// A prime modulo which the charpoly stays irreducible, when one was
    /// found within budget. Proves irreducibility over ℚ.
    pub irreducible_witness: Option<u64>,
    /// Present for d_k ≥ 2; degrees 0 and 1 need no group theory.
    pub certificate: Option<GaloisCertificate>,
    pub verdict: EvidenceVerdict,
}

impl MaedaEvidence {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "dk": self.dk,
            "charpoly": self.charpoly.to_json(),
            "irreducible_witness": self.irreducible_witness,
            "certificate": self.certificate.as_ref().map(|c| c.to_json()),
            "verdict": self.verdict.to_string(),
        })
    }
}

/// Runs the Maeda check for one weight: computes the T₂ charpoly, hunts for
/// an irreducibility witness and the three S_{d_k} witnesses among primes up
/// to `prime_budget`, and reports `consistent` when everything is certified.
///
/// Degenerate dimensions are consistent by convention: d_k = 0 (k = 14)
/// vacuously, and d_k = 1 because a linear polynomial is irreducible with
/// trivial Galois group S₁.
pub fn maeda_evidence(k: u32, prime_budget: u64) -> Result<MaedaEvidence> {
    let charpoly = t2_charpoly(k)?;
    let dk = charpoly.dk;
    let f = charpoly.as_int_polynomial();

    let (irreducible_witness, certificate, verdict) = match dk {
        0 => (None, None, EvidenceVerdict::Consistent),
        1 => {
            // Monic linear polynomials are irreducible modulo every prime.
            (Some(2), None, EvidenceVerdict::Consistent)
        }
        _ => {
            let cert = certify_symmetric_group(&f, prime_budget)?;
            let witness = cert.witnesses.get("irreducible").copied();
            let verdict = if cert.verdict == Verdict::CertifiedSn && witness.is_some() {
                EvidenceVerdict::Consistent
            } else {
                EvidenceVerdict::Inconclusive
            };
            (witness, Some(cert), verdict)
        }
    };

    Ok(MaedaEvidence {
        k,
        dk,
        charpoly,
        irreducible_witness,
        certificate,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Δ oracle: q·∏_{n≥1}(1−qⁿ)²⁴, multiplied out term by term.
    fn delta_by_product(prec: usize) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::zero(); prec + 1];
        if prec >= 1 {
            coeffs[1] = BigInt::one();
        }
        for n in 1..=prec {
            for _ in 0..24 {
                // Multiply by (1 − qⁿ), truncating at prec.
                for i in (n..=prec).rev() {
                    let delta = coeffs[i - n].clone();
                    coeffs[i] -= delta;
                }
            }
        }
        coeffs
    }

    #[test]
    fn eisenstein_low_coefficients() {
        let e4 = eisenstein(4, 5).unwrap();
        assert_eq!(*e4.coeff(0), BigInt::one());
        assert_eq!(*e4.coeff(1), BigInt::from(240));
        // σ₃(2) = 1 + 8 = 9.
        assert_eq!(*e4.coeff(2), BigInt::from(2160));

        let e6 = eisenstein(6, 5).unwrap();
        assert_eq!(*e6.coeff(0), BigInt::one());
        assert_eq!(*e6.coeff(1), BigInt::from(-504));
        // σ₅(2) = 1 + 32 = 33.
        assert_eq!(*e6.coeff(2), BigInt::from(-16632));

        assert_eq!(eisenstein(8, 5).unwrap_err().code(), "invalid-parameter");
    }

    #[test]
    fn delta_matches_eta_product() {
        let delta = delta_form(20).unwrap();
        assert_eq!(delta.coeffs(), &delta_by_product(20)[..]);
        assert_eq!(*delta.coeff(2), BigInt::from(-24));
        assert_eq!(*delta.coeff(3), BigInt::from(252));
        assert_eq!(*delta.coeff(4), BigInt::from(-1472));
    }

    #[test]
    fn weight_twelve_basis_is_delta() {
        let basis = victor_miller_basis(12, 10).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], delta_form(10).unwrap());
    }

    #[test]
    fn weight_fourteen_basis_is_empty() {
        assert!(victor_miller_basis(14, 6).unwrap().is_empty());
    }

    #[test]
    fn basis_echelon_shape_and_dims() {
        let basis = victor_miller_basis(24, 8).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(basis[0].coeff(1).is_one() && basis[0].coeff(2).is_zero());
        assert!(basis[1].coeff(1).is_zero() && basis[1].coeff(2).is_one());

        for k in (12..=120).step_by(2) {
            let d = dim_cusp_level1(k) as usize;
            let basis = victor_miller_basis(k, 2 * d + 2).unwrap();
            assert_eq!(basis.len(), d, "k = {k}");
        }
    }

    #[test]
    fn basis_rejects_bad_inputs() {
        assert_eq!(victor_miller_basis(13, 50).unwrap_err().code(), "precondition-violation");
        assert_eq!(victor_miller_basis(10, 50).unwrap_err().code(), "precondition-violation");
        assert!(matches!(
            victor_miller_basis(24, 4),
            Err(Error::PrecisionTooSmall { prec: 4, needed: 6 })
        ));
    }

    #[test]
    fn t2_weight_twelve_is_x_plus_24() {
        let cp = t2_charpoly(12).unwrap();
        assert_eq!(cp.dk, 1);
        assert_eq!(cp.coeffs, vec![BigInt::from(24), BigInt::one()]);
        assert_eq!(cp.to_string(), "x+24");
    }

    #[test]
    fn t2_weight_sixteen_matches_basis_coefficient() {
        // d₁₆ = 1, so the charpoly is x − a₂(f₁) with f₁ the basis form.
        let basis = victor_miller_basis(16, 6).unwrap();
        let a2 = basis[0].coeff(2).clone();
        assert_eq!(a2, BigInt::from(216));
        let cp = t2_charpoly(16).unwrap();
        assert_eq!(cp.coeffs, vec![-a2, BigInt::one()]);
    }

    #[test]
    fn t2_weight_twentyfour_quadratic() {
        let cp = t2_charpoly(24).unwrap();
        assert_eq!(cp.dk, 2);
        // Known: x² − 1080x − 20468736, irreducible with nonsquare
        // discriminant 1080² + 4·20468736 = 83041344.
        assert_eq!(
            cp.coeffs,
            vec![BigInt::from(-20468736), BigInt::from(-1080), BigInt::one()]
        );
        let disc = BigInt::from(1080) * BigInt::from(1080) + BigInt::from(4) * BigInt::from(20468736);
        assert_eq!(disc, BigInt::from(83041344));
        // 9112² = 83028544 < disc < 83046769 = 9113²: not a perfect square.
        assert!(BigInt::from(9112) * BigInt::from(9112) < disc);
        assert!(disc < BigInt::from(9113) * BigInt::from(9113));
    }

    #[test]
    fn t2_precision_invariance() {
        for k in [24u32, 36, 48, 60] {
            let d = dim_cusp_level1(k) as usize;
            let cheap = t2_charpoly_at_precision(k, 2 * d + 2).unwrap();
            let roomy = t2_charpoly_at_precision(k, 4 * d + 4).unwrap();
            assert_eq!(cheap, roomy, "k = {k}");
        }
    }

    #[test]
    fn t2_rejects_odd_or_small_weights() {
        assert_eq!(t2_charpoly(11).unwrap_err().code(), "precondition-violation");
        assert_eq!(t2_charpoly(2).unwrap_err().code(), "precondition-violation");
    }

    #[test]
    fn charpoly_json_shape() {
        let v = t2_charpoly(24).unwrap().to_json();
        assert_eq!(v["k"], 24);
        assert_eq!(v["dk"], 2);
        assert_eq!(v["coeffs"][0], "-20468736");
        assert_eq!(v["coeffs"][2], "1");
    }

    #[test]
    fn bareiss_agrees_with_hand_determinants() {
        // 2×2: det(xI − [[a,b],[c,d]]) = x² − (a+d)x + (ad − bc).
        let m = vec![
            vec![BigInt::from(3), BigInt::from(7)],
            vec![BigInt::from(-2), BigInt::from(5)],
        ];
        let cp = charpoly_bareiss(&m);
        assert_eq!(cp, IntPolynomial::from_i64(&[29, -8, 1]));

        // 3×3 companion matrix of x³ − 2x² + 4x − 9.
        let m = vec![
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(9)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-4)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(2)],
        ];
        let cp = charpoly_bareiss(&m);
        assert_eq!(cp, IntPolynomial::from_i64(&[-9, 4, -2, 1]));

        assert_eq!(charpoly_bareiss(&[]), IntPolynomial::one());
    }

    #[test]
    fn maeda_small_weights_consistent() {
        // d₁₂ = 1, d₁₄ = 0: degenerate consistency.
        let ev = maeda_evidence(12, 100).unwrap();
        assert_eq!(ev.verdict, EvidenceVerdict::Consistent);
        assert_eq!(ev.dk, 1);
        assert!(ev.certificate.is_none());

        let ev = maeda_evidence(14, 100).unwrap();
        assert_eq!(ev.verdict, EvidenceVerdict::Consistent);
        assert_eq!(ev.dk, 0);
        assert!(ev.irreducible_witness.is_none());

        // d₂₄ = 2: the full pipeline with small witnesses.
        let ev = maeda_evidence(24, 10_000).unwrap();
        assert_eq!(ev.verdict, EvidenceVerdict::Consistent);
        let cert = ev.certificate.as_ref().unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedSn);
        assert!(ev.irreducible_witness.is_some());

        let v = ev.to_json();
        assert_eq!(v["verdict"], "consistent");
        assert_eq!(v["certificate"]["verdict"], "certified_Sn");
    }

    #[test]
    fn maeda_sweep_through_weight_sixty() {
        for k in (12..=60).step_by(2) {
            let ev = maeda_evidence(k, 10_000).unwrap();
            assert_eq!(ev.verdict, EvidenceVerdict::Consistent, "k = {k}");
        }
    }
}
