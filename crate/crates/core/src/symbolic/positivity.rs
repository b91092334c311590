//! Certificates that a rational inequality in `q` holds for every integer `q ≥ q_min`.
//!
//! The inequality `lhs < rhs` (or `≤`) is reduced to positivity of the
//! denominator-cleared difference `N(q)`. A shift base `q0` is searched such
//! that `N(q0 + t)` has only nonnegative coefficients (and a positive constant
//! term in the strict case), which settles every real `q ≥ q0`; the integers in
//! `[q_min, q0)` are then checked by exact evaluation of the original
//! inequality. Denominators must themselves be certified positive on the range.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::poly::IntPolynomial;
use super::ratfn::RationalFunction;
use crate::error::{Error, Result};

/// How far past `q_min` the shift base is searched before giving up.
pub const SHIFT_SEARCH_LIMIT: i64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessOrEqual,
}

impl Relation {
    fn strict(self) -> bool {
        matches!(self, Relation::Less)
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityCertificate {
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub relation: Relation,
    pub q_min: i64,
    pub statement: String,
    /// `rhs.num * lhs.den - lhs.num * rhs.den`.
    pub difference: IntPolynomial,
    pub q0: Option<i64>,
    /// Coefficients of `difference(q0 + t)`, lowest degree first.
    pub shifted_coefficients: Vec<BigInt>,
    pub scanned_points: Vec<i64>,
    pub verdict: Verdict,
    pub counterexample: Option<i64>,
    /// `0 < den` for every non-constant denominator.
    pub denominator_certificates: Vec<PositivityCertificate>,
}

fn statement(lhs: &RationalFunction, rhs: &RationalFunction, relation: Relation, q_min: i64) -> String {
    format!("{lhs} {} {rhs} for all integers q >= {q_min}", relation.symbol())
}

fn satisfies(lhs: &RationalFunction, rhs: &RationalFunction, relation: Relation, q: i64) -> bool {
    match (lhs.eval_i64(q), rhs.eval_i64(q)) {
        (Some(a), Some(b)) => match relation {
            Relation::Less => a < b,
            Relation::LessOrEqual => a <= b,
        },
        _ => false,
    }
}

fn shift_ok(shifted: &IntPolynomial, strict: bool) -> bool {
    shifted.all_nonnegative() && (!strict || shifted.coefficient(0).is_positive())
}

fn difference(lhs: &RationalFunction, rhs: &RationalFunction) -> IntPolynomial {
    &(&rhs.numerator * &lhs.denominator) - &(&lhs.numerator * &rhs.denominator)
}

fn denominators_needing_proof(lhs: &RationalFunction, rhs: &RationalFunction) -> Result<Vec<IntPolynomial>> {
    let mut out: Vec<IntPolynomial> = Vec::new();
    for den in [&lhs.denominator, &rhs.denominator] {
        if den.degree() == Some(0) {
            if !den.coefficient(0).is_positive() {
                return Err(Error::DenominatorNotPositive(den.to_string()));
            }
            continue;
        }
        if !out.contains(den) {
            out.push(den.clone());
        }
    }
    Ok(out)
}

/// Least `q0` in `[q_min, q_min + SHIFT_SEARCH_LIMIT]` whose shift passes; the
/// predicate is monotone in `q0`, so galloping plus bisection finds it.
fn search_shift_base(n: &IntPolynomial, q_min: i64, strict: bool) -> Option<i64> {
    let ok = |q0: i64| shift_ok(&n.shift(&BigInt::from(q0)), strict);
    if ok(q_min) {
        return Some(q_min);
    }
    let limit = q_min + SHIFT_SEARCH_LIMIT;
    let (mut lo, mut step) = (q_min, 1i64);
    let mut hi = lo + step;
    while hi < limit && !ok(hi) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    if hi >= limit {
        hi = limit;
        if !ok(hi) {
            return None;
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Certifies `lhs < rhs` for all integers `q ≥ q_min`.
pub fn verify_positive_for_all_q(
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    q_min: i64,
) -> Result<PositivityCertificate> {
    verify_inequality(lhs, rhs, Relation::Less, q_min)
}

pub fn verify_inequality(
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    relation: Relation,
    q_min: i64,
) -> Result<PositivityCertificate> {
    let mut denominator_certificates = Vec::new();
    for den in denominators_needing_proof(lhs, rhs)? {
        let cert = verify_inequality(
            &RationalFunction::constant(0, 1),
            &den.clone().into(),
            Relation::Less,
            q_min,
        )
        .map_err(|_| Error::DenominatorNotPositive(den.to_string()))?;
        if cert.verdict != Verdict::Holds {
            return Err(Error::DenominatorNotPositive(den.to_string()));
        }
        denominator_certificates.push(cert);
    }

    let n = difference(lhs, rhs);
    let strict = relation.strict();
    let mut cert = PositivityCertificate {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        relation,
        q_min,
        statement: statement(lhs, rhs, relation, q_min),
        difference: n.clone(),
        q0: None,
        shifted_coefficients: Vec::new(),
        scanned_points: Vec::new(),
        verdict: Verdict::Inconclusive,
        counterexample: None,
        denominator_certificates,
    };

    if n.is_zero() {
        if strict {
            cert.scanned_points = vec![q_min];
            cert.verdict = Verdict::Fails;
            cert.counterexample = Some(q_min);
        } else {
            cert.q0 = Some(q_min);
            cert.verdict = Verdict::Holds;
        }
        return Ok(cert);
    }
    if n.leading_coefficient().is_some_and(|c| c.is_negative()) {
        return Err(Error::NotEventuallyPositive(n.to_string()));
    }

    let scan_end = match search_shift_base(&n, q_min, strict) {
        Some(q0) => {
            cert.q0 = Some(q0);
            cert.shifted_coefficients = n.shift(&BigInt::from(q0)).coefficients().to_vec();
            q0
        }
        None => q_min + SHIFT_SEARCH_LIMIT + 1,
    };
    cert.scanned_points = (q_min..scan_end).collect();
    cert.counterexample = cert
        .scanned_points
        .iter()
        .copied()
        .find(|&q| !satisfies(lhs, rhs, relation, q));
    cert.verdict = match (cert.counterexample, cert.q0) {
        (Some(_), _) => Verdict::Fails,
        (None, Some(_)) => Verdict::Holds,
        (None, None) => Verdict::Inconclusive,
    };
    Ok(cert)
}

impl PositivityCertificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Independent re-verification.
    ///
    /// Regenerating the certificate from its statement must reproduce every
    /// field, and the proof content is re-checked by a separate route: the
    /// shifted polynomial is compared with the difference by evaluation at
    /// `deg + 1` points, its coefficient signs are re-read, and the scanned
    /// points and any counterexample are re-evaluated on the original sides.
    pub fn recheck(&self) -> bool {
        let Ok(fresh) = verify_inequality(&self.lhs, &self.rhs, self.relation, self.q_min) else {
            return false;
        };
        if &fresh != self {
            return false;
        }
        if !self.denominator_certificates.iter().all(|c| c.recheck() && c.holds()) {
            return false;
        }
        match self.verdict {
            Verdict::Holds => self.recheck_proof(),
            Verdict::Fails => self
                .counterexample
                .is_some_and(|q| q >= self.q_min && !satisfies(&self.lhs, &self.rhs, self.relation, q)),
            Verdict::Inconclusive => true,
        }
    }

    fn recheck_proof(&self) -> bool {
        let Some(q0) = self.q0 else {
            return false;
        };
        if q0 < self.q_min || self.counterexample.is_some() {
            return false;
        }
        let n = difference(&self.lhs, &self.rhs);
        let shifted = IntPolynomial::from_coeffs(self.shifted_coefficients.clone());
        let points = n.coefficients().len().max(shifted.coefficients().len()) + 1;
        for t in 0..points as i64 {
            if shifted.eval(&BigInt::from(t)) != n.eval(&BigInt::from(q0 + t)) {
                return false;
            }
        }
        if !shift_ok(&shifted, self.relation.strict()) && !(n.is_zero() && !self.relation.strict()) {
            return false;
        }
        let expected: Vec<i64> = (self.q_min..q0).collect();
        self.scanned_points == expected
            && self
                .scanned_points
                .iter()
                .all(|&q| satisfies(&self.lhs, &self.rhs, self.relation, q))
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            statement: self.statement.clone(),
            expression: self.lhs.to_string(),
            bound: self.rhs.to_string(),
            relation: self.relation,
            q_min: self.q_min,
            q0: self.q0,
            shifted_coefficients: self
                .shifted_coefficients
                .iter()
                .map(|c| c.to_string())
                .collect(),
            scanned_points: self.scanned_points.clone(),
            verdict: self.verdict,
            counterexample: self.counterexample,
            denominators: self
                .denominator_certificates
                .iter()
                .map(|c| c.to_json())
                .collect(),
        }
    }

    /// Human-readable proof transcript.
    pub fn transcript(&self) -> String {
        let mut out = format!("claim: {}\n", self.statement);
        out += &format!("  cleared difference N(q) = {}\n", self.difference);
        for d in &self.denominator_certificates {
            out += &format!("  denominator {} > 0: {}\n", d.rhs, d.verdict);
        }
        match self.q0 {
            Some(_) if self.difference.is_zero() => out += "  N is identically zero\n",
            Some(q0) => {
                let shifted = IntPolynomial::from_coeffs(self.shifted_coefficients.clone());
                out += &format!(
                    "  N({q0} + t) has nonnegative coefficients (degree {}, constant {})\n",
                    shifted.degree().unwrap_or(0),
                    shifted.coefficient(0)
                );
            }
            None => out += "  no shift base found within the search limit\n",
        }
        if self.scanned_points.is_empty() {
            out += "  no points below the shift base\n";
        } else {
            out += &format!(
                "  checked q = {}..={} exactly\n",
                self.scanned_points[0],
                self.scanned_points[self.scanned_points.len() - 1]
            );
        }
        if let Some(q) = self.counterexample {
            out += &format!("  counterexample: q = {q}\n");
        }
        out += &format!("  verdict: {}\n", self.verdict);
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub statement: String,
    pub expression: String,
    pub bound: String,
    pub relation: Relation,
    pub q_min: i64,
    pub q0: Option<i64>,
    pub shifted_coefficients: Vec<String>,
    pub scanned_points: Vec<i64>,
    pub verdict: Verdict,
    pub counterexample: Option<i64>,
    pub denominators: Vec<CertificateJson>,
}
