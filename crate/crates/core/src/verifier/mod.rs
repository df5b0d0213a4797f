//! Executable checks of the structure theory of graded strongly 1-absorbing
//! primary ideals.
//!
//! Each [`Statement`] is instantiated exhaustively over a finite target (a
//! ring, a pair of rings, or a range of moduli). Biconditionals are split
//! into branches with separate counters, so a PASS shows which directions
//! were exercised; a report whose branches are all empty is VACUOUS.

mod analysis;
mod checks;
pub mod corpus;
pub mod report;
mod search;
mod transfer;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::ClassifyError;
use crate::grading::GradedRing;
use crate::ideals::IdealError;
use crate::transport::TransportError;

pub use analysis::RingAnalysis;
pub use corpus::{default_corpus, Corpus};
pub use report::{Counter, CounterKind, Counterexample, Outcome, Recheck, VerificationReport};
pub use search::{search_counterexample, Separation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{statement} expects a {expected} target, got a {got}")]
    ShapeMismatch { statement: Statement, expected: Shape, got: Shape },
    #[error("graded-ideal lattice exceeds {cap} ideals")]
    BudgetExceeded { cap: usize },
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("bad range `{0}`: expected a..b with 2 <= a <= b")]
    BadRange(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

impl From<IdealError> for VerifyError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::BudgetExceeded { cap } => VerifyError::BudgetExceeded { cap },
            other => VerifyError::Construction(other.to_string()),
        }
    }
}

impl From<ClassifyError> for VerifyError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Ideal(i) => i.into(),
            other => VerifyError::Construction(other.to_string()),
        }
    }
}

impl From<TransportError> for VerifyError {
    fn from(e: TransportError) -> Self {
        match e {
            TransportError::Ideal(i) => i.into(),
            other => VerifyError::Construction(other.to_string()),
        }
    }
}

/// The quantifier shape a statement is instantiated over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Ring,
    Pair,
    Range,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Ring => "ring",
            Shape::Pair => "ring pair",
            Shape::Range => "integer range",
        })
    }
}

macro_rules! statements {
    ($($variant:ident => $id:literal, $shape:ident, $summary:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Statement {
            $($variant,)*
        }

        impl Statement {
            pub const ALL: &'static [Statement] = &[$(Statement::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Statement::$variant => $id,)*
                }
            }

            pub fn shape(self) -> Shape {
                match self {
                    $(Statement::$variant => Shape::$shape,)*
                }
            }

            pub fn summary(self) -> &'static str {
                match self {
                    $(Statement::$variant => $summary,)*
                }
            }
        }
    };
}

statements! {
    Prop1 => "PROP_1", Ring, "sums, products and intersections of graded ideals are graded";
    GradIsGraded => "GRAD_IS_GRADED", Ring, "the graded radical of a graded ideal is graded";
    Lemma2 => "LEMMA_2", Ring, "the colon (P:K) of graded ideals is graded";
    Thm2_2 => "THM_2_2", Ring, "P strongly <=> (1abs and Grad(P)=Grad(0)) or (local, X=Grad(P), X^2 in P)";
    Remark2_3 => "REMARK_2_3", Ring, "in a graded local ring, Grad of a strongly ideal need not be maximal";
    Cor2_4 => "COR_2_4", Ring, "graded prime P is strongly <=> P=Grad(0) or (local with maximal P)";
    LemmaGradPrime => "LEMMA_GRAD_PRIME", Ring, "P 1abs => Grad(P) graded prime";
    Thm2_6 => "THM_2_6", Ring, "a strongly ideal exists <=> Grad(0) graded prime or R graded local";
    Cor2_7 => "COR_2_7", Range, "Z/n has a strongly ideal <=> n is a prime power";
    Cor2_8 => "COR_2_8", Pair, "R x S has no strongly ideal";
    Prop2_9 => "PROP_2_9", Ring, "element form of strongly <=> ideal form IJK in P => IJ in P or K in Grad(0)";
    Prop2_10 => "PROP_2_10", Ring, "P, K strongly => P meet K strongly";
    Prop2_11 => "PROP_2_11", Ring, "h(R) nilpotent-or-unit => every Ra and every proper graded ideal is strongly";
    Prop2_12 => "PROP_2_12", Ring, "every graded prime strongly <=> local with at most one non-maximal graded prime";
    Prop2_14 => "PROP_2_14", Ring, "every graded primary strongly <=> h(R) nilpotent-or-unit, or local with one non-maximal prime Grad(0) and X^2 in every X-primary";
    Prop2_17 => "PROP_2_17", Ring, "{0} is the only strongly ideal <=> graded field, or graded domain not local";
    Lemma2_18 => "LEMMA_2_18", Ring, "P 1abs, K not in P => (P:K) graded primary";
    Prop2_19 => "PROP_2_19", Ring, "P strongly, K not in Grad(P) => (P:K) strongly";
    Prop3_1 => "PROP_3_1", Ring, "strongly ideals transfer along graded epimorphisms (image) and monomorphisms (preimage)";
    Cor3_2 => "COR_3_2", Ring, "P strongly, K in P => P/K strongly; P meet S strongly for graded subrings S";
    CorRe => "COR_RE", Ring, "P strongly => P meet R_e strongly in R_e (ungraded)";
    Prop3_3 => "PROP_3_3", Ring, "P strongly, P meet S empty => S^-1 P strongly";
    Prop3_4 => "PROP_3_4", Ring, "R[X] reductions: R-side conditions only (R[X] is infinite)";
}

impl Statement {
    /// Statements about ideals inside one ring, as opposed to transfers.
    pub fn is_transport(self) -> bool {
        matches!(self, Statement::Prop3_1 | Statement::Cor3_2 | Statement::CorRe | Statement::Prop3_3)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Statement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase().replace(['.', '-'], "_");
        Statement::ALL
            .iter()
            .copied()
            .find(|st| st.id() == wanted)
            .ok_or_else(|| VerifyError::UnknownStatement(s.to_string()))
    }
}

/// What a statement is instantiated over.
#[derive(Debug, Clone)]
pub enum Target {
    Ring(GradedRing),
    Pair(GradedRing, GradedRing),
    /// Inclusive range of moduli.
    Range(u32, u32),
}

impl Target {
    pub fn shape(&self) -> Shape {
        match self {
            Target::Ring(_) => Shape::Ring,
            Target::Pair(..) => Shape::Pair,
            Target::Range(..) => Shape::Range,
        }
    }
}

/// The default range for the cyclic-ring existence statement.
pub const DEFAULT_RANGE: (u32, u32) = (2, 64);

/// Parses `a..b` (inclusive) or `a..=b`.
pub fn parse_range(s: &str) -> Result<(u32, u32), VerifyError> {
    let bad = || VerifyError::BadRange(s.to_string());
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || a > b || b > crate::finring::MAX_CARRIER {
        return Err(bad());
    }
    Ok((a, b))
}

/// Verifies one statement on one target.
pub fn verify(statement: Statement, target: &Target) -> Result<VerificationReport, VerifyError> {
    if statement.shape() != target.shape() {
        return Err(VerifyError::ShapeMismatch {
            statement,
            expected: statement.shape(),
            got: target.shape(),
        });
    }
    match target {
        Target::Ring(gr) => verify_ring(statement, &RingAnalysis::new(gr)?),
        Target::Pair(a, b) => checks::cor_2_8(a, b),
        Target::Range(lo, hi) => checks::cor_2_7(*lo, *hi),
    }
}

/// Verifies a ring-shaped statement against a precomputed analysis.
pub fn verify_ring(statement: Statement, a: &RingAnalysis) -> Result<VerificationReport, VerifyError> {
    use Statement::*;
    if statement.shape() != Shape::Ring {
        return Err(VerifyError::ShapeMismatch {
            statement,
            expected: statement.shape(),
            got: Shape::Ring,
        });
    }
    Ok(match statement {
        Prop1 => checks::prop_1(a),
        GradIsGraded => checks::grad_is_graded(a),
        Lemma2 => checks::lemma_2(a),
        Thm2_2 => checks::thm_2_2(a),
        Remark2_3 => checks::remark_2_3(a),
        Cor2_4 => checks::cor_2_4(a),
        LemmaGradPrime => checks::lemma_grad_prime(a),
        Thm2_6 => checks::thm_2_6(a),
        Prop2_9 => checks::prop_2_9(a),
        Prop2_10 => checks::prop_2_10(a),
        Prop2_11 => checks::prop_2_11(a),
        Prop2_12 => checks::prop_2_12(a),
        Prop2_14 => checks::prop_2_14(a),
        Prop2_17 => checks::prop_2_17(a),
        Lemma2_18 => checks::lemma_2_18(a),
        Prop2_19 => checks::prop_2_19(a),
        Prop3_1 => transfer::prop_3_1(a)?,
        Cor3_2 => transfer::cor_3_2(a)?,
        CorRe => transfer::cor_re(a)?,
        Prop3_3 => transfer::prop_3_3(a)?,
        Prop3_4 => checks::prop_3_4(a),
        Cor2_7 | Cor2_8 => unreachable!("shape checked above"),
    })
}

/// The R-side half of the polynomial-extension statements.
pub fn prop_3_4_reduction(gr: &GradedRing) -> Result<VerificationReport, VerifyError> {
    Ok(checks::prop_3_4(&RingAnalysis::new(gr)?))
}

/// Runs `statements` over the corpus: ring statements on every ring, pair
/// statements on every pair, range statements on `range`. Reports come back
/// grouped by statement, in corpus order.
pub fn verify_corpus(
    statements: &[Statement],
    corpus: &Corpus,
    range: (u32, u32),
) -> Result<Vec<VerificationReport>, VerifyError> {
    let needs_rings = statements.iter().any(|s| s.shape() == Shape::Ring);
    let analyses: Vec<RingAnalysis> = if needs_rings {
        corpus
            .rings
            .par_iter()
            .map(RingAnalysis::new)
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let per_statement: Vec<Vec<VerificationReport>> = statements
        .par_iter()
        .map(|&st| -> Result<Vec<VerificationReport>, VerifyError> {
            match st.shape() {
                Shape::Ring => analyses.iter().map(|a| verify_ring(st, a)).collect(),
                Shape::Pair => corpus.pairs.iter().map(|(a, b)| checks::cor_2_8(a, b)).collect(),
                Shape::Range => Ok(vec![checks::cor_2_7(range.0, range.1)?]),
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(per_statement.into_iter().flatten().collect())
}

/// Per-statement aggregate over a corpus run.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub statement: Statement,
    pub outcome: Outcome,
    pub targets: usize,
    pub counters: Vec<Counter>,
}

/// Folds reports per statement: FAIL if any target failed, PASS if any
/// passed, VACUOUS otherwise; counters are summed by name.
pub fn summarize(reports: &[VerificationReport]) -> Vec<Summary> {
    let mut out: Vec<Summary> = Vec::new();
    for r in reports {
        let idx = match out.iter().position(|s| s.statement == r.statement) {
            Some(i) => i,
            None => {
                out.push(Summary {
                    statement: r.statement,
                    outcome: Outcome::Vacuous,
                    targets: 0,
                    counters: Vec::new(),
                });
                out.len() - 1
            }
        };
        let s = &mut out[idx];
        s.targets += 1;
        s.outcome = match (s.outcome, r.outcome) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Pass, _) | (_, Outcome::Pass) => Outcome::Pass,
            _ => Outcome::Vacuous,
        };
        for c in &r.counters {
            match s.counters.iter_mut().find(|x| x.name == c.name) {
                Some(x) => x.count += c.count,
                None => s.counters.push(c.clone()),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_ids_round_trip() {
        for &s in Statement::ALL {
            assert_eq!(s.id().parse::<Statement>().unwrap(), s);
        }
        assert_eq!("thm-2.2".parse::<Statement>().unwrap(), Statement::Thm2_2);
        assert!("THM_9_9".parse::<Statement>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..64").unwrap(), (2, 64));
        assert_eq!(parse_range("3..=5").unwrap(), (3, 5));
        assert!(parse_range("1..5").is_err());
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("abc").is_err());
    }

    #[test]
    fn shape_mismatch() {
        let err = verify(Statement::Cor2_7, &Target::Range(2, 3)).map(|_| ());
        assert!(err.is_ok());
        let err = verify(Statement::Thm2_2, &Target::Range(2, 3)).unwrap_err();
        assert!(matches!(err, VerifyError::ShapeMismatch { .. }));
    }

    fn cyclic(n: u32) -> GradedRing {
        GradedRing::trivial(&crate::finring::build_ring(&crate::finring::RingSpec::Cyclic(n)).unwrap())
    }

    #[test]
    fn thm_2_6_on_z6_explains_absence() {
        let r = verify(Statement::Thm2_6, &Target::Ring(cyclic(6))).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(
            r.notes[0],
            "no strongly ideal exists; Grad(0) = <0> not graded prime (witness (2, 3)); \
             not graded local (2 graded maximal ideals)"
        );
    }

    #[test]
    fn cor_2_8_on_product() {
        let r = verify(Statement::Cor2_8, &Target::Pair(cyclic(4), cyclic(9))).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.target, "Cyclic(4) x Cyclic(9)");
        assert_eq!(r.counter("proper graded ideals of the product"), Some(8));
    }

    #[test]
    fn cor_2_7_small_range() {
        let r = verify(Statement::Cor2_7, &Target::Range(2, 12)).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.counter("prime powers with a strongly ideal"), Some(8));
        assert_eq!(r.counter("non-prime-powers without a strongly ideal"), Some(3));
    }

    #[test]
    fn polynomial_reduction_notes() {
        let r9 = prop_3_4_reduction(&cyclic(9)).unwrap();
        assert!(r9.notes[0].starts_with("Grad(0) = {0, 3, 6} is graded prime"), "{:?}", r9.notes);
        let r6 = prop_3_4_reduction(&cyclic(6)).unwrap();
        assert!(r6.notes[0].contains("is not graded prime"));
        assert!(r6.notes.iter().any(|n| n.contains("not independently verified")));
    }

    #[test]
    fn desk_vacuous_statement_is_vacuous_not_fail() {
        let r = verify(Statement::Remark2_3, &Target::Ring(cyclic(9))).unwrap();
        assert_eq!(r.outcome, Outcome::Vacuous);
        let r = verify(Statement::Prop2_19, &Target::Ring(cyclic(27))).unwrap();
        assert_eq!(r.outcome, Outcome::Vacuous);
    }

    #[test]
    fn reports_are_deterministic() {
        let c = default_corpus().unwrap();
        let a = serde_json::to_string(&verify_corpus(&[Statement::Thm2_2], &c, DEFAULT_RANGE).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_corpus(&[Statement::Thm2_2], &c, DEFAULT_RANGE).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
