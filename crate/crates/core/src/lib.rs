//! Finite commutative rings graded by abelian groups, their graded ideals,
//! and exhaustive checks of absorbing-primary style ideal conditions.

pub mod classify;
pub mod document;
pub mod elemset;
pub mod finring;
pub mod grading;
pub mod ideals;
pub mod transport;
pub mod verifier;

pub use classify::{classify_ideal, ClassificationReport, Flag, Verdict, Witness};
pub use elemset::{Elem, ElemSet};
pub use finring::{build_ring, FinRing, RingError, RingSpec};
pub use grading::{attach_grading, Degree, GradedRing, GradingError, GradingGroup};
pub use ideals::{enumerate_graded_ideals, graded_radical, ideal_generated, Ideal, IdealError};
pub use transport::{GradedHom, MultiplicativeSet, TransportError};
pub use document::{CorpusDocument, DocumentError, LoadedSpec, RingSpecDocument};
pub use verifier::{verify, Corpus, Outcome, Statement, Target, VerificationReport, VerifyError};
