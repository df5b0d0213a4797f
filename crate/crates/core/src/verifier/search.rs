use rayon::prelude::*;

use crate::classify::{classify_ideal, Flag, Witness};
use crate::grading::GradedRing;
use crate::ideals::{enumerate_graded_ideals, Ideal};

use super::{Corpus, VerifyError};

/// A corpus ideal where `hypothesis` holds and `conclusion` fails.
#[derive(Debug, Clone)]
pub struct Separation {
    pub ring: GradedRing,
    pub ideal: Ideal,
    pub hypothesis: Flag,
    pub conclusion: Flag,
    /// Why `conclusion` fails.
    pub witness: Witness,
}

impl Separation {
    /// Re-evaluates both flags: the hypothesis must still hold and the
    /// conclusion must fail with the same witness.
    pub fn revalidates(&self) -> bool {
        let hyp = self.hypothesis.evaluate(&self.ring, &self.ideal);
        let concl = self.conclusion.evaluate(&self.ring, &self.ideal);
        match (hyp, concl) {
            (Ok(h), Ok(c)) => h.holds() && c.witness() == Some(&self.witness),
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        format!(
            "{}: ideal {} is {} but not {}, witness {}",
            self.ring.label(),
            self.ideal.describe(),
            self.hypothesis,
            self.conclusion,
            self.witness.render(&self.ring)
        )
    }
}

/// Every `(ring, ideal)` in the corpus separating `hypothesis` from
/// `conclusion`, in corpus and lattice order.
pub fn search_counterexample(corpus: &Corpus, hypothesis: Flag, conclusion: Flag) -> Result<Vec<Separation>, VerifyError> {
    let per_ring: Vec<Vec<Separation>> = corpus
        .rings
        .par_iter()
        .map(|gr| -> Result<Vec<Separation>, VerifyError> {
            let mut found = Vec::new();
            for p in enumerate_graded_ideals(gr)?.into_iter().filter(|p| p.is_proper()) {
                let report = classify_ideal(gr, &p)?;
                if report.flag(hypothesis) && !report.flag(conclusion) {
                    let witness = report.witnesses[&conclusion].clone();
                    found.push(Separation {
                        ring: gr.clone(),
                        ideal: p,
                        hypothesis,
                        conclusion,
                        witness,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<_, _>>()?;
    Ok(per_ring.into_iter().flatten().collect())
}
