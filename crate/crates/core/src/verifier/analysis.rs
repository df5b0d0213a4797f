use std::collections::HashMap;

use rayon::prelude::*;

use crate::classify::{
    classify_ideal, local_structure_in, ring_predicates, ClassificationReport, Flag, LocalStructure, RingPredicates,
};
use crate::elemset::ElemSet;
use crate::grading::GradedRing;
use crate::ideals::{enumerate_graded_ideals, Ideal};

use super::VerifyError;

/// Everything the ring-level statements need, computed once per ring.
#[derive(Debug, Clone)]
pub struct RingAnalysis {
    pub gr: GradedRing,
    /// All graded ideals, `R` included, in lattice order.
    pub lattice: Vec<Ideal>,
    /// Proper graded ideals, aligned with `reports`.
    pub proper: Vec<Ideal>,
    pub reports: Vec<ClassificationReport>,
    pub local: LocalStructure,
    pub predicates: RingPredicates,
    pub grad_zero: Ideal,
    index: HashMap<ElemSet, usize>,
}

impl RingAnalysis {
    pub fn new(gr: &GradedRing) -> Result<Self, VerifyError> {
        let lattice = enumerate_graded_ideals(gr)?;
        let proper: Vec<Ideal> = lattice.iter().filter(|i| i.is_proper()).cloned().collect();
        let reports = proper
            .par_iter()
            .map(|p| classify_ideal(gr, p))
            .collect::<Result<Vec<_>, _>>()?;
        let local = local_structure_in(gr, &lattice)?;
        let index = proper.iter().enumerate().map(|(i, p)| (p.members().clone(), i)).collect();
        let grad_zero = Ideal::from_elements(gr.ring(), gr.grad_zero().iter())?;
        Ok(RingAnalysis {
            gr: gr.clone(),
            predicates: ring_predicates(gr),
            lattice,
            proper,
            reports,
            local,
            grad_zero,
            index,
        })
    }

    /// Position of a proper graded ideal in `proper`.
    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.index.get(ideal.members()).copied()
    }

    pub fn flag(&self, i: usize, f: Flag) -> bool {
        self.reports[i].flag(f)
    }

    /// Flag of an arbitrary proper graded ideal of this ring.
    pub fn flag_of(&self, ideal: &Ideal, f: Flag) -> Option<bool> {
        self.position(ideal).map(|i| self.flag(i, f))
    }

    pub fn radical(&self, i: usize) -> &Ideal {
        &self.reports[i].radical
    }

    pub fn strongly(&self) -> Vec<usize> {
        self.indices_with(Flag::GradedStrongly1AbsPrimary)
    }

    pub fn indices_with(&self, f: Flag) -> Vec<usize> {
        (0..self.proper.len()).filter(|&i| self.flag(i, f)).collect()
    }

    pub fn grad_zero_is_prime(&self) -> bool {
        self.flag_of(&self.grad_zero, Flag::GradedPrime).unwrap_or(false)
    }

    pub fn the_maximal(&self) -> Option<&Ideal> {
        self.local.the_maximal.as_ref()
    }

    /// Graded primes that are not graded maximal.
    pub fn non_maximal_primes(&self) -> Vec<usize> {
        (0..self.proper.len())
            .filter(|&i| self.flag(i, Flag::GradedPrime) && !self.flag(i, Flag::GradedMaximal))
            .collect()
    }
}
