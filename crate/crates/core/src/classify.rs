//! Ideal- and ring-level predicates for graded rings.
//!
//! Every predicate quantifies over homogeneous elements only. Failures carry
//! the lexicographically least violating tuple (by element index), so output
//! is deterministic even though the triple scans run in parallel over the
//! first coordinate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::grading::GradedRing;
use crate::ideals::{
    combine, enumerate_graded_ideals, graded_radical, ideal_generated, require_graded, Combine, Ideal,
    IdealError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("ideal is not proper")]
    NotProper,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Evidence that a predicate fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Element(Elem),
    Pair(Elem, Elem),
    Triple(Elem, Elem, Elem),
    Ideals(Vec<Ideal>),
}

impl Witness {
    pub fn render(&self, gr: &GradedRing) -> String {
        match self {
            Witness::Element(a) => gr.name(*a),
            Witness::Pair(a, b) => format!("({}, {})", gr.name(*a), gr.name(*b)),
            Witness::Triple(a, b, c) => format!("({}, {}, {})", gr.name(*a), gr.name(*b), gr.name(*c)),
            Witness::Ideals(is) => {
                let parts: Vec<String> = is.iter().map(|i| i.describe()).collect();
                format!("({})", parts.join(", "))
            }
        }
    }

    /// Element indices mentioned by the witness, in order.
    pub fn elements(&self) -> Vec<Elem> {
        match self {
            Witness::Element(a) => vec![*a],
            Witness::Pair(a, b) => vec![*a, *b],
            Witness::Triple(a, b, c) => vec![*a, *b, *c],
            Witness::Ideals(_) => Vec::new(),
        }
    }
}

/// Result of a predicate: holds, or fails with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    fn from_option(w: Option<Witness>) -> Verdict {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

/// The ideal-level properties tracked by a [`ClassificationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    GradedPrime,
    GradedPrimary,
    Graded1AbsPrimary,
    Graded2AbsPrimary,
    GradedStrongly1AbsPrimary,
    GradedMaximal,
}

impl Flag {
    pub const ALL: [Flag; 6] = [
        Flag::GradedPrime,
        Flag::GradedPrimary,
        Flag::Graded1AbsPrimary,
        Flag::Graded2AbsPrimary,
        Flag::GradedStrongly1AbsPrimary,
        Flag::GradedMaximal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::GradedPrime => "graded_prime",
            Flag::GradedPrimary => "graded_primary",
            Flag::Graded1AbsPrimary => "graded_1abs_primary",
            Flag::Graded2AbsPrimary => "graded_2abs_primary",
            Flag::GradedStrongly1AbsPrimary => "graded_strongly_1abs_primary",
            Flag::GradedMaximal => "graded_maximal",
        }
    }

    /// Evaluates this property of `p`.
    pub fn evaluate(self, gr: &GradedRing, p: &Ideal) -> Result<Verdict, ClassifyError> {
        match self {
            Flag::GradedPrime => is_graded_prime(gr, p),
            Flag::GradedPrimary => is_graded_primary(gr, p),
            Flag::Graded1AbsPrimary => is_graded_1abs_primary(gr, p),
            Flag::Graded2AbsPrimary => is_graded_2abs_primary(gr, p),
            Flag::GradedStrongly1AbsPrimary => is_graded_strongly_1abs_primary(gr, p),
            Flag::GradedMaximal => is_graded_maximal(gr, p),
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let key = key.strip_prefix("graded_").unwrap_or(&key);
        Ok(match key {
            "prime" => Flag::GradedPrime,
            "primary" => Flag::GradedPrimary,
            "1abs" | "1abs_primary" | "1_absorbing" | "one_absorbing" => Flag::Graded1AbsPrimary,
            "2abs" | "2abs_primary" | "2_absorbing" | "two_absorbing" => Flag::Graded2AbsPrimary,
            "strongly" | "strongly_1abs" | "strongly_1abs_primary" => Flag::GradedStrongly1AbsPrimary,
            "maximal" => Flag::GradedMaximal,
            _ => return Err(format!("unknown flag `{s}`")),
        })
    }
}

fn require_proper_graded(gr: &GradedRing, p: &Ideal) -> Result<(), ClassifyError> {
    require_graded(gr, p)?;
    if !p.is_proper() {
        return Err(ClassifyError::NotProper);
    }
    Ok(())
}

/// Least `(x, y)` over `elems²` satisfying `bad`.
fn first_pair(elems: &[Elem], bad: impl Fn(Elem, Elem) -> bool + Sync) -> Option<Witness> {
    elems.par_iter().find_map_first(|&x| {
        elems
            .iter()
            .find(|&&y| bad(x, y))
            .map(|&y| Witness::Pair(x, y))
    })
}

/// Least `(x, y, z)` over `elems³` satisfying `bad`.
fn first_triple(elems: &[Elem], bad: impl Fn(Elem, Elem, Elem) -> bool + Sync) -> Option<Witness> {
    elems.par_iter().find_map_first(|&x| {
        for &y in elems {
            for &z in elems {
                if bad(x, y, z) {
                    return Some(Witness::Triple(x, y, z));
                }
            }
        }
        None
    })
}

/// Homogeneous `xy ∈ P` forces `x ∈ P` or `y ∈ P`.
pub fn is_graded_prime(gr: &GradedRing, p: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, p)?;
    let r = gr.ring();
    Ok(Verdict::from_option(first_pair(gr.homogeneous_list(), |x, y| {
        p.contains(r.mul(x, y)) && !p.contains(x) && !p.contains(y)
    })))
}

/// Homogeneous `xy ∈ Q` forces `x ∈ Q` or `y ∈ Grad(Q)`.
pub fn is_graded_primary(gr: &GradedRing, q: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, q)?;
    let rad = graded_radical(gr, q)?;
    let r = gr.ring();
    Ok(Verdict::from_option(first_pair(gr.homogeneous_list(), |x, y| {
        q.contains(r.mul(x, y)) && !q.contains(x) && !rad.contains(y)
    })))
}

/// Nonunit homogeneous `xyz ∈ P` forces `xy ∈ P` or `z ∈ Grad(P)`.
pub fn is_graded_1abs_primary(gr: &GradedRing, p: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, p)?;
    let rad = graded_radical(gr, p)?;
    Ok(Verdict::from_option(absorbing_scan(gr, p, rad.members())))
}

/// Nonunit homogeneous `xyz ∈ P` forces `xy ∈ P` or `z ∈ Grad({0})`.
pub fn is_graded_strongly_1abs_primary(gr: &GradedRing, p: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, p)?;
    Ok(Verdict::from_option(absorbing_scan(gr, p, gr.grad_zero())))
}

fn absorbing_scan(gr: &GradedRing, p: &Ideal, escape: &ElemSet) -> Option<Witness> {
    let r = gr.ring();
    first_triple(gr.nonunit_homogeneous(), |x, y, z| {
        let xy = r.mul(x, y);
        !p.contains(xy) && !escape.contains(z) && p.contains(r.mul(xy, z))
    })
}

/// Homogeneous `xyz ∈ I` (units included) forces `xy ∈ I`, `xz ∈ Grad(I)`
/// or `yz ∈ Grad(I)`.
pub fn is_graded_2abs_primary(gr: &GradedRing, i: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, i)?;
    let rad = graded_radical(gr, i)?;
    let r = gr.ring();
    Ok(Verdict::from_option(first_triple(gr.homogeneous_list(), |x, y, z| {
        let xy = r.mul(x, y);
        !i.contains(xy)
            && i.contains(r.mul(xy, z))
            && !rad.contains(r.mul(x, z))
            && !rad.contains(r.mul(y, z))
    })))
}

/// `M` is maximal among proper graded ideals: `M + Ra = R` for every
/// homogeneous `a ∉ M`. The witness is the least `a` for which this fails.
pub fn is_graded_maximal(gr: &GradedRing, m: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, m)?;
    let r = gr.ring();
    let witness = gr
        .homogeneous_list()
        .par_iter()
        .filter(|&&a| !m.contains(a))
        .find_first(|&&a| {
            let ra = ideal_generated(r, &[a]);
            combine(r, m, &ra, Combine::Sum)
                .map(|s| s.is_proper())
                .unwrap_or(true)
        })
        .map(|&a| Witness::Element(a));
    Ok(Verdict::from_option(witness))
}

/// Whenever proper graded `I, J, K` satisfy `IJK ⊆ P`, then `IJ ⊆ P` or
/// `K ⊆ Grad({0})`. Quantifies over the whole graded-ideal lattice.
pub fn strongly_1abs_ideal_form(gr: &GradedRing, p: &Ideal) -> Result<Verdict, ClassifyError> {
    require_proper_graded(gr, p)?;
    let lattice = enumerate_graded_ideals(gr)?;
    Ok(strongly_1abs_ideal_form_in(gr, p, &lattice))
}

/// [`strongly_1abs_ideal_form`] over a precomputed lattice.
pub fn strongly_1abs_ideal_form_in(gr: &GradedRing, p: &Ideal, lattice: &[Ideal]) -> Verdict {
    strongly_1abs_ideal_form_with(gr, p, &LatticeProducts::new(gr, lattice))
}

/// Proper graded ideals with their pairwise products, as lattice indices.
#[derive(Debug, Clone)]
pub struct LatticeProducts {
    proper: Vec<Ideal>,
    products: Vec<Vec<usize>>,
}

impl LatticeProducts {
    pub fn new(gr: &GradedRing, lattice: &[Ideal]) -> Self {
        let r = gr.ring();
        let proper: Vec<Ideal> = lattice.iter().filter(|i| i.is_proper()).cloned().collect();
        let index: std::collections::HashMap<&ElemSet, usize> =
            proper.iter().enumerate().map(|(i, id)| (id.members(), i)).collect();
        // products of proper graded ideals are proper graded ideals, hence in the lattice
        let products = (0..proper.len())
            .into_par_iter()
            .map(|a| {
                (0..proper.len())
                    .map(|b| {
                        let prod = combine(r, &proper[a], &proper[b], Combine::Product)
                            .expect("lattice ideals share a ring");
                        index[prod.members()]
                    })
                    .collect()
            })
            .collect();
        LatticeProducts { proper, products }
    }

    pub fn proper(&self) -> &[Ideal] {
        &self.proper
    }
}

/// [`strongly_1abs_ideal_form`] reusing a product table.
pub fn strongly_1abs_ideal_form_with(gr: &GradedRing, p: &Ideal, table: &LatticeProducts) -> Verdict {
    let (proper, products) = (&table.proper, &table.products);
    let n = proper.len();
    let in_p: Vec<bool> = proper.iter().map(|i| i.is_subset(p)).collect();
    let nil: Vec<bool> = proper.iter().map(|i| i.members().is_subset(gr.grad_zero())).collect();
    let w = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            let ab = products[a][b];
            if in_p[ab] {
                continue;
            }
            for c in 0..n {
                if !nil[c] && in_p[products[ab][c]] {
                    return Some(Witness::Ideals(vec![
                        proper[a].clone(),
                        proper[b].clone(),
                        proper[c].clone(),
                    ]));
                }
            }
        }
        None
    });
    Verdict::from_option(w)
}

/// Graded-maximal ideals and whether there is exactly one.
#[derive(Debug, Clone)]
pub struct LocalStructure {
    pub graded_maximal_ideals: Vec<Ideal>,
    pub is_graded_local: bool,
    /// The unique graded maximal ideal when graded local.
    pub the_maximal: Option<Ideal>,
}

pub fn local_structure(gr: &GradedRing) -> Result<LocalStructure, ClassifyError> {
    let lattice = enumerate_graded_ideals(gr)?;
    local_structure_in(gr, &lattice)
}

pub fn local_structure_in(gr: &GradedRing, lattice: &[Ideal]) -> Result<LocalStructure, ClassifyError> {
    let mut maximal = Vec::new();
    for i in lattice.iter().filter(|i| i.is_proper()) {
        if is_graded_maximal(gr, i)?.holds() {
            maximal.push(i.clone());
        }
    }
    let is_local = maximal.len() == 1;
    Ok(LocalStructure {
        the_maximal: if is_local { Some(maximal[0].clone()) } else { None },
        is_graded_local: is_local,
        graded_maximal_ideals: maximal,
    })
}

/// Ring-level scans over `h(R)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingPredicates {
    /// Every nonzero homogeneous element is a unit.
    pub graded_field: bool,
    /// No nonzero homogeneous `x, y` with `xy = 0`.
    pub graded_domain: bool,
    pub every_homogeneous_nilpotent_or_unit: bool,
}

pub fn ring_predicates(gr: &GradedRing) -> RingPredicates {
    let r = gr.ring();
    let zero = r.zero();
    let h = gr.homogeneous_list();
    RingPredicates {
        graded_field: h.iter().all(|&x| x == zero || r.is_unit(x)),
        graded_domain: !h.iter().any(|&x| {
            x != zero && h.iter().any(|&y| y != zero && r.mul(x, y) == zero)
        }),
        every_homogeneous_nilpotent_or_unit: h.iter().all(|&x| r.is_unit(x) || r.is_nilpotent(x)),
    }
}

/// All flags of one proper graded ideal, with witnesses for the false ones.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub ideal: Ideal,
    pub radical: Ideal,
    pub flags: BTreeMap<Flag, bool>,
    pub witnesses: BTreeMap<Flag, Witness>,
}

impl ClassificationReport {
    pub fn flag(&self, f: Flag) -> bool {
        self.flags[&f]
    }

    /// The implications that must hold within any single report.
    pub fn implication_chain_holds(&self) -> bool {
        let f = |x| self.flag(x);
        (!f(Flag::GradedStrongly1AbsPrimary) || f(Flag::Graded1AbsPrimary))
            && (!f(Flag::Graded1AbsPrimary) || f(Flag::Graded2AbsPrimary))
            && (!f(Flag::GradedPrimary) || f(Flag::Graded1AbsPrimary))
            && (!f(Flag::GradedPrime) || f(Flag::GradedPrimary))
    }
}

pub fn classify_ideal(gr: &GradedRing, p: &Ideal) -> Result<ClassificationReport, ClassifyError> {
    require_proper_graded(gr, p)?;
    let radical = graded_radical(gr, p)?;
    let mut flags = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for flag in Flag::ALL {
        let verdict = flag.evaluate(gr, p)?;
        flags.insert(flag, verdict.holds());
        if let Verdict::Fails(w) = verdict {
            witnesses.insert(flag, w);
        }
    }
    Ok(ClassificationReport {
        ideal: p.clone(),
        radical,
        flags,
        witnesses,
    })
}
