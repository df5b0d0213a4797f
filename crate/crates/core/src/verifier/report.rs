use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::classify::{Flag, Verdict};
use crate::elemset::Elem;
use crate::grading::GradedRing;
use crate::ideals::Ideal;

use super::Statement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Vacuous,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Vacuous => "VACUOUS",
            Outcome::Fail => "FAIL",
        })
    }
}

/// What a counter measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CounterKind {
    /// Quantifier instances enumerated.
    Scanned,
    /// Instances where a hypothesis or branch was met; a report with every
    /// branch at zero is VACUOUS.
    Branch,
    /// A branch with no instance on any finite ring; nonzero counts would
    /// still make the report nonvacuous.
    DeskVacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counter {
    pub name: String,
    pub kind: CounterKind,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElemRef {
    pub index: u32,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealRef {
    pub display: String,
    pub members: Vec<u32>,
}

impl IdealRef {
    pub fn of(ideal: &Ideal) -> Self {
        IdealRef {
            display: ideal.describe(),
            members: ideal.elements().iter().map(|e| e.0).collect(),
        }
    }
}

/// A property that, re-evaluated, must reproduce a recorded violation.
#[derive(Debug, Clone)]
pub struct Recheck {
    pub ring: GradedRing,
    pub ideal: Ideal,
    pub flag: Flag,
    pub recorded: bool,
}

impl Recheck {
    /// Re-evaluates the flag and reports whether it still has the recorded value.
    pub fn reproduces(&self) -> bool {
        self.flag
            .evaluate(&self.ring, &self.ideal)
            .map(|v| v.holds() == self.recorded)
            .unwrap_or(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub ring: String,
    pub detail: String,
    pub ideals: Vec<IdealRef>,
    pub elements: Vec<ElemRef>,
    #[serde(skip)]
    pub recheck: Option<Recheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub target: String,
    pub outcome: Outcome,
    pub counters: Vec<Counter>,
    pub witnesses: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn counter(&self, name: &str) -> Option<u64> {
        self.counters.iter().find(|c| c.name == name).map(|c| c.count)
    }

    /// Sum of branch counters: the number of nontrivial instances.
    pub fn instances(&self) -> u64 {
        self.counters
            .iter()
            .filter(|c| c.kind == CounterKind::Branch)
            .map(|c| c.count)
            .sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} on {}: {}", self.statement, self.target, self.outcome);
        for c in &self.counters {
            let tag = match c.kind {
                CounterKind::Scanned => "",
                CounterKind::Branch => "",
                CounterKind::DeskVacuous => " [vacuous on finite rings]",
            };
            let _ = writeln!(out, "  {:<52} {:>8}{}", c.name, c.count, tag);
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  counterexample in {}: {}", w.ring, w.detail);
            for i in &w.ideals {
                let _ = writeln!(out, "    ideal {} = {:?}", i.display, i.members);
            }
            if !w.elements.is_empty() {
                let names: Vec<&str> = w.elements.iter().map(|e| e.name.as_str()).collect();
                let _ = writeln!(out, "    elements ({})", names.join(", "));
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

/// Accumulates counters, witnesses and notes for one report.
pub(crate) struct ReportBuilder {
    statement: Statement,
    target: String,
    counters: Vec<Counter>,
    witnesses: Vec<Counterexample>,
    notes: Vec<String>,
}

const WITNESS_LIMIT: usize = 16;

impl ReportBuilder {
    pub(crate) fn new(statement: Statement, target: impl Into<String>) -> Self {
        ReportBuilder {
            statement,
            target: target.into(),
            counters: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Declares counters up front so zero counts still appear, in order.
    pub(crate) fn declare(&mut self, name: &str, kind: CounterKind) {
        if !self.counters.iter().any(|c| c.name == name) {
            self.counters.push(Counter {
                name: name.to_string(),
                kind,
                count: 0,
            });
        }
    }

    pub(crate) fn bump(&mut self, name: &str) {
        self.add(name, 1);
    }

    pub(crate) fn add(&mut self, name: &str, n: u64) {
        match self.counters.iter_mut().find(|c| c.name == name) {
            Some(c) => c.count += n,
            None => panic!("counter `{name}` was not declared"),
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub(crate) fn fail(
        &mut self,
        gr: &GradedRing,
        detail: impl Into<String>,
        ideals: &[&Ideal],
        elements: &[Elem],
        recheck: Option<(Ideal, Flag, bool)>,
    ) {
        if self.witnesses.len() == WITNESS_LIMIT {
            self.note(format!("only the first {WITNESS_LIMIT} counterexamples are listed"));
            return;
        }
        self.witnesses.push(Counterexample {
            ring: gr.label().to_string(),
            detail: detail.into(),
            ideals: ideals.iter().map(|i| IdealRef::of(i)).collect(),
            elements: elements
                .iter()
                .map(|&e| ElemRef {
                    index: e.0,
                    name: gr.name(e),
                })
                .collect(),
            recheck: recheck.map(|(ideal, flag, recorded)| Recheck {
                ring: gr.clone(),
                ideal,
                flag,
                recorded,
            }),
        });
    }

    /// Records a failed flag expectation, attaching the predicate's own witness.
    pub(crate) fn fail_flag(&mut self, gr: &GradedRing, detail: impl Into<String>, ideal: &Ideal, flag: Flag, verdict: &Verdict, context: &[&Ideal]) {
        let mut ideals: Vec<&Ideal> = vec![ideal];
        ideals.extend_from_slice(context);
        let elements = verdict.witness().map(|w| w.elements()).unwrap_or_default();
        self.fail(gr, detail, &ideals, &elements, Some((ideal.clone(), flag, verdict.holds())));
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let outcome = if !self.witnesses.is_empty() {
            Outcome::Fail
        } else if self.counters.iter().any(|c| c.kind != CounterKind::Scanned && c.count > 0) {
            Outcome::Pass
        } else {
            Outcome::Vacuous
        };
        VerificationReport {
            statement: self.statement,
            target: self.target,
            outcome,
            counters: self.counters,
            witnesses: self.witnesses,
            notes: self.notes,
        }
    }
}
