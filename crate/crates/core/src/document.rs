//! TOML ring documents: a ring constructor, its grading, and named ideals.
//!
//! ```toml
//! ring = { gauss_mod = 4 }
//! group = "Z2"
//!
//! [components]          # degree -> additive generators of that component
//! "0" = ["1"]
//! "1" = ["i"]
//!
//! [ideals]              # name -> ideal generators
//! two = ["2", "2*i"]
//! ```
//!
//! `grading = "standard"` or `grading = "trivial"` may replace `group` and
//! `components`. Corpus documents hold `[[ring]]` tables of the same shape
//! and `[[pair]]` tables with `left` and `right`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::finring::{build_ring, FinRing, RingError, RingSpec};
use crate::grading::{attach_grading, Degree, GradedRing, GradingError, GradingGroup};
use crate::ideals::{ideal_generated, require_graded, Ideal, IdealError};
use crate::verifier::Corpus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("element `{expr}`: {reason}")]
    Element { expr: String, reason: String },
    #[error("unknown group `{0}`: expected trivial, Z, Zn or Zn1xZn2...")]
    Group(String),
    #[error("unknown degree `{degree}` for group {group}")]
    Degree { degree: String, group: String },
    #[error("ideal `{name}`: {source}")]
    Ideal { name: String, source: IdealError },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradingPreset {
    Standard,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Name(String),
    Table {
        kind: String,
        #[serde(default)]
        orders: Vec<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecDocument {
    pub ring: RingSpec,
    #[serde(default)]
    pub grading: Option<GradingPreset>,
    #[serde(default)]
    pub group: Option<GroupDoc>,
    #[serde(default)]
    pub components: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub left: RingSpecDocument,
    pub right: RingSpecDocument,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusDocument {
    /// Start from the default corpus and append.
    #[serde(default)]
    pub extends_default: bool,
    #[serde(default)]
    pub ring: Vec<RingSpecDocument>,
    #[serde(default)]
    pub pair: Vec<PairDocument>,
}

/// A validated graded ring with its named ideals, in document order by name.
#[derive(Debug, Clone)]
pub struct LoadedSpec {
    pub graded: GradedRing,
    pub ideals: Vec<(String, Ideal)>,
}

impl LoadedSpec {
    /// A named ideal, or else the ideal generated by comma-separated elements.
    pub fn ideal(&self, name_or_gens: &str) -> Result<Ideal, DocumentError> {
        if let Some((_, i)) = self.ideals.iter().find(|(n, _)| n == name_or_gens) {
            return Ok(i.clone());
        }
        let gens: Vec<&str> = split_top_level(name_or_gens);
        let ideal = generated(&self.graded, &gens)?;
        require_graded(&self.graded, &ideal).map_err(|source| DocumentError::Ideal {
            name: name_or_gens.to_string(),
            source,
        })?;
        Ok(ideal)
    }
}

/// Splits on commas outside parentheses, so `(1, 0), 2` gives two parts.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

fn parse_toml<T: for<'de> Deserialize<'de>>(src: &str) -> Result<T, DocumentError> {
    toml::from_str(src).map_err(|e| {
        let offset = e.span().map(|s| s.start).unwrap_or(0).min(src.len());
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = offset - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
        DocumentError::Parse {
            line,
            column,
            message: e.message().to_string(),
        }
    })
}

fn read(path: &Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path).map_err(|e| DocumentError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn parse_group(doc: &GroupDoc) -> Result<GradingGroup, DocumentError> {
    match doc {
        GroupDoc::Name(name) => {
            let n = name.trim();
            match n {
                "trivial" | "e" | "1" => return Ok(GradingGroup::trivial()),
                "Z" | "integers" => return Ok(GradingGroup::Integers),
                _ => {}
            }
            let orders = n
                .split(['x', 'X', '*'])
                .map(|f| f.trim().strip_prefix('Z').and_then(|k| k.parse::<u32>().ok()).filter(|&k| k >= 2))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| DocumentError::Group(name.clone()))?;
            Ok(GradingGroup::Finite(orders))
        }
        GroupDoc::Table { kind, orders } => match kind.as_str() {
            "trivial" => Ok(GradingGroup::trivial()),
            "integers" => Ok(GradingGroup::Integers),
            "finite" | "cyclic" if !orders.is_empty() && orders.iter().all(|&k| k >= 2) => {
                Ok(GradingGroup::Finite(orders.clone()))
            }
            _ => Err(DocumentError::Group(format!("{kind} {orders:?}"))),
        },
    }
}

fn parse_elem(gr_ring: &FinRing, expr: &str) -> Result<Elem, DocumentError> {
    gr_ring.parse_element(expr).map_err(|e| DocumentError::Element {
        expr: expr.to_string(),
        reason: e.to_string(),
    })
}

fn generated(gr: &GradedRing, gens: &[&str]) -> Result<Ideal, DocumentError> {
    let elems = gens
        .iter()
        .map(|g| parse_elem(gr.ring(), g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ideal_generated(gr.ring(), &elems))
}

/// The additive subgroup generated by `gens`.
fn additive_span(ring: &FinRing, gens: &[Elem]) -> Vec<Elem> {
    let mut set = ElemSet::from_elems(ring.size(), [ring.zero()]);
    let mut frontier = vec![ring.zero()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ring.add(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.to_vec()
}

impl RingSpecDocument {
    pub fn parse(src: &str) -> Result<Self, DocumentError> {
        parse_toml(src)
    }

    pub fn load(path: &Path) -> Result<LoadedSpec, DocumentError> {
        Self::parse(&read(path)?)?.build()
    }

    pub fn build(&self) -> Result<LoadedSpec, DocumentError> {
        let ring = build_ring(&self.ring)?;
        let graded = match (self.grading, self.components.is_empty()) {
            (Some(_), false) => {
                return Err(DocumentError::Invalid(
                    "`grading` preset and explicit `components` are mutually exclusive".into(),
                ))
            }
            (Some(GradingPreset::Standard), true) => {
                if self.group.is_some() {
                    return Err(DocumentError::Invalid("the standard grading fixes its own group".into()));
                }
                GradedRing::standard(&ring)?
            }
            (Some(GradingPreset::Trivial), true) | (None, true) => {
                let group = self.group.as_ref().map(parse_group).transpose()?.unwrap_or_else(GradingGroup::trivial);
                if group == GradingGroup::trivial() {
                    GradedRing::trivial(&ring)
                } else {
                    GradedRing::trivial_over(&ring, group)
                }
            }
            (None, false) => {
                let group = self
                    .group
                    .as_ref()
                    .map(parse_group)
                    .transpose()?
                    .ok_or_else(|| DocumentError::Invalid("`components` requires a `group`".into()))?;
                let mut comps: Vec<(Degree, Vec<Elem>)> = Vec::new();
                for (deg, exprs) in &self.components {
                    let degree = group.parse_degree(deg).ok_or_else(|| DocumentError::Degree {
                        degree: deg.clone(),
                        group: group.to_string(),
                    })?;
                    let gens = exprs
                        .iter()
                        .map(|e| parse_elem(&ring, e))
                        .collect::<Result<Vec<_>, _>>()?;
                    comps.push((degree, additive_span(&ring, &gens)));
                }
                attach_grading(&ring, group, comps)?
            }
        };
        let mut ideals = Vec::new();
        for (name, gens) in &self.ideals {
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let ideal = generated(&graded, &refs)?;
            require_graded(&graded, &ideal).map_err(|source| DocumentError::Ideal {
                name: name.clone(),
                source,
            })?;
            ideals.push((name.clone(), ideal));
        }
        Ok(LoadedSpec { graded, ideals })
    }
}

impl CorpusDocument {
    pub fn parse(src: &str) -> Result<Self, DocumentError> {
        parse_toml(src)
    }

    pub fn load(path: &Path) -> Result<Corpus, DocumentError> {
        Self::parse(&read(path)?)?.build()
    }

    pub fn build(&self) -> Result<Corpus, DocumentError> {
        let mut corpus = if self.extends_default {
            crate::verifier::default_corpus().map_err(|e| DocumentError::Invalid(e.to_string()))?
        } else {
            Corpus::new()
        };
        for r in &self.ring {
            corpus.push(r.build()?.graded);
        }
        for p in &self.pair {
            corpus.push_pair(p.left.build()?.graded, p.right.build()?.graded);
        }
        if corpus.is_empty() {
            return Err(DocumentError::Invalid("corpus has no rings and no pairs".into()));
        }
        Ok(corpus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_components() {
        let src = r#"
            ring = { gauss_mod = 4 }
            group = "Z2"
            [components]
            "0" = ["1"]
            "1" = ["i"]
            [ideals]
            two = ["2", "2*i"]
        "#;
        let spec = RingSpecDocument::parse(src).unwrap().build().unwrap();
        assert_eq!(spec.graded.homogeneous_elements().len(), 7);
        assert_eq!(spec.ideal("two").unwrap().len(), 4);
        assert_eq!(spec.ideal("2, 2*i").unwrap(), spec.ideal("two").unwrap());
        assert!(matches!(spec.ideal("1+i"), Err(DocumentError::Ideal { .. })));
    }

    #[test]
    fn presets_and_groups() {
        let doc = RingSpecDocument::parse("ring = { cyclic = 9 }").unwrap().build().unwrap();
        assert_eq!(doc.graded.label(), "Cyclic(9)");
        let doc = RingSpecDocument::parse("ring = { poly_quotient = { p = 3, modulus = [-1, 0, 1] } }\ngrading = \"standard\"")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(doc.graded.group(), &GradingGroup::Finite(vec![2]));
        let doc = RingSpecDocument::parse("ring = { cyclic = 4 }\ngroup = { kind = \"finite\", orders = [2, 3] }")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(doc.graded.group().to_string(), "Z2xZ3");
        assert_eq!(parse_group(&GroupDoc::Name("Z".into())).unwrap(), GradingGroup::Integers);
        assert!(parse_group(&GroupDoc::Name("Q8".into())).is_err());
    }

    #[test]
    fn product_elements_split_on_top_level_commas() {
        let doc = RingSpecDocument::parse("ring = { product = [{ cyclic = 4 }, { cyclic = 9 }] }")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(doc.ideal("(1, 0)").unwrap().len(), 4);
        assert_eq!(split_top_level("(1, 0), 2"), vec!["(1, 0)", "2"]);
    }

    #[test]
    fn positioned_parse_errors() {
        let err = RingSpecDocument::parse("ring = { cyclic = 9 }\nbogus = 1\n").unwrap_err();
        match err {
            DocumentError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let err = RingSpecDocument::parse("ring = { cyclic = ").unwrap_err();
        assert!(matches!(err, DocumentError::Parse { line: 1, .. }));
    }

    #[test]
    fn validation_errors_name_the_invariant() {
        let bad_grading = r#"
            ring = { cyclic = 4 }
            group = "Z2"
            [components]
            "0" = ["1"]
            "1" = ["2"]
        "#;
        let err = RingSpecDocument::parse(bad_grading).unwrap().build().unwrap_err();
        assert!(matches!(err, DocumentError::Grading(_)), "{err:?}");
        let err = RingSpecDocument::parse("ring = { cyclic = 1 }").unwrap().build().unwrap_err();
        assert!(matches!(err, DocumentError::Ring(_)));
        let err = RingSpecDocument::parse("ring = { cyclic = 4 }\n[ideals]\nx = [\"q\"]").unwrap().build().unwrap_err();
        assert!(matches!(err, DocumentError::Element { .. }));
    }

    #[test]
    fn corpus_documents() {
        let src = r#"
            [[ring]]
            ring = { cyclic = 8 }
            [[pair]]
            left = { ring = { cyclic = 2 } }
            right = { ring = { cyclic = 3 } }
        "#;
        let c = CorpusDocument::parse(src).unwrap().build().unwrap();
        assert_eq!(c.rings.len(), 1);
        assert_eq!(c.pairs.len(), 1);
        let c = CorpusDocument::parse("extends_default = true").unwrap().build().unwrap();
        assert!(c.rings.len() > 20);
        assert!(CorpusDocument::parse("").unwrap().build().is_err());
    }
}
