//! Grading groups and validated gradings on finite rings.
//!
//! A grading is supplied as explicit component subsets. Validation builds the
//! homogeneous decomposition table by enumerating the Cartesian product of the
//! components and rejecting any element reached zero or several times.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::finring::{FinRing, RingError};

/// An element of a grading group: residues for a finite abelian group
/// `Z/n1 x .. x Z/nk`, or a single integer for `Z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(pub Vec<i64>);

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => f.write_str("e"),
            [d] => write!(f, "{d}"),
            ds => {
                let parts: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// An abelian grading group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradingGroup {
    /// `Z/n1 x .. x Z/nk` given by its invariant factors; `[]` is the trivial group.
    Finite(Vec<u32>),
    /// The integers. Gradings over `Z` have finite support.
    Integers,
}

impl GradingGroup {
    pub fn trivial() -> Self {
        GradingGroup::Finite(Vec::new())
    }

    pub fn cyclic(n: u32) -> Self {
        GradingGroup::Finite(vec![n])
    }

    pub fn identity(&self) -> Degree {
        match self {
            GradingGroup::Finite(fs) => Degree(vec![0; fs.len()]),
            GradingGroup::Integers => Degree(vec![0]),
        }
    }

    pub fn op(&self, a: &Degree, b: &Degree) -> Degree {
        match self {
            GradingGroup::Finite(fs) => Degree(
                fs.iter()
                    .zip(a.0.iter().zip(&b.0))
                    .map(|(&n, (&x, &y))| (x + y).rem_euclid(n as i64))
                    .collect(),
            ),
            GradingGroup::Integers => Degree(vec![a.0[0] + b.0[0]]),
        }
    }

    pub fn inverse(&self, a: &Degree) -> Degree {
        match self {
            GradingGroup::Finite(fs) => Degree(
                fs.iter()
                    .zip(&a.0)
                    .map(|(&n, &x)| (-x).rem_euclid(n as i64))
                    .collect(),
            ),
            GradingGroup::Integers => Degree(vec![-a.0[0]]),
        }
    }

    /// Brings raw coordinates into canonical form, or rejects them.
    pub fn normalize(&self, raw: &[i64]) -> Option<Degree> {
        match self {
            GradingGroup::Finite(fs) if raw.len() == fs.len() => Some(Degree(
                fs.iter()
                    .zip(raw)
                    .map(|(&n, &x)| x.rem_euclid(n as i64))
                    .collect(),
            )),
            GradingGroup::Integers if raw.len() == 1 => Some(Degree(raw.to_vec())),
            _ => None,
        }
    }

    /// Parses `"1"`, `"(1,0)"`, `"1,0"` or `"e"`.
    pub fn parse_degree(&self, s: &str) -> Option<Degree> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t == "e" {
            return Some(self.identity());
        }
        if t.is_empty() {
            return self.normalize(&[]);
        }
        let raw: Option<Vec<i64>> = t.split(',').map(|x| x.trim().parse().ok()).collect();
        self.normalize(&raw?)
    }

    /// Validates each factor of a finite group.
    fn check(&self) -> Result<(), GradingError> {
        if let GradingGroup::Finite(fs) = self {
            if fs.iter().any(|&n| n < 1) {
                return Err(GradingError::BadGroup("invariant factors must be positive".into()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingGroup::Finite(fs) if fs.is_empty() => f.write_str("trivial"),
            GradingGroup::Finite(fs) => {
                let parts: Vec<String> = fs.iter().map(|n| format!("Z{n}")).collect();
                f.write_str(&parts.join("x"))
            }
            GradingGroup::Integers => f.write_str("Z"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("invalid grading group: {0}")]
    BadGroup(String),
    #[error("degree {0} listed more than once")]
    DuplicateDegree(Degree),
    #[error("component R_{degree} is not an additive subgroup: {reason}")]
    NotSubgroup { degree: Degree, reason: String },
    #[error("components do not form a direct sum: {0}")]
    NotDirectSum(String),
    #[error("R_{g} * R_{h} is not contained in R_(gh): {x} * {y} = {product}")]
    NotMultiplicative {
        g: Degree,
        h: Degree,
        x: String,
        y: String,
        product: String,
    },
    #[error("1 is not in the identity component")]
    IdentityNotInRe,
    #[error("no standard grading is known for {0}")]
    NoStandardGrading(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug)]
struct GradedInner {
    ring: FinRing,
    group: GradingGroup,
    label: String,
    /// Support, sorted; the identity is always present.
    degrees: Vec<Degree>,
    components: Vec<ElemSet>,
    /// `parts[x * k + j]` is the degree-`degrees[j]` part of `x`.
    parts: Vec<u32>,
    /// Component index of each nonzero homogeneous element.
    degree_of: Vec<Option<u32>>,
    homogeneous: ElemSet,
    homogeneous_list: Vec<Elem>,
    nonunit_homogeneous: Vec<Elem>,
    grad_zero: ElemSet,
}

/// A finite ring with a validated grading. Cheap to clone.
#[derive(Debug, Clone)]
pub struct GradedRing {
    inner: Arc<GradedInner>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ring == other.inner.ring
                && self.inner.group == other.inner.group
                && self.inner.degrees == other.inner.degrees
                && self.inner.components == other.inner.components)
    }
}

/// Validates `components` as a `group`-grading of `ring`.
///
/// Components equal to `{0}` are dropped from the support, except that the
/// identity component must contain 1.
pub fn attach_grading(
    ring: &FinRing,
    group: GradingGroup,
    components: impl IntoIterator<Item = (Degree, Vec<Elem>)>,
) -> Result<GradedRing, GradingError> {
    group.check()?;
    let zero = ring.zero();
    let mut by_degree: BTreeMap<Degree, ElemSet> = BTreeMap::new();
    for (raw, elems) in components {
        let degree = group
            .normalize(&raw.0)
            .ok_or_else(|| GradingError::BadGroup(format!("degree {raw} is not an element of {group}")))?;
        if by_degree.contains_key(&degree) {
            return Err(GradingError::DuplicateDegree(degree));
        }
        let mut set = ElemSet::from_elems(ring.size(), elems);
        set.insert(zero);
        by_degree.insert(degree, set);
    }
    let e = group.identity();
    match by_degree.get(&e) {
        Some(re) if re.contains(ring.one()) => {}
        _ => return Err(GradingError::IdentityNotInRe),
    }
    by_degree.retain(|d, s| *d == e || s.len() > 1);

    for (degree, set) in &by_degree {
        for x in set.iter() {
            for y in set.iter() {
                let s = ring.add(x, y);
                if !set.contains(s) {
                    return Err(GradingError::NotSubgroup {
                        degree: degree.clone(),
                        reason: format!("{} + {} = {} escapes", ring.name(x), ring.name(y), ring.name(s)),
                    });
                }
            }
        }
    }

    let degrees: Vec<Degree> = by_degree.keys().cloned().collect();
    let components: Vec<ElemSet> = by_degree.into_values().collect();
    let k = components.len();

    let product: u128 = components.iter().map(|c| c.len() as u128).product();
    if product != ring.size() as u128 {
        return Err(GradingError::NotDirectSum(format!(
            "component sizes multiply to {product}, carrier has {} elements",
            ring.size()
        )));
    }

    // Enumerate the Cartesian product of components; every element must be hit once.
    let lists: Vec<Vec<Elem>> = components.iter().map(|c| c.to_vec()).collect();
    let n = ring.size() as usize;
    let mut parts = vec![u32::MAX; n * k];
    let mut hit = ElemSet::empty(ring.size());
    let mut counter = vec![0usize; k];
    loop {
        let choice: Vec<Elem> = counter.iter().zip(&lists).map(|(&i, l)| l[i]).collect();
        let sum = choice.iter().fold(zero, |acc, &x| ring.add(acc, x));
        if !hit.insert(sum) {
            return Err(GradingError::NotDirectSum(format!(
                "{} has more than one decomposition",
                ring.name(sum)
            )));
        }
        for (j, &x) in choice.iter().enumerate() {
            parts[sum.index() * k + j] = x.0;
        }
        let mut j = 0;
        loop {
            if j == k {
                return finish(ring, group, degrees, components, parts);
            }
            counter[j] += 1;
            if counter[j] < lists[j].len() {
                break;
            }
            counter[j] = 0;
            j += 1;
        }
    }

    fn finish(
        ring: &FinRing,
        group: GradingGroup,
        degrees: Vec<Degree>,
        components: Vec<ElemSet>,
        parts: Vec<u32>,
    ) -> Result<GradedRing, GradingError> {
        let zero = ring.zero();
        let index_of: BTreeMap<&Degree, usize> =
            degrees.iter().enumerate().map(|(i, d)| (d, i)).collect();
        for (gi, g) in degrees.iter().enumerate() {
            for (hi, h) in degrees.iter().enumerate().skip(gi) {
                let gh = group.op(g, h);
                let target = index_of.get(&gh).map(|&i| &components[i]);
                for x in components[gi].iter() {
                    for y in components[hi].iter() {
                        let p = ring.mul(x, y);
                        let ok = match target {
                            Some(t) => t.contains(p),
                            None => p == zero,
                        };
                        if !ok {
                            return Err(GradingError::NotMultiplicative {
                                g: g.clone(),
                                h: h.clone(),
                                x: ring.name(x),
                                y: ring.name(y),
                                product: ring.name(p),
                            });
                        }
                    }
                }
            }
        }
        let label = format!("{}[{}]", ring.label(), group);
        Ok(GradedRing::assemble(ring.clone(), group, label, degrees, components, parts))
    }
}

impl GradedRing {
    fn assemble(
        ring: FinRing,
        group: GradingGroup,
        label: String,
        degrees: Vec<Degree>,
        components: Vec<ElemSet>,
        parts: Vec<u32>,
    ) -> GradedRing {
        let zero = ring.zero();
        let mut degree_of = vec![None; ring.size() as usize];
        let mut homogeneous = ElemSet::empty(ring.size());
        for (j, c) in components.iter().enumerate() {
            for x in c.iter() {
                homogeneous.insert(x);
                if x != zero {
                    degree_of[x.index()] = Some(j as u32);
                }
            }
        }
        let homogeneous_list = homogeneous.to_vec();
        let nonunit_homogeneous = homogeneous_list
            .iter()
            .copied()
            .filter(|&x| !ring.is_unit(x))
            .collect();
        let k = components.len();
        let nil = ring.nilradical();
        let grad_zero = ElemSet::from_elems(
            ring.size(),
            ring.elements().filter(|x| {
                parts[x.index() * k..(x.index() + 1) * k]
                    .iter()
                    .all(|&p| nil.contains(Elem(p)))
            }),
        );
        GradedRing {
            inner: Arc::new(GradedInner {
                ring,
                group,
                label,
                degrees,
                components,
                parts,
                degree_of,
                homogeneous,
                homogeneous_list,
                nonunit_homogeneous,
                grad_zero,
            }),
        }
    }

    /// The trivial grading: everything in degree `e` of `group`.
    pub fn trivial_over(ring: &FinRing, group: GradingGroup) -> GradedRing {
        let e = group.identity();
        let parts = ring.elements().map(|x| x.0).collect();
        let label = match &group {
            GradingGroup::Finite(fs) if fs.is_empty() => ring.label().to_string(),
            g => format!("{}[{g}, trivial]", ring.label()),
        };
        GradedRing::assemble(
            ring.clone(),
            group,
            label,
            vec![e],
            vec![ElemSet::full(ring.size())],
            parts,
        )
    }

    pub fn trivial(ring: &FinRing) -> GradedRing {
        Self::trivial_over(ring, GradingGroup::trivial())
    }

    /// The natural grading of a structured ring: `Z2` by real/imaginary part
    /// for `GaussMod`, degree mod `d` for `F_p[u]/(u^d - c)` with `c != 0`,
    /// the `Z`-grading by degree for `F_p[u]/(u^d)`, and componentwise for
    /// products whose factors carry the same standard group.
    pub fn standard(ring: &FinRing) -> Result<GradedRing, GradingError> {
        if let Some((l, r)) = ring.factors() {
            let gl = GradedRing::standard(l)?;
            let gr = GradedRing::standard(r)?;
            return crate::transport::product(&gl, &gr)
                .map(|p| p.with_ring(ring.clone()))
                .map_err(|e| GradingError::NoStandardGrading(e.to_string()));
        }
        let Some((_, g)) = ring.generator() else {
            return Err(GradingError::NoStandardGrading(ring.label().to_string()));
        };
        let scalars = |x: Elem| -> Vec<Elem> {
            let mut out: Vec<Elem> = (0..ring.size() as i64).map(|k| ring.times(x, k)).collect();
            out.sort();
            out.dedup();
            out
        };
        let constants = scalars(ring.one());
        // the first power of the generator that is a scalar decides the group
        let mut powers = vec![ring.one()];
        let mut x = g;
        while !constants.contains(&x) {
            if powers.len() > ring.size() as usize {
                return Err(GradingError::NoStandardGrading(ring.label().to_string()));
            }
            powers.push(x);
            x = ring.mul(x, g);
        }
        let group = if x == ring.zero() {
            GradingGroup::Integers
        } else {
            GradingGroup::cyclic(powers.len() as u32)
        };
        let comps = powers
            .iter()
            .enumerate()
            .map(|(k, &p)| (Degree(vec![k as i64]), scalars(p)));
        attach_grading(ring, group, comps)
    }

    fn with_ring(self, ring: FinRing) -> GradedRing {
        let inner = &self.inner;
        let label = format!("{}[{}]", ring.label(), inner.group);
        GradedRing::assemble(
            ring,
            inner.group.clone(),
            label,
            inner.degrees.clone(),
            inner.components.clone(),
            inner.parts.clone(),
        )
    }

    pub(crate) fn relabel(self, label: String) -> GradedRing {
        let inner = &self.inner;
        GradedRing::assemble(
            inner.ring.clone(),
            inner.group.clone(),
            label,
            inner.degrees.clone(),
            inner.components.clone(),
            inner.parts.clone(),
        )
    }

    pub fn ring(&self) -> &FinRing {
        &self.inner.ring
    }

    pub fn group(&self) -> &GradingGroup {
        &self.inner.group
    }

    /// Provenance label, e.g. `GaussMod(4)[Z2]`.
    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn size(&self) -> u32 {
        self.inner.ring.size()
    }

    /// Supported degrees in canonical order.
    pub fn degrees(&self) -> &[Degree] {
        &self.inner.degrees
    }

    pub fn component(&self, g: &Degree) -> Option<&ElemSet> {
        self.inner
            .degrees
            .iter()
            .position(|d| d == g)
            .map(|i| &self.inner.components[i])
    }

    pub fn components(&self) -> impl Iterator<Item = (&Degree, &ElemSet)> {
        self.inner.degrees.iter().zip(&self.inner.components)
    }

    /// Homogeneous parts of `x`, aligned with [`GradedRing::degrees`].
    pub fn parts(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        let k = self.inner.components.len();
        self.inner.parts[x.index() * k..(x.index() + 1) * k]
            .iter()
            .map(|&p| Elem(p))
    }

    /// The unique decomposition of `x` into homogeneous parts.
    pub fn decompose(&self, x: Elem) -> BTreeMap<Degree, Elem> {
        self.inner.degrees.iter().cloned().zip(self.parts(x)).collect()
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, x: Elem) -> Option<&Degree> {
        self.inner.degree_of[x.index()].map(|j| &self.inner.degrees[j as usize])
    }

    pub fn is_homogeneous(&self, x: Elem) -> bool {
        self.inner.homogeneous.contains(x)
    }

    pub fn homogeneous_elements(&self) -> &ElemSet {
        &self.inner.homogeneous
    }

    pub fn homogeneous_list(&self) -> &[Elem] {
        &self.inner.homogeneous_list
    }

    pub fn nonunit_homogeneous(&self) -> &[Elem] {
        &self.inner.nonunit_homogeneous
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.inner.ring.is_unit(x)
    }

    /// `Grad({0})`: elements whose homogeneous parts are all nilpotent.
    pub fn grad_zero(&self) -> &ElemSet {
        &self.inner.grad_zero
    }

    pub fn identity_degree(&self) -> Degree {
        self.inner.group.identity()
    }

    pub fn name(&self, x: Elem) -> String {
        self.inner.ring.name(x)
    }

    pub fn parse_element(&self, s: &str) -> Result<Elem, RingError> {
        self.inner.ring.parse_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, RingSpec};

    fn gauss_z2(n: u32) -> GradedRing {
        let r = build_ring(&RingSpec::GaussMod(n)).unwrap();
        GradedRing::standard(&r).unwrap()
    }

    fn graded_field_f3() -> GradedRing {
        let r = build_ring(&RingSpec::PolyQuotient { p: 3, modulus: vec![-1, 0, 1] }).unwrap();
        GradedRing::standard(&r).unwrap()
    }

    fn el(gr: &GradedRing, s: &str) -> Elem {
        gr.parse_element(s).unwrap()
    }

    #[test]
    fn gauss_four_z2_explicit_components() {
        let r = build_ring(&RingSpec::GaussMod(4)).unwrap();
        let re: Vec<Elem> = (0..4).map(|a| r.from_int(a)).collect();
        let i = r.parse_element("i").unwrap();
        let im: Vec<Elem> = (0..4).map(|b| r.times(i, b)).collect();
        let gr = attach_grading(
            &r,
            GradingGroup::cyclic(2),
            [(Degree(vec![0]), re), (Degree(vec![1]), im)],
        )
        .unwrap();
        assert_eq!(gr.degrees().len(), 2);
        assert_eq!(gr, gr.clone());
        let std = gauss_z2(4);
        assert_eq!(
            gr.components().map(|(_, c)| c.clone()).collect::<Vec<_>>(),
            std.components().map(|(_, c)| c.clone()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn decomposition_examples() {
        let gr = gauss_z2(4);
        let parts = gr.decompose(el(&gr, "2+3*i"));
        assert_eq!(parts[&Degree(vec![0])], el(&gr, "2"));
        assert_eq!(parts[&Degree(vec![1])], el(&gr, "3*i"));
        assert!(gr.decompose(Elem(0)).values().all(|&p| p == Elem(0)));

        let f = graded_field_f3();
        let parts = f.decompose(el(&f, "1+u"));
        assert_eq!(parts[&Degree(vec![0])], el(&f, "1"));
        assert_eq!(parts[&Degree(vec![1])], el(&f, "u"));
    }

    #[test]
    fn homogeneous_counts() {
        let c12 = GradedRing::trivial(&build_ring(&RingSpec::Cyclic(12)).unwrap());
        assert_eq!(c12.homogeneous_elements().len(), 12);
        assert_eq!(gauss_z2(4).homogeneous_elements().len(), 4 + 4 - 1);
        let f = graded_field_f3();
        let names: Vec<String> = f.homogeneous_list().iter().map(|&x| f.name(x)).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["0", "1", "2", "2*u", "u"]);
    }

    #[test]
    fn gauss_four_homogeneous_count_by_scan() {
        // |R_0| + |R_1| - 1, overlap only at 0
        let gr = gauss_z2(4);
        let count = gr
            .ring()
            .elements()
            .filter(|&x| gr.parts(x).filter(|&p| p != Elem(0)).count() <= 1)
            .count();
        assert_eq!(count, gr.homogeneous_elements().len());
    }

    #[test]
    fn rejects_non_subgroup() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let err = attach_grading(
            &r,
            GradingGroup::cyclic(2),
            [(Degree(vec![0]), vec![Elem(0), Elem(1)]), (Degree(vec![1]), vec![Elem(2)])],
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::NotSubgroup { .. }), "{err}");
    }

    #[test]
    fn rejects_non_direct_sum() {
        let r = build_ring(&RingSpec::GaussMod(2)).unwrap();
        let all: Vec<Elem> = r.elements().collect();
        let err = attach_grading(
            &r,
            GradingGroup::cyclic(2),
            [(Degree(vec![0]), all), (Degree(vec![1]), vec![Elem(2)])],
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::NotDirectSum(_)), "{err}");

        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let err = attach_grading(&r, GradingGroup::trivial(), [(Degree(vec![]), vec![Elem(1), Elem(2), Elem(3)])]);
        assert!(err.is_ok());
        let err = attach_grading(&r, GradingGroup::cyclic(2), [(Degree(vec![0]), vec![Elem(1), Elem(3), Elem(2)]), (Degree(vec![1]), vec![Elem(2)])]).unwrap_err();
        assert!(matches!(err, GradingError::NotDirectSum(_)), "{err}");
    }

    #[test]
    fn rejects_non_multiplicative() {
        // Z/2 x Z/2 with R_0 = <(1,1)>, R_1 = <(1,0)>: (1,0)^2 = (1,0) lies in R_1, not R_0.
        let r = build_ring(&RingSpec::Product(Box::new(RingSpec::Cyclic(2)), Box::new(RingSpec::Cyclic(2)))).unwrap();
        let e10 = r.parse_element("(1,0)").unwrap();
        let err = attach_grading(
            &r,
            GradingGroup::cyclic(2),
            [(Degree(vec![0]), vec![r.one()]), (Degree(vec![1]), vec![e10])],
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::NotMultiplicative { .. }), "{err}");
    }

    #[test]
    fn rejects_one_outside_identity_component() {
        let r = build_ring(&RingSpec::GaussMod(3)).unwrap();
        let i = r.parse_element("i").unwrap();
        let comps = [
            (Degree(vec![0]), vec![i, r.times(i, 2)]),
            (Degree(vec![1]), vec![r.one(), r.from_int(2)]),
        ];
        assert_eq!(
            attach_grading(&r, GradingGroup::cyclic(2), comps).unwrap_err(),
            GradingError::IdentityNotInRe
        );
    }

    #[test]
    fn integer_grading_of_truncated_polynomials() {
        let r = build_ring(&RingSpec::PolyQuotient { p: 2, modulus: vec![0, 0, 0, 1] }).unwrap();
        let gr = GradedRing::standard(&r).unwrap();
        assert_eq!(gr.group(), &GradingGroup::Integers);
        assert_eq!(gr.degrees().len(), 3);
        let u = el(&gr, "u");
        assert_eq!(gr.degree_of(u), Some(&Degree(vec![1])));
        // products leaving the support vanish: u * u^2 = 0
        assert_eq!(gr.ring().mul(u, el(&gr, "u^2")), Elem(0));
    }

    #[test]
    fn decomposition_is_bijective_and_sums_back() {
        for gr in [gauss_z2(4), gauss_z2(9), graded_field_f3()] {
            let r = gr.ring();
            let product: usize = gr.components().map(|(_, c)| c.len()).product();
            assert_eq!(product, r.size() as usize);
            for x in r.elements() {
                let parts: Vec<Elem> = gr.parts(x).collect();
                let sum = parts.iter().fold(r.zero(), |a, &p| r.add(a, p));
                assert_eq!(sum, x);
                for ((_, c), p) in gr.components().zip(&parts) {
                    assert!(c.contains(*p));
                }
                if gr.is_homogeneous(x) {
                    assert!(parts.iter().filter(|&&p| p != r.zero()).count() <= 1);
                }
            }
        }
    }

    #[test]
    fn degree_parsing() {
        let g = GradingGroup::Finite(vec![2, 3]);
        assert_eq!(g.parse_degree("(1, 4)"), Some(Degree(vec![1, 1])));
        assert_eq!(g.parse_degree("e"), Some(Degree(vec![0, 0])));
        assert_eq!(g.parse_degree("1"), None);
        assert_eq!(GradingGroup::Integers.parse_degree("-2"), Some(Degree(vec![-2])));
        assert_eq!(GradingGroup::trivial().parse_degree("e"), Some(Degree(vec![])));
        assert_eq!(g.to_string(), "Z2xZ3");
    }
}
