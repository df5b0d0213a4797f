//! Ideals as explicit element sets: generation, graded-ness, graded radical,
//! colon ideals, sums/products/intersections and the lattice of graded ideals.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::finring::FinRing;
use crate::grading::{Degree, GradedRing};

/// Default cap on the number of graded ideals a lattice enumeration may produce.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal is not graded: component {part} (degree {degree}) of {element} is missing")]
    NotGraded {
        element: String,
        part: String,
        degree: Degree,
    },
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("graded-ideal lattice exceeds the cap of {cap} ideals")]
    BudgetExceeded { cap: usize },
}

/// An ideal, stored as its full element set together with an optional
/// generating set (empty when none is known).
#[derive(Clone)]
pub struct Ideal {
    ring: FinRing,
    members: ElemSet,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

impl Ideal {
    pub fn zero(ring: &FinRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ElemSet::from_elems(ring.size(), [ring.zero()]),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &FinRing) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: ElemSet::full(ring.size()),
            generators: vec![ring.one()],
        }
    }

    /// Validates an explicit element set as an ideal.
    pub fn from_elements(ring: &FinRing, elems: impl IntoIterator<Item = Elem>) -> Result<Ideal, IdealError> {
        let members = ElemSet::from_elems(ring.size(), elems);
        check_ideal(ring, &members)?;
        Ok(Ideal {
            ring: ring.clone(),
            members,
            generators: Vec::new(),
        })
    }

    /// Wraps a set already known to be an ideal.
    pub(crate) fn from_set_unchecked(ring: &FinRing, members: ElemSet, generators: Vec<Elem>) -> Ideal {
        debug_assert!(check_ideal(ring, &members).is_ok());
        Ideal {
            ring: ring.clone(),
            members,
            generators,
        }
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Generators when known, otherwise every member.
    pub fn gens_or_members(&self) -> Vec<Elem> {
        if self.generators.is_empty() {
            self.elements()
        } else {
            self.generators.clone()
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.ring.names(self.members.iter())
    }

    /// Short description: the generators if known, otherwise the element list.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "<0>".to_string();
        }
        if !self.generators.is_empty() {
            return format!("<{}>", self.ring.names(self.generators.iter().copied()).join(", "));
        }
        format!("{{{}}}", self.names().join(", "))
    }

    fn same_ring(&self, other: &Ideal) -> Result<(), IdealError> {
        if self.ring.id() == other.ring.id() {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }
}

/// Exhaustive ideal check: contains 0, closed under addition and under
/// multiplication by every ring element.
pub fn check_ideal(ring: &FinRing, set: &ElemSet) -> Result<(), IdealError> {
    if set.universe() != ring.size() {
        return Err(IdealError::RingMismatch);
    }
    if !set.contains(ring.zero()) {
        return Err(IdealError::NotAnIdeal("does not contain 0".into()));
    }
    for x in set.iter() {
        for y in set.iter() {
            let s = ring.add(x, y);
            if !set.contains(s) {
                return Err(IdealError::NotAnIdeal(format!(
                    "{} + {} = {} is missing",
                    ring.name(x),
                    ring.name(y),
                    ring.name(s)
                )));
            }
        }
        for r in ring.elements() {
            let p = ring.mul(r, x);
            if !set.contains(p) {
                return Err(IdealError::NotAnIdeal(format!(
                    "{} * {} = {} is missing",
                    ring.name(r),
                    ring.name(x),
                    ring.name(p)
                )));
            }
        }
    }
    Ok(())
}

/// Extends the additive subgroup `set` (listed in `list`) by each seed,
/// adjoining whole cosets `H + j*t` until a multiple of `t` falls back into `H`.
fn span_into(ring: &FinRing, set: &mut ElemSet, list: &mut Vec<Elem>, seeds: impl IntoIterator<Item = Elem>) {
    for t in seeds {
        if set.contains(t) {
            continue;
        }
        let base = list.clone();
        let mut m = t;
        while !set.contains(m) {
            for &h in &base {
                let v = ring.add(h, m);
                if set.insert(v) {
                    list.push(v);
                }
            }
            m = ring.add(m, t);
        }
    }
}

/// The least ideal containing `gens`.
pub fn ideal_generated(ring: &FinRing, gens: &[Elem]) -> Ideal {
    let mut set = ElemSet::from_elems(ring.size(), [ring.zero()]);
    let mut list = vec![ring.zero()];
    for &g in gens {
        // Rg is already an additive group
        let principal: Vec<Elem> = ring.elements().map(|r| ring.mul(r, g)).collect();
        span_into(ring, &mut set, &mut list, principal);
    }
    let mut generators: Vec<Elem> = gens.iter().copied().filter(|&g| g != ring.zero()).collect();
    generators.sort();
    generators.dedup();
    Ideal {
        ring: ring.clone(),
        members: set,
        generators,
    }
}

/// Outcome of a graded-ness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedCertificate {
    /// Every homogeneous part of every member lies in the ideal.
    Graded,
    /// `element` is in the ideal but its degree-`degree` part `part` is not.
    Violation { element: Elem, part: Elem, degree: Degree },
}

impl GradedCertificate {
    pub fn is_graded(&self) -> bool {
        matches!(self, GradedCertificate::Graded)
    }
}

/// Tests whether every component of every member lies in `ideal`; the
/// first violating member in index order is reported otherwise.
pub fn is_graded_ideal(gr: &GradedRing, ideal: &Ideal) -> Result<GradedCertificate, IdealError> {
    if ideal.ring.id() != gr.ring().id() {
        return Err(IdealError::RingMismatch);
    }
    for x in ideal.members.iter() {
        for (degree, part) in gr.degrees().iter().zip(gr.parts(x)) {
            if !ideal.contains(part) {
                return Ok(GradedCertificate::Violation {
                    element: x,
                    part,
                    degree: degree.clone(),
                });
            }
        }
    }
    Ok(GradedCertificate::Graded)
}

/// Like [`is_graded_ideal`], but turns a violation into [`IdealError::NotGraded`].
pub fn require_graded(gr: &GradedRing, ideal: &Ideal) -> Result<(), IdealError> {
    match is_graded_ideal(gr, ideal)? {
        GradedCertificate::Graded => Ok(()),
        GradedCertificate::Violation { element, part, degree } => Err(IdealError::NotGraded {
            element: gr.name(element),
            part: gr.name(part),
            degree,
        }),
    }
}

/// `Grad(I)`: elements all of whose homogeneous parts have a power (exponent
/// at most the carrier size) in `I`. `Grad(R) = R` by convention.
pub fn graded_radical(gr: &GradedRing, ideal: &Ideal) -> Result<Ideal, IdealError> {
    require_graded(gr, ideal)?;
    let ring = gr.ring();
    if !ideal.is_proper() {
        return Ok(Ideal::unit(ring));
    }
    let mut rooted = ElemSet::empty(ring.size());
    for &h in gr.homogeneous_list() {
        let mut power = h;
        for _ in 0..ring.size() {
            if ideal.contains(power) {
                rooted.insert(h);
                break;
            }
            power = ring.mul(power, h);
        }
    }
    let members = ElemSet::from_elems(
        ring.size(),
        ring.elements().filter(|&x| gr.parts(x).all(|p| rooted.contains(p))),
    );
    let mut generators: Vec<Elem> = members
        .iter()
        .filter(|&x| x != ring.zero() && gr.is_homogeneous(x))
        .collect();
    if generators.len() > 8 {
        generators.clear();
    }
    Ok(Ideal::from_set_unchecked(ring, members, generators))
}

/// `(P : K) = { r : rK ⊆ P }`.
pub fn colon(ring: &FinRing, p: &Ideal, k: &Ideal) -> Result<Ideal, IdealError> {
    p.same_ring(k)?;
    if p.ring.id() != ring.id() {
        return Err(IdealError::RingMismatch);
    }
    let gens = k.gens_or_members();
    let members = ElemSet::from_elems(
        ring.size(),
        ring.elements()
            .filter(|&r| gens.iter().all(|&g| p.contains(ring.mul(r, g)))),
    );
    Ok(Ideal::from_set_unchecked(ring, members, Vec::new()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Product,
    Intersection,
}

/// `I + J`, `IJ` or `I ∩ J`.
pub fn combine(ring: &FinRing, i: &Ideal, j: &Ideal, op: Combine) -> Result<Ideal, IdealError> {
    i.same_ring(j)?;
    if i.ring.id() != ring.id() {
        return Err(IdealError::RingMismatch);
    }
    Ok(match op {
        Combine::Sum => sum(i, j),
        Combine::Product => product(i, j),
        Combine::Intersection => Ideal::from_set_unchecked(ring, i.members.intersection(&j.members), Vec::new()),
    })
}

fn sum(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = &i.ring;
    if j.is_subset(i) {
        return i.clone();
    }
    if i.is_subset(j) {
        return j.clone();
    }
    let mut set = i.members.clone();
    let mut list = i.elements();
    span_into(ring, &mut set, &mut list, j.members.iter());
    let generators = if i.generators.is_empty() || j.generators.is_empty() {
        Vec::new()
    } else {
        let mut g = i.generators.clone();
        for &x in &j.generators {
            if !g.contains(&x) {
                g.push(x);
            }
        }
        g
    };
    Ideal::from_set_unchecked(ring, set, generators)
}

fn product(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = &i.ring;
    let gi = i.gens_or_members();
    let gj = j.gens_or_members();
    let mut seeds: Vec<Elem> = Vec::with_capacity(gi.len() * gj.len());
    for &a in &gi {
        for &b in &gj {
            seeds.push(ring.mul(a, b));
        }
    }
    seeds.sort();
    seeds.dedup();
    seeds.retain(|&x| x != ring.zero());
    let mut out = ideal_generated(ring, &seeds);
    if out.generators.len() > 8 {
        out.generators.clear();
    }
    out
}

/// Every graded ideal of `gr`, in canonical order (by size, then by sorted
/// element indices), capped at [`DEFAULT_LATTICE_CAP`].
pub fn enumerate_graded_ideals(gr: &GradedRing) -> Result<Vec<Ideal>, IdealError> {
    enumerate_graded_ideals_capped(gr, DEFAULT_LATTICE_CAP)
}

/// Graded ideals are exactly the sums of principal ideals of homogeneous
/// elements; the lattice is grown by adding one principal ideal at a time to
/// every ideal found so far.
pub fn enumerate_graded_ideals_capped(gr: &GradedRing, cap: usize) -> Result<Vec<Ideal>, IdealError> {
    let ring = gr.ring();
    let mut principals: Vec<Ideal> = Vec::new();
    let mut seen_principal: HashSet<ElemSet> = HashSet::new();
    for &a in gr.homogeneous_list() {
        if a == ring.zero() {
            continue;
        }
        let p = ideal_generated(ring, &[a]);
        if seen_principal.insert(p.members.clone()) {
            principals.push(p);
        }
    }

    let mut lattice = vec![Ideal::zero(ring)];
    let mut seen: HashSet<ElemSet> = HashSet::from([lattice[0].members.clone()]);
    for p in &principals {
        let snapshot = lattice.len();
        for idx in 0..snapshot {
            if p.is_subset(&lattice[idx]) {
                continue;
            }
            let s = sum(&lattice[idx], p);
            if seen.insert(s.members.clone()) {
                lattice.push(s);
                if lattice.len() > cap {
                    return Err(IdealError::BudgetExceeded { cap });
                }
            }
        }
    }
    lattice.sort();
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, RingSpec};

    fn cyclic(n: u32) -> GradedRing {
        GradedRing::trivial(&build_ring(&RingSpec::Cyclic(n)).unwrap())
    }

    fn gauss_z2(n: u32) -> GradedRing {
        GradedRing::standard(&build_ring(&RingSpec::GaussMod(n)).unwrap()).unwrap()
    }

    fn gen(gr: &GradedRing, gens: &[&str]) -> Ideal {
        let g: Vec<Elem> = gens.iter().map(|s| gr.parse_element(s).unwrap()).collect();
        ideal_generated(gr.ring(), &g)
    }

    fn ints(i: &Ideal) -> Vec<u32> {
        i.elements().iter().map(|e| e.0).collect()
    }

    #[test]
    fn generated_ideals() {
        let c12 = cyclic(12);
        assert_eq!(ints(&gen(&c12, &["4"])), vec![0, 4, 8]);
        let c9 = cyclic(9);
        assert_eq!(ints(&gen(&c9, &["3"])), vec![0, 3, 6]);
        let g4 = gauss_z2(4);
        let two_r = gen(&g4, &["2", "2*i"]);
        assert_eq!(two_r.len(), 4);
        let r = g4.ring();
        for x in two_r.elements() {
            assert!(r.elements().any(|y| r.times(y, 2) == x));
        }
    }

    #[test]
    fn from_elements_validates() {
        let r = build_ring(&RingSpec::Cyclic(12)).unwrap();
        assert!(Ideal::from_elements(&r, [Elem(0), Elem(4), Elem(8)]).is_ok());
        assert!(matches!(
            Ideal::from_elements(&r, [Elem(0), Elem(4)]),
            Err(IdealError::NotAnIdeal(_))
        ));
        assert!(matches!(
            Ideal::from_elements(&r, [Elem(4), Elem(8)]),
            Err(IdealError::NotAnIdeal(_))
        ));
    }

    #[test]
    fn graded_checks() {
        let c12 = cyclic(12);
        for i in enumerate_graded_ideals(&c12).unwrap() {
            assert!(is_graded_ideal(&c12, &i).unwrap().is_graded());
        }
        let g4 = gauss_z2(4);
        assert!(is_graded_ideal(&g4, &gen(&g4, &["2*i"])).unwrap().is_graded());
        let bad = gen(&g4, &["1+i"]);
        assert!(bad.is_proper());
        match is_graded_ideal(&g4, &bad).unwrap() {
            GradedCertificate::Violation { element, .. } => assert_eq!(g4.name(element), "1+i"),
            other => panic!("expected a violation, got {other:?}"),
        }
        assert!(matches!(graded_radical(&g4, &bad), Err(IdealError::NotGraded { .. })));
    }

    #[test]
    fn radicals() {
        let c12 = cyclic(12);
        let rad = graded_radical(&c12, &gen(&c12, &["4"])).unwrap();
        assert_eq!(ints(&rad), vec![0, 2, 4, 6, 8, 10]);
        let c9 = cyclic(9);
        assert_eq!(ints(&graded_radical(&c9, &Ideal::zero(c9.ring())).unwrap()), vec![0, 3, 6]);
        let c6 = cyclic(6);
        let p = gen(&c6, &["3"]);
        assert_eq!(graded_radical(&c6, &p).unwrap(), p);
        assert!(graded_radical(&c6, &Ideal::unit(c6.ring())).unwrap().is_subset(&Ideal::unit(c6.ring())));
        assert!(!graded_radical(&c6, &Ideal::unit(c6.ring())).unwrap().is_proper());
    }

    #[test]
    fn colon_ideals() {
        let c12 = cyclic(12);
        let r = c12.ring();
        let p = gen(&c12, &["4"]);
        let k = gen(&c12, &["2"]);
        assert_eq!(ints(&colon(r, &p, &k).unwrap()), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(colon(r, &p, &Ideal::unit(r)).unwrap(), p);
        assert!(!colon(r, &k, &p).unwrap().is_proper());
    }

    #[test]
    fn combinations() {
        let c12 = cyclic(12);
        let r = c12.ring();
        let i = gen(&c12, &["4"]);
        let j = gen(&c12, &["6"]);
        assert_eq!(combine(r, &i, &Ideal::zero(r), Combine::Sum).unwrap(), i);
        assert!(combine(r, &i, &j, Combine::Product).unwrap().is_zero());
        assert!(combine(r, &i, &j, Combine::Intersection).unwrap().is_zero());
        assert_eq!(ints(&combine(r, &i, &j, Combine::Sum).unwrap()), vec![0, 2, 4, 6, 8, 10]);
        let other = cyclic(12);
        let foreign = gen(&other, &["4"]);
        assert_eq!(combine(r, &i, &foreign, Combine::Sum), Err(IdealError::RingMismatch));
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(enumerate_graded_ideals(&cyclic(12)).unwrap().len(), 6);
        let f = GradedRing::standard(
            &build_ring(&RingSpec::PolyQuotient { p: 3, modulus: vec![-1, 0, 1] }).unwrap(),
        )
        .unwrap();
        let lattice = enumerate_graded_ideals(&f).unwrap();
        assert_eq!(lattice.len(), 2);
        assert!(lattice[0].is_zero());
        assert!(!lattice[1].is_proper());
        let g4 = gauss_z2(4);
        let lattice = enumerate_graded_ideals(&g4).unwrap();
        assert!(lattice.contains(&gen(&g4, &["2", "2*i"])));
    }

    #[test]
    fn lattice_cap() {
        assert_eq!(
            enumerate_graded_ideals_capped(&cyclic(12), 3),
            Err(IdealError::BudgetExceeded { cap: 3 })
        );
    }

    #[test]
    fn lattice_is_canonically_ordered() {
        let lattice = enumerate_graded_ideals(&cyclic(36)).unwrap();
        assert_eq!(lattice.len(), 9);
        assert!(lattice.windows(2).all(|w| w[0] < w[1]));
        assert!(lattice[0].is_zero());
        assert!(!lattice.last().unwrap().is_proper());
    }
}
