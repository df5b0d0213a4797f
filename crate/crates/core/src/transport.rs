//! Graded constructions and graded homomorphisms.
//!
//! Quotients, products, localizations at homogeneous multiplicative sets and
//! the identity-component subring, each returned as a freshly validated
//! [`GradedRing`] together with its canonical map where one exists.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::finring::{FinRing, RingError, Tables};
use crate::grading::{attach_grading, Degree, GradedRing, GradingError};
use crate::ideals::{ideal_generated, require_graded, Ideal, IdealError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("ideal is not proper")]
    NotProper,
    #[error("grading groups differ: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("invalid multiplicative set: {0}")]
    InvalidSet(String),
    #[error("not a subring: {0}")]
    InvalidSubring(String),
    #[error("map is not additive: f({x} + {y}) != f({x}) + f({y})")]
    NotAdditive { x: String, y: String },
    #[error("map is not multiplicative: f({x} * {y}) != f({x}) * f({y})")]
    NotMultiplicative { x: String, y: String },
    #[error("map sends 1 to {0}")]
    UnitNotPreserved(String),
    #[error("map is not degree preserving: {x} has degree {degree} but f({x}) = {image} does not")]
    NotDegreePreserving { x: String, degree: Degree, image: String },
    #[error("map has {got} entries, source has {want} elements")]
    WrongArity { got: usize, want: usize },
    #[error("kernel is not contained in the ideal: {0} is missing")]
    KernelNotContained(String),
    #[error("map is not surjective: {0} is not hit")]
    NotSurjective(String),
    #[error("ideal belongs to a different ring")]
    RingMismatch,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A validated degree-preserving ring homomorphism.
#[derive(Debug, Clone)]
pub struct GradedHom {
    source: GradedRing,
    target: GradedRing,
    map: Vec<Elem>,
    kernel: Ideal,
    image: ElemSet,
}

/// Validates `map` (indexed by source element) as a graded homomorphism.
pub fn hom_build(source: &GradedRing, target: &GradedRing, map: Vec<Elem>) -> Result<GradedHom, TransportError> {
    let (r, s) = (source.ring(), target.ring());
    if source.group() != target.group() {
        return Err(TransportError::GroupMismatch(
            source.group().to_string(),
            target.group().to_string(),
        ));
    }
    if map.len() != r.size() as usize {
        return Err(TransportError::WrongArity {
            got: map.len(),
            want: r.size() as usize,
        });
    }
    if let Some(bad) = map.iter().find(|e| e.0 >= s.size()) {
        return Err(TransportError::WrongArity {
            got: bad.index(),
            want: s.size() as usize,
        });
    }
    let f = |x: Elem| map[x.index()];
    if f(r.one()) != s.one() {
        return Err(TransportError::UnitNotPreserved(s.name(f(r.one()))));
    }
    for x in r.elements() {
        for y in r.elements() {
            if f(r.add(x, y)) != s.add(f(x), f(y)) {
                return Err(TransportError::NotAdditive { x: r.name(x), y: r.name(y) });
            }
            if f(r.mul(x, y)) != s.mul(f(x), f(y)) {
                return Err(TransportError::NotMultiplicative { x: r.name(x), y: r.name(y) });
            }
        }
    }
    for (degree, comp) in source.components() {
        let target_comp = target.component(degree);
        for x in comp.iter() {
            let y = f(x);
            let ok = y == s.zero() || target_comp.is_some_and(|c| c.contains(y));
            if !ok {
                return Err(TransportError::NotDegreePreserving {
                    x: r.name(x),
                    degree: degree.clone(),
                    image: s.name(y),
                });
            }
        }
    }
    let kernel = Ideal::from_elements(r, r.elements().filter(|&x| f(x) == s.zero()))?;
    require_graded(source, &kernel)?;
    let image = ElemSet::from_elems(s.size(), map.iter().copied());
    Ok(GradedHom {
        source: source.clone(),
        target: target.clone(),
        map,
        kernel,
        image,
    })
}

impl GradedHom {
    pub fn source(&self) -> &GradedRing {
        &self.source
    }

    pub fn target(&self) -> &GradedRing {
        &self.target
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x.index()]
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn image(&self) -> &ElemSet {
        &self.image
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image.is_full()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Image,
    Preimage,
}

/// Transports an ideal along `f`: the image of an ideal of the source
/// (requires `Ker f ⊆ I` and `f` onto), or the preimage of an ideal of the target.
pub fn hom_transport(f: &GradedHom, ideal: &Ideal, direction: Direction) -> Result<Ideal, TransportError> {
    match direction {
        Direction::Preimage => {
            if ideal.ring().id() != f.target.ring().id() {
                return Err(TransportError::RingMismatch);
            }
            let r = f.source.ring();
            Ok(Ideal::from_elements(r, r.elements().filter(|&x| ideal.contains(f.apply(x))))?)
        }
        Direction::Image => {
            if ideal.ring().id() != f.source.ring().id() {
                return Err(TransportError::RingMismatch);
            }
            if let Some(k) = f.kernel.members().iter().find(|&k| !ideal.contains(k)) {
                return Err(TransportError::KernelNotContained(f.source.name(k)));
            }
            let s = f.target.ring();
            if let Some(y) = s.elements().find(|&y| !f.image.contains(y)) {
                return Err(TransportError::NotSurjective(s.name(y)));
            }
            Ok(Ideal::from_elements(s, ideal.members().iter().map(|x| f.apply(x)))?)
        }
    }
}

/// A table-backed ring on `reps`, with arithmetic read off representatives
/// and reduced through `class_of`.
fn table_ring(
    reps: &[Elem],
    class_of: impl Fn(Elem) -> u32,
    add: impl Fn(Elem, Elem) -> Elem,
    mul: impl Fn(Elem, Elem) -> Elem,
    neg: impl Fn(Elem) -> Elem,
    names: Vec<String>,
    zero: Elem,
    one: Elem,
    label: String,
) -> Result<FinRing, TransportError> {
    let n = reps.len();
    let mut tables = Tables {
        add: Vec::with_capacity(n * n),
        mul: Vec::with_capacity(n * n),
        neg: Vec::with_capacity(n),
    };
    for &a in reps {
        for &b in reps {
            tables.add.push(class_of(add(a, b)) as u16);
            tables.mul.push(class_of(mul(a, b)) as u16);
        }
        tables.neg.push(class_of(neg(a)) as u16);
    }
    Ok(FinRing::from_tables(
        tables,
        Elem(class_of(zero)),
        Elem(class_of(one)),
        names,
        label,
    )?)
}

/// `R/K` with `(R/K)_g = (R_g + K)/K`, and the projection.
pub fn quotient(gr: &GradedRing, k: &Ideal) -> Result<(GradedRing, GradedHom), TransportError> {
    require_graded(gr, k)?;
    if !k.is_proper() {
        return Err(TransportError::NotProper);
    }
    let r = gr.ring();
    let mut class = vec![u32::MAX; r.size() as usize];
    let mut reps = Vec::new();
    for x in r.elements() {
        if class[x.index()] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for kk in k.members().iter() {
            class[r.add(x, kk).index()] = c;
        }
    }
    let names = reps
        .iter()
        .map(|&x| if k.is_zero() { r.name(x) } else { format!("[{}]", r.name(x)) })
        .collect();
    let label = format!("Quotient({}, {})", gr.label(), k.describe());
    let q = table_ring(
        &reps,
        |x| class[x.index()],
        |a, b| r.add(a, b),
        |a, b| r.mul(a, b),
        |a| r.neg(a),
        names,
        r.zero(),
        r.one(),
        label.clone(),
    )?;
    let comps: Vec<(Degree, Vec<Elem>)> = gr
        .components()
        .map(|(d, c)| (d.clone(), c.iter().map(|x| Elem(class[x.index()])).collect()))
        .collect();
    let qgr = attach_grading(&q, gr.group().clone(), comps)?.relabel(label);
    let proj = hom_build(gr, &qgr, class.iter().map(|&c| Elem(c)).collect())?;
    Ok((qgr, proj))
}

/// `R x S` graded by `(R x S)_g = R_g x S_g`.
pub fn product(a: &GradedRing, b: &GradedRing) -> Result<GradedRing, TransportError> {
    if a.group() != b.group() {
        return Err(TransportError::GroupMismatch(a.group().to_string(), b.group().to_string()));
    }
    let (ra, rb) = (a.ring(), b.ring());
    let size = ra.size() as u64 * rb.size() as u64;
    if size > crate::finring::MAX_CARRIER as u64 {
        return Err(RingError::TooLarge { size }.into());
    }
    let pair = |x: Elem, y: Elem| Elem(x.0 + ra.size() * y.0);
    let split = |z: Elem| (Elem(z.0 % ra.size()), Elem(z.0 / ra.size()));
    let reps: Vec<Elem> = (0..size as u32).map(Elem).collect();
    let names = reps
        .iter()
        .map(|&z| {
            let (x, y) = split(z);
            format!("({}, {})", ra.name(x), rb.name(y))
        })
        .collect();
    let label = format!("{} x {}", a.label(), b.label());
    let ring = table_ring(
        &reps,
        |z| z.0,
        |u, v| {
            let ((u1, u2), (v1, v2)) = (split(u), split(v));
            pair(ra.add(u1, v1), rb.add(u2, v2))
        },
        |u, v| {
            let ((u1, u2), (v1, v2)) = (split(u), split(v));
            pair(ra.mul(u1, v1), rb.mul(u2, v2))
        },
        |u| {
            let (u1, u2) = split(u);
            pair(ra.neg(u1), rb.neg(u2))
        },
        names,
        pair(ra.zero(), rb.zero()),
        pair(ra.one(), rb.one()),
        label.clone(),
    )?;
    let degrees: BTreeSet<&Degree> = a.degrees().iter().chain(b.degrees()).collect();
    let zero_a = ElemSet::from_elems(ra.size(), [ra.zero()]);
    let zero_b = ElemSet::from_elems(rb.size(), [rb.zero()]);
    let comps: Vec<(Degree, Vec<Elem>)> = degrees
        .into_iter()
        .map(|d| {
            let ca = a.component(d).unwrap_or(&zero_a);
            let cb = b.component(d).unwrap_or(&zero_b);
            let elems = ca
                .iter()
                .flat_map(|x| cb.iter().map(move |y| pair(x, y)))
                .collect();
            (d.clone(), elems)
        })
        .collect();
    Ok(attach_grading(&ring, a.group().clone(), comps)?.relabel(label))
}

/// A multiplicatively closed set of homogeneous elements containing 1 and not 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeSet {
    ring_id: u64,
    elements: ElemSet,
}

impl MultiplicativeSet {
    pub fn new(gr: &GradedRing, elems: impl IntoIterator<Item = Elem>) -> Result<Self, TransportError> {
        let r = gr.ring();
        let set = ElemSet::from_elems(r.size(), elems);
        if !set.contains(r.one()) {
            return Err(TransportError::InvalidSet("1 is missing".into()));
        }
        if set.contains(r.zero()) {
            return Err(TransportError::InvalidSet("0 is a member".into()));
        }
        if let Some(x) = set.iter().find(|&x| !gr.is_homogeneous(x)) {
            return Err(TransportError::InvalidSet(format!("{} is not homogeneous", r.name(x))));
        }
        for s in set.iter() {
            for t in set.iter() {
                if !set.contains(r.mul(s, t)) {
                    return Err(TransportError::InvalidSet(format!(
                        "{} * {} = {} is missing",
                        r.name(s),
                        r.name(t),
                        r.name(r.mul(s, t))
                    )));
                }
            }
        }
        Ok(MultiplicativeSet {
            ring_id: r.id(),
            elements: set,
        })
    }

    /// The multiplicative closure of `gens ∪ {1}`.
    pub fn generated(gr: &GradedRing, gens: &[Elem]) -> Result<Self, TransportError> {
        let r = gr.ring();
        let set = mult_closure(r, &ElemSet::from_elems(r.size(), [r.one()]), gens);
        Self::new(gr, set.iter())
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn describe(&self, gr: &GradedRing) -> String {
        format!("{{{}}}", gr.ring().names(self.elements.iter()).join(", "))
    }
}

fn mult_closure(r: &FinRing, base: &ElemSet, extra: &[Elem]) -> ElemSet {
    let mut set = base.clone();
    let mut frontier: Vec<Elem> = extra.iter().copied().filter(|&x| set.insert(x)).collect();
    while let Some(x) = frontier.pop() {
        let current: Vec<Elem> = set.iter().collect();
        for y in current {
            let p = r.mul(x, y);
            if set.insert(p) {
                frontier.push(p);
            }
        }
    }
    set
}

/// Every homogeneous multiplicative set with at most `max_size` elements,
/// in canonical order.
pub fn enumerate_multiplicative_sets(gr: &GradedRing, max_size: usize) -> Vec<MultiplicativeSet> {
    let r = gr.ring();
    let start = ElemSet::from_elems(r.size(), [r.one()]);
    let mut seen: std::collections::HashSet<ElemSet> = std::collections::HashSet::from([start.clone()]);
    let mut queue = vec![start];
    let mut out = Vec::new();
    while let Some(s) = queue.pop() {
        for &h in gr.homogeneous_list() {
            if h == r.zero() || s.contains(h) {
                continue;
            }
            let t = mult_closure(r, &s, &[h]);
            if t.len() <= max_size && !t.contains(r.zero()) && seen.insert(t.clone()) {
                queue.push(t);
            }
        }
        out.push(s);
    }
    out.sort();
    out.into_iter()
        .map(|elements| MultiplicativeSet {
            ring_id: r.id(),
            elements,
        })
        .collect()
}

/// `S⁻¹R` with `(S⁻¹R)_g = { a/s : a ∈ R_h, s ∈ S ∩ R_{hg⁻¹} }`, and the
/// canonical map `r ↦ r/1`.
pub fn localize(gr: &GradedRing, s: &MultiplicativeSet) -> Result<(GradedRing, GradedHom), TransportError> {
    let r = gr.ring();
    if s.ring_id != r.id() {
        return Err(TransportError::RingMismatch);
    }
    let denominators: Vec<Elem> = s.elements.iter().collect();
    let slot: HashMap<Elem, usize> = denominators.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let ns = denominators.len();
    let pair_index = |a: Elem, t: Elem| a.index() * ns + slot[&t];
    let equivalent = |(a, x): (Elem, Elem), (b, y): (Elem, Elem)| {
        let diff = r.sub(r.mul(a, y), r.mul(b, x));
        denominators.iter().any(|&u| r.mul(u, diff) == r.zero())
    };

    // assign classes to (a, s) pairs, reusing the first representative found
    let mut class = vec![u32::MAX; r.size() as usize * ns];
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    for a in r.elements() {
        for &t in &denominators {
            let found = reps.iter().position(|&rep| equivalent(rep, (a, t)));
            let c = match found {
                Some(c) => c,
                None => {
                    reps.push((a, t));
                    reps.len() - 1
                }
            };
            class[pair_index(a, t)] = c as u32;
        }
    }

    let names: Vec<String> = reps
        .iter()
        .map(|&(a, t)| {
            if t == r.one() {
                r.name(a)
            } else {
                format!("{}/{}", r.name(a), r.name(t))
            }
        })
        .collect();
    let label = format!("Localize({}, {})", gr.label(), s.describe(gr));
    // encode (a, t) as an Elem over the pair space for table construction
    let encode = |a: Elem, t: Elem| Elem(pair_index(a, t) as u32);
    let decode = |e: Elem| (Elem((e.index() / ns) as u32), denominators[e.index() % ns]);
    let rep_codes: Vec<Elem> = reps.iter().map(|&(a, t)| encode(a, t)).collect();
    let ring = table_ring(
        &rep_codes,
        |e| class[e.index()],
        |u, v| {
            let ((a, x), (b, y)) = (decode(u), decode(v));
            encode(r.add(r.mul(a, y), r.mul(b, x)), r.mul(x, y))
        },
        |u, v| {
            let ((a, x), (b, y)) = (decode(u), decode(v));
            encode(r.mul(a, b), r.mul(x, y))
        },
        |u| {
            let (a, x) = decode(u);
            encode(r.neg(a), x)
        },
        names,
        encode(r.zero(), r.one()),
        encode(r.one(), r.one()),
        label.clone(),
    )?;

    let group = gr.group().clone();
    let mut comps: std::collections::BTreeMap<Degree, Vec<Elem>> = std::collections::BTreeMap::new();
    for (h, comp) in gr.components() {
        for a in comp.iter() {
            for &t in &denominators {
                // a ∈ R_h and t ∈ R_{h g⁻¹} give a/t ∈ (S⁻¹R)_g with g = h·deg(t)⁻¹
                let dt = gr.degree_of(t).cloned().unwrap_or_else(|| group.identity());
                let g = group.op(h, &group.inverse(&dt));
                comps.entry(g).or_default().push(Elem(class[pair_index(a, t)]));
            }
        }
    }
    let lgr = attach_grading(&ring, group, comps)?.relabel(label);
    let canonical = r.elements().map(|x| Elem(class[pair_index(x, r.one())])).collect();
    let hom = hom_build(gr, &lgr, canonical)?;
    Ok((lgr, hom))
}

/// The subring on `members` as a table ring, or an error naming the failed closure.
fn subring_ring(gr: &GradedRing, members: &ElemSet, label: &str) -> Result<FinRing, TransportError> {
    let r = gr.ring();
    if !members.contains(r.one()) {
        return Err(TransportError::InvalidSubring("1 is missing".into()));
    }
    for a in members.iter() {
        if !members.contains(r.neg(a)) {
            return Err(TransportError::InvalidSubring(format!("-{} is missing", r.name(a))));
        }
        for b in members.iter() {
            for (op, c) in [("+", r.add(a, b)), ("*", r.mul(a, b))] {
                if !members.contains(c) {
                    return Err(TransportError::InvalidSubring(format!(
                        "{} {op} {} = {} is missing",
                        r.name(a),
                        r.name(b),
                        r.name(c)
                    )));
                }
            }
        }
    }
    let list: Vec<Elem> = members.iter().collect();
    let position: HashMap<Elem, u32> = list.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    table_ring(
        &list,
        |x| position[&x],
        |a, b| r.add(a, b),
        |a, b| r.mul(a, b),
        |a| r.neg(a),
        list.iter().map(|&x| r.name(x)).collect(),
        r.zero(),
        r.one(),
        label.to_string(),
    )
}

/// A subring `S` with the induced grading `S_g = S ∩ R_g`, and its inclusion.
/// Fails unless `S` is a subring whose induced components sum to `S`.
pub fn graded_subring(gr: &GradedRing, members: &ElemSet, label: &str) -> Result<(GradedRing, GradedHom), TransportError> {
    let ring = subring_ring(gr, members, label)?;
    let list: Vec<Elem> = members.iter().collect();
    let position: HashMap<Elem, u32> = list.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    let comps: Vec<(Degree, Vec<Elem>)> = gr
        .components()
        .map(|(d, c)| (d.clone(), c.intersection(members).iter().map(|x| Elem(position[&x])).collect()))
        .collect();
    let sub = attach_grading(&ring, gr.group().clone(), comps)?.relabel(label.to_string());
    let inclusion = hom_build(&sub, gr, list)?;
    Ok((sub, inclusion))
}

/// The image of the integers, `{k·1}`, with its induced grading (all in degree e).
pub fn prime_subring(gr: &GradedRing) -> Result<(GradedRing, GradedHom), TransportError> {
    let r = gr.ring();
    let members = ElemSet::from_elems(r.size(), (0..r.size() as i64).map(|k| r.times(r.one(), k)));
    graded_subring(gr, &members, &format!("PrimeSubring({})", gr.label()))
}

/// `R_e` with the trivial grading over the same group, and its inclusion into `R`.
pub fn identity_subring(gr: &GradedRing) -> Result<(GradedRing, GradedHom), TransportError> {
    let re = gr.component(&gr.identity_degree()).expect("identity component is always supported");
    let label = format!("IdentityComponent({})", gr.label());
    let ring = subring_ring(gr, re, &label)?;
    let sub = GradedRing::trivial_over(&ring, gr.group().clone()).relabel(label);
    let inclusion = hom_build(&sub, gr, re.iter().collect())?;
    Ok((sub, inclusion))
}

/// `S⁻¹I`: the ideal of `S⁻¹R` generated by the image of `I`.
pub fn extend_to_localization(hom: &GradedHom, ideal: &Ideal) -> Ideal {
    let gens: Vec<Elem> = ideal.gens_or_members().iter().map(|&x| hom.apply(x)).collect();
    ideal_generated(hom.target().ring(), &gens)
}
