use crate::elemset::Elem;
use crate::finring::{build_ring, RingSpec};
use crate::grading::GradedRing;
use crate::ideals::ideal_generated;
use crate::transport::{localize, product, quotient, MultiplicativeSet};

use super::VerifyError;

/// Rings and ring pairs that statements are instantiated over.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub rings: Vec<GradedRing>,
    pub pairs: Vec<(GradedRing, GradedRing)>,
}

impl Corpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, gr: GradedRing) {
        self.rings.push(gr);
    }

    pub fn push_pair(&mut self, a: GradedRing, b: GradedRing) {
        self.pairs.push((a, b));
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty() && self.pairs.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.rings.iter().map(|r| r.label().to_string()).collect()
    }
}

pub const DEFAULT_CYCLIC: [u32; 9] = [4, 6, 8, 9, 12, 16, 25, 27, 36];
pub const DEFAULT_GAUSS: [u32; 4] = [2, 3, 4, 9];

fn ring(spec: RingSpec) -> Result<crate::finring::FinRing, VerifyError> {
    build_ring(&spec).map_err(|e| VerifyError::Construction(e.to_string()))
}

fn trivial(n: u32) -> Result<GradedRing, VerifyError> {
    Ok(GradedRing::trivial(&ring(RingSpec::Cyclic(n))?))
}

fn standard(spec: RingSpec) -> Result<GradedRing, VerifyError> {
    GradedRing::standard(&ring(spec)?).map_err(|e| VerifyError::Construction(e.to_string()))
}

fn poly(p: u32, modulus: &[i64]) -> RingSpec {
    RingSpec::PolyQuotient {
        p,
        modulus: modulus.to_vec(),
    }
}

/// The fixed default corpus, in a stable order.
pub fn default_corpus() -> Result<Corpus, VerifyError> {
    let mut c = Corpus::new();
    for n in DEFAULT_CYCLIC {
        c.push(trivial(n)?);
    }
    for n in DEFAULT_GAUSS {
        c.push(standard(RingSpec::GaussMod(n))?);
    }
    // graded fields that are not fields
    c.push(standard(poly(3, &[-1, 0, 1]))?);
    c.push(standard(poly(2, &[-1, 0, 1]))?);
    // Z-graded truncated polynomial rings
    c.push(standard(poly(2, &[0, 0, 0, 1]))?);
    c.push(standard(poly(3, &[0, 0, 1]))?);

    let (c4, c9) = (trivial(4)?, trivial(9)?);
    let g2 = standard(RingSpec::GaussMod(2))?;
    let c4x9 = product(&c4, &c9)?;
    c.push(c4x9.clone());
    c.push(product(&g2, &g2)?);
    c.push_pair(c4, c9);
    c.push_pair(g2.clone(), g2);

    let g4 = standard(RingSpec::GaussMod(4))?;
    let two = ideal_generated(g4.ring(), &[g4.ring().from_int(2)]);
    c.push(quotient(&g4, &two)?.0);

    let c12 = trivial(12)?;
    let s = MultiplicativeSet::generated(&c12, &[Elem(3)])?;
    c.push(localize(&c12, &s)?.0);
    let c36 = trivial(36)?;
    let s = MultiplicativeSet::generated(&c36, &[Elem(4)])?;
    c.push(localize(&c36, &s)?.0);
    let one_zero = c4x9.parse_element("(1, 0)").map_err(|e| VerifyError::Construction(e.to_string()))?;
    let s = MultiplicativeSet::generated(&c4x9, &[one_zero])?;
    c.push(localize(&c4x9, &s)?.0);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_valid_and_ordered() {
        let c = default_corpus().unwrap();
        let labels = c.labels();
        assert_eq!(labels[0], "Cyclic(4)");
        assert!(labels.contains(&"Localize(Cyclic(12), {1, 3, 9})".to_string()), "{labels:?}");
        assert_eq!(c.pairs.len(), 2);
        for gr in &c.rings {
            gr.ring().verify_axioms().unwrap();
        }
        let loc = c.rings.iter().find(|g| g.label().starts_with("Localize(Cyclic(12)")).unwrap();
        assert_eq!(loc.size(), 4);
    }
}
