use proptest::prelude::*;

use gradedring::classify::{classify_ideal, is_graded_strongly_1abs_primary};
use gradedring::ideals::{enumerate_graded_ideals, graded_radical, ideal_generated};
use gradedring::transport::{hom_transport, quotient, Direction};
use gradedring::verifier::{default_corpus, verify_corpus, Statement};
use gradedring::{build_ring, Elem, GradedRing, RingSpec, RingSpecDocument};

fn cyclic(n: u32) -> GradedRing {
    GradedRing::trivial(&build_ring(&RingSpec::Cyclic(n)).unwrap())
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Product of the distinct primes dividing `d`; `Grad(dZ/n)` is its multiples when `d | n`.
fn squarefree_kernel(d: u32) -> u32 {
    (2..=d).filter(|p| d % p == 0 && (2..*p).all(|q| p % q != 0)).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclic_ideals_are_divisor_multiples(n in 2u32..60) {
        let gr = cyclic(n);
        let lattice = enumerate_graded_ideals(&gr).unwrap();
        prop_assert_eq!(lattice.len(), divisors(n).len());
        for d in divisors(n) {
            let expect: Vec<u32> = (0..n).filter(|x| x % d == 0).collect();
            prop_assert!(lattice.iter().any(|i| i.elements().iter().map(|e| e.0).collect::<Vec<_>>() == expect));
        }
    }

    #[test]
    fn radical_matches_integer_oracle(n in 2u32..60, k in 0usize..12) {
        let gr = cyclic(n);
        let divs = divisors(n);
        let d = divs[k % divs.len()];
        let ideal = ideal_generated(gr.ring(), &[Elem(d % n)]);
        let rad = graded_radical(&gr, &ideal).unwrap();
        let g = squarefree_kernel(d);
        let expect: Vec<u32> = (0..n).filter(|x| x % g == 0).collect();
        prop_assert_eq!(rad.elements().iter().map(|e| e.0).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn implication_chain_holds_everywhere(n in 2u32..48) {
        let gr = cyclic(n);
        for p in enumerate_graded_ideals(&gr).unwrap().iter().filter(|p| p.is_proper()) {
            prop_assert!(classify_ideal(&gr, p).unwrap().implication_chain_holds());
        }
    }

    #[test]
    fn strongly_exists_iff_prime_power(n in 2u32..80) {
        let gr = cyclic(n);
        let exists = enumerate_graded_ideals(&gr)
            .unwrap()
            .iter()
            .filter(|p| p.is_proper())
            .any(|p| is_graded_strongly_1abs_primary(&gr, p).unwrap().holds());
        let primes: Vec<u32> = (2..=n).filter(|p| n % p == 0 && (2..*p).all(|q| p % q != 0)).collect();
        prop_assert_eq!(exists, primes.len() == 1);
    }

    #[test]
    fn quotient_preimage_contains_kernel(n in 2u32..40, k in 0usize..10) {
        let gr = cyclic(n);
        let lattice = enumerate_graded_ideals(&gr).unwrap();
        let kernel = &lattice[k % lattice.len()];
        prop_assume!(kernel.is_proper());
        let (q, proj) = quotient(&gr, kernel).unwrap();
        prop_assert_eq!(q.size() as usize * kernel.len(), n as usize);
        for j in enumerate_graded_ideals(&q).unwrap() {
            let pre = hom_transport(&proj, &j, Direction::Preimage).unwrap();
            prop_assert!(kernel.is_subset(&pre));
            let back = hom_transport(&proj, &pre, Direction::Image).unwrap();
            prop_assert_eq!(back.members(), j.members());
        }
    }
}

#[test]
fn gauss_rings_satisfy_axioms() {
    for n in [2, 3, 4, 5, 9] {
        build_ring(&RingSpec::GaussMod(n)).unwrap().verify_axioms().unwrap();
    }
}

#[test]
fn corpus_reports_are_deterministic() {
    let corpus = default_corpus().unwrap();
    let a = verify_corpus(&Statement::ALL, &corpus, (2, 30)).unwrap();
    let b = verify_corpus(&Statement::ALL, &corpus, (2, 30)).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    for r in &a {
        for w in &r.witnesses {
            assert!(w.recheck.as_ref().is_none_or(|c| c.reproduces()));
        }
    }
}

#[test]
fn documents_match_direct_construction() {
    let doc = RingSpecDocument::parse("ring = { gauss_mod = 9 }\ngrading = \"standard\"").unwrap().build().unwrap();
    let direct = GradedRing::standard(&build_ring(&RingSpec::GaussMod(9)).unwrap()).unwrap();
    assert_eq!(doc.graded.size(), direct.size());
    assert_eq!(doc.graded.homogeneous_elements().len(), direct.homogeneous_elements().len());
    assert_eq!(
        enumerate_graded_ideals(&doc.graded).unwrap().len(),
        enumerate_graded_ideals(&direct).unwrap().len()
    );
}
