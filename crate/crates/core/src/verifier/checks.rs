use rayon::prelude::*;

use crate::classify::{
    is_graded_strongly_1abs_primary, strongly_1abs_ideal_form_with, Flag, LatticeProducts, Verdict, Witness,
};
use crate::finring::{build_ring, RingSpec};
use crate::grading::GradedRing;
use crate::ideals::{
    colon, combine, enumerate_graded_ideals, graded_radical, ideal_generated, is_graded_ideal, Combine, Ideal,
};
use crate::transport::product;

use super::analysis::RingAnalysis;
use super::report::{CounterKind::*, ReportBuilder, VerificationReport};
use super::{Statement, VerifyError};

/// Largest proper-ideal count for which the ideal-form scan is run.
pub const IDEAL_FORM_LATTICE_LIMIT: usize = 64;

fn builder(st: Statement, a: &RingAnalysis) -> ReportBuilder {
    ReportBuilder::new(st, a.gr.label())
}

fn strongly(a: &RingAnalysis, i: usize) -> bool {
    a.flag(i, Flag::GradedStrongly1AbsPrimary)
}

fn product_of(a: &RingAnalysis, i: &Ideal, j: &Ideal) -> Ideal {
    combine(a.gr.ring(), i, j, Combine::Product).expect("ideals of one ring")
}

pub(super) fn prop_1(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop1, a);
    rep.declare("pairs of graded ideals", Branch);
    let r = a.gr.ring();
    let n = a.lattice.len();
    for i in 0..n {
        for j in i..n {
            rep.bump("pairs of graded ideals");
            for (op, name) in [
                (Combine::Sum, "I + J"),
                (Combine::Product, "IJ"),
                (Combine::Intersection, "I meet J"),
            ] {
                let (x, y) = (&a.lattice[i], &a.lattice[j]);
                let c = combine(r, x, y, op).expect("ideals of one ring");
                if !is_graded_ideal(&a.gr, &c).map(|g| g.is_graded()).unwrap_or(false) {
                    rep.fail(&a.gr, format!("{name} is not graded"), &[x, y, &c], &[], None);
                }
            }
        }
    }
    rep.finish()
}

pub(super) fn grad_is_graded(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::GradIsGraded, a);
    rep.declare("graded ideals", Branch);
    for i in &a.lattice {
        rep.bump("graded ideals");
        match graded_radical(&a.gr, i) {
            Ok(rad) if i.is_subset(&rad) => {
                if !is_graded_ideal(&a.gr, &rad).map(|g| g.is_graded()).unwrap_or(false) {
                    rep.fail(&a.gr, "Grad(I) is not graded", &[i, &rad], &[], None);
                }
            }
            Ok(rad) => rep.fail(&a.gr, "Grad(I) does not contain I", &[i, &rad], &[], None),
            Err(e) => rep.fail(&a.gr, format!("Grad(I) is not an ideal: {e}"), &[i], &[], None),
        }
    }
    rep.finish()
}

pub(super) fn lemma_2(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Lemma2, a);
    rep.declare("pairs (P, K) of graded ideals", Branch);
    let r = a.gr.ring();
    for p in &a.lattice {
        for k in &a.lattice {
            rep.bump("pairs (P, K) of graded ideals");
            match colon(r, p, k) {
                Ok(c) if is_graded_ideal(&a.gr, &c).map(|g| g.is_graded()).unwrap_or(false) => {}
                Ok(c) => rep.fail(&a.gr, "(P:K) is not graded", &[p, k, &c], &[], None),
                Err(e) => rep.fail(&a.gr, format!("(P:K) is not an ideal: {e}"), &[p, k], &[], None),
            }
        }
    }
    rep.finish()
}

pub(super) fn thm_2_2(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Thm2_2, a);
    rep.declare("proper graded ideals", Scanned);
    rep.declare("strongly, via 1abs with Grad(P) = Grad(0) only", Branch);
    rep.declare("strongly, via both conditions", Branch);
    rep.declare("not strongly, neither condition", Branch);
    rep.declare("strongly, via local with X = Grad(P), X^2 in P only", DeskVacuous);
    let x_sq = a.the_maximal().map(|x| (x, product_of(a, x, x)));
    for (i, p) in a.proper.iter().enumerate() {
        rep.bump("proper graded ideals");
        let rad = a.radical(i);
        let c1 = a.flag(i, Flag::Graded1AbsPrimary) && rad == &a.grad_zero;
        let c2 = x_sq.as_ref().is_some_and(|(x, x2)| *x == rad && x2.is_subset(p));
        let s = strongly(a, i);
        let branch = match (s, c1, c2) {
            (true, true, false) => "strongly, via 1abs with Grad(P) = Grad(0) only",
            (true, false, true) => "strongly, via local with X = Grad(P), X^2 in P only",
            (true, true, true) => "strongly, via both conditions",
            (false, false, false) => "not strongly, neither condition",
            _ => {
                let detail = format!("strongly = {s}, but condition (1) = {c1} and condition (2) = {c2}");
                let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
                rep.fail_flag(&a.gr, detail, p, Flag::GradedStrongly1AbsPrimary, &v, &[rad]);
                continue;
            }
        };
        rep.bump(branch);
    }
    rep.note("in a finite graded local ring Grad(0) = X, so the local condition never holds alone");
    rep.finish()
}

fn flag_verdict(a: &RingAnalysis, i: usize, f: Flag) -> Verdict {
    match a.reports[i].witnesses.get(&f) {
        Some(w) => Verdict::Fails(w.clone()),
        None => Verdict::Holds,
    }
}

pub(super) fn remark_2_3(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Remark2_3, a);
    rep.declare("strongly ideals of a graded local ring", Scanned);
    rep.declare("strongly ideals whose radical is not graded maximal", DeskVacuous);
    rep.declare("graded local domains that are not graded fields", DeskVacuous);
    if a.local.is_graded_local {
        let p = &a.predicates;
        if p.graded_domain && !p.graded_field {
            rep.bump("graded local domains that are not graded fields");
        }
        for i in a.strongly() {
            rep.bump("strongly ideals of a graded local ring");
            if a.flag_of(a.radical(i), Flag::GradedMaximal) != Some(true) {
                rep.bump("strongly ideals whose radical is not graded maximal");
            }
        }
    } else {
        rep.note("not graded local");
    }
    rep.note("a finite graded domain is a graded field, so no finite ring exhibits this");
    rep.finish()
}

pub(super) fn cor_2_4(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Cor2_4, a);
    rep.declare("graded primes", Scanned);
    rep.declare("strongly, P = Grad(0)", Branch);
    rep.declare("strongly, R local with maximal P", Branch);
    rep.declare("not strongly, neither condition", Branch);
    rep.declare("local with maximal P, P != Grad(0)", DeskVacuous);
    for i in a.indices_with(Flag::GradedPrime) {
        let p = &a.proper[i];
        rep.bump("graded primes");
        let b1 = *p == a.grad_zero;
        let b2 = a.the_maximal() == Some(p);
        let s = strongly(a, i);
        if s != (b1 || b2) {
            let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
            let detail = format!("strongly = {s}, but P = Grad(0) is {b1} and local-with-maximal-P is {b2}");
            rep.fail_flag(&a.gr, detail, p, Flag::GradedStrongly1AbsPrimary, &v, &[]);
            continue;
        }
        if b1 {
            rep.bump("strongly, P = Grad(0)");
        }
        if b2 {
            rep.bump("strongly, R local with maximal P");
            if !b1 {
                rep.bump("local with maximal P, P != Grad(0)");
            }
        }
        if !s {
            rep.bump("not strongly, neither condition");
        }
    }
    rep.note("in a finite graded local ring Grad(0) is the maximal ideal, so the second condition never holds alone");
    rep.finish()
}

pub(super) fn lemma_grad_prime(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::LemmaGradPrime, a);
    rep.declare("1abs ideals", Branch);
    for i in a.indices_with(Flag::Graded1AbsPrimary) {
        rep.bump("1abs ideals");
        let rad = a.radical(i);
        if a.flag_of(rad, Flag::GradedPrime) != Some(true) {
            let v = crate::classify::is_graded_prime(&a.gr, rad).unwrap_or(Verdict::Holds);
            rep.fail_flag(&a.gr, "Grad(P) is not graded prime", rad, Flag::GradedPrime, &v, &[&a.proper[i]]);
        }
    }
    rep.finish()
}

pub(super) fn thm_2_6(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Thm2_6, a);
    rep.declare("strongly ideals", Scanned);
    rep.declare("exists, Grad(0) graded prime or R graded local", Branch);
    rep.declare("none, Grad(0) not graded prime and R not graded local", Branch);
    let strongly = a.strongly();
    rep.add("strongly ideals", strongly.len() as u64);
    let exists = !strongly.is_empty();
    let prime = a.grad_zero_is_prime();
    let local = a.local.is_graded_local;
    let zero_desc = format!("Grad(0) = {}", a.grad_zero.describe());
    let prime_desc = if prime {
        format!("{zero_desc} graded prime")
    } else {
        let w = a
            .position(&a.grad_zero)
            .and_then(|i| a.reports[i].witnesses.get(&Flag::GradedPrime))
            .map(|w| format!(" (witness {})", w.render(&a.gr)))
            .unwrap_or_default();
        format!("{zero_desc} not graded prime{w}")
    };
    let local_desc = match a.the_maximal() {
        Some(x) => format!("graded local with X = {}", x.describe()),
        None => format!("not graded local ({} graded maximal ideals)", a.local.graded_maximal_ideals.len()),
    };
    let exists_desc = if exists {
        format!("{} strongly ideals exist", strongly.len())
    } else {
        "no strongly ideal exists".to_string()
    };
    rep.note(format!("{exists_desc}; {prime_desc}; {local_desc}"));
    if exists != (prime || local) {
        let detail = format!("existence = {exists}, Grad(0) prime = {prime}, local = {local}");
        rep.fail(&a.gr, detail, &[&a.grad_zero], &[], None);
    } else if exists {
        rep.bump("exists, Grad(0) graded prime or R graded local");
    } else {
        rep.bump("none, Grad(0) not graded prime and R not graded local");
    }
    rep.finish()
}

/// Trial-division oracle for `n = p^m`, independent of any ring computation.
pub fn is_prime_power(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Whether trivially graded `Z/n` has a strongly ideal, by full lattice scan.
pub fn cyclic_has_strongly_ideal(n: u32) -> Result<bool, VerifyError> {
    let ring = build_ring(&RingSpec::Cyclic(n)).map_err(|e| VerifyError::Construction(e.to_string()))?;
    let gr = GradedRing::trivial(&ring);
    for p in enumerate_graded_ideals(&gr)?.iter().filter(|p| p.is_proper()) {
        if is_graded_strongly_1abs_primary(&gr, p)?.holds() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub(super) fn cor_2_7(lo: u32, hi: u32) -> Result<VerificationReport, VerifyError> {
    let mut rep = ReportBuilder::new(Statement::Cor2_7, format!("Cyclic(n), n = {lo}..{hi}"));
    rep.declare("moduli", Scanned);
    rep.declare("prime powers with a strongly ideal", Branch);
    rep.declare("non-prime-powers without a strongly ideal", Branch);
    let rows: Vec<(u32, bool)> = (lo..=hi)
        .into_par_iter()
        .map(|n| cyclic_has_strongly_ideal(n).map(|e| (n, e)))
        .collect::<Result<_, _>>()?;
    for (n, exists) in rows {
        rep.bump("moduli");
        let pp = is_prime_power(n);
        rep.note(format!(
            "n = {n:>4}: {}, {}",
            if exists { "strongly ideal exists" } else { "no strongly ideal" },
            if pp { "prime power" } else { "not a prime power" }
        ));
        match (exists, pp) {
            (true, true) => rep.bump("prime powers with a strongly ideal"),
            (false, false) => rep.bump("non-prime-powers without a strongly ideal"),
            _ => {
                let ring = build_ring(&RingSpec::Cyclic(n)).map_err(|e| VerifyError::Construction(e.to_string()))?;
                let gr = GradedRing::trivial(&ring);
                rep.fail(&gr, format!("existence = {exists} but prime power = {pp}"), &[], &[], None);
            }
        }
    }
    Ok(rep.finish())
}

pub(super) fn cor_2_8(a: &GradedRing, b: &GradedRing) -> Result<VerificationReport, VerifyError> {
    let p = product(a, b)?;
    let mut rep = ReportBuilder::new(Statement::Cor2_8, p.label());
    rep.declare("proper graded ideals of the product", Branch);
    for i in enumerate_graded_ideals(&p)?.iter().filter(|i| i.is_proper()) {
        rep.bump("proper graded ideals of the product");
        let v = is_graded_strongly_1abs_primary(&p, i)?;
        if v.holds() {
            rep.fail_flag(&p, "product ring has a strongly ideal", i, Flag::GradedStrongly1AbsPrimary, &v, &[]);
        }
    }
    Ok(rep.finish())
}

pub(super) fn prop_2_9(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_9, a);
    rep.declare("agree: strongly", Branch);
    rep.declare("agree: not strongly", Branch);
    if a.proper.len() > IDEAL_FORM_LATTICE_LIMIT {
        rep.note(format!(
            "skipped: {} proper graded ideals exceed the limit of {IDEAL_FORM_LATTICE_LIMIT}",
            a.proper.len()
        ));
        return rep.finish();
    }
    let table = LatticeProducts::new(&a.gr, &a.lattice);
    for (i, p) in a.proper.iter().enumerate() {
        let ideal_form = strongly_1abs_ideal_form_with(&a.gr, p, &table);
        let s = strongly(a, i);
        if ideal_form.holds() != s {
            let extra: Vec<&Ideal> = match ideal_form.witness() {
                Some(Witness::Ideals(is)) => is.iter().collect(),
                _ => Vec::new(),
            };
            let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
            let detail = format!("element form = {s}, ideal form = {}", ideal_form.holds());
            rep.fail_flag(&a.gr, detail, p, Flag::GradedStrongly1AbsPrimary, &v, &extra);
        } else if s {
            rep.bump("agree: strongly");
        } else {
            rep.bump("agree: not strongly");
        }
    }
    rep.finish()
}

pub(super) fn prop_2_10(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_10, a);
    rep.declare("pairs of strongly ideals", Branch);
    let s = a.strongly();
    for (n, &i) in s.iter().enumerate() {
        for &j in &s[n..] {
            rep.bump("pairs of strongly ideals");
            let (p, k) = (&a.proper[i], &a.proper[j]);
            let m = combine(a.gr.ring(), p, k, Combine::Intersection).expect("ideals of one ring");
            if a.flag_of(&m, Flag::GradedStrongly1AbsPrimary) != Some(true) {
                let v = is_graded_strongly_1abs_primary(&a.gr, &m).unwrap_or(Verdict::Holds);
                rep.fail_flag(&a.gr, "P meet K is not strongly", &m, Flag::GradedStrongly1AbsPrimary, &v, &[p, k]);
            }
        }
    }
    rep.finish()
}

pub(super) fn prop_2_11(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_11, a);
    rep.declare("principal ideals Ra, a nonunit homogeneous", Branch);
    rep.declare("proper graded ideals", Branch);
    if !a.predicates.every_homogeneous_nilpotent_or_unit {
        rep.note("hypothesis fails: some homogeneous element is neither nilpotent nor a unit");
        return rep.finish();
    }
    let r = a.gr.ring();
    for &x in a.gr.nonunit_homogeneous() {
        rep.bump("principal ideals Ra, a nonunit homogeneous");
        let ra = ideal_generated(r, &[x]);
        if a.flag_of(&ra, Flag::GradedStrongly1AbsPrimary) != Some(true) {
            let v = is_graded_strongly_1abs_primary(&a.gr, &ra).unwrap_or(Verdict::Holds);
            rep.fail_flag(&a.gr, "Ra is not strongly", &ra, Flag::GradedStrongly1AbsPrimary, &v, &[]);
        }
    }
    for (i, p) in a.proper.iter().enumerate() {
        rep.bump("proper graded ideals");
        if !strongly(a, i) {
            let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
            rep.fail_flag(&a.gr, "proper graded ideal is not strongly", p, Flag::GradedStrongly1AbsPrimary, &v, &[]);
        }
    }
    rep.finish()
}

pub(super) fn prop_2_12(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_12, a);
    rep.declare("graded primes", Scanned);
    rep.declare("every prime strongly, local with <= 1 non-maximal prime", Branch);
    rep.declare("some prime not strongly, condition fails", Branch);
    rep.declare("non-maximal graded primes", DeskVacuous);
    let primes = a.indices_with(Flag::GradedPrime);
    rep.add("graded primes", primes.len() as u64);
    let nm = a.non_maximal_primes();
    rep.add("non-maximal graded primes", nm.len() as u64);
    let lhs = primes.iter().all(|&i| strongly(a, i));
    let rhs = a.local.is_graded_local && nm.len() <= 1;
    match (lhs, rhs) {
        (true, true) => rep.bump("every prime strongly, local with <= 1 non-maximal prime"),
        (false, false) => rep.bump("some prime not strongly, condition fails"),
        _ => {
            let detail = format!("every prime strongly = {lhs}, local with <= 1 non-maximal prime = {rhs}");
            match primes.iter().find(|&&i| !strongly(a, i)) {
                Some(&i) => {
                    let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
                    rep.fail_flag(&a.gr, detail, &a.proper[i], Flag::GradedStrongly1AbsPrimary, &v, &[]);
                }
                None => rep.fail(&a.gr, detail, &[], &[], None),
            }
        }
    }
    rep.finish()
}

pub(super) fn prop_2_14(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_14, a);
    rep.declare("graded primary ideals", Scanned);
    rep.declare("every primary strongly, h(R) nilpotent-or-unit", Branch);
    rep.declare("some primary not strongly, neither condition", Branch);
    rep.declare("every primary strongly, via one non-maximal prime Grad(0)", DeskVacuous);
    let primary = a.indices_with(Flag::GradedPrimary);
    rep.add("graded primary ideals", primary.len() as u64);
    let lhs = primary.iter().all(|&i| strongly(a, i));
    let c1 = a.predicates.every_homogeneous_nilpotent_or_unit;
    let nm = a.non_maximal_primes();
    let c2 = match a.the_maximal() {
        Some(x) if nm.len() == 1 && a.proper[nm[0]] == a.grad_zero => {
            let x2 = product_of(a, x, x);
            primary
                .iter()
                .filter(|&&i| a.radical(i) == x)
                .all(|&i| x2.is_subset(&a.proper[i]))
        }
        _ => false,
    };
    match (lhs, c1 || c2) {
        (true, true) if c1 => rep.bump("every primary strongly, h(R) nilpotent-or-unit"),
        (true, true) => rep.bump("every primary strongly, via one non-maximal prime Grad(0)"),
        (false, false) => rep.bump("some primary not strongly, neither condition"),
        _ => {
            let detail = format!("every primary strongly = {lhs}, nilpotent-or-unit = {c1}, local condition = {c2}");
            match primary.iter().find(|&&i| !strongly(a, i)) {
                Some(&i) => {
                    let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
                    rep.fail_flag(&a.gr, detail, &a.proper[i], Flag::GradedStrongly1AbsPrimary, &v, &[]);
                }
                None => rep.fail(&a.gr, detail, &[], &[], None),
            }
        }
    }
    rep.finish()
}

pub(super) fn prop_2_17(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_17, a);
    rep.declare("strongly ideals", Scanned);
    rep.declare("{0} the only strongly ideal, graded field", Branch);
    rep.declare("other strongly ideals exist, neither condition", Branch);
    rep.declare("no strongly ideal at all, neither condition", Branch);
    rep.declare("{0} the only strongly ideal, graded domain not local", DeskVacuous);
    let s = a.strongly();
    rep.add("strongly ideals", s.len() as u64);
    let lhs = s.len() == 1 && a.proper[s[0]].is_zero();
    let p = &a.predicates;
    let field = p.graded_field;
    let domain_not_local = p.graded_domain && !a.local.is_graded_local;
    match (lhs, field || domain_not_local) {
        (true, true) if field => rep.bump("{0} the only strongly ideal, graded field"),
        (true, true) => rep.bump("{0} the only strongly ideal, graded domain not local"),
        (false, false) if s.is_empty() => rep.bump("no strongly ideal at all, neither condition"),
        (false, false) => rep.bump("other strongly ideals exist, neither condition"),
        _ => {
            let detail = format!(
                "only {{0}} strongly = {lhs}, graded field = {field}, graded domain not local = {domain_not_local}"
            );
            let ideals: Vec<&Ideal> = s.iter().map(|&i| &a.proper[i]).collect();
            rep.fail(&a.gr, detail, &ideals, &[], None);
        }
    }
    rep.finish()
}

pub(super) fn lemma_2_18(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Lemma2_18, a);
    rep.declare("pairs (P 1abs, K not in P)", Branch);
    let r = a.gr.ring();
    for i in a.indices_with(Flag::Graded1AbsPrimary) {
        let p = &a.proper[i];
        for k in a.proper.iter().filter(|k| !k.is_subset(p)) {
            rep.bump("pairs (P 1abs, K not in P)");
            let c = colon(r, p, k).expect("ideals of one ring");
            if a.flag_of(&c, Flag::GradedPrimary) != Some(true) {
                let v = crate::classify::is_graded_primary(&a.gr, &c).unwrap_or(Verdict::Holds);
                rep.fail_flag(&a.gr, "(P:K) is not graded primary", &c, Flag::GradedPrimary, &v, &[p, k]);
            }
        }
    }
    rep.finish()
}

pub(super) fn prop_2_19(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop2_19, a);
    rep.declare("pairs (P strongly, K not in Grad(P))", DeskVacuous);
    let r = a.gr.ring();
    for i in a.strongly() {
        let (p, rad) = (&a.proper[i], a.radical(i));
        for k in a.proper.iter().filter(|k| !k.is_subset(rad)) {
            rep.bump("pairs (P strongly, K not in Grad(P))");
            let c = colon(r, p, k).expect("ideals of one ring");
            if a.flag_of(&c, Flag::GradedStrongly1AbsPrimary) != Some(true) {
                let v = is_graded_strongly_1abs_primary(&a.gr, &c).unwrap_or(Verdict::Holds);
                rep.fail_flag(&a.gr, "(P:K) is not strongly", &c, Flag::GradedStrongly1AbsPrimary, &v, &[p, k]);
            }
        }
    }
    rep.note(
        "on a finite ring Grad(P) of a strongly P is the unique graded maximal ideal, \
         so every proper graded K lies inside it",
    );
    rep.finish()
}

pub(super) fn prop_3_4(a: &RingAnalysis) -> VerificationReport {
    let mut rep = builder(Statement::Prop3_4, a);
    rep.declare("proper graded ideals with Grad(P) = Grad(0)", Scanned);
    rep.declare("primary P with Grad(P) = Grad(0), strongly in R", Branch);
    let prime = a.grad_zero_is_prime();
    let zero = a.grad_zero.describe();
    rep.note(if prime {
        format!("Grad(0) = {zero} is graded prime, so R[X] is asserted to have a strongly ideal")
    } else {
        format!("Grad(0) = {zero} is not graded prime, so R[X] is asserted to have no strongly ideal")
    });
    for (i, p) in a.proper.iter().enumerate() {
        if a.radical(i) != &a.grad_zero {
            continue;
        }
        rep.bump("proper graded ideals with Grad(P) = Grad(0)");
        if a.flag(i, Flag::GradedPrimary) {
            // P[X] strongly <=> P primary with Grad(P) = Grad(0), and P[X] strongly => P strongly
            rep.bump("primary P with Grad(P) = Grad(0), strongly in R");
            if !strongly(a, i) {
                let v = flag_verdict(a, i, Flag::GradedStrongly1AbsPrimary);
                rep.fail_flag(&a.gr, "primary with Grad(P) = Grad(0) but not strongly in R", p, Flag::GradedStrongly1AbsPrimary, &v, &[]);
            }
        }
    }
    rep.note("conclusions about R[X] are asserted, not independently verified: R[X] is infinite");
    rep.note("P + XR[X] is asserted never to be strongly; not independently verified");
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_oracle() {
        let pp: Vec<u32> = (2..=32).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert!(!is_prime_power(1) && !is_prime_power(0));
    }

    #[test]
    fn cyclic_existence_small() {
        assert!(cyclic_has_strongly_ideal(9).unwrap());
        assert!(!cyclic_has_strongly_ideal(6).unwrap());
        assert!(!cyclic_has_strongly_ideal(12).unwrap());
    }
}
