use crate::classify::{is_graded_strongly_1abs_primary, Flag};
use crate::grading::GradedRing;
use crate::ideals::Ideal;
use crate::transport::{
    enumerate_multiplicative_sets, extend_to_localization, graded_subring, hom_transport, identity_subring, localize,
    prime_subring, quotient, Direction, GradedHom,
};

use super::analysis::RingAnalysis;
use super::report::{CounterKind::*, ReportBuilder, VerificationReport};
use super::{Statement, VerifyError};

/// Largest multiplicative sets enumerated for localization checks.
pub const MULTIPLICATIVE_SET_LIMIT: usize = 8;

fn expect_strongly(
    rep: &mut ReportBuilder,
    ring: &GradedRing,
    ideal: &Ideal,
    detail: impl FnOnce() -> String,
    context: &[&Ideal],
) -> Result<(), VerifyError> {
    let v = is_graded_strongly_1abs_primary(ring, ideal)?;
    if !v.holds() {
        rep.fail_flag(ring, detail(), ideal, Flag::GradedStrongly1AbsPrimary, &v, context);
    }
    Ok(())
}

/// Proper graded subrings with their inclusions: `R_e` and the prime subring,
/// skipping any that is all of `R` and any duplicate.
fn proper_subrings(gr: &GradedRing) -> Result<Vec<(GradedRing, GradedHom)>, VerifyError> {
    let re = gr.component(&gr.identity_degree()).expect("identity component is supported").clone();
    let mut out: Vec<(GradedRing, GradedHom)> = Vec::new();
    let candidates = [
        graded_subring(gr, &re, &format!("IdentityComponent({})", gr.label()))?,
        prime_subring(gr)?,
    ];
    for (sub, inc) in candidates {
        let dup = out.iter().any(|(_, i)| i.image() == inc.image());
        if sub.size() < gr.size() && !dup {
            out.push((sub, inc));
        }
    }
    Ok(out)
}

/// Quotients by the nonzero proper graded ideals.
fn quotients(a: &RingAnalysis) -> Result<Vec<(usize, GradedRing, GradedHom)>, VerifyError> {
    let mut out = Vec::new();
    for (k, ideal) in a.proper.iter().enumerate() {
        if ideal.is_zero() {
            continue;
        }
        let (q, proj) = quotient(&a.gr, ideal)?;
        out.push((k, q, proj));
    }
    Ok(out)
}

pub(super) fn prop_3_1(a: &RingAnalysis) -> Result<VerificationReport, VerifyError> {
    let mut rep = ReportBuilder::new(Statement::Prop3_1, a.gr.label());
    rep.declare("epimorphisms R -> R/K", Scanned);
    rep.declare("monomorphisms S -> R", Scanned);
    rep.declare("image f(P), P strongly containing Ker f", Branch);
    rep.declare("preimage f^-1(K), K strongly", Branch);
    let strongly = a.strongly();
    for (_, q, proj) in quotients(a)? {
        rep.bump("epimorphisms R -> R/K");
        for &i in &strongly {
            let p = &a.proper[i];
            if !proj.kernel().is_subset(p) {
                continue;
            }
            rep.bump("image f(P), P strongly containing Ker f");
            let fp = hom_transport(&proj, p, Direction::Image)?;
            expect_strongly(&mut rep, &q, &fp, || format!("image of a strongly ideal in {} is not strongly", q.label()), &[])?;
        }
    }
    for (sub, inc) in proper_subrings(&a.gr)? {
        rep.bump("monomorphisms S -> R");
        for &i in &strongly {
            rep.bump("preimage f^-1(K), K strongly");
            let pre = hom_transport(&inc, &a.proper[i], Direction::Preimage)?;
            expect_strongly(&mut rep, &sub, &pre, || format!("preimage in {} is not strongly", sub.label()), &[])?;
        }
    }
    Ok(rep.finish())
}

pub(super) fn cor_3_2(a: &RingAnalysis) -> Result<VerificationReport, VerifyError> {
    let mut rep = ReportBuilder::new(Statement::Cor3_2, a.gr.label());
    rep.declare("P/K in R/K, nonzero K in P strongly", Branch);
    rep.declare("P meet S in a proper graded subring S", Branch);
    let strongly = a.strongly();
    for (k, q, proj) in quotients(a)? {
        for &i in &strongly {
            let p = &a.proper[i];
            if !a.proper[k].is_subset(p) {
                continue;
            }
            rep.bump("P/K in R/K, nonzero K in P strongly");
            let pk = hom_transport(&proj, p, Direction::Image)?;
            expect_strongly(&mut rep, &q, &pk, || "P/K is not strongly".to_string(), &[])?;
        }
    }
    for (sub, inc) in proper_subrings(&a.gr)? {
        for &i in &strongly {
            rep.bump("P meet S in a proper graded subring S");
            let meet = hom_transport(&inc, &a.proper[i], Direction::Preimage)?;
            expect_strongly(&mut rep, &sub, &meet, || format!("P meet S is not strongly in {}", sub.label()), &[])?;
        }
    }
    Ok(rep.finish())
}

pub(super) fn cor_re(a: &RingAnalysis) -> Result<VerificationReport, VerifyError> {
    let mut rep = ReportBuilder::new(Statement::CorRe, a.gr.label());
    rep.declare("strongly P, R_e a proper subring", Branch);
    rep.declare("strongly P, R_e = R", Scanned);
    let (re, inc) = identity_subring(&a.gr)?;
    let whole = re.size() == a.gr.size();
    for i in a.strongly() {
        rep.bump(if whole { "strongly P, R_e = R" } else { "strongly P, R_e a proper subring" });
        let pe = hom_transport(&inc, &a.proper[i], Direction::Preimage)?;
        expect_strongly(&mut rep, &re, &pe, || "P meet R_e is not strongly in R_e".to_string(), &[])?;
    }
    if whole {
        rep.note("R_e is all of R; instances are counted as scanned only");
    }
    Ok(rep.finish())
}

pub(super) fn prop_3_3(a: &RingAnalysis) -> Result<VerificationReport, VerifyError> {
    let mut rep = ReportBuilder::new(Statement::Prop3_3, a.gr.label());
    rep.declare("multiplicative sets of units only", Scanned);
    rep.declare("multiplicative sets with a nonunit", Scanned);
    rep.declare("denominators sent to units", Scanned);
    rep.declare("pairs (P strongly, S) with P meet S empty, S units only", Branch);
    rep.declare("pairs (P strongly, S) with P meet S empty, S with a nonunit", DeskVacuous);
    let r = a.gr.ring();
    let strongly = a.strongly();
    for s in enumerate_multiplicative_sets(&a.gr, MULTIPLICATIVE_SET_LIMIT) {
        let units_only = s.elements().iter().all(|x| r.is_unit(x));
        rep.bump(if units_only {
            "multiplicative sets of units only"
        } else {
            "multiplicative sets with a nonunit"
        });
        let (loc, hom) = localize(&a.gr, &s)?;
        for t in s.elements().iter() {
            rep.bump("denominators sent to units");
            if !loc.ring().is_unit(hom.apply(t)) {
                rep.fail(&a.gr, format!("{} is not inverted in {}", a.gr.name(t), loc.label()), &[], &[t], None);
            }
        }
        for &i in &strongly {
            let p = &a.proper[i];
            if !p.members().is_disjoint(s.elements()) {
                continue;
            }
            rep.bump(if units_only {
                "pairs (P strongly, S) with P meet S empty, S units only"
            } else {
                "pairs (P strongly, S) with P meet S empty, S with a nonunit"
            });
            let ext = extend_to_localization(&hom, p);
            if !ext.is_proper() {
                rep.fail(&loc, "S^-1 P is not proper", &[p, &ext], &[], None);
                continue;
            }
            expect_strongly(&mut rep, &loc, &ext, || format!("S^-1 P is not strongly in {}", loc.label()), &[])?;
        }
    }
    rep.note(
        "a finite ring with a strongly ideal is graded local with nilpotent homogeneous nonunits, \
         so only sets of units avoid 0 there",
    );
    Ok(rep.finish())
}
