//! Runs every structural check on every corpus instance.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{corpus_fingerprint, CorpusSpec, Instance, RNG_ALGORITHM};
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::greens::{
    compose_relations, greens_restriction_check, greens_structure, is_stable, regular_witness,
    GreensStructure, Relation,
};
use crate::ideals::{
    enumerate_ideals, kernel, minimal_ideal_equivalences, swelling_on_set, KernelReport,
    IDEAL_ENUMERATION_LIMIT,
};
use crate::limits::Limits;
use crate::semigroup::FiniteSemigroup;
use crate::simple::{
    counting_bound, enumerate_subsemigroups, is_completely_simple, rees_decompose,
    subsemigroup_of_group_check,
};
use crate::subset::{Role, SubsetHandle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    IdempotentExists,
    KernelIsUniqueMinimalIdeal,
    MinimalIdealEquivalences,
    CancellativeIffGroup,
    MonoidWithOneIdempotentIsGroup,
    GroupSubsemigroupsAreSubgroups,
    Swelling,
    DEqualsRlEqualsLr,
    HIsMeetOfLAndR,
    KernelReesRoundTrip,
    RegularSubsemigroupRestriction,
    SubsemigroupClassification,
    Stability,
    MonogenicHasOneIdempotent,
}

impl CheckName {
    pub const ALL: [CheckName; 14] = [
        CheckName::IdempotentExists,
        CheckName::KernelIsUniqueMinimalIdeal,
        CheckName::MinimalIdealEquivalences,
        CheckName::CancellativeIffGroup,
        CheckName::MonoidWithOneIdempotentIsGroup,
        CheckName::GroupSubsemigroupsAreSubgroups,
        CheckName::Swelling,
        CheckName::DEqualsRlEqualsLr,
        CheckName::HIsMeetOfLAndR,
        CheckName::KernelReesRoundTrip,
        CheckName::RegularSubsemigroupRestriction,
        CheckName::SubsemigroupClassification,
        CheckName::Stability,
        CheckName::MonogenicHasOneIdempotent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::IdempotentExists => "idempotent_exists",
            CheckName::KernelIsUniqueMinimalIdeal => "kernel_is_unique_minimal_ideal",
            CheckName::MinimalIdealEquivalences => "minimal_ideal_equivalences",
            CheckName::CancellativeIffGroup => "cancellative_iff_group",
            CheckName::MonoidWithOneIdempotentIsGroup => "monoid_with_one_idempotent_is_group",
            CheckName::GroupSubsemigroupsAreSubgroups => "group_subsemigroups_are_subgroups",
            CheckName::Swelling => "swelling",
            CheckName::DEqualsRlEqualsLr => "d_equals_rl_equals_lr",
            CheckName::HIsMeetOfLAndR => "h_is_meet_of_l_and_r",
            CheckName::KernelReesRoundTrip => "kernel_rees_round_trip",
            CheckName::RegularSubsemigroupRestriction => "regular_subsemigroup_restriction",
            CheckName::SubsemigroupClassification => "subsemigroup_classification",
            CheckName::Stability => "stability",
            CheckName::MonogenicHasOneIdempotent => "monogenic_has_one_idempotent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// Enough to reproduce a failure: the offending table, the elements
/// involved, and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub table: Vec<Vec<usize>>,
    pub elements: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: CheckName,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Why a check was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub name: Option<String>,
    pub descriptor: String,
    pub seed: Option<u64>,
    pub order: usize,
    pub fingerprint: String,
    pub checks: Vec<CheckResult>,
}

impl InstanceReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub rng: String,
    pub corpus_fingerprint: String,
    pub summary: Summary,
    /// Sorted by fingerprint, so the report does not depend on scheduling.
    pub instances: Vec<InstanceReport>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Size thresholds for the exhaustive parts of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest (sub)semigroup whose subsemigroups are enumerated.
    pub subsemigroup_cap: usize,
    /// Up to this order, swelling is checked on every subset.
    pub swelling_exhaustive_order: usize,
    /// Up to this order, every regular subsemigroup is a restriction candidate.
    pub restriction_enumeration_order: usize,
    /// Up to this order, `R∘L` and `L∘R` are also composed explicitly.
    pub composition_oracle_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            subsemigroup_cap: Limits::default().subsemigroup_cap,
            swelling_exhaustive_order: 4,
            restriction_enumeration_order: 8,
            composition_oracle_order: 16,
        }
    }
}

impl From<&Limits> for VerifyOptions {
    fn from(limits: &Limits) -> Self {
        VerifyOptions {
            subsemigroup_cap: limits.subsemigroup_cap,
            ..VerifyOptions::default()
        }
    }
}

/// Generates the corpus and verifies it.
pub fn verify_suite(spec: &CorpusSpec) -> Result<VerificationReport> {
    let instances = spec.resolve()?;
    Ok(verify_instances(
        &instances,
        &VerifyOptions::from(&spec.limits),
    ))
}

pub fn verify_instances(instances: &[Instance], options: &VerifyOptions) -> VerificationReport {
    let mut reports: Vec<InstanceReport> = instances
        .par_iter()
        .map(|inst| {
            let s = &inst.semigroup;
            InstanceReport {
                name: s.name().map(str::to_string),
                descriptor: inst.descriptor.clone(),
                seed: inst.seed,
                order: s.order(),
                fingerprint: s.fingerprint(),
                checks: verify_semigroup(s, options),
            }
        })
        .collect();
    reports.sort_by(|a, b| {
        a.fingerprint
            .cmp(&b.fingerprint)
            .then_with(|| a.descriptor.cmp(&b.descriptor))
            .then_with(|| a.name.cmp(&b.name))
    });
    let mut summary = Summary {
        instances: reports.len(),
        ..Summary::default()
    };
    for c in reports.iter().flat_map(|r| &r.checks) {
        summary.checks += 1;
        match c.status {
            CheckStatus::Pass => summary.passed += 1,
            CheckStatus::Fail => summary.failed += 1,
            CheckStatus::Skip => summary.skipped += 1,
        }
    }
    VerificationReport {
        rng: RNG_ALGORITHM.to_string(),
        corpus_fingerprint: corpus_fingerprint(instances.iter().map(|i| &i.semigroup)),
        summary,
        instances: reports,
    }
}

/// Outcome of one check before it is tagged with its name.
enum Outcome {
    Pass,
    Fail(Vec<usize>, String),
    Skip(String),
}

fn fail(elements: Vec<usize>, detail: impl Into<String>) -> Outcome {
    Outcome::Fail(elements, detail.into())
}

struct Context<'a> {
    s: &'a FiniteSemigroup,
    options: &'a VerifyOptions,
    greens: GreensStructure,
    kernel: KernelReport,
    idempotents: Vec<usize>,
}

pub fn verify_semigroup(s: &FiniteSemigroup, options: &VerifyOptions) -> Vec<CheckResult> {
    let cx = Context {
        s,
        options,
        greens: greens_structure(s),
        kernel: kernel(s),
        idempotents: s.idempotents().members().to_vec(),
    };
    CheckName::ALL
        .iter()
        .map(|&check| {
            let outcome = match check {
                CheckName::IdempotentExists => idempotent_exists(&cx),
                CheckName::KernelIsUniqueMinimalIdeal => kernel_unique(&cx),
                CheckName::MinimalIdealEquivalences => minimal_equivalences(&cx),
                CheckName::CancellativeIffGroup => cancellative_iff_group(&cx),
                CheckName::MonoidWithOneIdempotentIsGroup => monoid_one_idempotent(&cx),
                CheckName::GroupSubsemigroupsAreSubgroups => group_subsemigroups(&cx),
                CheckName::Swelling => swelling(&cx),
                CheckName::DEqualsRlEqualsLr => d_compositions(&cx),
                CheckName::HIsMeetOfLAndR => h_meet(&cx),
                CheckName::KernelReesRoundTrip => kernel_round_trip(&cx),
                CheckName::RegularSubsemigroupRestriction => restriction(&cx),
                CheckName::SubsemigroupClassification => classification(&cx),
                CheckName::Stability => stability(&cx),
                CheckName::MonogenicHasOneIdempotent => monogenic(&cx),
            };
            let (status, witness, note) = match outcome {
                Outcome::Pass => (CheckStatus::Pass, None, None),
                Outcome::Skip(why) => (CheckStatus::Skip, None, Some(why)),
                Outcome::Fail(elements, detail) => (
                    CheckStatus::Fail,
                    Some(Witness {
                        table: s.rows(),
                        elements,
                        detail,
                    }),
                    None,
                ),
            };
            CheckResult {
                check,
                status,
                witness,
                note,
            }
        })
        .collect()
}

fn idempotent_exists(cx: &Context) -> Outcome {
    if cx.idempotents.is_empty() {
        fail(vec![], "no idempotent")
    } else {
        Outcome::Pass
    }
}

fn kernel_unique(cx: &Context) -> Outcome {
    let k = &cx.kernel.kernel;
    if let Some(v) = cx.kernel.violations.first() {
        return fail(k.members().to_vec(), v.clone());
    }
    if cx.s.order() <= IDEAL_ENUMERATION_LIMIT {
        let kset = k.to_set();
        let ideals = enumerate_ideals(cx.s, IDEAL_ENUMERATION_LIMIT).unwrap_or_default();
        if let Some(i) = ideals.iter().find(|i| !kset.is_subset(i)) {
            return fail(i.to_vec(), "an ideal does not contain the kernel");
        }
    }
    Outcome::Pass
}

fn minimal_equivalences(cx: &Context) -> Outcome {
    let kset = cx.kernel.kernel.to_set();
    for &e in &cx.idempotents {
        let v = match minimal_ideal_equivalences(cx.s, e) {
            Ok(v) => v,
            Err(err) => return fail(vec![e], err.to_string()),
        };
        if v.common() != Some(kset.contains(e)) {
            return fail(vec![e], format!("verdict flags {:?}", v.flags()));
        }
    }
    Outcome::Pass
}

fn cancellative_iff_group(cx: &Context) -> Outcome {
    let c = cx.s.cancellativity();
    if (c.left && c.right) == cx.s.is_group() {
        Outcome::Pass
    } else {
        fail(
            vec![],
            format!(
                "cancellative = {}, group = {}",
                c.left && c.right,
                cx.s.is_group()
            ),
        )
    }
}

fn monoid_one_idempotent(cx: &Context) -> Outcome {
    match cx.s.is_monoid() {
        Some(id) if cx.idempotents.len() == 1 && !cx.s.is_group() => {
            fail(vec![id], "monoid with a single idempotent is not a group")
        }
        _ => Outcome::Pass,
    }
}

/// Distinct H-classes containing an idempotent.
fn group_h_classes(cx: &Context) -> Vec<SubsetHandle> {
    let mut out: Vec<SubsetHandle> = Vec::new();
    for &e in &cx.idempotents {
        let h = cx.greens.h_class_handle(e);
        if !out.contains(&h) {
            out.push(h);
        }
    }
    out
}

fn group_subsemigroups(cx: &Context) -> Outcome {
    let mut checked = 0;
    for h in group_h_classes(cx) {
        if h.len() > cx.options.subsemigroup_cap {
            continue;
        }
        let Ok((g, members)) = cx.s.induced(h.members()) else {
            return fail(h.members().to_vec(), "group H-class is not closed");
        };
        if !g.is_group() {
            return fail(
                h.members().to_vec(),
                "H-class of an idempotent is not a group",
            );
        }
        let subs = match enumerate_subsemigroups(&g, cx.options.subsemigroup_cap) {
            Ok(subs) => subs,
            Err(e) => return fail(h.members().to_vec(), e.to_string()),
        };
        for t in &subs {
            if subsemigroup_of_group_check(&g, t) != Ok(true) {
                let elements = t.members().iter().map(|&x| members[x]).collect();
                return fail(
                    elements,
                    "subsemigroup of a group H-class is not a subgroup",
                );
            }
        }
        checked += 1;
    }
    if checked == 0 {
        Outcome::Skip("every group H-class exceeds the subsemigroup cap".into())
    } else {
        Outcome::Pass
    }
}

fn swelling(cx: &Context) -> Outcome {
    let n = cx.s.order();
    let mut candidates: Vec<ElementSet> = Vec::new();
    if n <= cx.options.swelling_exhaustive_order {
        for mask in 1u64..1 << n {
            candidates.push(ElementSet::from_elements(
                n,
                (0..n).filter(|i| mask & (1 << i) != 0),
            ));
        }
    } else {
        candidates.push(ElementSet::full(n));
        candidates.push(cx.kernel.kernel.to_set());
        candidates.extend(cx.s.elements().map(|x| cx.s.principal_right(x)));
    }
    for a in &candidates {
        for t in a.iter() {
            if !swelling_on_set(cx.s, a, t).holds() {
                let mut elements = a.to_vec();
                elements.push(t);
                return fail(elements, format!("A ⊆ tA but A ≠ tA for t = {t}"));
            }
        }
    }
    Outcome::Pass
}

fn d_compositions(cx: &Context) -> Outcome {
    let g = &cx.greens;
    if !g.compositions_agree() {
        return fail(vec![], "R∘L or L∘R differs from D");
    }
    if g.classes(Relation::J) != g.classes(Relation::D) {
        return fail(vec![], "J differs from D");
    }
    let n = cx.s.order();
    if n <= cx.options.composition_oracle_order {
        let (l, r, d) = (
            g.classes(Relation::L),
            g.classes(Relation::R),
            g.classes(Relation::D),
        );
        let rl = compose_relations(r, l);
        let lr = compose_relations(l, r);
        for x in 0..n {
            for y in 0..n {
                let dxy = d[x] == d[y];
                if rl[x][y] != dxy || lr[x][y] != dxy {
                    return fail(vec![x, y], "explicit composition disagrees with D");
                }
            }
        }
    }
    Outcome::Pass
}

fn h_meet(cx: &Context) -> Outcome {
    match cx.greens.invariant_violations().into_iter().next() {
        Some(v) => fail(vec![], v),
        None => Outcome::Pass,
    }
}

fn kernel_round_trip(cx: &Context) -> Outcome {
    let kmembers = cx.kernel.kernel.members();
    let Ok((k, members)) = cx.s.induced(kmembers) else {
        return fail(kmembers.to_vec(), "kernel is not a subsemigroup");
    };
    if !is_completely_simple(&k) {
        return fail(kmembers.to_vec(), "kernel is not completely simple");
    }
    let local: Vec<usize> = k.elements().filter(|&x| k.is_idempotent(x)).collect();
    let mut first = None;
    for &e in &local {
        let d = match rees_decompose(&k, Some(e)) {
            Ok(d) => d,
            Err(err) => return fail(vec![members[e]], err.to_string()),
        };
        if !d.round_trip_holds() {
            return fail(
                vec![members[e]],
                "phi and psi are not mutually inverse isomorphisms",
            );
        }
        match &first {
            None => first = Some(d),
            Some(f) => {
                if let Err(err) = d.isomorphism_to(f, &k) {
                    return fail(
                        vec![members[f.base_idempotent], members[e]],
                        err.to_string(),
                    );
                }
            }
        }
    }
    Outcome::Pass
}

fn restriction(cx: &Context) -> Outcome {
    let s = cx.s;
    let n = s.order();
    let mut candidates: Vec<SubsetHandle> = vec![cx.kernel.kernel.clone()];
    candidates.extend(group_h_classes(cx).into_iter().take(8));
    if s.elements().all(|x| regular_witness(s, x).is_some()) {
        candidates.push(SubsetHandle::trusted(
            n,
            s.elements().collect(),
            Role::Subsemigroup,
        ));
    }
    if n <= cx.options.restriction_enumeration_order {
        if let Ok(subs) = enumerate_subsemigroups(s, cx.options.restriction_enumeration_order) {
            for t in subs {
                let regular = s
                    .induced(t.members())
                    .map(|(sub, _)| sub.elements().all(|x| regular_witness(&sub, x).is_some()))
                    .unwrap_or(false);
                if regular && !candidates.contains(&t) {
                    candidates.push(t);
                }
            }
        }
    }
    for t in &candidates {
        match greens_restriction_check(s, t) {
            Ok(r) if r.holds() => {}
            Ok(r) => {
                let v = &r.violations[0];
                return fail(
                    vec![v.a, v.b],
                    format!(
                        "{:?} inside {:?} differs from the parent relation",
                        v.relation,
                        t.members()
                    ),
                );
            }
            Err(e) => return fail(t.members().to_vec(), e.to_string()),
        }
    }
    Outcome::Pass
}

fn classification(cx: &Context) -> Outcome {
    let kmembers = cx.kernel.kernel.members();
    if kmembers.len() > cx.options.subsemigroup_cap {
        return Outcome::Skip(format!(
            "kernel of order {} exceeds the subsemigroup cap {}",
            kmembers.len(),
            cx.options.subsemigroup_cap
        ));
    }
    let Ok((k, _)) = cx.s.induced(kmembers) else {
        return fail(kmembers.to_vec(), "kernel is not a subsemigroup");
    };
    match counting_bound(&k, cx.options.subsemigroup_cap) {
        Ok(b) if b.holds() => Outcome::Pass,
        Ok(b) => fail(
            kmembers.to_vec(),
            format!(
                "{} subsemigroups exceed the bound {}",
                b.subsemigroups, b.bound
            ),
        ),
        Err(e) => fail(kmembers.to_vec(), e.to_string()),
    }
}

fn stability(cx: &Context) -> Outcome {
    let st = is_stable(cx.s, &cx.greens);
    if st.left && st.right {
        Outcome::Pass
    } else {
        let (a, x) = st.witness.unwrap_or((0, 0));
        fail(
            vec![a, x],
            format!("left stable = {}, right stable = {}", st.left, st.right),
        )
    }
}

fn monogenic(cx: &Context) -> Outcome {
    for x in cx.s.elements() {
        let m = match cx.s.monogenic(x) {
            Ok(m) => m,
            Err(e) => return fail(vec![x], e.to_string()),
        };
        let count = m
            .subset
            .members()
            .iter()
            .filter(|&&y| cx.s.is_idempotent(y))
            .count();
        if count != 1 {
            return fail(vec![x], format!("<{x}> has {count} idempotents"));
        }
    }
    Outcome::Pass
}
