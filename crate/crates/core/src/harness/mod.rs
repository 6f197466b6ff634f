//! Curated corpus with expected results, exhaustive subgroup sweeps, and the
//! per-group analysis shared by both.
//!
//! Every evaluated group runs the same pipeline: defect, classification, the
//! defect 0 criterion, the defect 1 statements (defect 1 only), the prime
//! order trichotomy (all non-trivial elements of prime order) and the
//! quotient shape check (solvable with prime-power element orders). A failed
//! check or a classification inconsistency is a violation.

mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::classify::{classify, recognize_only, Form};
use crate::deficiency::{
    defect, defect_one_properties, defect_zero_criterion, prime_order_trichotomy,
    prime_power_quotients, quotient_check_applies, DeficiencyReport, QuotientReport,
};
use crate::error::{Error, Result};
use crate::families::{symmetric, GroupSpec};
use crate::group::{ConjugacyClass, Group, Limits};

pub use report::ARTIFACT_VERSION;

/// What a corpus entry's defect must be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedDefect {
    Exactly(usize),
    /// Outside defect 0 and 1.
    AtLeast(usize),
}

impl ExpectedDefect {
    pub fn admits(self, j: usize) -> bool {
        match self {
            ExpectedDefect::Exactly(e) => j == e,
            ExpectedDefect::AtLeast(e) => j >= e,
        }
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// A form listed in the defect 0 / defect 1 classification, or a group
    /// known to lie outside it.
    Classification,
    /// Computed independently by brute force.
    BruteForce,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Classification => "classification",
            Basis::BruteForce => "brute force",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub defect: ExpectedDefect,
    pub form: Option<Form>,
    /// Exact set of element orders over the deficient classes.
    pub deficient_orders: Option<BTreeSet<u64>>,
    pub basis: Basis,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.defect {
            ExpectedDefect::Exactly(j) => write!(f, "defect {j}")?,
            ExpectedDefect::AtLeast(j) => write!(f, "defect >= {j}")?,
        }
        if let Some(form) = &self.form {
            write!(f, ", {form}")?;
        }
        if let Some(orders) = &self.deficient_orders {
            let list: Vec<String> = orders.iter().map(u64::to_string).collect();
            write!(f, ", deficient orders {{{}}}", list.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub expected: Expectation,
}

fn entry(name: &str, spec: &str, defect: ExpectedDefect, form: Option<Form>, basis: Basis) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        spec: spec.parse().expect("corpus specs are valid"),
        expected: Expectation {
            defect,
            form,
            deficient_orders: None,
            basis,
        },
    }
}

/// The fixed corpus, in report order.
pub fn corpus() -> Vec<CorpusEntry> {
    use Basis::*;
    use ExpectedDefect::*;
    let d0 = |name: &str, spec: &str, form| entry(name, spec, Exactly(0), Some(form), Classification);
    let d1 = |name: &str, spec: &str, form| entry(name, spec, Exactly(1), Some(form), Classification);
    let mut entries = vec![
        d0("C1", "cyclic:1", Form::Trivial),
        d0("C2", "cyclic:2", Form::Cp { p: 2 }),
        d0("C3", "cyclic:3", Form::Cp { p: 3 }),
        d0("C5", "cyclic:5", Form::Cp { p: 5 }),
        d0("C7", "cyclic:7", Form::Cp { p: 7 }),
        d0("C13", "cyclic:13", Form::Cp { p: 13 }),
        d0("S3", "frobenius:3,2", Form::FrobeniusPq { p: 3, q: 2 }),
        d0("C7:C3", "frobenius:7,3", Form::FrobeniusPq { p: 7, q: 3 }),
        d0("C11:C5", "frobenius:11,5", Form::FrobeniusPq { p: 11, q: 5 }),
        d0("C13:C3", "frobenius:13,3", Form::FrobeniusPq { p: 13, q: 3 }),
        d1("C4", "cyclic:4", Form::C4),
        d1("Q8", "genq:8", Form::Q8),
        d1("A4", "mersenne:2", Form::MersenneFrobenius { s: 2, q: 3 }),
        d1("E8:C7", "mersenne:3", Form::MersenneFrobenius { s: 3, q: 7 }),
        d1("C5:C4", "c4frob:5", Form::CqC4 { q: 5 }),
        d1("C13:C4", "c4frob:13", Form::CqC4 { q: 13 }),
        d1("D18", "dihedral:9", Form::D18),
        d1("A5", "alt:5", Form::A5),
        d1("PSL2_5", "psl2:5", Form::A5),
        d1("PSL2_7", "psl2:7", Form::Psl27),
        entry("C6", "cyclic:6", Exactly(3), None, BruteForce),
        entry("C9", "cyclic:9", Exactly(2), None, BruteForce),
        entry("S4", "sym:4", Exactly(2), None, BruteForce),
        entry("Q16", "genq:16", AtLeast(2), None, BruteForce),
        entry("PSL2_8", "psl2:8", AtLeast(2), None, Classification),
        entry("PSL2_9", "psl2:9", AtLeast(2), None, Classification),
        entry("PSL2_17", "psl2:17", AtLeast(2), None, Classification),
    ];
    for e in &mut entries {
        if e.name == "PSL2_9" {
            e.expected.deficient_orders = Some(BTreeSet::from([2, 3]));
        }
    }
    entries
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    NotApplicable,
    /// Applicable but above the quotient cap.
    NotEvaluated,
}

impl CheckOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Fail => "fail",
            CheckOutcome::NotApplicable => "n/a",
            CheckOutcome::NotEvaluated => "not evaluated",
        }
    }
}

impl From<bool> for CheckOutcome {
    fn from(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }
}

/// Results of the property suites, keyed as in the reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub prop_a1: CheckOutcome,
    pub prop_a2: CheckOutcome,
    pub theorem_n: CheckOutcome,
    pub theorem_gh: CheckOutcome,
}

impl Checks {
    pub fn named(&self) -> [(&'static str, CheckOutcome); 4] {
        [
            ("prop_A1", self.prop_a1),
            ("prop_A2", self.prop_a2),
            ("theorem_N", self.theorem_n),
            ("theorem_GH", self.theorem_gh),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub group: String,
    pub check: String,
    pub detail: String,
}

/// One analyzed group.
#[derive(Debug, Clone)]
pub struct EntryResult {
    pub name: String,
    pub deficiency: DeficiencyReport,
    /// `None` when classification raised an inconsistency.
    pub form: Option<Form>,
    pub checks: Checks,
    pub expected: Option<Expectation>,
    /// `None` without an expectation.
    pub matches: Option<bool>,
    pub violations: Vec<Violation>,
}

impl EntryResult {
    pub fn order(&self) -> usize {
        self.deficiency.group_order
    }

    pub fn defect(&self) -> usize {
        self.deficiency.defect
    }

    pub fn verdict(&self) -> String {
        self.form.map_or_else(|| "inconsistent".to_string(), |f| f.to_string())
    }
}

/// Runs the full pipeline on one group.
pub fn evaluate(name: &str, group: &Group, expected: Option<&Expectation>) -> Result<EntryResult> {
    let deficiency = defect(group);
    let mut violations = Vec::new();
    let mut violation = |check: &str, detail: String| {
        violations.push(Violation {
            group: name.to_string(),
            check: check.to_string(),
            detail,
        })
    };

    let form = match classify(group) {
        Ok(v) => Some(v.form),
        Err(Error::Inconsistency(msg)) => {
            violation("classify", msg);
            None
        }
        Err(e) => return Err(e),
    };

    let prop_a1 = CheckOutcome::from(defect_zero_criterion(group));
    if prop_a1 == CheckOutcome::Fail {
        violation("prop_A1", format!("defect {} disagrees with the criterion", deficiency.defect));
    }

    let prop_a2 = if deficiency.defect == 1 {
        let report = defect_one_properties(group)?;
        for s in report.statements.iter().filter(|s| s.outcome == crate::deficiency::Outcome::Fail) {
            violation("prop_A2", format!("statement {}: {}", s.number, s.detail));
        }
        report.all_pass().into()
    } else {
        CheckOutcome::NotApplicable
    };

    let theorem_n = if deficiency.all_prime_order() {
        let report = prime_order_trichotomy(group)?;
        if !report.holds {
            violation("theorem_N", format!("{:?}: {}", report.branch, report.detail));
        }
        report.holds.into()
    } else {
        CheckOutcome::NotApplicable
    };

    let theorem_gh = if quotient_check_applies(group) {
        match prime_power_quotients(group)? {
            QuotientReport::NotEvaluated { .. } => CheckOutcome::NotEvaluated,
            QuotientReport::Evaluated(cases) => {
                for c in cases.iter().filter(|c| !c.holds()) {
                    violation(
                        "theorem_GH",
                        format!(
                            "r = {}: |G/O_r| = {}, shape {:?}, two primes {}, metabelian {}",
                            c.r, c.quotient_order, c.shape, c.at_most_two_primes, c.metabelian
                        ),
                    );
                }
                cases.iter().all(|c| c.holds()).into()
            }
        }
    } else {
        CheckOutcome::NotApplicable
    };

    let matches = expected.map(|exp| {
        let mut ok = true;
        let mut mismatch = |what: &str, detail: String| {
            ok = false;
            violation(what, detail);
        };
        if !exp.defect.admits(deficiency.defect) {
            mismatch("expected", format!("expected {exp}, got defect {}", deficiency.defect));
        }
        if let Some(want) = &exp.form {
            if form != Some(*want) {
                mismatch("expected", format!("expected form {want}, got {:?}", form.map(|f| f.to_string())));
            }
            if !recognize_only(group, want) {
                mismatch("expected", format!("structure does not match {want}"));
            }
        }
        if let Some(orders) = &exp.deficient_orders {
            let got = deficiency.deficient_element_orders();
            if &got != orders {
                mismatch("expected", format!("deficient orders {got:?}, expected {orders:?}"));
            }
        }
        ok
    });
    let checks = Checks {
        prop_a1,
        prop_a2,
        theorem_n,
        theorem_gh,
    };
    Ok(EntryResult {
        name: name.to_string(),
        deficiency,
        form,
        checks,
        expected: expected.cloned(),
        matches,
        violations,
    })
}

/// Outcome of verifying a list of corpus entries.
#[derive(Debug, Clone)]
pub struct CorpusReport {
    pub entries: Vec<EntryResult>,
    pub runtime_ms: u64,
}

impl CorpusReport {
    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.entries.iter().flat_map(|e| &e.violations)
    }

    pub fn mismatches(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.matches == Some(false) || !e.violations.is_empty())
            .count()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }
}

/// Builds and evaluates every entry concurrently; results keep input order.
pub fn verify_entries(entries: &[CorpusEntry], limits: Limits) -> Result<CorpusReport> {
    let start = Instant::now();
    let results: Result<Vec<EntryResult>> = entries
        .par_iter()
        .map(|e| {
            let group = e.spec.build_with(limits)?;
            evaluate(&e.name, &group, Some(&e.expected))
        })
        .collect();
    Ok(CorpusReport {
        entries: results?,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn verify_corpus(limits: Limits) -> Result<CorpusReport> {
    verify_entries(&corpus(), limits)
}

/// One subgroup of the swept symmetric group.
#[derive(Debug, Clone)]
pub struct SweptSubgroup {
    pub order: usize,
    pub generators: Vec<String>,
    pub defect: usize,
    pub verdict: String,
    pub checks: Checks,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    /// `"S_n"`.
    pub universe: String,
    pub subgroup_count: usize,
    pub defect_histogram: BTreeMap<usize, usize>,
    /// Subgroups counted by `(order, defect, verdict)`.
    pub aggregate: BTreeMap<(usize, usize, String), usize>,
    /// Per check, the number of subgroups where it was evaluated.
    pub checks_run: BTreeMap<&'static str, usize>,
    pub subgroups: Vec<SweptSubgroup>,
    pub violations: Vec<Violation>,
    pub runtime_ms: u64,
}

/// Evaluates every subgroup of `S_n`, `1 <= n <= 6`, ordered by subgroup
/// order and then by element set.
pub fn sweep(n: usize, limits: Limits) -> Result<SweepReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("sweep needs 1 <= n <= 6, got {n}")));
    }
    let start = Instant::now();
    let universe = symmetric(n)?.with_limits(limits);
    let lattice = universe.subgroup_lattice()?;
    let results: Result<Vec<(SweptSubgroup, Vec<Violation>)>> = lattice
        .par_iter()
        .enumerate()
        .map(|(i, record)| {
            let gens: Vec<_> = record
                .generators
                .iter()
                .map(|&g| universe.element(g as usize).clone())
                .collect();
            let group = Group::generate_with(n, &gens, limits)?;
            let generators: Vec<String> = gens.iter().map(ToString::to_string).collect();
            let name = format!("S_{n}#{i} <{}>", generators.join(", "));
            let result = evaluate(&name, &group, None)?;
            let swept = SweptSubgroup {
                order: group.order(),
                generators,
                defect: result.defect(),
                verdict: result.verdict(),
                checks: result.checks,
            };
            Ok((swept, result.violations))
        })
        .collect();
    let mut report = SweepReport {
        universe: format!("S_{n}"),
        subgroup_count: lattice.len(),
        defect_histogram: BTreeMap::new(),
        aggregate: BTreeMap::new(),
        checks_run: BTreeMap::new(),
        subgroups: Vec::new(),
        violations: Vec::new(),
        runtime_ms: 0,
    };
    for (swept, violations) in results? {
        *report.defect_histogram.entry(swept.defect).or_default() += 1;
        *report
            .aggregate
            .entry((swept.order, swept.defect, swept.verdict.clone()))
            .or_default() += 1;
        for (key, outcome) in swept.checks.named() {
            let run = matches!(outcome, CheckOutcome::Pass | CheckOutcome::Fail);
            *report.checks_run.entry(key).or_default() += run as usize;
        }
        report.subgroups.push(swept);
        report.violations.extend(violations);
    }
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Full analysis of one described group.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub spec: String,
    pub result: EntryResult,
    pub order_profile: BTreeMap<u64, usize>,
    /// Every class in canonical order, with whether it is deficient.
    pub classes: Vec<(ConjugacyClass, bool)>,
    pub runtime_ms: u64,
}

pub fn analyze(spec: &GroupSpec, limits: Limits) -> Result<Analysis> {
    let start = Instant::now();
    let group = spec.build_with(limits)?;
    let result = evaluate(&spec.to_string(), &group, None)?;
    Ok(Analysis {
        spec: spec.to_string(),
        order_profile: group.element_order_profile(),
        classes: group
            .conjugacy_classes()
            .iter()
            .map(|c| (c.clone(), result.deficiency.deficient_classes.contains(c)))
            .collect(),
        result,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_contains_required_entries() {
        let names: Vec<String> = corpus().into_iter().map(|e| e.name).collect();
        for required in [
            "C1", "C2", "C7", "S3", "C7:C3", "C11:C5", "C4", "Q8", "A4", "E8:C7", "C5:C4",
            "C13:C4", "D18", "A5", "PSL2_7", "C6", "C9", "S4", "Q16", "PSL2_8", "PSL2_9",
            "PSL2_17",
        ] {
            assert!(names.iter().any(|n| n == required), "{required}");
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        assert_eq!(unique.len(), names.len());
    }

    #[test]
    fn small_corpus_entries_match() {
        let entries: Vec<CorpusEntry> = corpus()
            .into_iter()
            .filter(|e| ["C1", "Q8", "A5", "S4", "C9", "D18"].contains(&e.name.as_str()))
            .collect();
        let report = verify_entries(&entries, Limits::default()).unwrap();
        assert!(report.passed(), "{:?}", report.violations().collect::<Vec<_>>());
        let a5 = report.entries.iter().find(|e| e.name == "A5").unwrap();
        assert_eq!(a5.checks.prop_a2, CheckOutcome::Pass);
        assert_eq!(a5.checks.theorem_gh, CheckOutcome::NotApplicable);
    }

    #[test]
    fn injected_fault_is_reported() {
        let mut entries: Vec<CorpusEntry> =
            corpus().into_iter().filter(|e| e.name == "Q8" || e.name == "C7").collect();
        entries[1].expected.defect = ExpectedDefect::Exactly(0);
        let report = verify_entries(&entries, Limits::default()).unwrap();
        assert_eq!(report.mismatches(), 1);
        assert!(!report.passed());
        let v: Vec<&Violation> = report.violations().collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].group, "Q8");
    }

    #[test]
    fn sweep_small_symmetric_groups() {
        let counts = [(1, 1), (2, 2), (3, 6), (4, 30)];
        for (n, count) in counts {
            let report = sweep(n, Limits::default()).unwrap();
            assert_eq!(report.subgroup_count, count, "S_{n}");
            assert!(report.violations.is_empty(), "{:?}", report.violations);
            assert_eq!(report.defect_histogram.values().sum::<usize>(), count);
        }
        assert!(sweep(7, Limits::default()).is_err());
    }

    #[test]
    fn analyze_examples() {
        let s5 = analyze(&"gens:(1 2 3 4 5),(1 2)@5".parse().unwrap(), Limits::default()).unwrap();
        assert_eq!(s5.result.order(), 120);
        assert!(matches!(s5.result.form, Some(Form::OutsideD0D1 { .. })));
        let m3 = analyze(&"mersenne:3".parse().unwrap(), Limits::default()).unwrap();
        assert_eq!((m3.result.order(), m3.result.defect()), (56, 1));
        assert_eq!(m3.result.form, Some(Form::MersenneFrobenius { s: 3, q: 7 }));
        let c1 = analyze(&"cyclic:1".parse().unwrap(), Limits::default()).unwrap();
        assert_eq!(c1.result.form, Some(Form::Trivial));
    }
}
