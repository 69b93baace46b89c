//! Theorem and property suites over a corpus of analysed groups.
//!
//! Every check produces a [`CheckResult`]; a failing check is data carrying
//! a witness, never an error. Results are ordered by suite and then by group
//! name, and carry no timing unless a [`Clock`] is supplied, so a report is
//! reproducible byte for byte.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::analysis::GroupAnalysis;
use crate::arith;
use crate::catalog::{self, verification_corpus};
use crate::chartable::{character_table, inflation_rows, Restriction};
use crate::classes::ConjugacyData;
use crate::codegree::{build_gamma, codegrees};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::normal::{derived_subgroup, subgroup_is_abelian, subgroup_is_nilpotent};
use crate::structure::is_isomorphic_with;

/// Largest cyclic order covered by the totient count check.
pub const TOTIENT_CHECK_MAX: usize = 500;
/// Largest exponent searched by the power-of-four equation check.
pub const DIOPHANTINE_MAX_N: u32 = 20;

/// Groups whose character graph has no triangles, with the sorted
/// nonprincipal codegrees each must have.
pub const TRIANGLE_FREE_REFERENCE: [(&str, &[u64]); 6] = [
    ("C2", &[2]),
    ("C3", &[3, 3]),
    ("S3", &[2, 3]),
    ("D10", &[2, 5, 5]),
    ("A4", &[3, 3, 4]),
    ("F(7,3)", &[3, 3, 7, 7]),
];

pub const CORPUS_LIMITATIONS: &str = "finite corpus: every group of order at most 15 (capped by max_order), plus \
family instances (cyclic, abelian, dihedral, dicyclic, symmetric, alternating, Frobenius \
p:q, extraspecial p^3, coprime direct products) up to max_order, deduplicated by \
isomorphism; groups outside this list (e.g. most groups of order 16, 24, 32, 48, 64, 72, \
80, 96) are not covered";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Table,
    PrimePowers,
    Connectivity,
    TriangleFree,
    Lemmas,
    Tables,
    Diophantine,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Table,
        Suite::PrimePowers,
        Suite::Connectivity,
        Suite::TriangleFree,
        Suite::Lemmas,
        Suite::Tables,
        Suite::Diophantine,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::PrimePowers => "prime-powers",
            Suite::Connectivity => "connectivity",
            Suite::TriangleFree => "triangle-free",
            Suite::Lemmas => "lemmas",
            Suite::Tables => "tables",
            Suite::Diophantine => "diophantine",
        }
    }

    pub fn parse(id: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.id() == id)
    }

    /// Whether the suite reads the group corpus.
    pub fn needs_corpus(self) -> bool {
        !matches!(self, Suite::Table | Suite::Diophantine)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Int(i64),
    List(Vec<i64>),
    Text(String),
    Bool(bool),
}

impl From<u64> for WitnessValue {
    fn from(v: u64) -> Self {
        WitnessValue::Int(v as i64)
    }
}

impl From<usize> for WitnessValue {
    fn from(v: usize) -> Self {
        WitnessValue::Int(v as i64)
    }
}

impl From<bool> for WitnessValue {
    fn from(v: bool) -> Self {
        WitnessValue::Bool(v)
    }
}

impl From<&str> for WitnessValue {
    fn from(v: &str) -> Self {
        WitnessValue::Text(v.to_string())
    }
}

impl From<String> for WitnessValue {
    fn from(v: String) -> Self {
        WitnessValue::Text(v)
    }
}

impl From<&[u64]> for WitnessValue {
    fn from(v: &[u64]) -> Self {
        WitnessValue::List(v.iter().map(|&x| x as i64).collect())
    }
}

impl From<Vec<u64>> for WitnessValue {
    fn from(v: Vec<u64>) -> Self {
        v.as_slice().into()
    }
}

impl From<Vec<usize>> for WitnessValue {
    fn from(v: Vec<usize>) -> Self {
        WitnessValue::List(v.into_iter().map(|x| x as i64).collect())
    }
}

pub type Witness = Vec<(&'static str, WitnessValue)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub check: &'static str,
    pub group: String,
    pub verdict: Verdict,
    pub witness: Witness,
    pub millis: Option<u64>,
}

impl CheckResult {
    fn new(suite: Suite, check: &'static str, group: &str, pass: bool, witness: Witness) -> Self {
        CheckResult {
            suite,
            check,
            group: group.to_string(),
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            witness,
            millis: None,
        }
    }

    fn skipped(suite: Suite, check: &'static str, group: &str, reason: &str) -> Self {
        CheckResult {
            suite,
            check,
            group: group.to_string(),
            verdict: Verdict::Skipped,
            witness: vec![("reason", reason.into())],
            millis: None,
        }
    }

    fn error(suite: Suite, check: &'static str, group: &str, err: &Error) -> Self {
        CheckResult::new(suite, check, group, false, vec![("error", format!("{err}").into())])
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Monotonic wall clock in milliseconds; supplied by the caller so the core
/// stays free of platform time.
pub trait Clock {
    fn now_millis(&self) -> Option<u64>;
}

/// A clock that never reports, leaving `millis` empty.
pub struct NoClock;

impl Clock for NoClock {
    fn now_millis(&self) -> Option<u64> {
        None
    }
}

fn timed(clock: &dyn Clock, f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = clock.now_millis();
    let mut out = f();
    if let (Some(start), Some(end)) = (start, clock.now_millis()) {
        let share = (end - start) / out.len().max(1) as u64;
        for r in &mut out {
            r.millis = Some(share);
        }
    }
    out
}

/// Analysed groups a suite runs over.
pub struct Corpus {
    pub max_order: usize,
    pub groups: Vec<GroupAnalysis>,
}

impl Corpus {
    /// The exhaustive small-order list merged with the family corpus.
    pub fn build(max_order: usize) -> Result<Self> {
        let entries = verification_corpus(max_order)?;
        let groups = entries
            .into_iter()
            .map(|e| {
                let g = e.build()?;
                GroupAnalysis::new(e.name, g)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus { max_order, groups })
    }

    pub fn from_groups(max_order: usize, groups: Vec<GroupAnalysis>) -> Self {
        Corpus { max_order, groups }
    }

    pub fn get(&self, name: &str) -> Option<&GroupAnalysis> {
        self.groups.iter().find(|g| g.name == name)
    }
}

/// Runs one suite; `corpus` may be `None` for suites that do not read it.
pub fn run_suite(suite: Suite, corpus: Option<&Corpus>, clock: &dyn Clock) -> Result<Vec<CheckResult>> {
    let need = || {
        corpus.ok_or_else(|| Error::InternalInconsistency(format!("suite {} needs a corpus", suite.id())))
    };
    let mut out = match suite {
        Suite::Table => timed(clock, suite_table),
        Suite::PrimePowers => suite_theorem_prime_powers(need()?, clock),
        Suite::Connectivity => suite_theorem_connectivity(need()?, clock),
        Suite::TriangleFree => suite_theorem_triangle_free(need()?, clock)?,
        Suite::Lemmas => suite_lemmas(need()?, clock),
        Suite::Tables => suite_tables(need()?, clock),
        Suite::Diophantine => timed(clock, || {
            let solutions = check_step7_diophantine(DIOPHANTINE_MAX_N);
            let pass = solutions == [(2, 2)];
            let flat: Vec<u64> = solutions.iter().flat_map(|&(n, y)| [n as u64, y]).collect();
            vec![CheckResult::new(
                Suite::Diophantine,
                "power_of_four_equation",
                "-",
                pass,
                vec![("max_n", (DIOPHANTINE_MAX_N as u64).into()), ("solutions", flat.into())],
            )]
        }),
    };
    out.sort_by(|a, b| a.group.cmp(&b.group));
    Ok(out)
}

/// Every suite, ordered by suite id and then group name.
pub fn run_all(corpus: &Corpus, clock: &dyn Clock) -> Result<Vec<CheckResult>> {
    let mut suites = Suite::ALL;
    suites.sort_by_key(|s| s.id());
    let mut out = Vec::new();
    for suite in suites {
        out.extend(run_suite(suite, Some(corpus), clock)?);
    }
    Ok(out)
}

fn build_named(name: &str) -> Result<GroupAnalysis> {
    let g = catalog::build(&catalog::parse_name(name)?)?;
    GroupAnalysis::new(name, g)
}

/// Nonprincipal codegree multisets of the reference groups.
pub fn suite_table() -> Vec<CheckResult> {
    TRIANGLE_FREE_REFERENCE
        .iter()
        .map(|&(name, expected)| match build_named(name) {
            Ok(a) => {
                let actual = a.nonprincipal_codegrees();
                CheckResult::new(
                    Suite::Table,
                    "codegree_table",
                    name,
                    actual == expected,
                    vec![("expected", expected.into()), ("actual", actual.into())],
                )
            }
            Err(e) => CheckResult::error(Suite::Table, "codegree_table", name, &e),
        })
        .collect()
}

const NONTRIVIAL_ONLY: &str = "statement assumes a nontrivial group";

pub fn suite_theorem_prime_powers(corpus: &Corpus, clock: &dyn Clock) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in &corpus.groups {
        out.extend(timed(clock, || {
            let check = "prime_power_codegrees";
            if a.order() == 1 {
                return vec![CheckResult::skipped(Suite::PrimePowers, check, &a.name, NONTRIVIAL_ONLY)];
            }
            let p = a.prime_power;
            let mut witness: Witness = vec![
                ("all_prime_powers", p.all_prime_powers.into()),
                ("rhs", p.rhs.into()),
            ];
            if !p.agree {
                witness.push(("codegrees", a.nonprincipal_codegrees().into()));
                witness.push(("prime_divisors", arith::prime_divisors(a.order() as u64).into()));
                witness.push(("frobenius", a.frobenius.is_some().into()));
                witness.push(("two_frobenius", a.two_frobenius.is_some().into()));
            }
            vec![CheckResult::new(Suite::PrimePowers, check, &a.name, p.agree, witness)]
        }));
    }
    out
}

pub fn suite_theorem_connectivity(corpus: &Corpus, clock: &dyn Clock) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in &corpus.groups {
        out.extend(timed(clock, || {
            let s = Suite::Connectivity;
            let name = a.name.as_str();
            if a.order() == 1 {
                return ["component_bound", "diameter_bound", "disconnected_iff_frobenius", "component_count_agreement"]
                    .into_iter()
                    .map(|c| CheckResult::skipped(s, c, name, NONTRIVIAL_ONLY))
                    .collect();
            }
            let gs = &a.gamma_stats;
            let components = gs.component_count;
            let mut results = vec![CheckResult::new(
                s,
                "component_bound",
                name,
                components <= 2,
                vec![("components", components.into())],
            )];
            results.push(match gs.diameter() {
                Some(d) => CheckResult::new(s, "diameter_bound", name, d <= 4, vec![("diameter", d.into())]),
                None => CheckResult::skipped(s, "diameter_bound", name, "character graph is disconnected"),
            });
            let disconnected = components > 1;
            let frob = a.frobenius.is_some();
            let two = a.two_frobenius.is_some();
            let mut witness: Witness = vec![
                ("disconnected", disconnected.into()),
                ("frobenius", frob.into()),
                ("two_frobenius", two.into()),
            ];
            if let Some(w) = &a.frobenius {
                witness.push(("kernel_order", w.kernel.order().into()));
                witness.push(("complement_order", w.complement.order().into()));
            }
            if let Some(w) = &a.two_frobenius {
                witness.push(("k_order", w.k.order().into()));
                witness.push(("l_order", w.l.order().into()));
            }
            results.push(CheckResult::new(s, "disconnected_iff_frobenius", name, disconnected == (frob || two), witness));
            let delta_components = a.delta_stats.component_count;
            results.push(CheckResult::new(
                s,
                "component_count_agreement",
                name,
                components == delta_components,
                vec![("gamma", components.into()), ("delta", delta_components.into())],
            ));
            results
        }));
    }
    out
}

pub fn suite_theorem_triangle_free(corpus: &Corpus, clock: &dyn Clock) -> Result<Vec<CheckResult>> {
    let references = TRIANGLE_FREE_REFERENCE
        .iter()
        .map(|&(name, _)| build_named(name))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (reference, &(name, expected)) in references.iter().zip(&TRIANGLE_FREE_REFERENCE) {
        out.extend(timed(clock, || {
            let actual = reference.nonprincipal_codegrees();
            let triangle_free = reference.is_triangle_free();
            vec![CheckResult::new(
                Suite::TriangleFree,
                "reference_triangle_free",
                name,
                triangle_free && actual == expected,
                vec![
                    ("triangle_free", triangle_free.into()),
                    ("expected", expected.into()),
                    ("actual", actual.into()),
                ],
            )]
        }));
    }
    for a in &corpus.groups {
        let result = timed(clock, || {
            let check = "triangle_free_classification";
            if a.order() == 1 {
                return vec![CheckResult::skipped(Suite::TriangleFree, check, &a.name, NONTRIVIAL_ONLY)];
            }
            if let Some(t) = a.gamma_stats.triangle {
                let codegrees: Vec<u64> = t.iter().map(|&v| a.gamma.codegrees[v]).collect();
                return vec![CheckResult::new(
                    Suite::TriangleFree,
                    check,
                    &a.name,
                    true,
                    vec![("triangle_codegrees", codegrees.into())],
                )];
            }
            let mut matched = None;
            for r in references.iter().filter(|r| r.order() == a.order()) {
                match is_isomorphic_with(&a.group, &a.classes, &r.group, &r.classes) {
                    Ok(true) => {
                        matched = Some(r.name.clone());
                        break;
                    }
                    Ok(false) => {}
                    Err(e) => return vec![CheckResult::error(Suite::TriangleFree, check, &a.name, &e)],
                }
            }
            let witness: Witness = match &matched {
                Some(n) => vec![("isomorphic_to", n.clone().into())],
                None => vec![
                    ("triangle_free", true.into()),
                    ("codegrees", a.nonprincipal_codegrees().into()),
                ],
            };
            vec![CheckResult::new(Suite::TriangleFree, check, &a.name, matched.is_some(), witness)]
        });
        out.extend(result);
    }
    Ok(out)
}

pub fn suite_tables(corpus: &Corpus, clock: &dyn Clock) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in &corpus.groups {
        out.extend(timed(clock, || {
            let t = &a.table;
            let orth = match t.verify_orthogonality() {
                Ok(()) => CheckResult::new(
                    Suite::Tables,
                    "orthogonality",
                    &a.name,
                    true,
                    vec![("characters", t.len().into()), ("conductor", (t.conductor() as u64).into())],
                ),
                Err(e) => CheckResult::error(Suite::Tables, "orthogonality", &a.name, &e),
            };
            let mut meet = a.group.whole();
            let mut bad_kernel = None;
            for row in 0..t.len() {
                let k = t.kernel(row, &a.classes);
                if !a.group.is_normal(&k) {
                    bad_kernel = Some(row);
                }
                meet = meet.intersection(&k);
            }
            let kernels = CheckResult::new(
                Suite::Tables,
                "kernels_normal",
                &a.name,
                bad_kernel.is_none() && meet.is_trivial(),
                match bad_kernel {
                    Some(row) => vec![("row", row.into())],
                    None => vec![("kernel_meet_order", meet.order().into())],
                },
            );
            vec![orth, kernels]
        }));
    }
    out
}

fn counts(values: &[u64]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for &v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

fn product_multiset(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().flat_map(|&x| b.iter().map(move |&y| x * y)).collect();
    out.sort_unstable();
    out
}

fn codegree_multiset_of(g: &FiniteGroup) -> Result<Vec<u64>> {
    let cd = ConjugacyData::new(g);
    let t = character_table(g, &cd)?;
    let mut v: Vec<u64> = codegrees(&t)?.into_iter().map(|r| r.codegree).collect();
    v.sort_unstable();
    Ok(v)
}

/// Quotients inflate into the group with unchanged codegrees, and the
/// quotient's character graph maps edge-preservingly into the group's.
pub fn check_quotient_subgraph(a: &GroupAnalysis) -> Result<Option<Witness>> {
    let vertex_of: BTreeMap<usize, usize> = a.gamma.rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for n in &a.normals.all {
        let q = a.group.quotient(n)?;
        let cd_q = ConjugacyData::new(&q.group);
        let t_q = character_table(&q.group, &cd_q)?;
        let rec_q = codegrees(&t_q)?;
        let Some(rows) = inflation_rows(&a.table, &a.classes, &q, &cd_q, &t_q) else {
            return Ok(Some(vec![("normal_order", n.order().into()), ("problem", "inflation missing".into())]));
        };
        let mut seen = rows.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != rows.len() {
            return Ok(Some(vec![("normal_order", n.order().into()), ("problem", "inflations coincide".into())]));
        }
        for (psi, &row) in rows.iter().enumerate() {
            if rec_q[psi].codegree != a.codegrees[row].codegree {
                return Ok(Some(vec![
                    ("normal_order", n.order().into()),
                    ("quotient_codegree", rec_q[psi].codegree.into()),
                    ("group_codegree", a.codegrees[row].codegree.into()),
                ]));
            }
        }
        let gamma_q = build_gamma(&rec_q);
        for (u, v) in gamma_q.graph.edges() {
            let (gu, gv) = (vertex_of[&rows[gamma_q.rows[u]]], vertex_of[&rows[gamma_q.rows[v]]]);
            if !a.gamma.graph.has_edge(gu, gv) {
                return Ok(Some(vec![
                    ("normal_order", n.order().into()),
                    ("missing_edge", vec![gamma_q.codegrees[u], gamma_q.codegrees[v]].into()),
                ]));
            }
        }
    }
    Ok(None)
}

/// `a(psi)` divides `a(chi)` for each constituent `psi` of `chi` restricted
/// to a normal subgroup.
pub fn check_constituent_divisibility(a: &GroupAnalysis) -> Result<Option<Witness>> {
    for n in &a.normals.all {
        let sub = a.group.subgroup_as_group(n);
        let cd_n = ConjugacyData::new(&sub.group);
        let t_n = character_table(&sub.group, &cd_n)?;
        let rec_n = codegrees(&t_n)?;
        let mut res = Restriction::new(&a.table, &a.classes, &sub, &cd_n, &t_n);
        for chi in 0..a.table.len() {
            for (psi, _) in res.constituents(chi)? {
                let (small, big) = (rec_n[psi].codegree, a.codegrees[chi].codegree);
                if big % small != 0 {
                    return Ok(Some(vec![
                        ("normal_order", n.order().into()),
                        ("character", chi.into()),
                        ("constituent_codegree", small.into()),
                        ("codegree", big.into()),
                    ]));
                }
            }
        }
    }
    Ok(None)
}

/// Sylow subgroup of a nilpotent group: the elements of `p`-power order.
fn sylow_of_nilpotent(g: &FiniteGroup, p: u64) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| arith::prime_power_base(g.element_order(x) as u64).map_or(g.element_order(x) == 1, |q| q == p))
        .collect();
    g.subgroup_generated(&members)
}

pub fn check_sylow_product(a: &GroupAnalysis) -> Result<Option<Witness>> {
    let mut expected = vec![1u64];
    for p in arith::prime_divisors(a.order() as u64) {
        let sylow = sylow_of_nilpotent(&a.group, p);
        let emb = a.group.subgroup_as_group(&sylow);
        expected = product_multiset(&expected, &codegree_multiset_of(&emb.group)?);
    }
    let actual = a.codegree_multiset();
    Ok((actual != expected).then(|| vec![("expected", expected.into()), ("actual", actual.into())]))
}

pub fn check_prime_divisor_coverage(a: &GroupAnalysis) -> Option<Witness> {
    let missing: Vec<u64> = arith::prime_divisors(a.order() as u64)
        .into_iter()
        .filter(|&p| a.codegrees.iter().all(|r| r.codegree % p != 0))
        .collect();
    (!missing.is_empty()).then(|| vec![("uncovered_primes", missing.into())])
}

/// `chi(g) = 0` whenever `p` divides `o(g)` but not `|G| / chi(1)`.
pub fn check_defect_zero_vanishing(a: &GroupAnalysis) -> Option<Witness> {
    let t = &a.table;
    let n = a.order() as u64;
    for row in 0..t.len() {
        let d = t.degree(row);
        for p in arith::prime_divisors(n) {
            if (n / d) % p == 0 {
                continue;
            }
            for c in 0..t.len() {
                if t.class_element_orders()[c] as u64 % p == 0 && !t.value(row, c).is_zero() {
                    return Some(vec![("character", row.into()), ("prime", p.into()), ("class", c.into())]);
                }
            }
        }
    }
    None
}

/// `d -> #{chi : a(chi) = d}` equals Euler's totient on every divisor.
pub fn check_cyclic_totient(n: usize) -> Result<Option<Witness>> {
    let g = catalog::build(&catalog::Recipe::Cyclic(n))?;
    let found = counts(&codegree_multiset_of(&g)?);
    for d in arith::divisors(n as u64) {
        let actual = found.get(&d).copied().unwrap_or(0);
        let expected = arith::totient(d) as usize;
        if actual != expected {
            return Ok(Some(vec![("divisor", d.into()), ("expected", expected.into()), ("actual", actual.into())]));
        }
    }
    if found.keys().any(|&d| n as u64 % d != 0) {
        return Ok(Some(vec![("problem", "codegree not dividing the order".into())]));
    }
    Ok(None)
}

/// Every maximal normal subgroup of a triangle-free group has index 2 or 3,
/// equals the derived subgroup, and is the only one.
pub fn check_maximal_normal_reduction(a: &GroupAnalysis) -> Option<Witness> {
    let derived = derived_subgroup(&a.group, &a.group.whole());
    let maximal = &a.normals.maximal;
    let indices: Vec<usize> = maximal.iter().map(|&i| a.order() / a.normals.all[i].order()).collect();
    let ok = maximal.len() == 1
        && matches!(indices[0], 2 | 3)
        && a.normals.all[maximal[0]] == derived;
    (!ok).then(|| vec![("maximal_indices", indices.into()), ("derived_order", derived.order().into())])
}

fn lemma_result(check: &'static str, name: &str, outcome: Result<Option<Witness>>, pass_witness: Witness) -> CheckResult {
    match outcome {
        Ok(None) => CheckResult::new(Suite::Lemmas, check, name, true, pass_witness),
        Ok(Some(w)) => CheckResult::new(Suite::Lemmas, check, name, false, w),
        Err(e) => CheckResult::error(Suite::Lemmas, check, name, &e),
    }
}

pub fn suite_lemmas(corpus: &Corpus, clock: &dyn Clock) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in &corpus.groups {
        let name = a.name.as_str();
        let normals = vec![("normal_subgroups", a.normals.all.len().into())];
        out.extend(timed(clock, || {
            vec![lemma_result("quotient_subgraph", name, check_quotient_subgraph(a), normals.clone())]
        }));
        out.extend(timed(clock, || {
            vec![lemma_result("constituent_divisibility", name, check_constituent_divisibility(a), normals.clone())]
        }));
        out.extend(timed(clock, || {
            let mut r = vec![
                lemma_result("prime_divisor_coverage", name, Ok(check_prime_divisor_coverage(a)), Vec::new()),
                lemma_result("defect_zero_vanishing", name, Ok(check_defect_zero_vanishing(a)), Vec::new()),
            ];
            if a.predicates.is_nilpotent && a.order() > 1 {
                r.push(lemma_result("sylow_product_multiplicativity", name, check_sylow_product(a), Vec::new()));
            }
            if let Some(w) = &a.frobenius {
                let nilpotent = subgroup_is_nilpotent(&a.group, &w.kernel);
                let even = w.complement.order() % 2 == 0;
                let abelian = subgroup_is_abelian(&a.group, &w.kernel);
                r.push(CheckResult::new(
                    Suite::Lemmas,
                    "frobenius_kernel_nilpotent",
                    name,
                    nilpotent && (!even || abelian),
                    vec![
                        ("kernel_order", w.kernel.order().into()),
                        ("kernel_nilpotent", nilpotent.into()),
                        ("complement_even", even.into()),
                        ("kernel_abelian", abelian.into()),
                    ],
                ));
            }
            if a.predicates.is_simple {
                r.push(CheckResult::new(
                    Suite::Lemmas,
                    "simple_group_complete_graph",
                    name,
                    a.gamma_stats.is_complete,
                    vec![("codegrees", a.nonprincipal_codegrees().into())],
                ));
            }
            if a.order() > 1 && a.is_triangle_free() {
                r.push(lemma_result("maximal_normal_reduction", name, Ok(check_maximal_normal_reduction(a)), Vec::new()));
            }
            r
        }));
    }
    // Coprime direct products of corpus members.
    for (i, h) in corpus.groups.iter().enumerate() {
        for k in &corpus.groups[i + 1..] {
            let (m, n) = (h.order(), k.order());
            if m == 1 || n == 1 || m * n > corpus.max_order || arith::gcd(m as u64, n as u64) != 1 {
                continue;
            }
            let name = format!("{}x{}", h.name, k.name);
            out.extend(timed(clock, || {
                let outcome = h.group.direct_product(&k.group).and_then(|p| codegree_multiset_of(&p)).map(|actual| {
                    let expected = product_multiset(&h.codegree_multiset(), &k.codegree_multiset());
                    (actual != expected).then(|| vec![("expected", expected.into()), ("actual", actual.into())])
                });
                vec![lemma_result("coprime_product_multiplicativity", &name, outcome, Vec::new())]
            }));
        }
    }
    for n in 1..=TOTIENT_CHECK_MAX {
        out.extend(timed(clock, || {
            vec![lemma_result("cyclic_totient_counts", &format!("C{n}"), check_cyclic_totient(n), Vec::new())]
        }));
    }
    out
}

/// Positive solutions `(n, y)` of `4 + 3 y^2 = 4^n` with `2 <= n <= max_n`.
pub fn check_step7_diophantine(max_n: u32) -> Vec<(u32, u64)> {
    assert!((2..64).contains(&max_n), "max_n out of range");
    (2..=max_n)
        .filter_map(|n| {
            let rhs = 1u128 << (2 * n);
            let y2 = (rhs - 4) / 3;
            if (rhs - 4) % 3 != 0 || y2 > u64::MAX as u128 {
                return None;
            }
            let y = arith::isqrt(y2 as u64);
            (y > 0 && (y as u128) * (y as u128) == y2).then_some((n, y))
        })
        .collect()
}
