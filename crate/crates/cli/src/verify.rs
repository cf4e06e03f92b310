//! The checks behind `burnside report-all`, run independently per catalog
//! entry.

use std::collections::HashSet;
use std::fmt::Write as _;

use burnside_core::burnside::{BurnsideElement, GhostVector, MarksTable};
use burnside_core::cache::marks_table;
use burnside_core::catalog::{CatalogEntry, Construction};
use burnside_core::group::{normalizer, PermGroup};
use burnside_core::invariants::{
    certify, index_two_subgroups, kernel_check, picard, quotient_image, units, unit_elements_of_image,
    Certificate, UnitsReport, PULLBACK_SAMPLES,
};
use burnside_core::oracle::cokernel_by_enumeration;
use burnside_core::{Error, Exec, Result, TOOL_VERSION};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::{GroupInfo, Render};
use crate::RunConfig;

const ROUND_TRIPS: usize = 100;
const ROUND_TRIP_SEED: u64 = 0x0b5e_55ed;
/// Largest `((Z/n)^x)^c` enumerated by the cokernel oracle.
const ORACLE_TARGET_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardSummary {
    pub computed: bool,
    pub invariant_factors: Option<Vec<u64>>,
    pub kernel_size: Option<u64>,
    pub oracle_compared: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupVerdict {
    pub name: String,
    pub construction: String,
    pub group: Option<GroupInfo>,
    pub passed: bool,
    pub checks: Vec<NamedCheck>,
    pub picard: Option<PicardSummary>,
    pub certificate: Option<Certificate>,
}

impl GroupVerdict {
    fn record(&mut self, name: &str, outcome: Result<(bool, String)>) -> bool {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(NamedCheck {
            name: name.into(),
            passed,
            detail,
        });
        passed
    }

    fn finish(mut self) -> Self {
        self.passed = !self.checks.is_empty() && self.checks.iter().all(|c| c.passed);
        self
    }
}

/// Runs every check on one catalog entry. Errors are recorded as failed
/// checks, never propagated.
pub fn verify_entry(entry: &CatalogEntry, rc: &RunConfig) -> GroupVerdict {
    let mut v = GroupVerdict {
        name: entry.name.clone(),
        construction: entry.construction.to_string(),
        group: None,
        passed: false,
        checks: Vec::new(),
        picard: None,
        certificate: None,
    };
    let cfg = &rc.config;
    let group = match entry.build(cfg) {
        Ok(g) => g,
        Err(e) => {
            v.record("build", Err(e));
            return v.finish();
        }
    };
    let expected = entry.construction.expected_order();
    v.record(
        "order_matches_construction",
        Ok((
            expected.is_none_or(|e| e == group.order()),
            format!("order {}, expected {expected:?}", group.order()),
        )),
    );
    let marks = match marks_table(&group, cfg, rc.cache.as_ref()) {
        Ok(m) => m,
        Err(e) => {
            v.record("marks", Err(e));
            return v.finish();
        }
    };
    v.group = Some(GroupInfo::new(&entry.name, &group, Some(marks.class_count())));

    v.record("ghost_injective", ghost_injective(&marks));
    v.record("multiples_of_n_in_image", multiples_of_n(&marks));
    v.record("diagonal_marks_identity", diagonal_identity(&group, &marks));
    match units(&marks, cfg) {
        Ok(u) => {
            v.record(
                "unit_facts",
                unit_facts(&group, &marks, &u, is_nonsolvable(&entry.construction)),
            );
            let (summary, outcome) = picard_checks(&entry.name, &marks, &u, rc);
            v.picard = summary;
            v.record("picard_kernel_and_oracle", outcome);
        }
        Err(e) => {
            v.record("unit_facts", Err(e));
        }
    }
    v.record("size_identity", size_identity(&marks));
    match certify(&marks, cfg) {
        Ok(cert) => {
            let p = &cert.pullback;
            v.record(
                "pullback_property",
                Ok((
                    p.samples == PULLBACK_SAMPLES && p.passed(),
                    format!("{} samples, {} discrepancies", p.samples, p.discrepancies),
                )),
            );
            let failing: Vec<&str> = cert.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            v.record(
                "certificate",
                Ok((
                    cert.passed() && cert.conclusion.is_some(),
                    if failing.is_empty() {
                        format!("{} checks passed", cert.checks.len())
                    } else {
                        format!("failing: {}", failing.join(", "))
                    },
                )),
            );
            v.certificate = Some(cert);
        }
        Err(e) => {
            v.record("certificate", Err(e));
        }
    }
    v.finish()
}

fn is_nonsolvable(c: &Construction) -> bool {
    matches!(c, Construction::Alternating(n) | Construction::Symmetric(n) if *n >= 5)
}

/// `det M` equals the diagonal product and is nonzero, and unghost undoes
/// ghost on seeded random elements.
fn ghost_injective(marks: &MarksTable) -> Result<(bool, String)> {
    let det = marks.matrix().determinant()?;
    let product = marks.diagonal_product();
    let det_ok = det == product && det != 0.into();
    let c = marks.class_count();
    let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED);
    let mut round_trips = 0;
    for _ in 0..ROUND_TRIPS {
        let x = BurnsideElement((0..c).map(|_| rng.gen_range(-50..=50)).collect());
        if marks.unghost(&marks.ghost(&x)?)?.as_ref() == Some(&x) {
            round_trips += 1;
        }
    }
    Ok((
        det_ok && round_trips == ROUND_TRIPS,
        format!("det {det}, diagonal product {product}, {round_trips}/{ROUND_TRIPS} round trips"),
    ))
}

/// `n e_j` lies in the image for every `j`, and some `e_j` does not when a
/// diagonal mark exceeds 1.
fn multiples_of_n(marks: &MarksTable) -> Result<(bool, String)> {
    let n = marks.group_order() as i64;
    let c = marks.class_count();
    let mut all_in = true;
    for j in 0..c {
        all_in &= marks.is_in_image(&GhostVector::unit_vector(c, j, n))?;
    }
    let mut non_member = None;
    for j in 0..c {
        if !marks.is_in_image(&GhostVector::unit_vector(c, j, 1))? {
            non_member = Some(j);
            break;
        }
    }
    let needs_non_member = marks.diagonal().iter().any(|&d| d > 1);
    Ok((
        all_in && (!needs_non_member || non_member.is_some()),
        format!("n*e_j in image for all j: {all_in}; e_j outside the image: {non_member:?}"),
    ))
}

/// Diagonal marks against normalizers recomputed from scratch.
fn diagonal_identity(group: &PermGroup, marks: &MarksTable) -> Result<(bool, String)> {
    let diag = marks.diagonal();
    let mut bad = Vec::new();
    for (i, k) in marks.lattice().classes().iter().enumerate() {
        let index = normalizer(group, k)?.order() / k.order();
        if diag[i] != index as i64 {
            bad.push(i);
        }
    }
    Ok((bad.is_empty(), format!("diagonal {diag:?}; mismatched classes {bad:?}")))
}

fn unit_facts(
    group: &PermGroup,
    marks: &MarksTable,
    u: &UnitsReport,
    nonsolvable: bool,
) -> Result<(bool, String)> {
    let c = marks.class_count();
    let one = GhostVector::constant(c, 1);
    let set: HashSet<&GhostVector> = u.units.iter().collect();
    let mut ok = set.contains(&one) && set.contains(&GhostVector::constant(c, -1));
    ok &= u.units.len() == 1usize << u.rank && set.len() == u.units.len();
    for a in &u.units {
        ok &= a.0.iter().all(|&x| x == 1 || x == -1);
        ok &= a.pointwise_mul(a)? == one;
        for b in &u.units {
            ok &= set.contains(&a.pointwise_mul(b)?);
        }
    }
    let mut detail = format!("rank {}", u.rank);
    if group.order() % 2 == 1 {
        ok &= u.rank == 1;
        detail.push_str("; odd order, expected rank 1");
    }
    if group.is_abelian() {
        let s = index_two_subgroups(marks.lattice());
        ok &= u.rank as usize == 1 + s;
        let _ = write!(detail, "; abelian with {s} subgroups of index 2");
    }
    if nonsolvable {
        ok &= u.rank > 1;
        detail.push_str("; not solvable, expected rank above 1");
    }
    Ok((ok, detail))
}

fn known_picard(name: &str) -> Option<Vec<u64>> {
    match name {
        "C1" | "C2" | "C3" => Some(vec![]),
        "C5" => Some(vec![2]),
        _ => None,
    }
}

fn picard_checks(
    name: &str,
    marks: &MarksTable,
    u: &UnitsReport,
    rc: &RunConfig,
) -> (Option<PicardSummary>, Result<(bool, String)>) {
    let cfg = &rc.config;
    let p = match picard(marks, cfg) {
        Ok(p) => p,
        Err(Error::BudgetExceeded { what, limit }) => {
            let note = format!("not computed: {what} exceeds {limit}");
            let summary = PicardSummary {
                computed: false,
                invariant_factors: None,
                kernel_size: None,
                oracle_compared: false,
                note: note.clone(),
            };
            return (Some(summary), Ok((true, note)));
        }
        Err(e) => return (None, Err(e)),
    };
    let factors = p.cokernel.invariant_factors.clone();
    let kernel_ok = kernel_check(&p, u);
    let mut ok = kernel_ok;
    let mut detail = format!("Pic = {}; kernel {} vs {} units", p.cokernel, p.kernel_size, u.units.len());
    let mut compared = false;
    if p.target_order() <= BigUint::from(ORACLE_TARGET_LIMIT) {
        let oracle = (|| -> Result<Vec<u64>> {
            let n = p.modulus;
            let c = p.classes;
            let mut gens: Vec<Vec<u64>> = (0..c)
                .map(|k| (0..c).map(|j| if j == k { (n - 1) % n } else { 1 % n }).collect())
                .collect();
            let image = quotient_image(marks)?;
            gens.extend(unit_elements_of_image(&image, cfg.budgets.enumeration, Exec::Sequential)?);
            cokernel_by_enumeration(n, c, &gens, ORACLE_TARGET_LIMIT)
        })();
        match oracle {
            Ok(o) => {
                compared = true;
                ok &= o == factors;
                let _ = write!(detail, "; enumeration oracle {o:?}");
            }
            Err(e) => return (None, Err(e)),
        }
    }
    if let Some(expected) = known_picard(name) {
        ok &= expected == factors;
        let _ = write!(detail, "; expected {expected:?}");
    }
    let summary = PicardSummary {
        computed: true,
        kernel_size: Some(p.kernel_size),
        invariant_factors: Some(factors),
        oracle_compared: compared,
        note: p.cokernel.to_string(),
    };
    (Some(summary), Ok((ok, detail)))
}

fn size_identity(marks: &MarksTable) -> Result<(bool, String)> {
    let size = quotient_image(marks)?.size();
    let n = BigUint::from(marks.group_order());
    let c = marks.class_count();
    let product = marks.diagonal_product();
    let ok = &size * product.magnitude() == n.pow(c as u32);
    Ok((ok, format!("|R| = {size}, {size} * {product} = {n}^{c}: {ok}")))
}

/// Output of `report-all`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub tool_version: &'static str,
    pub command: &'static str,
    pub group_count: usize,
    pub failures: usize,
    pub passed: bool,
    pub groups: Vec<GroupVerdict>,
}

impl CatalogReport {
    pub fn new(groups: Vec<GroupVerdict>) -> Self {
        let failures = groups.iter().filter(|g| !g.passed).count();
        CatalogReport {
            tool_version: TOOL_VERSION,
            command: "report-all",
            group_count: groups.len(),
            failures,
            passed: failures == 0,
            groups,
        }
    }
}

fn picard_cell(g: &GroupVerdict) -> String {
    match &g.picard {
        Some(p) if p.computed => p.note.clone(),
        Some(_) => "not computed".into(),
        None => "error".into(),
    }
}

impl Render for CatalogReport {
    fn csv_records(&self) -> Vec<Vec<String>> {
        let mut rows = vec![["group", "order", "classes", "hash", "picard", "passed", "failed_checks"]
            .iter()
            .map(|s| s.to_string())
            .collect()];
        for g in &self.groups {
            let failed: Vec<&str> = g.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            rows.push(vec![
                g.name.clone(),
                g.group.as_ref().map_or(String::new(), |i| i.order.to_string()),
                g.group
                    .as_ref()
                    .and_then(|i| i.classes)
                    .map_or(String::new(), |c| c.to_string()),
                g.group.as_ref().map_or(String::new(), |i| i.hash.clone()),
                picard_cell(g),
                g.passed.to_string(),
                failed.join(" "),
            ]);
        }
        rows
    }

    fn text(&self) -> String {
        let mut out = format!("burnside {} report-all\n", self.tool_version);
        for g in &self.groups {
            let mark = if g.passed { "PASS" } else { "FAIL" };
            let (order, classes) = g
                .group
                .as_ref()
                .map_or((0, 0), |i| (i.order, i.classes.unwrap_or(0)));
            let _ = writeln!(
                out,
                "{mark} {:<6} order {order:>2}, {classes:>2} classes, Pic = {}",
                g.name,
                picard_cell(g)
            );
            for c in g.checks.iter().filter(|c| !c.passed) {
                let _ = writeln!(out, "     {}: {}", c.name, c.detail);
            }
        }
        let _ = writeln!(
            out,
            "{} of {} groups passed",
            self.group_count - self.failures,
            self.group_count
        );
        out
    }
}
