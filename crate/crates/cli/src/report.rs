use std::fmt::Write as _;

use burnside_core::burnside::MarksTable;
use burnside_core::group::PermGroup;
use burnside_core::invariants::{Certificate, PicardReport, UnitsReport};
use burnside_core::{Error, Result, TOOL_VERSION};
use serde::Serialize;

use crate::Format;

/// Identifies the group a report is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub classes: Option<usize>,
    /// SHA-256 of the sorted element list.
    pub hash: String,
}

impl GroupInfo {
    pub fn new(name: impl Into<String>, group: &PermGroup, classes: Option<usize>) -> Self {
        GroupInfo {
            name: name.into(),
            order: group.order(),
            degree: group.degree(),
            classes,
            hash: group.canonical_hash(),
        }
    }

    fn header(&self) -> String {
        let classes = self.classes.map_or_else(|| "?".to_string(), |c| c.to_string());
        format!(
            "group {} (order {}, degree {}, {} classes)\nhash {}\n",
            self.name, self.order, self.degree, classes, self.hash
        )
    }
}

/// Report for a single group.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope<T> {
    pub tool_version: &'static str,
    pub command: &'static str,
    pub group: GroupInfo,
    pub report: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &'static str, group: GroupInfo, report: T) -> Self {
        Envelope {
            tool_version: TOOL_VERSION,
            command,
            group,
            report,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub index: usize,
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    /// Generators of the class representative as image arrays.
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarksReport {
    pub classes: Vec<ClassInfo>,
    /// `matrix[i][j] = |(G/K_i)^{H_j}|`.
    pub matrix: Vec<Vec<i64>>,
    pub diagonal_product: String,
}

impl MarksReport {
    pub fn new(group: &PermGroup, marks: &MarksTable) -> Self {
        let lattice = marks.lattice();
        let classes = lattice
            .classes()
            .iter()
            .enumerate()
            .map(|(i, k)| ClassInfo {
                index: i,
                order: k.order(),
                class_size: lattice.class_sizes()[i],
                normalizer_order: lattice.normalizer_orders()[i],
                generators: k
                    .generators(group)
                    .into_iter()
                    .map(|g| group.element(g).images().to_vec())
                    .collect(),
            })
            .collect();
        MarksReport {
            classes,
            matrix: marks.matrix().to_rows(),
            diagonal_product: marks.diagonal_product().to_string(),
        }
    }
}

/// A value that can be written in every output format.
pub trait Render: Serialize {
    fn csv_records(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

/// Body of an [`Envelope`]; the envelope adds the header.
pub trait ReportBody: Serialize {
    fn csv_records(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

impl<T: ReportBody> Render for Envelope<T> {
    fn csv_records(&self) -> Vec<Vec<String>> {
        self.report.csv_records()
    }

    fn text(&self) -> String {
        format!(
            "burnside {} {}\n{}\n{}",
            self.tool_version,
            self.command,
            self.group.header(),
            self.report.text()
        )
    }
}

fn strings<T: ToString>(row: &[T]) -> Vec<String> {
    row.iter().map(ToString::to_string).collect()
}

fn aligned(rows: &[Vec<i64>]) -> String {
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

impl ReportBody for MarksReport {
    fn csv_records(&self) -> Vec<Vec<String>> {
        self.matrix.iter().map(|r| strings(r)).collect()
    }

    fn text(&self) -> String {
        let mut out = String::from("classes (order, class size, normalizer order):\n");
        for k in &self.classes {
            let _ = writeln!(out, "  [{}] {} {} {}", k.index, k.order, k.class_size, k.normalizer_order);
        }
        let _ = writeln!(out, "table of marks:");
        out.push_str(&aligned(&self.matrix));
        let _ = writeln!(out, "product of diagonal marks: {}", self.diagonal_product);
        out
    }
}

impl ReportBody for UnitsReport {
    fn csv_records(&self) -> Vec<Vec<String>> {
        self.units.iter().map(|u| strings(&u.0)).collect()
    }

    fn text(&self) -> String {
        let mut out = format!("rank {} ({} units)\nunits:\n", self.rank, self.units.len());
        let rows: Vec<Vec<i64>> = self.units.iter().map(|u| u.0.clone()).collect();
        out.push_str(&aligned(&rows));
        out
    }
}

impl ReportBody for PicardReport {
    fn csv_records(&self) -> Vec<Vec<String>> {
        let factors = strings(&self.cokernel.invariant_factors).join(" ");
        vec![
            strings(&["field", "value"]),
            strings(&["modulus".to_string(), self.modulus.to_string()]),
            strings(&["classes".to_string(), self.classes.to_string()]),
            strings(&["target".to_string(), self.target.to_string()]),
            strings(&["target_order".to_string(), self.target_order.clone()]),
            strings(&["image_generator_count".to_string(), self.image_generator_count.to_string()]),
            strings(&["quotient_unit_count".to_string(), self.quotient_unit_count.to_string()]),
            strings(&["invariant_factors".to_string(), factors]),
            strings(&["kernel_size".to_string(), self.kernel_size.to_string()]),
        ]
    }

    fn text(&self) -> String {
        format!(
            "Pic = {}\ninvariant factors {:?}\ntarget ((Z/{})^x)^{} = {} of order {}\n{} image generators, {} units in the quotient ring, kernel of size {}\n",
            self.cokernel,
            self.cokernel.invariant_factors,
            self.modulus,
            self.classes,
            self.target,
            self.target_order,
            self.image_generator_count,
            self.quotient_unit_count,
            self.kernel_size
        )
    }
}

impl ReportBody for Certificate {
    fn csv_records(&self) -> Vec<Vec<String>> {
        let mut rows = vec![strings(&["check", "passed", "evidence"])];
        rows.extend(
            self.checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.evidence.clone()]),
        );
        rows
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark} {}: {}", c.name, c.evidence);
        }
        let _ = writeln!(out, "cited, not verified:");
        for a in &self.cited_axioms {
            let _ = writeln!(out, "  - {a}");
        }
        let _ = writeln!(
            out,
            "conclusion: {}",
            self.conclusion.as_deref().unwrap_or("none (a check failed)")
        );
        out
    }
}

/// Serializes `value` in `format`. JSON output is pretty-printed with a
/// trailing newline and depends only on the value.
pub fn render<T: Render>(value: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            for record in value.csv_records() {
                w.write_record(&record).map_err(|e| Error::Internal(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
        }
        Format::Text => Ok(value.text()),
    }
}
