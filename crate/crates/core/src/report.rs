//! The analysis pipeline and its deterministic JSON report.

use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::chartable::{
    approx, class_sums, compute_table, idempotents, table_checks, CharacterTable, ClassSumCoordinates,
    IdempotentDecomposition, TableConfig,
};
use crate::checks::{Check, Status};
use crate::error::{Error, Result};
use crate::exactnum::CycNumber;
use crate::fusionring::{catalog, from_json_str, to_json_string, FusionRingSpec};
use crate::galois::{galois_report, GaloisReport};
use crate::structconst::{algebra_checks, class_algebra, rationality_report, ClassAlgebra, RationalityReport};
use crate::theorems::{
    modular_check, perfect_identity, zero_rows, ModularReport, PerfectReport, PerfectVerdict, SMatrixSpec, ZeroReport,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub table: TableConfig,
    /// Drop the floating-point renderings from the report.
    pub exact_only: bool,
    pub witness_limit: Option<usize>,
    /// Run the ring axioms on file inputs before computing.
    pub validate: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { table: TableConfig::default(), exact_only: false, witness_limit: None, validate: true }
    }
}

/// Report sections selectable with `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Orthogonality,
    Idempotents,
    StructConst,
    Galois,
    Zeros,
    Perfect,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::Orthogonality,
        Section::Idempotents,
        Section::StructConst,
        Section::Galois,
        Section::Zeros,
        Section::Perfect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Orthogonality => "orthogonality",
            Section::Idempotents => "idempotents",
            Section::StructConst => "structconst",
            Section::Galois => "galois",
            Section::Zeros => "zeros",
            Section::Perfect => "perfect",
        }
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parses a comma- or space-separated list of section names, rejecting unknown ones.
pub fn parse_sections<S: AsRef<str>>(names: &[S]) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = names
        .iter()
        .flat_map(|n| n.as_ref().split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()).collect::<Vec<_>>())
        .map(Section::from_str)
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A ring together with the label and digest recorded in the report.
#[derive(Debug, Clone)]
pub struct LoadedInput {
    pub label: String,
    pub spec: FusionRingSpec,
    pub digest: String,
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Resolves `catalog:NAME` or a ring file path.
pub fn load_input(input: &str, validate: bool) -> Result<LoadedInput> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let spec = catalog(name)?;
        let digest = hex_digest(to_json_string(&spec).as_bytes());
        return Ok(LoadedInput { label: input.to_string(), spec, digest });
    }
    let text = std::fs::read_to_string(input)?;
    let spec = from_json_str(&text, validate)?;
    Ok(LoadedInput { label: input.to_string(), spec, digest: hex_digest(text.as_bytes()) })
}

/// Formats with six significant digits, trimming trailing zeros.
pub fn six_digits(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..=15).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        format!("{x:.5e}")
    }
}

pub fn render(x: &CycNumber) -> String {
    let (mut re, mut im) = approx(x);
    // exact zeros, so round-off never prints as a tiny component
    if x.is_real() {
        im = 0.0;
    }
    if (x + &x.conjugate()).is_zero() {
        re = 0.0;
    }
    let im_s = six_digits(im.abs());
    match (six_digits(re).as_str(), im_s.as_str()) {
        (r, "0") => r.to_string(),
        ("0", i) => format!("{}{i}i", if im < 0.0 { "-" } else { "" }),
        (r, i) => format!("{r}{}{i}i", if im < 0.0 { "-" } else { "+" }),
    }
}

fn render_matrix(m: &[Vec<CycNumber>]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(render).collect()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RingSummary {
    pub name: String,
    pub rank: usize,
    pub declared_braided: bool,
    pub declared_modular: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableNumeric {
    pub alpha: Vec<Vec<String>>,
    pub dims: Vec<String>,
    #[serde(rename = "dimC")]
    pub dim_c: String,
    pub classdims: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableSection {
    #[serde(flatten)]
    pub table: CharacterTable,
    pub integral: bool,
    pub weakly_integral: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<TableNumeric>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdempotentSection {
    #[serde(flatten)]
    pub idempotents: IdempotentDecomposition,
    #[serde(flatten)]
    pub class_sums: ClassSumCoordinates,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructConstSection {
    #[serde(flatten)]
    pub algebra: ClassAlgebra,
    pub rationality: RationalityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModularSection {
    #[serde(flatten)]
    pub report: ModularReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_alpha: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportCheck {
    pub section: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub precision: usize,
    pub conductor_max: u32,
    pub seed: u64,
    pub exact_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_limit: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: String,
    pub input_digest: String,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<IdempotentSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structconst: Option<StructConstSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois: Option<GaloisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeros: Option<ZeroReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<PerfectReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularSection>,
    pub checks: Vec<ReportCheck>,
    pub summary: Summary,
}

impl Report {
    fn new(command: &str, input: &str, digest: String, config: &RunConfig) -> Self {
        Report {
            tool: "fuscat",
            version: TOOL_VERSION,
            command: command.to_string(),
            input: input.to_string(),
            input_digest: digest,
            config: ConfigEcho {
                precision: config.table.precision,
                conductor_max: config.table.conductor_max,
                seed: config.table.seed,
                exact_only: config.exact_only,
                witness_limit: config.witness_limit,
            },
            ring: None,
            table: None,
            idempotents: None,
            structconst: None,
            galois: None,
            zeros: None,
            perfect: None,
            modular: None,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    fn push(&mut self, section: &str, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks.into_iter().map(|check| ReportCheck { section: section.to_string(), check }));
    }

    fn finish(mut self) -> Self {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.check.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
        }
        self.summary = s;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// True when a theorem verdict contradicts the computed data.
    pub fn inconsistent(&self) -> bool {
        self.perfect.as_ref().is_some_and(|p| p.verdict == PerfectVerdict::Inconsistent)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

const ORTHOGONALITY_CHECKS: [&str; 6] = [
    "homomorphism_certificate",
    "distinct_columns",
    "conjugate_rows",
    "first_orthogonality",
    "second_orthogonality",
    "class_dims_sum",
];

fn table_section(t: &CharacterTable, exact_only: bool) -> TableSection {
    let numeric = (!exact_only).then(|| TableNumeric {
        alpha: render_matrix(&t.alpha),
        dims: t.dims.d.iter().map(render).collect(),
        dim_c: render(t.dim_c()),
        classdims: t.classdims.iter().map(render).collect(),
    });
    TableSection { table: t.clone(), integral: t.is_integral(), weakly_integral: t.is_weakly_integral(), numeric }
}

fn perfect_check(p: &PerfectReport) -> Check {
    match p.verdict {
        PerfectVerdict::NotApplicable => Check::not_applicable("perfect_identity", p.note.clone()),
        PerfectVerdict::Inconsistent => {
            Check::fail("perfect_identity", "identity and perfectness disagree").with_note(p.note.clone())
        }
        _ => Check::pass("perfect_identity").with_note(p.note.clone()),
    }
}

/// Runs the requested sections over one ring. The table is always computed; it is reported
/// in full only by `analyze`.
fn run(command: &str, input: &LoadedInput, sections: &[Section], config: &RunConfig) -> Result<Report> {
    config.table.check()?;
    let spec = &input.spec;
    let mut report = Report::new(command, &input.label, input.digest.clone(), config);
    report.ring = Some(RingSummary {
        name: spec.name.clone(),
        rank: spec.rank,
        declared_braided: spec.declared_braided,
        declared_modular: spec.declared_modular,
    });
    let t = compute_table(spec, &config.table)?;
    let full = command == "analyze";
    if full {
        report.table = Some(table_section(&t, config.exact_only));
    }
    let has = |s: Section| sections.contains(&s);
    let all_table_checks = table_checks(&t);
    if has(Section::Orthogonality) {
        report.push(
            "orthogonality",
            all_table_checks.iter().filter(|c| ORTHOGONALITY_CHECKS.contains(&c.name.as_str())).cloned(),
        );
    }
    if has(Section::Idempotents) {
        report.idempotents = Some(IdempotentSection { idempotents: idempotents(&t)?, class_sums: class_sums(&t)? });
        report.push(
            "idempotents",
            all_table_checks.iter().filter(|c| !ORTHOGONALITY_CHECKS.contains(&c.name.as_str())).cloned(),
        );
    }
    let alg = if has(Section::StructConst) || has(Section::Galois) { Some(class_algebra(&t)?) } else { None };
    if has(Section::StructConst) {
        let alg = alg.as_ref().expect("computed above");
        report.push("structconst", algebra_checks(&t, alg));
        report.structconst = Some(StructConstSection {
            algebra: alg.clone(),
            rationality: rationality_report(alg, config.witness_limit),
        });
    }
    if has(Section::Galois) {
        let g = galois_report(&t, alg.as_ref().expect("computed above"))?;
        for e in &g.elements {
            report.push(&format!("galois/sigma_{}", e.sigma.residue), e.identity_checks.iter().cloned());
        }
        report.push("galois", g.group_checks.iter().cloned());
        report.galois = Some(g);
    }
    if has(Section::Zeros) {
        let z = zero_rows(&t);
        report.push("zeros", z.checks.iter().cloned());
        report.zeros = Some(z);
    }
    if has(Section::Perfect) {
        let p = perfect_identity(&t)?;
        report.push("perfect", [perfect_check(&p)]);
        report.perfect = Some(p);
    }
    Ok(report.finish())
}

/// The full pipeline: table, idempotents, class algebra, Galois action and theorem checks.
pub fn analyze(input: &LoadedInput, config: &RunConfig) -> Result<Report> {
    run("analyze", input, &Section::ALL, config)
}

/// Only the requested sections.
pub fn verify(input: &LoadedInput, sections: &[Section], config: &RunConfig) -> Result<Report> {
    run("verify", input, sections, config)
}

/// Checks an S-matrix file, optionally against a ring.
pub fn modular(smatrix_path: &Path, ring: Option<&LoadedInput>, config: &RunConfig) -> Result<Report> {
    config.table.check()?;
    let text = std::fs::read_to_string(smatrix_path)?;
    let s = SMatrixSpec::from_json_str(&text)?;
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    if let Some(r) = ring {
        hasher.update(r.digest.as_bytes());
    }
    let digest = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    let label = match ring {
        Some(r) => format!("{} with {}", smatrix_path.display(), r.label),
        None => smatrix_path.display().to_string(),
    };
    let mut report = Report::new("modular", &label, digest, config);
    report.ring = ring.map(|r| RingSummary {
        name: r.spec.name.clone(),
        rank: r.spec.rank,
        declared_braided: r.spec.declared_braided,
        declared_modular: r.spec.declared_modular,
    });
    let m = modular_check(&s, ring.map(|r| &r.spec), &config.table)?;
    report.push("modular", m.checks.iter().cloned());
    let numeric_alpha = (!config.exact_only).then(|| render_matrix(&m.alpha));
    report.modular = Some(ModularSection { report: m, numeric_alpha });
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog_input(name: &str) -> LoadedInput {
        load_input(&format!("catalog:{name}"), true).unwrap()
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(six_digits(std::f64::consts::SQRT_2), "1.41421");
        assert_eq!(six_digits(-0.5), "-0.5");
        assert_eq!(six_digits(6.0), "6");
        assert_eq!(six_digits(123456.7), "123457");
        assert_eq!(six_digits(1e-9), "1.00000e-9");
        assert_eq!(render(&CycNumber::root_of_unity(3, 1)), "-0.5+0.866025i");
        assert_eq!(render(&CycNumber::root_of_unity(4, 3)), "-1i");
    }

    #[test]
    fn section_names() {
        assert_eq!(parse_sections(&["zeros,galois"]).unwrap(), vec![Section::Galois, Section::Zeros]);
        assert!(matches!(parse_sections(&["zeros", "nope"]), Err(Error::UnknownCheck(n)) if n == "nope"));
    }

    #[test]
    fn verify_selects_sections() {
        let rep = verify(&catalog_input("rep_s3"), &[Section::Zeros], &RunConfig::default()).unwrap();
        assert!(rep.zeros.is_some() && rep.table.is_none() && rep.galois.is_none());
        assert!(rep.checks.iter().all(|c| c.section == "zeros"));
    }

    #[test]
    fn analyze_is_deterministic_and_passes() {
        let cfg = RunConfig::default();
        let a = analyze(&catalog_input("rep_a4"), &cfg).unwrap();
        let b = analyze(&catalog_input("rep_a4"), &cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.all_pass(), "{:?}", a.checks.iter().filter(|c| c.check.failed()).collect::<Vec<_>>());
        assert_eq!(a.galois.as_ref().unwrap().elements.len(), 2);
    }

    #[test]
    fn exact_only_drops_renderings() {
        let cfg = RunConfig { exact_only: true, ..RunConfig::default() };
        let rep = analyze(&catalog_input("fib"), &cfg).unwrap();
        assert!(rep.table.as_ref().unwrap().numeric.is_none());
        assert!(!rep.to_json().contains("1.61803"));
        let rep = analyze(&catalog_input("fib"), &RunConfig::default()).unwrap();
        assert!(rep.to_json().contains("1.61803"));
    }

    #[test]
    fn unknown_catalog_entry() {
        assert!(matches!(load_input("catalog:nope", true), Err(Error::UnknownCatalogEntry(_))));
    }
}
