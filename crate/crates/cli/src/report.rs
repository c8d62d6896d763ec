//! Typed reports for every subcommand, each rendered either as an
//! aligned key/value table or as JSON. Serialization order is fixed by
//! struct declaration order and all collections are ordered, so JSON
//! output is byte-identical across runs for the same input and seed.

use serde::Serialize;
use superq_core::presets::FreenessStatus;
use superq_core::problem::{ActionDef, FieldDef, GroupDef, ProblemFile, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

pub fn render<T: Serialize + Table>(format: Format, report: &T) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
        Format::Table => report.table(),
    }
}

pub trait Table {
    fn table(&self) -> String;
}

fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{:width$}  {}", k, v))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn field_name(def: &FieldDef) -> String {
    match def {
        FieldDef::Rationals => "Q".into(),
        FieldDef::Prime { p } => format!("F_{}", p),
    }
}

pub fn group_kind(def: &GroupDef) -> String {
    match def {
        GroupDef::OddAdditive => "odd-additive".into(),
        GroupDef::Frobenius1 => "frobenius-1".into(),
        GroupDef::Constant { cyclic: Some(n), .. } => format!("constant(Z/{})", n),
        GroupDef::Constant { elements, .. } => {
            format!("constant(order {})", elements.as_ref().map_or(0, |e| e.len()))
        }
        GroupDef::Product { factors } => {
            let inner: Vec<String> = factors.iter().map(group_kind).collect();
            format!("product({})", inner.join(", "))
        }
    }
}

pub fn action_kind(def: &ActionDef) -> &'static str {
    match def {
        ActionDef::Trivial => "trivial",
        ActionDef::OddDerivation { .. } => "odd-derivation",
        ActionDef::GroupAction { .. } => "group-action",
        ActionDef::Explicit { .. } => "explicit",
    }
}

#[derive(Serialize)]
pub struct Describe {
    pub schema: &'static str,
    pub command: &'static str,
    pub field: String,
    pub generators: Vec<GeneratorInfo>,
    pub group: GroupInfo,
    pub action: &'static str,
    pub bounds: BoundsInfo,
}

#[derive(Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub parity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
}

#[derive(Serialize)]
pub struct GroupInfo {
    pub kind: String,
    /// K-dimension of the coordinate Hopf superalgebra K[G].
    pub coordinate_dimension: usize,
}

#[derive(Serialize)]
pub struct BoundsInfo {
    pub invariants: u32,
    pub freeness: u32,
    pub quotient: u32,
}

impl Describe {
    pub fn new(problem: &ProblemFile, coordinate_dimension: usize, bounds: superq_core::problem::Bounds) -> Describe {
        Describe {
            schema: SCHEMA,
            command: "describe",
            field: field_name(&problem.field),
            generators: problem
                .algebra
                .generators
                .iter()
                .map(|g| GeneratorInfo {
                    name: g.name.clone(),
                    parity: match g.parity {
                        superq_core::problem::ParityDef::Even => "even",
                        superq_core::problem::ParityDef::Odd => "odd",
                    },
                    power: g.power,
                })
                .collect(),
            group: GroupInfo { kind: group_kind(&problem.group), coordinate_dimension },
            action: action_kind(&problem.action),
            bounds: BoundsInfo { invariants: bounds.invariants, freeness: bounds.freeness, quotient: bounds.quotient },
        }
    }
}

impl Table for Describe {
    fn table(&self) -> String {
        let gens = self
            .generators
            .iter()
            .map(|g| match g.power {
                Some(q) => format!("{} ({}, ^{} = 0)", g.name, g.parity, q),
                None => format!("{} ({})", g.name, g.parity),
            })
            .collect::<Vec<_>>()
            .join(", ");
        rows(&[
            ("field", self.field.clone()),
            ("generators", gens),
            ("group", format!("{}, dim K[G] = {}", self.group.kind, self.group.coordinate_dimension)),
            ("action", self.action.to_string()),
            (
                "bounds",
                format!(
                    "invariants {}, freeness {}, quotient {}",
                    self.bounds.invariants, self.bounds.freeness, self.bounds.quotient
                ),
            ),
        ])
    }
}

#[derive(Serialize)]
pub struct Failure {
    pub law: String,
    pub witness: String,
}

#[derive(Serialize)]
pub struct Check {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl Table for Check {
    fn table(&self) -> String {
        let mut out = rows(&[
            ("checked", self.checked.to_string()),
            ("result", if self.passed { "pass".into() } else { "fail".into() }),
        ]);
        for f in &self.failures {
            out.push_str(&format!("\nfail  {}  at  {}", f.law, f.witness));
        }
        out
    }
}

#[derive(Serialize)]
pub struct Slice {
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct Invariants {
    pub schema: &'static str,
    pub command: &'static str,
    pub max_degree: u32,
    pub slices: Vec<Slice>,
}

impl Table for Invariants {
    fn table(&self) -> String {
        let mut lines = vec!["degree  dimension  basis".to_string()];
        for s in &self.slices {
            lines.push(format!("{:6}  {:9}  {}", s.degree, s.dimension, s.basis.join(", ")));
        }
        lines.join("\n")
    }
}

#[derive(Serialize)]
pub struct LedgerEntry {
    pub degree: u32,
    pub slice_dimension: usize,
    pub product_rank: usize,
    pub new_generators: Vec<String>,
}

#[derive(Serialize)]
pub struct Generators {
    pub schema: &'static str,
    pub command: &'static str,
    pub max_degree: u32,
    pub entries: Vec<LedgerEntry>,
    pub generator_count: usize,
}

impl Table for Generators {
    fn table(&self) -> String {
        let mut lines = vec!["degree  slice  products  new generators".to_string()];
        for e in &self.entries {
            lines.push(format!(
                "{:6}  {:5}  {:8}  {}",
                e.degree,
                e.slice_dimension,
                e.product_rank,
                e.new_generators.join(", ")
            ));
        }
        lines.push(format!("total generators: {}", self.generator_count));
        lines.join("\n")
    }
}

#[derive(Serialize)]
pub struct Membership {
    pub target: String,
    pub coefficient_degree: u32,
    pub terms: usize,
}

#[derive(Serialize)]
pub struct Certificate {
    pub memberships: Vec<Membership>,
}

#[derive(Serialize)]
pub struct WitnessResult {
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct Freeness {
    pub schema: &'static str,
    pub command: &'static str,
    pub bound: u32,
    pub status: FreenessStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessResult>,
}

impl Table for Freeness {
    fn table(&self) -> String {
        let mut pairs = vec![("bound", self.bound.to_string()), ("status", self.status.to_string())];
        if let Some(c) = &self.certificate {
            pairs.push(("certificate", format!("{} memberships", c.memberships.len())));
        }
        if let Some(w) = &self.witness {
            let text = match &w.reason {
                Some(r) => format!("{} ({})", w.outcome, r),
                None => w.outcome.to_string(),
            };
            pairs.push(("witness", text));
        }
        let mut out = rows(&pairs);
        if let Some(c) = &self.certificate {
            for m in &c.memberships {
                out.push_str(&format!(
                    "\nmembership  1 (x) {}  coefficient degree {}  {} terms",
                    m.target, m.coefficient_degree, m.terms
                ));
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct Quotient {
    pub schema: &'static str,
    pub command: &'static str,
    pub max_degree: u32,
    pub surjective: bool,
    pub missing_targets: Vec<String>,
    pub image_dimension: usize,
    pub balanced_upper_bound: usize,
    pub certified_bijective: bool,
}

impl Table for Quotient {
    fn table(&self) -> String {
        let mut pairs = vec![
            ("max degree", self.max_degree.to_string()),
            ("surjective", self.surjective.to_string()),
            ("image dimension", self.image_dimension.to_string()),
            ("balanced upper bound", self.balanced_upper_bound.to_string()),
            ("certified bijective", self.certified_bijective.to_string()),
        ];
        if !self.missing_targets.is_empty() {
            pairs.push(("missing targets", self.missing_targets.join(", ")));
        }
        rows(&pairs)
    }
}

#[derive(Serialize)]
pub struct CheckSummary {
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct BkLevel {
    pub level: u32,
    pub generator_count: usize,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct Unipotent {
    pub schema: &'static str,
    pub command: &'static str,
    pub m: usize,
    pub n: usize,
    pub sigma: Vec<usize>,
    pub max_degree: u32,
    pub hopf: CheckSummary,
    pub filtration: CheckSummary,
    pub bk_levels: Vec<BkLevel>,
    pub passed: bool,
}

impl Table for Unipotent {
    fn table(&self) -> String {
        let sigma: Vec<String> = self.sigma.iter().map(|v| v.to_string()).collect();
        let mut out = rows(&[
            ("group", format!("U_sigma({}|{})", self.m, self.n)),
            ("sigma", sigma.join(" ")),
            ("max degree", self.max_degree.to_string()),
            ("hopf axioms", format!("{} checked, {}", self.hopf.checked, if self.hopf.passed { "pass" } else { "fail" })),
            (
                "filtration",
                format!("{} checked, {}", self.filtration.checked, if self.filtration.passed { "pass" } else { "fail" }),
            ),
        ]);
        for b in &self.bk_levels {
            out.push_str(&format!(
                "\nB_{}  {} generators  {}",
                b.level,
                b.generator_count,
                if b.passed { "pass" } else { "fail" }
            ));
        }
        for f in self.hopf.failures.iter().chain(self.filtration.failures.iter()) {
            out.push_str(&format!("\nfail  {}", f));
        }
        out.push_str(&format!("\nresult  {}", if self.passed { "pass" } else { "fail" }));
        out
    }
}

#[derive(Serialize)]
pub struct PsiInfo {
    pub max_degree: u32,
    pub surjective: bool,
    pub image_dimension: usize,
    pub balanced_upper_bound: usize,
    pub certified_bijective: bool,
}

#[derive(Serialize)]
pub struct BasisRowInfo {
    pub degree: u32,
    pub space_dimension: usize,
    pub predicted_dimension: usize,
    pub span_rank: usize,
}

#[derive(Serialize)]
pub struct BasisInfo {
    pub verified: bool,
    pub rows: Vec<BasisRowInfo>,
}

#[derive(Serialize)]
pub struct SplittingInfo {
    pub z: String,
    pub samples_verified: usize,
}

#[derive(Serialize)]
pub struct Demo {
    pub schema: &'static str,
    pub command: &'static str,
    pub name: String,
    pub status: FreenessStatus,
    pub slice_dimensions: Vec<usize>,
    pub new_generator_counts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<PsiInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingInfo>,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

impl Table for Demo {
    fn table(&self) -> String {
        let dims: Vec<String> = self.slice_dimensions.iter().map(|d| d.to_string()).collect();
        let news: Vec<String> = self.new_generator_counts.iter().map(|d| d.to_string()).collect();
        let mut pairs = vec![
            ("preset", self.name.clone()),
            ("status", self.status.to_string()),
            ("slice dims", dims.join(" ")),
            ("new generators", news.join(" ")),
        ];
        if let Some(w) = &self.witness {
            let text = match &w.reason {
                Some(r) => format!("{} ({})", w.outcome, r),
                None => w.outcome.to_string(),
            };
            pairs.push(("witness", text));
        }
        if let Some(p) = &self.psi {
            pairs.push((
                "psi",
                format!(
                    "degree {}: surjective {}, image {}, bound {}, bijective {}",
                    p.max_degree, p.surjective, p.image_dimension, p.balanced_upper_bound, p.certified_bijective
                ),
            ));
        }
        if let Some(b) = &self.basis {
            pairs.push(("basis", format!("verified {}, {} degrees", b.verified, b.rows.len())));
        }
        if let Some(s) = &self.splitting {
            pairs.push(("splitting", format!("z = {}, {} samples decomposed", s.z, s.samples_verified)));
        }
        let mut out = rows(&pairs);
        for m in &self.mismatches {
            out.push_str(&format!("\nmismatch  {}", m));
        }
        out.push_str(&format!("\nresult  {}", if self.passed { "pass" } else { "fail" }));
        out
    }
}
