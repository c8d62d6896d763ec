//! Problem files: a versioned JSON description of a field, a
//! supercommutative algebra, a supergroup, and an action, together with
//! degree bounds. Schema violations and semantic failures are kept apart
//! so the CLI can map them to distinct exit codes.

use crate::coaction::{Coaction, CoactionError, OddDerivation};
use crate::field::FieldSpec;
use crate::freeness::StabilizerWitness;
use crate::group::FiniteGroup;
use crate::hopf::{HopfSuperAlgebra, SupergroupSpec};
use crate::maps::{AlgebraMap, GenTable};
use crate::poly::Polynomial;
use crate::presentation::{GenRef, Presentation};
use crate::tensor::TensorElement;
use crate::textio::parse_polynomial;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const SCHEMA: &str = "superq/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: String,
    pub field: FieldDef,
    pub algebra: AlgebraDef,
    pub group: GroupDef,
    pub action: ActionDef,
    #[serde(default, skip_serializing_if = "OptionsDef::is_default")]
    pub options: OptionsDef,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldDef {
    Rationals,
    Prime { p: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    pub generators: Vec<GeneratorDef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDef {
    pub name: String,
    pub parity: ParityDef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityDef {
    Even,
    Odd,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupDef {
    OddAdditive,
    #[serde(rename = "frobenius-1")]
    Frobenius1,
    Constant {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cyclic: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elements: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        table: Option<Vec<Vec<String>>>,
    },
    Product {
        factors: Vec<GroupDef>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ActionDef {
    Trivial,
    OddDerivation {
        images: BTreeMap<String, String>,
    },
    GroupAction {
        maps: Vec<BTreeMap<String, String>>,
    },
    Explicit {
        images: BTreeMap<String, Vec<TensorTermDef>>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermDef {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub freeness_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_degree: Option<u32>,
}

impl OptionsDef {
    fn is_default(&self) -> bool {
        *self == OptionsDef::default()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub schema: String,
    pub algebra: AlgebraDef,
    pub point: BTreeMap<String, String>,
    pub element: BTreeMap<String, String>,
}

#[derive(Debug, thiserror::Error)]
pub enum ProblemError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid problem: {0}")]
    Semantic(String),
    #[error("coaction validation failed: {0}")]
    Coaction(#[from] CoactionError),
}

#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub invariants: u32,
    pub freeness: u32,
    pub quotient: u32,
}

#[derive(Debug, Clone)]
pub struct BuiltProblem {
    pub coaction: Coaction,
    /// The finite group when the group kind is plain constant.
    pub gamma: Option<FiniteGroup>,
    pub bounds: Bounds,
}

pub fn parse_problem_json(text: &str) -> Result<ProblemFile, ProblemError> {
    let p: ProblemFile = serde_json::from_str(text).map_err(|e| ProblemError::Schema(e.to_string()))?;
    if p.schema != SCHEMA {
        return Err(ProblemError::Schema(format!("unsupported schema {:?}, expected {:?}", p.schema, SCHEMA)));
    }
    Ok(p)
}

pub fn parse_witness_json(text: &str) -> Result<WitnessFile, ProblemError> {
    let w: WitnessFile = serde_json::from_str(text).map_err(|e| ProblemError::Schema(e.to_string()))?;
    if w.schema != SCHEMA {
        return Err(ProblemError::Schema(format!("unsupported schema {:?}, expected {:?}", w.schema, SCHEMA)));
    }
    Ok(w)
}

fn build_field(def: &FieldDef) -> Result<FieldSpec, ProblemError> {
    match def {
        FieldDef::Rationals => Ok(FieldSpec::Rationals),
        FieldDef::Prime { p } => FieldSpec::prime(*p).map_err(|e| ProblemError::Semantic(e.to_string())),
    }
}

pub fn build_presentation(def: &AlgebraDef, field: FieldSpec) -> Result<Arc<Presentation>, ProblemError> {
    let mut pres = Presentation::new(field);
    for g in &def.generators {
        match (g.parity, g.power) {
            (ParityDef::Even, power) => {
                pres.add_even(&g.name, power).map_err(|e| ProblemError::Semantic(e.to_string()))?;
            }
            (ParityDef::Odd, None) => {
                pres.add_odd(&g.name).map_err(|e| ProblemError::Semantic(e.to_string()))?;
            }
            (ParityDef::Odd, Some(_)) => {
                return Err(ProblemError::Semantic(format!(
                    "odd generator {} cannot carry a power relation (it squares to zero)",
                    g.name
                )));
            }
        }
    }
    Ok(pres.into())
}

fn build_finite_group(cyclic: &Option<usize>, elements: &Option<Vec<String>>, table: &Option<Vec<Vec<String>>>) -> Result<FiniteGroup, ProblemError> {
    match (cyclic, elements, table) {
        (Some(n), None, None) => {
            if *n == 0 {
                return Err(ProblemError::Semantic("cyclic group order must be positive".into()));
            }
            Ok(FiniteGroup::cyclic(*n))
        }
        (None, Some(names), Some(rows)) => {
            let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
            if index.len() != names.len() {
                return Err(ProblemError::Semantic("duplicate group element names".into()));
            }
            let mut tbl = Vec::new();
            for row in rows {
                let mut r = Vec::new();
                for cell in row {
                    let &i = index
                        .get(cell.as_str())
                        .ok_or_else(|| ProblemError::Semantic(format!("unknown element {:?} in table", cell)))?;
                    r.push(i);
                }
                tbl.push(r);
            }
            FiniteGroup::from_table(names.clone(), tbl).map_err(|e| ProblemError::Semantic(e.to_string()))
        }
        _ => Err(ProblemError::Semantic(
            "constant group needs either \"cyclic\" or both \"elements\" and \"table\"".into(),
        )),
    }
}

pub fn build_group_spec(def: &GroupDef) -> Result<SupergroupSpec, ProblemError> {
    match def {
        GroupDef::OddAdditive => Ok(SupergroupSpec::OddAdditive),
        GroupDef::Frobenius1 => Ok(SupergroupSpec::FrobeniusKernelHeight1),
        GroupDef::Constant { cyclic, elements, table } => {
            Ok(SupergroupSpec::ConstantGroup(build_finite_group(cyclic, elements, table)?))
        }
        GroupDef::Product { factors } => {
            let specs = factors.iter().map(build_group_spec).collect::<Result<Vec<_>, _>>()?;
            Ok(SupergroupSpec::Product(specs))
        }
    }
}

fn parse_over(pres: &Arc<Presentation>, text: &str, what: &str) -> Result<Polynomial, ProblemError> {
    parse_polynomial(pres, text).map_err(|e| ProblemError::Semantic(format!("{}: {:?}: {}", what, text, e)))
}

fn every_gen(pres: &Presentation) -> Vec<GenRef> {
    let mut v = pres.variable_gens();
    for (b, block) in pres.blocks().iter().enumerate() {
        for l in 0..block.labels.len() {
            v.push(GenRef::Label(b, l));
        }
    }
    v
}

/// Images keyed by generator name (labels included); every generator must
/// appear exactly once and no unknown keys are accepted.
fn image_table(
    space: &Arc<Presentation>,
    target: &Arc<Presentation>,
    images: &BTreeMap<String, String>,
    what: &str,
) -> Result<GenTable<Polynomial>, ProblemError> {
    for name in images.keys() {
        if space.find(name).is_none() {
            return Err(ProblemError::Semantic(format!("{}: unknown generator {:?}", what, name)));
        }
    }
    let mut parsed: BTreeMap<String, Polynomial> = BTreeMap::new();
    for g in every_gen(space) {
        let name = space.name_of(g);
        let text = images
            .get(name)
            .ok_or_else(|| ProblemError::Semantic(format!("{}: missing image for generator {:?}", what, name)))?;
        parsed.insert(name.to_string(), parse_over(target, text, what)?);
    }
    Ok(GenTable::build(space, |g| parsed[space.name_of(g)].clone()))
}

pub fn build_problem(p: &ProblemFile) -> Result<BuiltProblem, ProblemError> {
    let field = build_field(&p.field)?;
    let space = build_presentation(&p.algebra, field)?;
    let spec = build_group_spec(&p.group)?;
    let hopf = HopfSuperAlgebra::build(&spec, field).map_err(|e| ProblemError::Semantic(e.to_string()))?;
    let gamma = match &spec {
        SupergroupSpec::ConstantGroup(g) => Some(g.clone()),
        _ => None,
    };
    let coaction = match &p.action {
        ActionDef::Trivial => Coaction::trivial(&space, hopf),
        ActionDef::OddDerivation { images } => {
            if !matches!(p.group, GroupDef::OddAdditive) {
                return Err(ProblemError::Semantic(
                    "odd-derivation actions require the odd-additive group".into(),
                ));
            }
            let table = image_table(&space, &space, images, "derivation image")?;
            let phi = OddDerivation::new(&space, table)?;
            Coaction::from_odd_derivation(&phi)?
        }
        ActionDef::GroupAction { maps } => {
            let gamma = gamma.clone().ok_or_else(|| {
                ProblemError::Semantic("group-action requires a plain constant group".into())
            })?;
            let mut actions = Vec::new();
            for (i, m) in maps.iter().enumerate() {
                let table = image_table(&space, &space, m, &format!("action of element {}", gamma.name(i.min(gamma.order() - 1))))?;
                actions.push(AlgebraMap::new(&space, &space, table).map_err(|e| ProblemError::Semantic(e.to_string()))?);
            }
            Coaction::from_group_action(&space, &gamma, &actions)?
        }
        ActionDef::Explicit { images } => {
            for name in images.keys() {
                if space.find(name).is_none() {
                    return Err(ProblemError::Semantic(format!("explicit action: unknown generator {:?}", name)));
                }
            }
            let gpres = hopf.presentation().clone();
            let mut parsed: BTreeMap<String, TensorElement> = BTreeMap::new();
            for g in space.variable_gens() {
                let name = space.name_of(g);
                let terms = images.get(name).ok_or_else(|| {
                    ProblemError::Semantic(format!("explicit action: missing image for generator {:?}", name))
                })?;
                let mut t = TensorElement::zero(&space, &gpres);
                for term in terms {
                    let l = parse_over(&space, &term.left, "explicit action left factor")?;
                    let r = parse_over(&gpres, &term.right, "explicit action right factor")?;
                    t = t.add(&TensorElement::pure(&l, &r));
                }
                parsed.insert(name.to_string(), t);
            }
            let table = GenTable::build(&space, |g| parsed[space.name_of(g)].clone());
            Coaction::from_explicit(&space, hopf, table)?
        }
    };
    let bounds = Bounds {
        invariants: p.options.invariants_degree.unwrap_or(8),
        freeness: p.options.freeness_bound.unwrap_or(6),
        quotient: p.options.quotient_degree.unwrap_or(6),
    };
    Ok(BuiltProblem { coaction, gamma, bounds })
}

/// The maps are built without morphism validation: the witness verifier
/// performs those checks itself and reports a rejection reason.
pub fn build_witness(w: &WitnessFile, c: &Coaction) -> Result<StabilizerWitness, ProblemError> {
    let field = c.space().field;
    let a = build_presentation(&w.algebra, field)?;
    let point_table = image_table(c.space(), &a, &w.point, "witness point")?;
    let element_table = image_table(c.group().presentation(), &a, &w.element, "witness element")?;
    Ok(StabilizerWitness {
        point: AlgebraMap::from_fn(c.space(), &a, |g| point_table.get(g).clone()),
        element: AlgebraMap::from_fn(c.group().presentation(), &a, |g| element_table.get(g).clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::invariant_slice;

    fn minimal() -> String {
        serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [{"name": "x", "parity": "even"}]},
            "group": {"kind": "constant", "cyclic": 1},
            "action": {"kind": "trivial"}
        })
        .to_string()
    }

    #[test]
    fn minimal_problem_builds() {
        let p = parse_problem_json(&minimal()).unwrap();
        let built = build_problem(&p).unwrap();
        assert_eq!(built.bounds.invariants, 8);
        assert_eq!(invariant_slice(&built.coaction, 2).len(), 1);
    }

    #[test]
    fn unknown_keys_are_schema_errors() {
        let text = minimal().replace("\"action\"", "\"extra\":1,\"action\"");
        assert!(matches!(parse_problem_json(&text), Err(ProblemError::Schema(_))));
    }

    #[test]
    fn wrong_schema_version_rejected() {
        let text = minimal().replace("superq/1", "superq/2");
        assert!(matches!(parse_problem_json(&text), Err(ProblemError::Schema(_))));
    }

    #[test]
    fn duplicate_generator_is_semantic_error() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [
                {"name": "theta", "parity": "odd"},
                {"name": "theta", "parity": "odd"}
            ]},
            "group": {"kind": "odd-additive"},
            "action": {"kind": "trivial"}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        assert!(matches!(build_problem(&p), Err(ProblemError::Semantic(_))));
    }

    #[test]
    fn derivation_problem_round_trip() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [
                {"name": "v1", "parity": "even"},
                {"name": "v2", "parity": "odd"}
            ]},
            "group": {"kind": "odd-additive"},
            "action": {"kind": "odd-derivation", "images": {"v1": "v2", "v2": "0"}},
            "options": {"invariants_degree": 10}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        let reserialized = serde_json::to_string(&p).unwrap();
        let p2 = parse_problem_json(&reserialized).unwrap();
        let built = build_problem(&p2).unwrap();
        assert_eq!(built.bounds.invariants, 10);
        assert_eq!(invariant_slice(&built.coaction, 3).len(), 1);
    }

    #[test]
    fn phi_square_failure_is_reported() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [
                {"name": "x", "parity": "even"},
                {"name": "theta", "parity": "odd"}
            ]},
            "group": {"kind": "odd-additive"},
            "action": {"kind": "odd-derivation", "images": {"x": "theta", "theta": "x"}}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        assert!(matches!(build_problem(&p), Err(ProblemError::Coaction(_))));
    }

    #[test]
    fn frobenius_needs_prime_field() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [{"name": "x", "parity": "even"}]},
            "group": {"kind": "frobenius-1"},
            "action": {"kind": "trivial"}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        assert!(matches!(build_problem(&p), Err(ProblemError::Semantic(_))));
    }

    #[test]
    fn explicit_frobenius_translation() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "prime", "p": 5},
            "algebra": {"generators": [{"name": "x", "parity": "even"}]},
            "group": {"kind": "frobenius-1"},
            "action": {"kind": "explicit", "images": {"x": [
                {"left": "x", "right": "1"},
                {"left": "1", "right": "u"}
            ]}}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        let built = build_problem(&p).unwrap();
        assert_eq!(invariant_slice(&built.coaction, 5).len(), 1);
    }

    #[test]
    fn group_action_table_form() {
        let text = serde_json::json!({
            "schema": "superq/1",
            "field": {"kind": "rationals"},
            "algebra": {"generators": [{"name": "theta", "parity": "odd"}]},
            "group": {"kind": "constant", "elements": ["1", "g"], "table": [["1", "g"], ["g", "1"]]},
            "action": {"kind": "group-action", "maps": [
                {"theta": "theta"},
                {"theta": "-theta"}
            ]}
        })
        .to_string();
        let p = parse_problem_json(&text).unwrap();
        let built = build_problem(&p).unwrap();
        assert!(built.gamma.is_some());
        assert_eq!(invariant_slice(&built.coaction, 1).len(), 0);
    }
}
