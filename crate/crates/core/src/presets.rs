//! Named, self-contained example problems with frozen expectations.
//! Every preset records the dimensions and certificate shapes it must
//! produce; `run_preset` recomputes everything and reports any drift.
//! All presets passing is the main regression gate of the library.

use crate::coaction::Coaction;
use crate::freeness::{
    check_free, psi_certify, verify_free_basis, verify_stabilizer_witness, BasisReport,
    FreenessProblem, FreenessVerdict, PsiReport, WitnessOutcome,
};
use crate::group::FiniteGroup;
use crate::invariants::{generator_ledger, invariant_slice};
use crate::problem::{
    build_problem, build_witness, ActionDef, AlgebraDef, FieldDef, GeneratorDef, GroupDef,
    OptionsDef, ParityDef, ProblemFile, ProblemError, TensorTermDef, WitnessFile, SCHEMA,
};
use crate::textio::parse_polynomial;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessStatus {
    Free,
    NotFree,
    Unknown,
}

impl std::fmt::Display for FreenessStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FreenessStatus::Free => write!(f, "free"),
            FreenessStatus::NotFree => write!(f, "not_free"),
            FreenessStatus::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PsiExpectation {
    pub max_degree: u32,
    pub surjective: bool,
    pub certified_bijective: bool,
}

#[derive(Debug, Clone)]
pub struct BasisExpectation {
    pub basis: Vec<String>,
    pub max_degree: u32,
}

/// Frozen shape of a preset's results: slice dimensions from degree 0,
/// counts of new invariant generators from degree 1, the freeness status,
/// and optional quotient certificates.
#[derive(Debug, Clone)]
pub struct Expected {
    pub status: FreenessStatus,
    pub slice_dims: Vec<usize>,
    pub new_generators: Vec<usize>,
    pub free_basis: Option<BasisExpectation>,
    pub psi: Option<PsiExpectation>,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub problem: ProblemFile,
    pub witness: Option<WitnessFile>,
    pub expected: Expected,
}

fn even(name: &str) -> GeneratorDef {
    GeneratorDef { name: name.into(), parity: ParityDef::Even, power: None }
}

fn odd(name: &str) -> GeneratorDef {
    GeneratorDef { name: name.into(), parity: ParityDef::Odd, power: None }
}

fn algebra(generators: Vec<GeneratorDef>) -> AlgebraDef {
    AlgebraDef { generators }
}

fn images(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn constant_def(gamma: &FiniteGroup) -> GroupDef {
    GroupDef::Constant {
        cyclic: None,
        elements: Some(gamma.names().to_vec()),
        table: Some(
            (0..gamma.order())
                .map(|a| (0..gamma.order()).map(|b| gamma.name(gamma.mul(a, b)).to_string()).collect())
                .collect(),
        ),
    }
}

fn example_3_1() -> Preset {
    Preset {
        name: "example-3-1",
        summary: "odd translation v1 -> v1 + v2 t on K[v1|v2]; invariants need one new generator in every degree and the action has a stabilized point",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Rationals,
            algebra: algebra(vec![even("v1"), odd("v2")]),
            group: GroupDef::OddAdditive,
            action: ActionDef::OddDerivation { images: images(&[("v1", "v2"), ("v2", "0")]) },
            options: OptionsDef { invariants_degree: Some(10), ..OptionsDef::default() },
        },
        witness: Some(WitnessFile {
            schema: SCHEMA.into(),
            algebra: algebra(vec![even("w"), odd("xi")]),
            point: images(&[("v1", "w"), ("v2", "0")]),
            element: images(&[("t", "xi")]),
        }),
        expected: Expected {
            status: FreenessStatus::NotFree,
            slice_dims: vec![1; 11],
            new_generators: vec![1; 10],
            free_basis: None,
            psi: Some(PsiExpectation { max_degree: 3, surjective: false, certified_bijective: false }),
        },
    }
}

fn gana_free() -> Preset {
    Preset {
        name: "gana-free",
        summary: "odd translation theta -> theta + t on K[x|theta]; free with invariants K[x] and basis {1, theta}",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Rationals,
            algebra: algebra(vec![even("x"), odd("theta")]),
            group: GroupDef::OddAdditive,
            action: ActionDef::OddDerivation { images: images(&[("x", "0"), ("theta", "1")]) },
            options: OptionsDef::default(),
        },
        witness: None,
        expected: Expected {
            status: FreenessStatus::Free,
            slice_dims: vec![1; 9],
            new_generators: vec![1, 0, 0, 0, 0, 0, 0, 0],
            free_basis: Some(BasisExpectation { basis: vec!["1".into(), "theta".into()], max_degree: 6 }),
            psi: Some(PsiExpectation { max_degree: 6, surjective: true, certified_bijective: true }),
        },
    }
}

fn frobenius_translation_p5() -> Preset {
    Preset {
        name: "frobenius-translation-p5",
        summary: "height-1 translation x -> x + u on F_5[x]; free with invariants F_5[x^5] and basis {1, x, ..., x^4}",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Prime { p: 5 },
            algebra: algebra(vec![even("x")]),
            group: GroupDef::Frobenius1,
            action: ActionDef::Explicit {
                images: [(
                    "x".to_string(),
                    vec![
                        TensorTermDef { left: "x".into(), right: "1".into() },
                        TensorTermDef { left: "1".into(), right: "u".into() },
                    ],
                )]
                .into_iter()
                .collect(),
            },
            options: OptionsDef { invariants_degree: Some(12), ..OptionsDef::default() },
        },
        witness: None,
        expected: Expected {
            status: FreenessStatus::Free,
            slice_dims: vec![1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0],
            new_generators: vec![0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            free_basis: Some(BasisExpectation {
                basis: vec!["1".into(), "x".into(), "x^2".into(), "x^3".into(), "x^4".into()],
                max_degree: 12,
            }),
            psi: Some(PsiExpectation { max_degree: 6, surjective: true, certified_bijective: true }),
        },
    }
}

fn z2_sign() -> Preset {
    Preset {
        name: "z2-sign",
        summary: "Z/2 acting by -1 on both coordinates of K[x|theta]; invariants generated in degree 2, origin is a stabilized point",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Rationals,
            algebra: algebra(vec![even("x"), odd("theta")]),
            group: GroupDef::Constant { cyclic: Some(2), elements: None, table: None },
            action: ActionDef::GroupAction {
                maps: vec![
                    images(&[("x", "x"), ("theta", "theta")]),
                    images(&[("x", "-x"), ("theta", "-theta")]),
                ],
            },
            options: OptionsDef::default(),
        },
        witness: Some(WitnessFile {
            schema: SCHEMA.into(),
            algebra: algebra(vec![]),
            point: images(&[("x", "0"), ("theta", "0")]),
            element: images(&[("e_0", "0"), ("e_1", "1")]),
        }),
        expected: Expected {
            status: FreenessStatus::NotFree,
            slice_dims: vec![1, 0, 2, 0, 2, 0, 2, 0, 2],
            new_generators: vec![0, 2, 0, 0, 0, 0, 0, 0],
            free_basis: None,
            psi: None,
        },
    }
}

fn z2xz2_sign() -> Preset {
    let gamma = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
    Preset {
        name: "z2xz2-sign",
        summary: "Z/2 x Z/2 acting by independent signs on x and theta in K[x|theta]",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Rationals,
            algebra: algebra(vec![even("x"), odd("theta")]),
            group: constant_def(&gamma),
            action: ActionDef::GroupAction {
                maps: vec![
                    images(&[("x", "x"), ("theta", "theta")]),
                    images(&[("x", "x"), ("theta", "-theta")]),
                    images(&[("x", "-x"), ("theta", "theta")]),
                    images(&[("x", "-x"), ("theta", "-theta")]),
                ],
            },
            options: OptionsDef::default(),
        },
        witness: Some(WitnessFile {
            schema: SCHEMA.into(),
            algebra: algebra(vec![]),
            point: images(&[("x", "0"), ("theta", "0")]),
            element: images(&[("e_00", "0"), ("e_01", "0"), ("e_10", "0"), ("e_11", "1")]),
        }),
        expected: Expected {
            status: FreenessStatus::NotFree,
            slice_dims: vec![1, 0, 1, 0, 1, 0, 1, 0, 1],
            new_generators: vec![0, 1, 0, 0, 0, 0, 0, 0],
            free_basis: None,
            psi: None,
        },
    }
}

fn z2_affine_f2() -> Preset {
    Preset {
        name: "z2-affine-f2",
        summary: "Z/2 translating F_2[x] by x -> x + 1; free with certificate in degree 0, graded invariant slices vanish above 0",
        problem: ProblemFile {
            schema: SCHEMA.into(),
            field: FieldDef::Prime { p: 2 },
            algebra: algebra(vec![even("x")]),
            group: GroupDef::Constant { cyclic: Some(2), elements: None, table: None },
            action: ActionDef::GroupAction {
                maps: vec![images(&[("x", "x")]), images(&[("x", "x + 1")])],
            },
            options: OptionsDef::default(),
        },
        witness: None,
        expected: Expected {
            status: FreenessStatus::Free,
            slice_dims: vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
            new_generators: vec![0; 8],
            free_basis: None,
            psi: None,
        },
    }
}

pub fn all_presets() -> Vec<Preset> {
    vec![example_3_1(), gana_free(), frobenius_translation_p5(), z2_sign(), z2xz2_sign(), z2_affine_f2()]
}

pub fn preset_names() -> Vec<&'static str> {
    all_presets().iter().map(|p| p.name).collect()
}

pub fn preset(name: &str) -> Option<Preset> {
    all_presets().into_iter().find(|p| p.name == name)
}

/// Everything `run_preset` computed, with `mismatches` listing each
/// deviation from the preset's frozen expectations (empty = pass).
#[derive(Debug, Clone)]
pub struct PresetRun {
    pub name: String,
    pub status: FreenessStatus,
    pub slice_dims: Vec<usize>,
    pub new_generators: Vec<usize>,
    pub witness_outcome: Option<WitnessOutcome>,
    pub psi: Option<PsiReport>,
    pub basis: Option<BasisReport>,
    pub mismatches: Vec<String>,
}

impl PresetRun {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn freeness_status(c: &Coaction, bound: u32, witness: Option<&WitnessFile>) -> Result<(FreenessStatus, Option<WitnessOutcome>), ProblemError> {
    let fp = FreenessProblem::new(c).map_err(|e| ProblemError::Semantic(e.to_string()))?;
    match check_free(&fp, bound) {
        FreenessVerdict::Free(_) => Ok((FreenessStatus::Free, None)),
        FreenessVerdict::NotFree(_) => Ok((FreenessStatus::NotFree, None)),
        FreenessVerdict::UnknownAtBound(_) => match witness {
            None => Ok((FreenessStatus::Unknown, None)),
            Some(w) => {
                let sw = build_witness(w, c)?;
                match verify_stabilizer_witness(c, &sw) {
                    WitnessOutcome::Confirmed => Ok((FreenessStatus::NotFree, Some(WitnessOutcome::Confirmed))),
                    r => Ok((FreenessStatus::Unknown, Some(r))),
                }
            }
        },
    }
}

pub fn run_preset(preset: &Preset) -> Result<PresetRun, ProblemError> {
    let built = build_problem(&preset.problem)?;
    let c = &built.coaction;
    let expected = &preset.expected;
    let mut mismatches = Vec::new();

    let monomial_laws = c.validate_monomials(3);
    for f in &monomial_laws.failures {
        mismatches.push(format!("coaction law {} fails at {}", f.law, f.witness));
    }

    let top = (expected.slice_dims.len().max(1) - 1) as u32;
    let slice_dims: Vec<usize> = (0..=top).map(|d| invariant_slice(c, d).len()).collect();
    if slice_dims != expected.slice_dims {
        mismatches.push(format!(
            "invariant slice dimensions {:?} differ from expected {:?}",
            slice_dims, expected.slice_dims
        ));
    }

    let ledger = generator_ledger(c, top);
    let new_generators: Vec<usize> = ledger.entries.iter().map(|e| e.new_generators.len()).collect();
    if new_generators != expected.new_generators {
        mismatches.push(format!(
            "new generator counts {:?} differ from expected {:?}",
            new_generators, expected.new_generators
        ));
    }

    let (status, witness_outcome) = freeness_status(c, built.bounds.freeness, preset.witness.as_ref())?;
    if status != expected.status {
        mismatches.push(format!("freeness status {} differs from expected {}", status, expected.status));
    }
    if let Some(WitnessOutcome::Rejected(reason)) = &witness_outcome {
        mismatches.push(format!("shipped witness rejected: {}", reason));
    }

    let psi = expected.psi.as_ref().map(|exp| {
        let report = psi_certify(c, exp.max_degree);
        if report.surjective != exp.surjective {
            mismatches.push(format!(
                "psi surjectivity through degree {} is {}, expected {}",
                exp.max_degree, report.surjective, exp.surjective
            ));
        }
        if report.certified_bijective != exp.certified_bijective {
            mismatches.push(format!(
                "psi bijectivity certificate through degree {} is {}, expected {}",
                exp.max_degree, report.certified_bijective, exp.certified_bijective
            ));
        }
        report
    });

    let basis = match &expected.free_basis {
        None => None,
        Some(exp) => {
            let mut candidates = Vec::new();
            for text in &exp.basis {
                candidates.push(
                    parse_polynomial(c.space(), text)
                        .map_err(|e| ProblemError::Semantic(format!("basis candidate {:?}: {}", text, e)))?,
                );
            }
            let report = verify_free_basis(c, &candidates, exp.max_degree);
            if !report.verified {
                mismatches.push(format!("free basis not verified through degree {}", exp.max_degree));
            }
            Some(report)
        }
    };

    Ok(PresetRun {
        name: preset.name.to_string(),
        status,
        slice_dims,
        new_generators,
        witness_outcome,
        psi,
        basis,
        mismatches,
    })
}
