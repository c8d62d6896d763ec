//! superq: invariants, freeness certificates, and quotient verification
//! for finite supergroup actions, driven by JSON problem files.
//!
//! Exit codes: 0 success and all checked properties hold, 1 a verified
//! property fails, 2 invalid input, 3 inconclusive at the given bound.

mod report;

use clap::{Parser, Subcommand};
use report::{Format, Table};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use superq_core::coaction::CoactionError;
use superq_core::freeness::{
    check_free, find_gana_splitting, psi_certify, verify_stabilizer_witness, FreenessProblem,
    FreenessVerdict, WitnessOutcome,
};
use superq_core::invariants::{generator_ledger, invariant_slice};
use superq_core::presets::{preset, preset_names, run_preset, FreenessStatus};
use superq_core::problem::{
    build_problem, build_witness, parse_problem_json, parse_witness_json, BuiltProblem,
    GroupDef, ProblemError, ProblemFile, SCHEMA,
};
use superq_core::sample::{random_polynomial, rng};
use superq_core::unipotent::{bk_subbialgebra_check, build_u_sigma, filtration_check, max_weight, ShuffleData};
use superq_core::{decompose, FieldSpec};

#[derive(Parser)]
#[command(name = "superq", version, about = "Finite supergroup actions on superalgebras: invariants, freeness, quotients")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Seed for randomized verification samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a problem file.
    Describe { problem: PathBuf },
    /// Check the Hopf superalgebra axioms of the problem's group.
    CheckHopf {
        problem: PathBuf,
        /// Restrict the checked basis to this degree (full basis if omitted).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Validate the coaction laws on all monomials up to a degree.
    CheckCoaction {
        problem: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Compute invariant slices with exact bases.
    Invariants {
        problem: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Build the greedy generator ledger of the invariant ring.
    Generators {
        problem: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Decide freeness up to a coefficient-degree bound.
    Freeness {
        problem: PathBuf,
        #[arg(long)]
        bound: Option<u32>,
        /// Stabilizer witness file consulted when the search is inconclusive.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Certify the balanced quotient map degreewise.
    QuotientVerify {
        problem: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Build U_sigma(m|n) and check its axioms, filtration, and B_k chain.
    Unipotent {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// One-based permutation like "1,3,2" (identity if omitted).
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Run a named preset and compare it with its frozen expectations.
    Demo { name: String },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Failure {
        fail(2, e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn emit<T: Serialize + Table>(format: Format, report: &T, code: u8) -> Outcome {
    Ok((report::render(format, report), code))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {}", path.display(), e)))
}

fn load(path: &Path) -> Result<(ProblemFile, BuiltProblem), Failure> {
    let file = parse_problem_json(&read(path)?)?;
    let built = build_problem(&file)?;
    Ok((file, built))
}

fn describe(format: Format, path: &Path) -> Outcome {
    let (file, built) = load(path)?;
    let dim = built.coaction.group().basis(None).len();
    emit(format, &report::Describe::new(&file, dim, built.bounds), 0)
}

fn check_hopf(format: Format, path: &Path, max_degree: Option<u32>) -> Outcome {
    let (_, built) = load(path)?;
    let r = built.coaction.group().check_hopf_axioms(max_degree);
    let passed = r.passes();
    let out = report::Check {
        schema: SCHEMA,
        command: "check-hopf",
        max_degree,
        checked: r.checked,
        passed,
        failures: r
            .failures
            .iter()
            .map(|f| report::Failure { law: f.axiom.to_string(), witness: f.witness.clone() })
            .collect(),
    };
    emit(format, &out, if passed { 0 } else { 1 })
}

fn check_coaction(format: Format, path: &Path, max_degree: u32) -> Outcome {
    let file = parse_problem_json(&read(path)?)?;
    let report_out = |checked: usize, failures: Vec<report::Failure>| {
        let passed = failures.is_empty();
        let out = report::Check { schema: SCHEMA, command: "check-coaction", max_degree: Some(max_degree), checked, passed, failures };
        (out, passed)
    };
    match build_problem(&file) {
        Err(ProblemError::Coaction(CoactionError::Laws(fails))) => {
            let failures = fails
                .iter()
                .map(|f| report::Failure { law: f.law.to_string(), witness: f.witness.clone() })
                .collect();
            let (out, _) = report_out(0, failures);
            emit(format, &out, 1)
        }
        Err(ProblemError::Coaction(e)) => {
            let (out, _) = report_out(0, vec![report::Failure { law: "validation".into(), witness: e.to_string() }]);
            emit(format, &out, 1)
        }
        Err(e) => Err(e.into()),
        Ok(built) => {
            let r = built.coaction.validate_monomials(max_degree);
            let failures = r
                .failures
                .iter()
                .map(|f| report::Failure { law: f.law.to_string(), witness: f.witness.clone() })
                .collect();
            let (out, passed) = report_out(r.checked, failures);
            emit(format, &out, if passed { 0 } else { 1 })
        }
    }
}

fn invariants(format: Format, path: &Path, max_degree: Option<u32>) -> Outcome {
    let (_, built) = load(path)?;
    let top = max_degree.unwrap_or(built.bounds.invariants);
    let slices = (0..=top)
        .map(|d| {
            let basis = invariant_slice(&built.coaction, d);
            report::Slice {
                degree: d,
                dimension: basis.len(),
                basis: basis.iter().map(|p| p.to_string()).collect(),
            }
        })
        .collect();
    emit(format, &report::Invariants { schema: SCHEMA, command: "invariants", max_degree: top, slices }, 0)
}

fn generators(format: Format, path: &Path, max_degree: Option<u32>) -> Outcome {
    let (_, built) = load(path)?;
    let top = max_degree.unwrap_or(built.bounds.invariants);
    let ledger = generator_ledger(&built.coaction, top);
    let entries: Vec<report::LedgerEntry> = ledger
        .entries
        .iter()
        .map(|e| report::LedgerEntry {
            degree: e.degree,
            slice_dimension: e.slice_dim,
            product_rank: e.product_rank,
            new_generators: e.new_generators.iter().map(|g| g.to_string()).collect(),
        })
        .collect();
    let generator_count = ledger.generators().len();
    emit(
        format,
        &report::Generators { schema: SCHEMA, command: "generators", max_degree: top, entries, generator_count },
        0,
    )
}

fn freeness(format: Format, path: &Path, bound: Option<u32>, witness_path: Option<&Path>) -> Outcome {
    let (_, built) = load(path)?;
    let c = &built.coaction;
    let bound = bound.unwrap_or(built.bounds.freeness);
    let problem = FreenessProblem::new(c).map_err(|e| fail(2, e.to_string()))?;
    let verdict = check_free(&problem, bound);

    let witness_outcome = match witness_path {
        None => None,
        Some(p) => {
            let w = build_witness(&parse_witness_json(&read(p)?)?, c)?;
            Some(verify_stabilizer_witness(c, &w))
        }
    };
    let witness = witness_outcome.as_ref().map(|o| match o {
        WitnessOutcome::Confirmed => report::WitnessResult { outcome: "confirmed", reason: None },
        WitnessOutcome::Rejected(r) => report::WitnessResult { outcome: "rejected", reason: Some(r.clone()) },
    });
    let confirmed = matches!(witness_outcome, Some(WitnessOutcome::Confirmed));

    let (status, certificate, code) = match verdict {
        FreenessVerdict::Free(cert) => {
            let memberships = cert
                .memberships
                .iter()
                .map(|m| report::Membership {
                    target: m.target.to_string(),
                    coefficient_degree: m.coefficient_degree,
                    terms: m.combination.len(),
                })
                .collect();
            // A free certificate and a confirmed stabilizer cannot coexist.
            let code = if confirmed { 1 } else { 0 };
            (FreenessStatus::Free, Some(report::Certificate { memberships }), code)
        }
        FreenessVerdict::NotFree(_) => (FreenessStatus::NotFree, None, 1),
        FreenessVerdict::UnknownAtBound(_) => {
            if confirmed {
                (FreenessStatus::NotFree, None, 1)
            } else {
                (FreenessStatus::Unknown, None, 3)
            }
        }
    };
    emit(
        format,
        &report::Freeness { schema: SCHEMA, command: "freeness", bound, status, certificate, witness },
        code,
    )
}

fn quotient_verify(format: Format, path: &Path, max_degree: Option<u32>) -> Outcome {
    let (_, built) = load(path)?;
    let top = max_degree.unwrap_or(built.bounds.quotient);
    let r = psi_certify(&built.coaction, top);
    let code = if r.certified_bijective {
        0
    } else if !r.surjective {
        1
    } else {
        3
    };
    let out = report::Quotient {
        schema: SCHEMA,
        command: "quotient-verify",
        max_degree: top,
        surjective: r.surjective,
        missing_targets: r.missing_targets.clone(),
        image_dimension: r.image_dim,
        balanced_upper_bound: r.balanced_upper_bound,
        certified_bijective: r.certified_bijective,
    };
    emit(format, &out, code)
}

fn unipotent(format: Format, m: usize, n: usize, max_degree: u32, sigma: Option<&str>) -> Outcome {
    let shuffle = match sigma {
        None => ShuffleData::identity(m, n),
        Some(text) => {
            let parsed: Result<Vec<usize>, _> = text.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let values = parsed.map_err(|e| fail(2, format!("sigma: {}", e)))?;
            ShuffleData::new(m, n, values).map_err(|e| fail(2, e.to_string()))?
        }
    };
    let u = build_u_sigma(&shuffle, FieldSpec::Rationals);
    let hopf = u.hopf().check_hopf_axioms(Some(max_degree));
    let filtration = filtration_check(&u, max_degree);
    let bk_levels: Vec<report::BkLevel> = (1..=max_weight(&u))
        .map(|k| {
            let r = bk_subbialgebra_check(&u, k);
            report::BkLevel { level: r.level, generator_count: r.generator_count, passed: r.passes() }
        })
        .collect();
    let passed = hopf.passes() && filtration.passes() && bk_levels.iter().all(|b| b.passed);
    let out = report::Unipotent {
        schema: SCHEMA,
        command: "unipotent",
        m,
        n,
        sigma: (1..=m + n).map(|i| shuffle.sigma(i)).collect(),
        max_degree,
        hopf: report::CheckSummary {
            checked: hopf.checked,
            passed: hopf.passes(),
            failures: hopf.failures.iter().map(|f| format!("{} at {}", f.axiom, f.witness)).collect(),
        },
        filtration: report::CheckSummary {
            checked: filtration.checked,
            passed: filtration.passes(),
            failures: filtration.failures.clone(),
        },
        bk_levels,
        passed,
    };
    emit(format, &out, if passed { 0 } else { 1 })
}

fn demo(format: Format, name: &str, seed: u64) -> Outcome {
    let Some(p) = preset(name) else {
        return Err(fail(2, format!("unknown preset {:?}; available: {}", name, preset_names().join(", "))));
    };
    let run = run_preset(&p)?;

    // For free odd translations, additionally decompose a few seeded
    // random elements through the splitting element.
    let splitting = if matches!(p.problem.group, GroupDef::OddAdditive) && run.status == FreenessStatus::Free {
        let built = build_problem(&p.problem)?;
        find_gana_splitting(&built.coaction, 4).ok().map(|s| {
            let mut r = rng(seed);
            let samples = 5;
            for _ in 0..samples {
                let h = random_polynomial(&mut r, built.coaction.space(), 4, 3);
                decompose(&built.coaction, &s, &h);
            }
            report::SplittingInfo { z: s.z.to_string(), samples_verified: samples }
        })
    } else {
        None
    };

    let witness = run.witness_outcome.as_ref().map(|o| match o {
        WitnessOutcome::Confirmed => report::WitnessResult { outcome: "confirmed", reason: None },
        WitnessOutcome::Rejected(r) => report::WitnessResult { outcome: "rejected", reason: Some(r.clone()) },
    });
    let psi = run.psi.as_ref().map(|r| report::PsiInfo {
        max_degree: r.max_degree,
        surjective: r.surjective,
        image_dimension: r.image_dim,
        balanced_upper_bound: r.balanced_upper_bound,
        certified_bijective: r.certified_bijective,
    });
    let basis = run.basis.as_ref().map(|b| report::BasisInfo {
        verified: b.verified,
        rows: b
            .rows
            .iter()
            .map(|row| report::BasisRowInfo {
                degree: row.degree,
                space_dimension: row.space_dim,
                predicted_dimension: row.predicted_dim,
                span_rank: row.span_rank,
            })
            .collect(),
    });
    let passed = run.passed();
    let out = report::Demo {
        schema: SCHEMA,
        command: "demo",
        name: run.name.clone(),
        status: run.status,
        slice_dimensions: run.slice_dims.clone(),
        new_generator_counts: run.new_generators.clone(),
        witness,
        psi,
        basis,
        splitting,
        mismatches: run.mismatches.clone(),
        passed,
    };
    emit(format, &out, if passed { 0 } else { 1 })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Describe { problem } => describe(format, problem),
        Command::CheckHopf { problem, max_degree } => check_hopf(format, problem, *max_degree),
        Command::CheckCoaction { problem, max_degree } => check_coaction(format, problem, *max_degree),
        Command::Invariants { problem, max_degree } => invariants(format, problem, *max_degree),
        Command::Generators { problem, max_degree } => generators(format, problem, *max_degree),
        Command::Freeness { problem, bound, witness } => freeness(format, problem, *bound, witness.as_deref()),
        Command::QuotientVerify { problem, max_degree } => quotient_verify(format, problem, *max_degree),
        Command::Unipotent { m, n, max_degree, sigma } => unipotent(format, *m, *n, *max_degree, sigma.as_deref()),
        Command::Demo { name } => demo(format, name, cli.seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            // Tolerate closed pipes (e.g. piping into head).
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{}", text);
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
