//! Exact-arithmetic engine for finite supergroup actions on supercommutative
//! polynomial superalgebras: coordinate Hopf superalgebras, coactions,
//! invariant rings, freeness certificates, and quotient verification.

pub mod coaction;
pub mod field;
pub mod freeness;
pub mod group;
pub mod hopf;
pub mod invariants;
pub mod linalg;
pub mod maps;
pub mod monomial;
pub mod poly;
pub mod presentation;
pub mod presets;
pub mod problem;
pub mod sample;
pub mod tensor;
pub mod textio;
pub mod unipotent;

pub use coaction::{Coaction, OddDerivation};
pub use field::{FieldSpec, Scalar};
pub use freeness::{check_free, decompose, find_gana_splitting, psi_apply, psi_certify, verify_certificate, verify_free_basis, verify_stabilizer_witness, FreenessProblem, FreenessVerdict, SplittingElement, StabilizerWitness, WitnessOutcome};
pub use group::FiniteGroup;
pub use hopf::{HopfSuperAlgebra, SupergroupSpec};
pub use invariants::{generator_ledger, invariant_slice, GeneratorLedger};
pub use maps::{AlgebraMap, GenTable};
pub use monomial::{koszul_sign, monomial_basis, monomials_up_to, Monomial, Sign};
pub use poly::Polynomial;
pub use presentation::{GenRef, Parity, Presentation, SuperVariable};
pub use presets::{all_presets, preset, preset_names, run_preset, FreenessStatus, Preset, PresetRun};
pub use problem::{build_problem, build_witness, parse_problem_json, parse_witness_json, BuiltProblem, ProblemError, ProblemFile, WitnessFile};
pub use tensor::{Tensor3, TensorElement};
pub use textio::{parse_polynomial, ParseError};
pub use unipotent::{build_u_sigma, bk_subbialgebra_check, filtration_check, max_weight, ShuffleData, USigmaAlgebra};
