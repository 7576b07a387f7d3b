//! Quantum circuits for the discrete cosine and sine transforms of types I-IV.
//!
//! Each transform pair is obtained by conjugating the quantum Fourier
//! transform on `n + 1` qubits with a sparse base change, which yields a
//! direct sum of a cosine block and a phased sine block. The crate builds those
//! circuits ([`builders`]), the classical matrices they must equal
//! ([`reference`]), a dense simulator to compare the two ([`simulator`]), and
//! sweeps that report residuals and gate counts ([`verification`]).

pub mod builders;
pub mod circuit;
pub mod error;
pub mod nummat;
pub mod reference;
pub mod simulator;
pub mod verification;

pub use builders::{apply_transform, trig_transform_circuit, variant_circuit, SynthesisParams};
pub use circuit::{gate_count, Circuit, ControlSpec, CostModel, Gate, GateLabel, Mat2, Polarity};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use nummat::{ComplexMatrix, StateVector};
pub use reference::{BaseChangeName, Family, TransformKind, Variant};
pub use simulator::{apply_circuit, circuit_unitary, SimState};
pub use verification::{
    fragment_checks, scaling_table, verify_identity, verify_sweep, FragmentCheck, ScalingRow,
    ScalingTable, Tolerances, VerificationReport,
};
