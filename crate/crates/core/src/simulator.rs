//! Dense state-vector execution.
//!
//! Qubit `q` of an `m`-qubit register is bit `m - 1 - q` of the amplitude
//! index, so qubit 0 is the most significant bit.

use rayon::prelude::*;

use crate::circuit::{Circuit, Gate, Polarity};
use crate::error::{Error, Result};
use crate::nummat::{ComplexMatrix, StateVector};
use num_complex::Complex64;

/// Largest register for which [`circuit_unitary`] will build the full matrix.
pub const UNITARY_QUBIT_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct SimState {
    qubits: usize,
    state: StateVector,
}

impl SimState {
    pub fn new(qubits: usize, state: StateVector) -> Result<Self> {
        if state.dim() != 1usize << qubits {
            return Err(Error::InvalidSize(format!(
                "{qubits} qubits need {} amplitudes, got {}",
                1usize << qubits,
                state.dim()
            )));
        }
        Ok(Self { qubits, state })
    }

    pub fn basis(qubits: usize, index: usize) -> Self {
        Self {
            qubits,
            state: StateVector::basis(1 << qubits, index),
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn into_state(self) -> StateVector {
        self.state
    }
}

/// Bit masks for one gate: the target bit, which control bits to test, and the
/// values those bits must take.
struct GateMasks {
    target: usize,
    control_mask: usize,
    control_value: usize,
}

impl GateMasks {
    fn new(gate: &Gate, qubits: usize) -> Self {
        let bit = |q: usize| 1usize << (qubits - 1 - q);
        let mut control_mask = 0;
        let mut control_value = 0;
        for c in &gate.controls {
            control_mask |= bit(c.qubit);
            if c.polarity == Polarity::One {
                control_value |= bit(c.qubit);
            }
        }
        Self {
            target: bit(gate.target),
            control_mask,
            control_value,
        }
    }
}

fn apply_gate(gate: &Gate, masks: &GateMasks, amps: &mut [Complex64]) {
    let [a, b, c, d] = gate.payload.0;
    for lo in 0..amps.len() {
        if lo & masks.target != 0 || lo & masks.control_mask != masks.control_value {
            continue;
        }
        let hi = lo | masks.target;
        let (x0, x1) = (amps[lo], amps[hi]);
        amps[lo] = a * x0 + b * x1;
        amps[hi] = c * x0 + d * x1;
    }
}

fn run(c: &Circuit, amps: &mut [Complex64]) {
    for g in c.gates() {
        apply_gate(g, &GateMasks::new(g, c.qubits()), amps);
    }
}

pub fn apply_circuit(c: &Circuit, s: SimState) -> Result<SimState> {
    if c.qubits() != s.qubits {
        return Err(Error::QubitMismatch {
            circuit: c.qubits(),
            state: s.qubits,
        });
    }
    let mut state = s.state;
    run(c, state.amplitudes_mut());
    Ok(SimState {
        qubits: s.qubits,
        state,
    })
}

/// Convenience wrapper taking and returning raw amplitudes.
pub fn apply_to_amplitudes(c: &Circuit, amps: &[Complex64]) -> Result<Vec<Complex64>> {
    let s = SimState::new(c.qubits(), StateVector::new(amps.to_vec()))?;
    Ok(apply_circuit(c, s)?.into_state().into_amplitudes())
}

/// Full unitary of `c`; column `j` is the image of basis state `j`.
///
/// Columns are simulated independently in parallel, so the result is
/// identical to a sequential extraction.
pub fn circuit_unitary(c: &Circuit) -> Result<ComplexMatrix> {
    if c.qubits() > UNITARY_QUBIT_LIMIT {
        return Err(Error::GuardExceeded {
            qubits: c.qubits(),
            limit: UNITARY_QUBIT_LIMIT,
        });
    }
    let dim = 1usize << c.qubits();
    let masks: Vec<GateMasks> = c
        .gates()
        .iter()
        .map(|g| GateMasks::new(g, c.qubits()))
        .collect();
    let columns: Vec<Vec<Complex64>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let mut amps = StateVector::basis(dim, j).into_amplitudes();
            for (g, m) in c.gates().iter().zip(&masks) {
                apply_gate(g, m, &mut amps);
            }
            amps
        })
        .collect();
    let mut u = ComplexMatrix::zeros(dim, dim);
    for (j, col) in columns.iter().enumerate() {
        u.set_column(j, col);
    }
    Ok(u)
}
