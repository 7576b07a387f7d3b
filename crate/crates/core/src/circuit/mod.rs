//! Gate-list circuit representation.
//!
//! A [`Circuit`] is an ordered list of [`Gate`]s, each a 2x2 unitary on one
//! target qubit, optionally conditioned on any number of control qubits with
//! either polarity. Qubit 0 is the most significant wire.
//!
//! Multiply-controlled gates are kept as single IR entries. The simulator runs
//! them directly, and [`CostModel`] prices them as if they had been expanded
//! into elementary gates.

mod qasm;
mod text;

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::nummat::{ComplexMatrix, I, ONE, ZERO};

pub use qasm::to_qasm3;
pub use text::{format_sig17, parse, serialize};

/// Tolerance used when validating gate payloads.
pub const PAYLOAD_TOL: f64 = 1e-12;

/// Row-major 2x2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [Complex64; 4]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([ONE, ZERO, ZERO, ONE]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([a, b, c, d])
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Mat2([a, ZERO, ZERO, d])
    }

    pub fn hadamard() -> Self {
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Mat2([s, s, s, -s])
    }

    pub fn pauli_x() -> Self {
        Mat2([ZERO, ONE, ONE, ZERO])
    }

    /// `(1/√2) [[1, i], [1, −i]]`
    pub fn b() -> Self {
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Mat2([s, s * I, s, -s * I])
    }

    /// `(1/√2) [[1, −i], [−i, 1]]`
    pub fn j() -> Self {
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Mat2([s, -s * I, -s * I, s])
    }

    /// `diag(1, e^{iθ})`
    pub fn phase(theta: f64) -> Self {
        Mat2::diag(ONE, Complex64::from_polar(1.0, theta))
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.0[2 * r + c]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = rhs.0;
        Mat2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    pub fn dagger(&self) -> Mat2 {
        let [a, b, c, d] = self.0;
        Mat2([a.conj(), c.conj(), b.conj(), d.conj()])
    }

    pub fn transpose(&self) -> Mat2 {
        let [a, b, c, d] = self.0;
        Mat2([a, c, b, d])
    }

    pub fn conj(&self) -> Mat2 {
        Mat2(self.0.map(|z| z.conj()))
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.dagger().mul(self).max_abs_diff(&Mat2::IDENTITY)
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_rows(2, 2, self.0.to_vec()).expect("2x2")
    }
}

/// Symbolic gate name. Labels are informational except where [`GateLabel::payload`]
/// pins a fixed matrix, in which case the payload must agree with it.
#[derive(Clone, Debug, PartialEq)]
pub enum GateLabel {
    H,
    X,
    /// `B = (1/√2)[[1, i], [1, −i]]`
    B,
    /// Transpose of `B`.
    Bt,
    /// Entrywise conjugate of `B`.
    Bbar,
    J,
    /// `diag(1, ω̄)` on the top wire.
    C,
    /// Global phase `e^{πi/4N}`.
    M,
    /// `M · B† · C` merged into one gate.
    MBdgC,
    /// `diag(1, ω^{2^{j−1}})`
    L(u32),
    /// `diag(ω̄^{2^{j−1}}, 1)`
    K(u32),
    Phase(f64),
    Custom(String),
    Dagger(Box<GateLabel>),
}

impl GateLabel {
    pub fn adjoint(&self) -> GateLabel {
        match self {
            GateLabel::H | GateLabel::X => self.clone(),
            GateLabel::Bt => GateLabel::Bbar,
            GateLabel::Bbar => GateLabel::Bt,
            GateLabel::Phase(theta) => GateLabel::Phase(-theta),
            GateLabel::Dagger(inner) => (**inner).clone(),
            other => GateLabel::Dagger(Box::new(other.clone())),
        }
    }

    /// The fixed payload for labels that do not depend on a transform size.
    pub fn payload(&self) -> Option<Mat2> {
        Some(match self {
            GateLabel::H => Mat2::hadamard(),
            GateLabel::X => Mat2::pauli_x(),
            GateLabel::B => Mat2::b(),
            GateLabel::Bt => Mat2::b().transpose(),
            GateLabel::Bbar => Mat2::b().conj(),
            GateLabel::J => Mat2::j(),
            GateLabel::Phase(theta) => Mat2::phase(*theta),
            GateLabel::Dagger(inner) => inner.payload()?.dagger(),
            _ => return None,
        })
    }
}

impl fmt::Display for GateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateLabel::H => f.write_str("H"),
            GateLabel::X => f.write_str("X"),
            GateLabel::B => f.write_str("B"),
            GateLabel::Bt => f.write_str("Bt"),
            GateLabel::Bbar => f.write_str("Bbar"),
            GateLabel::J => f.write_str("J"),
            GateLabel::C => f.write_str("C"),
            GateLabel::M => f.write_str("M"),
            GateLabel::MBdgC => f.write_str("MBdgC"),
            GateLabel::L(j) => write!(f, "L{j}"),
            GateLabel::K(j) => write!(f, "K{j}"),
            GateLabel::Phase(theta) => write!(f, "phase({theta})"),
            GateLabel::Custom(name) => f.write_str(name),
            GateLabel::Dagger(inner) => write!(f, "{inner}_dg"),
        }
    }
}

impl FromStr for GateLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(format!("invalid gate label `{s}`"));
        }
        if let Some(inner) = s.strip_suffix("_dg") {
            return Ok(GateLabel::Dagger(Box::new(inner.parse()?)));
        }
        if let Some(arg) = s.strip_prefix("phase(").and_then(|r| r.strip_suffix(')')) {
            let theta = arg
                .parse::<f64>()
                .map_err(|e| format!("bad phase angle `{arg}`: {e}"))?;
            return Ok(GateLabel::Phase(theta));
        }
        let indexed = |rest: &str| rest.parse::<u32>().ok().filter(|&j| j >= 1);
        Ok(match s {
            "H" => GateLabel::H,
            "X" => GateLabel::X,
            "B" => GateLabel::B,
            "Bt" => GateLabel::Bt,
            "Bbar" => GateLabel::Bbar,
            "J" => GateLabel::J,
            "C" => GateLabel::C,
            "M" => GateLabel::M,
            "MBdgC" => GateLabel::MBdgC,
            _ => match (
                s.strip_prefix('L').and_then(indexed),
                s.strip_prefix('K').and_then(indexed),
            ) {
                (Some(j), _) => GateLabel::L(j),
                (_, Some(j)) => GateLabel::K(j),
                _ => GateLabel::Custom(s.to_string()),
            },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Fires when the control qubit is 1.
    One,
    /// Fires when the control qubit is 0.
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ControlSpec {
    pub qubit: usize,
    pub polarity: Polarity,
}

impl ControlSpec {
    pub fn on_one(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::One,
        }
    }

    pub fn on_zero(qubit: usize) -> Self {
        Self {
            qubit,
            polarity: Polarity::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    pub target: usize,
    pub controls: Vec<ControlSpec>,
    pub payload: Mat2,
    pub label: GateLabel,
}

impl Gate {
    /// Uncontrolled gate whose payload comes from a fixed-matrix label.
    pub fn named(label: GateLabel, target: usize) -> Self {
        let payload = label
            .payload()
            .unwrap_or_else(|| panic!("label {label} has no fixed payload"));
        Self {
            target,
            controls: Vec::new(),
            payload,
            label,
        }
    }

    pub fn custom(label: GateLabel, target: usize, payload: Mat2) -> Self {
        Self {
            target,
            controls: Vec::new(),
            payload,
            label,
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::named(GateLabel::X, target).controlled_by([ControlSpec::on_one(control)])
    }

    pub fn controlled_by(mut self, controls: impl IntoIterator<Item = ControlSpec>) -> Self {
        self.controls.extend(controls);
        self
    }

    pub fn adjoint(&self) -> Gate {
        Gate {
            target: self.target,
            controls: self.controls.clone(),
            payload: self.payload.dagger(),
            label: self.label.adjoint(),
        }
    }

    pub fn num_controls(&self) -> usize {
        self.controls.len()
    }

    /// Checks qubit bounds, control-set well-formedness, payload unitarity and
    /// label/payload agreement.
    pub fn validate(&self, qubits: usize) -> Result<()> {
        let in_range = |q: usize| {
            if q < qubits {
                Ok(())
            } else {
                Err(Error::QubitOutOfRange { qubit: q, qubits })
            }
        };
        in_range(self.target)?;
        let mut seen = vec![false; qubits];
        for c in &self.controls {
            in_range(c.qubit)?;
            if c.qubit == self.target {
                return Err(Error::InvalidControls(format!(
                    "target {} also listed as a control",
                    self.target
                )));
            }
            if std::mem::replace(&mut seen[c.qubit], true) {
                return Err(Error::InvalidControls(format!(
                    "qubit {} listed twice",
                    c.qubit
                )));
            }
        }
        let defect = self.payload.unitarity_defect();
        if defect.is_nan() || defect > PAYLOAD_TOL {
            return Err(Error::NotUnitary(defect));
        }
        if let Some(expect) = self.label.payload() {
            let dev = expect.max_abs_diff(&self.payload);
            if dev > PAYLOAD_TOL {
                return Err(Error::InvalidControls(format!(
                    "payload does not match label {} (deviation {dev:e})",
                    self.label
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    qubits: usize,
    gates: Vec<Gate>,
    name: String,
}

impl Circuit {
    pub fn new(qubits: usize, name: impl Into<String>) -> Self {
        Self {
            qubits,
            gates: Vec::new(),
            name: name.into(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn append_gate(mut self, gate: Gate) -> Result<Self> {
        self.push(gate)?;
        Ok(self)
    }

    /// Appends every gate of `other` (same width) after this circuit's gates.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.qubits != self.qubits {
            return Err(Error::QubitMismatch {
                circuit: self.qubits,
                state: other.qubits,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// Runs `self` first, then `next`; the resulting operator is `next · self`.
    pub fn compose(&self, next: &Circuit) -> Result<Circuit> {
        let mut out = self.clone();
        out.extend(next)?;
        Ok(out)
    }

    /// Reversed gate order with each payload conjugate-transposed.
    pub fn dagger(&self) -> Circuit {
        Circuit {
            qubits: self.qubits,
            gates: self.gates.iter().rev().map(Gate::adjoint).collect(),
            name: dagger_name(&self.name),
        }
    }
}

fn dagger_name(name: &str) -> String {
    match name.strip_suffix("_dg") {
        Some(base) => base.to_string(),
        None => format!("{name}_dg"),
    }
}

pub fn compose(a: &Circuit, b: &Circuit) -> Result<Circuit> {
    a.compose(b)
}

pub fn dagger_circuit(c: &Circuit) -> Circuit {
    c.dagger()
}

/// Per-gate pricing used to turn an IR circuit into an elementary-gate count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CostModel {
    /// Every IR gate costs 1.
    Abstract,
    /// 1 for single-qubit gates, 5 with one control, `16k` with `k >= 2`.
    LinearMcx,
    /// 1 for single-qubit gates, 5 with one control, `8k²` with `k >= 2`.
    QuadraticMcx,
}

impl CostModel {
    pub const ALL: [CostModel; 3] = [
        CostModel::Abstract,
        CostModel::LinearMcx,
        CostModel::QuadraticMcx,
    ];

    pub fn gate_cost(self, gate: &Gate) -> u64 {
        let k = gate.num_controls() as u64;
        match (self, k) {
            (CostModel::Abstract, _) => 1,
            (_, 0) => 1,
            (_, 1) => 5,
            (CostModel::LinearMcx, k) => 16 * k,
            (CostModel::QuadraticMcx, k) => 8 * k * k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CostModel::Abstract => "abstract",
            CostModel::LinearMcx => "linear-mcx",
            CostModel::QuadraticMcx => "quadratic-mcx",
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for CostModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for CostModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CostModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!("unknown cost model `{s}` (expected abstract, linear-mcx or quadratic-mcx)")
            })
    }
}

pub fn gate_count(c: &Circuit, model: CostModel) -> u64 {
    c.gates().iter().map(|g| model.gate_cost(g)).sum()
}
