//! OpenQASM 3.0 export.
//!
//! Each payload is written as `gphase(α)` followed by `U(θ, φ, λ)`, both
//! carrying the gate's `ctrl @` / `negctrl @` modifiers so that the relative
//! phase of controlled gates is preserved.

use std::fmt::Write as _;

use super::{text::format_sig17, Circuit, Mat2, Polarity};

const EPS: f64 = 1e-14;

/// `(α, θ, φ, λ)` with `u = e^{iα} U(θ, φ, λ)` and
/// `U(θ, φ, λ) = [[cos(θ/2), −e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(φ+λ)} cos(θ/2)]]`.
pub(crate) fn zyz_angles(u: &Mat2) -> (f64, f64, f64, f64) {
    let [u00, u01, u10, u11] = u.0;
    let theta = 2.0 * u10.norm().atan2(u00.norm());
    if u10.norm() < EPS {
        let alpha = u00.arg();
        (alpha, theta, 0.0, u11.arg() - alpha)
    } else if u00.norm() < EPS {
        let alpha = (-u01).arg();
        (alpha, theta, u10.arg() - alpha, 0.0)
    } else {
        let alpha = u00.arg();
        (alpha, theta, u10.arg() - alpha, (-u01).arg() - alpha)
    }
}

pub fn to_qasm3(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "OPENQASM 3.0;").unwrap();
    writeln!(out, "// {}: qubit 0 is the most significant bit", c.name()).unwrap();
    writeln!(out, "qubit[{}] q;", c.qubits()).unwrap();
    for g in c.gates() {
        let (alpha, theta, phi, lambda) = zyz_angles(&g.payload);
        let modifiers: String = g
            .controls
            .iter()
            .map(|ctl| match ctl.polarity {
                Polarity::One => "ctrl @ ",
                Polarity::Zero => "negctrl @ ",
            })
            .collect();
        let controls: Vec<String> = g
            .controls
            .iter()
            .map(|ctl| format!("q[{}]", ctl.qubit))
            .collect();
        writeln!(out, "// {}", g.label).unwrap();
        if alpha.abs() > EPS {
            if controls.is_empty() {
                writeln!(out, "gphase({});", format_sig17(alpha)).unwrap();
            } else {
                writeln!(
                    out,
                    "{modifiers}gphase({}) {};",
                    format_sig17(alpha),
                    controls.join(", ")
                )
                .unwrap();
            }
        }
        let mut operands = controls;
        operands.push(format!("q[{}]", g.target));
        writeln!(
            out,
            "{modifiers}U({}, {}, {}) {};",
            format_sig17(theta),
            format_sig17(phi),
            format_sig17(lambda),
            operands.join(", ")
        )
        .unwrap();
    }
    out
}
