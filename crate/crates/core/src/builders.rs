//! Circuit synthesis for the trigonometric transforms.
//!
//! Every full circuit acts on `n + 1` qubits. Qubit 0 is the extra top wire
//! that splits the `2N`-dimensional space into the `|0x⟩` and `|1x⟩` halves;
//! qubits `1..=n` hold `x`, with qubit `n` the least significant bit.
//!
//! Fragments appear in a circuit in the order they act, which is the reverse
//! of how the corresponding matrix factors are written.

use num_complex::Complex64;

use crate::circuit::{Circuit, ControlSpec, Gate, GateLabel, Mat2};
use crate::error::{Error, Result};
use crate::nummat::{ONE, ZERO};
use crate::reference::{root_of_unity, TransformKind, Variant};
use crate::simulator::apply_to_amplitudes;

/// Largest `n` accepted by the builders.
pub const MAX_N: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SynthesisParams {
    pub n: u32,
    pub kind: TransformKind,
}

impl SynthesisParams {
    pub fn new(kind: TransformKind, n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, kind })
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidSize(format!(
            "n must be in 1..={MAX_N}, got {n}"
        )));
    }
    Ok(())
}

fn lower_wires(n: u32) -> Vec<usize> {
    (1..=n as usize).collect()
}

fn build(qubits: usize, name: String, gates: impl IntoIterator<Item = Gate>) -> Result<Circuit> {
    let mut c = Circuit::new(qubits, name);
    for g in gates {
        c.push(g)?;
    }
    Ok(c)
}

/// `exp(2πi k / 4N)`
fn omega(k: i64, n: u32) -> Complex64 {
    root_of_unity(k, 4u64 << n)
}

/// Textbook QFT on `m` qubits, including the final wire reversal. Each swap is
/// three CNOTs.
pub fn qft_circuit(m: usize) -> Result<Circuit> {
    if m == 0 {
        return Err(Error::InvalidSize("QFT needs at least one qubit".into()));
    }
    build(m, format!("qft_{m}"), qft_gates(m))
}

fn qft_gates(m: usize) -> Vec<Gate> {
    let mut gates = Vec::new();
    for j in 0..m {
        gates.push(Gate::named(GateLabel::H, j));
        for k in j + 1..m {
            let theta = std::f64::consts::PI / (1u64 << (k - j)) as f64;
            gates.push(
                Gate::named(GateLabel::Phase(theta), j).controlled_by([ControlSpec::on_one(k)]),
            );
        }
    }
    for j in 0..m / 2 {
        let (a, b) = (j, m - 1 - j);
        gates.extend([Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)]);
    }
    gates
}

/// `x ↦ x + 1 mod 2^k` on `wires` (most significant first): flip each wire
/// when every less significant wire is 1, starting from the top.
fn increment_gates(wires: &[usize], extra: &[ControlSpec]) -> Vec<Gate> {
    (0..wires.len())
        .map(|i| {
            let controls = wires[i + 1..].iter().map(|&q| ControlSpec::on_one(q));
            Gate::named(GateLabel::X, wires[i])
                .controlled_by(extra.iter().copied())
                .controlled_by(controls)
        })
        .collect()
}

/// The increment permutation `|x⟩ ↦ |x + 1 mod 2^m⟩`.
pub fn increment_circuit(m: usize) -> Result<Circuit> {
    if m == 0 {
        return Err(Error::InvalidSize(
            "increment needs at least one qubit".into(),
        ));
    }
    let wires: Vec<usize> = (0..m).collect();
    build(m, format!("inc_{m}"), increment_gates(&wires, &[]))
}

fn complement_gates(n: u32) -> Vec<Gate> {
    lower_wires(n)
        .into_iter()
        .map(|q| Gate::cnot(0, q))
        .collect()
}

/// `|1x⟩ ↦ |1x'⟩` with `x' = 2^n − x mod 2^n`: one's complement, then increment.
pub fn perm_pi_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    let mut gates = complement_gates(n);
    gates.extend(increment_gates(&lower_wires(n), &[ControlSpec::on_one(0)]));
    build(n as usize + 1, format!("pi_n{n}"), gates)
}

/// `|1x⟩ ↦ |1x̄⟩`
pub fn perm_pi1_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    build(n as usize + 1, format!("pi1_n{n}"), complement_gates(n))
}

/// `|1x⟩ ↦ |1 (x + 1 mod 2^n)⟩`
pub fn perm_pi2_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    build(
        n as usize + 1,
        format!("pi2_n{n}"),
        increment_gates(&lower_wires(n), &[ControlSpec::on_one(0)]),
    )
}

pub fn perm_pi2_inverse_circuit(n: u32) -> Result<Circuit> {
    Ok(perm_pi2_circuit(n)?.dagger())
}

fn all_lower_zero(n: u32) -> impl Iterator<Item = ControlSpec> {
    lower_wires(n).into_iter().map(ControlSpec::on_zero)
}

/// `B` on the top wire, undone by `B†` when `x = 0`.
pub fn d_operator_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    let gates = [
        Gate::named(GateLabel::B, 0),
        Gate::named(GateLabel::B, 0)
            .adjoint()
            .controlled_by(all_lower_zero(n)),
    ];
    build(n as usize + 1, format!("d_n{n}"), gates)
}

/// `Δ1 ⊕ Δ2`: on wire `j` (weight `2^{j−1}`), `L_j` when the top wire is 0 and
/// `K_j` when it is 1.
fn delta_gates(n: u32) -> Vec<Gate> {
    let mut gates = Vec::new();
    for j in 1..=n {
        let wire = (n - j + 1) as usize;
        let e = 1i64 << (j - 1);
        gates.push(
            Gate::custom(GateLabel::L(j), wire, Mat2::diag(ONE, omega(e, n)))
                .controlled_by([ControlSpec::on_zero(0)]),
        );
        gates.push(
            Gate::custom(GateLabel::K(j), wire, Mat2::diag(omega(-e, n), ONE))
                .controlled_by([ControlSpec::on_one(0)]),
        );
    }
    gates
}

fn c_payload(n: u32) -> Mat2 {
    Mat2::diag(ONE, omega(-1, n))
}

/// `D1 = (C ⊗ I)(Δ1 ⊕ Δ2)`.
pub fn d1_diagonal_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    let mut gates = delta_gates(n);
    gates.push(Gate::custom(GateLabel::C, 0, c_payload(n)));
    build(n as usize + 1, format!("d1_n{n}"), gates)
}

/// `D̄0 Dᵗ`: `Bᵗ` on the top wire, then `J` when `x = 0`.
pub fn d0dt_circuit(n: u32) -> Result<Circuit> {
    check_n(n)?;
    let gates = [
        Gate::named(GateLabel::Bt, 0),
        Gate::named(GateLabel::J, 0).controlled_by(all_lower_zero(n)),
    ];
    build(n as usize + 1, format!("d0dt_n{n}"), gates)
}

fn chain(n: u32, name: String, parts: &[Circuit]) -> Result<Circuit> {
    let mut out = Circuit::new(n as usize + 1, name);
    for p in parts {
        out.extend(p)?;
    }
    Ok(out)
}

/// `T = π D`
pub fn t_circuit(n: u32) -> Result<Circuit> {
    chain(
        n,
        format!("t_n{n}"),
        &[d_operator_circuit(n)?, perm_pi_circuit(n)?],
    )
}

/// `R = D1 π1 (B̄ ⊗ I)`
pub fn r_circuit(n: u32) -> Result<Circuit> {
    let bbar = build(
        n as usize + 1,
        "bbar".into(),
        [Gate::named(GateLabel::Bbar, 0)],
    )?;
    chain(
        n,
        format!("r_n{n}"),
        &[bbar, perm_pi1_circuit(n)?, d1_diagonal_circuit(n)?],
    )
}

/// `V = π1 (H ⊗ I)`
pub fn v_circuit(n: u32) -> Result<Circuit> {
    let h = build(n as usize + 1, "h".into(), [Gate::named(GateLabel::H, 0)])?;
    chain(n, format!("v_n{n}"), &[h, perm_pi1_circuit(n)?])
}

/// `U† = π2⁻¹ (D̄0 Dᵗ) π⁻¹ D1`
pub fn u_dagger_circuit(n: u32) -> Result<Circuit> {
    chain(
        n,
        format!("udg_n{n}"),
        &[
            d1_diagonal_circuit(n)?,
            perm_pi_circuit(n)?.dagger(),
            d0dt_circuit(n)?,
            perm_pi2_inverse_circuit(n)?,
        ],
    )
}

/// The full circuit shared by the cosine and sine transform of `variant`.
///
/// * I: `T† F T` as `D, π, QFT, π⁻¹, D†`
/// * II: `U† F V` as `H, π1, QFT, D1, π⁻¹, D̄0Dᵗ, π2⁻¹`
/// * III: the adjoint of the type-II circuit
/// * IV: `e^{πi/4N} Rᵗ F R` as `B̄, π1, D1, QFT, Δ1⊕Δ2, π1, MB†C`
pub fn variant_circuit(variant: Variant, n: u32) -> Result<Circuit> {
    check_n(n)?;
    let qubits = n as usize + 1;
    let qft = qft_circuit(qubits)?;
    let name = format!("variant{variant}_n{n}");
    match variant {
        Variant::I => {
            let t = t_circuit(n)?;
            chain(n, name, &[t.clone(), qft, t.dagger()])
        }
        Variant::II => chain(n, name, &[v_circuit(n)?, qft, u_dagger_circuit(n)?]),
        Variant::III => Ok(variant_circuit(Variant::II, n)?.dagger().with_name(name)),
        Variant::IV => {
            // Rᵗ = (B† ⊗ I) π1 (C ⊗ I)(Δ1 ⊕ Δ2). C is diagonal on the top wire and
            // commutes with the π1 CNOTs, so C, B† and the global phase M fold into
            // one gate at the end.
            let m = root_of_unity(1, 8u64 << n);
            let tail = Mat2::diag(m, m).mul(&Mat2::b().dagger()).mul(&c_payload(n));
            let rt = build(qubits, "rt".into(), delta_gates(n))?;
            let merged = build(
                qubits,
                "mbc".into(),
                [Gate::custom(GateLabel::MBdgC, 0, tail)],
            )?;
            chain(
                n,
                name,
                &[r_circuit(n)?, qft, rt, perm_pi1_circuit(n)?, merged],
            )
        }
    }
}

pub fn trig_transform_circuit(p: SynthesisParams) -> Result<Circuit> {
    Ok(variant_circuit(p.kind.variant, p.n)?.with_name(format!("{}_n{}", p.kind, p.n)))
}

/// Applies the transform `kind` to `x` by simulating its circuit.
///
/// `x` is placed in the kind's block of a `2N`-dimensional state (cosine
/// block first, sine block last), normalized, run through the circuit, and the
/// same block is read back with the normalization and block phase removed.
pub fn apply_transform(kind: TransformKind, x: &[f64]) -> Result<Vec<f64>> {
    let n = kind
        .n_for_len(x.len())
        .ok_or_else(|| Error::InvalidLength {
            kind: kind.name(),
            len: x.len(),
            valid: kind.valid_lengths().into(),
        })?;
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Ok(vec![0.0; x.len()]);
    }
    let circuit = variant_circuit(kind.variant, n)?;
    let (start, len) = kind.block(n);
    let mut amps = vec![ZERO; 2usize << n];
    for (slot, &v) in amps[start..start + len].iter_mut().zip(x) {
        *slot = Complex64::new(v / norm, 0.0);
    }
    let out = apply_to_amplitudes(&circuit, &amps)?;
    let unphase = kind.block_phase().inv() * norm;
    Ok(out[start..start + len]
        .iter()
        .map(|z| (z * unphase).re)
        .collect())
}
