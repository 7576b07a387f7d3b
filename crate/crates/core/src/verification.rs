//! End-to-end identity checks and gate-count scaling.

use serde::Serialize;

use crate::builders::{
    d0dt_circuit, d1_diagonal_circuit, d_operator_circuit, increment_circuit, perm_pi1_circuit,
    perm_pi2_circuit, perm_pi_circuit, qft_circuit, r_circuit, t_circuit, u_dagger_circuit,
    v_circuit, variant_circuit,
};
use crate::circuit::{gate_count, Circuit, CostModel};
use crate::error::{Error, Result};
use crate::nummat::{is_permutation, max_abs_diff, ComplexMatrix};
use crate::reference::{
    base_change_matrix, block_leakage, dft_matrix, expected_direct_sum, oracle_product,
    trig_matrix, BaseChangeName, Family, TransformKind, Variant,
};
use crate::simulator::circuit_unitary;

/// Largest `n` for which a full identity check is run.
pub const MAX_VERIFY_N: u32 = 10;
/// Largest `n` accepted by [`scaling_table`].
pub const MAX_COUNT_N: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Bound for the pure matrix identity.
    pub matrix: f64,
    /// Bound for every residual that involves a simulated circuit.
    pub circuit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            matrix: 1e-12,
            circuit: 1e-10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub variant: Variant,
    pub n: u32,
    /// `‖LHS − RHS‖_max` of the base-change identity, matrices only.
    pub matrix_residual: f64,
    /// `‖circuit unitary − LHS‖_max`.
    pub circuit_residual: f64,
    /// Largest off-block entry of the circuit unitary.
    pub block_leakage: f64,
    pub cosine_block_residual: f64,
    pub sine_block_residual: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// One human-readable line.
    pub fn line(&self) -> String {
        format!(
            "variant={:<3} n={:<2} matrix={:.3e} circuit={:.3e} leakage={:.3e} cosine={:.3e} sine={:.3e} {}",
            self.variant.name(),
            self.n,
            self.matrix_residual,
            self.circuit_residual,
            self.block_leakage,
            self.cosine_block_residual,
            self.sine_block_residual,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

pub fn verify_identity(variant: Variant, n: u32, tol: Tolerances) -> Result<VerificationReport> {
    if n == 0 || n > MAX_VERIFY_N {
        return Err(Error::InvalidSize(format!(
            "verification needs 1 <= n <= {MAX_VERIFY_N}, got {n}"
        )));
    }
    let oracle = oracle_product(variant, n)?;
    let expected = expected_direct_sum(variant, n)?;
    let matrix_residual = max_abs_diff(&oracle, &expected)?;

    let unitary = circuit_unitary(&variant_circuit(variant, n)?)?;
    let circuit_residual = max_abs_diff(&unitary, &oracle)?;
    let leakage = block_leakage(&unitary, variant, n);

    let block_residual = |family: Family| -> Result<f64> {
        let kind = TransformKind::new(family, variant);
        let (start, len) = kind.block(n);
        let block = unitary
            .diagonal_block(start, len)
            .scale(kind.block_phase().inv());
        max_abs_diff(&block, &trig_matrix(kind, n)?)
    };
    let cosine_block_residual = block_residual(Family::Cosine)?;
    let sine_block_residual = block_residual(Family::Sine)?;

    let pass = matrix_residual <= tol.matrix
        && [
            circuit_residual,
            leakage,
            cosine_block_residual,
            sine_block_residual,
        ]
        .iter()
        .all(|&r| r <= tol.circuit);
    Ok(VerificationReport {
        variant,
        n,
        matrix_residual,
        circuit_residual,
        block_leakage: leakage,
        cosine_block_residual,
        sine_block_residual,
        pass,
    })
}

/// One circuit fragment compared against its reference matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FragmentCheck {
    pub name: &'static str,
    pub n: u32,
    /// `‖circuit unitary − reference‖_max`.
    pub residual: f64,
    /// For permutation fragments, whether the unitary is a 0/1 permutation
    /// matrix within `1e-13`.
    pub exact_permutation: Option<bool>,
}

/// Simulates every building block at size `n` and compares it with the
/// matrix built directly from its definition.
pub fn fragment_checks(n: u32) -> Result<Vec<FragmentCheck>> {
    if n == 0 || n > MAX_VERIFY_N {
        return Err(Error::InvalidSize(format!(
            "fragment checks need 1 <= n <= {MAX_VERIFY_N}, got {n}"
        )));
    }
    let big_n = 1usize << n;
    let get = |name| base_change_matrix(name, n);
    let d0dt = get(BaseChangeName::D0)?
        .conj()
        .mat_mul(&get(BaseChangeName::D)?.transpose())?;
    let cases: Vec<(&'static str, Circuit, ComplexMatrix, bool)> = vec![
        (
            "qft",
            qft_circuit(n as usize + 1)?,
            dft_matrix(2 * big_n)?,
            false,
        ),
        (
            "increment",
            increment_circuit(n as usize)?,
            ComplexMatrix::permutation(big_n, |x| (x + 1) % big_n),
            true,
        ),
        ("pi", perm_pi_circuit(n)?, get(BaseChangeName::Pi)?, true),
        ("pi1", perm_pi1_circuit(n)?, get(BaseChangeName::Pi1)?, true),
        ("pi2", perm_pi2_circuit(n)?, get(BaseChangeName::Pi2)?, true),
        ("d", d_operator_circuit(n)?, get(BaseChangeName::D)?, false),
        (
            "d1",
            d1_diagonal_circuit(n)?,
            get(BaseChangeName::D1)?,
            false,
        ),
        ("d0bar_dt", d0dt_circuit(n)?, d0dt, false),
        ("t", t_circuit(n)?, get(BaseChangeName::T)?, false),
        ("r", r_circuit(n)?, get(BaseChangeName::R)?, false),
        ("v", v_circuit(n)?, get(BaseChangeName::V)?, false),
        (
            "u_dagger",
            u_dagger_circuit(n)?,
            get(BaseChangeName::U)?.dagger(),
            false,
        ),
    ];
    cases
        .into_iter()
        .map(|(name, circuit, reference, perm)| {
            let u = circuit_unitary(&circuit)?;
            Ok(FragmentCheck {
                name,
                n,
                residual: max_abs_diff(&u, &reference)?,
                exact_permutation: perm.then(|| is_permutation(&u, 1e-13)),
            })
        })
        .collect()
}

/// Gate counts of one variant's circuit at one size under every preset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalingRow {
    pub variant: Variant,
    pub n: u32,
    pub abstract_count: u64,
    pub linear_count: u64,
    pub quadratic_count: u64,
}

impl ScalingRow {
    pub fn count(&self, model: CostModel) -> u64 {
        match model {
            CostModel::Abstract => self.abstract_count,
            CostModel::LinearMcx => self.linear_count,
            CostModel::QuadraticMcx => self.quadratic_count,
        }
    }
}

/// Least-squares fit `count ≈ a n² + b n + c`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticFit {
    pub variant: Variant,
    pub model: CostModel,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `max |fit − count| / count` over the fitted points.
    pub max_relative_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingTable {
    pub rows: Vec<ScalingRow>,
    pub fits: Vec<QuadraticFit>,
}

pub fn scaling_row(variant: Variant, n: u32) -> Result<ScalingRow> {
    let c = variant_circuit(variant, n)?;
    Ok(ScalingRow {
        variant,
        n,
        abstract_count: gate_count(&c, CostModel::Abstract),
        linear_count: gate_count(&c, CostModel::LinearMcx),
        quadratic_count: gate_count(&c, CostModel::QuadraticMcx),
    })
}

/// Counts for every `(variant, n)` pair, sorted by variant then `n`, plus one
/// quadratic fit per variant under `model`. Fits need at least three sizes.
pub fn scaling_table(
    variants: &[Variant],
    n_range: std::ops::RangeInclusive<u32>,
    model: CostModel,
) -> Result<ScalingTable> {
    if *n_range.start() == 0 || *n_range.end() > MAX_COUNT_N || n_range.is_empty() {
        return Err(Error::InvalidSize(format!(
            "count range must lie within 1..={MAX_COUNT_N}, got {}..{}",
            n_range.start(),
            n_range.end()
        )));
    }
    let mut variants = variants.to_vec();
    variants.sort();
    variants.dedup();
    let mut rows = Vec::new();
    let mut fits = Vec::new();
    for &variant in &variants {
        let start = rows.len();
        for n in n_range.clone() {
            rows.push(scaling_row(variant, n)?);
        }
        let points: Vec<(f64, f64)> = rows[start..]
            .iter()
            .map(|r| (r.n as f64, r.count(model) as f64))
            .collect();
        if let Some([a, b, c]) = fit_quadratic(&points) {
            let max_relative_residual = points
                .iter()
                .map(|&(x, y)| ((a * x * x + b * x + c) - y).abs() / y)
                .fold(0.0, f64::max);
            fits.push(QuadraticFit {
                variant,
                model,
                a,
                b,
                c,
                max_relative_residual,
            });
        }
    }
    Ok(ScalingTable { rows, fits })
}

/// Ordinary least squares for `y ≈ a x² + b x + c` via the 3x3 normal
/// equations. `None` with fewer than three distinct abscissae.
pub fn fit_quadratic(points: &[(f64, f64)]) -> Option<[f64; 3]> {
    let mut ata = [[0.0f64; 3]; 3];
    let mut aty = [0.0f64; 3];
    for &(x, y) in points {
        let basis = [x * x, x, 1.0];
        for r in 0..3 {
            aty[r] += basis[r] * y;
            for c in 0..3 {
                ata[r][c] += basis[r] * basis[c];
            }
        }
    }
    solve3(ata, aty)
}

/// Gaussian elimination with partial pivoting.
fn solve3(mut m: [[f64; 3]; 3], mut rhs: [f64; 3]) -> Option<[f64; 3]> {
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for col in 0..3 {
        let pivot = (col..3).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col].abs() <= 1e-12 * scale {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = m[col];
        for row in col + 1..3 {
            let f = m[row][col] / pivot_row[col];
            for (dst, src) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= f * src;
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let tail: f64 = (row + 1..3).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - tail) / m[row][row];
    }
    Some(x)
}

/// Runs [`verify_identity`] over a sweep; results are sorted by variant then `n`.
pub fn verify_sweep(
    variants: &[Variant],
    n_range: std::ops::RangeInclusive<u32>,
    tol: Tolerances,
) -> Result<Vec<VerificationReport>> {
    let mut variants = variants.to_vec();
    variants.sort();
    variants.dedup();
    let mut out = Vec::new();
    for v in variants {
        for n in n_range.clone() {
            out.push(verify_identity(v, n, tol)?);
        }
    }
    Ok(out)
}
