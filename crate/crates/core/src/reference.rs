//! Classical matrices evaluated entry by entry from their defining formulas.
//!
//! Everything here is built without reference to circuits, so it can serve as
//! the ground truth that synthesized circuits are checked against.
//!
//! Basis ordering: on `n + 1` qubits the ket `|b x⟩` (single bit `b`, `n`-bit
//! integer `x`) has index `b * 2^n + x`, i.e. `b` is the most significant bit.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nummat::{direct_sum, kron, mat_mul, ComplexMatrix, I, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Cosine,
    Sine,
}

/// Transform type. Cosine and sine transforms of one variant share a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    I,
    II,
    III,
    IV,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::I, Variant::II, Variant::III, Variant::IV];

    pub fn name(self) -> &'static str {
        match self {
            Variant::I => "I",
            Variant::II => "II",
            Variant::III => "III",
            Variant::IV => "IV",
        }
    }

    /// Factor multiplying the sine block in the direct sum produced by this
    /// variant's base change.
    ///
    /// Type II uses `-1`: with the base-change matrices `U` and `V` as defined,
    /// the lower block of `U† F V` is real and equals `-S^II`.
    pub fn sine_phase(self) -> Complex64 {
        match self {
            Variant::I => I,
            Variant::II | Variant::III => -ONE,
            Variant::IV => -I,
        }
    }

    /// `(start, len)` of the cosine block inside the `2N`-dimensional space.
    pub fn cosine_block(self, n: u32) -> (usize, usize) {
        let big_n = 1usize << n;
        match self {
            Variant::I => (0, big_n + 1),
            _ => (0, big_n),
        }
    }

    /// `(start, len)` of the sine block inside the `2N`-dimensional space.
    pub fn sine_block(self, n: u32) -> (usize, usize) {
        let big_n = 1usize << n;
        match self {
            Variant::I => (big_n + 1, big_n - 1),
            _ => (big_n, big_n),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" | "1" => Ok(Variant::I),
            "II" | "2" => Ok(Variant::II),
            "III" | "3" => Ok(Variant::III),
            "IV" | "4" => Ok(Variant::IV),
            other => Err(format!(
                "unknown variant `{other}` (expected I, II, III or IV)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransformKind {
    pub family: Family,
    pub variant: Variant,
}

impl TransformKind {
    pub const ALL: [TransformKind; 8] = [
        TransformKind::new(Family::Cosine, Variant::I),
        TransformKind::new(Family::Cosine, Variant::II),
        TransformKind::new(Family::Cosine, Variant::III),
        TransformKind::new(Family::Cosine, Variant::IV),
        TransformKind::new(Family::Sine, Variant::I),
        TransformKind::new(Family::Sine, Variant::II),
        TransformKind::new(Family::Sine, Variant::III),
        TransformKind::new(Family::Sine, Variant::IV),
    ];

    pub const fn new(family: Family, variant: Variant) -> Self {
        Self { family, variant }
    }

    /// Short name such as `dct2` or `dst4`.
    pub fn name(self) -> String {
        let prefix = match self.family {
            Family::Cosine => "dct",
            Family::Sine => "dst",
        };
        let digit = match self.variant {
            Variant::I => 1,
            Variant::II => 2,
            Variant::III => 3,
            Variant::IV => 4,
        };
        format!("{prefix}{digit}")
    }

    /// Side length of the transform matrix for `N = 2^n`.
    pub fn size(self, n: u32) -> usize {
        let big_n = 1usize << n;
        match (self.family, self.variant) {
            (Family::Cosine, Variant::I) => big_n + 1,
            (Family::Sine, Variant::I) => big_n - 1,
            _ => big_n,
        }
    }

    /// Recovers `n` from a vector length, if the length is valid for this kind.
    pub fn n_for_len(self, len: usize) -> Option<u32> {
        let big_n = match (self.family, self.variant) {
            (Family::Cosine, Variant::I) => len.checked_sub(1)?,
            (Family::Sine, Variant::I) => len.checked_add(1)?,
            _ => len,
        };
        (big_n >= 2 && big_n.is_power_of_two()).then(|| big_n.trailing_zeros())
    }

    /// Human-readable description of the accepted lengths.
    pub fn valid_lengths(self) -> &'static str {
        match (self.family, self.variant) {
            (Family::Cosine, Variant::I) => "2^n+1 for n >= 1 (3, 5, 9, 17, ...)",
            (Family::Sine, Variant::I) => "2^n-1 for n >= 1 (1, 3, 7, 15, ...)",
            _ => "2^n for n >= 1 (2, 4, 8, 16, ...)",
        }
    }

    /// `(start, len)` of this kind's block in the variant's direct sum.
    pub fn block(self, n: u32) -> (usize, usize) {
        match self.family {
            Family::Cosine => self.variant.cosine_block(n),
            Family::Sine => self.variant.sine_block(n),
        }
    }

    pub fn block_phase(self) -> Complex64 {
        match self.family {
            Family::Cosine => ONE,
            Family::Sine => self.variant.sine_phase(),
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TransformKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown transform `{s}` (expected dct1..dct4 or dst1..dst4)"))
    }
}

/// The sparse base-change operators and their factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseChangeName {
    /// Type-I base change, `T|1x⟩ = (i|0x⟩ − i|1x'⟩)/√2`.
    T,
    /// Type-IV base change.
    R,
    /// Output-side type-II base change.
    U,
    /// Input-side type-II base change.
    V,
    /// `T` without the two's complement.
    D,
    /// `diag(1, …, 1, i, 1, …)` with `i` at `|1 0⟩`.
    D0,
    /// `diag(1, ω, …, ω^{N−1}, ω̄^N, …, ω̄)`, `ω = exp(2πi/4N)`.
    D1,
    /// Two's complement of `x` when the top bit is set.
    Pi,
    /// One's complement of `x` when the top bit is set.
    Pi1,
    /// Increment of `x` modulo `2^n` when the top bit is set.
    Pi2,
}

impl BaseChangeName {
    pub const ALL: [BaseChangeName; 10] = [
        BaseChangeName::T,
        BaseChangeName::R,
        BaseChangeName::U,
        BaseChangeName::V,
        BaseChangeName::D,
        BaseChangeName::D0,
        BaseChangeName::D1,
        BaseChangeName::Pi,
        BaseChangeName::Pi1,
        BaseChangeName::Pi2,
    ];
}

fn check_n(n: u32) -> Result<usize> {
    if n == 0 || n > 24 {
        return Err(Error::InvalidSize(format!("n must be in 1..=24, got {n}")));
    }
    Ok(1usize << n)
}

/// `exp(2πi k / m)` with `k` reduced modulo `m` first.
pub fn root_of_unity(k: i64, m: u64) -> Complex64 {
    let r = k.rem_euclid(m as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / m as f64)
}

/// `cos(π p / q)` with `p` reduced modulo `2q`.
fn cos_pi(p: u64, q: u64) -> f64 {
    (PI * (p % (2 * q)) as f64 / q as f64).cos()
}

fn sin_pi(p: u64, q: u64) -> f64 {
    (PI * (p % (2 * q)) as f64 / q as f64).sin()
}

/// `ω = exp(2πi / 4N)` raised to the `k`-th power.
fn omega_pow(k: i64, big_n: usize) -> Complex64 {
    root_of_unity(k, 4 * big_n as u64)
}

pub fn dft_matrix(m: usize) -> Result<ComplexMatrix> {
    if m == 0 {
        return Err(Error::InvalidSize("DFT length must be positive".into()));
    }
    let scale = 1.0 / (m as f64).sqrt();
    Ok(ComplexMatrix::from_fn(m, m, |k, l| {
        root_of_unity(((k * l) % m) as i64, m as u64) * scale
    }))
}

/// The orthogonal transform matrix of the given kind for `N = 2^n`.
pub fn trig_matrix(kind: TransformKind, n: u32) -> Result<ComplexMatrix> {
    let big_n = check_n(n)?;
    let nn = big_n as u64;
    let norm = (2.0 / big_n as f64).sqrt();
    let real = |v: f64| Complex64::new(v, 0.0);

    let m = match (kind.family, kind.variant) {
        (_, Variant::III) => {
            return Ok(trig_matrix(TransformKind::new(kind.family, Variant::II), n)?.transpose())
        }
        (Family::Cosine, Variant::I) => {
            let k = |i: usize| {
                if i == 0 || i == big_n {
                    FRAC_1_SQRT_2
                } else {
                    1.0
                }
            };
            ComplexMatrix::from_fn(big_n + 1, big_n + 1, |i, j| {
                real(norm * k(i) * k(j) * cos_pi((i * j) as u64, nn))
            })
        }
        (Family::Sine, Variant::I) => {
            if big_n == 2 {
                // sqrt(2/2) * sin(π/2)
                return ComplexMatrix::from_real_rows(1, 1, &[1.0]);
            }
            ComplexMatrix::from_fn(big_n - 1, big_n - 1, |i, j| {
                real(norm * sin_pi(((i + 1) * (j + 1)) as u64, nn))
            })
        }
        (Family::Cosine, Variant::II) => {
            let k = |i: usize| if i == 0 { FRAC_1_SQRT_2 } else { 1.0 };
            ComplexMatrix::from_fn(big_n, big_n, |i, j| {
                real(norm * k(i) * cos_pi((i * (2 * j + 1)) as u64, 2 * nn))
            })
        }
        (Family::Sine, Variant::II) => {
            let k = |i: usize| if i == big_n - 1 { FRAC_1_SQRT_2 } else { 1.0 };
            ComplexMatrix::from_fn(big_n, big_n, |i, j| {
                real(norm * k(i) * sin_pi(((i + 1) * (2 * j + 1)) as u64, 2 * nn))
            })
        }
        (Family::Cosine, Variant::IV) => ComplexMatrix::from_fn(big_n, big_n, |i, j| {
            real(norm * cos_pi(((2 * i + 1) * (2 * j + 1)) as u64, 4 * nn))
        }),
        (Family::Sine, Variant::IV) => ComplexMatrix::from_fn(big_n, big_n, |i, j| {
            real(norm * sin_pi(((2 * i + 1) * (2 * j + 1)) as u64, 4 * nn))
        }),
    };
    Ok(m)
}

/// `B = (1/√2) [[1, i], [1, −i]]`.
pub fn b_matrix() -> ComplexMatrix {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    ComplexMatrix::from_rows(2, 2, vec![s, s * I, s, -s * I]).expect("2x2")
}

pub fn hadamard_matrix() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(
        2,
        2,
        &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
    )
    .expect("2x2")
}

pub fn base_change_matrix(name: BaseChangeName, n: u32) -> Result<ComplexMatrix> {
    let big_n = check_n(n)?;
    let dim = 2 * big_n;
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let twos = |x: usize| (big_n - x) % big_n;
    let ones = |x: usize| big_n - 1 - x;
    let w = |k: i64| omega_pow(k, big_n);

    let m = match name {
        BaseChangeName::T | BaseChangeName::D => {
            let partner = |x: usize| {
                if name == BaseChangeName::T {
                    twos(x)
                } else {
                    x
                }
            };
            let mut m = ComplexMatrix::zeros(dim, dim);
            m[(0, 0)] = ONE;
            m[(big_n, big_n)] = ONE;
            for x in 1..big_n {
                m[(x, x)] = s;
                m[(big_n + partner(x), x)] = s;
                m[(x, big_n + x)] = I * s;
                m[(big_n + partner(x), big_n + x)] = -I * s;
            }
            m
        }
        BaseChangeName::R => {
            // Row k < N: ω^k at column k, −iω^k at column N+k.
            // Row 2N−1−k: ω̄^{k+1} at column k, iω̄^{k+1} at column N+k.
            let mut m = ComplexMatrix::zeros(dim, dim);
            for k in 0..big_n {
                let wk = w(k as i64);
                let wb = w(-(k as i64) - 1);
                m[(k, k)] = wk * s;
                m[(k, big_n + k)] = -I * wk * s;
                m[(dim - 1 - k, k)] = wb * s;
                m[(dim - 1 - k, big_n + k)] = I * wb * s;
            }
            m
        }
        BaseChangeName::U => {
            let mut m = ComplexMatrix::zeros(dim, dim);
            m[(0, 0)] = ONE;
            m[(big_n, dim - 1)] = -ONE;
            for x in 1..big_n {
                m[(x, x)] = w(-(x as i64)) * s;
                m[(big_n + twos(x), x)] = w(x as i64) * s;
            }
            for y in 0..big_n - 1 {
                let e = (y + 1) as i64;
                m[((y + 1) % big_n, big_n + y)] = -I * w(-e) * s;
                m[(big_n + ones(y), big_n + y)] = I * w(e) * s;
            }
            m
        }
        BaseChangeName::V => {
            let mut m = ComplexMatrix::zeros(dim, dim);
            for k in 0..big_n {
                m[(k, k)] = s;
                m[(k, big_n + k)] = s;
                m[(dim - 1 - k, k)] = s;
                m[(dim - 1 - k, big_n + k)] = -s;
            }
            m
        }
        BaseChangeName::D0 => {
            let mut d = vec![ONE; dim];
            d[big_n] = I;
            ComplexMatrix::diagonal(&d)
        }
        BaseChangeName::D1 => {
            let d: Vec<_> = (0..big_n)
                .map(|x| w(x as i64))
                .chain((0..big_n).map(|x| w(-((big_n - x) as i64))))
                .collect();
            ComplexMatrix::diagonal(&d)
        }
        BaseChangeName::Pi => upper_half_permutation(big_n, twos),
        BaseChangeName::Pi1 => upper_half_permutation(big_n, ones),
        BaseChangeName::Pi2 => upper_half_permutation(big_n, |x| (x + 1) % big_n),
    };
    Ok(m)
}

/// Identity on `|0x⟩`, `|1x⟩ ↦ |1 f(x)⟩`.
fn upper_half_permutation(big_n: usize, f: impl Fn(usize) -> usize) -> ComplexMatrix {
    ComplexMatrix::permutation(
        2 * big_n,
        |j| if j < big_n { j } else { big_n + f(j - big_n) },
    )
}

/// `diag(1, ω^{2^{j−1}})`.
pub fn l_factor(j: u32, n: u32) -> ComplexMatrix {
    let big_n = 1usize << n;
    ComplexMatrix::diagonal(&[ONE, omega_pow(1i64 << (j - 1), big_n)])
}

/// `diag(ω̄^{2^{j−1}}, 1)`.
pub fn k_factor(j: u32, n: u32) -> ComplexMatrix {
    let big_n = 1usize << n;
    ComplexMatrix::diagonal(&[omega_pow(-(1i64 << (j - 1)), big_n), ONE])
}

/// `D1` assembled as `(C ⊗ I_N)(Δ1 ⊕ Δ2)` with `Δ1 = L_n ⊗ … ⊗ L_1` and
/// `Δ2 = K_n ⊗ … ⊗ K_1`.
pub fn d1_from_tensor_factors(n: u32) -> Result<ComplexMatrix> {
    let big_n = check_n(n)?;
    let tensor = |factor: fn(u32, u32) -> ComplexMatrix| {
        (1..n)
            .rev()
            .fold(factor(n, n), |acc, j| kron(&acc, &factor(j, n)))
    };
    let delta1 = tensor(l_factor);
    let delta2 = tensor(k_factor);
    let c = ComplexMatrix::diagonal(&[ONE, omega_pow(-1, big_n)]);
    mat_mul(
        &kron(&c, &ComplexMatrix::identity(big_n)),
        &direct_sum(&delta1, &delta2),
    )
}

/// `A · S` for dense `A` and sparse `S`, computed as `(Sᵗ Aᵗ)ᵗ` so the
/// zero-skipping product does the work.
fn mul_sparse_right(a: &ComplexMatrix, s: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(mat_mul(&s.transpose(), &a.transpose())?.transpose())
}

/// Left-hand side of the DFT base-change identity for `variant`, from
/// matrices alone:
///
/// * I: `T† F_{2N} T`
/// * II: `U† F_{2N} V`
/// * III: `(U† F_{2N} V)†`
/// * IV: `e^{πi/4N} Rᵗ F_{2N} R`
pub fn oracle_product(variant: Variant, n: u32) -> Result<ComplexMatrix> {
    let big_n = check_n(n)?;
    let f = dft_matrix(2 * big_n)?;
    let sandwich = |left: &ComplexMatrix, right: &ComplexMatrix| -> Result<ComplexMatrix> {
        let lf = mat_mul(left, &f)?;
        mul_sparse_right(&lf, right)
    };
    match variant {
        Variant::I => {
            let t = base_change_matrix(BaseChangeName::T, n)?;
            sandwich(&t.dagger(), &t)
        }
        Variant::II => {
            let u = base_change_matrix(BaseChangeName::U, n)?;
            let v = base_change_matrix(BaseChangeName::V, n)?;
            sandwich(&u.dagger(), &v)
        }
        Variant::III => Ok(oracle_product(Variant::II, n)?.dagger()),
        Variant::IV => {
            let r = base_change_matrix(BaseChangeName::R, n)?;
            let phase = root_of_unity(1, 8 * big_n as u64);
            Ok(sandwich(&r.transpose(), &r)?.scale(phase))
        }
    }
}

/// Right-hand side of the identity: cosine block ⊕ phase · sine block.
pub fn expected_direct_sum(variant: Variant, n: u32) -> Result<ComplexMatrix> {
    let c = trig_matrix(TransformKind::new(Family::Cosine, variant), n)?;
    let s = trig_matrix(TransformKind::new(Family::Sine, variant), n)?;
    Ok(direct_sum(&c, &s.scale(variant.sine_phase())))
}

/// Largest modulus outside the cosine and sine diagonal blocks.
pub fn block_leakage(m: &ComplexMatrix, variant: Variant, n: u32) -> f64 {
    let (_, clen) = variant.cosine_block(n);
    let mut worst = 0.0f64;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if (r < clen) != (c < clen) {
                worst = worst.max(m[(r, c)].norm());
            }
        }
    }
    worst
}
