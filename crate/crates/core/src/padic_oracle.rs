//! First-principles numerical oracle for the rank-one Whittaker function on
//! PGL_2 over the p-adic rationals. The Whittaker integral over the unipotent
//! subgroup is evaluated directly as a finite Riemann sum (exact rational
//! group arithmetic, floating-point character values), normalized at the
//! identity, and compared against the closed-form evaluation. Nothing here
//! shares code with the symbolic side beyond the final comparison, so
//! agreement is meaningful evidence.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::root_system::{CartanType, Family, RootSystem};
use crate::whittaker::{self, Rat};
use crate::{Error, Result};

/// Which Bruhat-Iwahori cell of the rank-one group an element lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cell {
    E,
    S,
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::E => write!(f, "e"),
            Cell::S => write!(f, "s"),
        }
    }
}

/// Sign convention for the modular-character factor attached to the torus
/// part. `Decay` is the convention under test; `Growth` is the deliberate
/// flip used as a negative control, which must break the agreement suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaConvention {
    Decay,
    Growth,
}

impl DeltaConvention {
    fn factor(self, z: Rat, p: i64) -> Rat {
        let p = Rat::from_integer(p as i128);
        match self {
            DeltaConvention::Decay => z / p,
            DeltaConvention::Growth => z * p,
        }
    }
}

fn require_prime(p: i64) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Error::Config(format!("p must be a prime >= 2, got {p}")));
    }
    Ok(())
}

fn int_valuation(n: i128, p: i64) -> i64 {
    let p = p as i128;
    let mut n = n.unsigned_abs();
    let mut v = 0;
    while n % p as u128 == 0 {
        n /= p as u128;
        v += 1;
    }
    v
}

/// p-adic valuation of an exact rational; `None` means the input was zero
/// (valuation +infinity).
pub fn valuation(x: &Rat, p: i64) -> Option<i64> {
    if x.numer() == &0 {
        return None;
    }
    Some(int_valuation(*x.numer(), p) - int_valuation(*x.denom(), p))
}

fn rat_prime_power(p: i64, m: i64) -> Rat {
    let base = p as i128;
    if m >= 0 {
        Rat::from_integer(base.pow(m as u32))
    } else {
        Ratio::new(1, base.pow(m.unsigned_abs() as u32))
    }
}

fn rat_to_f64(x: &Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// An invertible 2x2 matrix with exact rational entries, used modulo the
/// center (scalar matrices act trivially on everything computed here).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement2 {
    m: [Rat; 4],
}

impl GroupElement2 {
    pub fn new(entries: [Rat; 4]) -> Result<Self> {
        let g = Self { m: entries };
        if g.det() == Rat::from_integer(0) {
            return Err(Error::Domain("matrix must be invertible".into()));
        }
        Ok(g)
    }

    pub fn from_integers(a: i128, b: i128, c: i128, d: i128) -> Result<Self> {
        Self::new([
            Rat::from_integer(a),
            Rat::from_integer(b),
            Rat::from_integer(c),
            Rat::from_integer(d),
        ])
    }

    pub fn identity() -> Self {
        Self::from_integers(1, 0, 0, 1).expect("identity is invertible")
    }

    /// The Weyl representative `[[0, -1], [1, 0]]`.
    pub fn antidiagonal() -> Self {
        Self::from_integers(0, -1, 1, 0).expect("antidiagonal is invertible")
    }

    pub fn diagonal(a: Rat, d: Rat) -> Result<Self> {
        Self::new([a, Rat::from_integer(0), Rat::from_integer(0), d])
    }

    /// `diag(p^m, 1)`: the torus coweight point used by the oracle sweep.
    pub fn torus_power(p: i64, m: i64) -> Self {
        Self::diagonal(rat_prime_power(p, m), Rat::from_integer(1))
            .expect("prime powers are nonzero")
    }

    /// Upper unipotent `[[1, t], [0, 1]]`.
    pub fn unipotent(t: Rat) -> Self {
        Self {
            m: [
                Rat::from_integer(1),
                t,
                Rat::from_integer(0),
                Rat::from_integer(1),
            ],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Rat {
        self.m[2 * i + j]
    }

    pub fn det(&self) -> Rat {
        self.m[0] * self.m[3] - self.m[1] * self.m[2]
    }

    pub fn mul(&self, other: &GroupElement2) -> GroupElement2 {
        let a = &self.m;
        let b = &other.m;
        GroupElement2 {
            m: [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ],
        }
    }

    pub fn scale(&self, c: Rat) -> Result<GroupElement2> {
        if c == Rat::from_integer(0) {
            return Err(Error::Domain("scalar must be nonzero".into()));
        }
        Ok(GroupElement2 {
            m: [self.m[0] * c, self.m[1] * c, self.m[2] * c, self.m[3] * c],
        })
    }

    /// `w0 * x(t) * self`, expanded directly: rows `(-c, -d)` and
    /// `(a + t c, b + t d)`. The determinant is unchanged.
    fn whittaker_point(&self, t: Rat) -> GroupElement2 {
        let [a, b, c, d] = self.m;
        GroupElement2 {
            m: [-c, -d, a + t * c, b + t * d],
        }
    }
}

/// Valuations of the diagonal (Borel) part of an Iwasawa decomposition
/// `g = b k`, together with the Bruhat-Iwahori cell of the compact part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IwasawaData {
    pub a1: i64,
    pub a2: i64,
    pub cell: Cell,
}

/// Explicit decomposition `g = b k` with `b` upper-triangular and `k`
/// integral with unit determinant; returns `(b, k)` as entry arrays.
fn iwasawa_parts(g: &GroupElement2, p: i64) -> ([Rat; 4], [Rat; 4]) {
    let [a, b, c, d] = g.m;
    let zero = Rat::from_integer(0);
    let one = Rat::from_integer(1);
    let vc = valuation(&c, p);
    let vd = valuation(&d, p);
    let case_one = match (vc, vd) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(vc), Some(vd)) => vc >= vd,
    };
    if case_one {
        // Bottom row d * (c/d, 1); k = [[1, 0], [c/d, 1]].
        let u = c / d;
        let bmat = [a - b * u, b, zero, d];
        let kmat = [one, zero, u, one];
        (bmat, kmat)
    } else {
        // Bottom row c * (1, d/c); k = [[0, 1], [1, d/c]].
        let u = d / c;
        let bmat = [b - a * u, a, zero, c];
        let kmat = [zero, one, one, u];
        (bmat, kmat)
    }
}

/// Iwasawa data of `g` relative to the prime `p`: `a1 = v(b_11)`,
/// `a2 = v(b_22)`, and the cell is `e` exactly when the lower-left entry
/// of the compact part has valuation at least 1.
pub fn iwasawa_decompose(g: &GroupElement2, p: i64) -> Result<IwasawaData> {
    require_prime(p)?;
    let (bmat, kmat) = iwasawa_parts(g, p);
    let a1 = valuation(&bmat[0], p).expect("b_11 nonzero for invertible g");
    let a2 = valuation(&bmat[3], p).expect("b_22 nonzero for invertible g");
    let cell = match valuation(&kmat[2], p) {
        None => Cell::E,
        Some(v) if v >= 1 => Cell::E,
        Some(_) => Cell::S,
    };
    Ok(IwasawaData { a1, a2, cell })
}

fn check_z(z: Rat) -> Result<()> {
    if z == Rat::from_integer(0) {
        return Err(Error::Config("character parameter z must be nonzero".into()));
    }
    Ok(())
}

/// Convergence window for the integral: |z|^2 < p in the archimedean sense,
/// checked exactly on the rational z.
fn check_window(z: Rat, p: i64) -> Result<()> {
    check_z(z)?;
    let n = z
        .numer()
        .checked_mul(*z.numer())
        .ok_or_else(|| Error::Config("z is out of range".into()))?;
    let d2 = z
        .denom()
        .checked_mul(*z.denom())
        .and_then(|d| d.checked_mul(p as i128))
        .ok_or_else(|| Error::Config("z is out of range".into()))?;
    if n >= d2 {
        return Err(Error::Config(format!(
            "convergence requires |z|^2 < p; got z = {z}, p = {p}"
        )));
    }
    Ok(())
}

fn phi_from_data(data: &IwasawaData, conv: DeltaConvention, z: Rat, p: i64) -> Result<Rat> {
    let value = whittaker::rat_pow(conv.factor(z, p), data.a1 - data.a2)?;
    Ok(match data.cell {
        Cell::E => value,
        Cell::S => -value / Rat::from_integer(p as i128),
    })
}

/// Standard-basis vector of the induced model under the stated convention:
/// `(z/p)^(a1 - a2)` when `g` lies in the cell of `w`, else 0.
pub fn casselman_f_with(
    conv: DeltaConvention,
    w: Cell,
    g: &GroupElement2,
    z: Rat,
    p: i64,
) -> Result<Rat> {
    check_z(z)?;
    let data = iwasawa_decompose(g, p)?;
    if data.cell != w {
        return Ok(Rat::from_integer(0));
    }
    whittaker::rat_pow(conv.factor(z, p), data.a1 - data.a2)
}

pub fn casselman_f(w: Cell, g: &GroupElement2, z: Rat, p: i64) -> Result<Rat> {
    casselman_f_with(DeltaConvention::Decay, w, g, z, p)
}

/// The sign-eigenvector of the induced model: `f_e - p^{-1} f_s`.
pub fn phi_minus_with(conv: DeltaConvention, g: &GroupElement2, z: Rat, p: i64) -> Result<Rat> {
    check_z(z)?;
    let data = iwasawa_decompose(g, p)?;
    phi_from_data(&data, conv, z, p)
}

pub fn phi_minus(g: &GroupElement2, z: Rat, p: i64) -> Result<Rat> {
    phi_minus_with(DeltaConvention::Decay, g, z, p)
}

/// Outcome of one finite Riemann sum, with a stabilization probe: the same
/// sum rerun with the shell floor lowered by one. A stable value means the
/// extra shell contributed nothing (the character oscillation cancels it).
#[derive(Debug, Clone, Copy)]
pub struct JacquetResult {
    pub value: Complex64,
    pub tail_delta: f64,
    pub stabilized: bool,
}

const STABILIZATION_TOL: f64 = 1e-12;

fn jacquet_sum(
    conv: DeltaConvention,
    g: &GroupElement2,
    z: Rat,
    p: i64,
    shell_min: i64,
    depth: i64,
) -> Result<Complex64> {
    if shell_min > depth {
        return Err(Error::Config(format!(
            "shell_min {shell_min} exceeds depth {depth}"
        )));
    }
    let levels = (depth - shell_min) as u32;
    if levels > 24 {
        return Err(Error::Config("integration grid too large".into()));
    }
    let points = (p as u64).pow(levels);
    if points > 100_000_000 {
        return Err(Error::Config("integration grid too large".into()));
    }
    // The additive character conjugate, tabulated on p^shell_min * Z_p / Z_p:
    // conductor Z_p, so only the fractional part j/P matters.
    let period = if shell_min < 0 {
        (p as u64).pow(shell_min.unsigned_abs() as u32)
    } else {
        1
    };
    let table: Vec<Complex64> = (0..period)
        .map(|r| {
            let angle = -2.0 * std::f64::consts::PI * r as f64 / period as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    let step = rat_prime_power(p, shell_min);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..points {
        let t = Rat::from_integer(j as i128) * step;
        let h = g.whittaker_point(t);
        let data = iwasawa_decompose(&h, p)?;
        let phi = phi_from_data(&data, conv, z, p)?;
        if phi != Rat::from_integer(0) {
            acc += table[(j % period) as usize] * rat_to_f64(&phi);
        }
    }
    let weight = rat_to_f64(&rat_prime_power(p, -depth));
    Ok(acc * weight)
}

/// Whittaker integral of the sign-eigenvector against the conjugate additive
/// character, as a finite Riemann sum over representatives of
/// `p^shell_min Z_p / p^depth Z_p` with weight `p^-depth`.
pub fn jacquet_integral_with(
    conv: DeltaConvention,
    g: &GroupElement2,
    z: Rat,
    p: i64,
    shell_min: i64,
    depth: i64,
) -> Result<JacquetResult> {
    require_prime(p)?;
    check_window(z, p)?;
    let value = jacquet_sum(conv, g, z, p, shell_min, depth)?;
    let extended = jacquet_sum(conv, g, z, p, shell_min - 1, depth)?;
    let tail_delta = (extended - value).norm();
    Ok(JacquetResult {
        value,
        tail_delta,
        stabilized: tail_delta < STABILIZATION_TOL,
    })
}

pub fn jacquet_integral(
    g: &GroupElement2,
    z: Rat,
    p: i64,
    shell_min: i64,
    depth: i64,
) -> Result<JacquetResult> {
    jacquet_integral_with(DeltaConvention::Decay, g, z, p, shell_min, depth)
}

fn shell_bounds(m: i64) -> (i64, i64) {
    let depth = m.unsigned_abs() as i64 + 2;
    (-depth, depth)
}

/// Normalized oracle value at the torus point `diag(p^m, 1)` times the Weyl
/// representative of `w`: the raw integral there divided by the raw integral
/// at the identity. Errors if either sum fails to stabilize or the
/// normalizer vanishes.
pub fn oracle_whittaker_with(
    conv: DeltaConvention,
    m: i64,
    w: Cell,
    z: Rat,
    p: i64,
) -> Result<Complex64> {
    if m.unsigned_abs() > 8 {
        return Err(Error::Config(format!("|m| too large for the oracle: {m}")));
    }
    let g = match w {
        Cell::E => GroupElement2::torus_power(p, m),
        Cell::S => GroupElement2::torus_power(p, m).mul(&GroupElement2::antidiagonal()),
    };
    let (shell_min, depth) = shell_bounds(m);
    let raw = jacquet_integral_with(conv, &g, z, p, shell_min, depth)?;
    let norm = jacquet_integral_with(conv, &GroupElement2::identity(), z, p, -2, 2)?;
    if !raw.stabilized || !norm.stabilized {
        return Err(Error::Domain("integral did not stabilize".into()));
    }
    if norm.value.norm() < 1e-12 {
        return Err(Error::Domain("normalizing integral vanished".into()));
    }
    Ok(raw.value / norm.value)
}

pub fn oracle_whittaker(m: i64, w: Cell, z: Rat, p: i64) -> Result<Complex64> {
    oracle_whittaker_with(DeltaConvention::Decay, m, w, z, p)
}

/// Closed-formula value the oracle is compared against: the rank-one
/// evaluation at coweight `m`, Weyl element `w`, specialized at `q = p` and
/// the given `z`.
pub fn formula_value(m: i64, w: Cell, z: Rat, p: i64) -> Result<Rat> {
    let rs = RootSystem::new(CartanType::new(Family::A, 1)?)?;
    let lambda = crate::root_system::Coweight::new(vec![m]);
    let weyl = match w {
        Cell::E => rs.identity(),
        Cell::S => rs.simple_reflection(0)?,
    };
    let value = whittaker::eval_whittaker(&rs, &lambda, &weyl);
    value.specialize(Rat::from_integer(p as i128), &[z])
}

/// One oracle-versus-formula comparison, ready for reporting.
#[derive(Debug, Clone)]
pub struct AgreementRow {
    pub p: i64,
    pub z: Rat,
    pub m: i64,
    pub w: Cell,
    pub oracle: Complex64,
    pub formula: Rat,
    pub abs_err: f64,
    pub pass: bool,
}

pub fn agreement_row_with(
    conv: DeltaConvention,
    m: i64,
    w: Cell,
    z: Rat,
    p: i64,
    tol: f64,
) -> Result<AgreementRow> {
    let oracle = oracle_whittaker_with(conv, m, w, z, p)?;
    let formula = formula_value(m, w, z, p)?;
    let abs_err = (oracle - Complex64::new(rat_to_f64(&formula), 0.0)).norm();
    Ok(AgreementRow {
        p,
        z,
        m,
        w,
        oracle,
        formula,
        abs_err,
        pass: abs_err < tol,
    })
}

pub fn agreement_row(m: i64, w: Cell, z: Rat, p: i64, tol: f64) -> Result<AgreementRow> {
    agreement_row_with(DeltaConvention::Decay, m, w, z, p, tol)
}

/// The full sweep `m in -1..=mmax`, `w in {e, s}` at one `(z, p)`.
pub fn agreement_suite_with(
    conv: DeltaConvention,
    z: Rat,
    p: i64,
    mmax: i64,
    tol: f64,
) -> Result<Vec<AgreementRow>> {
    if mmax < 0 {
        return Err(Error::Config(format!("mmax must be nonnegative, got {mmax}")));
    }
    let mut rows = Vec::new();
    for m in -1..=mmax {
        for w in [Cell::E, Cell::S] {
            rows.push(agreement_row_with(conv, m, w, z, p, tol)?);
        }
    }
    Ok(rows)
}

pub fn agreement_suite(z: Rat, p: i64, mmax: i64, tol: f64) -> Result<Vec<AgreementRow>> {
    agreement_suite_with(DeltaConvention::Decay, z, p, mmax, tol)
}

/// Negative control: reruns the sweep under the flipped modular-character
/// convention and reports whether that run fails somewhere, as it must.
/// Under the flip the integrand grows along deep shells, so a case can die
/// in either of two honest ways: a value disagreement, or a sum whose
/// stabilization probe trips on the amplified rounding noise. Both count.
pub fn delta_flip_control(z: Rat, p: i64, mmax: i64, tol: f64) -> Result<bool> {
    if mmax < 0 {
        return Err(Error::Config(format!("mmax must be nonnegative, got {mmax}")));
    }
    check_window(z, p)?;
    for m in -1..=mmax {
        for w in [Cell::E, Cell::S] {
            match agreement_row_with(DeltaConvention::Growth, m, w, z, p, tol) {
                Err(_) => return Ok(true),
                Ok(row) if !row.pass => return Ok(true),
                Ok(_) => {}
            }
        }
    }
    Ok(false)
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// Deterministic pseudo-random element of the Iwahori subgroup: integral
/// entries, unit diagonal valuations, lower-left entry divisible by p. Such
/// a matrix always has unit determinant valuation.
pub fn pseudo_random_iwahori(p: i64, state: &mut u64) -> GroupElement2 {
    let p128 = p as u128;
    let a = 1 + (xorshift(state) as u128 % (p128 - 1).max(1)) as i128;
    let d = 1 + (xorshift(state) as u128 % (p128 - 1).max(1)) as i128;
    let b = (xorshift(state) as u128 % (p128 * p128)) as i128;
    let c = p as i128 * (xorshift(state) as u128 % p128) as i128;
    GroupElement2::from_integers(a, b, c, d).expect("unit determinant by construction")
}

/// Checks that right translation by pseudo-random Iwahori elements leaves
/// the integral unchanged within `tol`.
pub fn verify_right_iwahori_invariance(
    g: &GroupElement2,
    z: Rat,
    p: i64,
    shell_min: i64,
    depth: i64,
    samples: usize,
    state: &mut u64,
    tol: f64,
) -> Result<bool> {
    let base = jacquet_integral(g, z, p, shell_min, depth)?;
    for _ in 0..samples {
        let j = pseudo_random_iwahori(p, state);
        let moved = jacquet_integral(&g.mul(&j), z, p, shell_min, depth)?;
        if (moved.value - base.value).norm() >= tol {
            return Ok(false);
        }
    }
    Ok(true)
}
