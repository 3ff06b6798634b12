//! Cauchy–Kovalevskaya extension of spinor-valued homogeneous polynomials
//! from `C^{n-1}` (where `z_n = z_n^c = 0`) to Hermitean monogenic
//! polynomials on `C^n`.
//!
//! A polynomial of bidegree `(a, b)` with values of blade degree `r` is
//! written as `M = Σ_{i,j} z_n^i/i! (z_n^c)^j/j! (p0[i][j] + f†_n p1[i][j])`
//! where `p0[i][j]`, `p1[i][j]` have bidegree `(a-i, b-j)` and live on the
//! first `n-1` variables and generators. Monogenicity ties the entries
//! together by
//!
//! ```text
//! p0[i][j] =  ∂̃z  p1[i-1][j]      (i >= 1)
//! p1[i][j] = -∂̃z† p0[i][j-1]      (j >= 1)
//! ```
//!
//! so the whole array follows from the top row `p0[0][j]` and the right
//! column `p1[i][0]`, provided `∂̃z p0[0][j] = 0` (needed when `r < n-1`)
//! and `∂̃z† p1[i][0] = 0` (needed when `r > 1`).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{GaussianRational, Generator};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{Dirac, SpinorPoly, Var};

/// Initial data for the general case `0 < r < n`.
///
/// `top_row_0[j]` is `p⁰_{a,b-j}` (values of degree `r`) and
/// `right_col_1[i]` is `p¹_{a-i,b}` (values of degree `r-1`); the factor
/// `f†_n` on the latter is applied by the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkData {
    n: usize,
    r: usize,
    a: usize,
    b: usize,
    top_row_0: Vec<SpinorPoly>,
    right_col_1: Vec<SpinorPoly>,
}

impl CkData {
    pub fn new(
        n: usize,
        r: usize,
        a: usize,
        b: usize,
        top_row_0: Vec<SpinorPoly>,
        right_col_1: Vec<SpinorPoly>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg(format!("CK extension needs n >= 2, got {n}")));
        }
        if r == 0 || r >= n {
            return Err(Error::arg(format!(
                "general case needs 0 < r < n, got r = {r}, n = {n}; use extend_special for r = 0 or r = n"
            )));
        }
        if top_row_0.len() != b + 1 {
            return Err(Error::arg(format!("expected {} top-row polynomials, got {}", b + 1, top_row_0.len())));
        }
        if right_col_1.len() != a + 1 {
            return Err(Error::arg(format!(
                "expected {} right-column polynomials, got {}",
                a + 1,
                right_col_1.len()
            )));
        }
        for (j, p) in top_row_0.iter().enumerate() {
            check_initial(p, n, a, b - j, r, &format!("p0_{{{},{}}}", a, b - j))?;
        }
        for (i, p) in right_col_1.iter().enumerate() {
            check_initial(p, n, a - i, b, r - 1, &format!("p1_{{{},{}}}", a - i, b))?;
        }
        Ok(Self { n, r, a, b, top_row_0, right_col_1 })
    }

    /// All-zero data of the given shape.
    pub fn zero(n: usize, r: usize, a: usize, b: usize) -> Result<Self> {
        Self::new(n, r, a, b, vec![SpinorPoly::zero(n); b + 1], vec![SpinorPoly::zero(n); a + 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn top_row_0(&self) -> &[SpinorPoly] {
        &self.top_row_0
    }

    pub fn right_col_1(&self) -> &[SpinorPoly] {
        &self.right_col_1
    }
}

fn check_initial(p: &SpinorPoly, n: usize, a: usize, b: usize, r: usize, name: &str) -> Result<()> {
    if p.dim() != n {
        return Err(Error::arg(format!("{name}: dimension {} but data has n = {n}", p.dim())));
    }
    if !p.is_homogeneous_of(a, b) {
        return Err(Error::arg(format!("{name}: not homogeneous of bidegree ({a},{b})")));
    }
    if !p.has_pure_value_degree(r) {
        return Err(Error::arg(format!("{name}: values not of pure blade degree {r}")));
    }
    if p.mentions_last() {
        return Err(Error::arg(format!("{name}: depends on z_n, z_n^c or f†_n")));
    }
    Ok(())
}

/// Which exact condition an input failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `∂̃z p⁰_{a,b-j} = 0`
    TopRowDz { j: usize },
    /// `∂̃z† p¹_{a-i,b} = 0`
    RightColDzDag { i: usize },
    /// single-column extension: `∂̃z p⁰ = 0`
    ColumnDz,
    /// single-column extension: `∂̃z† p¹ = 0`
    ColumnDzDag,
    /// truncated series: `∂̃z` on the `(a, b)` component of `F⁰`
    SeriesDz { a: usize, b: usize },
    /// truncated series: `∂̃z†` on the `(a, b)` component of `F¹`
    SeriesDzDag { a: usize, b: usize },
    /// `r = 0` data must be anti-holomorphic
    AntiHolomorphic { j: usize },
    /// `r = n` data must be holomorphic
    Holomorphic { i: usize },
}

/// A failed condition together with the nonzero residual that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub residual: SpinorPoly,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.condition {
            Condition::TopRowDz { j } => write!(f, "∂̃z p0 != 0 on top row entry j = {j}"),
            Condition::RightColDzDag { i } => write!(f, "∂̃z† p1 != 0 on right column entry i = {i}"),
            Condition::ColumnDz => write!(f, "∂̃z p0 != 0"),
            Condition::ColumnDzDag => write!(f, "∂̃z† p1 != 0"),
            Condition::SeriesDz { a, b } => write!(f, "∂̃z F0 != 0 in bidegree ({a},{b})"),
            Condition::SeriesDzDag { a, b } => write!(f, "∂̃z† F1 != 0 in bidegree ({a},{b})"),
            Condition::AntiHolomorphic { j } => write!(f, "entry j = {j} is not anti-holomorphic"),
            Condition::Holomorphic { i } => write!(f, "entry i = {i} is not holomorphic"),
        }?;
        write!(f, " (residual {})", self.residual)
    }
}

/// Compatibility conditions on the initial data. The `∂̃z` family is skipped
/// for `r = n-1` and the `∂̃z†` family for `r = 1`, where they hold
/// automatically.
pub fn check_compatibility(d: &CkData) -> std::result::Result<(), Vec<Violation>> {
    let mut bad = Vec::new();
    if d.r < d.n - 1 {
        for (j, p) in d.top_row_0.iter().enumerate() {
            let res = p.dirac(Dirac::Dz, true);
            if !res.is_zero() {
                bad.push(Violation { condition: Condition::TopRowDz { j }, residual: res });
            }
        }
    }
    if d.r > 1 {
        for (i, p) in d.right_col_1.iter().enumerate() {
            let res = p.dirac(Dirac::DzDag, true);
            if !res.is_zero() {
                bad.push(Violation { condition: Condition::RightColDzDag { i }, residual: res });
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// The filled component array; `p0[i][j]`, `p1[i][j]` have bidegree `(a-i, b-j)`.
#[derive(Clone, Debug)]
pub struct Scheme {
    n: usize,
    pub p0: Vec<Vec<SpinorPoly>>,
    pub p1: Vec<Vec<SpinorPoly>>,
}

impl Scheme {
    /// `Σ z_n^i/i! (z_n^c)^j/j! (p0[i][j] + f†_n p1[i][j])`.
    pub fn assemble(&self) -> SpinorPoly {
        let last = self.n - 1;
        let mut m = SpinorPoly::zero(self.n);
        for (i, (row0, row1)) in self.p0.iter().zip(&self.p1).enumerate() {
            for (j, (q0, q1)) in row0.iter().zip(row1).enumerate() {
                let mut entry = q0.add(&q1.act(Generator::FDag(last)));
                if entry.is_zero() {
                    continue;
                }
                let k = inv_factorial(i) * inv_factorial(j);
                entry = entry
                    .mul_var_power(Var::Z, last, i as u32)
                    .mul_var_power(Var::ZDag, last, j as u32)
                    .scale(&k);
                m.add_assign(&entry);
            }
        }
        m
    }
}

/// Fills the component array from the initial data. Levels `d = i + j` are
/// visited in increasing order; within a level the `p1` entries come first.
pub fn fill_scheme(d: &CkData) -> Result<Scheme> {
    check_compatibility(d).map_err(Error::Incompatible)?;
    let (n, a, b) = (d.n, d.a, d.b);
    let mut p0 = vec![vec![SpinorPoly::zero(n); b + 1]; a + 1];
    let mut p1 = vec![vec![SpinorPoly::zero(n); b + 1]; a + 1];
    for (j, p) in d.top_row_0.iter().enumerate() {
        p0[0][j] = p.clone();
    }
    for (i, p) in d.right_col_1.iter().enumerate() {
        p1[i][0] = p.clone();
    }
    for level in 1..=(a + b) {
        let cells: Vec<(usize, usize)> =
            (0..=a.min(level)).filter(|&i| level - i <= b).map(|i| (i, level - i)).collect();
        for &(i, j) in &cells {
            if j >= 1 {
                p1[i][j] = p0[i][j - 1].dirac(Dirac::DzDag, true).neg();
            }
        }
        for &(i, j) in &cells {
            if i >= 1 {
                p0[i][j] = p1[i - 1][j].dirac(Dirac::Dz, true);
            }
        }
    }
    Ok(Scheme { n, p0, p1 })
}

/// CK extension through the recursive calculation rules.
pub fn extend_scheme(d: &CkData) -> Result<SpinorPoly> {
    Ok(fill_scheme(d)?.assemble())
}

/// Extends a batch of independent data sets.
pub fn extend_batch(exec: Execution, data: &[CkData]) -> Vec<Result<SpinorPoly>> {
    par::map(exec, data, extend_scheme)
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, x| acc * BigInt::from(x))
}

pub(crate) fn inv_factorial(k: usize) -> GaussianRational {
    GaussianRational::real(BigRational::new(BigInt::one(), factorial(k)))
}

/// One application of `z_n ∂̃z f_n + z_n^c ∂̃z† f†_n`.
pub fn ck_step(p: &SpinorPoly) -> SpinorPoly {
    let last = p.dim() - 1;
    let down = p
        .act(Generator::F(last))
        .dirac(Dirac::Dz, true)
        .mul_var_power(Var::Z, last, 1);
    let right = p
        .act(Generator::FDag(last))
        .dirac(Dirac::DzDag, true)
        .mul_var_power(Var::ZDag, last, 1);
    down.add(&right)
}

/// `Σ_{k=0}^{kmax} T^k start / (⌊k/2⌋! (⌊(k+1)/2⌋ + shift)!)` with `T` = [`ck_step`].
fn column_series(start: &SpinorPoly, kmax: usize, shift: usize) -> SpinorPoly {
    let mut out = SpinorPoly::zero(start.dim());
    let mut power = start.clone();
    for k in 0..=kmax {
        if power.is_zero() {
            break;
        }
        let c = inv_factorial(k / 2) * inv_factorial(k.div_ceil(2) + shift);
        out.add_assign(&power.scale(&c));
        if k < kmax {
            power = ck_step(&power);
        }
    }
    out
}

fn check_column(p: &SpinorPoly, a: usize, b: usize, name: &str) -> Result<()> {
    if p.dim() < 2 {
        return Err(Error::arg(format!("{name}: CK extension needs n >= 2")));
    }
    if !p.is_homogeneous_of(a, b) {
        return Err(Error::arg(format!("{name}: not homogeneous of bidegree ({a},{b})")));
    }
    if p.mentions_last() {
        return Err(Error::arg(format!("{name}: depends on z_n, z_n^c or f†_n")));
    }
    Ok(())
}

fn require_kernel(p: &SpinorPoly, op: Dirac, condition: Condition) -> Result<()> {
    let res = p.dirac(op, true);
    if res.is_zero() {
        Ok(())
    } else {
        Err(Error::Incompatible(vec![Violation { condition, residual: res }]))
    }
}

/// Extension of a single top-row datum `p⁰_{a,b}` (all other data zero).
pub fn extend_closed_m0(p0: &SpinorPoly, a: usize, b: usize) -> Result<SpinorPoly> {
    check_column(p0, a, b, "p0")?;
    require_kernel(p0, Dirac::Dz, Condition::ColumnDz)?;
    Ok(column_series(p0, (2 * a + 1).min(2 * b), 0))
}

/// Extension of a single right-column datum `p¹_{a,b}`; the result restricts
/// to `f†_n p¹`.
pub fn extend_closed_m1(p1: &SpinorPoly, a: usize, b: usize) -> Result<SpinorPoly> {
    check_column(p1, a, b, "p1")?;
    require_kernel(p1, Dirac::DzDag, Condition::ColumnDzDag)?;
    let last = p1.dim() - 1;
    Ok(column_series(&p1.act(Generator::FDag(last)), (2 * a).min(2 * b + 1), 0))
}

/// `(-¼ Δ̃)^m p`.
fn neg_quarter_laplacian_pow(p: &SpinorPoly, m: usize) -> SpinorPoly {
    let k = GaussianRational::ratio(-1, 4);
    (0..m).fold(p.clone(), |acc, _| acc.laplacian_tilde().scale(&k))
}

fn place(p: &SpinorPoly, zi: usize, zcj: usize, coeff: &GaussianRational) -> SpinorPoly {
    let last = p.dim() - 1;
    p.mul_var_power(Var::Z, last, zi as u32)
        .mul_var_power(Var::ZDag, last, zcj as u32)
        .scale(coeff)
}

/// The same extension as [`extend_closed_m0`], written through powers of `Δ̃`.
pub fn extend_closed_m0_laplacian(p0: &SpinorPoly, a: usize, b: usize) -> Result<SpinorPoly> {
    check_column(p0, a, b, "p0")?;
    require_kernel(p0, Dirac::Dz, Condition::ColumnDz)?;
    let last = p0.dim() - 1;
    let mut out = SpinorPoly::zero(p0.dim());
    for m in 0..=a.min(b) {
        let c = inv_factorial(m) * inv_factorial(m);
        out.add_assign(&place(&neg_quarter_laplacian_pow(p0, m), m, m, &c));
    }
    if b >= 1 {
        let seed = p0.act(Generator::FDag(last)).dirac(Dirac::DzDag, true);
        for m in 0..=a.min(b - 1) {
            let c = inv_factorial(m) * inv_factorial(m + 1);
            out.add_assign(&place(&neg_quarter_laplacian_pow(&seed, m), m, m + 1, &c));
        }
    }
    Ok(out)
}

/// The same extension as [`extend_closed_m1`], written through powers of `Δ̃`.
pub fn extend_closed_m1_laplacian(p1: &SpinorPoly, a: usize, b: usize) -> Result<SpinorPoly> {
    check_column(p1, a, b, "p1")?;
    require_kernel(p1, Dirac::DzDag, Condition::ColumnDzDag)?;
    let last = p1.dim() - 1;
    let lifted = p1.act(Generator::FDag(last));
    let mut out = SpinorPoly::zero(p1.dim());
    for m in 0..=a.min(b) {
        let c = inv_factorial(m) * inv_factorial(m);
        out.add_assign(&place(&neg_quarter_laplacian_pow(&lifted, m), m, m, &c));
    }
    if a >= 1 {
        let seed = p1.dirac(Dirac::Dz, true);
        for m in 0..=(a - 1).min(b) {
            let c = inv_factorial(m + 1) * inv_factorial(m);
            out.add_assign(&place(&neg_quarter_laplacian_pow(&seed, m), m + 1, m, &c));
        }
    }
    Ok(out)
}

/// CK extension assembled from the closed-form column series.
pub fn extend_full(d: &CkData) -> Result<SpinorPoly> {
    check_compatibility(d).map_err(Error::Incompatible)?;
    let (n, a, b) = (d.n, d.a, d.b);
    let last = n - 1;
    let mut out = SpinorPoly::zero(n);
    for (j, p) in d.top_row_0.iter().enumerate() {
        let series = column_series(p, (2 * a + 1).min(2 * (b - j)), j);
        out.add_assign(&series.mul_var_power(Var::ZDag, last, j as u32));
    }
    for (i, p) in d.right_col_1.iter().enumerate() {
        let lifted = p.act(Generator::FDag(last));
        let series = column_series(&lifted, (2 * (a - i)).min(2 * b + 1), i);
        out.add_assign(&series.mul_var_power(Var::Z, last, i as u32));
    }
    Ok(out)
}

/// Reads off the initial data of a bidegree-`(a, b)` polynomial with values
/// of blade degree `r`: restrictions of its pure `z_n^c`- and `z_n`-derivatives,
/// split along `f†_n`.
pub fn extract_data(m: &SpinorPoly, r: usize, a: usize, b: usize) -> Result<CkData> {
    let n = m.dim();
    if !m.is_homogeneous_of(a, b) {
        return Err(Error::arg(format!("polynomial is not homogeneous of bidegree ({a},{b})")));
    }
    if !m.has_pure_value_degree(r) {
        return Err(Error::arg(format!("values are not of pure blade degree {r}")));
    }
    if n < 2 {
        return Err(Error::arg("CK data needs n >= 2"));
    }
    let last = n - 1;
    let top: Vec<SpinorPoly> = (0..=b)
        .map(|j| m.partial_pow(Var::ZDag, last, j).restrict().split_last().0)
        .collect();
    let right: Vec<SpinorPoly> = (0..=a)
        .map(|i| m.partial_pow(Var::Z, last, i).restrict().split_last().1)
        .collect();
    CkData::new(n, r, a, b, top, right)
}

/// The two value degrees where the splitting along `f†_n` is unavailable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialSide {
    /// `r = 0`: scalar values, monogenic means anti-holomorphic.
    R0,
    /// `r = n`: values in `span(f†_1 … f†_n)`, monogenic means holomorphic.
    Rn,
}

/// Extension for `r = 0` or `r = n`.
///
/// For [`SpecialSide::R0`], `data[j]` is `p_{0,b-j}`; for [`SpecialSide::Rn`],
/// `data[i]` is `p_{a-i,0}`.
pub fn extend_special(data: &[SpinorPoly], side: SpecialSide) -> Result<SpinorPoly> {
    let first = data.first().ok_or_else(|| Error::arg("no initial polynomials given"))?;
    let n = first.dim();
    if n < 2 {
        return Err(Error::arg("CK extension needs n >= 2"));
    }
    let last = n - 1;
    let top = data.len() - 1;
    let (r, forbidden, var) = match side {
        SpecialSide::R0 => (0, Var::Z, Var::ZDag),
        SpecialSide::Rn => (n, Var::ZDag, Var::Z),
    };
    let mut bad = Vec::new();
    let mut out = SpinorPoly::zero(n);
    for (k, p) in data.iter().enumerate() {
        if p.dim() != n {
            return Err(Error::arg("initial polynomials disagree on n"));
        }
        if p.mentions_var(last) {
            return Err(Error::arg(format!("entry {k} depends on z_n or z_n^c")));
        }
        if !p.has_pure_value_degree(r) {
            return Err(Error::arg(format!("entry {k}: values not of blade degree {r}")));
        }
        if (0..n).any(|j| p.mentions_var_of(forbidden, j)) {
            let residual = p.clone();
            bad.push(Violation {
                condition: match side {
                    SpecialSide::R0 => Condition::AntiHolomorphic { j: k },
                    SpecialSide::Rn => Condition::Holomorphic { i: k },
                },
                residual,
            });
            continue;
        }
        let deg = top - k;
        let ok = match side {
            SpecialSide::R0 => p.is_homogeneous_of(0, deg),
            SpecialSide::Rn => p.is_homogeneous_of(deg, 0),
        };
        if !ok {
            return Err(Error::arg(format!("entry {k}: wrong degree, expected {deg}")));
        }
        out.add_assign(&p.mul_var_power(var, last, k as u32).scale(&inv_factorial(k)));
    }
    if !bad.is_empty() {
        return Err(Error::Incompatible(bad));
    }
    Ok(out)
}

/// Extends a truncated power series `F⁰ + f†_n F¹` component by component.
/// Requires `∂̃z F⁰ = 0` and `∂̃z† F¹ = 0`.
pub fn extend_truncated_series(f0: &SpinorPoly, f1: &SpinorPoly, max_degree: usize) -> Result<SpinorPoly> {
    let n = f0.dim();
    if f1.dim() != n {
        return Err(Error::arg("F0 and F1 disagree on n"));
    }
    if n < 2 {
        return Err(Error::arg("CK extension needs n >= 2"));
    }
    for (name, f) in [("F0", f0), ("F1", f1)] {
        if f.mentions_last() {
            return Err(Error::arg(format!("{name} depends on z_n, z_n^c or f†_n")));
        }
        if f.max_total_degree() > max_degree {
            return Err(Error::arg(format!(
                "{name} has total degree {} above the truncation {max_degree}",
                f.max_total_degree()
            )));
        }
    }
    let comps0 = f0.bidegree_components();
    let comps1 = f1.bidegree_components();
    let mut bad = Vec::new();
    for (&(a, b), c) in &comps0 {
        let res = c.dirac(Dirac::Dz, true);
        if !res.is_zero() {
            bad.push(Violation { condition: Condition::SeriesDz { a, b }, residual: res });
        }
    }
    for (&(a, b), c) in &comps1 {
        let res = c.dirac(Dirac::DzDag, true);
        if !res.is_zero() {
            bad.push(Violation { condition: Condition::SeriesDzDag { a, b }, residual: res });
        }
    }
    if !bad.is_empty() {
        return Err(Error::Incompatible(bad));
    }
    let mut out = SpinorPoly::zero(n);
    for (&(a, b), c) in &comps0 {
        out.add_assign(&extend_closed_m0(c, a, b)?);
    }
    for (&(a, b), c) in &comps1 {
        out.add_assign(&extend_closed_m1(c, a, b)?);
    }
    Ok(out)
}

/// Whether both Hermitean Dirac operators annihilate `p`.
pub fn is_h_monogenic(p: &SpinorPoly) -> bool {
    p.dirac(Dirac::Dz, false).is_zero() && p.dirac(Dirac::DzDag, false).is_zero()
}
