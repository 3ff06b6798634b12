//! Dimension counts for the polynomial spaces entering the CK extension, and
//! the Fischer decompositions behind them.
//!
//! Over the first `n-1` variables and generators:
//! * `P(a,b,r)`: bidegree `(a,b)`, values of blade degree `r`;
//! * `Q(a,b,r)`: bidegree `(a,b)`, values `f†_n ·` (blade degree `r-1`);
//! * `X(a,b,r) = Ker ∂̃z ∩ P(a,b,r)`, `Y(a,b,r) = Ker ∂̃z† ∩ Q(a,b,r)`;
//! * `HM(a,b,r)`: Hermitean monogenic polynomials on all `n` variables.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::GaussianRational;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{Dirac, SpinorPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    P,
    Q,
    X,
    Y,
    HM,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SpaceKind::P => "P",
            SpaceKind::Q => "Q",
            SpaceKind::X => "X",
            SpaceKind::Y => "Y",
            SpaceKind::HM => "HM",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceDescriptor {
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub kind: SpaceKind,
}

impl SpaceDescriptor {
    pub fn new(kind: SpaceKind, n: usize, r: usize, a: usize, b: usize) -> Self {
        Self { n, r, a, b, kind }
    }

    pub fn validate(&self) -> Result<()> {
        let SpaceDescriptor { n, r, kind, .. } = *self;
        if n < 2 {
            return Err(Error::arg(format!("{kind}: n must be at least 2, got {n}")));
        }
        let ok = match kind {
            SpaceKind::P | SpaceKind::X => r < n,
            SpaceKind::Q | SpaceKind::Y => (1..=n).contains(&r),
            SpaceKind::HM => 0 < r && r < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::arg(format!("{kind}: r = {r} out of range for n = {n}")))
        }
    }
}

/// `C(top, k)`, zero outside `0 <= k <= top`.
pub fn binomial(top: i64, k: i64) -> BigUint {
    if k < 0 || top < 0 || k > top {
        return BigUint::zero();
    }
    let k = k.min(top - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((top - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

fn c(top: usize, k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(binomial(top as i64, k as i64)))
}

fn ci(top: i64, k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(binomial(top, k)))
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn to_integer(v: BigRational, what: &str) -> Result<BigUint> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Invariant(format!("{what} evaluated to {v}, not a non-negative integer")));
    }
    Ok(v.to_integer().to_biguint().expect("non-negative"))
}

/// `p_{a,b,r} = C(n-1,r) C(a+n-2,a) C(b+n-2,b)`; zero outside `0 <= r <= n-1`.
fn p_count(n: usize, a: i64, b: i64, r: i64) -> BigRational {
    if a < 0 || b < 0 || r < 0 {
        return BigRational::zero();
    }
    let n = n as i64;
    ci(n - 1, r) * ci(a + n - 2, a) * ci(b + n - 2, b)
}

/// `q_{a,b,r} = C(n-1,r-1) C(a+n-2,a) C(b+n-2,b)`.
fn q_count(n: usize, a: i64, b: i64, r: i64) -> BigRational {
    if a < 0 || b < 0 || r < 1 {
        return BigRational::zero();
    }
    let n = n as i64;
    ci(n - 1, r - 1) * ci(a + n - 2, a) * ci(b + n - 2, b)
}

/// `x_{a,b,r} = r/(a+r) C(n-1,r) C(a+n-1,a) C(b+n-2,b)`. At `a = r = 0` the
/// prefactor is `0/0`; there `∂̃z` vanishes identically and `x = p`.
fn x_count(n: usize, a: i64, b: i64, r: i64) -> BigRational {
    if a < 0 || b < 0 || r < 0 {
        return BigRational::zero();
    }
    if a + r == 0 {
        return p_count(n, a, b, r);
    }
    let n = n as i64;
    q(r, a + r) * ci(n - 1, r) * ci(a + n - 1, a) * ci(b + n - 2, b)
}

/// `y_{a,b,r} = r/(b+n-r) C(n-1,r) C(a+n-2,a) C(b+n-1,b)`. At `b = 0, r = n`
/// the prefactor is `0/0`; there `∂̃z†` vanishes identically and `y = q`.
fn y_count(n: usize, a: i64, b: i64, r: i64) -> BigRational {
    if a < 0 || b < 0 || r < 1 {
        return BigRational::zero();
    }
    let ni = n as i64;
    if b + ni - r == 0 {
        return q_count(n, a, b, r);
    }
    q(r, b + ni - r) * ci(ni - 1, r) * ci(a + ni - 2, a) * ci(b + ni - 1, b)
}

/// `m_{a,b}^{(r)} = (a+b+n) r / ((a+r)(b+n-r)) C(n-1,r) C(a+n-1,a) C(b+n-1,b)`.
fn m_count(n: usize, a: usize, b: usize, r: usize) -> BigRational {
    let (ni, ai, bi, ri) = (n as i64, a as i64, b as i64, r as i64);
    q((ai + bi + ni) * ri, (ai + ri) * (bi + ni - ri)) * c(n - 1, r) * c(a + n - 1, a) * c(b + n - 1, b)
}

/// Closed-form dimension of the described space.
pub fn dim_formula(s: &SpaceDescriptor) -> Result<BigUint> {
    s.validate()?;
    let (n, a, b, r) = (s.n, s.a as i64, s.b as i64, s.r as i64);
    let v = match s.kind {
        SpaceKind::P => p_count(n, a, b, r),
        SpaceKind::Q => q_count(n, a, b, r),
        SpaceKind::X => x_count(n, a, b, r),
        SpaceKind::Y => y_count(n, a, b, r),
        SpaceKind::HM => m_count(n, s.a, s.b, s.r),
    };
    to_integer(v, &format!("dim {}({},{},{}) for n = {n}", s.kind, s.a, s.b, s.r))
}

/// The second closed form for `dim HM`,
/// `(a+b+n)/(a+r) C(b+n-r-1,b) C(b+n-1,r-1) C(a+n-1,a)`.
pub fn dim_m_alt(n: usize, r: usize, a: usize, b: usize) -> Result<BigUint> {
    SpaceDescriptor::new(SpaceKind::HM, n, r, a, b).validate()?;
    let v = q((a + b + n) as i64, (a + r) as i64)
        * c(b + n - r - 1, b)
        * c(b + n - 1, r - 1)
        * c(a + n - 1, a);
    to_integer(v, &format!("alternative dim HM({a},{b},{r}) for n = {n}"))
}

/// `dim HM` as the sum of the initial-data kernels, `Σ_j x_{a,j,r} + Σ_i y_{i,b,r}`.
pub fn dim_m_from_kernels(n: usize, r: usize, a: usize, b: usize) -> Result<BigUint> {
    SpaceDescriptor::new(SpaceKind::HM, n, r, a, b).validate()?;
    let (ai, bi, ri) = (a as i64, b as i64, r as i64);
    let mut v = BigRational::zero();
    for j in 0..=bi {
        v += x_count(n, ai, j, ri);
    }
    for i in 0..=ai {
        v += y_count(n, i, bi, ri);
    }
    to_integer(v, "kernel sum")
}

/// Which Fischer decomposition to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FischerSide {
    /// `P = X ⊕ z̃ X'` for `∂̃z`.
    Dz,
    /// `Q = Y ⊕ z̃† Y'` for `∂̃z†`.
    DzDag,
}

/// Splits `poly` into its `∂̃z`-kernel part and a `z̃ ·` (resp. `z̃† ·`)
/// image part.
///
/// On the `Dz` side `poly` lies in `P(a,b,r)`. On the `DzDag` side it is the
/// scalar-side representative of an element of `Q(a,b,r)`, i.e. it has
/// values of degree `r-1` and stands for `f†_n · poly`.
///
/// The image part is `z̃ ψ / (a+r)` with `ψ = ∂̃z poly`, since
/// `∂̃z z̃ + z̃ ∂̃z` acts on bidegree `(a', ·)`, value degree `r'` as `a'+r'`.
/// The `∂̃z†` mirror uses `∂̃z† z̃† + z̃† ∂̃z† = b' + (n-1) - r'`, which on
/// `∂̃z† poly` (bidegree `(a, b-1)`, degree `r-2`) is `b+n-r`.
pub fn fischer_project(
    poly: &SpinorPoly,
    side: FischerSide,
    a: usize,
    b: usize,
    r: usize,
) -> Result<(SpinorPoly, SpinorPoly)> {
    let n = poly.dim();
    if n < 2 {
        return Err(Error::arg("Fischer decomposition needs n >= 2"));
    }
    if !poly.is_homogeneous_of(a, b) {
        return Err(Error::arg(format!("polynomial is not homogeneous of bidegree ({a},{b})")));
    }
    if poly.mentions_last() {
        return Err(Error::arg("polynomial depends on z_n, z_n^c or f†_n"));
    }
    let (value_degree, denom, op, var) = match side {
        FischerSide::Dz => (r, (a + r) as i64, Dirac::Dz, Var::Z),
        FischerSide::DzDag => {
            if r == 0 {
                return Err(Error::arg("Q-side needs r >= 1"));
            }
            (r - 1, b as i64 + n as i64 - r as i64, Dirac::DzDag, Var::ZDag)
        }
    };
    if !poly.has_pure_value_degree(value_degree) {
        return Err(Error::arg(format!("values are not of pure blade degree {value_degree}")));
    }
    let psi = poly.dirac(op, true);
    if denom == 0 {
        // a = r = 0 or b = 0, r = n: the derivative already vanishes
        debug_assert!(psi.is_zero());
        return Ok((poly.clone(), SpinorPoly::zero(n)));
    }
    let image = psi.mul_var(var, true).scale(&GaussianRational::ratio(1, denom));
    let kernel = poly.sub(&image);
    Ok((kernel, image))
}

/// Recurrence or total-count identity that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceFailure {
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub identity: &'static str,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl fmt::Display for RecurrenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at n={} r={} a={} b={}: {} != {}",
            self.identity, self.n, self.r, self.a, self.b, self.lhs, self.rhs
        )
    }
}

/// Checks `p = x + x'`, `q = y + y'` and `m = Σ x + Σ y` (against both
/// closed forms for `m`) for every `n` in `dims`, `a <= a_max`, `b <= b_max`
/// and every admissible `r`.
pub fn dim_recurrences_check(
    exec: Execution,
    dims: std::ops::RangeInclusive<usize>,
    a_max: usize,
    b_max: usize,
) -> std::result::Result<(), Vec<RecurrenceFailure>> {
    let mut tuples = Vec::new();
    for n in dims.filter(|&n| n >= 2) {
        for r in 0..=n {
            for a in 0..=a_max {
                for b in 0..=b_max {
                    tuples.push((n, r, a, b));
                }
            }
        }
    }
    let failures: Vec<RecurrenceFailure> =
        par::map(exec, &tuples, |&(n, r, a, b)| check_tuple(n, r, a, b)).into_iter().flatten().collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn check_tuple(n: usize, r: usize, a: usize, b: usize) -> Vec<RecurrenceFailure> {
    let mut out = Vec::new();
    let (ai, bi, ri) = (a as i64, b as i64, r as i64);
    let mut check = |identity: &'static str, lhs: BigRational, rhs: BigRational| {
        if lhs != rhs {
            out.push(RecurrenceFailure { n, r, a, b, identity, lhs, rhs });
        }
    };
    if r < n {
        check("p = x + x'", p_count(n, ai, bi, ri), x_count(n, ai, bi, ri) + x_count(n, ai - 1, bi, ri + 1));
    }
    if r >= 1 {
        check("q = y + y'", q_count(n, ai, bi, ri), y_count(n, ai, bi, ri) + y_count(n, ai, bi - 1, ri - 1));
    }
    if 0 < r && r < n {
        let mut sum = BigRational::zero();
        for j in 0..=bi {
            sum += x_count(n, ai, j, ri);
        }
        for i in 0..=ai {
            sum += y_count(n, i, bi, ri);
        }
        let m = m_count(n, a, b, r);
        check("m = sum x + sum y", m.clone(), sum);
        let alt = q((a + b + n) as i64, (a + r) as i64)
            * c(b + n - r - 1, b)
            * c(b + n - 1, r - 1)
            * c(a + n - 1, a);
        check("m = alternative form", m, alt);
    }
    out
}

/// Convenience for callers that want machine integers.
pub fn as_usize(v: &BigUint) -> Option<usize> {
    v.to_usize()
}
