//! Exact linear algebra over the Gaussian rationals, and the brute-force
//! kernel computations used to audit the dimension formulas.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Blade, GaussianRational};
use crate::dims::FischerSide;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{Dirac, Monomial, SpinorPoly};

/// Dense row-major matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::arg("ragged matrix rows"));
        }
        let nrows = rows.len();
        Ok(Self { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for (j, x) in v.iter().enumerate() {
                    let e = self.get(i, j);
                    if !e.is_zero() && !x.is_zero() {
                        acc += &(e * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Exact basis of the right nullspace; its length is `cols - rank`.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        self.echelon().nullspace(self.cols)
    }

    /// Fraction-free forward elimination. Each row is first scaled to
    /// Gaussian integers; every later division is exact in `Z[i]`.
    fn echelon(&self) -> Echelon {
        let mut m: Vec<Vec<GInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator_lcm()));
                row.iter().map(|x| GInt::from_scaled(x, &l)).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = GInt::one();
        let mut top = 0;
        for col in 0..self.cols {
            if top == self.rows {
                break;
            }
            let Some(p) = (top..self.rows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].norm_bits())
            else {
                continue;
            };
            m.swap(top, p);
            let (head, tail) = m.split_at_mut(top + 1);
            let pivot_row = &head[top];
            let piv = pivot_row[col].clone();
            for row in tail.iter_mut() {
                let factor = std::mem::take(&mut row[col]);
                for j in col + 1..self.cols {
                    let t = piv.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                    row[j] = t.exact_div(&prev);
                }
            }
            prev = piv;
            pivots.push(col);
            top += 1;
        }
        Echelon { rows: m, pivots }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

struct Echelon {
    rows: Vec<Vec<GInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn nullspace(&self, cols: usize) -> Vec<Vec<GaussianRational>> {
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; cols];
            for &c in &self.pivots {
                v[c] = true;
            }
            v
        };
        let rows: Vec<Vec<GaussianRational>> = self.rows[..self.pivots.len()]
            .iter()
            .map(|r| r.iter().map(GInt::to_rational).collect())
            .collect();
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = vec![GaussianRational::zero(); cols];
                x[free] = GaussianRational::one();
                for (k, &c) in self.pivots.iter().enumerate().rev() {
                    let mut s = GaussianRational::zero();
                    for j in c + 1..cols {
                        if !x[j].is_zero() && !rows[k][j].is_zero() {
                            s += &(&rows[k][j] * &x[j]);
                        }
                    }
                    x[c] = -(&s / &rows[k][c]);
                }
                x
            })
            .collect()
    }
}

/// Gaussian integer, used only inside the elimination.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn one() -> Self {
        GInt { re: BigInt::one(), im: BigInt::zero() }
    }

    fn from_scaled(x: &GaussianRational, l: &BigInt) -> Self {
        let s = x.scale_int(l);
        debug_assert!(s.is_integral());
        GInt { re: s.re().to_integer(), im: s.im().to_integer() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm_bits(&self) -> u64 {
        (&self.re * &self.re + &self.im * &self.im).bits()
    }

    fn mul(&self, o: &GInt) -> GInt {
        if self.im.is_zero() && o.im.is_zero() {
            return GInt { re: &self.re * &o.re, im: BigInt::zero() };
        }
        GInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &GInt) -> GInt {
        GInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Division known to be exact; panics otherwise.
    fn exact_div(&self, d: &GInt) -> GInt {
        if d.im.is_zero() {
            let (qr, rr) = self.re.div_rem(&d.re);
            let (qi, ri) = self.im.div_rem(&d.re);
            assert!(rr.is_zero() && ri.is_zero(), "inexact fraction-free division");
            return GInt { re: qr, im: qi };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let conj = GInt { re: d.re.clone(), im: -d.im.clone() };
        let t = self.mul(&conj);
        let (qr, rr) = t.re.div_rem(&norm);
        let (qi, ri) = t.im.div_rem(&norm);
        assert!(rr.is_zero() && ri.is_zero(), "inexact fraction-free division");
        GInt { re: qr, im: qi }
    }

    fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// A basis vector of a polynomial space: one monomial times one blade.
pub type BasisKey = (Monomial, Blade);

/// The weight `α_j - β_j + [j ∈ blade]` per index. Every `f†_j ∂_{z_j}` and
/// `f_j ∂_{z_j^c}` preserves it, so operator matrices are block diagonal
/// over weights.
fn weight(m: &Monomial, blade: Blade) -> Vec<i64> {
    (0..m.n())
        .map(|j| m.z_exp(j) as i64 - m.zc_exp(j) as i64 + blade.contains(j) as i64)
        .collect()
}

/// Dense matrix of the stacked operators on the given basis: one column per
/// key, one row per `(operator, monomial, blade)` in the images.
pub fn operator_matrix(n: usize, columns: &[BasisKey], ops: &[(Dirac, bool)]) -> ExactMatrix {
    let images: Vec<Vec<SpinorPoly>> = columns
        .iter()
        .map(|(m, b)| {
            let p = SpinorPoly::from_terms(n, [(m.clone(), *b, GaussianRational::one())]).expect("valid key");
            ops.iter().map(|&(op, restricted)| p.dirac(op, restricted)).collect()
        })
        .collect();
    let mut row_index: BTreeMap<(usize, Monomial, Blade), usize> = BTreeMap::new();
    for imgs in &images {
        for (k, img) in imgs.iter().enumerate() {
            for (m, b, _) in img.flat_terms() {
                let len = row_index.len();
                row_index.entry((k, m.clone(), b)).or_insert(len);
            }
        }
    }
    let mut mat = ExactMatrix::zeros(row_index.len(), columns.len());
    for (col, imgs) in images.iter().enumerate() {
        for (k, img) in imgs.iter().enumerate() {
            for (m, b, c) in img.flat_terms() {
                mat.set(row_index[&(k, m.clone(), b)], col, c.clone());
            }
        }
    }
    mat
}

/// Exact basis of the joint kernel of `ops` on `span(columns)`, solved block
/// by block over the weight decomposition.
pub fn operator_kernel(exec: Execution, n: usize, columns: Vec<BasisKey>, ops: &[(Dirac, bool)]) -> Vec<SpinorPoly> {
    let mut blocks: BTreeMap<Vec<i64>, Vec<BasisKey>> = BTreeMap::new();
    for key in columns {
        blocks.entry(weight(&key.0, key.1)).or_default().push(key);
    }
    let blocks: Vec<Vec<BasisKey>> = blocks.into_values().collect();
    par::map(exec, &blocks, |cols| {
        let mat = operator_matrix(n, cols, ops);
        mat.nullspace()
            .into_iter()
            .map(|v| {
                let terms = cols.iter().zip(v).map(|((m, b), c)| (m.clone(), *b, c));
                SpinorPoly::from_terms(n, terms).expect("valid keys")
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Monomial-times-blade basis of bidegree `(a, b)` polynomials in the first
/// `vars` variables with values of blade degree `r` over the first `gens`
/// generators, in the fixed basis order.
pub fn polynomial_basis(n: usize, vars: usize, gens: usize, a: usize, b: usize, r: usize) -> Vec<BasisKey> {
    let monos = Monomial::all_of_bidegree(n, vars, a, b);
    let blades = Blade::all_of_degree(gens, r);
    let mut out = Vec::with_capacity(monos.len() * blades.len());
    for m in &monos {
        for bl in &blades {
            out.push((m.clone(), *bl));
        }
    }
    out
}

/// Exact basis of the Hermitean monogenic polynomials of bidegree `(a, b)`
/// with values of blade degree `r`, found as the joint nullspace of `∂z`
/// and `∂z†`.
pub fn monogenic_basis(n: usize, r: usize, a: usize, b: usize) -> Result<Vec<SpinorPoly>> {
    monogenic_basis_with(Execution::default(), n, r, a, b)
}

pub fn monogenic_basis_with(exec: Execution, n: usize, r: usize, a: usize, b: usize) -> Result<Vec<SpinorPoly>> {
    if n == 0 || r > n || n > crate::algebra::MAX_DIM {
        return Err(Error::arg(format!("no spinor space of degree {r} for n = {n}")));
    }
    let cols = polynomial_basis(n, n, n, a, b, r);
    Ok(operator_kernel(exec, n, cols, &[(Dirac::Dz, false), (Dirac::DzDag, false)]))
}

/// Kernel of `∂̃z` on `P(a,b,r)` or of `∂̃z†` on the scalar-side `Q(a,b,r)`
/// (values of degree `r-1`), for dimension parameter `n`.
pub fn restricted_kernel_basis(n: usize, side: FischerSide, a: usize, b: usize, r: usize) -> Result<Vec<SpinorPoly>> {
    if n < 2 {
        return Err(Error::arg("restricted spaces need n >= 2"));
    }
    let (deg, op) = match side {
        FischerSide::Dz => (r, Dirac::Dz),
        FischerSide::DzDag => {
            if r == 0 {
                return Ok(Vec::new());
            }
            (r - 1, Dirac::DzDag)
        }
    };
    if deg > n - 1 {
        return Ok(Vec::new());
    }
    let cols = polynomial_basis(n, n - 1, n - 1, a, b, deg);
    Ok(operator_kernel(Execution::default(), n, cols, &[(op, true)]))
}
