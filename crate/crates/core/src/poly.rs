//! Bidegree-graded polynomials in `z_1..z_n, z_1^c..z_n^c` with spinor
//! coefficients, and the Hermitean vector variables and Dirac operators
//! acting on them.
//!
//! Indices are 0-based: `z_{j+1}` is variable `j`. "Restricted" (tilde)
//! versions omit the last variable and generator.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::algebra::{Blade, GaussianRational, Generator, SpinorElement, MAX_DIM};
use crate::error::{Error, Result};

/// `z^alpha (z^c)^beta`, stored as one exponent vector `[alpha | beta]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; 2 * n] }
    }

    pub fn new(alpha: &[u32], beta: &[u32]) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::arg(format!(
                "exponent vectors differ in length ({} vs {})",
                alpha.len(),
                beta.len()
            )));
        }
        let mut exps = alpha.to_vec();
        exps.extend_from_slice(beta);
        Ok(Self { exps })
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    pub fn z_exp(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn zc_exp(&self, j: usize) -> u32 {
        self.exps[self.n() + j]
    }

    /// `(|alpha|, |beta|)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let n = self.n();
        let a = self.exps[..n].iter().sum::<u32>() as usize;
        let b = self.exps[n..].iter().sum::<u32>() as usize;
        (a, b)
    }

    pub fn total_degree(&self) -> usize {
        self.exps.iter().sum::<u32>() as usize
    }

    fn slot(&self, var: Var, j: usize) -> usize {
        match var {
            Var::Z => j,
            Var::ZDag => self.n() + j,
        }
    }

    pub fn exp(&self, var: Var, j: usize) -> u32 {
        self.exps[self.slot(var, j)]
    }

    /// Multiplied by `var_j^k`.
    pub fn times(&self, var: Var, j: usize, k: u32) -> Monomial {
        let mut m = self.clone();
        let s = m.slot(var, j);
        m.exps[s] += k;
        m
    }

    /// Formal derivative: `None` if it vanishes, else `(exponent, monomial)`.
    pub fn derive(&self, var: Var, j: usize) -> Option<(u32, Monomial)> {
        let s = self.slot(var, j);
        let e = self.exps[s];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[s] -= 1;
        Some((e, m))
    }

    /// All monomials of bidegree `(a, b)` in the first `vars` of `n` variables.
    pub fn all_of_bidegree(n: usize, vars: usize, a: usize, b: usize) -> Vec<Monomial> {
        let za = compositions(a, vars);
        let zb = compositions(b, vars);
        let mut out = Vec::with_capacity(za.len() * zb.len());
        for x in &za {
            for y in &zb {
                let mut exps = vec![0; 2 * n];
                exps[..vars].copy_from_slice(x);
                exps[n..n + vars].copy_from_slice(y);
                out.push(Monomial { exps });
            }
        }
        out.sort();
        out
    }
}

/// Weak compositions of `total` into `parts` non-negative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u32;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k as u32;
            rec(i + 1, left - k, cur, out);
        }
    }
    rec(0, total, &mut cur, &mut out);
    out
}

impl Ord for Monomial {
    /// Graded lexicographic on `(alpha, beta)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for j in 0..self.n() {
            match self.z_exp(j) {
                0 => {}
                1 => parts.push(format!("z{}", j + 1)),
                e => parts.push(format!("z{}^{e}", j + 1)),
            }
        }
        for j in 0..self.n() {
            match self.zc_exp(j) {
                0 => {}
                1 => parts.push(format!("zc{}", j + 1)),
                e => parts.push(format!("zc{}^{e}", j + 1)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which family of variables: `z_j` or the conjugates `z_j^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    ZDag,
}

/// Hermitean Dirac operator: `∂z = Σ f†_j ∂_{z_j}` or `∂z† = Σ f_j ∂_{z_j^c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dirac {
    Dz,
    DzDag,
}

impl fmt::Display for Dirac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dirac::Dz => write!(f, "∂z"),
            Dirac::DzDag => write!(f, "∂z†"),
        }
    }
}

/// Polynomial with [`SpinorElement`] coefficients; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinorPoly {
    n: usize,
    terms: BTreeMap<Monomial, SpinorElement>,
}

impl SpinorPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(value: SpinorElement) -> Self {
        let mut p = Self::zero(value.dim());
        p.add_coeff(Monomial::one(value.dim()), value);
        p
    }

    pub fn monomial(mono: Monomial, value: SpinorElement) -> Result<Self> {
        if mono.n() != value.dim() {
            return Err(Error::arg("monomial and coefficient disagree on n"));
        }
        let mut p = Self::zero(value.dim());
        p.add_coeff(mono, value);
        Ok(p)
    }

    /// Builds from `(monomial, blade, coefficient)` triples.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Blade, GaussianRational)>,
    {
        let mut p = Self::zero(n);
        for (m, b, c) in terms {
            if m.n() != n {
                return Err(Error::arg(format!("monomial {m} has {} variables, expected {n}", m.n())));
            }
            if b.span() > n {
                return Err(Error::arg(format!("blade {b} uses an index above n = {n}")));
            }
            p.add_term(m, b, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SpinorElement)> {
        self.terms.iter()
    }

    /// Flattened `(monomial, blade, coefficient)` view in canonical order.
    pub fn flat_terms(&self) -> impl Iterator<Item = (&Monomial, Blade, &GaussianRational)> {
        self.terms.iter().flat_map(|(m, v)| v.terms().map(move |(b, c)| (m, *b, c)))
    }

    pub fn coeff(&self, mono: &Monomial) -> SpinorElement {
        self.terms.get(mono).cloned().unwrap_or_else(|| SpinorElement::zero(self.n))
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, blade: Blade, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let n = self.n;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                let mut v = SpinorElement::zero(n);
                v.add_term(blade, c);
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_term(blade, c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_coeff(&mut self, mono: Monomial, value: SpinorElement) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&value);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_dim(&self, other: &SpinorPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::arg(format!("dimension mismatch: n = {} vs n = {}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SpinorPoly) -> Result<SpinorPoly> {
        self.same_dim(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// In-place sum; panics on a dimension mismatch.
    pub fn add_assign(&mut self, other: &SpinorPoly) {
        assert_eq!(self.n, other.n, "adding polynomials of different n");
        for (m, v) in &other.terms {
            self.add_coeff(m.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SpinorPoly) {
        self.add_assign(&other.neg());
    }

    pub fn sub(&self, other: &SpinorPoly) -> SpinorPoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn add(&self, other: &SpinorPoly) -> SpinorPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> SpinorPoly {
        SpinorPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> SpinorPoly {
        if k.is_zero() {
            return SpinorPoly::zero(self.n);
        }
        SpinorPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.scale(k))).collect(),
        }
    }

    /// Left multiplication of every coefficient by a Witt generator.
    pub fn witt_left_mul(&self, gen: Generator) -> Result<SpinorPoly> {
        if gen.index() >= self.n {
            return Err(Error::arg(format!("generator {gen} out of range for n = {}", self.n)));
        }
        Ok(self.act(gen))
    }

    pub(crate) fn act(&self, gen: Generator) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for (m, v) in &self.terms {
            let w = v.act(gen);
            if !w.is_zero() {
                out.terms.insert(m.clone(), w);
            }
        }
        out
    }

    /// Multiplication by `var_j^k`.
    pub fn mul_var_power(&self, var: Var, j: usize, k: u32) -> SpinorPoly {
        assert!(j < self.n);
        if k == 0 {
            return self.clone();
        }
        SpinorPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.times(var, j, k), v.clone())).collect(),
        }
    }

    /// Formal partial derivative in `z_j` or `z_j^c`.
    pub fn partial(&self, var: Var, j: usize) -> SpinorPoly {
        assert!(j < self.n);
        let mut out = SpinorPoly::zero(self.n);
        for (m, v) in &self.terms {
            if let Some((e, dm)) = m.derive(var, j) {
                // distinct monomials stay distinct after one derivative in the same slot
                out.terms.insert(dm, v.scale(&GaussianRational::from(e as i64)));
            }
        }
        out
    }

    /// `k`-th partial derivative.
    pub fn partial_pow(&self, var: Var, j: usize, k: usize) -> SpinorPoly {
        (0..k).fold(self.clone(), |p, _| p.partial(var, j))
    }

    fn var_range(&self, restricted: bool) -> usize {
        if restricted {
            self.n.saturating_sub(1)
        } else {
            self.n
        }
    }

    /// Left multiplication by the vector variable `z = Σ f_j z_j` or
    /// `z† = Σ f†_j z_j^c` (sum to `n-1` when restricted).
    pub fn mul_var(&self, which: Var, restricted: bool) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for j in 0..self.var_range(restricted) {
            let gen = match which {
                Var::Z => Generator::F(j),
                Var::ZDag => Generator::FDag(j),
            };
            for (m, v) in &self.terms {
                let w = v.act(gen);
                out.add_coeff(m.times(which, j, 1), w);
            }
        }
        out
    }

    /// Hermitean Dirac operator (the tilde version when `restricted`).
    pub fn dirac(&self, which: Dirac, restricted: bool) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for j in 0..self.var_range(restricted) {
            let (var, gen) = match which {
                Dirac::Dz => (Var::Z, Generator::FDag(j)),
                Dirac::DzDag => (Var::ZDag, Generator::F(j)),
            };
            for (m, v) in &self.terms {
                if let Some((e, dm)) = m.derive(var, j) {
                    let w = v.act(gen);
                    if !w.is_zero() {
                        out.add_coeff(dm, w.scale(&GaussianRational::from(e as i64)));
                    }
                }
            }
        }
        out
    }

    /// `Δ̃ = 4 Σ_{j<n-1} ∂_{z_j} ∂_{z_j^c}`, applied coefficient-wise.
    pub fn laplacian_tilde(&self) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for j in 0..self.var_range(true) {
            for (m, v) in &self.terms {
                let (a, b) = (m.z_exp(j), m.zc_exp(j));
                if a == 0 || b == 0 {
                    continue;
                }
                let mut dm = m.clone();
                dm.exps[j] -= 1;
                dm.exps[self.n + j] -= 1;
                out.add_coeff(dm, v.scale(&GaussianRational::from(4 * a as i64 * b as i64)));
            }
        }
        out
    }

    pub fn bidegree_component(&self, a: usize, b: usize) -> SpinorPoly {
        SpinorPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == (a, b))
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    /// All nonzero bidegree components, keyed by `(a, b)`.
    pub fn bidegree_components(&self) -> BTreeMap<(usize, usize), SpinorPoly> {
        let mut out: BTreeMap<(usize, usize), SpinorPoly> = BTreeMap::new();
        for (m, v) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| SpinorPoly::zero(self.n))
                .terms
                .insert(m.clone(), v.clone());
        }
        out
    }

    /// `Some((a, b))` when every term has the same bidegree; zero has none.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|m| m.bidegree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, a: usize, b: usize) -> bool {
        self.terms.keys().all(|m| m.bidegree() == (a, b))
    }

    pub fn max_total_degree(&self) -> usize {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Substitutes `z_n = z_n^c = 0`.
    pub fn restrict(&self) -> SpinorPoly {
        if self.n == 0 {
            return self.clone();
        }
        let last = self.n - 1;
        SpinorPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.z_exp(last) == 0 && m.zc_exp(last) == 0)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    /// Blade degrees that occur in any coefficient.
    pub fn value_degrees(&self) -> BTreeSet<usize> {
        self.terms.values().flat_map(|v| v.degrees()).collect()
    }

    pub fn has_pure_value_degree(&self, r: usize) -> bool {
        self.terms.values().all(|v| v.terms().all(|(b, _)| b.degree() == r))
    }

    /// Whether `z_j` or `z_j^c` occurs.
    pub fn mentions_var(&self, j: usize) -> bool {
        self.terms.keys().any(|m| m.z_exp(j) > 0 || m.zc_exp(j) > 0)
    }

    pub fn mentions_var_of(&self, var: Var, j: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var, j) > 0)
    }

    /// Whether the last variable pair or the last generator occurs.
    pub fn mentions_last(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let last = self.n - 1;
        self.mentions_var(last) || self.terms.values().any(|v| v.terms().any(|(b, _)| b.contains(last)))
    }

    /// Coefficient-wise [`SpinorElement::split_last`]: `self = p0 + f†_n p1`.
    pub fn split_last(&self) -> (SpinorPoly, SpinorPoly) {
        let mut p0 = SpinorPoly::zero(self.n);
        let mut p1 = SpinorPoly::zero(self.n);
        for (m, v) in &self.terms {
            let (v0, v1) = v.split_last();
            if !v0.is_zero() {
                p0.terms.insert(m.clone(), v0);
            }
            if !v1.is_zero() {
                p1.terms.insert(m.clone(), v1);
            }
        }
        (p0, p1)
    }

    /// Projection of every coefficient onto blade degree `r`.
    pub fn degree_part(&self, r: usize) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for (m, v) in &self.terms {
            let w = v.degree_part(r);
            if !w.is_zero() {
                out.terms.insert(m.clone(), w);
            }
        }
        out
    }

    /// Multiplies every coefficient by the scalar polynomial `Σ z_j z_j^c`.
    pub fn mul_norm_squared(&self) -> SpinorPoly {
        let mut out = SpinorPoly::zero(self.n);
        for j in 0..self.n {
            out.add_assign(&self.mul_var_power(Var::Z, j, 1).mul_var_power(Var::ZDag, j, 1));
        }
        out
    }
}

impl fmt::Display for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, v)| format!("{m}·[{v}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinorPoly(n={}; {})", self.n, self)
    }
}
