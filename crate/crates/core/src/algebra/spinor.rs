use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{Blade, GaussianRational, MAX_DIM};
use crate::error::{Error, Result};

/// A Witt basis generator, 0-based: `F(j)` is `f_{j+1}`, `FDag(j)` is `f†_{j+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    F(usize),
    FDag(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::F(j) | Generator::FDag(j) => j,
        }
    }

    /// Left action on a single blade: `None` when the result vanishes,
    /// otherwise the sign flag (`true` = negative) and resulting blade.
    ///
    /// `f†_j` wedges from the left, picking up one sign per index below `j`;
    /// `f_j` contracts, picking up the sign of `j`'s position in the blade.
    #[inline]
    pub fn act(self, blade: Blade) -> Option<(bool, Blade)> {
        match self {
            Generator::FDag(j) => {
                if blade.contains(j) {
                    None
                } else {
                    Some((blade.count_below(j) % 2 == 1, blade.with(j)))
                }
            }
            Generator::F(j) => {
                if blade.contains(j) {
                    Some((blade.count_below(j) % 2 == 1, blade.without(j)))
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::F(j) => write!(f, "f{}", j + 1),
            Generator::FDag(j) => write!(f, "f†{}", j + 1),
        }
    }
}

/// A finite combination of blades with nonzero Gaussian-rational coefficients,
/// i.e. an element of spinor space for dimension parameter `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinorElement {
    n: usize,
    terms: BTreeMap<Blade, GaussianRational>,
}

impl SpinorElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self { n, terms: BTreeMap::new() }
    }

    pub fn blade(n: usize, blade: Blade, coeff: GaussianRational) -> Result<Self> {
        let mut out = Self::zero(n);
        out.check_blade(blade)?;
        out.add_term(blade, coeff);
        Ok(out)
    }

    /// The spinor `1·I`.
    pub fn identity(n: usize) -> Self {
        let mut out = Self::zero(n);
        out.add_term(Blade::identity(), GaussianRational::from(1));
        out
    }

    /// Builds from `(indices, coefficient)` pairs; indices 0-based and increasing.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, GaussianRational)>,
    {
        let mut out = Self::zero(n);
        for (idx, c) in terms {
            let blade = Blade::from_indices(&idx)
                .ok_or_else(|| Error::arg(format!("blade indices {idx:?} not strictly increasing")))?;
            out.check_blade(blade)?;
            out.add_term(blade, c);
        }
        Ok(out)
    }

    fn check_blade(&self, blade: Blade) -> Result<()> {
        if blade.span() > self.n {
            return Err(Error::arg(format!("blade {blade} uses an index above n = {}", self.n)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, blade: Blade) -> GaussianRational {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    /// Adds `coeff·blade`, dropping the entry if it cancels. The blade must
    /// fit in dimension `n`; callers inside the crate guarantee that.
    pub(crate) fn add_term(&mut self, blade: Blade, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn sub_term(&mut self, blade: Blade, coeff: &GaussianRational) {
        self.add_term(blade, -coeff);
    }

    pub fn add_assign(&mut self, other: &SpinorElement) {
        for (b, c) in &other.terms {
            self.add_term(*b, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SpinorElement) {
        for (b, c) in &other.terms {
            self.sub_term(*b, c);
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> SpinorElement {
        let mut out = SpinorElement::zero(self.n);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(b, c)| (*b, c * k)).collect();
        out
    }

    pub fn neg(&self) -> SpinorElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    /// Left multiplication by a Witt generator, extended linearly.
    pub fn witt_left_mul(&self, gen: Generator) -> Result<SpinorElement> {
        if gen.index() >= self.n {
            return Err(Error::arg(format!("generator {gen} out of range for n = {}", self.n)));
        }
        Ok(self.act(gen))
    }

    /// Infallible variant of [`witt_left_mul`](Self::witt_left_mul); the
    /// generator index must be below `n`.
    pub(crate) fn act(&self, gen: Generator) -> SpinorElement {
        debug_assert!(gen.index() < self.n);
        let mut out = SpinorElement::zero(self.n);
        for (b, c) in &self.terms {
            if let Some((neg, nb)) = gen.act(*b) {
                // Distinct input blades map to distinct output blades.
                out.terms.insert(nb, if neg { -c } else { c.clone() });
            }
        }
        out
    }

    /// Projection onto the blades of degree `r`.
    pub fn degree_part(&self, r: usize) -> SpinorElement {
        let mut out = SpinorElement::zero(self.n);
        out.terms = self
            .terms
            .iter()
            .filter(|(b, _)| b.degree() == r)
            .map(|(b, c)| (*b, c.clone()))
            .collect();
        out
    }

    /// Set of blade degrees that occur.
    pub fn degrees(&self) -> std::collections::BTreeSet<usize> {
        self.terms.keys().map(|b| b.degree()).collect()
    }

    /// Splits `v = v0 + f†_n v1` where neither part mentions the last index.
    pub fn split_last(&self) -> (SpinorElement, SpinorElement) {
        let mut v0 = SpinorElement::zero(self.n);
        let mut v1 = SpinorElement::zero(self.n);
        if self.n == 0 {
            return (self.clone(), v1);
        }
        let last = self.n - 1;
        for (b, c) in &self.terms {
            if b.contains(last) {
                // b = f†_n · (±b'), the sign being that of moving f†_n past
                // every lower index.
                let rest = b.without(last);
                let c = if rest.degree() % 2 == 1 { -c } else { c.clone() };
                v1.terms.insert(rest, c);
            } else {
                v0.terms.insert(*b, c.clone());
            }
        }
        (v0, v1)
    }

    /// Largest index used plus one.
    pub fn span(&self) -> usize {
        self.terms.keys().map(|b| b.span()).max().unwrap_or(0)
    }
}

impl fmt::Debug for SpinorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SpinorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{c}·{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
