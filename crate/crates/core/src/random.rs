//! Random test data: sparse polynomials with small Gaussian-integer
//! coefficients, and initial data that satisfies the compatibility conditions
//! by construction (images of the isotropic restricted Dirac operators).

use rand::Rng;

use crate::algebra::GaussianRational;
use crate::ck::CkData;
use crate::linalg::polynomial_basis;
use crate::poly::{Dirac, SpinorPoly};

/// Gaussian integer with parts in `-3..=3`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    GaussianRational::from_integers(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

/// Random bidegree-`(a, b)` polynomial in the first `vars` variables with
/// values of blade degree `r` over the first `gens` generators. Each basis
/// term is present with probability `density`.
#[allow(clippy::too_many_arguments)]
pub fn poly<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    vars: usize,
    gens: usize,
    a: usize,
    b: usize,
    r: usize,
    density: f64,
) -> SpinorPoly {
    if r > gens {
        return SpinorPoly::zero(n);
    }
    let keys = polynomial_basis(n, vars, gens, a, b, r);
    let mut terms = Vec::new();
    for (m, bl) in keys {
        if rng.gen_bool(density) {
            terms.push((m, bl, scalar(rng)));
        }
    }
    SpinorPoly::from_terms(n, terms).expect("basis keys fit n")
}

/// Random polynomial on `C^{n-1}` (no `z_n`, `z_n^c`, `f†_n`).
pub fn restricted_poly<R: Rng + ?Sized>(rng: &mut R, n: usize, a: usize, b: usize, r: usize) -> SpinorPoly {
    poly(rng, n, n - 1, n - 1, a, b, r, 0.6)
}

/// Random element of `Ker ∂̃z` on `P(a,b,r)`.
pub fn dz_kernel_element<R: Rng + ?Sized>(rng: &mut R, n: usize, a: usize, b: usize, r: usize) -> SpinorPoly {
    if r + 1 >= n {
        // ∂̃z lands in degree r+1 > n-1: the whole space is the kernel.
        return restricted_poly(rng, n, a, b, r);
    }
    if r == 0 {
        return if a == 0 { restricted_poly(rng, n, 0, b, 0) } else { SpinorPoly::zero(n) };
    }
    restricted_poly(rng, n, a + 1, b, r - 1).dirac(Dirac::Dz, true)
}

/// Random element of `Ker ∂̃z†` on polynomials with values of degree `s`.
pub fn dzdag_kernel_element<R: Rng + ?Sized>(rng: &mut R, n: usize, a: usize, b: usize, s: usize) -> SpinorPoly {
    if s == 0 {
        return restricted_poly(rng, n, a, b, 0);
    }
    if s == n - 1 {
        return if b == 0 { restricted_poly(rng, n, a, 0, s) } else { SpinorPoly::zero(n) };
    }
    restricted_poly(rng, n, a, b + 1, s + 1).dirac(Dirac::DzDag, true)
}

/// Random CK data satisfying every compatibility condition.
pub fn compatible_data<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize, a: usize, b: usize) -> CkData {
    let top = (0..=b).map(|j| dz_kernel_element(rng, n, a, b - j, r)).collect();
    let right = (0..=a).map(|i| dzdag_kernel_element(rng, n, a - i, b, r - 1)).collect();
    CkData::new(n, r, a, b, top, right).expect("well-formed by construction")
}

/// Random truncated series `(F⁰, F¹)` with `∂̃z F⁰ = 0`, `∂̃z† F¹ = 0`, total
/// degree at most `max_degree`, values of degree `r` (resp. `r-1`).
pub fn compatible_truncation<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    r: usize,
    max_degree: usize,
) -> (SpinorPoly, SpinorPoly) {
    let mut f0 = SpinorPoly::zero(n);
    let mut f1 = SpinorPoly::zero(n);
    for total in 0..=max_degree {
        for a in 0..=total {
            let b = total - a;
            f0.add_assign(&dz_kernel_element(rng, n, a, b, r));
            f1.add_assign(&dzdag_kernel_element(rng, n, a, b, r - 1));
        }
    }
    (f0, f1)
}

/// Anti-holomorphic scalar data `p_{0,b-j}`, `j = 0..=b`.
pub fn antiholomorphic_data<R: Rng + ?Sized>(rng: &mut R, n: usize, b: usize) -> Vec<SpinorPoly> {
    (0..=b).map(|j| poly(rng, n, n - 1, n - 1, 0, b - j, 0, 0.7)).collect()
}

/// Holomorphic data `p_{a-i,0}` with values in `span(f†_1 … f†_n)`.
pub fn holomorphic_data<R: Rng + ?Sized>(rng: &mut R, n: usize, a: usize) -> Vec<SpinorPoly> {
    (0..=a).map(|i| poly(rng, n, n - 1, n, a - i, 0, n, 0.7)).collect()
}
