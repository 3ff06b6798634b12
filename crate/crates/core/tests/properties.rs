use hermck::ck::{
    extend_closed_m0, extend_closed_m0_laplacian, extend_closed_m1, extend_closed_m1_laplacian, extend_full,
    extend_scheme, extract_data, fill_scheme, is_h_monogenic,
};
use hermck::dims::{fischer_project, FischerSide};
use hermck::linalg::restricted_kernel_basis;
use hermck::{random, Dirac, GaussianRational, SpinorPoly, Var};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(n, r, a, b)` with `0 < r < n`, small enough to keep each case fast.
fn shape() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), 1..n, 0usize..=2, 0usize..=2))
}

fn anticommutator(p: &SpinorPoly, x: impl Fn(&SpinorPoly) -> SpinorPoly, y: impl Fn(&SpinorPoly) -> SpinorPoly) -> SpinorPoly {
    x(&y(p)).add(&y(&x(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operators_are_isotropic(seed: u64, (n, r, a, b) in shape(), restricted: bool) {
        let p = random::poly(&mut rng(seed), n, n, n, a + 1, b + 1, r, 0.5);
        prop_assert!(p.dirac(Dirac::Dz, restricted).dirac(Dirac::Dz, restricted).is_zero());
        prop_assert!(p.dirac(Dirac::DzDag, restricted).dirac(Dirac::DzDag, restricted).is_zero());
        prop_assert!(p.mul_var(Var::Z, restricted).mul_var(Var::Z, restricted).is_zero());
        prop_assert!(p.mul_var(Var::ZDag, restricted).mul_var(Var::ZDag, restricted).is_zero());
    }

    #[test]
    fn dirac_anticommutator_is_quarter_laplacian(seed: u64, (n, r, a, b) in shape()) {
        let p = random::restricted_poly(&mut rng(seed), n, a + 1, b + 1, r.min(n - 1));
        let lhs = anticommutator(&p, |q| q.dirac(Dirac::Dz, true), |q| q.dirac(Dirac::DzDag, true));
        prop_assert_eq!(lhs, p.laplacian_tilde().scale(&GaussianRational::ratio(1, 4)));
    }

    #[test]
    fn vector_variable_anticommutator_is_norm(seed: u64, (n, r, a, b) in shape()) {
        let p = random::poly(&mut rng(seed), n, n, n, a, b, r, 0.5);
        let lhs = anticommutator(&p, |q| q.mul_var(Var::Z, false), |q| q.mul_var(Var::ZDag, false));
        prop_assert_eq!(lhs, p.mul_norm_squared());
    }

    #[test]
    fn euler_identities(seed: u64, (n, r, a, b) in shape()) {
        let s = r.min(n - 1);
        let p = random::restricted_poly(&mut rng(seed), n, a, b, s);
        let dz = anticommutator(&p, |q| q.dirac(Dirac::Dz, true), |q| q.mul_var(Var::Z, true));
        prop_assert_eq!(dz, p.scale(&GaussianRational::from((a + s) as i64)));
        let dzc = anticommutator(&p, |q| q.dirac(Dirac::DzDag, true), |q| q.mul_var(Var::ZDag, true));
        prop_assert_eq!(dzc, p.scale(&GaussianRational::from((b + n - 1 - s) as i64)));
    }

    #[test]
    fn scheme_and_closed_form_agree(seed: u64, (n, r, a, b) in shape()) {
        let d = random::compatible_data(&mut rng(seed), n, r, a, b);
        let m = extend_scheme(&d).unwrap();
        prop_assert!(is_h_monogenic(&m));
        prop_assert!(m.is_homogeneous_of(a, b) || m.is_zero());
        prop_assert_eq!(&extend_full(&d).unwrap(), &m);
        prop_assert_eq!(extract_data(&m, r, a, b).unwrap(), d);
    }

    #[test]
    fn filled_scheme_satisfies_laplacian_relations(seed: u64, (n, r, a, b) in shape()) {
        let d = random::compatible_data(&mut rng(seed), n, r, a, b);
        let s = fill_scheme(&d).unwrap();
        let quarter = GaussianRational::ratio(-1, 4);
        // each step two levels down is -¼Δ̃ of its source
        for i in 0..=a {
            for j in 0..=b {
                if i >= 1 && j >= 1 {
                    prop_assert_eq!(&s.p0[i][j], &s.p0[i - 1][j - 1].laplacian_tilde().scale(&quarter));
                    prop_assert_eq!(&s.p1[i][j], &s.p1[i - 1][j - 1].laplacian_tilde().scale(&quarter));
                }
                prop_assert!(s.p0[i][j].dirac(Dirac::Dz, true).is_zero());
                prop_assert!(s.p1[i][j].dirac(Dirac::DzDag, true).is_zero());
            }
        }
    }

    #[test]
    fn series_and_laplacian_forms_agree(seed: u64, (n, r, a, b) in shape()) {
        let mut g = rng(seed);
        let p0 = random::dz_kernel_element(&mut g, n, a, b, r);
        let m0 = extend_closed_m0(&p0, a, b).unwrap();
        prop_assert!(is_h_monogenic(&m0));
        prop_assert_eq!(extend_closed_m0_laplacian(&p0, a, b).unwrap(), m0);
        let p1 = random::dzdag_kernel_element(&mut g, n, a, b, r - 1);
        let m1 = extend_closed_m1(&p1, a, b).unwrap();
        prop_assert!(is_h_monogenic(&m1));
        prop_assert_eq!(extend_closed_m1_laplacian(&p1, a, b).unwrap(), m1);
    }

    #[test]
    fn fischer_projection_reconstructs(seed: u64, (n, r, a, b) in shape(), dz_side: bool) {
        let mut g = rng(seed);
        let (side, p, op) = if dz_side {
            (FischerSide::Dz, random::restricted_poly(&mut g, n, a, b, r), Dirac::Dz)
        } else {
            (FischerSide::DzDag, random::restricted_poly(&mut g, n, a, b, r - 1), Dirac::DzDag)
        };
        let (kernel, image) = fischer_project(&p, side, a, b, r).unwrap();
        prop_assert_eq!(kernel.add(&image), p);
        prop_assert!(kernel.dirac(op, true).is_zero());
        // the image part is killed by the matching vector variable
        let var = if dz_side { Var::Z } else { Var::ZDag };
        prop_assert!(image.mul_var(var, true).is_zero());
    }
}

#[test]
fn kernel_dimensions_match_x_and_y() {
    use hermck::dims::dim_formula;
    use hermck::{SpaceDescriptor, SpaceKind};
    for n in 2..=4 {
        for a in 0..=2 {
            for b in 0..=2 {
                for r in 0..n {
                    let x = restricted_kernel_basis(n, FischerSide::Dz, a, b, r).unwrap().len();
                    let want = dim_formula(&SpaceDescriptor::new(SpaceKind::X, n, r, a, b)).unwrap();
                    assert_eq!(want, x.into(), "x at n={n} r={r} a={a} b={b}");
                }
                for r in 1..=n {
                    let y = restricted_kernel_basis(n, FischerSide::DzDag, a, b, r).unwrap().len();
                    let want = dim_formula(&SpaceDescriptor::new(SpaceKind::Y, n, r, a, b)).unwrap();
                    assert_eq!(want, y.into(), "y at n={n} r={r} a={a} b={b}");
                }
            }
        }
    }
}
