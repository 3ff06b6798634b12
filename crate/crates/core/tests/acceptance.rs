//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hermck::ck::{
    extend_batch, extend_full, extend_scheme, extend_special, extend_truncated_series, extract_data, is_h_monogenic,
};
use hermck::dims::{dim_formula, dim_m_alt, dim_recurrences_check, fischer_project};
use hermck::linalg::{monogenic_basis_with, restricted_kernel_basis};
use hermck::{
    par, random, CkData, Dirac, Execution, FischerSide, Generator, GaussianRational, SpaceDescriptor, SpaceKind,
    SpecialSide, SpinorPoly, Var,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed_c0de;

struct Sweep {
    tuples: Vec<(usize, usize, usize, usize)>,
    bases: Vec<Vec<SpinorPoly>>,
}

fn sweep_tuples() -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for r in 1..n {
            for a in 0..=3 {
                for b in 0..=3 {
                    out.push((n, r, a, b));
                }
            }
        }
    }
    out
}

fn criterion_1(sweep: &mut Sweep) -> Outcome {
    let start = Instant::now();
    let bases = par::map(Execution::Parallel, &sweep.tuples, |&(n, r, a, b)| {
        monogenic_basis_with(Execution::Parallel, n, r, a, b).map_err(|e| e.to_string())
    });
    let elapsed = start.elapsed();
    let mut total = 0usize;
    for (&(n, r, a, b), basis) in sweep.tuples.iter().zip(bases) {
        let basis = basis?;
        let formula = dim_formula(&SpaceDescriptor::new(SpaceKind::HM, n, r, a, b)).map_err(|e| e.to_string())?;
        let alt = dim_m_alt(n, r, a, b).map_err(|e| e.to_string())?;
        let oracle = BigUint::from(basis.len());
        if formula != alt || formula != oracle {
            return Err(format!("n={n} r={r} a={a} b={b}: formula {formula}, alt {alt}, oracle {oracle}"));
        }
        total += basis.len();
        sweep.bases.push(basis);
    }
    if elapsed.as_secs_f64() >= 60.0 {
        return Err(format!("counts agree but the oracle took {:.1}s", elapsed.as_secs_f64()));
    }
    Ok(format!("{} tuples, {total} basis elements, oracle {:.1}s", sweep.tuples.len(), elapsed.as_secs_f64()))
}

fn random_instances() -> Vec<CkData> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..100)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let r = rng.gen_range(1..n);
            let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            random::compatible_data(&mut rng, n, r, a, b)
        })
        .collect()
}

fn criterion_2(data: &[CkData], extended: &[SpinorPoly]) -> Outcome {
    let mut nonzero = 0;
    for (d, m) in data.iter().zip(extended) {
        let tag = format!("n={} r={} a={} b={}", d.n(), d.r(), d.a(), d.b());
        if !is_h_monogenic(m) {
            return Err(format!("{tag}: extension is not h-monogenic"));
        }
        let back = extract_data(m, d.r(), d.a(), d.b()).map_err(|e| format!("{tag}: {e}"))?;
        if &back != d {
            return Err(format!("{tag}: extract_data does not recover the inputs"));
        }
        nonzero += usize::from(!m.is_zero());
    }
    Ok(format!("{} instances ({nonzero} non-zero) monogenic and recovered", data.len()))
}

fn criterion_3(data: &[CkData], extended: &[SpinorPoly]) -> Outcome {
    for (d, m) in data.iter().zip(extended) {
        let full = extend_full(d).map_err(|e| e.to_string())?;
        if &full != m {
            return Err(format!("n={} r={} a={} b={}: closed form differs", d.n(), d.r(), d.a(), d.b()));
        }
    }
    Ok(format!("{} instances agree", data.len()))
}

fn criterion_4(sweep: &Sweep) -> Outcome {
    let mut jobs = Vec::new();
    for (&(_, r, a, b), basis) in sweep.tuples.iter().zip(&sweep.bases) {
        for m in basis {
            jobs.push((m, r, a, b));
        }
    }
    let failures: Vec<String> = par::map(Execution::Parallel, &jobs, |&(m, r, a, b)| {
        let again = extract_data(m, r, a, b).and_then(|d| extend_scheme(&d));
        match again {
            Ok(p) if &p == m => None,
            Ok(_) => Some(format!("n={} r={r} a={a} b={b}: round trip changed a basis element", m.dim())),
            Err(e) => Some(format!("n={} r={r} a={a} b={b}: {e}", m.dim())),
        }
    })
    .into_iter()
    .flatten()
    .collect();
    match failures.first() {
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
        None => Ok(format!("{} basis elements reproduced", jobs.len())),
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for side in [FischerSide::Dz, FischerSide::DzDag] {
        for _ in 0..50 {
            let n = rng.gen_range(2..=4);
            let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            let (r, p, op) = match side {
                FischerSide::Dz => {
                    let r = rng.gen_range(0..n);
                    (r, random::restricted_poly(&mut rng, n, a, b, r), Dirac::Dz)
                }
                FischerSide::DzDag => {
                    let r = rng.gen_range(1..=n);
                    (r, random::restricted_poly(&mut rng, n, a, b, r - 1), Dirac::DzDag)
                }
            };
            let tag = format!("{side:?} n={n} r={r} a={a} b={b}");
            let (kernel, image) = fischer_project(&p, side, a, b, r).map_err(|e| format!("{tag}: {e}"))?;
            if !kernel.dirac(op, true).is_zero() {
                return Err(format!("{tag}: kernel part is not annihilated"));
            }
            if kernel.add(&image) != p {
                return Err(format!("{tag}: parts do not sum to the input"));
            }
        }
    }
    dim_recurrences_check(Execution::Parallel, 2..=4, 3, 3).map_err(|f| format!("{} recurrence failures, first: {}", f.len(), f[0]))?;
    // x and y themselves against the nullity of the restricted operators
    let mut checked = 0;
    for n in 2..=4 {
        for a in 0..=3 {
            for b in 0..=3 {
                for r in 0..=n {
                    let cases = [(FischerSide::Dz, SpaceKind::X, r < n), (FischerSide::DzDag, SpaceKind::Y, r >= 1)];
                    for (side, kind, admissible) in cases {
                        if !admissible {
                            continue;
                        }
                        let oracle = restricted_kernel_basis(n, side, a, b, r).map_err(|e| e.to_string())?.len();
                        let formula = dim_formula(&SpaceDescriptor::new(kind, n, r, a, b)).map_err(|e| e.to_string())?;
                        if formula != BigUint::from(oracle) {
                            return Err(format!("{kind:?} n={n} r={r} a={a} b={b}: formula {formula}, oracle {oracle}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("100 projections, recurrences hold, {checked} kernel dimensions match"))
}

/// Random polynomial of mixed bidegree and mixed value degree.
fn mixed_poly(rng: &mut ChaCha8Rng) -> SpinorPoly {
    let n = rng.gen_range(2..=4);
    let mut p = SpinorPoly::zero(n);
    for _ in 0..3 {
        let (a, b, r) = (rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=n));
        p.add_assign(&random::poly(rng, n, n, n, a, b, r, 0.3));
    }
    p
}

fn full_laplacian(p: &SpinorPoly) -> SpinorPoly {
    let mut out = SpinorPoly::zero(p.dim());
    for j in 0..p.dim() {
        out.add_assign(&p.partial(Var::Z, j).partial(Var::ZDag, j));
    }
    out.scale(&GaussianRational::from(4))
}

fn euler_plus_number(p: &SpinorPoly) -> SpinorPoly {
    let mut out = SpinorPoly::zero(p.dim());
    for j in 0..p.dim() - 1 {
        out.add_assign(&p.partial(Var::Z, j).mul_var_power(Var::Z, j, 1));
        let fj = p.witt_left_mul(Generator::F(j)).unwrap();
        out.add_assign(&fj.witt_left_mul(Generator::FDag(j)).unwrap());
    }
    out
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let count = 60;
    for k in 0..count {
        let p = mixed_poly(&mut rng);
        let fail = |what: &str| Err(format!("polynomial {k} (n={}): {what}", p.dim()));
        for restricted in [false, true] {
            let dz = p.dirac(Dirac::Dz, restricted);
            let dzc = p.dirac(Dirac::DzDag, restricted);
            if !dz.dirac(Dirac::Dz, restricted).is_zero() || !dzc.dirac(Dirac::DzDag, restricted).is_zero() {
                return fail("a Dirac operator does not square to zero");
            }
            let z = p.mul_var(Var::Z, restricted);
            let zc = p.mul_var(Var::ZDag, restricted);
            if !z.mul_var(Var::Z, restricted).is_zero() || !zc.mul_var(Var::ZDag, restricted).is_zero() {
                return fail("a vector variable does not square to zero");
            }
        }
        let mixed = p.dirac(Dirac::Dz, false).dirac(Dirac::DzDag, false).add(&p.dirac(Dirac::DzDag, false).dirac(Dirac::Dz, false));
        if full_laplacian(&p) != mixed.scale(&GaussianRational::from(4)) {
            return fail("Laplacian decomposition");
        }
        let s = |q: &SpinorPoly| q.mul_var(Var::Z, false).add(&q.mul_var(Var::ZDag, false));
        let mut norm = SpinorPoly::zero(p.dim());
        for j in 0..p.dim() {
            norm.add_assign(&p.mul_var_power(Var::Z, j, 1).mul_var_power(Var::ZDag, j, 1));
        }
        if s(&s(&p)) != norm {
            return fail("norm identity");
        }
        let anti = p.mul_var(Var::Z, true).dirac(Dirac::Dz, true).add(&p.dirac(Dirac::Dz, true).mul_var(Var::Z, true));
        if anti != euler_plus_number(&p) {
            return fail("Euler anticommutator");
        }
    }
    Ok(format!("{count} random polynomials satisfy every identity"))
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut cases = 0;
    for n in 2..=3 {
        for deg in 0..=4 {
            for side in [SpecialSide::R0, SpecialSide::Rn] {
                let (data, var) = match side {
                    SpecialSide::R0 => (random::antiholomorphic_data(&mut rng, n, deg), Var::ZDag),
                    SpecialSide::Rn => (random::holomorphic_data(&mut rng, n, deg), Var::Z),
                };
                let m = extend_special(&data, side).map_err(|e| e.to_string())?;
                let mut series = SpinorPoly::zero(n);
                for (k, p) in data.iter().enumerate() {
                    let c = GaussianRational::ratio(1, factorial(k));
                    series.add_assign(&p.mul_var_power(var, n - 1, k as u32).scale(&c));
                }
                if m != series {
                    return Err(format!("{side:?} n={n} degree {deg}: output differs from the series"));
                }
                if !is_h_monogenic(&m) {
                    return Err(format!("{side:?} n={n} degree {deg}: not h-monogenic"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} special-case extensions match their series"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut cases = 0;
    for n in 2..=3 {
        for r in 1..n {
            for max_degree in 0..=4 {
                let (f0, f1) = random::compatible_truncation(&mut rng, n, r, max_degree);
                let m = extend_truncated_series(&f0, &f1, max_degree).map_err(|e| e.to_string())?;
                let tag = format!("n={n} r={r} degree {max_degree}");
                if !is_h_monogenic(&m) {
                    return Err(format!("{tag}: not h-monogenic"));
                }
                let input = f0.add(&f1.witt_left_mul(Generator::FDag(n - 1)).unwrap());
                if m.restrict() != input {
                    return Err(format!("{tag}: restriction differs from the input"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} truncations extend and restrict correctly"))
}

fn report(k: usize, outcome: Outcome) -> bool {
    match outcome {
        Ok(msg) => {
            println!("PASS criterion {k}: {msg}");
            true
        }
        Err(msg) => {
            println!("FAIL criterion {k}: {msg}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut sweep = Sweep { tuples: sweep_tuples(), bases: Vec::new() };
    let data = random_instances();
    let extended: Result<Vec<SpinorPoly>, String> =
        extend_batch(Execution::Parallel, &data).into_iter().map(|m| m.map_err(|e| e.to_string())).collect();

    let mut ok = true;
    ok &= report(1, criterion_1(&mut sweep));
    match &extended {
        Ok(ms) => {
            ok &= report(2, criterion_2(&data, ms));
            ok &= report(3, criterion_3(&data, ms));
        }
        Err(e) => {
            ok &= report(2, Err(format!("extension failed: {e}")));
            ok &= report(3, Err(format!("extension failed: {e}")));
        }
    }
    ok &= report(4, criterion_4(&sweep));
    ok &= report(5, criterion_5());
    ok &= report(6, criterion_6());
    ok &= report(7, criterion_7());
    ok &= report(8, criterion_8());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
