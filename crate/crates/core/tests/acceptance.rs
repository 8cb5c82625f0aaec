//! Acceptance criteria. Run with `cargo test --test acceptance`; prints one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tdesign::construct::{
    fg_design, fg_parameters_exact, lattice_shell, lift_to_dimension, polygon_design, tight_polygon_design, FgCase,
    LayerOffset,
};
use tdesign::design::{
    binomial, fisher_bound, is_antipodal, layer_decompose, verify_and_certify, verify_euclidean_design,
    WeightedPointSet, GROUP_TOL, VERIFY_TOL,
};
use tdesign::harmonic::{
    build_phi_basis, check_fully_symmetric, feven_filter, fully_symmetric_check, harmonic_dimension,
    shell_harmonic_sum, special_harmonics, verify_design_harmonic, SpecialHarmonic,
};
use tdesign::interval::{build_interval_design, verify_interval_design, INTERVAL_TOL};

type Check = Result<(), String>;
/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_radii(rng: &mut ChaCha8Rng, p: usize) -> Vec<f64> {
    let mut r = vec![rng.gen_range(0.2..2.0)];
    for _ in 1..p {
        let last = *r.last().unwrap();
        r.push(last * (1.0 + rng.gen_range(0.05..1.5)));
    }
    r
}

fn fisher_bounds() -> Check {
    for (n, p, t, want) in [(3, 2, 5, 14), (3, 2, 7, 26), (4, 2, 7, 48)] {
        let got = fisher_bound(n, p, t).map_err(|e| e.to_string())?.total;
        ensure!(got == want, "N({n},{p},{t}) = {got}, expected {want}");
    }
    for p in 2..=4 {
        let got = fisher_bound(3, p, 5).map_err(|e| e.to_string())?.total;
        ensure!(got == 14, "N(3,{p},5) = {got}, expected 14");
    }
    for t in 0..=13usize {
        for p in 1..=(t + 5) / 4 {
            let got = fisher_bound(2, p, t).map_err(|e| e.to_string())?.total;
            let want = (p * (t + 3 - 2 * p)) as u64;
            ensure!(got == want, "N(2,{p},{t}) = {got}, expected {want}");
        }
    }
    Ok(())
}

fn interval_designs() -> Check {
    for n in 2..=6 {
        for t in 0..=17 {
            let d = build_interval_design(n, t).map_err(|e| e.to_string())?;
            let rep = verify_interval_design(&d, t, INTERVAL_TOL);
            ensure!(rep.pass, "n={n} t={t}: residual {:e}", rep.max_relative_residual);
            let s = d.nodes.len();
            let closed: Vec<f64> = match n {
                2 => (1..=s).rev().map(|i| ((2 * i - 1) as f64 * std::f64::consts::PI / (2 * s) as f64).cos()).collect(),
                4 => (1..=s).rev().map(|i| (i as f64 * std::f64::consts::PI / (s + 1) as f64).cos()).collect(),
                _ => continue,
            };
            for (a, b) in d.nodes.iter().zip(&closed) {
                ensure!((a - b).abs() <= 1e-13, "n={n} t={t}: node {a} vs closed form {b}");
            }
        }
    }
    Ok(())
}

fn polygon_designs() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 1..=13usize {
        for p in 1..=(t + 5) / 4 {
            for _ in 0..50 {
                let radii = random_radii(&mut rng, p);
                let x = tight_polygon_design(t, &radii).map_err(|e| e.to_string())?;
                ensure!(x.len() == p * (t + 3 - 2 * p), "t={t} p={p}: size {}", x.len());
                ensure!(x.weights().iter().all(|&w| w > 0.0), "t={t} radii={radii:?}: nonpositive weight");
                ensure!(is_antipodal(&x, GROUP_TOL) == (t % 2 == 1), "t={t} p={p}: antipodality");
                let rep = verify_and_certify(&x, t, VERIFY_TOL);
                ensure!(rep.pass, "t={t} radii={radii:?}: fails verification");
                ensure!(rep.tight == Some(true), "t={t} radii={radii:?}: tight = {:?}", rep.tight);
            }
        }
    }
    Ok(())
}

fn fg_designs() -> Check {
    for lambda in [0.5, 2.0, 5.0] {
        for case in [FgCase::D3T5, FgCase::D3T7, FgCase::D4T7] {
            let t = case.strength();
            let x = fg_design(case, lambda).map_err(|e| e.to_string())?;
            ensure!(x.len() == case.size(), "{case:?}: size {}", x.len());
            let m = verify_and_certify(&x, t, VERIFY_TOL);
            let h = verify_design_harmonic(&x, t, VERIFY_TOL).map_err(|e| e.to_string())?;
            ensure!(m.pass && h.pass, "{case:?} lambda={lambda}: moments {} harmonic {}", m.pass, h.pass);
            ensure!(m.tight == Some(true), "{case:?} lambda={lambda}: tight = {:?}", m.tight);
        }
    }
    let p = fg_parameters_exact(FgCase::D3T7, &q(3, 8)).map_err(|e| e.to_string())?;
    ensure!(p.weights[1] == q(1, 10) && p.weights[2] == q(8, 5), "special weights {:?}", p.weights);
    ensure!(p.radius_squared[1] == q(2, 1) && p.radius_squared[2] == q(3, 4), "special radii {:?}", p.radius_squared);
    Ok(())
}

fn lifting() -> Check {
    let seed = tight_polygon_design(5, &[1.0, 1.6]).map_err(|e| e.to_string())?;
    let before = layer_decompose(&seed, GROUP_TOL).map_err(|e| e.to_string())?;
    for (n, size) in [(3, 24), (4, 72)] {
        let x = lift_to_dimension(&seed, n, 5).map_err(|e| e.to_string())?;
        ensure!(x.len() == size, "n={n}: size {}", x.len());
        ensure!(verify_euclidean_design(&x, 5, VERIFY_TOL).pass, "n={n}: lifted design fails at t=5");
        let after = layer_decompose(&x, GROUP_TOL).map_err(|e| e.to_string())?;
        ensure!(after.radii.len() == before.radii.len(), "n={n}: layer count changed");
        for (a, b) in before.layer_mass.iter().zip(&after.layer_mass) {
            ensure!((a - b).abs() <= 1e-12 * a, "n={n}: layer mass {a} became {b}");
        }
        for (a, b) in before.radii.iter().zip(&after.radii) {
            ensure!((a - b).abs() <= 1e-12 * a, "n={n}: radius {a} became {b}");
        }
    }
    Ok(())
}

fn harmonic_machinery() -> Check {
    for n in 2..=5 {
        for s in 0..=8u32 {
            // construction rejects any element whose Laplacian is nonzero
            let b = build_phi_basis(n, s).map_err(|e| e.to_string())?;
            let dim = harmonic_dimension(n, s).map_err(|e| e.to_string())?;
            ensure!(b.len() as u64 == dim, "n={n} s={s}: {} elements, dimension {dim}", b.len());
            if s % 2 == 0 {
                let fe = feven_filter(&b).len() as u64;
                let want = binomial(n as i64 + s as i64 / 2 - 2, n as i64 - 2).map_err(|e| e.to_string())?;
                ensure!(fe == want, "n={n} s={s}: {fe} fully even elements, expected {want}");
            }
        }
    }
    for s in [4i64, 6, 8] {
        for n in 2..=8i64 {
            let lhs = binomial(n + s / 2 - 2, n - 2).unwrap();
            let rhs: u64 = (2..=s / 2).map(|j| binomial(s / 2 - 2, j - 2).unwrap() * binomial(n, j).unwrap()).sum();
            ensure!(lhs == rhs, "s={s} n={n}: {lhs} != {rhs}");
        }
    }
    for n in 2..=5 {
        for k in 1..=n {
            let shell = lattice_shell(n, k).map_err(|e| e.to_string())?;
            let mut cases = vec![(SpecialHarmonic::F42, vec![0, 1])];
            if n >= 3 {
                cases.push((SpecialHarmonic::F63, vec![0, 1, 2]));
            }
            for (name, vars) in cases {
                let f = special_harmonics(n, name, &vars).map_err(|e| e.to_string())?;
                let brute: f64 = shell.iter().map(|p| f.eval(p)).sum();
                let closed = shell_harmonic_sum(n, k, name).map_err(|e| e.to_string())?;
                ensure!(brute == closed as f64, "{name:?} n={n} k={k}: brute {brute} closed {closed}");
            }
        }
    }
    Ok(())
}

fn random_sphere_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if r > 0.1 && r <= 1.0 {
            return v.iter().map(|a| a / r).collect();
        }
    }
}

fn random_rotation(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = Vec::new();
    while q.len() < n {
        let mut v = random_sphere_point(rng, n);
        for u in &q {
            let d: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            for (a, b) in v.iter_mut().zip(u) {
                *a -= d * b;
            }
        }
        let r = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if r > 1e-3 {
            q.push(v.iter().map(|a| a / r).collect());
        }
    }
    q
}

/// Orbit of `(a, …, a, 0, …, 0)` (`ones` copies of `a`) under signed permutations.
fn orbit(n: usize, ones: usize, a: f64) -> Vec<Vec<f64>> {
    lattice_shell(n, ones).unwrap().into_iter().map(|p| p.iter().map(|c| c * a).collect()).collect()
}

fn random_set(rng: &mut ChaCha8Rng, kind: usize) -> WeightedPointSet {
    let n = rng.gen_range(2..=4);
    match kind {
        0 => {
            let k = rng.gen_range(1..=10);
            let mut pts = Vec::new();
            let mut ws = Vec::new();
            for _ in 0..k {
                let r = rng.gen_range(0.5..2.0);
                let p: Vec<f64> = random_sphere_point(rng, n).iter().map(|c| c * r).collect();
                let w = rng.gen_range(0.1..2.0);
                pts.push(p.iter().map(|c| -c).collect());
                pts.push(p);
                ws.extend([w, w]);
            }
            WeightedPointSet::new(n, pts, ws).unwrap()
        }
        1 => {
            let mut pts = Vec::new();
            let mut ws = Vec::new();
            let shells: Vec<usize> = (1..=n).filter(|&k| (1usize << k) * binomial(n as i64, k as i64).unwrap() as usize <= 24).collect();
            for _ in 0..rng.gen_range(1..=2) {
                let k = shells[rng.gen_range(0..shells.len())];
                let o = orbit(n, k, rng.gen_range(0.3..2.0));
                if pts.len() + o.len() > 40 {
                    break;
                }
                let w = rng.gen_range(0.1..2.0);
                ws.extend(std::iter::repeat_n(w, o.len()));
                pts.extend(o);
            }
            WeightedPointSet::new(n, pts, ws).unwrap()
        }
        2 => {
            let designs = [
                tight_polygon_design(rng.gen_range(1..=6), &[rng.gen_range(0.5..2.0)]).unwrap(),
                lift_to_dimension(&tight_polygon_design(5, &[1.0]).unwrap(), 3, 5).unwrap(),
                lift_to_dimension(&tight_polygon_design(3, &[1.0]).unwrap(), 4, 3).unwrap(),
                fg_design(FgCase::D3T5, rng.gen_range(0.3..3.0)).unwrap(),
                fg_design(FgCase::D3T7, rng.gen_range(0.3..3.0)).unwrap(),
                tight_polygon_design(4, &[1.0, rng.gen_range(1.2..3.0)]).unwrap(),
            ];
            let x = designs[rng.gen_range(0..designs.len())].clone();
            let qm = random_rotation(rng, x.dim());
            x.transformed(&qm).unwrap()
        }
        _ => {
            let k = rng.gen_range(1..=40);
            let pts: Vec<Vec<f64>> = (0..k)
                .map(|_| random_sphere_point(rng, n).iter().map(|c| c * rng.gen_range(0.5..2.0)).collect())
                .collect();
            let ws = (0..k).map(|_| rng.gen_range(0.1..2.0)).collect();
            WeightedPointSet::new(n, pts, ws).unwrap()
        }
    }
}

fn verifier_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut passes = 0;
    for i in 0..100 {
        let x = random_set(&mut rng, i % 4);
        ensure!(x.len() <= 40 && x.dim() <= 4, "set {i} out of range");
        let t = rng.gen_range(1..=6);
        let m = verify_euclidean_design(&x, t, VERIFY_TOL).pass;
        let h = verify_design_harmonic(&x, t, VERIFY_TOL).map_err(|e| e.to_string())?.pass;
        ensure!(m == h, "set {i} (kind {}, n={}, |X|={}, t={t}): moments {m}, harmonic {h}", i % 4, x.dim(), x.len());
        passes += m as usize;
    }
    ensure!(passes > 10 && passes < 90, "degenerate sample: {passes} of 100 pass");

    let mut constructed = Vec::new();
    for lambda in [0.5, 2.0, 5.0] {
        for case in [FgCase::D3T5, FgCase::D3T7, FgCase::D4T7] {
            constructed.push(fg_design(case, lambda).unwrap());
        }
    }
    for t in 1..=13usize {
        for p in 1..=(t + 5) / 4 {
            let radii: Vec<f64> = (0..p).map(|k| 1.0 + 0.4 * k as f64).collect();
            constructed.push(tight_polygon_design(t, &radii).unwrap());
        }
    }
    let seed = tight_polygon_design(5, &[1.0, 1.6]).unwrap();
    constructed.push(lift_to_dimension(&seed, 3, 5).unwrap());
    for n in 2..=4 {
        for k in 1..=n {
            let pts = orbit(n, k, 1.0);
            constructed.push(WeightedPointSet::unweighted(n, pts).unwrap());
        }
    }
    let mut applicable = 0;
    for x in &constructed {
        let ld = layer_decompose(x, GROUP_TOL).map_err(|e| e.to_string())?;
        if check_fully_symmetric(&ld, GROUP_TOL).is_err() {
            continue;
        }
        applicable += 1;
        for t in [3, 5, 7] {
            let fast = fully_symmetric_check(&ld, t, VERIFY_TOL).map_err(|e| e.to_string())?.pass;
            let full = verify_euclidean_design(x, t, VERIFY_TOL).pass;
            ensure!(fast == full, "n={} |X|={} t={t}: symmetric check {fast}, full verifier {full}", x.dim(), x.len());
        }
    }
    ensure!(applicable >= 9, "only {applicable} constructed designs are fully symmetric");
    Ok(())
}

fn negative_controls() -> Check {
    let mut designs = vec![
        (tight_polygon_design(5, &[1.0]).unwrap(), 5),
        (tight_polygon_design(4, &[1.0, 2.0]).unwrap(), 4),
        (tight_polygon_design(9, &[1.0, 1.5, 2.5]).unwrap(), 9),
        (lift_to_dimension(&tight_polygon_design(5, &[1.0, 1.6]).unwrap(), 3, 5).unwrap(), 5),
    ];
    for case in [FgCase::D3T5, FgCase::D3T7, FgCase::D4T7] {
        designs.push((fg_design(case, 2.0).unwrap(), case.strength()));
    }
    for (x, t) in &designs {
        ensure!(verify_euclidean_design(x, *t, VERIFY_TOL).pass, "control design fails before perturbation");
        for i in 0..x.len() {
            let y = x.with_weight(i, x.weights()[i] * (1.0 + 1e-3)).unwrap();
            ensure!(!verify_euclidean_design(&y, *t, VERIFY_TOL).pass, "|X|={} t={t}: perturbing weight {i} still passes (moments)", x.len());
            ensure!(
                !verify_design_harmonic(&y, *t, VERIFY_TOL).unwrap().pass,
                "|X|={} t={t}: perturbing weight {i} still passes (harmonic)",
                x.len()
            );
        }
    }
    for t in 1..=13usize {
        for p in 2..=(t + 5) / 4 {
            let radii: Vec<f64> = (0..p).map(|k| 1.0 + 0.5 * k as f64).collect();
            let x = polygon_design(t, &radii, LayerOffset::None).unwrap();
            ensure!(!verify_euclidean_design(&x, t, VERIFY_TOL).pass, "t={t} p={p}: design without layer rotation passes");
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 fisher bounds", 1, fisher_bounds),
        ("2 interval designs", 5, interval_designs),
        ("3 tight polygon designs", 30, polygon_designs),
        ("4 lattice shell designs", 10, fg_designs),
        ("5 lifting", 10, lifting),
        ("6 harmonic machinery", 10, harmonic_machinery),
        ("7 verifier agreement", 60, verifier_agreement),
        ("8 negative controls", 60, negative_controls),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(_) => Err("panicked".into()),
        };
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= Duration::from_secs(limit) {
                Ok(())
            } else {
                Err(format!("took {:.2} s, limit {limit} s", elapsed.as_secs_f64()))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {name}: PASS ({:.2} s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.2} s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
