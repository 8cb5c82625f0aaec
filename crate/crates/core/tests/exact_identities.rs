use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use tdesign::exact::{
    interval_mass, interval_monomial_average, interval_weighted_average, sphere_monomial_average, sphere_surface,
};

fn even_tuples(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let mut a = 0;
        while a <= left {
            cur.push(a);
            rec(n, left - a, cur, out);
            cur.pop();
            a += 2;
        }
    }
    let mut out = Vec::new();
    rec(n, max_total, &mut Vec::new(), &mut out);
    out
}

#[test]
fn sphere_average_factorises_through_the_interval() {
    for n in 3..=6 {
        for alpha in even_tuples(n, 12) {
            let whole = sphere_monomial_average(n, &alpha).unwrap().value;
            let head = &alpha[..n - 1];
            let lower = sphere_monomial_average(n - 1, head).unwrap().value;
            let m: u32 = head.iter().sum();
            let radial = interval_weighted_average(n, m, alpha[n - 1]).unwrap();
            assert_eq!(whole, lower * radial, "n={n} alpha={alpha:?}");
        }
    }
}

#[test]
fn surface_area_splits_into_lower_sphere_and_interval_mass() {
    let one = BigRational::one();
    for n in 3..=10 {
        let lhs = sphere_surface(n, &one).unwrap();
        let rhs = sphere_surface(n - 1, &one).unwrap() * interval_mass(n).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn interval_average_matches_unweighted_factor() {
    for n in 2..=7 {
        for k in 0..=12 {
            assert_eq!(
                interval_weighted_average(n, 0, k).unwrap(),
                interval_monomial_average(n, k).unwrap()
            );
        }
    }
}

#[test]
fn total_sphere_mass_of_even_squares() {
    // Σ_i avg(x_i²) = avg(|x|²) = 1
    for n in 2..=9 {
        let mut total = BigRational::from_integer(BigInt::from(0));
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 2;
            total += sphere_monomial_average(n, &e).unwrap().value;
        }
        assert!(total.is_one(), "n={n}");
    }
}
