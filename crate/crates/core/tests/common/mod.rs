//! Property checks shared by the property tests and the acceptance run.
#![allow(dead_code)]

use fusion_cert::census::{census_grid, is_orbit_max, totally_positive_unit_classify, DNumber};
use fusion_cert::certified::SignContext;
use fusion_cert::fusion::builtin_r;
use fusion_cert::{Automorphism, CycNum};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub fn cyc() -> impl Strategy<Value = CycNum> {
    proptest::array::uniform6((-40i64..=40, 1i64..=6)).prop_map(|c| {
        CycNum::from_coeffs(c.map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q))))
    })
}

pub fn automorphism() -> impl Strategy<Value = Automorphism> {
    prop::sample::select(vec![1i64, 2, 4, 5, 7, 8]).prop_map(|k| Automorphism::new(k).unwrap())
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(cyc(), cyc(), cyc()), |(x, y, z)| {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert_eq!(&x * &CycNum::one(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        Ok(())
    }))
}

pub fn galois_group_law(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(automorphism(), automorphism(), cyc(), cyc()), |(g, h, x, y)| {
        prop_assert_eq!(g.compose(h).apply(&x), g.apply(&h.apply(&x)));
        prop_assert_eq!(g.apply(&(&x * &y)), &g.apply(&x) * &g.apply(&y));
        prop_assert_eq!(g.apply(&(&x + &y)), &g.apply(&x) + &g.apply(&y));
        prop_assert!(g.compose(g.inverse()).is_identity());
        prop_assert!(g.pow(g.order()).is_identity());
        Ok(())
    }))
}

pub fn norm_multiplicative(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(cyc(), cyc()), |(x, y)| {
        prop_assert_eq!((&x * &y).norm_full(), x.norm_full() * y.norm_full());
        Ok(())
    }))
}

/// Parity rule against certified signs for every `±u₁ˣu₂ʸ`, `|x|, |y| ≤ 6`.
pub fn parity_sweep() -> Result<usize, String> {
    let mut ctx = SignContext::new();
    let mut n = 0;
    for positive in [true, false] {
        for x in -6..=6 {
            for y in -6..=6 {
                totally_positive_unit_classify(&mut ctx, positive, x, y).map_err(|e| e.to_string())?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `log` of the identity-embedding value of a d-number, in floating point.
fn log_value(n: &DNumber) -> f64 {
    let a = 2.0 * (std::f64::consts::PI / 9.0).cos();
    let (u1, u2, beta) = (a * a - 2.0, 1.0 + a, 2.0 + a);
    n.a as f64 * 3f64.ln() + 2.0 * (n.b as f64 * u1.ln() + n.c as f64 * u2.ln()) + n.d as f64 * beta.ln()
}

/// Exact orbit-maximality against the log oracle over the census grid;
/// returns the number of grid points compared.
pub fn orbit_max_oracle() -> Result<usize, String> {
    let mut ctx = SignContext::new();
    let grid = census_grid();
    for n in &grid {
        let exact = is_orbit_max(&mut ctx, n).map_err(|e| e.to_string())?;
        let me = log_value(n);
        let oracle = n.orbit_conjugates()[1..].iter().all(|c| me >= log_value(c) - 1e-9);
        if exact != oracle {
            return Err(format!("orbit maximality disagrees at {n}"));
        }
    }
    Ok(grid.len())
}

/// Every single-entry `±1` mutant of the built-in ring must fail
/// validation; returns the number of mutants.
pub fn mutants_caught() -> Result<usize, String> {
    let r = builtin_r();
    let mut n = 0;
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                let v = r.n(i, j, k);
                let mut vals = vec![v + 1];
                if v > 0 {
                    vals.push(v - 1);
                }
                for w in vals {
                    n += 1;
                    if r.with_entry(i, j, k, w).validate().is_valid() {
                        return Err(format!("mutant N({i},{j},{k}) = {w} passes validation"));
                    }
                }
            }
        }
    }
    Ok(n)
}
