//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances and time budgets are fixed here.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use pzeta_core::exact::{is_reduced, partition_zeta_exact, schneider_coefficient, zeta_even_exact};
use pzeta_core::numeric::{
    direct_sum_truncated, euler_product_eval, partition_zeta_family, pole_order_estimate,
    riemann_zeta, ProductForm,
};
use pzeta_core::qseries::{faa_di_bruno_check, macmahon_exact_identity, macmahon_lhs, macmahon_rhs, restricted_genfun_coeffs};
use pzeta_core::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn schneider_exact() -> Outcome {
    for k in 1..=20u32 {
        let lhs = partition_zeta_exact(1, k).map_err(|e| e.to_string())?;
        let zeta = zeta_even_exact(2 * k).map_err(|e| e.to_string())?;
        let coeff = schneider_coefficient(k).map_err(|e| e.to_string())?;
        let rhs = zeta.scale(&coeff);
        if lhs != rhs {
            return Err(format!("k={k}: {lhs} != {rhs}"));
        }
    }
    Ok("k=1..20 exact equality".into())
}

fn ors_structure() -> Outcome {
    for m in 1..=5u32 {
        for k in 0..=8u32 {
            let v = partition_zeta_exact(m, k).map_err(|e| e.to_string())?;
            if v.exponent != 2 * m * k {
                return Err(format!("m={m} k={k}: exponent {} != {}", v.exponent, 2 * m * k));
            }
            if !is_reduced(&v.coeff) || v.coeff <= BigRational::from_integer(BigInt::from(0)) {
                return Err(format!("m={m} k={k}: coefficient {} not reduced positive", v.coeff));
            }
        }
    }
    Ok("m<=5, k<=8: exponent 2mk, reduced positive coefficient".into())
}

fn formula_vs_definition() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [c(2.0, 0.0), c(3.0, 0.0), c(2.5, 1.0)] {
        for k in 1..=5u32 {
            let mut m = 16u64;
            let direct = loop {
                let r = direct_sum_truncated(s, k, m).map_err(|e| e.to_string())?;
                if r.est_error < 1e-4 {
                    break r;
                }
                m *= 2;
            };
            let formula = partition_zeta_family(s, k).map_err(|e| e.to_string())?;
            let gap = (formula.value - direct.value).norm();
            if gap > direct.est_error + 1e-9 {
                return Err(format!(
                    "s={s} k={k} M={m}: gap {gap:e} > est_error {:e} + 1e-9",
                    direct.est_error
                ));
            }
            worst = worst.max(gap / (direct.est_error + 1e-9));
        }
    }
    Ok(format!("15 cases; worst gap / allowance = {worst:.3}"))
}

fn pole_orders() -> Outcome {
    for k in 1..=5u32 {
        for j in 1..=k {
            let d = pole_order_estimate(k, j).map_err(|e| format!("k={k} j={j}: {e}"))?;
            if d != k / j {
                return Err(format!("k={k} j={j}: estimated {d}, expected {}", k / j));
            }
        }
    }
    Ok("all 1<=j<=k<=5 match floor(k/j)".into())
}

fn trivial_roots() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [-2.0, -4.0, -6.0] {
        for k in 1..=5u32 {
            let v = partition_zeta_family(c(s, 0.0), k).map_err(|e| e.to_string())?.value.norm();
            if v >= 1e-9 {
                return Err(format!("s={s} k={k}: |value| = {v:e}"));
            }
            worst = worst.max(v);
        }
    }
    Ok(format!("max |value| = {worst:e}"))
}

fn nontrivial_spot_check() -> Outcome {
    let s = c(0.5, 14.134_725);
    let mut mags = Vec::new();
    for k in [2u32, 3] {
        let v = partition_zeta_family(s, k).map_err(|e| e.to_string())?.value.norm();
        if v <= 1e-3 {
            return Err(format!("k={k}: |value| = {v:e}"));
        }
        mags.push(format!("k={k}: {v:.4}"));
    }
    Ok(mags.join(", "))
}

fn macmahon() -> Outcome {
    for k in 1..=12u32 {
        if !macmahon_exact_identity(k) {
            return Err(format!("rational-function identity fails at k={k}"));
        }
    }
    for k in 1..=10u32 {
        let order = 2 * k as usize + 10;
        let lhs = macmahon_lhs(k, order).map_err(|e| e.to_string())?;
        let rhs = macmahon_rhs(k, order).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("series identity fails at k={k}, order {order}"));
        }
    }
    Ok("exact k=1..12; series k=1..10 at order 2k+10".into())
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn faa_di_bruno() -> Outcome {
    let harmonic: Vec<_> = (1..=12).map(|j| rational(1, j)).collect();
    if !faa_di_bruno_check(&harmonic, 12) {
        return Err("a_j = 1/j fails".into());
    }
    let mut exp_case = vec![rational(0, 1); 10];
    exp_case[0] = rational(1, 1);
    if !faa_di_bruno_check(&exp_case, 10) {
        return Err("e^x case fails".into());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let a: Vec<_> = (0..15)
            .map(|_| {
                let d = rng.gen_range(1..=6i64);
                rational(rng.gen_range(-5 * d..=5 * d), d)
            })
            .collect();
        if !faa_di_bruno_check(&a, 15) {
            return Err(format!("random trial {trial} fails"));
        }
    }
    Ok("2 fixed + 100 random inputs at order 15".into())
}

fn euler_products() -> Outcome {
    let cases = [
        ("even parts, s=2", ProductForm::even_parts(), 2.0, PI / 2.0),
        ("distinct parts, s=2", ProductForm::DistinctParts, 2.0, PI.sinh() / PI),
        (
            "parts != 1, s=3",
            ProductForm::PartsNotOne,
            3.0,
            3.0 * PI / (0.5 * PI * 3f64.sqrt()).cosh(),
        ),
    ];
    let mut report = Vec::new();
    for (label, form, s, expected) in cases {
        let start = Instant::now();
        let r = euler_product_eval(&form, c(s, 0.0), 1_000_000).map_err(|e| e.to_string())?;
        let err = (r.value - c(expected, 0.0)).norm();
        if err >= 1e-6 {
            return Err(format!("{label}: error {err:e}"));
        }
        if start.elapsed() > Duration::from_secs(30) {
            return Err(format!("{label}: took {:?}", start.elapsed()));
        }
        report.push(format!("{label}: {err:.1e}"));
    }
    Ok(report.join("; "))
}

fn zeta_values() -> Outcome {
    let z0 = riemann_zeta(c(0.0, 0.0)).map_err(|e| e.to_string())?.value;
    if (z0 - c(-0.5, 0.0)).norm() >= 1e-12 {
        return Err(format!("ζ(0) = {z0}"));
    }
    let zm2 = riemann_zeta(c(-2.0, 0.0)).map_err(|e| e.to_string())?.value;
    if zm2.norm() >= 1e-12 {
        return Err(format!("ζ(-2) = {zm2}"));
    }
    let mut worst: f64 = 0.0;
    for m in 1..=10u32 {
        let exact = zeta_even_exact(2 * m).map_err(|e| e.to_string())?.to_f64();
        let num = riemann_zeta(c(2.0 * m as f64, 0.0)).map_err(|e| e.to_string())?.value;
        let rel = (num - c(exact, 0.0)).norm() / exact;
        if rel >= 1e-12 {
            return Err(format!("ζ({}) relative error {rel:e}", 2 * m));
        }
        worst = worst.max(rel);
    }
    Ok(format!("ζ(0), ζ(-2) ok; ζ(2m) worst relative {worst:.1e}"))
}

fn genfun_cross_path() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [2.0, 3.0] {
        for m in [1u64, 2, 5, 10, 37, 50, 100] {
            let coeffs = restricted_genfun_coeffs(c(s, 0.0), m, 5).map_err(|e| e.to_string())?;
            for k in 1..=5u32 {
                let direct = direct_sum_truncated(c(s, 0.0), k, m).map_err(|e| e.to_string())?;
                let gap = (coeffs[k as usize] - direct.value).norm();
                if gap >= 1e-12 {
                    return Err(format!("s={s} M={m} k={k}: gap {gap:e}"));
                }
                worst = worst.max(gap);
            }
            if coeffs[0] != c(1.0, 0.0) {
                return Err(format!("s={s} M={m}: constant term {}", coeffs[0]));
            }
        }
    }
    Ok(format!("worst gap {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "Schneider theorem, exact", budget: Some(Duration::from_secs(5)), run: schneider_exact },
        Criterion { id: 2, name: "pi^{2mk} x rational structure", budget: Some(Duration::from_secs(10)), run: ors_structure },
        Criterion { id: 3, name: "explicit formula vs truncated definition", budget: Some(Duration::from_secs(60)), run: formula_vs_definition },
        Criterion { id: 4, name: "pole orders floor(k/j)", budget: Some(Duration::from_secs(10)), run: pole_orders },
        Criterion { id: 5, name: "trivial roots at -2, -4, -6", budget: None, run: trivial_roots },
        Criterion { id: 6, name: "non-vanishing at first nontrivial zeta zero", budget: None, run: nontrivial_spot_check },
        Criterion { id: 7, name: "MacMahon partial fractions", budget: Some(Duration::from_secs(30)), run: macmahon },
        Criterion { id: 8, name: "Faa di Bruno formula", budget: Some(Duration::from_secs(10)), run: faa_di_bruno },
        Criterion { id: 9, name: "Euler product evaluations", budget: Some(Duration::from_secs(90)), run: euler_products },
        Criterion { id: 10, name: "zeta(0), zeta(-2), zeta(2m)", budget: None, run: zeta_values },
        Criterion { id: 11, name: "generating function vs direct sum", budget: None, run: genfun_cross_path },
    ];

    let mut failures = 0;
    for cr in &criteria {
        let start = Instant::now();
        let mut outcome = (cr.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(budget)) = (&outcome, cr.budget) {
            if elapsed > budget {
                outcome = Err(format!("exceeded time budget {budget:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {} ({:.2?}): {detail}", cr.id, cr.name, elapsed),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{:>2}] {} ({:.2?}): {detail}", cr.id, cr.name, elapsed);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
