//! End-to-end acceptance gate: one printed pass/fail line per headline claim.

use std::time::{Duration, Instant};

use sympow::expr::parse_element;
use sympow::names::combo_str;
use sympow::oracle::mu_kernel_oracle;
use sympow::presentation::Presentation;
use sympow::verify::{run, Suite};
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn gate(name: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("PASS {name}"),
        Err(e) => {
            println!("FAIL {name}: {e}");
            panic!("{name}: {e}");
        }
    }
}

fn suite(s: Suite, budget: Option<Duration>) -> Result<(), String> {
    let start = Instant::now();
    let report = run(s);
    let elapsed = start.elapsed();
    if !report.all_passed() {
        let lines: Vec<String> = report
            .render()
            .lines()
            .filter(|l| l.starts_with("FAIL"))
            .map(str::to_string)
            .collect();
        return Err(lines.join("; "));
    }
    if let Some(budget) = budget {
        if elapsed > budget {
            return Err(format!("suite took {elapsed:?}, budget {budget:?}"));
        }
    }
    Ok(())
}

fn build(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc) -> Presentation {
    Presentation::new(SpaceSpec::new(id, field, coeff, trunc)).unwrap()
}

#[test]
fn acceptance_01_printed_tables_reproduce() {
    gate(
        "printed basis tables reproduce byte for byte, under 10s",
        suite(Suite::Appendix, Some(Duration::from_secs(10))),
    );
}

#[test]
fn acceptance_02_fixed_point_oracle_agrees() {
    gate(
        "fixed point oracle matches the truncated presentations, under 60s",
        suite(Suite::Oracle, Some(Duration::from_secs(60))),
    );
}

#[test]
fn acceptance_03_restriction_kernels_are_the_stated_ideals() {
    gate(
        "restriction and connecting kernels equal their stated ideals",
        suite(Suite::Kernels, None),
    );
}

#[test]
fn acceptance_04_symmetric_function_kernel() {
    gate(
        "kernel of the symmetric function projection is the stated ideal",
        (|| {
            for d in [2usize, 4] {
                for n in 1..=4u32 {
                    mu_kernel_oracle(n, d, (n as usize + 4) * d)
                        .map_err(|e| format!("n={n} d={d}: {e}"))?;
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn acceptance_05_recurrences_match_closed_forms() {
    gate(
        "recurrence families match closed forms, under 5s",
        suite(Suite::ClosedForms, Some(Duration::from_secs(5))),
    );
}

#[test]
fn acceptance_06_named_product_relations() {
    gate(
        "named product relations hold via normal forms",
        (|| {
            for field in [Field::C, Field::H] {
                let sp23 = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(3));
                let nf = |text: &str| -> Result<String, String> {
                    let (_, combo) = sp23
                        .normal_form(&parse_element(text).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    Ok(combo_str(&combo))
                };
                let got = nf("g^4")?;
                if got != "4*(g^2*h/2) - h^2/2" {
                    return Err(format!("g^4 = {got}"));
                }
                let got = nf("g^3*h/2")?;
                if got != "3*(g*h^2/4)" {
                    return Err(format!("g^3*h/2 = {got}"));
                }

                let sp2 = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf);
                let (_, combo) = sp2
                    .multiply(
                        &parse_element("g").unwrap(),
                        &parse_element("h").unwrap(),
                    )
                    .map_err(|e| e.to_string())?;
                if combo_str(&combo) != "2*(g*h/2)" {
                    return Err(format!("g*h = {}", combo_str(&combo)));
                }

                let mp = build(SpaceId::Mp, field, CoeffRing::F2, Trunc::Inf);
                let (_, combo) = mp
                    .multiply(
                        &parse_element("t").unwrap(),
                        &parse_element("t").unwrap(),
                    )
                    .map_err(|e| e.to_string())?;
                if combo_str(&combo) != "m*t" {
                    return Err(format!("t*t = {}", combo_str(&combo)));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn acceptance_07_integral_odd_cohomology_support() {
    gate(
        "integral odd cohomology vanishes exactly where stated",
        (|| {
            for (field, vanish) in [
                (Field::C, vec![1usize, 3, 5]),
                (Field::H, vec![1, 3, 5, 9]),
            ] {
                let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf);
                for k in (1..=30).step_by(2) {
                    let zero = p.poincare(k).map_err(|e| e.to_string())? == (0, 0);
                    if zero != vanish.contains(&k) {
                        return Err(format!(
                            "degree {k} is {} for field {field:?}",
                            if zero { "zero" } else { "non-zero" }
                        ));
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn acceptance_08_top_lattice_class() {
    gate(
        "truncated rings end on the divided top class",
        (|| {
            for field in [Field::C, Field::H] {
                let d = field.d();
                for n in 1..=4u32 {
                    let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(n));
                    let top = 2 * n as usize * d;
                    if p.poincare(top).map_err(|e| e.to_string())? != (1, 0) {
                        return Err(format!("top degree of SP2_{n} is not free of rank one"));
                    }
                    let want = if n == 1 {
                        "h".to_string()
                    } else {
                        format!("h^{}/{}", n, 1u64 << (n - 1))
                    };
                    let got = p.piece(top).map_err(|e| e.to_string())?.basis[0].display_name();
                    if got != want {
                        return Err(format!("top class is {got}, expected {want}"));
                    }
                    for k in top + 1..=top + 3 * d {
                        if p.poincare(k).map_err(|e| e.to_string())? != (0, 0) {
                            return Err(format!("SP2_{n} is non-zero in degree {k}"));
                        }
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn acceptance_09_sequence_catalogue_is_exact() {
    gate(
        "the sequence catalogue is exact degree-wise",
        suite(Suite::Exactness, None),
    );
}

#[test]
fn acceptance_10_universal_coefficients() {
    gate(
        "mod two dimensions match free ranks plus adjacent torsion",
        (|| {
            let pairs: [(SpaceId, Trunc); 12] = [
                (SpaceId::Kp, Trunc::Inf),
                (SpaceId::Kp, Trunc::N(3)),
                (SpaceId::Rp, Trunc::Inf),
                (SpaceId::Rk, Trunc::Inf),
                (SpaceId::Rk, Trunc::N(3)),
                (SpaceId::Gamma, Trunc::Inf),
                (SpaceId::Gamma, Trunc::N(2)),
                (SpaceId::Mp, Trunc::Inf),
                (SpaceId::Mp, Trunc::N(2)),
                (SpaceId::Sp2, Trunc::Inf),
                (SpaceId::Sp2, Trunc::N(2)),
                (SpaceId::Grass, Trunc::N(3)),
            ];
            for field in [Field::C, Field::H] {
                let max = 10 * field.d();
                for (id, trunc) in pairs {
                    let zp = build(id, field, CoeffRing::Z, trunc);
                    let fp = build(id, field, CoeffRing::F2, trunc);
                    for k in 0..=max {
                        let (zf, zt) = zp.poincare(k).map_err(|e| e.to_string())?;
                        let (_, nt) = zp.poincare(k + 1).map_err(|e| e.to_string())?;
                        let (ff, ft) = fp.poincare(k).map_err(|e| e.to_string())?;
                        if ff + ft != zf + zt + nt {
                            return Err(format!(
                                "{} degree {k}: {ff}+{ft} != {zf}+{zt}+{nt}",
                                zp.spec.display_name()
                            ));
                        }
                    }
                }
            }
            Ok(())
        })(),
    );
}
