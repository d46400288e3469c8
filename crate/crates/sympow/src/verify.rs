//! Named verification suites driving every catalogued claim end to end.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::expr::parse_element;
use crate::fib::{
    binomial, family_by_closed_form, family_by_recurrence, lucas_parity, powersum_identities,
    FamilyId,
};
use crate::homs::{self, spans_equal, Hom};
use crate::names::combo_str;
use crate::oracle;
use crate::poly::{Mono, Poly, E1, E2, L1, L2, M, Y, Z};
use crate::presentation::{scaled_unit_vec, unit_vec, GenLabel, Presentation};
use crate::report::{render_csv, table_report};
use crate::space::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

const FIELDS: [Field; 2] = [Field::C, Field::H];

/// One verification suite, or the union of all of them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Appendix,
    Oracle,
    Kernels,
    ClosedForms,
    Exactness,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        match s {
            "appendix" => Ok(Suite::Appendix),
            "oracle" => Ok(Suite::Oracle),
            "kernels" => Ok(Suite::Kernels),
            "closedforms" => Ok(Suite::ClosedForms),
            "exactness" => Ok(Suite::Exactness),
            "all" => Ok(Suite::All),
            other => Err(Error::BadArg(format!(
                "unknown suite '{other}': expected appendix|oracle|exactness|kernels|closedforms|all"
            ))),
        }
    }
}

/// Result of one named check: no error means it passed.
pub struct CheckOutcome {
    pub name: String,
    pub error: Option<String>,
}

/// Outcomes for a whole suite, in declaration order.
pub struct SuiteReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.error.is_none())
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| o.error.is_some()).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            match &o.error {
                None => out.push_str(&format!("PASS {}\n", o.name)),
                Some(e) => out.push_str(&format!("FAIL {}: {}\n", o.name, e)),
            }
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.outcomes.len(),
            self.failures()
        ));
        out
    }
}

struct Check {
    name: String,
    run: Box<dyn Fn() -> Result<()> + Send + Sync>,
}

fn check(name: impl Into<String>, f: impl Fn() -> Result<()> + Send + Sync + 'static) -> Check {
    Check {
        name: name.into(),
        run: Box::new(f),
    }
}

/// Worker count: SYMPOW_THREADS, with 0 or unset meaning all available cores.
pub fn thread_count() -> usize {
    let auto = || {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    };
    match std::env::var("SYMPOW_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => auto(),
            Ok(n) => n,
        },
        Err(_) => auto(),
    }
}

fn run_one(c: &Check) -> CheckOutcome {
    let error = match catch_unwind(AssertUnwindSafe(|| (c.run)())) {
        Ok(Ok(())) => None,
        Ok(Err(e)) => Some(e.to_string()),
        Err(p) => Some(if let Some(s) = p.downcast_ref::<&str>() {
            format!("panic: {s}")
        } else if let Some(s) = p.downcast_ref::<String>() {
            format!("panic: {s}")
        } else {
            "panic".to_string()
        }),
    };
    CheckOutcome {
        name: c.name.clone(),
        error,
    }
}

/// Runs every check in the suite, in parallel when allowed, and reports
/// outcomes in a stable order.
pub fn run(suite: Suite) -> SuiteReport {
    let checks = collect(suite);
    let n = checks.len();
    let workers = thread_count().min(n.max(1));
    let mut slots: Vec<Option<CheckOutcome>> = Vec::new();
    slots.resize_with(n, || None);
    if workers <= 1 {
        for (i, c) in checks.iter().enumerate() {
            slots[i] = Some(run_one(c));
        }
    } else {
        let next = AtomicUsize::new(0);
        let done: Mutex<Vec<(usize, CheckOutcome)>> = Mutex::new(Vec::with_capacity(n));
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    if i >= n {
                        break;
                    }
                    let out = run_one(&checks[i]);
                    done.lock().unwrap().push((i, out));
                });
            }
        });
        for (i, out) in done.into_inner().unwrap() {
            slots[i] = Some(out);
        }
    }
    SuiteReport {
        outcomes: slots.into_iter().map(|o| o.unwrap()).collect(),
    }
}

fn collect(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Appendix => appendix_checks(),
        Suite::Oracle => oracle_checks(),
        Suite::Kernels => kernels_checks(),
        Suite::ClosedForms => closedforms_checks(),
        Suite::Exactness => exactness_checks(),
        Suite::All => {
            let mut v = appendix_checks();
            v.extend(oracle_checks());
            v.extend(kernels_checks());
            v.extend(closedforms_checks());
            v.extend(exactness_checks());
            v
        }
    }
}

fn fname(f: Field) -> &'static str {
    match f {
        Field::C => "C",
        Field::H => "H",
    }
}

fn build(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc) -> Result<Presentation> {
    Presentation::new(SpaceSpec::new(id, field, coeff, trunc))
}

fn first_diff(got: &str, want: &str) -> String {
    for (i, (g, w)) in got.lines().zip(want.lines()).enumerate() {
        if g != w {
            return format!("line {}: got '{}', want '{}'", i + 1, g, w);
        }
    }
    format!(
        "line counts differ: got {}, want {}",
        got.lines().count(),
        want.lines().count()
    )
}

fn expect_normal_form(p: &Presentation, input: &str, want: &str) -> Result<()> {
    let elt = parse_element(input)?;
    let (_, combo) = p.normal_form(&elt)?;
    let got = combo_str(&combo);
    if got == want {
        Ok(())
    } else {
        Err(Error::CheckFailed(format!(
            "normal form of {input} is {got}, expected {want}"
        )))
    }
}

fn expect_product(p: &Presentation, a: &str, b: &str, want: &str) -> Result<()> {
    let (_, combo) = p.multiply(&parse_element(a)?, &parse_element(b)?)?;
    let got = combo_str(&combo);
    if got == want {
        Ok(())
    } else {
        Err(Error::CheckFailed(format!(
            "{a} * {b} is {got}, expected {want}"
        )))
    }
}

struct GoldenTable {
    tag: &'static str,
    id: SpaceId,
    field: Field,
    coeff: CoeffRing,
    trunc: Trunc,
    max_degree: usize,
    want: &'static str,
}

const GOLDEN: [GoldenTable; 8] = [
    GoldenTable {
        tag: "SP2 mod2 C",
        id: SpaceId::Sp2,
        field: Field::C,
        coeff: CoeffRing::F2,
        trunc: Trunc::Inf,
        max_degree: 9,
        want: include_str!("../../../data/golden/sp2_f2_c.csv"),
    },
    GoldenTable {
        tag: "SP2 mod2 H",
        id: SpaceId::Sp2,
        field: Field::H,
        coeff: CoeffRing::F2,
        trunc: Trunc::Inf,
        max_degree: 18,
        want: include_str!("../../../data/golden/sp2_f2_h.csv"),
    },
    GoldenTable {
        tag: "SP2 Z C",
        id: SpaceId::Sp2,
        field: Field::C,
        coeff: CoeffRing::Z,
        trunc: Trunc::Inf,
        max_degree: 11,
        want: include_str!("../../../data/golden/sp2_z_c.csv"),
    },
    GoldenTable {
        tag: "SP2 Z H",
        id: SpaceId::Sp2,
        field: Field::H,
        coeff: CoeffRing::Z,
        trunc: Trunc::Inf,
        max_degree: 24,
        want: include_str!("../../../data/golden/sp2_z_h.csv"),
    },
    GoldenTable {
        tag: "SP2_2 mod2 C",
        id: SpaceId::Sp2,
        field: Field::C,
        coeff: CoeffRing::F2,
        trunc: Trunc::N(2),
        max_degree: 8,
        want: include_str!("../../../data/golden/sp2n2_f2_c.csv"),
    },
    GoldenTable {
        tag: "SP2_2 mod2 H",
        id: SpaceId::Sp2,
        field: Field::H,
        coeff: CoeffRing::F2,
        trunc: Trunc::N(2),
        max_degree: 16,
        want: include_str!("../../../data/golden/sp2n2_f2_h.csv"),
    },
    GoldenTable {
        tag: "SP2_3 Z C",
        id: SpaceId::Sp2,
        field: Field::C,
        coeff: CoeffRing::Z,
        trunc: Trunc::N(3),
        max_degree: 12,
        want: include_str!("../../../data/golden/sp2n3_z_c.csv"),
    },
    GoldenTable {
        tag: "SP2_3 Z H",
        id: SpaceId::Sp2,
        field: Field::H,
        coeff: CoeffRing::Z,
        trunc: Trunc::N(3),
        max_degree: 24,
        want: include_str!("../../../data/golden/sp2n3_z_h.csv"),
    },
];

fn appendix_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for g in GOLDEN {
        v.push(check(format!("appendix table {}", g.tag), move || {
            let p = build(g.id, g.field, g.coeff, g.trunc)?;
            let got = render_csv(&table_report(&p, 0, g.max_degree)?)?;
            if got == g.want {
                Ok(())
            } else {
                Err(Error::CheckFailed(first_diff(&got, g.want)))
            }
        }));
    }
    for field in FIELDS {
        v.push(check(
            format!("truncation relations in SP2_3 ({})", fname(field)),
            move || {
                let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(3))?;
                expect_normal_form(&p, "g^4", "4*(g^2*h/2) - h^2/2")?;
                expect_normal_form(&p, "g^3*h/2", "3*(g*h^2/4)")
            },
        ));
        v.push(check(
            format!("product g*h halves ({})", fname(field)),
            move || {
                let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf)?;
                expect_product(&p, "g", "h", "2*(g*h/2)")
            },
        ));
        v.push(check(
            format!("thom class squares to m*t ({})", fname(field)),
            move || {
                let p = build(SpaceId::Mp, field, CoeffRing::F2, Trunc::Inf)?;
                expect_product(&p, "t", "t", "m*t")
            },
        ));
        v.push(check(
            format!("odd torsion support ({})", fname(field)),
            move || {
                let vanish: &[usize] = match field {
                    Field::C => &[1, 3, 5],
                    Field::H => &[1, 3, 5, 9],
                };
                let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf)?;
                for k in (1..=29).step_by(2) {
                    let (f, t) = p.poincare(k)?;
                    let zero = f == 0 && t == 0;
                    if zero != vanish.contains(&k) {
                        return Err(Error::CheckFailed(format!(
                            "odd degree {k}: expected {} classes, found {}",
                            if zero { "some" } else { "no" },
                            f + t
                        )));
                    }
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("top lattice class ({})", fname(field)),
            move || {
                let d = field.d();
                for n in 1..=4u32 {
                    let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(n))?;
                    let top = 2 * n as usize * d;
                    if p.poincare(top)? != (1, 0) {
                        return Err(Error::CheckFailed(format!(
                            "top degree {top} of SP2_{n} is not a single free class"
                        )));
                    }
                    let want = if n == 1 {
                        "h".to_string()
                    } else {
                        format!("h^{}/{}", n, 1u64 << (n - 1))
                    };
                    let got = p.piece(top)?.basis[0].display_name();
                    if got != want {
                        return Err(Error::CheckFailed(format!(
                            "top class of SP2_{n} is {got}, expected {want}"
                        )));
                    }
                    for k in top + 1..=top + 3 * d {
                        if p.poincare(k)? != (0, 0) {
                            return Err(Error::CheckFailed(format!(
                                "SP2_{n} has classes above its top degree, in {k}"
                            )));
                        }
                    }
                }
                Ok(())
            },
        ));
    }
    v
}

fn oracle_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for d in [2usize, 4] {
        for n in 1..=4u32 {
            v.push(check(format!("fixed point oracle d={d} n={n}"), move || {
                let rep = oracle::oracle_vs_presentation(n, d, 4 * n as usize * d)?;
                match rep.first_mismatch {
                    None => Ok(()),
                    Some(k) => Err(Error::CheckFailed(format!(
                        "oracle and presentation disagree in degree {k}"
                    ))),
                }
            }));
            v.push(check(
                format!("oracle stabilization d={d} n={n}"),
                move || {
                    let field = if d == 2 { Field::C } else { Field::H };
                    let gamma = build(SpaceId::Gamma, field, CoeffRing::Z, Trunc::Inf)?;
                    for k in 0..(n as usize + 1) * d {
                        let got = oracle::borel_oracle(n, d, k);
                        let want = gamma.poincare(k)?;
                        if got != want {
                            return Err(Error::CheckFailed(format!(
                                "degree {k}: oracle {got:?} but stable ring {want:?}"
                            )));
                        }
                    }
                    Ok(())
                },
            ));
            v.push(check(
                format!("symmetric function kernel d={d} n={n}"),
                move || oracle::mu_kernel_oracle(n, d, (n as usize + 4) * d),
            ));
        }
    }
    for field in FIELDS {
        v.push(check(
            format!("cover cokernel basis ({})", fname(field)),
            move || oracle::cokernel_basis_oracle(field, 12),
        ));
    }
    v
}

fn closed_kernel_basis(field: Field, n: u32) -> Result<()> {
    let d = field.d();
    let nn = n as usize;
    let h = homs::i_star(field, CoeffRing::Z, Trunc::N(n))?;
    for k in ((nn * d + 2)..=(2 * nn + 2) * d).step_by(2) {
        let src = h.source.piece(k)?;
        let rows = src.gens.len();
        let mut closed = src.relations.clone();
        if k % d == 0 {
            let w = k / d;
            for i in 1..=w.min(nn) {
                if (w - i) % 2 != 0 {
                    continue;
                }
                let j = (w - i) / 2;
                if i + j > nn {
                    continue;
                }
                let mono = Mono::var_pow(M, i as u16).mul(&Mono::var_pow(Y, j as u16));
                match src.gen_index(&GenLabel::Mono(mono)) {
                    Some(ix) => closed.push(unit_vec(rows, ix)),
                    None => {
                        return Err(Error::CheckFailed(format!(
                            "degree {k}: monomial m^{i}*y^{j} missing from the ring"
                        )))
                    }
                }
            }
            if w % 2 == 0 {
                let p = w / 2;
                if 2 * p > nn && p <= nn {
                    let mono = Mono::var_pow(Y, p as u16);
                    match src.gen_index(&GenLabel::Mono(mono)) {
                        Some(ix) => closed.push(scaled_unit_vec(rows, ix, 2)),
                        None => {
                            return Err(Error::CheckFailed(format!(
                                "degree {k}: monomial y^{p} missing from the ring"
                            )))
                        }
                    }
                }
            }
        }
        let (_, kgens) = h.kernel_lattice(k)?;
        let mut kernel = src.relations.clone();
        kernel.extend(kgens);
        if !spans_equal(rows, &closed, &kernel) {
            return Err(Error::CheckFailed(format!(
                "closed kernel basis differs from the kernel in degree {k} for n={n}"
            )));
        }
    }
    Ok(())
}

fn kernels_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for field in FIELDS {
        let d = field.d();
        v.push(check(
            format!("restriction kernel is (m^2 - 4y) ({})", fname(field)),
            move || {
                let h = homs::i_star(field, CoeffRing::Z, Trunc::Inf)?;
                let ideal = [Poly::var_pow(M, 2).sub(&Poly::var(Y).scale(&BigInt::from(4)))];
                for k in (0..=12 * d).step_by(2) {
                    homs::ideal_kernel_compare(&h, &ideal, k)?;
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("first truncation kernel is (2y) ({})", fname(field)),
            move || {
                let h = homs::i_star(field, CoeffRing::Z, Trunc::N(1))?;
                let ideal = [Poly::var(Y).scale(&BigInt::from(2))];
                for k in (0..=12 * d).step_by(2) {
                    homs::ideal_kernel_compare(&h, &ideal, k)?;
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("base connecting kernel is (2z) ({})", fname(field)),
            move || {
                let h = homs::delta_from_base(field, CoeffRing::Z, Trunc::Inf)?;
                let ideal = [Poly::var(Z).scale(&BigInt::from(2))];
                for k in (d..=12 * d).step_by(d) {
                    homs::ideal_kernel_compare(&h, &ideal, k)?;
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("inclusion pullback is monic ({})", fname(field)),
            move || {
                let h = homs::pi2_star(field, CoeffRing::Z)?;
                for k in (0..=6 * d).step_by(d) {
                    homs::ideal_kernel_compare(&h, &[], k)?;
                }
                Ok(())
            },
        ));
        for n in 1..=3u32 {
            v.push(check(
                format!("truncated kernel closed basis n={n} ({})", fname(field)),
                move || closed_kernel_basis(field, n),
            ));
        }
    }
    v
}

fn closedforms_checks() -> Vec<Check> {
    let mut v = Vec::new();
    let fams = [
        ("delta d=2", FamilyId::Delta { d: 2 }),
        ("delta d=4", FamilyId::Delta { d: 4 }),
        ("sigma", FamilyId::Sigma),
        ("r", FamilyId::R),
    ];
    for (label, fam) in fams {
        v.push(check(
            format!("recurrence matches closed form ({label})"),
            move || {
                for k in 1..=64 {
                    if family_by_recurrence(fam, k) != family_by_closed_form(fam, k) {
                        return Err(Error::CheckFailed(format!("{label} member {k} differs")));
                    }
                }
                Ok(())
            },
        ));
    }
    v.push(check("power sums specialize to z1^k + z2^k", || {
        let sum = Poly::var(L1).add(&Poly::var(L2));
        let prod = Poly::var(L1).mul(&Poly::var(L2));
        for k in 1..=64u16 {
            let r = family_by_closed_form(FamilyId::R, k as usize);
            let spec = r.as_int().unwrap().substitute(&|v| {
                if v == E1 {
                    Some(sum.clone())
                } else if v == E2 {
                    Some(prod.clone())
                } else {
                    None
                }
            });
            let want = Poly::var_pow(L1, k).add(&Poly::var_pow(L2, k));
            if spec != want {
                return Err(Error::CheckFailed(format!(
                    "power sum r_{k} does not specialize correctly"
                )));
            }
        }
        Ok(())
    }));
    v.push(check("binomial parity by bit pattern", || {
        for n in 0..=200i64 {
            for k in 0..=n {
                if binomial(n, k).is_odd() != lucas_parity(n as u64, k as u64) {
                    return Err(Error::CheckFailed(format!(
                        "binomial({n},{k}) parity disagrees with the bit test"
                    )));
                }
            }
        }
        Ok(())
    }));
    v.push(check("power sum rewriting identities", || {
        for j in 0..=8 {
            for k in 0..=8 {
                for t in 0..=8 {
                    powersum_identities(j, k, t).map_err(Error::CheckFailed)?;
                }
            }
        }
        Ok(())
    }));
    v
}

fn short_exact(field: Field, trunc: Trunc, max: usize) -> Result<()> {
    let del = homs::delta_from_base(field, CoeffRing::F2, trunc)?;
    let b = homs::b_delta_star(field, trunc)?;
    for k in 0..=max {
        if !del.is_monic(k, true)? {
            return Err(Error::CheckFailed(format!(
                "{} is not monic in degree {k}",
                del.name
            )));
        }
        homs::exact_at(&del, &b, k, true)?;
        if !b.is_epic(k, true)? {
            return Err(Error::CheckFailed(format!(
                "{} is not epic in degree {k}",
                b.name
            )));
        }
    }
    Ok(())
}

fn exactness_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for field in FIELDS {
        let d = field.d();
        let max = 10 * d;
        v.push(check(
            format!("gysin sequence exact ({})", fname(field)),
            move || {
                let f1 = homs::m_multiplication(field)?;
                let f2 = homs::i_star(field, CoeffRing::F2, Trunc::Inf)?;
                let f3 = homs::gysin_delta(field)?;
                for k in 0..=max {
                    homs::exact_at(&f1, &f2, k, false)?;
                    homs::exact_at(&f2, &f3, k, false)?;
                    homs::exact_at(&f3, &f1, k, false)?;
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("cofiber sequence short exact ({})", fname(field)),
            move || short_exact(field, Trunc::Inf, max),
        ));
        for n in 1..=3u32 {
            v.push(check(
                format!("truncated cofiber short exact n={n} ({})", fname(field)),
                move || short_exact(field, Trunc::N(n), max),
            ));
        }
        v.push(check(
            format!("integral ladder exact ({})", fname(field)),
            move || {
                let b = homs::b_star(field)?;
                let i = homs::i_star(field, CoeffRing::Z, Trunc::Inf)?;
                let del = homs::delta_from_cover(field, CoeffRing::Z)?;
                for k in 0..=max {
                    homs::exact_at(&b, &i, k, true)?;
                    homs::exact_at(&i, &del, k, true)?;
                    homs::exact_at(&del, &b, k, true)?;
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("restriction refolds the thom groups ({})", fname(field)),
            move || {
                let h = homs::i_star(field, CoeffRing::Z, Trunc::Inf)?;
                let mp = build(SpaceId::Mp, field, CoeffRing::Z, Trunc::Inf)?;
                let two = BigInt::from(2);
                for k in (2..=max).step_by(2) {
                    let (kf, kinv) = h.kernel_invariants(k)?;
                    let want = mp.poincare(k)?;
                    if kf != want.0 || kinv.len() != want.1 || kinv.iter().any(|x| *x != two) {
                        return Err(Error::CheckFailed(format!(
                            "kernel in degree {k} does not match the even thom group"
                        )));
                    }
                    let (cf, cinv) = h.cokernel_invariants(k)?;
                    let want = mp.poincare(k + 1)?;
                    if cf != want.0 || cinv.len() != want.1 || cinv.iter().any(|x| *x != two) {
                        return Err(Error::CheckFailed(format!(
                            "cokernel in degree {k} does not match the odd thom group"
                        )));
                    }
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("mod two dimension count ({})", fname(field)),
            move || {
                for trunc in [Trunc::Inf, Trunc::N(1), Trunc::N(2), Trunc::N(3)] {
                    let sp2 = build(SpaceId::Sp2, field, CoeffRing::F2, trunc)?;
                    let mp = build(SpaceId::Mp, field, CoeffRing::F2, trunc)?;
                    let kp = build(SpaceId::Kp, field, CoeffRing::F2, trunc)?;
                    for k in 0..=max {
                        let below = if k == 0 { 0 } else { kp.dim_f2(k - 1)? };
                        if sp2.dim_f2(k)? + below != mp.dim_f2(k)? {
                            return Err(Error::CheckFailed(format!(
                                "dimension count fails in degree {k} at truncation {trunc}"
                            )));
                        }
                    }
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("composite connecting map monic ({})", fname(field)),
            move || {
                let comp = homs::compose(
                    "delta.pi2*",
                    homs::delta_from_cover(field, CoeffRing::F2)?,
                    homs::pi2_star(field, CoeffRing::F2)?,
                )?;
                for k in 0..=max {
                    if !comp.is_monic(k, true)? {
                        return Err(Error::CheckFailed(format!(
                            "composite is not monic in degree {k}"
                        )));
                    }
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("catalogue well defined ({})", fname(field)),
            move || {
                let all: Vec<Hom> = vec![
                    homs::i_star(field, CoeffRing::Z, Trunc::Inf)?,
                    homs::i_star(field, CoeffRing::F2, Trunc::Inf)?,
                    homs::i_star(field, CoeffRing::Z, Trunc::N(2))?,
                    homs::m_multiplication(field)?,
                    homs::gysin_delta(field)?,
                    homs::delta_from_cover(field, CoeffRing::Z)?,
                    homs::delta_from_cover(field, CoeffRing::F2)?,
                    homs::delta_from_base(field, CoeffRing::Z, Trunc::Inf)?,
                    homs::delta_from_base(field, CoeffRing::F2, Trunc::Inf)?,
                    homs::delta_from_base(field, CoeffRing::Z, Trunc::N(2))?,
                    homs::delta_from_base(field, CoeffRing::F2, Trunc::N(2))?,
                    homs::b_star(field)?,
                    homs::b_delta_star(field, Trunc::Inf)?,
                    homs::b_delta_star(field, Trunc::N(2))?,
                    homs::pi2_star(field, CoeffRing::Z)?,
                    homs::pi2_star(field, CoeffRing::F2)?,
                ];
                for h in &all {
                    for k in 0..=8 * d {
                        h.check_well_defined(k)?;
                    }
                }
                Ok(())
            },
        ));
        v.push(check(
            format!("universal coefficients ({})", fname(field)),
            move || {
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
                for (id, trunc) in pairs {
                    let zp = build(id, field, CoeffRing::Z, trunc)?;
                    let fp = build(id, field, CoeffRing::F2, trunc)?;
                    for k in 0..=max {
                        let (zf, zt) = zp.poincare(k)?;
                        let (_, nt) = zp.poincare(k + 1)?;
                        let (ff, ft) = fp.poincare(k)?;
                        if ff + ft != zf + zt + nt {
                            return Err(Error::CheckFailed(format!(
                                "{} disagrees with its mod two form in degree {k}",
                                zp.spec.display_name()
                            )));
                        }
                    }
                }
                Ok(())
            },
        ));
    }
    v
}
