//! Graded ring presentations with a canonical additive basis per degree.

pub mod monomial;
pub mod mp_z;
pub mod sp2_z;
pub mod thn_z;
pub mod thom_f2;

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{ParsedElement, ParsedTerm};
use crate::f2::F2Span;
use crate::names::{combo_str, delta_name, lattice_name, mono_str, u_name};
use crate::poly::{cmp_display, var_degree, Mono, Poly, Var, F2, M, NVARS, T};
use crate::snf::{smith_normal_form, IntMat, Quotient, Snf};
use crate::space::{CoeffRing, SpaceId, SpaceSpec};

/// Additive order of a canonical basis class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassOrder {
    Free,
    Two,
}

/// Formal generator of one graded piece.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GenLabel {
    /// Monomial in the ambient presentation variables.
    Mono(Mono),
    /// The lattice class g^q w^s (q >= 1), or the doubled class 2 w^s.
    Lattice { q: u16, s: u16, doubled: bool },
    /// The class c^i delta_j.
    CDelta { i: u16, j: u16 },
    /// The class u_{i,j}.
    U { i: u16, j: u16 },
    /// A generator with no single-monomial name; pre-rendered.
    Formal(String),
}

impl GenLabel {
    pub fn name(&self) -> String {
        match self {
            GenLabel::Mono(m) => mono_str(m),
            GenLabel::Lattice { q, s, doubled } => lattice_name(*q, *s, *doubled),
            GenLabel::CDelta { i, j } => delta_name(*i, *j),
            GenLabel::U { i, j } => u_name(*i, *j),
            GenLabel::Formal(s) => s.clone(),
        }
    }

    pub fn unit() -> GenLabel {
        GenLabel::Mono(Mono::one())
    }
}

/// Display comparator: monomials by the table variable priority, bracketed
/// classes by first index descending. Formal labels keep emission order.
pub fn cmp_labels(a: &GenLabel, b: &GenLabel) -> Ordering {
    fn rank(g: &GenLabel) -> u8 {
        match g {
            GenLabel::Mono(_) => 0,
            GenLabel::Lattice { .. } => 1,
            GenLabel::CDelta { .. } => 2,
            GenLabel::U { .. } => 3,
            GenLabel::Formal(_) => 4,
        }
    }
    fn lattice_mono(q: u16, s: u16) -> Mono {
        Mono::var_pow(crate::poly::G, q).mul(&Mono::var_pow(crate::poly::W, s))
    }
    match (a, b) {
        (GenLabel::Mono(x), GenLabel::Mono(y)) => cmp_display(x, y),
        (GenLabel::Lattice { q: q1, s: s1, .. }, GenLabel::Lattice { q: q2, s: s2, .. }) => {
            cmp_display(&lattice_mono(*q1, *s1), &lattice_mono(*q2, *s2))
        }
        (GenLabel::CDelta { i: i1, .. }, GenLabel::CDelta { i: i2, .. }) => i2.cmp(i1),
        (GenLabel::U { i: i1, .. }, GenLabel::U { i: i2, .. }) => i2.cmp(i1),
        _ => rank(a).cmp(&rank(b)),
    }
}

/// One basis class of a graded piece: name, optional merged-class alias,
/// additive order, and defining coordinates over the piece generators.
#[derive(Clone, Debug)]
pub struct BasisClass {
    pub name: String,
    pub alias: Option<String>,
    pub order: ClassOrder,
    pub coords: Vec<BigInt>,
}

impl BasisClass {
    /// Table form: `a^6*t=m^3*t` when an alias is attached.
    pub fn display_name(&self) -> String {
        match &self.alias {
            Some(a) => format!("{}={}", self.name, a),
            None => self.name.clone(),
        }
    }
}

/// Ring-level description for the `ring` command header.
#[derive(Clone, Debug)]
pub struct RingInfo {
    pub generators: Vec<(String, usize)>,
    pub relations: Vec<String>,
}

/// A space-specific presentation backend.
pub trait Realize {
    /// Formal generators and relation columns of the degree-k piece.
    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)>;

    /// Expand a product of two generators over generators of the sum degree.
    fn mul_gens(&self, a: &GenLabel, b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>>;

    /// Interpret one parsed term as a combination of generators.
    fn interpret_term(&self, term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)>;

    /// Generators the basis search should try first.
    fn prefers(&self, _g: &GenLabel) -> bool {
        true
    }

    fn can_multiply(&self) -> bool {
        true
    }

    fn describe(&self) -> RingInfo;
}

/// One graded piece: presentation, quotient structure, canonical basis.
pub struct PieceData {
    pub degree: usize,
    pub gens: Vec<GenLabel>,
    pub relations: Vec<Vec<BigInt>>,
    pub quotient: Quotient,
    pub basis: Vec<BasisClass>,
    index: HashMap<GenLabel, usize>,
    solve_mat: IntMat,
    solve_snf: Option<Snf>,
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

pub(crate) fn scaled_unit_vec(n: usize, i: usize, k: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(k);
    v
}

fn is_pure_m_power(g: &GenLabel) -> bool {
    match g {
        GenLabel::Mono(m) => {
            m.exp(M) >= 1 && (0..NVARS).all(|v| v == M || v == T || m.exp(v) == 0)
        }
        _ => false,
    }
}

struct Picked {
    order: ClassOrder,
    label: Option<GenLabel>,
    slot: usize,
    coords: Vec<BigInt>,
    name: String,
    alias: Option<String>,
}

impl PieceData {
    pub fn build(
        degree: usize,
        gens: Vec<GenLabel>,
        relations: Vec<Vec<BigInt>>,
        realize: &dyn Realize,
        mod2_alias: bool,
    ) -> Result<PieceData> {
        let n = gens.len();
        for col in &relations {
            assert_eq!(col.len(), n, "relation column length mismatch");
        }
        let quotient = Quotient::new(n, &relations);
        let basis = build_basis(degree, &gens, &quotient, realize, mod2_alias)?;
        let index: HashMap<GenLabel, usize> =
            gens.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let mut cols: Vec<Vec<BigInt>> = basis.iter().map(|b| b.coords.clone()).collect();
        cols.extend(relations.iter().cloned());
        let solve_mat = IntMat::from_columns(n, &cols);
        let solve_snf = if n == 0 && cols.is_empty() {
            None
        } else {
            Some(smith_normal_form(&solve_mat))
        };
        Ok(PieceData {
            degree,
            gens,
            relations,
            quotient,
            basis,
            index,
            solve_mat,
            solve_snf,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.quotient.free_rank()
    }

    pub fn torsion2_rank(&self) -> usize {
        self.quotient.torsion_rows.len()
    }

    pub fn gen_index(&self, g: &GenLabel) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Coefficients of the class of x over the canonical basis. Free
    /// coefficients are exact; order-two coefficients are reduced to 0/1.
    pub fn express(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        assert_eq!(x.len(), self.gens.len());
        if self.basis.is_empty() {
            return if self.quotient.is_zero_class(x) {
                Ok(Vec::new())
            } else {
                Err(Error::CheckFailed(format!(
                    "degree-{} class escapes an empty basis",
                    self.degree
                )))
            };
        }
        let snf = self.solve_snf.as_ref().unwrap();
        let sol = crate::snf::solve(&self.solve_mat, snf, x).ok_or_else(|| {
            Error::CheckFailed(format!(
                "degree-{} class escapes the canonical basis span",
                self.degree
            ))
        })?;
        let two = BigInt::from(2);
        let mut lam: Vec<BigInt> = sol[..self.basis.len()].to_vec();
        for (i, b) in self.basis.iter().enumerate() {
            if b.order == ClassOrder::Two {
                lam[i] = lam[i].mod_floor(&two);
            }
        }
        Ok(lam)
    }

    /// The class of x as (coefficient, basis-class name) pairs.
    pub fn combo(&self, x: &[BigInt]) -> Result<Vec<(BigInt, String)>> {
        let lam = self.express(x)?;
        Ok(lam
            .into_iter()
            .zip(self.basis.iter())
            .map(|(k, b)| (k, b.name.clone()))
            .collect())
    }
}

fn build_basis(
    degree: usize,
    gens: &[GenLabel],
    quotient: &Quotient,
    realize: &dyn Realize,
    mod2_alias: bool,
) -> Result<Vec<BasisClass>> {
    let n = gens.len();
    let two = BigInt::from(2);
    for (_, dv) in &quotient.torsion_rows {
        if *dv != two {
            return Err(Error::CheckFailed(format!(
                "degree-{degree} piece has torsion of order {dv}, expected 2"
            )));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| !realize.prefers(&gens[i]));

    let mut picked: Vec<Picked> = Vec::new();
    let mut slot = 0usize;

    // Free part: greedy over generators whose picked set stays a direct
    // summand (all invariant factors 1), falling back to lifted units.
    let free_rank = quotient.free_rank();
    let mut free_idx: Vec<usize> = Vec::new();
    let mut free_cols: Vec<Vec<BigInt>> = Vec::new();
    for &i in &order {
        if free_idx.len() == free_rank {
            break;
        }
        let fc = quotient.free_coords(&unit_vec(n, i));
        if fc.iter().all(|v| v.is_zero()) {
            continue;
        }
        free_cols.push(fc);
        let m = IntMat::from_columns(free_rank, &free_cols);
        let snf = smith_normal_form(&m);
        let diag = snf.diag();
        if diag.len() == free_cols.len() && diag.iter().all(|v| v.is_one()) {
            free_idx.push(i);
        } else {
            free_cols.pop();
        }
    }
    if free_idx.len() == free_rank {
        for &i in &free_idx {
            picked.push(Picked {
                order: ClassOrder::Free,
                label: Some(gens[i].clone()),
                slot,
                coords: unit_vec(n, i),
                name: gens[i].name(),
                alias: None,
            });
            slot += 1;
        }
    } else {
        for &row in &quotient.free_rows {
            let v = quotient.lift_unit(row);
            let name = combo_str(
                &v.iter()
                    .cloned()
                    .zip(gens.iter().map(|g| g.name()))
                    .collect::<Vec<_>>(),
            );
            picked.push(Picked {
                order: ClassOrder::Free,
                label: None,
                slot,
                coords: v,
                name,
                alias: None,
            });
            slot += 1;
        }
    }

    // Order-two part: greedy F2 independence over torsion coordinates.
    let t_rank = quotient.torsion_rows.len();
    let mut t_idx: Vec<usize> = Vec::new();
    if t_rank > 0 {
        let mut span = F2Span::new(t_rank);
        for &i in &order {
            if t_idx.len() == t_rank {
                break;
            }
            let e = unit_vec(n, i);
            if !quotient.free_coords(&e).iter().all(|v| v.is_zero()) {
                continue;
            }
            let bits: Vec<bool> = quotient
                .torsion_coords(&e)
                .iter()
                .map(|v| !v.is_zero())
                .collect();
            if bits.iter().all(|b| !b) {
                continue;
            }
            if span.insert(&bits) {
                t_idx.push(i);
            }
        }
    }
    if t_idx.len() == t_rank {
        for &i in &t_idx {
            let alias = if mod2_alias && !is_pure_m_power(&gens[i]) {
                gens.iter().enumerate().find_map(|(j, g)| {
                    (j != i
                        && is_pure_m_power(g)
                        && quotient.classes_equal(&unit_vec(n, i), &unit_vec(n, j)))
                    .then(|| g.name())
                })
            } else {
                None
            };
            picked.push(Picked {
                order: ClassOrder::Two,
                label: Some(gens[i].clone()),
                slot,
                coords: unit_vec(n, i),
                name: gens[i].name(),
                alias,
            });
            slot += 1;
        }
    } else {
        for (row, _) in &quotient.torsion_rows {
            let v = quotient.lift_unit(*row);
            let name = combo_str(
                &v.iter()
                    .cloned()
                    .zip(gens.iter().map(|g| g.name()))
                    .collect::<Vec<_>>(),
            );
            picked.push(Picked {
                order: ClassOrder::Two,
                label: None,
                slot,
                coords: v,
                name,
                alias: None,
            });
            slot += 1;
        }
    }

    picked.sort_by(|a, b| {
        let oa = matches!(a.order, ClassOrder::Two) as u8;
        let ob = matches!(b.order, ClassOrder::Two) as u8;
        oa.cmp(&ob)
            .then_with(|| match (&a.label, &b.label) {
                (Some(x), Some(y)) => cmp_labels(x, y),
                _ => Ordering::Equal,
            })
            .then_with(|| a.slot.cmp(&b.slot))
    });

    Ok(picked
        .into_iter()
        .map(|p| BasisClass {
            name: p.name,
            alias: p.alias,
            order: p.order,
            coords: p.coords,
        })
        .collect())
}

/// A space's graded presentation with memoized pieces.
pub struct Presentation {
    pub spec: SpaceSpec,
    realize: Box<dyn Realize>,
    memo: RefCell<HashMap<usize, Rc<PieceData>>>,
}

impl Presentation {
    pub fn new(spec: SpaceSpec) -> Result<Presentation> {
        let realize = catalog(&spec)?;
        Ok(Presentation {
            spec,
            realize,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn piece(&self, k: usize) -> Result<Rc<PieceData>> {
        if let Some(p) = self.memo.borrow().get(&k) {
            return Ok(p.clone());
        }
        let (gens, relations) = self.realize.piece(k)?;
        let pd = Rc::new(PieceData::build(
            k,
            gens,
            relations,
            self.realize.as_ref(),
            self.spec.coeff == CoeffRing::F2,
        )?);
        self.memo.borrow_mut().insert(k, pd.clone());
        Ok(pd)
    }

    /// (free rank, number of order-two classes) in degree k.
    pub fn poincare(&self, k: usize) -> Result<(usize, usize)> {
        let p = self.piece(k)?;
        Ok((p.free_rank(), p.torsion2_rank()))
    }

    /// Reduced dimension over F2 of the degree-k piece; meaningful for
    /// mod-2 presentations where every class has order two.
    pub fn dim_f2(&self, k: usize) -> Result<usize> {
        let p = self.piece(k)?;
        let full = p.free_rank() + p.torsion2_rank();
        Ok(if k == 0 { full.saturating_sub(1) } else { full })
    }

    /// Interpret a parsed element as (degree, coordinates over generators).
    pub fn interpret(&self, elt: &ParsedElement) -> Result<(usize, Vec<BigInt>)> {
        let mut degree: Option<usize> = None;
        let mut combos: Vec<(BigInt, GenLabel)> = Vec::new();
        for term in elt {
            let (dk, terms) = self.realize.interpret_term(term)?;
            match degree {
                None => degree = Some(dk),
                Some(prev) if prev != dk => {
                    return Err(Error::BadArg(format!(
                        "element is not homogeneous: mixes degrees {prev} and {dk}"
                    )))
                }
                _ => {}
            }
            combos.extend(terms);
        }
        let k = degree.unwrap_or(0);
        let piece = self.piece(k)?;
        let mut coords = vec![BigInt::zero(); piece.gens.len()];
        for (coef, label) in combos {
            let idx = piece.gen_index(&label).ok_or_else(|| {
                Error::CheckFailed(format!(
                    "internal: generator {} missing in degree {k}",
                    label.name()
                ))
            })?;
            coords[idx] += coef;
        }
        Ok((k, coords))
    }

    /// Canonical form of an element over the basis of its degree.
    pub fn normal_form(&self, elt: &ParsedElement) -> Result<(usize, Vec<(BigInt, String)>)> {
        let (k, coords) = self.interpret(elt)?;
        let piece = self.piece(k)?;
        Ok((k, piece.combo(&coords)?))
    }

    /// Product of two homogeneous elements, in canonical form.
    pub fn multiply(
        &self,
        a: &ParsedElement,
        b: &ParsedElement,
    ) -> Result<(usize, Vec<(BigInt, String)>)> {
        if !self.realize.can_multiply() {
            return Err(Error::Unsupported {
                space: self.spec.display_name(),
                message: "additive-only presentation, products are not defined".to_string(),
            });
        }
        let (ka, va) = self.interpret(a)?;
        let (kb, vb) = self.interpret(b)?;
        let k = ka + kb;
        let pa = self.piece(ka)?;
        let pb = self.piece(kb)?;
        let pc = self.piece(k)?;
        let mut out = vec![BigInt::zero(); pc.gens.len()];
        for (i, ai) in va.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in vb.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                for (coef, label) in self.realize.mul_gens(&pa.gens[i], &pb.gens[j])? {
                    let idx = pc.gen_index(&label).ok_or_else(|| {
                        Error::CheckFailed(format!(
                            "internal: product generator {} missing in degree {k}",
                            label.name()
                        ))
                    })?;
                    out[idx] += ai * bj * &coef;
                }
            }
        }
        Ok((k, pc.combo(&out)?))
    }

    pub fn ring_info(&self) -> RingInfo {
        self.realize.describe()
    }
}

/// Convert a mod-2 polynomial into the 0/1 integer polynomial on the same
/// monomials, for use as relation columns next to the 2e columns.
pub fn lift_f2(p: &Poly<F2>) -> Poly<BigInt> {
    let mut out = Poly::zero();
    for (m, _) in p.terms() {
        out.add_term(*m, BigInt::one());
    }
    out
}

fn small_exp(e: u32) -> Result<u16> {
    u16::try_from(e).map_err(|_| Error::BadArg(format!("exponent {e} is out of range")))
}

fn catalog(spec: &SpaceSpec) -> Result<Box<dyn Realize>> {
    use monomial::MonomialRing;
    let d = spec.d();
    let n_opt = spec.trunc.n();
    let need_n = || -> Result<u32> {
        n_opt.ok_or_else(|| Error::BadArg(format!("{} requires --n", spec.display_name())))
    };
    let display = spec.display_name();
    Ok(match (spec.id, spec.coeff) {
        (SpaceId::Kp, CoeffRing::Z) => Box::new(MonomialRing::kp(d, n_opt, false, &display)),
        (SpaceId::Kp, CoeffRing::F2) => Box::new(MonomialRing::kp(d, n_opt, true, &display)),
        (SpaceId::Rp, CoeffRing::Z) => Box::new(MonomialRing::rp(false, &display)),
        (SpaceId::Rp, CoeffRing::F2) => Box::new(MonomialRing::rp(true, &display)),
        (SpaceId::Rk, CoeffRing::Z) => Box::new(MonomialRing::rk(d, n_opt, false, &display)),
        (SpaceId::Rk, CoeffRing::F2) => Box::new(MonomialRing::rk(d, n_opt, true, &display)),
        (SpaceId::Gamma, CoeffRing::Z) => {
            Box::new(MonomialRing::gamma(d, n_opt, false, &display))
        }
        (SpaceId::Gamma, CoeffRing::F2) => {
            Box::new(MonomialRing::gamma(d, n_opt, true, &display))
        }
        (SpaceId::Borel, CoeffRing::Z) => match n_opt {
            None => Box::new(MonomialRing::gamma(d, None, false, &display)),
            Some(n) => Box::new(MonomialRing::borel_n(d, n, &display)),
        },
        (SpaceId::Borel, CoeffRing::F2) => match n_opt {
            None => Box::new(MonomialRing::gamma(d, None, true, &display)),
            Some(_) => {
                return Err(Error::Unsupported {
                    space: display,
                    message: "mod-2 truncated Borel ring: use the Gamma_n presentation"
                        .to_string(),
                })
            }
        },
        (SpaceId::Grass, coeff) => {
            let n = need_n()?;
            Box::new(MonomialRing::grass(d, n, coeff == CoeffRing::F2, &display))
        }
        (SpaceId::Mp, CoeffRing::F2) => Box::new(thom_f2::ThomF2::new(d, n_opt, false, &display)),
        (SpaceId::Sp2, CoeffRing::F2) => Box::new(thom_f2::ThomF2::new(d, n_opt, true, &display)),
        (SpaceId::Mp, CoeffRing::Z) => match n_opt {
            None => Box::new(mp_z::MpZ::new(d, &display)),
            Some(n) => Box::new(thn_z::ThnZ::new(d, n, &display)),
        },
        (SpaceId::Sp2, CoeffRing::Z) => Box::new(sp2_z::Sp2Z::new(d, n_opt, &display)),
    })
}

/// Shared rewriting for bracketed classes indexed by (i, j): reduce the
/// first index below j*d/2 using the parity identity
/// (jd/2, j) -> sum over 0 < l <= j with C(j, l) odd of ((j-l)d/2, j+l),
/// carrying any excess of i over jd/2. Returns the surviving in-range
/// pairs; coefficients are parities, so pairs cancel in twos.
pub fn canonical_pairs(i0: u32, j0: u32, d: u32) -> Vec<(u16, u16)> {
    let mut acc: HashMap<(u32, u32), bool> = HashMap::new();
    let mut work = vec![(i0, j0)];
    while let Some((i, j)) = work.pop() {
        if j == 0 {
            continue;
        }
        if 2 * (i as u64) < (j as u64) * (d as u64) {
            let e = acc.entry((i, j)).or_insert(false);
            *e = !*e;
            continue;
        }
        let excess = i - j * d / 2;
        for l in 1..=j {
            if crate::fib::lucas_parity(j as u64, l as u64) {
                work.push((excess + (j - l) * d / 2, j + l));
            }
        }
    }
    let mut out: Vec<(u16, u16)> = acc
        .into_iter()
        .filter(|&(_, p)| p)
        .map(|((i, j), _)| (i as u16, j as u16))
        .collect();
    out.sort_unstable();
    out
}

/// Degree of one variable as usize, for parsed-term bookkeeping.
pub fn vdeg(v: Var, d: usize) -> usize {
    var_degree(v, d as u32) as usize
}
