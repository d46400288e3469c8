//! Additive maps between graded presentations and exactness checks for them.

use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fib::{family_by_closed_form, FamilyId};
use crate::poly::{Mono, Poly, A, C, M, S, T, Y, Z};
use crate::presentation::{canonical_pairs, lift_f2, unit_vec, GenLabel, PieceData, Presentation};
use crate::snf::{abelian_quotient, kernel_basis, smith_normal_form, solve, IntMat, Snf};
use crate::space::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

type ImageFn = Box<dyn Fn(&GenLabel) -> Result<Vec<(BigInt, GenLabel)>>>;

/// Integer column span with membership testing.
pub struct Span {
    mat: IntMat,
    snf: Snf,
}

impl Span {
    pub fn new(rows: usize, cols: &[Vec<BigInt>]) -> Span {
        let mat = IntMat::from_columns(rows, cols);
        let snf = smith_normal_form(&mat);
        Span { mat, snf }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        solve(&self.mat, &self.snf, v).is_some()
    }

    pub fn contains_all(&self, vs: &[Vec<BigInt>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }
}

/// Whether two column sets span the same sublattice of Z^rows.
pub fn spans_equal(rows: usize, a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    Span::new(rows, a).contains_all(b) && Span::new(rows, b).contains_all(a)
}

/// Invariants of (span(gens) + span(modulo)) / span(modulo) inside Z^rows.
pub fn subquotient_invariants(
    rows: usize,
    gens: &[Vec<BigInt>],
    modulo: &[Vec<BigInt>],
) -> (usize, Vec<BigInt>) {
    let g = gens.len();
    let mut stacked = gens.to_vec();
    stacked.extend_from_slice(modulo);
    let mat = IntMat::from_columns(rows, &stacked);
    let snf = smith_normal_form(&mat);
    let rels: Vec<Vec<BigInt>> = kernel_basis(&mat, &snf)
        .iter()
        .map(|v| v[..g].to_vec())
        .collect();
    abelian_quotient(g, &rels)
}

/// Graded additive map between two presentations, given by generator images.
pub struct Hom {
    pub name: String,
    pub source: Presentation,
    pub target: Presentation,
    pub shift: isize,
    map: ImageFn,
}

impl Hom {
    pub fn target_degree(&self, k: usize) -> Option<usize> {
        let t = k as isize + self.shift;
        (t >= 0).then_some(t as usize)
    }

    /// Columns of the degree-k map in target generator coordinates.
    pub fn matrix(&self, k: usize) -> Result<(Rc<PieceData>, Rc<PieceData>, Vec<Vec<BigInt>>)> {
        let src = self.source.piece(k)?;
        let t = self.target_degree(k).ok_or_else(|| {
            Error::BadArg(format!("{}: degree {} maps below degree zero", self.name, k))
        })?;
        let tgt = self.target.piece(t)?;
        let mut cols = Vec::with_capacity(src.gens.len());
        for g in &src.gens {
            let mut col = vec![BigInt::zero(); tgt.gens.len()];
            for (coeff, label) in (self.map)(g)? {
                match tgt.gen_index(&label) {
                    Some(i) => col[i] += coeff,
                    None => {
                        return Err(Error::CheckFailed(format!(
                            "{}: image of {} has a term outside target degree {}",
                            self.name,
                            g.name(),
                            t
                        )))
                    }
                }
            }
            cols.push(col);
        }
        Ok((src, tgt, cols))
    }

    /// Fails unless every degree-k source relation maps into the span of the
    /// target relations.
    pub fn check_well_defined(&self, k: usize) -> Result<()> {
        if self.target_degree(k).is_none() {
            return Ok(());
        }
        let (src, tgt, cols) = self.matrix(k)?;
        let span = Span::new(tgt.gens.len(), &tgt.relations);
        for rel in &src.relations {
            let mut img = vec![BigInt::zero(); tgt.gens.len()];
            for (i, c) in rel.iter().enumerate() {
                if !c.is_zero() {
                    for (j, e) in cols[i].iter().enumerate() {
                        img[j] += c * e;
                    }
                }
            }
            if !span.contains(&img) {
                return Err(Error::CheckFailed(format!(
                    "{}: a degree-{} source relation does not map to zero",
                    self.name, k
                )));
            }
        }
        Ok(())
    }

    /// Generators of the sublattice of source coordinates mapping into the
    /// span of the target relations.
    pub fn kernel_lattice(&self, k: usize) -> Result<(usize, Vec<Vec<BigInt>>)> {
        let src = self.source.piece(k)?;
        let n = src.gens.len();
        if self.target_degree(k).is_none() {
            return Ok((n, (0..n).map(|i| unit_vec(n, i)).collect()));
        }
        let (_, tgt, mut cols) = self.matrix(k)?;
        cols.extend(tgt.relations.iter().cloned());
        let mat = IntMat::from_columns(tgt.gens.len(), &cols);
        let snf = smith_normal_form(&mat);
        let gens: Vec<Vec<BigInt>> = kernel_basis(&mat, &snf)
            .iter()
            .map(|v| v[..n].to_vec())
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect();
        Ok((n, gens))
    }

    /// (free rank, torsion invariants) of the degree-k kernel.
    pub fn kernel_invariants(&self, k: usize) -> Result<(usize, Vec<BigInt>)> {
        let src = self.source.piece(k)?;
        let (n, gens) = self.kernel_lattice(k)?;
        Ok(subquotient_invariants(n, &gens, &src.relations))
    }

    /// (free rank, torsion invariants) of the degree-k cokernel.
    pub fn cokernel_invariants(&self, k: usize) -> Result<(usize, Vec<BigInt>)> {
        if self.target_degree(k).is_none() {
            return Ok((0, vec![]));
        }
        let (_, tgt, mut cols) = self.matrix(k)?;
        cols.extend(tgt.relations.iter().cloned());
        Ok(abelian_quotient(tgt.gens.len(), &cols))
    }

    /// Whether the degree-k kernel vanishes; reduced treats degree 0 as zero.
    pub fn is_monic(&self, k: usize, reduced: bool) -> Result<bool> {
        if reduced && k == 0 {
            return Ok(true);
        }
        let src = self.source.piece(k)?;
        let (n, gens) = self.kernel_lattice(k)?;
        Ok(Span::new(n, &src.relations).contains_all(&gens))
    }

    /// Whether the degree-k cokernel vanishes; reduced treats a degree-0
    /// target as zero.
    pub fn is_epic(&self, k: usize, reduced: bool) -> Result<bool> {
        match self.target_degree(k) {
            None => Ok(true),
            Some(0) if reduced => Ok(true),
            Some(_) => {
                let (_, tgt, mut cols) = self.matrix(k)?;
                let nt = tgt.gens.len();
                cols.extend(tgt.relations.iter().cloned());
                let span = Span::new(nt, &cols);
                Ok((0..nt).all(|i| span.contains(&unit_vec(nt, i))))
            }
        }
    }
}

/// The composite "outer after inner".
pub fn compose(name: &str, outer: Hom, inner: Hom) -> Result<Hom> {
    if inner.target.spec != outer.source.spec {
        return Err(Error::BadArg(format!("{name}: middle presentations differ")));
    }
    let imap = inner.map;
    let omap = outer.map;
    Ok(Hom {
        name: name.to_string(),
        source: inner.source,
        target: outer.target,
        shift: inner.shift + outer.shift,
        map: Box::new(move |g| {
            let mut out = Vec::new();
            for (c, mid) in imap(g)? {
                for (c2, label) in omap(&mid)? {
                    out.push((&c * c2, label));
                }
            }
            Ok(out)
        }),
    })
}

/// Exactness of the pair (f, g) at the node where f lands and g departs.
///
/// Reduced replaces every degree-0 group in the sequence by zero.
pub fn exact_at(f: &Hom, g: &Hom, node_deg: usize, reduced: bool) -> Result<()> {
    if f.target.spec != g.source.spec {
        return Err(Error::BadArg(format!(
            "{} then {}: node presentations differ",
            f.name, g.name
        )));
    }
    if reduced && node_deg == 0 {
        return Ok(());
    }
    let node = g.source.piece(node_deg)?;
    let n = node.gens.len();
    let mut image = node.relations.clone();
    let fs = node_deg as isize - f.shift;
    if fs >= 0 && !(reduced && fs == 0) {
        let (_, tgt, cols) = f.matrix(fs as usize)?;
        debug_assert_eq!(tgt.gens.len(), n);
        image.extend(cols);
    }
    let mut kernel = node.relations.clone();
    match g.target_degree(node_deg) {
        Some(0) if reduced => kernel.extend((0..n).map(|i| unit_vec(n, i))),
        _ => {
            let (_, gens) = g.kernel_lattice(node_deg)?;
            kernel.extend(gens);
        }
    }
    if spans_equal(n, &image, &kernel) {
        Ok(())
    } else {
        Err(Error::CheckFailed(format!(
            "image of {} and kernel of {} differ in degree {}",
            f.name, g.name, node_deg
        )))
    }
}

/// Compares the degree-k kernel of h with the degree-k piece of the ideal
/// generated by the given homogeneous polynomials in the source ring.
pub fn ideal_kernel_compare(h: &Hom, ideal: &[Poly<BigInt>], k: usize) -> Result<()> {
    let d = h.source.spec.field.d() as u32;
    let src = h.source.piece(k)?;
    let n = src.gens.len();
    let mut ideal_cols = src.relations.clone();
    for p in ideal {
        let pd = p
            .homogeneous_degree(d)
            .ok_or_else(|| Error::BadArg("ideal generators must be homogeneous".into()))?
            as usize;
        if pd > k {
            continue;
        }
        for gen in h.source.piece(k - pd)?.gens.iter() {
            let GenLabel::Mono(m) = gen else {
                return Err(Error::BadArg(format!(
                    "{}: ideal comparison needs a monomial source",
                    h.name
                )));
            };
            let prod = p.mul(&Poly::monomial(*m, BigInt::one()));
            let mut col = vec![BigInt::zero(); n];
            for (mono, coeff) in prod.terms() {
                if let Some(i) = src.gen_index(&GenLabel::Mono(*mono)) {
                    col[i] += coeff;
                }
            }
            ideal_cols.push(col);
        }
    }
    let (_, kgens) = h.kernel_lattice(k)?;
    let mut kernel = src.relations.clone();
    kernel.extend(kgens);
    if spans_equal(n, &ideal_cols, &kernel) {
        Ok(())
    } else {
        Err(Error::CheckFailed(format!(
            "kernel of {} is not the given ideal in degree {}",
            h.name, k
        )))
    }
}

fn pres(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc) -> Result<Presentation> {
    Presentation::new(SpaceSpec::new(id, field, coeff, trunc))
}

fn mono_terms(p: &Poly<BigInt>) -> Vec<(BigInt, GenLabel)> {
    p.terms().map(|(m, c)| (c.clone(), GenLabel::Mono(*m))).collect()
}

fn expect_mono(name: &str, g: &GenLabel) -> Result<Mono> {
    match g {
        GenLabel::Mono(m) => Ok(*m),
        _ => Err(Error::CheckFailed(format!(
            "{}: unexpected generator {}",
            name,
            g.name()
        ))),
    }
}

fn keeps(l: &GenLabel, zcap: Option<u32>) -> bool {
    match (l, zcap) {
        (GenLabel::Mono(m), Some(n)) => (m.exp(Z) as u32) <= n,
        _ => true,
    }
}

fn delta_poly(d: usize, j: usize) -> Poly<BigInt> {
    lift_f2(family_by_closed_form(FamilyId::Delta { d }, j).as_mod2().unwrap())
}

/// Restriction onto the free-cover presentation: over Z it sends c to c,
/// m to 2z, and y to (c^{d/2} + z)z; mod 2 it sends a to a, m to 0, and
/// y to (a^d + z)z.
pub fn i_star(field: Field, coeff: CoeffRing, trunc: Trunc) -> Result<Hom> {
    // The truncated restriction only has the stated generator images on
    // the integral presentation; the mod 2 truncation relations do not
    // restrict to zero under them.
    if coeff == CoeffRing::F2 && trunc.n().is_some() {
        return Err(Error::Unsupported {
            space: "i_n*".to_string(),
            message: "truncated restriction is integral only".to_string(),
        });
    }
    let source_id = match (coeff, trunc) {
        (CoeffRing::Z, Trunc::N(_)) => SpaceId::Borel,
        _ => SpaceId::Gamma,
    };
    let source = pres(source_id, field, coeff, trunc)?;
    let target = pres(SpaceId::Rk, field, coeff, trunc)?;
    let d = field.d();
    let zcap = trunc.n();
    let name = match trunc {
        Trunc::Inf => "i*".to_string(),
        Trunc::N(n) => format!("i{n}*"),
    };
    let hname = name.clone();
    let map: ImageFn = match coeff {
        CoeffRing::Z => {
            let y_img = Poly::<BigInt>::var_pow(C, (d / 2) as u16)
                .add(&Poly::var(Z))
                .mul(&Poly::var(Z));
            Box::new(move |g| {
                let m = expect_mono(&hname, g)?;
                let p = Poly::monomial(Mono::var_pow(C, m.exp(C)), BigInt::one())
                    .mul(&Poly::var(Z).scale(&BigInt::from(2)).pow(m.exp(M) as u32))
                    .mul(&y_img.pow(m.exp(Y) as u32));
                Ok(mono_terms(&p)
                    .into_iter()
                    .filter(|(_, l)| keeps(l, zcap))
                    .collect())
            })
        }
        CoeffRing::F2 => {
            let y_img = Poly::<BigInt>::var_pow(A, d as u16)
                .add(&Poly::var(Z))
                .mul(&Poly::var(Z));
            Box::new(move |g| {
                let m = expect_mono(&hname, g)?;
                if m.exp(M) > 0 {
                    return Ok(vec![]);
                }
                let p = Poly::monomial(Mono::var_pow(A, m.exp(A)), BigInt::one())
                    .mul(&y_img.pow(m.exp(Y) as u32));
                Ok(mono_terms(&p)
                    .into_iter()
                    .filter(|(_, l)| keeps(l, zcap))
                    .collect())
            })
        }
    };
    Ok(Hom {
        name,
        source,
        target,
        shift: 0,
        map,
    })
}

/// Multiplication by m on the infinite mod-2 quotient presentation.
pub fn m_multiplication(field: Field) -> Result<Hom> {
    let source = pres(SpaceId::Gamma, field, CoeffRing::F2, Trunc::Inf)?;
    let target = pres(SpaceId::Gamma, field, CoeffRing::F2, Trunc::Inf)?;
    Ok(Hom {
        name: "mult_m".to_string(),
        source,
        target,
        shift: field.d() as isize,
        map: Box::new(|g| {
            let m = expect_mono("mult_m", g)?;
            if m.exp(A) > 0 {
                Ok(vec![])
            } else {
                Ok(vec![(BigInt::one(), GenLabel::Mono(m.mul(&Mono::var(M))))])
            }
        }),
    })
}

/// Gysin connecting map a^i z^j -> a^i (delta_j / t) into the mod-2 quotient.
pub fn gysin_delta(field: Field) -> Result<Hom> {
    let source = pres(SpaceId::Rk, field, CoeffRing::F2, Trunc::Inf)?;
    let target = pres(SpaceId::Gamma, field, CoeffRing::F2, Trunc::Inf)?;
    let d = field.d();
    Ok(Hom {
        name: "gysin_delta".to_string(),
        source,
        target,
        shift: 1 - d as isize,
        map: Box::new(move |g| {
            let m = expect_mono("gysin_delta", g)?;
            let j = m.exp(Z) as usize;
            if j == 0 {
                return Ok(vec![]);
            }
            let a_i = Mono::var_pow(A, m.exp(A));
            Ok(delta_poly(d, j)
                .terms()
                .map(|(t_mono, c)| {
                    let mut stripped = *t_mono;
                    stripped.0[T] = 0;
                    (c.clone(), GenLabel::Mono(a_i.mul(&stripped)))
                })
                .collect())
        }),
    })
}

/// Cofiber connecting map on the cover: c^i z^j -> c^i delta_j over Z
/// (rewritten to canonical classes), a^i z^j -> a^i delta_j mod 2.
pub fn delta_from_cover(field: Field, coeff: CoeffRing) -> Result<Hom> {
    let source = pres(SpaceId::Rk, field, coeff, Trunc::Inf)?;
    let target = pres(SpaceId::Mp, field, coeff, Trunc::Inf)?;
    let d = field.d();
    let map: ImageFn = match coeff {
        CoeffRing::Z => Box::new(move |g| {
            let m = expect_mono("delta", g)?;
            let (i, j) = (m.exp(C) as u32, m.exp(Z) as u32);
            if j == 0 {
                return Ok(vec![]);
            }
            Ok(canonical_pairs(i, j, d as u32)
                .into_iter()
                .map(|(ci, cj)| (BigInt::one(), GenLabel::CDelta { i: ci, j: cj }))
                .collect())
        }),
        CoeffRing::F2 => Box::new(move |g| {
            let m = expect_mono("delta", g)?;
            let j = m.exp(Z) as usize;
            if j == 0 {
                return Ok(vec![]);
            }
            let a_i = Mono::var_pow(A, m.exp(A));
            Ok(delta_poly(d, j)
                .terms()
                .map(|(t_mono, c)| (c.clone(), GenLabel::Mono(a_i.mul(t_mono))))
                .collect())
        }),
    };
    Ok(Hom {
        name: "delta".to_string(),
        source,
        target,
        shift: 1,
        map,
    })
}

/// Cofiber connecting map on the base: z^j -> delta_j into the Thom space
/// presentation, truncated or not.
pub fn delta_from_base(field: Field, coeff: CoeffRing, trunc: Trunc) -> Result<Hom> {
    let source = pres(SpaceId::Kp, field, coeff, trunc)?;
    let target = pres(SpaceId::Mp, field, coeff, trunc)?;
    let d = field.d();
    let map: ImageFn = match coeff {
        CoeffRing::Z => Box::new(|g| {
            let m = expect_mono("delta", g)?;
            let j = m.exp(Z);
            if j == 0 {
                Ok(vec![])
            } else {
                Ok(vec![(BigInt::one(), GenLabel::CDelta { i: 0, j })])
            }
        }),
        CoeffRing::F2 => Box::new(move |g| {
            let m = expect_mono("delta", g)?;
            let j = m.exp(Z) as usize;
            if j == 0 {
                return Ok(vec![]);
            }
            Ok(delta_poly(d, j)
                .terms()
                .map(|(t_mono, c)| (c.clone(), GenLabel::Mono(*t_mono)))
                .collect())
        }),
    };
    Ok(Hom {
        name: "delta".to_string(),
        source,
        target,
        shift: 1,
        map,
    })
}

/// Integral zero-section pullback: the unit to the unit, m^i y^j s to
/// m^i y^j (m^2 - 4y), torsion classes to zero.
pub fn b_star(field: Field) -> Result<Hom> {
    let source = pres(SpaceId::Mp, field, CoeffRing::Z, Trunc::Inf)?;
    let target = pres(SpaceId::Gamma, field, CoeffRing::Z, Trunc::Inf)?;
    let s_img = Poly::<BigInt>::var_pow(M, 2).sub(&Poly::var(Y).scale(&BigInt::from(4)));
    Ok(Hom {
        name: "b*".to_string(),
        source,
        target,
        shift: 0,
        map: Box::new(move |g| match g {
            GenLabel::CDelta { .. } => Ok(vec![]),
            GenLabel::Mono(m) if m.exp(S) == 0 => Ok(vec![(BigInt::one(), GenLabel::Mono(*m))]),
            GenLabel::Mono(m) => {
                let mut base = *m;
                base.0[S] = 0;
                Ok(mono_terms(&Poly::monomial(base, BigInt::one()).mul(&s_img)))
            }
            _ => Err(Error::CheckFailed(format!(
                "b*: unexpected generator {}",
                g.name()
            ))),
        }),
    })
}

/// Mod-2 symmetric-square pullback; the identity on generator labels.
pub fn b_delta_star(field: Field, trunc: Trunc) -> Result<Hom> {
    let source = pres(SpaceId::Mp, field, CoeffRing::F2, trunc)?;
    let target = pres(SpaceId::Sp2, field, CoeffRing::F2, trunc)?;
    Ok(Hom {
        name: "b_delta*".to_string(),
        source,
        target,
        shift: 0,
        map: Box::new(|g| Ok(vec![(BigInt::one(), g.clone())])),
    })
}

/// Inclusion of the base polynomial algebra into the cover.
pub fn pi2_star(field: Field, coeff: CoeffRing) -> Result<Hom> {
    let source = pres(SpaceId::Kp, field, coeff, Trunc::Inf)?;
    let target = pres(SpaceId::Rk, field, coeff, Trunc::Inf)?;
    Ok(Hom {
        name: "pi2*".to_string(),
        source,
        target,
        shift: 0,
        map: Box::new(|g| Ok(vec![(BigInt::one(), g.clone())])),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_kernel_is_the_expected_ideal() {
        let h = i_star(Field::C, CoeffRing::Z, Trunc::Inf).unwrap();
        let norm = Poly::<BigInt>::var_pow(M, 2).sub(&Poly::var(Y).scale(&BigInt::from(4)));
        for k in [4usize, 6, 8, 10] {
            h.check_well_defined(k).unwrap();
            ideal_kernel_compare(&h, std::slice::from_ref(&norm), k).unwrap();
        }
        assert_eq!(h.kernel_invariants(4).unwrap(), (1, vec![]));

        let h1 = i_star(Field::C, CoeffRing::Z, Trunc::N(1)).unwrap();
        let two_y = Poly::<BigInt>::var(Y).scale(&BigInt::from(2));
        for k in [4usize, 6, 8] {
            h1.check_well_defined(k).unwrap();
            ideal_kernel_compare(&h1, std::slice::from_ref(&two_y), k).unwrap();
        }
    }

    #[test]
    fn gysin_sequence_is_exact_in_low_degrees() {
        let mul = m_multiplication(Field::C).unwrap();
        let p3 = i_star(Field::C, CoeffRing::F2, Trunc::Inf).unwrap();
        let gys = gysin_delta(Field::C).unwrap();
        for k in 0..=8 {
            exact_at(&mul, &p3, k, false).unwrap();
            exact_at(&p3, &gys, k, false).unwrap();
            exact_at(&gys, &mul, k, false).unwrap();
        }
    }

    #[test]
    fn thom_cofiber_sequence_is_short_exact_mod_two() {
        let del = delta_from_base(Field::C, CoeffRing::F2, Trunc::Inf).unwrap();
        let b = b_delta_star(Field::C, Trunc::Inf).unwrap();
        for k in 0..=10 {
            assert!(del.is_monic(k, true).unwrap());
            exact_at(&del, &b, k, true).unwrap();
            assert!(b.is_epic(k, true).unwrap());
        }
    }

    #[test]
    fn truncated_cofiber_sequence_is_short_exact() {
        let del = delta_from_base(Field::C, CoeffRing::F2, Trunc::N(2)).unwrap();
        let b = b_delta_star(Field::C, Trunc::N(2)).unwrap();
        for k in 0..=12 {
            assert!(del.is_monic(k, true).unwrap());
            exact_at(&del, &b, k, true).unwrap();
            assert!(b.is_epic(k, true).unwrap());
        }
    }

    #[test]
    fn integral_ladder_is_exact_and_the_base_kernel_is_two_z() {
        let b = b_star(Field::C).unwrap();
        let i = i_star(Field::C, CoeffRing::Z, Trunc::Inf).unwrap();
        let del = delta_from_cover(Field::C, CoeffRing::Z).unwrap();
        for k in 0..=8 {
            exact_at(&b, &i, k, true).unwrap();
            exact_at(&i, &del, k, true).unwrap();
            exact_at(&del, &b, k, true).unwrap();
        }

        let low = delta_from_base(Field::C, CoeffRing::Z, Trunc::Inf).unwrap();
        let two_z = Poly::<BigInt>::var(Z).scale(&BigInt::from(2));
        for k in [2usize, 4, 6] {
            ideal_kernel_compare(&low, std::slice::from_ref(&two_z), k).unwrap();
        }
    }

    #[test]
    fn composite_connecting_map_is_monic_mod_two() {
        let pi2 = pi2_star(Field::C, CoeffRing::F2).unwrap();
        let del = delta_from_cover(Field::C, CoeffRing::F2).unwrap();
        let comp = compose("delta_pi2*", del, pi2).unwrap();
        for k in 0..=10 {
            assert!(comp.is_monic(k, true).unwrap());
        }
    }
}
