//! Integral cohomology of truncated Thom module spaces, additively.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expr::ParsedTerm;
use crate::names::{combo_str, mono_str};
use crate::poly::{Mono, Poly, C, M, Y, Z};
use crate::snf::{kernel_basis, smith_normal_form, IntMat, Quotient};

use super::monomial::MonomialRing;
use super::{scaled_unit_vec, unit_vec, GenLabel, Realize, RingInfo};

/// Even degrees carry the kernel of the restriction from the c,m,y ring to
/// the truncated bundle ring; odd degrees carry its cokernel one degree
/// down, written on c^i*delta[j]. Products are not defined.
pub struct ThnZ {
    d: usize,
    n: u32,
    borel: MonomialRing,
    rkn: MonomialRing,
    space: String,
}

impl ThnZ {
    pub fn new(d: usize, n: u32, space: &str) -> ThnZ {
        ThnZ {
            d,
            n,
            borel: MonomialRing::borel_n(d, n, space),
            rkn: MonomialRing::rk(d, Some(n), false, space),
            space: space.to_string(),
        }
    }

    /// c -> c, m -> 2z, y -> (c^{d/2} + z)z, truncated monomials dropped.
    fn restriction_image(&self, m: &Mono) -> Poly<BigInt> {
        let img = Poly::var_pow(C, m.exp(C))
            .mul(&Poly::var(Z).scale(&BigInt::from(2)).pow(m.exp(M) as u32))
            .mul(
                &Poly::var_pow(C, (self.d / 2) as u16)
                    .add(&Poly::var(Z))
                    .mul(&Poly::var(Z))
                    .pow(m.exp(Y) as u32),
            );
        let mut out = Poly::zero();
        for (mm, c) in img.terms() {
            if !self.rkn.killed(mm) {
                out.add_term(*mm, c.clone());
            }
        }
        out
    }

    /// Generators and relations of both sides in one degree, plus the
    /// restriction matrix between them, all in monomial coordinates.
    #[allow(clippy::type_complexity)]
    fn restriction_data(
        &self,
        k: usize,
    ) -> Result<(
        Vec<Mono>,
        Vec<Vec<BigInt>>,
        Vec<Mono>,
        Vec<Vec<BigInt>>,
        Vec<Vec<BigInt>>,
    )> {
        let (ga, ra) = self.borel.piece(k)?;
        let (gb, rb) = self.rkn.piece(k)?;
        let monos_a = unwrap_monos(ga)?;
        let monos_b = unwrap_monos(gb)?;
        let index_b: HashMap<Mono, usize> =
            monos_b.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut f = Vec::with_capacity(monos_a.len());
        for m in &monos_a {
            let mut col = vec![BigInt::zero(); monos_b.len()];
            for (mm, c) in self.restriction_image(m).terms() {
                col[index_b[mm]] += c;
            }
            f.push(col);
        }
        Ok((monos_a, ra, monos_b, rb, f))
    }

    fn even_piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        let (monos_a, ra, monos_b, rb, f) = self.restriction_data(k)?;
        let len_a = monos_a.len();
        let qb = Quotient::new(monos_b.len(), &rb);
        let mut labels = Vec::new();
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        let mut single = vec![false; len_a];
        for i in 0..len_a {
            if qb.is_zero_class(&f[i]) {
                single[i] = true;
                labels.push(GenLabel::Mono(monos_a[i]));
                cols.push(unit_vec(len_a, i));
            }
        }
        for i in 0..len_a {
            if single[i] {
                continue;
            }
            let twice: Vec<BigInt> = f[i].iter().map(|v| v * 2).collect();
            if qb.is_zero_class(&twice) {
                labels.push(GenLabel::Formal(format!("2*{}", mono_str(&monos_a[i]))));
                cols.push(scaled_unit_vec(len_a, i, 2));
            }
        }
        let stacked: Vec<Vec<BigInt>> = f.iter().chain(rb.iter()).cloned().collect();
        let fb = IntMat::from_columns(monos_b.len(), &stacked);
        let fb_snf = smith_normal_form(&fb);
        let mut seen: HashSet<Vec<BigInt>> = cols.iter().cloned().collect();
        for kv in kernel_basis(&fb, &fb_snf) {
            let x = kv[..len_a].to_vec();
            if x.iter().all(|v| v.is_zero()) || !seen.insert(x.clone()) {
                continue;
            }
            let terms: Vec<(BigInt, String)> = x
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (v.clone(), mono_str(&monos_a[i])))
                .collect();
            labels.push(GenLabel::Formal(combo_str(&terms)));
            cols.push(x);
        }
        let n_gens = labels.len();
        let stacked_a: Vec<Vec<BigInt>> = cols.iter().chain(ra.iter()).cloned().collect();
        let kr = IntMat::from_columns(len_a, &stacked_a);
        let kr_snf = smith_normal_form(&kr);
        let mut rels = Vec::new();
        for kv in kernel_basis(&kr, &kr_snf) {
            let lam = kv[..n_gens].to_vec();
            if lam.iter().any(|v| !v.is_zero()) {
                rels.push(lam);
            }
        }
        Ok((labels, rels))
    }

    fn odd_piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        let (_, _, monos_b, rb, f) = self.restriction_data(k - 1)?;
        let gens = monos_b
            .iter()
            .map(|m| GenLabel::CDelta {
                i: m.exp(C),
                j: m.exp(Z),
            })
            .collect();
        let rels: Vec<Vec<BigInt>> = rb.into_iter().chain(f).collect();
        Ok((gens, rels))
    }
}

fn unwrap_monos(gens: Vec<GenLabel>) -> Result<Vec<Mono>> {
    gens.into_iter()
        .map(|g| match g {
            GenLabel::Mono(m) => Ok(m),
            _ => Err(Error::CheckFailed(
                "internal: monomial ring produced a non-monomial generator".to_string(),
            )),
        })
        .collect()
}

impl Realize for ThnZ {
    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        if k == 0 {
            return Ok((vec![GenLabel::unit()], vec![]));
        }
        if k % 2 == 1 {
            self.odd_piece(k)
        } else {
            self.even_piece(k)
        }
    }

    fn mul_gens(&self, _a: &GenLabel, _b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>> {
        Err(Error::CheckFailed(
            "internal: products are disabled in this presentation".to_string(),
        ))
    }

    fn interpret_term(&self, _term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)> {
        Err(Error::Unsupported {
            space: self.space.clone(),
            message: "additive-only presentation, elements cannot be parsed here".to_string(),
        })
    }

    fn prefers(&self, g: &GenLabel) -> bool {
        match g {
            GenLabel::CDelta { i, j } => {
                *j >= 1 && 2 * (*i as usize) < (*j as usize) * self.d
            }
            _ => true,
        }
    }

    fn can_multiply(&self) -> bool {
        false
    }

    fn describe(&self) -> RingInfo {
        RingInfo {
            generators: vec![
                (
                    "even degrees: kernel classes of the restriction from the c,m,y ring"
                        .to_string(),
                    0,
                ),
                (
                    format!(
                        "odd degrees: c^i*delta[j] spanning the restriction cokernel \
                         one degree down (j <= {})",
                        self.n
                    ),
                    0,
                ),
            ],
            relations: vec![
                "2*(every odd-degree class)".to_string(),
                "additive only: products are not defined".to_string(),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::space::{CoeffRing, Field, SpaceSpec, Trunc};

    fn pres(n: u32) -> Presentation {
        let spec = SpaceSpec::from_cli("thn", Field::C, CoeffRing::Z, Trunc::N(n)).unwrap();
        Presentation::new(spec).unwrap()
    }

    fn basis_names(p: &Presentation, k: usize) -> Vec<String> {
        p.piece(k)
            .unwrap()
            .basis
            .iter()
            .map(|b| b.display_name())
            .collect()
    }

    #[test]
    fn first_truncation_has_one_even_and_one_odd_class() {
        let p = pres(1);
        assert_eq!(basis_names(&p, 4), vec!["m^2"]);
        assert_eq!(p.poincare(4).unwrap(), (1, 0));
        assert_eq!(basis_names(&p, 3), vec!["delta[1]"]);
        assert_eq!(p.poincare(3).unwrap(), (0, 1));
        assert_eq!(p.poincare(5).unwrap(), (0, 0));
    }

    #[test]
    fn kernel_classes_above_the_truncation_degree() {
        let p = pres(2);
        assert_eq!(basis_names(&p, 6), vec!["m*y"]);
        assert_eq!(p.poincare(6).unwrap(), (1, 0));
        assert_eq!(basis_names(&p, 8), vec!["m^2*y"]);
        assert_eq!(p.poincare(8).unwrap(), (1, 0));
    }

    #[test]
    fn products_are_refused() {
        let p = pres(1);
        let e = crate::expr::parse_element("m^2").unwrap();
        assert!(matches!(
            p.multiply(&e, &e),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(
            p.normal_form(&e),
            Err(Error::Unsupported { .. })
        ));
    }
}
