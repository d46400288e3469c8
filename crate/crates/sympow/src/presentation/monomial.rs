//! Rings whose graded pieces are spanned by ambient monomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{ParsedFactor, ParsedTerm};
use crate::fib::{family_by_closed_form, nu, r_in, FamilyId};
use crate::names::{mono_str, poly_str};
use crate::poly::{cmp_display, Mono, Poly, Var, A, C, L1, L2, M, VAR_NAMES, X, Y, Z};
use crate::space::CoeffRing;

use super::{lift_f2, small_exp, vdeg, GenLabel, Realize, RingInfo};

/// Quotient of a polynomial ring by torsion variables, monomial products,
/// variable truncations, and homogeneous polynomial relations.
pub struct MonomialRing {
    d: usize,
    vars: Vec<Var>,
    torsion_vars: Vec<Var>,
    kill: Vec<Mono>,
    truncation: Vec<(Var, u16)>,
    relations: Vec<Poly<BigInt>>,
    mod2: bool,
    x_image: Option<Poly<BigInt>>,
    space: String,
}

fn nu_poly(k: usize, d: usize, mod2: bool) -> Poly<BigInt> {
    if mod2 {
        lift_f2(nu(k, d, CoeffRing::F2).as_mod2().unwrap())
    } else {
        nu(k, d, CoeffRing::Z).as_int().unwrap().clone()
    }
}

impl MonomialRing {
    pub fn kp(d: usize, n: Option<u32>, mod2: bool, space: &str) -> MonomialRing {
        MonomialRing {
            d,
            vars: vec![Z],
            torsion_vars: vec![],
            kill: vec![],
            truncation: n.map(|n| (Z, n as u16 + 1)).into_iter().collect(),
            relations: vec![],
            mod2,
            x_image: None,
            space: space.to_string(),
        }
    }

    pub fn rp(mod2: bool, space: &str) -> MonomialRing {
        MonomialRing {
            d: 2,
            vars: if mod2 { vec![A] } else { vec![C] },
            torsion_vars: if mod2 { vec![] } else { vec![C] },
            kill: vec![],
            truncation: vec![],
            relations: vec![],
            mod2,
            x_image: None,
            space: space.to_string(),
        }
    }

    pub fn rk(d: usize, n: Option<u32>, mod2: bool, space: &str) -> MonomialRing {
        MonomialRing {
            d,
            vars: if mod2 { vec![A, Z] } else { vec![C, Z] },
            torsion_vars: if mod2 { vec![] } else { vec![C] },
            kill: vec![],
            truncation: n.map(|n| (Z, n as u16 + 1)).into_iter().collect(),
            relations: vec![],
            mod2,
            x_image: None,
            space: space.to_string(),
        }
    }

    /// The double-projectivization base ring, optionally truncated by the
    /// nu-family relations.
    pub fn gamma(d: usize, n: Option<u32>, mod2: bool, space: &str) -> MonomialRing {
        let relations = match n {
            None => vec![],
            Some(n) => vec![
                nu_poly(n as usize, d, mod2),
                nu_poly(n as usize + 1, d, mod2),
            ],
        };
        let x_image = if mod2 {
            Poly::var_pow(A, d as u16).add(&Poly::var(M))
        } else {
            Poly::var(M).sub(&Poly::var_pow(C, (d / 2) as u16))
        };
        MonomialRing {
            d,
            vars: if mod2 { vec![A, M, Y] } else { vec![C, M, Y] },
            torsion_vars: if mod2 { vec![] } else { vec![C] },
            kill: vec![if mod2 {
                Mono::var(A).mul(&Mono::var(M))
            } else {
                Mono::var(C).mul(&Mono::var(M))
            }],
            truncation: vec![],
            relations,
            mod2,
            x_image: Some(x_image),
            space: space.to_string(),
        }
    }

    /// Integral truncated Borel ring: r-family relations plus y-truncation.
    pub fn borel_n(d: usize, n: u32, space: &str) -> MonomialRing {
        let mut ring = MonomialRing::gamma(d, None, false, space);
        ring.relations = vec![r_in(n as usize + 1, M, Y), r_in(n as usize + 2, M, Y)];
        ring.truncation = vec![(Y, n as u16 + 1)];
        ring
    }

    pub fn grass(d: usize, n: u32, mod2: bool, space: &str) -> MonomialRing {
        let sigma = |k: usize| {
            family_by_closed_form(FamilyId::Sigma, k)
                .as_int()
                .unwrap()
                .clone()
        };
        MonomialRing {
            d,
            vars: vec![L1, L2],
            torsion_vars: vec![],
            kill: vec![],
            truncation: vec![],
            relations: vec![sigma(n as usize), sigma(n as usize + 1)],
            mod2,
            x_image: None,
            space: space.to_string(),
        }
    }

    pub(crate) fn killed(&self, m: &Mono) -> bool {
        self.kill.iter().any(|km| m.divisible_by(km))
            || self.truncation.iter().any(|&(v, e)| m.exp(v) >= e)
    }

    fn gens_at(&self, k: usize) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = Mono::one();
        self.enumerate(0, k, &mut cur, &mut out);
        out.sort_by(cmp_display);
        out
    }

    fn enumerate(&self, vi: usize, rem: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if vi == self.vars.len() {
            if rem == 0 && !self.killed(cur) {
                out.push(*cur);
            }
            return;
        }
        let v = self.vars[vi];
        let dv = vdeg(v, self.d);
        let mut e: u16 = 0;
        while dv * e as usize <= rem {
            cur.0[v] = e;
            self.enumerate(vi + 1, rem - dv * e as usize, cur, out);
            e += 1;
        }
        cur.0[v] = 0;
    }
}

impl Realize for MonomialRing {
    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        let gens = self.gens_at(k);
        let index: HashMap<Mono, usize> =
            gens.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if self.mod2 || self.torsion_vars.iter().any(|&v| g.exp(v) > 0) {
                cols.push(super::scaled_unit_vec(gens.len(), i, 2));
            }
        }
        for r in &self.relations {
            let dr = r
                .homogeneous_degree(self.d as u32)
                .expect("inhomogeneous relation") as usize;
            if dr > k {
                continue;
            }
            for u in self.gens_at(k - dr) {
                let mut col = vec![BigInt::zero(); gens.len()];
                for (m, c) in r.terms() {
                    let prod = u.mul(m);
                    if self.killed(&prod) {
                        continue;
                    }
                    col[index[&prod]] += c;
                }
                if col.iter().any(|v| !v.is_zero()) {
                    cols.push(col);
                }
            }
        }
        Ok((gens.into_iter().map(GenLabel::Mono).collect(), cols))
    }

    fn mul_gens(&self, a: &GenLabel, b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>> {
        match (a, b) {
            (GenLabel::Mono(ma), GenLabel::Mono(mb)) => {
                let prod = ma.mul(mb);
                Ok(if self.killed(&prod) {
                    vec![]
                } else {
                    vec![(BigInt::one(), GenLabel::Mono(prod))]
                })
            }
            _ => Err(Error::CheckFailed(
                "internal: non-monomial generator in a monomial ring".to_string(),
            )),
        }
    }

    fn interpret_term(&self, term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)> {
        if term.den_log2 > 0 {
            return Err(Error::NotInRing(format!(
                "{}: classes here have no halves",
                self.space
            )));
        }
        let deg = term
            .degree(self.d)
            .ok_or_else(|| Error::BadArg("term degree overflow".to_string()))?;
        let mut p = Poly::constant(term.coeff.clone());
        for f in &term.factors {
            match f {
                ParsedFactor::Var(v, e) => {
                    if *v == X && self.x_image.is_some() {
                        p = p.mul(&self.x_image.as_ref().unwrap().pow(*e));
                    } else if self.vars.contains(v) {
                        p = p.mul(&Poly::var_pow(*v, small_exp(*e)?));
                    } else {
                        return Err(Error::NotInRing(format!(
                            "{}: no generator {}",
                            self.space, VAR_NAMES[*v]
                        )));
                    }
                }
                _ => {
                    return Err(Error::NotInRing(format!(
                        "{}: bracketed and fractional classes are not elements here",
                        self.space
                    )))
                }
            }
        }
        let mut out = Vec::new();
        for (m, c) in p.terms() {
            if self.killed(m) {
                continue;
            }
            out.push((c.clone(), GenLabel::Mono(*m)));
        }
        Ok((deg, out))
    }

    fn describe(&self) -> RingInfo {
        let generators = self
            .vars
            .iter()
            .map(|&v| (VAR_NAMES[v].to_string(), vdeg(v, self.d)))
            .collect();
        let mut relations = Vec::new();
        if self.mod2 {
            relations.push("2 = 0".to_string());
        }
        for &v in &self.torsion_vars {
            relations.push(format!("2*{}", VAR_NAMES[v]));
        }
        for km in &self.kill {
            relations.push(mono_str(km));
        }
        for &(v, e) in &self.truncation {
            relations.push(format!("{}^{}", VAR_NAMES[v], e));
        }
        for r in &self.relations {
            relations.push(poly_str(r));
        }
        RingInfo {
            generators,
            relations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snf::Quotient;

    fn quotient_of(ring: &MonomialRing, k: usize) -> (usize, usize) {
        let (gens, rels) = ring.piece(k).unwrap();
        let q = Quotient::new(gens.len(), &rels);
        (q.free_rank(), q.torsion().len())
    }

    #[test]
    fn truncated_projective_space_dies_past_top() {
        let ring = MonomialRing::kp(2, Some(2), false, "KP_2");
        assert_eq!(quotient_of(&ring, 4), (1, 0));
        assert_eq!(quotient_of(&ring, 6), (0, 0));
    }

    #[test]
    fn restricted_bundle_ring_degree_two() {
        let ring = MonomialRing::rk(2, None, false, "RK^inf");
        let (gens, _) = ring.piece(2).unwrap();
        let names: Vec<String> = gens.iter().map(|g| g.name()).collect();
        assert_eq!(names, vec!["c", "z"]);
        assert_eq!(quotient_of(&ring, 2), (1, 1));
    }

    #[test]
    fn truncated_borel_degree_four() {
        let ring = MonomialRing::borel_n(2, 1, "Borel_1");
        // m^2 = 2y and 2c^2 = 0 leave Z{y} + Z/2{c^2}.
        assert_eq!(quotient_of(&ring, 4), (1, 1));
        // r-multiples kill the m,y block; c^4 and c^2*y survive with order 2.
        assert_eq!(quotient_of(&ring, 8), (0, 2));
    }

    #[test]
    fn grassmannian_collapses_l2_onto_l1_squared() {
        let ring = MonomialRing::grass(2, 2, false, "Grass_2");
        assert_eq!(quotient_of(&ring, 4), (1, 0));
        assert_eq!(quotient_of(&ring, 2), (1, 0));
    }
}
