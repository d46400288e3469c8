//! Integral cohomology of the untruncated Thom module space.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::expr::{ParsedFactor, ParsedTerm};
use crate::poly::{cmp_display, Mono, Poly, C, M, S, VAR_NAMES, X, Y};

use super::{canonical_pairs, scaled_unit_vec, small_exp, GenLabel, Realize, RingInfo};

/// Free part Z[m,y]*s plus unit, order-2 part spanned by c^i*delta[j]
/// with 2i < j*d, glued by s^2 = (m^2 - 4y)s, c*s = 0, m*delta = 0,
/// y*delta[j] = c^{d/2}*delta[j+1] + delta[j+2].
pub struct MpZ {
    d: usize,
    space: String,
}

impl MpZ {
    pub fn new(d: usize, space: &str) -> MpZ {
        MpZ {
            d,
            space: space.to_string(),
        }
    }

    fn s_square(&self) -> Poly<BigInt> {
        Poly::var_pow(M, 2).sub(&Poly::var(Y).scale(&BigInt::from(4)))
    }

    /// c^alpha * y^gamma * delta_j rewritten to canonical c^i*delta[jj], mod 2.
    fn delta_pairs(&self, alpha: u32, gamma: u32, j: u32) -> Vec<(u16, u16)> {
        let d = self.d as u64;
        let mut cur: HashMap<(u64, u64), bool> = HashMap::new();
        cur.insert((alpha as u64, j as u64), true);
        for _ in 0..gamma {
            let mut next: HashMap<(u64, u64), bool> = HashMap::new();
            for ((i, jj), par) in cur {
                if !par {
                    continue;
                }
                for key in [(i + d / 2, jj + 1), (i, jj + 2)] {
                    let e = next.entry(key).or_insert(false);
                    *e = !*e;
                }
            }
            cur = next;
        }
        let mut parity: HashMap<(u16, u16), bool> = HashMap::new();
        for ((i, jj), par) in cur {
            if !par {
                continue;
            }
            for pr in canonical_pairs(i as u32, jj as u32, self.d as u32) {
                let e = parity.entry(pr).or_insert(false);
                *e = !*e;
            }
        }
        let mut out: Vec<(u16, u16)> = parity
            .into_iter()
            .filter(|&(_, p)| p)
            .map(|(k, _)| k)
            .collect();
        out.sort();
        out
    }
}

impl Realize for MpZ {
    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        if k == 0 {
            return Ok((vec![GenLabel::unit()], vec![]));
        }
        let d = self.d;
        if k % 2 == 1 {
            let mut gens = Vec::new();
            let mut j = 1usize;
            while j * d <= k - 1 {
                let i = (k - 1 - j * d) / 2;
                if 2 * i < j * d {
                    gens.push(GenLabel::CDelta {
                        i: i as u16,
                        j: j as u16,
                    });
                }
                j += 1;
            }
            let n = gens.len();
            let rels = (0..n).map(|idx| scaled_unit_vec(n, idx, 2)).collect();
            return Ok((gens, rels));
        }
        if k % d != 0 || k < 2 * d {
            return Ok((vec![], vec![]));
        }
        let w = k / d - 2;
        let mut monos: Vec<Mono> = (0..=w / 2)
            .map(|j| {
                Mono::var_pow(M, (w - 2 * j) as u16)
                    .mul(&Mono::var_pow(Y, j as u16))
                    .mul(&Mono::var(S))
            })
            .collect();
        monos.sort_by(cmp_display);
        Ok((monos.into_iter().map(GenLabel::Mono).collect(), vec![]))
    }

    fn mul_gens(&self, a: &GenLabel, b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>> {
        let (ma, mb) = match (a, b) {
            (GenLabel::CDelta { .. }, GenLabel::Mono(m)) if m.is_one() => {
                return Ok(vec![(BigInt::one(), a.clone())])
            }
            (GenLabel::Mono(m), GenLabel::CDelta { .. }) if m.is_one() => {
                return Ok(vec![(BigInt::one(), b.clone())])
            }
            (GenLabel::CDelta { .. }, _) | (_, GenLabel::CDelta { .. }) => return Ok(vec![]),
            (GenLabel::Mono(ma), GenLabel::Mono(mb)) => (ma, mb),
            _ => {
                return Err(Error::CheckFailed(
                    "internal: unexpected generator kind in the Thom module ring".to_string(),
                ))
            }
        };
        let prod = ma.mul(mb);
        match prod.exp(S) {
            0 | 1 => Ok(vec![(BigInt::one(), GenLabel::Mono(prod))]),
            2 => {
                let mut base = prod;
                base.0[S] = 1;
                Ok(vec![
                    (BigInt::one(), GenLabel::Mono(base.mul(&Mono::var_pow(M, 2)))),
                    (BigInt::from(-4), GenLabel::Mono(base.mul(&Mono::var(Y)))),
                ])
            }
            _ => Err(Error::CheckFailed(
                "internal: generator with an s-exponent above one".to_string(),
            )),
        }
    }

    fn interpret_term(&self, term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)> {
        if term.den_log2 > 0 {
            return Err(Error::NotInRing(format!(
                "{}: integral Thom classes have no halves",
                self.space
            )));
        }
        let deg = term
            .degree(self.d)
            .ok_or_else(|| Error::BadArg("term degree overflow".to_string()))?;
        let mut deltas: Vec<u32> = Vec::new();
        let mut p = Poly::constant(term.coeff.clone());
        for f in &term.factors {
            match f {
                ParsedFactor::Var(v, e) => {
                    let img = match *v {
                        C | M | Y | S => Poly::var_pow(*v, small_exp(*e)?),
                        X => Poly::var(M)
                            .sub(&Poly::var_pow(C, (self.d / 2) as u16))
                            .pow(*e),
                        _ => {
                            return Err(Error::NotInRing(format!(
                                "{}: no generator {}",
                                self.space, VAR_NAMES[*v]
                            )))
                        }
                    };
                    p = p.mul(&img);
                }
                ParsedFactor::Delta(j) => deltas.push(*j),
                _ => {
                    return Err(Error::NotInRing(format!(
                        "{}: only c, m, y, s, x and delta[j] name classes here",
                        self.space
                    )))
                }
            }
        }
        if deltas.len() >= 2 || deltas.first() == Some(&0) {
            return Ok((deg, vec![]));
        }
        if let Some(&j) = deltas.first() {
            let mut parity: HashMap<(u16, u16), bool> = HashMap::new();
            for (m, c) in p.terms() {
                if m.exp(S) > 0 || m.exp(M) > 0 || !c.is_odd() {
                    continue;
                }
                for pr in self.delta_pairs(m.exp(C) as u32, m.exp(Y) as u32, j) {
                    let e = parity.entry(pr).or_insert(false);
                    *e = !*e;
                }
            }
            let mut pairs: Vec<(u16, u16)> = parity
                .into_iter()
                .filter(|&(_, p)| p)
                .map(|(k, _)| k)
                .collect();
            pairs.sort();
            return Ok((
                deg,
                pairs
                    .into_iter()
                    .map(|(i, jj)| (BigInt::one(), GenLabel::CDelta { i, j: jj }))
                    .collect(),
            ));
        }
        let msq = self.s_square();
        let mut out: Vec<(BigInt, GenLabel)> = Vec::new();
        let mut acc: Poly<BigInt> = Poly::zero();
        for (m, c) in p.terms() {
            let se = m.exp(S);
            if se == 0 {
                if m.is_one() {
                    out.push((c.clone(), GenLabel::unit()));
                    continue;
                }
                return Err(Error::NotInRing(format!(
                    "{}: positive-degree even classes are multiples of s",
                    self.space
                )));
            }
            if m.exp(C) > 0 {
                continue;
            }
            let mut base = *m;
            base.0[S] = 1;
            acc = acc.add(&Poly::monomial(base, c.clone()).mul(&msq.pow(se as u32 - 1)));
        }
        for (m, c) in acc.terms() {
            out.push((c.clone(), GenLabel::Mono(*m)));
        }
        Ok((deg, out))
    }

    fn describe(&self) -> RingInfo {
        let d = self.d;
        RingInfo {
            generators: vec![
                ("c".to_string(), 2),
                ("m".to_string(), d),
                ("y".to_string(), 2 * d),
                ("s".to_string(), 2 * d),
                (format!("delta[j] (degree j*{d}+1)"), 0),
            ],
            relations: vec![
                "2*c".to_string(),
                "c*m".to_string(),
                "c*s".to_string(),
                "2*delta[j]".to_string(),
                "m*delta[j]".to_string(),
                "s*delta[j]".to_string(),
                "delta[i]*delta[j]".to_string(),
                "s^2 - (m^2 - 4*y)*s".to_string(),
                format!("y*delta[j] - c^{}*delta[j+1] - delta[j+2]", d / 2),
                "every positive-degree even class is a multiple of s".to_string(),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::presentation::Presentation;
    use crate::space::{CoeffRing, Field, SpaceSpec, Trunc};

    fn pres(field: Field) -> Presentation {
        let spec = SpaceSpec::from_cli("mp", field, CoeffRing::Z, Trunc::Inf).unwrap();
        Presentation::new(spec).unwrap()
    }

    #[test]
    fn free_part_sits_on_s() {
        for field in [Field::C, Field::H] {
            let p = pres(field);
            let d = 2 * p.spec.d();
            let names: Vec<String> = p
                .piece(d)
                .unwrap()
                .basis
                .iter()
                .map(|b| b.display_name())
                .collect();
            assert_eq!(names, vec!["s"]);
            assert_eq!(p.poincare(p.spec.d()).unwrap(), (0, 0));
        }
    }

    #[test]
    fn odd_part_lists_canonical_delta_classes() {
        let p = pres(Field::C);
        let names: Vec<String> = p
            .piece(7)
            .unwrap()
            .basis
            .iter()
            .map(|b| b.display_name())
            .collect();
        assert_eq!(names, vec!["c*delta[2]", "delta[3]"]);
        assert_eq!(p.poincare(7).unwrap(), (0, 2));
    }

    #[test]
    fn y_action_on_delta() {
        let p = pres(Field::C);
        let e = crate::expr::parse_element("y*delta[2]").unwrap();
        let (k, combo) = p.normal_form(&e).unwrap();
        assert_eq!(k, 9);
        assert_eq!(crate::names::combo_str(&combo), "c*delta[3] + delta[4]");
    }

    #[test]
    fn high_c_powers_cascade_down() {
        let p = pres(Field::C);
        let e = crate::expr::parse_element("c^5*delta[3]").unwrap();
        let (k, combo) = p.normal_form(&e).unwrap();
        assert_eq!(k, 17);
        assert_eq!(
            crate::names::combo_str(&combo),
            "c^3*delta[5] + c^2*delta[6] + delta[8]"
        );
    }

    #[test]
    fn s_squares_back_into_the_lattice() {
        let p = pres(Field::C);
        let s = crate::expr::parse_element("s").unwrap();
        let (k, combo) = p.multiply(&s, &s).unwrap();
        assert_eq!(k, 8);
        assert_eq!(crate::names::combo_str(&combo), "-4*y*s + m^2*s");
    }
}
