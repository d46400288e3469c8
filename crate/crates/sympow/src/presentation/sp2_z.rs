//! Integral cohomology of the symmetric square, truncated or not.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{ParsedFactor, ParsedTerm};
use crate::fib::r_in;
use crate::names::{combo_str, lattice_name};
use crate::poly::{G, W};

use super::{canonical_pairs, scaled_unit_vec, GenLabel, Realize, RingInfo};

/// Even part: the sublattice of Z[g,w] spanned by 1, g^q*w^s (q >= 1) and
/// 2*w^p, written with h = 2w; truncation divides by the lattice ideal of
/// R_{n+1}, R_{n+2}. Odd part: order-2 classes u[i,j] with 2i < j*d
/// (and j <= n when truncated) that annihilate everything positive.
pub struct Sp2Z {
    d: usize,
    trunc: Option<u32>,
    space: String,
}

impl Sp2Z {
    pub fn new(d: usize, trunc: Option<u32>, space: &str) -> Sp2Z {
        Sp2Z {
            d,
            trunc,
            space: space.to_string(),
        }
    }

    fn lattice_gens(&self, weight: usize) -> Vec<GenLabel> {
        let mut gens = Vec::new();
        let mut q = weight;
        let mut s = 0;
        loop {
            if q >= 1 {
                gens.push(GenLabel::Lattice {
                    q: q as u16,
                    s: s as u16,
                    doubled: false,
                });
            } else {
                gens.push(GenLabel::Lattice {
                    q: 0,
                    s: s as u16,
                    doubled: true,
                });
            }
            if q < 2 {
                break;
            }
            q -= 2;
            s += 1;
        }
        gens
    }

    /// Column of g^a * R_t in the lattice coordinates of the given gens.
    fn relation_column(
        &self,
        a: usize,
        t: usize,
        index: &HashMap<GenLabel, usize>,
        n_gens: usize,
    ) -> Result<Vec<BigInt>> {
        let poly = crate::poly::Poly::var_pow(G, a as u16).mul(&r_in(t, G, W));
        let mut col = vec![BigInt::zero(); n_gens];
        for (m, c) in poly.terms() {
            let (q, s) = (m.exp(G), m.exp(W));
            let (label, value) = if q >= 1 {
                (
                    GenLabel::Lattice {
                        q,
                        s,
                        doubled: false,
                    },
                    c.clone(),
                )
            } else {
                if c.is_odd() {
                    return Err(Error::CheckFailed(format!(
                        "{}: pure-w relation coefficient {c} is odd",
                        self.space
                    )));
                }
                (
                    GenLabel::Lattice {
                        q: 0,
                        s,
                        doubled: true,
                    },
                    c / 2,
                )
            };
            col[index[&label]] += value;
        }
        Ok(col)
    }

    fn u_in_range(&self, i: u16, j: u16) -> bool {
        i >= 1 && self.trunc.map_or(true, |n| j as u32 <= n)
    }
}

impl Realize for Sp2Z {
    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        if k == 0 {
            return Ok((vec![GenLabel::unit()], vec![]));
        }
        let d = self.d;
        if k % 2 == 1 {
            let mut gens = Vec::new();
            let mut j = 1usize;
            while j * d + 1 <= k {
                let i = (k - 1 - j * d) / 2;
                if i >= 1 && 2 * i < j * d && self.u_in_range(i as u16, j as u16) {
                    gens.push(GenLabel::U {
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
        if k % d != 0 {
            return Ok((vec![], vec![]));
        }
        let weight = k / d;
        let gens = self.lattice_gens(weight);
        let index: HashMap<GenLabel, usize> =
            gens.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let mut rels = Vec::new();
        if let Some(n) = self.trunc {
            for t in (n as usize + 1)..=weight {
                rels.push(self.relation_column(weight - t, t, &index, gens.len())?);
            }
        }
        Ok((gens, rels))
    }

    fn mul_gens(&self, a: &GenLabel, b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>> {
        match (a, b) {
            (GenLabel::Mono(m), other) if m.is_one() => Ok(vec![(BigInt::one(), other.clone())]),
            (other, GenLabel::Mono(m)) if m.is_one() => Ok(vec![(BigInt::one(), other.clone())]),
            (GenLabel::U { .. }, _) | (_, GenLabel::U { .. }) => Ok(vec![]),
            (
                GenLabel::Lattice {
                    q: qa,
                    s: sa,
                    doubled: da,
                },
                GenLabel::Lattice {
                    q: qb,
                    s: sb,
                    doubled: db,
                },
            ) => {
                let kfac = BigInt::from(1 << (*da as u32 + *db as u32));
                let (qq, ss) = (qa + qb, sa + sb);
                Ok(if qq >= 1 {
                    vec![(
                        kfac,
                        GenLabel::Lattice {
                            q: qq,
                            s: ss,
                            doubled: false,
                        },
                    )]
                } else {
                    vec![(
                        BigInt::from(2),
                        GenLabel::Lattice {
                            q: 0,
                            s: ss,
                            doubled: true,
                        },
                    )]
                })
            }
            _ => Err(Error::CheckFailed(
                "internal: unexpected generator kind in the symmetric square".to_string(),
            )),
        }
    }

    fn interpret_term(&self, term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)> {
        let deg = term
            .degree(self.d)
            .ok_or_else(|| Error::BadArg("term degree overflow".to_string()))?;
        let mut us: Vec<(u32, u32)> = Vec::new();
        let mut q = 0u32;
        let mut s = 0u32;
        for f in &term.factors {
            match f {
                ParsedFactor::Var(v, e) if *v == G => q += e,
                ParsedFactor::H(e) => s += e,
                ParsedFactor::U(i, j) => us.push((*i, *j)),
                _ => {
                    return Err(Error::NotInRing(format!(
                        "{}: only g, h and u[i,j] name classes here",
                        self.space
                    )))
                }
            }
        }
        if !us.is_empty() {
            if us.len() >= 2 || q > 0 || s > 0 {
                return Ok((deg, vec![]));
            }
            if term.den_log2 > 0 {
                return Err(Error::NotInRing(format!(
                    "{}: order-2 classes have no halves",
                    self.space
                )));
            }
            let (i, j) = us[0];
            if !term.coeff.is_odd() || i == 0 || j == 0 {
                return Ok((deg, vec![]));
            }
            let out = canonical_pairs(i, j, self.d as u32)
                .into_iter()
                .filter(|&(ci, cj)| self.u_in_range(ci, cj))
                .map(|(ci, cj)| (BigInt::one(), GenLabel::U { i: ci, j: cj }))
                .collect();
            return Ok((deg, out));
        }
        let val: BigInt = term.coeff.clone() << s;
        let (label, denom_log2) = if q >= 1 {
            (
                GenLabel::Lattice {
                    q: q as u16,
                    s: s as u16,
                    doubled: false,
                },
                term.den_log2,
            )
        } else if s >= 1 {
            (
                GenLabel::Lattice {
                    q: 0,
                    s: s as u16,
                    doubled: true,
                },
                term.den_log2 + 1,
            )
        } else {
            (GenLabel::unit(), term.den_log2)
        };
        let denom = BigInt::one() << denom_log2;
        let (quot, rem) = val.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::NotInRing(format!(
                "{}: {}*g^{q}*h^{s}/2^{} is not an integral class",
                self.space, term.coeff, term.den_log2
            )));
        }
        Ok((deg, vec![(quot, label)]))
    }

    fn prefers(&self, g: &GenLabel) -> bool {
        let n = match self.trunc {
            None => return true,
            Some(n) => n,
        };
        match g {
            GenLabel::Lattice {
                q,
                s,
                doubled: false,
            } => *q as u32 + *s as u32 <= n,
            GenLabel::Lattice {
                q: _,
                s: p,
                doubled: true,
            } => *p as u32 <= n,
            _ => true,
        }
    }

    fn describe(&self) -> RingInfo {
        let d = self.d;
        let mut relations = vec![
            "2*u[i,j]".to_string(),
            "u[i,j] annihilates every positive-degree class".to_string(),
            "g^q*h^s/2^s and h^p/2^(p-1) are integral classes".to_string(),
        ];
        if let Some(n) = self.trunc {
            for t in [n as usize + 1, n as usize + 2] {
                let mut terms = Vec::new();
                for (m, c) in r_in(t, G, W).terms() {
                    let (q, w) = (m.exp(G), m.exp(W));
                    if q >= 1 {
                        terms.push((c.clone(), lattice_name(q, w, false)));
                    } else {
                        terms.push((c / 2, lattice_name(0, w, true)));
                    }
                }
                relations.push(combo_str(&terms));
            }
            relations.push(format!("u[i,j] for j > {n}"));
        }
        RingInfo {
            generators: vec![
                ("g".to_string(), d),
                ("h".to_string(), 2 * d),
                (format!("u[i,j] (degree 2i+j*{d}+1)"), 0),
            ],
            relations,
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::presentation::Presentation;
    use crate::space::{CoeffRing, Field, SpaceSpec, Trunc};

    fn pres(field: Field, trunc: Trunc) -> Presentation {
        let tok = match trunc {
            Trunc::Inf => "sp2",
            Trunc::N(_) => "sp2n",
        };
        let spec = SpaceSpec::from_cli(tok, field, CoeffRing::Z, trunc).unwrap();
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

    fn nf(p: &Presentation, s: &str) -> String {
        let e = crate::expr::parse_element(s).unwrap();
        crate::names::combo_str(&p.normal_form(&e).unwrap().1)
    }

    #[test]
    fn infinite_case_even_and_odd_pieces() {
        let p = pres(Field::C, Trunc::Inf);
        assert_eq!(basis_names(&p, 8), vec!["g^4", "g^2*h/2", "h^2/2"]);
        assert_eq!(basis_names(&p, 11), vec!["u[2,3]", "u[1,4]"]);
        assert_eq!(p.poincare(11).unwrap(), (0, 2));
    }

    #[test]
    fn truncation_rewrites_high_powers_of_g() {
        let p = pres(Field::C, Trunc::N(3));
        assert_eq!(basis_names(&p, 8), vec!["g^2*h/2", "h^2/2"]);
        assert_eq!(nf(&p, "g^4"), "4*(g^2*h/2) - h^2/2");
        assert_eq!(nf(&p, "g^3*h/2"), "3*(g*h^2/4)");
    }

    #[test]
    fn smallest_truncation_is_the_plane() {
        let p = pres(Field::C, Trunc::N(1));
        assert_eq!(basis_names(&p, 4), vec!["h"]);
        assert_eq!(nf(&p, "g^2"), "h");
        assert_eq!(p.poincare(6).unwrap(), (0, 0));
        assert_eq!(p.poincare(5).unwrap(), (0, 0));
    }

    #[test]
    fn weight_preference_keeps_the_closed_basis() {
        let p = pres(Field::C, Trunc::N(2));
        assert_eq!(basis_names(&p, 8), vec!["h^2/2"]);
        assert_eq!(nf(&p, "g^4"), "3*(h^2/2)");
    }

    #[test]
    fn products_pick_up_lattice_factors() {
        let p = pres(Field::C, Trunc::Inf);
        let g = crate::expr::parse_element("g").unwrap();
        let h = crate::expr::parse_element("h").unwrap();
        let (k, combo) = p.multiply(&g, &h).unwrap();
        assert_eq!(k, 6);
        assert_eq!(crate::names::combo_str(&combo), "2*(g*h/2)");
        let u = crate::expr::parse_element("u[1,2]").unwrap();
        let (_, zero) = p.multiply(&u, &g).unwrap();
        assert_eq!(crate::names::combo_str(&zero), "0");
    }

    #[test]
    fn halves_only_exist_where_the_lattice_says() {
        let p = pres(Field::H, Trunc::Inf);
        assert!(matches!(
            p.normal_form(&crate::expr::parse_element("h/2").unwrap()),
            Err(crate::error::Error::NotInRing(_))
        ));
        assert_eq!(nf(&p, "g*h/2"), "g*h/2");
        assert_eq!(nf(&p, "h^2/2"), "h^2/2");
    }
}
