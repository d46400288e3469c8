//! Mod-2 Thom module rings and their symmetric-square quotients.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{ParsedFactor, ParsedTerm};
use crate::fib::{family_by_closed_form, nu, FamilyId};
use crate::names::poly_f2_str;
use crate::poly::{cmp_display, Mono, Poly, A, M, T, VAR_NAMES, X, Y};
use crate::space::CoeffRing;

use super::{lift_f2, scaled_unit_vec, small_exp, GenLabel, Realize, RingInfo};

/// t * G[t] / (t^2 + m*t) over F2, with optional nu-truncation of the
/// coefficient ring and optional removal of the delta classes.
pub struct ThomF2 {
    d: usize,
    trunc: Option<u32>,
    kill_deltas: bool,
    space: String,
}

impl ThomF2 {
    pub fn new(d: usize, trunc: Option<u32>, kill_deltas: bool, space: &str) -> ThomF2 {
        ThomF2 {
            d,
            trunc,
            kill_deltas,
            space: space.to_string(),
        }
    }

    fn am_killed(m: &Mono) -> bool {
        m.exp(A) >= 1 && m.exp(M) >= 1
    }

    /// Monomials in a, m, y of the given degree, with a*m = 0.
    fn coeff_monos(&self, qdeg: usize) -> Vec<Mono> {
        let mut out = Vec::new();
        let da = 1usize;
        let dm = self.d;
        let dy = 2 * self.d;
        let mut ae = 0usize;
        while ae * da <= qdeg {
            let mut me = 0usize;
            while ae * da + me * dm <= qdeg {
                let rem = qdeg - ae * da - me * dm;
                if rem % dy == 0 && !(ae >= 1 && me >= 1) {
                    let ye = rem / dy;
                    out.push(
                        Mono::var_pow(A, ae as u16)
                            .mul(&Mono::var_pow(M, me as u16))
                            .mul(&Mono::var_pow(Y, ye as u16)),
                    );
                }
                me += 1;
            }
            ae += 1;
        }
        out.sort_by(cmp_display);
        out
    }

    fn nu_int(&self, k: usize) -> Poly<BigInt> {
        lift_f2(nu(k, self.d, CoeffRing::F2).as_mod2().unwrap())
    }

    fn delta_int(&self, j: usize) -> Poly<BigInt> {
        lift_f2(
            family_by_closed_form(FamilyId::Delta { d: self.d }, j)
                .as_mod2()
                .unwrap(),
        )
    }
}

impl Realize for ThomF2 {
    // Once truncated, y is rewritten by the nu relations, so basis
    // representatives avoid it.
    fn prefers(&self, g: &GenLabel) -> bool {
        if self.trunc.is_none() {
            return true;
        }
        match g {
            GenLabel::Mono(m) => m.exp(Y) == 0,
            _ => true,
        }
    }

    fn piece(&self, k: usize) -> Result<(Vec<GenLabel>, Vec<Vec<BigInt>>)> {
        if k == 0 {
            return Ok((vec![GenLabel::unit()], vec![vec![BigInt::from(2)]]));
        }
        if k < self.d {
            return Ok((vec![], vec![]));
        }
        let tvar = Mono::var(T);
        let gens_m: Vec<Mono> = self
            .coeff_monos(k - self.d)
            .into_iter()
            .map(|q| q.mul(&tvar))
            .collect();
        let index: HashMap<Mono, usize> =
            gens_m.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let n = gens_m.len();
        let mut cols: Vec<Vec<BigInt>> = (0..n).map(|i| scaled_unit_vec(n, i, 2)).collect();
        if let Some(tn) = self.trunc {
            for t in [tn as usize, tn as usize + 1] {
                let nu_t = self.nu_int(t);
                let dn = nu_t
                    .homogeneous_degree(self.d as u32)
                    .expect("inhomogeneous truncation relation")
                    as usize;
                if dn > k - self.d {
                    continue;
                }
                for u in self.coeff_monos(k - self.d - dn) {
                    let mut col = vec![BigInt::zero(); n];
                    for (m, _) in nu_t.terms() {
                        let prod = u.mul(m);
                        if Self::am_killed(&prod) {
                            continue;
                        }
                        col[index[&prod.mul(&tvar)]] += BigInt::one();
                    }
                    if col.iter().any(|v| !v.is_zero()) {
                        cols.push(col);
                    }
                }
            }
        }
        if self.kill_deltas && (k - 1) % self.d == 0 {
            let j = (k - 1) / self.d;
            let keep = j >= 1 && self.trunc.map_or(true, |tn| j <= tn as usize);
            if keep {
                let mut col = vec![BigInt::zero(); n];
                for (m, _) in self.delta_int(j).terms() {
                    col[index[m]] += BigInt::one();
                }
                cols.push(col);
            }
        }
        Ok((gens_m.into_iter().map(GenLabel::Mono).collect(), cols))
    }

    fn mul_gens(&self, a: &GenLabel, b: &GenLabel) -> Result<Vec<(BigInt, GenLabel)>> {
        match (a, b) {
            (GenLabel::Mono(ma), GenLabel::Mono(mb)) => {
                let mut prod = ma.mul(mb);
                let te = prod.exp(T);
                if te >= 2 {
                    prod.0[T] = 1;
                    prod.0[M] += te - 1;
                }
                Ok(if Self::am_killed(&prod) {
                    vec![]
                } else {
                    vec![(BigInt::one(), GenLabel::Mono(prod))]
                })
            }
            _ => Err(Error::CheckFailed(
                "internal: non-monomial generator in a Thom module ring".to_string(),
            )),
        }
    }

    fn interpret_term(&self, term: &ParsedTerm) -> Result<(usize, Vec<(BigInt, GenLabel)>)> {
        if term.den_log2 > 0 {
            return Err(Error::NotInRing(format!(
                "{}: mod-2 classes have no halves",
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
                    let img = match *v {
                        A | M | Y | T => Poly::var_pow(*v, small_exp(*e)?),
                        X => Poly::var_pow(A, self.d as u16)
                            .add(&Poly::var(M))
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
                ParsedFactor::Delta(j) => {
                    let img = if *j == 0 {
                        Poly::zero()
                    } else {
                        self.delta_int(*j as usize)
                    };
                    p = p.mul(&img);
                }
                _ => {
                    return Err(Error::NotInRing(format!(
                        "{}: only a, m, y, t, x and delta[j] name classes here",
                        self.space
                    )))
                }
            }
        }
        let mut out = Vec::new();
        for (m, c) in p.terms() {
            if !c.is_odd() {
                continue;
            }
            let te = m.exp(T);
            if te == 0 {
                if m.is_one() {
                    out.push((BigInt::one(), GenLabel::unit()));
                    continue;
                }
                return Err(Error::NotInRing(format!(
                    "{}: positive-degree classes are multiples of t",
                    self.space
                )));
            }
            let mut folded = *m;
            folded.0[T] = 1;
            folded.0[M] += te - 1;
            if Self::am_killed(&folded) {
                continue;
            }
            out.push((BigInt::one(), GenLabel::Mono(folded)));
        }
        Ok((deg, out))
    }

    fn describe(&self) -> RingInfo {
        let generators = vec![
            ("a".to_string(), 1),
            ("m".to_string(), self.d),
            ("y".to_string(), 2 * self.d),
            ("t".to_string(), self.d),
        ];
        let mut relations = vec![
            "2 = 0".to_string(),
            "a*m".to_string(),
            "t^2 + m*t".to_string(),
            "every class is q*t with q in the coefficient ring".to_string(),
        ];
        if let Some(tn) = self.trunc {
            for t in [tn as usize, tn as usize + 1] {
                relations.push(poly_f2_str(
                    nu(t, self.d, CoeffRing::F2).as_mod2().unwrap(),
                ));
            }
        }
        if self.kill_deltas {
            relations.push(match self.trunc {
                None => "delta[j] for j >= 1".to_string(),
                Some(tn) => format!("delta[j] for 1 <= j <= {tn}"),
            });
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
    use crate::presentation::Presentation;
    use crate::space::{Field, SpaceSpec, Trunc};

    fn basis_names(p: &Presentation, k: usize) -> Vec<String> {
        p.piece(k)
            .unwrap()
            .basis
            .iter()
            .map(|b| b.display_name())
            .collect()
    }

    #[test]
    fn symmetric_square_mod2_complex_degree_eight() {
        let spec = SpaceSpec::from_cli("sp2", Field::C, CoeffRing::F2, Trunc::Inf).unwrap();
        let p = Presentation::new(spec).unwrap();
        assert_eq!(
            basis_names(&p, 8),
            vec!["a^6*t", "a^2*y*t", "m*y*t", "m^3*t"]
        );
        // delta_1 = a*t dies, so degree 3 is empty.
        assert_eq!(p.poincare(3).unwrap(), (0, 0));
        // Thom module without the quotient keeps a*t.
        let mp = SpaceSpec::from_cli("mp", Field::C, CoeffRing::F2, Trunc::Inf).unwrap();
        let mp = Presentation::new(mp).unwrap();
        assert_eq!(basis_names(&mp, 3), vec!["a*t"]);
    }

    #[test]
    fn truncated_square_top_class_merges_onto_m_power() {
        let spec = SpaceSpec::from_cli("sp2n", Field::C, CoeffRing::F2, Trunc::N(2)).unwrap();
        let p = Presentation::new(spec).unwrap();
        assert_eq!(basis_names(&p, 8), vec!["a^6*t=m^3*t"]);
        assert_eq!(p.poincare(9).unwrap(), (0, 0));
    }

    #[test]
    fn thom_square_is_m_times_t() {
        let spec = SpaceSpec::from_cli("mp", Field::C, CoeffRing::F2, Trunc::Inf).unwrap();
        let p = Presentation::new(spec).unwrap();
        let t = crate::expr::parse_element("t").unwrap();
        let (k, combo) = p.multiply(&t, &t).unwrap();
        assert_eq!(k, 4);
        assert_eq!(crate::names::combo_str(&combo), "m*t");
    }
}
