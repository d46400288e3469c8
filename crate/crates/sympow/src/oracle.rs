//! Brute-force recomputations that cross-check the catalogued presentations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fib::{binomial, r_in};
use crate::homs::{i_star, spans_equal, subquotient_invariants, Span};
use crate::poly::{Mono, Poly, C, E1, E2, Z};
use crate::presentation::{unit_vec, GenLabel, Presentation};
use crate::snf::{abelian_quotient, kernel_basis, smith_normal_form, IntMat};
use crate::space::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

/// One graded piece of Z[z1,z2]/(z1^{n+1}, z2^{n+1}) with the coordinate swap.
pub struct SwapModule {
    pub degree: usize,
    pub basis: Vec<(u16, u16)>,
    pub swap: Vec<usize>,
}

impl SwapModule {
    pub fn new(n: u32, d: usize, q: usize) -> SwapModule {
        let mut basis = Vec::new();
        if q % d == 0 {
            let w = q / d;
            for alpha in 0..=w.min(n as usize) {
                let beta = w - alpha;
                if beta <= n as usize {
                    basis.push((alpha as u16, beta as u16));
                }
            }
        }
        let index: HashMap<(u16, u16), usize> = basis
            .iter()
            .copied()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let swap: Vec<usize> = basis.iter().map(|&(a, b)| index[&(b, a)]).collect();
        for (i, &j) in swap.iter().enumerate() {
            debug_assert_eq!(swap[j], i);
        }
        SwapModule {
            degree: q,
            basis,
            swap,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Columns of 1 + sign * swap on the monomial basis.
    fn endo_cols(&self, sign: i64) -> Vec<Vec<BigInt>> {
        (0..self.dim())
            .map(|i| {
                let mut col = vec![BigInt::zero(); self.dim()];
                if self.swap[i] == i {
                    col[i] = BigInt::from(1 + sign);
                } else {
                    col[i] = BigInt::one();
                    col[self.swap[i]] = BigInt::from(sign);
                }
                col
            })
            .collect()
    }

    fn kernel_of(&self, sign: i64) -> Vec<Vec<BigInt>> {
        let cols = self.endo_cols(sign);
        let mat = IntMat::from_columns(self.dim(), &cols);
        let snf = smith_normal_form(&mat);
        kernel_basis(&mat, &snf)
    }
}

/// (free rank, torsion-2 rank) of the degree-k cohomology assembled from the
/// periodic involution complex over the truncated two-variable module.
pub fn borel_oracle(n: u32, d: usize, k: usize) -> (usize, usize) {
    let mut free = 0;
    let mut torsion = 0;
    for p in 0..=k {
        let m = SwapModule::new(n, d, k - p);
        if m.dim() == 0 {
            continue;
        }
        if p == 0 {
            free += m.kernel_of(-1).len();
            continue;
        }
        let (ker_sign, im_sign) = if p % 2 == 1 { (1, -1) } else { (-1, 1) };
        let kernel = m.kernel_of(ker_sign);
        let image = m.endo_cols(im_sign);
        let (f, invs) = subquotient_invariants(m.dim(), &kernel, &image);
        assert_eq!(f, 0, "positive-row cohomology must be torsion");
        assert!(
            invs.iter().all(|v| v == &BigInt::from(2)),
            "positive-row torsion must have order 2"
        );
        torsion += invs.len();
    }
    (free, torsion)
}

/// One degree of an oracle-versus-presentation comparison.
pub struct OracleRow {
    pub degree: usize,
    pub oracle: (usize, usize),
    pub presentation: (usize, usize),
}

/// Degree-indexed comparison rows plus the first disagreeing degree, if any.
pub struct OracleReport {
    pub rows: Vec<OracleRow>,
    pub first_mismatch: Option<usize>,
}

fn field_of_d(d: usize) -> Result<Field> {
    match d {
        2 => Ok(Field::C),
        4 => Ok(Field::H),
        _ => Err(Error::BadArg(format!("no catalogued field has d = {d}"))),
    }
}

/// Degree-by-degree comparison of the oracle against the catalogued
/// truncated integral presentation.
pub fn oracle_vs_presentation(n: u32, d: usize, max_degree: usize) -> Result<OracleReport> {
    let field = field_of_d(d)?;
    let pres = Presentation::new(SpaceSpec::new(
        SpaceId::Borel,
        field,
        CoeffRing::Z,
        Trunc::N(n),
    ))?;
    let mut rows = Vec::new();
    let mut first_mismatch = None;
    for k in 0..=max_degree {
        let oracle = borel_oracle(n, d, k);
        let presentation = pres.poincare(k)?;
        if oracle != presentation && first_mismatch.is_none() {
            first_mismatch = Some(k);
        }
        rows.push(OracleRow {
            degree: k,
            oracle,
            presentation,
        });
    }
    Ok(OracleReport {
        rows,
        first_mismatch,
    })
}

/// Checks that the kernel of e1 -> z1 + z2, e2 -> z1 z2 into the truncated
/// two-variable module is the ideal generated by e2^{n+1}, r_{n+1}, r_{n+2}.
pub fn mu_kernel_oracle(n: u32, d: usize, max_degree: usize) -> Result<()> {
    for k in (0..=max_degree).step_by(d) {
        let w = k / d;
        let source: Vec<(u16, u16)> = (0..=w / 2)
            .map(|b| ((w - 2 * b) as u16, b as u16))
            .collect();
        let target = SwapModule::new(n, d, k);
        let tindex: HashMap<(u16, u16), usize> = target
            .basis
            .iter()
            .copied()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let cols: Vec<Vec<BigInt>> = source
            .iter()
            .map(|&(a, b)| {
                let mut col = vec![BigInt::zero(); target.dim()];
                for i in 0..=a {
                    if let Some(&t) = tindex.get(&(i + b, a - i + b)) {
                        col[t] += binomial(a as i64, i as i64);
                    }
                }
                col
            })
            .collect();
        let mat = IntMat::from_columns(target.dim(), &cols);
        let snf = smith_normal_form(&mat);
        let kernel = kernel_basis(&mat, &snf);

        let gens: Vec<Poly<BigInt>> = vec![
            Poly::var_pow(E2, n as u16 + 1),
            r_in(n as usize + 1, E1, E2),
            r_in(n as usize + 2, E1, E2),
        ];
        let sindex: HashMap<(u16, u16), usize> = source
            .iter()
            .copied()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut ideal_cols = Vec::new();
        for g in &gens {
            let gdeg = g.homogeneous_degree(d as u32).unwrap() as usize;
            if gdeg > k {
                continue;
            }
            let mw = (k - gdeg) / d;
            for b in 0..=mw / 2 {
                let mono =
                    Mono::var_pow(E1, (mw - 2 * b) as u16).mul(&Mono::var_pow(E2, b as u16));
                let prod = g.mul(&Poly::monomial(mono, BigInt::one()));
                let mut col = vec![BigInt::zero(); source.len()];
                for (m, c) in prod.terms() {
                    col[sindex[&(m.exp(E1), m.exp(E2))]] += c;
                }
                ideal_cols.push(col);
            }
        }
        if !spans_equal(source.len(), &ideal_cols, &kernel) {
            return Err(Error::CheckFailed(format!(
                "mu kernel differs from the stated ideal in degree {k} (n = {n})"
            )));
        }
    }
    Ok(())
}

/// Checks that the classes c^i z^j with 0 <= 2i < jd form a basis of the
/// cokernel of the restriction onto the cover, degree by degree up to the
/// degree of z^max_j.
pub fn cokernel_basis_oracle(field: Field, max_j: usize) -> Result<()> {
    let h = i_star(field, CoeffRing::Z, Trunc::Inf)?;
    let d = field.d();
    let cz_label = |i: usize, j: usize| {
        GenLabel::Mono(Mono::var_pow(C, i as u16).mul(&Mono::var_pow(Z, j as u16)))
    };
    for k in (2..=max_j * d).step_by(2) {
        let (_, tgt, mut rels) = h.matrix(k)?;
        rels.extend(tgt.relations.iter().cloned());
        let nt = tgt.gens.len();
        let (f, invs) = abelian_quotient(nt, &rels);
        let mut candidates = Vec::new();
        for j in 1..=k / d {
            let rem = k - j * d;
            if rem % 2 != 0 {
                continue;
            }
            let i = rem / 2;
            if 2 * i < j * d {
                let idx = tgt.gen_index(&cz_label(i, j)).ok_or_else(|| {
                    Error::CheckFailed(format!("missing cover monomial in degree {k}"))
                })?;
                candidates.push(idx);
            }
        }
        if f != 0 || invs.len() != candidates.len() || !invs.iter().all(|v| v == &BigInt::from(2))
        {
            return Err(Error::CheckFailed(format!(
                "cokernel in degree {k} is not elementary of rank {}",
                candidates.len()
            )));
        }
        let mut spanning = rels.clone();
        for &idx in &candidates {
            spanning.push(unit_vec(nt, idx));
        }
        let span = Span::new(nt, &spanning);
        if !(0..nt).all(|i| span.contains(&unit_vec(nt, i))) {
            return Err(Error::CheckFailed(format!(
                "stated classes do not span the cokernel in degree {k}"
            )));
        }
    }

    // the j = 3 instance of the rewriting rule, checked in degree 6d
    if max_j >= 6 {
        let k = 6 * d;
        let (_, tgt, mut rels) = h.matrix(k)?;
        rels.extend(tgt.relations.iter().cloned());
        let nt = tgt.gens.len();
        let pos = |i: usize, j: usize| -> Result<usize> {
            tgt.gen_index(&cz_label(i, j))
                .ok_or_else(|| Error::CheckFailed("missing cover monomial".into()))
        };
        let mut v = vec![BigInt::zero(); nt];
        v[pos(3 * d / 2, 3)?] = BigInt::one();
        v[pos(d, 4)?] = -BigInt::one();
        v[pos(d / 2, 5)?] = -BigInt::one();
        v[pos(0, 6)?] = -BigInt::one();
        if !Span::new(nt, &rels).contains(&v) {
            return Err(Error::CheckFailed(
                "the degree-6d rewriting fails in the cokernel".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_involution_cohomology_by_hand() {
        assert_eq!(borel_oracle(1, 2, 0), (1, 0));
        assert_eq!(borel_oracle(3, 4, 0), (1, 0));
        assert_eq!(borel_oracle(1, 2, 2), (1, 1));
        assert_eq!(borel_oracle(1, 2, 8), (0, 2));
        assert!(borel_oracle(2, 2, 8).0 >= 1);
    }

    #[test]
    fn oracle_agrees_with_the_presentation() {
        for n in [1, 2] {
            let r = oracle_vs_presentation(n, 2, 12).unwrap();
            assert_eq!(r.first_mismatch, None);
        }
        let r = oracle_vs_presentation(1, 4, 16).unwrap();
        assert_eq!(r.first_mismatch, None);
    }

    #[test]
    fn mu_kernel_matches_in_low_degrees() {
        mu_kernel_oracle(1, 2, 10).unwrap();
        mu_kernel_oracle(2, 2, 12).unwrap();
    }

    #[test]
    fn cover_cokernel_has_the_stated_basis() {
        cokernel_basis_oracle(Field::C, 7).unwrap();
        cokernel_basis_oracle(Field::H, 7).unwrap();
    }
}
