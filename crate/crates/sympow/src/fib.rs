//! Generalized Fibonacci polynomial families: delta, sigma, nu, power sums.

use crate::names::{poly_f2_str, poly_str};
use crate::poly::{Poly, Var, F2, A, C, E1, E2, L1, L2, M, T, Y};
use crate::space::CoeffRing;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact binomial coefficient; zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Kummer/Lucas criterion: binomial(top, bottom) is odd iff the dyadic
/// digits of bottom sit inside those of top.
pub fn lucas_parity(top: u64, bottom: u64) -> bool {
    bottom & top == bottom
}

/// A second-order recurrence q_{k+2} = x1 q_{k+1} + x2 q_k with polynomial
/// multipliers and seeds. Sign conventions are baked into the multipliers.
#[derive(Clone, Debug)]
pub struct RecurrenceSpec {
    pub x1: Poly<BigInt>,
    pub x2: Poly<BigInt>,
    pub seed0: Poly<BigInt>,
    pub seed1: Poly<BigInt>,
}

impl RecurrenceSpec {
    pub fn member(&self, k: usize) -> Poly<BigInt> {
        let mut prev = self.seed0.clone();
        if k == 0 {
            return prev;
        }
        let mut cur = self.seed1.clone();
        for _ in 1..k {
            let next = self.x1.mul(&cur).add(&self.x2.mul(&prev));
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// The catalogued families. Delta carries the fundamental degree d and lives
/// mod 2 in a, y, t; sigma and r are integral in l1, l2 and e1, e2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    Delta { d: usize },
    Sigma,
    R,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyPoly {
    Int(Poly<BigInt>),
    Mod2(Poly<F2>),
}

impl FamilyPoly {
    pub fn as_int(&self) -> Option<&Poly<BigInt>> {
        match self {
            FamilyPoly::Int(p) => Some(p),
            FamilyPoly::Mod2(_) => None,
        }
    }

    pub fn as_mod2(&self) -> Option<&Poly<F2>> {
        match self {
            FamilyPoly::Mod2(p) => Some(p),
            FamilyPoly::Int(_) => None,
        }
    }

    pub fn rendered(&self) -> String {
        match self {
            FamilyPoly::Int(p) => poly_str(p),
            FamilyPoly::Mod2(p) => poly_f2_str(p),
        }
    }
}

fn sigma_spec() -> RecurrenceSpec {
    RecurrenceSpec {
        x1: Poly::var(L1).neg(),
        x2: Poly::var(L2).neg(),
        seed0: Poly::one(),
        seed1: Poly::var(L1).neg(),
    }
}

fn r_spec() -> RecurrenceSpec {
    RecurrenceSpec {
        x1: Poly::var(E1),
        x2: Poly::var(E2).neg(),
        seed0: Poly::int(2),
        seed1: Poly::var(E1),
    }
}

fn delta_rec_f2(k: usize, d: usize) -> Poly<F2> {
    let at: Poly<F2> = Poly::var(A).mul(&Poly::var(T));
    let ad: Poly<F2> = Poly::var_pow(A, d as u16);
    let y: Poly<F2> = Poly::var(Y);
    let mut prev = Poly::zero();
    if k == 0 {
        return prev;
    }
    let mut cur = at;
    for _ in 1..k {
        let next = ad.mul(&cur).add(&y.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

fn delta_closed_f2(k: usize, d: usize) -> Poly<F2> {
    if k == 0 {
        return Poly::zero();
    }
    let mut out = Poly::zero();
    for i in 0..=(k - 1) / 2 {
        if !lucas_parity((k - 1 - i) as u64, i as u64) {
            continue;
        }
        let m = Poly::var_pow(A, ((k - 1 - 2 * i) * d + 1) as u16)
            .mul(&Poly::var_pow(Y, i as u16))
            .mul(&Poly::var(T));
        out = out.add(&m);
    }
    out
}

fn sigma_closed(k: usize) -> Poly<BigInt> {
    if k == 0 {
        return Poly::one();
    }
    let mut out = Poly::zero();
    for i in 0..=k / 2 {
        let sign = if (k - i) % 2 == 1 { -1 } else { 1 };
        let coef = binomial((k - i) as i64, i as i64) * BigInt::from(sign);
        let m = Poly::var_pow(L1, (k - 2 * i) as u16).mul(&Poly::var_pow(L2, i as u16));
        out = out.add(&m.scale(&coef));
    }
    out
}

fn r_closed(k: usize) -> Poly<BigInt> {
    if k == 0 {
        return Poly::int(2);
    }
    let mut out = Poly::zero();
    for i in 0..=k / 2 {
        let sign = if i % 2 == 1 { -1 } else { 1 };
        let coef = (BigInt::from(2) * binomial((k - i) as i64, i as i64)
            - binomial((k - i) as i64 - 1, i as i64))
            * BigInt::from(sign);
        let m = Poly::var_pow(E1, (k - 2 * i) as u16).mul(&Poly::var_pow(E2, i as u16));
        out = out.add(&m.scale(&coef));
    }
    out
}

/// k-th member by iterating the recurrence from the seeds.
pub fn family_by_recurrence(fam: FamilyId, k: usize) -> FamilyPoly {
    match fam {
        FamilyId::Delta { d } => FamilyPoly::Mod2(delta_rec_f2(k, d)),
        FamilyId::Sigma => FamilyPoly::Int(sigma_spec().member(k)),
        FamilyId::R => FamilyPoly::Int(r_spec().member(k)),
    }
}

/// k-th member by the binomial-sum closed form (delta binomials mod 2 by
/// Lucas). k = 0 falls back to the seed.
pub fn family_by_closed_form(fam: FamilyId, k: usize) -> FamilyPoly {
    match fam {
        FamilyId::Delta { d } => FamilyPoly::Mod2(delta_closed_f2(k, d)),
        FamilyId::Sigma => FamilyPoly::Int(sigma_closed(k)),
        FamilyId::R => FamilyPoly::Int(r_closed(k)),
    }
}

/// Convenience: the power-sum polynomial r_k rewritten onto two other
/// variable slots (e1 -> v1, e2 -> v2).
pub fn r_in(k: usize, v1: Var, v2: Var) -> Poly<BigInt> {
    r_closed(k).substitute(&|v| match v {
        v if v == E1 => Some(Poly::var(v1)),
        v if v == E2 => Some(Poly::var(v2)),
        _ => None,
    })
}

fn drop_products_of(p: Poly<BigInt>, v1: Var, v2: Var) -> Poly<BigInt> {
    let mut out = Poly::zero();
    for (m, k) in p.terms() {
        if m.exp(v1) > 0 && m.exp(v2) > 0 {
            continue;
        }
        out.add_term(m.clone(), k.clone());
    }
    out
}

fn drop_products_of_f2(p: Poly<F2>, v1: Var, v2: Var) -> Poly<F2> {
    let mut out = Poly::zero();
    for (m, k) in p.terms() {
        if m.exp(v1) > 0 && m.exp(v2) > 0 {
            continue;
        }
        out.add_term(m.clone(), k.clone());
    }
    out
}

fn reduce_c_coeffs_mod2(p: Poly<BigInt>) -> Poly<BigInt> {
    use num_integer::Integer;
    let mut out = Poly::zero();
    for (m, k) in p.terms() {
        if m.exp(C) > 0 {
            if k.is_odd() {
                out.add_term(m.clone(), BigInt::one());
            }
        } else {
            out.add_term(m.clone(), k.clone());
        }
    }
    out
}

/// nu_k: sigma_k with the first slot set to the total class (c^{d/2}+m
/// integrally, a^d+m mod 2) and the second to y, reduced by the ambient
/// relation (cm = 0 and 2c = 0 integrally, am = 0 mod 2).
pub fn nu(k: usize, d: usize, coeff: CoeffRing) -> FamilyPoly {
    let sigma = sigma_closed(k);
    match coeff {
        CoeffRing::Z => {
            let sub = sigma.substitute(&|v| match v {
                v if v == L1 => Some(Poly::var_pow(C, (d / 2) as u16).add(&Poly::var(M))),
                v if v == L2 => Some(Poly::var(Y)),
                _ => None,
            });
            FamilyPoly::Int(reduce_c_coeffs_mod2(drop_products_of(sub, C, M)))
        }
        CoeffRing::F2 => {
            let sub = sigma.to_f2().substitute(&|v| match v {
                v if v == L1 => Some(Poly::var_pow(A, d as u16).add(&Poly::var(M))),
                v if v == L2 => Some(Poly::var(Y)),
                _ => None,
            });
            FamilyPoly::Mod2(drop_products_of_f2(sub, A, M))
        }
    }
}

/// Cofactors (p, q) with r_{k+t} = p * r_{k+1} + q * r_k for every k.
pub fn r_cofactors(t: usize) -> (Poly<BigInt>, Poly<BigInt>) {
    let e1 = Poly::var(E1);
    let e2 = Poly::var(E2);
    let mut p_prev = Poly::zero();
    let mut q_prev = Poly::one();
    if t == 0 {
        return (p_prev, q_prev);
    }
    let mut p_cur = Poly::one();
    let mut q_cur = Poly::zero();
    for _ in 1..t {
        let p_next = e1.mul(&p_cur).sub(&e2.mul(&p_prev));
        let q_next = e1.mul(&q_cur).sub(&e2.mul(&q_prev));
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    (p_cur, q_cur)
}

/// Verifies the three power-sum rewriting identities symbolically:
/// (i) e2^j r_k = sum_i (-1)^i C(j,i) e1^{j-i} r_{k+j+i};
/// (ii) r_{k+t} = p r_{k+1} + q r_k with the iterated-recurrence cofactors;
/// (iii) r_k = (-1)^{k/2} 2 e2^{k/2} after e1 := 0, for even k.
pub fn powersum_identities(j: usize, k: usize, t: usize) -> Result<(), String> {
    let lhs = Poly::var_pow(E2, j as u16).mul(&r_closed(k));
    let mut rhs = Poly::zero();
    for i in 0..=j {
        let sign = if i % 2 == 1 { -1 } else { 1 };
        let coef = binomial(j as i64, i as i64) * BigInt::from(sign);
        let term = Poly::var_pow(E1, (j - i) as u16)
            .mul(&r_closed(k + j + i))
            .scale(&coef);
        rhs = rhs.add(&term);
    }
    if lhs != rhs {
        return Err(format!("e2^{j} r_{k} rewriting fails"));
    }

    let (p, q) = r_cofactors(t);
    let direct = r_closed(k + t);
    let combo = p.mul(&r_closed(k + 1)).add(&q.mul(&r_closed(k)));
    if direct != combo {
        return Err(format!("cofactor expansion of r_{} fails", k + t));
    }

    if k % 2 == 0 {
        let reduced = r_closed(k).substitute(&|v| if v == E1 { Some(Poly::zero()) } else { None });
        let sign = if (k / 2) % 2 == 1 { -2 } else { 2 };
        let expect = Poly::var_pow(E2, (k / 2) as u16).scale(&BigInt::from(sign));
        let expect = if k == 0 { Poly::int(2) } else { expect };
        if reduced != expect {
            return Err(format!("r_{k} mod (e1) is not (-1)^{{k/2}} 2 e2^{{k/2}}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Mono;

    #[test]
    fn recurrence_members_match_frozen_values() {
        let r2 = family_by_recurrence(FamilyId::R, 2);
        let e1sq = Poly::var_pow(E1, 2);
        let want = e1sq.sub(&Poly::var(E2).scale(&BigInt::from(2)));
        assert_eq!(r2.as_int().unwrap(), &want);

        let s1 = family_by_recurrence(FamilyId::Sigma, 1);
        assert_eq!(s1.as_int().unwrap(), &Poly::var(L1).neg());
        let s2 = family_by_recurrence(FamilyId::Sigma, 2);
        assert_eq!(poly_str(s2.as_int().unwrap()), "l1^2 - l2");

        let d3 = family_by_recurrence(FamilyId::Delta { d: 2 }, 3);
        let mut want = Poly::<F2>::zero();
        want.add_term(Mono::var_pow(A, 5).mul(&Mono::var(T)), F2(true));
        want.add_term(
            Mono::var(A).mul(&Mono::var(Y)).mul(&Mono::var(T)),
            F2(true),
        );
        assert_eq!(d3.as_mod2().unwrap(), &want);

        for d in [2usize, 4] {
            let d2 = family_by_recurrence(FamilyId::Delta { d }, 2);
            let mut want = Poly::<F2>::zero();
            want.add_term(Mono::var_pow(A, (d + 1) as u16).mul(&Mono::var(T)), F2(true));
            assert_eq!(d2.as_mod2().unwrap(), &want);
        }
    }

    #[test]
    fn closed_forms_match_frozen_values() {
        assert_eq!(
            poly_str(family_by_closed_form(FamilyId::R, 4).as_int().unwrap()),
            "e1^4 - 4*e1^2*e2 + 2*e2^2"
        );
        assert_eq!(
            poly_str(family_by_closed_form(FamilyId::R, 5).as_int().unwrap()),
            "e1^5 - 5*e1^3*e2 + 5*e1*e2^2"
        );
        assert_eq!(
            poly_str(family_by_closed_form(FamilyId::R, 6).as_int().unwrap()),
            "e1^6 - 6*e1^4*e2 + 9*e1^2*e2^2 - 2*e2^3"
        );
        assert_eq!(
            poly_str(family_by_closed_form(FamilyId::R, 0).as_int().unwrap()),
            "2"
        );
    }

    #[test]
    fn recurrence_equals_closed_form_small() {
        for k in 0..=16 {
            for fam in [FamilyId::Sigma, FamilyId::R, FamilyId::Delta { d: 2 }, FamilyId::Delta { d: 4 }] {
                assert_eq!(
                    family_by_recurrence(fam, k),
                    family_by_closed_form(fam, k),
                    "family {fam:?} member {k}"
                );
            }
        }
    }

    #[test]
    fn nu_values() {
        for d in [2usize, 4] {
            let n1 = nu(1, d, CoeffRing::F2);
            let mut want = Poly::<F2>::zero();
            want.add_term(Mono::var_pow(A, d as u16), F2(true));
            want.add_term(Mono::var(M), F2(true));
            assert_eq!(n1.as_mod2().unwrap(), &want);

            let n2 = nu(2, d, CoeffRing::F2);
            let mut want = Poly::<F2>::zero();
            want.add_term(Mono::var_pow(A, 2 * d as u16), F2(true));
            want.add_term(Mono::var_pow(M, 2), F2(true));
            want.add_term(Mono::var(Y), F2(true));
            assert_eq!(n2.as_mod2().unwrap(), &want);

            let n3 = nu(3, d, CoeffRing::F2);
            let mut want = Poly::<F2>::zero();
            want.add_term(Mono::var_pow(A, 3 * d as u16), F2(true));
            want.add_term(Mono::var_pow(M, 3), F2(true));
            assert_eq!(n3.as_mod2().unwrap(), &want);
        }

        let n2 = nu(2, 2, CoeffRing::Z);
        let mut want = Poly::<BigInt>::zero();
        want.add_term(Mono::var_pow(C, 2), BigInt::from(1));
        want.add_term(Mono::var_pow(M, 2), BigInt::from(1));
        want.add_term(Mono::var(Y), BigInt::from(-1));
        assert_eq!(n2.as_int().unwrap(), &want);
    }

    #[test]
    fn powersum_identity_small() {
        assert!(powersum_identities(1, 1, 2).is_ok());
        assert!(powersum_identities(0, 3, 0).is_ok());
        assert!(powersum_identities(3, 4, 5).is_ok());
    }

    #[test]
    fn lucas_matches_binomial() {
        use num_integer::Integer;
        for n in 0..40u64 {
            for k in 0..=n {
                assert_eq!(
                    lucas_parity(n, k),
                    binomial(n as i64, k as i64).is_odd(),
                    "binomial({n},{k})"
                );
            }
        }
    }

    #[test]
    fn delta_reduces_to_leading_term_mod_y() {
        for d in [2usize, 4] {
            for k in 1..=10 {
                let dk = delta_rec_f2(k, d)
                    .substitute(&|v| if v == Y { Some(Poly::zero()) } else { None });
                let mut want = Poly::<F2>::zero();
                want.add_term(
                    Mono::var_pow(A, ((k - 1) * d + 1) as u16).mul(&Mono::var(T)),
                    F2(true),
                );
                assert_eq!(dk, want);
            }
        }
    }
}
