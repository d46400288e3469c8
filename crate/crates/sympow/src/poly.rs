//! Exact multivariate polynomials over a fixed global variable set.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Index into the global variable table.
pub type Var = usize;

pub const A: Var = 0;
pub const C: Var = 1;
pub const Z: Var = 2;
pub const M: Var = 3;
pub const X: Var = 4;
pub const Y: Var = 5;
pub const T: Var = 6;
pub const S: Var = 7;
pub const G: Var = 8;
pub const W: Var = 9;
pub const L1: Var = 10;
pub const L2: Var = 11;
pub const E1: Var = 12;
pub const E2: Var = 13;

pub const NVARS: usize = 14;

pub const VAR_NAMES: [&str; NVARS] = [
    "a", "c", "z", "m", "x", "y", "t", "s", "g", "w", "l1", "l2", "e1", "e2",
];

/// Grading of each variable as a function of d (2 for C, 4 for H).
/// a and c are independent of d; everything else scales with it.
pub fn var_degree(v: Var, d: u32) -> u32 {
    match v {
        A => 1,
        C => 2,
        Z | M | X | T | G | L1 | E1 => d,
        Y | S | W | L2 | E2 => 2 * d,
        _ => unreachable!("unknown variable index {v}"),
    }
}

/// A monomial: exponent vector over the global variable set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.0[v] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for v in 0..NVARS {
            m.0[v] += o.0[v];
        }
        m
    }

    pub fn divisible_by(&self, o: &Mono) -> bool {
        (0..NVARS).all(|v| self.0[v] >= o.0[v])
    }

    pub fn degree(&self, d: u32) -> u32 {
        (0..NVARS)
            .map(|v| self.0[v] as u32 * var_degree(v, d))
            .sum()
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in 0..NVARS {
            if self.0[v] > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if self.0[v] == 1 {
                    write!(f, "{}", VAR_NAMES[v])?;
                } else {
                    write!(f, "{}^{}", VAR_NAMES[v], self.0[v])?;
                }
            }
        }
        Ok(())
    }
}

/// Priority used when listing classes for display. Derived so that the
/// generated tables list monomials in the same order as the reference
/// tables (a-heavy first, then y before m, etc.).
pub const DISPLAY_PRIORITY: [Var; NVARS] = [A, C, G, Z, Y, W, M, X, T, S, L1, L2, E1, E2];

/// Display order: larger exponent on an earlier priority variable comes
/// first. Monomials of equal degree only.
pub fn cmp_display(a: &Mono, b: &Mono) -> std::cmp::Ordering {
    for &v in DISPLAY_PRIORITY.iter() {
        match b.0[v].cmp(&a.0[v]) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// Graded lexicographic order with the global variable order
/// a < c < z < m < x < y < t < s < g < w < l1 < l2 < e1 < e2.
pub fn cmp_graded_lex(a: &Mono, b: &Mono, d: u32) -> std::cmp::Ordering {
    match a.degree(d).cmp(&b.degree(d)) {
        std::cmp::Ordering::Equal => {}
        other => return other,
    }
    for v in 0..NVARS {
        match a.0[v].cmp(&b.0[v]) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// Coefficient ring abstraction; implemented for BigInt and F2.
pub trait Coeff: Clone + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct F2(pub bool);

impl Coeff for F2 {
    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, o: &Self) -> Self {
        F2(self.0 & o.0)
    }
    fn from_i64(v: i64) -> Self {
        F2(v.rem_euclid(2) == 1)
    }
}

/// A polynomial: finitely many monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: Coeff> {
    terms: BTreeMap<Mono, K>,
}

impl<K: Coeff> Poly<K> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Mono::one(), K::one())
    }

    pub fn constant(k: K) -> Self {
        Self::monomial(Mono::one(), k)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::var(v), K::one())
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        Self::monomial(Mono::var_pow(v, e), K::one())
    }

    pub fn monomial(m: Mono, k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(m, k);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, m: Mono, k: K) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(K::zero);
        *entry = entry.add(&k);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, k) in o.terms.iter() {
            out.add_term(*m, k.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, k) in o.terms.iter() {
            out.add_term(*m, k.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (m, k) in self.terms.iter() {
            out.add_term(*m, k.neg());
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms.iter() {
            out.add_term(*m, c.mul(k));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, k1) in self.terms.iter() {
            for (m2, k2) in o.terms.iter() {
                out.add_term(m1.mul(m2), k1.mul(k2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Replace each variable by the given image; variables mapped to None
    /// stay themselves. Ring homomorphism, so it distributes over terms.
    pub fn substitute(&self, image: &dyn Fn(Var) -> Option<Poly<K>>) -> Self {
        let mut out = Self::zero();
        for (m, k) in self.terms.iter() {
            let mut term = Poly::constant(k.clone());
            for v in 0..NVARS {
                if m.0[v] == 0 {
                    continue;
                }
                let factor = match image(v) {
                    Some(p) => p.pow(m.0[v] as u32),
                    None => Poly::var_pow(v, m.0[v]),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Total degree when homogeneous (zero polynomial counts as any degree).
    pub fn homogeneous_degree(&self, d: u32) -> Option<u32> {
        let mut deg = None;
        for (m, _) in self.terms.iter() {
            let md = m.degree(d);
            match deg {
                None => deg = Some(md),
                Some(x) if x == md => {}
                Some(_) => return None,
            }
        }
        deg.or(Some(0))
    }
}

impl Poly<BigInt> {
    pub fn int(v: i64) -> Self {
        Self::constant(BigInt::from(v))
    }

    pub fn to_f2(&self) -> Poly<F2> {
        let mut out = Poly::zero();
        for (m, k) in self.terms.iter() {
            out.add_term(*m, F2(k.is_odd()));
        }
        out
    }
}

trait IsOdd {
    fn is_odd(&self) -> bool;
}

impl IsOdd for BigInt {
    fn is_odd(&self) -> bool {
        use num_integer::Integer;
        Integer::is_odd(self)
    }
}

impl fmt::Debug for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, k) in self.terms.iter() {
            if first {
                if k.is_negative() {
                    write!(f, "-")?;
                }
            } else if k.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = k.abs();
            if a != BigInt::from(1) || m.is_one() {
                write!(f, "{}", a)?;
                if !m.is_one() {
                    write!(f, "*")?;
                }
            }
            if !m.is_one() {
                write!(f, "{:?}", m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly<F2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.keys().map(|m| format!("{:?}", m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mono_degree_tracks_field() {
        let m = Mono::var(M).mul(&Mono::var_pow(Y, 2));
        assert_eq!(m.degree(2), 2 + 2 * 4);
        assert_eq!(m.degree(4), 4 + 2 * 8);
    }

    #[test]
    fn product_of_binomials() {
        // (m + y)(m - y) = m^2 - y^2
        let p: Poly<BigInt> = Poly::var(M).add(&Poly::var(Y));
        let q: Poly<BigInt> = Poly::var(M).sub(&Poly::var(Y));
        let r = p.mul(&q);
        assert_eq!(r.coeff(&Mono::var_pow(M, 2)), BigInt::from(1));
        assert_eq!(r.coeff(&Mono::var_pow(Y, 2)), BigInt::from(-1));
        assert_eq!(r.num_terms(), 2);
    }

    #[test]
    fn substitution_is_multiplicative() {
        // y -> (c^{d/2} + z) z for d = 2, applied to y^2
        let image = |v: Var| -> Option<Poly<BigInt>> {
            if v == Y {
                Some(Poly::var(C).add(&Poly::var(Z)).mul(&Poly::var(Z)))
            } else {
                None
            }
        };
        let y2 = Poly::<BigInt>::var_pow(Y, 2);
        let sub = y2.substitute(&image);
        let direct = Poly::var(C)
            .add(&Poly::var(Z))
            .mul(&Poly::var(Z))
            .pow(2);
        assert_eq!(sub, direct);
        assert_eq!(sub.homogeneous_degree(2), Some(8));
    }

    #[test]
    fn display_order_is_a_heavy_first() {
        // degree-6 coefficient monomials of the d=2 mod-2 table in
        // their listing order: a^4, y, m^2
        let a4 = Mono::var_pow(A, 4);
        let y = Mono::var(Y);
        let m2 = Mono::var_pow(M, 2);
        let mut v = vec![m2, y, a4];
        v.sort_by(cmp_display);
        assert_eq!(v, vec![a4, y, m2]);
    }

    #[test]
    fn f2_reduction() {
        let p = Poly::int(2).mul(&Poly::var(C)).add(&Poly::var(M));
        let q = p.to_f2();
        assert_eq!(q.coeff(&Mono::var(C)), F2(false));
        assert_eq!(q.coeff(&Mono::var(M)), F2(true));
    }
}
