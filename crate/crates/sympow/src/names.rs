//! Canonical rendering of monomials, classes and integer combinations.

use crate::poly::{cmp_display, Mono, Poly, F2, NVARS, VAR_NAMES};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `m^2*y`, `a^5`, `1`.
pub fn mono_str(m: &Mono) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for v in 0..NVARS {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(VAR_NAMES[v].to_string());
        } else {
            parts.push(format!("{}^{}", VAR_NAMES[v], e));
        }
    }
    parts.join("*")
}

/// Name of the Thom module class with the given coefficient monomial:
/// `t`, `m*t`, `a^5*t`.
pub fn thom_class_name(coeff: &Mono) -> String {
    if coeff.is_one() {
        "t".to_string()
    } else {
        format!("{}*t", mono_str(coeff))
    }
}

/// Name of an even lattice generator of the symmetric square.
/// `doubled` selects the 2w^p family; otherwise g^q w^s with q >= 1.
pub fn lattice_name(q: u16, ws: u16, doubled: bool) -> String {
    if doubled {
        // 2 w^p renders as h (p = 1) or h^p / 2^{p-1}
        let p = ws;
        assert!(p >= 1 && q == 0);
        if p == 1 {
            "h".to_string()
        } else {
            format!("h^{}/{}", p, 1u64 << (p - 1))
        }
    } else if q == 0 && ws == 0 {
        "1".to_string()
    } else {
        assert!(q >= 1, "lattice monomial with no g factor must be doubled");
        let gpart = if q == 1 {
            "g".to_string()
        } else {
            format!("g^{}", q)
        };
        if ws == 0 {
            gpart
        } else if ws == 1 {
            format!("{}*h/2", gpart)
        } else {
            format!("{}*h^{}/{}", gpart, ws, 1u64 << ws)
        }
    }
}

pub fn u_name(i: u16, j: u16) -> String {
    format!("u[{},{}]", i, j)
}

/// `delta[3]`, `c^2*delta[4]`.
pub fn delta_name(c_exp: u16, j: u16) -> String {
    if c_exp == 0 {
        format!("delta[{}]", j)
    } else if c_exp == 1 {
        format!("c*delta[{}]", j)
    } else {
        format!("c^{}*delta[{}]", c_exp, j)
    }
}

/// Polynomial rendered with signs and display ordering: `e1^2 - 2*e2`.
pub fn poly_str(p: &Poly<BigInt>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Mono, &BigInt)> = p.terms().collect();
    terms.sort_by(|x, y| cmp_display(x.0, y.0));
    let mut out = String::new();
    for (idx, (m, k)) in terms.iter().enumerate() {
        let mag = k.abs();
        if idx == 0 {
            if k.is_negative() {
                out.push('-');
            }
        } else if k.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag.is_one() && !m.is_one() {
            out.push_str(&mono_str(m));
        } else if m.is_one() {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{}*{}", mag, mono_str(m)));
        }
    }
    out
}

pub fn poly_f2_str(p: &Poly<F2>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut monos: Vec<&Mono> = p.terms().map(|(m, _)| m).collect();
    monos.sort_by(|x, y| cmp_display(x, y));
    monos
        .iter()
        .map(|m| mono_str(m))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Integer combination of named classes: `4*(g^2*h/2) - h^2/2`, `m*t`, `0`.
pub fn combo_str(terms: &[(BigInt, String)]) -> String {
    let live: Vec<&(BigInt, String)> = terms.iter().filter(|(k, _)| !Zero::is_zero(k)).collect();
    if live.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, name)) in live.iter().enumerate() {
        let mag = k.abs();
        if idx == 0 {
            if k.is_negative() {
                out.push('-');
            }
        } else if k.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag.is_one() {
            out.push_str(name);
        } else if name.contains('/') {
            out.push_str(&format!("{}*({})", mag, name));
        } else {
            out.push_str(&format!("{}*{}", mag, name));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{E1, E2, M, Y};

    #[test]
    fn lattice_names_match_tables() {
        assert_eq!(lattice_name(0, 0, false), "1");
        assert_eq!(lattice_name(1, 0, false), "g");
        assert_eq!(lattice_name(0, 1, true), "h");
        assert_eq!(lattice_name(1, 1, false), "g*h/2");
        assert_eq!(lattice_name(0, 2, true), "h^2/2");
        assert_eq!(lattice_name(3, 1, false), "g^3*h/2");
        assert_eq!(lattice_name(1, 2, false), "g*h^2/4");
        assert_eq!(lattice_name(0, 3, true), "h^3/4");
        assert_eq!(lattice_name(4, 1, false), "g^4*h/2");
        assert_eq!(lattice_name(2, 2, false), "g^2*h^2/4");
    }

    #[test]
    fn poly_rendering() {
        // r_2 = e1^2 - 2 e2
        let r2 = Poly::var_pow(E1, 2).sub(&Poly::int(2).mul(&Poly::var(E2)));
        assert_eq!(poly_str(&r2), "e1^2 - 2*e2");
        let two = Poly::int(2);
        assert_eq!(poly_str(&two), "2");
        let my = Poly::<BigInt>::var(M).mul(&Poly::var(Y));
        assert_eq!(poly_str(&my), "m*y");
    }

    #[test]
    fn combo_rendering() {
        let terms = vec![
            (BigInt::from(4), "g^2*h/2".to_string()),
            (BigInt::from(-1), "h^2/2".to_string()),
        ];
        assert_eq!(combo_str(&terms), "4*(g^2*h/2) - h^2/2");
        assert_eq!(combo_str(&[]), "0");
        let single = vec![(BigInt::from(1), "m*t".to_string())];
        assert_eq!(combo_str(&single), "m*t");
        let three = vec![(BigInt::from(3), "g*h^2/4".to_string())];
        assert_eq!(combo_str(&three), "3*(g*h^2/4)");
    }
}
