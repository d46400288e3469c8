//! Space identifiers: which space, over which field, truncated where.

use crate::error::Error;
use std::fmt;

/// Ground projective space family: complex (d = 2) or quaternionic (d = 4).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    C,
    H,
}

impl Field {
    /// Real dimension of the generating cell, the fundamental degree d.
    pub fn d(self) -> usize {
        match self {
            Field::C => 2,
            Field::H => 4,
        }
    }

    pub fn parse(s: &str) -> Result<Field, Error> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(Field::C),
            "H" => Ok(Field::H),
            _ => Err(Error::BadArg(format!("unknown field {s:?}, expected C or H"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::C => write!(f, "C"),
            Field::H => write!(f, "H"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CoeffRing {
    Z,
    F2,
}

impl CoeffRing {
    pub fn parse(s: &str) -> Result<CoeffRing, Error> {
        match s.to_ascii_uppercase().as_str() {
            "Z" => Ok(CoeffRing::Z),
            "F2" | "Z/2" | "Z2" => Ok(CoeffRing::F2),
            _ => Err(Error::BadArg(format!(
                "unknown coefficient ring {s:?}, expected Z or F2"
            ))),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Z => write!(f, "Z"),
            CoeffRing::F2 => write!(f, "F2"),
        }
    }
}

/// Truncation parameter: the infinite space or the n-th finite stage.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Trunc {
    Inf,
    N(u32),
}

impl Trunc {
    pub fn n(self) -> Option<u32> {
        match self {
            Trunc::Inf => None,
            Trunc::N(n) => Some(n),
        }
    }

    pub fn parse(s: &str) -> Result<Trunc, Error> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Trunc::Inf);
        }
        let n: u32 = s
            .parse()
            .map_err(|_| Error::BadArg(format!("bad truncation {s:?}, expected a number or inf")))?;
        if n == 0 {
            return Err(Error::BadArg("truncation must be >= 1".to_string()));
        }
        Ok(Trunc::N(n))
    }
}

impl fmt::Display for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trunc::Inf => write!(f, "inf"),
            Trunc::N(n) => write!(f, "{n}"),
        }
    }
}

/// The catalogued spaces. Truncation is carried separately in `SpaceSpec`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SpaceId {
    /// Projective space KP^n or KP^infty.
    Kp,
    /// Infinite real projective space RP^infty.
    Rp,
    /// Projectivization of the restricted bundle, R(K)P: total space over KP
    /// with RP^{d-1} fibers; homotopy equivalent to the sphere-bundle stage.
    Rk,
    /// The base of the extended projectivization (Gamma in the ladder);
    /// same ring as the Borel construction.
    Gamma,
    /// Borel construction of the involution on KP x KP.
    Borel,
    /// Thom space of the twist bundle over the Borel base.
    Mp,
    /// Symmetric square SP^2(KP).
    Sp2,
    /// Hyperplane-pair Grassmannian model R[l1,l2]/(sigma_n, sigma_{n+1}).
    Grass,
}

impl SpaceId {
    pub fn display_name(self, trunc: Trunc) -> &'static str {
        match (self, trunc) {
            (SpaceId::Kp, Trunc::Inf) => "KP^inf",
            (SpaceId::Kp, Trunc::N(_)) => "KP^n",
            (SpaceId::Rp, _) => "RP^inf",
            (SpaceId::Rk, Trunc::Inf) => "RK^inf",
            (SpaceId::Rk, Trunc::N(_)) => "RK^n",
            (SpaceId::Gamma, Trunc::Inf) => "Gamma",
            (SpaceId::Gamma, Trunc::N(_)) => "Gamma_n",
            (SpaceId::Borel, Trunc::Inf) => "Borel",
            (SpaceId::Borel, Trunc::N(_)) => "Borel_n",
            (SpaceId::Mp, Trunc::Inf) => "MP",
            (SpaceId::Mp, Trunc::N(_)) => "Th_n",
            (SpaceId::Sp2, Trunc::Inf) => "SP2",
            (SpaceId::Sp2, Trunc::N(_)) => "SP2_n",
            (SpaceId::Grass, _) => "Grass_n",
        }
    }
}

/// A fully specified space: identifier, field, coefficients, truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct SpaceSpec {
    pub id: SpaceId,
    pub field: Field,
    pub coeff: CoeffRing,
    pub trunc: Trunc,
}

impl SpaceSpec {
    pub fn new(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc) -> SpaceSpec {
        SpaceSpec { id, field, coeff, trunc }
    }

    pub fn d(&self) -> usize {
        self.field.d()
    }

    /// Resolve a CLI space token plus truncation flag into a spec.
    /// Tokens with a built-in `n` suffix require `--n`; bare tokens of
    /// truncatable spaces accept either.
    pub fn from_cli(space: &str, field: Field, coeff: CoeffRing, n: Trunc) -> Result<SpaceSpec, Error> {
        let tok = space.to_ascii_lowercase();
        let (id, wants_n) = match tok.as_str() {
            "kp" => (SpaceId::Kp, None),
            "kpn" => (SpaceId::Kp, Some(true)),
            "rp" => (SpaceId::Rp, Some(false)),
            "rk" | "bf" => (SpaceId::Rk, None),
            "rkn" | "bfn" => (SpaceId::Rk, Some(true)),
            "gamma" | "bp" => (SpaceId::Gamma, None),
            "gamman" | "bpn" => (SpaceId::Gamma, Some(true)),
            "borel" | "b" => (SpaceId::Borel, None),
            "boreln" | "bn" => (SpaceId::Borel, Some(true)),
            "mp" => (SpaceId::Mp, Some(false)),
            "thn" | "th" => (SpaceId::Mp, Some(true)),
            "sp2" => (SpaceId::Sp2, None),
            "sp2n" => (SpaceId::Sp2, Some(true)),
            "grass" | "grassn" => (SpaceId::Grass, Some(true)),
            _ => {
                return Err(Error::BadArg(format!(
                    "unknown space {space:?}; known: kp kpn rp rk rkn gamma gamman borel boreln mp thn sp2 sp2n grass"
                )))
            }
        };
        match (wants_n, n) {
            (Some(true), Trunc::Inf) => Err(Error::BadArg(format!(
                "space {space:?} is a truncated family, pass --n <int>"
            ))),
            (Some(false), Trunc::N(_)) => Err(Error::BadArg(format!(
                "space {space:?} does not take a truncation, drop --n"
            ))),
            _ => Ok(SpaceSpec::new(id, field, coeff, n)),
        }
    }

    pub fn display_name(&self) -> String {
        match self.trunc {
            Trunc::Inf => self.id.display_name(self.trunc).to_string(),
            Trunc::N(n) => self
                .id
                .display_name(self.trunc)
                .replace('n', &n.to_string()),
        }
    }
}
