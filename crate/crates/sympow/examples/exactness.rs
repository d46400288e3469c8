//! Drive the catalogued maps around one exact triangle and one ladder square.

use sympow::error::Result;
use sympow::homs::{self, exact_at};
use sympow::presentation::Presentation;
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn main() -> Result<()> {
    let field = Field::C;
    let d = field.d();

    // Mod 2 cofiber sequence of the quotient map: connecting map, then the
    // map induced by collapsing, short exact in every reduced degree.
    let delta = homs::delta_from_base(field, CoeffRing::F2, Trunc::Inf)?;
    let collapse = homs::b_delta_star(field, Trunc::Inf)?;
    println!("cofiber sequence over F2, degrees 1..={}:", 8 * d);
    for k in 1..=8 * d {
        delta
            .is_monic(k.saturating_sub(1), true)?
            .then_some(())
            .ok_or_else(|| sympow::Error::CheckFailed(format!("monic fails at {k}")))?;
        exact_at(&delta, &collapse, k, true)?;
        collapse
            .is_epic(k, true)?
            .then_some(())
            .ok_or_else(|| sympow::Error::CheckFailed(format!("epic fails at {k}")))?;
    }
    println!("  short exact in every degree");

    // Dimension bookkeeping from the same sequence.
    let sp2 = Presentation::new(SpaceSpec::new(SpaceId::Sp2, field, CoeffRing::F2, Trunc::Inf))?;
    let kp = Presentation::new(SpaceSpec::new(SpaceId::Kp, field, CoeffRing::F2, Trunc::Inf))?;
    let mp = Presentation::new(SpaceSpec::new(SpaceId::Mp, field, CoeffRing::F2, Trunc::Inf))?;
    println!("dimension count dim SP2^k = dim MP^k - dim KP^(k-1):");
    for k in [2 * d, 2 * d + 1, 4 * d] {
        let lhs = sp2.dim_f2(k)?;
        let rhs = mp.dim_f2(k)? - kp.dim_f2(k - 1)?;
        println!("  k={k}: {lhs} = {rhs}");
    }

    // Integral restriction: its kernel and cokernel in each even degree
    // recover the two graded pieces of the Thom space.
    let i = homs::i_star(field, CoeffRing::Z, Trunc::Inf)?;
    let th = Presentation::new(SpaceSpec::new(SpaceId::Mp, field, CoeffRing::Z, Trunc::Inf))?;
    println!("restriction kernel/cokernel vs Thom groups:");
    for k in (2..=6 * d).step_by(2) {
        let (kf, kt) = i.kernel_invariants(k)?;
        let (cf, ct) = i.cokernel_invariants(k)?;
        println!(
            "  k={k}: ker ({kf} free, {} torsion) = H^{k},  cok ({cf} free, {} torsion) = H^{}",
            kt.len(),
            ct.len(),
            k + 1
        );
        assert_eq!((kf, kt.len()), th.poincare(k)?);
        assert_eq!((cf, ct.len()), th.poincare(k + 1)?);
    }
    Ok(())
}
