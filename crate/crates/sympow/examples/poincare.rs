//! Graded free and 2-torsion ranks for each space in the catalogue.

use sympow::error::Result;
use sympow::presentation::Presentation;
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn main() -> Result<()> {
    let specs = [
        SpaceSpec::new(SpaceId::Kp, Field::C, CoeffRing::Z, Trunc::Inf),
        SpaceSpec::new(SpaceId::Rk, Field::C, CoeffRing::Z, Trunc::N(2)),
        SpaceSpec::new(SpaceId::Gamma, Field::C, CoeffRing::Z, Trunc::Inf),
        SpaceSpec::new(SpaceId::Borel, Field::C, CoeffRing::Z, Trunc::N(2)),
        SpaceSpec::new(SpaceId::Mp, Field::C, CoeffRing::Z, Trunc::Inf),
        SpaceSpec::new(SpaceId::Sp2, Field::C, CoeffRing::Z, Trunc::Inf),
        SpaceSpec::new(SpaceId::Sp2, Field::H, CoeffRing::Z, Trunc::N(3)),
        SpaceSpec::new(SpaceId::Grass, Field::C, CoeffRing::Z, Trunc::N(3)),
    ];
    for spec in specs {
        let p = Presentation::new(spec)?;
        let max = 6 * spec.d();
        print!("{:<12}", spec.display_name());
        for k in 0..=max {
            let (free, t2) = p.poincare(k)?;
            if free == 0 && t2 == 0 {
                print!(" .");
            } else if t2 == 0 {
                print!(" {free}");
            } else if free == 0 {
                print!(" [{t2}]");
            } else {
                print!(" {free}+[{t2}]");
            }
        }
        println!("   (degrees 0..={max}, [..] = 2-torsion)");
    }
    Ok(())
}
