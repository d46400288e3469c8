//! Print the headline basis tables for the symmetric squares.

use sympow::error::Result;
use sympow::presentation::Presentation;
use sympow::report::{render_text, table_report};
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn show(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc, max: usize) -> Result<()> {
    let spec = SpaceSpec::new(id, field, coeff, trunc);
    println!("== {} ==", spec.display_name());
    let p = Presentation::new(spec)?;
    print!("{}", render_text(&table_report(&p, 0, max)?));
    println!();
    Ok(())
}

fn main() -> Result<()> {
    for field in [Field::C, Field::H] {
        let d = field.d();
        show(SpaceId::Sp2, field, CoeffRing::F2, Trunc::Inf, 9 * d / 2)?;
        show(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf, 11 * d / 2)?;
        show(SpaceId::Sp2, field, CoeffRing::F2, Trunc::N(2), 4 * d)?;
        show(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(3), 6 * d)?;
    }
    Ok(())
}
