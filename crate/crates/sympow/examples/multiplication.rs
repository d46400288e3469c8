//! Normal forms and products in the integral symmetric-square ring.

use sympow::error::Result;
use sympow::expr::parse_element;
use sympow::names::combo_str;
use sympow::presentation::Presentation;
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn main() -> Result<()> {
    let sp2 = Presentation::new(SpaceSpec::new(
        SpaceId::Sp2,
        Field::C,
        CoeffRing::Z,
        Trunc::Inf,
    ))?;
    let (deg, combo) = sp2.multiply(&parse_element("g")?, &parse_element("h")?)?;
    println!("in SP2 (C, Z):      g * h        = {}   (degree {deg})", combo_str(&combo));

    let (deg, combo) = sp2.multiply(&parse_element("g*h/2")?, &parse_element("h^2/2")?)?;
    println!("in SP2 (C, Z):      g*h/2 * h^2/2 = {} (degree {deg})", combo_str(&combo));

    // Truncation rewrites the pure powers of g into the divided classes.
    let sp23 = Presentation::new(SpaceSpec::new(
        SpaceId::Sp2,
        Field::C,
        CoeffRing::Z,
        Trunc::N(3),
    ))?;
    for elt in ["g^4", "g^3*h/2"] {
        let (deg, combo) = sp23.normal_form(&parse_element(elt)?)?;
        println!("in SP2_3 (C, Z):    {elt:<12} = {}   (degree {deg})", combo_str(&combo));
    }

    // The Thom class squares against the base class mod 2.
    let mp = Presentation::new(SpaceSpec::new(
        SpaceId::Mp,
        Field::C,
        CoeffRing::F2,
        Trunc::Inf,
    ))?;
    let (deg, combo) = mp.multiply(&parse_element("t")?, &parse_element("t")?)?;
    println!("in MP (C, F2):      t * t        = {}     (degree {deg})", combo_str(&combo));
    Ok(())
}
