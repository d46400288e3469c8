//! Walk the three recurrence families and their closed forms.

use sympow::fib::{
    family_by_closed_form, family_by_recurrence, lucas_parity, nu, FamilyId,
};
use sympow::CoeffRing;

fn main() {
    println!("delta_k over F2, d=2 (recurrence d_{{k+2}} = a^d d_{{k+1}} + y d_k):");
    for k in 0..=5 {
        let p = family_by_recurrence(FamilyId::Delta { d: 2 }, k);
        println!("  delta_{k} = {}", p.rendered());
    }

    println!("power sums r_k in e1, e2:");
    for k in 0..=6 {
        let p = family_by_closed_form(FamilyId::R, k);
        println!("  r_{k} = {}", p.rendered());
    }

    println!("elementary symmetric sigma_k in l1, l2:");
    for k in 0..=5 {
        let p = family_by_closed_form(FamilyId::Sigma, k);
        println!("  sigma_{k} = {}", p.rendered());
    }

    println!("truncation relations nu_k (integral, d=2):");
    for k in 1..=4 {
        println!("  nu_{k} = {}", nu(k, 2, CoeffRing::Z).rendered());
    }

    let agree = (1..=64).all(|k| {
        family_by_recurrence(FamilyId::R, k) == family_by_closed_form(FamilyId::R, k)
    });
    println!("recurrence == closed form for r_1..r_64: {agree}");

    println!("parity of binomial(10, k) by bit pattern (Lucas):");
    let row: Vec<u8> = (0..=10).map(|k| lucas_parity(10, k) as u8).collect();
    println!("  {row:?}");
}
