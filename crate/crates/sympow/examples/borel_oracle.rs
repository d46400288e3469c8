//! Cross-check the truncated Borel presentation against the fixed-point oracle.
//!
//! The oracle never looks at the presentation: it enumerates monomial pairs
//! from the finite projective space, forms the swap-invariant and swap-twisted
//! submodules literally, and reads off free rank and 2-torsion rank per degree.

use sympow::error::Result;
use sympow::oracle::oracle_vs_presentation;

fn main() -> Result<()> {
    for d in [2, 4] {
        for n in 1..=3 {
            let report = oracle_vs_presentation(n, d, 3 * n as usize * d)?;
            println!("n={n} d={d}");
            println!("  degree  oracle(free,t2)  presentation(free,t2)");
            for row in &report.rows {
                if row.oracle == (0, 0) && row.presentation == (0, 0) {
                    continue;
                }
                println!(
                    "  {:<7} {:<16} {:?}",
                    row.degree,
                    format!("{:?}", row.oracle),
                    row.presentation
                );
            }
            match report.first_mismatch {
                None => println!("  all degrees agree"),
                Some(k) => println!("  MISMATCH at degree {k}"),
            }
        }
    }
    Ok(())
}
