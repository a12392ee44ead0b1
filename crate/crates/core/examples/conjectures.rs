//! Rank evidence for the {h_λ p_μ} and {h_{λ'} p_μ} families.

use symquot::conjecture::{check_conjecture, ConjectureVariant};

fn main() -> symquot::Result<()> {
    for variant in [ConjectureVariant::Complete, ConjectureVariant::ConjugateComplete] {
        for (k, n) in [(2, 3), (2, 4), (3, 4)] {
            let report = check_conjecture(variant, k, n, 10)?;
            print!("{}", report.table());
            match report.first_failure() {
                None => println!("no singular degree\n"),
                Some(v) => println!("singular at degree {}\n", v.degree),
            }
        }
    }
    Ok(())
}
