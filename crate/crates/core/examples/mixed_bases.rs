//! One polynomial written over all six mixed bases, and a basis check per degree.

use symquot::bases::{basis_element, BasisFamily};
use symquot::mixedbasis::{mixed_expand, verify_mixed_basis, MixedVariant};

fn main() -> symquot::Result<()> {
    let (k, n) = (3, 5);
    let f = basis_element(BasisFamily::Schur, &"4,3,1".parse()?, k);
    println!("f = s[4,3,1] in {k} variables, n = {n}");

    for variant in MixedVariant::all(k, n)? {
        let x = mixed_expand(&f, variant)?;
        assert_eq!(x.evaluate(), f);
        println!("\n{variant}: {} terms", x.len());
        for ((lambda, mu), c) in x.terms() {
            println!("  {:>6}  {}[{lambda}] {}[{mu}]", c.to_string(), variant.first, variant.second);
        }
    }

    println!();
    for variant in MixedVariant::all(k, n)? {
        let ranks: Vec<String> = (0..=8)
            .map(|i| verify_mixed_basis(variant, i).map(|v| format!("{}/{}", v.rank, v.dimension)))
            .collect::<symquot::Result<_>>()?;
        println!("{variant}: {}", ranks.join(" "));
    }
    Ok(())
}
