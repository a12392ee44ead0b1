//! Walks m_{2,2,1} (k = 3, n = 4) through the expansion over {m_λ p_μ} one
//! step at a time.

use symquot::bases::m_to_p_lambda;
use symquot::mixedbasis::{factor_generators, mixed_expand, reduction_table, FirstFamily, Generator, MixedVariant};
use symquot::{Partition, SymPoly};

fn main() -> symquot::Result<()> {
    let (k, n) = (3, 4);
    let lambda: Partition = "2,2,1".parse()?;

    println!("m_{{{lambda}}} in power sums:");
    for (mu, c) in m_to_p_lambda(&lambda) {
        println!("  {:>5}  p[{mu}]", c.to_string());
    }

    let d = reduction_table(Generator::PowerSum, 5, k, n)?;
    println!("p_5 over p_2, p_3, p_4:");
    for (m, coeff) in d.entries() {
        println!("  p_{m}: {coeff}");
    }

    println!("coefficients of the generators:");
    for (m, c) in factor_generators(Generator::PowerSum, &lambda, k, n)? {
        println!("  p_{m}: {c}");
    }

    let variant = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, k, n)?;
    let x = mixed_expand(&SymPoly::monomial(k, &lambda), variant)?;
    println!("result:");
    for ((l, m), c) in x.terms() {
        println!("  {:>5}  m[{l}] p[{m}]", c.to_string());
    }
    assert_eq!(x.evaluate(), SymPoly::monomial(k, &lambda));
    Ok(())
}
