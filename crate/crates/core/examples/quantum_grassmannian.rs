//! Multiplication tables of H*(Gr(2,4)) and QH*(Gr(2,4)) in the Schur basis.

use symquot::partition::{enumerate, PartitionSet};
use symquot::quotient::{classical_spec, quantum_spec, schur_product, QuotientSpec};
use symquot::Partition;

fn table(name: &str, spec: &QuotientSpec) -> symquot::Result<()> {
    let (k, n) = (spec.k(), spec.n());
    let shapes: Vec<Partition> = (0..=k * (n - k))
        .flat_map(|i| enumerate(i, PartitionSet::Box { k, n }).unwrap())
        .collect();
    println!("{name}");
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i..] {
            println!("  s[{a}] * s[{b}] = {}", schur_product(a, b, spec)?);
        }
    }
    Ok(())
}

fn main() -> symquot::Result<()> {
    table("H*(Gr(2,4))", &classical_spec(2, 4)?)?;
    table("QH*(Gr(2,4))", &quantum_spec(2, 4)?)?;
    Ok(())
}
