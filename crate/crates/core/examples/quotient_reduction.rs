//! Canonical forms in S/J, J = <p_t - b_t>, with a deformation that
//! involves x as well as q.

use std::collections::BTreeMap;

use symquot::bases::{basis_element, BasisFamily};
use symquot::mixedbasis::{FirstFamily, Generator};
use symquot::quotient::{deformed_mixed_expand, reduce, QuotientSpec};
use symquot::{Scalar, SymPoly};

fn main() -> symquot::Result<()> {
    let k = 3;
    let b4 = &SymPoly::constant(k, Scalar::q()) + &SymPoly::monomial(k, &"1".parse()?);
    let spec = QuotientSpec::new(k, 4, Generator::PowerSum, BTreeMap::from([(4, b4)]))?;

    let f = SymPoly::monomial(k, &"2,2,1".parse()?);
    println!("deformed expansion of m[2,2,1]:");
    for ((lambda, mu), c) in deformed_mixed_expand(&f, &spec, FirstFamily::Monomial)? {
        println!("  {:>10}  m[{lambda}] * prod (p - b)[{mu}]", c.to_string());
    }

    for basis in FirstFamily::ALL {
        println!("m[2,2,1] = {} in S/J", reduce(&f, &spec, basis)?);
    }

    let h = basis_element(BasisFamily::Complete, &"3,3".parse()?, k);
    let r = reduce(&h, &spec, FirstFamily::Schur)?;
    println!("h[3,3] = {r}");
    println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("json"));
    Ok(())
}
