//! The quotients S/J and S/I, J = ⟨p_t - b_t⟩ and I = ⟨h_t - b_t⟩ for
//! t = n-k+1..=n, with canonical forms over {X_λ : λ ∈ P_{k,n-k}}.
//!
//! With all b_t = 0 and the h generators this is the cohomology ring of the
//! Grassmannian Gr(k, n); with b_n = (-1)^{k+1} q it is the quantum one.

mod lr;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use lr::lr_oracle;

use crate::bases::{element, BasisFamily};
use crate::error::{Error, Result};
use crate::mixedbasis::{convert_first_index, mixed_expand, FirstFamily, Generator, MixedVariant};
use crate::partition::{check_kn, Partition};
use crate::polyring::{Scalar, SymPoly};

/// Parameters of one quotient ring: which generators, and their deformations b_t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpec {
    k: usize,
    n: usize,
    family: Generator,
    /// b_t for t = n-k+1..=n, in order.
    deformations: Vec<SymPoly>,
}

impl QuotientSpec {
    /// Indices absent from `deformations` get b_t = 0.
    pub fn new(
        k: usize,
        n: usize,
        family: Generator,
        deformations: BTreeMap<usize, SymPoly>,
    ) -> Result<QuotientSpec> {
        check_kn(k, n)?;
        let low = n - k + 1;
        let mut bs = vec![SymPoly::zero(k); k];
        for (t, b) in deformations {
            if t < low || t > n {
                return Err(Error::InvalidDeformation {
                    index: t,
                    reason: format!("index outside {low}..={n}"),
                });
            }
            if b.k() != k {
                return Err(Error::InvalidDeformation {
                    index: t,
                    reason: format!("lives in {} variables, expected {k}", b.k()),
                });
            }
            if let Some(d) = b.degree() {
                if d >= t {
                    return Err(Error::InvalidDeformation {
                        index: t,
                        reason: format!("degree {d} is not below {t}"),
                    });
                }
            }
            bs[t - low] = b;
        }
        Ok(QuotientSpec { k, n, family, deformations: bs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Generator {
        self.family
    }

    pub fn low(&self) -> usize {
        self.n - self.k + 1
    }

    /// b_t; zero outside the generator range.
    pub fn deformation(&self, t: usize) -> SymPoly {
        if t < self.low() || t > self.n {
            return SymPoly::zero(self.k);
        }
        self.deformations[t - self.low()].clone()
    }

    pub fn is_undeformed(&self) -> bool {
        self.deformations.iter().all(SymPoly::is_zero)
    }

    /// The ideal generator g_t - b_t.
    pub fn generator(&self, t: usize) -> SymPoly {
        let g = element(self.family.family(), &Partition::from_exponents(&[t]), self.k);
        &*g - &self.deformation(t)
    }

    pub fn variant(&self, first: FirstFamily) -> MixedVariant {
        MixedVariant { first, second: self.family, k: self.k, n: self.n }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let defs: BTreeMap<String, serde_json::Value> = (self.low()..=self.n)
            .map(|t| (t.to_string(), self.deformation(t).to_json()))
            .collect();
        serde_json::json!({
            "k": self.k,
            "n": self.n,
            "family": self.family,
            "deformations": defs,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<QuotientSpec> {
        #[derive(Deserialize)]
        struct Raw {
            k: usize,
            n: usize,
            family: Generator,
            #[serde(default)]
            deformations: BTreeMap<String, serde_json::Value>,
        }
        let raw: Raw =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut defs = BTreeMap::new();
        for (t, b) in &raw.deformations {
            let t: usize = t.parse().map_err(|_| Error::Parse(format!("bad deformation index {t:?}")))?;
            defs.insert(t, SymPoly::from_json(raw.k, b)?);
        }
        QuotientSpec::new(raw.k, raw.n, raw.family, defs)
    }
}

/// The h-quotient with all b_t = 0: H*(Gr(k, n)).
pub fn classical_spec(k: usize, n: usize) -> Result<QuotientSpec> {
    QuotientSpec::new(k, n, Generator::Complete, BTreeMap::new())
}

/// The h-quotient with b_n = (-1)^{k+1} q and the other b_t = 0: QH*(Gr(k, n)).
pub fn quantum_spec(k: usize, n: usize) -> Result<QuotientSpec> {
    check_kn(k, n)?;
    let q = if k % 2 == 1 { Scalar::q() } else { -Scalar::q() };
    QuotientSpec::new(k, n, Generator::Complete, BTreeMap::from([(n, SymPoly::constant(k, q))]))
}

/// Expansion of `f` over {X_λ ∏_j (g_{μ_j} - b_{μ_j})}.
///
/// Each pass expands the current remainder over the undeformed mixed basis,
/// books the coefficients against the deformed elements, and keeps the
/// difference Σ c X_λ (∏ g - ∏ (g - b)), whose degree is strictly smaller.
pub fn deformed_mixed_expand(
    f: &SymPoly,
    spec: &QuotientSpec,
    first: FirstFamily,
) -> Result<BTreeMap<(Partition, Partition), Scalar>> {
    if f.k() != spec.k {
        return Err(Error::VariableMismatch { left: f.k(), right: spec.k });
    }
    let variant = spec.variant(first);
    let mut out: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
    let mut drift: HashMap<Partition, SymPoly> = HashMap::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let expansion = mixed_expand(&rest, variant)?;
        let mut next = SymPoly::zero(spec.k);
        for ((lambda, mu), c) in expansion.terms() {
            let slot = out.entry((lambda.clone(), mu.clone())).or_default();
            *slot += c;
            let d = drift.entry(mu.clone()).or_insert_with(|| deformation_drift(spec, mu));
            if !d.is_zero() {
                let x = element(first.basis_family(), lambda, spec.k);
                next.add_scaled(&(&*x * &*d), c);
            }
        }
        debug_assert!(next.degree() < rest.degree() || next.is_zero());
        rest = next;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// ∏ g_{μ_j} - ∏ (g_{μ_j} - b_{μ_j})
fn deformation_drift(spec: &QuotientSpec, mu: &Partition) -> SymPoly {
    if mu.parts().iter().all(|&t| spec.deformation(t).is_zero()) {
        return SymPoly::zero(spec.k);
    }
    let plain = element(spec.family.family(), mu, spec.k);
    let mut deformed = SymPoly::one(spec.k);
    for &t in mu.parts() {
        deformed = &deformed * &spec.generator(t);
    }
    &*plain - &deformed
}

/// The canonical representative of `f` in S/J or S/I over X_λ, λ ∈ P_{k,n-k}.
pub fn reduce(f: &SymPoly, spec: &QuotientSpec, basis: FirstFamily) -> Result<QuotientElement> {
    let coeffs = deformed_mixed_expand(f, spec, basis)?
        .into_iter()
        .filter(|((_, mu), _)| mu.is_empty())
        .map(|((lambda, _), c)| (lambda, c))
        .collect();
    Ok(QuotientElement { spec: spec.clone(), basis, coeffs })
}

/// The canonical form of s_λ s_μ over the Schur basis.
pub fn schur_product(lambda: &Partition, mu: &Partition, spec: &QuotientSpec) -> Result<QuotientElement> {
    let width = spec.n - spec.k;
    for p in [lambda, mu] {
        if !p.fits_box(spec.k, width) {
            return Err(Error::InvalidPartition(format!(
                "{p} does not fit a {}x{width} box",
                spec.k
            )));
        }
    }
    let s = |p: &Partition| element(BasisFamily::Schur, p, spec.k);
    reduce(&(&*s(lambda) * &*s(mu)), spec, FirstFamily::Schur)
}

/// Coefficients c^ν_{λμ} of s_ν in the canonical form of s_λ s_μ.
pub fn structure_constants(
    lambda: &Partition,
    mu: &Partition,
    spec: &QuotientSpec,
) -> Result<BTreeMap<Partition, Scalar>> {
    Ok(schur_product(lambda, mu, spec)?.coeffs)
}

/// Σ c_λ X_λ in a quotient ring, with λ ∈ P_{k,n-k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElement {
    spec: QuotientSpec,
    basis: FirstFamily,
    coeffs: BTreeMap<Partition, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct QuotientElementJson {
    spec: serde_json::Value,
    basis: FirstFamily,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl QuotientElement {
    pub fn spec(&self) -> &QuotientSpec {
        &self.spec
    }

    pub fn basis(&self) -> FirstFamily {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every coefficient lies in Z[q].
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(Scalar::is_integral)
    }

    /// The representative Σ c_λ X_λ as a polynomial.
    pub fn lift(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.spec.k);
        for (lambda, c) in &self.coeffs {
            out.add_scaled(&element(self.basis.basis_family(), lambda, self.spec.k), c);
        }
        out
    }

    /// The same class written over another output basis.
    pub fn convert(&self, basis: FirstFamily) -> Result<QuotientElement> {
        let terms = self.coeffs.iter().map(|(l, c)| ((l.clone(), Partition::empty()), c.clone())).collect();
        let coeffs = convert_first_index(&terms, self.basis, basis, self.spec.k, self.spec.n)?
            .into_iter()
            .map(|((l, _), c)| (l, c))
            .collect();
        Ok(QuotientElement { spec: self.spec.clone(), basis, coeffs })
    }

    /// Product in the quotient.
    pub fn mul(&self, other: &QuotientElement) -> Result<QuotientElement> {
        if self.spec != other.spec {
            return Err(Error::InvalidParameters("elements of different quotient rings".into()));
        }
        reduce(&(&self.lift() * &other.lift()), &self.spec, self.basis)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(QuotientElementJson {
            spec: self.spec.to_json(),
            basis: self.basis,
            coeffs: self.coeffs.clone(),
        })
        .expect("element serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<QuotientElement> {
        let raw: QuotientElementJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let spec = QuotientSpec::from_json(&raw.spec)?;
        let width = spec.n - spec.k;
        if let Some(bad) = raw.coeffs.keys().find(|l| !l.fits_box(spec.k, width)) {
            return Err(Error::Parse(format!("{bad} is outside the {}x{width} box", spec.k)));
        }
        let coeffs = raw.coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(QuotientElement { spec, basis: raw.basis, coeffs })
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let tag = self.basis.tag();
            if c.is_one() {
                write!(f, "{tag}[{lambda}]")?;
            } else {
                write!(f, "({c})*{tag}[{lambda}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::basis_element;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn power_spec_with_q() -> QuotientSpec {
        let b = SymPoly::constant(3, Scalar::q());
        QuotientSpec::new(3, 4, Generator::PowerSum, BTreeMap::from([(4, b)])).unwrap()
    }

    #[test]
    fn spec_validation() {
        let k = 2;
        let ok = BTreeMap::from([(4, SymPoly::monomial(k, &p("3")))]);
        assert!(QuotientSpec::new(k, 4, Generator::Complete, ok).is_ok());
        let too_big = BTreeMap::from([(3, SymPoly::monomial(k, &p("2,1")))]);
        assert!(matches!(
            QuotientSpec::new(k, 4, Generator::Complete, too_big),
            Err(Error::InvalidDeformation { index: 3, .. })
        ));
        let out_of_range = BTreeMap::from([(2, SymPoly::one(k))]);
        assert!(QuotientSpec::new(k, 4, Generator::Complete, out_of_range).is_err());
        let wrong_k = BTreeMap::from([(4, SymPoly::one(3))]);
        assert!(QuotientSpec::new(k, 4, Generator::Complete, wrong_k).is_err());
    }

    #[test]
    fn named_specs() {
        let c = classical_spec(2, 4).unwrap();
        assert_eq!(c.family(), Generator::Complete);
        assert!(c.is_undeformed());
        let q = quantum_spec(2, 4).unwrap();
        assert_eq!(q.deformation(4), SymPoly::constant(2, -Scalar::q()));
        assert!(q.deformation(3).is_zero());
        let q = quantum_spec(3, 4).unwrap();
        assert_eq!(q.deformation(4), SymPoly::constant(3, Scalar::q()));
    }

    #[test]
    fn undeformed_matches_mixed_expand() {
        let spec = classical_spec(3, 5).unwrap();
        let f = basis_element(BasisFamily::Monomial, &p("4,2,1"), 3);
        let x = deformed_mixed_expand(&f, &spec, FirstFamily::Schur).unwrap();
        let y = mixed_expand(&f, spec.variant(FirstFamily::Schur)).unwrap();
        assert_eq!(x, y.terms().map(|(k, v)| (k.clone(), v.clone())).collect());
    }

    #[test]
    fn generator_expands_to_itself() {
        let spec = quantum_spec(2, 4).unwrap();
        let x = deformed_mixed_expand(&spec.generator(3), &spec, FirstFamily::Schur).unwrap();
        assert_eq!(x, BTreeMap::from([((p("-"), p("3")), Scalar::one())]));
    }

    #[test]
    fn deformed_worked_example() {
        let spec = power_spec_with_q();
        let f = SymPoly::monomial(3, &p("2,2,1"));
        let x = deformed_mixed_expand(&f, &spec, FirstFamily::Monomial).unwrap();
        let half = Scalar::from_ratio(1, 2);
        let expected = BTreeMap::from([
            ((p("1"), p("2,2")), half.clone()),
            ((p("1,1,1"), p("2")), Scalar::one()),
            ((p("-"), p("3,2")), Scalar::from_int(-1)),
            ((p("1,1"), p("3")), Scalar::from_int(-1)),
            ((p("1"), p("4")), half.clone()),
            ((p("1"), p("-")), &half * &Scalar::q()),
        ]);
        assert_eq!(x, expected);
    }

    #[test]
    fn generators_reduce_to_zero() {
        let spec = QuotientSpec::new(3, 4, Generator::PowerSum, BTreeMap::new()).unwrap();
        let p2 = basis_element(BasisFamily::PowerSum, &p("2"), 3);
        assert!(reduce(&p2, &spec, FirstFamily::Schur).unwrap().is_zero());
        let spec = QuotientSpec::new(3, 4, Generator::Complete, BTreeMap::new()).unwrap();
        let h5 = basis_element(BasisFamily::Complete, &p("5"), 3);
        assert!(reduce(&h5, &spec, FirstFamily::Schur).unwrap().is_zero());
    }

    #[test]
    fn canonical_schur_is_fixed() {
        let spec = quantum_spec(2, 5).unwrap();
        let s = basis_element(BasisFamily::Schur, &p("3,1"), 2);
        let r = reduce(&s, &spec, FirstFamily::Schur).unwrap();
        assert_eq!(r.coeffs(), &BTreeMap::from([(p("3,1"), Scalar::one())]));
    }

    #[test]
    fn grassmannian_products() {
        let classical = classical_spec(2, 4).unwrap();
        let c = structure_constants(&p("1"), &p("1"), &classical).unwrap();
        assert_eq!(c, BTreeMap::from([(p("2"), Scalar::one()), (p("1,1"), Scalar::one())]));
        let unit = structure_constants(&p("2,1"), &p("-"), &classical).unwrap();
        assert_eq!(unit, BTreeMap::from([(p("2,1"), Scalar::one())]));

        let quantum = quantum_spec(2, 4).unwrap();
        let c = structure_constants(&p("2,2"), &p("2,2"), &quantum).unwrap();
        assert_eq!(c, BTreeMap::from([(p("-"), Scalar::q().pow(2))]));
        let c = structure_constants(&p("1"), &p("2,1"), &quantum).unwrap();
        assert_eq!(c, BTreeMap::from([(p("2,2"), Scalar::one()), (p("-"), Scalar::q())]));
    }

    #[test]
    fn rejects_partitions_outside_box() {
        let spec = classical_spec(2, 4).unwrap();
        assert!(structure_constants(&p("3"), &p("1"), &spec).is_err());
    }

    #[test]
    fn element_json_round_trip() {
        let spec = quantum_spec(2, 4).unwrap();
        let s = basis_element(BasisFamily::Schur, &p("2,2"), 2);
        let r = reduce(&(&s * &s), &spec, FirstFamily::Schur).unwrap();
        let json = r.to_json();
        assert_eq!(json["coeffs"], serde_json::json!({"-": "q^2"}));
        assert_eq!(QuotientElement::from_json(&json).unwrap(), r);
    }

    #[test]
    fn output_bases_agree() {
        let spec = power_spec_with_q();
        let f = basis_element(BasisFamily::Complete, &p("3,2"), 3);
        let s = reduce(&f, &spec, FirstFamily::Schur).unwrap();
        for basis in [FirstFamily::Monomial, FirstFamily::ElementaryConjugate] {
            let direct = reduce(&f, &spec, basis).unwrap();
            assert_eq!(s.convert(basis).unwrap(), direct);
            assert_eq!(direct.convert(FirstFamily::Schur).unwrap(), s);
        }
    }
}
