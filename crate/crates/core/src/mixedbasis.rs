//! Mixed bases {X_λ Y_μ : λ ∈ P_{k,n-k}, μ ∈ Q_{n-k+1,n}} of the symmetric
//! polynomials, where X is m, s or e' and Y is p or h.
//!
//! Two expansion routes are constructive:
//!
//! * (m, p): write m_λ in power sums inside Λ, pull out the p_t with the
//!   largest index, rewrite p_t over p_{n-k+1}, ..., p_n with the Newton-Girard
//!   reduction table, and recurse on the (strictly lower degree) coefficients.
//! * (s, h): the same shape, but the leading h_t come from a first-row
//!   cofactor expansion of the Jacobi-Trudi determinant.
//!
//! The other four variants are obtained by changing the first index through
//! the unitriangular transition matrices restricted to P_{k,n-k}.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bases::{
    element, elementary, expand_in_family, jacobi_trudi_first_row, m_to_p_lambda,
    transition_matrix, BasisFamily,
};
use crate::error::{Error, Result};
use crate::linalg;
use crate::memo::Memo;
use crate::partition::{at_most_parts, banded, boxed, check_kn, Partition};
use crate::polyring::{Scalar, SymPoly};

/// The generator family of the second index: power sums (ideal J) or
/// complete homogeneous polynomials (ideal I).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "h")]
    Complete,
}

impl Generator {
    pub fn family(self) -> BasisFamily {
        match self {
            Generator::PowerSum => BasisFamily::PowerSum,
            Generator::Complete => BasisFamily::Complete,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Generator::PowerSum => "p",
            Generator::Complete => "h",
        }
    }

    /// The first-index family the constructive route produces directly.
    fn native_first(self) -> FirstFamily {
        match self {
            Generator::PowerSum => FirstFamily::Monomial,
            Generator::Complete => FirstFamily::Schur,
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "p" => Ok(Generator::PowerSum),
            "h" => Ok(Generator::Complete),
            other => Err(Error::Parse(format!("unknown generator family {other:?}"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The first-index family: m_λ, s_λ, or e_{λ'}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FirstFamily {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "e")]
    ElementaryConjugate,
}

impl FirstFamily {
    pub const ALL: [FirstFamily; 3] =
        [FirstFamily::Monomial, FirstFamily::Schur, FirstFamily::ElementaryConjugate];

    pub fn basis_family(self) -> BasisFamily {
        match self {
            FirstFamily::Monomial => BasisFamily::Monomial,
            FirstFamily::Schur => BasisFamily::Schur,
            FirstFamily::ElementaryConjugate => BasisFamily::ElementaryConjugate,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            FirstFamily::Monomial => "m",
            FirstFamily::Schur => "s",
            FirstFamily::ElementaryConjugate => "e",
        }
    }
}

impl FromStr for FirstFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(FirstFamily::Monomial),
            "s" => Ok(FirstFamily::Schur),
            "e" | "e'" => Ok(FirstFamily::ElementaryConjugate),
            other => Err(Error::Parse(format!("unknown first-index family {other:?}"))),
        }
    }
}

impl fmt::Display for FirstFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedVariant {
    pub first: FirstFamily,
    pub second: Generator,
    pub k: usize,
    pub n: usize,
}

impl MixedVariant {
    pub fn new(first: FirstFamily, second: Generator, k: usize, n: usize) -> Result<Self> {
        check_kn(k, n)?;
        Ok(MixedVariant { first, second, k, n })
    }

    /// The six (first, second) combinations for fixed k, n.
    pub fn all(k: usize, n: usize) -> Result<Vec<MixedVariant>> {
        check_kn(k, n)?;
        Ok([Generator::PowerSum, Generator::Complete]
            .into_iter()
            .flat_map(|second| {
                FirstFamily::ALL.into_iter().map(move |first| MixedVariant { first, second, k, n })
            })
            .collect())
    }

    /// X_λ Y_μ
    pub fn element(&self, lambda: &Partition, mu: &Partition) -> SymPoly {
        let x = element(self.first.basis_family(), lambda, self.k);
        let y = element(self.second.family(), mu, self.k);
        &*x * &*y
    }

    /// V_i: all (λ, μ) ∈ P_{k,n-k} × Q_{n-k+1,n} with |λ| + |μ| = degree.
    pub fn index(&self, degree: usize) -> Vec<(Partition, Partition)> {
        (0..=degree)
            .flat_map(|a| {
                let mus = banded(degree - a, self.k, self.n);
                boxed(a, self.k, self.n)
                    .into_iter()
                    .flat_map(move |l| mus.clone().into_iter().map(move |m| (l.clone(), m)))
            })
            .collect()
    }
}

impl fmt::Display for MixedVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) k={} n={}", self.first, self.second, self.k, self.n)
    }
}

/// Σ c_{λ,μ} X_λ Y_μ over a declared variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedExpansion {
    variant: MixedVariant,
    terms: BTreeMap<(Partition, Partition), Scalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MixedTerm {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct MixedExpansionJson {
    variant: MixedVariant,
    terms: Vec<MixedTerm>,
}

impl MixedExpansion {
    pub fn variant(&self) -> MixedVariant {
        self.variant
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> Scalar {
        self.terms.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_default()
    }

    /// The coefficients with second index μ, keyed by λ.
    pub fn layer(&self, mu: &Partition) -> BTreeMap<Partition, Scalar> {
        self.terms
            .iter()
            .filter(|((_, m), _)| m == mu)
            .map(|((l, _), c)| (l.clone(), c.clone()))
            .collect()
    }

    /// Σ c_{λ,μ} X_λ Y_μ as a polynomial.
    pub fn evaluate(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.variant.k);
        for ((l, m), c) in &self.terms {
            out.add_scaled(&self.variant.element(l, m), c);
        }
        out
    }

    pub fn to_terms(&self) -> Vec<MixedTerm> {
        self.terms
            .iter()
            .map(|((l, m), c)| MixedTerm { lambda: l.clone(), mu: m.clone(), coeff: c.clone() })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MixedExpansionJson { variant: self.variant, terms: self.to_terms() })
            .expect("expansion serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MixedExpansion> {
        let raw: MixedExpansionJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let v = raw.variant;
        MixedVariant::new(v.first, v.second, v.k, v.n)?;
        let mut terms = BTreeMap::new();
        for t in raw.terms {
            if !t.lambda.fits_box(v.k, v.n - v.k) || !t.mu.parts_within(v.n - v.k + 1, v.n) {
                return Err(Error::Parse(format!("term ({}, {}) outside the index set", t.lambda, t.mu)));
            }
            add_into(&mut terms, (t.lambda, t.mu), &t.coeff);
        }
        Ok(MixedExpansion { variant: v, terms })
    }
}

type TermMap = BTreeMap<(Partition, Partition), Scalar>;

fn add_into(map: &mut TermMap, key: (Partition, Partition), c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// d_{t,m} for m = n-k+1..=n with g_t = Σ_m d_{t,m} g_m, g = p or h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTable {
    pub family: Generator,
    pub k: usize,
    pub n: usize,
    pub t: usize,
    entries: Arc<Vec<SymPoly>>,
}

impl ReductionTable {
    pub fn low(&self) -> usize {
        self.n - self.k + 1
    }

    /// d_{t,m}; zero outside `n-k+1..=n`.
    pub fn entry(&self, m: usize) -> SymPoly {
        if m < self.low() || m > self.n {
            return SymPoly::zero(self.k);
        }
        self.entries[m - self.low()].clone()
    }

    /// (m, d_{t,m}) pairs.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &SymPoly)> {
        let low = self.low();
        self.entries.iter().enumerate().map(move |(i, d)| (low + i, d))
    }
}

static REDUCTIONS: Memo<(usize, usize, usize), Vec<SymPoly>> = Memo::new();

/// The recursion is identical for p and h, so rows are shared between them.
fn reduction_rows(t: usize, k: usize, n: usize) -> Arc<Vec<SymPoly>> {
    REDUCTIONS.get_or_insert_with(&(t, k, n), || {
        let low = n - k + 1;
        if t <= n {
            return (low..=n)
                .map(|m| if m == t { SymPoly::one(k) } else { SymPoly::zero(k) })
                .collect();
        }
        // d_{t,m} = Σ_{j=1}^k (-1)^{j+1} e_j d_{t-j,m}
        let mut rows = vec![SymPoly::zero(k); k];
        for j in 1..=k {
            let e = elementary(j, k);
            let prev = reduction_rows(t - j, k, n);
            let sign = Scalar::from_int(if j % 2 == 1 { 1 } else { -1 });
            for (slot, d) in rows.iter_mut().zip(prev.iter()) {
                if !d.is_zero() {
                    slot.add_scaled(&(&*e * d), &sign);
                }
            }
        }
        rows
    })
}

pub fn reduction_table(family: Generator, t: usize, k: usize, n: usize) -> Result<ReductionTable> {
    check_kn(k, n)?;
    if t < n - k + 1 {
        return Err(Error::InvalidParameters(format!("need t >= n-k+1 = {}, got t={t}", n - k + 1)));
    }
    Ok(ReductionTable { family, k, n, t, entries: reduction_rows(t, k, n) })
}

static ELEMENT_EXPANSIONS: Memo<(Generator, usize, usize, Partition), TermMap> = Memo::new();

/// Expansion in the native variant ((m,p) or (s,h)) of an arbitrary polynomial.
fn expand_native(f: &SymPoly, gen: Generator, n: usize) -> Result<TermMap> {
    let k = f.k();
    let coords: Vec<(Partition, Scalar)> = match gen {
        Generator::PowerSum => f.terms().map(|(l, c)| (l.clone(), c.clone())).collect(),
        Generator::Complete => expand_in_family(f, BasisFamily::Schur, None)?.into_iter().collect(),
    };
    let mut out = TermMap::new();
    for (lambda, c) in coords {
        let piece = expand_native_element(gen, k, n, &lambda)?;
        for (key, x) in piece.iter() {
            add_into(&mut out, key.clone(), &(x * &c));
        }
    }
    Ok(out)
}

/// Native expansion of the single native basis element m_λ (for p) or s_λ (for h).
fn expand_native_element(
    gen: Generator,
    k: usize,
    n: usize,
    lambda: &Partition,
) -> Result<Arc<TermMap>> {
    let key = (gen, k, n, lambda.clone());
    ELEMENT_EXPANSIONS.get_or_try_insert_with(&key, || {
        if lambda.largest() <= n - k {
            return Ok(TermMap::from([((lambda.clone(), Partition::empty()), Scalar::one())]));
        }
        let mut out = TermMap::new();
        for (m, carry) in generator_coefficients(gen, k, n, lambda) {
            debug_assert_eq!(carry.homogeneous_degree(), Some(lambda.weight() - m));
            for ((rho, tau), x) in expand_native(&carry, gen, n)? {
                add_into(&mut out, (rho, tau.with_part(m)), &x);
            }
        }
        Ok(out)
    })
}

/// Writes X_λ (m_λ for p, s_λ for h) as Σ_m c_m g_m over the generators
/// g_m, m = n-k+1..=n, when λ_1 > n-k. Zero coefficients are omitted.
pub fn factor_generators(
    second: Generator,
    lambda: &Partition,
    k: usize,
    n: usize,
) -> Result<BTreeMap<usize, SymPoly>> {
    check_kn(k, n)?;
    if lambda.len() > k || lambda.largest() <= n - k {
        return Err(Error::InvalidPartition(format!(
            "{lambda} needs at most {k} parts and a part above {}",
            n - k
        )));
    }
    Ok(generator_coefficients(second, k, n, lambda))
}

fn generator_coefficients(gen: Generator, k: usize, n: usize, lambda: &Partition) -> BTreeMap<usize, SymPoly> {
    // lead[t] collects c_t in X = Σ_t c_t g_t, t ≥ λ_1 ≥ n-k+1
    let mut lead: BTreeMap<usize, SymPoly> = BTreeMap::new();
    match gen {
        Generator::PowerSum => {
            for (mu, b) in m_to_p_lambda(lambda) {
                let rest = element(BasisFamily::PowerSum, &mu.tail(), k);
                lead.entry(mu.largest()).or_insert_with(|| SymPoly::zero(k)).add_scaled(&rest, &b);
            }
        }
        Generator::Complete => {
            for (t, c) in jacobi_trudi_first_row(lambda, k) {
                lead.entry(t).or_insert_with(|| SymPoly::zero(k)).add_assign_poly(&c);
            }
        }
    }
    let low = n - k + 1;
    let mut out = BTreeMap::new();
    for m in low..=n {
        let mut carry = SymPoly::zero(k);
        for (&t, c) in &lead {
            let d = &reduction_rows(t, k, n)[m - low];
            if !d.is_zero() && !c.is_zero() {
                carry.add_assign_poly(&(c * d));
            }
        }
        if !carry.is_zero() {
            out.insert(m, carry);
        }
    }
    out
}

/// Nonzero entries of each row, keyed by row label.
type SparseRows = BTreeMap<Partition, Vec<(Partition, Scalar)>>;

static RESTRICTED_ROWS: Memo<(BasisFamily, BasisFamily, usize, usize, usize), SparseRows> = Memo::new();

/// Row λ of the restricted transition matrix `from` → `to` on P_{k,n-k}(degree).
fn restricted_rows(
    from: BasisFamily,
    to: BasisFamily,
    degree: usize,
    k: usize,
    n: usize,
) -> Result<Arc<SparseRows>> {
    RESTRICTED_ROWS.get_or_try_insert_with(&(from, to, degree, k, n), || {
        let t = transition_matrix(from, to, degree, k, Some(n))?;
        Ok(t.rows
            .iter()
            .zip(&t.entries)
            .map(|(l, row)| {
                let nz = t.cols.iter().cloned().zip(row.iter().cloned()).filter(|(_, c)| !c.is_zero());
                (l.clone(), nz.collect())
            })
            .collect())
    })
}

/// Rewrites Σ c_{λ,μ} A_λ Y_μ as Σ c'_{ρ,μ} B_ρ Y_μ using A_λ = Σ_ρ T_{λρ} B_ρ.
pub(crate) fn convert_first_index(
    terms: &BTreeMap<(Partition, Partition), Scalar>,
    from: FirstFamily,
    to: FirstFamily,
    k: usize,
    n: usize,
) -> Result<BTreeMap<(Partition, Partition), Scalar>> {
    if from == to {
        return Ok(terms.clone());
    }
    let mut out = TermMap::new();
    for ((lambda, mu), c) in terms {
        let rows = restricted_rows(from.basis_family(), to.basis_family(), lambda.weight(), k, n)?;
        for (rho, t) in &rows[lambda] {
            add_into(&mut out, (rho.clone(), mu.clone()), &(c * t));
        }
    }
    Ok(out)
}

/// Expands `f` over the mixed basis `variant`; inhomogeneous input is handled degree by degree.
pub fn mixed_expand(f: &SymPoly, variant: MixedVariant) -> Result<MixedExpansion> {
    if f.k() != variant.k {
        return Err(Error::VariableMismatch { left: f.k(), right: variant.k });
    }
    check_kn(variant.k, variant.n)?;
    let native = variant.second.native_first();
    let terms = expand_native(f, variant.second, variant.n)?;
    let terms = convert_first_index(&terms, native, variant.first, variant.k, variant.n)?;
    Ok(MixedExpansion { variant, terms })
}

/// Evidence that a candidate family restricted to one degree is a basis of S_degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVerdict {
    pub degree: usize,
    /// Number of candidate elements of this degree.
    pub candidates: usize,
    /// rank of S_degree, i.e. #P_k(degree).
    pub dimension: usize,
    /// Rank of the candidates' monomial-coordinate matrix.
    pub rank: usize,
}

impl BasisVerdict {
    pub fn is_square(&self) -> bool {
        self.candidates == self.dimension
    }

    pub fn is_ok(&self) -> bool {
        self.is_square() && self.rank == self.dimension
    }

    pub(crate) fn from_elements(degree: usize, k: usize, elements: &[SymPoly]) -> BasisVerdict {
        let coords = at_most_parts(degree, k);
        let rows: Vec<_> = elements
            .iter()
            .map(|e| {
                debug_assert!(e.terms().all(|(l, _)| l.weight() == degree));
                coords.iter().map(|nu| e.coeff(nu).coeff(0)).collect()
            })
            .collect();
        BasisVerdict {
            degree,
            candidates: elements.len(),
            dimension: coords.len(),
            rank: linalg::rank(&rows),
        }
    }
}

/// Checks that V_degree of `variant` is square against S_degree and invertible.
pub fn verify_mixed_basis(variant: MixedVariant, degree: usize) -> Result<BasisVerdict> {
    check_kn(variant.k, variant.n)?;
    let elements: Vec<SymPoly> =
        variant.index(degree).iter().map(|(l, m)| variant.element(l, m)).collect();
    Ok(BasisVerdict::from_elements(degree, variant.k, &elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn e(i: usize, k: usize) -> SymPoly {
        (*elementary(i, k)).clone()
    }

    #[test]
    fn reduction_base_case() {
        let t = reduction_table(Generator::PowerSum, 3, 3, 4).unwrap();
        assert_eq!(t.entry(3), SymPoly::one(3));
        assert!(t.entry(2).is_zero());
        assert!(t.entry(4).is_zero());
    }

    #[test]
    fn reduction_first_step() {
        // p_5 = e_1 p_4 - e_2 p_3 + e_3 p_2 in three variables
        for family in [Generator::PowerSum, Generator::Complete] {
            let t = reduction_table(family, 5, 3, 4).unwrap();
            assert_eq!(t.entry(4), e(1, 3));
            assert_eq!(t.entry(3), -&e(2, 3));
            assert_eq!(t.entry(2), e(3, 3));
        }
    }

    #[test]
    fn reduction_rejects_small_t() {
        assert!(reduction_table(Generator::PowerSum, 1, 3, 4).is_err());
        assert!(reduction_table(Generator::PowerSum, 5, 5, 4).is_err());
    }

    #[test]
    fn trivial_expansion() {
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 3, 5).unwrap();
        let x = mixed_expand(&SymPoly::monomial(3, &p("2,1")), v).unwrap();
        assert_eq!(x.len(), 1);
        assert!(x.coeff(&p("2,1"), &Partition::empty()).is_one());
    }

    #[test]
    fn schur_base_case() {
        let v = MixedVariant::new(FirstFamily::Schur, Generator::Complete, 2, 4).unwrap();
        for lambda in [p("2,2"), p("1"), p("2,1")] {
            let s = (*element(BasisFamily::Schur, &lambda, 2)).clone();
            let x = mixed_expand(&s, v).unwrap();
            assert_eq!(x.len(), 1);
            assert!(x.coeff(&lambda, &Partition::empty()).is_one());
        }
    }

    #[test]
    fn worked_example_m221() {
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 3, 4).unwrap();
        let f = SymPoly::monomial(3, &p("2,2,1"));
        let x = mixed_expand(&f, v).unwrap();
        let expected = [
            ("1", "2,2", Scalar::from_ratio(1, 2)),
            ("1,1,1", "2", Scalar::one()),
            ("-", "3,2", Scalar::from_int(-1)),
            ("1,1", "3", Scalar::from_int(-1)),
            ("1", "4", Scalar::from_ratio(1, 2)),
        ];
        assert_eq!(x.len(), expected.len());
        for (l, m, c) in expected {
            assert_eq!(x.coeff(&p(l), &p(m)), c, "coefficient of ({l}, {m})");
        }
        assert_eq!(x.evaluate(), f);
    }

    #[test]
    fn worked_example_factoring() {
        let c = factor_generators(Generator::PowerSum, &p("2,2,1"), 3, 4).unwrap();
        let pw = |s: &str| (*element(BasisFamily::PowerSum, &p(s), 3)).clone();
        let half = Scalar::from_ratio(1, 2);
        assert_eq!(c[&2], &pw("2,1").scale(&half) + &e(3, 3));
        assert_eq!(c[&3], -&(&pw("2") + &e(2, 3)));
        assert_eq!(c[&4], &e(1, 3) - &pw("1").scale(&half));
        assert!(factor_generators(Generator::PowerSum, &p("1,1"), 3, 4).is_err());
    }

    #[test]
    fn all_variants_reconstruct() {
        let f = &SymPoly::monomial(3, &p("3,2,1")) + &SymPoly::monomial(3, &p("4"));
        for v in MixedVariant::all(3, 4).unwrap() {
            let x = mixed_expand(&f, v).unwrap();
            assert_eq!(x.evaluate(), f, "{v}");
            let back = MixedExpansion::from_json(&x.to_json()).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn mismatched_k_rejected() {
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 3, 4).unwrap();
        assert!(mixed_expand(&SymPoly::one(2), v).is_err());
    }

    #[test]
    fn index_sizes() {
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 1, 1).unwrap();
        assert_eq!(v.index(3), vec![(Partition::empty(), p("1,1,1"))]);
    }

    #[test]
    fn verdict_examples() {
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 1, 1).unwrap();
        assert!(verify_mixed_basis(v, 3).unwrap().is_ok());
        let v = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 3, 4).unwrap();
        assert!(verify_mixed_basis(v, 5).unwrap().is_ok());
        let v = MixedVariant::new(FirstFamily::Schur, Generator::Complete, 2, 4).unwrap();
        assert!(verify_mixed_basis(v, 6).unwrap().is_ok());
    }
}
