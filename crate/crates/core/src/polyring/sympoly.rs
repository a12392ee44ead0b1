use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::exponent::{orbit, orbit_size};
use super::{ExponentPoly, Scalar};
use crate::error::{Error, Result};
use crate::partition::{at_most_parts, Partition};

/// A symmetric polynomial in `k` variables, Σ_λ c_λ m_λ with ℓ(λ) ≤ k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly {
    k: usize,
    terms: BTreeMap<Partition, Scalar>,
}

/// One entry of the JSON form: `{"partition": "2,1", "coeff": {"0": "3/2"}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymPolyTerm {
    pub partition: Partition,
    pub coeff: BTreeMap<String, String>,
}

impl SymPoly {
    pub fn zero(k: usize) -> Self {
        SymPoly { k, terms: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::constant(k, Scalar::one())
    }

    pub fn constant(k: usize, c: Scalar) -> Self {
        let mut p = Self::zero(k);
        p.add_term(Partition::empty(), &c);
        p
    }

    /// m_λ, or zero when ℓ(λ) > k.
    pub fn monomial(k: usize, lambda: &Partition) -> Self {
        let mut p = Self::zero(k);
        if lambda.len() <= k {
            p.terms.insert(lambda.clone(), Scalar::one());
        }
        p
    }

    pub fn from_terms<I>(k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Scalar)>,
    {
        let mut p = Self::zero(k);
        for (lambda, c) in terms {
            if lambda.len() > k {
                return Err(Error::InvalidPartition(format!(
                    "{lambda} has more than k={k} parts"
                )));
            }
            p.add_term(lambda, &c);
        }
        Ok(p)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds c·m_λ. Terms with ℓ(λ) > k are dropped, since m_λ = 0 there.
    pub fn add_term(&mut self, lambda: Partition, c: &Scalar) {
        if c.is_zero() || lambda.len() > self.k {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest |λ| in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The common degree if every term has the same weight (zero counts as homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::weight);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Splits by degree; the pieces sum back to `self`.
    pub fn grade(&self) -> BTreeMap<usize, SymPoly> {
        let mut out: BTreeMap<usize, SymPoly> = BTreeMap::new();
        for (lambda, c) in &self.terms {
            out.entry(lambda.weight())
                .or_insert_with(|| SymPoly::zero(self.k))
                .terms
                .insert(lambda.clone(), c.clone());
        }
        out
    }

    pub fn homogeneous_part(&self, degree: usize) -> SymPoly {
        SymPoly {
            k: self.k,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == degree)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.k);
        }
        let mut out = SymPoly::zero(self.k);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    fn check_k(&self, other: &SymPoly) -> Result<()> {
        if self.k != other.k {
            Err(Error::VariableMismatch { left: self.k, right: other.k })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_k(other)?;
        let mut out = self.clone();
        out.add_assign_poly(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_k(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        Ok(out)
    }

    pub fn add_assign_poly(&mut self, other: &SymPoly) {
        assert_eq!(self.k, other.k, "variable count mismatch");
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c);
        }
    }

    /// self += c·other
    pub fn add_scaled(&mut self, other: &SymPoly, c: &Scalar) {
        assert_eq!(self.k, other.k, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (l, x) in &other.terms {
            self.add_term(l.clone(), &(x * c));
        }
    }

    /// Product in S, returned in monomial form.
    ///
    /// The factor with the smaller exponent-vector expansion is expanded in
    /// full; the coefficient of m_ν in the product is then the coefficient of
    /// x^ν, i.e. Σ_a f_a · g[sort(ν - a)] over exponent vectors a ≤ ν of the
    /// expanded factor.
    pub fn checked_mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_k(other)?;
        let k = self.k;
        if self.is_zero() || other.is_zero() {
            return Ok(SymPoly::zero(k));
        }
        let expansion_size =
            |f: &SymPoly| -> u128 { f.terms.keys().map(|l| orbit_size(l, k)).sum() };
        let (small, big) = if expansion_size(self) <= expansion_size(other) {
            (self, other)
        } else {
            (other, self)
        };

        let mut expanded: BTreeMap<usize, Vec<(Vec<usize>, &Scalar)>> = BTreeMap::new();
        for (l, c) in &small.terms {
            let slot = expanded.entry(l.weight()).or_default();
            slot.extend(orbit(l, k).into_iter().map(|a| (a, c)));
        }
        let big_degrees: Vec<usize> = big.grade().into_keys().collect();
        let mut targets: Vec<usize> = expanded
            .keys()
            .flat_map(|&a| big_degrees.iter().map(move |&b| a + b))
            .collect();
        targets.sort_unstable();
        targets.dedup();

        let mut out = SymPoly::zero(k);
        let mut rest = vec![0usize; k];
        for total in targets {
            for nu in at_most_parts(total, k) {
                let nu_vec = nu.padded(k);
                let mut acc = Scalar::zero();
                for (&ds, vecs) in &expanded {
                    if ds > total || !big_degrees.contains(&(total - ds)) {
                        continue;
                    }
                    for (a, c) in vecs {
                        if a.iter().zip(&nu_vec).any(|(x, y)| x > y) {
                            continue;
                        }
                        for ((r, x), y) in rest.iter_mut().zip(a).zip(&nu_vec) {
                            *r = y - x;
                        }
                        if let Some(g) = big.terms.get(&Partition::from_exponents(&rest)) {
                            acc.add_product(c, g);
                        }
                    }
                }
                if !acc.is_zero() {
                    out.terms.insert(nu, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        (0..e).fold(SymPoly::one(self.k), |acc, _| &acc * self)
    }

    /// Exact value at `point` (length k); `q` is required when a coefficient involves q.
    pub fn eval(&self, point: &[BigRational], q: Option<&BigRational>) -> Result<BigRational> {
        if point.len() != self.k {
            return Err(Error::VariableMismatch { left: self.k, right: point.len() });
        }
        let needs_q = self.terms.values().any(|c| !c.is_rational());
        let zero = BigRational::from_integer(0.into());
        let q = match (q, needs_q) {
            (Some(q), _) => q,
            (None, false) => &zero,
            (None, true) => {
                return Err(Error::InvalidParameters("a value for q is required".into()))
            }
        };
        Ok(ExponentPoly::from_sympoly(self).eval(point, q))
    }

    /// Sets every coefficient to its value at q = `at`.
    pub fn specialize_q(&self, at: &BigRational) -> SymPoly {
        let mut out = SymPoly::zero(self.k);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &Scalar::from_rational(c.eval(at)));
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<SymPolyTerm> {
        self.terms
            .iter()
            .map(|(l, c)| SymPolyTerm { partition: l.clone(), coeff: c.to_exponent_map() })
            .collect()
    }

    pub fn from_json_terms(k: usize, terms: &[SymPolyTerm]) -> Result<SymPoly> {
        let parsed = terms
            .iter()
            .map(|t| Ok((t.partition.clone(), Scalar::from_exponent_map(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        SymPoly::from_terms(k, parsed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("terms serialize")
    }

    pub fn from_json(k: usize, value: &serde_json::Value) -> Result<SymPoly> {
        let terms: Vec<SymPolyTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_terms(k, &terms)
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.weight().cmp(&a.0.weight()).then(b.0.cmp(a.0)));
        for (idx, (l, c)) in terms.into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "m[{l}]")?;
            } else if c.is_rational() {
                write!(f, "{c}*m[{l}]")?;
            } else {
                write!(f, "({c})*m[{l}]")?;
            }
        }
        Ok(())
    }
}
