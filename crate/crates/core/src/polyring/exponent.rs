use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::{Scalar, SymPoly};
use crate::partition::Partition;

/// A polynomial in x_1..x_k stored by full exponent vector.
///
/// Scratch representation: used to check identities that leave the symmetric
/// ring (alternants, Vandermonde products) and to evaluate at points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentPoly {
    k: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl ExponentPoly {
    pub fn zero(k: usize) -> Self {
        ExponentPoly { k, terms: BTreeMap::new() }
    }

    /// c·x^exponents
    pub fn monomial(exponents: Vec<usize>, c: Scalar) -> Self {
        let mut p = ExponentPoly::zero(exponents.len());
        p.add_term(exponents, &c);
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[usize]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, c: &Scalar) {
        debug_assert_eq!(exponents.len(), self.k);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    pub fn from_sympoly(f: &SymPoly) -> Self {
        let mut out = ExponentPoly::zero(f.k());
        for (lambda, c) in f.terms() {
            for exps in orbit(lambda, f.k()) {
                out.add_term(exps, c);
            }
        }
        out
    }

    /// Collects monomial orbits; `None` unless the polynomial is symmetric.
    pub fn to_sympoly(&self) -> Option<SymPoly> {
        let mut out = SymPoly::zero(self.k);
        for (exps, c) in &self.terms {
            if exps.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_exponents(exps), c);
            }
        }
        (ExponentPoly::from_sympoly(&out) == *self).then_some(out)
    }

    /// det(x_j^{k-i}) = ∏_{i<j} (x_i - x_j)
    pub fn vandermonde(k: usize) -> Self {
        let mut acc = ExponentPoly::monomial(vec![0; k], Scalar::one());
        for i in 0..k {
            for j in (i + 1)..k {
                let mut xi = vec![0; k];
                xi[i] = 1;
                let mut xj = vec![0; k];
                xj[j] = 1;
                let factor = &ExponentPoly::monomial(xi, Scalar::one())
                    - &ExponentPoly::monomial(xj, Scalar::one());
                acc = &acc * &factor;
            }
        }
        acc
    }

    /// det(x_j^{λ_i + k - i}); zero when ℓ(λ) > k.
    pub fn alternant(lambda: &Partition, k: usize) -> Self {
        let mut out = ExponentPoly::zero(k);
        if lambda.len() > k {
            return out;
        }
        let shifted: Vec<usize> = (0..k).map(|i| lambda.part(i) + k - 1 - i).collect();
        for (perm, sign) in signed_permutations(k) {
            // term ∏_i x_{perm(i)}^{shifted_i}
            let mut exps = vec![0; k];
            for (i, &j) in perm.iter().enumerate() {
                exps[j] = shifted[i];
            }
            out.add_term(exps, &Scalar::from_int(sign));
        }
        out
    }

    /// Exact value at `point` with q = `q`.
    pub fn eval(&self, point: &[BigRational], q: &BigRational) -> BigRational {
        assert_eq!(point.len(), self.k);
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut v = c.eval(q);
            for (x, &e) in point.iter().zip(exps) {
                v *= num_traits::pow(x.clone(), e);
            }
            total += v;
        }
        total
    }
}

impl Add for &ExponentPoly {
    type Output = ExponentPoly;
    fn add(self, rhs: &ExponentPoly) -> ExponentPoly {
        assert_eq!(self.k, rhs.k);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &ExponentPoly {
    type Output = ExponentPoly;
    fn neg(self) -> ExponentPoly {
        ExponentPoly { k: self.k, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &ExponentPoly {
    type Output = ExponentPoly;
    fn sub(self, rhs: &ExponentPoly) -> ExponentPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExponentPoly {
    type Output = ExponentPoly;
    fn mul(self, rhs: &ExponentPoly) -> ExponentPoly {
        assert_eq!(self.k, rhs.k);
        let mut out = ExponentPoly::zero(self.k);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<usize> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, &(x * y));
            }
        }
        out
    }
}

/// All distinct rearrangements of λ padded with zeros to length k.
pub(crate) fn orbit(lambda: &Partition, k: usize) -> Vec<Vec<usize>> {
    let mut v = lambda.padded(k);
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// Number of distinct rearrangements of λ padded to length k.
pub(crate) fn orbit_size(lambda: &Partition, k: usize) -> u128 {
    let v = lambda.padded(k);
    let mut size: u128 = (1..=k as u128).product();
    let mut i = 0;
    while i < v.len() {
        let run = v[i..].iter().take_while(|&&x| x == v[i]).count();
        size /= (1..=run as u128).product::<u128>();
        i += run;
    }
    size
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every permutation of 0..k with its sign.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut v: Vec<usize> = (0..k).collect();
    let mut out = vec![(v.clone(), 1)];
    while next_permutation(&mut v) {
        let inversions = (0..k)
            .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
            .filter(|&(i, j)| v[i] > v[j])
            .count();
        out.push((v.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
    }
    out
}
