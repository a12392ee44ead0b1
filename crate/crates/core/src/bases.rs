//! The classical families m, e, h, s, p as symmetric polynomials, transition
//! matrices between them, and the monomial-to-power-sum expansion in Λ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::SpanSolver;
use crate::memo::Memo;
use crate::partition::{at_most_parts, boxed, check_kn, partitions_with, Partition};
use crate::polyring::{Scalar, SymPoly};

/// Which family an element or index list belongs to.
///
/// `ElementaryConjugate` is e_{λ'} indexed by λ, the form that appears in the
/// mixed bases and quotient bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisFamily {
    Monomial,
    Elementary,
    Complete,
    Schur,
    PowerSum,
    ElementaryConjugate,
}

impl BasisFamily {
    pub fn tag(self) -> &'static str {
        match self {
            BasisFamily::Monomial => "m",
            BasisFamily::Elementary => "e",
            BasisFamily::Complete => "h",
            BasisFamily::Schur => "s",
            BasisFamily::PowerSum => "p",
            BasisFamily::ElementaryConjugate => "e'",
        }
    }

    /// The index set of this family's basis of S_degree: P_k(degree) for m, s
    /// and e', and {λ ⊢ degree : λ_1 ≤ k} for e, h, p.
    pub fn natural_index(self, degree: usize, k: usize) -> Vec<Partition> {
        match self {
            BasisFamily::Monomial | BasisFamily::Schur | BasisFamily::ElementaryConjugate => {
                at_most_parts(degree, k)
            }
            BasisFamily::Elementary | BasisFamily::Complete | BasisFamily::PowerSum => {
                partitions_with(degree, usize::MAX, 1, k)
            }
        }
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BasisFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "m" => BasisFamily::Monomial,
            "e" => BasisFamily::Elementary,
            "h" => BasisFamily::Complete,
            "s" => BasisFamily::Schur,
            "p" => BasisFamily::PowerSum,
            "e'" | "econj" => BasisFamily::ElementaryConjugate,
            other => return Err(Error::Parse(format!("unknown basis family {other:?}"))),
        })
    }
}

impl Serialize for BasisFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for BasisFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

static ELEMENTS: Memo<(BasisFamily, Partition, usize), SymPoly> = Memo::new();

/// The family member indexed by λ in k variables.
///
/// e, h, p are products of one-row generators (e_i = 0 for i > k);
/// m_λ and s_λ vanish when ℓ(λ) > k; s_λ comes from the Jacobi-Trudi
/// determinant det(h_{λ_i + j - i}).
pub fn basis_element(family: BasisFamily, lambda: &Partition, k: usize) -> SymPoly {
    (*element(family, lambda, k)).clone()
}

pub(crate) fn element(family: BasisFamily, lambda: &Partition, k: usize) -> Arc<SymPoly> {
    let key = (family, lambda.clone(), k);
    ELEMENTS.get_or_insert_with(&key, || match family {
        BasisFamily::Monomial => SymPoly::monomial(k, lambda),
        BasisFamily::Elementary | BasisFamily::Complete | BasisFamily::PowerSum => {
            if lambda.is_empty() {
                return SymPoly::one(k);
            }
            if lambda.len() == 1 {
                return one_row(family, lambda.largest(), k);
            }
            let head = element(family, &Partition::new(vec![lambda.largest()]).unwrap(), k);
            let rest = element(family, &lambda.tail(), k);
            &*head * &*rest
        }
        BasisFamily::ElementaryConjugate => {
            (*element(BasisFamily::Elementary, &lambda.conjugate(), k)).clone()
        }
        BasisFamily::Schur => schur(lambda, k),
    })
}

fn one_row(family: BasisFamily, i: usize, k: usize) -> SymPoly {
    match family {
        BasisFamily::Elementary => {
            if i > k {
                SymPoly::zero(k)
            } else {
                SymPoly::monomial(k, &Partition::new(vec![1; i]).unwrap())
            }
        }
        BasisFamily::Complete => {
            let mut h = SymPoly::zero(k);
            for nu in at_most_parts(i, k) {
                h.add_term(nu, &Scalar::one());
            }
            h
        }
        BasisFamily::PowerSum => SymPoly::monomial(k, &Partition::new(vec![i]).unwrap()),
        _ => unreachable!("not a one-row generator family"),
    }
}

/// h_i in k variables, with h_0 = 1 and h_i = 0 for i < 0.
pub(crate) fn complete(i: isize, k: usize) -> Arc<SymPoly> {
    if i < 0 {
        return Arc::new(SymPoly::zero(k));
    }
    element(BasisFamily::Complete, &Partition::from_exponents(&[i as usize]), k)
}

/// e_i in k variables.
pub(crate) fn elementary(i: usize, k: usize) -> Arc<SymPoly> {
    element(BasisFamily::Elementary, &Partition::from_exponents(&[i]), k)
}

/// Jacobi-Trudi matrix (h_{λ_i + j - i}) of size ℓ(λ).
fn jacobi_trudi_matrix(lambda: &Partition, k: usize) -> Vec<Vec<Arc<SymPoly>>> {
    let l = lambda.len();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| complete(lambda.part(i) as isize + j as isize - i as isize, k))
                .collect()
        })
        .collect()
}

fn schur(lambda: &Partition, k: usize) -> SymPoly {
    if lambda.len() > k {
        return SymPoly::zero(k);
    }
    determinant(&jacobi_trudi_matrix(lambda, k), k)
}

/// Groups the Jacobi-Trudi expansion of s_λ by the h factor taken from the
/// first row: s_λ = Σ_t c_t h_t with t = λ_1 + j - 1 and c_t the signed
/// (1, j) cofactor.
pub(crate) fn jacobi_trudi_first_row(lambda: &Partition, k: usize) -> Vec<(usize, SymPoly)> {
    let m = jacobi_trudi_matrix(lambda, k);
    let l = m.len();
    let mut out = Vec::new();
    for j in 0..l {
        let minor: Vec<Vec<Arc<SymPoly>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| Arc::clone(e))
                    .collect()
            })
            .collect();
        let mut cof = determinant(&minor, k);
        if j % 2 == 1 {
            cof = -&cof;
        }
        if !cof.is_zero() {
            out.push((lambda.largest() + j, cof));
        }
    }
    out
}

/// Determinant of a square matrix of symmetric polynomials, summing over
/// column subsets row by row (2^n states).
fn determinant(m: &[Vec<Arc<SymPoly>>], k: usize) -> SymPoly {
    let n = m.len();
    if n == 0 {
        return SymPoly::one(k);
    }
    let full = (1usize << n) - 1;
    let mut dp: Vec<Option<SymPoly>> = vec![None; 1 << n];
    dp[0] = Some(SymPoly::one(k));
    for mask in 0..full {
        let Some(acc) = dp[mask].take() else { continue };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for c in 0..n {
            if mask & (1 << c) != 0 || m[row][c].is_zero() {
                continue;
            }
            // earlier rows placed in columns right of c are inversions
            let inversions = (mask >> (c + 1)).count_ones();
            let mut term = &acc * &*m[row][c];
            if inversions % 2 == 1 {
                term = -&term;
            }
            let slot = dp[mask | (1 << c)].get_or_insert_with(|| SymPoly::zero(k));
            slot.add_assign_poly(&term);
        }
    }
    dp[full].take().unwrap_or_else(|| SymPoly::zero(k))
}

/// A family's degree-d slice with a solver for expanding into it.
pub(crate) struct FamilySlice {
    pub(crate) index: Vec<Partition>,
    coords: Vec<Partition>,
    solver: SpanSolver,
}

impl FamilySlice {
    /// Coefficients over `index` of a homogeneous polynomial of this degree.
    pub(crate) fn expand(&self, f: &SymPoly) -> Result<Vec<Scalar>> {
        let target: Vec<Scalar> = self.coords.iter().map(|nu| f.coeff(nu)).collect();
        self.solver.solve(&target)
    }

    pub(crate) fn rank(&self) -> usize {
        self.solver.rank()
    }
}

static SLICES: Memo<(BasisFamily, usize, usize, Option<usize>), FamilySlice> = Memo::new();

/// The degree-`degree` slice of `family` in k variables; with `restrict_n`
/// the index set is P_{k,n-k}(degree) instead of the family's natural one.
pub(crate) fn family_slice(
    family: BasisFamily,
    degree: usize,
    k: usize,
    restrict_n: Option<usize>,
) -> Arc<FamilySlice> {
    SLICES.get_or_insert_with(&(family, degree, k, restrict_n), || {
        let index = match restrict_n {
            Some(n) => boxed(degree, k, n),
            None => family.natural_index(degree, k),
        };
        let coords = at_most_parts(degree, k);
        let columns: Vec<Vec<BigRational>> = index
            .iter()
            .map(|l| {
                let e = element(family, l, k);
                coords.iter().map(|nu| e.coeff(nu).coeff(0)).collect()
            })
            .collect();
        let solver = SpanSolver::new(coords.len(), &columns);
        FamilySlice { index, coords, solver }
    })
}

/// Expands `f` in `family` (optionally restricted to P_{k,n-k}), degree by degree.
pub fn expand_in_family(
    f: &SymPoly,
    family: BasisFamily,
    restrict_n: Option<usize>,
) -> Result<BTreeMap<Partition, Scalar>> {
    if let Some(n) = restrict_n {
        check_kn(f.k(), n)?;
    }
    let mut out = BTreeMap::new();
    for (d, piece) in f.grade() {
        let slice = family_slice(family, d, f.k(), restrict_n);
        for (l, c) in slice.index.iter().zip(slice.expand(&piece)?) {
            if !c.is_zero() {
                out.insert(l.clone(), c);
            }
        }
    }
    Ok(out)
}

/// Rows of `row_family` expanded in `col_family` on one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMatrix {
    pub degree: usize,
    pub k: usize,
    pub row_family: BasisFamily,
    pub col_family: BasisFamily,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
}

impl TransitionMatrix {
    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&Scalar> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.entries[i][j])
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    /// Unit diagonal, and a nonzero entry at (λ, μ) only when μ ⊴ λ.
    pub fn is_unitriangular_under_dominance(&self) -> bool {
        self.rows == self.cols
            && self.rows.iter().enumerate().all(|(i, lambda)| {
                self.cols.iter().enumerate().all(|(j, mu)| {
                    let e = &self.entries[i][j];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero() || mu.dominated_by(lambda)
                    }
                })
            })
    }
}

/// Transition matrix on S_degree: each row element expanded exactly in the
/// column family. With `restrict_n`, both index lists are P_{k,n-k}(degree).
pub fn transition_matrix(
    row_family: BasisFamily,
    col_family: BasisFamily,
    degree: usize,
    k: usize,
    restrict_n: Option<usize>,
) -> Result<TransitionMatrix> {
    match restrict_n {
        Some(n) => check_kn(k, n)?,
        None if k < 1 => return Err(Error::InvalidParameters("k must be at least 1".into())),
        None => {}
    }
    let cols = family_slice(col_family, degree, k, restrict_n);
    if !cols.solver.is_independent() {
        return Err(Error::Singular { rank: cols.rank(), size: cols.index.len() });
    }
    let rows = match restrict_n {
        Some(n) => boxed(degree, k, n),
        None => row_family.natural_index(degree, k),
    };
    let entries = rows
        .iter()
        .map(|l| cols.expand(&element(row_family, l, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TransitionMatrix {
        degree,
        k,
        row_family,
        col_family,
        rows,
        cols: cols.index.clone(),
        entries,
    })
}

/// Coefficients b_{λ,μ} of m_λ = Σ b_{λ,μ} p_μ in Λ_{|λ|}.
///
/// Λ_i is modelled by symmetric polynomials in i variables, where the
/// monomials of degree i are all linearly independent.
pub fn m_to_p_lambda(lambda: &Partition) -> BTreeMap<Partition, Scalar> {
    let i = lambda.weight();
    if i == 0 {
        return BTreeMap::from([(Partition::empty(), Scalar::one())]);
    }
    let slice = family_slice(BasisFamily::PowerSum, i, i, None);
    let coeffs = slice
        .expand(&SymPoly::monomial(i, lambda))
        .expect("power sums form a basis of Λ_i over Q");
    slice
        .index
        .iter()
        .cloned()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
