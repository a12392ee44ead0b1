//! Integer partitions, the families P, P_k, P_{k,n-k}, Q_{n-k+1,n}, and the
//! counting series that relate them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts` (trailing zeros are accepted and dropped).
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts an arbitrary exponent vector into a partition.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut parts: Vec<usize> = exponents.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// λ_1, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// λ_{i+1} with zero padding (0-based index).
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        Partition((1..=width).map(|i| self.0.iter().take_while(|&&p| p >= i).count()).collect())
    }

    /// λ ⊴ μ: every prefix sum of `self` is at most the matching prefix sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// True when λ ∈ P_{k,width}, i.e. the diagram fits in a k × width box.
    pub fn fits_box(&self, rows: usize, width: usize) -> bool {
        self.len() <= rows && self.largest() <= width
    }

    /// True when every part lies in `lo..=hi`.
    pub fn parts_within(&self, lo: usize, hi: usize) -> bool {
        self.0.iter().all(|&p| lo <= p && p <= hi)
    }

    /// The partition with one more part `m`, inserted in order.
    pub fn with_part(&self, m: usize) -> Partition {
        if m == 0 {
            return self.clone();
        }
        let mut parts = self.0.clone();
        let pos = parts.iter().position(|&p| p < m).unwrap_or(parts.len());
        parts.insert(pos, m);
        Partition(parts)
    }

    /// (λ_2, λ_3, ...)
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Parts padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The constrained partition families used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionSet {
    /// P
    All,
    /// P_k: at most `k` parts.
    AtMostParts { k: usize },
    /// P_{k,n-k}: at most `k` parts, each at most `n - k`.
    Box { k: usize, n: usize },
    /// Q_{n-k+1,n}: any length, every part in `[n-k+1, n]`.
    Band { k: usize, n: usize },
}

impl PartitionSet {
    fn validate(self) -> Result<()> {
        match self {
            PartitionSet::All => Ok(()),
            PartitionSet::AtMostParts { k } => {
                if k < 1 {
                    Err(Error::InvalidParameters("k must be at least 1".into()))
                } else {
                    Ok(())
                }
            }
            PartitionSet::Box { k, n } | PartitionSet::Band { k, n } => check_kn(k, n),
        }
    }

    pub fn contains(self, lambda: &Partition) -> bool {
        match self {
            PartitionSet::All => true,
            PartitionSet::AtMostParts { k } => lambda.len() <= k,
            PartitionSet::Box { k, n } => lambda.fits_box(k, n - k),
            PartitionSet::Band { k, n } => lambda.parts_within(n - k + 1, n),
        }
    }
}

pub(crate) fn check_kn(k: usize, n: usize) -> Result<()> {
    if k < 1 || n < k {
        Err(Error::InvalidParameters(format!("need 1 <= k <= n, got k={k}, n={n}")))
    } else {
        Ok(())
    }
}

/// All partitions of `weight` in `set`, in reverse-lexicographic order.
pub fn enumerate(weight: usize, set: PartitionSet) -> Result<Vec<Partition>> {
    set.validate()?;
    Ok(match set {
        PartitionSet::All => partitions_with(weight, usize::MAX, 1, usize::MAX),
        PartitionSet::AtMostParts { k } => partitions_with(weight, k, 1, usize::MAX),
        PartitionSet::Box { k, n } => partitions_with(weight, k, 1, n - k),
        PartitionSet::Band { k, n } => partitions_with(weight, usize::MAX, n - k + 1, n),
    })
}

/// Unvalidated enumeration: at most `max_len` parts, each in `min_part..=max_part`.
pub(crate) fn partitions_with(
    weight: usize,
    max_len: usize,
    min_part: usize,
    max_part: usize,
) -> Vec<Partition> {
    fn go(
        rem: usize,
        max_len: usize,
        min_part: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        let top = max_part.min(rem);
        if top < min_part {
            return;
        }
        for p in (min_part..=top).rev() {
            let rest = rem - p;
            if rest != 0 && rest < min_part {
                continue;
            }
            prefix.push(p);
            go(rest, max_len - 1, min_part, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, max_len, min_part.max(1), max_part, &mut Vec::new(), &mut out);
    out
}

/// P_k(i) without validation; `k >= 1` assumed.
pub(crate) fn at_most_parts(weight: usize, k: usize) -> Vec<Partition> {
    partitions_with(weight, k, 1, usize::MAX)
}

/// P_{k,n-k}(i) without validation.
pub(crate) fn boxed(weight: usize, k: usize, n: usize) -> Vec<Partition> {
    partitions_with(weight, k, 1, n - k)
}

/// Q_{n-k+1,n}(i) without validation.
pub(crate) fn banded(weight: usize, k: usize, n: usize) -> Vec<Partition> {
    partitions_with(weight, usize::MAX, n - k + 1, n)
}

/// A polynomial in q with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QSeriesPoly {
    coeffs: BTreeMap<usize, i64>,
}

impl QSeriesPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: usize, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Σ counts[i] q^i
    pub fn from_counts(counts: &[usize]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in counts.iter().enumerate() {
            p.add_term(i, c as i64);
        }
        p
    }

    pub fn add_term(&mut self, exp: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn mul(&self, other: &QSeriesPoly) -> QSeriesPoly {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product with every term above q^max_exp dropped.
    pub fn mul_truncated(&self, other: &QSeriesPoly, max_exp: usize) -> QSeriesPoly {
        let mut out = QSeriesPoly::zero();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &other.coeffs {
                if a + b <= max_exp {
                    out.add_term(a + b, x * y);
                }
            }
        }
        out
    }

    pub fn truncated(&self, max_exp: usize) -> QSeriesPoly {
        QSeriesPoly { coeffs: self.coeffs.range(..=max_exp).map(|(&e, &c)| (e, c)).collect() }
    }

    /// Exact division by (1 - q^j); `None` if the quotient is not a polynomial.
    pub fn div_one_minus(&self, j: usize) -> Option<QSeriesPoly> {
        assert!(j > 0);
        let Some(deg) = self.degree() else {
            return Some(QSeriesPoly::zero());
        };
        // c = (1 - q^j) d  =>  d_i = c_i + d_{i-j}
        let mut d = vec![0i64; deg + 1];
        for i in 0..=deg {
            d[i] = self.coeff(i) + if i >= j { d[i - j] } else { 0 };
        }
        // the tail d_{deg-j+1..=deg} multiplied by -q^j must cancel beyond deg
        if d.iter().skip((deg + 1).saturating_sub(j)).any(|&c| c != 0) {
            return None;
        }
        let keep = (deg + 1).saturating_sub(j);
        Some(QSeriesPoly::from_i64(&d[..keep]))
    }

    fn from_i64(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i, c);
        }
        p
    }
}

impl fmt::Display for QSeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// The Gaussian binomial [n choose k]_q = ∏_{j=1}^k (1 - q^{n-k+j}) / (1 - q^j).
pub fn gaussian_binomial(n: usize, k: usize) -> Result<QSeriesPoly> {
    if k > n {
        return Err(Error::InvalidParameters(format!("need k <= n, got k={k}, n={n}")));
    }
    let mut acc = QSeriesPoly::one();
    for j in 1..=k {
        let factor = QSeriesPoly::from_i64(&[1]).sub_monomial(n - k + j);
        acc = acc
            .mul(&factor)
            .div_one_minus(j)
            .expect("partial Gaussian products are polynomials");
    }
    Ok(acc)
}

impl QSeriesPoly {
    fn sub_monomial(mut self, exp: usize) -> Self {
        self.add_term(exp, -1);
        self
    }
}

/// One degree of the counting identity
/// (Σ #P_{k,n-k}(i) q^i)(Σ #Q_{n-k+1,n}(i) q^i) = Σ #P_k(i) q^i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub degree: usize,
    pub boxed: usize,
    pub banded: usize,
    pub at_most_k: usize,
    pub gaussian: i64,
    pub product: i64,
}

impl CountRow {
    pub fn holds(&self) -> bool {
        self.product == self.at_most_k as i64 && self.gaussian == self.boxed as i64
    }
}

/// Per-degree counts for the identity up to q^max_degree, all by enumeration
/// except the Gaussian column.
pub fn count_table(k: usize, n: usize, max_degree: usize) -> Result<Vec<CountRow>> {
    check_kn(k, n)?;
    let boxes: Vec<usize> = (0..=max_degree).map(|i| boxed(i, k, n).len()).collect();
    let bands: Vec<usize> = (0..=max_degree).map(|i| banded(i, k, n).len()).collect();
    let product = QSeriesPoly::from_counts(&boxes)
        .mul_truncated(&QSeriesPoly::from_counts(&bands), max_degree);
    let gauss = gaussian_binomial(n, k)?;
    Ok((0..=max_degree)
        .map(|i| CountRow {
            degree: i,
            boxed: boxes[i],
            banded: bands[i],
            at_most_k: at_most_parts(i, k).len(),
            gaussian: gauss.coeff(i),
            product: product.coeff(i),
        })
        .collect())
}

/// Checks the counting identity coefficientwise up to q^max_degree.
pub fn count_identity_check(k: usize, n: usize, max_degree: usize) -> Result<bool> {
    Ok(count_table(k, n, max_degree)?.iter().all(|r| r.product == r.at_most_k as i64))
}
