//! Degree-by-degree rank checks for the families {h_λ p_μ} and {h_{λ'} p_μ},
//! λ ∈ P_{k,n-k}, μ ∈ Q_{n-k+1,n}, which are conjectured (not known) to be
//! bases. Reports are evidence only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::{element, BasisFamily};
use crate::error::{Error, Result};
use crate::mixedbasis::{BasisVerdict, FirstFamily, Generator, MixedVariant};
use crate::partition::{check_kn, Partition};
use crate::polyring::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjectureVariant {
    /// h_λ p_μ
    #[serde(rename = "7.1")]
    Complete,
    /// h_{λ'} p_μ
    #[serde(rename = "7.2")]
    ConjugateComplete,
}

impl ConjectureVariant {
    pub fn label(self) -> &'static str {
        match self {
            ConjectureVariant::Complete => "7.1",
            ConjectureVariant::ConjugateComplete => "7.2",
        }
    }
}

impl FromStr for ConjectureVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "7.1" => Ok(ConjectureVariant::Complete),
            "7.2" => Ok(ConjectureVariant::ConjugateComplete),
            other => Err(Error::Parse(format!("unknown conjecture variant {other:?}"))),
        }
    }
}

impl fmt::Display for ConjectureVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub variant: ConjectureVariant,
    pub k: usize,
    pub n: usize,
    pub degrees: Vec<BasisVerdict>,
    /// Whether the λ-part spans the quotient by J in every checked degree.
    /// A basis of S_i in each degree gives this, so it is read off the same matrices.
    pub quotient_claim: bool,
}

impl ConjectureReport {
    pub fn is_ok(&self) -> bool {
        self.degrees.iter().all(BasisVerdict::is_ok)
    }

    /// The lowest degree whose candidate matrix is not square and invertible.
    pub fn first_failure(&self) -> Option<&BasisVerdict> {
        self.degrees.iter().find(|v| !v.is_ok())
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "conjecture {} k={} n={}\n{:>6} {:>10} {:>9} {:>5}  verdict\n",
            self.variant, self.k, self.n, "degree", "candidates", "dimension", "rank"
        );
        for v in &self.degrees {
            let verdict = if v.is_ok() { "ok" } else { "SINGULAR" };
            out.push_str(&format!(
                "{:>6} {:>10} {:>9} {:>5}  {verdict}\n",
                v.degree, v.candidates, v.dimension, v.rank
            ));
        }
        out
    }
}

fn candidate(variant: ConjectureVariant, k: usize, lambda: &Partition, mu: &Partition) -> SymPoly {
    let index = match variant {
        ConjectureVariant::Complete => lambda.clone(),
        ConjectureVariant::ConjugateComplete => lambda.conjugate(),
    };
    let h = element(BasisFamily::Complete, &index, k);
    let p = element(BasisFamily::PowerSum, mu, k);
    &*h * &*p
}

pub fn check_conjecture(
    variant: ConjectureVariant,
    k: usize,
    n: usize,
    max_degree: usize,
) -> Result<ConjectureReport> {
    check_kn(k, n)?;
    // only the index sets of this variant are used
    let mixed = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, k, n)?;
    let degrees: Vec<BasisVerdict> = (0..=max_degree)
        .map(|i| {
            let elements: Vec<SymPoly> =
                mixed.index(i).iter().map(|(l, m)| candidate(variant, k, l, m)).collect();
            BasisVerdict::from_elements(i, k, &elements)
        })
        .collect();
    let quotient_claim = degrees.iter().all(BasisVerdict::is_ok);
    Ok(ConjectureReport { variant, k, n, degrees, quotient_claim })
}
