#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use symquot::mixedbasis::Generator;
use symquot::partition::{enumerate, PartitionSet};
use symquot::quotient::{lr_oracle, QuotientSpec};
use symquot::{Partition, Scalar, SymPoly};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// All (k, n) with 1 ≤ k ≤ n ≤ max_n.
pub fn kn_grid(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |k| (k, n))).collect()
}

pub fn box_partitions(k: usize, n: usize) -> Vec<Partition> {
    (0..=k * (n - k))
        .flat_map(|i| enumerate(i, PartitionSet::Box { k, n }).unwrap())
        .collect()
}

/// Σ_ν c^ν_{λμ} s_ν over ν with at most k rows, by tableau counting.
pub fn lr_product(lambda: &Partition, mu: &Partition, k: usize) -> BTreeMap<Partition, u64> {
    enumerate(lambda.weight() + mu.weight(), PartitionSet::AtMostParts { k })
        .unwrap()
        .into_iter()
        .filter_map(|nu| {
            let c = lr_oracle(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Classical product in H*(Gr(k, n)): LR terms that fit the k x (n-k) box.
pub fn classical_oracle(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> BTreeMap<Partition, Scalar> {
    lr_product(lambda, mu, k)
        .into_iter()
        .filter(|(nu, _)| nu.fits_box(k, n - k))
        .map(|(nu, c)| (nu, Scalar::from_int(c as i64)))
        .collect()
}

/// Strips n-rim hooks from ν (ℓ(ν) ≤ k) via beta-numbers β_i = ν_i + k - i.
/// Returns the n-core, the number of hooks removed, and Π (-1)^{k - height}.
pub fn strip_rim_hooks(nu: &Partition, k: usize, n: usize) -> (Partition, u32, i64) {
    let mut beta: Vec<usize> = (0..k).map(|i| nu.part(i) + k - 1 - i).collect();
    let mut hooks = 0;
    let mut sign = 1;
    loop {
        let pick = beta
            .iter()
            .copied()
            .filter(|&b| b >= n && !beta.contains(&(b - n)))
            .max();
        let Some(b) = pick else { break };
        let between = beta.iter().filter(|&&x| x > b - n && x < b).count();
        let height = 1 + between;
        if (k - height) % 2 == 1 {
            sign = -sign;
        }
        hooks += 1;
        for x in beta.iter_mut() {
            if *x == b {
                *x = b - n;
            }
        }
        beta.sort_unstable_by(|a, b| b.cmp(a));
    }
    let parts: Vec<usize> = beta.iter().enumerate().map(|(i, b)| b - (k - 1 - i)).collect();
    (Partition::new(parts).unwrap(), hooks, sign)
}

/// Quantum product in QH*(Gr(k, n)) by the rim-hook rule.
pub fn rim_hook_oracle(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> BTreeMap<Partition, Scalar> {
    let mut out: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (nu, c) in lr_product(lambda, mu, k) {
        let (core, hooks, sign) = strip_rim_hooks(&nu, k, n);
        if !core.fits_box(k, n - k) {
            continue;
        }
        let term = &Scalar::q().pow(hooks) * &Scalar::from_int(sign * c as i64);
        *out.entry(core).or_default() += &term;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn random_scalar(rng: &mut ChaCha8Rng, with_q: bool) -> Scalar {
    let num = rng.gen_range(-4i64..=4);
    let den = [1, 1, 2, 3][rng.gen_range(0..4)];
    let c = Scalar::from_ratio(if num == 0 { 1 } else { num }, den);
    if with_q && rng.gen_bool(0.3) {
        &c * &Scalar::q().pow(rng.gen_range(1..=2))
    } else {
        c
    }
}

/// A random symmetric polynomial in k variables with terms of degree ≤ max_degree.
pub fn random_sympoly(rng: &mut ChaCha8Rng, k: usize, max_degree: usize, terms: usize, with_q: bool) -> SymPoly {
    let mut f = SymPoly::zero(k);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let shapes = enumerate(d, PartitionSet::AtMostParts { k }).unwrap();
        let lambda = &shapes[rng.gen_range(0..shapes.len())];
        f.add_term(lambda.clone(), &random_scalar(rng, with_q));
    }
    f
}

/// A spec whose every b_t is a random polynomial of degree < t.
pub fn random_spec(rng: &mut ChaCha8Rng, k: usize, n: usize, family: Generator) -> QuotientSpec {
    let defs = (n - k + 1..=n)
        .map(|t| (t, random_sympoly(rng, k, t - 1, 2, true)))
        .collect();
    QuotientSpec::new(k, n, family, defs).expect("degrees are below t")
}

/// The deformation grid: undeformed, quantum-style b_n, one random spec.
pub fn spec_grid(rng: &mut ChaCha8Rng, k: usize, n: usize) -> Vec<QuotientSpec> {
    let sign = if k % 2 == 1 { Scalar::q() } else { -Scalar::q() };
    let mut specs = Vec::new();
    for family in [Generator::PowerSum, Generator::Complete] {
        specs.push(QuotientSpec::new(k, n, family, BTreeMap::new()).unwrap());
        let quantum = BTreeMap::from([(n, SymPoly::constant(k, sign.clone()))]);
        specs.push(QuotientSpec::new(k, n, family, quantum).unwrap());
        specs.push(random_spec(rng, k, n, family));
    }
    specs
}

/// Integration tests have no lib.rs beside them, so regression files are off.
pub fn cases(n: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config { cases: n, failure_persistence: None, ..Default::default() }
}
