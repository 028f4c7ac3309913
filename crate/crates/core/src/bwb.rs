//! Borel–Weil–Bott on `P^{n-1} = PV`, `dim V = n`.
//!
//! For `Σ^λQ ⊗ L^m` form `v = (λ_1, …, λ_{n-1}, m) + ρ` with
//! `ρ = (n, n-1, …, 1)`. A repeated entry means all cohomology vanishes.
//! Otherwise the only nonzero group sits in degree `#{i < j : v_i < v_j}`
//! and is `Σ^{sort↓(v) - ρ} V`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::BundleExpr;
use crate::normalize::normalize;
use crate::partition::{schur_dim, Mult, Partition};

/// A dominant `Gl(n)` weight: weakly decreasing integers, negatives allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlWeight(Vec<i64>);

impl GlWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "weight {entries:?} is not weakly decreasing"
            )));
        }
        Ok(GlWeight(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weight as a partition, when every entry is nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect()).ok()
    }

    /// Dimension of the irreducible `Gl(n)`-module of this highest weight.
    /// Shifting by a power of the determinant does not change it.
    pub fn dim(&self) -> Mult {
        let shift = self.0.last().copied().unwrap_or(0).min(0);
        let parts = self.0.iter().map(|&x| (x - shift) as u32).collect();
        schur_dim(&Partition::from_sorted(parts), self.0.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GlWeight {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BwbResult {
    Vanishes,
    Cohomology { degree: usize, weight: GlWeight },
}

impl BwbResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbResult::Vanishes => None,
            BwbResult::Cohomology { degree, .. } => Some(*degree),
        }
    }
}

/// `(λ, m) + ρ` with `λ` zero-padded to length `n - 1`.
pub fn rho_shift(n: usize, lambda: &Partition, m: i64) -> Vec<i64> {
    (0..n - 1)
        .map(|i| lambda.part(i) as i64 + (n - i) as i64)
        .chain(std::iter::once(m + 1))
        .collect()
}

fn check_input(n: usize, lambda: &Partition) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if lambda.len() > n - 1 {
        return Err(Error::Precondition(format!(
            "partition ({lambda}) has {} parts but Q has rank {}",
            lambda.len(),
            n - 1
        )));
    }
    Ok(())
}

/// Cohomology of `Σ^λQ ⊗ L^m` on `P^{n-1}`.
pub fn bwb_irreducible(n: usize, lambda: &Partition, m: i64) -> Result<BwbResult> {
    check_input(n, lambda)?;
    let v = rho_shift(n, lambda, m);
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(BwbResult::Vanishes);
    }
    let degree = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| v[i] < v[j])
        .count();
    let weight = sorted
        .iter()
        .enumerate()
        .map(|(i, x)| x - (n - i) as i64)
        .collect();
    Ok(BwbResult::Cohomology {
        degree,
        weight: GlWeight(weight),
    })
}

/// Cohomology of `O(-m) = L^m` on `P^{n-1}`: vanishes for `m < n`, else
/// `H^{n-1} = Sym^{m-n}V ⊗ det V`. For `m ≤ 0` there are sections, which
/// come from the general rule.
pub fn bwb_line(n: usize, m: i64) -> Result<BwbResult> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if m <= 0 {
        return bwb_irreducible(n, &Partition::empty(), m);
    }
    if m < n as i64 {
        return Ok(BwbResult::Vanishes);
    }
    let mut weight = vec![1; n];
    weight[0] = m - n as i64 + 1;
    Ok(BwbResult::Cohomology {
        degree: n - 1,
        weight: GlWeight(weight),
    })
}

/// Euler characteristic of `Σ^λQ ⊗ L^m` from the Weyl dimension polynomial
/// at the ρ-shifted weight. This needs no sorting: the sign of the product
/// records the parity of the permutation.
pub fn euler_characteristic(n: usize, lambda: &Partition, m: i64) -> i128 {
    let v = rho_shift(n, lambda, m);
    let (mut num, mut den): (i128, i128) = (1, 1);
    for i in 0..n {
        for j in i + 1..n {
            num *= (v[i] - v[j]) as i128;
            den *= (j - i) as i128;
        }
    }
    num / den
}

/// Cohomology of a bundle, degree by degree, as `Gl(n)`-modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub ambient: usize,
    pub by_degree: BTreeMap<usize, BTreeMap<GlWeight, Mult>>,
}

impl CohomologyTable {
    pub fn new(ambient: usize) -> Self {
        CohomologyTable {
            ambient,
            by_degree: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, degree: usize, weight: GlWeight, mult: Mult) {
        if mult > 0 {
            *self
                .by_degree
                .entry(degree)
                .or_default()
                .entry(weight)
                .or_insert(0) += mult;
        }
    }

    pub fn degree(&self, q: usize) -> Option<&BTreeMap<GlWeight, Mult>> {
        self.by_degree.get(&q)
    }

    pub fn dim(&self, q: usize) -> Mult {
        self.degree(q)
            .map(|reps| reps.iter().map(|(w, c)| c * w.dim()).sum())
            .unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.by_degree
            .keys()
            .map(|&q| {
                let d = self.dim(q) as i128;
                if q % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }
}

/// Normalizes `e` and applies Borel–Weil–Bott to every irreducible summand.
pub fn cohomology(e: &BundleExpr, n: usize) -> Result<CohomologyTable> {
    let sum = normalize(e, n)?;
    let mut table = CohomologyTable::new(n);
    for (lambda, m, mult) in sum.iter() {
        if let BwbResult::Cohomology { degree, weight } = bwb_irreducible(n, lambda, m)? {
            table.add(degree, weight, mult);
        }
    }
    Ok(table)
}
