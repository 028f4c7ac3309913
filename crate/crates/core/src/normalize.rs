//! Normalization of bundle expressions into sums of irreducibles
//! `Σ^λQ ⊗ L^m` on `P^{n-1}`.
//!
//! Constants are tracked by dimension only and folded into multiplicities.
//! Schur functors are pushed through the tree with the Cauchy identities
//! (`Sym`/`Λ` of a tensor product), LR branching (any `Σ^λ` of a direct
//! sum) and LR products (tensor products of irreducibles). Genuine
//! plethysm, e.g. `Sym^2(Sym^2 Q)`, is reported as unsupported.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::BundleExpr;
use crate::partition::{
    cauchy_sym, cauchy_wedge, lr_mult, schur_branch_sum, schur_dim, Mult, Partition,
};

/// `⊕ mult·Σ^λQ ⊗ L^m` on `P^{n-1}`, with `length(λ) ≤ n - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrrSum {
    ambient: usize,
    terms: BTreeMap<(Partition, i64), Mult>,
}

impl IrrSum {
    pub fn zero(ambient: usize) -> Self {
        IrrSum {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(ambient: usize) -> Self {
        IrrSum::irreducible(ambient, Partition::empty(), 0)
    }

    pub fn irreducible(ambient: usize, lambda: Partition, m: i64) -> Self {
        let mut s = IrrSum::zero(ambient);
        s.add(lambda, m, 1);
        s
    }

    pub fn constant(ambient: usize, dim: Mult) -> Self {
        let mut s = IrrSum::zero(ambient);
        s.add(Partition::empty(), 0, dim);
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Adds `mult` copies of `Σ^λQ ⊗ L^m`; terms with `length(λ) > n - 1`
    /// are zero bundles and dropped.
    pub fn add(&mut self, lambda: Partition, m: i64, mult: Mult) {
        if mult > 0 && lambda.len() < self.ambient {
            *self.terms.entry((lambda, m)).or_insert(0) += mult;
        }
    }

    pub fn get(&self, lambda: &Partition, m: i64) -> Mult {
        self.terms.get(&(lambda.clone(), m)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64, Mult)> {
        self.terms.iter().map(|((l, m), &c)| (l, *m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult·dim Σ^λ(C^{n-1})`.
    pub fn total_dim(&self) -> Mult {
        self.iter()
            .map(|(l, _, c)| c * schur_dim(l, self.ambient - 1))
            .sum()
    }

    pub fn add_all(&mut self, other: &IrrSum) {
        for (l, m, c) in other.iter() {
            self.add(l.clone(), m, c);
        }
    }

    pub fn scaled(&self, factor: Mult) -> IrrSum {
        let mut out = IrrSum::zero(self.ambient);
        for (l, m, c) in self.iter() {
            out.add(l.clone(), m, c * factor);
        }
        out
    }

    pub fn tensor(&self, other: &IrrSum) -> IrrSum {
        let cap = self.ambient - 1;
        let mut out = IrrSum::zero(self.ambient);
        for (l1, m1, c1) in self.iter() {
            for (l2, m2, c2) in other.iter() {
                for (nu, c) in lr_mult(l1, l2, cap).iter() {
                    out.add(nu.clone(), m1 + m2, c1 * c2 * c);
                }
            }
        }
        out
    }

    /// The multiplicity of the trivial bundle when nothing else occurs.
    pub fn as_constant(&self) -> Option<Mult> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let ((l, m), c) = self.terms.iter().next()?;
                (l.is_empty() && *m == 0).then_some(*c)
            }
            _ => None,
        }
    }

    /// Re-embeds the sum as an expression `⊕ const ⊗ Σ^λQ ⊗ L^m`.
    pub fn to_expr(&self) -> BundleExpr {
        let mut summands: Vec<BundleExpr> = self
            .iter()
            .map(|(l, m, c)| {
                let mut factors = Vec::new();
                if c > 1 {
                    factors.push(BundleExpr::Const {
                        dim: c as usize,
                        label: None,
                    });
                }
                if !l.is_empty() {
                    factors.push(BundleExpr::schur(l.clone(), BundleExpr::q()));
                }
                if m != 0 || factors.is_empty() {
                    factors.push(BundleExpr::line(m));
                }
                if factors.len() == 1 {
                    factors.pop().unwrap()
                } else {
                    BundleExpr::Tensor(factors)
                }
            })
            .collect();
        if summands.len() == 1 {
            summands.pop().unwrap()
        } else {
            BundleExpr::Sum(summands)
        }
    }
}

impl fmt::Debug for IrrSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|((l, m), c)| (format!("{l:?}⊗L^{m}"), c)),
            )
            .finish()
    }
}

impl fmt::Display for IrrSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, m, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c > 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "S({l})Q")?;
            if m != 0 {
                write!(f, "*L^{m}")?;
            }
        }
        Ok(())
    }
}

/// One normalized summand, as it appears in JSON reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrTerm {
    pub lambda: Partition,
    pub m: i64,
    pub mult: Mult,
}

impl Serialize for IrrSum {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<IrrTerm> = self
            .iter()
            .map(|(l, m, c)| IrrTerm {
                lambda: l.clone(),
                m,
                mult: c,
            })
            .collect();
        terms.serialize(serializer)
    }
}

/// Normalizes `e` on `P^{n-1}`.
pub fn normalize(e: &BundleExpr, n: usize) -> Result<IrrSum> {
    Normalizer::new(n)?.normalize(e)
}

/// Normalizes `Σ^λ(e)` on `P^{n-1}`.
pub fn schur_of(lambda: &Partition, e: &BundleExpr, n: usize) -> Result<IrrSum> {
    Normalizer::new(n)?.schur_of(lambda, e)
}

/// `Σ mult·dim Σ^λ(C^{n-1})`.
pub fn total_dim(s: &IrrSum) -> Mult {
    s.total_dim()
}

struct Normalizer {
    n: usize,
}

impl Normalizer {
    fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "ambient dimension n must be at least 2, got {n}"
            )));
        }
        Ok(Normalizer { n })
    }

    fn check_ambient(&self, ambient: &Option<usize>) -> Result<()> {
        match ambient {
            Some(found) if *found != self.n => Err(Error::AmbientMismatch {
                expected: self.n,
                found: *found,
            }),
            _ => Ok(()),
        }
    }

    fn normalize(&self, e: &BundleExpr) -> Result<IrrSum> {
        let n = self.n;
        match e {
            BundleExpr::Quotient { ambient } => {
                self.check_ambient(ambient)?;
                Ok(IrrSum::irreducible(n, Partition::row(1), 0))
            }
            BundleExpr::Line(p) => Ok(IrrSum::irreducible(n, Partition::empty(), *p)),
            BundleExpr::Const { dim, .. } => Ok(IrrSum::constant(n, *dim as Mult)),
            BundleExpr::BaseRestricted(inner) => {
                self.validate(inner)?;
                Ok(IrrSum::constant(n, inner.rank(n)))
            }
            BundleExpr::Sum(items) => {
                let mut out = IrrSum::zero(n);
                for item in items {
                    out.add_all(&self.normalize(item)?);
                }
                Ok(out)
            }
            BundleExpr::Tensor(items) => {
                let mut out = IrrSum::trivial(n);
                for item in items {
                    out = out.tensor(&self.normalize(item)?);
                }
                Ok(out)
            }
            BundleExpr::SymPow(j, inner) => self.schur_of(&Partition::row(*j), inner),
            BundleExpr::WedgePow(j, inner) => self.schur_of(&Partition::column(*j as usize), inner),
            BundleExpr::Schur(lambda, inner) => self.schur_of(lambda, inner),
            BundleExpr::Det(inner) => {
                let r = inner.rank(n) as usize;
                self.schur_of(&Partition::column(r), inner)
            }
        }
    }

    /// Ambient checks for subtrees that are otherwise only measured by rank.
    fn validate(&self, e: &BundleExpr) -> Result<()> {
        match e {
            BundleExpr::Quotient { ambient } => self.check_ambient(ambient),
            BundleExpr::Line(_) | BundleExpr::Const { .. } => Ok(()),
            BundleExpr::Sum(items) | BundleExpr::Tensor(items) => {
                items.iter().try_for_each(|i| self.validate(i))
            }
            BundleExpr::BaseRestricted(inner)
            | BundleExpr::SymPow(_, inner)
            | BundleExpr::WedgePow(_, inner)
            | BundleExpr::Schur(_, inner)
            | BundleExpr::Det(inner) => self.validate(inner),
        }
    }

    fn schur_of(&self, lambda: &Partition, e: &BundleExpr) -> Result<IrrSum> {
        let n = self.n;
        if lambda.is_empty() {
            self.validate(e)?;
            return Ok(IrrSum::trivial(n));
        }
        if lambda == &Partition::row(1) {
            return self.normalize(e);
        }
        let rank = e.rank(n);
        if lambda.len() as Mult > rank {
            self.validate(e)?;
            return Ok(IrrSum::zero(n));
        }
        match e {
            BundleExpr::Quotient { ambient } => {
                self.check_ambient(ambient)?;
                Ok(IrrSum::irreducible(n, lambda.clone(), 0))
            }
            // rank one, so λ is a single row here
            BundleExpr::Line(p) => Ok(IrrSum::irreducible(
                n,
                Partition::empty(),
                p * lambda.part(0) as i64,
            )),
            BundleExpr::Const { .. } | BundleExpr::BaseRestricted(_) => {
                self.validate(e)?;
                Ok(IrrSum::constant(n, schur_dim(lambda, rank as usize)))
            }
            BundleExpr::Sum(items) => self.schur_of_sum(lambda, items),
            BundleExpr::Tensor(items) => self.schur_of_tensor(lambda, items),
            BundleExpr::SymPow(..)
            | BundleExpr::WedgePow(..)
            | BundleExpr::Schur(..)
            | BundleExpr::Det(_) => {
                let inner = self.normalize(e)?;
                self.schur_of_irrsum(lambda, &inner)
                    .ok_or_else(|| plethysm_error(lambda, e))
            }
        }
    }

    fn schur_of_sum(&self, lambda: &Partition, items: &[BundleExpr]) -> Result<IrrSum> {
        let n = self.n;
        match items {
            [] => Ok(IrrSum::zero(n)),
            [only] => self.schur_of(lambda, only),
            [first, rest @ ..] => {
                let rest = BundleExpr::Sum(rest.to_vec());
                let cap_a = first.rank(n).min(lambda.len() as Mult) as usize;
                let cap_b = rest.rank(n).min(lambda.len() as Mult) as usize;
                let mut out = IrrSum::zero(n);
                for ((mu, nu), c) in schur_branch_sum(lambda, cap_a, cap_b) {
                    let a = self.schur_of(&mu, first)?;
                    if a.is_empty() {
                        continue;
                    }
                    let b = self.schur_of(&nu, &rest)?;
                    out.add_all(&a.tensor(&b).scaled(c));
                }
                Ok(out)
            }
        }
    }

    fn schur_of_tensor(&self, lambda: &Partition, items: &[BundleExpr]) -> Result<IrrSum> {
        let n = self.n;
        let mut const_dim: Mult = 1;
        let mut line_part = IrrSum::trivial(n);
        let mut rest: Vec<BundleExpr> = Vec::new();
        for item in items {
            if item.is_constant() {
                self.validate(item)?;
                const_dim *= item.rank(n);
            } else if item.rank(n) == 1 {
                line_part = line_part.tensor(&self.normalize(item)?);
            } else {
                rest.push(item.clone());
            }
        }
        let line_power = self
            .rank_one_power(&line_part, lambda.size())
            .expect("a tensor of rank-one bundles is a single irreducible of rank one");

        let core = if rest.is_empty() {
            IrrSum::constant(n, schur_dim(lambda, const_dim as usize))
        } else {
            let varying = if rest.len() == 1 {
                rest.pop().unwrap()
            } else {
                BundleExpr::Tensor(rest)
            };
            if const_dim == 1 {
                match &varying {
                    BundleExpr::Tensor(factors) => self.schur_of_product(lambda, factors)?,
                    single => self.schur_of(lambda, single)?,
                }
            } else {
                self.schur_of_const_tensor(lambda, &varying, const_dim)?
            }
        };
        Ok(core.tensor(&line_power))
    }

    /// `Σ^λ(X ⊗ C^d)` for `λ` a row or a column, via the Cauchy identities.
    fn schur_of_const_tensor(&self, lambda: &Partition, x: &BundleExpr, d: Mult) -> Result<IrrSum> {
        let n = self.n;
        let rank_x = x.rank(n) as usize;
        let j = lambda.size();
        let mut out = IrrSum::zero(n);
        if lambda.is_row() {
            for (mu, _) in cauchy_sym(j, rank_x, d as usize).iter() {
                out.add_all(&self.schur_of(mu, x)?.scaled(schur_dim(mu, d as usize)));
            }
        } else if lambda.is_column() {
            for (mu, _) in cauchy_wedge(j, rank_x, d as usize).iter() {
                out.add_all(
                    &self
                        .schur_of(mu, x)?
                        .scaled(schur_dim(&mu.conjugate(), d as usize)),
                );
            }
        } else {
            let inner = self.normalize(&BundleExpr::tensor([
                x.clone(),
                BundleExpr::Const {
                    dim: d as usize,
                    label: None,
                },
            ]))?;
            return self
                .schur_of_irrsum(lambda, &inner)
                .ok_or_else(|| plethysm_error(lambda, x));
        }
        Ok(out)
    }

    /// `Σ^λ(A ⊗ B ⊗ …)` with no constant or rank-one factor.
    fn schur_of_product(&self, lambda: &Partition, factors: &[BundleExpr]) -> Result<IrrSum> {
        let n = self.n;
        let (first, rest) = factors.split_first().expect("at least two factors");
        let rest = if rest.len() == 1 {
            rest[0].clone()
        } else {
            BundleExpr::Tensor(rest.to_vec())
        };
        let j = lambda.size();
        let (ra, rb) = (first.rank(n) as usize, rest.rank(n) as usize);
        let mut out = IrrSum::zero(n);
        if lambda.is_row() {
            for (mu, _) in cauchy_sym(j, ra, rb).iter() {
                out.add_all(&self.schur_of(mu, first)?.tensor(&self.schur_of(mu, &rest)?));
            }
        } else if lambda.is_column() {
            for (mu, _) in cauchy_wedge(j, ra, rb).iter() {
                out.add_all(
                    &self
                        .schur_of(mu, first)?
                        .tensor(&self.schur_of(&mu.conjugate(), &rest)?),
                );
            }
        } else {
            let whole = BundleExpr::Tensor(factors.to_vec());
            let inner = self.normalize(&whole)?;
            return self
                .schur_of_irrsum(lambda, &inner)
                .ok_or_else(|| plethysm_error(lambda, &whole));
        }
        Ok(out)
    }

    /// `(ℓ)^{⊗s}` for a rank-one irreducible `ℓ = Σ^{(c^{n-1})}Q ⊗ L^m`.
    fn rank_one_power(&self, s: &IrrSum, power: u32) -> Option<IrrSum> {
        let (l, m, c) = single_term(s)?;
        if c != 1 || schur_dim(l, self.n - 1) != 1 {
            return None;
        }
        Some(IrrSum::irreducible(
            self.n,
            l.scale(power),
            m * power as i64,
        ))
    }

    /// `Σ^λ` of an already normalized sum, for the cases that need no
    /// plethysm: constants, rank-one summands, and `Q ⊗ L^m` with any
    /// multiplicity. Returns `None` otherwise.
    fn schur_of_irrsum(&self, lambda: &Partition, s: &IrrSum) -> Option<IrrSum> {
        let n = self.n;
        if lambda.is_empty() {
            return Some(IrrSum::trivial(n));
        }
        if lambda == &Partition::row(1) {
            return Some(s.clone());
        }
        if s.is_empty() {
            return Some(IrrSum::zero(n));
        }
        if let Some(d) = s.as_constant() {
            return Some(IrrSum::constant(n, schur_dim(lambda, d as usize)));
        }
        if s.len() > 1 {
            let mut iter = s.iter();
            let (l, m, c) = iter.next()?;
            let first = IrrSum::irreducible(n, l.clone(), m).scaled(c);
            let mut rest = IrrSum::zero(n);
            for (l, m, c) in iter {
                rest.add(l.clone(), m, c);
            }
            let cap_a = first.total_dim().min(lambda.len() as Mult) as usize;
            let cap_b = rest.total_dim().min(lambda.len() as Mult) as usize;
            let mut out = IrrSum::zero(n);
            for ((mu, nu), c) in schur_branch_sum(lambda, cap_a, cap_b) {
                let a = self.schur_of_irrsum(&mu, &first)?;
                if a.is_empty() {
                    continue;
                }
                let b = self.schur_of_irrsum(&nu, &rest)?;
                out.add_all(&a.tensor(&b).scaled(c));
            }
            return Some(out);
        }
        let (l, m, c) = single_term(s)?;
        let base = IrrSum::irreducible(n, l.clone(), m);
        let apply = |mu: &Partition| -> Option<IrrSum> {
            if mu.is_empty() {
                Some(IrrSum::trivial(n))
            } else if schur_dim(l, n - 1) == 1 {
                if mu.len() > 1 {
                    Some(IrrSum::zero(n))
                } else {
                    self.rank_one_power(&base, mu.size())
                }
            } else if l == &Partition::row(1) {
                Some(IrrSum::irreducible(n, mu.clone(), m * mu.size() as i64))
            } else if mu == &Partition::row(1) {
                Some(base.clone())
            } else {
                None
            }
        };
        if c == 1 {
            return apply(lambda);
        }
        let rank_v = schur_dim(l, n - 1) as usize;
        let j = lambda.size();
        let mut out = IrrSum::zero(n);
        if lambda.is_row() {
            for (mu, _) in cauchy_sym(j, rank_v, c as usize).iter() {
                out.add_all(&apply(mu)?.scaled(schur_dim(mu, c as usize)));
            }
        } else if lambda.is_column() {
            for (mu, _) in cauchy_wedge(j, rank_v, c as usize).iter() {
                out.add_all(&apply(mu)?.scaled(schur_dim(&mu.conjugate(), c as usize)));
            }
        } else {
            return None;
        }
        Some(out)
    }
}

fn single_term(s: &IrrSum) -> Option<(&Partition, i64, Mult)> {
    let mut iter = s.iter();
    let first = iter.next()?;
    iter.next().is_none().then_some(first)
}

fn plethysm_error(lambda: &Partition, e: &BundleExpr) -> Error {
    Error::Unsupported(format!(
        "Σ^({lambda}) applied to {e} needs a plethysm or Kronecker decomposition"
    ))
}
