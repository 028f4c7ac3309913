//! Koszul resolutions of `F_l = Sym^l((W ⊗ C^k) / (L₂ ⊗ C^k))` for the
//! resolution tower of the A₂ locus `Θ^{n,k}`.
//!
//! Notation: on `P^{n-1}` the tautological sequence is `L₁ → C^n → Q₁`,
//! `V_a = Q₁ ⊕ L₁²` is the rank-`n` bundle whose projectivization is the
//! middle floor of the tower, and `W = Sym²C^n ⊕ Q₁`. On a fiber
//! `P V_a` the tautological line is `L₂`, and `W` is constant.
//!
//! The stage-one complex lives on a fiber:
//!
//! ```text
//! T_p = L₂^p ⊗ Λ^p C^k ⊗ Sym^{l-p}(W ⊗ C^k),   0 ≤ p ≤ min(k, l)
//! ```
//!
//! Pushing it forward along the fiber (only `H^0` of `T_0` and `H^{n-1}`
//! of `T_p`, `p ≥ n`, survive) gives the stage-two complex on `P^{n-1}`:
//!
//! ```text
//! T_0       = Sym^l(W ⊗ C^k)
//! T_{j-n+1} = det Q₁ ⊗ L₁² ⊗ Sym^{j-n}(V_a) ⊗ Λ^j C^k ⊗ Sym^{l-j}(W ⊗ C^k),
//!             n ≤ j ≤ min(k, l)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bwb::{bwb_irreducible, BwbResult};
use crate::error::{Error, Result};
use crate::expr::BundleExpr;
use crate::normalize::normalize;
use crate::partition::{binomial, Mult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl Params {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "n must be at least 2, got {n}"
            )));
        }
        if k < n {
            return Err(Error::Precondition(format!(
                "k must be at least n (got n={n}, k={k})"
            )));
        }
        Ok(Params { n, k, l })
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, l={})", self.n, self.k, self.l)
    }
}

/// Which space the complex lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// A fiber `P V_a` of `P(Q₁ ⊕ L₁²) → P^{n-1}`; resolves `F_l`.
    Fiber,
    /// The base `P^{n-1}`; resolves the fiberwise sections `H^0(P V_a, F_l)`.
    Base,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTerm {
    pub index: usize,
    pub expr: BundleExpr,
}

/// `0 → T_top → … → T_1 → T_0 → (augmentation) → 0`. Differentials are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionComplex {
    pub params: Params,
    pub stage: Stage,
    pub terms: Vec<ResolutionTerm>,
}

impl ResolutionComplex {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, index: usize) -> Option<&ResolutionTerm> {
        self.terms.iter().find(|t| t.index == index)
    }

    /// The sheaf the complex resolves, as text.
    pub fn augmentation(&self) -> String {
        let Params { n, k, l } = self.params;
        let quotient = format!("Sym^{l}((Sym2C^{n} + Q1) * C^{k} / L2 * C^{k})");
        match self.stage {
            Stage::Fiber => quotient,
            Stage::Base => format!("H^0(P V_a, {quotient})"),
        }
    }

    /// `Σ_p (-1)^p rank(T_p)`.
    pub fn euler_rank(&self) -> i128 {
        let n = self.params.n;
        self.terms
            .iter()
            .map(|t| sign(t.index) * t.expr.rank(n) as i128)
            .sum()
    }
}

fn sign(p: usize) -> i128 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Sym²C^n ⊕ Q₁` as seen from the base.
pub fn w_base(n: usize) -> BundleExpr {
    BundleExpr::sum([sym2_cn(n), BundleExpr::q()])
}

/// `Sym²C^n ⊕ Q₁` restricted to a fiber, where it is constant.
pub fn w_fiber(n: usize) -> BundleExpr {
    BundleExpr::sum([sym2_cn(n), BundleExpr::base(BundleExpr::q())])
}

/// `V_a = Q₁ ⊕ L₁²`.
pub fn v_a() -> BundleExpr {
    BundleExpr::sum([BundleExpr::q(), BundleExpr::line(2)])
}

fn sym2_cn(n: usize) -> BundleExpr {
    BundleExpr::constant(n * (n + 1) / 2, format!("Sym2C{n}"))
}

/// `Sym^s(W ⊗ C^k)`.
pub fn sym_w_ck(s: usize, w: BundleExpr, k: usize) -> BundleExpr {
    BundleExpr::sym(
        s as u32,
        BundleExpr::tensor([w, BundleExpr::constant(k, format!("C{k}"))]),
    )
}

fn wedge_ck(j: usize, k: usize) -> BundleExpr {
    BundleExpr::constant(binomial(k as Mult, j as Mult) as usize, format!("L{j}C{k}"))
}

/// The Koszul resolution of `F_l` on a fiber `P V_a`.
pub fn build_resolution1(n: usize, k: usize, l: usize) -> Result<ResolutionComplex> {
    let params = Params::new(n, k, l)?;
    let terms = (0..=k.min(l))
        .map(|p| {
            let sym = sym_w_ck(l - p, w_fiber(n), k);
            let expr = if p == 0 {
                sym
            } else {
                BundleExpr::tensor([BundleExpr::line(p as i64), wedge_ck(p, k), sym])
            };
            ResolutionTerm { index: p, expr }
        })
        .collect();
    Ok(ResolutionComplex {
        params,
        stage: Stage::Fiber,
        terms,
    })
}

/// Pushes a fiber complex down to `P^{n-1}`. Each fiber irreducible in
/// `T_p` is evaluated by Borel–Weil–Bott on `P V_a`; a class in `H^q`
/// becomes `Σ^{weight}(V_a)` at position `p - q` of the new complex.
pub fn pushforward_fiber(r1: &ResolutionComplex) -> Result<ResolutionComplex> {
    if r1.stage != Stage::Fiber {
        return Err(Error::Precondition(
            "pushforward expects a complex on the fiber".into(),
        ));
    }
    let n = r1.params.n;
    let mut pieces: BTreeMap<usize, Vec<BundleExpr>> = BTreeMap::new();
    for term in &r1.terms {
        let factors = match &term.expr {
            BundleExpr::Tensor(items) => items.clone(),
            other => vec![other.clone()],
        };
        let (constant, varying): (Vec<_>, Vec<_>) =
            factors.into_iter().partition(BundleExpr::is_constant);
        let constant: Vec<BundleExpr> = constant.iter().map(BundleExpr::unwrap_base).collect();
        let fiber_part = normalize(&BundleExpr::Tensor(varying), n)?;
        for (lambda, m, mult) in fiber_part.iter() {
            let BwbResult::Cohomology { degree, weight } = bwb_irreducible(n, lambda, m)? else {
                continue;
            };
            let index = term.index.checked_sub(degree).ok_or_else(|| {
                Error::Unsupported(format!(
                    "H^{degree} of fiber term {} cannot be reindexed",
                    term.index
                ))
            })?;
            let weight = weight.to_partition().ok_or_else(|| {
                Error::Unsupported(format!("negative weight {weight} on the fiber"))
            })?;
            let mut factors = Vec::new();
            if mult > 1 {
                factors.push(BundleExpr::Const {
                    dim: mult as usize,
                    label: None,
                });
            }
            if !weight.is_empty() {
                factors.push(BundleExpr::schur(weight, v_a()));
            }
            factors.extend(constant.iter().cloned());
            pieces
                .entry(index)
                .or_default()
                .push(BundleExpr::Tensor(factors));
        }
    }
    let mut terms = Vec::with_capacity(pieces.len());
    for (expected, (index, mut exprs)) in pieces.into_iter().enumerate() {
        if index != expected {
            return Err(Error::Unsupported(format!(
                "pushforward leaves a gap at position {expected}"
            )));
        }
        let expr = if exprs.len() == 1 {
            exprs.pop().unwrap()
        } else {
            BundleExpr::Sum(exprs)
        };
        terms.push(ResolutionTerm { index, expr });
    }
    Ok(ResolutionComplex {
        params: r1.params,
        stage: Stage::Base,
        terms,
    })
}

/// The closed-form resolution on `P^{n-1}`. For `l < k` the indices are
/// truncated to the Koszul degrees `j ≤ l` that exist.
pub fn build_resolution2(n: usize, k: usize, l: usize) -> Result<ResolutionComplex> {
    let params = Params::new(n, k, l)?;
    let mut terms = vec![ResolutionTerm {
        index: 0,
        expr: sym_w_ck(l, w_base(n), k),
    }];
    for j in n..=k.min(l) {
        terms.push(ResolutionTerm {
            index: j - n + 1,
            expr: BundleExpr::tensor([
                BundleExpr::det(BundleExpr::q()),
                BundleExpr::line(2),
                BundleExpr::sym((j - n) as u32, v_a()),
                wedge_ck(j, k),
                sym_w_ck(l - j, w_base(n), k),
            ]),
        });
    }
    Ok(ResolutionComplex {
        params,
        stage: Stage::Base,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_koszul_complex() {
        let r = build_resolution1(2, 2, 1).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.terms[0].expr, sym_w_ck(1, w_fiber(2), 2));
        assert_eq!(
            r.terms[1].expr,
            BundleExpr::tensor([
                BundleExpr::line(1),
                wedge_ck(1, 2),
                sym_w_ck(0, w_fiber(2), 2)
            ])
        );
    }

    #[test]
    fn stage_one_line_powers() {
        let r = build_resolution1(5, 7, 7).unwrap();
        assert_eq!(r.len(), 8);
        for t in r.terms.iter().skip(1) {
            match &t.expr {
                BundleExpr::Tensor(f) => assert_eq!(f[0], BundleExpr::line(t.index as i64)),
                other => panic!("unexpected term {other}"),
            }
        }
        for (n, k, l) in [(2, 3, 9), (3, 4, 6), (4, 4, 5)] {
            assert_eq!(build_resolution1(n, k, l).unwrap().len(), k + 1);
        }
    }

    #[test]
    fn parameter_violations() {
        assert!(build_resolution1(1, 2, 2).is_err());
        assert!(build_resolution1(4, 3, 2).is_err());
        assert!(build_resolution2(5, 4, 7).is_err());
    }

    #[test]
    fn stage_two_shapes() {
        let r = build_resolution2(5, 7, 7).unwrap();
        assert_eq!(r.len(), 4);
        let r = build_resolution2(3, 4, 4).unwrap();
        assert_eq!(r.len(), 3);
        for n in 2..5 {
            assert_eq!(build_resolution2(n, n, n + 3).unwrap().len(), 2);
        }
        assert_eq!(build_resolution2(4, 6, 2).unwrap().len(), 1);
    }

    #[test]
    fn pushforward_counts() {
        let p = pushforward_fiber(&build_resolution1(5, 7, 7).unwrap()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.stage, Stage::Base);
        let p = pushforward_fiber(&build_resolution1(3, 4, 4).unwrap()).unwrap();
        assert_eq!(p.len(), 3);
        let p = pushforward_fiber(&build_resolution1(3, 3, 1).unwrap()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(pushforward_fiber(&p).is_err());
    }

    #[test]
    fn top_term_matches_closed_form() {
        let pushed = pushforward_fiber(&build_resolution1(5, 7, 7).unwrap()).unwrap();
        let closed = build_resolution2(5, 7, 7).unwrap();
        let top_pushed = normalize(&pushed.terms[3].expr, 5).unwrap();
        let top_closed = normalize(&closed.terms[3].expr, 5).unwrap();
        assert_eq!(top_pushed, top_closed);
        // det Q ⊗ L^2 ⊗ (Sym^2 Q ⊕ Q ⊗ L^2 ⊕ L^4)
        assert_eq!(top_closed.len(), 3);
        assert_eq!(top_closed.get(&[1, 1, 1, 1].into(), 6), 1);
        assert_eq!(top_closed.get(&[2, 1, 1, 1].into(), 4), 1);
        assert_eq!(top_closed.get(&[3, 1, 1, 1].into(), 2), 1);
    }
}
