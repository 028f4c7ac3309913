//! E₁ pages of resolution complexes and forced-outcome analysis.
//!
//! Convention: column `p` is the homological position of `T_p`, row `q`
//! the cohomological degree, so `E₁^{p,q} = H^q(T_p)` contributes to
//! `H^{q-p}` of the resolved sheaf `F`. The differential `d_r` runs from
//! `(p, q)` to `(p - r, q - r + 1)` and raises `q - p` by one. In the
//! augmented complex `F` sits in column `-1`, and everything converges to
//! zero; `H^0(F)` at `(-1, 0)` is reachable only from entries with
//! `q = p`, by `d_{p+1}`.
//!
//! No differential is ever computed. A verdict is issued only when the
//! vanishing pattern leaves a single possibility; otherwise the answer is
//! `Indeterminate`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bwb::{bwb_irreducible, euler_characteristic, BwbResult, GlWeight};
use crate::error::Result;
use crate::normalize::normalize;
use crate::partition::{Mult, Partition};
use crate::resolution::{build_resolution2, Params, ResolutionComplex, Stage};

/// One nonzero cell of the page.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct E1Entry {
    pub dim: Mult,
    #[serde(serialize_with = "reps_as_list")]
    pub reps: BTreeMap<GlWeight, Mult>,
    /// The normalized summands `Σ^λQ ⊗ L^m` of `T_p` that land here.
    #[serde(serialize_with = "sources_as_list")]
    pub sources: BTreeMap<(Partition, i64), Mult>,
}

#[derive(Serialize)]
struct RepOut<'a> {
    weight: &'a GlWeight,
    mult: Mult,
    dim: Mult,
}

fn reps_as_list<S: Serializer>(
    reps: &BTreeMap<GlWeight, Mult>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(reps.iter().map(|(w, &m)| RepOut {
        weight: w,
        mult: m,
        dim: w.dim(),
    }))
}

#[derive(Serialize)]
struct SourceOut<'a> {
    lambda: &'a Partition,
    m: i64,
    mult: Mult,
}

fn sources_as_list<S: Serializer>(
    sources: &BTreeMap<(Partition, i64), Mult>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(sources.iter().map(|((l, m), &c)| SourceOut {
        lambda: l,
        m: *m,
        mult: c,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Page {
    pub params: Params,
    pub stage: Stage,
    /// Rows run over `0..rows` (`rows = n`).
    pub rows: usize,
    /// Number of resolution terms; columns run over `0..columns`.
    pub columns: usize,
    pub entries: BTreeMap<(usize, usize), E1Entry>,
    /// Per column, `χ(T_p)` from the Weyl dimension polynomial (no sorting).
    pub column_euler: Vec<i128>,
}

#[derive(Serialize)]
struct EntryOut<'a> {
    column: usize,
    row: usize,
    degree: i64,
    #[serde(flatten)]
    entry: &'a E1Entry,
}

impl Serialize for E1Page {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct PageOut<'a> {
            params: Params,
            stage: Stage,
            rows: usize,
            columns: usize,
            entries: Vec<EntryOut<'a>>,
            column_euler: &'a [i128],
        }
        PageOut {
            params: self.params,
            stage: self.stage,
            rows: self.rows,
            columns: self.columns,
            entries: self
                .entries
                .iter()
                .map(|(&(column, row), entry)| EntryOut {
                    column,
                    row,
                    degree: row as i64 - column as i64,
                    entry,
                })
                .collect(),
            column_euler: &self.column_euler,
        }
        .serialize(s)
    }
}

impl E1Page {
    pub fn get(&self, column: usize, row: usize) -> Option<&E1Entry> {
        self.entries.get(&(column, row))
    }

    pub fn dim(&self, column: usize, row: usize) -> Mult {
        self.get(column, row).map_or(0, |e| e.dim)
    }

    fn is_zero(&self, column: i64, row: i64) -> bool {
        column < 0 || row < 0 || self.dim(column as usize, row as usize) == 0
    }

    /// Positions joined to `(p, q)` by some `d_r`, `r ≥ 1`, inside the
    /// non-augmented page: targets `(p - r, q - r + 1)` and sources
    /// `(p + r, q + r - 1)`.
    pub fn neighbours(&self, column: usize, row: usize) -> Vec<(usize, usize)> {
        let (p, q) = (column as i64, row as i64);
        let mut out = Vec::new();
        for r in 1..=self.columns as i64 {
            for (c, w) in [(p - r, q - r + 1), (p + r, q + r - 1)] {
                if c >= 0 && (c as usize) < self.columns && w >= 0 && (w as usize) < self.rows {
                    out.push((c as usize, w as usize));
                }
            }
        }
        out
    }

    fn isolated(&self, column: usize, row: usize) -> bool {
        self.neighbours(column, row)
            .into_iter()
            .all(|(c, w)| self.is_zero(c as i64, w as i64))
    }

    /// `Σ (-1)^{p+q} dim E₁^{p,q}`.
    pub fn alternating_sum(&self) -> i128 {
        self.entries
            .iter()
            .map(|(&(p, q), e)| {
                let d = e.dim as i128;
                if (p + q) % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    /// `Σ_p (-1)^p χ(T_p)`.
    pub fn euler_of_columns(&self) -> i128 {
        self.column_euler
            .iter()
            .enumerate()
            .map(|(p, &x)| if p % 2 == 0 { x } else { -x })
            .sum()
    }

    fn witness(&self, column: usize, row: usize) -> Witness {
        let entry = self.get(column, row).cloned().unwrap_or_default();
        Witness {
            column,
            row,
            degree: row as i64 - column as i64,
            entry,
        }
    }
}

/// Cohomology of every term of `c`, column by column.
pub fn e1_page(c: &ResolutionComplex) -> Result<E1Page> {
    let n = c.params.n;
    let mut entries: BTreeMap<(usize, usize), E1Entry> = BTreeMap::new();
    let mut column_euler = vec![0; c.len()];
    for term in &c.terms {
        let sum = normalize(&term.expr, n)?;
        for (lambda, m, mult) in sum.iter() {
            column_euler[term.index] += mult as i128 * euler_characteristic(n, lambda, m);
            if let BwbResult::Cohomology { degree, weight } = bwb_irreducible(n, lambda, m)? {
                let entry = entries.entry((term.index, degree)).or_default();
                entry.dim += mult * weight.dim();
                *entry.reps.entry(weight).or_insert(0) += mult;
                *entry.sources.entry((lambda.clone(), m)).or_insert(0) += mult;
            }
        }
    }
    Ok(E1Page {
        params: c.params,
        stage: c.stage,
        rows: n,
        columns: c.len(),
        entries,
        column_euler,
    })
}

/// A nonzero E₁ entry singled out by an analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub column: usize,
    pub row: usize,
    /// `q - p`, the degree of `H^*(F)` the entry contributes to.
    pub degree: i64,
    pub entry: E1Entry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RationalityVerdict {
    /// Every entry with `q - p > 0` is zero, so `H^{>0}(F) = 0`.
    AllVanish,
    /// An entry in positive degree that no differential can touch, so it
    /// survives to `H^degree(F) ≠ 0`.
    NonVanishing { degree: usize, witness: Witness },
    Indeterminate {
        reason: String,
        entries: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormalityVerdict {
    /// Nothing but the horizontal arrow from `H^0(T_0)` can reach `H^0(F)`,
    /// so the edge map is onto in this degree `l`.
    NormalConsistent,
    /// An entry whose only way to die is `d_page` into `H^0(F)`: the edge
    /// map `H^0(T_0) → H^0(F)` is not onto.
    NotNormal { witness: Witness, page: usize },
    Indeterminate {
        reason: String,
        entries: Vec<(usize, usize)>,
    },
}

pub fn analyze_rationality(page: &E1Page) -> RationalityVerdict {
    let positive: Vec<(usize, usize)> = page
        .entries
        .iter()
        .filter(|(&(p, q), e)| q > p && e.dim > 0)
        .map(|(&pos, _)| pos)
        .collect();
    if positive.is_empty() {
        return RationalityVerdict::AllVanish;
    }
    let mut isolated: Vec<(usize, usize)> = positive
        .iter()
        .copied()
        .filter(|&(p, q)| page.isolated(p, q))
        .collect();
    isolated.sort_by_key(|&(p, q)| (q - p, p));
    match isolated.first() {
        Some(&(p, q)) => RationalityVerdict::NonVanishing {
            degree: q - p,
            witness: page.witness(p, q),
        },
        None => RationalityVerdict::Indeterminate {
            reason: "every entry in positive degree has a nonzero neighbour \
                     that a differential could cancel it against"
                .into(),
            entries: positive,
        },
    }
}

/// Normality analysis of a base-stage page, with `F` in column `-1`.
pub fn analyze_normality_page(page: &E1Page) -> NormalityVerdict {
    // only entries on the diagonal q = p ≥ 1 can reach (-1, 0) non-horizontally
    let diagonal: Vec<(usize, usize)> = page
        .entries
        .iter()
        .filter(|(&(p, q), e)| q == p && q >= 1 && e.dim > 0)
        .map(|(&pos, _)| pos)
        .collect();
    if diagonal.is_empty() {
        return NormalityVerdict::NormalConsistent;
    }
    for &(p, q) in &diagonal {
        if page.isolated(p, q) {
            return NormalityVerdict::NotNormal {
                witness: page.witness(p, q),
                page: p + 1,
            };
        }
    }
    NormalityVerdict::Indeterminate {
        reason: "entries that could hit H^0(F) may also cancel elsewhere".into(),
        entries: diagonal,
    }
}

/// Builds the base resolution for `(n, k, l)` and analyzes its normality.
pub fn analyze_normality(n: usize, k: usize, l: usize) -> Result<NormalityVerdict> {
    let page = e1_page(&build_resolution2(n, k, l)?)?;
    Ok(analyze_normality_page(&page))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub l: usize,
    pub rationality: RationalityVerdict,
    pub normality: NormalityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepAggregate {
    /// Some `l ≤ horizon` has `H^i(F_l) ≠ 0` for an `i > 0`.
    NonRational { first_l: usize, degree: usize },
    /// No obstruction for `l ≤ horizon`. Says nothing about larger `l`.
    NoObstructionFound {
        horizon: usize,
        indeterminate: Vec<usize>,
    },
}

impl SweepAggregate {
    pub fn disclaimer(&self) -> String {
        match self {
            SweepAggregate::NonRational { .. } => {
                "a single nonvanishing component already obstructs rational singularities".into()
            }
            SweepAggregate::NoObstructionFound { horizon, .. } => format!(
                "finite horizon: no obstruction found for l <= {horizon}; larger l were not examined"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub n: usize,
    pub k: usize,
    pub l_max: usize,
    pub rows: Vec<SweepRow>,
    pub aggregate: SweepAggregate,
    pub first_not_normal: Option<usize>,
    pub disclaimer: String,
}

/// Runs both analyses for every `0 ≤ l ≤ l_max`, in parallel over `l`.
pub fn sweep(n: usize, k: usize, l_max: usize) -> Result<Sweep> {
    let rows = (0..=l_max)
        .into_par_iter()
        .map(|l| {
            let page = e1_page(&build_resolution2(n, k, l)?)?;
            Ok(SweepRow {
                l,
                rationality: analyze_rationality(&page),
                normality: analyze_normality_page(&page),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let aggregate = rows
        .iter()
        .find_map(|row| match &row.rationality {
            RationalityVerdict::NonVanishing { degree, .. } => Some(SweepAggregate::NonRational {
                first_l: row.l,
                degree: *degree,
            }),
            _ => None,
        })
        .unwrap_or_else(|| SweepAggregate::NoObstructionFound {
            horizon: l_max,
            indeterminate: rows
                .iter()
                .filter(|r| matches!(r.rationality, RationalityVerdict::Indeterminate { .. }))
                .map(|r| r.l)
                .collect(),
        });
    let first_not_normal = rows
        .iter()
        .find(|r| matches!(r.normality, NormalityVerdict::NotNormal { .. }))
        .map(|r| r.l);
    Ok(Sweep {
        n,
        k,
        l_max,
        disclaimer: aggregate.disclaimer(),
        rows,
        aggregate,
        first_not_normal,
    })
}
