//! Partitions, Schur-functor multiplicity sums and the Littlewood–Richardson
//! calculus used to decompose tensor products, symmetric powers and direct
//! sums of Schur functors.
//!
//! All functions here are pure. Products are truncated by a `cap` on the
//! number of rows: `Σ^ν` of a space of dimension `r` is zero as soon as
//! `length(ν) > r`, so such terms are dropped rather than reported.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Multiplicities are exact and can become large (ranks of `Sym^l` of
/// spaces of dimension > 100), hence 128 bits.
pub type Mult = u128;

/// A weakly decreasing tuple of positive integers. Trailing zeros are
/// dropped on construction, so the empty tuple is the zero partition.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: join(&parts),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(j)`, indexing `Sym^j`.
    pub fn row(j: u32) -> Self {
        Partition::from_sorted(vec![j])
    }

    /// The one-column partition `(1,…,1)` of size `j`, indexing `Λ^j`.
    pub fn column(j: usize) -> Self {
        Partition::from_sorted(vec![1; j])
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(rows: usize, width: u32) -> Self {
        Partition::from_sorted(vec![width; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Adds `c` to each of the first `rows` parts (tensoring with `det^c`
    /// of a rank-`rows` bundle). Requires `self.len() <= rows`.
    pub fn add_columns(&self, rows: usize, c: u32) -> Partition {
        debug_assert!(self.len() <= rows);
        Partition::from_sorted((0..rows).map(|i| self.part(i) + c).collect())
    }

    /// Scales every part by `s`.
    pub fn scale(&self, s: u32) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|p| p * s).collect())
    }
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

/// Parses the comma-joined form `"3,1,1"`. The empty string is the zero
/// partition; surrounding parentheses and whitespace are tolerated.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition {
                        input: s.to_string(),
                        reason: format!("`{}` is not a nonnegative integer", tok.trim()),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".into(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    /// Panics if the parts are not weakly decreasing.
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }
}

/// A formal sum `⊕ mult·Σ^λ` with strictly positive multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MultSum {
    terms: BTreeMap<Partition, Mult>,
}

impl MultSum {
    pub fn new() -> Self {
        MultSum::default()
    }

    pub fn single(p: Partition) -> Self {
        let mut s = MultSum::new();
        s.add(p, 1);
        s
    }

    pub fn add(&mut self, p: Partition, mult: Mult) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: &Partition) -> Mult {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, Mult)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult(λ)·dim Σ^λ(C^d)`.
    pub fn total_dim(&self, d: usize) -> Mult {
        self.iter().map(|(p, m)| m * schur_dim(p, d)).sum()
    }
}

impl fmt::Debug for MultSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl FromIterator<(Partition, Mult)> for MultSum {
    fn from_iter<T: IntoIterator<Item = (Partition, Mult)>>(iter: T) -> Self {
        let mut s = MultSum::new();
        for (p, m) in iter {
            s.add(p, m);
        }
        s
    }
}

/// All partitions of `size` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(size: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer` with at most `max_len` parts.
pub fn subpartitions(outer: &Partition, max_len: usize) -> Vec<Partition> {
    fn rec(
        outer: &Partition,
        i: usize,
        bound: u32,
        max_len: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::from_sorted(cur.clone()));
        if i >= outer.len() || i >= max_len {
            return;
        }
        for p in 1..=bound.min(outer.part(i)) {
            cur.push(p);
            rec(outer, i + 1, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 0, u32::MAX, max_len, &mut Vec::new(), &mut out);
    out
}

/// `Σ^λ ⊗ Sym^j`: every way of adding a horizontal strip of `j` boxes to
/// `λ` with at most `cap` rows.
pub fn pieri_row(lambda: &Partition, j: u32, cap: usize) -> MultSum {
    fn rec(
        lambda: &Partition,
        row: usize,
        rest: u32,
        cap: usize,
        cur: &mut Vec<u32>,
        out: &mut MultSum,
    ) {
        if rest == 0 {
            let mut parts = cur.clone();
            parts.extend((row..lambda.len()).map(|i| lambda.part(i)));
            out.add(Partition::from_sorted(parts), 1);
            return;
        }
        if row >= cap {
            return;
        }
        let base = lambda.part(row);
        let ceiling = if row == 0 {
            base + rest
        } else {
            lambda.part(row - 1)
        };
        for add in (0..=(ceiling - base).min(rest)).rev() {
            cur.push(base + add);
            rec(lambda, row + 1, rest - add, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = MultSum::new();
    if lambda.len() <= cap {
        rec(lambda, 0, j, cap, &mut Vec::new(), &mut out);
    }
    out
}

/// `Σ^λ ⊗ Λ^j`: every way of adding a vertical strip of `j` boxes to `λ`
/// with at most `cap` rows.
pub fn wedge_pieri(lambda: &Partition, j: usize, cap: usize) -> MultSum {
    fn rec(
        lambda: &Partition,
        row: usize,
        rest: usize,
        cap: usize,
        cur: &mut Vec<u32>,
        out: &mut MultSum,
    ) {
        if rest == 0 {
            let mut parts = cur.clone();
            parts.extend((row..lambda.len()).map(|i| lambda.part(i)));
            out.add(Partition::from_sorted(parts), 1);
            return;
        }
        if row >= cap {
            return;
        }
        let base = lambda.part(row);
        // a box in this row is allowed if the row above is (now) longer
        if row == 0 || cur[row - 1] > base {
            cur.push(base + 1);
            rec(lambda, row + 1, rest - 1, cap, cur, out);
            cur.pop();
        }
        // skipping a row is only allowed while λ still has parts below it,
        // otherwise every later box would start a disconnected column
        if row < lambda.len() {
            cur.push(base);
            rec(lambda, row + 1, rest, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = MultSum::new();
    if lambda.len() <= cap {
        rec(lambda, 0, j, cap, &mut Vec::new(), &mut out);
    }
    out
}

/// Littlewood–Richardson product `Σ^λ ⊗ Σ^μ`, truncated to at most `cap`
/// rows. Rows and columns go through the Pieri rules, everything else
/// through LR-tableau enumeration.
pub fn lr_mult(lambda: &Partition, mu: &Partition, cap: usize) -> MultSum {
    if lambda.len() > cap || mu.len() > cap {
        return MultSum::new();
    }
    if mu.is_row() {
        pieri_row(lambda, mu.part(0), cap)
    } else if lambda.is_row() {
        pieri_row(mu, lambda.part(0), cap)
    } else if mu.is_column() {
        wedge_pieri(lambda, mu.len(), cap)
    } else if lambda.is_column() {
        wedge_pieri(mu, lambda.len(), cap)
    } else {
        lr_tableaux(lambda, mu, cap)
    }
}

/// LR product by adding the rows of `mu` to `lambda` one label at a time,
/// each as a horizontal strip, keeping the reverse reading word a lattice
/// word.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, cap: usize) -> MultSum {
    struct State<'a> {
        mu: &'a Partition,
        cap: usize,
        shape: Vec<u32>,
        // counts[row][label] = number of boxes with that label in that row
        counts: Vec<Vec<u32>>,
        out: MultSum,
    }

    fn place_label(st: &mut State<'_>, label: usize) {
        if label == st.mu.len() {
            st.out.add(Partition::from_sorted(st.shape.clone()), 1);
            return;
        }
        let old = st.shape.clone();
        place_row(st, label, 0, st.mu.part(label), &old, 0, 0);
    }

    // `above_label` / `above_prev` are cumulative counts of `label` and
    // `label - 1` in rows strictly above `row`.
    fn place_row(
        st: &mut State<'_>,
        label: usize,
        row: usize,
        rest: u32,
        old: &[u32],
        above_label: u32,
        above_prev: u32,
    ) {
        if rest == 0 {
            place_label(st, label + 1);
            return;
        }
        if row >= st.cap {
            return;
        }
        let ceiling = if row == 0 {
            old[0] + rest
        } else {
            old[row - 1]
        };
        let room = ceiling.saturating_sub(old[row]).min(rest);
        let lattice_room = if label == 0 {
            room
        } else {
            (above_prev).saturating_sub(above_label).min(room)
        };
        let prev_here = if label == 0 {
            0
        } else {
            st.counts[row][label - 1]
        };
        for add in (0..=lattice_room).rev() {
            st.shape[row] += add;
            st.counts[row][label] += add;
            place_row(
                st,
                label,
                row + 1,
                rest - add,
                old,
                above_label + add,
                above_prev + prev_here,
            );
            st.shape[row] -= add;
            st.counts[row][label] -= add;
        }
    }

    if lambda.len() > cap || mu.len() > cap {
        return MultSum::new();
    }
    let mut shape = vec![0; cap];
    for (i, &p) in lambda.parts().iter().enumerate() {
        shape[i] = p;
    }
    let mut st = State {
        mu,
        cap,
        shape,
        counts: vec![vec![0; mu.len().max(1)]; cap],
        out: MultSum::new(),
    };
    place_label(&mut st, 0);
    st.out
}

/// Skew decomposition `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`, keeping `ν` with at
/// most `cap` rows. Counts LR tableaux of shape `λ/μ` by content.
pub fn skew_lr(lambda: &Partition, mu: &Partition, cap: usize) -> MultSum {
    let mut out = MultSum::new();
    if !lambda.contains(mu) {
        return out;
    }
    // cells in reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, u32)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut content = vec![0u32; cap + 1];

    fn rec(
        idx: usize,
        cells: &[(usize, u32)],
        mu: &Partition,
        cap: usize,
        filling: &mut BTreeMap<(usize, u32), usize>,
        content: &mut Vec<u32>,
        out: &mut MultSum,
    ) {
        if idx == cells.len() {
            out.add(Partition::from_sorted(content[1..].to_vec()), 1);
            return;
        }
        let (r, c) = cells[idx];
        let right = filling.get(&(r, c + 1)).copied();
        let above = if r > 0 && c >= mu.part(r - 1) {
            filling.get(&(r - 1, c)).copied()
        } else {
            None
        };
        let hi = right.unwrap_or(cap).min(cap);
        let lo = above.map_or(1, |a| a + 1);
        for v in lo..=hi {
            if v > 1 && content[v] + 1 > content[v - 1] {
                continue;
            }
            content[v] += 1;
            filling.insert((r, c), v);
            rec(idx + 1, cells, mu, cap, filling, content, out);
            filling.remove(&(r, c));
            content[v] -= 1;
        }
    }
    if cells.is_empty() {
        out.add(Partition::empty(), 1);
        return out;
    }
    if cap == 0 {
        return out;
    }
    rec(0, &cells, mu, cap, &mut filling, &mut content, &mut out);
    out
}

/// Branching `Σ^λ(A ⊕ B) = ⊕ c^λ_{μν} Σ^μA ⊗ Σ^νB`, with `length(μ) ≤ cap_a`
/// and `length(ν) ≤ cap_b`.
pub fn schur_branch_sum(
    lambda: &Partition,
    cap_a: usize,
    cap_b: usize,
) -> BTreeMap<(Partition, Partition), Mult> {
    let mut out = BTreeMap::new();
    for mu in subpartitions(lambda, cap_a) {
        for (nu, c) in skew_lr(lambda, &mu, cap_b).iter() {
            out.insert((mu.clone(), nu.clone()), c);
        }
    }
    out
}

/// Cauchy decomposition `Sym^l(A ⊗ B) = ⊕_{λ ⊢ l} Σ^λA ⊗ Σ^λB`, keeping the
/// `λ` that survive on both factors.
pub fn cauchy_sym(l: u32, rank_a: usize, rank_b: usize) -> MultSum {
    partitions_of(l, rank_a.min(rank_b))
        .into_iter()
        .map(|p| (p, 1))
        .collect()
}

/// Dual Cauchy decomposition `Λ^l(A ⊗ B) = ⊕_{λ ⊢ l} Σ^λA ⊗ Σ^{λ'}B`.
/// Keys are the `λ` applied to `A`.
pub fn cauchy_wedge(l: u32, rank_a: usize, rank_b: usize) -> MultSum {
    partitions_of(l, rank_a)
        .into_iter()
        .filter(|p| p.part(0) as usize <= rank_b)
        .map(|p| (p, 1))
        .collect()
}

/// `dim Σ^λ(C^d)` by the hook-content formula.
pub fn schur_dim(lambda: &Partition, d: usize) -> Mult {
    if lambda.len() > d {
        return 0;
    }
    let conj = lambda.conjugate();
    let (mut num, mut den): (Mult, Mult) = (1, 1);
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len as usize {
            let content = d as i64 + c as i64 - r as i64;
            let hook = (len as usize - c) + (conj.part(c) as usize - r) - 1;
            num *= content as Mult;
            den *= hook as Mult;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num / den
}

/// `C(n, k)` for nonnegative arguments; zero when `k > n`.
pub fn binomial(n: Mult, k: Mult) -> Mult {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(entries: &[(&[u32], Mult)]) -> MultSum {
        entries
            .iter()
            .map(|(p, m)| (Partition::new(p.to_vec()).unwrap(), *m))
            .collect()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(
            "3,1,1".parse::<Partition>().unwrap(),
            Partition::from([3, 1, 1])
        );
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(
            "(2,1,0)".parse::<Partition>().unwrap(),
            Partition::from([2, 1])
        );
        assert_eq!(Partition::from([3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("1,-1".parse::<Partition>().is_err());
    }

    #[test]
    fn trailing_zeros_normalized() {
        let p = Partition::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.size(), 3);
        assert_eq!(p.part(5), 0);
    }

    #[test]
    fn conjugate_and_contains() {
        assert_eq!(
            Partition::from([3, 1]).conjugate(),
            Partition::from([2, 1, 1])
        );
        assert!(Partition::from([3, 2]).contains(&Partition::from([2, 2])));
        assert!(!Partition::from([3]).contains(&Partition::from([1, 1])));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_row(&Partition::from([1]), 2, 3),
            ms(&[(&[3], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            pieri_row(&Partition::from([2, 1]), 0, 3),
            ms(&[(&[2, 1], 1)])
        );
        assert_eq!(
            pieri_row(&Partition::from([2]), 2, 2),
            ms(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn wedge_pieri_examples() {
        assert_eq!(
            wedge_pieri(&Partition::empty(), 3, 4),
            ms(&[(&[1, 1, 1], 1)])
        );
        assert!(wedge_pieri(&Partition::empty(), 3, 2).is_empty());
        assert_eq!(
            wedge_pieri(&Partition::from([1]), 2, 3),
            ms(&[(&[2, 1], 1), (&[1, 1, 1], 1)])
        );
    }

    #[test]
    fn lr_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(
            lr_mult(&p(&[1]), &p(&[2]), 3),
            ms(&[(&[3], 1), (&[2, 1], 1)])
        );
        assert_eq!(lr_mult(&p(&[]), &p(&[5, 2]), 4), ms(&[(&[5, 2], 1)]));
        // (2,2,1,1)/(1,1,1,1) is a vertical domino, so only one term:
        // dim 1·10 = dim Σ^(3,1,1,1)C^4 = 10
        assert_eq!(
            lr_mult(&p(&[1, 1, 1, 1]), &p(&[2]), 4),
            ms(&[(&[3, 1, 1, 1], 1)])
        );
        assert_eq!(schur_dim(&p(&[3, 1, 1, 1]), 4), 10);
        // s21 * s21 has the classic coefficient 2 on (3,2,1)
        let sq = lr_tableaux(&p(&[2, 1]), &p(&[2, 1]), 6);
        assert_eq!(sq.get(&p(&[3, 2, 1])), 2);
        assert_eq!(sq.len(), 7);
    }

    #[test]
    fn branch_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let b = schur_branch_sum(&p(&[1]), 3, 3);
        assert_eq!(b.len(), 2);
        assert_eq!(b[&(p(&[1]), p(&[]))], 1);
        assert_eq!(b[&(p(&[]), p(&[1]))], 1);
        let b = schur_branch_sum(&p(&[2]), 5, 5);
        assert_eq!(b.len(), 3);
        assert_eq!(b[&(p(&[1]), p(&[1]))], 1);
        let b = schur_branch_sum(&p(&[2, 1]), 2, 2);
        let expected = [
            (p(&[2, 1]), p(&[])),
            (p(&[2]), p(&[1])),
            (p(&[1, 1]), p(&[1])),
            (p(&[1]), p(&[2])),
            (p(&[1]), p(&[1, 1])),
            (p(&[]), p(&[2, 1])),
        ];
        assert_eq!(b.len(), expected.len());
        for key in expected {
            assert_eq!(b[&key], 1, "{key:?}");
        }
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_sym(2, 2, 2), ms(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(cauchy_sym(3, 1, 5), ms(&[(&[3], 1)]));
        let total: Mult = cauchy_sym(2, 2, 2)
            .iter()
            .map(|(p, m)| m * schur_dim(p, 2) * schur_dim(p, 2))
            .sum();
        assert_eq!(total, 10);
        assert_eq!(total, binomial(4 + 2 - 1, 2));
    }

    #[test]
    fn schur_dim_examples() {
        for n in 1..8 {
            assert_eq!(schur_dim(&Partition::from([1]), n), n as Mult);
        }
        assert_eq!(schur_dim(&Partition::from([2, 2, 2, 2, 2]), 5), 1);
        assert_eq!(schur_dim(&Partition::from([1, 1, 1]), 2), 0);
        assert_eq!(schur_dim(&Partition::from([3, 3, 1, 1]), 4), 20);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(140, 8), 2_985_733_783_935);
    }
}
