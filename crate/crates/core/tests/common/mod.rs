//! Independent oracles. Nothing here calls the LR or normalization code
//! paths they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use bwbcalc::{BundleExpr, Mult, MultSum, Partition};

pub type Poly = HashMap<Vec<u32>, i128>;

/// All semistandard Young tableaux of shape `lambda` with entries in
/// `0..vars`, as their content vectors.
pub fn ssyt_contents(lambda: &Partition, vars: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        vars: usize,
        grid: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cells.len() {
            let mut content = vec![0u32; vars];
            for &v in grid.values() {
                content[v] += 1;
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { grid[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars {
            grid.insert((r, c), v);
            rec(idx + 1, cells, vars, grid, out);
            grid.remove(&(r, c));
        }
    }
    rec(0, &cells, vars, &mut grid, &mut out);
    out
}

pub fn schur_poly(lambda: &Partition, vars: usize) -> Poly {
    let mut p = Poly::new();
    for content in ssyt_contents(lambda, vars) {
        *p.entry(content).or_insert(0) += 1;
    }
    p
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in the Schur basis by peeling off the
/// lexicographically largest monomial.
pub fn schur_expand(mut p: Poly, vars: usize) -> MultSum {
    let mut out = MultSum::new();
    p.retain(|_, c| *c != 0);
    while let Some((lead, &coeff)) = p.iter().max_by(|a, b| a.0.cmp(b.0)) {
        let lead = lead.clone();
        assert!(coeff > 0, "negative Schur coefficient {coeff} at {lead:?}");
        let lambda = Partition::new(lead.clone()).expect("leading exponent is a partition");
        for (e, c) in schur_poly(&lambda, vars) {
            *p.entry(e).or_insert(0) -= coeff * c;
        }
        p.retain(|_, c| *c != 0);
        out.add(lambda, coeff as Mult);
    }
    out
}

/// `Σ^λ ⊗ Σ^μ` in `vars` variables by polynomial multiplication.
pub fn brute_lr(lambda: &Partition, mu: &Partition, vars: usize) -> MultSum {
    schur_expand(
        poly_mul(&schur_poly(lambda, vars), &schur_poly(mu, vars)),
        vars,
    )
}

pub fn ssyt_count(lambda: &Partition, d: usize) -> Mult {
    ssyt_contents(lambda, d).len() as Mult
}

/// Partitions of every size up to `max_size`, at most `max_len` parts.
pub fn partitions_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
        if slots == 0 {
            return;
        }
        for p in 1..=max_part.min(rest) {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_size, max_size, max_len, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `total` into `parts` nonnegative pieces.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `⊕_{i=0}^{N} Sym^{N-i}(Sym²C^k ⊗ C^k) ⊗ ⊕_{i_1+…+i_k=i} Sym^{i_1}Q ⊗ … ⊗ Sym^{i_k}Q`
/// written out term by term.
pub fn termwise_expansion(big_n: u32, k: usize) -> BundleExpr {
    let sym2 = k * (k + 1) / 2;
    let mut summands = Vec::new();
    for i in 0..=big_n {
        let constant = BundleExpr::sym(
            big_n - i,
            BundleExpr::tensor([
                BundleExpr::constant(sym2, "Sym2Ck"),
                BundleExpr::constant(k, "Ck"),
            ]),
        );
        for comp in compositions(i, k) {
            let mut factors = vec![constant.clone()];
            factors.extend(comp.iter().map(|&a| BundleExpr::sym(a, BundleExpr::q())));
            summands.push(BundleExpr::Tensor(factors));
        }
    }
    BundleExpr::Sum(summands)
}

/// Binomial coefficient with i128 arithmetic, independent of the crate's.
pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
