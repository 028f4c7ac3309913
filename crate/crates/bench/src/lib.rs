//! Benchmark fixtures shared by the criterion targets.

use bwbcalc::resolution::{sym_w_ck, w_base};
use bwbcalc::{BundleExpr, Partition};

/// `Sym^l((Sym²C^n ⊕ Q) ⊗ C^k)`, the degree-zero term of every base complex.
pub fn degree_zero_term(n: usize, k: usize, l: usize) -> BundleExpr {
    sym_w_ck(l, w_base(n), k)
}

/// All partitions of `size` with at most `len` parts.
pub fn shapes(size: u32, len: usize) -> Vec<Partition> {
    bwbcalc::partitions_of(size, len)
}
