//! Exact cohomology of equivariant bundles on projective space by
//! Borel–Weil–Bott, Koszul resolutions for the A₂ jet loci `Θ^{n,k}`, and
//! forced-outcome analysis of their E₁ pages.
//!
//! The pipeline is
//! [`build_resolution2`] → [`e1_page`] → [`analyze_rationality`] /
//! [`analyze_normality_page`], with [`sweep`] running it over `l`.

pub mod bwb;
pub mod error;
pub mod expr;
pub mod normalize;
pub mod partition;
pub mod resolution;
pub mod spectral;

pub use bwb::{
    bwb_irreducible, bwb_line, cohomology, euler_characteristic, rho_shift, BwbResult,
    CohomologyTable, GlWeight,
};
pub use error::{Error, Result};
pub use expr::BundleExpr;
pub use normalize::{normalize, schur_of, total_dim, IrrSum, IrrTerm};
pub use partition::{
    binomial, cauchy_sym, cauchy_wedge, lr_mult, lr_tableaux, partitions_of, pieri_row,
    schur_branch_sum, schur_dim, skew_lr, subpartitions, wedge_pieri, Mult, MultSum, Partition,
};
pub use resolution::{
    build_resolution1, build_resolution2, pushforward_fiber, Params, ResolutionComplex,
    ResolutionTerm, Stage,
};
pub use spectral::{
    analyze_normality, analyze_normality_page, analyze_rationality, e1_page, sweep, E1Entry,
    E1Page, NormalityVerdict, RationalityVerdict, Sweep, SweepAggregate, SweepRow, Witness,
};
