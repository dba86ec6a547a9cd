//! Polarization and depolarization of monomial ideals, support posets, and
//! their use in exact reliability analysis of multi-state coherent systems.

pub mod betti;
pub mod error;
pub mod height;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod mvtree;
pub mod polar;
pub mod polarize;
pub mod polynomial;
pub mod reliability;
pub mod scalar;

pub use betti::{betti_numbers, proj_dim, regularity, BettiTable};
pub use error::{Error, Result};
pub use height::height;
pub use hilbert::{graded_numerator, hilbert_numerator};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub use mvtree::{mayer_vietoris_tree, polarize_tree, MvTree, PivotStrategy};
pub use polarize::{polarize_ideal, polarize_monomial, VariableMap};
pub use polynomial::MultigradedPolynomial;
pub use scalar::{Rational, Scalar};
pub use io::IdealFile;
pub use polar::{
    copolar_bijection, depolarize, enumerate_depolarizations, is_quasi_stable, min_path_partition, support_poset,
    PathPartition, SupportPoset,
};
pub use reliability::{ProbabilityTable, SlotMap, SystemFile, SystemSpec};

/// Probability tables with exact rational entries.
pub type ExactProbabilityTable = ProbabilityTable<Rational>;
/// Probability tables in double precision.
pub type FloatProbabilityTable = ProbabilityTable<f64>;
