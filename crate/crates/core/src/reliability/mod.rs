//! Multi-state coherent systems and their reliability.

pub mod evaluate;
pub mod format;
pub mod iid;
pub mod oracle;
pub mod probability;
pub mod system;

pub use evaluate::{bounds, evaluate, reliability, reliability_levels, Bound, Direction, Ladder, ReliabilityReport};
pub use format::SystemFile;
pub use iid::{iid_reliability_polynomials, symmetric_numerator, IidPolynomial};
pub use oracle::{exhaustive_reliability, monte_carlo, Estimate};
pub use probability::{ProbabilityTable, SlotMap};
pub use system::{
    binary_k_of_n_ideal, consecutive_k_of_n_ideal, flow_network_ideal, ms_k_of_n_ideal, SystemSource, SystemSpec,
};
