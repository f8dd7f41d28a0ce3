//! Castelnuovo–Mumford regularity of monomial ideals, their Tor and Ext
//! modules, and numerical checks of the known bounds for weakly stable ideals.

#[macro_use]
pub mod field;

pub mod complex;
pub mod decomposition;
pub mod error;
pub mod extended;
pub mod format;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod multidegree;
pub mod random;
pub mod resolution;
pub mod stability;
pub mod torext;
pub mod verifier;

pub use complex::{Direction, FreeComplex, FreeModule};
pub use decomposition::{associated_primes, irreducible_decomposition};
pub use decomposition::{InitialSegmentPrime, VariableSet};
pub use error::{Error, Result};
pub use extended::ExtendedInt;
pub use field::{Field, FieldSpec, PrimeField, RationalField};
pub use ideal::MonomialIdeal;
pub use invariants::{
    betti_table, reg_ideal, reg_quotient, reg_weakly_stable_recursive, regularity, BettiTable, RegularityReport,
    WindowPolicy,
};
pub use module::{GradedModule, TruncatedGradedModule, Window};
pub use monomial::Monomial;
pub use multidegree::{DegreeBox, MultiDegree};
pub use stability::{is_weakly_stable, weakly_stable_completion};
pub use torext::{ext_module, ext_regularity, finite_length_ext_law, tor_module, tor_regularity, TorOptions, TorRoute};
pub use verifier::{scan, CheckContext, CheckKind, CheckResult, CheckStatus, ScanConfig, ScanReport};
