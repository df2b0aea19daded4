//! Symbolic multivariate Faà di Bruno formula.
//!
//! [`umfb`] builds the `i`-th partial derivative of `F(G_1(t), ..., G_n(t))`
//! directly in collected form by summing over multi-index partitions.
//! [`chain_rule_derivative`] produces the same polynomial by repeated
//! differentiation and serves as the reference implementation.
//!
//! ```
//! use umfb::{umfb, CompositionSpec, InnerMode, MultiIndex};
//!
//! let spec = CompositionSpec::new(MultiIndex::new(&[2]), 1, InnerMode::Distinct).unwrap();
//! assert_eq!(umfb(&spec).unwrap().to_text(), "f[1]*g1[2] + f[2]*g1[1]^2");
//! ```

pub mod algebra;
pub mod error;
pub mod fdb;
pub mod multiindex;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod special;

pub use algebra::{evaluate, render, substitute, DerivSymbol, Factors, Format, FormulaPoly, InnerValues, Monomial};
pub use error::{Error, Result};
pub use fdb::{
    compose_generating_check, dot_power_expansion, evaluate_power, generalized_bell, generalized_bell_with,
    predicted_terms, umfb, umfb_with, vars_to_outer, CompositionSpec, InnerMode, InnerTag, MomentSequence,
    UmfbOptions, DEFAULT_TERM_CAP, MAX_CHECK_ORDER, TERM_CAP_ENV,
};
pub use multiindex::{
    compositions_into, count_compositions, count_partitions, multinomial, partitions, MultiIndex,
    MultiIndexPartition,
};
pub use oracle::{chain_rule_derivative, chain_rule_derivative_with, equivalence_check, Equivalence};
pub use special::{HermiteKind, MomentTable, SymmetricMatrix};
