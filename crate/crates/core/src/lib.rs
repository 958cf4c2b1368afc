//! Exact symbolic construction of the cofree coalgebras, coproducts and
//! codifferentials attached to pre-Gerstenhaber algebras, and checkers that
//! expand every claimed identity on small instances.
//!
//! All arithmetic is over ℚ; a check passes only when its defect is exactly
//! zero.

pub mod coalgebra;
pub mod envelopes;
pub mod error;
pub mod eval;
pub mod graded;
pub mod model;
pub mod mutation;
pub mod sampling;
pub mod scalar;
pub mod verify;
pub mod words;

pub use coalgebra::{Coalgebra, CoproductId, LawId, DEFAULT_MAX_TERMS};
pub use envelopes::{EnvelopeContext, QPart};
pub use error::{Error, Result};
pub use graded::{Generator, GeneratorRegistry, GradingView, Permutation, Sign};
pub use model::{AlgebraModel, AxiomId, FormalModel, FormsModel, Vector};
pub use mutation::Mutation;
pub use scalar::Scalar;
pub use verify::{run_suite, ModelKind, ReportFormat, SuiteConfig, SuiteId, Verdict, VerificationReport};
pub use words::text::{format_element, parse_element};
pub use words::{Element, TensorPowerElement, Word};
