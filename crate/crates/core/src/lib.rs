//! Exact and numerical verification of the octonionic Hopf groupoid, its
//! Lie algebroid, the universal Lie 3-algebroid of the octonionic Hopf
//! foliation, and the tangent-field obstructions around it.

pub mod algebroid;
pub mod cayley_dickson;
pub mod foliation;
pub mod groupoid;
pub mod hopf;
pub mod lie3;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod seed;

pub use cayley_dickson::{AlgebraDim, AlgebraElement, AlgebraError, MultiplicationTable};
pub use poly::{Polynomial, Rational, VariableId};
pub use report::{Check, Evidence, Status, VerificationReport};
pub use scalar::Scalar;
