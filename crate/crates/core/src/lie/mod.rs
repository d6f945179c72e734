//! Finite-dimensional Lie subalgebras of a Poisson field: closure under
//! the bracket, adjoint actions, and the pairs that certify a bracket is
//! not abelian.

mod adjoint;
mod canonical;
mod closure;
mod span;
mod verdict;
mod witness;

pub use adjoint::{ad_analysis, AdjointAnalysis};
pub use canonical::{canonical_pair, plane_structure, CanonicalPair};
pub use closure::{lie_closure, LieClosureReport, TraceEntry, DEFAULT_MAX_DIM};
pub use span::{express, span_rank};
pub use verdict::{abelian_verdict, AbelianVerdict, LieWitness, WitnessKind};
pub use witness::{witness_transform, WitnessCase, WitnessTransform};
