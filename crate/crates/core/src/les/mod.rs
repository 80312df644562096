//! Interval propagation over cohomology dimensions.

mod chain;
mod interval;
mod solver;

pub use interval::DimInterval;
pub use solver::{
    CohTable, Constraint, ConstraintKind, FactSource, Key, Solver, SolverOptions, SolverStats, TraceStep,
};
