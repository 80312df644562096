//! Sheaf expressions, their Grothendieck classes, and the registry of short exact sequences.

mod expr;
mod kclass;
mod registry;

pub use expr::{restricted, SheafExpr};
pub use kclass::KClass;
pub use registry::{NamedSheaf, Provenance, Registry, Role, SESRecord};
