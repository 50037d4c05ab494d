//! Spec files in, reports and drawings out.

pub mod dot;
pub mod report;
pub mod spec;

pub use dot::emit_dot;
pub use report::{Report, REPORT_SCHEMA, SCHEMA_VERSION};
pub use spec::{AlgebraKind, AlgebraSpecFile, FieldKind, Product, SpecError};
