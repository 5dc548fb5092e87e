//! The concrete objects: `sl(2)`, its symmetric powers, named subalgebras,
//! and the family harness that checks them row by row.

mod family;
mod sl2;

pub use family::{family_row, verify_family, FamilyError, FamilyReport, FamilyRow, ORD_DISCREPANCY_NOTE};
pub use sl2::{named_subalgebra, sl2, sympower, NamedSubalgebra, E, F, H};
