//! Klein pairs `(h, h0)` built from representations, and their
//! Weissfeiler filtrations.

mod analysis;
mod pair;
mod semidirect;
mod stiffening;
mod weissfeiler;

pub use analysis::{analyze, analyze_pair, PairAnalysis};
pub use pair::{build_klein_pair, KleinPair, Provenance, StabilizerChoice};
pub use semidirect::{semidirect, SemidirectAlgebra};
pub use stiffening::{is_stiffening, StiffeningReport};
pub use weissfeiler::{half_tail_report, is_effective, weissfeiler, HalfTailReport, WeissfeilerResult};
