//! Jet-filtrations: ascending chains `V_1 ⊊ … ⊊ V_k ⊊ V` whose terms are
//! pushed forward by the action, the greedy construction from a start vector,
//! and the search for long chains.

mod chain;
mod filtration;
mod search;

pub use chain::{greedy_chain, image_span, is_maximally_refined, validate_jet_filtration, GreedyChain};
pub use filtration::{Direction, Filtration};
pub use search::{jet_order_search, CandidateOutcome, JetSearchResult, SearchStrategy};
