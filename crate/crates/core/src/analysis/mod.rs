//! Decision procedures, witnesses and certificates for linear automata.
//!
//! Every witness or preimage returned here has been checked exactly against
//! the automaton before it is handed back.

mod decomposition;
mod finite;
mod search;
mod telescope;
mod verdict;
mod verify;
mod window;

pub use decomposition::{
    coset_representatives, product_decomposition_check, product_decomposition_check_with, GlobalMap,
};
pub use finite::{decide_bijectivity_finite, decide_via_restriction, kernel_witness_global, matrix_of};
pub use search::{preimage_window, preinjectivity_search, preinjectivity_window, PreinjectivitySearch};
pub use telescope::{preimage_telescope, preimage_telescope_with, TelescopedPreimage, TAIL_MARGIN};
pub use verdict::{Decision, Method, Verdict};
pub use verify::{certify, covering_window, verify, Mismatch, Verification};
pub use window::{Window, WindowRecipe};
