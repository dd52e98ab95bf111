pub mod error;
pub mod exact_arith;
pub mod groups;
pub mod config_space;
pub mod automaton;
pub mod analysis;
pub mod random;
pub mod cli;
