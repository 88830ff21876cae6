pub mod arith;
pub mod bailey;
pub mod catalog;
pub mod qseries;
pub mod verifier;
