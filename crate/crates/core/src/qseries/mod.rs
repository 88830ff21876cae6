//! q-series building blocks: Pochhammer symbols, Gaussian polynomials,
//! signed finite sums and truncated theta double sums.

pub mod binomial;
pub mod pochhammer;
pub mod summation;
pub mod theta;

pub use binomial::{q_binomial, QBinomialTable};
pub use pochhammer::{pochhammer, pochhammer_monomial, PochArgument, PrefixStream};
pub use summation::{sgn, signed_range, signed_range_sum};
pub use theta::{
    theta_double_sum, JQuadratic, KQuadratic, SgnMode, SignMode, ThetaSpec, WeightMode,
};
