//! Exact coefficient-field kernels.

pub mod expr;
pub mod json;
pub mod linalg;
pub mod logseries;
pub mod palin;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;

pub use logseries::LogSeries;
pub use palin::{palin_reflect, PalinPoly};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{q, qi, Q};
pub use series::Series;
