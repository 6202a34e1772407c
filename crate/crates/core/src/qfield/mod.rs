//! Exact arithmetic in `Q(q, t_1, .., t_n)` where `t_j` stands for `q^{mu_j}`.

mod coeff;
mod cyclotomic;
mod mono;
mod poly;
mod quantum;
mod rational;
pub(crate) mod weight;

pub use coeff::Coeff;
pub use mono::LaurentMono;
pub use poly::LaurentPoly;
pub use quantum::{qbinomial, qfactorial, qint, qint_int};
pub use rational::RationalFn;
pub use weight::{Named, WeightExpr};

/// Maximum number of weight symbols `mu_1 .. mu_n` in one computation.
pub const MAX_SYMBOLS: usize = 8;

/// Symbol index to integer value.
pub type Assignment = std::collections::BTreeMap<usize, i64>;
