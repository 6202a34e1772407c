//! Exact Jones-Wenzl projectors for `U_q(sl2)`.
//!
//! Everything is computed over `Q(q, t_1, .., t_n)` with `t_j = q^{mu_j}`:
//! quantum integers and Laurent arithmetic in [`qfield`], graded weight
//! spaces and generator actions in [`repspaces`], the fusion maps and
//! Temperley-Lieb generators in [`intertwiners`], and the classical and
//! Verma-module projectors in [`projectors`].

pub mod error;
pub mod intertwiners;
mod par;
pub mod projectors;
pub mod qfield;
pub mod repspaces;

pub use error::{Error, Result};
