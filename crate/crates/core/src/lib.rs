//! Communicability-based node centrality for large undirected networks.
//!
//! Scores come from `f(A) 1` (total communicability) and `diag f(A)`
//! (subgraph centrality) for `f(x) = exp(beta x)` and the Katz resolvent
//! `f(x) = 1/(1 - alpha x)`, computed with Krylov methods that only touch
//! `A` through sparse products.
//!
//! * [`graph`]: CSR adjacency, loaders and seeded generators.
//! * [`krylov`]: Lanczos, restarted `exp(beta A) v`, Gauss quadrature, CG,
//!   dominant eigenpairs and a dense reference path.
//! * [`centrality`]: score vectors, network-level quantities and rankings.
//! * [`compare`]: correlation and intersection distance between rankings.
//! * [`reference`]: exact walk counts and truncated series for small graphs.
//! * [`cli`]: the `netcomm` command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod centrality;
pub mod cli;
pub mod compare;
pub mod error;
pub mod graph;
pub mod krylov;
pub mod reference;

pub use error::{Error, Result};
