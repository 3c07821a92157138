//! Scale-free network generation and analysis.
//!
//! Two generators are provided:
//!
//! * randomly stopped linking (RSL): every node draws a stopping probability
//!   `q` from the density `a(q) = (1+c) q^c` and then a shifted-geometric
//!   degree; stubs are paired by the configuration model.
//! * Barabási–Albert growth with linear preferential attachment.
//!
//! Around them sit closed-form degree distributions ([`analytic_pmf`]), the
//! one-step Bernoulli-trial update of the BA degree distribution
//! ([`ba_bernoulli`]), discrete power-law fitting ([`powerlaw_fit`]) and the
//! file formats used by the `scalefree` command line tool ([`cli_io`]).

pub mod analytic_pmf;
pub mod ba_bernoulli;
pub mod cli_io;
mod error;
pub mod graph_gen;
pub mod powerlaw_fit;
pub mod quadrature;
pub mod sampling;
pub mod zeta;

pub use analytic_pmf::PmfModel;
pub use ba_bernoulli::BernoulliStepReport;
pub use error::{Error, Result};
pub use graph_gen::{BAParams, MultiGraph};
pub use powerlaw_fit::PowerLawFit;
pub use sampling::{DegreeSequence, MixingSpec, RngSeed};
