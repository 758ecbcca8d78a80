//! Edge-Hosoya polynomials of benzenoid chains.
//!
//! Three independent routes produce the same polynomial:
//!
//! * [`oracle`]: breadth-first search over the line graph of an explicit graph
//!   built by [`chain::build_graph`];
//! * [`recurrence`]: the annelation recurrences folded over the chain's turns;
//! * [`polyacene`]: closed rational-function formulas for linear chains.
//!
//! [`indices`] derives the edge-Wiener and edge-hyper-Wiener indices from any of
//! them.

pub mod chain;
pub mod cli;
pub mod graph;
pub mod indices;
pub mod oracle;
pub mod poly;
pub mod polyacene;
pub mod recurrence;
pub mod report;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use chain::{build_graph, parse_spec, BenzenoidGraph, ChainSpec, Turn};
pub use graph::Graph;
pub use indices::IndexReport;
pub use poly::{Polynomial, SignedPolynomial};
pub use recurrence::{chain_edge_hosoya, AnnelationCase, ChainState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Chain(#[from] chain::ChainError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Index(#[from] indices::IndexError),
    #[error("closed form only covers linear chains (all turns S), got {0}")]
    NotLinear(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Poly(poly::PolyError::Overflow) | Error::Index(indices::IndexError::Overflow(_)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Recurrence,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::Recurrence, Method::ClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Edge-Hosoya polynomial of `spec` by the chosen route.
pub fn edge_hosoya(spec: &ChainSpec, method: Method) -> Result<Polynomial, Error> {
    match method {
        Method::Oracle => Ok(oracle::edge_hosoya_bruteforce(build_graph(spec).graph())?),
        Method::Recurrence => Ok(chain_edge_hosoya(spec)?),
        Method::ClosedForm => {
            if !spec.is_linear() {
                return Err(Error::NotLinear(spec.to_string()));
            }
            Ok(polyacene::edge_hosoya_closed(spec.hexagons())?)
        }
    }
}
