//! Small dominating sets and connected dominating sets for wireless network
//! graphs, built from edge dominating capability (EDC) weights.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the canonical [`Graph`], random unit-disk graph
//!   generation and the validity predicates everything else is checked against.
//! * [`edc`] computes edge weights and the two EDC dominating-set algorithms.
//! * [`cds`] connects a dominating set into a connected dominating set.
//! * [`baselines`] contains the comparison algorithms.
//! * [`oracle`] has exact brute-force optima and the approximation-ratio checks.
//! * [`bench`] runs the randomized sweep and emits CSV.
//! * [`cli`] is the `edcds` command-line front end.
//!
//! ```
//! use edcds::cds::edc_cds;
//! use edcds::edc::DsAlgorithm;
//! use edcds::graph::{build_graph, is_connected_dominating_set};
//!
//! let p5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
//! let ds = DsAlgorithm::Improved.run(&p5);
//! assert_eq!(ds.dominators, vec![1, 3]);
//!
//! let cds = edc_cds(&p5, &ds.dominators)?;
//! assert_eq!(cds.connectors, vec![2]);
//! assert!(is_connected_dominating_set(&p5, &cds.cds));
//! # Ok::<(), edcds::Error>(())
//! ```

pub mod baselines;
pub mod bench;
pub mod cds;
pub mod cli;
pub mod edc;
mod error;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{GeoGraph, Graph, NodeId};
