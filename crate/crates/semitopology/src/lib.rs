//! Finite semitopologies: point-set topology without intersection closure.
//!
//! A semitopology models a decentralised system: points are participants
//! and open sets are coalitions that can act together. Opens contain the
//! empty set and the whole space and are closed under arbitrary unions, but
//! not necessarily under intersection — which is exactly what distinguishes
//! quorum-style structures from classical topologies.
//!
//! The crate provides:
//!
//! - [`SemiTopology`]: spaces presented by a finite generating basis, with
//!   the open/closed set algebra (interior, closure, complements, open-set
//!   enumeration, subspaces);
//! - intersection relations, transitive sets, topens and the maximal-topen
//!   partition ([`relations`], [`TopenPartition`]);
//! - the per-point taxonomy: intertwined sets, communities, regular /
//!   weakly regular / quasiregular / unconflicted / hypertransitive points,
//!   closed neighbourhoods and regular open/closed sets ([`classify`]);
//! - value assignments, continuity as local agreement, split detection and
//!   closure propagation ([`values`]);
//! - a gallery of named example spaces with pinned expectations
//!   ([`gallery`]);
//! - definitional brute-force oracles for every predicate ([`oracle`]) and
//!   a law suite that replays the structural theorems on any space
//!   ([`laws`]);
//! - JSON interchange ([`doc`]) and Graphviz export ([`dot`]).
//!
//! ```
//! use semitopology::{PointSet, SemiTopology};
//!
//! // Three points; {0} and {2} generate the opens (∅ and the whole space
//! // are open implicitly). Point 1 is only covered by the whole space.
//! let st = SemiTopology::new(3, [vec![0], vec![2]])?;
//!
//! // 1 is intertwined with everything, so its community is the whole
//! // space — which is not transitive, leaving 1 outside every topen.
//! assert_eq!(st.intertwined_of(1), PointSet::full(3));
//! let partition = st.maximal_topen_partition();
//! assert_eq!(partition.topens.len(), 2);
//! assert_eq!(partition.residue, PointSet::singleton(3, 1));
//!
//! // A value committed by the open seed {0} obliges exactly its closure.
//! let outcome = st.propagate(&PointSet::singleton(3, 0), 0)?;
//! assert_eq!(
//!     outcome.committed_grade1,
//!     PointSet::singleton(3, 1),
//!     "point 1 must follow the seed's value to keep progressing",
//! );
//! # Ok::<(), semitopology::Error>(())
//! ```

pub mod classify;
pub mod doc;
pub mod dot;
mod error;
pub mod gallery;
pub mod laws;
pub mod oracle;
pub mod relations;
mod set;
mod space;
pub mod values;

pub use classify::{Classification, PointClass};
pub use error::{Error, Result};
pub use relations::{between, between_in, TopenPartition};
pub use set::{PointSet, MAX_POINTS};
pub use space::{OpenFamily, SemiTopology, DEFAULT_OPENS_CAP};
pub use values::{PropagationResult, ValueAssignment, ValueId};
