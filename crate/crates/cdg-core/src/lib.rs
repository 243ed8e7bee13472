//! Classification engine for prime character degree graphs of solvable
//! groups, specialized to graphs on at most eight vertices.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`graph`] — immutable small graphs with exact canonical forms;
//! 2. [`enumerate`] — the universe of isomorphism classes on `n` vertices;
//! 3. [`rules`] — necessary conditions that eliminate graphs, each
//!    returning a replayable witness;
//! 4. [`construct`] — occurrence certificates: joins of occurring factors
//!    and semilinear field-action degree sets;
//! 5. [`kb`] — the seeded knowledge base of literature verdicts keyed by
//!    canonical form;
//! 6. [`classify`] — the verdict engine combining all of the above with
//!    memoization and justification traces;
//! 7. [`admissible`] — vertex admissibility and the side-condition
//!    checkers used to certify the hand-proved eliminations.
//!
//! Everything here is `no_std + alloc`; IO, file formats, and the CLI live
//! in the companion `cdg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod admissible;
pub mod classify;
pub mod construct;
pub mod enumerate;
pub mod factor;
pub mod fixtures;
pub mod graph;
pub mod kb;
pub mod rules;
pub mod verdict;

pub use classify::{ClassificationReport, Classifier, PipelineCounts};
pub use enumerate::{enumerate_graphs, filter_universe, GraphUniverse};
pub use graph::{CanonicalKey, Diameter, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use kb::KnowledgeBase;
pub use verdict::{Certificate, Justification, Verdict, VerdictRecord};
