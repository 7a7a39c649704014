//! Tutorial mining: find the fragments of API tutorials that explain a given API.
//!
//! The library implements a corpus-to-report pipeline:
//!
//! 1. [`corpus`] segments HTML tutorials into fragments, identifies API
//!    mentions, and assembles a labeled [`corpus::Dataset`] of API-fragment
//!    pairs.
//! 2. [`knowledge`] builds per-API extensions from a Q&A corpus (crowd
//!    knowledge) and from API specifications (expert knowledge).
//! 3. [`embedding`] trains skip-gram word embeddings over the combined text
//!    corpus for semantic similarity.
//! 4. [`features`] turns each API-fragment pair into a 17-dimensional feature
//!    vector in three groups, with a swappable similarity backend
//!    ([`similarity`]).
//! 5. [`model`] trains a CART decision tree on the vectors, and provides an
//!    information-retrieval baseline for comparison.
//! 6. [`evaluation`] runs leave-one-out cross validation and the three
//!    experiment drivers (feature-group ablation, similarity swap, model
//!    comparison), emitting JSON and text-table reports.
//!
//! [`pipeline`] wires the stages together behind a single [`pipeline::RunConfig`];
//! the `tutmine` CLI is a thin shell over it. [`synthetic`] generates the
//! bundled corpus with planted relevance signals used by the test suite and
//! the quick-start demo.

pub mod corpus;
pub mod embedding;
pub mod error;
pub mod evaluation;
pub mod features;
pub mod knowledge;
pub mod model;
pub mod pipeline;
pub mod similarity;
pub mod synthetic;
pub mod text;

pub use corpus::{ApiFragmentPair, ApiName, Dataset, Fragment, Label, Tutorial};
pub use error::{Error, Result};
pub use evaluation::{ConfusionMatrix, ExperimentReport, Metrics};
pub use features::{FeatureVector, GroupMask, FEATURE_NAMES};
pub use model::{DecisionTree, IrModel, TreeConfig};
pub use similarity::SimilarityKind;
pub use text::TextBlock;
