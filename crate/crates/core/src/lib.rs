//! Scoring of graph generative models with a graphlet-kernel classifier.
//!
//! The pipeline featurizes graphs by counting small connected induced
//! subgraphs (graphlets), builds a kernel matrix over the dataset, trains a
//! kernel SVM to tell "real" target graphs from generated ones, and reports
//! how far the cross-validated accuracy sits from chance. Accuracy near 0.5
//! means the generator fooled the classifier; the reported score is
//! `|accuracy - 0.5|`, lower is better.

pub mod classifier;
pub mod dataset;
pub mod evaluator;
pub mod generators;
pub mod graph;
pub mod graphlets;
pub mod kernel;
pub mod rng;

pub use dataset::{Dataset, Label};
pub use graph::Graph;
pub use rng::RngSeed;
