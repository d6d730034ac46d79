//! Feature-attribution stability toolkit for tabular classifiers.
//!
//! The crate trains reference tree and forest models on longitudinal
//! tabular cohorts, explains their predictions with Shapley values
//! (exact subset enumeration or permutation sampling) and permutation
//! feature importance, and quantifies how stable those explanations
//! are within a model, across classification scenarios, and across
//! diagnosis/prognosis tasks.
//!
//! Modules:
//!
//! - [`tabular`]: longitudinal dataset model, scenario construction,
//!   CSV/schema I/O.
//! - [`synth`]: deterministic synthetic cohort generator.
//! - [`matrix`]: the dense numeric feature matrix consumed by models.
//! - [`preprocess`]: imputation, scaling, encoding, subject-level
//!   splits, grouped k-fold, and SMOTE oversampling.
//! - [`models`]: CART trees, bagged forests, model selection,
//!   evaluation metrics, and permutation importance.
//! - [`shap`]: Shapley attribution engines and importance summaries.
//! - [`stability`]: rank agreement, top-k overlap, sign consistency,
//!   magnitude-shift metrics, and the three comparison analyses.
//! - [`report`]: Markdown/CSV/JSON table emitters and parsers.
//! - [`plot`]: SVG beeswarm and importance bar charts.
//! - [`experiment`]: end-to-end orchestration with a hashed manifest.

pub mod error;
pub mod experiment;
pub mod matrix;
pub mod models;
pub mod plot;
pub mod preprocess;
pub mod report;
pub mod seed;
pub mod shap;
pub mod stability;
pub mod synth;
pub mod tabular;

pub use error::{Error, Result};
