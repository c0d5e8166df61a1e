//! Datasets, differentiable models and the local SGD update.

mod data;
mod model;
mod sgd;

pub use data::{load_csv, partition_iid, synth_dataset, Dataset, Partition, Sample};
pub use model::{Architecture, Layer, LossKind, ModelSpec, ParamVector, Shape};
pub use sgd::{global_objective, model_update, refs, Hyperparams, Schedule};
