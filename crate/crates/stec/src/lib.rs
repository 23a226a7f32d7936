//! STEC: stacked attention blocks that expose the bilinear feature
//! interactions embedded inside scaled dot-product attention logits,
//! applied to click-through-rate prediction.
//!
//! The crate is organized around a small define-by-run autodiff engine
//! ([`tensor`]) on top of which the model is assembled:
//!
//! - [`embedding`] maps categorical/numerical fields into a shared space
//! - [`block`] implements the attention block that emits per-pair bilinear
//!   interaction tensors alongside the usual attention output
//! - [`model`] stacks blocks, fuses interaction levels, and predicts
//! - [`training`] provides BCE loss, Adam, AUC, and the fit loop
//! - [`data`] ingests delimited-text datasets and generates synthetic ones
//! - [`verify`] runs the randomized equivalence and gradient-check suites

pub mod block;
pub mod data;
pub mod embedding;
mod error;
pub mod model;
pub mod tensor;
pub mod training;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use tensor::{Graph, Scalar, Tensor, Var};
