//! Convolutional networks with symmetry-tied 3x3 kernels.
//!
//! Tying kernel positions across flips and rotations makes convolution layers
//! equivariant to those transforms, and a network that ends in global average
//! pooling invariant to them. This crate implements the five tying levels,
//! expansion/folding between free parameters and full kernels, forward and
//! backward passes that exploit the tying via the distributive law, a
//! DenseNet-style CIFAR-10 classifier, an ADAM training harness, and a
//! verification suite that checks the invariance and gradient claims
//! numerically.

pub mod error;
pub mod symmetry;
pub mod tensor;
pub mod transforms;

pub use error::{Error, Result};
pub use symmetry::SymmetryLevel;
pub use tensor::Tensor;
