//! HDR light-field compression.
//!
//! The pipeline simulates a coded-aperture camera that collapses an M-view
//! HDR light field into N acquired images (N << M), encodes the acquired
//! images perceptually in IPT opponent space, transform-codes them with a
//! separable 4D DCT over 8x8x8x8 blocks, and entropy-codes the quantized
//! coefficients into a self-contained `.lfc4` container. Decoding runs the
//! chain in reverse and reconstructs the light field with a ridge-regularized
//! linear inverse of the aperture patterns.
//!
//! Module map:
//!
//! - [`image`] / [`pfm`]: HDR image and light-field model, PFM file I/O
//! - [`aperture`]: aperture patterns, acquisition, linear reconstruction
//! - [`transform`]: 2D->4D folding, 4D DCT, quantization
//! - [`entropy`]: DPCM + run-length + Huffman coding, channel bitstreams
//! - [`perceptual`]: RGB<->IPT, perceptual transfer function, chroma
//!   power-law discretization
//! - [`metrics`]: PSNR, Bjontegaard deltas, rate-distortion sweeps
//! - [`container`] / [`codec`]: the `.lfc4` container and the end-to-end
//!   encode/decode/export pipeline

pub mod aperture;
pub mod codec;
pub mod container;
pub mod entropy;
mod error;
pub mod image;
pub mod metrics;
pub mod perceptual;
pub mod pfm;
pub mod transform;

pub use error::{Error, Result};

/// Container format version written by this crate.
pub const FORMAT_VERSION: u8 = 1;
