//! Self-occlusion map toolkit for triangle meshes.
//!
//! The core object is the occlusion map: for every foreground pixel of a
//! rendered view, a fixed fan of 62 rays is shot from the underlying surface
//! point and each hit/miss against the mesh itself is recorded as one bit of
//! a 64-bit word (bit 62 marks foreground coverage). Maps are computed with a
//! BVH-accelerated caster and can be re-derived by an independent brute-force
//! oracle for bit-exact verification.
//!
//! Around that sit the supporting pieces a shading-harmonization pipeline
//! needs offline: edge-weighted reconstruction losses, GAN and feature
//! matching objectives, MSE/SSIM metrics, Canny-based edge weight masks,
//! network shape verification, motion-sequence slicing, and segmentation
//! label remapping.

pub mod archcheck;
pub mod camera;
pub mod dataset;
pub mod geom;
pub mod img;
pub mod procgen;
pub mod rics;
