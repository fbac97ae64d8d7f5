//! Per-pixel directional self-occlusion maps.
//!
//! For every foreground pixel, 62 rays are shot from the surface point the
//! primary camera ray hits, in a fixed direction fan that rides the camera
//! frame. Each hit-or-miss against the mesh itself becomes one bit of a
//! 64-bit word; bit 62 marks foreground coverage and bit 63 stays clear.

mod directions;
mod io;
mod map;
mod oracle;
mod viz;
mod word;

pub use directions::{DirectionSet, DIRECTION_COUNT};
pub use io::{load_rics, read_rics, save_rics, write_rics, RicsIoError, RICS_MAGIC, RICS_VERSION};
pub use map::{
    compute_rics_map, occlusion_bits, occlusion_epsilon, OcclusionMap, OCCLUSION_T_MIN_SCALE,
};
pub use oracle::brute_force_rics_map;
pub use viz::{direction_slice_image, popcount_image};
pub use word::{OcclusionWord, WordFormatError, COVERAGE_BIT_INDEX};
