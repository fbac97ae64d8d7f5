//! Pinhole camera: per-pixel primary rays and the first-hit map they produce.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use glam::{DMat3, DVec3};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{BvhAccel, Ray};

#[derive(Debug, Error)]
pub enum CameraError {
    #[error("pixel ({px}, {py}) outside {width}x{height} image")]
    PixelOutOfRange { px: u32, py: u32, width: u32, height: u32 },
    #[error("cam_to_world must have 16 entries, found {0}")]
    BadMatrixLength(usize),
    #[error("cam_to_world is not a rigid transform: {0}")]
    NotRigid(&'static str),
    #[error("vfov_deg must lie in (0, 180), found {0}")]
    BadFov(f64),
    #[error("image dimensions must be at least 1x1, found {width}x{height}")]
    BadDims { width: u32, height: u32 },
    #[error("camera file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// JSON wire form of a camera.
#[derive(Serialize, Deserialize)]
struct CameraFile {
    cam_to_world: Vec<f64>,
    vfov_deg: f64,
    width: u32,
    height: u32,
}

/// Pinhole camera: a rigid camera-to-world transform (given row-major) plus a
/// vertical field of view. The local frame is right-handed with x right,
/// y up, and the view direction along -z; the principal point sits at the
/// image center and the horizontal FOV follows from the aspect ratio.
#[derive(Clone, Debug)]
pub struct CameraModel {
    cam_to_world: [f64; 16],
    rotation: DMat3,
    position: DVec3,
    vfov_deg: f64,
    width: u32,
    height: u32,
}

const ORTHO_TOL: f64 = 1e-6;

impl CameraModel {
    pub fn new(
        cam_to_world: [f64; 16],
        vfov_deg: f64,
        width: u32,
        height: u32,
    ) -> Result<CameraModel, CameraError> {
        if !(0.0 < vfov_deg && vfov_deg < 180.0) {
            return Err(CameraError::BadFov(vfov_deg));
        }
        if width < 1 || height < 1 {
            return Err(CameraError::BadDims { width, height });
        }
        let m = &cam_to_world;
        if m.iter().any(|v| !v.is_finite()) {
            return Err(CameraError::NotRigid("non-finite entry"));
        }
        // Row-major input: columns of the rotation block are the camera axes.
        let rotation = DMat3::from_cols(
            DVec3::new(m[0], m[4], m[8]),
            DVec3::new(m[1], m[5], m[9]),
            DVec3::new(m[2], m[6], m[10]),
        );
        let position = DVec3::new(m[3], m[7], m[11]);

        let rtr = rotation.transpose() * rotation;
        let identity = DMat3::IDENTITY;
        for c in 0..3 {
            for r in 0..3 {
                if (rtr.col(c)[r] - identity.col(c)[r]).abs() > ORTHO_TOL {
                    return Err(CameraError::NotRigid("rotation block is not orthonormal"));
                }
            }
        }
        if rotation.determinant() < 0.0 {
            return Err(CameraError::NotRigid("rotation block is a reflection"));
        }
        if m[12].abs() > ORTHO_TOL || m[13].abs() > ORTHO_TOL || m[14].abs() > ORTHO_TOL
            || (m[15] - 1.0).abs() > ORTHO_TOL
        {
            return Err(CameraError::NotRigid("last row must be (0, 0, 0, 1)"));
        }

        Ok(CameraModel {
            cam_to_world,
            rotation,
            position,
            vfov_deg,
            width,
            height,
        })
    }

    pub fn from_json_reader<R: Read>(reader: R) -> Result<CameraModel, CameraError> {
        let file: CameraFile = serde_json::from_reader(reader)?;
        let len = file.cam_to_world.len();
        let m: [f64; 16] = file
            .cam_to_world
            .try_into()
            .map_err(|_| CameraError::BadMatrixLength(len))?;
        CameraModel::new(m, file.vfov_deg, file.width, file.height)
    }

    pub fn load_json<P: AsRef<Path>>(path: P) -> Result<CameraModel, CameraError> {
        CameraModel::from_json_reader(BufReader::new(File::open(path)?))
    }

    pub fn to_json_writer<W: Write>(&self, writer: W) -> Result<(), CameraError> {
        let file = CameraFile {
            cam_to_world: self.cam_to_world.to_vec(),
            vfov_deg: self.vfov_deg,
            width: self.width,
            height: self.height,
        };
        serde_json::to_writer_pretty(writer, &file)?;
        Ok(())
    }

    pub fn save_json<P: AsRef<Path>>(&self, path: P) -> Result<(), CameraError> {
        self.to_json_writer(BufWriter::new(File::create(path)?))
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn vfov_deg(&self) -> f64 {
        self.vfov_deg
    }

    pub fn position(&self) -> DVec3 {
        self.position
    }

    /// World-from-camera rotation (camera axes as columns).
    pub fn rotation(&self) -> DMat3 {
        self.rotation
    }

    pub fn cam_to_world(&self) -> [f64; 16] {
        self.cam_to_world
    }

    /// Primary ray through the center of pixel `(px, py)`, i.e. through image
    /// plane coordinate `(px + 0.5, py + 0.5)` with row 0 at the top.
    pub fn pixel_ray(&self, px: u32, py: u32) -> Result<Ray, CameraError> {
        if px >= self.width || py >= self.height {
            return Err(CameraError::PixelOutOfRange {
                px,
                py,
                width: self.width,
                height: self.height,
            });
        }
        let tan_half_v = (0.5 * self.vfov_deg.to_radians()).tan();
        let tan_half_h = tan_half_v * self.width as f64 / self.height as f64;
        let ndc_x = (px as f64 + 0.5) / self.width as f64 * 2.0 - 1.0;
        let ndc_y = 1.0 - (py as f64 + 0.5) / self.height as f64 * 2.0;
        let dir_cam = DVec3::new(ndc_x * tan_half_h, ndc_y * tan_half_v, -1.0).normalize();
        Ok(Ray::new(
            self.position,
            self.rotation * dir_cam,
            0.0,
            f64::INFINITY,
        ))
    }
}

/// First hit of one pixel's primary ray.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HitPixel {
    pub point: DVec3,
    /// Geometric normal flipped, if needed, to face the camera.
    pub normal: DVec3,
    /// Ray parameter of the hit (= distance from the camera position).
    pub depth: f64,
    pub triangle_index: u32,
}

/// Per-pixel first hits for a full camera frame, row-major, row 0 on top.
#[derive(Clone, Debug)]
pub struct HitPointMap {
    width: u32,
    height: u32,
    pixels: Vec<Option<HitPixel>>,
}

impl HitPointMap {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn get(&self, px: u32, py: u32) -> Option<&HitPixel> {
        self.pixels[(py * self.width + px) as usize].as_ref()
    }

    pub fn pixels(&self) -> &[Option<HitPixel>] {
        &self.pixels
    }

    pub fn covered_count(&self) -> usize {
        self.pixels.iter().filter(|p| p.is_some()).count()
    }
}

/// Casts every pixel ray and records the first hit. Pixels are independent,
/// so the parallel evaluation is byte-identical to a sequential one.
pub fn primary_hit_map(cam: &CameraModel, accel: &BvhAccel) -> HitPointMap {
    let width = cam.width();
    let height = cam.height();
    let mut pixels: Vec<Option<HitPixel>> = vec![None; (width * height) as usize];
    pixels
        .par_chunks_mut(width as usize)
        .enumerate()
        .for_each(|(py, row)| {
            for (px, slot) in row.iter_mut().enumerate() {
                let ray = cam
                    .pixel_ray(px as u32, py as u32)
                    .expect("pixel indices are in range");
                *slot = accel.first_hit(&ray).map(|hit| {
                    let facing = if hit.geometric_normal.dot(ray.direction) > 0.0 {
                        -hit.geometric_normal
                    } else {
                        hit.geometric_normal
                    };
                    HitPixel {
                        point: hit.point,
                        normal: facing,
                        depth: hit.t,
                        triangle_index: hit.triangle_index,
                    }
                });
            }
        });
    HitPointMap {
        width,
        height,
        pixels,
    }
}

pub const IDENTITY_CAM_TO_WORLD: [f64; 16] = [
    1.0, 0.0, 0.0, 0.0, //
    0.0, 1.0, 0.0, 0.0, //
    0.0, 0.0, 1.0, 0.0, //
    0.0, 0.0, 0.0, 1.0,
];
