use glam::DVec3;

/// A ray segment. `direction` is expected to be unit length; `t_min`/`t_max`
/// bound the accepted hit parameter in scene units.
#[derive(Clone, Copy, Debug)]
pub struct Ray {
    pub origin: DVec3,
    pub direction: DVec3,
    pub t_min: f64,
    pub t_max: f64,
}

impl Ray {
    pub fn new(origin: DVec3, direction: DVec3, t_min: f64, t_max: f64) -> Ray {
        debug_assert!((direction.length() - 1.0).abs() < 1e-9);
        debug_assert!(t_min >= 0.0 && t_min < t_max);
        Ray {
            origin,
            direction,
            t_min,
            t_max,
        }
    }

    /// Full-length ray with a normalized copy of `direction`.
    pub fn toward(origin: DVec3, direction: DVec3) -> Ray {
        Ray::new(origin, direction.normalize(), 0.0, f64::INFINITY)
    }

    pub fn at(&self, t: f64) -> DVec3 {
        self.origin + t * self.direction
    }
}

/// Closest accepted intersection along a ray.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HitRecord {
    /// Ray parameter of the hit; equals the distance for unit directions.
    pub t: f64,
    pub point: DVec3,
    /// Unit triangle-plane normal, orientation as stored (not camera-facing).
    pub geometric_normal: DVec3,
    pub triangle_index: u32,
}
