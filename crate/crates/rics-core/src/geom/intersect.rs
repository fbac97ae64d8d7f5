use glam::DVec3;

/// Rays with |det| below this are treated as parallel to the triangle plane
/// and miss, so coplanar rays never register grazing hits.
pub const DET_EPSILON: f64 = 1e-12;

/// Möller–Trumbore ray/triangle test. Both triangle sides hit (no backface
/// culling); boundary barycentrics are inclusive. Returns the ray parameter,
/// which the caller checks against its own `[t_min, t_max]`.
#[inline]
pub fn ray_triangle(origin: DVec3, dir: DVec3, v0: DVec3, v1: DVec3, v2: DVec3) -> Option<f64> {
    let e1 = v1 - v0;
    let e2 = v2 - v0;
    let p = dir.cross(e2);
    let det = e1.dot(p);
    if det.abs() < DET_EPSILON {
        return None;
    }
    let inv_det = 1.0 / det;
    let s = origin - v0;
    let u = s.dot(p) * inv_det;
    if !(0.0..=1.0).contains(&u) {
        return None;
    }
    let q = s.cross(e1);
    let v = dir.dot(q) * inv_det;
    if v < 0.0 || u + v > 1.0 {
        return None;
    }
    Some(e2.dot(q) * inv_det)
}

#[cfg(test)]
mod tests {
    use super::*;

    const V0: DVec3 = DVec3::new(0.0, 0.0, 0.0);
    const V1: DVec3 = DVec3::new(1.0, 0.0, 0.0);
    const V2: DVec3 = DVec3::new(0.0, 1.0, 0.0);

    #[test]
    fn hits_interior_at_plane_distance() {
        let t = ray_triangle(
            DVec3::new(0.25, 0.25, 5.0),
            DVec3::new(0.0, 0.0, -1.0),
            V0,
            V1,
            V2,
        );
        assert_eq!(t, Some(5.0));
    }

    #[test]
    fn hits_from_both_sides() {
        let t = ray_triangle(
            DVec3::new(0.25, 0.25, -5.0),
            DVec3::new(0.0, 0.0, 1.0),
            V0,
            V1,
            V2,
        );
        assert_eq!(t, Some(5.0));
    }

    #[test]
    fn coplanar_ray_misses() {
        let t = ray_triangle(
            DVec3::new(-1.0, 0.25, 0.0),
            DVec3::new(1.0, 0.0, 0.0),
            V0,
            V1,
            V2,
        );
        assert_eq!(t, None);
    }

    #[test]
    fn outside_barycentrics_miss() {
        let t = ray_triangle(
            DVec3::new(0.9, 0.9, 5.0),
            DVec3::new(0.0, 0.0, -1.0),
            V0,
            V1,
            V2,
        );
        assert_eq!(t, None);
    }

    #[test]
    fn negative_t_is_reported_for_caller_to_reject() {
        let t = ray_triangle(
            DVec3::new(0.25, 0.25, -5.0),
            DVec3::new(0.0, 0.0, -1.0),
            V0,
            V1,
            V2,
        );
        assert_eq!(t, Some(-5.0));
    }
}
