use glam::DVec3;

/// Axis-aligned bounding box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb {
    pub min: DVec3,
    pub max: DVec3,
}

impl Aabb {
    pub const EMPTY: Aabb = Aabb {
        min: DVec3::splat(f64::INFINITY),
        max: DVec3::splat(f64::NEG_INFINITY),
    };

    pub fn from_points<I>(points: I) -> Aabb
    where
        I: IntoIterator<Item = DVec3>,
    {
        let mut b = Aabb::EMPTY;
        for p in points {
            b.grow(p);
        }
        b
    }

    pub fn grow(&mut self, p: DVec3) {
        self.min = self.min.min(p);
        self.max = self.max.max(p);
    }

    pub fn union(&self, other: &Aabb) -> Aabb {
        Aabb {
            min: self.min.min(other.min),
            max: self.max.max(other.max),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.min.x > self.max.x
    }

    pub fn center(&self) -> DVec3 {
        0.5 * (self.min + self.max)
    }

    pub fn diagonal(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            (self.max - self.min).length()
        }
    }

    pub fn longest_axis(&self) -> usize {
        let e = self.max - self.min;
        if e.x >= e.y && e.x >= e.z {
            0
        } else if e.y >= e.z {
            1
        } else {
            2
        }
    }

    /// Conservative slab test against the ray segment `[t_min, t_max]`.
    ///
    /// Never rejects a box that the segment truly intersects: boundary cases
    /// resolve to "hit" (NaN-safe min/max drop the degenerate axis, and the
    /// exit distance is widened by a few ulps).
    #[inline]
    pub fn hit(&self, origin: DVec3, inv_dir: DVec3, t_min: f64, t_max: f64) -> bool {
        let lo = (self.min - origin) * inv_dir;
        let hi = (self.max - origin) * inv_dir;
        // glam's min/max are NaN-ignoring per component.
        let near = lo.min(hi);
        let far = lo.max(hi);
        let entry = near.max_element().max(t_min);
        let exit = far.min_element().min(t_max);
        entry <= exit * (1.0 + 4.0 * f64::EPSILON)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_and_measures() {
        let b = Aabb::from_points([DVec3::ZERO, DVec3::new(1.0, 2.0, 2.0)]);
        assert_eq!(b.min, DVec3::ZERO);
        assert_eq!(b.max, DVec3::new(1.0, 2.0, 2.0));
        assert!((b.diagonal() - 3.0).abs() < 1e-12);
        assert_eq!(b.longest_axis(), 1);
    }

    #[test]
    fn empty_has_zero_diagonal() {
        assert_eq!(Aabb::EMPTY.diagonal(), 0.0);
        assert!(Aabb::EMPTY.is_empty());
    }

    #[test]
    fn slab_hits_and_misses() {
        let b = Aabb::from_points([DVec3::splat(-1.0), DVec3::splat(1.0)]);
        let dir = DVec3::new(0.0, 0.0, -1.0);
        let inv = dir.recip();
        assert!(b.hit(DVec3::new(0.0, 0.0, 5.0), inv, 0.0, f64::INFINITY));
        assert!(!b.hit(DVec3::new(0.0, 0.0, 5.0), inv, 0.0, 3.0));
        assert!(!b.hit(DVec3::new(3.0, 0.0, 5.0), inv, 0.0, f64::INFINITY));
        // Pointing away.
        assert!(!b.hit(DVec3::new(0.0, 0.0, 5.0), (-dir).recip(), 0.0, f64::INFINITY));
    }

    #[test]
    fn slab_handles_axis_parallel_origin_on_face() {
        let b = Aabb::from_points([DVec3::splat(-1.0), DVec3::splat(1.0)]);
        // Ray flush with the +x face, travelling along -z. 0/0 produces NaN on
        // the x axis; the test must still report a hit.
        let dir = DVec3::new(0.0, 0.0, -1.0);
        assert!(b.hit(DVec3::new(1.0, 0.0, 0.5), dir.recip(), 0.0, f64::INFINITY));
    }
}
