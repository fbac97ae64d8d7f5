use glam::DVec3;

use super::{ray_triangle, Aabb, HitRecord, Ray, TriangleMesh};

/// Maximum triangles per leaf.
pub const BVH_LEAF_SIZE: usize = 4;

#[derive(Clone, Copy, Debug)]
struct BvhNode {
    aabb: Aabb,
    /// Leaf: first slot in `order`. Inner: index of the left child.
    left_or_first: u32,
    /// Number of triangles for leaves; 0 marks an inner node.
    count: u32,
    /// Right child index for inner nodes (left child is stored contiguously).
    right: u32,
}

/// Median-split bounding volume hierarchy over the non-degenerate triangles
/// of a mesh. The accel owns the mesh; both are immutable after construction
/// and safe to share across threads. Builds are deterministic: splitting
/// always happens at the median of the longest node axis, with centroid ties
/// broken by triangle index.
pub struct BvhAccel {
    mesh: TriangleMesh,
    nodes: Vec<BvhNode>,
    /// Triangle indices into the mesh, permuted so each leaf owns a range.
    order: Vec<u32>,
}

impl BvhAccel {
    pub fn build(mesh: TriangleMesh) -> BvhAccel {
        let mut order: Vec<u32> = (0..mesh.triangles().len() as u32)
            .filter(|&t| !mesh.is_degenerate(t as usize))
            .collect();
        let mut nodes = Vec::new();
        if !order.is_empty() {
            let tri_boxes: Vec<Aabb> = (0..mesh.triangles().len())
                .map(|t| mesh.triangle_bbox(t))
                .collect();
            let centroids: Vec<DVec3> = tri_boxes.iter().map(|b| b.center()).collect();
            build_node(&mut nodes, &mut order, 0, &tri_boxes, &centroids);
        }
        BvhAccel { mesh, nodes, order }
    }

    pub fn mesh(&self) -> &TriangleMesh {
        &self.mesh
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Closest hit with `t` in `[t_min, t_max]`; equal-`t` ties go to the
    /// lowest triangle index, which makes the result identical to a linear
    /// scan over all triangles.
    pub fn first_hit(&self, ray: &Ray) -> Option<HitRecord> {
        if self.nodes.is_empty() {
            return None;
        }
        let inv_dir = ray.direction.recip();
        let mut best_t = ray.t_max;
        let mut best_tri: Option<u32> = None;
        let mut stack = [0u32; 64];
        let mut top = 0usize;
        stack[top] = 0;
        top += 1;
        while top > 0 {
            top -= 1;
            let node = &self.nodes[stack[top] as usize];
            // Pruning must be non-strict in t so an equal-t tie in a farther
            // node can still win on index.
            if !node.aabb.hit(ray.origin, inv_dir, ray.t_min, best_t) {
                continue;
            }
            if node.count > 0 {
                let first = node.left_or_first as usize;
                for &tri in &self.order[first..first + node.count as usize] {
                    let [v0, v1, v2] = self.mesh.triangle_vertices(tri as usize);
                    if let Some(t) = ray_triangle(ray.origin, ray.direction, v0, v1, v2) {
                        if t >= ray.t_min
                            && t <= ray.t_max
                            && (t < best_t
                                || (t == best_t
                                    && best_tri.map_or(true, |b| tri < b)))
                        {
                            best_t = t;
                            best_tri = Some(tri);
                        }
                    }
                }
            } else {
                stack[top] = node.left_or_first;
                stack[top + 1] = node.right;
                top += 2;
            }
        }
        best_tri.map(|tri| make_hit(&self.mesh, ray, best_t, tri))
    }

    /// True iff some non-degenerate triangle intersects the ray within its
    /// bounds. Early-exits on the first hit found.
    pub fn any_hit(&self, ray: &Ray) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        let inv_dir = ray.direction.recip();
        let mut stack = [0u32; 64];
        let mut top = 0usize;
        stack[top] = 0;
        top += 1;
        while top > 0 {
            top -= 1;
            let node = &self.nodes[stack[top] as usize];
            if !node.aabb.hit(ray.origin, inv_dir, ray.t_min, ray.t_max) {
                continue;
            }
            if node.count > 0 {
                let first = node.left_or_first as usize;
                for &tri in &self.order[first..first + node.count as usize] {
                    let [v0, v1, v2] = self.mesh.triangle_vertices(tri as usize);
                    if let Some(t) = ray_triangle(ray.origin, ray.direction, v0, v1, v2) {
                        if t >= ray.t_min && t <= ray.t_max {
                            return true;
                        }
                    }
                }
            } else {
                stack[top] = node.left_or_first;
                stack[top + 1] = node.right;
                top += 2;
            }
        }
        false
    }
}

fn build_node(
    nodes: &mut Vec<BvhNode>,
    order: &mut [u32],
    first: u32,
    tri_boxes: &[Aabb],
    centroids: &[DVec3],
) -> u32 {
    let mut aabb = Aabb::EMPTY;
    for &tri in order.iter() {
        aabb = aabb.union(&tri_boxes[tri as usize]);
    }
    let node_index = nodes.len() as u32;
    nodes.push(BvhNode {
        aabb,
        left_or_first: first,
        count: order.len() as u32,
        right: 0,
    });
    if order.len() <= BVH_LEAF_SIZE {
        return node_index;
    }

    let axis = aabb.longest_axis();
    let mid = order.len() / 2;
    order.select_nth_unstable_by(mid, |&a, &b| {
        let ca = centroids[a as usize][axis];
        let cb = centroids[b as usize][axis];
        ca.partial_cmp(&cb).unwrap().then(a.cmp(&b))
    });

    let (left_slice, right_slice) = order.split_at_mut(mid);
    let left = build_node(nodes, left_slice, first, tri_boxes, centroids);
    let right = build_node(nodes, right_slice, first + mid as u32, tri_boxes, centroids);
    nodes[node_index as usize].left_or_first = left;
    nodes[node_index as usize].count = 0;
    nodes[node_index as usize].right = right;
    node_index
}

fn make_hit(mesh: &TriangleMesh, ray: &Ray, t: f64, tri: u32) -> HitRecord {
    HitRecord {
        t,
        point: ray.at(t),
        geometric_normal: mesh.geometric_normal(tri as usize),
        triangle_index: tri,
    }
}

/// Linear-scan reference for `BvhAccel::first_hit`: every non-degenerate
/// triangle is tested in index order with the same tie-breaking.
pub fn first_hit_scan(mesh: &TriangleMesh, ray: &Ray) -> Option<HitRecord> {
    let mut best_t = ray.t_max;
    let mut best_tri: Option<u32> = None;
    for tri in 0..mesh.triangles().len() {
        if mesh.is_degenerate(tri) {
            continue;
        }
        let [v0, v1, v2] = mesh.triangle_vertices(tri);
        if let Some(t) = ray_triangle(ray.origin, ray.direction, v0, v1, v2) {
            if t >= ray.t_min && t <= ray.t_max && (t < best_t || best_tri.is_none()) {
                best_t = t;
                best_tri = Some(tri as u32);
            }
        }
    }
    best_tri.map(|tri| make_hit(mesh, ray, best_t, tri))
}

/// Linear-scan reference for `BvhAccel::any_hit`.
pub fn any_hit_scan(mesh: &TriangleMesh, ray: &Ray) -> bool {
    for tri in 0..mesh.triangles().len() {
        if mesh.is_degenerate(tri) {
            continue;
        }
        let [v0, v1, v2] = mesh.triangle_vertices(tri);
        if let Some(t) = ray_triangle(ray.origin, ray.direction, v0, v1, v2) {
            if t >= ray.t_min && t <= ray.t_max {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::procgen;

    fn down_ray(x: f64, y: f64) -> Ray {
        Ray::new(
            DVec3::new(x, y, 5.0),
            DVec3::new(0.0, 0.0, -1.0),
            0.0,
            f64::INFINITY,
        )
    }

    #[test]
    fn quad_hit_at_plane_distance() {
        let accel = BvhAccel::build(procgen::quad_xy(0.5, 0.0));
        let hit = accel.first_hit(&down_ray(0.1, -0.2)).unwrap();
        assert_eq!(hit.t, 5.0);
        assert!((hit.point - DVec3::new(0.1, -0.2, 0.0)).length() < 1e-12);
    }

    #[test]
    fn coplanar_ray_misses() {
        let accel = BvhAccel::build(procgen::quad_xy(0.5, 0.0));
        let ray = Ray::new(
            DVec3::new(-2.0, 0.0, 0.0),
            DVec3::new(1.0, 0.0, 0.0),
            0.0,
            f64::INFINITY,
        );
        assert!(accel.first_hit(&ray).is_none());
        assert!(!accel.any_hit(&ray));
    }

    #[test]
    fn ray_away_from_bbox_misses() {
        let accel = BvhAccel::build(procgen::unit_cube());
        let ray = Ray::new(
            DVec3::new(0.0, 0.0, 5.0),
            DVec3::new(0.0, 0.0, 1.0),
            0.0,
            f64::INFINITY,
        );
        assert!(!accel.any_hit(&ray));
    }

    #[test]
    fn icosphere_hit_matches_analytic_sphere() {
        let accel = BvhAccel::build(procgen::icosphere(3));
        for d in [3.0, 5.0, 11.0] {
            let hit = accel.first_hit(&down_ray(0.0, 0.0).with_origin_z(d)).unwrap();
            assert!(
                (hit.t - (d - 1.0)).abs() < 1e-2,
                "t = {} for distance {d}",
                hit.t
            );
        }
    }

    impl Ray {
        fn with_origin_z(mut self, z: f64) -> Ray {
            self.origin.z = z;
            self
        }
    }

    #[test]
    fn entry_hit_faces_the_ray_on_convex_mesh() {
        let mesh = procgen::icosphere(2);
        let accel = BvhAccel::build(mesh);
        let origins = [
            DVec3::new(0.0, 0.0, 4.0),
            DVec3::new(3.0, 1.0, -2.0),
            DVec3::new(-2.5, 2.5, 0.5),
        ];
        for origin in origins {
            let ray = Ray::new(origin, (-origin).normalize(), 0.0, f64::INFINITY);
            let hit = accel.first_hit(&ray).unwrap();
            // Outward orientation for a sphere around the origin.
            let outward = hit.point.normalize();
            assert!(ray.direction.dot(outward) < 0.0, "hit is not the entry face");
        }
    }

    #[test]
    fn translation_invariance() {
        let mesh = procgen::icosphere(2);
        let offset = DVec3::new(13.25, -7.5, 2.125);
        let moved = mesh.transformed(&glam::DMat3::IDENTITY, offset);
        let accel_a = BvhAccel::build(mesh);
        let accel_b = BvhAccel::build(moved);
        let ray_a = down_ray(0.21, -0.17);
        let ray_b = Ray::new(ray_a.origin + offset, ray_a.direction, 0.0, f64::INFINITY);
        let (ha, hb) = (accel_a.first_hit(&ray_a).unwrap(), accel_b.first_hit(&ray_b).unwrap());
        assert_eq!(ha.triangle_index, hb.triangle_index);
        assert!((ha.t - hb.t).abs() <= 1e-9 * ha.t.abs().max(1.0));
    }

    #[test]
    fn degenerate_triangles_never_hit() {
        // A zero-area sliver in front of a real triangle.
        let mesh = TriangleMesh::new(
            vec![
                DVec3::new(-1.0, -1.0, 1.0),
                DVec3::new(1.0, -1.0, 1.0),
                DVec3::new(0.0, 1.5, 1.0),
                DVec3::new(-1.0, -1.0, 0.0),
                DVec3::new(1.0, -1.0, 0.0),
            ],
            vec![[3, 4, 4], [0, 1, 2]],
        )
        .unwrap();
        let accel = BvhAccel::build(mesh);
        let hit = accel.first_hit(&down_ray(0.0, 0.0)).unwrap();
        assert_eq!(hit.triangle_index, 1);
        assert_eq!(hit.t, 4.0);
    }

    #[test]
    fn any_hit_agrees_with_first_hit() {
        let accel = BvhAccel::build(procgen::icosphere(2));
        for i in 0..32 {
            for j in 0..32 {
                let x = -2.0 + 4.0 * (i as f64 + 0.5) / 32.0;
                let y = -2.0 + 4.0 * (j as f64 + 0.5) / 32.0;
                let ray = down_ray(x, y);
                assert_eq!(accel.any_hit(&ray), accel.first_hit(&ray).is_some());
            }
        }
    }
}
