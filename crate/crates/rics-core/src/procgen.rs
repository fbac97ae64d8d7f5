//! Procedural test geometry and camera builders.

use std::collections::HashMap;

use glam::DVec3;

use crate::camera::CameraModel;
use crate::geom::TriangleMesh;

/// Right triangle with the right angle at the origin and legs 1 and sqrt(2);
/// its bounding box is the unit cube.
pub fn right_triangle() -> TriangleMesh {
    TriangleMesh::new(
        vec![
            DVec3::ZERO,
            DVec3::new(1.0, 0.0, 0.0),
            DVec3::new(0.0, 1.0, 1.0),
        ],
        vec![[0, 1, 2]],
    )
    .unwrap()
}

/// Two-triangle square in the plane `z = z_plane`, spanning
/// `[-half, half]` in x and y.
pub fn quad_xy(half: f64, z_plane: f64) -> TriangleMesh {
    TriangleMesh::new(
        vec![
            DVec3::new(-half, -half, z_plane),
            DVec3::new(half, -half, z_plane),
            DVec3::new(half, half, z_plane),
            DVec3::new(-half, half, z_plane),
        ],
        vec![[0, 1, 2], [0, 2, 3]],
    )
    .unwrap()
}

/// Axis-aligned cube with side 1 centered at the origin, 12 triangles wound
/// outward.
pub fn unit_cube() -> TriangleMesh {
    cube(0.5)
}

/// Axis-aligned cube with the given half extent, centered at the origin.
pub fn cube(half: f64) -> TriangleMesh {
    let h = half;
    let vertices = vec![
        DVec3::new(-h, -h, -h), // 0
        DVec3::new(h, -h, -h),  // 1
        DVec3::new(h, h, -h),   // 2
        DVec3::new(-h, h, -h),  // 3
        DVec3::new(-h, -h, h),  // 4
        DVec3::new(h, -h, h),   // 5
        DVec3::new(h, h, h),    // 6
        DVec3::new(-h, h, h),   // 7
    ];
    let triangles = vec![
        // -z
        [0, 2, 1],
        [0, 3, 2],
        // +z
        [4, 5, 6],
        [4, 6, 7],
        // -y
        [0, 1, 5],
        [0, 5, 4],
        // +y
        [3, 7, 6],
        [3, 6, 2],
        // -x
        [0, 4, 7],
        [0, 7, 3],
        // +x
        [1, 2, 6],
        [1, 6, 5],
    ];
    TriangleMesh::new(vertices, triangles).unwrap()
}

/// Unit icosphere: an icosahedron subdivided `subdivisions` times with every
/// vertex pushed onto the unit sphere. Triangle count is `20 * 4^n`.
pub fn icosphere(subdivisions: u32) -> TriangleMesh {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut vertices: Vec<DVec3> = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ]
    .iter()
    .map(|&(x, y, z)| DVec3::new(x, y, z).normalize())
    .collect();

    let mut triangles: Vec<[u32; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];

    for _ in 0..subdivisions {
        let mut midpoints: HashMap<(u32, u32), u32> = HashMap::new();
        let mut next = Vec::with_capacity(triangles.len() * 4);
        for tri in &triangles {
            let mid = |a: u32, b: u32, vertices: &mut Vec<DVec3>, midpoints: &mut HashMap<(u32, u32), u32>| {
                let key = (a.min(b), a.max(b));
                *midpoints.entry(key).or_insert_with(|| {
                    let m = (0.5 * (vertices[a as usize] + vertices[b as usize])).normalize();
                    vertices.push(m);
                    (vertices.len() - 1) as u32
                })
            };
            let [a, b, c] = *tri;
            let ab = mid(a, b, &mut vertices, &mut midpoints);
            let bc = mid(b, c, &mut vertices, &mut midpoints);
            let ca = mid(c, a, &mut vertices, &mut midpoints);
            next.push([a, ab, ca]);
            next.push([ab, b, bc]);
            next.push([ca, bc, c]);
            next.push([ab, bc, ca]);
        }
        triangles = next;
    }

    TriangleMesh::new(vertices, triangles).unwrap()
}

/// Icosphere with radius modulated by a trigonometric bump pattern. Non-convex
/// and self-occluding, useful as a realistic ray-casting workload.
pub fn bumpy_sphere(subdivisions: u32, amplitude: f64, frequency: f64) -> TriangleMesh {
    let base = icosphere(subdivisions);
    let vertices = base
        .vertices()
        .iter()
        .map(|&v| {
            let theta = v.z.clamp(-1.0, 1.0).acos();
            let phi = v.y.atan2(v.x);
            let r = 1.0 + amplitude * (frequency * theta).sin() * (frequency * phi).cos();
            v * r
        })
        .collect();
    TriangleMesh::new(vertices, base.triangles().to_vec()).unwrap()
}

/// Deterministic soup of `count` disconnected triangles. Centers fall in
/// `[-extent, extent]^3` and each vertex is offset from its center by at most
/// `tri_scale` per axis. Seeded via a splitmix64 stream, so the same inputs
/// always give the same mesh.
pub fn triangle_soup(count: usize, extent: f64, tri_scale: f64, seed: u64) -> TriangleMesh {
    let mut state = seed;
    let mut unit = move || {
        // splitmix64
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut vertices = Vec::with_capacity(count * 3);
    let mut triangles = Vec::with_capacity(count);
    for i in 0..count {
        let center = DVec3::new(
            (unit() * 2.0 - 1.0) * extent,
            (unit() * 2.0 - 1.0) * extent,
            (unit() * 2.0 - 1.0) * extent,
        );
        for _ in 0..3 {
            vertices.push(
                center
                    + DVec3::new(
                        (unit() * 2.0 - 1.0) * tri_scale,
                        (unit() * 2.0 - 1.0) * tri_scale,
                        (unit() * 2.0 - 1.0) * tri_scale,
                    ),
            );
        }
        let base = (i * 3) as u32;
        triangles.push([base, base + 1, base + 2]);
    }
    TriangleMesh::new(vertices, triangles).unwrap()
}

/// Row-major rigid camera-to-world matrix for a camera at `eye` looking at
/// `target` with the given up hint.
pub fn look_at_rows(eye: DVec3, target: DVec3, up: DVec3) -> [f64; 16] {
    let forward = (target - eye).normalize();
    let x_axis = forward.cross(up).normalize();
    let z_axis = -forward;
    let y_axis = z_axis.cross(x_axis);
    let mut m = [0.0; 16];
    for (c, axis) in [x_axis, y_axis, z_axis].iter().enumerate() {
        m[c] = axis.x;
        m[4 + c] = axis.y;
        m[8 + c] = axis.z;
    }
    m[3] = eye.x;
    m[7] = eye.y;
    m[11] = eye.z;
    m[15] = 1.0;
    m
}

pub fn look_at_camera(
    eye: DVec3,
    target: DVec3,
    up: DVec3,
    vfov_deg: f64,
    width: u32,
    height: u32,
) -> CameraModel {
    CameraModel::new(look_at_rows(eye, target, up), vfov_deg, width, height)
        .expect("look-at matrices are rigid")
}
