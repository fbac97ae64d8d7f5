use glam::{DMat3, DVec3};
use thiserror::Error;

use super::Aabb;

/// Triangles whose area is below this fraction of the squared bounding-box
/// diagonal are flagged degenerate and excluded from every ray query.
pub const DEGENERATE_AREA_SCALE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("mesh has no vertices")]
    NoVertices,
    #[error("mesh has no triangles")]
    NoTriangles,
    #[error("triangle {tri} references vertex {index} but the mesh has {count} vertices")]
    IndexOutOfRange { tri: usize, index: u32, count: usize },
    #[error("vertex {vertex} has a non-finite coordinate")]
    NonFinite { vertex: usize },
}

/// An indexed triangle mesh, validated on construction.
///
/// Degenerate triangles stay in the index buffer (indices are stable) but are
/// flagged and skipped by intersection, so query results do not depend on
/// traversal order.
#[derive(Clone, Debug)]
pub struct TriangleMesh {
    vertices: Vec<DVec3>,
    triangles: Vec<[u32; 3]>,
    bbox: Aabb,
    degenerate: Vec<bool>,
}

impl TriangleMesh {
    pub fn new(vertices: Vec<DVec3>, triangles: Vec<[u32; 3]>) -> Result<TriangleMesh, MeshError> {
        if vertices.is_empty() {
            return Err(MeshError::NoVertices);
        }
        if triangles.is_empty() {
            return Err(MeshError::NoTriangles);
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(MeshError::NonFinite { vertex: i });
            }
        }
        for (t, tri) in triangles.iter().enumerate() {
            for &index in tri {
                if index as usize >= vertices.len() {
                    return Err(MeshError::IndexOutOfRange {
                        tri: t,
                        index,
                        count: vertices.len(),
                    });
                }
            }
        }

        let bbox = Aabb::from_points(vertices.iter().copied());
        let threshold = DEGENERATE_AREA_SCALE * bbox.diagonal() * bbox.diagonal();
        let degenerate = triangles
            .iter()
            .map(|tri| {
                let [a, b, c] = tri.map(|i| vertices[i as usize]);
                let area = 0.5 * (b - a).cross(c - a).length();
                area == 0.0 || area < threshold
            })
            .collect();

        Ok(TriangleMesh {
            vertices,
            triangles,
            bbox,
            degenerate,
        })
    }

    pub fn vertices(&self) -> &[DVec3] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn bbox(&self) -> Aabb {
        self.bbox
    }

    pub fn is_degenerate(&self, tri: usize) -> bool {
        self.degenerate[tri]
    }

    pub fn active_triangle_count(&self) -> usize {
        self.degenerate.iter().filter(|&&d| !d).count()
    }

    pub fn triangle_vertices(&self, tri: usize) -> [DVec3; 3] {
        self.triangles[tri].map(|i| self.vertices[i as usize])
    }

    pub fn triangle_bbox(&self, tri: usize) -> Aabb {
        Aabb::from_points(self.triangle_vertices(tri))
    }

    /// Unit plane normal of triangle `tri` with winding-order orientation.
    pub fn geometric_normal(&self, tri: usize) -> DVec3 {
        let [a, b, c] = self.triangle_vertices(tri);
        (b - a).cross(c - a).normalize()
    }

    /// Copy of the mesh with `rotation` then `translation` applied to every
    /// vertex.
    pub fn transformed(&self, rotation: &DMat3, translation: DVec3) -> TriangleMesh {
        let vertices = self
            .vertices
            .iter()
            .map(|&v| *rotation * v + translation)
            .collect();
        TriangleMesh::new(vertices, self.triangles.clone())
            .expect("transform of a valid mesh stays valid")
    }
}
