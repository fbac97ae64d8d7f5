//! Triangle meshes, rays, and exact first-hit / any-hit queries.

mod aabb;
mod bvh;
mod intersect;
mod mesh;
mod obj;
mod ray;

pub use aabb::Aabb;
pub use bvh::{any_hit_scan, first_hit_scan, BvhAccel, BVH_LEAF_SIZE};
pub use intersect::{ray_triangle, DET_EPSILON};
pub use mesh::{MeshError, TriangleMesh, DEGENERATE_AREA_SCALE};
pub use obj::{load_obj, read_obj, save_obj, write_obj, ObjError};
pub use ray::{HitRecord, Ray};
