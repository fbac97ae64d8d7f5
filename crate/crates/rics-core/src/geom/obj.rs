use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use glam::DVec3;
use thiserror::Error;

use super::{MeshError, TriangleMesh};

#[derive(Debug, Error)]
pub enum ObjError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: face has {arity} vertices; only triangles are accepted")]
    NonTriangleFace { line: usize, arity: usize },
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// Loads a triangulated Wavefront OBJ. Only `v` and `f` records are consumed;
/// faces must have exactly three vertices (quads and larger polygons are
/// rejected). `f` entries may carry `/vt/vn` suffixes, which are ignored.
pub fn load_obj<P: AsRef<Path>>(path: P) -> Result<TriangleMesh, ObjError> {
    read_obj(BufReader::new(File::open(path)?))
}

pub fn read_obj<R: BufRead>(reader: R) -> Result<TriangleMesh, ObjError> {
    let mut vertices: Vec<DVec3> = Vec::new();
    let mut triangles: Vec<[u32; 3]> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let coords: Vec<f64> = tokens
                    .map(|t| {
                        t.parse::<f64>().map_err(|_| ObjError::Parse {
                            line: line_no,
                            message: format!("bad vertex coordinate {t:?}"),
                        })
                    })
                    .collect::<Result<_, _>>()?;
                if coords.len() != 3 {
                    return Err(ObjError::Parse {
                        line: line_no,
                        message: format!("vertex needs 3 coordinates, found {}", coords.len()),
                    });
                }
                vertices.push(DVec3::new(coords[0], coords[1], coords[2]));
            }
            Some("f") => {
                let indices: Vec<u32> = tokens
                    .map(|t| parse_face_index(t, line_no, vertices.len()))
                    .collect::<Result<_, _>>()?;
                if indices.len() != 3 {
                    return Err(ObjError::NonTriangleFace {
                        line: line_no,
                        arity: indices.len(),
                    });
                }
                triangles.push([indices[0], indices[1], indices[2]]);
            }
            // Other record types (vn, vt, o, g, s, usemtl, comments, ...) are
            // not part of the consumed subset.
            _ => {}
        }
    }

    Ok(TriangleMesh::new(vertices, triangles)?)
}

fn parse_face_index(token: &str, line: usize, vertex_count: usize) -> Result<u32, ObjError> {
    let vertex_part = token.split('/').next().unwrap_or("");
    let index: i64 = vertex_part.parse().map_err(|_| ObjError::Parse {
        line,
        message: format!("bad face index {token:?}"),
    })?;
    if index < 1 {
        return Err(ObjError::Parse {
            line,
            message: format!("face index {index} must be positive (1-based)"),
        });
    }
    // Range is re-validated by TriangleMesh::new; catching it here names the line.
    if index as usize > vertex_count {
        return Err(ObjError::Parse {
            line,
            message: format!("face index {index} exceeds {vertex_count} vertices seen so far"),
        });
    }
    Ok((index - 1) as u32)
}

pub fn save_obj<P: AsRef<Path>>(mesh: &TriangleMesh, path: P) -> io::Result<()> {
    write_obj(mesh, BufWriter::new(File::create(path)?))
}

pub fn write_obj<W: Write>(mesh: &TriangleMesh, mut writer: W) -> io::Result<()> {
    for v in mesh.vertices() {
        // Display of f64 is shortest-roundtrip, so a reload is bit-exact.
        writeln!(writer, "v {} {} {}", v.x, v.y, v.z)?;
    }
    for t in mesh.triangles() {
        writeln!(writer, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn parses_v_and_f_and_ignores_the_rest() {
        let src = "# comment\nv 0 0 0\nv 1 0 0\nv 0 1 0\nvn 0 0 1\ns off\nf 1/1/1 2/2/1 3/3/1\n";
        let mesh = read_obj(Cursor::new(src)).unwrap();
        assert_eq!(mesh.vertices().len(), 3);
        assert_eq!(mesh.triangles(), &[[0, 1, 2]]);
    }

    #[test]
    fn rejects_quads() {
        let src = "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n";
        let err = read_obj(Cursor::new(src)).unwrap_err();
        assert!(matches!(err, ObjError::NonTriangleFace { line: 5, arity: 4 }));
    }

    #[test]
    fn rejects_bad_indices() {
        let err = read_obj(Cursor::new("v 0 0 0\nf 1 2 3\n")).unwrap_err();
        assert!(matches!(err, ObjError::Parse { line: 2, .. }));
        let err = read_obj(Cursor::new("v 0 0 0\nf 0 1 1\n")).unwrap_err();
        assert!(matches!(err, ObjError::Parse { line: 2, .. }));
    }

    #[test]
    fn roundtrip_is_bit_exact() {
        let mesh = TriangleMesh::new(
            vec![
                DVec3::new(0.1234567890123456, -7.25, 1e-9),
                DVec3::new(1.0, 0.0, 0.0),
                DVec3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let mut buf = Vec::new();
        write_obj(&mesh, &mut buf).unwrap();
        let back = read_obj(Cursor::new(buf)).unwrap();
        assert_eq!(back.vertices(), mesh.vertices());
        assert_eq!(back.triangles(), mesh.triangles());
    }
}
