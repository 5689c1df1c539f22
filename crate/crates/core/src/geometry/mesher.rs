//! Triangulating implicit surfaces: marching tetrahedra for general level sets and a
//! radial map of a geodesic sphere for surfaces that are star-shaped about the origin.

use std::collections::HashMap;

use super::improve::{improve_mesh, ImproveOptions};
use super::mesh::TriangleMesh;
use super::surface::LevelSetSurface;
use crate::error::{Error, Result};
use crate::linalg::{self, Vec3};
use crate::real::Real;

/// Options for [`marching_tetrahedra`].
#[derive(Clone, Copy, Debug)]
pub struct MarchingOptions {
    /// Lower and upper corner of the sampling box; the surface must lie strictly inside.
    pub lower: [f64; 3],
    pub upper: [f64; 3],
    /// Grid spacing per axis (approximate; each axis is divided into a whole number of cells).
    pub spacing: [f64; 3],
    /// Remeshing applied after projection; `None` keeps the raw marching triangles.
    pub improve: Option<ImproveOptions>,
}

// crossing points are kept away from the grid nodes so that no triangle collapses
const CLAMP: f64 = 0.15;

// Kuhn split of the unit cube: each axis permutation gives one tetrahedron
const KUHN: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Extracts the zero level set of `surface` from a regular grid, projects the vertices onto
/// the surface and optionally improves the triangles. Triangles are oriented towards `level > 0`.
pub fn marching_tetrahedra<T: Real>(surface: &LevelSetSurface<T>, opts: &MarchingOptions) -> Result<TriangleMesh<T>> {
    if opts.spacing.iter().any(|h| !(*h > 0.0)) || (0..3).any(|a| !(opts.upper[a] > opts.lower[a])) {
        return Err(Error::InvalidParameter("marching tetrahedra needs a positive spacing and a non-empty box".into()));
    }
    let n: [usize; 3] = std::array::from_fn(|a| ((opts.upper[a] - opts.lower[a]) / opts.spacing[a]).ceil().max(1.0) as usize);
    let step: [f64; 3] = std::array::from_fn(|a| (opts.upper[a] - opts.lower[a]) / n[a] as f64);
    let node = |i: usize, j: usize, k: usize| (i * (n[1] + 1) + j) * (n[2] + 1) + k;
    let pos = |id: usize| -> [f64; 3] {
        let k = id % (n[2] + 1);
        let j = (id / (n[2] + 1)) % (n[1] + 1);
        let i = id / ((n[1] + 1) * (n[2] + 1));
        [opts.lower[0] + step[0] * i as f64, opts.lower[1] + step[1] * j as f64, opts.lower[2] + step[2] * k as f64]
    };
    let total = (n[0] + 1) * (n[1] + 1) * (n[2] + 1);
    let values: Vec<f64> = (0..total)
        .map(|id| {
            let p = pos(id);
            let v = surface.level([T::c(p[0]), T::c(p[1]), T::c(p[2])]).to_f64_lossy();
            // exact zeros would create degenerate crossings
            if v == 0.0 {
                f64::MIN_POSITIVE
            } else {
                v
            }
        })
        .collect();
    for (id, &value) in values.iter().enumerate() {
        let p = pos(id);
        let on_boundary = (0..3).any(|a| {
            let idx = ((p[a] - opts.lower[a]) / step[a]).round() as usize;
            idx == 0 || idx == n[a]
        });
        if on_boundary && value <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "surface '{}' is not enclosed by the sampling box (level <= 0 at {p:?})",
                surface.name()
            )));
        }
    }

    let mut vertices: Vec<[f64; 3]> = Vec::new();
    let mut crossing: HashMap<(usize, usize), usize> = HashMap::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut vertex_on = |a: usize, b: usize, vertices: &mut Vec<[f64; 3]>| -> usize {
        let key = (a.min(b), a.max(b));
        *crossing.entry(key).or_insert_with(|| {
            let (fa, fb) = (values[key.0], values[key.1]);
            let t = (fa / (fa - fb)).clamp(CLAMP, 1.0 - CLAMP);
            let (pa, pb) = (pos(key.0), pos(key.1));
            vertices.push(std::array::from_fn(|c| pa[c] + t * (pb[c] - pa[c])));
            vertices.len() - 1
        })
    };

    for i in 0..n[0] {
        for j in 0..n[1] {
            for k in 0..n[2] {
                for perm in KUHN {
                    let mut c = [i, j, k];
                    let mut tet = [node(c[0], c[1], c[2]); 4];
                    for (s, &axis) in perm.iter().enumerate() {
                        c[axis] += 1;
                        tet[s + 1] = node(c[0], c[1], c[2]);
                    }
                    let inside: Vec<usize> = tet.iter().copied().filter(|&v| values[v] < 0.0).collect();
                    let outside: Vec<usize> = tet.iter().copied().filter(|&v| values[v] >= 0.0).collect();
                    let polygon: Vec<usize> = match (inside.len(), outside.len()) {
                        (1, 3) => outside.iter().map(|&o| vertex_on(inside[0], o, &mut vertices)).collect(),
                        (3, 1) => inside.iter().map(|&o| vertex_on(o, outside[0], &mut vertices)).collect(),
                        (2, 2) => vec![
                            vertex_on(inside[0], outside[0], &mut vertices),
                            vertex_on(inside[0], outside[1], &mut vertices),
                            vertex_on(inside[1], outside[1], &mut vertices),
                            vertex_on(inside[1], outside[0], &mut vertices),
                        ],
                        _ => continue,
                    };
                    let centroid = |ids: &[usize]| -> [f64; 3] {
                        let mut s = [0.0; 3];
                        for &v in ids {
                            let p = pos(v);
                            for a in 0..3 {
                                s[a] += p[a] / ids.len() as f64;
                            }
                        }
                        s
                    };
                    let dir = linalg::sub(centroid(&outside), centroid(&inside));
                    let mut emit = |mut t: [usize; 3]| {
                        let (a, b, c) = (vertices[t[0]], vertices[t[1]], vertices[t[2]]);
                        let nrm = linalg::cross(linalg::sub(b, a), linalg::sub(c, a));
                        if linalg::dot(nrm, dir) < 0.0 {
                            t.swap(1, 2);
                        }
                        triangles.push(t);
                    };
                    emit([polygon[0], polygon[1], polygon[2]]);
                    if polygon.len() == 4 {
                        emit([polygon[0], polygon[2], polygon[3]]);
                    }
                }
            }
        }
    }

    let mut points: Vec<Vec3<T>> = vertices.iter().map(|p| [T::c(p[0]), T::c(p[1]), T::c(p[2])]).collect();
    points = points.into_iter().map(|p| surface.project(p)).collect::<Result<_>>()?;
    let mesh = TriangleMesh::new(points, triangles)?;
    match &opts.improve {
        Some(improve) => improve_mesh(&mesh, surface, improve),
        None => Ok(mesh),
    }
}

/// Icosahedral geodesic sphere: every icosahedron face split into `frequency²` triangles,
/// vertices on the unit sphere. `20·frequency²` triangles in total.
pub fn geodesic_sphere<T: Real>(frequency: usize) -> Result<TriangleMesh<T>> {
    if frequency == 0 {
        return Err(Error::InvalidParameter("geodesic sphere frequency must be at least 1".into()));
    }
    let base = super::generators::icosphere::<f64>(0);
    let f = frequency;
    let mut index: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let mut vertices: Vec<Vec3<T>> = Vec::new();
    let mut triangles = Vec::with_capacity(20 * f * f);
    for tri in base.triangles() {
        // lattice point (i, j) has barycentric weights (f − i − j, i, j) over the corners
        let mut id = |i: usize, j: usize| -> usize {
            let w = [f - i - j, i, j];
            let mut key: Vec<(usize, usize)> = (0..3).filter(|&c| w[c] > 0).map(|c| (tri[c], w[c])).collect();
            key.sort_unstable();
            *index.entry(key).or_insert_with(|| {
                let c = base.vertices();
                let mut p = [0.0; 3];
                for k in 0..3 {
                    for a in 0..3 {
                        p[a] += c[tri[k]][a] * w[k] as f64;
                    }
                }
                let s = 1.0 / linalg::norm(p);
                vertices.push([T::c(p[0] * s), T::c(p[1] * s), T::c(p[2] * s)]);
                vertices.len() - 1
            })
        };
        for i in 0..f {
            for j in 0..f - i {
                triangles.push([id(i, j), id(i + 1, j), id(i, j + 1)]);
                if i + j + 1 < f {
                    triangles.push([id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)]);
                }
            }
        }
    }
    TriangleMesh::new(vertices, triangles)
}

/// Moves every vertex `v` of a unit-sphere mesh along its ray to the surface point `s·v`,
/// then projects. Requires `level < 0` at the origin and a single crossing on each ray
/// within radius `max_radius`.
pub fn radial_map<T: Real>(sphere: &TriangleMesh<T>, surface: &LevelSetSurface<T>, max_radius: f64) -> Result<TriangleMesh<T>> {
    let origin = surface.level([T::zero(); 3]);
    if !(origin < T::zero()) {
        return Err(Error::InvalidParameter(format!("surface '{}' does not contain the origin", surface.name())));
    }
    let points = sphere
        .vertices()
        .iter()
        .map(|&v| {
            let at = |s: T| surface.level(linalg::scale(v, s));
            let (mut lo, mut hi) = (T::zero(), T::c(max_radius));
            if !(at(hi) > T::zero()) {
                return Err(Error::InvalidParameter(format!("ray through {:?} does not leave the surface", linalg::to_f64_3(v))));
            }
            for _ in 0..200 {
                let mid = (lo + hi) * T::c(0.5);
                if mid <= lo || mid >= hi {
                    break;
                }
                if at(mid) < T::zero() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            surface.project(linalg::scale(v, lo))
        })
        .collect::<Result<Vec<_>>>()?;
    TriangleMesh::new(points, sphere.triangles().to_vec())
}
