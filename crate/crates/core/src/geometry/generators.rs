//! Simple closed meshes: subdivided Platonic spheres and structured tori.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mesh::TriangleMesh;
use crate::error::{Error, Result};
use crate::linalg::{self, Vec3};
use crate::real::Real;

fn unit<T: Real>(p: Vec3<T>) -> Vec3<T> {
    linalg::scale(p, T::one() / linalg::norm(p))
}

fn convert<T: Real>(vertices: &[[f64; 3]]) -> Vec<Vec3<T>> {
    vertices.iter().map(|v| [T::c(v[0]), T::c(v[1]), T::c(v[2])]).collect()
}

fn sphere_from<T: Real>(vertices: &[[f64; 3]], triangles: &[[usize; 3]], subdivisions: usize) -> TriangleMesh<T> {
    let vertices = convert::<T>(vertices).into_iter().map(unit).collect();
    let mut mesh = TriangleMesh::new(vertices, triangles.to_vec()).expect("valid seed polyhedron");
    for _ in 0..subdivisions {
        mesh = mesh.subdivide(|p| Ok(unit(p))).expect("subdivision of a sphere mesh");
    }
    mesh
}

/// Icosahedron with `subdivisions` rounds of 4-to-1 splitting, vertices on the unit sphere.
/// `20·4^s` triangles.
pub fn icosphere<T: Real>(subdivisions: usize) -> TriangleMesh<T> {
    let g = (1.0 + 5f64.sqrt()) / 2.0;
    let v = [
        [-1.0, g, 0.0],
        [1.0, g, 0.0],
        [-1.0, -g, 0.0],
        [1.0, -g, 0.0],
        [0.0, -1.0, g],
        [0.0, 1.0, g],
        [0.0, -1.0, -g],
        [0.0, 1.0, -g],
        [g, 0.0, -1.0],
        [g, 0.0, 1.0],
        [-g, 0.0, -1.0],
        [-g, 0.0, 1.0],
    ];
    let t = [
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
    sphere_from(&v, &t, subdivisions)
}

/// Octahedron with `subdivisions` rounds of 4-to-1 splitting, vertices on the unit sphere.
/// `8·4^s` triangles.
pub fn octasphere<T: Real>(subdivisions: usize) -> TriangleMesh<T> {
    let v = [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    let t = [[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4], [1, 0, 5], [2, 1, 5], [3, 2, 5], [0, 3, 5]];
    sphere_from(&v, &t, subdivisions)
}

fn torus_point(u: f64, v: f64, r: f64, big_r: f64) -> [f64; 3] {
    let rho = big_r + r * v.cos();
    [rho * u.cos(), rho * u.sin(), r * v.sin()]
}

fn check_torus_args(nu: usize, nv: usize, r: f64, big_r: f64) -> Result<()> {
    if nu < 3 || nv < 3 {
        return Err(Error::InvalidParameter(format!("structured torus needs nu, nv >= 3, got {nu} x {nv}")));
    }
    if !(r > 0.0 && r < big_r) {
        return Err(Error::InvalidParameter(format!("torus needs 0 < r < R, got r = {r}, R = {big_r}")));
    }
    Ok(())
}

/// Torus mesh from an `nu × nv` parameter grid (`u` around the z-axis, `v` around the tube);
/// each quad is split into two triangles.
pub fn structured_torus<T: Real>(nu: usize, nv: usize, r: f64, big_r: f64) -> Result<TriangleMesh<T>> {
    check_torus_args(nu, nv, r, big_r)?;
    let mut vertices = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            vertices.push(torus_point(TAU * i as f64 / nu as f64, TAU * j as f64 / nv as f64, r, big_r));
        }
    }
    let id = |i: usize, j: usize| (i % nu) * nv + j % nv;
    let mut triangles = Vec::with_capacity(2 * nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            let (p00, p10, p11, p01) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            triangles.push([p00, p10, p11]);
            triangles.push([p00, p11, p01]);
        }
    }
    TriangleMesh::new(convert(&vertices), triangles)
}

/// Like [`structured_torus`], but every other ring is rotated by half a cell, so the
/// triangles are close to isosceles instead of right-angled. `nv` must be even.
pub fn staggered_torus<T: Real>(nu: usize, nv: usize, r: f64, big_r: f64) -> Result<TriangleMesh<T>> {
    check_torus_args(nu, nv, r, big_r)?;
    if nv % 2 == 1 {
        return Err(Error::InvalidParameter(format!("staggered torus needs an even nv, got {nv}")));
    }
    let mut vertices = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            let shift = if j % 2 == 1 { 0.5 } else { 0.0 };
            vertices.push(torus_point(TAU * (i as f64 + shift) / nu as f64, TAU * j as f64 / nv as f64, r, big_r));
        }
    }
    let id = |i: usize, j: usize| (i % nu) * nv + j % nv;
    let mut triangles = Vec::with_capacity(2 * nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            let (p00, p10, p11, p01) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            if j % 2 == 0 {
                // ring j+1 is shifted forward: split along p10–p01
                triangles.push([p00, p10, p01]);
                triangles.push([p10, p11, p01]);
            } else {
                triangles.push([p00, p10, p11]);
                triangles.push([p00, p11, p01]);
            }
        }
    }
    TriangleMesh::new(convert(&vertices), triangles)
}

/// A deliberately poor torus mesh: grid nodes jittered in parameter space by up to
/// `jitter` cells, a random diagonal per quad and a quarter of the triangles flipped.
/// Vertices lie on the torus.
pub fn distorted_torus<T: Real>(
    nu: usize,
    nv: usize,
    r: f64,
    big_r: f64,
    jitter: f64,
    seed: u64,
) -> Result<TriangleMesh<T>> {
    check_torus_args(nu, nv, r, big_r)?;
    if !(0.0..0.5).contains(&jitter) {
        return Err(Error::InvalidParameter(format!("jitter must lie in [0, 0.5), got {jitter}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (du, dv) = (TAU / nu as f64, TAU / nv as f64);
    let mut vertices = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            // graded spacing plus jitter
            let u = du * (i as f64 + jitter * rng.gen_range(-1.0..1.0));
            let v0 = dv * j as f64;
            let v = v0 + 0.3 * (v0.sin()) * dv + dv * jitter * rng.gen_range(-1.0..1.0);
            vertices.push(torus_point(u, v, r, big_r));
        }
    }
    let id = |i: usize, j: usize| (i % nu) * nv + j % nv;
    let mut triangles = Vec::with_capacity(2 * nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            let (p00, p10, p11, p01) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            if rng.gen_bool(0.5) {
                triangles.push([p00, p10, p11]);
                triangles.push([p00, p11, p01]);
            } else {
                triangles.push([p00, p10, p01]);
                triangles.push([p10, p11, p01]);
            }
        }
    }
    for tri in triangles.iter_mut() {
        if rng.gen_bool(0.25) {
            tri.swap(1, 2);
        }
        // rotate the stored corner order as well
        tri.rotate_left(rng.gen_range(0..3));
    }
    TriangleMesh::new(convert(&vertices), triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let ico = icosphere::<f64>(0);
        assert_eq!((ico.vertex_count(), ico.triangle_count()), (12, 20));
        let ico2 = icosphere::<f64>(2);
        assert_eq!(ico2.triangle_count(), 320);
        for v in ico2.vertices() {
            assert!((linalg::norm(*v) - 1.0).abs() <= 1e-15);
        }
        let oct = octasphere::<f64>(2);
        assert_eq!(oct.triangle_count(), 128);
        assert_eq!(oct.euler_characteristic().unwrap(), 2);
        let t = structured_torus::<f64>(16, 8, 1.0, 2.0).unwrap();
        assert_eq!((t.vertex_count(), t.triangle_count()), (128, 256));
        assert_eq!(t.euler_characteristic().unwrap(), 0);
        assert!(structured_torus::<f64>(2, 8, 1.0, 2.0).is_err());
        let d = distorted_torus::<f64>(20, 12, 1.0, 2.0, 0.3, 7).unwrap();
        assert_eq!(d.euler_characteristic().unwrap(), 0);
        assert!(d.min_angle() < t.min_angle());
    }

    #[test]
    fn outward_orientation() {
        for m in [icosphere::<f64>(1), octasphere::<f64>(1)] {
            for t in 0..m.triangle_count() {
                let c = m.corners(t);
                let n = linalg::cross(linalg::sub(c[1], c[0]), linalg::sub(c[2], c[0]));
                assert!(linalg::dot(n, c[0]) > 0.0);
            }
        }
    }
}
