//! Meshes for the built-in surfaces, comparable in size to the ones used in the
//! numerical experiments.

use super::generators::{octasphere, staggered_torus};
use super::mesh::TriangleMesh;
use super::improve::ImproveOptions;
use super::mesher::{geodesic_sphere, marching_tetrahedra, radial_map, MarchingOptions};
use super::surface::LevelSetSurface;
use crate::error::{Error, Result};
use crate::real::Real;

/// A closed mesh of a built-in surface with every vertex on the surface.
///
/// | surface | construction | triangles |
/// |---|---|---|
/// | sphere | subdivided octahedron | 128 |
/// | ellipsoid | scaled geodesic sphere | 3920 |
/// | torus | staggered 44 × 14 grid | 1232 |
/// | genus2 | marching tetrahedra, curvature-adapted remeshing | ≈ 15 600 |
/// | dziuk | geodesic sphere under `(a, b, c) ↦ (a + c², b, c)` | 8000 |
/// | double-torus | marching tetrahedra, curvature-adapted remeshing | ≈ 8 100 |
/// | biconcave | radial map of a geodesic sphere | 2880 |
pub fn reference_mesh<T: Real>(surface: &LevelSetSurface<T>) -> Result<TriangleMesh<T>> {
    let p = |key: &str| surface.param(key).unwrap_or(f64::NAN);
    let mesh = match surface.name() {
        "sphere" => {
            let r = T::c(p("radius"));
            octasphere::<T>(2).map_vertices(|v| [v[0] * r, v[1] * r, v[2] * r])?
        }
        "ellipsoid" => {
            let (a, b, c) = (T::c(p("a")), T::c(p("b")), T::c(p("c")));
            geodesic_sphere::<T>(14)?.map_vertices(|v| [v[0] * a, v[1] * b, v[2] * c])?
        }
        "torus" => staggered_torus(44, 14, p("r"), p("R"))?,
        "dziuk" => geodesic_sphere::<T>(20)?.map_vertices(|v| [v[0] + v[2] * v[2], v[1], v[2]])?,
        "genus2" => marching_tetrahedra(
            surface,
            &MarchingOptions { lower: [-1.8, -2.0, -1.1], upper: [1.8, 1.2, 1.1], spacing: [0.08; 3], improve: Some(ImproveOptions { edge_length: 0.075, curvature_factor: 0.25, rounds: 5 }) },
        )?,
        "double-torus" => {
            let a = p("a");
            let reach = (1.0 + (1.0 + 4.0 * a).sqrt()) / 2.0;
            let x = reach.sqrt() + 0.1;
            marching_tetrahedra(
                surface,
                &MarchingOptions { lower: [-x, -0.6, -a - 0.1], upper: [x, 0.6, a + 0.1], spacing: [0.05, 0.05, 0.025], improve: Some(ImproveOptions { edge_length: 0.065, curvature_factor: 0.27, rounds: 5 }) },
            )?
        }
        "biconcave" => radial_map(&geodesic_sphere::<T>(12)?, surface, 4.0)?,
        other => {
            return Err(Error::InvalidParameter(format!("no reference mesh for surface '{other}'")));
        }
    };
    mesh.project_to(surface)
}
