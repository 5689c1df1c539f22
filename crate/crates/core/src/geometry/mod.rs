//! Implicit surfaces, closest-point projection, curvature and triangle meshes.

mod builtin;
mod generators;
mod improve;
mod jet;
mod mesh;
mod mesher;
mod off;
mod presets;
mod surface;

pub use builtin::{builtin_surface, PolynomialLevel, BUILTIN_SURFACES};
pub use generators::{distorted_torus, icosphere, octasphere, staggered_torus, structured_torus};
pub use improve::{improve_mesh, ImproveOptions};
pub use jet::{Jet, LevelScalar};
pub use mesh::{triangle_area, TriangleMesh};
pub use mesher::{geodesic_sphere, marching_tetrahedra, radial_map, MarchingOptions};
pub use off::{parse_off, read_off, to_off_string, write_off};
pub use presets::reference_mesh;
pub use surface::{closest_point_project, ClosureFunction, ImplicitFunction, LevelSetSurface};
