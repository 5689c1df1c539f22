use std::collections::HashMap;

use super::surface::LevelSetSurface;
use crate::error::{Error, Result};
use crate::linalg::{self, Vec3};
use crate::real::Real;

const MIN_TRIANGLE_AREA: f64 = 1e-14;

/// Flat triangulation: vertex positions and index triples.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleMesh<T> {
    vertices: Vec<Vec3<T>>,
    triangles: Vec<[usize; 3]>,
}

impl<T: Real> TriangleMesh<T> {
    /// Validates indices, repeated corners and triangle areas.
    pub fn new(vertices: Vec<Vec3<T>>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let min_area = T::tol(MIN_TRIANGLE_AREA);
        for (t, tri) in triangles.iter().enumerate() {
            if let Some(&i) = tri.iter().find(|&&i| i >= vertices.len()) {
                return Err(Error::InvalidMesh(format!(
                    "triangle {t} references vertex {i}, but there are only {} vertices",
                    vertices.len()
                )));
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::InvalidMesh(format!("triangle {t} repeats a vertex: {tri:?}")));
            }
            let area = triangle_area([vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]]);
            if !(area > min_area) {
                return Err(Error::InvalidMesh(format!("triangle {t} is degenerate (area {area:e})")));
            }
        }
        Ok(TriangleMesh { vertices, triangles })
    }

    pub fn vertices(&self) -> &[Vec3<T>] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Corner positions of triangle `t` in stored order.
    pub fn corners(&self, t: usize) -> [Vec3<T>; 3] {
        let [a, b, c] = self.triangles[t];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }

    /// Undirected edges with the number of triangles sharing each, sorted.
    pub fn edges(&self) -> Vec<((usize, usize), usize)> {
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for tri in &self.triangles {
            for e in 0..3 {
                let (a, b) = (tri[e], tri[(e + 1) % 3]);
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        let mut edges: Vec<_> = count.into_iter().collect();
        edges.sort_unstable();
        edges
    }

    /// Fails with the first edge not shared by exactly two triangles.
    pub fn check_closed(&self) -> Result<()> {
        match self.edges().into_iter().find(|&(_, n)| n != 2) {
            Some(((a, b), n)) => Err(Error::NonClosedMesh(a, b, n)),
            None => Ok(()),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.check_closed().is_ok()
    }

    /// `V − E + F` of a closed mesh. Vertices not used by any triangle are not counted.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let edges = self.edges();
        if let Some(&((a, b), n)) = edges.iter().find(|(_, n)| *n != 2) {
            return Err(Error::NonClosedMesh(a, b, n));
        }
        let mut used = vec![false; self.vertices.len()];
        for tri in &self.triangles {
            for &i in tri {
                used[i] = true;
            }
        }
        let v = used.iter().filter(|&&u| u).count() as i64;
        Ok(v - edges.len() as i64 + self.triangles.len() as i64)
    }

    /// Total area of the flat triangles.
    pub fn flat_area(&self) -> T {
        (0..self.triangles.len()).map(|t| triangle_area(self.corners(t))).sum()
    }

    /// Smallest interior angle over all triangles, in radians.
    pub fn min_angle(&self) -> T {
        let mut best = T::PI();
        for t in 0..self.triangles.len() {
            let c = self.corners(t);
            for i in 0..3 {
                let u = linalg::sub(c[(i + 1) % 3], c[i]);
                let v = linalg::sub(c[(i + 2) % 3], c[i]);
                let cos = linalg::dot(u, v) / (linalg::norm(u) * linalg::norm(v));
                best = best.min(cos.max(-T::one()).min(T::one()).acos());
            }
        }
        best
    }

    /// Same mesh with the triangles listed in `order` (a permutation of `0..F`).
    pub fn permute_triangles(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.triangles.len()];
        if order.len() != seen.len() || order.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidParameter("triangle order is not a permutation".into()));
        }
        Ok(TriangleMesh { vertices: self.vertices.clone(), triangles: order.iter().map(|&i| self.triangles[i]).collect() })
    }

    /// Reverses the orientation of the listed triangles.
    pub fn flip_triangles(&mut self, which: impl IntoIterator<Item = usize>) {
        for t in which {
            self.triangles[t].swap(1, 2);
        }
    }

    /// Snaps every vertex to its closest point on `surface`.
    pub fn project_to(&self, surface: &LevelSetSurface<T>) -> Result<Self> {
        let vertices = self.vertices.iter().map(|&v| surface.project(v)).collect::<Result<Vec<_>>>()?;
        TriangleMesh::new(vertices, self.triangles.clone())
    }

    /// 4-to-1 midpoint subdivision; new vertices are projected onto `surface`.
    pub fn refine(&self, surface: &LevelSetSurface<T>) -> Result<Self> {
        self.check_closed()?;
        self.subdivide(|p| surface.project(p))
    }

    /// 4-to-1 subdivision placing each edge midpoint through `place`.
    pub fn subdivide(&self, mut place: impl FnMut(Vec3<T>) -> Result<Vec3<T>>) -> Result<Self> {
        let mut vertices = self.vertices.clone();
        let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
        let half = T::c(0.5);
        let mut triangles = Vec::with_capacity(4 * self.triangles.len());
        for tri in &self.triangles {
            let mut m = [0usize; 3];
            for e in 0..3 {
                let (a, b) = (tri[e], tri[(e + 1) % 3]);
                let key = (a.min(b), a.max(b));
                m[e] = match midpoint.get(&key) {
                    Some(&i) => i,
                    None => {
                        let p = linalg::scale(linalg::add(self.vertices[a], self.vertices[b]), half);
                        vertices.push(place(p)?);
                        midpoint.insert(key, vertices.len() - 1);
                        vertices.len() - 1
                    }
                };
            }
            let [a, b, c] = *tri;
            triangles.push([a, m[0], m[2]]);
            triangles.push([m[0], b, m[1]]);
            triangles.push([m[2], m[1], c]);
            triangles.push([m[0], m[1], m[2]]);
        }
        TriangleMesh::new(vertices, triangles)
    }

    /// Applies `f` to every vertex, keeping the connectivity.
    pub fn map_vertices(&self, f: impl FnMut(Vec3<T>) -> Vec3<T>) -> Result<Self> {
        TriangleMesh::new(self.vertices.iter().copied().map(f).collect(), self.triangles.clone())
    }
}

pub fn triangle_area<T: Real>(c: [Vec3<T>; 3]) -> T {
    let n = linalg::cross(linalg::sub(c[1], c[0]), linalg::sub(c[2], c[0]));
    linalg::norm(n) * T::c(0.5)
}
