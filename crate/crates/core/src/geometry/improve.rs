//! Remeshing of implicit surfaces towards a curvature-dependent edge length: edge splits,
//! short-edge collapse, edge flips and tangential smoothing, with every vertex kept on
//! the surface.

use std::collections::{BTreeSet, HashMap};

use super::mesh::{triangle_area, TriangleMesh};
use super::surface::LevelSetSurface;
use crate::error::Result;
use crate::linalg::{self, Vec3};
use crate::real::Real;

#[derive(Clone, Copy, Debug)]
pub struct ImproveOptions {
    /// Target edge length where the surface is flat.
    pub edge_length: f64,
    /// Where `curvature_factor / κ_max` is shorter it becomes the target instead;
    /// 0 keeps the target uniform.
    pub curvature_factor: f64,
    /// Rounds of split, collapse, flip and smoothing.
    pub rounds: usize,
}

struct Work<'a, T: Real> {
    surface: &'a LevelSetSurface<T>,
    pos: Vec<Vec3<T>>,
    tris: Vec<[usize; 3]>,
    alive: Vec<bool>,
    incident: Vec<BTreeSet<usize>>,
    size: Vec<T>,
    min_area: T,
    opts: ImproveOptions,
}

fn angle<T: Real>(at: Vec3<T>, p: Vec3<T>, q: Vec3<T>) -> T {
    let (u, v) = (linalg::sub(p, at), linalg::sub(q, at));
    let cos = linalg::dot(u, v) / (linalg::norm(u) * linalg::norm(v));
    cos.max(-T::one()).min(T::one()).acos()
}

fn min_angle<T: Real>(c: [Vec3<T>; 3]) -> T {
    angle(c[0], c[1], c[2]).min(angle(c[1], c[2], c[0])).min(angle(c[2], c[0], c[1]))
}

impl<'a, T: Real> Work<'a, T> {
    fn corners(&self, t: [usize; 3]) -> [Vec3<T>; 3] {
        [self.pos[t[0]], self.pos[t[1]], self.pos[t[2]]]
    }

    /// Non-degenerate and oriented like the surface normal.
    fn valid(&self, t: [usize; 3]) -> bool {
        let c = self.corners(t);
        if !(triangle_area(c) > self.min_area) {
            return false;
        }
        let n = linalg::cross(linalg::sub(c[1], c[0]), linalg::sub(c[2], c[0]));
        let centroid = linalg::scale(linalg::add(linalg::add(c[0], c[1]), c[2]), T::one() / T::c(3.0));
        linalg::dot(n, self.surface.gradient(centroid)) > T::zero()
    }

    fn neighbours(&self, v: usize) -> BTreeSet<usize> {
        self.incident[v].iter().flat_map(|&t| self.tris[t]).filter(|&w| w != v).collect()
    }

    fn edge_triangles(&self, a: usize, b: usize) -> Vec<usize> {
        self.incident[a].iter().copied().filter(|t| self.tris[*t].contains(&b)).collect()
    }

    fn target(&self, p: Vec3<T>) -> T {
        let flat = T::c(self.opts.edge_length);
        if self.opts.curvature_factor > 0.0 {
            if let Ok(k) = self.surface.max_curvature(p) {
                return flat.min(T::c(self.opts.curvature_factor) / k).max(flat * T::c(0.1));
            }
        }
        flat
    }

    fn edge_target(&self, a: usize, b: usize) -> T {
        self.size[a].min(self.size[b])
    }

    /// Triangles on the edge `a–b`, the one containing `a → b` first, with their third corners.
    fn wings(&self, a: usize, b: usize) -> Option<(usize, usize, usize, usize)> {
        let shared = self.edge_triangles(a, b);
        if shared.len() != 2 {
            return None;
        }
        let tri = self.tris[shared[0]];
        let ab = (0..3).any(|e| tri[e] == a && tri[(e + 1) % 3] == b);
        let (t1, t2) = if ab { (shared[0], shared[1]) } else { (shared[1], shared[0]) };
        let other = |t: usize| self.tris[t].into_iter().find(|&v| v != a && v != b).expect("third corner");
        Some((t1, t2, other(t1), other(t2)))
    }

    fn split(&mut self, a: usize, b: usize) -> bool {
        let Some((t1, t2, c, d)) = self.wings(a, b) else { return false };
        let mid = linalg::scale(linalg::add(self.pos[a], self.pos[b]), T::c(0.5));
        let Ok(p) = self.surface.project(mid) else { return false };
        let m = self.pos.len();
        self.pos.push(p);
        let new = [[a, m, c], [m, b, c], [b, m, d], [m, a, d]];
        if !new.iter().all(|&t| self.valid(t)) {
            self.pos.pop();
            return false;
        }
        let (t3, t4) = (self.tris.len(), self.tris.len() + 1);
        self.tris[t1] = new[0];
        self.tris[t2] = new[2];
        self.tris.push(new[1]);
        self.tris.push(new[3]);
        self.alive.extend([true, true]);
        self.incident[b].remove(&t1);
        self.incident[b].insert(t3);
        self.incident[c].insert(t3);
        self.incident[a].remove(&t2);
        self.incident[a].insert(t4);
        self.incident[d].insert(t4);
        self.incident.push([t1, t2, t3, t4].into_iter().collect());
        self.size.push(self.target(p));
        true
    }

    fn split_long(&mut self) -> usize {
        let long = T::c(4.0 / 3.0);
        let mut edges: Vec<(T, usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (self.length(a, b) / self.edge_target(a, b), a, b))
            .filter(|e| e.0 > long)
            .collect();
        edges.sort_by(|x, y| y.0.partial_cmp(&x.0).expect("finite lengths"));
        edges.into_iter().filter(|&(_, a, b)| self.split(a, b)).count()
    }

    fn collapse(&mut self, a: usize, b: usize) -> bool {
        let shared = self.edge_triangles(a, b);
        if shared.len() != 2 {
            return false;
        }
        let opposite: BTreeSet<usize> =
            shared.iter().flat_map(|&t| self.tris[t]).filter(|&w| w != a && w != b).collect();
        let common: BTreeSet<usize> = self.neighbours(a).intersection(&self.neighbours(b)).copied().collect();
        if common != opposite || opposite.len() != 2 {
            return false;
        }
        let mid = linalg::scale(linalg::add(self.pos[a], self.pos[b]), T::c(0.5));
        let Ok(p) = self.surface.project(mid) else { return false };
        let old = self.pos[a];
        self.pos[a] = p;
        let changed: Vec<(usize, [usize; 3])> = self.incident[a]
            .union(&self.incident[b])
            .copied()
            .filter(|t| !shared.contains(t))
            .map(|t| (t, self.tris[t].map(|v| if v == b { a } else { v })))
            .collect();
        let size_a = self.target(p);
        let long = T::c(4.0 / 3.0);
        let too_long = changed.iter().flat_map(|&(_, t)| t).any(|w| {
            w != a && linalg::norm(linalg::sub(self.pos[w], p)) > long * size_a.min(self.size[w])
        });
        if too_long || !changed.iter().all(|&(_, t)| self.valid(t)) {
            self.pos[a] = old;
            return false;
        }
        self.size[a] = size_a;
        for &t in &shared {
            self.alive[t] = false;
            for v in self.tris[t] {
                self.incident[v].remove(&t);
            }
        }
        for (t, tri) in changed {
            self.tris[t] = tri;
            self.incident[a].insert(t);
        }
        self.incident[b].clear();
        true
    }

    fn collapse_short(&mut self) -> usize {
        let short = T::c(0.8);
        let ratio = |w: &Self, a: usize, b: usize| w.length(a, b) / w.edge_target(a, b);
        let mut edges: Vec<(T, usize, usize)> =
            self.edges().into_iter().map(|(a, b)| (ratio(self, a, b), a, b)).filter(|e| e.0 < short).collect();
        edges.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite lengths"));
        let mut count = 0;
        for (_, a, b) in edges {
            if self.incident[a].is_empty() || self.incident[b].is_empty() || ratio(self, a, b) >= short {
                continue;
            }
            if self.edge_triangles(a, b).len() == 2 && self.collapse(a, b) {
                count += 1;
            }
        }
        count
    }

    fn length(&self, a: usize, b: usize) -> T {
        linalg::norm(linalg::sub(self.pos[a], self.pos[b]))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for (t, tri) in self.tris.iter().enumerate() {
            if self.alive[t] {
                for e in 0..3 {
                    let (a, b) = (tri[e], tri[(e + 1) % 3]);
                    set.insert((a.min(b), a.max(b)));
                }
            }
        }
        set.into_iter().collect()
    }

    /// Flips edges whose opposite angles sum beyond π when that improves the worst angle.
    fn flip_pass(&mut self) -> usize {
        let mut count = 0;
        for (a, b) in self.edges() {
            let Some((t1, t2, c, d)) = self.wings(a, b) else { continue };
            if c == d || self.neighbours(c).contains(&d) {
                continue;
            }
            let (pa, pb, pc, pd) = (self.pos[a], self.pos[b], self.pos[c], self.pos[d]);
            if angle(pc, pa, pb) + angle(pd, pa, pb) <= T::PI() {
                continue;
            }
            let new1 = [a, d, c];
            let new2 = [d, b, c];
            if !self.valid(new1) || !self.valid(new2) {
                continue;
            }
            let before = min_angle(self.corners(self.tris[t1])).min(min_angle(self.corners(self.tris[t2])));
            let after = min_angle(self.corners(new1)).min(min_angle(self.corners(new2)));
            if after <= before {
                continue;
            }
            self.incident[b].remove(&t1);
            self.incident[a].remove(&t2);
            self.incident[d].insert(t1);
            self.incident[c].insert(t2);
            self.tris[t1] = new1;
            self.tris[t2] = new2;
            count += 1;
        }
        count
    }

    /// Moves each vertex towards the mean of its neighbours when no incident angle worsens.
    fn smooth_pass(&mut self) -> usize {
        let mut count = 0;
        for v in 0..self.pos.len() {
            if self.incident[v].is_empty() {
                continue;
            }
            let nb = self.neighbours(v);
            let mut mean = [T::zero(); 3];
            for &w in &nb {
                mean = linalg::add(mean, self.pos[w]);
            }
            let mean = linalg::scale(mean, T::one() / T::from_usize_exact(nb.len()));
            let Ok(p) = self.surface.project(mean) else { continue };
            let tris: Vec<[usize; 3]> = self.incident[v].iter().map(|&t| self.tris[t]).collect();
            let worst = |w: &Self| tris.iter().map(|&t| min_angle(w.corners(t))).fold(T::PI(), T::min);
            let before = worst(self);
            let old = self.pos[v];
            self.pos[v] = p;
            if tris.iter().all(|&t| self.valid(t)) && worst(self) > before {
                self.size[v] = self.target(p);
                count += 1;
            } else {
                self.pos[v] = old;
            }
        }
        count
    }

    fn finish(self) -> Result<TriangleMesh<T>> {
        let mut remap = HashMap::new();
        let mut vertices = Vec::new();
        let mut triangles = Vec::new();
        for (t, tri) in self.tris.iter().enumerate() {
            if !self.alive[t] {
                continue;
            }
            triangles.push(tri.map(|v| {
                *remap.entry(v).or_insert_with(|| {
                    vertices.push(self.pos[v]);
                    vertices.len() - 1
                })
            }));
        }
        TriangleMesh::new(vertices, triangles)
    }
}

/// Remeshes a closed mesh whose vertices lie on `surface` and whose triangles are
/// oriented along `∇l`: edges longer than 4/3 of the local target are split, edges
/// shorter than 4/5 of it collapsed. Triangles that would invert or degenerate are
/// never created.
pub fn improve_mesh<T: Real>(
    mesh: &TriangleMesh<T>,
    surface: &LevelSetSurface<T>,
    opts: &ImproveOptions,
) -> Result<TriangleMesh<T>> {
    let mut incident = vec![BTreeSet::new(); mesh.vertex_count()];
    for (t, tri) in mesh.triangles().iter().enumerate() {
        for &v in tri {
            incident[v].insert(t);
        }
    }
    let mut work = Work {
        surface,
        pos: mesh.vertices().to_vec(),
        tris: mesh.triangles().to_vec(),
        alive: vec![true; mesh.triangle_count()],
        incident,
        size: Vec::new(),
        min_area: T::c(1e-12),
        opts: *opts,
    };
    work.size = work.pos.iter().map(|&p| work.target(p)).collect();
    for _ in 0..opts.rounds {
        let split = work.split_long();
        let collapsed = work.collapse_short();
        let mut flipped = 0;
        for _ in 0..10 {
            let f = work.flip_pass();
            flipped += f;
            if f == 0 {
                break;
            }
        }
        let smoothed = work.smooth_pass();
        if split + collapsed + flipped + smoothed == 0 {
            break;
        }
    }
    work.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{builtin_surface, marching_tetrahedra, MarchingOptions};

    #[test]
    fn remeshed_torus_is_closed_oriented_and_well_shaped() {
        let s = builtin_surface::<f64>("torus", &[]).unwrap();
        let raw = MarchingOptions { lower: [-3.3, -3.3, -1.3], upper: [3.3, 3.3, 1.3], spacing: [0.3; 3], improve: None };
        let before = marching_tetrahedra(&s, &raw).unwrap();
        let opts = ImproveOptions { edge_length: 0.4, curvature_factor: 0.0, rounds: 4 };
        let after = improve_mesh(&before, &s, &opts).unwrap();
        assert_eq!(after.euler_characteristic().unwrap(), 0);
        assert!(after.min_angle() > before.min_angle());
        assert!(after.min_angle().to_degrees() > 20.0);
        for t in 0..after.triangle_count() {
            let c = after.corners(t);
            let n = linalg::cross(linalg::sub(c[1], c[0]), linalg::sub(c[2], c[0]));
            assert!(linalg::dot(n, s.gradient(c[0])) > 0.0);
        }
        for v in after.vertices() {
            let d = linalg::norm(linalg::sub(s.project(*v).unwrap(), *v));
            assert!(d < 3e-14, "{d:e}");
        }
    }

    #[test]
    fn curvature_shortens_edges() {
        let s = builtin_surface::<f64>("ellipsoid", &[]).unwrap();
        let raw = MarchingOptions { lower: [-0.8, -1.0, -2.2], upper: [0.8, 1.0, 2.2], spacing: [0.2; 3], improve: None };
        let mesh = marching_tetrahedra(&s, &raw).unwrap();
        let uniform = ImproveOptions { edge_length: 0.3, curvature_factor: 0.0, rounds: 3 };
        let adapted = ImproveOptions { curvature_factor: 0.3, ..uniform };
        let u = improve_mesh(&mesh, &s, &uniform).unwrap();
        let a = improve_mesh(&mesh, &s, &adapted).unwrap();
        assert!(a.triangle_count() > u.triangle_count());
        assert_eq!(a.euler_characteristic().unwrap(), 2);
    }
}
