//! Parsing of the string-valued flags: surfaces, meshes, degree lists, rules.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use hosq::geometry::{
    builtin_surface, distorted_torus, geodesic_sphere, icosphere, marching_tetrahedra, octasphere, read_off,
    reference_mesh, staggered_torus, structured_torus, ImproveOptions, MarchingOptions,
};
use hosq::integrator::{RuleChoice, Summation};
use hosq::{LevelSetSurface64, TransformKind, TriangleMesh64};

/// `name[:key=value,...]`.
pub fn parse_surface(spec: &str) -> Result<LevelSetSurface64> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut params = Vec::new();
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| anyhow!("surface parameter `{item}` is not key=value"))?;
        let value: f64 = value.trim().parse().with_context(|| format!("surface parameter `{item}`"))?;
        params.push((key.trim(), value));
    }
    Ok(builtin_surface(name.trim(), &params)?)
}

/// `a..b[:step]` (inclusive), `a,b,c` or `a`.
pub fn parse_usize_list(spec: &str) -> Result<Vec<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("`{s}` is not a non-negative integer"));
    if let Some((range, step)) = spec.split_once("..").map(|(a, rest)| (a, rest.split_once(':').unwrap_or((rest, "1")))) {
        let (lo, hi, step) = (parse(range)?, parse(step.0)?, parse(step.1)?);
        if step == 0 || lo > hi {
            bail!("empty range `{spec}`");
        }
        return Ok((lo..=hi).step_by(step).collect());
    }
    spec.split(',').map(parse).collect()
}

/// `a..b[:points_per_decade]` on a logarithmic scale, or a comma list.
pub fn parse_lambdas(spec: &str) -> Result<Vec<f64>> {
    let parse = |s: &str| s.trim().parse::<f64>().with_context(|| format!("`{s}` is not a number"));
    if let Some((lo, rest)) = spec.split_once("..") {
        let (hi, per) = rest.split_once(':').unwrap_or((rest, "4"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        let per: usize = per.trim().parse().with_context(|| format!("`{per}` is not a count"))?;
        if !(lo > 0.0 && hi >= lo) || per == 0 {
            bail!("λ range `{spec}` needs 0 < a ≤ b and a positive density");
        }
        let (a, b) = (lo.log10(), hi.log10());
        let steps = ((b - a) * per as f64).round() as usize;
        let point = |i: usize| {
            let e = a + i as f64 / per as f64;
            // whole decades parse exactly, powf does not
            if (e - e.round()).abs() < 1e-9 {
                format!("1e{}", e.round() as i64).parse().expect("valid float literal")
            } else {
                10f64.powf(e)
            }
        };
        return Ok((0..=steps).map(point).collect());
    }
    spec.split(',').map(parse).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    PullbackSqueeze,
    PullbackDuffy,
    TensorGl,
}

/// A rule family with either a fixed degree or one following `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleSpec {
    pub family: Family,
    pub degree: Option<usize>,
}

impl RuleSpec {
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, degree) = match spec.split_once(':') {
            Some((n, d)) => (n, Some(d.trim().parse::<usize>().with_context(|| format!("rule degree `{d}`"))?)),
            None => (spec, None),
        };
        let family = match name.trim() {
            "pullback-squeeze" | "squeeze" => Family::PullbackSqueeze,
            "pullback-duffy" | "duffy" => Family::PullbackDuffy,
            "tensor-gl" | "gl" => Family::TensorGl,
            other => bail!("unknown rule `{other}` (pullback-squeeze, pullback-duffy, tensor-gl)"),
        };
        Ok(RuleSpec { family, degree })
    }

    /// The rule at sweep degree `k`, before substitution of unavailable pull-backs.
    pub fn at(&self, k: usize) -> RuleChoice {
        let d = self.degree.unwrap_or(k);
        match self.family {
            Family::PullbackSqueeze => RuleChoice::PullbackSqueeze(d),
            Family::PullbackDuffy => RuleChoice::PullbackDuffy(d),
            Family::TensorGl => RuleChoice::TensorGL(d),
        }
    }

    pub fn default_transform(&self) -> TransformKind {
        match self.family {
            Family::PullbackDuffy => TransformKind::Duffy,
            _ => TransformKind::SquareSqueeze,
        }
    }
}

pub fn parse_transform(spec: &str) -> Result<TransformKind> {
    match spec.trim() {
        "squeeze" | "square-squeeze" => Ok(TransformKind::SquareSqueeze),
        "duffy" => Ok(TransformKind::Duffy),
        other => bail!("unknown transform `{other}` (squeeze, duffy)"),
    }
}

pub fn transform_name(t: TransformKind) -> &'static str {
    match t {
        TransformKind::SquareSqueeze => "squeeze",
        TransformKind::Duffy => "duffy",
    }
}

pub fn parse_summation(spec: &str) -> Result<Summation> {
    match spec.trim() {
        "pairwise" => Ok(Summation::Pairwise),
        "kahan" => Ok(Summation::Kahan),
        other => bail!("unknown summation `{other}` (pairwise, kahan)"),
    }
}

/// Interpolation degree of the integrand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegrandDegree {
    Direct,
    FollowK,
    Fixed(usize),
}

impl IntegrandDegree {
    pub fn parse(spec: Option<&str>) -> Result<Self> {
        match spec.map(str::trim) {
            None | Some("direct") => Ok(IntegrandDegree::Direct),
            Some("k") => Ok(IntegrandDegree::FollowK),
            Some(n) => Ok(IntegrandDegree::Fixed(n.parse().with_context(|| format!("--n `{n}`"))?)),
        }
    }

    pub fn at(self, k: usize) -> Option<usize> {
        match self {
            IntegrandDegree::Direct => None,
            IntegrandDegree::FollowK => Some(k),
            IntegrandDegree::Fixed(n) => Some(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MeshSource {
    Reference,
    File(PathBuf),
    Icosphere(usize),
    Octasphere(usize),
    Geodesic(usize),
    Torus(usize, usize),
    StaggeredTorus(usize, usize),
    DistortedTorus { nu: usize, nv: usize, jitter: f64, seed: u64 },
    Marching { spacing: f64, bound: f64 },
}

impl MeshSource {
    pub fn parse(spec: &str) -> Result<Self> {
        if let Some(path) = spec.strip_prefix("file:") {
            return Ok(MeshSource::File(PathBuf::from(path)));
        }
        let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let args: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let int = |i: usize| -> Result<usize> {
            let a = args.get(i).ok_or_else(|| anyhow!("mesh `{spec}`: missing argument {}", i + 1))?;
            a.parse().with_context(|| format!("mesh `{spec}`: `{a}` is not an integer"))
        };
        let float = |i: usize, default: f64| -> Result<f64> {
            args.get(i).map_or(Ok(default), |a| a.parse().with_context(|| format!("mesh `{spec}`: `{a}` is not a number")))
        };
        let source = match name.trim() {
            "reference" => MeshSource::Reference,
            "icosphere" => MeshSource::Icosphere(int(0)?),
            "octasphere" => MeshSource::Octasphere(int(0)?),
            "geodesic" => MeshSource::Geodesic(int(0)?),
            "torus" => MeshSource::Torus(int(0)?, int(1)?),
            "staggered-torus" => MeshSource::StaggeredTorus(int(0)?, int(1)?),
            "distorted-torus" => MeshSource::DistortedTorus {
                nu: int(0)?,
                nv: int(1)?,
                jitter: float(2, 0.3)?,
                seed: if args.len() > 3 { int(3)? as u64 } else { 11 },
            },
            "marching" => MeshSource::Marching { spacing: float(0, f64::NAN)?, bound: float(1, 2.5)? },
            other => bail!("unknown mesh generator `{other}`"),
        };
        if let MeshSource::Marching { spacing, .. } = source {
            if spacing.is_nan() || spacing <= 0.0 {
                bail!("mesh `{spec}`: marching needs a positive spacing");
            }
        }
        Ok(source)
    }

    /// Builds the mesh and moves its vertices onto `surface`.
    pub fn build(&self, surface: &LevelSetSurface64) -> Result<TriangleMesh64> {
        let torus = || (surface.param("r").unwrap_or(1.0), surface.param("R").unwrap_or(2.0));
        let mesh = match self {
            MeshSource::Reference => return Ok(reference_mesh(surface)?),
            MeshSource::File(path) => read_off(path)?,
            MeshSource::Icosphere(s) => icosphere(*s),
            MeshSource::Octasphere(s) => octasphere(*s),
            MeshSource::Geodesic(f) => geodesic_sphere(*f)?,
            MeshSource::Torus(nu, nv) => structured_torus(*nu, *nv, torus().0, torus().1)?,
            MeshSource::StaggeredTorus(nu, nv) => staggered_torus(*nu, *nv, torus().0, torus().1)?,
            MeshSource::DistortedTorus { nu, nv, jitter, seed } => {
                distorted_torus(*nu, *nv, torus().0, torus().1, *jitter, *seed)?
            }
            MeshSource::Marching { spacing, bound } => marching_tetrahedra(
                surface,
                &MarchingOptions {
                    lower: [-bound; 3],
                    upper: [*bound; 3],
                    spacing: [*spacing; 3],
                    improve: Some(ImproveOptions { edge_length: *spacing, curvature_factor: 0.25, rounds: 5 }),
                },
            )?,
        };
        Ok(mesh.project_to(surface)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(parse_usize_list("2..6").unwrap(), vec![2, 3, 4, 5, 6]);
        assert_eq!(parse_usize_list("4..40:4").unwrap().len(), 10);
        assert_eq!(parse_usize_list("3, 5,8").unwrap(), vec![3, 5, 8]);
        assert_eq!(parse_usize_list("7").unwrap(), vec![7]);
        assert!(parse_usize_list("6..2").is_err());
        assert!(parse_usize_list("x").is_err());
    }

    #[test]
    fn lambda_ranges_are_logarithmic() {
        let l = parse_lambdas("1e-11..1e4").unwrap();
        assert_eq!(l.len(), 61);
        assert_eq!((l[0], l[4], l[60]), (1e-11, 1e-10, 1e4));
        assert_eq!(parse_lambdas("1e-8,0.1").unwrap(), vec![1e-8, 0.1]);
        assert!(parse_lambdas("0..1").is_err());
    }

    #[test]
    fn rules_and_meshes() {
        let r = RuleSpec::parse("tensor-gl:13").unwrap();
        assert_eq!(r.at(30), RuleChoice::TensorGL(13));
        assert_eq!(RuleSpec::parse("pullback-duffy").unwrap().default_transform(), TransformKind::Duffy);
        assert!(RuleSpec::parse("simpson").is_err());
        assert_eq!(
            MeshSource::parse("distorted-torus:44,14").unwrap(),
            MeshSource::DistortedTorus { nu: 44, nv: 14, jitter: 0.3, seed: 11 }
        );
        assert_eq!(MeshSource::parse("file:a:b.off").unwrap(), MeshSource::File("a:b.off".into()));
        assert!(MeshSource::parse("cube:3").is_err());
        assert!(MeshSource::parse("torus:4").is_err());
    }

    #[test]
    fn surfaces_with_parameters() {
        let s = parse_surface("torus:r=0.5,R=2").unwrap();
        assert_eq!(s.param("r"), Some(0.5));
        assert!(parse_surface("klein-bottle").is_err());
        assert!(parse_surface("sphere:radius").is_err());
    }
}
