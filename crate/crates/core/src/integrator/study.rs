use super::{integrate, HosqConfig, IntegrationReport, RuleChoice};
use crate::error::Result;
use crate::geometry::{LevelSetSurface, TriangleMesh};
use crate::linalg::Vec3;
use crate::quadrature::QuadratureRule;
use crate::real::Real;

#[derive(Debug)]
pub struct ConvergenceRow<T> {
    pub k: usize,
    pub config: HosqConfig,
    pub result: Result<IntegrationReport<T>>,
}

impl<T: Real> ConvergenceRow<T> {
    pub fn value(&self) -> Option<T> {
        self.result.as_ref().ok().map(|r| r.value)
    }

    pub fn rel_error(&self) -> Option<T> {
        self.result.as_ref().ok().and_then(|r| r.rel_error)
    }
}

/// Least-squares fits of `log₁₀ e` against `k` (exponential decay `e ≈ C·ρ^{-k}`) and
/// against `log₁₀ k` (algebraic decay `e ≈ C·k^{-p}`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceFit {
    /// `ρ` of the exponential fit.
    pub exponential_base: f64,
    pub exponential_rss: f64,
    /// `p` of the algebraic fit.
    pub algebraic_order: f64,
    pub algebraic_rss: f64,
    pub points: usize,
}

impl ConvergenceFit {
    /// Fits the rows with error above `floor`, ignoring the rounding plateau.
    pub fn from_errors(ks: &[usize], errors: &[f64], floor: f64) -> Option<Self> {
        let pts: Vec<(f64, f64)> = ks
            .iter()
            .zip(errors)
            .filter(|(_, &e)| e.is_finite() && e > floor)
            .map(|(&k, &e)| (k as f64, e.log10()))
            .collect();
        if pts.len() < 3 {
            return None;
        }
        let line = |xs: &[f64], ys: &[f64]| -> (f64, f64, f64) {
            let n = xs.len() as f64;
            let mx = xs.iter().sum::<f64>() / n;
            let my = ys.iter().sum::<f64>() / n;
            let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
            let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
            let slope = sxy / sxx;
            let icpt = my - slope * mx;
            let rss = xs.iter().zip(ys).map(|(x, y)| (y - icpt - slope * x).powi(2)).sum();
            (slope, icpt, rss)
        };
        let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
        let lin: Vec<f64> = pts.iter().map(|p| p.0).collect();
        let log: Vec<f64> = pts.iter().map(|p| p.0.log10()).collect();
        let (es, _, erss) = line(&lin, &ys);
        let (as_, _, arss) = line(&log, &ys);
        Some(ConvergenceFit {
            exponential_base: 10f64.powf(-es),
            exponential_rss: erss,
            algebraic_order: -as_,
            algebraic_rss: arss,
            points: pts.len(),
        })
    }

    pub fn exponential_preferred(&self) -> bool {
        self.exponential_rss < self.algebraic_rss
    }
}

#[derive(Debug)]
pub struct ConvergenceStudy<T> {
    pub rows: Vec<ConvergenceRow<T>>,
    pub reference: Option<T>,
}

impl<T: Real> ConvergenceStudy<T> {
    /// `(k, rel_error)` of the successful rows.
    pub fn errors(&self) -> (Vec<usize>, Vec<f64>) {
        self.rows.iter().filter_map(|r| r.rel_error().map(|e| (r.k, e.to_f64_lossy()))).unzip()
    }

    pub fn fit(&self, floor: f64) -> Option<ConvergenceFit> {
        let (ks, es) = self.errors();
        ConvergenceFit::from_errors(&ks, &es, floor)
    }

    /// Largest factor by which the error grows from one row to the next, with errors
    /// below `floor` counted as `floor`. Values ≤ 1 mean monotone decay.
    pub fn max_increase(&self, floor: f64) -> f64 {
        let (_, es) = self.errors();
        es.windows(2).map(|w| w[1].max(floor) / w[0].max(floor)).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.result.is_err()).count()
    }
}

/// Integrates at every `k` in `k_list` with `template.at_degree(k)`. Failed rows are
/// kept and the study continues.
pub fn convergence_study<T: Real, F: Fn(Vec3<T>) -> T>(
    mesh: &TriangleMesh<T>,
    surface: &LevelSetSurface<T>,
    f: F,
    reference: Option<T>,
    k_list: &[usize],
    template: &HosqConfig,
) -> ConvergenceStudy<T> {
    let rows = k_list
        .iter()
        .map(|&k| {
            let config = template.at_degree(k);
            let result = integrate(mesh, surface, &f, &config).map(|r| r.with_reference(reference));
            ConvergenceRow { k, config, result }
        })
        .collect();
    ConvergenceStudy { rows, reference }
}

/// Absolute errors of three square rules on `∫_{[-1,1]²} sin(λ x_axis) dx = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SineSweepRow {
    pub lambda: f64,
    pub tensor_gl: f64,
    pub squeeze: f64,
    pub duffy: f64,
}

/// Errors of tensor Gauss–Legendre with `degree` points per axis and of the degree-`degree`
/// triangle rule pulled back by square-squeezing and by Duffy, at every `λ`.
///
/// `axis` is 0 for `x₁` or 1 for `x₂`. The Duffy pull-back points are mirror symmetric in
/// `x₁`, so along `x₁` that rule is exact up to rounding; `x₂` is its collapsing direction.
pub fn sine_sweep(degree: usize, axis: usize, lambdas: &[f64]) -> Result<Vec<SineSweepRow>> {
    if axis > 1 {
        return Err(crate::error::Error::InvalidParameter(format!("sine sweep axis must be 0 or 1, got {axis}")));
    }
    let gl: QuadratureRule<f64> = RuleChoice::TensorGL(degree).build()?;
    let squeeze: QuadratureRule<f64> = RuleChoice::PullbackSqueeze(degree).build()?;
    let duffy: QuadratureRule<f64> = RuleChoice::PullbackDuffy(degree).build()?;
    Ok(lambdas
        .iter()
        .map(|&lambda| {
            let err = |rule: &QuadratureRule<f64>| rule.integrate(|x| (lambda * x[axis]).sin()).abs();
            SineSweepRow { lambda, tensor_gl: err(&gl), squeeze: err(&squeeze), duffy: err(&duffy) }
        })
        .collect())
}
