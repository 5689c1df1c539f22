//! The experiments, each producing one [`Table`].

use std::collections::BTreeSet;
use std::f64::consts::PI;

use anyhow::{bail, Result};
use hosq::integrator::{gauss_bonnet, integrate, sine_sweep, ConvergenceFit, HosqConfig, IntegrationReport};
use hosq::interpolation::{lebesgue_constant, lebesgue_estimate, ChebyshevGrid};
use hosq::{LevelSetSurface64, TriangleMesh64};

use crate::args::{Cli, Experiment};
use crate::output::{num, opt, Table};
use crate::source::{
    parse_lambdas, parse_summation, parse_surface, parse_transform, parse_usize_list, transform_name, IntegrandDegree,
    MeshSource, RuleSpec,
};

/// Errors below this are rounding noise and left out of rate fits.
const FIT_FLOOR: f64 = 1e-14;

const SWEEP_COLUMNS: [&str; 10] =
    ["k", "rule", "transform", "n", "value", "reference", "abs_error", "rel_error", "min_volume_element", "error"];

pub fn name(e: Experiment) -> &'static str {
    match e {
        Experiment::Area => "area",
        Experiment::Integrate => "integrate",
        Experiment::GaussBonnet => "gauss-bonnet",
        Experiment::Convergence => "convergence",
        Experiment::RefineStudy => "refine-study",
        Experiment::LambdaSweep => "lambda-sweep",
        Experiment::Lebesgue => "lebesgue",
    }
}

pub fn run(cli: &Cli) -> Result<Table> {
    let mut table = match cli.experiment {
        Experiment::Area | Experiment::Integrate | Experiment::GaussBonnet | Experiment::Convergence => degree_sweep(cli)?,
        Experiment::RefineStudy => refine_study(cli)?,
        Experiment::LambdaSweep => lambda_sweep(cli)?,
        Experiment::Lebesgue => lebesgue(cli)?,
    };
    let mut meta = vec![("hosq".to_string(), env!("CARGO_PKG_VERSION").to_string()), ("experiment".into(), name(cli.experiment).into())];
    if cli.stamp {
        let secs = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        meta.push(("timestamp".into(), format!("{secs} (unix seconds)")));
    }
    meta.append(&mut table.meta);
    table.meta = meta;
    Ok(table)
}

type Integrand<'a> = Box<dyn Fn([f64; 3]) -> f64 + 'a>;

fn y54(p: [f64; 3]) -> f64 {
    let [x, y, z] = p;
    3.0 * 385f64.sqrt() * (x.powi(4) - 6.0 * x * x * y * y + y.powi(4)) * z / (16.0 * PI.sqrt())
}

/// The integrand and its exact integral when known.
fn integrand<'a>(name: &str, surface: &'a LevelSetSurface64, mesh: &TriangleMesh64) -> Result<(Integrand<'a>, Option<f64>)> {
    let sphere_radius = (surface.name() == "sphere").then(|| surface.param("radius").unwrap_or(1.0));
    Ok(match name {
        "one" => (Box::new(|_| 1.0), surface.reference_area()),
        // harmonic polynomial, orthogonal to constants on any sphere about the origin
        "y54" => (Box::new(y54), sphere_radius.map(|_| 0.0)),
        "gauss-curvature" => {
            let chi = mesh.euler_characteristic().ok();
            (Box::new(|p| surface.gauss_curvature(p).unwrap_or(f64::NAN)), chi.map(|c| 2.0 * PI * c as f64))
        }
        "mean-curvature" => {
            (Box::new(|p| surface.mean_curvature(p).unwrap_or(f64::NAN)), sphere_radius.map(|r| 4.0 * PI * r))
        }
        "exp-x" => (Box::new(|p: [f64; 3]| p[0].exp()), None),
        other => bail!("unknown integrand `{other}` (one, y54, gauss-curvature, mean-curvature, exp-x)"),
    })
}

fn load_geometry(cli: &Cli, table: &mut Table) -> Result<(LevelSetSurface64, TriangleMesh64)> {
    let surface = parse_surface(cli.surface.as_deref().unwrap_or("sphere"))?;
    let source = MeshSource::parse(cli.mesh.as_deref().unwrap_or("reference"))?;
    let mesh = source.build(&surface)?;
    let params: Vec<String> = surface.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    table.meta("surface", if params.is_empty() { surface.name().to_string() } else { format!("{} {}", surface.name(), params.join(",")) });
    let chi = mesh.euler_characteristic().map_or("open".to_string(), |c| c.to_string());
    table.meta(
        "mesh",
        format!(
            "{} ({} triangles, {} vertices, euler characteristic {chi})",
            cli.mesh.as_deref().unwrap_or("reference"),
            mesh.triangle_count(),
            mesh.vertex_count()
        ),
    );
    Ok((surface, mesh))
}

/// The configuration at degree `k`, noting any rule substitution.
struct Settings {
    rule: RuleSpec,
    transform: Option<hosq::TransformKind>,
    n: IntegrandDegree,
    summation: hosq::integrator::Summation,
    notes: BTreeSet<String>,
}

impl Settings {
    fn from_cli(cli: &Cli, table: &mut Table) -> Result<Self> {
        let rule = RuleSpec::parse(cli.rule.as_deref().unwrap_or("pullback-squeeze"))?;
        let transform = cli.transform.as_deref().map(parse_transform).transpose()?;
        let n = IntegrandDegree::parse(cli.n.as_deref())?;
        let summation = parse_summation(cli.summation.as_deref().unwrap_or("pairwise"))?;
        table.meta("rule", cli.rule.as_deref().unwrap_or("pullback-squeeze"));
        table.meta("transform", transform_name(transform.unwrap_or(rule.default_transform())));
        table.meta(
            "integrand degree",
            match n {
                IntegrandDegree::Direct => "direct sampling".to_string(),
                IntegrandDegree::FollowK => "n = k".to_string(),
                IntegrandDegree::Fixed(n) => format!("n = {n}"),
            },
        );
        table.meta("summation", format!("{summation:?}").to_lowercase());
        Ok(Settings { rule, transform, n, summation, notes: BTreeSet::new() })
    }

    fn config(&mut self, k: usize) -> HosqConfig {
        let requested = self.rule.at(k);
        let (rule, substituted) = requested.resolve();
        if substituted {
            self.notes.insert(format!("{requested} has no embedded triangle rule, used {rule}"));
        }
        HosqConfig::new(k)
            .with_rule(rule)
            .with_transform(self.transform.unwrap_or(self.rule.default_transform()))
            .with_integrand_degree(self.n.at(k))
            .with_summation(self.summation)
    }
}

fn sweep_row(k: usize, config: &HosqConfig, result: &Result<IntegrationReport<f64>, hosq::Error>, reference: Option<f64>) -> Vec<String> {
    let head = vec![
        k.to_string(),
        config.rule.to_string(),
        transform_name(config.transform).to_string(),
        config.integrand_degree.map_or("direct".to_string(), |n| n.to_string()),
    ];
    let tail = match result {
        Ok(r) => vec![
            num(r.value),
            opt(r.reference),
            opt(r.abs_error),
            opt(r.rel_error),
            num(r.per_element_min_volume_element),
            String::new(),
        ],
        Err(e) => vec![String::new(), opt(reference), String::new(), String::new(), String::new(), e.to_string()],
    };
    head.into_iter().chain(tail).collect()
}

fn degree_sweep(cli: &Cli) -> Result<Table> {
    let mut table = Table::new(SWEEP_COLUMNS.to_vec());
    let (surface, mesh) = load_geometry(cli, &mut table)?;
    let mut settings = Settings::from_cli(cli, &mut table)?;
    let ks = parse_usize_list(cli.k.as_deref().unwrap_or("2..14:2"))?;
    let integrand_name = match cli.experiment {
        Experiment::Area => "one",
        Experiment::GaussBonnet => "gauss-curvature",
        _ => cli.integrand.as_deref().unwrap_or("one"),
    };
    if cli.integrand.is_some() && matches!(cli.experiment, Experiment::Area | Experiment::GaussBonnet) {
        table.warnings.push(format!("--integrand is ignored by {}", name(cli.experiment)));
    }
    let (f, builtin_reference) = integrand(integrand_name, &surface, &mesh)?;
    let reference = cli.reference.or(builtin_reference);
    table.meta("integrand", integrand_name);
    table.meta("reference", opt(reference));
    if cli.experiment == Experiment::Convergence && reference.is_none() {
        bail!("convergence needs a reference value: pass --reference");
    }

    let mut errors = (Vec::new(), Vec::new());
    for &k in &ks {
        let config = settings.config(k);
        let result = if cli.experiment == Experiment::GaussBonnet && cli.reference.is_none() {
            gauss_bonnet(&mesh, &surface, &config)
        } else {
            integrate(&mesh, &surface, &f, &config).map(|r| r.with_reference(reference))
        };
        match &result {
            Ok(r) => {
                table.warnings.extend(r.warnings.iter().map(|w| format!("k = {k}: {w}")));
                if let Some(e) = r.rel_error {
                    errors.0.push(k);
                    errors.1.push(e);
                }
            }
            Err(e) => table.failures.push(format!("k = {k}: {e}")),
        }
        table.rows.push(sweep_row(k, &config, &result, reference));
    }
    for note in std::mem::take(&mut settings.notes) {
        table.meta("note", note);
    }
    if cli.experiment == Experiment::Convergence {
        match ConvergenceFit::from_errors(&errors.0, &errors.1, FIT_FLOOR) {
            Some(fit) => {
                table.trailer.push(format!(
                    "exponential fit: rel_error ~ C * {}^(-k), residual {}",
                    num(fit.exponential_base),
                    num(fit.exponential_rss)
                ));
                table.trailer.push(format!(
                    "algebraic fit: rel_error ~ C * k^(-{}), residual {}",
                    num(fit.algebraic_order),
                    num(fit.algebraic_rss)
                ));
                let better = if fit.exponential_preferred() { "exponential" } else { "algebraic" };
                table.trailer.push(format!("better fit: {better} ({} points above {FIT_FLOOR:e})", fit.points));
            }
            None => table.trailer.push(format!("fit: fewer than 3 errors above {FIT_FLOOR:e}")),
        }
    }
    Ok(table)
}

fn refine_study(cli: &Cli) -> Result<Table> {
    let mut table = Table::new(vec![
        "level",
        "triangles",
        "k",
        "rule",
        "value",
        "reference",
        "abs_error",
        "rel_error",
        "error_ratio",
        "error",
    ]);
    let (surface, mut mesh) = load_geometry(cli, &mut table)?;
    let mut settings = Settings::from_cli(cli, &mut table)?;
    let ks = parse_usize_list(cli.k.as_deref().unwrap_or("6"))?;
    let [k] = ks[..] else {
        bail!("refine-study takes a single degree, got --k with {} values", ks.len());
    };
    let integrand_name = cli.integrand.as_deref().unwrap_or("one");
    let refinements = cli.refinements.unwrap_or(3);
    table.meta("refinements", refinements);
    let config = settings.config(k);
    let mut previous: Option<f64> = None;
    for level in 0..=refinements {
        if level > 0 {
            mesh = mesh.refine(&surface)?;
        }
        let (f, builtin_reference) = integrand(integrand_name, &surface, &mesh)?;
        let reference = cli.reference.or(builtin_reference);
        if level == 0 {
            table.meta("integrand", integrand_name);
            table.meta("reference", opt(reference));
        }
        let result = integrate(&mesh, &surface, &f, &config).map(|r| r.with_reference(reference));
        let mut row = vec![level.to_string(), mesh.triangle_count().to_string(), k.to_string(), config.rule.to_string()];
        match result {
            Ok(r) => {
                table.warnings.extend(r.warnings.iter().map(|w| format!("level {level}: {w}")));
                let ratio = previous.zip(r.abs_error).map(|(p, e)| p / e);
                previous = r.abs_error;
                row.extend([num(r.value), opt(r.reference), opt(r.abs_error), opt(r.rel_error), opt(ratio), String::new()]);
            }
            Err(e) => {
                table.failures.push(format!("level {level}: {e}"));
                previous = None;
                row.extend([String::new(), opt(reference), String::new(), String::new(), String::new(), e.to_string()]);
            }
        }
        table.rows.push(row);
    }
    for note in std::mem::take(&mut settings.notes) {
        table.meta("note", note);
    }
    Ok(table)
}

fn lambda_sweep(cli: &Cli) -> Result<Table> {
    let mut table = Table::new(vec!["lambda", "tensor_gl", "squeeze_pullback", "duffy_pullback"]);
    if cli.surface.is_some() || cli.mesh.is_some() {
        table.warnings.push("lambda-sweep integrates over the square; --surface and --mesh are ignored".into());
    }
    let degree = cli.degree.unwrap_or(14);
    let axis = cli.axis.unwrap_or(1);
    if !(1..=2).contains(&axis) {
        bail!("--axis must be 1 or 2, got {axis}");
    }
    let lambdas = parse_lambdas(cli.lambda.as_deref().unwrap_or("1e-11..1e4"))?;
    table.meta("integrand", format!("sin(lambda * x{axis}) on [-1,1]^2, exact integral 0"));
    table.meta("rules", format!("tensor-gl:{degree}, pullback-squeeze:{degree}, pullback-duffy:{degree}"));
    for row in sine_sweep(degree, axis - 1, &lambdas)? {
        table.rows.push(vec![num(row.lambda), num(row.tensor_gl), num(row.squeeze), num(row.duffy)]);
    }
    Ok(table)
}

fn lebesgue(cli: &Cli) -> Result<Table> {
    const RESOLUTION_1D: usize = 4000;
    const RESOLUTION_2D: usize = 401;
    let mut table = Table::new(vec!["n", "lambda_1d", "estimate", "rel_deviation", "lambda_2d", "lambda_1d_squared"]);
    let ns = parse_usize_list(cli.k.as_deref().unwrap_or("4,8,16,32"))?;
    table.meta("sampling", format!("{RESOLUTION_1D} points in 1D, {RESOLUTION_2D} per axis in 2D"));
    table.meta("estimate", "(2/pi)(log(n+1) + euler_gamma + log(8/pi))");
    for n in ns {
        let one: f64 = lebesgue_constant(&ChebyshevGrid::new(1, n)?, RESOLUTION_1D)?;
        let two: f64 = lebesgue_constant(&ChebyshevGrid::new(2, n)?, RESOLUTION_2D)?;
        let estimate = lebesgue_estimate(n);
        table.rows.push(vec![
            n.to_string(),
            num(one),
            num(estimate),
            num((one - estimate).abs() / estimate),
            num(two),
            num(one * one),
        ]);
    }
    Ok(table)
}
