//! Command-line flags and the `key = value` config file.

use std::ffi::OsString;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "hosq",
    version,
    about = "High-order surface quadrature experiments, written as CSV",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub experiment: Experiment,

    /// Built-in surface, `name[:key=value,...]`, e.g. `torus:r=1,R=2`.
    #[arg(long, global = true)]
    pub surface: Option<String>,

    /// `reference`, `file:path.off` or a generator such as `icosphere:3`,
    /// `geodesic:5`, `staggered-torus:13,10`, `distorted-torus:44,14,0.3,11`, `marching:0.1,2`.
    #[arg(long, global = true)]
    pub mesh: Option<String>,

    /// Degrees: `a..b[:step]`, a comma list or a single value.
    #[arg(long, global = true)]
    pub k: Option<String>,

    /// Integrand interpolation degree: a number, or `k` to follow the geometry degree.
    /// Without it the integrand is sampled directly.
    #[arg(long, global = true)]
    pub n: Option<String>,

    /// `pullback-squeeze`, `pullback-duffy` or `tensor-gl`, optionally `:degree` to fix
    /// the degree instead of following k.
    #[arg(long, global = true)]
    pub rule: Option<String>,

    /// `squeeze` or `duffy`; defaults to the transform of the rule.
    #[arg(long, global = true)]
    pub transform: Option<String>,

    /// `pairwise` or `kahan`.
    #[arg(long, global = true)]
    pub summation: Option<String>,

    /// Integrand for `integrate`, `convergence` and `refine-study`: `one`, `y54`,
    /// `gauss-curvature`, `mean-curvature`, `exp-x`.
    #[arg(long, global = true)]
    pub integrand: Option<String>,

    /// Exact value to compare against, overriding any built-in reference.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub reference: Option<f64>,

    /// Number of 4-to-1 refinements for `refine-study`.
    #[arg(long, global = true)]
    pub refinements: Option<usize>,

    /// Rule degree for `lambda-sweep`.
    #[arg(long, global = true)]
    pub degree: Option<usize>,

    /// λ values for `lambda-sweep`: `a..b[:points_per_decade]` (logarithmic) or a comma list.
    #[arg(long, global = true)]
    pub lambda: Option<String>,

    /// Oscillation axis for `lambda-sweep`, 1 (`sin(λx₁)`) or 2 (`sin(λx₂)`).
    #[arg(long, global = true)]
    pub axis: Option<usize>,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// File of `key = value` lines supplying defaults for the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Record a timestamp in the metadata.
    #[arg(long, global = true)]
    pub stamp: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    /// Surface area over a degree sweep.
    Area,
    /// Integral of a built-in integrand over a degree sweep.
    Integrate,
    /// Integral of the Gauss curvature against 2πχ.
    GaussBonnet,
    /// Degree sweep with exponential and algebraic rate fits.
    Convergence,
    /// Fixed degree on successively refined meshes.
    RefineStudy,
    /// Errors of three square rules on sin(λx).
    LambdaSweep,
    /// Lebesgue constants of Chebyshev–Lobatto grids.
    Lebesgue,
}

const EXPERIMENTS: [&str; 7] = ["area", "integrate", "gauss-bonnet", "convergence", "refine-study", "lambda-sweep", "lebesgue"];

const CONFIG_KEYS: [&str; 16] = [
    "experiment",
    "surface",
    "mesh",
    "k",
    "n",
    "rule",
    "transform",
    "summation",
    "integrand",
    "reference",
    "refinements",
    "degree",
    "lambda",
    "axis",
    "out",
    "stamp",
];

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`, got `{}`", i + 1, raw.trim());
        };
        let (key, value) = (key.trim().replace('_', "-"), value.trim().to_string());
        if !CONFIG_KEYS.contains(&key.as_str()) {
            bail!("config line {}: unknown key `{key}`", i + 1);
        }
        entries.push((key, value));
    }
    Ok(entries)
}

fn config_path(argv: &[OsString]) -> Option<PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Parses the command line, with defaults from `--config` placed before the user's flags
/// so that the flags win.
pub fn parse_args(argv: Vec<OsString>) -> Result<Cli> {
    let Some(path) = config_path(&argv) else {
        return Ok(Cli::try_parse_from(argv)?);
    };
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading config {}", path.display()))?;
    let mut merged: Vec<OsString> = vec![argv[0].clone()];
    let mut experiment = None;
    for (key, value) in parse_config(&text).with_context(|| format!("in {}", path.display()))? {
        match key.as_str() {
            "experiment" => experiment = Some(value),
            "stamp" => {
                if matches!(value.as_str(), "true" | "yes" | "1") {
                    merged.push("--stamp".into());
                }
            }
            _ => {
                merged.push(format!("--{key}").into());
                merged.push(value.into());
            }
        }
    }
    let has_subcommand = argv.iter().skip(1).any(|a| EXPERIMENTS.contains(&a.to_string_lossy().as_ref()));
    merged.extend(argv.into_iter().skip(1));
    if !has_subcommand {
        if let Some(e) = experiment {
            merged.push(e.into());
        }
    }
    Ok(Cli::try_parse_from(merged)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines() {
        let entries = parse_config("# comment\n\nk = 2..14  # sweep\nmesh=file:a.off\nintegrand_degree = 3\n");
        assert!(entries.unwrap_err().to_string().contains("line 5"));
        let entries = parse_config("k = 2..14  # sweep\nmesh=file:a.off\n").unwrap();
        assert_eq!(entries, [("k".into(), "2..14".into()), ("mesh".into(), "file:a.off".into())]);
        assert!(parse_config("surface sphere").is_err());
    }

    #[test]
    fn later_flags_win() {
        let cli = Cli::try_parse_from(["hosq", "--k", "3", "area", "--k", "5"]).unwrap();
        assert_eq!(cli.k.as_deref(), Some("5"));
        assert_eq!(cli.experiment, Experiment::Area);
    }
}
