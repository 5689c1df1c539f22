use std::collections::HashMap;
use std::path::Path;
use std::process::{Command, Output};

use hosq::geometry::{builtin_surface, octasphere, staggered_torus, write_off};
use hosq::integrator::{surface_area, HosqConfig};

fn hosq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hosq")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "hosq failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Csv {
    meta: Vec<String>,
    header: Vec<String>,
    rows: Vec<HashMap<String, String>>,
}

fn parse(text: &str) -> Csv {
    let meta = text.lines().filter(|l| l.starts_with('#')).map(String::from).collect();
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| header.iter().cloned().zip(r.unwrap().iter().map(String::from)).collect())
        .collect();
    Csv { meta, header, rows }
}

fn column(csv: &Csv, name: &str) -> Vec<f64> {
    csv.rows.iter().map(|r| r[name].parse().unwrap()).collect()
}

#[test]
fn sphere_area_sweep_reaches_rounding_level() {
    let out = hosq(&["area", "--surface", "sphere", "--mesh", "icosphere:3", "--k", "2..14", "--rule", "pullback-squeeze"]);
    let csv = parse(&stdout(&out));
    for col in ["k", "value", "rel_error"] {
        assert!(csv.header.iter().any(|h| h == col));
    }
    assert_eq!(column(&csv, "k"), (2..=14).map(|k| k as f64).collect::<Vec<_>>());
    let last = *column(&csv, "rel_error").last().unwrap();
    assert!(last < 1e-13, "final rel_error {last:e}");
    assert!(csv.meta.iter().any(|m| m.contains("1280 triangles")));
    assert!(csv.meta.iter().any(|m| m.starts_with("# hosq: ")));
}

#[test]
fn lambda_sweep_columns_and_collapse_direction() {
    let csv = parse(&stdout(&hosq(&["lambda-sweep", "--degree", "14", "--lambda", "1e-11..1e4"])));
    assert_eq!(csv.header, ["lambda", "tensor_gl", "squeeze_pullback", "duffy_pullback"]);
    assert_eq!(csv.rows.len(), 61);
    // linear in λ below 1
    let lambda = column(&csv, "lambda");
    let squeeze = column(&csv, "squeeze_pullback");
    for i in 0..40 {
        let scaled = squeeze[i] / lambda[i];
        assert!((scaled / (squeeze[0] / lambda[0]) - 1.0).abs() < 1e-3);
    }

    let csv = parse(&stdout(&hosq(&["lambda-sweep", "--degree", "14", "--lambda", "1e-11..1e4", "--axis", "2"])));
    let (lambda, squeeze, duffy) =
        (column(&csv, "lambda"), column(&csv, "squeeze_pullback"), column(&csv, "duffy_pullback"));
    let small: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] <= 1.0).collect();
    let better = small.iter().filter(|&&i| squeeze[i] <= duffy[i]).count();
    assert!(better * 10 >= small.len() * 9, "{better} of {}", small.len());
}

#[test]
fn gauss_bonnet_on_a_mesh_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torus.off");
    write_off(&staggered_torus::<f64>(13, 10, 1.0, 2.0).unwrap(), &path).unwrap();
    let spec = format!("file:{}", path.display());
    let csv = parse(&stdout(&hosq(&["gauss-bonnet", "--surface", "torus:r=1,R=2", "--mesh", &spec, "--k", "1..20"])));
    assert_eq!(csv.rows.len(), 20);
    assert!(column(&csv, "reference").iter().all(|&r| r == 0.0));
    let last = *column(&csv, "abs_error").last().unwrap();
    assert!(last < 1e-9, "{last:e}");
    assert!(csv.meta.iter().any(|m| m.contains("euler characteristic 0")));
}

#[test]
fn numbers_round_trip_exactly() {
    let csv = parse(&stdout(&hosq(&["area", "--surface", "sphere", "--mesh", "octasphere:1", "--k", "3,5"])));
    let surface = builtin_surface::<f64>("sphere", &[]).unwrap();
    let mesh = octasphere::<f64>(1).project_to(&surface).unwrap();
    for (row, k) in csv.rows.iter().zip([3, 5]) {
        let report = surface_area(&mesh, &surface, &HosqConfig::new(k)).unwrap();
        let parsed: f64 = row["value"].parse().unwrap();
        assert_eq!(parsed.to_bits(), report.value.to_bits());
        let rel: f64 = row["rel_error"].parse().unwrap();
        assert_eq!(rel.to_bits(), report.rel_error.unwrap().to_bits());
    }
}

fn body(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap().lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n")
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (dir.path().join("a.csv"), dir.path().join("b.csv"), dir.path().join("c.csv"));
    let args = ["convergence", "--surface", "torus", "--mesh", "distorted-torus:20,10", "--k", "2..8:2"];
    for (path, stamp) in [(&a, false), (&b, false), (&c, true)] {
        let mut all: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap();
        all.extend(["--out", p]);
        if stamp {
            all.push("--stamp");
        }
        let out = hosq(&all);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(body(&a), body(&c));
    assert!(std::fs::read_to_string(&c).unwrap().contains("# timestamp: "));
    assert!(!std::fs::read_to_string(&a).unwrap().contains("timestamp"));
    assert!(std::fs::read_to_string(&a).unwrap().contains("# better fit: "));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.conf");
    std::fs::write(&config, "# sphere of radius 2\nexperiment = area\nsurface = sphere:radius=2\nmesh = octasphere:1  # small\nk = 3..5\n")
        .unwrap();
    let cfg = config.to_str().unwrap();
    let csv = parse(&stdout(&hosq(&["--config", cfg])));
    assert_eq!(column(&csv, "k"), [3.0, 4.0, 5.0]);
    assert_eq!(csv.rows[0]["reference"].parse::<f64>().unwrap(), 16.0 * std::f64::consts::PI);

    let csv = parse(&stdout(&hosq(&["--config", cfg, "--k", "6", "--surface", "sphere"])));
    assert_eq!(column(&csv, "k"), [6.0]);
    assert_eq!(csv.rows[0]["reference"].parse::<f64>().unwrap(), 4.0 * std::f64::consts::PI);

    let csv = parse(&stdout(&hosq(&["gauss-bonnet", "--config", cfg, "--k", "4"])));
    assert!(csv.meta.iter().any(|m| m == "# experiment: gauss-bonnet"));

    std::fs::write(&config, "colour = blue\n").unwrap();
    let out = hosq(&["area", "--config", cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown key `colour`"));
}

#[test]
fn usage_and_io_errors_are_reported() {
    let out = hosq(&["area", "--surface", "klein-bottle"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown surface"));

    let out = hosq(&["area", "--mesh", "file:/definitely/not/here.off"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not/here.off"));

    let out = hosq(&["area", "--config", "/definitely/not/here.conf"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hosq(&["sweep-everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_rows_are_kept_and_set_the_exit_code() {
    let out = hosq(&["area", "--mesh", "octasphere:1", "--k", "0,3"]);
    assert_eq!(out.status.code(), Some(1));
    let csv = parse(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(csv.rows.len(), 2);
    assert!(!csv.rows[0]["error"].is_empty() && csv.rows[0]["value"].is_empty());
    assert!(csv.rows[1]["error"].is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("k = 0"));
}

#[test]
fn substituted_rules_are_noted() {
    let csv = parse(&stdout(&hosq(&["area", "--mesh", "octasphere:1", "--k", "24"])));
    assert_eq!(csv.rows[0]["rule"], "tensor-gl:13");
    assert!(csv.meta.iter().any(|m| m.starts_with("# note: pullback-squeeze:24")));
}

#[test]
fn lebesgue_constants_are_bounded_by_the_square_of_the_1d_constant() {
    let csv = parse(&stdout(&hosq(&["lebesgue", "--k", "4,8,16"])));
    for row in &csv.rows {
        let (two, square): (f64, f64) = (row["lambda_2d"].parse().unwrap(), row["lambda_1d_squared"].parse().unwrap());
        assert!(two <= square * (1.0 + 1e-12));
    }
    let dev = column(&csv, "rel_deviation");
    assert!(dev[1] < 0.05 && dev[2] < 0.05);
}
