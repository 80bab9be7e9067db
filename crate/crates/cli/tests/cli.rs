use std::path::Path;
use std::process::{Command, Output};

use deformed_dicke::clebsch::{couple_chain, CoupledBasis};
use deformed_dicke::coproducts::DeformationTag;
use deformed_dicke::dicke::dicke_classical;
use deformed_dicke::export::StateExport;
use deformed_dicke::golden::golden_table;
use deformed_dicke::hilbert::{proportional, BasisState};
use deformed_dicke::reference::{acin_expected, schmidt_d_minus2};
use deformed_dicke::table::StateTable;

fn cli(args: &[&str]) -> Output {
    cli_env(args, None)
}

fn cli_env(args: &[&str], max_n: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_deformed-dicke"));
    cmd.args(args).env_remove("DEFORMED_DICKE_MAX_N");
    if let Some(v) = max_n {
        cmd.env("DEFORMED_DICKE_MAX_N", v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn coefficients(v: &serde_json::Value) -> Vec<f64> {
    v["coefficients"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn generate_first_table_row_as_json() {
    let text = stdout(&cli(&["generate", "h", "4", "--path", "D", "--m", "-4"]));
    let export = StateExport::from_json(&text).unwrap();
    assert_eq!(export.meta.state, "D-4");
    assert_eq!(export.amplitudes.len(), 16);
    let state = export.exact_state().unwrap().unwrap();
    let table = golden_table(4).unwrap();
    assert!(proportional(&state, table.get("D-4").unwrap()).unwrap().is_some());
}

#[test]
fn generate_is_deterministic_and_writes_files() {
    let args = ["generate", "h", "3", "--path", "M", "--m", "1", "--h", "0.7"];
    let a = stdout(&cli(&args));
    assert_eq!(a, stdout(&cli(&args)));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m1.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&cli(&with_out)), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn generate_classical_w_state() {
    let text = stdout(&cli(&["generate", "none", "3", "--k", "1", "--format", "csv"]));
    let table = StateTable::from_csv(&text).unwrap();
    let state = table.get("k=1").unwrap();
    assert!(proportional(state, &dicke_classical(3, 1).unwrap()).unwrap().is_some());
    assert_eq!(state.support_len(), 3);
}

#[test]
fn generate_q_deformed_pair() {
    let q: f64 = 0.5;
    let export = StateExport::from_json(&stdout(&cli(&["generate", "q", "2", "--k", "1", "--q", "0.5"]))).unwrap();
    let state = export.numeric_state().unwrap().unwrap();
    let norm = (q.sqrt() + 1.0 / q.sqrt()).sqrt();
    let amp = |s: &str| state.amplitude(&s.parse::<BasisState>().unwrap());
    assert!((amp("↓↑") - q.powf(0.25) / norm).abs() < 1e-14);
    assert!((amp("↑↓") - q.powf(-0.25) / norm).abs() < 1e-14);
    assert_eq!(export.meta.q, Some(0.5));
}

#[test]
fn tables_round_trip_against_the_coupling() {
    for (n, rows) in [(2, 4), (3, 8), (4, 16)] {
        let text = stdout(&cli(&["table", &n.to_string()]));
        let table = StateTable::from_csv(&text).unwrap();
        assert_eq!(table.rows().len(), rows);
        let CoupledBasis::Exact(states) = couple_chain(n, DeformationTag::HExact).unwrap() else { unreachable!() };
        let golden = golden_table(n).unwrap();
        for ((row, s), g) in table.rows().iter().zip(&states).zip(golden.rows()) {
            assert_eq!(row.name, g.name);
            assert!(proportional(&row.state, &s.state).unwrap().is_some(), "{}", row.name);
            assert!(proportional(&row.state, &g.state).unwrap().is_some(), "{}", row.name);
        }
    }
    assert_eq!(cli(&["table", "5"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = cli(&["verify", "identity"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("identity: 12 passed, 0 failed"));

    let mutated = cli(&["verify", "all", "--max-n", "2", "--flip-a-sign"]);
    assert_eq!(mutated.status.code(), Some(1));
    let text = String::from_utf8(mutated.stdout).unwrap();
    let failures: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failures.len(), 1, "{text}");
    assert!(failures[0].contains("golden coupled table N=2") && failures[0].contains("M0"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = cli(&["verify", "coproducts", "--max-n", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suite"], "coproducts");
}

#[test]
fn decompositions() {
    let v = json(&cli(&["decompose", "schmidt", "h:2:D-2", "--h", "1"]));
    for (x, y) in coefficients(&v).iter().zip(schmidt_d_minus2(1.0)) {
        assert!((x - y).abs() < 1e-10);
    }
    let v = json(&cli(&["decompose", "acin", "h:3:M1", "--h", "0.5"]));
    let (lambdas, phi) = acin_expected("M1", 0.5).unwrap();
    for (x, y) in coefficients(&v).iter().zip(lambdas) {
        assert!((x - y).abs() < 1e-8);
    }
    assert!((v["phi"].as_f64().unwrap() - phi).abs() < 1e-8);
    let v = json(&cli(&["decompose", "schmidt", "ket:uu"]));
    assert_eq!(coefficients(&v), [1.0, 0.0]);
    assert_eq!(cli(&["decompose", "acin", "h:2:M0", "--h", "1"]).status.code(), Some(2));
    assert_eq!(cli(&["decompose", "schmidt", "h:2:M0"]).status.code(), Some(2));
}

fn titles(svg: &str) -> Vec<f64> {
    svg.split("<title>").skip(1).map(|s| s[..s.find('<').unwrap()].parse().unwrap()).collect()
}

fn plot(selector: &str, extra: &[&str], dir: &Path) -> String {
    let path = dir.join("plot.svg");
    let mut args = vec!["plot", selector, "--out", path.to_str().unwrap()];
    args.extend(extra);
    stdout(&cli(&args));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn plots() {
    let dir = tempfile::tempdir().unwrap();
    let singlet = plot("none:2:M0", &[], dir.path());
    assert_eq!(singlet, plot("none:2:M0", &[], dir.path()));
    let rho = titles(&singlet);
    assert_eq!(rho.len(), 16);
    let diag: Vec<f64> = (0..4).map(|i| rho[5 * i]).collect();
    assert_eq!(diag, [0.0, 0.5, 0.5, 0.0]);
    assert_eq!(rho[4 + 2], -0.5);
    assert_eq!(rho[2 * 4 + 1], -0.5);

    let d31 = titles(&plot("h:3:D-1", &["--h", "1.5"], dir.path()));
    // Populations vanish exactly where the state has no amplitude.
    let golden = golden_table(3).unwrap();
    let d = golden.get("D-1").unwrap();
    for i in 0..8 {
        let basis = BasisState::from_dense_index(3, i);
        assert_eq!(d31[9 * i] != 0.0, !d.amplitude(&basis).is_zero(), "{basis}");
    }

    let d0 = titles(&plot("h:2:D0", &["--h", "0.9"], dir.path()));
    assert_eq!(d0, titles(&plot("none:2:k=1", &[], dir.path())));

    let path = dir.path().join("big.svg");
    assert_eq!(cli(&["plot", "h:5:D-5", "--out", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_and_range_errors_exit_with_two() {
    assert_eq!(cli(&["generate", "h", "4"]).status.code(), Some(2));
    assert_eq!(cli(&["generate", "x", "4", "--k", "1"]).status.code(), Some(2));
    assert_eq!(cli(&["generate", "h", "12", "--k", "0"]).status.code(), Some(2));
    assert_eq!(cli(&["generate", "q", "3", "--k", "1"]).status.code(), Some(2));
    assert_eq!(cli(&["generate", "h", "3", "--k", "1", "--q", "2"]).status.code(), Some(2));
    assert_eq!(cli(&["generate", "q", "3", "--k", "1", "--q", "-1"]).status.code(), Some(2));
    assert_eq!(cli(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn site_cap_comes_from_the_environment() {
    assert_eq!(cli_env(&["generate", "h", "3", "--k", "1"], Some("2")).status.code(), Some(2));
    assert_eq!(cli_env(&["generate", "h", "3", "--k", "1"], Some("nope")).status.code(), Some(2));
    assert!(cli_env(&["generate", "none", "12", "--k", "1"], Some("12")).status.success());
    // Raising the cap does not extend the closed-form coefficient table.
    let out = cli_env(&["generate", "h", "12", "--k", "0"], Some("12"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("C_6(N) is not known"));
}
