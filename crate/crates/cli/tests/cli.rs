use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use depolar::{IdealFile, SystemFile};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn depolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depolar")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = depolar(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn hilbert_of_structure_function_ideal() {
    let out = stdout(&["hilbert", &path("structure_function.ideal")]);
    assert_eq!(
        out.trim(),
        "x*y + x*z + y^2 + y*z + z*t - x*y^2 - 2*x*y*z - x*z*t - y^2*z - y*z*t + x*y^2*z + x*y*z*t"
    );
}

#[test]
fn flow_network_top_level() {
    assert_eq!(stdout(&["reliability", &path("flow_network.system"), "-j", "4"]), "0.64\n");
}

#[test]
fn all_levels_table() {
    let out = stdout(&["reliability", &path("ms_k_of_3.system")]);
    assert_eq!(out, "j R_j r_j\n0 1 0.11\n1 0.89 0.064\n2 0.826 0.43\n3 0.396 0.396\n");
}

#[test]
fn oracles_agree_with_algebra() {
    let exact = stdout(&["reliability", &path("structure_function.system"), "-j", "1", "--method", "exhaustive"]);
    assert_eq!(exact, "0.9606\n");
    let a = stdout(&["reliability", &path("ms_k_of_3.system"), "-j", "2", "--method", "monte-carlo", "--seed", "3"]);
    let b = stdout(&["reliability", &path("ms_k_of_3.system"), "-j", "2", "--method", "monte-carlo", "--seed", "3"]);
    assert_eq!(a, b);
    let mean: f64 = a.split_whitespace().next().unwrap().parse().unwrap();
    assert!((mean - 0.826).abs() < 0.01);
}

#[test]
fn bounds_ladder() {
    let out = stdout(&["bounds", &path("structure_function.system"), "-j", "1"]);
    assert_eq!(out, "exact 0.9606\n0 3.22 upper holds\n1 0.147 lower holds\n2 0.9606 upper holds\n");
    let cut = stdout(&["bounds", &path("structure_function.system"), "-j", "1", "--depth", "0"]);
    assert_eq!(cut.lines().count(), 2);
}

#[test]
fn depolarize_along_partition() {
    let out = stdout(&[
        "depolarize",
        &path("ten_variables.ideal"),
        "--partition",
        "x4,x2,x1,x3; x6,x5; x7,x8,x9; x10",
    ]);
    assert_eq!(out, "vars: y1 y2 y3 y4\ny1^4\ny1^3*y2^2\ny1*y2*y3\ny3^3\ny3^2*y4\n");
}

#[test]
fn enumerate_maximal_is_zero_dimensional() {
    let out = stdout(&["enumerate", &path("not_quasi_stable.ideal"), "--maximal"]);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    for v in &lines {
        assert_eq!(v["num_vars"], 3);
        assert_eq!(v["maximal"], true);
    }
    assert!(lines.iter().any(|v| {
        let gens: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
        gens.contains(&"y1^4") && gens.contains(&"y2^3") && gens.contains(&"y3^2")
    }));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "ten_variables.ideal"],
        vec!["support-poset", "ten_variables.ideal"],
        vec!["betti", "structure_function.ideal", "--format", "multigraded"],
    ] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        args[1] = path(&args[1]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn support_poset_dot() {
    let out = stdout(&["support-poset", &path("ten_variables.ideal")]);
    assert!(out.starts_with("digraph"));
    let text = stdout(&["support-poset", &path("ten_variables.ideal"), "--format", "text", "--order", "x2 x1"]);
    assert!(text.contains("width 4\nminimum path partition 4\n"));
}

#[test]
fn quasi_stable_and_betti() {
    assert_eq!(stdout(&["quasi-stable", &path("not_quasi_stable.ideal")]), "false\n");
    assert_eq!(stdout(&["betti", &path("structure_function.ideal")]), "0 2 5\n1 3 6\n2 4 2\n");
    let sys = stdout(&["betti", &path("structure_function.system"), "-j", "1"]);
    assert_eq!(sys, "0 2 5\n1 3 6\n2 4 2\n");
}

#[test]
fn polarize_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("p.ideal");
    stdout(&["polarize", &path("structure_function.ideal"), "-o", target.to_str().unwrap()]);
    let file = IdealFile::parse(&fs::read_to_string(&target).unwrap()).unwrap();
    assert!(file.ideal.is_squarefree());
    assert_eq!(file.names, ["x_1", "y_1", "y_2", "z_1", "t_1"]);
}

#[test]
fn bench_csv() {
    let out = stdout(&["bench", "--n", "10", "20", "--k", "3", "6"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,k,gens,time_original_ms,time_depolarized_ms,equal"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.len() == 6 && r[5] == "true"));
    assert_eq!(depolar(&["bench", "--n", "4", "--k", "5"]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(depolar(&[]).status.code(), Some(2));
    assert_eq!(depolar(&["hilbert"]).status.code(), Some(2));
    assert_eq!(depolar(&["reliability", "--method", "guess", "x"]).status.code(), Some(2));

    let missing = depolar(&["hilbert", "/nonexistent/file"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot read"));

    let bad = depolar(&["depolarize", &path("ten_variables.ideal"), "-p", "x4,x7;x1;x2;x3;x5;x6;x8;x9;x10"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("path partition"));
}

#[test]
fn malformed_input_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.ideal");
    fs::write(&f, "vars: x y\nx*y\nx*w\n").unwrap();
    let out = depolar(&["hilbert", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn fixtures_round_trip() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut seen = 0;
    for entry in fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let text = fs::read_to_string(&p).unwrap();
        match p.extension().and_then(|e| e.to_str()) {
            Some("ideal") => {
                let a = IdealFile::parse(&text).unwrap();
                assert_eq!(IdealFile::parse(&a.to_text()).unwrap(), a, "{}", p.display());
            }
            Some("system") => {
                let a = SystemFile::parse(&text).unwrap();
                assert_eq!(SystemFile::parse(&a.to_text()).unwrap(), a, "{}", p.display());
            }
            _ => continue,
        }
        seen += 1;
    }
    assert!(seen >= 6);
}

#[test]
fn chain_partitions_reach_more_depolarizations() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("i.ideal");
    fs::write(&f, "vars: x1 x2 x3 x4 x5\nx1*x3*x4\nx2*x3*x4*x5\n").unwrap();
    let f = f.to_str().unwrap();
    assert_eq!(depolar(&["depolarize", f, "-p", "x3,x2,x5;x4,x1"]).status.code(), Some(1));
    let out = stdout(&["depolarize", f, "-p", "x3,x2,x5;x4,x1", "--chains"]);
    assert_eq!(out, "vars: y1 y2\ny1^3*y2\ny1*y2^2\n");
}
