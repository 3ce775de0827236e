use std::process::{Command, Output};

fn gpetersen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpetersen"))
        .args(args)
        .env_remove("GP_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("UTF-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn spectrum_with_oracle_on_petersen() {
    let out = gpetersen(&["spectrum", "--n", "5", "--k", "2", "--oracle"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("index,closed_form,oracle\n0,3,3\n"));
    let deviation: f64 = text
        .lines()
        .last()
        .and_then(|l| l.strip_prefix("# max_deviation "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(deviation < 1e-6);

    let out = gpetersen(&["spectrum", "--n", "5", "--k", "2", "--oracle", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["max_deviation"].as_f64().unwrap() < 1e-6);
    assert_eq!(json["oracle"]["source"], "oracle");
}

#[test]
fn spectrum_rejects_degenerate_params() {
    let out = gpetersen(&["spectrum", "--n", "4", "--k", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate: 2k = n"));
    assert_eq!(code(&gpetersen(&["spectrum", "--n", "5", "--k", "2", "--format", "dot"])), 2);
}

#[test]
fn spectrum_json_has_2n_values() {
    let out = gpetersen(&["spectrum", "--n", "10", "--k", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["values"].as_array().unwrap().len(), 20);
    assert_eq!((json["n"].as_u64(), json["k"].as_u64()), (Some(10), Some(3)));
    assert_eq!(json["source"], "closed_form");
}

#[test]
fn spectrum_csv_layout() {
    let text = stdout(&gpetersen(&["spectrum", "--n", "4", "--k", "1"]));
    assert_eq!(text, "index,value\n0,3\n1,1\n2,1\n3,1\n4,-1\n5,-1\n6,-1\n7,-3\n");
}

#[test]
fn gap_rows_and_bounds() {
    let out = gpetersen(&["gap", "--n", "100", "--k", "fixed:43"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,gap,bound,ok"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[..2], ["100", "43"]);
    assert!((row[3].parse::<f64>().unwrap() - 1.396263).abs() < 1e-6);
    assert_eq!(row[4], "true");
    assert_eq!(lines.next(), None);
}

#[test]
fn gap_sweep_with_all_k() {
    let out = gpetersen(&["gap", "--n", "4..300", "--k", "all"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let expected_rows: usize = (4..=300usize).map(|n| (n - 1) / 2).sum();
    assert_eq!(text.lines().count(), expected_rows + 1);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn gap_sample_policy_is_strided() {
    let text = stdout(&gpetersen(&["gap", "--n", "1001", "--k", "sample:3"]));
    let ks: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(ks, ["1", "250", "500"]);
}

#[test]
fn gap_rejects_bad_input() {
    assert_eq!(code(&gpetersen(&["gap", "--n", "3..3"])), 2);
    assert_eq!(code(&gpetersen(&["gap", "--n", "10..5"])), 2);
    assert_eq!(code(&gpetersen(&["gap", "--n", "4..2000001"])), 2);
    assert_eq!(code(&gpetersen(&["gap", "--n", "10", "--k", "fixed:5"])), 2);
    assert_eq!(code(&gpetersen(&["gap", "--n", "10", "--k", "some"])), 2);
}

fn cluster_row(args: &[&str]) -> (i32, Vec<String>) {
    let out = gpetersen(args);
    let text = stdout(&out);
    let row = text
        .lines()
        .nth(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .unwrap_or_default();
    (code(&out), row)
}

#[test]
fn cluster_examples() {
    let (status, row) = cluster_row(&["cluster", "--n", "100", "--k", "1", "--eps", "2"]);
    assert_eq!(status, 0);
    assert_eq!((row[3].as_str(), row[4].as_str()), ("7", "2"));
    assert!(row[5].parse::<u64>().unwrap() >= 2);
    assert!(row[6].starts_with("1 2 "));

    let (status, row) = cluster_row(&["cluster", "--n", "1000", "--k", "7", "--eps", "1"]);
    assert_eq!(status, 0);
    assert_eq!((row[3].as_str(), row[4].as_str()), ("13", "5"));
    assert!(row[5].parse::<u64>().unwrap() >= 5);

    let (status, _) = cluster_row(&["cluster", "--n", "49", "--k", "2", "--eps", "2"]);
    assert_eq!(status, 2);
    let (status, _) = cluster_row(&["cluster", "--n", "100", "--k", "2", "--eps", "-1"]);
    assert_eq!(status, 2);
}

#[test]
fn census_examples() {
    let out = gpetersen(&["census", "--N", "10000"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(text.lines().next(), Some("N,a_lower,b_count,ratio"));
    assert_eq!(rows.len(), 10);
    assert!(rows.last().unwrap()[3] < rows[0][3]);

    let text = stdout(&gpetersen(&["census", "--N", "10"]));
    assert_eq!(text, "N,a_lower,b_count,ratio\n10,11,9,0.818182\n");

    assert_eq!(code(&gpetersen(&["census", "--N", "4"])), 2);

    let json: serde_json::Value =
        serde_json::from_slice(&gpetersen(&["census", "--N", "75", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["records"].as_array().unwrap().len(), 4);
    assert!(json["excluded"].as_str().unwrap().contains("2k = n"));
}

#[test]
fn expansion_examples() {
    let out = gpetersen(&["expansion", "--n", "5", "--k", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["h"].as_f64(), Some(1.0));
    assert_eq!(json["lower"].as_f64(), Some(1.0));
    assert!((json["upper"].as_f64().unwrap() - 3.4641).abs() < 1e-4);
    assert_eq!(json["sandwich_ok"], true);
    assert_eq!(json["witness_set"].as_array().unwrap().len(), 5);

    let text = stdout(&gpetersen(&["expansion", "--n", "5", "--k", "2"]));
    assert!(text.lines().nth(1).unwrap().ends_with(",ok,ok"));

    let out = gpetersen(&["expansion", "--n", "40", "--k", "9", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["h"].is_null() && json["witness_set"].is_null());
    assert!(json["corollary_bound"].as_f64().is_some());

    let text = stdout(&gpetersen(&["expansion", "--n", "40", "--k", "9"]));
    assert!(text.contains("not computed"));
}

#[test]
fn dirichlet_examples() {
    let text = stdout(&gpetersen(&["dirichlet", "--a", "0.41421356", "--q", "3"]));
    assert_eq!(text, "t,x,q,t0\n2,1,3,1\n");
    let text = stdout(&gpetersen(&["dirichlet", "--a", "0", "--q", "5", "--t0", "7", "--m", "3"]));
    assert_eq!(text, "t,x,q,t0\n7,0,5,7\n8,0,5,7\n9,0,5,7\n");
    let text = stdout(&gpetersen(&["dirichlet", "--a", "-0.25", "--a", "0.5", "--q", "2", "--t0", "3"]));
    assert_eq!(text, "t,x,q,t0\n3,-1 1,2,3\n");
    assert_eq!(code(&gpetersen(&["dirichlet", "--a", "0.3", "--q", "0"])), 2);
    let many = vec!["0.3"; 60].join(",");
    assert_eq!(code(&gpetersen(&["dirichlet", "--a", &many, "--q", "3"])), 2);
}

#[test]
fn export_dot_output() {
    let out = gpetersen(&["export-dot", "--n", "10", "--k", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("graph G {\n  a0 -- a1\n"));
    assert!(text.ends_with("}\n"));
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 30);
    assert!(text.contains("\n  b7 -- b0\n"));
    assert_eq!(code(&gpetersen(&["export-dot", "--n", "2", "--k", "1"])), 2);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["gap", "--n", "50..120", "--k", "sample:4"];
    let baseline = gpetersen(&args).stdout;
    for threads in ["1", "3", "0"] {
        let out = Command::new(env!("CARGO_BIN_EXE_gpetersen"))
            .args(args)
            .env("GP_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.stdout, baseline, "GP_THREADS={threads}");
    }
    let again = gpetersen(&["census", "--N", "500"]).stdout;
    assert_eq!(again, gpetersen(&["census", "--N", "500"]).stdout);
}

#[test]
fn invalid_thread_setting_and_unknown_command() {
    let out = Command::new(env!("CARGO_BIN_EXE_gpetersen"))
        .args(["census", "--N", "10"])
        .env("GP_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert_eq!(code(&gpetersen(&["bogus"])), 2);
    assert_eq!(code(&gpetersen(&["spectrum", "--n", "5"])), 2);
}
