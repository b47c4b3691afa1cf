//! End-to-end tests of the `oddbic` binary: exit codes, output contracts,
//! determinism under `--workers`, and file round-trips for `gen`.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use oddbic::family::{classify, FamilyTag};
use oddbic::graph::Graph;
use oddbic::graphs;
use oddbic::recipe::EarPendantRecipe;

fn oddbic(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_oddbic"));
    cmd.args(args);
    cmd
}

fn run(cmd: &mut Command, stdin: Option<&str>) -> (i32, String, String) {
    let output: Output = match stdin {
        Some(text) => {
            let mut child = cmd
                .stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .stderr(Stdio::piped())
                .spawn()
                .expect("spawn oddbic");
            child
                .stdin
                .take()
                .expect("piped stdin")
                .write_all(text.as_bytes())
                .expect("write stdin");
            child.wait_with_output().expect("wait for oddbic")
        }
        None => cmd.output().expect("run oddbic"),
    };
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

fn write_el(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, g.to_edge_list()).expect("write edge list");
    path.to_str().expect("utf-8 path").to_owned()
}

#[test]
fn analyze_classifies_even_linked_graph() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_el(dir.path(), "theta7.el", &graphs::theta7());
    let (code, out, _) = run(&mut oddbic(&["analyze", &path]), None);
    assert_eq!(code, 0, "stdout:\n{out}");
    assert!(out.contains("family: even-linked"));
    assert!(out.contains("alpha: 3"));
    assert!(out.contains("core: {3}"));
    assert!(out.contains("unexpected mismatches: none"));
}

#[test]
fn analyze_reads_stdin_and_reports_known_divergence() {
    let (code, out, _) = run(
        &mut oddbic(&["analyze"]),
        Some(&graphs::dumbbell().to_edge_list()),
    );
    assert_eq!(code, 0, "stdout:\n{out}");
    assert!(out.contains("family: odd-linked"));
    assert!(out.contains("diverges (known) identity-trichotomy-as-written"));
    assert!(out.contains("unexpected mismatches: none"));
}

#[test]
fn analyze_out_of_scope_exits_zero_with_tag() {
    let (code, out, _) = run(
        &mut oddbic(&["analyze"]),
        Some(&graphs::cycle(4).to_edge_list()),
    );
    assert_eq!(code, 0, "stdout:\n{out}");
    assert!(out.contains("family: out-of-scope"));
    assert!(out.contains("no odd cycle"));
    assert!(out.contains("alpha: 2 (oracle)"));
}

#[test]
fn analyze_graph6_json_has_both_routes() {
    let g6 = graphs::theta7().to_graph6();
    let (code, out, _) = run(
        &mut oddbic(&["analyze", "--format", "g6", "--json"]),
        Some(&g6),
    );
    assert_eq!(code, 0, "stdout:\n{out}");
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(v["closed_form"]["family"], "EvenLinked");
    assert_eq!(v["closed_form"]["alpha"], 3);
    assert_eq!(v["mu_oracle"], 3);
    assert_eq!(v["independence_oracle"]["alpha"], 3);
    assert_eq!(v["independence_poly"]["alpha"], 3);
    assert_eq!(v["checks"].as_array().expect("checks array").len(), 8);
    assert_eq!(v["closed_form"]["mismatches"].as_array().expect("mismatches").len(), 0);
}

#[test]
fn analyze_rejects_malformed_input() {
    let (code, _, err) = run(&mut oddbic(&["analyze"]), Some("not a graph\n"));
    assert_eq!(code, 2, "stderr:\n{err}");
    assert!(err.contains("error:"));
}

#[test]
fn analyze_oracle_limit_env_downgrades_or_fails_strict() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_el(dir.path(), "theta7.el", &graphs::theta7());

    let mut relaxed = oddbic(&["analyze", &path]);
    relaxed.env("ODDBIC_ORACLE_LIMIT", "4");
    let (code, out, err) = run(&mut relaxed, None);
    assert_eq!(code, 0, "stderr:\n{err}");
    assert!(out.contains("oracle: skipped"));
    assert!(out.contains("polynomial route: alpha 3"));
    assert!(err.contains("exceeds the independence oracle limit"));

    let mut strict = oddbic(&["analyze", "--strict", &path]);
    strict.env("ODDBIC_ORACLE_LIMIT", "4");
    let (code, _, err) = run(&mut strict, None);
    assert_eq!(code, 2);
    assert!(err.contains("--strict"));
}

#[test]
fn verify_reports_per_family_lines_and_exits_zero() {
    let (code, out, _) = run(
        &mut oddbic(&["verify", "--count", "5", "--max-n", "14", "--seed", "3"]),
        None,
    );
    assert_eq!(code, 0, "stdout:\n{out}");
    for family in [
        "one-odd-cycle",
        "fused-odd",
        "even-linked",
        "odd-linked",
        "disconnected-pair",
    ] {
        assert!(out.contains(family), "missing {family} in:\n{out}");
    }
    assert!(out.contains("total: 25 instances checked, 0 unexpected mismatches"));
    // Odd-linked instances always trip the known summary-identity divergence.
    let odd_line = out.lines().find(|l| l.starts_with("odd-linked")).expect("odd-linked line");
    assert!(odd_line.contains("expected-divergent    5"), "line: {odd_line}");
}

#[test]
fn verify_workers_never_change_stdout() {
    let args = ["verify", "--count", "4", "--max-n", "13", "--seed", "11", "--json"];
    let (c1, out1, _) = run(oddbic(&args).arg("--workers").arg("1"), None);
    let (c4, out4, _) = run(oddbic(&args).arg("--workers").arg("4"), None);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(out1, out4, "stdout must not depend on the worker count");
    let v: serde_json::Value = serde_json::from_str(&out1).expect("valid JSON");
    assert_eq!(v["total_checked"], 20);
    assert_eq!(v["total_unexpected"], 0);
}

#[test]
fn verify_validates_configuration() {
    let (code, _, err) = run(&mut oddbic(&["verify", "--count", "0"]), None);
    assert_eq!(code, 2, "stderr:\n{err}");

    let (code, _, err) = run(
        &mut oddbic(&["verify", "--families", "fused-odd", "--max-n", "4"]),
        None,
    );
    assert_eq!(code, 2);
    assert!(err.contains("minimum order 5"));

    let (code, _, err) = run(&mut oddbic(&["verify", "--families", "bogus"]), None);
    assert_eq!(code, 2);
    assert!(err.contains("unknown family"));
}

#[test]
fn verify_accepts_pascal_case_family_names() {
    let (code, out, _) = run(
        &mut oddbic(&["verify", "--families", "OneOddCycle,EvenLinked", "--count", "2", "--max-n", "10"]),
        None,
    );
    assert_eq!(code, 0, "stdout:\n{out}");
    assert!(out.contains("total: 4 instances checked"));
}

#[test]
fn gen_files_replay_and_classify_back() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out_dir = dir.path().to_str().expect("utf-8 path");
    let (code, out, err) = run(
        &mut oddbic(&[
            "gen", "even-linked", "--max-n", "14", "--count", "2", "--seed", "5", "--out-dir",
            out_dir,
        ]),
        None,
    );
    assert_eq!(code, 0, "stderr:\n{err}");
    assert_eq!(out.lines().count(), 4, "two files per instance:\n{out}");

    for i in 0..2 {
        let el = std::fs::read_to_string(dir.path().join(format!("even-linked-{i:03}.el")))
            .expect("edge list written");
        let g = Graph::parse_edge_list(&el).expect("generated edge list parses");
        assert_eq!(classify(&g, false).expect("classify").tag, FamilyTag::EvenLinked);

        let sidecar =
            std::fs::read_to_string(dir.path().join(format!("even-linked-{i:03}.recipe.json")))
                .expect("sidecar written");
        let recipe: EarPendantRecipe = serde_json::from_str(&sidecar).expect("recipe JSON");
        assert_eq!(recipe.build().expect("recipe replays"), g, "sidecar must rebuild the graph");
    }
}

#[test]
fn gen_disconnected_pair_sidecar_is_an_array() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out_dir = dir.path().to_str().expect("utf-8 path");
    let (code, _, err) = run(
        &mut oddbic(&["gen", "disconnected-pair", "--max-n", "10", "--out-dir", out_dir]),
        None,
    );
    assert_eq!(code, 0, "stderr:\n{err}");
    let sidecar = std::fs::read_to_string(dir.path().join("disconnected-pair-000.recipe.json"))
        .expect("sidecar written");
    let recipes: Vec<EarPendantRecipe> = serde_json::from_str(&sidecar).expect("recipe array");
    assert_eq!(recipes.len(), 2, "one recipe per component");
}

#[test]
fn gen_rejects_budget_below_family_minimum() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out_dir = dir.path().to_str().expect("utf-8 path");
    let (code, _, err) = run(
        &mut oddbic(&["gen", "even-linked", "--max-n", "6", "--out-dir", out_dir]),
        None,
    );
    assert_eq!(code, 2);
    assert!(err.contains("at least 7"), "stderr:\n{err}");
}

#[test]
fn enumerate_filters_counts_and_parse_errors() {
    let stream = format!(
        "{}\n{}\nnot-graph6!!\n{}\n",
        graphs::cycle(3).to_graph6(),
        graphs::cycle(4).to_graph6(),
        graphs::theta7().to_graph6(),
    );
    let (code, out, err) = run(&mut oddbic(&["enumerate"]), Some(&stream));
    assert_eq!(code, 0, "stdout:\n{out}\nstderr:\n{err}");
    assert!(out.contains("parsed 3 graphs (1 parse errors"));
    assert!(out.contains("checked 2 in-scope graphs"));
    assert!(out.contains("filtered (not 2-bicritical): 1"));
    assert!(out.contains("unexpected mismatches: none"));
    assert!(err.contains("line 3"));
}

#[test]
fn enumerate_empty_stream_is_a_usage_error() {
    let (code, _, err) = run(&mut oddbic(&["enumerate"]), Some("\n\n"));
    assert_eq!(code, 2);
    assert!(err.contains("no graphs parsed"));
}

#[test]
fn enumerate_json_reports_skips_over_max_n() {
    let stream = format!("{}\n{}\n", graphs::cycle(3).to_graph6(), graphs::theta7().to_graph6());
    let (code, out, _) = run(&mut oddbic(&["enumerate", "--json", "--max-n", "5"]), Some(&stream));
    assert_eq!(code, 0, "stdout:\n{out}");
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(v["parsed"], 2);
    assert_eq!(v["skipped_oversize"], 1);
    assert_eq!(v["checked"], 1);
}

#[test]
fn bicritical_fraction_is_deterministic_csv() {
    let args = ["bicritical-fraction", "--n", "6,8", "--p", "0.5", "--trials", "60", "--seed", "42"];
    let (c1, out1, _) = run(oddbic(&args).arg("--workers").arg("1"), None);
    let (c4, out4, _) = run(oddbic(&args).arg("--workers").arg("4"), None);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(out1, out4, "CSV must not depend on the worker count");
    let mut lines = out1.lines();
    assert_eq!(lines.next(), Some("n,p,trials,fraction"));
    assert!(lines.next().expect("row for n=6").starts_with("6,0.5,60,"));
    assert!(lines.next().expect("row for n=8").starts_with("8,0.5,60,"));
}

#[test]
fn bicritical_fraction_validates_order_against_oracle_limit() {
    let (code, _, err) = run(
        &mut oddbic(&["bicritical-fraction", "--n", "30", "--trials", "5"]),
        None,
    );
    assert_eq!(code, 2);
    assert!(err.contains("exceeds the 2-bicriticality oracle limit"));
}

#[test]
fn unknown_subcommand_exits_two() {
    let (code, _, _) = run(&mut oddbic(&["frobnicate"]), None);
    assert_eq!(code, 2);
}
