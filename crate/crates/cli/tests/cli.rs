use serde_json::Value;
use tricyclic_cli::{run, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tricyclic(args: &[&str], stdin: &str) -> Output {
    let argv: Vec<String> = std::iter::once("tricyclic").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

#[test]
fn k4_is_regular_with_one_main_eigenvalue() {
    let o = tricyclic(&["check"], "C~\n");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("regular"), "{}", o.stdout);
    assert!(o.stdout.contains("main=1 float_main=1"), "{}", o.stdout);

    let o = tricyclic(&["--json", "check"], "C~\n");
    let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["verdict"]["kind"], "regular");
    assert_eq!(v["main_eigenvalues_exact"], 1);
    assert_eq!(v["base_type"], "T8");
}

#[test]
fn generated_h7_checks_as_three_zero() {
    let g = tricyclic(&["generate", "H", "7"], "");
    assert_eq!(g.code, EXIT_OK);
    let o = tricyclic(&["--json", "check"], &g.stdout);
    let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["verdict"], serde_json::json!({"kind": "linear", "a": "3", "b": "0"}));
    assert_eq!(v["main_eigenvalues_exact"], 2);
    assert_eq!(v["main_eigenvalues_float"], 2);
}

#[test]
fn fused_and_separate_indices_agree() {
    assert_eq!(tricyclic(&["generate", "G2", "1", "0"], "").stdout, tricyclic(&["generate", "G", "2", "1", "0"], "").stdout);
    assert_eq!(tricyclic(&["generate", "h7"], "").stdout, tricyclic(&["generate", "H", "7"], "").stdout);
}

#[test]
fn catalog_round_trips_through_classify() {
    let listing = tricyclic(&["generate", "catalog", "--max-order", "16"], "");
    assert_eq!(listing.code, EXIT_OK);
    let lines: Vec<&str> = listing.stdout.lines().collect();
    let kinds: std::collections::BTreeSet<&str> =
        lines.iter().map(|l| l.split(' ').nth(1).unwrap().split('(').next().unwrap()).collect();
    assert_eq!(kinds.len(), 38, "every H and G family appears");
    let input: String = lines.iter().map(|l| format!("{}\n", l.split(' ').next().unwrap())).collect();
    let classified = tricyclic(&["classify"], &input);
    assert_eq!(classified.code, EXIT_OK);
    for (line, result) in lines.iter().zip(classified.stdout.lines()) {
        let name = line.split(' ').nth(1).unwrap();
        let family = result.split(' ').nth(1).unwrap();
        let kind = |s: &str| s.split('(').next().unwrap().to_string();
        assert_eq!(kind(family), kind(name), "{line}");
    }
}

#[test]
fn edge_list_output_parses_back() {
    let e = tricyclic(&["generate", "T", "1", "3", "3", "3", "--format", "edge-list"], "");
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    let g = tricyclic(&["generate", "T", "1", "3", "3", "3"], "");
    let o = tricyclic(&["check", "--format", "edge-list"], &e.stdout);
    assert!(o.stdout.starts_with(g.stdout.trim()), "{} vs {}", o.stdout, g.stdout);
    assert!(o.stdout.contains("base=T1"));
}

#[test]
fn non_tricyclic_graphs_classify_as_none() {
    let o = tricyclic(&["classify"], "Bw\n");
    assert_eq!(o.stdout.trim(), "Bw none");
}

#[test]
fn malformed_input_exits_one() {
    for (args, stdin) in [
        (vec!["check"], "x\n"),
        (vec!["check"], ""),
        (vec!["generate", "H", "31"], ""),
        (vec!["generate", "G", "2", "-1"], ""),
        (vec!["generate", "Q", "1"], ""),
        (vec!["generate", "T", "8", "1", "1", "1", "1", "1", "1"], ""),
        (vec!["enumerate", "9", "--strategy", "naive"], ""),
        (vec!["bogus"], ""),
        (vec!["verify", "--max-order", "many"], ""),
    ] {
        let o = tricyclic(&args, stdin);
        assert_eq!(o.code, EXIT_INPUT, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(tricyclic(&["--help"], "").code, EXIT_OK);
    assert_eq!(tricyclic(&["--version"], "").code, EXIT_OK);
}

#[test]
fn enumerate_lists_every_class() {
    let o = tricyclic(&["--threads", "2", "enumerate", "6"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().count(), 22);
    assert_eq!(o.stdout, tricyclic(&["enumerate", "6", "--strategy", "naive"], "").stdout);
}

#[test]
fn verify_reports_discrepancy_at_order_eight() {
    let clean = tricyclic(&["verify", "--max-order", "7"], "");
    assert_eq!(clean.code, EXIT_OK);
    assert!(clean.stdout.ends_with("result: consistent\n"));

    let o = tricyclic(&["--json", "verify", "--max-order", "8", "--strategy", "naive"], "");
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["clean"], false);
    assert_eq!(v["strategy"], "naive");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 8);
    let last = &reports[7];
    assert_eq!(last["order"], 8);
    assert_eq!(last["total"], 486);
    assert_eq!(last["positives"], 10);
    assert_eq!(last["counterexamples"], serde_json::json!(["G@`@W{"]));
    assert_eq!(last["hagos_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "verify", "--max-order", "7", "--dump-positives"];
    assert_eq!(tricyclic(&args, "").stdout, tricyclic(&args, "").stdout);
}
