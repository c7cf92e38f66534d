use hyperzeta::cli::*;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_args(args: &[&str]) -> (i32, String) {
    run(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key:?} in\n{out}"))
}

#[test]
fn zeta_report_fields() {
    let (code, out) = run_args(&["zeta", &fixture("hub.hg"), "--route", "all"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "report"), "zeta");
    assert_eq!(field(&out, "route linegraph"), "1 0 0 -6 0 0 9 0 0 -4");
    assert_eq!(field(&out, "route bass"), "1 0 0 -6 0 0 9 0 0 -4");
    assert_eq!(field(&out, "routes"), "AGREE (2 routes)");
    assert_eq!(field(&out, "degree"), "9");
    assert_eq!(field(&out, "degree-law"), "pass");
    assert_eq!(field(&out, "even"), "false");
}

#[test]
fn zeta_regular_uses_four_routes() {
    let (code, out) = run_args(&["zeta", &fixture("k4.hg")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "routes"), "AGREE (4 routes)");
    assert_eq!(field(&out, "reciprocal"), "1 0 0 -8 -6 0 16 24 -3 -16 -24 0 16");
}

#[test]
fn oracle_report_agrees() {
    let (code, out) = run_args(&["oracle", &fixture("bowtie.hg"), "--order", "8"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(field(&out, "euler-product"), "AGREE");
    assert_eq!(field(&out, "trace-identity"), "AGREE");
}

#[test]
fn spectra_report() {
    let (code, out) = run_args(&["spectra", &fixture("fano.hg")]);
    assert_eq!(code, EXIT_OK);
    for key in ["eq2", "eq3", "eq4", "AB2-nonnegative"] {
        assert_eq!(field(&out, key), "pass");
    }
}

#[test]
fn ramanujan_verdicts() {
    let (_, out) = run_args(&["ramanujan", &fixture("k4.hg")]);
    assert_eq!(field(&out, "ramanujan"), "yes");
    assert_eq!(field(&out, "riemann-hypothesis"), "true");
    let (_, out) = run_args(&["ramanujan", &fixture("nonramanujan16.hg")]);
    assert_eq!(field(&out, "ramanujan"), "no");
    assert_eq!(field(&out, "riemann-hypothesis"), "false");
    let (_, out) = run_args(&["ramanujan", &fixture("c6.hg"), "--tolerance", "0"]);
    assert_eq!(field(&out, "ramanujan"), "yes");
    let (code, _) = run_args(&["ramanujan", &fixture("hub.hg")]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn distinguish_exit_codes() {
    let (code, out) = run_args(&["distinguish", &fixture("x1.hg"), &fixture("x2.hg")]);
    assert_eq!(code, EXIT_DISTINGUISHED, "{out}");
    let (code, _) = run_args(&["distinguish", &fixture("k4.hg"), &fixture("k4.hg")]);
    assert_eq!(code, EXIT_OK);
    let (code, _) = run_args(&["distinguish", &fixture("k4.hg"), &fixture("k4.hg"), "--k", "2"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn validate_and_usage_errors() {
    let (code, out) = run_args(&["validate", &fixture("k3.hg")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("warning: line graph not strongly connected"));
    assert_eq!(run_args(&[]).0, EXIT_USAGE);
    assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["zeta"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["zeta", &fixture("hub.hg"), "--route", "nope"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    assert_eq!(run_args(&["zeta", "/nonexistent.hg"]).0, EXIT_INVALID);
}

#[test]
fn number_parsing() {
    assert_eq!(parse_rational("3/7").unwrap().to_string(), "3/7");
    assert_eq!(parse_rational("0.25").unwrap().to_string(), "1/4");
    assert_eq!(parse_rational("1e-9").unwrap().to_string(), "1/1000000000");
    assert!(parse_rational("x").is_err());
}
