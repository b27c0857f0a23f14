use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jinverse"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no {key:?} line in {text:?}"))
        .trim()
}

#[test]
fn jeval_examples() {
    let o = run(&["jeval", "i"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1");
    assert_eq!(stdout(&run(&["jeval", "2i"])).trim(), "166.375");
    assert_eq!(stdout(&run(&["--klein", "jeval", "2i"])).trim(), "287496");
    assert_eq!(
        stdout(&run(&["jeval", "0+1.7320508075688772i", "--digits", "6"])).trim(),
        "31.25"
    );
    assert_eq!(stdout(&run(&["jeval", "-0.5+2i"])).trim(), "-165.513888586");
}

#[test]
fn jeval_errors() {
    let o = run(&["jeval", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
    assert_eq!(code(&run(&["jeval", "-2i"])), 3);
    assert_eq!(code(&run(&["jeval", "1 + 2i"])), 2);
    assert_eq!(code(&run(&["jeval", "2j"])), 2);
    assert_eq!(code(&run(&["jeval"])), 2);
}

#[test]
fn jinv_examples() {
    let o = run(&["jinv", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(field(&text, "tau:"), "0+1i");
    assert_eq!(field(&text, "branch:"), "(+1, 0)");
    assert!(field(&text, "residual:").parse::<f64>().unwrap() <= 1e-9);

    let text = stdout(&run(&["--digits", "10", "jinv", "0"]));
    assert_eq!(field(&text, "tau:"), "0.5+0.8660254038i");
    let text = stdout(&run(&["--digits", "11", "jinv", "31.25"]));
    assert_eq!(field(&text, "tau:"), "0+1.7320508076i");
    let text = stdout(&run(&["--klein", "jinv", "1728"]));
    assert_eq!(field(&text, "tau:"), "0+1i");
}

#[test]
fn jinv_accepts_negative_and_complex_input() {
    let o = run(&["jinv", "-3.5-2i"]);
    assert_eq!(code(&o), 0);
    let tau = field(&stdout(&o), "tau:").to_string();
    let back = run(&["--digits", "6", "jeval", &tau]);
    assert_eq!(stdout(&back).trim(), "-3.5-2i");
}

#[test]
fn global_flag_validation() {
    assert_eq!(code(&run(&["--digits", "0", "jeval", "i"])), 2);
    assert_eq!(code(&run(&["--digits", "18", "jeval", "i"])), 2);
    assert_eq!(code(&run(&["--tol", "0", "jinv", "1"])), 2);
    assert_eq!(code(&run(&["--tol", "-1e-9", "jinv", "1"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn verify_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("PASS").count(), 19);
    assert!(text.contains("ascending: ok"));

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 19);
    for row in rows {
        for key in [
            "label",
            "tau",
            "expected",
            "forward",
            "rel_err",
            "roundtrip_ok",
        ] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        assert_eq!(row["tau"].as_array().unwrap().len(), 2);
        assert_eq!(row["roundtrip_ok"], true);
    }
    assert_eq!(rows[11]["label"], "j(2√−1)");
    assert_eq!(rows[11]["expected"], 166.375);
}

#[test]
fn verify_fails_at_unattainable_tolerance() {
    let o = run(&["--tol", "1e-30", "verify"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn roundtrip_sweeps() {
    let o = run(&["roundtrip", "--samples", "1000", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(field(&text, "successes:"), "1000");
    assert!(field(&text, "max defect:").parse::<f64>().unwrap() <= 1e-8);
    assert_eq!(text.lines().filter(|l| l.starts_with("branch ")).count(), 6);
    assert_eq!(
        text,
        stdout(&run(&["roundtrip", "--samples", "1000", "--seed", "1"]))
    );

    let o = run(&["roundtrip", "--samples", "1", "--include-zero"]);
    assert_eq!(code(&o), 0);
    assert_eq!(field(&stdout(&o), "successes:"), "1");

    assert_eq!(code(&run(&["roundtrip", "--samples", "0"])), 2);
    assert_eq!(code(&run(&["roundtrip"])), 2);
}

#[test]
fn figure_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("domain.svg");
    let o = run(&["figure", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("viewBox"), Some("0 0 800 600"));
    let with_class = |tag: &str, class: &str| {
        doc.descendants()
            .filter(|n| n.has_tag_name(tag))
            .filter(|n| {
                n.attribute("class")
                    .is_some_and(|c| c.split(' ').any(|w| w == class))
            })
            .count()
    };
    assert!(with_class("circle", "marker") >= 18);
    assert_eq!(with_class("line", "wall"), 2);
    assert_eq!(with_class("path", "arc"), 1);
    assert!(doc.descendants().any(|n| n.text() == Some("√−2 + 1/2")));
    assert!(doc.descendants().any(|n| n.text() == Some("√2/2")));
    assert!(doc.descendants().any(|n| n.text() == Some("√3/3")));

    // The marker for τ = i sits at the apex of the arc.
    let arc = doc
        .descendants()
        .find(|n| n.has_tag_name("path") && n.attribute("class") == Some("arc"))
        .unwrap();
    let d: Vec<f64> = arc
        .attribute("d")
        .unwrap()
        .split(' ')
        .filter_map(|t| t.parse().ok())
        .collect();
    let (start_x, start_y, radius, end_x) = (d[0], d[1], d[2], d[7]);
    let centre_y = start_y + (radius * radius - ((end_x - start_x) / 2.0).powi(2)).sqrt();
    let apex = ((start_x + end_x) / 2.0, centre_y - radius);
    let i_marker = doc
        .descendants()
        .find(|n| n.has_tag_name("circle") && n.attribute("data-order") == Some("8"))
        .unwrap();
    let cx: f64 = i_marker.attribute("cx").unwrap().parse().unwrap();
    let cy: f64 = i_marker.attribute("cy").unwrap().parse().unwrap();
    assert!(
        (cx - apex.0).abs() < 0.01 && (cy - apex.1).abs() < 0.01,
        "({cx}, {cy}) vs {apex:?}"
    );
}

#[test]
fn figure_reports_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("domain.svg");
    assert_eq!(code(&run(&["figure", "--out", path.to_str().unwrap()])), 4);
}
