use std::process::Command;

use serde_json::Value;

fn thinpos(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_thinpos")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = thinpos(args);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_report_schema() {
    let (_, out, _) = thinpos(&["analyze", "catalog:bt134"]);
    let keys: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().trim_start_matches('"').split('"').next().unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "width",
            "trunk",
            "height",
            "bridge",
            "critical_count",
            "otp_vector",
            "proportion",
            "average_trunk",
            "rep_upper",
            "waist_upper",
            "gaps"
        ]
    );
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["width"], 134);
    assert_eq!(v["proportion"], serde_json::json!({"num": 5, "den": 33}));
    assert_eq!(v["average_trunk"], serde_json::json!({"num": 10, "den": 1}));
}

#[test]
fn analyze_unknot() {
    let v = json(&["analyze", "b1 d1"]);
    assert_eq!(v["width"], 2);
    assert_eq!(v["proportion"], serde_json::json!({"num": 1, "den": 1}));
    assert_eq!(v["gaps"], serde_json::json!([{"width": 2, "class": "thick"}]));
}

#[test]
fn analyze_tangle() {
    let v = json(&["analyze", "catalog:two_rational_sum"]);
    assert_eq!(v["trunk"], 6);
}

#[test]
fn compare_reduced_stack() {
    let v = json(&["compare", "catalog:stack_101010", "profile:8,2,8"]);
    assert_eq!(v["first"], serde_json::json!([10, 10, 10]));
    assert_eq!(v["second"], serde_json::json!([8, 8]));
    assert_eq!(v["ordering"], "greater");
}

#[test]
fn optimize_padded_trefoil() {
    let v = json(&["optimize", "catalog:padded_trefoil", "--objective", "width", "--seed", "3"]);
    assert_eq!(v["best_report"]["width"], 8);
    assert_eq!(v["objective"], "width");
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn optimize_budget_exit_code() {
    let (code, out, err) = thinpos(&["optimize", "catalog:padded_trefoil", "--max-visited", "5"]);
    assert_eq!(code, 3, "{}", err);
    assert!(serde_json::from_str::<Value>(&out).is_ok());
}

#[test]
fn sum_of_trefoils() {
    let v = json(&["sum", "catalog:trefoil_plat", "catalog:trefoil_plat"]);
    assert_eq!(v["report"]["width"], 14);
    assert_eq!(v["report"]["bridge"], 3);
}

#[test]
fn bracket_command() {
    let v = json(&["bracket", "catalog:figure8_plat"]);
    assert_eq!(v["normalized"], "A^-8 - A^-4 + 1 - A^4 + A^8");
    assert_eq!(v["writhe"], 0);
}

#[test]
fn catalog_listing_and_entry() {
    let (code, out, _) = thinpos(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
    let (code, out, _) = thinpos(&["catalog", "trefoil_plat"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "b1 b3 x2- x2- x2- d3 d1");
    assert_eq!(thinpos(&["catalog", "granny"]).0, 1);
}

#[test]
fn render_ascii_and_svg() {
    let (_, out, _) = thinpos(&["render", "catalog:bt134"]);
    let widths: Vec<&str> = out.lines().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(widths, ["10", "4", "10", "4", "10"]);
    assert!(out.lines().all(|l| l.starts_with("thick") || l.starts_with("thin")));
    let (_, out, _) = thinpos(&["render", "b1 d1"]);
    assert_eq!(out, "thick    2 ##\n");

    let (_, svg, _) = thinpos(&["render", "catalog:bt134", "--format", "svg"]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let rects: Vec<_> = doc.descendants().filter(|n| n.has_tag_name("rect")).collect();
    assert_eq!(rects.len(), 5);
    assert_eq!(rects.iter().filter(|r| r.attribute("class") == Some("thin")).count(), 2);
}

#[test]
fn classify_bt_positions() {
    let (code, out, err) = thinpos(&["classify", "catalog:bt134", "catalog:bt_mcp"]);
    assert_eq!(code, 0, "{}", err);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["tp"], true);
    assert_eq!(v[0]["mcp"], false);
    assert_eq!(v[1]["tp"], false);
    assert_eq!(v[1]["mcp"], true);
    assert_eq!(v[1]["otp"], false);
    assert!(err.contains("catalog:bt_mcp: MCP"));
    let (code, _, _) = thinpos(&["classify", "catalog:trefoil_plat", "catalog:figure8_plat"]);
    assert_eq!(code, 1);
}

#[test]
fn exit_codes_and_messages() {
    let (code, _, err) = thinpos(&["analyze", "b1 d3"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    let (code, _, err) = thinpos(&["analyze", "b1\nd1 q2"]);
    assert_eq!(code, 2);
    assert!(err.contains("2:4") || err.contains("line 2"), "{}", err);
    assert_eq!(thinpos(&["bracket", "torus:2,19"]).0, 3);
    assert_eq!(thinpos(&["nonsense"]).0, 2);
}

#[test]
fn reads_word_files() {
    let dir = std::env::temp_dir().join(format!("thinpos-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trefoil.knot");
    std::fs::write(&path, "# left trefoil\nb1 b3\nx2- x2- x2-\nd3 d1\n").unwrap();
    let v = json(&["analyze", &format!("file:{}", path.display())]);
    assert_eq!(v["width"], 8);
    std::fs::remove_dir_all(dir).unwrap();
}
