use intsymp::cli::{run, RangeSpec, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use intsymp::ring::LaurentPoly;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut v = vec!["intsymp"];
    v.extend_from_slice(args);
    let code = run(v, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn char_examples() {
    assert_eq!(call(&["char", "--shape", "1", "--n", "1", "--k", "1", "--method", "tableau"]), (EXIT_OK, "x1 + x1^-1\n".into(), String::new()));
    assert_eq!(call(&["char", "--shape", "", "--n", "2", "--k", "1"]).1, "1\n");
    let a = call(&["char", "--shape", "4,3,1,1", "--n", "4", "--k", "2", "--method", "jt2"]);
    let b = call(&["char", "--shape", "4,3,1,1", "--n", "4", "--k", "2", "--method", "bialt"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
    assert_eq!(call(&["char", "--shape", "1/2", "--n", "1", "--group", "ob"]).1, "x1^1/2 + x1^-1/2\n");
}

#[test]
fn char_errors() {
    assert_eq!(call(&["char", "--shape", "1,2", "--n", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["char", "--shape", "1", "--n", "1", "--k", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["char", "--shape", "1", "--n", "1", "--method", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["char", "--shape", "1,1", "--n", "2", "--k", "0", "--method", "jt3"]).0, EXIT_USAGE);
    assert_eq!(call(&["nothing"]).0, EXIT_USAGE);
}

#[test]
fn json_round_trip() {
    let (code, out, _) = call(&["char", "--shape", "2,1", "--n", "2", "--k", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let p = LaurentPoly::from_json(out.trim(), 2).unwrap();
    let (_, text, _) = call(&["char", "--shape", "2,1", "--n", "2", "--k", "1"]);
    assert_eq!(p.to_text(), text.trim());
}

#[test]
fn verify_examples() {
    let (code, out, _) = call(&["verify", "main", "--n", "1..3", "--k", "0..n", "--m", "0..3", "--a", "0..1"]);
    assert_eq!(code, EXIT_OK);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["equal"], true);
    }
    let (code, out, _) = call(&["verify", "hl", "--n", "2", "--k", "1", "--m", "2"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["count"], "20");
    assert_eq!(call(&["verify", "methods", "--max-rect", "2x2"]).0, EXIT_OK);
    assert_eq!(call(&["verify", "tiling", "--n", "1", "--m", "0..1", "--a", "0", "--format", "csv"]).0, EXIT_OK);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(call(&["verify", "main", "--n", "x"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "main", "--variant", "7"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "gf", "--family", "odd"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "main", "--n", "n"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "main", "--n", "3..1"]).0, EXIT_USAGE);
}

#[test]
fn deterministic_order() {
    let args = ["verify", "gf", "--n", "1..2", "--m", "0..2", "--a", "0"];
    let mut one = vec!["--threads", "1"];
    one.extend_from_slice(&args);
    let mut four = vec!["--threads", "4"];
    four.extend_from_slice(&args);
    assert_eq!(call(&one), call(&four));
}

#[test]
fn count_examples() {
    assert_eq!(call(&["count", "spp", "--n", "2", "--k", "1", "--m", "2"]).1, "20\n");
    assert_eq!(call(&["count", "spp", "--n", "1", "--k", "0", "--m", "0"]).1, "1\n");
    assert_eq!(call(&["count", "tiling", "--x", "1", "--y", "1", "--z", "0", "--t", "0"]).1, "2\n");
    let (_, out, _) = call(&["count", "tiling", "--x", "1", "--y", "1", "--z", "0", "--t", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["printed_product"], "4/3");
    assert_eq!(v["resolved_product"], "2");
}

#[test]
fn gf_examples() {
    assert_eq!(call(&["gf", "--n", "1", "--k", "0", "--m", "1", "--weight", "w"]).1, "1 + q\n");
    assert_eq!(call(&["gf", "--n", "1", "--k", "0", "--m", "0", "--weight", "v"]).1, "1\n");
    let (code, out, _) = call(&["gf", "--n", "2", "--k", "1", "--m", "2", "--weight", "w", "--family", "par", "--check", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["closed"], v["enumerated"]);
    assert_eq!(call(&["gf", "--n", "2", "--k", "1", "--m", "1", "--family", "even"]).0, EXIT_USAGE);
    assert_ne!(EXIT_FAIL, EXIT_OK);
}

#[test]
fn range_parsing() {
    assert_eq!("2".parse::<RangeSpec>().unwrap().values(None).unwrap(), vec![2]);
    assert_eq!("1..3".parse::<RangeSpec>().unwrap().values(None).unwrap(), vec![1, 2, 3]);
    assert_eq!("0..=n".parse::<RangeSpec>().unwrap().values(Some(2)).unwrap(), vec![0, 1, 2]);
    assert!("a..b".parse::<RangeSpec>().is_err());
}
