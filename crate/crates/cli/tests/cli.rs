use std::process::{Command, Output};

fn exseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exseq")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_table() {
    let o = exseq(&["count", "A3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e = 16"), "{s}");
    assert!(s.contains("m = 2: g = 330, p = 55"), "{s}");

    let o = exseq(&["count", "--type", "D4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["e"], 162);
    assert_eq!(v["table"][1]["p"], 50);
}

#[test]
fn enumerate_is_deterministic_and_round_trips() {
    let a = exseq(&["enumerate", "A3", "clusters", "--m", "1"]);
    let b = exseq(&["enumerate", "--type", "A3", "clusters", "--m", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<String> = stdout(&a).lines().map(String::from).collect();
    assert_eq!(lines.len(), 14);
    for line in &lines {
        let rec: exseq::schema::ClusterRecord = serde_json::from_str(line).unwrap();
        assert_eq!(&serde_json::to_string(&rec).unwrap(), line);
    }
    let seqs = exseq(&["enumerate", "D4", "exc-seqs"]);
    assert_eq!(stdout(&seqs).lines().count(), 162);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(exseq(&["verify", "A2", "all", "--m", "1"]).status.code(), Some(0));
    assert_eq!(
        exseq(&["verify", "--type", "E8", "--suite", "counting"]).status.code(),
        Some(0)
    );
    assert_eq!(exseq(&["verify", "Q3"]).status.code(), Some(2));
    assert_eq!(exseq(&["verify", "A2", "--m", "9"]).status.code(), Some(2));
    assert_eq!(exseq(&["verify", "E8", "bijection"]).status.code(), Some(2));
}

#[test]
fn graph_a2() {
    let o = exseq(&["graph", "A2", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"(")).count(), 5);
}

#[test]
fn mutate_round_trip() {
    let start = r#"{"m":1,"objects":[{"dim":[1,0],"level":0},{"dim":[1,1],"level":0}]}"#;
    let o = exseq(&["mutate", "A2", "--cluster", start, "--k", "2", "--dir", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let after = serde_json::to_string(&v["cluster"]).unwrap();
    assert_eq!(
        after,
        r#"{"m":1,"objects":[{"dim":[1,0],"level":0},{"dim":[0,1],"level":1}]}"#
    );
    assert_eq!(v["frame_after"], serde_json::json!([[1, 0], [0, 1]]));

    let back = exseq(&["mutate", "A2", "--cluster", &after, "--k", "2", "--dir", "+"]);
    let w: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(serde_json::to_string(&w["cluster"]).unwrap(), start);
}

#[test]
fn mutate_rejects_bad_input() {
    let start = r#"{"m":1,"objects":[{"dim":[1,0],"level":0},{"dim":[1,1],"level":0}]}"#;
    let blocked = exseq(&["mutate", "A2", "--cluster", start, "--k", "2", "--dir", "+"]);
    assert_eq!(blocked.status.code(), Some(2));
    let not_cluster = r#"{"m":1,"objects":[{"dim":[1,0],"level":0},{"dim":[0,1],"level":0}]}"#;
    assert_eq!(
        exseq(&["mutate", "A2", "--cluster", not_cluster, "--k", "1", "--dir", "+"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        exseq(&["mutate", "A2", "--cluster", "{", "--k", "1", "--dir", "+"])
            .status
            .code(),
        Some(2)
    );
}
