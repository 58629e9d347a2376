use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sdlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdlift")).args(args).env_remove("SDLIFT_SHARDS").output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_table_row_is_self_dual() {
    let out = sdlift(&["construct", "--matrix", "omega1", "--rB", "0,0,0,0,0,1,0,1,1", "--rC", "1,0,1,1,1,0,1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("100000000000000000"));
    assert!(text.contains("\"d\":6"));
    assert!(text.contains("sdlift 0.1.0"));
}

#[test]
fn construct_with_spaces_and_r1_tokens() {
    let out = sdlift(&[
        "construct", "--matrix", "omega2", "--ring", "r1",
        "--rB", "(0, 0, 0, u, 1, 1)", "--rC", "u,1,u + 1,u,1,1", "--rD", "u,u+1,1,1+u,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"beta\":471"));
}

#[test]
fn construct_failures() {
    let zeros = "0,0,0,0,0,0,0,0,0";
    let out = sdlift(&["construct", "--matrix", "omega1", "--rB", zeros, "--rC", zeros]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("fails BB^T+CC^T=I_9"));

    let out = sdlift(&["construct", "--matrix", "omega1", "--rB", "0,0,0,0,0,1,0,1", "--rC", zeros]);
    assert_eq!(out.status.code(), Some(2));

    let out = sdlift(&["construct", "--matrix", "omega1", "--rB", "0,0,0,0,v,1,0,1,1", "--rC", zeros]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("position 5"));

    let out = sdlift(&["construct", "--matrix", "omega1", "--rB", "u,0,0,0,0,1,0,1,1", "--rC", zeros]);
    assert_eq!(out.status.code(), Some(2));

    let out = sdlift(&["construct", "--matrix", "omega9", "--rB", zeros, "--rC", zeros]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_fixtures_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let fx = dir.path().join("fx.rec");
    assert!(sdlift(&["fixtures", "--out", path(&fx)]).status.success());
    let text = fs::read_to_string(&fx).unwrap();
    // binary rows and the first lift keep the test quick
    let short: Vec<&str> = text.lines().take(14).collect();
    let good = dir.path().join("good.rec");
    fs::write(&good, short.join("\n")).unwrap();
    let out = sdlift(&["verify", path(&good)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    let bad = dir.path().join("bad.rec");
    fs::write(&bad, short.join("\n").replace("\"beta\":192", "\"beta\":193")).unwrap();
    let out = sdlift(&["verify", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("L1: MISMATCH"));
    assert!(report.contains("beta: stored 193, computed 192"));

    let empty = dir.path().join("empty.rec");
    fs::write(&empty, "").unwrap();
    let out = sdlift(&["verify", path(&empty)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn search_is_byte_identical_across_runs_and_shards() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.rec");
    let b = dir.path().join("b.rec");
    let common = ["search", "--matrix", "omega2", "--seed", "42", "--budget", "10000"];
    let mut args = common.to_vec();
    args.extend(["--shards", "1", "--out", path(&a)]);
    assert!(sdlift(&args).status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_sdlift"))
        .args(common)
        .args(["--out", path(&b)])
        .env("SDLIFT_SHARDS", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    assert!(text.lines().next().unwrap().contains("\"seed\":42"));
    assert!(text.lines().count() > 1);

    let out = sdlift(&["verify", path(&a)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sampled_lift_then_report() {
    let dir = tempfile::tempdir().unwrap();
    let fx = dir.path().join("fx.rec");
    assert!(sdlift(&["fixtures", "--out", path(&fx)]).status.success());
    let lifted = dir.path().join("lift.rec");
    let out = sdlift(&[
        "lift", "--in", path(&fx), "--id", "C7", "--mode", "sampled:3000", "--seed", "3", "--out", path(&lifted),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&lifted).unwrap();
    assert!(text.lines().nth(1).unwrap().contains("\"id\":\"C7\""));
    assert_eq!(sdlift(&["verify", path(&lifted)]).status.code(), Some(0));

    let csv = sdlift(&["report", "--in", path(&lifted), "--format", "csv", "--dedup"]);
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("id,type,rB,rC,rD,gamma,beta,aut"));
    // (type, gamma, beta) identifies a fingerprint among codes of one parent
    let key = |line: &str| {
        let rest = line.split_once(',').unwrap().1;
        let ty = rest.trim_start_matches('"').split('"').next().unwrap().to_string();
        let tail: Vec<&str> = line.rsplitn(4, ',').collect();
        (ty, tail[2].to_string(), tail[1].to_string())
    };
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    let keys: std::collections::HashSet<_> = rows.iter().map(|r| key(r)).collect();
    assert_eq!(keys.len(), rows.len());

    let out = sdlift(&["lift", "--in", path(&fx), "--mode", "sometimes"]);
    assert_eq!(out.status.code(), Some(2));
}
