mod common;

use std::fs;
use std::path::Path;
use std::process::Command;

use rand::Rng;
use toplift::io::write_domain;
use toplift::liftings::registry_list;

fn toplift(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toplift"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lift_k3_clique() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k3.txt");
    let output = dir.path().join("k3_sc.txt");
    fs::write(&input, "graph 3\n0 1\n1 2\n0 2\n").unwrap();
    let (code, out, _) = toplift(&[
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--lifting",
        "clique",
        "--param",
        "max_dim=2",
        "--output",
        path_str(&output),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3 3 1");
    assert_eq!(
        fs::read_to_string(&output).unwrap(),
        "simplicial 3\n0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n"
    );
}

#[test]
fn lift_unknown_id_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.txt");
    fs::write(&input, "graph 2\n0 1\n").unwrap();
    let out = dir.path().join("o.txt");
    let (code, _, err) = toplift(&[
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--lifting",
        "nope",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown lifting"), "{err}");
    assert!(!out.exists());
}

#[test]
fn lift_reserved_id_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.txt");
    fs::write(&input, "graph 2\n0 1\n").unwrap();
    let (code, _, err) = toplift(&[
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--lifting",
        "spin",
        "--output",
        path_str(&dir.path().join("o")),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("reserved"), "{err}");
}

#[test]
fn lift_kind_mismatch_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pc.txt");
    fs::write(&input, "pointcloud 2 2\n0 0\n1 1\n").unwrap();
    let (code, _, err) = toplift(&[
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--lifting",
        "clique",
        "--output",
        path_str(&dir.path().join("o")),
    ]);
    assert_eq!(code, 2);
    assert!(
        err.contains("expected a graph file, found pointcloud"),
        "{err}"
    );
}

#[test]
fn lift_bad_param_is_usage_error_and_bad_input_is_failure() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.txt");
    let out = dir.path().join("o");
    fs::write(&input, "graph 3\n0 1\n").unwrap();
    let base = [
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--output",
        path_str(&out),
    ];
    let run = |extra: &[&str]| toplift(&[&base[..], extra].concat()).0;
    assert_eq!(run(&["--lifting", "clique", "--param", "max_dim=0"]), 2);
    assert_eq!(run(&["--lifting", "clique", "--param", "bogus=1"]), 2);
    assert_eq!(run(&["--lifting", "clique", "--param", "max_dim"]), 2);
    assert_eq!(run(&["--lifting", "spectral_embedding"]), 1);
    assert_eq!(run(&["--lifting", "clique", "--features", "mean"]), 1);
    assert_eq!(run(&["--lifting", "clique", "--features", "median"]), 2);
    fs::write(&input, "graph 3\n0 5\n").unwrap();
    assert_eq!(run(&["--lifting", "clique"]), 1);
}

#[test]
fn lift_with_features_writes_feature_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("sc.txt");
    let output = dir.path().join("out.txt");
    fs::write(
        &input,
        "graph 3 1\n0 1\n1 2\n0 2\nfeatures\n1.0\n2.0\n3.0\n",
    )
    .unwrap();
    let (code, _, err) = toplift(&[
        "lift",
        "--input",
        path_str(&input),
        "--kind",
        "graph",
        "--lifting",
        "clique",
        "--features",
        "mean",
        "--output",
        path_str(&output),
    ]);
    assert_eq!(code, 0, "{err}");
    let fm = fs::read_to_string(dir.path().join("out.txt.features")).unwrap();
    assert_eq!(
        fm,
        "featurematrix 1\n0 0 : 1.0\n0 1 : 2.0\n0 2 : 3.0\n1 0 1 : 1.5\n1 0 2 : 2.0\n1 1 2 : 2.5\n2 0 1 2 : 2.0\n"
    );
}

#[test]
fn config_with_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("g.txt"),
        "graph 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    )
    .unwrap();
    let config = dir.path().join("run.pipeline");
    fs::write(
        &config,
        "pipeline\ninput graph g.txt\nlifting clique\nparam max_dim 1\noutput sc.txt\n",
    )
    .unwrap();
    let (code, out, err) = toplift(&["lift", "--config", path_str(&config)]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "4 6");
    assert!(dir.path().join("sc.txt").exists());
    let (code, out, _) = toplift(&[
        "lift",
        "--config",
        path_str(&config),
        "--param",
        "max_dim=3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4 6 4 1");

    fs::write(&config, "pipeline\ninput graph g.txt\nlifting clique\n").unwrap();
    let (code, _, err) = toplift(&["lift", "--config", path_str(&config)]);
    assert_eq!(code, 2);
    assert!(err.contains("--output"), "{err}");
    fs::write(&config, "pipeline\nlifting clique\nparam max_dim 0\n").unwrap();
    assert_eq!(toplift(&["lift", "--config", path_str(&config)]).0, 2);
}

#[test]
fn validate_examples() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sc.txt");
    fs::write(&file, "simplicial 3\n0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n").unwrap();
    let (code, out, _) = toplift(&[
        "validate",
        "--input",
        path_str(&file),
        "--kind",
        "simplicial",
    ]);
    assert_eq!((code, out.as_str()), (0, "OK\n"));

    fs::write(&file, "simplicial 3\n0\n1\n2\n0 1\n1 2\n0 1 2\n").unwrap();
    let (code, out, _) = toplift(&[
        "validate",
        "--input",
        path_str(&file),
        "--kind",
        "simplicial",
    ]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().count(), 1, "{out}");
    assert!(out.contains("closure violated"), "{out}");

    fs::write(&file, "pointcloud 3 2\n0 0\n1 1\n").unwrap();
    let (code, _, err) = toplift(&["validate", "--input", path_str(&file)]);
    assert_eq!(code, 2);
    assert!(err.contains("expected 3 point(s)"), "{err}");

    let missing = dir.path().join("missing.txt");
    assert_eq!(toplift(&["validate", "--input", path_str(&missing)]).0, 2);
}

#[test]
fn info_table() {
    let (code, out, _) = toplift(&["info"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows.len() >= 16);
    let pairs: std::collections::BTreeSet<(&str, &str)> = rows
        .iter()
        .map(|r| {
            let f: Vec<&str> = r.split_whitespace().collect();
            (f[1], f[2])
        })
        .collect();
    assert_eq!(pairs.len(), 12);
    assert!(out.lines().next().unwrap().starts_with("id"));
    let knn = rows.iter().find(|r| r.starts_with("knn_graph")).unwrap();
    assert!(knn.contains("k:int=1 (>= 1)"), "{knn}");

    let (code, out, _) = toplift(&["info", "--source", "SC", "--dest", "PC"]);
    assert_eq!((code, out.lines().count()), (0, 1));
    let (_, out, _) = toplift(&["info", "--source", "hypergraph"]);
    let ids: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(ids, ["downward_closure", "strict_ccc"]);
}

#[test]
fn stats_examples() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.txt");
    let stats = |text: &str| {
        fs::write(&file, text).unwrap();
        toplift(&["stats", "--input", path_str(&file)])
    };
    let (code, out, _) = stats("simplicial 3\n0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n");
    assert_eq!((code, out.as_str()), (0, "dims: 3 3 1, chi: 1\n"));
    let (_, out, _) = stats("graph 4\n0 1\n1 2\n2 3\n0 3\n");
    assert_eq!(out, "dims: 4 4\ndegrees: min 2 max 2 mean 2\n");
    let (_, out, _) = stats("hypergraph 3\n0 1 2\n1 2\n");
    assert_eq!(out, "dims: 3 2\nsizes: 2:1 3:1\n");
    let (code, _, _) = stats("simplicial 3\n0\n1\n2\n0 1 2\n");
    assert_eq!(code, 1);
    let (code, _, _) = stats("simplicial\n");
    assert_eq!(code, 2);
}

#[test]
fn lift_then_validate_on_random_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(0xC1);
    for d in registry_list(None, None) {
        for trial in 0..5 {
            let (input, params) = common::random_lifting_input(&mut rng, &d.id, d.source);
            let in_path = dir.path().join(format!("{}-{trial}.in", d.id));
            let out_path = dir.path().join(format!("{}-{trial}.out", d.id));
            write_domain(&input, &in_path).unwrap();
            let mut args = vec![
                "lift".to_string(),
                "--input".into(),
                path_str(&in_path).into(),
                "--kind".into(),
                d.source.name().into(),
                "--lifting".into(),
                d.id.clone(),
                "--output".into(),
                path_str(&out_path).into(),
            ];
            for (name, value) in params.iter() {
                args.push("--param".into());
                args.push(format!("{name}={value}"));
            }
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let (code, _, err) = toplift(&args);
            assert_eq!(code, 0, "{} trial {trial}: {err}", d.id);
            let (code, out, _) = toplift(&[
                "validate",
                "--input",
                path_str(&out_path),
                "--kind",
                d.dest.name(),
            ]);
            assert_eq!((code, out.as_str()), (0, "OK\n"), "{}", d.id);
        }
    }
}

#[test]
fn exit_codes_are_exhaustive() {
    let mut rng = common::rng(0xE217);
    let words = [
        "lift",
        "validate",
        "info",
        "stats",
        "--input",
        "--kind",
        "--lifting",
        "--param",
        "--features",
        "--output",
        "--config",
        "graph",
        "clique",
        "k=2",
        "mean",
        "/nonexistent",
        "--source",
        "HG",
        "-x",
        "",
    ];
    for _ in 0..60 {
        let len = rng.random_range(0..6);
        let args: Vec<&str> = (0..len)
            .map(|_| words[rng.random_range(0..words.len())])
            .collect();
        let (code, _, _) = toplift(&args);
        assert!(matches!(code, 0..=2), "{args:?} exited {code}");
    }
}
