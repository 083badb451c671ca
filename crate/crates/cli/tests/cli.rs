use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

const SINGLE: &str = r#"{"window":3,"crossings":[[1,1]]}"#;

#[test]
fn perm_summary() {
    assert_eq!(
        stdout(&["perm", "3,2,1"]),
        "length: 3\ncode: 2,1,0\ninverse: 3,2,1\n"
    );
    assert!(stdout(&["perm", "1,2"]).starts_with("length: 0\n"));
    assert_eq!(code(&["perm", "1,1"]), 2);
    assert_eq!(code(&["perm", "0,1"]), 2);
}

#[test]
fn schubert_backends() {
    assert_eq!(stdout(&["schubert", "2,1,3"]), "x1\n");
    assert_eq!(stdout(&["schubert", "1,2"]), "1\n");
    assert_eq!(stdout(&["schubert", "2,1,3", "--backend", "ddiff"]), "x1\n");
    let rc = stdout(&["schubert", "3,2,1,5,4", "--backend", "rc"]);
    assert_eq!(stdout(&["schubert", "3,2,1,5,4", "--backend", "both"]), rc);
    assert_eq!(code(&["schubert", "3,3"]), 2);
}

#[test]
fn rc_subcommands() {
    assert_eq!(
        stdout(&["rc", "bottom", "3,2,1,5,4"]),
        "{\"window\":5,\"crossings\":[[1,1],[1,2],[2,1],[4,1]]}\n"
    );
    assert_eq!(stdout(&["rc", "list", "1,3,2"]).lines().count(), 2);
    assert_eq!(
        stdout(&["rc", "list", "1,2"]),
        "{\"window\":1,\"crossings\":[]}\n"
    );
    let picture = stdout(&["rc", "bottom", "2,1", "--render"]);
    assert_eq!(picture, "  12\n1 +.\n2 ..\n");
}

#[test]
fn insert_prints_graph_ledger_and_permutation() {
    let out = stdout(&["pieri", "insert", SINGLE, "--r", "2", "--comp", "0,1"]);
    assert_eq!(
        out,
        "graph: {\"window\":3,\"crossings\":[[1,1],[2,1]]}\nledger: [(2,3)]\npermutation: 2,3,1\n"
    );
}

#[test]
fn insert_traces_are_stable() {
    let out = stdout(&[
        "pieri", "insert", SINGLE, "--r", "2", "--comp", "0,1", "--trace",
    ]);
    assert!(
        out.starts_with("ROW 2\nADD (2,1) pair=(2,3) case=1\nROW 1\ngraph: "),
        "{out}"
    );
    let out = stdout(&[
        "pieri", "insert", SINGLE, "--r", "2", "--comp", "1,0", "--trace",
    ]);
    assert!(
        out.starts_with("ROW 1\nADD (1,2) pair=(1,3) case=1\ngraph: "),
        "{out}"
    );
    assert!(
        out.ends_with("ledger: [(1,3)]\npermutation: 3,1,2\n"),
        "{out}"
    );
}

#[test]
fn insert_reads_graph_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{SINGLE}").unwrap();
    let arg = format!("@{}", file.path().display());
    let out = stdout(&[
        "pieri", "insert", &arg, "--r", "2", "--comp", "0,1", "--verify",
    ]);
    assert!(out.contains("ledger: [(2,3)]"));
    assert_eq!(
        code(&[
            "pieri",
            "insert",
            "@/no/such/file",
            "--r",
            "2",
            "--comp",
            "0,1"
        ]),
        2
    );
}

#[test]
fn insert_all_compositions() {
    let out = stdout(&["pieri", "insert", SINGLE, "--r", "2", "--all", "--m", "2"]);
    assert_eq!(out.matches("comp: ").count(), 3);
    assert_eq!(out.matches("graph: ").count(), 3);
}

#[test]
fn insert_rejects_bad_input() {
    assert_eq!(
        code(&["pieri", "insert", "{", "--r", "2", "--comp", "0,1"]),
        2
    );
    let non_reduced = r#"{"window":3,"crossings":[[1,2],[2,1]]}"#;
    assert_eq!(
        code(&["pieri", "insert", non_reduced, "--r", "2", "--comp", "0,1"]),
        2
    );
    assert_eq!(
        code(&["pieri", "insert", SINGLE, "--r", "2", "--comp", "0,1,0"]),
        2
    );
}

#[test]
fn invert_undoes_insert() {
    let graph = r#"{"window":3,"crossings":[[1,1],[2,1]]}"#;
    let expected = "graph: {\"window\":3,\"crossings\":[[1,1]]}\ncomp: 0,1\n";
    assert_eq!(
        stdout(&["pieri", "invert", graph, "--w", "2,1,3", "--r", "2", "--m", "1"]),
        expected
    );
    assert_eq!(
        stdout(&["pieri", "invert", graph, "--w", "2,1,3", "--r", "2", "--ledger", "[(2,3)]"]),
        expected
    );
    assert_eq!(
        code(&["pieri", "invert", graph, "--w", "2,1,3", "--r", "2", "--ledger", "[(1,3)]"]),
        2
    );
}

#[test]
fn expand_lists_permutations() {
    assert_eq!(
        stdout(&["pieri", "expand", "2,1,3", "--r", "2", "--m", "1"]),
        "[2,3,1]; [3,1,2]\n"
    );
}

#[test]
fn verify_sweeps() {
    let out = stdout(&["pieri", "verify", "--n", "2", "--r", "1", "--m", "1"]);
    assert_eq!(out, "6 reports, 6 passed, 0 failed (30 checks)\n");
    let json = stdout(&[
        "pieri", "verify", "--w", "1,3,2", "--r", "2", "--m", "1", "--json", "--lemmas",
    ]);
    assert_eq!(json.lines().count(), 3);
    assert!(json.lines().all(|l| l.starts_with("{\"subject\":")));
    let again = stdout(&[
        "pieri", "verify", "--w", "1,3,2", "--r", "2", "--m", "1", "--json", "--lemmas",
    ]);
    assert_eq!(json, again);
}

#[test]
fn verify_execution_modes_agree() {
    let args = [
        "pieri", "verify", "--n", "3", "--r", "2", "--m", "2", "--json",
    ];
    let parallel = stdout(&args);
    let mut sequential_args = args.to_vec();
    sequential_args.push("--sequential");
    assert_eq!(stdout(&sequential_args), parallel);
}
