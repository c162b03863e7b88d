use std::process::Command;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mcg-torsion"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn eval_genus_two_rotation() {
    assert_eq!(
        ok(&["eval", "--system", "chain:g=2", "--word", "C1 C2 C3 C4"]),
        "0 1 0 0\n0 0 1 0\n0 0 0 1\n-1 1 -1 1\n"
    );
}

#[test]
fn eval_word_file() {
    assert_eq!(
        ok(&[
            "eval",
            "--system",
            "torus",
            "--file",
            &data("torus_words.txt")
        ]),
        "# A B A\n0 1\n-1 0\n\n# A B\n0 1\n-1 1\n\n# A B A B\n-1 1\n-1 0\n"
    );
}

#[test]
fn orders() {
    assert_eq!(
        ok(&[
            "order",
            "--system",
            "torus",
            "--word",
            "A B",
            "--assert-periodic"
        ]),
        "6 (certified)\n"
    );
    assert_eq!(
        ok(&["order", "--system", "torus", "--word", "A B"]),
        "6 (homology order; the mapping-class order is a multiple of 6)\n"
    );
    assert_eq!(
        ok(&["order", "--system", "torus", "--word", "A"]),
        "infinite (certified)\n"
    );
    assert_eq!(
        ok(&[
            "order",
            "--system",
            "torus",
            "--assert-periodic",
            "--file",
            &data("torus_words.txt")
        ]),
        "A B A: 4 (certified)\nA B: 6 (certified)\nA B A B: 3 (certified)\n"
    );
    assert_eq!(
        ok(&[
            "order",
            "--system",
            "chain:g=2",
            "--word",
            "C1 C2 C3 C4 C5^2 C4 C3 C2 C1 C1 C2 C3 C4",
            "--assert-periodic"
        ]),
        "5 (certified)\n"
    );
}

#[test]
fn relation_checks() {
    assert_eq!(
        ok(&["relcheck", "--system", "torus", "--lhs", "A B A", "--rhs", "B A B"]),
        "equal\n"
    );
    assert_eq!(
        ok(&["relcheck", "--system", "torus", "--lhs", "A", "--rhs", "B"]),
        "distinct\n"
    );
    assert_eq!(
        ok(&[
            "relcheck",
            "--system",
            "chain:g=2",
            "--lhs",
            "C1 C3",
            "--rhs",
            "C3 C1"
        ]),
        "equal on homology (not conclusive in genus 2)\n"
    );
}

#[test]
fn abelianizations() {
    assert_eq!(
        ok(&["abelianize", "--builtin", "gamma0r:r=6"]),
        "Z/10\nA1 -> (1)\nA2 -> (1)\nA3 -> (1)\nA4 -> (1)\nA5 -> (1)\n"
    );
    let out = ok(&["abelianize", &data("z2_cross_z5.pres")]);
    assert_eq!(out.lines().next(), Some("Z/10"));
    let (code, _, err) = run(&["abelianize", &data("bad.pres")]);
    assert_eq!(code, 1);
    assert!(err.contains("`z`") && err.contains("position 3"), "{err}");
}

#[test]
fn smith_form() {
    assert_eq!(
        ok(&["snf", &data("snf_example.mat")]),
        "2 0\n0 4\ncokernel: Z/2 + Z/4\n"
    );
}

#[test]
fn symmetry_arithmetic() {
    assert_eq!(
        ok(&["admissible", "--spec", "tau5", "--r", "9"]),
        "not realizable\n"
    );
    assert_eq!(
        ok(&["admissible", "--spec", "tau5", "--r", "8"]),
        "realizable\n"
    );
    let census = ok(&["census", "--spec", "tau5", "--r", "0..30"]);
    assert_eq!(census.lines().count(), 32);
    assert!(census.contains("\n9\tno\n") && census.contains("\n8\tyes\n"));
    assert_eq!(
        ok(&["free-quotient", "--g", "2", "--n", "5", "--b", "3"]),
        "0\n"
    );
    assert_eq!(
        ok(&["free-quotient", "--g", "2", "--n", "5", "--b", "4"]),
        "none\n"
    );
    assert_eq!(
        ok(&["z3-profiles", "--g", "1"]),
        "g'\tfixed points\n0\t3\n1\t1\n"
    );
    assert_eq!(
        ok(&[
            "decompose-transposition",
            "--n",
            "5",
            "--i",
            "1",
            "--j",
            "2"
        ]),
        "alpha = (1 2)(3 4)\nbeta = (3 4)\n"
    );
}

#[test]
fn braids() {
    assert_eq!(
        ok(&["braid-perm", "--strands", "2", "--word", "s1"]),
        "(1 2)\n"
    );
    assert_eq!(
        ok(&["braid-perm", "--strands", "4", "--word", "s1 s2 s3"]),
        "(1 2 3 4)\n"
    );
    assert_eq!(
        ok(&[
            "braid-lift",
            "--word",
            "s5 s4 s5 s3 s4 s5 s2 s3 s4 s1 s2 s3 s1 s2 s1"
        ]),
        "C5 C4 C5 C3 C4 C5 C2 C3 C4 C1 C2 C3 C1 C2 C1\n"
    );
}

#[test]
fn theorem() {
    assert_eq!(
        ok(&["theorem", "--g", "2", "--r", "9"]),
        "not generated by torsion; index 5\n"
    );
    assert_eq!(
        ok(&["theorem", "--g", "3", "--r", "17"]),
        "generated by torsion; orders 2\n"
    );
    assert_eq!(
        ok(&["theorem", "--g", "0", "--r", "5"]),
        "generated by torsion; orders 4, 5\n"
    );
    let grid = ok(&["theorem", "--grid", "2,10", "--check"]);
    assert!(!grid.contains("FAIL"));
    assert!(grid.contains("2\t9\t5\tPASS"));
}

#[test]
fn output_is_deterministic() {
    let args = ["theorem", "--grid", "3,8", "--check"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn errors_and_exit_codes() {
    let (code, _, err) = run(&["eval", "--system", "torus", "--word", "A C"]);
    assert_eq!(code, 1);
    assert!(err.contains("`C`") && err.contains("position 3"), "{err}");
    assert_eq!(run(&["eval", "--system", "klein", "--word", "A"]).0, 1);
    assert_eq!(run(&["theorem", "--g", "0", "--r", "1"]).0, 1);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["eval", "--system", "torus", "--bogus"]).0, 2);
    assert_eq!(run(&["census", "--spec", "tau5", "--r", "9..3"]).0, 2);
}
