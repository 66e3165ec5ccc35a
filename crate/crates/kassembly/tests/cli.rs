//! CLI contract tests: canonical JSON round-trips byte-identically, and
//! the table and JSON formats agree on every group value.

use kassembly::ahss::Page;
use kassembly::assembly::{AssemblyResult, SmashingReport};
use kassembly::cli::run;
use kassembly::kfield::GradedAb;

fn run_ok(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("kassembly").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    assert_eq!(
        code,
        0,
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&err)
    );
    String::from_utf8(out).unwrap()
}

fn graded_invocations() -> Vec<Vec<&'static str>> {
    vec![
        vec!["kfield", "--q", "2", "--max", "8"],
        vec!["kfield", "--q", "9", "--max", "5"],
        vec!["homology", "--group", "Q", "--max", "4"],
        vec![
            "homology", "--group", "Z^2+Q", "--max", "4", "--coeff", "F2",
        ],
        vec!["tor", "--group", "Q", "--field", "2", "--max", "3"],
        vec!["tor", "--group", "Z", "--field", "3", "--max", "3"],
        vec!["relative", "--group", "Q", "--field", "2", "--max", "6"],
    ]
}

fn round_trip<T>(json: &str)
where
    T: serde::Serialize + serde::de::DeserializeOwned,
{
    let value: T = serde_json::from_str(json.trim()).expect("parse emitted JSON");
    assert_eq!(
        serde_json::to_string(&value).unwrap(),
        json.trim(),
        "re-serialization must be byte-identical"
    );
}

#[test]
fn json_round_trips_byte_identically() {
    for args in graded_invocations() {
        let mut with_json = args.clone();
        with_json.extend(["--format", "json"]);
        round_trip::<GradedAb>(&run_ok(&with_json));
    }
    round_trip::<SmashingReport>(&run_ok(&[
        "smashing", "--group", "Q", "--field", "2", "--format", "json",
    ]));
    round_trip::<SmashingReport>(&run_ok(&[
        "smashing", "--group", "Z", "--field", "2", "--format", "json",
    ]));
    round_trip::<Page>(&run_ok(&[
        "e2", "--group", "Q", "--field", "2", "--max", "8", "--format", "json",
    ]));
    round_trip::<AssemblyResult>(&run_ok(&[
        "assemble", "--group", "Q", "--field", "2", "--max", "8", "--format", "json",
    ]));
    round_trip::<AssemblyResult>(&run_ok(&[
        "assemble", "--group", "Z", "--field", "3", "--max", "5", "--format", "json",
    ]));
    round_trip::<GradedAb>(&run_ok(&[
        "relative", "--group", "1", "--field", "4", "--max", "4", "--format", "json",
    ]));
}

#[test]
fn table_and_json_agree_on_every_group() {
    for args in graded_invocations() {
        let table = run_ok(&args);
        let mut with_json = args.clone();
        with_json.extend(["--format", "json"]);
        let graded: GradedAb = serde_json::from_str(run_ok(&with_json).trim()).unwrap();
        for (n, group) in graded.groups().iter().enumerate() {
            let row = format!("{n} | {group}");
            assert!(
                table.lines().any(|l| l.trim_start() == row),
                "row '{row}' missing from table for {args:?}:\n{table}"
            );
        }
    }
}

#[test]
fn assemble_table_agrees_with_json() {
    let args = ["assemble", "--group", "Q", "--field", "2", "--max", "8"];
    let table = run_ok(&args);
    let json = run_ok(&[
        "assemble", "--group", "Q", "--field", "2", "--max", "8", "--format", "json",
    ]);
    let result: AssemblyResult = serde_json::from_str(json.trim()).unwrap();
    for (n, group) in result.k_groups.groups().iter().enumerate() {
        let row = format!("{n} | {group}");
        assert!(
            table.lines().any(|l| l.trim_start() == row),
            "row '{row}' missing:\n{table}"
        );
    }
}

#[test]
fn e2_json_lists_exactly_the_nonzero_entries() {
    let json = run_ok(&[
        "e2", "--group", "Q", "--field", "2", "--max", "8", "--format", "json",
    ]);
    let page: Page = serde_json::from_str(json.trim()).unwrap();
    assert_eq!((page.r(), page.p_max(), page.q_max()), (2, 1, 8));
    let listed: Vec<(i64, i64)> = [(0, 0), (1, 0), (0, 3), (0, 5), (0, 7)].to_vec();
    for (p, q) in &listed {
        assert!(!page.entry(*p, *q).is_zero());
    }
    // the serialized form carries nonzero entries only
    assert_eq!(
        json.matches("[0,0,").count() + json.matches("[1,0,").count(),
        2
    );
    assert_eq!(json.matches(r#""free""#).count(), 5);
}
