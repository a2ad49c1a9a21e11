use std::path::PathBuf;
use std::process::Command as Process;

use clap::Parser;
use listheap::HeapKind;
use listheap_bench::report::to_csv;
use listheap_bench::{run_dijkstra, run_measure, run_sort, run_trace, Cli, Command, RunRecord};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn parse(args: &[&str]) -> Command {
    let mut argv = vec!["listheap-bench"];
    argv.extend_from_slice(args);
    Cli::try_parse_from(argv).expect("valid flags").command
}

fn sort(args: &[&str]) -> Vec<RunRecord> {
    match parse(args) {
        Command::Sort(a) => run_sort(&a).unwrap().records,
        other => panic!("not a sort command: {other:?}"),
    }
}

fn record<'a>(records: &'a [RunRecord], heap: &str) -> &'a RunRecord {
    records
        .iter()
        .find(|r| r.heap == heap)
        .expect("heap present")
}

#[test]
fn decreasing_input_separates_ra_from_binary() {
    let records = sort(&[
        "sort",
        "--heap",
        "all",
        "--order",
        "decreasing",
        "--n",
        "100000",
    ]);
    let ra = record(&records, "ra");
    let bin = record(&records, "binary");
    assert_eq!(ra.final_k, Some(1));
    assert_eq!(ra.total_cmps, 99_999);
    assert_eq!(bin.final_k, None);
    assert!(
        bin.total_cmps > 5 * ra.total_cmps,
        "{} vs {}",
        bin.total_cmps,
        ra.total_cmps
    );
}

#[test]
fn single_key_binary_drain_is_free() {
    let records = sort(&["sort", "--heap", "binary", "--n", "1"]);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].total_cmps, 0);
    assert_eq!(records[0].max_delmin_cmps, 0);
}

#[test]
fn sample_file_gives_five_ea_lists() {
    let file = data("sample16.seq");
    let records = sort(&["sort", "--heap", "ea", "--seq-file", &file]);
    assert_eq!(records[0].final_k, Some(5));
    assert_eq!(records[0].workload, "file:sample16.seq");
    let records = sort(&["sort", "--heap", "ra", "--seq-file", &file]);
    assert_eq!(records[0].final_k, Some(7));
}

#[test]
fn runs_are_reproducible_and_parallel_safe() {
    let args = [
        "sort", "--order", "random", "--order", "runs:7", "--order", "sus:9", "--n", "3000",
        "--seed", "11",
    ];
    let strip = |rs: Vec<RunRecord>| -> Vec<RunRecord> {
        rs.into_iter()
            .map(|r| RunRecord { wall_ns: 0, ..r })
            .collect()
    };
    let a = strip(sort(&args));
    let b = strip(sort(&args));
    let mut par = args.to_vec();
    par.push("--parallel");
    let c = strip(sort(&par));
    assert_eq!(a.len(), 9);
    assert_eq!(a, b);
    assert_eq!(a, c);
    for r in a
        .iter()
        .filter(|r| r.workload == "sort:runs:7" && r.heap != "binary")
    {
        assert_eq!(r.final_k, Some(7), "{}", r.heap);
    }
}

#[test]
fn machine_output_mirrors_records() {
    let records = sort(&[
        "sort",
        "--order",
        "increasing",
        "--order",
        "random",
        "--n",
        "500",
    ]);
    let csv = to_csv(&records).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let from_csv: Vec<RunRecord> = reader.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(from_csv, records);
    let json = serde_json::to_string(&records).unwrap();
    let from_json: Vec<RunRecord> = serde_json::from_str(&json).unwrap();
    assert_eq!(from_json, records);
}

#[test]
fn dijkstra_on_generated_graph() {
    let Command::Dijkstra(args) = parse(&[
        "dijkstra", "--gen", "20000", "80000", "--seed", "4", "--heap", "all",
    ]) else {
        unreachable!()
    };
    let outcome = run_dijkstra(&args).unwrap();
    assert_eq!(outcome.report.records.len(), 3);
    assert_eq!(outcome.dist.len(), 20_000);
    assert!(outcome.dist.iter().all(Option::is_some));
    let mean = |kind| {
        outcome
            .stats
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, s)| s.mean_delete_min_comparisons())
            .unwrap()
    };
    assert!(
        mean(HeapKind::Ra) <= mean(HeapKind::Binary),
        "{} vs {}",
        mean(HeapKind::Ra),
        mean(HeapKind::Binary)
    );
}

#[test]
fn dijkstra_two_cycle_file() {
    let file = data("two_cycle.gr");
    let Command::Dijkstra(args) = parse(&["dijkstra", "--graph-file", &file, "--source", "1"])
    else {
        unreachable!()
    };
    let outcome = run_dijkstra(&args).unwrap();
    assert_eq!(outcome.dist, vec![Some(0), Some(7)]);

    let Command::Dijkstra(args) = parse(&["dijkstra", "--graph-file", &file, "--source", "3"])
    else {
        unreachable!()
    };
    assert!(run_dijkstra(&args).is_err());
}

#[test]
fn measure_outputs() {
    let Command::Measure(args) = parse(&["measure", "--order", "increasing", "--n", "10"]) else {
        unreachable!()
    };
    assert_eq!(
        run_measure(&args).unwrap(),
        "increasing: n=10 runs=10 SUS=1 Enc=1\n"
    );

    let file = data("sample16.seq");
    let Command::Measure(args) = parse(&["measure", "--seq-file", &file, "--partitions"]) else {
        unreachable!()
    };
    let text = run_measure(&args).unwrap();
    assert!(text.starts_with("sample16.seq: n=16 runs=8 SUS=7 Enc=5\n"));
    assert!(text.contains("Enc:  [1 3 15 16] [2 4 14] [5 9 13] [6 10 12] [7 8 11]"));

    let Command::Measure(args) = parse(&["measure", "--seq-file", &file, "--format", "json"])
    else {
        unreachable!()
    };
    let v: serde_json::Value = serde_json::from_str(&run_measure(&args).unwrap()).unwrap();
    assert_eq!(
        (v["runs"].as_u64(), v["sus"].as_u64(), v["enc"].as_u64()),
        (Some(8), Some(7), Some(5))
    );
}

fn trace(args: &[&str]) -> anyhow::Result<Vec<String>> {
    match parse(args) {
        Command::Trace(a) => run_trace(&a),
        other => panic!("not a trace command: {other:?}"),
    }
}

#[test]
fn trace_final_states() {
    let file = data("sample16.seq");
    let ra = trace(&["trace", "--heap", "ra", "--seq-file", &file]).unwrap();
    assert_eq!(ra.len(), 16);
    assert!(
        ra[15].ends_with("[1 3] [4 14 15] [2 8 9] [5 13] [6 10 12] [11] [7 16]"),
        "{}",
        ra[15]
    );
    let ea = trace(&[
        "trace",
        "--heap",
        "ea",
        "--keys",
        "3,15,14,4,9,13,5,12,10,6,1,11,8,16,2,7",
    ])
    .unwrap();
    assert!(
        ea[15].ends_with("[1 3 15 16] [2 4 14] [5 9 13] [6 10 12] [7 8 11]"),
        "{}",
        ea[15]
    );
    let both = trace(&["trace", "--seq-file", &file, "--drain"]).unwrap();
    assert_eq!(both.len(), 64);
    assert!(both[31].ends_with("k=0"));
}

#[test]
fn trace_scripts_and_guards() {
    assert!(trace(&["trace"]).unwrap().is_empty());
    assert!(trace(&["trace", "--heap", "ra", "--drain"])
        .unwrap()
        .is_empty());

    let log = trace(&[
        "trace",
        "--heap",
        "ra",
        "--ops",
        "i:3 i:15 i:14 i:4 k:15:14.5 k:14:2.5 d",
    ])
    .unwrap();
    assert!(log[4].ends_with("[3] [4 14 14.5]"), "{}", log[4]);
    assert!(log[5].contains("decrease 14 -> 2.5"));
    assert!(log[5].ends_with("[2.5 3] [4 14.5]"), "{}", log[5]);
    assert!(log[6].contains("delete_min -> 2.5"));

    assert!(trace(&["trace", "--heap", "binary", "--keys", "1"]).is_err());
    assert!(trace(&["trace", "--n", "65"]).is_err());
    assert!(trace(&["trace", "--n", "5", "--limit", "4"]).is_err());
    assert!(trace(&["trace", "--ops", "d"]).is_err());
    assert!(trace(&["trace", "--ops", "x:1"]).is_err());
    assert!(trace(&["trace", "--ops", "k:9:1"]).is_err());
}

#[test]
fn invalid_flag_combinations_are_rejected() {
    let bad: [&[&str]; 4] = [
        &["listheap-bench", "dijkstra"],
        &["listheap-bench", "dijkstra", "--gen", "10"],
        &["listheap-bench", "sort", "--order", "sideways"],
        &[
            "listheap-bench",
            "sort",
            "--order",
            "random",
            "--seq-file",
            "x.seq",
        ],
    ];
    for argv in bad {
        assert!(Cli::try_parse_from(argv).is_err(), "{argv:?}");
    }
}

#[test]
fn binary_writes_requested_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("runs.csv");
    let status = Process::new(env!("CARGO_BIN_EXE_listheap-bench"))
        .args(["sort", "--n", "200", "--format", "csv", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("heap,workload,n,m,seed,total_cmps,max_delmin_cmps,final_k,wall_ns\n"));

    let output = Process::new(env!("CARGO_BIN_EXE_listheap-bench"))
        .args(["dijkstra", "--graph-file", "missing.gr"])
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).starts_with("error: reading missing.gr"));
}
