//! End-to-end tests of the binary: golden-file byte equality, determinism,
//! the exit-code contract, and the fixed output schemas. The golden
//! comparison doubles as the CLI acceptance criterion.

use std::process::{Command, Output};

fn optact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = optact(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

const GOLDEN_CASES: &[(&str, &[&str])] = &[
    (
        "classify.json",
        &["classify", "--gamma", "2", "--mu1", "0.1", "--mu2", "0.3"],
    ),
    (
        "transfer.json",
        &[
            "transfer",
            "--gamma",
            "1",
            "--mu1",
            "0",
            "--mu2",
            "2",
            "--z",
            "0.5",
            "--n-steps",
            "1000",
        ],
    ),
    (
        "propagate.csv",
        &[
            "propagate",
            "--gamma",
            "1",
            "--mu1",
            "0",
            "--mu2",
            "0",
            "--z-max",
            "1.5",
            "--samples",
            "4",
        ],
    ),
    (
        "sweep.csv",
        &[
            "sweep",
            "--gamma",
            "1",
            "--mu-from",
            "0.9",
            "--mu-to",
            "1.1",
            "--steps",
            "5",
            "--z",
            "1",
        ],
    ),
    (
        "littlegroup.json",
        &[
            "littlegroup",
            "massive",
            "--mass",
            "1",
            "--momentum",
            "0.75",
            "--theta",
            "1",
        ],
    ),
];

fn golden(name: &str) -> Vec<u8> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

#[test]
fn criterion_10_golden_files_and_determinism() {
    let start = std::time::Instant::now();
    for (file, args) in GOLDEN_CASES {
        let first = stdout_of(args);
        assert_eq!(
            first,
            golden(file),
            "{file}: output differs from the committed golden bytes"
        );
        let second = stdout_of(args);
        assert_eq!(first, second, "{file}: two identical invocations diverged");
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 10 (CLI determinism): PASS  {elapsed:.2}s");
}

#[test]
fn exit_code_contract() {
    // 0: success.
    assert_eq!(
        optact(&["classify", "--gamma", "1", "--mu1", "0", "--mu2", "0"])
            .status
            .code(),
        Some(0)
    );
    // 2: unparsable arguments, with a JSON error object on stderr.
    let out = optact(&["classify", "--gamma", "abc", "--mu1", "0", "--mu2", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("{\"error\":"), "stderr: {err}");
    // 2: missing required flag.
    assert_eq!(optact(&["classify", "--gamma", "1"]).status.code(), Some(2));
    // 2: no subcommand at all.
    assert_eq!(optact(&[]).status.code(), Some(2));
    // 0: asking for help is not an error.
    assert_eq!(optact(&["--help"]).status.code(), Some(0));
    // 2: domain validation (not space-like).
    let out = optact(&[
        "littlegroup",
        "spacelike",
        "--momentum",
        "1",
        "--energy",
        "1.2",
        "--boost",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not space-like"), "stderr: {err}");
    // 1: internal numerical failure (overflowing gain).
    let out = optact(&[
        "transfer", "--gamma", "0", "--mu1", "-2000", "--mu2", "-2000", "--z", "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // 2: non-finite input is rejected before it reaches the math.
    let out = optact(&["classify", "--gamma", "inf", "--mu1", "0", "--mu2", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_regimes_match_the_taxonomy() {
    let parse = |bytes: Vec<u8>| String::from_utf8(bytes).unwrap();
    let out = parse(stdout_of(&[
        "classify", "--gamma", "2", "--mu1", "0.1", "--mu2", "0.3",
    ]));
    assert!(out.contains("\"regime\":\"elliptic\""));
    let out = parse(stdout_of(&[
        "classify", "--gamma", "1", "--mu1", "0", "--mu2", "2",
    ]));
    assert!(out.contains("\"regime\":\"parabolic\""));
    assert!(out.contains("\"k\":null"));
    let out = parse(stdout_of(&[
        "classify", "--gamma", "0.5", "--mu1", "0", "--mu2", "4",
    ]));
    assert!(out.contains("\"regime\":\"hyperbolic\""));
}

#[test]
fn transfer_at_zero_distance_is_the_identity() {
    let out = String::from_utf8(stdout_of(&[
        "transfer", "--gamma", "2", "--mu1", "0.1", "--mu2", "0.3", "--z", "0",
    ]))
    .unwrap();
    assert!(out.contains(
        "\"matrix\":[[1.0000000000000000e0,0.0000000000000000e0],\
         [0.0000000000000000e0,1.0000000000000000e0]]"
            .replace(" ", "")
            .as_str()
    ));
}

#[test]
fn transfer_reports_small_oracle_distance() {
    let out = String::from_utf8(stdout_of(&[
        "transfer",
        "--gamma",
        "2",
        "--mu1",
        "0.1",
        "--mu2",
        "0.3",
        "--z",
        "1",
        "--n-steps",
        "100000",
    ]))
    .unwrap();
    let distance: f64 = out
        .split("\"frobenius_distance\":")
        .nth(1)
        .unwrap()
        .trim_end_matches(['}', '\n'])
        .parse()
        .unwrap();
    assert!(distance <= 1e-4, "distance {distance:e}");
}

fn csv_rows(bytes: Vec<u8>) -> Vec<Vec<String>> {
    String::from_utf8(bytes)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn propagate_schema_and_physics() {
    let rows = csv_rows(stdout_of(&[
        "propagate",
        "--gamma",
        "1",
        "--mu1",
        "0",
        "--mu2",
        "0",
        "--z-max",
        "1.2",
        "--samples",
        "7",
    ]));
    assert_eq!(
        rows[0],
        vec![
            "z",
            "ex_re",
            "ex_im",
            "ey_re",
            "ey_im",
            "intensity_x",
            "intensity_y",
            "intensity_total",
            "azimuth",
            "ellipticity"
        ]
    );
    assert_eq!(rows.len(), 8);
    // Pure rotator, linear-x input: azimuth advances linearly with z.
    for row in &rows[1..] {
        let z: f64 = row[0].parse().unwrap();
        let azimuth: f64 = row[8].parse().unwrap();
        assert!((azimuth - z).abs() < 1e-12, "z={z} azimuth={azimuth}");
    }

    // Isotropic loss: total intensity decays as e^(-2 lambda z).
    let rows = csv_rows(stdout_of(&[
        "propagate",
        "--gamma",
        "0",
        "--mu1",
        "0.4",
        "--mu2",
        "0.4",
        "--z-max",
        "2.0",
        "--samples",
        "5",
    ]));
    for row in &rows[1..] {
        let z: f64 = row[0].parse().unwrap();
        let total: f64 = row[7].parse().unwrap();
        assert!((total - (-0.8 * z).exp()).abs() < 1e-12);
    }
}

#[test]
fn sweep_crosses_the_boundary_without_non_finite_values() {
    let rows = csv_rows(stdout_of(&[
        "sweep",
        "--gamma",
        "1",
        "--mu-from",
        "0.9",
        "--mu-to",
        "1.1",
        "--steps",
        "201",
        "--z",
        "1",
    ]));
    assert_eq!(
        rows[0],
        vec!["mu", "regime", "m11", "m12", "m21", "m22", "det"]
    );
    assert_eq!(rows.len(), 202);
    for row in &rows[1..] {
        for (i, field) in row.iter().enumerate() {
            if i == 1 {
                assert!(["elliptic", "parabolic", "hyperbolic"].contains(&field.as_str()));
            } else {
                let v: f64 = field.parse().unwrap();
                assert!(v.is_finite(), "non-finite {field} in {row:?}");
            }
        }
        // Lossless sweep: the det column sits at 1.
        let det: f64 = row[6].parse().unwrap();
        assert!((det - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn sweep_with_two_steps_emits_exactly_two_rows() {
    let rows = csv_rows(stdout_of(&[
        "sweep",
        "--gamma",
        "1",
        "--mu-from",
        "0",
        "--mu-to",
        "2",
        "--steps",
        "2",
        "--z",
        "1",
    ]));
    assert_eq!(rows.len(), 3); // header + 2 data rows
    assert_eq!(rows[1][0].parse::<f64>().unwrap(), 0.0);
    assert_eq!(rows[2][0].parse::<f64>().unwrap(), 2.0);
}

#[test]
fn littlegroup_residuals_are_tiny() {
    for args in [
        vec![
            "littlegroup",
            "massive",
            "--mass",
            "1",
            "--momentum",
            "0.75",
            "--theta",
            "1.0",
        ],
        vec![
            "littlegroup",
            "spacelike",
            "--momentum",
            "1",
            "--energy",
            "0.6",
            "--boost",
            "1.5",
        ],
        vec![
            "littlegroup",
            "lightlike",
            "--momentum",
            "2",
            "--gauge",
            "0.5",
        ],
    ] {
        let out = String::from_utf8(stdout_of(&args)).unwrap();
        let residual: f64 = out
            .split("\"residual\":")
            .nth(1)
            .unwrap()
            .trim_end_matches(['}', '\n'])
            .parse()
            .unwrap();
        assert!(residual <= 1e-12, "{args:?}: residual {residual:e}");
    }
}

#[test]
fn littlegroup_csv_has_the_flattened_schema() {
    let rows = csv_rows(stdout_of(&[
        "littlegroup",
        "lightlike",
        "--momentum",
        "2",
        "--gauge",
        "0.5",
        "--format",
        "csv",
    ]));
    assert_eq!(rows[0][0], "kind");
    assert_eq!(rows[0][1], "param");
    assert_eq!(rows[0][2], "ref_x");
    assert_eq!(rows[0][6], "m00");
    assert_eq!(rows[0][22], "residual");
    assert_eq!(rows[1][0], "lightlike");
    assert_eq!(rows.len(), 2);
}

#[test]
fn json_format_is_available_for_streams() {
    let out = String::from_utf8(stdout_of(&[
        "propagate",
        "--gamma",
        "1",
        "--mu1",
        "0",
        "--mu2",
        "0",
        "--z-max",
        "1.0",
        "--samples",
        "2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert!(out.starts_with("[{\"z\":"));
    assert!(out.contains("\"ellipticity\":"));
    let out = String::from_utf8(stdout_of(&[
        "sweep",
        "--gamma",
        "1",
        "--mu-from",
        "0",
        "--mu-to",
        "1",
        "--steps",
        "2",
        "--z",
        "1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert!(out.starts_with("[{\"mu\":"));
    assert!(out.contains("\"regime\":"));
}
