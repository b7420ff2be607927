//! Acceptance criterion 9: the documented example invocations produce their
//! exact outputs and the plot emits the full sorted endpoint table.

use std::process::Command;

use num::{BigInt, BigRational, Zero};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["tribin".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = tribin_cli::run(argv, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Exact rational value of a plain decimal string.
fn parse_decimal(text: &str) -> BigRational {
    let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
    let mut value = BigRational::from_integer(int_part.parse::<BigInt>().unwrap());
    if !frac_part.is_empty() {
        let numerator: BigInt = frac_part.parse().unwrap();
        let denominator = BigInt::from(10).pow(frac_part.len() as u32);
        value += BigRational::new(numerator, denominator);
    }
    value
}

#[test]
fn criterion_9_example_invocations_and_plot() {
    // Example 1: the constant class-zero code evaluates to exactly 0.
    let (status, out, _) = invoke(&["eval", "--s", "3", "--a0", "0,1", "--code", "(1)"]);
    assert_eq!(status, 0);
    assert!(out.contains("0/1"), "eval output: {out}");

    // Example 2: the flipped rule disagrees at the first boundary point,
    // with values exactly 5/6 and 1/6, and a nonzero exit status.
    let (status, out, _) = invoke(&[
        "check", "--s", "3", "--a0", "0,1", "--rule", "7", "--max-rank", "1",
    ]);
    assert_ne!(status, 0);
    for needle in ["2:(0)", "1:(2)", "5/6", "1/6"] {
        assert!(out.contains(needle), "check output misses {needle}: {out}");
    }

    // Example 3: both variation routes agree on the closed-form sums.
    let (status, out, _) = invoke(&[
        "variation", "--s", "3", "--a0", "0,1", "--max-rank", "2", "--method", "both",
    ]);
    assert_eq!(status, 0);
    assert!(out.contains("3/2"), "variation output: {out}");
    assert!(out.contains("9/4"), "variation output: {out}");

    // Plot: 2·3^8 rows at rank 8, sorted by x with equality exactly at the
    // shared endpoints of adjacent cylinders, and every value in [0,1].
    let dir = std::env::temp_dir().join("tribin-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("plot-rank8.csv");
    let (status, _, _) = invoke(&["plot", "--rank", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(status, 0);

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,f"));
    let rows: Vec<(BigRational, BigRational)> = lines
        .map(|line| {
            let (x, f) = line.split_once(',').expect("two columns");
            (parse_decimal(x), parse_decimal(f))
        })
        .collect();
    assert_eq!(rows.len(), 2 * 3usize.pow(8));

    let one = BigRational::from_integer(1.into());
    for (x, f) in &rows {
        assert!(*f >= BigRational::zero() && *f <= one, "f out of range");
        assert!(*x >= BigRational::zero() && *x <= one, "x out of range");
    }
    for pair in rows.chunks_exact(2) {
        assert!(pair[0].0 < pair[1].0, "cylinder endpoints out of order");
    }
    for boundary in rows.chunks_exact(2).collect::<Vec<_>>().windows(2) {
        // Shared endpoint: the max row of one cylinder duplicates the min row
        // of the next, and the function values there agree.
        assert_eq!(boundary[0][1].0, boundary[1][0].0, "gap between cylinders");
        assert_eq!(
            boundary[0][1].1, boundary[1][0].1,
            "boundary values disagree"
        );
    }

    println!("criterion 9 PASS: example invocations exact; plot rank 8 emits {} sorted rows", rows.len());
}

#[test]
fn installed_binary_behaves_like_the_library_entry_point() {
    let output = Command::new(env!("CARGO_BIN_EXE_tribin"))
        .args(["eval", "--code", "(1)"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("0/1"));

    let output = Command::new(env!("CARGO_BIN_EXE_tribin"))
        .args(["check", "--rule", "7", "--max-rank", "1"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
}
