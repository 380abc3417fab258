use spinbits::verify::{criterion, VerifyOptions};

#[test]
fn corrupting_one_sigma_entry_fails_only_the_matrix_check() {
    let clean = criterion(3, &VerifyOptions::default());
    assert!(clean.passed());
    let opts = VerifyOptions {
        corrupt_sigma: Some((4, 9)),
        ..VerifyOptions::default()
    };
    let corrupted = criterion(3, &opts);
    let failed: Vec<&str> = corrupted.report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["sigma* equals the printed 28x28 array"]);
    assert_eq!(corrupted.report.checks[0].witness["cells"], serde_json::json!([[4, 9]]));
}

#[test]
fn zero_samples_skips_property_checks_only() {
    let opts = VerifyOptions {
        samples: 0,
        ..VerifyOptions::default()
    };
    let full = criterion(7, &VerifyOptions::default());
    let golden = criterion(7, &opts);
    assert!(golden.report.total() < full.report.total());
    assert!(golden.report.checks.iter().all(|c| !c.name.contains("multiplicativity")));
    assert!(golden.report.checks.iter().any(|c| c.name.contains("64 cells")));
    assert!(golden.passed());

    let structure = criterion(10, &opts);
    assert!(structure.report.checks.iter().all(|c| !c.name.starts_with('<')));
    assert!(structure.passed());
}

#[test]
fn criteria_are_deterministic_for_a_seed() {
    let opts = VerifyOptions {
        seed: 7,
        samples: 10,
        corrupt_sigma: None,
    };
    let a = serde_json::to_value(criterion(10, &opts).report).unwrap();
    let b = serde_json::to_value(criterion(10, &opts).report).unwrap();
    assert_eq!(a, b);
}
