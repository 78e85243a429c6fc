use ptsga::output::to_json;
use ptsga::{verify, Relation, RunConfig, VerificationReport};

#[test]
fn report_round_trips_through_json() {
    let report = verify(&RunConfig::with_nu(3.7)).unwrap();
    let bytes = to_json(&report).unwrap();
    let back: VerificationReport = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(back, report);
    assert_eq!(to_json(&back).unwrap(), bytes);
}

#[test]
fn overall_pass_is_conjunction() {
    let report = verify(&RunConfig::with_nu(1.5)).unwrap();
    assert_eq!(report.pass, report.relations.iter().all(|r| r.pass));
    let mut names: Vec<&str> = report.relations.iter().map(|r| r.name.as_str()).collect();
    let total = names.len();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), total);
}

#[test]
fn nan_residual_survives_as_failure() {
    let r = Relation::new("broken", f64::NAN, 1e-8);
    let s = String::from_utf8(to_json(&r).unwrap()).unwrap();
    assert!(s.contains("\"residual\":null"));
    let back: Relation = serde_json::from_str(&s).unwrap();
    assert!(back.residual.is_nan() && !back.pass);
}

#[test]
fn tolerance_scale_loosens_every_relation() {
    let mut c = RunConfig::with_nu(2.0);
    c.use_uncorrected_f = true;
    c.tolerance_scale = 1e9;
    let report = verify(&c).unwrap();
    assert!(report.pass);
    assert!(report.relations.iter().all(|r| r.tolerance >= 1e-3));
}
