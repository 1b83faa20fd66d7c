use tverberg::parallel::par_find_counterexample;
use tverberg::verify::{verify_payload, verify_report};
use tverberg::{Evidence, Payload, ReportRecord};
use tverberg_core::{
    find_counterexample, hulls_common_point, Point, SearchStrategy,
};

fn pts(v: &[&[i64]]) -> Vec<Point> {
    v.iter().map(|c| Point::from_ints(c)).collect()
}

fn json_round_trip(p: &Payload) -> Payload {
    serde_json::from_str(&serde_json::to_string(p).unwrap()).unwrap()
}

#[test]
fn every_evidence_kind_survives_json() {
    let cases = [
        vec![pts(&[&[0, 0], &[2, 2]]), pts(&[&[0, 2], &[2, 0]])],
        vec![pts(&[&[0, 0], &[1, 0]]), pts(&[&[0, 5], &[1, 5]])],
        vec![pts(&[&[0, 0], &[4, 0], &[0, 4]]), pts(&[&[1, 1]]), pts(&[&[3, 3], &[0, 9]])],
        vec![pts(&[&[0, 0]]), vec![]],
        vec![pts(&[&[0, 0], &[6, 0]]), pts(&[&[0, 1], &[6, 1]]), pts(&[&[3, -5], &[3, 5]])],
    ];
    let mut kinds = Vec::new();
    for blocks in cases {
        let outcome = hulls_common_point(&blocks).unwrap();
        let p = Payload::hulls(2, &blocks, &outcome);
        let back = json_round_trip(&p);
        assert_eq!(back, p);
        assert_eq!(verify_payload(&back).unwrap(), outcome.is_feasible());
        if let Payload::HullIntersection { evidence, .. } = &back {
            kinds.push(serde_json::to_value(evidence).unwrap()["type"].as_str().unwrap().to_string());
        }
    }
    for k in ["witness", "separation", "empty-block", "farkas"] {
        assert!(kinds.iter().any(|x| x == k), "{k} not covered by {kinds:?}");
    }
}

#[test]
fn tampered_payloads_are_rejected() {
    let blocks = vec![pts(&[&[0, 0], &[1, 0]]), pts(&[&[0, 5], &[1, 5]])];
    let outcome = hulls_common_point(&blocks).unwrap();
    let mut v = serde_json::to_value(Payload::hulls(2, &blocks, &outcome)).unwrap();
    v["blocks"][1][0][1] = "-1".into();
    let p: Payload = serde_json::from_value(v).unwrap();
    assert!(verify_payload(&p).is_err());

    let blocks = vec![pts(&[&[0, 0], &[2, 2]]), pts(&[&[0, 2], &[2, 0]])];
    let outcome = hulls_common_point(&blocks).unwrap();
    let mut v = serde_json::to_value(Payload::hulls(2, &blocks, &outcome)).unwrap();
    v["evidence"]["point"][0] = "3/7".into();
    assert!(verify_payload(&serde_json::from_value(v).unwrap()).is_err());

    let bad: Result<Payload, _> = serde_json::from_str(
        r#"{"kind":"hull-intersection","dim":1,"blocks":[[["1/0"]]],"evidence":{"type":"empty-block","block":0}}"#,
    );
    assert!(bad.is_err());
}

#[test]
fn tetrahedra_certificate_replays_from_json_alone() {
    let (c, _) = tverberg_core::figure2_counterexample().unwrap();
    let record = ReportRecord::new("verify-figure2", serde_json::json!({}), serde_json::json!({}))
        .certificate(Payload::counterexample(&c));
    let checks = verify_report(&record.to_line()).unwrap();
    assert_eq!(checks.len(), 1);
    assert!(matches!(checks[0].result, Some(Ok(false))));

    let mut v = serde_json::to_value(&record).unwrap();
    v["certificate"]["alphas"][15] = "-10".into();
    let line = serde_json::to_string(&v).unwrap();
    assert!(matches!(verify_report(&line).unwrap()[0].result, Some(Err(_))));
    assert!(verify_report("not json").is_err());
}

#[test]
fn evidence_round_trips_to_core() {
    let blocks = vec![pts(&[&[0, 0], &[6, 0]]), pts(&[&[0, 1], &[6, 1]]), pts(&[&[3, -5], &[3, 5]])];
    let outcome = hulls_common_point(&blocks).unwrap();
    assert_eq!(Evidence::from_outcome(&outcome).to_outcome().unwrap(), outcome);
}

#[test]
fn parallel_search_matches_sequential() {
    for (d, r, n, budget) in [(2, 3, 8, 400), (2, 2, 4, 300), (3, 3, 9, 300), (1, 3, 5, 10)] {
        for seed in [0, 5] {
            let s = SearchStrategy::clustered(r, seed);
            let seq = find_counterexample(d, r, n, &s, budget).unwrap();
            let par = par_find_counterexample(d, r, n, &s, budget).unwrap();
            assert_eq!(seq, par, "d={d} r={r} n={n} seed={seed}");
        }
    }
    let s = SearchStrategy::clustered(3, 0);
    assert!(par_find_counterexample(2, 3, 2, &s, 10).is_err());
}
