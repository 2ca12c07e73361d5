use fdiv_core::harness::{random_pair, TrialConfig};

fn frozen() -> (Vec<f64>, Vec<f64>) {
    let text = include_str!("fixtures/golden_pair.txt");
    let mut p = Vec::new();
    let mut q = Vec::new();
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let mut fields = line.split_whitespace();
        let target = match fields.next() {
            Some("p") => &mut p,
            Some("q") => &mut q,
            other => panic!("unexpected fixture row {other:?}"),
        };
        target.extend(fields.map(|f| f.parse::<f64>().unwrap()));
    }
    (p, q)
}

#[test]
fn random_pair_matches_frozen_fixture() {
    let config = TrialConfig {
        seed: 1,
        n_min: 2,
        n_max: 2,
        ..TrialConfig::default()
    };
    let (p, q) = random_pair(&config, 0).unwrap();
    let (fp, fq) = frozen();
    assert_eq!(p.probs(), fp.as_slice());
    assert_eq!(q.probs(), fq.as_slice());
}
