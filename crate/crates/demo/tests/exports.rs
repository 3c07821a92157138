use scalefree::analytic_pmf::pmf_sublinear;
use scalefree::cli_io::NetworkModel;
use scalefree::powerlaw_fit::fit_power_law;
use scalefree::RngSeed;
use scalefree_demo::{pmf_curves_json, simulate_json, verify_ba_json};
use serde_json::Value;

#[test]
fn simulation_matches_the_library() {
    let v: Value = serde_json::from_str(&simulate_json("rsl", 20_000, 1.0, 3).unwrap()).unwrap();
    let g = NetworkModel::Rsl { c: 1.0 }.generate(20_000, RngSeed(3)).unwrap();
    let fit = fit_power_law(g.degrees()).unwrap();
    assert_eq!(v["edges"].as_u64().unwrap() as usize, g.edge_count());
    assert!((v["alpha"].as_f64().unwrap() - fit.alpha).abs() < 1e-14);
    assert_eq!(v["kmin"].as_u64().unwrap(), fit.kmin);
    assert!(v["fit_error"].is_null());
}

#[test]
fn curves_match_the_library() {
    let v: Value = serde_json::from_str(&pmf_curves_json(0.3, 1, 200).unwrap()).unwrap();
    for (i, p) in v["sublinear"].as_array().unwrap().iter().enumerate() {
        // serde_json's default float parser may be off by an ulp
        let expected = pmf_sublinear(0.3, i as u64 + 1).unwrap();
        assert!((p.as_f64().unwrap() - expected).abs() <= 1e-15 * expected);
    }
}

#[test]
fn fixed_point_report_shape() {
    let v: Value = serde_json::from_str(&verify_ba_json(3, 1_000_000, 500).unwrap()).unwrap();
    assert_eq!(v["k_range"], serde_json::json!([4, 500]));
    assert_eq!(v["per_t"][0][0], 1_000_000);
    assert!(v["max_abs_error"].as_f64().unwrap() < 1e-12);
    assert!(verify_ba_json(3, 100, 3).is_err());
}
