use std::fs;
use std::path::PathBuf;

use swdual::hecke::build_t;
use swdual::linalg::{rank, Mat};
use swdual::qfield::RatFunc;
use swdual::qsuper::{rho_r, SuperGen};
use swdual::superspace::SuperDims;

fn fixture(name: &str) -> Mat<RatFunc> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    Mat::from_json(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn t_matches_hand_written_matrices() {
    assert_eq!(build_t(SuperDims::new(1, 1).unwrap()), fixture("t_gl11.json"));
    assert_eq!(build_t(SuperDims::new(2, 1).unwrap()), fixture("t_gl21.json"));
}

#[test]
fn two_site_raising_operator_matches_fixture() {
    let ds = SuperDims::new(1, 1).unwrap();
    assert_eq!(rho_r(&SuperGen::E(1), 2, ds).unwrap(), fixture("rho2_e1_gl11.json"));
}

#[test]
fn fixture_round_trip() {
    let t = fixture("t_gl21.json");
    assert_eq!(Mat::from_json(&t.to_json()).unwrap(), t);
    assert_eq!(rank(&t), 9);
}

#[test]
fn malformed_fixtures_are_rejected() {
    assert!(Mat::<RatFunc>::from_json("[[\"q\"], [\"1\", \"2\"]]").is_err());
    assert!(Mat::<RatFunc>::from_json("[[\"q +\"]]").is_err());
    assert!(Mat::<RatFunc>::from_json("{}").is_err());
}
