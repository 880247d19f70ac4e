//! Golden-file test of the documented JSON layout for dihedral spaces.
//! Exact mode is deterministic, so the serialized quotient is stable.

use cyclotomy::dihedral::{build_space, serialize_space, Variant};

#[test]
fn d_8_2_1_matches_golden_file() {
    let space = build_space(8, 2, 1, Variant::D).unwrap();
    let got = serde_json::to_string_pretty(&serialize_space(&space)).unwrap();
    let want = include_str!("golden/d_8_2_1.json");
    assert_eq!(got.trim(), want.trim());
}

#[test]
fn serialization_shape() {
    let space = build_space(1, 1, 5, Variant::DHat).unwrap();
    let v = serialize_space(&space);
    assert_eq!(v["ambient"], 5);
    assert_eq!(v["dim"], 3); // (p+1)/2 with I_1(e:e) kept
    assert_eq!(v["grading"]["N"], 5);
    // rows are arrays of [index, num, den] triples
    let row = &v["relation_rows"][0][0];
    assert!(row[0].is_number());
    assert!(row[1].is_string() && row[2].is_string());
}
