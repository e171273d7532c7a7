use chromsym::formulas::*;
use chromsym::serial::{from_json, parse_text, to_json};
use chromsym::FamilyKind;

#[test]
fn b3_closed_forms_match_general_ones() {
    for a in 3..=7 {
        for l in 0..=4 {
            assert_eq!(
                x_kpk_b3(a, l).unwrap(),
                x_kpk(a, 3, l).unwrap(),
                "a={a} l={l}"
            );
        }
    }
    for a in 1..=5 {
        for g in 0..=3 {
            for h in 0..=3 {
                assert_eq!(
                    x_kpkp_b3(a, g, h).unwrap(),
                    x_kpkp(a, g, 3, h).unwrap(),
                    "a={a} g={g} h={h}"
                );
            }
        }
    }
}

#[test]
fn tadpoles_and_infinity_graphs() {
    for c in 2..=7 {
        for l in 0..=4 {
            assert_eq!(x_tadpole(c, l).unwrap(), x_kpc(1, l, c).unwrap());
        }
    }
    for a in 3..=7 {
        for b in 3..=7 {
            assert_eq!(x_kayak(a, b, 0).unwrap(), x_infinity(a, b).unwrap());
        }
    }
}

#[test]
fn evaluator_output_round_trips() {
    for fam in FamilyKind::ALL.into_iter().flat_map(|k| k.grid(8)) {
        let x = fam.evaluate().unwrap();
        assert_eq!(from_json(&to_json(&x)).unwrap(), x, "{fam}");
        assert_eq!(parse_text(&x.to_string()).unwrap(), x, "{fam}");
    }
}
