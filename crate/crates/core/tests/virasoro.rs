use std::collections::BTreeSet;

use fischer_lab::rational::{format_rational, int, rat, Rational};
use fischer_lab::virasoro::{central_charge, fuse, irreducibles, sigma_sector, weight, weight_exists, Label};
use proptest::prelude::*;
use serde_json::Value;

fn fixture(m: u32) -> Value {
    let path = format!("{}/tests/fixtures/virasoro_m{m}.json", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn pair(v: &Value) -> (u32, u32) {
    (v[0].as_u64().unwrap() as u32, v[1].as_u64().unwrap() as u32)
}

#[test]
fn golden_tables_up_to_m4() {
    for m in 1..=4 {
        let doc = fixture(m);
        assert_eq!(doc["central_charge"], format_rational(&central_charge(m).unwrap()));
        let labels = irreducibles(m).unwrap();
        let expected = doc["labels"].as_array().unwrap();
        assert_eq!(labels.len(), expected.len());
        for (l, e) in labels.iter().zip(expected) {
            assert_eq!((l.r, l.s), (e["r"].as_u64().unwrap() as u32, e["s"].as_u64().unwrap() as u32));
            assert_eq!(format_rational(&l.weight()), e["weight"].as_str().unwrap());
            assert_eq!(i64::from(l.tau_sign()), e["tau"].as_i64().unwrap());
            assert_eq!(l.sigma_sign().ok().map(i64::from), e["sigma"].as_i64());
        }
        for row in doc["fusion"].as_array().unwrap() {
            let (r, s) = pair(&row["left"]);
            let (rr, ss) = pair(&row["right"]);
            let got: Vec<(u32, u32)> = fuse(&Label::new(m, r, s).unwrap(), &Label::new(m, rr, ss).unwrap())
                .unwrap()
                .iter()
                .map(|l| (l.r, l.s))
                .collect();
            let want: Vec<(u32, u32)> = row["product"].as_array().unwrap().iter().map(pair).collect();
            assert_eq!(got, want, "m = {m}: ({r},{s}) x ({rr},{ss})");
        }
    }
}

#[test]
fn weight_symmetry_up_to_m8() {
    for m in 1..=8u32 {
        for r in 1..=m + 1 {
            for s in 1..=m + 2 {
                assert_eq!(weight(m, r, s).unwrap(), weight(m, m + 2 - r, m + 3 - s).unwrap());
            }
        }
    }
}

#[test]
fn vacuum_is_a_unit_up_to_m8() {
    for m in 1..=8 {
        let vac = Label::vacuum(m).unwrap();
        for l in irreducibles(m).unwrap() {
            assert_eq!(fuse(&vac, &l).unwrap(), vec![l]);
            assert_eq!(fuse(&l, &vac).unwrap(), vec![l]);
        }
    }
}

#[test]
fn central_charge_increases_towards_one() {
    let mut prev = int(0);
    for m in 1..=50 {
        let c = central_charge(m).unwrap();
        assert!(c > prev && c < int(1));
        prev = c;
    }
}

#[test]
fn fusion_grading_exhaustive_up_to_m6() {
    for m in 1..=6 {
        let labels = irreducibles(m).unwrap();
        let sector: BTreeSet<Label> = sigma_sector(m).unwrap().into_iter().collect();
        for a in &labels {
            for b in &labels {
                let ab = fuse(a, b).unwrap();
                assert!(!ab.is_empty());
                assert_eq!(ab, fuse(b, a).unwrap());
                for c in &ab {
                    assert_eq!(c.tau_sign(), a.tau_sign() * b.tau_sign());
                }
                if sector.contains(a) && sector.contains(b) {
                    for c in &ab {
                        assert!(sector.contains(c));
                        assert_eq!(
                            c.sigma_sign().unwrap(),
                            a.sigma_sign().unwrap() * b.sigma_sign().unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn weight_grid_membership() {
    assert!(!weight_exists(2, &rat(7, 10)).unwrap());
    assert!(weight_exists(1, &rat(1, 16)).unwrap());
    for h in [int(0), int(3), rat(2, 5), rat(7, 5), rat(2, 3), rat(1, 15)] {
        assert!(weight_exists(3, &h).unwrap());
    }
}

/// Weights straight from the defining quadratic, with no canonicalisation.
fn oracle_weight(m: i64, r: i64, s: i64) -> Rational {
    let d = r * (m + 3) - s * (m + 2);
    rat(d * d - 1, 4 * (m + 2) * (m + 3))
}

proptest! {
    #[test]
    fn labels_canonicalise_consistently(m in 1u32..=30, r0 in 0u32..100, s0 in 0u32..100) {
        let r = 1 + r0 % (m + 1);
        let s = 1 + s0 % (m + 2);
        let l = Label::new(m, r, s).unwrap();
        let (pr, ps) = l.partner();
        prop_assert!((l.r, l.s) <= (pr, ps));
        prop_assert_eq!(Label::new(m, pr, ps).unwrap(), l);
        prop_assert_eq!(l.weight(), oracle_weight(m.into(), r.into(), s.into()));
        prop_assert!(l.weight() >= int(0));
    }

    #[test]
    fn fusion_is_commutative_and_graded(m in 1u32..=12, a in 0usize..200, b in 0usize..200) {
        let labels = irreducibles(m).unwrap();
        let (x, y) = (labels[a % labels.len()], labels[b % labels.len()]);
        let xy = fuse(&x, &y).unwrap();
        prop_assert_eq!(&xy, &fuse(&y, &x).unwrap());
        for z in &xy {
            prop_assert_eq!(z.m, m);
            prop_assert_eq!(z.tau_sign(), x.tau_sign() * y.tau_sign());
        }
    }
}
