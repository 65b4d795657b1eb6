use kpasep::polyring::rat;
use kpasep::ratchain::{
    chain, classify_corner, classify_corner_by_strip, detailed_balance_check, loci, projection_check, stationary_check,
    Locus,
};

#[test]
fn chains_up_to_five_sites() {
    let (a, b, q) = (rat(1, 2), rat(1, 3), rat(1, 5));
    for n in 1..=5 {
        for r in 0..=n {
            let rc = chain(n, r).unwrap();
            assert!(rc.contracts_hold(), "contracts {n} {r}");
            assert!(projection_check(&rc).unwrap().passed(), "projection {n} {r}");
            assert!(
                detailed_balance_check(&rc).unwrap().iter().all(|b| b.passed()),
                "balance {n} {r}"
            );
            assert!(
                stationary_check(&rc, &a, &b, &q).unwrap().passed(),
                "stationary {n} {r}"
            );
        }
    }
}

#[test]
fn four_one_has_240_states() {
    assert_eq!(chain(4, 1).unwrap().len(), 240);
}

#[test]
fn classification_routes_agree_on_five_sites() {
    for r in 0..=5 {
        for f in chain(5, r).unwrap().states {
            for l in loci(&f) {
                if let Locus::Corner { at, .. } = l {
                    assert_eq!(
                        classify_corner(&f, at).unwrap(),
                        classify_corner_by_strip(&f, at).unwrap()
                    );
                }
            }
        }
    }
}
