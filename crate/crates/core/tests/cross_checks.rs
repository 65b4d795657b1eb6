use kpasep::ansatz::{bracket, z_partition, z_partition_markers};
use kpasep::pasep::{sector_states, sectors, stationary_exact, RateParams, Sector};
use kpasep::polyring::{assign_abq, rat, Rational};
use kpasep::rhombic::{weight, z};
use proptest::prelude::*;

fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(a, b)| rat(a.min(b), a.max(b)))
}

#[test]
fn brackets_give_stationary_probabilities() {
    let (a, b, q) = (rat(2, 3), rat(1, 4), rat(3, 7));
    let at = assign_abq(a.clone(), b.clone(), q.clone());
    for k in 1..=3 {
        for n in 1..=4 {
            for sector in sectors(n, k) {
                let pi =
                    stationary_exact(n, &sector, &RateParams::uniform(k, a.clone(), b.clone(), q.clone())).unwrap();
                let zv = z_partition(n, &sector).unwrap().eval(&at).unwrap();
                for (w, p) in pi {
                    assert_eq!(p, bracket(&w, k).eval(&at).unwrap() / &zv, "{w}");
                }
            }
        }
    }
}

#[test]
fn marker_and_sector_partition_functions_agree() {
    for k in 1..=3 {
        for n in 1..=4 {
            for sector in sectors(n, k) {
                assert_eq!(
                    z_partition(n, &sector).unwrap(),
                    z_partition_markers(n, &sector).unwrap()
                );
            }
        }
    }
}

#[test]
fn tableau_and_matrix_partition_functions_differ_by_boundary_factor() {
    for n in 1..=5 {
        for r in 0..=n {
            let sector = Sector(vec![r]);
            let shift = (n - r) as i32;
            let scaled = &kpasep::polyring::LaurentPoly::abq(shift, shift, 0) * &z_partition(n, &sector).unwrap();
            assert_eq!(z(n, &sector).unwrap(), scaled);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weights_are_stationary_at_random_parameters(a in unit_rational(), b in unit_rational(), q in unit_rational(), r in 0usize..=4) {
        let sector = Sector(vec![r]);
        let at = assign_abq(a.clone(), b.clone(), q.clone());
        let pi = stationary_exact(4, &sector, &RateParams::uniform(2, a, b, q)).unwrap();
        let zv = z(4, &sector).unwrap().eval(&at).unwrap();
        for w in sector_states(4, &sector).unwrap() {
            prop_assert_eq!(&pi[&w], &(weight(&w).eval(&at).unwrap() / &zv));
        }
    }
}
