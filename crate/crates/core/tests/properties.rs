mod common;

use coadjoint::affine::{self, PerturbationPoint};
use coadjoint::linalg::{self, rat, ratio, Rat};
use coadjoint::orbit::{self, orbit_data, NovikovCoset};
use coadjoint::peterson;
use coadjoint::rootdata::RootDatum;
use coadjoint::weyl::WeylGroup;
use common::*;
use proptest::prelude::*;

fn datum(idx: usize, adjoint: bool) -> RootDatum {
    let s = SERIES[idx % SERIES.len()];
    if adjoint {
        ad(s)
    } else {
        sc(s)
    }
}

fn point(rd: &RootDatum, raw: &[i64]) -> Vec<Rat> {
    rd.from_unit_coords(&raw[..rd.rank])
}

fn walls_of(walls: &[affine::WallCrossing]) -> Vec<(usize, i64)> {
    walls.iter().map(|c| c.wall()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn deg_formulas_agree(idx in 0usize..7, adjoint: bool, offset in 0usize..16, raw in prop::collection::vec(-6i64..=6, 3)) {
        let rd = datum(idx, adjoint);
        let weyl = WeylGroup::new(&rd).unwrap();
        let q = point(&rd, &raw);
        let a = PerturbationPoint::certify(&rd, &PerturbationPoint::with_prime_offset(&rd, offset), std::slice::from_ref(&q)).unwrap();
        let d = affine::deg(&rd, &q, &a).unwrap() as i64;
        prop_assert_eq!(d, wall_count(&rd, &a.neg(), &q));
        prop_assert_eq!(peterson::deg_floor_formula(&rd, &weyl, &q, &a).unwrap(), d);
        prop_assert_eq!(peterson::deg_closed_form(&rd, &weyl, &q, &a).unwrap(), d);
        let w = peterson::w_q_in(&rd, &weyl, &q, &a).unwrap();
        prop_assert_eq!(Some(w), chamber_by_scan(&rd, &weyl, &linalg::add(&q, &a.coords)));
    }

    #[test]
    fn crossing_set_matches_sign_changes(idx in 0usize..7, x in prop::collection::vec(-40i64..=40, 3), y in prop::collection::vec(-40i64..=40, 3)) {
        let rd = datum(idx, false);
        let x: Vec<Rat> = x[..rd.rank].iter().map(|&v| ratio(v, 7)).collect();
        let y: Vec<Rat> = y[..rd.rank].iter().map(|&v| ratio(v, 5)).collect();
        let mut got = walls_of(&affine::crossing_times(&rd, &x, &y));
        got.sort();
        let mut expected = Vec::new();
        for (i, r) in rd.positive_roots.iter().enumerate() {
            let (u, v) = (r.pair(&x), r.pair(&y));
            for k in -100..=100 {
                if (u - rat(k)) * (v - rat(k)) < Rat::from_integer(0) {
                    expected.push((i, k));
                }
            }
        }
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn wall_order_is_stable_under_shrinking(idx in 0usize..7, raw in prop::collection::vec(-4i64..=4, 3), halvings in 1u32..4) {
        let rd = datum(idx, false);
        let q = point(&rd, &raw);
        let (a, walls) = affine::bs_wall_sequence(&rd, &q, &PerturbationPoint::canonical(&rd)).unwrap();
        let small = a.scaled(ratio(1, 1 << halvings));
        let (used, smaller) = affine::bs_wall_sequence(&rd, &q, &small).unwrap();
        prop_assert_eq!(&used.coords, &small.coords);
        prop_assert_eq!(walls_of(&walls), walls_of(&smaller));
        prop_assert_eq!(walls.len() as i64, wall_count(&rd, &a.neg(), &q));
    }

    #[test]
    fn coset_data_is_representative_independent(idx in 0usize..7, subset_mask in 1u32..8, base_pick in 0usize..64, raw in prop::collection::vec(-3i64..=3, 3), shift in prop::collection::vec(-3i64..=3, 3)) {
        let rd = datum(idx, false);
        let subset: Vec<usize> = (0..rd.rank).filter(|i| subset_mask >> i & 1 == 1).collect();
        prop_assume!(!subset.is_empty() && subset.len() < rd.rank);
        let o = orbit_data(&rd, &subset, rat(1)).unwrap();
        let base = o.crit[base_pick % o.crit.len()];
        let q = point(&rd, &raw);
        let basis = o.sublattices_at(base).q_basis;
        let v = basis.iter().zip(&shift).fold(vec![rat(0); rd.rank], |acc, (b, &k)| linalg::add(&acc, &linalg::scale(rat(k), b)));
        let n1 = NovikovCoset::new(&o, base, q.clone()).unwrap();
        let n2 = NovikovCoset::new(&o, base, linalg::add(&q, &v)).unwrap();
        prop_assert_eq!(&n1, &n2);
        prop_assert_eq!(orbit::c1v(&o, &n1).unwrap(), orbit::c1v(&o, &n2).unwrap());
        prop_assert_eq!(orbit::psi(&o, base, &q).unwrap().canonical, orbit::psi(&o, base, &n2.rep).unwrap().canonical);
        let l1 = peterson::peterson_lift(&o, &n1).unwrap();
        let l2 = peterson::peterson_lift(&o, &n2).unwrap();
        prop_assert_eq!(&l1.q_tilde, &l2.q_tilde);
        prop_assert_eq!(peterson::fiber_degree(&o, base, &l1.q_tilde), 0);
        let a = PerturbationPoint::canonical(&rd);
        prop_assert_eq!(peterson::fiber_degree_by_walls(&o, base, &l1.q_tilde, &a), 0);
    }

    #[test]
    fn ell_prime_is_a_sum_of_fractional_parts(idx in 0usize..7, offset in 0usize..16) {
        let rd = datum(idx, false);
        let weyl = WeylGroup::new(&rd).unwrap();
        let a = PerturbationPoint::with_prime_offset(&rd, offset);
        for w in 0..weyl.order() {
            let l = peterson::ell_prime(&rd, &weyl, w, &a);
            prop_assert_eq!(l, peterson::ell_prime_closed(&rd, &weyl, w, &a));
            prop_assert!(l >= rat(0) && l < rat(rd.num_positive_roots() as i64));
        }
    }
}

#[test]
fn adjoint_affine_orbit_stays_in_coroot_lattice() {
    let rd = ad("A2");
    let orbit = affine::affine_orbit_of_zero(&rd, rat(4)).unwrap();
    assert!(orbit.iter().all(|v| is_integral(v)));
    assert!(orbit.len() > 1);
}

#[test]
fn nice_segments() {
    let rd = sc("A2");
    let zero = vec![rat(0), rat(0)];
    let theta = linalg::to_rat(&rd.positive_roots[rd.highest[0]].coroot);
    // The start point lies on every wall through the origin.
    assert!(!affine::is_nice(&rd, &zero, &theta).nice);
    let a = PerturbationPoint::canonical(&rd);
    assert!(affine::is_nice(&rd, &a.neg(), &theta).nice);
    // A segment inside the wall α₁ = 0.
    let along = rd.from_simple_values(&[rat(0), rat(3)]);
    assert!(!affine::is_nice(&rd, &zero, &along).nice);
}
