//! `w_q`, `ℓ′`, `deg^{L/T}`, Peterson and associated lifts, Hofer constants,
//! Seidel leading terms, the Pontryagin index product and the generating set
//! `S` of the unit lattice.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::affine::{self, PerturbationPoint, WallCrossing};
use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rat};
use crate::orbit::{NovikovCoset, OrbitSpec};
use crate::rootdata::{self, RootDatum};
use crate::weyl::WeylGroup;

/// The chamber of `q + a`.
pub fn w_q(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<usize> {
    w_q_in(&orbit.rd, &orbit.weyl, q, a)
}

pub fn w_q_in(rd: &RootDatum, weyl: &WeylGroup, q: &[Rat], a: &PerturbationPoint) -> Result<usize> {
    weyl.chamber_of(rd, &linalg::add(q, &a.coords))
}

/// `ℓ′(w) = Σ_{α>0} frac(α(w⁻¹ a))`.
pub fn ell_prime(rd: &RootDatum, weyl: &WeylGroup, w: usize, a: &PerturbationPoint) -> Rat {
    let v = weyl.apply(weyl.inverse(w), &a.coords);
    rd.positive_roots.iter().map(|r| linalg::frac(r.pair(&v))).sum()
}

/// `ℓ(w) + ⟨a, w(ρ)⟩`.
pub fn ell_prime_closed(rd: &RootDatum, weyl: &WeylGroup, w: usize, a: &PerturbationPoint) -> Rat {
    let rho = rd.rho();
    rat(weyl.length(w) as i64) + rd.inner(&a.coords, &weyl.apply(w, &rho))
}

/// `Σ_{α>0} ⌊α(w_q⁻¹(q + a))⌋`.
pub fn deg_floor_formula(rd: &RootDatum, weyl: &WeylGroup, q: &[Rat], a: &PerturbationPoint) -> Result<i64> {
    let w = w_q_in(rd, weyl, q, a)?;
    let v = weyl.apply(weyl.inverse(w), &linalg::add(q, &a.coords));
    Ok(rd.positive_roots.iter().map(|r| linalg::floor(r.pair(&v))).sum())
}

/// `⟨q, w_q(ρ)⟩ − ℓ(w_q)`.
pub fn deg_closed_form(rd: &RootDatum, weyl: &WeylGroup, q: &[Rat], a: &PerturbationPoint) -> Result<i64> {
    let w = w_q_in(rd, weyl, q, a)?;
    let pairing = rd.inner(q, &weyl.apply(w, &rd.rho()));
    if !pairing.is_integer() {
        return Err(Error::Internal("⟨q, w(ρ)⟩ is not an integer".into()));
    }
    Ok(pairing.to_integer() - weyl.length(w) as i64)
}

/// Indexing data of the Bott–Samelson cycle `BS_q`.
#[derive(Debug, Clone)]
pub struct BSIndex {
    pub q: Vec<Rat>,
    pub w_q: usize,
    pub deg: usize,
    pub walls: Vec<WallCrossing>,
    pub a: PerturbationPoint,
}

pub fn bs_index(rd: &RootDatum, weyl: &WeylGroup, q: &[Rat], a: &PerturbationPoint) -> Result<BSIndex> {
    let (a, walls) = affine::bs_wall_sequence(rd, q, a)?;
    let w = w_q_in(rd, weyl, q, &a)?;
    Ok(BSIndex { q: q.to_vec(), w_q: w, deg: walls.len(), walls, a })
}

/// `deg^{L/T}(q) = Σ ⌊α(q + a)⌋` over `α ∈ R_{w_q(y₀)}` with `α(w_q(x₀)) > 0`.
pub fn deg_lt(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<usize> {
    let rd = &orbit.rd;
    let w = w_q(orbit, q, a)?;
    let x = orbit.regular_point(w);
    let qa = linalg::add(q, &a.coords);
    let mut total = 0;
    for r in orbit.stabilizer_at(w) {
        if rd.pair(r, &x) > Rat::zero() {
            let f = linalg::floor(rd.pair(r, &qa));
            if f < 0 {
                return Err(Error::Internal(format!(
                    "negative summand {f} in deg^{{L/T}}; q + a is not in the chamber of w_q"
                )));
            }
            total += f as usize;
        }
    }
    Ok(total)
}

pub fn is_peterson(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<bool> {
    Ok(deg_lt(orbit, q, a)? == 0)
}

/// Bott–Samelson dimension of `q′` in the fiber over `w(y₀)`: the number of
/// walls of `R_y` crossed by `(−a, q′)`.
pub fn fiber_degree(orbit: &OrbitSpec, base: usize, q: &[Rat]) -> usize {
    orbit
        .stabilizer_positive_at(base)
        .into_iter()
        .map(|i| {
            let m = orbit.rd.positive_roots[i].pair(q);
            let m = m.to_integer();
            if m >= 0 {
                m as usize
            } else {
                (-m - 1) as usize
            }
        })
        .sum()
}

/// Same count as [`fiber_degree`], by enumerating wall crossings.
pub fn fiber_degree_by_walls(orbit: &OrbitSpec, base: usize, q: &[Rat], a: &PerturbationPoint) -> usize {
    affine::crossing_times_in(&orbit.rd, &orbit.stabilizer_positive_at(base), &a.neg(), q).len()
}

/// Result of [`peterson_lift`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersonLift {
    pub q_tilde: Vec<Rat>,
    /// Box radius (in `Q_{R_y}` coordinates) at which the search succeeded.
    pub radius: i64,
}

/// Coxeter number of the largest simple factor of `R_I`.
fn fiber_coxeter_number(orbit: &OrbitSpec) -> i64 {
    orbit
        .stabilizer
        .iter()
        .filter(|r| r.positive)
        .map(|r| orbit.rd.positive_roots[r.index].height() + 1)
        .max()
        .unwrap_or(1)
}

const MAX_LIFT_BOX: i128 = 20_000_000;

/// The unique `q̃ ∈ q + Q_{R_y}` whose fiber degree vanishes, by bounded search.
pub fn peterson_lift(orbit: &OrbitSpec, coset: &NovikovCoset) -> Result<PetersonLift> {
    let rd = &orbit.rd;
    let w = coset.base;
    if orbit.subset.is_empty() {
        return Ok(PetersonLift { q_tilde: coset.rep.clone(), radius: 0 });
    }
    // Z-basis w(α_i^∨), i ∈ I, and matching roots w(α_i).
    let basis: Vec<Vec<Rat>> = orbit
        .subset
        .iter()
        .map(|&i| orbit.weyl.apply(w, &rd.coroot(rootdata::RootRef::pos(rd.simple_root_index(i)))))
        .collect();
    let k = basis.len();
    let m: Vec<Vec<Rat>> = orbit
        .subset
        .iter()
        .map(|&i| orbit.subset.iter().map(|&j| rat(rd.cartan[i][j])).collect())
        .collect();
    let roots: Vec<rootdata::RootRef> = orbit
        .subset
        .iter()
        .map(|&i| orbit.weyl.act_on_root(rd, w, rootdata::RootRef::pos(rd.simple_root_index(i))))
        .collect();
    let values: Vec<Rat> = roots.iter().map(|&r| -rd.pair(r, &coset.rep)).collect();
    let minv = linalg::inverse(&m).expect("Cartan matrices are invertible");
    let center: Vec<i64> = linalg::mat_vec(&minv, &values)
        .into_iter()
        .map(|x| linalg::floor(x + Rat::new(1, 2)))
        .collect();
    let mut radius = 2 * fiber_coxeter_number(orbit);
    for attempt in 0..4 {
        if attempt > 0 {
            radius *= 2;
        }
        let size = i128::from(2 * radius + 1).pow(k as u32);
        if size > MAX_LIFT_BOX {
            return Err(Error::Size(format!("lift search box has {size} points")));
        }
        let mut found: Vec<Vec<Rat>> = Vec::new();
        for offset in linalg::box_points(k, radius) {
            let mut cand = coset.rep.clone();
            for ((b, c0), d) in basis.iter().zip(&center).zip(&offset) {
                let c = rat(c0 + d);
                for (o, x) in cand.iter_mut().zip(b) {
                    *o += *x * c;
                }
            }
            if fiber_degree(orbit, w, &cand) == 0 {
                found.push(cand);
            }
        }
        match found.len() {
            0 => continue,
            1 => {
                return Ok(PetersonLift { q_tilde: found.pop().unwrap(), radius });
            }
            n => {
                return Err(Error::Lift(format!(
                    "{n} candidates with zero fiber degree within radius {radius}"
                )));
            }
        }
    }
    Err(Error::Lift(format!(
        "no candidate with zero fiber degree within radius {radius}"
    )))
}

/// The Weyl element `u ∈ w W_I` whose regular point `u(x₀)` has the same
/// signs as `q̃ + a` on `R_y`.
pub fn associated_lift(orbit: &OrbitSpec, coset: &NovikovCoset, a: &PerturbationPoint) -> Result<usize> {
    let lift = peterson_lift(orbit, coset)?;
    associated_lift_of(orbit, coset.base, &lift.q_tilde, a)
}

pub fn associated_lift_of(orbit: &OrbitSpec, base: usize, q_tilde: &[Rat], a: &PerturbationPoint) -> Result<usize> {
    let rd = &orbit.rd;
    let target = linalg::add(q_tilde, &a.coords);
    let roots = orbit.stabilizer_positive_at(base);
    let matches: Vec<usize> = orbit
        .fiber(base)
        .into_iter()
        .filter(|&u| {
            let x = orbit.regular_point(u);
            roots.iter().all(|&i| {
                let r = &rd.positive_roots[i];
                (r.pair(&x) > Rat::zero()) == (r.pair(&target) > Rat::zero())
            })
        })
        .collect();
    match matches.as_slice() {
        [u] => Ok(*u),
        _ => Err(Error::Lift(format!(
            "{} fiber critical points match the signs of q̃ + a",
            matches.len()
        ))),
    }
}

/// `C_q = ⟨q, w_q(y₀)⟩`.
pub fn hofer_constant(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<Rat> {
    let w = w_q(orbit, q, a)?;
    Ok(orbit.rd.inner(q, &orbit.point(w)))
}

/// `max_{w ∈ W} ⟨q, w(y₀)⟩` and the elements attaining it.
pub fn hofer_brute_force(orbit: &OrbitSpec, q: &[Rat]) -> (Rat, Vec<usize>) {
    let values: Vec<Rat> = (0..orbit.weyl.order())
        .map(|w| orbit.rd.inner(q, &orbit.point(w)))
        .collect();
    let max = values.iter().copied().max().expect("W is nonempty");
    let argmax = (0..values.len()).filter(|&w| values[w] == max).collect();
    (max, argmax)
}

/// One `±σ · T^A` term; the sign is left undetermined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertTerm {
    /// Minimal representative of the Schubert coset.
    pub coset: usize,
    /// Novikov exponent, anchored at the base point `y₀` (or `x₀`).
    pub nov: NovikovCoset,
    pub coeff_magnitude: u64,
    pub sign_known: bool,
    /// The term is the whole value, not just its leading part.
    pub full: bool,
    /// Lower terms only involve `σ_{w′}` with `ℓ′(w′)` below this bound.
    pub ell_prime_bound: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeidelValue {
    Term(SchubertTerm),
    Zero,
    Undetermined { deg_lt: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    BottSamelson,
    Prime,
}

fn leading_term(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint, w: usize) -> Result<SchubertTerm> {
    let rep = orbit.weyl.apply(orbit.weyl.inverse(w), q);
    let nov = NovikovCoset::new(orbit, orbit.weyl.identity(), rep)?;
    let bound = orbit
        .is_full_flag()
        .then(|| ell_prime(&orbit.rd, &orbit.weyl, w, a));
    Ok(SchubertTerm {
        coset: orbit.coset_rep(w),
        nov,
        coeff_magnitude: 1,
        sign_known: false,
        full: orbit.weyl.get(w).is_identity(),
        ell_prime_bound: bound,
    })
}

/// Leading term of the Seidel value on the Bott–Samelson class `x_q`.
pub fn seidel_leading(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<SeidelValue> {
    let w = w_q(orbit, q, a)?;
    if !orbit.is_full_flag() {
        let d = deg_lt(orbit, q, a)?;
        if d != 0 {
            return Ok(SeidelValue::Undetermined { deg_lt: d });
        }
    }
    Ok(SeidelValue::Term(leading_term(orbit, q, a, w)?))
}

pub fn seidel_basis_value(
    orbit: &OrbitSpec,
    q: &[Rat],
    a: &PerturbationPoint,
    kind: BasisKind,
) -> Result<SeidelValue> {
    match kind {
        BasisKind::BottSamelson => seidel_leading(orbit, q, a),
        BasisKind::Prime => {
            let w = w_q(orbit, q, a)?;
            if deg_lt(orbit, q, a)? != 0 {
                return Ok(SeidelValue::Zero);
            }
            let mut term = leading_term(orbit, q, a, w)?;
            term.full = true;
            term.ell_prime_bound = None;
            Ok(SeidelValue::Term(term))
        }
    }
}

/// Index of `x_{q₀} · x_{q₁} = x_{q₁ + w_{q₁}(q₀)}` for dominant `q₀`.
pub fn pontryagin_index(
    rd: &RootDatum,
    weyl: &WeylGroup,
    q0: &[Rat],
    q1: &[Rat],
    a: &PerturbationPoint,
) -> Result<Vec<Rat>> {
    if !rootdata::is_dominant(rd, q0) {
        return Err(Error::Domain(format!(
            "q0 = ({}) is not dominant",
            rootdata::fmt_coords(q0)
        )));
    }
    let w = w_q_in(rd, weyl, q1, a)?;
    Ok(linalg::add(q1, &weyl.apply(w, q0)))
}

/// `q + w⁻¹(a) ∈ C₀`.
pub fn image_basis_member(rd: &RootDatum, weyl: &WeylGroup, w: usize, q: &[Rat], a: &PerturbationPoint) -> bool {
    let v = linalg::add(q, &weyl.apply(weyl.inverse(w), &a.coords));
    rootdata::is_dominant(rd, &v)
}

/// The set `S` of nonzero minimal-norm elements in each class of `Q/Q₀`.
#[derive(Debug, Clone)]
pub struct GeneratingSet {
    pub s: Vec<Vec<Rat>>,
    /// `S ∩ Q₀`.
    pub s0: Vec<Vec<Rat>>,
}

pub fn generating_set(rd: &RootDatum) -> Result<GeneratingSet> {
    let identity: Vec<Vec<Rat>> = linalg::identity_int(rd.rank).iter().map(|r| linalg::to_rat(r)).collect();
    let (_, torsion) = rootdata::quotient_structure(&rd.unit_lattice_basis, &identity)?;
    let classes: usize = torsion.iter().product::<i64>() as usize;
    let gram = rd.unit_lattice_gram();
    let mut r2 = rat(1);
    loop {
        let pts = linalg::integer_points_in_ellipsoid(&gram, r2)?;
        let mut best: BTreeMap<Vec<Rat>, (Rat, Vec<Vec<Rat>>)> = BTreeMap::new();
        for c in pts {
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            let v = rd.from_unit_coords(&c);
            let key: Vec<Rat> = v.iter().map(|&x| linalg::frac(x)).collect();
            let n = rd.norm2(&v);
            let entry = best.entry(key).or_insert_with(|| (n, Vec::new()));
            if n < entry.0 {
                *entry = (n, Vec::new());
            }
            if n == entry.0 {
                entry.1.push(v);
            }
        }
        if best.len() == classes {
            let mut s: Vec<Vec<Rat>> = best.into_values().flat_map(|(_, vs)| vs).collect();
            s.sort();
            let s0 = s.iter().filter(|v| rd.in_coroot_lattice(v)).cloned().collect();
            return Ok(GeneratingSet { s, s0 });
        }
        r2 *= rat(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ratio, to_rat};
    use crate::orbit::orbit_data;
    use crate::rootdata::LatticeKind;

    fn orbit(series: &str, subset: &[usize]) -> OrbitSpec {
        let rd = RootDatum::new(series, LatticeKind::SimplyConnected).unwrap();
        orbit_data(&rd, subset, rat(1)).unwrap()
    }

    #[test]
    fn w_q_examples() {
        let o = orbit("A1", &[]);
        let a = PerturbationPoint::canonical(&o.rd);
        assert_eq!(w_q(&o, &to_rat(&[-1]), &a).unwrap(), o.weyl.simple_reflection(0));
        assert_eq!(w_q(&o, &to_rat(&[3]), &a).unwrap(), 0);
        let o = orbit("A2", &[]);
        assert_eq!(w_q(&o, &to_rat(&[1, 0]), &a_of(&o)).unwrap(), o.weyl.simple_reflection(1));
        assert_eq!(w_q(&o, &to_rat(&[2, 3]), &a_of(&o)).unwrap(), 0);
    }

    fn a_of(o: &OrbitSpec) -> PerturbationPoint {
        PerturbationPoint::canonical(&o.rd)
    }

    #[test]
    fn ell_prime_examples() {
        let o = orbit("A1", &[]);
        let a = a_of(&o);
        let s = o.weyl.simple_reflection(0);
        assert_eq!(ell_prime(&o.rd, &o.weyl, s, &a), rat(1) - a.simple_values[0]);
        let o = orbit("A2", &[]);
        // (1/7, 1/11) in fundamental-coweight coordinates, i.e. as simple-root values.
        let a = PerturbationPoint::from_simple_values(&o.rd, vec![ratio(1, 7), ratio(1, 11)]).unwrap();
        for w in 0..o.weyl.order() {
            assert_eq!(ell_prime(&o.rd, &o.weyl, w, &a), ell_prime_closed(&o.rd, &o.weyl, w, &a));
        }
    }

    #[test]
    fn deg_formulas_agree_on_examples() {
        let o = orbit("A1", &[]);
        let a = a_of(&o);
        let q = to_rat(&[-1]);
        assert_eq!(deg_floor_formula(&o.rd, &o.weyl, &q, &a).unwrap(), 1);
        assert_eq!(deg_closed_form(&o.rd, &o.weyl, &q, &a).unwrap(), 1);
        let o = orbit("A2", &[]);
        let a = a_of(&o);
        let q = to_rat(&[1, 1]);
        assert_eq!(deg_closed_form(&o.rd, &o.weyl, &q, &a).unwrap(), 4);
        assert_eq!(bs_index(&o.rd, &o.weyl, &q, &a).unwrap().deg, 4);
    }

    #[test]
    fn deg_lt_examples() {
        let o = orbit("A2", &[]);
        assert_eq!(deg_lt(&o, &to_rat(&[1, 1]), &a_of(&o)).unwrap(), 0);
        let o = orbit("A2", &[1]);
        let a = a_of(&o);
        assert_eq!(w_q(&o, &to_rat(&[0, 1]), &a).unwrap(), o.weyl.simple_reflection(0));
        assert_eq!(deg_lt(&o, &to_rat(&[0, 1]), &a).unwrap(), 1);
        assert_eq!(deg_lt(&o, &to_rat(&[1, 0]), &a).unwrap(), 0);
        assert!(!is_peterson(&o, &to_rat(&[0, 1]), &a).unwrap());
        assert!(is_peterson(&o, &to_rat(&[1, 0]), &a).unwrap());
    }

    #[test]
    fn lifts_in_a2() {
        let o = orbit("A2", &[1]);
        let a = a_of(&o);
        let zero = NovikovCoset::new(&o, 0, to_rat(&[0, 0])).unwrap();
        assert_eq!(peterson_lift(&o, &zero).unwrap().q_tilde, to_rat(&[0, 0]));
        assert_eq!(associated_lift(&o, &zero, &a).unwrap(), 0);
        let c2 = NovikovCoset::new(&o, 0, to_rat(&[0, 1])).unwrap();
        assert_eq!(peterson_lift(&o, &c2).unwrap().q_tilde, to_rat(&[0, 0]));
        assert_eq!(associated_lift(&o, &c2, &a).unwrap(), 0);
        let c1 = NovikovCoset::new(&o, 0, to_rat(&[1, 0])).unwrap();
        assert_eq!(peterson_lift(&o, &c1).unwrap().q_tilde, to_rat(&[1, 0]));
        assert_eq!(associated_lift(&o, &c1, &a).unwrap(), o.weyl.simple_reflection(1));
    }

    #[test]
    fn hofer_examples() {
        let o = orbit("A2", &[]);
        let a = a_of(&o);
        assert_eq!(hofer_constant(&o, &to_rat(&[1, 1]), &a).unwrap(), rat(4));
        assert_eq!(hofer_brute_force(&o, &to_rat(&[1, 1])).0, rat(4));
        let o = orbit("A1", &[]);
        let a = a_of(&o);
        assert_eq!(hofer_constant(&o, &to_rat(&[-1]), &a).unwrap(), rat(2));
        assert_eq!(hofer_constant(&o, &to_rat(&[0]), &a).unwrap(), rat(0));
        assert_eq!(crate::orbit::coupling_value(&o, &to_rat(&[-1]), &a).unwrap(), rat(-2));
    }

    #[test]
    fn seidel_examples() {
        let o = orbit("A2", &[]);
        let a = a_of(&o);
        let SeidelValue::Term(t) = seidel_leading(&o, &to_rat(&[1, 1]), &a).unwrap() else {
            panic!("expected a term");
        };
        assert_eq!(t.coset, 0);
        assert!(t.full && !t.sign_known);
        assert_eq!(t.nov.rep, to_rat(&[1, 1]));
        let o = orbit("A2", &[1]);
        let SeidelValue::Term(t) = seidel_leading(&o, &to_rat(&[1, 0]), &a).unwrap() else {
            panic!("expected a term");
        };
        // s₂ W_I = W_I, so the Schubert class is the unit; the exponent is s₂⁻¹(α₁^∨).
        assert_eq!(t.coset, 0);
        assert_eq!(t.nov.rep, to_rat(&[1, 1]));
        assert!(!t.full);
        assert_eq!(
            seidel_leading(&o, &to_rat(&[0, 1]), &a).unwrap(),
            SeidelValue::Undetermined { deg_lt: 1 }
        );
        assert_eq!(
            seidel_basis_value(&o, &to_rat(&[0, 1]), &a, BasisKind::Prime).unwrap(),
            SeidelValue::Zero
        );
        let SeidelValue::Term(t) = seidel_basis_value(&o, &to_rat(&[0, 0]), &a, BasisKind::Prime).unwrap() else {
            panic!("expected the unit");
        };
        assert_eq!(t.coset, 0);
        assert!(linalg::is_zero(&t.nov.canonical));
    }

    #[test]
    fn pontryagin_examples() {
        let o = orbit("A1", &[]);
        let a = a_of(&o);
        let r = pontryagin_index(&o.rd, &o.weyl, &to_rat(&[1]), &to_rat(&[-1]), &a).unwrap();
        assert_eq!(r, to_rat(&[-2]));
        let r = pontryagin_index(&o.rd, &o.weyl, &to_rat(&[0]), &to_rat(&[-3]), &a).unwrap();
        assert_eq!(r, to_rat(&[-3]));
        assert!(matches!(
            pontryagin_index(&o.rd, &o.weyl, &to_rat(&[-1]), &to_rat(&[0]), &a),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn image_basis_examples() {
        let o = orbit("A1", &[]);
        let a = a_of(&o);
        assert!(image_basis_member(&o.rd, &o.weyl, 0, &to_rat(&[2]), &a));
        assert!(!image_basis_member(&o.rd, &o.weyl, 1, &to_rat(&[0]), &a));
    }

    #[test]
    fn generating_set_a1() {
        let rd = RootDatum::new("A1", LatticeKind::SimplyConnected).unwrap();
        let g = generating_set(&rd).unwrap();
        assert_eq!(g.s, vec![to_rat(&[-1]), to_rat(&[1])]);
        let rd = RootDatum::new("A1", LatticeKind::Adjoint).unwrap();
        let g = generating_set(&rd).unwrap();
        assert_eq!(g.s, vec![to_rat(&[-1]), vec![ratio(-1, 2)], vec![ratio(1, 2)], to_rat(&[1])]);
        assert_eq!(g.s0.len(), 2);
    }
}
