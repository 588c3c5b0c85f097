//! Coadjoint orbits `G/L = O_{y₀}`: critical points, Novikov cosets
//! `q + Q_{R_y}`, vertical Chern numbers and the fibration maps `ψ`, `𝒫`.

use num_traits::Zero;

use crate::affine::PerturbationPoint;
use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rat};
use crate::peterson;
use crate::rootdata::{self, RootDatum, RootRef, SublatticePair};
use crate::weyl::WeylGroup;

/// The orbit through `y₀ = c·ρ_I` together with the regular orbit through
/// `x₀ = ρ`, which fibers over it.
#[derive(Debug, Clone)]
pub struct OrbitSpec {
    pub rd: RootDatum,
    pub weyl: WeylGroup,
    /// 0-based simple indices of `I`.
    pub subset: Vec<usize>,
    pub scale: Rat,
    pub y0: Vec<Rat>,
    pub x0: Vec<Rat>,
    /// `R_{y₀} = R_I`, positive and negative.
    pub stabilizer: Vec<RootRef>,
    /// `W_{y₀} = W_I`.
    pub parabolic: Vec<usize>,
    /// Minimal coset representatives, one per critical point `w(y₀)`.
    pub crit: Vec<usize>,
}

/// Builds the orbit data for `I` and scale `c`.
pub fn orbit_data(rd: &RootDatum, subset: &[usize], c: Rat) -> Result<OrbitSpec> {
    let weyl = WeylGroup::new(rd)?;
    orbit_data_with(rd, weyl, subset, c)
}

/// As [`orbit_data`], reusing an enumerated Weyl group.
pub fn orbit_data_with(rd: &RootDatum, weyl: WeylGroup, subset: &[usize], c: Rat) -> Result<OrbitSpec> {
    rd.check_subset(subset)?;
    if c <= Rat::zero() {
        return Err(Error::Domain("orbit scale must be positive".into()));
    }
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    let y0 = linalg::scale(c, &rd.rho_i(&subset)?);
    let x0 = rd.rho().coords;
    let stabilizer: Vec<RootRef> = rd.all_roots().filter(|&r| rd.pair(r, &y0).is_zero()).collect();
    let parabolic = weyl.parabolic(&subset);
    let crit = weyl.minimal_reps(rd, &subset);
    Ok(OrbitSpec {
        rd: rd.clone(),
        weyl,
        subset,
        scale: c,
        y0,
        x0,
        stabilizer,
        parabolic,
        crit,
    })
}

impl OrbitSpec {
    pub fn is_full_flag(&self) -> bool {
        self.subset.is_empty()
    }

    /// Number of positive roots not in `R_I`: the complex dimension of `G/L`.
    pub fn complex_dim(&self) -> usize {
        self.rd.num_positive_roots() - self.stabilizer.len() / 2
    }

    /// Minimal representative of the coset `w W_I`.
    pub fn coset_rep(&self, w: usize) -> usize {
        self.weyl.minimal_rep_of(&self.rd, w, &self.subset)
    }

    /// The critical point `w(y₀)`.
    pub fn point(&self, w: usize) -> Vec<Rat> {
        self.weyl.apply(w, &self.y0)
    }

    /// The critical point `w(x₀)` of the regular orbit.
    pub fn regular_point(&self, w: usize) -> Vec<Rat> {
        self.weyl.apply(w, &self.x0)
    }

    /// `R_y` for `y = w(y₀)`, as `w(R_I)`.
    pub fn stabilizer_at(&self, w: usize) -> Vec<RootRef> {
        let mut out: Vec<RootRef> = self
            .stabilizer
            .iter()
            .map(|&r| self.weyl.act_on_root(&self.rd, w, r))
            .collect();
        out.sort();
        out
    }

    /// Indices of positive roots lying in `R_y`.
    pub fn stabilizer_positive_at(&self, w: usize) -> Vec<usize> {
        self.stabilizer_at(w)
            .into_iter()
            .filter(|r| r.positive)
            .map(|r| r.index)
            .collect()
    }

    pub fn sublattices_at(&self, w: usize) -> SublatticePair {
        self.rd.sublattices(&self.stabilizer_at(w))
    }

    /// Elements `u` of `w W_I`, i.e. the fiber critical points `u(x₀)` over `w(y₀)`.
    pub fn fiber(&self, w: usize) -> Vec<usize> {
        self.parabolic.iter().map(|&p| self.weyl.mul(w, p)).collect()
    }

    fn check_base(&self, w: usize) -> Result<()> {
        if w >= self.weyl.order() || !self.crit.contains(&w) {
            return Err(Error::Domain(format!(
                "Weyl element {w} is not a minimal coset representative"
            )));
        }
        Ok(())
    }
}

/// A Novikov class `A_{y, q + Q_{R_y}}`.
#[derive(Debug, Clone)]
pub struct NovikovCoset {
    /// Minimal coset representative `w` with `y = w(y₀)`.
    pub base: usize,
    pub rep: Vec<Rat>,
    pub canonical: Vec<Rat>,
}

impl PartialEq for NovikovCoset {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.canonical == other.canonical
    }
}

impl Eq for NovikovCoset {}

impl NovikovCoset {
    pub fn new(orbit: &OrbitSpec, base: usize, rep: Vec<Rat>) -> Result<Self> {
        orbit.check_base(base)?;
        if rep.len() != orbit.rd.rank || !orbit.rd.in_unit_lattice(&rep) {
            return Err(Error::Lattice(format!(
                "({}) is not in the unit lattice",
                rootdata::fmt_coords(&rep)
            )));
        }
        let canonical = canonical_rep(orbit, base, &rep);
        Ok(NovikovCoset { base, rep, canonical })
    }

    /// Transport by `w ∈ W`: `A_{y, q} ↦ A_{w(y), w(q)}`.
    pub fn rebase(&self, orbit: &OrbitSpec, w: usize) -> Self {
        let base = orbit.coset_rep(orbit.weyl.mul(w, self.base));
        let rep = orbit.weyl.apply(w, &self.rep);
        let canonical = canonical_rep(orbit, base, &rep);
        NovikovCoset { base, rep, canonical }
    }
}

fn canonical_rep(orbit: &OrbitSpec, base: usize, v: &[Rat]) -> Vec<Rat> {
    linalg::reduce_mod_echelon(&orbit.sublattices_at(base).q_basis, v)
}

/// Free rank and torsion invariants of `Q / Q_{R_y}`.
pub fn novikov_group(orbit: &OrbitSpec, base: usize) -> Result<(usize, Vec<i64>)> {
    orbit.check_base(base)?;
    rootdata::quotient_structure(&orbit.rd.unit_lattice_basis, &orbit.sublattices_at(base).q_basis)
}

fn c1v_raw(orbit: &OrbitSpec, y: &[Rat], q: &[Rat]) -> Rat {
    let rd = &orbit.rd;
    rd.all_roots()
        .filter(|&r| rd.pair(r, y) > Rat::zero())
        .map(|r| -rd.pair(r, q))
        .sum()
}

/// `c₁^v(A_{y,q}) = −Σ_{α(y)>0} α(q)`.
pub fn c1v(orbit: &OrbitSpec, nov: &NovikovCoset) -> Result<i64> {
    let y = orbit.point(nov.base);
    let a = c1v_raw(orbit, &y, &nov.rep);
    let b = c1v_raw(orbit, &y, &nov.canonical);
    if a != b || !a.is_integer() {
        return Err(Error::Internal(format!(
            "c1v depends on the coset representative ({} vs {})",
            linalg::fmt_rat(&a),
            linalg::fmt_rat(&b)
        )));
    }
    Ok(a.to_integer())
}

/// `c₁^v` of a class of the regular orbit at `u(x₀)`.
pub fn c1v_regular(orbit: &OrbitSpec, u: usize, q: &[Rat]) -> i64 {
    c1v_raw(orbit, &orbit.regular_point(u), q).to_integer()
}

/// Vertical Chern number of a fiber class: `−Σ_{α ∈ R_y, α(x)>0} α(q̃)` with
/// `x = u(x₀)` in the fiber over `y`.
pub fn c1v_fiber(orbit: &OrbitSpec, base: usize, u: usize, q_tilde: &[Rat]) -> Rat {
    let rd = &orbit.rd;
    let x = orbit.regular_point(u);
    orbit
        .stabilizer_at(base)
        .into_iter()
        .filter(|&r| rd.pair(r, &x) > Rat::zero())
        .map(|r| -rd.pair(r, q_tilde))
        .sum()
}

/// `dim U_y = 2·#{α : α(y) > 0, α(a) < 0}`.
pub fn unstable_dim(orbit: &OrbitSpec, base: usize, a: &PerturbationPoint) -> usize {
    let rd = &orbit.rd;
    let y = orbit.point(base);
    2 * rd
        .all_roots()
        .filter(|&r| rd.pair(r, &y) > Rat::zero() && rd.pair(r, &a.coords) < Rat::zero())
        .count()
}

/// `−⟨q, w_q(y₀)⟩ = −c·ρ_I(w_q⁻¹ q)`.
pub fn coupling_value(orbit: &OrbitSpec, q: &[Rat], a: &PerturbationPoint) -> Result<Rat> {
    let w = peterson::w_q(orbit, q, a)?;
    let v = orbit.weyl.apply(orbit.weyl.inverse(w), q);
    let rho_i = orbit.rd.rho_i_functional(&orbit.subset);
    Ok(-orbit.scale * linalg::dot_int(&rho_i, &v))
}

/// Gram-orthogonal projection of `v` onto the span of `Q_{R_y}`.
pub fn projection(orbit: &OrbitSpec, base: usize, v: &[Rat]) -> Vec<Rat> {
    let rd = &orbit.rd;
    let basis = orbit.sublattices_at(base).q_basis;
    if basis.is_empty() {
        return vec![Rat::zero(); rd.rank];
    }
    let m: Vec<Vec<Rat>> = basis
        .iter()
        .map(|u| basis.iter().map(|w| rd.inner(u, w)).collect())
        .collect();
    let rhs: Vec<Rat> = basis.iter().map(|u| rd.inner(u, v)).collect();
    let inv = linalg::inverse(&m).expect("coroots of R_y are independent");
    let coeffs = linalg::mat_vec(&inv, &rhs);
    let mut out = vec![Rat::zero(); rd.rank];
    for (b, c) in basis.iter().zip(&coeffs) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += *x * *c;
        }
    }
    out
}

/// A class of `P^∨_{R_y} / Q_{R_y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCoset {
    pub projection: Vec<Rat>,
    pub canonical: Vec<Rat>,
}

impl FiberCoset {
    pub fn is_zero(&self) -> bool {
        linalg::is_zero(&self.canonical)
    }
}

/// `ψ(A_{y,q}) = π(q) + Q_{R_y}`.
pub fn psi(orbit: &OrbitSpec, base: usize, q: &[Rat]) -> Result<FiberCoset> {
    orbit.check_base(base)?;
    let lattices = orbit.sublattices_at(base);
    let p = projection(orbit, base, q);
    if !lattices.pvee_basis.is_empty() && !linalg::in_lattice(&lattices.pvee_basis, &p) {
        return Err(Error::Internal(format!(
            "projection ({}) is not in P^∨_{{R_y}}",
            rootdata::fmt_coords(&p)
        )));
    }
    let canonical = linalg::reduce_mod_echelon(&lattices.q_basis, &p);
    Ok(FiberCoset { projection: p, canonical })
}

/// `𝒫(A_{q̃}) = q̃ − π(q) + q` for `q̃ ∈ π(q) + Q_{R_y}`.
pub fn p_map(orbit: &OrbitSpec, base: usize, q: &[Rat], q_tilde: &[Rat]) -> Result<Vec<Rat>> {
    orbit.check_base(base)?;
    let p = projection(orbit, base, q);
    let diff = linalg::sub(q_tilde, &p);
    let basis = orbit.sublattices_at(base).q_basis;
    let in_coset = if basis.is_empty() {
        linalg::is_zero(&diff)
    } else {
        linalg::in_lattice(&basis, &diff)
    };
    if !in_coset {
        return Err(Error::Coset(format!(
            "({}) is not in π(q) + Q_{{R_y}}",
            rootdata::fmt_coords(q_tilde)
        )));
    }
    Ok(linalg::add(&diff, q))
}

/// Real dimension of the orbit, `2·#{α ∈ R⁺ : α(y₀) > 0}`.
pub fn real_dim(orbit: &OrbitSpec) -> usize {
    2 * orbit.complex_dim()
}

/// Scale making `y₀` equal to `ρ_I`.
pub fn default_scale() -> Rat {
    rat(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ratio, to_rat};
    use crate::rootdata::LatticeKind;

    fn a2(subset: &[usize]) -> OrbitSpec {
        let rd = RootDatum::new("A2", LatticeKind::SimplyConnected).unwrap();
        orbit_data(&rd, subset, rat(1)).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        let o = a2(&[]);
        assert!(o.stabilizer.is_empty());
        assert_eq!(o.crit.len(), 6);
        let o = a2(&[1]);
        assert_eq!(o.stabilizer.len(), 2);
        assert_eq!(o.crit.len(), 3);
        let rd = RootDatum::new("B2", LatticeKind::SimplyConnected).unwrap();
        // The long simple root of B2 is α₁.
        let o = orbit_data(&rd, &[0], rat(1)).unwrap();
        assert_eq!(o.crit.len(), 4);
    }

    #[test]
    fn novikov_groups() {
        let o = a2(&[]);
        assert_eq!(novikov_group(&o, 0).unwrap(), (2, vec![]));
        let o = a2(&[1]);
        assert_eq!(novikov_group(&o, 0).unwrap(), (1, vec![]));
        let rd = RootDatum::new("A1", LatticeKind::Adjoint).unwrap();
        let o = orbit_data(&rd, &[0], rat(1)).unwrap();
        assert_eq!(novikov_group(&o, 0).unwrap(), (0, vec![2]));
    }

    #[test]
    fn c1v_examples() {
        let o = a2(&[]);
        let n = NovikovCoset::new(&o, 0, to_rat(&[1, 1])).unwrap();
        assert_eq!(c1v(&o, &n).unwrap(), -4);
        let o = a2(&[1]);
        let n = NovikovCoset::new(&o, 0, to_rat(&[1, 0])).unwrap();
        assert_eq!(c1v(&o, &n).unwrap(), -3);
        let n = NovikovCoset::new(&o, 0, to_rat(&[0, 0])).unwrap();
        assert_eq!(c1v(&o, &n).unwrap(), 0);
    }

    #[test]
    fn unstable_dims() {
        let o = a2(&[]);
        let a = PerturbationPoint::canonical(&o.rd);
        assert_eq!(unstable_dim(&o, 0, &a), 0);
        let w0 = o.weyl.order() - 1;
        assert_eq!(unstable_dim(&o, w0, &a), 6);
        let o = a2(&[1]);
        let s1 = o.weyl.simple_reflection(0);
        assert_eq!(unstable_dim(&o, s1, &a), 2);
    }

    #[test]
    fn psi_and_p_map() {
        let o = a2(&[1]);
        let z = psi(&o, 0, &to_rat(&[0, 1])).unwrap();
        assert!(z.is_zero());
        let p = psi(&o, 0, &to_rat(&[1, 0])).unwrap();
        assert_eq!(p.projection, vec![rat(0), ratio(-1, 2)]);
        assert!(!p.is_zero());
        assert_eq!(p_map(&o, 0, &to_rat(&[0, 1]), &to_rat(&[0, 0])).unwrap(), to_rat(&[0, 0]));
        assert_eq!(
            p_map(&o, 0, &to_rat(&[1, 0]), &[rat(0), ratio(-1, 2)]).unwrap(),
            to_rat(&[1, 0])
        );
        assert!(matches!(
            p_map(&o, 0, &to_rat(&[1, 0]), &to_rat(&[0, 0])),
            Err(Error::Coset(_))
        ));
    }

    #[test]
    fn coset_equality_and_rebase() {
        let o = a2(&[1]);
        let n1 = NovikovCoset::new(&o, 0, to_rat(&[1, 0])).unwrap();
        let n2 = NovikovCoset::new(&o, 0, to_rat(&[1, 3])).unwrap();
        assert_eq!(n1, n2);
        let n3 = NovikovCoset::new(&o, 0, to_rat(&[2, 0])).unwrap();
        assert_ne!(n1, n3);
        let s1 = o.weyl.simple_reflection(0);
        let s2 = o.weyl.simple_reflection(1);
        let r = n1.rebase(&o, s1).rebase(&o, s2);
        assert_eq!(r, n1.rebase(&o, o.weyl.mul(s2, s1)));
        assert_eq!(c1v(&o, &r).unwrap(), c1v(&o, &n1).unwrap());
    }
}
