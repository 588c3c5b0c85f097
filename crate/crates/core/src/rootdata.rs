//! Root systems, lattices and the normalized invariant metric.
//!
//! Vectors of the Cartan subalgebra `t` are stored in the simple-coroot basis
//! `α_1^∨, …, α_r^∨` with exact rational coordinates. Roots are stored as
//! linear functionals, i.e. as their integer values on the simple coroots, so
//! every pairing `α(v)` is a dot product and never touches the metric.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rat};

/// Squared length of every highest root after normalization.
pub const DEFAULT_NORMALIZATION: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeKind {
    /// `Q = Q₀`, the coroot lattice.
    SimplyConnected,
    /// `Q = P^∨`, the coweight lattice.
    Adjoint,
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sc" | "simply-connected" => Ok(LatticeKind::SimplyConnected),
            "ad" | "adjoint" => Ok(LatticeKind::Adjoint),
            other => Err(Error::Spec(format!("unknown lattice kind {other:?}"))),
        }
    }
}

/// One simple factor, e.g. `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub letter: char,
    pub rank: usize,
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Parses `A2`, `B3`, `A1xA2`, ...
pub fn parse_series(spec: &str) -> Result<Vec<SimpleFactor>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Spec("empty root system specification".into()));
    }
    spec.split('x')
        .map(|part| {
            let mut chars = part.chars();
            let letter = chars
                .next()
                .filter(|c| ('A'..='G').contains(c))
                .ok_or_else(|| Error::Spec(format!("bad series letter in {part:?}")))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Spec(format!("bad rank in {part:?}")));
            }
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::Spec(format!("bad rank in {part:?}")))?;
            let factor = SimpleFactor { letter, rank };
            dynkin(factor, rat(1))?;
            Ok(factor)
        })
        .collect()
}

pub fn series_string(factors: &[SimpleFactor]) -> String {
    factors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("x")
}

/// Bourbaki-numbered Dynkin data: squared lengths of simple roots (long roots
/// have squared length `long`) and bonds `(i, j, multiplicity)`.
fn dynkin(f: SimpleFactor, long: Rat) -> Result<(Vec<Rat>, Vec<(usize, usize, i64)>)> {
    let n = f.rank;
    let chain = |n: usize| -> Vec<(usize, usize, i64)> { (1..n).map(|i| (i - 1, i, 1)).collect() };
    let bad = || Err(Error::Spec(format!("no root system of type {f}")));
    let half = long / rat(2);
    let third = long / rat(3);
    match f.letter {
        'A' if n >= 1 => Ok((vec![long; n], chain(n))),
        'B' if n >= 2 => {
            let mut lens = vec![long; n];
            lens[n - 1] = half;
            let mut bonds = chain(n);
            bonds[n - 2].2 = 2;
            Ok((lens, bonds))
        }
        'C' if n >= 2 => {
            let mut lens = vec![half; n];
            lens[n - 1] = long;
            let mut bonds = chain(n);
            bonds[n - 2].2 = 2;
            Ok((lens, bonds))
        }
        'D' if n >= 4 => {
            let mut bonds = chain(n - 1);
            bonds.push((n - 3, n - 1, 1));
            Ok((vec![long; n], bonds))
        }
        'E' if (6..=8).contains(&n) => {
            let mut bonds = vec![(0, 2, 1), (1, 3, 1)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1, 1)));
            Ok((vec![long; n], bonds))
        }
        'F' if n == 4 => Ok((
            vec![long, long, half, half],
            vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
        )),
        'G' if n == 2 => Ok((vec![third, long], vec![(0, 1, 3)])),
        _ => bad(),
    }
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub coeffs: Vec<i64>,
    /// Values `α(α_j^∨)` on the simple coroots.
    pub functional: Vec<i64>,
    /// `α^∨` in the simple-coroot basis.
    pub coroot: Vec<i64>,
    pub norm2: Rat,
    pub factor: usize,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn pair(&self, v: &[Rat]) -> Rat {
        linalg::dot_int(&self.functional, v)
    }
}

/// Reference to an element of `R = R⁺ ⊔ (−R⁺)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootRef {
    pub index: usize,
    pub positive: bool,
}

impl RootRef {
    pub fn pos(index: usize) -> Self {
        RootRef { index, positive: true }
    }

    pub fn negate(self) -> Self {
        RootRef { index: self.index, positive: !self.positive }
    }

    fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    pub factors: Vec<SimpleFactor>,
    pub rank: usize,
    /// `cartan[i][j] = α_i(α_j^∨)`.
    pub cartan: Vec<Vec<i64>>,
    /// `⟨α_i, α_j⟩` for the normalized metric.
    pub root_inner: Vec<Vec<Rat>>,
    /// `⟨α_i^∨, α_j^∨⟩`: the metric on `t` in coroot coordinates.
    pub gram: Vec<Vec<Rat>>,
    gram_inv: Vec<Vec<Rat>>,
    pub positive_roots: Vec<Root>,
    /// Indices (into `positive_roots`) of the highest root of each factor.
    pub highest: Vec<usize>,
    /// Simple index → factor index.
    pub factor_of: Vec<usize>,
    pub lattice_kind: LatticeKind,
    pub unit_lattice_basis: Vec<Vec<Rat>>,
    pub normalization: Rat,
    by_functional: HashMap<Vec<i64>, RootRef>,
}

impl RootDatum {
    pub fn new(spec: &str, kind: LatticeKind) -> Result<Self> {
        Self::build(&parse_series(spec)?, kind)
    }

    pub fn build(factors: &[SimpleFactor], kind: LatticeKind) -> Result<Self> {
        Self::build_with_normalization(factors, kind, rat(DEFAULT_NORMALIZATION))
    }

    /// Builds the datum with every highest root of squared length `norm`.
    pub fn build_with_normalization(
        factors: &[SimpleFactor],
        kind: LatticeKind,
        norm: Rat,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Spec("empty root system specification".into()));
        }
        if norm <= Rat::zero() {
            return Err(Error::Spec("normalization must be positive".into()));
        }
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut lens = Vec::with_capacity(rank);
        let mut bonds = Vec::new();
        let mut factor_of = Vec::with_capacity(rank);
        let mut offset = 0;
        for (fi, &f) in factors.iter().enumerate() {
            let (l, b) = dynkin(f, norm)?;
            lens.extend(l);
            bonds.extend(b.into_iter().map(|(i, j, m)| (i + offset, j + offset, m)));
            factor_of.extend(std::iter::repeat_n(fi, f.rank));
            offset += f.rank;
        }
        let mut root_inner = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            root_inner[i][i] = lens[i];
        }
        for &(i, j, m) in &bonds {
            let v = -rat(m) * lens[i].min(lens[j]) / rat(2);
            root_inner[i][j] = v;
            root_inner[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let a = rat(2) * root_inner[i][j] / lens[j];
                        debug_assert!(a.is_integer());
                        a.to_integer()
                    })
                    .collect()
            })
            .collect();
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| rat(4) * root_inner[i][j] / (lens[i] * lens[j]))
                    .collect()
            })
            .collect();
        let gram_inv = linalg::inverse(&gram)
            .ok_or_else(|| Error::Internal("metric is degenerate".into()))?;

        let positive_roots = enumerate_positive_roots(&cartan, &root_inner, &factor_of);
        let highest = (0..factors.len())
            .map(|fi| {
                positive_roots
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.factor == fi)
                    .max_by_key(|(_, r)| r.height())
                    .map(|(i, _)| i)
                    .expect("every factor has roots")
            })
            .collect();

        let unit_lattice_basis = match kind {
            LatticeKind::SimplyConnected => linalg::identity_int(rank)
                .iter()
                .map(|r| linalg::to_rat(r))
                .collect(),
            LatticeKind::Adjoint => {
                let a: Vec<Vec<Rat>> = cartan.iter().map(|r| linalg::to_rat(r)).collect();
                let inv = linalg::inverse(&a)
                    .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
                // Columns of A⁻¹ are the fundamental coweights.
                linalg::transpose(&inv)
            }
        };

        let mut by_functional = HashMap::new();
        for (i, r) in positive_roots.iter().enumerate() {
            by_functional.insert(r.functional.clone(), RootRef::pos(i));
            let neg: Vec<i64> = r.functional.iter().map(|x| -x).collect();
            by_functional.insert(neg, RootRef::pos(i).negate());
        }

        Ok(RootDatum {
            by_functional,
            factors: factors.to_vec(),
            rank,
            cartan,
            root_inner,
            gram,
            gram_inv,
            positive_roots,
            highest,
            factor_of,
            lattice_kind: kind,
            unit_lattice_basis,
            normalization: norm,
        })
    }

    pub fn name(&self) -> String {
        series_string(&self.factors)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Functional of a (possibly negative) root.
    pub fn functional(&self, r: RootRef) -> Vec<i64> {
        let s = r.sign();
        self.positive_roots[r.index].functional.iter().map(|x| s * x).collect()
    }

    pub fn pair(&self, r: RootRef, v: &[Rat]) -> Rat {
        self.positive_roots[r.index].pair(v) * rat(r.sign())
    }

    pub fn coroot(&self, r: RootRef) -> Vec<Rat> {
        let s = r.sign();
        self.positive_roots[r.index].coroot.iter().map(|&x| rat(s * x)).collect()
    }

    /// All of `R`, positive roots first.
    pub fn all_roots(&self) -> impl Iterator<Item = RootRef> + '_ {
        let n = self.positive_roots.len();
        (0..n)
            .map(RootRef::pos)
            .chain((0..n).map(|i| RootRef::pos(i).negate()))
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.positive_roots
            .iter()
            .position(|r| r.height() == 1 && r.coeffs[i] == 1)
            .expect("simple roots are positive roots")
    }

    /// Index of the positive root with the given simple-root coordinates.
    pub fn root_by_coeffs(&self, coeffs: &[i64]) -> Option<RootRef> {
        if let Some(i) = self.positive_roots.iter().position(|r| r.coeffs == coeffs) {
            return Some(RootRef::pos(i));
        }
        let neg: Vec<i64> = coeffs.iter().map(|x| -x).collect();
        self.positive_roots
            .iter()
            .position(|r| r.coeffs == neg)
            .map(|i| RootRef::pos(i).negate())
    }

    /// Finds the root whose functional equals `f`.
    pub fn root_by_functional(&self, f: &[i64]) -> Option<RootRef> {
        self.by_functional.get(f).copied()
    }

    pub fn inner(&self, u: &[Rat], v: &[Rat]) -> Rat {
        linalg::bilinear(&self.gram, u, v)
    }

    pub fn norm2(&self, v: &[Rat]) -> Rat {
        self.inner(v, v)
    }

    /// The vector of `t` dual to a functional (given by its values on simple coroots).
    pub fn dual(&self, functional: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.gram_inv, functional)
    }

    /// Functional `⟨v, -⟩` in simple-coroot values.
    pub fn functional_of_vector(&self, v: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.gram, v)
    }

    /// `Σ_{α ∈ R⁺ ∖ R_I⁺} α` as a functional.
    pub fn rho_i_functional(&self, subset: &[usize]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for r in &self.positive_roots {
            if !in_parabolic(&r.coeffs, subset) {
                for (o, x) in out.iter_mut().zip(&r.functional) {
                    *o += x;
                }
            }
        }
        out
    }

    pub fn rho_functional(&self) -> Vec<i64> {
        self.rho_i_functional(&[])
    }

    /// `ρ = Σ_{α>0} α` regarded as a vector of `t`.
    pub fn rho(&self) -> LatticeVector {
        LatticeVector::free(self.dual(&linalg::to_rat(&self.rho_functional())))
    }

    /// `ρ_I` regarded as a vector of `t`.
    pub fn rho_i(&self, subset: &[usize]) -> Result<LatticeVector> {
        self.check_subset(subset)?;
        Ok(LatticeVector::free(
            self.dual(&linalg::to_rat(&self.rho_i_functional(subset))),
        ))
    }

    pub fn check_subset(&self, subset: &[usize]) -> Result<()> {
        if let Some(&i) = subset.iter().find(|&&i| i >= self.rank) {
            return Err(Error::Spec(format!(
                "simple index {} out of range for rank {}",
                i + 1,
                self.rank
            )));
        }
        Ok(())
    }

    /// Positive roots whose simple-root support lies in `subset`.
    pub fn parabolic_positive_roots(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&i| in_parabolic(&self.positive_roots[i].coeffs, subset))
            .collect()
    }

    pub fn in_unit_lattice(&self, v: &[Rat]) -> bool {
        linalg::in_lattice(&self.unit_lattice_basis, v)
    }

    pub fn in_coroot_lattice(&self, v: &[Rat]) -> bool {
        v.iter().all(|x| x.is_integer())
    }

    /// Converts coordinates in the basis of `Q` to simple-coroot coordinates.
    pub fn from_unit_coords(&self, c: &[i64]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.rank];
        for (b, &k) in self.unit_lattice_basis.iter().zip(c) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += *x * k;
            }
        }
        out
    }

    /// Gram matrix of the chosen basis of `Q`.
    pub fn unit_lattice_gram(&self) -> Vec<Vec<Rat>> {
        let b = &self.unit_lattice_basis;
        b.iter()
            .map(|u| b.iter().map(|v| self.inner(u, v)).collect())
            .collect()
    }

    /// Vectors `v` with given values `α_i(v)` on the simple roots.
    pub fn from_simple_values(&self, values: &[Rat]) -> Vec<Rat> {
        let a: Vec<Vec<Rat>> = self.cartan.iter().map(|r| linalg::to_rat(r)).collect();
        let inv = linalg::inverse(&a).expect("Cartan matrices are invertible");
        linalg::mat_vec(&inv, values)
    }

    pub fn simple_values(&self, v: &[Rat]) -> Vec<Rat> {
        linalg::int_mat_vec(&self.cartan, v)
    }

    /// `Q_S` and `P^∨_S` for a set of roots.
    pub fn sublattices(&self, roots: &[RootRef]) -> SublatticePair {
        let mut set: Vec<RootRef> = roots
            .iter()
            .flat_map(|&r| [r, r.negate()])
            .collect();
        set.sort();
        set.dedup();
        let coroots: Vec<Vec<Rat>> = set.iter().map(|&r| self.coroot(r)).collect();
        let q_basis = linalg::lattice_basis(&coroots);
        let pvee_basis = if q_basis.is_empty() {
            Vec::new()
        } else {
            // P^∨_S = {v ∈ span Q_S : α(v) ∈ Z ∀α ∈ S}, the dual of the row
            // lattice of M = (α(b_j)) in the coordinates of a Q_S basis.
            let rows: Vec<Vec<i64>> = set
                .iter()
                .map(|&r| {
                    q_basis
                        .iter()
                        .map(|b| {
                            let x = self.pair(r, b);
                            debug_assert!(x.is_integer());
                            x.to_integer()
                        })
                        .collect()
                })
                .collect();
            let h = linalg::hermite_rows(&rows);
            let hr: Vec<Vec<Rat>> = h.iter().map(|r| linalg::to_rat(r)).collect();
            let hinv = linalg::inverse(&hr).expect("roots of S are nondegenerate on span(S^∨)");
            let cols = linalg::transpose(&hinv);
            let gens: Vec<Vec<Rat>> = cols
                .iter()
                .map(|c| {
                    let mut v = vec![Rat::zero(); self.rank];
                    for (b, k) in q_basis.iter().zip(c) {
                        for (o, x) in v.iter_mut().zip(b) {
                            *o += *x * *k;
                        }
                    }
                    v
                })
                .collect();
            linalg::lattice_basis(&gens)
        };
        SublatticePair { roots: set, q_basis, pvee_basis }
    }
}

/// `Q_S` and `P^∨_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticePair {
    pub roots: Vec<RootRef>,
    pub q_basis: Vec<Vec<Rat>>,
    pub pvee_basis: Vec<Vec<Rat>>,
}

impl SublatticePair {
    pub fn rank(&self) -> usize {
        self.q_basis.len()
    }

    /// `[P^∨_S : Q_S]`.
    pub fn index(&self) -> Result<i64> {
        let (free, torsion) = quotient_structure(&self.pvee_basis, &self.q_basis)?;
        debug_assert_eq!(free, 0);
        Ok(torsion.iter().product())
    }
}

/// Free rank and torsion invariants of `L1 / L2`.
pub fn quotient_structure(l1: &[Vec<Rat>], l2: &[Vec<Rat>]) -> Result<(usize, Vec<i64>)> {
    let r1 = linalg::rank(l1);
    if r1 != l1.len() {
        return Err(Error::Lattice("generators of L1 are not a basis".into()));
    }
    let coords: Vec<Vec<i64>> = l2
        .iter()
        .map(|v| {
            linalg::lattice_coords(l1, v)
                .ok_or_else(|| Error::Lattice("L2 is not contained in L1".into()))
        })
        .collect::<Result<_>>()?;
    let diag = linalg::smith_diagonal(&coords);
    let free = r1 - diag.len();
    Ok((free, diag.into_iter().filter(|&d| d > 1).collect()))
}

fn in_parabolic(coeffs: &[i64], subset: &[usize]) -> bool {
    coeffs
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || subset.contains(&i))
}

fn enumerate_positive_roots(
    cartan: &[Vec<i64>],
    root_inner: &[Vec<Rat>],
    factor_of: &[usize],
) -> Vec<Root> {
    let rank = cartan.len();
    let functional = |c: &[i64]| -> Vec<i64> {
        (0..rank)
            .map(|j| (0..rank).map(|i| c[i] * cartan[i][j]).sum())
            .collect()
    };
    let mut seen: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut frontier = seen.clone();
    while let Some(c) = frontier.pop() {
        let f = functional(&c);
        for (i, fi) in f.iter().enumerate() {
            let mut d = c.clone();
            d[i] -= fi;
            if !seen.contains(&d) {
                seen.push(d.clone());
                frontier.push(d);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos.into_iter()
        .map(|coeffs| {
            let c = linalg::to_rat(&coeffs);
            let norm2 = linalg::bilinear(root_inner, &c, &c);
            let coroot: Vec<i64> = (0..rank)
                .map(|i| {
                    let x = rat(coeffs[i]) * root_inner[i][i] / norm2;
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect();
            let factor = factor_of[coeffs.iter().position(|&x| x != 0).unwrap()];
            Root {
                functional: functional(&coeffs),
                coeffs,
                coroot,
                norm2,
                factor,
            }
        })
        .collect()
}

/// How a [`LatticeVector`] is constrained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Free,
    InUnitLattice,
    InSublattice(Vec<Vec<Rat>>),
}

/// A point of `t` in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector {
    pub coords: Vec<Rat>,
    pub constraint: Constraint,
}

impl LatticeVector {
    pub fn free(coords: Vec<Rat>) -> Self {
        LatticeVector { coords, constraint: Constraint::Free }
    }

    pub fn zero(rank: usize) -> Self {
        Self::free(vec![Rat::zero(); rank])
    }

    /// A vector of `Q`; fails when the coordinates leave the unit lattice.
    pub fn in_unit_lattice(rd: &RootDatum, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != rd.rank {
            return Err(Error::Spec(format!(
                "expected {} coordinates, got {}",
                rd.rank,
                coords.len()
            )));
        }
        if !rd.in_unit_lattice(&coords) {
            return Err(Error::Lattice(format!(
                "({}) is not in the unit lattice",
                fmt_coords(&coords)
            )));
        }
        Ok(LatticeVector { coords, constraint: Constraint::InUnitLattice })
    }

    pub fn in_sublattice(basis: &[Vec<Rat>], coords: Vec<Rat>) -> Result<Self> {
        if !linalg::in_lattice(basis, &coords) {
            return Err(Error::Lattice(format!(
                "({}) is not in the requested sublattice",
                fmt_coords(&coords)
            )));
        }
        Ok(LatticeVector {
            coords,
            constraint: Constraint::InSublattice(basis.to_vec()),
        })
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::free(linalg::to_rat(v))
    }

    pub fn satisfies_constraint(&self, rd: &RootDatum) -> bool {
        match &self.constraint {
            Constraint::Free => true,
            Constraint::InUnitLattice => rd.in_unit_lattice(&self.coords),
            Constraint::InSublattice(b) => linalg::in_lattice(b, &self.coords),
        }
    }
}

impl std::ops::Deref for LatticeVector {
    type Target = [Rat];

    fn deref(&self) -> &[Rat] {
        &self.coords
    }
}

pub fn fmt_coords(v: &[Rat]) -> String {
    v.iter().map(linalg::fmt_rat).collect::<Vec<_>>().join(",")
}

/// `true` if every simple root is non-negative on `v`.
pub fn is_dominant(rd: &RootDatum, v: &[Rat]) -> bool {
    rd.simple_values(v).iter().all(|x| *x >= Rat::zero())
}

pub fn is_strictly_dominant(rd: &RootDatum, v: &[Rat]) -> bool {
    rd.simple_values(v).iter().all(|x| *x > Rat::zero())
}

impl RootDatum {
    /// Checks the invariants of the normalized metric: equal highest-root
    /// lengths and `ρ ∈ Q₀`.
    pub fn metric_is_normalized(&self) -> bool {
        let highest_ok = self
            .highest
            .iter()
            .all(|&h| self.positive_roots[h].norm2 == self.normalization);
        highest_ok && self.in_coroot_lattice(&self.rho())
    }

    /// Number of roots in `R`.
    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn one_vector(&self) -> Vec<Rat> {
        vec![Rat::one(); self.rank]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rd(s: &str) -> RootDatum {
        RootDatum::new(s, LatticeKind::SimplyConnected).unwrap()
    }

    #[test]
    fn parses_products_and_rejects_garbage() {
        assert_eq!(parse_series("A1xA2").unwrap().len(), 2);
        for bad in ["", "H2", "A0", "B1", "G3", "E9", "A", "A2x", "a2", "D3"] {
            assert!(matches!(parse_series(bad), Err(Error::Spec(_))), "{bad}");
        }
    }

    #[test]
    fn rank_one() {
        let r = rd("A1");
        assert_eq!(r.cartan, vec![vec![2]]);
        assert_eq!(r.num_positive_roots(), 1);
        assert_eq!(r.unit_lattice_basis, vec![vec![rat(1)]]);
    }

    #[test]
    fn positive_root_counts() {
        for (s, n) in [
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("C3", 9),
            ("G2", 6),
            ("D4", 12),
            ("F4", 24),
            ("E6", 36),
            ("A1xA1", 2),
        ] {
            assert_eq!(rd(s).num_positive_roots(), n, "{s}");
        }
    }

    #[test]
    fn g2_lengths_after_normalization() {
        let r = rd("G2");
        let mut lens: Vec<Rat> = r.positive_roots.iter().map(|x| x.norm2).collect();
        lens.sort();
        lens.dedup();
        assert_eq!(lens, vec![rat(4), rat(12)]);
    }

    #[test]
    fn cartan_matches_series() {
        assert_eq!(rd("B2").cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(rd("C2").cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(rd("G2").cartan, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn adjoint_a2_index_three() {
        let r = RootDatum::new("A2", LatticeKind::Adjoint).unwrap();
        let q0 = linalg::identity_int(2).iter().map(|x| linalg::to_rat(x)).collect::<Vec<_>>();
        let (free, tors) = quotient_structure(&r.unit_lattice_basis, &q0).unwrap();
        assert_eq!((free, tors), (0, vec![3]));
        let h = &r.positive_roots[r.highest[0]];
        assert_eq!(h.coeffs, vec![1, 1]);
    }

    #[test]
    fn rho_values() {
        let a1 = rd("A1");
        assert_eq!(a1.rho_functional(), vec![2]);
        let a2 = rd("A2");
        let theta_vee = linalg::to_rat(&a2.positive_roots[a2.highest[0]].coroot);
        assert_eq!(linalg::dot_int(&a2.rho_functional(), &theta_vee), rat(4));
        let rho_i = a2.rho_i_functional(&[1]);
        assert_eq!(rho_i[1], 0);
    }

    #[test]
    fn sublattice_examples() {
        let a2 = rd("A2");
        let empty = a2.sublattices(&[]);
        assert!(empty.q_basis.is_empty() && empty.pvee_basis.is_empty());
        let a2_simple = a2.root_by_coeffs(&[0, 1]).unwrap();
        let s = a2.sublattices(&[a2_simple]);
        assert_eq!(s.q_basis, vec![vec![rat(0), rat(1)]]);
        assert_eq!(s.pvee_basis, vec![vec![rat(0), ratio(1, 2)]]);
        let b2 = rd("B2");
        let long = b2.root_by_coeffs(&[1, 0]).unwrap();
        assert_eq!(b2.sublattices(&[long]).index().unwrap(), 2);
    }

    #[test]
    fn quotient_errors_when_not_contained() {
        let l1 = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let l2 = vec![vec![ratio(1, 2), rat(0)]];
        assert!(matches!(quotient_structure(&l1, &l2), Err(Error::Lattice(_))));
        assert_eq!(quotient_structure(&l1, &l1).unwrap(), (0, vec![]));
    }

    #[test]
    fn adjoint_a1_quotient() {
        let r = RootDatum::new("A1", LatticeKind::Adjoint).unwrap();
        let (free, tors) = quotient_structure(&r.unit_lattice_basis, &[vec![rat(1)]]).unwrap();
        assert_eq!((free, tors), (0, vec![2]));
    }

    #[test]
    fn unit_lattice_membership() {
        let r = RootDatum::new("A1", LatticeKind::Adjoint).unwrap();
        assert!(LatticeVector::in_unit_lattice(&r, vec![ratio(1, 2)]).is_ok());
        assert!(LatticeVector::in_unit_lattice(&r, vec![ratio(1, 3)]).is_err());
        let sc = rd("A1");
        assert!(LatticeVector::in_unit_lattice(&sc, vec![ratio(1, 2)]).is_err());
    }
}
