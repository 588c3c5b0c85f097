//! Affine walls `V_{α,k} = {α = k}`: crossings along segments, niceness,
//! `deg(q)` and Bott–Samelson wall sequences.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, rat, ratio, Rat};
use crate::rootdata::RootDatum;

/// Odd primes used as denominators of the canonical perturbation point.
const PRIMES: [i64; 16] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59];
const MAX_HALVINGS: usize = 64;

/// A crossing of the affine wall `{α = level}` by a segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallCrossing {
    /// Index into `RootDatum::positive_roots`.
    pub root: usize,
    pub level: i64,
    pub time: Rat,
    /// Crossings sharing a tag happen at the same time (for wall sequences:
    /// the same limiting time).
    pub group: usize,
}

impl WallCrossing {
    pub fn wall(&self) -> (usize, i64) {
        (self.root, self.level)
    }
}

/// A point in the open dominant alcove, given by its values `α_i(a)` on the
/// simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationPoint {
    pub coords: Vec<Rat>,
    pub simple_values: Vec<Rat>,
    /// Segments `[-s a, q]` (all `s ∈ (0, 1]`) known to be nice.
    pub certified: Vec<Vec<Rat>>,
}

impl PerturbationPoint {
    /// `α_i(a) = c / p_i` with `p_i` the odd primes, `c = 2^{-k}` as large as
    /// the alcove allows.
    pub fn canonical(rd: &RootDatum) -> Self {
        Self::with_prime_offset(rd, 0)
    }

    pub fn with_prime_offset(rd: &RootDatum, offset: usize) -> Self {
        let base: Vec<Rat> = (0..rd.rank)
            .map(|i| ratio(1, PRIMES[(i + offset) % PRIMES.len()]))
            .collect();
        let mut c = Rat::one();
        loop {
            let values = linalg::scale(c, &base);
            if let Ok(p) = Self::from_simple_values(rd, values) {
                return p;
            }
            c /= rat(2);
        }
    }

    /// Validates `0 < α(a) < 1` for every positive root.
    pub fn from_simple_values(rd: &RootDatum, values: Vec<Rat>) -> Result<Self> {
        if values.len() != rd.rank {
            return Err(Error::Spec(format!(
                "expected {} simple-root values, got {}",
                rd.rank,
                values.len()
            )));
        }
        let coords = rd.from_simple_values(&values);
        for r in &rd.positive_roots {
            let x = r.pair(&coords);
            if x <= Rat::zero() || x >= Rat::one() {
                return Err(Error::NotGeneric(format!(
                    "root {:?} takes value {} on the perturbation point",
                    r.coeffs,
                    linalg::fmt_rat(&x)
                )));
            }
        }
        Ok(PerturbationPoint { coords, simple_values: values, certified: Vec::new() })
    }

    pub fn from_coords(rd: &RootDatum, coords: &[Rat]) -> Result<Self> {
        Self::from_simple_values(rd, rd.simple_values(coords))
    }

    pub fn scaled(&self, c: Rat) -> Self {
        PerturbationPoint {
            coords: linalg::scale(c, &self.coords),
            simple_values: linalg::scale(c, &self.simple_values),
            certified: Vec::new(),
        }
    }

    pub fn neg(&self) -> Vec<Rat> {
        linalg::neg(&self.coords)
    }

    /// Shrinks `a` until `[-s a, q]` is nice for every `s ∈ (0, 1]` and every
    /// query; rotates to fresh primes when a coincidence persists for all `s`.
    pub fn certify(rd: &RootDatum, start: &PerturbationPoint, queries: &[Vec<Rat>]) -> Result<Self> {
        let mut candidate = start.clone();
        for offset in 0..PRIMES.len() {
            if offset > 0 {
                candidate = Self::with_prime_offset(rd, offset);
            }
            let mut halvings = 0;
            loop {
                match queries
                    .iter()
                    .map(|q| family_obstruction(rd, &candidate, q))
                    .find(|o| *o != Obstruction::None)
                {
                    None => {
                        candidate.certified = queries.to_vec();
                        return Ok(candidate);
                    }
                    Some(Obstruction::Persistent) => break,
                    Some(Obstruction::AtScale) => {
                        halvings += 1;
                        if halvings > MAX_HALVINGS {
                            break;
                        }
                        candidate = candidate.scaled(ratio(1, 2));
                    }
                    Some(Obstruction::None) => unreachable!(),
                }
            }
        }
        Err(Error::Internal(
            "could not find a perturbation point making the query segments nice".into(),
        ))
    }

    pub fn is_certified_for(&self, q: &[Rat]) -> bool {
        self.certified.iter().any(|c| c == q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Obstruction {
    None,
    /// Two walls meet the segment at the same time for some `s ∈ (0, 1]`;
    /// shrinking `a` pushes the bad `s` out of range.
    AtScale,
    /// Two walls coincide along the whole family.
    Persistent,
}

/// Checks the family of segments `[-s a, q]`, `s ∈ (0, 1]`.
///
/// The crossing time of `(α, k)` is `(k + sα(a)) / (α(q) + sα(a))`, and two
/// such times agree exactly when `A + sB = 0` for integers/rationals `A, B`
/// computed below (the `s²` terms cancel).
fn family_obstruction(rd: &RootDatum, a: &PerturbationPoint, q: &[Rat]) -> Obstruction {
    let walls = crossing_times(rd, &a.neg(), q);
    let data: Vec<(Rat, Rat, Rat)> = walls
        .iter()
        .map(|w| {
            let r = &rd.positive_roots[w.root];
            (rat(w.level), r.pair(&a.coords), r.pair(q))
        })
        .collect();
    let mut worst = Obstruction::None;
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            let (k, aa, qa) = data[i];
            let (m, ab, qb) = data[j];
            let big_a = k * qb - m * qa;
            let big_b = k * ab + aa * qb - m * aa - ab * qa;
            if big_b.is_zero() {
                if big_a.is_zero() {
                    return Obstruction::Persistent;
                }
                continue;
            }
            let s = -big_a / big_b;
            if s > Rat::zero() && s <= Rat::one() {
                worst = Obstruction::AtScale;
            }
        }
    }
    worst
}

/// All walls `(α, k)`, `α ∈ R⁺`, with `(α(x) − k)(α(y) − k) < 0`, sorted by
/// crossing time.
pub fn crossing_times(rd: &RootDatum, x: &[Rat], y: &[Rat]) -> Vec<WallCrossing> {
    let all: Vec<usize> = (0..rd.num_positive_roots()).collect();
    crossing_times_in(rd, &all, x, y)
}

/// As [`crossing_times`], restricted to the walls of the given positive roots.
pub fn crossing_times_in(rd: &RootDatum, roots: &[usize], x: &[Rat], y: &[Rat]) -> Vec<WallCrossing> {
    let mut out = Vec::new();
    for &ri in roots {
        let r = &rd.positive_roots[ri];
        let ax = r.pair(x);
        let ay = r.pair(y);
        if ax == ay {
            continue;
        }
        let (lo, hi) = if ax < ay { (ax, ay) } else { (ay, ax) };
        let first = linalg::floor(lo) + 1;
        let last = if hi.is_integer() { hi.to_integer() - 1 } else { linalg::floor(hi) };
        for k in first..=last {
            if rat(k) == lo {
                continue;
            }
            out.push(WallCrossing {
                root: ri,
                level: k,
                time: (rat(k) - ax) / (ay - ax),
                group: 0,
            });
        }
    }
    out.sort_by(|a, b| a.time.cmp(&b.time).then(a.root.cmp(&b.root)).then(a.level.cmp(&b.level)));
    assign_groups_by(&mut out, |w| w.time);
    out
}

fn assign_groups_by(walls: &mut [WallCrossing], key: impl Fn(&WallCrossing) -> Rat) {
    let mut group = 0;
    for i in 0..walls.len() {
        if i > 0 && key(&walls[i]) != key(&walls[i - 1]) {
            group += 1;
        }
        walls[i].group = group;
    }
}

/// Outcome of [`is_nice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceReport {
    pub nice: bool,
    /// First offending time and the walls through that point.
    pub violation: Option<(Rat, Vec<(usize, i64)>)>,
}

/// Niceness of the straight segment `[x, y]`.
///
/// A segment fails if it lies inside a wall, or if a point with `t ∈ [0, 1)`
/// lies on two or more of the walls it meets. The terminal point is exempt,
/// since it is usually a lattice point where many walls meet.
pub fn is_nice(rd: &RootDatum, x: &[Rat], y: &[Rat]) -> NiceReport {
    for (i, r) in rd.positive_roots.iter().enumerate() {
        let ax = r.pair(x);
        if ax == r.pair(y) && ax.is_integer() {
            return NiceReport {
                nice: false,
                violation: Some((Rat::zero(), vec![(i, ax.to_integer())])),
            };
        }
    }
    let mut at_start: Vec<(usize, i64)> = rd
        .positive_roots
        .iter()
        .enumerate()
        .filter_map(|(i, r)| {
            let ax = r.pair(x);
            ax.is_integer().then(|| (i, ax.to_integer()))
        })
        .collect();
    if at_start.len() >= 2 {
        at_start.sort();
        return NiceReport { nice: false, violation: Some((Rat::zero(), at_start)) };
    }
    let walls = crossing_times(rd, x, y);
    let mut i = 0;
    while i < walls.len() {
        let j = (i..walls.len()).take_while(|&j| walls[j].time == walls[i].time).count() + i;
        if j - i >= 2 {
            return NiceReport {
                nice: false,
                violation: Some((walls[i].time, walls[i..j].iter().map(WallCrossing::wall).collect())),
            };
        }
        i = j;
    }
    NiceReport { nice: true, violation: None }
}

/// Number of affine walls crossed by the open segment `(−a, q)`.
pub fn deg(rd: &RootDatum, q: &[Rat], a: &PerturbationPoint) -> Result<usize> {
    let report = is_nice(rd, &a.neg(), q);
    if !report.nice {
        let (t, walls) = report.violation.unwrap_or_default();
        return Err(Error::NotGeneric(format!(
            "segment [-a, q] is not nice at t = {}: walls {:?}",
            linalg::fmt_rat(&t),
            walls
        )));
    }
    Ok(crossing_times(rd, &a.neg(), q).len())
}

/// Bott–Samelson wall sequence for `q`: the walls met by `[-a, q]`, in the
/// order they are met, grouped by their limiting time as `a → 0`.
///
/// `a` is shrunk (or replaced) until `[-s a, q]` is nice for all
/// `s ∈ (0, 1]`; the point actually used is returned alongside the walls.
pub fn bs_wall_sequence(
    rd: &RootDatum,
    q: &[Rat],
    a: &PerturbationPoint,
) -> Result<(PerturbationPoint, Vec<WallCrossing>)> {
    let a = if a.is_certified_for(q) {
        a.clone()
    } else {
        PerturbationPoint::certify(rd, a, &[q.to_vec()])?
    };
    let mut walls = crossing_times(rd, &a.neg(), q);
    let limit = |w: &WallCrossing| -> Rat { rat(w.level) / rd.positive_roots[w.root].pair(q) };
    if walls.windows(2).any(|p| limit(&p[0]) > limit(&p[1])) {
        return Err(Error::Internal(
            "wall order at s = 1 disagrees with the limiting order".into(),
        ));
    }
    assign_groups_by(&mut walls, limit);
    Ok((a, walls))
}

/// Lattice points `Σ c_j b_j` (integer `c`) of gram-norm² at most `r2`.
pub fn lattice_points_in_ball(rd: &RootDatum, basis: &[Vec<Rat>], r2: Rat) -> Result<Vec<Vec<Rat>>> {
    let g: Vec<Vec<Rat>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| rd.inner(u, v)).collect())
        .collect();
    let pts = linalg::integer_points_in_ellipsoid(&g, r2)?;
    Ok(pts
        .into_iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); rd.rank];
            for (b, k) in basis.iter().zip(&c) {
                for (o, x) in v.iter_mut().zip(b) {
                    *o += *x * *k;
                }
            }
            v
        })
        .collect())
}

/// The orbit of `0` under the affine Weyl group, intersected with the
/// gram-ball of squared radius `r2`, by BFS over affine reflections.
pub fn affine_orbit_of_zero(rd: &RootDatum, r2: Rat) -> Result<BTreeSet<Vec<Rat>>> {
    if r2 < Rat::zero() {
        return Err(Error::Domain("negative radius".into()));
    }
    let origin = vec![Rat::zero(); rd.rank];
    let mut seen = BTreeSet::from([origin.clone()]);
    let mut queue = VecDeque::from([origin]);
    let coroots: Vec<(Vec<Rat>, Rat)> = rd
        .positive_roots
        .iter()
        .map(|r| {
            let c = linalg::to_rat(&r.coroot);
            let n = rd.norm2(&c);
            (c, n)
        })
        .collect();
    while let Some(v) = queue.pop_front() {
        for (r, (cv, cn)) in rd.positive_roots.iter().zip(&coroots) {
            let av = r.pair(&v);
            // s_{α,k}(v) = v − (α(v) − k) α^∨ with j = α(v) − k; |j α^∨| ≤ 2 radius.
            let jmax = linalg::isqrt_floor(rat(4) * r2 / cn);
            for j in -jmax..=jmax {
                if j == 0 || !(av - rat(j)).is_integer() {
                    continue;
                }
                let w = linalg::sub(&v, &linalg::scale(rat(j), cv));
                if rd.norm2(&w) <= r2 && !seen.contains(&w) {
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        if seen.len() > 5_000_000 {
            return Err(Error::Size("affine orbit too large".into()));
        }
    }
    Ok(seen)
}

/// Points of `Q₀` in the closed dominant alcove `Δ₀`.
pub fn coroot_points_in_alcove(rd: &RootDatum) -> Vec<Vec<Rat>> {
    // Δ₀ has simple-root values in [0, 1]; enumerate those and keep the
    // integral points whose highest roots stay ≤ 1.
    let n = rd.rank;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let vals: Vec<Rat> = (0..n).map(|i| rat(((mask >> i) & 1) as i64)).collect();
        let v = rd.from_simple_values(&vals);
        let inside = rd
            .highest
            .iter()
            .all(|&h| rd.positive_roots[h].pair(&v) <= Rat::one());
        if inside && rd.in_coroot_lattice(&v) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_rat;
    use crate::rootdata::LatticeKind;

    fn a2() -> RootDatum {
        RootDatum::new("A2", LatticeKind::SimplyConnected).unwrap()
    }

    fn walls(rd: &RootDatum, w: &[WallCrossing]) -> Vec<(Vec<i64>, i64)> {
        w.iter()
            .map(|c| (rd.positive_roots[c.root].coeffs.clone(), c.level))
            .collect()
    }

    #[test]
    fn canonical_point_is_in_alcove() {
        for s in ["A1", "A2", "B2", "G2", "F4", "E8", "A1xA2"] {
            let rd = RootDatum::new(s, LatticeKind::SimplyConnected).unwrap();
            let a = PerturbationPoint::canonical(&rd);
            assert!(PerturbationPoint::from_coords(&rd, &a.coords).is_ok(), "{s}");
        }
        let rd = a2();
        assert_eq!(PerturbationPoint::canonical(&rd).simple_values, vec![ratio(1, 3), ratio(1, 5)]);
    }

    #[test]
    fn rejects_points_outside_alcove() {
        let rd = a2();
        assert!(PerturbationPoint::from_simple_values(&rd, vec![ratio(1, 2), ratio(1, 2)]).is_err());
        assert!(PerturbationPoint::from_simple_values(&rd, vec![rat(0), ratio(1, 2)]).is_err());
    }

    #[test]
    fn a2_highest_coroot_crossings() {
        let rd = a2();
        let a = PerturbationPoint::canonical(&rd);
        let q = to_rat(&[1, 1]);
        let w = crossing_times(&rd, &a.neg(), &q);
        assert_eq!(
            walls(&rd, &w),
            vec![(vec![0, 1], 0), (vec![1, 1], 0), (vec![1, 0], 0), (vec![1, 1], 1)]
        );
        assert!(w.windows(2).all(|p| p[0].time < p[1].time));
        assert!(w.iter().all(|c| c.time > Rat::zero() && c.time < Rat::one()));
    }

    #[test]
    fn a1_four_crossings() {
        let rd = RootDatum::new("A1", LatticeKind::SimplyConnected).unwrap();
        let a = PerturbationPoint::canonical(&rd);
        let w = crossing_times(&rd, &a.neg(), &to_rat(&[2]));
        let levels: Vec<i64> = w.iter().map(|c| c.level).collect();
        assert_eq!(levels, vec![0, 1, 2, 3]);
        // α(x + t(y − x)) = k at each reported time.
        for c in &w {
            let p = linalg::add(&a.neg(), &linalg::scale(c.time, &linalg::sub(&to_rat(&[2]), &a.neg())));
            assert_eq!(rd.positive_roots[0].pair(&p), rat(c.level));
        }
    }

    #[test]
    fn segment_inside_one_alcove() {
        let rd = a2();
        let a = PerturbationPoint::canonical(&rd);
        let y = linalg::scale(ratio(1, 2), &a.coords);
        assert!(crossing_times(&rd, &a.coords, &y).is_empty());
        assert!(is_nice(&rd, &a.coords, &y).nice);
    }

    #[test]
    fn niceness_examples() {
        let rd = a2();
        let a = PerturbationPoint::canonical(&rd);
        let q = to_rat(&[1, 1]);
        assert!(is_nice(&rd, &a.neg(), &q).nice);
        let bad = is_nice(&rd, &[rat(0), rat(0)], &q);
        assert!(!bad.nice);
        let (t, ws) = bad.violation.unwrap();
        assert_eq!(t, Rat::zero());
        assert!(ws.len() >= 2);
        // Lying inside a wall.
        let inside = is_nice(&rd, &to_rat(&[1, 2]), &to_rat(&[2, 4]));
        assert!(!inside.nice);
    }

    #[test]
    fn deg_examples() {
        let rd = a2();
        let a = PerturbationPoint::canonical(&rd);
        assert_eq!(deg(&rd, &to_rat(&[0, 0]), &a).unwrap(), 0);
        assert_eq!(deg(&rd, &to_rat(&[1, 1]), &a).unwrap(), 4);
        let a1 = RootDatum::new("A1", LatticeKind::SimplyConnected).unwrap();
        let a = PerturbationPoint::canonical(&a1);
        assert_eq!(deg(&a1, &to_rat(&[-1]), &a).unwrap(), 1);
    }

    #[test]
    fn wall_sequences_from_both_sides() {
        let rd = a2();
        let q = to_rat(&[1, 1]);
        let near_first = PerturbationPoint::from_simple_values(&rd, vec![ratio(1, 3), ratio(1, 5)]).unwrap();
        let (_, w) = bs_wall_sequence(&rd, &q, &near_first).unwrap();
        assert_eq!(
            walls(&rd, &w),
            vec![(vec![0, 1], 0), (vec![1, 1], 0), (vec![1, 0], 0), (vec![1, 1], 1)]
        );
        assert_eq!(w.iter().map(|c| c.group).collect::<Vec<_>>(), vec![0, 0, 0, 1]);
        let near_second = PerturbationPoint::from_simple_values(&rd, vec![ratio(1, 5), ratio(1, 3)]).unwrap();
        let (_, w) = bs_wall_sequence(&rd, &q, &near_second).unwrap();
        assert_eq!(
            walls(&rd, &w),
            vec![(vec![1, 0], 0), (vec![1, 1], 0), (vec![0, 1], 0), (vec![1, 1], 1)]
        );
        let (_, w) = bs_wall_sequence(&rd, &to_rat(&[0, 0]), &near_first).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn orbit_of_zero_small_radius_and_a1() {
        let rd = RootDatum::new("A1", LatticeKind::SimplyConnected).unwrap();
        assert_eq!(affine_orbit_of_zero(&rd, ratio(1, 10)).unwrap().len(), 1);
        // |α^∨|² = 4/12, so ±2α^∨ has norm² 4/3.
        let orbit = affine_orbit_of_zero(&rd, ratio(4, 3)).unwrap();
        let expected: BTreeSet<Vec<Rat>> = (-2..=2).map(|k| vec![rat(k)]).collect();
        assert_eq!(orbit, expected);
    }

    #[test]
    fn alcove_meets_coroot_lattice_only_at_origin() {
        for s in ["A1", "A2", "B2", "C3", "G2", "F4", "A1xA1"] {
            let rd = RootDatum::new(s, LatticeKind::SimplyConnected).unwrap();
            assert_eq!(coroot_points_in_alcove(&rd), vec![vec![Rat::zero(); rd.rank]], "{s}");
        }
    }
}
