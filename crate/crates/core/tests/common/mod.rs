#![allow(dead_code)]

use coadjoint::linalg::{self, rat, Rat};
use coadjoint::rootdata::{LatticeKind, RootDatum};
use coadjoint::weyl::WeylGroup;
use num_traits::{Signed, Zero};

pub const SERIES: [&str; 7] = ["A1", "A2", "A3", "B2", "C2", "G2", "A1xA1"];

pub fn sc(series: &str) -> RootDatum {
    RootDatum::new(series, LatticeKind::SimplyConnected).unwrap()
}

pub fn ad(series: &str) -> RootDatum {
    RootDatum::new(series, LatticeKind::Adjoint).unwrap()
}

/// Integer coroot coordinates in `[−r, r]^rank`, enumerated by hand.
pub fn ball(rank: usize, r: i64) -> Vec<Vec<Rat>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Rat>| {
                (-r..=r).map(move |k| {
                    let mut w = v.clone();
                    w.push(rat(k));
                    w
                })
            })
            .collect();
    }
    out
}

/// Number of integers strictly between `u` and `v`.
pub fn integers_strictly_between(u: Rat, v: Rat) -> i64 {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    let first = lo.floor().to_integer() + 1;
    let last = if hi.is_integer() { hi.to_integer() - 1 } else { hi.floor().to_integer() };
    (last - first + 1).max(0)
}

/// Number of affine walls `V_{α,k}` strictly separating `x` and `y`.
pub fn wall_count(rd: &RootDatum, x: &[Rat], y: &[Rat]) -> i64 {
    rd.positive_roots
        .iter()
        .map(|r| integers_strictly_between(r.pair(x), r.pair(y)))
        .sum()
}

/// The unique `w` with `w⁻¹ v` strictly dominant, by scanning all of `W`.
pub fn chamber_by_scan(rd: &RootDatum, weyl: &WeylGroup, v: &[Rat]) -> Option<usize> {
    let hits: Vec<usize> = (0..weyl.order())
        .filter(|&w| {
            let u = weyl.apply(weyl.inverse(w), v);
            (0..rd.rank).all(|i| rd.positive_roots[rd.simple_root_index(i)].pair(&u).is_positive())
        })
        .collect();
    (hits.len() == 1).then(|| hits[0])
}

/// Number of positive roots sent negative by `w`.
pub fn length_by_inversions(rd: &RootDatum, weyl: &WeylGroup, w: usize) -> usize {
    let probe = rd.rho().coords;
    let image = weyl.apply(weyl.inverse(w), &probe);
    rd.positive_roots.iter().filter(|r| r.pair(&image).is_negative()).count()
}

/// `⟨u, v⟩` written out from the gram matrix.
pub fn gram(rd: &RootDatum, u: &[Rat], v: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for i in 0..rd.rank {
        for j in 0..rd.rank {
            s += u[i] * rd.gram[i][j] * v[j];
        }
    }
    s
}

pub fn is_integral(v: &[Rat]) -> bool {
    linalg::to_int(v).is_some()
}
