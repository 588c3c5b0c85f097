//! Finite Weyl groups: enumeration, chambers, parabolic subgroups and
//! minimal coset representatives.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Rat};
use crate::rootdata::{RootDatum, RootRef};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A Weyl group element: a reduced word in the simple reflections together
/// with its integer action on simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// 0-based indices of simple reflections; `word = [i, j]` means `s_i s_j`.
    pub word: Vec<usize>,
    pub action: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        linalg::int_mat_vec(&self.action, v)
    }

    /// 1-based word, as printed.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}

/// Matrix of the simple reflection `s_i` on coroot coordinates.
fn simple_reflection(rd: &RootDatum, i: usize) -> Vec<Vec<i64>> {
    let mut m = linalg::identity_int(rd.rank);
    // s_i(v) = v − α_i(v) α_i^∨ only changes coordinate i.
    for j in 0..rd.rank {
        m[i][j] -= rd.cartan[i][j];
    }
    m
}

/// The whole Weyl group with multiplication and inversion tables.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    index: HashMap<Vec<Vec<i64>>, usize>,
    inverse: Vec<usize>,
    simple: Vec<Vec<Vec<i64>>>,
    rank: usize,
}

impl WeylGroup {
    pub fn new(rd: &RootDatum) -> Result<Self> {
        Self::with_cap(rd, DEFAULT_WEYL_CAP)
    }

    /// Enumerates `W` as a direct product of the factor groups, each by BFS on
    /// reduced words. Fails if `|W|` exceeds `cap`.
    pub fn with_cap(rd: &RootDatum, cap: usize) -> Result<Self> {
        let simple: Vec<Vec<Vec<i64>>> = (0..rd.rank).map(|i| simple_reflection(rd, i)).collect();
        let mut offset = 0;
        let mut per_factor: Vec<Vec<(Vec<usize>, Vec<Vec<i64>>)>> = Vec::new();
        let mut total: usize = 1;
        for f in &rd.factors {
            let gens: Vec<usize> = (offset..offset + f.rank).collect();
            let elems = bfs_words(&simple, &gens, rd.rank, cap)?;
            total = total
                .checked_mul(elems.len())
                .filter(|&t| t <= cap)
                .ok_or_else(|| Error::Size(format!("|W| exceeds cap {cap}")))?;
            per_factor.push(elems);
            offset += f.rank;
        }
        let mut elements: Vec<WeylElement> = vec![WeylElement {
            word: Vec::new(),
            action: linalg::identity_int(rd.rank),
        }];
        for factor in per_factor {
            let mut next = Vec::with_capacity(elements.len() * factor.len());
            for e in &elements {
                for (w, m) in &factor {
                    let mut word = e.word.clone();
                    word.extend(w);
                    next.push(WeylElement {
                        word,
                        action: linalg::int_mat_mul(&e.action, m),
                    });
                }
            }
            elements = next;
        }
        elements.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
        let index: HashMap<Vec<Vec<i64>>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.action.clone(), i))
            .collect();
        let mut group = WeylGroup {
            inverse: Vec::new(),
            elements,
            index,
            simple,
            rank: rd.rank,
        };
        group.inverse = (0..group.elements.len())
            .map(|i| {
                let w: Vec<usize> = group.elements[i].word.iter().rev().copied().collect();
                group.from_word(&w)
            })
            .collect();
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn get(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn lookup(&self, action: &[Vec<i64>]) -> Option<usize> {
        self.index.get(action).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = linalg::int_mat_mul(&self.elements[a].action, &self.elements[b].action);
        self.index[&m]
    }

    /// Element for an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> usize {
        let mut m = linalg::identity_int(self.rank);
        for &i in word {
            m = linalg::int_mat_mul(&m, &self.simple[i]);
        }
        self.index[&m]
    }

    pub fn simple_reflection(&self, i: usize) -> usize {
        self.from_word(&[i])
    }

    pub fn apply(&self, w: usize, v: &[Rat]) -> Vec<Rat> {
        self.elements[w].apply(v)
    }

    /// `w(α)` as a root: `(wα)(v) = α(w⁻¹ v)`.
    pub fn act_on_root(&self, rd: &RootDatum, w: usize, r: RootRef) -> RootRef {
        let winv = &self.elements[self.inverse[w]].action;
        let f = rd.functional(r);
        let g: Vec<i64> = (0..self.rank)
            .map(|j| (0..self.rank).map(|k| f[k] * winv[k][j]).sum())
            .collect();
        rd.root_by_functional(&g).expect("W permutes the roots")
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rd: &RootDatum, w: usize) -> usize {
        (0..rd.num_positive_roots())
            .filter(|&i| !self.act_on_root(rd, w, RootRef::pos(i)).positive)
            .count()
    }

    /// Elements of the parabolic subgroup `W_I`.
    pub fn parabolic(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].word.iter().all(|j| subset.contains(j)))
            .collect()
    }

    /// Minimal-length representatives `W^I` of `W / W_I`: those `w` with
    /// `w(α_i) > 0` for every `i ∈ I`.
    pub fn minimal_reps(&self, rd: &RootDatum, subset: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| self.is_minimal_rep(rd, w, subset))
            .collect()
    }

    pub fn is_minimal_rep(&self, rd: &RootDatum, w: usize, subset: &[usize]) -> bool {
        subset.iter().all(|&i| {
            self.act_on_root(rd, w, RootRef::pos(rd.simple_root_index(i)))
                .positive
        })
    }

    /// The minimal-length element of `w W_I`.
    pub fn minimal_rep_of(&self, rd: &RootDatum, w: usize, subset: &[usize]) -> usize {
        let mut cur = w;
        // Right descents inside I can be stripped one at a time.
        'outer: loop {
            for &i in subset {
                let s = self.simple_reflection(i);
                let ws = self.mul(cur, s);
                if self.length(ws) < self.length(cur) {
                    cur = ws;
                    continue 'outer;
                }
            }
            let _ = rd;
            return cur;
        }
    }

    /// The unique `w` with `w⁻¹(v)` strictly dominant.
    pub fn chamber_of(&self, rd: &RootDatum, v: &[Rat]) -> Result<usize> {
        if let Some(r) = (0..rd.num_positive_roots()).find(|&i| rd.positive_roots[i].pair(v).is_zero()) {
            return Err(Error::NotGeneric(format!(
                "vector lies on the wall of root {:?}",
                rd.positive_roots[r].coeffs
            )));
        }
        let mut u = v.to_vec();
        let mut word = Vec::new();
        while let Some(i) = rd.simple_values(&u).iter().position(|x| *x < Rat::zero()) {
            u = linalg::int_mat_vec(&self.simple[i], &u);
            word.push(i);
        }
        Ok(self.from_word(&word))
    }
}

fn bfs_words(
    simple: &[Vec<Vec<i64>>],
    gens: &[usize],
    rank: usize,
    cap: usize,
) -> Result<Vec<(Vec<usize>, Vec<Vec<i64>>)>> {
    let id = linalg::identity_int(rank);
    let mut seen: HashMap<Vec<Vec<i64>>, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut out = vec![(Vec::new(), id.clone())];
    let mut queue = VecDeque::from([(Vec::new(), id)]);
    while let Some((word, m)) = queue.pop_front() {
        for &g in gens {
            let next = linalg::int_mat_mul(&m, &simple[g]);
            if seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), ());
            let mut w: Vec<usize> = word.clone();
            w.push(g);
            out.push((w.clone(), next.clone()));
            if out.len() > cap {
                return Err(Error::Size(format!("|W| exceeds cap {cap}")));
            }
            queue.push_back((w, next));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio, to_rat};
    use crate::rootdata::LatticeKind;

    fn group(s: &str) -> (RootDatum, WeylGroup) {
        let rd = RootDatum::new(s, LatticeKind::SimplyConnected).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        (rd, w)
    }

    fn lengths(w: &WeylGroup) -> Vec<usize> {
        let mut l: Vec<usize> = (0..w.order()).map(|i| w.length(i)).collect();
        l.sort();
        l
    }

    #[test]
    fn small_groups() {
        assert_eq!(lengths(&group("A1").1), vec![0, 1]);
        assert_eq!(lengths(&group("A2").1), vec![0, 1, 1, 2, 2, 3]);
        let (_, b2) = group("B2");
        assert_eq!(b2.order(), 8);
        assert_eq!(lengths(&b2).last(), Some(&4));
        assert_eq!(group("G2").1.order(), 12);
        assert_eq!(group("A1xA2").1.order(), 12);
        assert_eq!(group("F4").1.order(), 1152);
    }

    #[test]
    fn cap_is_enforced() {
        let rd = RootDatum::new("A3", LatticeKind::SimplyConnected).unwrap();
        assert!(matches!(WeylGroup::with_cap(&rd, 10), Err(Error::Size(_))));
    }

    #[test]
    fn length_is_inversion_count() {
        for s in ["A2", "B2", "G2", "A3", "C3", "A1xA1"] {
            let (rd, w) = group(s);
            for i in 0..w.order() {
                assert_eq!(w.inversions(&rd, i), w.length(i), "{s}");
            }
        }
    }

    #[test]
    fn chamber_examples() {
        let (rd, w) = group("A2");
        let a = vec![ratio(1, 100), ratio(1, 97)];
        assert_eq!(w.chamber_of(&rd, &a).unwrap(), w.identity());
        let v = linalg::add(&to_rat(&[1, -1]), &a);
        assert_eq!(w.chamber_of(&rd, &v).unwrap(), w.simple_reflection(1));
        assert!(matches!(w.chamber_of(&rd, &[rat(1), rat(2)]), Err(Error::NotGeneric(_))));
        let (rd1, w1) = group("A1");
        let v = vec![rat(-1) + ratio(1, 10)];
        assert_eq!(w1.chamber_of(&rd1, &v).unwrap(), w1.simple_reflection(0));
    }

    #[test]
    fn chamber_of_image_of_dominant_point() {
        for s in ["A2", "B2", "G2", "A3"] {
            let (rd, w) = group(s);
            let v0 = rd.rho().coords;
            for i in 0..w.order() {
                assert_eq!(w.chamber_of(&rd, &w.apply(i, &v0)).unwrap(), i);
            }
        }
    }

    #[test]
    fn minimal_reps_counts() {
        let (rd, w) = group("A2");
        let reps = w.minimal_reps(&rd, &[1]);
        let mut l: Vec<usize> = reps.iter().map(|&r| w.length(r)).collect();
        l.sort();
        assert_eq!(l, vec![0, 1, 2]);
        let (rd, w) = group("B2");
        assert_eq!(w.minimal_reps(&rd, &[0]).len(), 4);
        for x in 0..w.order() {
            let m = w.minimal_rep_of(&rd, x, &[0]);
            assert!(w.is_minimal_rep(&rd, m, &[0]));
        }
    }
}
