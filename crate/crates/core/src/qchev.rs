//! Quantum Chevalley products on `G/P` and the Peterson–Woodward comparison
//! between `G/P` and `G/B` structure constants.
//!
//! The divisor rule is the parabolic formula of Fulton–Woodward: for
//! `w ∈ W^P` and `i ∉ I`,
//!
//! ```text
//! σ_{s_i} ⋆ σ_w = Σ ⟨ω_i, β^∨⟩ σ_{w s_β}                    (ℓ(w s_β) = ℓ(w) + 1, w s_β ∈ W^P)
//!              + Σ ⟨ω_i, β^∨⟩ q^{d(β)} σ_{⌊w s_β⌋}           (ℓ(⌊w s_β⌋) = ℓ(w) + 1 − ⟨2ρ − 2ρ_P, β^∨⟩)
//! ```
//!
//! over positive roots `β ∉ R_P`, where `d(β)` is `β^∨` modulo `Q_{R_P}` and
//! `⌊v⌋` is the minimal representative of `v W_P`. Degrees are stored as
//! coroot coordinates with the entries of `I` set to zero.

use std::collections::BTreeMap;

use crate::affine::PerturbationPoint;
use crate::error::{Error, Result};
use crate::linalg::{self, Rat};
use crate::orbit::{self, NovikovCoset, OrbitSpec};
use crate::peterson;
use crate::rootdata::RootDatum;
use crate::weyl::WeylGroup;

/// `Σ c · q^d σ_w`, keyed by (minimal representative, degree).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QHElement {
    pub terms: BTreeMap<(usize, Vec<i64>), i64>,
}

impl QHElement {
    pub fn unit(rank: usize) -> Self {
        Self::schubert(0, rank)
    }

    pub fn schubert(w: usize, rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((w, vec![0; rank]), 1);
        QHElement { terms }
    }

    pub fn add_term(&mut self, w: usize, degree: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        let key = (w, degree);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, w: usize, degree: &[i64]) -> i64 {
        self.terms.get(&(w, degree.to_vec())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term with a nonzero degree.
    pub fn classical_part(&self) -> Self {
        QHElement {
            terms: self
                .terms
                .iter()
                .filter(|((_, d), _)| d.iter().all(|&x| x == 0))
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }
}

/// Quantum cohomology of `G/P` for the parabolic of an orbit.
pub struct QuantumCohomology<'a> {
    pub orbit: &'a OrbitSpec,
    /// `(positive root index, s_β)` for `β ∉ R_P`.
    reflections: Vec<(usize, usize)>,
    /// `2ρ − 2ρ_P` as a functional.
    chern: Vec<i64>,
}

/// The Weyl element of the reflection in a positive root.
pub fn reflection(rd: &RootDatum, weyl: &WeylGroup, root: usize) -> usize {
    let r = &rd.positive_roots[root];
    let n = rd.rank;
    let m: Vec<Vec<i64>> = (0..n)
        .map(|k| (0..n).map(|l| i64::from(k == l) - r.coroot[k] * r.functional[l]).collect())
        .collect();
    weyl.lookup(&m).expect("root reflections lie in W")
}

impl<'a> QuantumCohomology<'a> {
    pub fn new(orbit: &'a OrbitSpec) -> Self {
        let rd = &orbit.rd;
        let parabolic = rd.parabolic_positive_roots(&orbit.subset);
        let reflections = (0..rd.num_positive_roots())
            .filter(|i| !parabolic.contains(i))
            .map(|i| (i, reflection(rd, &orbit.weyl, i)))
            .collect();
        QuantumCohomology {
            orbit,
            reflections,
            chern: rd.rho_i_functional(&orbit.subset),
        }
    }

    pub fn divisors(&self) -> Vec<usize> {
        (0..self.orbit.rd.rank)
            .filter(|i| !self.orbit.subset.contains(i))
            .collect()
    }

    fn check_divisor(&self, i: usize) -> Result<()> {
        if i >= self.orbit.rd.rank || self.orbit.subset.contains(&i) {
            return Err(Error::Domain(format!(
                "s_{} is not a Schubert divisor of this flag variety",
                i + 1
            )));
        }
        Ok(())
    }

    /// `⟨c₁, d⟩` for a degree `d`.
    pub fn chern_degree(&self, d: &[i64]) -> i64 {
        self.chern.iter().zip(d).map(|(a, b)| a * b).sum()
    }

    /// Complex degree of the term `q^d σ_w`.
    pub fn grading(&self, w: usize, d: &[i64]) -> i64 {
        self.orbit.weyl.length(w) as i64 + self.chern_degree(d)
    }

    /// `σ_{s_i} ⋆ σ_w` for `w ∈ W^P`.
    pub fn quantum_chevalley(&self, i: usize, w: usize) -> Result<QHElement> {
        self.check_divisor(i)?;
        let o = self.orbit;
        if !o.weyl.is_minimal_rep(&o.rd, w, &o.subset) {
            return Err(Error::Domain(format!(
                "{:?} is not a minimal coset representative",
                o.weyl.get(w).word_1based()
            )));
        }
        let rank = o.rd.rank;
        let lw = o.weyl.length(w) as i64;
        let mut out = QHElement::default();
        for &(root, s) in &self.reflections {
            let coroot = &o.rd.positive_roots[root].coroot;
            let c = coroot[i];
            if c == 0 {
                continue;
            }
            let ws = o.weyl.mul(w, s);
            if o.weyl.length(ws) as i64 == lw + 1 && o.weyl.is_minimal_rep(&o.rd, ws, &o.subset) {
                out.add_term(ws, vec![0; rank], c);
                continue;
            }
            let d: Vec<i64> = (0..rank)
                .map(|k| if o.subset.contains(&k) { 0 } else { coroot[k] })
                .collect();
            let v = o.coset_rep(ws);
            if o.weyl.length(v) as i64 == lw + 1 - self.chern_degree(coroot) {
                out.add_term(v, d, c);
            }
        }
        Ok(out)
    }

    /// `σ_{s_i} ⋆ x`.
    pub fn mul_divisor(&self, i: usize, x: &QHElement) -> Result<QHElement> {
        let mut out = QHElement::default();
        for ((w, d), c) in &x.terms {
            for ((v, e), k) in self.quantum_chevalley(i, *w)?.terms {
                let deg: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a + b).collect();
                out.add_term(v, deg, c * k);
            }
        }
        Ok(out)
    }

    /// `σ_{s_{i_1}} ⋆ ⋯ ⋆ σ_{s_{i_k}}`.
    pub fn divisor_power(&self, seq: &[usize]) -> Result<QHElement> {
        let mut x = QHElement::unit(self.orbit.rd.rank);
        for &i in seq.iter().rev() {
            x = self.mul_divisor(i, &x)?;
        }
        Ok(x)
    }

    /// Coefficient of `q^d σ_y` in a divisor product.
    pub fn divisor_power_constant(&self, seq: &[usize], target: usize, degree: &[i64]) -> Result<i64> {
        Ok(self.divisor_power(seq)?.coefficient(target, degree))
    }
}

/// Bruhat covers `w ⋖ v`, found by deleting one letter from a reduced word of `v`.
pub fn bruhat_covers(weyl: &WeylGroup, w: usize) -> Vec<usize> {
    let lw = weyl.length(w);
    (0..weyl.order())
        .filter(|&v| weyl.length(v) == lw + 1)
        .filter(|&v| {
            let word = &weyl.get(v).word;
            (0..word.len()).any(|k| {
                let mut sub = word.clone();
                sub.remove(k);
                weyl.from_word(&sub) == w
            })
        })
        .collect()
}

/// Classical Chevalley product `σ_{s_i} · σ_w` on `G/B` from the Bruhat-cover oracle.
pub fn classical_chevalley_by_covers(rd: &RootDatum, weyl: &WeylGroup, i: usize, w: usize) -> QHElement {
    let mut out = QHElement::default();
    for v in bruhat_covers(weyl, w) {
        let t = weyl.mul(weyl.inverse(w), v);
        let root = (0..rd.num_positive_roots())
            .find(|&r| reflection(rd, weyl, r) == t)
            .expect("covers differ by a reflection");
        out.add_term(v, vec![0; rd.rank], rd.positive_roots[root].coroot[i]);
    }
    out
}

/// A structure constant `C_{s_{i_1},…,s_{i_k}; y}^{d}` of `G/P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PWInstance {
    /// Simple indices of the divisor inputs.
    pub inputs: Vec<usize>,
    /// Minimal representative of the target.
    pub target: usize,
    /// `G/P` degree, zero on `I`.
    pub degree: Vec<i64>,
}

/// The two structure-constant addresses of the comparison formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PWTransfer {
    /// Loop class `q = −w_y(d)` whose coset carries the `G/P` degree.
    pub q: Vec<Rat>,
    pub nov: NovikovCoset,
    pub q_tilde: Vec<Rat>,
    /// Associated lift `x = u(x₀)`.
    pub x: usize,
    /// Minimal-length fiber lifts of the inputs.
    pub lifted_inputs: Vec<usize>,
    /// `G/B` degree `−u⁻¹(q̃)`; `None` if it is not a valid effective degree.
    pub degree_b: Option<Vec<i64>>,
}

pub fn pw_transfer(orbit: &OrbitSpec, inst: &PWInstance, a: &PerturbationPoint) -> Result<PWTransfer> {
    let weyl = &orbit.weyl;
    let d = linalg::to_rat(&inst.degree);
    let q = linalg::neg(&weyl.apply(inst.target, &d));
    let nov = NovikovCoset::new(orbit, inst.target, q.clone())?;
    let lift = peterson::peterson_lift(orbit, &nov)?;
    let x = peterson::associated_lift_of(orbit, inst.target, &lift.q_tilde, a)?;
    let db = linalg::neg(&weyl.apply(weyl.inverse(x), &lift.q_tilde));
    let degree_b = linalg::to_int(&db).filter(|v| v.iter().all(|&c| c >= 0));
    let lifted_inputs = inst
        .inputs
        .iter()
        .map(|&i| weyl.simple_reflection(i))
        .collect();
    Ok(PWTransfer {
        q,
        nov,
        q_tilde: lift.q_tilde,
        x,
        lifted_inputs,
        degree_b,
    })
}

/// One line of a [`verify_pw`] report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PWReportLine {
    pub instance: PWInstance,
    pub transfer: PWTransfer,
    pub lhs: i64,
    pub rhs: i64,
}

impl PWReportLine {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Nonnegative degree vectors supported off `I` with total at most `maxdeg`.
fn degrees(rank: usize, subset: &[usize], maxdeg: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; rank]];
    for k in 0..rank {
        if subset.contains(&k) {
            continue;
        }
        out = out
            .into_iter()
            .flat_map(|d| {
                let used: i64 = d.iter().sum();
                (0..=maxdeg - used).map(move |x| {
                    let mut e = d.clone();
                    e[k] = x;
                    e
                })
            })
            .collect();
    }
    out
}

/// Compares every divisor-product constant of `G/P` with at most `kmax`
/// factors and degree total at most `maxdeg` against its `G/B` transfer.
pub fn verify_pw(orbit: &OrbitSpec, kmax: usize, maxdeg: i64, a: &PerturbationPoint) -> Result<Vec<PWReportLine>> {
    let full = orbit::orbit_data_with(&orbit.rd, orbit.weyl.clone(), &[], orbit.scale)?;
    let gp = QuantumCohomology::new(orbit);
    let gb = QuantumCohomology::new(&full);
    let divisors = gp.divisors();
    let degs = degrees(orbit.rd.rank, &orbit.subset, maxdeg);
    let mut lines = Vec::new();
    let mut transfers: BTreeMap<(usize, Vec<i64>), PWTransfer> = BTreeMap::new();
    // Depth-first over input sequences, extending on the left.
    let mut stack: Vec<(Vec<usize>, QHElement, QHElement)> = vec![(
        Vec::new(),
        QHElement::unit(orbit.rd.rank),
        QHElement::unit(orbit.rd.rank),
    )];
    while let Some((seq, p, b)) = stack.pop() {
        let k = seq.len() as i64;
        for &y in &orbit.crit {
            for d in &degs {
                if gp.grading(y, d) != k {
                    continue;
                }
                let inst = PWInstance { inputs: seq.clone(), target: y, degree: d.clone() };
                let transfer = match transfers.get(&(y, d.clone())) {
                    Some(t) => t.clone(),
                    None => {
                        let t = pw_transfer(orbit, &inst, a)?;
                        transfers.insert((y, d.clone()), t.clone());
                        t
                    }
                };
                let lhs = p.coefficient(y, d);
                let rhs = transfer
                    .degree_b
                    .as_ref()
                    .map_or(0, |db| b.coefficient(transfer.x, db));
                lines.push(PWReportLine { instance: PWInstance { inputs: seq.clone(), ..inst }, transfer, lhs, rhs });
            }
        }
        if seq.len() < kmax {
            for &i in divisors.iter().rev() {
                let mut next = vec![i];
                next.extend(&seq);
                stack.push((next, gp.mul_divisor(i, &p)?, gb.mul_divisor(i, &b)?));
            }
        }
    }
    lines.sort_by(|x, y| {
        (x.instance.inputs.len(), &x.instance.inputs, x.instance.target, &x.instance.degree).cmp(&(
            y.instance.inputs.len(),
            &y.instance.inputs,
            y.instance.target,
            &y.instance.degree,
        ))
    });
    Ok(lines)
}

/// Every term of `x` has complex degree `k`.
pub fn is_homogeneous(qh: &QuantumCohomology, x: &QHElement, k: i64) -> bool {
    x.terms.keys().all(|(w, d)| qh.grading(*w, d) == k)
}
