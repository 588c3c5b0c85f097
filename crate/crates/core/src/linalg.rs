//! Exact rational and integer linear algebra.
//!
//! Everything here works on small dense matrices (rank ≤ 8 in practice), so
//! the routines favour clarity over asymptotics. Vectors are plain `Vec<Rat>`
//! and matrices are row-major `Vec<Vec<_>>`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::Ratio<i64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn to_rat(v: &[i64]) -> Vec<Rat> {
    v.iter().copied().map(rat).collect()
}

/// Returns the integer vector if every entry is integral.
pub fn to_int(v: &[Rat]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn dot_int(f: &[i64], v: &[Rat]) -> Rat {
    f.iter()
        .zip(v)
        .fold(Rat::zero(), |acc, (a, b)| acc + *b * *a)
}

pub fn dot(f: &[Rat], v: &[Rat]) -> Rat {
    f.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn int_mat_vec(m: &[Vec<i64>], v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| dot_int(row, v)).collect()
}

pub fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn identity_int(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Quadratic form `uᵀ G v`.
pub fn bilinear(g: &[Vec<Rat>], u: &[Rat], v: &[Rat]) -> Rat {
    dot(u, &mat_vec(g, v))
}

pub fn floor(x: Rat) -> i64 {
    x.floor().to_integer()
}

pub fn frac(x: Rat) -> Rat {
    x - x.floor()
}

/// Largest integer `n ≥ 0` with `n² ≤ x`.
pub fn isqrt_floor(x: Rat) -> i64 {
    if x <= Rat::zero() {
        return 0;
    }
    let mut n = (x.to_integer() as f64).sqrt() as i64 + 2;
    while rat(n * n) > x {
        n -= 1;
    }
    while rat((n + 1) * (n + 1)) <= x {
        n += 1;
    }
    n
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vec<Rat>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `Σ c_j basis[j] = v` for `c`. `None` if `v` is outside the span.
pub fn solve_in_span(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    if k == 0 {
        return is_zero(v).then(Vec::new);
    }
    let dim = v.len();
    let mut aug: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[i]).collect();
            row.push(v[i]);
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![Rat::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        c[p] = aug[row][k];
    }
    Some(c)
}

/// Integer coordinates of `v` in `basis`, or `None` when `v` is not in the lattice.
pub fn lattice_coords(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<i64>> {
    solve_in_span(basis, v).and_then(|c| to_int(&c))
}

pub fn in_lattice(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    lattice_coords(basis, v).is_some()
}

/// Common denominator of a family of rational vectors.
pub fn common_denominator(vs: &[Vec<Rat>]) -> i64 {
    vs.iter()
        .flatten()
        .fold(1i64, |acc, x| acc.lcm(x.denom()))
}

/// Row-style Hermite normal form of the lattice generated by `rows`.
///
/// Returns a basis in echelon form: each row's leading entry is positive,
/// lies strictly right of the previous row's, and entries above a pivot are
/// reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (0..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let (imin, _) = nz
                .iter()
                .map(|&i| (i, m[i][c].abs()))
                .min_by_key(|&(_, v)| v)
                .unwrap();
            for &i in &nz {
                if i != imin {
                    let q = Integer::div_floor(&m[i][c], &m[imin][c]);
                    let pivot_row = m[imin].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..m.len()).find(|&i| m[i][c] != 0) {
            let mut row = m.remove(i);
            if row[c] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(row);
            pivots.push(c);
        }
        m.retain(|r| r.iter().any(|&x| x != 0));
    }
    for k in 0..out.len() {
        let c = pivots[k];
        for j in 0..k {
            let q = Integer::div_floor(&out[j][c], &out[k][c]);
            if q != 0 {
                let pivot_row = out[k].clone();
                for (x, y) in out[j].iter_mut().zip(&pivot_row) {
                    *x -= q * y;
                }
            }
        }
    }
    out
}

/// Z-basis (Hermite form) of the lattice generated by rational vectors.
pub fn lattice_basis(generators: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if generators.is_empty() {
        return Vec::new();
    }
    let d = common_denominator(generators);
    let scaled: Vec<Vec<i64>> = generators
        .iter()
        .map(|g| g.iter().map(|x| (x * d).to_integer()).collect())
        .collect();
    hermite_rows(&scaled)
        .into_iter()
        .map(|row| row.into_iter().map(|x| ratio(x, d)).collect())
        .collect()
}

/// Reduces `v` modulo the lattice spanned by an echelon basis from
/// [`lattice_basis`], giving a canonical coset representative.
pub fn reduce_mod_echelon(basis: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for b in basis {
        let Some(p) = b.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = floor(out[p] / b[p]);
        if q != 0 {
            for (x, y) in out.iter_mut().zip(b) {
                *x -= *y * q;
            }
        }
    }
    out
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only).
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry of the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    let pr = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
                if a[i][t] != 0 {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        let v = row[t];
                        row[j] -= q * v;
                    }
                }
                if a[t][j] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                // Divisibility: the pivot must divide the whole trailing block.
                let p = a[t][t];
                if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
                    let ri = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&ri) {
                        *x += y;
                    }
                    dirty = true;
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Enumerates integer vectors `c` with `cᵀ G c ≤ r2` for a positive definite `G`.
pub fn integer_points_in_ellipsoid(g: &[Vec<Rat>], r2: Rat) -> Result<Vec<Vec<i64>>> {
    let n = g.len();
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let ginv = inverse(g).ok_or_else(|| Error::Internal("degenerate gram matrix".into()))?;
    let bounds: Vec<i64> = (0..n).map(|i| isqrt_floor(r2 * ginv[i][i])).collect();
    let total: i128 = bounds.iter().map(|&b| i128::from(2 * b + 1)).product();
    if total > 50_000_000 {
        return Err(Error::Size(format!("ellipsoid box has {total} points")));
    }
    let mut out = Vec::new();
    let mut c: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        let v = to_rat(&c);
        if bilinear(g, &v, &v) <= r2 {
            out.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            c[i] += 1;
            if c[i] <= bounds[i] {
                break;
            }
            c[i] = -bounds[i];
            i += 1;
        }
    }
}

/// All integer vectors in the box `[-b, b]^n`.
pub fn box_points(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-b..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then_some(())?;
            Some(ratio(n.trim().parse().ok()?, d))
        }
        None => s.parse::<i64>().ok().map(rat),
    }
}

pub fn abs(x: Rat) -> Rat {
    x.abs()
}
