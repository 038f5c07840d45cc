//! Independent oracles: brute-force group enumeration, tableau counting,
//! explicit matrices. Nothing here calls the code under test except for
//! labels and table lookups.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use weylcert_core::combinatorics::{partitions_of, BiPartition, Partition};
use weylcert_core::rational::{frac, int};
use weylcert_core::weyl::{character_table, sn_character_value, ClassFunction, ConjugacyClass, Family, WType, WeylType};
use weylcert_core::{DualType, Rational};

pub fn part(v: &[usize]) -> Partition {
    Partition::from_unsorted(v.to_vec())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Signed cycle type of `i ↦ sign_i · e_{perm(i)}`.
fn signed_cycles(perm: &[usize], neg: u32) -> (Vec<usize>, Vec<usize>) {
    let n = perm.len();
    let mut seen = vec![false; n];
    let (mut pos, mut negs) = (Vec::new(), Vec::new());
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let (mut len, mut flips, mut i) = (0, 0, s);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            flips += (neg >> i) & 1;
            i = perm[i];
        }
        if flips % 2 == 0 {
            pos.push(len);
        } else {
            negs.push(len);
        }
    }
    (pos, negs)
}

/// Per-class element count and `det(1 + w)` on the Cartan, found by walking
/// every element of `W` and building its matrix.
pub struct Census {
    pub order: u64,
    pub classes: BTreeMap<ConjugacyClass, (u64, i64)>,
    /// Elements in `D` classes that split, all of which must have `det(1+w) = 0`.
    pub split_elements: u64,
    pub split_det_nonzero: bool,
}

pub fn census(t: WeylType) -> Census {
    let n = t.n;
    let mut classes: BTreeMap<ConjugacyClass, (u64, i64)> = BTreeMap::new();
    let (mut order, mut split_elements, mut split_det_nonzero) = (0, 0, false);
    let masks: Vec<u32> = match t.family {
        Family::A => vec![0],
        Family::B => (0..1u32 << n).collect(),
        Family::D => (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0).collect(),
    };
    for perm in permutations(n) {
        for &neg in &masks {
            order += 1;
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] += 1;
                m[perm[i]][i] += if (neg >> i) & 1 == 1 { -1 } else { 1 };
            }
            let mut det = bareiss_det(m);
            if t.family == Family::A {
                det /= 2;
            }
            let (pos, negs) = signed_cycles(&perm, neg);
            let key = match t.family {
                Family::A => ConjugacyClass::A(part(&pos)),
                Family::B => ConjugacyClass::B(BiPartition::new(part(&pos), part(&negs))),
                Family::D => {
                    if negs.is_empty() && pos.iter().all(|k| k % 2 == 0) {
                        split_elements += 1;
                        split_det_nonzero |= det != 0;
                        continue;
                    }
                    ConjugacyClass::D { signed: BiPartition::new(part(&pos), part(&negs)), split: None }
                }
            };
            let e = classes.entry(key).or_insert((0, det));
            assert_eq!(e.1, det, "det(1+w) is a class function");
            e.0 += 1;
        }
    }
    Census { order, classes, split_elements, split_det_nonzero }
}

/// `|W|^{-1} Σ_w f(w) g(w) det(1+w)` from a census.
pub fn direct_elliptic_pairing(c: &Census, f: &ClassFunction, g: &ClassFunction) -> Rational {
    let table = character_table(f.weyl_type);
    let mut s = Rational::zero();
    for (cls, &(count, det)) in &c.classes {
        if det == 0 {
            continue;
        }
        let j = table.class_index(cls).expect("class in table");
        s += &f.values[j] * &g.values[j] * int(det * count as i64);
    }
    s / int(c.order as i64)
}

/// Semistandard tableaux of shape `λ` and content `μ`, counted by filling
/// cells one at a time.
pub fn ssyt_count(lambda: &[usize], mu: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    if cells.len() != mu.iter().sum::<usize>() {
        return 0;
    }
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    let mut left = mu.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v - 1] -= 1;
            total += go(k + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

pub type Mat = Vec<Vec<Rational>>;

pub fn zeros(n: usize) -> Mat {
    vec![vec![Rational::zero(); n]; n]
}

pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = zeros(n);
    m[i][j] = Rational::one();
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                c[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    c
}

pub fn lin(a: &Mat, x: &Rational, b: &Mat, y: &Rational) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(u, v)| u * x + v * y).collect())
        .collect()
}

pub fn bracket(a: &Mat, b: &Mat) -> Mat {
    lin(&mul(a, b), &int(1), &mul(b, a), &int(-1))
}

/// Row echelon rank.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Some solution of `A x = b`, if one exists.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a[0].len();
    let mut m: Vec<Vec<Rational>> = a.iter().zip(b).map(|(r, v)| {
        let mut r = r.clone();
        r.push(v.clone());
        r
    }).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for j in c..=cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// A basis of `sl(n)` or of `sp(4)` (form `[[0, I], [-I, 0]]`) as matrices.
pub fn lie_basis(t: DualType) -> Vec<Mat> {
    match t {
        DualType::Sl(n) => {
            let mut b = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        b.push(unit(n, i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                b.push(lin(&unit(n, i, i), &int(1), &unit(n, i + 1, i + 1), &int(-1)));
            }
            b
        }
        DualType::Sp(4) => {
            let u = |i, j| unit(4, i, j);
            let one = int(1);
            let mut b = Vec::new();
            // [[A, 0], [0, -A^T]]
            for i in 0..2 {
                for j in 0..2 {
                    b.push(lin(&u(i, j), &one, &u(j + 2, i + 2), &int(-1)));
                }
            }
            // [[0, B], [0, 0]] and [[0, 0], [C, 0]], B and C symmetric
            for (i, j) in [(0, 0), (1, 1), (0, 1)] {
                let s = if i == j { u(i, j + 2) } else { lin(&u(i, j + 2), &one, &u(j, i + 2), &one) };
                b.push(s);
                let s = if i == j { u(i + 2, j) } else { lin(&u(i + 2, j), &one, &u(j + 2, i), &one) };
                b.push(s);
            }
            b
        }
        _ => panic!("no explicit basis for {t}"),
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(e: &Mat) -> Vec<usize> {
    let n = e.len();
    let mut ranks = vec![n];
    let mut p = e.clone();
    loop {
        let r = rank(p.clone());
        ranks.push(r);
        if r == 0 {
            break;
        }
        p = mul(&p, e);
    }
    // number of blocks of size ≥ k is rank(e^{k-1}) - rank(e^k)
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in 0..at_least.len() {
        let exact = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, exact));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Eigenvalues of `h = [e, f]` for an `f` solving `[[e, f], e] = 2e` inside
/// the Lie algebra, sorted in decreasing order.
pub fn neutral_eigenvalues(t: DualType, e: &Mat) -> Vec<i64> {
    let basis = lie_basis(t);
    let n = e.len();
    let cols: Vec<Mat> = basis.iter().map(|x| bracket(&bracket(e, x), e)).collect();
    let a: Vec<Vec<Rational>> = (0..n * n)
        .map(|k| cols.iter().map(|c| c[k / n][k % n].clone()).collect())
        .collect();
    let b: Vec<Rational> = (0..n * n).map(|k| &e[k / n][k % n] * int(2)).collect();
    let x = solve(&a, &b).expect("Jacobson-Morozov");
    let mut f = zeros(n);
    for (c, m) in x.iter().zip(&basis) {
        f = lin(&f, &int(1), m, c);
    }
    let h = bracket(e, &f);
    assert_eq!(bracket(&h, e), lin(e, &int(2), e, &int(0)));
    let mut eig = Vec::new();
    for k in -(2 * n as i64)..=(2 * n as i64) {
        let shifted = lin(&h, &int(1), &unit_diag(n), &int(-k));
        let mult = n - rank(shifted);
        eig.extend(std::iter::repeat_n(k, mult));
    }
    assert_eq!(eig.len(), n, "h is semisimple with integer eigenvalues");
    eig.sort_unstable_by(|a, b| b.cmp(a));
    eig
}

fn unit_diag(n: usize) -> Mat {
    let mut m = zeros(n);
    for i in 0..n {
        m[i][i] = Rational::one();
    }
    m
}

/// `(ρ, ρ)` for the root system whose coroots are the roots of `g∨`.
pub fn rho_norm_sq(t: DualType) -> Rational {
    let r = t.rank();
    let dim = t.coordinate_len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let e = |i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let add = |a: &Vec<i64>, b: &Vec<i64>, s: i64| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<_>>();
    for i in 0..dim {
        for j in i + 1..dim {
            roots.push(add(&e(i), &e(j), -1));
            if !matches!(t, DualType::Sl(_)) {
                roots.push(add(&e(i), &e(j), 1));
            }
        }
    }
    match t.family().as_str() {
        // g∨ = sp(2n): G has type B, short roots e_i
        "C" => (0..r).for_each(|i| roots.push(e(i))),
        // g∨ = so(2n+1): G has type C, long roots 2e_i
        "B" => (0..r).for_each(|i| roots.push(add(&e(i), &e(i), 1))),
        _ => {}
    }
    let rho: Vec<Rational> = (0..dim)
        .map(|k| frac(roots.iter().map(|v| v[k]).sum::<i64>(), 2))
        .collect();
    rho.iter().map(|x| x * x).sum()
}

/// `z_ρ = Π k^{m_k} m_k!`.
pub fn z(rho: &Partition) -> i64 {
    let mut counts = BTreeMap::new();
    for &k in rho.parts() {
        *counts.entry(k).or_insert(0i64) += 1;
    }
    counts
        .into_iter()
        .map(|(k, m)| (k as i64).pow(m as u32) * (1..=m).product::<i64>())
        .product()
}

pub fn a(v: &[usize]) -> WType {
    WType::A(part(v))
}

pub fn bp(x: &[usize], y: &[usize]) -> WType {
    WType::B(BiPartition::new(part(x), part(y)))
}

/// Tempered, complementary-series and spherical modules at `h∨_sr/2` for
/// `sl(4)` and `sp(6)`: all unitary, so none may be certified.
pub fn unitary_fixtures() -> Vec<(&'static str, DualType, Vec<WType>)> {
    let sl4 = DualType::sl(4).unwrap();
    let sp6 = DualType::sp(6).unwrap();
    vec![
        ("A3 4", sl4, vec![a(&[2, 1, 1]), a(&[1, 1, 1, 1])]),
        ("A3 3", sl4, vec![a(&[2, 2])]),
        ("A3 0", sl4, vec![a(&[4]), a(&[3, 1])]),
        ("C3 5_t", sp6, vec![bp(&[1], &[1, 1]), bp(&[], &[1, 1, 1])]),
        ("C3 5_s", sp6, vec![bp(&[1, 1, 1], &[])]),
        ("C3 4_b", sp6, vec![bp(&[], &[2, 1])]),
        ("C3 4_a", sp6, vec![bp(&[1, 1], &[1])]),
        ("C3 3_a", sp6, vec![bp(&[1], &[2])]),
        ("C3 3_bs", sp6, vec![bp(&[2, 1], &[])]),
        ("C3 2_b", sp6, vec![bp(&[], &[3])]),
        ("C3 0", sp6, vec![bp(&[3], &[]), bp(&[2], &[1])]),
    ]
}


/// `c^λ_{μν}` as `⟨Ind(χ_μ ⊠ χ_ν), χ_λ⟩ = Σ χ_μ(ρ1) χ_ν(ρ2) χ_λ(ρ1 ∪ ρ2) / (z_ρ1 z_ρ2)`.
pub struct InducedLr {
    chi: HashMap<(Partition, Partition), i64>,
}

impl InducedLr {
    pub fn new() -> Self {
        InducedLr { chi: HashMap::new() }
    }

    fn value(&mut self, l: &Partition, r: &Partition) -> i64 {
        *self.chi.entry((l.clone(), r.clone())).or_insert_with(|| sn_character_value(l, r))
    }

    pub fn coefficient(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Rational {
        let mut s = Rational::zero();
        for r1 in partitions_of(mu.size()) {
            for r2 in partitions_of(nu.size()) {
                let mut joined = r1.parts().to_vec();
                joined.extend_from_slice(r2.parts());
                let r = part(&joined);
                let v = self.value(mu, &r1) * self.value(nu, &r2) * self.value(lambda, &r);
                s += frac(v, z(&r1) * z(&r2));
            }
        }
        s
    }
}
