//! Independent oracles and random generators shared by the integration
//! tests. Everything here deliberately uses a different algorithm from the
//! library: determinants by cofactor expansion instead of Bareiss, linear
//! solves by Cramer's rule instead of elimination, and inertia by Sturm
//! chains on the characteristic polynomial instead of congruence
//! diagonalization.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use hopflink::linalg::{Inertia, Int, IntMatrix, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn minor(m: &IntMatrix, row: usize, col: usize) -> IntMatrix {
    let n = m.size();
    let mut rows = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == row {
            continue;
        }
        let mut r = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == col {
                continue;
            }
            r.push(m.get(i, j).clone());
        }
        rows.push(r);
    }
    IntMatrix::from_rows(rows)
}

/// Determinant by Laplace cofactor expansion along the first row.
pub fn det_cofactor(m: &IntMatrix) -> Int {
    let n = m.size();
    if n == 0 {
        return Int::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Int::zero();
    for j in 0..n {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let term = a * det_cofactor(&minor(m, 0, j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Solves M x = b by Cramer's rule; None when det M = 0.
pub fn solve_cramer(m: &IntMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = m.size();
    assert_eq!(b.len(), n);
    let d = det_cofactor(m);
    if d.is_zero() {
        return None;
    }
    let mut scale = Int::one();
    for v in b {
        scale = scale.lcm(v.denom());
    }
    let c: Vec<Int> = b
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let mut mi = m.clone();
        for row in 0..n {
            mi.set(row, i, c[row].clone());
        }
        x.push(Rat::new(det_cofactor(&mi), &d * &scale));
    }
    Some(x)
}

// Dense little-endian polynomial over Q, used for characteristic polynomials
// and Sturm chains. The zero polynomial is the empty vector.
pub type Poly = Vec<Rat>;

fn ptrim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn pzero(p: &Poly) -> bool {
    p.is_empty()
}

fn pdeg(p: &Poly) -> usize {
    assert!(!pzero(p));
    p.len() - 1
}

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    ptrim(out)
}

fn pneg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if pzero(a) || pzero(b) {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    ptrim(out)
}

fn pderiv(a: &Poly) -> Poly {
    let mut out = Vec::new();
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(c * Rat::from_integer(Int::from(i)));
    }
    ptrim(out)
}

/// Remainder of polynomial long division.
fn prem(num: &Poly, den: &Poly) -> Poly {
    assert!(!pzero(den));
    let mut r = num.clone();
    let dd = pdeg(den);
    let lead = den.last().unwrap().clone();
    while !pzero(&r) && pdeg(&r) >= dd {
        let shift = pdeg(&r) - dd;
        let f = r.last().unwrap() / &lead;
        let mut sub = vec![Rat::zero(); shift];
        sub.extend(den.iter().map(|c| c * &f));
        r = padd(&r, &pneg(&sub));
    }
    r
}

fn pmonic(a: &Poly) -> Poly {
    if pzero(a) {
        return Vec::new();
    }
    let lead = a.last().unwrap().clone();
    a.iter().map(|c| c / &lead).collect()
}

fn pgcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !pzero(&b) {
        let r = prem(&a, &b);
        a = b;
        b = r;
    }
    pmonic(&a)
}

/// det(xI - A) by cofactor expansion over the polynomial ring.
pub fn charpoly(m: &IntMatrix) -> Poly {
    let n = m.size();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = -Rat::from_integer(m.get(i, j).clone());
                    if i == j {
                        ptrim(vec![a, Rat::one()])
                    } else {
                        ptrim(vec![a])
                    }
                })
                .collect()
        })
        .collect();
    pdet(&entries)
}

fn pdet(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![Rat::one()];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Poly = Vec::new();
    for j in 0..n {
        if pzero(&m[0][j]) {
            continue;
        }
        let sub: Vec<Vec<Poly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&jj| jj != j)
                    .map(|jj| m[i][jj].clone())
                    .collect()
            })
            .collect();
        let mut term = pmul(&m[0][j], &pdet(&sub));
        if j % 2 == 1 {
            term = pneg(&term);
        }
        acc = padd(&acc, &term);
    }
    acc
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: &[i32]) -> usize {
    let nonzero: Vec<i32> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Counts of distinct roots of p in (0, inf) and (-inf, 0) by Sturm's
/// theorem. Requires p(0) != 0. Valid for non-squarefree p as well: the
/// standard chain then ends at gcd(p, p') and still counts distinct roots.
fn sturm_distinct(p: &Poly) -> (usize, usize) {
    if pzero(p) || pdeg(p) == 0 {
        return (0, 0);
    }
    assert!(!p[0].is_zero(), "sturm oracle requires p(0) != 0");
    let mut chain = vec![p.clone(), pderiv(p)];
    loop {
        let k = chain.len();
        if pzero(&chain[k - 1]) {
            chain.pop();
            break;
        }
        if pdeg(&chain[k - 1]) == 0 {
            break;
        }
        let r = prem(&chain[k - 2], &chain[k - 1]);
        chain.push(pneg(&r));
    }
    let at_zero: Vec<i32> = chain.iter().map(|q| sign_of(&q[0])).collect();
    let at_pos: Vec<i32> = chain.iter().map(|q| sign_of(q.last().unwrap())).collect();
    let at_neg: Vec<i32> = chain
        .iter()
        .map(|q| {
            let s = sign_of(q.last().unwrap());
            if pdeg(q).is_multiple_of(2) {
                s
            } else {
                -s
            }
        })
        .collect();
    let v_zero = variations(&at_zero);
    let v_pos = variations(&at_pos);
    let v_neg = variations(&at_neg);
    (v_zero - v_pos, v_neg - v_zero)
}

/// Inertia of a symmetric matrix from its characteristic polynomial: the
/// power of x gives the nullity, and the positive and negative eigenvalue
/// counts come from Sturm counts summed along the gcd chain, which weights
/// each distinct root by its multiplicity.
pub fn inertia_sturm(m: &IntMatrix) -> Inertia {
    assert!(m.is_symmetric());
    let p = charpoly(m);
    let nullity = p.iter().take_while(|c| c.is_zero()).count();
    let base: Poly = p[nullity..].to_vec();
    let mut positives = 0;
    let mut negatives = 0;
    let mut d = base;
    while !pzero(&d) && pdeg(&d) >= 1 {
        let (pos, neg) = sturm_distinct(&d);
        positives += pos;
        negatives += neg;
        d = pgcd(&d, &pderiv(&d));
    }
    Inertia {
        positives,
        negatives,
        nullity,
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect();
    IntMatrix::from_i64_rows(&rows)
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(lo..=hi);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    IntMatrix::from_i64_rows(&rows)
}

/// Product of random elementary row additions applied to the identity;
/// determinant is exactly 1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut rows = vec![vec![Int::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = Int::one();
    }
    if n >= 2 {
        for _ in 0..2 * n + 4 {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let f = if rng.gen_bool(0.5) { 1i64 } else { -1 };
            for col in 0..n {
                let add = &rows[j][col] * Int::from(f);
                rows[i][col] += add;
            }
        }
    }
    IntMatrix::from_rows(rows)
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.size();
    assert_eq!(n, b.size());
    let mut out = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Int::zero();
            for k in 0..n {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.size();
    let mut out = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.set(j, i, a.get(i, j).clone());
        }
    }
    out
}

/// U^T A U.
pub fn congruence(u: &IntMatrix, a: &IntMatrix) -> IntMatrix {
    matmul(&matmul(&transpose(u), a), u)
}
