//! Exact rational linear algebra: fraction-free elimination, kernel bases,
//! and integer eigenvalue extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::{Rational, RationalVector};

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Inner product u^T G v for a symmetric Gram matrix G.
pub fn gram_inner(g: &Mat<Rational>, u: &[Rational], v: &[Rational]) -> Rational {
    dot(u, &g.mul_vec(v))
}

pub fn vec_add(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(u: &[Rational]) -> RationalVector {
    u.iter().map(|a| -a).collect()
}

pub fn vec_scale(c: &Rational, u: &[Rational]) -> RationalVector {
    u.iter().map(|a| c * a).collect()
}

pub fn vec_is_zero(u: &[Rational]) -> bool {
    u.iter().all(|a| a.is_zero())
}

/// True when u = t*v for some rational t (v nonzero).
pub fn parallel(u: &[Rational], v: &[Rational]) -> bool {
    assert_eq!(u.len(), v.len());
    let Some(p) = v.iter().position(|c| !c.is_zero()) else {
        return vec_is_zero(u);
    };
    let t = &u[p] / &v[p];
    u.iter().zip(v).all(|(a, b)| *a == &t * b)
}

/// Row echelon form of an integer matrix by one-step fraction-free
/// (Bareiss) elimination: every division is exact, entries stay integral,
/// and pivoting is deterministic (first nonzero row per column).
///
/// Returns the echelon matrix and the pivot columns in order.
fn bareiss_echelon(mut a: Mat<BigInt>) -> (Mat<BigInt>, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(hit) = (pr..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if hit != pr {
            for j in 0..cols {
                let tmp = a[(hit, j)].clone();
                a[(hit, j)] = a[(pr, j)].clone();
                a[(pr, j)] = tmp;
            }
        }
        let piv = a[(pr, col)].clone();
        for i in (pr + 1)..rows {
            let mult = a[(i, col)].clone();
            for j in col..cols {
                let num = &piv * &a[(i, j)] - &mult * &a[(pr, j)];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free division must be exact");
                a[(i, j)] = q;
            }
        }
        prev = piv;
        pivots.push(col);
        pr += 1;
    }
    (a, pivots)
}

/// Row echelon form over the rationals. Elimination skips rows that are
/// already zero in the pivot column, so sparse (e.g. near-diagonal) inputs
/// reduce in near-quadratic time. Returns the echelon matrix and the pivot
/// columns in order.
fn rational_echelon(mut a: Mat<Rational>) -> (Mat<Rational>, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(hit) = (pr..rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if hit != pr {
            for j in 0..cols {
                let tmp = a[(hit, j)].clone();
                a[(hit, j)] = a[(pr, j)].clone();
                a[(pr, j)] = tmp;
            }
        }
        let piv = a[(pr, col)].clone();
        for i in (pr + 1)..rows {
            if a[(i, col)].is_zero() {
                continue;
            }
            let factor = &a[(i, col)] / &piv;
            a[(i, col)] = Rational::zero();
            for j in (col + 1)..cols {
                if !a[(pr, j)].is_zero() {
                    let upd = &a[(i, j)] - &factor * &a[(pr, j)];
                    a[(i, j)] = upd;
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    (a, pivots)
}

/// Clears denominators row by row: the result has the same row space and
/// kernel as the input.
fn to_integer_rows(m: &Mat<Rational>) -> Mat<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = Mat::zeros(rows, cols);
    for r in 0..rows {
        let mut l = BigInt::one();
        for c in 0..cols {
            l = l.lcm(m[(r, c)].denom());
        }
        for c in 0..cols {
            let e = &m[(r, c)];
            out[(r, c)] = e.numer() * (&l / e.denom());
        }
    }
    out
}

/// Rank of a rational matrix, computed exactly.
pub fn rank(m: &Mat<Rational>) -> usize {
    bareiss_echelon(to_integer_rows(m)).1.len()
}

/// Basis of the right kernel {v : m v = 0}: row echelon followed by exact
/// back-substitution. One basis vector per free column, ordered by free
/// column index; in each, the free variable is set to 1.
pub fn kernel_basis(m: &Mat<Rational>) -> Vec<RationalVector> {
    let cols = m.cols();
    let (ech, pivots) = rational_echelon(m.clone());
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();

    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v: RationalVector = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for c in (pc + 1)..cols {
                let e = &ech[(row, c)];
                if !e.is_zero() && !v[c].is_zero() {
                    acc += e * &v[c];
                }
            }
            v[pc] = -acc / &ech[(row, pc)];
        }
        debug_assert!(vec_is_zero(&m.mul_vec(&v)));
        basis.push(v);
    }
    basis
}

/// Solves the square system a x = b when a is invertible; `None` if a is
/// singular. Plain rational Gauss-Jordan; intended for small systems.
pub fn solve_square(a: &Mat<Rational>, b: &[Rational]) -> Option<RationalVector> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    assert_eq!(n, b.len());
    let mut m = Mat::from_fn(n, n + 1, |r, c| {
        if c < n {
            a[(r, c)].clone()
        } else {
            b[r].clone()
        }
    });
    for col in 0..n {
        let hit = (col..n).find(|&r| !m[(r, col)].is_zero())?;
        if hit != col {
            for j in 0..=n {
                let tmp = m[(hit, j)].clone();
                m[(hit, j)] = m[(col, j)].clone();
                m[(col, j)] = tmp;
            }
        }
        let inv = m[(col, col)].clone();
        for j in col..=n {
            m[(col, j)] = &m[(col, j)] / &inv;
        }
        for r in 0..n {
            if r != col && !m[(r, col)].is_zero() {
                let factor = m[(r, col)].clone();
                for j in col..=n {
                    let upd = &m[(r, j)] - &factor * &m[(col, j)];
                    m[(r, j)] = upd;
                }
            }
        }
    }
    Some((0..n).map(|r| m[(r, n)].clone()).collect())
}

// Polynomials are coefficient vectors, low degree first, no trailing zeros.

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// Remainder of a modulo b (b nonzero).
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        if !factor.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let upd = &r[dr - db + i] - &factor * bc;
                r[dr - db + i] = upd;
            }
        }
        r.pop();
        r = poly_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_divide_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        q[dr - db] = factor.clone();
        for (i, bc) in b.iter().enumerate() {
            let upd = &r[dr - db + i] - &factor * bc;
            r[dr - db + i] = upd;
        }
        r.pop();
        r = poly_trim(r);
    }
    assert!(r.is_empty(), "exact polynomial division had a remainder");
    poly_trim(q)
}

fn poly_monic(p: Vec<Rational>) -> Vec<Rational> {
    let p = poly_trim(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let lead = lead.clone();
            p.into_iter().map(|c| c / &lead).collect()
        }
    }
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    poly_monic(x)
}

fn poly_lcm(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Divisibility fast paths keep repeated lcm accumulation cheap.
    if poly_rem(a, b).is_empty() {
        return poly_monic(a.to_vec());
    }
    if poly_rem(b, a).is_empty() {
        return poly_monic(b.to_vec());
    }
    let g = poly_gcd(a, b);
    poly_monic(poly_mul(&poly_divide_exact(a, &g), b))
}

/// Exact minimal polynomial of a square rational matrix, monic, low degree
/// first. Computed as the lcm over standard basis vectors of the minimal
/// polynomial of m on that vector (Krylov sequence until linear dependence).
pub fn minimal_polynomial(m: &Mat<Rational>) -> Vec<Rational> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return vec![Rational::one()];
    }
    let mut global: Vec<Rational> = vec![Rational::one()];
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = Rational::one();
        let local = local_min_poly(m, e);
        global = poly_lcm(&global, &local);
    }
    global
}

/// Minimal polynomial of m restricted to the cyclic subspace of v.
fn local_min_poly(m: &Mat<Rational>, v: RationalVector) -> Vec<Rational> {
    // Echelon rows paired with their expression in Krylov coordinates.
    let mut reduced: Vec<(RationalVector, Vec<Rational>)> = Vec::new();
    let mut krylov = v;
    loop {
        let d = reduced.len();
        let mut x = krylov.clone();
        let mut combo = vec![Rational::zero(); d + 1];
        combo[d] = Rational::one();
        for (row, row_combo) in &reduced {
            let p = row.iter().position(|c| !c.is_zero()).unwrap();
            if !x[p].is_zero() {
                let factor = &x[p] / &row[p];
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi -= &factor * ri;
                }
                for (ci, rc) in combo.iter_mut().zip(row_combo) {
                    *ci -= &factor * rc;
                }
            }
        }
        if vec_is_zero(&x) {
            // combo gives sum_t combo[t] * m^t v = 0 with combo[d] = 1.
            return poly_trim(combo);
        }
        reduced.push((x, combo));
        krylov = m.mul_vec(&krylov);
    }
}

/// Smallest integer bound >= every |eigenvalue| of m: the maximum over rows
/// of the sum of absolute entry values, rounded up.
pub fn gershgorin_bound(m: &Mat<Rational>) -> i64 {
    let mut best = Rational::zero();
    for r in 0..m.rows() {
        let mut s = Rational::zero();
        for c in 0..m.cols() {
            s += m[(r, c)].abs();
        }
        if s > best {
            best = s;
        }
    }
    let big = best.ceil().to_integer();
    i64::try_from(&big).expect("Gershgorin bound exceeds i64")
}

/// Scales a rational polynomial to a primitive integer polynomial with the
/// same roots (clears denominators, then divides out the content).
fn primitive_integer_poly(p: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn poly_eval_big(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// All integer roots of a primitive integer polynomial with |root| <= bound.
///
/// Roots are located by reducing the polynomial modulo a few primes whose
/// product exceeds the candidate range, scanning each prime's residues, and
/// combining hits with the Chinese remainder theorem; every candidate is
/// then verified by exact evaluation, so the sieve can never produce a
/// false root or miss a true one. Cost is O(primes * max_prime * degree)
/// regardless of bound, unlike a direct scan of [-bound, bound].
fn integer_poly_roots(p: &[BigInt], bound: i64) -> Vec<i64> {
    const PRIMES: [i64; 8] = [
        100003, 100019, 100043, 100057, 100069, 100103, 100109, 100129,
    ];
    if p.len() < 2 || bound < 0 {
        return Vec::new();
    }
    let lead = p.last().expect("nonempty");
    let target = BigInt::from(2 * bound as i128 + 1);

    // Residue sets per prime, for enough primes to cover [-bound, bound].
    let mut residues: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut product = BigInt::one();
    for &ell in &PRIMES {
        if product > target {
            break;
        }
        if (lead % ell).is_zero() {
            continue; // degree would drop modulo this prime
        }
        let reduced: Vec<i64> = p
            .iter()
            .map(|c| {
                let r = c.mod_floor(&BigInt::from(ell));
                i64::try_from(&r).expect("residue fits i64")
            })
            .collect();
        let hits: Vec<i64> = (0..ell)
            .filter(|&r| {
                let mut acc = 0i64;
                for c in reduced.iter().rev() {
                    acc = (acc * r + c) % ell;
                }
                acc == 0
            })
            .collect();
        residues.push((ell, hits));
        product *= ell;
    }
    if product <= target {
        // Leading coefficient ruled out too many primes; fall back to the
        // direct scan, which is always correct.
        return (-bound..=bound)
            .filter(|&k| poly_eval_big(p, &BigInt::from(k)).is_zero())
            .collect();
    }

    // Combine one residue choice per prime via CRT.
    let mut candidates: Vec<BigInt> = vec![BigInt::zero()];
    let mut modulus = BigInt::one();
    for (ell, hits) in &residues {
        let ell_big = BigInt::from(*ell);
        let inv = mod_inverse(&modulus, &ell_big);
        let mut next = Vec::with_capacity(candidates.len() * hits.len());
        for c in &candidates {
            for &r in hits {
                // x ≡ c (mod modulus), x ≡ r (mod ell):
                // x = c + modulus * t, t ≡ (r - c) * modulus⁻¹ (mod ell).
                let t = ((BigInt::from(r) - c) * &inv).mod_floor(&ell_big);
                next.push(c + &modulus * t);
            }
        }
        candidates = next;
        modulus *= ell_big;
    }

    let half = &modulus / 2;
    let mut roots: Vec<i64> = candidates
        .into_iter()
        .map(|c| {
            let c = c.mod_floor(&modulus);
            if c > half {
                c - &modulus
            } else {
                c
            }
        })
        .filter_map(|k| i64::try_from(&k).ok())
        .filter(|&k| k.abs() <= bound)
        .filter(|&k| poly_eval_big(p, &BigInt::from(k)).is_zero())
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    let a = a.mod_floor(modulus);
    let e = a.extended_gcd(modulus);
    assert!(e.gcd.is_one(), "inverse exists for coprime moduli");
    e.x.mod_floor(modulus)
}

/// Every integer eigenvalue mu with |mu| <= bound, paired with an exact
/// basis of its eigenspace. Errors unless the eigenspaces of the integers
/// found span the whole space, which certifies that the full spectrum is
/// integral and within the bound.
pub fn integer_eigenspaces(
    m: &Mat<Rational>,
    bound: i64,
) -> Result<Vec<(i64, Vec<RationalVector>)>> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let minpoly = minimal_polynomial(m);
    let candidates = integer_poly_roots(&primitive_integer_poly(&minpoly), bound);
    let mut out = Vec::new();
    let mut total = 0usize;
    for mu in candidates {
        let shifted = Mat::from_fn(n, n, |r, c| {
            if r == c {
                &m[(r, c)] - Rational::from_integer(mu.into())
            } else {
                m[(r, c)].clone()
            }
        });
        let kernel = kernel_basis(&shifted);
        assert!(
            !kernel.is_empty(),
            "minimal polynomial root without eigenvector"
        );
        total += kernel.len();
        out.push((mu, kernel));
    }
    if total != n {
        return Err(Error::NonIntegerSpectrum {
            found: total,
            expected: n,
        });
    }
    Ok(out)
}

/// Every integer eigenvalue of m with absolute value at most `bound`,
/// ascending. See [`integer_eigenspaces`] for the completeness guarantee.
pub fn integer_eigenvalues(m: &Mat<Rational>, bound: i64) -> Result<Vec<i64>> {
    Ok(integer_eigenspaces(m, bound)?
        .into_iter()
        .map(|(mu, _)| mu)
        .collect())
}
