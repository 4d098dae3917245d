//! The compact classical Lie algebras su(n), so(2n), so(2n+1), sp(n) with
//! their named bases.
//!
//! Basis order is canonical: torus elements first, then the pairs spanning
//! each root space. Naming follows the standard letters per family:
//!
//! * su(n): torus H_12, H_23, ..., H_(n-1)n; pairs (E_ij, F_ij) where E_ij
//!   has 1 at (i,j) and -1 at (j,i), F_ij has i at (i,j) and (j,i). Pairs
//!   run along superdiagonals: all j - i = 1 first, then j - i = 2, and so
//!   on (so su(3) reads E_12, F_12, E_23, F_23, E_13, F_13).
//! * so(2n): viewed as an n x n grid of 2 x 2 blocks; H_i has the rotation
//!   block at (i,i). For i < j the pair (E_ij, F_ij) places the 2 x 2
//!   identity or rotation at block (i,j), and (X_ij, Y_ij) the two
//!   symmetric reflections. Pairs are ordered lexicographically, all
//!   (E,F) pairs before all (X,Y) pairs.
//! * so(2n+1): so(2n) plus one extra row/column; adds pairs (V_i, W_i)
//!   supported on the last column.
//! * sp(n): quaternion n x n; torus H_i = i at (i,i); pairs (E_ij, F_ij)
//!   as in su, (A_ij, B_ij) with j and k entries, and diagonal pairs
//!   (J_i, K_i) with j, k at (i,i).
//!
//! Reversed or aliased names resolve by the symmetry of the construction:
//! E_ji = -E_ij, F_ji = F_ij, X_ji = -X_ij, Y_ji = -Y_ij, A_ji = A_ij,
//! B_ji = B_ij, H_ji = -H_ij, and su(n) accepts any H_ij (the chain sum
//! H_i(i+1) + ... + H_(j-1)j).

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::solve_square;
use crate::matrix::{inner_product, ExactMatrix, Mat};
use crate::scalar::{Quaternion, ScalarFamily};
use crate::{rint, Quat, Rational, RationalVector};

/// The four classical families. `n` is the family parameter, not the
/// matrix size: so(2n) and so(2n+1) use 2n x 2n and (2n+1) x (2n+1) real
/// matrices respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SU,
    SOEven,
    SOOdd,
    Sp,
}

impl Family {
    pub fn scalar_family(self) -> ScalarFamily {
        match self {
            Family::SU => ScalarFamily::Complex,
            Family::SOEven | Family::SOOdd => ScalarFamily::Real,
            Family::Sp => ScalarFamily::Quaternion,
        }
    }
}

/// One named basis element: the name as printed and the matrix.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub name: String,
    pub mat: ExactMatrix,
    /// Nonzero entries, for fast inner products against sparse elements.
    sparse: Vec<(usize, usize, Quat)>,
    /// Squared length under the trace-form inner product.
    pub norm_sq: Rational,
}

/// A classical algebra with its canonical ordered basis.
#[derive(Debug, Clone)]
pub struct ClassicalAlgebra {
    pub family: Family,
    pub n: usize,
    /// Size of the matrices realizing the algebra.
    pub matrix_dim: usize,
    /// Dimension of the algebra as a real vector space.
    pub dim: usize,
    /// Dimension of the torus (number of leading torus basis elements).
    pub rank: usize,
    pub basis: Vec<BasisElement>,
    by_name: HashMap<String, usize>,
}

impl fmt::Display for ClassicalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::SU => write!(f, "su({})", self.n),
            Family::SOEven => write!(f, "so({})", 2 * self.n),
            Family::SOOdd => write!(f, "so({})", 2 * self.n + 1),
            Family::Sp => write!(f, "sp({})", self.n),
        }
    }
}

fn q_real(x: i64) -> Quat {
    Quaternion::from_real(rint(x))
}

struct Builder {
    family: ScalarFamily,
    matrix_dim: usize,
    elements: Vec<BasisElement>,
}

impl Builder {
    fn new(family: ScalarFamily, matrix_dim: usize) -> Self {
        Builder {
            family,
            matrix_dim,
            elements: Vec::new(),
        }
    }

    fn push(&mut self, name: String, entries: &[(usize, usize, Quat)]) {
        let mut mat = ExactMatrix::zeros(self.family, self.matrix_dim);
        let mut norm_sq = Rational::zero();
        for (r, c, v) in entries {
            mat.set(*r, *c, v.clone()).expect("entry within family");
            norm_sq += v.dot(v);
        }
        self.elements.push(BasisElement {
            name,
            mat,
            sparse: entries.to_vec(),
            norm_sq,
        });
    }
}

/// Builds the algebra for a family and parameter.
///
/// Preconditions: n >= 2 for SU and SOEven, n >= 1 for SOOdd and Sp.
pub fn build(family: Family, n: usize) -> Result<ClassicalAlgebra> {
    let min = match family {
        Family::SU | Family::SOEven => 2,
        Family::SOOdd | Family::Sp => 1,
    };
    if n < min {
        return Err(Error::UnsupportedParameter(format!(
            "{family:?} requires n >= {min}, got {n}"
        )));
    }

    let (matrix_dim, dim, rank) = match family {
        Family::SU => (n, n * n - 1, n - 1),
        Family::SOEven => (2 * n, n * (2 * n - 1), n),
        Family::SOOdd => (2 * n + 1, (2 * n + 1) * n, n),
        Family::Sp => (n, n * (2 * n + 1), n),
    };

    let mut b = Builder::new(family.scalar_family(), matrix_dim);
    match family {
        Family::SU => build_su(&mut b, n),
        Family::SOEven => build_so(&mut b, n, false),
        Family::SOOdd => build_so(&mut b, n, true),
        Family::Sp => build_sp(&mut b, n),
    }

    assert_eq!(b.elements.len(), dim, "basis size must match dimension");
    let by_name = b
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.name.clone(), i))
        .collect();
    Ok(ClassicalAlgebra {
        family,
        n,
        matrix_dim,
        dim,
        rank,
        basis: b.elements,
        by_name,
    })
}

/// Canonical two-index element name: "E_12" for single-digit indices,
/// "E_10,12" once an index needs two digits.
pub fn pair_name(letter: char, i: usize, j: usize) -> String {
    if i <= 9 && j <= 9 {
        format!("{letter}_{i}{j}")
    } else {
        format!("{letter}_{i},{j}")
    }
}

fn single_name(letter: char, i: usize) -> String {
    format!("{letter}_{i}")
}

fn build_su(b: &mut Builder, n: usize) {
    let i_unit = Quat::unit_i();
    // Torus: H_k(k+1) = i at (k,k), -i at (k+1,k+1).
    for k in 1..n {
        b.push(
            pair_name('H', k, k + 1),
            &[
                (k - 1, k - 1, i_unit.clone()),
                (k, k, -i_unit.clone()),
            ],
        );
    }
    // Root pairs along superdiagonals: j - i = 1, then 2, ...
    for gap in 1..n {
        for i in 1..=(n - gap) {
            let j = i + gap;
            b.push(
                pair_name('E', i, j),
                &[(i - 1, j - 1, q_real(1)), (j - 1, i - 1, q_real(-1))],
            );
            b.push(
                pair_name('F', i, j),
                &[(i - 1, j - 1, i_unit.clone()), (j - 1, i - 1, i_unit.clone())],
            );
        }
    }
}

/// The four 2 x 2 block letters for so: E = identity, F = rotation,
/// X, Y = the two symmetric reflections.
fn so_block(letter: char) -> [[i64; 2]; 2] {
    match letter {
        'E' => [[1, 0], [0, 1]],
        'F' => [[0, 1], [-1, 0]],
        'X' => [[0, 1], [1, 0]],
        'Y' => [[1, 0], [0, -1]],
        _ => unreachable!(),
    }
}

/// Places `block` at block position (bi, bj) and -block^T at (bj, bi),
/// with 1-based block indices.
fn so_pair_entries(letter: char, bi: usize, bj: usize) -> Vec<(usize, usize, Quat)> {
    let block = so_block(letter);
    let mut entries = Vec::new();
    for (r, row) in block.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                entries.push((2 * (bi - 1) + r, 2 * (bj - 1) + c, q_real(v)));
                entries.push((2 * (bj - 1) + c, 2 * (bi - 1) + r, q_real(-v)));
            }
        }
    }
    entries
}

fn build_so(b: &mut Builder, n: usize, odd: bool) {
    // Torus: H_i = rotation block at (i,i).
    for i in 1..=n {
        b.push(
            single_name('H', i),
            &[
                (2 * (i - 1), 2 * (i - 1) + 1, q_real(1)),
                (2 * (i - 1) + 1, 2 * (i - 1), q_real(-1)),
            ],
        );
    }
    for (letters, _) in [("EF", 0), ("XY", 1)] {
        for i in 1..n {
            for j in (i + 1)..=n {
                for letter in letters.chars() {
                    b.push(pair_name(letter, i, j), &so_pair_entries(letter, i, j));
                }
            }
        }
    }
    if odd {
        let last = 2 * n;
        for i in 1..=n {
            b.push(
                single_name('V', i),
                &[(2 * i - 1, last, q_real(1)), (last, 2 * i - 1, q_real(-1))],
            );
            b.push(
                single_name('W', i),
                &[(2 * i - 2, last, q_real(1)), (last, 2 * i - 2, q_real(-1))],
            );
        }
    }
}

fn build_sp(b: &mut Builder, n: usize) {
    let (qi, qj, qk) = (Quat::unit_i(), Quat::unit_j(), Quat::unit_k());
    for i in 1..=n {
        b.push(single_name('H', i), &[(i - 1, i - 1, qi.clone())]);
    }
    for i in 1..n {
        for j in (i + 1)..=n {
            b.push(
                pair_name('E', i, j),
                &[(i - 1, j - 1, q_real(1)), (j - 1, i - 1, q_real(-1))],
            );
            b.push(
                pair_name('F', i, j),
                &[(i - 1, j - 1, qi.clone()), (j - 1, i - 1, qi.clone())],
            );
        }
    }
    for i in 1..n {
        for j in (i + 1)..=n {
            b.push(
                pair_name('A', i, j),
                &[(i - 1, j - 1, qj.clone()), (j - 1, i - 1, qj.clone())],
            );
            b.push(
                pair_name('B', i, j),
                &[(i - 1, j - 1, qk.clone()), (j - 1, i - 1, qk.clone())],
            );
        }
    }
    for i in 1..=n {
        b.push(single_name('J', i), &[(i - 1, i - 1, qj.clone())]);
        b.push(single_name('K', i), &[(i - 1, i - 1, qk.clone())]);
    }
}

/// Parses names like "E_12", "E_10,12", "H_3", "V_2".
fn parse_name(name: &str) -> Option<(char, Vec<usize>)> {
    let (letter, rest) = name.split_once('_')?;
    let mut chars = letter.chars();
    let letter = chars.next()?;
    if chars.next().is_some() {
        return None;
    }
    let indices: Vec<usize> = if rest.contains(',') {
        rest.split(',')
            .map(|p| p.parse().ok())
            .collect::<Option<_>>()?
    } else if rest.len() == 2 && rest.chars().all(|c| c.is_ascii_digit()) {
        rest.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()?
    } else {
        vec![rest.parse().ok()?]
    };
    Some((letter, indices))
}

impl ClassicalAlgebra {
    /// Looks up a basis element by canonical name, resolving reversed index
    /// pairs and su chain names by the family's symmetry conventions.
    pub fn element(&self, name: &str) -> Result<ExactMatrix> {
        if let Some(&idx) = self.by_name.get(name) {
            return Ok(self.basis[idx].mat.clone());
        }
        let (letter, idx) = parse_name(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
        let fail = || Error::UnknownElement(name.to_string());

        if idx.len() == 2 {
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                return Err(fail());
            }
            let (lo, hi) = (i.min(j), i.max(j));
            // su(n) chain names H_ij = H_lo(lo+1) + ... + H_(hi-1)hi,
            // negated when i > j.
            if letter == 'H' && self.family == Family::SU {
                if hi > self.n {
                    return Err(fail());
                }
                let mut acc = ExactMatrix::zeros(self.family.scalar_family(), self.matrix_dim);
                for k in lo..hi {
                    acc = acc.add(&self.basis[k - 1].mat)?;
                }
                return Ok(if i < j { acc } else { acc.neg() });
            }
            let canonical = pair_name(letter, lo, hi);
            let &pos = self.by_name.get(&canonical).ok_or_else(fail)?;
            let mat = self.basis[pos].mat.clone();
            if i < j {
                return Ok(mat);
            }
            // Sign under index reversal: E, X, Y, H flip; F, A, B do not.
            return Ok(match letter {
                'E' | 'X' | 'Y' | 'H' => mat.neg(),
                'F' | 'A' | 'B' => mat,
                _ => return Err(fail()),
            });
        }
        Err(fail())
    }

    /// The torus element with the given coefficients over the torus basis.
    pub fn torus_vector(&self, coeffs: &[Rational]) -> Result<ExactMatrix> {
        if coeffs.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a rank-{} torus",
                coeffs.len(),
                self.rank
            )));
        }
        let mut acc = ExactMatrix::zeros(self.family.scalar_family(), self.matrix_dim);
        for (c, e) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&e.mat.scale(c))?;
            }
        }
        Ok(acc)
    }

    pub fn torus_basis(&self) -> &[BasisElement] {
        &self.basis[..self.rank]
    }

    pub fn off_torus_basis(&self) -> &[BasisElement] {
        &self.basis[self.rank..]
    }

    /// Nonzero entries of a basis element, for sparse arithmetic.
    pub(crate) fn sparse_entries(&self, basis_idx: usize) -> &[(usize, usize, Quat)] {
        &self.basis[basis_idx].sparse
    }

    /// Gram matrix of the torus basis under the trace form.
    pub fn torus_gram(&self) -> Mat<Rational> {
        Mat::from_fn(self.rank, self.rank, |r, c| {
            inner_product(&self.basis[r].mat, &self.basis[c].mat).expect("same algebra")
        })
    }

    /// Inner product of an arbitrary element against a (sparse) basis
    /// element, touching only the basis element's nonzero entries.
    pub fn pair_with_basis(&self, v: &ExactMatrix, basis_idx: usize) -> Rational {
        let mut acc = Rational::zero();
        for (r, c, q) in &self.basis[basis_idx].sparse {
            acc += v.get(*r, *c).dot(q);
        }
        acc
    }

    /// Expands v over the full named basis. The off-torus coefficients come
    /// from orthogonal projection (those elements are mutually orthogonal
    /// and orthogonal to the torus); the torus block solves the Gram
    /// system. Errors when v is not in the span, detected by re-summing.
    pub fn expand(&self, v: &ExactMatrix) -> Result<RationalVector> {
        let mut coeffs = vec![Rational::zero(); self.dim];
        let torus_pairings: Vec<Rational> = (0..self.rank)
            .map(|b| self.pair_with_basis(v, b))
            .collect();
        let torus_coeffs = solve_square(&self.torus_gram(), &torus_pairings)
            .expect("torus Gram matrix is positive definite");
        coeffs[..self.rank].clone_from_slice(&torus_coeffs);
        for (b, coeff) in coeffs.iter_mut().enumerate().skip(self.rank) {
            let pairing = self.pair_with_basis(v, b);
            if !pairing.is_zero() {
                *coeff = pairing / &self.basis[b].norm_sq;
            }
        }
        // Exactness check: the expansion must reproduce v.
        let mut acc = ExactMatrix::zeros(self.family.scalar_family(), self.matrix_dim);
        for (c, e) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&e.mat.scale(c))?;
            }
        }
        if &acc != v {
            return Err(Error::DecompositionCheck(
                "element is not in the algebra's span".into(),
            ));
        }
        Ok(coeffs)
    }
}
