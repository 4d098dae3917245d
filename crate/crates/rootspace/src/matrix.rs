//! Dense matrices: a generic container plus the tagged quaternion matrix
//! used for Lie algebra elements.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Quaternion, ScalarFamily};
use crate::{Quat, Rational};

/// Row-major dense matrix over any coefficient type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T> Mat<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl<T: Coeff> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: (0..rows * cols).map(|_| T::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + other[(r, c)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat::from_fn(self.rows, self.cols, |r, c| {
            s.clone() * self[(r, c)].clone()
        })
    }

    /// Matrix product; entry order respects non-commutative coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for z in 0..self.cols {
                acc = acc + self[(r, z)].clone() * other[(z, c)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc = acc + self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Square matrix of rational quaternions tagged with the scalar family it
/// lives in. Lie algebra elements are values of this type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    family: ScalarFamily,
    mat: Mat<Quat>,
}

impl ExactMatrix {
    pub fn zeros(family: ScalarFamily, n: usize) -> Self {
        ExactMatrix {
            family,
            mat: Mat::zeros(n, n),
        }
    }

    pub fn from_entries(family: ScalarFamily, n: usize, entries: Vec<Quat>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        for (idx, e) in entries.iter().enumerate() {
            if !e.in_family(family) {
                return Err(Error::FamilyViolation(format!(
                    "entry at ({},{}) = {e:?} is not {family}",
                    idx / n,
                    idx % n
                )));
            }
        }
        Ok(ExactMatrix {
            family,
            mat: Mat {
                rows: n,
                cols: n,
                data: entries,
            },
        })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn family(&self) -> ScalarFamily {
        self.family
    }

    pub fn get(&self, r: usize, c: usize) -> &Quat {
        &self.mat[(r, c)]
    }

    /// Sets an entry, rejecting scalars outside the declared family.
    pub fn set(&mut self, r: usize, c: usize, value: Quat) -> Result<()> {
        if !value.in_family(self.family) {
            return Err(Error::FamilyViolation(format!(
                "entry ({r},{c}) = {value:?} is not {}",
                self.family
            )));
        }
        self.mat[(r, c)] = value;
        Ok(())
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.dim(),
                self.dim(),
                other.dim(),
                other.dim()
            )));
        }
        if self.family != other.family {
            return Err(Error::FamilyMismatch(format!(
                "{} vs {}",
                self.family, other.family
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(ExactMatrix {
            family: self.family,
            mat: self.mat.add(&other.mat),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(ExactMatrix {
            family: self.family,
            mat: self.mat.sub(&other.mat),
        })
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            family: self.family,
            mat: self.mat.neg(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ExactMatrix {
            family: self.family,
            mat: self.mat.scale(&Quaternion::from_real(s.clone())),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(ExactMatrix {
            family: self.family,
            mat: self.mat.mul(&other.mat),
        })
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        let n = self.dim();
        ExactMatrix {
            family: self.family,
            mat: Mat::from_fn(n, n, |r, c| self.mat[(c, r)].conj()),
        }
    }

    pub fn trace(&self) -> Quat {
        let mut acc = Quat::zero();
        for d in 0..self.dim() {
            acc = acc + self.mat[(d, d)].clone();
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Anti-Hermitian test: A + A* = 0, the membership condition for all
    /// three compact families.
    pub fn is_anti_hermitian(&self) -> bool {
        self.add(&self.star()).map(|s| s.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                if c > 0 {
                    write!(f, "  ")?;
                }
                let e = self.get(r, c);
                write!(f, "({:?},{:?},{:?},{:?})", e.r, e.i, e.j, e.k)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Lie bracket [A, B] = AB - BA.
pub fn bracket(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    ab.sub(&ba)
}

/// Real inner product: the real part of trace(A * B.star()).
///
/// Evaluated entrywise as the sum over all positions of the component-wise
/// products, which coincides with the trace formula and keeps the cost at
/// one pass over the entries. Symmetric and positive definite.
pub fn inner_product(a: &ExactMatrix, b: &ExactMatrix) -> Result<Rational> {
    a.check_compatible(b)?;
    let mut acc = Rational::zero();
    for r in 0..a.dim() {
        for c in 0..a.dim() {
            acc += a.get(r, c).dot(b.get(r, c));
        }
    }
    Ok(acc)
}
