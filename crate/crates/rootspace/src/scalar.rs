//! Quaternion scalars over a generic coefficient ring.
//!
//! One scalar type serves all three classical families: real and complex
//! entries are quaternions whose upper coefficients vanish, and the matrix
//! layer tags each matrix with the [`ScalarFamily`] it is allowed to use.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Coefficient bound for quaternion components: exact ring arithmetic plus
/// equality. Instantiated with `Rational` everywhere in this crate.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + fmt::Debug
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + fmt::Debug
{
}

/// Which scalars a matrix is allowed to contain.
///
/// `Real` admits only the real coefficient, `Complex` the real and i parts,
/// `Quaternion` all four. Products and brackets of matrices in a family stay
/// in that family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarFamily {
    Real,
    Complex,
    Quaternion,
}

impl fmt::Display for ScalarFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarFamily::Real => write!(f, "real"),
            ScalarFamily::Complex => write!(f, "complex"),
            ScalarFamily::Quaternion => write!(f, "quaternion"),
        }
    }
}

/// Quaternion r + i*I + j*J + k*K with coefficients in `T`.
///
/// Multiplication follows IJ = K, JK = I, KI = J, and I^2 = J^2 = K^2 = -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<T> {
    pub r: T,
    pub i: T,
    pub j: T,
    pub k: T,
}

impl<T: Coeff> Quaternion<T> {
    pub fn new(r: T, i: T, j: T, k: T) -> Self {
        Quaternion { r, i, j, k }
    }

    pub fn from_real(r: T) -> Self {
        Quaternion {
            r,
            i: T::zero(),
            j: T::zero(),
            k: T::zero(),
        }
    }

    /// The imaginary unit i (of the scalar algebra, not a matrix).
    pub fn unit_i() -> Self {
        Quaternion {
            r: T::zero(),
            i: T::one(),
            j: T::zero(),
            k: T::zero(),
        }
    }

    pub fn unit_j() -> Self {
        Quaternion {
            r: T::zero(),
            i: T::zero(),
            j: T::one(),
            k: T::zero(),
        }
    }

    pub fn unit_k() -> Self {
        Quaternion {
            r: T::zero(),
            i: T::zero(),
            j: T::zero(),
            k: T::one(),
        }
    }

    /// Conjugate: negates the three imaginary coefficients.
    pub fn conj(&self) -> Self {
        Quaternion {
            r: self.r.clone(),
            i: -self.i.clone(),
            j: -self.j.clone(),
            k: -self.k.clone(),
        }
    }

    pub fn real_part(&self) -> T {
        self.r.clone()
    }

    /// Smallest family containing this scalar.
    pub fn family(&self) -> ScalarFamily {
        if self.j.is_zero() && self.k.is_zero() {
            if self.i.is_zero() {
                ScalarFamily::Real
            } else {
                ScalarFamily::Complex
            }
        } else {
            ScalarFamily::Quaternion
        }
    }

    pub fn in_family(&self, family: ScalarFamily) -> bool {
        match family {
            ScalarFamily::Real => self.i.is_zero() && self.j.is_zero() && self.k.is_zero(),
            ScalarFamily::Complex => self.j.is_zero() && self.k.is_zero(),
            ScalarFamily::Quaternion => true,
        }
    }

    /// Sum over components of x*y per component pair; the real part of
    /// self * other.conj(). This is the Euclidean pairing of two scalars.
    pub fn dot(&self, other: &Self) -> T {
        self.r.clone() * other.r.clone()
            + self.i.clone() * other.i.clone()
            + self.j.clone() * other.j.clone()
            + self.k.clone() * other.k.clone()
    }

    pub fn scale(&self, c: &T) -> Self {
        Quaternion {
            r: c.clone() * self.r.clone(),
            i: c.clone() * self.i.clone(),
            j: c.clone() * self.j.clone(),
            k: c.clone() * self.k.clone(),
        }
    }
}

impl<T: Coeff> Zero for Quaternion<T> {
    fn zero() -> Self {
        Quaternion::from_real(T::zero())
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }
}

impl<T: Coeff> One for Quaternion<T> {
    fn one() -> Self {
        Quaternion::from_real(T::one())
    }
}

impl<T: Coeff> Add for Quaternion<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Quaternion {
            r: self.r + rhs.r,
            i: self.i + rhs.i,
            j: self.j + rhs.j,
            k: self.k + rhs.k,
        }
    }
}

impl<T: Coeff> Sub for Quaternion<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Quaternion {
            r: self.r - rhs.r,
            i: self.i - rhs.i,
            j: self.j - rhs.j,
            k: self.k - rhs.k,
        }
    }
}

impl<T: Coeff> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Quaternion {
            r: -self.r,
            i: -self.i,
            j: -self.j,
            k: -self.k,
        }
    }
}

impl<T: Coeff> Mul for Quaternion<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a1, b1, c1, d1) = (self.r, self.i, self.j, self.k);
        let (a2, b2, c2, d2) = (rhs.r, rhs.i, rhs.j, rhs.k);
        Quaternion {
            r: a1.clone() * a2.clone()
                - b1.clone() * b2.clone()
                - c1.clone() * c2.clone()
                - d1.clone() * d2.clone(),
            i: a1.clone() * b2.clone() + b1.clone() * a2.clone() + c1.clone() * d2.clone()
                - d1.clone() * c2.clone(),
            j: a1.clone() * c2.clone() - b1.clone() * d2.clone()
                + c1.clone() * a2.clone()
                + d1.clone() * b2.clone(),
            k: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}
