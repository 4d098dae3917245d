//! Abstract root systems on a rational torus: axioms, reflections, Weyl
//! groups, angle classification, bases, and a catalog of the rank-2 systems.
//!
//! Roots are coordinate vectors over a fixed torus basis whose inner
//! products are recorded in a Gram matrix, so every geometric question
//! (lengths, angles, reflections) is answered in exact rational arithmetic.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::str::FromStr;

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::{dot, gram_inner, parallel, rank as mat_rank, solve_square, vec_add, vec_is_zero, vec_neg};
use crate::matrix::Mat;
use crate::{rint, Rational, RationalVector};

/// A root system: rational root coordinates over a torus basis with Gram
/// matrix `gram`. Holds an optional generic-functional hint used by
/// [`RootSystem::find_base`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub rank: usize,
    pub gram: Mat<Rational>,
    pub roots: Vec<RationalVector>,
    pub hint: Option<RationalVector>,
}

/// One Weyl-group element: its matrix on torus coordinates and the
/// permutation it induces on the root list. Elements are deduplicated and
/// ordered by the permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Mat<Rational>,
    pub permutation: Vec<usize>,
}

/// Sign class of a root with respect to a base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// A base Δ: simple-root indices, plus each root's integer expansion over
/// the simple roots and its sign class.
#[derive(Debug, Clone)]
pub struct Base {
    pub simple_roots: Vec<usize>,
    pub expansion: Vec<RationalVector>,
    pub sign: Vec<Sign>,
}

/// Exact angle classification of a root pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleCase {
    /// ⟨α, β⟩ = 0.
    Orthogonal,
    /// Equal lengths, angle 60° or 120°.
    Type1,
    /// Length ratio √2, angle 45° or 135°.
    Type2,
    /// Length ratio √3, angle 30° or 150°.
    Type3,
    /// β = ±α.
    Parallel,
}

/// Outcome of the axiom check; `violations` lists the first failure found
/// per axiom sweep, empty on success.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

impl RootSystem {
    /// Builds the root system of a decomposition: both signs of every dual
    /// root in torus coordinates, with the torus Gram matrix.
    pub fn from_decomposition(dec: &Decomposition) -> Result<RootSystem> {
        let m = dec.root_data.len();
        let mut roots = Vec::with_capacity(2 * m);
        for datum in &dec.root_data {
            roots.push(datum.dual_coords().to_vec());
        }
        for k in 0..m {
            roots.push(vec_neg(&roots[k]));
        }
        let rank = dec.algebra.rank;
        let span = mat_rank(&Mat::from_fn(m, rank, |r, c| roots[r][c].clone()));
        if span != rank {
            return Err(Error::SpanDefect {
                found: span,
                expected: rank,
            });
        }
        Ok(RootSystem {
            rank,
            gram: dec.algebra.torus_gram(),
            roots,
            hint: Some(dec.x_coords.clone()),
        })
    }

    /// ⟨α, β⟩ under the Gram form, for coordinate vectors.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        gram_inner(&self.gram, a, b)
    }

    /// Checks the three root-system axioms plus reducedness, exhaustively
    /// over root pairs. Violations are reported, not raised.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();

        'prop1: for (i, alpha) in self.roots.iter().enumerate() {
            if vec_is_zero(alpha) {
                violations.push(format!("root {i} is zero"));
                break;
            }
            if !self.roots.contains(&vec_neg(alpha)) {
                violations.push(format!("root {i} lacks its negative"));
                break;
            }
            for (j, beta) in self.roots.iter().enumerate() {
                if i != j && parallel(alpha, beta) && beta != alpha && *beta != vec_neg(alpha) {
                    violations.push(format!(
                        "roots {i} and {j} are proportional but not negatives"
                    ));
                    break 'prop1;
                }
            }
        }
        if self.roots.iter().enumerate().any(|(i, a)| {
            self.roots[..i].contains(a)
        }) {
            violations.push("duplicate root".into());
        }

        'prop2: for alpha in &self.roots {
            for beta in &self.roots {
                match self.reflect(alpha, beta) {
                    Ok(image) => {
                        if !self.roots.contains(&image) {
                            violations.push(format!(
                                "reflection of {beta:?} through {alpha:?} leaves the system"
                            ));
                            break 'prop2;
                        }
                    }
                    Err(e) => {
                        violations.push(e.to_string());
                        break 'prop2;
                    }
                }
            }
        }

        'prop3: for alpha in &self.roots {
            let len = self.inner(alpha, alpha);
            if len.is_zero() {
                continue;
            }
            for beta in &self.roots {
                let ratio = rint(2) * self.inner(alpha, beta) / &len;
                if !ratio.is_integer() {
                    violations.push(format!(
                        "2⟨β,α⟩/⟨α,α⟩ = {ratio} is not an integer for α = {alpha:?}, β = {beta:?}"
                    ));
                    break 'prop3;
                }
            }
        }

        AxiomReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Reflection of X through the hyperplane orthogonal to α:
    /// X − 2⟨α,X⟩/⟨α,α⟩ · α.
    pub fn reflect(&self, alpha: &[Rational], x: &[Rational]) -> Result<RationalVector> {
        let len = self.inner(alpha, alpha);
        if len.is_zero() || vec_is_zero(alpha) {
            return Err(Error::AxiomViolation(
                "reflection through a zero vector".into(),
            ));
        }
        let coeff = rint(2) * self.inner(alpha, x) / len;
        Ok(x.iter()
            .zip(alpha)
            .map(|(xi, ai)| xi - &coeff * ai)
            .collect())
    }

    fn reflection_matrix(&self, alpha: &[Rational]) -> Result<Mat<Rational>> {
        let mut cols = Vec::with_capacity(self.rank);
        for k in 0..self.rank {
            let mut e = vec![Rational::zero(); self.rank];
            e[k] = rint(1);
            cols.push(self.reflect(alpha, &e)?);
        }
        Ok(Mat::from_fn(self.rank, self.rank, |r, c| cols[c][r].clone()))
    }

    fn permutation_of(&self, matrix: &Mat<Rational>) -> Result<Vec<usize>> {
        self.roots
            .iter()
            .map(|root| {
                let image = matrix.mul_vec(root);
                self.roots
                    .iter()
                    .position(|r| *r == image)
                    .ok_or_else(|| {
                        Error::AxiomViolation("matrix does not permute the roots".into())
                    })
            })
            .collect()
    }

    /// The Weyl group: closure of the root reflections under composition,
    /// deduplicated by root permutation and sorted by it. `cap` bounds the
    /// element count.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut generators = Vec::new();
        for alpha in &self.roots {
            let matrix = self.reflection_matrix(alpha)?;
            let permutation = self.permutation_of(&matrix)?;
            generators.push((matrix, permutation));
        }

        let identity_perm: Vec<usize> = (0..self.roots.len()).collect();
        let mut seen: BTreeMap<Vec<usize>, Mat<Rational>> = BTreeMap::new();
        seen.insert(identity_perm.clone(), Mat::identity(self.rank));
        let mut frontier = vec![identity_perm];
        while let Some(perm) = frontier.pop() {
            let matrix = seen[&perm].clone();
            for (gen_matrix, gen_perm) in &generators {
                let new_perm: Vec<usize> = (0..perm.len()).map(|r| gen_perm[perm[r]]).collect();
                if seen.contains_key(&new_perm) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(Error::WeylCapExceeded(seen.len() + 1));
                }
                let new_matrix = gen_matrix.mul(&matrix);
                seen.insert(new_perm.clone(), new_matrix);
                frontier.push(new_perm);
            }
        }

        Ok(seen
            .into_iter()
            .map(|(permutation, matrix)| WeylElement {
                matrix,
                permutation,
            })
            .collect())
    }

    /// Exact angle classification via the integer pair
    /// p = 2⟨β,α⟩/⟨α,α⟩, q = 2⟨α,β⟩/⟨β,β⟩ with p·q ∈ {0, 1, 2, 3}.
    pub fn classify_angle(&self, alpha: &[Rational], beta: &[Rational]) -> Result<AngleCase> {
        if beta == alpha || vec_neg(alpha) == beta {
            return Ok(AngleCase::Parallel);
        }
        let la = self.inner(alpha, alpha);
        let lb = self.inner(beta, beta);
        if la.is_zero() || lb.is_zero() {
            return Err(Error::AxiomViolation("zero-length root".into()));
        }
        let p = rint(2) * self.inner(beta, alpha) / la;
        let q = rint(2) * self.inner(alpha, beta) / lb;
        if !p.is_integer() || !q.is_integer() {
            return Err(Error::AxiomViolation(format!(
                "non-integer reflection coefficients p = {p}, q = {q}"
            )));
        }
        let pq = (&p * &q).to_integer();
        match i64::try_from(&pq).map_err(|_| Error::AngleOutOfRange(i64::MAX))? {
            0 => Ok(AngleCase::Orthogonal),
            1 => Ok(AngleCase::Type1),
            2 => Ok(AngleCase::Type2),
            3 => Ok(AngleCase::Type3),
            other => Err(Error::AngleOutOfRange(other)),
        }
    }

    /// Chooses a generic functional (the decomposition hint when present,
    /// deterministically perturbed until no root pairs to zero), takes
    /// R⁺ = {α : v·α > 0}, and returns the simple roots — positive roots
    /// that are not sums of two positive roots — with verified integer
    /// same-sign expansions for every root.
    pub fn find_base(&self) -> Result<Base> {
        let mut v: RationalVector = match &self.hint {
            Some(h) => h.clone(),
            None => vec![rint(1); self.rank],
        };
        // Perturbation scale: strictly dominated by any nonzero pairing.
        let mut magnitude = 1i64;
        for root in &self.roots {
            for c in root {
                let m = (c.numer() * c.denom()).abs();
                if let Ok(v) = i64::try_from(&m) {
                    magnitude = magnitude.max(v);
                }
            }
        }
        let n = rint(1 + magnitude);
        let mut guard = 0;
        while self.roots.iter().any(|r| dot(&v, r).is_zero()) {
            if guard > self.roots.len() {
                return Err(Error::BaseFailure(
                    "no generic functional found".into(),
                ));
            }
            let mut eps = rint(1);
            for vk in v.iter_mut() {
                eps /= &n;
                *vk += &eps;
            }
            guard += 1;
        }

        let positive: Vec<usize> = (0..self.roots.len())
            .filter(|&i| dot(&v, &self.roots[i]).is_positive())
            .collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&i| {
                !positive.iter().any(|&a| {
                    positive.iter().any(|&b| {
                        vec_add(&self.roots[a], &self.roots[b]) == self.roots[i]
                    })
                })
            })
            .collect();
        self.base_from_simple(&simple)
    }

    /// Verifies the base property for a given simple-root index set and
    /// assembles the expansions. Public so Weyl translates of a base can be
    /// re-verified.
    pub fn base_from_simple(&self, simple: &[usize]) -> Result<Base> {
        if simple.len() != self.rank {
            return Err(Error::BaseFailure(format!(
                "{} simple roots for rank {}",
                simple.len(),
                self.rank
            )));
        }
        let a = Mat::from_fn(self.rank, self.rank, |r, c| {
            self.roots[simple[c]][r].clone()
        });
        if mat_rank(&a) != self.rank {
            return Err(Error::BaseFailure(
                "simple roots are linearly dependent".into(),
            ));
        }
        let mut expansion = Vec::with_capacity(self.roots.len());
        let mut sign = Vec::with_capacity(self.roots.len());
        for root in &self.roots {
            let coeffs = solve_square(&a, root).ok_or_else(|| {
                Error::BaseFailure("root does not expand over the simple roots".into())
            })?;
            let mut pos = false;
            let mut neg = false;
            for c in &coeffs {
                if !c.is_integer() {
                    return Err(Error::BaseFailure(format!(
                        "non-integer expansion coefficient {c}"
                    )));
                }
                if c.is_positive() {
                    pos = true;
                }
                if c.is_negative() {
                    neg = true;
                }
            }
            if pos && neg {
                return Err(Error::BaseFailure(
                    "expansion mixes positive and negative coefficients".into(),
                ));
            }
            sign.push(if neg { Sign::Negative } else { Sign::Positive });
            expansion.push(coeffs);
        }
        Ok(Base {
            simple_roots: simple.to_vec(),
            expansion,
            sign,
        })
    }

    /// Root-system equivalence, decided by Dynkin-diagram isomorphism.
    pub fn equivalent(&self, other: &RootSystem) -> Result<bool> {
        let d1 = crate::dynkin::build_diagram(self, &self.find_base()?)?;
        let d2 = crate::dynkin::build_diagram(other, &other.find_base()?)?;
        Ok(crate::dynkin::isomorphic(&d1, &d2))
    }

    // -- serialization ----------------------------------------------------

    /// JSON document {rank, gram: row-major "p/q" strings, roots: arrays of
    /// "p/q" strings}.
    pub fn to_json(&self) -> Value {
        let gram: Vec<String> = (0..self.rank)
            .flat_map(|r| (0..self.rank).map(move |c| (r, c)))
            .map(|(r, c)| self.gram[(r, c)].to_string())
            .collect();
        let roots: Vec<Vec<String>> = self
            .roots
            .iter()
            .map(|root| root.iter().map(Rational::to_string).collect())
            .collect();
        json!({ "rank": self.rank, "gram": gram, "roots": roots })
    }

    pub fn from_json(doc: &Value) -> Result<RootSystem> {
        let bad = |msg: &str| Error::Serialization(msg.into());
        let rank = doc
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing rank"))? as usize;
        let gram_strings = doc
            .get("gram")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing gram"))?;
        if gram_strings.len() != rank * rank {
            return Err(bad("gram size does not match rank"));
        }
        let parse = |v: &Value| -> Result<Rational> {
            let s = v.as_str().ok_or_else(|| bad("expected rational string"))?;
            Rational::from_str(s).map_err(|e| Error::Serialization(format!("bad rational {s}: {e}")))
        };
        let gram_entries: Vec<Rational> = gram_strings.iter().map(parse).collect::<Result<_>>()?;
        let gram = Mat::from_fn(rank, rank, |r, c| gram_entries[r * rank + c].clone());
        let roots = doc
            .get("roots")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing roots"))?
            .iter()
            .map(|row| {
                let row = row.as_array().ok_or_else(|| bad("root is not an array"))?;
                if row.len() != rank {
                    return Err(bad("root length does not match rank"));
                }
                row.iter().map(parse).collect()
            })
            .collect::<Result<Vec<RationalVector>>>()?;
        Ok(RootSystem {
            rank,
            gram,
            roots,
            hint: None,
        })
    }
}

/// A named model from the rank-2 catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub system: RootSystem,
}

/// Concrete rational models of the five rank-2 root systems. B₂ and C₂ are
/// distinct entries (lengths swapped) that compare equivalent.
pub fn rank2_catalog() -> Vec<CatalogEntry> {
    fn sys(gram: [[i64; 2]; 2], half: &[(i64, i64)], denom: i64) -> RootSystem {
        let mut roots = Vec::new();
        for &(a, b) in half {
            roots.push(vec![crate::rat(a, denom), crate::rat(b, denom)]);
        }
        for k in 0..half.len() {
            roots.push(vec_neg(&roots[k]));
        }
        RootSystem {
            rank: 2,
            gram: Mat::from_fn(2, 2, |r, c| rint(gram[r][c])),
            roots,
            hint: None,
        }
    }
    vec![
        CatalogEntry {
            name: "A1xA1",
            system: sys([[1, 0], [0, 1]], &[(1, 0), (0, 1)], 1),
        },
        CatalogEntry {
            name: "A2",
            system: sys([[2, -1], [-1, 2]], &[(1, 0), (0, 1), (1, 1)], 1),
        },
        CatalogEntry {
            name: "B2",
            system: sys([[2, 0], [0, 2]], &[(1, 1), (1, -1), (1, 0), (0, 1)], 2),
        },
        CatalogEntry {
            name: "C2",
            system: sys([[1, 0], [0, 1]], &[(1, 1), (1, -1), (2, 0), (0, 2)], 1),
        },
        CatalogEntry {
            name: "G2",
            system: sys(
                [[2, -3], [-3, 6]],
                &[(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)],
                1,
            ),
        },
    ]
}
