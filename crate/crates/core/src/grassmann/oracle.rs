//! Exact minors of a rational matrix, indexed by Pluecker labels: the
//! independent ground truth for every relation and Laurent expansion.
//!
//! A point of the `m x n` Grassmannian is an `m x (m+n)` matrix with
//! columns indexed `-m..=n-1`; the Pluecker variable `d_{l_1..l_m}` is the
//! maximal minor on those columns. A symbolic twin with indeterminate
//! entries provides the exact fallback for small boxes.

use num_traits::{One, Zero};
use rand::Rng;

use crate::laurent::{LaurentPoly, Rational};
use crate::registry::{self, VarId};

use super::partition::Partition;
use super::rect::finite_label;
use super::relations::PlueckerRelation;
use super::GrassError;

/// Exact rational determinant by fraction-free Gaussian elimination.
pub fn determinant(mat: &[Vec<Rational>]) -> Rational {
    let n = mat.len();
    if n == 0 {
        return Rational::one();
    }
    let mut a: Vec<Vec<Rational>> = mat.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot_row != col {
            a.swap(pivot_row, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    det
}

/// Determinant of a matrix of Laurent polynomials by cofactor expansion
/// (small orders only).
pub fn determinant_poly(mat: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = mat.len();
    match n {
        0 => LaurentPoly::one(),
        1 => mat[0][0].clone(),
        _ => {
            let mut acc = LaurentPoly::zero();
            for (j, entry) in mat[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * &determinant_poly(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Minors oracle over a concrete rational matrix.
#[derive(Clone, Debug)]
pub struct MinorsOracle {
    pub m: u32,
    pub n: u32,
    mat: Vec<Vec<Rational>>,
}

impl MinorsOracle {
    /// Wraps an `m x (m+n)` matrix.
    pub fn new(m: u32, n: u32, mat: Vec<Vec<Rational>>) -> Result<Self, GrassError> {
        if mat.len() != m as usize || mat.iter().any(|r| r.len() != (m + n) as usize) {
            return Err(GrassError::InvalidMaya(format!(
                "matrix must be {} x {}",
                m,
                m + n
            )));
        }
        Ok(MinorsOracle { m, n, mat })
    }

    /// Identity block followed by zeros: `d_empty = 1`, all other labels 0.
    pub fn identity_block(m: u32, n: u32) -> Self {
        let mat: Vec<Vec<Rational>> = (0..m as usize)
            .map(|r| {
                (0..(m + n) as usize)
                    .map(|c| {
                        if c == r {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        MinorsOracle { m, n, mat }
    }

    /// Random integer matrix with entries in `[-bound, bound]`, redrawn
    /// until every rectangle label (and the empty label) has a nonzero
    /// minor, so it can serve as evaluation point for Laurent expansions.
    pub fn random(m: u32, n: u32, rng: &mut impl Rng, bound: i64) -> Self {
        loop {
            let mat: Vec<Vec<Rational>> = (0..m)
                .map(|_| {
                    (0..m + n)
                        .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
                        .collect()
                })
                .collect();
            let oracle = MinorsOracle { m, n, mat };
            let mut rect_labels = vec![Partition::empty()];
            for i in 1..=m {
                for j in 1..=n {
                    rect_labels.push(Partition::rectangle(i, j));
                }
            }
            if rect_labels
                .iter()
                .all(|l| !oracle.value(l).unwrap().is_zero())
            {
                return oracle;
            }
        }
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.mat
    }

    /// Column index `-m..=n-1` mapped into the backing matrix.
    fn col(&self, idx: i64) -> Option<usize> {
        let shifted = idx + self.m as i64;
        if shifted < 0 || shifted >= (self.m + self.n) as i64 {
            None
        } else {
            Some(shifted as usize)
        }
    }

    /// Minor on a strictly increasing index tuple.
    pub fn minor_tuple(&self, tuple: &[i64]) -> Result<Rational, GrassError> {
        if tuple.len() != self.m as usize {
            return Err(GrassError::DoesNotFitBox);
        }
        let mut cols = Vec::with_capacity(tuple.len());
        for &t in tuple {
            cols.push(self.col(t).ok_or(GrassError::DoesNotFitBox)?);
        }
        let sub: Vec<Vec<Rational>> = self
            .mat
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        Ok(determinant(&sub))
    }

    /// Minor of the Pluecker label `lambda`.
    pub fn value(&self, lambda: &Partition) -> Result<Rational, GrassError> {
        let tuple = finite_label(lambda, self.m, self.n)?;
        self.minor_tuple(&tuple)
    }

    /// Signed sum of products of a relation's labels; zero for genuine
    /// Pluecker relations. Labels outside the box evaluate to zero.
    pub fn relation_residual(&self, rel: &PlueckerRelation) -> Result<Rational, GrassError> {
        let mut acc = Rational::zero();
        for (s, a, b) in &rel.terms {
            let va = match self.value(a) {
                Ok(v) => v,
                Err(GrassError::DoesNotFitBox) => Rational::zero(),
                Err(e) => return Err(e),
            };
            let vb = match self.value(b) {
                Ok(v) => v,
                Err(GrassError::DoesNotFitBox) => Rational::zero(),
                Err(e) => return Err(e),
            };
            let prod = &va * &vb;
            if *s > 0 {
                acc += prod;
            } else {
                acc -= prod;
            }
        }
        Ok(acc)
    }
}

/// Symbolic minors: matrix entries are registry indeterminates, minors are
/// Laurent polynomials. Exact-identity fallback for small boxes.
#[derive(Clone, Debug)]
pub struct SymbolicMinors {
    pub m: u32,
    pub n: u32,
    vars: Vec<Vec<VarId>>,
}

impl SymbolicMinors {
    pub fn new(m: u32, n: u32) -> Self {
        let vars: Vec<Vec<VarId>> = (0..m)
            .map(|r| {
                (0..m + n)
                    .map(|c| registry::var(&format!("M[{},{}]", r, c as i64 - m as i64)))
                    .collect()
            })
            .collect();
        SymbolicMinors { m, n, vars }
    }

    pub fn value(&self, lambda: &Partition) -> Result<LaurentPoly, GrassError> {
        let tuple = finite_label(lambda, self.m, self.n)?;
        let sub: Vec<Vec<LaurentPoly>> = self
            .vars
            .iter()
            .map(|row| {
                tuple
                    .iter()
                    .map(|&t| LaurentPoly::var(row[(t + self.m as i64) as usize]))
                    .collect()
            })
            .collect();
        Ok(determinant_poly(&sub))
    }

    /// Fully symbolic residual; exactly zero iff the relation is an
    /// identity of minors.
    pub fn relation_residual(&self, rel: &PlueckerRelation) -> Result<LaurentPoly, GrassError> {
        let mut acc = LaurentPoly::zero();
        for (s, a, b) in &rel.terms {
            let va = match self.value(a) {
                Ok(v) => v,
                Err(GrassError::DoesNotFitBox) => LaurentPoly::zero(),
                Err(e) => return Err(e),
            };
            let vb = match self.value(b) {
                Ok(v) => v,
                Err(GrassError::DoesNotFitBox) => LaurentPoly::zero(),
                Err(e) => return Err(e),
            };
            let prod = &va * &vb;
            acc = if *s > 0 { &acc + &prod } else { &acc - &prod };
        }
        Ok(acc)
    }
}

/// Convenience check used across test suites: residuals of a relation at
/// `count` seeded random integer matrices are all exactly zero.
pub fn relation_vanishes_at_random(
    rel: &PlueckerRelation,
    m: u32,
    n: u32,
    count: usize,
    rng: &mut impl Rng,
) -> Result<bool, GrassError> {
    for _ in 0..count {
        let oracle = MinorsOracle::random(m, n, rng, 1_000_000);
        if !oracle.relation_residual(rel)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Assignment of oracle minor values to the rectangle variables of a box,
/// for evaluating Laurent expansions.
pub fn rectangle_values(
    oracle: &MinorsOracle,
) -> Result<std::collections::BTreeMap<VarId, Rational>, GrassError> {
    let mut out = std::collections::BTreeMap::new();
    out.insert(
        super::rect::label_var(&Partition::empty()),
        oracle.value(&Partition::empty())?,
    );
    for i in 1..=oracle.m {
        for j in 1..=oracle.n {
            let label = Partition::rectangle(i, j);
            out.insert(super::rect::label_var(&label), oracle.value(&label)?);
        }
    }
    Ok(out)
}
