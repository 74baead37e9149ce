//! Exact sparse linear algebra over the rationals.
//!
//! Spans are computed with fraction-free elimination on integer rows and
//! handed back in reduced row-echelon form with rational entries. A prime
//! field mode (modulus [`FAST_PRIME`]) computes ranks only; its ranks never
//! exceed the rational ones and it is meant as a cross-checked accelerator.

mod echelon;
mod scalar;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use echelon::RankEngine;
pub use scalar::FAST_PRIME;

pub type Rational = BigRational;

/// Arithmetic used for rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Arithmetic {
    #[default]
    Rational,
    /// Arithmetic modulo [`FAST_PRIME`]. Probabilistic: ranks can only drop.
    PrimeField,
}

/// Sparse vector with exact rational entries; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseVector[{}]{{", self.dim)?;
        for (i, (c, x)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}: {x}")?;
        }
        write!(f, "}}")
    }
}

impl SparseVector {
    /// Builds a vector, summing repeated columns and dropping zeros.
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self> {
        let mut sorted: Vec<(usize, Rational)> = Vec::new();
        for (c, x) in entries {
            if c >= dim {
                return Err(Error::IndexOutOfRange { index: c, dim });
            }
            sorted.push((c, x));
        }
        sorted.sort_by_key(|(c, _)| *c);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(sorted.len());
        for (c, x) in sorted {
            match merged.last_mut() {
                Some((last, acc)) if *last == c => *acc += x,
                _ => merged.push((c, x)),
            }
        }
        merged.retain(|(_, x)| !x.is_zero());
        Ok(SparseVector {
            dim,
            entries: merged,
        })
    }

    pub fn from_integers(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, i64)>,
    ) -> Result<Self> {
        Self::new(
            dim,
            entries
                .into_iter()
                .map(|(c, x)| (c, Rational::from_integer(BigInt::from(x)))),
        )
    }

    /// Dense integer coordinates, e.g. `from_dense(&[1, -1])`.
    pub fn from_dense(values: &[i64]) -> Self {
        Self::from_integers(values.len(), values.iter().copied().enumerate())
            .expect("dense indices are in range")
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(c, x)| *c < dim && !x.is_zero()));
        SparseVector { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, col: usize) -> Rational {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// `self - factor * other`.
    fn sub_scaled(&self, factor: &Rational, other: &SparseVector) -> SparseVector {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let ci = self.entries.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cj = other.entries.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            if ci < cj {
                out.push(self.entries[i].clone());
                i += 1;
            } else if cj < ci {
                out.push((cj, -(factor * &other.entries[j].1)));
                j += 1;
            } else {
                let x = &self.entries[i].1 - factor * &other.entries[j].1;
                if !x.is_zero() {
                    out.push((ci, x));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVector {
            dim: self.dim,
            entries: out,
        }
    }

    /// Primitive integer multiple of the vector (positive leading entry).
    pub(crate) fn to_primitive_integers(&self) -> Vec<(usize, BigInt)> {
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
        let mut ints: Vec<(usize, BigInt)> = self
            .entries
            .iter()
            .map(|(c, x)| (*c, x.numer() * (&lcm / x.denom())))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
        if !g.is_zero() {
            let g = if ints[0].1.is_negative() { -g } else { g };
            ints.iter_mut().for_each(|(_, x)| *x = &*x / &g);
        }
        ints
    }
}

/// A linear subspace of a finite-dimensional coordinate space, held as a
/// reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    ambient_dim: usize,
    rows: Vec<SparseVector>,
    pivot_cols: Vec<usize>,
}

impl fmt::Debug for GradedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSubspace")
            .field("ambient_dim", &self.ambient_dim)
            .field("rank", &self.rank())
            .field("pivot_cols", &self.pivot_cols)
            .finish()
    }
}

impl GradedSubspace {
    pub fn zero(ambient_dim: usize) -> Self {
        GradedSubspace {
            ambient_dim,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Whether `v` reduces to zero against the rows.
    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.dim(),
            });
        }
        let mut rest = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivot_cols) {
            let c = rest.get(p);
            if !c.is_zero() {
                rest = rest.sub_scaled(&c, row);
            }
        }
        Ok(rest.is_zero())
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn from_engine(ambient_dim: usize, engine: &RankEngine) -> Result<Self> {
        let rows = engine.rational_rows().ok_or(Error::NeedsRational)?;
        Ok(GradedSubspace {
            ambient_dim,
            rows,
            pivot_cols: engine.pivots().to_vec(),
        })
    }
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn subspace_span(vectors: &[SparseVector], ambient_dim: usize) -> Result<GradedSubspace> {
    let mut engine = RankEngine::new(ambient_dim, Arithmetic::Rational);
    for v in vectors {
        if v.dim() != ambient_dim {
            if let Some((c, _)) = v.entries().iter().find(|(c, _)| *c >= ambient_dim) {
                return Err(Error::IndexOutOfRange {
                    index: *c,
                    dim: ambient_dim,
                });
            }
        }
        if v.is_zero() {
            continue;
        }
        let mut dense = vec![BigInt::zero(); ambient_dim];
        for (c, x) in v.to_primitive_integers() {
            dense[c] = x;
        }
        engine.insert_big(dense);
        if engine.rank() == ambient_dim {
            break;
        }
    }
    GradedSubspace::from_engine(ambient_dim, &engine)
}

/// Rank of the span of `vectors` under the chosen arithmetic.
pub fn rank(vectors: &[SparseVector], ambient_dim: usize, arithmetic: Arithmetic) -> Result<usize> {
    let mut engine = RankEngine::new(ambient_dim, arithmetic);
    for v in vectors {
        if let Some((c, _)) = v.entries().iter().find(|(c, _)| *c >= ambient_dim) {
            return Err(Error::IndexOutOfRange {
                index: *c,
                dim: ambient_dim,
            });
        }
        let mut dense = vec![BigInt::zero(); ambient_dim];
        for (c, x) in v.to_primitive_integers() {
            dense[c] = x;
        }
        engine.insert_big(dense);
    }
    Ok(engine.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let s = subspace_span(
            &[
                SparseVector::from_dense(&[1, -1]),
                SparseVector::from_dense(&[-1, 1]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.pivot_cols(), &[0]);
        assert_eq!(s.rows()[0], SparseVector::from_dense(&[1, -1]));
    }

    #[test]
    fn empty_span_has_rank_zero() {
        let s = subspace_span(&[], 5).unwrap();
        assert_eq!(s.rank(), 0);
        assert!(s.contains(&SparseVector::zero(5)).unwrap());
    }

    #[test]
    fn commutators_of_degree_one_words() {
        // Basis {x1x1, x1x2, x2x1, x2x2}; [w1, w2] for all letter pairs.
        let mut gens = Vec::new();
        for a in 0..2usize {
            for b in 0..2usize {
                let mut v = [0i64; 4];
                v[2 * a + b] += 1;
                v[2 * b + a] -= 1;
                gens.push(SparseVector::from_dense(&v));
            }
        }
        let s = subspace_span(&gens, 4).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s
            .contains(&SparseVector::from_dense(&[0, 1, -1, 0]))
            .unwrap());
        assert!(!s
            .contains(&SparseVector::from_dense(&[0, 1, 1, 0]))
            .unwrap());
    }

    #[test]
    fn rational_entries_are_reduced() {
        let v = SparseVector::new(3, [(0, q(1, 2)), (1, q(1, 3)), (2, q(0, 1))]).unwrap();
        let w = SparseVector::new(3, [(1, q(2, 1)), (2, q(5, 7))]).unwrap();
        let s = subspace_span(&[v.clone(), w.clone()], 3).unwrap();
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&v).unwrap());
        assert!(s.contains(&w).unwrap());
        assert_eq!(s.rows()[0].get(0), q(1, 1));
        assert_eq!(s.rows()[0].get(1), q(0, 1));
        assert_eq!(s.rows()[1].get(1), q(1, 1));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert_eq!(
            SparseVector::from_integers(2, [(3, 1)]),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        );
        let v = SparseVector::from_dense(&[1, 2, 3]);
        assert!(matches!(
            subspace_span(&[v], 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn contains_rejects_mismatched_dimension() {
        let s = subspace_span(&[SparseVector::from_dense(&[1, 0])], 2).unwrap();
        assert!(matches!(
            s.contains(&SparseVector::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn wide_entries_widen_to_big_integers() {
        let big = 1i64 << 62;
        let gens = vec![
            SparseVector::from_dense(&[big, 3, 1]),
            SparseVector::from_dense(&[3, big, 1]),
            SparseVector::from_dense(&[1, 1, big]),
            SparseVector::from_dense(&[big + 4, big + 4, big + 2]),
        ];
        let s = subspace_span(&gens, 3).unwrap();
        assert_eq!(s.rank(), 3);
        for g in &gens {
            assert!(s.contains(g).unwrap());
        }
    }
}
