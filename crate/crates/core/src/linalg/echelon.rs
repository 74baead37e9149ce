use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::{Fp, Scalar};
use super::{Arithmetic, SparseVector};

/// Dense reduced row-echelon form, each row scaled canonically for its
/// scalar domain. Rows are kept sorted by pivot column.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<S> {
    dim: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

pub(crate) struct Overflow;

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [S]) -> Result<(), Overflow> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let (a, b) = S::cancel(&v[p], &row[p]);
            let mut large = false;
            for (x, y) in v.iter_mut().zip(row) {
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                *x = S::combine(&a, x, &b, y).ok_or(Overflow)?;
                large |= x.is_large();
            }
            if large {
                S::normalize(v);
            }
        }
        Ok(())
    }

    /// Inserts `v`, returning whether the rank grew. On overflow the
    /// echelon is left unchanged.
    pub fn insert(&mut self, mut v: Vec<S>) -> Result<bool, Overflow> {
        debug_assert_eq!(v.len(), self.dim);
        self.reduce(&mut v)?;
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        S::normalize(&mut v);
        let mut updated = Vec::new();
        for (idx, row) in self.rows.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let (a, b) = S::cancel(&row[p], &v[p]);
            let mut new_row = Vec::with_capacity(self.dim);
            for (x, y) in row.iter().zip(&v) {
                new_row.push(S::combine(&a, x, &b, y).ok_or(Overflow)?);
            }
            S::normalize(&mut new_row);
            updated.push((idx, new_row));
        }
        for (idx, row) in updated {
            self.rows[idx] = row;
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        Ok(true)
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

impl Echelon<i128> {
    fn widen(&self) -> Echelon<BigInt> {
        Echelon {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            pivots: self.pivots.clone(),
        }
    }
}

/// Incremental span over one of the supported arithmetics.
///
/// Exact mode starts with `i128` rows and widens to arbitrary precision
/// the first time an entry would overflow; the span is identical either
/// way.
#[derive(Debug, Clone)]
pub(crate) enum RankEngine {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
    Modular(Echelon<Fp>),
}

impl RankEngine {
    pub fn new(dim: usize, arithmetic: Arithmetic) -> Self {
        match arithmetic {
            Arithmetic::Rational => RankEngine::Small(Echelon::new(dim)),
            Arithmetic::PrimeField => RankEngine::Modular(Echelon::new(dim)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            RankEngine::Small(e) => e.rank(),
            RankEngine::Big(e) => e.rank(),
            RankEngine::Modular(e) => e.rank(),
        }
    }

    pub fn insert_i64(&mut self, v: &[i64]) -> bool {
        match self {
            RankEngine::Small(e) => match e.insert(v.iter().map(|&x| x as i128).collect()) {
                Ok(grew) => grew,
                Err(Overflow) => {
                    let mut big = e.widen();
                    let grew = big
                        .insert(v.iter().map(|&x| BigInt::from(x)).collect())
                        .unwrap_or_else(|_| unreachable!());
                    *self = RankEngine::Big(big);
                    grew
                }
            },
            RankEngine::Big(e) => e
                .insert(v.iter().map(|&x| BigInt::from(x)).collect())
                .unwrap_or_else(|_| unreachable!()),
            RankEngine::Modular(e) => e
                .insert(v.iter().map(|&x| Fp::from_i64(x)).collect())
                .unwrap_or_else(|_| unreachable!()),
        }
    }

    pub fn insert_big(&mut self, v: Vec<BigInt>) -> bool {
        if let RankEngine::Small(e) = self {
            let small: Option<Vec<i128>> = v.iter().map(i128::try_from).map(Result::ok).collect();
            if let Some(small) = small {
                if let Ok(grew) = e.insert(small) {
                    return grew;
                }
            }
            *self = RankEngine::Big(e.widen());
        }
        match self {
            RankEngine::Big(e) => e.insert(v).unwrap_or_else(|_| unreachable!()),
            RankEngine::Modular(e) => e
                .insert(v.iter().map(Fp::from_bigint).collect())
                .unwrap_or_else(|_| unreachable!()),
            RankEngine::Small(_) => unreachable!(),
        }
    }

    pub fn pivots(&self) -> &[usize] {
        match self {
            RankEngine::Small(e) => e.pivots(),
            RankEngine::Big(e) => e.pivots(),
            RankEngine::Modular(e) => e.pivots(),
        }
    }

    /// Rows rescaled to have pivot 1, or `None` in prime-field mode.
    pub fn rational_rows(&self) -> Option<Vec<SparseVector>> {
        fn convert<S: Clone, F: Fn(&S) -> BigInt>(e: &Echelon<S>, to_big: F) -> Vec<SparseVector>
        where
            S: Scalar,
        {
            e.rows()
                .iter()
                .zip(e.pivots())
                .map(|(row, &p)| {
                    let pivot = to_big(&row[p]);
                    let entries = row
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(c, x)| (c, BigRational::new(to_big(x), pivot.clone())))
                        .collect();
                    SparseVector::from_sorted_unchecked(row.len(), entries)
                })
                .collect()
        }
        match self {
            RankEngine::Small(e) => Some(convert(e, |&x| BigInt::from(x))),
            RankEngine::Big(e) => Some(convert(e, |x| x.clone())),
            RankEngine::Modular(_) => None,
        }
    }
}
